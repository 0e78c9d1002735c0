use std::fmt;

use num_complex::Complex64;

use super::{PolyMatrix, Polynomial};
use crate::basis;
use crate::error::{Error, Result};

/// A polynomial self-map of `C^(2^n - 1)`: one component per Horowitz coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMap {
    rank: usize,
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(rank: usize, components: Vec<Polynomial>) -> Result<Self> {
        let expected = (1usize << rank) - 1;
        if components.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: components.len(),
            });
        }
        if let Some(p) = components.iter().find(|p| p.rank() != rank) {
            return Err(Error::RankMismatch {
                left: rank,
                right: p.rank(),
            });
        }
        Ok(PolyMap { rank, components })
    }

    pub fn identity(rank: usize) -> Self {
        let components = (0..(1usize << rank) - 1)
            .map(|v| Polynomial::var(rank, v))
            .collect();
        PolyMap { rank, components }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn is_identity(&self) -> bool {
        self.components
            .iter()
            .enumerate()
            .all(|(v, p)| *p == Polynomial::var(self.rank, v))
    }

    /// `self ∘ inner` as point maps: each component of `self` with its
    /// variables replaced by the components of `inner`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        if self.rank != inner.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: inner.rank,
            });
        }
        let components = self
            .components
            .iter()
            .map(|p| p.substitute_all(&inner.components))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMap {
            rank: self.rank,
            components,
        })
    }

    pub fn evaluate(&self, point: &[Complex64]) -> Result<Vec<Complex64>> {
        self.components.iter().map(|p| p.evaluate(point)).collect()
    }

    /// Entry `(i, j)` is the derivative of component `i` by variable `j`.
    pub fn jacobian(&self) -> PolyMatrix {
        let n = self.components.len();
        PolyMatrix::from_fn(self.rank, n, n, |i, j| self.components[i].derivative(j))
    }
}

impl Polynomial {
    /// Replaces each variable by the matching component of `m`.
    pub fn substitute(&self, m: &PolyMap) -> Result<Polynomial> {
        if self.rank() != m.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: m.rank(),
            });
        }
        self.substitute_all(m.components())
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = basis(self.rank).names();
        for (name, p) in names.iter().zip(&self.components) {
            writeln!(f, "{name} -> {p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_jacobian() {
        let j = PolyMap::identity(3).jacobian();
        assert_eq!(j, PolyMatrix::identity(3, 7));
    }

    #[test]
    fn constant_map_jacobian_is_zero() {
        let m = PolyMap::new(2, vec![Polynomial::from_int(2, 1); 3]).unwrap();
        assert!(m.jacobian().is_zero());
    }

    #[test]
    fn substitute_identity() {
        let p = Polynomial::parse(3, "a*b*c*abc - ab^2 + 4").unwrap();
        assert_eq!(p.substitute(&PolyMap::identity(3)).unwrap(), p);
        let x = Polynomial::var(3, 5);
        assert_eq!(x.substitute(&PolyMap::identity(3)).unwrap(), x);
        assert!(p.substitute(&PolyMap::identity(2)).is_err());
    }

    #[test]
    fn inversion_map_jacobian() {
        // (a, b, ab) -> (a, b, a*b - ab)
        let m = PolyMap::new(
            2,
            vec![
                Polynomial::parse(2, "a").unwrap(),
                Polynomial::parse(2, "b").unwrap(),
                Polynomial::parse(2, "a*b - ab").unwrap(),
            ],
        )
        .unwrap();
        let j = m.jacobian();
        let diag: Vec<String> = (0..3).map(|i| j.get(i, i).to_string()).collect();
        assert_eq!(diag, ["1", "1", "-1"]);
        for i in 0..3 {
            for k in i + 1..3 {
                assert!(j.get(i, k).is_zero());
            }
        }
        assert_eq!(j.det().unwrap(), Polynomial::from_int(2, -1));
        assert!(m.compose(&m).unwrap().is_identity());
    }

    #[test]
    fn component_count_checked() {
        assert!(PolyMap::new(2, vec![Polynomial::zero(2); 2]).is_err());
    }
}
