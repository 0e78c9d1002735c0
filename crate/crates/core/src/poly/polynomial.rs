use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Monomial;
use crate::error::{Error, Result};

/// Sparse polynomial with exact rational coefficients in the `2^n - 1`
/// Horowitz variables of rank `n`.
///
/// Terms are kept in display order (see [`Monomial`]); zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    rank: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(rank: usize) -> Self {
        Polynomial {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Polynomial::constant(rank, BigRational::one())
    }

    pub fn constant(rank: usize, c: BigRational) -> Self {
        let mut p = Polynomial::zero(rank);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn from_int(rank: usize, c: i64) -> Self {
        Polynomial::constant(rank, BigRational::from_integer(BigInt::from(c)))
    }

    /// The coordinate `x_{v+1}`.
    pub fn var(rank: usize, v: usize) -> Self {
        Polynomial::term(rank, Monomial::var(v), BigRational::one())
    }

    pub fn term(rank: usize, m: Monomial, c: BigRational) -> Self {
        let mut p = Polynomial::zero(rank);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(
        rank: usize,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Self {
        let mut p = Polynomial::zero(rank);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of variables, `2^rank - 1`.
    pub fn nvars(&self) -> usize {
        (1usize << self.rank) - 1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in display order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_constant() {
            Some(self.coefficient(&Monomial::one()))
        } else {
            None
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Variables that occur in some term.
    pub fn variables(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v))
            .collect()
    }

    /// Coefficient of `x_v^d`, as a polynomial in the remaining variables.
    pub fn coefficient_in(&self, v: usize, d: u32) -> Polynomial {
        let mut out = Polynomial::zero(self.rank);
        for (m, c) in &self.terms {
            let (rest, e) = m.without(v);
            if e == d {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_rank(&self, other: &Polynomial) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            })
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_rank(other)?;
        let mut acc: HashMap<Monomial, BigRational> =
            HashMap::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(slot) => *slot += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Polynomial {
            rank: self.rank,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, k: &BigRational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero(self.rank);
        }
        Polynomial {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Polynomial {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.rank);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to `x_v`.
    pub fn derivative(&self, v: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.rank);
        for (m, c) in &self.terms {
            if let Some((m2, e)) = m.differentiate(v) {
                out.add_term(m2, c * BigRational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut r = self.clone();
        let mut q = Polynomial::zero(self.rank);
        while let Some((rm, rc)) = r.leading_term() {
            let m = rm.div(&dm)?;
            let c = rc / &dc;
            for (tm, tc) in &d.terms {
                r.add_term(tm.mul(&m), -(tc * &c));
            }
            q.add_term(m, c);
        }
        Some(q)
    }

    /// Evaluates at a complex point with one coordinate per variable.
    pub fn evaluate(&self, point: &[Complex64]) -> Result<Complex64> {
        self.evaluate_scaled(point).map(|(v, _)| v)
    }

    /// Value together with the largest term magnitude at the point, the scale
    /// against which rounding error is measured.
    pub fn evaluate_scaled(&self, point: &[Complex64]) -> Result<(Complex64, f64)> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        let mut sum = Complex64::zero();
        let mut scale = 0f64;
        for (m, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (v, e) in m.factors() {
                t *= point[v].powu(e);
            }
            scale = scale.max(t.norm());
            sum += t;
        }
        Ok((sum, scale))
    }

    /// Replaces each variable `x_i` by `images[i]` and expands.
    pub fn substitute_all(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        let rank = images.first().map_or(self.rank, |p| p.rank);
        if let Some(p) = images.iter().find(|p| p.rank != rank) {
            return Err(Error::RankMismatch {
                left: rank,
                right: p.rank,
            });
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(rank);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(rank, c.clone());
            for (v, e) in m.factors() {
                let pw = powers.entry((v, e)).or_insert_with(|| images[v].pow(e));
                t = &t * pw;
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Multiplies by -1 when needed so the leading term is positive.
    /// Divides an integral polynomial by the gcd of its coefficients; other
    /// polynomials are returned unchanged.
    pub fn primitive(&self) -> Polynomial {
        if !self.is_integral() || self.is_zero() {
            return self.clone();
        }
        let g = self
            .terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c.numer()));
        let g = BigRational::from_integer(g);
        Polynomial {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c / &g))
                .collect(),
        }
    }

    pub fn normalize_sign(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on rank mismatch; use [`Polynomial::try_add`] to get an error.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial rank mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial rank mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial rank mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}
