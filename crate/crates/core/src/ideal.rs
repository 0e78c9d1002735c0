//! Generators of the ideal of relations among the Horowitz coordinates.
//!
//! For eight matrices `M_1..M_4`, `N_1..N_4` in `SL(2, C)`,
//! `det(tr M_i N_j) + det(tr M_i N_j^-1) = 0`. Substituting words gives a
//! polynomial that vanishes on every character. For each coordinate past the
//! `3n - 3` foundation variables one octet is chosen so that the resulting
//! polynomial has that coordinate as a root:
//!
//! * length two, `Y = A_μ A_ν` with `ν > μ > 2`: `M = N = (A_1, A_2, A_μ, A_ν)`,
//!   total degree 8;
//! * length three or more, `Y = A_μ A_ν X`: `M = N = (A_μ, A_ν, A_μ A_ν, X)`,
//!   a quadratic of total degree 4.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{PolyMatrix, Polynomial};
use crate::trace::TraceEngine;
use crate::words::{BasicWord, Letter, Word};
use crate::{basis, check_rank};

pub type Octet = [Word; 4];

/// Which construction produced a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorCase {
    /// Two-letter target; octet `(A_1, A_2, A_μ, A_ν)`.
    Pair = 1,
    /// Target of length at least three; octet `(A_μ, A_ν, A_μ A_ν, X)`.
    Split = 2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub target: BasicWord,
    pub case: GeneratorCase,
    pub octet: Octet,
}

impl GeneratorSpec {
    /// The octet used for the generator of `target` (with `M = N`).
    pub fn for_target(target: BasicWord) -> Result<Self> {
        let n = target.rank();
        let b = basis(n);
        if b.index_of(&target).0 < b.foundation_len() {
            return Err(Error::FoundationVariable(target.name()));
        }
        let gens = target.generators();
        let single = |g: usize| Word::from_raw(n, vec![Letter::pos(g)]);
        if gens.len() == 2 {
            Ok(GeneratorSpec {
                target,
                case: GeneratorCase::Pair,
                octet: [single(0), single(1), single(gens[0]), single(gens[1])],
            })
        } else {
            let tail = Word::from_raw(n, gens[2..].iter().map(|&g| Letter::pos(g)).collect());
            Ok(GeneratorSpec {
                target,
                case: GeneratorCase::Split,
                octet: [
                    single(gens[0]),
                    single(gens[1]),
                    Word::from_raw(n, vec![Letter::pos(gens[0]), Letter::pos(gens[1])]),
                    tail,
                ],
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGenerator {
    pub spec: GeneratorSpec,
    pub poly: Polynomial,
}

impl IdealGenerator {
    /// Degree of the generator in its own target variable.
    pub fn target_degree(&self) -> u32 {
        let b = basis(self.spec.target.rank());
        self.poly.degree_in(b.index_of(&self.spec.target).0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGenerators {
    pub rank: usize,
    pub generators: Vec<IdealGenerator>,
}

#[derive(Serialize)]
struct GeneratorJson {
    target: String,
    case: u8,
    octet: Vec<String>,
    target_degree: u32,
    poly: String,
}

#[derive(Serialize)]
struct IdealJson {
    n: usize,
    variables: Vec<String>,
    generators: Vec<GeneratorJson>,
}

impl IdealGenerators {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn polynomials(&self) -> impl Iterator<Item = &Polynomial> {
        self.generators.iter().map(|g| &g.poly)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = IdealJson {
            n: self.rank,
            variables: basis(self.rank).names(),
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorJson {
                    target: g.spec.target.name(),
                    case: g.spec.case as u8,
                    octet: g.spec.octet.iter().map(Word::to_string).collect(),
                    target_degree: g.target_degree(),
                    poly: g.poly.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("ideal export serializes")
    }
}

/// The two symbolic 4x4 matrices `tr(M_i N_j)` and `tr(M_i N_j^-1)`.
pub fn magnus_matrices(
    m: &Octet,
    n: &Octet,
    engine: &mut TraceEngine,
) -> Result<(PolyMatrix, PolyMatrix)> {
    let rank = engine.rank();
    let mut direct = Vec::with_capacity(4);
    let mut inverse = Vec::with_capacity(4);
    for mi in m {
        let mut row_d = Vec::with_capacity(4);
        let mut row_i = Vec::with_capacity(4);
        for nj in n {
            row_d.push(engine.trace(&mi.concat(nj))?);
            row_i.push(engine.trace(&mi.concat(&nj.inverse()))?);
        }
        direct.push(row_d);
        inverse.push(row_i);
    }
    Ok((
        PolyMatrix::from_rows(rank, direct)?,
        PolyMatrix::from_rows(rank, inverse)?,
    ))
}

/// `det(tr M_i N_j) + det(tr M_i N_j^-1)`, a polynomial vanishing on all characters.
pub fn magnus_poly(m: &Octet, n: &Octet, engine: &mut TraceEngine) -> Result<Polynomial> {
    let (d, i) = magnus_matrices(m, n, engine)?;
    Ok(&d.det()? + &i.det()?)
}

/// `tr[W_1, W_2] - 2 = w_1^2 + w_2^2 + w_12^2 - w_1 w_2 w_12 - 4` in the traces
/// `w_1`, `w_2`, `w_12` of `W_1`, `W_2`, `W_1 W_2`. It divides the Magnus
/// polynomial of any octet of the form `(W_1, W_2, W_1 W_2, W_3)`.
pub fn commutator_factor(w1: &Word, w2: &Word, engine: &mut TraceEngine) -> Result<Polynomial> {
    let x = engine.trace(w1)?;
    let y = engine.trace(w2)?;
    let xy = engine.trace(&w1.concat(w2))?;
    let squares = &(&(&x * &x) + &(&y * &y)) + &(&xy * &xy);
    Ok(&(&squares - &(&(&x * &y) * &xy)) - &Polynomial::from_int(engine.rank(), 4))
}

/// The relation obtained from a symmetric octet, as a primitive integer
/// polynomial signed so that the coefficient of the highest power of
/// `target` has a positive leading term. For [`GeneratorCase::Split`] the
/// commutator factor of the first two blocks is divided out, leaving a
/// quadratic in `target`.
pub fn relation_for_octet(
    target: &BasicWord,
    case: GeneratorCase,
    octet: &Octet,
    engine: &mut TraceEngine,
) -> Result<Polynomial> {
    let mut p = magnus_poly(octet, octet, engine)?;
    if case == GeneratorCase::Split {
        let k = commutator_factor(&octet[0], &octet[1], engine)?;
        p = p.div_exact(&k).ok_or_else(|| {
            Error::Unsupported(format!("octet for {} is not of split form", target.name()))
        })?;
    }
    let p = p.primitive();
    let v = basis(target.rank()).index_of(target).0;
    let lead = p.coefficient_in(v, p.degree_in(v));
    Ok(if lead.normalize_sign() == lead { p } else { -p })
}

/// The generator `p_y` for a non-foundation basic word `y`.
pub fn generator_for(target: BasicWord, engine: &mut TraceEngine) -> Result<IdealGenerator> {
    if target.rank() != engine.rank() {
        return Err(Error::RankMismatch {
            left: engine.rank(),
            right: target.rank(),
        });
    }
    let spec = GeneratorSpec::for_target(target)?;
    let poly = relation_for_octet(&target, spec.case, &spec.octet, engine)?;
    Ok(IdealGenerator { spec, poly })
}

/// All `2^n - 1 - (3n - 3)` generators in coordinate order. Each target is
/// built independently on its own trace cache.
pub fn ideal_generators(n: usize) -> Result<IdealGenerators> {
    check_rank(n)?;
    let b = basis(n);
    let generators = b.words()[b.foundation_len()..]
        .par_iter()
        .map(|&y| {
            let mut engine = TraceEngine::new(n)?;
            generator_for(y, &mut engine)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealGenerators {
        rank: n,
        generators,
    })
}

/// The decompositions of `ABCD` into blocks `W1·W2·W3` at rank 4, as
/// symmetric octets `(W1, W2, W1W2, W3)`. The first is the default one.
pub fn abcd_decompositions() -> Vec<(&'static str, Octet)> {
    let w = |s: &str| Word::parse(4, s).expect("valid word");
    let octet = |a: &str, b: &str, c: &str| {
        let (a, b, c) = (w(a), w(b), w(c));
        let ab = a.concat(&b);
        [a, b, ab, c]
    };
    vec![
        ("A.B.CD", octet("A", "B", "CD")),
        ("A.BC.D", octet("A", "BC", "D")),
        ("AB.C.D", octet("AB", "C", "D")),
        ("DA.B.C", octet("DA", "B", "C")),
    ]
}

/// Values of the two open conditions on the foundation coordinates under
/// which a representation can be completed from them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MagnusConditions {
    /// `tr[A_1, A_2] = x1^2 + x2^2 + x_{n+1}^2 - x1 x2 x_{n+1} - 2`.
    pub commutator: Complex64,
    /// `P^2 - 4Q` for the quadratic of `tr(A_1 A_2 A_3)`.
    pub discriminant: Complex64,
    pub commutator_ok: bool,
    pub discriminant_ok: bool,
}

pub const CONDITION_TOLERANCE: f64 = 1e-9;

/// Evaluates the two conditions from the `3n - 3` foundation coordinates.
pub fn magnus_conditions(foundation: &[Complex64]) -> Result<MagnusConditions> {
    let len = foundation.len();
    if len < 6 || !len.is_multiple_of(3) {
        return Err(Error::DimensionMismatch {
            expected: 3 * (len / 3).max(2),
            got: len,
        });
    }
    let n = len / 3 + 1;
    let (a, b, c) = (foundation[0], foundation[1], foundation[2]);
    let (ab, ac, bc) = (foundation[n], foundation[n + 1], foundation[2 * n - 1]);
    let commutator = a * a + b * b + ab * ab - a * b * ab - 2.0;
    let p = a * bc + b * ac + c * ab - a * b * c;
    let q = a * a + b * b + c * c + ab * ab + ac * ac + bc * bc + ab * ac * bc
        - a * b * ab
        - a * c * ac
        - b * c * bc
        - 4.0;
    let discriminant = p * p - 4.0 * q;
    Ok(MagnusConditions {
        commutator,
        discriminant,
        commutator_ok: (commutator - 2.0).norm() > CONDITION_TOLERANCE,
        discriminant_ok: discriminant.norm() > CONDITION_TOLERANCE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_ideal_is_empty() {
        assert!(ideal_generators(2).unwrap().is_empty());
    }

    #[test]
    fn foundation_targets_rejected() {
        let mut e = TraceEngine::new(4).unwrap();
        let bc = BasicWord::from_mask(4, 0b0110).unwrap();
        assert_eq!(
            generator_for(bc, &mut e),
            Err(Error::FoundationVariable("bc".into()))
        );
    }

    #[test]
    fn identity_octet_gives_zero() {
        let mut e = TraceEngine::new(3).unwrap();
        let id = Word::identity(3);
        let oct = [id.clone(), id.clone(), id.clone(), id];
        assert!(magnus_poly(&oct, &oct, &mut e).unwrap().is_zero());
    }

    #[test]
    fn fricke_relation_from_magnus() {
        let mut e = TraceEngine::new(3).unwrap();
        let w = |s| Word::parse(3, s).unwrap();
        let oct = [w("A"), w("B"), w("AB"), w("C")];
        let abc = BasicWord::from_mask(3, 0b111).unwrap();
        let p = relation_for_octet(&abc, GeneratorCase::Split, &oct, &mut e).unwrap();
        let fricke = Polynomial::parse(
            3,
            "abc^2 - a*bc*abc - b*ac*abc - c*ab*abc + a*b*c*abc + a^2 + b^2 + c^2 + ab^2 + ac^2 + bc^2 \
             + ab*ac*bc - a*b*ab - a*c*ac - b*c*bc - 4",
        )
        .unwrap();
        assert_eq!(p, fricke);
    }

    #[test]
    fn case_selection() {
        let spec =
            |mask| GeneratorSpec::for_target(BasicWord::from_mask(5, mask).unwrap()).unwrap();
        let cd = spec(0b01100);
        assert_eq!(cd.case, GeneratorCase::Pair);
        assert_eq!(
            cd.octet.iter().map(Word::to_string).collect::<Vec<_>>(),
            ["A", "B", "C", "D"]
        );
        let bde = spec(0b11010);
        assert_eq!(bde.case, GeneratorCase::Split);
        assert_eq!(
            bde.octet.iter().map(Word::to_string).collect::<Vec<_>>(),
            ["B", "D", "BD", "E"]
        );
    }

    #[test]
    fn commuting_generators_fail_first_condition() {
        // A1 = A2 = identity: every trace is 2
        let pt = vec![Complex64::new(2.0, 0.0); 6];
        let c = magnus_conditions(&pt).unwrap();
        assert!((c.commutator - 2.0).norm() < 1e-12);
        assert!(!c.commutator_ok);
        assert!(magnus_conditions(&pt[..5]).is_err());
    }
}
