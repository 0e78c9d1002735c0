//! Floating-point checks of the symbolic results on sampled representations
//! `F_n → SL(2, C)`.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, Matrix4};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::autos::{induced_map, NielsenWord};
use crate::error::{Error, Result};
use crate::ideal::{
    abcd_decompositions, ideal_generators, magnus_conditions, relation_for_octet, GeneratorCase,
};
use crate::poly::Polynomial;
use crate::trace::TraceEngine;
use crate::words::{BasicWord, Letter, Nielsen, Word};
use crate::{basis, check_rank, MAX_IDEAL_RANK};

pub const TRACE_TOLERANCE: f64 = 1e-9;
pub const VANISHING_TOLERANCE: f64 = 1e-8;
pub const RANK_CUTOFF: f64 = 1e-8;
const MIN_PIVOT: f64 = 1e-6;
const MAX_RETRIES: usize = 1000;

/// A 2x2 complex matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2 {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl Matrix2 {
    pub const DET_TOLERANCE: f64 = 1e-12;

    pub fn identity() -> Self {
        let (o, z) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        Matrix2 {
            a: o,
            b: z,
            c: z,
            d: o,
        }
    }

    /// Fails unless the determinant is 1 within [`Matrix2::DET_TOLERANCE`].
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let m = Matrix2 { a, b, c, d };
        let det = m.det();
        if (det - 1.0).norm() > Self::DET_TOLERANCE {
            return Err(Error::Unsupported(format!(
                "matrix determinant {det} is not 1"
            )));
        }
        Ok(m)
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Inverse of a unimodular matrix (the adjugate).
    pub fn inverse(&self) -> Self {
        Matrix2 {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        Matrix2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    /// A matrix with `a, b, c` uniform in the unit square of each complex
    /// component and `d = (1 + bc) / a`.
    pub fn sample<R: Rng>(rng: &mut R) -> Result<Matrix2> {
        let draw =
            |rng: &mut R| Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
        for _ in 0..MAX_RETRIES {
            let a = draw(rng);
            let b = draw(rng);
            let c = draw(rng);
            if a.norm() < MIN_PIVOT {
                continue;
            }
            return Ok(Matrix2 {
                a,
                b,
                c,
                d: (1.0 + b * c) / a,
            });
        }
        Err(Error::SamplingFailed(MAX_RETRIES))
    }
}

/// Images of the generators under a representation.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    matrices: Vec<Matrix2>,
}

impl Representation {
    pub fn new(matrices: Vec<Matrix2>) -> Result<Self> {
        check_rank(matrices.len())?;
        for m in &matrices {
            let det = m.det();
            if (det - 1.0).norm() > Matrix2::DET_TOLERANCE {
                return Err(Error::Unsupported(format!(
                    "matrix determinant {det} is not 1"
                )));
            }
        }
        Ok(Representation { matrices })
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Representation::new(vec![Matrix2::identity(); n])
    }

    pub fn rank(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[Matrix2] {
        &self.matrices
    }

    pub fn letter(&self, l: Letter) -> Matrix2 {
        let m = self.matrices[l.index()];
        if l.inv {
            m.inverse()
        } else {
            m
        }
    }

    pub fn word(&self, w: &Word) -> Matrix2 {
        w.letters()
            .iter()
            .fold(Matrix2::identity(), |acc, &l| acc.mul(&self.letter(l)))
    }

    pub fn trace(&self, w: &Word) -> Complex64 {
        self.word(w).trace()
    }

    /// `g ρ g^-1`.
    pub fn conjugate(&self, g: &Matrix2) -> Representation {
        let gi = g.inverse();
        Representation {
            matrices: self.matrices.iter().map(|m| g.mul(m).mul(&gi)).collect(),
        }
    }

    /// `ρ ∘ σ`: generator `A_j` goes to `ρ(σ(A_j))`.
    pub fn precompose(&self, sigma: &NielsenWord) -> Representation {
        let n = self.rank();
        Representation {
            matrices: (0..n)
                .map(|j| {
                    self.word(&sigma.apply(&Word::generator(n, j).expect("generator in range")))
                })
                .collect(),
        }
    }

    /// Appends the given matrices as further generators.
    pub fn extend(&self, more: &[Matrix2]) -> Result<Representation> {
        Representation::new(self.matrices.iter().chain(more).copied().collect())
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Deterministic sample from stream `stream` of `seed`.
pub fn sample_rep_stream(n: usize, seed: u64, stream: u64) -> Result<Representation> {
    check_rank(n)?;
    let mut rng = rng_for(seed, stream);
    Representation::new(
        (0..n)
            .map(|_| Matrix2::sample(&mut rng))
            .collect::<Result<_>>()?,
    )
}

pub fn sample_rep(n: usize, seed: u64) -> Result<Representation> {
    sample_rep_stream(n, seed, 0)
}

/// `A_i = [[√i, √(i+1)], [2/√(i+1), 3/√i]]` for `i = 1, 2, 3`.
pub fn paper_witness_rep() -> Representation {
    let matrices = (1..=3)
        .map(|i| {
            let (s, t) = ((i as f64).sqrt(), (i as f64 + 1.0).sqrt());
            Matrix2 {
                a: Complex64::new(s, 0.0),
                b: Complex64::new(t, 0.0),
                c: Complex64::new(2.0 / t, 0.0),
                d: Complex64::new(3.0 / s, 0.0),
            }
        })
        .collect();
    Representation::new(matrices).expect("witness matrices are unimodular")
}

/// The witness matrices followed by `n - 3` sampled ones.
pub fn witness_extension(n: usize, seed: u64) -> Result<Representation> {
    check_rank(n)?;
    if n < 3 {
        return Err(Error::Unsupported(format!(
            "the witness representation has rank 3, cannot restrict to {n}"
        )));
    }
    let mut rng = rng_for(seed, u64::MAX);
    let extra = (3..n)
        .map(|_| Matrix2::sample(&mut rng))
        .collect::<Result<Vec<_>>>()?;
    paper_witness_rep().extend(&extra)
}

/// Traces of all basic words, in coordinate order.
pub fn character_point(rho: &Representation) -> Vec<Complex64> {
    basis(rho.rank())
        .words()
        .iter()
        .map(|w| rho.trace(&w.word()))
        .collect()
}

/// `|p(x)|` relative to the largest term of `p` at `x` (or 1 if larger).
pub fn relative_residual(p: &Polynomial, point: &[Complex64]) -> Result<f64> {
    let (v, scale) = p.evaluate_scaled(point)?;
    Ok(v.norm() / scale.max(1.0))
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Formats with 12 significant digits.
pub fn fmt12(x: f64) -> String {
    let r = round12(x);
    if r == 0.0 {
        return "0".into();
    }
    if (1e-4..1e12).contains(&r.abs()) {
        let digits = (11 - r.abs().log10().floor() as i64).max(0) as usize;
        let s = format!("{r:.digits$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{r:.11e}")
    }
}

pub fn fmt12_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt12(z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", fmt12(z.re), fmt12(-z.im))
    } else {
        format!("{}+{}i", fmt12(z.re), fmt12(z.im))
    }
}

/// Number of singular values above `cutoff * σ_max`.
pub fn numerical_rank(rows: &[Vec<Complex64>], cutoff: f64) -> usize {
    let singular = singular_values(rows);
    let top = singular.first().copied().unwrap_or(0.0);
    if top == 0.0 {
        return 0;
    }
    singular.iter().filter(|&&s| s > cutoff * top).count()
}

/// Singular values in decreasing order.
pub fn singular_values(rows: &[Vec<Complex64>]) -> Vec<f64> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    if r == 0 || c == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_fn(r, c, |i, j| rows[i][j]);
    let mut s: Vec<f64> = m.singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Numeric Jacobian of `polys` at `point`; row `i` is the gradient of `polys[i]`.
pub fn numeric_jacobian(polys: &[Polynomial], point: &[Complex64]) -> Result<Vec<Vec<Complex64>>> {
    polys
        .iter()
        .map(|p| {
            (0..point.len())
                .map(|v| p.derivative(v).evaluate(point))
                .collect()
        })
        .collect()
}

/// A uniformly random reduced word of length at most `max_len`.
pub fn random_word<R: Rng>(n: usize, max_len: usize, rng: &mut R) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| Letter::new(rng.gen_range(0..n), rng.gen_bool(0.5)));
    Word::from_letters(n, letters).expect("letters within rank")
}

/// Largest relative gap between `trace_poly(w)` evaluated at the character
/// point and the numeric trace of `ρ(w)`, over all words and representations.
pub fn trace_oracle(words: &[Word], reps: &[Representation]) -> Result<f64> {
    let Some(first) = words.first() else {
        return Ok(0.0);
    };
    let mut engine = TraceEngine::new(first.rank())?;
    let polys = words
        .iter()
        .map(|w| engine.trace(w))
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<_> = reps.iter().map(character_point).collect();
    let mut worst = 0f64;
    for (w, p) in words.iter().zip(&polys) {
        for (rho, pt) in reps.iter().zip(&points) {
            let (v, scale) = p.evaluate_scaled(pt)?;
            let exact = rho.trace(w);
            worst = worst.max((v - exact).norm() / scale.max(exact.norm()).max(1.0));
        }
    }
    Ok(worst)
}

/// Relative residual of the Magnus relation for an octet of matrices.
pub fn magnus_residual(m: &[Matrix2; 4], n: &[Matrix2; 4]) -> f64 {
    let direct = Matrix4::from_fn(|i, j| m[i].mul(&n[j]).trace());
    let inverse = Matrix4::from_fn(|i, j| m[i].mul(&n[j].inverse()).trace());
    let (d1, d2) = (direct.determinant(), inverse.determinant());
    (d1 + d2).norm() / d1.norm().max(d2.norm()).max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyKind {
    Ideal,
    Equivariance,
    Magnus,
    JacobianRank,
}

impl VerifyKind {
    pub const ALL: [VerifyKind; 4] = [
        VerifyKind::Ideal,
        VerifyKind::Equivariance,
        VerifyKind::Magnus,
        VerifyKind::JacobianRank,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerifyKind::Ideal => "ideal",
            VerifyKind::Equivariance => "equivariance",
            VerifyKind::Magnus => "magnus",
            VerifyKind::JacobianRank => "jacobian-rank",
        }
    }

    pub fn default_tolerance(self) -> f64 {
        match self {
            VerifyKind::Equivariance => TRACE_TOLERANCE,
            VerifyKind::Ideal | VerifyKind::Magnus => VANISHING_TOLERANCE,
            VerifyKind::JacobianRank => RANK_CUTOFF,
        }
    }
}

impl FromStr for VerifyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VerifyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

impl fmt::Display for VerifyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub kind: String,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub max_residual: f64,
    pub pass: bool,
    pub details: Vec<serde_json::Value>,
}

/// Runs one family of numeric checks. Sample `i` draws from stream `i` of
/// `seed`, so the report does not depend on the number of worker threads.
pub fn verify(
    kind: VerifyKind,
    n: usize,
    samples: usize,
    tolerance: Option<f64>,
    seed: u64,
) -> Result<VerificationReport> {
    check_rank(n)?;
    if samples == 0 {
        return Err(Error::Unsupported("at least one sample is required".into()));
    }
    let tolerance = tolerance.unwrap_or_else(|| kind.default_tolerance());
    let (max_residual, pass, details) = match kind {
        VerifyKind::Ideal => verify_ideal(n, samples, seed)?,
        VerifyKind::Equivariance => verify_equivariance(n, samples, seed)?,
        VerifyKind::Magnus => verify_magnus(samples, seed)?,
        VerifyKind::JacobianRank => verify_rank(n, samples, tolerance, seed)?,
    };
    let pass = match kind {
        VerifyKind::JacobianRank => pass,
        _ => pass && max_residual <= tolerance,
    };
    Ok(VerificationReport {
        kind: kind.name().to_string(),
        n,
        samples,
        seed,
        tolerance,
        max_residual: round12(max_residual),
        pass,
        details,
    })
}

type Outcome = (f64, bool, Vec<serde_json::Value>);

fn sample_points(n: usize, samples: usize, seed: u64) -> Result<Vec<Vec<Complex64>>> {
    (0..samples)
        .into_par_iter()
        .map(|i| sample_rep_stream(n, seed, i as u64).map(|r| character_point(&r)))
        .collect()
}

fn verify_ideal(n: usize, samples: usize, seed: u64) -> Result<Outcome> {
    if n > MAX_IDEAL_RANK {
        return Err(Error::Unsupported(format!(
            "ideal generators are built up to rank {MAX_IDEAL_RANK}"
        )));
    }
    let ideal = ideal_generators(n)?;
    let points = sample_points(n, samples, seed)?;
    let mut details = Vec::new();
    let mut worst = 0f64;
    for g in &ideal.generators {
        let r = points
            .par_iter()
            .map(|pt| relative_residual(&g.poly, pt))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(0f64, f64::max);
        worst = worst.max(r);
        details.push(json!({ "target": g.spec.target.name(), "max_residual": round12(r) }));
    }
    Ok((worst, true, details))
}

fn verify_equivariance(n: usize, samples: usize, seed: u64) -> Result<Outcome> {
    let reps = (0..samples)
        .into_par_iter()
        .map(|i| sample_rep_stream(n, seed, i as u64))
        .collect::<Result<Vec<_>>>()?;
    let mut details = Vec::new();
    let mut worst = 0f64;
    for g in Nielsen::ALL {
        let sigma = NielsenWord::single(g);
        let map = induced_map(&sigma, n)?;
        let r = reps
            .par_iter()
            .map(|rho| -> Result<f64> {
                let image = map.evaluate(&character_point(rho))?;
                let expected = character_point(&rho.precompose(&sigma));
                Ok(image
                    .iter()
                    .zip(&expected)
                    .map(|(x, y)| (x - y).norm() / y.norm().max(1.0))
                    .fold(0f64, f64::max))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(0f64, f64::max);
        worst = worst.max(r);
        details.push(json!({ "generator": g.symbol(), "max_residual": round12(r) }));
    }
    Ok((worst, true, details))
}

fn verify_magnus(samples: usize, seed: u64) -> Result<Outcome> {
    let worst = (0..samples)
        .into_par_iter()
        .map(|i| -> Result<f64> {
            let mut rng = rng_for(seed, i as u64);
            let mut draw = || -> Result<[Matrix2; 4]> {
                Ok([
                    Matrix2::sample(&mut rng)?,
                    Matrix2::sample(&mut rng)?,
                    Matrix2::sample(&mut rng)?,
                    Matrix2::sample(&mut rng)?,
                ])
            };
            let m = draw()?;
            let n = draw()?;
            Ok(magnus_residual(&m, &n))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0f64, f64::max);
    Ok((
        worst,
        true,
        vec![json!({ "octets": samples, "max_residual": round12(worst) })],
    ))
}

/// Rank of the ideal generators' Jacobian at a point, along with the
/// expected rank `2^n - 1 - (3n - 3)`.
pub fn generator_rank(polys: &[Polynomial], point: &[Complex64], cutoff: f64) -> Result<usize> {
    Ok(numerical_rank(&numeric_jacobian(polys, point)?, cutoff))
}

/// The rank-four generators with the last one rebuilt from each of the
/// decompositions of `abcd`.
pub fn abcd_variants() -> Result<Vec<(&'static str, Vec<Polynomial>)>> {
    let ideal = ideal_generators(4)?;
    let base: Vec<Polynomial> = ideal.polynomials().cloned().collect();
    let abcd = BasicWord::from_mask(4, 0b1111)?;
    let mut engine = TraceEngine::new(4)?;
    abcd_decompositions()
        .into_iter()
        .map(|(label, octet)| {
            let p = relation_for_octet(&abcd, GeneratorCase::Split, &octet, &mut engine)?;
            let mut polys = base.clone();
            *polys.last_mut().expect("rank four has generators") = p;
            Ok((label, polys))
        })
        .collect()
}

fn verify_rank(n: usize, samples: usize, cutoff: f64, seed: u64) -> Result<Outcome> {
    if !(3..=MAX_IDEAL_RANK).contains(&n) {
        return Err(Error::Unsupported(format!(
            "rank checks run for n = 3..={MAX_IDEAL_RANK}"
        )));
    }
    let ideal = ideal_generators(n)?;
    let polys: Vec<Polynomial> = ideal.polynomials().cloned().collect();
    let expected = polys.len();
    let witness = character_point(&witness_extension(n, seed)?);
    let mut details = Vec::new();
    let mut deficit = 0usize;
    let witness_rank = generator_rank(&polys, &witness, cutoff)?;
    deficit = deficit.max(expected - witness_rank);
    details.push(json!({
        "point": "witness",
        "rank": witness_rank,
        "dimension": basis(n).len() - witness_rank,
    }));
    if n == 4 {
        for (label, variant) in abcd_variants()? {
            let r = generator_rank(&variant, &witness, cutoff)?;
            deficit = deficit.max(expected - r);
            details.push(json!({ "point": "witness", "decomposition": label, "rank": r }));
        }
    }
    let points = sample_points(n, samples, seed)?;
    let ranks = points
        .par_iter()
        .map(|pt| generator_rank(&polys, pt, cutoff))
        .collect::<Result<Vec<_>>>()?;
    let min_rank = ranks.iter().copied().min().unwrap_or(expected);
    deficit = deficit.max(expected - min_rank);
    details.push(json!({ "point": "sampled", "count": samples, "min_rank": min_rank, "expected_rank": expected }));
    Ok((deficit as f64, deficit == 0, details))
}

/// The figures behind the completion conditions at the witness point.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub commutator: f64,
    pub discriminant: f64,
    pub commutator_ok: bool,
    pub discriminant_ok: bool,
    pub rank: usize,
    pub dimension: usize,
    pub decomposition_ranks: Vec<(String, usize)>,
}

/// Conditions at the witness matrices, and the rank-four Jacobian rank at
/// the witness extended by a fourth matrix drawn from `seed`.
pub fn witness(seed: u64) -> Result<WitnessReport> {
    let rho = paper_witness_rep();
    let pt = character_point(&rho);
    let cond = magnus_conditions(&pt[..basis(3).foundation_len()])?;
    let point4 = character_point(&witness_extension(4, seed)?);
    let polys: Vec<Polynomial> = ideal_generators(4)?.polynomials().cloned().collect();
    let rank = generator_rank(&polys, &point4, RANK_CUTOFF)?;
    let decomposition_ranks = abcd_variants()?
        .into_iter()
        .map(|(label, v)| Ok((label.to_string(), generator_rank(&v, &point4, RANK_CUTOFF)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(WitnessReport {
        commutator: round12(cond.commutator.re),
        discriminant: round12(cond.discriminant.re),
        commutator_ok: cond.commutator_ok,
        discriminant_ok: cond.discriminant_ok,
        rank,
        dimension: basis(4).len() - rank,
        decomposition_ranks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn sampling_is_deterministic_and_unimodular() {
        let r1 = sample_rep(3, 11).unwrap();
        assert_eq!(r1, sample_rep(3, 11).unwrap());
        assert_ne!(r1, sample_rep(3, 12).unwrap());
        for m in r1.matrices() {
            assert!((m.det() - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn witness_matrices() {
        let rho = paper_witness_rep();
        for m in rho.matrices() {
            assert!((m.det() - 1.0).norm() < 1e-12);
        }
        let comm = Word::parse(3, "ABA^-1B^-1").unwrap();
        assert!((rho.trace(&comm).re - -0.5598).abs() < 5e-5);
    }

    #[test]
    fn character_point_examples() {
        assert!(character_point(&Representation::trivial(3).unwrap())
            .iter()
            .all(|&x| x == c(2.0)));
        let t = 1.7;
        let a = Matrix2 {
            a: c(t),
            b: c(0.0),
            c: c(0.0),
            d: c(1.0 / t),
        };
        let rho = Representation::new(vec![a, Matrix2::identity()]).unwrap();
        let pt = character_point(&rho);
        let s = t + 1.0 / t;
        assert!(
            (pt[0] - s).norm() < 1e-15
                && (pt[1] - 2.0).norm() < 1e-15
                && (pt[2] - s).norm() < 1e-15
        );
    }

    #[test]
    fn conjugation_invariance() {
        let rho = sample_rep(3, 5).unwrap();
        let g = sample_rep(2, 6).unwrap().matrices()[0];
        let (p, q) = (character_point(&rho), character_point(&rho.conjugate(&g)));
        for (x, y) in p.iter().zip(&q) {
            assert!((x - y).norm() <= 1e-9 * x.norm().max(1.0));
        }
    }

    #[test]
    fn rank_of_known_matrices() {
        let rows = vec![
            vec![c(1.0), c(0.0), c(0.0)],
            vec![c(0.0), c(2.0), c(0.0)],
            vec![c(1.0), c(2.0), c(0.0)],
        ];
        assert_eq!(numerical_rank(&rows, RANK_CUTOFF), 2);
        assert_eq!(numerical_rank(&[], RANK_CUTOFF), 0);
    }

    #[test]
    fn formatting_twelve_digits() {
        assert_eq!(fmt12(-0.559830641412345), "-0.559830641412");
        assert_eq!(fmt12(2.0), "2");
        assert_eq!(fmt12(0.0), "0");
        assert_eq!(fmt12(1.5e-20), "1.50000000000e-20");
        assert_eq!(fmt12_complex(Complex64::new(1.0, -0.5)), "1-0.5i");
    }

    #[test]
    fn kinds_parse() {
        assert_eq!(
            "jacobian-rank".parse::<VerifyKind>().unwrap(),
            VerifyKind::JacobianRank
        );
        assert_eq!(
            "volume".parse::<VerifyKind>(),
            Err(Error::UnknownKind("volume".into()))
        );
    }

    #[test]
    fn magnus_on_random_octets() {
        let r = verify(VerifyKind::Magnus, 2, 20, None, 3).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn fricke_vanishes_on_samples() {
        let r = verify(VerifyKind::Ideal, 3, 20, None, 1).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn trace_polynomials_match_matrices() {
        let mut rng = rng_for(9, 0);
        let words: Vec<Word> = (0..40).map(|_| random_word(3, 7, &mut rng)).collect();
        let reps: Vec<_> = (0..4)
            .map(|i| sample_rep_stream(3, 9, i + 1).unwrap())
            .collect();
        assert!(trace_oracle(&words, &reps).unwrap() <= TRACE_TOLERANCE);
    }
}
