//! Polynomial automorphisms of `C^(2^n - 1)` induced by Nielsen moves.
//!
//! An automorphism `σ` of `F_n` acts on characters by `χ ↦ χ ∘ σ`, so the
//! coordinate `x_i = tr X_i` is sent to the trace polynomial of `σ(X_i)`.
//! A [`NielsenWord`] `g_1 g_2 … g_k` applies `g_1` first to group elements,
//! i.e. `σ = g_k ∘ … ∘ g_1`, and its induced point map is
//! `ĝ_1 ∘ ĝ_2 ∘ … ∘ ĝ_k`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{PolyMap, PolyMatrix, Polynomial};
use crate::trace::TraceEngine;
use crate::words::{Nielsen, Word};
use crate::{basis, check_rank};

/// A finite sequence of Nielsen moves; the empty sequence is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NielsenWord(pub Vec<Nielsen>);

impl NielsenWord {
    pub fn identity() -> Self {
        NielsenWord(Vec::new())
    }

    pub fn single(g: Nielsen) -> Self {
        NielsenWord(vec![g])
    }

    pub fn moves(&self) -> &[Nielsen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &NielsenWord) -> NielsenWord {
        NielsenWord(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Parses a string over `T`, `T'`, `P`, `R`, `I`. Whitespace is ignored;
    /// `1` (or an empty string) is the identity.
    pub fn parse(text: &str) -> Result<Self> {
        let mut moves = Vec::new();
        let mut chars = text.char_indices().peekable();
        if text.trim() == "1" {
            return Ok(NielsenWord::identity());
        }
        while let Some((pos, ch)) = chars.next() {
            let g = match ch {
                c if c.is_whitespace() => continue,
                'T' => {
                    if matches!(chars.peek(), Some((_, '\''))) {
                        chars.next();
                        Nielsen::TInv
                    } else {
                        Nielsen::T
                    }
                }
                'P' => Nielsen::P,
                'R' => Nielsen::R,
                'I' => Nielsen::I,
                '\'' => return Err(Error::parse(pos, "prime must follow T")),
                other => {
                    return Err(Error::parse(
                        pos,
                        format!("unexpected character {other:?}; expected T, T', P, R or I"),
                    ))
                }
            };
            moves.push(g);
        }
        Ok(NielsenWord(moves))
    }

    /// `σ(w)`, applying the moves left to right.
    pub fn apply(&self, w: &Word) -> Word {
        self.0.iter().fold(w.clone(), |acc, g| g.apply(&acc))
    }
}

impl FromStr for NielsenWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NielsenWord::parse(s)
    }
}

impl fmt::Display for NielsenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for g in &self.0 {
            f.write_str(g.symbol())?;
        }
        Ok(())
    }
}

/// The map of a single move: component `i` is the trace polynomial of `g(X_i)`.
pub fn generator_map(g: Nielsen, n: usize) -> Result<PolyMap> {
    direct_induced_map(&NielsenWord::single(g), n)
}

/// The induced map of `g_1 … g_k`, as the composite `ĝ_1 ∘ … ∘ ĝ_k` of the
/// generator maps. On characters it agrees with [`direct_induced_map`]; as
/// polynomials it is the representative that composes exactly.
pub fn induced_map(w: &NielsenWord, n: usize) -> Result<PolyMap> {
    check_rank(n)?;
    let mut maps: Vec<(Nielsen, PolyMap)> = Vec::new();
    let mut acc = PolyMap::identity(n);
    for &g in w.moves() {
        if !maps.iter().any(|(h, _)| *h == g) {
            maps.push((g, generator_map(g, n)?));
        }
        let m = &maps
            .iter()
            .find(|(h, _)| *h == g)
            .expect("generator map cached")
            .1;
        acc = acc.compose(m)?;
    }
    Ok(acc)
}

/// Component `i` is the trace polynomial of `σ(X_i)`, expanded directly.
pub fn direct_induced_map(w: &NielsenWord, n: usize) -> Result<PolyMap> {
    check_rank(n)?;
    let b = basis(n);
    let components = b
        .words()
        .par_iter()
        .map(|x| {
            let mut engine = TraceEngine::new(n)?;
            engine.trace(&w.apply(&x.word()))
        })
        .collect::<Result<Vec<_>>>()?;
    PolyMap::new(n, components)
}

/// The determinant of the Jacobian matrix of `m`.
pub fn jac_det(m: &PolyMap) -> Result<Polynomial> {
    m.jacobian().det()
}

/// Integer matrix of the action on `Z^n = F_n / [F_n, F_n]`. Column `j` holds
/// the exponent sums of `σ(A_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianizationMatrix {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl AbelianizationMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> i64 {
        let n = self.n;
        let mut a: Vec<Vec<i128>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        (sign * if n == 0 { 1 } else { a[n - 1][n - 1] }) as i64
    }
}

impl fmt::Display for AbelianizationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn abelianization(w: &NielsenWord, n: usize) -> Result<AbelianizationMatrix> {
    check_rank(n)?;
    let mut entries = vec![vec![0i64; n]; n];
    for j in 0..n {
        let image = w.apply(&Word::generator(n, j)?);
        for l in image.letters() {
            let row: &mut Vec<i64> = &mut entries[l.index()];
            row[j] += i64::from(l.exponent());
        }
    }
    Ok(AbelianizationMatrix { n, entries })
}

/// Number of distinct maps in the group generated by the induced maps of
/// `P`, `R` and `I`.
pub fn hyperoctahedral_count(n: usize) -> Result<usize> {
    if !(2..=3).contains(&n) {
        return Err(Error::Unsupported(format!(
            "hyperoctahedral closure is computed for n = 2, 3, not {n}"
        )));
    }
    let gens = [Nielsen::P, Nielsen::R, Nielsen::I]
        .iter()
        .map(|&g| generator_map(g, n))
        .collect::<Result<Vec<_>>>()?;
    let identity = PolyMap::identity(n);
    let mut seen: HashSet<Vec<Polynomial>> = HashSet::from([identity.components().to_vec()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let next = g.compose(&m)?;
            if seen.insert(next.components().to_vec()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}

/// Half of the elimination expression for `abcd` at rank four, in basis names.
pub const ABCD_ELIMINATION: &str =
    "1/2*a*b*c*d - 1/2*a*b*cd - 1/2*a*d*bc - 1/2*b*c*ad - 1/2*c*d*ab \
    + 1/2*a*bcd + 1/2*b*acd + 1/2*c*abd + 1/2*d*abc - 1/2*ac*bd + 1/2*ad*bc";

/// Jacobian determinant of the twist on the 14 coordinates other than
/// `abcd`, with `abcd` eliminated in favour of the shorter words.
pub fn gama_phi1_det() -> Result<Polynomial> {
    let n = 4;
    let b = basis(n);
    let full = induced_map(&NielsenWord::single(Nielsen::T), n)?;
    let z = b.index_of_name("abcd").expect("abcd in rank-four basis").0;
    let x = b.index_of_name("acd").expect("acd in rank-four basis").0;
    let elim = Polynomial::parse(n, ABCD_ELIMINATION)?;
    let vars: Vec<usize> = (0..b.len()).filter(|&i| i != z).collect();
    let images: Vec<Polynomial> = (0..b.len())
        .map(|i| {
            if i == z {
                elim.clone()
            } else {
                Polynomial::var(n, i)
            }
        })
        .collect();
    let comps = vars
        .iter()
        .map(|&i| full.component(i).substitute_all(&images))
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(comps[vars.iter().position(|&i| i == x).unwrap()], elim);
    let k = vars.len();
    PolyMatrix::from_fn(n, k, k, |i, j| comps[i].derivative(vars[j])).det()
}

#[derive(Serialize)]
struct MapJson {
    n: usize,
    word: String,
    components: serde_json::Map<String, serde_json::Value>,
}

pub fn map_to_json(w: &NielsenWord, m: &PolyMap) -> serde_json::Value {
    let names = basis(m.rank()).names();
    let components = names
        .into_iter()
        .zip(m.components())
        .map(|(name, p)| (name, serde_json::Value::String(p.to_string())))
        .collect();
    serde_json::to_value(MapJson {
        n: m.rank(),
        word: w.to_string(),
        components,
    })
    .expect("map export serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nw(s: &str) -> NielsenWord {
        NielsenWord::parse(s).unwrap()
    }

    fn comps(n: usize, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| Polynomial::parse(n, t).unwrap()).collect()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(nw("T'P R I").to_string(), "T'PRI");
        assert_eq!(nw("1"), NielsenWord::identity());
        assert_eq!(NielsenWord::identity().to_string(), "1");
        assert_eq!(
            NielsenWord::parse("TX"),
            Err(Error::parse(
                1,
                "unexpected character 'X'; expected T, T', P, R or I"
            ))
        );
        assert!(matches!(
            NielsenWord::parse("'T"),
            Err(Error::Parse { pos: 0, .. })
        ));
    }

    #[test]
    fn apply_left_to_right() {
        let a = Word::generator(2, 0).unwrap();
        assert_eq!(nw("TP").apply(&a).to_string(), "BA");
        assert_eq!(nw("PT").apply(&a).to_string(), "B");
        assert_eq!(nw("TT'").apply(&a), a);
    }

    #[test]
    fn rank_two_twist() {
        let m = induced_map(&nw("T"), 2).unwrap();
        assert_eq!(
            m.components(),
            comps(2, &["ab", "b", "b*ab - a"]).as_slice()
        );
    }

    #[test]
    fn rank_three_inversion_and_rotation() {
        let i = induced_map(&nw("I"), 3).unwrap();
        assert_eq!(
            i.components(),
            comps(
                3,
                &["a", "b", "c", "a*b - ab", "a*c - ac", "bc", "a*bc - abc"]
            )
            .as_slice()
        );
        let r = induced_map(&nw("R"), 3).unwrap();
        assert_eq!(
            r.components(),
            comps(3, &["b", "c", "a", "bc", "ab", "ac", "abc"]).as_slice()
        );
    }

    #[test]
    fn small_jacobians() {
        assert_eq!(
            jac_det(&induced_map(&nw("T"), 2).unwrap()).unwrap(),
            Polynomial::one(2)
        );
        assert_eq!(
            jac_det(&induced_map(&nw("I"), 2).unwrap()).unwrap(),
            Polynomial::from_int(2, -1)
        );
        assert_eq!(
            jac_det(&induced_map(&nw("R"), 3).unwrap()).unwrap(),
            Polynomial::one(3)
        );
    }

    #[test]
    fn abelianization_of_generators() {
        assert_eq!(
            abelianization(&nw("T"), 3).unwrap().rows(),
            &[vec![1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]
        );
        assert_eq!(abelianization(&nw("T"), 3).unwrap().det(), 1);
        assert_eq!(abelianization(&nw("I"), 3).unwrap().det(), -1);
        assert_eq!(abelianization(&nw("P"), 3).unwrap().det(), -1);
        assert_eq!(abelianization(&nw("R"), 3).unwrap().det(), 1);
        assert_eq!(abelianization(&nw("R"), 4).unwrap().det(), -1);
        assert_eq!(abelianization(&nw("TTT'I"), 4).unwrap().det(), -1);
    }

    #[test]
    fn composition_is_contravariant() {
        let (t, p) = (
            induced_map(&nw("T"), 3).unwrap(),
            induced_map(&nw("P"), 3).unwrap(),
        );
        let tp = induced_map(&nw("TP"), 3).unwrap();
        assert_eq!(tp, t.compose(&p).unwrap());
        assert_ne!(tp, p.compose(&t).unwrap());
    }

    #[test]
    fn closure_sizes() {
        assert_eq!(hyperoctahedral_count(3).unwrap(), 48);
        assert!(hyperoctahedral_count(4).is_err());
    }

    #[test]
    fn json_export() {
        let v = map_to_json(&nw("T"), &induced_map(&nw("T"), 2).unwrap());
        assert_eq!(
            v.to_string(),
            r#"{"n":2,"word":"T","components":{"a":"ab","b":"b","ab":"b*ab - a"}}"#
        );
    }
}
