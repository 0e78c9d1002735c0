//! Trace polynomials of words in the Horowitz coordinates.
//!
//! A word is rewritten with three `SL(2)` trace identities until only basic
//! words remain:
//!
//! * `tr(X A^-1) = tr X · tr A - tr(X A)` removes a negative letter;
//! * `tr(A U A V) = tr(AU) · tr(AV) - tr(U V^-1)` removes a repeated generator;
//! * `tr(XYZ) = P(X, Y, Z) - tr(XZY)` sorts a square-free positive word, where
//!   `P = x·yz + y·xz + z·xy - x·y·z` is the sum of the two Fricke roots.
//!
//! Each rewrite strictly lowers `(length, negative letters, inversions)`, so
//! the recursion terminates. Results are memoized on the canonical conjugacy
//! representative, which determines the trace.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::words::{Letter, Word};
use crate::{basis, check_rank};

/// `(length, negative letters, inversions)` of the canonical representative;
/// every rewrite step strictly decreases it lexicographically.
pub fn measure(w: &Word) -> (usize, usize, usize) {
    let c = w.canonical_rep();
    let neg = c.negative_count().min(c.len() - c.negative_count());
    let inv = if c.is_positive() {
        c.inversion_count()
    } else {
        0
    };
    (c.len(), neg, inv)
}

/// Computes trace polynomials for one rank, with an optional memo table.
#[derive(Debug, Clone)]
pub struct TraceEngine {
    rank: usize,
    cache: Option<HashMap<Word, Polynomial>>,
}

impl TraceEngine {
    pub fn new(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(TraceEngine {
            rank,
            cache: Some(HashMap::new()),
        })
    }

    /// An engine that recomputes every subword trace (for benchmarking).
    pub fn uncached(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(TraceEngine { rank, cache: None })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cache_len(&self) -> usize {
        self.cache.as_ref().map_or(0, HashMap::len)
    }

    /// The trace polynomial of `w`, an integer polynomial in the Horowitz
    /// variables that agrees with `tr ρ(w)` for every representation `ρ`.
    pub fn trace(&mut self, w: &Word) -> Result<Polynomial> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: w.rank(),
            });
        }
        Ok(self.reduce(w))
    }

    /// Returns `(P, Q)` with `P = tr(W1W2W3) + tr(W1W3W2)` and
    /// `Q = tr(W1W2W3) · tr(W1W3W2)`, built from the six block traces.
    pub fn fricke_pq(
        &mut self,
        w1: &Word,
        w2: &Word,
        w3: &Word,
    ) -> Result<(Polynomial, Polynomial)> {
        for w in [w1, w2, w3] {
            if w.rank() != self.rank {
                return Err(Error::RankMismatch {
                    left: self.rank,
                    right: w.rank(),
                });
            }
        }
        let t1 = self.reduce(w1);
        let t2 = self.reduce(w2);
        let t3 = self.reduce(w3);
        let t12 = self.reduce(&w1.concat(w2));
        let t13 = self.reduce(&w1.concat(w3));
        let t23 = self.reduce(&w2.concat(w3));
        let p = fricke_p(&t1, &t2, &t3, &t12, &t13, &t23);
        let mut q = &(&(&t12 * &t13) * &t23) - &Polynomial::from_int(self.rank, 4);
        for t in [&t1, &t2, &t3, &t12, &t13, &t23] {
            q = &q + &(t * t);
        }
        for (x, y, xy) in [(&t1, &t2, &t12), (&t1, &t3, &t13), (&t2, &t3, &t23)] {
            q = &q - &(&(x * y) * xy);
        }
        Ok((p, q))
    }

    fn reduce(&mut self, w: &Word) -> Polynomial {
        let c = w.canonical_rep();
        if let Some(p) = self.cache.as_ref().and_then(|m| m.get(&c)) {
            return p.clone();
        }
        let p = self.expand(&c);
        if let Some(m) = self.cache.as_mut() {
            m.insert(c, p.clone());
        }
        p
    }

    fn child(&mut self, parent: &(usize, usize, usize), w: &Word) -> Polynomial {
        debug_assert!(
            measure(w) < *parent,
            "termination measure must decrease: {w}"
        );
        self.reduce(w)
    }

    /// Expands a canonical word one rewrite step.
    fn expand(&mut self, c: &Word) -> Polynomial {
        let rank = self.rank;
        if c.is_identity() {
            return Polynomial::from_int(rank, 2);
        }
        if let Some(mask) = c.basic_mask() {
            let v = basis(rank)
                .index_of_mask(mask)
                .expect("basic word in basis");
            return Polynomial::var(rank, v.0);
        }
        let m = measure(c);
        let inv = c.inverse().least_rotation();
        let u = if inv.negative_count() < c.negative_count() {
            inv
        } else {
            c.clone()
        };
        let letters = u.letters();
        let len = letters.len();

        if let Some(k) = letters.iter().position(|l| l.inv) {
            // rotate so the first negative letter is last: u ~ X · A^-1
            let rot = u.rotated(k + 1);
            let a = letters[k].inverse();
            let x = Word::from_raw(rank, rot.letters()[..len - 1].to_vec());
            let a_word = Word::from_raw(rank, vec![a]);
            let tx = self.child(&m, &x);
            let ta = self.child(&m, &a_word);
            let txa = self.child(&m, &x.concat(&a_word));
            return &(&tx * &ta) - &txa;
        }

        if let Some((start, offset)) = closest_repeat(letters) {
            // u ~ A U A V
            let rot = u.rotated(start);
            let l = rot.letters();
            let au = Word::from_raw(rank, l[..offset].to_vec());
            let av = Word::from_raw(
                rank,
                std::iter::once(l[0])
                    .chain(l[offset + 1..].iter().copied())
                    .collect(),
            );
            let uu = Word::from_raw(rank, l[1..offset].to_vec());
            let vv = Word::from_raw(rank, l[offset + 1..].to_vec());
            let t_au = self.child(&m, &au);
            let t_av = self.child(&m, &av);
            let t_uv = self.child(&m, &uu.concat(&vv.inverse()));
            return &(&t_au * &t_av) - &t_uv;
        }

        // Square-free positive word; u starts with its smallest generator.
        // Write u = S1 S2 U3 R with S1 S2 the ascending prefix, U3 the letters
        // that belong between S1 and S2; then u ~ X Y Z with X = R S1, Y = S2,
        // Z = U3, and X Z Y has fewer inversions.
        let s = (1..len)
            .find(|&i| letters[i].gen < letters[i - 1].gen)
            .expect("not basic");
        let t = letters[s].gen;
        let p = letters[..s].iter().take_while(|l| l.gen < t).count();
        let ceiling = letters[p].gen;
        let mut q = s + 1;
        while q < len && letters[q].gen < ceiling && letters[q].gen > letters[q - 1].gen {
            q += 1;
        }
        let x: Vec<Letter> = letters[q..].iter().chain(&letters[..p]).copied().collect();
        let x = Word::from_raw(rank, x);
        let y = Word::from_raw(rank, letters[p..s].to_vec());
        let z = Word::from_raw(rank, letters[s..q].to_vec());
        let tx = self.child(&m, &x);
        let ty = self.child(&m, &y);
        let tz = self.child(&m, &z);
        let txy = self.child(&m, &x.concat(&y));
        let txz = self.child(&m, &x.concat(&z));
        let tyz = self.child(&m, &y.concat(&z));
        let swapped = self.child(&m, &x.concat(&z).concat(&y));
        &fricke_p(&tx, &ty, &tz, &txy, &txz, &tyz) - &swapped
    }
}

/// `P = x·yz + y·xz + z·xy - x·y·z`.
fn fricke_p(
    x: &Polynomial,
    y: &Polynomial,
    z: &Polynomial,
    xy: &Polynomial,
    xz: &Polynomial,
    yz: &Polynomial,
) -> Polynomial {
    let s = &(&(x * yz) + &(y * xz)) + &(z * xy);
    &s - &(&(x * y) * z)
}

/// For a positive cyclic word, the occurrence pair of one generator with the
/// fewest letters between them (going forward from the first). Returns the
/// rotation start and the offset of the second occurrence.
fn closest_repeat(letters: &[Letter]) -> Option<(usize, usize)> {
    let n = letters.len();
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..n {
        for d in 1..n {
            if letters[(i + d) % n].gen == letters[i].gen {
                if best.is_none_or(|(g, _, _)| d - 1 < g) {
                    best = Some((d - 1, i, d));
                }
                break;
            }
        }
    }
    best.map(|(_, i, d)| (i, d))
}

/// Trace polynomial of `w` at rank `n` with a fresh cache.
pub fn trace_poly(w: &Word, n: usize) -> Result<Polynomial> {
    TraceEngine::new(n)?.trace(w)
}

/// `(P, Q)` for the blocks `W1, W2, W3`; see [`TraceEngine::fricke_pq`].
pub fn fricke_pq(w1: &Word, w2: &Word, w3: &Word, n: usize) -> Result<(Polynomial, Polynomial)> {
    TraceEngine::new(n)?.fricke_pq(w1, w2, w3)
}
