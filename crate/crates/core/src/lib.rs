//! Horowitz coordinates for `SL(2, C)` characters of free groups.
//!
//! The Fricke character of a word `W` in `F_n` is the function `ρ ↦ tr ρ(W)`
//! on representations `F_n → SL(2, C)`. Every such character is an integer
//! polynomial in the `2^n - 1` characters of the basic words. This crate
//! computes those polynomials ([`trace`]), the generators of the ideal of
//! relations among the coordinates ([`ideal`]), the polynomial automorphisms
//! of `C^(2^n - 1)` induced by Nielsen moves ([`autos`]), and checks all of
//! it against sampled matrix representations ([`numerics`]).

use std::sync::OnceLock;

pub mod autos;
pub mod cli;
pub mod error;
pub mod ideal;
pub mod numerics;
pub mod poly;
pub mod trace;
pub mod words;

pub use error::{Error, Result};
pub use poly::{Monomial, PolyMap, PolyMatrix, Polynomial};
pub use trace::{trace_poly, TraceEngine};
pub use words::{basic_words, BasicWord, HorowitzBasis, Letter, Nielsen, VarIndex, Word};

pub const MIN_RANK: usize = 2;
pub const MAX_RANK: usize = 10;

/// Symbolic ideal generation is only practical up to this rank.
pub const MAX_IDEAL_RANK: usize = 6;

pub fn check_rank(n: usize) -> Result<()> {
    if (MIN_RANK..=MAX_RANK).contains(&n) {
        Ok(())
    } else {
        Err(Error::RankOutOfRange(n))
    }
}

/// Shared Horowitz basis for rank `n`. Panics if `n` is outside the supported range.
pub fn basis(n: usize) -> &'static HorowitzBasis {
    static CACHE: [OnceLock<HorowitzBasis>; MAX_RANK + 1] =
        [const { OnceLock::new() }; MAX_RANK + 1];
    CACHE[n].get_or_init(|| HorowitzBasis::new(n).expect("rank within supported range"))
}
