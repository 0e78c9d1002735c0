//! Words in the free group `F_n = <A_1, ..., A_n>`.
//!
//! Generators are written `A, B, C, ...` (so `A = A_1`). A [`Word`] is always
//! freely reduced and stores one letter per generator occurrence with exponent
//! `+1` or `-1`. Basic words are the `2^n - 1` positive words whose letters are
//! distinct and appear in ascending index order; they index the Horowitz
//! coordinates of `C^(2^n - 1)`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::{check_rank, MAX_RANK};

/// A generator occurrence: 0-based generator index and whether it is inverted.
///
/// The derived ordering compares the index first and puts `A` before `A^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u8,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter {
            gen: gen as u8,
            inv,
        }
    }

    pub fn pos(gen: usize) -> Self {
        Letter::new(gen, false)
    }

    pub fn neg(gen: usize) -> Self {
        Letter::new(gen, true)
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }

    pub fn index(self) -> usize {
        self.gen as usize
    }

    pub fn exponent(self) -> i32 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    fn symbol(self) -> char {
        (b'A' + self.gen) as char
    }
}

/// A freely reduced word of `F_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// The single-letter word `A_{gen+1}`.
    pub fn generator(rank: usize, gen: usize) -> Result<Self> {
        Word::from_letters(rank, [Letter::pos(gen)])
    }

    /// Builds a word from raw letters, freely reducing as it goes.
    pub fn from_letters(rank: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::RankOutOfRange(rank));
        }
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if l.index() >= rank {
                return Err(Error::GeneratorOutOfRange {
                    index: l.index() + 1,
                    rank,
                });
            }
            push_reduced(&mut out, l);
        }
        Ok(Word { rank, letters: out })
    }

    /// Free reduction of a sequence of `(generator, exponent)` pairs with
    /// 1-based generator indices and exponents `+1`/`-1`.
    pub fn reduce_free(rank: usize, raw: &[(usize, i32)]) -> Result<Self> {
        let mut letters = Vec::with_capacity(raw.len());
        for &(index, exp) in raw {
            if index == 0 || index > rank {
                return Err(Error::GeneratorOutOfRange { index, rank });
            }
            let l = Letter::new(index - 1, exp < 0);
            for _ in 0..exp.unsigned_abs() {
                letters.push(l);
            }
        }
        Word::from_letters(rank, letters)
    }

    /// Parses the word grammar: uppercase letters, each optionally followed by
    /// `^` and a nonzero integer. Whitespace is ignored; `1` alone is the identity.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::RankOutOfRange(rank));
        }
        if text.trim() == "1" {
            return Ok(Word::identity(rank));
        }
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let (pos, c) = chars[i];
            if !c.is_ascii_uppercase() {
                return Err(Error::parse(
                    pos,
                    format!("expected a generator letter, found `{c}`"),
                ));
            }
            let gen = (c as u8 - b'A') as usize;
            if gen >= rank {
                return Err(Error::parse(
                    pos,
                    format!("generator `{c}` is not available at rank {rank}"),
                ));
            }
            i += 1;
            let mut exp: i64 = 1;
            if i < chars.len() && chars[i].1 == '^' {
                let caret = chars[i].0;
                i += 1;
                let start = i;
                let mut digits = String::new();
                if i < chars.len() && (chars[i].1 == '-' || chars[i].1 == '+') {
                    digits.push(chars[i].1);
                    i += 1;
                }
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    digits.push(chars[i].1);
                    i += 1;
                }
                let at = chars.get(start).map_or(caret + 1, |c| c.0);
                exp = digits
                    .parse()
                    .map_err(|_| Error::parse(at, "expected an integer exponent after `^`"))?;
                if exp == 0 {
                    return Err(Error::parse(at, "exponent must be nonzero"));
                }
                if exp.unsigned_abs() > 1_000 {
                    return Err(Error::parse(at, "exponent too large"));
                }
            }
            let l = Letter::new(gen, exp < 0);
            for _ in 0..exp.unsigned_abs() {
                letters.push(l);
            }
        }
        Word::from_letters(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn negative_count(&self) -> usize {
        self.letters.iter().filter(|l| l.inv).count()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| !l.inv)
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &Word) -> Word {
        debug_assert_eq!(self.rank, other.rank);
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Word {
            rank: self.rank,
            letters,
        }
    }

    /// Strips inverse pairs from the two ends until the word is cyclically reduced.
    pub fn cyclically_reduced(&self) -> Word {
        let l = &self.letters;
        let (mut lo, mut hi) = (0, l.len());
        while hi - lo >= 2 && l[lo] == l[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word {
            rank: self.rank,
            letters: l[lo..hi].to_vec(),
        }
    }

    /// The rotation starting at position `k`.
    pub fn rotated(&self, k: usize) -> Word {
        let n = self.letters.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        Word {
            rank: self.rank,
            letters,
        }
    }

    /// The least rotation of this (cyclically reduced) word.
    pub(crate) fn least_rotation(&self) -> Word {
        (0..self.len().max(1))
            .map(|k| self.rotated(k))
            .min_by(|a, b| a.cmp_canonical(b))
            .unwrap_or_else(|| self.clone())
    }

    /// Canonical representative of the conjugacy class of `self` and `self^-1`:
    /// the least rotation, under length then letter order, of the cyclic
    /// reduction of the word or of its inverse. Trace is constant on the class.
    pub fn canonical_rep(&self) -> Word {
        let c = self.cyclically_reduced();
        let a = c.least_rotation();
        let b = c.inverse().least_rotation();
        match a.cmp_canonical(&b) {
            Ordering::Greater => b,
            _ => a,
        }
    }

    /// Orders by length, then letter by letter (generator index, then `A < A^-1`).
    pub fn cmp_canonical(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }

    /// Number of pairs `i < j` with `letters[i].gen > letters[j].gen`.
    pub fn inversion_count(&self) -> usize {
        let l = &self.letters;
        let mut count = 0;
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                if l[i].gen > l[j].gen {
                    count += 1;
                }
            }
        }
        count
    }

    /// If this word is a cyclic rotation of a basic word (or the inverse of
    /// one), returns that basic word's generator mask.
    pub fn basic_mask(&self) -> Option<u32> {
        let c = self.canonical_rep();
        if c.is_identity() || !c.is_positive() {
            return None;
        }
        let mut mask = 0u32;
        let mut prev: Option<u8> = None;
        for l in &c.letters {
            if prev.is_some_and(|p| p >= l.gen) {
                return None;
            }
            prev = Some(l.gen);
            mask |= 1 << l.gen;
        }
        Some(mask)
    }

    pub(crate) fn from_raw(rank: usize, letters: Vec<Letter>) -> Word {
        Word { rank, letters }
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let exp = run as i64 * l.exponent() as i64;
            if exp == 1 {
                write!(f, "{}", l.symbol())?;
            } else {
                write!(f, "{}^{}", l.symbol(), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// A basic word, identified by the set of generators it contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasicWord {
    rank: usize,
    mask: u32,
}

impl BasicWord {
    pub fn from_mask(rank: usize, mask: u32) -> Result<Self> {
        check_rank(rank)?;
        if mask == 0 || mask >> rank != 0 {
            return Err(Error::Unsupported(format!(
                "mask {mask:#b} is not a nonempty subset of {rank} generators"
            )));
        }
        Ok(BasicWord { rank, mask })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, gen: usize) -> bool {
        self.mask & (1 << gen) != 0
    }

    /// Generator indices in ascending order.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.rank).filter(|&g| self.contains(g)).collect()
    }

    pub fn word(&self) -> Word {
        Word::from_raw(
            self.rank,
            self.generators().into_iter().map(Letter::pos).collect(),
        )
    }

    /// Lowercase variable name, e.g. `abd`.
    pub fn name(&self) -> String {
        mask_name(self.mask)
    }

    fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.len(), self.generators())
    }
}

impl fmt::Display for BasicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word().to_string())
    }
}

pub(crate) fn mask_name(mask: u32) -> String {
    (0..32u8)
        .filter(|g| mask & (1 << g) != 0)
        .map(|g| (b'a' + g) as char)
        .collect()
}

/// 0-based position in the Horowitz ordering; the ordinal is `index + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarIndex(pub usize);

impl VarIndex {
    pub fn ordinal(self) -> usize {
        self.0 + 1
    }
}

/// All basic words of rank `n` in Horowitz order: shorter words first, ties
/// broken at the first differing letter by generator order.
pub fn basic_words(n: usize) -> Result<Vec<BasicWord>> {
    check_rank(n)?;
    let mut words: Vec<BasicWord> = (1..(1u32 << n))
        .map(|mask| BasicWord { rank: n, mask })
        .collect();
    words.sort_by_cached_key(|w| w.sort_key());
    Ok(words)
}

/// The Horowitz coordinate system of rank `n`: basic words in order, plus the
/// inverse lookup from generator mask to coordinate.
#[derive(Debug, Clone)]
pub struct HorowitzBasis {
    rank: usize,
    words: Vec<BasicWord>,
    by_mask: Vec<usize>,
}

impl HorowitzBasis {
    pub fn new(n: usize) -> Result<Self> {
        let words = basic_words(n)?;
        let mut by_mask = vec![usize::MAX; 1 << n];
        for (i, w) in words.iter().enumerate() {
            by_mask[w.mask as usize] = i;
        }
        Ok(HorowitzBasis {
            rank: n,
            words,
            by_mask,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of coordinates, `2^n - 1`.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Size of the foundation set, `3n - 3`.
    pub fn foundation_len(&self) -> usize {
        3 * self.rank - 3
    }

    pub fn words(&self) -> &[BasicWord] {
        &self.words
    }

    pub fn word(&self, i: usize) -> BasicWord {
        self.words[i]
    }

    pub fn name(&self, i: usize) -> String {
        self.words[i].name()
    }

    pub fn names(&self) -> Vec<String> {
        self.words.iter().map(|w| w.name()).collect()
    }

    pub fn index_of_mask(&self, mask: u32) -> Option<VarIndex> {
        self.by_mask
            .get(mask as usize)
            .copied()
            .filter(|&i| i != usize::MAX)
            .map(VarIndex)
    }

    pub fn index_of(&self, w: &BasicWord) -> VarIndex {
        VarIndex(self.by_mask[w.mask as usize])
    }

    /// Looks up a lowercase variable name such as `ab` or `bcd`.
    pub fn index_of_name(&self, name: &str) -> Option<VarIndex> {
        let mut mask = 0u32;
        let mut prev: Option<u8> = None;
        for c in name.bytes() {
            if !c.is_ascii_lowercase() {
                return None;
            }
            let g = c - b'a';
            if g as usize >= self.rank || prev.is_some_and(|p| p >= g) {
                return None;
            }
            prev = Some(g);
            mask |= 1 << g;
        }
        if mask == 0 {
            return None;
        }
        self.index_of_mask(mask)
    }
}

/// The Nielsen generators of `Out(F_n)`, plus the twist inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Nielsen {
    /// Twist: `A_1 -> A_1 A_2`.
    T,
    /// Inverse twist: `A_1 -> A_1 A_2^-1`.
    TInv,
    /// Swap `A_1 <-> A_2`.
    P,
    /// Cyclic shift `A_i -> A_{i+1}`, `A_n -> A_1`.
    R,
    /// Inversion `A_1 -> A_1^-1`.
    I,
}

impl Nielsen {
    pub const ALL: [Nielsen; 5] = [
        Nielsen::T,
        Nielsen::TInv,
        Nielsen::P,
        Nielsen::R,
        Nielsen::I,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Nielsen::T => "T",
            Nielsen::TInv => "T'",
            Nielsen::P => "P",
            Nielsen::R => "R",
            Nielsen::I => "I",
        }
    }

    /// Image of the generator `A_{gen+1}` as a word.
    pub fn generator_image(self, rank: usize, gen: usize) -> Vec<Letter> {
        match (self, gen) {
            (Nielsen::T, 0) => vec![Letter::pos(0), Letter::pos(1)],
            (Nielsen::TInv, 0) => vec![Letter::pos(0), Letter::neg(1)],
            (Nielsen::P, 0) => vec![Letter::pos(1)],
            (Nielsen::P, 1) => vec![Letter::pos(0)],
            (Nielsen::R, g) => vec![Letter::pos((g + 1) % rank)],
            (Nielsen::I, 0) => vec![Letter::neg(0)],
            (_, g) => vec![Letter::pos(g)],
        }
    }

    /// Applies the automorphism to a word (substitute, then reduce).
    pub fn apply(self, w: &Word) -> Word {
        let rank = w.rank();
        let mut out = Vec::with_capacity(w.len() + 2);
        for &l in w.letters() {
            let img = self.generator_image(rank, l.index());
            if l.inv {
                for &m in img.iter().rev() {
                    push_reduced(&mut out, m.inverse());
                }
            } else {
                for &m in &img {
                    push_reduced(&mut out, m);
                }
            }
        }
        Word::from_raw(rank, out)
    }
}

impl fmt::Display for Nielsen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}
