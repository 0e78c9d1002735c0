use std::cmp::Ordering;

/// A monomial stored sparsely as `(variable, exponent)` pairs sorted by
/// variable, with no zero exponents.
///
/// The ordering is the display order: higher total degree first, then the
/// monomial with the larger exponent at the first differing variable. This is
/// a graded monomial order, so the first key of a sorted map is the leading
/// term used by exact division.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: usize) -> Self {
        Monomial(vec![(v as u32, 1)])
    }

    pub fn var_pow(v: usize, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v as u32, e)])
        }
    }

    /// Builds from arbitrary pairs; merges duplicates and drops zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut v: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(x, e)| (x as u32, e))
            .collect();
        v.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(v.len());
        for (x, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == x => last.1 += e,
                _ => out.push((x, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.0
            .binary_search_by_key(&(v as u32), |&(x, _)| x)
            .map_or(0, |i| self.0[i].1)
    }

    /// `(variable, exponent)` pairs in ascending variable order.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(x, e)| (x as usize, e))
    }

    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|&(x, _)| x as usize)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(x, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < x {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == x {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((x, e - f)),
                }
            } else {
                out.push((x, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Removes variable `v` entirely, returning its former exponent.
    pub fn without(&self, v: usize) -> (Monomial, u32) {
        let e = self.exponent(v);
        let rest = self
            .0
            .iter()
            .copied()
            .filter(|&(x, _)| x as usize != v)
            .collect();
        (Monomial(rest), e)
    }

    /// Lowers the exponent of `v` by one; `None` if `v` is absent.
    pub fn differentiate(&self, v: usize) -> Option<(Monomial, u32)> {
        let i = self.0.binary_search_by_key(&(v as u32), |&(x, _)| x).ok()?;
        let e = self.0[i].1;
        let mut out = self.0.clone();
        if e == 1 {
            out.remove(i);
        } else {
            out[i].1 -= 1;
        }
        Some((Monomial(out), e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                if a.0 != b.0 {
                    // the monomial carrying the earlier variable comes first
                    return a.0.cmp(&b.0);
                }
                if a.1 != b.1 {
                    return b.1.cmp(&a.1);
                }
            }
            other.0.len().cmp(&self.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
