use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A signed permutation in window notation: `|w_1|, ..., |w_n|` is a
/// permutation of `[n]`; `sigma(-i) = -sigma(i)` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm(Vec<i32>);

/// Type-B statistics. Excedances follow Brenti: position `i` counts when
/// `sigma(|sigma(i)|) > sigma(i)` or when `sigma(i) = -i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatsB {
    pub exc_b: usize,
    pub nexc_b: usize,
    pub wkexc_b: usize,
    pub des_b: usize,
    pub asc_b: usize,
    pub inv_b: usize,
    pub negs_count: usize,
    pub sign_b: i8,
    /// 1-based position holding `n` or `-n`.
    pub pos_last: usize,
}

/// Type-D statistics; excedances are computed exactly as in type B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatsD {
    pub exc_d: usize,
    pub nexc_d: usize,
    pub wkexc_d: usize,
    pub inv_d: usize,
    pub sign_d: i8,
}

impl SignedPerm {
    pub fn new(window: Vec<i32>) -> Result<SignedPerm> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in window.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::InvalidWindow {
                    position: i + 1,
                    reason: format!("|{v}| is outside 1..={n}"),
                });
            }
            if seen[a] {
                return Err(Error::InvalidWindow {
                    position: i + 1,
                    reason: format!("absolute value {a} repeats"),
                });
            }
            seen[a] = true;
        }
        Ok(SignedPerm(window))
    }

    pub(crate) fn from_vec_unchecked(window: Vec<i32>) -> SignedPerm {
        debug_assert!(SignedPerm::new(window.clone()).is_ok());
        SignedPerm(window)
    }

    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm((1..=n as i32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn window(&self) -> &[i32] {
        &self.0
    }

    /// `sigma(i)` for `i` in `+-[n]`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.0[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn negs_count(&self) -> usize {
        self.0.iter().filter(|&&v| v < 0).count()
    }

    /// Member of the type-D subgroup: an even number of negative entries.
    pub fn is_even_signed(&self) -> bool {
        self.negs_count().is_multiple_of(2)
    }

    fn strict_exc_part(&self) -> usize {
        self.0
            .iter()
            .filter(|&&v| self.apply(v.abs()) > v)
            .count()
    }

    pub fn exc_b(&self) -> usize {
        let neg_fixed = self
            .0
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == -(i as i32 + 1))
            .count();
        self.strict_exc_part() + neg_fixed
    }

    /// Weak excedances: the strict part plus fixed points.
    pub fn wkexc_b(&self) -> usize {
        let fixed = self
            .0
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i as i32 + 1)
            .count();
        self.strict_exc_part() + fixed
    }

    /// Descents of `0, w_1, ..., w_n`.
    pub fn des_b(&self) -> usize {
        let mut prev = 0;
        let mut count = 0;
        for &v in &self.0 {
            if prev > v {
                count += 1;
            }
            prev = v;
        }
        count
    }

    /// Inversions of the window as a sequence of signed integers.
    pub fn inv(&self) -> usize {
        self.count_pairs(|a, b| a > b)
    }

    /// Pairs `i < j` with `-w_i > w_j`.
    pub fn neg_sum_pairs(&self) -> usize {
        self.count_pairs(|a, b| -a > b)
    }

    fn count_pairs(&self, pred: impl Fn(i32, i32) -> bool) -> usize {
        let w = &self.0;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if pred(w[i], w[j]) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Coxeter length in type B: `inv + #{i<j : -w_i > w_j} + #negatives`.
    pub fn inv_b(&self) -> usize {
        self.inv() + self.neg_sum_pairs() + self.negs_count()
    }

    /// The alternative length formula `inv + sum of |w_i|` over negative
    /// entries. Kept for comparison with [`SignedPerm::inv_b`].
    pub fn inv_b_negsum(&self) -> usize {
        self.inv()
            + self
                .0
                .iter()
                .filter(|&&v| v < 0)
                .map(|&v| v.unsigned_abs() as usize)
                .sum::<usize>()
    }

    /// Coxeter length in type D: `inv + #{i<j : -w_i > w_j}`.
    pub fn inv_d(&self) -> usize {
        self.inv() + self.neg_sum_pairs()
    }

    pub fn pos_last(&self) -> usize {
        let n = self.len() as i32;
        self.0
            .iter()
            .position(|&v| v.abs() == n)
            .map_or(0, |p| p + 1)
    }

    pub fn stats_b(&self) -> StatsB {
        let n = self.len();
        let exc_b = self.exc_b();
        let des_b = self.des_b();
        let inv_b = self.inv_b();
        StatsB {
            exc_b,
            nexc_b: n - exc_b,
            wkexc_b: self.wkexc_b(),
            des_b,
            asc_b: n - des_b,
            inv_b,
            negs_count: self.negs_count(),
            sign_b: if inv_b.is_multiple_of(2) { 1 } else { -1 },
            pos_last: self.pos_last(),
        }
    }

    pub fn stats_d(&self) -> StatsD {
        let n = self.len();
        let exc_d = self.exc_b();
        let inv_d = self.inv_d();
        StatsD {
            exc_d,
            nexc_d: n - exc_d,
            wkexc_d: self.wkexc_b(),
            inv_d,
            sign_d: if inv_d.is_multiple_of(2) { 1 } else { -1 },
        }
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SignedPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignedPerm> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SignedPerm(Vec::new()));
        }
        let window = s
            .split(',')
            .enumerate()
            .map(|(i, part)| {
                part.trim().parse::<i32>().map_err(|_| Error::InvalidWindow {
                    position: i + 1,
                    reason: format!("`{}` is not an integer", part.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPerm::new(window)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn stats_of_neg2_1() {
        let b = sp("-2,1").stats_b();
        assert_eq!((b.exc_b, b.inv_b, b.sign_b, b.des_b), (1, 2, 1, 1));
    }

    #[test]
    fn negative_fixed_points_are_excedances() {
        let b = sp("-1,-2").stats_b();
        assert_eq!((b.exc_b, b.inv_b, b.sign_b), (2, 4, 1));
    }

    #[test]
    fn identity_stats() {
        let b = SignedPerm::identity(4).stats_b();
        assert_eq!((b.exc_b, b.wkexc_b, b.inv_b, b.des_b, b.asc_b), (0, 4, 0, 0, 4));
    }

    #[test]
    fn type_d_stats() {
        let d = sp("-2,-1").stats_d();
        assert_eq!((d.exc_d, d.inv_d, d.sign_d), (1, 1, -1));
        let d = sp("2,1").stats_d();
        assert_eq!((d.exc_d, d.inv_d), (1, 1));
    }

    #[test]
    fn parse_rejects_bad_windows() {
        assert!(matches!(
            "-2,2".parse::<SignedPerm>(),
            Err(Error::InvalidWindow { position: 2, .. })
        ));
        assert!(matches!(
            "0,1".parse::<SignedPerm>(),
            Err(Error::InvalidWindow { position: 1, .. })
        ));
        assert_eq!(sp(" -2, 1 ").window(), &[-2, 1]);
    }
}
