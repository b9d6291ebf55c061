use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `[n]` in window (one-line) notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

/// Type-A statistics of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatsA {
    pub exc: usize,
    pub nexc: usize,
    pub des: usize,
    pub asc: usize,
    pub inv: usize,
    pub cyc: usize,
    pub fixed_points: usize,
    /// `+1` for even permutations, `-1` for odd ones.
    pub sign: i8,
    /// 1-based position of the letter `n` (0 when `n = 0`).
    pub pos_n: usize,
}

impl Perm {
    /// Validates that `window` holds each of `1..=n` exactly once.
    pub fn new(window: Vec<usize>) -> Result<Perm> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in window.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::InvalidWindow {
                    position: i + 1,
                    reason: format!("entry {v} is outside 1..={n}"),
                });
            }
            if seen[v] {
                return Err(Error::InvalidWindow {
                    position: i + 1,
                    reason: format!("entry {v} repeats"),
                });
            }
            seen[v] = true;
        }
        Ok(Perm(window))
    }

    pub(crate) fn from_vec_unchecked(window: Vec<usize>) -> Perm {
        debug_assert!(Perm::new(window.clone()).is_ok());
        Perm(window)
    }

    pub fn identity(n: usize) -> Perm {
        Perm((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn window(&self) -> &[usize] {
        &self.0
    }

    /// `pi(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm(inv)
    }

    /// Disjoint cycles, each starting at its least element, ordered by that
    /// element. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Builds a permutation of `[n]` from disjoint cycles; points not listed
    /// are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut w: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidSpec(format!(
                        "cycle entry {x} is out of range or repeated"
                    )));
                }
                seen[x] = true;
                w[x - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm(w))
    }

    pub fn exc(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &v)| v > i + 1).count()
    }

    pub fn des(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn inv(&self) -> usize {
        let mut count = 0;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn pos_n(&self) -> usize {
        let n = self.len();
        self.0.iter().position(|&v| v == n).map_or(0, |p| p + 1)
    }

    pub fn stats(&self) -> StatsA {
        let n = self.len();
        let exc = self.exc();
        let des = self.des();
        let inv = self.inv();
        StatsA {
            exc,
            nexc: n - exc,
            des,
            asc: n.saturating_sub(1) - des,
            inv,
            cyc: self.cycles().len(),
            fixed_points: self.0.iter().enumerate().filter(|&(i, &v)| v == i + 1).count(),
            sign: if inv.is_multiple_of(2) { 1 } else { -1 },
            pos_n: self.pos_n(),
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Perm(Vec::new()));
        }
        let window = s
            .split(',')
            .enumerate()
            .map(|(i, part)| {
                part.trim().parse::<usize>().map_err(|_| Error::InvalidWindow {
                    position: i + 1,
                    reason: format!("`{}` is not a positive integer", part.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::new(window)
    }
}
