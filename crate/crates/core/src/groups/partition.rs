use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

use super::Perm;

/// An integer partition recording the cycle lengths of a permutation.
/// Parts are kept in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

/// Parity of a permutation, as a filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_sign(sign: i8) -> Parity {
        if sign > 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl CycleType {
    /// Accepts parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<CycleType> {
        if parts.contains(&0) {
            return Err(Error::InvalidSpec("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    pub fn of(perm: &Perm) -> CycleType {
        let parts = perm.cycles().iter().map(Vec::len).collect();
        CycleType::new(parts).expect("cycle lengths are positive")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// `m_i`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn fixed_points(&self) -> usize {
        self.multiplicity(1)
    }

    /// Sign of any permutation with this cycle type.
    pub fn sign(&self) -> i8 {
        if (self.n() - self.num_parts()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn parity(&self) -> Parity {
        Parity::of_sign(self.sign())
    }

    /// Distinct part sizes with multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `n! / prod(i^{m_i} m_i!)`.
    pub fn class_size(&self) -> BigInt {
        let mut denom = BigInt::one();
        for (i, m) in self.multiplicities() {
            denom *= BigInt::from(i).pow(m as u32) * factorial(m);
        }
        factorial(self.n()) / denom
    }

    /// Exponential notation, e.g. `1^2 2^1`; the empty partition prints `()`.
    pub fn exponential(&self) -> String {
        if self.parts.is_empty() {
            return "()".into();
        }
        let mut m = self.multiplicities();
        m.reverse();
        m.iter()
            .map(|(i, k)| format!("{i}^{k}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<CycleType> {
        let s = s.trim();
        if s.is_empty() {
            return CycleType::new(Vec::new());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSpec(format!("`{}` is not a partition part", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleType::new(parts)
    }
}

/// Constraints for [`partitions`]. The default admits everything.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PartitionFilter {
    /// Exact number of parts equal to 1.
    pub fixed_points: Option<usize>,
    pub parity: Option<Parity>,
}

impl PartitionFilter {
    pub fn all() -> PartitionFilter {
        PartitionFilter::default()
    }

    pub fn no_part_1() -> PartitionFilter {
        PartitionFilter {
            fixed_points: Some(0),
            parity: None,
        }
    }

    pub fn m1_equals(i: usize) -> PartitionFilter {
        PartitionFilter {
            fixed_points: Some(i),
            parity: None,
        }
    }

    pub fn with_parity(self, parity: Option<Parity>) -> PartitionFilter {
        PartitionFilter { parity, ..self }
    }

    pub fn accepts(&self, lambda: &CycleType) -> bool {
        self.fixed_points.is_none_or(|i| lambda.fixed_points() == i)
            && self.parity.is_none_or(|p| lambda.parity() == p)
    }
}

/// Partitions of `n` passing `filter`, in reverse lexicographic order
/// (`(n)` first, `(1^n)` last).
pub fn partitions(n: usize, filter: PartitionFilter) -> Vec<CycleType> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut |parts| {
        let lambda = CycleType {
            parts: parts.to_vec(),
        };
        if filter.accepts(&lambda) {
            out.push(lambda);
        }
    });
    out
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if rest == 0 {
        emit(cur);
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, emit);
        cur.pop();
    }
}
