use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::groups::Class;
use crate::oracle::Family;
use crate::poly::st::{s, st, t};
use crate::poly::{Poly, Var};

use super::eulerian::{half_split, signed_closed, SignedKind};
use super::ST;

fn pick(pair: (Poly, Poly), class: Class) -> Poly {
    match class {
        Class::All => &pair.0 + &pair.1,
        Class::Plus => pair.0,
        Class::Minus => pair.1,
    }
}

/// `(AExc_n^+, AExc_n^-)` from
/// `AExc_n^+- = s AExc_{n-1}^+- + t AExc_{n-1}^-+ + 1/2 st D A_{n-1}`,
/// starting at `AExc_2^+- = (s, t)`.
pub fn step_a(n: usize) -> Result<(Poly, Poly)> {
    match n {
        0 => Err(Error::InvalidSpec("AExc_n needs n >= 1".into())),
        1 => Ok((Poly::one(&ST), Poly::zero(&ST))),
        _ => {
            let (mut p, mut m) = (s(), t());
            for _ in 3..=n {
                let shared = (&st() * &(&p + &m).apply_d()?).halve()?;
                let np = &(&s() * &p) + &(&(&t() * &m) + &shared);
                let nm = &(&s() * &m) + &(&(&t() * &p) + &shared);
                (p, m) = (np, nm);
            }
            Ok((p, m))
        }
    }
}

/// `(BExc_n^+, BExc_n^-)` from
/// `BExc_n^+- = s BExc_{n-1}^+- + t BExc_{n-1}^-+ + st D B_{n-1}`,
/// starting at `BExc_1^+- = (s, t)`.
pub fn step_b(n: usize) -> Result<(Poly, Poly)> {
    if n == 0 {
        return Ok((Poly::one(&ST), Poly::zero(&ST)));
    }
    let (mut p, mut m) = (s(), t());
    for _ in 2..=n {
        let shared = &st() * &(&p + &m).apply_d()?;
        let np = &(&s() * &p) + &(&(&t() * &m) + &shared);
        let nm = &(&s() * &m) + &(&(&t() * &p) + &shared);
        (p, m) = (np, nm);
    }
    Ok((p, m))
}

/// `(DExc_n, (B-D)Exc_n)` from
/// `DExc_n = s DExc_{n-1} + t (B-D)Exc_{n-1} + st D BExc_{n-1}` and
/// `(B-D)Exc_n = t DExc_{n-1} + s (B-D)Exc_{n-1} + st D BExc_{n-1}`,
/// starting at `DExc_2 = s^2 + 2st + t^2`, `(B-D)Exc_2 = 4st`.
pub fn step_d(n: usize) -> Result<(Poly, Poly)> {
    match n {
        0 => return Ok((Poly::one(&ST), Poly::zero(&ST))),
        1 => return Ok((s(), t())),
        _ => {}
    }
    let mut d = Poly::homogeneous_st(2, &[1, 2, 1]);
    let mut bd = Poly::homogeneous_st(2, &[0, 4, 0]);
    for _ in 3..=n {
        let shared = &st() * &(&d + &bd).apply_d()?;
        let nd = &(&s() * &d) + &(&(&t() * &bd) + &shared);
        let nbd = &(&t() * &d) + &(&(&s() * &bd) + &shared);
        (d, bd) = (nd, nbd);
    }
    Ok((d, bd))
}

/// Dispatches to the step recurrence for `AExc`, `BExc`, `DExc` and
/// `BDExc`. The `inv_D` split of `DExc` halves `DExc_n +- SgnDExc_n`.
pub fn step_recurrence(family: &Family, n: usize, class: Class) -> Result<Poly> {
    match family {
        Family::AExc => Ok(pick(step_a(n)?, class)),
        Family::BExc => Ok(pick(step_b(n)?, class)),
        Family::DExc => {
            let (d, _) = step_d(n)?;
            half_split(&d, &signed_closed(SignedKind::D, n)?, class)
        }
        Family::BDExc if class == Class::All => Ok(step_d(n)?.1),
        _ => Err(Error::UnsupportedClass {
            family: family.name(),
            class: format!("{class} (step recurrence)"),
        }),
    }
}

/// Coefficients of `AExc_n^+-(t)` row by row: entry `[n][k]` is the
/// coefficient of `t^k`, for `0 <= k < n`. Row 0 is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    pub plus: Vec<Vec<BigInt>>,
    pub minus: Vec<Vec<BigInt>>,
}

impl CoeffTable {
    pub fn row(&self, n: usize, class: Class) -> Option<Vec<BigInt>> {
        let plus = self.plus.get(n)?;
        let minus = self.minus.get(n)?;
        Some(match class {
            Class::Plus => plus.clone(),
            Class::Minus => minus.clone(),
            Class::All => plus.iter().zip(minus).map(|(a, b)| a + b).collect(),
        })
    }
}

/// Fills the table with
/// `a^+_{n,k} = k a^-_{n-1,k} + (n-k) a^-_{n-1,k-1} + a^+_{n-1,k}` and the
/// same with `+` and `-` exchanged, from row 1 = `(1)`, `(0)`.
pub fn coeff_tables(n_max: usize) -> CoeffTable {
    let mut plus = vec![Vec::new()];
    let mut minus = vec![Vec::new()];
    if n_max >= 1 {
        plus.push(vec![BigInt::from(1)]);
        minus.push(vec![BigInt::from(0)]);
    }
    let at = |row: &Vec<BigInt>, k: isize| -> BigInt {
        if k < 0 {
            BigInt::from(0)
        } else {
            row.get(k as usize).cloned().unwrap_or_default()
        }
    };
    for n in 2..=n_max {
        let (pp, pm) = (&plus[n - 1], &minus[n - 1]);
        let next = |same: &Vec<BigInt>, other: &Vec<BigInt>| -> Vec<BigInt> {
            (0..n as isize)
                .map(|k| {
                    BigInt::from(k) * at(other, k)
                        + BigInt::from(n as isize - k) * at(other, k - 1)
                        + at(same, k)
                })
                .collect()
        };
        let np = next(pp, pm);
        let nm = next(pm, pp);
        plus.push(np);
        minus.push(nm);
    }
    CoeffTable { plus, minus }
}

/// `t`-coefficients of a homogeneous `(s,t)` polynomial of degree `n - 1`,
/// padded to length `n`.
pub fn coefficient_row(p: &Poly, n: usize) -> Vec<BigInt> {
    let mut row = p.specialize_one(Var::S).t_coefficients();
    row.resize(n, BigInt::from(0));
    row
}
