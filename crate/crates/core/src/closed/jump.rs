//! Jumps of four in `n`: the level-`n+4` polynomials as fixed
//! gamma-positive multipliers applied to level-`n` data.

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::groups::Class;
use crate::oracle::Family;
use crate::poly::st::{s_minus_t, s_plus_t, st};
use crate::poly::{gamma_recompose, GammaExpansion, Poly, VarMode};

use super::eulerian::{eulerian, EulerType};

/// `L_1..L_6` (type A) and `R_1..R_7` (type D).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpTables {
    pub l: Vec<Poly>,
    pub r: Vec<Poly>,
}

/// Centers of symmetry of `L_1..L_6`.
pub fn l_centers() -> [Ratio<u32>; 6] {
    [(4, 2), (4, 2), (5, 2), (6, 2), (7, 2), (8, 2)].map(|(a, b)| Ratio::new(a, b))
}

/// Centers of symmetry of `R_1..R_7`.
pub fn r_centers() -> [Ratio<u32>; 7] {
    [(4, 2), (4, 2), (5, 2), (6, 2), (4, 2), (5, 2), (4, 2)].map(|(a, b)| Ratio::new(a, b))
}

fn term(c: i64, st_pow: u32, sum_pow: u32) -> Poly {
    (&st().pow(st_pow) * &s_plus_t().pow(sum_pow)).scale(&BigInt::from(c))
}

fn sum(terms: &[(i64, u32, u32)]) -> Poly {
    terms.iter().map(|&(c, a, b)| term(c, a, b)).sum()
}

pub fn jump_tables() -> JumpTables {
    let l = vec![
        sum(&[(1, 0, 4), (7, 1, 2), (16, 2, 0)]),
        sum(&[(15, 1, 2)]),
        &term(15, 1, 1) * &Poly::homogeneous_st(2, &[1, 6, 1]),
        sum(&[(25, 2, 2), (20, 3, 0)]),
        sum(&[(10, 3, 1)]),
        sum(&[(1, 4, 0)]),
    ];
    let r = vec![
        sum(&[(1, 0, 4), (8, 1, 2), (16, 2, 0)]),
        sum(&[(16, 1, 2)]),
        sum(&[(4, 1, 3), (32, 2, 1)]),
        sum(&[(2, 2, 2), (8, 3, 0)]),
        sum(&[(12, 1, 2)]),
        sum(&[(8, 2, 1)]),
        sum(&[(2, 2, 0)]),
    ];
    JumpTables { l, r }
}

/// `AExc_{n+4}^+-` from `(AExc_n^+, AExc_n^-)`:
/// `P_{n+4} = L1 P + L2 M + L3 DP + L4 D^2P + L5 D^3P + L6 D^4P`, where `P`
/// is the polynomial of the same class and `M` the other one.
pub fn jump4_a(plus: &Poly, minus: &Poly) -> Result<(Poly, Poly)> {
    let tables = jump_tables();
    let l = &tables.l;
    // D AExc^+ = D AExc^-, so the derivative terms are shared.
    let mut shared = Poly::zero(plus.vars());
    let mut dp = plus.clone();
    for li in &l[2..] {
        dp = dp.apply_d()?;
        shared = &shared + &(li * &dp);
    }
    let np = &(&(&l[0] * plus) + &(&l[1] * minus)) + &shared;
    let nm = &(&(&l[0] * minus) + &(&l[1] * plus)) + &shared;
    Ok((np, nm))
}

/// `S_{n+4} = R2 (B-D)Exc_n + (R3 D + R4 D^2) B_n + (R5 D + R6 D^2) B_{n+1}
/// + R7 D^2 B_{n+2}`, given `DExc_n`.
pub fn s_term(n: usize, dexc: &Poly) -> Result<Poly> {
    let r = jump_tables().r;
    let b0 = eulerian(EulerType::B, n)?;
    let b1 = eulerian(EulerType::B, n + 1)?;
    let b2 = eulerian(EulerType::B, n + 2)?;
    let bd = &b0 - dexc;
    let parts = [
        &r[1] * &bd,
        &r[2] * &b0.apply_d()?,
        &r[3] * &b0.apply_d_pow(2)?,
        &r[4] * &b1.apply_d()?,
        &r[5] * &b1.apply_d_pow(2)?,
        &r[6] * &b2.apply_d_pow(2)?,
    ];
    Ok(parts.into_iter().sum())
}

/// `DExc_{n+4}^+-` from `(DExc_n^+, DExc_n^-)`:
/// `1/2 ([R1 +- (s-t)^4] P + [R1 -+ (s-t)^4] M + S_{n+4})`.
pub fn jump4_d(n: usize, plus: &Poly, minus: &Poly) -> Result<(Poly, Poly)> {
    let r1 = &jump_tables().r[0];
    let q = s_minus_t().pow(4);
    let s = s_term(n, &(plus + minus))?;
    let hi = r1 + &q;
    let lo = r1 - &q;
    let np = (&(&(&hi * plus) + &(&lo * minus)) + &s).halve()?;
    let nm = (&(&(&lo * plus) + &(&hi * minus)) + &s).halve()?;
    Ok((np, nm))
}

fn biv(r: u32, n: u32, gammas: &[i64]) -> Poly {
    gamma_recompose(&GammaExpansion {
        mode: VarMode::Bivariate,
        r,
        n,
        gammas: gammas.iter().map(|&g| BigInt::from(g)).collect(),
    })
}

/// Published `(AExc_n^+, AExc_n^-)` for `n = 5, 7`.
pub fn published_base_a(n: usize) -> Option<(Poly, Poly)> {
    match n {
        5 => Some((biv(0, 4, &[1, 7, 16]), biv(1, 4, &[15, 0]))),
        7 => Some((biv(0, 6, &[1, 51, 384, 104]), biv(1, 6, &[63, 336, 168]))),
        _ => None,
    }
}

/// Published `(DExc_n^+, DExc_n^-)` for `n = 4, 6`.
pub fn published_base_d(n: usize) -> Option<(Poly, Poly)> {
    match n {
        4 => Some((biv(0, 4, &[1, 12, 32]), biv(1, 4, &[20, 16]))),
        6 => Some((biv(0, 6, &[1, 170, 1952, 928]), biv(1, 6, &[182, 1904, 992]))),
        _ => None,
    }
}

/// Level-`n` value reached by jumping from the published bases: `AExc` at
/// odd `n >= 5`, `DExc` at even `n >= 4`.
pub fn jump4(family: &Family, n: usize, class: Class) -> Result<Poly> {
    let missing = || Error::MissingBase {
        family: family.name(),
        n: n as u32,
    };
    let (base, step): (fn(usize) -> Option<(Poly, Poly)>, bool) = match family {
        Family::AExc => (published_base_a, true),
        Family::DExc => (published_base_d, false),
        _ => return Err(missing()),
    };
    let mut start = n;
    while base(start).is_none() {
        start = start.checked_sub(4).filter(|&k| k > 0).ok_or_else(missing)?;
    }
    let (mut p, mut m) = base(start).expect("loop ended on a base");
    let mut k = start;
    while k < n {
        (p, m) = if step { jump4_a(&p, &m)? } else { jump4_d(k, &p, &m)? };
        k += 4;
    }
    Ok(match class {
        Class::All => &p + &m,
        Class::Plus => p,
        Class::Minus => m,
    })
}
