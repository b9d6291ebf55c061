use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::groups::Class;
use crate::poly::st::{s, s_minus_t, s_plus_t, st};
use crate::poly::{Poly, Var};

use super::ST;

/// Which Eulerian polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerType {
    /// `A_n(s,t)`, homogeneous of degree `n - 1`.
    A,
    /// `B_n(s,t)`, homogeneous of degree `n`.
    B,
}

/// Bivariate Eulerian polynomial by insertion:
/// `A_{n+1} = (s+t) A_n + st D A_n` from `A_1 = 1`, and
/// `B_{n+1} = (s+t) B_n + 2st D B_n` from `B_0 = 1`.
pub fn eulerian(ty: EulerType, n: usize) -> Result<Poly> {
    let (mut p, start, k) = match ty {
        EulerType::A if n == 0 => return Err(Error::InvalidSpec("A_n needs n >= 1".into())),
        EulerType::A => (Poly::one(&ST), 1, 1),
        EulerType::B => (Poly::one(&ST), 0, 2),
    };
    let k = BigInt::from(k);
    for _ in start..n {
        p = &s_plus_t() * &p + (&st() * &p.apply_d()?).scale(&k);
    }
    Ok(p)
}

/// `A_n(t)`, the classical Eulerian polynomial in `t` alone.
pub fn eulerian_t(n: usize) -> Result<Poly> {
    eulerian(EulerType::A, n)?.substitute_one(Var::S)
}

/// `(s - t)^d` over `(s, t)`.
pub(crate) fn s_minus_t_pow(d: usize) -> Poly {
    s_minus_t().pow(d as u32).with_vars(&ST)
}

/// `1/2 (G_n +- (s-t)^d)` with `(G, d) = (A_n, n-1)` or `(B_n, n)`; the
/// class `all` returns `G_n` itself.
pub fn half_sum_closed(ty: EulerType, n: usize, class: Class) -> Result<Poly> {
    let g = eulerian(ty, n)?;
    let d = match ty {
        EulerType::A => n - 1,
        EulerType::B => n,
    };
    half_split(&g, &s_minus_t_pow(d), class)
}

/// `1/2 (total +- signed)`, or `total` for the class `all`.
pub(crate) fn half_split(total: &Poly, signed: &Poly, class: Class) -> Result<Poly> {
    match class {
        Class::All => Ok(total.clone()),
        Class::Plus => (total + signed).halve(),
        Class::Minus => (total - signed).halve(),
    }
}

/// Signed sums `sum (-1)^len t^exc s^nexc` in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignedKind {
    /// `(s-t)^(n-1)` over `S_n`.
    A,
    /// `(s-t)^n` over `B_n`.
    B,
    /// `(s-t)^n` for even `n`, `s (s-t)^(n-1)` for odd `n`, over `D_n`.
    D,
}

pub fn signed_closed(kind: SignedKind, n: usize) -> Result<Poly> {
    Ok(match kind {
        SignedKind::A if n == 0 => return Err(Error::InvalidSpec("S_0 has no s^(nexc-1) weight".into())),
        SignedKind::A => s_minus_t_pow(n - 1),
        SignedKind::B => s_minus_t_pow(n),
        SignedKind::D if n.is_multiple_of(2) => s_minus_t_pow(n),
        SignedKind::D => &s() * &s_minus_t_pow(n - 1),
    })
}

/// `(s-t)^n u^n`, the signed descent sum over `B_n` refined by the position
/// of `+-n`.
pub fn sgnb_des_u_closed(n: usize) -> Poly {
    let u = Poly::monomial(&[(Var::U, n as u32)], 1);
    (&s_minus_t_pow(n) * &u).with_vars(&[Var::S, Var::T, Var::U])
}

/// `DExc_n` for `all`, and its split by the parity of `inv_D`.
/// `DExc_n` coincides with `BExc_n^+`.
pub fn dexc_closed(n: usize, class: Class) -> Result<Poly> {
    let total = half_sum_closed(EulerType::B, n, Class::Plus)?;
    half_split(&total, &signed_closed(SignedKind::D, n)?, class)
}

/// `(B-D)Exc_n`, which coincides with `BExc_n^-`.
pub fn bdexc_closed(n: usize) -> Result<Poly> {
    half_sum_closed(EulerType::B, n, Class::Minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::st::t;

    #[test]
    fn small_eulerian() {
        assert_eq!(eulerian(EulerType::A, 1).unwrap(), Poly::one(&ST));
        assert_eq!(eulerian(EulerType::A, 3).unwrap(), Poly::homogeneous_st(2, &[1, 4, 1]));
        assert_eq!(eulerian(EulerType::B, 2).unwrap(), Poly::homogeneous_st(2, &[1, 6, 1]));
        assert_eq!(eulerian_t(4).unwrap(), Poly::from_t_coeffs(&[1, 11, 11, 1]));
        assert!(eulerian(EulerType::A, 0).is_err());
    }

    #[test]
    fn half_sums() {
        assert_eq!(
            half_sum_closed(EulerType::A, 5, Class::Plus).unwrap(),
            Poly::homogeneous_st(4, &[1, 11, 36, 11, 1])
        );
        assert_eq!(half_sum_closed(EulerType::A, 2, Class::Plus).unwrap(), s());
        assert_eq!(half_sum_closed(EulerType::A, 2, Class::Minus).unwrap(), t());
        assert_eq!(
            half_sum_closed(EulerType::B, 2, Class::Minus).unwrap(),
            Poly::homogeneous_st(2, &[0, 4, 0])
        );
    }

    #[test]
    fn type_d_values() {
        assert_eq!(
            dexc_closed(4, Class::Minus).unwrap(),
            Poly::homogeneous_st(4, &[0, 20, 56, 20, 0])
        );
        assert_eq!(
            dexc_closed(6, Class::Plus).unwrap(),
            Poly::homogeneous_st(6, &[1, 176, 2647, 5872, 2647, 176, 1])
        );
        assert_eq!(bdexc_closed(2).unwrap(), Poly::homogeneous_st(2, &[0, 4, 0]));
    }
}
