//! Palindromicity and expansions in the gamma basis.
//!
//! A univariate palindromic polynomial whose nonzero coefficients run from
//! `t^r` to `t^n` is a unique combination of `t^(r+i) (1+t)^(n-r-2i)`.
//! A homogeneous bivariate polynomial of degree `n`, symmetric under
//! `s <-> t`, is a unique combination of `(st)^(r+i) (s+t)^(n-2r-2i)`.
//! Decomposition peels basis elements off from the lowest power of `t`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::{Poly, Var};
use crate::error::{Error, Result};

/// How the variables of a polynomial are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarMode {
    /// A polynomial in `t` alone.
    Univariate,
    /// A homogeneous polynomial in `s` and `t`.
    Bivariate,
}

/// Result of [`palindrome_info`]. `r` and `n` are the smallest and largest
/// exponents of `t` with nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromeInfo {
    pub is_palindromic: bool,
    pub r: u32,
    pub n: u32,
    pub cos: Ratio<u32>,
}

/// Coefficient ring for gamma expansions: plain integers, or polynomials in
/// `q` for the refined expansions.
pub trait GammaCoeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_coeff() -> Self;
    fn is_zero_coeff(&self) -> bool;
    /// `self += k * other`
    fn add_scaled(&mut self, other: &Self, k: &BigInt);
    /// Integer: `>= 0`. Polynomial: every coefficient `>= 0`.
    fn is_nonnegative(&self) -> bool;
}

impl GammaCoeff for BigInt {
    fn zero_coeff() -> Self {
        Zero::zero()
    }

    fn is_zero_coeff(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add_scaled(&mut self, other: &Self, k: &BigInt) {
        *self += other * k;
    }

    fn is_nonnegative(&self) -> bool {
        !self.is_negative()
    }
}

/// Dense univariate polynomial in `q`; `coeffs[j]` multiplies `q^j`. Trailing
/// zeros are trimmed, so the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly(pub Vec<BigInt>);

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> QPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::zero(&[Var::Q]);
        for (j, c) in self.0.iter().enumerate() {
            p.add_monomial(&[j as u32], c.clone());
        }
        p
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl GammaCoeff for QPoly {
    fn zero_coeff() -> Self {
        QPoly(Vec::new())
    }

    fn is_zero_coeff(&self) -> bool {
        self.0.is_empty()
    }

    fn add_scaled(&mut self, other: &Self, k: &BigInt) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), BigInt::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b * k;
        }
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }
}

/// Coordinates of a palindromic polynomial in the gamma basis.
///
/// Univariate: `sum_i gammas[i] * t^(r+i) (1+t)^(n-r-2i)`, where `n` is the
/// top `t`-degree. Bivariate: `sum_i gammas[i] * (st)^(r+i) (s+t)^(n-2r-2i)`,
/// where `n` is the total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaExpansion<C = BigInt> {
    pub mode: VarMode,
    pub r: u32,
    pub n: u32,
    pub gammas: Vec<C>,
}

impl<C: GammaCoeff> GammaExpansion<C> {
    /// Number of `(1+t)` factors in the leading basis element.
    pub fn length(&self) -> u32 {
        match self.mode {
            VarMode::Univariate => self.n - self.r,
            VarMode::Bivariate => self.n - 2 * self.r,
        }
    }

    /// Center of symmetry, as an exact (possibly half-integral) rational.
    pub fn center_of_symmetry(&self) -> Ratio<u32> {
        match self.mode {
            VarMode::Univariate => Ratio::new(self.n + self.r, 2),
            VarMode::Bivariate => Ratio::new(self.n, 2),
        }
    }

    pub fn all_gammas_nonnegative(&self) -> bool {
        self.gammas.iter().all(GammaCoeff::is_nonnegative)
    }

    /// The same coordinates read as the `s = 1` image: the univariate
    /// expansion of `f(1, t)`.
    pub fn to_univariate(&self) -> GammaExpansion<C> {
        match self.mode {
            VarMode::Univariate => self.clone(),
            VarMode::Bivariate => GammaExpansion {
                mode: VarMode::Univariate,
                r: self.r,
                n: self.n - self.r,
                gammas: self.gammas.clone(),
            },
        }
    }
}

impl<C: GammaCoeff> fmt::Display for GammaExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gammas: Vec<String> = self.gammas.iter().map(|g| g.to_string()).collect();
        write!(
            f,
            "r={} n={} cos={} gammas=({})",
            self.r,
            self.n,
            self.center_of_symmetry(),
            gammas.join(", ")
        )
    }
}

fn ensure_only(f: &Poly, allowed: &[Var]) -> Result<()> {
    for &v in f.vars() {
        if !allowed.contains(&v) && f.degree_in(v) > 0 {
            return Err(Error::UnexpectedVariable(v));
        }
    }
    Ok(())
}

/// First and last index holding a nonzero entry.
fn support<C: GammaCoeff>(a: &[C]) -> Option<(u32, u32)> {
    let r = a.iter().position(|c| !c.is_zero_coeff())?;
    let n = a.iter().rposition(|c| !c.is_zero_coeff())?;
    Some((r as u32, n as u32))
}

fn get<C: GammaCoeff>(a: &[C], i: u32) -> C {
    a.get(i as usize).cloned().unwrap_or_else(C::zero_coeff)
}

fn check_palindromic<C: GammaCoeff>(a: &[C], r: u32, n: u32) -> Result<()> {
    for i in 0..=(n - r) / 2 {
        let lo = get(a, r + i);
        let hi = get(a, n - i);
        if lo != hi {
            return Err(Error::NotPalindromic {
                low: r + i,
                high: n - i,
                low_coeff: lo.to_string(),
                high_coeff: hi.to_string(),
            });
        }
    }
    Ok(())
}

fn binomial_row(m: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for k in 0..m {
        let next = &row[k as usize] * BigInt::from(m - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// Peels `t^(r+i)(1+t)^(n-r-2i)` terms off a palindromic coefficient sequence.
fn peel<C: GammaCoeff>(a: &[C], r: u32, n: u32) -> Vec<C> {
    let mut residual: Vec<C> = (0..=n).map(|i| get(a, i)).collect();
    let len = n - r;
    let mut gammas = Vec::with_capacity((len / 2 + 1) as usize);
    for i in 0..=len / 2 {
        let g = residual[(r + i) as usize].clone();
        if !g.is_zero_coeff() {
            for (k, b) in binomial_row(len - 2 * i).iter().enumerate() {
                residual[(r + i) as usize + k].add_scaled(&g, &-b);
            }
        }
        gammas.push(g);
    }
    debug_assert!(residual.iter().all(GammaCoeff::is_zero_coeff));
    gammas
}

/// Palindromicity data in `t`-exponent terms.
///
/// In bivariate mode the polynomial must be homogeneous in `(s, t)`, and it
/// only counts as palindromic when it is also symmetric under `s <-> t`
/// (equivalently `r + n` equals the total degree).
pub fn palindrome_info(f: &Poly, mode: VarMode) -> Result<PalindromeInfo> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let total = match mode {
        VarMode::Univariate => {
            ensure_only(f, &[Var::T])?;
            None
        }
        VarMode::Bivariate => {
            ensure_only(f, &[Var::S, Var::T])?;
            Some(f.homogeneous_degree()?)
        }
    };
    let a = f.t_coefficients();
    let (r, n) = support(&a).ok_or(Error::ZeroPolynomial)?;
    let symmetric = total.is_none_or(|d| r + n == d);
    Ok(PalindromeInfo {
        is_palindromic: symmetric && check_palindromic(&a, r, n).is_ok(),
        r,
        n,
        cos: Ratio::new(r + n, 2),
    })
}

/// Exact gamma coordinates of a palindromic polynomial.
pub fn gamma_decompose(f: &Poly, mode: VarMode) -> Result<GammaExpansion> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match mode {
        VarMode::Univariate => {
            ensure_only(f, &[Var::T])?;
            let a = f.t_coefficients();
            let (r, n) = support(&a).ok_or(Error::ZeroPolynomial)?;
            check_palindromic(&a, r, n)?;
            Ok(GammaExpansion {
                mode,
                r,
                n,
                gammas: peel(&a, r, n),
            })
        }
        VarMode::Bivariate => {
            ensure_only(f, &[Var::S, Var::T])?;
            let total = f.homogeneous_degree()?;
            let a = f.t_coefficients();
            let (r, top) = support(&a).ok_or(Error::ZeroPolynomial)?;
            if r + top != total {
                // Not symmetric under s <-> t: report the pair the swap
                // would have to match.
                let (low, high) = (r.min(total - top), total - r.min(total - top));
                return Err(Error::NotPalindromic {
                    low,
                    high,
                    low_coeff: get(&a, low).to_string(),
                    high_coeff: get(&a, high).to_string(),
                });
            }
            check_palindromic(&a, r, top)?;
            Ok(GammaExpansion {
                mode,
                r,
                n: total,
                gammas: peel(&a, r, top),
            })
        }
    }
}

/// Gamma coordinates of a polynomial in `t` whose coefficients are
/// polynomials in `q`.
pub fn gamma_decompose_q(f: &Poly) -> Result<GammaExpansion<QPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    ensure_only(f, &[Var::T, Var::Q])?;
    let ti = f.index_of(Var::T);
    let qi = f.index_of(Var::Q);
    let mut raw: Vec<Vec<BigInt>> = vec![Vec::new(); f.degree_in(Var::T) as usize + 1];
    for (e, c) in f.terms() {
        let tj = ti.map_or(0, |i| e[i]) as usize;
        let qj = qi.map_or(0, |i| e[i]) as usize;
        let slot = &mut raw[tj];
        if slot.len() <= qj {
            slot.resize(qj + 1, BigInt::zero());
        }
        slot[qj] += c;
    }
    let a: Vec<QPoly> = raw.into_iter().map(QPoly::new).collect();
    let (r, n) = support(&a).ok_or(Error::ZeroPolynomial)?;
    check_palindromic(&a, r, n)?;
    Ok(GammaExpansion {
        mode: VarMode::Univariate,
        r,
        n,
        gammas: peel(&a, r, n),
    })
}

fn basis_element(mode: VarMode, r: u32, n: u32, i: u32) -> Poly {
    let s = Poly::var(Var::S);
    let t = Poly::var(Var::T);
    match mode {
        VarMode::Univariate => {
            let one_plus_t = &Poly::one(&[Var::T]) + &t;
            &t.pow(r + i) * &one_plus_t.pow(n - r - 2 * i)
        }
        VarMode::Bivariate => {
            let st = &s * &t;
            &st.pow(r + i) * &(&s + &t).pow(n - 2 * r - 2 * i)
        }
    }
}

pub fn gamma_recompose(g: &GammaExpansion) -> Poly {
    let vars: &[Var] = match g.mode {
        VarMode::Univariate => &[Var::T],
        VarMode::Bivariate => &[Var::S, Var::T],
    };
    let mut out = Poly::zero(vars);
    for (i, gamma) in g.gammas.iter().enumerate() {
        if !gamma.is_zero() {
            out = &out + &basis_element(g.mode, g.r, g.n, i as u32).scale(gamma);
        }
    }
    out
}

pub fn gamma_recompose_q(g: &GammaExpansion<QPoly>) -> Poly {
    let mut out = Poly::zero(&[Var::T, Var::Q]);
    for (i, gamma) in g.gammas.iter().enumerate() {
        if !gamma.is_zero_coeff() {
            out = &out + &(&basis_element(g.mode, g.r, g.n, i as u32) * &gamma.to_poly());
        }
    }
    out
}

/// Splits an odd-length gamma positive expansion into two even-length gamma
/// positive ones whose centers are half a unit below and above the original.
///
/// Each basis element is split with `(1+t)^(2k+1) = (1+t)^(2k) + t(1+t)^(2k)`,
/// so both parts reuse the original coordinates. Bivariate input is split as
/// its `s = 1` image; both outputs are univariate.
pub fn split_odd_length(g: &GammaExpansion) -> Result<(GammaExpansion, GammaExpansion)> {
    let g = g.to_univariate();
    let len = g.length();
    if len % 2 == 0 {
        return Err(Error::EvenLength(len));
    }
    if let Some((index, value)) = g.gammas.iter().enumerate().find(|(_, c)| c.is_negative()) {
        return Err(Error::NotGammaPositive {
            index,
            value: value.to_string(),
        });
    }
    let low = GammaExpansion {
        mode: VarMode::Univariate,
        r: g.r,
        n: g.n - 1,
        gammas: g.gammas.clone(),
    };
    let high = GammaExpansion {
        mode: VarMode::Univariate,
        r: g.r + 1,
        n: g.n,
        gammas: g.gammas,
    };
    Ok((low, high))
}
