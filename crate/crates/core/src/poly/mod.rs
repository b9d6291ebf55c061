//! Exact sparse multivariate polynomials with big-integer coefficients.
//!
//! Every generating function in the crate is a [`Poly`] over some subset of
//! the variables `s, t, u, q`. Variable lists are always kept in the
//! canonical order `s < t < u < q`; binary operations extend both operands
//! to the union of their variables, so mixing a univariate `t`-polynomial
//! with a bivariate one is well defined.
//!
//! Terms are stored in a `BTreeMap` keyed by exponent vectors, so iteration
//! is lexicographic in the declared variable order. Display and JSON output
//! walk the map in descending order, which puts the highest power of the
//! first variable first (`s^4 + 11*s^3*t + ...`).

mod gamma;
mod json;

pub use gamma::{
    gamma_decompose, gamma_decompose_q, gamma_recompose, gamma_recompose_q, palindrome_info,
    split_odd_length, GammaCoeff, GammaExpansion, PalindromeInfo, QPoly, VarMode,
};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    S,
    T,
    U,
    Q,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::T => "t",
            Var::U => "u",
            Var::Q => "q",
        }
    }

    pub fn parse(name: &str) -> Option<Var> {
        match name {
            "s" => Some(Var::S),
            "t" => Some(Var::T),
            "u" => Some(Var::U),
            "q" => Some(Var::Q),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sparse polynomial with arbitrary-precision integer coefficients.
///
/// Invariants: `vars` is sorted and duplicate free, every exponent vector has
/// length `vars.len()`, and no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: Vec<Var>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero(vars: &[Var]) -> Poly {
        let mut vars = vars.to_vec();
        vars.sort();
        vars.dedup();
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[Var], c: impl Into<BigInt>) -> Poly {
        let mut p = Poly::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            let len = p.vars.len();
            p.terms.insert(vec![0; len], c);
        }
        p
    }

    pub fn one(vars: &[Var]) -> Poly {
        Poly::constant(vars, 1)
    }

    /// The polynomial consisting of the single variable `v`.
    pub fn var(v: Var) -> Poly {
        Poly::monomial(&[(v, 1)], 1)
    }

    /// `coeff * prod v^e` over the given `(variable, exponent)` pairs.
    pub fn monomial(powers: &[(Var, u32)], coeff: impl Into<BigInt>) -> Poly {
        let vars: Vec<Var> = powers.iter().map(|&(v, _)| v).collect();
        let mut p = Poly::zero(&vars);
        let coeff = coeff.into();
        if coeff.is_zero() {
            return p;
        }
        let mut exp = vec![0; p.vars.len()];
        for &(v, e) in powers {
            let idx = p.index_of(v).expect("variable was just declared");
            exp[idx] += e;
        }
        p.terms.insert(exp, coeff);
        p
    }

    /// Builds `sum_k coeffs[k] * t^k`.
    pub fn from_t_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Poly {
        let mut p = Poly::zero(&[Var::T]);
        for (k, c) in coeffs.iter().enumerate() {
            let c: BigInt = c.clone().into();
            if !c.is_zero() {
                p.terms.insert(vec![k as u32], c);
            }
        }
        p
    }

    /// Builds the homogeneous `sum_k coeffs[k] * s^(degree-k) t^k`.
    pub fn homogeneous_st<C: Into<BigInt> + Clone>(degree: u32, coeffs: &[C]) -> Poly {
        assert!(coeffs.len() as u32 <= degree + 1, "too many coefficients");
        let mut p = Poly::zero(&[Var::S, Var::T]);
        for (k, c) in coeffs.iter().enumerate() {
            let c: BigInt = c.clone().into();
            if !c.is_zero() {
                p.terms.insert(vec![degree - k as u32, k as u32], c);
            }
        }
        p
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn index_of(&self, v: Var) -> Option<usize> {
        self.vars.iter().position(|&w| w == v)
    }

    /// Coefficient of the monomial `prod v^e`; variables not mentioned have
    /// exponent zero.
    pub fn coeff(&self, powers: &[(Var, u32)]) -> BigInt {
        let mut exp = vec![0; self.vars.len()];
        for &(v, e) in powers {
            match self.index_of(v) {
                Some(i) => exp[i] += e,
                None if e == 0 => {}
                None => return BigInt::zero(),
            }
        }
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Largest exponent of `v` in any term (0 for the zero polynomial).
    pub fn degree_in(&self, v: Var) -> u32 {
        match self.index_of(v) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Smallest exponent of `v` over all terms (0 for the zero polynomial).
    pub fn min_degree_in(&self, v: Var) -> u32 {
        match self.index_of(v) {
            Some(i) => self.terms.keys().map(|e| e[i]).min().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Returns the common total degree, or `NotHomogeneous` with two
    /// offending degrees. The zero polynomial is reported as degree 0.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let Some(first) = degrees.next() else {
            return Ok(0);
        };
        for d in degrees {
            if d != first {
                return Err(Error::NotHomogeneous { first, second: d });
            }
        }
        Ok(first)
    }

    /// Sum of all coefficients: the value at every variable equal to one.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Drops variables that occur with exponent zero in every term.
    pub fn trim_vars(&self) -> Poly {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        let vars: Vec<Var> = keep.iter().map(|&i| self.vars[i]).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c.clone()))
            .collect();
        Poly { vars, terms }
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable currently declared.
    pub fn with_vars(&self, vars: &[Var]) -> Poly {
        let target = Poly::zero(vars).vars;
        if target == self.vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|w| w == v)
                    .expect("target variable list must contain the source variables")
            })
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; target.len()];
                for (i, &x) in e.iter().enumerate() {
                    ne[map[i]] = x;
                }
                (ne, c.clone())
            })
            .collect();
        Poly {
            vars: target,
            terms,
        }
    }

    fn union_vars(&self, other: &Poly) -> Vec<Var> {
        let mut vars = self.vars.clone();
        vars.extend_from_slice(&other.vars);
        vars.sort();
        vars.dedup();
        vars
    }

    fn add_term(&mut self, exp: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Adds `c * x^exp` where `exp` is indexed like `self.vars()`.
    pub fn add_monomial(&mut self, exp: &[u32], c: impl Into<BigInt>) {
        assert_eq!(exp.len(), self.vars.len(), "exponent vector length");
        self.add_term(exp.to_vec(), c.into());
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Exact division of every coefficient by `d`; fails on the first
    /// coefficient that is not a multiple.
    pub fn div_exact(&self, d: &BigInt) -> Result<Poly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::OddCoefficient {
                    at: format_monomial(&self.vars, e),
                    value: c.to_string(),
                });
            }
            terms.insert(e.clone(), q);
        }
        Ok(Poly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Exact halving, the operation behind every `(X +- Y) / 2` identity.
    pub fn halve(&self) -> Result<Poly> {
        self.div_exact(&BigInt::from(2))
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Sets `v = 1` and removes it from the variable list.
    pub fn substitute_one(&self, v: Var) -> Result<Poly> {
        let idx = self.index_of(v).ok_or(Error::UnknownVariable(v))?;
        let mut vars = self.vars.clone();
        vars.remove(idx);
        let mut out = Poly::zero(&vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.remove(idx);
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Substitutes `v = 1` only when `v` is declared.
    pub fn specialize_one(&self, v: Var) -> Poly {
        self.substitute_one(v).unwrap_or_else(|_| self.clone())
    }

    pub fn derivative(&self, v: Var) -> Result<Poly> {
        let idx = self.index_of(v).ok_or(Error::UnknownVariable(v))?;
        let mut out = Poly::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[idx] -= 1;
            out.add_term(ne, c * BigInt::from(e[idx]));
        }
        Ok(out)
    }

    /// The operator `d/ds + d/dt`.
    pub fn apply_d(&self) -> Result<Poly> {
        let ds = self.derivative(Var::S)?;
        let dt = self.derivative(Var::T)?;
        Ok(&ds + &dt)
    }

    /// `k`-fold application of [`Poly::apply_d`].
    pub fn apply_d_pow(&self, k: u32) -> Result<Poly> {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.apply_d()?;
        }
        Ok(p)
    }

    /// Coefficients of `t^0 .. t^deg` after collapsing every other variable
    /// to one. Works on both `t`-polynomials and homogeneous `(s,t)` ones.
    pub fn t_coefficients(&self) -> Vec<BigInt> {
        let Some(i) = self.index_of(Var::T) else {
            return if self.is_zero() {
                Vec::new()
            } else {
                vec![self.eval_ones()]
            };
        };
        let deg = self.degree_in(Var::T) as usize;
        let mut out = vec![BigInt::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (e, c) in &self.terms {
            out[e[i] as usize] += c;
        }
        out
    }

    /// Every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

fn format_monomial(vars: &[Var], exp: &[u32]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(exp)
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = format_monomial(&self.vars, e);
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if mono == "1" {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<&str> = self.vars.iter().map(|v| v.name()).collect();
        write!(f, "Poly[{}]({})", vars.join(","), self)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let vars = self.union_vars(rhs);
        let mut out = self.with_vars(&vars);
        for (e, c) in rhs.with_vars(&vars).terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let vars = self.union_vars(rhs);
        let mut out = self.with_vars(&vars);
        for (e, c) in rhs.with_vars(&vars).terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let vars = self.union_vars(rhs);
        let a = self.with_vars(&vars);
        let b = rhs.with_vars(&vars);
        let mut out = Poly::zero(&vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(&[]), |acc, p| &acc + &p)
    }
}

/// Shorthands for the polynomials that appear everywhere: `s`, `t`, `st`,
/// `s + t` and `s - t`. All of them declare both `s` and `t`.
pub mod st {
    use super::{Poly, Var};

    pub fn s() -> Poly {
        Poly::monomial(&[(Var::S, 1), (Var::T, 0)], 1)
    }

    pub fn t() -> Poly {
        Poly::monomial(&[(Var::S, 0), (Var::T, 1)], 1)
    }

    pub fn st() -> Poly {
        Poly::monomial(&[(Var::S, 1), (Var::T, 1)], 1)
    }

    pub fn s_plus_t() -> Poly {
        &s() + &t()
    }

    pub fn s_minus_t() -> Poly {
        &s() - &t()
    }
}
