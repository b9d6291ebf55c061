//! Polynomials that are not palindromic but are sums of two gamma-positive
//! ones whose centers differ by one.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::groups::Class;
use crate::oracle::Family;
use crate::poly::st::st;
use crate::poly::{gamma_decompose, gamma_recompose, split_odd_length, GammaExpansion, Poly, Var, VarMode};

use super::eulerian::{bdexc_closed, dexc_closed, eulerian, half_sum_closed, EulerType};

/// `target = w1 + w2`, both in `t` alone and both gamma positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTermSplit {
    pub w1: Poly,
    pub w2: Poly,
    pub g1: GammaExpansion,
    pub g2: GammaExpansion,
}

impl TwoTermSplit {
    pub fn centers(&self) -> (Ratio<u32>, Ratio<u32>) {
        (self.g1.center_of_symmetry(), self.g2.center_of_symmetry())
    }

    pub fn sum(&self) -> Poly {
        &self.w1 + &self.w2
    }
}

fn at_s1(p: &Poly) -> Result<Poly> {
    p.substitute_one(Var::S)
}

/// `(st D x)|_{s=1}` split into its low and high halves.
fn split_derivative_term(x: &Poly) -> Result<(Poly, Poly)> {
    let p = at_s1(&(&st() * &x.apply_d()?))?;
    let g = gamma_decompose(&p, VarMode::Univariate)?;
    let (lo, hi) = split_odd_length(&g)?;
    Ok((gamma_recompose(&lo), gamma_recompose(&hi)))
}

fn finish(w1: Poly, w2: Poly) -> Result<TwoTermSplit> {
    let g1 = gamma_decompose(&w1, VarMode::Univariate)?;
    let g2 = gamma_decompose(&w2, VarMode::Univariate)?;
    Ok(TwoTermSplit { w1, w2, g1, g2 })
}

/// Two-term splits of `AExc_n^+-` for even `n >= 4`, `BExc_n^+-` for odd
/// `n >= 3`, and the `inv_D` classes of `DExc_n` for odd `n >= 5`.
pub fn two_term_split(family: &Family, n: usize, class: Class) -> Result<TwoTermSplit> {
    let other = match class {
        Class::Plus => Class::Minus,
        Class::Minus => Class::Plus,
        Class::All => {
            return Err(Error::UnsupportedClass {
                family: family.name(),
                class: "all (two-term split)".into(),
            })
        }
    };
    let t = Poly::var(Var::T);
    let bad = || Error::PreconditionViolated(format!("no two-term split for {family} at n = {n}"));
    match family {
        Family::AExc if n >= 4 && n.is_multiple_of(2) => {
            let same = half_sum_closed(EulerType::A, n - 1, class)?;
            let opp = half_sum_closed(EulerType::A, n - 1, other)?;
            let (p1, p2) = split_derivative_term(&same)?;
            finish(&at_s1(&same)? + &p1, &(&t * &at_s1(&opp)?) + &p2)
        }
        Family::BExc if n >= 3 && n % 2 == 1 => {
            let same = half_sum_closed(EulerType::B, n - 1, class)?;
            let opp = half_sum_closed(EulerType::B, n - 1, other)?;
            let (p1, p2) = split_derivative_term(&eulerian(EulerType::B, n - 1)?)?;
            finish(&at_s1(&same)? + &p1, &(&t * &at_s1(&opp)?) + &p2)
        }
        Family::DExc if n >= 5 && n % 2 == 1 => {
            let same = dexc_closed(n - 1, class)?;
            let bd = bdexc_closed(n - 1)?;
            let (p1, p2) = split_derivative_term(&eulerian(EulerType::B, n - 1)?)?;
            let w1 = &at_s1(&same)? + &p1.halve()?;
            let w2 = (&(&t * &at_s1(&bd)?) + &p2).halve()?;
            finish(w1, w2)
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn target(family: &Family, n: usize, class: Class) -> Poly {
        let p = match family {
            Family::AExc => half_sum_closed(EulerType::A, n, class),
            Family::BExc => half_sum_closed(EulerType::B, n, class),
            _ => dexc_closed(n, class),
        };
        at_s1(&p.unwrap()).unwrap()
    }

    fn check(family: Family, ns: &[usize]) {
        for &n in ns {
            for class in [Class::Plus, Class::Minus] {
                let sp = two_term_split(&family, n, class).unwrap();
                assert_eq!(sp.sum(), target(&family, n, class), "{family} n = {n}");
                assert!(sp.g1.all_gammas_nonnegative() && sp.g2.all_gammas_nonnegative());
                let (c1, c2) = sp.centers();
                assert_eq!(c2 - c1, Ratio::from_integer(1));
            }
        }
    }

    #[test]
    fn a_splits() {
        check(Family::AExc, &[4, 6, 8, 10]);
        let sp = two_term_split(&Family::AExc, 4, Class::Plus).unwrap();
        assert_eq!(sp.w1, Poly::from_t_coeffs(&[1, 4, 1]));
        assert_eq!(sp.w2, Poly::from_t_coeffs(&[0, 0, 6]));
    }

    #[test]
    fn b_and_d_splits() {
        check(Family::BExc, &[3, 5, 7, 9]);
        check(Family::DExc, &[5, 7, 9]);
    }

    #[test]
    fn rejects_wrong_parity() {
        assert!(two_term_split(&Family::AExc, 5, Class::Plus).is_err());
        assert!(two_term_split(&Family::AExc, 4, Class::All).is_err());
    }
}
