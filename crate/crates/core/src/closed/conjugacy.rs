use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::groups::{factorial, partitions, Class, CycleType, Parity, PartitionFilter};
use crate::poly::{Poly, Var};

use super::eulerian::eulerian_t;

/// Ways to split `[n]` into blocks whose sizes are the parts of `lambda`:
/// `n! / (prod lambda_i! * prod m_i!)`.
pub fn set_partition_count(lambda: &CycleType) -> BigInt {
    let mut denom = BigInt::from(1);
    for (part, m) in lambda.multiplicities() {
        denom *= factorial(part).pow(m as u32) * factorial(m);
    }
    factorial(lambda.n()) / denom
}

/// `sum t^exc` over a conjugacy class: the set-partition count times
/// `prod_{j >= 2} (t A_{j-1}(t))^{m_j}`.
pub fn conj_exc_closed(lambda: &CycleType) -> Result<Poly> {
    let t = Poly::var(Var::T);
    let mut p = Poly::constant(&[Var::T], set_partition_count(lambda));
    for (part, m) in lambda.multiplicities() {
        if part >= 2 {
            p = &p * &(&t * &eulerian_t(part - 1)?).pow(m as u32);
        }
    }
    Ok(p)
}

/// `sum t^exc` over permutations with exactly `fixed` fixed points
/// (derangements when `None`), restricted by sign, as a sum over conjugacy
/// classes.
pub fn derangement_closed(n: usize, class: Class, fixed: Option<usize>) -> Result<Poly> {
    let i = fixed.unwrap_or(0);
    if i > n {
        return Err(Error::InvalidSpec(format!("{i} fixed points exceed n = {n}")));
    }
    let parity = match class {
        Class::All => None,
        Class::Plus => Some(Parity::Even),
        Class::Minus => Some(Parity::Odd),
    };
    let filter = PartitionFilter::m1_equals(i).with_parity(parity);
    let mut total = Poly::zero(&[Var::T]);
    for lambda in partitions(n, filter) {
        total = &total + &conj_exc_closed(&lambda)?;
    }
    Ok(total)
}
