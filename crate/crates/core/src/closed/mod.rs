//! Closed forms and recurrences: every family without enumeration.

mod conjugacy;
mod eulerian;
mod jump;
mod recurrence;
mod split;

pub use conjugacy::{conj_exc_closed, derangement_closed, set_partition_count};
pub use eulerian::{
    bdexc_closed, dexc_closed, eulerian, eulerian_t, half_sum_closed, sgnb_des_u_closed,
    signed_closed, EulerType, SignedKind,
};
pub use jump::{
    jump4, jump4_a, jump4_d, jump_tables, l_centers, published_base_a, published_base_d,
    r_centers, s_term, JumpTables,
};
pub use recurrence::{
    coeff_tables, coefficient_row, step_a, step_b, step_d, step_recurrence, CoeffTable,
};
pub use split::{two_term_split, TwoTermSplit};

use crate::error::{Error, Result};
use crate::oracle::{Family, FamilySpec};
use crate::poly::{Poly, Var};

const ST: [Var; 2] = [Var::S, Var::T];

/// The closed-form value of a family, over the same variables the oracle
/// uses.
pub fn family_closed(spec: &FamilySpec) -> Result<Poly> {
    let FamilySpec { family, n, class } = spec;
    let (n, class) = (*n, *class);
    // reuse the oracle's validation of class and parameters
    spec.pairing()?;
    let p = match family {
        Family::ADes => eulerian(EulerType::A, n)?,
        Family::AExc => half_sum_closed(EulerType::A, n, class)?,
        Family::BDes | Family::BExc => half_sum_closed(EulerType::B, n, class)?,
        Family::DExc => dexc_closed(n, class)?,
        Family::BDExc => bdexc_closed(n)?,
        Family::ADerExc => derangement_closed(n, class, None)?,
        Family::ADerExcFixed(i) => derangement_closed(n, class, Some(*i))?,
        Family::ConjExc(lambda) => conj_exc_closed(lambda)?,
        Family::SgnAExc => signed_closed(SignedKind::A, n)?,
        Family::SgnBExc => signed_closed(SignedKind::B, n)?,
        Family::SgnDExc => signed_closed(SignedKind::D, n)?,
        Family::SgnBDesU => sgnb_des_u_closed(n),
        Family::QRefined(_) => {
            return Err(Error::InvalidSpec(format!(
                "{} has no closed form; use the oracle",
                family.name()
            )))
        }
    };
    let (_, weight) = spec.pairing()?;
    Ok(p.with_vars(&weight.vars()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Class;
    use crate::oracle::family_poly;

    #[test]
    fn closed_matches_oracle_on_small_cases() {
        let families = [
            Family::ADes,
            Family::AExc,
            Family::BDes,
            Family::BExc,
            Family::DExc,
            Family::BDExc,
            Family::ADerExc,
            Family::ADerExcFixed(1),
            Family::SgnAExc,
            Family::SgnBExc,
            Family::SgnDExc,
            Family::SgnBDesU,
        ];
        for f in families {
            for n in 1..=4 {
                for class in [Class::All, Class::Plus, Class::Minus] {
                    let spec = FamilySpec::new(f.clone(), n, class);
                    match family_poly(&spec) {
                        Ok(oracle) => assert_eq!(family_closed(&spec).unwrap(), oracle, "{spec}"),
                        Err(Error::UnsupportedClass { .. }) => {
                            assert!(family_closed(&spec).is_err())
                        }
                        Err(e) => panic!("{spec}: {e}"),
                    }
                }
            }
        }
    }
}
