//! JSON encoding. Coefficients are decimal strings so that values beyond
//! 64 bits survive any JSON reader.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use super::gamma::{GammaExpansion, QPoly, VarMode};
use super::{Poly, Var};

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            vars: self.vars.iter().map(|v| v.name().to_string()).collect(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermRepr {
                    exp: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Poly, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let vars = repr
            .vars
            .iter()
            .map(|name| Var::parse(name).ok_or_else(|| D::Error::custom(format!("unknown variable `{name}`"))))
            .collect::<Result<Vec<Var>, _>>()?;
        let mut sorted = vars.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != vars.len() {
            return Err(D::Error::custom("duplicate variable"));
        }
        let mut p = Poly::zero(&vars);
        for term in repr.terms {
            if term.exp.len() != vars.len() {
                return Err(D::Error::custom("exponent vector length does not match vars"));
            }
            let c = BigInt::from_str(&term.coeff).map_err(D::Error::custom)?;
            // map from the declared order onto the canonical order
            let mut exp = vec![0; vars.len()];
            for (v, e) in vars.iter().zip(&term.exp) {
                exp[p.index_of(*v).expect("declared")] = *e;
            }
            p.add_monomial(&exp, c);
        }
        Ok(p)
    }
}

impl GammaExpansion<BigInt> {
    /// `{"r":..,"n":..,"gammas":["..",..]}`
    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r,
            "n": self.n,
            "gammas": self.gammas.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })
    }

    /// Inverse of [`GammaExpansion::to_json`]; the basis is not part of the
    /// encoding and has to be supplied.
    pub fn from_json(value: &Value, mode: VarMode) -> Option<GammaExpansion> {
        let r = value.get("r")?.as_u64()? as u32;
        let n = value.get("n")?.as_u64()? as u32;
        let gammas = value
            .get("gammas")?
            .as_array()?
            .iter()
            .map(|g| BigInt::from_str(g.as_str()?).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(GammaExpansion { mode, r, n, gammas })
    }
}

impl GammaExpansion<QPoly> {
    /// Like the integer encoding, with each gamma given as its list of
    /// `q`-coefficients.
    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r,
            "n": self.n,
            "gammas": self
                .gammas
                .iter()
                .map(|g| g.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}
