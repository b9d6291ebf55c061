//! Generating functions by exhaustive enumeration.
//!
//! Every family is a sum of one monomial per group element. A
//! [`WeightSpec`] says which statistic feeds which variable; a
//! [`GroupSpec`] says which elements are summed. The A-type excedance
//! families weight by `s^(nexc - 1)`, the B- and D-type ones by `s^nexc`;
//! the offset lives in the weight, not in the family name.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groups::{Budget, Class, CycleType, Element, ElementKind, GroupSpec};
use crate::poly::{Poly, Var};

/// A statistic of a group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stat {
    Exc,
    Nexc,
    Des,
    Asc,
    Inv,
    Cyc,
    FixedPoints,
    PosN,
    ExcB,
    NexcB,
    WkexcB,
    DesB,
    AscB,
    InvB,
    /// `inv + sum of |w_i|` over negative entries.
    InvBNegsum,
    Negs,
    PosLast,
    ExcD,
    NexcD,
    WkexcD,
    InvD,
}

impl Stat {
    pub fn name(self) -> &'static str {
        match self {
            Stat::Exc => "exc",
            Stat::Nexc => "nexc",
            Stat::Des => "des",
            Stat::Asc => "asc",
            Stat::Inv => "inv",
            Stat::Cyc => "cyc",
            Stat::FixedPoints => "fixed_points",
            Stat::PosN => "pos_n",
            Stat::ExcB => "exc_B",
            Stat::NexcB => "nexc_B",
            Stat::WkexcB => "wkexc_B",
            Stat::DesB => "des_B",
            Stat::AscB => "asc_B",
            Stat::InvB => "inv_B",
            Stat::InvBNegsum => "inv_B_negsum",
            Stat::Negs => "negs",
            Stat::PosLast => "pos_last",
            Stat::ExcD => "exc_D",
            Stat::NexcD => "nexc_D",
            Stat::WkexcD => "wkexc_D",
            Stat::InvD => "inv_D",
        }
    }

    fn kind(self) -> ElementKind {
        match self {
            Stat::Exc
            | Stat::Nexc
            | Stat::Des
            | Stat::Asc
            | Stat::Inv
            | Stat::Cyc
            | Stat::FixedPoints
            | Stat::PosN => ElementKind::Unsigned,
            _ => ElementKind::Signed,
        }
    }

    pub fn eval(self, e: &Element) -> Result<usize> {
        match e {
            Element::Unsigned(p) => {
                let n = p.len();
                Ok(match self {
                    Stat::Exc => p.exc(),
                    Stat::Nexc => n - p.exc(),
                    Stat::Des => p.des(),
                    Stat::Asc => n.saturating_sub(1) - p.des(),
                    Stat::Inv => p.inv(),
                    Stat::Cyc => p.cycles().len(),
                    Stat::FixedPoints => p.window().iter().enumerate().filter(|&(i, &v)| v == i + 1).count(),
                    Stat::PosN => p.pos_n(),
                    _ => return Err(self.undefined("permutation")),
                })
            }
            Element::Signed(p) => {
                let n = p.len();
                Ok(match self {
                    Stat::ExcB | Stat::ExcD => p.exc_b(),
                    Stat::NexcB | Stat::NexcD => n - p.exc_b(),
                    Stat::WkexcB | Stat::WkexcD => p.wkexc_b(),
                    Stat::DesB => p.des_b(),
                    Stat::AscB => n - p.des_b(),
                    Stat::InvB => p.inv_b(),
                    Stat::InvBNegsum => p.inv_b_negsum(),
                    Stat::Negs => p.negs_count(),
                    Stat::PosLast => p.pos_last(),
                    Stat::InvD => p.inv_d(),
                    _ => return Err(self.undefined("signed permutation")),
                })
            }
        }
    }

    fn undefined(self, kind: &'static str) -> Error {
        Error::UndefinedStatistic {
            stat: self.name().to_string(),
            kind,
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Statistic refining the derangement polynomials through `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QStat {
    Inv,
    Cyc,
}

impl QStat {
    pub fn stat(self) -> Stat {
        match self {
            QStat::Inv => Stat::Inv,
            QStat::Cyc => Stat::Cyc,
        }
    }
}

/// Which statistic drives the exponent of each variable, plus an optional
/// sign `(-1)^stat`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpec {
    /// `(variable, statistic, offset)`: the exponent is `stat + offset`.
    pub exponents: Vec<(Var, Stat, i32)>,
    pub sign: Option<Stat>,
}

impl WeightSpec {
    pub fn new(exponents: &[(Var, Stat, i32)]) -> WeightSpec {
        let mut exponents = exponents.to_vec();
        exponents.sort_by_key(|&(v, _, _)| v);
        WeightSpec {
            exponents,
            sign: None,
        }
    }

    pub fn signed(mut self, stat: Stat) -> WeightSpec {
        self.sign = Some(stat);
        self
    }

    pub fn vars(&self) -> Vec<Var> {
        self.exponents.iter().map(|&(v, _, _)| v).collect()
    }

    fn check_kind(&self, kind: ElementKind) -> Result<()> {
        let kind_name = match kind {
            ElementKind::Unsigned => "permutation",
            ElementKind::Signed => "signed permutation",
        };
        let stats = self.exponents.iter().map(|&(_, s, _)| s).chain(self.sign);
        for s in stats {
            if s.kind() != kind {
                return Err(s.undefined(kind_name));
            }
        }
        Ok(())
    }

    fn monomial(&self, e: &Element) -> Result<(Vec<u32>, i64)> {
        let mut exp = Vec::with_capacity(self.exponents.len());
        for &(v, stat, offset) in &self.exponents {
            let x = stat.eval(e)? as i64 + i64::from(offset);
            let x = u32::try_from(x).map_err(|_| {
                Error::PreconditionViolated(format!("negative exponent of {v} at {e}"))
            })?;
            exp.push(x);
        }
        let sign = match self.sign {
            Some(stat) if stat.eval(e)? % 2 == 1 => -1,
            _ => 1,
        };
        Ok((exp, sign))
    }
}

/// Named polynomial families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// `sum t^des s^asc` over `S_n`.
    ADes,
    /// `sum t^exc s^(nexc-1)` over `S_n`.
    AExc,
    /// `sum t^exc` over derangements.
    ADerExc,
    /// `sum t^exc` over permutations with exactly `i` fixed points.
    ADerExcFixed(usize),
    /// `sum t^exc` over a conjugacy class.
    ConjExc(CycleType),
    /// `sum t^des_B s^asc_B` over `B_n`.
    BDes,
    /// `sum t^exc_B s^nexc_B` over `B_n`.
    BExc,
    /// The same weight over `D_n`.
    DExc,
    /// The same weight over `B_n - D_n`.
    BDExc,
    /// `AExc` with the sign `(-1)^inv`.
    SgnAExc,
    /// `BExc` with the sign `(-1)^inv_B`.
    SgnBExc,
    /// `DExc` with the sign `(-1)^inv_D`.
    SgnDExc,
    /// `sum (-1)^inv_B t^des_B s^asc_B u^pos` over `B_n`, where `pos` is the
    /// position of `+-n`.
    SgnBDesU,
    /// `sum q^stat t^exc` over derangements.
    QRefined(QStat),
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::ADes => "a_des".into(),
            Family::AExc => "aexc".into(),
            Family::ADerExc => "aderexc".into(),
            Family::ADerExcFixed(i) => format!("aderexc_fixed:{i}"),
            Family::ConjExc(l) => format!("conjexc:{l}"),
            Family::BDes => "b_des".into(),
            Family::BExc => "bexc".into(),
            Family::DExc => "dexc".into(),
            Family::BDExc => "bdexc".into(),
            Family::SgnAExc => "sgnaexc".into(),
            Family::SgnBExc => "sgnbexc".into(),
            Family::SgnDExc => "sgndexc".into(),
            Family::SgnBDesU => "sgnb_des_u".into(),
            Family::QRefined(QStat::Inv) => "qrefined:inv".into(),
            Family::QRefined(QStat::Cyc) => "qrefined:cyc".into(),
        }
    }

    /// Whether the family has a `plus`/`minus` split.
    pub fn splits(&self) -> bool {
        matches!(
            self,
            Family::AExc
                | Family::ADerExc
                | Family::ADerExcFixed(_)
                | Family::BDes
                | Family::BExc
                | Family::DExc
                | Family::QRefined(_)
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are interchangeable. Parameterised
    /// families take their argument after a colon, e.g. `conjexc:2,2`.
    fn from_str(s: &str) -> Result<Family> {
        let lower = s.trim().to_ascii_lowercase().replace('-', "_");
        let (head, arg) = match lower.split_once(':') {
            Some((h, a)) => (h.to_string(), Some(a.to_string())),
            None => (lower.clone(), None),
        };
        let need_arg = || {
            arg.clone()
                .ok_or_else(|| Error::InvalidSpec(format!("family `{head}` needs an argument after `:`")))
        };
        let fam = match head.as_str() {
            "a_des" | "ades" => Family::ADes,
            "aexc" => Family::AExc,
            "aderexc" => Family::ADerExc,
            "aderexc_fixed" => Family::ADerExcFixed(
                need_arg()?
                    .parse()
                    .map_err(|_| Error::InvalidSpec("fixed-point count must be an integer".into()))?,
            ),
            "conjexc" => Family::ConjExc(need_arg()?.parse()?),
            "b_des" | "bdes" => Family::BDes,
            "bexc" => Family::BExc,
            "dexc" => Family::DExc,
            "bdexc" => Family::BDExc,
            "sgnaexc" => Family::SgnAExc,
            "sgnbexc" => Family::SgnBExc,
            "sgndexc" => Family::SgnDExc,
            "sgnb_des_u" | "sgnbdesu" => Family::SgnBDesU,
            "qrefined" => match need_arg()?.as_str() {
                "inv" => Family::QRefined(QStat::Inv),
                "cyc" => Family::QRefined(QStat::Cyc),
                other => {
                    return Err(Error::InvalidSpec(format!(
                        "q-refinement statistic must be inv or cyc, got `{other}`"
                    )))
                }
            },
            _ => return Err(Error::InvalidSpec(format!("unknown family `{s}`"))),
        };
        if arg.is_some() && !matches!(fam, Family::ADerExcFixed(_) | Family::ConjExc(_) | Family::QRefined(_)) {
            return Err(Error::InvalidSpec(format!("family `{head}` takes no argument")));
        }
        Ok(fam)
    }
}

/// A family at a given `n`, restricted to a class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub class: Class,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, class: Class) -> FamilySpec {
        FamilySpec { family, n, class }
    }

    /// The group and weight whose sum defines this family.
    pub fn pairing(&self) -> Result<(GroupSpec, WeightSpec)> {
        let (n, class) = (self.n, self.class);
        if class != Class::All && !self.family.splits() {
            return Err(Error::UnsupportedClass {
                family: self.family.name(),
                class: class.name().to_string(),
            });
        }
        use Stat::*;
        use Var::{Q, S, T, U};
        let a_exc = WeightSpec::new(&[(T, Exc, 0), (S, Nexc, -1)]);
        let b_exc = WeightSpec::new(&[(T, ExcB, 0), (S, NexcB, 0)]);
        let d_exc = WeightSpec::new(&[(T, ExcD, 0), (S, NexcD, 0)]);
        let t_exc = WeightSpec::new(&[(T, Exc, 0)]);
        let sym = |class| GroupSpec::Sym {
            n,
            class,
            pos_n: None,
        };
        if n == 0 && matches!(self.family, Family::AExc | Family::SgnAExc) {
            return Err(Error::InvalidSpec("s^(nexc-1) needs n >= 1".into()));
        }
        Ok(match &self.family {
            Family::ADes => (sym(class), WeightSpec::new(&[(T, Des, 0), (S, Asc, 0)])),
            Family::AExc => (sym(class), a_exc),
            Family::ADerExc => (GroupSpec::derangements(n, class), t_exc),
            Family::ADerExcFixed(i) => (GroupSpec::Fixed { n, fixed: *i, class }, t_exc),
            Family::ConjExc(lambda) => {
                if lambda.n() != n {
                    return Err(Error::InvalidSpec(format!("{lambda} is not a partition of {n}")));
                }
                (GroupSpec::Conjugacy(lambda.clone()), t_exc)
            }
            Family::BDes => (
                GroupSpec::Hyperoctahedral { n, class },
                WeightSpec::new(&[(T, DesB, 0), (S, AscB, 0)]),
            ),
            Family::BExc => (GroupSpec::Hyperoctahedral { n, class }, b_exc),
            Family::DExc => (GroupSpec::EvenSigned { n, class }, d_exc),
            Family::BDExc => (GroupSpec::OddSigned { n }, b_exc),
            Family::SgnAExc => (sym(Class::All), a_exc.signed(Inv)),
            Family::SgnBExc => (GroupSpec::Hyperoctahedral { n, class }, b_exc.signed(InvB)),
            Family::SgnDExc => (GroupSpec::EvenSigned { n, class }, d_exc.signed(InvD)),
            Family::SgnBDesU => (
                GroupSpec::Hyperoctahedral { n, class },
                WeightSpec::new(&[(T, DesB, 0), (S, AscB, 0), (U, PosLast, 0)]).signed(InvB),
            ),
            Family::QRefined(stat) => (
                GroupSpec::derangements(n, class),
                WeightSpec::new(&[(T, Exc, 0), (Q, stat.stat(), 0)]),
            ),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[n={}, {}]", self.family, self.n, self.class)
    }
}

/// Enumeration settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub budget: Budget,
    /// Split the stream by first window entry and sum blocks on the rayon
    /// pool.
    pub parallel: bool,
}

impl Default for Oracle {
    fn default() -> Oracle {
        Oracle {
            budget: Budget::DEFAULT,
            parallel: true,
        }
    }
}

type Tally = HashMap<Vec<u32>, i64>;

impl Oracle {
    /// `sum over group of weight`, exactly.
    pub fn dist_poly(&self, group: &GroupSpec, weight: &WeightSpec) -> Result<Poly> {
        group.validate()?;
        weight.check_kind(group.kind())?;
        self.budget.check(group.ambient_size())?;
        let firsts = group.first_entries();
        let tally = if self.parallel && firsts.len() > 1 {
            firsts
                .par_iter()
                .map(|&f| tally_stream(group.elements_starting_with(f, self.budget)?, weight))
                .try_reduce(Tally::new, |a, b| Ok(merge(a, b)))?
        } else {
            tally_stream(group.elements(self.budget)?, weight)?
        };
        let mut p = Poly::zero(&weight.vars());
        for (exp, c) in tally {
            p.add_monomial(&exp, c);
        }
        Ok(p)
    }

    pub fn family_poly(&self, spec: &FamilySpec) -> Result<Poly> {
        let (group, weight) = spec.pairing()?;
        self.dist_poly(&group, &weight)
    }

    /// `sum (-1)^inv_B t^des_B s^asc_B u^pos` over the signed permutations
    /// of the given letters, `pos` being the position of `+-a_n`. Letters
    /// default to `1..=n`.
    pub fn sgnb_des_u(&self, n: usize, letters: Option<&[u64]>) -> Result<Poly> {
        Ok(self.sgnb_des_u_split(n, letters)?.0)
    }

    /// `(total, last, elsewhere)`: the sum of [`Oracle::sgnb_des_u`], the
    /// part where `+-a_n` sits in the last position, and the remainder.
    pub fn sgnb_des_u_split(&self, n: usize, letters: Option<&[u64]>) -> Result<(Poly, Poly, Poly)> {
        let letters: Vec<u64> = match letters {
            Some(l) => l.to_vec(),
            None => (1..=n as u64).collect(),
        };
        if letters.len() != n {
            return Err(Error::InvalidSpec(format!("expected {n} letters, got {}", letters.len())));
        }
        if letters.first() == Some(&0) || letters.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NonIncreasingLetters);
        }
        let group = GroupSpec::Hyperoctahedral { n, class: Class::All };
        self.budget.check(group.ambient_size())?;
        let vars = [Var::S, Var::T, Var::U];
        let mut total = Poly::zero(&vars);
        let mut at_last = Poly::zero(&vars);
        for e in group.elements(self.budget)? {
            let Element::Signed(p) = e else { unreachable!() };
            let word: Vec<i64> = p
                .window()
                .iter()
                .map(|&v| v.signum() as i64 * letters[v.unsigned_abs() as usize - 1] as i64)
                .collect();
            let (exp, sign) = letter_weight(&word, *letters.last().unwrap_or(&0) as i64);
            total.add_monomial(&exp, sign);
            if exp[2] as usize == n {
                at_last.add_monomial(&exp, sign);
            }
        }
        let elsewhere = &total - &at_last;
        Ok((total, at_last, elsewhere))
    }

    /// `sum q^stat t^exc` over the derangements of the class.
    pub fn q_refined(&self, n: usize, stat: QStat, class: Class) -> Result<Poly> {
        self.family_poly(&FamilySpec::new(Family::QRefined(stat), n, class))
    }
}

/// `family_poly` with the default settings.
pub fn family_poly(spec: &FamilySpec) -> Result<Poly> {
    Oracle::default().family_poly(spec)
}

/// `dist_poly` with the default settings.
pub fn dist_poly(group: &GroupSpec, weight: &WeightSpec) -> Result<Poly> {
    Oracle::default().dist_poly(group, weight)
}

fn tally_stream(it: impl Iterator<Item = Element>, weight: &WeightSpec) -> Result<Tally> {
    let mut tally = Tally::new();
    for e in it {
        let (exp, sign) = weight.monomial(&e)?;
        *tally.entry(exp).or_insert(0) += sign;
    }
    Ok(tally)
}

fn merge(mut a: Tally, b: Tally) -> Tally {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// `(exponents of s, t, u; sign)` for a signed word over arbitrary letters.
fn letter_weight(word: &[i64], top: i64) -> (Vec<u32>, i64) {
    let n = word.len();
    let mut des = 0;
    let mut prev = 0;
    for &v in word {
        if prev > v {
            des += 1;
        }
        prev = v;
    }
    let mut len = word.iter().filter(|&&v| v < 0).count();
    for i in 0..n {
        for j in i + 1..n {
            len += usize::from(word[i] > word[j]) + usize::from(-word[i] > word[j]);
        }
    }
    let pos = word.iter().position(|&v| v.abs() == top).map_or(0, |p| p + 1);
    let exp = vec![(n - des) as u32, des as u32, pos as u32];
    (exp, if len % 2 == 0 { 1 } else { -1 })
}

/// Total number of elements summed by a family: the value of its unsigned
/// generating function at all ones.
pub fn domain_size(spec: &FamilySpec) -> Result<BigInt> {
    let (group, _) = spec.pairing()?;
    Ok(BigInt::from(
        group.elements(Budget::DEFAULT)?.count(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::st::*;

    fn fam(f: Family, n: usize, class: Class) -> Poly {
        family_poly(&FamilySpec::new(f, n, class)).unwrap()
    }

    #[test]
    fn small_a_families() {
        assert_eq!(fam(Family::AExc, 2, Class::All), s_plus_t());
        assert_eq!(
            fam(Family::AExc, 5, Class::Plus),
            Poly::homogeneous_st(4, &[1, 11, 36, 11, 1])
        );
        assert_eq!(fam(Family::SgnAExc, 4, Class::All), s_minus_t().pow(3));
        let a4 = dist_poly(
            &GroupSpec::Sym {
                n: 4,
                class: Class::Plus,
                pos_n: None,
            },
            &WeightSpec::new(&[(Var::T, Stat::Exc, 0)]),
        )
        .unwrap();
        assert_eq!(a4, Poly::from_t_coeffs(&[1, 4, 7]));
    }

    #[test]
    fn small_b_and_d_families() {
        assert_eq!(fam(Family::BExc, 2, Class::Minus), Poly::homogeneous_st(2, &[0, 4, 0]));
        assert_eq!(fam(Family::BExc, 2, Class::Plus), s_plus_t().pow(2));
        assert_eq!(fam(Family::DExc, 2, Class::All), s_plus_t().pow(2));
        assert_eq!(
            fam(Family::DExc, 4, Class::Minus),
            Poly::homogeneous_st(4, &[0, 20, 56, 20, 0])
        );
    }

    #[test]
    fn derangements_and_q() {
        assert_eq!(fam(Family::ADerExc, 4, Class::All), Poly::from_t_coeffs(&[0, 1, 7, 1]));
        let q = fam(Family::QRefined(QStat::Cyc), 2, Class::Minus);
        assert_eq!(q, Poly::monomial(&[(Var::T, 1), (Var::Q, 1)], 1));
        let q = fam(Family::QRefined(QStat::Cyc), 3, Class::Plus);
        let expect = &Poly::monomial(&[(Var::T, 1), (Var::Q, 1)], 1)
            + &Poly::monomial(&[(Var::T, 2), (Var::Q, 1)], 1);
        assert_eq!(q, expect);
    }

    #[test]
    fn signed_des_u() {
        let o = Oracle::default();
        let u = Poly::monomial(&[(Var::U, 1)], 1);
        assert_eq!(o.sgnb_des_u(1, None).unwrap(), &s_minus_t() * &u);
        let expect = &s_minus_t().pow(3) * &u.pow(3);
        assert_eq!(o.sgnb_des_u(3, Some(&[2, 5, 9])).unwrap(), expect);
        let (_, _, elsewhere) = o.sgnb_des_u_split(4, None).unwrap();
        assert!(elsewhere.is_zero());
        assert_eq!(o.sgnb_des_u(2, Some(&[3, 3])), Err(Error::NonIncreasingLetters));
    }

    #[test]
    fn statistic_kind_mismatch() {
        let err = dist_poly(
            &GroupSpec::symmetric(3),
            &WeightSpec::new(&[(Var::T, Stat::ExcB, 0)]),
        );
        assert!(matches!(err, Err(Error::UndefinedStatistic { .. })));
    }

    #[test]
    fn unsupported_class() {
        let spec = FamilySpec::new(Family::SgnAExc, 3, Class::Plus);
        assert!(matches!(family_poly(&spec), Err(Error::UnsupportedClass { .. })));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let seq = Oracle {
            parallel: false,
            ..Oracle::default()
        };
        let spec = FamilySpec::new(Family::BExc, 4, Class::Minus);
        assert_eq!(seq.family_poly(&spec).unwrap(), family_poly(&spec).unwrap());
    }

    #[test]
    fn family_names_round_trip() {
        for name in ["aexc", "conjexc:2,2", "qrefined:inv", "aderexc_fixed:2", "sgnb_des_u"] {
            assert_eq!(name.parse::<Family>().unwrap().name(), name);
        }
        assert!("nope".parse::<Family>().is_err());
        assert!("aexc:3".parse::<Family>().is_err());
    }
}
