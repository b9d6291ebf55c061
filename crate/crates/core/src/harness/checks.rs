//! The check registry. Each check compares two independent computations
//! over a range of `n` and reports the first disagreement.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Display;

use num_bigint::BigInt;
use num_rational::Ratio;

use super::{Ctx, Suite};
use crate::bijections::{
    cycle_excedances, cycle_map, cycle_map_inverse, foata_fft, move_n_to_front, swap_tail,
    restrict_order_preserving,
};
use crate::closed::{
    coeff_tables, coefficient_row, conj_exc_closed, derangement_closed, dexc_closed, eulerian,
    eulerian_t, half_sum_closed, jump4, jump4_a, jump4_d, jump_tables, l_centers,
    published_base_a, r_centers, s_term, set_partition_count, signed_closed,
    step_a, step_b, step_d, two_term_split, EulerType, SignedKind,
};
use crate::error::Error;
use crate::groups::{
    partitions, Class, CycleType, Element, GroupSpec, PartitionFilter, Perm, SignedPerm,
};
use crate::oracle::{Family, FamilySpec, QStat};
use crate::poly::st::{s, s_minus_t, s_plus_t, st};
use crate::poly::{
    gamma_decompose, gamma_decompose_q, gamma_recompose, palindrome_info, split_odd_length,
    GammaExpansion, Poly, Var, VarMode,
};

/// Why a check did not pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    Fail {
        witness: String,
        left: String,
        right: String,
    },
    Skip(String),
}

impl From<Error> for Problem {
    fn from(e: Error) -> Problem {
        match e {
            Error::BudgetExceeded { .. } => Problem::Skip(e.to_string()),
            _ => fail(e.to_string()),
        }
    }
}

/// Inclusive range of `n` covered, if any.
pub type Outcome = Result<Option<(usize, usize)>, Problem>;

/// A registered, runnable check.
pub struct Check {
    pub id: &'static str,
    pub suite: Suite,
    /// What is being verified, in one line.
    pub claim: &'static str,
    pub run: fn(&Ctx) -> Outcome,
}

fn fail(witness: impl Into<String>) -> Problem {
    Problem::Fail {
        witness: witness.into(),
        left: String::new(),
        right: String::new(),
    }
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), Problem> {
    if cond {
        Ok(())
    } else {
        Err(fail(witness()))
    }
}

fn span(lo: usize, hi: usize) -> Option<(usize, usize)> {
    (lo <= hi).then_some((lo, hi))
}

/// Exact equality, with the first differing monomial as witness.
fn same(label: impl Display, left: &Poly, right: &Poly) -> Result<(), Problem> {
    if left == right {
        return Ok(());
    }
    let mut vars: Vec<Var> = left.vars().iter().chain(right.vars()).copied().collect();
    vars.sort();
    vars.dedup();
    let collect = |p: &Poly| -> BTreeMap<Vec<u32>, BigInt> {
        p.with_vars(&vars)
            .terms()
            .map(|(e, c)| (e.to_vec(), c.clone()))
            .collect()
    };
    let (l, r) = (collect(left), collect(right));
    let keys: BTreeSet<&Vec<u32>> = l.keys().chain(r.keys()).collect();
    let zero = BigInt::from(0);
    let witness = keys
        .into_iter()
        .rev()
        .find(|k| l.get(*k).unwrap_or(&zero) != r.get(*k).unwrap_or(&zero))
        .map(|k| {
            let powers: Vec<(Var, u32)> = vars.iter().copied().zip(k.iter().copied()).collect();
            format!(
                "{label}: coefficient of {} is {} on the left, {} on the right",
                Poly::monomial(&powers, 1),
                l.get(k).unwrap_or(&zero),
                r.get(k).unwrap_or(&zero)
            )
        })
        .unwrap_or_else(|| format!("{label}: declared variables differ"));
    Err(Problem::Fail {
        witness,
        left: left.to_string(),
        right: right.to_string(),
    })
}

/// Gamma positive with the given center of symmetry.
fn positive_with_center(
    label: impl Display,
    p: &Poly,
    mode: VarMode,
    cos: Ratio<u32>,
) -> Result<GammaExpansion, Problem> {
    let g = gamma_decompose(p, mode).map_err(|e| fail(format!("{label}: {e}")))?;
    ensure(g.all_gammas_nonnegative(), || format!("{label}: negative gamma in {g}"))?;
    ensure(g.center_of_symmetry() == cos, || {
        format!("{label}: center {} but expected {cos}", g.center_of_symmetry())
    })?;
    Ok(g)
}

fn half(n: usize) -> Ratio<u32> {
    Ratio::new(n as u32, 2)
}

fn fam(ctx: &Ctx, family: Family, n: usize, class: Class) -> Result<Poly, Problem> {
    Ok(ctx.oracle.family_poly(&FamilySpec::new(family, n, class))?)
}

fn perms(spec: GroupSpec) -> Result<Vec<Perm>, Problem> {
    Ok(spec
        .elements(Default::default())?
        .filter_map(|e| match e {
            Element::Unsigned(p) => Some(p),
            Element::Signed(_) => None,
        })
        .collect())
}

fn signed_perms(spec: GroupSpec) -> Result<Vec<SignedPerm>, Problem> {
    Ok(spec
        .elements(Default::default())?
        .filter_map(|e| match e {
            Element::Signed(p) => Some(p),
            Element::Unsigned(_) => None,
        })
        .collect())
}

fn biv(r: u32, n: u32, gammas: &[i64]) -> GammaExpansion {
    GammaExpansion {
        mode: VarMode::Bivariate,
        r,
        n,
        gammas: gammas.iter().map(|&g| BigInt::from(g)).collect(),
    }
}

const PM: [Class; 2] = [Class::Plus, Class::Minus];
const ALL_PM: [Class; 3] = [Class::All, Class::Plus, Class::Minus];

// ---------------------------------------------------------------- gamma calculus

/// Gamma-positive homogeneous samples.
fn samples() -> Vec<(String, Poly)> {
    let mut out = vec![("st".to_string(), st()), ("s+t".to_string(), s_plus_t())];
    for n in 1..=6 {
        out.push((format!("A_{n}"), eulerian(EulerType::A, n).expect("n >= 1")));
    }
    for n in 0..=5 {
        out.push((format!("B_{n}"), eulerian(EulerType::B, n).expect("n >= 0")));
    }
    for n in [5, 7] {
        let (p, m) = published_base_a(n).expect("published");
        out.push((format!("AExc_{n}^+"), p));
        out.push((format!("AExc_{n}^-"), m));
    }
    let tables = jump_tables();
    for (i, l) in tables.l.into_iter().enumerate() {
        out.push((format!("L_{}", i + 1), l));
    }
    for (i, r) in tables.r.into_iter().enumerate() {
        out.push((format!("R_{}", i + 1), r));
    }
    out
}

fn biv_center(p: &Poly) -> Ratio<u32> {
    half(p.total_degree() as usize)
}

fn gamma_products(_: &Ctx) -> Outcome {
    let s = samples();
    for (i, (nf, f)) in s.iter().enumerate() {
        for (ng, g) in &s[i..] {
            let cos = biv_center(f) + biv_center(g);
            positive_with_center(format!("{nf} * {ng}"), &(f * g), VarMode::Bivariate, cos)?;
        }
    }
    Ok(None)
}

fn gamma_derivative(_: &Ctx) -> Outcome {
    for (name, f) in samples() {
        let deg = f.total_degree() as usize;
        if deg == 0 {
            continue;
        }
        let d = f.apply_d()?;
        positive_with_center(format!("D {name}"), &d, VarMode::Bivariate, half(deg - 1))?;
    }
    Ok(None)
}

fn gamma_multipliers(_: &Ctx) -> Outcome {
    for (name, f) in samples() {
        let cos = biv_center(&f);
        for i in 1..=2u32 {
            let h = &st().pow(i) * &f;
            positive_with_center(format!("(st)^{i} {name}"), &h, VarMode::Bivariate, cos + i)?;
        }
        let h = &s_plus_t() * &f;
        positive_with_center(format!("(s+t) {name}"), &h, VarMode::Bivariate, cos + Ratio::new(1, 2))?;
    }
    Ok(None)
}

fn gamma_round_trip(_: &Ctx) -> Outcome {
    for (name, f) in samples() {
        let g = gamma_decompose(&f, VarMode::Bivariate)?;
        same(format!("recompose(decompose({name}))"), &gamma_recompose(&g), &f)?;
    }
    let vectors = [
        biv(0, 4, &[1, 7, 16]),
        biv(1, 4, &[20, 16]),
        biv(0, 6, &[1, 0, 0, 0]),
        biv(1, 6, &[63, 336, 168]),
        GammaExpansion {
            mode: VarMode::Univariate,
            r: 1,
            n: 5,
            gammas: vec![BigInt::from(3), BigInt::from(0), BigInt::from(2)],
        },
    ];
    for g in vectors {
        let back = gamma_decompose(&gamma_recompose(&g), g.mode)?;
        ensure(back == g, || format!("decompose(recompose({g})) gave {back}"))?;
    }
    Ok(None)
}

fn gamma_odd_split(_: &Ctx) -> Outcome {
    let t = Poly::var(Var::T);
    let mut inputs = vec![
        ("(1+t)^3".to_string(), (&Poly::one(&[Var::T]) + &t).pow(3)),
        ("(1+t)^5".to_string(), (&Poly::one(&[Var::T]) + &t).pow(5)),
    ];
    for m in 1..=5 {
        let (p, _) = step_a(2 * m + 1)?;
        let x = (&st() * &p.apply_d()?).substitute_one(Var::S)?;
        inputs.push((format!("(st D AExc_{}^+)|s=1", 2 * m + 1), x));
    }
    for (name, p) in inputs {
        let g = gamma_decompose(&p, VarMode::Univariate)?;
        let (lo, hi) = split_odd_length(&g).map_err(|e| fail(format!("{name}: {e}")))?;
        let center = g.center_of_symmetry();
        let one_half = Ratio::new(1, 2);
        let (p1, p2) = (gamma_recompose(&lo), gamma_recompose(&hi));
        same(format!("split of {name}"), &(&p1 + &p2), &p)?;
        positive_with_center(format!("low part of {name}"), &p1, VarMode::Univariate, center - one_half)?;
        positive_with_center(format!("high part of {name}"), &p2, VarMode::Univariate, center + one_half)?;
    }
    let even = gamma_decompose(&(&Poly::one(&[Var::T]) + &t).pow(2), VarMode::Univariate)?;
    ensure(split_odd_length(&even) == Err(Error::EvenLength(2)), || {
        "even-length input was split".into()
    })?;
    Ok(None)
}

// ---------------------------------------------------------------- type A

fn a_eulerian_insertion(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.a {
        same(format!("A_{n}"), &eulerian(EulerType::A, n)?, &fam(ctx, Family::ADes, n, Class::All)?)?;
    }
    Ok(span(1, ctx.limits.a))
}

fn a_published_values(ctx: &Ctx) -> Outcome {
    let vectors = [
        (5, biv(0, 4, &[1, 7, 16]), biv(1, 4, &[15, 0])),
        (7, biv(0, 6, &[1, 51, 384, 104]), biv(1, 6, &[63, 336, 168])),
    ];
    for (n, gp, gm) in vectors {
        for (class, g) in [(Class::Plus, gp), (Class::Minus, gm)] {
            let closed = half_sum_closed(EulerType::A, n, class)?;
            same(format!("AExc_{n} {class} vs published"), &closed, &gamma_recompose(&g))?;
            let got = gamma_decompose(&closed, VarMode::Bivariate)?;
            ensure(got == g, || format!("AExc_{n} {class}: gammas {got}, published {g}"))?;
            if n <= ctx.limits.a {
                same(format!("AExc_{n} {class} oracle"), &fam(ctx, Family::AExc, n, class)?, &closed)?;
            }
        }
    }
    let at_one = half_sum_closed(EulerType::A, 5, Class::Plus)?.substitute_one(Var::S)?;
    same("AExc_5^+(1,t)", &at_one, &Poly::from_t_coeffs(&[1, 11, 36, 11, 1]))?;
    Ok(span(5, 7))
}

fn a_step_recurrence(ctx: &Ctx) -> Outcome {
    for n in 2..=ctx.limits.a {
        let (p, m) = step_a(n)?;
        same(format!("AExc_{n}^+"), &p, &fam(ctx, Family::AExc, n, Class::Plus)?)?;
        same(format!("AExc_{n}^-"), &m, &fam(ctx, Family::AExc, n, Class::Minus)?)?;
    }
    Ok(span(2, ctx.limits.a))
}

fn a_half_sum(ctx: &Ctx) -> Outcome {
    for n in 2..=ctx.limits.a {
        for class in ALL_PM {
            same(
                format!("AExc_{n} {class}"),
                &half_sum_closed(EulerType::A, n, class)?,
                &fam(ctx, Family::AExc, n, class)?,
            )?;
        }
    }
    Ok(span(2, ctx.limits.a))
}

fn a_palindromic_iff_odd(_: &Ctx) -> Outcome {
    for n in 2..=9 {
        for class in PM {
            let p = half_sum_closed(EulerType::A, n, class)?;
            let info = palindrome_info(&p, VarMode::Bivariate)?;
            ensure(info.is_palindromic == (n % 2 == 1), || {
                format!("AExc_{n} {class}: palindromic = {}", info.is_palindromic)
            })?;
        }
    }
    let a4 = Poly::from_t_coeffs(&[1, 4, 7]);
    ensure(
        matches!(gamma_decompose(&a4, VarMode::Univariate), Err(Error::NotPalindromic { .. })),
        || "1+4t+7t^2 decomposed".into(),
    )?;
    Ok(span(2, 9))
}

fn a_derivative_identity(_: &Ctx) -> Outcome {
    for n in 2..=8 {
        let (p, m) = step_a(n)?;
        let dp = p.apply_d()?;
        same(format!("D AExc_{n}^+ vs D AExc_{n}^-"), &dp, &m.apply_d()?)?;
        let da = eulerian(EulerType::A, n)?.apply_d()?;
        same(format!("2 D AExc_{n}^+ vs D A_{n}"), &dp.scale(&BigInt::from(2)), &da)?;
    }
    Ok(span(2, 8))
}

fn a_coefficient_tables(_: &Ctx) -> Outcome {
    let table = coeff_tables(12);
    for n in 2..=12 {
        for class in PM {
            let row = table.row(n, class).expect("row exists");
            let expect = coefficient_row(&half_sum_closed(EulerType::A, n, class)?, n);
            ensure(row == expect, || format!("row {n} {class}: {row:?} vs {expect:?}"))?;
        }
    }
    let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    ensure(table.row(4, Class::Plus) == Some(ints(&[1, 4, 7, 0])), || "row 4 plus".into())?;
    ensure(table.row(4, Class::Minus) == Some(ints(&[0, 7, 4, 1])), || "row 4 minus".into())?;
    Ok(span(2, 12))
}

fn a_jump4(ctx: &Ctx) -> Outcome {
    let tables = jump_tables();
    for (i, (l, c)) in tables.l.iter().zip(l_centers()).enumerate() {
        positive_with_center(format!("L_{}", i + 1), l, VarMode::Bivariate, c)?;
    }
    for n in 1..=9 {
        let (p, m) = step_a(n)?;
        let (jp, jm) = jump4_a(&p, &m)?;
        let (sp, sm) = step_a(n + 4)?;
        same(format!("jump to AExc_{}^+", n + 4), &jp, &sp)?;
        same(format!("jump to AExc_{}^-", n + 4), &jm, &sm)?;
    }
    for n in [9, 11, 13] {
        let (sp, sm) = step_a(n)?;
        same(format!("chain to AExc_{n}^+"), &jump4(&Family::AExc, n, Class::Plus)?, &sp)?;
        same(format!("chain to AExc_{n}^-"), &jump4(&Family::AExc, n, Class::Minus)?, &sm)?;
        if n <= ctx.limits.a {
            same(format!("chain to AExc_{n}^+ vs oracle"), &sp, &fam(ctx, Family::AExc, n, Class::Plus)?)?;
        }
    }
    Ok(span(5, 13))
}

fn a_gamma_odd(_: &Ctx) -> Outcome {
    for n in (5..=11).step_by(2) {
        for class in PM {
            let p = half_sum_closed(EulerType::A, n, class)?;
            positive_with_center(format!("AExc_{n} {class}"), &p, VarMode::Bivariate, half(n - 1))?;
        }
    }
    Ok(span(5, 11))
}

fn split_check(family: Family, ns: &[usize], target: impl Fn(usize, Class) -> Result<Poly, Error>) -> Outcome {
    for &n in ns {
        for class in PM {
            let sp = two_term_split(&family, n, class)?;
            let full = target(n, class)?;
            let deg = full.total_degree();
            let want = full.substitute_one(Var::S)?;
            same(format!("{family}_{n} {class} split"), &sp.sum(), &want)?;
            let (c1, c2) = sp.centers();
            ensure(sp.g1.all_gammas_nonnegative() && sp.g2.all_gammas_nonnegative(), || {
                format!("{family}_{n} {class}: parts {} and {}", sp.g1, sp.g2)
            })?;
            let lo = Ratio::new(deg - 1, 2);
            ensure((c1, c2) == (lo, lo + 1), || {
                format!("{family}_{n} {class}: centers {c1} and {c2}")
            })?;
        }
    }
    Ok(span(ns[0], ns[ns.len() - 1]))
}

fn a_split_even(_: &Ctx) -> Outcome {
    let sp = two_term_split(&Family::AExc, 4, Class::Plus)?;
    same("AExc_4^+ w1", &sp.w1, &Poly::from_t_coeffs(&[1, 4, 1]))?;
    same("AExc_4^+ w2", &sp.w2, &Poly::from_t_coeffs(&[0, 0, 6]))?;
    split_check(Family::AExc, &[4, 6, 8, 10], |n, c| half_sum_closed(EulerType::A, n, c))
}

// ---------------------------------------------------------------- signed sums

fn sgn_a_exc(ctx: &Ctx) -> Outcome {
    for n in 2..=ctx.limits.a {
        same(format!("SgnAExc_{n}"), &fam(ctx, Family::SgnAExc, n, Class::All)?, &s_minus_t().pow(n as u32 - 1))?;
    }
    Ok(span(2, ctx.limits.a))
}

fn sgn_b_exc(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.b {
        same(format!("SgnBExc_{n}"), &fam(ctx, Family::SgnBExc, n, Class::All)?, &s_minus_t().pow(n as u32))?;
    }
    Ok(span(1, ctx.limits.b))
}

fn sgn_b_des_u(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.b {
        let u = Poly::monomial(&[(Var::U, n as u32)], 1);
        let want = &s_minus_t().pow(n as u32) * &u;
        same(format!("SgnB_{n}(s,t,u)"), &ctx.oracle.sgnb_des_u(n, None)?, &want)?;
        let letters: Vec<u64> = (1..=n as u64).map(|k| 3 * k - 1).collect();
        same(
            format!("SgnB over letters {letters:?}"),
            &ctx.oracle.sgnb_des_u(n, Some(&letters))?,
            &want,
        )?;
    }
    Ok(span(1, ctx.limits.b))
}

fn sgn_b_partial_zero(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.b {
        let (_, _, elsewhere) = ctx.oracle.sgnb_des_u_split(n, None)?;
        ensure(elsewhere.is_zero(), || format!("n = {n}: sum away from the last position is {elsewhere}"))?;
    }
    Ok(span(1, ctx.limits.b))
}

fn sgn_d_exc(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.d {
        let want = if n % 2 == 0 {
            s_minus_t().pow(n as u32)
        } else {
            &s() * &s_minus_t().pow(n as u32 - 1)
        };
        same(format!("SgnDExc_{n}"), &fam(ctx, Family::SgnDExc, n, Class::All)?, &want)?;
    }
    Ok(span(1, ctx.limits.d))
}

fn sgn_d_jump(ctx: &Ctx) -> Outcome {
    let q = s_minus_t().pow(4);
    for n in 1..=ctx.limits.d.saturating_sub(4) {
        let lo = fam(ctx, Family::SgnDExc, n, Class::All)?;
        let hi = fam(ctx, Family::SgnDExc, n + 4, Class::All)?;
        same(format!("SgnDExc_{} vs (s-t)^4 SgnDExc_{n}", n + 4), &hi, &(&q * &lo))?;
    }
    for n in 1..=20 {
        let lo = signed_closed(SignedKind::D, n)?;
        let hi = signed_closed(SignedKind::D, n + 4)?;
        same(format!("closed SgnDExc_{}", n + 4), &hi, &(&q * &lo))?;
    }
    Ok(span(1, 20))
}

// ---------------------------------------------------------------- type B

fn b_eulerian_insertion(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.b {
        same(format!("B_{n}"), &eulerian(EulerType::B, n)?, &fam(ctx, Family::BDes, n, Class::All)?)?;
    }
    Ok(span(1, ctx.limits.b))
}

fn b_exc_des(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.b {
        same(
            format!("BExc_{n} vs B_{n}"),
            &fam(ctx, Family::BExc, n, Class::All)?,
            &fam(ctx, Family::BDes, n, Class::All)?,
        )?;
    }
    Ok(span(1, ctx.limits.b))
}

fn b_equidistribution(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.b {
        for class in PM {
            same(
                format!("des vs exc over B_{n} {class}"),
                &fam(ctx, Family::BDes, n, class)?,
                &fam(ctx, Family::BExc, n, class)?,
            )?;
        }
    }
    Ok(span(1, ctx.limits.b))
}

fn b_step_recurrence(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.b {
        let (p, m) = step_b(n)?;
        same(format!("BExc_{n}^+"), &p, &fam(ctx, Family::BExc, n, Class::Plus)?)?;
        same(format!("BExc_{n}^-"), &m, &fam(ctx, Family::BExc, n, Class::Minus)?)?;
    }
    Ok(span(1, ctx.limits.b))
}

fn b_half_sum(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.b {
        for class in ALL_PM {
            same(
                format!("BExc_{n} {class}"),
                &half_sum_closed(EulerType::B, n, class)?,
                &fam(ctx, Family::BExc, n, class)?,
            )?;
        }
    }
    Ok(span(1, ctx.limits.b))
}

fn b_length_parity(ctx: &Ctx) -> Outcome {
    for n in 2..=ctx.limits.b {
        let all = signed_perms(GroupSpec::Hyperoctahedral { n, class: Class::All })?;
        let even = all.iter().filter(|p| p.inv_b() % 2 == 0).count();
        ensure(2 * even == all.len(), || format!("B_{n}: {even} of {} even", all.len()))?;
        if let Some(p) = all.iter().find(|p| p.inv_b() != p.inv_b_negsum()) {
            return Err(fail(format!(
                "length formulas disagree at {p}: {} vs {}",
                p.inv_b(),
                p.inv_b_negsum()
            )));
        }
    }
    Ok(span(2, ctx.limits.b))
}

fn b_gamma_even(_: &Ctx) -> Outcome {
    for n in (2..=10).step_by(2) {
        for class in PM {
            let p = half_sum_closed(EulerType::B, n, class)?;
            positive_with_center(format!("BExc_{n} {class}"), &p, VarMode::Bivariate, half(n))?;
        }
    }
    Ok(span(2, 10))
}

fn b_split_odd(_: &Ctx) -> Outcome {
    split_check(Family::BExc, &[3, 5, 7, 9], |n, c| half_sum_closed(EulerType::B, n, c))
}

// ---------------------------------------------------------------- type D

fn d_bridge(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.d {
        same(
            format!("DExc_{n} vs BExc_{n}^+"),
            &fam(ctx, Family::DExc, n, Class::All)?,
            &fam(ctx, Family::BExc, n, Class::Plus)?,
        )?;
        same(
            format!("(B-D)Exc_{n} vs BExc_{n}^-"),
            &fam(ctx, Family::BDExc, n, Class::All)?,
            &fam(ctx, Family::BExc, n, Class::Minus)?,
        )?;
    }
    Ok(span(1, ctx.limits.d))
}

fn d_step_recurrence(ctx: &Ctx) -> Outcome {
    for n in 2..=ctx.limits.d {
        let (d, bd) = step_d(n)?;
        same(format!("DExc_{n}"), &d, &fam(ctx, Family::DExc, n, Class::All)?)?;
        same(format!("(B-D)Exc_{n}"), &bd, &fam(ctx, Family::BDExc, n, Class::All)?)?;
    }
    Ok(span(2, ctx.limits.d))
}

fn d_published_values(ctx: &Ctx) -> Outcome {
    let vectors = [
        (4, biv(0, 4, &[1, 12, 32]), biv(1, 4, &[20, 16])),
        (6, biv(0, 6, &[1, 170, 1952, 928]), biv(1, 6, &[182, 1904, 992])),
    ];
    for (n, gp, gm) in vectors {
        for (class, g) in [(Class::Plus, gp), (Class::Minus, gm)] {
            let closed = dexc_closed(n, class)?;
            same(format!("DExc_{n} {class} vs published"), &closed, &gamma_recompose(&g))?;
            let got = gamma_decompose(&closed, VarMode::Bivariate)?;
            ensure(got == g, || format!("DExc_{n} {class}: gammas {got}, published {g}"))?;
            if n <= ctx.limits.d {
                same(format!("DExc_{n} {class} oracle"), &fam(ctx, Family::DExc, n, class)?, &closed)?;
            }
        }
    }
    let row = Poly::homogeneous_st(6, &[1, 176, 2647, 5872, 2647, 176, 1]);
    same("DExc_6^+ coefficients", &dexc_closed(6, Class::Plus)?, &row)?;
    let minus4 = Poly::homogeneous_st(4, &[0, 20, 56, 20, 0]);
    same("DExc_4^- coefficients", &dexc_closed(4, Class::Minus)?, &minus4)?;
    Ok(span(4, 6))
}

fn d_length_parity(ctx: &Ctx) -> Outcome {
    for n in 2..=ctx.limits.d {
        let all = signed_perms(GroupSpec::EvenSigned { n, class: Class::All })?;
        let even = all.iter().filter(|p| p.inv_d() % 2 == 0).count();
        ensure(2 * even == all.len(), || format!("D_{n}: {even} of {} even", all.len()))?;
    }
    Ok(span(2, ctx.limits.d))
}

fn d_jump4(_: &Ctx) -> Outcome {
    let tables = jump_tables();
    for (i, (r, c)) in tables.r.iter().zip(r_centers()).enumerate() {
        positive_with_center(format!("R_{}", i + 1), r, VarMode::Bivariate, c)?;
    }
    for n in (2..=8).step_by(2) {
        let s = s_term(n, &dexc_closed(n, Class::All)?)?;
        let g = positive_with_center(format!("S_{}", n + 4), &s, VarMode::Bivariate, half(n + 4))?;
        let two = BigInt::from(2);
        ensure(g.gammas.iter().all(|c| c % &two == BigInt::from(0)), || {
            format!("S_{} has an odd gamma: {g}", n + 4)
        })?;
    }
    for n in 1..=8 {
        let (p, m) = (dexc_closed(n, Class::Plus)?, dexc_closed(n, Class::Minus)?);
        let (jp, jm) = jump4_d(n, &p, &m)?;
        let (sp, sm) = step_d_split(n + 4)?;
        same(format!("jump to DExc_{}^+", n + 4), &jp, &sp)?;
        same(format!("jump to DExc_{}^-", n + 4), &jm, &sm)?;
    }
    for n in [8, 10, 12] {
        let (sp, sm) = step_d_split(n)?;
        same(format!("chain to DExc_{n}^+"), &jump4(&Family::DExc, n, Class::Plus)?, &sp)?;
        same(format!("chain to DExc_{n}^-"), &jump4(&Family::DExc, n, Class::Minus)?, &sm)?;
    }
    Ok(span(4, 12))
}

/// `DExc_n^+-` from the step recurrence and the signed closed form.
fn step_d_split(n: usize) -> Result<(Poly, Poly), Error> {
    let (d, _) = step_d(n)?;
    let sgn = signed_closed(SignedKind::D, n)?;
    Ok(((&d + &sgn).halve()?, (&d - &sgn).halve()?))
}

fn d_gamma_even(_: &Ctx) -> Outcome {
    for n in (4..=10).step_by(2) {
        for class in PM {
            let p = dexc_closed(n, class)?;
            positive_with_center(format!("DExc_{n} {class}"), &p, VarMode::Bivariate, half(n))?;
        }
    }
    Ok(span(4, 10))
}

fn d_split_odd(_: &Ctx) -> Outcome {
    split_check(Family::DExc, &[5, 7, 9], dexc_closed)
}

// ---------------------------------------------------------------- derangements

fn der_cycle_class(ctx: &Ctx) -> Outcome {
    for n in 2..=ctx.limits.a {
        let lambda = CycleType::new(vec![n])?;
        let want = &Poly::var(Var::T) * &eulerian_t(n - 1)?;
        same(format!("C_({n})"), &fam(ctx, Family::ConjExc(lambda), n, Class::All)?, &want)?;
    }
    Ok(span(2, ctx.limits.a))
}

fn der_two_cycles(ctx: &Ctx) -> Outcome {
    for n in 4..=ctx.limits.a {
        for lambda in partitions(n, PartitionFilter::no_part_1()) {
            if lambda.num_parts() != 2 {
                continue;
            }
            let oracle = fam(ctx, Family::ConjExc(lambda.clone()), n, Class::All)?;
            same(format!("C_({lambda})"), &oracle, &conj_exc_closed(&lambda)?)?;
        }
    }
    Ok(span(4, ctx.limits.a))
}

fn der_set_partition_count(_: &Ctx) -> Outcome {
    for n in 1..=9 {
        for lambda in partitions(n, PartitionFilter::all()) {
            let mut cyclic = BigInt::from(1);
            for (part, m) in lambda.multiplicities() {
                let arrangements: BigInt = (1..part).map(BigInt::from).product();
                cyclic *= arrangements.pow(m as u32);
            }
            let got = set_partition_count(&lambda) * cyclic;
            ensure(got == lambda.class_size(), || {
                format!("({lambda}): {got} vs class size {}", lambda.class_size())
            })?;
        }
    }
    Ok(span(1, 9))
}

fn der_conjugacy_formula(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.a {
        for lambda in partitions(n, PartitionFilter::all()) {
            let closed = conj_exc_closed(&lambda)?;
            same(format!("C_({lambda})"), &fam(ctx, Family::ConjExc(lambda.clone()), n, Class::All)?, &closed)?;
            let cos = half(n - lambda.fixed_points());
            positive_with_center(format!("C_({lambda})"), &closed, VarMode::Univariate, cos)?;
        }
    }
    Ok(span(1, ctx.limits.a))
}

fn der_derangements(ctx: &Ctx) -> Outcome {
    for n in 2..=ctx.limits.a {
        for class in ALL_PM {
            let closed = derangement_closed(n, class, None)?;
            same(format!("SD_{n} {class}"), &fam(ctx, Family::ADerExc, n, class)?, &closed)?;
            if !closed.is_zero() {
                positive_with_center(format!("SD_{n} {class}"), &closed, VarMode::Univariate, half(n))?;
            }
        }
    }
    Ok(span(2, ctx.limits.a))
}

fn der_fixed_points(ctx: &Ctx) -> Outcome {
    for n in 1..=ctx.limits.a {
        for i in 0..=n {
            for class in ALL_PM {
                let closed = derangement_closed(n, class, Some(i))?;
                let oracle = fam(ctx, Family::ADerExcFixed(i), n, class)?;
                same(format!("SD_({n},{i}) {class}"), &oracle, &closed)?;
                if !closed.is_zero() {
                    let label = format!("SD_({n},{i}) {class}");
                    positive_with_center(label, &closed, VarMode::Univariate, half(n - i))?;
                }
            }
        }
    }
    Ok(span(1, ctx.limits.a))
}

// ---------------------------------------------------------------- bijections

fn bij_fft(ctx: &Ctx) -> Outcome {
    let top = ctx.limits.a.min(8);
    for n in 1..=top {
        let all = perms(GroupSpec::symmetric(n))?;
        let mut image = HashSet::with_capacity(all.len());
        for p in &all {
            let w = foata_fft(p);
            ensure(w.des() == p.exc(), || format!("des(FFT({p})) = {} but exc = {}", w.des(), p.exc()))?;
            image.insert(w);
        }
        ensure(image.len() == all.len(), || format!("FFT is not injective on S_{n}"))?;
    }
    Ok(span(1, top))
}

fn bij_move_n_to_front(ctx: &Ctx) -> Outcome {
    let top = ctx.limits.a.min(7);
    for n in 2..=top {
        let src = perms(GroupSpec::Sym {
            n,
            class: Class::All,
            pos_n: Some(n - 1),
        })?;
        let mut image = HashSet::new();
        for p in &src {
            let q = move_n_to_front(p)?;
            ensure(q.pos_n() == 1, || format!("{p} maps to {q}, which does not start with n"))?;
            let (sp, sq) = (p.stats(), q.stats());
            ensure(sp.exc == sq.des && sp.nexc == sq.asc + 1, || {
                format!("{p} -> {q}: (exc, nexc) = ({}, {}), (des, asc) = ({}, {})", sp.exc, sp.nexc, sq.des, sq.asc)
            })?;
            image.insert(q);
        }
        let target = perms(GroupSpec::Sym {
            n,
            class: Class::All,
            pos_n: Some(1),
        })?;
        ensure(image.len() == target.len() && src.len() == target.len(), || {
            format!("not a bijection at n = {n}")
        })?;
    }
    Ok(span(2, top))
}

fn bij_swap_tail(ctx: &Ctx) -> Outcome {
    let top = ctx.limits.a.min(7);
    for n in 3..=top {
        for r in 1..=n - 2 {
            let spec = |class| GroupSpec::Sym {
                n,
                class,
                pos_n: Some(r),
            };
            for p in perms(spec(Class::All))? {
                let q = swap_tail(&p)?;
                ensure(swap_tail(&q)? == p, || format!("not an involution at {p}"))?;
                let (sp, sq) = (p.stats(), q.stats());
                ensure(sp.exc == sq.exc && sp.sign == -sq.sign && q.pos_n() == r, || {
                    format!("{p} -> {q} changes exc or keeps the sign")
                })?;
            }
            let weight = crate::oracle::WeightSpec::new(&[(Var::T, crate::oracle::Stat::Exc, 0), (Var::S, crate::oracle::Stat::Nexc, -1)]);
            let whole = ctx.oracle.dist_poly(&spec(Class::All), &weight)?;
            let even = ctx.oracle.dist_poly(&spec(Class::Plus), &weight)?;
            same(format!("2 * sum over A_{n}^{r} vs S_{n}^{r}"), &even.scale(&BigInt::from(2)), &whole)?;
        }
    }
    Ok(span(3, top))
}

fn bij_cycle_map(ctx: &Ctx) -> Outcome {
    let top = ctx.limits.a.min(7);
    for n in 2..=top {
        let mut image = HashSet::new();
        for a in perms(GroupSpec::symmetric(n - 1))? {
            let c = cycle_map(&a);
            ensure(c.cycles().len() == 1, || format!("{a} maps to {c}, not an {n}-cycle"))?;
            ensure(c.exc() == a.des() + 1, || format!("{a} -> {c}: exc {} des {}", c.exc(), a.des()))?;
            ensure(cycle_map_inverse(&c)? == a, || format!("inverse fails at {c}"))?;
            image.insert(c);
        }
        let cycles = perms(GroupSpec::Conjugacy(CycleType::new(vec![n])?))?;
        ensure(image.len() == cycles.len(), || format!("not onto the {n}-cycles"))?;
    }
    Ok(span(2, top))
}

fn bij_order_preserving(ctx: &Ctx) -> Outcome {
    let top = ctx.limits.a.min(6);
    for n in 1..=top {
        for p in perms(GroupSpec::symmetric(n))? {
            let mut total = 0;
            for cycle in p.cycles() {
                let small = restrict_order_preserving(&cycle)?;
                ensure(small.exc() == cycle_excedances(&cycle), || {
                    format!("restriction of {cycle:?} changes the excedance count")
                })?;
                total += small.exc();
            }
            ensure(total == p.exc(), || format!("{p}: cycle excedances sum to {total}"))?;
        }
    }
    if ctx.limits.a >= 5 {
        let lambda = CycleType::new(vec![3, 2])?;
        let t = Poly::var(Var::T);
        let want = (&(&t * &eulerian_t(2)?) * &(&t * &eulerian_t(1)?)).scale(&BigInt::from(10));
        same("C_(3,2)", &fam(ctx, Family::ConjExc(lambda), 5, Class::All)?, &want)?;
    }
    Ok(span(1, top))
}

// ---------------------------------------------------------------- q-refined

fn q_positive(ctx: &Ctx, stat: QStat) -> Outcome {
    let top = ctx.limits.a.min(7);
    for n in 2..=top {
        for class in PM {
            let p = ctx.oracle.q_refined(n, stat, class)?;
            if p.is_zero() {
                continue;
            }
            let g = gamma_decompose_q(&p).map_err(|e| fail(format!("n = {n} {class}: {e}")))?;
            ensure(g.all_gammas_nonnegative(), || format!("n = {n} {class}: {g}"))?;
            ensure(g.center_of_symmetry() == half(n), || {
                format!("n = {n} {class}: center {}", g.center_of_symmetry())
            })?;
        }
    }
    Ok(span(2, top))
}

fn q_inv(ctx: &Ctx) -> Outcome {
    q_positive(ctx, QStat::Inv)
}

fn q_cyc(ctx: &Ctx) -> Outcome {
    q_positive(ctx, QStat::Cyc)
}

fn q_collapse(ctx: &Ctx) -> Outcome {
    let top = ctx.limits.a.min(7);
    for n in 1..=top {
        for stat in [QStat::Inv, QStat::Cyc] {
            for class in ALL_PM {
                let p = ctx.oracle.q_refined(n, stat, class)?.substitute_one(Var::Q)?;
                same(format!("q=1 at n = {n} {class}"), &p, &derangement_closed(n, class, None)?)?;
            }
        }
    }
    Ok(span(1, top))
}

macro_rules! check {
    ($id:literal, $suite:ident, $claim:literal, $f:expr) => {
        Check {
            id: $id,
            suite: Suite::$suite,
            claim: $claim,
            run: $f,
        }
    };
}

static REGISTRY: &[Check] = &[
    check!("gamma.products", GammaCalculus, "products of gamma-positive polynomials, centers add", gamma_products),
    check!("gamma.derivative", GammaCalculus, "D keeps gamma positivity, center drops by 1/2", gamma_derivative),
    check!("gamma.multipliers", GammaCalculus, "(st)^i and (s+t) multipliers shift the center", gamma_multipliers),
    check!("gamma.round_trip", GammaCalculus, "decompose and recompose are inverse", gamma_round_trip),
    check!("gamma.odd_split", GammaCalculus, "odd-length expansions split into two with centers one apart", gamma_odd_split),
    check!("a.eulerian_insertion", TypeA, "insertion recurrence gives the (des, asc) distribution on S_n", a_eulerian_insertion),
    check!("a.published_values", TypeA, "AExc_5 and AExc_7 coefficients and gamma vectors", a_published_values),
    check!("a.step_recurrence", TypeA, "one-step recurrence for AExc^+- matches enumeration", a_step_recurrence),
    check!("a.half_sum", TypeA, "AExc^+- = (A_n +- (s-t)^(n-1))/2", a_half_sum),
    check!("a.palindromic_iff_odd", TypeA, "AExc_n^+- is palindromic exactly for odd n", a_palindromic_iff_odd),
    check!("a.derivative_identity", TypeA, "D AExc^+ = D AExc^- = D A_n / 2", a_derivative_identity),
    check!("a.coefficient_tables", TypeA, "coefficient recurrences reproduce AExc^+- rows", a_coefficient_tables),
    check!("a.jump4", TypeA, "jump-by-four with the L table equals four single steps", a_jump4),
    check!("a.gamma_odd", TypeA, "AExc_n^+- gamma positive with center (n-1)/2 for odd n", a_gamma_odd),
    check!("a.split_even", TypeA, "AExc_n^+- for even n is a sum of two gamma-positive parts", a_split_even),
    check!("sgn.a_exc", SignedSums, "signed excedance sum over S_n is (s-t)^(n-1)", sgn_a_exc),
    check!("sgn.b_exc", SignedSums, "signed excedance sum over B_n is (s-t)^n", sgn_b_exc),
    check!("sgn.b_des_u", SignedSums, "signed descent sum over B_n with position of n is (s-t)^n u^n", sgn_b_des_u),
    check!("sgn.b_partial_zero", SignedSums, "signed descent sum vanishes when n is not last", sgn_b_partial_zero),
    check!("sgn.d_exc", SignedSums, "signed excedance sum over D_n by parity of n", sgn_d_exc),
    check!("sgn.d_jump", SignedSums, "SgnDExc_(n+4) = (s-t)^4 SgnDExc_n", sgn_d_jump),
    check!("b.eulerian_insertion", TypeB, "insertion recurrence gives the (des_B, asc_B) distribution", b_eulerian_insertion),
    check!("b.exc_des", TypeB, "exc_B and des_B are equidistributed over B_n", b_exc_des),
    check!("b.equidistribution", TypeB, "exc_B and des_B are equidistributed over B_n^+ and B_n^-", b_equidistribution),
    check!("b.step_recurrence", TypeB, "one-step recurrence for BExc^+- matches enumeration", b_step_recurrence),
    check!("b.half_sum", TypeB, "BExc^+- = (B_n +- (s-t)^n)/2", b_half_sum),
    check!("b.length_parity", TypeB, "inv_B splits B_n in half; both length formulas agree", b_length_parity),
    check!("b.gamma_even", TypeB, "BExc_n^+- gamma positive with center n/2 for even n", b_gamma_even),
    check!("b.split_odd", TypeB, "BExc_n^+- for odd n is a sum of two gamma-positive parts", b_split_odd),
    check!("d.bridge", TypeD, "DExc_n = BExc_n^+ and (B-D)Exc_n = BExc_n^-", d_bridge),
    check!("d.step_recurrence", TypeD, "paired recurrence for DExc and (B-D)Exc matches enumeration", d_step_recurrence),
    check!("d.published_values", TypeD, "DExc_4 and DExc_6 coefficients and gamma vectors", d_published_values),
    check!("d.length_parity", TypeD, "inv_D splits D_n in half", d_length_parity),
    check!("d.jump4", TypeD, "jump-by-four with the R table and S_(n+4) equals single steps", d_jump4),
    check!("d.gamma_even", TypeD, "DExc_n^+- gamma positive with center n/2 for even n", d_gamma_even),
    check!("d.split_odd", TypeD, "DExc_n^+- for odd n is a sum of two gamma-positive parts", d_split_odd),
    check!("der.cycle_class", Derangements, "excedances over n-cycles give t A_(n-1)(t)", der_cycle_class),
    check!("der.two_cycles", Derangements, "two-cycle classes factor into per-cycle polynomials", der_two_cycles),
    check!("der.set_partition_count", Derangements, "set-partition count times cyclic orders is the class size", der_set_partition_count),
    check!("der.conjugacy_formula", Derangements, "class polynomial product formula, gamma positive", der_conjugacy_formula),
    check!("der.derangements", Derangements, "derangement polynomials by sign, center n/2", der_derangements),
    check!("der.fixed_points", Derangements, "fixed-point refinement by sign, center (n-i)/2", der_fixed_points),
    check!("bij.fft", Bijections, "Foata's transformation sends exc to des bijectively", bij_fft),
    check!("bij.move_n_to_front", Bijections, "n in position n-1 maps bijectively to n in front, exc to des", bij_move_n_to_front),
    check!("bij.swap_tail", Bijections, "tail swap is a sign-reversing exc-preserving involution", bij_swap_tail),
    check!("bij.cycle_map", Bijections, "S_(n-1) maps onto n-cycles with exc = des + 1", bij_cycle_map),
    check!("bij.order_preserving", Bijections, "relabelling cycles keeps excedances", bij_order_preserving),
    check!("q.inv", QRefined, "q^inv refinement over SD_n^+- has positive q-gammas", q_inv),
    check!("q.cyc", QRefined, "q^cyc refinement over SD_n^+- has positive q-gammas", q_cyc),
    check!("q.collapse", QRefined, "q = 1 recovers the derangement polynomials", q_collapse),
];

pub fn registry() -> &'static [Check] {
    REGISTRY
}
