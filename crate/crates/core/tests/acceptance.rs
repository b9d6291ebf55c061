//! Acceptance suite: twelve end-to-end criteria, each printed as one
//! PASS/FAIL line. Runs without the libtest harness; exits nonzero if any
//! criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use excgamma::bijections::{cycle_map, cycle_map_inverse, foata_fft, move_n_to_front, swap_tail};
use excgamma::closed::{
    coeff_tables, coefficient_row, conj_exc_closed, derangement_closed, dexc_closed, eulerian,
    half_sum_closed, jump4, jump4_a, jump4_d, signed_closed, step_a, step_b, step_d,
    two_term_split, EulerType, SignedKind,
};
use excgamma::groups::{partitions, Budget, Class, CycleType, Element, GroupSpec, PartitionFilter, Perm};
use excgamma::oracle::{Family, FamilySpec, Oracle, QStat};
use excgamma::poly::st::{s, s_minus_t};
use excgamma::poly::{gamma_decompose, gamma_decompose_q, Poly, Var, VarMode};
use num_bigint::BigInt;
use num_rational::Ratio;

type Outcome = Result<(), String>;

const PM: [Class; 2] = [Class::Plus, Class::Minus];
const ALL_PM: [Class; 3] = [Class::All, Class::Plus, Class::Minus];

fn oracle() -> Oracle {
    Oracle::default()
}

fn fam(family: Family, n: usize, class: Class) -> Result<Poly, String> {
    oracle()
        .family_poly(&FamilySpec::new(family, n, class))
        .map_err(|e| e.to_string())
}

fn eq(label: impl std::fmt::Display, left: &Poly, right: &Poly) -> Outcome {
    if left == right {
        Ok(())
    } else {
        Err(format!("{label}: {left} != {right}"))
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(label: &str, start: Instant, limit: Duration) -> Outcome {
    let took = start.elapsed();
    check(took < limit, || format!("{label} took {took:?}, limit {limit:?}"))
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn row(coeffs: &[i64]) -> Vec<BigInt> {
    coeffs.iter().map(|&c| BigInt::from(c)).collect()
}

/// Coefficients of `s^(d-k) t^k` for `k = 0..=d`.
fn st_row(p: &Poly) -> Vec<BigInt> {
    p.t_coefficients()
}

fn gammas(p: &Poly, mode: VarMode) -> Result<(u32, Vec<BigInt>), String> {
    let g = gamma_decompose(p, mode).map_err(e)?;
    Ok((g.r, g.gammas))
}

fn half(k: usize) -> Ratio<u32> {
    Ratio::new(k as u32, 2)
}

fn perms(spec: GroupSpec) -> Result<Vec<Perm>, String> {
    Ok(spec
        .elements(Budget::DEFAULT)
        .map_err(e)?
        .filter_map(|x| match x {
            Element::Unsigned(p) => Some(p),
            Element::Signed(_) => None,
        })
        .collect())
}

fn published_a() -> Outcome {
    let cases: [(usize, Class, &[i64], u32, &[i64]); 4] = [
        (5, Class::Plus, &[1, 11, 36, 11, 1], 0, &[1, 7, 16]),
        (5, Class::Minus, &[0, 15, 30, 15, 0], 1, &[15, 0]),
        (7, Class::Plus, &[1, 57, 603, 1198, 603, 57, 1], 0, &[1, 51, 384, 104]),
        (7, Class::Minus, &[0, 63, 588, 1218, 588, 63, 0], 1, &[63, 336, 168]),
    ];
    let start = Instant::now();
    for (n, class, coeffs, r, g) in cases {
        let p = half_sum_closed(EulerType::A, n, class).map_err(e)?;
        let mut want = row(coeffs);
        while want.last().is_some_and(|c| *c == BigInt::from(0)) {
            want.pop();
        }
        check(st_row(&p) == want, || format!("AExc_{n} {class}: {p}"))?;
        check(gammas(&p, VarMode::Bivariate)? == (r, row(g)), || {
            format!("AExc_{n} {class}: gamma vector of {p}")
        })?;
    }
    within("closed forms", start, Duration::from_secs(1))?;
    let start = Instant::now();
    for (n, class, ..) in cases {
        let closed = half_sum_closed(EulerType::A, n, class).map_err(e)?;
        eq(format!("oracle AExc_{n} {class}"), &fam(Family::AExc, n, class)?, &closed)?;
    }
    within("oracle", start, Duration::from_secs(5))
}

fn published_d() -> Outcome {
    let cases: [(usize, Class, &[i64], u32, &[i64]); 4] = [
        (4, Class::Plus, &[1, 16, 62, 16, 1], 0, &[1, 12, 32]),
        (4, Class::Minus, &[0, 20, 56, 20, 0], 1, &[20, 16]),
        (6, Class::Plus, &[1, 176, 2647, 5872, 2647, 176, 1], 0, &[1, 170, 1952, 928]),
        (6, Class::Minus, &[0, 182, 2632, 5892, 2632, 182, 0], 1, &[182, 1904, 992]),
    ];
    for (n, class, coeffs, r, g) in cases {
        let p = dexc_closed(n, class).map_err(e)?;
        let mut want = row(coeffs);
        while want.last().is_some_and(|c| *c == BigInt::from(0)) {
            want.pop();
        }
        check(st_row(&p) == want, || format!("DExc_{n} {class}: {p}"))?;
        check(gammas(&p, VarMode::Bivariate)? == (r, row(g)), || {
            format!("DExc_{n} {class}: gamma vector of {p}")
        })?;
    }
    let start = Instant::now();
    for (n, class, ..) in cases {
        let closed = dexc_closed(n, class).map_err(e)?;
        eq(format!("oracle DExc_{n} {class}"), &fam(Family::DExc, n, class)?, &closed)?;
    }
    within("oracle", start, Duration::from_secs(10))
}

fn signed_a() -> Outcome {
    let start = Instant::now();
    for n in 2..=8 {
        eq(format!("SgnAExc_{n}"), &fam(Family::SgnAExc, n, Class::All)?, &s_minus_t().pow(n as u32 - 1))?;
    }
    within("signed type A sums", start, Duration::from_secs(30))
}

fn signed_b() -> Outcome {
    for n in 1..=6 {
        let want = s_minus_t().pow(n as u32);
        eq(format!("SgnBExc_{n}"), &fam(Family::SgnBExc, n, Class::All)?, &want)?;
        let u = Poly::monomial(&[(Var::U, n as u32)], 1);
        let (total, _, elsewhere) = oracle().sgnb_des_u_split(n, None).map_err(e)?;
        eq(format!("SgnB_{n}(s,t,u)"), &total, &(&want * &u))?;
        check(elsewhere.is_zero(), || format!("n = {n}: partial sum {elsewhere}"))?;
    }
    Ok(())
}

fn signed_d() -> Outcome {
    let expected = |n: usize| {
        if n.is_multiple_of(2) {
            s_minus_t().pow(n as u32)
        } else {
            &s() * &s_minus_t().pow(n as u32 - 1)
        }
    };
    let mut oracle_values = Vec::new();
    for n in 1..=7 {
        let p = fam(Family::SgnDExc, n, Class::All)?;
        eq(format!("SgnDExc_{n}"), &p, &expected(n))?;
        oracle_values.push(p);
    }
    let q = s_minus_t().pow(4);
    for n in 1..=3 {
        eq(format!("SgnDExc_{} jump", n + 4), &oracle_values[n + 3], &(&q * &oracle_values[n - 1]))?;
    }
    for n in 1..=16 {
        let lo = signed_closed(SignedKind::D, n).map_err(e)?;
        let hi = signed_closed(SignedKind::D, n + 4).map_err(e)?;
        eq(format!("closed SgnDExc_{} jump", n + 4), &hi, &(&q * &lo))?;
    }
    Ok(())
}

fn equidistribution() -> Outcome {
    for n in 1..=6 {
        for class in PM {
            eq(
                format!("B_{n} {class}"),
                &fam(Family::BDes, n, class)?,
                &fam(Family::BExc, n, class)?,
            )?;
        }
        eq(format!("DExc_{n}"), &fam(Family::DExc, n, Class::All)?, &fam(Family::BExc, n, Class::Plus)?)?;
        eq(format!("BDExc_{n}"), &fam(Family::BDExc, n, Class::All)?, &fam(Family::BExc, n, Class::Minus)?)?;
    }
    Ok(())
}

fn recurrences() -> Outcome {
    for n in 2..=8 {
        let (p, m) = step_a(n).map_err(e)?;
        eq(format!("AExc_{n}^+"), &p, &fam(Family::AExc, n, Class::Plus)?)?;
        eq(format!("AExc_{n}^-"), &m, &fam(Family::AExc, n, Class::Minus)?)?;
    }
    for n in 1..=6 {
        let (p, m) = step_b(n).map_err(e)?;
        eq(format!("BExc_{n}^+"), &p, &fam(Family::BExc, n, Class::Plus)?)?;
        eq(format!("BExc_{n}^-"), &m, &fam(Family::BExc, n, Class::Minus)?)?;
    }
    for n in 2..=6 {
        let (d, bd) = step_d(n).map_err(e)?;
        eq(format!("DExc_{n}"), &d, &fam(Family::DExc, n, Class::All)?)?;
        eq(format!("BDExc_{n}"), &bd, &fam(Family::BDExc, n, Class::All)?)?;
    }
    for n in 1..=9 {
        let (p, m) = step_a(n).map_err(e)?;
        let (jp, jm) = jump4_a(&p, &m).map_err(e)?;
        let (sp, sm) = step_a(n + 4).map_err(e)?;
        eq(format!("A jump to {}", n + 4), &jp, &sp)?;
        eq(format!("A jump to {}", n + 4), &jm, &sm)?;
    }
    for n in 1..=8 {
        let (p, m) = (dexc_closed(n, Class::Plus).map_err(e)?, dexc_closed(n, Class::Minus).map_err(e)?);
        let (jp, jm) = jump4_d(n, &p, &m).map_err(e)?;
        let (d, _) = step_d(n + 4).map_err(e)?;
        eq(format!("D jump to {}", n + 4), &(&jp + &jm), &d)?;
        eq(format!("D jump to {} plus", n + 4), &jp, &dexc_closed(n + 4, Class::Plus).map_err(e)?)?;
    }
    for n in [9, 13] {
        let (p, _) = step_a(n).map_err(e)?;
        eq(format!("A chain to {n}"), &jump4(&Family::AExc, n, Class::Plus).map_err(e)?, &p)?;
    }
    for n in [8, 12] {
        let (d, _) = step_d(n).map_err(e)?;
        eq(format!("D chain to {n}"), &jump4(&Family::DExc, n, Class::All).map_err(e)?, &d)?;
    }
    Ok(())
}

fn coefficient_tables() -> Outcome {
    let table = coeff_tables(12);
    for n in 2..=12 {
        for class in PM {
            let p = half_sum_closed(EulerType::A, n, class).map_err(e)?;
            check(table.row(n, class) == Some(coefficient_row(&p, n)), || {
                format!("row {n} {class}")
            })?;
        }
    }
    check(table.row(4, Class::Plus) == Some(row(&[1, 4, 7, 0])), || "row 4 plus".into())?;
    check(table.row(4, Class::Minus) == Some(row(&[0, 7, 4, 1])), || "row 4 minus".into())
}

fn bijections() -> Outcome {
    for n in 1..=8 {
        let all = perms(GroupSpec::symmetric(n))?;
        let image: HashSet<Perm> = all.iter().map(foata_fft).collect();
        check(image.len() == all.len(), || format!("FFT not injective on S_{n}"))?;
        if let Some(p) = all.iter().find(|p| foata_fft(p).des() != p.exc()) {
            return Err(format!("des(FFT({p})) != exc({p})"));
        }
    }
    for n in 2..=7 {
        let src = perms(GroupSpec::Sym { n, class: Class::All, pos_n: Some(n - 1) })?;
        let mut image = HashSet::new();
        for p in &src {
            let q = move_n_to_front(p).map_err(e)?;
            let (a, b) = (p.stats(), q.stats());
            check(q.pos_n() == 1 && a.exc == b.des && a.nexc == b.asc + 1, || format!("{p} -> {q}"))?;
            image.insert(q);
        }
        let dst = perms(GroupSpec::Sym { n, class: Class::All, pos_n: Some(1) })?;
        check(image.len() == dst.len(), || format!("not onto at n = {n}"))?;
    }
    for n in 3..=7 {
        for r in 1..=n - 2 {
            for p in perms(GroupSpec::Sym { n, class: Class::All, pos_n: Some(r) })? {
                let q = swap_tail(&p).map_err(e)?;
                let (a, b) = (p.stats(), q.stats());
                check(swap_tail(&q).map_err(e)? == p, || format!("{p}: not an involution"))?;
                check(a.exc == b.exc && a.sign == -b.sign && q.pos_n() == r, || format!("{p} -> {q}"))?;
            }
        }
    }
    for n in 2..=7 {
        let mut image = HashSet::new();
        for a in perms(GroupSpec::symmetric(n - 1))? {
            let c = cycle_map(&a);
            check(c.cycles().len() == 1 && c.exc() == a.des() + 1, || format!("{a} -> {c}"))?;
            check(cycle_map_inverse(&c).map_err(e)? == a, || format!("inverse at {c}"))?;
            image.insert(c);
        }
        let factorial: usize = (1..n).product();
        check(image.len() == factorial, || format!("not onto the {n}-cycles"))?;
    }
    Ok(())
}

fn conjugacy() -> Outcome {
    let start = Instant::now();
    for n in 1..=8 {
        for lambda in partitions(n, PartitionFilter::all()) {
            let closed = conj_exc_closed(&lambda).map_err(e)?;
            eq(format!("C_({lambda})"), &fam(Family::ConjExc(lambda.clone()), n, Class::All)?, &closed)?;
        }
        for class in ALL_PM {
            eq(
                format!("SD_{n} {class}"),
                &fam(Family::ADerExc, n, class)?,
                &derangement_closed(n, class, None).map_err(e)?,
            )?;
            for i in 0..=n {
                eq(
                    format!("SD_({n},{i}) {class}"),
                    &fam(Family::ADerExcFixed(i), n, class)?,
                    &derangement_closed(n, class, Some(i)).map_err(e)?,
                )?;
            }
        }
    }
    let two_two = conj_exc_closed(&CycleType::new(vec![2, 2]).map_err(e)?).map_err(e)?;
    eq("C_(2,2)", &two_two, &Poly::from_t_coeffs(&[0, 0, 3]))?;
    within("conjugacy and derangements", start, Duration::from_secs(60))
}

fn positive(label: &str, p: &Poly, mode: VarMode, cos: Ratio<u32>) -> Outcome {
    let g = gamma_decompose(p, mode).map_err(|x| format!("{label}: {x}"))?;
    check(g.all_gammas_nonnegative() && g.center_of_symmetry() == cos, || {
        format!("{label}: {g}, expected center {cos}")
    })
}

fn gamma_positivity() -> Outcome {
    for n in 2..=9 {
        for class in PM {
            let p = half_sum_closed(EulerType::A, n, class).map_err(e)?;
            let palindromic = gamma_decompose(&p, VarMode::Bivariate).is_ok();
            check(palindromic == (n % 2 == 1), || format!("AExc_{n} {class} palindromic = {palindromic}"))?;
        }
    }
    for n in 2..=8 {
        let (p, m) = step_a(n).map_err(e)?;
        let da = eulerian(EulerType::A, n).map_err(e)?.apply_d().map_err(e)?;
        let dp = p.apply_d().map_err(e)?;
        eq(format!("D AExc_{n}"), &dp, &m.apply_d().map_err(e)?)?;
        eq(format!("2 D AExc_{n}^+"), &dp.scale(&BigInt::from(2)), &da)?;
    }
    for class in PM {
        for n in (5..=11).step_by(2) {
            let p = half_sum_closed(EulerType::A, n, class).map_err(e)?;
            positive(&format!("AExc_{n} {class}"), &p, VarMode::Bivariate, half(n - 1))?;
        }
        for n in (2..=10).step_by(2) {
            let p = half_sum_closed(EulerType::B, n, class).map_err(e)?;
            positive(&format!("BExc_{n} {class}"), &p, VarMode::Bivariate, half(n))?;
        }
        for n in (4..=10).step_by(2) {
            let p = dexc_closed(n, class).map_err(e)?;
            positive(&format!("DExc_{n} {class}"), &p, VarMode::Bivariate, half(n))?;
        }
    }
    for n in 2..=8 {
        for class in ALL_PM {
            let p = derangement_closed(n, class, None).map_err(e)?;
            if p.is_zero() {
                // empty class, e.g. the even derangements of [2]
                continue;
            }
            positive(&format!("SD_{n} {class}"), &p, VarMode::Univariate, half(n))?;
        }
    }
    let splits: [(Family, &[usize]); 3] = [
        (Family::AExc, &[4, 6, 8, 10]),
        (Family::BExc, &[3, 5, 7, 9]),
        (Family::DExc, &[5, 7, 9]),
    ];
    for (family, ns) in splits {
        for &n in ns {
            for class in PM {
                let full = match family {
                    Family::AExc => half_sum_closed(EulerType::A, n, class),
                    Family::BExc => half_sum_closed(EulerType::B, n, class),
                    _ => dexc_closed(n, class),
                }
                .map_err(e)?;
                let sp = two_term_split(&family, n, class).map_err(e)?;
                eq(format!("{family}_{n} {class} split"), &sp.sum(), &full.substitute_one(Var::S).map_err(e)?)?;
                let (c1, c2) = sp.centers();
                check(c2 == c1 + 1, || format!("{family}_{n} {class}: centers {c1}, {c2}"))?;
                check(sp.g1.all_gammas_nonnegative() && sp.g2.all_gammas_nonnegative(), || {
                    format!("{family}_{n} {class}: {} / {}", sp.g1, sp.g2)
                })?;
            }
        }
    }
    Ok(())
}

fn q_refined() -> Outcome {
    for n in 2..=7 {
        for stat in [QStat::Inv, QStat::Cyc] {
            for class in PM {
                let p = oracle().q_refined(n, stat, class).map_err(e)?;
                let collapsed = p.substitute_one(Var::Q).map_err(e)?;
                eq(format!("q = 1 at n = {n} {class}"), &collapsed, &fam(Family::ADerExc, n, class)?)?;
                if p.is_zero() {
                    continue;
                }
                let g = gamma_decompose_q(&p).map_err(|x| format!("n = {n} {stat:?} {class}: {x}"))?;
                check(g.all_gammas_nonnegative(), || format!("n = {n} {stat:?} {class}: {g}"))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("type A published values", published_a),
        ("type D published values", published_d),
        ("signed type A sums", signed_a),
        ("signed type B sums", signed_b),
        ("signed type D sums and jump", signed_d),
        ("B and D equidistribution", equidistribution),
        ("recurrences against enumeration", recurrences),
        ("coefficient tables", coefficient_tables),
        ("bijections", bijections),
        ("conjugacy classes and derangements", conjugacy),
        ("gamma positivity and splits", gamma_positivity),
        ("q-refined gamma positivity", q_refined),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS  {:>2}  {name} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name} ({ms} ms): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
