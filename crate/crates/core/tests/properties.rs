use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;

use excgamma::bijections::{cycle_excedances, foata_fft, foata_fft_inverse, restrict_order_preserving};
use excgamma::groups::{Perm, SignedPerm};
use excgamma::poly::{gamma_decompose, gamma_recompose, split_odd_length, GammaExpansion, Poly, Var, VarMode};

fn poly_stu() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..4, 0u32..4, 0u32..3), -20i64..20), 0..6).prop_map(|terms| {
        let mut p = Poly::zero(&[Var::S, Var::T, Var::U]);
        for ((a, b, c), k) in terms {
            p.add_monomial(&[a, b, c], k);
        }
        p
    })
}

/// Nonnegative gamma vector with a nonzero leading entry.
fn expansion(mode: VarMode) -> impl Strategy<Value = GammaExpansion> {
    (0u32..3, 0u32..5, 1i64..30)
        .prop_flat_map(move |(r, half_len, lead)| {
            // the leading basis element carries `span` factors of (s+t),
            // and there are floor(span / 2) + 1 coordinates
            let parity = 0u32..2;
            (Just(r), Just(half_len), Just(lead), parity, prop::collection::vec(0i64..30, half_len as usize))
        })
        .prop_map(move |(r, half_len, lead, parity, rest)| {
            let span = 2 * half_len + parity;
            let n = match mode {
                VarMode::Bivariate => 2 * r + span,
                VarMode::Univariate => r + span,
            };
            let mut gammas = vec![BigInt::from(lead)];
            gammas.extend(rest.into_iter().map(BigInt::from));
            GammaExpansion { mode, r, n, gammas }
        })
}

fn perm(max: usize) -> impl Strategy<Value = Perm> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|w| Perm::new(w).unwrap())
}

fn signed_perm(max: usize) -> impl Strategy<Value = SignedPerm> {
    perm(max)
        .prop_flat_map(|p| {
            let n = p.len();
            (Just(p), prop::collection::vec(any::<bool>(), n))
        })
        .prop_map(|(p, signs)| {
            let w = p
                .window()
                .iter()
                .zip(signs)
                .map(|(&v, neg)| if neg { -(v as i32) } else { v as i32 })
                .collect();
            SignedPerm::new(w).unwrap()
        })
}

proptest! {
    #[test]
    fn ring_laws(a in poly_stu(), b in poly_stu(), c in poly_stu()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn d_is_a_derivation(a in poly_stu(), b in poly_stu()) {
        let lhs = (&a * &b).apply_d().unwrap();
        let rhs = &(&a.apply_d().unwrap() * &b) + &(&a * &b.apply_d().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bivariate_round_trip(g in expansion(VarMode::Bivariate)) {
        let p = gamma_recompose(&g);
        prop_assert_eq!(gamma_decompose(&p, VarMode::Bivariate).unwrap(), g);
    }

    #[test]
    fn univariate_round_trip(g in expansion(VarMode::Univariate)) {
        let p = gamma_recompose(&g);
        prop_assert_eq!(gamma_decompose(&p, VarMode::Univariate).unwrap(), g);
    }

    #[test]
    fn products_stay_positive(f in expansion(VarMode::Bivariate), g in expansion(VarMode::Bivariate)) {
        let h = gamma_decompose(&(&gamma_recompose(&f) * &gamma_recompose(&g)), VarMode::Bivariate).unwrap();
        prop_assert!(h.all_gammas_nonnegative());
        prop_assert_eq!(h.center_of_symmetry(), f.center_of_symmetry() + g.center_of_symmetry());
    }

    #[test]
    fn derivative_stays_positive(f in expansion(VarMode::Bivariate)) {
        prop_assume!(f.n > 0);
        let d = gamma_recompose(&f).apply_d().unwrap();
        let h = gamma_decompose(&d, VarMode::Bivariate).unwrap();
        prop_assert!(h.all_gammas_nonnegative());
        prop_assert_eq!(h.center_of_symmetry(), f.center_of_symmetry() - Ratio::new(1, 2));
    }

    #[test]
    fn odd_split_recomposes(g in expansion(VarMode::Univariate)) {
        prop_assume!((g.n - g.r) % 2 == 1);
        let (lo, hi) = split_odd_length(&g).unwrap();
        prop_assert_eq!(&gamma_recompose(&lo) + &gamma_recompose(&hi), gamma_recompose(&g));
        prop_assert!(lo.all_gammas_nonnegative() && hi.all_gammas_nonnegative());
        prop_assert_eq!(lo.center_of_symmetry() + 1, hi.center_of_symmetry());
    }

    #[test]
    fn fft_carries_exc_to_des(p in perm(10)) {
        let w = foata_fft(&p);
        prop_assert_eq!(w.des(), p.exc());
        prop_assert_eq!(foata_fft_inverse(&w), p);
    }

    #[test]
    fn cycle_relabelling_keeps_excedances(p in perm(10)) {
        let total: usize = p
            .cycles()
            .iter()
            .map(|c| {
                let small = restrict_order_preserving(c).unwrap();
                assert_eq!(small.exc(), cycle_excedances(c));
                small.exc()
            })
            .sum();
        prop_assert_eq!(total, p.exc());
    }

    #[test]
    fn statistics_partition_positions(p in perm(10)) {
        let st = p.stats();
        prop_assert_eq!(st.exc + st.nexc, p.len());
        prop_assert_eq!(st.des + st.asc + 1, p.len());
        prop_assert_eq!(st.sign, if st.inv % 2 == 0 { 1 } else { -1 });
    }

    #[test]
    fn type_b_length_formulas_agree(w in signed_perm(9)) {
        prop_assert_eq!(w.inv_b(), w.inv_b_negsum());
        let st = w.stats_b();
        prop_assert_eq!(st.exc_b + st.nexc_b, w.len());
        prop_assert_eq!(st.des_b + st.asc_b, w.len());
    }
}
