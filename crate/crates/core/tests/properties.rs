use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use tsi_core::numerics::{ladder_norm_ratio, Quadrature, Tolerances};
use tsi_core::okamoto::{okamoto, okamoto_degree, toda_rhs};
use tsi_core::painleve::{backlund, identify, rational_solution, BacklundMap, Branch, Family};
use tsi_core::ring::{rat, wronskian_poly, ExactPoly, Parity, QuasiGaussian, RationalFn, SqrtTwoScalar};
use tsi_core::rootcount::sturm_count;
use tsi_core::spectral::{
    ladder, ladder_constant_sq, mode_energy, potential, shape_invariance_defect, zero_mode,
    zero_mode_from_superpotentials, Direction,
};
use tsi_core::ttrr::{ode_residual, ttrr_sequence};
use tsi_core::wronsk::{hermite_seed, xhermite_from_ttrr, SeedKind};

fn scalar() -> impl Strategy<Value = SqrtTwoScalar> {
    (-20i64..=20, 1i64..=6, -20i64..=20, 1i64..=6).prop_map(|(a, da, b, db)| SqrtTwoScalar::new(rat(a, da), rat(b, db)))
}

fn poly(max_len: usize) -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec(scalar(), 1..=max_len).prop_map(ExactPoly::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = ExactPoly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn to_f64(s: &SqrtTwoScalar) -> f64 {
    s.to_f64()
}

/// Sign of `a + b√2` from a 200-bit integer bracket of √2.
fn bracket_sign(a: &BigRational, b: &BigRational) -> Option<i32> {
    let g = 200usize;
    let root = (BigInt::from(2) << (2 * g)).sqrt();
    let scale = BigRational::from_integer(BigInt::from(1) << g);
    let lo = a + b * (BigRational::from_integer(root.clone()) / &scale);
    let hi = a + b * (BigRational::from_integer(root + 1) / &scale);
    let sign = |r: &BigRational| {
        if r.is_zero() {
            0
        } else if r.is_positive() {
            1
        } else {
            -1
        }
    };
    (sign(&lo) == sign(&hi)).then(|| sign(&lo))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_division_inverts_multiplication(r in poly(6), q in nonzero_poly(5)) {
        prop_assert_eq!((&r * &q).divide_exact(&q).unwrap(), r);
    }

    #[test]
    fn gcd_recovers_common_factor(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(4)) {
        let g = (&a * &c).gcd(&(&b * &c));
        prop_assert!((&a * &c).divide_exact(&g).is_ok());
        prop_assert!((&b * &c).divide_exact(&g).is_ok());
        prop_assert!(g.divide_exact(&c.monic()).is_ok() || c.is_constant());
    }

    #[test]
    fn rational_sum_clears_to_cross_product(a in poly(4), b in nonzero_poly(4), c in poly(4), d in nonzero_poly(4)) {
        let f = RationalFn::new(a.clone(), b.clone()).unwrap();
        let g = RationalFn::new(c.clone(), d.clone()).unwrap();
        let lhs = (&f + &g).mul_poly(&(&b * &d));
        let rhs = RationalFn::from_poly(&(&a * &d) + &(&c * &b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wronskian_is_alternating(fs in prop::collection::vec(nonzero_poly(6), 2..=4), i in 0usize..4, j in 0usize..4) {
        let (i, j) = (i % fs.len(), j % fs.len());
        prop_assume!(i != j);
        let mut swapped = fs.clone();
        swapped.swap(i, j);
        prop_assert_eq!(wronskian_poly(&swapped).unwrap(), -wronskian_poly(&fs).unwrap());
    }

    #[test]
    fn quasi_derivative_matches_difference_quotient(
        num in nonzero_poly(5),
        exp in prop::sample::select(vec![-1i32, 1]),
        p in -30i64..=30,
        q in 10i64..=20,
    ) {
        let den = ExactPoly::from_ints(&[3, 0, 2]);
        let g = QuasiGaussian::new(RationalFn::new(num, den).unwrap(), exp);
        let x0 = p as f64 / q as f64;
        let at = |f: &QuasiGaussian, x: f64| {
            let xr = SqrtTwoScalar::from_rational(BigRational::from_float(x).unwrap());
            to_f64(&f.rational_part().eval(&xr).unwrap()) * (f.gauss_exponent() as f64 * x * x / 6.0).exp()
        };
        let exact = at(&g.derivative(), x0);
        let h = 1e-3;
        let fd = (at(&g, x0 - 2.0 * h) - 8.0 * at(&g, x0 - h) + 8.0 * at(&g, x0 + h) - at(&g, x0 + 2.0 * h))
            / (12.0 * h);
        let scale = 1.0 + exact.abs() + at(&g, x0).abs();
        prop_assert!((exact - fd).abs() <= 1e-8 * scale, "{} vs {}", exact, fd);
    }

    #[test]
    fn scalar_sign_matches_high_precision_bracket(a in -10_000i64..=10_000, da in 1i64..=97, b in -10_000i64..=10_000, db in 1i64..=97) {
        let (ar, br) = (rat(a, da), rat(b, db));
        let s = SqrtTwoScalar::new(ar.clone(), br.clone());
        let want = bracket_sign(&ar, &br).expect("bracket resolves for rational inputs");
        prop_assert_eq!(s.signum(), want);
    }

    #[test]
    fn sturm_counts_constructed_roots(
        roots in prop::collection::btree_set(-12i64..=12, 0..5),
        den in 1i64..=5,
        bumps in prop::collection::vec(1i64..=9, 0..3),
    ) {
        let mut p = ExactPoly::one();
        for &r in &roots {
            p = &p * &ExactPoly::from_rationals(vec![rat(-r, den), rat(1, 1)]);
        }
        for &c in &bumps {
            p = &p * &ExactPoly::from_ints(&[c, 0, 1]);
        }
        let report = sturm_count(&p);
        prop_assert_eq!(report.n_total, roots.len());
        prop_assert_eq!(report.n0, usize::from(roots.contains(&0)));
        prop_assert_eq!(report.n_plus, roots.iter().filter(|&&r| r > 0).count());
        prop_assert_eq!(report.n_minus, roots.iter().filter(|&&r| r < 0).count());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn okamoto_degree_parity_and_recurrences(m in 1i64..=4, n in 0i64..=4) {
        let q = okamoto(m, n).unwrap();
        let d = okamoto_degree(m, n);
        prop_assert_eq!(q.degree(), Some(d as usize));
        let want = if d % 2 == 0 { Parity::Even } else { Parity::Odd };
        prop_assert_eq!(q.parity(), Some(want));
        let first = &*okamoto(m + 1, n).unwrap() * &*okamoto(m - 1, n).unwrap();
        prop_assert_eq!(first, toda_rhs(&q, 2 * m + n - 1));
        let second = &*okamoto(m, n + 1).unwrap() * &*okamoto(m, n - 1).unwrap();
        prop_assert_eq!(second, toda_rhs(&q, 1 - m - 2 * n));
    }

    #[test]
    fn backlund_images_stay_in_the_hierarchy(m in 0i64..=3, n in 0i64..=3, map in prop::sample::select(BacklundMap::all())) {
        let seed = rational_solution(Family::One, m, n).unwrap();
        let img = backlund(&seed, map).unwrap();
        let matches: Vec<(Family, i64, i64)> = Family::ALL
            .into_iter()
            .flat_map(|f| (-8i64..=8).flat_map(move |a| (-8i64..=8).map(move |b| (f, a, b))))
            .filter(|&(f, a, b)| f.parameters(a, b) == (img.alpha.clone(), img.beta.clone()))
            .collect();
        prop_assert!(!matches.is_empty(), "{} of ({},{}) has parameters outside the hierarchy", map, m, n);
        if matches.iter().any(|&(_, a, b)| (0..=6).contains(&a) && (-1..=6).contains(&b)) {
            prop_assert!(identify(&img, 6).is_some(), "{} of ({},{}) not identified", map, m, n);
        }
    }

    #[test]
    fn log_and_product_forms_agree(f in prop::sample::select(Family::ALL.to_vec()), m in 0i64..=4, n in 0i64..=4) {
        // rational_solution compares the two forms whenever the product form exists
        prop_assert!(rational_solution(f, m, n).is_ok());
    }

    #[test]
    fn shape_invariance_and_ladder_on_modes(k in 0i64..=2, j in 1u8..=3, n in 0usize..=3) {
        let seq = ttrr_sequence(k, j, n + 1).unwrap();
        let f = seq[n].function();
        prop_assert!(shape_invariance_defect(k, &f).is_zero());
        let raised = ladder(k, Direction::Raise).apply(&f);
        let c = raised.proportionality(&seq[n + 1].function()).unwrap();
        let tau = ladder(k, Direction::Lower).apply(&seq[n + 1].function()).proportionality(&f).unwrap();
        prop_assert_eq!((c * tau).to_rational().unwrap(), ladder_constant_sq(k, j, n as i64));
    }

    #[test]
    fn minus_branch_swaps_sequences(k in 0i64..=3) {
        for (a, b) in [(2u8, 3u8), (3, 2)] {
            let minus = zero_mode_from_superpotentials(k, a, Branch::Minus);
            let plus = zero_mode_from_superpotentials(k, b, Branch::Plus);
            prop_assert!(minus.proportionality(&plus).is_some());
        }
        prop_assert!(zero_mode_from_superpotentials(k, 1, Branch::Minus)
            .proportionality(&zero_mode(k, 1).function())
            .is_some());
    }

    #[test]
    fn progressions_never_overlap(k in 0i64..=12) {
        let mut seen = std::collections::BTreeSet::new();
        for j in 1..=3u8 {
            for n in 0..50 {
                prop_assert!(seen.insert(mode_energy(k, j, n)));
            }
        }
    }

    #[test]
    fn recurrence_entries_solve_the_ode(k in 0i64..=3, j in 1u8..=3) {
        for m in ttrr_sequence(k, j, 5).unwrap() {
            prop_assert!(ode_residual(k, j, m.n, &m.poly).unwrap().is_zero());
            let xh = xhermite_from_ttrr(k, j, m.n).unwrap();
            prop_assert_eq!(xh.degree(), m.poly.degree());
        }
    }

    #[test]
    fn seed_derivative_ladder(r in 1i64..=30, kind in prop::sample::select(vec![SeedKind::Plain, SeedKind::Pseudo])) {
        let d = hermite_seed(r, kind).poly.derivative();
        prop_assert_eq!(d, hermite_seed(r - 1, kind).poly.scale(&SqrtTwoScalar::from_integer(2)));
    }

    #[test]
    fn numeric_norm_ratio_matches_ladder_constant(k in 0i64..=2, j in 1u8..=3, n in 0usize..=3) {
        let quad = Quadrature::from_tolerances(&Tolerances::default());
        let mode = &ttrr_sequence(k, j, n).unwrap()[n];
        let ratio = ladder_norm_ratio(mode, &quad).unwrap();
        let c2 = ladder_constant_sq(k, j, n as i64);
        let c2 = tsi_core::numerics::round_rational(&c2, 53);
        prop_assert!((ratio / c2 - 1.0).abs() <= Tolerances::default().norm_rel_tol, "{} vs {}", ratio, c2);
    }

    #[test]
    fn potential_is_regular(k in 0i64..=5) {
        prop_assert!(potential(k).is_regular());
    }
}
