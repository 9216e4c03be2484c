use meandiv::summation::sum_over_support;
use meandiv::{
    classical_divergence, classical_mean, csiszar_divergence, f_generator, lp_divergence, lp_mean,
    parse_distribution, power_divergence, power_mean, scan_family, smooth, Distribution,
    DivergenceKind, ExtendedOrder, Family, Format, MeanKind,
};
use proptest::prelude::*;

fn rel_close(got: f64, want: f64, rel: f64) -> bool {
    (got - want).abs() <= rel * got.abs().max(want.abs())
}

fn scalar() -> impl Strategy<Value = f64> {
    (-13.8f64..13.8).prop_map(f64::exp)
}

fn order() -> impl Strategy<Value = ExtendedOrder> {
    prop_oneof![
        8 => (-30.0f64..30.0).prop_map(ExtendedOrder::Finite),
        1 => Just(ExtendedOrder::PosInf),
        1 => Just(ExtendedOrder::NegInf),
        1 => prop::sample::select(vec![-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0])
            .prop_map(ExtendedOrder::Finite),
    ]
}

fn normalized(raw: Vec<f64>) -> Distribution {
    let total: f64 = raw.iter().sum();
    Distribution::new(raw.into_iter().map(|x| x / total).collect()).unwrap()
}

fn dist_pair() -> impl Strategy<Value = (Distribution, Distribution)> {
    (2usize..24).prop_flat_map(|n| {
        (
            prop::collection::vec(1e-3f64..1.0, n),
            prop::collection::vec(1e-3f64..1.0, n),
        )
            .prop_map(|(a, b)| (normalized(a), normalized(b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn means_are_symmetric_and_between(a in scalar(), b in scalar(), o in order()) {
        let lp = lp_mean(o, a, b).unwrap();
        let pw = power_mean(o, a, b).unwrap();
        prop_assert_eq!(lp, lp_mean(o, b, a).unwrap());
        prop_assert_eq!(pw, power_mean(o, b, a).unwrap());
        for m in [lp, pw] {
            prop_assert!(m >= a.min(b) && m <= a.max(b), "{} outside [{}, {}]", m, a, b);
        }
    }

    #[test]
    fn means_are_homogeneous(a in scalar(), b in scalar(), o in order(), k in -5.0f64..5.0) {
        let lambda = k.exp();
        let lp = lp_mean(o, a, b).unwrap();
        let scaled = lp_mean(o, lambda * a, lambda * b).unwrap();
        prop_assert!(rel_close(scaled, lambda * lp, 1e-12), "{} vs {}", scaled, lambda * lp);
        let pw = power_mean(o, a, b).unwrap();
        let scaled = power_mean(o, lambda * a, lambda * b).unwrap();
        prop_assert!(rel_close(scaled, lambda * pw, 1e-12), "{} vs {}", scaled, lambda * pw);
    }

    #[test]
    fn means_increase_with_order(a in scalar(), b in scalar(), o1 in order(), o2 in order()) {
        let (lo, hi) = if o1 <= o2 { (o1, o2) } else { (o2, o1) };
        let tol = 1e-12 * a.max(b);
        prop_assert!(lp_mean(lo, a, b).unwrap() <= lp_mean(hi, a, b).unwrap() + tol);
        prop_assert!(power_mean(lo, a, b).unwrap() <= power_mean(hi, a, b).unwrap() + tol);
    }

    #[test]
    fn named_orders_give_classical_means(a in scalar(), b in scalar()) {
        let f = ExtendedOrder::Finite;
        let c = |k| classical_mean(k, a, b).unwrap();
        let checks = [
            (lp_mean(f(-2.0), a, b).unwrap(), c(MeanKind::Geometric)),
            (lp_mean(f(-1.0), a, b).unwrap(), c(MeanKind::Logarithmic)),
            (lp_mean(f(0.0), a, b).unwrap(), c(MeanKind::Identric)),
            (lp_mean(f(1.0), a, b).unwrap(), c(MeanKind::Arithmetic)),
            (lp_mean(f(-0.5), a, b).unwrap(), 0.5 * (c(MeanKind::Arithmetic) + c(MeanKind::Geometric))),
            (power_mean(f(-1.0), a, b).unwrap(), c(MeanKind::Harmonic)),
            (power_mean(f(0.0), a, b).unwrap(), c(MeanKind::Geometric)),
            (power_mean(f(1.0), a, b).unwrap(), c(MeanKind::Arithmetic)),
            (lp_mean(ExtendedOrder::PosInf, a, b).unwrap(), a.max(b)),
            (lp_mean(ExtendedOrder::NegInf, a, b).unwrap(), a.min(b)),
        ];
        for (got, want) in checks {
            prop_assert!(rel_close(got, want, 1e-12), "{} vs {}", got, want);
        }
    }

    #[test]
    fn csiszar_form_matches_direct((p, q) in dist_pair(), o in order()) {
        let lp = lp_divergence(o, &p, &q).unwrap();
        let engine = csiszar_divergence(&f_generator(Family::Lp, o), &p, &q).unwrap();
        prop_assert!((lp - engine).abs() <= 1e-12, "{} vs {}", lp, engine);
        let pw = power_divergence(o, &p, &q).unwrap();
        let engine = csiszar_divergence(&f_generator(Family::Power, o), &p, &q).unwrap();
        prop_assert!((pw - engine).abs() <= 1e-12, "{} vs {}", pw, engine);
    }

    #[test]
    fn family_divergences_are_symmetric((p, q) in dist_pair(), o in order()) {
        prop_assert_eq!(lp_divergence(o, &p, &q).unwrap(), lp_divergence(o, &q, &p).unwrap());
        prop_assert_eq!(power_divergence(o, &p, &q).unwrap(), power_divergence(o, &q, &p).unwrap());
    }

    #[test]
    fn divergence_identities((p, q) in dist_pair()) {
        let f = ExtendedOrder::Finite;
        let dv = classical_divergence(DivergenceKind::Variation, &p, &q).unwrap();
        let b = classical_divergence(DivergenceKind::Bhattacharyya, &p, &q).unwrap();
        let h = classical_divergence(DivergenceKind::Harmonic, &p, &q).unwrap();
        let close = |x: f64, y: f64, tol: f64| (x - y).abs() <= tol;
        prop_assert!(close(lp_divergence(ExtendedOrder::PosInf, &p, &q).unwrap(), 1.0 + 0.5 * dv, 1e-14));
        prop_assert!(close(lp_divergence(ExtendedOrder::NegInf, &p, &q).unwrap(), 1.0 - 0.5 * dv, 1e-14));
        prop_assert!(close(lp_divergence(f(-2.0), &p, &q).unwrap(), b, 1e-12));
        prop_assert!(close(lp_divergence(f(-0.5), &p, &q).unwrap(), 0.5 + 0.5 * b, 1e-12));
        prop_assert!(close(power_divergence(f(0.0), &p, &q).unwrap(), b, 1e-12));
        prop_assert!(close(power_divergence(f(-1.0), &p, &q).unwrap(), h, 1e-12));

        // Direct evaluation of the closed form at order -3.
        let direct: f64 = p
            .probs()
            .iter()
            .zip(q.probs())
            .map(|(&x, &y)| (2.0 * x * y / (x + y) * x * y).cbrt())
            .sum();
        prop_assert!(close(lp_divergence(f(-3.0), &p, &q).unwrap(), direct, 1e-12));
    }

    #[test]
    fn self_divergences((p, _) in dist_pair(), o in order()) {
        for kind in [
            DivergenceKind::Kl,
            DivergenceKind::Variation,
            DivergenceKind::Hellinger,
            DivergenceKind::ChiSquare,
            DivergenceKind::Alpha(0.3),
            DivergenceKind::Jeffreys,
            DivergenceKind::Triangular,
            DivergenceKind::LinWong,
        ] {
            prop_assert_eq!(classical_divergence(kind, &p, &p).unwrap(), 0.0, "{}", kind);
        }
        for kind in [DivergenceKind::Bhattacharyya, DivergenceKind::Harmonic] {
            prop_assert!((classical_divergence(kind, &p, &p).unwrap() - 1.0).abs() <= 1e-15);
        }
        prop_assert!((lp_divergence(o, &p, &p).unwrap() - 1.0).abs() <= 1e-15);
        prop_assert!((power_divergence(o, &p, &p).unwrap() - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn lin_wong_bounds((p, q) in dist_pair()) {
        let lw = classical_divergence(DivergenceKind::LinWong, &p, &q).unwrap();
        let wl = classical_divergence(DivergenceKind::LinWong, &q, &p).unwrap();
        let kl = classical_divergence(DivergenceKind::Kl, &p, &q).unwrap();
        let dv = classical_divergence(DivergenceKind::Variation, &p, &q).unwrap();
        let tol = 1e-12;
        prop_assert!(lw <= 0.5 * kl + tol);
        prop_assert!(lw + wl <= dv + tol);
        prop_assert!(dv <= 2.0 + tol);
        prop_assert!(lw <= 0.5 * dv + tol);
    }

    #[test]
    fn csv_and_json_round_trip((p, _) in dist_pair()) {
        let csv = parse_distribution(p.to_csv().as_bytes(), Format::Csv).unwrap();
        prop_assert_eq!(csv.probs(), p.probs());
        let json = parse_distribution(p.to_json().as_bytes(), Format::Json).unwrap();
        prop_assert_eq!(json.probs(), p.probs());
    }

    #[test]
    fn smoothing_is_a_valid_distribution((p, _) in dist_pair(), eps in 1e-9f64..1.0) {
        let s = smooth(&p, eps).unwrap();
        prop_assert!((s.sum() - 1.0).abs() <= 1e-15);
        prop_assert!(s.probs().iter().all(|&x| x > 0.0));
        for (w, v) in p.probs().windows(2).zip(s.probs().windows(2)) {
            prop_assert_eq!(w[0].partial_cmp(&w[1]), v[0].partial_cmp(&v[1]));
        }
    }

    #[test]
    fn summation_ignores_order(mut v in prop::collection::vec(-1.0f64..1.0, 0..200), seed in any::<u64>()) {
        let before = sum_over_support(&v).unwrap();
        let n = v.len();
        if n > 1 {
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                v.swap(i, (s >> 33) as usize % (i + 1));
            }
        }
        prop_assert!((sum_over_support(&v).unwrap() - before).abs() <= 1e-15);
    }

    #[test]
    fn scans_are_monotone((p, q) in dist_pair(), from in -20.0f64..0.0, width in 0.5f64..20.0) {
        for family in [Family::Lp, Family::Power] {
            let table = scan_family(family, &p, &q, from, from + width, 9).unwrap();
            prop_assert!(table.is_monotone(1e-12));
        }
    }
}
