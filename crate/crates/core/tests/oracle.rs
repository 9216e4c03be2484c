//! Values frozen from a 60-digit arbitrary-precision evaluation of the closed
//! forms, independent of the kernels under test.

#![allow(clippy::approx_constant)]

use meandiv::{
    alpha_divergence, classical_divergence, lp_divergence, lp_mean, mean_divergence,
    power_divergence, power_mean, CompositeMean, Distribution, DivergenceKind, ExtendedOrder,
};

fn close(got: f64, want: f64, rel: f64) -> bool {
    (got - want).abs() <= rel * want.abs().max(f64::MIN_POSITIVE)
}

fn pair() -> (Distribution, Distribution) {
    (
        Distribution::new(vec![0.1, 0.2, 0.3, 0.4]).unwrap(),
        Distribution::new(vec![0.4, 0.3, 0.2, 0.1]).unwrap(),
    )
}

const LP_MEANS: [[f64; 4]; 44] = [
    [-20.0, 1.0, 2.0, 1.1586111975123374],
    [-3.0, 1.0, 2.0, 1.3867225487012693],
    [-2.0, 1.0, 2.0, 1.414213562373095],
    [-1.0, 1.0, 2.0, 1.4426950408889634],
    [-0.5, 1.0, 2.0, 1.4571067811865475],
    [0.0, 1.0, 2.0, 1.4715177646857693],
    [0.5, 1.0, 2.0, 1.4858425557811643],
    [1.0, 1.0, 2.0, 1.5],
    [2.0, 1.0, 2.0, 1.5275252316519468],
    [5.0, 1.0, 2.0, 1.6004343344404715],
    [20.0, 1.0, 2.0, 1.7781587056165205],
    [-20.0, 1e-06, 1000000.0, 4.612513816248091e-06],
    [-3.0, 1e-06, 1000000.0, 0.012599210498944533],
    [-2.0, 1e-06, 1000000.0, 1.0],
    [-1.0, 1e-06, 1000000.0, 36191.206825234796],
    [-0.5, 1e-06, 1000000.0, 250000.50000025],
    [0.0, 1e-06, 1000000.0, 367879.4411816072],
    [0.5, 1e-06, 1000000.0, 444444.4444453333],
    [1.0, 1e-06, 1000000.0, 500000.0000005],
    [2.0, 1e-06, 1000000.0, 577350.2691899145],
    [5.0, 1e-06, 1000000.0, 698827.118771719],
    [20.0, 1e-06, 1000000.0, 858794.0666497822],
    [-20.0, 0.3, 0.30000003, 0.3000000149999974],
    [-3.0, 0.3, 0.30000003, 0.3000000149999995],
    [-2.0, 0.3, 0.30000003, 0.3000000149999996],
    [-1.0, 0.3, 0.30000003, 0.30000001499999973],
    [-0.5, 0.3, 0.30000003, 0.3000000149999998],
    [0.0, 0.3, 0.30000003, 0.3000000149999999],
    [0.5, 0.3, 0.30000003, 0.30000001499999995],
    [1.0, 0.3, 0.30000003, 0.300000015],
    [2.0, 0.3, 0.30000003, 0.3000000150000001],
    [5.0, 0.3, 0.30000003, 0.3000000150000005],
    [20.0, 0.3, 0.30000003, 0.3000000150000024],
    [-20.0, 7.0, 7.5, 7.220227636635542],
    [-3.0, 7.0, 7.5, 7.2442517340139245],
    [-2.0, 7.0, 7.5, 7.245688373094719],
    [-1.0, 7.0, 7.5, 7.247125525056084],
    [-0.5, 7.0, 7.5, 7.2478441865473595],
    [0.0, 7.0, 7.5, 7.248562848034866],
    [0.5, 7.0, 7.5, 7.249281466763511],
    [1.0, 7.0, 7.5, 7.25],
    [2.0, 7.0, 7.5, 7.251436639269031],
    [5.0, 7.0, 7.5, 7.255740080095452],
    [20.0, 7.0, 7.5, 7.276834050809282],
];

const POWER_MEANS: [[f64; 4]; 36] = [
    [-20.0, 1.0, 2.0, 1.0352648744761237],
    [-2.0, 1.0, 2.0, 1.2649110640673518],
    [-1.0, 1.0, 2.0, 1.3333333333333333],
    [0.0, 1.0, 2.0, 1.414213562373095],
    [1.0 / 3.0, 1.0, 2.0, 1.4427457881986523],
    [0.5, 1.0, 2.0, 1.4571067811865475],
    [1.0, 1.0, 2.0, 1.5],
    [2.0, 1.0, 2.0, 1.5811388300841898],
    [20.0, 1.0, 2.0, 1.9318727499685162],
    [-20.0, 1e-06, 1000000.0, 1.0352649238413775e-06],
    [-2.0, 1e-06, 1000000.0, 1.414213562373095e-06],
    [-1.0, 1e-06, 1000000.0, 1.999999999998e-06],
    [0.0, 1e-06, 1000000.0, 1.0],
    [1.0 / 3.0, 1e-06, 1000000.0, 125037.503750125],
    [0.5, 1e-06, 1000000.0, 250000.50000025],
    [1.0, 1e-06, 1000000.0, 500000.0000005],
    [2.0, 1e-06, 1000000.0, 707106.7811865475],
    [20.0, 1e-06, 1000000.0, 965936.3289248456],
    [-20.0, 0.3, 0.30000003, 0.3000000149999921],
    [-2.0, 0.3, 0.30000003, 0.3000000149999989],
    [-1.0, 0.3, 0.30000003, 0.30000001499999923],
    [0.0, 0.3, 0.30000003, 0.3000000149999996],
    [1.0 / 3.0, 0.3, 0.30000003, 0.30000001499999973],
    [0.5, 0.3, 0.30000003, 0.3000000149999998],
    [1.0, 0.3, 0.30000003, 0.300000015],
    [2.0, 0.3, 0.30000003, 0.3000000150000004],
    [20.0, 0.3, 0.30000003, 0.3000000150000071],
    [-20.0, 7.0, 7.5, 7.165986931888636],
    [-2.0, 7.0, 7.5, 7.237077926353565],
    [-1.0, 7.0, 7.5, 7.241379310344827],
    [0.0, 7.0, 7.5, 7.245688373094719],
    [1.0 / 3.0, 7.0, 7.5, 7.247125550392955],
    [0.5, 7.0, 7.5, 7.2478441865473595],
    [1.0, 7.0, 7.5, 7.25],
    [2.0, 7.0, 7.5, 7.254309064273454],
    [20.0, 7.0, 7.5, 7.3262762685730065],
];

const LP_DIVERGENCES: [[f64; 2]; 8] = [
    [-3.0, 0.8579032663348943],
    [-2.0, 0.8898979485566356],
    [-1.0, 0.9260692047419754],
    [-0.5, 0.9449489742783178],
    [0.0, 0.9638150151118638],
    [0.5, 0.9822726694263384],
    [1.0, 1.0],
    [2.0, 1.0324725578976348],
];

const POWER_DIVERGENCES: [[f64; 2]; 6] = [
    [-2.0, 0.7450764605596558],
    [-1.0, 0.8],
    [0.0, 0.8898979485566356],
    [0.5, 0.9449489742783178],
    [1.0, 1.0],
    [2.0, 1.0929971408438084],
];

const ALPHA_DIVERGENCES: [[f64; 2]; 4] = [
    [0.0, 0.4404082057734575],
    [0.5, 0.4443677134136198],
    [2.0, 0.5076303701373626],
    [-3.0, 0.6041666666666666],
];

const CLASSICAL: [(DivergenceKind, f64); 9] = [
    (DivergenceKind::Kl, 0.6584962500721157),
    (DivergenceKind::Variation, 0.8),
    (DivergenceKind::Hellinger, 0.8334734560440922),
    (DivergenceKind::ChiSquare, 1.2083333333333333),
    (DivergenceKind::Bhattacharyya, 0.8898979485566356),
    (DivergenceKind::Harmonic, 0.8),
    (DivergenceKind::Jeffreys, 0.9128696382935673),
    (DivergenceKind::Triangular, 0.4),
    (DivergenceKind::LinWong, 0.1535606553289845),
];

const COMPOSITE: [(CompositeMean, f64); 3] = [
    (CompositeMean::ArithGeo, 0.9421367958839345),
    (CompositeMean::LogIdentric, 0.9446109819851674),
    (CompositeMean::GeoIdentric, 0.9255419972310625),
];

#[test]
fn lp_means_match_oracle() {
    for [order, a, b, want] in LP_MEANS {
        let got = lp_mean(ExtendedOrder::Finite(order), a, b).unwrap();
        assert!(
            close(got, want, 1e-13),
            "L_{order}({a}, {b}) = {got}, want {want}"
        );
        let swapped = lp_mean(ExtendedOrder::Finite(order), b, a).unwrap();
        assert_eq!(got, swapped);
    }
}

#[test]
fn power_means_match_oracle() {
    for [alpha, a, b, want] in POWER_MEANS {
        let got = power_mean(ExtendedOrder::Finite(alpha), a, b).unwrap();
        assert!(
            close(got, want, 1e-13),
            "M[{alpha}]({a}, {b}) = {got}, want {want}"
        );
    }
}

#[test]
fn family_divergences_match_oracle() {
    let (p, q) = pair();
    for [order, want] in LP_DIVERGENCES {
        let got = lp_divergence(ExtendedOrder::Finite(order), &p, &q).unwrap();
        assert!(close(got, want, 1e-14), "D_L_{order} = {got}, want {want}");
    }
    for [alpha, want] in POWER_DIVERGENCES {
        let got = power_divergence(ExtendedOrder::Finite(alpha), &p, &q).unwrap();
        assert!(close(got, want, 1e-14), "D_M[{alpha}] = {got}, want {want}");
    }
}

#[test]
fn classical_divergences_match_oracle() {
    let (p, q) = pair();
    for (kind, want) in CLASSICAL {
        let got = classical_divergence(kind, &p, &q).unwrap();
        assert!(close(got, want, 1e-14), "{kind} = {got}, want {want}");
    }
    for [alpha, want] in ALPHA_DIVERGENCES {
        let got = alpha_divergence(alpha, &p, &q).unwrap();
        assert!(
            close(got, want, 1e-13),
            "alpha({alpha}) = {got}, want {want}"
        );
    }
}

#[test]
fn composite_divergences_match_oracle() {
    let (p, q) = pair();
    for (mean, want) in COMPOSITE {
        let got = mean_divergence(&mean, &p, &q).unwrap();
        assert!(close(got, want, 1e-14), "{mean:?} = {got}, want {want}");
    }
}
