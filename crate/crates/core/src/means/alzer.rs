//! Cancellation-free gaps for the Alzer inequalities
//!
//! ```text
//! sqrt(A G) < sqrt(L I) < M^[1/2],   L + I < A + G,   sqrt(G I) < L < (G + I) / 2
//! ```
//!
//! With `G = sqrt(ab)` and `t = ln(b/a) / 2` every mean is `G` times an even
//! function of `t`, and each gap is `G` times a power series in `t^2` whose
//! leading term is `t^4` or `t^6`. Subtracting the means directly therefore
//! loses all significance once `b/a` is within a few percent of 1; near the
//! diagonal the gaps are summed from their Taylor coefficients instead.

use serde::Serialize;

use super::{arithmetic, classical_pair, geometric, power_pair, MeanKind, Pair};
use crate::{ExtendedOrder, Result};

/// Half log-ratio up to which the series are used.
const SERIES_MAX_T: f64 = 0.5;

// Taylor coefficients in s = t^2, starting at the leading power noted per table.
// Generated with exact rational arithmetic on the series of cosh t, sinh t / t
// and exp(t coth t - 1).

/// `sqrt(L I) - sqrt(A G)`, leading power s^2.
const LI_MINUS_AG: [f64; 22] = [
    0.027777777777777776,
    -0.002932098765432099,
    0.0008812830687830688,
    -0.0002516136341367823,
    7.728338529900571e-05,
    -2.4787633750278657e-05,
    8.204914740355861e-06,
    -2.7818052203277815e-06,
    9.611445137629486e-07,
    -3.372038713676254e-07,
    1.1980649211333978e-07,
    -4.3020144546481335e-08,
    1.5587715087498638e-08,
    -5.692057754501371e-09,
    2.092641404112137e-09,
    -7.739291385046864e-10,
    2.8773464747650427e-10,
    -1.0747800813817876e-10,
    4.03156575069107e-11,
    -1.518013323391769e-11,
    5.7354987346013475e-12,
    -2.1738382549880955e-12,
];

/// `M^[1/2] - sqrt(L I)`, leading power s^2.
const HALF_POWER_MINUS_LI: [f64; 22] = [
    0.003472222222222222,
    0.0003279320987654321,
    -2.376818783068783e-06,
    6.267376420732902e-07,
    -3.569839148806943e-08,
    1.8263411802311254e-09,
    -3.039940320616034e-11,
    -8.955772087916275e-12,
    1.7748204068229457e-12,
    -2.354440726608465e-13,
    2.667950900020701e-14,
    -2.7552306243966964e-15,
    2.6583072442893845e-16,
    -2.4185399287650742e-17,
    2.0747914927019495e-18,
    -1.662300902374971e-19,
    1.2120558208332268e-20,
    -7.505217557052147e-22,
    2.996235251977743e-23,
    1.2309774743399075e-24,
    -5.042091583013818e-25,
    8.340346635212972e-26,
];

/// `(A + G) - (L + I)`, leading power s^3.
const AG_SUM_MINUS_LI_SUM: [f64; 21] = [
    0.00030864197530864197,
    1.4697236919459143e-06,
    -5.511463844797178e-07,
    1.0589044613148082e-07,
    -1.1818719870356163e-08,
    1.0624402832417726e-09,
    -7.861190542301808e-11,
    4.358388645235667e-12,
    -7.895623407829645e-14,
    -2.3541950846899733e-14,
    4.762692588941793e-15,
    -6.28641688986952e-16,
    6.906780308801115e-17,
    -6.703056666650357e-18,
    5.820111343566951e-19,
    -4.439450166462512e-20,
    2.754953407067186e-21,
    -9.538357319708947e-23,
    -7.971935363661294e-24,
    2.3609633856921464e-24,
    -3.6346790351860747e-25,
];

/// `L - sqrt(G I)`, leading power s^2.
const L_MINUS_GI: [f64; 22] = [
    0.005555555555555556,
    0.0002204585537918871,
    -7.348618459729571e-06,
    1.2470382840753212e-06,
    -1.2321144192102452e-07,
    1.1030892069006904e-08,
    -8.864653286379453e-10,
    6.273221042855169e-11,
    -3.5773734463935896e-12,
    1.0074053836899782e-13,
    1.2805245443565169e-14,
    -3.189491558624862e-15,
    4.669140166404852e-16,
    -5.704977424404602e-17,
    6.309388679476521e-18,
    -6.51416074056885e-19,
    6.36431907035007e-20,
    -5.913105649816788e-21,
    5.217942518489448e-22,
    -4.3372427245348974e-23,
    3.3279456560523425e-24,
    -2.2436675818461304e-25,
];

/// `(G + I) / 2 - L`, leading power s^2.
const GI_MID_MINUS_L: [f64; 22] = [
    0.008333333333333333,
    0.00024250440917107584,
    7.53233392122281e-06,
    3.7578162578162576e-07,
    -5.214227087389933e-08,
    5.913948233417173e-09,
    -5.312004614201058e-10,
    3.930601847659101e-11,
    -2.179194146461364e-12,
    3.947811742596524e-14,
    1.177097542415903e-14,
    -2.3813462944697946e-15,
    3.143208444934775e-16,
    -3.4533901544005566e-17,
    3.3515283333251783e-18,
    -2.9100556717834755e-19,
    2.219725083231256e-20,
    -1.377476703533593e-21,
    4.769178659854474e-23,
    3.985967681830647e-24,
    -1.1804816928460732e-24,
    1.8173395175930373e-25,
];

/// The five Alzer gaps (right side minus left side), each positive when `a != b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlzerGaps {
    /// `sqrt(L I) - sqrt(A G)`
    pub li_over_ag: f64,
    /// `M^[1/2] - sqrt(L I)`
    pub half_power_over_li: f64,
    /// `(A + G) - (L + I)`
    pub ag_sum_over_li_sum: f64,
    /// `L - sqrt(G I)`
    pub l_over_gi: f64,
    /// `(G + I) / 2 - L`
    pub gi_mid_over_l: f64,
}

impl AlzerGaps {
    pub fn as_array(&self) -> [f64; 5] {
        [
            self.li_over_ag,
            self.half_power_over_li,
            self.ag_sum_over_li_sum,
            self.l_over_gi,
            self.gi_mid_over_l,
        ]
    }

    pub fn all_strict(&self) -> bool {
        self.as_array().iter().all(|&g| g > 0.0)
    }
}

fn series(s: f64, leading: i32, coeffs: &[f64]) -> f64 {
    let poly = coeffs.iter().rev().fold(0.0, |acc, &c| acc * s + c);
    s.powi(leading) * poly
}

/// Evaluates the Alzer gaps for positive `a`, `b`.
pub fn alzer_gaps(a: f64, b: f64) -> Result<AlzerGaps> {
    let p = Pair::new("alzer_gaps", a, b)?;
    if p.lo == p.hi {
        return Ok(AlzerGaps {
            li_over_ag: 0.0,
            half_power_over_li: 0.0,
            ag_sum_over_li_sum: 0.0,
            l_over_gi: 0.0,
            gi_mid_over_l: 0.0,
        });
    }
    let t = -0.5 * p.log_ratio();
    if t <= SERIES_MAX_T {
        let g = p.lo.sqrt() * p.hi.sqrt();
        let s = t * t;
        return Ok(AlzerGaps {
            li_over_ag: g * series(s, 2, &LI_MINUS_AG),
            half_power_over_li: g * series(s, 2, &HALF_POWER_MINUS_LI),
            ag_sum_over_li_sum: g * series(s, 3, &AG_SUM_MINUS_LI_SUM),
            l_over_gi: g * series(s, 2, &L_MINUS_GI),
            gi_mid_over_l: g * series(s, 2, &GI_MID_MINUS_L),
        });
    }
    let am = arithmetic(p);
    let gm = geometric(p);
    let lm = classical_pair(MeanKind::Logarithmic, p);
    let im = classical_pair(MeanKind::Identric, p);
    let half = power_pair(ExtendedOrder::Finite(0.5), p);
    let li = lm.sqrt() * im.sqrt();
    Ok(AlzerGaps {
        li_over_ag: li - am.sqrt() * gm.sqrt(),
        half_power_over_li: half - li,
        ag_sum_over_li_sum: (am + gm) - (lm + im),
        l_over_gi: lm - gm.sqrt() * im.sqrt(),
        gi_mid_over_l: 0.5 * (gm + im) - lm,
    })
}
