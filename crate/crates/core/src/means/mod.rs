//! Two-argument means: the p-logarithmic scale `L_p`, the power means `M^[α]`,
//! the classical A, G, H, L, I means and the Pittenger order map.
//!
//! Every kernel canonicalizes its arguments to `(lo, hi)` first, so results are
//! bit-for-bit symmetric. Finite orders are evaluated relative to `hi` in log
//! space with `u = ln(lo / hi) <= 0`:
//!
//! ```text
//! L_p(a, b) = hi * exp( [ ln|1 - e^{(p+1)u}| - ln|p+1| - ln|1 - e^u| ] / p )
//! ```
//!
//! which never forms `b^{p+1}` and so stays finite for any order. Results are
//! clamped into `[lo, hi]`.

pub mod alzer;

use std::f64::consts::LN_2;

use serde::Serialize;

use crate::{Error, ExtendedOrder, Result};

/// Relative separation below which two arguments are treated as equal and the
/// midpoint is returned.
pub const NEAR_EQUAL_REL: f64 = 1e-12;

/// Distance from the singular orders `-1` and `0` inside which `L_p` is routed
/// to the logarithmic or identric closed form.
pub const ORDER_ROUTING_EPS: f64 = 1e-7;

/// The classical means named in the identities of the p-logarithmic scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeanKind {
    Arithmetic,
    Geometric,
    Harmonic,
    Logarithmic,
    Identric,
}

impl MeanKind {
    pub const ALL: [MeanKind; 5] = [
        MeanKind::Arithmetic,
        MeanKind::Geometric,
        MeanKind::Harmonic,
        MeanKind::Logarithmic,
        MeanKind::Identric,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            MeanKind::Arithmetic => "A",
            MeanKind::Geometric => "G",
            MeanKind::Harmonic => "H",
            MeanKind::Logarithmic => "L",
            MeanKind::Identric => "I",
        }
    }
}

/// Canonical positive argument pair.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Pair {
    pub lo: f64,
    pub hi: f64,
}

impl Pair {
    pub(crate) fn new(context: &str, a: f64, b: f64) -> Result<Self> {
        for x in [a, b] {
            if !(x.is_finite() && x > 0.0) {
                return Err(Error::domain(
                    context,
                    format!("arguments must be positive and finite, got ({a}, {b})"),
                ));
            }
        }
        Ok(if a <= b {
            Pair { lo: a, hi: b }
        } else {
            Pair { lo: b, hi: a }
        })
    }

    fn is_near_equal(self) -> bool {
        self.hi - self.lo <= NEAR_EQUAL_REL * self.hi
    }

    fn midpoint(self) -> f64 {
        self.lo + 0.5 * (self.hi - self.lo)
    }

    /// `ln(lo / hi)`, accurate both for close and for widely separated arguments.
    fn log_ratio(self) -> f64 {
        let ratio = self.lo / self.hi;
        if ratio > 0.5 {
            ((self.lo - self.hi) / self.hi).ln_1p()
        } else if ratio > f64::MIN_POSITIVE {
            ratio.ln()
        } else {
            self.lo.ln() - self.hi.ln()
        }
    }

    fn clamp(self, x: f64) -> f64 {
        x.clamp(self.lo, self.hi)
    }
}

/// `ln|1 - e^x|` for `x != 0`.
pub(crate) fn ln_one_minus_exp(x: f64) -> f64 {
    if x > 0.0 {
        x + ln_one_minus_exp(-x)
    } else if x > -LN_2 {
        (-x.exp_m1()).ln()
    } else {
        (-x.exp()).ln_1p()
    }
}

fn arithmetic(p: Pair) -> f64 {
    p.midpoint()
}

fn geometric(p: Pair) -> f64 {
    p.clamp(p.lo.sqrt() * p.hi.sqrt())
}

fn harmonic(p: Pair) -> f64 {
    // H = G^2 / A without forming a*b or a+b.
    let g = p.lo.sqrt() * p.hi.sqrt();
    p.clamp(g * (g / arithmetic(p)))
}

fn logarithmic(p: Pair) -> f64 {
    p.clamp((p.hi - p.lo) / -p.log_ratio())
}

fn identric(p: Pair) -> f64 {
    // ln(I / hi) = u e^u / (e^u - 1) - 1
    let u = p.log_ratio();
    p.clamp(p.hi * (u * u.exp() / u.exp_m1() - 1.0).exp())
}

fn lp_finite(order: f64, p: Pair) -> f64 {
    if order == -1.0 || (order + 1.0).abs() < ORDER_ROUTING_EPS {
        return logarithmic(p);
    }
    if order == 0.0 || order.abs() < ORDER_ROUTING_EPS {
        return identric(p);
    }
    let u = p.log_ratio();
    let bracket = if order.abs() <= 0.5 {
        // (1 - e^{(p+1)u}) / (1 - e^u) = 1 + e^u expm1(pu) / expm1(u); every
        // piece is O(p) so the division by p below does not amplify error.
        (u.exp() * (order * u).exp_m1() / u.exp_m1()).ln_1p() - order.ln_1p()
    } else {
        ln_one_minus_exp((order + 1.0) * u) - (order + 1.0).abs().ln() - ln_one_minus_exp(u)
    };
    p.clamp(p.hi * (bracket / order).exp())
}

fn power_finite(alpha: f64, p: Pair) -> f64 {
    if alpha == 0.0 {
        return geometric(p);
    }
    // Factor out the endpoint whose power dominates so the exponent is <= 0.
    let u = p.log_ratio();
    let (base, x) = if alpha > 0.0 {
        (p.hi, alpha * u)
    } else {
        (p.lo, -alpha * u)
    };
    p.clamp(base * ((x.exp_m1() * 0.5).ln_1p() / alpha).exp())
}

/// The p-logarithmic mean `L_order(a, b)`.
///
/// `L_-inf = min`, `L_+inf = max`; `L_-1` is the logarithmic mean and `L_0` the
/// identric mean.
pub fn lp_mean(order: ExtendedOrder, a: f64, b: f64) -> Result<f64> {
    let order = order.checked("lp_mean")?;
    let p = Pair::new("lp_mean", a, b)?;
    Ok(lp_pair(order, p))
}

pub(crate) fn lp_pair(order: ExtendedOrder, p: Pair) -> f64 {
    match order {
        ExtendedOrder::NegInf => p.lo,
        ExtendedOrder::PosInf => p.hi,
        _ if p.lo == p.hi => p.lo,
        _ if p.is_near_equal() => p.midpoint(),
        ExtendedOrder::Finite(r) => lp_finite(r, p),
    }
}

/// The power (Hölder) mean `M^[alpha](a, b)`.
pub fn power_mean(alpha: ExtendedOrder, a: f64, b: f64) -> Result<f64> {
    let alpha = alpha.checked("power_mean")?;
    let p = Pair::new("power_mean", a, b)?;
    Ok(power_pair(alpha, p))
}

pub(crate) fn power_pair(alpha: ExtendedOrder, p: Pair) -> f64 {
    match alpha {
        ExtendedOrder::NegInf => p.lo,
        ExtendedOrder::PosInf => p.hi,
        _ if p.lo == p.hi => p.lo,
        _ if p.is_near_equal() => p.midpoint(),
        ExtendedOrder::Finite(r) => power_finite(r, p),
    }
}

pub fn classical_mean(kind: MeanKind, a: f64, b: f64) -> Result<f64> {
    let p = Pair::new("classical_mean", a, b)?;
    Ok(classical_pair(kind, p))
}

pub(crate) fn classical_pair(kind: MeanKind, p: Pair) -> f64 {
    if p.lo == p.hi {
        return p.lo;
    }
    if p.is_near_equal() {
        return p.midpoint();
    }
    match kind {
        MeanKind::Arithmetic => arithmetic(p),
        MeanKind::Geometric => geometric(p),
        MeanKind::Harmonic => harmonic(p),
        MeanKind::Logarithmic => logarithmic(p),
        MeanKind::Identric => identric(p),
    }
}

/// Sharp power-mean orders `(r1, r2)` with `M^[r1] <= L_r <= M^[r2]`.
///
/// Uses `r ln 2 / ln(r + 1)` for `r > -1`, replaced by its limit `ln 2` within
/// [`ORDER_ROUTING_EPS`] of zero, and `0` for `r <= -1`; `r1` takes the smaller
/// of that and `(r + 2) / 3`, `r2` the larger.
pub fn pittenger_orders(r: f64) -> Result<(f64, f64)> {
    if !r.is_finite() {
        return Err(Error::domain(
            "pittenger_orders",
            format!("order must be finite, got {r}"),
        ));
    }
    let linear = (r + 2.0) / 3.0;
    let other = if r <= -1.0 {
        0.0
    } else if r.abs() < ORDER_ROUTING_EPS {
        LN_2
    } else {
        r * LN_2 / r.ln_1p()
    };
    Ok((linear.min(other), linear.max(other)))
}
