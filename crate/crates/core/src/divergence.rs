//! Divergence measures between distributions on a common finite support.
//!
//! Zero conventions: a term whose weight is zero on both sides contributes 0,
//! `0 * log(0 / q)` is 0, and a positive entry paired with a zero inside a
//! logarithm or a negative power is a domain error naming the index (never
//! `+inf`). Logarithm bases follow the classical definitions: KL and Lin–Wong
//! in bits, Jeffreys in nats. [`classical_divergence_in_base`] overrides that.
//!
//! `HELLINGER` is `sum |sqrt p - sqrt q|` (no square, no 1/2) and `CHI_SQUARE`
//! is `sum q^2 / p - 1`, i.e. the reverse of the more common Neyman/Pearson
//! orientation. Both are kept as written in the source definitions.

use std::f64::consts::{E, LN_2};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::distribution::Distribution;
use crate::means::{classical_pair, lp_pair, power_pair, MeanKind, Pair, ORDER_ROUTING_EPS};
use crate::summation::CompensatedSum;
use crate::{Error, ExtendedOrder, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBase {
    Two,
    Natural,
}

impl LogBase {
    fn scale(self) -> f64 {
        match self {
            LogBase::Two => 1.0 / LN_2,
            LogBase::Natural => 1.0,
        }
    }
}

/// The classical catalogue. `Alpha` carries its parameter, which must be finite
/// and different from `±1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DivergenceKind {
    Kl,
    Variation,
    Hellinger,
    ChiSquare,
    Alpha(f64),
    Bhattacharyya,
    Harmonic,
    Jeffreys,
    Triangular,
    LinWong,
}

impl DivergenceKind {
    /// Every parameter-free kind.
    pub const PLAIN: [DivergenceKind; 9] = [
        DivergenceKind::Kl,
        DivergenceKind::Variation,
        DivergenceKind::Hellinger,
        DivergenceKind::ChiSquare,
        DivergenceKind::Bhattacharyya,
        DivergenceKind::Harmonic,
        DivergenceKind::Jeffreys,
        DivergenceKind::Triangular,
        DivergenceKind::LinWong,
    ];

    pub fn is_symmetric(self) -> bool {
        matches!(
            self,
            DivergenceKind::Variation
                | DivergenceKind::Hellinger
                | DivergenceKind::Bhattacharyya
                | DivergenceKind::Harmonic
                | DivergenceKind::Jeffreys
                | DivergenceKind::Triangular
        )
    }

    /// Base of the logarithm in the definition, if the kind uses one.
    pub fn default_base(self) -> Option<LogBase> {
        match self {
            DivergenceKind::Kl | DivergenceKind::LinWong => Some(LogBase::Two),
            DivergenceKind::Jeffreys => Some(LogBase::Natural),
            _ => None,
        }
    }
}

impl fmt::Display for DivergenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivergenceKind::Kl => f.write_str("kl"),
            DivergenceKind::Variation => f.write_str("variation"),
            DivergenceKind::Hellinger => f.write_str("hellinger"),
            DivergenceKind::ChiSquare => f.write_str("chi2"),
            DivergenceKind::Alpha(a) => write!(f, "alpha({a})"),
            DivergenceKind::Bhattacharyya => f.write_str("bhattacharyya"),
            DivergenceKind::Harmonic => f.write_str("harmonic"),
            DivergenceKind::Jeffreys => f.write_str("jeffreys"),
            DivergenceKind::Triangular => f.write_str("triangular"),
            DivergenceKind::LinWong => f.write_str("linwong"),
        }
    }
}

fn check_lengths(p: &Distribution, q: &Distribution) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::Shape {
            left: p.len(),
            right: q.len(),
        });
    }
    Ok(())
}

/// Sums `term(i, p_i, q_i)` over the support with compensation.
fn sum_terms<F>(p: &Distribution, q: &Distribution, mut term: F) -> Result<f64>
where
    F: FnMut(usize, f64, f64) -> Result<f64>,
{
    check_lengths(p, q)?;
    let mut acc = CompensatedSum::new();
    for (i, (&a, &b)) in p.probs().iter().zip(q.probs()).enumerate() {
        acc.add(term(i, a, b)?);
    }
    Ok(acc.value())
}

/// `ln(x / y)` for positive `x`, `y`, robust to overflow of the quotient.
fn ln_ratio(x: f64, y: f64) -> f64 {
    let r = x / y;
    if r.is_finite() && r > 0.0 {
        r.ln()
    } else {
        x.ln() - y.ln()
    }
}

fn zero_denominator(name: &str, i: usize, num: &str, den: &str, value: f64) -> Error {
    Error::domain_at(
        name,
        i,
        format!(
            "{den}[{i}] = 0 while {num}[{i}] = {value} > 0; the term is infinite \
             (smooth the inputs to repair)"
        ),
    )
}

/// Evaluates a classical divergence with the logarithm base of its definition.
pub fn classical_divergence(
    kind: DivergenceKind,
    p: &Distribution,
    q: &Distribution,
) -> Result<f64> {
    classical_divergence_in_base(kind, p, q, kind.default_base().unwrap_or(LogBase::Natural))
}

/// As [`classical_divergence`], with `base` applied to KL, Lin–Wong and Jeffreys.
pub fn classical_divergence_in_base(
    kind: DivergenceKind,
    p: &Distribution,
    q: &Distribution,
    base: LogBase,
) -> Result<f64> {
    let name = kind.to_string();
    let scale = base.scale();
    match kind {
        DivergenceKind::Kl => sum_terms(p, q, |i, a, b| {
            if a == 0.0 {
                Ok(0.0)
            } else if b == 0.0 {
                Err(zero_denominator(&name, i, "p", "q", a))
            } else {
                Ok(a * ln_ratio(a, b) * scale)
            }
        }),
        DivergenceKind::Variation => sum_terms(p, q, |_, a, b| Ok((a - b).abs())),
        DivergenceKind::Hellinger => sum_terms(p, q, |_, a, b| Ok((a.sqrt() - b.sqrt()).abs())),
        DivergenceKind::ChiSquare => {
            // p[(q/p)^2 - 1] = (q - p)(q + p) / p
            sum_terms(p, q, |i, a, b| {
                if a == 0.0 {
                    if b == 0.0 {
                        Ok(0.0)
                    } else {
                        Err(zero_denominator(&name, i, "q", "p", b))
                    }
                } else {
                    Ok((b - a) * (b + a) / a)
                }
            })
        }
        DivergenceKind::Alpha(alpha) => alpha_divergence(alpha, p, q),
        DivergenceKind::Bhattacharyya => sum_terms(p, q, |_, a, b| Ok(a.sqrt() * b.sqrt())),
        DivergenceKind::Harmonic => sum_terms(p, q, |_, a, b| {
            if a == 0.0 || b == 0.0 {
                Ok(0.0)
            } else {
                Ok(2.0 * a * b / (a + b))
            }
        }),
        DivergenceKind::Jeffreys => sum_terms(p, q, |i, a, b| {
            // Ordered per term so the sum is bitwise symmetric.
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            if hi == 0.0 || lo == hi {
                Ok(0.0)
            } else if lo == 0.0 {
                let (num, den) = if a == 0.0 { ("q", "p") } else { ("p", "q") };
                Err(zero_denominator(&name, i, num, den, hi))
            } else {
                Ok((hi - lo) * ln_ratio(hi, lo) * scale)
            }
        }),
        DivergenceKind::Triangular => sum_terms(p, q, |_, a, b| {
            let s = a + b;
            if s == 0.0 {
                Ok(0.0)
            } else {
                Ok((a - b) * (a - b) / s)
            }
        }),
        DivergenceKind::LinWong => sum_terms(p, q, |_, a, b| {
            if a == 0.0 {
                Ok(0.0)
            } else {
                Ok(a * ln_ratio(a, 0.5 * a + 0.5 * b) * scale)
            }
        }),
    }
}

/// `4 / (1 - α²) · [1 - Σ p^{(1-α)/2} q^{(1+α)/2}]`.
///
/// The bracket is accumulated as `Σ (w_p p + w_q q - p^{w_p} q^{w_q})` with
/// `w_p + w_q = 1`, which is the same quantity without the cancellation
/// against 1 when `p ≈ q`.
pub fn alpha_divergence(alpha: f64, p: &Distribution, q: &Distribution) -> Result<f64> {
    let name = format!("alpha({alpha})");
    if !alpha.is_finite() {
        return Err(Error::domain(&name, "alpha must be finite"));
    }
    if alpha == 1.0 || alpha == -1.0 {
        return Err(Error::domain(
            &name,
            "alpha = ±1 is a pole of the 4 / (1 - alpha^2) prefactor",
        ));
    }
    let wp = 0.5 * (1.0 - alpha);
    let wq = 0.5 * (1.0 + alpha);
    let bracket = sum_terms(p, q, |i, a, b| {
        if a == b {
            return Ok(0.0);
        }
        if (a == 0.0 && wp < 0.0) || (b == 0.0 && wq < 0.0) {
            let (num, den) = if a == 0.0 { ("q", "p") } else { ("p", "q") };
            return Err(Error::domain_at(
                &name,
                i,
                format!(
                    "{den}[{i}] = 0 is raised to a negative power while {num}[{i}] > 0 \
                     (smooth the inputs to repair)"
                ),
            ));
        }
        Ok(wp * a + wq * b - a.powf(wp) * b.powf(wq))
    })?;
    Ok(4.0 / (1.0 - alpha * alpha) * bracket)
}

type CurveFn = dyn Fn(f64) -> Result<f64> + Send + Sync;

/// A named scalar function on `(0, inf)`, the generator of a Csiszár divergence.
#[derive(Clone)]
pub struct ScalarCurve {
    name: String,
    f: Arc<CurveFn>,
}

impl fmt::Debug for ScalarCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalarCurve")
            .field("name", &self.name)
            .finish()
    }
}

impl ScalarCurve {
    /// Wraps an infallible function; non-finite outputs become domain errors.
    pub fn new<F>(name: impl Into<String>, f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let name = name.into();
        let context = name.clone();
        ScalarCurve {
            name,
            f: Arc::new(move |x| {
                let y = f(x);
                if y.is_finite() {
                    Ok(y)
                } else {
                    Err(Error::domain(
                        &context,
                        format!("f({x}) = {y} is not finite"),
                    ))
                }
            }),
        }
    }

    pub fn fallible<F>(name: impl Into<String>, f: F) -> Self
    where
        F: Fn(f64) -> Result<f64> + Send + Sync + 'static,
    {
        ScalarCurve {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        (self.f)(x)
    }
}

/// `Σ p_i f(q_i / p_i)`; terms with `p_i = q_i = 0` contribute nothing.
pub fn csiszar_divergence(f: &ScalarCurve, p: &Distribution, q: &Distribution) -> Result<f64> {
    let context = format!("csiszar[{}]", f.name());
    sum_terms(p, q, |i, a, b| {
        if a == 0.0 {
            if b == 0.0 {
                return Ok(0.0);
            }
            return Err(Error::domain_at(
                &context,
                i,
                format!("p[{i}] = 0 with q[{i}] = {b}: ratio q/p is infinite"),
            ));
        }
        let ratio = b / a;
        f.eval(ratio)
            .map(|y| a * y)
            .map_err(|e| Error::domain_at(&context, i, format!("at index {i}, ratio {ratio}: {e}")))
    })
}

/// Which two-argument mean family an order refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Lp,
    Power,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Lp => "lp",
            Family::Power => "power",
        })
    }
}

/// The Csiszár generator `f(x) = mean(x, 1)` of the given family and order.
///
/// These generators are not convex in general; they reproduce the family
/// divergences through `Σ p f(q / p) = Σ mean(p, q)` by homogeneity.
pub fn f_generator(family: Family, order: ExtendedOrder) -> ScalarCurve {
    let name = format!("f_{family}({order})");
    match family {
        Family::Lp => ScalarCurve::fallible(name, move |x| crate::means::lp_mean(order, x, 1.0)),
        Family::Power => {
            ScalarCurve::fallible(name, move |x| crate::means::power_mean(order, x, 1.0))
        }
    }
}

/// A two-argument mean extended to `[0, inf)²` where its limit exists.
pub trait Mean {
    fn name(&self) -> String;
    fn eval(&self, a: f64, b: f64) -> Result<f64>;
}

impl<M: Mean + ?Sized> Mean for &M {
    fn name(&self) -> String {
        (**self).name()
    }

    fn eval(&self, a: f64, b: f64) -> Result<f64> {
        (**self).eval(a, b)
    }
}

/// Splits off the zero cases shared by every mean: `m(0, 0) = 0`, and for a
/// single zero hands the positive argument to `at_zero`.
fn with_zeros<F, G>(
    name: &dyn Fn() -> String,
    a: f64,
    b: f64,
    at_zero: F,
    positive: G,
) -> Result<f64>
where
    F: FnOnce(f64) -> Option<f64>,
    G: FnOnce(Pair) -> f64,
{
    let pair_ok = |x: f64| x.is_finite() && x >= 0.0;
    if !pair_ok(a) || !pair_ok(b) {
        return Err(Error::domain(
            name(),
            format!("arguments must be non-negative and finite, got ({a}, {b})"),
        ));
    }
    match (a == 0.0, b == 0.0) {
        (true, true) => Ok(0.0),
        (false, false) => Ok(positive(Pair::new(&name(), a, b)?)),
        _ => {
            let other = a.max(b);
            at_zero(other).ok_or_else(|| {
                Error::domain(
                    name(),
                    "undefined with a zero argument; requires strictly positive entries \
                     (smooth the inputs to repair)",
                )
            })
        }
    }
}

/// `L_order` as a [`Mean`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LpMean(pub ExtendedOrder);

impl Mean for LpMean {
    fn name(&self) -> String {
        format!("lp({})", self.0)
    }

    fn eval(&self, a: f64, b: f64) -> Result<f64> {
        let order = self.0.checked("lp")?;
        with_zeros(
            &|| self.name(),
            a,
            b,
            |b| match order {
                ExtendedOrder::PosInf => Some(b),
                ExtendedOrder::NegInf => Some(0.0),
                ExtendedOrder::Finite(r) if r == 0.0 || r.abs() < ORDER_ROUTING_EPS => Some(b / E),
                ExtendedOrder::Finite(-2.0) => Some(0.0),
                ExtendedOrder::Finite(r) if r > -1.0 + ORDER_ROUTING_EPS => {
                    // (b^{r+1} / ((r+1) b))^{1/r}
                    Some(b * (-r.ln_1p() / r).exp())
                }
                ExtendedOrder::Finite(_) => None,
            },
            |pair| lp_pair(order, pair),
        )
    }
}

/// `M^[alpha]` as a [`Mean`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerMean(pub ExtendedOrder);

impl Mean for PowerMean {
    fn name(&self) -> String {
        format!("power({})", self.0)
    }

    fn eval(&self, a: f64, b: f64) -> Result<f64> {
        let alpha = self.0.checked("power")?;
        with_zeros(
            &|| self.name(),
            a,
            b,
            |b| match alpha {
                ExtendedOrder::PosInf => Some(b),
                ExtendedOrder::NegInf => Some(0.0),
                ExtendedOrder::Finite(0.0) => Some(0.0),
                ExtendedOrder::Finite(x) if x > 0.0 => Some(b * (-LN_2 / x).exp()),
                ExtendedOrder::Finite(_) => None,
            },
            |pair| power_pair(alpha, pair),
        )
    }
}

impl Mean for MeanKind {
    fn name(&self) -> String {
        format!("mean({})", self.symbol().to_lowercase())
    }

    fn eval(&self, a: f64, b: f64) -> Result<f64> {
        let kind = *self;
        with_zeros(
            &|| self.name(),
            a,
            b,
            |b| {
                Some(match kind {
                    MeanKind::Arithmetic => 0.5 * b,
                    MeanKind::Identric => b / E,
                    MeanKind::Geometric | MeanKind::Harmonic | MeanKind::Logarithmic => 0.0,
                })
            },
            |pair| classical_pair(kind, pair),
        )
    }
}

/// Geometric means of two classical means.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompositeMean {
    /// `sqrt(A G)`
    ArithGeo,
    /// `sqrt(L I)`
    LogIdentric,
    /// `sqrt(G I)`
    GeoIdentric,
}

impl CompositeMean {
    pub fn parts(self) -> (MeanKind, MeanKind) {
        match self {
            CompositeMean::ArithGeo => (MeanKind::Arithmetic, MeanKind::Geometric),
            CompositeMean::LogIdentric => (MeanKind::Logarithmic, MeanKind::Identric),
            CompositeMean::GeoIdentric => (MeanKind::Geometric, MeanKind::Identric),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            CompositeMean::ArithGeo => "ag",
            CompositeMean::LogIdentric => "li",
            CompositeMean::GeoIdentric => "gi",
        }
    }
}

impl Mean for CompositeMean {
    fn name(&self) -> String {
        format!("mean({})", self.tag())
    }

    fn eval(&self, a: f64, b: f64) -> Result<f64> {
        let (x, y) = self.parts();
        // One factor of every composite vanishes at a zero argument.
        with_zeros(
            &|| self.name(),
            a,
            b,
            |_| Some(0.0),
            |pair| classical_pair(x, pair).sqrt() * classical_pair(y, pair).sqrt(),
        )
    }
}

/// A closure-backed [`Mean`].
pub struct FnMean<F> {
    name: String,
    f: F,
}

impl<F: Fn(f64, f64) -> f64> FnMean<F> {
    pub fn new(name: impl Into<String>, f: F) -> Self {
        FnMean {
            name: name.into(),
            f,
        }
    }
}

impl<F: Fn(f64, f64) -> f64> Mean for FnMean<F> {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn eval(&self, a: f64, b: f64) -> Result<f64> {
        let y = (self.f)(a, b);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::domain(
                &self.name,
                format!("m({a}, {b}) = {y} is not finite"),
            ))
        }
    }
}

/// `Σ m(p_i, q_i)`: the divergence generated by a mean.
pub fn mean_divergence<M: Mean + ?Sized>(m: &M, p: &Distribution, q: &Distribution) -> Result<f64> {
    let name = m.name();
    sum_terms(p, q, |i, a, b| {
        m.eval(a, b).map_err(|e| e.at_index(&name, i))
    })
}

/// `Σ L_order(q_i, r_i)`; symmetric in its arguments.
pub fn lp_divergence(order: ExtendedOrder, q: &Distribution, r: &Distribution) -> Result<f64> {
    mean_divergence(&LpMean(order), q, r)
}

/// `Σ M^[alpha](p_i, q_i)`; symmetric in its arguments.
pub fn power_divergence(alpha: ExtendedOrder, p: &Distribution, q: &Distribution) -> Result<f64> {
    mean_divergence(&PowerMean(alpha), p, q)
}
