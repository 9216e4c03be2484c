//! Measure names accepted by `compute`, e.g. `kl`, `alpha(0.5)`, `lp(-inf)`.

use std::fmt;
use std::str::FromStr;

use meandiv::{
    classical_divergence_in_base, lp_divergence, mean_divergence, power_divergence, CompositeMean,
    Distribution, DivergenceKind, ExtendedOrder, LogBase,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    Classical(DivergenceKind),
    Lp(ExtendedOrder),
    Power(ExtendedOrder),
    Mean(CompositeMean),
}

impl Measure {
    /// `base` overrides the logarithm of the measures that take one.
    pub fn evaluate(
        &self,
        p: &Distribution,
        q: &Distribution,
        base: Option<LogBase>,
    ) -> meandiv::Result<f64> {
        match *self {
            Measure::Classical(kind) => {
                let base = match (kind.default_base(), base) {
                    (Some(_), Some(b)) => b,
                    (Some(d), None) => d,
                    (None, _) => LogBase::Natural,
                };
                classical_divergence_in_base(kind, p, q, base)
            }
            Measure::Lp(o) => lp_divergence(o, p, q),
            Measure::Power(o) => power_divergence(o, p, q),
            Measure::Mean(m) => mean_divergence(&m, p, q),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Classical(kind) => write!(f, "{kind}"),
            Measure::Lp(o) => write!(f, "lp({o})"),
            Measure::Power(o) => write!(f, "power({o})"),
            Measure::Mean(m) => write!(f, "mean({})", m.tag()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseMeasureError(pub String);

impl fmt::Display for ParseMeasureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseMeasureError {}

fn plain(name: &str) -> Option<DivergenceKind> {
    Some(match name {
        "kl" => DivergenceKind::Kl,
        "variation" => DivergenceKind::Variation,
        "hellinger" => DivergenceKind::Hellinger,
        "chi2" => DivergenceKind::ChiSquare,
        "bhattacharyya" => DivergenceKind::Bhattacharyya,
        "harmonic" => DivergenceKind::Harmonic,
        "jeffreys" => DivergenceKind::Jeffreys,
        "triangular" => DivergenceKind::Triangular,
        "linwong" => DivergenceKind::LinWong,
        _ => return None,
    })
}

impl FromStr for Measure {
    type Err = ParseMeasureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = |why: String| ParseMeasureError(format!("invalid measure `{s}`: {why}"));
        let Some(open) = s.find('(') else {
            return plain(s)
                .map(Measure::Classical)
                .ok_or_else(|| bad("unknown name".into()));
        };
        let Some(arg) = s[open + 1..].strip_suffix(')') else {
            return Err(bad("missing closing parenthesis".into()));
        };
        let (name, arg) = (&s[..open], arg.trim());
        let order = || arg.parse::<ExtendedOrder>().map_err(|e| bad(e.to_string()));
        match name {
            "lp" => Ok(Measure::Lp(order()?)),
            "power" => Ok(Measure::Power(order()?)),
            "alpha" => match order()? {
                ExtendedOrder::Finite(a) => Ok(Measure::Classical(DivergenceKind::Alpha(a))),
                _ => Err(bad("alpha must be finite".into())),
            },
            "mean" => match arg {
                "ag" => Ok(Measure::Mean(CompositeMean::ArithGeo)),
                "li" => Ok(Measure::Mean(CompositeMean::LogIdentric)),
                "gi" => Ok(Measure::Mean(CompositeMean::GeoIdentric)),
                _ => Err(bad("expected one of ag, li, gi".into())),
            },
            _ => Err(bad("unknown name".into())),
        }
    }
}
