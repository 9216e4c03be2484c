//! Real orders extended with the two infinite endpoints.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A mean order on the extended real line `[-inf, +inf]`.
///
/// The infinite endpoints are separate variants rather than IEEE infinities, so
/// `Finite` always carries a finite value when built through [`ExtendedOrder::finite`],
/// [`ExtendedOrder::from_f64`] or [`FromStr`]. Kernels reject a hand-built
/// `Finite(NaN)` with a domain error.
#[derive(Debug, Clone, Copy)]
pub enum ExtendedOrder {
    NegInf,
    Finite(f64),
    PosInf,
}

impl ExtendedOrder {
    pub fn finite(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(ExtendedOrder::Finite(value))
        } else {
            Err(Error::domain(
                "order",
                format!("expected a finite order, got {value}"),
            ))
        }
    }

    /// Maps `±inf` onto the enumerated endpoints; NaN is rejected.
    pub fn from_f64(value: f64) -> Result<Self> {
        if value.is_nan() {
            Err(Error::domain("order", "order must not be NaN"))
        } else if value == f64::INFINITY {
            Ok(ExtendedOrder::PosInf)
        } else if value == f64::NEG_INFINITY {
            Ok(ExtendedOrder::NegInf)
        } else {
            Ok(ExtendedOrder::Finite(value))
        }
    }

    pub fn as_finite(self) -> Option<f64> {
        match self {
            ExtendedOrder::Finite(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        !matches!(self, ExtendedOrder::Finite(_))
    }

    /// The order as an `f64`, with the endpoints mapped to IEEE infinities.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtendedOrder::NegInf => f64::NEG_INFINITY,
            ExtendedOrder::Finite(x) => x,
            ExtendedOrder::PosInf => f64::INFINITY,
        }
    }

    pub(crate) fn checked(self, context: &str) -> Result<Self> {
        match self {
            ExtendedOrder::Finite(x) if !x.is_finite() => Err(Error::domain(
                context,
                format!("finite order variant holds non-finite value {x}"),
            )),
            other => Ok(other),
        }
    }
}

impl From<i32> for ExtendedOrder {
    fn from(value: i32) -> Self {
        ExtendedOrder::Finite(f64::from(value))
    }
}

impl PartialEq for ExtendedOrder {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExtendedOrder {}

impl PartialOrd for ExtendedOrder {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedOrder {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedOrder::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.partial_cmp(b).unwrap_or_else(|| a.total_cmp(b)),
        }
    }
}

impl fmt::Display for ExtendedOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedOrder::NegInf => f.write_str("-inf"),
            ExtendedOrder::PosInf => f.write_str("inf"),
            ExtendedOrder::Finite(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for ExtendedOrder {
    type Err = Error;

    /// Accepts `inf`, `+inf`, `-inf` and finite decimal literals.
    fn from_str(s: &str) -> Result<Self> {
        let token = s.trim();
        match token {
            "inf" | "+inf" => return Ok(ExtendedOrder::PosInf),
            "-inf" => return Ok(ExtendedOrder::NegInf),
            _ => {}
        }
        let value: f64 = token
            .parse()
            .map_err(|_| Error::Usage(format!("invalid order `{token}`")))?;
        if !value.is_finite() {
            return Err(Error::Usage(format!(
                "invalid order `{token}`: use `inf` or `-inf` for the infinite orders"
            )));
        }
        Ok(ExtendedOrder::Finite(value))
    }
}

/// Serialized as a number, or as the strings `"inf"` / `"-inf"`.
impl Serialize for ExtendedOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedOrder::Finite(x) => serializer.serialize_f64(*x),
            other => serializer.serialize_str(&other.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_order_puts_endpoints_outside() {
        let mut orders = vec![
            ExtendedOrder::PosInf,
            ExtendedOrder::Finite(3.0),
            ExtendedOrder::NegInf,
            ExtendedOrder::Finite(-1e300),
        ];
        orders.sort();
        assert_eq!(
            orders,
            vec![
                ExtendedOrder::NegInf,
                ExtendedOrder::Finite(-1e300),
                ExtendedOrder::Finite(3.0),
                ExtendedOrder::PosInf,
            ]
        );
    }

    #[test]
    fn parses_tokens() {
        assert_eq!(
            "inf".parse::<ExtendedOrder>().unwrap(),
            ExtendedOrder::PosInf
        );
        assert_eq!(
            "-inf".parse::<ExtendedOrder>().unwrap(),
            ExtendedOrder::NegInf
        );
        assert_eq!(
            "-0.5".parse::<ExtendedOrder>().unwrap(),
            ExtendedOrder::Finite(-0.5)
        );
        assert!("nan".parse::<ExtendedOrder>().is_err());
        assert!("infinity".parse::<ExtendedOrder>().is_err());
        assert!("1e999".parse::<ExtendedOrder>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for o in [
            ExtendedOrder::NegInf,
            ExtendedOrder::Finite(-2.0),
            ExtendedOrder::PosInf,
        ] {
            assert_eq!(o.to_string().parse::<ExtendedOrder>().unwrap(), o);
        }
        assert_eq!(ExtendedOrder::Finite(-2.0).to_string(), "-2");
    }

    #[test]
    fn finite_rejects_infinities() {
        assert!(ExtendedOrder::finite(f64::INFINITY).is_err());
        assert_eq!(
            ExtendedOrder::from_f64(f64::NEG_INFINITY).unwrap(),
            ExtendedOrder::NegInf
        );
        assert!(ExtendedOrder::from_f64(f64::NAN).is_err());
    }
}
