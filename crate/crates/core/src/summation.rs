//! Compensated summation over a finite support (the counting-measure integral).

use crate::{Error, Result};

/// Neumaier's variant of Kahan summation.
///
/// Unlike plain Kahan it also recovers the low-order part when the incoming
/// term is larger than the running sum, so `[1e16, 1, -1e16]` sums to `1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        acc.extend(iter);
        acc
    }
}

/// Compensated sum of `values`; non-finite entries are a domain error.
pub fn sum_over_support(values: &[f64]) -> Result<f64> {
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::domain_at(
            "sum_over_support",
            i,
            format!("non-finite value {} at index {i}", values[i]),
        ));
    }
    Ok(values.iter().copied().collect::<CompensatedSum>().value())
}
