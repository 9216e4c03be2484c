//! p-logarithmic and power-mean divergences between discrete distributions,
//! the classical divergence catalogue, and checks for the inequality chains
//! that relate them.
//!
//! ```
//! use meandiv::{lp_divergence, Distribution, ExtendedOrder};
//!
//! let p = Distribution::new(vec![0.5, 0.5]).unwrap();
//! let q = Distribution::new(vec![0.25, 0.75]).unwrap();
//! let d = lp_divergence(ExtendedOrder::Finite(-1.0), &p, &q).unwrap();
//! assert!((d - 0.9772496258163488).abs() < 1e-12);
//! ```

pub mod corpus;
pub mod distribution;
pub mod divergence;
mod error;
pub mod format;
pub mod lab;
pub mod means;
mod order;
pub mod summation;

pub use distribution::{
    parse_distribution, smooth, validate, Distribution, Format, ValidationReport,
};
pub use divergence::{
    alpha_divergence, classical_divergence, classical_divergence_in_base, csiszar_divergence,
    f_generator, lp_divergence, mean_divergence, power_divergence, CompositeMean, DivergenceKind,
    Family, FnMean, LogBase, LpMean, Mean, PowerMean, ScalarCurve,
};
pub use error::{Error, Result};
pub use lab::{
    check_alzer, check_lin_wong, check_lp_chain, check_pittenger_sandwich, check_power_chain,
    scan_family, sharpness_witness, ChainLink, ChainReport, ScanRow, ScanTable, SharpnessWitness,
};
pub use means::alzer::{alzer_gaps, AlzerGaps};
pub use means::{classical_mean, lp_mean, pittenger_orders, power_mean, MeanKind};
pub use order::ExtendedOrder;
