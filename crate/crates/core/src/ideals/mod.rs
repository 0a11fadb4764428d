//! Gröbner-basis engine and the ideal operations built on it.

mod groebner;
mod ideal;
mod matrix;
mod syzygy;

pub use groebner::{
    groebner, groebner_with_syzygies, is_groebner, normal_form, GbConfig, NormalForm, PositionOrder, Selection, Term, TermOrder,
    Vector,
};
pub use ideal::{GroebnerBasis, Ideal};
pub use matrix::PolyMatrix;
pub use syzygy::{prune_generators, syzygies, ModuleVector, Submodule};

use crate::error::{Error, Result};

/// Budget for Gröbner computations. Exceeding it is a hard error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of critical pairs processed in one basis computation.
    pub max_pairs: usize,
    /// Maximum total degree of any polynomial produced during reduction.
    pub max_degree: u32,
    /// Maximum bit length of a numerator or denominator in a basis element.
    pub max_coeff_bits: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 200_000,
            max_degree: 96,
            max_coeff_bits: 1 << 16,
        }
    }
}

impl Limits {
    pub const ENV_MAX_PAIRS: &'static str = "DIVLAB_MAX_PAIRS";
    pub const ENV_MAX_DEGREE: &'static str = "DIVLAB_MAX_DEGREE";
    pub const ENV_MAX_COEFF_BITS: &'static str = "DIVLAB_MAX_COEFF_BITS";

    /// Defaults overridden by `DIVLAB_MAX_PAIRS`, `DIVLAB_MAX_DEGREE` and
    /// `DIVLAB_MAX_COEFF_BITS`.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(v) = std::env::var(Self::ENV_MAX_PAIRS) {
            limits.max_pairs = v.trim().parse().map_err(|_| {
                Error::Precondition(format!("{} must be an integer, got `{v}`", Self::ENV_MAX_PAIRS))
            })?;
        }
        if let Ok(v) = std::env::var(Self::ENV_MAX_DEGREE) {
            limits.max_degree = v.trim().parse().map_err(|_| {
                Error::Precondition(format!("{} must be an integer, got `{v}`", Self::ENV_MAX_DEGREE))
            })?;
        }
        if let Ok(v) = std::env::var(Self::ENV_MAX_COEFF_BITS) {
            limits.max_coeff_bits = v.trim().parse().map_err(|_| {
                Error::Precondition(format!("{} must be an integer, got `{v}`", Self::ENV_MAX_COEFF_BITS))
            })?;
        }
        Ok(limits)
    }

    /// A larger budget for expensive inputs.
    pub fn high() -> Self {
        Limits {
            max_pairs: 5_000_000,
            max_degree: 400,
            max_coeff_bits: 1 << 20,
        }
    }
}
