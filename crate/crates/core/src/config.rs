//! Size guards for the computations that can blow up.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Upper bounds on problem size. Every bound can be scaled at once with
/// [`Guards::scaled`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Guards {
    /// Largest `|α|₁` for which the flatness hypothesis of the moment map
    /// dimension count is checked over root decompositions.
    pub root_check_weight: u64,
    /// Largest number of unknowns in the commutant linear system.
    pub s0_unknowns: u64,
    /// Largest number of representations `q^{dim Rep}` the oracle enumerates.
    pub oracle_reps: u64,
    /// Largest group order `|GL_α(F_q)|` the oracle sweeps.
    pub oracle_group: u64,
    /// Largest endomorphism-space size `q^{α·α}` the oracle enumerates.
    pub oracle_endos: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            root_check_weight: 12,
            s0_unknowns: 400,
            oracle_reps: 10_000_000,
            oracle_group: 1_000_000,
            oracle_endos: 100_000,
        }
    }
}

impl Guards {
    /// Multiply every bound by `factor`, rounding down.
    pub fn scaled(&self, factor: &BigRational) -> Result<Self> {
        if factor.is_negative() || factor.is_zero() {
            return Err(Error::input(format!(
                "guard scale must be positive, got {factor}"
            )));
        }
        let scale = |b: u64| -> u64 {
            (BigRational::from_integer(BigInt::from(b)) * factor)
                .floor()
                .to_integer()
                .to_u64()
                .unwrap_or(u64::MAX)
        };
        Ok(Guards {
            root_check_weight: scale(self.root_check_weight),
            s0_unknowns: scale(self.s0_unknowns),
            oracle_reps: scale(self.oracle_reps),
            oracle_group: scale(self.oracle_group),
            oracle_endos: scale(self.oracle_endos),
        })
    }
}

/// Parse a scale factor written as an integer, a fraction `p/q`, or a
/// decimal such as `2.5`.
pub fn parse_scale(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::input(format!("cannot parse guard scale {text:?}"));
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(digits, den));
    }
    let n: BigInt = text.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}
