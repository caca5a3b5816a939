//! Kac polynomials of quivers through Hua's formula, Harder–Narasimhan
//! strata of the moment-map zero fiber, and checks tying the two together.
//!
//! ```
//! use hnkac_core::{kac_polynomial, DimVector, LaurentPolynomial, Quiver};
//!
//! let a = kac_polynomial(&Quiver::kronecker(3), &DimVector::new(vec![1, 1])).unwrap();
//! assert_eq!(a, LaurentPolynomial::from_coeffs(&[1, 1, 1]));
//! ```

pub mod config;
pub mod error;
pub mod hua;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod phi;
pub mod poly;
pub mod quiver;
pub mod strata;

pub use config::{parse_scale, Guards};
pub use error::{Error, Result};
pub use hua::{
    bucket_key, kac_polynomial, kac_report, stabilization_study, stratified_decomposition,
    term_value, verify_bucket_shift, verify_codim_degrees, BucketKey, CodimCheck,
    DecompositionReport, DoublePartition, KacReport, OrderedPartition,
};
pub use oracle::{check_against_engine, count_abs_indec, OracleCheck, OracleCount};
pub use poly::{LaurentPolynomial, Rational};
pub use quiver::{DimVector, FlatnessCheck, Quiver, RootClass};
pub use strata::{enumerate_hn_types, strata_report, HnType, Stability, StrataReport, StrataRow};
