//! The q-Pochhammer products that appear in Hua's formula.

use crate::poly::{integer, LaurentPolynomial};
use crate::quiver::DimVector;

/// `φ_m(q) = (1 − q)(1 − q²)⋯(1 − q^m)`.
pub fn phi_int(m: u32) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::one();
    for j in 1..=i64::from(m) {
        let factor = LaurentPolynomial::from_terms([(0, integer(1)), (j, integer(-1))]);
        acc = &acc * &factor;
    }
    acc
}

/// `Π_i φ_{β_i}(q)`.
pub fn phi_vec(beta: &DimVector) -> LaurentPolynomial {
    beta.coords()
        .iter()
        .fold(LaurentPolynomial::one(), |acc, &m| &acc * &phi_int(m))
}

/// `b(γ) = Σ_i γ_i(γ_i + 1)/2`, the degree of `φ_γ`.
pub fn b_exponent(gamma: &DimVector) -> i64 {
    gamma
        .coords()
        .iter()
        .map(|&x| i64::from(x) * (i64::from(x) + 1) / 2)
        .sum()
}

/// `(sign, e)` with `1/φ_m(q⁻¹) = sign · q^e / φ_m(q)`.
pub fn monomial_reciprocal_phi(m: u32) -> (i8, i64) {
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    (sign, i64::from(m) * (i64::from(m) + 1) / 2)
}
