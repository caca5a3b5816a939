//! Laurent polynomials in `q` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Finitely supported map exponent → nonzero coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(integer(1), 0)
    }

    /// `c·q^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Integer coefficients listed from `q^0` upwards.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(e, &c)| (e as i64, integer(c))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += c · q^shift · other`.
    pub fn add_scaled_shifted(&mut self, other: &Self, c: &Rational, shift: i64) {
        if c.is_zero() {
            return;
        }
        for (&e, oc) in &other.terms {
            self.add_term(e + shift, oc * c);
        }
    }

    /// Largest exponent.
    pub fn degree(&self) -> Result<i64> {
        self.terms
            .keys()
            .next_back()
            .copied()
            .ok_or(Error::ZeroPolynomial("degree"))
    }

    /// Smallest exponent.
    pub fn valuation(&self) -> Result<i64> {
        self.terms
            .keys()
            .next()
            .copied()
            .ok_or(Error::ZeroPolynomial("valuation"))
    }

    pub fn leading_coeff(&self) -> Result<&Rational> {
        self.terms
            .values()
            .next_back()
            .ok_or(Error::ZeroPolynomial("leading coefficient"))
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// Substitute `q ↦ q⁻¹`.
    pub fn invert_variable(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact value at `q = r`. Negative exponents need `r ≠ 0`.
    pub fn eval_at(&self, r: &Rational) -> Result<Rational> {
        if r.is_zero() {
            if self.terms.keys().any(|&e| e < 0) {
                return Err(Error::input("cannot evaluate negative powers at q = 0"));
            }
            return Ok(self.coeff(0));
        }
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow(r.clone(), e as usize)
            } else {
                num_traits::pow(r.recip(), (-e) as usize)
            };
            acc += c * p;
        }
        Ok(acc)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&e| e >= 0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`Error::NonExactDivision`] when `divisor` does not divide
    /// `self` in the Laurent polynomial ring.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::input("division by the zero polynomial"));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let shift = self.valuation()? - divisor.valuation()?;
        // normalise both to ordinary polynomials with nonzero constant term
        let mut rem = self.shift(-self.valuation()?);
        let den = divisor.shift(-divisor.valuation()?);
        let den_deg = den.degree()?;
        let den_lead = den.leading_coeff()?.clone();
        let mut quot = Self::zero();
        while let Ok(rem_deg) = rem.degree() {
            if rem_deg < den_deg {
                return Err(Error::NonExactDivision);
            }
            let c = rem.leading_coeff()? / &den_lead;
            let k = rem_deg - den_deg;
            rem.add_scaled_shifted(&den, &-c.clone(), k);
            quot.add_term(k, c);
        }
        Ok(quot.shift(shift))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self - &rhs
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e, c) in &self.terms {
            out.add_scaled_shifted(rhs, c, e);
        }
        out
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

/// Canonical rendering: `c*q^e` terms in increasing exponent order joined by
/// `" + "`; `0` for the zero polynomial.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*q^{e}")?;
        }
        Ok(())
    }
}

impl One for LaurentPolynomial {
    fn one() -> Self {
        LaurentPolynomial::one()
    }
}

impl Zero for LaurentPolynomial {
    fn zero() -> Self {
        LaurentPolynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_coeffs(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[1, -1]) + &p(&[0, 1]), p(&[1]));
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1]), p(&[1, 0, -1]));
        assert_eq!(p(&[0, 2]).scale(&rational(1, 2)), p(&[0, 1]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), LaurentPolynomial::zero());
        assert!(!(&p(&[1, 2]) - &p(&[1, 2])).terms().any(|_| true));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[1, 0, -1]).exact_div(&p(&[1, -1])).unwrap(), p(&[1, 1]));
        assert_eq!(
            p(&[1, 1]).exact_div(&p(&[1, -1])),
            Err(Error::NonExactDivision)
        );
        assert!(p(&[1]).exact_div(&LaurentPolynomial::zero()).is_err());
        // Laurent operands
        let a = p(&[1, 0, -1]).shift(-3);
        let b = p(&[1, -1]).shift(2);
        assert_eq!(a.exact_div(&b).unwrap(), p(&[1, 1]).shift(-5));
    }

    #[test]
    fn degree_valuation_shift_eval() {
        let x = p(&[-1, 0, 0, 1]);
        assert_eq!(x.degree().unwrap(), 3);
        assert_eq!(x.valuation().unwrap(), 0);
        assert_eq!(
            p(&[-1, 1]).shift(-1),
            LaurentPolynomial::from_terms([(-1, integer(-1)), (0, integer(1))])
        );
        assert_eq!(p(&[1, 1, 1]).eval_at(&integer(2)).unwrap(), integer(7));
        assert_eq!(
            LaurentPolynomial::zero().degree(),
            Err(Error::ZeroPolynomial("degree"))
        );
        assert!(LaurentPolynomial::zero().valuation().is_err());
        let inv = p(&[0, 1]).shift(-2);
        assert_eq!(inv.eval_at(&integer(2)).unwrap(), rational(1, 2));
        assert!(inv.eval_at(&integer(0)).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, -1]).to_string(), "1*q^0 + -1*q^1");
        assert_eq!(
            LaurentPolynomial::monomial(rational(-1, 2), -2).to_string(),
            "-1/2*q^-2"
        );
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    /// All polynomials of degree ≤ 2 with coefficients in {−1, 0, 1}.
    fn small_polys() -> Vec<LaurentPolynomial> {
        let mut out = Vec::new();
        for a in -1..=1 {
            for b in -1..=1 {
                for c in -1..=1 {
                    out.push(p(&[a, b, c]));
                }
            }
        }
        out
    }

    #[test]
    fn ring_axioms_exhaustive() {
        let ps = small_polys();
        for a in &ps {
            for b in &ps {
                assert_eq!(a * b, b * a);
                assert_eq!(a + b, b + a);
                for c in ps.iter().step_by(4) {
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                    assert_eq!(&(a + b) + c, a + &(b + c));
                }
            }
        }
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        (prop::collection::vec(-2i64..=2, 0..5), -3i64..3)
            .prop_map(|(c, s)| LaurentPolynomial::from_coeffs(&c).shift(s))
    }

    proptest! {
        #[test]
        fn exact_div_inverts_mul(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn no_zero_coefficients_stored(a in arb_poly(), b in arb_poly()) {
            for x in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(x.terms().all(|(_, c)| !c.is_zero()));
            }
        }
    }
}
