//! Exact integer polynomials and rational evaluation.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Polynomial with arbitrary-precision integer coefficients, index = degree.
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = IntPolynomial { coeffs: coeffs.into_iter().map(Into::into).collect() };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::new([1])
    }

    /// `1 + x`, the independence polynomial of a single vertex.
    pub fn one_plus_x() -> Self {
        IntPolynomial::new([1, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(IntPolynomial::one(), |acc, _| &acc * self)
    }

    /// Horner evaluation at a rational point.
    pub fn evaluate(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + Rational::from_integer(c.clone()))
    }

    pub fn evaluate_int(&self, at: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    /// Whether `c_i = c_{d-i}` for all `i`, with `d` the given length minus one.
    pub fn is_palindromic_to(&self, d: usize) -> bool {
        (0..=d).all(|i| self.coeff(i) == self.coeff(d - i))
    }
}

impl From<Vec<BigInt>> for IntPolynomial {
    fn from(coeffs: Vec<BigInt>) -> Self {
        IntPolynomial::new(coeffs)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// Renders as `1+6x+12x^2-x^3`; the zero polynomial renders as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match i {
                0 => mag.to_string(),
                _ if mag.is_one() => String::new(),
                _ => mag.to_string(),
            };
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            write!(f, "{sign}{body}{var}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn evaluation_examples() {
        let p = IntPolynomial::new([1, 6, 12, 8]);
        assert_eq!(p.evaluate(&rational(-1, 1)), rational(-1, 1));
        assert_eq!(p.evaluate(&rational(-1, 2)), Rational::zero());
        assert_eq!(p.evaluate(&Rational::zero()), rational(1, 1));
        assert_eq!(IntPolynomial::new([5, 3]).evaluate(&Rational::zero()), rational(5, 1));
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::new([1, 6, 12, 8]).to_string(), "1+6x+12x^2+8x^3");
        assert_eq!(IntPolynomial::new([1, -1, 0, 1]).to_string(), "1-x+x^3");
        assert_eq!(IntPolynomial::new([0, 0]).to_string(), "0");
        assert_eq!(IntPolynomial::new([0, 2]).to_string(), "2x");
    }

    #[test]
    fn rational_normalises() {
        let r = rational(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn binomial_power() {
        let p = IntPolynomial::one_plus_x().pow(4);
        assert_eq!(p, IntPolynomial::new([1, 4, 6, 4, 1]));
        assert_eq!(p.degree(), Some(4));
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_map(
            a in proptest::collection::vec(-20i64..20, 0..6),
            b in proptest::collection::vec(-20i64..20, 0..6),
            num in -5i64..5,
            den in 1i64..5,
        ) {
            let (p, q) = (IntPolynomial::new(a), IntPolynomial::new(b));
            let x = rational(num, den);
            prop_assert_eq!((&p * &q).evaluate(&x), p.evaluate(&x) * q.evaluate(&x));
            prop_assert_eq!((&p + &q).evaluate(&x), p.evaluate(&x) + q.evaluate(&x));
        }
    }
}
