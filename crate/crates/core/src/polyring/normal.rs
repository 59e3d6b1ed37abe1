use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::{BasePolynomial, Coordinate, CoordinatePoint, FreePolynomial, Rational};
use crate::relations::{big_p, big_q};

/// Canonical element `a + b*t5` of the coordinate ring.
///
/// Two normal forms are equal exactly when their fields are.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct NormalForm {
    a: BasePolynomial,
    b: BasePolynomial,
}

impl NormalForm {
    pub fn new(a: BasePolynomial, b: BasePolynomial) -> Self {
        Self { a, b }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_base(BasePolynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_base(BasePolynomial::constant(c))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_base(BasePolynomial::from_integer(n))
    }

    pub fn from_base(a: BasePolynomial) -> Self {
        Self::new(a, BasePolynomial::zero())
    }

    pub fn var(c: Coordinate) -> Self {
        if c.is_base() {
            Self::from_base(BasePolynomial::var(c))
        } else {
            Self::new(BasePolynomial::zero(), BasePolynomial::one())
        }
    }

    /// `t-5`, i.e. `P - t5`.
    pub fn t_minus_5() -> Self {
        Self::new(big_p().clone(), BasePolynomial::from_integer(-1))
    }

    /// The `t5`-free part.
    pub fn a(&self) -> &BasePolynomial {
        &self.a
    }

    /// The coefficient of `t5`.
    pub fn b(&self) -> &BasePolynomial {
        &self.b
    }

    pub fn into_parts(self) -> (BasePolynomial, BasePolynomial) {
        (self.a, self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Canonical representative in the free ring.
    pub fn lift(&self) -> FreePolynomial {
        FreePolynomial::from_coefficients(vec![self.a.clone(), self.b.clone()])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.a.scale(c), self.b.scale(c))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative of the canonical lift; already in normal form.
    pub fn partial(&self, c: Coordinate) -> Self {
        if c.is_base() {
            Self::new(self.a.partial(c), self.b.partial(c))
        } else {
            Self::from_base(self.b.clone())
        }
    }

    /// `self * t5`, using `t5^2 = P*t5 - Q`.
    pub fn mul_t5(&self) -> Self {
        if self.b.is_zero() {
            return Self::new(BasePolynomial::zero(), self.a.clone());
        }
        Self::new(-(&self.b * big_q()), &self.a + &(&self.b * big_p()))
    }

    pub fn eval(&self, point: &CoordinatePoint) -> Complex64 {
        self.a.eval(point) + self.b.eval(point) * point[Coordinate::T5]
    }
}

/// Rewrites every `t5^k` with `k >= 2` via `t5^2 = P*t5 - Q`.
///
/// Evaluated Horner-style from the top `t5`-degree down, so the result is a
/// ring homomorphism onto the quotient.
pub fn reduce(x: &FreePolynomial) -> NormalForm {
    x.coefficients()
        .iter()
        .rev()
        .fold(NormalForm::zero(), |acc, c| {
            let shifted = acc.mul_t5();
            NormalForm::new(&shifted.a + c, shifted.b)
        })
}

impl From<BasePolynomial> for NormalForm {
    fn from(a: BasePolynomial) -> Self {
        Self::from_base(a)
    }
}

impl Add<&NormalForm> for &NormalForm {
    type Output = NormalForm;

    fn add(self, rhs: &NormalForm) -> NormalForm {
        NormalForm::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&NormalForm> for &NormalForm {
    type Output = NormalForm;

    fn sub(self, rhs: &NormalForm) -> NormalForm {
        NormalForm::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&NormalForm> for &NormalForm {
    type Output = NormalForm;

    /// `(a1 a2 - Q b1 b2) + (a1 b2 + a2 b1 + P b1 b2) t5`.
    fn mul(self, rhs: &NormalForm) -> NormalForm {
        let mut a = &self.a * &rhs.a;
        let mut b = &(&self.a * &rhs.b) + &(&rhs.a * &self.b);
        if !self.b.is_zero() && !rhs.b.is_zero() {
            let bb = &self.b * &rhs.b;
            a = &a - &(&bb * big_q());
            b = &b + &(&bb * big_p());
        }
        NormalForm::new(a, b)
    }
}

impl Neg for &NormalForm {
    type Output = NormalForm;

    fn neg(self) -> NormalForm {
        NormalForm::new(-&self.a, -&self.b)
    }
}

forward_binop!(NormalForm, Add, add);
forward_binop!(NormalForm, Sub, sub);
forward_binop!(NormalForm, Mul, mul);
forward_neg!(NormalForm);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational;

    fn t(c: Coordinate) -> NormalForm {
        NormalForm::var(c)
    }

    fn p() -> NormalForm {
        NormalForm::from_base(big_p().clone())
    }

    fn q() -> NormalForm {
        NormalForm::from_base(big_q().clone())
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let x = t(Coordinate::T1) + t(Coordinate::T5);
        assert_eq!(&NormalForm::zero() + &x, x);
        assert_eq!(&x + &(-t(Coordinate::T1)), t(Coordinate::T5));
        assert_eq!(p() + (t(Coordinate::T5) - p()), t(Coordinate::T5));
    }

    #[test]
    fn t5_squared_reduces() {
        let t5 = t(Coordinate::T5);
        assert_eq!(
            &t5 * &t5,
            NormalForm::new(-big_q().clone(), big_p().clone())
        );
    }

    #[test]
    fn t5_times_t_minus_5_is_q() {
        assert_eq!(t(Coordinate::T5) * NormalForm::t_minus_5(), q());
    }

    #[test]
    fn multiplicative_identity() {
        let x = t(Coordinate::T3) * t(Coordinate::T5) + t(Coordinate::TM2);
        assert_eq!(NormalForm::one() * &x, x);
    }

    #[test]
    fn reduce_defining_relation_is_zero() {
        let t5 = FreePolynomial::var(Coordinate::T5);
        let rel = t5.pow(2) - FreePolynomial::from_base(big_p().clone()) * &t5
            + FreePolynomial::from_base(big_q().clone());
        assert!(reduce(&rel).is_zero());
    }

    #[test]
    fn reduce_of_already_reduced_is_identity() {
        let f = FreePolynomial::var(Coordinate::T1);
        assert_eq!(reduce(&f), t(Coordinate::T1));
    }

    #[test]
    fn reduce_cube_agrees_with_mul_chain() {
        let t5 = t(Coordinate::T5);
        let expected = &t5 * &(&t5 * &t5);
        assert_eq!(
            reduce(&FreePolynomial::var(Coordinate::T5).pow(3)),
            expected
        );
    }

    #[test]
    fn partial_of_lift() {
        let x = t(Coordinate::T4) * t(Coordinate::T5) + t(Coordinate::T4).pow(2);
        assert_eq!(x.partial(Coordinate::T5), t(Coordinate::T4));
        assert_eq!(
            x.partial(Coordinate::T4),
            t(Coordinate::T5) + t(Coordinate::T4).scale(&rational(2, 1))
        );
    }
}
