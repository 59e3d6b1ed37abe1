use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use super::{Coordinate, CoordinatePoint, Rational};

/// Exponent vector over the eight base coordinates, in the fixed variable order.
///
/// Ordered graded-lexicographically: total degree first, then the first
/// differing exponent (a larger exponent on an earlier variable is larger).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial([u16; 8]);

impl Monomial {
    pub const ONE: Self = Self([0; 8]);

    pub fn new(exponents: [u16; 8]) -> Self {
        Self(exponents)
    }

    /// Panics if `c` is `t5`.
    pub fn var(c: Coordinate) -> Self {
        assert!(c.is_base(), "t5 is not a base-ring variable");
        let mut e = [0; 8];
        e[c.slot()] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u16; 8] {
        &self.0
    }

    /// Exponent of `c`; always 0 for `t5`.
    pub fn exponent(&self, c: Coordinate) -> u16 {
        if c.is_base() {
            self.0[c.slot()]
        } else {
            0
        }
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 8]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x = x.checked_add(y).expect("monomial exponent overflow");
        }
        Self(e)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse polynomial in the eight base coordinates with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BasePolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl BasePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    /// Panics if `c` is `t5`.
    pub fn var(c: Coordinate) -> Self {
        Self::monomial(Monomial::var(c), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
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

    /// Formal partial derivative; identically zero with respect to `t5`.
    pub fn partial(&self, c: Coordinate) -> Self {
        if !c.is_base() {
            return Self::zero();
        }
        let slot = c.slot();
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            let e = m.0[slot];
            if e == 0 {
                continue;
            }
            let mut lowered = m.0;
            lowered[slot] -= 1;
            out.add_term(Monomial(lowered), x * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn eval(&self, point: &CoordinatePoint) -> Complex64 {
        let powers = PowerTable::new(point, self.terms.keys());
        self.terms
            .iter()
            .map(|(m, c)| powers.monomial(m) * rational_to_f64(c))
            .sum()
    }
}

pub(crate) fn rational_to_f64(c: &Rational) -> f64 {
    c.to_f64().expect("coefficient out of f64 range")
}

/// Cached powers of each coordinate value, up to the largest exponent needed.
struct PowerTable {
    powers: Vec<Vec<Complex64>>,
}

impl PowerTable {
    fn new<'a>(point: &CoordinatePoint, monomials: impl Iterator<Item = &'a Monomial>) -> Self {
        let mut max = [0u16; 8];
        for m in monomials {
            for (mx, e) in max.iter_mut().zip(m.0) {
                *mx = (*mx).max(e);
            }
        }
        let powers = (0..8)
            .map(|slot| {
                let z = point.values()[slot];
                let mut row = Vec::with_capacity(max[slot] as usize + 1);
                row.push(Complex64::new(1.0, 0.0));
                for k in 1..=max[slot] as usize {
                    row.push(row[k - 1] * z);
                }
                row
            })
            .collect();
        Self { powers }
    }

    fn monomial(&self, m: &Monomial) -> Complex64 {
        m.0.iter()
            .enumerate()
            .map(|(slot, &e)| self.powers[slot][e as usize])
            .product()
    }
}

impl Add<&BasePolynomial> for &BasePolynomial {
    type Output = BasePolynomial;

    fn add(self, rhs: &BasePolynomial) -> BasePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&BasePolynomial> for &BasePolynomial {
    type Output = BasePolynomial;

    fn sub(self, rhs: &BasePolynomial) -> BasePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul<&BasePolynomial> for &BasePolynomial {
    type Output = BasePolynomial;

    fn mul(self, rhs: &BasePolynomial) -> BasePolynomial {
        let mut out = BasePolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BasePolynomial {
    type Output = BasePolynomial;

    fn neg(self) -> BasePolynomial {
        BasePolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

forward_binop!(BasePolynomial, Add, add);
forward_binop!(BasePolynomial, Sub, sub);
forward_binop!(BasePolynomial, Mul, mul);
forward_neg!(BasePolynomial);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational;

    fn t(c: Coordinate) -> BasePolynomial {
        BasePolynomial::var(c)
    }

    #[test]
    fn grlex_orders_by_degree_then_variable() {
        let t1 = Monomial::var(Coordinate::T1);
        let tm4 = Monomial::var(Coordinate::TM4);
        assert!(t1 > tm4);
        assert!(tm4.mul(&tm4) > t1);
        assert!(Monomial::ONE < tm4);
    }

    #[test]
    fn cancellation_leaves_empty_map() {
        let p = t(Coordinate::T1) + t(Coordinate::T2);
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z, BasePolynomial::zero());
        assert_eq!(z.total_degree(), None);
    }

    #[test]
    fn partial_derivative_power_rule() {
        let p = t(Coordinate::T3).pow(3).scale(&rational(2, 3));
        let d = p.partial(Coordinate::T3);
        assert_eq!(d, t(Coordinate::T3).pow(2).scale(&rational(2, 1)));
        assert!(p.partial(Coordinate::T5).is_zero());
        assert!(p.partial(Coordinate::T1).is_zero());
    }

    #[test]
    fn eval_at_constant_point() {
        let p = t(Coordinate::T1) * t(Coordinate::TM2) - BasePolynomial::from_integer(4);
        let v = p.eval(&CoordinatePoint::uniform(Complex64::new(3.0, 0.0)));
        assert_eq!(v, Complex64::new(5.0, 0.0));
    }
}
