use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{BasePolynomial, Coordinate, CoordinatePoint, Monomial, NormalForm, Rational};

/// Polynomial in all nine coordinates, before reduction by the defining relation.
///
/// Stored densely by `t5`-degree: `coeffs[k]` multiplies `t5^k`. Trailing
/// zero coefficients are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FreePolynomial {
    coeffs: Vec<BasePolynomial>,
}

impl FreePolynomial {
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

    pub fn var(c: Coordinate) -> Self {
        if c.is_base() {
            Self::from_base(BasePolynomial::var(c))
        } else {
            Self::from_coefficients(vec![BasePolynomial::zero(), BasePolynomial::one()])
        }
    }

    pub fn from_base(p: BasePolynomial) -> Self {
        Self::from_coefficients(vec![p])
    }

    pub fn from_coefficients(coeffs: Vec<BasePolynomial>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(BasePolynomial::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn t5_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients of `t5^0, t5^1, ...`.
    pub fn coefficients(&self) -> &[BasePolynomial] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> Option<&BasePolynomial> {
        self.coeffs.get(k)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.total_degree().map(|d| d + k as u32))
            .max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coefficients(self.coeffs.iter().map(|p| p.scale(c)).collect())
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

    /// Formal partial derivative in the free ring.
    pub fn partial(&self, c: Coordinate) -> Self {
        if c.is_base() {
            return Self::from_coefficients(self.coeffs.iter().map(|p| p.partial(c)).collect());
        }
        Self::from_coefficients(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, p)| p.scale(&Rational::from_integer(k.into())))
                .collect(),
        )
    }

    /// Simultaneous substitution of every coordinate.
    pub fn substitute(&self, sub: &Substitution) -> Self {
        let mut max = [0u16; 9];
        for (k, p) in self.coeffs.iter().enumerate() {
            max[8] = max[8].max(k as u16);
            for (m, _) in p.terms() {
                for (slot, &e) in m.exponents().iter().enumerate() {
                    max[slot] = max[slot].max(e);
                }
            }
        }
        let powers: Vec<Vec<FreePolynomial>> = (0..9)
            .map(|slot| {
                let image = &sub.images[slot];
                let mut row = vec![Self::one()];
                for k in 1..=max[slot] as usize {
                    let next = &row[k - 1] * image;
                    row.push(next);
                }
                row
            })
            .collect();

        let mut out = Self::zero();
        for (k, p) in self.coeffs.iter().enumerate() {
            for (m, c) in p.terms() {
                let mut term = powers[8][k].scale(c);
                for (slot, &e) in m.exponents().iter().enumerate() {
                    if e > 0 {
                        term = &term * &powers[slot][e as usize];
                    }
                }
                out = out + term;
            }
        }
        out
    }

    /// Reduces modulo `t5^2 - P*t5 + Q`.
    pub fn reduce(&self) -> NormalForm {
        super::reduce(self)
    }

    pub fn eval(&self, point: &CoordinatePoint) -> Complex64 {
        let t5 = point[Coordinate::T5];
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, p| acc * t5 + p.eval(point))
    }

    /// Iterates `(t5 exponent, base monomial, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Monomial, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(k, p)| p.terms().map(move |(m, c)| (k, m, c)))
    }
}

impl From<BasePolynomial> for FreePolynomial {
    fn from(p: BasePolynomial) -> Self {
        Self::from_base(p)
    }
}

impl From<&NormalForm> for FreePolynomial {
    fn from(x: &NormalForm) -> Self {
        x.lift()
    }
}

fn combine(
    a: &FreePolynomial,
    b: &FreePolynomial,
    f: impl Fn(&BasePolynomial, &BasePolynomial) -> BasePolynomial,
) -> FreePolynomial {
    let n = a.coeffs.len().max(b.coeffs.len());
    let zero = BasePolynomial::zero();
    FreePolynomial::from_coefficients(
        (0..n)
            .map(|k| {
                f(
                    a.coeffs.get(k).unwrap_or(&zero),
                    b.coeffs.get(k).unwrap_or(&zero),
                )
            })
            .collect(),
    )
}

impl Add<&FreePolynomial> for &FreePolynomial {
    type Output = FreePolynomial;

    fn add(self, rhs: &FreePolynomial) -> FreePolynomial {
        combine(self, rhs, |x, y| x + y)
    }
}

impl Sub<&FreePolynomial> for &FreePolynomial {
    type Output = FreePolynomial;

    fn sub(self, rhs: &FreePolynomial) -> FreePolynomial {
        combine(self, rhs, |x, y| x - y)
    }
}

impl Mul<&FreePolynomial> for &FreePolynomial {
    type Output = FreePolynomial;

    fn mul(self, rhs: &FreePolynomial) -> FreePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return FreePolynomial::zero();
        }
        let mut coeffs = vec![BasePolynomial::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(x * y);
                }
            }
        }
        FreePolynomial::from_coefficients(coeffs)
    }
}

impl Neg for &FreePolynomial {
    type Output = FreePolynomial;

    fn neg(self) -> FreePolynomial {
        FreePolynomial {
            coeffs: self.coeffs.iter().map(|p| -p).collect(),
        }
    }
}

forward_binop!(FreePolynomial, Add, add);
forward_binop!(FreePolynomial, Sub, sub);
forward_binop!(FreePolynomial, Mul, mul);
forward_neg!(FreePolynomial);

/// An assignment of a [`FreePolynomial`] to every coordinate.
///
/// Starts as the identity; coordinates not explicitly set map to themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    images: [FreePolynomial; 9],
}

impl Substitution {
    pub fn identity() -> Self {
        Self {
            images: Coordinate::ALL.map(FreePolynomial::var),
        }
    }

    pub fn with(mut self, c: Coordinate, image: FreePolynomial) -> Self {
        self.set(c, image);
        self
    }

    pub fn set(&mut self, c: Coordinate, image: FreePolynomial) {
        self.images[c.slot()] = image;
    }

    pub fn image(&self, c: Coordinate) -> &FreePolynomial {
        &self.images[c.slot()]
    }

    pub fn is_identity_on(&self, c: Coordinate) -> bool {
        self.images[c.slot()] == FreePolynomial::var(c)
    }
}

impl Default for Substitution {
    fn default() -> Self {
        Self::identity()
    }
}

impl One for FreePolynomial {
    fn one() -> Self {
        FreePolynomial::one()
    }
}

impl Zero for FreePolynomial {
    fn zero() -> Self {
        FreePolynomial::zero()
    }

    fn is_zero(&self) -> bool {
        FreePolynomial::is_zero(self)
    }
}
