//! Exact polynomial arithmetic in the nine trace coordinates.
//!
//! The coordinate ring of the character variety is `R[t5] / (t5^2 - P*t5 + Q)`
//! where `R = Q[t1, t-1, t2, t-2, t3, t-3, t4, t-4]`. Because the relation is
//! monic in `t5`, the quotient is a free `R`-module on `{1, t5}` and every
//! element has a unique representative `a + b*t5` ([`NormalForm`]).
//!
//! The symbol `t-5` is never a variable: it always stands for `P - t5`.

macro_rules! forward_binop {
    ($ty:ty, $trait:ident, $method:ident) => {
        impl std::ops::$trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}

macro_rules! forward_neg {
    ($ty:ty) => {
        impl std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -(&self)
            }
        }
    };
}

mod base;
mod coordinate;
mod format;
mod free;
mod normal;

pub(crate) use base::rational_to_f64;
pub use base::{BasePolynomial, Monomial};
pub use coordinate::{Coordinate, CoordinatePoint};
pub use format::{format_rational, parse_rational, JsonTerm};
pub use free::{FreePolynomial, Substitution};
pub use normal::{reduce, NormalForm};

/// Exact coefficient type.
pub type Rational = num_rational::BigRational;

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("t({0}) is not a trace coordinate")]
    InvalidCoordinate(i64),
    #[error("malformed coefficient {0:?}")]
    BadCoefficient(String),
    #[error("exponent vector must have 9 entries, got {0}")]
    BadExponentVector(usize),
}
