//! The named polynomials of the rank-2 character variety.
//!
//! `P` and `Q` are the base-ring polynomials with `t5 + t-5 = P` and
//! `t5 * t-5 = Q` on the variety, so the coordinate ring is cut out of
//! affine 9-space by the single sextic `t5^2 - P*t5 + Q`. `p` and `q` are
//! the short seeds with `P = S_D(p) - 3` and `Q = S_D(q) + 9`, where `S_D`
//! sums over the dihedral symmetry group.
//!
//! Each table is a literal term list: `(coefficient, [(index, exponent), ..])`
//! where `index` names the coordinate `t(index)`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::polyring::{BasePolynomial, Coordinate, FreePolynomial, Monomial, Rational};

type TermTable = [(i64, &'static [(i8, u16)])];

const P_TERMS: &TermTable = &[
    (1, &[(1, 1), (-1, 1), (2, 1), (-2, 1)]),
    (-1, &[(1, 1), (2, 1), (-3, 1)]),
    (-1, &[(-1, 1), (-2, 1), (3, 1)]),
    (-1, &[(1, 1), (-2, 1), (-4, 1)]),
    (-1, &[(-1, 1), (2, 1), (4, 1)]),
    (1, &[(1, 1), (-1, 1)]),
    (1, &[(2, 1), (-2, 1)]),
    (1, &[(3, 1), (-3, 1)]),
    (1, &[(4, 1), (-4, 1)]),
    (-3, &[]),
];

const Q_TERMS: &TermTable = &[
    (9, &[]),
    (-6, &[(1, 1), (-1, 1)]),
    (-6, &[(2, 1), (-2, 1)]),
    (-6, &[(3, 1), (-3, 1)]),
    (-6, &[(4, 1), (-4, 1)]),
    (1, &[(1, 3)]),
    (1, &[(2, 3)]),
    (1, &[(3, 3)]),
    (1, &[(4, 3)]),
    (1, &[(-1, 3)]),
    (1, &[(-2, 3)]),
    (1, &[(-3, 3)]),
    (1, &[(-4, 3)]),
    (-3, &[(-4, 1), (-3, 1), (-1, 1)]),
    (-3, &[(4, 1), (3, 1), (1, 1)]),
    (-3, &[(-4, 1), (2, 1), (3, 1)]),
    (-3, &[(4, 1), (-2, 1), (-3, 1)]),
    (3, &[(-4, 1), (-2, 1), (1, 1)]),
    (3, &[(4, 1), (2, 1), (-1, 1)]),
    (3, &[(1, 1), (2, 1), (-3, 1)]),
    (3, &[(-1, 1), (-2, 1), (3, 1)]),
    (1, &[(-2, 1), (-1, 1), (2, 1), (1, 1)]),
    (1, &[(-3, 1), (-2, 1), (3, 1), (2, 1)]),
    (1, &[(-4, 1), (-1, 1), (4, 1), (1, 1)]),
    (1, &[(-4, 1), (-2, 1), (4, 1), (2, 1)]),
    (1, &[(-3, 1), (-1, 1), (3, 1), (1, 1)]),
    (1, &[(-3, 1), (-4, 1), (3, 1), (4, 1)]),
    (1, &[(-4, 2), (-3, 1), (-2, 1)]),
    (1, &[(4, 2), (3, 1), (2, 1)]),
    (1, &[(-1, 2), (-2, 1), (-4, 1)]),
    (1, &[(1, 2), (2, 1), (4, 1)]),
    (1, &[(1, 1), (-2, 2), (-3, 1)]),
    (1, &[(-1, 1), (2, 2), (3, 1)]),
    (1, &[(-4, 1), (-3, 1), (1, 2)]),
    (1, &[(4, 1), (3, 1), (-1, 2)]),
    (1, &[(-4, 1), (2, 1), (-3, 2)]),
    (1, &[(4, 1), (-2, 1), (3, 2)]),
    (1, &[(-1, 2), (-3, 1), (2, 1)]),
    (1, &[(1, 2), (3, 1), (-2, 1)]),
    (1, &[(-4, 1), (1, 1), (2, 2)]),
    (1, &[(4, 1), (-1, 1), (-2, 2)]),
    (1, &[(-4, 1), (3, 1), (-2, 2)]),
    (1, &[(4, 1), (-3, 1), (2, 2)]),
    (1, &[(1, 1), (3, 1), (-4, 2)]),
    (1, &[(-1, 1), (-3, 1), (4, 2)]),
    (1, &[(-1, 1), (-4, 1), (3, 2)]),
    (1, &[(1, 1), (4, 1), (-3, 2)]),
    (-2, &[(-3, 2), (-2, 1), (-1, 1)]),
    (-2, &[(3, 2), (2, 1), (1, 1)]),
    (-2, &[(-4, 2), (-1, 1), (2, 1)]),
    (-2, &[(4, 2), (1, 1), (-2, 1)]),
    (1, &[(-1, 2), (-2, 2), (-3, 1)]),
    (1, &[(1, 2), (2, 2), (3, 1)]),
    (1, &[(-4, 1), (-1, 2), (2, 2)]),
    (1, &[(4, 1), (1, 2), (-2, 2)]),
    (-1, &[(-4, 1), (-2, 2), (2, 1), (1, 1)]),
    (-1, &[(4, 1), (2, 2), (-2, 1), (-1, 1)]),
    (-1, &[(-3, 1), (1, 2), (-1, 1), (2, 1)]),
    (-1, &[(3, 1), (-1, 2), (1, 1), (-2, 1)]),
    (-1, &[(-3, 1), (2, 2), (-2, 1), (1, 1)]),
    (-1, &[(3, 1), (-2, 2), (2, 1), (-1, 1)]),
    (-1, &[(-4, 1), (-2, 1), (-1, 1), (1, 2)]),
    (-1, &[(4, 1), (2, 1), (1, 1), (-1, 2)]),
    (-1, &[(-1, 1), (-2, 3), (1, 1)]),
    (-1, &[(-1, 1), (2, 3), (1, 1)]),
    (-1, &[(-1, 3), (-2, 1), (2, 1)]),
    (-1, &[(1, 3), (-2, 1), (2, 1)]),
    (-1, &[(-4, 1), (-3, 1), (-2, 1), (-1, 1), (2, 1)]),
    (-1, &[(4, 1), (3, 1), (2, 1), (1, 1), (-2, 1)]),
    (-1, &[(-1, 1), (1, 1), (2, 1), (-4, 1), (3, 1)]),
    (-1, &[(-1, 1), (1, 1), (-2, 1), (4, 1), (-3, 1)]),
    (1, &[(-2, 1), (-1, 2), (1, 2), (2, 1)]),
    (1, &[(-1, 1), (-2, 2), (2, 2), (1, 1)]),
];

/// Numerators of `p`; every coefficient is over 8.
const LITTLE_P_TERMS: &TermTable = &[
    (1, &[(1, 1), (-1, 1), (2, 1), (-2, 1)]),
    (-4, &[(1, 1), (-2, 1), (-4, 1)]),
    (2, &[(1, 1), (-1, 1)]),
    (2, &[(3, 1), (-3, 1)]),
];

/// Numerators of `q`; every coefficient is over 8.
const LITTLE_Q_TERMS: &TermTable = &[
    (2, &[(-2, 1), (-1, 2), (1, 2), (2, 1)]),
    (4, &[(1, 2), (2, 2), (3, 1)]),
    (-4, &[(1, 3), (-2, 1), (2, 1)]),
    (-8, &[(-4, 1), (-2, 1), (-1, 1), (1, 2)]),
    (-4, &[(4, 1), (3, 1), (2, 1), (1, 1), (-2, 1)]),
    (8, &[(1, 1), (3, 1), (-4, 2)]),
    (8, &[(-4, 1), (1, 1), (2, 2)]),
    (-8, &[(3, 2), (2, 1), (1, 1)]),
    (4, &[(4, 1), (-3, 1), (2, 2)]),
    (1, &[(-2, 1), (-1, 1), (2, 1), (1, 1)]),
    (1, &[(-3, 1), (-4, 1), (3, 1), (4, 1)]),
    (4, &[(-3, 1), (-1, 1), (3, 1), (1, 1)]),
    (4, &[(1, 3)]),
    (4, &[(3, 3)]),
    (12, &[(-4, 1), (-2, 1), (1, 1)]),
    (-12, &[(-4, 1), (2, 1), (3, 1)]),
    (-12, &[(1, 1), (-1, 1)]),
    (-12, &[(3, 1), (-3, 1)]),
];

fn build(table: &TermTable, denominator: i64) -> BasePolynomial {
    BasePolynomial::from_terms(table.iter().map(|(c, factors)| {
        let mut e = [0u16; 8];
        for &(index, power) in factors.iter() {
            let v = Coordinate::new(index.into()).expect("table names a base coordinate");
            e[v.slot()] += power;
        }
        (
            Monomial::new(e),
            Rational::new((*c).into(), denominator.into()),
        )
    }))
}

/// `P`, with `t5 + t-5 = P` on the character variety.
pub fn big_p() -> &'static BasePolynomial {
    static CELL: OnceLock<BasePolynomial> = OnceLock::new();
    CELL.get_or_init(|| build(P_TERMS, 1))
}

/// `Q`, with `t5 * t-5 = Q` on the character variety.
pub fn big_q() -> &'static BasePolynomial {
    static CELL: OnceLock<BasePolynomial> = OnceLock::new();
    CELL.get_or_init(|| build(Q_TERMS, 1))
}

pub fn little_p() -> &'static BasePolynomial {
    static CELL: OnceLock<BasePolynomial> = OnceLock::new();
    CELL.get_or_init(|| build(LITTLE_P_TERMS, 8))
}

pub fn little_q() -> &'static BasePolynomial {
    static CELL: OnceLock<BasePolynomial> = OnceLock::new();
    CELL.get_or_init(|| build(LITTLE_Q_TERMS, 8))
}

/// `t5^2 - P*t5 + Q` in the free ring.
pub fn defining_relation() -> &'static FreePolynomial {
    static CELL: OnceLock<FreePolynomial> = OnceLock::new();
    CELL.get_or_init(|| {
        FreePolynomial::from_coefficients(vec![big_q().clone(), -big_p(), BasePolynomial::one()])
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedRelation {
    BigP,
    BigQ,
    LittleP,
    LittleQ,
    DefiningRelation,
}

impl NamedRelation {
    pub const ALL: [Self; 5] = [
        Self::BigP,
        Self::BigQ,
        Self::LittleP,
        Self::LittleQ,
        Self::DefiningRelation,
    ];

    pub fn value(self) -> FreePolynomial {
        match self {
            Self::BigP => big_p().clone().into(),
            Self::BigQ => big_q().clone().into(),
            Self::LittleP => little_p().clone().into(),
            Self::LittleQ => little_q().clone().into(),
            Self::DefiningRelation => defining_relation().clone(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::BigP => "P",
            Self::BigQ => "Q",
            Self::LittleP => "p",
            Self::LittleQ => "q",
            Self::DefiningRelation => "relation",
        }
    }
}

impl fmt::Display for NamedRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedRelation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown relation {s:?}; expected one of P, Q, p, q, relation"))
    }
}
