//! Goldman Poisson structures on the coordinate ring for the two surfaces
//! with free fundamental group of rank 2.
//!
//! A [`BracketTable`] stores `a(i,j) = {t_i, t_j}` for the nine coordinates;
//! [`bracket`] extends it to the whole ring as a bi-derivation, computed on
//! canonical free-ring lifts and reduced afterwards.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::expr::parse_normal_form;
use crate::polyring::{reduce, Coordinate, FreePolynomial, NormalForm, Rational};
use crate::relations::{big_p, big_q, defining_relation};
use crate::surfaces::Surface;
use crate::symmetry::{DihedralElement, GroupRingOperator, NielsenMove, Symmetry};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Orientation {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Self::Positive => 1,
            Self::Negative => -1,
        }
    }

    fn rational(self) -> Rational {
        Rational::from_integer(self.sign().into())
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Positive => "+",
            Self::Negative => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown orientation {0:?}; expected + or -")]
pub struct UnknownOrientation(pub String);

impl FromStr for Orientation {
    type Err = UnknownOrientation;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+" | "+1" | "1" | "positive" => Ok(Self::Positive),
            "-" | "-1" | "negative" => Ok(Self::Negative),
            other => Err(UnknownOrientation(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SurfaceStructure {
    pub surface: Surface,
    pub orientation: Orientation,
}

impl SurfaceStructure {
    pub fn new(surface: Surface, orientation: Orientation) -> Self {
        Self {
            surface,
            orientation,
        }
    }

    pub fn positive(surface: Surface) -> Self {
        Self::new(surface, Orientation::Positive)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PoissonError {
    #[error("bracket of {coordinate} with the defining relation is {residual}, not 0")]
    Failure {
        coordinate: Coordinate,
        residual: NormalForm,
    },
    #[error("bi-vector entry ({}, {}) expected {expected}, got {got}", pair.0, pair.1)]
    Mismatch {
        pair: (Coordinate, Coordinate),
        expected: NormalForm,
        got: NormalForm,
    },
    #[error("{element} does not send {coordinate} to a coordinate")]
    NonCoordinateImage {
        element: DihedralElement,
        coordinate: Coordinate,
    },
}

/// Orders a pair by coordinate slot; the flag is true when it was swapped.
fn ordered(i: Coordinate, j: Coordinate) -> (Coordinate, Coordinate, bool) {
    if i <= j {
        (i, j, false)
    } else {
        (j, i, true)
    }
}

/// Antisymmetric table of brackets between coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    structure: SurfaceStructure,
    entries: BTreeMap<(Coordinate, Coordinate), NormalForm>,
}

impl BracketTable {
    fn from_entries(
        structure: SurfaceStructure,
        entries: impl IntoIterator<Item = ((Coordinate, Coordinate), NormalForm)>,
    ) -> Self {
        let mut table = Self {
            structure,
            entries: BTreeMap::new(),
        };
        for ((i, j), v) in entries {
            let (a, b, swapped) = ordered(i, j);
            assert_ne!(a, b, "diagonal bracket entries are zero");
            let v = if swapped { -v } else { v };
            if !v.is_zero() {
                table.entries.insert((a, b), v);
            }
        }
        table
    }

    pub fn structure(&self) -> SurfaceStructure {
        self.structure
    }

    /// `{t_i, t_j}`.
    pub fn get(&self, i: Coordinate, j: Coordinate) -> NormalForm {
        let (a, b, swapped) = ordered(i, j);
        match self.entries.get(&(a, b)) {
            Some(v) if swapped => -v,
            Some(v) => v.clone(),
            None => NormalForm::zero(),
        }
    }

    /// Nonzero entries `((i, j), a(i,j))` with `i` before `j`.
    pub fn entries(&self) -> impl Iterator<Item = ((Coordinate, Coordinate), &NormalForm)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    /// The same structure with reversed orientation.
    pub fn negated(&self) -> Self {
        let orientation = match self.structure.orientation {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        };
        Self {
            structure: SurfaceStructure::new(self.structure.surface, orientation),
            entries: self.entries.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

fn c(i: i64) -> Coordinate {
    Coordinate::new(i).expect("valid coordinate index")
}

fn nf(text: &str) -> NormalForm {
    parse_normal_form(text).expect("bracket table entries parse")
}

/// `P - 2 t5`.
pub fn p_minus_2t5() -> NormalForm {
    NormalForm::from_base(big_p().clone())
        - NormalForm::var(Coordinate::T5).scale(&Rational::from_integer(2.into()))
}

const TRINION_A45: &str = "t4*(t1*t-1 + t2*t-2 + t3*t-3 - t5 - 6) \
    + t-4*(2*t1*t3 + 2*t-2*t-3 - 4*t-1*t2) + t5*t1*t-2 + 3*t-4^2 - 3*t-1*t-3 \
    - 3*t2*t3 + 3*t1*t-2 + t-1^2*t-2 + t1^2*t-3 + t2*t-3^2 + t1*t2^2 + t3*t-2^2 \
    + t-1*t3^2 + t-1^2*t2^2 - t1*t-1*t2*t3 - t-3*t-2*t-1*t2 - t1*t2*t-2^2 \
    - t-2*t-1*t1^2";

const TRINION_AM45: &str = "t-4*(t5 - t-1*t1 - t2*t-2 - t3*t-3 + 6) \
    + t4*(4*t1*t-2 - 2*t-1*t-3 - 2*t2*t3) - t5*t-1*t2 - 3*t4^2 + 3*t1*t3 \
    + 3*t-2*t-3 - 3*t-1*t2 - t1^2*t2 - t-1^2*t3 - t-2*t3^2 - t-1*t-2^2 \
    - t-3*t2^2 - t1*t-3^2 - t1^2*t-2^2 + t-1*t1*t-2*t-3 + t3*t2*t1*t-2 \
    + t-1*t-2*t2^2 + t2*t1*t-1^2";

const TORUS_ENTRIES: [(i64, i64, &str); 24] = [
    (1, 2, "t3 - 1/3*t1*t2"),
    (-1, 2, "-t-4 + 1/3*t-1*t2"),
    (1, -2, "-t4 + 1/3*t1*t-2"),
    (-1, -2, "t-3 - 1/3*t-1*t-2"),
    (1, 3, "2/3*t1*t3 - t-1*t2 + t-4"),
    (-1, -3, "-t1*t-2 + t4 + 2/3*t-1*t-3"),
    (1, 4, "t-1*t-2 - t-3 - 2/3*t1*t4"),
    (-1, -4, "t1*t2 - t3 - 2/3*t-1*t-4"),
    (2, 3, "t-2*t1 - t4 - 2/3*t2*t3"),
    (-2, -3, "t2*t-1 - t-4 - 2/3*t-2*t-3"),
    (2, -4, "-t-2*t-1 + t-3 + 2/3*t2*t-4"),
    (-2, 4, "-t2*t1 + t3 + 2/3*t-2*t4"),
    (1, -3, "-t-2 + 1/3*t1*t-3"),
    (-1, 3, "-t2 + 1/3*t-1*t3"),
    (1, -4, "t2 - 1/3*t1*t-4"),
    (-1, 4, "t-2 - 1/3*t-1*t4"),
    (2, -3, "t-1 - 1/3*t2*t-3"),
    (-2, 3, "t1 - 1/3*t-2*t3"),
    (2, 4, "-t1 + 1/3*t2*t4"),
    (-2, -4, "-t-1 + 1/3*t-2*t-4"),
    (
        3,
        4,
        "-t1^2 + t-1 - t-4*t-2 - t2*t-3 + t-1*t2*t-2 - 1/3*t3*t4",
    ),
    (
        -3,
        -4,
        "-t-1^2 + t1 - t4*t2 - t-2*t3 + t1*t-2*t2 - 1/3*t-3*t-4",
    ),
    (
        3,
        -4,
        "t2^2 - t-2 + t4*t-1 + t1*t-3 - t-2*t1*t-1 + 1/3*t3*t-4",
    ),
    (
        -3,
        4,
        "t-2^2 - t2 + t-4*t1 + t-1*t3 - t2*t-1*t1 + 1/3*t-3*t4",
    ),
];

fn positive_table(surface: Surface) -> &'static BracketTable {
    static TRINION: OnceLock<BracketTable> = OnceLock::new();
    static TORUS: OnceLock<BracketTable> = OnceLock::new();
    let structure = SurfaceStructure::positive(surface);
    match surface {
        Surface::Trinion => TRINION.get_or_init(|| {
            BracketTable::from_entries(
                structure,
                [
                    ((c(4), c(-4)), p_minus_2t5()),
                    ((c(4), c(5)), nf(TRINION_A45)),
                    ((c(-4), c(5)), nf(TRINION_AM45)),
                ],
            )
        }),
        Surface::Torus => TORUS.get_or_init(|| {
            BracketTable::from_entries(
                structure,
                TORUS_ENTRIES
                    .iter()
                    .map(|&(i, j, text)| ((c(i), c(j)), nf(text))),
            )
        }),
    }
}

/// The bracket table of a surface, scaled by its orientation sign.
pub fn bracket_table(s: SurfaceStructure) -> BracketTable {
    let base = positive_table(s.surface);
    match s.orientation {
        Orientation::Positive => base.clone(),
        Orientation::Negative => base.negated(),
    }
}

fn reduced_partials(f: &FreePolynomial) -> Vec<Option<NormalForm>> {
    Coordinate::ALL
        .iter()
        .map(|&c| {
            let d = f.partial(c);
            (!d.is_zero()).then(|| reduce(&d))
        })
        .collect()
}

/// The bi-derivation applied to arbitrary free-ring representatives.
pub fn bracket_free(f: &FreePolynomial, g: &FreePolynomial, table: &BracketTable) -> NormalForm {
    let df = reduced_partials(f);
    let dg = reduced_partials(g);
    let mut out = NormalForm::zero();
    for ((i, j), a) in table.entries() {
        let (si, sj) = (i.slot(), j.slot());
        let mut inner = NormalForm::zero();
        if let (Some(x), Some(y)) = (&df[si], &dg[sj]) {
            inner = inner + x * y;
        }
        if let (Some(x), Some(y)) = (&df[sj], &dg[si]) {
            inner = inner - x * y;
        }
        if !inner.is_zero() {
            out = out + a * &inner;
        }
    }
    out
}

/// `{f, g}` on the coordinate ring.
pub fn bracket(f: &NormalForm, g: &NormalForm, table: &BracketTable) -> NormalForm {
    bracket_free(&f.lift(), &g.lift(), table)
}

/// `{f,{g,h}} + {g,{h,f}} + {h,{f,g}}`.
pub fn jacobiator(
    f: &NormalForm,
    g: &NormalForm,
    h: &NormalForm,
    table: &BracketTable,
) -> NormalForm {
    bracket(f, &bracket(g, h, table), table)
        + bracket(g, &bracket(h, f, table), table)
        + bracket(h, &bracket(f, g, table), table)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jacobiator {
    pub triple: (Coordinate, Coordinate, Coordinate),
    pub value: NormalForm,
}

/// Jacobiators of all 84 coordinate triples `i < j < k`, in order.
pub fn coordinate_jacobiators(table: &BracketTable) -> Vec<Jacobiator> {
    let all = Coordinate::ALL;
    let mut triples = Vec::new();
    for a in 0..9 {
        for b in a + 1..9 {
            for c in b + 1..9 {
                triples.push((all[a], all[b], all[c]));
            }
        }
    }
    triples
        .into_par_iter()
        .map(|(i, j, k)| Jacobiator {
            triple: (i, j, k),
            value: jacobiator(
                &NormalForm::var(i),
                &NormalForm::var(j),
                &NormalForm::var(k),
                table,
            ),
        })
        .collect()
}

/// Outcome of [`poisson_ideal_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealSummary {
    pub surface: Surface,
    pub coordinates_checked: usize,
    /// Whether `{t_j, P} = {t_j, Q} = 0` for every coordinate.
    pub p_and_q_are_casimirs: bool,
}

/// Checks that bracketing with each coordinate preserves the ideal of the
/// defining relation.
pub fn poisson_ideal_check(table: &BracketTable) -> Result<IdealSummary, PoissonError> {
    let relation = defining_relation();
    let p = FreePolynomial::from_base(big_p().clone());
    let q = FreePolynomial::from_base(big_q().clone());
    let mut p_and_q_are_casimirs = true;
    for coordinate in Coordinate::ALL {
        let t = FreePolynomial::var(coordinate);
        let residual = bracket_free(&t, relation, table);
        if !residual.is_zero() {
            return Err(PoissonError::Failure {
                coordinate,
                residual,
            });
        }
        p_and_q_are_casimirs &=
            bracket_free(&t, &p, table).is_zero() && bracket_free(&t, &q, table).is_zero();
    }
    Ok(IdealSummary {
        surface: table.structure().surface,
        coordinates_checked: Coordinate::ALL.len(),
        p_and_q_are_casimirs,
    })
}

/// Coordinates whose bracket with every coordinate vanishes.
pub fn casimirs(table: &BracketTable) -> Vec<Coordinate> {
    Coordinate::ALL
        .into_iter()
        .filter(|&i| {
            Coordinate::ALL
                .into_iter()
                .all(|j| bracket(&NormalForm::var(i), &NormalForm::var(j), table).is_zero())
        })
        .collect()
}

/// One operator-factored summand `op (coefficient d_i ∧ d_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredTerm {
    pub operator: GroupRingOperator,
    pub pair: (Coordinate, Coordinate),
    pub coefficient: NormalForm,
}

/// The bi-vector written with group-ring operators, at positive orientation.
pub fn factored_bivector(surface: Surface) -> Vec<FactoredTerm> {
    let table = positive_table(surface);
    let term = |operator: GroupRingOperator, i: i64, j: i64| FactoredTerm {
        operator,
        pair: (c(i), c(j)),
        coefficient: table.get(c(i), c(j)),
    };
    match surface {
        Surface::Trinion => {
            let one_minus_i =
                GroupRingOperator::identity().sub(&GroupRingOperator::element(DihedralElement::I));
            vec![
                term(GroupRingOperator::identity(), 4, -4),
                term(one_minus_i, 4, 5),
            ]
        }
        Surface::Torus => {
            let half = Rational::new(1.into(), 2.into());
            let s1 = GroupRingOperator::sigma1();
            let s2 = GroupRingOperator::sigma2();
            let s12 = s1.product(&s2).scale(&half);
            vec![
                term(s1, 1, 2),
                term(s2, 3, 4),
                term(s12.clone(), 1, 3),
                term(s12, 1, -3),
            ]
        }
    }
}

/// Expands factored terms into a coefficient table, letting each element act
/// on both the coefficient and the wedge indices.
pub fn expand_factored(
    terms: &[FactoredTerm],
) -> Result<BTreeMap<(Coordinate, Coordinate), NormalForm>, PoissonError> {
    let mut out: BTreeMap<(Coordinate, Coordinate), NormalForm> = BTreeMap::new();
    for term in terms {
        for (g, weight) in term.operator.terms() {
            let image = |x: Coordinate| {
                g.action().image(x).ok_or(PoissonError::NonCoordinateImage {
                    element: g,
                    coordinate: x,
                })
            };
            let (i, j) = (image(term.pair.0)?, image(term.pair.1)?);
            let (a, b, swapped) = ordered(i, j);
            let mut value = g.apply(&term.coefficient).scale(weight);
            if swapped {
                value = -value;
            }
            let slot = out.entry((a, b)).or_default();
            *slot = &*slot + &value;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct BivectorEntry {
    pub i: Coordinate,
    pub j: Coordinate,
    pub text: String,
    pub coefficient: NormalForm,
}

impl BivectorEntry {
    fn new(i: Coordinate, j: Coordinate, coefficient: NormalForm) -> Self {
        Self {
            i,
            j,
            text: coefficient.to_string(),
            coefficient,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactoredEntry {
    pub operator: String,
    pub i: Coordinate,
    pub j: Coordinate,
    pub text: String,
    pub coefficient: NormalForm,
}

#[derive(Clone, Debug, Serialize)]
pub struct BivectorReport {
    pub surface: Surface,
    pub orientation: Orientation,
    pub raw: Vec<BivectorEntry>,
    pub factored: Vec<FactoredEntry>,
    pub factored_matches_raw: bool,
}

/// The bi-vector in raw and operator-factored form; errors if the factored
/// form does not expand to the raw table.
pub fn bivector_report(s: SurfaceStructure) -> Result<BivectorReport, PoissonError> {
    let table = bracket_table(s);
    let sign = s.orientation.rational();
    let factored: Vec<FactoredTerm> = factored_bivector(s.surface)
        .into_iter()
        .map(|t| FactoredTerm {
            coefficient: t.coefficient.scale(&sign),
            ..t
        })
        .collect();
    let expanded = expand_factored(&factored)?;
    for ((i, j), expected) in table.entries() {
        let got = expanded.get(&(i, j)).cloned().unwrap_or_default();
        if got != *expected {
            return Err(PoissonError::Mismatch {
                pair: (i, j),
                expected: expected.clone(),
                got,
            });
        }
    }
    if let Some(((i, j), got)) = expanded.iter().find(|(k, _)| table.get(k.0, k.1).is_zero()) {
        return Err(PoissonError::Mismatch {
            pair: (*i, *j),
            expected: NormalForm::zero(),
            got: got.clone(),
        });
    }
    Ok(BivectorReport {
        surface: s.surface,
        orientation: s.orientation,
        raw: table
            .entries()
            .map(|((i, j), v)| BivectorEntry::new(i, j, v.clone()))
            .collect(),
        factored: factored
            .into_iter()
            .map(|t| FactoredEntry {
                operator: t.operator.to_string(),
                i: t.pair.0,
                j: t.pair.1,
                text: t.coefficient.to_string(),
                coefficient: t.coefficient,
            })
            .collect(),
        factored_matches_raw: true,
    })
}

/// `{target} = sign * symmetry({source})` between torus table entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryRelation {
    pub target: (Coordinate, Coordinate),
    pub sign: i64,
    pub symmetry: Symmetry,
    pub source: (Coordinate, Coordinate),
}

impl SymmetryRelation {
    /// Whether the relation holds exactly in `table`.
    pub fn holds(&self, table: &BracketTable) -> bool {
        let source = table.get(self.source.0, self.source.1);
        let image = self
            .symmetry
            .apply(&source)
            .scale(&Rational::from_integer(self.sign.into()));
        image == table.get(self.target.0, self.target.1)
    }
}

impl fmt::Display for SymmetryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(
            f,
            "{{{}, {}}} = {sign}{}{{{}, {}}}",
            self.target.0, self.target.1, self.symmetry, self.source.0, self.source.1
        )
    }
}

/// The 20 dihedral relations among torus entries followed by the two Nielsen
/// relations.
pub fn torus_symmetry_relations() -> Vec<SymmetryRelation> {
    use DihedralElement::*;
    let rel =
        |ti: i64, tj: i64, sign: i64, symmetry: Symmetry, si: i64, sj: i64| SymmetryRelation {
            target: (c(ti), c(tj)),
            sign,
            symmetry,
            source: (c(si), c(sj)),
        };
    let d = Symmetry::Dihedral;
    let mut out = vec![
        rel(-1, 2, -1, d(I1), 1, 2),
        rel(1, -2, -1, d(I2), 1, 2),
        rel(-1, -2, 1, d(I), 1, 2),
    ];
    for (source, family) in [
        (
            3,
            [
                (-1, -3),
                (1, 4),
                (-1, -4),
                (2, 3),
                (-2, -3),
                (2, -4),
                (-2, 4),
            ],
        ),
        (
            -3,
            [
                (-1, 3),
                (1, -4),
                (-1, 4),
                (2, -3),
                (-2, 3),
                (2, 4),
                (-2, -4),
            ],
        ),
    ] {
        let ops = [
            (1, I),
            (-1, I2),
            (-1, I1),
            (-1, T),
            (-1, IT),
            (1, I1T),
            (1, I2T),
        ];
        for ((ti, tj), (sign, g)) in family.into_iter().zip(ops) {
            out.push(rel(ti, tj, sign, d(g), 1, source));
        }
    }
    out.push(rel(-3, -4, 1, d(I), 3, 4));
    out.push(rel(3, -4, -1, d(T), 3, 4));
    out.push(rel(-3, 4, -1, d(IT), 3, 4));
    out.push(rel(1, 3, 1, Symmetry::Nielsen(NielsenMove::N2), 1, 2));
    out.push(rel(
        1,
        -3,
        -1,
        Symmetry::Nielsen(NielsenMove::NMinus2),
        1,
        2,
    ));
    out
}

/// Expansions of `{t±4, P}` and `{t±4, Q}` as written out by hand, for
/// comparison with the Leibniz-rule values.
#[derive(Clone, Debug)]
pub struct TrinionTranscriptions {
    pub t4_p: NormalForm,
    pub t4_q: NormalForm,
    pub tm4_p: NormalForm,
    pub tm4_q: NormalForm,
}

const T4_Q_FACTOR: &str = "-6*t4 + 3*t-4^2 - 3*t-1*t-3 - 3*t2*t3 + 3*t1*t-2 + t1*t-1*t4 \
    + t2*t-2*t4 + t3*t-3*t4 + t-1^2*t-2 + t1^2*t-3 + t2*t-3^2 + t1*t2^2 + t3*t-2^2 \
    + t-1*t3^2 + t-1^2*t2^2 - t1*t-1*t2*t3 - t-3*t-2*t-1*t2 - t1*t2*t-2^2 \
    - t-2*t-1*t1^2 + 2*t1*t3*t-4 + 2*t-2*t-3*t-4 - 4*t-1*t2*t-4";

const TM4_Q_FACTOR: &str = "-6*t-4 + 3*t4^2 - 3*t1*t3 - 3*t-2*t-3 + 3*t-1*t2 + t1*t-1*t-4 \
    + t2*t-2*t-4 + t3*t-3*t-4 + t1^2*t2 + t-1^2*t3 + t-2*t3^2 + t-1*t-2^2 + t-3*t2^2 \
    + t1*t-3^2 + t1^2*t-2^2 - t1*t-1*t-2*t-3 - t3*t-2*t1*t2 - t-1*t-2*t2^2 \
    - t2*t1*t-1^2 + 2*t-1*t-3*t4 + 2*t2*t3*t4 - 4*t1*t-2*t4";

pub fn trinion_transcriptions() -> TrinionTranscriptions {
    let k = p_minus_2t5();
    TrinionTranscriptions {
        t4_p: &k * &nf("t4 - t1*t-2"),
        t4_q: &k * &nf(T4_Q_FACTOR),
        tm4_p: -(&k * &nf("t-4 - t-1*t2")),
        tm4_q: -(&k * &nf(TM4_Q_FACTOR)),
    }
}

/// `d(Q - t5 P)/d t_c`, reduced.
pub fn relation_partial(c: Coordinate) -> NormalForm {
    let t5 = FreePolynomial::var(Coordinate::T5);
    let f = FreePolynomial::from_base(big_q().clone())
        - t5 * FreePolynomial::from_base(big_p().clone());
    reduce(&f.partial(c))
}
