//! The dihedral group `D4` acting on coordinates, its group ring, and the
//! Nielsen moves used to transport bracket entries.
//!
//! Each element is determined by its action on `(x1, x2)`; the action on
//! coordinates permutes the eight base coordinates and either fixes `t5` or
//! sends it to `t-5 = P - t5`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::numeric::{self, NumericError, RepresentationSample, ToleranceConfig};
use crate::polyring::{
    format_rational, reduce, Coordinate, FreePolynomial, NormalForm, Rational, Substitution,
};
use crate::relations::big_p;
use crate::words::{trace_of, Word, WordError};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub enum DihedralElement {
    #[serde(rename = "e")]
    Identity,
    /// Swaps `x1` and `x2`.
    #[serde(rename = "t")]
    T,
    /// Inverts `x1`.
    #[serde(rename = "i1")]
    I1,
    /// Inverts `x2`.
    #[serde(rename = "i2")]
    I2,
    /// Inverts both generators.
    #[serde(rename = "i")]
    I,
    #[serde(rename = "i1t")]
    I1T,
    #[serde(rename = "i2t")]
    I2T,
    #[serde(rename = "it")]
    IT,
}

/// How a dihedral element moves coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoordinateAction {
    images: [Coordinate; 8],
    flips_t5: bool,
}

impl CoordinateAction {
    fn identity() -> Self {
        Self {
            images: Coordinate::BASE,
            flips_t5: false,
        }
    }

    fn from_pairs(pairs: &[(i64, i64)], flips_t5: bool) -> Self {
        let mut images = Coordinate::BASE;
        for &(a, b) in pairs {
            let (a, b) = (Coordinate::new(a).unwrap(), Coordinate::new(b).unwrap());
            images[a.slot()] = b;
            images[b.slot()] = a;
        }
        Self { images, flips_t5 }
    }

    /// `self ∘ other`.
    fn then_after(&self, other: &Self) -> Self {
        Self {
            images: other.images.map(|c| self.images[c.slot()]),
            flips_t5: self.flips_t5 ^ other.flips_t5,
        }
    }

    /// Image of a base coordinate; `None` for `t5` when it is sent to `t-5`.
    pub fn image(&self, c: Coordinate) -> Option<Coordinate> {
        if c.is_base() {
            Some(self.images[c.slot()])
        } else if self.flips_t5 {
            None
        } else {
            Some(Coordinate::T5)
        }
    }

    pub fn flips_t5(&self) -> bool {
        self.flips_t5
    }

    /// The substitution realizing this action on the free ring.
    pub fn substitution(&self) -> Substitution {
        let mut sub = Substitution::identity();
        for c in Coordinate::BASE {
            sub.set(c, FreePolynomial::var(self.images[c.slot()]));
        }
        if self.flips_t5 {
            sub.set(
                Coordinate::T5,
                FreePolynomial::from_base(big_p().clone()) - FreePolynomial::var(Coordinate::T5),
            );
        }
        sub
    }
}

struct ElementData {
    action: CoordinateAction,
    words: (Word, Word),
    substitution: Substitution,
}

fn generator_t() -> (CoordinateAction, (Word, Word)) {
    (
        CoordinateAction::from_pairs(&[(1, 2), (-1, -2), (4, -4)], true),
        (Word::from_indices(&[2]), Word::from_indices(&[1])),
    )
}

fn generator_i1() -> (CoordinateAction, (Word, Word)) {
    (
        CoordinateAction::from_pairs(&[(1, -1), (3, -4), (4, -3)], true),
        (Word::from_indices(&[-1]), Word::from_indices(&[2])),
    )
}

fn compose_data(
    g: &(CoordinateAction, (Word, Word)),
    h: &(CoordinateAction, (Word, Word)),
) -> (CoordinateAction, (Word, Word)) {
    let (g1, g2) = &g.1;
    let (h1, h2) = &h.1;
    (
        g.0.then_after(&h.0),
        (h1.substitute(g1, g2), h2.substitute(g1, g2)),
    )
}

fn element_table() -> &'static [ElementData; 8] {
    static CELL: OnceLock<[ElementData; 8]> = OnceLock::new();
    CELL.get_or_init(|| {
        let e = (
            CoordinateAction::identity(),
            (Word::from_indices(&[1]), Word::from_indices(&[2])),
        );
        let t = generator_t();
        let i1 = generator_i1();
        let i2 = compose_data(&compose_data(&t, &i1), &t);
        let i = compose_data(&compose_data(&i1, &t), &compose_data(&i1, &t));
        let i1t = compose_data(&i1, &t);
        let i2t = compose_data(&i2, &t);
        let it = compose_data(&i, &t);
        [e, t, i1, i2, i, i1t, i2t, it].map(|(action, words)| ElementData {
            substitution: action.substitution(),
            action,
            words,
        })
    })
}

impl DihedralElement {
    pub const ALL: [Self; 8] = [
        Self::Identity,
        Self::T,
        Self::I1,
        Self::I2,
        Self::I,
        Self::I1T,
        Self::I2T,
        Self::IT,
    ];

    fn position(self) -> usize {
        Self::ALL.iter().position(|&g| g == self).unwrap()
    }

    fn data(self) -> &'static ElementData {
        &element_table()[self.position()]
    }

    pub fn name(self) -> &'static str {
        ["e", "t", "i1", "i2", "i", "i1t", "i2t", "it"][self.position()]
    }

    pub fn action(self) -> &'static CoordinateAction {
        &self.data().action
    }

    /// Images of `x1` and `x2`.
    pub fn word_images(self) -> (&'static Word, &'static Word) {
        let (a, b) = &self.data().words;
        (a, b)
    }

    pub fn apply_to_word(self, w: &Word) -> Word {
        let (a, b) = self.word_images();
        w.substitute(a, b)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(self, other: Self) -> Self {
        let target = self.action().then_after(other.action());
        Self::ALL
            .into_iter()
            .find(|g| *g.action() == target)
            .expect("D4 is closed under composition")
    }

    pub fn inverse(self) -> Self {
        Self::ALL
            .into_iter()
            .find(|&g| self.compose(g) == Self::Identity)
            .unwrap()
    }

    pub fn order(self) -> usize {
        let mut g = self;
        let mut n = 1;
        while g != Self::Identity {
            g = self.compose(g);
            n += 1;
        }
        n
    }

    /// Applies the element to a ring element.
    pub fn apply(self, x: &NormalForm) -> NormalForm {
        if self == Self::Identity {
            return x.clone();
        }
        reduce(&x.lift().substitute(&self.data().substitution))
    }
}

/// Function form of [`DihedralElement::apply`].
pub fn apply_dihedral(g: DihedralElement, x: &NormalForm) -> NormalForm {
    g.apply(x)
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown symmetry {0:?}; expected one of e, t, i1, i2, i, i1t, i2t, it, n2, n-2")]
pub struct UnknownSymmetry(pub String);

impl FromStr for DihedralElement {
    type Err = UnknownSymmetry;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim();
        Self::ALL
            .into_iter()
            .find(|g| g.name() == key)
            .ok_or_else(|| UnknownSymmetry(s.to_string()))
    }
}

/// A formal rational combination of dihedral elements.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupRingOperator {
    terms: BTreeMap<DihedralElement, Rational>,
}

impl GroupRingOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::element(DihedralElement::Identity)
    }

    pub fn element(g: DihedralElement) -> Self {
        Self::from_terms([(g, Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (DihedralElement, Rational)>>(terms: I) -> Self {
        let mut op = Self::zero();
        for (g, c) in terms {
            op.add_term(g, c);
        }
        op
    }

    fn from_signed(terms: &[(DihedralElement, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(g, c)| (g, Rational::from_integer(c.into()))),
        )
    }

    fn add_term(&mut self, g: DihedralElement, c: Rational) {
        let entry = self.terms.entry(g).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&g);
        }
    }

    /// `1 + i - i1 - i2`.
    pub fn sigma1() -> Self {
        use DihedralElement::*;
        Self::from_signed(&[(Identity, 1), (I, 1), (I1, -1), (I2, -1)])
    }

    /// `1 + i - t - it`.
    pub fn sigma2() -> Self {
        use DihedralElement::*;
        Self::from_signed(&[(Identity, 1), (I, 1), (T, -1), (IT, -1)])
    }

    /// The sum of all eight elements.
    pub fn s_d() -> Self {
        Self::from_terms(DihedralElement::ALL.map(|g| (g, Rational::one())))
    }

    pub fn terms(&self) -> impl Iterator<Item = (DihedralElement, &Rational)> {
        self.terms.iter().map(|(g, c)| (*g, c))
    }

    pub fn coefficient(&self, g: DihedralElement) -> Rational {
        self.terms.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms().map(|(g, x)| (g, x * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms()
                .chain(other.terms())
                .map(|(g, c)| (g, c.clone())),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Group-ring product; `(self * other)(x) = self(other(x))`.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (g, a) in self.terms() {
            for (h, b) in other.terms() {
                out.add_term(g.compose(h), a * b);
            }
        }
        out
    }

    pub fn apply(&self, x: &NormalForm) -> NormalForm {
        self.terms()
            .fold(NormalForm::zero(), |acc, (g, c)| acc + g.apply(x).scale(c))
    }
}

/// Function form of [`GroupRingOperator::apply`].
pub fn apply_operator(op: &GroupRingOperator, x: &NormalForm) -> NormalForm {
    op.apply(x)
}

impl fmt::Display for GroupRingOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (g, c)) in self.terms().enumerate() {
            let neg = c < &Rational::zero();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = if neg { -c } else { c.clone() };
            let label = if g == DihedralElement::Identity {
                "1"
            } else {
                g.name()
            };
            if mag.is_one() {
                f.write_str(label)?;
            } else {
                write!(f, "{}*{label}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

/// Nielsen moves fixing `x1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum NielsenMove {
    /// `x2 -> x1 x2`.
    #[serde(rename = "n2")]
    N2,
    /// `x2 -> x1^-1 x2^-1`.
    #[serde(rename = "n-2")]
    NMinus2,
}

impl NielsenMove {
    pub const ALL: [Self; 2] = [Self::N2, Self::NMinus2];

    pub fn name(self) -> &'static str {
        match self {
            Self::N2 => "n2",
            Self::NMinus2 => "n-2",
        }
    }

    pub fn word_images(self) -> (Word, Word) {
        let x2 = match self {
            Self::N2 => Word::from_indices(&[1, 2]),
            Self::NMinus2 => Word::from_indices(&[-1, -2]),
        };
        (Word::from_indices(&[1]), x2)
    }

    pub fn apply_to_word(self, w: &Word) -> Word {
        let (a, b) = self.word_images();
        w.substitute(&a, &b)
    }

    /// Image of each coordinate, derived by tracing the transformed
    /// generator words.
    pub fn images(self) -> &'static [NormalForm; 9] {
        static CELL: OnceLock<[[NormalForm; 9]; 2]> = OnceLock::new();
        let table = CELL.get_or_init(|| {
            Self::ALL.map(|mv| {
                Coordinate::ALL.map(|c| {
                    trace_of(&mv.apply_to_word(&Word::for_coordinate(c)))
                        .expect("Nielsen images of generator words reduce")
                })
            })
        });
        &table[self as usize]
    }

    pub fn substitution(self) -> Substitution {
        let mut sub = Substitution::identity();
        for (c, img) in Coordinate::ALL.into_iter().zip(self.images()) {
            sub.set(c, img.lift());
        }
        sub
    }

    pub fn apply(self, x: &NormalForm) -> NormalForm {
        reduce(&x.lift().substitute(&self.substitution()))
    }
}

impl fmt::Display for NielsenMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NielsenMove {
    type Err = UnknownSymmetry;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s.trim())
            .ok_or_else(|| UnknownSymmetry(s.to_string()))
    }
}

/// Either kind of coordinate transformation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(untagged)]
pub enum Symmetry {
    Dihedral(DihedralElement),
    Nielsen(NielsenMove),
}

impl Symmetry {
    pub fn all() -> Vec<Self> {
        DihedralElement::ALL
            .into_iter()
            .map(Self::Dihedral)
            .chain(NielsenMove::ALL.into_iter().map(Self::Nielsen))
            .collect()
    }

    pub fn apply(self, x: &NormalForm) -> NormalForm {
        match self {
            Self::Dihedral(g) => g.apply(x),
            Self::Nielsen(m) => m.apply(x),
        }
    }

    pub fn apply_to_word(self, w: &Word) -> Word {
        match self {
            Self::Dihedral(g) => g.apply_to_word(w),
            Self::Nielsen(m) => m.apply_to_word(w),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Dihedral(g) => g.fmt(f),
            Self::Nielsen(m) => m.fmt(f),
        }
    }
}

impl FromStr for Symmetry {
    type Err = UnknownSymmetry;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<DihedralElement>()
            .map(Self::Dihedral)
            .or_else(|_| s.parse::<NielsenMove>().map(Self::Nielsen))
    }
}

/// One row of the certification table: a symmetry acting on a coordinate.
#[derive(Clone, Debug, Serialize)]
pub struct CertificationRow {
    pub symmetry: String,
    pub coordinate: String,
    /// The action-table image, as text.
    pub image: String,
    /// Whether the trace of the transformed generator word reduces to the
    /// same ring element.
    pub symbolic_match: Option<bool>,
    pub max_residual: f64,
    pub pass: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CertificationError {
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Checks every action-table entry: symbolically against the trace of the
/// transformed generator word, and numerically on random `SL3(C)` pairs.
pub fn certify(cfg: &ToleranceConfig) -> Result<Vec<CertificationRow>, CertificationError> {
    let samples = numeric::draw_samples(cfg)?;
    let mut rows = Vec::new();
    for s in Symmetry::all() {
        for c in Coordinate::ALL {
            let image = s.apply(&NormalForm::var(c));
            let word = s.apply_to_word(&Word::for_coordinate(c));
            let symbolic_match = trace_of(&word).ok().map(|v| v == image);
            let max_residual = max_residual_over(&samples, |r| {
                (r.trace_of_word(&word), image.eval(r.coords()))
            });
            let numeric_ok = max_residual < cfg.relative_tol;
            rows.push(CertificationRow {
                symmetry: s.to_string(),
                coordinate: c.to_string(),
                image: image.to_string(),
                symbolic_match,
                max_residual,
                pass: numeric_ok && symbolic_match != Some(false),
            });
        }
    }
    Ok(rows)
}

fn max_residual_over(
    samples: &[RepresentationSample],
    f: impl Fn(&RepresentationSample) -> (num_complex::Complex64, num_complex::Complex64) + Sync,
) -> f64 {
    use rayon::prelude::*;
    samples
        .par_iter()
        .map(|r| {
            let (l, rhs) = f(r);
            numeric::residual(l, rhs)
        })
        .reduce(|| 0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use DihedralElement::*;

    fn t(i: i64) -> NormalForm {
        NormalForm::var(Coordinate::new(i).unwrap())
    }

    #[test]
    fn derived_tables_match_literal_tables() {
        let i2 = CoordinateAction::from_pairs(&[(2, -2), (3, 4), (-3, -4)], true);
        let i = CoordinateAction::from_pairs(&[(1, -1), (2, -2), (3, -3), (4, -4)], false);
        assert_eq!(*I2.action(), i2);
        assert_eq!(*I.action(), i);
    }

    #[test]
    fn word_images() {
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert_eq!(T.word_images(), (&w("x2"), &w("x1")));
        assert_eq!(I1.word_images(), (&w("x1^-1"), &w("x2")));
        assert_eq!(I2.word_images(), (&w("x1"), &w("x2^-1")));
        assert_eq!(I.word_images(), (&w("x1^-1"), &w("x2^-1")));
        assert_eq!(I1T.word_images(), (&w("x2"), &w("x1^-1")));
    }

    #[test]
    fn group_structure() {
        assert_eq!(I1.compose(T).compose(I1.compose(T)), I);
        assert_eq!(T.compose(I1).compose(T), I2);
        assert_eq!(I1T.order(), 4);
        assert_eq!(T.order(), 2);
        for g in DihedralElement::ALL {
            assert_eq!(g.compose(g.inverse()), Identity);
        }
    }

    #[test]
    fn action_is_a_homomorphism() {
        let x = t(4) * t(5) + t(1) * t(-3);
        for g in DihedralElement::ALL {
            for h in DihedralElement::ALL {
                assert_eq!(g.apply(&h.apply(&x)), g.compose(h).apply(&x), "{g} {h}");
            }
        }
    }

    #[test]
    fn t5_images() {
        assert_eq!(T.apply(&t(5)), NormalForm::t_minus_5());
        assert_eq!(I.apply(&t(5)), t(5));
        assert_eq!(I1T.apply(&t(5)), t(5));
    }

    #[test]
    fn p_and_q_are_invariant() {
        let p = NormalForm::from_base(big_p().clone());
        let q = NormalForm::from_base(crate::relations::big_q().clone());
        for g in DihedralElement::ALL {
            assert_eq!(g.apply(&p), p);
            assert_eq!(g.apply(&q), q);
        }
    }

    #[test]
    fn operator_product_expansion() {
        let half = Rational::new(1.into(), 2.into());
        let lhs = GroupRingOperator::sigma1()
            .product(&GroupRingOperator::sigma2())
            .scale(&half);
        let rhs = GroupRingOperator::from_signed(&[
            (Identity, 1),
            (I, 1),
            (I1, -1),
            (I2, -1),
            (T, -1),
            (IT, -1),
            (I1T, 1),
            (I2T, 1),
        ]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetrized_little_p_and_q() {
        let sd = GroupRingOperator::s_d();
        let p = NormalForm::from_base(crate::relations::little_p().clone());
        let q = NormalForm::from_base(crate::relations::little_q().clone());
        assert_eq!(
            sd.apply(&p) - NormalForm::from_integer(3),
            NormalForm::from_base(big_p().clone())
        );
        assert_eq!(
            sd.apply(&q) + NormalForm::from_integer(9),
            NormalForm::from_base(crate::relations::big_q().clone())
        );
    }

    #[test]
    fn nielsen_images() {
        let n2 = NielsenMove::N2.images();
        assert_eq!(n2[Coordinate::T2.slot()], t(3));
        assert_eq!(
            n2[Coordinate::T3.slot()],
            t(1) * t(3) - t(-1) * t(2) + t(-4)
        );
        assert_eq!(n2[Coordinate::T4.slot()], t(-2));
        assert_eq!(n2[Coordinate::T5.slot()], t(5));
        let nm2 = NielsenMove::NMinus2.images();
        assert_eq!(nm2[Coordinate::T2.slot()], t(-3));
        assert_eq!(
            nm2[Coordinate::TM4.slot()],
            t(-1) * t(-3) - t(1) * t(-2) + t(4)
        );
        assert_eq!(nm2[Coordinate::T5.slot()], NormalForm::t_minus_5());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("i1t".parse::<DihedralElement>().unwrap(), I1T);
        assert!("x".parse::<DihedralElement>().is_err());
        assert_eq!(
            "n-2".parse::<Symmetry>().unwrap(),
            Symmetry::Nielsen(NielsenMove::NMinus2)
        );
        assert_eq!(GroupRingOperator::sigma1().to_string(), "1 - i1 - i2 + i");
    }
}
