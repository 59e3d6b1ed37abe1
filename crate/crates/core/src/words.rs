//! Words in the free group `F2 = <x1, x2>` and their traces.
//!
//! [`trace_of`] rewrites `tr(w)` into a polynomial in the nine trace
//! coordinates using a bounded rule set:
//!
//! 1. free and cyclic reduction (traces are conjugation invariant);
//! 2. lookup of the empty word and the ten generator words (`t-5 = P - t5`);
//! 3. Cayley-Hamilton power reduction on a repeated letter `X`,
//!    `tr(X^2 W) = tr(X) tr(XW) - tr(X^-1) tr(W) + tr(X^-1 W)`;
//! 4. the mixed length-4 identity for `tr(x1 x2 x1 x2^-1)` and its images
//!    under the dihedral symmetry group.
//!
//! Words outside the reach of these rules are reported as
//! [`WordError::Irreducible`]; callers fall back to numeric evaluation.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::polyring::{BasePolynomial, Coordinate, NormalForm};
use crate::symmetry::DihedralElement;

/// `x1`, `x1^-1`, `x2` or `x2^-1`, stored as the signed generator index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Letter(i8);

impl Letter {
    pub const X1: Self = Self(1);
    pub const X1_INV: Self = Self(-1);
    pub const X2: Self = Self(2);
    pub const X2_INV: Self = Self(-2);

    pub fn new(index: i8) -> Option<Self> {
        matches!(index, 1 | -1 | 2 | -2).then_some(Self(index))
    }

    pub fn index(self) -> i8 {
        self.0
    }

    pub fn inverse(self) -> Self {
        Self(-self.0)
    }

    /// `t1`, `t-1`, `t2` or `t-2`: the trace of this letter.
    pub fn trace_coordinate(self) -> Coordinate {
        Coordinate::new(self.0.into()).expect("letters index base coordinates")
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 > 0 {
            write!(f, "x{}", self.0)
        } else {
            write!(f, "x{}^-1", -self.0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("unrecognized word token {token:?} at byte {position}")]
    BadToken { token: String, position: usize },
    #[error("IRREDUCIBLE: no rewrite rule reduces tr({0})")]
    Irreducible(Word),
}

/// A word in `x1^{±1}, x2^{±1}`; not necessarily reduced.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    /// Builds a word from signed indices; panics on anything but ±1, ±2.
    pub fn from_indices(indices: &[i8]) -> Self {
        Self(
            indices
                .iter()
                .map(|&i| Letter::new(i).expect("letter index must be ±1 or ±2"))
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self(out)
    }

    /// Free reduction followed by cancellation of inverse first/last letters.
    pub fn cyclic_reduce(&self) -> Self {
        let w = self.free_reduce().0;
        let (mut lo, mut hi) = (0, w.len());
        while hi - lo >= 2 && w[lo] == w[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Self(w[lo..hi].to_vec())
    }

    pub fn invert(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Plain concatenation, without reduction.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn rotate(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let n = v.len();
            v.rotate_left(k % n);
        }
        Self(v)
    }

    /// The lexicographically least rotation; equal for conjugate cyclically
    /// reduced words.
    pub fn canonical_rotation(&self) -> Self {
        (0..self.len().max(1))
            .map(|k| self.rotate(k))
            .min()
            .unwrap_or_default()
    }

    /// Image under the endomorphism `x1 -> img1`, `x2 -> img2`, freely reduced.
    pub fn substitute(&self, img1: &Word, img2: &Word) -> Self {
        let mut out = Word::empty();
        for &l in &self.0 {
            let piece = match l.0 {
                1 => img1.clone(),
                -1 => img1.invert(),
                2 => img2.clone(),
                _ => img2.invert(),
            };
            out = out.concat(&piece);
        }
        out.free_reduce()
    }

    /// The word whose trace is the coordinate `c`.
    pub fn for_coordinate(c: Coordinate) -> Self {
        let letters: &[i8] = match c.index() {
            1 => &[1],
            -1 => &[-1],
            2 => &[2],
            -2 => &[-2],
            3 => &[1, 2],
            -3 => &[-1, -2],
            4 => &[1, -2],
            -4 => &[-1, 2],
            _ => &[1, 2, -1, -2],
        };
        Self::from_indices(letters)
    }

    /// `x2 x1 x2^-1 x1^-1`, whose trace is `t-5`.
    pub fn inverse_commutator() -> Self {
        Self::from_indices(&[2, 1, -2, -1])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Tokens `x1`, `x2`, `x1^-1`, `x2^-1`, with `X1` and `x1'` as inverse
    /// aliases; whitespace between tokens is optional. `1` or an empty
    /// string is the identity.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let mut letters = Vec::new();
        let mut i = 0;
        if s.trim() == "1" {
            return Ok(Self::empty());
        }
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            let bad = |end: usize| WordError::BadToken {
                token: s[start..end.min(s.len())].to_string(),
                position: start,
            };
            let inverse_alias = match bytes[i] {
                b'x' => false,
                b'X' => true,
                _ => return Err(bad(start + 1)),
            };
            i += 1;
            let generator = match bytes.get(i) {
                Some(b'1') => 1,
                Some(b'2') => 2,
                _ => return Err(bad(i + 1)),
            };
            i += 1;
            let mut inverse = inverse_alias;
            if s[i..].starts_with("^-1") {
                inverse = !inverse;
                i += 3;
            } else if s[i..].starts_with('\'') {
                inverse = !inverse;
                i += 1;
            }
            if bytes.get(i).is_some_and(|b| b.is_ascii_digit()) {
                return Err(bad(i + 1));
            }
            letters.push(Letter(if inverse { -generator } else { generator }));
        }
        Ok(Self(letters))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RewriteRule {
    FreeReduction,
    CyclicReduction,
    /// Lookup of the empty word or a length-1/2 generator word.
    Generator,
    /// Lookup of `t5` or `t-5`.
    Commutator,
    PowerReduction,
    MixedIdentity,
}

/// One rule application, recorded with the termination measure of its input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: RewriteRule,
    pub word: Word,
    pub measure: (usize, usize),
}

/// `(length, number of cyclically adjacent repeated letters)`.
///
/// Every rewrite's outputs have a strictly smaller measure than its input.
pub fn termination_measure(w: &Word) -> (usize, usize) {
    let n = w.len();
    let squares = if n < 2 {
        0
    } else {
        (0..n).filter(|&i| w.0[i] == w.0[(i + 1) % n]).count()
    };
    (n, squares)
}

fn lookup_table() -> &'static HashMap<Word, (NormalForm, RewriteRule)> {
    static CELL: OnceLock<HashMap<Word, (NormalForm, RewriteRule)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut table = HashMap::new();
        for c in Coordinate::ALL {
            let rule = if c.is_base() {
                RewriteRule::Generator
            } else {
                RewriteRule::Commutator
            };
            table.insert(
                Word::for_coordinate(c).canonical_rotation(),
                (NormalForm::var(c), rule),
            );
        }
        table.insert(
            Word::inverse_commutator().canonical_rotation(),
            (NormalForm::t_minus_5(), RewriteRule::Commutator),
        );
        table
    })
}

/// `tr(x1 x2 x1 x2^-1) = t-1 + t3 t4 + t-2 t-4 + t2 t-3 - t-1 t2 t-2`.
pub fn mixed_identity_seed() -> (Word, NormalForm) {
    let t = |i: i64| BasePolynomial::var(Coordinate::new(i).unwrap());
    let poly = t(-1) + t(3) * t(4) + t(-2) * t(-4) + t(2) * t(-3) - t(-1) * t(2) * t(-2);
    (
        Word::from_indices(&[1, 2, 1, -2]),
        NormalForm::from_base(poly),
    )
}

/// The seed identity transported by every dihedral element, keyed by the
/// canonical rotation of the transformed word.
pub fn mixed_identity_table() -> &'static HashMap<Word, NormalForm> {
    static CELL: OnceLock<HashMap<Word, NormalForm>> = OnceLock::new();
    CELL.get_or_init(|| {
        let (word, poly) = mixed_identity_seed();
        let mut table = HashMap::new();
        for g in DihedralElement::ALL {
            let key = g.apply_to_word(&word).cyclic_reduce().canonical_rotation();
            table.entry(key).or_insert_with(|| g.apply(&poly));
        }
        table
    })
}

struct TraceReducer {
    memo: HashMap<Word, NormalForm>,
    log: Option<Vec<RewriteStep>>,
}

impl TraceReducer {
    fn record(&mut self, rule: RewriteRule, word: &Word) {
        if let Some(log) = &mut self.log {
            log.push(RewriteStep {
                rule,
                word: word.clone(),
                measure: termination_measure(word),
            });
        }
    }

    fn trace(&mut self, w: &Word) -> Result<NormalForm, WordError> {
        let free = w.free_reduce();
        if free != *w {
            self.record(RewriteRule::FreeReduction, w);
        }
        let r = free.cyclic_reduce();
        if r != free {
            self.record(RewriteRule::CyclicReduction, &free);
        }
        if r.is_empty() {
            return Ok(NormalForm::from_integer(3));
        }
        let key = r.canonical_rotation();
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let value = self.rewrite(&r, &key)?;
        self.memo.insert(key, value.clone());
        Ok(value)
    }

    fn rewrite(&mut self, r: &Word, key: &Word) -> Result<NormalForm, WordError> {
        if let Some((v, rule)) = lookup_table().get(key) {
            self.record(*rule, r);
            return Ok(v.clone());
        }
        let n = r.len();
        if let Some(i) = (0..n).find(|&i| r.0[i] == r.0[(i + 1) % n]) {
            self.record(RewriteRule::PowerReduction, r);
            // r rotated to X X W
            let rotated = r.rotate(i);
            let x = rotated.0[0];
            let rest = Word(rotated.0[2..].to_vec());
            let xw = Word(vec![x]).concat(&rest);
            let xinv_w = Word(vec![x.inverse()]).concat(&rest);
            let tr_x = NormalForm::var(x.trace_coordinate());
            let tr_xinv = NormalForm::var(x.inverse().trace_coordinate());
            let value =
                &tr_x * &self.trace(&xw)? - &tr_xinv * &self.trace(&rest)? + self.trace(&xinv_w)?;
            return Ok(value);
        }
        if let Some(v) = mixed_identity_table().get(key) {
            self.record(RewriteRule::MixedIdentity, r);
            return Ok(v.clone());
        }
        Err(WordError::Irreducible(r.clone()))
    }
}

/// `tr(w)` as an element of the coordinate ring.
pub fn trace_of(w: &Word) -> Result<NormalForm, WordError> {
    TraceReducer {
        memo: HashMap::new(),
        log: None,
    }
    .trace(w)
}

/// Like [`trace_of`], also returning every rule application in order.
pub fn trace_with_log(w: &Word) -> Result<(NormalForm, Vec<RewriteStep>), WordError> {
    let mut reducer = TraceReducer {
        memo: HashMap::new(),
        log: Some(Vec::new()),
    };
    let value = reducer.trace(w)?;
    Ok((value, reducer.log.unwrap_or_default()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn t(i: i64) -> NormalForm {
        NormalForm::var(Coordinate::new(i).unwrap())
    }

    #[test]
    fn free_cyclic_and_inverse() {
        assert_eq!(w("x1 x1^-1 x2").free_reduce(), w("x2"));
        assert_eq!(w("x1 x2 x1^-1").cyclic_reduce(), w("x2"));
        assert_eq!(w("x1 x2").invert(), w("x2^-1 x1^-1"));
        assert_eq!(w("x1 x2 x2^-1 x1^-1").cyclic_reduce(), Word::empty());
    }

    #[test]
    fn parse_aliases() {
        assert_eq!(w("X1 x2'"), w("x1^-1 x2^-1"));
        assert_eq!(w("x1x2"), w("x1 x2"));
        assert_eq!(w("1"), Word::empty());
        assert!(matches!(
            "x3".parse::<Word>(),
            Err(WordError::BadToken { .. })
        ));
        assert!(matches!(
            "y1".parse::<Word>(),
            Err(WordError::BadToken { position: 0, .. })
        ));
    }

    #[test]
    fn display_round_trip() {
        let word = w("x1 x2^-1 x1^-1 x2");
        assert_eq!(word.to_string().parse::<Word>().unwrap(), word);
        assert_eq!(Word::empty().to_string(), "1");
    }

    #[test]
    fn generator_lookups() {
        assert_eq!(
            trace_of(&Word::empty()).unwrap(),
            NormalForm::from_integer(3)
        );
        assert_eq!(trace_of(&w("x1 x2 x1^-1 x2^-1")).unwrap(), t(5));
        assert_eq!(
            trace_of(&w("x2 x1 x2^-1 x1^-1")).unwrap(),
            NormalForm::t_minus_5()
        );
        assert_eq!(trace_of(&w("x2^-1 x1")).unwrap(), t(4));
        assert_eq!(trace_of(&w("x2 x1^-1")).unwrap(), t(-4));
    }

    #[test]
    fn square_of_a_letter() {
        let expected = t(1) * t(1) - t(-1).scale(&rational(2, 1));
        assert_eq!(trace_of(&w("x1 x1")).unwrap(), expected);
        let inv = t(-1) * t(-1) - t(1).scale(&rational(2, 1));
        assert_eq!(trace_of(&w("x1^-1 x1^-1")).unwrap(), inv);
    }

    #[test]
    fn x1_squared_x2() {
        let expected = t(1) * t(3) - t(-1) * t(2) + t(-4);
        assert_eq!(trace_of(&w("x1 x1 x2")).unwrap(), expected);
    }

    #[test]
    fn mixed_identity_lookup() {
        let (seed, poly) = mixed_identity_seed();
        assert_eq!(trace_of(&seed).unwrap(), poly);
        assert_eq!(trace_of(&seed.rotate(2)).unwrap(), poly);
    }

    #[test]
    fn every_alternating_length_four_word_reduces() {
        for a in [1i8, -1] {
            for b in [2i8, -2] {
                for c in [1i8, -1] {
                    for d in [2i8, -2] {
                        let word = Word::from_indices(&[a, b, c, d]);
                        let is_square = a == c && b == d;
                        assert_eq!(trace_of(&word).is_ok(), !is_square, "{word}");
                    }
                }
            }
        }
    }

    #[test]
    fn long_alternating_word_is_irreducible() {
        let word = w("x1 x2 x1 x2");
        assert_eq!(trace_of(&word), Err(WordError::Irreducible(word.clone())));
    }

    #[test]
    fn log_measures_decrease() {
        let (_, log) = trace_with_log(&w("x1 x1 x2 x2 x1^-1")).unwrap();
        assert!(!log.is_empty());
        for step in &log {
            if step.rule == RewriteRule::PowerReduction {
                assert!(step.measure.0 >= 2);
            }
        }
    }
}
