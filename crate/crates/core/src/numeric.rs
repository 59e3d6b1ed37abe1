//! Random `SL3(C)` representations and numeric identity checks.
//!
//! Sample `k` of a run with seed `s` is drawn from a ChaCha8 stream keyed by
//! `(s, k)`, so results do not depend on thread count or scheduling.

use std::ops::Mul;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::polyring::{
    rational_to_f64, Coordinate, CoordinatePoint, FreePolynomial, NormalForm, Rational,
};
use crate::surfaces::{SurfaceError, SurfaceTopology};
use crate::words::Word;

const MIN_DET: f64 = 1e-6;
const MAX_TRIES: usize = 100;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericError {
    #[error("no matrix with |det| >= {MIN_DET} after {MAX_TRIES} draws")]
    DegenerateSample,
    #[error("invalid tolerance configuration: {0}")]
    BadConfig(String),
}

/// A 3x3 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix3([[Complex64; 3]; 3]);

impl Matrix3 {
    pub fn identity() -> Self {
        let mut m = [[Complex64::new(0.0, 0.0); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Complex64::new(1.0, 0.0);
        }
        Self(m)
    }

    pub fn from_rows(rows: [[Complex64; 3]; 3]) -> Self {
        Self(rows)
    }

    pub fn rows(&self) -> &[[Complex64; 3]; 3] {
        &self.0
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self(self.0.map(|row| row.map(|x| x * c)))
    }

    /// Inverse via the adjugate.
    pub fn inverse(&self) -> Self {
        let m = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]
        };
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        Self(adj).scale(self.det().inv())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                d = d.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        d
    }
}

impl Mul for Matrix3 {
    type Output = Matrix3;

    fn mul(self, rhs: Matrix3) -> Matrix3 {
        let mut out = [[Complex64::new(0.0, 0.0); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Matrix3(out)
    }
}

fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) / std::f64::consts::SQRT_2
}

/// Draws a complex Gaussian matrix and rescales it to determinant 1.
pub fn sample_sl3<R: Rng + ?Sized>(rng: &mut R) -> Result<Matrix3, NumericError> {
    for _ in 0..MAX_TRIES {
        let m = Matrix3(std::array::from_fn(|_| {
            std::array::from_fn(|_| complex_normal(rng))
        }));
        let det = m.det();
        if det.norm() >= MIN_DET {
            return Ok(m.scale(det.inv().cbrt()));
        }
    }
    Err(NumericError::DegenerateSample)
}

/// A pair `(A, B)` in `SL3(C)` with its trace coordinates.
#[derive(Clone, Debug)]
pub struct RepresentationSample {
    a: Matrix3,
    b: Matrix3,
    a_inv: Matrix3,
    b_inv: Matrix3,
    coords: CoordinatePoint,
    t_minus_5: Complex64,
}

impl RepresentationSample {
    pub fn new(a: Matrix3, b: Matrix3) -> Self {
        let a_inv = a.inverse();
        let b_inv = b.inverse();
        let mut s = Self {
            a,
            b,
            a_inv,
            b_inv,
            coords: CoordinatePoint::uniform(Complex64::new(0.0, 0.0)),
            t_minus_5: Complex64::new(0.0, 0.0),
        };
        for c in Coordinate::ALL {
            let value = s.trace_of_word(&Word::for_coordinate(c));
            s.coords.set(c, value);
        }
        s.t_minus_5 = s.trace_of_word(&Word::inverse_commutator());
        s
    }

    /// Sample number `index` of the run seeded by `seed`.
    pub fn draw(seed: u64, index: u64) -> Result<Self, NumericError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        let a = sample_sl3(&mut rng)?;
        let b = sample_sl3(&mut rng)?;
        Ok(Self::new(a, b))
    }

    pub fn a(&self) -> &Matrix3 {
        &self.a
    }

    pub fn b(&self) -> &Matrix3 {
        &self.b
    }

    pub fn coords(&self) -> &CoordinatePoint {
        &self.coords
    }

    pub fn t_minus_5(&self) -> Complex64 {
        self.t_minus_5
    }

    pub fn evaluate_word(&self, w: &Word) -> Matrix3 {
        w.letters().iter().fold(Matrix3::identity(), |acc, l| {
            acc * match l.index() {
                1 => self.a,
                -1 => self.a_inv,
                2 => self.b,
                _ => self.b_inv,
            }
        })
    }

    pub fn trace_of_word(&self, w: &Word) -> Complex64 {
        self.evaluate_word(w).trace()
    }
}

/// Function form of [`RepresentationSample::evaluate_word`].
pub fn evaluate_word(sample: &RepresentationSample, w: &Word) -> Matrix3 {
    sample.evaluate_word(w)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    pub relative_tol: f64,
    pub sample_count: usize,
    pub seed: u64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            relative_tol: 1e-8,
            sample_count: 1000,
            seed: 20_240_601,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<(), NumericError> {
        if !(self.relative_tol.is_finite() && self.relative_tol > 0.0) {
            return Err(NumericError::BadConfig(format!(
                "tolerance must be positive, got {}",
                self.relative_tol
            )));
        }
        if self.sample_count == 0 {
            return Err(NumericError::BadConfig(
                "sample count must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Outcome of one numeric identity check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    #[serde(rename = "n")]
    pub samples: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// `|l - r| / (1 + max(|l|, |r|))`.
pub fn residual(lhs: Complex64, rhs: Complex64) -> f64 {
    (lhs - rhs).norm() / (1.0 + lhs.norm().max(rhs.norm()))
}

/// All samples of a run, in index order.
pub fn draw_samples(cfg: &ToleranceConfig) -> Result<Vec<RepresentationSample>, NumericError> {
    cfg.validate()?;
    (0..cfg.sample_count as u64)
        .into_par_iter()
        .map(|k| RepresentationSample::draw(cfg.seed, k))
        .collect()
}

/// Evaluates `f` on every sample and reports the largest residual.
pub fn check_with<F>(
    name: &str,
    cfg: &ToleranceConfig,
    f: F,
) -> Result<VerificationReport, NumericError>
where
    F: Fn(&RepresentationSample) -> (Complex64, Complex64) + Sync,
{
    let samples = draw_samples(cfg)?;
    Ok(report_on(name, cfg, &samples, f))
}

/// Like [`check_with`], over samples already drawn.
pub fn report_on<F>(
    name: &str,
    cfg: &ToleranceConfig,
    samples: &[RepresentationSample],
    f: F,
) -> VerificationReport
where
    F: Fn(&RepresentationSample) -> (Complex64, Complex64) + Sync,
{
    let max_residual = samples
        .par_iter()
        .map(|s| {
            let (l, r) = f(s);
            let res = residual(l, r);
            if res.is_nan() {
                f64::INFINITY
            } else {
                res
            }
        })
        .reduce(|| 0.0, f64::max);
    VerificationReport {
        identity: name.to_string(),
        samples: samples.len(),
        max_residual,
        tolerance: cfg.relative_tol,
        pass: max_residual < cfg.relative_tol,
    }
}

/// Checks `lhs = rhs` at the trace coordinates of random representations.
pub fn check_polynomial_identity(
    name: &str,
    lhs: &FreePolynomial,
    rhs: &FreePolynomial,
    cfg: &ToleranceConfig,
) -> Result<VerificationReport, NumericError> {
    check_with(name, cfg, |s| (lhs.eval(s.coords()), rhs.eval(s.coords())))
}

/// One summand of a [`WordExpression`].
#[derive(Clone, Debug, PartialEq)]
pub enum WordTerm {
    Trace(Word),
    Polynomial(NormalForm),
}

/// A rational combination of matrix traces and polynomial terms.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct WordExpression {
    terms: Vec<(Rational, WordTerm)>,
}

impl WordExpression {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn trace(mut self, c: Rational, w: Word) -> Self {
        self.terms.push((c, WordTerm::Trace(w)));
        self
    }

    pub fn polynomial(mut self, c: Rational, p: NormalForm) -> Self {
        self.terms.push((c, WordTerm::Polynomial(p)));
        self
    }

    pub fn terms(&self) -> &[(Rational, WordTerm)] {
        &self.terms
    }

    pub fn eval(&self, s: &RepresentationSample) -> Complex64 {
        self.terms
            .iter()
            .map(|(c, t)| {
                let v = match t {
                    WordTerm::Trace(w) => s.trace_of_word(w),
                    WordTerm::Polynomial(p) => p.eval(s.coords()),
                };
                v * rational_to_f64(c)
            })
            .sum()
    }
}

/// Checks `expr = rhs`, where `expr` mixes matrix traces and polynomials.
pub fn check_word_function_identity(
    name: &str,
    expr: &WordExpression,
    rhs: &NormalForm,
    cfg: &ToleranceConfig,
) -> Result<VerificationReport, NumericError> {
    check_with(name, cfg, |s| (expr.eval(s), rhs.eval(s.coords())))
}

/// The trace and `tr` of the inverse of each boundary word, for the
/// surfaces with a fixed presentation.
pub fn boundary_invariants(
    s: &RepresentationSample,
    surface: &SurfaceTopology,
) -> Result<Vec<(Complex64, Complex64)>, SurfaceError> {
    Ok(surface
        .boundary_words()?
        .iter()
        .map(|w| (s.trace_of_word(w), s.trace_of_word(&w.invert())))
        .collect())
}
