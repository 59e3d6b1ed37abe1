//! Named verification suites, shared by the command-line tool.
//!
//! Every check yields a [`CheckOutcome`]; a suite passes when all of its
//! outcomes do.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::numeric::{
    self, draw_samples, report_on, NumericError, RepresentationSample, ToleranceConfig,
    VerificationReport, WordExpression,
};
use crate::poisson::{
    bivector_report, bracket, bracket_table, casimirs, coordinate_jacobiators, poisson_ideal_check,
    relation_partial, torus_symmetry_relations, trinion_transcriptions, Orientation,
    SurfaceStructure,
};
use crate::polyring::{rational, reduce, Coordinate, NormalForm};
use crate::relations::{big_p, big_q, defining_relation, little_p, little_q};
use crate::surfaces::{Surface, SurfaceTopology};
use crate::symmetry::{certify, DihedralElement, GroupRingOperator, NielsenMove};
use crate::words::{trace_of, trace_with_log, RewriteRule, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Kernel,
    Orbit,
    Trinion,
    Jacobi,
    Ideal,
    Symmetry,
    Casimir,
    Traces,
    #[serde(rename = "four-term")]
    FourTerm,
    Dims,
    All,
}

impl Suite {
    pub const EACH: [Self; 10] = [
        Self::Kernel,
        Self::Orbit,
        Self::Trinion,
        Self::Jacobi,
        Self::Ideal,
        Self::Symmetry,
        Self::Casimir,
        Self::Traces,
        Self::FourTerm,
        Self::Dims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Kernel => "kernel",
            Self::Orbit => "orbit",
            Self::Trinion => "trinion",
            Self::Jacobi => "jacobi",
            Self::Ideal => "ideal",
            Self::Symmetry => "symmetry",
            Self::Casimir => "casimir",
            Self::Traces => "traces",
            Self::FourTerm => "four-term",
            Self::Dims => "dims",
            Self::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::EACH
            .into_iter()
            .chain([Self::All])
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckOutcome {
    fn exact(
        suite: Suite,
        check: impl Into<String>,
        pass: bool,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            suite,
            check: check.into(),
            pass,
            max_residual: None,
            detail: detail.into(),
        }
    }

    fn numeric(suite: Suite, r: VerificationReport) -> Self {
        Self {
            suite,
            check: r.identity,
            pass: r.pass,
            max_residual: Some(r.max_residual),
            detail: format!("{} samples", r.samples),
        }
    }
}

/// Which surfaces and orientation the surface-dependent suites cover.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub surfaces: Vec<Surface>,
    pub orientation: Orientation,
    pub tolerance: ToleranceConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            surfaces: Surface::ALL.to_vec(),
            orientation: Orientation::Positive,
            tolerance: ToleranceConfig::default(),
        }
    }
}

impl VerifyOptions {
    fn structures(&self) -> impl Iterator<Item = SurfaceStructure> + '_ {
        self.surfaces
            .iter()
            .map(|&s| SurfaceStructure::new(s, self.orientation))
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<CheckOutcome>, NumericError> {
    opts.tolerance.validate()?;
    Ok(match suite {
        Suite::Kernel => kernel(opts)?,
        Suite::Orbit => orbit(),
        Suite::Trinion => trinion_consistency(),
        Suite::Jacobi => jacobi(opts),
        Suite::Ideal => ideal(opts),
        Suite::Symmetry => symmetry(opts)?,
        Suite::Casimir => casimir(opts),
        Suite::Traces => traces(opts)?,
        Suite::FourTerm => four_term(opts)?,
        Suite::Dims => dims(),
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::EACH {
                out.extend(run_suite(s, opts)?);
            }
            out
        }
    })
}

fn base(p: &crate::polyring::BasePolynomial) -> NormalForm {
    NormalForm::from_base(p.clone())
}

/// `t5 + t-5 = P`, `t5 t-5 = Q` and the defining relation, on samples.
pub fn kernel_reports(
    cfg: &ToleranceConfig,
    samples: &[RepresentationSample],
) -> Vec<VerificationReport> {
    let p = big_p();
    let q = big_q();
    let rel = defining_relation();
    vec![
        report_on("t5 + t-5 = P", cfg, samples, |s| {
            (
                s.coords()[Coordinate::T5] + s.t_minus_5(),
                p.eval(s.coords()),
            )
        }),
        report_on("t5 * t-5 = Q", cfg, samples, |s| {
            (
                s.coords()[Coordinate::T5] * s.t_minus_5(),
                q.eval(s.coords()),
            )
        }),
        report_on("t5^2 - P*t5 + Q = 0", cfg, samples, |s| {
            (rel.eval(s.coords()), 0.0.into())
        }),
    ]
}

fn kernel(opts: &VerifyOptions) -> Result<Vec<CheckOutcome>, NumericError> {
    let samples = draw_samples(&opts.tolerance)?;
    let mut out: Vec<_> = kernel_reports(&opts.tolerance, &samples)
        .into_iter()
        .map(|r| CheckOutcome::numeric(Suite::Kernel, r))
        .collect();
    out.push(CheckOutcome::exact(
        Suite::Kernel,
        "reduce(t5^2 - P*t5 + Q) = 0",
        reduce(defining_relation()).is_zero(),
        "",
    ));
    Ok(out)
}

fn orbit() -> Vec<CheckOutcome> {
    let sd = GroupRingOperator::s_d();
    let p = sd.apply(&base(little_p())) - NormalForm::from_integer(3);
    let q = sd.apply(&base(little_q())) + NormalForm::from_integer(9);
    let mut out = vec![
        CheckOutcome::exact(Suite::Orbit, "S_D(p) - 3 = P", p == base(big_p()), ""),
        CheckOutcome::exact(Suite::Orbit, "S_D(q) + 9 = Q", q == base(big_q()), ""),
    ];
    let invariant = DihedralElement::ALL.into_iter().all(|g| {
        g.apply(&base(big_p())) == base(big_p()) && g.apply(&base(big_q())) == base(big_q())
    });
    out.push(CheckOutcome::exact(
        Suite::Orbit,
        "P and Q are fixed by every dihedral element",
        invariant,
        "",
    ));
    out
}

/// Consistency of the trinion table with the defining relation and with the
/// hand expansions of the brackets of `t±4` with `P` and `Q`.
pub fn trinion_consistency() -> Vec<CheckOutcome> {
    let table = bracket_table(SurfaceStructure::positive(Surface::Trinion));
    let t = |i: i64| NormalForm::var(Coordinate::new(i).unwrap());
    let p = base(big_p());
    let q = base(big_q());
    let a45 = table.get(Coordinate::T4, Coordinate::T5);
    let am45 = table.get(Coordinate::TM4, Coordinate::T5);
    let tr = trinion_transcriptions();
    let two_t5_minus_p = NormalForm::var(Coordinate::T5).scale(&rational(2, 1)) - &p;
    let t5 = NormalForm::var(Coordinate::T5);
    let s = Suite::Trinion;
    vec![
        CheckOutcome::exact(
            s,
            "a(4,5) = d(Q - t5 P)/dt-4",
            a45 == relation_partial(Coordinate::TM4),
            "",
        ),
        CheckOutcome::exact(
            s,
            "a(-4,5) = -d(Q - t5 P)/dt4",
            am45 == -relation_partial(Coordinate::T4),
            "",
        ),
        CheckOutcome::exact(
            s,
            "a(-4,5) = -i(a(4,5))",
            am45 == -DihedralElement::I.apply(&a45),
            "",
        ),
        CheckOutcome::exact(
            s,
            "{t4, P} matches expansion",
            bracket(&t(4), &p, &table) == tr.t4_p,
            "",
        ),
        CheckOutcome::exact(
            s,
            "{t4, Q} matches expansion",
            bracket(&t(4), &q, &table) == tr.t4_q,
            "",
        ),
        CheckOutcome::exact(
            s,
            "{t-4, P} matches expansion",
            bracket(&t(-4), &p, &table) == tr.tm4_p,
            "",
        ),
        CheckOutcome::exact(
            s,
            "{t-4, Q} matches expansion",
            bracket(&t(-4), &q, &table) == tr.tm4_q,
            "",
        ),
        CheckOutcome::exact(
            s,
            "(2t5 - P){t4, t5} = t5{t4, P} - {t4, Q}",
            &two_t5_minus_p * &a45 == &t5 * &tr.t4_p - &tr.t4_q,
            "",
        ),
        CheckOutcome::exact(
            s,
            "(2t5 - P){t-4, t5} = t5{t-4, P} - {t-4, Q}",
            &two_t5_minus_p * &am45 == &t5 * &tr.tm4_p - &tr.tm4_q,
            "",
        ),
    ]
}

fn jacobi(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    opts.structures()
        .map(|st| {
            let table = bracket_table(st);
            let values = coordinate_jacobiators(&table);
            let failing: Vec<String> = values
                .iter()
                .filter(|j| !j.value.is_zero())
                .map(|j| format!("({}, {}, {})", j.triple.0, j.triple.1, j.triple.2))
                .collect();
            CheckOutcome::exact(
                Suite::Jacobi,
                format!(
                    "{}: all {} coordinate jacobiators vanish",
                    st.surface,
                    values.len()
                ),
                failing.is_empty(),
                failing.join(" "),
            )
        })
        .collect()
}

fn ideal(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    opts.structures()
        .map(|st| {
            let table = bracket_table(st);
            match poisson_ideal_check(&table) {
                Ok(summary) => {
                    let pass = st.surface != Surface::Torus || summary.p_and_q_are_casimirs;
                    CheckOutcome::exact(
                        Suite::Ideal,
                        format!("{}: brackets preserve the defining ideal", st.surface),
                        pass,
                        format!("P and Q Casimirs: {}", summary.p_and_q_are_casimirs),
                    )
                }
                Err(e) => CheckOutcome::exact(
                    Suite::Ideal,
                    format!("{}: brackets preserve the defining ideal", st.surface),
                    false,
                    e.to_string(),
                ),
            }
        })
        .collect()
}

fn symmetry(opts: &VerifyOptions) -> Result<Vec<CheckOutcome>, NumericError> {
    let mut out = Vec::new();
    for st in opts.structures() {
        if st.surface == Surface::Torus {
            let table = bracket_table(st);
            for rel in torus_symmetry_relations() {
                out.push(CheckOutcome::exact(
                    Suite::Symmetry,
                    rel.to_string(),
                    rel.holds(&table),
                    "",
                ));
            }
        }
        let (pass, detail) = match bivector_report(st) {
            Ok(r) => (
                r.factored_matches_raw,
                format!("{} raw entries", r.raw.len()),
            ),
            Err(e) => (false, e.to_string()),
        };
        out.push(CheckOutcome::exact(
            Suite::Symmetry,
            format!("{}: factored bi-vector expands to the table", st.surface),
            pass,
            detail,
        ));
    }
    let rows = certify(&opts.tolerance).map_err(|e| match e {
        crate::symmetry::CertificationError::Numeric(n) => n,
        crate::symmetry::CertificationError::Word(w) => NumericError::BadConfig(w.to_string()),
    })?;
    let worst = rows.iter().map(|r| r.max_residual).fold(0.0, f64::max);
    let failing: Vec<String> = rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{}({})", r.symmetry, r.coordinate))
        .collect();
    out.push(CheckOutcome {
        suite: Suite::Symmetry,
        check: format!("{} action-table entries certified", rows.len()),
        pass: failing.is_empty(),
        max_residual: Some(worst),
        detail: failing.join(" "),
    });
    Ok(out)
}

fn casimir(opts: &VerifyOptions) -> Vec<CheckOutcome> {
    opts.structures()
        .map(|st| {
            let found = casimirs(&bracket_table(st));
            let expected: Vec<Coordinate> = match st.surface {
                Surface::Trinion => Coordinate::BASE[..6].to_vec(),
                Surface::Torus => vec![Coordinate::T5],
            };
            let names: Vec<String> = found.iter().map(Coordinate::to_string).collect();
            CheckOutcome::exact(
                Suite::Casimir,
                format!("{}: Casimir coordinates", st.surface),
                found == expected,
                names.join(", "),
            )
        })
        .collect()
}

/// Words exercising every trace rewrite rule.
pub fn trace_corpus() -> Vec<Word> {
    let mut words: Vec<Word> = [
        "1",
        "x1 x1^-1 x2",
        "x1 x2 x1^-1",
        "x1 x2 x1^-1 x2^-1",
        "x2 x1 x2^-1 x1^-1",
        "x1 x1",
        "x1^-1 x1^-1",
        "x2 x2",
        "x1 x1 x2",
        "x2^-1 x2^-1 x1",
        "x1 x1 x1",
        "x1 x1 x2 x2",
        "x1 x2 x1 x2^-1",
        "x2 x1 x2 x1^-1",
        "x1^-1 x2 x1^-1 x2^-1",
        "x1 x1 x2 x1 x2^-1",
    ]
    .iter()
    .map(|s| s.parse().expect("corpus words parse"))
    .collect();
    for c in Coordinate::ALL {
        for mv in NielsenMove::ALL {
            words.push(mv.apply_to_word(&Word::for_coordinate(c)));
        }
        for g in DihedralElement::ALL {
            words.push(g.apply_to_word(&Word::for_coordinate(c)));
        }
    }
    words
}

/// Maximum residual of `trace_of` against the matrix trace, per rule used.
pub fn trace_rule_reports(
    cfg: &ToleranceConfig,
    samples: &[RepresentationSample],
) -> Vec<VerificationReport> {
    let mut by_rule: BTreeMap<String, Vec<(Word, NormalForm)>> = BTreeMap::new();
    for w in trace_corpus() {
        let Ok((value, log)) = trace_with_log(&w) else {
            continue;
        };
        let mut rules: Vec<RewriteRule> = log.iter().map(|s| s.rule).collect();
        rules.dedup();
        for r in rules {
            by_rule
                .entry(format!("{r:?}"))
                .or_default()
                .push((w.clone(), value.clone()));
        }
    }
    by_rule
        .into_iter()
        .map(|(rule, cases)| {
            let name = format!("trace rule {rule} ({} words)", cases.len());
            report_on(&name, cfg, samples, |s| {
                cases
                    .iter()
                    .map(|(w, v)| (s.trace_of_word(w), v.eval(s.coords())))
                    .max_by(|a, b| {
                        numeric::residual(a.0, a.1).total_cmp(&numeric::residual(b.0, b.1))
                    })
                    .unwrap()
            })
        })
        .collect()
}

fn traces(opts: &VerifyOptions) -> Result<Vec<CheckOutcome>, NumericError> {
    let samples = draw_samples(&opts.tolerance)?;
    Ok(trace_rule_reports(&opts.tolerance, &samples)
        .into_iter()
        .map(|r| CheckOutcome::numeric(Suite::Traces, r))
        .collect())
}

/// The four-term trace expression whose value is `a(4,5)` on the trinion.
pub fn four_term_expression() -> WordExpression {
    let w = |s: &str| s.parse::<Word>().expect("fixed words parse");
    let one = rational(1, 1);
    let minus = rational(-1, 1);
    WordExpression::new()
        .trace(one.clone(), w("x1 x2^-1 x1^-1 x2^-1 x1 x2"))
        .trace(minus.clone(), w("x1 x2^-1"))
        .trace(one, w("x2^-1 x2^-1 x1 x1 x2 x1^-1"))
        .trace(minus, w("x2^-1 x1 x2^-1 x1 x2 x1^-1"))
}

fn four_term(opts: &VerifyOptions) -> Result<Vec<CheckOutcome>, NumericError> {
    let a45 = bracket_table(SurfaceStructure::positive(Surface::Trinion))
        .get(Coordinate::T4, Coordinate::T5);
    let r = numeric::check_word_function_identity(
        "four-term trace expression = a(4,5)",
        &four_term_expression(),
        &a45,
        &opts.tolerance,
    )?;
    Ok(vec![CheckOutcome::numeric(Suite::FourTerm, r)])
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DimensionSummary {
    pub genus: u32,
    pub boundaries: u32,
    pub chi: i64,
    pub rank: u32,
    pub dim: Option<u64>,
    pub leaf_dim: i64,
}

pub fn dimension_summary(t: &SurfaceTopology) -> DimensionSummary {
    DimensionSummary {
        genus: t.genus(),
        boundaries: t.boundaries(),
        chi: t.euler_char(),
        rank: t.rank(),
        dim: t.dim_character_variety().ok(),
        leaf_dim: t.generic_leaf_dimension(),
    }
}

fn dims() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for (s, leaf, casimir_count) in [(Surface::Trinion, 2, 6), (Surface::Torus, 6, 1)] {
        let d = dimension_summary(&s.topology());
        let found = casimirs(&bracket_table(SurfaceStructure::positive(s))).len();
        out.push(CheckOutcome::exact(
            Suite::Dims,
            format!(
                "{s}: chi -1, rank 2, dim 8, leaf dim {leaf}, {casimir_count} Casimir coordinates"
            ),
            d.chi == -1
                && d.rank == 2
                && d.dim == Some(8)
                && d.leaf_dim == leaf
                && found == casimir_count,
            format!(
                "chi {} rank {} dim {:?} leaf {} casimirs {found}",
                d.chi, d.rank, d.dim, d.leaf_dim
            ),
        ));
    }
    out
}

/// Sampling suites for the `sample` command.
pub fn sample_suite(
    name: &str,
    cfg: &ToleranceConfig,
) -> Result<Vec<VerificationReport>, SampleError> {
    let samples = draw_samples(cfg)?;
    match name {
        "kernel" => Ok(kernel_reports(cfg, &samples)),
        "traces" => Ok(trace_rule_reports(cfg, &samples)),
        "words" => {
            let a45 = bracket_table(SurfaceStructure::positive(Surface::Trinion))
                .get(Coordinate::T4, Coordinate::T5);
            let four = four_term_expression();
            let mut out = vec![report_on(
                "four-term trace expression = a(4,5)",
                cfg,
                &samples,
                |s| (four.eval(s), a45.eval(s.coords())),
            )];
            let seed: Word = "x1 x2 x1 x2^-1".parse().expect("fixed word parses");
            for g in DihedralElement::ALL {
                let w = g.apply_to_word(&seed);
                let Ok(v) = trace_of(&w) else { continue };
                out.push(report_on(&format!("tr({w})"), cfg, &samples, |s| {
                    (s.trace_of_word(&w), v.eval(s.coords()))
                }));
            }
            Ok(out)
        }
        other => Err(SampleError::UnknownSuite(other.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SampleError {
    #[error("unknown sampling suite {0:?}; expected kernel, traces or words")]
    UnknownSuite(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions {
            tolerance: ToleranceConfig {
                sample_count: 20,
                ..Default::default()
            },
            ..Default::default()
        }
    }

    #[test]
    fn cheap_suites_pass() {
        for s in [
            Suite::Kernel,
            Suite::Orbit,
            Suite::Trinion,
            Suite::Casimir,
            Suite::Dims,
            Suite::FourTerm,
        ] {
            for o in run_suite(s, &quick()).unwrap() {
                assert!(o.pass, "{} / {}: {}", o.suite, o.check, o.detail);
            }
        }
    }

    #[test]
    fn corpus_words_all_reduce() {
        for w in trace_corpus() {
            assert!(trace_of(&w).is_ok(), "{w}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }
}
