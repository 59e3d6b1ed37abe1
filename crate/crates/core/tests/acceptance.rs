//! Acceptance battery: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p charvar-core --test acceptance`. Exits nonzero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use charvar_core::numeric::{
    draw_samples, residual, Matrix3, RepresentationSample, ToleranceConfig,
};
use charvar_core::poisson::{
    bivector_report, bracket, bracket_free, bracket_table, casimirs, coordinate_jacobiators,
    poisson_ideal_check, torus_symmetry_relations, trinion_transcriptions, BracketTable,
    SurfaceStructure,
};
use charvar_core::polyring::{reduce, BasePolynomial, Coordinate, FreePolynomial, NormalForm};
use charvar_core::relations::{big_p, big_q, defining_relation, little_p, little_q};
use charvar_core::surfaces::{Surface, SurfaceTopology};
use charvar_core::symmetry::{DihedralElement, GroupRingOperator, Symmetry};
use charvar_core::verify::trace_rule_reports;
use charvar_core::words::{trace_of, Word};

const TOL: f64 = 1e-8;
const SAMPLES: usize = 1000;
const TRACE_SAMPLES: usize = 100;
const SEED: u64 = 20240601;

const KERNEL_BUDGET: Duration = Duration::from_secs(5);
const ORBIT_BUDGET: Duration = Duration::from_secs(10);
const JACOBI_BUDGET: Duration = Duration::from_secs(120);

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn cfg(n: usize) -> ToleranceConfig {
    ToleranceConfig {
        relative_tol: TOL,
        sample_count: n,
        seed: SEED,
    }
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn base(p: &BasePolynomial) -> NormalForm {
    NormalForm::from_base(p.clone())
}

fn mat_trace(a: &Matrix3, b: &Matrix3, letters: &[i8]) -> Complex64 {
    let (ai, bi) = (a.inverse(), b.inverse());
    letters
        .iter()
        .fold(Matrix3::identity(), |acc, l| {
            acc * match l {
                1 => *a,
                -1 => ai,
                2 => *b,
                _ => bi,
            }
        })
        .trace()
}

/// Trace coordinates computed straight from the matrices, with `t(-5)`.
fn direct_coords(a: &Matrix3, b: &Matrix3) -> ([Complex64; 9], Complex64) {
    let words: [&[i8]; 9] = [
        &[1],
        &[-1],
        &[2],
        &[-2],
        &[1, 2],
        &[-1, -2],
        &[1, -2],
        &[-1, 2],
        &[1, 2, -1, -2],
    ];
    let mut out = [Complex64::new(0.0, 0.0); 9];
    for (slot, letters) in words.iter().enumerate() {
        out[slot] = mat_trace(a, b, letters);
    }
    (out, mat_trace(a, b, &[2, 1, -2, -1]))
}

fn point(values: [Complex64; 9]) -> charvar_core::polyring::CoordinatePoint {
    let mut p = charvar_core::polyring::CoordinatePoint::uniform(Complex64::new(0.0, 0.0));
    for (c, v) in Coordinate::ALL.into_iter().zip(values) {
        p.set(c, v);
    }
    p
}

fn max_residual<I: IntoIterator<Item = (Complex64, Complex64)>>(pairs: I) -> f64 {
    pairs
        .into_iter()
        .map(|(l, r)| {
            let x = residual(l, r);
            if x.is_nan() {
                f64::INFINITY
            } else {
                x
            }
        })
        .fold(0.0, f64::max)
}

fn criterion_1(samples: &[RepresentationSample]) -> Outcome {
    let start = Instant::now();
    let p = big_p();
    let q = big_q();
    let (mut sum, mut prod) = (0.0f64, 0.0f64);
    for s in samples {
        let (t, tm5) = direct_coords(s.a(), s.b());
        let pt = point(t);
        sum = sum.max(max_residual([(t[8] + tm5, p.eval(&pt))]));
        prod = prod.max(max_residual([(t[8] * tm5, q.eval(&pt))]));
    }
    let elapsed = start.elapsed();
    outcome(
        sum < TOL && prod < TOL && elapsed < KERNEL_BUDGET,
        format!("t5+t-5=P max {sum:.1e}, t5*t-5=Q max {prod:.1e}, {elapsed:.2?}"),
    )
}

fn criterion_2(samples: &[RepresentationSample]) -> Outcome {
    let p = big_p();
    let q = big_q();
    let worst = max_residual(samples.iter().map(|s| {
        let (t, _) = direct_coords(s.a(), s.b());
        let pt = point(t);
        (
            t[8] * t[8] - p.eval(&pt) * t[8] + q.eval(&pt),
            Complex64::new(0.0, 0.0),
        )
    }));
    let exact = reduce(defining_relation()).is_zero();
    outcome(
        worst < TOL && exact,
        format!("max {worst:.1e}, reduce = 0: {exact}"),
    )
}

fn criterion_3(samples: &[RepresentationSample]) -> Outcome {
    let start = Instant::now();
    let sd = GroupRingOperator::s_d();
    let p_ok = sd.apply(&base(little_p())) - NormalForm::from_integer(3) == base(big_p());
    let q_ok = sd.apply(&base(little_q())) + NormalForm::from_integer(9) == base(big_q());
    let elapsed = start.elapsed();
    // Orbit sum evaluated on the twisted representations themselves.
    let worst = max_residual(samples.iter().take(TRACE_SAMPLES).flat_map(|s| {
        let mut sp = Complex64::new(0.0, 0.0);
        let mut sq = Complex64::new(0.0, 0.0);
        for g in DihedralElement::ALL {
            let (w1, w2) = g.word_images();
            let a = s.evaluate_word(w1);
            let b = s.evaluate_word(w2);
            let pt = point(direct_coords(&a, &b).0);
            sp += little_p().eval(&pt);
            sq += little_q().eval(&pt);
        }
        [
            (sp - 3.0, big_p().eval(s.coords())),
            (sq + 9.0, big_q().eval(s.coords())),
        ]
    }));
    outcome(
        p_ok && q_ok && worst < TOL && elapsed < ORBIT_BUDGET,
        format!("S_D(p)-3=P {p_ok}, S_D(q)+9=Q {q_ok}, orbit sums max {worst:.1e}, {elapsed:.2?}"),
    )
}

fn leibniz(c: Coordinate, f: &FreePolynomial, table: &BracketTable) -> NormalForm {
    let mut out = NormalForm::zero();
    for j in Coordinate::ALL {
        out = out + &table.get(c, j) * &f.partial(j).reduce();
    }
    out
}

fn criterion_4() -> Outcome {
    let table = bracket_table(SurfaceStructure::positive(Surface::Trinion));
    let t5 = FreePolynomial::var(Coordinate::T5);
    let f = FreePolynomial::from_base(big_q().clone())
        - t5 * FreePolynomial::from_base(big_p().clone());
    let a45 = table.get(Coordinate::T4, Coordinate::T5);
    let am45 = table.get(Coordinate::TM4, Coordinate::T5);
    let partials =
        a45 == f.partial(Coordinate::TM4).reduce() && am45 == -f.partial(Coordinate::T4).reduce();
    let tr = trinion_transcriptions();
    let p = FreePolynomial::from_base(big_p().clone());
    let q = FreePolynomial::from_base(big_q().clone());
    let expansions = [
        (Coordinate::T4, &p, &tr.t4_p),
        (Coordinate::T4, &q, &tr.t4_q),
        (Coordinate::TM4, &p, &tr.tm4_p),
        (Coordinate::TM4, &q, &tr.tm4_q),
    ];
    let transcribed = expansions
        .iter()
        .filter(|(c, g, expected)| leibniz(*c, g, &table) == **expected)
        .count();
    let involution = am45 == -DihedralElement::I.apply(&a45);
    outcome(
        partials && transcribed == 4 && involution,
        format!(
            "partials {partials}, expansions {transcribed}/4, a(-4,5) = -i(a(4,5)) {involution}"
        ),
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut details = Vec::new();
    let mut pass = true;
    for (surface, nontrivial) in [(Surface::Trinion, 1), (Surface::Torus, 56)] {
        let table = bracket_table(SurfaceStructure::positive(surface));
        let cas = casimirs(&table);
        let values = coordinate_jacobiators(&table);
        let free_of_casimirs = values
            .iter()
            .filter(|j| {
                ![j.triple.0, j.triple.1, j.triple.2]
                    .iter()
                    .any(|c| cas.contains(c))
            })
            .count();
        let vanishing = values.iter().filter(|j| j.value.is_zero()).count();
        pass &= vanishing == values.len() && free_of_casimirs == nontrivial;
        details.push(format!(
            "{surface}: {vanishing}/{} vanish, {free_of_casimirs} nontrivial",
            values.len()
        ));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < JACOBI_BUDGET;
    outcome(pass, format!("{}, {elapsed:.2?}", details.join("; ")))
}

fn criterion_6() -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    for surface in Surface::ALL {
        let table = bracket_table(SurfaceStructure::positive(surface));
        let zero = Coordinate::ALL
            .into_iter()
            .filter(|&c| {
                bracket_free(&FreePolynomial::var(c), defining_relation(), &table).is_zero()
            })
            .count();
        let summary = poisson_ideal_check(&table);
        pass &= zero == 9 && summary.is_ok();
        if surface == Surface::Torus {
            let pq = Coordinate::ALL.into_iter().all(|c| {
                let t = NormalForm::var(c);
                bracket(&t, &base(big_p()), &table).is_zero()
                    && bracket(&t, &base(big_q()), &table).is_zero()
            });
            pass &= pq;
            details.push(format!("{surface}: {zero}/9, P and Q Casimirs {pq}"));
        } else {
            details.push(format!("{surface}: {zero}/9"));
        }
    }
    outcome(pass, details.join("; "))
}

fn criterion_7() -> Outcome {
    let table = bracket_table(SurfaceStructure::positive(Surface::Torus));
    let relations = torus_symmetry_relations();
    let dihedral: Vec<_> = relations
        .iter()
        .filter(|r| matches!(r.symmetry, Symmetry::Dihedral(_)))
        .collect();
    let dihedral_ok = dihedral.iter().filter(|r| r.holds(&table)).count();
    let nielsen_ok = relations
        .iter()
        .filter(|r| matches!(r.symmetry, Symmetry::Nielsen(_)) && r.holds(&table))
        .count();
    let report = bivector_report(SurfaceStructure::positive(Surface::Torus));
    let (expands, raw) = match &report {
        Ok(r) => (r.factored_matches_raw, r.raw.len()),
        Err(_) => (false, 0),
    };
    let count = table.nonzero_count();
    outcome(
        dihedral.len() == 20 && dihedral_ok == 20 && nielsen_ok == 2 && expands && raw == 24 && count == 24,
        format!(
            "dihedral {dihedral_ok}/{}, Nielsen {nielsen_ok}/2, factored expansion {expands}, {count} table entries",
            dihedral.len()
        ),
    )
}

fn criterion_8(samples: &[RepresentationSample]) -> Outcome {
    let c = cfg(TRACE_SAMPLES);
    let reports = trace_rule_reports(&c, samples);
    let rules_ok = reports.iter().filter(|r| r.pass).count();
    let mut named = vec![w("x1 x1 x2")];
    named.extend(DihedralElement::ALL.map(|g| g.apply_to_word(&w("x1 x2 x1 x2^-1"))));
    let mut worst = 0.0f64;
    let mut reduced = true;
    for word in &named {
        match trace_of(word) {
            Ok(v) => {
                worst = worst.max(max_residual(samples.iter().map(|s| {
                    let letters: Vec<i8> = word.letters().iter().map(|l| l.index()).collect();
                    (mat_trace(s.a(), s.b(), &letters), v.eval(s.coords()))
                })));
            }
            Err(_) => reduced = false,
        }
    }
    outcome(
        rules_ok == reports.len() && !reports.is_empty() && reduced && worst < TOL,
        format!(
            "{rules_ok}/{} rules, tr(x1^2 x2) and mixed identity orbit max {worst:.1e}",
            reports.len()
        ),
    )
}

fn criterion_9(samples: &[RepresentationSample]) -> Outcome {
    let a45 = bracket_table(SurfaceStructure::positive(Surface::Trinion))
        .get(Coordinate::T4, Coordinate::T5);
    let worst = max_residual(samples.iter().map(|s| {
        let tr = |l: &[i8]| mat_trace(s.a(), s.b(), l);
        let lhs = tr(&[1, -2, -1, -2, 1, 2]) - tr(&[1, -2]) + tr(&[-2, -2, 1, 1, 2, -1])
            - tr(&[-2, 1, -2, 1, 2, -1]);
        (lhs, a45.eval(s.coords()))
    }));
    outcome(
        worst < TOL,
        format!("max {worst:.1e} over {} samples", samples.len()),
    )
}

fn criterion_10() -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    for (g, n, leaf, cas_count) in [(0, 3, 2, 6), (1, 1, 6, 1)] {
        let t = SurfaceTopology::new(g, n).unwrap();
        let chi = 2 - 2 * i64::from(g) - i64::from(n);
        let r = 2 * g + n - 1;
        let dim = 8 * u64::from(r - 1);
        let found = casimirs(&bracket_table(SurfaceStructure::positive(
            t.surface().unwrap(),
        )))
        .len();
        pass &= chi == -1
            && t.euler_char() == chi
            && t.rank() == r
            && r == 2
            && t.dim_character_variety() == Ok(dim)
            && dim == 8
            && t.generic_leaf_dimension() == leaf
            && found == cas_count;
        details.push(format!(
            "({g},{n}): chi {chi} rank {r} dim {dim} leaf {} casimirs {found}",
            t.generic_leaf_dimension()
        ));
    }
    outcome(pass, details.join("; "))
}

fn main() -> ExitCode {
    let samples = draw_samples(&cfg(SAMPLES)).expect("sampling succeeds");
    let few = draw_samples(&cfg(TRACE_SAMPLES)).expect("sampling succeeds");
    let criteria: [Criterion; 10] = [
        ("kernel relations", Box::new(|| criterion_1(&samples))),
        ("hypersurface relation", Box::new(|| criterion_2(&samples))),
        ("dihedral orbit sums", Box::new(|| criterion_3(&samples))),
        ("trinion bracket consistency", Box::new(criterion_4)),
        ("Jacobi identity", Box::new(criterion_5)),
        ("Poisson ideal", Box::new(criterion_6)),
        ("torus symmetry", Box::new(criterion_7)),
        ("trace calculus", Box::new(|| criterion_8(&few))),
        (
            "four-term trace expression",
            Box::new(|| criterion_9(&samples)),
        ),
        ("dimensions", Box::new(criterion_10)),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failures += 1;
        }
        println!(
            "{} criterion {}: {name} ({})",
            if o.pass { "PASS" } else { "FAIL" },
            k + 1,
            o.detail
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
