use std::process::ExitCode;

use charvar_core::expr::{parse, parse_normal_form};
use charvar_core::numeric::ToleranceConfig;
use charvar_core::poisson::{
    bivector_report, bracket, bracket_table, torus_symmetry_relations, Orientation,
    SurfaceStructure,
};
use charvar_core::polyring::NormalForm;
use charvar_core::relations::NamedRelation;
use charvar_core::surfaces::{Surface, SurfaceTopology};
use charvar_core::symmetry::{certify, Symmetry};
use charvar_core::verify::{dimension_summary, run_suite, sample_suite, Suite, VerifyOptions};
use charvar_core::words::{trace_of, Word, WordError};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "charvar",
    version,
    about = "SL(3,C) character variety of the rank-2 free group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Surface for bracket-dependent commands.
    #[arg(long, global = true)]
    surface: Option<SurfaceArg>,

    /// Orientation sign of the Poisson structure.
    #[arg(long, global = true, default_value = "+", allow_hyphen_values = true)]
    orientation: String,

    /// Seed for random representations.
    #[arg(long, global = true, env = "CHARVAR_SEED")]
    seed: Option<u64>,

    /// Number of random representations.
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Relative tolerance for numeric checks.
    #[arg(long, global = true)]
    tol: Option<f64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum SurfaceArg {
    Trinion,
    Torus,
}

impl From<SurfaceArg> for Surface {
    fn from(s: SurfaceArg) -> Self {
        match s {
            SurfaceArg::Trinion => Surface::Trinion,
            SurfaceArg::Torus => Surface::Torus,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportWhat {
    Bivector,
    Table,
    Relations,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named polynomial (P, Q, p, q, relation) or a parsed expression.
    Show {
        /// Name or expression.
        target: String,
    },
    /// Reduce the trace of a word, or an expression, to normal form.
    Reduce {
        #[arg(long, conflicts_with = "expr")]
        word: Option<String>,
        #[arg(long)]
        expr: Option<String>,
    },
    /// Bracket of two expressions.
    Bracket {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Apply a symmetry, or certify every action-table entry.
    Sym {
        #[arg(long, requires = "to")]
        apply: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<String>,
        #[arg(long)]
        certify: bool,
    },
    /// Numeric identity checks on random representations, as JSON lines.
    Sample {
        #[arg(long, default_value = "kernel")]
        suite: String,
    },
    /// Topological invariants of a surface.
    Dims {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        boundaries: u32,
    },
    /// Export bracket data.
    Export {
        #[arg(long, value_enum)]
        what: ExportWhat,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn polynomial_json(x: &NormalForm) -> Value {
    json!({ "text": x.to_string(), "terms": x })
}

impl Cli {
    fn tolerance(&self, default_n: usize) -> ToleranceConfig {
        let base = ToleranceConfig::default();
        ToleranceConfig {
            relative_tol: self.tol.unwrap_or(base.relative_tol),
            sample_count: self.n.unwrap_or(default_n),
            seed: self.seed.unwrap_or(base.seed),
        }
    }

    fn orientation(&self) -> Result<Orientation, Failure> {
        Ok(self.orientation.parse()?)
    }

    fn structure(&self) -> Result<SurfaceStructure, Failure> {
        let surface = self
            .surface
            .ok_or_else(|| Failure("--surface is required for this command".into()))?;
        Ok(SurfaceStructure::new(surface.into(), self.orientation()?))
    }

    fn emit(&self, value: &Value, text: impl FnOnce() -> String) {
        match self.format {
            Format::Json => println!("{value}"),
            Format::Text => println!("{}", text()),
        }
    }

    fn run(&self) -> Result<bool, Failure> {
        match &self.command {
            Command::Show { target } => {
                let x = match target.parse::<NamedRelation>() {
                    Ok(NamedRelation::DefiningRelation) => {
                        let rel = NamedRelation::DefiningRelation.value();
                        let v =
                            json!({ "name": "relation", "text": rel.to_string(), "terms": rel });
                        self.emit(&v, || rel.to_string());
                        return Ok(true);
                    }
                    Ok(named) => named.value().reduce(),
                    Err(_) => parse_normal_form(target)?,
                };
                self.emit(&polynomial_json(&x), || x.to_string());
                Ok(true)
            }
            Command::Reduce { word, expr } => {
                if let Some(text) = expr {
                    let x = parse(text)?.lower()?;
                    self.emit(&polynomial_json(&x), || x.to_string());
                    return Ok(true);
                }
                let text = word
                    .as_ref()
                    .ok_or_else(|| Failure("give --word or --expr".into()))?;
                let w: Word = text.parse()?;
                match trace_of(&w) {
                    Ok(x) => {
                        let mut v = polynomial_json(&x);
                        v["word"] = json!(w.to_string());
                        self.emit(&v, || x.to_string());
                        Ok(true)
                    }
                    Err(WordError::Irreducible(sub)) => {
                        let v = json!({ "word": w.to_string(), "irreducible": sub.to_string() });
                        self.emit(&v, || "IRREDUCIBLE".to_string());
                        Ok(false)
                    }
                    Err(e) => Err(e.into()),
                }
            }
            Command::Bracket { f, g } => {
                let table = bracket_table(self.structure()?);
                let value = bracket(&parse_normal_form(f)?, &parse_normal_form(g)?, &table);
                self.emit(&polynomial_json(&value), || value.to_string());
                Ok(true)
            }
            Command::Verify { suite } => {
                let suite: Suite = suite.parse()?;
                let opts = VerifyOptions {
                    surfaces: match self.surface {
                        Some(s) => vec![s.into()],
                        None => Surface::ALL.to_vec(),
                    },
                    orientation: self.orientation()?,
                    tolerance: self.tolerance(ToleranceConfig::default().sample_count),
                };
                let outcomes = run_suite(suite, &opts)?;
                let pass = outcomes.iter().all(|o| o.pass);
                let v = json!({ "suite": suite, "pass": pass, "checks": outcomes });
                self.emit(&v, || {
                    outcomes
                        .iter()
                        .map(|o| {
                            let flag = if o.pass { "PASS" } else { "FAIL" };
                            format!("{flag} [{}] {}", o.suite, o.check)
                        })
                        .collect::<Vec<_>>()
                        .join("\n")
                });
                Ok(pass)
            }
            Command::Sym {
                apply,
                to,
                certify: run_certify,
            } => {
                if *run_certify {
                    let rows = certify(&self.tolerance(100))?;
                    let pass = rows.iter().all(|r| r.pass);
                    let v = json!({ "pass": pass, "rows": rows });
                    self.emit(&v, || {
                        rows.iter()
                            .map(|r| {
                                format!(
                                    "{:<4} {:<4} {:<40} {:.1e} {}",
                                    r.symmetry,
                                    r.coordinate,
                                    r.image,
                                    r.max_residual,
                                    if r.pass { "PASS" } else { "FAIL" }
                                )
                            })
                            .collect::<Vec<_>>()
                            .join("\n")
                    });
                    return Ok(pass);
                }
                let (Some(name), Some(text)) = (apply, to) else {
                    return Err(Failure(
                        "give --apply <symmetry> --to <expr>, or --certify".into(),
                    ));
                };
                let s: Symmetry = name.parse()?;
                let x = s.apply(&parse_normal_form(text)?);
                self.emit(&polynomial_json(&x), || x.to_string());
                Ok(true)
            }
            Command::Sample { suite } => {
                let reports = sample_suite(
                    suite,
                    &self.tolerance(ToleranceConfig::default().sample_count),
                )?;
                for r in &reports {
                    let v = serde_json::to_value(r)?;
                    self.emit(&v, || {
                        format!(
                            "{} {} n={} max_residual={:e}",
                            if r.pass { "PASS" } else { "FAIL" },
                            r.identity,
                            r.samples,
                            r.max_residual
                        )
                    });
                }
                Ok(reports.iter().all(|r| r.pass))
            }
            Command::Dims { genus, boundaries } => {
                let t = SurfaceTopology::new(*genus, *boundaries)?;
                let d = dimension_summary(&t);
                let v =
                    json!({ "chi": d.chi, "rank": d.rank, "dim": d.dim, "leaf_dim": d.leaf_dim });
                self.emit(&v, || {
                    let dim = d.dim.map_or("undefined".to_string(), |x| x.to_string());
                    format!(
                        "chi {} rank {} dim {dim} leaf_dim {}",
                        d.chi, d.rank, d.leaf_dim
                    )
                });
                Ok(true)
            }
            Command::Export { what } => self.export(*what),
        }
    }

    fn export(&self, what: ExportWhat) -> Result<bool, Failure> {
        let st = self.structure()?;
        match what {
            ExportWhat::Bivector => {
                let report = bivector_report(st)?;
                let v = serde_json::to_value(&report)?;
                self.emit(&v, || {
                    let mut lines: Vec<String> = report
                        .factored
                        .iter()
                        .map(|t| format!("({}) ({}) d{}^d{}", t.operator, t.text, t.i, t.j))
                        .collect();
                    lines.push(String::new());
                    lines.extend(
                        report
                            .raw
                            .iter()
                            .map(|e| format!("{{{}, {}}} = {}", e.i, e.j, e.text)),
                    );
                    lines.join("\n")
                });
                Ok(report.factored_matches_raw)
            }
            ExportWhat::Table => {
                let table = bracket_table(st);
                let entries: Vec<Value> = table
                    .entries()
                    .map(|((i, j), v)| json!({ "i": i, "j": j, "text": v.to_string(), "terms": v }))
                    .collect();
                let v = json!({ "surface": st.surface, "orientation": st.orientation, "entries": entries });
                self.emit(&v, || {
                    table
                        .entries()
                        .map(|((i, j), v)| format!("{{{i}, {j}}} = {v}"))
                        .collect::<Vec<_>>()
                        .join("\n")
                });
                Ok(true)
            }
            ExportWhat::Relations => {
                if st.surface != Surface::Torus {
                    return Err(Failure(
                        "operator relations are tabulated for the torus only".into(),
                    ));
                }
                let table = bracket_table(st);
                let rels: Vec<(String, bool)> = torus_symmetry_relations()
                    .into_iter()
                    .map(|r| (r.to_string(), r.holds(&table)))
                    .collect();
                let pass = rels.iter().all(|(_, ok)| *ok);
                let v = json!({
                    "pass": pass,
                    "relations": rels.iter().map(|(r, ok)| json!({ "relation": r, "holds": ok })).collect::<Vec<_>>(),
                });
                self.emit(&v, || {
                    rels.iter()
                        .map(|(r, ok)| format!("{} {r}", if *ok { "PASS" } else { "FAIL" }))
                        .collect::<Vec<_>>()
                        .join("\n")
                });
                Ok(pass)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
