//! Driver behind the `gfrob` binary. [`run`] writes everything to the given
//! sink and returns the process exit status:
//!
//! * `0` — every executed check passed;
//! * `1` — at least one check failed (witnesses are in the report);
//! * `2` — an error stopped the run; its category is printed.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use gfrob::algebra::{
    action_on_dual_basis_check, check_axioms, check_cocommutativity, check_frobenius_diagram, derive, dual_numbers,
    group_algebra, load_algebra, permutation_algebra, GFrobeniusAlgebra,
};
use gfrob::cobordism::{parse, CerfCase};
use gfrob::exactlin::{Matrix, Scalar};
use gfrob::group::{FiniteGroup, GroupFile};
use gfrob::orbifold::orbifold_algebra;
use gfrob::report::{CheckEntry, CheckReport, Witness};
use gfrob::tqft::fuzz::{fuzz, FuzzConfig};
use gfrob::tqft::{cerf_check, cerf_check_all, dehn_invariance_check, pants_ordering_check, Tqft};
use gfrob::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Records,
}

#[derive(Debug, Parser)]
#[command(name = "gfrob", version, about = "Exact checker for G-Frobenius algebras and their 2D TQFTs")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Group: a JSON group file or a builtin such as `symmetric:3`.
    #[arg(long, global = true)]
    pub group: Option<String>,

    /// Algebra file, or `builtin:group-algebra` (default), `builtin:dual-numbers`,
    /// `builtin:conjugation`, `builtin:regular`.
    #[arg(long, global = true)]
    pub algebra: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the axioms, the Frobenius diagram and twisted cocommutativity.
    Check,
    /// Print pairings, coproducts and Euler elements.
    Derive,
    /// Print the invariant subalgebra as an algebra file over the trivial group.
    Orbifold,
    /// Evaluate a cobordism word.
    Eval {
        /// DSL text, or a path to a file containing it.
        #[arg(long)]
        cobordism: String,
    },
    /// Compare alternative decompositions of the case surfaces.
    Cerf {
        /// 111, 202, 301, 103, birth, sphere or cyl; all four χ = −2 cases if omitted.
        #[arg(long = "case")]
        case: Vec<String>,
        /// Comma-separated element names.
        #[arg(long, conflicts_with = "all_labels")]
        labels: Option<String>,
        /// Sweep every labeling (the default when no labels are given).
        #[arg(long)]
        all_labels: bool,
    },
    /// Random words: functoriality, type safety and rewrite invariance.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum number of layers per word.
        #[arg(long, default_value_t = 8)]
        budget: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
}

pub fn resolve_group(source: &str) -> Result<FiniteGroup> {
    if Path::new(source).is_file() {
        let file: GroupFile = serde_json::from_str(&read(source)?).map_err(|e| Error::Schema(e.to_string()))?;
        FiniteGroup::from_file(file)
    } else {
        FiniteGroup::from_spec(source)
    }
}

pub fn resolve_algebra(group_source: Option<&str>, algebra: Option<&str>) -> Result<GFrobeniusAlgebra> {
    let group = || resolve_group(group_source.unwrap_or("cyclic:1"));
    match algebra.unwrap_or("builtin:group-algebra") {
        "builtin:group-algebra" => Ok(group_algebra(&group()?)),
        "builtin:dual-numbers" => Ok(dual_numbers(Scalar::zero(), Scalar::one())),
        "builtin:conjugation" => {
            let g = group()?;
            let act: Vec<Vec<usize>> = g.elements().map(|k| g.elements().map(|x| g.conj(k, x)).collect()).collect();
            permutation_algebra(&g, &act)
        }
        "builtin:regular" => {
            let g = group()?;
            let act: Vec<Vec<usize>> = g.elements().map(|k| g.elements().map(|x| g.mul(k, x)).collect()).collect();
            permutation_algebra(&g, &act)
        }
        other if other.starts_with("builtin:") => Err(Error::Schema(format!("unknown builtin algebra `{other}`"))),
        path => {
            let a = load_algebra(&read(path)?)?;
            if let Some(spec) = group_source {
                if resolve_group(spec)? != *a.group() {
                    return Err(Error::Schema(format!("--group {spec} differs from the group in {path}")));
                }
            }
            Ok(a)
        }
    }
}

/// Header line, then one line per entry.
pub fn format_report(report: &CheckReport, mode: Format) -> String {
    let mut out = String::new();
    match mode {
        Format::Human => {
            let _ = writeln!(out, "== {} ==", report.title);
            for e in &report.entries {
                let status = if e.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{status} {:<28} {:>8} instances", e.name, e.instances);
                if let Some(w) = &e.witness {
                    if !w.elements.is_empty() {
                        let _ = writeln!(out, "     elements: {}", w.elements.join(", "));
                    }
                    if !w.indices.is_empty() {
                        let idx: Vec<String> = w.indices.iter().map(ToString::to_string).collect();
                        let _ = writeln!(out, "     indices:  {}", idx.join(", "));
                    }
                    let _ = writeln!(out, "     left:     {}", w.left);
                    let _ = writeln!(out, "     right:    {}", w.right);
                    if let Some(note) = &w.note {
                        let _ = writeln!(out, "     note:     {note}");
                    }
                }
            }
        }
        Format::Records => {
            let header = json!({"record": "header", "title": report.title, "entries": report.entries.len()});
            let _ = writeln!(out, "{header}");
            for e in &report.entries {
                let _ = writeln!(out, "{}", serde_json::to_string(&Record::from(e)).expect("serializable"));
            }
        }
    }
    out
}

/// One line of records output for a check entry. Field order is fixed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub record: String,
    pub name: String,
    pub status: String,
    pub instances: usize,
    pub witness: Option<Witness>,
}

impl From<&CheckEntry> for Record {
    fn from(e: &CheckEntry) -> Self {
        Record {
            record: "check".into(),
            name: e.name.clone(),
            status: if e.passed() { "pass" } else { "fail" }.into(),
            instances: e.instances,
            witness: e.witness.clone(),
        }
    }
}

/// `(passed, failed)` counts recovered from records output.
pub fn count_records(text: &str) -> std::result::Result<(usize, usize), serde_json::Error> {
    let mut counts = (0, 0);
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let value: serde_json::Value = serde_json::from_str(line)?;
        if value["record"] == "check" {
            let r: Record = serde_json::from_value(value)?;
            if r.status == "pass" {
                counts.0 += 1;
            } else {
                counts.1 += 1;
            }
        }
    }
    Ok(counts)
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(ToString::to_string).collect()).collect()
}

fn names(group: &FiniteGroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| group.name(x).to_string()).collect()
}

fn emit_report(out: &mut dyn Write, report: &CheckReport, format: Format) -> io::Result<i32> {
    out.write_all(format_report(report, format).as_bytes())?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn check(a: &GFrobeniusAlgebra) -> CheckReport {
    let mut report = check_axioms(a);
    report.title = "check".into();
    match derive(a) {
        Ok(d) => {
            report.extend(check_frobenius_diagram(a, &d));
            report.extend(check_cocommutativity(a, &d));
            report.extend(action_on_dual_basis_check(a, &d));
        }
        Err(e) => report.push(CheckEntry {
            name: "derive".into(),
            instances: 1,
            witness: Some(Witness::new(vec![], e.to_string(), "nondegenerate pairings").with_note(e.category().as_str())),
        }),
    }
    report
}

fn derive_output(out: &mut dyn Write, a: &GFrobeniusAlgebra, format: Format) -> Result<()> {
    let d = derive(a)?;
    let grp = a.group();
    let mut text = String::new();
    for g in grp.elements() {
        match format {
            Format::Human => {
                let _ = writeln!(text, "theta[{}] = {}", grp.name(g), d.pairings[g]);
            }
            Format::Records => {
                let r = json!({"record": "pairing", "g": grp.name(g), "matrix": matrix_rows(&d.pairings[g])});
                let _ = writeln!(text, "{r}");
            }
        }
    }
    for g in grp.elements() {
        for h in grp.elements() {
            let m = d.coproduct_matrix(g, h);
            match format {
                Format::Human => {
                    let _ = writeln!(text, "delta[{},{}] = {}", grp.name(g), grp.name(h), m);
                }
                Format::Records => {
                    let r = json!({"record": "coproduct", "g": grp.name(g), "h": grp.name(h), "matrix": matrix_rows(&m)});
                    let _ = writeln!(text, "{r}");
                }
            }
        }
    }
    for g in grp.elements() {
        let m = d.euler_element(g);
        match format {
            Format::Human => {
                let _ = writeln!(text, "euler[{}] = {}", grp.name(g), m);
            }
            Format::Records => {
                let r = json!({"record": "euler", "g": grp.name(g), "matrix": matrix_rows(m)});
                let _ = writeln!(text, "{r}");
            }
        }
    }
    out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))
}

fn parse_labels(group: &FiniteGroup, text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| group.index_of(s))
        .collect()
}

fn execute(config: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let io_err = |e: io::Error| Error::Io(e.to_string());
    let a = resolve_algebra(config.group.as_deref(), config.algebra.as_deref())?;
    let format = config.format;
    match &config.command {
        Command::Check => emit_report(out, &check(&a), format).map_err(io_err),
        Command::Derive => {
            derive_output(out, &a, format)?;
            Ok(0)
        }
        Command::Orbifold => {
            let orb = orbifold_algebra(&a)?;
            let report = orb.certify();
            out.write_all(orb.to_untwisted().to_json().as_bytes()).map_err(io_err)?;
            out.write_all(b"\n").map_err(io_err)?;
            if !report.passed() {
                eprint!("{}", format_report(&report, Format::Human));
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Eval { cobordism } => {
            let text = if Path::new(cobordism).is_file() { read(cobordism)? } else { cobordism.clone() };
            let grp = a.group();
            let c = parse(&text, grp)?;
            let m = Tqft::new(&a)?.evaluate(&c)?;
            let body = match format {
                Format::Human => format!("{}\n", m.to_text(grp)),
                Format::Records => format!(
                    "{}\n",
                    json!({
                        "record": "map",
                        "domain": names(grp, &m.domain),
                        "codomain": names(grp, &m.codomain),
                        "matrix": matrix_rows(&m.matrix),
                    })
                ),
            };
            out.write_all(body.as_bytes()).map_err(io_err)?;
            Ok(0)
        }
        Command::Cerf { case, labels, all_labels } => {
            let cases: Vec<CerfCase> = if case.is_empty() {
                CerfCase::ALL[..4].to_vec()
            } else {
                case.iter().map(|c| c.parse()).collect::<Result<_>>()?
            };
            let t = Tqft::new(&a)?;
            let mut report = CheckReport::new("cerf");
            for c in cases {
                let r = match labels {
                    Some(text) if !all_labels => cerf_check(&t, c, &parse_labels(a.group(), text)?)?,
                    _ => cerf_check_all(&t, c)?,
                };
                report.extend(r);
            }
            report.extend(dehn_invariance_check(&t));
            report.extend(pants_ordering_check(&a));
            report.title = "cerf".into();
            emit_report(out, &report, format).map_err(io_err)
        }
        Command::Fuzz { seed, budget, trials } => {
            let t = Tqft::new(&a)?;
            let cfg = FuzzConfig {
                seed: *seed,
                trials: *trials,
                budget: (*budget).max(1),
                ..FuzzConfig::default()
            };
            let outcome = fuzz(&t, &cfg);
            let status = emit_report(out, &outcome.report, format).map_err(io_err)?;
            if let Some(cx) = outcome.counterexample {
                let text = match format {
                    Format::Human => format!(
                        "counterexample (trial {}, {}):\n  word:      {}\n  minimized: {}\n",
                        cx.trial,
                        cx.property.name(),
                        cx.word,
                        cx.minimized
                    ),
                    Format::Records => format!(
                        "{}\n",
                        json!({"record": "counterexample", "trial": cx.trial, "property": cx.property.name(),
                               "word": cx.word, "minimized": cx.minimized})
                    ),
                };
                out.write_all(text.as_bytes()).map_err(io_err)?;
            }
            Ok(status)
        }
    }
}

/// Runs one command; errors are reported on `out` with their category.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> i32 {
    match execute(config, out) {
        Ok(status) => status,
        Err(e) => {
            let category = e.category().as_str();
            let line = match config.format {
                Format::Human => format!("error[{category}]: {e}\n"),
                Format::Records => {
                    format!("{}\n", json!({"record": "error", "category": category, "message": e.to_string()}))
                }
            };
            let _ = out.write_all(line.as_bytes());
            2
        }
    }
}
