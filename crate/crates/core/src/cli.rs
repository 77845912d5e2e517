//! Command-line runner.
//!
//! Every command reads an optional TOML job document (`--config`) and then
//! applies inline flags on top of it. The resolved job is echoed into the
//! output together with the tool version, so identical jobs produce
//! byte-identical files.
//!
//! Exit codes: 0 success, 1 a verification or bound check failed, 2 the job
//! could not be parsed or validated, 3 the element budget ran out (partial
//! results are still written and flagged), 4 an internal invariant failed.
//!
//! ```toml
//! kmax = 10
//! format = "json"
//!
//! [group]
//! family = "free-abelian"
//! rank = 2
//! generators = [[1, 0], [1, 1]]
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::{classify, Thresholds};
use crate::ehrhart::{cross_polytope_series, ehrhart_sequence, root_polytope_series, LatticePolytope};
use crate::gauss::{dyadic_grid, error_exponent_fit, gauss_bound_check, R2};
use crate::group::{GroupElement, MarkedGroup};
use crate::growth::{enumerate_balls, BallTable, DEFAULT_ELEMENT_BUDGET};
use crate::series::{catalan, recognize_rational, satisfies_catalan_identity, CoefficientSequence, DEFAULT_GUARD};
use crate::theta::{compare_sequences, theta3_power, theta_coefficients, IntegralLattice};
use crate::verify;
use crate::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "growthkit", version, about = "Exact growth functions and growth series")]
pub struct Cli {
    /// TOML job document; inline flags override its values.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Decimal digits for real-valued outputs.
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    /// Cap on group elements stored during enumeration.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sphere and ball sizes with the recognized growth series.
    Growth(GroupArgs),
    /// Rate, degree and Dye diagnostics with a verdict.
    Analyze(AnalyzeArgs),
    /// Lattice points in discs.
    Gauss(GaussArgs),
    /// Lattice points in dilates of a polytope.
    Ehrhart(EhrhartArgs),
    /// Theta coefficients of an integral lattice.
    Theta(ThetaArgs),
    /// Catalan numbers.
    Catalan(CatalanArgs),
    /// Run the built-in verification suite.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyName {
    FreeAbelian,
    Free,
    Heisenberg,
    Symmetric,
    Matrix,
    Permutation,
}

#[derive(clap::Args, Debug, Default)]
pub struct GroupArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// Rank for free-abelian and free groups.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Degree for symmetric and permutation groups, dimension for matrices.
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long)]
    pub kmax: Option<usize>,
    /// Use the generators as given instead of closing them under inverses.
    #[arg(long)]
    pub no_symmetrize: bool,
}

#[derive(clap::Args, Debug, Default)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Exponential threshold as a rational, e.g. `1/10`.
    #[arg(long)]
    pub tau_exp: Option<String>,
    /// Degree-flatness threshold as a rational, e.g. `1/2`.
    #[arg(long)]
    pub tau_deg: Option<String>,
}

#[derive(clap::Args, Debug, Default)]
pub struct GaussArgs {
    #[arg(long)]
    pub tmax: Option<u64>,
    /// Check the error bound for every t up to tmax.
    #[arg(long)]
    pub check_bound: bool,
    /// Fit the error exponent over a dyadic grid up to tmax.
    #[arg(long)]
    pub fit: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    Cross,
    Root,
}

#[derive(clap::Args, Debug, Default)]
pub struct EhrhartArgs {
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Dimension of the cross-polytope or rank of the root polytope.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub kmax: Option<u64>,
}

#[derive(clap::Args, Debug, Default)]
pub struct ThetaArgs {
    /// Use the standard lattice Z^rank.
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long)]
    pub rmax: Option<usize>,
}

#[derive(clap::Args, Debug, Default)]
pub struct CatalanArgs {
    #[arg(long)]
    pub kmax: Option<usize>,
}

#[derive(clap::Args, Debug, Default)]
pub struct VerifyArgs {
    /// Run only these check numbers.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<u32>,
}

/// The TOML job document.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDoc {
    pub format: Option<Format>,
    pub precision: Option<u32>,
    pub budget: Option<usize>,
    pub kmax: Option<usize>,
    pub rmax: Option<usize>,
    pub tmax: Option<u64>,
    pub group: Option<GroupDoc>,
    pub analyze: Option<AnalyzeDoc>,
    pub gauss: Option<GaussDoc>,
    pub polytope: Option<PolytopeDoc>,
    pub lattice: Option<LatticeDoc>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub family: Option<FamilyName>,
    pub rank: Option<usize>,
    pub degree: Option<usize>,
    /// Shape depends on the family: integer vectors, words of nonzero
    /// letters, square integer matrices, or 1-based image lists.
    pub generators: Option<Vec<toml::Value>>,
    pub symmetrize: Option<bool>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalyzeDoc {
    pub tau_exp: Option<String>,
    pub tau_deg: Option<String>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaussDoc {
    pub check_bound: Option<bool>,
    pub fit: Option<bool>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    pub preset: Option<Preset>,
    pub n: Option<usize>,
    pub ambient_dim: Option<usize>,
    pub lattice_basis: Option<Vec<Vec<i64>>>,
    pub vertices: Option<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub gram: Option<Vec<Vec<i64>>>,
}

/// Reads and parses a job document; errors carry the file, line and field.
pub fn load_config(path: &Path) -> Result<ConfigDoc> {
    let text = fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    parse_config(&text).map_err(|e| match e {
        Error::Config(m) => Error::Config(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn parse_config(text: &str) -> Result<ConfigDoc> {
    toml::from_str(text).map_err(|e| {
        let loc = e
            .span()
            .map(|s| {
                let line = text[..s.start].matches('\n').count() + 1;
                format!("line {line}: ")
            })
            .unwrap_or_default();
        Error::Config(format!("{loc}{}", e.message()))
    })
}

/// Result of one invocation: exit status and the rendered output.
#[derive(Debug)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Structural(_) | Error::Config(_) | Error::Argument(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        Error::InvariantViolation(_) => 4,
        Error::CheckFailure { .. } => 1,
    }
}

/// Parses `args` (including the program name), runs the job, writes the
/// output and returns the exit status. Diagnostics go to standard error.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.output) {
                eprintln!("error: {e}");
                return 2;
            }
            out.status
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(p) => fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Global settings after merging the document and the flags.
struct Settings {
    format: Format,
    precision: u32,
    budget: usize,
    doc: ConfigDoc,
}

fn positive<T: PartialOrd + Default + std::fmt::Display>(name: &str, v: T) -> Result<T> {
    if v > T::default() {
        Ok(v)
    } else {
        Err(Error::Config(format!("field `{name}`: must be positive, got {v}")))
    }
}

fn settings(cli: &Cli) -> Result<Settings> {
    let doc = match &cli.config {
        Some(p) => load_config(p)?,
        None => ConfigDoc::default(),
    };
    let format = cli.format.or(doc.format).unwrap_or(Format::Csv);
    let precision = positive("precision", cli.precision.or(doc.precision).unwrap_or(crate::decimal::DEFAULT_DIGITS))?;
    let budget = positive("budget", cli.budget.or(doc.budget).unwrap_or(DEFAULT_ELEMENT_BUDGET))?;
    Ok(Settings { format, precision, budget, doc })
}

/// Runs the parsed command without writing anything.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let s = settings(cli)?;
    match &cli.command {
        Command::Growth(a) => run_growth(&s, a),
        Command::Analyze(a) => run_analyze(&s, a),
        Command::Gauss(a) => run_gauss(&s, a),
        Command::Ehrhart(a) => run_ehrhart(&s, a),
        Command::Theta(a) => run_theta(&s, a),
        Command::Catalan(a) => run_catalan(&s, a),
        Command::Verify(a) => run_verify(&s, a),
    }
}

/// Wraps a result in the common envelope.
fn render(s: &Settings, command: &str, spec: Value, result: Value, csv_body: String, partial: bool) -> String {
    let echo = json!({ "command": command, "format": s.format, "precision": s.precision, "budget": s.budget, "job": spec });
    match s.format {
        Format::Json => {
            let doc = json!({
                "tool": "growthkit",
                "version": VERSION,
                "spec": echo,
                "partial": partial,
                "result": result,
            });
            let mut out = serde_json::to_string_pretty(&doc).expect("JSON value serializes");
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut out = format!("# growthkit {VERSION}\n# spec: {echo}\n");
            if partial {
                out.push_str("# partial: true\n");
            }
            out.push_str(&csv_body);
            out
        }
    }
}

fn ints_of(v: &toml::Value, field: &str) -> Result<Vec<i64>> {
    v.as_array()
        .ok_or_else(|| Error::Config(format!("field `{field}`: expected an array of integers")))?
        .iter()
        .enumerate()
        .map(|(i, x)| {
            x.as_integer().ok_or_else(|| Error::Config(format!("field `{field}[{i}]`: expected an integer")))
        })
        .collect()
}

fn matrix_of(v: &toml::Value, field: &str) -> Result<Vec<Vec<i64>>> {
    v.as_array()
        .ok_or_else(|| Error::Config(format!("field `{field}`: expected an array of rows")))?
        .iter()
        .enumerate()
        .map(|(i, r)| ints_of(r, &format!("{field}[{i}]")))
        .collect()
}

fn tag(field: &str, e: Error) -> Error {
    match e {
        Error::Structural(m) | Error::Config(m) | Error::Argument(m) => Error::Config(format!("field `{field}`: {m}")),
        other => other,
    }
}

/// Builds the marked group from the `[group]` table and the flags.
fn build_group(doc: &GroupDoc) -> Result<MarkedGroup> {
    let family = doc.family.ok_or_else(|| Error::Config("field `group.family`: missing".into()))?;
    let need = |name: &str, v: Option<usize>| -> Result<usize> {
        let v = v.ok_or_else(|| Error::Config(format!("field `group.{name}`: required for this family")))?;
        positive(&format!("group.{name}"), v)
    };
    let gens = doc.generators.as_deref();
    let elements = |parse: &dyn Fn(&toml::Value, &str) -> Result<GroupElement>| -> Result<Option<Vec<GroupElement>>> {
        gens.map(|g| {
            g.iter()
                .enumerate()
                .map(|(i, v)| {
                    let field = format!("group.generators[{i}]");
                    parse(v, &field).map_err(|e| tag(&field, e))
                })
                .collect()
        })
        .transpose()
    };
    use crate::group::Family;
    let group = match family {
        FamilyName::FreeAbelian => {
            let rank = need("rank", doc.rank)?;
            match elements(&|v, f| ints_of(v, f).map(GroupElement::abelian))? {
                Some(g) => MarkedGroup::new(Family::FreeAbelian { rank }, g, true),
                None => MarkedGroup::free_abelian(rank),
            }
        }
        FamilyName::Free => {
            let rank = need("rank", doc.rank)?;
            let parse = |v: &toml::Value, f: &str| -> Result<GroupElement> {
                let letters = ints_of(v, f)?
                    .into_iter()
                    .map(|x| i32::try_from(x).map_err(|_| Error::Config(format!("letter {x} out of range"))))
                    .collect::<Result<Vec<_>>>()?;
                GroupElement::word(letters)
            };
            match elements(&parse)? {
                Some(g) => MarkedGroup::new(Family::Free { rank }, g, true),
                None => MarkedGroup::free_group(rank),
            }
        }
        FamilyName::Heisenberg => match elements(&|v, f| GroupElement::matrix(&matrix_of(v, f)?))? {
            Some(g) => MarkedGroup::new(Family::Matrix { dim: 3 }, g, true),
            None => MarkedGroup::heisenberg(),
        },
        FamilyName::Symmetric => {
            let degree = need("degree", doc.degree)?;
            let parse = |v: &toml::Value, f: &str| -> Result<GroupElement> {
                let images = ints_of(v, f)?
                    .into_iter()
                    .map(|x| usize::try_from(x).map_err(|_| Error::Config(format!("image {x} out of range"))))
                    .collect::<Result<Vec<_>>>()?;
                GroupElement::permutation(&images)
            };
            match elements(&parse)? {
                Some(g) => MarkedGroup::new(Family::Permutation { degree }, g, true),
                None => MarkedGroup::symmetric_coxeter(degree),
            }
        }
        FamilyName::Matrix => {
            let dim = need("degree", doc.degree)?;
            let g = elements(&|v, f| GroupElement::matrix(&matrix_of(v, f)?))?
                .ok_or_else(|| Error::Config("field `group.generators`: required for matrix groups".into()))?;
            MarkedGroup::new(Family::Matrix { dim }, g, true)
        }
        FamilyName::Permutation => {
            let degree = need("degree", doc.degree)?;
            let parse = |v: &toml::Value, f: &str| -> Result<GroupElement> {
                let images = ints_of(v, f)?
                    .into_iter()
                    .map(|x| usize::try_from(x).map_err(|_| Error::Config(format!("image {x} out of range"))))
                    .collect::<Result<Vec<_>>>()?;
                GroupElement::permutation(&images)
            };
            let g = elements(&parse)?
                .ok_or_else(|| Error::Config("field `group.generators`: required for permutation groups".into()))?;
            MarkedGroup::new(Family::Permutation { degree }, g, true)
        }
    }
    .map_err(|e| tag("group", e))?;
    Ok(group.with_symmetrize(doc.symmetrize.unwrap_or(true)))
}

fn merged_group_doc(s: &Settings, a: &GroupArgs) -> GroupDoc {
    let mut g = s.doc.group.clone().unwrap_or_default();
    if a.family.is_some() {
        // switching family on the command line discards file generators
        if a.family != g.family {
            g.generators = None;
        }
        g.family = a.family;
    }
    g.rank = a.rank.or(g.rank);
    g.degree = a.degree.or(g.degree);
    if a.no_symmetrize {
        g.symmetrize = Some(false);
    }
    g
}

/// Table and error for a budget overrun: the partial table is reported.
fn tabulate(group: &MarkedGroup, kmax: usize, budget: usize) -> Result<(BallTable, Option<Error>)> {
    match enumerate_balls(group, kmax, budget) {
        Ok(t) => Ok((t, None)),
        Err(Error::BudgetExceeded { budget, last_completed_radius, partial }) => {
            let t = (*partial).clone();
            Ok((t, Some(Error::BudgetExceeded { budget, last_completed_radius, partial })))
        }
        Err(e) => Err(e),
    }
}

fn run_growth(s: &Settings, a: &GroupArgs) -> Result<Outcome> {
    let gdoc = merged_group_doc(s, a);
    let group = build_group(&gdoc)?;
    let kmax = positive("kmax", a.kmax.or(s.doc.kmax).unwrap_or(10))?;
    let (table, overrun) = tabulate(&group, kmax, s.budget)?;
    let seq = CoefficientSequence::from_biguints(&table.sphere_sizes)?;
    let series = if overrun.is_none() && seq.len() >= 2 * DEFAULT_GUARD + 2 {
        recognize_rational(&seq, DEFAULT_GUARD)?
    } else {
        None
    };
    let spec = json!({ "group": gdoc, "describe": group.describe(), "kmax": kmax });
    let mut result = table.to_json();
    result["growth_series"] = series.as_ref().map_or(Value::Null, |f| f.to_json());
    result["growth_series_text"] = series.as_ref().map_or(Value::Null, |f| Value::String(f.to_string()));
    if let Some(Error::BudgetExceeded { last_completed_radius, .. }) = &overrun {
        result["last_completed_radius"] = json!(last_completed_radius);
    }
    let mut csv = table.to_csv();
    csv.push_str(&format!(
        "# series: {}\n",
        series.as_ref().map_or("not recognized".to_string(), |f| f.to_string())
    ));
    let out = render(s, "growth", spec, result, csv, overrun.is_some());
    if let Some(e) = overrun {
        eprintln!("error: {e}");
        return Ok(Outcome { status: 3, output: out });
    }
    Ok(Outcome { status: 0, output: out })
}

fn parse_rational(field: &str, text: &str) -> Result<BigRational> {
    let bad = || Error::Config(format!("field `{field}`: expected a rational like 1/10, got {text:?}"));
    let r = match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(text.trim().parse().map_err(|_| bad())?),
    };
    if r <= BigRational::from_integer(0.into()) {
        return Err(Error::Config(format!("field `{field}`: must be positive")));
    }
    Ok(r)
}

fn run_analyze(s: &Settings, a: &AnalyzeArgs) -> Result<Outcome> {
    let gdoc = merged_group_doc(s, &a.group);
    let group = build_group(&gdoc)?;
    let kmax = positive("kmax", a.group.kmax.or(s.doc.kmax).unwrap_or(12))?;
    let adoc = s.doc.analyze.clone().unwrap_or_default();
    let mut th = Thresholds { precision_digits: s.precision, ..Thresholds::default() };
    if let Some(t) = a.tau_exp.as_ref().or(adoc.tau_exp.as_ref()) {
        th.tau_exp = parse_rational("analyze.tau_exp", t)?;
    }
    if let Some(t) = a.tau_deg.as_ref().or(adoc.tau_deg.as_ref()) {
        th.tau_deg = parse_rational("analyze.tau_deg", t)?;
    }
    let (table, overrun) = tabulate(&group, kmax, s.budget)?;
    let spec = json!({ "group": gdoc, "describe": group.describe(), "kmax": kmax, "thresholds": th });
    if let Some(e) = overrun {
        eprintln!("error: {e}");
        let out = render(s, "analyze", spec, table.to_json(), table.to_csv(), true);
        return Ok(Outcome { status: 3, output: out });
    }
    let report = classify(&table, &th)?;
    let mut csv = String::from("k,beta,rate,running_min,degree\n");
    for k in 0..=table.radius_max {
        let rate = report.rate.radii.iter().position(|&r| r == k);
        let deg = report.degree.radii.iter().position(|&r| r == k);
        csv.push_str(&format!(
            "{k},{},{},{},{}\n",
            table.ball(k),
            rate.map_or(String::new(), |i| report.rate.estimates[i].to_string()),
            rate.map_or(String::new(), |i| report.rate.running_min[i].to_string()),
            deg.map_or(String::new(), |i| report.degree.values[i].to_string()),
        ));
    }
    csv.push_str(&format!("# dye: {} (argmin k = {})\n", report.dye.value, report.dye.argmin));
    csv.push_str(&format!("# verdict: {}\n", serde_json::to_string(&report.verdict).expect("verdict serializes")));
    Ok(Outcome { status: 0, output: render(s, "analyze", spec, report.to_json(), csv, false) })
}

fn run_gauss(s: &Settings, a: &GaussArgs) -> Result<Outcome> {
    let gdoc = s.doc.gauss.clone().unwrap_or_default();
    let tmax = a.tmax.or(s.doc.tmax).unwrap_or(100_000);
    let check = a.check_bound || gdoc.check_bound.unwrap_or(false);
    let fit = a.fit || gdoc.fit.unwrap_or(false);
    let spec = json!({ "tmax": tmax, "check_bound": check, "fit": fit });
    let mut result = json!({ "t": tmax, "R": R2(tmax).to_string() });
    let mut csv = format!("t,R\n{tmax},{}\n", R2(tmax));
    let mut status = 0;
    if check {
        let ts: Vec<u64> = (0..=tmax).collect();
        match gauss_bound_check(&ts, s.precision) {
            Ok(rep) => {
                let last = rep.rows.last().expect("nonempty");
                result["bound_check"] = json!({ "pass": true, "checked": rep.rows.len(), "margin": rep.margin, "last": last });
                csv.push_str(&format!("# bound check: pass for all {} values of t <= {tmax}\n", rep.rows.len()));
            }
            Err(Error::CheckFailure { t, detail }) => {
                result["bound_check"] = json!({ "pass": false, "t": t, "detail": detail });
                csv.push_str(&format!("# bound check: FAIL at t = {t}: {detail}\n"));
                status = 1;
            }
            Err(e) => return Err(e),
        }
    }
    if fit {
        let f = error_exponent_fit(&dyadic_grid(tmax))?;
        csv.push_str(&format!("# exponent fit: alpha = {:.4}, residual = {:.4}\n", f.alpha, f.residual));
        result["fit"] = serde_json::to_value(&f).expect("fit serializes");
    }
    Ok(Outcome { status, output: render(s, "gauss", spec, result, csv, false) })
}

fn run_ehrhart(s: &Settings, a: &EhrhartArgs) -> Result<Outcome> {
    let mut pdoc = s.doc.polytope.clone().unwrap_or_default();
    if a.preset.is_some() {
        pdoc.preset = a.preset;
    }
    pdoc.n = a.n.or(pdoc.n);
    let kmax = a.kmax.or(s.doc.kmax.map(|k| k as u64)).unwrap_or(6);
    let (polytope, closed) = match pdoc.preset {
        Some(preset) => {
            let n = positive("polytope.n", pdoc.n.ok_or_else(|| Error::Config("field `polytope.n`: required for presets".into()))?)?;
            match preset {
                Preset::Cross => (LatticePolytope::cross_polytope(n)?, Some(cross_polytope_series(n as i64)?)),
                Preset::Root => (LatticePolytope::root_polytope(n)?, Some(root_polytope_series(n as i64)?)),
            }
        }
        None => {
            let missing = |f: &str| Error::Config(format!("field `polytope.{f}`: required without a preset"));
            let d = pdoc.ambient_dim.ok_or_else(|| missing("ambient_dim"))?;
            let basis = pdoc.lattice_basis.clone().ok_or_else(|| missing("lattice_basis"))?;
            let verts = pdoc.vertices.clone().ok_or_else(|| missing("vertices"))?;
            (LatticePolytope::new(d, basis, verts).map_err(|e| tag("polytope", e))?, None)
        }
    };
    let seq = ehrhart_sequence(&polytope, kmax)?;
    if let Some(f) = &closed {
        if f.expand(kmax as usize) != seq {
            return Err(Error::InvariantViolation("lattice point counts disagree with the closed form".into()));
        }
    }
    let series = if seq.len() >= 2 * DEFAULT_GUARD + 2 { recognize_rational(&seq, DEFAULT_GUARD)? } else { None };
    let spec = json!({ "polytope": pdoc, "kmax": kmax });
    let result = json!({
        "affine_dimension": polytope.affine_dimension(),
        "counts": seq.to_json(),
        "closed_form": closed.as_ref().map(|f| f.to_json()),
        "series": series.as_ref().map(|f| f.to_json()),
        "series_text": series.as_ref().map(|f| f.to_string()),
    });
    let mut csv = String::from("k,count\n");
    for (k, c) in seq.coeffs().iter().enumerate() {
        csv.push_str(&format!("{k},{c}\n"));
    }
    csv.push_str(&format!("# series: {}\n", series.as_ref().map_or("not recognized".to_string(), |f| f.to_string())));
    Ok(Outcome { status: 0, output: render(s, "ehrhart", spec, result, csv, false) })
}

fn run_theta(s: &Settings, a: &ThetaArgs) -> Result<Outcome> {
    let rmax = a.rmax.or(s.doc.rmax).unwrap_or(20);
    let gram = match (a.rank, s.doc.lattice.as_ref().and_then(|l| l.gram.clone())) {
        (Some(n), _) => IntegralLattice::standard(positive("rank", n)?)?.gram().to_vec(),
        (None, Some(g)) => g,
        (None, None) => return Err(Error::Config("field `lattice.gram`: missing (or pass --rank)".into())),
    };
    let lattice = IntegralLattice::new(gram.clone()).map_err(|e| tag("lattice.gram", e))?;
    let theta = theta_coefficients(&lattice, rmax);
    let standard = IntegralLattice::standard(lattice.rank())?;
    let matches_theta3 = (lattice == standard)
        .then(|| compare_sequences(&theta.to_sequence(), &theta3_power(lattice.rank() as u32, rmax)).is_full_match());
    if matches_theta3 == Some(false) {
        return Err(Error::InvariantViolation("enumeration disagrees with the theta3 power".into()));
    }
    let spec = json!({ "gram": gram, "rmax": rmax });
    let mut result = serde_json::to_value(&theta).expect("theta serializes");
    result["matches_theta3_power"] = json!(matches_theta3);
    Ok(Outcome { status: 0, output: render(s, "theta", spec, result, theta.to_csv(), false) })
}

fn run_catalan(s: &Settings, a: &CatalanArgs) -> Result<Outcome> {
    let kmax = a.kmax.or(s.doc.kmax).unwrap_or(20);
    let c = catalan(kmax);
    if !satisfies_catalan_identity(&c) {
        return Err(Error::InvariantViolation("C = 1 + zC^2 fails".into()));
    }
    let mut csv = String::from("k,c\n");
    for (k, v) in c.coeffs().iter().enumerate() {
        csv.push_str(&format!("{k},{v}\n"));
    }
    let result = json!({ "coefficients": c.to_json(), "identity_holds": true });
    Ok(Outcome { status: 0, output: render(s, "catalan", json!({ "kmax": kmax }), result, csv, false) })
}

fn run_verify(s: &Settings, a: &VerifyArgs) -> Result<Outcome> {
    let results = if a.only.is_empty() {
        verify::run_all()
    } else {
        a.only.iter().map(|&id| verify::run_criterion(id)).collect::<Result<Vec<_>>>()?
    };
    let all = results.iter().all(|r| r.pass);
    let mut text = String::new();
    for r in &results {
        text.push_str(&r.line());
        text.push('\n');
    }
    text.push_str(&format!("{} of {} checks passed\n", results.iter().filter(|r| r.pass).count(), results.len()));
    // timings vary between runs, so they stay out of the JSON document
    let result = json!({
        "pass": all,
        "checks": results.iter().map(|r| json!({ "id": r.id, "name": r.name, "pass": r.pass, "detail": r.detail })).collect::<Vec<_>>(),
    });
    let out = match s.format {
        Format::Json => render(s, "verify", json!({ "only": a.only }), result, String::new(), false),
        Format::Csv => text,
    };
    Ok(Outcome { status: if all { 0 } else { 1 }, output: out })
}
