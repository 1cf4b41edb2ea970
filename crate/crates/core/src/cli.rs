//! The `oneplane` command line.
//!
//! Every command writes a JSON payload (DOT for `export-dot`, a drawing for
//! `construct`) to standard output and a short summary to standard error.
//! Exit codes: 0 when every checked property holds, 1 when one fails, 2 on
//! invalid input or a guard refusal.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algorithms::{
    matching_oracle, maximum_matching, scattering_number_with_limit, tutte_berge_in, TutteBergeMode, DEFAULT_MAX_N,
    EXHAUSTIVE_MAX_N,
};
use crate::constructions::{build_cocktail8, build_figure1, build_g0, quad_diag_instance};
use crate::drawing::OnePlaneDrawing;
use crate::graph::VertexSet;
use crate::reduction::{certify_all_cuts, certify_cut};
use crate::{Error, Result};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "oneplane", version, about = "Checks, classifies and certifies 1-plane drawings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a drawing.
    Check { drawing: PathBuf },
    /// Classify every crossing of a drawing.
    Classify { drawing: PathBuf },
    /// Maximum matching and the near-perfect verdict.
    Match {
        input: PathBuf,
        /// Cross-check against the brute-force oracle (n <= 12).
        #[arg(long)]
        oracle: bool,
    },
    /// Certify the bound c(G - S) - |S| <= 1 for one cut or for all small cuts.
    Certify(CertifyArgs),
    /// Exhaustive scattering number.
    Scatter {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Write a bundled or generated drawing.
    Construct(ConstructArgs),
    /// Graphviz rendering of the planarization.
    ExportDot { drawing: PathBuf },
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["cut", "all_cuts"]))]
pub struct CertifyArgs {
    pub drawing: PathBuf,
    /// Comma-separated vertex ids of S.
    #[arg(long, value_delimiter = ',')]
    pub cut: Option<Vec<String>>,
    /// Every disconnecting set up to --max-size.
    #[arg(long, requires = "max_size")]
    pub all_cuts: bool,
    #[arg(long)]
    pub max_size: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Figure1,
    G0,
    Cocktail8,
    QuadDiag,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub kind: Construction,
    /// Vertex count of the quadrangulation.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Use edge-disjoint faces and delete one pair of sides in each.
    #[arg(long)]
    pub sparsify: bool,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

/// Exit code, standard output and standard error of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn json(code: i32, payload: &impl Serialize, stderr: String) -> Self {
        let stdout = serde_json::to_string_pretty(payload).expect("payloads serialize") + "\n";
        CommandResult { code, stdout, stderr }
    }
}

fn verdict_code(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command).unwrap_or_else(|e| error_result(&e)),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_PASS };
            let text = e.render().to_string();
            if e.use_stderr() {
                CommandResult { code, stdout: String::new(), stderr: text }
            } else {
                CommandResult { code, stdout: text, stderr: String::new() }
            }
        }
    }
}

fn error_result(e: &Error) -> CommandResult {
    let (kind, code) = match e {
        Error::Graph(_) => ("graph", EXIT_INVALID),
        Error::Json(_) => ("json", EXIT_INVALID),
        Error::Schema { .. } => ("schema", EXIT_INVALID),
        Error::InvalidDrawing(_) => ("invalid-drawing", EXIT_INVALID),
        Error::Precondition(_) => ("precondition", EXIT_INVALID),
        Error::Guard { .. } => ("guard", EXIT_INVALID),
        Error::Undefined(_) => ("undefined", EXIT_INVALID),
        Error::Invariant(_) => ("invariant", EXIT_FAIL),
    };
    let mut payload = json!({ "error": { "kind": kind, "message": e.to_string() } });
    match e {
        Error::Guard { guard, .. } => payload["error"]["guard"] = json!(guard),
        Error::Schema { at, .. } => payload["error"]["at"] = json!(at),
        Error::Json(j) => payload["error"]["at"] = json!(format!("line {} column {}", j.line(), j.column())),
        _ => {}
    }
    CommandResult::json(code, &payload, format!("error: {e}\n"))
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))
}

fn load_drawing(path: &PathBuf) -> Result<OnePlaneDrawing> {
    OnePlaneDrawing::from_json(&read(path)?)
}

fn load_any(path: &PathBuf) -> Result<OnePlaneDrawing> {
    OnePlaneDrawing::from_graph_or_drawing_json(&read(path)?)
}

fn execute(cmd: &Command) -> Result<CommandResult> {
    match cmd {
        Command::Check { drawing } => {
            let d = load_drawing(drawing)?;
            let r = d.validate();
            let mut err = format!(
                "{}: n = {}, e = {}, crossings = {}, type-2A = {}, nice = {}\n",
                if r.valid { "valid" } else { "INVALID" },
                r.vertices,
                r.edges,
                r.crossing_count,
                r.is_type_2a_drawing,
                r.is_nice
            );
            for v in &r.violations {
                let _ = writeln!(err, "  {v:?}");
            }
            Ok(CommandResult::json(verdict_code(r.valid), &r, err))
        }
        Command::Classify { drawing } => {
            let d = load_drawing(drawing)?;
            let (classes, report) = d.classify()?;
            let mut err = String::new();
            for c in &classes {
                let _ = writeln!(err, "#{:<3} {} x {}  {}", c.index, c.pair.first(), c.pair.second(), c.label());
            }
            let _ = writeln!(
                err,
                "overall type {}, type-2A = {}, nice = {}",
                report.overall_type, report.is_type_2a_drawing, report.is_nice
            );
            Ok(CommandResult::json(EXIT_PASS, &json!({ "crossings": classes, "report": report }), err))
        }
        Command::Match { input, oracle } => {
            let d = load_any(input)?;
            let g = d.graph();
            let m = maximum_matching(g);
            let n = g.n();
            let near_perfect = m.size() == n / 2;
            let mode = if n <= EXHAUSTIVE_MAX_N { TutteBergeMode::Exhaustive } else { TutteBergeMode::GallaiEdmonds };
            let witness = tutte_berge_in(g, mode)?;
            let berge = witness.implied_matching_number(n) == m.size() as i64;
            let oracle_size = if *oracle { Some(matching_oracle(g)?.size()) } else { None };
            let agrees = oracle_size.is_none_or(|k| k == m.size());
            let payload = json!({
                "n": n,
                "matching_number": m.size(),
                "floor_half_n": n / 2,
                "near_perfect": near_perfect,
                "matching": m.edges,
                "deficiency_witness": witness,
                "deficiency_mode": mode,
                "berge_identity": berge,
                "oracle_matching_number": oracle_size,
                "oracle_agrees": agrees,
            });
            if !berge || !agrees {
                return Err(Error::Invariant("matching number disagrees with its cross-check".into()));
            }
            let err = format!(
                "alpha' = {}, floor(n/2) = {}, near-perfect = {near_perfect}, deficiency = {}\n",
                m.size(),
                n / 2,
                witness.deficiency
            );
            Ok(CommandResult::json(verdict_code(near_perfect), &payload, err))
        }
        Command::Certify(args) => {
            let d = load_drawing(&args.drawing)?;
            if let Some(cut) = &args.cut {
                let s: VertexSet = cut.iter().map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect();
                let c = certify_cut(&d, &s)?;
                let err = format!(
                    "|S| = {}, components = {}, c(G - S) - |S| = {}, {}\n",
                    c.cut_size,
                    c.ell,
                    c.conclusion.direct_value,
                    c.verdict.first_failure.as_deref().map_or("PASS".to_string(), |f| format!("FAIL: {f}"))
                );
                Ok(CommandResult::json(verdict_code(c.verdict.pass), &c, err))
            } else {
                let k = args.max_size.expect("clap requires --max-size with --all-cuts");
                let r = certify_all_cuts(&d, k)?;
                let failed = r.certificates.iter().filter(|c| !c.verdict.pass).count();
                let mut err = format!("{} candidate sets, {} cuts, {} failing\n", r.examined, r.cut_count, failed);
                if let Some(c) = r.certificates.iter().find(|c| !c.verdict.pass) {
                    let _ = writeln!(
                        err,
                        "first failing S = {{{}}}: {}",
                        c.s.join(","),
                        c.verdict.first_failure.as_deref().unwrap_or("")
                    );
                }
                Ok(CommandResult::json(verdict_code(r.all_pass), &r, err))
            }
        }
        Command::Scatter { input, max_n } => {
            let d = load_any(input)?;
            let w = scattering_number_with_limit(d.graph(), *max_n)?;
            let err = format!("s(G) = {} attained by |S| = {}\n", w.value, w.s.len());
            let payload = json!({ "scattering_number": w.value, "witness": w, "at_most_one": w.value <= 1 });
            Ok(CommandResult::json(verdict_code(w.value <= 1), &payload, err))
        }
        Command::Construct(args) => construct(args),
        Command::ExportDot { drawing } => {
            let d = load_drawing(drawing)?;
            Ok(CommandResult { code: EXIT_PASS, stdout: d.to_dot(), stderr: String::new() })
        }
    }
}

fn construct(args: &ConstructArgs) -> Result<CommandResult> {
    if args.kind != Construction::QuadDiag && (args.n.is_some() || args.sparsify) {
        return Err(Error::Precondition("--n and --sparsify apply only to quad-diag".into()));
    }
    let d = match args.kind {
        Construction::Figure1 => build_figure1(),
        Construction::G0 => build_g0(),
        Construction::Cocktail8 => build_cocktail8(),
        Construction::QuadDiag => {
            let n = args.n.ok_or_else(|| Error::Precondition("quad-diag needs --n".into()))?;
            quad_diag_instance(n, args.seed, args.sparsify)?
        }
    };
    let text = d.to_json() + "\n";
    let summary = format!("n = {}, e = {}, crossings = {}\n", d.graph().n(), d.graph().e(), d.crossings().len());
    match &args.output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))?;
            Ok(CommandResult { code: EXIT_PASS, stdout: String::new(), stderr: summary })
        }
        None => Ok(CommandResult { code: EXIT_PASS, stdout: text, stderr: summary }),
    }
}
