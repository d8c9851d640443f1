//! The `largescale` command-line tool: every library operation behind one subcommand, with
//! canonical JSON on standard output.

pub mod commands;
pub mod error;
pub mod files;
pub mod output;
pub mod svg;
pub mod verify;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use largescale::linalg::{FieldConfig, Fp, Rationals};
use largescale::presentation::Multidegree;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub use error::CliError;
use files::{Inputs, ModuleSpec};

pub fn parse_degree(s: &str) -> Result<Multidegree, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| format!("`{s}` is not a comma-separated integer vector"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Multidegree::new)
}

#[derive(Parser, Debug)]
#[command(
    name = "largescale",
    version,
    about = "Multiparameter persistence modules up to large-scale equivalence"
)]
pub struct Cli {
    /// Field characteristic: a prime, or 0 for the rationals. Overrides the input files.
    #[arg(long = "char", global = true, value_name = "P")]
    pub characteristic: Option<u64>,
    /// Add elapsed wall-clock time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ModuleArg {
    /// Module file, or `named:NAME` (see `largescale named --list`)
    pub module: String,
}

#[derive(Args, Debug, Clone)]
pub struct RepArg {
    /// Representation file, or a module when `-n` is given
    pub rep: String,
    /// Convert the module input at leg length N first
    #[arg(short = 'n')]
    pub n: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArg {
    /// Also write the resulting file here
    #[arg(short = 'o', long = "output", value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimensions on the box [LO, HI]
    Dims {
        #[command(flatten)]
        m: ModuleArg,
        #[arg(long = "box", value_name = "HI", value_parser = parse_degree, allow_hyphen_values = true)]
        hi: Multidegree,
        #[arg(long, value_name = "LO", value_parser = parse_degree, allow_hyphen_values = true)]
        lo: Option<Multidegree>,
    },
    /// Matrix of the transition map M(a) -> M(b)
    Transition {
        #[command(flatten)]
        m: ModuleArg,
        /// Lower degree, comma-separated
        #[arg(value_parser = parse_degree, allow_hyphen_values = true)]
        a: Multidegree,
        /// Upper degree, comma-separated
        #[arg(value_parser = parse_degree, allow_hyphen_values = true)]
        b: Multidegree,
    },
    /// Rank invariant rk(a, b)
    Rank {
        #[command(flatten)]
        m: ModuleArg,
        /// Lower degree, comma-separated
        #[arg(value_parser = parse_degree, allow_hyphen_values = true)]
        a: Multidegree,
        /// Upper degree, comma-separated
        #[arg(value_parser = parse_degree, allow_hyphen_values = true)]
        b: Multidegree,
    },
    /// Degree past which all transitions are isomorphisms
    Bound {
        #[command(flatten)]
        m: ModuleArg,
    },
    /// Direct sum of modules
    Sum {
        #[arg(num_args = 2.., required = true)]
        modules: Vec<String>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Shift all degrees by E
    Shift {
        #[command(flatten)]
        m: ModuleArg,
        #[arg(value_parser = parse_degree)]
        by: Multidegree,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Built-in example modules and maps
    Named {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Seeded random presentation
    Random {
        /// Seed for the generator; equal seeds give equal modules
        #[arg(long)]
        seed: u64,
        /// Comma-separated `key=value` pairs among m, max_gens, max_rels, max_degree
        #[arg(long)]
        params: Option<String>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Rank of M localized at SIGMA; a and b list the coordinates outside SIGMA
    LocalizedRank {
        #[command(flatten)]
        m: ModuleArg,
        /// Inverted variables, e.g. `1,3`; empty by default
        #[arg(long, default_value = "")]
        sigma: String,
        /// Lower degree, comma-separated
        #[arg(value_parser = parse_degree, allow_hyphen_values = true)]
        a: Multidegree,
        /// Upper degree, comma-separated
        #[arg(value_parser = parse_degree, allow_hyphen_values = true)]
        b: Multidegree,
    },
    /// Dimension of M localized at SIGMA at degree d
    LocalizedDim {
        #[command(flatten)]
        m: ModuleArg,
        #[arg(long, default_value = "")]
        sigma: String,
        /// Degree, comma-separated
        #[arg(value_parser = parse_degree, allow_hyphen_values = true)]
        d: Multidegree,
    },
    /// Barcode along one axis after inverting all other variables
    Barcode {
        #[command(flatten)]
        m: ModuleArg,
        #[arg(long)]
        axis: usize,
    },
    /// Vertical and horizontal strips of a two-parameter module
    Strips {
        #[command(flatten)]
        m: ModuleArg,
    },
    /// Image filtrations of the stable corner and their intersection table
    Bifiltration {
        #[command(flatten)]
        m: ModuleArg,
    },
    /// Quadrant corners with multiplicities
    Quadrants {
        #[command(flatten)]
        m: ModuleArg,
    },
    /// Strips and quadrants of a two-parameter module
    Decompose {
        #[command(flatten)]
        m: ModuleArg,
        /// Draw the decomposition here
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Module realizing a decomposition file
    Reconstruct {
        file: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Whether two modules agree up to finite modules
    Equivalent { first: String, second: String },
    /// Delocalized dimensions on the box [0, HI]
    Delocalize {
        #[command(flatten)]
        m: ModuleArg,
        #[arg(long = "box", value_name = "HI", value_parser = parse_degree)]
        hi: Multidegree,
    },
    /// Dimension of im(M(a) -> M(c)) ∩ im(M(b) -> M(c))
    Ibar {
        #[command(flatten)]
        m: ModuleArg,
        /// First lower degree
        #[arg(value_parser = parse_degree, allow_hyphen_values = true)]
        a: Multidegree,
        /// Second lower degree
        #[arg(value_parser = parse_degree, allow_hyphen_values = true)]
        b: Multidegree,
        /// Common upper degree
        #[arg(value_parser = parse_degree, allow_hyphen_values = true)]
        c: Multidegree,
    },
    /// Whether a map admits a section after localization
    SectionExists {
        /// Map file, or `named:notsplit`
        map: String,
    },
    /// Validate and print a complex
    Complex { complex: String },
    /// Minimal non-faces of a complex
    MissingFaces { complex: String },
    /// Support complex of a module
    Support {
        #[command(flatten)]
        m: ModuleArg,
    },
    /// Whether localizing at K kills the module
    InKernel {
        #[command(flatten)]
        m: ModuleArg,
        complex: String,
    },
    /// Face ring of a complex
    FaceRing {
        complex: String,
        /// Use every missing face as a relation, not only the minimal ones
        #[arg(long)]
        all_relations: bool,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Simple objects of the quotient by a complex
    Simples { complex: String },
    /// Add the minimal missing faces
    SerreStep {
        complex: String,
        /// Repeat until the full simplex
        #[arg(long)]
        iterate: bool,
    },
    /// Krull dimension of the quotient category
    Kdim { complex: String },
    /// Whether all transitions of a three-parameter module past degree N are isomorphisms
    InLeqN {
        #[command(flatten)]
        m: ModuleArg,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Representation of the star quiver Q_N
    Quiverize {
        #[command(flatten)]
        m: ModuleArg,
        #[arg(short = 'n')]
        n: usize,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Basis of the endomorphism algebra
    Endo {
        #[command(flatten)]
        r: RepArg,
    },
    /// Search for a direct-sum splitting
    Split {
        #[command(flatten)]
        r: RepArg,
        /// Seed for the randomized idempotent search
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Certify indecomposability
    Indec {
        #[command(flatten)]
        r: RepArg,
        /// Seed for the randomized idempotent search
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Interval decomposition of each leg when the sink is zero
    SplitLegs {
        #[command(flatten)]
        r: RepArg,
    },
    /// Vertices and arrows of Q_N
    QuiverShape {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Exact linear algebra on matrices given as JSON rows or files
    Linalg {
        #[command(subcommand)]
        op: LinalgCommand,
    },
    /// Run the worked-example checks
    VerifyPaper {
        /// List the checks without running them
        #[arg(long)]
        list: bool,
        /// Read fixtures from this directory instead of the built-in copies
        #[arg(long, value_name = "DIR")]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum LinalgCommand {
    /// Rank of a matrix
    Rank { matrix: String },
    /// Canonical kernel basis
    Kernel { matrix: String },
    /// Sum and intersection of two spans; each is a list of vectors
    Subspaces {
        u: String,
        w: String,
        #[arg(long)]
        ambient: Option<usize>,
    },
    /// Image of the span U under a matrix
    Image { matrix: String, u: String },
}

/// Library operation and the subcommand that exposes it.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("rank", "linalg rank"),
    ("kernel", "linalg kernel"),
    ("subspace_ops", "linalg subspaces"),
    ("image_of_map", "linalg image"),
    ("dim_at", "dims"),
    ("transition_matrix", "transition"),
    ("rank_invariant", "rank"),
    ("stabilization_bound", "bound"),
    ("direct_sum", "sum"),
    ("shift", "shift"),
    ("named_example", "named"),
    ("random_presentation", "random"),
    ("localized_rank", "localized-rank"),
    ("localized_barcode", "barcode"),
    ("localized_dim", "localized-dim"),
    ("torsion_strips", "strips"),
    ("bifiltration", "bifiltration"),
    ("quadrant_corners", "quadrants"),
    ("decompose", "decompose"),
    ("reconstruct", "reconstruct"),
    ("equivalent_in_dk2", "equivalent"),
    ("delocalize_dim", "delocalize"),
    ("intersection_rank", "ibar"),
    ("section_exists", "section-exists"),
    ("is_complex", "complex"),
    ("skeleton", "complex"),
    ("supp_complex", "support"),
    ("face_ring", "face-ring"),
    ("in_kernel_lk", "in-kernel"),
    ("minimal_missing_faces", "missing-faces"),
    ("simples", "simples"),
    ("serre_step", "serre-step"),
    ("kdim", "kdim"),
    ("in_leq_n", "in-leq-n"),
    ("to_quiver_rep", "quiverize"),
    ("endomorphism_basis", "endo"),
    ("try_split", "split"),
    ("is_indecomposable", "indec"),
    ("torsion_leg_split", "split-legs"),
    ("quiver_shape", "quiver-shape"),
    ("render_svg", "decompose"),
    ("verify_paper", "verify-paper"),
];

impl Command {
    /// Inputs that may declare a field characteristic.
    fn field_inputs(&self) -> Vec<String> {
        use Command::*;
        match self {
            Dims { m, .. }
            | Transition { m, .. }
            | Rank { m, .. }
            | Bound { m }
            | Shift { m, .. } => {
                vec![m.module.clone()]
            }
            LocalizedRank { m, .. } | LocalizedDim { m, .. } | Barcode { m, .. } | Strips { m } => {
                vec![m.module.clone()]
            }
            Bifiltration { m } | Quadrants { m } | Decompose { m, .. } | Delocalize { m, .. } => {
                vec![m.module.clone()]
            }
            Ibar { m, .. }
            | Support { m }
            | InKernel { m, .. }
            | InLeqN { m, .. }
            | Quiverize { m, .. } => {
                vec![m.module.clone()]
            }
            Sum { modules, .. } => modules.clone(),
            Equivalent { first, second } => vec![first.clone(), second.clone()],
            SectionExists { map } => vec![map.clone()],
            Endo { r } | Split { r, .. } | Indec { r, .. } | SplitLegs { r } => vec![r.rep.clone()],
            _ => vec![],
        }
    }
}

/// What a run produced: exit code and the two output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn resolve_field(cli: &Cli) -> Result<FieldConfig, CliError> {
    if let Some(c) = cli.characteristic {
        return Ok(FieldConfig::from_characteristic(c)?);
    }
    let mut found: Option<u64> = None;
    for spec in cli.command.field_inputs() {
        if let ModuleSpec::Path(p) = ModuleSpec::parse(&spec) {
            if let Some(c) = Inputs::peek_characteristic(&p) {
                match found {
                    Some(prev) if prev != c => {
                        return Err(CliError::Usage(format!(
                            "inputs declare characteristics {prev} and {c}; choose one with --char"
                        )))
                    }
                    _ => found = Some(c),
                }
            }
        }
    }
    Ok(found
        .map(FieldConfig::from_characteristic)
        .transpose()?
        .unwrap_or_default())
}

fn field_json(c: FieldConfig) -> Value {
    match c {
        FieldConfig::Prime(p) => json!({ "characteristic": p, "name": format!("F_{p}") }),
        FieldConfig::Rational => json!({ "characteristic": 0, "name": "Q" }),
    }
}

fn digest(inputs: &Inputs) -> String {
    let mut h = Sha256::new();
    for (label, bytes) in &inputs.seen {
        h.update(label.as_bytes());
        h.update([0]);
        h.update(bytes);
        h.update([0]);
    }
    hex::encode(h.finalize())
}

fn execute(
    cli: &Cli,
    inputs: &mut Inputs,
) -> (Option<FieldConfig>, Result<(Value, bool), CliError>) {
    let config = match resolve_field(cli) {
        Ok(c) => c,
        Err(e) => return (None, Err(e)),
    };
    let result = match config {
        FieldConfig::Prime(p) => match Fp::new(p) {
            Ok(f) => commands::execute(&f, Some(&f), &cli.command, inputs),
            Err(e) => Err(e.into()),
        },
        FieldConfig::Rational => commands::execute(&Rationals, None, &cli.command, inputs),
    };
    (Some(config), result)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let start = Instant::now();
    let mut inputs = Inputs::default();
    let (config, result) = execute(&cli, &mut inputs);
    let mut report = json!({
        "format": files::FORMAT,
        "command": echo,
        "input_digest": digest(&inputs),
        "field": config.map(field_json).unwrap_or(Value::Null),
    });
    let (code, stderr) = match result {
        Ok((outputs, passed)) => {
            report["outputs"] = outputs;
            (if passed { 0 } else { 1 }, String::new())
        }
        Err(e) => {
            report["error"] = e.to_json();
            (e.exit_code(), format!("error: {e}\n"))
        }
    };
    if cli.timing {
        report["timing_ms"] = json!(start.elapsed().as_secs_f64() * 1000.0);
    }
    let stdout = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
    Outcome {
        code,
        stdout,
        stderr,
    }
}
