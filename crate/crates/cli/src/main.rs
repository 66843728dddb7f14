//! `codegree`: tables, per-grading reports, matrix-model checks and codegree
//! calculators, written as a JSON or TSV envelope.

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use codegree_core::dual_degrees::{
    codegree_grassmannian, codegree_lagrangian, codegree_product_with_pk, codegree_segre_quadrics,
    codegree_spinor, katz_kleiman, orbit_crosscheck, GrassmannianMethod,
};
use codegree_core::kac_gradings::{degree_table, full_report, scan_classification, types_label};
use codegree_core::theta_matrix_models::{verify_case, Case, DEFAULT_SEED};
use codegree_core::{ChowModel, Error, GradingReport, KacDiagram};
use serde::Serialize;
use serde_json::Value;

use output::{to_value, OutputEnvelope, SCHEMA_VERSION};

const DIAGRAM_HELP: &str = "\
Diagrams are named E8^1, F4^1, A2^2, D5^2, E6^2, D4^3 and so on (twist 1 may be
omitted). For untwisted diagrams node 0 (or `affine`) is the extended node and
nodes 1..l follow Bourbaki numbering. Twisted diagrams are numbered by position,
with these marks:
  A2^2       4 2 (quadruple bond)
  A_{2l}^2   4 4 ... 4 2 along a chain, double bonds at both ends
  A_{2l-1}^2 2 2 4 ... 4 2, nodes 0 and 1 both attached to node 2
  D_{l+1}^2  2 2 ... 2 along a chain, double bonds at both ends
  E6^2       2 4 6 4 2, double bond between nodes 2 and 3
  D4^3       3 6 3, triple bond between nodes 1 and 2
The `grading` payload repeats the marks of the chosen diagram.

Matrix-model cases: sl:inner:<d1,...,dN>[/m], sl:outer-sym:<N>, so:block:<a>,<b>.

Exit codes: 0 success, 2 invalid input or unmet precondition, 3 mismatch between
independent computations.";

#[derive(Parser)]
#[command(name = "codegree", version, about = "Discriminant degrees of graded Lie algebras and codegrees of homogeneous varieties", after_help = DIAGRAM_HELP)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed for the generic-point samplers of the matrix models.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    /// Largest rank of the classical diagrams scanned by `tables`.
    #[arg(long, default_value_t = 13, global = true)]
    max_rank: usize,
    /// Directory for cached table payloads.
    #[arg(long, env = "CODEGREE_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute a table: classify, degrees or orbits.
    Tables { which: Table },
    /// Report on the grading given by one node of a Kac diagram.
    Grading {
        diagram: String,
        /// Node index, or `affine` for node 0.
        node: String,
    },
    /// Codegree calculators.
    Codegree {
        #[command(subcommand)]
        which: CodegreeCmd,
    },
    /// Build and verify a matrix model of a graded Lie algebra.
    Realize {
        #[arg(long)]
        case: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Classify,
    Degrees,
    Orbits,
}

impl Table {
    fn name(self) -> &'static str {
        match self {
            Table::Classify => "classify",
            Table::Degrees => "degrees",
            Table::Orbits => "orbits",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Sum,
    KatzKleiman,
    Both,
}

#[derive(Subcommand)]
enum CodegreeCmd {
    /// G(k,n) in the Pluecker embedding.
    Grassmannian {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// LG(n,2n).
    Lagrangian {
        #[arg(short)]
        n: usize,
    },
    /// One component of OG(n,2n) in the half-spin embedding.
    Spinor {
        #[arg(short)]
        n: usize,
    },
    /// Q^{a-2} x Q^{b-2}, the closed orbit in C^a (x) C^b.
    SegreQuadrics {
        #[arg(short)]
        a: usize,
        #[arg(short)]
        b: usize,
    },
    /// X x P^k for a variety X such as `OG(5,10)_+`.
    Product {
        variety: String,
        #[arg(short)]
        k: usize,
    },
    /// Katz-Kleiman integral on a variety such as `P^4 x G(2,5)` or `v_3(P^2)`.
    KatzKleiman { variety: String },
}

enum Failure {
    Input(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_cross_check() {
            Failure::Mismatch(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = Result<(Value, Vec<String>), Failure>;

#[derive(Serialize)]
struct ClassifyRow {
    diagram: String,
    node: usize,
    m: u32,
    g: String,
    g0: String,
    g1: Option<String>,
    dims: Option<Vec<usize>>,
    theta_rank: Option<usize>,
    little_weyl: Option<String>,
    reflections: u64,
    #[serde(rename = "degD")]
    deg_d: String,
    closed_orbit: Option<String>,
    codegree: Option<u64>,
    matches_reference: bool,
}

fn classify_row(r: &GradingReport) -> ClassifyRow {
    let reflections = r
        .reflection_profile
        .as_ref()
        .map(|p| p.iter().map(|c| c.reflections).sum())
        .unwrap_or(0);
    let deg_d: Vec<String> = r.deg_d.iter().map(|d| format!("{}:{}", d.class, d.degree)).collect();
    let matches_reference = r.warnings.is_empty()
        && r.reference.as_ref().is_some_and(|p| {
            p.m == r.m
                && Some(p.little_weyl.as_str()) == r.little_weyl_name.as_deref()
                && p.reflections == (r.m, reflections)
                && Some(p.codegree) == r.codegree
        });
    ClassifyRow {
        diagram: r.diagram.clone(),
        node: r.chosen_node,
        m: r.m,
        g: r.g_type.to_string(),
        g0: r.g0_type.clone(),
        g1: r.g1_description.clone(),
        dims: r.dims.clone(),
        theta_rank: r.theta_rank,
        little_weyl: r.little_weyl_name.clone(),
        reflections,
        deg_d: deg_d.join(" "),
        closed_orbit: r.closed_orbit_label.clone(),
        codegree: r.codegree,
        matches_reference,
    }
}

#[derive(Serialize)]
struct DegreeRow {
    group: String,
    class: String,
    parameter: Option<u64>,
    reference: u64,
    computed: u64,
    #[serde(rename = "match")]
    agrees: bool,
}

#[derive(Serialize)]
struct OrbitRow {
    diagram: String,
    node: usize,
    orbit: String,
    model: String,
    expected: u64,
    computed: u64,
    #[serde(rename = "match")]
    agrees: bool,
}

fn cache_path(dir: &Path, table: Table, max_rank: usize) -> PathBuf {
    dir.join(format!("{}-r{max_rank}-v{SCHEMA_VERSION}.json", table.name()))
}

fn tables(which: Table, max_rank: usize, cache: Option<&Path>) -> Outcome {
    if let Some(dir) = cache {
        if let Ok(text) = std::fs::read_to_string(cache_path(dir, which, max_rank)) {
            if let Ok(Value::Object(m)) = serde_json::from_str::<Value>(&text) {
                let payload = m.get("payload").cloned().unwrap_or(Value::Null);
                let warnings = m
                    .get("warnings")
                    .and_then(|w| serde_json::from_value(w.clone()).ok())
                    .unwrap_or_default();
                return Ok((payload, warnings));
            }
        }
    }
    let (payload, warnings, mismatch) = match which {
        Table::Classify => {
            let rows = scan_classification(max_rank)?;
            let warnings: Vec<String> = rows
                .iter()
                .flat_map(|r| r.warnings.iter().map(move |w| format!("{} node {}: {w}", r.diagram, r.chosen_node)))
                .collect();
            let out: Vec<ClassifyRow> = rows.iter().map(classify_row).collect();
            (to_value(&out), warnings, None)
        }
        Table::Degrees => {
            let rows: Vec<DegreeRow> = degree_table(1..=6)?
                .into_iter()
                .map(|e| DegreeRow {
                    agrees: e.reference == e.computed,
                    group: e.group,
                    class: e.class,
                    parameter: e.parameter,
                    reference: e.reference,
                    computed: e.computed,
                })
                .collect();
            let bad = rows.iter().filter(|r| !r.agrees).count();
            (to_value(&rows), vec![], (bad > 0).then(|| format!("{bad} degree entries disagree")))
        }
        Table::Orbits => {
            let rows = scan_classification(max_rank)?;
            let checks = orbit_crosscheck(&rows)?;
            let out: Vec<OrbitRow> = checks
                .into_iter()
                .map(|c| OrbitRow {
                    diagram: c.diagram,
                    node: c.node,
                    orbit: c.orbit,
                    model: c.model,
                    expected: c.reflection_count,
                    computed: c.katz_kleiman,
                    agrees: c.agrees,
                })
                .collect();
            let bad = out.iter().filter(|r| !r.agrees).count();
            (to_value(&out), vec![], (bad > 0).then(|| format!("{bad} codegrees disagree")))
        }
    };
    if let Some(m) = mismatch {
        return Err(Failure::Mismatch(m));
    }
    if let Some(dir) = cache {
        let env = OutputEnvelope::new(String::new(), payload.clone(), warnings.clone());
        // A cache that cannot be written is not an error.
        let _ = std::fs::create_dir_all(dir)
            .and_then(|_| std::fs::write(cache_path(dir, which, max_rank), env.to_json()));
    }
    Ok((payload, warnings))
}

fn grading(diagram: &str, node: &str) -> Outcome {
    let d: KacDiagram = diagram.parse()?;
    let node = match node {
        "affine" => 0,
        n => n
            .parse::<usize>()
            .map_err(|_| Failure::Input(format!("node must be an index or `affine`, got '{n}'")))?,
    };
    if node >= d.node_count() {
        return Err(Failure::Input(format!("{} has nodes 0..{}", d.name(), d.node_count() - 1)));
    }
    let r = full_report(&d, node)?;
    let warnings = r.warnings.clone();
    let mut payload = to_value(&r);
    if let Value::Object(m) = &mut payload {
        m.insert("g_type".into(), Value::String(r.g_type.to_string()));
        m.insert("marks".into(), to_value(&d.marks));
        m.insert("g_type_label".into(), Value::String(types_label(&[r.g_type])));
    }
    Ok((payload, warnings))
}

fn codegree(which: &CodegreeCmd) -> Outcome {
    let r = match which {
        CodegreeCmd::Grassmannian { k, n, method } => {
            let m = match method {
                MethodArg::Sum => GrassmannianMethod::Sum,
                MethodArg::KatzKleiman => GrassmannianMethod::KatzKleiman,
                MethodArg::Both => GrassmannianMethod::Both,
            };
            codegree_grassmannian(*k, *n, m)?
        }
        CodegreeCmd::Lagrangian { n } => codegree_lagrangian(*n)?,
        CodegreeCmd::Spinor { n } => codegree_spinor(*n)?,
        CodegreeCmd::SegreQuadrics { a, b } => {
            let r = codegree_segre_quadrics(*a, *b)?;
            let mut warnings = vec![];
            if !r.conjecture_holds {
                warnings.push(format!(
                    "4 C(min(a,b), 2) = {} differs from the computed {}",
                    r.conjectured, r.result.value
                ));
            }
            return Ok((to_value(&r), warnings));
        }
        CodegreeCmd::Product { variety, k } => {
            let model: ChowModel = variety.parse()?;
            codegree_product_with_pk(&model, *k)?
        }
        CodegreeCmd::KatzKleiman { variety } => {
            let model: ChowModel = variety.parse()?;
            katz_kleiman(&model)?
        }
    };
    Ok((to_value(&r), vec![]))
}

fn realize(case: &str, seed: u64) -> Outcome {
    let case: Case = case.parse()?;
    let r = verify_case(&case, seed)?;
    if !r.passed {
        return Err(Failure::Mismatch(format!("{case}: verification failed: {}", serde_json::to_string(&r).unwrap_or_default())));
    }
    Ok((to_value(&r), vec![]))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::iter::once("codegree".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ");
    let outcome = match &cli.command {
        Command::Tables { which } => tables(*which, cli.max_rank, cli.cache_dir.as_deref()),
        Command::Grading { diagram, node } => grading(diagram, node),
        Command::Codegree { which } => codegree(which),
        Command::Realize { case } => realize(case, cli.seed),
    };
    match outcome {
        Ok((payload, warnings)) => {
            let env = OutputEnvelope::new(echo, payload, warnings);
            let text = match cli.format {
                Format::Json => env.to_json(),
                Format::Tsv => env.to_tsv(),
            };
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(3)
        }
    }
}
