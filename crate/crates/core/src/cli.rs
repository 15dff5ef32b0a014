//! Command-line front end. `run` does all the work so tests can call it
//! without spawning a process.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{self, BoundsError};
use crate::graph::{generate, FamilySpec, Graph, GraphError};
use crate::solver::{self, CopNumber, SolveError, SolveOptions, Variant, DEFAULT_BUDGET};
use crate::strategies::{self, ExhaustOptions, Policy, PolicyContext, PolicyError};
use crate::tree::{self, TreeError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bridgeburn", version, about = "Bridge-burning Cops and Robbers toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a family graph as JSON or edge-list text.
    Generate {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Decide whether K cops win and report the best placement.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        cops: usize,
        #[command(flatten)]
        game: GameFlags,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Smallest number of cops that wins, up to --max-k.
    Copnumber {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[command(flatten)]
        game: GameFlags,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Worst-case rounds for one cop; fails when one cop cannot win.
    CaptureTime {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Leaf-guarding placement for a tree.
    Tree {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        root: Option<usize>,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Domination numbers with witnesses.
    Bounds {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = bounds::DEFAULT_BOUNDS_BUDGET)]
        budget: u64,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Closed-form value or bounds for a named family.
    Formula {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "")]
        params: String,
        /// Also list the constructive cop placement.
        #[arg(long)]
        placements: bool,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Play one cop policy against one robber policy.
    Arena {
        #[command(flatten)]
        input: GraphInput,
        /// Give once for each side.
        #[arg(long = "policy", required = true, num_args = 1)]
        policies: Vec<String>,
        #[arg(long)]
        max_rounds: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Check a policy against every line of play of the other side.
    Exhaust {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        policy: String,
        /// Cops on the free side when the policy is a robber.
        #[arg(long, default_value_t = 1)]
        cops: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        out: OutputFlags,
    },
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Edge-list or JSON file.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long, default_value = "", requires = "family")]
    params: String,
}

#[derive(Debug, Args)]
struct GameFlags {
    #[arg(long, value_enum, default_value_t = VariantArg::Bb)]
    variant: VariantArg,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Debug, Args)]
struct OutputFlags {
    /// Compact JSON (the default).
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    #[arg(long)]
    pretty: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Bb,
    Classic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Edges,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, kind: "input", message: message.into() }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let (code, kind) = match e {
            SolveError::BudgetExceeded { .. } => (EXIT_BUDGET, "budget"),
            SolveError::NotCopWin => (EXIT_DOMAIN, "domain"),
            _ => (EXIT_INPUT, "input"),
        };
        Failure { code, kind, message: e.to_string() }
    }
}

impl From<TreeError> for Failure {
    fn from(e: TreeError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        let (code, kind) = match e {
            BoundsError::BudgetExceeded { .. } => (EXIT_BUDGET, "budget"),
            BoundsError::TooSmall(_) => (EXIT_DOMAIN, "domain"),
            _ => (EXIT_INPUT, "input"),
        };
        Failure { code, kind, message: e.to_string() }
    }
}

impl From<PolicyError> for Failure {
    fn from(e: PolicyError) -> Self {
        let (code, kind) = match e {
            PolicyError::BudgetExceeded { .. } => (EXIT_BUDGET, "budget"),
            PolicyError::Unknown(_) | PolicyError::BadParams(_) => (EXIT_INPUT, "input"),
            _ => (EXIT_DOMAIN, "domain"),
        };
        Failure { code, kind, message: e.to_string() }
    }
}

/// Parses `args` (program name first) and runs the command.
/// `BRIDGEBURN_THREADS` sets the worker count; 0 or unset means automatic.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                CliOutput { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let threads = match std::env::var("BRIDGEBURN_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) => n,
            Err(_) => {
                return fail_output(Failure::input(format!("BRIDGEBURN_THREADS={v:?} is not a number")), false)
            }
        },
        Err(_) => 0,
    };
    let pretty = cli.command.out().pretty;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build();
    let result = match pool {
        Ok(pool) => pool.install(|| dispatch(cli.command)),
        Err(e) => Err(Failure::input(e.to_string())),
    };
    match result {
        Ok(Rendered::Json(v)) => CliOutput { code: EXIT_OK, stdout: render(&v, pretty), stderr: String::new() },
        Ok(Rendered::Text(t)) => CliOutput { code: EXIT_OK, stdout: t, stderr: String::new() },
        Err(f) => fail_output(f, pretty),
    }
}

fn fail_output(f: Failure, pretty: bool) -> CliOutput {
    let body = json!({ "error": { "kind": f.kind, "message": f.message } });
    CliOutput { code: f.code, stdout: render(&body, pretty), stderr: format!("error: {}\n", f.message) }
}

fn render(v: &Value, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(v).expect("json value serializes")
    } else {
        v.to_string()
    };
    s.push('\n');
    s
}

enum Rendered {
    Json(Value),
    Text(String),
}

impl Command {
    fn out(&self) -> &OutputFlags {
        match self {
            Command::Generate { out, .. }
            | Command::Solve { out, .. }
            | Command::Copnumber { out, .. }
            | Command::CaptureTime { out, .. }
            | Command::Tree { out, .. }
            | Command::Bounds { out, .. }
            | Command::Formula { out, .. }
            | Command::Arena { out, .. }
            | Command::Exhaust { out, .. } => out,
        }
    }
}

impl GraphInput {
    fn load(&self) -> Result<(Graph, Option<FamilySpec>), Failure> {
        match (&self.graph, &self.family) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
                Ok((Graph::parse_auto(&text)?, None))
            }
            (None, Some(name)) => {
                let spec = FamilySpec::parse(name, &self.params)?;
                Ok((generate(&spec)?, Some(spec)))
            }
            _ => Err(Failure::input("give either --graph FILE or --family NAME")),
        }
    }
}

impl GameFlags {
    fn options(&self) -> SolveOptions {
        let variant = match self.variant {
            VariantArg::Bb => Variant::BRIDGE_BURNING,
            VariantArg::Classic => Variant::CLASSIC,
        };
        SolveOptions { variant, budget: self.budget, ..Default::default() }
    }
}

fn dispatch(command: Command) -> Result<Rendered, Failure> {
    match command {
        Command::Generate { input, format, .. } => {
            let (g, _) = input.load()?;
            Ok(match format {
                Format::Json => Rendered::Json(serde_json::from_str(&g.to_json()).expect("graph json is valid")),
                Format::Edges => Rendered::Text(g.to_edge_list()),
            })
        }
        Command::Solve { input, cops, game, .. } => {
            let (g, _) = input.load()?;
            Ok(Rendered::Json(solver::cop_wins_with_k(&g, cops, &game.options())?.to_json()))
        }
        Command::Copnumber { input, max_k, game, .. } => {
            let (g, _) = input.load()?;
            let key = match game.variant {
                VariantArg::Bb => "cb",
                VariantArg::Classic => "c",
            };
            Ok(Rendered::Json(match solver::bridge_burning_cop_number(&g, max_k, &game.options())? {
                CopNumber::Exact(k) => json!({ key: k }),
                CopNumber::Exceeds(k) => json!({ key: null, "exceedsMaxK": k }),
            }))
        }
        Command::CaptureTime { input, budget, .. } => {
            let (g, _) = input.load()?;
            Ok(Rendered::Json(solver::capture_time_bb(&g, &SolveOptions::with_budget(budget))?.to_json()))
        }
        Command::Tree { input, root, .. } => {
            let (g, _) = input.load()?;
            let report = tree::tree_cop_number(&g, root)?;
            Ok(Rendered::Json(serde_json::to_value(report).expect("report serializes")))
        }
        Command::Bounds { input, budget, .. } => {
            let (g, _) = input.load()?;
            let report = bounds::domination_numbers_with_budget(&g, budget)?;
            Ok(Rendered::Json(serde_json::to_value(report).expect("report serializes")))
        }
        Command::Formula { family, params, placements, .. } => {
            let spec = FamilySpec::parse(&family, &params)?;
            let mut v = serde_json::to_value(bounds::family_formula(&spec)?).expect("formula serializes");
            if placements {
                v["placements"] = json!(bounds::placement_generators(&spec)?);
            }
            Ok(Rendered::Json(v))
        }
        Command::Arena { input, policies, max_rounds, budget, .. } => {
            let (g, spec) = input.load()?;
            let ctx = PolicyContext { graph: &g, family: spec.as_ref(), budget };
            let (mut cop, mut robber) = (None, None);
            for p in &policies {
                match strategies::build_policy(&ctx, p)? {
                    Policy::Cop(c) if cop.is_none() => cop = Some(c),
                    Policy::Robber(r) if robber.is_none() => robber = Some(r),
                    _ => return Err(Failure::input(format!("two policies for the same side ({p})"))),
                }
            }
            let (Some(cop), Some(robber)) = (cop, robber) else {
                return Err(Failure::input("arena needs one cop policy and one robber policy"));
            };
            let rounds = max_rounds.unwrap_or((g.edge_count() * g.vertex_count()).max(1) as u32);
            let t = strategies::run_match(&g, cop.as_ref(), robber.as_ref(), rounds)?;
            Ok(Rendered::Json(serde_json::from_str(&t.to_json()).expect("transcript json is valid")))
        }
        Command::Exhaust { input, policy, cops, budget, .. } => {
            let (g, spec) = input.load()?;
            let ctx = PolicyContext { graph: &g, family: spec.as_ref(), budget };
            let fixed = strategies::build_policy(&ctx, &policy)?;
            let opts = ExhaustOptions { budget, free_cops: cops, ..Default::default() };
            Ok(Rendered::Json(strategies::exhaust_vs_policy(&g, &fixed, &opts)?.to_json()))
        }
    }
}
