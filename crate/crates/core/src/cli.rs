//! The `cpac` command line. Machine-readable results go to stdout as one
//! JSON document (or CSV); diagnostics go to stderr. Exit codes: 0 success,
//! 1 domain error, 2 usage error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::classes::{
    parse_class, parse_witness, BlockClass, HypothesisClass, DEFAULT_ENUMERATION_BUDGET,
};
use crate::dims::{ldim_window, restrict, vc_dimension_window, MistakeTree};
use crate::error::{Error, Result};
use crate::harness::{
    diagonalization_demo, run_experiment, scpac_obstruction_demo, ExperimentConfig,
};
use crate::hypothesis::Hypothesis;
use crate::learners::{
    asymptotic_erm_block, erm_bounded, erm_good, lift_to_asymptotic_erm, parse_learner,
    AsymptoticBlockErm, ErmLearner, Learner, SampleComplexityTable,
};
use crate::machines::{constant_program, run_bounded, EnumerableFunction, Program};
use crate::sample::{Sample, DEFAULT_SAMPLE_BUDGET};

/// Environment variable holding the default step/enumeration budget.
pub const BUDGET_ENV: &str = "CPAC_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "cpac",
    version,
    about = "Computable PAC learning constructions, executable"
)]
struct Cli {
    /// Seed for every random draw (overrides the experiment config).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Trials per sample size (overrides the experiment config).
    #[arg(long, global = true)]
    trials: Option<u64>,
    /// Step and enumeration budget.
    #[arg(long, global = true, env = BUDGET_ENV)]
    budget: Option<u64>,
    /// Output path; experiments write `<out>.json` and `<out>.csv`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// VC and Littlestone dimension of a class restricted to {0, …, N−1}.
    Dims(DimsArgs),
    /// Enumerate a class or decide membership.
    #[command(subcommand)]
    Class(ClassCommand),
    /// Run a learner on a sample.
    Learn(LearnArgs),
    /// Monte-Carlo experiments.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
    /// The diagonalization and SCPAC-obstruction demonstrations.
    #[command(subcommand)]
    Demo(DemoCommand),
    /// Counter-machine utilities.
    #[command(subcommand)]
    Machine(MachineCommand),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ClassSource {
    /// Registry name: full, baseline-<d>, block:<f>, good:<w>:<k>, hat:<w>:<k>, diagonal.
    #[arg(long)]
    class: Option<String>,
    /// A member list as written by `class build`.
    #[arg(long)]
    class_json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DimsArgs {
    #[command(flatten)]
    source: ClassSource,
    /// Window size N: the universe is {0, …, N−1}.
    #[arg(long)]
    universe: u64,
}

#[derive(Debug, Subcommand)]
enum ClassCommand {
    /// List the members with support inside {0, …, bound}.
    Build {
        #[arg(long)]
        class: String,
        #[arg(long)]
        bound: u64,
    },
    /// Decide membership of a hypothesis.
    Member {
        #[arg(long)]
        class: String,
        /// Support as a comma-separated list, or a JSON hypothesis.
        #[arg(long, allow_hyphen_values = true)]
        hypothesis: String,
    },
}

#[derive(Debug, Args)]
struct LearnArgs {
    #[arg(long)]
    class: String,
    /// erm, erm-good, asym-block, lift or lift:<inner>.
    #[arg(long, default_value = "erm")]
    learner: String,
    /// Path to a JSON sample `[[x,y],…]`, or the JSON itself.
    #[arg(long)]
    sample: String,
    /// Sample-complexity table for `lift`, as `m1,m2,…`.
    #[arg(long, value_delimiter = ',')]
    schedule: Option<Vec<u64>>,
}

#[derive(Debug, Subcommand)]
enum ExperimentCommand {
    /// Run the experiment described by a JSON config.
    Run {
        config: PathBuf,
        /// Print the CSV table instead of the JSON result.
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Debug, Subcommand)]
enum DemoCommand {
    /// Build the diagonal-class member that defeats a witness program.
    Diag {
        /// all-ones, all-zeros or machine:<program file>.
        #[arg(long)]
        witness: String,
        #[arg(long)]
        k: usize,
    },
    /// Run a block-class ERM on the sample listing I_k, all labeled 1.
    Obstruction {
        #[arg(long)]
        k: u64,
        /// inc, prime or double.
        #[arg(long)]
        f: String,
        /// erm or asym-block.
        #[arg(long, default_value = "erm")]
        learner: String,
    },
}

#[derive(Debug, Subcommand)]
enum MachineCommand {
    /// Run a program on an input within the budget.
    Run {
        #[arg(long)]
        program: PathBuf,
        #[arg(long, value_delimiter = ',')]
        input: Vec<u64>,
    },
    /// Print a program's code.
    Code {
        #[arg(long)]
        program: PathBuf,
    },
    /// Print the program with a given code.
    Decode {
        #[arg(long)]
        code: u64,
    },
}

/// The document written by `class build` and read by `dims --class-json`.
#[derive(Debug, Serialize, Deserialize)]
pub struct ClassDocument {
    pub class: String,
    pub bound: u64,
    pub members: Vec<Hypothesis>,
}

#[derive(Debug, Serialize)]
struct DimsReport {
    vc: usize,
    ldim: usize,
    class: String,
    universe: u64,
    patterns: usize,
    shattered_set: Vec<u64>,
    shattered_tree: Option<Box<MistakeTree>>,
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("results serialize")
}

fn read_program(path: &Path) -> Result<Program> {
    read_text(path)?.parse()
}

fn parse_hypothesis(text: &str) -> Result<Hypothesis> {
    let text = text.trim();
    if text.starts_with('{') {
        return from_json(text, "hypothesis");
    }
    let mut points = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        points.push(
            part.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad point `{part}`")))?,
        );
    }
    Ok(Hypothesis::from_points(points))
}

fn parse_sample(arg: &str) -> Result<Sample> {
    if arg.trim_start().starts_with('[') {
        from_json(arg, "sample")
    } else {
        from_json(&read_text(Path::new(arg))?, "sample")
    }
}

struct Ctx {
    seed: Option<u64>,
    trials: Option<u64>,
    budget: u64,
    out: Option<PathBuf>,
}

impl Ctx {
    /// Writes `body` to `--out` when given, and always to stdout.
    fn emit(&self, stdout: &mut dyn Write, body: &str) -> Result<()> {
        if let Some(path) = &self.out {
            write_file(path, body)?;
        }
        writeln!(stdout, "{body}").map_err(|e| Error::Config(format!("stdout: {e}")))
    }
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    std::fs::write(path, format!("{body}\n"))
        .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))
}

fn dims(ctx: &Ctx, args: &DimsArgs) -> Result<String> {
    if args.universe == 0 {
        return Err(Error::Config("--universe must be at least 1".into()));
    }
    let bound = args.universe - 1;
    let (name, members) = match (&args.source.class, &args.source.class_json) {
        (Some(name), _) => (
            name.clone(),
            parse_class(name, ctx.budget)?.enumerate_bounded(bound)?,
        ),
        (None, Some(path)) => {
            let doc: ClassDocument = from_json(&read_text(path)?, "class document")?;
            (doc.class, doc.members)
        }
        (None, None) => unreachable!("clap requires a class source"),
    };
    let universe: Vec<u64> = (0..args.universe).collect();
    let view = restrict(&members, &universe)?;
    let vc = vc_dimension_window(&view)?;
    let ldim = ldim_window(&view)?;
    Ok(to_json(&DimsReport {
        vc: vc.vc,
        ldim: ldim.ldim,
        class: name,
        universe: args.universe,
        patterns: view.rows().len(),
        shattered_set: vc.shattered_set,
        shattered_tree: ldim.shattered_tree,
    }))
}

fn class_command(ctx: &Ctx, cmd: &ClassCommand) -> Result<String> {
    match cmd {
        ClassCommand::Build { class, bound } => {
            let members = parse_class(class, ctx.budget)?.enumerate_bounded(*bound)?;
            Ok(to_json(&ClassDocument {
                class: class.clone(),
                bound: *bound,
                members,
            }))
        }
        ClassCommand::Member { class, hypothesis } => {
            let c = parse_class(class, ctx.budget)?;
            let h = parse_hypothesis(hypothesis)?;
            let verdict = c.membership(&h)?;
            Ok(to_json(
                &json!({ "class": class, "hypothesis": h, "verdict": verdict }),
            ))
        }
    }
}

fn learn(ctx: &Ctx, args: &LearnArgs) -> Result<String> {
    let sample = parse_sample(&args.sample)?;
    let schedule = args.schedule.clone().map(SampleComplexityTable);
    let report = match args.learner.as_str() {
        "erm" => to_json(&erm_bounded(
            parse_class(&args.class, ctx.budget)?.as_ref(),
            &sample,
        )?),
        "erm-good" => {
            let rest = args
                .class
                .strip_prefix("good:")
                .or_else(|| args.class.strip_prefix("hat:"))
                .ok_or_else(|| Error::Config("erm-good needs a good: or hat: class".into()))?;
            let (w, k) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::Parse(format!("unknown class `{}`", args.class)))?;
            let k: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad k in `{}`", args.class)))?;
            to_json(&erm_good(
                &sample,
                parse_witness(w, k, ctx.budget)?.as_ref(),
                k,
                ctx.budget,
            )?)
        }
        "asym-block" => {
            let f = args
                .class
                .strip_prefix("block:")
                .ok_or_else(|| Error::Config("asym-block needs a block: class".into()))?;
            to_json(&asymptotic_erm_block(&sample, &f.parse()?)?)
        }
        name => {
            let rest = name
                .strip_prefix("lift")
                .ok_or_else(|| Error::Parse(format!("unknown learner `{name}`")))?;
            let inner = match rest {
                "" => "erm",
                _ => rest
                    .strip_prefix(':')
                    .ok_or_else(|| Error::Parse(format!("unknown learner `{name}`")))?,
            };
            let inner = parse_learner(inner, &args.class, ctx.budget)?;
            to_json(&lift_to_asymptotic_erm(
                inner.as_ref(),
                &sample,
                schedule.as_ref(),
                DEFAULT_SAMPLE_BUDGET.max(ctx.budget),
            )?)
        }
    };
    Ok(report)
}

fn experiment(ctx: &Ctx, cmd: &ExperimentCommand, stdout: &mut dyn Write) -> Result<()> {
    let ExperimentCommand::Run { config, csv } = cmd;
    let mut cfg: ExperimentConfig = from_json(&read_text(config)?, "experiment config")?;
    if let Some(seed) = ctx.seed {
        cfg.seed = seed;
    }
    if let Some(trials) = ctx.trials {
        cfg.trials = trials;
    }
    if cfg.budget.is_none() && ctx.budget != DEFAULT_ENUMERATION_BUDGET {
        cfg.budget = Some(ctx.budget);
    }
    let result = run_experiment(&cfg)?;
    let json_body = serde_json::to_string_pretty(&result).expect("results serialize");
    let csv_body = result.to_csv()?;
    if let Some(out) = &ctx.out {
        write_file(&out.with_extension("json"), &json_body)?;
        std::fs::write(out.with_extension("csv"), &csv_body)
            .map_err(|e| Error::Config(format!("cannot write csv: {e}")))?;
    }
    let body = if *csv {
        csv_body.trim_end()
    } else {
        json_body.as_str()
    };
    writeln!(stdout, "{body}").map_err(|e| Error::Config(format!("stdout: {e}")))
}

fn witness_program(name: &str, k: usize) -> Result<Program> {
    match name {
        "all-ones" => constant_program(true, k as u64 + 1),
        "all-zeros" => constant_program(false, k as u64 + 1),
        _ => {
            let path = name
                .strip_prefix("machine:")
                .ok_or_else(|| Error::Parse(format!("unknown witness `{name}`")))?;
            read_program(Path::new(path))
        }
    }
}

fn demo(ctx: &Ctx, cmd: &DemoCommand) -> Result<String> {
    match cmd {
        DemoCommand::Diag { witness, k } => {
            let program = witness_program(witness, *k)?;
            Ok(to_json(&diagonalization_demo(&program, *k, ctx.budget)?))
        }
        DemoCommand::Obstruction { k, f, learner } => {
            let f: EnumerableFunction = f.parse()?;
            let erm: Box<dyn Learner> = match learner.as_str() {
                "erm" => {
                    let class: Arc<dyn HypothesisClass> =
                        Arc::new(BlockClass::new(Arc::new(f.name().parse()?)));
                    Box::new(ErmLearner { class })
                }
                "asym-block" => Box::new(AsymptoticBlockErm {
                    f: Arc::new(f.name().parse()?),
                }),
                other => {
                    return Err(Error::Parse(format!(
                        "unknown obstruction learner `{other}`"
                    )))
                }
            };
            Ok(to_json(&scpac_obstruction_demo(*k, erm.as_ref(), &f)?))
        }
    }
}

fn machine(ctx: &Ctx, cmd: &MachineCommand) -> Result<String> {
    match cmd {
        MachineCommand::Run { program, input } => {
            let outcome = run_bounded(&read_program(program)?, input, ctx.budget)?;
            Ok(to_json(&outcome))
        }
        MachineCommand::Code { program } => {
            let p = read_program(program)?;
            Ok(to_json(
                &json!({ "code": p.encode()?, "program": p.to_string() }),
            ))
        }
        MachineCommand::Decode { code } => {
            let p = Program::decode(*code);
            Ok(to_json(&json!({ "code": code, "program": p.to_string() })))
        }
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    let ctx = Ctx {
        seed: cli.seed,
        trials: cli.trials,
        budget: cli.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET),
        out: cli.out,
    };
    if ctx.budget == 0 {
        return Err(Error::Config("--budget must be positive".into()));
    }
    let body = match &cli.command {
        Command::Dims(args) => dims(&ctx, args)?,
        Command::Class(cmd) => class_command(&ctx, cmd)?,
        Command::Learn(args) => learn(&ctx, args)?,
        Command::Experiment(cmd) => return experiment(&ctx, cmd, stdout),
        Command::Demo(cmd) => demo(&ctx, cmd)?,
        Command::Machine(cmd) => machine(&ctx, cmd)?,
    };
    ctx.emit(stdout, &body)
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

pub fn main() -> i32 {
    run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
