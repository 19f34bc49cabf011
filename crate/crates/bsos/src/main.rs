use std::path::PathBuf;
use std::process::ExitCode;

use bsos::catalog::builtin;
use bsos::format::{read_problem_file, write_problem_file};
use bsos::generate::{generate, Family, GeneratorSpec};
use bsos::run::{format_table, run, sweep, threads_from_env, RunOptions, RunRecord};
use bsos_core::{Mode, RelaxationConfig, SemialgebraicProblem, SolveStatus, SolverOptions};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bsos",
    version,
    about = "Bounded-degree SOS and LP relaxations for polynomial optimization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one relaxation.
    Solve(SolveArgs),
    /// Solve d = 1..=d-max and print the convergence table.
    Sweep {
        #[arg(long)]
        d_max: u32,
        #[command(flatten)]
        args: SolveArgs,
    },
    /// Write a random instance to a problem file.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Clone)]
struct SolveArgs {
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    problem: Option<PathBuf>,
    #[arg(long)]
    builtin: Option<String>,
    /// Defaults to 1; ignored by `sweep`.
    #[arg(long, default_value_t = 1)]
    d: u32,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, value_enum, default_value_t = ModeArg::Bsos)]
    mode: ModeArg,
    #[arg(long, default_value_t = RelaxationConfig::DEFAULT_SEED)]
    seed: u64,
    /// Gap and feasibility tolerance.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    max_iter: Option<usize>,
    #[arg(long)]
    certify: bool,
    #[arg(long, value_enum, default_value_t = OutputArg::Table)]
    output: OutputArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Bsos,
    Lp,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Qn,
    Hn,
}

const EXIT_ERROR: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;
const EXIT_MAX_ITER: u8 = 4;
const EXIT_UNBOUNDED: u8 = 5;

fn exit_code(record: &RunRecord) -> u8 {
    match record.solve_status() {
        Some(SolveStatus::Optimal) => 0,
        Some(SolveStatus::Infeasible) => EXIT_INFEASIBLE,
        Some(SolveStatus::NumericalFailure) => EXIT_NUMERICAL,
        Some(SolveStatus::MaxIter) => EXIT_MAX_ITER,
        Some(SolveStatus::Unbounded) => EXIT_UNBOUNDED,
        None => EXIT_ERROR,
    }
}

impl SolveArgs {
    fn load(&self) -> Result<SemialgebraicProblem, bsos::Error> {
        match (&self.problem, &self.builtin) {
            (Some(path), _) => read_problem_file(path),
            (None, Some(name)) => builtin(name),
            (None, None) => unreachable!("clap enforces one of --problem/--builtin"),
        }
    }

    fn options(&self, d: u32) -> RunOptions {
        let mode = match self.mode {
            ModeArg::Bsos => Mode::Bsos,
            ModeArg::Lp => Mode::Lp,
        };
        let mut solver = SolverOptions::default();
        if let Some(tol) = self.tol {
            solver.tol_gap = tol;
            solver.tol_feas = tol;
        }
        if let Some(m) = self.max_iter {
            solver.max_iter = m;
        }
        RunOptions {
            seed: self.seed,
            solver,
            certify: self.certify,
            threads: threads_from_env(),
            ..RunOptions::new(d, self.k, mode)
        }
    }

    fn emit(&self, records: &[RunRecord]) {
        match self.output {
            OutputArg::Table => print!("{}", format_table(records)),
            OutputArg::Json => {
                for r in records {
                    println!("{}", serde_json::to_string(r).expect("records serialize"));
                }
            }
        }
        for r in records {
            if let Some(e) = &r.error {
                eprintln!("{}: {e}", r.problem_name);
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Solve(args) => {
            let problem = match args.load() {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_ERROR);
                }
            };
            if !args.options(args.d).solver.is_valid() {
                eprintln!("error: tolerances and iteration limit must be positive");
                return ExitCode::from(EXIT_ERROR);
            }
            let record = run(&problem, &args.options(args.d));
            args.emit(std::slice::from_ref(&record));
            ExitCode::from(exit_code(&record))
        }
        Command::Sweep { d_max, args } => {
            let problem = match args.load() {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_ERROR);
                }
            };
            let records = sweep(&problem, d_max, &args.options(1));
            args.emit(&records);
            ExitCode::SUCCESS
        }
        Command::Generate {
            family,
            n,
            r,
            degree,
            seed,
            out,
        } => {
            let spec = match family {
                FamilyArg::Qn => GeneratorSpec {
                    family: Family::QuadraticSimplex,
                    n,
                    r,
                    degree: 2,
                    seed,
                },
                FamilyArg::Hn => GeneratorSpec {
                    family: Family::RandomBall,
                    n,
                    r: 0,
                    degree,
                    seed,
                },
            };
            match generate(&spec).and_then(|p| write_problem_file(&out, &p)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_ERROR)
                }
            }
        }
    }
}
