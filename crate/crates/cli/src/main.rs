mod algebra;
mod fixtures;
mod logic;
mod model;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qstar_core::logic::Kernel;
use qstar_core::models::{ModelName, Sampler};
use qstar_core::semantics::FuzzConfig;
use qstar_core::Kind;

use report::{CmdResult, UsageError};

/// Checks quasi-MV*/quasi-Wajsberg* algebras, their standard models, and
/// proofs in the logic qL*.
#[derive(Parser)]
#[command(name = "qstar", version)]
struct Cli {
    /// Print one JSON record per check instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite algebras given as operation tables.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// The standard models over the rationals.
    #[command(subcommand)]
    Model(ModelCmd),
    /// Formulas of qL* under the R* semantics.
    #[command(subcommand)]
    Formula(FormulaCmd),
    /// Proof scripts.
    #[command(subcommand)]
    Proof(ProofCmd),
    /// Randomized soundness checks.
    #[command(subcommand)]
    Fuzz(FuzzCmd),
    /// The shipped fixtures.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Check every axiom of the file's kind exhaustively.
    Check { file: PathBuf },
    /// Check the derived-property suites for the file's kind.
    Props { file: PathBuf },
    /// Translate between the additive and implicative signatures, or drop
    /// the primitive parts of an algebra satisfying x + 0 = x.
    Transform {
        file: PathBuf,
        #[arg(long)]
        to: Kind,
    },
    /// Quotient by mu, tau or a partition such as `a,b|c|0,d,e,1`.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        cong: String,
    },
    /// Direct product of two algebras of the same kind.
    Product { first: PathBuf, second: PathBuf },
    /// The canonical map into A/mu x A/tau.
    Embed { file: PathBuf },
    /// Every congruence of the algebra.
    Congruences { file: PathBuf },
    /// Check a subset of an mv algebra against the filter clauses.
    Filter {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SamplerArgs {
    /// Grid with coordinates k/D.
    #[arg(long, value_name = "D")]
    grid: Option<i64>,
    /// N random samples drawn with --seed.
    #[arg(long, value_name = "N")]
    random: Option<u64>,
}

impl SamplerArgs {
    fn sampler(&self, seed: u64) -> Sampler {
        match (self.grid, self.random) {
            (Some(d), _) => Sampler::grid(d),
            (_, Some(n)) => Sampler::random(n, seed),
            _ => unreachable!("clap requires one of --grid and --random"),
        }
    }
}

#[derive(Subcommand)]
enum ModelCmd {
    /// Sample every axiom of the model's signature.
    Check {
        #[arg(long)]
        model: ModelName,
        #[command(flatten)]
        sampler: SamplerArgs,
    },
    /// Apply one operation, e.g. `--op arrow --args "1/2,1/3;-1/4,1"`.
    Eval {
        #[arg(long)]
        model: ModelName,
        #[arg(long)]
        op: String,
        #[arg(long, allow_hyphen_values = true)]
        args: String,
    },
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// Evaluate under a valuation given as `--val p=1/2,1/3`.
    Eval {
        formula: String,
        #[arg(long = "val", allow_hyphen_values = true)]
        vals: Vec<String>,
    },
    /// Search for a valuation with a non-designated value.
    Falsify {
        formula: String,
        #[command(flatten)]
        sampler: SamplerArgs,
    },
}

#[derive(Subcommand)]
enum ProofCmd {
    /// Verify a proof file.
    Check {
        file: PathBuf,
        /// Let R2 detach a consequent that is not an implication.
        #[arg(long)]
        lax_r2: bool,
    },
    /// Expand a combinator into a primitive proof file.
    Expand {
        #[arg(long)]
        combinator: String,
        #[arg(long, num_args = 0..)]
        inputs: Vec<PathBuf>,
        /// Formula parameters, in order.
        #[arg(long = "arg", allow_hyphen_values = true)]
        args: Vec<String>,
        /// Which occurrence `replace` rewrites, outermost first.
        #[arg(long, default_value_t = 0)]
        occurrence: usize,
    },
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 10_000)]
    proofs: u64,
    #[arg(long, default_value_t = 4)]
    depth: usize,
    /// Propositional variables available to the generator.
    #[arg(long, default_value_t = 3)]
    vars: usize,
    /// Generator moves per proof.
    #[arg(long, default_value_t = 8)]
    steps: usize,
    /// Random valuations per derived theorem.
    #[arg(long, default_value_t = 32)]
    samples: u64,
}

impl FuzzArgs {
    fn config(&self, seed: u64, kernel: Kernel) -> FuzzConfig {
        FuzzConfig {
            proofs: self.proofs,
            seed,
            depth: self.depth,
            vars: self.vars,
            steps: self.steps,
            samples: self.samples,
            kernel,
        }
    }
}

#[derive(Subcommand)]
enum FuzzCmd {
    /// Generate random verified proofs and falsify what they derive.
    Soundness {
        #[command(flatten)]
        fuzz: FuzzArgs,
        /// Use a kernel whose R2 skips the implication check.
        #[arg(long)]
        lax_r2: bool,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// Check the fixture algebra, its constructions and every shipped proof.
    Run {
        #[arg(long, default_value = "fixtures")]
        dir: PathBuf,
        /// Random valuations per theorem and instances per axiom schema.
        #[arg(long, default_value_t = 1000)]
        valuations: u64,
        #[command(flatten)]
        fuzz: FuzzArgs,
    },
}

fn dispatch(cli: &Cli) -> CmdResult {
    let seed = cli.seed;
    match &cli.command {
        Command::Algebra(c) => match c {
            AlgebraCmd::Check { file } => algebra::check(file),
            AlgebraCmd::Props { file } => algebra::props(file),
            AlgebraCmd::Transform { file, to } => algebra::transform(file, *to),
            AlgebraCmd::Quotient { file, cong } => algebra::quotient_cmd(file, cong),
            AlgebraCmd::Product { first, second } => algebra::product(first, second),
            AlgebraCmd::Embed { file } => algebra::embed(file),
            AlgebraCmd::Congruences { file } => algebra::congruences(file),
            AlgebraCmd::Filter { file, set } => algebra::filter(file, set),
        },
        Command::Model(c) => match c {
            ModelCmd::Check { model, sampler } => model::check(*model, sampler.sampler(seed)),
            ModelCmd::Eval { model, op, args } => model::eval(*model, op, args),
        },
        Command::Formula(c) => match c {
            FormulaCmd::Eval { formula, vals } => logic::eval(formula, vals),
            FormulaCmd::Falsify { formula, sampler } => logic::falsify_cmd(formula, sampler.sampler(seed)),
        },
        Command::Proof(c) => match c {
            ProofCmd::Check { file, lax_r2 } => {
                logic::check(file, if *lax_r2 { Kernel::LAX_R2 } else { Kernel::STRICT })
            }
            ProofCmd::Expand {
                combinator,
                inputs,
                args,
                occurrence,
            } => logic::expand(combinator, inputs, args, *occurrence),
        },
        Command::Fuzz(FuzzCmd::Soundness { fuzz, lax_r2 }) => {
            logic::fuzz(&fuzz.config(seed, if *lax_r2 { Kernel::LAX_R2 } else { Kernel::STRICT }))
        }
        Command::Fixtures(FixturesCmd::Run { dir, valuations, fuzz }) => {
            fixtures::run(dir, &fuzz.config(seed, Kernel::STRICT), *valuations)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match dispatch(&cli) {
        Ok(report) => report.finish(cli.json),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
