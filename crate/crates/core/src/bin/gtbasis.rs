//! Command-line front end. Every record is printed as one line of JSON unless
//! `--format text` is given.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gtbasis::infinite::{enumerate_infinite_patterns, InfiniteGTPattern};
use gtbasis::lowering::gt_basis_in;
use gtbasis::minors::spectral_check_vector;
use gtbasis::tower::{fundamental_basis, stable_basis_vector};
use gtbasis::{
    enumerate_patterns, pattern_to_tableau, verify, weyl_dimension, Error, GTPattern,
    HighestWeight, ModuleVector, WeylModule,
};

#[derive(Parser)]
#[command(
    name = "gtbasis",
    version,
    about = "Exact Gelfand-Tsetlin bases for gl(n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Module {
    /// Comma-separated weakly decreasing parts, e.g. `2,1`; empty for the trivial weight
    #[arg(long, allow_hyphen_values = true)]
    weight: String,

    #[arg(long)]
    rank: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of the module, checked against the pattern count
    Dim(Module),
    /// Gelfand-Tsetlin patterns in enumeration order
    Patterns(Module),
    /// Semistandard tableaux matching the patterns
    Tableaux(Module),
    /// Basis vectors, one per pattern
    Basis(Module),
    /// Quantum minor eigenvalues on every basis vector
    Spectrum(Module),
    /// Spectral, rank, weight and stability checks
    Verify {
        #[command(flatten)]
        module: Module,
        /// Alter one basis vector so that the run has to fail
        #[arg(long)]
        perturb: bool,
    },
    /// Stable basis vectors of degree at most `--max-degree`, shown at `--rank`
    Embed {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        max_degree: usize,
        /// Defaults to the maximal degree
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Wedge monomials of the k-th exterior power against the basis
    Fundamental {
        #[arg(long)]
        wedge: usize,
        #[arg(long)]
        rank: usize,
    },
}

#[derive(Serialize)]
struct DimRecord<'a> {
    weight: &'a HighestWeight,
    n: usize,
    dimension: String,
    patterns: usize,
}

#[derive(Serialize)]
struct BasisRecord<'a> {
    pattern: &'a GTPattern,
    vector: &'a ModuleVector,
}

#[derive(Serialize)]
struct StableRecord<'a> {
    pattern: &'a InfiniteGTPattern,
    degree: usize,
    n: usize,
    vector: &'a ModuleVector,
}

enum Failure {
    Invalid(Error),
    Mismatch,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

struct Sink {
    out: Box<dyn Write>,
    format: Format,
}

impl Sink {
    fn record<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) -> io::Result<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.out, value)?;
                writeln!(self.out)
            }
            Format::Text => writeln!(self.out, "{}", text()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let out: Box<dyn Write> = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error[Io]: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let default_format = match cli.command {
        Command::Dim(_) | Command::Verify { .. } => Format::Text,
        _ => Format::Json,
    };
    let mut sink = Sink {
        out,
        format: cli.format.unwrap_or(default_format),
    };
    let result = run(cli.command, &mut sink).and_then(|()| sink.out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => {
            let _ = sink.out.flush();
            ExitCode::from(1)
        }
        Err(Failure::Invalid(e)) => {
            eprintln!("error[{}]: {e}", e.kind());
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error[Io]: {e}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() {
    let threads = std::env::var("GT_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok());
    if let Some(n) = threads.filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn module_of(m: &Module) -> Result<WeylModule, Error> {
    WeylModule::new(m.weight.parse::<HighestWeight>()?, m.rank)
}

fn run(command: Command, sink: &mut Sink) -> Outcome {
    match command {
        Command::Dim(m) => {
            let weight: HighestWeight = m.weight.parse()?;
            let dimension = weyl_dimension(&weight, m.rank)?;
            let count = enumerate_patterns(&weight, m.rank)?.len();
            let record = DimRecord {
                weight: &weight,
                n: m.rank,
                dimension: dimension.to_string(),
                patterns: count,
            };
            sink.record(&record, || dimension.to_string())?;
            if dimension != count.into() {
                return Err(Failure::Mismatch);
            }
        }
        Command::Patterns(m) => {
            let weight: HighestWeight = m.weight.parse()?;
            for p in enumerate_patterns(&weight, m.rank)? {
                sink.record(&p, || p.to_string())?;
            }
        }
        Command::Tableaux(m) => {
            let weight: HighestWeight = m.weight.parse()?;
            for p in enumerate_patterns(&weight, m.rank)? {
                let t = pattern_to_tableau(&p);
                sink.record(&t, || format!("{:?}", t.rows()))?;
            }
        }
        Command::Basis(m) => {
            let module = module_of(&m)?;
            for (p, v) in gt_basis_in(&module)? {
                sink.record(
                    &BasisRecord {
                        pattern: &p,
                        vector: &v,
                    },
                    || format!("{p}  {v}"),
                )?;
            }
        }
        Command::Spectrum(m) => {
            let module = module_of(&m)?;
            let mut mismatched = false;
            for (p, v) in gt_basis_in(&module)? {
                for k in 1..=module.rank() {
                    let report = spectral_check_vector(&module, &p, k, &v)?;
                    mismatched |= !report.is_match();
                    let status = if report.is_match() {
                        "match"
                    } else {
                        "MISMATCH"
                    };
                    sink.record(&report, || {
                        format!("{p} m={k} {:?} {status}", report.expected)
                    })?;
                }
            }
            if mismatched {
                return Err(Failure::Mismatch);
            }
        }
        Command::Verify { module, perturb } => {
            let weight: HighestWeight = module.weight.parse()?;
            let report = verify(&weight, module.rank, perturb)?;
            sink.record(&report, || report.to_string())?;
            if !report.pass {
                return Err(Failure::Mismatch);
            }
        }
        Command::Embed {
            weight,
            max_degree,
            rank,
        } => {
            let weight: HighestWeight = weight.parse()?;
            let rank = rank.unwrap_or(max_degree);
            if rank < max_degree {
                return Err(Error::WeightTooLong {
                    length: max_degree,
                    rank,
                }
                .into());
            }
            for p in enumerate_infinite_patterns(&weight, max_degree)? {
                let v = stable_basis_vector(&p)?.at_rank(rank)?;
                let record = StableRecord {
                    pattern: &p,
                    degree: p.degree(),
                    n: rank,
                    vector: &v,
                };
                sink.record(&record, || {
                    format!("{} degree {}  {v}", p.triangle(), p.degree())
                })?;
            }
        }
        Command::Fundamental { wedge, rank } => {
            for e in fundamental_basis(wedge, rank)? {
                sink.record(&e, || {
                    format!("{:?} {} scalar {}", e.indices, e.pattern, e.scalar)
                })?;
            }
        }
    }
    Ok(())
}
