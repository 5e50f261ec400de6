use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use uniposet::universal::default_width_budget;
use uniposet::{
    chain_family, partition_count, partitions, random_poset, verify_universality, Error, Poset,
    StatsRow, UniversalFamily, DEFAULT_FAMILY_CAP,
};

/// Small universal posets in the Boolean lattice.
#[derive(Parser)]
#[command(name = "uniposet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the chain-cover family for `n` and width budget `a`.
    Family {
        #[arg(long)]
        n: usize,
        /// Defaults to ⌈n/3⌉.
        #[arg(long)]
        a: Option<usize>,
        #[command(flatten)]
        cap: Cap,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Embed a poset into the universal family and certify the result.
    Embed {
        /// Poset file. Without it a random poset on `--n` elements is drawn.
        #[arg(long = "in", conflicts_with_all = ["n", "seed"])]
        input: Option<PathBuf>,
        #[arg(long, required_unless_present = "input")]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Embed every labelled poset on `n ≤ 5` elements.
    VerifyAll {
        #[arg(long)]
        n: usize,
    },
    /// One row of size statistics per `n`; accepts `N` or `A..B`.
    Stats {
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        #[command(flatten)]
        cap: Cap,
    },
    /// Print p(n), optionally followed by every partition.
    Partitions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct Cap {
    /// Most sets to materialize.
    #[arg(long = "cap", default_value_t = DEFAULT_FAMILY_CAP)]
    value: usize,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo == 0 || lo > hi {
        return Err(format!("empty or zero-based range {s:?}"));
    }
    Ok((lo, hi))
}

/// A failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MemoryLimit { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Family { n, a, cap, out } => {
            let a = a.unwrap_or_else(|| default_width_budget(n));
            if n == 0 || a == 0 || a > n {
                return Err(Error::InvalidArgument(format!(
                    "need 1 <= a <= n, got n = {n}, a = {a}"
                ))
                .into());
            }
            let family = chain_family(n, a, cap.value)?;
            emit(out.as_deref(), &family.to_string())
        }
        Command::Embed {
            input,
            n,
            seed,
            edge_prob,
            a,
            out,
        } => {
            let poset = match input {
                Some(path) => {
                    let text = fs::read_to_string(&path).map_err(|e| Failure {
                        code: 1,
                        message: format!("{}: {e}", path.display()),
                    })?;
                    text.parse::<Poset>()?
                }
                None => random_poset(n.unwrap_or_default(), edge_prob, seed)?,
            };
            let n = poset.len();
            let family = UniversalFamily::lazy(n, a.unwrap_or_else(|| default_width_budget(n)))?;
            let result = family.embed(&poset)?;
            if let Err(e) = family.certify(&poset, &result.embedding) {
                return Err(Failure {
                    code: 3,
                    message: format!("certificate rejected: {e}"),
                });
            }
            emit(out.as_deref(), &result.embedding.to_string())?;
            println!("VERIFIED branch={}", result.branch);
            Ok(())
        }
        Command::VerifyAll { n } => {
            let report = verify_universality(n)?;
            print!("{report}");
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure {
                    code: 3,
                    message: format!("{} posets failed", report.total - report.passed),
                })
            }
        }
        Command::Stats { n: (lo, hi), cap } => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            for n in lo..=hi {
                let row = StatsRow::compute(n, default_width_budget(n), cap.value)?;
                writeln!(w, "{row}")?;
                w.flush()?;
            }
            Ok(())
        }
        Command::Partitions { n, list } => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            writeln!(w, "{}", partition_count(n))?;
            if list {
                for p in partitions(n, n) {
                    writeln!(w, "{p}")?;
                }
            }
            w.flush()?;
            Ok(())
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure {
            code: 1,
            message: format!("{}: {e}", path.display()),
        }),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}
