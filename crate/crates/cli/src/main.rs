//! `pcsudoku`: partial chromatic polynomials and diagonally distinct
//! Sudoku squares from the command line.
//!
//! Exit codes: 0 success, 1 domain failure (improper coloring, failed
//! verification, lambda below the colors in use), 2 usage or parse error.

use std::io::Read;
use std::process::ExitCode;

use chromatic_sudoku::{
    assemble_polynomial, construct_grid, count_completions_brute,
    count_consistent_partitions_parallel, interpolate_from_oracle, read_coloring, read_graph,
    sudoku_graph, validate_coloring, verify_grid, write_graph, BaseBlock, BigInt, Error, Graph,
    PartialColoring, Polynomial, SudokuGrid,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "pcsudoku",
    version,
    about = "Partial chromatic polynomials and diagonal Sudoku squares"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sudoku graph generation.
    Graph {
        #[command(subcommand)]
        action: GraphCmd,
    },
    /// Partial chromatic polynomial of a graph with a partial coloring.
    Poly {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        coloring: String,
        #[arg(long, value_enum, default_value_t = PolyMethod::Partitions)]
        method: PolyMethod,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Number of completions with `lambda` colors.
    Count {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        coloring: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
        #[arg(long, value_enum, default_value_t = CountMethod::Poly)]
        method: CountMethod,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Diagonally distinct Sudoku squares.
    Sudoku {
        #[command(subcommand)]
        action: SudokuCmd,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Print the Sudoku graph of rank n.
    Gen {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        /// Also join cells on each diagonal.
        #[arg(long)]
        diagonal: bool,
    },
}

#[derive(Subcommand)]
enum SudokuCmd {
    /// Build an n²×n² square with distinct diagonals.
    Gen {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        /// Base block file (`rank <n>` then n rows of n symbols).
        #[arg(long)]
        base: Option<String>,
    },
    /// Check rows, columns, blocks and both diagonals.
    Verify {
        file: String,
        #[arg(long)]
        no_diagonal: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyMethod {
    Partitions,
    Interpolate,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountMethod {
    Poly,
    Brute,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Improper(..) | Error::LambdaBelowUsed { .. } => Failure::Domain(e.to_string()),
            Error::Overflow | Error::NonIntegralDifference { .. } | Error::NotMonic => {
                Failure::Domain(format!("internal inconsistency: {e}"))
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn load(graph: &str, coloring: &str) -> Result<(Graph, PartialColoring), Failure> {
    let g = read_graph(&read_input(graph)?).map_err(|e| Failure::Usage(format!("{graph}: {e}")))?;
    let raw = read_coloring(&read_input(coloring)?)
        .map_err(|e| Failure::Usage(format!("{coloring}: {e}")))?;
    let c = validate_coloring(&g, raw)?;
    Ok((g, c))
}

fn polynomial(
    g: &Graph,
    c: &PartialColoring,
    method: PolyMethod,
    threads: usize,
) -> Result<Polynomial, Error> {
    match method {
        PolyMethod::Partitions => assemble_polynomial(
            c.lambda0(),
            count_consistent_partitions_parallel::<BigInt>(g, c, threads)?,
        ),
        PolyMethod::Interpolate => {
            interpolate_from_oracle(g, c, |l| count_completions_brute(g, c, l))
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Graph {
            action: GraphCmd::Gen { rank, diagonal },
        } => Ok(write_graph(&sudoku_graph(rank as usize, diagonal)?)),
        Command::Poly {
            graph,
            coloring,
            method,
            json,
            threads,
        } => {
            let (g, c) = load(&graph, &coloring)?;
            let p = polynomial(&g, &c, method, threads)?;
            if json {
                return Ok(format!("{}\n", p.to_json()));
            }
            let join = |v: &[BigInt]| {
                v.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            Ok(format!(
                "lambda0: {}\ndegree: {}\nfalling: {}\nmonomial: {}\np(lambda) = {}\n",
                p.lambda0(),
                p.degree(),
                join(p.falling_coeffs()),
                join(p.monomial_coeffs()),
                p
            ))
        }
        Command::Count {
            graph,
            coloring,
            lambda,
            method,
            threads,
        } => {
            let (g, c) = load(&graph, &coloring)?;
            if lambda < c.lambda0() as i64 {
                return Err(Failure::Domain(format!(
                    "lambda {lambda} is below the {} colors already used; completions are only counted for lambda >= {}",
                    c.lambda0(),
                    c.lambda0()
                )));
            }
            let count: BigInt = match method {
                CountMethod::Poly => {
                    polynomial(&g, &c, PolyMethod::Partitions, threads)?.evaluate(lambda)?
                }
                CountMethod::Brute => count_completions_brute(&g, &c, lambda as u64)?,
            };
            Ok(format!("{count}\n"))
        }
        Command::Sudoku {
            action: SudokuCmd::Gen { rank, base },
        } => {
            let rank = rank as usize;
            let base = match base {
                None => BaseBlock::row_major(rank)?,
                Some(path) => {
                    let b = BaseBlock::parse(&read_input(&path)?)
                        .map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
                    if b.rank() != rank {
                        return Err(Failure::Usage(format!(
                            "{path}: base has rank {}, expected {rank}",
                            b.rank()
                        )));
                    }
                    b
                }
            };
            let grid = construct_grid(&base);
            let report = verify_grid(&grid, true);
            if !report.passed() {
                return Err(Failure::Domain(format!(
                    "constructed grid failed verification (bug):\n{report}"
                )));
            }
            Ok(grid.to_text())
        }
        Command::Sudoku {
            action:
                SudokuCmd::Verify {
                    file,
                    no_diagonal,
                    json,
                },
        } => {
            let grid = SudokuGrid::parse(&read_input(&file)?)
                .map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
            let report = verify_grid(&grid, !no_diagonal);
            let out = if json {
                format!("{}\n", report.to_json())
            } else {
                report.to_string()
            };
            if report.passed() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Domain("verification failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (Failure::Domain(msg) | Failure::Usage(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
