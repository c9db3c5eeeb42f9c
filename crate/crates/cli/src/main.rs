//! `irrstrength` command-line front end.
//!
//! Exit codes: 0 success, 1 negative result (failed verification, no labeling
//! exists), 2 usage error, 3 I/O or format error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use irrstrength_core::book;
use irrstrength_core::bounds::bound_report;
use irrstrength_core::graph::{make_triangular_book, BookParams};
use irrstrength_core::labeling::verify;
use irrstrength_core::solver::solve;
use irrstrength_core::{dot, Certificate, Error, Graph, Mode, SolverConfig, Strength};

#[derive(Parser)]
#[command(name = "irrstrength", version, about = "Irregular and modular irregular edge labelings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the triangular book graph with N pages in edge-list format.
    Book {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the closed-form labeling of the N-page book as a certificate.
    Label {
        #[arg(long)]
        n: usize,
        /// 1 for the irregular labeling, 2 for the modular one.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, value_enum)]
        mode: VerifyMode,
    },
    /// Print the degree lower bound and the order criterion.
    Bound {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Compute s or ms exactly by exhaustive search.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: SolveMode,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: u32,
        #[arg(long, env = "IRRSTRENGTH_THREADS", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        threads: u64,
        /// Also count all valid labelings at the minimal k.
        #[arg(long)]
        count: bool,
    },
    /// Tabulate both strengths of books for a range of page counts.
    Table {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Run the exact solver for n up to this value.
        #[arg(long, default_value_t = 6)]
        oracle_upto: usize,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: u32,
        #[arg(long, env = "IRRSTRENGTH_THREADS", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        threads: u64,
    },
    /// Render a certificate in another format.
    Export {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Irregular,
    Modular,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMode {
    S,
    Ms,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
}

impl From<VerifyMode> for Mode {
    fn from(m: VerifyMode) -> Mode {
        match m {
            VerifyMode::Irregular => Mode::Irregular,
            VerifyMode::Modular => Mode::Modular,
        }
    }
}

impl From<SolveMode> for Mode {
    fn from(m: SolveMode) -> Mode {
        match m {
            SolveMode::S => Mode::Irregular,
            SolveMode::Ms => Mode::Modular,
        }
    }
}

enum Failure {
    Negative(String),
    Usage(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Negative(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Negative(m) | Failure::Usage(m) | Failure::Io(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let msg = e.to_string();
        match e {
            Error::SmallComponent | Error::InfiniteClass(_) => Failure::Negative(msg),
            Error::NoPages
            | Error::FamilyTooSmall { .. }
            | Error::KMaxBelowBound { .. }
            | Error::Config(_)
            | Error::SearchTooLarge { .. } => Failure::Usage(msg),
            _ => Failure::Io(msg),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            eprintln!("{}", rendered.lines().next().unwrap_or("error: invalid usage"));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Book { n, out } => {
            let g = make_triangular_book(BookParams::new(n)?);
            emit(out.as_deref(), g.to_edge_list())
        }
        Command::Label { n, theorem, out } => {
            let p = BookParams::new(n)?;
            let g = make_triangular_book(p);
            let (labeling, mode) = if theorem == 1 {
                (book::theorem1_labeling(p), Mode::Irregular)
            } else {
                let f = book::theorem2_labeling(p).ok_or(Error::InfiniteClass(n))?;
                (f, Mode::Modular)
            };
            let cert = Certificate::new(g, labeling, mode)?;
            emit(out.as_deref(), cert.to_json() + "\n")
        }
        Command::Verify { graph, cert, mode } => {
            let g = read_graph(&graph)?;
            let cert = read_cert(&cert)?;
            if cert.graph() != &g {
                return Err(Failure::Negative("certificate graph differs from the given graph".into()));
            }
            let verdict = verify(&g, cert.labeling(), mode.into())?;
            if verdict.is_ok() {
                Ok("ok\n".into())
            } else {
                Err(Failure::Negative(verdict.to_string()))
            }
        }
        Command::Bound { graph } => {
            let r = bound_report(&read_graph(&graph)?)?;
            Ok(format!("s_lower {}\nms_lower {}\nms_infinite {}\n", r.s_lower, r.ms_lower, r.ms_infinite))
        }
        Command::Solve { graph, mode, kmax, threads, count } => {
            let g = read_graph(&graph)?;
            let cfg = SolverConfig { k_max: kmax, threads: threads as usize, count_solutions: count };
            let result = solve(&g, mode.into(), &cfg)?;
            eprintln!("{}", result.stats_line());
            Ok(result.to_json() + "\n")
        }
        Command::Table { from, to, oracle_upto, kmax, threads } => {
            if from == 0 || from > to {
                return Err(Failure::Usage(format!("need 1 <= --from <= --to, got {from}..{to}")));
            }
            table(from, to, oracle_upto, &SolverConfig { k_max: kmax, threads: threads as usize, count_solutions: false })
        }
        Command::Export { cert, format: ExportFormat::Dot, out } => {
            let cert = read_cert(&cert)?;
            emit(out.as_deref(), dot::to_dot(&cert))
        }
    }
}

fn table(from: usize, to: usize, oracle_upto: usize, cfg: &SolverConfig) -> CmdResult {
    let mut out = String::from("n\ts\tms\ts_oracle\tms_oracle\n");
    for n in from..=to {
        let p = BookParams::new(n)?;
        let s = Strength::Finite(book::theorem1_strength(p));
        let ms = book::theorem2_strength(p);
        let (s_oracle, ms_oracle) = if n <= oracle_upto {
            let g = make_triangular_book(p);
            let show = |mode| -> Result<String, Failure> {
                let r = solve(&g, mode, cfg)?;
                Ok(r.strength().map_or_else(|| format!(">{}", cfg.k_max), |s| s.to_string()))
            };
            (show(Mode::Irregular)?, show(Mode::Modular)?)
        } else {
            ("-".into(), "-".into())
        };
        let _ = writeln!(out, "{n}\t{s}\t{ms}\t{s_oracle}\t{ms_oracle}");
    }
    Ok(out)
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::from_edge_list(&read_text(path)?).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_cert(path: &Path) -> Result<Certificate, Failure> {
    Certificate::from_json(&read_text(path)?).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// Writes to `out` when given, otherwise returns the text for stdout.
fn emit(out: Option<&Path>, text: String) -> CmdResult {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}
