use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crown_spectra::closed_forms::{verify_all, verify_distance_matrix};
use crown_spectra::graph::{
    make_complete, make_complete_bipartite, make_crown, make_cycle, make_line_crown, Graph,
};
use crown_spectra::matrix::{adjacency_matrix, distance_i_matrix, distance_matrix};
use crown_spectra::spectra::{exact_integer_spectrum, float_spectrum, RootOutcome, DEFAULT_JACOBI_TOL};
use crown_spectra::{Error, IntMatrix, VerificationReport};

#[derive(Parser)]
#[command(name = "crown-spectra", version, about = "Exact spectra of crown graphs and their line graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write it as an edge list.
    Build {
        family: Family,
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the exact spectrum of a graph matrix.
    Spectrum {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        matrix: MatrixKind,
        /// Distance for `--matrix distance-i`.
        #[arg(long)]
        i: Option<usize>,
        /// Also print the Jacobi approximation.
        #[arg(long)]
        float: bool,
    },
    /// Write a graph matrix in dump format.
    Dump {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        matrix: MatrixKind,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every closed form for a range of n and append the records to a ledger.
    Verify {
        #[arg(long, required_unless_present = "from_file")]
        from: Option<usize>,
        #[arg(long, required_unless_present = "from_file")]
        to: Option<usize>,
        /// Distance matrix dump of L(Cr(n)) to check instead of building it.
        #[arg(long, conflicts_with_all = ["from", "to"])]
        from_file: Option<PathBuf>,
        #[arg(long, default_value = "verification-ledger.jsonl")]
        ledger: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args)]
struct Source {
    #[arg(required_unless_present = "input", requires = "n")]
    family: Option<Family>,
    n: Option<usize>,
    /// Edge-list file.
    #[arg(long = "in", conflicts_with_all = ["family", "n"])]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Bipartite,
    Cycle,
    Crown,
    LineCrown,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    Adjacency,
    Distance,
    DistanceI,
}

/// A failed command: exit code plus message.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotConnected | Error::WrongDiameter { .. } => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn build_family(family: Family, n: usize) -> Result<Graph, Error> {
    match family {
        Family::Complete => make_complete(n),
        Family::Bipartite => make_complete_bipartite(n, n),
        Family::Cycle => make_cycle(n),
        Family::Crown => make_crown(n),
        Family::LineCrown => make_line_crown(n),
    }
}

fn load_graph(source: &Source) -> Result<Graph, Failure> {
    match (&source.input, source.family, source.n) {
        (Some(path), _, _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            Ok(Graph::from_edge_list(&text)?)
        }
        (None, Some(family), Some(n)) => Ok(build_family(family, n)?),
        _ => Err(Failure::usage("give either <family> <n> or --in PATH")),
    }
}

fn select_matrix(g: &Graph, kind: MatrixKind, i: Option<usize>) -> Result<IntMatrix, Failure> {
    Ok(match kind {
        MatrixKind::Adjacency => adjacency_matrix(g),
        MatrixKind::Distance => distance_matrix(g)?,
        MatrixKind::DistanceI => {
            let i = i.ok_or_else(|| Failure::usage("--matrix distance-i needs --i K"))?;
            distance_i_matrix(g, i)?
        }
    })
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_build(family: Family, n: usize, out: Option<&Path>) -> Result<(), Failure> {
    let g = build_family(family, n)?;
    let summary = match g.regularity() {
        Some(k) => format!("order={} size={} regular={k}", g.order(), g.edge_count()),
        None => format!("order={} size={} regular=no", g.order(), g.edge_count()),
    };
    match out {
        Some(path) => {
            write_output(Some(path), &g.to_edge_list())?;
            println!("{summary}");
        }
        None => {
            print!("{}", g.to_edge_list());
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn cmd_spectrum(source: &Source, kind: MatrixKind, i: Option<usize>, float: bool) -> Result<(), Failure> {
    let g = load_graph(source)?;
    let m = select_matrix(&g, kind, i)?;
    let approx = || float_spectrum(&m, DEFAULT_JACOBI_TOL);
    match exact_integer_spectrum(&m)? {
        RootOutcome::Integral(spec) => {
            println!("{spec}");
            if float {
                println!("float {}", approx()?);
            }
        }
        RootOutcome::NotIntegral { found, residual } => {
            println!("NotIntegral residual-degree={}", residual.degree());
            println!("integer-roots {found}");
            println!("float {}", approx()?);
        }
    }
    Ok(())
}

fn cmd_dump(source: &Source, kind: MatrixKind, i: Option<usize>, out: Option<&Path>) -> Result<(), Failure> {
    let g = load_graph(source)?;
    let m = select_matrix(&g, kind, i)?;
    write_output(out, &m.to_dump())
}

fn finish_verify(report: &VerificationReport, ledger: &Path) -> Result<bool, Failure> {
    report
        .append_to_ledger(ledger)
        .map_err(|e| Failure::usage(format!("cannot append to {}: {e}", ledger.display())))?;
    print!("{}", report.summary_table());
    Ok(!report.has_failures())
}

fn cmd_verify(from: usize, to: usize, ledger: &Path, jobs: usize) -> Result<bool, Failure> {
    if from < 4 || from > to {
        return Err(Failure::usage(format!(
            "verify needs 4 <= from <= to (got {from}..{to}); use `spectrum` for n = 3"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Failure::usage(e.to_string()))?;
    let reports: Vec<Result<VerificationReport, Error>> =
        pool.install(|| (from..=to).into_par_iter().map(verify_all).collect());
    let mut combined = VerificationReport::new();
    for r in reports {
        combined.extend(r?);
    }
    finish_verify(&combined, ledger)
}

fn cmd_verify_file(path: &Path, ledger: &Path) -> Result<bool, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let m = IntMatrix::from_dump(&text)?;
    let report = verify_distance_matrix(&m)?;
    finish_verify(&report, ledger)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Build { family, n, out } => cmd_build(family, n, out.as_deref()).map(|_| true),
        Command::Spectrum { source, matrix, i, float } => {
            cmd_spectrum(&source, matrix, i, float).map(|_| true)
        }
        Command::Dump { source, matrix, i, out } => {
            cmd_dump(&source, matrix, i, out.as_deref()).map(|_| true)
        }
        Command::Verify { from_file: Some(path), ledger, .. } => cmd_verify_file(&path, &ledger),
        Command::Verify { from, to, ledger, jobs, .. } => match (from, to) {
            (Some(from), Some(to)) => cmd_verify(from, to, &ledger, jobs),
            _ => Err(Failure::usage("verify needs --from and --to")),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            if f.code == 2 {
                eprintln!("run with --help for usage");
            }
            ExitCode::from(f.code)
        }
    }
}
