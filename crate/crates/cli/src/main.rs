//! Command-line front end.
//!
//! Exit codes: 0 all checks passed, 1 at least one failed record,
//! 2 input rejected (usage errors, malformed files, star complements),
//! 3 internal error (I/O).

use std::fmt;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use treeshift_core::spectral::{self, MatrixKind};
use treeshift_core::verify::{self, CampaignReport};
use treeshift_core::{
    canonical_code, enumerate_trees_with_codes, io as tree_io, DEFAULT_N_MAX, DEFAULT_POWER_TOL,
};

#[derive(Parser)]
#[command(name = "treeshift", version, about = "Tree shifts and distance spectra of tree complements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one representative per isomorphism class as JSONL.
    Enumerate {
        /// Tree order (a single value).
        #[arg(long)]
        n: NRange,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print metric and spectral data for one tree from an edge-list file.
    Inspect {
        /// Edge-list file: first line n, then n-1 lines "u v" with u < v.
        tree_file: PathBuf,
        /// Comma-separated alpha grid in [0, 1).
        #[arg(long)]
        alpha: Option<AlphaGrid>,
    },
    /// Run verification campaigns and write a report.
    Verify {
        /// Which campaign to run.
        selector: Selector,
        /// Order or inclusive order range, e.g. 7 or 5..10.
        #[arg(long, default_value = "5..10")]
        n: NRange,
        /// Comma-separated alpha grid in [0, 1).
        #[arg(long)]
        alpha: Option<AlphaGrid>,
        /// Margin threshold for strict inequalities.
        #[arg(long, default_value_t = verify::DEFAULT_MARGIN_TOL)]
        tol: f64,
        /// Worker threads for campaign execution.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Report path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Export the proper-shift poset as DOT.
    Poset {
        /// Tree order (a single value, at least 4).
        #[arg(long)]
        n: NRange,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Selector {
    Gts,
    Kelmans,
    Collapse,
    Minimality,
    Identity,
    Counterexample,
    Poset,
    All,
}

impl Selector {
    fn campaigns(self) -> Vec<Selector> {
        match self {
            Selector::All => vec![
                Selector::Gts,
                Selector::Kelmans,
                Selector::Collapse,
                Selector::Minimality,
                Selector::Identity,
                Selector::Counterexample,
                Selector::Poset,
            ],
            one => vec![one],
        }
    }

    fn min_order(self) -> usize {
        match self {
            Selector::Minimality | Selector::Poset => 4,
            Selector::Counterexample => 6,
            _ => 5,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Inclusive order range, written `a..b`, or a single order `k`.
#[derive(Debug, Clone, Copy)]
struct NRange {
    lo: usize,
    hi: usize,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.parse::<usize>().map_err(|_| format!("bad order `{t}`"));
        if let Some((a, b)) = s.split_once("..") {
            let (lo, hi) = (parse(a)?, parse(b)?);
            if lo > hi {
                return Err(format!("empty range `{s}`"));
            }
            Ok(NRange { lo, hi })
        } else {
            let k = parse(s)?;
            Ok(NRange { lo: k, hi: k })
        }
    }
}

impl NRange {
    fn single(self, what: &str) -> Result<usize, CliError> {
        if self.lo != self.hi {
            return Err(CliError::Usage(format!("{what} expects a single order, got a range")));
        }
        Ok(self.lo)
    }
}

/// Comma-separated alphas in [0, 1).
#[derive(Debug, Clone)]
struct AlphaGrid(Vec<f64>);

impl FromStr for AlphaGrid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut grid = Vec::new();
        for part in s.split(',') {
            let a: f64 = part.trim().parse().map_err(|_| format!("bad alpha `{part}`"))?;
            if !(0.0..1.0).contains(&a) {
                return Err(format!("alpha must lie in [0, 1), got {a}"));
            }
            grid.push(a);
        }
        if grid.is_empty() {
            return Err("alpha grid is empty".to_string());
        }
        Ok(AlphaGrid(grid))
    }
}

enum CliError {
    Usage(String),
    Input(String),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Enumerate { n, out } => cmd_enumerate(n, out),
        Command::Inspect { tree_file, alpha } => cmd_inspect(tree_file, alpha),
        Command::Verify { selector, n, alpha, tol, workers, out, format } => {
            cmd_verify(selector, n, alpha, tol, workers, out, format)
        }
        Command::Poset { n, out } => cmd_poset(n, out),
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn cmd_enumerate(n: NRange, out: Option<PathBuf>) -> Result<u8, CliError> {
    let n = n.single("enumerate")?;
    let items = enumerate_trees_with_codes(n)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut writer = open_output(&out)?;
    tree_io::write_tree_set(&mut writer, &items)
        .map_err(|e| CliError::Io(io::Error::other(e.to_string())))?;
    writer.flush()?;
    eprintln!("wrote {} classes of order {n}", items.len());
    Ok(0)
}

fn cmd_inspect(tree_file: PathBuf, alpha: Option<AlphaGrid>) -> Result<u8, CliError> {
    let grid = alpha.map(|a| a.0).unwrap_or_else(|| verify::DEFAULT_ALPHA_GRID.to_vec());
    let reader = BufReader::new(
        File::open(&tree_file).map_err(|e| CliError::Input(format!("{}: {e}", tree_file.display())))?,
    );
    let tree = tree_io::read_edge_list(reader).map_err(|e| CliError::Input(e.to_string()))?;
    let metrics = tree.metrics();
    println!("n: {}", tree.n());
    println!("diameter: {}", metrics.diameter);
    let pendants: Vec<String> = metrics.pendant_vertices.iter().map(usize::to_string).collect();
    println!("pendant vertices: {}", pendants.join(" "));
    let complement = match tree.complement_distances() {
        Ok(d) => d,
        Err(_) => {
            println!("complement disconnected (star); spectral data undefined");
            return Ok(2);
        }
    };
    let code = canonical_code(&tree);
    let mut kinds = vec![MatrixKind::Distance, MatrixKind::SignlessLaplacian];
    kinds.extend(grid.iter().map(|&a| MatrixKind::DAlpha(a)));
    for kind in kinds {
        let m = spectral::DistMatrix::from_distances(kind, &complement, code.clone())
            .map_err(|e| CliError::Input(e.to_string()))?;
        let s = spectral::spectral_radius(&m, DEFAULT_POWER_TOL)
            .map_err(|e| CliError::Input(e.to_string()))?;
        println!("{}(complement): {:.12}", kind.radius_label(), s.radius);
    }
    let holds = (0..tree.n()).all(|i| {
        (i + 1..tree.n()).all(|j| {
            let expected = if tree.has_edge(i, j) { 2 } else { 1 };
            complement.get(i, j) == expected
        })
    });
    println!("identity holds: {}", if holds { "yes" } else { "no" });
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    selector: Selector,
    n: NRange,
    alpha: Option<AlphaGrid>,
    tol: f64,
    workers: usize,
    out: Option<PathBuf>,
    format: Format,
) -> Result<u8, CliError> {
    let grid = alpha.map(|a| a.0).unwrap_or_else(|| verify::DEFAULT_ALPHA_GRID.to_vec());
    if !tol.is_finite() || tol <= 0.0 {
        return Err(CliError::Usage(format!("tol must be positive, got {tol}")));
    }
    if workers < 1 {
        return Err(CliError::Usage("workers must be at least 1".to_string()));
    }
    if n.lo < 4 || n.hi > DEFAULT_N_MAX {
        return Err(CliError::Usage(format!(
            "order range must lie within 4..{DEFAULT_N_MAX}, got {}..{}",
            n.lo, n.hi
        )));
    }
    // ignore the error when a pool already exists (tests call run() twice)
    let _ = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global();

    let mut runs: Vec<(Selector, usize)> = Vec::new();
    for campaign in selector.campaigns() {
        for order in n.lo.max(campaign.min_order())..=n.hi {
            runs.push((campaign, order));
        }
    }
    if runs.is_empty() {
        return Err(CliError::Usage(format!(
            "no campaign in the selection applies to orders {}..{}",
            n.lo, n.hi
        )));
    }

    let reports: Vec<CampaignReport> = runs
        .into_iter()
        .map(|(campaign, order)| match campaign {
            Selector::Gts => verify::check_gts_monotonicity(order, &grid, tol),
            Selector::Kelmans => verify::check_kelmans(order, tol),
            Selector::Collapse => verify::check_collapse(order, tol),
            Selector::Minimality => verify::check_minimality(order, &grid, tol),
            Selector::Identity => verify::check_identity(order),
            Selector::Counterexample => verify::check_counterexample(order),
            Selector::Poset => verify::check_poset(order),
            Selector::All => unreachable!("expanded above"),
        })
        .collect();

    let mut failed = 0usize;
    for report in &reports {
        failed += report.failed_count();
        let min = report
            .min_margin
            .iter()
            .map(|(k, v)| format!("{k}={v:.3e}"))
            .collect::<Vec<_>>()
            .join(" ");
        eprintln!(
            "{} n={}: {} records, {} failed{}{}",
            report.campaign,
            report.n,
            report.records.len(),
            report.failed_count(),
            if min.is_empty() { "" } else { "; min margins " },
            min
        );
    }

    let mut writer = open_output(&out)?;
    match format {
        Format::Json => verify::write_json(&mut writer, &reports)?,
        Format::Csv => verify::write_csv(&mut writer, &reports)?,
    }
    writer.flush()?;
    Ok(if failed == 0 { 0 } else { 1 })
}

fn cmd_poset(n: NRange, out: Option<PathBuf>) -> Result<u8, CliError> {
    let n = n.single("poset")?;
    if !(4..=DEFAULT_N_MAX).contains(&n) {
        return Err(CliError::Usage(format!(
            "poset needs an order within 4..{DEFAULT_N_MAX}, got {n}"
        )));
    }
    let poset = verify::build_poset(n);
    let mut writer = open_output(&out)?;
    writer.write_all(poset.to_dot().as_bytes())?;
    writer.flush()?;
    let in_deg = poset.in_degrees();
    let out_deg = poset.out_degrees();
    let sources: Vec<usize> = (0..poset.nodes().len()).filter(|&i| in_deg[i] == 0).collect();
    let sinks: Vec<usize> = (0..poset.nodes().len()).filter(|&i| out_deg[i] == 0).collect();
    eprintln!(
        "n={n}: {} classes, {} edges; sources {:?} (path at {}), sinks {:?} (star at {})",
        poset.nodes().len(),
        poset.edges().len(),
        sources,
        poset.path_index(),
        sinks,
        poset.star_index()
    );
    Ok(0)
}
