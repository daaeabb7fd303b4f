use std::fs;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use signed_nut::classify::{classify, positive_representative};
use signed_nut::construct::{complete_nut, fowler};
use signed_nut::io::{emit_signed, outcome_json, outcome_text, parse_graph6, parse_signed, report_json, report_line};
use signed_nut::linalg::{fullify_basis, kernel_basis, primitive_integer};
use signed_nut::search::{
    cell_for, existence_verdict, render_table, search_class, Cell, SearchConfig, SearchMode, Verdict, Want,
};
use signed_nut::{SignedGraph, SwitchingSet};

const EXIT_DOMAIN: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CAPPED: u8 = 3;

#[derive(Parser)]
#[command(name = "signut", version, about = "Signed nut graphs: classify, construct and search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Input file; standard input when omitted.
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify signed records ("<graph6> <hexmask>"), one report per line.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Emit JSON objects instead of text lines.
        #[arg(long)]
        json: bool,
        /// Input lines are plain graph6; classify the all-positive signing.
        #[arg(long)]
        underlying_only: bool,
    },
    /// Search a graph6 catalogue of connected regular graphs for signed nuts.
    Search {
        #[arg(long, value_name = "FILE")]
        graphs: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rho: usize,
        #[arg(long, default_value = "first-witness")]
        mode: SearchMode,
        /// Comma-separated: unsigned-nut, traditional-signed-nut, proper-signed-nut, all.
        #[arg(long, default_value = "all")]
        want: Want,
        #[arg(long, env = "SIGNUT_WORKERS", default_value_t = 1)]
        workers: usize,
        /// Maximum number of graphs read from the catalogue.
        #[arg(long)]
        limit: Option<usize>,
        /// Maximum number of signings tested per graph.
        #[arg(long)]
        max_signings: Option<u64>,
        /// Try low-weight signings and a negated Hamiltonian cycle first.
        #[arg(long)]
        prepass: bool,
        #[arg(long)]
        json: bool,
    },
    /// Existence table of regular signed nut graphs from bundled catalogues.
    Table {
        /// Cells as "(rho,n),(rho,n),…"; defaults to degrees 3-11 by orders 5-19
        /// plus every catalogue present.
        #[arg(long)]
        cells: Option<String>,
        /// Catalogue root laid out as <rho>/<n>.g6.
        #[arg(long, env = "SIGNUT_FIXTURES", default_value = "fixtures/reg")]
        fixtures: PathBuf,
        #[arg(long, env = "SIGNUT_WORKERS", default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: bool,
    },
    /// Signed Fowler expansion at a pivot vertex.
    Fowler {
        #[arg(long)]
        pivot: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Signed nut graph on the complete graph of order 4k+1.
    CompleteNut {
        #[arg(long)]
        k: usize,
    },
    /// Switch every input graph at a vertex set.
    Switch {
        /// Comma-separated vertices; empty for the identity.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[command(flatten)]
        input: Input,
    },
    /// Switching-equivalent representative with an all-positive kernel vector.
    Canonical {
        #[command(flatten)]
        input: Input,
    },
    /// Print an exact kernel basis of each input graph.
    Kernel {
        /// Replace the basis by nowhere-zero integer vectors of the same span.
        #[arg(long)]
        fullify: bool,
        #[command(flatten)]
        input: Input,
    },
}

/// Error with the exit code it maps to.
struct Failure(u8, String);

fn domain(e: impl ToString) -> Failure {
    Failure(EXIT_DOMAIN, e.to_string())
}

fn read_lines(input: &Input) -> Result<Vec<String>, Failure> {
    let reader: Box<dyn Read> = match &input.file {
        Some(p) => Box::new(fs::File::open(p).map_err(|e| domain(format!("{}: {e}", p.display())))?),
        None => Box::new(io::stdin()),
    };
    BufReader::new(reader)
        .lines()
        .map(|l| l.map_err(domain))
        .filter(|l| l.as_ref().map_or(true, |s| !s.trim().is_empty() && !s.starts_with('#')))
        .collect()
}

fn read_signed(input: &Input) -> Result<Vec<SignedGraph>, Failure> {
    read_lines(input)?
        .iter()
        .enumerate()
        .map(|(i, l)| parse_signed(l).map_err(|e| Failure(EXIT_PARSE, format!("line {}: {e}", i + 1))))
        .collect()
}

fn read_graph6_file(path: &Path) -> Result<Vec<SignedGraph>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| domain(format!("{}: {e}", path.display())))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| Failure(EXIT_PARSE, format!("{}:{}: {e}", path.display(), i + 1)))
        })
        .collect()
}

fn record(g: &SignedGraph) -> Result<String, Failure> {
    emit_signed(g).map_err(domain)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn run_classify(input: &Input, json: bool, underlying_only: bool, out: &mut impl Write) -> Result<u8, Failure> {
    let mut code = 0;
    for (i, line) in read_lines(input)?.iter().enumerate() {
        let parsed = if underlying_only {
            parse_graph6(line.trim())
        } else {
            parse_signed(line)
        };
        let g = match parsed {
            Ok(g) => g,
            Err(e) => {
                eprintln!("line {}: {e}", i + 1);
                code = EXIT_PARSE;
                continue;
            }
        };
        let rec = record(&g)?;
        match classify(&g) {
            Ok(r) if json => writeln!(out, "{}", report_json(&r, Some(&rec))),
            Ok(r) => writeln!(out, "{rec} {}", report_line(&r)),
            Err(e) => {
                eprintln!("line {}: {e}", i + 1);
                code = code.max(EXIT_DOMAIN);
                continue;
            }
        }
        .map_err(domain)?;
    }
    Ok(code)
}

fn parse_cells(spec: &str) -> Result<Vec<(usize, usize)>, Failure> {
    let cleaned: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    cleaned
        .split("),")
        .map(|c| c.trim_matches(|ch| ch == '(' || ch == ')'))
        .filter(|c| !c.is_empty())
        .map(|c| {
            let (a, b) = c
                .split_once(',')
                .ok_or_else(|| Failure(EXIT_PARSE, format!("bad cell {c:?}")))?;
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Failure(EXIT_PARSE, format!("bad number {s:?} in cell {c:?}")))
            };
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

fn catalogue_cells(root: &Path) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    let Ok(dirs) = fs::read_dir(root) else {
        return cells;
    };
    for d in dirs.flatten() {
        let Some(rho) = d.file_name().to_str().and_then(|s| s.parse::<usize>().ok()) else {
            continue;
        };
        let Ok(files) = fs::read_dir(d.path()) else {
            continue;
        };
        for f in files.flatten() {
            let name = f.file_name();
            if let Some(n) = name
                .to_str()
                .and_then(|s| s.strip_suffix(".g6"))
                .and_then(|s| s.parse::<usize>().ok())
            {
                cells.push((rho, n));
            }
        }
    }
    cells.sort_unstable();
    cells
}

/// Degrees 3..=11 against orders 5..=19, where a regular graph can exist.
fn default_grid() -> impl Iterator<Item = (usize, usize)> {
    (3..=11usize).flat_map(|rho| (5..=19usize).filter(move |&n| n > rho && rho * n % 2 == 0).map(move |n| (rho, n)))
}

fn run_table(cells: Option<&str>, fixtures: &Path, workers: usize, json: bool, out: &mut impl Write) -> Result<u8, Failure> {
    let wanted = match cells {
        Some(spec) => parse_cells(spec)?,
        None => {
            let mut cells = catalogue_cells(fixtures);
            cells.extend(default_grid());
            cells.sort_unstable();
            cells.dedup();
            cells
        }
    };
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for (rho, n) in wanted {
        let path = fixtures.join(rho.to_string()).join(format!("{n}.g6"));
        let (cell, outcome) = if path.exists() {
            let graphs = read_graph6_file(&path)?;
            let (cell, outcome) = existence_verdict(n, rho, graphs, true, workers);
            (cell, Some(outcome))
        } else {
            (Cell::NotAttempted, None)
        };
        eprintln!("rho={rho} n={n} {}", cell.symbol());
        if json {
            json_rows.push(match &outcome {
                Some(o) => format!(
                    "{{\"rho\":{rho},\"n\":{n},\"symbol\":\"{}\",\"verdict\":\"{}\",\"graphs\":{},\"signings\":{}}}",
                    cell.symbol(),
                    o.verdict,
                    o.graphs_scanned,
                    o.signings_tested
                ),
                None => format!("{{\"rho\":{rho},\"n\":{n},\"symbol\":\"{}\",\"verdict\":null}}", cell.symbol()),
            });
        }
        rows.push((rho, n, cell));
    }
    if json {
        writeln!(out, "{{\"schema\":1,\"cells\":[{}]}}", json_rows.join(",")).map_err(domain)?;
    } else {
        write!(out, "{}", render_table(&rows)).map_err(domain)?;
    }
    Ok(0)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify {
            input,
            json,
            underlying_only,
        } => run_classify(&input, json, underlying_only, out),
        Command::Search {
            graphs,
            n,
            rho,
            mode,
            want,
            workers,
            limit,
            max_signings,
            prepass,
            json,
        } => {
            let catalogue = read_graph6_file(&graphs)?;
            let cfg = SearchConfig {
                mode,
                want,
                workers,
                max_graphs: limit,
                max_signings_per_graph: max_signings,
                prepass,
            };
            let outcome = search_class(n, rho, catalogue, &cfg);
            for e in &outcome.errors {
                eprintln!("graph {}: {}", e.graph_index, e.message);
            }
            if json {
                writeln!(out, "{}", outcome_json(&outcome)).map_err(domain)?;
            } else {
                let cell = cell_for(&outcome, limit.is_none());
                write!(out, "{}", outcome_text(&outcome)).map_err(domain)?;
                writeln!(out, "cell={}", cell.symbol()).map_err(domain)?;
            }
            Ok(if outcome.verdict == Verdict::Capped { EXIT_CAPPED } else { 0 })
        }
        Command::Table {
            cells,
            fixtures,
            workers,
            json,
        } => run_table(cells.as_deref(), &fixtures, workers, json, out),
        Command::Fowler { pivot, input } => {
            for g in read_signed(&input)? {
                let e = fowler(&g, pivot).map_err(domain)?;
                writeln!(out, "{}", record(&e.result)?).map_err(domain)?;
            }
            Ok(0)
        }
        Command::CompleteNut { k } => {
            let c = complete_nut(k).map_err(domain)?;
            writeln!(out, "{}", record(&c.graph)?).map_err(domain)?;
            Ok(0)
        }
        Command::Switch { at, input } => {
            let members: Vec<usize> = at
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().map_err(|_| Failure(EXIT_PARSE, format!("bad vertex {s:?}"))))
                .collect::<Result<_, _>>()?;
            for g in read_signed(&input)? {
                let set = SwitchingSet::new(g.order(), members.iter().copied()).map_err(domain)?;
                writeln!(out, "{}", record(&g.switch(&set).map_err(domain)?)?).map_err(domain)?;
            }
            Ok(0)
        }
        Command::Canonical { input } => {
            for g in read_signed(&input)? {
                let (rep, _) = positive_representative(&g).map_err(domain)?;
                writeln!(out, "{}", record(&rep)?).map_err(domain)?;
            }
            Ok(0)
        }
        Command::Kernel { fullify, input } => {
            for g in read_signed(&input)? {
                let mut basis = kernel_basis(&g.adjacency_matrix().to_rational());
                if fullify {
                    basis = fullify_basis(&basis).map_err(domain)?;
                }
                let vectors: Vec<String> = basis.vectors().iter().map(|v| join(&primitive_integer(v))).collect();
                writeln!(
                    out,
                    "{} nullity={} full={} basis={}",
                    record(&g)?,
                    basis.nullity(),
                    basis.is_full(),
                    vectors.join(";")
                )
                .map_err(domain)?;
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
