//! Command-line front end: family enumeration, correspondence queries, and
//! verification runs.
//!
//! Exit codes: 0 on success, 1 when a verification suite records failures,
//! 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use lusztig_theta::degrees::{deg_sp_o, deg_unitary};
use lusztig_theta::symbols::{GroupFamily, GroupKind, Symbol};
use lusztig_theta::theta::{is_admissible, tau, theta_bar, theta_partners, DualPair};
use lusztig_theta::verify::{
    run_all, verify_degree_difference, verify_degree_oracle, verify_lusztig_identities,
    verify_structural_lemmas, verify_theta_rank_characterization, PairClass, TargetClass,
    VerificationReport,
};
use lusztig_theta::{BiPartition, MAX_ENUMERATION};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lusztig-theta",
    version,
    about = "Exact combinatorics of Lusztig symbols and the finite theta correspondence"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List a family's symbols with defect, rank, upsilon image and degree
    Enumerate {
        /// Family tag: U6, Sp4, O+4, O-4
        #[arg(long)]
        family: String,
    },
    /// Partners, tau, theta-bar and admissibility for one symbol
    Theta {
        /// Dual pair tag, e.g. U3:U6 or Sp2:O-4
        #[arg(long)]
        pair: String,
        /// Symbol as "[a,b|c,d]", inline JSON, or @FILE containing JSON
        #[arg(long)]
        symbol: String,
    },
    /// Run a verification suite (exit code 1 if any failure is recorded)
    Verify {
        /// degree-diff | theta-rank | structural | degree-oracle |
        /// lusztig-identities | all
        suite: String,
        /// Pair class for degree-diff: UU, SpO or OSp
        #[arg(long, default_value = "UU")]
        pair: String,
        /// Target class for theta-rank: U, Sp or O
        #[arg(long, default_value = "U")]
        target: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        k_max: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let (text, failed) = match &cli.command {
        Command::Enumerate { family } => (cmd_enumerate(family, cli.format)?, false),
        Command::Theta { pair, symbol } => (cmd_theta(pair, symbol, cli.format)?, false),
        Command::Verify {
            suite,
            pair,
            target,
            n_max,
            k_max,
        } => cmd_verify(suite, pair, target, *n_max, *k_max, cli.format)?,
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return Ok(ExitCode::from(1));
            }
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::from(if failed { 1 } else { 0 }))
}

#[derive(Serialize)]
struct SymbolRow {
    symbol: Symbol,
    compact: String,
    defect: i64,
    rank: usize,
    upsilon: BiPartition,
    deg_q: i64,
}

#[derive(Serialize)]
struct EnumerateOutput {
    family: String,
    count: usize,
    symbols: Vec<SymbolRow>,
}

fn family_rank(f: &GroupFamily, s: &Symbol) -> usize {
    match f.kind() {
        GroupKind::U => s.rank_u(),
        _ => s.rank(),
    }
}

fn family_degree(f: &GroupFamily, s: &Symbol) -> Result<i64, String> {
    let deg = match f.kind() {
        GroupKind::U => deg_unitary(s, f.size()),
        _ => deg_sp_o(s, f),
    };
    deg.map_err(|e| e.to_string())
}

fn cmd_enumerate(family: &str, format: Format) -> Result<String, String> {
    let f: GroupFamily = family.parse().map_err(|e| format!("{e}"))?;
    let symbols = f.enumerate().map_err(|e| format!("{e}"))?;
    let mut rows = Vec::with_capacity(symbols.len());
    for s in symbols {
        rows.push(SymbolRow {
            compact: s.to_string(),
            defect: s.defect(),
            rank: family_rank(&f, &s),
            upsilon: s.upsilon(),
            deg_q: family_degree(&f, &s)?,
            symbol: s,
        });
    }
    let output = EnumerateOutput {
        family: f.to_string(),
        count: rows.len(),
        symbols: rows,
    };
    Ok(match format {
        Format::Json => to_pretty_json(&output),
        Format::Table => {
            let mut text = String::new();
            let _ = writeln!(text, "{} symbols in {}", output.count, output.family);
            let _ = writeln!(
                text,
                "{:<18} {:>6} {:>5}  {:<16} {:>6}",
                "symbol", "defect", "rank", "upsilon", "deg_q"
            );
            for row in &output.symbols {
                let _ = writeln!(
                    text,
                    "{:<18} {:>6} {:>5}  {:<16} {:>6}",
                    row.compact,
                    row.defect,
                    row.rank,
                    row.upsilon.to_string(),
                    row.deg_q
                );
            }
            text
        }
    })
}

#[derive(Serialize)]
struct AdmissibilityRow {
    ell: usize,
    admissible: bool,
}

#[derive(Serialize)]
struct ThetaOutput {
    pair: DualPair,
    symbol: Symbol,
    tau: i64,
    theta_bar: Option<Symbol>,
    partners: Vec<Symbol>,
    admissible: Vec<AdmissibilityRow>,
}

fn parse_symbol_argument(arg: &str) -> Result<Symbol, String> {
    let arg = arg.trim();
    if let Some(path) = arg.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        return serde_json::from_str(&text).map_err(|e| format!("bad symbol JSON in {path}: {e}"));
    }
    if arg.starts_with('{') {
        return serde_json::from_str(arg).map_err(|e| format!("bad symbol JSON: {e}"));
    }
    arg.parse().map_err(|e| format!("{e}"))
}

fn cmd_theta(pair: &str, symbol: &str, format: Format) -> Result<String, String> {
    let pair: DualPair = pair.parse().map_err(|e| format!("{e}"))?;
    let symbol = parse_symbol_argument(symbol)?;
    if !pair.first().contains(&symbol) {
        return Err(format!(
            "symbol {symbol} is not a member of {}",
            pair.first()
        ));
    }
    let partners = theta_partners(&pair, &symbol).map_err(|e| format!("{e}"))?;
    let t = tau(&pair, &symbol);
    let image = theta_bar(&pair, &symbol).ok();
    let k = pair.first().size();
    let n = pair.second().size();
    let mut admissible = Vec::new();
    if n >= k {
        let step = if pair.first().kind() == GroupKind::U { 1 } else { 2 };
        for ell in (0..=(n - k)).step_by(step) {
            let value = is_admissible(&pair, &symbol, ell).map_err(|e| format!("{e}"))?;
            admissible.push(AdmissibilityRow {
                ell,
                admissible: value,
            });
        }
    }
    let output = ThetaOutput {
        pair,
        symbol,
        tau: t,
        theta_bar: image,
        partners,
        admissible,
    };
    Ok(match format {
        Format::Json => to_pretty_json(&output),
        Format::Table => {
            let mut text = String::new();
            let _ = writeln!(text, "pair      {}", output.pair);
            let _ = writeln!(text, "symbol    {}", output.symbol);
            let _ = writeln!(text, "tau       {}", output.tau);
            match &output.theta_bar {
                Some(s) => {
                    let _ = writeln!(text, "theta-bar {s}");
                }
                None => {
                    let _ = writeln!(text, "theta-bar undefined (tau < 0)");
                }
            }
            let _ = writeln!(text, "partners  {}", output.partners.len());
            for p in &output.partners {
                let _ = writeln!(text, "  {p}");
            }
            if !output.admissible.is_empty() {
                let flags: Vec<String> = output
                    .admissible
                    .iter()
                    .map(|r| format!("{}:{}", r.ell, if r.admissible { "yes" } else { "no" }))
                    .collect();
                let _ = writeln!(text, "admissible {}", flags.join(" "));
            }
            text
        }
    })
}

fn cmd_verify(
    suite: &str,
    pair: &str,
    target: &str,
    n_max: usize,
    k_max: usize,
    format: Format,
) -> Result<(String, bool), String> {
    if n_max > MAX_ENUMERATION || k_max > MAX_ENUMERATION {
        return Err(format!("bounds are capped at {MAX_ENUMERATION}"));
    }
    let reports: Vec<VerificationReport> = match suite {
        "degree-diff" => {
            let class = match pair {
                "UU" => PairClass::UU,
                "SpO" => PairClass::SpO,
                "OSp" => PairClass::OSp,
                other => return Err(format!("unknown pair class {other:?} (UU, SpO, OSp)")),
            };
            vec![verify_degree_difference(class, n_max).map_err(|e| format!("{e}"))?]
        }
        "theta-rank" => {
            let class = match target {
                "U" => TargetClass::U,
                "Sp" => TargetClass::Sp,
                "O" => TargetClass::Orthogonal,
                other => return Err(format!("unknown target class {other:?} (U, Sp, O)")),
            };
            vec![verify_theta_rank_characterization(class, n_max).map_err(|e| format!("{e}"))?]
        }
        "structural" => vec![verify_structural_lemmas(n_max).map_err(|e| format!("{e}"))?],
        "degree-oracle" => vec![verify_degree_oracle(k_max).map_err(|e| format!("{e}"))?],
        "lusztig-identities" => vec![verify_lusztig_identities(k_max.max(n_max), n_max)],
        "all" => run_all(n_max).map_err(|e| format!("{e}"))?,
        other => return Err(format!("unknown suite {other:?}")),
    };
    let failed = reports.iter().any(|r| !r.passed());
    let text = match format {
        Format::Json => to_pretty_json(&reports),
        Format::Table => {
            let mut text = String::new();
            for r in &reports {
                text.push_str(&r.render_table());
            }
            let total: usize = reports.iter().map(|r| r.failures.len()).sum();
            let _ = writeln!(
                text,
                "{}: {} suite(s), {} failure(s)",
                if failed { "FAIL" } else { "ok" },
                reports.len(),
                total
            );
            text
        }
    };
    Ok((text, failed))
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    text.push('\n');
    text
}
