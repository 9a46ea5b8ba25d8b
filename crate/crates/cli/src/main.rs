mod sweep;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use distbal::claims::{Claim, ClaimParams, ClaimReport};
use distbal::io::{parse_edge_list, to_dot, to_edge_list};
use distbal::report::{analyze, AnalyzeOptions, AnalyzeReport};
use distbal::{FamilySpec, Graph, Permutation};
use serde::Serialize;

use sweep::{Bounds, SweepFamily, SweepFilter};

/// Distance-balance analysis of generalized Petersen graphs, Folkman-type
/// tetracirculants and arbitrary edge lists.
#[derive(Debug, Parser)]
#[command(name = "distbal", version)]
struct Cli {
    /// Output format; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the payload here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print run metadata as JSON on stderr.
    #[arg(long, global = true)]
    meta: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
    Dot,
    Edgelist,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every balance predicate on a family spec or an edge-list file.
    Analyze {
        /// `gp:n,k`, `tetra:n;S00;S01;S10;S11`, `gfolk:n;R;T`, `qrfolk:p`, or a path.
        input: String,
        /// Include the balance triple of every arc.
        #[arg(long)]
        triples: bool,
        /// JSON array of vertex images to test as an automorphism.
        #[arg(long, value_name = "FILE")]
        check_perm: Option<PathBuf>,
    },
    /// Tabulate a family over a parameter range.
    Sweep {
        #[arg(value_enum)]
        family: SweepFamily,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        k_min: Option<i64>,
        #[arg(long)]
        k_max: Option<i64>,
        #[arg(long)]
        p_max: Option<u64>,
        #[arg(long, value_enum)]
        filter: Option<SweepFilter>,
    },
    /// Check a classification claim against the oracle; exit 1 on any mismatch.
    Verify {
        claim: String,
        /// Shorthand for `--k-min K --k-max K`.
        #[arg(long, conflicts_with_all = ["k_min", "k_max"])]
        k: Option<i64>,
        #[arg(long)]
        k_min: Option<i64>,
        #[arg(long)]
        k_max: Option<i64>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        p_max: Option<u64>,
    },
    /// Write the graph of a spec as an edge list or DOT.
    Export { spec: String },
}

#[derive(Serialize)]
struct Meta<'a> {
    version: &'static str,
    command: &'a str,
    jobs: usize,
    elapsed_ms: u128,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let result = run(&cli);
    if cli.meta {
        let meta = Meta {
            version: env!("CARGO_PKG_VERSION"),
            command: command_name(&cli.command),
            jobs: rayon::current_num_threads(),
            elapsed_ms: started.elapsed().as_millis(),
        };
        eprintln!("{}", serde_json::to_string(&meta).expect("metadata serializes"));
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze { .. } => "analyze",
        Command::Sweep { .. } => "sweep",
        Command::Verify { .. } => "verify",
        Command::Export { .. } => "export",
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!("--jobs must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    let (payload, code) = match &cli.command {
        Command::Analyze {
            input,
            triples,
            check_perm,
        } => {
            let check_perm = check_perm.as_deref().map(read_permutation).transpose()?;
            let options = AnalyzeOptions {
                triples: *triples,
                check_perm,
            };
            let report = analyze_input(input, &options)?;
            let text = match format(cli, Format::Json, &[Format::Json, Format::Table])? {
                Format::Table => analyze_table(&report),
                _ => json(&report)?,
            };
            (text, ExitCode::SUCCESS)
        }
        Command::Sweep {
            family,
            n_min,
            n_max,
            k_min,
            k_max,
            p_max,
            filter,
        } => {
            let bounds = Bounds {
                n_min: *n_min,
                n_max: *n_max,
                k_min: *k_min,
                k_max: *k_max,
                p_max: *p_max,
            };
            let report = sweep::run(*family, bounds, *filter)?;
            let text = match format(cli, Format::Csv, &[Format::Csv, Format::Json])? {
                Format::Json => json(&report)?,
                _ => sweep::to_csv(&report)?,
            };
            (text, ExitCode::SUCCESS)
        }
        Command::Verify {
            claim,
            k,
            k_min,
            k_max,
            n_max,
            p_max,
        } => {
            let claim: Claim = claim.parse()?;
            let params = ClaimParams {
                k_min: k.or(*k_min),
                k_max: k.or(*k_max),
                n_max: *n_max,
                p_max: *p_max,
            };
            let report = claim.run(&params)?;
            let text = match format(cli, Format::Table, &[Format::Table, Format::Json])? {
                Format::Json => json(&VerifyOutput {
                    passed: report.passed(),
                    report: &report,
                })?,
                _ => verify_table(&report),
            };
            let code = if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
            (text, code)
        }
        Command::Export { spec } => {
            let g = parse_spec(spec)?.build()?;
            let text = match format(cli, Format::Edgelist, &[Format::Edgelist, Format::Dot])? {
                Format::Dot => to_dot(&g),
                _ => to_edge_list(&g),
            };
            (text, ExitCode::SUCCESS)
        }
    };
    match &cli.out {
        Some(path) => fs::write(path, payload).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{payload}"),
    }
    Ok(code)
}

fn format(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = cli.format.unwrap_or(default);
    if !allowed.contains(&f) {
        let names: Vec<_> = allowed
            .iter()
            .map(|a| a.to_possible_value().expect("no skipped variants").get_name().to_string())
            .collect();
        bail!(
            "format {:?} is not supported by {} (use one of: {})",
            f.to_possible_value().expect("no skipped variants").get_name(),
            command_name(&cli.command),
            names.join(", ")
        );
    }
    Ok(f)
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn parse_spec(s: &str) -> Result<FamilySpec> {
    s.parse().with_context(|| format!("invalid spec {s:?}"))
}

/// An existing path is read as an edge list; anything else must be a spec.
fn analyze_input(input: &str, options: &AnalyzeOptions) -> Result<AnalyzeReport> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        let g: Graph = parse_edge_list(&text).with_context(|| format!("parsing {input}"))?;
        return analyze(input, &g, None, options).with_context(|| format!("analyzing {input}"));
    }
    let spec = parse_spec(input)?;
    let g = spec.build()?;
    Ok(analyze(input, &g, Some(&spec), options)?)
}

fn read_permutation(path: &Path) -> Result<Permutation> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing permutation in {}", path.display()))
}

fn flag(b: Option<bool>) -> String {
    b.map_or_else(|| "-".to_string(), |b| b.to_string())
}

fn analyze_table(r: &AnalyzeReport) -> String {
    let mut out = format!(
        "spec       {}\nvertices   {}\nedges      {}\nbipartite  {}\ndb         {}\nsdb        {}\nddr        {}\ndiameter   {}\nvt         {}\n",
        r.spec, r.vertices, r.edges, r.bipartite, r.db, r.sdb, r.ddr, r.diameter, flag(r.vt)
    );
    if let Some(w) = &r.witness {
        out += &format!(
            "witness    edge {}-{} ({}-{}), k={}: |D^k_(k-1)|={} |D^(k-1)_k|={}\n",
            w.u, w.v, w.u_label, w.v_label, w.k, w.below, w.above
        );
    }
    if let Some(a) = r.automorphism {
        out += &format!("automorphism {a}\n");
    }
    if let Some(triples) = &r.triples {
        out += "u\tv\tleft\tcentral\tright\n";
        for t in triples {
            out += &format!("{}\t{}\t{}\t{}\t{}\n", t.u, t.v, t.left, t.central, t.right);
        }
    }
    out
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    passed: bool,
    #[serde(flatten)]
    report: &'a ClaimReport,
}

fn verify_table(r: &ClaimReport) -> String {
    let mut out = String::new();
    for row in &r.rows {
        let status = if row.pass { "ok  " } else { "FAIL" };
        out += &format!("{status} {}: expected {}, observed {}\n", row.subject, row.expected, row.observed);
    }
    let passed = r.rows.iter().filter(|row| row.pass).count();
    out += &format!("{}: {passed}/{} checks passed\n", r.claim, r.rows.len());
    out
}
