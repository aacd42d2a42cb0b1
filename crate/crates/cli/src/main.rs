use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use specwb_core::dense::{is_dense, ClaimId, DensityMode};
use specwb_core::ideal::{jacobson, nilradical, Spectra, DEFAULT_IDEAL_CAP};
use specwb_core::ring::{parse_ring, FiniteRing, SubringPair};
use specwb_core::topology::{enumerate_posets, is_cn_chain, is_normal_topological, is_pm, is_weak_cn, space_from_ring, write_poset};
use specwb_core::workbench::{hunt_intermediate_density, hunt_wcn_vs_cn, run_audit, AuditConfig, CorpusSpec};
use specwb_core::BitSet;

#[derive(Parser)]
#[command(name = "specwb", version, about = "Dense subrings and spectral topology of finite commutative rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate claims over the generated corpus and write a JSONL report.
    Audit {
        /// Comma-separated claim ids, or `all`.
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long, default_value_t = 16)]
        max_ring: usize,
        #[arg(long, default_value_t = 5)]
        max_poset: usize,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Milliseconds; tasks not started in time are reported as truncated.
        #[arg(long)]
        time_budget: Option<u64>,
        /// Zero all timings so reports compare byte for byte.
        #[arg(long)]
        stable: bool,
    },
    /// Prime, maximal and minimal ideals of a ring file.
    Spectrum {
        #[arg(long)]
        ring: PathBuf,
    },
    /// Decide whether a subring is dense in its ambient ring.
    Dense {
        #[arg(long)]
        ambient: PathBuf,
        /// File listing the subring's elements, separated by whitespace or commas.
        #[arg(long)]
        subring: PathBuf,
        #[arg(long, default_value = "primes")]
        mode: String,
    },
    /// Run one of the counterexample searches.
    Hunt {
        #[arg(value_enum)]
        which: Hunter,
        #[arg(long, default_value_t = 24)]
        max_ring: usize,
        #[arg(long, default_value_t = 5)]
        max_poset: usize,
    },
    /// Evaluate predicates on every labeled poset with `n` points.
    Posets {
        #[arg(long)]
        n: usize,
        /// Any of pm, cn, wcn, normal.
        #[arg(long, default_value = "pm,cn,wcn")]
        predicates: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Hunter {
    IntermediateDensity,
    WcnVsCn,
}

fn read_ring(path: &PathBuf) -> Result<FiniteRing> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_ring(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_claims(s: &str) -> Result<Vec<ClaimId>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(ClaimId::ALL.to_vec());
    }
    Ok(s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect::<Result<Vec<ClaimId>, _>>()?)
}

fn parse_elements(text: &str, ring: &FiniteRing) -> Result<BitSet> {
    let mut set = BitSet::default();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let e: usize = tok.parse().with_context(|| format!("bad element {tok:?}"))?;
        if e >= ring.size() {
            bail!("element {e} is outside a ring of size {}", ring.size());
        }
        set.insert(e);
    }
    Ok(set)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Audit { claims, max_ring, max_poset, workers, out, seed, time_budget, stable } => {
            let spec = CorpusSpec { seed, time_budget_ms: time_budget, ..CorpusSpec::bounded(max_ring, max_poset) };
            let workers = workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let config = AuditConfig { claims: parse_claims(&claims)?, workers, stable };
            let report = run_audit(&spec, &config)?;
            let text = report.to_jsonl();
            match out {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            for (claim, t) in &report.summary.tallies {
                eprintln!(
                    "{claim}: {} instances, {} verified, {} refuted, {} inapplicable, {} errors",
                    t.instances, t.verified, t.refuted, t.inapplicable, t.errors
                );
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
        Command::Spectrum { ring } => {
            let r = read_ring(&ring)?;
            let sp = Spectra::compute(&r, DEFAULT_IDEAL_CAP)?;
            let space = space_from_ring(&r, DEFAULT_IDEAL_CAP)?;
            let out = json!({
                "ring": r.name(),
                "size": r.size(),
                "primes": sp.primes.iter().map(|p| p.members()).collect::<Vec<_>>(),
                "maximal": sp.maximal.iter().map(|p| p.members()).collect::<Vec<_>>(),
                "minimal": sp.minimal.iter().map(|p| p.members()).collect::<Vec<_>>(),
                "nilradical": nilradical(&r).members(),
                "jacobson": jacobson(&r, DEFAULT_IDEAL_CAP)?.members(),
                "poset": write_poset(&space.space),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Dense { ambient, subring, mode } => {
            let r = std::sync::Arc::new(read_ring(&ambient)?);
            let text = fs::read_to_string(&subring).with_context(|| format!("reading {}", subring.display()))?;
            let member = parse_elements(&text, &r)?;
            let pair = SubringPair::new(r.clone(), member)?;
            let mode: DensityMode = mode.parse()?;
            let report = is_dense(&pair, mode, DEFAULT_IDEAL_CAP)?;
            let out = json!({
                "ambient": r.name(),
                "subring": member,
                "mode": report.mode,
                "dense": report.dense,
                "failure": report.witness_fail,
                "witnesses": report.witness_table,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Hunt { which, max_ring, max_poset } => {
            let spec = CorpusSpec::bounded(max_ring, max_poset);
            let out = match which {
                Hunter::IntermediateDensity => serde_json::to_value(hunt_intermediate_density(&spec)?)?,
                Hunter::WcnVsCn => serde_json::to_value(hunt_wcn_vs_cn(&spec)?)?,
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Posets { n, predicates } => {
            let preds: Vec<&str> = predicates.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
            if let Some(p) = preds.iter().find(|p| !["pm", "cn", "wcn", "normal"].contains(p)) {
                bail!("unknown predicate {p:?}; expected pm, cn, wcn or normal");
            }
            for s in enumerate_posets(n)? {
                let mut row = serde_json::Map::new();
                row.insert("relations".into(), json!(s.strict_relations()));
                for &p in &preds {
                    let v = match p {
                        "pm" => is_pm(&s),
                        "cn" => is_cn_chain(&s),
                        "wcn" => is_weak_cn(&s),
                        _ => is_normal_topological(&s, n.max(1))?,
                    };
                    row.insert(p.into(), json!(v));
                }
                println!("{}", serde_json::Value::Object(row));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
