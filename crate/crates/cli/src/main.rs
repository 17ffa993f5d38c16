//! Command-line front end: generators, guessers, verification and the table report.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use holorec::enumerators::{a199250_system, adjacent_permutation_system, check_conjecture, tm_gf, TransferSystem};
use holorec::exact_arith::Hyper;
use holorec::guessing::{guess_la, guess_lll, GuessConfig};
use holorec::workbench::{
    emit_bfile, fetch_bfile, lookup, parse_bfile, registry, run_report, Config, RegistryEntry, Transport,
};
use holorec::{Sequence, ShiftOperator};

#[derive(Parser)]
#[command(name = "holorec", version, about = "Guess and check recurrences for integer sequences")]
struct Cli {
    /// key = value configuration file (environment variables override it).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    La,
    Lll,
}

#[derive(Subcommand)]
enum Command {
    /// Generated terms as a b-file.
    Terms {
        id: String,
        /// Largest index.
        #[arg(long)]
        n: u64,
    },
    /// Terms from the independent brute-force oracle.
    Oracle {
        id: String,
        #[arg(long)]
        n: u64,
    },
    /// Guess a recurrence.
    Guess {
        id: String,
        #[arg(long, value_enum, default_value = "la")]
        method: MethodArg,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Divide terms by this hypergeometric term first, e.g. "binomial(3n,n)".
        #[arg(long)]
        rescale: Option<String>,
        /// Largest index to generate.
        #[arg(long)]
        n: Option<u64>,
        /// Read terms from a b-file instead of the generator.
        #[arg(long)]
        bfile: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        holdout: usize,
    },
    /// Check an operator file against the terms (and optionally against a second operator).
    Verify {
        id: String,
        #[arg(long)]
        operator: PathBuf,
        /// Operator that the first one should right-divide.
        #[arg(long)]
        left_multiple: Option<PathBuf>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        bfile: Option<PathBuf>,
        /// Trailing terms treated as holdout.
        #[arg(long, default_value_t = 0)]
        holdout: usize,
    },
    /// Transfer-matrix generating function.
    Gf { id: String },
    /// Check every conjecture registered for the id.
    CheckConjectures {
        id: String,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Table reproduction (all registered ids when none are given).
    Report { ids: Vec<String> },
    /// Download (or read from the cache) the OEIS b-file.
    Fetch { id: String },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn failed(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

struct Http;

impl Transport for Http {
    fn get(&self, url: &str) -> Result<(u16, String), String> {
        let agent = ureq::Agent::config_builder()
            .http_status_as_error(false)
            .timeout_global(Some(Duration::from_secs(60)))
            .build()
            .new_agent();
        let mut resp = agent.get(url).call().map_err(|e| e.to_string())?;
        let status = resp.status().as_u16();
        let body = resp.body_mut().read_to_string().map_err(|e| e.to_string())?;
        Ok((status, body))
    }
}

fn entry(id: &str) -> Result<RegistryEntry, Failure> {
    lookup(id).ok_or_else(|| usage(format!("unknown id {id}")))
}

fn load_terms(id: &str, n: Option<u64>, bfile: Option<&PathBuf>) -> Result<Sequence, Failure> {
    if let Some(p) = bfile {
        let text = std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
        return parse_bfile(&text).map(|s| s.with_id(id)).map_err(|e| usage(format!("{}: {e}", p.display())));
    }
    let e = entry(id)?;
    Ok(e.terms(n.unwrap_or(e.report_max)))
}

fn read_operator(p: &PathBuf) -> Result<ShiftOperator, Failure> {
    let text = std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
    text.trim().parse().map_err(|e| usage(format!("{}: {e}", p.display())))
}

fn system(id: &str) -> Option<TransferSystem> {
    match id {
        "A177317" => Some(adjacent_permutation_system(5)),
        "A199250" => Some(a199250_system()),
        _ => None,
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let config = Config::load(cli.config.as_deref(), |k| std::env::var(k).ok()).map_err(|e| usage(e.to_string()))?;
    match cli.command {
        Command::Terms { id, n } => {
            print!("{}", emit_bfile(&entry(&id)?.terms(n)));
        }
        Command::Oracle { id, n } => {
            let e = entry(&id)?;
            let s = e.oracle_terms(n).ok_or_else(|| usage(format!("{id} has no oracle")))?;
            print!("{}", emit_bfile(&s));
        }
        Command::Guess { id, method, max_order, max_degree, rescale, n, bfile, holdout } => {
            let a = load_terms(&id, n, bfile.as_ref())?;
            let mut cfg = GuessConfig::bounds(
                max_order.unwrap_or(config.budget.max_order),
                max_degree.unwrap_or(config.budget.max_degree),
            )
            .with_holdout(holdout);
            if let Some(r) = rescale {
                cfg.shift_ansatz = Some(Hyper::parse(&r).map_err(|e| usage(format!("--rescale: {e}")))?);
            }
            let found = match method {
                MethodArg::La => guess_la(&a, &cfg),
                MethodArg::Lll => guess_lll(&a, &cfg),
            }
            .map_err(|e| failed(e.to_string()))?;
            match found {
                Some(g) => print!("{}", g.to_text()),
                None => return Err(failed("no recurrence found")),
            }
        }
        Command::Verify { id, operator, left_multiple, n, bfile, holdout } => {
            let a = load_terms(&id, n, bfile.as_ref())?;
            let l = read_operator(&operator)?;
            let r = l.order() as i64;
            let used = a.len().saturating_sub(holdout).max(1);
            let data = a.prefix(used);
            let ok_data = l.annihilates(&data);
            println!("annihilates {}..={}: {}", data.offset, data.last_index(), if ok_data { "yes" } else { "no" });
            let mut ok = ok_data;
            if holdout > 0 {
                let lo = (a.offset + used as i64 - r).max(a.offset);
                let hold = l.apply(&a, lo..=a.last_index() - r).map(|v| v.iter().all(num_traits::Zero::is_zero)).unwrap_or(false);
                println!("holdout {}: {}", holdout, if hold { "pass" } else { "fail" });
                ok &= hold;
            }
            if let Some(m) = left_multiple {
                let m = read_operator(&m)?;
                let rf = l.is_right_factor(&m);
                println!("right factor: {}", if rf { "yes" } else { "no" });
                ok &= rf;
            }
            if !ok {
                return Err(failed("verification failed"));
            }
        }
        Command::Gf { id } => {
            let sys = system(&id).ok_or_else(|| usage(format!("no transfer system for {id}")))?;
            let (num, den) = tm_gf(&sys).map_err(|e| failed(e.to_string()))?;
            println!("numerator {num}");
            println!("denominator {den}");
        }
        Command::CheckConjectures { id, n } => {
            let e = entry(&id)?;
            let specs = e.conjectures();
            if specs.is_empty() {
                return Err(usage(format!("no conjectures for {id}")));
            }
            let a = e.terms(n.unwrap_or(e.report_max));
            let mut ok = true;
            for spec in &specs {
                let rep = check_conjecture(spec, &a).map_err(|e| failed(e.to_string()))?;
                let verified = rep.largest_verified.map_or("-".into(), |v| v.to_string());
                match rep.first_disagreement {
                    None => println!("{} agrees checked={:?} largest_verified={verified}", rep.id, rep.checked),
                    Some(k) => {
                        ok = false;
                        println!("{} disagrees at n={k} largest_verified={verified}", rep.id)
                    }
                }
                ok &= rep.agrees();
            }
            if !ok {
                return Err(failed("conjecture check failed"));
            }
        }
        Command::Report { ids } => {
            let all: Vec<String> = if ids.is_empty() { registry().iter().map(|e| e.id.to_string()).collect() } else { ids };
            let refs: Vec<&str> = all.iter().map(String::as_str).collect();
            print!("{}", run_report(&refs, &config.budget).to_text());
        }
        Command::Fetch { id } => {
            let s = fetch_bfile(&id, &config.cache_dir, config.network, &Http).map_err(|e| failed(e.to_string()))?;
            print!("{}", emit_bfile(&s));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("holorec: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
