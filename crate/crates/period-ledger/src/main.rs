use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use period_ledger::critical::critical_report;
use period_ledger::records::Record;
use period_ledger::scenario::{InputError, Scenario};
use period_ledger::sweep::{
    cplusminus_jobs, duality_jobs, effective_seed, run_jobs, seeded_tuples, split_tuples,
    thmfact_jobs, thmfact_signatures, Job, Outcome, DEFAULT_SEED,
};
use period_ledger::weyl::{parse_rows, parse_shape, weyl_report};
use period_ledger_core::weights::WeightVector;

/// Exact period-relation ledger: critical values, determinant checks and
/// lattice derivations.
#[derive(Parser, Debug)]
#[command(name = "period-ledger", version)]
struct Cli {
    /// Structured JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Add wall time to every record. Output is then no longer reproducible.
    #[arg(long, global = true)]
    timings: bool,
    /// Seed for randomized sweeps; PERIOD_LEDGER_SEED takes precedence.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Print every step, not only those of failing records.
    #[arg(long, global = true)]
    steps: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Signatures, critical set, Γ shifts and admissible twists of a scenario.
    Critical { scenario: PathBuf },
    /// Run verifications, one record per parameter tuple.
    Verify(VerifyArgs),
    /// List W¹ with lengths, w*μ, λ♭ and Hodge indices.
    Weyl {
        /// Signatures `r,s` per place, separated by `;`.
        #[arg(long)]
        shape: String,
        /// Weight rows `a1,...,an`, separated by `;`.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        a0: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Duality,
    Cplusminus,
    Thmfact,
    Maintheorem,
    Prediction,
    Tate,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    kind: Kind,
    /// Largest rank of a sweep.
    #[arg(long)]
    dmax: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    d_plus: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    e: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<i64>,
    /// Signatures `r,s` per place, separated by `;`.
    #[arg(long)]
    shape: Option<String>,
    /// Take n, shape, w and m from a scenario file.
    #[arg(long)]
    scenario: Option<PathBuf>,
    /// Drop the Deligne-conjecture axiom in `prediction`.
    #[arg(long)]
    no_deligne: bool,
    /// Number of seeded tuples in ledger sweeps.
    #[arg(long, default_value_t = 50)]
    count: usize,
}

const MAX_RANK: usize = 8;

#[derive(Serialize)]
struct Summary {
    records: usize,
    passed: usize,
    failed: usize,
    refused: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    records: Vec<&'a Record>,
    summary: Summary,
}

fn input_error(err: InputError) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json<T: Serialize>(value: &T) {
    emit(&(serde_json::to_string_pretty(value).expect("serializable report") + "\n"));
}

fn uniform_shape(n: usize, e: usize) -> Vec<(usize, usize)> {
    let r = n - n / 2;
    vec![(r, n - r); e]
}

struct Plan {
    jobs: Vec<Job>,
    seed: Option<u64>,
}

fn ledger_plan(args: &VerifyArgs, cli: &Cli) -> Result<Plan, InputError> {
    let kind = args.kind;
    let mut n = args.n;
    let mut shape = match &args.shape {
        Some(s) => Some(parse_shape(s)?.places),
        None => None,
    };
    let mut w = args.w;
    let mut m = args.m;
    let mut deligne = !args.no_deligne;
    let mut seed_hint = None;
    if let Some(path) = &args.scenario {
        let checked = Scenario::load(path)?.check()?;
        let report = critical_report(&checked)?;
        n = Some(checked.scenario.n);
        shape.get_or_insert(report.places.iter().map(|p| (p.r, p.s)).collect());
        w.get_or_insert(checked.psi.weight);
        if let Some(sm) = checked.scenario.options.m {
            m.get_or_insert(sm);
        }
        if checked.scenario.options.deligne == Some(false) {
            deligne = false;
        }
        seed_hint = checked.scenario.options.seed;
    }
    if let Some(n) = n {
        if n == 0 || n > MAX_RANK {
            return Err(InputError(format!(
                "unsupported rank n={n}: need 1 <= n <= {MAX_RANK}"
            )));
        }
        let shape = match shape {
            Some(s) => {
                if s[0].0 + s[0].1 != n {
                    return Err(InputError(format!("shape {s:?} does not have rank n={n}")));
                }
                if args.e.is_some_and(|e| e != s.len()) {
                    return Err(InputError(format!(
                        "shape has {} places, --e says {}",
                        s.len(),
                        args.e.unwrap()
                    )));
                }
                s
            }
            None => uniform_shape(n, args.e.unwrap_or(1)),
        };
        let m = m.unwrap_or(n as i64 + 1);
        let job = match kind {
            Kind::Maintheorem => Job::MainTheorem {
                n,
                m,
                xi: args.xi.unwrap_or(0),
                shape,
            },
            Kind::Prediction => Job::Prediction {
                n,
                w: w.unwrap_or(1),
                m,
                shape,
                deligne,
            },
            _ => Job::Tate { n, shape },
        };
        return Ok(Plan {
            jobs: vec![job],
            seed: None,
        });
    }
    if kind == Kind::Tate {
        let jobs = split_tuples(4, 2)
            .into_iter()
            .map(|t| Job::Tate {
                n: t.n,
                shape: t.shape,
            })
            .collect();
        return Ok(Plan { jobs, seed: None });
    }
    let seed =
        effective_seed(cli.seed.or(seed_hint).unwrap_or(DEFAULT_SEED)).map_err(InputError)?;
    let mut jobs = Vec::new();
    for t in seeded_tuples(seed, args.count) {
        let [main, pred] = t.jobs();
        jobs.push(if kind == Kind::Maintheorem {
            main
        } else {
            pred
        });
    }
    Ok(Plan {
        jobs,
        seed: Some(seed),
    })
}

fn verify_plan(args: &VerifyArgs, cli: &Cli) -> Result<Plan, InputError> {
    let check_rank = |d: usize| {
        if d == 0 || d > MAX_RANK {
            Err(InputError(format!(
                "unsupported rank {d}: need 1 <= d <= {MAX_RANK}"
            )))
        } else {
            Ok(d)
        }
    };
    let plan = |jobs| Ok(Plan { jobs, seed: None });
    match args.kind {
        Kind::Duality => match (args.d, args.r) {
            (Some(d), Some(r)) => {
                let d = check_rank(d)?;
                plan(vec![Job::Duality {
                    d,
                    r,
                    s: d.saturating_sub(r),
                }])
            }
            (None, None) => plan(duality_jobs(check_rank(args.dmax.unwrap_or(8))?)),
            _ => Err(InputError(
                "duality needs both --d and --r, or neither".into(),
            )),
        },
        Kind::Cplusminus => {
            let jobs = match args.d {
                Some(d) => {
                    let d = check_rank(d)?;
                    cplusminus_jobs(d)
                        .into_iter()
                        .filter(|j| matches!(j, Job::CPlusMinus { d: jd, .. } if *jd == d))
                        .collect()
                }
                None => cplusminus_jobs(check_rank(args.dmax.unwrap_or(5))?),
            };
            plan(jobs)
        }
        Kind::Thmfact => match (args.d, args.r) {
            (Some(d), r) => {
                let d = check_rank(d)?;
                let signatures = match args.d_plus {
                    Some(dp) => vec![dp],
                    None => thmfact_signatures(d),
                };
                let rs: Vec<usize> = match r {
                    Some(r) => vec![r],
                    None => (d / 2 + 1..=d).collect(),
                };
                let mut jobs = Vec::new();
                for &d_plus in &signatures {
                    for &r in &rs {
                        jobs.push(Job::Thmfact { d, d_plus, r });
                    }
                }
                plan(jobs)
            }
            (None, None) => plan(thmfact_jobs(check_rank(args.dmax.unwrap_or(4))?)),
            (None, Some(_)) => Err(InputError("thmfact --r needs --d".into())),
        },
        _ => ledger_plan(args, cli),
    }
}

fn cmd_verify(args: &VerifyArgs, cli: &Cli) -> ExitCode {
    let plan = match verify_plan(args, cli) {
        Ok(p) => p,
        Err(err) => return input_error(err),
    };
    let outcomes: Vec<Outcome> = run_jobs(&plan.jobs, cli.jobs, cli.timings);
    let passed = outcomes.iter().filter(|o| o.record.passed).count();
    let refused = outcomes.iter().filter(|o| o.error.is_some()).count();
    let summary = Summary {
        records: outcomes.len(),
        passed,
        failed: outcomes.len() - passed - refused,
        refused,
        seed: plan.seed,
    };
    if cli.json {
        print_json(&VerifyOutput {
            records: outcomes.iter().map(|o| &o.record).collect(),
            summary,
        });
    } else {
        for o in &outcomes {
            emit(&o.record.render(cli.steps));
        }
        let mut line = format!(
            "summary: {} records, {} passed, {} failed, {} refused",
            summary.records, summary.passed, summary.failed, summary.refused
        );
        if let Some(seed) = summary.seed {
            line.push_str(&format!(", seed {seed}"));
        }
        emit(&(line + "\n"));
    }
    for o in &outcomes {
        if let Some(err) = &o.error {
            eprintln!("error: {} {}", o.record.claim_id, err);
        }
    }
    if refused > 0 {
        ExitCode::from(2)
    } else if passed < outcomes.len() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_critical(path: &PathBuf, cli: &Cli) -> ExitCode {
    let report = match Scenario::load(path)
        .and_then(|s| s.check())
        .and_then(|c| critical_report(&c))
    {
        Ok(r) => r,
        Err(err) => return input_error(err),
    };
    if cli.json {
        print_json(&report);
    } else {
        emit(&report.render());
    }
    if report.oracle_agrees && report.upper_bound_matches != Some(false) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_weyl(shape: &str, mu: &str, a0: i64, cli: &Cli) -> ExitCode {
    let result = parse_shape(shape).and_then(|shape| {
        let rows = parse_rows(mu)?;
        let mu = WeightVector::new(rows, a0).map_err(|e| InputError(format!("mu: {e}")))?;
        weyl_report(&shape, &mu)
    });
    match result {
        Ok(report) => {
            if cli.json {
                print_json(&report);
            } else {
                emit(&report.render());
            }
            ExitCode::SUCCESS
        }
        Err(err) => input_error(err),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Critical { scenario } => cmd_critical(scenario, &cli),
        Command::Verify(args) => cmd_verify(args, &cli),
        Command::Weyl { shape, mu, a0 } => cmd_weyl(shape, mu, *a0, &cli),
    }
}
