//! Verification jobs and parallel sweeps with ordered output.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use period_ledger_core::proof_engine::{
    admissible_cases, all_signature_splits, check_tate_equivalence, derive_maintheorem,
    derive_prediction_with, epsilon_for, verify_cplus_cminus, verify_duality_lemma, verify_thmfact,
    PredictionOptions, Verdict,
};
use period_ledger_core::weights::CompactShape;
use period_ledger_core::Error;

use crate::records::Record;

pub const DEFAULT_SEED: u64 = 0x5eed_1ed9;
pub const SEED_ENV: &str = "PERIOD_LEDGER_SEED";

/// The seed from `PERIOD_LEDGER_SEED` if set, else `fallback`.
pub fn effective_seed(fallback: u64) -> Result<u64, String> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{SEED_ENV}={v:?} is not an unsigned integer")),
        Err(_) => Ok(fallback),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Job {
    Duality {
        d: usize,
        r: usize,
        s: usize,
    },
    CPlusMinus {
        d: usize,
        d_plus: usize,
        eps: i8,
        a_trivial: bool,
    },
    Thmfact {
        d: usize,
        d_plus: usize,
        r: usize,
    },
    MainTheorem {
        n: usize,
        m: i64,
        xi: i64,
        shape: Vec<(usize, usize)>,
    },
    Prediction {
        n: usize,
        w: i64,
        m: i64,
        shape: Vec<(usize, usize)>,
        deligne: bool,
    },
    Tate {
        n: usize,
        shape: Vec<(usize, usize)>,
    },
}

fn shape_params(out: &mut Vec<(String, i64)>, shape: &[(usize, usize)]) {
    for (k, &(r, _)) in shape.iter().enumerate() {
        out.push((format!("r{}", k + 1), r as i64));
    }
}

impl Job {
    pub fn claim_id(&self) -> &'static str {
        match self {
            Job::Duality { .. } => "duality",
            Job::CPlusMinus { .. } => "cplusminus",
            Job::Thmfact { .. } => "thmfact",
            Job::MainTheorem { .. } => "maintheorem",
            Job::Prediction { .. } => "prediction",
            Job::Tate { .. } => "tate",
        }
    }

    pub fn params(&self) -> Vec<(String, i64)> {
        let mut p: Vec<(String, i64)> = Vec::new();
        let mut put = |k: &str, v: i64| p.push((k.to_string(), v));
        match self {
            Job::Duality { d, r, s } => {
                put("d", *d as i64);
                put("r", *r as i64);
                put("s", *s as i64);
            }
            Job::CPlusMinus {
                d,
                d_plus,
                eps,
                a_trivial,
            } => {
                put("d", *d as i64);
                put("d_plus", *d_plus as i64);
                put("eps", *eps as i64);
                put("a_trivial", *a_trivial as i64);
            }
            Job::Thmfact { d, d_plus, r } => {
                put("d", *d as i64);
                put("d_plus", *d_plus as i64);
                put("r", *r as i64);
            }
            Job::MainTheorem { n, m, xi, shape } => {
                put("n", *n as i64);
                put("e", shape.len() as i64);
                put("m", *m);
                put("xi", *xi);
                shape_params(&mut p, shape);
            }
            Job::Prediction {
                n,
                w,
                m,
                shape,
                deligne,
            } => {
                put("n", *n as i64);
                put("e", shape.len() as i64);
                put("w", *w);
                put("m", *m);
                put("deligne", *deligne as i64);
                shape_params(&mut p, shape);
            }
            Job::Tate { n, shape } => {
                put("n", *n as i64);
                put("e", shape.len() as i64);
                shape_params(&mut p, shape);
            }
        }
        p
    }

    pub fn run(&self) -> Result<Verdict, Error> {
        let compact = |n: usize, shape: &[(usize, usize)]| CompactShape::new(n, shape.to_vec());
        match self {
            Job::Duality { d, r, s } => verify_duality_lemma(*d, *r, *s),
            Job::CPlusMinus {
                d,
                d_plus,
                eps,
                a_trivial,
            } => verify_cplus_cminus(*d, *d_plus, *eps, *a_trivial),
            Job::Thmfact { d, d_plus, r } => verify_thmfact(*d, *d_plus, *r),
            Job::MainTheorem { n, m, xi, shape } => {
                derive_maintheorem(*n, shape.len(), *m, *xi, &compact(*n, shape)?)
            }
            Job::Prediction {
                n,
                w,
                m,
                shape,
                deligne,
            } => derive_prediction_with(
                *n,
                shape.len(),
                *w,
                *m,
                &compact(*n, shape)?,
                PredictionOptions {
                    deligne: *deligne,
                    verify_local: true,
                },
            ),
            Job::Tate { n, shape } => check_tate_equivalence(*n, shape.len(), &compact(*n, shape)?),
        }
    }
}

/// A finished job. `error` is set when the engine refused the inputs.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub record: Record,
    pub error: Option<Error>,
}

pub fn run_job(job: &Job, timings: bool) -> Outcome {
    let start = Instant::now();
    let result = job.run();
    let ms = timings.then(|| start.elapsed().as_secs_f64() * 1e3);
    match result {
        Ok(v) => Outcome {
            record: Record::from_verdict(&v, ms),
            error: None,
        },
        Err(err) => {
            let params = job.params();
            let borrowed: Vec<(&str, i64)> = params.iter().map(|(k, v)| (k.as_str(), *v)).collect();
            let mut record = Record::refused(job.claim_id(), &borrowed, &err.to_string());
            record.wall_time_ms = ms;
            Outcome {
                record,
                error: Some(err),
            }
        }
    }
}

/// Runs the jobs on `jobs` threads (all cores when `None`); results keep the
/// input order.
pub fn run_jobs(list: &[Job], jobs: Option<usize>, timings: bool) -> Vec<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .expect("thread pool");
    pool.install(|| list.par_iter().map(|j| run_job(j, timings)).collect())
}

pub fn duality_jobs(dmax: usize) -> Vec<Job> {
    let mut out = Vec::new();
    for d in 1..=dmax {
        for r in 0..=d {
            let s = d - r;
            if r < s {
                out.push(Job::Duality { d, r, s });
            }
        }
    }
    out
}

pub fn cplusminus_jobs(dmax: usize) -> Vec<Job> {
    admissible_cases(dmax)
        .into_iter()
        .map(|(d, d_plus, eps, a_trivial)| Job::CPlusMinus {
            d,
            d_plus,
            eps,
            a_trivial,
        })
        .collect()
}

/// Every admissible d⁺ and ⌊d/2⌋ < r ≤ d for d ≤ dmax.
pub fn thmfact_jobs(dmax: usize) -> Vec<Job> {
    let mut out = Vec::new();
    for d in 1..=dmax {
        for d_plus in 0..=d {
            if epsilon_for(d, d_plus).is_none() {
                continue;
            }
            for r in d / 2 + 1..=d {
                out.push(Job::Thmfact { d, d_plus, r });
            }
        }
    }
    out
}

/// Admissible d⁺ values for a fixed d.
pub fn thmfact_signatures(d: usize) -> Vec<usize> {
    (0..=d).filter(|&dp| epsilon_for(d, dp).is_some()).collect()
}

/// Parameters of one ledger derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerTuple {
    pub n: usize,
    pub shape: Vec<(usize, usize)>,
    pub m: i64,
    pub w: i64,
    pub xi: i64,
}

impl LedgerTuple {
    pub fn jobs(&self) -> [Job; 2] {
        [
            Job::MainTheorem {
                n: self.n,
                m: self.m,
                xi: self.xi,
                shape: self.shape.clone(),
            },
            Job::Prediction {
                n: self.n,
                w: self.w,
                m: self.m,
                shape: self.shape.clone(),
                deligne: true,
            },
        ]
    }
}

/// `count` tuples with n ≤ 6, e ≤ 3, a random signature split and m in
/// n+1..=n+4.
pub fn seeded_tuples(seed: u64, count: usize) -> Vec<LedgerTuple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=6usize);
            let e = rng.gen_range(1..=3usize);
            let shape = (0..e)
                .map(|_| {
                    let r = rng.gen_range(0..=n);
                    (r, n - r)
                })
                .collect();
            LedgerTuple {
                n,
                shape,
                m: n as i64 + rng.gen_range(1..=4),
                w: rng.gen_range(0..=3),
                xi: rng.gen_range(-4..=4),
            }
        })
        .collect()
}

/// Every signature split for n ≤ nmax and e ≤ emax at m = n + 1.
pub fn split_tuples(nmax: usize, emax: usize) -> Vec<LedgerTuple> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        for e in 1..=emax {
            for shape in all_signature_splits(n, e) {
                out.push(LedgerTuple {
                    n,
                    shape,
                    m: n as i64 + 1,
                    w: 1,
                    xi: 0,
                });
            }
        }
    }
    out
}
