//! `beatty`: Beatty sequence criteria, simulations and window checks from the
//! command line. Every number is an exact literal such as `5/2` or
//! `1/2+1/2*sqrt(5)`; results are printed as JSON.
//!
//! Exit status: 0 when the checked property holds, 1 when it fails, 2 on a
//! usage, parse or domain error.

use std::process::ExitCode;

use beatty::criteria::{self, PartitionVerdict};
use beatty::disjointness::{self, DisjointnessFinding};
use beatty::stadium::{self, MultiConfig, StadiumConfig};
use beatty::{oracle, BeattySeq, ExactReal};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "beatty", version, about = "Exact Beatty sequence toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Pair {
    #[arg(long, allow_hyphen_values = true)]
    a1: ExactReal,
    #[arg(long, allow_hyphen_values = true)]
    b1: ExactReal,
    #[arg(long, allow_hyphen_values = true)]
    a2: ExactReal,
    #[arg(long, allow_hyphen_values = true)]
    b2: ExactReal,
}

impl Pair {
    fn seqs(&self) -> beatty::Result<(BeattySeq, BeattySeq)> {
        Ok((
            BeattySeq::new(self.a1.clone(), self.b1.clone())?,
            BeattySeq::new(self.a2.clone(), self.b2.clone())?,
        ))
    }
}

#[derive(Args, Clone)]
struct Window {
    /// Half-open integer window `[LO, HI)`.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true, required = true)]
    window: Vec<i64>,
}

impl Window {
    fn bounds(&self) -> (i64, i64) {
        (self.window[0], self.window[1])
    }
}

#[derive(Subcommand)]
enum Command {
    /// Terms floor(n*alpha + beta) for FROM <= n <= TO.
    Gen {
        #[arg(long, allow_hyphen_values = true)]
        alpha: ExactReal,
        #[arg(long, allow_hyphen_values = true)]
        beta: ExactReal,
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
    },
    /// Whether K is a term, and at which index.
    Member {
        #[arg(long, allow_hyphen_values = true)]
        alpha: ExactReal,
        #[arg(long, allow_hyphen_values = true)]
        beta: ExactReal,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Decide whether the pair partitions the integers (Fraenkel for
    /// rational moduli, Skolem for irrational ones).
    CheckPartition {
        #[command(flatten)]
        pair: Pair,
    },
    /// Scan a window and classify the coverage of the pair.
    CheckEventual {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        window: Window,
    },
    /// Common values of the pair inside a window.
    CheckDisjoint {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        window: Window,
    },
    /// Whether every pair of sequences with these moduli intersects.
    Coprime {
        #[arg(long)]
        a1: ExactReal,
        #[arg(long)]
        a2: ExactReal,
    },
    /// Run the stadium model and print one JSON event per line.
    Simulate {
        /// Two athletes in opposite directions.
        #[command(flatten)]
        pair: Option<Pair>,
        /// `ALPHA:BETA` of one athlete of the one-directional model; repeat.
        #[arg(long = "athlete", value_name = "ALPHA:BETA", conflicts_with_all = ["a1", "b1", "a2", "b2"])]
        athletes: Vec<String>,
        /// Speed of the slowest athlete in the one-directional model.
        #[arg(long, allow_hyphen_values = true, requires = "athletes")]
        base_speed: Option<ExactReal>,
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        /// Print `k,in_a,in_b` rows instead of events (two athletes only).
        #[arg(long)]
        occupancy: bool,
    },
    /// Offsets making S(r*gamma, beta1) and S(s*gamma, beta2) disjoint.
    Witness {
        #[arg(long)]
        gamma: ExactReal,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
    },
    /// Coverage report of a family of sequences over a window.
    VerifyWindow {
        /// `ALPHA:BETA`; repeat for each sequence.
        #[arg(long = "seq", value_name = "ALPHA:BETA", required = true)]
        seqs: Vec<String>,
        #[command(flatten)]
        window: Window,
    },
}

/// JSON to print and whether the checked property holds.
struct Outcome {
    body: Value,
    holds: bool,
}

impl Outcome {
    fn new(body: Value, holds: bool) -> Outcome {
        Outcome { body, holds }
    }
}

type CliResult = Result<Outcome, String>;

fn parse_seq(spec: &str) -> Result<BeattySeq, String> {
    let (a, b) = spec
        .split_once(':')
        .ok_or_else(|| format!("expected ALPHA:BETA, got {spec:?}"))?;
    let a: ExactReal = a.parse().map_err(|e| format!("{spec:?}: {e}"))?;
    let b: ExactReal = b.parse().map_err(|e| format!("{spec:?}: {e}"))?;
    BeattySeq::new(a, b).map_err(|e| e.to_string())
}

fn check_partition(pair: &Pair) -> CliResult {
    let (s1, s2) = pair.seqs().map_err(|e| e.to_string())?;
    match (pair.a1.as_rational(), pair.a2.as_rational()) {
        (Some(a1), Some(_)) => {
            let (r, s) = a1.as_i64_pair().ok_or("modulus out of range")?;
            let expected = ExactReal::ratio(r, r - s.min(r));
            if s >= r || pair.a2 != expected {
                return Err(format!(
                    "rational moduli must have the form r/s and r/(r-s), got {} and {}",
                    pair.a1, pair.a2
                ));
            }
            let holds = criteria::fraenkel_condition(r, s, &pair.b1, &pair.b2)
                .map_err(|e| e.to_string())?;
            Ok(Outcome::new(
                json!({"criterion": "fraenkel", "r": r, "s": s, "partition": holds}),
                holds,
            ))
        }
        _ => {
            let verdict = criteria::skolem_classify(&s1, &s2).map_err(|e| e.to_string())?;
            let holds = verdict == PartitionVerdict::Partition;
            let mut body = json!(verdict);
            body["criterion"] = json!("skolem");
            body["partition"] = json!(holds);
            Ok(Outcome::new(body, holds))
        }
    }
}

fn coprime(a1: &ExactReal, a2: &ExactReal) -> CliResult {
    let e = |e: beatty::Error| e.to_string();
    if let (Some(q1), Some(q2)) = (a1.as_rational(), a2.as_rational()) {
        let v = disjointness::jrt_coprime(q1, q2).map_err(e)?;
        let mut body = json!(v);
        body["method"] = json!("jrt");
        return Ok(Outcome::new(body, v.coprime));
    }
    if let Some(ratio) = a1.div(a2).map_err(e)?.as_rational() {
        // alpha1 = r*gamma, alpha2 = s*gamma
        let (r, s) = ratio.as_i64_pair().ok_or("ratio out of range")?;
        let gamma = a1.mul(&ExactReal::ratio(1, r)).map_err(e)?;
        let disjoint = disjointness::gamma_disjoint_exists(&gamma, r, s).map_err(e)?;
        return Ok(Outcome::new(
            json!({"method": "gamma", "gamma": gamma, "r": r, "s": s, "coprime": !disjoint}),
            !disjoint,
        ));
    }
    // Irrational ratio: disjoint offsets exist iff m/alpha1 + n/alpha2 = 1
    // has a positive integer solution.
    let mn = disjointness::mn_solution(a1, a2).map_err(e)?;
    Ok(Outcome::new(
        json!({"method": "skolem", "coprime": mn.is_none(), "mn": mn}),
        mn.is_none(),
    ))
}

fn simulate(
    pair: Option<&Pair>,
    athletes: &[String],
    base_speed: Option<&ExactReal>,
    (from, to): (i64, i64),
    occupancy: bool,
) -> Result<(String, bool), String> {
    let e = |e: beatty::Error| e.to_string();
    let events = match (pair, athletes.is_empty()) {
        (Some(pair), true) => {
            let c = StadiumConfig::new(
                pair.a1.clone(),
                pair.b1.clone(),
                pair.a2.clone(),
                pair.b2.clone(),
            )
            .map_err(e)?;
            if occupancy {
                return Ok((stadium::occupancy_csv(&c, from, to).map_err(e)?, true));
            }
            c.simulate_two(from, to).map_err(e)?
        }
        (None, false) => {
            if occupancy {
                return Err("--occupancy needs the two-athlete model".into());
            }
            let seqs = athletes.iter().map(|a| parse_seq(a)).collect::<Result<Vec<_>, _>>()?;
            let speed = base_speed.cloned().unwrap_or_else(ExactReal::zero);
            MultiConfig::with_base_speed(seqs, speed)
                .and_then(|m| m.simulate_multi(from, to))
                .map_err(e)?
        }
        _ => return Err("give either --a1 --b1 --a2 --b2 or at least one --athlete".into()),
    };
    let lines: Vec<String> = events
        .iter()
        .map(|ev| serde_json::to_string(ev).expect("serializable"))
        .collect();
    let mut out = lines.join("\n");
    if !out.is_empty() {
        out.push('\n');
    }
    Ok((out, true))
}

fn run(command: Command) -> Result<(String, bool), String> {
    let e = |e: beatty::Error| e.to_string();
    let outcome = match command {
        Command::Gen { alpha, beta, from, to } => {
            let s = BeattySeq::new(alpha, beta).map_err(e)?;
            let terms: Vec<i64> = s.generate(from, to).map_err(e)?.into_iter().map(|(_, v)| v).collect();
            Outcome::new(json!(terms), true)
        }
        Command::Member { alpha, beta, k } => {
            let s = BeattySeq::new(alpha, beta).map_err(e)?;
            let index = s.contains(k).map_err(e)?;
            Outcome::new(json!({"k": k, "member": index.is_some(), "index": index}), index.is_some())
        }
        Command::CheckPartition { pair } => check_partition(&pair)?,
        Command::CheckEventual { pair, window } => {
            let (lo, hi) = window.bounds();
            let (s1, s2) = pair.seqs().map_err(e)?;
            let verdict = oracle::verify_eventual(&s1, &s2, lo, hi).map_err(e)?;
            let mut body = json!(verdict);
            body["window"] = json!([lo.to_string(), hi.to_string()]);
            Outcome::new(body, verdict.is_eventual_partition())
        }
        Command::CheckDisjoint { pair, window } => {
            let (lo, hi) = window.bounds();
            let (s1, s2) = pair.seqs().map_err(e)?;
            let common = oracle::disjoint_window(&s1, &s2, lo, hi).map_err(e)?;
            let finding: Option<DisjointnessFinding> = disjointness::skolem_necessary(&s1, &s2).ok();
            let common_str: Vec<String> = common.iter().map(i64::to_string).collect();
            Outcome::new(
                json!({
                    "window": [lo.to_string(), hi.to_string()],
                    "disjoint": common.is_empty(),
                    "common": common_str,
                    "finding": finding,
                }),
                common.is_empty(),
            )
        }
        Command::Coprime { a1, a2 } => coprime(&a1, &a2)?,
        Command::Simulate { pair, athletes, base_speed, from, to, occupancy } => {
            return simulate(pair.as_ref(), &athletes, base_speed.as_ref(), (from, to), occupancy);
        }
        Command::Witness { gamma, r, s } => match disjointness::gamma_witness(&gamma, r, s) {
            Ok(w) => Outcome::new(json!({"kind": "GammaWitness", "witness": w}), true),
            Err(beatty::Error::NoWitness) => {
                Outcome::new(json!({"kind": "NoWitness", "witness": null}), false)
            }
            Err(err) => return Err(err.to_string()),
        },
        Command::VerifyWindow { seqs, window } => {
            let (lo, hi) = window.bounds();
            let seqs = seqs.iter().map(|s| parse_seq(s)).collect::<Result<Vec<_>, _>>()?;
            let report = oracle::window_report(&seqs, lo, hi).map_err(e)?;
            Outcome::new(json!(report), report.is_clean())
        }
    };
    Ok((format!("{}\n", outcome.body), outcome.holds))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, holds)) => {
            print!("{out}");
            if holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
