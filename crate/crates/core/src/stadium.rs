//! The stadium model: athletes run around a circular track of length 1 and an
//! integer `floor(t)` is recorded whenever a passage happens at time `t`.
//!
//! Coordinates: the circle is `[0, 1)` with the recording point `O` at 0 and
//! the first athlete running in the positive direction.
//!
//! * Two athletes in opposite directions: `X` completes a lap in `alpha1`
//!   time units and records `S(alpha1, beta1)`, `Y` runs the other way in
//!   `alpha2` and records `S(alpha2, beta2)`. Positions are
//!   `X(t) = fr((t - beta1)/alpha1)` and `Y(t) = fr((beta2 - t)/alpha2)`.
//! * `n + 1` athletes in one direction: `X_j` has speed
//!   `x0 + 1/alpha_1 + ... + 1/alpha_j` and starts `fr(beta_1/alpha_1 + ... +
//!   beta_j/alpha_j)` behind `X_0`; `X_i` records when it overtakes `X_{i-1}`.
//!
//! Simulation is event-driven in exact arithmetic: the wait until each
//! athlete's next passage is solved in closed form, and the earliest pending
//! passage is emitted next.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::criteria::complementary;
use crate::error::{Error, Result};
use crate::exact::ExactReal;
use crate::sequences::BeattySeq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Athlete {
    X,
    Y,
    /// `X_i` of the one-directional model.
    Numbered(usize),
}

impl fmt::Display for Athlete {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Athlete::X => f.write_str("X"),
            Athlete::Y => f.write_str("Y"),
            Athlete::Numbered(i) => write!(f, "X{i}"),
        }
    }
}

impl Serialize for Athlete {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A passage at exact time `t`, recording `floor(t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordEvent {
    #[serde(rename = "t")]
    pub time: ExactReal,
    pub athlete: Athlete,
    pub recorded: i64,
}

fn check_times(t_lo: i64, t_hi: i64) -> Result<()> {
    if t_lo < t_hi {
        Ok(())
    } else {
        Err(Error::InvalidRange { lo: t_lo, hi: t_hi })
    }
}

/// Merges periodic passage streams `first + k*lap` inside `[.., t_hi)` in
/// time order; simultaneous passages come out in stream order.
fn merge_passages(
    mut streams: Vec<(Athlete, ExactReal, ExactReal)>,
    t_hi: i64,
) -> Result<Vec<RecordEvent>> {
    let end = ExactReal::integer(t_hi);
    streams.retain(|(_, first, _)| first.compare(&end).map(|o| o.is_lt()).unwrap_or(true));
    let mut events = Vec::new();
    while !streams.is_empty() {
        let mut best = 0;
        for i in 1..streams.len() {
            if streams[i].1.compare(&streams[best].1)?.is_lt() {
                best = i;
            }
        }
        let (athlete, time, lap) = &mut streams[best];
        events.push(RecordEvent {
            time: time.clone(),
            athlete: *athlete,
            recorded: time.floor_i64()?,
        });
        *time = time.add(lap)?;
        if !time.compare(&end)?.is_lt() {
            streams.remove(best);
        }
    }
    Ok(events)
}

/// Two athletes running in opposite directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StadiumConfig {
    pub x: BeattySeq,
    pub y: BeattySeq,
}

impl StadiumConfig {
    pub fn new(
        alpha1: ExactReal,
        beta1: ExactReal,
        alpha2: ExactReal,
        beta2: ExactReal,
    ) -> Result<StadiumConfig> {
        let x = BeattySeq::new(alpha1, beta1)?;
        let y = BeattySeq::new(alpha2, beta2)?;
        for s in [&x, &y] {
            if *s.alpha() <= ExactReal::one() {
                return Err(Error::ModulusTooSmall(s.alpha().to_string()));
            }
        }
        x.alpha().common_radicand(y.alpha())?;
        Ok(StadiumConfig { x, y })
    }

    pub fn from_seqs(x: &BeattySeq, y: &BeattySeq) -> Result<StadiumConfig> {
        StadiumConfig::new(
            x.alpha().clone(),
            x.beta().clone(),
            y.alpha().clone(),
            y.beta().clone(),
        )
    }

    /// `fr((t - beta1)/alpha1)`; zero exactly at the passages `beta1 + n*alpha1`.
    pub fn position_x(&self, t: &ExactReal) -> Result<ExactReal> {
        Ok(t.sub(self.x.beta())?.div(self.x.alpha())?.fr())
    }

    /// `fr((beta2 - t)/alpha2)`; `Y` runs in the negative direction.
    pub fn position_y(&self, t: &ExactReal) -> Result<ExactReal> {
        Ok(self.y.beta().sub(t)?.div(self.y.alpha())?.fr())
    }

    /// `fr(beta1/alpha1 + beta2/alpha2)`: how far `Y` is ahead of `X` at time 0.
    pub fn d0(&self) -> Result<ExactReal> {
        Ok(self
            .x
            .beta()
            .div(self.x.alpha())?
            .add(&self.y.beta().div(self.y.alpha())?)?
            .fr())
    }

    /// `fr(Y(t) - X(t))`.
    pub fn separation(&self, t: &ExactReal) -> Result<ExactReal> {
        Ok(self.position_y(t)?.sub(&self.position_x(t)?)?.fr())
    }

    /// The common position of the athletes at time `t`, if they are together.
    pub fn meeting_point(&self, t: &ExactReal) -> Result<Option<ExactReal>> {
        let (x, y) = (self.position_x(t)?, self.position_y(t)?);
        Ok((x == y).then_some(x))
    }

    /// The edge point `E = 1/alpha2` of `B`, where a meeting records nothing.
    pub fn edge(&self) -> Result<ExactReal> {
        self.y.alpha().recip()
    }

    /// Passages of `O` during `[t_lo, t_hi)` in time order; a tie puts `X` first.
    pub fn simulate_two(&self, t_lo: i64, t_hi: i64) -> Result<Vec<RecordEvent>> {
        check_times(t_lo, t_hi)?;
        let start = ExactReal::integer(t_lo);
        // X reaches O after covering 1 - X; Y after covering Y.
        let wait_x = self.position_x(&start)?.neg().fr().mul(self.x.alpha())?;
        let wait_y = self.position_y(&start)?.mul(self.y.alpha())?;
        merge_passages(
            vec![
                (Athlete::X, start.add(&wait_x)?, self.x.alpha().clone()),
                (Athlete::Y, start.add(&wait_y)?, self.y.alpha().clone()),
            ],
            t_hi,
        )
    }

    /// Whether `X` lies in `A = {0} ∪ (1 - 1/alpha1, 1)` and `Y` in
    /// `B = [0, 1/alpha2)` at integer time `k`, i.e. whether each athlete
    /// passes `O` during `[k, k + 1)`.
    pub fn domain_occupancy(&self, k: i64) -> Result<Occupancy> {
        if !complementary(self.x.alpha(), self.y.alpha())? {
            return Err(Error::NotComplementary(
                self.x.alpha().to_string(),
                self.y.alpha().to_string(),
            ));
        }
        let t = ExactReal::integer(k);
        let x = self.position_x(&t)?;
        let y = self.position_y(&t)?;
        let a_edge = ExactReal::one().sub(&self.x.alpha().recip()?)?;
        let in_a = x.is_zero() || a_edge.compare(&x)?.is_lt();
        let in_b = y.compare(&self.edge()?)?.is_lt();
        Ok(Occupancy { k, in_a, in_b })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Occupancy {
    pub k: i64,
    pub in_a: bool,
    pub in_b: bool,
}

/// `k,in_a,in_b` rows for `k` in `[lo, hi)`.
pub fn occupancy_csv(c: &StadiumConfig, lo: i64, hi: i64) -> Result<String> {
    check_times(lo, hi)?;
    let mut out = String::from("k,in_a,in_b\n");
    for k in lo..hi {
        let o = c.domain_occupancy(k)?;
        out.push_str(&format!("{},{},{}\n", o.k, o.in_a, o.in_b));
    }
    Ok(out)
}

/// `n + 1` athletes running in the same direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiConfig {
    seqs: Vec<BeattySeq>,
    base_speed: ExactReal,
}

impl MultiConfig {
    pub fn new(seqs: Vec<BeattySeq>) -> Result<MultiConfig> {
        MultiConfig::with_base_speed(seqs, ExactReal::zero())
    }

    pub fn with_base_speed(seqs: Vec<BeattySeq>, base_speed: ExactReal) -> Result<MultiConfig> {
        if seqs.is_empty() {
            return Err(Error::NoAthletes);
        }
        for s in &seqs {
            s.alpha().common_radicand(&base_speed)?;
            s.alpha().common_radicand(seqs[0].alpha())?;
        }
        Ok(MultiConfig { seqs, base_speed })
    }

    pub fn seqs(&self) -> &[BeattySeq] {
        &self.seqs
    }

    /// Speeds `x_0, ..., x_n`.
    pub fn speeds(&self) -> Result<Vec<ExactReal>> {
        let mut out = vec![self.base_speed.clone()];
        for s in &self.seqs {
            let next = out.last().unwrap().add(&s.alpha().recip()?)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Initial gaps `d_0 = 0, ..., d_n`, each measured behind `X_0`.
    pub fn gaps(&self) -> Result<Vec<ExactReal>> {
        let mut out = vec![ExactReal::zero()];
        let mut sum = ExactReal::zero();
        for s in &self.seqs {
            sum = sum.add(&s.beta().div(s.alpha())?)?;
            out.push(sum.fr());
        }
        Ok(out)
    }

    /// Positions `fr(x_j*t - d_j)` of `X_0, ..., X_n`.
    pub fn positions(&self, t: &ExactReal) -> Result<Vec<ExactReal>> {
        self.speeds()?
            .iter()
            .zip(self.gaps()?)
            .map(|(x, d)| Ok(x.mul(t)?.sub(&d)?.fr()))
            .collect()
    }

    /// Overtakings during `[t_lo, t_hi)`: `X_i` passing `X_{i-1}` records
    /// for `X_i`. Ties come out by athlete index.
    pub fn simulate_multi(&self, t_lo: i64, t_hi: i64) -> Result<Vec<RecordEvent>> {
        check_times(t_lo, t_hi)?;
        let start = ExactReal::integer(t_lo);
        let pos = self.positions(&start)?;
        let mut streams = Vec::with_capacity(self.seqs.len());
        for (i, s) in self.seqs.iter().enumerate() {
            // X_{i+1} closes its gap to X_i at relative speed 1/alpha.
            let behind = pos[i].sub(&pos[i + 1])?.fr();
            let wait = behind.mul(s.alpha())?;
            streams.push((Athlete::Numbered(i + 1), start.add(&wait)?, s.alpha().clone()));
        }
        merge_passages(streams, t_hi)
    }
}
