//! Partition criteria for pairs of Beatty sequences.
//!
//! * complementary moduli: `1/alpha1 + 1/alpha2 = 1`;
//! * Skolem: for irrational complementary moduli, `S(alpha1, beta1)` and
//!   `S(alpha2, beta2)` eventually partition `Z` iff
//!   `beta1/alpha1 + beta2/alpha2` is an integer, and then at most the pair
//!   `{n0 - 1, n0}` is anomalous;
//! * Fraenkel: `S(r/s, beta1)` and `S(r/(r-s), beta2)` partition `Z` iff
//!   `floor(s*beta1) + floor((r-s)*beta2) = r - 1 (mod r)`.

use num_integer::Integer;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::ExactReal;
use crate::sequences::BeattySeq;

/// Integers found twice and integers found nowhere inside a window.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Anomalies {
    pub repeated: Vec<i64>,
    pub missing: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionVerdict {
    Partition,
    /// `n0` is hit by both sequences and `n0 - 1` by neither.
    EventualPartitionWithException { n0: i64 },
    NotEventualPartition { witnesses: Option<Anomalies> },
}

impl PartitionVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            PartitionVerdict::Partition => "Partition",
            PartitionVerdict::EventualPartitionWithException { .. } => {
                "EventualPartitionWithException"
            }
            PartitionVerdict::NotEventualPartition { .. } => "NotEventualPartition",
        }
    }

    pub fn n0(&self) -> Option<i64> {
        match self {
            PartitionVerdict::EventualPartitionWithException { n0 } => Some(*n0),
            _ => None,
        }
    }

    pub fn is_eventual_partition(&self) -> bool {
        !matches!(self, PartitionVerdict::NotEventualPartition { .. })
    }

    /// Same kind and same `n0`, ignoring witness lists.
    pub fn same_classification(&self, other: &PartitionVerdict) -> bool {
        self.kind() == other.kind() && self.n0() == other.n0()
    }

    /// What a scan of `[lo, hi)` can see of this verdict.
    ///
    /// An exceptional pair lying entirely outside the window is invisible, and
    /// a pair straddling the boundary shows up as a lone anomaly.
    pub fn seen_in_window(&self, lo: i64, hi: i64) -> PartitionVerdict {
        let PartitionVerdict::EventualPartitionWithException { n0 } = *self else {
            return self.clone();
        };
        let inside = |k: i64| lo <= k && k < hi;
        match (inside(n0 - 1), inside(n0)) {
            (true, true) => self.clone(),
            (false, false) => PartitionVerdict::Partition,
            (miss, rep) => PartitionVerdict::NotEventualPartition {
                witnesses: Some(Anomalies {
                    repeated: if rep { vec![n0] } else { vec![] },
                    missing: if miss { vec![n0 - 1] } else { vec![] },
                }),
            },
        }
    }
}

/// `{"kind": ..., "n0": "..." | null, "repeated": [...], "missing": [...]}`.
impl Serialize for PartitionVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>();
        let (repeated, missing) = match self {
            PartitionVerdict::Partition => (Some(vec![]), Some(vec![])),
            PartitionVerdict::EventualPartitionWithException { n0 } => {
                (Some(vec![n0.to_string()]), Some(vec![(n0 - 1).to_string()]))
            }
            PartitionVerdict::NotEventualPartition { witnesses } => match witnesses {
                Some(w) => (Some(strings(&w.repeated)), Some(strings(&w.missing))),
                None => (None, None),
            },
        };
        let mut st = serializer.serialize_struct("PartitionVerdict", 4)?;
        st.serialize_field("kind", self.kind())?;
        st.serialize_field("n0", &self.n0().map(|n| n.to_string()))?;
        st.serialize_field("repeated", &repeated)?;
        st.serialize_field("missing", &missing)?;
        st.end()
    }
}

fn require_positive(alpha: &ExactReal) -> Result<()> {
    if alpha.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveModulus(alpha.to_string()))
    }
}

/// Whether `1/alpha1 + 1/alpha2 = 1` holds exactly.
pub fn complementary(alpha1: &ExactReal, alpha2: &ExactReal) -> Result<bool> {
    require_positive(alpha1)?;
    require_positive(alpha2)?;
    let sum = alpha1.recip()?.add(&alpha2.recip()?)?;
    Ok(sum == ExactReal::one())
}

fn require_irrational_complementary(s1: &BeattySeq, s2: &BeattySeq) -> Result<()> {
    for s in [s1, s2] {
        if !s.alpha().is_irrational() {
            return Err(Error::NotIrrational(s.alpha().to_string()));
        }
    }
    if !complementary(s1.alpha(), s2.alpha())? {
        return Err(Error::NotComplementary(
            s1.alpha().to_string(),
            s2.alpha().to_string(),
        ));
    }
    Ok(())
}

/// `beta1/alpha1 + beta2/alpha2`.
pub fn relative_offset_sum(s1: &BeattySeq, s2: &BeattySeq) -> Result<ExactReal> {
    s1.beta()
        .div(s1.alpha())?
        .add(&s2.beta().div(s2.alpha())?)
}

/// Skolem's eventual-partition condition for irrational complementary moduli.
pub fn skolem_condition(s1: &BeattySeq, s2: &BeattySeq) -> Result<bool> {
    require_irrational_complementary(s1, s2)?;
    Ok(relative_offset_sum(s1, s2)?.is_integer())
}

/// The integer time `t = beta + k*alpha` at which the runner of `s` stands
/// on the recording point, if one exists.
///
/// For irrational `alpha` the irrational coordinates force
/// `k = -irr(beta) / irr(alpha)`; the candidate is kept when `k` and `t` are
/// both integers. There is at most one such time.
pub fn integer_passage(s: &BeattySeq) -> Result<Option<i64>> {
    let alpha = s.alpha();
    if !alpha.is_irrational() {
        return Err(Error::NotIrrational(alpha.to_string()));
    }
    let k = -(s.beta().irrational_coeff() / alpha.irrational_coeff());
    if !k.is_integer() {
        return Ok(None);
    }
    let Some(k) = k.as_i64_pair().map(|(n, _)| n) else {
        return Err(Error::Overflow(k.to_string()));
    };
    let t = s.beta().add(&alpha.mul_int(k))?;
    if t.is_integer() {
        t.floor_i64().map(Some)
    } else {
        Ok(None)
    }
}

/// Classifies an irrational complementary pair by Skolem's theorem.
///
/// When the condition holds the runners meet at every integer time; the only
/// possible anomaly is a meeting exactly on the recording point at time `n0`,
/// which records `n0` twice and leaves `n0 - 1` (a meeting on the far edge)
/// unrecorded.
pub fn skolem_classify(s1: &BeattySeq, s2: &BeattySeq) -> Result<PartitionVerdict> {
    if !skolem_condition(s1, s2)? {
        return Ok(PartitionVerdict::NotEventualPartition { witnesses: None });
    }
    let (s1, _) = s1.normalize()?;
    Ok(match integer_passage(&s1)? {
        Some(n0) => PartitionVerdict::EventualPartitionWithException { n0 },
        None => PartitionVerdict::Partition,
    })
}

fn check_moduli(r: i64, s: i64) -> Result<()> {
    if !(r > s && s >= 1) {
        return Err(Error::BadModuli { r, s });
    }
    if r.gcd(&s) != 1 {
        return Err(Error::NotCoprime { r, s });
    }
    Ok(())
}

/// The pair `S(r/s, beta1)`, `S(r/(r-s), beta2)`.
pub fn fraenkel_pair(
    r: i64,
    s: i64,
    beta1: &ExactReal,
    beta2: &ExactReal,
) -> Result<(BeattySeq, BeattySeq)> {
    check_moduli(r, s)?;
    Ok((
        BeattySeq::new(ExactReal::ratio(r, s), beta1.clone())?,
        BeattySeq::new(ExactReal::ratio(r, r - s), beta2.clone())?,
    ))
}

/// Fraenkel's criterion: `floor(s*beta1) + floor((r-s)*beta2) = r - 1 (mod r)`.
pub fn fraenkel_condition(r: i64, s: i64, beta1: &ExactReal, beta2: &ExactReal) -> Result<bool> {
    check_moduli(r, s)?;
    let f1 = beta1.mul_int(s).floor_i64()?;
    let f2 = beta2.mul_int(r - s).floor_i64()?;
    Ok(f1
        .checked_add(f2)
        .ok_or_else(|| Error::Overflow(format!("{f1} + {f2}")))?
        .rem_euclid(r)
        == r - 1)
}

/// Runner positions at integer time `k`, as distances from the recording
/// point measured against the running direction of the first runner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaPositions {
    /// In `[0, 1)`.
    pub x: ExactReal,
    /// In `(0, 1]`: the second runner's arcs are closed on the right.
    pub y: ExactReal,
    /// The cell `j` with `x in [j/r, (j+1)/r)` and `y in (j/r, (j+1)/r]`.
    pub cell: Option<i64>,
}

fn shared_cell(r: i64, x: &ExactReal, y: &ExactReal) -> Result<Option<i64>> {
    let j = x.mul_int(r).floor_i64()?;
    let lo = ExactReal::ratio(j, r);
    let hi = ExactReal::ratio(j + 1, r);
    Ok((lo.compare(y)?.is_lt() && y.compare(&hi)?.is_le()).then_some(j))
}

/// `x_k = fr(s*beta1/r - k*s/r)` and `y_k = 1 - fr((r-s)*beta2/r + k*s/r)`.
///
/// Both runners cover `s/r` of the track (mod 1) per time unit in the same
/// rotational sense, so `x_k - y_k` is constant mod 1.
pub fn lemma_positions(
    r: i64,
    s: i64,
    beta1: &ExactReal,
    beta2: &ExactReal,
    k: i64,
) -> Result<LemmaPositions> {
    check_moduli(r, s)?;
    let step = ExactReal::ratio(k.checked_mul(s).ok_or(Error::Overflow(format!("{k}*{s}")))?, r);
    let x = beta1.mul(&ExactReal::ratio(s, r))?.sub(&step)?.fr();
    let y = ExactReal::one().sub(&beta2.mul(&ExactReal::ratio(r - s, r))?.add(&step)?.fr())?;
    let cell = shared_cell(r, &x, &y)?;
    Ok(LemmaPositions { x, y, cell })
}

/// Conditions (2)-(4) of the runner lemma for the pair
/// `S(r/s, beta1)`, `S(r/(r-s), beta2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaConditions {
    /// For every `k`: `x_k in [0, s/r)` iff `y_k in (0, s/r]`.
    pub domains_agree: bool,
    /// For every `k` the runners share a cell.
    pub shared_cell_always: bool,
    /// The runners share a cell at `k = 0`.
    pub shared_cell_initially: bool,
}

impl LemmaConditions {
    pub fn all_agree(&self) -> bool {
        self.domains_agree == self.shared_cell_always
            && self.shared_cell_always == self.shared_cell_initially
    }
}

/// Evaluates the lemma's conditions. Positions at time `k` depend on `k` only
/// through `k*s mod r`, so `k in 0..r` covers every integer time.
pub fn lemma_conditions(
    r: i64,
    s: i64,
    beta1: &ExactReal,
    beta2: &ExactReal,
) -> Result<LemmaConditions> {
    check_moduli(r, s)?;
    let edge = ExactReal::ratio(s, r);
    let zero = ExactReal::zero();
    let mut domains_agree = true;
    let mut shared_cell_always = true;
    let mut shared_cell_initially = false;
    for k in 0..r {
        let pos = lemma_positions(r, s, beta1, beta2, k)?;
        let in_a = pos.x.compare(&edge)?.is_lt();
        let outside_b = zero.compare(&pos.y)?.is_lt() && pos.y.compare(&edge)?.is_le();
        domains_agree &= in_a == outside_b;
        shared_cell_always &= pos.cell.is_some();
        if k == 0 {
            shared_cell_initially = pos.cell.is_some();
        }
    }
    Ok(LemmaConditions {
        domains_agree,
        shared_cell_always,
        shared_cell_initially,
    })
}

/// Whether the runners share their starting point:
/// `s*beta1 + (r-s)*beta2` is a multiple of `r`.
pub fn common_start(r: i64, s: i64, beta1: &ExactReal, beta2: &ExactReal) -> Result<bool> {
    check_moduli(r, s)?;
    let total = beta1.mul_int(s).add(&beta2.mul_int(r - s))?;
    Ok(total.is_integer() && total.floor_i64()?.rem_euclid(r) == 0)
}

/// Moves both offsets within their equivalence classes so the runners start
/// together: `beta1' = (floor(s*beta1) + nu)/s` and
/// `beta2' = (floor((r-s)*beta2) + 1 - nu)/(r-s)`.
///
/// Both sequences are unchanged because `floor(s*beta1')` and
/// `floor((r-s)*beta2')` are unchanged.
pub fn relocate_common_start(
    r: i64,
    s: i64,
    beta1: &ExactReal,
    beta2: &ExactReal,
    nu: &ExactReal,
) -> Result<(ExactReal, ExactReal)> {
    if !(nu.is_positive() && nu.compare(&ExactReal::one())?.is_lt()) {
        return Err(Error::NuOutOfRange(nu.to_string()));
    }
    if !fraenkel_condition(r, s, beta1, beta2)? {
        return Err(Error::CriterionNotSatisfied);
    }
    let f1 = ExactReal::integer(beta1.mul_int(s).floor_i64()?);
    let f2 = ExactReal::integer(beta2.mul_int(r - s).floor_i64()?);
    let b1 = f1.add(nu)?.mul(&ExactReal::ratio(1, s))?;
    let b2 = f2
        .add(&ExactReal::one())?
        .sub(nu)?
        .mul(&ExactReal::ratio(1, r - s))?;
    Ok((b1, b2))
}
