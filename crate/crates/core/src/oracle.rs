//! Brute-force ground truth over finite windows of integers.
//!
//! Every scan goes through [`BeattySeq::contains`] / [`BeattySeq::is_member`],
//! which are O(1) per integer, so windows of a million integers stay cheap.

use num_integer::Integer;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::criteria::{Anomalies, PartitionVerdict};
use crate::error::{Error, Result};
use crate::exact::{ExactReal, Rational};
use crate::sequences::BeattySeq;

/// Coverage of `[lo, hi)` by a family of sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowReport {
    pub lo: i64,
    pub hi: i64,
    /// Integers covered by no sequence.
    pub missing: Vec<i64>,
    /// Integers covered more than once, with their multiplicity.
    pub repeated: Vec<(i64, u32)>,
    /// How many integers of the window each sequence covers.
    pub per_seq_counts: Vec<u64>,
}

impl WindowReport {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.repeated.is_empty()
    }
}

/// `{"lo": "..", "hi": "..", "missing": [..], "repeated": [[k, m], ..], "per_seq_counts": [..]}`.
impl Serialize for WindowReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let missing: Vec<String> = self.missing.iter().map(i64::to_string).collect();
        let repeated: Vec<(String, u32)> =
            self.repeated.iter().map(|(k, m)| (k.to_string(), *m)).collect();
        let mut st = serializer.serialize_struct("WindowReport", 5)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.serialize_field("missing", &missing)?;
        st.serialize_field("repeated", &repeated)?;
        st.serialize_field("per_seq_counts", &self.per_seq_counts)?;
        st.end()
    }
}

fn check_window(lo: i64, hi: i64) -> Result<()> {
    if lo < hi {
        Ok(())
    } else {
        Err(Error::InvalidRange { lo, hi })
    }
}

pub fn window_report(seqs: &[BeattySeq], lo: i64, hi: i64) -> Result<WindowReport> {
    check_window(lo, hi)?;
    for s in seqs {
        if *s.alpha() <= ExactReal::one() {
            return Err(Error::ModulusTooSmall(s.alpha().to_string()));
        }
    }
    let mut report = WindowReport {
        lo,
        hi,
        missing: Vec::new(),
        repeated: Vec::new(),
        per_seq_counts: vec![0; seqs.len()],
    };
    for k in lo..hi {
        let mut hits = 0u32;
        for (count, s) in report.per_seq_counts.iter_mut().zip(seqs) {
            if s.contains(k)?.is_some() {
                hits += 1;
                *count += 1;
            }
        }
        match hits {
            0 => report.missing.push(k),
            1 => {}
            m => report.repeated.push((k, m)),
        }
    }
    Ok(report)
}

/// Every integer of `[lo, hi)` is covered exactly once.
pub fn verify_partition(seqs: &[BeattySeq], lo: i64, hi: i64) -> Result<bool> {
    Ok(window_report(seqs, lo, hi)?.is_clean())
}

/// Reads a two-sequence window scan as a partition verdict.
///
/// The exceptional pattern is recognized strictly: one integer `n0` covered
/// exactly twice and `n0 - 1` the only uncovered integer. Any other anomaly
/// set is reported as [`PartitionVerdict::NotEventualPartition`].
pub fn verify_eventual(
    s1: &BeattySeq,
    s2: &BeattySeq,
    lo: i64,
    hi: i64,
) -> Result<PartitionVerdict> {
    let report = window_report(&[s1.clone(), s2.clone()], lo, hi)?;
    Ok(match (report.repeated.as_slice(), report.missing.as_slice()) {
        ([], []) => PartitionVerdict::Partition,
        ([(n0, 2)], [m]) if *m == n0 - 1 => {
            PartitionVerdict::EventualPartitionWithException { n0: *n0 }
        }
        _ => PartitionVerdict::NotEventualPartition {
            witnesses: Some(Anomalies {
                repeated: report.repeated.iter().map(|(k, _)| *k).collect(),
                missing: report.missing,
            }),
        },
    })
}

/// Sorted common values of `s1` and `s2` inside `[lo, hi)`.
pub fn disjoint_window(s1: &BeattySeq, s2: &BeattySeq, lo: i64, hi: i64) -> Result<Vec<i64>> {
    check_window(lo, hi)?;
    // Walk the sparser sequence, probe the denser one.
    let (walk, probe) = if s1.alpha() >= s2.alpha() { (s1, s2) } else { (s2, s1) };
    let mut out = Vec::new();
    for v in walk.values_in(lo, hi)? {
        if out.last() != Some(&v) && probe.is_member(v)? {
            out.push(v);
        }
    }
    Ok(out)
}

/// Smallest common value of `s1` and `s2` inside `[lo, hi)`, if any.
pub fn first_common(s1: &BeattySeq, s2: &BeattySeq, lo: i64, hi: i64) -> Result<Option<i64>> {
    check_window(lo, hi)?;
    let (walk, probe) = if s1.alpha() >= s2.alpha() { (s1, s2) } else { (s2, s1) };
    for v in walk.values_in(lo, hi)? {
        if probe.is_member(v)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

fn positive_reduced(alpha: &Rational) -> Result<(i64, i64)> {
    match alpha.as_i64_pair() {
        Some((p, q)) if p > 0 => Ok((p, q)),
        Some(_) => Err(Error::NonPositiveModulus(alpha.to_string())),
        None => Err(Error::Overflow(alpha.to_string())),
    }
}

/// Searches for offsets making `S(alpha1, beta1)` and `S(alpha2, beta2)`
/// disjoint, returning the first disjoint pair in grid order.
///
/// For `alpha = p/q`, `floor(n*p/q + beta) = floor((n*p + floor(q*beta))/q)`,
/// so the sequence depends on `beta` only through `floor(q*beta)`; the
/// offsets `j/q` with `0 <= j < p` reach every sequence with a canonical
/// offset. Shifting `n` by `q` shifts values by `p`, so membership is periodic
/// in `k` with period `p`, the intersection pattern with period
/// `lcm(p1, p2)`, and scanning `[0, 2*p1*p2)` is conservative.
pub fn rational_disjoint_pair(
    alpha1: &Rational,
    alpha2: &Rational,
) -> Result<Option<(BeattySeq, BeattySeq)>> {
    let (p1, q1) = positive_reduced(alpha1)?;
    let (p2, q2) = positive_reduced(alpha2)?;
    let period = 2 * p1 * p2;
    debug_assert!(period >= p1.lcm(&p2));
    for j1 in 0..p1 {
        let s1 = BeattySeq::new(alpha1.clone().into(), ExactReal::ratio(j1, q1))?;
        for j2 in 0..p2 {
            let s2 = BeattySeq::new(alpha2.clone().into(), ExactReal::ratio(j2, q2))?;
            let mut meet = false;
            for k in 0..period {
                if s1.is_member(k)? && s2.is_member(k)? {
                    meet = true;
                    break;
                }
            }
            if !meet {
                return Ok(Some((s1, s2)));
            }
        }
    }
    Ok(None)
}

/// Whether every pair of offsets yields intersecting sequences, i.e. the two
/// rational moduli are coprime in the Beatty sense.
pub fn rational_disjoint_oracle(alpha1: &Rational, alpha2: &Rational) -> Result<bool> {
    Ok(rational_disjoint_pair(alpha1, alpha2)?.is_none())
}
