//! Beatty sequences `S(alpha, beta)`, indexed over all of `Z`.

use std::cmp::Ordering;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{ExactReal, Rational};

/// The doubly infinite sequence `n -> floor(n*alpha + beta)` with `alpha > 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BeattySeq {
    alpha: ExactReal,
    beta: ExactReal,
    inv_alpha: ExactReal,
}

impl BeattySeq {
    pub fn new(alpha: ExactReal, beta: ExactReal) -> Result<BeattySeq> {
        alpha.common_radicand(&beta)?;
        if !alpha.is_positive() {
            return Err(Error::NonPositiveModulus(alpha.to_string()));
        }
        let inv_alpha = alpha.recip()?;
        Ok(BeattySeq { alpha, beta, inv_alpha })
    }

    /// `S(alpha, 0)`.
    pub fn homogeneous(alpha: ExactReal) -> Result<BeattySeq> {
        BeattySeq::new(alpha, ExactReal::zero())
    }

    pub fn alpha(&self) -> &ExactReal {
        &self.alpha
    }

    pub fn beta(&self) -> &ExactReal {
        &self.beta
    }

    /// `n*alpha + beta`. Radicands were checked at construction.
    pub fn point(&self, n: i64) -> ExactReal {
        self.alpha
            .mul_int(n)
            .add(&self.beta)
            .expect("radicands checked in BeattySeq::new")
    }

    pub fn term(&self, n: i64) -> Result<i64> {
        self.point(n).floor_i64()
    }

    /// `(n, term(n))` for `n` in `n_lo..=n_hi`.
    pub fn generate(&self, n_lo: i64, n_hi: i64) -> Result<Vec<(i64, i64)>> {
        if n_lo > n_hi {
            return Err(Error::InvalidRange { lo: n_lo, hi: n_hi });
        }
        (n_lo..=n_hi).map(|n| Ok((n, self.term(n)?))).collect()
    }

    /// Smallest `n` with `n*alpha + beta >= k`.
    fn first_index_at_or_above(&self, k: i64) -> Result<i64> {
        let x = ExactReal::integer(k)
            .sub(&self.beta)
            .and_then(|v| v.mul(&self.inv_alpha))?;
        x.ceil_i64()
    }

    fn below(&self, n: i64, bound: i64) -> bool {
        self.point(n)
            .compare(&ExactReal::integer(bound))
            .expect("rational bound")
            == Ordering::Less
    }

    /// The index `n` with `term(n) = k`, if `k` is a value of the sequence.
    ///
    /// When `alpha <= 1` several indices can hit the same value; that case
    /// reports [`Error::AmbiguousIndex`] carrying the smallest one.
    pub fn contains(&self, k: i64) -> Result<Option<i64>> {
        let n = self.first_index_at_or_above(k)?;
        let upper = k
            .checked_add(1)
            .ok_or_else(|| Error::Overflow(format!("{k} + 1")))?;
        if !self.below(n, upper) {
            return Ok(None);
        }
        if self.alpha <= ExactReal::one() && self.below(n + 1, upper) {
            return Err(Error::AmbiguousIndex { value: k, smallest: n });
        }
        Ok(Some(n))
    }

    /// Membership test valid for every `alpha > 0`.
    pub fn is_member(&self, k: i64) -> Result<bool> {
        match self.contains(k) {
            Ok(found) => Ok(found.is_some()),
            Err(Error::AmbiguousIndex { .. }) => Ok(true),
            Err(e) => Err(e),
        }
    }

    /// Indices `n_lo..n_hi` whose terms are exactly the values in `[lo, hi)`.
    pub fn index_range(&self, lo: i64, hi: i64) -> Result<(i64, i64)> {
        if lo > hi {
            return Err(Error::InvalidRange { lo, hi });
        }
        Ok((self.first_index_at_or_above(lo)?, self.first_index_at_or_above(hi)?))
    }

    /// Sorted values in `[lo, hi)`, with repetition when `alpha < 1`.
    pub fn values_in(&self, lo: i64, hi: i64) -> Result<Vec<i64>> {
        let (a, b) = self.index_range(lo, hi)?;
        (a..b).map(|n| self.term(n)).collect()
    }

    pub fn is_canonical(&self) -> bool {
        !self.beta.is_negative() && self.beta < self.alpha
    }

    /// Moves `beta` into `[0, alpha)` by subtracting `shift * alpha`.
    ///
    /// The value set is unchanged: `term` of the result at `n` equals `term`
    /// of `self` at `n - shift`.
    pub fn normalize(&self) -> Result<(BeattySeq, i64)> {
        let shift = self.beta.mul(&self.inv_alpha)?.floor_i64()?;
        let beta = self.beta.sub(&self.alpha.mul_int(shift))?;
        Ok((
            BeattySeq {
                alpha: self.alpha.clone(),
                beta,
                inv_alpha: self.inv_alpha.clone(),
            },
            shift,
        ))
    }

    /// Fraction of the integers in `[lo, hi)` hit by the sequence.
    pub fn density_estimate(&self, lo: i64, hi: i64) -> Result<Rational> {
        if lo >= hi {
            return Err(Error::InvalidRange { lo, hi });
        }
        if self.alpha <= ExactReal::one() {
            return Err(Error::ModulusTooSmall(self.alpha.to_string()));
        }
        let (a, b) = self.index_range(lo, hi)?;
        Ok(Rational::new(b - a, hi - lo))
    }
}

/// Value-set equality of two sequences with the same rational modulus `r/s`.
///
/// With canonical offsets the sequences agree exactly when `floor(s*beta)`
/// does. Offsets are normalized first, so any representatives may be passed.
pub fn equal_rational(s1: &BeattySeq, s2: &BeattySeq) -> Result<bool> {
    let alpha = s1
        .alpha
        .as_rational()
        .ok_or_else(|| Error::NotRational(s1.alpha.to_string()))?;
    if s2.alpha.as_rational().is_none() {
        return Err(Error::NotRational(s2.alpha.to_string()));
    }
    if s1.alpha != s2.alpha {
        return Err(Error::AlphasDiffer);
    }
    let s = ExactReal::from(Rational::from_bigint(alpha.denom()));
    let class = |seq: &BeattySeq| -> Result<i64> {
        let (canon, _) = seq.normalize()?;
        canon.beta.mul(&s)?.floor_i64()
    };
    Ok(class(s1)? == class(s2)?)
}

impl std::fmt::Debug for BeattySeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S({}, {})", self.alpha, self.beta)
    }
}

/// `{"alpha": ExactReal, "beta": ExactReal}`.
impl Serialize for BeattySeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("BeattySeq", 2)?;
        st.serialize_field("alpha", &self.alpha)?;
        st.serialize_field("beta", &self.beta)?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BeattySeqRepr {
    alpha: ExactReal,
    beta: ExactReal,
}

impl<'de> Deserialize<'de> for BeattySeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let BeattySeqRepr { alpha, beta } = BeattySeqRepr::deserialize(deserializer)?;
        BeattySeq::new(alpha, beta).map_err(de::Error::custom)
    }
}
