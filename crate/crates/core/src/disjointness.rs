//! When can two Beatty sequences be disjoint?
//!
//! * integer moduli: the Chinese remainder theorem, `S(n, .)` and `S(m, .)`
//!   always meet iff `gcd(n, m) = 1`;
//! * a necessary condition for irrational moduli of irrational ratio:
//!   `m/alpha1 + n/alpha2 = 1` with positive integers `m, n`;
//! * rational moduli: the Japanese remainder theorem;
//! * `alpha1 = r*gamma`, `alpha2 = s*gamma` with irrational `gamma`: disjoint
//!   offsets exist iff `gamma > 2`.

use num_integer::Integer;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactReal, Rational};
use crate::oracle;
use crate::sequences::BeattySeq;

/// Half-width of the window used to confirm a γ witness.
pub const WITNESS_WINDOW: i64 = 10_000;

fn require_positive_int(n: i64) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        Err(Error::NonPositive(n))
    }
}

/// Integer moduli `n`, `m` are coprime, i.e. every `S(n, b1)` meets every `S(m, b2)`.
pub fn crt_coprime(n: i64, m: i64) -> Result<bool> {
    require_positive_int(n)?;
    require_positive_int(m)?;
    Ok(n.gcd(&m) == 1)
}

/// `S(n, 0)` and `S(m, 1)`, disjoint whenever `gcd(n, m) > 1`: every term of
/// the first is divisible by the gcd and no term of the second is.
pub fn crt_witness(n: i64, m: i64) -> Result<Option<(BeattySeq, BeattySeq)>> {
    if crt_coprime(n, m)? {
        return Ok(None);
    }
    Ok(Some((
        BeattySeq::new(ExactReal::integer(n), ExactReal::zero())?,
        BeattySeq::new(ExactReal::integer(m), ExactReal::one())?,
    )))
}

/// Which alternative of Skolem's necessary condition for disjointness holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DisjointnessFinding {
    /// `alpha1 / alpha2` is rational.
    RationalRatio,
    /// `m/alpha1 + n/alpha2 = 1` and `m*beta1/alpha1 + n*beta2/alpha2` is an integer.
    MNWitness { m: i64, n: i64 },
    /// Neither alternative holds, so the sequences must intersect.
    Neither,
}

impl DisjointnessFinding {
    pub fn kind(&self) -> &'static str {
        match self {
            DisjointnessFinding::RationalRatio => "RationalRatio",
            DisjointnessFinding::MNWitness { .. } => "MNWitness",
            DisjointnessFinding::Neither => "Neither",
        }
    }

    /// Whether disjointness is still possible.
    pub fn permits_disjointness(&self) -> bool {
        !matches!(self, DisjointnessFinding::Neither)
    }
}

/// `{"kind": ..., "m": int | null, "n": int | null}`.
impl Serialize for DisjointnessFinding {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (m, n) = match self {
            DisjointnessFinding::MNWitness { m, n } => (Some(*m), Some(*n)),
            _ => (None, None),
        };
        let mut st = serializer.serialize_struct("DisjointnessFinding", 3)?;
        st.serialize_field("kind", self.kind())?;
        st.serialize_field("m", &m)?;
        st.serialize_field("n", &n)?;
        st.end()
    }
}

fn positive_int(q: &Rational) -> Option<i64> {
    match q.as_i64_pair() {
        Some((n, 1)) if n >= 1 => Some(n),
        _ => None,
    }
}

/// Positive integers `m, n` with `m/alpha1 + n/alpha2 = 1`, for moduli of
/// irrational ratio.
///
/// In `Q(sqrt(d))` the equation splits into a 2x2 rational system (rational
/// and irrational coordinates), which has at most one solution once the ratio
/// is irrational.
pub fn mn_solution(alpha1: &ExactReal, alpha2: &ExactReal) -> Result<Option<(i64, i64)>> {
    let (u, v) = (alpha1.recip()?, alpha2.recip()?);
    let (ua, ub) = (u.rational_part().clone(), u.irrational_coeff());
    let (va, vb) = (v.rational_part().clone(), v.irrational_coeff());
    let det = &ua * &vb - &ub * &va;
    if det.is_zero() {
        return Ok(None);
    }
    let m = &vb / &det;
    let n = -(&ub / &det);
    Ok(positive_int(&m).zip(positive_int(&n)))
}

/// Evaluates Skolem's necessary condition for `s1`, `s2` to be disjoint.
pub fn skolem_necessary(s1: &BeattySeq, s2: &BeattySeq) -> Result<DisjointnessFinding> {
    let (a1, a2) = (s1.alpha(), s2.alpha());
    for a in [a1, a2] {
        if !a.is_positive() {
            return Err(Error::NonPositiveModulus(a.to_string()));
        }
    }
    if a1.div(a2)?.as_rational().is_some() {
        return Ok(DisjointnessFinding::RationalRatio);
    }
    let Some((m, n)) = mn_solution(a1, a2)? else {
        return Ok(DisjointnessFinding::Neither);
    };
    let phase = s1
        .beta()
        .div(a1)?
        .mul_int(m)
        .add(&s2.beta().div(a2)?.mul_int(n))?;
    Ok(if phase.is_integer() {
        DisjointnessFinding::MNWitness { m, n }
    } else {
        DisjointnessFinding::Neither
    })
}

/// Parameters of the Japanese remainder theorem for `p1/q1`, `p2/q2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JrtParams {
    pub p1: i64,
    pub q1: i64,
    pub p2: i64,
    pub q2: i64,
    pub p: i64,
    pub q: i64,
    pub u1: i64,
    pub u2: i64,
}

impl JrtParams {
    pub fn new(alpha1: &Rational, alpha2: &Rational) -> Result<JrtParams> {
        let split = |a: &Rational| match a.as_i64_pair() {
            Some((p, q)) if p > 0 => Ok((p, q)),
            Some(_) => Err(Error::NonPositiveModulus(a.to_string())),
            None => Err(Error::Overflow(a.to_string())),
        };
        let (p1, q1) = split(alpha1)?;
        let (p2, q2) = split(alpha2)?;
        let (p, q) = (p1.gcd(&p2), q1.gcd(&q2));
        Ok(JrtParams { p1, q1, p2, q2, p, q, u1: q1 / q, u2: q2 / q })
    }

    /// `p - 2*u1*u2*(q - 1)`.
    pub fn target(&self) -> i128 {
        let (u1, u2, q) = (self.u1 as i128, self.u2 as i128, self.q as i128);
        self.p as i128 - 2 * u1 * u2 * (q - 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JrtVerdict {
    pub params: JrtParams,
    pub coprime: bool,
    /// Positive `(k, l)` with `k*u1 + l*u2 = p - 2*u1*u2*(q - 1)`.
    pub witness: Option<(i64, i64)>,
}

/// Positive `(k, l)` with `k*u1 + l*u2 = target`, for coprime `u1`, `u2`.
///
/// The smallest positive `k` in the right residue class mod `u2` gives the
/// largest `l`, so a solution exists iff that `l` is positive.
fn positive_solution(u1: i128, u2: i128, target: i128) -> Option<(i128, i128)> {
    if target < u1 + u2 {
        return None;
    }
    let eg = u1.extended_gcd(&u2);
    debug_assert_eq!(eg.gcd, 1);
    // k ≡ target * u1^{-1} (mod u2), taken in [1, u2].
    let inv = eg.x.rem_euclid(u2);
    let mut k = ((target % u2) * inv).rem_euclid(u2);
    if k == 0 {
        k = u2;
    }
    let l = (target - k * u1) / u2;
    (l >= 1).then_some((k, l))
}

/// The Japanese remainder theorem: rational `alpha1`, `alpha2` are coprime iff
/// no positive `(k, l)` solves `k*u1 + l*u2 = p - 2*u1*u2*(q - 1)`.
pub fn jrt_coprime(alpha1: &Rational, alpha2: &Rational) -> Result<JrtVerdict> {
    let params = JrtParams::new(alpha1, alpha2)?;
    let witness = positive_solution(params.u1 as i128, params.u2 as i128, params.target())
        .map(|(k, l)| (k as i64, l as i64));
    Ok(JrtVerdict {
        params,
        coprime: witness.is_none(),
        witness,
    })
}

fn check_gamma(gamma: &ExactReal, r: i64, s: i64) -> Result<()> {
    if !gamma.is_irrational() {
        return Err(Error::NotIrrational(gamma.to_string()));
    }
    if !gamma.is_positive() {
        return Err(Error::NonPositiveModulus(gamma.to_string()));
    }
    require_positive_int(r)?;
    require_positive_int(s)?;
    if r.gcd(&s) != 1 {
        return Err(Error::NotCoprime { r, s });
    }
    Ok(())
}

/// Whether some offsets make `S(r*gamma, beta1)` and `S(s*gamma, beta2)`
/// disjoint: exactly when `gamma > 2`.
pub fn gamma_disjoint_exists(gamma: &ExactReal, r: i64, s: i64) -> Result<bool> {
    check_gamma(gamma, r, s)?;
    Ok(gamma.compare(&ExactReal::integer(2))?.is_gt())
}

/// Offsets realizing disjointness for `alpha1 = r*gamma`, `alpha2 = s*gamma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaWitness {
    pub beta1: ExactReal,
    pub beta2: ExactReal,
}

impl GammaWitness {
    pub fn sequences(&self, gamma: &ExactReal, r: i64, s: i64) -> Result<(BeattySeq, BeattySeq)> {
        Ok((
            BeattySeq::new(gamma.mul_int(r), self.beta1.clone())?,
            BeattySeq::new(gamma.mul_int(s), self.beta2.clone())?,
        ))
    }
}

/// `beta1 = 0`, `beta2 = gamma/2`.
///
/// The first runner passes the recording point at `k*r*gamma`, the second at
/// `(n*s + 1/2)*gamma`; since `gcd(r, s) = 1` these times differ by
/// `gamma*|j + 1/2|` for integers `j`, so by at least `gamma/2 > 1`, and
/// times more than one apart never share a floor. In lattice terms the point
/// sits at relative distance `1/(2s)` from both neighbouring lattice points.
///
/// The pair is confirmed with a window scan over
/// `[-WITNESS_WINDOW, WITNESS_WINDOW)` before being returned.
pub fn gamma_witness(gamma: &ExactReal, r: i64, s: i64) -> Result<GammaWitness> {
    if !gamma_disjoint_exists(gamma, r, s)? {
        return Err(Error::NoWitness);
    }
    let witness = GammaWitness {
        beta1: ExactReal::zero(),
        beta2: gamma.mul(&ExactReal::ratio(1, 2))?,
    };
    let (s1, s2) = witness.sequences(gamma, r, s)?;
    if let Some(k) = oracle::first_common(&s1, &s2, -WITNESS_WINDOW, WITNESS_WINDOW)? {
        return Err(Error::VerificationFailed(k));
    }
    Ok(witness)
}

/// Whether the second runner, standing at distance `rho` behind the recording
/// point at time `t`, does *not* pass it during `[floor(t), floor(t) + 1)`:
/// `(1 - fr(t))/alpha2 <= rho < 1 - fr(t)/alpha2`.
pub fn lattice_condition(t: &ExactReal, rho: &ExactReal, alpha2: &ExactReal) -> Result<bool> {
    let f = t.fr();
    let lower = ExactReal::one().sub(&f)?.div(alpha2)?;
    let upper = ExactReal::one().sub(&f.div(alpha2)?)?;
    Ok(lower.compare(rho)?.is_le() && rho.compare(&upper)?.is_lt())
}

/// Distance still to run before the runner of `seq` reaches the recording
/// point, as a fraction of a lap: `fr((beta - t)/alpha)`.
pub fn distance_behind(seq: &BeattySeq, t: &ExactReal) -> Result<ExactReal> {
    Ok(seq.beta().sub(t)?.div(seq.alpha())?.fr())
}

/// The lattice of second-runner positions seen at the first runner's passages
/// of the recording point, sorted in `[0, 1)`. It has spacing `1/s`.
pub fn relative_lattice(
    gamma: &ExactReal,
    r: i64,
    s: i64,
    beta1: &ExactReal,
    beta2: &ExactReal,
) -> Result<Vec<ExactReal>> {
    check_gamma(gamma, r, s)?;
    let s2 = BeattySeq::new(gamma.mul_int(s), beta2.clone())?;
    let alpha1 = gamma.mul_int(r);
    let mut points = (0..s)
        .map(|k| distance_behind(&s2, &beta1.add(&alpha1.mul_int(k))?))
        .collect::<Result<Vec<_>>>()?;
    points.sort_by(|a, b| a.compare(b).expect("same field"));
    Ok(points)
}

/// One grid sample of the offset search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OffsetSample {
    pub beta1: ExactReal,
    pub beta2: ExactReal,
    /// Smallest common value in the scanned window.
    pub common: Option<i64>,
}

/// Scans offsets `beta1 = i*alpha1/steps`, `beta2 = j*alpha2/steps` for
/// `0 <= i, j < steps` (each runner placed at `steps` evenly spaced points of
/// its lap) and records the first intersection inside `[-half, half)` for
/// each. Samples come back in row-major `(i, j)` order.
pub fn offset_grid_search(
    gamma: &ExactReal,
    r: i64,
    s: i64,
    steps: i64,
    half: i64,
) -> Result<Vec<OffsetSample>> {
    check_gamma(gamma, r, s)?;
    require_positive_int(steps)?;
    let (alpha1, alpha2) = (gamma.mul_int(r), gamma.mul_int(s));
    let mut out = Vec::with_capacity((steps * steps) as usize);
    for i in 0..steps {
        let beta1 = alpha1.mul(&ExactReal::ratio(i, steps))?;
        let s1 = BeattySeq::new(alpha1.clone(), beta1.clone())?;
        for j in 0..steps {
            let beta2 = alpha2.mul(&ExactReal::ratio(j, steps))?;
            let s2 = BeattySeq::new(alpha2.clone(), beta2.clone())?;
            let common = oracle::first_common(&s1, &s2, -half, half)?;
            out.push(OffsetSample { beta1: beta1.clone(), beta2, common });
        }
    }
    Ok(out)
}
