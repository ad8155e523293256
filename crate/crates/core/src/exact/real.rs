use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::Rational;
use crate::error::{Error, Result};

/// `a + b*sqrt(d)` with `b != 0` and `d` squarefree, `d >= 2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quadratic {
    a: Rational,
    b: Rational,
    d: u64,
}

impl Quadratic {
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_coeff(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }
}

/// An exact real number: either rational or an element of a real quadratic
/// field `Q(sqrt(d))`.
///
/// Arithmetic and comparison are closed within one field. Combining two
/// irrational values over different radicands fails with
/// [`Error::MixedRadicands`]. Rationals mix freely with any field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExactReal {
    Rational(Rational),
    Quadratic(Quadratic),
}

pub fn is_squarefree(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Sign of `u + v*sqrt(d)`, decided by squaring.
fn sign_of(u: &Rational, v: &Rational, d: u64) -> Ordering {
    let su = u.signum();
    let sv = v.signum();
    if sv == 0 {
        return su.cmp(&0);
    }
    if su == 0 || su == sv {
        return sv.cmp(&0);
    }
    // Opposite signs: the term with the larger square wins.
    let u2 = u * u;
    let v2d = &(v * v) * &Rational::from_integer(d as i64);
    match u2.cmp(&v2d) {
        Ordering::Greater => su.cmp(&0),
        Ordering::Less => sv.cmp(&0),
        // u^2 = v^2 d with v != 0 would make d a rational square.
        Ordering::Equal => unreachable!("squarefree radicand {d} has a rational root"),
    }
}

/// `floor((p + floor(r*sqrt(d))) / den)` computed in `i128` when nothing overflows.
fn quadratic_floor_small(a: &Rational, b: &Rational, d: u64) -> Option<i128> {
    let (an, ad) = a.as_i64_pair()?;
    let (bn, bd) = b.as_i64_pair()?;
    let (ad, bd) = (ad as i128, bd as i128);
    let den = ad.lcm(&bd);
    let p = (an as i128).checked_mul(den / ad)?;
    let r = (bn as i128).checked_mul(den / bd)?;
    let r2d = r.unsigned_abs().checked_mul(r.unsigned_abs())?.checked_mul(d as u128)?;
    let root = i128::try_from(r2d.isqrt()).ok()?;
    // r2d is never a perfect square, so sqrt lies strictly inside (root, root + 1).
    let irr_floor = if r > 0 { root } else { -root - 1 };
    Some(Integer::div_floor(&p.checked_add(irr_floor)?, &den))
}

fn quadratic_floor_big(a: &Rational, b: &Rational, d: u64) -> BigInt {
    let (an, ad) = (a.numer(), a.denom());
    let (bn, bd) = (b.numer(), b.denom());
    let den = ad.lcm(&bd);
    let p = an * (&den / &ad);
    let r = bn * (&den / &bd);
    let r2d = &r * &r * BigInt::from(d);
    let root = r2d.sqrt();
    let irr_floor = if r.is_positive() { root } else { -root - 1 };
    (p + irr_floor).div_floor(&den)
}

impl ExactReal {
    pub fn zero() -> ExactReal {
        ExactReal::Rational(Rational::zero())
    }

    pub fn one() -> ExactReal {
        ExactReal::Rational(Rational::one())
    }

    pub fn integer(n: i64) -> ExactReal {
        ExactReal::Rational(Rational::from_integer(n))
    }

    /// `num / den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> ExactReal {
        ExactReal::Rational(Rational::new(num, den))
    }

    /// `a + b*sqrt(d)`, collapsing to a rational when `b == 0`.
    pub fn quadratic(a: Rational, b: Rational, d: u64) -> Result<ExactReal> {
        if b.is_zero() {
            return Ok(ExactReal::Rational(a));
        }
        if d < 2 || !is_squarefree(d) {
            return Err(Error::BadRadicand(d));
        }
        Ok(ExactReal::Quadratic(Quadratic { a, b, d }))
    }

    pub fn sqrt(d: u64) -> Result<ExactReal> {
        ExactReal::quadratic(Rational::zero(), Rational::one(), d)
    }

    /// The golden ratio `(1 + sqrt(5)) / 2`.
    pub fn golden_ratio() -> ExactReal {
        ExactReal::Quadratic(Quadratic {
            a: Rational::new(1, 2),
            b: Rational::new(1, 2),
            d: 5,
        })
    }

    pub fn rational_part(&self) -> &Rational {
        match self {
            ExactReal::Rational(r) => r,
            ExactReal::Quadratic(q) => &q.a,
        }
    }

    /// Coefficient of `sqrt(d)`; zero for rationals.
    pub fn irrational_coeff(&self) -> Rational {
        match self {
            ExactReal::Rational(_) => Rational::zero(),
            ExactReal::Quadratic(q) => q.b.clone(),
        }
    }

    pub fn radicand(&self) -> Option<u64> {
        match self {
            ExactReal::Rational(_) => None,
            ExactReal::Quadratic(q) => Some(q.d),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactReal::Rational(r) => Some(r),
            ExactReal::Quadratic(_) => None,
        }
    }

    /// The radicand shared by `self` and `other`, if any.
    pub fn common_radicand(&self, other: &ExactReal) -> Result<Option<u64>> {
        match (self.radicand(), other.radicand()) {
            (Some(d1), Some(d2)) if d1 != d2 => Err(Error::MixedRadicands(d1, d2)),
            (Some(d), _) | (_, Some(d)) => Ok(Some(d)),
            (None, None) => Ok(None),
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, ExactReal::Rational(r) if r.is_integer())
    }

    pub fn is_irrational(&self) -> bool {
        matches!(self, ExactReal::Quadratic(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExactReal::Rational(r) if r.is_zero())
    }

    pub fn signum(&self) -> Ordering {
        match self {
            ExactReal::Rational(r) => r.signum().cmp(&0),
            ExactReal::Quadratic(q) => sign_of(&q.a, &q.b, q.d),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    fn build(a: Rational, b: Rational, d: Option<u64>) -> ExactReal {
        match d {
            Some(d) if !b.is_zero() => ExactReal::Quadratic(Quadratic { a, b, d }),
            _ => ExactReal::Rational(a),
        }
    }

    pub fn add(&self, other: &ExactReal) -> Result<ExactReal> {
        let d = self.common_radicand(other)?;
        Ok(match (self, other) {
            (ExactReal::Rational(x), ExactReal::Rational(y)) => ExactReal::Rational(x + y),
            _ => ExactReal::build(
                self.rational_part() + other.rational_part(),
                self.irrational_coeff() + other.irrational_coeff(),
                d,
            ),
        })
    }

    pub fn sub(&self, other: &ExactReal) -> Result<ExactReal> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ExactReal) -> Result<ExactReal> {
        let d = self.common_radicand(other)?;
        Ok(match (self, other) {
            (ExactReal::Rational(x), ExactReal::Rational(y)) => ExactReal::Rational(x * y),
            (ExactReal::Rational(x), ExactReal::Quadratic(q))
            | (ExactReal::Quadratic(q), ExactReal::Rational(x)) => {
                ExactReal::build(x * &q.a, x * &q.b, d)
            }
            (ExactReal::Quadratic(p), ExactReal::Quadratic(q)) => {
                let dd = Rational::from_integer(q.d as i64);
                let a = &(&p.a * &q.a) + &(&(&p.b * &q.b) * &dd);
                let b = &(&p.a * &q.b) + &(&p.b * &q.a);
                ExactReal::build(a, b, d)
            }
        })
    }

    pub fn mul_int(&self, n: i64) -> ExactReal {
        let n = Rational::from_integer(n);
        match self {
            ExactReal::Rational(x) => ExactReal::Rational(x * &n),
            ExactReal::Quadratic(q) => ExactReal::build(&q.a * &n, &q.b * &n, Some(q.d)),
        }
    }

    /// `1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d)`.
    pub fn recip(&self) -> Result<ExactReal> {
        match self {
            ExactReal::Rational(x) => x
                .checked_recip()
                .map(ExactReal::Rational)
                .ok_or(Error::DivisionByZero),
            ExactReal::Quadratic(q) => {
                let norm = &(&q.a * &q.a) - &(&(&q.b * &q.b) * &Rational::from_integer(q.d as i64));
                // Nonzero because d is not a rational square.
                let inv = norm.recip();
                Ok(ExactReal::build(&q.a * &inv, -(&q.b * &inv), Some(q.d)))
            }
        }
    }

    pub fn div(&self, other: &ExactReal) -> Result<ExactReal> {
        self.common_radicand(other)?;
        self.mul(&other.recip()?)
    }

    pub fn neg(&self) -> ExactReal {
        match self {
            ExactReal::Rational(x) => ExactReal::Rational(-x),
            ExactReal::Quadratic(q) => ExactReal::Quadratic(Quadratic {
                a: -&q.a,
                b: -&q.b,
                d: q.d,
            }),
        }
    }

    pub fn abs(&self) -> ExactReal {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact total order within a field.
    pub fn compare(&self, other: &ExactReal) -> Result<Ordering> {
        if let (ExactReal::Rational(x), ExactReal::Rational(y)) = (self, other) {
            return Ok(x.cmp(y));
        }
        Ok(self.sub(other)?.signum())
    }

    /// The unique integer `f` with `f <= self < f + 1`.
    pub fn floor(&self) -> BigInt {
        match self {
            ExactReal::Rational(x) => x.floor(),
            ExactReal::Quadratic(q) => match quadratic_floor_small(&q.a, &q.b, q.d) {
                Some(f) => BigInt::from(f),
                None => quadratic_floor_big(&q.a, &q.b, q.d),
            },
        }
    }

    pub fn floor_i64(&self) -> Result<i64> {
        let small = match self {
            ExactReal::Rational(x) => x.floor_i64(),
            ExactReal::Quadratic(q) => {
                quadratic_floor_small(&q.a, &q.b, q.d).and_then(|f| i64::try_from(f).ok())
            }
        };
        match small {
            Some(f) => Ok(f),
            None => {
                let f = self.floor();
                f.to_i64().ok_or_else(|| Error::Overflow(f.to_string()))
            }
        }
    }

    /// Smallest integer `>= self`.
    pub fn ceil_i64(&self) -> Result<i64> {
        self.neg()
            .floor_i64()
            .and_then(|f| f.checked_neg().ok_or_else(|| Error::Overflow(format!("-({f})"))))
    }

    /// Fractional part `self - floor(self)`, in `[0, 1)`.
    pub fn fr(&self) -> ExactReal {
        match self {
            ExactReal::Rational(x) => ExactReal::Rational(x.fract()),
            ExactReal::Quadratic(q) => {
                let a = &q.a - &Rational::from_bigint(self.floor());
                ExactReal::Quadratic(Quadratic { a, b: q.b.clone(), d: q.d })
            }
        }
    }
}

impl From<Rational> for ExactReal {
    fn from(r: Rational) -> Self {
        ExactReal::Rational(r)
    }
}

impl From<i64> for ExactReal {
    fn from(n: i64) -> Self {
        ExactReal::integer(n)
    }
}

impl PartialOrd for ExactReal {
    /// `None` only for values over different radicands.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compare(other).ok()
    }
}

impl fmt::Display for ExactReal {
    /// Writes the literal form accepted by [`super::parse_real`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactReal::Rational(x) => write!(f, "{x}"),
            ExactReal::Quadratic(q) => {
                if q.a.is_zero() {
                    write!(f, "{}*sqrt({})", q.b, q.d)
                } else if q.b.is_negative() {
                    write!(f, "{}-{}*sqrt({})", q.a, -&q.b, q.d)
                } else {
                    write!(f, "{}+{}*sqrt({})", q.a, q.b, q.d)
                }
            }
        }
    }
}

impl fmt::Debug for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64), d: u64) -> ExactReal {
        ExactReal::quadratic(Rational::new(a.0, a.1), Rational::new(b.0, b.1), d).unwrap()
    }

    fn phi() -> ExactReal {
        ExactReal::golden_ratio()
    }

    #[test]
    fn floor_examples() {
        assert_eq!(ExactReal::integer(3).floor_i64().unwrap(), 3);
        // 14^2 = 196 <= 200 < 225 = 15^2
        assert_eq!(q((0, 1), (10, 1), 2).floor_i64().unwrap(), 14);
        assert_eq!(phi().floor_i64().unwrap(), 1);
        assert_eq!(q((0, 1), (-1, 1), 2).floor_i64().unwrap(), -2);
        assert_eq!(q((0, 1), (-1, 1), 2).ceil_i64().unwrap(), -1);
    }

    #[test]
    fn floor_falls_back_to_bigint() {
        let huge = Rational::from_integer(i64::MAX) * Rational::from_integer(3);
        let x = ExactReal::quadratic(huge.clone(), huge, 2).unwrap();
        // (3*(2^63-1)) * (1 + sqrt 2): checked against the big path directly.
        let f = x.floor();
        assert_eq!(
            f,
            quadratic_floor_big(x.rational_part(), &x.irrational_coeff(), 2)
        );
        assert!(x.floor_i64().is_err());
        let xf = ExactReal::from(Rational::from_bigint(f.clone()));
        assert_eq!(xf.compare(&x).unwrap(), Ordering::Less);
        let xf1 = ExactReal::from(Rational::from_bigint(f + 1));
        assert_eq!(xf1.compare(&x).unwrap(), Ordering::Greater);
    }

    #[test]
    fn fr_examples() {
        assert_eq!(ExactReal::ratio(7, 2).fr(), ExactReal::ratio(1, 2));
        assert_eq!(phi().fr(), q((-1, 2), (1, 2), 5));
        assert_eq!(ExactReal::ratio(-1, 3).fr(), ExactReal::ratio(2, 3));
    }

    #[test]
    fn compare_examples() {
        let s2 = ExactReal::sqrt(2).unwrap();
        // 2*4 < 9
        assert_eq!(s2.compare(&ExactReal::ratio(3, 2)).unwrap(), Ordering::Less);
        assert_eq!(phi().compare(&phi()).unwrap(), Ordering::Equal);
        let one_plus = q((1, 1), (1, 1), 2);
        assert_eq!(
            one_plus.compare(&ExactReal::sqrt(5).unwrap()),
            Err(Error::MixedRadicands(2, 5))
        );
        assert_eq!(s2.partial_cmp(&ExactReal::sqrt(3).unwrap()), None);
    }

    #[test]
    fn field_ops() {
        let inv = phi().recip().unwrap();
        assert_eq!(inv, q((-1, 2), (1, 2), 5));
        assert_eq!(phi().mul(&inv).unwrap(), ExactReal::one());
        assert_eq!(phi().add(&ExactReal::zero()).unwrap(), phi());
        let s2 = ExactReal::sqrt(2).unwrap();
        let two = s2.mul(&s2).unwrap();
        assert!(matches!(two, ExactReal::Rational(_)));
        assert_eq!(two, ExactReal::integer(2));
        assert_eq!(ExactReal::zero().recip(), Err(Error::DivisionByZero));
        assert_eq!(s2.sub(&s2).unwrap(), ExactReal::zero());
        assert!(s2.add(&ExactReal::sqrt(3).unwrap()).is_err());
    }

    #[test]
    fn predicates() {
        assert!(ExactReal::ratio(6, 3).is_integer());
        assert!(ExactReal::sqrt(2).unwrap().is_irrational());
        assert!(!phi().is_integer());
        assert!(!ExactReal::ratio(1, 2).is_irrational());
    }

    #[test]
    fn radicand_validation() {
        assert_eq!(ExactReal::sqrt(8), Err(Error::BadRadicand(8)));
        assert_eq!(ExactReal::sqrt(1), Err(Error::BadRadicand(1)));
        assert!(ExactReal::sqrt(30).is_ok());
        assert!(is_squarefree(1) && is_squarefree(2) && !is_squarefree(12));
    }

    #[test]
    fn display() {
        assert_eq!(phi().to_string(), "1/2+1/2*sqrt(5)");
        assert_eq!(q((0, 1), (-1, 1), 2).to_string(), "-1*sqrt(2)");
        assert_eq!(q((3, 1), (-1, 2), 7).to_string(), "3-1/2*sqrt(7)");
    }
}
