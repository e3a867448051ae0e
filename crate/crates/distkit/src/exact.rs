//! Exact arithmetic in Q and in real quadratic fields Q(sqrt(m)).
//!
//! Bound certificates depend on the exact sign of expansion coefficients, so
//! every value that can be kept symbolic is kept as `a + b*sqrt(m)` with
//! rational `a`, `b` and squarefree `m`. Values that cannot be represented
//! this way go through the f64 fallback (see [`Scalar`]).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;

/// Element `a + b*sqrt(m)` of Q(sqrt(m)), with `m` squarefree and `m = 0`
/// exactly when the element is rational (`b = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExt {
    a: BigRational,
    b: BigRational,
    m: u64,
}

pub fn big_ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Strips square factors: returns (squarefree part, extracted square root).
/// `n = sf * r^2`.
fn squarefree_split(n: u64) -> (u64, u64) {
    let mut sf = 1u64;
    let mut root = 1u64;
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0u32;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        root *= p.pow(e / 2);
        if e % 2 == 1 {
            sf *= p;
        }
        p += 1;
    }
    (sf * n, root)
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

impl QExt {
    pub fn new(a: BigRational, b: BigRational, m: u64) -> Self {
        if b.is_zero() || m == 0 || m == 1 {
            // sqrt(1) = 1 folds into the rational part
            let a = if m == 1 { a + b } else { a };
            return QExt {
                a,
                b: BigRational::zero(),
                m: 0,
            };
        }
        let (sf, root) = squarefree_split(m);
        if sf == 1 {
            return QExt {
                a: a + b * BigRational::from(BigInt::from(root)),
                b: BigRational::zero(),
                m: 0,
            };
        }
        QExt {
            a,
            b: b * BigRational::from(BigInt::from(root)),
            m: sf,
        }
    }

    pub fn rational(r: BigRational) -> Self {
        QExt {
            a: r,
            b: BigRational::zero(),
            m: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(big_ratio(n, 1))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::rational(big_ratio(num, den))
    }

    /// `sqrt(m)` for a nonnegative integer radicand.
    pub fn sqrt_int(m: u64) -> Self {
        QExt::new(BigRational::zero(), BigRational::one(), m)
    }

    pub fn is_rational(&self) -> bool {
        self.m == 0
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_coeff(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.m
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.m == 0 {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let af = ratio_to_f64(&self.a);
        if self.m == 0 {
            af
        } else {
            af + ratio_to_f64(&self.b) * (self.m as f64).sqrt()
        }
    }

    /// Exact sign: -1, 0, or +1.
    pub fn signum(&self) -> i8 {
        if self.b.is_zero() {
            return sign_of(&self.a);
        }
        if self.a.is_zero() {
            return sign_of(&self.b);
        }
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == sb {
            return sa;
        }
        // a and b*sqrt(m) pull in opposite directions: compare a^2 vs b^2*m.
        let a2 = &self.a * &self.a;
        let b2m = &self.b * &self.b * BigRational::from(BigInt::from(self.m));
        match a2.cmp(&b2m) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    fn check_compatible(&self, other: &Self) -> u64 {
        match (self.m, other.m) {
            (0, m) | (m, 0) => m,
            (m1, m2) if m1 == m2 => m1,
            (m1, m2) => panic!("incompatible quadratic fields: sqrt({m1}) vs sqrt({m2})"),
        }
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        if self.m == 0 {
            return Ok(QExt::rational(self.a.recip()));
        }
        // 1/(a+b*sqrt(m)) = (a-b*sqrt(m)) / (a^2 - b^2*m)
        let norm = &self.a * &self.a - &self.b * &self.b * BigRational::from(BigInt::from(self.m));
        if norm.is_zero() {
            return Err(Error::Arithmetic("zero field norm".into()));
        }
        Ok(QExt::new(&self.a / &norm, -&self.b / &norm, self.m))
    }

    /// Square root within the same tower, when it exists there.
    ///
    /// For rational input this may introduce a radical (`sqrt(2) = 0 + 1*sqrt(2)`);
    /// for `a + b*sqrt(m)` it succeeds only if the root again lies in Q(sqrt(m)).
    pub fn sqrt(&self) -> Option<QExt> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(QExt::from_int(0));
        }
        if self.m == 0 {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(QExt::rational(r));
            }
            // sqrt(p/q) = sqrt(p*q)/q; succeed when p*q fits and stays small
            let pq = self.a.numer() * self.a.denom();
            let pq: u64 = pq.try_into().ok()?;
            let (sf, root) = squarefree_split(pq);
            let coeff = BigRational::new(BigInt::from(root), self.a.denom().clone());
            return Some(QExt::new(BigRational::zero(), coeff, sf));
        }
        // (p + q*sqrt(m))^2 = a + b*sqrt(m): p^2 + q^2 m = a, 2pq = b.
        let m_r = BigRational::from(BigInt::from(self.m));
        let disc = &self.a * &self.a - &self.b * &self.b * &m_r;
        let disc_root = rational_sqrt(&disc)?;
        let two = big_ratio(2, 1);
        for root in [&disc_root, &(-disc_root.clone())] {
            let p2 = (&self.a + root) / &two;
            if let Some(p) = rational_sqrt(&p2) {
                if !p.is_zero() {
                    let q = &self.b / (&two * &p);
                    let cand = QExt::new(p, q, self.m);
                    if cand.is_positive() || cand.is_zero() {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn ratio_to_f64(r: &BigRational) -> f64 {
    let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}

impl Add for QExt {
    type Output = QExt;
    fn add(self, rhs: QExt) -> QExt {
        let m = self.check_compatible(&rhs);
        QExt::new(self.a + rhs.a, self.b + rhs.b, m)
    }
}

impl Sub for QExt {
    type Output = QExt;
    fn sub(self, rhs: QExt) -> QExt {
        let m = self.check_compatible(&rhs);
        QExt::new(self.a - rhs.a, self.b - rhs.b, m)
    }
}

impl Mul for QExt {
    type Output = QExt;
    fn mul(self, rhs: QExt) -> QExt {
        let m = self.check_compatible(&rhs);
        let m_r = BigRational::from(BigInt::from(m));
        let a = &self.a * &rhs.a + &self.b * &rhs.b * &m_r;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QExt::new(a, b, m)
    }
}

impl Div for QExt {
    type Output = QExt;
    // division as multiplication by the conjugate-based inverse
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: QExt) -> QExt {
        let inv = rhs.inverse().expect("QExt division by zero");
        self * inv
    }
}

impl Neg for QExt {
    type Output = QExt;
    fn neg(self) -> QExt {
        QExt {
            a: -self.a,
            b: -self.b,
            m: self.m,
        }
    }
}

impl fmt::Display for QExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let rad = if self.b.abs().is_one() {
            format!("sqrt({})", self.m)
        } else {
            format!("{}*sqrt({})", self.b.abs(), self.m)
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{rad}")
            } else {
                write!(f, "{rad}")
            }
        } else if self.b.is_negative() {
            write!(f, "{} - {rad}", self.a)
        } else {
            write!(f, "{} + {rad}", self.a)
        }
    }
}

impl FromStr for QExt {
    type Err = Error;

    /// Parses expressions like `1/4`, `sqrt(5)`, `-1/4*sqrt(5)`,
    /// `3/5 + 1/5*sqrt(5)`, `1 - sqrt(2)/2`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty exact value".into()));
        }
        // split into signed terms at top level
        let mut terms: Vec<(i8, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign: i8 = 1;
        let mut depth = 0usize;
        for (i, c) in s.chars().enumerate() {
            match c {
                '(' => {
                    depth += 1;
                    cur.push(c);
                }
                ')' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::Parse(format!("unbalanced parens in '{s}'")))?;
                    cur.push(c);
                }
                '+' | '-' if depth == 0 && i > 0 && !cur.is_empty() => {
                    terms.push((sign, std::mem::take(&mut cur)));
                    sign = if c == '-' { -1 } else { 1 };
                }
                '+' if depth == 0 && cur.is_empty() => {}
                '-' if depth == 0 && cur.is_empty() => sign = -sign,
                _ => cur.push(c),
            }
        }
        if !cur.is_empty() {
            terms.push((sign, cur));
        }
        let mut acc = QExt::from_int(0);
        for (sgn, term) in terms {
            let v = parse_term(&term)?;
            let v = if sgn < 0 { -v } else { v };
            acc = acc + v;
        }
        Ok(acc)
    }
}

fn parse_term(term: &str) -> Result<QExt, Error> {
    // forms: R | sqrt(M) | R*sqrt(M) | sqrt(M)*R | sqrt(M)/R
    if let Some(idx) = term.find("sqrt(") {
        let close = term[idx..]
            .find(')')
            .ok_or_else(|| Error::Parse(format!("missing ')' in '{term}'")))?
            + idx;
        let m: u64 = term[idx + 5..close]
            .parse()
            .map_err(|_| Error::Parse(format!("bad radicand in '{term}'")))?;
        let before = &term[..idx];
        let after = &term[close + 1..];
        let mut coeff = BigRational::one();
        if !before.is_empty() {
            let b = before.strip_suffix('*').unwrap_or(before);
            if !b.is_empty() {
                coeff *= parse_rational(b)?;
            }
        }
        if !after.is_empty() {
            if let Some(rest) = after.strip_prefix('/') {
                coeff /= parse_rational(rest)?;
            } else if let Some(rest) = after.strip_prefix('*') {
                coeff *= parse_rational(rest)?;
            } else {
                return Err(Error::Parse(format!("trailing junk in '{term}'")));
            }
        }
        Ok(QExt::new(BigRational::zero(), coeff, m))
    } else {
        Ok(QExt::rational(parse_rational(term)?))
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator '{n}'")))?;
        let d: BigInt = d
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator '{d}'")))?;
        if d.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(BigRational::new(n, d))
    } else if let Some((int, frac)) = s.split_once('.') {
        // decimal literal
        let digits = frac.len() as u32;
        let whole: BigInt = format!("{int}{frac}")
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal '{s}'")))?;
        Ok(BigRational::new(whole, BigInt::from(10u64).pow(digits)))
    } else {
        let n: BigInt = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer '{s}'")))?;
        Ok(BigRational::from(n))
    }
}

/// Common scalar interface for the polynomial and Gegenbauer machinery,
/// implemented exactly by [`QExt`] and approximately by `f64`.
pub trait Scalar:
    Clone
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn is_zero_val(&self) -> bool;
    /// Sign classification. Exact scalars decide symbolically; floats use a
    /// raw comparison against zero.
    fn sign(&self) -> i8;
    fn approx(&self) -> f64;
}

impl Scalar for QExt {
    fn zero() -> Self {
        QExt::from_int(0)
    }
    fn one() -> Self {
        QExt::from_int(1)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        QExt::ratio(num, den)
    }
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
    fn sign(&self) -> i8 {
        self.signum()
    }
    fn approx(&self) -> f64 {
        self.to_f64()
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn is_zero_val(&self) -> bool {
        *self == 0.0
    }
    fn sign(&self) -> i8 {
        if *self > 0.0 {
            1
        } else if *self < 0.0 {
            -1
        } else {
            0
        }
    }
    fn approx(&self) -> f64 {
        *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_reduction() {
        // sqrt(20) = 2*sqrt(5)
        let x = QExt::sqrt_int(20);
        assert_eq!(x.radicand(), 5);
        assert_eq!(x.radical_coeff(), &big_ratio(2, 1));
        // sqrt(9) = 3
        let y = QExt::sqrt_int(9);
        assert!(y.is_rational());
        assert_eq!(y.as_rational().unwrap(), &big_ratio(3, 1));
    }

    #[test]
    fn golden_ratio_arithmetic() {
        // tau = (1+sqrt(5))/2 satisfies tau^2 = tau + 1
        let tau = (QExt::from_int(1) + QExt::sqrt_int(5)) / QExt::from_int(2);
        let sq = tau.clone() * tau.clone();
        assert_eq!(sq, tau.clone() + QExt::from_int(1));
        assert!(tau.is_positive());
        // conjugate (1-sqrt(5))/2 is negative
        let conj = (QExt::from_int(1) - QExt::sqrt_int(5)) / QExt::from_int(2);
        assert!(conj.is_negative());
    }

    #[test]
    fn exact_sign_near_zero() {
        // sqrt(2) - 1.41421356... style near-cancellations stay exact:
        // 99/70 - sqrt(2) > 0 while 140/99 - sqrt(2) < 0
        let s2 = QExt::sqrt_int(2);
        assert!((QExt::ratio(99, 70) - s2.clone()).is_positive());
        assert!((QExt::ratio(140, 99) - s2.clone()).is_negative());
        assert_eq!((s2.clone() - s2).signum(), 0);
    }

    #[test]
    fn sqrt_in_field() {
        // tau^2 = (3+sqrt(5))/2, so sqrt of that must recover tau
        let tau_sq = (QExt::from_int(3) + QExt::sqrt_int(5)) / QExt::from_int(2);
        let tau = tau_sq.sqrt().expect("root exists in Q(sqrt 5)");
        let expect = (QExt::from_int(1) + QExt::sqrt_int(5)) / QExt::from_int(2);
        assert_eq!(tau, expect);
        // rational without rational root picks up a radical
        let r = QExt::ratio(1, 2).sqrt().unwrap();
        assert_eq!(r, QExt::sqrt_int(2) / QExt::from_int(2));
        // negative has no real root
        assert!(QExt::from_int(-3).sqrt().is_none());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "3/5 + 1/5*sqrt(5)",
            "-1/4*sqrt(5)",
            "sqrt(2)/2",
            "1 - sqrt(2)",
            "-1/3",
            "0.25",
        ] {
            let v: QExt = s.parse().unwrap();
            let back: QExt = v.to_string().parse().unwrap();
            assert_eq!(v, back, "round trip failed for {s}");
        }
        let v: QExt = "0.25".parse().unwrap();
        assert_eq!(v, QExt::ratio(1, 4));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<QExt>().is_err());
        assert!("sqrt(".parse::<QExt>().is_err());
        assert!("1/0".parse::<QExt>().is_err());
    }
}
