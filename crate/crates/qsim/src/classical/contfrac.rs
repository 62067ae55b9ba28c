//! Continued fractions over exact integers, and best rational approximation
//! with a bounded denominator.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_integer::Integer;

/// A nonnegative rational in lowest terms with arbitrary-precision parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    numerator: BigUint,
    denominator: BigUint,
}

impl Fraction {
    pub fn new(numerator: BigUint, denominator: BigUint) -> Result<Self> {
        if denominator == BigUint::from(0u32) {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        let g = numerator.gcd(&denominator);
        Ok(Self {
            numerator: &numerator / &g,
            denominator: &denominator / &g,
        })
    }

    pub fn from_u64(numerator: u64, denominator: u64) -> Result<Self> {
        Self::new(BigUint::from(numerator), BigUint::from(denominator))
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    pub fn numerator_u64(&self) -> Option<u64> {
        u64::try_from(&self.numerator).ok()
    }

    pub fn denominator_u64(&self) -> Option<u64> {
        u64::try_from(&self.denominator).ok()
    }

    pub fn to_f64(&self) -> f64 {
        // Good enough for the denominators this crate meets.
        let num: f64 = self.numerator.to_string().parse().unwrap_or(f64::MAX);
        let den: f64 = self.denominator.to_string().parse().unwrap_or(1.0);
        num / den
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Convergents `p_n / q_n` of `b/q` from the Euclidean partial quotients,
/// via `p_n = a_n p_{n-1} + p_{n-2}`, `q_n = a_n q_{n-1} + q_{n-2}`.
/// Exact integer arithmetic throughout.
pub fn convergents(b: u64, q: u64) -> Result<Vec<Fraction>> {
    if q == 0 {
        return Err(Error::InvalidParameter("zero denominator".into()));
    }
    let mut quotients = Vec::new();
    let (mut num, mut den) = (b, q);
    while den != 0 {
        quotients.push(num / den);
        let r = num % den;
        num = den;
        den = r;
    }
    let mut out = Vec::with_capacity(quotients.len());
    let (mut p_prev, mut p) = (BigUint::from(1u32), BigUint::from(quotients[0]));
    let (mut q_prev, mut q_cur) = (BigUint::from(0u32), BigUint::from(1u32));
    out.push(Fraction::new(p.clone(), q_cur.clone())?);
    for &a in &quotients[1..] {
        let a = BigUint::from(a);
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q_cur + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);
        out.push(Fraction::new(p.clone(), q_cur.clone())?);
    }
    Ok(out)
}

/// The convergent of `b/q` with the largest denominator not exceeding
/// `bound`; among all fractions with denominator up to that convergent's,
/// it is the best approximation to `b/q`.
pub fn best_approx(b: u64, q: u64, bound: u64) -> Result<Fraction> {
    if bound == 0 {
        return Err(Error::InvalidParameter("bound must be >= 1".into()));
    }
    if b >= q {
        return Err(Error::InvalidParameter(format!("need 0 <= b < q, got {b}/{q}")));
    }
    let all = convergents(b, q)?;
    let bound = BigUint::from(bound);
    let mut best = None;
    for f in all {
        if f.denominator() <= &bound {
            best = Some(f);
        }
    }
    best.ok_or_else(|| Error::InvalidParameter("no convergent within bound".into()))
}

/// Floating-point continued-fraction expansion of a real `x >= 0`; stops when
/// the remainder drops below `1e-12` or the denominator would exceed `bound`.
pub fn convergents_real(x: f64, bound: u64) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = Vec::new();
    let (mut p_prev, mut p) = (1u64, x.floor() as u64);
    let (mut q_prev, mut q) = (0u64, 1u64);
    out.push((p, q));
    let mut rest = x - x.floor();
    while rest > 1e-12 {
        let inv = 1.0 / rest;
        let a = inv.floor() as u64;
        rest = inv - inv.floor();
        let (Some(ap), Some(aq)) = (a.checked_mul(p), a.checked_mul(q)) else {
            break;
        };
        let (Some(p_next), Some(q_next)) = (ap.checked_add(p_prev), aq.checked_add(q_prev)) else {
            break;
        };
        if q_next > bound {
            break;
        }
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        out.push((p, q));
    }
    out
}
