//! Parameter validation and exact moments of the two weights.
//!
//! Both weights in the pair share the closed-form moments
//! `m_k(t) = (a+1)_k (b+1)_k / (c+t+b+1)_k` with `t = 0` for `W(x; a, b, c)`
//! and `t = 1` for `W(x; a, b, c+1)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{pochhammer, rat, Rational};
use crate::{Error, Result};

/// Admissible weight parameters: `a > -1`, `b > -1`, `c > max(0, a-b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSet {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl ParamSet {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let minus_one = -Rational::one();
        if a <= minus_one || b <= minus_one {
            return Err(Error::InvalidParameters(format!(
                "need a > -1 and b > -1, got a={a}, b={b}"
            )));
        }
        let floor = if a > b { &a - &b } else { Rational::zero() };
        if c <= floor {
            return Err(Error::InvalidParameters(format!(
                "need c > max(0, a-b) = {floor}, got c={c}"
            )));
        }
        Ok(ParamSet { a, b, c })
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self> {
        ParamSet::new(rat(a), rat(b), rat(c))
    }

    /// Same `a`, `b` with `c` replaced.
    pub fn with_c(&self, c: Rational) -> Result<Self> {
        ParamSet::new(self.a.clone(), self.b.clone(), c)
    }
}

/// k-th moment of the weight `W(x; a, b, c+t)`, `t` in `{0, 1}`.
pub fn moment(p: &ParamSet, t: u8, k: usize) -> Result<Rational> {
    debug_assert!(t <= 1);
    let k = k as i64;
    let num = pochhammer(&(&p.a + rat(1)), k)? * pochhammer(&(&p.b + rat(1)), k)?;
    let den = pochhammer(&(&p.c + &p.b + rat(1 + t as i64)), k)?;
    Ok(num / den)
}

/// Moments `m_0(t) .. m_{len-1}(t)`, built incrementally by the term ratio.
pub fn moment_vector(p: &ParamSet, t: u8, len: usize) -> Result<Vec<Rational>> {
    let mut out = Vec::with_capacity(len);
    if len == 0 {
        return Ok(out);
    }
    let mut m = Rational::one();
    out.push(m.clone());
    for k in 0..len as i64 - 1 {
        let num = (&p.a + rat(1 + k)) * (&p.b + rat(1 + k));
        let den = &p.c + &p.b + rat(1 + t as i64 + k);
        if den.is_zero() {
            return Err(Error::PochhammerPole);
        }
        m = m * num / den;
        out.push(m.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn rejects_inadmissible_parameters() {
        assert!(ParamSet::from_i64(-1, 0, 1).is_err());
        assert!(ParamSet::from_i64(0, -2, 1).is_err());
        assert!(ParamSet::from_i64(0, 0, 0).is_err());
        // c must exceed a-b when a > b
        assert!(ParamSet::new(rat(2), rat(0), rat(2)).is_err());
        assert!(ParamSet::new(rat(2), rat(0), ratio(5, 2)).is_ok());
    }

    #[test]
    fn moments_at_reference_point() {
        // a=b=0, c=1: m_k(0) = (1)_k (1)_k / (2)_k = k! / (k+1)
        let p = ParamSet::from_i64(0, 0, 1).unwrap();
        assert_eq!(moment(&p, 0, 0).unwrap(), rat(1));
        assert_eq!(moment(&p, 0, 1).unwrap(), ratio(1, 2));
        assert_eq!(moment(&p, 0, 2).unwrap(), ratio(2, 3));
        assert_eq!(moment(&p, 0, 3).unwrap(), ratio(3, 2));
        // t=1 shifts the denominator base: m_k(1) = k! k! / (3)_k
        assert_eq!(moment(&p, 1, 1).unwrap(), ratio(1, 3));
        assert_eq!(moment(&p, 1, 2).unwrap(), ratio(4, 12));
    }

    #[test]
    fn vector_matches_pointwise() {
        let p = ParamSet::new(ratio(1, 2), ratio(1, 3), rat(2)).unwrap();
        for t in 0..=1u8 {
            let v = moment_vector(&p, t, 12).unwrap();
            for (k, mk) in v.iter().enumerate() {
                assert_eq!(*mk, moment(&p, t, k).unwrap());
            }
        }
    }
}
