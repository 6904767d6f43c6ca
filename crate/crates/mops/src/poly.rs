//! Dense exact-rational polynomials and a Laurent variant used by the weight
//! algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{rat, Rational};
use crate::{Error, Result};

/// Dense polynomial over `Rational`; index `i` holds the coefficient of
/// `x^i`. The zero polynomial is the empty coefficient vector, otherwise the
/// last entry is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Substitutes `x -> x^k`, spreading coefficient `i` to degree `k*i`.
    pub fn substitute_power(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return if k == 0 {
                Poly::constant(self.coeffs.iter().sum())
            } else {
                Poly::zero()
            };
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Poly::from_coeffs(coeffs)
    }

    /// Multiplies by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Largest absolute coefficient, exact.
    pub fn max_abs_coeff(&self) -> Rational {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

/// Polynomial with integer exponents of either sign; the weight algebra
/// produces `1/x` factors mid-computation that must cancel by the end.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::term(0, Rational::one())
    }

    pub fn term(exp: i64, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            let v = out.coeff(*e) + c;
            if v.is_zero() {
                out.terms.remove(e);
            } else {
                out.terms.insert(*e, v);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add(&rhs.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> LaurentPoly {
        if s.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn mul(&self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let v = out.coeff(e1 + e2) + c1 * c2;
                if v.is_zero() {
                    out.terms.remove(&(e1 + e2));
                } else {
                    out.terms.insert(e1 + e2, v);
                }
            }
        }
        out
    }

    /// Multiplies by `x^k` (k may be negative).
    pub fn shift_exp(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn derivative(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| **e != 0)
                .map(|(e, c)| (e - 1, c * rat(*e)))
                .collect(),
        }
    }

    /// Converts to a plain polynomial; fails if a negative exponent remains.
    pub fn into_poly(&self) -> Result<Poly> {
        if self.min_exp().map_or(false, |e| e < 0) {
            return Err(Error::ReductionFailure);
        }
        let deg = self.max_exp().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[*e as usize] = c.clone();
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}

impl From<&Poly> for LaurentPoly {
    fn from(p: &Poly) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.insert(i as i64, c.clone());
            }
        }
        LaurentPoly { terms }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("({c})*x^{e}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn zero_polynomial_is_empty() {
        let p = Poly::from_coeffs(vec![Rational::zero(), Rational::zero()]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = Poly::from_coeffs(vec![rat(1), rat(-2), rat(1)]); // (x-1)^2
        let q = &Poly::x() - &Poly::one();
        assert_eq!(&q * &q, p);
        assert_eq!(p.eval(&rat(3)), rat(4));
        assert_eq!(p.derivative(), q.scale(&rat(2)));
    }

    #[test]
    fn substitute_power_spreads_degrees() {
        let p = Poly::from_coeffs(vec![rat(2), rat(0), rat(5)]);
        let q = p.substitute_power(3);
        assert_eq!(q.coeff(0), rat(2));
        assert_eq!(q.coeff(6), rat(5));
        assert_eq!(q.degree(), Some(6));
    }

    #[test]
    fn laurent_cancellation_and_conversion() {
        let a = LaurentPoly::term(-1, rat(3));
        let b = LaurentPoly::term(-1, rat(-3)).add(&LaurentPoly::term(2, ratio(1, 2)));
        let s = a.add(&b);
        assert_eq!(s.min_exp(), Some(2));
        let p = s.into_poly().unwrap();
        assert_eq!(p.coeff(2), ratio(1, 2));
        assert!(a.into_poly().is_err());
    }

    #[test]
    fn laurent_derivative() {
        // d/dx (3/x + x^2) = -3/x^2 + 2x
        let p = LaurentPoly::term(-1, rat(3)).add(&LaurentPoly::term(2, rat(1)));
        let d = p.derivative();
        assert_eq!(d.coeff(-2), rat(-3));
        assert_eq!(d.coeff(1), rat(2));
    }
}
