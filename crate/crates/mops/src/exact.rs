//! Exact rational kernels: Pochhammer symbols, binomials, and terminating
//! generalised hypergeometric series with polynomial arguments.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Poly;
use crate::{Error, Result};

/// Arbitrary-precision rational, always stored in canonical reduced form
/// with positive denominator (guaranteed by `num-rational`).
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3/2"`, `"-1.5"` or `"7"` into an exact rational. Finite decimals
/// convert exactly (no binary float round-trip).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let i: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let f: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mag = Rational::from_integer(i.abs()) + Rational::new(f, scale);
        return Ok(if neg { -mag } else { mag });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}

/// Pochhammer symbol `(z)_k` with the reciprocal extension to negative `k`:
/// `(z)_{-j} = 1 / ((z-j)_j)`. The extension fails with a pole error when the
/// shifted product vanishes.
pub fn pochhammer(z: &Rational, k: i64) -> Result<Rational> {
    if k >= 0 {
        let mut acc = Rational::one();
        for i in 0..k {
            acc *= z + rat(i);
        }
        Ok(acc)
    } else {
        let j = -k;
        let shifted = z - rat(j);
        let denom = pochhammer(&shifted, j)?;
        if denom.is_zero() {
            return Err(Error::PochhammerPole);
        }
        Ok(denom.recip())
    }
}

/// Terminating generalised hypergeometric sum
/// `sum_{j=0}^{n} prod (upper_i)_j / prod (lower_i)_j * arg^j / j!`,
/// truncated at the upper parameter designated by `term_index`, which must be
/// a nonpositive integer `-n`. A lower parameter hitting `{0, -1, ..., -(n-1)}`
/// makes a term denominator vanish and is reported as singular.
pub fn pfq_terminating(
    term_index: usize,
    upper: &[Rational],
    lower: &[Rational],
    arg: &Poly,
) -> Result<Poly> {
    let t = upper
        .get(term_index)
        .ok_or_else(|| Error::InvalidParameters("terminating index out of range".into()))?;
    if !t.is_integer() || t.is_positive() {
        return Err(Error::SingularHypergeometricParameter);
    }
    let n = (-t)
        .to_integer()
        .to_u64()
        .ok_or(Error::SingularHypergeometricParameter)? as i64;
    for l in lower {
        if l.is_integer() && !l.is_positive() && (-l).to_integer() < BigInt::from(n) {
            return Err(Error::SingularHypergeometricParameter);
        }
    }

    let mut sum = Poly::constant(Rational::one());
    let mut coeff = Rational::one();
    let mut arg_pow = Poly::one();
    for j in 0..n {
        for u in upper {
            coeff *= u + rat(j);
        }
        for l in lower {
            coeff /= l + rat(j);
        }
        coeff /= rat(j + 1);
        arg_pow = &arg_pow * arg;
        sum = &sum + &arg_pow.scale(&coeff);
    }
    Ok(sum)
}

/// Convenience wrapper: evaluates the terminating series at the scalar point
/// `x` instead of a polynomial argument.
pub fn pfq_terminating_at(
    term_index: usize,
    upper: &[Rational],
    lower: &[Rational],
    x: &Rational,
) -> Result<Rational> {
    let p = pfq_terminating(term_index, upper, lower, &Poly::constant(x.clone()))?;
    Ok(p.coeff(0))
}

/// Closed form of the Minton sum
/// `(p+2)F(p+1)(-n, beta, f_1+m_1, ..., f_p+m_p; beta+1, f_1, ..., f_p; 1)`:
/// `n! * prod (f_i - beta)_{m_i} / [(beta+1)_n * prod (f_i)_{m_i}]`.
pub fn minton_value(n: usize, beta: &Rational, f: &[Rational], m: &[usize]) -> Result<Rational> {
    if f.len() != m.len() {
        return Err(Error::InvalidParameters(
            "Minton parameter lists have mismatched lengths".into(),
        ));
    }
    let total: usize = m.iter().sum();
    if total > n {
        return Err(Error::InvalidParameters(
            "Minton formula requires sum(m_i) <= n".into(),
        ));
    }
    let mut value = factorial(n);
    for (fi, &mi) in f.iter().zip(m) {
        value *= pochhammer(&(fi - beta), mi as i64).map_err(|_| Error::SingularMintonParameter)?;
        let d = pochhammer(fi, mi as i64).map_err(|_| Error::SingularMintonParameter)?;
        if d.is_zero() {
            return Err(Error::SingularMintonParameter);
        }
        value /= d;
    }
    let d = pochhammer(&(beta + Rational::one()), n as i64)
        .map_err(|_| Error::SingularMintonParameter)?;
    if d.is_zero() {
        return Err(Error::SingularMintonParameter);
    }
    Ok(value / d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn one() -> Rational {
        Rational::one()
    }

    #[test]
    fn pochhammer_base_cases() {
        assert_eq!(pochhammer(&rat(5), 0).unwrap(), one());
        assert_eq!(pochhammer(&rat(1), 4).unwrap(), rat(24));
        assert_eq!(pochhammer(&rat(2), -1).unwrap(), one());
        assert_eq!(pochhammer(&ratio(1, 2), 3).unwrap(), ratio(15, 8));
    }

    #[test]
    fn pochhammer_negative_pole() {
        // (1)_{-1} = 1/((0)_1) = 1/0
        assert!(matches!(pochhammer(&rat(1), -1), Err(Error::PochhammerPole)));
    }

    #[test]
    fn pfq_2f1_marjolein_walter_cases() {
        // 2F1(-n, m+1; 1; 1) scaled by (-1)^m m! is n! at m = n and 0 below.
        let x = one();
        let v = pfq_terminating_at(0, &[rat(-3), rat(4)], &[rat(1)], &x).unwrap();
        // (-1)^3 3! * v = 3!  =>  v = -1
        assert_eq!(v, rat(-1));
        let v = pfq_terminating_at(0, &[rat(-2), rat(2)], &[rat(1)], &x).unwrap();
        assert_eq!(v, Rational::zero());
    }

    #[test]
    fn pfq_3f2_even_diagonal() {
        // 3F2(-2k, a+1+k, b+1+k; a+1, b+1; 1) = (2k)!/((a+1)_k (b+1)_k), k=1, a=b=0.
        let v = pfq_terminating_at(0, &[rat(-2), rat(2), rat(2)], &[rat(1), rat(1)], &one())
            .unwrap();
        assert_eq!(v, rat(2));
    }

    #[test]
    fn pfq_rejects_singular_lower() {
        let r = pfq_terminating_at(0, &[rat(-3), rat(2)], &[rat(-1)], &one());
        assert!(matches!(r, Err(Error::SingularHypergeometricParameter)));
    }

    #[test]
    fn minton_matches_direct_sum() {
        // n=1, beta=1, f=[3], m=[1]: 3F2(-1,1,4;2,3;1)
        let v = minton_value(1, &rat(1), &[rat(3)], &[1]).unwrap();
        let direct =
            pfq_terminating_at(0, &[rat(-1), rat(1), rat(4)], &[rat(2), rat(3)], &one()).unwrap();
        assert_eq!(v, ratio(1, 3));
        assert_eq!(v, direct);

        // n=2, beta=1/2, f=[2], m=[2]
        let v = minton_value(2, &ratio(1, 2), &[rat(2)], &[2]).unwrap();
        let direct = pfq_terminating_at(
            0,
            &[rat(-2), ratio(1, 2), rat(4)],
            &[ratio(3, 2), rat(2)],
            &one(),
        )
        .unwrap();
        assert_eq!(v, ratio(1, 3));
        assert_eq!(v, direct);
    }

    #[test]
    fn minton_all_zero_orders() {
        // m = [0, ..., 0] collapses to n!/(beta+1)_n.
        let v = minton_value(4, &rat(2), &[rat(5), rat(7)], &[0, 0]).unwrap();
        let expect = factorial(4) / pochhammer(&rat(3), 4).unwrap();
        assert_eq!(v, expect);
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("1.5").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    proptest! {
        #[test]
        fn pochhammer_step_identity(zn in -20i64..20, zd in 1i64..8, k in 1i64..12) {
            let z = ratio(zn, zd);
            let lhs = pochhammer(&z, k).unwrap();
            let rhs = pochhammer(&z, k - 1).unwrap() * (&z + rat(k - 1));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pfq_argument_scaling_coherence(n in 0usize..6, tn in -5i64..6, td in 1i64..4) {
            // Scaling the polynomial argument by t then evaluating at x equals
            // the unscaled series at t*x.
            let t = ratio(tn, td);
            let upper = [rat(-(n as i64)), ratio(5, 2)];
            let lower = [ratio(7, 3)];
            let scaled_arg = Poly::x().scale(&t);
            let p_scaled = pfq_terminating(0, &upper, &lower, &scaled_arg).unwrap();
            let p_plain = pfq_terminating(0, &upper, &lower, &Poly::x()).unwrap();
            let x = ratio(4, 3);
            prop_assert_eq!(p_scaled.eval(&x), p_plain.eval(&(&t * &x)));
        }

        #[test]
        fn hypergeometric_formula_one(n in 1usize..7, m1 in 0usize..4, m2 in 0usize..4, f1 in 1i64..5, f2 in 1i64..5) {
            // prod (f_i)_{m_i} * (p+1)Fp(-n, f+m; f; 1) = (-1)^n n! if m=n, 0 if m<n.
            prop_assume!(m1 + m2 <= n);
            let f = [rat(f1), ratio(2 * f2 + 1, 2)];
            let upper = [rat(-(n as i64)), &f[0] + rat(m1 as i64), &f[1] + rat(m2 as i64)];
            let v = pfq_terminating_at(0, &upper, &f, &Rational::one()).unwrap();
            let scaled = pochhammer(&f[0], m1 as i64).unwrap()
                * pochhammer(&f[1], m2 as i64).unwrap()
                * v;
            let expect = if m1 + m2 == n {
                if n % 2 == 0 { factorial(n) } else { -factorial(n) }
            } else {
                Rational::zero()
            };
            prop_assert_eq!(scaled, expect);
        }

        #[test]
        fn minton_equals_direct_sum(n in 1usize..8, m1 in 0usize..3, bn in 1i64..5, f1 in 2i64..7) {
            prop_assume!(m1 <= n);
            let beta = ratio(bn, 2);
            let f = rat(f1);
            let v = minton_value(n, &beta, &[f.clone()], &[m1]).unwrap();
            let upper = [rat(-(n as i64)), beta.clone(), &f + rat(m1 as i64)];
            let lower = [&beta + Rational::one(), f];
            let direct = pfq_terminating_at(0, &upper, &lower, &Rational::one()).unwrap();
            prop_assert_eq!(v, direct);
        }
    }
}
