//! Type II multiple orthogonal polynomials on the step line.
//!
//! Two independent constructions are provided: the explicit coefficient
//! formula and the third order recurrence. They must agree exactly, which the
//! tests exploit. The module also carries the normalisation constants, the
//! third order differential equation, the derivative shift, and the Bessel
//! limit reached by letting `c` grow.

use num_traits::{One, Zero};

use crate::exact::{binomial, pochhammer, rat, Rational};
use crate::moments::{moment_vector, ParamSet};
use crate::poly::Poly;
use crate::{Error, Result};

/// Coefficient of `x^j` in the monic polynomial `P_n^(d)(x; a, b, c)`.
pub fn explicit_coeff(n: usize, j: usize, d: u8, p: &ParamSet) -> Result<Rational> {
    debug_assert!(d <= 1 && j <= n);
    let k = (n - j) as i64;
    let half = rat(((n + d as usize) / 2) as i64);
    let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
    let num = pochhammer(&(&p.a + rat(1 + j as i64)), k)? * pochhammer(&(&p.b + rat(1 + j as i64)), k)?;
    let den = pochhammer(&(&p.c + &p.b + rat(1 + j as i64) + half), k)?;
    Ok(sign * binomial(n, j) * num / den)
}

/// `P_n^(d)(x; a, b, c)` from the explicit coefficient formula.
pub fn explicit_poly(n: usize, d: u8, p: &ParamSet) -> Result<Poly> {
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        coeffs.push(explicit_coeff(n, j, d, p)?);
    }
    Ok(Poly::from_coeffs(coeffs))
}

fn cube(n: i64, a: &Rational, b: &Rational) -> Rational {
    rat(n) * (a + rat(n)) * (b + rat(n))
}

/// `beta_n^(d)(a, b, c)`.
pub fn beta(n: usize, d: u8, p: &ParamSet) -> Rational {
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let n_i = n as i64;
    // Reduce to the aligned case n = 2m + e; the cross-parity coefficient has
    // denominator offsets (e+2, e) instead of (2e+1, 2e).
    let e = (n % 2) as i64;
    let m = rat((n_i - e) / 2);
    let (off_hi, off_lo) = if e == d as i64 {
        (rat(2 * e + 1), rat(2 * e))
    } else {
        (rat(e + 2), rat(e))
    };
    let base = c + b + rat(3) * m;
    let mut v = cube(n_i + 1, a, b) / (&base + off_hi);
    if n > 0 {
        // the n = 0 term vanishes; skipping it avoids 0/0 when c + b = 0
        v -= cube(n_i, a, b) / (&base + off_lo);
    }
    v
}

fn alpha_aligned(m: i64, e: i64, a: &Rational, b: &Rational, c: &Rational) -> Rational {
    let n = 2 * m + e;
    let big = c + b + rat(3 * m + 2 * e);
    let lead = cube(n, a, b) / &big;
    let mut inner = cube(n + 1, a, b) / (rat(2) * (&big + rat(1))) - cube(n, a, b) / &big;
    if n > 1 {
        // vanishing n = 1 term, skipped to dodge 0/0 at the domain edge
        inner += cube(n - 1, a, b) / (rat(2) * (&big - rat(1)));
    }
    lead * inner
}

/// `alpha_n^(d)(a, b, c)`; zero for `n = 0`.
pub fn alpha(n: usize, d: u8, p: &ParamSet) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    let e = (n % 2) as i64;
    let m = (n as i64 - e) / 2;
    if e == d as i64 {
        alpha_aligned(m, e, &p.a, &p.b, &p.c)
    } else {
        // alpha_{2m+e}^(1-e)(a, b, c) = alpha_{2m+e}^(e)(a, b, c - e)
        alpha_aligned(m, e, &p.a, &p.b, &(&p.c - rat(e)))
    }
}

fn pochhammer3(z: &Rational) -> Rational {
    z * (z + rat(1)) * (z + rat(2))
}

/// `gamma_n^(d)(a, b, c)`; zero for `n = 0`, strictly positive otherwise.
pub fn gamma(n: usize, d: u8, p: &ParamSet) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let n_i = n as i64;
    let e = (n % 2) as i64;
    let m = rat((n_i - e) / 2);
    // (n)_2 (a+n)_2 (b+n)_2 regrouped as two cubic products
    let num = cube(n_i, a, b) * cube(n_i + 1, a, b);
    if e == d as i64 {
        let extra =
            (c + &m + rat(e)) * (c + b - a + &m + rat(e)) * (c + b + &m + rat(e));
        let den = pochhammer3(&(c + b + rat(3) * &m + rat(2 * e - 1)))
            * pochhammer3(&(c + b + rat(3) * &m + rat(2 * e)));
        num * extra / den
    } else {
        num / pochhammer3(&(c + b + rat(3) * &m + rat(e)))
    }
}

/// `P_0 .. P_{n_max}` generated by the third order recurrence
/// `P_{n+1} = (x - beta_n) P_n - alpha_n P_{n-1} - gamma_{n-1} P_{n-2}`.
pub fn generate_by_recurrence(n_max: usize, d: u8, p: &ParamSet) -> Result<Vec<Poly>> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Poly::one());
    let x = Poly::x();
    for n in 0..n_max {
        let mut next = &(&x - &Poly::constant(beta(n, d, p))) * &out[n];
        if n >= 1 {
            next = &next - &out[n - 1].scale(&alpha(n, d, p));
        }
        if n >= 2 {
            next = &next - &out[n - 2].scale(&gamma(n - 1, d, p));
        }
        out.push(next);
    }
    Ok(out)
}

/// Normalisation `N_n^[d]`: the value of the first nonzero orthogonality
/// integral at degree `n`. Negative exactly when `n` is odd and `d = 0`.
pub fn normalization(n: usize, d: u8, p: &ParamSet) -> Result<Rational> {
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let k = (n / 2) as i64;
    let n_i = n as i64;
    let fact = crate::exact::factorial(n);
    let ab = pochhammer(&(a + rat(1)), n_i)? * pochhammer(&(b + rat(1)), n_i)?;
    let plain = n % 2 == d as usize; // single-denominator branch
    if plain {
        // (c+b+1)_{3k} for even n, (c+b+1)_{3k+2} for odd n
        let len = if n % 2 == 0 { 3 * k } else { 3 * k + 2 };
        Ok(fact * ab / pochhammer(&(c + b + rat(1)), len)?)
    } else {
        let extras = pochhammer(&(c + b - a + rat(1)), k)?
            * pochhammer(&(c + rat(1)), k)?
            * pochhammer(&(c + b + rat(1)), k)?;
        let len = if n % 2 == 0 { 3 * k } else { 3 * k + 1 };
        let den = pochhammer(&(c + b + rat(1)), len)? * pochhammer(&(c + b + rat(2)), len)?;
        let sign = if n % 2 == 1 { rat(-1) } else { rat(1) };
        Ok(sign * fact * ab * extras / den)
    }
}

/// Exact value of `integral x^k q(x) W(x; a, b, c+t) dx` using the closed-form
/// moments.
pub fn weighted_integral(q: &Poly, p: &ParamSet, t: u8, k: usize) -> Result<Rational> {
    let deg = match q.degree() {
        Some(d) => d,
        None => return Ok(Rational::zero()),
    };
    let m = moment_vector(p, t, deg + k + 1)?;
    let mut acc = Rational::zero();
    for j in 0..=deg {
        let cj = q.coeff(j);
        if !cj.is_zero() {
            acc += cj * &m[j + k];
        }
    }
    Ok(acc)
}

/// Verifies every orthogonality condition for `P_n^(d)` exactly, including
/// the value of the first nonzero integral against `normalization`.
pub fn orthogonality_check(n: usize, d: u8, p: &ParamSet) -> Result<()> {
    let poly = explicit_poly(n, d, p)?;
    // weight index 0 is W(c+d): zero for n >= 2k+1, equals N_n at n = 2k
    for k in 0..=n / 2 {
        let v = weighted_integral(&poly, p, d, k)?;
        let expected = if n == 2 * k {
            normalization(n, d, p)?
        } else {
            Rational::zero()
        };
        if v != expected {
            return Err(Error::NonNormalIndex(n));
        }
    }
    if n == 0 {
        return Ok(());
    }
    // weight index 1 is W(c+1-d): zero for n >= 2k+2, equals N_n at n = 2k+1
    for k in 0..=(n - 1) / 2 {
        let v = weighted_integral(&poly, p, 1 - d, k)?;
        let expected = if n == 2 * k + 1 {
            normalization(n, d, p)?
        } else {
            Rational::zero()
        };
        if v != expected {
            return Err(Error::NonNormalIndex(n));
        }
    }
    Ok(())
}

/// `D P_{n+1}^(d)(x; a, b, c) - (n+1) P_n^(1-d)(x; a+1, b+1, c+d)`, which the
/// Hahn property says is identically zero.
pub fn derivative_shift_residual(n: usize, d: u8, p: &ParamSet) -> Result<Poly> {
    let lhs = explicit_poly(n + 1, d, p)?.derivative();
    let shifted = ParamSet::new(
        &p.a + rat(1),
        &p.b + rat(1),
        &p.c + rat(d as i64),
    )?;
    let rhs = explicit_poly(n, 1 - d, &shifted)?.scale(&rat(n as i64 + 1));
    Ok(&lhs - &rhs)
}

/// Residual of the third order differential equation
/// `x^2 P''' - x phi P'' + psi P' + n eps P` with `phi = x - (a+b+3)`,
/// `psi = (floor((n+1-d)/2) - (c+b+2)) x + (a+1)(b+1)` and
/// `eps = c+b+1 + floor((n+d)/2)`.
pub fn ode_residual(n: usize, d: u8, p: &ParamSet) -> Result<Poly> {
    let poly = explicit_poly(n, d, p)?;
    let d1 = poly.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let phi = &Poly::x() - &Poly::constant(a + b + rat(3));
    let psi_slope = rat(((n + 1 - d as usize) / 2) as i64) - (c + b + rat(2));
    let psi = &Poly::x().scale(&psi_slope) + &Poly::constant((a + rat(1)) * (b + rat(1)));
    let eps = c + b + rat(1) + rat(((n + d as usize) / 2) as i64);
    let term1 = &Poly::x().mul_xpow(1) * &d3;
    let term2 = &(&Poly::x() * &phi) * &d2;
    let term3 = &psi * &d1;
    let term4 = poly.scale(&(rat(n as i64) * eps));
    Ok(&(&(&term1 - &term2) + &term3) + &term4)
}

/// Monic Bessel-type polynomial
/// `R_n(x; a, b) = (-1)^n (a+1)_n (b+1)_n 1F2(-n; a+1, b+1; x)`.
pub fn bessel_poly(n: usize, a: &Rational, b: &Rational) -> Result<Poly> {
    let n_i = n as i64;
    let lead = pochhammer(&(a + rat(1)), n_i)? * pochhammer(&(b + rat(1)), n_i)?;
    let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut term = &sign * &lead; // k = 0 term
    coeffs.push(term.clone());
    for k in 0..n_i {
        // ratio of consecutive 1F2 terms: (-n+k) / ((a+1+k)(b+1+k)(k+1))
        term = term * rat(k - n_i) / ((a + rat(1 + k)) * (b + rat(1 + k)) * rat(k + 1));
        coeffs.push(term.clone());
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Exact coefficientwise gap between the rescaled polynomial
/// `c^n P_n^(d)(x/c; a, b, c)` and its Bessel limit `R_n(x; a, b)`.
/// Shrinks like `1/c` as `c` grows.
pub fn confluence_gap(n: usize, d: u8, p: &ParamSet) -> Result<Rational> {
    let c = &p.c;
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut cpow = Rational::one();
    for j in (0..=n).rev() {
        coeffs.push((j, explicit_coeff(n, j, d, p)? * &cpow));
        cpow *= c;
    }
    let mut rescaled = vec![Rational::zero(); n + 1];
    for (j, v) in coeffs {
        rescaled[j] = v;
    }
    let rescaled = Poly::from_coeffs(rescaled);
    let bessel = bessel_poly(n, &p.a, &p.b)?;
    Ok((&rescaled - &bessel).max_abs_coeff())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    fn reference() -> ParamSet {
        ParamSet::from_i64(0, 0, 1).unwrap()
    }

    fn grid() -> Vec<ParamSet> {
        vec![
            ParamSet::from_i64(0, 0, 1).unwrap(),
            ParamSet::new(ratio(1, 2), ratio(1, 3), rat(2)).unwrap(),
            ParamSet::new(rat(2), ratio(3, 2), rat(5)).unwrap(),
            ParamSet::new(ratio(-1, 3), ratio(-2, 3), ratio(2, 3)).unwrap(),
        ]
    }

    #[test]
    fn reference_recurrence_coefficients() {
        let p = reference();
        assert_eq!(beta(0, 0, &p), ratio(1, 2));
        assert_eq!(alpha(1, 0, &p), ratio(5, 12));
        assert_eq!(gamma(1, 0, &p), ratio(1, 3));
        assert_eq!(gamma(0, 0, &p), rat(0));
    }

    #[test]
    fn explicit_matches_recurrence() {
        for p in grid() {
            for d in 0..=1u8 {
                let seq = generate_by_recurrence(12, d, &p).unwrap();
                for (n, q) in seq.iter().enumerate() {
                    assert_eq!(*q, explicit_poly(n, d, &p).unwrap(), "n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn polynomials_are_monic() {
        for p in grid() {
            for d in 0..=1u8 {
                for n in 0..10 {
                    let q = explicit_poly(n, d, &p).unwrap();
                    assert_eq!(q.degree(), Some(n));
                    assert_eq!(*q.leading().unwrap(), rat(1));
                }
            }
        }
    }

    #[test]
    fn orthogonality_exact() {
        for p in grid() {
            for d in 0..=1u8 {
                for n in 0..=10 {
                    orthogonality_check(n, d, &p).unwrap();
                }
            }
        }
    }

    #[test]
    fn reference_normalization() {
        let p = reference();
        assert_eq!(normalization(2, 0, &p).unwrap(), ratio(1, 3));
        // odd n with d = 0 is the only negative case
        assert!(normalization(3, 0, &p).unwrap() < rat(0));
        assert!(normalization(3, 1, &p).unwrap() > rat(0));
    }

    #[test]
    fn gamma_positive() {
        for p in grid() {
            for d in 0..=1u8 {
                for n in 1..=20 {
                    assert!(gamma(n, d, &p) > rat(0), "n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn derivative_shift_vanishes() {
        for p in grid() {
            for d in 0..=1u8 {
                for n in 0..8 {
                    assert!(derivative_shift_residual(n, d, &p).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn ode_residual_vanishes() {
        for p in grid() {
            for d in 0..=1u8 {
                for n in 0..10 {
                    assert!(ode_residual(n, d, &p).unwrap().is_zero(), "n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn bessel_basics() {
        // R_1(x) = x - (a+1)(b+1)
        let r1 = bessel_poly(1, &rat(0), &rat(0)).unwrap();
        assert_eq!(r1, &Poly::x() - &Poly::one());
        let a = ratio(1, 2);
        let b = ratio(1, 3);
        for n in 0..8 {
            let rn = bessel_poly(n, &a, &b).unwrap();
            assert_eq!(rn.degree(), Some(n));
            assert_eq!(*rn.leading().unwrap(), rat(1));
            // D R_{n+1}(a, b) = (n+1) R_n(a+1, b+1)
            let lhs = bessel_poly(n + 1, &a, &b).unwrap().derivative();
            let rhs = bessel_poly(n, &(&a + rat(1)), &(&b + rat(1)))
                .unwrap()
                .scale(&rat(n as i64 + 1));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn confluence_gap_shrinks() {
        let a = ratio(1, 2);
        let b = ratio(1, 3);
        for d in 0..=1u8 {
            for n in 1..=8usize {
                let gap_at = |c: i64| {
                    let p = ParamSet::new(a.clone(), b.clone(), rat(c)).unwrap();
                    let g = confluence_gap(n, d, &p).unwrap();
                    num_traits::ToPrimitive::to_f64(&g).unwrap()
                };
                // O(1/c): doubling c halves the gap once c is large
                let ratio = gap_at(1000) / gap_at(2000);
                assert!((1.8..2.2).contains(&ratio), "n={n} d={d} ratio={ratio}");
            }
        }
    }

    proptest! {
        #[test]
        fn recurrence_coefficients_consistent_with_tau(
            n in 1usize..8, d in 0u8..2, ai in 0i64..4, bi in 0i64..4, ci in 2i64..6
        ) {
            // beta_n = tau_{n,n-1} - tau_{n+1,n} and the alpha identity, both
            // straight from matching coefficients in the recurrence.
            let p = ParamSet::new(
                ratio(ai, 3), ratio(bi, 3), ratio(3 * ci + ai - bi, 3)
            ).unwrap();
            let t_n1 = explicit_coeff(n, n - 1, d, &p).unwrap();
            let t_n2 = if n >= 2 {
                explicit_coeff(n, n - 2, d, &p).unwrap()
            } else {
                rat(0)
            };
            let t_p1 = explicit_coeff(n + 1, n, d, &p).unwrap();
            let t_p2 = explicit_coeff(n + 1, n - 1, d, &p).unwrap();
            prop_assert_eq!(beta(n, d, &p), &t_n1 - &t_p1);
            let alpha_expected = &t_n2 - &t_p2 - &t_n1 * &t_n1 + &t_n1 * &t_p1;
            prop_assert_eq!(alpha(n, d, &p), alpha_expected);
        }
    }
}
