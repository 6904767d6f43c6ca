//! Type I multiple orthogonal polynomials on the step line.
//!
//! Two routes are implemented. The direct route solves the exact moment
//! system for the pair `(A_n, B_n)`. The Rodrigues route differentiates a
//! parameter-shifted weight `n-1` times inside a small symbolic algebra whose
//! elements are combinations `p(x) W(x;a,b,c) + q(x) W(x;a,b,c+1)` with
//! Laurent polynomial coefficients. Both routes must agree exactly.

use num_traits::{One, Zero};

use crate::exact::{rat, Rational};
use crate::moments::{moment_vector, ParamSet};
use crate::poly::{LaurentPoly, Poly};
use crate::{Error, Result};

/// The polynomial pair of the type I function
/// `Q_n = A_n W(x;a,b,c+d) + B_n W(x;a,b,c+1-d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Type1Pair {
    pub a_poly: Poly,
    pub b_poly: Poly,
}

/// Symbolic combination `w0 W(x;a,b,c) + w1 W(x;a,b,c+1)` over a fixed base.
///
/// Differentiation stays inside the algebra because the weight derivatives
/// expand over the same two functions with `1/x` factors:
/// `W'(c) = x^{-1} [-(x+c-a) W(c) + c(c+b-a)/(c+b+1) W(c+1)]` and
/// `W'(c+1) = x^{-1} [(c+b) W(c+1) - (c+b+1) W(c)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCombo {
    pub base: ParamSet,
    pub w0: LaurentPoly,
    pub w1: LaurentPoly,
}

impl WeightCombo {
    pub fn zero(base: &ParamSet) -> Self {
        WeightCombo {
            base: base.clone(),
            w0: LaurentPoly::zero(),
            w1: LaurentPoly::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.w0.is_zero() && self.w1.is_zero()
    }

    pub fn add(&self, rhs: &WeightCombo) -> WeightCombo {
        debug_assert_eq!(self.base, rhs.base);
        WeightCombo {
            base: self.base.clone(),
            w0: self.w0.add(&rhs.w0),
            w1: self.w1.add(&rhs.w1),
        }
    }

    pub fn scale(&self, s: &Rational) -> WeightCombo {
        WeightCombo {
            base: self.base.clone(),
            w0: self.w0.scale(s),
            w1: self.w1.scale(s),
        }
    }

    pub fn mul(&self, f: &LaurentPoly) -> WeightCombo {
        WeightCombo {
            base: self.base.clone(),
            w0: self.w0.mul(f),
            w1: self.w1.mul(f),
        }
    }

    /// Exact derivative, expanded back over the same basis.
    pub fn derivative(&self) -> WeightCombo {
        let (a, b, c) = (&self.base.a, &self.base.b, &self.base.c);
        // -(x+c-a)/x and the three scalar-over-x companions
        let d00 = LaurentPoly::term(0, -Rational::one())
            .add(&LaurentPoly::term(-1, a - c));
        let d10 = LaurentPoly::term(-1, -(c + b + rat(1)));
        let d01 = LaurentPoly::term(-1, c * (c + b - a) / (c + b + rat(1)));
        let d11 = LaurentPoly::term(-1, c + b);
        WeightCombo {
            base: self.base.clone(),
            w0: self.w0.derivative().add(&self.w0.mul(&d00)).add(&self.w1.mul(&d10)),
            w1: self.w1.derivative().add(&self.w0.mul(&d01)).add(&self.w1.mul(&d11)),
        }
    }
}

/// Representations of `W(x;a,b,c+s)` for `s = 0..=h` over the basis
/// `{W(c), W(c+1)}`, via the contiguous relation
/// `(c+s+1)(c+s+b-a+1) W(c+s+2)
///  = (c+s+b+2) [(x+2c+2s+b-a+1) W(c+s+1) - (c+s+b+1) W(c+s)]`.
fn basis_ladder(p: &ParamSet, h: usize) -> Vec<(LaurentPoly, LaurentPoly)> {
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let mut e = Vec::with_capacity(h + 1);
    e.push((LaurentPoly::one(), LaurentPoly::zero()));
    if h >= 1 {
        e.push((LaurentPoly::zero(), LaurentPoly::one()));
    }
    for s in 0..h.saturating_sub(1) {
        let s = rat(s as i64);
        let lin = LaurentPoly::term(1, Rational::one())
            .add(&LaurentPoly::term(0, rat(2) * (c + &s) + b - a + rat(1)));
        let scal = c + &s + b + rat(1);
        let div = (c + &s + rat(1)) * (c + &s + b - a + rat(1));
        let top = c + &s + b + rat(2);
        let (w0_prev, w1_prev) = &e[e.len() - 2];
        let (w0_cur, w1_cur) = &e[e.len() - 1];
        let factor = top / div;
        let next0 = w0_cur.mul(&lin).sub(&w0_prev.scale(&scal)).scale(&factor);
        let next1 = w1_cur.mul(&lin).sub(&w1_prev.scale(&scal)).scale(&factor);
        e.push((next0, next1));
    }
    e
}

/// `coeff * W(x;a,b,c+h)` expressed over the base `{W(c), W(c+1)}`.
pub fn embed(p: &ParamSet, h: usize, coeff: &LaurentPoly) -> WeightCombo {
    let ladder = basis_ladder(p, h);
    let (w0, w1) = &ladder[h];
    WeightCombo {
        base: p.clone(),
        w0: w0.mul(coeff),
        w1: w1.mul(coeff),
    }
}

/// `W(x; a+s, b+s, c+h)` over the base `{W(c), W(c+1)}`, combining the
/// parameter-raising identity
/// `W(x;a+1,b+1,c') = (c'+b+1)/((a+1)(b+1)) x W(x;a,b,c')`
/// with the ladder reduction in `c`.
pub fn shifted_weight(p: &ParamSet, s: usize, h: usize) -> WeightCombo {
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let mut factor = Rational::one();
    for k in 1..=s as i64 {
        factor *= (c + rat(h as i64) + b + rat(k)) / ((a + rat(k)) * (b + rat(k)));
    }
    embed(p, h, &LaurentPoly::term(s as i64, factor))
}

/// Type I pair from the Rodrigues formula
/// `Q_n^(d) = (-1)^(n-1)/(n-1)! D^(n-1) W(x; a+n-1, b+n-1, c+floor((n+d)/2))`.
pub fn rodrigues_type1(n: usize, d: u8, p: &ParamSet) -> Result<Type1Pair> {
    if n == 0 {
        return Err(Error::NonNormalIndex(0));
    }
    let s = n - 1;
    let h = (n + d as usize) / 2;
    let mut combo = shifted_weight(p, s, h);
    for _ in 0..s {
        combo = combo.derivative();
    }
    let sign = if s % 2 == 0 { rat(1) } else { rat(-1) };
    let combo = combo.scale(&(sign / crate::exact::factorial(s)));
    let (aq, bq) = if d == 0 {
        (combo.w0, combo.w1)
    } else {
        (combo.w1, combo.w0)
    };
    Ok(Type1Pair {
        a_poly: aq.into_poly()?,
        b_poly: bq.into_poly()?,
    })
}

/// Exact solution of a dense linear system by Gaussian elimination with a
/// nonzero pivot search.
pub fn solve_linear(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::NonNormalIndex(n))?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[col][col];
            for k in col..n {
                let delta = &f * &m[col][k];
                m[r][k] -= delta;
            }
            let delta = &f * &rhs[col];
            rhs[r] -= delta;
        }
    }
    let mut x = vec![Rational::zero(); n];
    for row in (0..n).rev() {
        let mut acc = rhs[row].clone();
        for k in row + 1..n {
            acc -= &m[row][k] * &x[k];
        }
        x[row] = acc / &m[row][row];
    }
    Ok(x)
}

fn degree_split(n: usize) -> (usize, usize) {
    // number of coefficients of A_n and B_n: deg A_n <= floor((n-1)/2),
    // deg B_n <= floor(n/2) - 1
    let na = (n - 1) / 2 + 1;
    let nb = n - na;
    (na, nb)
}

/// Type I pair from the moment linear system: `integral x^k Q_n dx` must be
/// `0` for `k < n-1` and `1` at `k = n-1`.
pub fn type1_solve(n: usize, d: u8, p: &ParamSet) -> Result<Type1Pair> {
    if n == 0 {
        return Err(Error::NonNormalIndex(0));
    }
    let (na, nb) = degree_split(n);
    let m0 = moment_vector(p, d, n + na)?;
    let m1 = moment_vector(p, 1 - d, n + nb.max(1))?;
    let mut mat = Vec::with_capacity(n);
    let mut rhs = vec![Rational::zero(); n];
    rhs[n - 1] = Rational::one();
    for k in 0..n {
        let mut row = Vec::with_capacity(n);
        for i in 0..na {
            row.push(m0[i + k].clone());
        }
        for j in 0..nb {
            row.push(m1[j + k].clone());
        }
        mat.push(row);
    }
    let x = solve_linear(mat, rhs)?;
    Ok(Type1Pair {
        a_poly: Poly::from_coeffs(x[..na].to_vec()),
        b_poly: Poly::from_coeffs(x[na..].to_vec()),
    })
}

/// Residual of the second order weight equation
/// `x^2 W'' + (x-(a+b-1)) x W' + (ab-(c+t+b-1)x) W = 0` applied inside the
/// algebra to `W(c+t)`, `t` in `{0, 1}`.
pub fn weight_ode_residual(p: &ParamSet, t: u8) -> WeightCombo {
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let w = if t == 0 {
        WeightCombo {
            base: p.clone(),
            w0: LaurentPoly::one(),
            w1: LaurentPoly::zero(),
        }
    } else {
        WeightCombo {
            base: p.clone(),
            w0: LaurentPoly::zero(),
            w1: LaurentPoly::one(),
        }
    };
    let d1 = w.derivative();
    let d2 = d1.derivative();
    let x2 = LaurentPoly::term(2, Rational::one());
    let xlin = LaurentPoly::term(2, Rational::one())
        .add(&LaurentPoly::term(1, -(a + b - rat(1))));
    let last = LaurentPoly::term(0, a * b)
        .add(&LaurentPoly::term(1, -(c + rat(t as i64) + b - rat(1))));
    d2.mul(&x2).add(&d1.mul(&xlin)).add(&w.mul(&last))
}

/// Residual of the index-raising identity
/// `D Q_n^(1-d)(x; a+1, b+1, c+d) + n Q_{n+1}^(d)(x; a, b, c) = 0`,
/// assembled in the `(a, b, c)` algebra from independently solved pairs.
pub fn type1_derivative_shift_residual(n: usize, d: u8, p: &ParamSet) -> Result<WeightCombo> {
    let shifted = ParamSet::new(&p.a + rat(1), &p.b + rat(1), &p.c + rat(d as i64))?;
    let up = type1_solve(n, 1 - d, &shifted)?;
    // Q_n^(1-d) over the shifted base pairs A with W(a+1,b+1,c+1) and B with
    // W(a+1,b+1,c+2d); pull both down to the (a,b,c) base.
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let ab1 = (a + rat(1)) * (b + rat(1));
    let coeff_a = LaurentPoly::from(&up.a_poly)
        .mul(&LaurentPoly::term(1, (c + b + rat(2)) / &ab1));
    let coeff_b = LaurentPoly::from(&up.b_poly)
        .mul(&LaurentPoly::term(1, (c + b + rat(1 + 2 * d as i64)) / &ab1));
    let q_up = embed(p, 1, &coeff_a).add(&embed(p, 2 * d as usize, &coeff_b));
    let lower = type1_solve(n + 1, d, p)?;
    let (w0, w1) = if d == 0 {
        (&lower.a_poly, &lower.b_poly)
    } else {
        (&lower.b_poly, &lower.a_poly)
    };
    let q_low = WeightCombo {
        base: p.clone(),
        w0: LaurentPoly::from(w0),
        w1: LaurentPoly::from(w1),
    };
    Ok(q_up.derivative().add(&q_low.scale(&rat(n as i64))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::type2::weighted_integral;

    fn grid() -> Vec<ParamSet> {
        vec![
            ParamSet::from_i64(0, 0, 1).unwrap(),
            ParamSet::new(ratio(1, 2), ratio(1, 3), rat(2)).unwrap(),
            ParamSet::new(rat(2), ratio(3, 2), rat(5)).unwrap(),
            ParamSet::new(ratio(-1, 3), ratio(-2, 3), ratio(2, 3)).unwrap(),
        ]
    }

    #[test]
    fn solver_reference_case() {
        // n=2, a=b=0, c=1, d=0: Q_2 = 6 W(c) - 6 W(c+1)
        let p = ParamSet::from_i64(0, 0, 1).unwrap();
        let pair = type1_solve(2, 0, &p).unwrap();
        assert_eq!(pair.a_poly, Poly::constant(rat(6)));
        assert_eq!(pair.b_poly, Poly::constant(rat(-6)));
    }

    #[test]
    fn rodrigues_matches_solver() {
        for p in grid() {
            for d in 0..=1u8 {
                for n in 1..=8 {
                    let direct = type1_solve(n, d, &p).unwrap();
                    let rod = rodrigues_type1(n, d, &p).unwrap();
                    assert_eq!(direct, rod, "n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn degrees_are_tight() {
        let p = ParamSet::from_i64(0, 0, 1).unwrap();
        for d in 0..=1u8 {
            for m in 1..=4usize {
                let even = type1_solve(2 * m, d, &p).unwrap();
                assert_eq!(even.a_poly.degree(), Some(m - 1));
                assert_eq!(even.b_poly.degree(), Some(m - 1));
                let odd = type1_solve(2 * m + 1, d, &p).unwrap();
                assert_eq!(odd.a_poly.degree(), Some(m));
                assert_eq!(odd.b_poly.degree(), Some(m - 1));
            }
        }
    }

    #[test]
    fn orthogonality_of_solved_pairs() {
        for p in grid() {
            for d in 0..=1u8 {
                for n in 1..=7usize {
                    let pair = type1_solve(n, d, &p).unwrap();
                    for k in 0..=n - 1 {
                        let v = weighted_integral(&pair.a_poly, &p, d, k).unwrap()
                            + weighted_integral(&pair.b_poly, &p, 1 - d, k).unwrap();
                        let expected = if k == n - 1 { rat(1) } else { rat(0) };
                        assert_eq!(v, expected, "n={n} d={d} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn weight_ode_annihilates() {
        for p in grid() {
            for t in 0..=1u8 {
                assert!(weight_ode_residual(&p, t).is_zero());
            }
        }
    }

    #[test]
    fn derivative_shift_residual_vanishes() {
        for p in grid() {
            for d in 0..=1u8 {
                for n in 1..=6 {
                    let r = type1_derivative_shift_residual(n, d, &p).unwrap();
                    assert!(r.is_zero(), "n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn ladder_is_consistent_with_moments() {
        // the ladder rewrites W(c+2) over {W(c), W(c+1)}; integrating x^k
        // against both sides must agree with the moments of a c+2 parameter
        // set, which exists whenever (a, b, c+1) is admissible
        let p = ParamSet::from_i64(0, 0, 1).unwrap();
        let up = p.with_c(&p.c + rat(1)).unwrap();
        let ladder = basis_ladder(&p, 2);
        let (w0, w1) = &ladder[2];
        let p0 = w0.into_poly().unwrap();
        let p1 = w1.into_poly().unwrap();
        for k in 0..8 {
            let lhs = crate::moments::moment(&up, 1, k).unwrap();
            let rhs = weighted_integral(&p0, &p, 0, k).unwrap()
                + weighted_integral(&p1, &p, 1, k).unwrap();
            assert_eq!(lhs, rhs, "k={k}");
        }
    }
}
