//! Zeros of the type II polynomials and their spectral interpretation.
//!
//! The zeros are located by interlacing-guided bisection on a rescaled
//! forward recurrence, then cross-checked against the eigenvalues of the
//! banded lower Hessenberg matrix built from the recurrence coefficients. A
//! small shifted QR iteration is included rather than pulling in a general
//! eigenvalue package, since the matrices here are Hessenberg already and
//! all eigenvalues are real and simple.

use num_traits::ToPrimitive;

use crate::moments::ParamSet;
use crate::type2::{alpha, beta, gamma};
use crate::{Error, Result};

/// Constants of the asymptotic largest-zero bound `x_max < M n + o(n)`.
/// They do not depend on `(a, b, c, d)`.
#[derive(Clone, Copy, Debug)]
pub struct BoundConstants {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub tau: f64,
    pub m: f64,
}

/// `alpha = 52/81`, `beta = 14/9`, `gamma = 8/27`,
/// `delta = gamma^2 - alpha^3/27`, `tau = cbrt(gamma + sqrt(delta)) +
/// cbrt(gamma - sqrt(delta))` and `M = 3/2 tau + beta + alpha/(2 tau)`.
pub fn bound_constants() -> Result<BoundConstants> {
    let alpha: f64 = 52.0 / 81.0;
    let beta = 14.0 / 9.0;
    let gamma = 8.0 / 27.0;
    let delta = gamma * gamma - alpha.powi(3) / 27.0;
    if delta <= 0.0 {
        return Err(Error::BoundInapplicable);
    }
    let sq = delta.sqrt();
    let tau = (gamma + sq).cbrt() + (gamma - sq).cbrt();
    let m = 1.5 * tau + beta + alpha / (2.0 * tau);
    Ok(BoundConstants {
        alpha,
        beta,
        gamma,
        delta,
        tau,
        m,
    })
}

/// Recurrence coefficients `beta_0..beta_{n-1}`, `alpha_1..alpha_{n-1}` and
/// `gamma_1..gamma_{n-2}` as floats.
pub struct RecurrenceTable {
    pub beta: Vec<f64>,
    pub alpha: Vec<f64>,
    pub gamma: Vec<f64>,
}

pub fn recurrence_table(n: usize, d: u8, p: &ParamSet) -> RecurrenceTable {
    let to = |r: crate::Rational| r.to_f64().unwrap();
    RecurrenceTable {
        beta: (0..n).map(|k| to(beta(k, d, p))).collect(),
        alpha: (0..n).map(|k| to(alpha(k, d, p))).collect(),
        gamma: (0..n).map(|k| to(gamma(k, d, p))).collect(),
    }
}

/// `P_n(x)` up to a positive rescaling factor; the sign is exact in floating
/// point. The rescaling keeps the forward recurrence away from overflow for
/// large `n`.
pub fn eval_scaled(table: &RecurrenceTable, n: usize, x: f64) -> f64 {
    let mut p2 = 0.0f64; // P_{k-2}
    let mut p1 = 0.0f64; // P_{k-1}
    let mut p0 = 1.0f64; // P_k
    for k in 0..n {
        let mut next = (x - table.beta[k]) * p0;
        if k >= 1 {
            next -= table.alpha[k] * p1;
        }
        if k >= 2 {
            next -= table.gamma[k - 1] * p2;
        }
        p2 = p1;
        p1 = p0;
        p0 = next;
        let mag = p0.abs().max(p1.abs()).max(p2.abs());
        if mag > 1e300 {
            p0 /= mag;
            p1 /= mag;
            p2 /= mag;
        }
    }
    p0
}

/// All `n` zeros, ascending, found degree by degree: the zeros of `P_k`
/// bracket those of `P_{k+1}`, so each new zero is isolated by bisection
/// inside one interlacing interval.
pub fn zeros(n: usize, d: u8, p: &ParamSet, tol_rel: f64) -> Result<Vec<f64>> {
    Ok(zeros_ladder(n, d, p, tol_rel)?.pop().unwrap_or_default())
}

/// Zero sets of `P_1 .. P_n`, computed in one inductive sweep.
pub fn zeros_ladder(n: usize, d: u8, p: &ParamSet, tol_rel: f64) -> Result<Vec<Vec<f64>>> {
    let table = recurrence_table(n, d, p);
    let m_bound = bound_constants()?.m;
    let mut ladder: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut current: Vec<f64> = Vec::new();
    for k in 1..=n {
        let mut edges = Vec::with_capacity(k + 1);
        edges.push(0.0f64);
        edges.extend(current.iter().copied());
        // open the last bracket until the monic tail is reached
        let mut hi = (m_bound * k as f64 + 10.0).max(edges[edges.len() - 1] * 1.25);
        while eval_scaled(&table, k, hi) <= 0.0 {
            hi *= 2.0;
            if !hi.is_finite() {
                return Err(Error::InterlacingViolated { n: k, root: k - 1 });
            }
        }
        edges.push(hi);
        let mut next = Vec::with_capacity(k);
        for r in 0..k {
            let (mut lo, mut hi) = (edges[r], edges[r + 1]);
            let flo = eval_scaled(&table, k, lo);
            let fhi = eval_scaled(&table, k, hi);
            if flo == 0.0 || fhi == 0.0 || flo.signum() == fhi.signum() {
                return Err(Error::InterlacingViolated { n: k, root: r });
            }
            let target = flo.signum();
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if hi - lo <= tol_rel * hi.max(1.0) {
                    break;
                }
                let fm = eval_scaled(&table, k, mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if fm.signum() == target {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            next.push(0.5 * (lo + hi));
        }
        current = next;
        ladder.push(current.clone());
    }
    Ok(ladder)
}

/// Banded lower Hessenberg matrix whose characteristic polynomial is `P_n`:
/// diagonal `beta_k`, first subdiagonal `alpha_k`, second subdiagonal
/// `gamma_{k-1}`, unit superdiagonal.
pub fn hessenberg(n: usize, d: u8, p: &ParamSet) -> Vec<Vec<f64>> {
    let table = recurrence_table(n, d, p);
    let mut h = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        h[i][i] = table.beta[i];
        if i + 1 < n {
            h[i][i + 1] = 1.0;
        }
        if i >= 1 {
            h[i][i - 1] = table.alpha[i];
        }
        if i >= 2 {
            h[i][i - 2] = table.gamma[i - 1];
        }
    }
    h
}

fn givens(a: f64, b: f64) -> (f64, f64) {
    if b == 0.0 {
        (1.0, 0.0)
    } else {
        let r = a.hypot(b);
        (a / r, b / r)
    }
}

/// Eigenvalues of an upper Hessenberg matrix with real spectrum, by shifted
/// QR with Givens rotations and bottom deflation.
pub fn hessenberg_eigenvalues(mut h: Vec<Vec<f64>>) -> Result<Vec<f64>> {
    let n = h.len();
    let mut eig = Vec::with_capacity(n);
    let mut hi = n;
    let mut iters = 0usize;
    while hi > 0 {
        if hi == 1 {
            eig.push(h[0][0]);
            break;
        }
        let s = h[hi - 2][hi - 2].abs() + h[hi - 1][hi - 1].abs();
        if h[hi - 1][hi - 2].abs() <= f64::EPSILON * s.max(1e-300) {
            eig.push(h[hi - 1][hi - 1]);
            hi -= 1;
            iters = 0;
            continue;
        }
        if hi == 2 {
            // solve the remaining 2x2 block directly
            let (a, b) = (h[0][0], h[0][1]);
            let (c, dd) = (h[1][0], h[1][1]);
            let half = 0.5 * (a - dd);
            let disc = half * half + b * c;
            if disc < 0.0 {
                return Err(Error::Domain(
                    "complex eigenvalue pair in a matrix expected to have real spectrum".into(),
                ));
            }
            let mid = 0.5 * (a + dd);
            eig.push(mid + disc.sqrt());
            eig.push(mid - disc.sqrt());
            break;
        }
        iters += 1;
        if iters > 300 {
            return Err(Error::Domain("QR iteration did not converge".into()));
        }
        // Wilkinson-style shift from the trailing 2x2 of the active block
        let (a, b) = (h[hi - 2][hi - 2], h[hi - 2][hi - 1]);
        let (c, dd) = (h[hi - 1][hi - 2], h[hi - 1][hi - 1]);
        let half = 0.5 * (a - dd);
        let disc = half * half + b * c;
        let shift = if disc >= 0.0 {
            let mid = 0.5 * (a + dd);
            let r = disc.sqrt();
            if (mid + r - dd).abs() < (mid - r - dd).abs() {
                mid + r
            } else {
                mid - r
            }
        } else {
            0.5 * (a + dd)
        };
        for i in 0..hi {
            h[i][i] -= shift;
        }
        let mut rots = Vec::with_capacity(hi - 1);
        for i in 0..hi - 1 {
            let (cs, sn) = givens(h[i][i], h[i + 1][i]);
            for j in i..hi {
                let (x, y) = (h[i][j], h[i + 1][j]);
                h[i][j] = cs * x + sn * y;
                h[i + 1][j] = -sn * x + cs * y;
            }
            rots.push((cs, sn));
        }
        for (i, (cs, sn)) in rots.iter().enumerate() {
            for row in h.iter_mut().take((i + 2).min(hi)) {
                let (x, y) = (row[i], row[i + 1]);
                row[i] = cs * x + sn * y;
                row[i + 1] = -sn * x + cs * y;
            }
        }
        for i in 0..hi {
            h[i][i] += shift;
        }
    }
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// Ratios of the five recurrence coefficient families to their leading
/// asymptotics at index `2m+d` and `2m+(1-d)`:
/// `beta_{2m+d}^(d) / (28m/9)`, `beta_{2m+(1-d)}^(d) / (20m/9)`,
/// `alpha / (208 m^2/81)`, `gamma_{2m+d}^(d) / (64 m^3/729)` and
/// `gamma_{2m+(1-d)}^(d) / (64 m^3/27)`.
pub fn asymptotic_ratios(m: usize, d: u8, p: &ParamSet) -> [f64; 5] {
    let to = |r: crate::Rational| r.to_f64().unwrap();
    let mf = m as f64;
    let aligned = 2 * m + d as usize;
    let crossed = 2 * m + 1 - d as usize;
    [
        to(beta(aligned, d, p)) / (28.0 / 9.0 * mf),
        to(beta(crossed, d, p)) / (20.0 / 9.0 * mf),
        to(alpha(aligned, d, p)) / (208.0 / 81.0 * mf * mf),
        to(gamma(aligned, d, p)) / (64.0 / 729.0 * mf * mf * mf),
        to(gamma(crossed, d, p)) / (64.0 / 27.0 * mf * mf * mf),
    ]
}

/// Rows `(n, x_max, x_max / n, M)` for `n = 1..=n_max`.
pub fn zero_ratio_scan(n_max: usize, d: u8, p: &ParamSet) -> Result<Vec<(usize, f64, f64, f64)>> {
    let m = bound_constants()?.m;
    let ladder = zeros_ladder(n_max, d, p, 1e-12)?;
    let mut out = Vec::with_capacity(n_max);
    for (i, z) in ladder.iter().enumerate() {
        let n = i + 1;
        let x_max = *z.last().unwrap();
        out.push((n, x_max, x_max / n as f64, m));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::poly::Poly;
    use crate::type2::explicit_poly;

    fn grid() -> Vec<ParamSet> {
        vec![
            ParamSet::from_i64(0, 0, 1).unwrap(),
            ParamSet::new(rat(2), ratio(3, 2), rat(5)).unwrap(),
        ]
    }

    #[test]
    fn bound_constant_value() {
        let bc = bound_constants().unwrap();
        assert!((bc.delta - 1119104.0 / 14348907.0).abs() < 1e-15);
        assert!((bc.m - 3.4839).abs() < 5e-4);
    }

    #[test]
    fn scaled_eval_matches_direct() {
        let p = ParamSet::from_i64(0, 0, 1).unwrap();
        let table = recurrence_table(8, 0, &p);
        let poly: Poly = explicit_poly(8, 0, &p).unwrap();
        for x in [0.1, 1.0, 3.7, 10.0] {
            let direct = poly.eval_f64(x);
            let scaled = eval_scaled(&table, 8, x);
            assert!((direct - scaled).abs() < 1e-8 * direct.abs().max(1.0));
        }
    }

    #[test]
    fn zeros_are_roots_and_interlace() {
        for p in grid() {
            for d in 0..=1u8 {
                let z10 = zeros(10, d, &p, 1e-12).unwrap();
                assert_eq!(z10.len(), 10);
                assert!(z10.windows(2).all(|w| w[0] < w[1]));
                assert!(z10[0] > 0.0);
                let poly = explicit_poly(10, d, &p).unwrap();
                for &z in &z10 {
                    // |P(z)| small relative to the polynomial scale near z
                    let dp = poly.derivative().eval_f64(z);
                    assert!(poly.eval_f64(z).abs() <= 1e-7 * (dp * z).abs());
                }
                let z9 = zeros(9, d, &p, 1e-12).unwrap();
                for i in 0..9 {
                    assert!(z10[i] < z9[i] && z9[i] < z10[i + 1]);
                }
            }
        }
    }

    #[test]
    fn eigenvalues_match_zeros() {
        for p in grid() {
            for d in 0..=1u8 {
                for n in [5usize, 12] {
                    let z = zeros(n, d, &p, 1e-12).unwrap();
                    let h = hessenberg(n, d, &p);
                    // transpose: same spectrum, upper Hessenberg form
                    let mut ht = vec![vec![0.0; n]; n];
                    for i in 0..n {
                        for j in 0..n {
                            ht[j][i] = h[i][j];
                        }
                    }
                    let e = hessenberg_eigenvalues(ht).unwrap();
                    for (a, b) in z.iter().zip(e.iter()) {
                        assert!((a - b).abs() < 1e-7 * a.abs().max(1.0), "{a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn largest_zero_under_bound() {
        let bc = bound_constants().unwrap();
        for p in grid() {
            for d in 0..=1u8 {
                for n in [5usize, 20, 40] {
                    let z = zeros(n, d, &p, 1e-10).unwrap();
                    assert!(z[n - 1] < bc.m * n as f64, "n={n} z={} d={d}", z[n - 1]);
                }
            }
        }
    }

    #[test]
    fn asymptotic_ratios_approach_one() {
        let p = ParamSet::from_i64(0, 0, 1).unwrap();
        for d in 0..=1u8 {
            for r in asymptotic_ratios(1000, d, &p) {
                assert!((r - 1.0).abs() < 5e-3, "ratio {r}");
            }
        }
    }
}
