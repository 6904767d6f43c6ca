//! Floating-point evaluation of the weights and related quantities: the
//! Tricomi function by its integral representation, numeric moments by
//! adaptive quadrature, the ratio of the two weights as a truncated continued
//! fraction, and pointwise type I function evaluation.

use num_traits::ToPrimitive;

use crate::moments::ParamSet;
use crate::type1::Type1Pair;
use crate::{Error, Result};

/// Natural log of the gamma function for positive argument (Lanczos, g = 7).
pub fn lgamma(x: f64) -> f64 {
    const COEF: [f64; 9] = [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ];
    debug_assert!(x > 0.0);
    if x < 0.5 {
        // reflection keeps the small-argument range accurate
        return std::f64::consts::PI.ln()
            - (std::f64::consts::PI * x).sin().ln()
            - lgamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

// Kronrod 15-point nodes and weights on [-1, 1] (positive half) with the
// embedded Gauss 7-point weights on the shared nodes.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

fn kronrod15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> (f64, f64) {
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    let mut k = 0.0;
    let mut g = 0.0;
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let (fa, fb) = (f(mid - half * x), f(mid + half * x));
        let pair = if x == 0.0 { fa } else { fa + fb };
        k += wk * pair;
        if i % 2 == 1 {
            g += WG[i / 2] * pair;
        }
    }
    (k * half, ((k - g) * half).abs())
}

/// Adaptive quadrature over a finite interval, bisecting the interval with
/// the largest error estimate until the requested relative tolerance holds.
pub fn adaptive_quad<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, tol_rel: f64) -> Result<f64> {
    let mut segments = vec![{
        let (v, e) = kronrod15(f, lo, hi);
        (e, lo, hi, v)
    }];
    for _ in 0..4000 {
        let total: f64 = segments.iter().map(|s| s.3).sum();
        let err: f64 = segments.iter().map(|s| s.0).sum();
        if err <= tol_rel * total.abs().max(f64::MIN_POSITIVE) {
            return Ok(total);
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|a, b| a.1 .0.total_cmp(&b.1 .0))
            .map(|(i, _)| i)
            .unwrap();
        let (_, a, b, _) = segments.swap_remove(worst);
        let m = 0.5 * (a + b);
        let (v1, e1) = kronrod15(f, a, m);
        let (v2, e2) = kronrod15(f, m, b);
        segments.push((e1, a, m, v1));
        segments.push((e2, m, b, v2));
    }
    let total: f64 = segments.iter().map(|s| s.3).sum();
    let err: f64 = segments.iter().map(|s| s.0).sum();
    Err(Error::QuadratureTolerance {
        value: total,
        err,
    })
}

/// Tricomi confluent hypergeometric function `U(alpha, beta; x)` for
/// `alpha > 0`, `x > 0`, via
/// `U = 1/Gamma(alpha) integral_0^inf t^(alpha-1) (1+t)^(beta-alpha-1)
/// e^(-xt) dt` under the exp-sinh map `t = exp(pi/2 sinh w)`, which makes
/// the transformed integrand decay double-exponentially at both ends, so a
/// trapezoid rule with step doubling converges geometrically for any
/// `alpha > 0` and any `x > 0`, small arguments included.
pub fn tricomi_u(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    if alpha <= 0.0 || x <= 0.0 {
        return Err(Error::Domain(format!(
            "tricomi_u needs alpha > 0 and x > 0, got alpha={alpha}, x={x}"
        )));
    }
    let half_pi = std::f64::consts::FRAC_PI_2;
    let integrand = move |w: f64| {
        let s = half_pi * w.sinh();
        let t = s.exp();
        if !t.is_finite() || x * t > 745.0 {
            return 0.0;
        }
        // t^alpha (1+t)^(beta-alpha-1) e^(-xt) cosh(w) pi/2, logs for range
        let ln_val = alpha * s + (beta - alpha - 1.0) * t.ln_1p() - x * t;
        if ln_val < -745.0 {
            return 0.0;
        }
        ln_val.exp() * half_pi * w.cosh()
    };
    let (lo, hi) = (-4.5f64, 5.5f64);
    let mut n = 64usize;
    let mut h = (hi - lo) / n as f64;
    let mut total = 0.5 * (integrand(lo) + integrand(hi));
    for i in 1..n {
        total += integrand(lo + h * i as f64);
    }
    let mut value = total * h;
    loop {
        let mut extra = 0.0;
        for i in 0..n {
            extra += integrand(lo + h * (i as f64 + 0.5));
        }
        total += extra;
        n *= 2;
        h *= 0.5;
        let refined = total * h;
        let diff = (refined - value).abs();
        value = refined;
        if diff <= 1e-14 * value.abs().max(f64::MIN_POSITIVE) {
            break;
        }
        if n > 1 << 14 {
            return Err(Error::QuadratureTolerance { value, err: diff });
        }
    }
    Ok(value * (-lgamma(alpha)).exp())
}

/// Weight value `W(x; a, b, c+t)` for `t` in `{0, 1}`.
pub fn weight_eval(p: &ParamSet, t: u8, x: f64) -> Result<f64> {
    let a = p.a.to_f64().unwrap();
    let b = p.b.to_f64().unwrap();
    let c = p.c.to_f64().unwrap() + t as f64;
    let norm = lgamma(c + b + 1.0) - lgamma(a + 1.0) - lgamma(b + 1.0);
    let u = tricomi_u(c, a - b + 1.0, x)?;
    Ok((norm - x + a * x.ln()).exp() * u)
}

/// Relative residual of Kummer's equation `x U'' + (beta - x) U' - alpha U`
/// at `(alpha, beta, x)`, with the derivatives taken from the contiguous
/// relation `U'(alpha, beta; x) = -alpha U(alpha+1, beta+1; x)` rather than
/// numerical differencing.
pub fn kummer_residual(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    let u0 = tricomi_u(alpha, beta, x)?;
    let u1 = -alpha * tricomi_u(alpha + 1.0, beta + 1.0, x)?;
    let u2 = alpha * (alpha + 1.0) * tricomi_u(alpha + 2.0, beta + 2.0, x)?;
    let res = x * u2 + (beta - x) * u1 - alpha * u0;
    let scale = (x * u2).abs() + ((beta - x) * u1).abs() + (alpha * u0).abs();
    Ok(res.abs() / scale.max(f64::MIN_POSITIVE))
}

/// Numeric moment `integral_0^inf x^k W(x; a, b, c+t) dx`, split at `x = 1`:
/// the head uses `x = v^3` to absorb the `x^a` endpoint singularity and the
/// tail uses `x = 1 + s/(1-s)`.
pub fn quad_moment(p: &ParamSet, t: u8, k: usize, tol_rel: f64) -> Result<f64> {
    let head = |v: f64| {
        if v <= 0.0 || v >= 1.0 {
            return 0.0;
        }
        let x = v * v * v;
        match weight_eval(p, t, x) {
            Ok(w) => 3.0 * v * v * x.powi(k as i32) * w,
            Err(_) => f64::NAN,
        }
    };
    let tail = |s: f64| {
        if s < 0.0 || s >= 1.0 {
            return 0.0;
        }
        let oms = 1.0 - s;
        let x = 1.0 + s / oms;
        match weight_eval(p, t, x) {
            Ok(w) => x.powi(k as i32) * w / (oms * oms),
            Err(_) => f64::NAN,
        }
    };
    Ok(adaptive_quad(&head, 0.0, 1.0, tol_rel)? + adaptive_quad(&tail, 0.0, 1.0, tol_rel)?)
}

/// Ratio `W(x; a, b, c+1) / W(x; a, b, c)` by a truncated continued fraction:
/// backward recurrence `f_j = a_j / (b_j - f_{j+1})` with
/// `a_j = (c+j-1)(c+b-a+j-1)` and `b_j = x + 2c + b - a + 2j - 1`, and
/// `ratio = (c+b+1)/(c(c+b-a)) f_1`.
pub fn nikishin_ratio(p: &ParamSet, x: f64, depth: usize) -> f64 {
    let a = p.a.to_f64().unwrap();
    let b = p.b.to_f64().unwrap();
    let c = p.c.to_f64().unwrap();
    let mut f = 0.0;
    for j in (1..=depth).rev() {
        let j = j as f64;
        let num = (c + j - 1.0) * (c + b - a + j - 1.0);
        let den = x + 2.0 * c + b - a + 2.0 * j - 1.0;
        f = num / (den - f);
    }
    (c + b + 1.0) / (c * (c + b - a)) * f
}

/// Pointwise value of the type I function
/// `Q_n(x) = A_n(x) W(x; a, b, c+d) + B_n(x) W(x; a, b, c+1-d)`.
pub fn type1_function_eval(pair: &Type1Pair, p: &ParamSet, d: u8, x: f64) -> Result<f64> {
    let w0 = weight_eval(p, d, x)?;
    let w1 = weight_eval(p, 1 - d, x)?;
    Ok(pair.a_poly.eval_f64(x) * w0 + pair.b_poly.eval_f64(x) * w1)
}

/// Sign changes of the type I function on a geometric grid over
/// `[1e-6, 1e3]`; an AT-system forces exactly `n - 1` of them.
pub fn type1_sign_changes(pair: &Type1Pair, p: &ParamSet, d: u8, points: usize) -> Result<usize> {
    let (lo, hi) = (1e-6f64, 1e3f64);
    let step = (hi / lo).powf(1.0 / (points as f64 - 1.0));
    let mut count = 0;
    let mut prev = 0.0f64;
    let mut x = lo;
    for _ in 0..points {
        let t0 = pair.a_poly.eval_f64(x) * weight_eval(p, d, x)?;
        let t1 = pair.b_poly.eval_f64(x) * weight_eval(p, 1 - d, x)?;
        let v = t0 + t1;
        // skip cancellation-dominated or underflowed points, their sign is
        // quadrature noise
        if v.is_normal() && v.abs() > 1e-9 * (t0.abs() + t1.abs()) {
            if prev != 0.0 && v.signum() != prev.signum() {
                count += 1;
            }
            prev = v;
        }
        x *= step;
    }
    Ok(count)
}
