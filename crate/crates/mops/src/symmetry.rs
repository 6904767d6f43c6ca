//! Threefold symmetric specialisations: for particular parameter choices the
//! step line polynomials are the cubic components of a threefold symmetric
//! 2-orthogonal sequence, recomposed by `P_{3n+k}(x) = x^k P_n^(k)(x^3)`.

use num_traits::Zero;

use crate::exact::{rat, ratio, Rational};
use crate::moments::ParamSet;
use crate::poly::Poly;
use crate::type2::explicit_poly;
use crate::{Error, Result};

/// The two parameter-dependent threefold symmetric Hahn-classical families
/// whose cubic components are reachable here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CubicCase {
    B1 { mu: Rational },
    B2 { rho: Rational },
}

/// Fixed component parameters `(a_k, b_k)` and the flag `d_k`.
fn component_ab(k: usize) -> (Rational, Rational, u8) {
    match k {
        0 => (ratio(-1, 3), ratio(-2, 3), 0),
        1 => (ratio(-1, 3), ratio(1, 3), 1),
        2 => (ratio(2, 3), ratio(1, 3), 0),
        _ => unreachable!("cubic component index must be 0, 1 or 2"),
    }
}

/// Step line parameters of the k-th cubic component:
/// case B1 maps to `(a_k, b_k, mu/3)` with flag `1 - d_k`, case B2 to
/// `(a_k, b_k, (rho-2)/3 + 1 - d_k)` with flag `d_k`.
///
/// These flag assignments are the unique ones (up to relabelling the free
/// parameter) for which the recomposed sequence satisfies the pure recurrence
/// `P_{m+1} = x P_m - gamma P_{m-2}` exactly, which
/// `threefold_recurrence_check` asserts degree by degree.
pub fn component_params(case: &CubicCase, k: usize) -> Result<(ParamSet, u8)> {
    let (a, b, dk) = component_ab(k);
    match case {
        CubicCase::B1 { mu } => {
            let p = ParamSet::new(a, b, mu / rat(3))?;
            Ok((p, 1 - dk))
        }
        CubicCase::B2 { rho } => {
            let c = (rho - rat(2)) / rat(3) + rat(1 - dk as i64);
            let p = ParamSet::new(a, b, c)?;
            Ok((p, dk))
        }
    }
}

/// The k-th cubic component polynomial of degree `n`.
pub fn component_poly(case: &CubicCase, k: usize, n: usize) -> Result<Poly> {
    let (p, d) = component_params(case, k)?;
    explicit_poly(n, d, &p)
}

/// The threefold symmetric polynomial `P_m(x) = x^k P_n^(k)(x^3)` with
/// `m = 3n + k`.
pub fn compose_threefold(case: &CubicCase, m: usize) -> Result<Poly> {
    let (n, k) = (m / 3, m % 3);
    Ok(component_poly(case, k, n)?.substitute_power(3).mul_xpow(k))
}

/// True when every nonzero coefficient of `q` sits at a degree congruent to
/// `m` modulo 3, the coefficient-level form of threefold symmetry.
pub fn is_threefold_symmetric(q: &Poly, m: usize) -> bool {
    q.coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| c.is_zero() || i % 3 == m % 3)
}

/// Verifies that the recomposed sequence satisfies the pure recurrence
/// `P_{m+1} = x P_m - gamma_{m-1} P_{m-2}` exactly (no `beta` or `alpha`
/// terms) and returns `gamma_1 .. gamma_{m_max - 2}`, all positive.
pub fn threefold_recurrence_check(case: &CubicCase, m_max: usize) -> Result<Vec<Rational>> {
    let polys: Vec<Poly> = (0..=m_max)
        .map(|m| compose_threefold(case, m))
        .collect::<Result<_>>()?;
    let mut gammas = Vec::new();
    for m in 0..m_max {
        let residual = &polys[m].mul_xpow(1) - &polys[m + 1];
        if m < 2 {
            if !residual.is_zero() {
                return Err(Error::SymmetryViolated(m));
            }
            continue;
        }
        // the leftover must be an exact positive multiple of P_{m-2}
        let g = residual.coeff(m - 2);
        if g <= Rational::zero() || residual != polys[m - 2].scale(&g) {
            return Err(Error::SymmetryViolated(m));
        }
        gammas.push(g);
    }
    Ok(gammas)
}
