//! Characteristic classes of real Grassmannians pulled back to the flag manifold.
//!
//! `pi: Flag(R^{n+k}) -> G_k(R^{n+k})` sends a flag to the span of its first
//! `k` lines; `pi^*` is injective on mod-2 cohomology, so every class is
//! represented by a polynomial in the line classes `e_1 .. e_{n+k}`.

use crate::error::{Error, Result};
use crate::poly::{Gf2Poly, Monomial};
use crate::symmetric::power_sum_in_elementary;

use super::GrassmannianDesc;

fn one_plus_sum(vars: &[usize]) -> Gf2Poly {
    Gf2Poly::one().add(&Gf2Poly::sum_of_vars(vars.iter().copied()))
}

/// `pi^*(w(gamma_k)) = prod_{i<=k} (1 + e_i)`.
pub fn pullback_total_w(g: &GrassmannianDesc) -> Result<Gf2Poly> {
    g.require_real()?;
    Ok((0..g.k as usize).fold(Gf2Poly::one(), |acc, i| acc.mul(&one_plus_sum(&[i]))))
}

/// `pi^*(w(gamma_k^perp)) = prod_{k<i<=n+k} (1 + e_i)`.
pub fn pullback_total_wbar(g: &GrassmannianDesc) -> Result<Gf2Poly> {
    g.require_real()?;
    Ok((g.k as usize..g.ambient() as usize)
        .fold(Gf2Poly::one(), |acc, i| acc.mul(&one_plus_sum(&[i]))))
}

/// Smallest positive `alpha` with `2^alpha >= ambient`.
pub fn alpha_for(ambient: u32) -> u32 {
    let mut alpha = 1;
    while (1u64 << alpha) < u64::from(ambient) {
        alpha += 1;
    }
    alpha
}

/// Pullback of the total Stiefel-Whitney class of the tangent bundle,
/// truncated above `max_degree`.
///
/// From `tau + gamma (x) gamma = (n+k) gamma` the class is
/// `prod_i (1+e_i)^{n+k} * prod_{i<j} (1+e_i+e_j)^{-2}`; the inverse square is
/// replaced by the power `2^alpha - 2`, which agrees with it in the flag ring
/// because `(1+e_i+e_j)^{2^alpha} = 1 + e_i^{2^alpha} + e_j^{2^alpha}` and
/// `e_i^{n+k} = 0` there.
pub fn pullback_tangent_sw(g: &GrassmannianDesc, max_degree: u32) -> Result<Gf2Poly> {
    pullback_tangent_sw_with_alpha(g, max_degree, alpha_for(g.ambient()))
}

pub fn pullback_tangent_sw_with_alpha(
    g: &GrassmannianDesc,
    max_degree: u32,
    alpha: u32,
) -> Result<Gf2Poly> {
    g.require_real()?;
    if alpha == 0 || alpha > 30 || (1u64 << alpha) < u64::from(g.ambient()) {
        return Err(Error::InvalidParameters(format!(
            "alpha={alpha} does not satisfy 2^alpha >= {}",
            g.ambient()
        )));
    }
    let k = g.k as usize;
    let mut total = Gf2Poly::one();
    for i in 0..k {
        let factor = one_plus_sum(&[i]).pow(u64::from(g.ambient()), Some(max_degree));
        total = total.mul_truncated(&factor, max_degree);
    }
    let pair_exp = (1u64 << alpha) - 2;
    for i in 0..k {
        for j in (i + 1)..k {
            let factor = one_plus_sum(&[i, j]).pow(pair_exp, Some(max_degree));
            total = total.mul_truncated(&factor, max_degree);
        }
    }
    Ok(total)
}

/// Graded pieces `pi^*(W_0) .. pi^*(W_max_degree)` of the tangent class.
pub fn tangent_sw_pieces(g: &GrassmannianDesc, max_degree: u32) -> Result<Vec<Gf2Poly>> {
    let total = pullback_tangent_sw(g, max_degree)?;
    Ok((0..=max_degree)
        .map(|m| total.homogeneous_part(m))
        .collect())
}

/// Closed form of `pi^*(S_p(W_1, .., W_p))`: `e_1^p + .. + e_k^p` when `n+k`
/// is odd and `p < n+k`, zero otherwise.
pub fn sp_pullback_closed_form(g: &GrassmannianDesc, p: u32) -> Result<Gf2Poly> {
    g.require_real()?;
    if p == 0 {
        return Err(Error::InvalidParameters("p must be positive".into()));
    }
    if g.ambient() % 2 == 1 && p < g.ambient() {
        Ok(Gf2Poly::from_terms(
            (0..g.k as usize).map(|i| Monomial::var_pow(i, p)),
        ))
    } else {
        Ok(Gf2Poly::zero())
    }
}

/// `S_p` evaluated on the pulled-back tangent classes by direct substitution.
///
/// As polynomials this is `(n+k) * (e_1^p + .. + e_k^p)` mod 2; it agrees
/// with [`sp_pullback_closed_form`] as a cohomology class.
pub fn sp_pullback_via_newton(g: &GrassmannianDesc, p: u32, max_degree: u32) -> Result<Gf2Poly> {
    g.require_real()?;
    if p == 0 {
        return Err(Error::InvalidParameters("p must be positive".into()));
    }
    let pieces = tangent_sw_pieces(g, p)?;
    power_sum_in_elementary(p)?.evaluate(&pieces[1..=p as usize], Some(max_degree))
}
