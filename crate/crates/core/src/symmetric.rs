//! Elementary symmetric polynomials and power sums over GF(2).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::poly::{Gf2Poly, Monomial};

/// A polynomial in abstract graded variables `s_1, s_2, ..` where `s_m`
/// has degree `m` and sits at variable index `m - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractSymPoly(Gf2Poly);

impl AbstractSymPoly {
    pub fn new(poly: Gf2Poly) -> Self {
        AbstractSymPoly(poly)
    }

    pub fn poly(&self) -> &Gf2Poly {
        &self.0
    }

    /// `sum_m m * exponent(s_m)` of a term.
    pub fn weighted_degree(term: &Monomial) -> u32 {
        term.exponents()
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u32 + 1) * e)
            .sum()
    }

    /// Substitutes `s_m -> classes[m - 1]`, truncating above `max_degree`.
    pub fn evaluate(&self, classes: &[Gf2Poly], max_degree: Option<u32>) -> Result<Gf2Poly> {
        let assignment: Vec<Option<Gf2Poly>> = classes.iter().cloned().map(Some).collect();
        match max_degree {
            Some(d) => self.0.substitute_truncated(&assignment, d),
            None => self.0.substitute(&assignment),
        }
    }
}

impl std::fmt::Display for AbstractSymPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0.display_with("s"))
    }
}

/// Coefficients `c_0 .. c_{max_m}` of `prod_i (1 + g_i z)`.
///
/// `max_degree` truncates every coefficient in the polynomial grading.
pub fn elementary_symmetric_all(
    max_m: usize,
    generators: &[Gf2Poly],
    max_degree: Option<u32>,
) -> Vec<Gf2Poly> {
    let mut coeffs = vec![Gf2Poly::zero(); max_m + 1];
    coeffs[0] = Gf2Poly::one();
    for (count, g) in generators.iter().enumerate() {
        let top = max_m.min(count + 1);
        for m in (1..=top).rev() {
            if coeffs[m - 1].is_zero() {
                continue;
            }
            let term = match max_degree {
                Some(d) => coeffs[m - 1].mul_truncated(g, d),
                None => coeffs[m - 1].mul(g),
            };
            coeffs[m] += &term;
        }
    }
    coeffs
}

/// Coefficient of `z^m` in `prod_i (1 + g_i z)`.
pub fn elementary_symmetric(m: usize, generators: &[Gf2Poly]) -> Gf2Poly {
    elementary_symmetric_all(m, generators, None).swap_remove(m)
}

fn power_sum_table() -> &'static Mutex<HashMap<u32, Arc<AbstractSymPoly>>> {
    static TABLE: OnceLock<Mutex<HashMap<u32, Arc<AbstractSymPoly>>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The power sum `y_1^p + y_2^p + ..` written in the elementary symmetric
/// polynomials `s_1 .. s_p`, reduced mod 2.
///
/// Built from the Newton recurrence
/// `S_p = sum_{i<p} s_i S_{p-i} + (p mod 2) s_p`; results are memoized.
pub fn power_sum_in_elementary(p: u32) -> Result<Arc<AbstractSymPoly>> {
    if p == 0 {
        return Err(Error::InvalidParameters("power sums start at p = 1".into()));
    }
    if let Some(hit) = power_sum_table()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get(&p)
    {
        return Ok(Arc::clone(hit));
    }
    let mut sum = if p % 2 == 1 {
        Gf2Poly::var(p as usize - 1)
    } else {
        Gf2Poly::zero()
    };
    for i in 1..p {
        let lower = power_sum_in_elementary(p - i)?;
        sum += &Gf2Poly::var(i as usize - 1).mul(lower.poly());
    }
    let value = Arc::new(AbstractSymPoly(sum));
    let mut table = power_sum_table().lock().unwrap_or_else(|e| e.into_inner());
    // Another thread may have filled the slot meanwhile; both values agree.
    Ok(Arc::clone(table.entry(p).or_insert(value)))
}

/// Checks `S_p(s_1(e), .., s_p(e)) = e_1^p + .. + e_q^p` in `q` variables.
pub fn verify_newton(q: u32, p: u32) -> Result<bool> {
    if p == 0 || q < p {
        return Err(Error::InvalidParameters(format!(
            "need q >= p >= 1, got q={q}, p={p}"
        )));
    }
    let vars: Vec<Gf2Poly> = (0..q as usize).map(Gf2Poly::var).collect();
    let sigmas = elementary_symmetric_all(p as usize, &vars, None);
    let lhs = power_sum_in_elementary(p)?.evaluate(&sigmas[1..], None)?;
    let rhs = Gf2Poly::from_terms((0..q as usize).map(|i| Monomial::var_pow(i, p)));
    Ok(lhs == rhs)
}
