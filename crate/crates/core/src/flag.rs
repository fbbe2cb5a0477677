//! Mod-2 cohomology of the real flag manifold `Flag(R^N)`.
//!
//! The ring is `Z2[e1..eN]` modulo the elementary symmetric polynomials
//! `s_1 .. s_N`. Reduction uses the lexicographic Groebner basis
//! `g_j = h_j(e_j, .., e_N)` whose leading terms are `e_j^j`, so normal forms
//! live in the span of the `N!` standard monomials (exponent of `e_j` below `j`).

use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::poly::{Exponent, Gf2Poly, Monomial, TermAccumulator};
use crate::symmetric;

#[derive(Debug)]
pub struct FlagContext {
    num_vars: usize,
    /// `reductions[v][a]`: normal form of `e_{v+1}^a` with respect to `g_{v+1}` alone.
    reductions: Mutex<Vec<Vec<Arc<Gf2Poly>>>>,
}

impl Clone for FlagContext {
    fn clone(&self) -> Self {
        FlagContext::new(self.num_vars).expect("context was valid")
    }
}

impl FlagContext {
    pub fn new(num_vars: usize) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidParameters(
                "a flag ring needs at least one variable".into(),
            ));
        }
        Ok(FlagContext {
            num_vars,
            reductions: Mutex::new(vec![Vec::new(); num_vars]),
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Degree of the fundamental class, `N(N-1)/2`.
    pub fn top_degree(&self) -> u32 {
        (self.num_vars * (self.num_vars - 1) / 2) as u32
    }

    /// `s_1(e), .., s_N(e)`, the generators of the defining ideal.
    pub fn relation_generators(&self) -> Vec<Gf2Poly> {
        let vars: Vec<Gf2Poly> = (0..self.num_vars).map(Gf2Poly::var).collect();
        symmetric::elementary_symmetric_all(self.num_vars, &vars, None)
            .into_iter()
            .skip(1)
            .collect()
    }

    /// `e_2 e_3^2 .. e_N^{N-1}`, the standard monomial spanning the top degree.
    pub fn top_standard_monomial(&self) -> Monomial {
        let exps: Vec<Exponent> = (0..self.num_vars as Exponent).collect();
        Monomial::from_exponents(&exps)
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        m.num_vars() <= self.num_vars
            && m.exponents()
                .iter()
                .enumerate()
                .all(|(v, &e)| (e as usize) <= v)
    }

    fn check_vars(&self, p: &Gf2Poly) -> Result<()> {
        let used = p.num_vars();
        if used > self.num_vars {
            return Err(Error::VariableOutOfRange {
                var: used,
                num_vars: self.num_vars,
            });
        }
        Ok(())
    }

    /// `h_{v+1}(e_{v+1}, .., e_N) - e_{v+1}^{v+1}`.
    fn groebner_tail(&self, v: usize) -> Gf2Poly {
        let degree = v as u32 + 1;
        let mut terms = Vec::new();
        let mut exps = vec![0; self.num_vars];
        complete_homogeneous(&mut exps, v, degree, &mut terms);
        let lead = Monomial::var_pow(v, degree);
        Gf2Poly::from_terms(terms.into_iter().filter(|m| *m != lead))
    }

    fn reduction(&self, v: usize, exponent: Exponent) -> Arc<Gf2Poly> {
        let mut table = self.reductions.lock().unwrap_or_else(|e| e.into_inner());
        let threshold = v as Exponent + 1;
        let top = self.top_degree();
        let row = &mut table[v];
        if row.is_empty() {
            row.push(Arc::new(Gf2Poly::one()));
        }
        let mut tail = None;
        while row.len() <= exponent as usize {
            let prev = row.last().expect("row is seeded");
            let mut acc = TermAccumulator::default();
            let ev = Monomial::var(v);
            for t in prev.terms() {
                let m = t.mul(&ev);
                if m.degree() > top {
                    continue;
                }
                if m.exponent(v) < threshold {
                    acc.toggle(m);
                } else {
                    let tail = tail.get_or_insert_with(|| self.groebner_tail(v));
                    let rest = m.with_exponent(v, 0);
                    for s in tail.terms() {
                        let r = s.mul(&rest);
                        if r.degree() <= top {
                            acc.toggle(r);
                        }
                    }
                }
            }
            row.push(Arc::new(acc.finish()));
        }
        Arc::clone(&row[exponent as usize])
    }

    /// Canonical representative in the standard-monomial basis.
    ///
    /// Two polynomials have equal normal forms exactly when they define the
    /// same cohomology class.
    pub fn normal_form(&self, p: &Gf2Poly) -> Result<Gf2Poly> {
        self.check_vars(p)?;
        let top = self.top_degree();
        let mut current = p.truncate(top);
        for v in 0..self.num_vars {
            let threshold = v as Exponent + 1;
            if current.terms().iter().all(|t| t.exponent(v) < threshold) {
                continue;
            }
            let mut acc = TermAccumulator::default();
            for t in current.terms() {
                let a = t.exponent(v);
                if a < threshold {
                    acc.toggle(t.clone());
                    continue;
                }
                let rest = t.with_exponent(v, 0);
                let reduced = self.reduction(v, a);
                for s in reduced.terms() {
                    let r = s.mul(&rest);
                    if r.degree() <= top {
                        acc.toggle(r);
                    }
                }
            }
            current = acc.finish();
        }
        Ok(current)
    }

    /// Whether `m` is divisible by one of the vanishing products
    /// `e_{i1}^{N-r+1} e_{i2}^{N-r+1} e_{i3}^{N-r+2} .. e_{ir}^{N-1}` (`r = 1`: `e_i^N`).
    ///
    /// A `true` answer implies the class of `m` is zero.
    pub fn is_vanishing_product_multiple(&self, m: &Monomial) -> bool {
        let n = self.num_vars as Exponent;
        let mut exps: Vec<Exponent> = m.exponents().to_vec();
        exps.sort_unstable_by(|a, b| b.cmp(a));
        // Thresholds for r variables, descending: N-1, N-2, .., N-r+1, N-r+1.
        // The first r-1 entries are shared by every r, so one scan suffices.
        for r in 1..=self.num_vars.min(exps.len()) {
            let repeated = n - r as Exponent + 1;
            let prefix_ok = (0..r - 1).all(|i| exps[i] >= n - 1 - i as Exponent);
            if !prefix_ok {
                return false;
            }
            if exps[r - 1] >= repeated {
                return true;
            }
        }
        false
    }

    /// Value of the class of `p` on the fundamental class.
    ///
    /// Counts, mod 2, the terms whose exponents are a permutation of
    /// `{0, 1, .., N-1}`; no reduction is performed.
    pub fn top_class_value(&self, p: &Gf2Poly) -> Result<bool> {
        let top = self.top_degree();
        if !p.is_homogeneous(top) {
            return Err(Error::NotTopDegree { expected: top });
        }
        self.check_vars(p)?;
        Ok(p.terms()
            .iter()
            .filter(|t| self.is_permutation_monomial(t))
            .count()
            % 2
            == 1)
    }

    /// Whether the exponents of `m`, padded to `N` entries, are `{0, .., N-1}`.
    pub fn is_permutation_monomial(&self, m: &Monomial) -> bool {
        let n = self.num_vars;
        if m.num_vars() > n {
            return false;
        }
        let mut seen = vec![false; n];
        let mut zeros = n - m.num_vars();
        for &e in m.exponents() {
            let e = e as usize;
            if e == 0 {
                zeros += 1;
                continue;
            }
            if e >= n || seen[e] {
                return false;
            }
            seen[e] = true;
        }
        zeros == 1
    }
}

fn complete_homogeneous(
    exps: &mut [Exponent],
    var: usize,
    remaining: u32,
    out: &mut Vec<Monomial>,
) {
    if var + 1 == exps.len() {
        exps[var] = remaining;
        out.push(Monomial::from_exponents(exps));
        exps[var] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[var] = e;
        complete_homogeneous(exps, var + 1, remaining - e, out);
    }
    exps[var] = 0;
}

/// `e_1^{k-1} e_2^{k-2} .. e_{k-1} e_{k+1}^{n-1} .. e_{n+k-1}`.
///
/// Multiplying a pulled-back Grassmannian class by this monomial turns its
/// evaluation on `G_k(R^{n+k})` into a top-class evaluation on the flag manifold.
pub fn staircase_monomial(n: u32, k: u32) -> Monomial {
    let total = (n + k) as usize;
    let mut exps = vec![0; total];
    for i in 1..k {
        exps[(i - 1) as usize] = k - i;
    }
    for i in (k + 1)..(n + k) {
        exps[(i - 1) as usize] = n - (i - k);
    }
    Monomial::from_exponents(&exps)
}

/// Checks the flag identity
/// `(sum_{i<=k} e_i^{N-2j+1}) * B = B'` where `B` is the staircase-like product
/// `e_1^{k-1} .. e_{k-j}^j e_{k-j+1}^{j-1} e_{k-j+2}^{N-j+1} .. e_k^{N-1}` and
/// `B'` replaces the exponent of `e_{k-j+1}` by `N-j`.
pub fn check_power_sum_shift(n: u32, k: u32, j: u32) -> Result<bool> {
    if !(1 <= j && j <= k && k < n) {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= j <= k < n, got n={n}, k={k}, j={j}"
        )));
    }
    let big_n = n + k;
    let ctx = FlagContext::new(big_n as usize)?;
    let (lhs, rhs) = power_sum_shift_sides(n, k, j);
    Ok(ctx.normal_form(&lhs)? == ctx.normal_form(&rhs)?)
}

pub(crate) fn power_sum_shift_sides(n: u32, k: u32, j: u32) -> (Gf2Poly, Gf2Poly) {
    let big_n = n + k;
    let mut exps = vec![0; k as usize];
    for i in 1..=k {
        exps[(i - 1) as usize] = if i <= k - j {
            k - i
        } else if i == k - j + 1 {
            j - 1
        } else {
            big_n - 1 - (k - i)
        };
    }
    let base = Monomial::from_exponents(&exps);
    let power = big_n - (2 * j - 1);
    let sum = Gf2Poly::from_terms((0..k as usize).map(|i| Monomial::var_pow(i, power)));
    let lhs = sum.mul(&Gf2Poly::from_monomial(base.clone()));
    let rhs = base.with_exponent((k - j) as usize, big_n - j);
    (lhs, Gf2Poly::from_monomial(rhs))
}
