//! Stiefel-Whitney numbers of Grassmannians and of products of manifolds.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flag::{staircase_monomial, FlagContext};
use crate::poly::{Gf2Poly, Monomial};

use super::classes::tangent_sw_pieces;
use super::partition::{count_bounded, Partition, PartitionIndex};
use super::GrassmannianDesc;

/// All Stiefel-Whitney numbers of a closed manifold of dimension `dim`,
/// one bit per partition of `dim` in canonical (descending lexicographic) order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SwVector {
    dim: u32,
    bits: Vec<bool>,
}

impl SwVector {
    pub fn new(dim: u32, bits: Vec<bool>) -> Result<Self> {
        let expected = PartitionIndex::of(dim).len();
        if bits.len() != expected {
            return Err(Error::DimensionMismatch(format!(
                "dimension {dim} has {expected} partitions, got {} entries",
                bits.len()
            )));
        }
        Ok(SwVector { dim, bits })
    }

    pub fn zeros(dim: u32) -> Self {
        SwVector {
            dim,
            bits: vec![false; PartitionIndex::of(dim).len()],
        }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    pub fn get(&self, lambda: &Partition) -> Option<bool> {
        PartitionIndex::of(self.dim)
            .position(lambda)
            .map(|i| self.bits[i])
    }

    /// `(partition, number)` pairs in canonical order.
    pub fn entries(&self) -> Vec<(Partition, bool)> {
        PartitionIndex::of(self.dim)
            .list()
            .iter()
            .cloned()
            .zip(self.bits.iter().copied())
            .collect()
    }

    /// Bits as a `0`/`1` string in canonical partition order.
    pub fn to_bitstring(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for SwVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SwVector(dim={}, {})", self.dim, self.to_bitstring())
    }
}

/// How a top-degree class of a real Grassmannian is evaluated.
enum Route {
    /// Only `e_1 .. e_k` occur, so after multiplying by the staircase a term
    /// `e_1^{a_1} .. e_k^{a_k}` survives iff `{a_i + k - i}` is `{n, .., n+k-1}`.
    /// Terms outside the box `a_i <= n - 1 + i` can never survive and are
    /// discarded during multiplication.
    Fast,
    /// Multiply by the staircase monomial and count permutation monomials in
    /// the full flag ring.
    Flag {
        ctx: FlagContext,
        staircase: Gf2Poly,
    },
}

struct Evaluator {
    n: u32,
    k: u32,
    dim: u32,
    pieces: Vec<Gf2Poly>,
    route: Route,
}

impl Evaluator {
    fn new(g: &GrassmannianDesc, flag_route: bool) -> Result<Self> {
        g.require_real()?;
        let dim = g.real_dimension();
        let mut pieces = tangent_sw_pieces(g, dim)?;
        let route = if flag_route {
            let ctx = FlagContext::new(g.ambient() as usize)?;
            Route::Flag {
                ctx,
                staircase: Gf2Poly::from_monomial(staircase_monomial(g.n, g.k)),
            }
        } else {
            let (n, k) = (g.n, g.k);
            pieces = pieces
                .into_iter()
                .map(|p| p.filter(|m| in_box(m, n, k)))
                .collect();
            Route::Fast
        };
        Ok(Evaluator {
            n: g.n,
            k: g.k,
            dim,
            pieces,
            route,
        })
    }

    fn times_piece(&self, product: &Gf2Poly, part: u32) -> Gf2Poly {
        let piece = &self.pieces[part as usize];
        match self.route {
            Route::Fast => {
                let (n, k) = (self.n, self.k);
                product.mul_filtered(piece, |m| in_box(m, n, k))
            }
            Route::Flag { .. } => product.mul(piece),
        }
    }

    fn value(&self, class: &Gf2Poly) -> bool {
        match &self.route {
            Route::Fast => {
                class
                    .terms()
                    .iter()
                    .filter(|m| fast_survives(m, self.n, self.k))
                    .count()
                    % 2
                    == 1
            }
            Route::Flag { ctx, staircase } => ctx
                .top_class_value(&class.mul(staircase))
                .expect("class has top degree after the staircase"),
        }
    }

    fn number(&self, lambda: &Partition) -> Result<bool> {
        if lambda.weight() != self.dim {
            return Err(Error::WeightMismatch {
                weight: lambda.weight(),
                dim: self.dim,
            });
        }
        let mut product = Gf2Poly::one();
        for &part in lambda.parts() {
            product = self.times_piece(&product, part);
            if product.is_zero() {
                return Ok(false);
            }
        }
        Ok(self.value(&product))
    }

    /// Numbers for all partitions of `remaining` with parts at most
    /// `max_part`, each multiplied onto `product`, in canonical order.
    fn subtree(&self, remaining: u32, max_part: u32, product: &Gf2Poly, out: &mut Vec<bool>) {
        if remaining == 0 {
            out.push(self.value(product));
            return;
        }
        if product.is_zero() {
            let skipped = count_bounded(remaining, max_part) as usize;
            out.extend(std::iter::repeat_n(false, skipped));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            let next = self.times_piece(product, part);
            self.subtree(remaining - part, part, &next, out);
        }
    }

    fn vector(&self) -> SwVector {
        let d = self.dim;
        let branches: Vec<Vec<bool>> = (1..=d)
            .rev()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|first| {
                let mut out = Vec::new();
                let start = self.times_piece(&Gf2Poly::one(), first);
                self.subtree(d - first, first, &start, &mut out);
                out
            })
            .collect();
        let bits = if d == 0 {
            vec![self.value(&Gf2Poly::one())]
        } else {
            branches.concat()
        };
        SwVector { dim: d, bits }
    }
}

fn in_box(m: &Monomial, n: u32, k: u32) -> bool {
    m.num_vars() <= k as usize
        && m.exponents()
            .iter()
            .enumerate()
            .all(|(i, &a)| a <= n + i as u32)
}

fn fast_survives(m: &Monomial, n: u32, k: u32) -> bool {
    if m.num_vars() > k as usize {
        return false;
    }
    let mut seen = 0u128;
    for i in 0..k {
        let shifted = m.exponent(i as usize) + (k - 1 - i);
        if shifted < n || shifted >= n + k {
            return false;
        }
        let bit = 1u128 << (shifted - n);
        if seen & bit != 0 {
            return false;
        }
        seen |= bit;
    }
    true
}

/// `<W_lambda, [G_k(R^{n+k})]>` for a partition `lambda` of `n k`.
pub fn sw_number(g: &GrassmannianDesc, lambda: &Partition) -> Result<bool> {
    Evaluator::new(g, false)?.number(lambda)
}

/// Same number, evaluated in the full flag ring through the staircase monomial.
pub fn sw_number_via_flag(g: &GrassmannianDesc, lambda: &Partition) -> Result<bool> {
    Evaluator::new(g, true)?.number(lambda)
}

/// All Stiefel-Whitney numbers of a real Grassmannian.
pub fn sw_vector(g: &GrassmannianDesc) -> Result<SwVector> {
    Ok(Evaluator::new(g, false)?.vector())
}

pub fn sw_vector_via_flag(g: &GrassmannianDesc) -> Result<SwVector> {
    Ok(Evaluator::new(g, true)?.vector())
}

/// Stiefel-Whitney vector of any Grassmannian; complex and quaternionic ones
/// go through `[G_k(F^{n+k})] = [G_k(R^{n+k})]^t`.
pub fn sw_vector_of(g: &GrassmannianDesc) -> Result<SwVector> {
    let (real, t) = g.realify();
    power_sw_vector(&sw_vector(&real)?, t)
}

/// Stiefel-Whitney vector of `M x N` from those of `M` and `N`.
///
/// Writes `w_i(M x N) = sum_j w_j(M) (x) w_{i-j}(N)` in doubled variables
/// `x_j = w_j(M)`, `y_j = w_j(N)`, expands each partition monomial keeping the
/// bidegree `(dim M, dim N)` part, and evaluates it factorwise.
pub fn product_sw_vector(v1: &SwVector, v2: &SwVector) -> SwVector {
    ProductExpansion::new(v1, v2).vector()
}

/// `v^t` for `t` in `{1, 2, 4}` by iterated products.
pub fn power_sw_vector(v: &SwVector, t: u32) -> Result<SwVector> {
    if !matches!(t, 1 | 2 | 4) {
        return Err(Error::InvalidParameters(format!(
            "power must be 1, 2 or 4, got {t}"
        )));
    }
    let mut acc = v.clone();
    for _ in 1..t {
        acc = product_sw_vector(&acc, v);
    }
    Ok(acc)
}

struct ProductExpansion<'a> {
    d1: u32,
    d2: u32,
    v1: &'a SwVector,
    v2: &'a SwVector,
    idx1: Arc<PartitionIndex>,
    idx2: Arc<PartitionIndex>,
    /// `factors[i] = sum_j x_j y_{i-j}` with `x_0 = y_0 = 1`.
    factors: Vec<Gf2Poly>,
}

impl<'a> ProductExpansion<'a> {
    fn new(v1: &'a SwVector, v2: &'a SwVector) -> Self {
        let (d1, d2) = (v1.dim, v2.dim);
        let x = |j: u32| {
            if j == 0 {
                Monomial::one()
            } else {
                Monomial::var(j as usize - 1)
            }
        };
        let y = |j: u32| {
            if j == 0 {
                Monomial::one()
            } else {
                Monomial::var((d1 + j) as usize - 1)
            }
        };
        let factors = (0..=d1 + d2)
            .map(|i| {
                let lo = i.saturating_sub(d2);
                let hi = i.min(d1);
                Gf2Poly::from_terms((lo..=hi).map(|j| x(j).mul(&y(i - j))))
            })
            .collect();
        ProductExpansion {
            d1,
            d2,
            v1,
            v2,
            idx1: PartitionIndex::of(d1),
            idx2: PartitionIndex::of(d2),
            factors,
        }
    }

    fn weights(&self, m: &Monomial) -> (u32, u32) {
        let mut wx = 0;
        let mut wy = 0;
        for (var, &e) in m.exponents().iter().enumerate() {
            let var = var as u32;
            if var < self.d1 {
                wx += (var + 1) * e;
            } else {
                wy += (var - self.d1 + 1) * e;
            }
        }
        (wx, wy)
    }

    fn times_factor(&self, product: &Gf2Poly, part: u32) -> Gf2Poly {
        product.mul_filtered(&self.factors[part as usize], |m| {
            let (wx, wy) = self.weights(m);
            wx <= self.d1 && wy <= self.d2
        })
    }

    fn value(&self, product: &Gf2Poly) -> bool {
        let split = self.d1 as usize;
        let mut acc = false;
        for m in product.terms() {
            let exps = m.exponents();
            let (xs, ys) = exps.split_at(split.min(exps.len()));
            let mu = Partition::from_multiplicities(xs);
            let nu = Partition::from_multiplicities(ys);
            let a = self.idx1.position(&mu).map(|i| self.v1.bits[i]);
            let b = self.idx2.position(&nu).map(|i| self.v2.bits[i]);
            if let (Some(a), Some(b)) = (a, b) {
                acc ^= a & b;
            }
        }
        acc
    }

    fn subtree(&self, remaining: u32, max_part: u32, product: &Gf2Poly, out: &mut Vec<bool>) {
        if remaining == 0 {
            out.push(self.value(product));
            return;
        }
        if product.is_zero() {
            let skipped = count_bounded(remaining, max_part) as usize;
            out.extend(std::iter::repeat_n(false, skipped));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            let next = self.times_factor(product, part);
            self.subtree(remaining - part, part, &next, out);
        }
    }

    fn vector(&self) -> SwVector {
        let d = self.d1 + self.d2;
        if d == 0 {
            return SwVector {
                dim: 0,
                bits: vec![self.value(&Gf2Poly::one())],
            };
        }
        let branches: Vec<Vec<bool>> = (1..=d)
            .rev()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|first| {
                let mut out = Vec::new();
                let start = self.times_factor(&Gf2Poly::one(), first);
                self.subtree(d - first, first, &start, &mut out);
                out
            })
            .collect();
        SwVector {
            dim: d,
            bits: branches.concat(),
        }
    }
}
