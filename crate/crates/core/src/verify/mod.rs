//! Independence of the non-bounding Grassmannians in unoriented bordism.
//!
//! Two routes are provided. The matrix-induction route evaluates the
//! products `f_l = prod_{j<=k_l} S_{n_l+k_l-2j+1}` on the real members, checks
//! the resulting matrix is lower unitriangular on the odd block and zero on
//! the even block, and handles the even block by recursion on `d / 4`. The
//! oracle route computes the full Stiefel-Whitney vector of every member
//! (over all three fields) and checks the GF(2) rank.

mod enumerate;
mod matrix;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flag::{staircase_monomial, FlagContext};
use crate::grassmann::{
    power_sw_vector, sp_pullback_closed_form, sw_vector, sw_vector_of, Field, GrassmannianDesc,
    SwVector,
};
use crate::poly::Gf2Poly;

pub use enumerate::{enumerate_gd, split_even_odd, Block, GdEnumeration};
pub use matrix::Gf2Matrix;

/// Largest dimension whose Stiefel-Whitney vectors are computed without an
/// explicit override.
pub const DEFAULT_SW_DIM_LIMIT: u32 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    MatrixInduction,
    Oracle,
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::MatrixInduction => "matrix-induction",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "matrix-induction" => Ok(Method::MatrixInduction),
            "oracle" => Ok(Method::Oracle),
            "both" => Ok(Method::Both),
            other => Err(Error::Parse(format!(
                "unknown method `{other}`, expected matrix-induction, oracle or both"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Lift the [`DEFAULT_SW_DIM_LIMIT`] guard.
    pub allow_large: bool,
}

impl VerifyOptions {
    /// Fails with [`Error::TooLarge`] when `dim` is over the limit and no override is set.
    pub fn check_dim(&self, dim: u32) -> Result<()> {
        if dim > DEFAULT_SW_DIM_LIMIT && !self.allow_large {
            return Err(Error::TooLarge {
                dim,
                limit: DEFAULT_SW_DIM_LIMIT,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberRecord {
    pub field: Field,
    pub k: u32,
    pub n: u32,
    pub block: Option<Block>,
}

impl From<&GrassmannianDesc> for MemberRecord {
    fn from(g: &GrassmannianDesc) -> Self {
        MemberRecord {
            field: g.field,
            k: g.k,
            n: g.n,
            block: Block::of(g),
        }
    }
}

/// Outcome of one dimension's verification.
///
/// `matrix` holds the `f_l` matrix for the matrix-induction method and the
/// Stiefel-Whitney vectors (one row per member) otherwise. `failures` names
/// every falsified step; it is empty exactly when `verified` is true.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub dim: u32,
    pub members: Vec<MemberRecord>,
    pub matrix: Vec<String>,
    pub rank: usize,
    pub method: Method,
    pub verified: bool,
    pub elapsed_ms: u64,
    pub failures: Vec<String>,
}

/// `<f_l(target), [target]>` where `f_l` is built from `source = G_{k_l}(R^{n_l+k_l})`.
pub fn f_ell_value(source: &GrassmannianDesc, target: &GrassmannianDesc) -> Result<bool> {
    source.require_real()?;
    target.require_real()?;
    if source.real_dimension() != target.real_dimension() {
        return Err(Error::DimensionMismatch(format!(
            "{source} has dimension {}, {target} has {}",
            source.real_dimension(),
            target.real_dimension()
        )));
    }
    let ambient = target.ambient();
    // Terms with an exponent >= n+k vanish in the flag ring and can never
    // contribute to the top class.
    let below_ambient = |m: &crate::poly::Monomial| m.exponents().iter().all(|&e| e < ambient);
    let mut product = Gf2Poly::one();
    for j in 1..=source.k {
        let p = source.ambient() - (2 * j - 1);
        let factor = sp_pullback_closed_form(target, p)?;
        product = product.mul_filtered(&factor, below_ambient);
        if product.is_zero() {
            return Ok(false);
        }
    }
    let ctx = FlagContext::new(ambient as usize)?;
    let class = product.mul(&Gf2Poly::from_monomial(staircase_monomial(
        target.n, target.k,
    )));
    ctx.top_class_value(&class)
}

/// Rows: the odd block `O(d)`; columns: all real members of `G(d)`, odd block
/// first. Entry `(l, h)` is `<f_l(G_h), [G_h]>`.
pub fn proposition_matrix(d: u32) -> Result<(GdEnumeration, Gf2Matrix)> {
    let e = enumerate_gd(d, &[Field::R]);
    let rows = e.o_members();
    let cols = e.real_members();
    let entries: Vec<Vec<bool>> = rows
        .par_iter()
        .map(|src| cols.iter().map(|tgt| f_ell_value(src, tgt)).collect())
        .collect::<Vec<Result<Vec<bool>>>>()
        .into_iter()
        .collect::<Result<_>>()?;
    let mut m = Gf2Matrix::zeros(rows.len(), cols.len());
    for (i, row) in entries.iter().enumerate() {
        for (j, &b) in row.iter().enumerate() {
            m.set(i, j, b);
        }
    }
    Ok((e, m))
}

/// Checks the block shape of the `f_l` matrix and returns any violations.
pub fn check_block_form(e: &GdEnumeration, m: &Gf2Matrix) -> Vec<String> {
    let mut failures = Vec::new();
    let s = e.o_members().len();
    let cols = e.real_members();
    for l in 0..s {
        if !m.get(l, l) {
            failures.push(format!(
                "d={}: diagonal entry for {} is 0",
                e.d,
                cols[l].label()
            ));
        }
        for h in (l + 1)..s {
            if m.get(l, h) {
                failures.push(format!(
                    "d={}: f for {} is nonzero on later member {}",
                    e.d,
                    cols[l].label(),
                    cols[h].label()
                ));
            }
        }
    }
    for h in e.e_block.clone() {
        if !m.column_is_zero(h) {
            failures.push(format!(
                "d={}: even-block column {} is not zero",
                e.d,
                cols[h].label()
            ));
        }
    }
    failures
}

/// Fossum's identity `[G_{2k}(R^{2n+2k})] = [G_k(R^{n+k})]^4`, compared on
/// Stiefel-Whitney vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FossumOutcome {
    pub doubled: SwVector,
    pub fourth_power: SwVector,
}

impl FossumOutcome {
    pub fn holds(&self) -> bool {
        self.doubled == self.fourth_power
    }
}

pub fn fossum_check(k: u32, n: u32, opts: VerifyOptions) -> Result<FossumOutcome> {
    let base = GrassmannianDesc::real(k, n)?;
    if k >= n {
        return Err(Error::InvalidParameters(format!(
            "need k < n, got k={k}, n={n}"
        )));
    }
    opts.check_dim(4 * n * k)?;
    let doubled = sw_vector(&GrassmannianDesc::real(2 * k, 2 * n)?)?;
    let fourth_power = power_sw_vector(&sw_vector(&base)?, 4)?;
    Ok(FossumOutcome {
        doubled,
        fourth_power,
    })
}

struct InductionOutcome {
    enumeration: GdEnumeration,
    matrix: Gf2Matrix,
    failures: Vec<String>,
}

fn matrix_induction(d: u32, opts: VerifyOptions) -> Result<InductionOutcome> {
    let (enumeration, matrix) = proposition_matrix(d)?;
    let mut failures = check_block_form(&enumeration, &matrix);
    let evens = enumeration.e_members();
    if !evens.is_empty() {
        opts.check_dim(d)?;
        if !d.is_multiple_of(8) {
            failures.push(format!(
                "d={d}: even block is nonempty but d is not 0 mod 8"
            ));
        }
        let lower = enumerate_gd(d / 4, &[Field::R]);
        let mut images = Vec::new();
        for g in evens {
            if g.k % 2 != 0 || g.n % 2 != 0 {
                failures.push(format!("d={d}: {} has odd k or n", g.label()));
                continue;
            }
            let image = GrassmannianDesc::real(g.k / 2, g.n / 2)?;
            if !lower.real_members().contains(&image) {
                failures.push(format!(
                    "d={d}: image {} of {} is not in G({})",
                    image.label(),
                    g.label(),
                    d / 4
                ));
            }
            if images.contains(&image) {
                failures.push(format!("d={d}: image {} is hit twice", image.label()));
            }
            images.push(image);
            let fourth = power_sw_vector(&sw_vector(&image)?, 4)?;
            if sw_vector(g)? != fourth {
                failures.push(format!(
                    "d={d}: {} differs from the fourth power of {}",
                    g.label(),
                    image.label()
                ));
            }
        }
        let inner = matrix_induction(d / 4, opts)?;
        failures.extend(inner.failures);
    }
    Ok(InductionOutcome {
        enumeration,
        matrix,
        failures,
    })
}

struct OracleOutcome {
    enumeration: GdEnumeration,
    matrix: Gf2Matrix,
    rank: usize,
    failures: Vec<String>,
}

fn oracle(d: u32, opts: VerifyOptions) -> Result<OracleOutcome> {
    let enumeration = enumerate_gd(d, &Field::ALL);
    if !enumeration.is_empty() {
        opts.check_dim(d)?;
    }
    let vectors = enumeration
        .members
        .par_iter()
        .map(sw_vector_of)
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<&[bool]> = vectors.iter().map(SwVector::bits).collect();
    let matrix = if rows.is_empty() {
        Gf2Matrix::zeros(0, 0)
    } else {
        Gf2Matrix::from_rows(&rows)
    };
    let rank = matrix.rank();
    let mut failures = Vec::new();
    if rank != enumeration.len() {
        failures.push(format!(
            "d={d}: Stiefel-Whitney rank {rank} is below |G(d)| = {}",
            enumeration.len()
        ));
    }
    Ok(OracleOutcome {
        enumeration,
        matrix,
        rank,
        failures,
    })
}

/// Verifies that the non-bounding Grassmannians of dimension `d` are linearly
/// independent, by the requested method.
///
/// Falsified steps are reported in the result; errors are reserved for
/// invalid input and the dimension guard.
pub fn verify_theorem(d: u32, method: Method, opts: VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let records = |e: &GdEnumeration| e.members.iter().map(MemberRecord::from).collect();
    let mut report = match method {
        Method::MatrixInduction => {
            let out = matrix_induction(d, opts)?;
            VerificationReport {
                dim: d,
                members: records(&out.enumeration),
                matrix: out.matrix.row_strings(),
                rank: out.matrix.rank(),
                method,
                verified: out.failures.is_empty(),
                elapsed_ms: 0,
                failures: out.failures,
            }
        }
        Method::Oracle => {
            let out = oracle(d, opts)?;
            VerificationReport {
                dim: d,
                members: records(&out.enumeration),
                matrix: out.matrix.row_strings(),
                rank: out.rank,
                method,
                verified: out.failures.is_empty(),
                elapsed_ms: 0,
                failures: out.failures,
            }
        }
        Method::Both => {
            let induction = matrix_induction(d, opts)?;
            let out = oracle(d, opts)?;
            let induction_ok = induction.failures.is_empty();
            let oracle_ok = out.failures.is_empty();
            let mut failures = induction.failures;
            failures.extend(out.failures);
            if induction_ok != oracle_ok {
                failures.push(format!(
                    "d={d}: methods disagree (matrix-induction {}, oracle {})",
                    verdict(induction_ok),
                    verdict(oracle_ok)
                ));
            }
            VerificationReport {
                dim: d,
                members: records(&out.enumeration),
                matrix: out.matrix.row_strings(),
                rank: out.rank,
                method,
                verified: failures.is_empty(),
                elapsed_ms: 0,
                failures,
            }
        }
    };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "verified"
    } else {
        "falsified"
    }
}

/// Reports for `d = 2, 4, .., max_dim`, in dimension order.
pub fn verify_range(
    max_dim: u32,
    method: Method,
    opts: VerifyOptions,
) -> Result<Vec<VerificationReport>> {
    let dims: Vec<u32> = (2..=max_dim).step_by(2).collect();
    dims.par_iter()
        .map(|&d| verify_theorem(d, method, opts))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::sp_pullback_via_newton;

    fn real(k: u32, n: u32) -> GrassmannianDesc {
        GrassmannianDesc::real(k, n).unwrap()
    }

    #[test]
    fn f_ell_examples() {
        let rp8 = real(1, 8);
        assert!(f_ell_value(&rp8, &rp8).unwrap());
        // even n + k target
        assert!(!f_ell_value(&rp8, &real(2, 4)).unwrap());
        // later member with smaller odd n + k (d = 18: G_1(R^19), G_2(R^11), G_3(R^9))
        assert!(!f_ell_value(&real(1, 18), &real(2, 9)).unwrap());
        assert!(!f_ell_value(&real(2, 9), &real(3, 6)).unwrap());
        assert!(f_ell_value(&rp8, &real(1, 4)).is_err());
    }

    #[test]
    fn proposition_matrix_examples() {
        let (_, m) = proposition_matrix(8).unwrap();
        assert_eq!(m.row_strings(), ["10"]);
        let (_, m) = proposition_matrix(2).unwrap();
        assert_eq!(m.row_strings(), ["1"]);
        let (e, m) = proposition_matrix(3).unwrap();
        assert!(e.is_empty() && m.rows() == 0);
    }

    /// Recomputes the f_l matrix with the substitution route for S_p and
    /// checks it against the closed form used by `f_ell_value`.
    #[test]
    fn matrix_agrees_with_newton_route() {
        for d in (2..=12).step_by(2) {
            let (e, m) = proposition_matrix(d).unwrap();
            for (l, src) in e.o_members().iter().enumerate() {
                for (h, tgt) in e.real_members().iter().enumerate() {
                    let mut product = Gf2Poly::one();
                    for j in 1..=src.k {
                        let p = src.ambient() - (2 * j - 1);
                        let s = sp_pullback_via_newton(tgt, p, d).unwrap();
                        product = product.mul_truncated(&s, d);
                    }
                    let ctx = FlagContext::new(tgt.ambient() as usize).unwrap();
                    let class =
                        product.mul(&Gf2Poly::from_monomial(staircase_monomial(tgt.n, tgt.k)));
                    let value = ctx
                        .top_class_value(&class.homogeneous_part(ctx.top_degree()))
                        .unwrap();
                    assert_eq!(value, m.get(l, h), "d={d} l={l} h={h}");
                }
            }
        }
    }

    #[test]
    fn verify_examples() {
        let r = verify_theorem(2, Method::Both, VerifyOptions::default()).unwrap();
        assert!(r.verified);
        assert_eq!(r.members.len(), 1);
        let r = verify_theorem(8, Method::Oracle, VerifyOptions::default()).unwrap();
        assert_eq!(r.matrix.len(), 4);
        assert_eq!(r.matrix[0].len(), 22);
        // G_2(R^6) and HP^2 share their vector (w_8 and w_4^2 only)
        assert_eq!(r.matrix[1], r.matrix[3]);
        assert_eq!(r.rank, 3);
        assert!(!r.verified);
        let r = verify_theorem(8, Method::MatrixInduction, VerifyOptions::default()).unwrap();
        assert!(r.verified, "{r:?}");
        assert_eq!(r.matrix, ["10"]);
        let r = verify_theorem(7, Method::Both, VerifyOptions::default()).unwrap();
        assert!(r.verified && r.members.is_empty() && r.rank == 0, "{r:?}");
    }

    #[test]
    fn guard_refuses_large_oracle_runs() {
        let err = verify_theorem(26, Method::Oracle, VerifyOptions::default()).unwrap_err();
        assert!(matches!(err, Error::TooLarge { dim: 26, .. }));
        assert!(err.to_string().contains("--allow-large"));
        // no even block at d = 26, so the matrix route needs no vectors
        assert!(
            verify_theorem(26, Method::MatrixInduction, VerifyOptions::default())
                .unwrap()
                .verified
        );
        assert!(fossum_check(2, 4, VerifyOptions::default()).is_err());
    }

    #[test]
    fn fossum_examples() {
        let opts = VerifyOptions::default();
        assert!(fossum_check(1, 2, opts).unwrap().holds());
        assert!(fossum_check(1, 4, opts).unwrap().holds());
        let zero = fossum_check(1, 3, opts).unwrap();
        assert!(zero.holds() && zero.doubled.is_zero());
        assert!(fossum_check(2, 2, opts).is_err());
    }

    #[test]
    fn report_serialization_round_trips() {
        let r = verify_theorem(8, Method::Both, VerifyOptions::default()).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        assert!(json.contains("\"method\":\"both\""));
        assert!(json.contains("\"block\":null"));
    }
}
