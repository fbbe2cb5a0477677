//! Grassmannians `G_k(F^{n+k})` over the reals, complexes and quaternions.

mod classes;
mod numbers;
mod partition;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use classes::{
    alpha_for, pullback_tangent_sw, pullback_tangent_sw_with_alpha, pullback_total_w,
    pullback_total_wbar, sp_pullback_closed_form, sp_pullback_via_newton, tangent_sw_pieces,
};
pub use numbers::{
    power_sw_vector, product_sw_vector, sw_number, sw_number_via_flag, sw_vector, sw_vector_of,
    sw_vector_via_flag, SwVector,
};
pub use partition::{partition_count, partitions, Partition, PartitionIndex};

/// The division ring a Grassmannian is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    R,
    C,
    H,
}

impl Field {
    /// Real dimension of the field: 1, 2 or 4.
    pub fn t(self) -> u32 {
        match self {
            Field::R => 1,
            Field::C => 2,
            Field::H => 4,
        }
    }

    pub const ALL: [Field; 3] = [Field::R, Field::C, Field::H];
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::R => "R",
            Field::C => "C",
            Field::H => "H",
        })
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "R" | "r" => Ok(Field::R),
            "C" | "c" => Ok(Field::C),
            "H" | "h" => Ok(Field::H),
            other => Err(Error::Parse(format!(
                "unknown field `{other}`, expected R, C or H"
            ))),
        }
    }
}

/// The Grassmannian of `k`-planes in `F^{n+k}`, of real dimension `n k t`.
///
/// Descriptors with `k >= n` are allowed (they are diffeomorphic to the
/// `k <-> n` swap or bound when `k = n`) but fall outside the standard range
/// reported by [`GrassmannianDesc::in_standard_range`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassmannianDesc {
    pub field: Field,
    pub k: u32,
    pub n: u32,
}

impl GrassmannianDesc {
    pub fn new(field: Field, k: u32, n: u32) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidParameters(format!(
                "k and n must be positive, got k={k}, n={n}"
            )));
        }
        Ok(GrassmannianDesc { field, k, n })
    }

    pub fn real(k: u32, n: u32) -> Result<Self> {
        Self::new(Field::R, k, n)
    }

    pub fn t(&self) -> u32 {
        self.field.t()
    }

    /// `n + k`, the dimension of the ambient `F`-vector space.
    pub fn ambient(&self) -> u32 {
        self.n + self.k
    }

    pub fn real_dimension(&self) -> u32 {
        self.n * self.k * self.t()
    }

    pub fn in_standard_range(&self) -> bool {
        self.k < self.n
    }

    pub fn is_real(&self) -> bool {
        self.field == Field::R
    }

    pub(crate) fn require_real(&self) -> Result<()> {
        if self.is_real() {
            Ok(())
        } else {
            Err(Error::NotReal { desc: *self })
        }
    }

    /// Whether the manifold is a boundary: `nu(n+k) > nu(k)`.
    pub fn bounds(&self) -> bool {
        nu(self.ambient() as u64).expect("ambient is positive")
            > nu(self.k as u64).expect("k is positive")
    }

    /// The real Grassmannian with the same `(k, n)` and the power `t` such
    /// that `[G_k(F^{n+k})] = [G_k(R^{n+k})]^t` in unoriented bordism.
    pub fn realify(&self) -> (GrassmannianDesc, u32) {
        (
            GrassmannianDesc {
                field: Field::R,
                k: self.k,
                n: self.n,
            },
            self.t(),
        )
    }

    /// Human-readable name such as `G_2(R^6)`.
    pub fn label(&self) -> String {
        format!("G_{}({}^{})", self.k, self.field, self.ambient())
    }
}

/// Text form `R:k=2,n=4`.
impl fmt::Display for GrassmannianDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:k={},n={}", self.field, self.k, self.n)
    }
}

impl FromStr for GrassmannianDesc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "malformed descriptor `{s}`, expected e.g. `R:k=2,n=4`"
            ))
        };
        let (field, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let field: Field = field.parse()?;
        let (k, n) = rest.split_once(',').ok_or_else(bad)?;
        let k = k
            .trim()
            .strip_prefix("k=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(bad)?;
        let n = n
            .trim()
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(bad)?;
        GrassmannianDesc::new(field, k, n)
    }
}

/// 2-adic valuation: the largest `e` with `2^e | m`.
pub fn nu(m: u64) -> Result<u32> {
    if m == 0 {
        return Err(Error::InvalidParameters("nu is undefined at 0".into()));
    }
    Ok(m.trailing_zeros())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_examples() {
        assert_eq!(nu(12).unwrap(), 2);
        assert_eq!(nu(1).unwrap(), 0);
        assert_eq!(nu(8).unwrap(), 3);
        assert!(nu(0).is_err());
    }

    #[test]
    fn nu_matches_repeated_division() {
        for m in 1..2000u64 {
            let mut e = 0;
            let mut x = m;
            while x % 2 == 0 {
                x /= 2;
                e += 1;
            }
            assert_eq!(nu(m).unwrap(), e);
        }
    }

    #[test]
    fn bounds_examples() {
        assert!(!GrassmannianDesc::real(1, 2).unwrap().bounds());
        assert!(GrassmannianDesc::real(1, 3).unwrap().bounds());
        assert!(!GrassmannianDesc::real(2, 4).unwrap().bounds());
        // k = n always bounds
        for k in 1..20 {
            assert!(GrassmannianDesc::real(k, k).unwrap().bounds());
        }
    }

    #[test]
    fn realify_examples() {
        let c = GrassmannianDesc::new(Field::C, 1, 2).unwrap();
        assert_eq!(c.realify(), (GrassmannianDesc::real(1, 2).unwrap(), 2));
        let h = GrassmannianDesc::new(Field::H, 1, 2).unwrap();
        assert_eq!(h.realify(), (GrassmannianDesc::real(1, 2).unwrap(), 4));
        let r = GrassmannianDesc::real(2, 4).unwrap();
        assert_eq!(r.realify(), (r, 1));
        assert_eq!(h.real_dimension(), 8);
    }

    #[test]
    fn descriptor_text_format() {
        let g: GrassmannianDesc = "R:k=2,n=4".parse().unwrap();
        assert_eq!(g, GrassmannianDesc::real(2, 4).unwrap());
        assert_eq!(g.to_string(), "R:k=2,n=4");
        let h: GrassmannianDesc = "H:k=1,n=2".parse().unwrap();
        assert_eq!(h.field, Field::H);
        assert_eq!(h.label(), "G_1(H^3)");
        assert!("Q:k=1,n=2".parse::<GrassmannianDesc>().is_err());
        assert!("R:k=0,n=2".parse::<GrassmannianDesc>().is_err());
        assert!("R:n=2,k=1".parse::<GrassmannianDesc>().is_err());
    }
}
