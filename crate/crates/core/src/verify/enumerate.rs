use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::grassmann::{Field, GrassmannianDesc};

/// Parity class of a real member: `O` when `n + k` is odd, `E` when even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Block {
    O,
    E,
}

impl Block {
    pub fn of(g: &GrassmannianDesc) -> Option<Block> {
        if !g.is_real() {
            return None;
        }
        Some(if g.ambient() % 2 == 1 {
            Block::O
        } else {
            Block::E
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Block::O => "O",
            Block::E => "E",
        }
    }
}

/// The non-bounding Grassmannians of dimension `d` with `k < n`.
///
/// Real members come first, the `n+k` odd block before the even block, each
/// in descending `n + k`; then complex and quaternionic members, also by
/// descending `n + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdEnumeration {
    pub d: u32,
    pub members: Vec<GrassmannianDesc>,
    pub o_block: Range<usize>,
    pub e_block: Range<usize>,
}

impl GdEnumeration {
    pub fn real_members(&self) -> &[GrassmannianDesc] {
        &self.members[self.o_block.start..self.e_block.end]
    }

    pub fn o_members(&self) -> &[GrassmannianDesc] {
        &self.members[self.o_block.clone()]
    }

    pub fn e_members(&self) -> &[GrassmannianDesc] {
        &self.members[self.e_block.clone()]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Members over one field, by descending `n + k`.
fn members_over(d: u32, field: Field) -> Vec<GrassmannianDesc> {
    let t = field.t();
    if d == 0 || !d.is_multiple_of(t) {
        return Vec::new();
    }
    let m = d / t;
    // For fixed n k = m with k < n, n + k decreases as k grows.
    (1..)
        .take_while(|&k| k * k < m)
        .filter(|&k| m.is_multiple_of(k))
        .map(|k| GrassmannianDesc { field, k, n: m / k })
        .filter(|g| !g.bounds())
        .collect()
}

pub fn enumerate_gd(d: u32, fields: &[Field]) -> GdEnumeration {
    let mut members = Vec::new();
    let mut o_block = 0..0;
    let mut e_block = 0..0;
    if d.is_multiple_of(2) {
        if fields.contains(&Field::R) {
            let real = members_over(d, Field::R);
            let (odd, even): (Vec<_>, Vec<_>) =
                real.into_iter().partition(|g| g.ambient() % 2 == 1);
            o_block = 0..odd.len();
            e_block = odd.len()..odd.len() + even.len();
            members.extend(odd);
            members.extend(even);
        }
        for field in [Field::C, Field::H] {
            if fields.contains(&field) {
                members.extend(members_over(d, field));
            }
        }
    }
    GdEnumeration {
        d,
        members,
        o_block,
        e_block,
    }
}

/// Real members split by the parity of `n + k`: `(O(d), E(d))`.
pub fn split_even_odd(e: &GdEnumeration) -> (Vec<GrassmannianDesc>, Vec<GrassmannianDesc>) {
    (e.o_members().to_vec(), e.e_members().to_vec())
}
