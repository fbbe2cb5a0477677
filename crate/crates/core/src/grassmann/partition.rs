use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// A partition of an integer, parts in weakly decreasing order.
///
/// Indexes the Stiefel-Whitney monomial `w_{p1} w_{p2} ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Fails unless `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameters(
                "partition parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters(format!(
                "partition parts must be listed in descending order, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Builds a partition from multiplicities: `mult[j]` copies of part `j + 1`.
    pub(crate) fn from_multiplicities(mult: &[u32]) -> Partition {
        let mut parts = Vec::new();
        for (j, &c) in mult.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(j as u32 + 1, c as usize));
        }
        Partition { parts }
    }
}

/// Comma-separated descending parts, e.g. `4,2,1,1`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Partition::new(Vec::new());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("malformed partition `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Number of partitions of `total` with every part at most `max_part`.
pub(crate) fn count_bounded(total: u32, max_part: u32) -> u64 {
    let total = total as usize;
    let max_part = (max_part as usize).min(total);
    // ways[t] over parts 1..=m, built up one part size at a time
    let mut ways = vec![0u64; total + 1];
    ways[0] = 1;
    for part in 1..=max_part {
        for t in part..=total {
            ways[t] += ways[t - part];
        }
    }
    ways[total]
}

pub fn partition_count(total: u32) -> u64 {
    count_bounded(total, total)
}

/// All partitions of `total` in descending lexicographic order:
/// `(d), (d-1, 1), (d-2, 2), (d-2, 1, 1), ...`.
pub fn partitions(total: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(total, total, &mut stack, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        stack.push(part);
        fill(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// The canonical partition list of one weight together with its inverse map.
#[derive(Debug)]
pub struct PartitionIndex {
    pub weight: u32,
    list: Vec<Partition>,
    positions: HashMap<Partition, usize>,
}

impl PartitionIndex {
    /// Shared per-weight instance.
    pub fn of(weight: u32) -> Arc<PartitionIndex> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<PartitionIndex>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(hit) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&weight) {
            return Arc::clone(hit);
        }
        let list = partitions(weight);
        let positions = list
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let built = Arc::new(PartitionIndex {
            weight,
            list,
            positions,
        });
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        Arc::clone(guard.entry(weight).or_insert(built))
    }

    pub fn list(&self) -> &[Partition] {
        &self.list
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.positions.get(p).copied()
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }
}
