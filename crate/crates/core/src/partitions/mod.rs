//! Set partitions, ordered set partitions and their crossing statistics.
//!
//! Elements of the ground set are `1..=N`. A [`SetPartition`] is always kept
//! in canonical form: blocks sorted by their minimum, elements ascending
//! within each block. Enumeration walks restricted growth strings in
//! lexicographic order, which visits blocks-by-minimum labellings directly.

mod action;
mod enumerate;
mod stats;
mod sums;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use action::{
    bold_sigma, bold_sigma_divisible, interval_block, is_block_aligned, orbit_divisible,
    orbit_ordered, rotate_labels,
};
pub use enumerate::{
    bell_number, enumerate_block_aligned, enumerate_divisible, enumerate_int_partitions,
    enumerate_ordered_partitions, enumerate_ordered_with_parts, enumerate_set_partitions,
    rgs_prefixes, RgsIter, SetPartitions,
};
pub use stats::{
    c0_from_rgs, c0_pair, crossing_number, induced_partition, left_reduced_crossings,
    partition_type, restricted_crossing_number, sorting_number,
};
pub use sums::{
    bold_sigma_orbit_sum, divisible_orbit_sum, rotation_orbit_sum, weighted_c0_sum, PowerSum,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("blocks do not partition [{0}]")]
    NotAPartition(usize),
    #[error("empty subset")]
    EmptySubset,
    #[error("subset is not contained in [{0}]")]
    SubsetOutOfRange(usize),
    #[error("partition of [{size}] is not in P_{n}: every block size must be a multiple of {n}")]
    NotDivisible { size: usize, n: usize },
    #[error("invalid integer partition `{0}`")]
    BadIntPartition(String),
}

fn validate_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<(), PartitionError> {
    let mut seen = vec![false; n + 1];
    let mut count = 0;
    for b in blocks {
        if b.is_empty() {
            return Err(PartitionError::NotAPartition(n));
        }
        for &e in b {
            if e == 0 || e > n || seen[e] {
                return Err(PartitionError::NotAPartition(n));
            }
            seen[e] = true;
            count += 1;
        }
    }
    if count != n {
        return Err(PartitionError::NotAPartition(n));
    }
    Ok(())
}

/// An unordered partition of `[N]` in canonical blocks-by-minimum form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    ground_size: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(ground_size: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        validate_blocks(ground_size, &blocks)?;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition {
            ground_size,
            blocks,
        })
    }

    /// Builds the partition whose restricted growth string is `rgs`
    /// (0-based block labels, `rgs[i] ≤ 1 + max(rgs[..i])`).
    pub fn from_rgs(rgs: &[u8]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &label) in rgs.iter().enumerate() {
            let label = label as usize;
            if label == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[label].push(i + 1);
        }
        SetPartition {
            ground_size: rgs.len(),
            blocks,
        }
    }

    /// The single-block partition of `[n]`.
    pub fn one_block(n: usize) -> Self {
        SetPartition {
            ground_size: n,
            blocks: if n == 0 { vec![] } else { vec![(1..=n).collect()] },
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// `labels()[e - 1]` is the (0-based, by-minimum) index of the block
    /// containing `e`. This is the restricted growth string.
    pub fn labels(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.ground_size];
        for (i, b) in self.blocks.iter().enumerate() {
            for &e in b {
                out[e - 1] = i as u8;
            }
        }
        out
    }

    pub fn block_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().map(Vec::len)
    }

    /// Relabels every element by `e ↦ perm(e)` and re-canonicalizes.
    pub fn map_elements(&self, perm: impl Fn(usize) -> usize) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&e| perm(e)).collect())
            .collect();
        SetPartition::new(self.ground_size, blocks).expect("relabeling must be a bijection")
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.blocks.serialize(s)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, e) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// A sequence of disjoint nonempty blocks covering `[n]`; the order of the
/// parts is significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    ground_size: usize,
    parts: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(ground_size: usize, mut parts: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        validate_blocks(ground_size, &parts)?;
        for p in &mut parts {
            p.sort_unstable();
        }
        Ok(OrderedSetPartition { ground_size, parts })
    }

    /// From a surjection `f : [n] → [s]`, given as `labels[x - 1] = f(x)`
    /// with values in `1..=s`.
    pub fn from_labels(labels: &[usize]) -> Result<Self, PartitionError> {
        let n = labels.len();
        let s = labels.iter().copied().max().unwrap_or(0);
        let mut parts = vec![Vec::new(); s];
        for (i, &l) in labels.iter().enumerate() {
            if l == 0 {
                return Err(PartitionError::NotAPartition(n));
            }
            parts[l - 1].push(i + 1);
        }
        Self::new(n, parts)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The map `f_P`: `labels()[x - 1] = j` iff `x ∈ A_j` (1-based).
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.ground_size];
        for (j, p) in self.parts.iter().enumerate() {
            for &e in p {
                out[e - 1] = j + 1;
            }
        }
        out
    }

    /// Forgets the order of the parts.
    pub fn unordered(&self) -> SetPartition {
        SetPartition::new(self.ground_size, self.parts.clone()).expect("valid by construction")
    }
}

impl Serialize for OrderedSetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let inner: Vec<String> = b.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", inner.join(","))?;
        }
        write!(f, ")")
    }
}

/// An integer partition λ₁ ≥ λ₂ ≥ … ≥ λ_r > 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPartition {
    parts: Vec<usize>,
}

impl IntPartition {
    /// Sorts the parts into weakly decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::BadIntPartition(format!("{parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `mλ`: every part multiplied by `m`.
    pub fn scale(&self, m: usize) -> Self {
        IntPartition {
            parts: self.parts.iter().map(|p| p * m).collect(),
        }
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Parses `4,4` or `3,1,1`.
impl FromStr for IntPartition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::BadIntPartition(s.to_string()))?;
        IntPartition::new(parts).map_err(|_| PartitionError::BadIntPartition(s.to_string()))
    }
}
