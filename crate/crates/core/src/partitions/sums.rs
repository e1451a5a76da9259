use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{
    bold_sigma, bold_sigma_divisible, partition_type, restricted_crossing_number, rotate_labels,
    sorting_number, IntPartition, OrderedSetPartition, PartitionError, SetPartition,
};
use crate::cyclo::CycloNum;
use crate::scalar::Ring;

/// Evaluates `Σ q^{e_i}` exactly. For a root of unity the exponents are
/// bucketed by residue mod its order, so a sum over millions of terms costs
/// at most `order` field operations.
#[derive(Clone, Debug)]
pub struct PowerSum {
    q: CycloNum,
    powers: Option<Vec<CycloNum>>,
}

impl PowerSum {
    pub fn new(q: &CycloNum) -> Self {
        let powers = q.unity_order().ok().map(|d| {
            let mut v = Vec::with_capacity(d as usize);
            let mut cur = CycloNum::one();
            for _ in 0..d {
                v.push(cur.clone());
                cur = &cur * q;
            }
            v
        });
        PowerSum {
            q: q.clone(),
            powers,
        }
    }

    pub fn q(&self) -> &CycloNum {
        &self.q
    }

    pub fn power(&self, e: u64) -> CycloNum {
        match &self.powers {
            Some(p) => p[(e % p.len() as u64) as usize].clone(),
            None => Ring::pow(&self.q, e),
        }
    }

    pub fn sum(&self, exponents: impl IntoIterator<Item = u64>) -> CycloNum {
        match &self.powers {
            Some(p) => {
                let d = p.len() as u64;
                let mut hist = vec![0i64; p.len()];
                for e in exponents {
                    hist[(e % d) as usize] += 1;
                }
                hist.iter()
                    .zip(p)
                    .filter(|(c, _)| **c != 0)
                    .fold(CycloNum::zero(), |acc, (&c, qp)| {
                        acc + CycloNum::from_int(c) * qp.clone()
                    })
            }
            None => {
                let mut hist: BTreeMap<u64, i64> = BTreeMap::new();
                for e in exponents {
                    *hist.entry(e).or_default() += 1;
                }
                hist.into_iter().fold(CycloNum::zero(), |acc, (e, c)| {
                    acc + CycloNum::from_int(c) * Ring::pow(&self.q, e)
                })
            }
        }
    }
}

/// `Σ_{P ∈ family} q^{c₀(P)}`, optionally restricted to partitions of the
/// given type.
pub fn weighted_c0_sum(
    family: impl IntoIterator<Item = SetPartition>,
    q: &CycloNum,
    type_filter: Option<&IntPartition>,
) -> CycloNum {
    let ps = PowerSum::new(q);
    ps.sum(
        family
            .into_iter()
            .filter(|p| type_filter.is_none_or(|t| partition_type(p) == *t))
            .map(|p| restricted_crossing_number(&p)),
    )
}

/// `Σ_{k=0}^{n-1} q^{x(σ^k(P))}` for the plain cyclic relabelling.
pub fn rotation_orbit_sum(p: &OrderedSetPartition, q: &CycloNum) -> CycloNum {
    let n = p.ground_size() as i64;
    PowerSum::new(q).sum((0..n).map(|k| sorting_number(&rotate_labels(p, k))))
}

/// `Σ_{k=0}^{n-1} q^{x(𝛔^k(P))}` for the ordered-partition action.
pub fn bold_sigma_orbit_sum(p: &OrderedSetPartition, q: &CycloNum) -> CycloNum {
    let mut cur = p.clone();
    let mut exps = Vec::with_capacity(p.ground_size());
    for _ in 0..p.ground_size() {
        exps.push(sorting_number(&cur));
        cur = bold_sigma(&cur);
    }
    PowerSum::new(q).sum(exps)
}

/// `Σ_{k=0}^{n-1} q^{c₀(𝛔^k(P))}` for the action on `P_n([mn])`.
pub fn divisible_orbit_sum(
    p: &SetPartition,
    n: usize,
    q: &CycloNum,
) -> Result<CycloNum, PartitionError> {
    let mut cur = p.clone();
    let mut exps = Vec::with_capacity(n);
    for _ in 0..n {
        exps.push(restricted_crossing_number(&cur));
        cur = bold_sigma_divisible(&cur, n)?;
    }
    Ok(PowerSum::new(q).sum(exps))
}
