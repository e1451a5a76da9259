use super::{IntPartition, OrderedSetPartition, SetPartition};

/// Lexicographic walk over restricted growth strings of length `n`.
///
/// This is a lending cursor rather than an [`Iterator`] so that hot loops can
/// inspect the string without allocating. A fixed prefix pins the first
/// positions, which is how enumeration is split across workers.
#[derive(Clone, Debug)]
pub struct RgsIter {
    rgs: Vec<u8>,
    maxes: Vec<u8>,
    fixed: usize,
    fresh: bool,
    done: bool,
}

impl RgsIter {
    pub fn new(n: usize) -> Self {
        Self::with_prefix(n, &[])
    }

    /// Enumerates the completions of `prefix`, which must itself be a
    /// restricted growth string no longer than `n`.
    pub fn with_prefix(n: usize, prefix: &[u8]) -> Self {
        assert!(prefix.len() <= n, "prefix longer than the ground set");
        let mut rgs = vec![0u8; n];
        rgs[..prefix.len()].copy_from_slice(prefix);
        let mut maxes = vec![0u8; n];
        let mut m = 0u8;
        for (i, &g) in rgs.iter().enumerate() {
            assert!(i > 0 || g == 0, "restricted growth strings start at 0");
            assert!(i == 0 || g <= m + 1, "prefix is not a restricted growth string");
            m = m.max(g);
            maxes[i] = m;
        }
        RgsIter {
            rgs,
            maxes,
            fixed: prefix.len(),
            fresh: true,
            done: false,
        }
    }

    /// Returns the next string, or `None` once exhausted.
    pub fn advance(&mut self) -> Option<&[u8]> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(&self.rgs);
        }
        let n = self.rgs.len();
        let lo = self.fixed.max(1);
        for i in (lo..n).rev() {
            if self.rgs[i] <= self.maxes[i - 1] {
                self.rgs[i] += 1;
                self.maxes[i] = self.maxes[i - 1].max(self.rgs[i]);
                let m = self.maxes[i];
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.maxes[j] = m;
                }
                return Some(&self.rgs);
            }
        }
        self.done = true;
        None
    }
}

/// Iterator over all set partitions of `[n]` in restricted-growth-string
/// lexicographic order.
pub struct SetPartitions {
    inner: RgsIter,
}

impl SetPartitions {
    pub fn with_prefix(n: usize, prefix: &[u8]) -> Self {
        SetPartitions {
            inner: RgsIter::with_prefix(n, prefix),
        }
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;
    fn next(&mut self) -> Option<SetPartition> {
        self.inner.advance().map(SetPartition::from_rgs)
    }
}

/// Every partition of `[n]` exactly once; `n = 0` yields the empty partition.
pub fn enumerate_set_partitions(n: usize) -> SetPartitions {
    SetPartitions {
        inner: RgsIter::new(n),
    }
}

/// All restricted growth strings of length `min(depth, n)`, usable as
/// disjoint work units for [`SetPartitions::with_prefix`].
pub fn rgs_prefixes(n: usize, depth: usize) -> Vec<Vec<u8>> {
    let mut it = RgsIter::new(depth.min(n));
    let mut out = Vec::new();
    while let Some(p) = it.advance() {
        out.push(p.to_vec());
    }
    out
}

/// Partitions of `[mn]` all of whose blocks have size divisible by `n`.
pub fn enumerate_divisible(m: usize, n: usize) -> impl Iterator<Item = SetPartition> {
    assert!(n >= 1, "block-size divisor must be positive");
    enumerate_set_partitions(m * n).filter(move |p| p.block_sizes().all(|s| s % n == 0))
}

/// Partitions of `[mn]` in which each interval `J_k = {kn+1, …, (k+1)n}`
/// lies inside a single block. These are the images of partitions of `[m]`
/// under `i ↦ J_{i-1}`, so there are exactly `B_m` of them.
pub fn enumerate_block_aligned(m: usize, n: usize) -> impl Iterator<Item = SetPartition> {
    enumerate_set_partitions(m).map(move |p| {
        let blocks = p
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .flat_map(|&i| (i - 1) * n + 1..=i * n)
                    .collect::<Vec<_>>()
            })
            .collect();
        SetPartition::new(m * n, blocks).expect("interval blow-up is a partition")
    })
}

/// All orderings of all set partitions of `[n]` (the Fubini numbers count
/// them).
pub fn enumerate_ordered_partitions(n: usize) -> impl Iterator<Item = OrderedSetPartition> {
    enumerate_set_partitions(n).flat_map(move |p| {
        let blocks = p.blocks().to_vec();
        permutations(blocks.len()).into_iter().map(move |perm| {
            let parts = perm.iter().map(|&i| blocks[i].clone()).collect();
            OrderedSetPartition::new(n, parts).expect("reordering keeps a partition")
        })
    })
}

pub fn enumerate_ordered_with_parts(
    n: usize,
    parts: usize,
) -> impl Iterator<Item = OrderedSetPartition> {
    enumerate_set_partitions(n)
        .filter(move |p| p.num_blocks() == parts)
        .flat_map(move |p| {
            let blocks = p.blocks().to_vec();
            permutations(blocks.len()).into_iter().map(move |perm| {
                let parts = perm.iter().map(|&i| blocks[i].clone()).collect();
                OrderedSetPartition::new(n, parts).expect("reordering keeps a partition")
            })
        })
}

/// Permutations of `0..k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..k).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Integer partitions of `m`, from `(m)` down to `(1, …, 1)`.
pub fn enumerate_int_partitions(m: usize) -> Vec<IntPartition> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
        if rest == 0 {
            out.push(IntPartition::new(cur.clone()).unwrap());
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// Bell number `B_n` via the Bell triangle.
pub fn bell_number(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}
