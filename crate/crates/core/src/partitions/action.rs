//! The two cyclic actions: `σ` on ordered partitions of `[n]` and its lift to
//! partitions of `[mn]` with block sizes divisible by `n`.

use std::ops::RangeInclusive;

use super::{OrderedSetPartition, PartitionError, SetPartition};

/// Applies `j ↦ j + k (mod n)` elementwise, keeping the order of the parts.
pub fn rotate_labels(p: &OrderedSetPartition, k: i64) -> OrderedSetPartition {
    let n = p.ground_size() as i64;
    let shift = |e: usize| ((e as i64 - 1 + k).rem_euclid(n) + 1) as usize;
    let parts = p
        .parts()
        .iter()
        .map(|b| b.iter().map(|&e| shift(e)).collect())
        .collect();
    OrderedSetPartition::new(p.ground_size(), parts).expect("rotation is a bijection")
}

/// The generator of the ℤ_n action on ordered partitions of `[n]`.
///
/// The first part is rotated by one. The remaining parts are carried along
/// the order-preserving bijection from `B = [n] ∖ A₁` onto `σ(B)`.
pub fn bold_sigma(p: &OrderedSetPartition) -> OrderedSetPartition {
    let n = p.ground_size();
    let shift = |e: usize| e % n + 1;
    let first = &p.parts()[0];
    let rest: Vec<usize> = (1..=n).filter(|e| first.binary_search(e).is_err()).collect();
    let mut rest_image: Vec<usize> = rest.iter().map(|&e| shift(e)).collect();
    rest_image.sort_unstable();
    let theta = |e: usize| rest_image[rest.binary_search(&e).expect("element of B")];

    let mut parts = Vec::with_capacity(p.num_parts());
    parts.push(first.iter().map(|&e| shift(e)).collect());
    for part in &p.parts()[1..] {
        parts.push(part.iter().map(|&e| theta(e)).collect());
    }
    OrderedSetPartition::new(n, parts).expect("sigma maps partitions to partitions")
}

/// `J_k = {kn + 1, …, (k + 1)n}` for `0 ≤ k < m`.
pub fn interval_block(n: usize, k: usize) -> RangeInclusive<usize> {
    k * n + 1..=(k + 1) * n
}

fn interval_is_trivial(labels: &[u8], n: usize, k: usize) -> bool {
    let seg = &labels[k * n..(k + 1) * n];
    seg.iter().all(|&l| l == seg[0])
}

/// True iff every `J_k` is contained in a single block of `p`.
pub fn is_block_aligned(p: &SetPartition, m: usize, n: usize) -> bool {
    if p.ground_size() != m * n {
        return false;
    }
    let labels = p.labels();
    (0..m).all(|k| interval_is_trivial(&labels, n, k))
}

fn check_divisible(p: &SetPartition, n: usize) -> Result<usize, PartitionError> {
    let size = p.ground_size();
    if n == 0 || !size.is_multiple_of(n) || p.block_sizes().any(|s| s % n != 0) {
        return Err(PartitionError::NotDivisible { size, n });
    }
    Ok(size / n)
}

/// The lifted action on partitions of `[mn]` whose blocks have sizes
/// divisible by `n`.
///
/// Block-aligned partitions are fixed. Otherwise let `k₀` be the largest `k`
/// with `P|_{J_k}` nontrivial; the induced partition on `J_{k₀}`, with parts
/// ordered by the minima of the blocks they come from, is moved by
/// [`bold_sigma`] and every block keeps its pieces outside `J_{k₀}`.
pub fn bold_sigma_divisible(p: &SetPartition, n: usize) -> Result<SetPartition, PartitionError> {
    let m = check_divisible(p, n)?;
    let labels = p.labels();
    let Some(k0) = (0..m).rev().find(|&k| !interval_is_trivial(&labels, n, k)) else {
        return Ok(p.clone());
    };
    let window = interval_block(n, k0);
    let offset = k0 * n;

    // Blocks are already ordered by minimum, so the induced parts inherit it.
    let mut meets = Vec::new();
    let mut local_parts = Vec::new();
    for (i, b) in p.blocks().iter().enumerate() {
        let inside: Vec<usize> = b
            .iter()
            .filter(|e| window.contains(e))
            .map(|e| e - offset)
            .collect();
        if !inside.is_empty() {
            meets.push(i);
            local_parts.push(inside);
        }
    }
    debug_assert!(local_parts.len() >= 2);
    let local = OrderedSetPartition::new(n, local_parts).expect("induced partition of J_k0");
    let moved = bold_sigma(&local);

    let mut blocks: Vec<Vec<usize>> = p
        .blocks()
        .iter()
        .map(|b| b.iter().copied().filter(|e| !window.contains(e)).collect())
        .collect();
    for (&i, part) in meets.iter().zip(moved.parts()) {
        blocks[i].extend(part.iter().map(|e| e + offset));
    }
    SetPartition::new(p.ground_size(), blocks)
}

fn orbit_of<T: Clone + PartialEq>(start: &T, bound: usize, step: impl Fn(&T) -> T) -> Vec<T> {
    let mut out = vec![start.clone()];
    let mut cur = step(start);
    while cur != *start {
        assert!(out.len() < bound.max(1), "action does not return within {bound} steps");
        out.push(cur.clone());
        cur = step(&cur);
    }
    out
}

/// The orbit of `p` under [`bold_sigma`]; its length divides `n`.
pub fn orbit_ordered(p: &OrderedSetPartition) -> Vec<OrderedSetPartition> {
    orbit_of(p, p.ground_size(), bold_sigma)
}

/// The orbit of `p` under [`bold_sigma_divisible`]; its length divides `n`.
pub fn orbit_divisible(p: &SetPartition, n: usize) -> Result<Vec<SetPartition>, PartitionError> {
    check_divisible(p, n)?;
    Ok(orbit_of(p, n, |x| {
        bold_sigma_divisible(x, n).expect("the action preserves P_n")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_divisible, enumerate_ordered_partitions};

    fn op(n: usize, parts: &[&[usize]]) -> OrderedSetPartition {
        OrderedSetPartition::new(n, parts.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn sp(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotate_labels(&op(2, &[&[1], &[2]]), 1), op(2, &[&[2], &[1]]));
        let p = op(3, &[&[1, 2], &[3]]);
        assert_eq!(rotate_labels(&p, 3), p);
        assert_eq!(rotate_labels(&p, 1), op(3, &[&[2, 3], &[1]]));
        assert_eq!(rotate_labels(&p, -1), rotate_labels(&p, 2));
    }

    #[test]
    fn bold_sigma_worked_example() {
        let p = op(7, &[&[1, 5, 6], &[2, 7], &[3, 4]]);
        let s = bold_sigma(&p);
        assert_eq!(s, op(7, &[&[2, 6, 7], &[1, 5], &[3, 4]]));
        assert_eq!(s.labels(), vec![2, 1, 3, 3, 2, 1, 1]);
    }

    #[test]
    fn bold_sigma_has_order_n_and_fixes_one_part() {
        for n in 1..=6 {
            for p in enumerate_ordered_partitions(n) {
                let mut q = p.clone();
                for _ in 0..n {
                    q = bold_sigma(&q);
                }
                assert_eq!(q, p);
                assert_eq!(bold_sigma(&p) == p, p.num_parts() == 1, "{p}");
            }
        }
    }

    #[test]
    fn two_part_orbit_on_two_points() {
        let orbit = orbit_ordered(&op(2, &[&[1], &[2]]));
        assert_eq!(orbit.len(), 2);
    }

    #[test]
    fn block_alignment() {
        assert!(is_block_aligned(&sp(4, &[&[1, 2], &[3, 4]]), 2, 2));
        assert!(!is_block_aligned(&sp(4, &[&[1, 3], &[2, 4]]), 2, 2));
    }

    #[test]
    fn divisible_action_trace() {
        // k0 = 1: J_1 = {3,4} splits as ({3} from {1,3}, {4} from {2,4}).
        // sigma on ({1},{2}) gives ({2},{1}), so 3 and 4 swap blocks.
        let p = sp(4, &[&[1, 3], &[2, 4]]);
        let s = bold_sigma_divisible(&p, 2).unwrap();
        assert_eq!(s, sp(4, &[&[1, 4], &[2, 3]]));
        assert_eq!(bold_sigma_divisible(&s, 2).unwrap(), p);
    }

    #[test]
    fn divisible_action_fixes_exactly_the_aligned() {
        for (m, n) in [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3)] {
            for p in enumerate_divisible(m, n) {
                let s = bold_sigma_divisible(&p, n).unwrap();
                assert_eq!(s == p, is_block_aligned(&p, m, n));
                assert!(s.block_sizes().all(|b| b % n == 0));
                let orbit = orbit_divisible(&p, n).unwrap();
                assert_eq!(n % orbit.len(), 0);
            }
        }
    }

    #[test]
    fn divisible_action_rejects_other_partitions() {
        let p = sp(4, &[&[1], &[2, 3, 4]]);
        assert!(matches!(
            bold_sigma_divisible(&p, 2),
            Err(PartitionError::NotDivisible { .. })
        ));
    }
}
