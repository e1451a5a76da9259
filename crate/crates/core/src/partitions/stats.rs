use super::{IntPartition, OrderedSetPartition, PartitionError, SetPartition};

/// `c(P)`: quadruples `a₁ < b₁ < a₂ < b₂` with the `a`'s in one block and the
/// `b`'s in another. Direct quadruple scan.
pub fn crossing_number(p: &SetPartition) -> u64 {
    let g = p.labels();
    let n = g.len();
    let mut count = 0;
    for i in 0..n {
        for k in i + 2..n {
            if g[k] != g[i] {
                continue;
            }
            for j in i + 1..k {
                if g[j] == g[i] {
                    continue;
                }
                count += g[k + 1..].iter().filter(|&&x| x == g[j]).count() as u64;
            }
        }
    }
    count
}

/// Crossings `a₁ < b₁ < a₂ < b₂` in which `a₁` and `b₁` are the minima of
/// their blocks, counted by direct scan. Reference for
/// [`restricted_crossing_number`].
pub fn left_reduced_crossings(p: &SetPartition) -> u64 {
    let g = p.labels();
    let n = g.len();
    let is_min = |pos: usize| g[..pos].iter().all(|&x| x != g[pos]);
    let mut count = 0;
    for i in 0..n {
        if !is_min(i) {
            continue;
        }
        for j in i + 1..n {
            if g[j] == g[i] || !is_min(j) {
                continue;
            }
            for k in j + 1..n {
                if g[k] != g[i] {
                    continue;
                }
                count += g[k + 1..].iter().filter(|&&x| x == g[j]).count() as u64;
            }
        }
    }
    count
}

/// `c₀(A, B) = |{(a, b) ∈ A×B : min B < a < b}|` when `min A < min B`,
/// else 0. Both blocks must be sorted and nonempty.
pub fn c0_pair(a: &[usize], b: &[usize]) -> u64 {
    let (min_a, min_b) = (a[0], b[0]);
    if min_b < min_a {
        return 0;
    }
    let mut count = 0;
    for &x in a.iter().filter(|&&x| x > min_b) {
        count += b.iter().filter(|&&y| y > x).count() as u64;
    }
    count
}

/// `c₀(P) = Σ_{i≠j} c₀(A_i, A_j)`, the restricted crossing number.
pub fn restricted_crossing_number(p: &SetPartition) -> u64 {
    let blocks = p.blocks();
    let mut total = 0;
    for (i, a) in blocks.iter().enumerate() {
        for (j, b) in blocks.iter().enumerate() {
            if i != j {
                total += c0_pair(a, b);
            }
        }
    }
    total
}

/// `c₀` straight from a restricted growth string. Since labels are assigned
/// in order of block minima, `g[a] < g[b]` is exactly `min A < min B`.
pub fn c0_from_rgs(g: &[u8]) -> u32 {
    let mut first = [usize::MAX; 64];
    for (i, &l) in g.iter().enumerate() {
        if first[l as usize] == usize::MAX {
            first[l as usize] = i;
        }
    }
    let mut count = 0;
    for a in 0..g.len() {
        let ga = g[a];
        for &gb in &g[a + 1..] {
            if ga < gb && first[gb as usize] < a {
                count += 1;
            }
        }
    }
    count
}

/// `x(P) = |{(x, y) : x < y, f_P(x) < f_P(y)}|`.
pub fn sorting_number(p: &OrderedSetPartition) -> u64 {
    let f = p.labels();
    let mut count = 0;
    for (i, &fx) in f.iter().enumerate() {
        count += f[i + 1..].iter().filter(|&&fy| fx < fy).count() as u64;
    }
    count
}

/// `P|_T`, relabelled along the order isomorphism `T → [|T|]`.
pub fn induced_partition(p: &SetPartition, subset: &[usize]) -> Result<SetPartition, PartitionError> {
    let mut t = subset.to_vec();
    t.sort_unstable();
    t.dedup();
    if t.is_empty() {
        return Err(PartitionError::EmptySubset);
    }
    if t[0] == 0 || *t.last().unwrap() > p.ground_size() {
        return Err(PartitionError::SubsetOutOfRange(p.ground_size()));
    }
    let blocks = p
        .blocks()
        .iter()
        .map(|b| {
            b.iter()
                .filter_map(|e| t.binary_search(e).ok().map(|i| i + 1))
                .collect::<Vec<_>>()
        })
        .filter(|b| !b.is_empty())
        .collect();
    SetPartition::new(t.len(), blocks)
}

/// Block sizes listed in weakly decreasing order.
pub fn partition_type(p: &SetPartition) -> IntPartition {
    IntPartition::new(p.block_sizes().collect()).expect("blocks are nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_set_partitions;

    fn sp(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(crossing_number(&sp(4, &[&[1, 3], &[2, 4]])), 1);
        assert_eq!(crossing_number(&sp(4, &[&[1, 2], &[3, 4]])), 0);
        assert_eq!(crossing_number(&sp(6, &[&[1, 4], &[2, 6], &[3, 5]])), 2);
    }

    #[test]
    fn restricted_crossing_examples() {
        let p = sp(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(restricted_crossing_number(&p), 1);
        assert_eq!(left_reduced_crossings(&p), 1);
        // {1,4},{2,6},{3,5}: pairwise c0({1,4},{2,6}) counts a=4,b=6;
        // c0({1,4},{3,5}) counts a=4,b=5; c0({2,6},{3,5}) has no a>3 with b>a.
        let q = sp(6, &[&[1, 4], &[2, 6], &[3, 5]]);
        assert_eq!(restricted_crossing_number(&q), 2);
        assert_eq!(left_reduced_crossings(&q), 2);
    }

    #[test]
    fn restricted_differs_from_full() {
        // Crossings (1,2,3,4) and (2,3,4,5); only the first is left reduced.
        let p = sp(5, &[&[1, 3, 5], &[2, 4]]);
        assert_eq!(crossing_number(&p), 2);
        assert_eq!(restricted_crossing_number(&p), 1);
    }

    #[test]
    fn rgs_fast_path_agrees() {
        for n in 0..=8 {
            for p in enumerate_set_partitions(n) {
                assert_eq!(c0_from_rgs(&p.labels()) as u64, restricted_crossing_number(&p));
            }
        }
    }

    #[test]
    fn sorting_examples() {
        let p = OrderedSetPartition::new(2, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(sorting_number(&p), 1);
        let one = OrderedSetPartition::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(sorting_number(&one), 0);
        // f = (1,2,3,3,1,1,2): increasing pairs by hand.
        // x=1(f1): y with f>1 -> 2,3,4,7 = 4; x=2(f2): 3,4 = 2; x=3,4 (f3): 0;
        // x=5(f1): 7 = 1; x=6(f1): 7 = 1. Total 8.
        let ex = OrderedSetPartition::new(7, vec![vec![1, 5, 6], vec![2, 7], vec![3, 4]]).unwrap();
        assert_eq!(sorting_number(&ex), 8);
    }

    #[test]
    fn induced_examples() {
        let p = sp(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(induced_partition(&p, &[1, 2]).unwrap(), sp(2, &[&[1], &[2]]));
        assert_eq!(induced_partition(&p, &[1, 2, 3, 4]).unwrap(), p);
        let q = sp(5, &[&[1, 2, 5], &[3, 4]]);
        assert_eq!(induced_partition(&q, &[2, 3, 5]).unwrap(), sp(3, &[&[1, 3], &[2]]));
        assert_eq!(induced_partition(&q, &[]), Err(PartitionError::EmptySubset));
        assert!(induced_partition(&q, &[6]).is_err());
    }

    #[test]
    fn types() {
        assert_eq!(partition_type(&sp(4, &[&[1, 3], &[2, 4]])).parts(), &[2, 2]);
        assert_eq!(partition_type(&SetPartition::one_block(5)).parts(), &[5]);
        assert_eq!(partition_type(&sp(5, &[&[1, 2, 5], &[3], &[4]])).parts(), &[3, 1, 1]);
    }
}
