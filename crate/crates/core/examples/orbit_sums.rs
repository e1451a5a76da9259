//! Orbit sums of q^{x(P)} and q^{c0(P)} at roots of unity.

use zn_graded::cyclo::primitive_roots;
use zn_graded::partitions::{
    bell_number, divisible_orbit_sum, enumerate_divisible, enumerate_ordered_partitions,
    bold_sigma_orbit_sum, is_block_aligned, weighted_c0_sum,
};
use num_traits::Zero;
use zn_graded::root_of_unity;

fn main() {
    let n = 5;
    for q in primitive_roots(n as u64) {
        let nonzero = enumerate_ordered_partitions(n)
            .filter(|p| p.num_parts() >= 2)
            .filter(|p| !bold_sigma_orbit_sum(p, &q).is_zero())
            .count();
        println!("n = {n}, q = {q}: {nonzero} nonvanishing orbit sums");
    }

    for (n, m) in [(2, 3), (3, 2), (4, 2)] {
        let q = root_of_unity(n as u64, 1);
        let total = weighted_c0_sum(enumerate_divisible(m, n), &q, None);
        println!("n = {n}, m = {m}: Σ q^c0 = {total}, B_{m} = {}", bell_number(m));
    }

    // At q = -1 with n = 4 the root is proper but not primitive, and
    // nontrivial orbits need not cancel.
    let (n, m) = (4, 2);
    let q = root_of_unity(4, 2);
    for p in enumerate_divisible(m, n).filter(|p| !is_block_aligned(p, m, n)).take(6) {
        println!("  {p}: {}", divisible_orbit_sum(&p, n, &q).unwrap());
    }
    println!("n = 4, q = -1: Σ q^c0 = {}", weighted_c0_sum(enumerate_divisible(m, n), &q, None));
}
