//! Enumerating set partitions and their crossing statistics.

use zn_graded::partitions::{
    bell_number, bold_sigma, crossing_number, enumerate_divisible, enumerate_set_partitions,
    is_block_aligned, orbit_ordered, partition_type, restricted_crossing_number, sorting_number,
    OrderedSetPartition,
};

fn main() {
    println!("{:<16} {:<6} c  c0", "partition", "type");
    for p in enumerate_set_partitions(4) {
        println!(
            "{:<16} {:<6} {}  {}",
            p.to_string(),
            partition_type(&p).to_string(),
            crossing_number(&p),
            restricted_crossing_number(&p)
        );
    }
    println!("B_4 = {}", bell_number(4));

    let (m, n) = (2, 3);
    let family: Vec<_> = enumerate_divisible(m, n).collect();
    let aligned = family.iter().filter(|p| is_block_aligned(p, m, n)).count();
    println!("partitions of [6] with block sizes divisible by 3: {}, block-aligned: {aligned}", family.len());

    let p = OrderedSetPartition::new(5, vec![vec![1, 4], vec![2], vec![3, 5]]).unwrap();
    println!("orbit of {p} under the cyclic action:");
    for q in orbit_ordered(&p) {
        println!("  {q}  x = {}", sorting_number(&q));
    }
    println!("σ({p}) = {}", bold_sigma(&p));
}
