//! Exact arithmetic with roots of unity.

use zn_graded::{root_of_unity, CycloNum};

fn main() {
    let z = root_of_unity(6, 1);
    let w = root_of_unity(4, 1);
    println!("ζ6 = {z}, ζ6^2 = {}, ζ6^3 = {}", z.powi(2).unwrap(), z.powi(3).unwrap());

    // Mixed conductors meet in the lcm field.
    let s = &z + &w;
    println!("ζ6 + ζ4 = {s}  (conductor {})", s.conductor());
    println!("1 / (ζ6 + ζ4) = {}", s.inverse().unwrap());

    for k in 0..6 {
        let q = root_of_unity(6, k);
        println!("order of ζ6^{k}: {}", q.unity_order().unwrap());
    }

    let sum = (0..5).fold(CycloNum::from_int(0), |acc, k| &acc + &root_of_unity(5, k));
    println!("1 + ζ5 + … + ζ5^4 = {sum}");

    let parsed: CycloNum = "zeta:12:5".parse().unwrap();
    println!("zeta:12:5 as JSON: {}", serde_json::to_string(&parsed).unwrap());
}
