//! R-type transforms on truncated power series.

use zn_graded::cumulants::MomentSequence;
use zn_graded::scalar::rat_int;
use zn_graded::series::{
    graded_log_formula, graded_r_transform, r0_relation_residual, r0_transform, r1_transform,
    FormalSeries,
};
use zn_graded::{root_of_unity, CycloNum, Rational};

fn show<F: zn_graded::Field + std::fmt::Display>(s: &FormalSeries<F>) -> String {
    let terms: Vec<String> = s
        .support()
        .into_iter()
        .map(|k| format!("({}) z^{k}", s.coeff(k)))
        .collect();
    if terms.is_empty() { "0".into() } else { terms.join(" + ") }
}

fn main() {
    let ints = |v: &[i64]| MomentSequence::new(v.iter().map(|&x| rat_int(x)).collect::<Vec<Rational>>()).unwrap();

    let gauss = ints(&[0, 1, 0, 3, 0, 15, 0, 105]);
    println!("R1[Gaussian] = {}", show(&r1_transform(&gauss, 8).unwrap()));

    let semicircle = ints(&[0, 1, 0, 2, 0, 5, 0, 14]);
    let r0 = r0_transform(&semicircle, 8).unwrap();
    println!("R0[semicircle] = {}", show(&r0));
    println!("residual of the Cauchy relation: {}", show(&r0_relation_residual(&semicircle, &r0).unwrap()));

    let f = FormalSeries::new(vec![rat_int(0), rat_int(1), rat_int(1), rat_int(0), rat_int(0)]);
    println!("compositional inverse of z + z^2: {}", show(&f.comp_inverse().unwrap()));

    // Moments supported on multiples of 4, as for e1 in a Clifford model.
    let n = 4;
    let mu = MomentSequence::new(
        (1..=12).map(|k| CycloNum::from_int(if k % n == 0 { k as i64 } else { 0 })).collect(),
    )
    .unwrap();
    let q = root_of_unity(n as u64, 1);
    for delta in 0..n as i64 {
        let r = graded_r_transform(&mu, delta, n, &q, 12);
        let log = graded_log_formula(&mu, delta, n, 12);
        match (r, log) {
            (Ok(r), Ok(log)) => println!("δ = {delta}: r = {}, agrees with log formula: {}", show(&r), r == log),
            (Err(e), _) | (_, Err(e)) => println!("δ = {delta}: {e}"),
        }
    }
}
