//! Classical, free and q-cumulants from one engine.

use zn_graded::cumulants::{
    cumulants_from_moments, moments_from_cumulants, random_divisible_moments,
    verify_alpha_equals_beta, CumulantSequence, MomentSequence,
};
use zn_graded::poly::RatPoly;
use zn_graded::scalar::rat_int;
use zn_graded::{root_of_unity, CycloNum, Rational, Ring};
use rand::SeedableRng;

fn main() {
    // μ4 with only α2 = 1, as a polynomial in q.
    let alpha = CumulantSequence::new(
        vec![RatPoly::from_ints(&[0]), RatPoly::from_ints(&[1]), RatPoly::from_ints(&[0]), RatPoly::from_ints(&[0])],
        RatPoly::x(),
    )
    .unwrap();
    let mu = moments_from_cumulants(&alpha, 4).unwrap();
    println!("α2 = 1: μ2 = {}, μ4 = {}", mu.get(2), mu.get(4));

    // Gaussian moments have a single classical cumulant and many free ones.
    let gauss: Vec<Rational> = [0, 1, 0, 3, 0, 15, 0, 105].into_iter().map(rat_int).collect();
    let gauss = MomentSequence::new(gauss).unwrap();
    for (name, q) in [("classical", 1), ("free", 0)] {
        let a = cumulants_from_moments(&gauss, &Rational::from_i64(q), 8).unwrap();
        let shown: Vec<String> = a.values().iter().map(|x| x.to_string()).collect();
        println!("{name:>9} cumulants of N(0,1): {}", shown.join(", "));
    }

    // q-cumulants at a primitive cube root on moments supported on 3ℕ.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let mu = random_divisible_moments(&mut rng, 3, 12).map(|r| CycloNum::from_rational(r.clone()));
    let report = verify_alpha_equals_beta(&mu, 3, &root_of_unity(3, 1), 12).unwrap();
    for row in &report.rows {
        println!("α_{} = {}   β_{} = {}", 3 * row.k, row.alpha_nk, row.k, row.beta_k);
    }
}
