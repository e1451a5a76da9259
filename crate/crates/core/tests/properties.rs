mod common;

use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{blocks_of, crossings, gcd, restricted_crossings, series_log, Q};
use zn_graded::algebra::{AlgebraElement, AlgebraSpec};
use zn_graded::cumulants::{cumulants_from_moments, moments_from_cumulants, MomentSequence};
use zn_graded::partitions::{
    bold_sigma, c0_from_rgs, crossing_number, orbit_ordered, restricted_crossing_number,
    OrderedSetPartition, SetPartition,
};
use zn_graded::scalar::rat;
use zn_graded::series::{r1_transform, FormalSeries};
use zn_graded::{root_of_unity, CycloNum, Rational};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(a, b)| rat(a, b))
}

fn cyclo(conductor: u64) -> impl Strategy<Value = CycloNum> {
    proptest::collection::vec(small_rat(), conductor as usize)
        .prop_map(move |c| CycloNum::from_coeffs(conductor, c).unwrap())
}

fn conductor() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 4, 5, 6, 8, 12])
}

/// Restricted growth strings of length 1..=9.
fn rgs() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0usize..9, 1..=9).prop_map(|raw| {
        let mut out = Vec::with_capacity(raw.len());
        let mut max = 0;
        for (i, r) in raw.into_iter().enumerate() {
            let l = if i == 0 { 0 } else { r % (max + 2) };
            max = max.max(l);
            out.push(l);
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((n, a, b, c) in conductor().prop_flat_map(|n| (Just(n), cyclo(n), cyclo(n), cyclo(n)))) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !a.is_zero() {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, CycloNum::from_int(1));
        }
        // Embedding into a multiple of the conductor is a ring map.
        let big = 2 * n;
        prop_assert_eq!((&a * &b).embed(big), &a.embed(big) * &b.embed(big));
        prop_assert_eq!((&a + &b).embed(big), &a.embed(big) + &b.embed(big));
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<CycloNum>(&json).unwrap(), a);
    }

    #[test]
    fn mixed_conductors_meet_in_the_lcm(a in cyclo(4), b in cyclo(6)) {
        let s = &a + &b;
        prop_assert_eq!(12 % s.conductor(), 0);
        prop_assert_eq!(s - b.clone(), a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn root_orders(n in 1u64..=24, k in -30i64..30) {
        let z = root_of_unity(n, k);
        let want = n / gcd(k.rem_euclid(n as i64) as usize, n as usize) as u64;
        prop_assert_eq!(z.unity_order().unwrap(), want);
        prop_assert_eq!(format!("zeta:{n}:{k}").parse::<CycloNum>().unwrap(), z);
    }

    #[test]
    fn geometric_sums(n in 2u64..=16, j in 1i64..40) {
        let q = root_of_unity(n, j);
        let mut sum = CycloNum::from_int(0);
        let mut p = CycloNum::from_int(1);
        for _ in 0..n {
            sum = &sum + &p;
            p = &p * &q;
        }
        let want = if j % n as i64 == 0 { n as i64 } else { 0 };
        prop_assert_eq!(sum, CycloNum::from_int(want));
    }

    #[test]
    fn statistics_match_definitions(g in rgs()) {
        let p = SetPartition::new(g.len(), blocks_of(&g)).unwrap();
        prop_assert_eq!(crossing_number(&p), crossings(&g));
        prop_assert_eq!(restricted_crossing_number(&p), restricted_crossings(&blocks_of(&g)));
        let g8: Vec<u8> = g.iter().map(|&x| x as u8).collect();
        prop_assert_eq!(c0_from_rgs(&g8) as u64, restricted_crossings(&blocks_of(&g)));
    }

    #[test]
    fn crossing_number_is_rotation_invariant(g in rgs()) {
        let n = g.len();
        let p = SetPartition::new(n, blocks_of(&g)).unwrap();
        let rotated = p.map_elements(|e| e % n + 1);
        prop_assert_eq!(crossing_number(&rotated), crossing_number(&p));
    }

    #[test]
    fn sigma_orbits_divide_n(raw in proptest::collection::vec(0usize..7, 2..=7)) {
        // Compress arbitrary labels to an onto labelling.
        let mut seen: Vec<usize> = raw.clone();
        seen.sort_unstable();
        seen.dedup();
        let labels: Vec<usize> = raw.iter().map(|x| seen.binary_search(x).unwrap() + 1).collect();
        let p = OrderedSetPartition::from_labels(&labels).unwrap();
        let orbit = orbit_ordered(&p);
        prop_assert_eq!(p.ground_size() % orbit.len(), 0);
        let mut cur = p.clone();
        for _ in 0..p.ground_size() {
            cur = bold_sigma(&cur);
        }
        prop_assert_eq!(cur, p);
    }

    #[test]
    fn cumulant_conversion_is_bijective(
        mu in proptest::collection::vec(small_rat(), 1..=8),
        which in 0usize..4,
    ) {
        let q = [CycloNum::from_int(1), CycloNum::from_int(0), root_of_unity(3, 1), root_of_unity(4, 1)][which].clone();
        let k = mu.len();
        let seq = MomentSequence::new(mu.iter().cloned().map(CycloNum::from_rational).collect()).unwrap();
        let alpha = cumulants_from_moments(&seq, &q, k).unwrap();
        prop_assert_eq!(moments_from_cumulants(&alpha, k).unwrap(), seq);
    }

    #[test]
    fn series_inverses(c in proptest::collection::vec(small_rat(), 1..=7)) {
        let k = c.len();
        // f = 1 + c₁z + …
        let mut f = vec![Rational::from_integer(1.into())];
        f.extend(c.iter().cloned());
        let fs = FormalSeries::new(f.clone());
        prop_assert_eq!(fs.log().unwrap().exp().unwrap(), fs.clone());
        let (got, want) = (fs.log().unwrap(), series_log(&f));
        prop_assert_eq!(got.coeffs(), want.as_slice());
        let recip = fs.reciprocal().unwrap();
        prop_assert_eq!(&fs * &recip, FormalSeries::one(k));
        // g = z·f is invertible under composition
        let mut g = vec![Rational::from_integer(0.into())];
        g.extend(f.iter().take(k).cloned());
        let gs = FormalSeries::new(g);
        let inv = gs.comp_inverse().unwrap();
        prop_assert_eq!(gs.compose(&inv).unwrap(), FormalSeries::monomial(Rational::from_integer(1.into()), 1, k));
        prop_assert_eq!(inv.comp_inverse().unwrap(), gs);
    }

    #[test]
    fn r1_is_log_of_egf(mu in proptest::collection::vec(small_rat(), 1..=8)) {
        let k = mu.len();
        let mut egf: Vec<Q> = vec![Rational::from_integer(1.into())];
        let mut fact = Rational::from_integer(1.into());
        for (i, m) in mu.iter().enumerate() {
            fact *= Rational::from_integer(((i + 1) as i64).into());
            egf.push(m / &fact);
        }
        let r1 = r1_transform(&MomentSequence::new(mu).unwrap(), k).unwrap();
        let want = series_log(&egf);
        prop_assert_eq!(r1.coeffs(), want.as_slice());
    }

    #[test]
    fn algebra_identities(seed in any::<u64>(), n in 2u64..=5, model in 0usize..3) {
        let q = root_of_unity(n, 1);
        let rot = AlgebraSpec::rotation(n, q.clone()).unwrap();
        let cl = AlgebraSpec::clifford(3, n, q).unwrap();
        let spec = match model {
            0 => rot,
            1 => cl,
            _ => AlgebraSpec::graded_tensor(&rot, &cl).unwrap(),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = AlgebraElement::random(&spec, &mut rng, 3);
        let y = AlgebraElement::random(&spec, &mut rng, 3);
        let z = AlgebraElement::random(&spec, &mut rng, 3);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(x.apply_grading().phi(), x.phi());
        prop_assert_eq!(x.grading_power(n as i64), x.clone());
        prop_assert_eq!((&x * &y).apply_grading(), &x.apply_grading() * &y.apply_grading());
        let parts = (0..n as i64).fold(AlgebraElement::zero(&spec), |acc, r| &acc + &x.projection(r));
        prop_assert_eq!(parts, x);
    }
}

#[test]
fn oracle_sanity() {
    // The zero test must reject non-vanishing sums.
    assert!(common::residue_sum_equals(&[1, 1, 1], 0, 3));
    assert!(!common::residue_sum_equals(&[1, 1, 0], 0, 3));
    assert!(common::residue_sum_equals(&[2, 0, 1, 0], 1, 4));
    assert_eq!(common::cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    assert_eq!(common::bell(4), 15);
    assert_eq!(common::type_count(&[2, 2]), 3);
    assert_eq!(common::ordered_partitions(3).len(), 13);
    assert_eq!(common::gaussian_binomial(4, 2), vec![1, 1, 2, 1, 1]);
}
