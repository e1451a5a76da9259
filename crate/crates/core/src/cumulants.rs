//! Moments ↔ q-cumulants.
//!
//! For a weight `q` the q-cumulants `(α_k)` of a moment sequence are fixed by
//!
//! ```text
//! μ_k = Σ_{P ∈ 𝒫[k]} q^{c₀(P)} Π_{B ∈ P} α_{|B|}
//! ```
//!
//! `q = 1` gives classical cumulants. `q = 0`, with `0⁰ = 1`, keeps only the
//! noncrossing partitions and gives free cumulants. Since the summand only
//! depends on the type of `P` and on `c₀(P)`, each level `k` is reduced once
//! to a table `type ↦ histogram of c₀` and reused for every `q`.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

use crate::cyclo::CycloNum;
use crate::partitions::{c0_from_rgs, rgs_prefixes, RgsIter};
use crate::scalar::{Rational, Ring};

/// Largest truncation served by the enumeration tables (|𝒫[12]| = 4,213,597).
pub const MAX_TRUNCATION: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CumulantError {
    #[error("truncation {0} exceeds the supported maximum {MAX_TRUNCATION}")]
    TruncationTooLarge(usize),
    #[error("sequence has truncation {have}, need at least {need}")]
    InsufficientTruncation { have: usize, need: usize },
    #[error("a moment sequence needs at least one entry")]
    Empty,
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
}

/// `(μ_1, …, μ_K)`; `μ_0 = 1` is implicit.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSequence<R> {
    values: Vec<R>,
}

impl<R: Ring> MomentSequence<R> {
    pub fn new(values: Vec<R>) -> Result<Self, CumulantError> {
        if values.is_empty() {
            return Err(CumulantError::Empty);
        }
        Ok(MomentSequence { values })
    }

    pub fn truncation(&self) -> usize {
        self.values.len()
    }

    /// `μ_k`, with `μ_0 = 1`.
    pub fn get(&self, k: usize) -> R {
        if k == 0 {
            R::one()
        } else {
            self.values[k - 1].clone()
        }
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> MomentSequence<S> {
        MomentSequence {
            values: self.values.iter().map(f).collect(),
        }
    }

    pub fn truncate(&self, k: usize) -> Result<Self, CumulantError> {
        self.require(k)?;
        MomentSequence::new(self.values[..k].to_vec())
    }

    fn require(&self, k: usize) -> Result<(), CumulantError> {
        if self.values.len() < k {
            return Err(CumulantError::InsufficientTruncation {
                have: self.values.len(),
                need: k,
            });
        }
        Ok(())
    }
}

/// `(α_1, …, α_K)` together with the weight `q` they were computed for.
#[derive(Clone, Debug, PartialEq)]
pub struct CumulantSequence<R> {
    values: Vec<R>,
    weight: R,
}

impl<R: Ring> CumulantSequence<R> {
    pub fn new(values: Vec<R>, weight: R) -> Result<Self, CumulantError> {
        if values.is_empty() {
            return Err(CumulantError::Empty);
        }
        Ok(CumulantSequence { values, weight })
    }

    pub fn truncation(&self) -> usize {
        self.values.len()
    }

    /// `α_k` for `k ≥ 1`.
    pub fn get(&self, k: usize) -> R {
        self.values[k - 1].clone()
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn weight(&self) -> &R {
        &self.weight
    }
}

/// One partition type at level `k` and the distribution of `c₀` over the
/// partitions of that type.
#[derive(Clone, Debug)]
pub struct TypeStats {
    /// Block sizes, weakly decreasing.
    pub parts: Vec<usize>,
    /// `c0_hist[c]` = number of partitions of this type with `c₀ = c`.
    pub c0_hist: Vec<u64>,
}

fn build_level(k: usize) -> Vec<TypeStats> {
    let depth = k.min(6);
    let maps: Vec<HashMap<Vec<usize>, Vec<u64>>> = rgs_prefixes(k, depth)
        .into_par_iter()
        .map(|prefix| {
            let mut local: HashMap<Vec<usize>, Vec<u64>> = HashMap::new();
            let mut it = RgsIter::with_prefix(k, &prefix);
            let mut sizes = [0usize; MAX_TRUNCATION + 1];
            while let Some(g) = it.advance() {
                let blocks = *g.iter().max().unwrap_or(&0) as usize + 1;
                sizes[..blocks].iter_mut().for_each(|s| *s = 0);
                for &l in g {
                    sizes[l as usize] += 1;
                }
                let mut parts = sizes[..blocks].to_vec();
                parts.sort_unstable_by(|a, b| b.cmp(a));
                let c = c0_from_rgs(g) as usize;
                let hist = local.entry(parts).or_default();
                if hist.len() <= c {
                    hist.resize(c + 1, 0);
                }
                hist[c] += 1;
            }
            local
        })
        .collect();
    let mut merged: HashMap<Vec<usize>, Vec<u64>> = HashMap::new();
    for m in maps {
        for (parts, hist) in m {
            let acc = merged.entry(parts).or_default();
            if acc.len() < hist.len() {
                acc.resize(hist.len(), 0);
            }
            for (a, h) in acc.iter_mut().zip(hist) {
                *a += h;
            }
        }
    }
    let mut out: Vec<TypeStats> = merged
        .into_iter()
        .map(|(parts, c0_hist)| TypeStats { parts, c0_hist })
        .collect();
    out.sort_by(|a, b| b.parts.cmp(&a.parts));
    out
}

/// The per-type `c₀` histograms of 𝒫[k], built once per process.
pub fn level_stats(k: usize) -> Result<&'static [TypeStats], CumulantError> {
    static LEVELS: [OnceLock<Vec<TypeStats>>; MAX_TRUNCATION + 1] =
        [const { OnceLock::new() }; MAX_TRUNCATION + 1];
    if k > MAX_TRUNCATION {
        return Err(CumulantError::TruncationTooLarge(k));
    }
    Ok(LEVELS[k].get_or_init(|| build_level(k)))
}

/// `Σ_c hist[c] q^c` by Horner; `q = 0` leaves exactly `hist[0]`.
fn eval_hist<R: Ring>(hist: &[u64], q: &R) -> R {
    hist.iter()
        .rev()
        .fold(R::zero(), |acc, &h| acc * q.clone() + R::from_i64(h as i64))
}

/// Weights `Σ_{P of type λ} q^{c₀(P)}` for every type at levels `1..=K`.
#[derive(Clone, Debug)]
pub struct WeightTable<R> {
    q: R,
    levels: Vec<Vec<(Vec<usize>, R)>>,
}

impl<R: Ring> WeightTable<R> {
    pub fn new(q: &R, truncation: usize) -> Result<Self, CumulantError> {
        let mut levels = vec![Vec::new()];
        for k in 1..=truncation {
            let stats = level_stats(k)?;
            levels.push(
                stats
                    .iter()
                    .map(|t| (t.parts.clone(), eval_hist(&t.c0_hist, q)))
                    .collect(),
            );
        }
        Ok(WeightTable {
            q: q.clone(),
            levels,
        })
    }

    pub fn q(&self) -> &R {
        &self.q
    }

    /// `(type, weight)` pairs at level `k`, one-block type first.
    pub fn level(&self, k: usize) -> &[(Vec<usize>, R)] {
        &self.levels[k]
    }

    pub fn truncation(&self) -> usize {
        self.levels.len() - 1
    }

    /// The weight attached to a given type at level `λ₁ + … + λ_r`.
    pub fn weight_of(&self, parts: &[usize]) -> Option<&R> {
        let k: usize = parts.iter().sum();
        self.levels
            .get(k)?
            .iter()
            .find(|(p, _)| p == parts)
            .map(|(_, w)| w)
    }
}

fn product_of<R: Ring>(parts: &[usize], alpha: &[R]) -> R {
    parts
        .iter()
        .fold(R::one(), |acc, &p| acc * alpha[p - 1].clone())
}

/// Evaluates the partition sum: moments from cumulants, using the weight
/// stored in `alpha`.
pub fn moments_from_cumulants<R: Ring>(
    alpha: &CumulantSequence<R>,
    truncation: usize,
) -> Result<MomentSequence<R>, CumulantError> {
    if alpha.truncation() < truncation {
        return Err(CumulantError::InsufficientTruncation {
            have: alpha.truncation(),
            need: truncation,
        });
    }
    let table = WeightTable::new(alpha.weight(), truncation)?;
    let values = (1..=truncation)
        .map(|k| {
            table.level(k).iter().fold(R::zero(), |acc, (parts, w)| {
                acc + w.clone() * product_of(parts, alpha.values())
            })
        })
        .collect();
    MomentSequence::new(values)
}

/// Inverts the triangular recursion. The one-block partition contributes
/// `α_k` with weight `q⁰ = 1`, so `α_k = μ_k − (all other terms)`.
pub fn cumulants_from_moments<R: Ring>(
    mu: &MomentSequence<R>,
    q: &R,
    truncation: usize,
) -> Result<CumulantSequence<R>, CumulantError> {
    mu.require(truncation)?;
    let table = WeightTable::new(q, truncation)?;
    cumulants_with_table(mu, &table, truncation)
}

pub fn cumulants_with_table<R: Ring>(
    mu: &MomentSequence<R>,
    table: &WeightTable<R>,
    truncation: usize,
) -> Result<CumulantSequence<R>, CumulantError> {
    mu.require(truncation)?;
    let mut alpha: Vec<R> = Vec::with_capacity(truncation);
    for k in 1..=truncation {
        let mut rest = R::zero();
        for (parts, w) in table.level(k) {
            if parts.len() == 1 {
                continue;
            }
            rest = rest + w.clone() * product_of(parts, &alpha);
        }
        alpha.push(mu.get(k) - rest);
    }
    CumulantSequence::new(alpha, table.q().clone())
}

/// Outcome of checking that divisibility of the moment support passes to
/// the cumulants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisibleSupport {
    /// `μ_k = 0` for `n ∤ k` and likewise `α_k = 0` for `n ∤ k`.
    Holds,
    /// The cumulants fail at this index although the moments satisfy the
    /// hypothesis.
    Violation { k: usize },
    /// The moments themselves are nonzero at this index with `n ∤ k`.
    HypothesisNotMet { k: usize },
}

pub fn check_divisible_support<R: Ring>(
    mu: &MomentSequence<R>,
    n: usize,
    q: &R,
    truncation: usize,
) -> Result<DivisibleSupport, CumulantError> {
    if let Some(k) = first_off_support(mu, n, truncation)? {
        return Ok(DivisibleSupport::HypothesisNotMet { k });
    }
    let alpha = cumulants_from_moments(mu, q, truncation)?;
    Ok(match (1..=truncation).find(|&k| k % n != 0 && !alpha.get(k).is_zero()) {
        Some(k) => DivisibleSupport::Violation { k },
        None => DivisibleSupport::Holds,
    })
}

/// First `k ≤ truncation` with `n ∤ k` and `μ_k ≠ 0`.
pub fn first_off_support<R: Ring>(
    mu: &MomentSequence<R>,
    n: usize,
    truncation: usize,
) -> Result<Option<usize>, CumulantError> {
    mu.require(truncation)?;
    Ok((1..=truncation).find(|&k| k % n != 0 && !mu.get(k).is_zero()))
}

/// The moments of `aⁿ`: `(μ_n, μ_{2n}, …, μ_{Kn})`.
pub fn power_moments<R: Ring>(
    mu: &MomentSequence<R>,
    n: usize,
    truncation: usize,
) -> Result<MomentSequence<R>, CumulantError> {
    mu.require(n * truncation)?;
    MomentSequence::new((1..=truncation).map(|k| mu.get(k * n)).collect())
}

/// One compared index of the α = β check.
#[derive(Clone, Debug)]
pub struct AlphaBetaRow {
    pub k: usize,
    pub alpha_nk: CycloNum,
    pub beta_k: CycloNum,
}

impl AlphaBetaRow {
    pub fn agrees(&self) -> bool {
        self.alpha_nk == self.beta_k
    }
}

#[derive(Clone, Debug)]
pub struct AlphaBetaReport {
    pub rows: Vec<AlphaBetaRow>,
}

impl AlphaBetaReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(AlphaBetaRow::agrees)
    }

    pub fn first_discrepancy(&self) -> Option<&AlphaBetaRow> {
        self.rows.iter().find(|r| !r.agrees())
    }
}

/// Compares `α^q_{nk}(μ)` with `β_k`, the classical cumulants of the moments
/// of `aⁿ`, for every `nk ≤ K`.
///
/// Hypothesis failures (q not a proper n-th root of unity, moments off the
/// multiples of `n`) come back as `Err`; a failing comparison is reported in
/// the `Ok` value.
pub fn verify_alpha_equals_beta(
    mu: &MomentSequence<CycloNum>,
    n: usize,
    q: &CycloNum,
    truncation: usize,
) -> Result<AlphaBetaReport, CumulantError> {
    if !q.is_proper_root(n as u64) {
        return Err(CumulantError::Hypothesis(format!(
            "q = {q} is not a proper {n}-th root of unity"
        )));
    }
    if let Some(k) = first_off_support(mu, n, truncation)? {
        return Err(CumulantError::Hypothesis(format!(
            "μ_{k} ≠ 0 but {n} does not divide {k}"
        )));
    }
    let alpha = cumulants_from_moments(mu, q, truncation)?;
    let levels = truncation / n;
    let beta = cumulants_from_moments(
        &power_moments(mu, n, levels)?,
        &CycloNum::from_int(1),
        levels,
    )?;
    let rows = (1..=levels)
        .map(|k| AlphaBetaRow {
            k,
            alpha_nk: alpha.get(n * k),
            beta_k: beta.get(k),
        })
        .collect();
    Ok(AlphaBetaReport { rows })
}

/// Uniform rational in `±[0, bound] / [1, bound]`.
pub fn random_rational(rng: &mut impl rand::Rng, bound: i64) -> Rational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    Rational::new(num.into(), den.into())
}

/// Random moments with `μ_k = 0` unless `n | k`; numerators and
/// denominators bounded by 10⁶.
pub fn random_divisible_moments(
    rng: &mut impl rand::Rng,
    n: usize,
    truncation: usize,
) -> MomentSequence<Rational> {
    let values = (1..=truncation)
        .map(|k| {
            if k % n == 0 {
                random_rational(rng, 1_000_000)
            } else {
                Rational::from_i64(0)
            }
        })
        .collect();
    MomentSequence::new(values).expect("truncation ≥ 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::root_of_unity;
    use crate::partitions::{bell_number, enumerate_set_partitions, partition_type, restricted_crossing_number};
    use crate::poly::RatPoly;
    use crate::scalar::rat_int;
    use num_traits::Zero;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alpha2_only<R: Ring>(q: R, k: usize) -> CumulantSequence<R> {
        let mut v = vec![R::zero(); k];
        v[1] = R::one();
        CumulantSequence::new(v, q).unwrap()
    }

    #[test]
    fn level_tables_cover_every_partition() {
        for k in 0..=9 {
            let total: u64 = level_stats(k)
                .unwrap()
                .iter()
                .map(|t| t.c0_hist.iter().sum::<u64>())
                .sum();
            assert_eq!(total, bell_number(k));
        }
        assert!(level_stats(13).is_err());
    }

    #[test]
    fn level_tables_match_direct_enumeration() {
        // Independent path: SetPartition enumeration with the pairwise c₀.
        for k in 1..=8 {
            let mut direct: HashMap<Vec<usize>, Vec<u64>> = HashMap::new();
            for p in enumerate_set_partitions(k) {
                let c = restricted_crossing_number(&p) as usize;
                let h = direct.entry(partition_type(&p).parts().to_vec()).or_default();
                if h.len() <= c {
                    h.resize(c + 1, 0);
                }
                h[c] += 1;
            }
            for t in level_stats(k).unwrap() {
                assert_eq!(direct[&t.parts], t.c0_hist, "k = {k}, type {:?}", t.parts);
            }
            assert_eq!(direct.len(), level_stats(k).unwrap().len());
        }
    }

    #[test]
    fn fourth_moment_of_alpha2() {
        let classical = moments_from_cumulants(&alpha2_only(rat_int(1), 4), 4).unwrap();
        assert_eq!(classical.get(2), rat_int(1));
        assert_eq!(classical.get(4), rat_int(3));
        let free = moments_from_cumulants(&alpha2_only(rat_int(0), 4), 4).unwrap();
        assert_eq!(free.get(4), rat_int(2));
        let generic = moments_from_cumulants(&alpha2_only(RatPoly::x(), 4), 4).unwrap();
        assert_eq!(generic.get(4), RatPoly::from_ints(&[2, 1]));
    }

    #[test]
    fn inverting_the_generic_fourth_moment() {
        let q = RatPoly::x();
        let mu = MomentSequence::new(vec![
            RatPoly::zero(),
            RatPoly::from_ints(&[1]),
            RatPoly::zero(),
            RatPoly::from_ints(&[2, 1]),
        ])
        .unwrap();
        let alpha = cumulants_from_moments(&mu, &q, 4).unwrap();
        assert_eq!(alpha.get(2), RatPoly::from_ints(&[1]));
        assert!(alpha.get(4).is_zero());
        assert!(alpha.get(1).is_zero() && alpha.get(3).is_zero());
    }

    #[test]
    fn point_mass_has_only_a_mean() {
        let mu = MomentSequence::new(vec![rat_int(1); 8]).unwrap();
        let alpha = cumulants_from_moments(&mu, &rat_int(1), 8).unwrap();
        assert_eq!(alpha.get(1), rat_int(1));
        assert!((2..=8).all(|k| alpha.get(k).is_zero()));
    }

    #[test]
    fn round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let qs = [
            CycloNum::from_int(1),
            CycloNum::from_int(0),
            root_of_unity(3, 1),
            root_of_unity(4, 1),
        ];
        for q in &qs {
            for _ in 0..25 {
                let mu: Vec<CycloNum> = (0..8)
                    .map(|_| CycloNum::from_rational(random_rational(&mut rng, 1000)))
                    .collect();
                let mu = MomentSequence::new(mu).unwrap();
                let alpha = cumulants_from_moments(&mu, q, 8).unwrap();
                assert_eq!(moments_from_cumulants(&alpha, 8).unwrap(), mu);
            }
        }
    }

    #[test]
    fn divisible_support() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mu = random_divisible_moments(&mut rng, 3, 9).map(|r| CycloNum::from_rational(r.clone()));
        let q = root_of_unity(3, 1);
        assert_eq!(check_divisible_support(&mu, 3, &q, 9).unwrap(), DivisibleSupport::Holds);
        assert_eq!(check_divisible_support(&mu, 1, &q, 9).unwrap(), DivisibleSupport::Holds);
        let bad = MomentSequence::new(vec![rat_int(1), rat_int(2)]).unwrap();
        assert_eq!(
            check_divisible_support(&bad, 2, &rat_int(-1), 2).unwrap(),
            DivisibleSupport::HypothesisNotMet { k: 1 }
        );
    }

    #[test]
    fn power_moments_index_arithmetic() {
        let mu = MomentSequence::new((1..=6).map(rat_int).collect()).unwrap();
        assert_eq!(power_moments(&mu, 1, 6).unwrap(), mu);
        let sq = power_moments(&mu, 2, 3).unwrap();
        assert_eq!(sq.values(), &[rat_int(2), rat_int(4), rat_int(6)]);
        assert!(power_moments(&mu, 2, 4).is_err());
    }

    #[test]
    fn alpha_beta_small_instance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mu = random_divisible_moments(&mut rng, 2, 8).map(|r| CycloNum::from_rational(r.clone()));
        let report = verify_alpha_equals_beta(&mu, 2, &CycloNum::from_int(-1), 8).unwrap();
        assert!(report.holds());
        // base case: α_n = μ_n = β_1
        assert_eq!(report.rows[0].alpha_nk, mu.get(2));
        assert!(verify_alpha_equals_beta(&mu, 2, &CycloNum::from_int(1), 8).is_err());
        let odd = MomentSequence::new(vec![CycloNum::from_int(1); 4]).unwrap();
        assert!(verify_alpha_equals_beta(&odd, 2, &CycloNum::from_int(-1), 4).is_err());
    }
}
