//! One function per verification suite. Each takes the run configuration
//! and returns a report; `Err` means the request itself was unusable.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::report::{InstanceResult, Mode, VerificationReport};
use super::CliError;
use crate::algebra::{
    ad_u_inv_v, check_graded_independence, element_to_json, verify_linearization,
    verify_power_rule, AlgebraElement, AlgebraSpec, Degree,
};
use crate::cumulants::{
    check_divisible_support, moments_from_cumulants, random_divisible_moments, random_rational,
    verify_alpha_equals_beta, CumulantSequence, DivisibleSupport, MomentSequence,
};
use crate::cyclo::{primitive_roots, CycloNum};
use crate::io::{value_to_json, values_to_json};
use crate::partitions::{
    bell_number, bold_sigma_orbit_sum, crossing_number, divisible_orbit_sum,
    enumerate_divisible, enumerate_int_partitions, enumerate_ordered_partitions,
    enumerate_ordered_with_parts, enumerate_set_partitions, is_block_aligned, partition_type,
    restricted_crossing_number, rotate_labels, rotation_orbit_sum, sorting_number,
    weighted_c0_sum, IntPartition,
};
use crate::poly::RatPoly;
use crate::scalar::{Rational, Ring};
use crate::series::{graded_log_formula, graded_r_transform, reduced_order};

pub const SUITES: [&str; 12] = [
    "cumulant-tables",
    "lemma-sum-1",
    "lemma-sum-2",
    "prop-sum-3",
    "cor-4.5",
    "cor-5",
    "thm-alpha-beta",
    "thm-rq-formula",
    "lemma-power-rule",
    "thm-linearize",
    "remark-n2-congruence",
    "remark-n3-counterexample",
];

/// Suite ids accepted by `verify`, including `structural` and `all`.
pub fn suite_ids() -> Vec<&'static str> {
    let mut v = SUITES.to_vec();
    v.push("structural");
    v.push("all");
    v
}

/// Parameters shared by all suites.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub q: Option<CycloNum>,
    pub truncation: usize,
    pub seed: u64,
    pub trials: usize,
    pub depth: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: None,
            m: None,
            q: None,
            truncation: 12,
            seed: 0,
            trials: 20,
            depth: 4,
        }
    }
}

impl RunConfig {
    fn grid_n(&self, default: impl IntoIterator<Item = usize>) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => default.into_iter().collect(),
        }
    }

    /// Roots to test at level `n`: all primitive ones by default; a supplied
    /// `q` must be a proper `n`-th root and switches to probe mode unless it
    /// is primitive.
    fn roots(&self, n: usize) -> Result<(Vec<CycloNum>, Mode), CliError> {
        match &self.q {
            None => Ok((primitive_roots(n as u64), Mode::Assert)),
            Some(q) if q.is_primitive(n as u64) => Ok((vec![q.clone()], Mode::Assert)),
            Some(q) if q.is_proper_root(n as u64) => Ok((vec![q.clone()], Mode::Probe)),
            Some(q) => Err(CliError::Hypothesis(format!(
                "q = {q} is not a proper {n}-th root of unity"
            ))),
        }
    }

    /// A deterministic generator for trial `t` of the instance keyed by `key`.
    fn rng(&self, key: u64, t: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(key.wrapping_mul(1 << 20).wrapping_add(t as u64));
        rng
    }
}

fn q_label(q: &CycloNum) -> String {
    q.to_string()
}

fn merge_mode(a: Mode, b: Mode) -> Mode {
    if a == Mode::Probe || b == Mode::Probe {
        Mode::Probe
    } else {
        Mode::Assert
    }
}

pub fn run_suite(id: &str, cfg: &RunConfig) -> Result<Vec<VerificationReport>, CliError> {
    let one = |r: Result<VerificationReport, CliError>| r.map(|r| vec![r]);
    match id {
        "cumulant-tables" => one(cumulant_tables(cfg)),
        "lemma-sum-1" => one(lemma_sum_1(cfg)),
        "lemma-sum-2" => one(lemma_sum_2(cfg)),
        "prop-sum-3" => one(prop_sum_3(cfg)),
        "cor-4.5" => one(cor_4_5(cfg)),
        "cor-5" => one(cor_5(cfg)),
        "thm-alpha-beta" => one(thm_alpha_beta(cfg)),
        "thm-rq-formula" => one(thm_rq_formula(cfg)),
        "lemma-power-rule" => one(lemma_power_rule(cfg)),
        "thm-linearize" => one(thm_linearize(cfg)),
        "remark-n2-congruence" => one(remark_n2_congruence(cfg)),
        "remark-n3-counterexample" => one(remark_n3_counterexample(cfg)),
        "structural" => one(structural(cfg)),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES.iter().chain(["structural"].iter()) {
                out.extend(run_suite(s, cfg)?);
            }
            Ok(out)
        }
        other => Err(CliError::Usage(format!(
            "unknown suite {other:?}; known suites: {}",
            suite_ids().join(", ")
        ))),
    }
}

/// `μ_1..μ_4` written out as polynomials in the cumulants, with `c` the
/// coefficient of `α₂²` (3 classical, 2 free, 2 + q in general).
fn table_moments<R: Ring>(a: &[R; 4], c: R) -> [R; 4] {
    let [a1, a2, a3, a4] = a.clone();
    let i = |v: i64| R::from_i64(v);
    [
        a1.clone(),
        a1.pow(2) + a2.clone(),
        a1.pow(3) + i(3) * a1.clone() * a2.clone() + a3.clone(),
        a1.pow(4) + i(4) * a1.clone() * a3 + c * a2.pow(2) + i(6) * a2 * a1.pow(2) + a4,
    ]
}

fn engine_moments<R: Ring>(a: &[R; 4], q: R) -> Vec<R> {
    let alpha = CumulantSequence::new(a.to_vec(), q).expect("four cumulants");
    moments_from_cumulants(&alpha, 4)
        .expect("K = 4 is in range")
        .values()
        .to_vec()
}

fn cumulant_tables(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let mut inst = Vec::new();
    let unit = |k: usize| -> [Rational; 4] {
        let mut a = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        a[k - 1] = Rational::from_i64(1);
        a
    };
    for (label, q, want) in [("q=1", 1, 3), ("q=0", 0, 2)] {
        let mu4 = engine_moments(&unit(2), Rational::from_i64(q))[3].clone();
        inst.push(
            InstanceResult::new(
                format!("alpha2=1 {label}: mu4 = {want}"),
                json!({"q": q, "alpha": [0, 1, 0, 0]}),
                mu4 == Rational::from_i64(want),
            )
            .with_detail(json!({"mu4": mu4.to_string()})),
        );
    }
    let qpoly = RatPoly::x();
    let unit_poly = |k: usize| -> [RatPoly; 4] {
        let mut a = [RatPoly::zero(), RatPoly::zero(), RatPoly::zero(), RatPoly::zero()];
        a[k - 1] = RatPoly::from_ints(&[1]);
        a
    };
    let mu4 = engine_moments(&unit_poly(2), qpoly.clone())[3].clone();
    inst.push(
        InstanceResult::new(
            "alpha2=1 generic q: mu4 = 2 + q",
            json!({"q": "indeterminate", "alpha": [0, 1, 0, 0]}),
            mu4 == RatPoly::from_ints(&[2, 1]),
        )
        .with_detail(json!({"mu4": mu4.to_string()})),
    );

    // Full tables at random rational cumulants: rational q = 1 and 0, and the
    // polynomial ring in q for the generic table.
    let mut all_ok = [true; 3];
    for t in 0..cfg.trials.max(1) {
        let mut rng = cfg.rng(1, t);
        let a: [Rational; 4] = std::array::from_fn(|_| random_rational(&mut rng, 1_000_000));
        for (slot, (q, c)) in [(1, 3), (0, 2)].into_iter().enumerate() {
            let want = table_moments(&a, Rational::from_i64(c));
            all_ok[slot] &= engine_moments(&a, Rational::from_i64(q)) == want;
        }
        let ap: [RatPoly; 4] = std::array::from_fn(|i| RatPoly::constant(a[i].clone()));
        let want = table_moments(&ap, RatPoly::from_ints(&[2, 1]));
        all_ok[2] &= engine_moments(&ap, qpoly.clone()) == want;
    }
    for (ok, label) in all_ok.iter().zip(["classical", "free", "q"]) {
        inst.push(InstanceResult::new(
            format!("{label} table mu1..mu4 at {} random points", cfg.trials.max(1)),
            json!({"table": label, "trials": cfg.trials.max(1), "seed": cfg.seed}),
            *ok,
        ));
    }
    Ok(VerificationReport::new(
        "cumulant-tables",
        Mode::Assert,
        json!({"trials": cfg.trials.max(1), "seed": cfg.seed}),
        inst,
    ))
}

fn lemma_sum_1(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let ns = cfg.grid_n(2..=8);
    let mut inst = Vec::new();
    let mut mode = Mode::Assert;
    for &n in &ns {
        let (roots, m) = cfg.roots(n)?;
        mode = merge_mode(mode, m);
        let parts: Vec<_> = enumerate_ordered_with_parts(n, 2).collect();
        for q in &roots {
            let bad = parts
                .par_iter()
                .find_first(|p| !rotation_orbit_sum(p, q).is_zero());
            let mut r = InstanceResult::new(
                format!("n={n} q={}: {} two-part orbit sums vanish", q_label(q), parts.len()),
                json!({"n": n, "q": value_to_json(q)}),
                bad.is_none(),
            );
            if let Some(p) = bad {
                r = r.with_detail(json!({
                    "partition": p.to_string(),
                    "sum": value_to_json(&rotation_orbit_sum(p, q)),
                }));
            }
            inst.push(r);
        }
        // x(σP) ≡ x(P) − |A| (mod n) for P = (A, B)
        let step_bad = parts.iter().find(|p| {
            let lhs = sorting_number(&rotate_labels(p, 1)) as i64;
            let rhs = sorting_number(p) as i64 - p.parts()[0].len() as i64;
            (lhs - rhs).rem_euclid(n as i64) != 0
        });
        let mut r = InstanceResult::new(
            format!("n={n}: step law x(σP) ≡ x(P) − |A| mod n"),
            json!({"n": n}),
            step_bad.is_none(),
        );
        if let Some(p) = step_bad {
            r = r.with_detail(json!({"partition": p.to_string()}));
        }
        inst.push(r);
    }
    Ok(VerificationReport::new(
        "lemma-sum-1",
        mode,
        json!({"n": ns, "q": cfg.q.as_ref().map(value_to_json).unwrap_or(json!("all primitive"))}),
        inst,
    ))
}

fn lemma_sum_2(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let ns = cfg.grid_n(2..=6);
    let mut inst = Vec::new();
    let mut mode = Mode::Assert;
    for &n in &ns {
        let (roots, m) = cfg.roots(n)?;
        mode = merge_mode(mode, m);
        let parts: Vec<_> = enumerate_ordered_partitions(n)
            .filter(|p| p.num_parts() >= 2)
            .collect();
        for q in &roots {
            let bad = parts
                .par_iter()
                .find_first(|p| !bold_sigma_orbit_sum(p, q).is_zero());
            let mut r = InstanceResult::new(
                format!("n={n} q={}: {} orbit sums vanish", q_label(q), parts.len()),
                json!({"n": n, "q": value_to_json(q)}),
                bad.is_none(),
            );
            if let Some(p) = bad {
                r = r.with_detail(json!({
                    "partition": p.to_string(),
                    "sum": value_to_json(&bold_sigma_orbit_sum(p, q)),
                }));
            }
            inst.push(r);
        }
    }
    Ok(VerificationReport::new(
        "lemma-sum-2",
        mode,
        json!({"n": ns}),
        inst,
    ))
}

/// `(n, m)` pairs: the default grid, or the single pair from `--n/--m`.
fn divisible_grid(cfg: &RunConfig) -> Vec<(usize, usize)> {
    const GRID: [(usize, usize); 6] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)];
    match (cfg.n, cfg.m) {
        (Some(n), Some(m)) => vec![(n, m)],
        (Some(n), None) => GRID.iter().copied().filter(|&(a, _)| a == n).collect(),
        (None, Some(m)) => GRID.iter().copied().filter(|&(_, b)| b == m).collect(),
        (None, None) => GRID.to_vec(),
    }
}

fn check_ceiling(n: usize, m: usize) -> Result<(), CliError> {
    if n < 2 || m < 1 || n * m > super::DEFAULT_CEILING {
        return Err(CliError::Usage(format!(
            "need n ≥ 2, m ≥ 1 and mn ≤ {} (got n = {n}, m = {m})",
            super::DEFAULT_CEILING
        )));
    }
    Ok(())
}

fn prop_sum_3(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let grid = divisible_grid(cfg);
    let mut inst = Vec::new();
    let mut mode = Mode::Assert;
    for &(n, m) in &grid {
        check_ceiling(n, m)?;
        let (roots, md) = cfg.roots(n)?;
        mode = merge_mode(mode, md);
        let family: Vec<_> = enumerate_divisible(m, n)
            .filter(|p| !is_block_aligned(p, m, n))
            .collect();
        for q in &roots {
            let bad = family.par_iter().find_first(|p| {
                !divisible_orbit_sum(p, n, q)
                    .expect("family is divisible")
                    .is_zero()
            });
            let mut r = InstanceResult::new(
                format!(
                    "n={n} m={m} q={}: {} non-aligned orbit sums vanish",
                    q_label(q),
                    family.len()
                ),
                json!({"n": n, "m": m, "q": value_to_json(q)}),
                bad.is_none(),
            );
            if let Some(p) = bad {
                r = r.with_detail(json!({
                    "partition": p,
                    "sum": value_to_json(&divisible_orbit_sum(p, n, q).expect("divisible")),
                }));
            }
            inst.push(r);
        }
    }
    Ok(VerificationReport::new(
        "prop-sum-3",
        mode,
        json!({"grid": grid}),
        inst,
    ))
}

fn cor_4_5(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let grid = divisible_grid(cfg);
    let mut inst = Vec::new();
    let mut mode = Mode::Assert;
    for &(n, m) in &grid {
        check_ceiling(n, m)?;
        let (roots, md) = cfg.roots(n)?;
        mode = merge_mode(mode, md);
        let bell = bell_number(m) as i64;
        let aligned = enumerate_divisible(m, n)
            .filter(|p| is_block_aligned(p, m, n))
            .count() as i64;
        for q in &roots {
            let sum = weighted_c0_sum(enumerate_divisible(m, n), q, None);
            let ok = sum == CycloNum::from_int(bell) && aligned == bell;
            inst.push(
                InstanceResult::new(
                    format!("n={n} m={m} q={}: sum = B_{m} = {bell}", q_label(q)),
                    json!({"n": n, "m": m, "q": value_to_json(q)}),
                    ok,
                )
                .with_detail(json!({"sum": value_to_json(&sum), "aligned": aligned, "bell": bell})),
            );
        }
    }
    Ok(VerificationReport::new("cor-4.5", mode, json!({"grid": grid}), inst))
}

fn cor_5(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let grid = divisible_grid(cfg);
    let mut inst = Vec::new();
    let mut mode = Mode::Assert;
    for &(n, m) in &grid {
        check_ceiling(n, m)?;
        let (roots, md) = cfg.roots(n)?;
        mode = merge_mode(mode, md);
        let family: Vec<_> = enumerate_divisible(m, n).collect();
        let mut counts: HashMap<IntPartition, i64> = HashMap::new();
        for p in enumerate_set_partitions(m) {
            *counts.entry(partition_type(&p)).or_default() += 1;
        }
        for lambda in enumerate_int_partitions(m) {
            let want = counts.get(&lambda).copied().unwrap_or(0);
            let scaled = lambda.scale(n);
            for q in &roots {
                let sum = weighted_c0_sum(family.iter().cloned(), q, Some(&scaled));
                inst.push(
                    InstanceResult::new(
                        format!("n={n} m={m} λ=({lambda}) q={}: sum = {want}", q_label(q)),
                        json!({"n": n, "m": m, "lambda": lambda.parts(), "q": value_to_json(q)}),
                        sum == CycloNum::from_int(want),
                    )
                    .with_detail(json!({"sum": value_to_json(&sum), "expected": want})),
                );
            }
        }
    }
    Ok(VerificationReport::new("cor-5", mode, json!({"grid": grid}), inst))
}

fn thm_alpha_beta(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let ns = cfg.grid_n([2, 3, 4]);
    let k = cfg.truncation;
    let mut inst = Vec::new();
    let mut mode = Mode::Assert;
    for &n in &ns {
        let (roots, md) = cfg.roots(n)?;
        mode = merge_mode(mode, md);
        for (qi, q) in roots.iter().enumerate() {
            let results: Vec<Result<Option<Value>, CliError>> = (0..cfg.trials)
                .into_par_iter()
                .map(|t| {
                    let mut rng = cfg.rng(100 + (n * 16 + qi) as u64, t);
                    let mu = random_divisible_moments(&mut rng, n, k)
                        .map(|r| CycloNum::from_rational(r.clone()));
                    let report = verify_alpha_equals_beta(&mu, n, q, k)
                        .map_err(|e| CliError::Hypothesis(e.to_string()))?;
                    Ok(report.first_discrepancy().map(|row| {
                        json!({
                            "trial": t,
                            "k": row.k,
                            "alpha_nk": value_to_json(&row.alpha_nk),
                            "beta_k": value_to_json(&row.beta_k),
                            "moments": values_to_json(mu.values()),
                        })
                    }))
                })
                .collect();
            let mut failure = None;
            for r in results {
                if let Some(d) = r? {
                    failure.get_or_insert(d);
                }
            }
            let mut r = InstanceResult::new(
                format!("n={n} q={} K={k}: {} random moment vectors", q_label(q), cfg.trials),
                json!({"n": n, "q": value_to_json(q), "K": k, "trials": cfg.trials}),
                failure.is_none(),
            );
            if let Some(d) = failure {
                r = r.with_detail(d);
            }
            inst.push(r);
        }
    }
    Ok(VerificationReport::new(
        "thm-alpha-beta",
        mode,
        json!({"n": ns, "K": k, "trials": cfg.trials, "seed": cfg.seed}),
        inst,
    ))
}

fn thm_rq_formula(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let ns = cfg.grid_n([2, 3, 4, 6]);
    let k = cfg.truncation;
    let mut inst = Vec::new();
    for &n in &ns {
        let (roots, md) = cfg.roots(n)?;
        if md == Mode::Probe {
            return Err(CliError::Hypothesis(
                "the graded transform needs a primitive root of unity".into(),
            ));
        }
        let q = &roots[0];
        for delta in 0..n as i64 {
            let n_red = reduced_order(delta, n);
            let bad = (0..cfg.trials)
                .into_par_iter()
                .map(|t| -> Result<Option<Value>, CliError> {
                    let mut rng = cfg.rng(200 + (n * 16) as u64 + delta as u64, t);
                    let mu = random_divisible_moments(&mut rng, n_red, k)
                        .map(|r| CycloNum::from_rational(r.clone()));
                    let lhs = graded_r_transform(&mu, delta, n, q, k)
                        .map_err(|e| CliError::Hypothesis(e.to_string()))?;
                    let rhs = graded_log_formula(&mu, delta, n, k)
                        .map_err(|e| CliError::Hypothesis(e.to_string()))?;
                    Ok((lhs != rhs).then(|| json!({"trial": t, "moments": values_to_json(mu.values())})))
                })
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .flatten()
                .next();
            let mut r = InstanceResult::new(
                format!("n={n} δ={delta} (n'={n_red}) q={}: {} trials through z^{k}", q_label(q), cfg.trials),
                json!({"n": n, "delta": delta, "n_reduced": n_red, "K": k}),
                bad.is_none(),
            );
            if let Some(d) = bad {
                r = r.with_detail(d);
            }
            inst.push(r);
        }
    }
    Ok(VerificationReport::new(
        "thm-rq-formula",
        Mode::Assert,
        json!({"n": ns, "K": k, "trials": cfg.trials, "seed": cfg.seed}),
        inst,
    ))
}

fn rotation(n: usize) -> std::sync::Arc<AlgebraSpec> {
    AlgebraSpec::rotation(n as u64, crate::cyclo::root_of_unity(n as u64, 1))
        .expect("ζ_n is primitive")
}

fn lemma_power_rule(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let ns = cfg.grid_n(2..=6);
    let mut inst = Vec::new();
    for &n in &ns {
        if n < 2 {
            return Err(CliError::Usage("lemma-power-rule needs n ≥ 2".into()));
        }
        let s = rotation(n);
        for r in 1..n as i64 {
            let a = AlgebraElement::rot(&s, r, 0);
            let b = AlgebraElement::rot(&s, 0, r);
            let rep = verify_power_rule(&a, &b).map_err(|e| CliError::Hypothesis(e.to_string()))?;
            let ni = n as i64;
            let phase_order = ni / (r * r).rem_euclid(ni).gcd(&ni);
            let mut res = InstanceResult::new(
                format!("n={n} r={r}: (u^{r} + v^{r})^{} = u^{} + v^{}", rep.exponent, r * rep.exponent as i64, r * rep.exponent as i64),
                json!({"n": n, "r": r, "exponent": rep.exponent}),
                rep.holds(),
            );
            if !rep.holds() {
                res = res.with_detail(json!({
                    "lhs_minus_rhs": element_to_json(&(&rep.lhs - &rep.rhs)),
                    "order_of_q^(r^2)": phase_order,
                }));
            }
            inst.push(res);
        }
        let zero = AlgebraElement::zero(&s);
        let u = AlgebraElement::rot(&s, 1, 0);
        let rep = verify_power_rule(&u, &zero).map_err(|e| CliError::Hypothesis(e.to_string()))?;
        inst.push(InstanceResult::new(
            format!("n={n}: b = 0"),
            json!({"n": n, "r": 1, "b": 0}),
            rep.holds(),
        ));
    }
    Ok(VerificationReport::new(
        "lemma-power-rule",
        Mode::Assert,
        json!({"n": ns, "model": "rotation"}),
        inst,
    ))
}

fn linearization_instance(
    label: String,
    params: Value,
    a: &AlgebraElement,
    b: &AlgebraElement,
    cfg: &RunConfig,
) -> Result<InstanceResult, CliError> {
    let hyp = |e: crate::algebra::AlgebraError| CliError::Hypothesis(e.to_string());
    if let Some(cex) = check_graded_independence(std::slice::from_ref(a), std::slice::from_ref(b), cfg.depth).map_err(hyp)? {
        return Err(CliError::Hypothesis(format!(
            "inputs are not graded independent: {:?} at words {:?}, {:?}",
            cex.failure, cex.a_word, cex.b_word
        )));
    }
    let rep = verify_linearization(a, b, cfg.truncation).map_err(hyp)?;
    let mut res = InstanceResult::new(label, params, rep.holds());
    if !rep.holds() {
        res = res.with_detail(json!({"diff": values_to_json(rep.diff().coeffs())}));
    } else {
        res = res.with_detail(json!({"r_a": values_to_json(rep.r_a.coeffs())}));
    }
    Ok(res)
}

fn thm_linearize(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let ns = cfg.grid_n([2, 3, 4]);
    let k = cfg.truncation;
    let mut inst = Vec::new();
    for &n in &ns {
        let s = rotation(n);
        inst.push(linearization_instance(
            format!("rotation n={n}: a=u, b=v"),
            json!({"model": "rotation", "n": n, "a": "u", "b": "v", "K": k}),
            &AlgebraElement::rot(&s, 1, 0),
            &AlgebraElement::rot(&s, 0, 1),
            cfg,
        )?);
        let c = AlgebraSpec::clifford(2, n as u64, crate::cyclo::root_of_unity(n as u64, 1))
            .expect("ζ_n is primitive");
        let e1 = AlgebraElement::generator(&c, "e1").expect("e1");
        let e2 = AlgebraElement::generator(&c, "e2").expect("e2");
        inst.push(linearization_instance(
            format!("clifford C_2^({n}): a=e1, b=e2"),
            json!({"model": "clifford", "m": 2, "n": n, "a": "e1", "b": "e2", "K": k}),
            &e1,
            &e2,
            cfg,
        )?);
    }
    if cfg.n.is_none() || cfg.n == Some(3) {
        let s = rotation(3);
        inst.push(linearization_instance(
            "rotation n=3: a=u^3, b=v^3 (degree 0)".into(),
            json!({"model": "rotation", "n": 3, "a": "u^3", "b": "v^3", "K": k}),
            &AlgebraElement::rot(&s, 3, 0),
            &AlgebraElement::rot(&s, 0, 3),
            cfg,
        )?);
    }
    Ok(VerificationReport::new(
        "thm-linearize",
        Mode::Assert,
        json!({"n": ns, "K": k, "depth": cfg.depth}),
        inst,
    ))
}

fn remark_n2_congruence(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let ms: Vec<usize> = match cfg.m {
        Some(m) => vec![m],
        None => (1..=4).collect(),
    };
    let mut inst = Vec::new();
    for &m in &ms {
        check_ceiling(2, m)?;
        let mut count = 0;
        let bad = enumerate_divisible(m, 2).find(|p| {
            count += 1;
            !(crossing_number(p) + restricted_crossing_number(p)).is_multiple_of(2)
        });
        let mut r = InstanceResult::new(
            format!("m={m}: c0 ≡ c mod 2 on all of P_2[{}]", 2 * m),
            json!({"n": 2, "m": m}),
            bad.is_none(),
        );
        if let Some(p) = bad {
            r = r.with_detail(json!({"partition": p}));
        } else {
            r = r.with_detail(json!({"partitions": count}));
        }
        inst.push(r);
    }
    Ok(VerificationReport::new(
        "remark-n2-congruence",
        Mode::Assert,
        json!({"m": ms}),
        inst,
    ))
}

fn remark_n3_counterexample(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let ms: Vec<usize> = match cfg.m {
        Some(m) => vec![m],
        None => vec![2, 3],
    };
    let mut witness = None;
    for &m in &ms {
        check_ceiling(3, m)?;
        witness = enumerate_divisible(m, 3).find(|p| {
            (crossing_number(p) as i64 - restricted_crossing_number(p) as i64) % 3 != 0
        });
        if witness.is_some() {
            break;
        }
    }
    let mut r = InstanceResult::new(
        "a partition in P_3[3m] with c0 ≢ c mod 3",
        json!({"n": 3, "m": ms}),
        witness.is_some(),
    );
    if let Some(p) = &witness {
        r = r.with_detail(json!({
            "witness": p,
            "display": p.to_string(),
            "c": crossing_number(p),
            "c0": restricted_crossing_number(p),
        }));
    }
    Ok(VerificationReport::new(
        "remark-n3-counterexample",
        Mode::Assert,
        json!({"m": ms}),
        vec![r],
    ))
}

/// The structural checks on every model: φ∘γ = φ, γⁿ = id, φ∘E₀ = φ,
/// E_r(x)E_s(y) homogeneous of degree r+s, associativity, the tensor
/// injections, and Ad(u⁻¹v) against the grading.
fn structural(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    let trials = cfg.trials.max(1);
    let mut specs = Vec::new();
    for n in cfg.grid_n([2, 3, 4, 5]) {
        let q = crate::cyclo::root_of_unity(n as u64, 1);
        let rot = AlgebraSpec::rotation(n as u64, q.clone()).expect("primitive");
        let cl = AlgebraSpec::clifford(3, n as u64, q).expect("primitive");
        let t = AlgebraSpec::graded_tensor(&rot, &cl).expect("shared n, q");
        specs.push((format!("rotation n={n}"), rot.clone()));
        specs.push((format!("clifford C_3^({n})"), cl.clone()));
        specs.push((format!("rotation⊗clifford n={n}"), t));
    }
    let mut inst = Vec::new();
    for (si, (name, s)) in specs.iter().enumerate() {
        let n = s.n() as i64;
        let mut ok = [true; 5];
        for t in 0..trials {
            let mut rng = cfg.rng(300 + si as u64, t);
            let x = AlgebraElement::random(s, &mut rng, 4);
            let y = AlgebraElement::random(s, &mut rng, 4);
            ok[0] &= x.apply_grading().phi() == x.phi();
            ok[1] &= x.grading_power(n) == x;
            ok[2] &= x.projection(0).phi() == x.phi();
            for r in 0..n {
                for sdeg in 0..n {
                    let prod = &x.projection(r) * &y.projection(sdeg);
                    ok[3] &= match prod.degree_of() {
                        Degree::Zero => true,
                        Degree::Homogeneous(d) => d == (r + sdeg).rem_euclid(n),
                        Degree::Inhomogeneous => false,
                    };
                }
            }
            let [a, b, c] = std::array::from_fn(|_| {
                AlgebraElement::monomial(s, s.random_monomial(&mut rng), CycloNum::from_int(1))
            });
            ok[4] &= &(&a * &b) * &c == &a * &(&b * &c);
        }
        for (ok, what) in ok.iter().zip([
            "φ∘γ = φ",
            "γ^n = id",
            "φ∘E_0 = φ",
            "E_r(x)E_s(y) has degree r+s",
            "associativity on monomial triples",
        ]) {
            inst.push(InstanceResult::new(
                format!("{name}: {what}"),
                json!({"model": name, "check": what, "trials": trials}),
                *ok,
            ));
        }
    }
    // Injections into the graded tensor product.
    for n in cfg.grid_n([2, 3, 4, 5]) {
        let q = crate::cyclo::root_of_unity(n as u64, 1);
        let rot = AlgebraSpec::rotation(n as u64, q.clone()).expect("primitive");
        let cl = AlgebraSpec::clifford(2, n as u64, q).expect("primitive");
        let t = AlgebraSpec::graded_tensor(&rot, &cl).expect("shared n, q");
        let mut ok = true;
        for tr in 0..trials {
            let mut rng = cfg.rng(400 + n as u64, tr);
            let (x, y) = (AlgebraElement::random(&rot, &mut rng, 3), AlgebraElement::random(&rot, &mut rng, 3));
            let (b1, b2) = (AlgebraElement::random(&cl, &mut rng, 3), AlgebraElement::random(&cl, &mut rng, 3));
            let il = |e: &AlgebraElement| e.inject_left(&t).expect("left leg");
            let ir = |e: &AlgebraElement| e.inject_right(&t).expect("right leg");
            ok &= il(&x).phi() == x.phi() && ir(&b1).phi() == b1.phi();
            ok &= il(&x.apply_grading()) == il(&x).apply_grading();
            ok &= ir(&b1.apply_grading()) == ir(&b1).apply_grading();
            ok &= il(&(&x * &y)) == &il(&x) * &il(&y);
            ok &= ir(&(&b1 * &b2)) == &ir(&b1) * &ir(&b2);
            ok &= (&il(&x) * &ir(&b1)).phi() == x.phi() * b1.phi();
        }
        inst.push(InstanceResult::new(
            format!("rotation⊗clifford n={n}: injections preserve φ, γ and products"),
            json!({"n": n, "check": "injections", "trials": trials}),
            ok,
        ));
    }
    // Ad(u⁻¹v) against the spectral grading on u^a v^b, |a|, |b| ≤ 4.
    for n in cfg.grid_n([2, 3, 4, 5]) {
        let s = rotation(n);
        let ok = (-4..=4).all(|a| {
            (-4..=4).all(|b| {
                let x = AlgebraElement::rot(&s, a, b);
                ad_u_inv_v(&x).expect("rotation model") == x.apply_grading()
            })
        });
        inst.push(InstanceResult::new(
            format!("rotation n={n}: Ad(u⁻¹v) = γ on u^a v^b, |a|,|b| ≤ 4"),
            json!({"n": n, "check": "inner grading"}),
            ok,
        ));
    }
    // Graded independence of the canonical generator pairs.
    for n in cfg.grid_n([2, 3, 4, 5]) {
        let s = rotation(n);
        let indep = check_graded_independence(
            &[AlgebraElement::rot(&s, 1, 0), AlgebraElement::rot(&s, -1, 0)],
            &[AlgebraElement::rot(&s, 0, 1), AlgebraElement::rot(&s, 0, -1)],
            cfg.depth,
        )
        .map_err(|e| CliError::Hypothesis(e.to_string()))?;
        inst.push(InstanceResult::new(
            format!("rotation n={n}: ⟨u⟩ and ⟨v⟩ graded independent to depth {}", cfg.depth),
            json!({"n": n, "check": "independence", "depth": cfg.depth}),
            indep.is_none(),
        ));
    }
    // Divisible support of q-cumulants.
    for n in cfg.grid_n([2, 3, 4]) {
        let q = crate::cyclo::root_of_unity(n as u64, 1);
        let mut ok = true;
        for t in 0..trials {
            let mut rng = cfg.rng(500 + n as u64, t);
            let mu: MomentSequence<CycloNum> = random_divisible_moments(&mut rng, n, cfg.truncation)
                .map(|r| CycloNum::from_rational(r.clone()));
            ok &= check_divisible_support(&mu, n, &q, cfg.truncation)
                .map_err(|e| CliError::Hypothesis(e.to_string()))?
                == DivisibleSupport::Holds;
        }
        inst.push(InstanceResult::new(
            format!("n={n}: q-cumulants of divisibly supported moments are divisibly supported"),
            json!({"n": n, "check": "divisible support", "K": cfg.truncation}),
            ok,
        ));
    }
    Ok(VerificationReport::new(
        "structural",
        Mode::Assert,
        json!({"trials": trials, "seed": cfg.seed, "depth": cfg.depth}),
        inst,
    ))
}
