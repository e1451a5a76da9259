use std::sync::Arc;

use num_integer::Integer;

use super::{AlgebraElement, AlgebraError, AlgebraSpec, Degree, ModelKind};
use crate::cyclo::CycloNum;
use crate::series::{graded_r_transform, FormalSeries};

/// `Ad(u^{-1}v)(x) = w x w^{-1}` with `w = u^{-1}v`, `w^{-1} = v^{-1}u`.
pub fn ad_u_inv_v(x: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
    let spec = x.spec();
    if *spec.kind() != ModelKind::Rotation {
        return Err(AlgebraError::Hypothesis(
            "Ad(u⁻¹v) is defined on the rotation model".into(),
        ));
    }
    let u_inv = AlgebraElement::rot(spec, -1, 0);
    let v_inv = AlgebraElement::rot(spec, 0, -1);
    let u = AlgebraElement::rot(spec, 1, 0);
    let v = AlgebraElement::rot(spec, 0, 1);
    let w = &u_inv * &v;
    let w_inv = &v_inv * &u;
    Ok(&(&w * x) * &w_inv)
}

fn homogeneous_degree(x: &AlgebraElement, what: &str) -> Result<Option<i64>, AlgebraError> {
    match x.degree_of() {
        Degree::Zero => Ok(None),
        Degree::Homogeneous(r) => Ok(Some(r)),
        Degree::Inhomogeneous => Err(AlgebraError::Hypothesis(format!(
            "{what} is not homogeneous"
        ))),
    }
}

/// All products `g_{i_1} ⋯ g_{i_l}` with `1 ≤ l ≤ depth`, in order of
/// length and then lexicographically in the generator indices.
pub fn words(gens: &[AlgebraElement], depth: usize) -> Vec<(Vec<usize>, AlgebraElement)> {
    let mut out: Vec<(Vec<usize>, AlgebraElement)> = Vec::new();
    let mut frontier: Vec<(Vec<usize>, AlgebraElement)> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| (vec![i], g.clone()))
        .collect();
    for _ in 0..depth {
        out.extend(frontier.iter().cloned());
        frontier = frontier
            .iter()
            .flat_map(|(w, x)| {
                gens.iter().enumerate().map(move |(i, g)| {
                    let mut w2 = w.clone();
                    w2.push(i);
                    (w2, x * g)
                })
            })
            .collect();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndependenceFailure {
    /// `ba ≠ q^{δ(a)δ(b)} ab`
    Commutation,
    /// `φ(ab) ≠ φ(a)φ(b)`
    Factorization,
}

/// A pair of words violating one of the two conditions.
#[derive(Clone, Debug)]
pub struct IndependenceCounterexample {
    pub a_word: Vec<usize>,
    pub b_word: Vec<usize>,
    pub a: AlgebraElement,
    pub b: AlgebraElement,
    pub failure: IndependenceFailure,
}

/// Checks graded independence of the subalgebras generated by `a_gens` and
/// `b_gens` on all words up to length `depth`. Returns the first
/// counterexample, or `None` if every pair passes. This is a bounded check,
/// not a proof.
pub fn check_graded_independence(
    a_gens: &[AlgebraElement],
    b_gens: &[AlgebraElement],
    depth: usize,
) -> Result<Option<IndependenceCounterexample>, AlgebraError> {
    let spec = a_gens
        .iter()
        .chain(b_gens)
        .next()
        .map(|g| g.spec().clone())
        .ok_or_else(|| AlgebraError::Hypothesis("no generators given".into()))?;
    for (i, g) in a_gens.iter().chain(b_gens).enumerate() {
        homogeneous_degree(g, &format!("generator #{}", i + 1))?;
        if *g.spec() != spec {
            return Err(AlgebraError::SpecMismatch);
        }
    }
    let a_words = words(a_gens, depth);
    let b_words = words(b_gens, depth);
    for (wa, a) in &a_words {
        let da = homogeneous_degree(a, "word")?.unwrap_or(0);
        for (wb, b) in &b_words {
            let db = homogeneous_degree(b, "word")?.unwrap_or(0);
            let ab = a * b;
            let failure = if b * a != ab.scale(&spec.q_pow(da * db)) {
                Some(IndependenceFailure::Commutation)
            } else if ab.phi() != a.phi() * b.phi() {
                Some(IndependenceFailure::Factorization)
            } else {
                None
            };
            if let Some(failure) = failure {
                return Ok(Some(IndependenceCounterexample {
                    a_word: wa.clone(),
                    b_word: wb.clone(),
                    a: a.clone(),
                    b: b.clone(),
                    failure,
                }));
            }
        }
    }
    Ok(None)
}

fn common_degree(a: &AlgebraElement, b: &AlgebraElement) -> Result<i64, AlgebraError> {
    if a.spec() != b.spec() {
        return Err(AlgebraError::SpecMismatch);
    }
    match (homogeneous_degree(a, "a")?, homogeneous_degree(b, "b")?) {
        (Some(r), Some(s)) if r != s => Err(AlgebraError::Hypothesis(format!(
            "a has degree {r} but b has degree {s}"
        ))),
        (Some(r), _) | (None, Some(r)) => Ok(r),
        (None, None) => Ok(0),
    }
}

/// Outcome of the power-rule check.
#[derive(Clone, Debug)]
pub struct PowerRuleReport {
    pub degree: i64,
    pub exponent: u32,
    pub lhs: AlgebraElement,
    pub rhs: AlgebraElement,
}

impl PowerRuleReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Compares `(a + b)^{n'}` with `a^{n'} + b^{n'}`, where `r` is the common
/// degree and `n' = n / gcd(r, n)`. Independence of the two subalgebras is
/// the caller's hypothesis.
pub fn verify_power_rule(
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<PowerRuleReport, AlgebraError> {
    let r = common_degree(a, b)?;
    let n = a.spec().n() as i64;
    let exponent = (n / r.gcd(&n)) as u32;
    Ok(PowerRuleReport {
        degree: r,
        exponent,
        lhs: (a + b).pow(exponent),
        rhs: &a.pow(exponent) + &b.pow(exponent),
    })
}

/// The three graded r-transforms of the linearization check.
#[derive(Clone, Debug)]
pub struct LinearizationReport {
    pub degree: i64,
    pub r_a: FormalSeries<CycloNum>,
    pub r_b: FormalSeries<CycloNum>,
    pub r_sum: FormalSeries<CycloNum>,
}

impl LinearizationReport {
    pub fn holds(&self) -> bool {
        self.r_sum == &self.r_a + &self.r_b
    }

    /// `r[a+b] − r[a] − r[b]`.
    pub fn diff(&self) -> FormalSeries<CycloNum> {
        &(&self.r_sum - &self.r_a) - &self.r_b
    }
}

/// Computes `r[a]`, `r[b]`, `r[a+b]` from the moments through `z^K`.
pub fn verify_linearization(
    a: &AlgebraElement,
    b: &AlgebraElement,
    truncation: usize,
) -> Result<LinearizationReport, AlgebraError> {
    let r = common_degree(a, b)?;
    let spec: &Arc<AlgebraSpec> = a.spec();
    let n = spec.n() as usize;
    let transform = |x: &AlgebraElement| {
        graded_r_transform(&x.moments_of(truncation), r, n, spec.q(), truncation)
            .map_err(|e| AlgebraError::Hypothesis(e.to_string()))
    };
    Ok(LinearizationReport {
        degree: r,
        r_a: transform(a)?,
        r_b: transform(b)?,
        r_sum: transform(&(a + b))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::root_of_unity;

    fn rot(n: u64) -> Arc<AlgebraSpec> {
        AlgebraSpec::rotation(n, root_of_unity(n, 1)).unwrap()
    }

    #[test]
    fn ad_matches_grading_on_basis() {
        let s = rot(5);
        for a in -4..=4 {
            for b in -4..=4 {
                let x = AlgebraElement::rot(&s, a, b);
                assert_eq!(ad_u_inv_v(&x).unwrap(), x.apply_grading());
            }
        }
    }

    #[test]
    fn rotation_generators_are_independent() {
        let s = rot(4);
        let u = AlgebraElement::rot(&s, 1, 0);
        let v = AlgebraElement::rot(&s, 0, 1);
        assert!(check_graded_independence(std::slice::from_ref(&u), &[v], 4).unwrap().is_none());
        let cex = check_graded_independence(std::slice::from_ref(&u), std::slice::from_ref(&u), 4).unwrap().unwrap();
        assert_eq!(cex.failure, IndependenceFailure::Commutation);
        assert_eq!((cex.a_word, cex.b_word), (vec![0], vec![0]));
    }

    #[test]
    fn clifford_halves_are_independent() {
        let s = AlgebraSpec::clifford(4, 3, root_of_unity(3, 1)).unwrap();
        let g = |i: usize| AlgebraElement::generator(&s, &format!("e{i}")).unwrap();
        assert!(check_graded_independence(&[g(1), g(2)], &[g(3), g(4)], 3).unwrap().is_none());
    }

    #[test]
    fn inhomogeneous_generators_rejected() {
        let s = rot(3);
        let x = &AlgebraElement::rot(&s, 1, 0) + &AlgebraElement::one(&s);
        assert!(check_graded_independence(&[x], &[AlgebraElement::rot(&s, 0, 1)], 2).is_err());
    }

    #[test]
    fn power_rule_cases() {
        for n in 2..=5 {
            let s = rot(n);
            let rep = verify_power_rule(&AlgebraElement::rot(&s, 1, 0), &AlgebraElement::rot(&s, 0, 1)).unwrap();
            assert_eq!(rep.exponent as u64, n);
            assert!(rep.holds());
        }
        let s = rot(6);
        let rep = verify_power_rule(&AlgebraElement::rot(&s, 2, 0), &AlgebraElement::rot(&s, 0, 2)).unwrap();
        assert_eq!((rep.degree, rep.exponent), (2, 3));
        assert!(rep.holds());
        // n = 4, r = 2: q^{r²} = 1, so u² and v² commute and the square keeps
        // its cross term 2u²v².
        let s = rot(4);
        let rep = verify_power_rule(&AlgebraElement::rot(&s, 2, 0), &AlgebraElement::rot(&s, 0, 2)).unwrap();
        assert_eq!((rep.degree, rep.exponent), (2, 2));
        assert!(!rep.holds());
        let cross = &rep.lhs - &rep.rhs;
        assert_eq!(cross, AlgebraElement::rot(&s, 2, 2).scale(&CycloNum::from_int(2)));
        let zero = AlgebraElement::zero(&s);
        assert!(verify_power_rule(&AlgebraElement::rot(&s, 1, 0), &zero).unwrap().holds());
        assert!(verify_power_rule(&AlgebraElement::rot(&s, 1, 0), &AlgebraElement::rot(&s, 0, 2)).is_err());
    }

    #[test]
    fn linearization_clifford() {
        let s = AlgebraSpec::clifford(2, 4, root_of_unity(4, 1)).unwrap();
        let e1 = AlgebraElement::generator(&s, "e1").unwrap();
        let e2 = AlgebraElement::generator(&s, "e2").unwrap();
        let rep = verify_linearization(&e1, &e2, 12).unwrap();
        assert!(!rep.r_a.is_zero());
        assert!(rep.holds(), "{:?}", rep.diff());
    }
}
