//! q-commuting monomial algebras with an expectation and a ℤ_n grading.
//!
//! Three models share one representation. Elements are finite linear
//! combinations of normal-ordered monomials, and every product is brought
//! back to normal order while the q-phase is tracked as an exponent mod `n`.
//!
//! - Rotation: Laurent monomials `u^a v^b` with `vu = q uv`.
//! - Clifford `C_m^(n)`: `e_1^{a_1} ⋯ e_m^{a_m}` with `e_iⁿ = 1` and
//!   `e_j e_i = q e_i e_j` for `i < j`.
//! - Graded tensor `A ⊗_q B`: `(a⊗b)(a'⊗b') = q^{δ(b)δ(a')} aa' ⊗ bb'`.
//!
//! The expectation reads off the coefficient of the identity monomial, and
//! the grading multiplies a monomial by `q^{degree}`, where the degree is the
//! total exponent (`δ(u) = δ(v) = δ(e_i) = 1`).

mod checks;
mod json;

pub use checks::*;
pub use json::*;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::cumulants::{random_rational, MomentSequence};
use crate::cyclo::CycloNum;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("q = {q} is not a primitive {n}-th root of unity")]
    NotPrimitive { q: String, n: u64 },
    #[error("tensor factors must share n and q")]
    TensorMismatch,
    #[error("elements belong to different algebras")]
    SpecMismatch,
    #[error("a Clifford algebra needs at least one generator")]
    NoGenerators,
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Rotation,
    Clifford { m: usize },
    Tensor(Arc<AlgebraSpec>, Arc<AlgebraSpec>),
}

/// A model together with its grading order `n` and primitive root `q`.
#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    kind: ModelKind,
    n: u64,
    q: CycloNum,
    q_powers: Vec<CycloNum>,
}

impl PartialEq for AlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.q == other.q && self.kind == other.kind
    }
}

impl Eq for AlgebraSpec {}

impl AlgebraSpec {
    fn build(kind: ModelKind, n: u64, q: CycloNum) -> Result<Arc<Self>, AlgebraError> {
        if !q.is_primitive(n) {
            return Err(AlgebraError::NotPrimitive { q: q.to_string(), n });
        }
        let mut q_powers = Vec::with_capacity(n as usize);
        let mut cur = CycloNum::one();
        for _ in 0..n {
            q_powers.push(cur.clone());
            cur = &cur * &q;
        }
        Ok(Arc::new(AlgebraSpec { kind, n, q, q_powers }))
    }

    /// The universal rotation algebra on invertible `u, v` with `vu = q uv`.
    pub fn rotation(n: u64, q: CycloNum) -> Result<Arc<Self>, AlgebraError> {
        Self::build(ModelKind::Rotation, n, q)
    }

    /// The generalized Clifford algebra `C_m^(n)`.
    pub fn clifford(m: usize, n: u64, q: CycloNum) -> Result<Arc<Self>, AlgebraError> {
        if m == 0 {
            return Err(AlgebraError::NoGenerators);
        }
        Self::build(ModelKind::Clifford { m }, n, q)
    }

    /// `left ⊗_q right`.
    pub fn graded_tensor(
        left: &Arc<AlgebraSpec>,
        right: &Arc<AlgebraSpec>,
    ) -> Result<Arc<Self>, AlgebraError> {
        if left.n != right.n || left.q != right.q {
            return Err(AlgebraError::TensorMismatch);
        }
        Self::build(
            ModelKind::Tensor(left.clone(), right.clone()),
            left.n,
            left.q.clone(),
        )
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> &CycloNum {
        &self.q
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(&self, e: i64) -> CycloNum {
        self.q_powers[e.rem_euclid(self.n as i64) as usize].clone()
    }

    pub fn identity_monomial(&self) -> Monomial {
        match &self.kind {
            ModelKind::Rotation => Monomial::Rot(0, 0),
            ModelKind::Clifford { m } => Monomial::Cliff(vec![0; *m]),
            ModelKind::Tensor(l, r) => Monomial::Pair(
                Box::new(l.identity_monomial()),
                Box::new(r.identity_monomial()),
            ),
        }
    }

    /// The additive degree mod `n`.
    pub fn degree(&self, m: &Monomial) -> i64 {
        let n = self.n as i64;
        match m {
            Monomial::Rot(a, b) => (a + b).rem_euclid(n),
            Monomial::Cliff(e) => (e.iter().map(|&x| x as i64).sum::<i64>()).rem_euclid(n),
            Monomial::Pair(x, y) => match &self.kind {
                ModelKind::Tensor(l, r) => (l.degree(x) + r.degree(y)).rem_euclid(n),
                _ => panic!("pair monomial outside a tensor model"),
            },
        }
    }

    /// `x·y = q^e · z` with `z` in normal order; returns `(e mod n, z)`.
    pub fn mul_monomials(&self, x: &Monomial, y: &Monomial) -> (i64, Monomial) {
        let n = self.n as i64;
        match (&self.kind, x, y) {
            (ModelKind::Rotation, Monomial::Rot(a, b), Monomial::Rot(c, d)) => {
                // v^b u^c = q^{bc} u^c v^b
                ((b * c).rem_euclid(n), Monomial::Rot(a + c, b + d))
            }
            (ModelKind::Clifford { .. }, Monomial::Cliff(a), Monomial::Cliff(b)) => {
                // e_j^{a_j} e_i^{b_i} = q^{a_j b_i} e_i^{b_i} e_j^{a_j} for i < j
                let mut phase = 0i64;
                let mut suffix = 0i64;
                for i in (0..a.len()).rev() {
                    phase += suffix * b[i] as i64;
                    suffix += a[i] as i64;
                }
                let exps = a
                    .iter()
                    .zip(b)
                    .map(|(&x, &y)| ((x + y) as u64 % self.n) as u32)
                    .collect();
                (phase.rem_euclid(n), Monomial::Cliff(exps))
            }
            (ModelKind::Tensor(l, r), Monomial::Pair(a, b), Monomial::Pair(a2, b2)) => {
                let (e1, left) = l.mul_monomials(a, a2);
                let (e2, right) = r.mul_monomials(b, b2);
                let twist = r.degree(b) * l.degree(a2);
                (
                    (e1 + e2 + twist).rem_euclid(n),
                    Monomial::Pair(Box::new(left), Box::new(right)),
                )
            }
            _ => panic!("monomial shape does not match the model"),
        }
    }

    /// Generator names: `u, v` for rotation, `e1, …, em` for Clifford, and
    /// `L.x` / `R.x` for the legs of a tensor product.
    pub fn generator_names(&self) -> Vec<String> {
        match &self.kind {
            ModelKind::Rotation => vec!["u".into(), "v".into()],
            ModelKind::Clifford { m } => (1..=*m).map(|i| format!("e{i}")).collect(),
            ModelKind::Tensor(l, r) => l
                .generator_names()
                .into_iter()
                .map(|g| format!("L.{g}"))
                .chain(r.generator_names().into_iter().map(|g| format!("R.{g}")))
                .collect(),
        }
    }

    /// The monomial of a named generator.
    pub fn generator_monomial(&self, name: &str) -> Result<Monomial, AlgebraError> {
        let unknown = || AlgebraError::UnknownGenerator(name.to_string());
        match &self.kind {
            ModelKind::Rotation => match name {
                "u" => Ok(Monomial::Rot(1, 0)),
                "v" => Ok(Monomial::Rot(0, 1)),
                _ => Err(unknown()),
            },
            ModelKind::Clifford { m } => {
                let i: usize = name
                    .strip_prefix('e')
                    .and_then(|s| s.parse().ok())
                    .filter(|&i| (1..=*m).contains(&i))
                    .ok_or_else(unknown)?;
                let mut e = vec![0; *m];
                e[i - 1] = 1 % self.n as u32;
                Ok(Monomial::Cliff(e))
            }
            ModelKind::Tensor(l, r) => {
                if let Some(g) = name.strip_prefix("L.") {
                    Ok(Monomial::Pair(
                        Box::new(l.generator_monomial(g)?),
                        Box::new(r.identity_monomial()),
                    ))
                } else if let Some(g) = name.strip_prefix("R.") {
                    Ok(Monomial::Pair(
                        Box::new(l.identity_monomial()),
                        Box::new(r.generator_monomial(g)?),
                    ))
                } else {
                    Err(unknown())
                }
            }
        }
    }

    /// A random monomial; rotation exponents are drawn from `-4..=4`.
    pub fn random_monomial(&self, rng: &mut impl Rng) -> Monomial {
        match &self.kind {
            ModelKind::Rotation => Monomial::Rot(rng.gen_range(-4..=4), rng.gen_range(-4..=4)),
            ModelKind::Clifford { m } => {
                Monomial::Cliff((0..*m).map(|_| rng.gen_range(0..self.n as u32)).collect())
            }
            ModelKind::Tensor(l, r) => Monomial::Pair(
                Box::new(l.random_monomial(rng)),
                Box::new(r.random_monomial(rng)),
            ),
        }
    }
}

/// A normal-ordered monomial. The derived order is the canonical order used
/// for storage and serialization.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Monomial {
    /// `u^a v^b`
    Rot(i64, i64),
    /// `e_1^{a_1} ⋯ e_m^{a_m}`, exponents in `0..n`
    Cliff(Vec<u32>),
    /// `x ⊗ y`
    Pair(Box<Monomial>, Box<Monomial>),
}

impl Monomial {
    pub fn is_identity(&self) -> bool {
        match self {
            Monomial::Rot(a, b) => *a == 0 && *b == 0,
            Monomial::Cliff(e) => e.iter().all(|&x| x == 0),
            Monomial::Pair(x, y) => x.is_identity() && y.is_identity(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn factor(f: &mut fmt::Formatter<'_>, name: &str, e: i64, first: &mut bool) -> fmt::Result {
            if e == 0 {
                return Ok(());
            }
            if !*first {
                write!(f, "·")?;
            }
            *first = false;
            if e == 1 {
                write!(f, "{name}")
            } else {
                write!(f, "{name}^{e}")
            }
        }
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        match self {
            Monomial::Rot(a, b) => {
                factor(f, "u", *a, &mut first)?;
                factor(f, "v", *b, &mut first)
            }
            Monomial::Cliff(e) => {
                for (i, &x) in e.iter().enumerate() {
                    factor(f, &format!("e{}", i + 1), x as i64, &mut first)?;
                }
                Ok(())
            }
            Monomial::Pair(x, y) => write!(f, "({x})⊗({y})"),
        }
    }
}

/// Result of [`AlgebraElement::degree_of`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    /// The zero element, homogeneous of every degree.
    Zero,
    Homogeneous(i64),
    Inhomogeneous,
}

/// A finite combination `Σ c_m m` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    spec: Arc<AlgebraSpec>,
    terms: BTreeMap<Monomial, CycloNum>,
}

impl AlgebraElement {
    pub fn zero(spec: &Arc<AlgebraSpec>) -> Self {
        AlgebraElement {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: &Arc<AlgebraSpec>) -> Self {
        Self::monomial(spec, spec.identity_monomial(), CycloNum::one())
    }

    pub fn monomial(spec: &Arc<AlgebraSpec>, m: Monomial, c: CycloNum) -> Self {
        let mut e = Self::zero(spec);
        e.add_term(m, c);
        e
    }

    pub fn scalar(spec: &Arc<AlgebraSpec>, c: CycloNum) -> Self {
        Self::monomial(spec, spec.identity_monomial(), c)
    }

    /// A named generator, see [`AlgebraSpec::generator_names`].
    pub fn generator(spec: &Arc<AlgebraSpec>, name: &str) -> Result<Self, AlgebraError> {
        Ok(Self::monomial(spec, spec.generator_monomial(name)?, CycloNum::one()))
    }

    /// `u^a v^b` in a rotation model.
    pub fn rot(spec: &Arc<AlgebraSpec>, a: i64, b: i64) -> Self {
        assert_eq!(spec.kind, ModelKind::Rotation, "rotation monomial in another model");
        Self::monomial(spec, Monomial::Rot(a, b), CycloNum::one())
    }

    pub fn from_terms(
        spec: &Arc<AlgebraSpec>,
        terms: impl IntoIterator<Item = (Monomial, CycloNum)>,
    ) -> Self {
        let mut e = Self::zero(spec);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    /// `terms` nonzero monomials with random small rational coefficients.
    pub fn random(spec: &Arc<AlgebraSpec>, rng: &mut impl Rng, terms: usize) -> Self {
        let mut e = Self::zero(spec);
        for _ in 0..terms {
            let m = spec.random_monomial(rng);
            let c = CycloNum::from_rational(random_rational(rng, 20));
            e.add_term(m, c);
        }
        e
    }

    fn add_term(&mut self, m: Monomial, c: CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, CycloNum> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec {
            Ok(())
        } else {
            Err(AlgebraError::SpecMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let mut out = Self::zero(&self.spec);
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                let (e, z) = self.spec.mul_monomials(x, y);
                out.add_term(z, &(a * b) * &self.spec.q_pow(e));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        Self::from_terms(
            &self.spec,
            self.terms.iter().map(|(m, x)| (m.clone(), x * c)),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.spec);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `φ`: the coefficient of the identity monomial.
    pub fn phi(&self) -> CycloNum {
        self.terms
            .get(&self.spec.identity_monomial())
            .cloned()
            .unwrap_or_else(CycloNum::zero)
    }

    /// `γ`: each monomial picks up `q^{degree}`.
    pub fn apply_grading(&self) -> Self {
        self.grading_power(1)
    }

    /// `γ^i`.
    pub fn grading_power(&self, i: i64) -> Self {
        Self::from_terms(
            &self.spec,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), c * &self.spec.q_pow(i * self.spec.degree(m)))),
        )
    }

    /// `E_r(x) = (1/n) Σ_i q^{-ri} γ^i(x)`, the projection onto the
    /// `q^r`-eigenspace of `γ`.
    pub fn projection(&self, r: i64) -> Self {
        let n = self.spec.n as i64;
        let mut acc = Self::zero(&self.spec);
        for i in 0..n {
            acc = &acc + &self.grading_power(i).scale(&self.spec.q_pow(-r * i));
        }
        acc.scale(&CycloNum::from_rational(crate::scalar::rat(1, n)))
    }

    pub fn degree_of(&self) -> Degree {
        let mut degrees = self.terms.keys().map(|m| self.spec.degree(m));
        let Some(first) = degrees.next() else {
            return Degree::Zero;
        };
        if degrees.all(|d| d == first) {
            Degree::Homogeneous(first)
        } else {
            Degree::Inhomogeneous
        }
    }

    /// `(φ(a), φ(a²), …, φ(a^K))`.
    pub fn moments_of(&self, truncation: usize) -> MomentSequence<CycloNum> {
        let mut values = Vec::with_capacity(truncation);
        let mut acc = self.clone();
        for _ in 0..truncation {
            values.push(acc.phi());
            acc = &acc * self;
        }
        MomentSequence::new(values).expect("truncation ≥ 1")
    }

    /// `a ⊗ 1` in `self.spec ⊗_q right`.
    pub fn inject_left(&self, tensor: &Arc<AlgebraSpec>) -> Result<Self, AlgebraError> {
        let ModelKind::Tensor(l, r) = &tensor.kind else {
            return Err(AlgebraError::SpecMismatch);
        };
        if **l != *self.spec {
            return Err(AlgebraError::SpecMismatch);
        }
        let id = r.identity_monomial();
        Ok(Self::from_terms(
            tensor,
            self.terms.iter().map(|(m, c)| {
                (Monomial::Pair(Box::new(m.clone()), Box::new(id.clone())), c.clone())
            }),
        ))
    }

    /// `1 ⊗ b` in `left ⊗_q self.spec`.
    pub fn inject_right(&self, tensor: &Arc<AlgebraSpec>) -> Result<Self, AlgebraError> {
        let ModelKind::Tensor(l, r) = &tensor.kind else {
            return Err(AlgebraError::SpecMismatch);
        };
        if **r != *self.spec {
            return Err(AlgebraError::SpecMismatch);
        }
        let id = l.identity_monomial();
        Ok(Self::from_terms(
            tensor,
            self.terms.iter().map(|(m, c)| {
                (Monomial::Pair(Box::new(id.clone()), Box::new(m.clone())), c.clone())
            }),
        ))
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> AlgebraElement {
        self.try_add(rhs).expect("operands from the same algebra")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&CycloNum::from_int(-1))
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        self + &(-rhs)
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        self.try_mul(rhs).expect("operands from the same algebra")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (c.is_one(), m.is_identity()) {
                (_, true) => write!(f, "({c})")?,
                (true, false) => write!(f, "{m}")?,
                (false, false) => write!(f, "({c})·{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::root_of_unity;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rot(n: u64) -> Arc<AlgebraSpec> {
        AlgebraSpec::rotation(n, root_of_unity(n, 1)).unwrap()
    }

    #[test]
    fn rotation_relation() {
        let s = rot(5);
        let u = AlgebraElement::rot(&s, 1, 0);
        let v = AlgebraElement::rot(&s, 0, 1);
        assert_eq!(&v * &u, AlgebraElement::rot(&s, 1, 1).scale(s.q()));
        assert_eq!(&u * &v, AlgebraElement::rot(&s, 1, 1));
    }

    #[test]
    fn rotation_cube_of_sum() {
        let s = rot(3);
        let u = AlgebraElement::rot(&s, 1, 0);
        let v = AlgebraElement::rot(&s, 0, 1);
        let lhs = (&u + &v).pow(3);
        assert_eq!(lhs, &AlgebraElement::rot(&s, 3, 0) + &AlgebraElement::rot(&s, 0, 3));
    }

    #[test]
    fn clifford_relations() {
        let q = root_of_unity(3, 1);
        let s = AlgebraSpec::clifford(2, 3, q.clone()).unwrap();
        let e1 = AlgebraElement::generator(&s, "e1").unwrap();
        let e2 = AlgebraElement::generator(&s, "e2").unwrap();
        assert_eq!(&e2 * &e1, (&e1 * &e2).scale(&q));
        assert_eq!(e1.pow(3), AlgebraElement::one(&s));
        assert!(AlgebraElement::generator(&s, "e3").is_err());
    }

    #[test]
    fn phi_values() {
        let s = rot(4);
        assert_eq!(AlgebraElement::one(&s).phi(), CycloNum::one());
        assert!(AlgebraElement::rot(&s, 2, -1).phi().is_zero());
        // u v u^{-1} v^{-1}: v u^{-1} = q^{-1} u^{-1} v, so the product is q^{-1}
        let u = AlgebraElement::rot(&s, 1, 0);
        let v = AlgebraElement::rot(&s, 0, 1);
        let ui = AlgebraElement::rot(&s, -1, 0);
        let vi = AlgebraElement::rot(&s, 0, -1);
        let comm = &(&(&u * &v) * &ui) * &vi;
        assert_eq!(comm.phi(), root_of_unity(4, -1));
    }

    #[test]
    fn grading_and_degree() {
        let s = rot(3);
        let u = AlgebraElement::rot(&s, 1, 0);
        assert_eq!(u.apply_grading(), u.scale(s.q()));
        let uv = AlgebraElement::rot(&s, 1, 1);
        assert_eq!(uv.degree_of(), Degree::Homogeneous(2));
        assert_eq!(AlgebraElement::zero(&s).degree_of(), Degree::Zero);
        let mixed = &u + &uv;
        assert_eq!(mixed.degree_of(), Degree::Inhomogeneous);
        assert_eq!(mixed.projection(1), u);
        assert_eq!(mixed.projection(2), uv);
        assert!(mixed.projection(0).is_zero());
        let fixed = AlgebraElement::rot(&s, 2, 1);
        assert_eq!(fixed.projection(0), fixed);
    }

    #[test]
    fn grading_has_order_n() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 2..=5 {
            let s = rot(n);
            for _ in 0..10 {
                let x = AlgebraElement::random(&s, &mut rng, 5);
                assert_eq!(x.grading_power(n as i64), x);
                let sum = (0..n as i64).fold(AlgebraElement::zero(&s), |acc, r| &acc + &x.projection(r));
                assert_eq!(sum, x);
            }
        }
    }

    #[test]
    fn moments_of_generators() {
        let s = rot(3);
        let u = AlgebraElement::rot(&s, 1, 0);
        assert!(u.moments_of(6).values().iter().all(|m| m.is_zero()));
        let one = AlgebraElement::one(&s);
        assert!(one.moments_of(4).values().iter().all(|m| m.is_one()));
        let c = AlgebraSpec::clifford(2, 3, root_of_unity(3, 1)).unwrap();
        let e1 = AlgebraElement::generator(&c, "e1").unwrap();
        let mu = e1.moments_of(9);
        for k in 1..=9 {
            assert_eq!(mu.get(k).is_one(), k % 3 == 0);
            assert_eq!(mu.get(k).is_zero(), k % 3 != 0);
        }
    }

    #[test]
    fn tensor_twist() {
        let r = rot(3);
        let t = AlgebraSpec::graded_tensor(&r, &r).unwrap();
        let u_l = AlgebraElement::rot(&r, 1, 0).inject_left(&t).unwrap();
        let v_r = AlgebraElement::rot(&r, 0, 1).inject_right(&t).unwrap();
        let uv = &u_l * &v_r;
        assert_eq!(uv.terms().values().next().unwrap(), &CycloNum::one());
        assert_eq!(&v_r * &u_l, uv.scale(t.q()));
        let other = rot(4);
        assert_eq!(
            AlgebraSpec::graded_tensor(&r, &other),
            Err(AlgebraError::TensorMismatch)
        );
    }

    #[test]
    fn rejects_non_primitive_q() {
        assert!(AlgebraSpec::rotation(4, CycloNum::from_int(-1)).is_err());
        assert!(AlgebraSpec::clifford(0, 2, CycloNum::from_int(-1)).is_err());
    }

    #[test]
    fn display() {
        let s = rot(3);
        let x = &AlgebraElement::rot(&s, 2, -1) + &AlgebraElement::one(&s).scale(&CycloNum::from_int(2));
        assert_eq!(x.to_string(), "(2) + u^2·v^-1");
    }
}
