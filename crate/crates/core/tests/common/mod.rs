//! Reference implementations used as oracles by the integration tests.
//! Everything here is written straight from the definitions and shares no
//! code with the library.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Integer polynomial long division by a monic divisor; returns the remainder.
fn rem_monic(mut a: Vec<i128>, b: &[i128]) -> Vec<i128> {
    let db = b.len() - 1;
    while a.len() > db {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let shift = a.len() - db;
            for (i, &c) in b[..db].iter().enumerate() {
                a[shift + i] -= lead * c;
            }
        }
    }
    a
}

fn div_monic_exact(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut quo = vec![0i128; a.len() - db];
    for i in (0..quo.len()).rev() {
        let c = r[i + db];
        quo[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    assert!(r.iter().all(|&c| c == 0), "division is not exact");
    quo
}

/// `Φ_n` from `xⁿ − 1 = ∏_{d | n} Φ_d`.
pub fn cyclotomic_poly(n: usize) -> Vec<i128> {
    let mut p = vec![0i128; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = div_monic_exact(&p, &cyclotomic_poly(d));
    }
    p
}

/// Exact evaluation of `Σ_e h[e] ζⁿ^{e}` compared with an integer: true iff
/// `h(x) − c` is divisible by `Φ_n`.
pub fn residue_sum_equals(h: &[i128], c: i128, n: usize) -> bool {
    let mut v = h.to_vec();
    v.resize(n.max(1), 0);
    v[0] -= c;
    rem_monic(v, &cyclotomic_poly(n)).iter().all(|&x| x == 0)
}

/// Histogram of `j·e mod n` over exponents, i.e. the powers of `q = ζⁿ^j`.
pub fn histogram(exps: impl IntoIterator<Item = u64>, j: usize, n: usize) -> Vec<i128> {
    let mut h = vec![0i128; n];
    for e in exps {
        h[((e as u128 * j as u128) % n as u128) as usize] += 1;
    }
    h
}

pub fn primitive_exponents(n: usize) -> Vec<usize> {
    (1..=n).filter(|&j| gcd(j, n) == 1).map(|j| j % n).collect()
}

/// Restricted growth strings of length `n`, i.e. set partitions of `[n]`
/// with blocks indexed by first appearance.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(pos: usize, n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == n {
            out.push(cur.clone());
            return;
        }
        for l in 0..=max + 1 {
            cur.push(l);
            go(pos + 1, n, max.max(l), cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut cur = vec![0];
    go(1, n, 0, &mut cur, &mut out);
    out
}

/// Blocks (elements `1..=n`, ascending) of a labelling.
pub fn blocks_of(labels: &[usize]) -> Vec<Vec<usize>> {
    let k = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut b = vec![Vec::new(); k];
    for (i, &l) in labels.iter().enumerate() {
        b[l].push(i + 1);
    }
    b
}

pub fn labels_of(n: usize, blocks: &[Vec<usize>]) -> Vec<usize> {
    let mut f = vec![0; n];
    for (i, b) in blocks.iter().enumerate() {
        for &e in b {
            f[e - 1] = i;
        }
    }
    f
}

/// `c`: quadruples `a < b < c < d` with `a, c` in one block and `b, d` in another.
pub fn crossings(labels: &[usize]) -> u64 {
    let n = labels.len();
    let mut c = 0;
    for a in 0..n {
        for b in a + 1..n {
            for x in b + 1..n {
                for d in x + 1..n {
                    if labels[a] == labels[x] && labels[b] == labels[d] && labels[a] != labels[b] {
                        c += 1;
                    }
                }
            }
        }
    }
    c
}

/// `c₀`: pairs of blocks `A, B` with `min A < min B`, counting `a ∈ A`,
/// `b ∈ B` with `min B < a < b`.
pub fn restricted_crossings(blocks: &[Vec<usize>]) -> u64 {
    let mut c = 0;
    for a in blocks {
        for b in blocks {
            let (ma, mb) = (a.iter().min().unwrap(), b.iter().min().unwrap());
            if ma >= mb {
                continue;
            }
            for &x in a {
                for &y in b {
                    if mb < &x && x < y {
                        c += 1;
                    }
                }
            }
        }
    }
    c
}

/// All ordered set partitions of `[n]` as part-index labellings `f : [n] → [k]`
/// onto.
pub fn ordered_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 1..=n {
        let mut f = vec![0usize; n];
        loop {
            let mut seen = vec![false; k];
            f.iter().for_each(|&x| seen[x] = true);
            if seen.iter().all(|&s| s) {
                out.push(f.clone());
            }
            let mut i = 0;
            while i < n && f[i] == k - 1 {
                f[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            f[i] += 1;
        }
    }
    out
}

/// `x(P)`: pairs `x < y` with `f(x) < f(y)`.
pub fn sorting(f: &[usize]) -> u64 {
    let mut c = 0;
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if f[i] < f[j] {
                c += 1;
            }
        }
    }
    c
}

/// Plain relabelling `j ↦ j + 1 mod n` on a part-index labelling.
pub fn rotate(f: &[usize]) -> Vec<usize> {
    let n = f.len();
    let mut g = vec![0; n];
    for (i, &x) in f.iter().enumerate() {
        g[(i + 1) % n] = x;
    }
    g
}

/// The ordered-partition action: the first part is shifted by one, the other
/// parts follow the increasing bijection from the complement onto its shift.
pub fn sigma(f: &[usize]) -> Vec<usize> {
    let n = f.len();
    let shift = |e: usize| (e + 1) % n;
    let rest: Vec<usize> = (0..n).filter(|&e| f[e] != 0).collect();
    let mut image: Vec<usize> = rest.iter().map(|&e| shift(e)).collect();
    image.sort();
    let mut g = vec![usize::MAX; n];
    for e in (0..n).filter(|&e| f[e] == 0) {
        g[shift(e)] = 0;
    }
    for (i, &e) in rest.iter().enumerate() {
        g[image[i]] = f[e];
    }
    g
}

/// Bell numbers from the Bell triangle.
pub fn bell(m: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..m {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let y = *next.last().unwrap() + x;
            next.push(y);
        }
        row = next;
    }
    row[0]
}

fn fact(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Number of set partitions of `[m]` of type `λ`:
/// `m! / (∏ λ_i! · ∏_j mult_j!)`.
pub fn type_count(lambda: &[usize]) -> u64 {
    let m: usize = lambda.iter().sum();
    let mut den: u64 = lambda.iter().map(|&l| fact(l)).product();
    let mut i = 0;
    while i < lambda.len() {
        let j = (i..lambda.len()).take_while(|&j| lambda[j] == lambda[i]).count();
        den *= fact(j);
        i += j;
    }
    fact(m) / den
}

/// Integer partitions of `m` in weakly decreasing form.
pub fn int_partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// Classical cumulants from moments `m_1..m_L` by
/// `κ_k = m_k − Σ_{j<k} C(k−1, j−1) κ_j m_{k−j}`.
pub fn classical_cumulants(m: &[Q]) -> Vec<Q> {
    let mut kappa: Vec<Q> = Vec::with_capacity(m.len());
    for k in 1..=m.len() {
        let mut v = m[k - 1].clone();
        let mut binom = BigInt::one();
        for j in 1..k {
            // binom = C(k−1, j−1)
            v -= Q::from_integer(binom.clone()) * &kappa[j - 1] * &m[k - j - 1];
            binom = binom * BigInt::from(k - j) / BigInt::from(j);
        }
        kappa.push(v);
    }
    kappa
}

/// `log f` for a series with `f_0 = 1`, from `k g_k = k f_k − Σ_{j<k} j g_j f_{k−j}`.
pub fn series_log(f: &[Q]) -> Vec<Q> {
    assert!(f[0].is_one());
    let mut g = vec![Q::zero(); f.len()];
    for k in 1..f.len() {
        let mut v = q(k as i64) * &f[k];
        for j in 1..k {
            v -= q(j as i64) * &g[j] * &f[k - j];
        }
        g[k] = v / q(k as i64);
    }
    g
}

pub fn factorial_q(k: usize) -> Q {
    q(fact(k) as i64)
}

/// Gaussian binomial `[N choose i]_t` as an integer polynomial in `t`.
pub fn gaussian_binomial(big_n: usize, i: usize) -> Vec<i128> {
    if i == 0 || i == big_n {
        return vec![1];
    }
    if i > big_n {
        return vec![0];
    }
    let a = gaussian_binomial(big_n - 1, i - 1);
    let b = gaussian_binomial(big_n - 1, i);
    let mut out = vec![0i128; (a.len()).max(b.len() + i)];
    for (k, &c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (k, &c) in b.iter().enumerate() {
        out[k + i] += c;
    }
    out
}
