//! Independent oracles: plain integer polynomial arithmetic and partition
//! counting, with no use of the library's series code.

#![allow(dead_code)]

/// Coefficients `a_0..a_top`.
pub type Poly = Vec<i64>;

pub fn mul(a: &[i64], b: &[i64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn add(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

/// `t^s`.
pub fn mono(s: usize) -> Poly {
    let mut p = vec![0; s + 1];
    p[s] = 1;
    p
}

/// `1 + t^a`.
pub fn one_plus(a: usize) -> Poly {
    add(&[1], &mono(a))
}

/// `1 + t^step + ... + t^{step * (count - 1)}`.
pub fn geometric(step: usize, count: usize) -> Poly {
    let mut p = vec![0; step * count.saturating_sub(1) + 1];
    for i in 0..count {
        p[i * step] = 1;
    }
    if count == 0 {
        p[0] = 0;
    }
    p
}

/// Pads or cuts to exactly `top + 1` coefficients.
pub fn fit(p: &[i64], top: usize) -> Poly {
    let mut out = p.to_vec();
    out.resize(top + 1, 0);
    out
}

/// Number of partitions of `j` with at most `k` parts, each at most `m`.
pub fn partitions_in_box(j: usize, k: usize, m: usize) -> i64 {
    if j == 0 {
        return 1;
    }
    if k == 0 || m == 0 {
        return 0;
    }
    // largest part below m, or remove one part equal to m
    let without = partitions_in_box(j, k, m - 1);
    let with = if j >= m { partitions_in_box(j - m, k - 1, m) } else { 0 };
    without + with
}

/// Poincaré polynomial of `G_k(C^n)` in the variable `t^step` (step 2 for
/// the complex Grassmannian itself).
pub fn grassmannian_poly(k: usize, n: usize, step: usize) -> Poly {
    let m = n - k;
    let mut p = vec![0; step * k * m + 1];
    for j in 0..=k * m {
        p[step * j] = partitions_in_box(j, k, m);
    }
    p
}

/// `Π_{i=1}^n (1 + t^step + ... + t^{step (i-1)})`.
pub fn flag_poly(n: usize, step: usize) -> Poly {
    (1..=n).fold(vec![1], |acc, i| mul(&acc, &geometric(step, i)))
}

/// Coefficients of `1/(1-t^2)^n` up to `top`.
pub fn torus_poly(n: usize, top: usize) -> Poly {
    let mut p = vec![0i64; top + 1];
    for d in (0..=top).step_by(2) {
        // C(d/2 + n - 1, n - 1)
        let j = d / 2;
        let mut c: i64 = 1;
        for i in 0..n.saturating_sub(1) {
            c = c * (j + 1 + i) as i64 / (1 + i) as i64;
        }
        p[d] = if n == 0 { (j == 0) as i64 } else { c };
    }
    p
}

pub fn as_i64(v: &[usize]) -> Poly {
    v.iter().map(|&x| x as i64).collect()
}
