//! Raw dense polynomials over F_p on `Vec<u64>`, used to represent and
//! invert extension-field elements.

use super::inv_mod;

pub(crate) fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn pad(mut v: Vec<u64>, len: usize) -> Vec<u64> {
    v.resize(len, 0);
    v
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod(*b.last().expect("nonzero divisor"), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * lead_inv % p;
        q[shift] = c;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * y % p) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    div_rem(a, b, p).1
}

/// Inverse of `a` modulo the irreducible `m` by the extended Euclidean algorithm.
pub(crate) fn inv_mod_poly(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let (mut r0, mut r1) = (m.to_vec(), rem(a, m, p));
    let (mut t0, mut t1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    debug_assert_eq!(r0.len(), 1, "modulus must be irreducible");
    let c = inv_mod(r0[0], p);
    trim(t0.iter().map(|x| x * c % p).collect())
}

/// Descending-degree text form in the variable `var`, e.g. `2*a+1`.
pub(crate) fn format(v: &[u64], var: &str) -> String {
    let mut parts = Vec::new();
    for (i, c) in v.iter().enumerate().rev() {
        if *c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        parts.push(match (i, c) {
            (0, _) => c.to_string(),
            (_, 1) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}
