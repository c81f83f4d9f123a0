//! Dense integer polynomials and their arithmetic modulo `m`, as needed for
//! Hensel lifting. Coefficients are ascending `BigInt`s without trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub(crate) fn lc(a: &[BigInt]) -> BigInt {
    a.last().cloned().unwrap_or_else(BigInt::zero)
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt) -> ZPoly {
    trim(a.iter().map(|x| x * c).collect())
}

/// Coefficients reduced into `[0, m)`.
pub(crate) fn modp(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|x| x.mod_floor(m)).collect())
}

/// Coefficients reduced into `(-m/2, m/2]`.
pub(crate) fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half: BigInt = m >> 1;
    trim(
        a.iter()
            .map(|x| {
                let r = x.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

pub(crate) fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let g = a.mod_floor(m).extended_gcd(m);
    debug_assert!(g.gcd.is_one());
    g.x.mod_floor(m)
}

/// Division by a polynomial whose leading coefficient is a unit mod `m`.
pub(crate) fn div_rem_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let b = modp(b, m);
    let mut r = modp(a, m);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = inv_mod(&lc(&b), m);
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = (&r[i + db] * &inv).mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] = (&r[i + j] - &c * y).mod_floor(m);
        }
        q[i] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

/// Exact division over Z, `None` if `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if b.is_empty() {
        return None;
    }
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let lb = lc(&b);
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let (c, rem) = r[i + db].div_rem(&lb);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] -= &c * y;
        }
        q[i] = c;
    }
    r.iter().all(|c| c.is_zero()).then(|| trim(q))
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(a: &[BigInt]) -> ZPoly {
    let mut c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    if lc(a).is_negative() {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

pub(crate) fn max_abs(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

/// One quadratic Hensel step: from `f = g h mod m` and `s g + t h = 1 mod m`
/// (with `h` monic, `deg s < deg h`, `deg t < deg g`) to the same relations
/// modulo `m^2`.
pub(crate) fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let mm = m * m;
    let e = modp(&sub(f, &mul(g, h)), &mm);
    let (q, r) = div_rem_mod(&mul(s, &e), h, &mm);
    let g2 = modp(&add(&add(g, &mul(t, &e)), &mul(&q, g)), &mm);
    let h2 = modp(&add(h, &r), &mm);
    let b = modp(
        &sub(&add(&mul(s, &g2), &mul(t, &h2)), &[BigInt::one()]),
        &mm,
    );
    let (c, d) = div_rem_mod(&mul(s, &b), &h2, &mm);
    let s2 = modp(&sub(s, &d), &mm);
    let t2 = modp(&sub(&sub(t, &mul(t, &b)), &mul(&c, &g2)), &mm);
    (g2, h2, s2, t2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        trim(c.iter().map(|x| BigInt::from(*x)).collect())
    }

    #[test]
    fn exact_division() {
        // (x^2 - 1) / (x - 1) = x + 1
        assert_eq!(div_exact(&z(&[-1, 0, 1]), &z(&[-1, 1])), Some(z(&[1, 1])));
        assert_eq!(div_exact(&z(&[1, 0, 1]), &z(&[-1, 1])), None);
        assert_eq!(div_exact(&z(&[2, 0, 2]), &z(&[0, 2])), None);
    }

    #[test]
    fn hensel_step_lifts() {
        // x^2 - 2 = (x - 3)(x + 3) mod 7
        let f = z(&[-2, 0, 1]);
        let m = BigInt::from(7);
        let g = z(&[4, 1]);
        let h = z(&[3, 1]);
        // s g + t h = 1 mod 7: (x+4) - (x+3) = 1
        let (g2, h2, s2, t2) = hensel_step(&f, &g, &h, &z(&[1]), &z(&[6]), &m);
        let mm = BigInt::from(49);
        assert!(modp(&sub(&f, &mul(&g2, &h2)), &mm).is_empty());
        let one = modp(&add(&mul(&s2, &g2), &mul(&t2, &h2)), &mm);
        assert_eq!(one, z(&[1]));
    }
}
