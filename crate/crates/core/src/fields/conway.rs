/// Ascending coefficients of a monic irreducible modulus for `F_{p^k}`,
/// `p^k <= 64`. These are the Conway polynomials for the listed sizes.
pub fn conway_modulus(p: u64, k: u32) -> Option<&'static [u64]> {
    let m: &'static [u64] = match (p, k) {
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (2, 5) => &[1, 0, 1, 0, 0, 1],
        (2, 6) => &[1, 1, 0, 1, 1, 0, 1],
        (3, 2) => &[2, 2, 1],
        (3, 3) => &[1, 2, 0, 1],
        (5, 2) => &[2, 4, 1],
        (7, 2) => &[3, 6, 1],
        _ => return None,
    };
    Some(m)
}
