//! Dense polynomials over F_3 with `u8` digits, used only while building
//! field tables (before any `Field` exists).

pub(crate) type Digits = Vec<u8>;

pub(crate) fn trim(mut p: Digits) -> Digits {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn degree(p: &[u8]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo `m` (m nonzero).
pub(crate) fn rem(a: &[u8], m: &[u8]) -> Digits {
    let dm = degree(m).expect("modulus is nonzero");
    let lead_inv = m[dm]; // 1 and 2 are self-inverse mod 3
    let mut r = a.to_vec();
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let factor = (r[dr] * lead_inv) % 3;
        let shift = dr - dm;
        for (i, &mc) in m.iter().enumerate().take(dm + 1) {
            r[shift + i] = (r[shift + i] + 3 * 3 - factor * mc) % 3;
        }
    }
    trim(r)
}

pub(crate) fn mul(a: &[u8], b: &[u8]) -> Digits {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % 3;
        }
    }
    trim(out)
}

pub(crate) fn mul_mod(a: &[u8], b: &[u8], m: &[u8]) -> Digits {
    rem(&mul(a, b), m)
}

/// Exhaustive irreducibility test: trial division by every monic polynomial
/// of degree `1..=deg/2`.
pub(crate) fn is_irreducible(m: &[u8]) -> bool {
    let Some(n) = degree(m) else { return false };
    if n == 0 {
        return false;
    }
    for k in 1..=n / 2 {
        let count = 3usize.pow(k as u32);
        for low in 0..count {
            let mut cand = vec![0u8; k + 1];
            let mut v = low;
            for c in cand.iter_mut().take(k) {
                *c = (v % 3) as u8;
                v /= 3;
            }
            cand[k] = 1;
            if rem(m, &cand).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Digits of `code` in base 3, little-endian, padded to `len`.
pub(crate) fn code_to_digits(mut code: u32, len: usize) -> Digits {
    let mut out = vec![0u8; len];
    for d in out.iter_mut() {
        *d = (code % 3) as u8;
        code /= 3;
    }
    out
}

pub(crate) fn digits_to_code(digits: &[u8]) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * 3 + d as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_irreducibles() {
        // x^2 + 1 irreducible, x^2 + 2 = (x+1)(x+2) not
        assert!(is_irreducible(&[1, 0, 1]));
        assert!(!is_irreducible(&[2, 0, 1]));
        // x^3 - x + 1
        assert!(is_irreducible(&[1, 2, 0, 1]));
    }

    #[test]
    fn monic_irreducible_counts() {
        // number of monic irreducibles over F_3 of degree 1..4: 3, 3, 8, 18
        for (deg, expected) in [(1usize, 3usize), (2, 3), (3, 8), (4, 18)] {
            let count = (0..3u32.pow(deg as u32))
                .filter(|&low| {
                    let mut m = code_to_digits(low, deg);
                    m.push(1);
                    is_irreducible(&m)
                })
                .count();
            assert_eq!(count, expected, "degree {deg}");
        }
    }
}
