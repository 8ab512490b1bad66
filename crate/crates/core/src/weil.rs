//! Exact-integer Weil polynomials and the lists of supersingular quartics.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// `x^4 - s1 x^3 + s2 x^2 - q s1 x + q^2`.
///
/// Fields are declared so that the derived order sorts by `(s1, s2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeilQuartic {
    pub s1: i64,
    pub s2: i64,
    pub q: i64,
}

/// `x^2 - t x + q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeilQuadratic {
    pub t: i64,
    pub q: i64,
}

/// Exponent `d` with `q = 3^d`.
pub fn log3(q: i64) -> Result<u32> {
    let mut d = 0;
    let mut v = q;
    while v > 1 && v % 3 == 0 {
        v /= 3;
        d += 1;
    }
    if v != 1 || d == 0 {
        return Err(Error::NotPowerOfThree(q));
    }
    Ok(d)
}

/// Exact integer square root.
pub fn exact_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt().round() as i64;
    (r - 1..=r + 1).find(|&s| s >= 0 && s * s == n)
}

impl WeilQuartic {
    pub fn new(s1: i64, s2: i64, q: i64) -> Result<WeilQuartic> {
        log3(q)?;
        Ok(WeilQuartic { s1, s2, q })
    }

    /// `(x^2 - s x + q)(x^2 - t x + q)`.
    pub fn split(s: i64, t: i64, q: i64) -> WeilQuartic {
        WeilQuartic {
            s1: s + t,
            s2: s * t + 2 * q,
            q,
        }
    }

    /// Coefficients from `x^4` down to the constant.
    pub fn coefficients(&self) -> [i64; 5] {
        [1, -self.s1, self.s2, -self.q * self.s1, self.q * self.q]
    }

    /// Necessary Weil bounds `|s1| <= 4 sqrt(q)`, `|s2| <= 6q`.
    pub fn within_weil_bounds(&self) -> bool {
        self.s1 * self.s1 <= 16 * self.q && self.s2.abs() <= 6 * self.q
    }

    /// The Weil polynomial of the same surface over F_{q^2}: roots squared.
    pub fn base_change(&self) -> WeilQuartic {
        let q = self.q;
        WeilQuartic {
            s1: self.s1 * self.s1 - 2 * self.s2,
            s2: self.s2 * self.s2 - 2 * q * self.s1 * self.s1 + 2 * q * q,
            q: q * q,
        }
    }

    /// The quadratic twist (Frobenius negated).
    pub fn twist(&self) -> WeilQuartic {
        WeilQuartic {
            s1: -self.s1,
            ..*self
        }
    }
}

impl fmt::Display for WeilQuartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [_, a3, a2, a1, a0] = self.coefficients();
        write!(f, "x^4")?;
        for (c, m) in [(a3, "x^3"), (a2, "x^2"), (a1, "x"), (a0, "")] {
            if c != 0 {
                let sign = if c < 0 { '-' } else { '+' };
                write!(f, " {sign} {}{m}", c.abs())?;
            }
        }
        Ok(())
    }
}

impl WeilQuadratic {
    pub fn new(t: i64, q: i64) -> Result<WeilQuadratic> {
        log3(q)?;
        Ok(WeilQuadratic { t, q })
    }

    /// Product of two quadratics over the same field.
    pub fn times(&self, other: &WeilQuadratic) -> Result<WeilQuartic> {
        if self.q != other.q {
            return Err(Error::Unsupported(format!(
                "quadratics over different fields ({} and {})",
                self.q, other.q
            )));
        }
        Ok(WeilQuartic::split(self.t, other.t, self.q))
    }
}

/// Restriction of scalars from F_{q^2} to F_q: `x^2 - t x + q^2` becomes
/// `x^4 - t x^2 + q^2`.
pub fn res_scalars_weil(w: &WeilQuadratic) -> Result<WeilQuartic> {
    let q = exact_sqrt(w.q).ok_or_else(|| Error::Unsupported(format!("{} is not a square", w.q)))?;
    log3(q)?;
    Ok(WeilQuartic { s1: 0, s2: -w.t, q })
}

/// The quartics that are Weil polynomials of supersingular genus-2 curves.
pub fn theorem1_list(q: i64) -> Result<BTreeSet<WeilQuartic>> {
    let d = log3(q)?;
    let mut out = BTreeSet::new();
    if d % 2 == 1 {
        let r = exact_sqrt(3 * q).expect("3q is an even power of 3");
        for s in [r, -r] {
            out.insert(WeilQuartic::split(0, s, q));
        }
        if q > 3 {
            out.insert(WeilQuartic::split(0, 0, q));
        }
        out.insert(WeilQuartic { s1: 0, s2: 0, q });
        out.insert(WeilQuartic { s1: 0, s2: q, q });
        if q > 3 {
            out.insert(WeilQuartic { s1: 0, s2: -2 * q, q });
        }
    } else {
        let r = exact_sqrt(q).expect("q is an even power of 3");
        for s in [r, -r] {
            out.insert(WeilQuartic::split(2 * s, -s, q));
        }
        for s in [0, r, -r] {
            out.insert(WeilQuartic::split(s, s, q));
        }
        if q > 9 {
            for s in [r, -r] {
                out.insert(WeilQuartic::split(2 * s, 2 * s, q));
            }
        }
        out.insert(WeilQuartic { s1: 0, s2: 0, q });
        for s in [r, -r] {
            out.insert(WeilQuartic { s1: s, s2: q, q });
        }
    }
    Ok(out)
}

/// The quartics that are Weil polynomials of supersingular abelian surfaces.
pub fn lemma_ssas_list(q: i64) -> Result<BTreeSet<WeilQuartic>> {
    let d = log3(q)?;
    let mut out = BTreeSet::new();
    let traces: Vec<i64> = if d % 2 == 1 {
        let r = exact_sqrt(3 * q).expect("3q is an even power of 3");
        vec![0, r, -r]
    } else {
        let r = exact_sqrt(q).expect("q is an even power of 3");
        vec![0, r, -r, 2 * r, -2 * r]
    };
    for &s in &traces {
        for &t in &traces {
            out.insert(WeilQuartic::split(s, t, q));
        }
    }
    out.insert(WeilQuartic { s1: 0, s2: 0, q });
    if d % 2 == 1 {
        out.insert(WeilQuartic { s1: 0, s2: q, q });
        out.insert(WeilQuartic { s1: 0, s2: -2 * q, q });
    } else {
        out.insert(WeilQuartic { s1: 0, s2: -q, q });
        let r = exact_sqrt(q).expect("q is an even power of 3");
        for s in [r, -r] {
            out.insert(WeilQuartic { s1: s, s2: q, q });
        }
    }
    Ok(out)
}

/// Membership in the supersingular abelian-surface list for `W.q`.
pub fn is_supersingular_weil(w: &WeilQuartic) -> Result<bool> {
    Ok(lemma_ssas_list(w.q)?.contains(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(set: &BTreeSet<WeilQuartic>) -> Vec<(i64, i64)> {
        set.iter().map(|w| (w.s1, w.s2)).collect()
    }

    #[test]
    fn theorem_list_sizes() {
        assert_eq!(
            pairs(&theorem1_list(3).unwrap()),
            vec![(-3, 6), (0, 0), (0, 3), (3, 6)]
        );
        assert_eq!(theorem1_list(9).unwrap().len(), 8);
        assert_eq!(theorem1_list(27).unwrap().len(), 6);
        assert_eq!(theorem1_list(81).unwrap().len(), 10);
        assert!(theorem1_list(10).is_err());
    }

    #[test]
    fn theorem_list_inside_lemma_list() {
        for q in [3, 9, 27, 81, 243, 729] {
            let t = theorem1_list(q).unwrap();
            let l = lemma_ssas_list(q).unwrap();
            assert!(t.is_subset(&l), "q = {q}");
            assert!(t.len() < l.len());
            assert!(l.iter().all(|w| w.within_weil_bounds()));
        }
    }

    #[test]
    fn lemma_examples() {
        assert!(is_supersingular_weil(&WeilQuartic::new(0, 0, 3).unwrap()).unwrap());
        assert!(is_supersingular_weil(&WeilQuartic::new(0, 6, 3).unwrap()).unwrap());
        assert!(!is_supersingular_weil(&WeilQuartic::new(0, -2, 3).unwrap()).unwrap());
        assert!(lemma_ssas_list(9).unwrap().contains(&WeilQuartic { s1: 0, s2: -9, q: 9 }));
    }

    #[test]
    fn restriction_of_scalars() {
        let q = 27;
        let w = |t| WeilQuadratic::new(t, q * q).unwrap();
        assert_eq!(res_scalars_weil(&w(-q)).unwrap(), WeilQuartic { s1: 0, s2: q, q });
        assert_eq!(res_scalars_weil(&w(2 * q)).unwrap(), WeilQuartic { s1: 0, s2: -2 * q, q });
        assert_eq!(res_scalars_weil(&w(0)).unwrap(), WeilQuartic { s1: 0, s2: 0, q });
    }

    #[test]
    fn display() {
        assert_eq!(WeilQuartic { s1: 0, s2: -2, q: 3 }.to_string(), "x^4 - 2x^2 + 9");
        assert_eq!(WeilQuartic { s1: 3, s2: 6, q: 3 }.to_string(), "x^4 - 3x^3 + 6x^2 - 9x + 9");
    }

    #[test]
    fn base_change_of_split() {
        // (x^2 - s x + q) over F_{q^2} becomes x^2 - (s^2 - 2q) x + q^2
        let (s, t, q) = (3, -3, 3);
        let b = WeilQuartic::split(s, t, q).base_change();
        assert_eq!(b, WeilQuartic::split(s * s - 2 * q, t * t - 2 * q, q * q));
    }
}
