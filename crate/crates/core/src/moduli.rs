//! The map from cover moduli `t = c^2 / b^3` to the curve invariant `I`,
//! its fibers, and a combinatorial model of the 2-torsion of a Jacobian.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf3::{Felt, MAX_DEGREE};
use crate::poly::{factor, roots_in, UniPoly};

/// `t -> -(1 + t^4)^5 / t^18`.
pub fn moduli_map(t: Felt) -> Result<Felt> {
    if t.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let one = t.field().one();
    Ok(-(one + t.pow(4)).pow(5) / t.pow(18))
}

/// `I` of the cover curve `C_{1,c}`: `-(1 + c^8)^5 / c^36`.
pub fn eq_invariant(c: Felt) -> Result<Felt> {
    if c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let one = c.field().one();
    Ok(-(one + c.pow(8)).pow(5) / c.pow(36))
}

/// The moduli coordinate `c^2 / b^3` of the cover `C_{b,c}`.
pub fn cover_coordinate(b: Felt, c: Felt) -> Result<Felt> {
    b.same_field(&c)?;
    if b.is_zero() || c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    Ok(c.square() / b.cube())
}

/// `-(1 + t^4)^5 - I t^18`, whose nonzero roots are the fiber over `I`.
pub fn fiber_polynomial(i: Felt) -> UniPoly {
    let f = i.field();
    let base = UniPoly::new(f, vec![f.one(), f.zero(), f.zero(), f.zero(), f.one()]);
    &(-base.pow(5)) - &UniPoly::monomial(i, 18)
}

/// Number of distinct nonzero roots of the fiber polynomial in GF(3^big).
pub fn fiber_count(i: Felt, big: u32) -> Result<usize> {
    let roots = roots_in(&fiber_polynomial(i), big)?;
    Ok(roots.into_iter().filter(|r| !r.is_zero()).count())
}

/// The fiber over `I` in the field where it splits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub distinct_roots: usize,
    pub splitting_degree: u32,
    pub roots: Vec<Felt>,
}

/// Factors the fiber polynomial over the field of `I`, passes to its
/// splitting field and lists the roots there.
pub fn fiber(i: Felt) -> Result<Fiber> {
    let p = fiber_polynomial(i);
    let fac = factor(&p)?;
    let distinct: usize = fac.factors.iter().map(|(g, _)| g.degree().unwrap_or(0)).sum();
    let splitting_degree = i.degree() * fac.splitting_lcm() as u32;
    if splitting_degree > MAX_DEGREE {
        return Err(Error::SplittingFieldTooLarge(splitting_degree));
    }
    let roots: Vec<Felt> = roots_in(&p, splitting_degree)?
        .into_iter()
        .filter(|r| !r.is_zero())
        .collect();
    if roots.len() != distinct {
        return Err(Error::InconsistentCounts(format!(
            "{} roots found in the splitting field, {distinct} expected",
            roots.len()
        )));
    }
    Ok(Fiber {
        distinct_roots: distinct,
        splitting_degree,
        roots,
    })
}

/// Classes of even subsets of the six Weierstrass points modulo
/// complement, stored as 6-bit masks with bit 5 clear. Bit `k` stands for
/// label `k + 1`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TwoTorsionModel;

/// An order-4 subgroup, listed by its sorted elements.
pub type Subgroup = [u8; 4];

impl TwoTorsionModel {
    fn canon(mask: u8) -> u8 {
        if mask & 0b10_0000 != 0 {
            !mask & 0b11_1111
        } else {
            mask
        }
    }

    /// The 16 classes, identity first.
    pub fn elements(&self) -> Vec<u8> {
        (0u8..32).filter(|m| m.count_ones() % 2 == 0).collect()
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        Self::canon(a ^ b)
    }

    /// Parity of the intersection of supports; independent of the
    /// representatives since every support has even size.
    pub fn pairing(&self, a: u8, b: u8) -> u8 {
        ((a & b).count_ones() % 2) as u8
    }

    /// The class of the pair `{i, j}` (labels 1..6).
    pub fn pair(&self, i: u8, j: u8) -> Result<u8> {
        if i == j || !(1..=6).contains(&i) || !(1..=6).contains(&j) {
            return Err(Error::Degenerate(format!("bad label pair {{{i}, {j}}}")));
        }
        Ok(Self::canon((1 << (i - 1)) | (1 << (j - 1))))
    }

    /// Every order-4 subgroup, sorted.
    pub fn order4_subgroups(&self) -> Vec<Subgroup> {
        let nonzero: Vec<u8> = self.elements().into_iter().filter(|&m| m != 0).collect();
        let mut out = BTreeSet::new();
        for &x in &nonzero {
            for &y in &nonzero {
                if x < y {
                    let mut g = [0, x, y, self.add(x, y)];
                    g.sort();
                    out.insert(g);
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn is_isotropic(&self, g: &Subgroup) -> bool {
        g.iter().all(|&x| g.iter().all(|&y| self.pairing(x, y) == 0))
    }
}

/// `(total, isotropic, non-isotropic)` counts of order-4 subgroups.
pub fn subgroup_census() -> (usize, usize, usize) {
    let m = TwoTorsionModel;
    let all = m.order4_subgroups();
    let iso = all.iter().filter(|g| m.is_isotropic(g)).count();
    (all.len(), iso, all.len() - iso)
}

/// The subgroup attached to a cubic factor vanishing at three of the six
/// labels: the identity and the three pairs inside the triple.
pub fn kappa_of_cubic(labels: &[u8]) -> Result<Subgroup> {
    let set: BTreeSet<u8> = labels.iter().copied().collect();
    if labels.len() != 3 || set.len() != 3 {
        return Err(Error::WrongDegree {
            expected: "3 distinct labels",
            found: set.len(),
        });
    }
    let m = TwoTorsionModel;
    let l: Vec<u8> = set.into_iter().collect();
    let mut g = [0, m.pair(l[0], l[1])?, m.pair(l[0], l[2])?, m.pair(l[1], l[2])?];
    g.sort();
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::build_cover;
    use crate::genus2::{count_points, invariant_i};
    use crate::gf3::{lift, make_field};

    #[test]
    fn keystone_identity() {
        for d in [2, 3, 4] {
            let f = make_field(d).unwrap();
            for c in f.nonzero_elements() {
                let t = build_cover(f.one(), c).unwrap();
                assert_eq!(eq_invariant(c).unwrap(), invariant_i(&t.curve).unwrap(), "c = {c}");
                assert_eq!(moduli_map(c.square()).unwrap(), eq_invariant(c).unwrap());
            }
        }
    }

    #[test]
    fn moduli_map_on_all_covers_over_f9() {
        let f9 = make_field(2).unwrap();
        for b in f9.nonzero_elements() {
            for c in f9.nonzero_elements() {
                let Ok(t) = build_cover(b, c) else { continue };
                let coord = cover_coordinate(b, c).unwrap();
                assert_eq!(moduli_map(coord).unwrap(), invariant_i(&t.curve).unwrap());
            }
        }
    }

    /// `C_{1,-c}` is the twist of `C_{1,c}` by `-1`: same `I`, same counts
    /// once `-1` is a square, complementary counts over F27.
    #[test]
    fn c_and_minus_c_agree() {
        let f27 = make_field(3).unwrap();
        for c in f27.nonzero_elements() {
            let (a, b) = (build_cover(f27.one(), c).unwrap(), build_cover(f27.one(), -c).unwrap());
            assert_eq!(invariant_i(&a.curve).unwrap(), invariant_i(&b.curve).unwrap());
            let n = |t: &crate::covers::CoverTriple, e| count_points(&t.curve, e).unwrap();
            assert_eq!(n(&a, 6), n(&b, 6));
            assert_eq!(n(&a, 3) + n(&b, 3), 2 * 28);
        }
    }

    #[test]
    fn map_is_even_and_vanishes_on_t4_minus_one() {
        let f81 = make_field(4).unwrap();
        let mut hits = 0;
        for t in f81.nonzero_elements() {
            assert_eq!(moduli_map(t).unwrap(), moduli_map(-t).unwrap());
            if t.pow(4) == -f81.one() {
                assert!(moduli_map(t).unwrap().is_zero());
                hits += 1;
            }
        }
        assert_eq!(hits, 4);
        assert!(moduli_map(f81.zero()).is_err());
        assert!(eq_invariant(f81.zero()).is_err());
    }

    #[test]
    fn fibers() {
        let f9 = make_field(2).unwrap();
        assert_eq!(fiber_polynomial(f9.one()).degree(), Some(20));
        let zero = fiber(f9.zero()).unwrap();
        assert_eq!(zero.distinct_roots, 4);
        let generic = f9
            .nonzero_elements()
            .filter_map(|i| fiber(i).ok())
            .find(|fb| fb.distinct_roots == 20)
            .expect("a generic fiber over F9");
        assert_eq!(generic.roots.len(), 20);
        let i = moduli_map(generic.roots[0]).unwrap();
        for r in &generic.roots {
            assert_eq!(moduli_map(*r).unwrap(), i);
        }
        assert_eq!(fiber_count(lift(f9.zero(), 4).unwrap(), 4).unwrap(), 4);
    }

    #[test]
    fn two_torsion_census() {
        let m = TwoTorsionModel;
        assert_eq!(m.elements().len(), 16);
        for a in m.elements() {
            assert_eq!(m.add(a, a), 0);
            assert_eq!(m.pairing(a, a), 0);
            if a != 0 {
                assert!(m.elements().iter().any(|&b| m.pairing(a, b) == 1));
            }
        }
        assert_eq!(subgroup_census(), (35, 15, 20));
    }

    #[test]
    fn kappa_is_a_bijection_onto_non_isotropic() {
        let m = TwoTorsionModel;
        let mut images = BTreeSet::new();
        for i in 1..=6u8 {
            for j in i + 1..=6 {
                for k in j + 1..=6 {
                    let g = kappa_of_cubic(&[i, j, k]).unwrap();
                    assert!(!m.is_isotropic(&g));
                    images.insert(g);
                }
            }
        }
        let non_iso: BTreeSet<Subgroup> = m
            .order4_subgroups()
            .into_iter()
            .filter(|g| !m.is_isotropic(g))
            .collect();
        assert_eq!(images, non_iso);
        assert_ne!(kappa_of_cubic(&[1, 2, 3]).unwrap(), kappa_of_cubic(&[4, 5, 6]).unwrap());
        assert!(kappa_of_cubic(&[1, 2]).is_err());
        assert!(kappa_of_cubic(&[1, 1, 2]).is_err());
    }
}
