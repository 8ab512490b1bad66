//! The degree-3 covers `C_{b,c} -> E_{b,c}` and the reduction of a curve
//! with a pair of cubic factors to one of them.

use serde::Serialize;

use crate::elliptic::{ell_count, EllPoint, EllipticCurve};
use crate::error::{Error, Result};
use crate::genus2::{count_points, reduce_to_standard_form, weil_polynomial, Genus2Curve, Mobius};
use crate::gf3::{chi2, chi4, lift, rel_trace, sqrt, Felt, QuarticChar};
use crate::poly::UniPoly;
use crate::weil::WeilQuadratic;

/// `C_{b,c}: w^2 = c g1(v) g2(v)` with its two elliptic quotients
/// `E_{b,c}` and `E_{-b,c}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverTriple {
    pub b: Felt,
    pub c: Felt,
    pub curve: Genus2Curve,
    pub target: EllipticCurve,
    pub cotarget: EllipticCurve,
}

/// `g1 = v^3 - b v^2 - b^2 v + b^3 - c^2` and `g2` (the same with `-b`).
pub fn cover_cubics(b: Felt, c: Felt) -> (UniPoly, UniPoly) {
    let f = b.field();
    let c2 = c.square();
    let g1 = UniPoly::new(f, vec![b.cube() - c2, -b.square(), -b, f.one()]);
    let g2 = UniPoly::new(f, vec![-b.cube() - c2, -b.square(), b, f.one()]);
    (g1, g2)
}

pub fn build_cover(b: Felt, c: Felt) -> Result<CoverTriple> {
    b.same_field(&c)?;
    if b.is_zero() || c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let (g1, g2) = cover_cubics(b, c);
    let sextic = (&g1 * &g2).scale(c);
    let curve = Genus2Curve::untwisted(sextic)?;
    Ok(CoverTriple {
        b,
        c,
        curve,
        target: EllipticCurve::new(b, c)?,
        cotarget: EllipticCurve::new(-b, c)?,
    })
}

/// `build_cover(b r^4, c r^6)`, isomorphic to the original cover.
pub fn rescale_cover(t: &CoverTriple, r: Felt) -> Result<CoverTriple> {
    t.b.same_field(&r)?;
    if r.is_zero() {
        return Err(Error::ZeroArgument);
    }
    build_cover(t.b * r.pow(4), t.c * r.pow(6))
}

/// A point of `C_{b,c}`: affine `(v, w)`, or one of the two points at
/// infinity labelled by `s = lim w / v^3`, a square root of `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoverPoint {
    Affine(Felt, Felt),
    Infinity(Felt),
}

impl CoverTriple {
    pub fn contains(&self, p: &CoverPoint) -> Result<bool> {
        let ext = point_degree(p);
        let c = lift(self.c, ext)?;
        Ok(match *p {
            CoverPoint::Affine(v, w) => {
                v.same_field(&w)?;
                w.square() == self.curve.f().lift(ext)?.eval(v)
            }
            CoverPoint::Infinity(s) => s.square() == c,
        })
    }

    /// All points over GF(3^ext), sorted.
    pub fn points(&self, ext: u32) -> Result<Vec<CoverPoint>> {
        let f = self.curve.f().lift(ext)?;
        let big = f.field();
        let mut out = Vec::new();
        for v in big.elements() {
            if let Some(w) = sqrt(f.eval(v)) {
                out.push(CoverPoint::Affine(v, w));
                if !w.is_zero() {
                    out.push(CoverPoint::Affine(v, -w));
                }
            }
        }
        if let Some(s) = sqrt(lift(self.c, ext)?) {
            out.push(CoverPoint::Infinity(s));
            out.push(CoverPoint::Infinity(-s));
        }
        out.sort();
        Ok(out)
    }
}

fn point_degree(p: &CoverPoint) -> u32 {
    match *p {
        CoverPoint::Affine(v, _) => v.degree(),
        CoverPoint::Infinity(s) => s.degree(),
    }
}

fn eval_map(t: &CoverTriple, p: &CoverPoint, sign: bool) -> Result<EllPoint> {
    if !t.contains(p)? {
        return Err(Error::Degenerate("point is not on the cover curve".into()));
    }
    let ext = point_degree(p);
    let b = lift(if sign { -t.b } else { t.b }, ext)?;
    let c = lift(t.c, ext)?;
    let (v, w) = match *p {
        // x -> 0 and z -> -s as v -> infinity.
        CoverPoint::Infinity(s) => return Ok(EllPoint::Affine(s.field().zero(), -s)),
        CoverPoint::Affine(v, w) => (v, w),
    };
    let g = v.cube() - b * v.square() - b.square() * v + b.cube() - c.square();
    if g.is_zero() {
        return Ok(EllPoint::Infinity);
    }
    let x = -(b * c * (v - b)) / g;
    let z = -w / g;
    let y = (z.cube() + b * x * z) / c;
    let e = EllipticCurve::new(b, c)?;
    let out = EllPoint::Affine(x, y);
    debug_assert!(e.contains(&out));
    if !e.contains(&out) {
        return Err(Error::Degenerate("cover map left the target curve".into()));
    }
    Ok(out)
}

/// The cover map to `E_{b,c}`; zeros of `g1` go to the origin.
pub fn phi_eval(t: &CoverTriple, p: &CoverPoint) -> Result<EllPoint> {
    eval_map(t, p, false)
}

/// The companion map to `E_{-b,c}`; zeros of `g2` go to the origin.
pub fn phi_prime_eval(t: &CoverTriple, p: &CoverPoint) -> Result<EllPoint> {
    eval_map(t, p, true)
}

/// Frobenius traces `(t1, t2)` of the target and cotarget, by counting.
pub fn target_traces(t: &CoverTriple) -> Result<(i64, i64)> {
    let q = t.curve.q();
    let d = t.curve.field().degree();
    let t1 = q + 1 - ell_count(&t.target, d)? as i64;
    let t2 = q + 1 - ell_count(&t.cotarget, d)? as i64;
    Ok((t1, t2))
}

/// True iff the counted Weil polynomial of the curve is the product of
/// those of `E_{b,c}` and `E_{-b,c}`.
pub fn splitting_check(t: &CoverTriple) -> Result<bool> {
    let q = t.curve.q();
    let (t1, t2) = target_traces(t)?;
    let product = WeilQuadratic::new(t1, q)?.times(&WeilQuadratic::new(t2, q)?)?;
    Ok(weil_polynomial(&t.curve)? == product)
}

/// Row of the even-degree splitting table for `C_{b,c}`: the traces
/// `(s, t)` of the two elliptic factors.
pub fn table3_classify(b: Felt, c: Felt) -> Result<(i64, i64)> {
    b.same_field(&c)?;
    if b.is_zero() || c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let d = b.degree();
    if !d.is_multiple_of(2) {
        return Err(Error::DegreeParity {
            expected: "even",
            degree: d as u8,
        });
    }
    let big = (-3i64).pow(d / 2);
    let sign = match chi4(b)? {
        QuarticChar::One => 1,
        QuarticChar::MinusOne => -1,
        QuarticChar::I | QuarticChar::MinusI => return Ok((0, 0)),
    };
    let root = sqrt(b).expect("chi4 = +-1 means b is a square");
    let tau = rel_trace(c / root.cube(), 2)?;
    let (s, t) = if tau.is_zero() {
        (2 * big, 2 * big)
    } else if tau.pow(4).is_one() {
        // tau is one of +-1, +-i
        (2 * big, -big)
    } else {
        (-big, -big)
    };
    Ok((sign * s, sign * t))
}

/// Output of [`reduce_cubic_split_to_cover`]: a quadratic twist of the
/// input (trivial iff `!twist_flag`) is isomorphic over GF(3^field_degree)
/// to `C_{u,c}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubicReduction {
    pub u: Felt,
    pub c: Felt,
    pub twist_flag: bool,
    pub field_degree: u32,
    pub v: Felt,
    pub w: Felt,
    pub t: Felt,
}

/// Moves a supersingular curve whose sextic is `lc * g1 * g2` (monic
/// cubics over a common field) to a cover curve `C_{u,c}`.
///
/// Steps: reduced form `x^6 + A x^3 + B x + A^2`; `x -> -B x` so that `-B`
/// becomes a square; read off `g1 = x^3 + u x^2 + u^2 v x + w`,
/// `g2 = x^3 - u x^2 + u^2 (1 - v) x + t`; shift by `u (v + 1)`; then
/// `c^2 = -B / u^2`. The moved cubics are
/// `x^3 + u x^2 - u^2 x - u^3 - c^2` and `x^3 - u x^2 - u^2 x + u^3 - c^2`,
/// which are the defining cubics of `C_{u,c}` up to order.
pub fn reduce_cubic_split_to_cover(
    curve: &Genus2Curve,
    g1: &UniPoly,
    g2: &UniPoly,
) -> Result<CubicReduction> {
    for g in [g1, g2] {
        if g.degree() != Some(3) {
            return Err(Error::WrongDegree {
                expected: "3",
                found: g.degree().unwrap_or(0),
            });
        }
    }
    if g1.field_degree() != g2.field_degree() {
        return Err(Error::FieldMismatch(g1.field_degree() as u8, g2.field_degree() as u8));
    }
    let k = g1.field().degree();
    let ck = curve.lift(k)?;
    if ck.degree() != 6 || ck.f().monic() != (&g1.monic() * &g2.monic()) {
        return Err(Error::Degenerate("the cubics do not factor the sextic".into()));
    }
    let red = reduce_to_standard_form(&ck)?;
    let form = red.form;
    let a = (form.c3.square() - form.c0) / form.c1;
    let big_b = form.c1;
    let mobius = red
        .mobius
        .then(&Mobius::translate(a))
        .then(&Mobius::scale(-big_b));
    let twist = form.twist / big_b.pow(6);
    let h1 = mobius.pullback(g1, 3).monic();
    let h2 = mobius.pullback(g2, 3).monic();
    let b2 = -(big_b.pow(4)).inv()?;

    let u = h1.coeff(2);
    if u.is_zero() {
        return Err(Error::Degenerate("u = 0 in the cubic factorization".into()));
    }
    let v = h1.coeff(1) / u.square();
    let (w, t) = (h1.coeff(0), h2.coeff(0));
    let one = u.field().one();
    if h2.coeff(2) != -u || h2.coeff(1) != u.square() * (one - v) {
        return Err(Error::Degenerate("moved cubics have the wrong shape".into()));
    }
    if t != w + u.cube() * (v.square() - v) {
        return Err(Error::Degenerate("t = w + u^3 (v^2 - v) fails".into()));
    }
    if v == -one {
        return Err(Error::Degenerate("v = -1 in the cubic factorization".into()));
    }
    let shift = UniPoly::new(u.field(), vec![u * (v + one), one]);
    let k1 = h1.compose(&shift);
    let k2 = h2.compose(&shift);

    let c2 = -b2 / u.square();
    let (c, field_degree) = match sqrt(c2) {
        Some(c) => (c, k),
        None => {
            let c2 = lift(c2, 2 * k)?;
            (sqrt(c2).expect("squares in the quadratic extension"), 2 * k)
        }
    };
    let u_l = lift(u, field_degree)?;
    let (p1, p2) = cover_cubics(u_l, c);
    if (&k1 * &k2).lift(field_degree)? != &p1 * &p2 {
        return Err(Error::Degenerate("shifted cubics do not match the cover".into()));
    }
    let twist_flag = chi2(lift(twist, field_degree)? * c)? != 1;

    let cover = build_cover(u_l, c)?;
    let model = if twist_flag {
        cover.curve.quadratic_twist()
    } else {
        cover.curve.clone()
    };
    let mut exts = vec![field_degree];
    if 2 * field_degree <= crate::gf3::MAX_DEGREE {
        exts.push(2 * field_degree);
    }
    for e in exts {
        if count_points(curve, e)? != count_points(&model, e)? {
            return Err(Error::InconsistentCounts(format!(
                "curve and C_(u,c) disagree over F_(3^{e})"
            )));
        }
    }
    Ok(CubicReduction {
        u,
        c,
        twist_flag,
        field_degree,
        v,
        w,
        t,
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::genus2::{invariant_i, ReducedSSForm};
    use crate::gf3::{abs_trace, make_field};
    use crate::poly::cubic_factor_pairs;

    fn covers_over(d: u32) -> Vec<CoverTriple> {
        let f = make_field(d).unwrap();
        let mut out = Vec::new();
        for b in f.nonzero_elements() {
            for c in f.nonzero_elements() {
                match build_cover(b, c) {
                    Ok(t) => out.push(t),
                    Err(Error::Inseparable) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
        out
    }

    #[test]
    fn cover_over_f3() {
        let f3 = make_field(1).unwrap();
        let t = build_cover(f3.one(), f3.one()).unwrap();
        assert_eq!(t.curve.f().degree(), Some(6));
        assert_eq!(t.cotarget, build_cover(-f3.one(), f3.one()).unwrap().target);
        assert!(build_cover(f3.zero(), f3.one()).is_err());
    }

    #[test]
    fn maps_land_on_targets_over_f27() {
        let f3 = make_field(1).unwrap();
        let t = build_cover(f3.one(), f3.one()).unwrap();
        let (e, e2) = (t.target.lift(3).unwrap(), t.cotarget.lift(3).unwrap());
        for p in t.points(3).unwrap() {
            assert!(e.contains(&phi_eval(&t, &p).unwrap()));
            assert!(e2.contains(&phi_prime_eval(&t, &p).unwrap()));
        }
    }

    #[test]
    fn off_curve_point_rejected() {
        let f9 = make_field(2).unwrap();
        let t = build_cover(f9.one(), f9.one()).unwrap();
        let f = t.curve.f();
        let bad = f9
            .elements()
            .flat_map(|v| f9.elements().map(move |w| (v, w)))
            .find(|&(v, w)| w.square() != f.eval(v))
            .map(|(v, w)| CoverPoint::Affine(v, w))
            .unwrap();
        assert!(phi_eval(&t, &bad).is_err());
    }

    /// Over F_{3^6} every fiber has at most three points, and only the two
    /// branch points `(0, +-sqrt c)` have exactly two.
    #[test]
    fn fiber_census_over_f729() {
        let f3 = make_field(1).unwrap();
        let t = build_cover(f3.one(), f3.one()).unwrap();
        let pts = t.points(6).unwrap();
        let mut fibers: BTreeMap<EllPoint, usize> = BTreeMap::new();
        for p in &pts {
            *fibers.entry(phi_eval(&t, p).unwrap()).or_default() += 1;
        }
        assert!(fibers.values().all(|&n| n <= 3));
        let doubles: Vec<_> = fibers.iter().filter(|(_, &n)| n == 2).map(|(p, _)| *p).collect();
        let big = make_field(6).unwrap();
        let mut expect = vec![
            EllPoint::Affine(big.zero(), big.one()),
            EllPoint::Affine(big.zero(), -big.one()),
        ];
        expect.sort();
        assert_eq!(doubles, expect);
        assert_eq!(fibers.values().sum::<usize>(), pts.len());
    }

    #[test]
    fn splitting_over_f9_and_f27() {
        for d in [2, 3] {
            let all = covers_over(d);
            assert!(!all.is_empty());
            for t in all {
                assert!(splitting_check(&t).unwrap(), "{:?}", t.curve);
            }
        }
    }

    #[test]
    fn trace_zero_c_gives_square_of_x2_plus_q() {
        let f27 = make_field(3).unwrap();
        let c0 = f27.nonzero_elements().find(|&c| abs_trace(c) == 0).unwrap();
        let t = build_cover(f27.one(), c0).unwrap();
        let w = weil_polynomial(&t.curve).unwrap();
        assert_eq!((w.s1, w.s2), (0, 54));
    }

    #[test]
    fn table3_matches_counts() {
        for t in covers_over(2) {
            let (s, u) = table3_classify(t.b, t.c).unwrap();
            let (t1, t2) = target_traces(&t).unwrap();
            assert_eq!((s.min(u), s.max(u)), (t1.min(t2), t1.max(t2)), "b={} c={}", t.b, t.c);
        }
        let f81 = make_field(4).unwrap();
        for (i, b) in f81.nonzero_elements().enumerate().step_by(7) {
            for c in f81.nonzero_elements().skip(i % 5).step_by(11) {
                let Ok(t) = build_cover(b, c) else { continue };
                let (s, u) = table3_classify(b, c).unwrap();
                let (t1, t2) = target_traces(&t).unwrap();
                assert_eq!((s.min(u), s.max(u)), (t1.min(t2), t1.max(t2)));
            }
        }
    }

    #[test]
    fn table3_rejects_odd_degree() {
        let f3 = make_field(1).unwrap();
        assert!(table3_classify(f3.one(), f3.one()).is_err());
    }

    #[test]
    fn rescaling_keeps_invariants() {
        let f9 = make_field(2).unwrap();
        let t = build_cover(f9.one(), f9.one()).unwrap();
        let base = (count_points(&t.curve, 2).unwrap(), count_points(&t.curve, 4).unwrap());
        let i0 = invariant_i(&t.curve).unwrap();
        for r in f9.nonzero_elements() {
            let s = rescale_cover(&t, r).unwrap();
            assert_eq!(
                (count_points(&s.curve, 2).unwrap(), count_points(&s.curve, 4).unwrap()),
                base
            );
            assert_eq!(invariant_i(&s.curve).unwrap(), i0);
            assert_eq!(s.c.square() / s.b.cube(), t.c.square() / t.b.cube());
        }
        assert_eq!(rescale_cover(&t, -f9.one()).unwrap(), t);
    }

    #[test]
    fn cover_round_trip() {
        let f9 = make_field(2).unwrap();
        let t = build_cover(f9.one(), f9.one()).unwrap();
        let (g1, g2) = cover_cubics(t.b, t.c);
        let r = reduce_cubic_split_to_cover(&t.curve, &g1, &g2).unwrap();
        assert_eq!(r.t, r.w + r.u.cube() * (r.v.square() - r.v));
        let back = build_cover(r.u, r.c).unwrap();
        let i = invariant_i(&t.curve.lift(r.field_degree).unwrap()).unwrap();
        assert_eq!(invariant_i(&back.curve).unwrap(), i);
    }

    #[test]
    fn rational_cubic_pairs_over_f9_reduce() {
        let f9 = make_field(2).unwrap();
        let mut done = 0;
        for c3 in f9.elements() {
            for c1 in f9.nonzero_elements() {
                for c0 in f9.elements() {
                    let form = ReducedSSForm::new(c3, c1, c0, f9.one()).unwrap();
                    let Ok(curve) = Genus2Curve::untwisted(form.sextic()) else { continue };
                    for pair in cubic_factor_pairs(curve.f(), 2).unwrap() {
                        reduce_cubic_split_to_cover(&curve, &pair.g1, &pair.g2).unwrap();
                        done += 1;
                    }
                }
            }
        }
        assert!(done > 0);
    }
}
