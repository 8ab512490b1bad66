//! Point counts and Weil data against brute-force enumeration.

use ssg2::covers::{build_cover, target_traces};
use ssg2::elliptic::{ell_count, EllipticCurve};
use ssg2::genus2::{count_points, weil_polynomial, Genus2Curve};
use ssg2::gf3::{make_field, Felt};
use ssg2::poly::UniPoly;

/// `ext` is the absolute degree. Affine solutions by squaring every y, plus the points at infinity.
fn naive_count(c: &Genus2Curve, ext: u32) -> u64 {
    let c = c.lift(ext).unwrap();
    let f = c.field();
    let d = c.twist();
    let mut n = 0u64;
    for x in f.elements() {
        let fx = c.f().eval(x);
        n += f.elements().filter(|&y| d * y * y == fx).count() as u64;
    }
    let lc = c.f().lc();
    n + match c.degree() {
        5 => 1,
        _ => f.elements().filter(|&y| d * y * y == lc).count() as u64,
    }
}

fn sample_curves(d: u32) -> Vec<Genus2Curve> {
    let f = make_field(d).unwrap();
    let e = |k: u32| f.element(k % f.order());
    let mut out = Vec::new();
    for k in 0..12u32 {
        let coeffs: Vec<Felt> = (0..7).map(|i| e(k * 7 + i * 5 + 1)).collect();
        let twist = if k % 2 == 0 { f.one() } else { ssg2::gf3::nonsquare(f) };
        if let Ok(c) = Genus2Curve::new(twist, UniPoly::new(f, coeffs)) {
            out.push(c);
        }
    }
    out.push(Genus2Curve::untwisted(UniPoly::from_ints(f, &[1, 0, 0, 0, 0, 1])).unwrap());
    assert!(out.len() >= 8, "too few smooth samples");
    out
}

#[test]
fn genus2_counts_match_enumeration() {
    for d in [1, 2] {
        for c in sample_curves(d) {
            for ext in [d, 2 * d] {
                assert_eq!(count_points(&c, ext).unwrap(), naive_count(&c, ext), "{c:?} ext {ext}");
            }
        }
    }
}

#[test]
fn weil_quartic_predicts_cubic_extension() {
    for d in [1, 2] {
        for c in sample_curves(d) {
            let w = weil_polynomial(&c).unwrap();
            let (s1, s2, q) = (w.s1, w.s2, w.q);
            let p1 = s1;
            let p2 = s1 * s1 - 2 * s2;
            let p3 = s1 * p2 - s2 * p1 + 3 * q * s1;
            let n3 = q.pow(3) + 1 - p3;
            assert_eq!(count_points(&c, 3 * d).unwrap() as i64, n3, "{c:?}");
        }
    }
}

#[test]
fn elliptic_counts_match_enumeration() {
    let f = make_field(2).unwrap();
    for b in f.nonzero_elements() {
        for c in f.elements() {
            let e = EllipticCurve::new(b, c).unwrap();
            let naive = 1 + f
                .elements()
                .map(|x| f.elements().filter(|&y| y * y == e.rhs(x)).count() as u64)
                .sum::<u64>();
            assert_eq!(ell_count(&e, 2).unwrap(), naive);
            assert_eq!(e.points().len() as u64, naive);
        }
    }
}

#[test]
fn cover_jacobian_counts_are_products() {
    // N1 = q + 1 - (t + t'), and the Jacobian order is the product of the
    // elliptic orders; both follow from the splitting.
    let f = make_field(2).unwrap();
    let q = 9i64;
    for b in f.nonzero_elements() {
        for c in f.nonzero_elements() {
            let Ok(t) = build_cover(b, c) else { continue };
            let (t1, t2) = target_traces(&t).unwrap();
            let w = weil_polynomial(&t.curve).unwrap();
            assert_eq!(w.s1, t1 + t2);
            assert_eq!(w.s2, 2 * q + t1 * t2);
        }
    }
}
