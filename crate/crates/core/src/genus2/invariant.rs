use super::{igusa_reduced, reduce_to_standard_form, Genus2Curve};
use crate::error::Result;
use crate::gf3::Felt;
use crate::poly::UniPoly;

/// `I_C = J6^5 / J10^3`, read off a reduced model.
pub fn invariant_i(c: &Genus2Curve) -> Result<Felt> {
    let red = reduce_to_standard_form(c)?;
    let j = igusa_reduced(&red.form)?;
    Ok(j.j6().pow(5) / j.j10().pow(3))
}

/// The model with invariant `I`: `y^2 = x^6 + I^2 x^3 + I^3 x + I^4` for
/// `I != 0`, and `y^2 = x^5 + 1` for `I = 0`.
pub fn curve_from_invariant(i: Felt) -> Genus2Curve {
    let f = i.field();
    let z = f.zero();
    let poly = if i.is_zero() {
        UniPoly::new(f, vec![f.one(), z, z, z, z, f.one()])
    } else {
        UniPoly::new(f, vec![i.pow(4), i.pow(3), z, i.pow(2), z, z, f.one()])
    };
    Genus2Curve::untwisted(poly).expect("both families are separable")
}

/// Order of the geometric automorphism group: 10 on the `I = 0` curve,
/// 2 everywhere else.
pub fn geometric_aut_order(c: &Genus2Curve) -> Result<u32> {
    Ok(if invariant_i(c)?.is_zero() { 10 } else { 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf3::make_field;

    #[test]
    fn round_trip_over_f27() {
        let f27 = make_field(3).unwrap();
        for i in f27.elements() {
            let c = curve_from_invariant(i);
            assert_eq!(invariant_i(&c).unwrap(), i);
            assert_eq!(invariant_i(&c.quadratic_twist()).unwrap(), i);
        }
    }

    #[test]
    fn automorphism_orders() {
        let f3 = make_field(1).unwrap();
        assert_eq!(geometric_aut_order(&curve_from_invariant(f3.zero())).unwrap(), 10);
        let c = Genus2Curve::untwisted(UniPoly::from_ints(f3, &[1, 1, 0, 1, 0, 0, 1])).unwrap();
        assert_eq!(geometric_aut_order(&c).unwrap(), 2);
    }
}
