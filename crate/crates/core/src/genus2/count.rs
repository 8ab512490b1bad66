use super::{Genus2Curve, ReducedSSForm};
use crate::error::{Error, Result};
use crate::gf3::{lift, make_field, Field};
use crate::weil::WeilQuartic;

/// `#C(F_{3^ext})` on the smooth model.
///
/// Each `x` contributes `1 + chi2(d f(x))` with `chi2(0) = 0`; at infinity
/// there is one point for a quintic and `1 + chi2(d lc(f))` for a sextic.
pub fn count_points(c: &Genus2Curve, ext: u32) -> Result<u64> {
    let d = c.field().degree();
    if !ext.is_multiple_of(d) {
        return Err(Error::NoEmbedding {
            source_degree: d as u8,
            target_degree: ext as u8,
        });
    }
    let big = make_field(ext)?;
    let coeffs: Vec<u32> = c
        .f()
        .lift(ext)?
        .scale(lift(c.twist(), ext)?)
        .coeffs()
        .iter()
        .map(|x| x.code())
        .collect();
    let mut total = 0u64;
    for x in 0..big.order() {
        let v = coeffs
            .iter()
            .rev()
            .fold(0, |acc, &a| big.add_codes(big.mul_codes(acc, x), a));
        total += point_weight(big, v);
    }
    let lc = *coeffs.last().expect("nonzero sextic");
    total += if c.degree() == 5 { 1 } else { point_weight(big, lc) };
    Ok(total)
}

#[inline]
fn point_weight(f: &Field, v: u32) -> u64 {
    if v == 0 {
        1
    } else if f.is_nonzero_square_code(v) {
        2
    } else {
        0
    }
}

/// Newton identities: `s1 = q + 1 - N1`, `s2 = (s1^2 + N2 - q^2 - 1) / 2`.
pub fn weil_from_counts(n1: u64, n2: u64, q: i64) -> Result<WeilQuartic> {
    let s1 = q + 1 - n1 as i64;
    let num = s1 * s1 + n2 as i64 - q * q - 1;
    if num % 2 != 0 {
        return Err(Error::InconsistentCounts(format!(
            "N1 = {n1}, N2 = {n2}, q = {q} give a non-integral s2"
        )));
    }
    WeilQuartic::new(s1, num / 2, q)
}

/// Weil polynomial of `c` from counts over F_q and F_{q^2}.
pub fn weil_polynomial(c: &Genus2Curve) -> Result<WeilQuartic> {
    let d = c.field().degree();
    let n1 = count_points(c, d)?;
    let n2 = count_points(c, 2 * d)?;
    weil_from_counts(n1, n2, c.q())
}

/// Fast counter for the reduced shape `x^6 + c3 x^3 + c1 x + c0` over a
/// fixed field, with the cubes and sixth powers of every element tabulated.
pub struct ReducedCounter {
    field: &'static Field,
    cube: Vec<u32>,
    sixth: Vec<u32>,
}

impl ReducedCounter {
    pub fn new(field: &'static Field) -> ReducedCounter {
        let cube: Vec<u32> = (0..field.order()).map(|x| field.frobenius_code(x, 1)).collect();
        let sixth = cube.iter().map(|&c| field.mul_codes(c, c)).collect();
        ReducedCounter { field, cube, sixth }
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    /// Count for `twist * y^2 = x^6 + c3 x^3 + c1 x + c0`, all given as
    /// codes of this counter's field.
    pub fn count(&self, twist: u32, c3: u32, c1: u32, c0: u32) -> u64 {
        let f = self.field;
        let flip = !f.is_nonzero_square_code(twist);
        let mut total = 0u64;
        for x in 0..f.order() {
            let v = f.add_codes(
                f.add_codes(self.sixth[x as usize], f.mul_codes(c3, self.cube[x as usize])),
                f.add_codes(f.mul_codes(c1, x), c0),
            );
            total += if v == 0 {
                1
            } else if f.is_nonzero_square_code(v) != flip {
                2
            } else {
                0
            };
        }
        total + if flip { 0 } else { 2 }
    }

    /// Count of a reduced form whose coefficients live in a subfield.
    pub fn count_form(&self, r: &ReducedSSForm) -> Result<u64> {
        let e = self.field.degree();
        let code = |x| lift(x, e).map(|y| y.code());
        Ok(self.count(code(r.twist)?, code(r.c3)?, code(r.c1)?, code(r.c0)?))
    }
}
