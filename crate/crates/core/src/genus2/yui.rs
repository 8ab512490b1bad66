use super::Genus2Curve;
use crate::gf3::Felt;

/// The Hasse-Witt matrix `[[c2, c1], [c5, c4]]` of the model after dividing
/// `f` by its leading coefficient.
///
/// For quintics this is the classical matrix; for sextics the same entries
/// work, so no conversion between the two shapes is needed.
pub fn yui_matrix(c: &Genus2Curve) -> [[Felt; 2]; 2] {
    let m = c.f().monic();
    [[m.coeff(2), m.coeff(1)], [m.coeff(5), m.coeff(4)]]
}

fn mul(a: [[Felt; 2]; 2], b: [[Felt; 2]; 2]) -> [[Felt; 2]; 2] {
    let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Supersingular iff `M M^(3) = 0`.
pub fn yui_is_supersingular(c: &Genus2Curve) -> bool {
    let m = yui_matrix(c);
    let m3 = m.map(|row| row.map(|x| x.cube()));
    mul(m, m3).iter().flatten().all(|x| x.is_zero())
}

/// Superspecial iff `M = 0`; never true in characteristic 3 for genus 2.
pub fn is_superspecial(c: &Genus2Curve) -> bool {
    yui_matrix(c).iter().flatten().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf3::make_field;
    use crate::poly::UniPoly;

    #[test]
    fn x5_minus_x_is_not_supersingular() {
        let f3 = make_field(1).unwrap();
        let c = Genus2Curve::untwisted(UniPoly::from_ints(f3, &[0, -1, 0, 0, 0, 1])).unwrap();
        assert!(!yui_is_supersingular(&c));
        assert!(!is_superspecial(&c));
    }

    #[test]
    fn reduced_shape_is_supersingular() {
        let f9 = make_field(2).unwrap();
        let z = f9.zero();
        for c3 in f9.elements() {
            for c1 in f9.nonzero_elements() {
                let f = UniPoly::new(f9, vec![f9.one(), c1, z, c3, z, z, f9.one()]);
                let c = Genus2Curve::untwisted(f).unwrap();
                assert!(yui_is_supersingular(&c));
                assert!(!is_superspecial(&c));
            }
        }
    }
}
