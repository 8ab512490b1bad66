use super::{factor, UniPoly};
use crate::error::{Error, Result};
use crate::gf3::Felt;

/// An ordered factorization `f = lc * g1 * g2` into monic cubics.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CubicPair {
    pub lc: Felt,
    pub g1: UniPoly,
    pub g2: UniPoly,
}

/// All ordered pairs of monic cubics over GF(3^k) whose product is the
/// monic part of the separable sextic `f`, sorted by encoding.
///
/// Every rational monic cubic factor is a product of irreducible factors
/// of `f` over GF(3^k), so it is enough to choose subsets of those factors
/// of total degree 3.
pub fn cubic_factor_pairs(f: &UniPoly, k: u32) -> Result<Vec<CubicPair>> {
    if f.degree() != Some(6) {
        return Err(Error::WrongDegree {
            expected: "6",
            found: f.degree().unwrap_or(0),
        });
    }
    if !f.is_separable()? {
        return Err(Error::Inseparable);
    }
    let g = f.lift(k)?;
    let lc = g.lc();
    let monic = g.monic();
    let irreducibles: Vec<UniPoly> = factor(&monic)?.factors.into_iter().map(|(h, _)| h).collect();
    let n = irreducibles.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let chosen: Vec<&UniPoly> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| &irreducibles[i])
            .collect();
        let deg: usize = chosen.iter().map(|h| h.degree().unwrap_or(0)).sum();
        if deg != 3 {
            continue;
        }
        let g1 = chosen
            .into_iter()
            .fold(UniPoly::one(g.field()), |acc, h| &acc * h);
        let g2 = monic.div_exact(&g1)?;
        out.push(CubicPair { lc, g1, g2 });
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf3::make_field;

    #[test]
    fn product_of_two_rational_cubics() {
        let f9 = make_field(2).unwrap();
        let g1 = UniPoly::parse(f9, "10,20,00,10").unwrap(); // x^3 - x + 1
        let g2 = UniPoly::parse(f9, "01,00,10,10").unwrap();
        let f = &g1 * &g2;
        assert!(f.is_separable().unwrap());
        let pairs = cubic_factor_pairs(&f, 2).unwrap();
        let one = f9.one();
        assert!(pairs.contains(&CubicPair { lc: one, g1: g1.clone(), g2: g2.clone() }));
        assert!(pairs.contains(&CubicPair { lc: one, g1: g2, g2: g1 }));
    }

    #[test]
    fn wrong_degree() {
        let f3 = make_field(1).unwrap();
        assert!(cubic_factor_pairs(&UniPoly::from_ints(f3, &[1, 0, 1]), 1).is_err());
    }
}
