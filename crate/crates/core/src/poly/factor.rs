use num_integer::Integer;

use super::UniPoly;
use crate::error::{Error, Result};
use crate::gf3::{Felt, MAX_DEGREE};

/// A complete factorization `lc * prod g_i^{m_i}` into monic irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub lc: Felt,
    /// Monic irreducible factors with multiplicities, sorted by degree then
    /// coefficient encoding.
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    pub fn degrees(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g.degree().unwrap_or(0), *m as usize))
            .collect()
    }

    /// Degree over the coefficient field of the splitting field.
    pub fn splitting_lcm(&self) -> usize {
        self.factors
            .iter()
            .fold(1, |acc, (g, _)| acc.lcm(&g.degree().unwrap_or(1).max(1)))
    }
}

/// `p(x)^(1/3)` for a polynomial in `x^3`.
fn cube_root(p: &UniPoly) -> UniPoly {
    let f = p.field();
    let d = f.degree();
    let coeffs = p
        .coeffs()
        .iter()
        .step_by(3)
        .map(|c| c.frobenius(d - 1))
        .collect();
    UniPoly::new(f, coeffs)
}

/// Squarefree parts with multiplicities; their product (with powers) is
/// the monic version of `f`.
pub fn squarefree_decomposition(f: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    let f = f.monic();
    let one = UniPoly::one(f.field());
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c)?;
    let mut i = 1;
    while w != one {
        let y = w.gcd(&c);
        let z = w.div_exact(&y)?;
        if z != one {
            out.push((z, i));
        }
        i += 1;
        w = y.clone();
        c = c.div_exact(&y)?;
    }
    if c != one {
        for (g, m) in squarefree_decomposition(&cube_root(&c))? {
            out.push((g, 3 * m));
        }
    }
    Ok(out)
}

/// Splits a squarefree monic polynomial into products of same-degree
/// irreducibles: returns `(product, degree)` pairs.
fn distinct_degree(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let field = f.field();
    let d = field.degree();
    let x = UniPoly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut k = 0;
    while rest.degree().unwrap_or(0) >= 2 * (k + 1) {
        k += 1;
        h = h.frobenius_mod(d, &rest)?;
        let g = rest.gcd(&(&h - &x));
        if !g.is_one() {
            rest = rest.div_exact(&g)?;
            h = h.rem(&rest)?;
            out.push((g, k));
        }
    }
    if let Some(n) = rest.degree().filter(|&n| n > 0) {
        out.push((rest, n));
    }
    Ok(out)
}

/// Splits a product of distinct monic irreducibles of degree `k`.
///
/// Deterministic: for `beta` running over the F_3-basis `alpha^a x^b` of
/// `F_q[x]/(g)`, the absolute trace `T(beta)` is a constant of F_3 modulo
/// each irreducible factor, so `gcd(g, T(beta) - c)` separates factors as
/// soon as `T(beta)` differs between them; some basis element always does.
fn equal_degree(g: &UniPoly, k: usize) -> Result<Vec<UniPoly>> {
    let n = g.degree().unwrap_or(0);
    if n <= k {
        return Ok(vec![g.clone()]);
    }
    let field = g.field();
    let d = field.degree() as usize;
    for a in 0..d {
        let alpha_a = field.element(3u32.pow(a as u32));
        for b in 0..n {
            let beta = UniPoly::monomial(alpha_a, b).rem(g)?;
            let mut t = beta.clone();
            let mut y = beta;
            for _ in 1..d * k {
                y = y.frobenius_mod(1, g)?;
                t = &t + &y;
            }
            let pieces: Vec<UniPoly> = (0..3)
                .map(|c| g.gcd(&(&t - &UniPoly::constant(field.from_int(c)))))
                .filter(|p| !p.is_one())
                .collect();
            if pieces.len() > 1 {
                let mut out = Vec::new();
                for p in pieces {
                    out.extend(equal_degree(&p, k)?);
                }
                return Ok(out);
            }
        }
    }
    unreachable!("trace basis separates the factors of a squarefree product")
}

/// Full factorization over the coefficient field.
pub fn factor(f: &UniPoly) -> Result<Factorization> {
    let lc = f.lc();
    let mut factors = Vec::new();
    for (part, m) in squarefree_decomposition(f)? {
        for (g, k) in distinct_degree(&part)? {
            for h in equal_degree(&g, k)? {
                factors.push((h, m));
            }
        }
    }
    factors.sort_by(|a, b| (a.0.degree(), &a.0, a.1).cmp(&(b.0.degree(), &b.0, b.1)));
    Ok(Factorization { lc, factors })
}

/// True iff `f` is irreducible over its coefficient field: no common
/// factor with `x^(q^k) - x` for `k <= deg/2`.
pub fn is_irreducible(f: &UniPoly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    let field = f.field();
    let x = UniPoly::x(field);
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = h.frobenius_mod(field.degree(), f).expect("f nonzero");
        if !f.gcd(&(&h - &x)).is_one() {
            return false;
        }
    }
    true
}

/// Distinct roots of `f` in GF(3^dst), sorted by code.
pub fn roots_in(f: &UniPoly, dst: u32) -> Result<Vec<Felt>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let g = f.lift(dst)?.monic();
    let x = UniPoly::x(g.field());
    let fixed = g.gcd(&(&x.frobenius_mod(dst, &g)? - &x));
    if fixed.is_one() {
        return Ok(Vec::new());
    }
    let mut roots: Vec<Felt> = equal_degree(&fixed, 1)?
        .into_iter()
        .map(|l| -l.coeff(0))
        .collect();
    roots.sort();
    Ok(roots)
}

/// Degree over F_3 of the splitting field of `f`, capped at GF(3^12).
pub fn splitting_degree(f: &UniPoly) -> Result<u32> {
    let lcm = factor(f)?.splitting_lcm() as u32;
    let total = lcm * f.field_degree();
    if total > MAX_DEGREE {
        return Err(Error::SplittingFieldTooLarge(total));
    }
    Ok(total)
}

/// True iff the separable polynomial `f` has an even number of irreducible
/// factors of even degree.
pub fn pellet_parity(f: &UniPoly) -> Result<bool> {
    if !f.is_separable()? {
        return Err(Error::Inseparable);
    }
    let even = factor(f)?
        .factors
        .iter()
        .filter(|(g, _)| g.degree().unwrap_or(0) % 2 == 0)
        .count();
    Ok(even % 2 == 0)
}
