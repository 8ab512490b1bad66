//! Brute-force checks of the PSL_2 lemmas: the invariant rational function
//! `F`, its separability, the trace criteria, and element orders.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::genus2::Mobius;
use crate::gf3::{imaginary_unit, lift, make_field, rel_trace, Felt, Field};
use crate::poly::{factor, roots_in, UniPoly};

/// Degree of F_r over F_3 for the supported `r`.
fn base_degree(r: u64) -> Result<u32> {
    match r {
        3 => Ok(1),
        9 => Ok(2),
        _ => Err(Error::Unsupported(format!("r = {r}; only 3 and 9 are supported"))),
    }
}

/// `num / den` in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFn {
    pub num: UniPoly,
    pub den: UniPoly,
}

impl RationalFn {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<RationalFn> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        Ok(RationalFn {
            num: num.div_exact(&g)?,
            den: den.div_exact(&g)?,
        })
    }

    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    /// Value at `z`, or `None` at a pole.
    pub fn eval(&self, z: Felt) -> Result<Option<Felt>> {
        let e = z.degree();
        let d = self.den.lift(e)?.eval(z);
        if d.is_zero() {
            return Ok(None);
        }
        Ok(Some(self.num.lift(e)?.eval(z) / d))
    }

    /// Exact test of `F(m(z)) = F(z)` after clearing denominators.
    pub fn invariant_under(&self, m: &Mobius) -> bool {
        let (n, d) = (self.num.degree().unwrap_or(0), self.den.degree().unwrap_or(0));
        let lin = UniPoly::new(self.num.field(), vec![m.d, m.c]);
        let lhs = &(&m.pullback(&self.num, n) * &lin.pow(d as u64)) * &self.den;
        let rhs = &(&m.pullback(&self.den, d) * &lin.pow(n as u64)) * &self.num;
        lhs == rhs
    }

    /// Exact test of `F(p(z)) = F(z)` for a polynomial substitution.
    pub fn invariant_under_poly(&self, p: &UniPoly) -> bool {
        &self.num.compose(p) * &self.den == &self.num * &self.den.compose(p)
    }
}

fn z_r_minus_z(f: &Field, r: u64) -> UniPoly {
    &UniPoly::monomial(f.one(), r as usize) - &UniPoly::x(f)
}

/// `F = (z^{r^2} - z)^{(r+1)/2} / (z^r - z)^{(r^2+1)/2}` over F_r.
pub fn build_f(r: u64) -> Result<RationalFn> {
    let f = make_field(base_degree(r)?)?;
    let num = z_r_minus_z(f, r * r).pow(r.div_ceil(2));
    let den = z_r_minus_z(f, r).pow((r * r).div_ceil(2));
    RationalFn::new(num, den)
}

/// `#PSL_2(F_r) = r (r^2 - 1) / 2`.
pub fn psl2_order(r: u64) -> u64 {
    r * (r * r - 1) / 2
}

/// The generators `z + 1`, `z + a` (for `r = 9`, `a = i`) and `-1/z`.
pub fn psl2_generators(r: u64) -> Result<Vec<Mobius>> {
    let f = make_field(base_degree(r)?)?;
    let mut gens = vec![Mobius::translate(f.one())];
    if r == 9 {
        gens.push(Mobius::translate(imaginary_unit(2)?));
    }
    gens.push(Mobius {
        a: f.zero(),
        b: -f.one(),
        c: f.one(),
        d: f.zero(),
    });
    Ok(gens)
}

/// `F` is fixed by every generator of PSL_2(F_r).
pub fn check_invariance(r: u64) -> Result<bool> {
    let big_f = build_f(r)?;
    Ok(psl2_generators(r)?.iter().all(|m| big_f.invariant_under(m)))
}

/// `((z^r - z)^{r-1} + 1)^{(r+1)/2} - e (z^r - z)^{r(r-1)/2}` over the
/// field of `e`.
pub fn separability_polynomial(r: u64, e: Felt) -> Result<UniPoly> {
    let base = base_degree(r)?;
    if !e.degree().is_multiple_of(base) {
        return Err(Error::NoEmbedding {
            source_degree: base as u8,
            target_degree: e.degree() as u8,
        });
    }
    let f = e.field();
    let w = z_r_minus_z(f, r);
    let left = (&w.pow(r - 1) + &UniPoly::one(f)).pow(r.div_ceil(2));
    Ok(&left - &w.pow(r * (r - 1) / 2).scale(e))
}

pub fn check_separability(r: u64, e: Felt) -> Result<bool> {
    separability_polynomial(r, e)?.is_separable()
}

/// Outcome of an exhaustive lemma check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub holds: bool,
    /// Elements satisfying the hypothesis.
    pub checked: usize,
    pub counterexample: Option<Felt>,
}

impl LemmaReport {
    fn from_iter(items: impl Iterator<Item = (Felt, bool)>) -> LemmaReport {
        let mut checked = 0;
        for (x, ok) in items {
            checked += 1;
            if !ok {
                return LemmaReport {
                    holds: false,
                    checked,
                    counterexample: Some(x),
                };
            }
        }
        LemmaReport {
            holds: true,
            checked,
            counterexample: None,
        }
    }
}

/// `(c^{r-1} + 1)^{(r+1)/2} / c^{r(r-1)/2}`.
pub fn e_value(c: Felt, r: u64) -> Felt {
    let one = c.field().one();
    (c.pow(r - 1) + one).pow(r.div_ceil(2)) / c.pow(r * (r - 1) / 2)
}

fn degree_pair(r: u64, q: u64) -> Result<(u32, u32)> {
    let rd = base_degree(r)?;
    let qd = crate::weil::log3(q as i64)?;
    if qd % rd != 0 {
        return Err(Error::Unsupported(format!("{q} is not a power of {r}")));
    }
    Ok((rd, qd))
}

/// Every `c` in F_{q^2} \ F_q whose `e`-value lies in F_q has trace zero
/// to F_r.
pub fn hat_rabbit_even(r: u64, q: u64) -> Result<LemmaReport> {
    let (rd, qd) = degree_pair(r, q)?;
    let big = make_field(2 * qd)?;
    let items: Vec<(Felt, bool)> = big
        .nonzero_elements()
        .filter(|c| c.frobenius(qd) != *c)
        .filter(|&c| {
            let e = e_value(c, r);
            e.frobenius(qd) == e
        })
        .map(|c| Ok((c, rel_trace(c, rd)?.is_zero())))
        .collect::<Result<_>>()?;
    Ok(LemmaReport::from_iter(items.into_iter()))
}

/// `(z^{r-1} + 1)^{(r+1)/2} - e z^{r(r-1)/2}` splits into linear factors
/// over F_Q.
pub fn splits_completely(r: u64, c: Felt) -> Result<bool> {
    let f = c.field();
    let e = e_value(c, r);
    let left = (&UniPoly::monomial(f.one(), (r - 1) as usize) + &UniPoly::one(f)).pow(r.div_ceil(2));
    let p = &left - &UniPoly::monomial(e, (r * (r - 1) / 2) as usize);
    Ok(factor(&p)?.factors.iter().all(|(g, _)| g.degree() == Some(1)))
}

/// For every nonzero `c` in F_Q with trace zero to F_r the polynomial of
/// [`splits_completely`] splits.
pub fn hat_rabbit_even_bis(r: u64, big_q: u64) -> Result<LemmaReport> {
    let (rd, qd) = degree_pair(r, big_q)?;
    let field = make_field(qd)?;
    let mut items = Vec::new();
    for c in field.nonzero_elements() {
        if rel_trace(c, rd)?.is_zero() {
            items.push((c, splits_completely(r, c)?));
        }
    }
    Ok(LemmaReport::from_iter(items.into_iter()))
}

/// Outcome of the odd-degree lemma: besides the report, how many `c`
/// admit a `c̄` with each sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddReport {
    pub report: LemmaReport,
    pub plus: usize,
    pub minus: usize,
}

/// For every `c` in F_{q^2} \ F_q with `(c^8+1)^5/c^36` in F_q and nonzero
/// trace to F_9 there is `c̄` in F_q^* with the same value up to sign.
pub fn hat_rabbit_odd(q: u64) -> Result<OddReport> {
    let qd = crate::weil::log3(q as i64)?;
    if qd % 2 == 0 {
        return Err(Error::DegreeParity {
            expected: "odd",
            degree: qd as u8,
        });
    }
    let small = make_field(qd)?;
    let big = make_field(2 * qd)?;
    let values: Vec<Felt> = small
        .nonzero_elements()
        .map(|x| lift(e_value(x, 9), 2 * qd))
        .collect::<Result<_>>()?;
    let (mut plus, mut minus) = (0, 0);
    let mut items = Vec::new();
    for c in big.nonzero_elements() {
        if c.frobenius(qd) == c || rel_trace(c, 2)?.is_zero() {
            continue;
        }
        let e = e_value(c, 9);
        if e.frobenius(qd) != e {
            continue;
        }
        let p = values.contains(&e);
        let m = values.contains(&-e);
        plus += p as usize;
        minus += (m && !p) as usize;
        items.push((c, p || m));
    }
    Ok(OddReport {
        report: LemmaReport::from_iter(items.into_iter()),
        plus,
        minus,
    })
}

/// An element of PSL_2(F_r): a determinant-one matrix `[a, b, c, d]`
/// whose first nonzero entry has the smaller code of the pair `+-M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Psl2Element([Felt; 4]);

impl Psl2Element {
    pub fn new(m: [Felt; 4]) -> Result<Psl2Element> {
        if m[0] * m[3] - m[1] * m[2] != m[0].field().one() {
            return Err(Error::Degenerate("determinant is not 1".into()));
        }
        let lead = m.iter().find(|x| !x.is_zero()).expect("nonzero determinant");
        let neg = m.map(|x| -x);
        Ok(Psl2Element(if (-*lead).code() < lead.code() { neg } else { m }))
    }

    pub fn entries(&self) -> [Felt; 4] {
        self.0
    }

    pub fn mul(&self, o: &Psl2Element) -> Psl2Element {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        Psl2Element::new([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
            .expect("determinants multiply")
    }

    pub fn is_identity(&self) -> bool {
        let [a, b, c, d] = self.0;
        a.is_one() && b.is_zero() && c.is_zero() && d.is_one()
    }

    pub fn order(&self) -> u32 {
        let mut acc = *self;
        let mut n = 1;
        while !acc.is_identity() {
            acc = acc.mul(self);
            n += 1;
        }
        n
    }

    /// Entrywise Frobenius `x -> x^3`.
    pub fn conjugate(&self) -> Psl2Element {
        Psl2Element::new(self.0.map(|x| x.frobenius(1))).expect("determinant is fixed")
    }

    /// `z -> (a z + b) / (c z + d)`, or `None` at the pole.
    pub fn act(&self, z: Felt) -> Result<Option<Felt>> {
        let e = z.degree();
        let [a, b, c, d] = self.0.map(|x| lift(x, e));
        let den = c? * z + d?;
        Ok((!den.is_zero()).then(|| (a.expect("same field") * z + b.expect("same field")) / den))
    }
}

/// All elements of PSL_2(F_r), sorted.
pub fn psl2_elements(r: u64) -> Result<Vec<Psl2Element>> {
    let f = make_field(base_degree(r)?)?;
    let els: Vec<Felt> = f.elements().collect();
    let mut out = std::collections::BTreeSet::new();
    for &a in &els {
        for &b in &els {
            for &c in &els {
                for &d in &els {
                    if a * d - b * c == f.one() {
                        out.insert(Psl2Element::new([a, b, c, d])?);
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Element-order histogram of PSL_2(F_r).
pub fn psl2_order_census(r: u64) -> Result<BTreeMap<u32, usize>> {
    let mut out = BTreeMap::new();
    for g in psl2_elements(r)? {
        *out.entry(g.order()).or_default() += 1;
    }
    Ok(out)
}

/// The two normal forms `[[1, 1+i], [0, 1]]` and `[[-1+i, 1+i], [0, 1+i]]`
/// over F_9.
pub fn rho_normal_forms() -> Result<[Psl2Element; 2]> {
    let f = make_field(2)?;
    let (o, z, i) = (f.one(), f.zero(), imaginary_unit(2)?);
    Ok([
        Psl2Element::new([o, o + i, z, o])?,
        Psl2Element::new([i - o, o + i, z, o + i])?,
    ])
}

/// The `G`-orbit of `z0` (finite points only).
pub fn orbit(r: u64, z0: Felt) -> Result<Vec<Felt>> {
    let mut out = std::collections::BTreeSet::new();
    for g in psl2_elements(r)? {
        if let Some(w) = g.act(z0)? {
            out.insert(w);
        }
    }
    Ok(out.into_iter().collect())
}

/// Roots of `num - F(z0) den` in the field of `z0`.
pub fn level_set(big_f: &RationalFn, z0: Felt) -> Result<Vec<Felt>> {
    let e = z0.degree();
    let v = big_f
        .eval(z0)?
        .ok_or_else(|| Error::Degenerate("z0 is a pole of F".into()))?;
    let p = &big_f.num.lift(e)? - &big_f.den.lift(e)?.scale(v);
    roots_in(&p, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_match_group_orders() {
        assert_eq!(build_f(3).unwrap().degree(), 12);
        assert_eq!(build_f(9).unwrap().degree(), 360);
        assert_eq!(psl2_order(3), 12);
        assert_eq!(psl2_order(9), 360);
        assert!(build_f(27).is_err());
    }

    #[test]
    fn invariance() {
        assert!(check_invariance(3).unwrap());
        assert!(check_invariance(9).unwrap());
        let f3 = make_field(1).unwrap();
        let sq = UniPoly::monomial(f3.one(), 2);
        assert!(!build_f(3).unwrap().invariant_under_poly(&sq));
    }

    #[test]
    fn level_sets_are_orbits() {
        let f = build_f(3).unwrap();
        let big = make_field(6).unwrap();
        let mut tried = 0;
        for z0 in big.nonzero_elements().step_by(37) {
            if z0.frobenius(2) == z0 {
                continue;
            }
            let orb = orbit(3, z0).unwrap();
            assert_eq!(orb.len(), 12);
            assert_eq!(level_set(&f, z0).unwrap(), orb);
            tried += 1;
        }
        assert!(tried > 5);
    }

    #[test]
    fn separability() {
        let f9 = make_field(2).unwrap();
        for e in f9.nonzero_elements() {
            assert!(check_separability(3, e).unwrap());
        }
        assert!(!check_separability(3, f9.zero()).unwrap());
    }

    #[test]
    fn hat_rabbit_even_small() {
        for (r, q) in [(3, 9), (3, 27)] {
            let rep = hat_rabbit_even(r, q).unwrap();
            assert!(rep.holds, "{rep:?}");
            assert!(rep.checked > 0);
        }
    }

    #[test]
    fn hat_rabbit_even_bis_small() {
        for (r, q) in [(3, 9), (3, 27)] {
            let rep = hat_rabbit_even_bis(r, q).unwrap();
            assert!(rep.holds && rep.checked > 0, "{rep:?}");
        }
        let f9 = make_field(2).unwrap();
        let c = f9.nonzero_elements().find(|&c| !rel_trace(c, 1).unwrap().is_zero()).unwrap();
        assert!(!splits_completely(3, c).unwrap());
    }

    #[test]
    fn hat_rabbit_odd_27() {
        let rep = hat_rabbit_odd(27).unwrap();
        assert!(rep.report.holds && rep.report.checked > 0, "{rep:?}");
        assert_eq!(rep.plus + rep.minus, rep.report.checked);
        assert!(hat_rabbit_odd(9).is_err());
    }

    #[test]
    fn orders() {
        let small = psl2_order_census(3).unwrap();
        assert_eq!(small.values().sum::<usize>(), 12);
        assert!(small.keys().all(|k| [1, 2, 3].contains(k)));
        let big = psl2_order_census(9).unwrap();
        assert_eq!(big.values().sum::<usize>(), 360);
        assert!(big.keys().all(|k| [1, 2, 3, 4, 5].contains(k)));
        assert_eq!(big[&1], 1);
    }

    #[test]
    fn rho_bar_rho_has_order_three() {
        for rho in rho_normal_forms().unwrap() {
            assert_eq!(rho.conjugate().mul(&rho).order(), 3);
        }
    }
}
