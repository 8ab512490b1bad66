//! Exhaustive censuses of supersingular genus-2 Weil polynomials and
//! explicit witness curves for every polynomial on the list.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::ser::SerializeStruct;

use crate::covers::{build_cover, table3_classify};
use crate::error::{Error, Result};
use crate::genus2::{
    curve_from_invariant, weil_from_counts, weil_polynomial, Genus2Curve, ReducedCounter, ReducedSSForm,
};
use crate::gf3::{abs_trace, lift, make_field, nonsquare, Felt, Field};
use crate::poly::{is_irreducible, UniPoly};
use crate::weil::{exact_sqrt, lemma_ssas_list, log3, theorem1_list, WeilQuartic};

/// Result of a census over F_q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub q: i64,
    pub observed: BTreeSet<WeilQuartic>,
    pub expected: BTreeSet<WeilQuartic>,
    pub witnesses: BTreeMap<WeilQuartic, Genus2Curve>,
    pub curves_scanned: u64,
}

impl CensusReport {
    pub fn pass(&self) -> bool {
        self.observed == self.expected
    }

    /// Entries of the abelian-surface list that no curve realizes.
    pub fn excluded(&self) -> Result<BTreeSet<WeilQuartic>> {
        Ok(lemma_ssas_list(self.q)?
            .difference(&self.observed)
            .copied()
            .collect())
    }
}

/// `{"curves_scanned", "expected", "observed", "pass", "q", "witnesses"}`;
/// witnesses are keyed by the printed polynomial.
impl serde::Serialize for CensusReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let witnesses: BTreeMap<String, &Genus2Curve> =
            self.witnesses.iter().map(|(w, c)| (w.to_string(), c)).collect();
        let mut st = s.serialize_struct("CensusReport", 6)?;
        st.serialize_field("curves_scanned", &self.curves_scanned)?;
        st.serialize_field("expected", &self.expected)?;
        st.serialize_field("observed", &self.observed)?;
        st.serialize_field("pass", &self.pass())?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("witnesses", &witnesses)?;
        st.end()
    }
}

/// Census knobs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    /// Allow q = 81, which uses the invariant-class shortcut.
    pub allow_q81: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            jobs: 1,
            allow_q81: false,
        }
    }
}

/// First-found witness per quartic, keyed by enumeration position.
type Partial = BTreeMap<WeilQuartic, ([u32; 4], u64)>;

fn merge(mut a: Partial, b: Partial) -> Partial {
    for (w, (key, n)) in b {
        a.entry(w)
            .and_modify(|(k, m)| {
                *k = (*k).min(key);
                *m += n;
            })
            .or_insert((key, n));
    }
    a
}

/// All forms `d y^2 = x^6 + c3 x^3 + c1 x + c0` with `d` in
/// `{1, nonsquare}` and `c1 != 0`, counted over F_q and F_{q^2}.
fn brute_census(field: &'static Field, jobs: usize) -> Result<(Partial, u64)> {
    let q = field.order() as i64;
    let d = field.degree();
    let small = ReducedCounter::new(field);
    let big = ReducedCounter::new(make_field(2 * d)?);
    let up = |x: u32| -> Result<u32> { Ok(lift(field.element(x), 2 * d)?.code()) };
    let twists = [1u32, nonsquare(field).code()];
    let order = field.order();
    let mut slabs = Vec::new();
    for (ti, &t) in twists.iter().enumerate() {
        for c3 in 0..order {
            slabs.push((ti as u32, t, c3));
        }
    }
    let lifted: Vec<u32> = (0..order).map(up).collect::<Result<_>>()?;
    let work = |&(ti, t, c3): &(u32, u32, u32)| -> Result<Partial> {
        let mut out = Partial::new();
        for c1 in 1..order {
            for c0 in 0..order {
                let n1 = small.count(t, c3, c1, c0);
                let n2 = big.count(
                    lifted[t as usize],
                    lifted[c3 as usize],
                    lifted[c1 as usize],
                    lifted[c0 as usize],
                );
                let w = weil_from_counts(n1, n2, q)?;
                out.entry(w)
                    .and_modify(|e| e.1 += 1)
                    .or_insert(([ti, c3, c1, c0], 1));
            }
        }
        Ok(out)
    };
    let parts: Vec<Partial> = if jobs <= 1 {
        slabs.iter().map(work).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Unsupported(e.to_string()))?;
        pool.install(|| slabs.par_iter().map(work).collect::<Result<_>>())?
    };
    let scanned = slabs.len() as u64 * (order as u64 - 1) * order as u64;
    Ok((parts.into_iter().fold(Partial::new(), merge), scanned))
}

fn witness_curve(field: &'static Field, key: [u32; 4]) -> Genus2Curve {
    let [ti, c3, c1, c0] = key;
    let twist = if ti == 0 { field.one() } else { nonsquare(field) };
    ReducedSSForm::new(field.element(c3), field.element(c1), field.element(c0), twist)
        .expect("enumerated forms have c1 != 0")
        .curve()
}

fn report(q: i64, observed: BTreeMap<WeilQuartic, Genus2Curve>, scanned: u64) -> Result<CensusReport> {
    let allowed = lemma_ssas_list(q)?;
    if let Some(bad) = observed.keys().find(|w| !allowed.contains(w)) {
        return Err(Error::PredictionMismatch(format!(
            "census over F_{q} produced {bad}, which is not a supersingular quartic"
        )));
    }
    Ok(CensusReport {
        q,
        observed: observed.keys().copied().collect(),
        expected: theorem1_list(q)?,
        witnesses: observed,
        curves_scanned: scanned,
    })
}

/// Census of all supersingular genus-2 curves over F_q. q = 81 requires
/// `allow_q81` and runs [`shortcut_census`].
pub fn weil_census(q: i64, opts: CensusOptions) -> Result<CensusReport> {
    let d = log3(q)?;
    match d {
        1..=3 => {}
        4 if opts.allow_q81 => return shortcut_census(q),
        4 => {
            return Err(Error::Unsupported(
                "the q = 81 census is opt-in".into(),
            ))
        }
        _ => return Err(Error::Unsupported(format!("census over F_{q}"))),
    }
    let field = make_field(d)?;
    let (partial, scanned) = brute_census(field, opts.jobs.max(1))?;
    let observed = partial
        .into_iter()
        .map(|(w, (key, _))| (w, witness_curve(field, key)))
        .collect();
    report(q, observed, scanned)
}

/// Census by geometric class: `I -> curve_from_invariant(I)` and its
/// quadratic twist for `I != 0`; for `I = 0` every `d y^2 = x^5 + e`.
pub fn shortcut_census(q: i64) -> Result<CensusReport> {
    let field = make_field(log3(q)?)?;
    let mut curves = Vec::new();
    for i in field.nonzero_elements() {
        let c = curve_from_invariant(i);
        curves.push(c.quadratic_twist());
        curves.push(c);
    }
    for e in field.nonzero_elements() {
        for d in [field.one(), nonsquare(field)] {
            curves.push(quintic(d, e));
        }
    }
    let results: Vec<(WeilQuartic, Genus2Curve)> = curves
        .into_par_iter()
        .map(|c| weil_polynomial(&c).map(|w| (w, c)))
        .collect::<Result<_>>()?;
    let scanned = results.len() as u64;
    let mut observed = BTreeMap::new();
    for (w, c) in results {
        observed.entry(w).or_insert(c);
    }
    report(q, observed, scanned)
}

/// `d y^2 = x^5 + e`.
fn quintic(d: Felt, e: Felt) -> Genus2Curve {
    let f = d.field();
    let z = f.zero();
    Genus2Curve::new(d, UniPoly::new(f, vec![e, z, z, z, z, f.one()])).expect("x^5 + e is separable")
}

fn verified(c: Genus2Curve, target: &WeilQuartic) -> Result<Option<Genus2Curve>> {
    Ok((weil_polynomial(&c)? == *target).then_some(c))
}

/// The first of `c` and its quadratic twist with Weil polynomial `target`.
fn either_twist(c: Genus2Curve, target: &WeilQuartic) -> Result<Option<Genus2Curve>> {
    let t = c.quadratic_twist();
    Ok(verified(c, target)?.or(verified(t, target)?))
}

fn exact_match(c: Genus2Curve, target: &WeilQuartic, what: &str) -> Result<Genus2Curve> {
    let w = weil_polynomial(&c)?;
    if w != *target {
        return Err(Error::PredictionMismatch(format!(
            "{what} over F_{} has Weil polynomial {w}, expected {target}",
            target.q
        )));
    }
    Ok(c)
}

/// `y^2 = z^6 + a^2 z^3 + a^2 z + a^4 + 1`.
fn odd_family(a: Felt) -> Result<Genus2Curve> {
    let f = a.field();
    let a2 = a.square();
    Genus2Curve::untwisted(UniPoly::new(
        f,
        vec![a2.square() + f.one(), a2, f.zero(), a2, f.zero(), f.zero(), f.one()],
    ))
}

/// A curve over F_q with Weil polynomial `target`, built from the explicit
/// recipe for its list item and verified by counting.
pub fn construct_curve_with_weil(q: i64, target: &WeilQuartic) -> Result<Genus2Curve> {
    let list = theorem1_list(q)?;
    if target.q != q || !list.contains(target) {
        return Err(Error::NotInList(format!("{target} over F_{q}")));
    }
    let d = log3(q)?;
    let field = make_field(d)?;
    let not_found = || Error::SearchExhausted(format!("no witness for {target} over F_{q}"));
    if d % 2 == 1 {
        match (target.s1, target.s2) {
            (0, 0) => either_twist(quintic(field.one(), field.one()), target)?.ok_or_else(not_found),
            (0, s2) if s2 == q || s2 == -2 * q => {
                let want_trace = s2 == q;
                let a = field
                    .nonzero_elements()
                    .find(|&a| (abs_trace(a) != 0) == want_trace)
                    .ok_or_else(not_found)?;
                exact_match(odd_family(a)?, target, "z^6 + a^2 z^3 + a^2 z + a^4 + 1")
            }
            _ => {
                for c in field.nonzero_elements() {
                    let Ok(t) = build_cover(field.one(), c) else { continue };
                    if let Some(curve) = verified(t.curve, target)? {
                        return Ok(curve);
                    }
                }
                Err(not_found())
            }
        }
    } else {
        let r = exact_sqrt(q).expect("even degree");
        match (target.s1, target.s2) {
            (0, 0) => {
                let a = nonsquare(field);
                let one = field.one();
                let f = UniPoly::new(field, vec![a.cube() + one, a, field.zero(), one, field.zero(), field.zero(), one]);
                either_twist(Genus2Curve::untwisted(f)?, target)?.ok_or_else(not_found)
            }
            (s1, s2) if s1.abs() == r && s2 == q => {
                for c in field.nonzero_elements() {
                    let z = field.zero();
                    let quintic = UniPoly::new(field, vec![-c, z, -field.one(), z, z, field.one()]);
                    if !is_irreducible(&quintic) {
                        continue;
                    }
                    let curve = Genus2Curve::untwisted(&quintic * &UniPoly::x(field))?;
                    return either_twist(curve, target)?.ok_or_else(|| {
                        Error::PredictionMismatch(format!(
                            "z(z^5 - z^2 - c) and its twist miss {target}"
                        ))
                    });
                }
                Err(not_found())
            }
            _ => {
                for b in field.nonzero_elements() {
                    for c in field.nonzero_elements() {
                        let (s, t) = table3_classify(b, c)?;
                        if WeilQuartic::split(s, t, q) != *target {
                            continue;
                        }
                        let Ok(cover) = build_cover(b, c) else { continue };
                        return exact_match(cover.curve, target, "the cover curve C_(b,c)");
                    }
                }
                Err(not_found())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(q: i64) -> CensusReport {
        weil_census(q, CensusOptions::default()).unwrap()
    }

    #[test]
    fn census_f3() {
        let r = brute(3);
        assert_eq!(r.curves_scanned, 36);
        assert!(r.pass());
        let got: Vec<(i64, i64)> = r.observed.iter().map(|w| (w.s1, w.s2)).collect();
        assert_eq!(got, vec![(-3, 6), (0, 0), (0, 3), (3, 6)]);
    }

    #[test]
    fn census_f9_is_parallel_invariant() {
        let a = brute(9);
        let b = weil_census(9, CensusOptions { jobs: 4, allow_q81: false }).unwrap();
        assert!(a.pass());
        assert_eq!(a, b);
        assert_eq!(a.curves_scanned, 1296);
    }

    #[test]
    fn witnesses_recount() {
        for q in [3, 9] {
            let r = brute(q);
            for (w, c) in &r.witnesses {
                assert_eq!(weil_polynomial(c).unwrap(), *w);
            }
            let obs = &r.observed;
            assert!(obs.iter().all(|w| obs.contains(&w.twist())));
        }
    }

    #[test]
    fn shortcut_agrees_with_brute() {
        for q in [9, 27] {
            assert_eq!(shortcut_census(q).unwrap().observed, brute(q).observed);
        }
    }

    #[test]
    fn q81_is_opt_in() {
        assert!(weil_census(81, CensusOptions::default()).is_err());
        assert!(weil_census(243, CensusOptions { jobs: 1, allow_q81: true }).is_err());
    }

    #[test]
    fn constructions() {
        for q in [3, 9, 27] {
            for w in theorem1_list(q).unwrap() {
                let c = construct_curve_with_weil(q, &w).unwrap();
                assert_eq!(weil_polynomial(&c).unwrap(), w);
            }
        }
        let bad = WeilQuartic::new(0, -9, 9).unwrap();
        assert!(matches!(construct_curve_with_weil(9, &bad), Err(Error::NotInList(_))));
    }
}
