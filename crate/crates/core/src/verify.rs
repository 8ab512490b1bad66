//! Verification suites bundling the library's exhaustive checks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::census::{construct_curve_with_weil, weil_census, CensusOptions};
use crate::covers::{
    build_cover, phi_eval, reduce_cubic_split_to_cover, splitting_check, table3_classify, target_traces,
};
use crate::elliptic::{aut_order_rational, classify_twist, ell_count, verify_endo_relations, EllipticCurve, TwistLabel};
use crate::error::{Error, Result};
use crate::genus2::{
    igusa_general, weil_polynomial, yui_is_supersingular, Genus2Curve, IgusaVector, ReducedSSForm,
};
use crate::gf3::make_field;
use crate::moduli::{eq_invariant, fiber, fiber_polynomial, kappa_of_cubic, subgroup_census, TwoTorsionModel};
use crate::poly::{cubic_factor_pairs, UniPoly};
use crate::psl2::{
    build_f, check_invariance, check_separability, hat_rabbit_even, hat_rabbit_even_bis, hat_rabbit_odd,
    psl2_order_census, rho_normal_forms,
};
use crate::weil::{lemma_ssas_list, theorem1_list, WeilQuartic};

/// The available suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tables,
    Covers,
    Moduli,
    Psl2,
    Census,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Tables, Suite::Covers, Suite::Moduli, Suite::Psl2, Suite::Census];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Covers => "covers",
            Suite::Moduli => "moduli",
            Suite::Psl2 => "psl2",
            Suite::Census => "census",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite {s:?}")))
    }
}

/// Knobs shared by the suites.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub jobs: usize,
    /// Also run the q = 81 census.
    pub q81: bool,
    /// Negate one table prediction at run time, to prove the suite can fail.
    pub inject_fault: bool,
}

/// One named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub pass: bool,
    pub checks: Vec<Check>,
}

struct Collector(Vec<Check>);

impl Collector {
    fn push(&mut self, name: impl Into<String>, outcome: Result<(bool, String)>) {
        let (pass, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.0.push(Check {
            name: name.into(),
            pass,
            detail,
        });
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let mut c = Collector(Vec::new());
    match suite {
        Suite::Tables => tables(&mut c, opts),
        Suite::Covers => covers(&mut c),
        Suite::Moduli => moduli(&mut c),
        Suite::Psl2 => psl2(&mut c),
        Suite::Census => census(&mut c, opts),
    }
    let checks = c.0;
    SuiteReport {
        suite,
        pass: checks.iter().all(|k| k.pass),
        checks,
    }
}

/// Predicted vs counted trace and automorphism count for every
/// `y^2 = x^3 - b x + c` with `b != 0` over GF(3^d).
pub fn twist_table_conformance(d: u32, inject_fault: bool) -> Result<(bool, String)> {
    let f = make_field(d)?;
    let mut n = 0;
    for b in f.nonzero_elements() {
        for cc in f.elements() {
            let e = EllipticCurve::new(b, cc)?;
            let mut class = classify_twist(&e);
            if inject_fault && class.label == TwistLabel::OmegaPair {
                class.trace = -class.trace;
            }
            let t = f.order() as i64 + 1 - ell_count(&e, d)? as i64;
            let aut = aut_order_rational(&e);
            if class.trace != t || class.aut != aut {
                return Ok((
                    false,
                    format!(
                        "b={b} c={cc}: {:?} predicts (trace {}, aut {}), found ({t}, {aut})",
                        class.label, class.trace, class.aut
                    ),
                ));
            }
            n += 1;
        }
    }
    Ok((true, format!("{n} curves")))
}

fn spot_values() -> Result<(bool, String)> {
    let f3 = make_field(1)?;
    let bad = Genus2Curve::untwisted(UniPoly::from_ints(f3, &[0, -1, 0, 0, 0, 1]))?;
    let good = Genus2Curve::untwisted(UniPoly::from_ints(f3, &[1, 0, 0, 0, 0, 1]))?;
    let ib = igusa_general(&bad)?;
    let ig = igusa_general(&good)?;
    let wb = weil_polynomial(&bad)?;
    let wg = weil_polynomial(&good)?;
    let ok = ib.weighted_eq(&IgusaVector::from_ints(f3, [1, 0, -1, -1, -1]))
        && ig.weighted_eq(&IgusaVector::from_ints(f3, [0, 0, 0, 0, 1]))
        && (wb.s1, wb.s2) == (0, -2)
        && (wg.s1, wg.s2) == (0, 0)
        && !yui_is_supersingular(&bad)
        && yui_is_supersingular(&good);
    Ok((ok, format!("x^5 - x: {ib}, {wb}; x^5 + 1: {ig}, {wg}")))
}

fn tables(c: &mut Collector, opts: &VerifyOptions) {
    for d in 1..=4 {
        c.push(
            format!("twist tables over F_{}", 3u64.pow(d)),
            twist_table_conformance(d, opts.inject_fault),
        );
    }
    for d in [2, 4] {
        c.push(
            format!("endomorphism relations over F_{}", 3u64.pow(d)),
            verify_endo_relations(d).map(|ok| (ok, String::new())),
        );
    }
    c.push("Igusa and Weil spot values", spot_values());
}

/// Splitting of every valid cover over GF(3^d).
pub fn splitting_sweep(d: u32) -> Result<(bool, String)> {
    let f = make_field(d)?;
    let mut n = 0;
    for b in f.nonzero_elements() {
        for cc in f.nonzero_elements() {
            let Ok(t) = build_cover(b, cc) else { continue };
            if !splitting_check(&t)? {
                return Ok((false, format!("b={b} c={cc}")));
            }
            n += 1;
        }
    }
    Ok((true, format!("{n} covers")))
}

fn table3_sweep() -> Result<(bool, String)> {
    let mut n = 0;
    for (d, step) in [(2u32, 1usize), (4, 13)] {
        let f = make_field(d)?;
        for b in f.nonzero_elements().step_by(step) {
            for cc in f.nonzero_elements().step_by(step) {
                let Ok(t) = build_cover(b, cc) else { continue };
                let (s, u) = table3_classify(b, cc)?;
                let (t1, t2) = target_traces(&t)?;
                if (s.min(u), s.max(u)) != (t1.min(t2), t1.max(t2)) {
                    return Ok((false, format!("b={b} c={cc}: table ({s}, {u}), counted ({t1}, {t2})")));
                }
                n += 1;
            }
        }
    }
    Ok((true, format!("{n} covers")))
}

fn fiber_sweep() -> Result<(bool, String)> {
    let f3 = make_field(1)?;
    let t = build_cover(f3.one(), f3.one())?;
    let mut tally = std::collections::BTreeMap::new();
    for p in t.points(6)? {
        *tally.entry(phi_eval(&t, &p)?).or_insert(0usize) += 1;
    }
    let doubles = tally.values().filter(|&&n| n == 2).count();
    let max = tally.values().copied().max().unwrap_or(0);
    Ok((doubles == 2 && max <= 3, format!("{doubles} fibers of size 2, max {max}")))
}

fn cubic_reduction_sweep() -> Result<(bool, String)> {
    let f9 = make_field(2)?;
    let mut n = 0;
    for c3 in f9.elements() {
        for c1 in f9.nonzero_elements() {
            for c0 in f9.elements() {
                let form = ReducedSSForm::new(c3, c1, c0, f9.one())?;
                let Ok(curve) = Genus2Curve::untwisted(form.sextic()) else { continue };
                for pair in cubic_factor_pairs(curve.f(), 2)? {
                    reduce_cubic_split_to_cover(&curve, &pair.g1, &pair.g2)?;
                    n += 1;
                }
            }
        }
    }
    Ok((n > 0, format!("{n} cubic pairs")))
}

fn covers(c: &mut Collector) {
    c.push("cover splitting over F_9", splitting_sweep(2));
    c.push("cover splitting over F_27", splitting_sweep(3));
    c.push("even-degree splitting table", table3_sweep());
    c.push("fiber census over F_729", fiber_sweep());
    c.push("cubic pairs over F_9 reduce to covers", cubic_reduction_sweep());
}

/// `I(C_{1,c}) = -(1 + c^8)^5 / c^36` for every nonzero `c` in GF(3^d).
pub fn keystone_sweep(d: u32) -> Result<(bool, String)> {
    let f = make_field(d)?;
    for cc in f.nonzero_elements() {
        let t = build_cover(f.one(), cc)?;
        let i = crate::genus2::invariant_i(&t.curve)?;
        if i != eq_invariant(cc)? {
            return Ok((false, format!("c={cc}: I = {i}")));
        }
    }
    Ok((true, format!("{} values", f.order() - 1)))
}

/// A generic fiber with 20 distinct roots, and degree 20 for all `I != 0`.
pub fn fiber_degree_check() -> Result<(bool, String)> {
    let f9 = make_field(2)?;
    let degrees_ok = f9
        .nonzero_elements()
        .all(|i| fiber_polynomial(i).degree() == Some(20));
    let generic = f9
        .nonzero_elements()
        .find(|&i| fiber(i).map(|fb| fb.distinct_roots == 20).unwrap_or(false));
    Ok(match generic {
        Some(i) => (degrees_ok, format!("I = {i} has 20 distinct roots")),
        None => (false, "no generic fiber over F_9".into()),
    })
}

fn kappa_check() -> Result<(bool, String)> {
    let m = TwoTorsionModel;
    let mut images = BTreeSet::new();
    for i in 1..=6u8 {
        for j in i + 1..=6 {
            for k in j + 1..=6 {
                images.insert(kappa_of_cubic(&[i, j, k])?);
            }
        }
    }
    let non_iso: BTreeSet<_> = m
        .order4_subgroups()
        .into_iter()
        .filter(|g| !m.is_isotropic(g))
        .collect();
    Ok((images == non_iso && images.len() == 20, format!("{} images", images.len())))
}

fn moduli(c: &mut Collector) {
    for d in [2, 3, 4] {
        c.push(format!("invariant of C_(1,c) over F_{}", 3u64.pow(d)), keystone_sweep(d));
    }
    c.push("fiber degree 20", fiber_degree_check());
    c.push(
        "subgroup census",
        Ok({
            let s = subgroup_census();
            (s == (35, 15, 20), format!("{s:?}"))
        }),
    );
    c.push("cubic factors to subgroups", kappa_check());
}

fn psl2(c: &mut Collector) {
    for r in [3u64, 9] {
        c.push(
            format!("F invariant under PSL_2(F_{r})"),
            check_invariance(r).map(|ok| (ok, String::new())),
        );
        c.push(
            format!("deg F for r = {r}"),
            build_f(r).map(|f| (f.degree() as u64 == crate::psl2::psl2_order(r), format!("{}", f.degree()))),
        );
        c.push(
            format!("no order-6 elements in PSL_2(F_{r})"),
            psl2_order_census(r).map(|h| (!h.contains_key(&6), format!("{h:?}"))),
        );
    }
    c.push(
        "separability for e in F_9^*",
        make_field(2).and_then(|f9| {
            for e in f9.nonzero_elements() {
                if !check_separability(3, e)? {
                    return Ok((false, format!("e = {e}")));
                }
            }
            Ok((true, String::new()))
        }),
    );
    for (r, q) in [(3, 9), (3, 27), (9, 81)] {
        c.push(
            format!("trace lemma (r, q) = ({r}, {q})"),
            hat_rabbit_even(r, q).map(|rep| (rep.holds && rep.checked > 0, format!("{} elements", rep.checked))),
        );
    }
    for (r, q) in [(3, 9), (3, 27)] {
        c.push(
            format!("splitting lemma (r, Q) = ({r}, {q})"),
            hat_rabbit_even_bis(r, q).map(|rep| (rep.holds && rep.checked > 0, format!("{} elements", rep.checked))),
        );
    }
    c.push(
        "odd lemma q = 27",
        hat_rabbit_odd(27).map(|rep| {
            (
                rep.report.holds && rep.report.checked > 0,
                format!("{} elements ({} plus, {} minus)", rep.report.checked, rep.plus, rep.minus),
            )
        }),
    );
    c.push(
        "rho-bar rho has order 3",
        rho_normal_forms().map(|rs| (rs.iter().all(|r| r.conjugate().mul(r).order() == 3), String::new())),
    );
}

/// Census equality, exclusions by absence, and verified constructions.
pub fn census_checks(q: i64, opts: &VerifyOptions) -> Result<Vec<(String, bool, String)>> {
    let rep = weil_census(
        q,
        CensusOptions {
            jobs: opts.jobs.max(1),
            allow_q81: true,
        },
    )?;
    let mut out = vec![(
        format!("census F_{q}"),
        rep.pass(),
        format!("{} curves, {} quartics", rep.curves_scanned, rep.observed.len()),
    )];
    let missing: BTreeSet<WeilQuartic> = lemma_ssas_list(q)?
        .difference(&theorem1_list(q)?)
        .copied()
        .collect();
    let present: Vec<_> = missing.intersection(&rep.observed).collect();
    out.push((
        format!("exclusions F_{q}"),
        present.is_empty(),
        format!("{} excluded quartics absent", missing.len()),
    ));
    if q <= 27 {
        let mut bad = Vec::new();
        for w in theorem1_list(q)? {
            match construct_curve_with_weil(q, &w) {
                Ok(_) => {}
                Err(e) => bad.push(format!("{w}: {e}")),
            }
        }
        out.push((format!("constructions F_{q}"), bad.is_empty(), bad.join("; ")));
    }
    Ok(out)
}

fn census(c: &mut Collector, opts: &VerifyOptions) {
    let mut qs = vec![3, 9, 27];
    if opts.q81 {
        qs.push(81);
    }
    for q in qs {
        match census_checks(q, opts) {
            Ok(rows) => {
                for (name, pass, detail) in rows {
                    c.push(name, Ok((pass, detail)));
                }
            }
            Err(e) => c.push(format!("census F_{q}"), Err(e)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    #[cfg(not(feature = "inject-fault"))]
    fn all_suites_pass() {
        for s in Suite::ALL {
            let rep = run_suite(s, &VerifyOptions::default());
            let failed: Vec<_> = rep.checks.iter().filter(|c| !c.pass).collect();
            assert!(rep.pass, "{s}: {failed:?}");
        }
    }

    #[test]
    fn runtime_fault_is_caught() {
        let rep = run_suite(
            Suite::Tables,
            &VerifyOptions {
                inject_fault: true,
                ..Default::default()
            },
        );
        assert!(!rep.pass);
    }
}
