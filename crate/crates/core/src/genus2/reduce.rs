use super::{yui_is_supersingular, Genus2Curve, ReducedSSForm};
use crate::error::{Error, Result};
use crate::gf3::{chi2, Felt, Field};
use crate::poly::UniPoly;

/// The substitution `x -> (a x + b) / (c x + d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mobius {
    pub a: Felt,
    pub b: Felt,
    pub c: Felt,
    pub d: Felt,
}

impl Mobius {
    pub fn identity(f: &Field) -> Mobius {
        Mobius {
            a: f.one(),
            b: f.zero(),
            c: f.zero(),
            d: f.one(),
        }
    }

    pub fn translate(t: Felt) -> Mobius {
        let f = t.field();
        Mobius {
            a: f.one(),
            b: t,
            c: f.zero(),
            d: f.one(),
        }
    }

    /// `x -> 1/x`.
    pub fn invert(f: &Field) -> Mobius {
        Mobius {
            a: f.zero(),
            b: f.one(),
            c: f.one(),
            d: f.zero(),
        }
    }

    pub fn scale(s: Felt) -> Mobius {
        let f = s.field();
        Mobius {
            a: s,
            b: f.zero(),
            c: f.zero(),
            d: f.one(),
        }
    }

    /// Substituting `self` first and then `then` (matrix product).
    pub fn then(&self, then: &Mobius) -> Mobius {
        Mobius {
            a: self.a * then.a + self.b * then.c,
            b: self.a * then.b + self.b * then.d,
            c: self.c * then.a + self.d * then.c,
            d: self.c * then.b + self.d * then.d,
        }
    }

    /// `(c x + d)^n p((a x + b)/(c x + d))` for `deg p <= n`.
    pub fn pullback(&self, p: &UniPoly, n: usize) -> UniPoly {
        let f = p.field();
        assert!(p.degree().is_none_or(|k| k <= n), "form degree too small");
        let num = UniPoly::new(f, vec![self.b, self.a]);
        let den = UniPoly::new(f, vec![self.d, self.c]);
        let mut out = UniPoly::zero(f);
        for (i, &coef) in p.coeffs().iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let term = &num.pow(i as u64) * &den.pow((n - i) as u64);
            out = &out + &term.scale(coef);
        }
        out
    }
}

/// A reduced form together with the change of variables producing it:
/// `form.sextic() = scale * mobius.pullback(f, 6)` and
/// `form.twist = twist * scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub form: ReducedSSForm,
    pub mobius: Mobius,
    pub scale: Felt,
}

fn sextic_substitution(c: &Genus2Curve) -> Result<Mobius> {
    let f = c.field();
    let mut fallback = None;
    for x0 in f.elements() {
        let v = c.twist() * c.f().eval(x0);
        if v.is_zero() {
            continue;
        }
        if chi2(v) == Ok(1) {
            return Ok(Mobius::translate(x0).then(&Mobius::invert(f)));
        }
        fallback.get_or_insert(x0);
    }
    // Without a rational point off the Weierstrass locus any x0 with
    // f(x0) != 0 still gives an isomorphic sextic model.
    fallback
        .map(|x0| Mobius::translate(x0).then(&Mobius::invert(f)))
        .ok_or(Error::NoRationalPoint)
}

/// Degree-6 model of a quintic curve via `x -> x0 + 1/x`, `y -> y/x^3`.
pub fn sextic_model(c: &Genus2Curve) -> Result<Genus2Curve> {
    if c.degree() != 5 {
        return Err(Error::WrongDegree {
            expected: "5",
            found: c.degree(),
        });
    }
    let m = sextic_substitution(c)?;
    Genus2Curve::new(c.twist(), m.pullback(c.f(), 6))
}

/// Brings a supersingular curve to `d y^2 = x^6 + c3 x^3 + c1 x + c0`.
///
/// Moves: normalize the leading coefficient into the twist; if `c5 != 0`,
/// translate by `c4/c5` (which kills `c4`, and supersingularity then
/// forces `c2 = c1 = 0`), then invert `x -> 1/x` and renormalize.
pub fn reduce_to_standard_form(c: &Genus2Curve) -> Result<Reduction> {
    if !yui_is_supersingular(c) {
        return Err(Error::NotSupersingular);
    }
    let field = c.field();
    let mut mobius = if c.degree() == 5 {
        sextic_substitution(c)?
    } else {
        Mobius::identity(field)
    };
    let mut g = mobius.pullback(c.f(), 6);
    let mut scale = g.lc().inv()?;
    g = g.scale(scale);

    if !g.coeff(5).is_zero() {
        let step = Mobius::translate(g.coeff(4) / g.coeff(5));
        g = step.pullback(&g, 6);
        mobius = mobius.then(&step);
        if !(g.coeff(4).is_zero() && g.coeff(2).is_zero() && g.coeff(1).is_zero()) {
            return Err(Error::NotSupersingular);
        }
        let step = Mobius::invert(field);
        g = step.pullback(&g, 6);
        mobius = mobius.then(&step);
        let s = g.lc().inv()?;
        g = g.scale(s);
        scale *= s;
    }
    if !(g.coeff(5).is_zero() && g.coeff(4).is_zero() && g.coeff(2).is_zero()) {
        return Err(Error::NotSupersingular);
    }
    let form = ReducedSSForm::new(g.coeff(3), g.coeff(1), g.coeff(0), c.twist() * scale)
        .map_err(|_| Error::Inseparable)?;
    Ok(Reduction {
        form,
        mobius,
        scale,
    })
}
