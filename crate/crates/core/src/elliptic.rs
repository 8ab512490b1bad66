//! Supersingular curves `y^2 = x^3 - b x + c` and their twist tables.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf3::{abs_trace, chi2, chi4, imaginary_unit, lift, make_field, s_of_b, sqrt, Felt, Field, QuarticChar};
use crate::weil::WeilQuadratic;

/// `y^2 = x^3 - b x + c` with `b != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EllipticCurve {
    b: Felt,
    c: Felt,
}

impl EllipticCurve {
    pub fn new(b: Felt, c: Felt) -> Result<EllipticCurve> {
        b.same_field(&c)?;
        if b.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(EllipticCurve { b, c })
    }

    pub fn b(&self) -> Felt {
        self.b
    }

    pub fn c(&self) -> Felt {
        self.c
    }

    pub fn field(&self) -> &'static Field {
        self.b.field()
    }

    pub fn q(&self) -> i64 {
        self.field().order() as i64
    }

    /// Right-hand side `x^3 - b x + c`.
    pub fn rhs(&self, x: Felt) -> Felt {
        x.cube() - self.b * x + self.c
    }

    /// The same equation over GF(3^ext).
    pub fn lift(&self, ext: u32) -> Result<EllipticCurve> {
        EllipticCurve::new(lift(self.b, ext)?, lift(self.c, ext)?)
    }

    pub fn contains(&self, p: &EllPoint) -> bool {
        match *p {
            EllPoint::Infinity => true,
            EllPoint::Affine(x, y) => {
                x.degree() == self.b.degree() && y.degree() == x.degree() && y.square() == self.rhs(x)
            }
        }
    }

    /// All rational points, infinity first, then by `(x, y)` code.
    pub fn points(&self) -> Vec<EllPoint> {
        let mut out = vec![EllPoint::Infinity];
        for x in self.field().elements() {
            let v = self.rhs(x);
            if let Some(y) = sqrt(v) {
                out.push(EllPoint::Affine(x, y));
                if !y.is_zero() {
                    out.push(EllPoint::Affine(x, -y));
                }
            }
        }
        out
    }

    pub fn neg(&self, p: &EllPoint) -> EllPoint {
        match *p {
            EllPoint::Infinity => EllPoint::Infinity,
            EllPoint::Affine(x, y) => EllPoint::Affine(x, -y),
        }
    }

    /// Chord-and-tangent addition. In characteristic 3 the tangent slope
    /// `(3x^2 - b)/(2y)` is `b/y`.
    pub fn add(&self, p: &EllPoint, q: &EllPoint) -> Result<EllPoint> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::Degenerate("point is not on the curve".into()));
        }
        let (x1, y1, x2, y2) = match (*p, *q) {
            (EllPoint::Infinity, _) => return Ok(*q),
            (_, EllPoint::Infinity) => return Ok(*p),
            (EllPoint::Affine(x1, y1), EllPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let lambda = if x1 != x2 {
            (y2 - y1) / (x2 - x1)
        } else if y1 == -y2 {
            return Ok(EllPoint::Infinity);
        } else {
            self.b / y1
        };
        let x3 = lambda.square() - x1 - x2;
        let y3 = lambda * (x1 - x3) - y1;
        Ok(EllPoint::Affine(x3, y3))
    }

    /// `[n] P` for `n >= 0`.
    pub fn mul(&self, n: u64, p: &EllPoint) -> Result<EllPoint> {
        let mut acc = EllPoint::Infinity;
        let mut base = *p;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            base = self.add(&base, &base)?;
            n >>= 1;
        }
        Ok(acc)
    }
}

/// A point of an elliptic curve in affine coordinates, or the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EllPoint {
    Infinity,
    Affine(Felt, Felt),
}

/// Rows of the twist tables, named after their cohomology classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TwistLabel {
    One,
    MinusOne,
    Omega,
    MinusOmega,
    Iota,
    MinusIota,
    PmOne,
    OmegaPair,
    MinusOmegaPair,
    IotaOrbit,
}

/// A table row: label, predicted trace of Frobenius, predicted `#Aut`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TwistClass {
    pub label: TwistLabel,
    pub trace: i64,
    pub aut: u32,
}

/// `(-3)^k` for `k >= 0`.
pub fn minus_three_pow(k: u32) -> i64 {
    (-3i64).pow(k)
}

/// Looks up the row of the twist tables containing `E`.
///
/// Odd degree: branch on `chi2(b)` and `Tr(c / s(b)^3)`. Even degree:
/// branch on `chi4(b)` and `Tr(c / b^(3/2))`; the latter does not depend
/// on the square root chosen since the trace is linear.
pub fn classify_twist(e: &EllipticCurve) -> TwistClass {
    let d = e.field().degree();
    let (b, c) = (e.b, e.c);
    let row = |label, trace, aut| TwistClass { label, trace, aut };
    let class = if d % 2 == 1 {
        let big = minus_three_pow(d.div_ceil(2));
        if chi2(b) == Ok(-1) {
            row(TwistLabel::IotaOrbit, 0, 2)
        } else {
            let s = s_of_b(b).expect("odd degree, b != 0");
            match abs_trace(c / s.cube()) {
                0 => row(TwistLabel::PmOne, 0, 6),
                1 => row(TwistLabel::OmegaPair, big, 6),
                _ => row(TwistLabel::MinusOmegaPair, -big, 6),
            }
        }
    } else {
        let big = minus_three_pow(d / 2);
        let chi = chi4(b).expect("even degree, b != 0");
        let tr = || {
            let root = sqrt(b).expect("b is a square when chi4(b) = +-1");
            abs_trace(c / root.cube())
        };
        match chi {
            QuarticChar::One if tr() == 0 => row(TwistLabel::One, 2 * big, 12),
            QuarticChar::One => row(TwistLabel::Omega, -big, 6),
            QuarticChar::MinusOne if tr() == 0 => row(TwistLabel::MinusOne, -2 * big, 12),
            QuarticChar::MinusOne => row(TwistLabel::MinusOmega, big, 6),
            QuarticChar::I => row(TwistLabel::MinusIota, 0, 4),
            QuarticChar::MinusI => row(TwistLabel::Iota, 0, 4),
        }
    };
    if cfg!(feature = "inject-fault") && class.label == TwistLabel::OmegaPair {
        return TwistClass {
            trace: -class.trace,
            ..class
        };
    }
    class
}

/// `#E(F_{3^ext})`.
pub fn ell_count(e: &EllipticCurve, ext: u32) -> Result<u64> {
    let big = make_field(ext)?;
    let (b, c) = (lift(e.b, ext)?.code(), lift(e.c, ext)?.code());
    let mut total = 1u64;
    for x in 0..big.order() {
        let x3 = big.frobenius_code(x, 1);
        let v = big.add_codes(big.sub_codes(x3, big.mul_codes(b, x)), c);
        total += if v == 0 {
            1
        } else if big.is_nonzero_square_code(v) {
            2
        } else {
            0
        };
    }
    Ok(total)
}

/// Counted Weil polynomial, checked against the table prediction.
pub fn ell_weil(e: &EllipticCurve) -> Result<WeilQuadratic> {
    let q = e.q();
    let n = ell_count(e, e.field().degree())? as i64;
    let t = q + 1 - n;
    let predicted = classify_twist(e);
    if predicted.trace != t {
        return Err(Error::PredictionMismatch(format!(
            "y^2 = x^3 - ({})x + ({}) over F_{q}: counted trace {t}, table {:?} predicts {}",
            e.b, e.c, predicted.label, predicted.trace
        )));
    }
    WeilQuadratic::new(t, q)
}

/// Number of substitutions `x -> u^2 x + r`, `y -> u^3 y` over F_q that
/// preserve the equation.
pub fn aut_order_rational(e: &EllipticCurve) -> u32 {
    let f = e.field();
    let units: Vec<Felt> = f.nonzero_elements().filter(|u| u.pow(4).is_one()).collect();
    let mut count = 0;
    for u in units {
        let u6 = u.pow(6);
        for r in f.elements() {
            if r.cube() - e.b * r + e.c == u6 * e.c {
                count += 1;
            }
        }
    }
    count
}

/// Checks the endomorphism relations of `y^2 = x^3 - x` pointwise on its
/// points over GF(3^d), d even:
/// `ιω = ω²ι`, `ιπ = -πι`, `ωπ = πω`, `π = 1 + 2ω`,
/// with `ι(x, y) = (-x, iy)`, `ω(x, y) = (x - 1, y)`, `π(x, y) = (x^3, y^3)`.
pub fn verify_endo_relations(d: u32) -> Result<bool> {
    let i = imaginary_unit(d)?;
    let f = make_field(d)?;
    let e = EllipticCurve::new(f.one(), f.zero())?;
    let iota = |p: &EllPoint| match *p {
        EllPoint::Infinity => EllPoint::Infinity,
        EllPoint::Affine(x, y) => EllPoint::Affine(-x, i * y),
    };
    let omega = |p: &EllPoint| match *p {
        EllPoint::Infinity => EllPoint::Infinity,
        EllPoint::Affine(x, y) => EllPoint::Affine(x - f.one(), y),
    };
    let pi = |p: &EllPoint| match *p {
        EllPoint::Infinity => EllPoint::Infinity,
        EllPoint::Affine(x, y) => EllPoint::Affine(x.cube(), y.cube()),
    };
    for p in e.points() {
        let ok = iota(&omega(&p)) == omega(&omega(&iota(&p)))
            && iota(&pi(&p)) == e.neg(&pi(&iota(&p)))
            && omega(&pi(&p)) == pi(&omega(&p))
            && pi(&p) == e.add(&p, &e.mul(2, &omega(&p))?)?
            && iota(&iota(&p)) == e.neg(&p)
            && omega(&omega(&omega(&p))) == p;
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
