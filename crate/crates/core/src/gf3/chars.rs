use serde::Serialize;

use super::embed::lift;
use super::field::{make_field, Felt, Field};
use crate::error::{Error, Result};

/// Absolute trace to F_3, returned as a digit in {0, 1, 2}.
pub fn abs_trace(x: Felt) -> u8 {
    let mut acc = x;
    let mut y = x;
    for _ in 1..x.degree() {
        y = y.cube();
        acc += y;
    }
    debug_assert!(acc.code() < 3);
    acc.code() as u8
}

/// Quadratic character: +1 on nonzero squares, -1 on nonsquares.
pub fn chi2(x: Felt) -> Result<i8> {
    if x.is_zero() {
        return Err(Error::ZeroArgument);
    }
    Ok(if x.field().is_nonzero_square_code(x.code()) {
        1
    } else {
        -1
    })
}

/// Values of the quartic character, relative to the fixed `i` of
/// [`imaginary_unit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum QuarticChar {
    One,
    MinusOne,
    I,
    MinusI,
}

impl QuarticChar {
    pub fn square(self) -> i8 {
        match self {
            QuarticChar::One | QuarticChar::MinusOne => 1,
            QuarticChar::I | QuarticChar::MinusI => -1,
        }
    }
}

/// x^((q-1)/4) for fields of even degree.
pub fn chi4(x: Felt) -> Result<QuarticChar> {
    let d = x.degree();
    if d % 2 == 1 {
        return Err(Error::DegreeParity {
            expected: "even",
            degree: d as u8,
        });
    }
    if x.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let f = x.field();
    let v = x.pow(((f.order() - 1) / 4) as u64);
    let i = imaginary_unit(d)?;
    Ok(if v.is_one() {
        QuarticChar::One
    } else if v == -f.one() {
        QuarticChar::MinusOne
    } else if v == i {
        QuarticChar::I
    } else {
        debug_assert_eq!(v, -i);
        QuarticChar::MinusI
    })
}

/// Square root with the smaller code, or `None` for nonsquares.
pub fn sqrt(x: Felt) -> Option<Felt> {
    if x.is_zero() {
        return Some(x);
    }
    let f = x.field();
    let l = f.log_of(x)?;
    if l % 2 == 1 {
        return None;
    }
    let r = f.exp_of((l / 2) as u64);
    Some(r.min(-r))
}

/// The canonical square root of -1 in a field of even degree: the smaller
/// root in F_9, carried up by the canonical embedding.
pub fn imaginary_unit(d: u32) -> Result<Felt> {
    if d % 2 == 1 {
        return Err(Error::DegreeParity {
            expected: "even",
            degree: d as u8,
        });
    }
    let f9 = make_field(2)?;
    let i9 = sqrt(-f9.one()).expect("-1 is a square in F_9");
    lift(i9, d)
}

/// s(b) = b^((3-q)/4) for odd degree.
pub fn s_of_b(b: Felt) -> Result<Felt> {
    let d = b.degree();
    if d.is_multiple_of(2) {
        return Err(Error::DegreeParity {
            expected: "odd",
            degree: d as u8,
        });
    }
    let q = b.field().order() as i64;
    b.pow_signed((3 - q) / 4)
}

/// The nonsquare with the smallest code.
pub fn nonsquare(f: &Field) -> Felt {
    f.nonzero_elements()
        .find(|x| chi2(*x) == Ok(-1))
        .expect("odd-order fields contain nonsquares")
}
