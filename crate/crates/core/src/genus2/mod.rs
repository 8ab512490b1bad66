//! Genus-2 curves `d y^2 = f(x)` with `deg f` in {5, 6}.

mod count;
mod igusa;
mod invariant;
mod reduce;
mod yui;

use std::fmt;

use serde::ser::SerializeStruct;

use crate::error::{Error, Result};
use crate::gf3::{nonsquare, Felt, Field};
use crate::poly::UniPoly;

pub use count::{count_points, weil_from_counts, weil_polynomial, ReducedCounter};
pub use igusa::{igusa_general, igusa_reduced, IgusaVector};
pub use invariant::{curve_from_invariant, geometric_aut_order, invariant_i};
pub use reduce::{reduce_to_standard_form, sextic_model, Mobius, Reduction};
pub use yui::{is_superspecial, yui_is_supersingular, yui_matrix};

/// The hyperelliptic model `twist * y^2 = f(x)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Genus2Curve {
    twist: Felt,
    f: UniPoly,
}

impl Genus2Curve {
    /// Validates the model: nonzero twist, degree 5 or 6, separable.
    pub fn new(twist: Felt, f: UniPoly) -> Result<Genus2Curve> {
        if twist.is_zero() {
            return Err(Error::ZeroArgument);
        }
        if twist.degree() != f.field_degree() {
            return Err(Error::FieldMismatch(twist.degree() as u8, f.field_degree() as u8));
        }
        match f.degree() {
            Some(5) | Some(6) => {}
            other => {
                return Err(Error::WrongDegree {
                    expected: "5 or 6",
                    found: other.unwrap_or(0),
                })
            }
        }
        if !f.is_separable()? {
            return Err(Error::Inseparable);
        }
        Ok(Genus2Curve { twist, f })
    }

    /// `y^2 = f(x)`.
    pub fn untwisted(f: UniPoly) -> Result<Genus2Curve> {
        Genus2Curve::new(f.field().one(), f)
    }

    pub fn twist(&self) -> Felt {
        self.twist
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn field(&self) -> &'static Field {
        self.f.field()
    }

    pub fn q(&self) -> i64 {
        self.field().order() as i64
    }

    pub fn degree(&self) -> usize {
        self.f.degree().expect("validated at construction")
    }

    /// The same model over GF(3^ext).
    pub fn lift(&self, ext: u32) -> Result<Genus2Curve> {
        Ok(Genus2Curve {
            twist: crate::gf3::lift(self.twist, ext)?,
            f: self.f.lift(ext)?,
        })
    }

    /// The quadratic twist by the canonical nonsquare.
    pub fn quadratic_twist(&self) -> Genus2Curve {
        Genus2Curve {
            twist: self.twist * nonsquare(self.field()),
            f: self.f.clone(),
        }
    }
}

impl fmt::Debug for Genus2Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * y^2 = [{}]", self.twist, self.f)
    }
}

/// `{"f": ..., "q": ..., "twist": ...}` with felt/poly text encodings.
impl serde::Serialize for Genus2Curve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Genus2Curve", 3)?;
        st.serialize_field("f", &self.f)?;
        st.serialize_field("q", &self.q())?;
        st.serialize_field("twist", &self.twist)?;
        st.end()
    }
}

/// `twist * y^2 = x^6 + c3 x^3 + c1 x + c0` with `c1 != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedSSForm {
    pub c3: Felt,
    pub c1: Felt,
    pub c0: Felt,
    pub twist: Felt,
}

impl ReducedSSForm {
    pub fn new(c3: Felt, c1: Felt, c0: Felt, twist: Felt) -> Result<ReducedSSForm> {
        for x in [c1, c0, twist] {
            c3.same_field(&x)?;
        }
        if c1.is_zero() || twist.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(ReducedSSForm { c3, c1, c0, twist })
    }

    pub fn sextic(&self) -> UniPoly {
        let f = self.c3.field();
        let z = f.zero();
        UniPoly::new(f, vec![self.c0, self.c1, z, self.c3, z, z, f.one()])
    }

    pub fn curve(&self) -> Genus2Curve {
        Genus2Curve {
            twist: self.twist,
            f: self.sextic(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf3::make_field;

    #[test]
    fn validation() {
        let f3 = make_field(1).unwrap();
        let ok = UniPoly::from_ints(f3, &[1, 0, 0, 0, 0, 1]);
        assert!(Genus2Curve::untwisted(ok.clone()).is_ok());
        assert_eq!(Genus2Curve::new(f3.zero(), ok).unwrap_err(), Error::ZeroArgument);
        let insep = UniPoly::from_ints(f3, &[1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(Genus2Curve::untwisted(insep).unwrap_err(), Error::Inseparable);
        let cubic = UniPoly::from_ints(f3, &[1, 1, 0, 1]);
        assert!(matches!(
            Genus2Curve::untwisted(cubic),
            Err(Error::WrongDegree { .. })
        ));
    }

    #[test]
    fn reduced_form_needs_c1() {
        let f9 = make_field(2).unwrap();
        let (z, o) = (f9.zero(), f9.one());
        assert!(ReducedSSForm::new(o, z, o, o).is_err());
        let r = ReducedSSForm::new(z, o, z, o).unwrap();
        assert!(Genus2Curve::new(r.twist, r.sextic()).is_ok());
    }
}
