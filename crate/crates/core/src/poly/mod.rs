//! Dense univariate polynomials over the canonical fields.

mod cubic;
mod disc;
mod factor;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf3::{lift, make_field, Felt, Field};

pub use cubic::{cubic_factor_pairs, CubicPair};
pub use disc::{discriminant, resultant};
pub use factor::{
    factor, is_irreducible, pellet_parity, roots_in, splitting_degree, squarefree_decomposition,
    Factorization,
};

/// A polynomial with coefficients in GF(3^d), constant term first.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial
/// is the empty vector and `degree()` is `None` exactly for it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly {
    field_degree: u8,
    coeffs: Vec<Felt>,
}

impl UniPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Felt>) -> UniPoly {
        let d = field.degree();
        assert!(
            coeffs.iter().all(|c| c.degree() == d),
            "coefficient outside GF(3^{d})"
        );
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly {
            field_degree: d as u8,
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> UniPoly {
        UniPoly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> UniPoly {
        UniPoly::constant(field.one())
    }

    pub fn constant(c: Felt) -> UniPoly {
        UniPoly::new(c.field(), vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: &Field) -> UniPoly {
        UniPoly::monomial(field.one(), 1)
    }

    /// `c * x^n`.
    pub fn monomial(c: Felt, n: usize) -> UniPoly {
        let f = c.field();
        let mut coeffs = vec![f.zero(); n + 1];
        coeffs[n] = c;
        UniPoly::new(f, coeffs)
    }

    /// Builds a polynomial from integer coefficients reduced mod 3.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> UniPoly {
        UniPoly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    /// `(x - r_1)...(x - r_n)`.
    pub fn from_roots(field: &Field, roots: &[Felt]) -> UniPoly {
        roots.iter().fold(UniPoly::one(field), |acc, &r| {
            acc * UniPoly::new(field, vec![-r, field.one()])
        })
    }

    pub fn field(&self) -> &'static Field {
        make_field(self.field_degree as u32).expect("valid field degree")
    }

    pub fn field_degree(&self) -> u32 {
        self.field_degree as u32
    }

    pub fn coeffs(&self) -> &[Felt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Felt {
        self.coeffs
            .get(i)
            .copied()
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> Felt {
        self.coeffs
            .last()
            .copied()
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn eval(&self, x: Felt) -> Felt {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field().zero(), |acc, &c| acc * x + c)
    }

    pub fn scale(&self, c: Felt) -> UniPoly {
        UniPoly::new(self.field(), self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> UniPoly {
        match self.lc().inv() {
            Ok(inv) => self.scale(inv),
            Err(_) => self.clone(),
        }
    }

    pub fn divmod(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let f = self.field();
        let inv = divisor.lc().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(f), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] * inv;
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= c * dc;
            }
        }
        rem.truncate(dd);
        Ok((UniPoly::new(f, quot), UniPoly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divmod(divisor)?;
        if !r.is_zero() {
            return Err(Error::Degenerate("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        assert_eq!(self.field_degree, other.field_degree, "gcd across fields");
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Formal derivative (characteristic 3: multiples of x^{3k-1} vanish).
    pub fn derivative(&self) -> UniPoly {
        let f = self.field();
        UniPoly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * f.from_int(i as i64))
                .collect(),
        )
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        let f = self.field();
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(f), |acc, &c| &(&acc * g) + &UniPoly::constant(c))
    }

    pub fn pow(&self, mut e: u64) -> UniPoly {
        let mut acc = UniPoly::one(self.field());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^3`, computed coefficientwise since cubing is additive here.
    pub fn cube(&self) -> UniPoly {
        let f = self.field();
        let mut coeffs = vec![f.zero(); 3 * self.coeffs.len().saturating_sub(1) + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[3 * i] = c.cube();
        }
        UniPoly::new(f, coeffs)
    }

    /// `self^(3^k) mod m`.
    pub fn frobenius_mod(&self, k: u32, m: &UniPoly) -> Result<UniPoly> {
        let mut p = self.rem(m)?;
        for _ in 0..k {
            p = p.cube().rem(m)?;
        }
        Ok(p)
    }

    /// The polynomial with every coefficient mapped into GF(3^dst).
    pub fn lift(&self, dst: u32) -> Result<UniPoly> {
        let f = make_field(dst)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| lift(c, dst))
            .collect::<Result<_>>()?;
        Ok(UniPoly::new(f, coeffs))
    }

    /// Applies `map` to every coefficient, landing in `target`.
    pub fn map_coeffs(&self, target: &Field, map: impl Fn(Felt) -> Felt) -> UniPoly {
        UniPoly::new(target, self.coeffs.iter().map(|&c| map(c)).collect())
    }

    pub fn is_separable(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative()).is_one())
    }

    fn check(&self, other: &UniPoly) -> Result<()> {
        if self.field_degree == other.field_degree {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field_degree, other.field_degree))
        }
    }

    /// Parses the comma-separated encoding over the given field.
    pub fn parse(field: &Field, s: &str) -> Result<UniPoly> {
        let coeffs = s
            .split(',')
            .map(|t| field.parse(t.trim()))
            .collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(field, coeffs))
    }
}

/// Comma-separated coefficient encodings, constant first; zero is "" .
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Parses the comma-separated encoding; the field comes from the digit count.
impl FromStr for UniPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<UniPoly> {
        let first = s.split(',').next().unwrap_or("").trim();
        let f = make_field(first.len() as u32).map_err(|_| Error::BadEncoding(s.to_string()))?;
        UniPoly::parse(f, s)
    }
}

impl serde::Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.check(rhs).expect("polynomials over one field");
        let f = self.field();
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(f, (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.field(), self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.check(rhs).expect("polynomials over one field");
        let f = self.field();
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(f);
        }
        let mut out = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let p = f.mul_codes(a.code(), b.code());
                out[i + j] = f.add_codes(out[i + j], p);
            }
        }
        UniPoly::new(f, out.into_iter().map(|c| f.element(c)).collect())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}
