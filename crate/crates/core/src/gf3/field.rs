use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::OnceLock;

use super::prime_poly::{self, code_to_digits, digits_to_code};
use crate::error::{Error, Result};

/// Largest supported extension degree: F_{3^12} has 531441 elements.
pub const MAX_DEGREE: u32 = 12;

const NO_LOG: u32 = u32::MAX;

/// The canonical model of GF(3^d).
///
/// Elements are identified with their *code*: the base-3 integer whose
/// digits (constant coefficient least significant) are the power-basis
/// coordinates modulo [`Field::modulus`]. Multiplication and addition go
/// through discrete-log and Zech-log tables built once per degree.
pub struct Field {
    degree: u8,
    order: u32,
    modulus: Vec<u8>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

static FIELDS: [OnceLock<Field>; MAX_DEGREE as usize + 1] =
    [const { OnceLock::new() }; MAX_DEGREE as usize + 1];

/// Returns the canonical field GF(3^d), building its tables on first use.
///
/// The modulus is the monic irreducible of degree `d` with the smallest
/// code (coefficients read as a base-3 integer, constant digit least
/// significant), so the same field is produced on every run.
pub fn make_field(d: u32) -> Result<&'static Field> {
    if d == 0 || d > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(d));
    }
    Ok(FIELDS[d as usize].get_or_init(|| Field::build(d as u8)))
}

pub(crate) fn field_of(degree: u8) -> &'static Field {
    make_field(degree as u32).expect("Felt carries a valid degree")
}

/// Degree `d` with `q = 3^d`, or an error if `q` is not a power of 3 in range.
pub fn degree_of_order(q: u64) -> Result<u32> {
    let mut d = 0;
    let mut v = q;
    while v > 1 && v.is_multiple_of(3) {
        v /= 3;
        d += 1;
    }
    if v != 1 || d == 0 {
        return Err(Error::NotPowerOfThree(q as i64));
    }
    if d > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(d));
    }
    Ok(d)
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    fn build(degree: u8) -> Field {
        let d = degree as usize;
        let order = 3u32.pow(degree as u32);

        let modulus = (0..order)
            .map(|low| {
                let mut m = code_to_digits(low, d);
                m.push(1);
                m
            })
            .find(|m| prime_poly::is_irreducible(m))
            .expect("an irreducible polynomial exists in every degree");

        let slow_pow = |base: &[u8], mut e: u32| {
            let mut acc = vec![1u8];
            let mut b = base.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = prime_poly::mul_mod(&acc, &b, &modulus);
                }
                b = prime_poly::mul_mod(&b, &b, &modulus);
                e >>= 1;
            }
            acc
        };
        let group = order - 1;
        let primes = prime_factors(group);
        let generator = (2..order)
            .find(|&g| {
                let gd = prime_poly::trim(code_to_digits(g, d));
                primes.iter().all(|&p| slow_pow(&gd, group / p) != [1u8])
            })
            .unwrap_or(2);

        let mut exp = vec![0u32; 2 * group as usize];
        let mut log = vec![NO_LOG; order as usize];
        let gdig = prime_poly::trim(code_to_digits(generator, d));
        let mut cur = vec![1u8];
        for k in 0..group {
            let mut padded = cur.clone();
            padded.resize(d, 0);
            let code = digits_to_code(&padded);
            exp[k as usize] = code;
            exp[(k + group) as usize] = code;
            log[code as usize] = k;
            cur = prime_poly::mul_mod(&cur, &gdig, &modulus);
        }

        // zech[n] = log(1 + g^n): bump the constant digit of g^n.
        let zech = (0..group)
            .map(|n| {
                let e = exp[n as usize];
                let c0 = e % 3;
                let bumped = e - c0 + (c0 + 1) % 3;
                if bumped == 0 {
                    NO_LOG
                } else {
                    log[bumped as usize]
                }
            })
            .collect();

        Field {
            degree,
            order,
            modulus,
            generator,
            exp,
            log,
            zech,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    /// Cardinality q = 3^d.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Monic defining polynomial, constant coefficient first (length d + 1).
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// Smallest-code primitive element.
    pub fn generator(&self) -> Felt {
        self.element(self.generator)
    }

    pub fn element(&self, code: u32) -> Felt {
        assert!(code < self.order, "code {code} out of range for GF({})", self.order);
        Felt {
            degree: self.degree,
            code,
        }
    }

    pub fn zero(&self) -> Felt {
        self.element(0)
    }

    pub fn one(&self) -> Felt {
        self.element(1)
    }

    /// Image of an integer under Z -> F_3 -> this field.
    pub fn from_int(&self, n: i64) -> Felt {
        self.element(n.rem_euclid(3) as u32)
    }

    pub fn from_digits(&self, digits: &[u8]) -> Result<Felt> {
        if digits.len() != self.degree as usize || digits.iter().any(|&c| c > 2) {
            return Err(Error::BadEncoding(format!("{digits:?}")));
        }
        Ok(self.element(digits_to_code(digits)))
    }

    /// Parses the d-character digit string of an element of this field.
    pub fn parse(&self, s: &str) -> Result<Felt> {
        let x: Felt = s.parse()?;
        if x.degree != self.degree {
            return Err(Error::BadEncoding(format!(
                "{s:?} has {} digits, field degree is {}",
                s.len(),
                self.degree
            )));
        }
        Ok(x)
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Felt> + '_ {
        (0..self.order).map(move |c| self.element(c))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Felt> + '_ {
        (1..self.order).map(move |c| self.element(c))
    }

    // Raw code-level arithmetic for hot loops.

    #[inline]
    pub fn add_codes(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let group = self.order - 1;
        let la = self.log[a as usize];
        let lb = self.log[b as usize];
        let n = if lb >= la { lb - la } else { lb + group - la };
        let z = self.zech[n as usize];
        if z == NO_LOG {
            0
        } else {
            self.exp[(la + z) as usize]
        }
    }

    #[inline]
    pub fn neg_codes(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + (self.order - 1) / 2) as usize]
        }
    }

    #[inline]
    pub fn sub_codes(&self, a: u32, b: u32) -> u32 {
        self.add_codes(a, self.neg_codes(b))
    }

    #[inline]
    pub fn mul_codes(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    #[inline]
    pub fn inv_codes(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else {
            let l = self.log[a as usize];
            Some(self.exp[((self.order - 1 - l) % (self.order - 1)) as usize])
        }
    }

    /// True iff `a` is a nonzero square.
    #[inline]
    pub fn is_nonzero_square_code(&self, a: u32) -> bool {
        a != 0 && self.log[a as usize] & 1 == 0
    }

    /// Discrete logarithm to the base [`Field::generator`].
    pub fn log_of(&self, x: Felt) -> Option<u32> {
        self.check(x);
        (x.code != 0).then(|| self.log[x.code as usize])
    }

    pub fn exp_of(&self, k: u64) -> Felt {
        self.element(self.exp[(k % (self.order as u64 - 1)) as usize])
    }

    /// x^(3^k) computed through the log table.
    #[inline]
    pub fn frobenius_code(&self, a: u32, k: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        let group = (self.order - 1) as u64;
        let mut l = self.log[a as usize] as u64;
        for _ in 0..(k % self.degree as u32) {
            l = l * 3 % group;
        }
        self.exp[l as usize]
    }

    fn check(&self, x: Felt) {
        assert_eq!(
            x.degree, self.degree,
            "element of GF(3^{}) used with GF(3^{})",
            x.degree, self.degree
        );
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// An element of one of the canonical fields GF(3^d).
///
/// Since there is exactly one field per degree, the degree tag identifies
/// the field. Arithmetic between elements of different fields panics; use
/// [`Felt::same_field`] to check beforehand when operands come from input.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Felt {
    degree: u8,
    code: u32,
}

impl Felt {
    pub fn field(&self) -> &'static Field {
        field_of(self.degree)
    }

    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    /// Base-3 code; also the ordering used for every deterministic tie-break.
    pub fn code(&self) -> u32 {
        self.code
    }

    /// Power-basis coordinates, constant coefficient first.
    pub fn digits(&self) -> Vec<u8> {
        code_to_digits(self.code, self.degree as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    pub fn is_one(&self) -> bool {
        self.code == 1
    }

    pub fn same_field(&self, other: &Felt) -> Result<()> {
        if self.degree == other.degree {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.degree, other.degree))
        }
    }

    pub fn inv(&self) -> Result<Felt> {
        let f = self.field();
        f.inv_codes(self.code)
            .map(|c| f.element(c))
            .ok_or(Error::DivisionByZero)
    }

    pub fn checked_div(&self, rhs: Felt) -> Result<Felt> {
        self.same_field(&rhs)?;
        Ok(*self * rhs.inv()?)
    }

    /// Square-and-multiply power with an exact exponent; `0^0 = 1`.
    pub fn pow(&self, mut e: u64) -> Felt {
        let mut acc = self.field().one();
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// Power with a signed exponent; negative exponents need a unit.
    pub fn pow_signed(&self, e: i64) -> Result<Felt> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    pub fn square(&self) -> Felt {
        *self * *self
    }

    pub fn cube(&self) -> Felt {
        self.frobenius(1)
    }

    /// x^(3^k).
    pub fn frobenius(&self, k: u32) -> Felt {
        let f = self.field();
        f.element(f.frobenius_code(self.code, k))
    }
}

impl fmt::Display for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.digits() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the digit encoding; the string length fixes the field degree.
impl FromStr for Felt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Felt> {
        let len = s.len() as u32;
        if len == 0 || len > MAX_DEGREE {
            return Err(Error::BadEncoding(s.to_string()));
        }
        let digits: Vec<u8> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(Error::BadEncoding(s.to_string())),
            })
            .collect::<Result<_>>()?;
        make_field(len)?.from_digits(&digits)
    }
}

impl serde::Serialize for Felt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $codes:ident) => {
        impl $tr for Felt {
            type Output = Felt;
            #[inline]
            fn $method(self, rhs: Felt) -> Felt {
                let f = field_of(self.degree);
                f.check(rhs);
                Felt {
                    degree: self.degree,
                    code: f.$codes(self.code, rhs.code),
                }
            }
        }
    };
}

binop!(Add, add, add_codes);
binop!(Sub, sub, sub_codes);
binop!(Mul, mul, mul_codes);

impl Div for Felt {
    type Output = Felt;
    /// Panics on a zero divisor, like integer division.
    fn div(self, rhs: Felt) -> Felt {
        self.checked_div(rhs).expect("division by zero field element")
    }
}

impl Neg for Felt {
    type Output = Felt;
    #[inline]
    fn neg(self) -> Felt {
        Felt {
            degree: self.degree,
            code: field_of(self.degree).neg_codes(self.code),
        }
    }
}

impl AddAssign for Felt {
    fn add_assign(&mut self, rhs: Felt) {
        *self = *self + rhs;
    }
}

impl SubAssign for Felt {
    fn sub_assign(&mut self, rhs: Felt) {
        *self = *self - rhs;
    }
}

impl MulAssign for Felt {
    fn mul_assign(&mut self, rhs: Felt) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field() {
        let f3 = make_field(1).unwrap();
        assert_eq!(f3.modulus(), &[0, 1]);
        let two = f3.element(2);
        assert_eq!(two + two, f3.one());
        assert_eq!(two * two, f3.one());
        assert_eq!(-f3.one(), two);
    }

    #[test]
    fn degree_range() {
        assert_eq!(make_field(0).unwrap_err(), Error::DegreeOutOfRange(0));
        assert_eq!(make_field(13).unwrap_err(), Error::DegreeOutOfRange(13));
        assert!(std::ptr::eq(make_field(3).unwrap(), make_field(3).unwrap()));
    }

    #[test]
    fn f9_modulus_is_smallest_irreducible_quadratic() {
        // scan the 9 monic quadratics in code order: x^2 + 1 is the first irreducible
        let f9 = make_field(2).unwrap();
        let first = (0..9u32)
            .map(|low| {
                let mut m = code_to_digits(low, 2);
                m.push(1);
                m
            })
            .find(|m| {
                // brute force: no root among 0, 1, 2
                (0..3u32).all(|x| !(m[0] as u32 + m[1] as u32 * x + x * x).is_multiple_of(3))
            })
            .unwrap();
        assert_eq!(f9.modulus(), first.as_slice());
        assert_eq!(f9.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn f81_has_order_eight_elements() {
        let f = make_field(4).unwrap();
        assert_eq!((f.order() - 1) % 8, 0);
        let x = f
            .nonzero_elements()
            .find(|x| x.pow(8).is_one() && !x.pow(4).is_one())
            .unwrap();
        assert!(x.pow(4) == -f.one());
    }

    #[test]
    fn inverses_in_f9() {
        let f9 = make_field(2).unwrap();
        for x in f9.nonzero_elements() {
            assert!((x * x.inv().unwrap()).is_one());
            assert_eq!(f9.one() * x, x);
        }
        assert_eq!(f9.zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn frobenius_closes_orbit() {
        for d in 1..=6 {
            let f = make_field(d).unwrap();
            for x in f.elements() {
                assert_eq!(x.frobenius(d), x);
                assert_eq!(x.frobenius(0), x);
                assert_eq!(x.frobenius(1), x * x * x);
            }
        }
    }

    #[test]
    fn encoding_round_trip() {
        let g: Felt = "01".parse().unwrap();
        assert_eq!(g.degree(), 2);
        assert_eq!(g.code(), 3);
        assert_eq!(g.to_string(), "01");
        assert!("0a".parse::<Felt>().is_err());
        assert!("".parse::<Felt>().is_err());
        let f27 = make_field(3).unwrap();
        assert!(f27.parse("01").is_err());
    }

    #[test]
    #[should_panic(expected = "used with")]
    fn mixed_fields_panic() {
        let a = make_field(1).unwrap().one();
        let b = make_field(2).unwrap().one();
        let _ = a + b;
    }

    #[test]
    fn mixed_fields_checked() {
        let a = make_field(1).unwrap().one();
        let b = make_field(2).unwrap().one();
        assert_eq!(a.checked_div(b).unwrap_err(), Error::FieldMismatch(1, 2));
    }

    #[test]
    fn order_parsing() {
        assert_eq!(degree_of_order(81).unwrap(), 4);
        assert!(degree_of_order(10).is_err());
        assert!(degree_of_order(1).is_err());
    }
}
