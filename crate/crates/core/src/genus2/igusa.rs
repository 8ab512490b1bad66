use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{Genus2Curve, ReducedSSForm};
use crate::error::{Error, Result};
use crate::gf3::{Felt, Field};

/// Igusa invariants `[J2 : J4 : J6 : J8 : J10]`, a point of weighted
/// projective space with weights 2, 4, 6, 8, 10.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IgusaVector {
    pub j: [Felt; 5],
}

impl IgusaVector {
    pub fn new(j: [Felt; 5]) -> IgusaVector {
        IgusaVector { j }
    }

    /// Builds a vector over `field` from integers reduced mod 3.
    pub fn from_ints(field: &Field, j: [i64; 5]) -> IgusaVector {
        IgusaVector {
            j: j.map(|x| field.from_int(x)),
        }
    }

    pub fn j2(&self) -> Felt {
        self.j[0]
    }
    pub fn j4(&self) -> Felt {
        self.j[1]
    }
    pub fn j6(&self) -> Felt {
        self.j[2]
    }
    pub fn j8(&self) -> Felt {
        self.j[3]
    }
    pub fn j10(&self) -> Felt {
        self.j[4]
    }

    /// `[λ^2 J2 : λ^4 J4 : ... : λ^10 J10]`.
    pub fn act(&self, lambda: Felt) -> IgusaVector {
        let mu = lambda * lambda;
        let mut out = self.j;
        for (k, x) in out.iter_mut().enumerate() {
            *x *= mu.pow(k as u64 + 1);
        }
        IgusaVector { j: out }
    }

    /// Equality as points of weighted projective space over the algebraic
    /// closure: some `μ` with `other_k = μ^(k) self_k` for weights 1..5 in
    /// `μ = λ^2`.
    ///
    /// With `r_k = other_k / self_k` on the common support and Bezout
    /// coefficients `Σ e_k w_k = g`, the candidate `ν = Π r_k^(e_k)` equals
    /// `μ^g`; equality holds iff `r_k = ν^(w_k / g)` for all k.
    pub fn weighted_eq(&self, other: &IgusaVector) -> bool {
        if self.j.iter().zip(&other.j).any(|(a, b)| a.is_zero() != b.is_zero()) {
            return false;
        }
        let support: Vec<(i64, Felt)> = (0..5)
            .filter(|&k| !self.j[k].is_zero())
            .map(|k| (k as i64 + 1, other.j[k] / self.j[k]))
            .collect();
        if support.is_empty() {
            return true;
        }
        let mut g = support[0].0;
        let mut coeffs = vec![1i64];
        for &(w, _) in &support[1..] {
            let e = g.extended_gcd(&w);
            coeffs.iter_mut().for_each(|c| *c *= e.x);
            coeffs.push(e.y);
            g = e.gcd;
        }
        let nu = support
            .iter()
            .zip(&coeffs)
            .fold(support[0].1.field().one(), |acc, (&(_, r), &e)| {
                acc * r.pow_signed(e).expect("ratios are nonzero")
            });
        support
            .iter()
            .all(|&(w, r)| nu.pow((w / g) as u64) == r)
    }
}

impl fmt::Display for IgusaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = self.j;
        write!(f, "[{a}:{b}:{c}:{d}:{e}]")
    }
}

impl serde::Serialize for IgusaVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.j.iter().map(|x| x.to_string()))
    }
}

/// `[0 : 0 : c3^6 - c3 c1^3 - c0^3 : 0 : -c1^6]` for the reduced shape.
pub fn igusa_reduced(r: &ReducedSSForm) -> Result<IgusaVector> {
    if r.c1.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let z = r.c1.field().zero();
    let j6 = r.c3.pow(6) - r.c3 * r.c1.cube() - r.c0.cube();
    Ok(IgusaVector::new([z, z, j6, z, -r.c1.pow(6)]))
}

/// Q[α]/(m) with `m` the integer lift of the field modulus.
struct LiftRing {
    modulus: Vec<BigInt>,
}

type Elem = Vec<BigRational>;
type Form = Vec<Elem>;

impl LiftRing {
    fn dim(&self) -> usize {
        self.modulus.len() - 1
    }

    fn zero(&self) -> Elem {
        vec![BigRational::zero(); self.dim()]
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn scale(&self, a: &Elem, c: &BigRational) -> Elem {
        a.iter().map(|x| x * c).collect()
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let n = self.dim();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for k in (n..prod.len()).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (i, m) in self.modulus.iter().enumerate().take(n) {
                prod[k - n + i] -= &c * BigRational::from_integer(m.clone());
            }
        }
        prod.truncate(n);
        prod
    }

    fn form_mul(&self, f: &Form, g: &Form) -> Form {
        let mut out = vec![self.zero(); f.len() + g.len() - 1];
        for (i, a) in f.iter().enumerate() {
            for (j, b) in g.iter().enumerate() {
                out[i + j] = self.add(&out[i + j], &self.mul(a, b));
            }
        }
        out
    }

    /// Partial derivatives of a binary form stored as coefficients of
    /// `x^i z^(n-i)`.
    fn dx(&self, f: &Form) -> Form {
        (1..f.len())
            .map(|i| self.scale(&f[i], &BigRational::from_integer(i.into())))
            .collect()
    }

    fn dz(&self, f: &Form) -> Form {
        let n = f.len() - 1;
        (0..n)
            .map(|i| self.scale(&f[i], &BigRational::from_integer((n - i).into())))
            .collect()
    }

    fn partial(&self, f: &Form, a: usize, b: usize) -> Form {
        let mut g = f.clone();
        for _ in 0..a {
            g = self.dx(&g);
        }
        for _ in 0..b {
            g = self.dz(&g);
        }
        g
    }

    fn transvectant(&self, f: &Form, g: &Form, k: usize) -> Form {
        let (m, n) = (f.len() - 1, g.len() - 1);
        let fact = |x: usize| (1..=x).fold(BigInt::one(), |acc, i| acc * i);
        let norm = BigRational::new(fact(m - k) * fact(n - k), fact(m) * fact(n));
        let mut out = vec![self.zero(); m + n - 2 * k + 1];
        for j in 0..=k {
            let binom = fact(k) / (fact(j) * fact(k - j));
            let sign = if j % 2 == 0 { binom } else { -binom };
            let term = self.form_mul(&self.partial(f, k - j, j), &self.partial(g, j, k - j));
            let c = &norm * BigRational::from_integer(sign);
            for (o, t) in out.iter_mut().zip(&term) {
                *o = self.add(o, &self.scale(t, &c));
            }
        }
        out
    }
}

fn reduce_mod3(field: &Field, e: &Elem) -> Result<Felt> {
    let mut digits = Vec::with_capacity(e.len());
    for r in e {
        let den = r.denom().mod_floor(&BigInt::from(3)).to_i64().unwrap_or(0);
        if den == 0 {
            return Err(Error::Degenerate(format!(
                "invariant {r} has a denominator divisible by 3"
            )));
        }
        let num = r.numer().mod_floor(&BigInt::from(3)).to_i64().unwrap_or(0);
        // 1 and 2 are their own inverses mod 3
        digits.push(((num * den) % 3) as u8);
    }
    field.from_digits(&digits)
}

/// Igusa invariants of an arbitrary model, computed in characteristic 0 on
/// an integral lift of the coefficients and then reduced mod 3.
///
/// The classical Clebsch transvectants of the binary sextic give
/// `I2, I4, I6, I10`; the `J`'s are the standard combinations, whose
/// denominators are powers of 2 and therefore survive reduction.
pub fn igusa_general(c: &Genus2Curve) -> Result<IgusaVector> {
    let field = c.field();
    let ring = LiftRing {
        modulus: field.modulus().iter().map(|&x| BigInt::from(x)).collect(),
    };
    let sextic = c.f().scale(c.twist());
    let form: Form = (0..=6)
        .map(|i| {
            sextic
                .coeff(i)
                .digits()
                .iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();

    let t = |f: &Form, g: &Form, k| ring.transvectant(f, g, k);
    let i = t(&form, &form, 4);
    let delta = t(&i, &i, 2);
    let y1 = t(&form, &i, 4);
    let y2 = t(&i, &y1, 2);
    let y3 = t(&i, &y2, 2);
    let a = t(&form, &form, 6).remove(0);
    let b = t(&i, &i, 4).remove(0);
    let cc = t(&i, &delta, 4).remove(0);
    let d = t(&y3, &y1, 2).remove(0);

    let q = |n: i64| BigRational::from_integer(n.into());
    let lin = |terms: &[(i64, &Elem)]| {
        terms
            .iter()
            .fold(ring.zero(), |acc, (k, e)| ring.add(&acc, &ring.scale(e, &q(*k))))
    };
    let m = |x: &Elem, y: &Elem| ring.mul(x, y);
    let a2 = m(&a, &a);
    let a3 = m(&a2, &a);
    let a5 = m(&a3, &a2);
    let i2 = lin(&[(-120, &a)]);
    let i4 = lin(&[(-720, &a2), (6750, &b)]);
    let i6 = lin(&[(8640, &a3), (-108000, &m(&a, &b)), (202500, &cc)]);
    let i10 = lin(&[
        (-62208, &a5),
        (972000, &m(&a3, &b)),
        (1620000, &m(&a2, &cc)),
        (-3037500, &m(&a, &m(&b, &b))),
        (-6075000, &m(&b, &cc)),
        (-4556250, &d),
    ]);

    let frac = |x: &Elem, n: i64, dnm: i64| ring.scale(x, &BigRational::new(n.into(), dnm.into()));
    let j2 = frac(&i2, 1, 8);
    let j4 = frac(&ring.add(&frac(&m(&j2, &j2), 4, 1), &frac(&i4, -1, 1)), 1, 96);
    let j6 = frac(
        &lin(&[(8, &m(&j2, &m(&j2, &j2))), (-160, &m(&j2, &j4)), (-1, &i6)]),
        1,
        576,
    );
    let j8 = frac(&lin(&[(1, &m(&j2, &j6)), (-1, &m(&j4, &j4))]), 1, 4);
    let j10 = frac(&i10, 1, 4096);

    let mut j = [field.zero(); 5];
    for (slot, e) in j.iter_mut().zip([&j2, &j4, &j6, &j8, &j10]) {
        *slot = reduce_mod3(field, e)?;
    }
    Ok(IgusaVector::new(j))
}
