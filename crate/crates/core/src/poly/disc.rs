use super::UniPoly;
use crate::error::{Error, Result};
use crate::gf3::{Felt, Field};

fn determinant(field: &Field, mut m: Vec<Vec<Felt>>) -> Felt {
    let n = m.len();
    let mut det = field.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return field.zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        let inv = p.inv().expect("pivot is nonzero");
        for r in col + 1..n {
            let factor = m[r][col] * inv;
            if factor.is_zero() {
                continue;
            }
            let (top, rest) = m.split_at_mut(r);
            for (x, &v) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= factor * v;
            }
        }
    }
    det
}

/// Sylvester resultant with formal degrees `m >= deg f` and `n >= deg g`.
fn sylvester(f: &UniPoly, m: usize, g: &UniPoly, n: usize) -> Felt {
    let field = f.field();
    let size = m + n;
    if size == 0 {
        return field.one();
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![field.zero(); size];
        for j in 0..=m {
            row[i + j] = f.coeff(m - j);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![field.zero(); size];
        for j in 0..=n {
            row[i + j] = g.coeff(n - j);
        }
        rows.push(row);
    }
    determinant(field, rows)
}

/// Resultant of two nonzero polynomials with respect to their true degrees.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<Felt> {
    f.same_field(g)?;
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    let n = g.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(sylvester(f, m, g, n))
}

/// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`, with `f'` taken at formal degree
/// `n - 1` even when its leading terms vanish in characteristic 3.
pub fn discriminant(f: &UniPoly) -> Result<Felt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::WrongDegree {
            expected: "at least 2",
            found: n,
        });
    }
    let r = sylvester(f, n, &f.derivative(), n - 1);
    let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    Ok(f.field().from_int(sign) * r / f.lc())
}

impl UniPoly {
    pub(crate) fn same_field(&self, other: &UniPoly) -> Result<()> {
        if self.field_degree() == other.field_degree() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field_degree() as u8,
                other.field_degree() as u8,
            ))
        }
    }
}
