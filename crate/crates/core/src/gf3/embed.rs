use std::collections::HashMap;
use std::sync::OnceLock;

use super::field::{make_field, Felt, Field, MAX_DEGREE};
use crate::error::{Error, Result};

/// The canonical embedding GF(3^s) -> GF(3^t) for s | t.
///
/// The generator of the source power basis goes to the smallest-code root
/// of the source modulus in the target; everything else follows by
/// linearity. Both directions are tabulated.
pub struct Embedding {
    source: &'static Field,
    target: &'static Field,
    generator_image: Felt,
    image: Vec<u32>,
    preimage: HashMap<u32, u32>,
}

const N: usize = MAX_DEGREE as usize + 1;
static EMBEDDINGS: [[OnceLock<Embedding>; N]; N] = [const { [const { OnceLock::new() }; N] }; N];

/// Returns the cached embedding of GF(3^src) into GF(3^dst).
pub fn embedding(src: u32, dst: u32) -> Result<&'static Embedding> {
    let source = make_field(src)?;
    let target = make_field(dst)?;
    if !dst.is_multiple_of(src) {
        return Err(Error::NoEmbedding {
            source_degree: src as u8,
            target_degree: dst as u8,
        });
    }
    Ok(EMBEDDINGS[src as usize][dst as usize].get_or_init(|| Embedding::build(source, target)))
}

/// Maps `x` into the field of degree `dst`.
pub fn lift(x: Felt, dst: u32) -> Result<Felt> {
    Ok(embedding(x.degree(), dst)?.apply(x))
}

impl Embedding {
    fn build(source: &'static Field, target: &'static Field) -> Embedding {
        let modulus: Vec<Felt> = source
            .modulus()
            .iter()
            .map(|&c| target.from_int(c as i64))
            .collect();
        let eval = |x: Felt| {
            modulus
                .iter()
                .rev()
                .fold(target.zero(), |acc, &c| acc * x + c)
        };
        let generator_image = if source.degree() == target.degree() {
            target.element(3 % target.order())
        } else {
            target
                .elements()
                .find(|&x| eval(x).is_zero())
                .expect("source modulus has a root in every extension")
        };
        let s = source.degree() as usize;
        let powers: Vec<Felt> = (0..s).map(|k| generator_image.pow(k as u64)).collect();
        let image: Vec<u32> = (0..source.order())
            .map(|code| {
                let digits = source.element(code).digits();
                digits
                    .iter()
                    .zip(&powers)
                    .fold(target.zero(), |acc, (&d, &p)| {
                        acc + target.from_int(d as i64) * p
                    })
                    .code()
            })
            .collect();
        let preimage = image
            .iter()
            .enumerate()
            .map(|(src, &dst)| (dst, src as u32))
            .collect();
        Embedding {
            source,
            target,
            generator_image,
            image,
            preimage,
        }
    }

    pub fn source(&self) -> &'static Field {
        self.source
    }

    pub fn target(&self) -> &'static Field {
        self.target
    }

    pub fn generator_image(&self) -> Felt {
        self.generator_image
    }

    pub fn apply(&self, x: Felt) -> Felt {
        assert_eq!(x.degree(), self.source.degree(), "embedding applied to a foreign element");
        self.target.element(self.image[x.code() as usize])
    }

    /// Inverse image of `y`, if `y` lies in the image of the source field.
    pub fn preimage(&self, y: Felt) -> Option<Felt> {
        if y.degree() != self.target.degree() {
            return None;
        }
        self.preimage
            .get(&y.code())
            .map(|&c| self.source.element(c))
    }
}

/// Relative trace from the field of `x` down to the subfield of degree `sub`.
pub fn rel_trace(x: Felt, sub: u32) -> Result<Felt> {
    let d = x.degree();
    let emb = embedding(sub, d)?;
    let mut acc = x;
    let mut y = x;
    for _ in 1..d / sub {
        y = y.frobenius(sub);
        acc += y;
    }
    Ok(emb
        .preimage(acc)
        .expect("a relative trace lies in the subfield"))
}

/// True iff `x` lies in the subfield of degree `sub`.
pub fn in_subfield(x: Felt, sub: u32) -> bool {
    x.degree().is_multiple_of(sub) && x.frobenius(sub) == x
}
