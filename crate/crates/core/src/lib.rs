//! Weil polynomials of supersingular genus-2 curves in characteristic 3.
//!
//! Layers, bottom up: finite fields [`gf3`], polynomials [`poly`], curves
//! ([`genus2`], [`elliptic`]), explicit triple covers [`covers`], the moduli
//! coordinate [`moduli`], exhaustive [`census`] and constructions, the
//! PSL₂ lemmas [`psl2`], and the bundled [`verify`] suites.
//!
//! ```
//! use ssg2::census::{weil_census, CensusOptions};
//! use ssg2::weil::theorem1_list;
//!
//! let r = weil_census(3, CensusOptions::default())?;
//! assert_eq!(r.observed, theorem1_list(3)?);
//! # Ok::<(), ssg2::Error>(())
//! ```

pub mod error;
pub use error::{Error, Result};

pub mod gf3;
pub mod poly;
pub mod weil;

pub mod elliptic;
pub mod genus2;

pub mod covers;
pub mod moduli;

pub mod census;
pub mod psl2;
pub mod verify;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/elliptic.md")]
    mod elliptic {}
    #[doc = include_str!("../../../book/src/covers.md")]
    mod covers {}
    #[doc = include_str!("../../../book/src/moduli.md")]
    mod moduli {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/psl2.md")]
    mod psl2 {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
