//! Idempotents, minimal codes and code equivalence in finite group algebras.
//!
//! The crate works bottom-up: exact finite-field arithmetic ([`ffield`]),
//! finite abelian and dihedral groups ([`groups`], [`dihedral`]), the group
//! algebra as a coefficient-vector algebra ([`galg`]), idempotent
//! constructions ([`idem`]), ideals as linear codes ([`codes`]),
//! equivalence of codes under group automorphisms ([`equiv`]) and cyclic
//! codes over the chain rings `Z_{p^k}` ([`chainring`]).

pub mod chainring;
pub mod codes;
pub mod dihedral;
pub mod equiv;
pub mod error;
pub mod ffield;
pub mod galg;
pub mod group;
pub mod groups;
pub mod idem;
pub mod linalg;
pub mod numtheory;
pub mod report;
pub mod ring;

pub use error::{Error, Result};
pub use ffield::{Field, FieldElement};
pub use galg::AlgebraElement;
pub use group::Group;
pub use groups::{AbelianGroup, Subgroup};
pub use ring::{Ring, ZMod};
