//! Exact arithmetic for sl2 over polynomial rings F[x1..xn], with
//! constructive conjugacy: explicit conjugators into diagonal and standard
//! forms, triple completion from involutions and square-zero elements,
//! membership tests, and the splitting of automorphisms and derivations
//! into inner and coefficient parts.
//!
//! Everything is computed exactly over Q or a prime field of odd
//! characteristic; there are no floating point numbers and no tolerances.

#![no_std]

extern crate alloc;

pub mod autder;
pub mod conjugacy;
pub mod error;
pub mod field;
pub mod gcd;
pub mod gen;
pub mod poly;
pub mod sl2;

pub use autder::{
    decompose_derivation, recognize_automorphism, transport_ring_iso, LieAut, LieDer, RingAut,
    RingDer,
};
pub use conjugacy::{
    bezout_from_conjugation, comaximality_certificate, diagonalize_involution,
    ideal_correspondence, jacobson_morozov, mad_normalize, nilpotent_to_standard,
    sl2f_membership, standardize_triple, triple_basis_matrix, triple_from_involution,
    ufd_factor_involution, InvolutionFactorization, MembershipKind, MembershipWitness,
    TripleBasis,
};
pub use error::{Error, Result, TripleRelation};
pub use field::{Field, FieldElem};
pub use gcd::{derive_bezout, poly_ext_gcd, poly_gcd, BezoutCert};
pub use gen::{GenConfig, Generator, SplitMix64};
pub use poly::{Monomial, Poly};
pub use sl2::{bracket, generator_sample, verify_triple, MatGL2, MatSL2, Sl2Triple};
