//! Exact combinatorics of embedding types and local types in one apartment
//! of the Bruhat–Tits building of `GL_m(D)`.
//!
//! * [`cyclic`]: sequences and matrices up to rotation, pairs form and the
//!   complement bijection `Row(s, t) → Row(t, s)`.
//! * [`apartment`]: lattices, lattice chains, hereditary orders, lattice
//!   functions and local types, all as exponent data with respect to a fixed
//!   frame.
//! * [`embedding`]: embedding data `λ ∈ M(f, r; m)` and pearl embeddings.
//! * [`correspondence`]: the map `j_E`, the two local-type pipelines and the
//!   theorem check `<row(λ)> = <f·r·μ>^c`.
//! * [`certify`]: exhaustive enumeration and batch verification.
//!
//! All arithmetic is exact (`i64` rationals).

pub mod apartment;
pub mod certify;
pub mod correspondence;
pub mod cyclic;
pub mod embedding;
pub mod error;
pub mod rational;

pub use apartment::{
    barycenter, face_of, local_type, local_type_coordinates, oriented_edge,
    square_lattice_exponents, ApartmentContext, ApartmentPoint, ChainFace, ExponentMatrix, Lattice,
    LocalType, OrderExponents,
};
pub use certify::{count_data, enumerate_data, run_verify, VerifyRange, VerifySummary};
pub use correspondence::{
    embedding_type_from_local, intersection_property, j_forward, j_inverse, local_type_direct,
    local_type_geometric, verify_theorem, Mismatch, TheoremReport, Verdict,
};
pub use cyclic::{CycMatrix, CycVec, CyclicClass, PairsForm};
pub use embedding::{ed_degree, EmbeddingDatum, PearlSkeleton};
pub use error::{Error, Result};
pub use rational::Q;
