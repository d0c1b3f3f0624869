//! Rotational first-kind Frobenius circulants.
//!
//! A circulant `Cay(Z_n, S)` is a *first-kind Frobenius circulant* when some
//! subgroup `H` of `Z_n^*` acts regularly on `S` and without fixed points on
//! `Z_n \ {0}`; it is *rotational* when a unit permutes `S` in one cycle.
//! This crate
//!
//! - constructs and enumerates every rotational first-kind Frobenius
//!   circulant with kernel `Z_n` ([`classifier`]),
//! - checks rotations, fixed-point sets and the gossip-time certificate
//!   ([`rotation`]),
//! - builds the non-Frobenius family `Γ_{q,r}` and its vertex-cut
//!   dichotomy ([`gamma`]),
//! - relates hexagonal meshes to the circulants `TL_{n_k}` ([`harts`]).
//!
//! All arithmetic is exact. The graph code targets desk-scale `n` (BFS
//! allocates one flag per vertex).

pub mod circulant;
pub mod classifier;
pub mod gamma;
pub mod harts;
pub mod numtheory;
pub mod oracle;
pub mod rotation;

pub use circulant::{Circulant, CirculantError, VertexSet};
pub use classifier::{
    admissible_degrees, construct_h, enumerate_classes, max_degree, verify_first_kind_frobenius,
    ClassifyError, FrobeniusClass, FrobeniusReport,
};
pub use gamma::{build_gamma, verify_theorem_q, GammaError, GammaSpec, TheoremReport};
pub use harts::{harts_graph, harts_iso_tl, tl_graph, HartsError, HartsSpec};
pub use numtheory::{factorize, Factorization, NumError};
pub use rotation::{
    find_all_rotations, gossip_certificate, rotation_report, GossipCertificate, RotationError,
    RotationReport,
};
