//! Partial Galois theory over finite commutative rings.
//!
//! Unital partial actions of finite groups on finite commutative rings, Galois
//! coordinates, partial group cohomology `Hⁿ(G, α, 𝒰(R))` for `n ≤ 3`, partial
//! skew group rings and crossed products, the partial representation `Θ` and
//! its factor set, the induced action on idempotent classes, and checks of
//! what exactness of the seven-term sequence forces at finite scale.

pub mod cohomology;
pub mod crossed;
pub mod finring;
pub mod fixtures;
pub mod galois;
pub mod groups;
pub mod partial_action;
pub mod picsemi;
pub mod sequence;

pub use cohomology::{cohomology_group, Cochain, CohomologyError, CohomologyGroup, Complex, Engine};
pub use crossed::{
    coiso_map, crossed_product, delta_theta, kappa_iso, skew_group_ring, theta_factor_set, AlgElem, CrossedError,
    GradedAlgebra,
};
pub use finring::{make_ring, Elem, FiniteRing, Idempotent, RingDescriptor, RingError};
pub use fixtures::{fixture, fixture_global, FIXTURES};
pub use galois::{find_certificate, regular_representation, verify_certificate, CertificateSearch, GaloisCertificate};
pub use groups::{make_group, FiniteGroup, GroupDescriptor, GroupElem, GroupError};
pub use partial_action::{
    restrict_global, validate, ActionCandidate, ActionError, Axiom, GlobalAction, PartialAction, ValidationReport,
};
pub use picsemi::{pics_monoid, star_action, z1_pics, PicSAction, PicSClass, PicSMonoid};
pub use sequence::{consequence_check, delta_theta_brauer_class, twisted_invariants, SequenceError, SequenceReport};
