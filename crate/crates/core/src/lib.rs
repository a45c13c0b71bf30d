//! Finite-topology verification engine.
//!
//! Constructs the subspace topology and the initial (weak) topology of a
//! function in several independent ways — direct image, canonical maximal
//! representatives, and Kuratowski closure operations — and cross-verifies
//! that they agree, are minimal, and respect the closure-operator ↔ topology
//! correspondence. Carriers are capped at 16 points so that every sweep is
//! exhaustive and exact.

#![forbid(unsafe_code)]

pub mod census;
pub mod closure;
pub mod format;
pub mod initial;
pub mod set;
pub mod subspace;
pub mod topology;

pub use census::{enumerate_brute, enumerate_preorder, random_topology, CensusMethod, TopologyCensus};
pub use closure::{closure_from_topology, topology_from_closure, validate_kuratowski, ClosureOperator};
pub use initial::{
    initial_topology_direct, initial_topology_via_closure, initial_topology_via_image,
    verify_weakest, FiniteFunction, WeakestFailure, WeakestVerdict,
};
pub use set::{Carrier, PointSet, SetError, MAX_POINTS};
pub use subspace::{
    maximal_open_representative, subspace_topology, subspace_topology_canonical,
    subspace_via_closure, CanonicalCertificate, SubspaceView,
};
pub use topology::{
    generate_from_subbasis, is_continuous, validate, Topology, TopologyError, ViolationReport,
};
