//! Exact combinatorics of Lusztig symbols and the finite theta
//! correspondence of unipotent characters for symplectic, even-orthogonal
//! and unitary groups.
//!
//! Everything here is integer arithmetic: partitions and β-sets, symbols
//! with their defect and rank invariants, the Υ bijection onto
//! bi-partitions, character degrees in q (closed forms plus a full exact
//! degree polynomial for the unitary families), the correspondence relation
//! B with its one-to-one refinement θ̄, ℓ-admissibility, and unipotent
//! Θ-rank. The [`verify`] module sweeps these constructions exhaustively at
//! desk scale.

pub mod degrees;
pub mod error;
pub mod partitions;
pub mod symbols;
pub mod theta;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{
    enumerate_bipartitions, enumerate_partitions, interlaces, BiPartition, Partition,
    MAX_ENUMERATION,
};
pub use symbols::{cuspidal, steinberg_unitary, BetaSet, GroupFamily, GroupKind, Symbol};
pub use theta::{DualPair, ThetaPair};
