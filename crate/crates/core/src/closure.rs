//! Kuratowski closure operations: axiom validation and the two directions of
//! the operator ↔ topology correspondence.
//!
//! A closure operation on a carrier assigns to every subset `A` a subset `Ā`
//! such that
//!
//! - (K1) the closure of ∅ is ∅
//! - (K2) `A ⊆ Ā`
//! - (K3) closing twice equals closing once
//! - (K4) the closure of `A ∪ B` is `Ā ∪ B̄`
//!
//! Every such operation determines a unique topology whose closed sets are
//! exactly the fixed points `Ā = A`, and closure with respect to that
//! topology reproduces the operation. Monotonicity (`A ⊆ B ⇒ Ā ⊆ B̄`) is a
//! consequence of K4, not a separate axiom; it is asserted as a derived
//! property in tests.

use std::fmt;

use thiserror::Error;

use crate::set::{Carrier, PointSet};
use crate::topology::Topology;

/// A validated Kuratowski closure operation, stored as a dense table indexed
/// by subset mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ClosureOperator {
    carrier: Carrier,
    table: Box<[u16]>,
}

impl ClosureOperator {
    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    /// Raw table entry; index is the input mask.
    pub fn entry(&self, mask: u16) -> u16 {
        self.table[mask as usize]
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }

    /// Applies the operation, `A ↦ Ā`.
    pub fn closure(&self, a: PointSet) -> PointSet {
        assert_eq!(a.carrier(), self.carrier, "set lies over a different carrier");
        PointSet::from_mask_unchecked(self.carrier, self.table[a.mask() as usize])
    }
}

impl fmt::Debug for ClosureOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClosureOperator(n={}, [", self.carrier.size())?;
        for (m, &img) in self.table.iter().enumerate() {
            if m > 0 {
                write!(f, ", ")?;
            }
            let a = PointSet::from_mask_unchecked(self.carrier, m as u16);
            let b = PointSet::from_mask_unchecked(self.carrier, img);
            write!(f, "{a}↦{b}")?;
        }
        write!(f, "])")
    }
}

/// One witnessed axiom failure; witnesses are the lexicographically least in
/// ascending mask order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KuratowskiViolation {
    /// K1: the closure of ∅ is not ∅.
    EmptySetMoves { image: PointSet },
    /// K2: `set` is not contained in its closure.
    NotExtensive { set: PointSet, image: PointSet },
    /// K3: closing twice differs from closing once.
    NotIdempotent { set: PointSet, image: PointSet, double: PointSet },
    /// K4: the closure of `a ∪ b` differs from the union of the closures.
    UnionMismatch { a: PointSet, b: PointSet, joint: PointSet, split: PointSet },
}

impl fmt::Display for KuratowskiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KuratowskiViolation::EmptySetMoves { image } => {
                write!(f, "K1: closure of {{}} is {image}")
            }
            KuratowskiViolation::NotExtensive { set, image } => {
                write!(f, "K2: {set} is not contained in its closure {image}")
            }
            KuratowskiViolation::NotIdempotent { set, image, double } => {
                write!(f, "K3: closing {set} twice gives {double}, once gives {image}")
            }
            KuratowskiViolation::UnionMismatch { a, b, joint, split } => {
                write!(f, "K4: closure of {a} ∪ {b} is {joint}, union of closures is {split}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiReport {
    violations: Vec<KuratowskiViolation>,
}

impl KuratowskiReport {
    pub fn violations(&self) -> &[KuratowskiViolation] {
        &self.violations
    }
}

impl fmt::Display for KuratowskiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    /// The raw table is not total over the `2^n` subsets; distinct from an
    /// axiom violation.
    #[error("table has {got} entries, expected {expected}")]
    WrongTableLength { expected: usize, got: usize },
    #[error("table entry {entry:#b} at index {index} is not a subset of the carrier")]
    EntryOutOfRange { index: usize, entry: u16 },
    #[error("{0}")]
    Axioms(KuratowskiReport),
}

/// Checks K1–K4 on a raw table and returns the validated operator, or a
/// report naming each violated axiom with its least witness.
pub fn validate_kuratowski(carrier: Carrier, table: &[u16]) -> Result<ClosureOperator, ClosureError> {
    let expected = carrier.subset_count();
    if table.len() != expected {
        return Err(ClosureError::WrongTableLength { expected, got: table.len() });
    }
    let full = carrier.full_mask();
    for (index, &entry) in table.iter().enumerate() {
        if entry & !full != 0 {
            return Err(ClosureError::EntryOutOfRange { index, entry });
        }
    }

    let set = |m: u16| PointSet::from_mask_unchecked(carrier, m);
    let mut violations = Vec::new();

    if table[0] != 0 {
        violations.push(KuratowskiViolation::EmptySetMoves { image: set(table[0]) });
    }
    for (m, &img) in table.iter().enumerate() {
        if m as u16 & !img != 0 {
            violations.push(KuratowskiViolation::NotExtensive {
                set: set(m as u16),
                image: set(img),
            });
            break;
        }
    }
    for (m, &img) in table.iter().enumerate() {
        let double = table[img as usize];
        if double != img {
            violations.push(KuratowskiViolation::NotIdempotent {
                set: set(m as u16),
                image: set(img),
                double: set(double),
            });
            break;
        }
    }
    'k4: for a in 0..expected {
        for b in a..expected {
            let joint = table[a | b];
            let split = table[a] | table[b];
            if joint != split {
                violations.push(KuratowskiViolation::UnionMismatch {
                    a: set(a as u16),
                    b: set(b as u16),
                    joint: set(joint),
                    split: set(split),
                });
                break 'k4;
            }
        }
    }

    if violations.is_empty() {
        Ok(ClosureOperator { carrier, table: table.to_vec().into_boxed_slice() })
    } else {
        Err(ClosureError::Axioms(KuratowskiReport { violations }))
    }
}

/// The unique topology whose closure operation is `op`: opens are the
/// complements of the fixed points `Ā = A`.
pub fn topology_from_closure(op: &ClosureOperator) -> Topology {
    let full = op.carrier.full_mask();
    let opens: Vec<u16> = (0..op.carrier.subset_count())
        .filter(|&m| op.table[m] == m as u16)
        .map(|m| m as u16 ^ full)
        .collect();
    Topology::from_open_masks(op.carrier, opens)
}

/// The closure operation of a topology: every entry is the smallest closed
/// superset. The result always passes [`validate_kuratowski`].
pub fn closure_from_topology(t: &Topology) -> ClosureOperator {
    let table: Vec<u16> = (0..t.carrier().subset_count())
        .map(|m| t.closure_mask(m as u16))
        .collect();
    debug_assert!(validate_kuratowski(t.carrier(), &table).is_ok());
    ClosureOperator {
        carrier: t.carrier(),
        table: table.into_boxed_slice(),
    }
}
