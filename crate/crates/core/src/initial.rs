//! The initial (weak) topology of a function, built three independent ways,
//! with a minimality verifier.
//!
//! Given `f : Y → X` and a topology on `X`, the weakest topology on `Y`
//! making `f` continuous is the family of preimages of open sets. The direct
//! construction takes the preimages as given. The image route factors `f`
//! through its image `Z = f(Y)` — the corestriction onto `Z` is surjective,
//! and the subspace topology on `Z` pulls back to the same family. The
//! closure route builds the operation `Ã = f⁻¹(closure(f(A)))` and converts
//! it through the operator → topology correspondence.

use std::fmt;

use thiserror::Error;

use crate::closure::{topology_from_closure, validate_kuratowski};
use crate::set::{Carrier, PointSet};
use crate::subspace::subspace_topology;
use crate::topology::{Topology, TopologyError};

/// A total function between two carriers, as a lookup table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteFunction {
    dom: Carrier,
    cod: Carrier,
    table: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FunctionError {
    #[error("table has {got} entries, expected {expected}")]
    WrongTableLength { expected: usize, got: usize },
    #[error("table entry {value} at position {position} is outside the codomain of size {cod_size}")]
    EntryOutOfRange { position: usize, value: u8, cod_size: u8 },
    #[error("set lies over a carrier of size {found}, expected {expected}")]
    CarrierMismatch { found: u8, expected: u8 },
}

impl FiniteFunction {
    pub fn new(dom: Carrier, cod: Carrier, table: Vec<u8>) -> Result<Self, FunctionError> {
        if table.len() != dom.size() as usize {
            return Err(FunctionError::WrongTableLength {
                expected: dom.size() as usize,
                got: table.len(),
            });
        }
        for (position, &value) in table.iter().enumerate() {
            if value >= cod.size() {
                return Err(FunctionError::EntryOutOfRange {
                    position,
                    value,
                    cod_size: cod.size(),
                });
            }
        }
        Ok(FiniteFunction { dom, cod, table })
    }

    pub fn identity(carrier: Carrier) -> Self {
        FiniteFunction {
            dom: carrier,
            cod: carrier,
            table: carrier.points().collect(),
        }
    }

    pub fn constant(dom: Carrier, cod: Carrier, value: u8) -> Result<Self, FunctionError> {
        Self::new(dom, cod, vec![value; dom.size() as usize])
    }

    pub fn dom(&self) -> Carrier {
        self.dom
    }

    pub fn cod(&self) -> Carrier {
        self.cod
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn apply(&self, point: u8) -> u8 {
        self.table[point as usize]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = 0u16;
        for &v in &self.table {
            if seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().mask() == self.cod.full_mask()
    }

    /// The set of points mapped into `u`.
    pub fn preimage(&self, u: PointSet) -> Result<PointSet, FunctionError> {
        if u.carrier() != self.cod {
            return Err(FunctionError::CarrierMismatch {
                found: u.carrier().size(),
                expected: self.cod.size(),
            });
        }
        Ok(PointSet::from_mask_unchecked(self.dom, self.preimage_mask(u.mask())))
    }

    pub(crate) fn preimage_mask(&self, umask: u16) -> u16 {
        let mut mask = 0u16;
        for (i, &v) in self.table.iter().enumerate() {
            if umask >> v & 1 == 1 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// `f(Y)`, the set of values of the table.
    pub fn image_set(&self) -> PointSet {
        let mut mask = 0u16;
        for &v in &self.table {
            mask |= 1 << v;
        }
        PointSet::from_mask_unchecked(self.cod, mask)
    }

    /// The image mask of a subset of the domain.
    pub(crate) fn image_mask(&self, amask: u16) -> u16 {
        let mut mask = 0u16;
        for (i, &v) in self.table.iter().enumerate() {
            if amask >> i & 1 == 1 {
                mask |= 1 << v;
            }
        }
        mask
    }
}

impl fmt::Debug for FiniteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteFunction({} → {}, [", self.dom.size(), self.cod.size())?;
        for (i, &v) in self.table.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}↦{v}")?;
        }
        write!(f, "])")
    }
}

/// Direct construction: the preimages of the open sets, deduplicated.
pub fn initial_topology_direct(tx: &Topology, f: &FiniteFunction) -> Topology {
    assert_eq!(f.cod(), tx.carrier(), "codomain does not carry the given topology");
    let opens: Vec<u16> = tx
        .open_masks()
        .iter()
        .map(|&u| f.preimage_mask(u))
        .collect();
    Topology::from_open_masks(f.dom(), opens)
}

/// Image route: factor `f` through `Z = f(Y)`. The corestriction onto the
/// relabeled image carrier is surjective by construction, and pulling the
/// subspace topology on `Z` back through it reproduces the direct result.
pub fn initial_topology_via_image(tx: &Topology, f: &FiniteFunction) -> Topology {
    assert_eq!(f.cod(), tx.carrier(), "codomain does not carry the given topology");
    let image = f.image_set();
    let view = subspace_topology(tx, image);
    // corestricted table entry: the rank of f(y) among the image points
    let table: Vec<u8> = f
        .table()
        .iter()
        .map(|&v| (image.mask() & ((1u16 << v) - 1)).count_ones() as u8)
        .collect();
    let corestriction = FiniteFunction::new(f.dom(), view.sub().carrier(), table)
        .expect("corestriction entries are ranks within the image");
    debug_assert!(corestriction.is_surjective());
    initial_topology_direct(view.sub(), &corestriction)
}

/// Closure route: build `Ã = f⁻¹(closure(f(A)))` over subsets of the domain,
/// validate it as a Kuratowski operation, and convert it to a topology.
pub fn initial_topology_via_closure(tx: &Topology, f: &FiniteFunction) -> Topology {
    assert_eq!(f.cod(), tx.carrier(), "codomain does not carry the given topology");
    let dom = f.dom();
    let table: Vec<u16> = (0..dom.subset_count())
        .map(|a| f.preimage_mask(tx.closure_mask(f.image_mask(a as u16))))
        .collect();
    let op = validate_kuratowski(dom, &table)
        .expect("the pulled-back closure trace is a closure operation");
    topology_from_closure(&op)
}

/// Why a candidate topology fails to be the weakest one making `f`
/// continuous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeakestFailure {
    /// Some open of the codomain has a non-open preimage.
    NotContinuous { open_set: PointSet, preimage: PointSet },
    /// Some open of the candidate is not a preimage of any open, so a
    /// strictly weaker continuous topology exists.
    NotLeast { offending_open: PointSet, weaker: Topology },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeakestVerdict {
    Holds,
    Fails(WeakestFailure),
}

impl WeakestVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, WeakestVerdict::Holds)
    }
}

/// Checks that `ty` is the weakest topology on the domain making `f`
/// continuous into `tx`.
///
/// Continuity is checked directly. Minimality uses the preimage-membership
/// argument: every open of `ty` must itself be a preimage of an open of
/// `tx`, because preimages are open in *every* topology that makes `f`
/// continuous. Together the two checks pin `ty` to exactly the preimage
/// family. The exhaustive sweep over all candidate topologies on small
/// domains is the independent oracle for this check and lives in the test
/// suites.
pub fn verify_weakest(
    tx: &Topology,
    f: &FiniteFunction,
    ty: &Topology,
) -> Result<WeakestVerdict, TopologyError> {
    if f.cod() != tx.carrier() {
        return Err(TopologyError::CarrierMismatch {
            left: f.cod().size(),
            right: tx.carrier().size(),
        });
    }
    if f.dom() != ty.carrier() {
        return Err(TopologyError::CarrierMismatch {
            left: f.dom().size(),
            right: ty.carrier().size(),
        });
    }

    for &u in tx.open_masks() {
        let pre = f.preimage_mask(u);
        if !ty.is_open_mask(pre) {
            return Ok(WeakestVerdict::Fails(WeakestFailure::NotContinuous {
                open_set: PointSet::from_mask_unchecked(tx.carrier(), u),
                preimage: PointSet::from_mask_unchecked(f.dom(), pre),
            }));
        }
    }

    let least = initial_topology_direct(tx, f);
    for &v in ty.open_masks() {
        if !least.is_open_mask(v) {
            return Ok(WeakestVerdict::Fails(WeakestFailure::NotLeast {
                offending_open: PointSet::from_mask_unchecked(f.dom(), v),
                weaker: least,
            }));
        }
    }
    Ok(WeakestVerdict::Holds)
}
