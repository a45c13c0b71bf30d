//! Topologies on finite carriers: axiom validation, derived operators
//! (closure, interior, closed sets), the finer/coarser comparison,
//! continuity, and generation from a subbasis.
//!
//! A family of subsets is a topology when it contains ∅ and the full carrier
//! and is closed under pairwise intersection and pairwise union. On a finite
//! carrier the pairwise union check is equivalent to closure under arbitrary
//! unions of members: any union of finitely many members is a fold of
//! pairwise unions, and the empty union is covered by the ∅-membership axiom.
//! The interface nevertheless states the axiom in the arbitrary-union form,
//! which is the one the checks certify.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::initial::FiniteFunction;
use crate::set::{Carrier, PointSet};

/// A topology: a carrier together with its family of open sets.
///
/// Kept in a dual representation: the ascending list of open masks (the
/// canonical enumeration order) plus a membership bitset over all `2^n`
/// masks for O(1) openness tests in exhaustive sweeps.
#[derive(Clone)]
pub struct Topology {
    carrier: Carrier,
    opens: Vec<u16>,
    member: Box<[u64]>,
}

impl Topology {
    /// Builds a topology from masks already known to satisfy the axioms.
    /// Sorts and deduplicates; axioms are debug-asserted only.
    pub(crate) fn from_open_masks(carrier: Carrier, mut opens: Vec<u16>) -> Self {
        opens.sort_unstable();
        opens.dedup();
        let words = carrier.subset_count().div_ceil(64);
        let mut member = vec![0u64; words].into_boxed_slice();
        for &m in &opens {
            member[(m >> 6) as usize] |= 1u64 << (m & 63);
        }
        let t = Topology { carrier, opens, member };
        debug_assert!(t.axioms_hold(), "constructed family violates the axioms");
        t
    }

    fn axioms_hold(&self) -> bool {
        let full = self.carrier.full_mask();
        self.is_open_mask(0)
            && self.is_open_mask(full)
            && self.opens.iter().all(|&a| {
                self.opens
                    .iter()
                    .all(|&b| self.is_open_mask(a & b) && self.is_open_mask(a | b))
            })
    }

    /// The topology `{∅, X}`.
    pub fn indiscrete(carrier: Carrier) -> Self {
        let mut opens = vec![0, carrier.full_mask()];
        opens.dedup(); // n = 0 has ∅ = X
        Self::from_open_masks(carrier, opens)
    }

    /// The topology of all subsets.
    pub fn discrete(carrier: Carrier) -> Self {
        Self::from_open_masks(carrier, (0..carrier.subset_count()).map(|m| m as u16).collect())
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    /// Open masks in ascending order.
    pub fn open_masks(&self) -> &[u16] {
        &self.opens
    }

    pub fn opens(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens
            .iter()
            .map(move |&m| PointSet::from_mask_unchecked(self.carrier, m))
    }

    /// O(1) openness test on a raw mask.
    pub fn is_open_mask(&self, mask: u16) -> bool {
        self.member[(mask >> 6) as usize] >> (mask & 63) & 1 == 1
    }

    /// Openness test; a set over a different carrier is never a member.
    pub fn is_open(&self, s: PointSet) -> bool {
        s.carrier() == self.carrier && self.is_open_mask(s.mask())
    }

    /// Exactly the complements of the open sets, in ascending mask order.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        let full = self.carrier.full_mask();
        let mut masks: Vec<u16> = self.opens.iter().map(|&u| u ^ full).collect();
        masks.sort_unstable();
        masks
            .into_iter()
            .map(|m| PointSet::from_mask_unchecked(self.carrier, m))
            .collect()
    }

    pub fn is_closed_mask(&self, mask: u16) -> bool {
        self.is_open_mask(mask ^ self.carrier.full_mask())
    }

    /// Smallest closed superset: the intersection of all closed sets
    /// containing `a`.
    pub fn closure_of(&self, a: PointSet) -> PointSet {
        assert_eq!(a.carrier(), self.carrier, "set lies over a different carrier");
        PointSet::from_mask_unchecked(self.carrier, self.closure_mask(a.mask()))
    }

    pub(crate) fn closure_mask(&self, mask: u16) -> u16 {
        let full = self.carrier.full_mask();
        let mut acc = full;
        for &u in &self.opens {
            let closed = u ^ full;
            if mask & !closed == 0 {
                acc &= closed;
            }
        }
        acc
    }

    /// Largest open subset; dual to [`Topology::closure_of`].
    pub fn interior_of(&self, a: PointSet) -> PointSet {
        assert_eq!(a.carrier(), self.carrier, "set lies over a different carrier");
        let mut acc = 0u16;
        for &u in &self.opens {
            if u & !a.mask() == 0 {
                acc |= u;
            }
        }
        PointSet::from_mask_unchecked(self.carrier, acc)
    }

    /// `self` is finer than `other` iff every open of `other` is open here.
    pub fn is_finer(&self, other: &Topology) -> Result<bool, TopologyError> {
        if self.carrier != other.carrier {
            return Err(TopologyError::CarrierMismatch {
                left: self.carrier.size(),
                right: other.carrier.size(),
            });
        }
        Ok(other.opens.iter().all(|&m| self.is_open_mask(m)))
    }
}

impl PartialEq for Topology {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.opens == other.opens
    }
}

impl Eq for Topology {}

impl Hash for Topology {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.carrier.hash(state);
        self.opens.hash(state);
    }
}

/// Canonical order: carrier size first, then the ascending open-mask list
/// compared lexicographically.
impl Ord for Topology {
    fn cmp(&self, other: &Self) -> Ordering {
        self.carrier
            .cmp(&other.carrier)
            .then_with(|| self.opens.cmp(&other.opens))
    }
}

impl PartialOrd for Topology {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Topology(n={}, {{", self.carrier.size())?;
        for (i, s) in self.opens().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}})")
    }
}

/// One witnessed axiom failure. Witnesses are the lexicographically least,
/// scanning members in ascending mask order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomViolation {
    MissingEmptySet,
    MissingFullCarrier,
    /// `a ∩ b` is not in the family.
    IntersectionEscapes { a: PointSet, b: PointSet },
    /// `a ∪ b` is not in the family.
    UnionEscapes { a: PointSet, b: PointSet },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::MissingEmptySet => write!(f, "empty set missing"),
            AxiomViolation::MissingFullCarrier => write!(f, "full carrier missing"),
            AxiomViolation::IntersectionEscapes { a, b } => {
                write!(f, "intersection closure: {a},{b}")
            }
            AxiomViolation::UnionEscapes { a, b } => write!(f, "union closure: {a},{b}"),
        }
    }
}

/// All violated axioms, at most one witness each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationReport {
    violations: Vec<AxiomViolation>,
}

impl ViolationReport {
    pub fn violations(&self) -> &[AxiomViolation] {
        &self.violations
    }
}

impl fmt::Display for ViolationReport {
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
pub enum TopologyError {
    /// A family member lies over the wrong carrier; distinct from an axiom
    /// violation.
    #[error("family member {member:?} lies over a carrier of size {found}, expected {expected}")]
    ForeignMember { member: PointSet, found: u8, expected: u8 },
    #[error("{0}")]
    Axioms(ViolationReport),
    #[error("carrier size {left} does not match carrier size {right}")]
    CarrierMismatch { left: u8, right: u8 },
}

/// Checks the three topology axioms on `family` and returns the validated
/// topology, or a report naming every violated axiom with one witness.
pub fn validate(carrier: Carrier, family: &[PointSet]) -> Result<Topology, TopologyError> {
    for &member in family {
        if member.carrier() != carrier {
            return Err(TopologyError::ForeignMember {
                member,
                found: member.carrier().size(),
                expected: carrier.size(),
            });
        }
    }

    let mut masks: Vec<u16> = family.iter().map(|s| s.mask()).collect();
    masks.sort_unstable();
    masks.dedup();

    let words = carrier.subset_count().div_ceil(64);
    let mut member = vec![0u64; words];
    for &m in &masks {
        member[(m >> 6) as usize] |= 1u64 << (m & 63);
    }
    let has = |m: u16| member[(m >> 6) as usize] >> (m & 63) & 1 == 1;

    let mut violations = Vec::new();
    if !has(0) {
        violations.push(AxiomViolation::MissingEmptySet);
    }
    if !has(carrier.full_mask()) {
        violations.push(AxiomViolation::MissingFullCarrier);
    }
    'inter: for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[i..] {
            if !has(a & b) {
                violations.push(AxiomViolation::IntersectionEscapes {
                    a: PointSet::from_mask_unchecked(carrier, a),
                    b: PointSet::from_mask_unchecked(carrier, b),
                });
                break 'inter;
            }
        }
    }
    'uni: for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[i..] {
            if !has(a | b) {
                violations.push(AxiomViolation::UnionEscapes {
                    a: PointSet::from_mask_unchecked(carrier, a),
                    b: PointSet::from_mask_unchecked(carrier, b),
                });
                break 'uni;
            }
        }
    }

    if violations.is_empty() {
        Ok(Topology {
            carrier,
            opens: masks,
            member: member.into_boxed_slice(),
        })
    } else {
        Err(TopologyError::Axioms(ViolationReport { violations }))
    }
}

/// True iff the preimage of every open set of `codomain_topology` is open in
/// `domain_topology`.
pub fn is_continuous(
    f: &FiniteFunction,
    domain_topology: &Topology,
    codomain_topology: &Topology,
) -> Result<bool, TopologyError> {
    if f.dom() != domain_topology.carrier() {
        return Err(TopologyError::CarrierMismatch {
            left: f.dom().size(),
            right: domain_topology.carrier().size(),
        });
    }
    if f.cod() != codomain_topology.carrier() {
        return Err(TopologyError::CarrierMismatch {
            left: f.cod().size(),
            right: codomain_topology.carrier().size(),
        });
    }
    Ok(codomain_topology
        .open_masks()
        .iter()
        .all(|&u| domain_topology.is_open_mask(f.preimage_mask(u))))
}

/// The smallest topology containing `family`: close under finite
/// intersections (the empty intersection is the full carrier), then under
/// unions (the empty union is ∅).
pub fn generate_from_subbasis(carrier: Carrier, family: &[PointSet]) -> Topology {
    for member in family {
        assert_eq!(member.carrier(), carrier, "subbasis member lies over a different carrier");
    }
    let seeds: Vec<u16> = family.iter().map(|s| s.mask()).collect();
    let meets = close_pairwise(carrier, &seeds, carrier.full_mask(), |a, b| a & b);
    let opens = close_pairwise(carrier, &meets, 0, |a, b| a | b);
    Topology::from_open_masks(carrier, opens)
}

/// Worklist closure of `seed ∪ {unit}` under a binary mask operation.
fn close_pairwise(
    carrier: Carrier,
    seed: &[u16],
    unit: u16,
    op: impl Fn(u16, u16) -> u16,
) -> Vec<u16> {
    let mut present = vec![false; carrier.subset_count()];
    let mut list: Vec<u16> = Vec::new();
    let push = |m: u16, present: &mut Vec<bool>, list: &mut Vec<u16>| {
        if !present[m as usize] {
            present[m as usize] = true;
            list.push(m);
        }
    };
    push(unit, &mut present, &mut list);
    for &m in seed {
        push(m, &mut present, &mut list);
    }
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        for j in 0..=i {
            let c = op(a, list[j]);
            if !present[c as usize] {
                present[c as usize] = true;
                list.push(c);
            }
        }
        i += 1;
    }
    list.sort_unstable();
    list
}
