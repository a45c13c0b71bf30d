//! The relative (subspace) topology, built three independent ways.
//!
//! For `Y ⊆ X` the relative topology is `{U ∩ Y : U open in X}`. The direct
//! construction takes those traces as given. The canonical construction
//! re-derives closure under unions without picking arbitrary witnesses: for a
//! relatively open `V` there is a largest open `U*` with `U* ∩ Y = V` — the
//! union of all opens whose trace is `V` — and the identity
//! `(⋃ U*ᵢ) ∩ Y = ⋃ Vᵢ` certifies each union step. The third route goes
//! through the closure operation `Ã = Ā ∩ Y` and the operator → topology
//! correspondence. All three must agree; the verification sweeps check that
//! they do.
//!
//! Subspace carriers are re-indexed `0..|Y|` through an order-preserving
//! embedding, so subspace outputs are directly comparable and validatable;
//! the embedding keeps the original labels recoverable.

use std::fmt;

use thiserror::Error;

use crate::closure::{topology_from_closure, validate_kuratowski};
use crate::set::{compress_mask, expand_mask, Carrier, PointSet};
use crate::topology::Topology;

/// A subspace topology together with the relabeling into the parent carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceView {
    parent: Topology,
    ymask: PointSet,
    sub: Topology,
    embed: Vec<u8>,
}

impl SubspaceView {
    pub fn parent(&self) -> &Topology {
        &self.parent
    }

    /// The subset of the parent carrier this view restricts to.
    pub fn subset(&self) -> PointSet {
        self.ymask
    }

    /// The subspace topology, over a fresh carrier of size `|Y|`.
    pub fn sub(&self) -> &Topology {
        &self.sub
    }

    /// The order-preserving relabeling; `embed()[i]` is the parent point of
    /// subspace point `i`.
    pub fn embed(&self) -> &[u8] {
        &self.embed
    }

    /// Translates a subspace set into parent labels.
    pub fn embed_set(&self, s: PointSet) -> PointSet {
        assert_eq!(s.carrier(), self.sub.carrier(), "set lies over a different carrier");
        PointSet::from_mask_unchecked(
            self.parent.carrier(),
            expand_mask(s.mask(), self.ymask.mask()),
        )
    }

    /// Traces a parent set onto the subspace: `A ↦ A ∩ Y`, relabeled.
    pub fn restrict_set(&self, s: PointSet) -> PointSet {
        assert_eq!(s.carrier(), self.parent.carrier(), "set lies over a different carrier");
        PointSet::from_mask_unchecked(
            self.sub.carrier(),
            compress_mask(s.mask() & self.ymask.mask(), self.ymask.mask()),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubspaceError {
    #[error("carrier size {left} does not match carrier size {right}")]
    CarrierMismatch { left: u8, right: u8 },
    #[error("{v:?} is not a subset of {y:?}")]
    NotWithinSubset { v: PointSet, y: PointSet },
    #[error("{v:?} is not relatively open in {y:?}")]
    NotRelativelyOpen { v: PointSet, y: PointSet },
}

fn subspace_carrier(y: PointSet) -> Carrier {
    Carrier::new(y.cardinality() as u8).expect("subset of a valid carrier")
}

fn embedding(y: PointSet) -> Vec<u8> {
    y.points().collect()
}

/// Direct-image construction: `{U ∩ Y : U open}`, relabeled onto a carrier of
/// size `|Y|`. `Y = ∅` yields the unique empty-carrier topology `{∅}`.
pub fn subspace_topology(t: &Topology, y: PointSet) -> SubspaceView {
    assert_eq!(y.carrier(), t.carrier(), "subset lies over a different carrier");
    let ymask = y.mask();
    let opens: Vec<u16> = t
        .open_masks()
        .iter()
        .map(|&u| compress_mask(u & ymask, ymask))
        .collect();
    SubspaceView {
        parent: t.clone(),
        ymask: y,
        sub: Topology::from_open_masks(subspace_carrier(y), opens),
        embed: embedding(y),
    }
}

/// The largest open set whose trace on `y` is `v`: the union of every open
/// `W` with `W ∩ y = v`. Requires `v ⊆ y` and `v` relatively open.
pub fn maximal_open_representative(
    t: &Topology,
    y: PointSet,
    v: PointSet,
) -> Result<PointSet, SubspaceError> {
    if y.carrier() != t.carrier() || v.carrier() != t.carrier() {
        return Err(SubspaceError::CarrierMismatch {
            left: v.carrier().size(),
            right: t.carrier().size(),
        });
    }
    if v.mask() & !y.mask() != 0 {
        return Err(SubspaceError::NotWithinSubset { v, y });
    }
    let mut acc = 0u16;
    let mut found = false;
    for &w in t.open_masks() {
        if w & y.mask() == v.mask() {
            acc |= w;
            found = true;
        }
    }
    if !found {
        return Err(SubspaceError::NotRelativelyOpen { v, y });
    }
    Ok(PointSet::from_mask_unchecked(t.carrier(), acc))
}

/// One instantiated union identity `(U*₁ ∪ U*₂) ∩ Y = V₁ ∪ V₂`, with both
/// sides evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnionIdentity {
    pub v1: PointSet,
    pub v2: PointSet,
    pub rep1: PointSet,
    pub rep2: PointSet,
    /// `(rep1 ∪ rep2) ∩ Y`.
    pub traced_union: PointSet,
    /// `v1 ∪ v2`.
    pub direct_union: PointSet,
}

impl UnionIdentity {
    pub fn holds(&self) -> bool {
        self.traced_union == self.direct_union
    }
}

/// The certificate of the canonical construction: for every pairwise union of
/// relatively open sets, the representative identity it rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCertificate {
    subset: PointSet,
    identities: Vec<UnionIdentity>,
}

impl CanonicalCertificate {
    pub fn subset(&self) -> PointSet {
        self.subset
    }

    /// Identities ordered by `(v1, v2)` mask.
    pub fn identities(&self) -> &[UnionIdentity] {
        &self.identities
    }

    pub fn all_hold(&self) -> bool {
        self.identities.iter().all(UnionIdentity::holds)
    }

    /// The distinct representatives referenced, ascending by trace mask.
    pub fn representatives(&self) -> Vec<(PointSet, PointSet)> {
        let mut reps: Vec<(PointSet, PointSet)> = Vec::new();
        for id in &self.identities {
            for pair in [(id.v1, id.rep1), (id.v2, id.rep2)] {
                if !reps.contains(&pair) {
                    reps.push(pair);
                }
            }
        }
        reps.sort();
        reps
    }

    /// Canonical text form: one line per representative, then one line per
    /// verified identity, ordered by mask.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (v, rep) in self.representatives() {
            out.push_str(&format!("U*({v}) = {rep}\n"));
        }
        for id in &self.identities {
            let verdict = if id.holds() { "ok" } else { "FAIL" };
            out.push_str(&format!(
                "(U*({}) ∪ U*({})) ∩ {} = {} ∪ {} = {} : {}\n",
                id.v1, id.v2, self.subset, id.v1, id.v2, id.traced_union, verdict
            ));
        }
        out
    }
}

impl fmt::Display for CanonicalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Canonical-representative construction. Computes the same subspace topology
/// as [`subspace_topology`], but re-runs the union-closure step through the
/// maximal representatives and records the identity each union rests on.
pub fn subspace_topology_canonical(t: &Topology, y: PointSet) -> (SubspaceView, CanonicalCertificate) {
    assert_eq!(y.carrier(), t.carrier(), "subset lies over a different carrier");
    let ymask = y.mask();

    // relatively open traces, in parent labels, ascending
    let mut traces: Vec<u16> = t.open_masks().iter().map(|&u| u & ymask).collect();
    traces.sort_unstable();
    traces.dedup();

    let rep = |vmask: u16| {
        maximal_open_representative(t, y, PointSet::from_mask_unchecked(t.carrier(), vmask))
            .expect("every trace is relatively open")
    };

    let mut identities = Vec::new();
    let mut opens: Vec<u16> = Vec::new();
    for (i, &v1) in traces.iter().enumerate() {
        opens.push(compress_mask(v1, ymask));
        let rep1 = rep(v1);
        for &v2 in &traces[i + 1..] {
            let rep2 = rep(v2);
            let traced = (rep1.mask() | rep2.mask()) & ymask;
            identities.push(UnionIdentity {
                v1: PointSet::from_mask_unchecked(t.carrier(), v1),
                v2: PointSet::from_mask_unchecked(t.carrier(), v2),
                rep1,
                rep2,
                traced_union: PointSet::from_mask_unchecked(t.carrier(), traced),
                direct_union: PointSet::from_mask_unchecked(t.carrier(), v1 | v2),
            });
            // the union the identity certifies is itself relatively open
            opens.push(compress_mask(v1 | v2, ymask));
        }
    }

    let view = SubspaceView {
        parent: t.clone(),
        ymask: y,
        sub: Topology::from_open_masks(subspace_carrier(y), opens),
        embed: embedding(y),
    };
    let certificate = CanonicalCertificate { subset: y, identities };
    (view, certificate)
}

/// Closure-operator construction: builds `Ã = Ā ∩ Y` on subsets of `Y`,
/// validates it as a Kuratowski operation, and converts it to a topology.
pub fn subspace_via_closure(t: &Topology, y: PointSet) -> SubspaceView {
    assert_eq!(y.carrier(), t.carrier(), "subset lies over a different carrier");
    let ymask = y.mask();
    let sub_carrier = subspace_carrier(y);
    let table: Vec<u16> = (0..sub_carrier.subset_count())
        .map(|a| {
            let lifted = expand_mask(a as u16, ymask);
            compress_mask(t.closure_mask(lifted) & ymask, ymask)
        })
        .collect();
    let op = validate_kuratowski(sub_carrier, &table)
        .expect("the trace of a closure operation is a closure operation");
    SubspaceView {
        parent: t.clone(),
        ymask: y,
        sub: topology_from_closure(&op),
        embed: embedding(y),
    }
}
