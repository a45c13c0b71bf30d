//! Exhaustive and randomized generation of topologies on small carriers.
//!
//! Two independent generators back every "for all topologies" sweep, so that
//! neither is trusted alone: a brute-force pass over every subset-family of
//! the powerset, and an enumeration of preorders mapped through the
//! specialization correspondence (opens = up-closed sets). Disagreement
//! between the two fails the build. Past enumerable sizes, a seeded
//! subbasis generator supplies deterministic random topologies up to the
//! 16-point cap.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::set::Carrier;
use crate::topology::{generate_from_subbasis, validate, Topology};

/// Largest carrier for the brute-force family sweep (`2^(2^n)` candidates).
pub const BRUTE_LIMIT: u8 = 4;
/// Largest carrier for preorder enumeration (`2^(n²-n)` candidates).
pub const PREORDER_LIMIT: u8 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CensusMethod {
    Brute,
    Preorder,
}

impl fmt::Display for CensusMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusMethod::Brute => write!(f, "brute"),
            CensusMethod::Preorder => write!(f, "preorder"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("carrier size {n} exceeds the {limit}-point limit of {method} enumeration")]
    OverLimit { n: u8, method: CensusMethod, limit: u8 },
}

/// The canonical list of all labeled topologies on `n` points: each
/// topology's open masks ascending, topologies sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyCensus {
    n: u8,
    method: CensusMethod,
    topologies: Vec<Topology>,
}

impl TopologyCensus {
    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn method(&self) -> CensusMethod {
        self.method
    }

    pub fn len(&self) -> usize {
        self.topologies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.topologies.is_empty()
    }

    pub fn topologies(&self) -> &[Topology] {
        &self.topologies
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Topology> {
        self.topologies.iter()
    }
}

impl<'a> IntoIterator for &'a TopologyCensus {
    type Item = &'a Topology;
    type IntoIter = std::slice::Iter<'a, Topology>;

    fn into_iter(self) -> Self::IntoIter {
        self.topologies.iter()
    }
}

/// Tests every subset-family of the powerset with [`validate`] and keeps
/// exactly the valid ones.
pub fn enumerate_brute(n: u8) -> Result<TopologyCensus, CensusError> {
    if n > BRUTE_LIMIT {
        return Err(CensusError::OverLimit { n, method: CensusMethod::Brute, limit: BRUTE_LIMIT });
    }
    let carrier = Carrier::new(n).expect("within the carrier cap");
    let subsets = carrier.subset_count();
    let full_bit = carrier.full_mask() as u32;

    let mut topologies = Vec::new();
    for code in 0u64..1u64 << subsets {
        // every topology contains ∅ and the full carrier; cheap pre-filter
        if code & 1 == 0 || code >> full_bit & 1 == 0 {
            continue;
        }
        let family: Vec<_> = (0..subsets as u16)
            .filter(|&m| code >> m & 1 == 1)
            .map(|m| crate::set::PointSet::from_mask_unchecked(carrier, m))
            .collect();
        if let Ok(t) = validate(carrier, &family) {
            topologies.push(t);
        }
    }
    topologies.sort_unstable();
    Ok(TopologyCensus { n, method: CensusMethod::Brute, topologies })
}

/// Enumerates reflexive transitive relations and maps each to its Alexandrov
/// topology: a set is open iff it is up-closed under the relation. The
/// correspondence is one-to-one, so no deduplication is needed.
pub fn enumerate_preorder(n: u8) -> Result<TopologyCensus, CensusError> {
    if n > PREORDER_LIMIT {
        return Err(CensusError::OverLimit {
            n,
            method: CensusMethod::Preorder,
            limit: PREORDER_LIMIT,
        });
    }
    let carrier = Carrier::new(n).expect("within the carrier cap");
    let size = n as usize;
    let off_diagonal = size * size - size;

    let mut topologies = Vec::new();
    let mut up = vec![0u16; size]; // up[i] = {j : i ≤ j}
    'relation: for code in 0u64..1u64 << off_diagonal {
        let mut bit = 0;
        for (i, slot) in up.iter_mut().enumerate() {
            let mut row = 1u16 << i; // reflexive
            for j in 0..size {
                if i != j {
                    if code >> bit & 1 == 1 {
                        row |= 1 << j;
                    }
                    bit += 1;
                }
            }
            *slot = row;
        }
        // transitivity: j ∈ up[i] requires up[j] ⊆ up[i]
        for i in 0..size {
            for j in 0..size {
                if up[i] >> j & 1 == 1 && up[j] & !up[i] != 0 {
                    continue 'relation;
                }
            }
        }
        let opens: Vec<u16> = (0..carrier.subset_count() as u16)
            .filter(|&m| (0..size).all(|i| m >> i & 1 == 0 || up[i] & !m == 0))
            .collect();
        topologies.push(Topology::from_open_masks(carrier, opens));
    }
    topologies.sort_unstable();
    debug_assert!(topologies.windows(2).all(|w| w[0] != w[1]));
    Ok(TopologyCensus { n, method: CensusMethod::Preorder, topologies })
}

/// Deterministic random topology: draws a family of `k ≤ 2n` subsets from a
/// seeded generator and closes it into a topology. Same seed, same result.
pub fn random_topology(carrier: Carrier, seed: u64) -> Topology {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(0..=2 * carrier.size() as usize);
    let family: Vec<_> = (0..k)
        .map(|_| {
            let mask = rng.gen_range(0..=carrier.full_mask());
            crate::set::PointSet::from_mask_unchecked(carrier, mask)
        })
        .collect();
    generate_from_subbasis(carrier, &family)
}
