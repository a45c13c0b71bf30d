//! Deterministic inputs for the enumeration and construction benchmarks.

use fintop::set::{Carrier, PointSet};
use fintop::topology::Topology;

/// Seeded topologies on an `n`-point carrier, one per seed.
pub fn seeded_topologies(n: u8, seeds: std::ops::Range<u64>) -> Vec<Topology> {
    let carrier = Carrier::new(n).expect("within the carrier cap");
    seeds.map(|s| fintop::random_topology(carrier, s)).collect()
}

/// A mid-density subset of the carrier, fixed per size.
pub fn sample_subset(carrier: Carrier) -> PointSet {
    let mask = carrier.full_mask() & 0b0101_0101_0101_0101;
    PointSet::from_mask(carrier, mask).expect("within the carrier")
}
