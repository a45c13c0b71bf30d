//! Carriers and bitmask subsets with exact set algebra.
//!
//! A [`Carrier`] is a finite point set `{0, .., n-1}` with `n ≤ 16`; a
//! [`PointSet`] is a subset of a carrier encoded as a bitmask (bit `i` set ⇔
//! point `i` is a member). The 16-point cap keeps every powerset-indexed
//! structure — open-family membership bitsets, closure tables with `2^n`
//! entries — exact and in memory.

use std::fmt;

use thiserror::Error;

/// Largest admissible carrier size.
pub const MAX_POINTS: u8 = 16;

/// Errors from carrier construction and binary set operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("carrier size {size} exceeds the maximum of {MAX_POINTS}")]
    CarrierTooLarge { size: usize },
    #[error("carrier size {left} does not match carrier size {right}")]
    CarrierMismatch { left: u8, right: u8 },
    #[error("point {point} is outside the carrier of size {size}")]
    PointOutOfRange { point: u8, size: u8 },
}

/// A finite carrier of points labeled `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Carrier {
    size: u8,
}

impl Carrier {
    pub fn new(size: u8) -> Result<Self, SetError> {
        if size > MAX_POINTS {
            return Err(SetError::CarrierTooLarge { size: size as usize });
        }
        Ok(Carrier { size })
    }

    pub fn size(self) -> u8 {
        self.size
    }

    /// Number of subsets, `2^size`.
    pub fn subset_count(self) -> usize {
        1usize << self.size
    }

    /// Bitmask with every point set.
    pub fn full_mask(self) -> u16 {
        ((1u32 << self.size) - 1) as u16
    }

    pub fn empty_set(self) -> PointSet {
        PointSet { carrier: self, mask: 0 }
    }

    pub fn full_set(self) -> PointSet {
        PointSet { carrier: self, mask: self.full_mask() }
    }

    pub fn singleton(self, point: u8) -> Result<PointSet, SetError> {
        if point >= self.size {
            return Err(SetError::PointOutOfRange { point, size: self.size });
        }
        Ok(PointSet { carrier: self, mask: 1 << point })
    }

    pub fn set_of(self, points: &[u8]) -> Result<PointSet, SetError> {
        let mut mask = 0u16;
        for &p in points {
            if p >= self.size {
                return Err(SetError::PointOutOfRange { point: p, size: self.size });
            }
            mask |= 1 << p;
        }
        Ok(PointSet { carrier: self, mask })
    }

    pub fn points(self) -> impl Iterator<Item = u8> {
        0..self.size
    }

    /// All `2^size` subsets in ascending mask order.
    pub fn all_subsets(self) -> impl Iterator<Item = PointSet> {
        (0..self.subset_count()).map(move |m| PointSet { carrier: self, mask: m as u16 })
    }
}

/// A subset of a carrier, with value semantics: two sets are equal iff they
/// share the carrier size and the mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    carrier: Carrier,
    mask: u16,
}

impl PointSet {
    pub fn from_mask(carrier: Carrier, mask: u16) -> Result<Self, SetError> {
        if mask & !carrier.full_mask() != 0 {
            let point = (mask & !carrier.full_mask()).trailing_zeros() as u8;
            return Err(SetError::PointOutOfRange { point, size: carrier.size });
        }
        Ok(PointSet { carrier, mask })
    }

    /// Constructor for masks already known to lie within the carrier.
    pub(crate) fn from_mask_unchecked(carrier: Carrier, mask: u16) -> Self {
        debug_assert_eq!(mask & !carrier.full_mask(), 0);
        PointSet { carrier, mask }
    }

    pub fn carrier(self) -> Carrier {
        self.carrier
    }

    pub fn mask(self) -> u16 {
        self.mask
    }

    pub fn contains(self, point: u8) -> bool {
        point < self.carrier.size && self.mask >> point & 1 == 1
    }

    pub fn cardinality(self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn points(self) -> impl Iterator<Item = u8> {
        let mask = self.mask;
        (0..self.carrier.size).filter(move |&p| mask >> p & 1 == 1)
    }

    fn check_carrier(self, other: PointSet) -> Result<(), SetError> {
        if self.carrier != other.carrier {
            return Err(SetError::CarrierMismatch {
                left: self.carrier.size,
                right: other.carrier.size,
            });
        }
        Ok(())
    }

    /// Membership is the logical-or of memberships.
    pub fn union(self, other: PointSet) -> Result<PointSet, SetError> {
        self.check_carrier(other)?;
        Ok(PointSet { carrier: self.carrier, mask: self.mask | other.mask })
    }

    /// Membership is the logical-and of memberships.
    pub fn intersect(self, other: PointSet) -> Result<PointSet, SetError> {
        self.check_carrier(other)?;
        Ok(PointSet { carrier: self.carrier, mask: self.mask & other.mask })
    }

    /// Membership flipped within the carrier; an involution.
    pub fn complement(self) -> PointSet {
        PointSet {
            carrier: self.carrier,
            mask: !self.mask & self.carrier.full_mask(),
        }
    }

    /// Mask inclusion; `a ⊆ b ⇔ a ∩ b = a`.
    pub fn is_subset_of(self, other: PointSet) -> Result<bool, SetError> {
        self.check_carrier(other)?;
        Ok(self.mask & !other.mask == 0)
    }

    /// Parses either an element list `"{0,2,3}"` or a bitstring `"1011"`
    /// (least-significant bit, the rightmost character, is point 0).
    pub fn parse(carrier: Carrier, input: &str) -> Result<Self, ParsePointSetError> {
        let trimmed = input.trim();
        if trimmed.starts_with('{') {
            Self::parse_element_list(carrier, trimmed)
        } else {
            Self::parse_bitstring(carrier, trimmed)
        }
    }

    pub fn parse_element_list(carrier: Carrier, input: &str) -> Result<Self, ParsePointSetError> {
        let trimmed = input.trim();
        let inner = trimmed
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| ParsePointSetError::Syntax(trimmed.to_string()))?;
        let mut mask = 0u16;
        for token in inner.split(',') {
            let token = token.trim();
            if token.is_empty() {
                if inner.trim().is_empty() {
                    break; // "{}"
                }
                return Err(ParsePointSetError::Syntax(trimmed.to_string()));
            }
            let point: u32 = token
                .parse()
                .map_err(|_| ParsePointSetError::Element(token.to_string()))?;
            if point >= carrier.size as u32 {
                return Err(ParsePointSetError::OutOfRange { point, size: carrier.size });
            }
            mask |= 1 << point;
        }
        Ok(PointSet { carrier, mask })
    }

    pub fn parse_bitstring(carrier: Carrier, input: &str) -> Result<Self, ParsePointSetError> {
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Err(ParsePointSetError::Empty);
        }
        if trimmed.len() > carrier.size as usize {
            return Err(ParsePointSetError::BitstringTooLong {
                len: trimmed.len(),
                size: carrier.size,
            });
        }
        let mut mask = 0u16;
        for (i, ch) in trimmed.chars().rev().enumerate() {
            match ch {
                '0' => {}
                '1' => mask |= 1 << i,
                other => return Err(ParsePointSetError::Bit(other)),
            }
        }
        Ok(PointSet { carrier, mask })
    }
}

/// Emits the element-list form, e.g. `{0,2,3}`; the empty set is `{}`.
impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for p in self.points() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊆[n={}]", self, self.carrier.size)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePointSetError {
    #[error("empty input")]
    Empty,
    #[error("expected '{{a,b,..}}' or a bitstring, got {0:?}")]
    Syntax(String),
    #[error("invalid element {0:?}")]
    Element(String),
    #[error("point {point} is outside the carrier of size {size}")]
    OutOfRange { point: u32, size: u8 },
    #[error("bitstring of length {len} does not fit a carrier of size {size}")]
    BitstringTooLong { len: usize, size: u8 },
    #[error("invalid bit {0:?}")]
    Bit(char),
}

/// Repacks the bits of `mask` selected by `within` into the low positions.
/// Point `p` of `within` (in ascending order) becomes bit `rank(p)`.
pub(crate) fn compress_mask(mask: u16, within: u16) -> u16 {
    debug_assert_eq!(mask & !within, 0);
    let mut out = 0u16;
    let mut k = 0;
    for p in 0..MAX_POINTS {
        if within >> p & 1 == 1 {
            if mask >> p & 1 == 1 {
                out |= 1 << k;
            }
            k += 1;
        }
    }
    out
}

/// Inverse of [`compress_mask`]: spreads the low bits of `mask` onto the
/// positions selected by `within`.
pub(crate) fn expand_mask(mask: u16, within: u16) -> u16 {
    let mut out = 0u16;
    let mut k = 0;
    for p in 0..MAX_POINTS {
        if within >> p & 1 == 1 {
            if mask >> k & 1 == 1 {
                out |= 1 << p;
            }
            k += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn carrier(n: u8) -> Carrier {
        Carrier::new(n).unwrap()
    }

    #[test]
    fn carrier_cap() {
        assert!(Carrier::new(16).is_ok());
        assert_eq!(Carrier::new(17), Err(SetError::CarrierTooLarge { size: 17 }));
    }

    #[test]
    fn union_examples() {
        let c = carrier(2);
        let a = c.singleton(0).unwrap();
        let b = c.singleton(1).unwrap();
        assert_eq!(a.union(b).unwrap(), c.set_of(&[0, 1]).unwrap());

        let c3 = carrier(3);
        let x = c3.set_of(&[0, 1]).unwrap();
        let y = c3.set_of(&[1, 2]).unwrap();
        assert_eq!(x.union(y).unwrap(), c3.set_of(&[0, 1, 2]).unwrap());

        for a in c3.all_subsets() {
            assert_eq!(a.union(c3.empty_set()).unwrap(), a);
        }
    }

    #[test]
    fn intersect_examples() {
        let c = carrier(2);
        let a = c.singleton(0).unwrap();
        let b = c.singleton(1).unwrap();
        assert_eq!(a.intersect(b).unwrap(), c.empty_set());

        let c3 = carrier(3);
        let x = c3.set_of(&[0, 1]).unwrap();
        let y = c3.set_of(&[1, 2]).unwrap();
        assert_eq!(x.intersect(y).unwrap(), c3.singleton(1).unwrap());

        for a in c3.all_subsets() {
            assert_eq!(a.intersect(c3.full_set()).unwrap(), a);
        }
    }

    #[test]
    fn complement_examples() {
        let c3 = carrier(3);
        assert_eq!(c3.empty_set().complement(), c3.full_set());
        assert_eq!(c3.full_set().complement(), c3.empty_set());
        let c2 = carrier(2);
        assert_eq!(c2.singleton(0).unwrap().complement(), c2.singleton(1).unwrap());
        for a in c3.all_subsets() {
            assert_eq!(a.complement().complement(), a);
        }
    }

    #[test]
    fn carrier_mismatch_is_an_error() {
        let a = carrier(2).empty_set();
        let b = carrier(3).empty_set();
        assert_eq!(a.union(b), Err(SetError::CarrierMismatch { left: 2, right: 3 }));
        assert_eq!(a.intersect(b), Err(SetError::CarrierMismatch { left: 2, right: 3 }));
        assert_eq!(a.is_subset_of(b), Err(SetError::CarrierMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn all_subsets_order_and_count() {
        assert_eq!(carrier(0).all_subsets().count(), 1);
        let c1: Vec<_> = carrier(1).all_subsets().collect();
        assert_eq!(c1, vec![carrier(1).empty_set(), carrier(1).full_set()]);
        let c2: Vec<_> = carrier(2).all_subsets().map(|s| s.mask()).collect();
        assert_eq!(c2, vec![0b00, 0b01, 0b10, 0b11]);
        for n in 0..=4u8 {
            let subsets: Vec<_> = carrier(n).all_subsets().collect();
            assert_eq!(subsets.len(), 1 << n);
            let mut dedup = subsets.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), subsets.len());
        }
    }

    // Boolean-algebra laws, exhaustive for n ≤ 3.
    #[test]
    fn algebra_laws_exhaustive() {
        for n in 0..=3u8 {
            let c = carrier(n);
            for a in c.all_subsets() {
                for b in c.all_subsets() {
                    assert_eq!(a.union(b).unwrap(), b.union(a).unwrap());
                    assert_eq!(a.intersect(b).unwrap(), b.intersect(a).unwrap());
                    // De Morgan
                    assert_eq!(
                        a.union(b).unwrap().complement(),
                        a.complement().intersect(b.complement()).unwrap()
                    );
                    assert_eq!(
                        a.intersect(b).unwrap().complement(),
                        a.complement().union(b.complement()).unwrap()
                    );
                    // a ⊆ b ⇔ a ∩ b = a
                    assert_eq!(
                        a.is_subset_of(b).unwrap(),
                        a.intersect(b).unwrap() == a
                    );
                    for x in c.all_subsets() {
                        assert_eq!(
                            a.union(b).unwrap().union(x).unwrap(),
                            a.union(b.union(x).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.intersect(b).unwrap().intersect(x).unwrap(),
                            a.intersect(b.intersect(x).unwrap()).unwrap()
                        );
                    }
                }
                assert_eq!(a.union(a).unwrap(), a);
                assert_eq!(a.intersect(a).unwrap(), a);
            }
        }
    }

    #[test]
    fn subset_is_partial_order() {
        let c = carrier(3);
        for a in c.all_subsets() {
            assert!(a.is_subset_of(a).unwrap());
            for b in c.all_subsets() {
                if a.is_subset_of(b).unwrap() && b.is_subset_of(a).unwrap() {
                    assert_eq!(a, b);
                }
                for x in c.all_subsets() {
                    if a.is_subset_of(b).unwrap() && b.is_subset_of(x).unwrap() {
                        assert!(a.is_subset_of(x).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn parse_element_list() {
        let c = carrier(4);
        assert_eq!(PointSet::parse(c, "{}").unwrap(), c.empty_set());
        assert_eq!(PointSet::parse(c, "{0,2,3}").unwrap(), c.set_of(&[0, 2, 3]).unwrap());
        assert_eq!(PointSet::parse(c, "{ 1, 2 }").unwrap(), c.set_of(&[1, 2]).unwrap());
        assert!(matches!(
            PointSet::parse(carrier(2), "{5}"),
            Err(ParsePointSetError::OutOfRange { point: 5, size: 2 })
        ));
        assert!(PointSet::parse(c, "{1,").is_err());
    }

    #[test]
    fn parse_bitstring() {
        let c = carrier(4);
        // rightmost character is point 0
        assert_eq!(PointSet::parse(c, "1011").unwrap(), c.set_of(&[0, 1, 3]).unwrap());
        assert_eq!(PointSet::parse(c, "0").unwrap(), c.empty_set());
        assert!(matches!(
            PointSet::parse(carrier(2), "101"),
            Err(ParsePointSetError::BitstringTooLong { len: 3, size: 2 })
        ));
        assert!(matches!(PointSet::parse(c, "10x1"), Err(ParsePointSetError::Bit('x'))));
    }

    #[test]
    fn display_roundtrip() {
        let c = carrier(5);
        for s in c.all_subsets() {
            let text = s.to_string();
            assert_eq!(PointSet::parse(c, &text).unwrap(), s);
        }
        assert_eq!(c.empty_set().to_string(), "{}");
        assert_eq!(c.set_of(&[0, 2, 3]).unwrap().to_string(), "{0,2,3}");
    }

    #[test]
    fn compress_expand_inverse() {
        let within = 0b10110u16;
        assert_eq!(compress_mask(0b10010, within), 0b101);
        assert_eq!(expand_mask(0b101, within), 0b10010);
        for sub in 0u16..8 {
            assert_eq!(compress_mask(expand_mask(sub, within), within), sub);
        }
    }
}
