//! The six element families and their enumerators.
//!
//! `enumerate_oracle` walks every partial injection of the chain and keeps
//! the members of the requested family; it is the reference enumerator.
//! `enumerate_fast` builds the order-decreasing isometry families directly
//! from their shape: an order-preserving member translates its whole domain
//! down by a constant shift, and an order-reversing member of height at
//! least two reflects its domain through a constant point sum. Both return
//! the same canonically sorted sequence.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::element::{ChainSize, PartialInjection};
use crate::error::Error;

/// Largest chain size the enumerators accept unless a caller raises it.
pub const DEFAULT_CEILING: u32 = 8;

/// The supported families of partial injections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    /// All partial injections.
    #[serde(rename = "i")]
    FullSymmetricInverse,
    /// Order-decreasing partial injections.
    #[serde(rename = "iminus")]
    DecreasingInjective,
    /// Partial isometries.
    #[serde(rename = "dp")]
    Isometry,
    /// Order-preserving partial isometries.
    #[serde(rename = "odp")]
    OrderPreservingIsometry,
    /// Order-decreasing partial isometries.
    #[serde(rename = "ddp")]
    DecreasingIsometry,
    /// Order-preserving and order-decreasing partial isometries.
    #[serde(rename = "oddp")]
    OrderPreservingDecreasingIsometry,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::FullSymmetricInverse,
        FamilyId::DecreasingInjective,
        FamilyId::Isometry,
        FamilyId::OrderPreservingIsometry,
        FamilyId::DecreasingIsometry,
        FamilyId::OrderPreservingDecreasingIsometry,
    ];

    pub fn cli_id(self) -> &'static str {
        match self {
            FamilyId::FullSymmetricInverse => "i",
            FamilyId::DecreasingInjective => "iminus",
            FamilyId::Isometry => "dp",
            FamilyId::OrderPreservingIsometry => "odp",
            FamilyId::DecreasingIsometry => "ddp",
            FamilyId::OrderPreservingDecreasingIsometry => "oddp",
        }
    }

    /// Membership test by the defining predicates.
    pub fn member(self, el: &PartialInjection) -> bool {
        match self {
            FamilyId::FullSymmetricInverse => true,
            FamilyId::DecreasingInjective => el.is_order_decreasing(),
            FamilyId::Isometry => el.is_isometry(),
            FamilyId::OrderPreservingIsometry => el.is_isometry() && el.is_order_preserving(),
            FamilyId::DecreasingIsometry => el.is_isometry() && el.is_order_decreasing(),
            FamilyId::OrderPreservingDecreasingIsometry => {
                el.is_isometry() && el.is_order_preserving() && el.is_order_decreasing()
            }
        }
    }

    /// Whether `enumerate_fast` covers this family.
    pub fn has_fast_enumerator(self) -> bool {
        matches!(
            self,
            FamilyId::DecreasingIsometry | FamilyId::OrderPreservingDecreasingIsometry
        )
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_id())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        FamilyId::ALL
            .into_iter()
            .find(|fam| fam.cli_id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

fn check_ceiling(n: ChainSize, ceiling: u32) -> Result<(), Error> {
    if n.get() > ceiling {
        return Err(Error::CeilingExceeded {
            what: "chain size",
            actual: n.get(),
            limit: ceiling,
        });
    }
    Ok(())
}

/// Every partial injection of the chain, by ascending domain size, domains
/// and image subsets in lexicographic order, image arrangements likewise.
pub(crate) fn all_partial_injections(n: ChainSize) -> Vec<PartialInjection> {
    let points: Vec<u32> = n.points().collect();
    let mut out = Vec::new();
    for k in 0..=points.len() {
        for domain in points.iter().copied().combinations(k) {
            // permutations(k) yields every injective k-arrangement of images.
            for arrangement in points.iter().copied().permutations(k) {
                let pairs: Vec<(u32, u32)> = domain.iter().copied().zip(arrangement).collect();
                out.push(PartialInjection::from_sorted_pairs_unchecked(n, pairs));
            }
        }
    }
    out
}

/// Reference enumerator: filter all partial injections by membership.
/// Output is canonically sorted.
pub fn enumerate_oracle(
    family: FamilyId,
    n: ChainSize,
    ceiling: u32,
) -> Result<Vec<PartialInjection>, Error> {
    check_ceiling(n, ceiling)?;
    let mut out: Vec<PartialInjection> = all_partial_injections(n)
        .into_iter()
        .filter(|el| family.member(el))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Shape-driven enumerator for the order-decreasing isometry families.
/// Output is canonically sorted and free of duplicates.
pub fn enumerate_fast(
    family: FamilyId,
    n: ChainSize,
    ceiling: u32,
) -> Result<Vec<PartialInjection>, Error> {
    check_ceiling(n, ceiling)?;
    let mut out = match family {
        FamilyId::OrderPreservingDecreasingIsometry => down_translations(n),
        FamilyId::DecreasingIsometry => {
            let mut v = down_translations(n);
            v.extend(down_reflections(n));
            v
        }
        other => return Err(Error::UnsupportedFamily { family: other }),
    };
    out.sort_unstable();
    Ok(out)
}

/// Maps `x -> x - k` on a domain inside `{k+1, ..., n}`, for every shift
/// `k >= 0`. The empty element is emitted exactly once.
fn down_translations(n: ChainSize) -> Vec<PartialInjection> {
    let n_u = n.get();
    let mut out = vec![PartialInjection::empty(n)];
    for k in 0..n_u {
        let window: Vec<u32> = (k + 1..=n_u).collect();
        for size in 1..=window.len() {
            for domain in window.iter().copied().combinations(size) {
                let pairs = domain.into_iter().map(|x| (x, x - k)).collect();
                out.push(PartialInjection::from_sorted_pairs_unchecked(n, pairs));
            }
        }
    }
    out
}

/// Maps `x -> c - x` on a domain of at least two points inside the window
/// where the reflection stays decreasing and inside the chain. Heights 0
/// and 1 are omitted: those reflections are already translations.
fn down_reflections(n: ChainSize) -> Vec<PartialInjection> {
    let n_u = n.get();
    let mut out = Vec::new();
    for c in 2..=2 * n_u {
        let lo = c.div_ceil(2);
        let hi = (c - 1).min(n_u);
        if hi < lo + 1 {
            continue;
        }
        let window: Vec<u32> = (lo..=hi).collect();
        for size in 2..=window.len() {
            for domain in window.iter().copied().combinations(size) {
                let pairs = domain.into_iter().map(|x| (x, c - x)).collect();
                out.push(PartialInjection::from_sorted_pairs_unchecked(n, pairs));
            }
        }
    }
    out
}
