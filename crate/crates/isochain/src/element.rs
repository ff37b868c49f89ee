//! Partial injections of the finite chain `{1, ..., n}`.
//!
//! A [`PartialInjection`] is an injective map from a subset of the chain into
//! the chain, stored as pairs `(x, x_image)` sorted by domain point.
//! Composition is left to right: `x (a b) = (x a) b`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Number of points of the chain. `0` is allowed and carries a single
/// (empty) partial injection.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct ChainSize(u32);

impl ChainSize {
    pub fn new(n: u32) -> Self {
        ChainSize(n)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// The chain points `1..=n` in ascending order.
    pub fn points(self) -> std::ops::RangeInclusive<u32> {
        1..=self.0
    }
}

impl fmt::Display for ChainSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for ChainSize {
    fn from(n: u32) -> Self {
        ChainSize(n)
    }
}

/// Height, fixed-point count, and the extremes of image and domain.
///
/// Waists are the least and greatest image points, shoulders the least and
/// greatest domain points; all four are absent for the empty element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ElementStats {
    pub height: u32,
    pub fix: u32,
    pub left_waist: Option<u32>,
    pub right_waist: Option<u32>,
    pub left_shoulder: Option<u32>,
    pub right_shoulder: Option<u32>,
}

/// An injective partial self-map of the chain `{1, ..., n}`.
///
/// Values are immutable once constructed and always hold the invariants:
/// pairs sorted strictly ascending by domain point, all points within
/// `1..=n`, images pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPartialInjection", into = "RawPartialInjection")]
pub struct PartialInjection {
    n: ChainSize,
    pairs: Vec<(u32, u32)>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawPartialInjection {
    n: u32,
    pairs: Vec<(u32, u32)>,
}

impl TryFrom<RawPartialInjection> for PartialInjection {
    type Error = Error;

    fn try_from(raw: RawPartialInjection) -> Result<Self, Error> {
        PartialInjection::make(ChainSize::new(raw.n), raw.pairs)
    }
}

impl From<PartialInjection> for RawPartialInjection {
    fn from(el: PartialInjection) -> Self {
        RawPartialInjection {
            n: el.n.get(),
            pairs: el.pairs,
        }
    }
}

impl PartialInjection {
    /// Builds an element from unordered pairs, validating and sorting them.
    pub fn make(n: ChainSize, pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, Error> {
        let mut pairs: Vec<(u32, u32)> = pairs.into_iter().collect();
        for &(x, y) in &pairs {
            if x < 1 || x > n.get() || y < 1 || y > n.get() {
                return Err(Error::OutOfRange { n: n.get(), x, y });
            }
        }
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::NotFunctional {
                    x: w[1].0,
                    y: w[1].1,
                });
            }
        }
        let mut images: Vec<(u32, u32)> = pairs.iter().map(|&(x, y)| (y, x)).collect();
        images.sort_unstable();
        for w in images.windows(2) {
            if w[0].0 == w[1].0 {
                // Report the pair that is later in domain order.
                let x = w[0].1.max(w[1].1);
                return Err(Error::NotInjective { x, y: w[1].0 });
            }
        }
        Ok(PartialInjection { n, pairs })
    }

    /// The empty element on the given chain.
    pub fn empty(n: ChainSize) -> Self {
        PartialInjection {
            n,
            pairs: Vec::new(),
        }
    }

    /// The identity on a set of chain points (duplicates are collapsed).
    pub fn partial_identity(
        n: ChainSize,
        points: impl IntoIterator<Item = u32>,
    ) -> Result<Self, Error> {
        let mut points: Vec<u32> = points.into_iter().collect();
        points.sort_unstable();
        points.dedup();
        Self::make(n, points.into_iter().map(|x| (x, x)))
    }

    /// The identity on the whole chain.
    pub fn full_identity(n: ChainSize) -> Self {
        PartialInjection {
            n,
            pairs: n.points().map(|x| (x, x)).collect(),
        }
    }

    /// Constructor for generators that already guarantee the invariants.
    pub(crate) fn from_sorted_pairs_unchecked(n: ChainSize, pairs: Vec<(u32, u32)>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(pairs
            .iter()
            .all(|&(x, y)| (1..=n.get()).contains(&x) && (1..=n.get()).contains(&y)));
        debug_assert!({
            let mut ys: Vec<u32> = pairs.iter().map(|&(_, y)| y).collect();
            ys.sort_unstable();
            ys.windows(2).all(|w| w[0] < w[1])
        });
        PartialInjection { n, pairs }
    }

    pub fn n(&self) -> ChainSize {
        self.n
    }

    /// Pairs `(x, x_image)` sorted ascending by domain point.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// Number of points in the domain.
    pub fn height(&self) -> u32 {
        self.pairs.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The image of a domain point, if defined.
    pub fn apply(&self, x: u32) -> Option<u32> {
        self.pairs
            .binary_search_by_key(&x, |&(d, _)| d)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    /// Domain points, ascending.
    pub fn domain(&self) -> impl Iterator<Item = u32> + '_ {
        self.pairs.iter().map(|&(x, _)| x)
    }

    /// Image points, ascending.
    pub fn image_sorted(&self) -> Vec<u32> {
        let mut ys: Vec<u32> = self.pairs.iter().map(|&(_, y)| y).collect();
        ys.sort_unstable();
        ys
    }

    /// Image points in domain order (the sequence `x_1 a, ..., x_p a`).
    pub fn image_seq(&self) -> impl Iterator<Item = u32> + '_ {
        self.pairs.iter().map(|&(_, y)| y)
    }

    /// Left-to-right composition: `x (self other) = (x self) other`.
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        if self.n != other.n {
            return Err(Error::ChainMismatch {
                left: self.n.get(),
                right: other.n.get(),
            });
        }
        let pairs = self
            .pairs
            .iter()
            .filter_map(|&(x, y)| other.apply(y).map(|z| (x, z)))
            .collect();
        Ok(PartialInjection { n: self.n, pairs })
    }

    /// The inverse map, defined on the image.
    pub fn inverse(&self) -> Self {
        let mut pairs: Vec<(u32, u32)> = self.pairs.iter().map(|&(x, y)| (y, x)).collect();
        pairs.sort_unstable();
        PartialInjection { n: self.n, pairs }
    }

    pub fn stats(&self) -> ElementStats {
        ElementStats {
            height: self.height(),
            fix: self.pairs.iter().filter(|&&(x, y)| x == y).count() as u32,
            left_waist: self.pairs.iter().map(|&(_, y)| y).min(),
            right_waist: self.pairs.iter().map(|&(_, y)| y).max(),
            left_shoulder: self.pairs.first().map(|&(x, _)| x),
            right_shoulder: self.pairs.last().map(|&(x, _)| x),
        }
    }

    /// Fixed points, ascending.
    pub fn fixed_points(&self) -> Vec<u32> {
        self.pairs
            .iter()
            .filter(|&&(x, y)| x == y)
            .map(|&(x, _)| x)
            .collect()
    }

    /// Distances between points are preserved: `|x - y| = |xa - ya|`.
    pub fn is_isometry(&self) -> bool {
        for i in 0..self.pairs.len() {
            for j in i + 1..self.pairs.len() {
                let (xi, yi) = self.pairs[i];
                let (xj, yj) = self.pairs[j];
                if xj - xi != yi.abs_diff(yj) {
                    return false;
                }
            }
        }
        true
    }

    /// `x <= y` implies `xa <= ya`. Heights 0 and 1 qualify vacuously.
    pub fn is_order_preserving(&self) -> bool {
        self.pairs.windows(2).all(|w| w[0].1 <= w[1].1)
    }

    /// `x <= y` implies `xa >= ya`. Heights 0 and 1 qualify vacuously.
    pub fn is_order_reversing(&self) -> bool {
        self.pairs.windows(2).all(|w| w[0].1 >= w[1].1)
    }

    /// Every point maps at or below itself: `xa <= x`.
    pub fn is_order_decreasing(&self) -> bool {
        self.pairs.iter().all(|&(x, y)| y <= x)
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self).expect("same chain") == *self
    }

    pub fn is_partial_identity(&self) -> bool {
        self.pairs.iter().all(|&(x, y)| x == y)
    }

    /// Some power is the empty element.
    pub fn is_nilpotent(&self) -> bool {
        let mut power = self.clone();
        for _ in 0..self.n.get() {
            if power.is_empty() {
                return true;
            }
            power = power.compose(self).expect("same chain");
        }
        power.is_empty()
    }
}

/// Canonical order: ascending by height, then domain sequence, then image
/// sequence (both lexicographic). Elements on smaller chains sort first.
impl Ord for PartialInjection {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.pairs.len().cmp(&other.pairs.len()))
            .then_with(|| self.domain().cmp(other.domain()))
            .then_with(|| self.image_seq().cmp(other.image_seq()))
    }
}

impl PartialOrd for PartialInjection {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[n={}]", self.n)?;
        if self.pairs.is_empty() {
            return write!(f, " 0");
        }
        for &(x, y) in &self.pairs {
            write!(f, " {x}->{y}")?;
        }
        Ok(())
    }
}

impl FromStr for PartialInjection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let rest = s
            .trim()
            .strip_prefix("[n=")
            .ok_or_else(|| Error::Parse(format!("missing [n=..] prefix in {s:?}")))?;
        let (num, body) = rest
            .split_once(']')
            .ok_or_else(|| Error::Parse(format!("missing ] in {s:?}")))?;
        let n: u32 = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad chain size {num:?}")))?;
        let body = body.trim();
        if body == "0" {
            return Ok(PartialInjection::empty(ChainSize::new(n)));
        }
        if body.is_empty() {
            return Err(Error::Parse(format!("missing pair list in {s:?}")));
        }
        let mut pairs = Vec::new();
        for tok in body.split_whitespace() {
            let (x, y) = tok
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("bad pair token {tok:?}")))?;
            let x: u32 = x
                .parse()
                .map_err(|_| Error::Parse(format!("bad domain point {x:?}")))?;
            let y: u32 = y
                .parse()
                .map_err(|_| Error::Parse(format!("bad image point {y:?}")))?;
            pairs.push((x, y));
        }
        PartialInjection::make(ChainSize::new(n), pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: u32, pairs: &[(u32, u32)]) -> PartialInjection {
        PartialInjection::make(ChainSize::new(n), pairs.iter().copied()).unwrap()
    }

    #[test]
    fn make_sorts_and_validates() {
        let a = el(3, &[(3, 1), (2, 2)]);
        assert_eq!(a.pairs(), &[(2, 2), (3, 1)]);
        assert_eq!(
            PartialInjection::make(ChainSize::new(2), [(1, 3)]),
            Err(Error::OutOfRange { n: 2, x: 1, y: 3 })
        );
        assert_eq!(
            PartialInjection::make(ChainSize::new(2), [(0, 1)]),
            Err(Error::OutOfRange { n: 2, x: 0, y: 1 })
        );
        assert_eq!(
            PartialInjection::make(ChainSize::new(3), [(1, 1), (1, 2)]),
            Err(Error::NotFunctional { x: 1, y: 2 })
        );
        assert_eq!(
            PartialInjection::make(ChainSize::new(2), [(1, 2), (2, 2)]),
            Err(Error::NotInjective { x: 2, y: 2 })
        );
    }

    #[test]
    fn compose_is_left_to_right() {
        let a = el(3, &[(3, 1)]);
        let b = el(3, &[(2, 2), (3, 1)]);
        assert!(a.compose(&b).unwrap().is_empty());
        let up = el(3, &[(1, 2)]);
        let up2 = el(3, &[(2, 3)]);
        assert_eq!(up.compose(&up2).unwrap(), el(3, &[(1, 3)]));
        assert!(up2.compose(&up).unwrap().is_empty());
        let c = el(3, &[(1, 2), (2, 3)]);
        assert_eq!(c.compose(&c).unwrap(), el(3, &[(1, 3)]));
        assert_eq!(
            a.compose(&el(2, &[(1, 1)])),
            Err(Error::ChainMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn inverse_swaps_domain_and_image() {
        let a = el(4, &[(2, 2), (3, 1), (4, 4)]);
        assert_eq!(a.inverse().pairs(), &[(1, 3), (2, 2), (4, 4)]);
        assert_eq!(a.inverse().inverse(), a);
        let idem = a.compose(&a.inverse()).unwrap();
        assert!(idem.is_partial_identity());
        assert_eq!(
            idem,
            PartialInjection::partial_identity(a.n(), a.domain()).unwrap()
        );
    }

    #[test]
    fn stats_report_extremes() {
        let a = el(5, &[(2, 2), (4, 1), (5, 5)]);
        let s = a.stats();
        assert_eq!(s.height, 3);
        assert_eq!(s.fix, 2);
        assert_eq!((s.left_waist, s.right_waist), (Some(1), Some(5)));
        assert_eq!((s.left_shoulder, s.right_shoulder), (Some(2), Some(5)));
        let e = PartialInjection::empty(ChainSize::new(5)).stats();
        assert_eq!(e.height, 0);
        assert_eq!(e.fix, 0);
        assert_eq!(e.left_waist, None);
        assert_eq!(e.right_shoulder, None);
    }

    #[test]
    fn predicates_on_small_examples() {
        let refl = el(3, &[(2, 2), (3, 1)]);
        assert!(refl.is_isometry());
        assert!(!refl.is_order_preserving());
        assert!(refl.is_order_reversing());
        assert!(refl.is_order_decreasing());
        assert!(!refl.is_idempotent());

        let shift = el(3, &[(2, 1), (3, 2)]);
        assert!(shift.is_isometry());
        assert!(shift.is_order_preserving());
        assert!(shift.is_order_decreasing());
        assert!(shift.is_nilpotent());

        let skew = el(3, &[(1, 1), (3, 2)]);
        assert!(!skew.is_isometry());
        assert!(skew.is_order_decreasing());

        let id13 = el(3, &[(1, 1), (3, 3)]);
        assert!(id13.is_partial_identity());
        assert!(id13.is_idempotent());
        assert!(!id13.is_nilpotent());

        let empty = PartialInjection::empty(ChainSize::new(3));
        assert!(empty.is_isometry());
        assert!(empty.is_order_preserving());
        assert!(empty.is_order_reversing());
        assert!(empty.is_nilpotent());
        assert!(empty.is_idempotent());

        let single = el(3, &[(3, 1)]);
        assert!(single.is_order_preserving());
        assert!(single.is_order_reversing());
        assert!(single.is_nilpotent());
    }

    #[test]
    fn canonical_order_sorts_by_height_then_sequences() {
        let mut v = [
            el(3, &[(2, 2), (3, 3)]),
            el(3, &[(1, 1)]),
            PartialInjection::empty(ChainSize::new(3)),
            el(3, &[(2, 1), (3, 2)]),
            el(3, &[(2, 2), (3, 1)]),
            el(3, &[(2, 1)]),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|e| e.to_string()).collect();
        assert_eq!(
            shown,
            [
                "[n=3] 0",
                "[n=3] 1->1",
                "[n=3] 2->1",
                "[n=3] 2->1 3->2",
                "[n=3] 2->2 3->1",
                "[n=3] 2->2 3->3",
            ]
        );
    }

    #[test]
    fn text_form_round_trips() {
        for text in ["[n=3] 0", "[n=3] 2->2 3->1", "[n=0] 0", "[n=8] 1->1 8->8"] {
            let e: PartialInjection = text.parse().unwrap();
            assert_eq!(e.to_string(), text);
        }
        assert!("[n=3]".parse::<PartialInjection>().is_err());
        assert!("3: 1->1".parse::<PartialInjection>().is_err());
        assert!("[n=3] 1=>1".parse::<PartialInjection>().is_err());
        assert_eq!(
            "[n=2] 1->3".parse::<PartialInjection>(),
            Err(Error::OutOfRange { n: 2, x: 1, y: 3 })
        );
    }

    #[test]
    fn json_form_round_trips() {
        let a = el(3, &[(2, 2), (3, 1)]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"n":3,"pairs":[[2,2],[3,1]]}"#);
        let back: PartialInjection = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        assert!(
            serde_json::from_str::<PartialInjection>(r#"{"n":2,"pairs":[[1,2],[2,2]]}"#).is_err()
        );
    }

    #[test]
    fn nilpotent_matches_absence_of_cycles() {
        assert!(el(3, &[(3, 1)]).is_nilpotent());
        assert!(!el(3, &[(2, 2), (3, 1)]).is_nilpotent());
        assert!(!PartialInjection::full_identity(ChainSize::new(4)).is_nilpotent());
        // 1 -> 2 -> 1 is a cycle even though 3 -> 1 feeds into it.
        assert!(!el(3, &[(1, 2), (2, 1), (3, 3)]).is_nilpotent());
    }
}
