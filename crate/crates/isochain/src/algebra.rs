//! Finite-semigroup structure of the enumerated families: Green's
//! relations and their starred refinements, regularity, abundance and
//! ampleness, the two zero-related properties, and Rees quotients by
//! height.
//!
//! A [`FiniteSemigroup`] is an explicit, closure-verified element list with
//! its Cayley table (kept on demand for large carriers). Witness-producing
//! scans walk elements in the canonical order so failure output is
//! deterministic; the one exception, the idempotent loop of
//! [`FiniteSemigroup::is_zero_e_unitary`], is documented on the method.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use crate::element::{ChainSize, PartialInjection};
use crate::error::Error;
use crate::family::{enumerate_fast, enumerate_oracle, FamilyId};

/// Largest chain size accepted for Green's-class computations.
pub const MAX_GREENS_CHAIN: u32 = 6;
/// Largest carrier accepted for Green's-class computations.
pub const MAX_GREENS_ORDER: usize = 2048;
/// Largest chain size accepted for the abundance family of sweeps.
pub const MAX_STARRED_CHAIN: u32 = 5;
/// Largest carrier accepted for the categorical triple scan.
pub const MAX_CATEGORICAL_ORDER: usize = 300;

const MAX_CAYLEY_ORDER: usize = 4096;

/// An explicit composition-closed set of partial injections on one chain.
#[derive(Debug, Clone)]
pub struct FiniteSemigroup {
    n: ChainSize,
    family: FamilyId,
    elements: Vec<PartialInjection>,
    zero: usize,
    identity: Option<usize>,
    table: Option<Vec<u32>>,
}

/// Enumerates a family and wraps it as a verified semigroup.
pub fn build_semigroup(
    family: FamilyId,
    n: ChainSize,
    ceiling: u32,
) -> Result<FiniteSemigroup, Error> {
    let elements = enumerate_oracle(family, n, ceiling)?;
    FiniteSemigroup::from_elements(family, n, elements)
}

impl FiniteSemigroup {
    /// Builds a semigroup from an explicit canonically sorted element list,
    /// verifying closure under composition. The empty map must be present;
    /// it is the zero of every carrier this crate constructs.
    pub fn from_elements(
        family: FamilyId,
        n: ChainSize,
        elements: Vec<PartialInjection>,
    ) -> Result<Self, Error> {
        for el in &elements {
            if el.n() != n {
                return Err(Error::ChainMismatch {
                    left: n.get(),
                    right: el.n().get(),
                });
            }
        }
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let len = elements.len();
        let mut table = (len <= MAX_CAYLEY_ORDER).then(|| vec![0u32; len * len]);
        for i in 0..len {
            for j in 0..len {
                let product = elements[i].compose(&elements[j])?;
                match elements.binary_search(&product) {
                    Ok(k) => {
                        if let Some(t) = table.as_mut() {
                            t[i * len + j] = k as u32;
                        }
                    }
                    Err(_) => {
                        return Err(Error::ClosureViolation {
                            left: elements[i].to_string(),
                            right: elements[j].to_string(),
                            product: product.to_string(),
                        })
                    }
                }
            }
        }
        let zero = elements
            .iter()
            .position(PartialInjection::is_empty)
            .ok_or(Error::MissingZero)?;
        let identity = elements
            .binary_search(&PartialInjection::full_identity(n))
            .ok();
        Ok(Self {
            n,
            family,
            elements,
            zero,
            identity,
            table,
        })
    }

    pub fn n(&self) -> ChainSize {
        self.n
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[PartialInjection] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &PartialInjection {
        &self.elements[i]
    }

    pub fn index_of(&self, el: &PartialInjection) -> Option<usize> {
        self.elements.binary_search(el).ok()
    }

    pub fn zero_idx(&self) -> usize {
        self.zero
    }

    pub fn identity_idx(&self) -> Option<usize> {
        self.identity
    }

    /// Index of the product of elements `i` and `j` (left-to-right).
    pub fn product_idx(&self, i: usize, j: usize) -> usize {
        if let Some(t) = &self.table {
            return t[i * self.elements.len() + j] as usize;
        }
        let product = self.elements[i]
            .compose(&self.elements[j])
            .expect("elements share one chain");
        self.elements
            .binary_search(&product)
            .expect("closure verified at build time")
    }

    pub fn is_idempotent_idx(&self, i: usize) -> bool {
        self.product_idx(i, i) == i
    }

    pub fn idempotent_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.is_idempotent_idx(i))
            .collect()
    }

    fn idempotent_flags(&self) -> Vec<bool> {
        (0..self.len()).map(|i| self.is_idempotent_idx(i)).collect()
    }

    fn check_greens_bounds(&self) -> Result<(), Error> {
        if self.n.get() > MAX_GREENS_CHAIN {
            return Err(Error::CeilingExceeded {
                what: "chain size for Green's classes",
                actual: self.n.get(),
                limit: MAX_GREENS_CHAIN,
            });
        }
        if self.len() > MAX_GREENS_ORDER {
            return Err(Error::CeilingExceeded {
                what: "carrier size for Green's classes",
                actual: self.len() as u32,
                limit: MAX_GREENS_ORDER as u32,
            });
        }
        Ok(())
    }

    fn check_starred_bounds(&self) -> Result<(), Error> {
        if self.n.get() > MAX_STARRED_CHAIN {
            return Err(Error::CeilingExceeded {
                what: "chain size for starred sweeps",
                actual: self.n.get(),
                limit: MAX_STARRED_CHAIN,
            });
        }
        Ok(())
    }

    fn left_ideals(&self) -> Vec<Vec<u64>> {
        let words = self.len().div_ceil(64);
        (0..self.len())
            .map(|a| {
                let mut bits = vec![0u64; words];
                set_bit(&mut bits, a);
                for s in 0..self.len() {
                    set_bit(&mut bits, self.product_idx(s, a));
                }
                bits
            })
            .collect()
    }

    fn right_ideals(&self) -> Vec<Vec<u64>> {
        let words = self.len().div_ceil(64);
        (0..self.len())
            .map(|a| {
                let mut bits = vec![0u64; words];
                set_bit(&mut bits, a);
                for s in 0..self.len() {
                    set_bit(&mut bits, self.product_idx(a, s));
                }
                bits
            })
            .collect()
    }

    /// Partition of the carrier under the requested Green's relation,
    /// computed from principal ideals. Classes list ascending indices and
    /// are ordered by their least member.
    pub fn greens_classes(&self, rel: GreensRelation) -> Result<Vec<Vec<usize>>, Error> {
        self.check_greens_bounds()?;
        let classes = match rel {
            GreensRelation::L => group_by_keys(self.left_ideals()),
            GreensRelation::R => group_by_keys(self.right_ideals()),
            GreensRelation::H => {
                let l = class_ids(&group_by_keys(self.left_ideals()), self.len());
                let r = class_ids(&group_by_keys(self.right_ideals()), self.len());
                group_by_keys(l.into_iter().zip(r).collect())
            }
            GreensRelation::D => {
                let mut uf = UnionFind::new(self.len());
                for class in group_by_keys(self.left_ideals())
                    .into_iter()
                    .chain(group_by_keys(self.right_ideals()))
                {
                    for &member in &class[1..] {
                        uf.union(class[0], member);
                    }
                }
                uf.partition()
            }
            GreensRelation::J => {
                let left = self.left_ideals();
                let right = self.right_ideals();
                let keys: Vec<Vec<u64>> = (0..self.len())
                    .map(|a| {
                        let mut bits = vec![0u64; left[a].len()];
                        for u in iter_bits(&left[a]) {
                            for (word, other) in bits.iter_mut().zip(&right[u]) {
                                *word |= other;
                            }
                        }
                        bits
                    })
                    .collect();
                group_by_keys(keys)
            }
        };
        Ok(classes)
    }

    /// True when every two-sided principal ideal is generated by a unique
    /// element.
    pub fn is_j_trivial(&self) -> Result<bool, Error> {
        Ok(self
            .greens_classes(GreensRelation::J)?
            .iter()
            .all(|class| class.len() == 1))
    }

    /// First element in canonical order with no inner inverse, if any.
    pub fn first_nonregular(&self) -> Option<usize> {
        (0..self.len())
            .find(|&a| !(0..self.len()).any(|x| self.product_idx(self.product_idx(a, x), a) == a))
    }

    pub fn is_regular(&self) -> bool {
        self.first_nonregular().is_none()
    }

    fn s1_indices(&self) -> Vec<Option<usize>> {
        let mut xs = Vec::with_capacity(self.len() + 1);
        if self.identity.is_none() {
            xs.push(None);
        }
        xs.extend((0..self.len()).map(Some));
        xs
    }

    fn prod_right(&self, a: usize, x: Option<usize>) -> usize {
        match x {
            None => a,
            Some(j) => self.product_idx(a, j),
        }
    }

    fn prod_left(&self, x: Option<usize>, a: usize) -> usize {
        match x {
            None => a,
            Some(j) => self.product_idx(j, a),
        }
    }

    /// Literal evaluation of the starred-L quantifier: elements `a` and `b`
    /// are related exactly when right multiplication identifies the same
    /// pairs for both, over the monoid completion of the carrier.
    pub fn lstar_related_equational(&self, a: usize, b: usize) -> bool {
        let xs = self.s1_indices();
        for (i, &x) in xs.iter().enumerate() {
            for &y in &xs[i + 1..] {
                let same_a = self.prod_right(a, x) == self.prod_right(a, y);
                let same_b = self.prod_right(b, x) == self.prod_right(b, y);
                if same_a != same_b {
                    return false;
                }
            }
        }
        true
    }

    /// Dual of [`Self::lstar_related_equational`] for left multiplication.
    pub fn rstar_related_equational(&self, a: usize, b: usize) -> bool {
        let xs = self.s1_indices();
        for (i, &x) in xs.iter().enumerate() {
            for &y in &xs[i + 1..] {
                let same_a = self.prod_left(x, a) == self.prod_left(y, a);
                let same_b = self.prod_left(x, b) == self.prod_left(y, b);
                if same_a != same_b {
                    return false;
                }
            }
        }
        true
    }

    fn lstar_fingerprint(&self, a: usize) -> Vec<u32> {
        normalize_kernel(self.s1_indices().iter().map(|&x| self.prod_right(a, x)))
    }

    fn rstar_fingerprint(&self, a: usize) -> Vec<u32> {
        normalize_kernel(self.s1_indices().iter().map(|&x| self.prod_left(x, a)))
    }

    /// Starred-L classes via normalized right-multiplication kernels;
    /// agrees with the pairwise equational test.
    pub fn lstar_classes(&self) -> Vec<Vec<usize>> {
        group_by_keys((0..self.len()).map(|a| self.lstar_fingerprint(a)).collect())
    }

    /// Starred-R classes via normalized left-multiplication kernels.
    pub fn rstar_classes(&self) -> Vec<Vec<usize>> {
        group_by_keys((0..self.len()).map(|a| self.rstar_fingerprint(a)).collect())
    }

    /// Common refinement of the starred-L and starred-R partitions.
    pub fn hstar_classes(&self) -> Vec<Vec<usize>> {
        let l = class_ids(&self.lstar_classes(), self.len());
        let r = class_ids(&self.rstar_classes(), self.len());
        group_by_keys(l.into_iter().zip(r).collect())
    }

    /// Join of the starred-L and starred-R partitions (smallest common
    /// coarsening).
    pub fn dstar_join_classes(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.len());
        for class in self.lstar_classes().into_iter().chain(self.rstar_classes()) {
            for &member in &class[1..] {
                uf.union(class[0], member);
            }
        }
        uf.partition()
    }

    /// True when every starred-L and starred-R class contains an
    /// idempotent.
    pub fn is_abundant(&self) -> Result<bool, Error> {
        self.check_starred_bounds()?;
        let flags = self.idempotent_flags();
        for class in self.lstar_classes().into_iter().chain(self.rstar_classes()) {
            if !class.iter().any(|&i| flags[i]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Abundant with pairwise commuting idempotents.
    pub fn is_adequate(&self) -> Result<bool, Error> {
        if !self.is_abundant()? {
            return Ok(false);
        }
        let idems = self.idempotent_indices();
        for (i, &e) in idems.iter().enumerate() {
            for &f in &idems[i + 1..] {
                if self.product_idx(e, f) != self.product_idx(f, e) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Adequate and satisfying `ea = a(ea)*` and `ae = (ae)+a` for every
    /// element `a` and idempotent `e`.
    pub fn is_ample(&self) -> Result<bool, Error> {
        if !self.is_adequate()? {
            return Ok(false);
        }
        let idems = self.idempotent_indices();
        for a in &self.elements {
            for &e in &idems {
                let e_el = &self.elements[e];
                let ea = e_el.compose(a)?;
                if a.compose(&star_idem(&ea))? != ea {
                    return Ok(false);
                }
                let ae = a.compose(e_el)?;
                if plus_idem(&ae).compose(a)? != ae {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Checks that a nonzero idempotent times an element can only land on a
    /// nonzero idempotent when the element is one itself. On failure the
    /// witness pair `(e, s)` is reported with the largest violating
    /// idempotent: the outer loop walks idempotents in descending canonical
    /// order and the inner loop walks elements ascending.
    pub fn is_zero_e_unitary(&self) -> (bool, Option<(usize, usize)>) {
        let flags = self.idempotent_flags();
        let witness =
            zero_e_unitary_scan(self.len(), self.zero, &flags, |i, j| self.product_idx(i, j));
        (witness.is_none(), witness)
    }

    /// Checks that a product of three elements can only vanish when one of
    /// the two inner products already vanishes. The scan walks triples in
    /// canonical order and reports the first violation `(a, b, c)`.
    pub fn is_categorical(&self) -> Result<(bool, TripleWitness), Error> {
        if self.len() > MAX_CATEGORICAL_ORDER {
            return Err(Error::CeilingExceeded {
                what: "carrier size for the categorical scan",
                actual: self.len() as u32,
                limit: MAX_CATEGORICAL_ORDER as u32,
            });
        }
        let witness = categorical_scan(self.len(), self.zero, |i, j| self.product_idx(i, j));
        Ok((witness.is_none(), witness))
    }
}

/// Indexes `(a, b, c)` of a triple whose outer product vanishes while both
/// inner products survive, when such a triple exists.
pub type TripleWitness = Option<(usize, usize, usize)>;

/// The five classical Green's relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GreensRelation {
    L,
    R,
    H,
    D,
    J,
}

impl GreensRelation {
    pub const ALL: [GreensRelation; 5] = [
        GreensRelation::L,
        GreensRelation::R,
        GreensRelation::H,
        GreensRelation::D,
        GreensRelation::J,
    ];
}

impl fmt::Display for GreensRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GreensRelation::L => "L",
            GreensRelation::R => "R",
            GreensRelation::H => "H",
            GreensRelation::D => "D",
            GreensRelation::J => "J",
        };
        f.write_str(name)
    }
}

/// Starred-R comparison: the domain of `a` is contained in the domain of
/// `b`.
pub fn leq_rstar(a: &PartialInjection, b: &PartialInjection) -> Result<bool, Error> {
    check_same_chain(a, b)?;
    Ok(is_subset(a.domain(), &b.domain().collect::<Vec<u32>>()))
}

/// Starred-L comparison: the image of `a` is contained in the image of
/// `b`.
pub fn leq_lstar(a: &PartialInjection, b: &PartialInjection) -> Result<bool, Error> {
    check_same_chain(a, b)?;
    Ok(is_subset(a.image_sorted().into_iter(), &b.image_sorted()))
}

/// Conjunction of [`leq_rstar`] and [`leq_lstar`].
pub fn leq_hstar(a: &PartialInjection, b: &PartialInjection) -> Result<bool, Error> {
    Ok(leq_rstar(a, b)? && leq_lstar(a, b)?)
}

/// The idempotent sharing `a`'s domain: the partial identity on `Dom a`.
pub fn plus_idem(a: &PartialInjection) -> PartialInjection {
    PartialInjection::partial_identity(a.n(), a.domain()).expect("domain points are in range")
}

/// The idempotent sharing `a`'s image: the partial identity on `Im a`.
pub fn star_idem(a: &PartialInjection) -> PartialInjection {
    PartialInjection::partial_identity(a.n(), a.image_sorted()).expect("image points are in range")
}

/// True when some order-preserving isometry maps the point set `a` onto
/// the point set `b`, that is, when `b` is a translate of `a`: equal sizes
/// and equal ascending gap sequences.
pub fn exists_op_isometry(a: &[u32], b: &[u32]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a.len() == b.len()
        && a.windows(2)
            .zip(b.windows(2))
            .all(|(wa, wb)| wa[1] - wa[0] == wb[1] - wb[0])
}

/// Starred-D comparison: some order-preserving isometry maps `Dom a` onto
/// `Im b`.
pub fn leq_dstar(a: &PartialInjection, b: &PartialInjection) -> Result<bool, Error> {
    check_same_chain(a, b)?;
    Ok(exists_op_isometry(
        &a.domain().collect::<Vec<u32>>(),
        &b.image_sorted(),
    ))
}

fn check_same_chain(a: &PartialInjection, b: &PartialInjection) -> Result<(), Error> {
    if a.n() != b.n() {
        return Err(Error::ChainMismatch {
            left: a.n().get(),
            right: b.n().get(),
        });
    }
    Ok(())
}

fn is_subset(mut sub: impl Iterator<Item = u32>, sup: &[u32]) -> bool {
    sub.all(|x| sup.binary_search(&x).is_ok())
}

fn normalize_kernel(products: impl Iterator<Item = usize>) -> Vec<u32> {
    let mut numbering: HashMap<usize, u32> = HashMap::new();
    products
        .map(|p| {
            let next = numbering.len() as u32;
            *numbering.entry(p).or_insert(next)
        })
        .collect()
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn iter_bits(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let bit = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(w * 64 + bit)
        })
    })
}

fn group_by_keys<K: Eq + Hash>(keys: Vec<K>) -> Vec<Vec<usize>> {
    let mut groups: HashMap<&K, Vec<usize>> = HashMap::new();
    for (i, key) in keys.iter().enumerate() {
        groups.entry(key).or_default().push(i);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
    classes.sort_by_key(|class| class[0]);
    classes
}

fn class_ids(partition: &[Vec<usize>], len: usize) -> Vec<usize> {
    let mut ids = vec![0usize; len];
    for (c, class) in partition.iter().enumerate() {
        for &member in class {
            ids[member] = c;
        }
    }
    ids
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    fn partition(&mut self) -> Vec<Vec<usize>> {
        let len = self.parent.len();
        let roots: Vec<usize> = (0..len).map(|i| self.find(i)).collect();
        group_by_keys(roots)
    }
}

fn zero_e_unitary_scan<P>(
    size: usize,
    zero: usize,
    is_idem: &[bool],
    prod: P,
) -> Option<(usize, usize)>
where
    P: Fn(usize, usize) -> usize,
{
    for e in (0..size).rev() {
        if !is_idem[e] || e == zero {
            continue;
        }
        for s in 0..size {
            if is_idem[s] {
                continue;
            }
            let es = prod(e, s);
            if es != zero && is_idem[es] {
                return Some((e, s));
            }
        }
    }
    None
}

fn categorical_scan<P>(size: usize, zero: usize, prod: P) -> Option<(usize, usize, usize)>
where
    P: Fn(usize, usize) -> usize,
{
    for a in 0..size {
        for b in 0..size {
            let ab = prod(a, b);
            if ab == zero {
                continue;
            }
            for c in 0..size {
                if prod(ab, c) == zero && prod(b, c) != zero {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// The height-`p` slice of the order-preserving order-decreasing
/// isometries of a chain, with an adjoined zero absorbing every product
/// whose height drops below `p`. Index 0 is the adjoined zero; index `i
/// >= 1` is the `i`-th nonzero element in canonical order.
#[derive(Debug, Clone)]
pub struct ReesQuotient {
    n: ChainSize,
    p: u32,
    nonzero: Vec<PartialInjection>,
    table: Vec<u32>,
}

/// Builds the height-`p` quotient for `1 <= p <= n`.
pub fn rees_quotient(n: ChainSize, p: u32, ceiling: u32) -> Result<ReesQuotient, Error> {
    if p < 1 || p > n.get() {
        return Err(Error::IndexOutOfRange {
            what: "quotient height",
            value: p,
            max: n.get(),
        });
    }
    let nonzero: Vec<PartialInjection> =
        enumerate_fast(FamilyId::OrderPreservingDecreasingIsometry, n, ceiling)?
            .into_iter()
            .filter(|el| el.height() == p)
            .collect();
    let size = nonzero.len() + 1;
    let mut table = vec![0u32; size * size];
    for i in 1..size {
        for j in 1..size {
            let product = nonzero[i - 1].compose(&nonzero[j - 1])?;
            if product.height() == p {
                let k = nonzero
                    .binary_search(&product)
                    .expect("height-preserving products stay in the slice");
                table[i * size + j] = (k + 1) as u32;
            }
        }
    }
    Ok(ReesQuotient {
        n,
        p,
        nonzero,
        table,
    })
}

impl ReesQuotient {
    pub fn n(&self) -> ChainSize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Carrier size including the adjoined zero.
    pub fn size(&self) -> usize {
        self.nonzero.len() + 1
    }

    pub fn nonzero_elements(&self) -> &[PartialInjection] {
        &self.nonzero
    }

    /// Truncated product: composition when it keeps full height, the
    /// adjoined zero otherwise.
    pub fn compose_idx(&self, i: usize, j: usize) -> usize {
        self.table[i * self.size() + j] as usize
    }

    pub fn is_idempotent_idx(&self, i: usize) -> bool {
        self.compose_idx(i, i) == i
    }

    /// Text form of a carrier member: `0` for the adjoined zero.
    pub fn element_text(&self, i: usize) -> String {
        if i == 0 {
            "0".to_string()
        } else {
            self.nonzero[i - 1].to_string()
        }
    }

    fn idempotent_flags(&self) -> Vec<bool> {
        (0..self.size())
            .map(|i| self.is_idempotent_idx(i))
            .collect()
    }

    /// Same scan as [`FiniteSemigroup::is_zero_e_unitary`], over the
    /// quotient product.
    pub fn is_zero_e_unitary(&self) -> (bool, Option<(usize, usize)>) {
        let flags = self.idempotent_flags();
        let witness = zero_e_unitary_scan(self.size(), 0, &flags, |i, j| self.compose_idx(i, j));
        (witness.is_none(), witness)
    }

    /// Same scan as [`FiniteSemigroup::is_categorical`], over the quotient
    /// product.
    pub fn is_categorical(&self) -> Result<(bool, TripleWitness), Error> {
        if self.size() > MAX_CATEGORICAL_ORDER {
            return Err(Error::CeilingExceeded {
                what: "carrier size for the categorical scan",
                actual: self.size() as u32,
                limit: MAX_CATEGORICAL_ORDER as u32,
            });
        }
        let witness = categorical_scan(self.size(), 0, |i, j| self.compose_idx(i, j));
        Ok((witness.is_none(), witness))
    }

    /// Exhaustive check that the truncated product is associative.
    pub fn verify_associativity(&self) -> bool {
        let size = self.size();
        for a in 0..size {
            for b in 0..size {
                let ab = self.compose_idx(a, b);
                for c in 0..size {
                    if self.compose_idx(ab, c) != self.compose_idx(a, self.compose_idx(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Every structural verdict for one family at one chain size, with the
/// witnesses backing each negative verdict.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub family: FamilyId,
    pub n: u32,
    pub order: u64,
    pub j_trivial: bool,
    pub regular: bool,
    pub nonregular_witness: Option<PartialInjection>,
    pub abundant: bool,
    pub adequate: bool,
    pub ample: bool,
    pub zero_e_unitary: bool,
    pub zero_e_unitary_witness: Option<(PartialInjection, PartialInjection)>,
    pub categorical: bool,
    pub categorical_witness: Option<(PartialInjection, PartialInjection, PartialInjection)>,
}

impl PropertyReport {
    /// Runs every property decision on the given semigroup. The chain size
    /// must sit within the tightest sweep bound, currently
    /// [`MAX_STARRED_CHAIN`].
    pub fn compute(s: &FiniteSemigroup) -> Result<Self, Error> {
        let (zero_e_unitary, zeu_witness) = s.is_zero_e_unitary();
        let (categorical, cat_witness) = s.is_categorical()?;
        let nonregular = s.first_nonregular();
        Ok(Self {
            family: s.family(),
            n: s.n().get(),
            order: s.len() as u64,
            j_trivial: s.is_j_trivial()?,
            regular: nonregular.is_none(),
            nonregular_witness: nonregular.map(|i| s.element(i).clone()),
            abundant: s.is_abundant()?,
            adequate: s.is_adequate()?,
            ample: s.is_ample()?,
            zero_e_unitary,
            zero_e_unitary_witness: zeu_witness
                .map(|(e, v)| (s.element(e).clone(), s.element(v).clone())),
            categorical,
            categorical_witness: cat_witness.map(|(a, b, c)| {
                (
                    s.element(a).clone(),
                    s.element(b).clone(),
                    s.element(c).clone(),
                )
            }),
        })
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family={}", self.family)?;
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "order={}", self.order)?;
        writeln!(f, "j_trivial={}", self.j_trivial)?;
        write!(f, "regular={}", self.regular)?;
        if let Some(w) = &self.nonregular_witness {
            write!(f, " witness={w}")?;
        }
        writeln!(f)?;
        writeln!(f, "abundant={}", self.abundant)?;
        writeln!(f, "adequate={}", self.adequate)?;
        writeln!(f, "ample={}", self.ample)?;
        write!(f, "zero_e_unitary={}", self.zero_e_unitary)?;
        if let Some((e, s)) = &self.zero_e_unitary_witness {
            write!(f, " witness_e={e} witness_s={s}")?;
        }
        writeln!(f)?;
        write!(f, "categorical={}", self.categorical)?;
        if let Some((a, b, c)) = &self.categorical_witness {
            write!(f, " witness_a={a} witness_b={b} witness_c={c}")?;
        }
        writeln!(f)
    }
}
