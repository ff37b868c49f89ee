//! Exact enumeration and verification of order-decreasing partial
//! isometries of a finite chain.
//!
//! The crate models partial injections of `{1, ..., n}`, enumerates the
//! family of order-decreasing partial isometries and its order-preserving
//! subfamily (plus the ambient families they live in), counts elements by
//! height and by fixed points, and decides the structural properties of the
//! resulting semigroups: Green's relations and their starred refinements,
//! regularity, abundance, and the behaviour of Rees quotients by height
//! ideals. Every closed-form count has an enumeration-backed counterpart so
//! the two can be checked against each other.

pub mod algebra;
pub mod counting;
pub mod element;
pub mod error;
pub mod family;

pub use algebra::{
    build_semigroup, exists_op_isometry, leq_dstar, leq_hstar, leq_lstar, leq_rstar, plus_idem,
    rees_quotient, star_idem, FiniteSemigroup, GreensRelation, PropertyReport, ReesQuotient,
    TripleWitness, MAX_CATEGORICAL_ORDER, MAX_GREENS_CHAIN, MAX_GREENS_ORDER, MAX_STARRED_CHAIN,
};
pub use counting::{
    binomial, closed_fix, closed_height_oddp, closed_order_ddp, closed_order_oddp, count_by_fix,
    count_by_height, order, triangle, CountTriangle, StatKind,
};
pub use element::{ChainSize, ElementStats, PartialInjection};
pub use error::Error;
pub use family::{enumerate_fast, enumerate_oracle, FamilyId, DEFAULT_CEILING};
