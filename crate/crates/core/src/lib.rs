//! Exact and numeric toolkit for the `SL3(C)`-character variety of the free
//! group of rank 2 and its Goldman Poisson structures.
//!
//! The coordinate ring is generated by nine trace functions subject to a
//! single relation of degree 6. [`polyring`] implements exact arithmetic in
//! that ring, [`words`] reduces traces of words to it, [`symmetry`] and
//! [`poisson`] carry the outer automorphisms and bracket tables, and
//! [`numeric`] checks identities on random matrix pairs.

pub mod expr;
pub mod numeric;
pub mod poisson;
pub mod polyring;
pub mod relations;
pub mod surfaces;
pub mod symmetry;
pub mod verify;
pub mod words;
