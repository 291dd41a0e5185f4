//! Tutte-type characters of minors systems, computed exactly over monoid rings.
//!
//! A minors system is a family of structures on finite ground sets with restriction,
//! contraction and a direct sum with structures on the empty set. Characters are subset
//! sums of norm and twist values in exact monoid rings; every family in this crate plugs
//! into the same engine in [`minors`].

pub mod algebra;
pub mod arithmetic;
pub mod colored;
pub mod delta_persp;
pub mod dispatch;
pub mod graph;
pub mod io;
pub mod matroid;
pub mod minors;
pub mod polysub;
pub mod relative;
