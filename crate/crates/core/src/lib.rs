//! Exact-arithmetic calculators for the topological complexity of maps.
//!
//! The library is organized around five computational engines:
//!
//! * [`exact_linalg`] — arbitrary-precision integer and prime-field linear
//!   algebra (Smith normal form, row reduction, subspace arithmetic);
//! * [`free_group`] — free-group words, homomorphisms, Stallings folding,
//!   and the TC/cat classification of free-group homomorphisms;
//! * [`graded_algebra`] — finite-dimensional graded-commutative cohomology
//!   rings and cup-length lower bounds for maps;
//! * [`catalog`] — known TC/cat values for standard spaces and groups;
//! * [`bounds`] — a monotone interval-propagation engine over TC/cat facts
//!   with per-bound provenance;
//! * [`planner`] — explicit motion planners on model spaces and a seeded
//!   numerical validator for the planner axioms.

pub mod bounds;
pub mod catalog;
pub mod exact_linalg;
pub mod free_group;
pub mod graded_algebra;
pub mod planner;
