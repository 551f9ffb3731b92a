//! Exact construction and analysis of the nilpotent algebras obtained by
//! deleting an extremity node from the Dynkin diagram of a simple Lie algebra.
//!
//! Everything is integer arithmetic: vectors are stored with doubled
//! coordinates so the half-integer roots of the E and F families stay exact,
//! and the distinguished coweight is found as the primitive integer kernel of
//! a node-deleted Cartan matrix. No floating point, no inner-product metric.
//!
//! Module layout mirrors the pipeline:
//! [`exactvec`] (vectors, matrices, kernels) → [`rootsys`] (the nine families
//! in explicit coordinates) → [`carving`] (delete a node, grade the roots) →
//! [`nilrad`] (closure, sandwich test, center and pair structure) →
//! [`classify`] (sweep all cases and audit the published table).

pub mod carving;
pub mod classify;
pub mod exactvec;
pub mod nilrad;
pub mod rootsys;
