//! Exact curvature computations for solvable metric Lie algebras.
//!
//! The pipeline runs bottom-up through the modules:
//!
//! * [`numerics`]: exact rationals, dense matrices, rational eigenspaces.
//! * [`lie`]: metric Lie algebras, brackets, metric adjoints, subalgebras.
//! * [`iwasawa`]: the split `s = a ⊕ n`, roots, root vectors, simple systems.
//! * [`curvature`]: Ricci endomorphisms, mean curvature, Einstein checks,
//!   second fundamental forms.
//! * [`attached`]: subalgebras attached to subsets of simple roots and the
//!   Jacobi Star Condition.
//! * [`catalog`]: built-in example algebras and the text file format.
//!
//! The exact path never touches floating point. Float code exists only as an
//! independent cross-check and as a fallback for irrational root data.

pub mod attached;
pub mod catalog;
pub mod curvature;
pub mod iwasawa;
pub mod lie;
pub mod numerics;
