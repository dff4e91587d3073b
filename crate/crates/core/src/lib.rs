//! Invariants of 2-bridge knots.
//!
//! A 2-bridge knot is determined by a reduced fraction p/q (q odd); its
//! bridge-sphere geometry is governed by the Farey graph on extended
//! rationals, where geodesic distance realizes the pants distance of the
//! standard (0,2)-splitting. This crate computes:
//!
//! - Farey-graph structure: edges, continued fractions, truncation paths,
//!   geodesic distances and witness paths ([`farey`]);
//! - Schubert normal forms, mirrors, twist numbers, and double branched
//!   covers of 2-bridge knots ([`twobridge`]);
//! - bridge and pants complexities of splittings and knots ([`complexity`]);
//! - two-sided hyperbolic volume estimates from twist numbers and pants
//!   distances ([`volume`]);
//! - curve-intersection data and bounded views of the pants and dual-curve
//!   complexes of the 4-punctured sphere and once-punctured torus
//!   ([`pantscomplex`]).

mod arith;

pub mod complexity;
pub mod farey;
pub mod pantscomplex;
pub mod twobridge;
pub mod volume;

pub use farey::{ContinuedFraction, FareyError, FareyPath, Slope};
pub use twobridge::{LensSpace, TwoBridgeError, TwoBridgeKnot};
