//! A verifiable 33-curve 1-system on the closed genus-3 surface.
//!
//! The surface is decomposed into four pairs of pants along six curves, with
//! K4 as decomposition graph. Simple closed curves subordinate to the
//! decomposition are coded by a cycle of K4 plus one twist per cycle edge
//! ([`codes`]), and the crate computes geometric intersection numbers of coded
//! curves two independent ways: a projection calculus working edge by edge
//! ([`arcs`]) and a diagram engine that draws both curves and removes bigons
//! ([`oracle`]). On top of those, [`verify`] checks the 1-system property,
//! saturation over a twist window, and the size bounds that single out the
//! tetrahedral decomposition.

pub mod arcs;
pub mod codes;
pub mod graph;
pub mod oracle;
pub mod verify;
