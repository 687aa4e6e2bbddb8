//! Exact census of unrooted planar maps.
//!
//! Counts general, 2-connected and 3-connected planar maps up to
//! orientation-preserving homeomorphism, by edges or by vertices and faces,
//! from algebraic generating functions and a Burnside sum over rotational
//! symmetries. A brute-force enumerator of rotation systems provides an
//! independent check for small sizes.

pub mod series;
pub mod kernels;
pub mod formulas;
pub mod checks;
pub mod census;
pub mod oracle;
pub mod cli;
