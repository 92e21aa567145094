//! Decompositions of finite simple graphs into cut points, 2-blocks and
//! 3-blocks via nested separation families, planarity certificates,
//! automorphism actions on the decomposition trees, and Cayley graphs of
//! surface-form group presentations.
//!
//! Start with [`blocks1::block_cut_tree`], [`blocks2::triblock_tree`],
//! [`planar::planarity_test`], [`symmetry::automorphism_group`] and
//! [`cayley::coset_enumerate`]; the `examples/` directory has one program per
//! capability.

#![allow(clippy::needless_range_loop)]
pub mod blocks1;
pub mod blocks2;
pub mod cayley;
pub mod check;
pub mod cli;
pub mod error;
pub mod graph;
pub mod planar;
pub mod separation;
pub mod symmetry;
pub mod tree;
