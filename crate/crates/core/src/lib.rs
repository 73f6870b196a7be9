//! Balloon layouts with perfect angular resolution.
//!
//! Given `n` disks ("balloons") with prescribed radii, place each one with
//! its center on its own ray ("spoke") out of the origin, with consecutive
//! spokes separated by exactly `2π/n`. Balloons must have disjoint interiors
//! and every spoke segment must avoid the interior of all other balloons.
//! The greedy layered engine in [`layout`] keeps the whole arrangement inside
//! an origin-centered disk of radius `2·Σr` (or [`geometry::KAPPA`]`·Σr` when
//! two spokes have to stay free).
//!
//! [`tree`] uses those layouts around every node of a heavy-path
//! decomposition to draw unordered trees with straight edges and perfect
//! angular resolution in polynomial area, and [`checker`] re-verifies layouts
//! and drawings from their raw coordinates.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;

pub mod angles;
pub mod checker;
mod error;
pub mod geometry;
pub mod layout;
pub mod tree;

pub use angles::{Spoke, SpokeSet, Split};
pub use checker::{check_drawing, check_layout, Report, Violation, ViolationKind};
pub use error::{Error, Result};
pub use geometry::{Disk, Vec2, KAPPA};
pub use layout::{
    greedy_balloon, greedy_one_free, greedy_two_free, is_weakly_ordered, layout, layout_with_order,
    weakly_order,
    FreeSpokes, Layer, LayerKind, Layout, Placement,
};
pub use tree::{draw_tree, heavy_decomposition, Drawing, HeavyDecomposition, RootedTree};
