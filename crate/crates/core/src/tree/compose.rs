//! Rigid placement of per-node layouts along one heavy path.
//!
//! The path is drawn in its own frame: the top node sits at the origin, the
//! light parent edge (if any) leaves along angle `π`, and the chain runs
//! roughly along `+x`. At each node the heavy edges use the two free spokes,
//! so the heading turns by `π − A` where `A ≥ 2π/3` is the free angle; the
//! side is chosen to keep the heading within `π/3` of the axis. Every edge
//! is then long enough that the next covering disk starts to the right of
//! all disks placed before its predecessor, which keeps the disks disjoint
//! and every heavy edge outside all disks but its endpoints'.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::geometry::{signed_angle, Vec2};

/// One node of a heavy path as seen by the composition.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeFrame {
    /// Radius of the disk around the node that holds its light subtrees.
    pub x: f64,
    /// Local directions of the free spokes. Interior nodes and a top node
    /// with a parent need two, end nodes one.
    pub free: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathPlacement {
    pub positions: Vec<Vec2>,
    /// Rotation applied to each node's local frame.
    pub rotations: Vec<f64>,
    /// Index into `free` of the spoke used towards the predecessor (or the
    /// parent, for the top node).
    pub back_spoke: Vec<Option<usize>>,
    pub exclusive_radius: f64,
    pub sum_x: f64,
}

const MIN_FREE_ANGLE: f64 = 2.0 * PI / 3.0;

fn free_angle(a: f64, b: f64) -> f64 {
    let d = crate::geometry::wrap_angle(b - a);
    d.min(TAU - d)
}

/// Places the nodes of a heavy path in the path's frame.
pub fn compose_path(nodes: &[NodeFrame], has_parent: bool) -> Result<PathPlacement> {
    let m = nodes.len();
    if m == 0 {
        return Err(Error::InvalidArgument("a path needs at least one node"));
    }
    for (k, node) in nodes.iter().enumerate() {
        if !(node.x > 0.0 && node.x.is_finite()) {
            return Err(Error::InvalidArgument("node radius must be positive"));
        }
        let needed = usize::from(k > 0 || has_parent) + usize::from(k + 1 < m);
        if node.free.len() < needed {
            return Err(Error::Contract("node exposes too few free spokes"));
        }
        if needed == 2 && free_angle(node.free[0], node.free[1]) < MIN_FREE_ANGLE - 1e-9 {
            return Err(Error::Contract("free spokes closer than 2π/3"));
        }
    }

    let mut positions = Vec::with_capacity(m);
    let mut rotations = Vec::with_capacity(m);
    let mut back_spoke = Vec::with_capacity(m);
    positions.push(Vec2::ZERO);

    // orient the top node; `heading` is the direction of the next heavy edge
    let mut heading = 0.0;
    let first = &nodes[0];
    if has_parent {
        let (back, rot, h) = if m > 1 {
            best_turn(first.free[0], first.free[1], 0.0)
        } else {
            (0, PI - first.free[0], 0.0)
        };
        back_spoke.push(Some(back));
        rotations.push(rot);
        heading = h;
    } else {
        back_spoke.push(None);
        rotations.push(if m > 1 { -first.free[0] } else { 0.0 });
    }

    let floor = if has_parent { 0.0 } else { f64::NEG_INFINITY };
    // rightmost extent of disks 0..k-1, and of 0..k
    let mut reach_before = floor;
    let mut reach = floor.max(first.x);
    for k in 0..m - 1 {
        let u = positions[k];
        let dir = Vec2::polar(heading);
        let next = &nodes[k + 1];
        let slab = (reach_before + next.x - u.x) / libm::cos(heading);
        let len = (nodes[k].x + next.x).max(slab);
        let v = u + dir * len;
        positions.push(v);
        reach_before = reach;
        reach = reach.max(v.x + next.x);

        if k + 2 < m {
            let (back, rot, h) = best_turn(next.free[0], next.free[1], heading);
            back_spoke.push(Some(back));
            rotations.push(rot);
            heading = h;
        } else {
            back_spoke.push(Some(0));
            rotations.push(heading + PI - next.free[0]);
        }
    }

    let exclusive_radius = positions
        .iter()
        .zip(nodes)
        .map(|(p, n)| p.norm() + n.x)
        .fold(0.0, f64::max);
    let sum_x = nodes.iter().map(|n| n.x).sum();
    Ok(PathPlacement { positions, rotations, back_spoke, exclusive_radius, sum_x })
}

/// Chooses which free spoke points back along `heading + π`; returns that
/// spoke's index, the node rotation and the outgoing heading.
fn best_turn(a: f64, b: f64, heading: f64) -> (usize, f64, f64) {
    let back = heading + PI;
    let options = [(0usize, a, b), (1usize, b, a)];
    let mut best = None;
    for (idx, bk, fw) in options {
        let rot = back - bk;
        let out = signed_angle(fw + rot);
        let better = match best {
            None => true,
            Some((_, _, h)) => out.abs() < f64::abs(h) - 1e-15,
        };
        if better {
            best = Some((idx, rot, out));
        }
    }
    best.unwrap_or((0, back - a, signed_angle(b + back - a)))
}
