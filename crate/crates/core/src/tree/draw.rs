use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use super::compose::{compose_path, NodeFrame};
use super::{heavy_decomposition, RootedTree};
use crate::checker::drawing::{min_edge_length, min_resolution_slack};
use crate::error::Result;
use crate::geometry::Vec2;
use crate::layout::{layout, FreeSpokes};

/// Disk around the top node of a heavy path that contains the drawing of
/// the subtree rooted there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExclusiveDisk {
    pub node: usize,
    pub radius: f64,
    /// Sum of the per-node covering radii along the path.
    pub sum_x: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrawingStats {
    /// Radius of the root's exclusive disk.
    pub covering_radius: f64,
    pub min_edge_length: Option<f64>,
    /// Smallest `gap − 2π/deg` over all nodes of degree at least two.
    pub min_resolution_slack: Option<f64>,
    /// Largest ratio of exclusive radius to `2·Σx` over all heavy paths.
    pub max_path_ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    pub parent: Vec<Option<usize>>,
    pub positions: Vec<Vec2>,
    pub exclusive: Vec<ExclusiveDisk>,
    pub stats: DrawingStats,
}

impl Drawing {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// `(parent, child)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent.iter().enumerate().filter_map(|(v, p)| p.map(|p| (p, v)))
    }
}

#[derive(Clone, Copy)]
struct Transform {
    rotation: f64,
    offset: Vec2,
}

impl Transform {
    const IDENTITY: Transform = Transform { rotation: 0.0, offset: Vec2::ZERO };

    fn apply(&self, p: Vec2) -> Vec2 {
        self.offset + p.rotate(self.rotation)
    }

    fn then(&self, inner: &Transform) -> Transform {
        Transform { rotation: self.rotation + inner.rotation, offset: self.apply(inner.offset) }
    }
}

/// Draws `t` with straight edges and perfect angular resolution. The root
/// ends up at the origin.
pub fn draw_tree(t: &RootedTree) -> Result<Drawing> {
    let n = t.len();
    let h = heavy_decomposition(t);
    let mut local = vec![Vec2::ZERO; n];
    // frame of a light child's path inside the frame of its parent's path
    let mut anchor = vec![Transform::IDENTITY; n];
    let mut radius = vec![0.0f64; n];
    let mut exclusive = vec![ExclusiveDisk { node: 0, radius: 0.0, sum_x: 0.0 }; h.paths.len()];

    for id in (0..h.paths.len()).rev() {
        let path = &h.paths[id];
        let has_parent = h.light_parent_edge[id].is_some();
        let m = path.len();
        let mut frames = Vec::with_capacity(m);
        let mut layouts = Vec::with_capacity(m);
        for (k, &u) in path.iter().enumerate() {
            let light: Vec<usize> = t.children(u).iter().copied().filter(|&c| Some(c) != h.heavy_child[u]).collect();
            let needed = usize::from(k > 0 || has_parent) + usize::from(k + 1 < m);
            if light.is_empty() {
                let free = match needed {
                    0 => Vec::new(),
                    1 => vec![0.0],
                    _ => vec![0.0, PI],
                };
                frames.push(NodeFrame { x: 1.0, free });
                layouts.push(None);
                continue;
            }
            let variant = if needed >= 2 { FreeSpokes::Two } else { FreeSpokes::One };
            let radii: Vec<f64> = light.iter().map(|&c| radius[c]).collect();
            let l = layout(&radii, variant)?;
            let free = l.free_spokes.iter().map(|&label| l.spoke_angle(label - 1)).collect();
            frames.push(NodeFrame { x: l.covering_radius.max(1.0), free });
            layouts.push(Some((l, light)));
        }

        let placed = compose_path(&frames, has_parent)?;
        for (k, &u) in path.iter().enumerate() {
            local[u] = placed.positions[k];
            let Some((l, light)) = &layouts[k] else { continue };
            let rot = placed.rotations[k];
            for p in &l.placements {
                let theta = l.spoke_angle(p.units) + rot;
                let child = light[p.balloon];
                anchor[child] = Transform {
                    rotation: theta,
                    offset: placed.positions[k] + Vec2::from_polar(p.center_distance, theta),
                };
            }
        }
        radius[path[0]] = placed.exclusive_radius;
        exclusive[id] = ExclusiveDisk { node: path[0], radius: placed.exclusive_radius, sum_x: placed.sum_x };
    }

    let mut frame = vec![Transform::IDENTITY; h.paths.len()];
    let mut positions = vec![Vec2::ZERO; n];
    for (id, path) in h.paths.iter().enumerate() {
        if let Some((parent, top)) = h.light_parent_edge[id] {
            frame[id] = frame[h.path_of[parent]].then(&anchor[top]);
        }
        for &v in path {
            positions[v] = frame[id].apply(local[v]);
        }
    }

    let parent = t.parents().to_vec();
    let max_path_ratio = exclusive.iter().map(|e| e.radius / (2.0 * e.sum_x)).fold(0.0, f64::max);
    let stats = DrawingStats {
        covering_radius: exclusive[0].radius,
        min_edge_length: min_edge_length(&parent, &positions),
        min_resolution_slack: min_resolution_slack(&parent, &positions),
        max_path_ratio,
    };
    Ok(Drawing { parent, positions, exclusive, stats })
}
