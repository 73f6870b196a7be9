use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::{candidate_pairs, Report, ViolationKind};
use crate::geometry::{disks_interior_disjoint, point_segment_distance, segments_properly_cross, Disk, Vec2};
use crate::tree::{Drawing, RootedTree};

/// Covering radius of a tree drawing is at most `n` to this power.
pub const TREE_EXPONENT: f64 = 3.0367;

pub(crate) fn min_edge_length(parent: &[Option<usize>], positions: &[Vec2]) -> Option<f64> {
    parent
        .iter()
        .enumerate()
        .filter_map(|(v, p)| p.map(|p| (positions[p] - positions[v]).norm()))
        .reduce(f64::min)
}

fn neighbor_directions(parent: &[Option<usize>], positions: &[Vec2]) -> Vec<Vec<f64>> {
    let mut dirs = vec![Vec::new(); positions.len()];
    for (v, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            dirs[p].push((positions[v] - positions[p]).angle());
            dirs[v].push((positions[p] - positions[v]).angle());
        }
    }
    dirs
}

/// Smallest angular gap minus `2π/deg` at `node`, given its edge directions.
fn slack(dirs: &mut [f64]) -> Option<f64> {
    let d = dirs.len();
    if d < 2 {
        return None;
    }
    dirs.sort_by(f64::total_cmp);
    let wrap = dirs[0] + TAU - dirs[d - 1];
    let gap = dirs.windows(2).map(|w| w[1] - w[0]).fold(wrap, f64::min);
    Some(gap - TAU / d as f64)
}

pub(crate) fn min_resolution_slack(parent: &[Option<usize>], positions: &[Vec2]) -> Option<f64> {
    neighbor_directions(parent, positions).iter_mut().filter_map(|d| slack(d)).reduce(f64::min)
}

/// Checks that a tree drawing has straight, non-crossing edges of length at
/// least one, perfect angular resolution, properly nested exclusive disks and
/// a covering radius within the polynomial area bound.
pub fn check_drawing(d: &Drawing, tol: f64) -> Report {
    let mut report = Report::default();
    let n = d.positions.len();
    if d.parent.len() != n {
        report.push(ViolationKind::Structure, 0.0, String::from("parent map and positions differ in length"));
        return report;
    }
    let tree = match RootedTree::from_parents(d.parent.clone()) {
        Ok(t) => t,
        Err(e) => {
            report.push(ViolationKind::Structure, 0.0, format!("not a tree: {e}"));
            return report;
        }
    };
    if d.positions.iter().any(|p| !p.is_finite()) {
        report.push(ViolationKind::Structure, 0.0, String::from("non-finite coordinates"));
        return report;
    }

    let mut min_len: Option<f64> = None;
    for (p, v) in d.edges() {
        let len = (d.positions[p] - d.positions[v]).norm();
        min_len = Some(min_len.map_or(len, |m| m.min(len)));
        if len < 1.0 - tol {
            report.push(ViolationKind::EdgeLength, 1.0 - len, format!("edge {p}-{v} has length {len}"));
        }
    }
    report.measured.min_edge_length = min_len;

    let mut min_slack: Option<f64> = None;
    for (v, dirs) in neighbor_directions(&d.parent, &d.positions).iter_mut().enumerate() {
        if let Some(s) = slack(dirs) {
            min_slack = Some(min_slack.map_or(s, |m| m.min(s)));
            if s < -tol {
                report.push(ViolationKind::Resolution, -s, format!("node {v} misses its angular resolution"));
            }
        }
    }
    report.measured.min_resolution_slack = min_slack;

    check_crossings(d, tol, &mut report);
    let covering = check_disks(d, &tree, tol, &mut report);

    let limit = libm::pow(n as f64, TREE_EXPONENT);
    report.measured.covering_radius = covering;
    report.measured.ratio_to_bound = covering / limit;
    if covering > limit + tol {
        report.push(ViolationKind::Bound, covering - limit, format!("covering radius {covering} exceeds {limit}"));
    }
    report
}

fn check_crossings(d: &Drawing, tol: f64, report: &mut Report) {
    let edges: Vec<(usize, usize)> = d.edges().collect();
    let seg = |e: (usize, usize)| (d.positions[e.0], d.positions[e.1]);
    let mut order: Vec<(f64, f64, usize)> = edges
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let (a, b) = seg(e);
            (a.x.min(b.x) - tol, a.x.max(b.x) + tol, i)
        })
        .collect();
    order.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut active: Vec<(f64, usize)> = Vec::new();
    for &(lo, hi, i) in &order {
        active.retain(|&(h, _)| h >= lo);
        let (p, q) = edges[i];
        let (a, b) = seg(edges[i]);
        for &(_, j) in &active {
            let (r, s) = edges[j];
            if p == r || p == s || q == r || q == s {
                continue;
            }
            let (c, e) = seg(edges[j]);
            if a.y.min(b.y) > c.y.max(e.y) + tol || c.y.min(e.y) > a.y.max(b.y) + tol {
                continue;
            }
            let touching = point_segment_distance(a, c, e) < tol
                || point_segment_distance(b, c, e) < tol
                || point_segment_distance(c, a, b) < tol
                || point_segment_distance(e, a, b) < tol;
            if touching || segments_properly_cross(a, b, c, e, tol) {
                report.push(ViolationKind::Crossing, 0.0, format!("edges {p}-{q} and {r}-{s} meet"));
            }
        }
        active.push((hi, i));
    }
}

/// Verifies containment and sibling disjointness of the exclusive disks and
/// returns the covering radius of the whole drawing.
fn check_disks(d: &Drawing, tree: &RootedTree, tol: f64, report: &mut Report) -> f64 {
    let n = d.positions.len();
    let mut disk_radius: Vec<Option<f64>> = vec![None; n];
    for e in &d.exclusive {
        if e.node >= n || e.radius <= 0.0 || !e.radius.is_finite() {
            report.push(ViolationKind::Structure, 0.0, format!("bad exclusive disk at node {}", e.node));
            continue;
        }
        if disk_radius[e.node].replace(e.radius).is_some() {
            report.push(ViolationKind::Structure, 0.0, format!("two exclusive disks at node {}", e.node));
        }
    }

    // nearest ancestor-or-self carrying a disk
    let mut near: Vec<Option<usize>> = vec![None; n];
    for v in tree.preorder() {
        near[v] = if disk_radius[v].is_some() { Some(v) } else { tree.parent(v).and_then(|p| near[p]) };
    }
    for v in 0..n {
        let mut a = near[v];
        while let Some(top) = a {
            let r = disk_radius[top].unwrap_or(0.0);
            let dist = (d.positions[v] - d.positions[top]).norm();
            if dist > r + tol {
                report.push(
                    ViolationKind::Containment,
                    dist - r,
                    format!("node {v} lies outside the exclusive disk of {top}"),
                );
            }
            a = tree.parent(top).and_then(|p| near[p]);
        }
    }

    for z in 0..n {
        let kids: Vec<(usize, Disk)> = tree
            .children(z)
            .iter()
            .filter_map(|&c| {
                disk_radius[c].map(|r| (c, Disk { center: d.positions[c] - d.positions[z], radius: r }))
            })
            .collect();
        if kids.len() < 2 {
            continue;
        }
        let disks: Vec<Disk> = kids.iter().map(|k| k.1).collect();
        for (i, j) in candidate_pairs(&disks, tol) {
            if !disks_interior_disjoint(&disks[i], &disks[j], tol) {
                let overlap = disks[i].radius + disks[j].radius - (disks[i].center - disks[j].center).norm();
                report.push(
                    ViolationKind::Disjointness,
                    overlap,
                    format!("exclusive disks of siblings {} and {} overlap", kids[i].0, kids[j].0),
                );
            }
        }
    }

    let root = tree.root();
    disk_radius[root].unwrap_or_else(|| {
        d.positions.iter().map(|p| (*p - d.positions[root]).norm()).fold(0.0, f64::max)
    })
}
