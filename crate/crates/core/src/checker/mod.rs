//! Independent verification of layouts and drawings.
//!
//! Everything is recomputed from raw placements or coordinates; counters and
//! radii stored by the engines are only compared against, never trusted.

pub(crate) mod drawing;
mod oracle;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI, TAU};

pub use drawing::{check_drawing, TREE_EXPONENT};
pub use oracle::{contact_layer_bound, tiny_oracle};

use crate::angles::units_to_radians;
use crate::geometry::{disks_interior_disjoint, point_ray_distance, point_segment_distance, Disk, Vec2};
use crate::layout::{FreeSpokes, Layout};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    Disjointness,
    SpokeClearance,
    Resolution,
    Wedge,
    Safety,
    Bound,
    EdgeLength,
    Crossing,
    Containment,
    Structure,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
    /// How far the offending quantity is past its limit.
    pub magnitude: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Measured {
    pub covering_radius: f64,
    pub ratio_to_bound: f64,
    pub free_angle: Option<f64>,
    pub min_edge_length: Option<f64>,
    pub min_resolution_slack: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub violations: Vec<Violation>,
    pub measured: Measured,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }

    fn push(&mut self, kind: ViolationKind, magnitude: f64, detail: String) {
        self.violations.push(Violation { kind, detail, magnitude });
    }
}

/// Checks a balloon layout against the problem constraints and the covering
/// bound of `variant`.
pub fn check_layout(l: &Layout, variant: FreeSpokes, tol: f64) -> Report {
    let mut report = Report::default();
    let n = l.radii.len();
    let n_spokes = l.n_spokes;

    if n_spokes != n + variant.count() || n_spokes == 0 {
        report.push(
            ViolationKind::Resolution,
            0.0,
            format!("{n_spokes} spokes for {n} balloons and {} free", variant.count()),
        );
        return report;
    }
    if l.radii.iter().any(|r| *r <= 0.0 || !r.is_finite()) {
        report.push(ViolationKind::Structure, 0.0, String::from("non-positive radius"));
        return report;
    }

    let mut occupant: Vec<Option<usize>> = alloc::vec![None; n_spokes];
    let mut seen = alloc::vec![false; n];
    let mut usable = true;
    for (k, p) in l.placements.iter().enumerate() {
        if p.balloon >= n || seen[p.balloon] {
            report.push(ViolationKind::Structure, 0.0, format!("placement {k}: bad or repeated balloon"));
            usable = false;
            continue;
        }
        seen[p.balloon] = true;
        if p.spoke == 0 || p.spoke > n_spokes || p.units != p.spoke - 1 {
            report.push(
                ViolationKind::Resolution,
                0.0,
                format!("balloon {}: spoke {} at {} units is off the uniform grid", p.balloon, p.spoke, p.units),
            );
            usable = false;
            continue;
        }
        if let Some(other) = occupant[p.units] {
            report.push(
                ViolationKind::Resolution,
                0.0,
                format!("spoke {} carries balloons {} and {}", p.spoke, l.placements[other].balloon, p.balloon),
            );
            usable = false;
            continue;
        }
        if !(p.center_distance.is_finite() && p.center_distance >= 0.0) {
            report.push(ViolationKind::Structure, 0.0, format!("balloon {}: bad distance", p.balloon));
            usable = false;
            continue;
        }
        occupant[p.units] = Some(k);
    }
    if seen.iter().any(|s| !s) {
        report.push(ViolationKind::Structure, 0.0, String::from("some balloon was never placed"));
        usable = false;
    }
    if !usable {
        return report;
    }

    // free spokes
    let free: Vec<usize> = (0..n_spokes).filter(|&u| occupant[u].is_none()).collect();
    let declared: BTreeSet<usize> = l.free_spokes.iter().map(|&lab| lab.wrapping_sub(1)).collect();
    if declared != free.iter().copied().collect() {
        report.push(ViolationKind::Resolution, 0.0, String::from("declared free spokes do not match"));
    }
    if free.len() == 2 {
        let d = (free[1] - free[0]).min(n_spokes - (free[1] - free[0]));
        let angle = units_to_radians(d, n_spokes);
        report.measured.free_angle = Some(angle);
        if angle < 2.0 * PI / 3.0 - tol {
            report.push(
                ViolationKind::Resolution,
                2.0 * PI / 3.0 - angle,
                format!("free spokes only {angle} apart"),
            );
        }
    }

    let disks: Vec<Disk> = l.placements.iter().map(|p| l.disk(p)).collect();
    check_disjoint(&disks, tol, &mut report);
    check_clearance(l, &disks, &occupant, tol, &mut report);
    check_safety(l, tol, &mut report);
    check_wedges(l, &disks, tol, &mut report);

    let covering = disks.iter().map(|d| d.center.norm() + d.radius).fold(0.0, f64::max);
    let limit = variant.bound() * l.radius_sum();
    report.measured.covering_radius = covering;
    report.measured.ratio_to_bound = covering / limit;
    if covering > limit + tol {
        report.push(ViolationKind::Bound, covering - limit, format!("covering radius {covering} exceeds {limit}"));
    }
    if (covering - l.covering_radius).abs() > 1e-12 * covering.max(1.0) {
        report.push(
            ViolationKind::Bound,
            (covering - l.covering_radius).abs(),
            format!("recorded covering radius {} differs from {covering}", l.covering_radius),
        );
    }
    report
}

/// Angular half-width of the shadow a disk casts from the origin, or `None`
/// when the disk reaches around the origin.
fn shadow(d: &Disk, tol: f64) -> Option<f64> {
    let c = d.center.norm();
    if c <= 0.0 || c < d.radius - tol {
        return None;
    }
    let s = (d.radius + tol) / c;
    if s >= 1.0 {
        Some(FRAC_PI_2 + 1e-9)
    } else {
        Some(libm::asin(s) + 1e-9)
    }
}

/// Pairs of disks whose angular shadows overlap. Two disks can only meet
/// where their shadows do.
fn candidate_pairs(disks: &[Disk], tol: f64) -> Vec<(usize, usize)> {
    let mut intervals = Vec::with_capacity(2 * disks.len());
    let mut global = Vec::new();
    for (i, d) in disks.iter().enumerate() {
        match shadow(d, tol) {
            Some(h) if h < PI => {
                let start = crate::geometry::wrap_angle(d.center.angle() - h);
                intervals.push((start, start + 2.0 * h, i));
                intervals.push((start + TAU, start + TAU + 2.0 * h, i));
            }
            _ => global.push(i),
        }
    }
    intervals.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut pairs = Vec::new();
    let mut active: Vec<(f64, usize)> = Vec::new();
    for &(start, end, i) in &intervals {
        active.retain(|&(e, _)| e >= start);
        for &(_, j) in &active {
            if i != j {
                pairs.push((i.min(j), i.max(j)));
            }
        }
        active.push((end, i));
    }
    for &g in &global {
        for j in 0..disks.len() {
            if j != g {
                pairs.push((g.min(j), g.max(j)));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

fn check_disjoint(disks: &[Disk], tol: f64, report: &mut Report) {
    for (i, j) in candidate_pairs(disks, tol) {
        if !disks_interior_disjoint(&disks[i], &disks[j], tol) {
            let overlap = disks[i].radius + disks[j].radius - (disks[i].center - disks[j].center).norm();
            report.push(ViolationKind::Disjointness, overlap, format!("placements {i} and {j} overlap"));
        }
    }
}

fn check_clearance(l: &Layout, disks: &[Disk], occupant: &[Option<usize>], tol: f64, report: &mut Report) {
    let n_spokes = l.n_spokes;
    let unit = TAU / n_spokes as f64;
    for (i, d) in disks.iter().enumerate() {
        let own = l.placements[i].units;
        let range: Vec<usize> = match shadow(d, tol) {
            Some(h) if h < PI => {
                let theta = d.center.angle();
                let lo = libm::floor((theta - h) / unit) as i64 - 1;
                let hi = libm::ceil((theta + h) / unit) as i64 + 1;
                let count = ((hi - lo + 1) as usize).min(n_spokes);
                (0..count).map(|k| (lo + k as i64).rem_euclid(n_spokes as i64) as usize).collect()
            }
            _ => (0..n_spokes).collect(),
        };
        for u in range {
            if u == own {
                continue;
            }
            let dir = Vec2::polar(units_to_radians(u, n_spokes));
            let dist = match occupant[u] {
                Some(k) => point_segment_distance(d.center, Vec2::ZERO, disks[k].center),
                None => point_ray_distance(d.center, Vec2::ZERO, dir),
            };
            if dist < d.radius - tol {
                report.push(
                    ViolationKind::SpokeClearance,
                    d.radius - dist,
                    format!("spoke {} cuts the balloon of placement {i}", u + 1),
                );
            }
        }
    }
}

fn check_safety(l: &Layout, tol: f64, report: &mut Report) {
    let rounds = l.placements.iter().map(|p| p.round).max().unwrap_or(0);
    // reach[r] = outer radius of everything placed in rounds <= r
    let mut reach = alloc::vec![0.0f64; rounds + 1];
    for p in &l.placements {
        let outer = p.center_distance + l.radii[p.balloon];
        if p.round <= rounds {
            reach[p.round] = reach[p.round].max(outer);
        }
    }
    for r in 1..=rounds {
        reach[r] = reach[r].max(reach[r - 1]);
    }
    for (i, p) in l.placements.iter().enumerate() {
        if p.round == 0 {
            report.push(ViolationKind::Safety, 0.0, format!("placement {i} has no round"));
            continue;
        }
        let safe = if p.compacted { reach[p.round.saturating_sub(2)] } else { reach[p.round - 1] };
        let inner = p.center_distance - l.radii[p.balloon];
        if inner < safe - tol {
            report.push(
                ViolationKind::Safety,
                safe - inner,
                format!("placement {i} reaches into the safe disk of round {}", p.round),
            );
        }
    }
}

fn check_wedges(l: &Layout, disks: &[Disk], tol: f64, report: &mut Report) {
    for (i, (p, d)) in l.placements.iter().zip(disks).enumerate() {
        let Some(opening) = p.wedge_opening else { continue };
        if opening >= TAU {
            continue;
        }
        let theta = l.spoke_angle(p.units);
        for side in [-1.0, 1.0] {
            let boundary = Vec2::polar(theta + side * opening / 2.0);
            let dist = point_ray_distance(d.center, Vec2::ZERO, boundary);
            if dist < d.radius - tol {
                report.push(
                    ViolationKind::Wedge,
                    d.radius - dist,
                    format!("placement {i} leaves its wedge of opening {opening}"),
                );
            }
        }
    }
}
