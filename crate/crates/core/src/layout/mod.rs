//! Greedy layered balloon layouts.
//!
//! Balloons are consumed smallest first, in rounds. Each round splits the
//! remaining spokes, puts one balloon on every used spoke as close to the
//! origin as allowed by the safe disk (everything placed before) and by the
//! spoke's wedge, and grows the safe disk by the widest placement. The last
//! one or two balloons go through a terminal rule that depends on how many
//! spokes must stay free.

mod order;

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

pub use order::{is_weakly_ordered, weakly_order};
pub(crate) use order::validate_radii;

use crate::angles::{units_to_radians, Spoke, SpokeSet};
use crate::error::{Error, Result};
use crate::geometry::{compact_factor, wedge_center_distance, Disk, Vec2, KAPPA};

/// How many spokes stay without a balloon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FreeSpokes {
    Zero,
    One,
    Two,
}

impl FreeSpokes {
    pub fn count(self) -> usize {
        match self {
            FreeSpokes::Zero => 0,
            FreeSpokes::One => 1,
            FreeSpokes::Two => 2,
        }
    }

    pub fn from_count(count: usize) -> Option<Self> {
        match count {
            0 => Some(FreeSpokes::Zero),
            1 => Some(FreeSpokes::One),
            2 => Some(FreeSpokes::Two),
            _ => None,
        }
    }

    /// Guaranteed covering radius per unit of total balloon radius.
    pub fn bound(self) -> f64 {
        match self {
            FreeSpokes::Zero | FreeSpokes::One => 2.0,
            FreeSpokes::Two => KAPPA,
        }
    }

    /// Spoke count at which the greedy rounds stop and a terminal rule takes
    /// over.
    fn terminal_spokes(self) -> usize {
        match self {
            FreeSpokes::Zero => 2,
            FreeSpokes::One => 3,
            FreeSpokes::Two => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LayerKind {
    /// Width set by a balloon touching the safe disk.
    Contact,
    /// Width set by a balloon touching the boundary of its wedge.
    Wedge,
}

/// One greedy round. The final round is always recorded as a contact layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Layer {
    pub round: usize,
    pub kind: LayerKind,
    /// Spokes available at the start of the round.
    pub spokes: usize,
    /// Radius of the safe disk before the round.
    pub safe_before: f64,
    pub width: f64,
}

impl Layer {
    pub fn safe_after(&self) -> f64 {
        self.safe_before + self.width
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Placement {
    /// Index into the caller's radii.
    pub balloon: usize,
    /// Label of the spoke, `1..=n_spokes`.
    pub spoke: usize,
    /// Direction of the spoke in units of `2π / n_spokes`.
    pub units: usize,
    pub center_distance: f64,
    pub round: usize,
    /// Opening of the wedge the balloon was confined to, if any.
    pub wedge_opening: Option<f64>,
    /// Placed partly inside the safe disk by the compactification rule.
    pub compacted: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    pub n_spokes: usize,
    pub variant: FreeSpokes,
    pub radii: Vec<f64>,
    /// Processing order; `order[k]` is the balloon placed `k`-th.
    pub order: Vec<usize>,
    pub placements: Vec<Placement>,
    /// Labels of spokes without a balloon.
    pub free_spokes: Vec<usize>,
    /// Smaller angle between the two free spokes, when there are two.
    pub free_angle: Option<f64>,
    pub layers: Vec<Layer>,
    pub covering_radius: f64,
}

impl Layout {
    pub fn spoke_angle(&self, units: usize) -> f64 {
        units_to_radians(units, self.n_spokes)
    }

    pub fn center(&self, p: &Placement) -> Vec2 {
        Vec2::from_polar(p.center_distance, self.spoke_angle(p.units))
    }

    pub fn disk(&self, p: &Placement) -> Disk {
        Disk { center: self.center(p), radius: self.radii[p.balloon] }
    }

    pub fn radius_sum(&self) -> f64 {
        self.radii.iter().sum()
    }
}

/// Layout with as many spokes as balloons.
pub fn greedy_balloon(radii: &[f64]) -> Result<Layout> {
    layout(radii, FreeSpokes::Zero)
}

/// Layout with one spoke more than balloons.
pub fn greedy_one_free(radii: &[f64]) -> Result<Layout> {
    layout(radii, FreeSpokes::One)
}

/// Layout with two spokes more than balloons; the free spokes are at least
/// `2π/3` apart.
pub fn greedy_two_free(radii: &[f64]) -> Result<Layout> {
    layout(radii, FreeSpokes::Two)
}

pub fn layout(radii: &[f64], variant: FreeSpokes) -> Result<Layout> {
    validate_radii(radii)?;
    let n = radii.len();
    let n_spokes = n + variant.count();
    let stop = variant.terminal_spokes();

    let mut groups = Vec::new();
    let mut k = n_spokes;
    while k > stop {
        groups.push(k / 2);
        k -= k / 2;
    }
    let placed_in_rounds: usize = groups.iter().sum();
    groups.push(n - placed_in_rounds);
    run(radii, variant, order::order_by_groups(radii, &groups))
}

/// Runs the engine with an explicit processing order instead of the
/// round-aligned one. `order` must be a permutation of the balloon indices;
/// a weakly ordered or fully sorted order gives the same layer widths.
pub fn layout_with_order(radii: &[f64], variant: FreeSpokes, order: &[usize]) -> Result<Layout> {
    validate_radii(radii)?;
    let mut seen = alloc::vec![false; radii.len()];
    if order.len() != radii.len() || order.iter().any(|&i| i >= radii.len() || core::mem::replace(&mut seen[i], true)) {
        return Err(Error::InvalidArgument("order must be a permutation of the balloons"));
    }
    run(radii, variant, order.to_vec())
}

fn run(radii: &[f64], variant: FreeSpokes, order: Vec<usize>) -> Result<Layout> {
    let n = radii.len();
    let n_spokes = n + variant.count();
    let stop = variant.terminal_spokes();
    let mut engine = Engine {
        radii,
        order,
        next: 0,
        n_spokes,
        safe: 0.0,
        round: 0,
        placements: Vec::with_capacity(n),
        layers: Vec::new(),
    };
    let mut spokes = SpokeSet::uniform(n_spokes)?;
    let mut used = Vec::with_capacity(n_spokes / 2);
    let mut openings = Vec::with_capacity(n_spokes / 2);
    while spokes.len() > stop {
        engine.round(&mut spokes, &mut used, &mut openings)?;
    }
    if !spokes.is_well_separated() {
        return Err(Error::Invariant("terminal spoke set is not well-separated"));
    }
    let (free_spokes, free_angle) = match variant {
        FreeSpokes::Zero => (engine.finish_zero(&spokes)?, None),
        FreeSpokes::One => (engine.finish_one(&spokes)?, None),
        FreeSpokes::Two => {
            let free = engine.finish_two(&spokes)?;
            let angle = free_separation(&spokes, free[0], free[1], n_spokes);
            (free, Some(angle))
        }
    };
    if engine.next != n {
        return Err(Error::Invariant("not every balloon was placed"));
    }
    let covering_radius = engine.safe;
    Ok(Layout {
        n_spokes,
        variant,
        radii: radii.to_vec(),
        order: engine.order,
        placements: engine.placements,
        free_spokes,
        free_angle,
        layers: engine.layers,
        covering_radius,
    })
}

fn free_separation(set: &SpokeSet, a: usize, b: usize, n_spokes: usize) -> f64 {
    let ua = set.spokes().iter().find(|s| s.label == a).map_or(0, |s| s.units);
    let ub = set.spokes().iter().find(|s| s.label == b).map_or(0, |s| s.units);
    let d = (ua + n_spokes - ub) % n_spokes;
    units_to_radians(d.min(n_spokes - d), n_spokes)
}

struct Engine<'a> {
    radii: &'a [f64],
    order: Vec<usize>,
    next: usize,
    n_spokes: usize,
    safe: f64,
    round: usize,
    placements: Vec<Placement>,
    layers: Vec<Layer>,
}

impl Engine<'_> {
    fn take(&mut self) -> usize {
        let b = self.order[self.next];
        self.next += 1;
        b
    }

    fn place(&mut self, balloon: usize, spoke: Spoke, c: f64, wedge: Option<f64>, compacted: bool) {
        self.placements.push(Placement {
            balloon,
            spoke: spoke.label,
            units: spoke.units,
            center_distance: c,
            round: self.round,
            wedge_opening: wedge,
            compacted,
        });
    }

    fn round(&mut self, spokes: &mut SpokeSet, used: &mut Vec<Spoke>, openings: &mut Vec<usize>) -> Result<()> {
        self.round += 1;
        let before = spokes.len();
        spokes.split_in_place(used, openings)?;
        let safe = self.safe;
        let mut reach = safe;
        let mut wedge_defined = false;
        for (&spoke, &opening) in used.iter().zip(openings.iter()) {
            let b = self.take();
            let r = self.radii[b];
            let phi = units_to_radians(opening, self.n_spokes);
            // past π the apex is the nearest point of both boundary rays
            let wedge = wedge_center_distance(r, phi.min(PI))?;
            let contact = safe + r;
            let c = wedge.max(contact);
            let outer = c + r;
            if outer > reach {
                reach = outer;
                wedge_defined = wedge > contact;
            } else if outer == reach && wedge > contact {
                wedge_defined = true;
            }
            self.place(b, spoke, c, Some(phi), false);
        }
        let kind = if wedge_defined { LayerKind::Wedge } else { LayerKind::Contact };
        self.layers.push(Layer {
            round: self.round,
            kind,
            spokes: before,
            safe_before: safe,
            width: reach - safe,
        });
        self.safe = reach;
        Ok(())
    }

    /// Records the final layer from the placements made in the terminal step.
    fn close(&mut self, spokes: usize, first: usize) {
        let safe = self.safe;
        let reach = self.placements[first..]
            .iter()
            .map(|p| p.center_distance + self.radii[p.balloon])
            .fold(safe, f64::max);
        self.layers.push(Layer {
            round: self.round,
            kind: LayerKind::Contact,
            spokes,
            safe_before: safe,
            width: reach - safe,
        });
        self.safe = reach;
    }

    /// Two spokes left: the largest balloon touches the safe disk and the
    /// other sits in a wedge of opening `π/3` around its spoke.
    fn finish_zero(&mut self, spokes: &SpokeSet) -> Result<Vec<usize>> {
        self.round += 1;
        let first = self.placements.len();
        let safe = self.safe;
        match spokes.len() {
            1 => {
                let b = self.take();
                self.place(b, spokes.get(0), safe + self.radii[b], None, false);
            }
            2 => {
                let small = self.take();
                let large = self.take();
                self.place(large, spokes.get(0), safe + self.radii[large], None, false);
                let r = self.radii[small];
                self.place(small, spokes.get(1), (2.0 * r).max(safe + r), Some(PI / 3.0), false);
            }
            _ => return Err(Error::Invariant("unexpected terminal spoke count")),
        }
        self.close(spokes.len(), first);
        Ok(Vec::new())
    }

    fn finish_one(&mut self, spokes: &SpokeSet) -> Result<Vec<usize>> {
        self.round += 1;
        let first = self.placements.len();
        let safe = self.safe;
        let n = self.n_spokes;
        let free = match spokes.len() {
            2 => {
                let b = self.take();
                self.place(b, spokes.get(0), safe + self.radii[b], None, false);
                spokes.get(1)
            }
            3 => {
                let gaps = spokes.gaps();
                // the spoke opposite the smallest gap sits between the two largest
                let smallest = (0..3).min_by_key(|&i| (gaps[i], i)).unwrap_or(0);
                let apex = (smallest + 2) % 3;
                let before = gaps[(smallest + 1) % 3];
                let after = gaps[apex];
                let (wide, free_pos, wide_gap, narrow_gap) = if after >= before {
                    (smallest, (smallest + 1) % 3, after, before)
                } else {
                    ((smallest + 1) % 3, smallest, before, after)
                };
                if 3 * wide_gap < n || 4 * narrow_gap < n {
                    return Err(Error::Invariant("three-spoke terminal gaps are too small"));
                }
                let small = self.take();
                let large = self.take();
                self.place(large, spokes.get(apex), safe + self.radii[large], None, false);
                let r = self.radii[small];
                self.place(small, spokes.get(wide), (2.0 * r).max(safe + r), Some(PI / 3.0), false);
                spokes.get(free_pos)
            }
            _ => return Err(Error::Invariant("unexpected terminal spoke count")),
        };
        self.close(spokes.len(), first);
        Ok(alloc::vec![free.label])
    }

    fn finish_two(&mut self, spokes: &SpokeSet) -> Result<Vec<usize>> {
        self.round += 1;
        let first = self.placements.len();
        let safe = self.safe;
        let n = self.n_spokes;
        let free = match spokes.len() {
            3 => {
                let gaps = spokes.gaps();
                let largest = (0..3).max_by_key(|&i| (gaps[i], core::cmp::Reverse(i))).unwrap_or(0);
                let apex = (largest + 2) % 3;
                if 5 * gaps[apex] < n || 5 * gaps[(apex + 2) % 3] < n {
                    return Err(Error::Invariant("single-balloon terminal wedge is too narrow"));
                }
                let b = self.take();
                let r = self.radii[b];
                let phi = 4.0 * PI / 5.0;
                let wedge = wedge_center_distance(r, phi)?;
                let mut c = wedge.max(safe + r);
                let mut compacted = false;
                if let Some(prev) = self.layers.last() {
                    if prev.kind == LayerKind::Wedge && (prev.spokes == 5 || prev.spokes == 6) {
                        let beta = TAU / (2 * prev.spokes - 1) as f64;
                        let line = safe * compact_factor(beta)?;
                        let pushed = wedge.max(line + r).max(prev.safe_before + r);
                        if pushed < c {
                            c = pushed;
                            compacted = true;
                        }
                    }
                }
                self.place(b, spokes.get(apex), c, Some(phi), compacted);
                alloc::vec![spokes.get(largest).label, spokes.get((largest + 1) % 3).label]
            }
            4 => {
                let gaps = spokes.gaps();
                let small = gaps[0].max(gaps[1]);
                if gaps[2] < small || gaps[3] < small || 4 * gaps[2] < n || 4 * gaps[3] < n {
                    return Err(Error::Invariant("four-spoke terminal has misplaced large gaps"));
                }
                if 7 * gaps[0].min(gaps[1]) < n || 3 * (gaps[0] + gaps[1]) < n {
                    return Err(Error::Invariant("four-spoke terminal gaps are too small"));
                }
                let small_b = self.take();
                let large_b = self.take();
                self.place(large_b, spokes.get(3), safe + self.radii[large_b], None, false);
                let r = self.radii[small_b];
                let phi = 4.0 * PI / 7.0;
                let c = wedge_center_distance(r, phi)?.max(safe + r);
                self.place(small_b, spokes.get(1), c, Some(phi), false);
                alloc::vec![spokes.get(0).label, spokes.get(2).label]
            }
            _ => return Err(Error::Invariant("unexpected terminal spoke count")),
        };
        self.close(spokes.len(), first);
        Ok(free)
    }
}
