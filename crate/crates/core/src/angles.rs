//! Exact cyclic spoke arithmetic.
//!
//! Every spoke direction is an integer number of base units, one unit being
//! `2π / n_base`. Splitting only ever removes spokes from the uniform start
//! configuration, so gaps stay integer and angular-resolution questions are
//! answered with exact integer comparisons.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use crate::error::{Error, Result};

/// A ray out of the origin, identified by its label in the original uniform
/// configuration (`1..=n_base`) and its direction in base units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Spoke {
    pub label: usize,
    pub units: usize,
}

impl Spoke {
    pub fn angle(&self, n_base: usize) -> f64 {
        units_to_radians(self.units, n_base)
    }
}

pub fn units_to_radians(units: usize, n_base: usize) -> f64 {
    TAU * units as f64 / n_base as f64
}

/// Spokes in counter-clockwise cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpokeSet {
    n_base: usize,
    spokes: Vec<Spoke>,
}

/// Result of one splitting round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    /// Spokes that stay available for later rounds, reordered so that the
    /// (at most two) small gaps come first.
    pub remaining: SpokeSet,
    /// Spokes that receive a balloon in this round, in placement order.
    pub used: Vec<Spoke>,
    /// For each used spoke, twice the smaller of its two adjacent gaps in the
    /// set that was split, in base units.
    pub openings: Vec<usize>,
}

impl SpokeSet {
    /// `n` spokes separated by one unit each, labeled `1..=n`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("spoke count must be positive"));
        }
        let spokes = (0..n).map(|i| Spoke { label: i + 1, units: i }).collect();
        Ok(Self { n_base: n, spokes })
    }

    /// Builds a set from explicit spokes, which must wind exactly once around
    /// the origin in the given order.
    pub fn from_spokes(n_base: usize, spokes: Vec<Spoke>) -> Result<Self> {
        if n_base == 0 || spokes.is_empty() {
            return Err(Error::InvalidArgument("spoke set must be non-empty"));
        }
        if spokes.iter().any(|s| s.units >= n_base || s.label == 0 || s.label > n_base) {
            return Err(Error::InvalidArgument("spoke outside the base configuration"));
        }
        let set = Self { n_base, spokes };
        if set.spokes.len() > 1 {
            let mut total = 0usize;
            for i in 0..set.len() {
                let g = set.gap(i);
                if g == 0 {
                    return Err(Error::InvalidArgument("duplicate spoke direction"));
                }
                total += g;
            }
            if total != n_base {
                return Err(Error::InvalidArgument("spokes are not in cyclic order"));
            }
        }
        Ok(set)
    }

    pub fn n_base(&self) -> usize {
        self.n_base
    }

    pub fn len(&self) -> usize {
        self.spokes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spokes.is_empty()
    }

    pub fn spokes(&self) -> &[Spoke] {
        &self.spokes
    }

    pub fn get(&self, position: usize) -> Spoke {
        self.spokes[position]
    }

    /// Gap in units from the spoke at `position` to its cyclic successor.
    pub fn gap(&self, position: usize) -> usize {
        let m = self.spokes.len();
        if m == 1 {
            return self.n_base;
        }
        let a = self.spokes[position].units;
        let next = if position + 1 == m { 0 } else { position + 1 };
        let b = self.spokes[next].units;
        if b > a {
            b - a
        } else {
            b + self.n_base - a
        }
    }

    pub fn gaps(&self) -> Vec<usize> {
        (0..self.len()).map(|i| self.gap(i)).collect()
    }

    pub fn max_gap(&self) -> usize {
        (0..self.len()).map(|i| self.gap(i)).max().unwrap_or(0)
    }

    pub fn position_of(&self, label: usize) -> Option<usize> {
        self.spokes.iter().position(|s| s.label == label)
    }

    /// All gaps equal the maximum `g` except at most two, which sit at
    /// positions 0 and 1 and are each at least `⌈g/2⌉`.
    pub fn is_well_separated(&self) -> bool {
        let g = self.max_gap();
        (0..self.len()).all(|i| {
            let gap = self.gap(i);
            gap == g || (i < 2 && 2 * gap >= g)
        })
    }

    /// Opening in units of the wedge assigned to the spoke at `position`:
    /// twice the smaller adjacent gap, capped at a full turn.
    pub fn opening_units_at(&self, position: usize) -> usize {
        let m = self.len();
        let before = self.gap((position + m - 1) % m);
        let after = self.gap(position);
        (2 * before.min(after)).min(self.n_base)
    }

    /// Opening angle (radians) for the spoke labeled `label`.
    pub fn opening_angle(&self, label: usize) -> Result<f64> {
        if self.len() < 2 {
            return Err(Error::InvalidArgument("opening angle needs at least two spokes"));
        }
        let pos = self
            .position_of(label)
            .ok_or(Error::InvalidArgument("spoke is not part of the set"))?;
        Ok(units_to_radians(self.opening_units_at(pos), self.n_base))
    }

    /// Takes every spoke at an even (1-based) position for the current round
    /// and moves the last remaining spoke to the front.
    pub fn split(&self) -> Result<Split> {
        if self.len() < 3 {
            return Err(Error::InvalidArgument("splitting needs at least three spokes"));
        }
        if !self.is_well_separated() {
            return Err(Error::Precondition("spoke set is not well-separated"));
        }
        let m = self.len();
        let mut used = Vec::with_capacity(m / 2);
        let mut openings = Vec::with_capacity(m / 2);
        let mut kept = Vec::with_capacity(m - m / 2);
        for (i, spoke) in self.spokes.iter().enumerate() {
            if i % 2 == 1 {
                used.push(*spoke);
                openings.push(self.opening_units_at(i));
            } else {
                kept.push(*spoke);
            }
        }
        kept.rotate_right(1);
        let remaining = Self { n_base: self.n_base, spokes: kept };
        Ok(Split { remaining, used, openings })
    }
}

impl SpokeSet {
    /// Same as [`SpokeSet::split`], but keeps the remaining spokes in `self`
    /// and writes the used spokes and their openings into the given buffers.
    pub(crate) fn split_in_place(&mut self, used: &mut Vec<Spoke>, openings: &mut Vec<usize>) -> Result<()> {
        if self.len() < 3 {
            return Err(Error::InvalidArgument("splitting needs at least three spokes"));
        }
        if !self.is_well_separated() {
            return Err(Error::Precondition("spoke set is not well-separated"));
        }
        used.clear();
        openings.clear();
        for i in (1..self.len()).step_by(2) {
            used.push(self.spokes[i]);
            openings.push(self.opening_units_at(i));
        }
        let kept = self.len() - used.len();
        for i in 0..kept {
            self.spokes[i] = self.spokes[2 * i];
        }
        self.spokes.truncate(kept);
        self.spokes.rotate_right(1);
        Ok(())
    }
}

/// Spoke-splitting step: `(T, T')` with `T'` the spokes used this round.
pub fn split_spokes(set: &SpokeSet) -> Result<(SpokeSet, Vec<Spoke>)> {
    let split = set.split()?;
    Ok((split.remaining, split.used))
}
