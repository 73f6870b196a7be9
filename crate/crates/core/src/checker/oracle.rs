use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, TAU};

use crate::angles::SpokeSet;
use crate::error::{Error, Result};
use crate::geometry::{disks_interior_disjoint, point_ray_distance, point_segment_distance, Disk, Vec2};
use crate::layout::validate_radii;

/// Upper bound on the number of contact layers that can follow a wedge layer
/// with `l` spokes: `f(3) = f(4) = 1` and `f(l) = 1 + f(⌈l/2⌉)` beyond.
pub fn contact_layer_bound(l: usize) -> Result<u32> {
    if l < 3 {
        return Err(Error::InvalidArgument("contact layer bound needs at least three spokes"));
    }
    let mut l = l;
    let mut f = 1;
    while l > 4 {
        l = l.div_ceil(2);
        f += 1;
    }
    Ok(f)
}

/// Smallest covering radius found by exhaustive search for up to three
/// balloons on the given spokes, with `free_required` of the remaining
/// spokes kept free as rays (two free spokes must be at least
/// `min_free_angle` apart). Spokes that are neither used nor free are
/// ignored.
///
/// For every assignment and every inside-out order of the balloons, each
/// balloon is pushed outward to the first position where it clears the
/// free rays, the full rays of all balloons outside it, and every balloon
/// inside it together with that balloon's spoke segment.
pub fn tiny_oracle(radii: &[f64], spokes: &SpokeSet, free_required: usize, min_free_angle: f64) -> Result<f64> {
    validate_radii(radii)?;
    if radii.len() > 3 {
        return Err(Error::Unsupported("the exhaustive oracle handles at most three balloons"));
    }
    if free_required > 2 {
        return Err(Error::InvalidArgument("at most two free spokes"));
    }
    let k = radii.len();
    let m = spokes.len();
    if m < k + free_required {
        return Err(Error::InvalidArgument("not enough spokes"));
    }
    let angles: Vec<f64> = spokes.spokes().iter().map(|s| s.angle(spokes.n_base())).collect();

    let mut best = f64::INFINITY;
    let mut assignment = Vec::with_capacity(k);
    for_each_injection(k, m, &mut assignment, &mut |assign| {
        let unused: Vec<usize> = (0..m).filter(|s| !assign.contains(s)).collect();
        for_each_subset(&unused, free_required, &mut |free| {
            if free.len() == 2 && separation(angles[free[0]], angles[free[1]]) < min_free_angle - 1e-12 {
                return;
            }
            let dirs: Vec<f64> = assign.iter().map(|&s| angles[s]).collect();
            let free_dirs: Vec<f64> = free.iter().map(|&s| angles[s]).collect();
            for_each_permutation(k, &mut |order| {
                if let Some(r) = place(radii, &dirs, &free_dirs, order) {
                    best = best.min(r);
                }
            });
        });
    });
    if best.is_finite() {
        Ok(best)
    } else {
        Err(Error::Precondition("no admissible arrangement"))
    }
}

fn separation(a: f64, b: f64) -> f64 {
    let d = crate::geometry::wrap_angle(b - a);
    d.min(TAU - d)
}

/// Center distance at which a disk of radius `r` on a spoke at angle `theta`
/// from a ray clears that whole ray.
fn ray_bound(r: f64, theta: f64) -> f64 {
    if theta >= FRAC_PI_2 {
        r
    } else {
        r / libm::sin(theta)
    }
}

/// Smallest center distance for a disk of radius `r` that clears a segment
/// of length `len` at angle `theta`.
fn segment_bound(r: f64, len: f64, theta: f64) -> f64 {
    if theta >= FRAC_PI_2 {
        return r;
    }
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    let perp = r / s;
    if perp * c <= len {
        perp
    } else {
        len * c + libm::sqrt((r * r - len * len * s * s).max(0.0))
    }
}

/// Smallest center distance beyond an inner disk at distance `inner` and
/// angle `theta` that keeps the two disks (radii summing to `sum`) apart.
fn beyond_bound(inner: f64, sum: f64, theta: f64) -> f64 {
    let s = inner * libm::sin(theta);
    let disc = sum * sum - s * s;
    if disc <= 0.0 {
        0.0
    } else {
        inner * libm::cos(theta) + libm::sqrt(disc)
    }
}

fn place(radii: &[f64], dirs: &[f64], free: &[f64], order: &[usize]) -> Option<f64> {
    let k = radii.len();
    let mut c = [0.0f64; 3];
    for (pos, &i) in order.iter().enumerate() {
        let r = radii[i];
        let mut lb = r;
        for &f in free {
            lb = lb.max(ray_bound(r, separation(dirs[i], f)));
        }
        for &j in &order[pos + 1..] {
            lb = lb.max(ray_bound(r, separation(dirs[i], dirs[j])));
        }
        for &e in &order[..pos] {
            let theta = separation(dirs[i], dirs[e]);
            lb = lb.max(beyond_bound(c[e], r + radii[e], theta));
            lb = lb.max(segment_bound(r, c[e], theta));
        }
        c[i] = lb;
    }

    // independent verification of the arrangement
    let tol = 1e-9;
    let disks: Vec<Disk> = (0..k)
        .map(|i| Disk { center: Vec2::from_polar(c[i], dirs[i]), radius: radii[i] })
        .collect();
    for i in 0..k {
        for &f in free {
            if point_ray_distance(disks[i].center, Vec2::ZERO, Vec2::polar(f)) < radii[i] - tol {
                return None;
            }
        }
        for j in 0..k {
            if i == j {
                continue;
            }
            if !disks_interior_disjoint(&disks[i], &disks[j], tol)
                || point_segment_distance(disks[i].center, Vec2::ZERO, disks[j].center) < radii[i] - tol
            {
                return None;
            }
        }
    }
    Some((0..k).map(|i| c[i] + radii[i]).fold(0.0, f64::max))
}

fn for_each_injection(k: usize, m: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for s in 0..m {
        if !acc.contains(&s) {
            acc.push(s);
            for_each_injection(k, m, acc, f);
            acc.pop();
        }
    }
}

fn for_each_subset(items: &[usize], size: usize, f: &mut dyn FnMut(&[usize])) {
    match size {
        0 => f(&[]),
        1 => items.iter().for_each(|&a| f(&[a])),
        _ => {
            for (i, &a) in items.iter().enumerate() {
                for &b in &items[i + 1..] {
                    f(&[a, b]);
                }
            }
        }
    }
}

fn for_each_permutation(k: usize, f: &mut dyn FnMut(&[usize])) {
    let mut acc = Vec::with_capacity(k);
    for_each_injection(k, k, &mut acc, f);
}
