//! Scalar geometry kernel shared by the layout engines and the checker.

use core::f64::consts::{PI, TAU};
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// `1 + √(2 − 2/√5)`, the covering factor of a balloon in a wedge of
/// opening `4π/5`; equals `alpha(4π/5)`.
pub const KAPPA: f64 = 2.051_462_224_238_267_2;

/// Default absolute tolerance for geometric predicates.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Unit vector at angle `theta`.
    pub fn polar(theta: f64) -> Self {
        Self { x: libm::cos(theta), y: libm::sin(theta) }
    }

    pub fn from_polar(length: f64, theta: f64) -> Self {
        Self::polar(theta) * length
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        libm::hypot(self.x, self.y)
    }

    pub fn angle(self) -> f64 {
        libm::atan2(self.y, self.x)
    }

    /// Counter-clockwise rotation by `theta`.
    pub fn rotate(self, theta: f64) -> Self {
        let (s, c) = (libm::sin(theta), libm::cos(theta));
        Self { x: c * self.x - s * self.y, y: s * self.x + c * self.y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, k: f64) -> Vec2 {
        Vec2::new(self.x * k, self.y * k)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// A closed disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Vec2,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Vec2, radius: f64) -> Result<Self> {
        if radius <= 0.0 || !radius.is_finite() || !center.is_finite() {
            return Err(Error::InvalidArgument("disk needs a finite center and positive radius"));
        }
        Ok(Self { center, radius })
    }
}

/// Covering factor of a balloon that touches both sides of a wedge with
/// opening `phi`: `(1 + sin(φ/2)) / sin(φ/2)`.
///
/// Evaluated in double-double arithmetic, so the result is the correctly
/// rounded value for the given `f64` angle in practice (`alpha(PI / 3.0)` is
/// exactly `3.0`).
pub fn alpha(phi: f64) -> Result<f64> {
    if !(phi > 0.0 && phi <= TAU) {
        return Err(Error::InvalidArgument("wedge opening must lie in (0, 2π]"));
    }
    let s = dd::sin(phi / 2.0);
    if s.0 <= 0.0 {
        return Ok(1.0 + 1.0 / libm::sin(phi / 2.0));
    }
    let inv = dd::recip(s);
    let (h, e) = dd::two_sum(1.0, inv.0);
    Ok(h + (e + inv.1))
}

/// Minimal double-double helpers for [`alpha`].
mod dd {
    use core::f64::consts::{FRAC_PI_2, PI};

    const PI_LO: f64 = 1.224_646_799_147_353_2e-16;

    pub type Dd = (f64, f64);

    pub fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        (s, (a - (s - bb)) + (b - bb))
    }

    fn quick(a: f64, b: f64) -> Dd {
        let s = a + b;
        (s, b - (s - a))
    }

    fn add(a: Dd, b: Dd) -> Dd {
        let (s, e) = two_sum(a.0, b.0);
        quick(s, e + a.1 + b.1)
    }

    fn mul(a: Dd, b: Dd) -> Dd {
        let p = a.0 * b.0;
        let e = libm::fma(a.0, b.0, -p);
        quick(p, e + a.0 * b.1 + a.1 * b.0)
    }

    fn div_f64(a: Dd, d: f64) -> Dd {
        let q = a.0 / d;
        let p = q * d;
        let e = libm::fma(q, d, -p);
        quick(q, (a.0 - p - e + a.1) / d)
    }

    pub fn recip(s: Dd) -> Dd {
        let q = 1.0 / s.0;
        let r = add((1.0, 0.0), mul(s, (-q, 0.0)));
        quick(q, r.0 / s.0)
    }

    /// `sin(x)` for `0 <= x <= π`.
    pub fn sin(x: f64) -> Dd {
        // reduce to [0, π/2]; `PI - x` is exact for x in [π/2, π]
        let t = if x > FRAC_PI_2 { quick(PI - x, PI_LO) } else { (x, 0.0) };
        let t2 = mul(t, t);
        let mut term = t;
        let mut sum = t;
        for k in 1..=20u32 {
            let d = f64::from((2 * k) * (2 * k + 1));
            term = div_f64(mul(term, t2), -d);
            sum = add(sum, term);
        }
        sum
    }
}

/// Distance from the apex at which a balloon of radius `r` centered on the
/// wedge axis touches both wedge boundaries: `r / sin(φ/2)`.
pub fn wedge_center_distance(r: f64, phi: f64) -> Result<f64> {
    if r.is_nan() || r <= 0.0 {
        return Err(Error::InvalidArgument("radius must be positive"));
    }
    if !(phi > 0.0 && phi <= TAU) {
        return Err(Error::InvalidArgument("wedge opening must lie in (0, 2π]"));
    }
    let s = libm::sin(phi / 2.0);
    // a full turn has no boundary to touch
    if s <= 0.0 {
        return Ok(r);
    }
    Ok(r / s)
}

/// `(sin β + cos β) / (sin β + 1)`: times a covering radius `s`, the distance
/// from the origin of a line perpendicular to one spoke that separates any
/// balloon on a second spoke (at angle `β`, inside the radius-`s` disk and
/// clear of the first spoke) from the far side.
pub fn compact_factor(beta: f64) -> Result<f64> {
    if !(beta > 0.0 && beta <= PI / 2.0) {
        return Err(Error::InvalidArgument("angle must lie in (0, π/2]"));
    }
    let (s, c) = (libm::sin(beta), libm::cos(beta));
    Ok((s + c) / (s + 1.0))
}

pub fn disks_interior_disjoint(a: &Disk, b: &Disk, tol: f64) -> bool {
    (a.center - b.center).norm() >= a.radius + b.radius - tol
}

/// Euclidean distance from `x` to the segment `pq`.
pub fn point_segment_distance(x: Vec2, p: Vec2, q: Vec2) -> f64 {
    let d = q - p;
    let len2 = d.dot(d);
    if len2 == 0.0 {
        return (x - p).norm();
    }
    let t = ((x - p).dot(d) / len2).clamp(0.0, 1.0);
    (x - (p + d * t)).norm()
}

/// Euclidean distance from `x` to the ray starting at `origin` with
/// direction `dir` (need not be normalized).
pub fn point_ray_distance(x: Vec2, origin: Vec2, dir: Vec2) -> f64 {
    let len2 = dir.dot(dir);
    let t = ((x - origin).dot(dir) / len2).max(0.0);
    (x - (origin + dir * t)).norm()
}

pub fn segment_clear_of_disk(p: Vec2, q: Vec2, d: &Disk, tol: f64) -> bool {
    point_segment_distance(d.center, p, q) >= d.radius - tol
}

pub fn ray_clear_of_disk(origin: Vec2, dir: Vec2, d: &Disk, tol: f64) -> bool {
    point_ray_distance(d.center, origin, dir) >= d.radius - tol
}

/// True iff the open segments `ab` and `cd` cross at a single interior point
/// of both. Shared endpoints and touching do not count.
pub fn segments_properly_cross(a: Vec2, b: Vec2, c: Vec2, d: Vec2, tol: f64) -> bool {
    let scale = |u: Vec2, v: Vec2| (u.norm() * v.norm()).max(f64::MIN_POSITIVE);
    let o1 = (b - a).cross(c - a) / scale(b - a, c - a);
    let o2 = (b - a).cross(d - a) / scale(b - a, d - a);
    let o3 = (d - c).cross(a - c) / scale(d - c, a - c);
    let o4 = (d - c).cross(b - c) / scale(d - c, b - c);
    ((o1 > tol && o2 < -tol) || (o1 < -tol && o2 > tol))
        && ((o3 > tol && o4 < -tol) || (o3 < -tol && o4 > tol))
}

/// Normalizes an angle to `[0, 2π)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let t = theta % TAU;
    if t < 0.0 {
        t + TAU
    } else {
        t
    }
}

/// Signed angle in `(-π, π]`.
pub fn signed_angle(theta: f64) -> f64 {
    let t = wrap_angle(theta);
    if t > PI {
        t - TAU
    } else {
        t
    }
}
