//! Planar poses, angle arithmetic, turning circles, and the quadrant
//! mirror transforms that map a query into the first local quadrant and a
//! solution back out of it.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{check_radius, Error, Result};
use crate::path::{RsPath, SegmentKind};

/// A 2D point or vector.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product.
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn distance(self, o: Vec2) -> f64 {
        (self - o).norm()
    }

    /// Angle of the vector, in (-pi, pi].
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
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
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Wraps a finite angle into [-pi, pi). Internal fast path; the public
/// checked variant is [`normalize_angle`].
#[inline]
pub(crate) fn wrap_angle(a: f64) -> f64 {
    let mut v = a % (2.0 * PI);
    if v < -PI {
        v += 2.0 * PI;
    } else if v >= PI {
        v -= 2.0 * PI;
    }
    v
}

/// Normalizes an angle to the canonical heading range [-pi, pi).
///
/// Rejects NaN and infinite input rather than propagating it.
pub fn normalize_angle(a: f64) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::NonFinite("angle"));
    }
    Ok(wrap_angle(a))
}

/// A planar configuration (x, y, heading) of the rear-axle center.
///
/// The heading is always kept in [-pi, pi).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Pose {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

impl Pose {
    /// Builds a pose, normalizing the heading. Errors on non-finite input.
    pub fn new(x: f64, y: f64, theta: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::NonFinite("position"));
        }
        Ok(Self {
            x,
            y,
            theta: normalize_angle(theta)?,
        })
    }

    /// Infallible constructor for values already known to be finite.
    pub(crate) fn wrapped(x: f64, y: f64, theta: f64) -> Self {
        Self {
            x,
            y,
            theta: wrap_angle(theta),
        }
    }

    pub fn position(&self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }

    pub fn heading_vec(&self) -> Vec2 {
        Vec2::new(self.theta.cos(), self.theta.sin())
    }
}

/// The left- and right-hand circles traced at full steering lock.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurningCircles {
    pub c_left: Vec2,
    pub c_right: Vec2,
    pub radius: f64,
}

/// Centers of the turning circles of `p`: the right center sits at bearing
/// `theta - pi/2`, the left at `theta + pi/2`, both at distance `r`.
pub fn turning_circle_centers(p: Pose, r: f64) -> Result<TurningCircles> {
    let r = check_radius(r)?;
    let (s, c) = (p.theta - PI / 2.0).sin_cos();
    Ok(TurningCircles {
        c_left: Vec2::new(p.x - r * c, p.y - r * s),
        c_right: Vec2::new(p.x + r * c, p.y + r * s),
        radius: r,
    })
}

/// Expresses `pf` in the frame of `p0` (p0 maps to the origin pose).
pub fn to_local_frame(p0: Pose, pf: Pose) -> Pose {
    let dx = pf.x - p0.x;
    let dy = pf.y - p0.y;
    let (s, c) = p0.theta.sin_cos();
    Pose::wrapped(c * dx + s * dy, -s * dx + c * dy, pf.theta - p0.theta)
}

/// Inverse of [`to_local_frame`].
pub fn from_local_frame(p0: Pose, local: Pose) -> Pose {
    let (s, c) = p0.theta.sin_cos();
    Pose::wrapped(
        p0.x + c * local.x - s * local.y,
        p0.y + s * local.x + c * local.y,
        local.theta + p0.theta,
    )
}

/// Quadrant of the local frame a goal was mirrored from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Quadrant {
    Q1,
    Q2,
    Q3,
    Q4,
}

/// Mirrors a local goal configuration into the first local quadrant.
///
/// Boundary ties (dx = 0 or dy = 0) are resolved by branch order: Q1 wins
/// over Q2 wins over Q3 wins over Q4. At a boundary the mirrored queries
/// are co-optimal, so any consistent choice yields the same length.
pub fn forward_project_to_q1(start_xy: Vec2, pf_local: Pose) -> (Pose, Quadrant) {
    let dx = pf_local.x - start_xy.x;
    let dy = pf_local.y - start_xy.y;
    if dx > 0.0 && dy > 0.0 {
        (pf_local, Quadrant::Q1)
    } else if dx <= 0.0 && dy >= 0.0 {
        (
            Pose::wrapped(
                2.0 * start_xy.x - pf_local.x,
                pf_local.y,
                2.0 * PI - pf_local.theta,
            ),
            Quadrant::Q2,
        )
    } else if dx <= 0.0 && dy <= 0.0 {
        (
            Pose::wrapped(
                2.0 * start_xy.x - pf_local.x,
                2.0 * start_xy.y - pf_local.y,
                pf_local.theta,
            ),
            Quadrant::Q3,
        )
    } else {
        (
            Pose::wrapped(
                pf_local.x,
                2.0 * start_xy.y - pf_local.y,
                2.0 * PI - pf_local.theta,
            ),
            Quadrant::Q4,
        )
    }
}

/// Maps a path solved in the first quadrant back to the source quadrant.
///
/// Q2 flips segment directions, Q3 flips directions and swaps left/right,
/// Q4 swaps left/right only. Lengths are unchanged.
pub fn backward_project_from_q1(path: &RsPath, q: Quadrant) -> RsPath {
    if q == Quadrant::Q1 {
        return path.clone();
    }
    let mut out = path.clone();
    for seg in out.segments.iter_mut() {
        match q {
            Quadrant::Q1 => unreachable!(),
            Quadrant::Q2 => seg.direction = -seg.direction,
            Quadrant::Q3 => {
                seg.direction = -seg.direction;
                seg.kind = mirror_kind(seg.kind);
            }
            Quadrant::Q4 => seg.kind = mirror_kind(seg.kind),
        }
    }
    out
}

fn mirror_kind(k: SegmentKind) -> SegmentKind {
    match k {
        SegmentKind::Left => SegmentKind::Right,
        SegmentKind::Right => SegmentKind::Left,
        SegmentKind::Straight => SegmentKind::Straight,
    }
}
