//! Path words: segments, assembled paths, and the twenty dispatch type ids.

use arrayvec::ArrayVec;
use serde::Serialize;

/// Steering mode of a segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SegmentKind {
    Left,
    Right,
    Straight,
}

impl SegmentKind {
    pub fn letter(self) -> char {
        match self {
            SegmentKind::Left => 'l',
            SegmentKind::Right => 'r',
            SegmentKind::Straight => 's',
        }
    }
}

/// Travel direction of a segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn signum(self) -> f64 {
        match self {
            Direction::Forward => 1.0,
            Direction::Backward => -1.0,
        }
    }

    pub fn sign_char(self) -> char {
        match self {
            Direction::Forward => '+',
            Direction::Backward => '-',
        }
    }

    fn from_sign(p: f64) -> Self {
        if p < 0.0 {
            Direction::Backward
        } else {
            Direction::Forward
        }
    }
}

impl std::ops::Neg for Direction {
    type Output = Direction;
    fn neg(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// One motion primitive: a kind, a travel direction, and a metric length.
///
/// Arc segments store arc length (`radius * central angle`), not the angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PathSegment {
    pub kind: SegmentKind,
    pub direction: Direction,
    pub length: f64,
}

impl PathSegment {
    pub fn new(kind: SegmentKind, direction: Direction, length: f64) -> Self {
        debug_assert!(length >= 0.0);
        Self {
            kind,
            direction,
            length,
        }
    }

    /// Builds a segment from a signed parameter (sign = direction).
    pub fn from_signed(kind: SegmentKind, signed_len: f64) -> Self {
        Self {
            kind,
            direction: Direction::from_sign(signed_len),
            length: signed_len.abs(),
        }
    }

    /// Central angle of an arc segment of the given radius.
    pub fn central_angle(&self, radius: f64) -> f64 {
        match self.kind {
            SegmentKind::Straight => 0.0,
            _ => self.length / radius,
        }
    }

    /// Length with the travel direction folded in as a sign.
    pub fn signed_length(&self) -> f64 {
        self.direction.signum() * self.length
    }
}

/// Identifier of one of the twenty dispatch path types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PathTypeId(pub u8);

impl PathTypeId {
    pub const ALL: [PathTypeId; 20] = {
        let mut a = [PathTypeId(0); 20];
        let mut i = 0;
        while i < 20 {
            a[i] = PathTypeId(i as u8 + 1);
            i += 1;
        }
        a
    };

    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl std::fmt::Display for PathTypeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "P{}", self.0)
    }
}

/// A motion word of up to five segments.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RsPath {
    pub segments: ArrayVec<PathSegment, 5>,
    pub total_length: f64,
    pub type_id: Option<PathTypeId>,
}

impl RsPath {
    /// The zero-length path (start equals goal).
    pub fn empty() -> Self {
        Self {
            segments: ArrayVec::new(),
            total_length: 0.0,
            type_id: None,
        }
    }

    pub fn from_segments(
        segments: impl IntoIterator<Item = PathSegment>,
        type_id: Option<PathTypeId>,
    ) -> Self {
        let segments: ArrayVec<PathSegment, 5> = segments.into_iter().collect();
        let total_length = segments.iter().map(|s| s.length).sum();
        Self {
            segments,
            total_length,
            type_id,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Word string such as `l+s+r-`, including degenerate segments.
    pub fn word(&self) -> String {
        self.segments
            .iter()
            .flat_map(|s| [s.kind.letter(), s.direction.sign_char()])
            .collect()
    }

    /// Word string with segments shorter than `tol` dropped.
    pub fn word_with_tol(&self, tol: f64) -> String {
        self.segments
            .iter()
            .filter(|s| s.length > tol)
            .flat_map(|s| [s.kind.letter(), s.direction.sign_char()])
            .collect()
    }

    /// Scales all segment lengths by `s` (radius change).
    pub fn scaled(&self, s: f64) -> Self {
        let mut out = self.clone();
        for seg in out.segments.iter_mut() {
            seg.length *= s;
        }
        out.total_length *= s;
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_formatting() {
        let p = RsPath::from_segments(
            [
                PathSegment::from_signed(SegmentKind::Left, -0.3),
                PathSegment::from_signed(SegmentKind::Right, 0.7),
                PathSegment::from_signed(SegmentKind::Left, -1e-12),
            ],
            Some(PathTypeId(18)),
        );
        assert_eq!(p.word(), "l-r+l-");
        assert_eq!(p.word_with_tol(1e-9), "l-r+");
        assert!((p.total_length - (0.3 + 0.7 + 1e-12)).abs() < 1e-15);
        assert_eq!(p.type_id.unwrap().to_string(), "P18");
    }

    #[test]
    fn total_length_is_sum() {
        let p = RsPath::from_segments(
            [
                PathSegment::new(SegmentKind::Left, Direction::Forward, 1.25),
                PathSegment::new(SegmentKind::Straight, Direction::Backward, 2.5),
            ],
            None,
        );
        assert_eq!(p.total_length, 3.75);
        assert_eq!(p.segments[1].signed_length(), -2.5);
    }
}
