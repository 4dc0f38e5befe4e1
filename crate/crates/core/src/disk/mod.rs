//! The disk model: m-diagonals of a polygon and its (m+2)-angulations.
//!
//! Polygon vertices are labeled `1..=S` clockwise. A chord `(a, b)` with
//! `a < b` is an m-diagonal when both polygons it cuts off have a side count
//! congruent to 2 modulo m, i.e. `b - a ≡ 1 (mod m)` and
//! `m + 1 <= b - a <= S - m - 1`. Every (m+2)-angulation of an S-gon has
//! `r = (S - 2) / m - 1` diagonals and `r + 1` faces.

mod cut;
mod enumerate;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::face::{quiver_from_faces, Face, Side};
use crate::quiver::{ColoredQuiver, QuiverError};

pub use cut::{DiskCut, Piece};
pub use enumerate::{
    enumerate_angulations, flip_graph, fuss_catalan, Enumeration, FlipGraph, Guard, DEFAULT_GUARD,
    GUARD_ENV,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiskError {
    #[error("color bound m must be at least 1")]
    ZeroColorBound,
    #[error("a polygon with {sides} sides has no (m+2)-angulation for m = {m}")]
    BadSideCount { m: u32, sides: u32 },
    #[error("vertex {vertex} out of range 1..={sides}")]
    VertexOutOfRange { vertex: u32, sides: u32 },
    #[error("({a}, {b}) is not an m-diagonal")]
    NotMDiagonal { a: u32, b: u32 },
    #[error("diagonals {0} and {1} cross")]
    Crossing(Diagonal, Diagonal),
    #[error("diagonal {0} listed twice")]
    Duplicate(Diagonal),
    #[error("expected {expected} diagonals, found {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("diagonal {0} is not in the angulation")]
    NotInAngulation(Diagonal),
    #[error("not an angulation with exactly one diagonal removed")]
    NotAlmostComplete,
    #[error("face with {found} sides where {expected} were expected")]
    BadFace { expected: usize, found: usize },
    #[error("ordering does not list the diagonals of the angulation")]
    BadOrder,
    #[error("rank {rank} exceeds the enumeration guard {limit}")]
    GuardExceeded { rank: usize, limit: usize },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// An S-gon, `S ≡ 2 (mod m)`, to be cut into (m+2)-gons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiskConfig {
    m: u32,
    sides: u32,
}

impl DiskConfig {
    pub fn new(m: u32, sides: u32) -> Result<Self, DiskError> {
        if m == 0 {
            return Err(DiskError::ZeroColorBound);
        }
        if sides < m + 2 || !(sides - 2).is_multiple_of(m) {
            return Err(DiskError::BadSideCount { m, sides });
        }
        Ok(DiskConfig { m, sides })
    }

    /// The polygon whose angulations have `rank` diagonals.
    pub fn with_rank(m: u32, rank: u32) -> Result<Self, DiskError> {
        Self::new(m, (rank + 1) * m + 2)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn sides(&self) -> u32 {
        self.sides
    }

    /// Number of diagonals in every angulation.
    pub fn rank(&self) -> usize {
        ((self.sides - 2) / self.m - 1) as usize
    }

    fn check_vertex(&self, v: u32) -> Result<(), DiskError> {
        if (1..=self.sides).contains(&v) {
            Ok(())
        } else {
            Err(DiskError::VertexOutOfRange {
                vertex: v,
                sides: self.sides,
            })
        }
    }

    pub fn is_m_diagonal(&self, a: u32, b: u32) -> Result<bool, DiskError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let (lo, hi) = (a.min(b), a.max(b));
        let span = hi - lo;
        Ok(span % self.m == 1 % self.m && span > self.m && span + self.m < self.sides)
    }

    pub fn diagonal(&self, a: u32, b: u32) -> Result<Diagonal, DiskError> {
        if self.is_m_diagonal(a, b)? {
            Ok(Diagonal::new(a, b))
        } else {
            Err(DiskError::NotMDiagonal { a, b })
        }
    }

    /// All m-diagonals in canonical `(a, b)` order.
    pub fn all_diagonals(&self) -> Vec<Diagonal> {
        let mut out = Vec::new();
        for a in 1..=self.sides {
            for b in a + 1..=self.sides {
                if self.is_m_diagonal(a, b).unwrap_or(false) {
                    out.push(Diagonal::new(a, b));
                }
            }
        }
        out
    }

    /// An m-ear cuts off a single (m+2)-gon.
    pub fn is_m_ear(&self, d: Diagonal) -> bool {
        let span = d.span();
        span == self.m + 1 || span + self.m + 1 == self.sides
    }

    /// The fan `{(1, k*m + 2) : k = 1..=r}`.
    pub fn initial_fan(&self) -> DiskAngulation {
        let diagonals = (1..=self.rank() as u32)
            .map(|k| Diagonal::new(1, k * self.m + 2))
            .collect();
        DiskAngulation {
            config: *self,
            diagonals,
        }
    }

    /// The m+1 diagonals completing an angulation from which one diagonal has
    /// been removed, in clockwise order around the merged region, starting
    /// from the chord at the region's least vertex.
    pub fn complements(&self, partial: &[Diagonal]) -> Result<Vec<Diagonal>, DiskError> {
        if self.rank() == 0 || partial.len() + 1 != self.rank() {
            return Err(DiskError::NotAlmostComplete);
        }
        self.check_noncrossing(partial)?;
        let faces = dissect(self.sides, partial)?;
        let big: Vec<_> = faces
            .iter()
            .filter(|f| f.len() != self.m as usize + 2)
            .collect();
        match big.as_slice() {
            [region] if region.len() == 2 * self.m as usize + 2 => Ok(region_chords(
                region,
                0,
                self.m as usize + 1,
                self.m as usize,
            )),
            _ => Err(DiskError::NotAlmostComplete),
        }
    }

    /// Greedy completion of a noncrossing set: candidates are scanned in
    /// `(a, b)` order and each one compatible with everything chosen so far is
    /// added.
    pub fn complete(&self, partial: &[Diagonal]) -> Result<DiskAngulation, DiskError> {
        for d in partial {
            self.diagonal(d.a, d.b)?;
        }
        self.check_noncrossing(partial)?;
        let mut chosen: Vec<Diagonal> = partial.to_vec();
        for c in self.all_diagonals() {
            if chosen.len() >= self.rank() {
                break;
            }
            if chosen.iter().all(|d| *d != c && !d.crosses(&c)) {
                chosen.push(c);
            }
        }
        DiskAngulation::new(*self, chosen)
    }

    fn check_noncrossing(&self, diagonals: &[Diagonal]) -> Result<(), DiskError> {
        for (i, d) in diagonals.iter().enumerate() {
            for e in &diagonals[i + 1..] {
                if d == e {
                    return Err(DiskError::Duplicate(*d));
                }
                if d.crosses(e) {
                    return Err(DiskError::Crossing(*d, *e));
                }
            }
        }
        Ok(())
    }

    pub fn cut_along(&self, d: Diagonal) -> Result<DiskCut, DiskError> {
        DiskCut::new(*self, d)
    }
}

/// A chord between two polygon vertices, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    a: u32,
    b: u32,
}

impl Diagonal {
    /// Normalizing constructor; validity against a configuration is checked by
    /// [`DiskConfig::diagonal`].
    pub fn new(x: u32, y: u32) -> Self {
        Diagonal {
            a: x.min(y),
            b: x.max(y),
        }
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn span(&self) -> u32 {
        self.b - self.a
    }

    pub fn has_endpoint(&self, v: u32) -> bool {
        self.a == v || self.b == v
    }

    /// Strict interleaving of endpoints; shared endpoints never cross.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        let inside = |v: u32| self.a < v && v < self.b;
        let outside = |v: u32| v < self.a || v > self.b;
        (inside(other.a) && outside(other.b)) || (outside(other.a) && inside(other.b))
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A boundary edge `(v, v+1)`, with `(S, 1)` closing the polygon.
pub type BoundaryEdge = (u32, u32);

pub type DiskFace = Face<u32, BoundaryEdge, Diagonal>;

/// A maximal noncrossing set of m-diagonals, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiskAngulation {
    config: DiskConfig,
    diagonals: Vec<Diagonal>,
}

impl DiskAngulation {
    pub fn new(config: DiskConfig, mut diagonals: Vec<Diagonal>) -> Result<Self, DiskError> {
        for d in &diagonals {
            config.diagonal(d.a, d.b)?;
        }
        diagonals.sort();
        config.check_noncrossing(&diagonals)?;
        if diagonals.len() != config.rank() {
            return Err(DiskError::WrongCardinality {
                expected: config.rank(),
                found: diagonals.len(),
            });
        }
        Ok(DiskAngulation { config, diagonals })
    }

    pub fn config(&self) -> DiskConfig {
        self.config
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.diagonals.binary_search(&d).is_ok()
    }

    pub fn position(&self, d: Diagonal) -> Option<usize> {
        self.diagonals.binary_search(&d).ok()
    }

    fn require(&self, d: Diagonal) -> Result<(), DiskError> {
        if self.contains(d) {
            Ok(())
        } else {
            Err(DiskError::NotInAngulation(d))
        }
    }

    /// The `r + 1` faces, each with its vertices in ascending (clockwise)
    /// order.
    pub fn faces(&self) -> Vec<DiskFace> {
        let sides = self.config.sides;
        let cycles = dissect(sides, &self.diagonals).expect("angulation diagonals are noncrossing");
        cycles
            .into_iter()
            .map(|vertices| {
                let n = vertices.len();
                let sides = (0..n)
                    .map(|i| {
                        let (u, v) = (vertices[i], vertices[(i + 1) % n]);
                        if v == u + 1 || (u == sides && v == 1) {
                            Side::Edge((u, v))
                        } else {
                            Side::Arc(Diagonal::new(u, v))
                        }
                    })
                    .collect();
                Face { vertices, sides }
            })
            .collect()
    }

    /// Vertices of the (2m+2)-gon formed by the two faces on either side of
    /// `d`, ascending.
    fn merged_region(&self, d: Diagonal) -> Vec<u32> {
        let mut region: Vec<u32> = self
            .faces()
            .into_iter()
            .filter(|f| f.position_of(&d).is_some())
            .flat_map(|f| f.vertices)
            .collect();
        region.sort_unstable();
        region.dedup();
        region
    }

    /// The m+1 diagonals that complete `self` minus `d`, in clockwise cycle
    /// order starting after `d`; the last entry is `d` itself.
    pub fn completions(&self, d: Diagonal) -> Result<Vec<Diagonal>, DiskError> {
        self.require(d)?;
        let region = self.merged_region(d);
        let start = region
            .iter()
            .position(|&v| v == d.a)
            .expect("diagonal endpoint lies on its region");
        let m = self.config.m as usize;
        let mut out = region_chords(&region, start + 1, m, m);
        out.push(d);
        Ok(out)
    }

    /// Rotates `d` one step clockwise inside its merged region.
    pub fn twist(&self, d: Diagonal) -> Result<Diagonal, DiskError> {
        Ok(self.completions(d)?[0])
    }

    /// Replaces `d` by its twist.
    pub fn flip(&self, d: Diagonal) -> Result<DiskAngulation, DiskError> {
        let t = self.twist(d)?;
        Ok(self.replace(d, t))
    }

    fn replace(&self, old: Diagonal, new: Diagonal) -> DiskAngulation {
        let mut diagonals: Vec<_> = self
            .diagonals
            .iter()
            .copied()
            .filter(|&x| x != old)
            .collect();
        diagonals.push(new);
        diagonals.sort();
        DiskAngulation {
            config: self.config,
            diagonals,
        }
    }

    /// Colored quiver with vertices in canonical diagonal order.
    pub fn quiver(&self) -> ColoredQuiver {
        self.quiver_ordered(&self.diagonals)
            .expect("canonical order lists every diagonal")
    }

    /// Colored quiver whose vertex `i` is `order[i]`.
    pub fn quiver_ordered(&self, order: &[Diagonal]) -> Result<ColoredQuiver, DiskError> {
        let mut sorted = order.to_vec();
        sorted.sort();
        if sorted != self.diagonals {
            return Err(DiskError::BadOrder);
        }
        let faces = self.faces();
        let q = quiver_from_faces(self.config.m, order.len(), &faces, |d| {
            order.iter().position(|x| x == d).expect("ordered diagonal")
        })?;
        Ok(q)
    }
}

impl fmt::Display for DiskAngulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "disk(m={},S={})[", self.config.m, self.config.sides)?;
        for (i, d) in self.diagonals.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// Chords of a (2m+2)-gon region joining positions `x` and `x + m + 1`, for
/// `count` consecutive values of `x` beginning at `first`.
fn region_chords(region: &[u32], first: usize, count: usize, m: usize) -> Vec<Diagonal> {
    let len = region.len();
    (0..count)
        .map(|s| {
            let x = (first + s) % len;
            Diagonal::new(region[x], region[(x + m + 1) % len])
        })
        .collect()
}

/// Splits the polygon `1..=sides` along noncrossing chords. Each returned
/// face lists its vertices in ascending order.
pub(crate) fn dissect(sides: u32, chords: &[Diagonal]) -> Result<Vec<Vec<u32>>, DiskError> {
    fn split(
        cycle: Vec<u32>,
        chords: Vec<Diagonal>,
        out: &mut Vec<Vec<u32>>,
    ) -> Result<(), DiskError> {
        let Some((&first, rest)) = chords.split_first() else {
            let mut face = cycle;
            face.sort_unstable();
            out.push(face);
            return Ok(());
        };
        let pa = cycle
            .iter()
            .position(|&v| v == first.a)
            .expect("chord endpoint on cycle");
        let pb = cycle
            .iter()
            .position(|&v| v == first.b)
            .expect("chord endpoint on cycle");
        let (lo, hi) = (pa.min(pb), pa.max(pb));
        let left: Vec<u32> = cycle[lo..=hi].to_vec();
        let right: Vec<u32> = cycle[hi..].iter().chain(&cycle[..=lo]).copied().collect();
        let (mut lc, mut rc) = (Vec::new(), Vec::new());
        for &c in rest {
            let in_left = left.contains(&c.a) && left.contains(&c.b);
            let in_right = right.contains(&c.a) && right.contains(&c.b);
            match (in_left, in_right) {
                (true, _) => lc.push(c),
                (false, true) => rc.push(c),
                (false, false) => return Err(DiskError::Crossing(first, c)),
            }
        }
        split(left, lc, out)?;
        split(right, rc, out)
    }
    let mut out = Vec::new();
    split((1..=sides).collect(), chords.to_vec(), &mut out)?;
    out.sort();
    Ok(out)
}
