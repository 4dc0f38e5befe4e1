//! The annulus model: arcs between an outer polygon with `m p` marked points
//! and an inner polygon with `m q` marked points.
//!
//! Everything is computed in the universal cover, a horizontal strip whose
//! top line covers the outer boundary and whose bottom line covers the inner
//! boundary. Outer point `O_i` lifts to the integers `i + k * m p` on the top
//! line and inner point `I_j` to `j + k * m q` on the bottom line; the deck
//! transformation shifts both by one period. Faces are traversed clockwise,
//! which in the strip means rightwards along the top and leftwards along the
//! bottom.
//!
//! A bridge `Bridge { outer, inner, winding }` is the class of the straight
//! segment from top `outer` to bottom `inner + winding * m q`. Chords are
//! given by a start index and a span `t`: the arc hugging the boundary path
//! from the start through `t` edges in increasing index order.

mod cut;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::disk::{DiskAngulation, DiskError};
use crate::face::{quiver_from_faces, Face, Side};
use crate::quiver::{ColoredQuiver, QuiverError};

pub use cut::{AnnulusCut, BridgeCut, ChordCut, Transported};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnnulusError {
    #[error("color bound m must be at least 1")]
    ZeroColorBound,
    #[error("p and q must be positive")]
    EmptyBoundary,
    #[error("arc {0} has an index out of range")]
    IndexOutOfRange(ArcClass),
    #[error("arc {0} is not an m-diagonal")]
    NotMDiagonal(ArcClass),
    #[error("arcs {0} and {1} cross")]
    Crossing(ArcClass, ArcClass),
    #[error("arc {0} listed twice")]
    Duplicate(ArcClass),
    #[error("expected {expected} arcs, found {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("an angulation of the annulus needs at least one bridge")]
    NoBridge,
    #[error("arc {0} is not in the angulation")]
    NotInAngulation(ArcClass),
    #[error("ordering does not list the arcs of the angulation")]
    BadOrder,
    #[error("arc {0} cannot be cut along")]
    BadCut(ArcClass),
    #[error("disk reduction failed: {0}")]
    Disk(#[from] DiskError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// The two boundary components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Boundary {
    Outer,
    Inner,
}

/// A marked point lifted to the universal cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LiftedPoint {
    Outer(i64),
    Inner(i64),
}

/// A boundary edge: `Outer(i)` joins `O_i` to `O_{i+1}`, `Inner(j)` joins
/// `I_j` to `I_{j+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnnulusEdge {
    Outer(u32),
    Inner(u32),
}

pub type AnnulusFace = Face<LiftedPoint, AnnulusEdge, ArcClass>;

/// An isotopy class of arcs. Variant order gives the canonical arc order:
/// bridges by `(outer, inner, winding)`, then outer chords, then inner chords.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ArcClass {
    Bridge {
        outer: u32,
        inner: u32,
        winding: i64,
    },
    OuterChord {
        start: u32,
        span: u32,
    },
    InnerChord {
        start: u32,
        span: u32,
    },
}

impl ArcClass {
    pub fn bridge(outer: u32, inner: u32, winding: i64) -> Self {
        ArcClass::Bridge {
            outer,
            inner,
            winding,
        }
    }

    pub fn outer_chord(start: u32, span: u32) -> Self {
        ArcClass::OuterChord { start, span }
    }

    pub fn inner_chord(start: u32, span: u32) -> Self {
        ArcClass::InnerChord { start, span }
    }

    pub fn is_bridge(&self) -> bool {
        matches!(self, ArcClass::Bridge { .. })
    }

    fn shift_winding(self, by: i64) -> Self {
        match self {
            ArcClass::Bridge {
                outer,
                inner,
                winding,
            } => ArcClass::bridge(outer, inner, winding + by),
            other => other,
        }
    }
}

impl fmt::Display for ArcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcClass::Bridge {
                outer,
                inner,
                winding,
            } => write!(f, "B(O{outer},I{inner},{winding})"),
            ArcClass::OuterChord { start, span } => write!(f, "O(O{start}+{span})"),
            ArcClass::InnerChord { start, span } => write!(f, "I(I{start}+{span})"),
        }
    }
}

/// An annulus with `m p` outer and `m q` inner marked points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnnulusConfig {
    m: u32,
    p: u32,
    q: u32,
}

impl AnnulusConfig {
    pub fn new(m: u32, p: u32, q: u32) -> Result<Self, AnnulusError> {
        if m == 0 {
            return Err(AnnulusError::ZeroColorBound);
        }
        if p == 0 || q == 0 {
            return Err(AnnulusError::EmptyBoundary);
        }
        Ok(AnnulusConfig { m, p, q })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of arcs in every angulation.
    pub fn rank(&self) -> usize {
        (self.p + self.q) as usize
    }

    pub fn outer_len(&self) -> i64 {
        i64::from(self.m * self.p)
    }

    pub fn inner_len(&self) -> i64 {
        i64::from(self.m * self.q)
    }

    pub fn boundary_len(&self, b: Boundary) -> i64 {
        match b {
            Boundary::Outer => self.outer_len(),
            Boundary::Inner => self.inner_len(),
        }
    }

    fn reduce(index: i64, len: i64) -> u32 {
        ((index - 1).rem_euclid(len) + 1) as u32
    }

    /// The bridge whose lift joins top `alpha` to bottom `beta`.
    pub fn bridge_from_lift(&self, alpha: i64, beta: i64) -> ArcClass {
        let k = (alpha - 1).div_euclid(self.outer_len());
        let beta = beta - k * self.inner_len();
        ArcClass::bridge(
            Self::reduce(alpha, self.outer_len()),
            Self::reduce(beta, self.inner_len()),
            (beta - 1).div_euclid(self.inner_len()),
        )
    }

    /// `(alpha, beta)` with `alpha` in `1..=m p`; `None` for chords.
    pub fn bridge_lift(&self, arc: &ArcClass) -> Option<(i64, i64)> {
        match *arc {
            ArcClass::Bridge {
                outer,
                inner,
                winding,
            } => Some((
                i64::from(outer),
                i64::from(inner) + winding * self.inner_len(),
            )),
            _ => None,
        }
    }

    /// The arc through the cover joining two lifted points.
    pub fn arc_between(&self, x: LiftedPoint, y: LiftedPoint) -> ArcClass {
        match (x, y) {
            (LiftedPoint::Outer(u), LiftedPoint::Outer(v)) => ArcClass::outer_chord(
                Self::reduce(u.min(v), self.outer_len()),
                u.abs_diff(v) as u32,
            ),
            (LiftedPoint::Inner(u), LiftedPoint::Inner(v)) => ArcClass::inner_chord(
                Self::reduce(u.min(v), self.inner_len()),
                u.abs_diff(v) as u32,
            ),
            (LiftedPoint::Outer(a), LiftedPoint::Inner(b))
            | (LiftedPoint::Inner(b), LiftedPoint::Outer(a)) => self.bridge_from_lift(a, b),
        }
    }

    pub fn check_indices(&self, arc: &ArcClass) -> Result<(), AnnulusError> {
        let ok = match *arc {
            ArcClass::Bridge { outer, inner, .. } => {
                (1..=self.m * self.p).contains(&outer) && (1..=self.m * self.q).contains(&inner)
            }
            ArcClass::OuterChord { start, .. } => (1..=self.m * self.p).contains(&start),
            ArcClass::InnerChord { start, .. } => (1..=self.m * self.q).contains(&start),
        };
        if ok {
            Ok(())
        } else {
            Err(AnnulusError::IndexOutOfRange(*arc))
        }
    }

    /// Chords need `span ≡ 1 (mod m)` and `m + 1 <= span <= len`; `span = len`
    /// (possible only for m = 1) is a loop cutting off the whole boundary. Bridges
    /// need `outer + inner ≡ 2 (mod m)`: two bridges bound regions whose side
    /// counts are congruent to 2 modulo m only when they agree in this class,
    /// and the class containing `B(O1, I1, w)` is the one used throughout.
    pub fn is_m_diagonal(&self, arc: &ArcClass) -> Result<bool, AnnulusError> {
        self.check_indices(arc)?;
        let m = self.m;
        let chord_ok = |span: u32, len: u32| span % m == 1 % m && span > m && span <= len;
        Ok(match *arc {
            ArcClass::Bridge { outer, inner, .. } => (outer + inner) % m == 2 % m,
            ArcClass::OuterChord { span, .. } => chord_ok(span, self.m * self.p),
            ArcClass::InnerChord { span, .. } => chord_ok(span, self.m * self.q),
        })
    }

    /// Whether minimal representatives of `x` and `y` intersect in their
    /// interiors.
    pub fn crosses(&self, x: &ArcClass, y: &ArcClass) -> bool {
        if x == y {
            return false;
        }
        let strictly_inside = |v: u32, start: u32, span: u32, len: i64| {
            let off = (i64::from(v) - i64::from(start)).rem_euclid(len);
            off > 0 && off < i64::from(span)
        };
        let interleave = |a: u32, s: u32, b: u32, t: u32, len: i64| {
            let (a1, b1) = (i64::from(a), i64::from(a) + i64::from(s));
            (-2..=2).any(|k| {
                let a2 = i64::from(b) + k * len;
                let b2 = a2 + i64::from(t);
                (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1)
            })
        };
        use ArcClass::*;
        match (*x, *y) {
            (OuterChord { start: a, span: s }, OuterChord { start: b, span: t }) => {
                interleave(a, s, b, t, self.outer_len())
            }
            (InnerChord { start: a, span: s }, InnerChord { start: b, span: t }) => {
                interleave(a, s, b, t, self.inner_len())
            }
            (OuterChord { .. }, InnerChord { .. }) | (InnerChord { .. }, OuterChord { .. }) => {
                false
            }
            (OuterChord { start, span }, Bridge { outer, .. })
            | (Bridge { outer, .. }, OuterChord { start, span }) => {
                strictly_inside(outer, start, span, self.outer_len())
            }
            (InnerChord { start, span }, Bridge { inner, .. })
            | (Bridge { inner, .. }, InnerChord { start, span }) => {
                strictly_inside(inner, start, span, self.inner_len())
            }
            (Bridge { .. }, Bridge { .. }) => {
                let (a1, b1) = self.bridge_lift(x).expect("bridge");
                let (a2, b2) = self.bridge_lift(y).expect("bridge");
                let base = (b1 - b2).div_euclid(self.inner_len());
                (base.min(0) - 2..=base.max(0) + 2).any(|k| {
                    let top = (a2 + k * self.outer_len() - a1).signum();
                    let bottom = (b2 + k * self.inner_len() - b1).signum();
                    top * bottom < 0
                })
            }
        }
    }

    /// `p + q` bridges of winding 0 and 1: consecutive bridges enclose first
    /// `q` regions with `m` inner edges each, then `p` regions with `m` outer
    /// edges each.
    pub fn initial_bridges(&self) -> AnnulusAngulation {
        let m = i64::from(self.m);
        let mut arcs: Vec<ArcClass> = (0..=i64::from(self.q))
            .map(|j| self.bridge_from_lift(1, 1 + j * m))
            .collect();
        arcs.extend(
            (1..i64::from(self.p)).map(|k| self.bridge_from_lift(1 + k * m, 1 + self.inner_len())),
        );
        arcs.sort();
        AnnulusAngulation {
            config: *self,
            arcs,
        }
    }

    /// A chord cutting off a single (m+2)-gon against the boundary.
    pub fn is_m_ear(&self, arc: &ArcClass) -> bool {
        match *arc {
            ArcClass::OuterChord { span, .. } | ArcClass::InnerChord { span, .. } => {
                span == self.m + 1
            }
            ArcClass::Bridge { .. } => false,
        }
    }

    /// Every m-diagonal, with bridge windings limited to `-window..=window`.
    pub fn arcs_in_window(&self, window: i64) -> Vec<ArcClass> {
        let (no, ni) = (self.m * self.p, self.m * self.q);
        let mut out = Vec::new();
        for outer in 1..=no {
            for inner in 1..=ni {
                for winding in -window..=window {
                    out.push(ArcClass::bridge(outer, inner, winding));
                }
            }
        }
        for start in 1..=no {
            for span in 1..=no {
                out.push(ArcClass::outer_chord(start, span));
            }
        }
        for start in 1..=ni {
            for span in 1..=ni {
                out.push(ArcClass::inner_chord(start, span));
            }
        }
        out.retain(|a| self.is_m_diagonal(a).unwrap_or(false));
        out.sort();
        out
    }

    pub fn cut_along(&self, arc: ArcClass) -> Result<AnnulusCut, AnnulusError> {
        AnnulusCut::new(*self, arc)
    }
}

/// `p + q` pairwise noncrossing m-diagonals cutting the annulus into
/// (m+2)-gons, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnnulusAngulation {
    config: AnnulusConfig,
    arcs: Vec<ArcClass>,
}

impl AnnulusAngulation {
    pub fn new(config: AnnulusConfig, mut arcs: Vec<ArcClass>) -> Result<Self, AnnulusError> {
        for a in &arcs {
            if !config.is_m_diagonal(a)? {
                return Err(AnnulusError::NotMDiagonal(*a));
            }
        }
        arcs.sort();
        for (i, a) in arcs.iter().enumerate() {
            for b in &arcs[i + 1..] {
                if a == b {
                    return Err(AnnulusError::Duplicate(*a));
                }
                if config.crosses(a, b) {
                    return Err(AnnulusError::Crossing(*a, *b));
                }
            }
        }
        if arcs.len() != config.rank() {
            return Err(AnnulusError::WrongCardinality {
                expected: config.rank(),
                found: arcs.len(),
            });
        }
        let angulation = AnnulusAngulation { config, arcs };
        let bridge = *angulation.bridges().next().ok_or(AnnulusError::NoBridge)?;
        // The disk reduction validates face sizes.
        BridgeCut::new(config, bridge)?.split(&angulation)?;
        Ok(angulation)
    }

    pub fn config(&self) -> AnnulusConfig {
        self.config
    }

    pub fn arcs(&self) -> &[ArcClass] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, arc: &ArcClass) -> bool {
        self.arcs.binary_search(arc).is_ok()
    }

    pub fn position(&self, arc: &ArcClass) -> Option<usize> {
        self.arcs.binary_search(arc).ok()
    }

    pub fn bridges(&self) -> impl Iterator<Item = &ArcClass> {
        self.arcs.iter().filter(|a| a.is_bridge())
    }

    pub fn ears(&self) -> impl Iterator<Item = &ArcClass> {
        self.arcs.iter().filter(|a| self.config.is_m_ear(a))
    }

    fn require(&self, arc: &ArcClass) -> Result<(), AnnulusError> {
        if self.contains(arc) {
            Ok(())
        } else {
            Err(AnnulusError::NotInAngulation(*arc))
        }
    }

    /// Re-bases windings so the least bridge winding is 0. This is a Dehn
    /// twist of the whole picture and preserves crossings, faces and quivers.
    pub fn canonical(&self) -> AnnulusAngulation {
        let min = self
            .arcs
            .iter()
            .filter_map(|a| match a {
                ArcClass::Bridge { winding, .. } => Some(*winding),
                _ => None,
            })
            .min()
            .unwrap_or(0);
        let mut arcs: Vec<_> = self.arcs.iter().map(|a| a.shift_winding(-min)).collect();
        arcs.sort();
        AnnulusAngulation {
            config: self.config,
            arcs,
        }
    }

    /// Faces, computed by cutting along the first bridge.
    pub fn faces(&self) -> Vec<AnnulusFace> {
        let bridge = *self.bridges().next().expect("angulations contain a bridge");
        self.faces_via(bridge).expect("valid angulation")
    }

    /// Faces, computed by cutting along the given bridge of the angulation.
    pub fn faces_via(&self, bridge: ArcClass) -> Result<Vec<AnnulusFace>, AnnulusError> {
        self.require(&bridge)?;
        let cut = BridgeCut::new(self.config, bridge)?;
        let disk = cut.split(self)?;
        Ok(disk
            .faces()
            .into_iter()
            .map(|f| Face {
                vertices: f.vertices.iter().map(|&v| cut.point(v)).collect(),
                sides: f
                    .sides
                    .into_iter()
                    .map(|s| match s {
                        Side::Edge((u, v)) => cut.edge_side(u, v),
                        Side::Arc(d) => Side::Arc(cut.lift(d)),
                    })
                    .collect(),
            })
            .collect())
    }

    /// Disk reduction along a bridge other than `arc`; one always exists
    /// because every face touching both boundaries has two bridge sides.
    fn reduction_avoiding(
        &self,
        arc: &ArcClass,
    ) -> Result<(BridgeCut, DiskAngulation), AnnulusError> {
        let bridge = *self
            .bridges()
            .find(|b| *b != arc)
            .ok_or(AnnulusError::NoBridge)?;
        let cut = BridgeCut::new(self.config, bridge)?;
        let disk = cut.split(self)?;
        Ok((cut, disk))
    }

    /// The m+1 arcs completing `self` minus `arc`, in clockwise cycle order
    /// starting after `arc`; the last entry is `arc` itself.
    pub fn completions(&self, arc: &ArcClass) -> Result<Vec<ArcClass>, AnnulusError> {
        self.require(arc)?;
        let (cut, disk) = self.reduction_avoiding(arc)?;
        let d = cut
            .transport(arc)
            .ok_or(AnnulusError::Crossing(*cut.bridge(), *arc))?;
        Ok(disk
            .completions(d)?
            .into_iter()
            .map(|c| cut.lift(c))
            .collect())
    }

    /// The clockwise neighbor of `arc` among its completions.
    pub fn twist(&self, arc: &ArcClass) -> Result<ArcClass, AnnulusError> {
        Ok(self.completions(arc)?[0])
    }

    pub fn flip(&self, arc: &ArcClass) -> Result<AnnulusAngulation, AnnulusError> {
        let t = self.twist(arc)?;
        let mut arcs: Vec<_> = self.arcs.iter().copied().filter(|a| a != arc).collect();
        arcs.push(t);
        arcs.sort();
        Ok(AnnulusAngulation {
            config: self.config,
            arcs,
        })
    }

    pub fn quiver(&self) -> ColoredQuiver {
        self.quiver_ordered(&self.arcs)
            .expect("canonical order lists every arc")
    }

    /// Colored quiver whose vertex `i` is `order[i]`. Arcs bounding two common
    /// faces get an arrow from each.
    pub fn quiver_ordered(&self, order: &[ArcClass]) -> Result<ColoredQuiver, AnnulusError> {
        let mut sorted = order.to_vec();
        sorted.sort();
        if sorted != self.arcs {
            return Err(AnnulusError::BadOrder);
        }
        let faces = self.faces();
        Ok(quiver_from_faces(
            self.config.m,
            order.len(),
            &faces,
            |a| order.iter().position(|x| x == a).expect("ordered arc"),
        )?)
    }
}

impl fmt::Display for AnnulusAngulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.config;
        write!(f, "annulus(m={},p={},q={})[", c.m, c.p, c.q)?;
        for (i, a) in self.arcs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests;
