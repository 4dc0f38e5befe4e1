//! Cutting the annulus along an arc.
//!
//! Cutting along a bridge opens the annulus into a single polygon with
//! `m p + m q + 2` sides. Cutting along a chord with span `t` splits off a
//! `(t+1)`-gon and leaves a smaller annulus.

use super::{
    AnnulusAngulation, AnnulusConfig, AnnulusEdge, AnnulusError, ArcClass, Boundary, LiftedPoint,
};
use crate::disk::{Diagonal, DiskAngulation, DiskConfig};
use crate::face::Side;

/// The annulus cut open along a bridge `B` with lift `(alpha, beta)`.
///
/// Disk vertex `j <= m p + 1` is top point `alpha + j - 1`; the remaining
/// vertices run leftwards along the bottom from `beta + m q` down to `beta`.
/// Disk sides `(S, 1)` and `(m p + 1, m p + 2)` are the two copies of `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeCut {
    annulus: AnnulusConfig,
    bridge: ArcClass,
    alpha: i64,
    beta: i64,
    disk: DiskConfig,
}

impl BridgeCut {
    pub fn new(annulus: AnnulusConfig, bridge: ArcClass) -> Result<Self, AnnulusError> {
        if !annulus.is_m_diagonal(&bridge)? {
            return Err(AnnulusError::NotMDiagonal(bridge));
        }
        let (alpha, beta) = annulus
            .bridge_lift(&bridge)
            .ok_or(AnnulusError::BadCut(bridge))?;
        let sides = (annulus.outer_len() + annulus.inner_len() + 2) as u32;
        Ok(BridgeCut {
            annulus,
            bridge,
            alpha,
            beta,
            disk: DiskConfig::new(annulus.m(), sides)?,
        })
    }

    pub fn bridge(&self) -> &ArcClass {
        &self.bridge
    }

    pub fn disk(&self) -> DiskConfig {
        self.disk
    }

    fn top(&self) -> i64 {
        self.annulus.outer_len() + 1
    }

    /// The lifted point at disk vertex `label`.
    pub fn point(&self, label: u32) -> LiftedPoint {
        let j = i64::from(label);
        if j <= self.top() {
            LiftedPoint::Outer(self.alpha + j - 1)
        } else {
            LiftedPoint::Inner(self.beta + self.annulus.inner_len() - (j - self.top() - 1))
        }
    }

    fn label(&self, p: LiftedPoint) -> u32 {
        match p {
            LiftedPoint::Outer(u) => (u - self.alpha + 1) as u32,
            LiftedPoint::Inner(u) => {
                (self.top() + 1 + self.beta + self.annulus.inner_len() - u) as u32
            }
        }
    }

    /// The side of the annulus that disk boundary edge `(u, v)` comes from.
    pub fn edge_side(&self, u: u32, _v: u32) -> Side<AnnulusEdge, ArcClass> {
        let (no, ni) = (self.annulus.outer_len(), self.annulus.inner_len());
        let j = i64::from(u);
        if j == self.top() || j == i64::from(self.disk.sides()) {
            Side::Arc(self.bridge)
        } else if j < self.top() {
            Side::Edge(AnnulusEdge::Outer(AnnulusConfig::reduce(
                self.alpha + j - 1,
                no,
            )))
        } else {
            let LiftedPoint::Inner(x) = self.point(u) else {
                unreachable!("bottom vertex")
            };
            Side::Edge(AnnulusEdge::Inner(AnnulusConfig::reduce(x - 1, ni)))
        }
    }

    /// The disk diagonal representing `arc`; `None` for the cut bridge and
    /// arcs crossing it.
    pub fn transport(&self, arc: &ArcClass) -> Option<Diagonal> {
        if *arc == self.bridge || self.annulus.crosses(&self.bridge, arc) {
            return None;
        }
        let (no, ni) = (self.annulus.outer_len(), self.annulus.inner_len());
        let (x, y) = match *arc {
            ArcClass::OuterChord { start, span } => {
                let s = self.alpha + (i64::from(start) - self.alpha).rem_euclid(no);
                (
                    LiftedPoint::Outer(s),
                    LiftedPoint::Outer(s + i64::from(span)),
                )
            }
            ArcClass::InnerChord { start, span } => {
                let s = self.beta + (i64::from(start) - self.beta).rem_euclid(ni);
                (
                    LiftedPoint::Inner(s),
                    LiftedPoint::Inner(s + i64::from(span)),
                )
            }
            ArcClass::Bridge { .. } => {
                let (a, b) = self.annulus.bridge_lift(arc)?;
                let k = div_ceil(self.alpha - a, no).max(div_ceil(self.beta - b, ni));
                (
                    LiftedPoint::Outer(a + k * no),
                    LiftedPoint::Inner(b + k * ni),
                )
            }
        };
        Some(Diagonal::new(self.label(x), self.label(y)))
    }

    /// Inverse of [`BridgeCut::transport`].
    pub fn lift(&self, d: Diagonal) -> ArcClass {
        self.annulus
            .arc_between(self.point(d.a()), self.point(d.b()))
    }

    /// The disk angulation obtained from an angulation containing the bridge.
    pub fn split(&self, angulation: &AnnulusAngulation) -> Result<DiskAngulation, AnnulusError> {
        if !angulation.contains(&self.bridge) {
            return Err(AnnulusError::NotInAngulation(self.bridge));
        }
        let diagonals = angulation
            .arcs()
            .iter()
            .filter(|a| **a != self.bridge)
            .map(|a| {
                self.transport(a)
                    .ok_or(AnnulusError::Crossing(self.bridge, *a))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DiskAngulation::new(self.disk, diagonals)?)
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Where an arc lands after a chord cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Transported {
    /// An arc of the reduced annulus.
    Annulus(ArcClass),
    /// A diagonal of the polygon cut off by the chord.
    Disk(Diagonal),
}

/// The annulus cut along a chord from lifted `start` to `start + span` on one
/// boundary. The polygon piece has `span + 1` sides labelled clockwise
/// from the chord. The annulus piece keeps the other boundary and replaces
/// the enclosed boundary path with the chord; its points are relabelled so
/// that `O_{start+span}` becomes index `offset`, which keeps bridge classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordCut {
    annulus: AnnulusConfig,
    chord: ArcClass,
    boundary: Boundary,
    start: i64,
    span: i64,
    offset: i64,
    reduced: AnnulusConfig,
    disk: DiskConfig,
}

impl ChordCut {
    pub fn new(annulus: AnnulusConfig, chord: ArcClass) -> Result<Self, AnnulusError> {
        if !annulus.is_m_diagonal(&chord)? {
            return Err(AnnulusError::NotMDiagonal(chord));
        }
        let (boundary, start, span) = match chord {
            ArcClass::OuterChord { start, span } => (Boundary::Outer, start, span),
            ArcClass::InnerChord { start, span } => (Boundary::Inner, start, span),
            ArcClass::Bridge { .. } => return Err(AnnulusError::BadCut(chord)),
        };
        let m = annulus.m();
        let (start, span) = (i64::from(start), i64::from(span));
        let remaining = ((annulus.boundary_len(boundary) - span + 1) / i64::from(m)) as u32;
        let reduced = match boundary {
            Boundary::Outer => AnnulusConfig::new(m, remaining, annulus.q())?,
            Boundary::Inner => AnnulusConfig::new(m, annulus.p(), remaining)?,
        };
        Ok(ChordCut {
            annulus,
            chord,
            boundary,
            start,
            span,
            offset: (start + span - 1).rem_euclid(i64::from(m)) + 1,
            reduced,
            disk: DiskConfig::new(m, span as u32 + 1)?,
        })
    }

    pub fn chord(&self) -> &ArcClass {
        &self.chord
    }

    pub fn reduced(&self) -> AnnulusConfig {
        self.reduced
    }

    pub fn disk(&self) -> DiskConfig {
        self.disk
    }

    fn len(&self) -> i64 {
        self.annulus.boundary_len(self.boundary)
    }

    fn reduced_len(&self) -> i64 {
        self.reduced.boundary_len(self.boundary)
    }

    /// Original lifted index to reduced lifted index; `None` strictly inside
    /// the chord.
    fn map(&self, u: i64) -> Option<i64> {
        let d = u - (self.start + self.span);
        let (k, r) = (d.div_euclid(self.len()), d.rem_euclid(self.len()));
        (r <= self.len() - self.span).then(|| r + self.offset + k * self.reduced_len())
    }

    fn unmap(&self, u: i64) -> i64 {
        let d = u - self.offset;
        let (k, r) = (
            d.div_euclid(self.reduced_len()),
            d.rem_euclid(self.reduced_len()),
        );
        r + self.start + self.span + k * self.len()
    }

    /// Polygon label to lifted index, going clockwise from the chord.
    fn disk_point(&self, label: u32) -> LiftedPoint {
        let l = i64::from(label) - 1;
        match self.boundary {
            Boundary::Outer => LiftedPoint::Outer(self.start + l),
            Boundary::Inner => LiftedPoint::Inner(self.start + self.span - l),
        }
    }

    fn disk_label(&self, u: i64) -> u32 {
        (match self.boundary {
            Boundary::Outer => u - self.start + 1,
            Boundary::Inner => self.start + self.span - u + 1,
        }) as u32
    }

    fn on_boundary(&self, arc: &ArcClass) -> Option<(i64, i64)> {
        match (*arc, self.boundary) {
            (ArcClass::OuterChord { start, span }, Boundary::Outer)
            | (ArcClass::InnerChord { start, span }, Boundary::Inner) => {
                Some((i64::from(start), i64::from(span)))
            }
            _ => None,
        }
    }

    /// Where `arc` goes; `None` for the cut chord and arcs crossing it.
    pub fn transport(&self, arc: &ArcClass) -> Option<Transported> {
        if *arc == self.chord || self.annulus.crosses(&self.chord, arc) {
            return None;
        }
        if let Some((s, t)) = self.on_boundary(arc) {
            let s = self.start + (s - self.start).rem_euclid(self.len());
            if s + t <= self.start + self.span {
                return Some(Transported::Disk(Diagonal::new(
                    self.disk_label(s),
                    self.disk_label(s + t),
                )));
            }
            let a = self.map(s)?;
            let b = self.map(s + t)?;
            let (x, y) = match self.boundary {
                Boundary::Outer => (LiftedPoint::Outer(a), LiftedPoint::Outer(b)),
                Boundary::Inner => (LiftedPoint::Inner(a), LiftedPoint::Inner(b)),
            };
            return Some(Transported::Annulus(self.reduced.arc_between(x, y)));
        }
        match self.annulus.bridge_lift(arc) {
            Some((a, b)) => {
                let (a, b) = match self.boundary {
                    Boundary::Outer => (self.map(a)?, b),
                    Boundary::Inner => (a, self.map(b)?),
                };
                Some(Transported::Annulus(self.reduced.bridge_from_lift(a, b)))
            }
            None => Some(Transported::Annulus(*arc)),
        }
    }

    /// Inverse of [`ChordCut::transport`].
    pub fn lift(&self, t: Transported) -> ArcClass {
        match t {
            Transported::Disk(d) => self
                .annulus
                .arc_between(self.disk_point(d.a()), self.disk_point(d.b())),
            Transported::Annulus(arc) => {
                let unmap = |p: LiftedPoint| match (p, self.boundary) {
                    (LiftedPoint::Outer(u), Boundary::Outer) => LiftedPoint::Outer(self.unmap(u)),
                    (LiftedPoint::Inner(u), Boundary::Inner) => LiftedPoint::Inner(self.unmap(u)),
                    _ => p,
                };
                let (x, y) = match arc {
                    ArcClass::Bridge { .. } => {
                        let (a, b) = self.reduced.bridge_lift(&arc).expect("bridge");
                        (LiftedPoint::Outer(a), LiftedPoint::Inner(b))
                    }
                    ArcClass::OuterChord { start, span } => (
                        LiftedPoint::Outer(i64::from(start)),
                        LiftedPoint::Outer(i64::from(start + span)),
                    ),
                    ArcClass::InnerChord { start, span } => (
                        LiftedPoint::Inner(i64::from(start)),
                        LiftedPoint::Inner(i64::from(start + span)),
                    ),
                };
                self.annulus.arc_between(unmap(x), unmap(y))
            }
        }
    }

    /// The reduced annulus angulation and the polygon angulation.
    pub fn split(
        &self,
        angulation: &AnnulusAngulation,
    ) -> Result<(AnnulusAngulation, DiskAngulation), AnnulusError> {
        if !angulation.contains(&self.chord) {
            return Err(AnnulusError::NotInAngulation(self.chord));
        }
        let mut arcs = Vec::new();
        let mut diagonals = Vec::new();
        for a in angulation.arcs().iter().filter(|a| **a != self.chord) {
            match self
                .transport(a)
                .ok_or(AnnulusError::Crossing(self.chord, *a))?
            {
                Transported::Annulus(x) => arcs.push(x),
                Transported::Disk(d) => diagonals.push(d),
            }
        }
        Ok((
            AnnulusAngulation::new(self.reduced, arcs)?,
            DiskAngulation::new(self.disk, diagonals)?,
        ))
    }
}

/// A cut along any m-diagonal of the annulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnnulusCut {
    Bridge(BridgeCut),
    Chord(ChordCut),
}

impl AnnulusCut {
    pub fn new(annulus: AnnulusConfig, arc: ArcClass) -> Result<Self, AnnulusError> {
        if arc.is_bridge() {
            BridgeCut::new(annulus, arc).map(AnnulusCut::Bridge)
        } else {
            ChordCut::new(annulus, arc).map(AnnulusCut::Chord)
        }
    }
}
