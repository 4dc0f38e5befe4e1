//! Cutting a polygon along an m-diagonal.

use super::{Diagonal, DiskAngulation, DiskConfig, DiskError};

/// One of the two polygons produced by a cut along `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    /// Vertices `a, a+1, ..., b`.
    Inside,
    /// Vertices `b, b+1, ..., S, 1, ..., a`.
    Outside,
}

impl Piece {
    fn index(self) -> usize {
        match self {
            Piece::Inside => 0,
            Piece::Outside => 1,
        }
    }
}

/// The two pieces of a polygon cut along a diagonal, with the vertex maps
/// sending each piece's local labels `1..=s` back into the original polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskCut {
    config: DiskConfig,
    diagonal: Diagonal,
    pieces: [DiskConfig; 2],
    maps: [Vec<u32>; 2],
}

impl DiskCut {
    pub fn new(config: DiskConfig, d: Diagonal) -> Result<Self, DiskError> {
        config.diagonal(d.a(), d.b())?;
        let s = config.sides();
        let inside: Vec<u32> = (d.a()..=d.b()).collect();
        let outside: Vec<u32> = (d.b()..=s).chain(1..=d.a()).collect();
        let pieces = [
            DiskConfig::new(config.m(), inside.len() as u32)?,
            DiskConfig::new(config.m(), outside.len() as u32)?,
        ];
        Ok(DiskCut {
            config,
            diagonal: d,
            pieces,
            maps: [inside, outside],
        })
    }

    pub fn config(&self) -> DiskConfig {
        self.config
    }

    pub fn diagonal(&self) -> Diagonal {
        self.diagonal
    }

    pub fn piece(&self, p: Piece) -> DiskConfig {
        self.pieces[p.index()]
    }

    /// `map[l - 1]` is the original label of local vertex `l`.
    pub fn vertex_map(&self, p: Piece) -> &[u32] {
        &self.maps[p.index()]
    }

    fn local(&self, p: Piece, v: u32) -> Option<u32> {
        self.maps[p.index()]
            .iter()
            .position(|&x| x == v)
            .map(|i| i as u32 + 1)
    }

    /// The piece holding `e` and the diagonal it becomes there. `None` when `e`
    /// is the cut diagonal or crosses it.
    pub fn transport(&self, e: Diagonal) -> Option<(Piece, Diagonal)> {
        if e == self.diagonal || e.crosses(&self.diagonal) {
            return None;
        }
        [Piece::Inside, Piece::Outside].into_iter().find_map(|p| {
            let a = self.local(p, e.a())?;
            let b = self.local(p, e.b())?;
            Some((p, Diagonal::new(a, b)))
        })
    }

    /// Inverse of [`DiskCut::transport`].
    pub fn lift(&self, p: Piece, local: Diagonal) -> Diagonal {
        let map = &self.maps[p.index()];
        Diagonal::new(map[local.a() as usize - 1], map[local.b() as usize - 1])
    }

    /// Splits an angulation containing the cut diagonal into angulations of
    /// the two pieces.
    pub fn split(&self, angulation: &DiskAngulation) -> Result<[DiskAngulation; 2], DiskError> {
        if !angulation.contains(self.diagonal) {
            return Err(DiskError::NotInAngulation(self.diagonal));
        }
        let mut parts: [Vec<Diagonal>; 2] = [Vec::new(), Vec::new()];
        for &e in angulation.diagonals() {
            if e == self.diagonal {
                continue;
            }
            let (p, local) = self
                .transport(e)
                .ok_or(DiskError::Crossing(self.diagonal, e))?;
            parts[p.index()].push(local);
        }
        let [inside, outside] = parts;
        Ok([
            DiskAngulation::new(self.pieces[0], inside)?,
            DiskAngulation::new(self.pieces[1], outside)?,
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: u32, b: u32) -> Diagonal {
        Diagonal::new(a, b)
    }

    #[test]
    fn octagon_cut_sizes() {
        let cut = DiskConfig::new(2, 8).unwrap().cut_along(d(1, 4)).unwrap();
        assert_eq!(cut.piece(Piece::Inside).sides(), 4);
        assert_eq!(cut.piece(Piece::Outside).sides(), 6);
        assert_eq!(cut.vertex_map(Piece::Outside), &[4, 5, 6, 7, 8, 1]);
        assert_eq!(cut.transport(d(1, 6)), Some((Piece::Outside, d(3, 6))));
        assert_eq!(cut.lift(Piece::Outside, d(3, 6)), d(1, 6));
        assert_eq!(cut.transport(d(2, 5)), None);
        assert_eq!(cut.transport(d(1, 4)), None);
    }

    #[test]
    fn ear_cut_leaves_a_rank_zero_piece() {
        let c = DiskConfig::new(3, 11).unwrap();
        let ear = d(5, 9);
        assert!(c.is_m_ear(ear));
        let cut = c.cut_along(ear).unwrap();
        assert_eq!(cut.piece(Piece::Inside).rank(), 0);
        assert_eq!(cut.piece(Piece::Outside).rank(), c.rank() - 1);
    }

    #[test]
    fn pentagon_cut() {
        let cut = DiskConfig::new(1, 5).unwrap().cut_along(d(1, 3)).unwrap();
        assert_eq!(cut.piece(Piece::Inside).sides(), 3);
        assert_eq!(cut.piece(Piece::Outside).sides(), 4);
        assert_eq!(cut.transport(d(1, 4)), Some((Piece::Outside, d(2, 4))));
    }

    #[test]
    fn split_fan() {
        let fan = DiskConfig::new(2, 10).unwrap().initial_fan();
        let cut = fan.config().cut_along(d(1, 6)).unwrap();
        let [inside, outside] = cut.split(&fan).unwrap();
        assert_eq!(inside.diagonals(), &[d(1, 4)]);
        assert_eq!(outside.diagonals(), &[d(3, 6)]);
    }
}
