//! Faces of an angulation and the colored quiver read off from them.

use crate::quiver::{Color, ColoredQuiver, QuiverError};

/// One side of a face: a piece of the surface boundary or an arc of the
/// angulation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side<E, A> {
    Edge(E),
    Arc(A),
}

impl<E, A> Side<E, A> {
    pub fn arc(&self) -> Option<&A> {
        match self {
            Side::Arc(a) => Some(a),
            Side::Edge(_) => None,
        }
    }
}

/// A polygonal cell, traversed clockwise. Side `i` runs from `vertices[i]`
/// to `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face<V, E, A> {
    pub vertices: Vec<V>,
    pub sides: Vec<Side<E, A>>,
}

impl<V, E, A: PartialEq> Face<V, E, A> {
    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn position_of(&self, arc: &A) -> Option<usize> {
        self.sides.iter().position(|s| s.arc() == Some(arc))
    }

    pub fn arcs(&self) -> impl Iterator<Item = &A> {
        self.sides.iter().filter_map(Side::arc)
    }
}

impl<V, E: Clone + Ord, A: Clone + Ord> Face<V, E, A> {
    /// Side sequence rotated to start at its least element; equal for the
    /// same cell however the traversal was started.
    pub fn canonical_sides(&self) -> Vec<Side<E, A>> {
        let n = self.sides.len();
        (0..n)
            .map(|r| {
                let mut s = self.sides.clone();
                s.rotate_left(r);
                s
            })
            .min()
            .unwrap_or_default()
    }
}

/// Colored quiver of a set of faces: for every face and every ordered pair of
/// arc sides `d`, `e` on it, one arrow `d -> e` whose color is the number of
/// sides strictly between them, walking clockwise from `d`.
pub fn quiver_from_faces<'a, V: 'a, E: 'a, A: 'a + PartialEq, F>(
    m: Color,
    vertices: usize,
    faces: impl IntoIterator<Item = &'a Face<V, E, A>>,
    index_of: F,
) -> Result<ColoredQuiver, QuiverError>
where
    F: Fn(&A) -> usize,
{
    let mut q = ColoredQuiver::new(m, vertices)?;
    for face in faces {
        let len = face.sides.len();
        let arcs: Vec<(usize, &A)> = face
            .sides
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.arc().map(|a| (i, a)))
            .collect();
        for &(i, d) in &arcs {
            for &(j, e) in &arcs {
                if i == j {
                    continue;
                }
                let between = (j + len - i - 1) % len;
                q.add_arrows(index_of(d), index_of(e), between as Color, 1)?;
            }
        }
    }
    Ok(q)
}
