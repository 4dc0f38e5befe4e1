//! Colored quivers and their mutation.
//!
//! A colored quiver on `n` vertices with color bound `m` records, for every
//! ordered pair of vertices `(i, j)` and color `c` in `0..=m`, a multiplicity
//! `q(i, j, c)`. Valid quivers have no loops, at most one color per ordered
//! pair, and satisfy `q(i, j, c) == q(j, i, m - c)`.
//!
//! Color arithmetic wraps modulo `m + 1` throughout.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Index of a quiver vertex.
pub type Vertex = usize;
/// Arrow color, in `0..=m`.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("vertex {vertex} out of range for a quiver on {vertices} vertices")]
    VertexOutOfRange { vertex: Vertex, vertices: usize },
    #[error("color {color} out of range 0..={m}")]
    ColorOutOfRange { color: Color, m: Color },
    #[error("color bound m must be at least 1")]
    ZeroColorBound,
    #[error("arrow multiplicity overflowed while mutating at vertex {0}")]
    Overflow(Vertex),
}

/// One failed instance of a colored-quiver axiom.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    /// `q(v, v, color) != 0`.
    Loop { vertex: Vertex, color: Color },
    /// More than one color carries arrows from `from` to `to`.
    Monochromaticity {
        from: Vertex,
        to: Vertex,
        colors: Vec<Color>,
    },
    /// `q(from, to, color) != q(to, from, m - color)`.
    Symmetry {
        from: Vertex,
        to: Vertex,
        color: Color,
    },
}

impl Violation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::Loop { .. } => "loop",
            Violation::Monochromaticity { .. } => "monochromaticity",
            Violation::Symmetry { .. } => "symmetry",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Loop { vertex, color } => {
                write!(f, "loop: arrow {vertex} -> {vertex} of color {color}")
            }
            Violation::Monochromaticity { from, to, colors } => {
                write!(
                    f,
                    "monochromaticity: arrows {from} -> {to} carry colors {colors:?}"
                )
            }
            Violation::Symmetry { from, to, color } => write!(
                f,
                "symmetry: q({from},{to}) of color {color} differs from its reverse partner"
            ),
        }
    }
}

/// A quiver whose arrows carry colors in `0..=m`.
///
/// Storage is sparse: only nonzero multiplicities are kept, keyed by
/// `(from, to, color)` in canonical order, so derived equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredQuiver {
    m: Color,
    vertices: usize,
    arrows: BTreeMap<(Vertex, Vertex, Color), u64>,
}

impl ColoredQuiver {
    /// Arrowless quiver on `vertices` vertices.
    pub fn new(m: Color, vertices: usize) -> Result<Self, QuiverError> {
        if m == 0 {
            return Err(QuiverError::ZeroColorBound);
        }
        Ok(ColoredQuiver {
            m,
            vertices,
            arrows: BTreeMap::new(),
        })
    }

    pub fn m(&self) -> Color {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn is_arrowless(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Adds `mult` arrows `from -> to` of `color`, without touching the
    /// reverse direction. Use [`ColoredQuiver::add_pair`] to keep symmetry.
    pub fn add_arrows(
        &mut self,
        from: Vertex,
        to: Vertex,
        color: Color,
        mult: u64,
    ) -> Result<(), QuiverError> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        if color > self.m {
            return Err(QuiverError::ColorOutOfRange { color, m: self.m });
        }
        if mult > 0 {
            *self.arrows.entry((from, to, color)).or_insert(0) += mult;
        }
        Ok(())
    }

    /// Adds `mult` arrows `from -> to` of `color` together with their
    /// symmetric partners `to -> from` of color `m - color`.
    pub fn add_pair(
        &mut self,
        from: Vertex,
        to: Vertex,
        color: Color,
        mult: u64,
    ) -> Result<(), QuiverError> {
        self.add_arrows(from, to, color, mult)?;
        self.add_arrows(to, from, self.m - color, mult)
    }

    /// Multiplicity `q(from, to, color)`; out-of-range arguments read as zero.
    pub fn mult(&self, from: Vertex, to: Vertex, color: Color) -> u64 {
        self.arrows.get(&(from, to, color)).copied().unwrap_or(0)
    }

    /// Multiplicity with the color reduced modulo `m + 1`.
    fn q(&self, from: Vertex, to: Vertex, color: i64) -> i128 {
        let modulus = i64::from(self.m) + 1;
        let c = color.rem_euclid(modulus) as Color;
        i128::from(self.mult(from, to, c))
    }

    /// Nonzero multiplicities in canonical `(from, to, color)` order.
    pub fn arrows(&self) -> impl Iterator<Item = (Vertex, Vertex, Color, u64)> + '_ {
        self.arrows.iter().map(|(&(i, j, c), &q)| (i, j, c, q))
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), QuiverError> {
        if v < self.vertices {
            Ok(())
        } else {
            Err(QuiverError::VertexOutOfRange {
                vertex: v,
                vertices: self.vertices,
            })
        }
    }

    /// Lists every failed axiom instance. An empty list means the quiver is a
    /// valid colored quiver.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut colors_by_pair: BTreeMap<(Vertex, Vertex), Vec<Color>> = BTreeMap::new();
        for &(i, j, c) in self.arrows.keys() {
            if i == j {
                out.push(Violation::Loop {
                    vertex: i,
                    color: c,
                });
            } else {
                colors_by_pair.entry((i, j)).or_default().push(c);
            }
        }
        for ((from, to), colors) in colors_by_pair {
            if colors.len() > 1 {
                out.push(Violation::Monochromaticity { from, to, colors });
            }
        }
        // Each mismatch is reported once, from the endpoint with the smaller index.
        let mut asym = std::collections::BTreeSet::new();
        for (&(i, j, c), &q) in &self.arrows {
            if i == j {
                continue;
            }
            let partner = self.mult(j, i, self.m - c);
            if partner != q {
                let key = if i < j { (i, j, c) } else { (j, i, self.m - c) };
                asym.insert(key);
            }
        }
        out.extend(
            asym.into_iter()
                .map(|(from, to, color)| Violation::Symmetry { from, to, color }),
        );
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Mutation at `k`:
    ///
    /// ```text
    /// q'(i,j,c) = q(i,j,c-1)                                   if j == k
    ///           = q(i,j,c+1)                                   if i == k
    ///           = max(0, q(i,j,c) - sum_{t != c} q(i,j,t)
    ///                   + (q(i,k,c) - q(i,k,c-1)) * q(k,j,0)
    ///                   + q(i,k,m) * (q(k,j,c) - q(k,j,c+1)))  otherwise
    /// ```
    pub fn mutate(&self, k: Vertex) -> Result<ColoredQuiver, QuiverError> {
        self.check_vertex(k)?;
        let m = i64::from(self.m);
        let mut out = ColoredQuiver {
            m: self.m,
            vertices: self.vertices,
            arrows: BTreeMap::new(),
        };
        for i in 0..self.vertices {
            for j in 0..self.vertices {
                if i == j {
                    continue;
                }
                let total: i128 = (0..=m).map(|t| self.q(i, j, t)).sum();
                for c in 0..=m {
                    let value = if j == k {
                        self.q(i, j, c - 1)
                    } else if i == k {
                        self.q(i, j, c + 1)
                    } else {
                        let own = self.q(i, j, c);
                        let others = total - own;
                        let through = (self.q(i, k, c) - self.q(i, k, c - 1)) * self.q(k, j, 0)
                            + self.q(i, k, m) * (self.q(k, j, c) - self.q(k, j, c + 1));
                        (own - others + through).max(0)
                    };
                    if value > 0 {
                        let value = u64::try_from(value).map_err(|_| QuiverError::Overflow(k))?;
                        out.arrows.insert((i, j, c as Color), value);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Inverse mutation at `k`: `m` applications of [`ColoredQuiver::mutate`].
    pub fn mutate_inverse(&self, k: Vertex) -> Result<ColoredQuiver, QuiverError> {
        self.check_vertex(k)?;
        let mut q = self.clone();
        for _ in 0..self.m {
            q = q.mutate(k)?;
        }
        Ok(q)
    }

    /// Mutation at `k` by the three-step procedure:
    ///
    /// 1. for every path `i -(c)-> k -(0)-> j` with `i != j`, add `i -(c)-> j`
    ///    and `j -(m-c)-> i`;
    /// 2. between each pair of vertices, cancel equal numbers of arrows of
    ///    differing colors until one color is left;
    /// 3. increase the color of arrows into `k` and decrease the color of
    ///    arrows out of `k` by one.
    pub fn mutate_procedural(&self, k: Vertex) -> Result<ColoredQuiver, QuiverError> {
        self.check_vertex(k)?;
        let width = self.m as usize + 1;
        let mut counts: BTreeMap<(Vertex, Vertex), Vec<u64>> = BTreeMap::new();
        for (&(i, j, c), &q) in &self.arrows {
            counts.entry((i, j)).or_insert_with(|| vec![0; width])[c as usize] += q;
        }

        let into_k: Vec<_> = self
            .arrows
            .iter()
            .filter(|(&(_, j, _), _)| j == k)
            .map(|(&(i, _, c), &q)| (i, c, q))
            .collect();
        let out_of_k: Vec<_> = self
            .arrows
            .iter()
            .filter(|(&(i, _, c), _)| i == k && c == 0)
            .map(|(&(_, j, _), &q)| (j, q))
            .collect();
        for &(i, c, a) in &into_k {
            for &(j, b) in &out_of_k {
                if i == j || i == k || j == k {
                    continue;
                }
                let add = a.checked_mul(b).ok_or(QuiverError::Overflow(k))?;
                let fwd = &mut counts.entry((i, j)).or_insert_with(|| vec![0; width])[c as usize];
                *fwd = fwd.checked_add(add).ok_or(QuiverError::Overflow(k))?;
                let back = &mut counts.entry((j, i)).or_insert_with(|| vec![0; width])
                    [(self.m - c) as usize];
                *back = back.checked_add(add).ok_or(QuiverError::Overflow(k))?;
            }
        }

        // Cancel on i < j and mirror onto (j, i) so both directions stay
        // symmetric regardless of processing order.
        let pairs: Vec<_> = counts.keys().copied().filter(|&(i, j)| i < j).collect();
        for (i, j) in pairs {
            let mut fwd = counts[&(i, j)].clone();
            cancel_colors(&mut fwd);
            if let Some(back) = counts.get_mut(&(j, i)) {
                for c in 0..width {
                    back[self.m as usize - c] = fwd[c];
                }
            }
            counts.insert((i, j), fwd);
        }
        // Pairs present only as (j, i) with j > i.
        let lone: Vec<_> = counts
            .keys()
            .copied()
            .filter(|&(i, j)| i > j && !counts.contains_key(&(j, i)))
            .collect();
        for key in lone {
            if let Some(v) = counts.get_mut(&key) {
                cancel_colors(v);
            }
        }

        let modulus = self.m + 1;
        let mut out = ColoredQuiver {
            m: self.m,
            vertices: self.vertices,
            arrows: BTreeMap::new(),
        };
        for ((i, j), colors) in counts {
            for (c, q) in colors.into_iter().enumerate() {
                if q == 0 {
                    continue;
                }
                let c = c as Color;
                let color = if j == k && i != k {
                    (c + 1) % modulus
                } else if i == k && j != k {
                    (c + modulus - 1) % modulus
                } else {
                    c
                };
                *out.arrows.entry((i, j, color)).or_insert(0) += q;
            }
        }
        Ok(out)
    }

    /// The color-0 subquiver.
    pub fn gabriel(&self) -> PlainQuiver {
        let arrows = self
            .arrows
            .iter()
            .filter(|(&(_, _, c), _)| c == 0)
            .map(|(&(i, j, _), &q)| ((i, j), q))
            .collect();
        PlainQuiver {
            vertices: self.vertices,
            arrows,
        }
    }
}

/// Repeatedly subtracts the smaller count from each clashing color pair, in
/// ascending color order, until at most one color is nonzero.
fn cancel_colors(colors: &mut [u64]) {
    loop {
        let live: Vec<usize> = (0..colors.len()).filter(|&c| colors[c] > 0).collect();
        if live.len() <= 1 {
            return;
        }
        let (a, b) = (live[0], live[1]);
        let d = colors[a].min(colors[b]);
        colors[a] -= d;
        colors[b] -= d;
    }
}

/// An uncolored quiver: arrow multiplicities per ordered vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlainQuiver {
    pub vertices: usize,
    pub arrows: BTreeMap<(Vertex, Vertex), u64>,
}

impl PlainQuiver {
    pub fn arrow_count(&self) -> u64 {
        self.arrows.values().sum()
    }

    /// True when the underlying graph is a simple path through all vertices
    /// with single arrows in any orientation.
    pub fn is_linear_path(&self) -> bool {
        if self.vertices == 0 {
            return false;
        }
        if self.arrows.values().any(|&q| q != 1) || self.arrows.len() != self.vertices - 1 {
            return false;
        }
        let mut degree = vec![0usize; self.vertices];
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for &(i, j) in self.arrows.keys() {
            if i == j {
                return false;
            }
            degree[i] += 1;
            degree[j] += 1;
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri == rj {
                return false;
            }
            parent[ri] = rj;
        }
        degree.iter().all(|&d| d <= 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiver(m: Color, n: usize, pairs: &[(Vertex, Vertex, Color, u64)]) -> ColoredQuiver {
        let mut q = ColoredQuiver::new(m, n).unwrap();
        for &(i, j, c, mult) in pairs {
            q.add_pair(i, j, c, mult).unwrap();
        }
        q
    }

    #[test]
    fn minimal_symmetric_pair_is_valid() {
        for m in 1..4 {
            let q = quiver(m, 2, &[(0, 1, 0, 1)]);
            assert!(q.validate().is_empty());
            assert_eq!(q.mult(1, 0, m), 1);
        }
    }

    #[test]
    fn loop_is_reported() {
        let mut q = ColoredQuiver::new(1, 1).unwrap();
        q.add_arrows(0, 0, 0, 1).unwrap();
        let v = q.validate();
        assert_eq!(
            v,
            vec![Violation::Loop {
                vertex: 0,
                color: 0
            }]
        );
    }

    #[test]
    fn two_colors_on_one_pair_break_monochromaticity() {
        let mut q = ColoredQuiver::new(2, 2).unwrap();
        q.add_arrows(0, 1, 0, 1).unwrap();
        q.add_arrows(0, 1, 1, 1).unwrap();
        let mono: Vec<_> = q
            .validate()
            .into_iter()
            .filter(|v| v.axiom() == "monochromaticity")
            .collect();
        assert_eq!(
            mono,
            vec![Violation::Monochromaticity {
                from: 0,
                to: 1,
                colors: vec![0, 1]
            }]
        );
    }

    #[test]
    fn missing_partner_breaks_symmetry_once() {
        let mut q = ColoredQuiver::new(2, 2).unwrap();
        q.add_arrows(1, 0, 2, 1).unwrap();
        assert_eq!(
            q.validate(),
            vec![Violation::Symmetry {
                from: 0,
                to: 1,
                color: 0
            }]
        );
    }

    #[test]
    fn path_mutation_at_middle_vertex() {
        let q = quiver(1, 3, &[(0, 1, 0, 1), (1, 2, 0, 1)]);
        let expected = quiver(1, 3, &[(1, 0, 0, 1), (2, 1, 0, 1), (0, 2, 0, 1)]);
        assert_eq!(q.mutate(1).unwrap(), expected);
        assert_eq!(q.mutate_procedural(1).unwrap(), expected);
    }

    #[test]
    fn two_vertex_m2_cycles_with_period_three() {
        let q = quiver(2, 2, &[(0, 1, 0, 1)]);
        let once = q.mutate(0).unwrap();
        assert_eq!(once, quiver(2, 2, &[(0, 1, 2, 1)]));
        assert_eq!(q.mutate_procedural(0).unwrap(), once);
        let thrice = once.mutate(0).unwrap().mutate(0).unwrap();
        assert_eq!(thrice, q);
        assert_eq!(once.mutate_inverse(0).unwrap(), q);
    }

    #[test]
    fn arrowless_quiver_is_fixed() {
        let q = ColoredQuiver::new(3, 4).unwrap();
        for k in 0..4 {
            assert_eq!(q.mutate(k).unwrap(), q);
            assert_eq!(q.mutate_inverse(k).unwrap(), q);
            assert_eq!(q.mutate_procedural(k).unwrap(), q);
        }
    }

    #[test]
    fn inverse_is_mutation_when_m_is_one() {
        let q = quiver(
            1,
            4,
            &[(0, 1, 0, 1), (1, 2, 0, 2), (3, 2, 0, 1), (0, 3, 1, 1)],
        );
        for k in 0..4 {
            assert_eq!(q.mutate_inverse(k).unwrap(), q.mutate(k).unwrap());
        }
    }

    #[test]
    fn vertex_out_of_range_is_an_error() {
        let q = ColoredQuiver::new(1, 2).unwrap();
        let err = QuiverError::VertexOutOfRange {
            vertex: 2,
            vertices: 2,
        };
        assert_eq!(q.mutate(2), Err(err.clone()));
        assert_eq!(q.mutate_inverse(2), Err(err.clone()));
        assert_eq!(q.mutate_procedural(2), Err(err));
    }

    #[test]
    fn gabriel_keeps_color_zero_only() {
        let q = quiver(2, 3, &[(0, 1, 0, 1), (1, 2, 1, 1)]);
        let g = q.gabriel();
        assert_eq!(g.arrows.len(), 1);
        assert_eq!(g.arrows[&(0, 1)], 1);

        let only_one = quiver(2, 2, &[(0, 1, 1, 1)]);
        assert_eq!(only_one.gabriel().arrow_count(), 0);
    }

    #[test]
    fn linear_path_detection() {
        let path = quiver(1, 3, &[(0, 1, 0, 1), (2, 1, 0, 1)]).gabriel();
        assert!(path.is_linear_path());
        let triangle = quiver(1, 3, &[(0, 1, 0, 1), (1, 2, 0, 1), (2, 0, 0, 1)]).gabriel();
        assert!(!triangle.is_linear_path());
        let double = quiver(1, 2, &[(0, 1, 0, 2)]).gabriel();
        assert!(!double.is_linear_path());
        assert!(ColoredQuiver::new(1, 1).unwrap().gabriel().is_linear_path());
    }

    #[test]
    fn zero_color_bound_rejected() {
        assert_eq!(ColoredQuiver::new(0, 3), Err(QuiverError::ZeroColorBound));
    }
}
