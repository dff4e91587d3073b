//! Pants complexes and dual curve complexes on the two surfaces whose pants
//! decompositions consist of a single curve: the 4-punctured sphere (the
//! pillowcase, which is the bridge surface of a 2-bridge knot) and the
//! once-punctured torus.
//!
//! Isotopy classes of essential simple closed curves on either surface are
//! indexed by extended rationals, i.e. by [`Slope`]. Two slopes `a/b` and
//! `c/d` span a pants-complex edge exactly when their curves meet minimally
//! (once on the torus, twice on the pillowcase), which happens exactly when
//! `|ad - bc| = 1` — so both pants complexes are the Farey graph. The dual
//! curve complex instead joins every pair of distinct decompositions, a
//! complete graph.

use std::fmt;

use crate::arith::gcd;
use crate::farey::{self, Slope};

/// A surface whose pants decompositions are single curves (`3g + c - 3 = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    /// `S(0,4)`, the pillowcase: a sphere with four punctures.
    FourPuncturedSphere,
    /// `S(1,1)`: a torus with one puncture.
    OncePuncturedTorus,
}

impl SurfaceKind {
    /// The smallest geometric intersection number between distinct essential
    /// simple closed curves: 2 on the pillowcase (curves separate the
    /// punctures into pairs and must cross twice), 1 on the torus.
    pub fn minimal_intersection(&self) -> u128 {
        match self {
            SurfaceKind::FourPuncturedSphere => 2,
            SurfaceKind::OncePuncturedTorus => 1,
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::FourPuncturedSphere => write!(f, "S(0,4)"),
            SurfaceKind::OncePuncturedTorus => write!(f, "S(1,1)"),
        }
    }
}

/// Which metric graph on the decomposition set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComplexKind {
    /// Edges between decompositions whose curves meet minimally.
    Pants,
    /// Edges between any two distinct decompositions.
    DualCurve,
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexKind::Pants => write!(f, "pants"),
            ComplexKind::DualCurve => write!(f, "dual"),
        }
    }
}

/// Geometric intersection number of the slope-`u` and slope-`v` curves:
/// `|ad - bc|` on the once-punctured torus and `2|ad - bc|` on the
/// 4-punctured sphere (each pillowcase crossing pattern doubles the torus
/// count).
///
/// ```
/// use bridgepants::pantscomplex::{intersection_number, SurfaceKind};
/// use bridgepants::Slope;
/// let inf = Slope::INFINITY;
/// let half = Slope::new(1, 2).unwrap();
/// assert_eq!(intersection_number(SurfaceKind::OncePuncturedTorus, inf, half), 2);
/// assert_eq!(intersection_number(SurfaceKind::FourPuncturedSphere, inf, half), 4);
/// ```
pub fn intersection_number(surface: SurfaceKind, u: Slope, v: Slope) -> u128 {
    let det = (u.num() as i128) * (v.den() as i128) - (u.den() as i128) * (v.num() as i128);
    surface.minimal_intersection() * det.unsigned_abs()
}

/// True iff `u` and `v` span a pants-complex edge, i.e. their curves realize
/// the surface's minimal intersection. On both surfaces this coincides with
/// Farey adjacency. Equal slopes give `false`.
pub fn is_pants_edge(surface: SurfaceKind, u: Slope, v: Slope) -> bool {
    intersection_number(surface, u, v) == surface.minimal_intersection()
}

/// True iff `u` and `v` span a dual-curve-complex edge. Single-curve
/// decompositions always differ by that one curve, so any two distinct
/// slopes are adjacent and the dual distance between them is 1.
pub fn is_dual_curve_edge(_surface: SurfaceKind, u: Slope, v: Slope) -> bool {
    u != v
}

/// A finite window onto one of the complexes: all reduced slopes `p/q` with
/// `|p| <= bound` and `1 <= q <= bound`, plus `1/0`, with edges induced by
/// the complex's predicate.
///
/// Vertices are held in a fixed order (infinity first, then ascending
/// value), so exports are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricGraphView {
    surface: SurfaceKind,
    complex: ComplexKind,
    bound: i64,
    vertices: Vec<Slope>,
}

/// Builds the bounded window of the chosen complex.
///
/// # Panics
///
/// Panics if `denominator_bound < 1`. The vertex count grows quadratically
/// in the bound (and a dual-curve view's edge count quadratically in that),
/// so callers should keep bounds modest or consult
/// [`MetricGraphView::edge_count`] before materializing edges.
pub fn bounded_view(
    surface: SurfaceKind,
    complex: ComplexKind,
    denominator_bound: i64,
) -> MetricGraphView {
    assert!(
        denominator_bound >= 1,
        "denominator bound must be at least 1"
    );
    let b = denominator_bound;
    let mut vertices = vec![Slope::INFINITY];
    for q in 1..=b {
        for p in -b..=b {
            if gcd(p.unsigned_abs(), q as u64) == 1 {
                vertices.push(Slope::new(p, q).expect("coprime pair is a valid slope"));
            }
        }
    }
    vertices.sort_unstable();
    MetricGraphView {
        surface,
        complex,
        bound: b,
        vertices,
    }
}

impl MetricGraphView {
    pub fn surface(&self) -> SurfaceKind {
        self.surface
    }

    pub fn complex(&self) -> ComplexKind {
        self.complex
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Vertices, infinity first and then in ascending slope order.
    pub fn vertices(&self) -> &[Slope] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: Slope) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// True iff both slopes lie in the window and satisfy the complex's edge
    /// predicate.
    pub fn is_edge(&self, u: Slope, v: Slope) -> bool {
        if !(self.contains(u) && self.contains(v)) {
            return false;
        }
        match self.complex {
            ComplexKind::Pants => is_pants_edge(self.surface, u, v),
            ComplexKind::DualCurve => is_dual_curve_edge(self.surface, u, v),
        }
    }

    /// Number of edges, computed without materializing the dual-curve
    /// complete graph.
    pub fn edge_count(&self) -> u64 {
        match self.complex {
            ComplexKind::Pants => self.edges().len() as u64,
            ComplexKind::DualCurve => {
                let n = self.vertices.len() as u64;
                n * (n - 1) / 2
            }
        }
    }

    /// The edge list as vertex pairs `(u, v)` with `u` before `v` in vertex
    /// order, sorted. Pants edges come from the Farey neighbor enumeration
    /// restricted to the window; dual-curve edges are all distinct pairs.
    pub fn edges(&self) -> Vec<(Slope, Slope)> {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        match self.complex {
            ComplexKind::Pants => {
                for (i, &u) in self.vertices.iter().enumerate() {
                    farey::neighbors_within(u, self.bound, |c, d| {
                        let w = Slope::new(c, d).expect("neighbors are valid slopes");
                        let j = self
                            .vertices
                            .binary_search(&w)
                            .expect("window neighbors lie in the vertex set");
                        if j > i {
                            pairs.push((i, j));
                        }
                    });
                }
                // The enumeration can report 1/0 from both determinant
                // branches of the same vertex.
                pairs.sort_unstable();
                pairs.dedup();
            }
            ComplexKind::DualCurve => {
                let n = self.vertices.len();
                pairs.reserve(n * (n - 1) / 2);
                for i in 0..n {
                    for j in (i + 1)..n {
                        pairs.push((i, j));
                    }
                }
            }
        }
        pairs
            .into_iter()
            .map(|(i, j)| (self.vertices[i], self.vertices[j]))
            .collect()
    }
}
