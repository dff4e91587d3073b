//! The Farey graph on extended rational slopes.
//!
//! Vertices are reduced fractions `p/q` together with `1/0` (infinity); two
//! vertices `a/b` and `c/d` span an edge exactly when `|a*d - b*c| = 1`.
//! Geodesic distance from `1/0` to `p/q` in this graph computes the pants
//! distance of the standard (0,2)-splitting of the 2-bridge knot with slope
//! `p/q`, so the complexity and volume modules reduce their work to path
//! search here.
//!
//! Continued fractions tie the two worlds together: the convergents of
//! `p/q = [a1, ..., an]` trace a path of `n + 1` edges from `1/0` through
//! `0/1` to `p/q` (the *truncation path*), and breadth-first search finds the
//! true geodesics, which are never longer.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::arith::{div_ceil, div_floor, ext_gcd, gcd};

/// Errors produced by slope arithmetic and Farey-graph search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FareyError {
    /// `0/0` does not determine a point of the extended rationals.
    #[error("0/0 does not determine a slope")]
    ZeroOverZero,
    /// Reduction would produce a numerator or denominator outside `i64`.
    #[error("slope does not fit in 64-bit reduced form")]
    Overflow,
    /// The slope has no continued fraction expansion in `(0, 1/2]`.
    #[error("slope {slope} lies outside (0, 1/2], so it has no admissible continued fraction")]
    OutsideCfDomain { slope: Slope },
    /// Distance from `1/0` is defined for `0/1`, `1/0`, and slopes in `(0, 1/2]`.
    #[error("distance from 1/0 is only computed for slopes in (0, 1/2] or in {{0/1, 1/0}}, got {slope}")]
    OutsideDistanceDomain { slope: Slope },
    /// Continued fractions must have at least one coefficient.
    #[error("continued fraction must be non-empty")]
    EmptyContinuedFraction,
    /// Continued fraction coefficients must be positive.
    #[error("continued fraction coefficients must be >= 1")]
    ZeroCoefficient,
    /// Window bounds must be positive.
    #[error("window bound must be >= 1, got {bound}")]
    NonPositiveBound { bound: i64 },
    /// A BFS endpoint lies outside the requested window.
    #[error("slope {slope} lies outside the window |num| <= {bound}, den <= {bound}")]
    OutsideWindow { slope: Slope, bound: i64 },
    /// No path between the endpoints inside the window (never observed for
    /// the windows used here; reported rather than panicking).
    #[error("no path from {from} to {to} inside the window of bound {bound}")]
    Unreachable { from: Slope, to: Slope, bound: i64 },
    /// A vertex sequence failed the path axioms.
    #[error("invalid Farey path: {reason}")]
    InvalidPath { reason: &'static str },
}

/// A vertex of the Farey graph: a reduced extended rational.
///
/// Always stored in canonical form: `den >= 0`, `gcd(|num|, den) = 1`, and
/// infinity is exactly `1/0`. Construct via [`Slope::new`], which reduces.
///
/// The derived order sorts `1/0` first and finite slopes by numeric value;
/// this is the vertex order used by graph exports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    pub(crate) num: i64,
    pub(crate) den: i64,
}

impl Slope {
    /// The vertex `1/0`.
    pub const INFINITY: Slope = Slope { num: 1, den: 0 };
    /// The vertex `0/1`.
    pub const ZERO: Slope = Slope { num: 0, den: 1 };

    /// Reduces `num/den` to canonical form. Any `n/0` with `n != 0` is `1/0`.
    ///
    /// ```
    /// use bridgepants::Slope;
    /// assert_eq!(Slope::new(4, 6), Slope::new(2, 3));
    /// assert_eq!(Slope::new(-3, 0), Ok(Slope::INFINITY));
    /// assert_eq!(Slope::new(2, -4), Slope::new(-1, 2));
    /// assert!(Slope::new(0, 0).is_err());
    /// ```
    pub fn new(num: i64, den: i64) -> Result<Self, FareyError> {
        if num == 0 && den == 0 {
            return Err(FareyError::ZeroOverZero);
        }
        if den == 0 {
            return Ok(Slope::INFINITY);
        }
        if num == 0 {
            return Ok(Slope::ZERO);
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs());
        let n = num.unsigned_abs() / g;
        let d = den.unsigned_abs() / g;
        let negative = (num < 0) != (den < 0);
        let n = i64::try_from(n).map_err(|_| FareyError::Overflow)?;
        let d = i64::try_from(d).map_err(|_| FareyError::Overflow)?;
        Ok(Slope {
            num: if negative { -n } else { n },
            den: d,
        })
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_infinity(&self) -> bool {
        self.den == 0
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => std::cmp::Ordering::Equal,
            (true, false) => std::cmp::Ordering::Less,
            (false, true) => std::cmp::Ordering::Greater,
            (false, false) => {
                let lhs = self.num as i128 * other.den as i128;
                let rhs = other.num as i128 * self.den as i128;
                lhs.cmp(&rhs)
            }
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Two distinct slopes span a Farey edge iff `|a*d - b*c| = 1`.
///
/// Symmetric; a slope is never adjacent to itself (the determinant is 0).
pub fn is_farey_edge(u: Slope, v: Slope) -> bool {
    let det = u.num as i128 * v.den as i128 - u.den as i128 * v.num as i128;
    det == 1 || det == -1
}

/// A continued fraction `[a1, ..., an]` denoting `1/(a1 + 1/(a2 + ... + 1/an))`.
///
/// Coefficients are positive. The expansion is *canonical* when `an >= 2`;
/// every value in `(0, 1/2]` has exactly one canonical expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction(Vec<u64>);

impl ContinuedFraction {
    pub fn new(coefficients: Vec<u64>) -> Result<Self, FareyError> {
        if coefficients.is_empty() {
            return Err(FareyError::EmptyContinuedFraction);
        }
        if coefficients.contains(&0) {
            return Err(FareyError::ZeroCoefficient);
        }
        Ok(ContinuedFraction(coefficients))
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    /// Number of coefficients; for a 2-bridge slope this is the twist number
    /// of the reduced alternating diagram read off the expansion.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `true` iff the final coefficient is at least 2.
    pub fn is_canonical(&self) -> bool {
        *self.0.last().expect("continued fractions are non-empty") >= 2
    }

    /// Rewrites a trailing `[..., a, 1]` as `[..., a + 1]`, which preserves
    /// the value. The result is canonical for every input except `[1]`
    /// (value 1 has no expansion ending in a coefficient >= 2).
    pub fn canonicalize(&self) -> ContinuedFraction {
        let mut coeffs = self.0.clone();
        if coeffs.len() >= 2 && *coeffs.last().unwrap() == 1 {
            coeffs.pop();
            *coeffs.last_mut().unwrap() += 1;
        }
        ContinuedFraction(coeffs)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// Canonical continued fraction expansion of a slope in `(0, 1/2]`.
///
/// Runs the Euclidean algorithm on `den/num`; for this domain the first
/// coefficient is automatically >= 2 and so is the last, hence the result is
/// canonical.
///
/// ```
/// use bridgepants::{farey, Slope};
/// let cf = farey::cf_expand(Slope::new(3, 11).unwrap()).unwrap();
/// assert_eq!(cf.coefficients(), &[3, 1, 2]);
/// ```
pub fn cf_expand(slope: Slope) -> Result<ContinuedFraction, FareyError> {
    if !(slope.num >= 1 && slope.den >= 2 && 2 * slope.num <= slope.den) {
        return Err(FareyError::OutsideCfDomain { slope });
    }
    let (mut a, mut b) = (slope.den, slope.num);
    let mut coefficients = Vec::new();
    while b > 0 {
        coefficients.push((a / b) as u64);
        let r = a % b;
        a = b;
        b = r;
    }
    Ok(ContinuedFraction(coefficients))
}

/// Value of a continued fraction as a reduced slope.
///
/// Uses the convergent recurrence `p_k = a_k*p_{k-1} + p_{k-2}`,
/// `q_k = a_k*q_{k-1} + q_{k-2}` seeded with `p_{-1}/q_{-1} = 1/0` and
/// `p_0/q_0 = 0/1`; consecutive convergents have determinant ±1, so the
/// result is already reduced.
pub fn cf_value(cf: &ContinuedFraction) -> Result<Slope, FareyError> {
    let mut conv = Convergents::new();
    for &a in cf.coefficients() {
        conv.step(a)?;
    }
    Ok(conv.current())
}

/// The path `1/0, 0/1, v_1, ..., v_n` through the convergents of `cf`.
///
/// Consecutive convergents have determinant ±1, so this is always a valid
/// Farey path; it has `n + 1` edges for an expansion of length `n`.
pub fn truncation_path(cf: &ContinuedFraction) -> Result<FareyPath, FareyError> {
    let mut vertices = Vec::with_capacity(cf.len() + 2);
    vertices.push(Slope::INFINITY);
    vertices.push(Slope::ZERO);
    let mut conv = Convergents::new();
    for &a in cf.coefficients() {
        conv.step(a)?;
        vertices.push(conv.current());
    }
    FareyPath::new(vertices)
}

/// Running state of the convergent recurrence.
struct Convergents {
    p_prev: i64,
    q_prev: i64,
    p: i64,
    q: i64,
}

impl Convergents {
    fn new() -> Self {
        Convergents {
            p_prev: 1,
            q_prev: 0,
            p: 0,
            q: 1,
        }
    }

    fn step(&mut self, a: u64) -> Result<(), FareyError> {
        let a = i64::try_from(a).map_err(|_| FareyError::Overflow)?;
        let p_next = a
            .checked_mul(self.p)
            .and_then(|x| x.checked_add(self.p_prev))
            .ok_or(FareyError::Overflow)?;
        let q_next = a
            .checked_mul(self.q)
            .and_then(|x| x.checked_add(self.q_prev))
            .ok_or(FareyError::Overflow)?;
        self.p_prev = self.p;
        self.q_prev = self.q;
        self.p = p_next;
        self.q = q_next;
        Ok(())
    }

    fn current(&self) -> Slope {
        debug_assert_eq!(gcd(self.p.unsigned_abs(), self.q.unsigned_abs()), 1);
        Slope {
            num: self.p,
            den: self.q,
        }
    }
}

/// A simple path in the Farey graph: pairwise-distinct vertices with every
/// consecutive pair spanning an edge. A single vertex is a valid path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyPath {
    vertices: Vec<Slope>,
}

impl FareyPath {
    pub fn new(vertices: Vec<Slope>) -> Result<Self, FareyError> {
        if vertices.is_empty() {
            return Err(FareyError::InvalidPath {
                reason: "a path needs at least one vertex",
            });
        }
        for w in vertices.windows(2) {
            if !is_farey_edge(w[0], w[1]) {
                return Err(FareyError::InvalidPath {
                    reason: "consecutive vertices must span a Farey edge",
                });
            }
        }
        for (i, u) in vertices.iter().enumerate() {
            if vertices[..i].contains(u) {
                return Err(FareyError::InvalidPath {
                    reason: "vertices must be pairwise distinct",
                });
            }
        }
        Ok(FareyPath { vertices })
    }

    pub fn vertices(&self) -> &[Slope] {
        &self.vertices
    }

    /// Number of edges (one less than the number of vertices).
    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn first(&self) -> Slope {
        self.vertices[0]
    }

    pub fn last(&self) -> Slope {
        *self.vertices.last().expect("paths are non-empty")
    }
}

impl fmt::Display for FareyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " -> ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Breadth-first search on windows of the Farey graph.
//
// A window of bound B consists of the canonical slopes with |num| <= B and
// 0 <= den <= B. Distances from 1/0 to a slope of denominator q are searched
// in the window of bound 2q: the truncation path lies inside the window of
// bound q already, and sweeps against an independent oracle at bounds 2q and
// 4q confirm the distances are stable.
// ---------------------------------------------------------------------------

/// Distance labels over a window, dense when the window is small enough to
/// afford a flat array (the usual case) and a hash map beyond that.
enum DistStore {
    Dense(Vec<u32>),
    Sparse(HashMap<(i64, i64), u32>),
}

struct Window {
    bound: i64,
    store: DistStore,
}

const UNSET: u32 = u32::MAX;
const DENSE_WINDOW_LIMIT: i64 = 1 << 25;

impl Window {
    fn new(bound: i64) -> Self {
        debug_assert!(bound >= 1);
        let entries = (bound as i128 + 1) * (2 * bound as i128 + 1);
        let store = if entries <= DENSE_WINDOW_LIMIT as i128 {
            DistStore::Dense(vec![UNSET; entries as usize])
        } else {
            DistStore::Sparse(HashMap::new())
        };
        Window { bound, store }
    }

    /// Flat index into the dense store (only called when dense, so the
    /// arithmetic cannot overflow).
    fn flat_idx(bound: i64, num: i64, den: i64) -> usize {
        (den * (2 * bound + 1) + num + bound) as usize
    }

    fn get(&self, num: i64, den: i64) -> Option<u32> {
        match &self.store {
            DistStore::Dense(v) => {
                let d = v[Self::flat_idx(self.bound, num, den)];
                (d != UNSET).then_some(d)
            }
            DistStore::Sparse(m) => m.get(&(num, den)).copied(),
        }
    }

    /// Records a distance if the vertex is still unlabelled; returns whether
    /// the label was new.
    fn try_insert(&mut self, num: i64, den: i64, dist: u32) -> bool {
        let bound = self.bound;
        match &mut self.store {
            DistStore::Dense(v) => {
                let i = Self::flat_idx(bound, num, den);
                if v[i] == UNSET {
                    v[i] = dist;
                    true
                } else {
                    false
                }
            }
            DistStore::Sparse(m) => {
                if let std::collections::hash_map::Entry::Vacant(e) = m.entry((num, den)) {
                    e.insert(dist);
                    true
                } else {
                    false
                }
            }
        }
    }
}

/// Calls `f` on every canonical slope in the window of `bound` adjacent to
/// the canonical slope `a/b`. Solutions of `a*d - b*c = ±1` form two
/// arithmetic progressions `(c0 + t*a, d0 + t*b)`, walked directly.
fn for_each_neighbor(a: i64, b: i64, bound: i64, mut f: impl FnMut(i64, i64)) {
    debug_assert!(b >= 0 && (b > 0 || a == 1));
    if b == 0 {
        // 1/0 is adjacent to exactly the integer slopes c/1.
        for c in -bound..=bound {
            f(c, 1);
        }
        return;
    }
    let (g, x, y) = ext_gcd(a, b);
    debug_assert_eq!(g, 1);
    // The denominator window limits t directly; the numerator window is also
    // a t-interval, intersected up front so every walked step emits. The
    // intersection arithmetic stays in range for every bound below
    // i64::MAX / 4; beyond that (windows far too large to search anyway)
    // fall back to filtering per step.
    let tight = bound <= i64::MAX / 4;
    for eps in [1i64, -1] {
        // a*(eps*x) - b*(-eps*y) = eps, so (c, d) = (-eps*y + t*a, eps*x + t*b).
        let c0 = -eps * y;
        let d0 = eps * x;
        let mut t_lo = div_ceil(-d0, b);
        let mut t_hi = div_floor(bound - d0, b);
        if tight {
            if a > 0 {
                t_lo = t_lo.max(div_ceil(-bound - c0, a));
                t_hi = t_hi.min(div_floor(bound - c0, a));
            } else if a < 0 {
                t_lo = t_lo.max(div_ceil(c0 - bound, -a));
                t_hi = t_hi.min(div_floor(c0 + bound, -a));
            } else if c0.abs() > bound {
                continue;
            }
        }
        if t_lo > t_hi {
            continue;
        }
        let mut c = c0 + t_lo * a;
        let mut d = d0 + t_lo * b;
        let mut t = t_lo;
        while t <= t_hi {
            if tight || c.abs() <= bound {
                if d == 0 {
                    // (±1, 0) is canonically 1/0.
                    f(1, 0);
                } else {
                    f(c, d);
                }
            }
            c += a;
            d += b;
            t += 1;
        }
    }
}

/// BFS from `1/0` over the window of `bound`; stops once `target` is
/// labelled (the level below the target is always fully labelled first).
fn bfs_from_infinity(target: Option<(i64, i64)>, bound: i64) -> (Window, Option<u32>) {
    let mut win = Window::new(bound);
    win.try_insert(1, 0, 0);
    if target == Some((1, 0)) {
        return (win, Some(0));
    }
    let mut queue = VecDeque::new();
    queue.push_back((1i64, 0i64));
    while let Some((a, b)) = queue.pop_front() {
        let d = win.get(a, b).expect("queued vertices are labelled");
        let mut hit = None;
        for_each_neighbor(a, b, bound, |c, e| {
            if win.try_insert(c, e, d + 1) {
                if target == Some((c, e)) {
                    hit = Some(d + 1);
                }
                queue.push_back((c, e));
            }
        });
        if hit.is_some() {
            return (win, hit);
        }
    }
    (win, None)
}

fn distance_domain(target: Slope) -> Result<(), FareyError> {
    let ok = target == Slope::INFINITY
        || target == Slope::ZERO
        || (target.num >= 1 && 2 * target.num <= target.den);
    if ok {
        Ok(())
    } else {
        Err(FareyError::OutsideDistanceDomain { slope: target })
    }
}

fn distance_bound(target: Slope) -> i64 {
    (2 * target.den).max(2)
}

/// Geodesic distance in the Farey graph from `1/0` to `target`, for targets
/// in `(0, 1/2]` or in `{0/1, 1/0}`.
///
/// Searches the window of bound `2q` (where `q` is the target denominator),
/// which always contains the truncation path and hence a connecting route.
///
/// ```
/// use bridgepants::{farey, Slope};
/// assert_eq!(farey::farey_distance(Slope::new(2, 5).unwrap()), Ok(3));
/// assert_eq!(farey::farey_distance(Slope::INFINITY), Ok(0));
/// ```
pub fn farey_distance(target: Slope) -> Result<u64, FareyError> {
    distance_domain(target)?;
    if target == Slope::INFINITY {
        return Ok(0);
    }
    let bound = distance_bound(target);
    let (_, hit) = bfs_from_infinity(Some((target.num, target.den)), bound);
    let d = hit.expect("the truncation path keeps the target reachable inside the window");
    Ok(d as u64)
}

/// The deterministic geodesic from `1/0` to `target`: among all shortest
/// paths, at every step prefer the vertex with the smaller denominator and
/// then the smaller numerator.
///
/// ```
/// use bridgepants::{farey, Slope};
/// let path = farey::geodesic(Slope::new(2, 5).unwrap()).unwrap();
/// let labels: Vec<String> = path.vertices().iter().map(|v| v.to_string()).collect();
/// assert_eq!(labels, ["1/0", "0/1", "1/2", "2/5"]);
/// ```
pub fn geodesic(target: Slope) -> Result<FareyPath, FareyError> {
    distance_domain(target)?;
    if target == Slope::INFINITY {
        return FareyPath::new(vec![Slope::INFINITY]);
    }
    let bound = distance_bound(target);
    let (win, hit) = bfs_from_infinity(Some((target.num, target.den)), bound);
    let dist = hit.expect("the truncation path keeps the target reachable inside the window") as usize;

    // Collect, level by level from the target, exactly the vertices lying on
    // some geodesic: a vertex at distance l - 1 is on a geodesic iff it is
    // adjacent to an on-geodesic vertex at distance l.
    let mut levels: Vec<HashSet<(i64, i64)>> = vec![HashSet::new(); dist + 1];
    levels[dist].insert((target.num, target.den));
    for l in (1..=dist).rev() {
        let frontier: Vec<(i64, i64)> = levels[l].iter().copied().collect();
        for (a, b) in frontier {
            for_each_neighbor(a, b, bound, |c, e| {
                if win.get(c, e) == Some(l as u32 - 1) {
                    levels[l - 1].insert((c, e));
                }
            });
        }
    }
    debug_assert!(levels[0].contains(&(1, 0)));

    // Walk forward, taking the least (den, num) continuation at each level;
    // every member of a level extends to the target, so greedy choice gives
    // the lexicographically least geodesic under that key.
    let mut vertices = vec![Slope::INFINITY];
    let mut cur = (1i64, 0i64);
    for level in levels.iter().skip(1) {
        let mut best: Option<(i64, i64)> = None;
        for_each_neighbor(cur.0, cur.1, bound, |c, e| {
            if level.contains(&(c, e)) {
                let better = match best {
                    None => true,
                    Some((bc, bd)) => (e, c) < (bd, bc),
                };
                if better {
                    best = Some((c, e));
                }
            }
        });
        cur = best.expect("every geodesic level contains a continuation");
        vertices.push(Slope {
            num: cur.0,
            den: cur.1,
        });
    }
    FareyPath::new(vertices)
}

// ---------------------------------------------------------------------------
// Independent reference search. Adjacency here is found by scanning every
// candidate denominator and testing divisibility, sharing no code with the
// arithmetic-progression walk above; tests cross-check the two.
// ---------------------------------------------------------------------------

fn in_window(s: Slope, bound: i64) -> bool {
    s.num.abs() <= bound && s.den <= bound
}

fn oracle_neighbors(a: i64, b: i64, bound: i64, mut f: impl FnMut(i64, i64)) {
    if b == 0 {
        for c in -bound..=bound {
            f(c, 1);
        }
        return;
    }
    for d in 0..=bound {
        for s in [1i64, -1] {
            let t = a * d - s;
            if t % b == 0 {
                let c = t / b;
                if c.abs() <= bound {
                    if d == 0 {
                        f(1, 0);
                    } else {
                        f(c, d);
                    }
                }
            }
        }
    }
}

fn oracle_bfs(
    source: Slope,
    target: Option<Slope>,
    bound: i64,
) -> (HashMap<Slope, u64>, Option<u64>) {
    let mut dist: HashMap<Slope, u64> = HashMap::new();
    dist.insert(source, 0);
    if target == Some(source) {
        return (dist, Some(0));
    }
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        let mut hit = None;
        let mut insert = |c: i64, e: i64| {
            let v = Slope { num: c, den: e };
            if let std::collections::hash_map::Entry::Vacant(entry) = dist.entry(v) {
                entry.insert(d + 1);
                if target == Some(v) {
                    hit = Some(d + 1);
                }
                queue.push_back(v);
            }
        };
        oracle_neighbors(u.num, u.den, bound, &mut insert);
        if hit.is_some() {
            return (dist, hit);
        }
    }
    (dist, None)
}

/// Reference distance between two window vertices, by breadth-first search
/// with divisibility-scan adjacency. Independent of [`farey_distance`]; used
/// to cross-check it, and deliberately unoptimized.
pub fn bfs_distance_oracle(u: Slope, v: Slope, bound: i64) -> Result<u64, FareyError> {
    if bound < 1 {
        return Err(FareyError::NonPositiveBound { bound });
    }
    for s in [u, v] {
        if !in_window(s, bound) {
            return Err(FareyError::OutsideWindow { slope: s, bound });
        }
    }
    let (_, hit) = oracle_bfs(u, Some(v), bound);
    hit.ok_or(FareyError::Unreachable {
        from: u,
        to: v,
        bound,
    })
}

/// Reference distances from `source` to every vertex of the window,
/// computed with the same scan adjacency as [`bfs_distance_oracle`].
pub fn bfs_distances_oracle(
    source: Slope,
    bound: i64,
) -> Result<HashMap<Slope, u64>, FareyError> {
    if bound < 1 {
        return Err(FareyError::NonPositiveBound { bound });
    }
    if !in_window(source, bound) {
        return Err(FareyError::OutsideWindow {
            slope: source,
            bound,
        });
    }
    let (dist, _) = oracle_bfs(source, None, bound);
    Ok(dist)
}

/// Calls `f` on every window neighbor of `v` (production adjacency); used by
/// the complex views to enumerate edges without materializing the graph.
pub(crate) fn neighbors_within(v: Slope, bound: i64, f: impl FnMut(i64, i64)) {
    for_each_neighbor(v.num, v.den, bound, f);
}
