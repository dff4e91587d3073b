//! Exhaustive sweeps over bounded windows of the Farey graph: continued
//! fraction round trips, path validity, oracle agreement, isometry
//! invariance, and the distance/CF-length inequality.

use std::collections::BTreeSet;
use std::thread;

use bridgepants::farey::{
    bfs_distance_oracle, bfs_distances_oracle, cf_expand, cf_value, farey_distance, geodesic,
    is_farey_edge, truncation_path, ContinuedFraction, Slope,
};

fn slope(n: i64, d: i64) -> Slope {
    Slope::new(n, d).unwrap()
}

/// All reduced slopes with `|num| <= bound`, `0 <= den <= bound`.
fn window_slopes(bound: i64) -> Vec<Slope> {
    let mut set = BTreeSet::new();
    set.insert(Slope::INFINITY);
    for q in 1..=bound {
        for p in -bound..=bound {
            set.insert(slope(p, q));
        }
    }
    set.into_iter().collect()
}

/// All reduced `p/q` in `(0, 1/2]` with `q <= max_q`.
fn domain_slopes(max_q: i64) -> Vec<Slope> {
    let mut out = Vec::new();
    for q in 2..=max_q {
        for p in 1..=q / 2 {
            let s = slope(p, q);
            if s.den() == q {
                out.push(s);
            }
        }
    }
    out
}

#[test]
fn edge_symmetry_within_window_30() {
    let vs = window_slopes(30);
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            assert_eq!(is_farey_edge(u, v), is_farey_edge(v, u), "{u} vs {v}");
        }
    }
}

#[test]
fn gl2z_maps_preserve_edges() {
    let neg = |s: Slope| slope(-s.num(), s.den());
    let translate = |s: Slope, n: i64| slope(s.num() + n * s.den(), s.den());
    let vs = window_slopes(20);
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            let e = is_farey_edge(u, v);
            assert_eq!(is_farey_edge(neg(u), neg(v)), e, "negation of {u}, {v}");
            for n in [-3, -1, 1, 2, 3] {
                assert_eq!(
                    is_farey_edge(translate(u, n), translate(v, n)),
                    e,
                    "translation by {n} of {u}, {v}"
                );
            }
        }
    }
}

#[test]
fn gl2z_maps_preserve_oracle_distances() {
    // Negation fixes 1/0, preserves edges, and maps the window onto itself,
    // so even the window-truncated BFS distances must match exactly.
    let dist = bfs_distances_oracle(Slope::INFINITY, 60).unwrap();
    for (&v, &d) in &dist {
        let neg = slope(-v.num(), v.den());
        assert_eq!(dist.get(&neg), Some(&d), "negation at {v}");
    }

    // Translation fixes 1/0 but shifts numerators, so compare within one
    // window wide enough to contain true geodesics for both sides.
    let wide = bfs_distances_oracle(Slope::INFINITY, 240).unwrap();
    for v in domain_slopes(30) {
        let d = wide[&v];
        for n in [-2, -1, 1, 2, 3] {
            let t = slope(v.num() + n * v.den(), v.den());
            assert_eq!(wide[&t], d, "translation by {n} at {v}");
        }
    }
}

#[test]
fn cf_round_trip_q200() {
    for s in domain_slopes(200) {
        let cf = cf_expand(s).unwrap();
        assert!(cf.is_canonical(), "{s} -> {cf}");
        assert!(*cf.coefficients().first().unwrap() >= 2, "{s} -> {cf}");
        assert_eq!(cf_value(&cf).unwrap(), s);
    }
}

/// Per-slope checks for the big sweep: truncation path shape, geodesic
/// minimality, the `n/2 <= d - 1 <= n` inequality, and shortcut edges at
/// every unit coefficient.
fn check_slope(s: Slope) {
    let cf = cf_expand(s).unwrap();
    let n = cf.len() as u64;

    let tp = truncation_path(&cf).unwrap();
    assert_eq!(tp.first(), Slope::INFINITY, "{s}");
    assert_eq!(tp.last(), s, "{s}");
    assert_eq!(tp.edge_count() as u64, n + 1, "{s}");

    let d = farey_distance(s).unwrap();
    let g = geodesic(s).unwrap();
    assert_eq!(g.first(), Slope::INFINITY, "{s}");
    assert_eq!(g.last(), s, "{s}");
    assert_eq!(g.edge_count() as u64, d, "{s}");
    assert!(g.edge_count() <= tp.edge_count(), "{s}");

    assert!(d >= 2, "{s}: slopes in (0, 1/2] are not Farey-adjacent to 1/0");
    assert!(d - 1 <= n, "{s}: d = {d}, n = {n}");
    assert!(n <= 2 * (d - 1), "{s}: d = {d}, n = {n}");

    // A unit coefficient a_j joins the (j-2)-nd and j-th convergents; the
    // empty prefix denotes the 0th convergent 0/1 (j = 1 cannot occur in
    // this domain since a_1 >= 2).
    let coeffs = cf.coefficients();
    for (idx, &a) in coeffs.iter().enumerate() {
        if a != 1 {
            continue;
        }
        let j = idx + 1;
        let before = if j == 2 {
            Slope::ZERO
        } else {
            cf_value(&ContinuedFraction::new(coeffs[..j - 2].to_vec()).unwrap()).unwrap()
        };
        let at = cf_value(&ContinuedFraction::new(coeffs[..j].to_vec()).unwrap()).unwrap();
        assert!(is_farey_edge(before, at), "{s}: shortcut at j = {j}");
    }
}

#[test]
fn paths_and_distance_inequality_q200() {
    let workers = thread::available_parallelism().map_or(4, |n| n.get()).min(8);
    thread::scope(|scope| {
        for t in 0..workers {
            scope.spawn(move || {
                for q in ((2 + t as i64)..=200).step_by(workers) {
                    for p in 1..=q / 2 {
                        let s = slope(p, q);
                        if s.den() == q {
                            check_slope(s);
                        }
                    }
                }
            });
        }
    });
}

#[test]
fn oracle_agreement_q50() {
    for q in 2..=50i64 {
        let d2 = bfs_distances_oracle(Slope::INFINITY, 2 * q).unwrap();
        let d4 = bfs_distances_oracle(Slope::INFINITY, 4 * q).unwrap();
        for p in 1..=q / 2 {
            let s = slope(p, q);
            if s.den() != q {
                continue;
            }
            let d = farey_distance(s).unwrap();
            assert_eq!(d2[&s], d, "bound 2q at {s}");
            assert_eq!(d4[&s], d, "bound 4q at {s}");
        }
    }
}

#[test]
fn pairwise_oracle_spot_checks() {
    assert_eq!(
        bfs_distance_oracle(Slope::INFINITY, slope(3, 11), 22).unwrap(),
        3
    );
    assert_eq!(
        bfs_distance_oracle(Slope::INFINITY, slope(2, 5), 10).unwrap(),
        3
    );
    assert_eq!(bfs_distance_oracle(Slope::ZERO, slope(1, 2), 10).unwrap(), 1);
    assert_eq!(bfs_distance_oracle(slope(1, 2), slope(1, 2), 4).unwrap(), 0);
    assert_eq!(
        bfs_distance_oracle(slope(1, 3), slope(2, 3), 12).unwrap(),
        2
    );
}
