//! Hyperbolic volume bounds for 2-bridge knots.
//!
//! Two theorems bracket the volume of a hyperbolic 2-bridge knot complement
//! in terms of the constant `v3` (the volume of the regular ideal
//! 3-simplex): from the twist number `tw` of the reduced alternating
//! diagram,
//!
//! ```text
//! v3 * (tw - 2) <= vol < 10 * v3 * (tw - 1)
//! ```
//!
//! and from the pants distance `dp` of the (0,2)-splitting,
//!
//! ```text
//! v3 * (dp - 3) <= vol < 10 * v3 * (2*dp - 3)
//! ```
//!
//! Since `dp - 1 <= tw <= 2*(dp - 1)`, the twist interval always sits inside
//! the pants interval. `v3 = 3*Λ(π/3)` is computed here from the Lobachevsky
//! function `Λ(θ) = (1/2)·Σ_{m>=1} sin(2mθ)/m²` rather than hard-coded.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6, PI};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::complexity::pants_distance_02;
use crate::twobridge::TwoBridgeKnot;

/// Errors from the volume-bound formulas.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VolumeError {
    /// A single twist region (or none) belongs to a torus knot; the upper
    /// bound formula degenerates.
    #[error("twist-number volume bounds need tw >= 2, got {tw} (one twist region makes a torus knot)")]
    DegenerateTwist { tw: u64 },
    /// Hyperbolic 2-bridge knots have pants distance at least 2.
    #[error("pants distance {dp} < 2 cannot come from a hyperbolic 2-bridge knot")]
    DegeneratePantsDistance { dp: u64 },
    /// Volume bounds only apply to hyperbolic knots.
    #[error("{knot} is not hyperbolic: volume bounds are inapplicable")]
    NotHyperbolic { knot: TwoBridgeKnot },
}

/// Which theorem produced a bound interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundSource {
    Twist,
    Pants,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundSource::Twist => write!(f, "twist"),
            BoundSource::Pants => write!(f, "pants"),
        }
    }
}

/// A half-open volume interval `lower <= vol < upper` with `0 <= lower < upper`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeBounds {
    pub lower: f64,
    pub upper: f64,
    pub source: BoundSource,
}

impl VolumeBounds {
    fn new(lower: f64, upper: f64, source: BoundSource) -> Self {
        debug_assert!(lower.is_finite() && upper.is_finite());
        debug_assert!(0.0 <= lower && lower < upper);
        VolumeBounds {
            lower,
            upper,
            source,
        }
    }

    pub fn contains(&self, vol: f64) -> bool {
        self.lower <= vol && vol < self.upper
    }
}

/// Absolute tolerance of [`lobachevsky`].
pub const LOBACHEVSKY_TOL: f64 = 1e-12;

/// Per-series error budget. The ladder combination below accumulates at most
/// `sum_k (2/3)^k + 1 <= 4` budgets, so we spend `TOL/4` on each.
const SERIES_TOL: f64 = LOBACHEVSKY_TOL / 4.0;

/// Direct series for `θ` in `[π/6, π/2]`, truncated with a rigorous tail
/// bound: by Abel summation against the partial sine sums (whose magnitude
/// never exceeds `1/sin θ`), the tail after `M` terms is at most
/// `1/(2·sinθ·(M+1)²)`. Kahan summation keeps rounding error near machine
/// epsilon despite the ~10^6 terms.
fn lambda_series(theta: f64, tol: f64) -> f64 {
    let s = theta.sin();
    let m_max = ((1.0 / (2.0 * s * tol)).sqrt().ceil() as u64).max(1);
    let (sin_step, cos_step) = (2.0 * theta).sin_cos();
    let (mut sin_m, mut cos_m) = (sin_step, cos_step);
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for m in 1..=m_max {
        let term = sin_m / ((m * m) as f64);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        let next_sin = sin_m * cos_step + cos_m * sin_step;
        cos_m = cos_m * cos_step - sin_m * sin_step;
        sin_m = next_sin;
    }
    0.5 * sum
}

/// `Λ` on the reduced range `[0, π/2]`. Below `π/6` the series converges too
/// slowly for the tail bound, so the duplication identity
/// `Λ(θ) = Λ(2θ)/2 + Λ(π/2 - θ)` walks the argument up into the direct
/// range; level `k` carries weight `2^-k`, so its series tolerance may grow
/// by `(4/3)^k` while the total stays within budget.
fn lambda_reduced(theta: f64) -> f64 {
    debug_assert!((0.0..=FRAC_PI_2 * (1.0 + 1e-15)).contains(&theta) || theta.is_nan());
    if theta == 0.0 {
        return 0.0;
    }
    let mut acc = 0.0f64;
    let mut weight = 1.0f64;
    let mut theta = theta;
    let mut tol = SERIES_TOL;
    while theta < FRAC_PI_6 {
        acc += weight * lambda_series(FRAC_PI_2 - theta, tol);
        weight *= 0.5;
        theta *= 2.0;
        tol *= 4.0 / 3.0;
    }
    acc + weight * lambda_series(theta, tol)
}

/// The Lobachevsky function `Λ(θ) = (1/2)·Σ_{m>=1} sin(2mθ)/m²`, accurate to
/// `1e-12` absolute. Odd and π-periodic (up to the floating-point
/// representation of π, which limits accuracy for very large `|θ|`).
/// Non-finite input propagates NaN.
pub fn lobachevsky(theta: f64) -> f64 {
    if !theta.is_finite() {
        return f64::NAN;
    }
    let r = theta.rem_euclid(PI);
    if r <= FRAC_PI_2 {
        lambda_reduced(r)
    } else {
        -lambda_reduced(PI - r)
    }
}

static V3: OnceLock<f64> = OnceLock::new();

/// The volume of the regular ideal 3-simplex, `v3 = 3·Λ(π/3) ≈ 1.0149416`.
/// Computed once from the series and cached (recomputation is idempotent, so
/// racing initializations are harmless).
pub fn v3() -> f64 {
    *V3.get_or_init(|| 3.0 * lobachevsky(FRAC_PI_3))
}

/// Volume bounds from the twist number of a twist-reduced prime alternating
/// diagram: `max(0, v3·(tw - 2)) <= vol < 10·v3·(tw - 1)`.
///
/// `tw < 2` is rejected: one twist region belongs to a (non-hyperbolic)
/// torus knot and makes the upper bound vacuous.
pub fn bounds_from_twist(tw: u64) -> Result<VolumeBounds, VolumeError> {
    if tw < 2 {
        return Err(VolumeError::DegenerateTwist { tw });
    }
    let lower = (v3() * (tw as f64 - 2.0)).max(0.0);
    let upper = 10.0 * v3() * (tw as f64 - 1.0);
    Ok(VolumeBounds::new(lower, upper, BoundSource::Twist))
}

/// Volume bounds from the pants distance of the (0,2)-splitting:
/// `max(0, v3·(dp - 3)) <= vol < 10·v3·(2·dp - 3)`.
///
/// `dp < 2` is rejected: hyperbolic 2-bridge knots have pants distance at
/// least 2 (in fact at least 3).
pub fn bounds_from_pants(dp: u64) -> Result<VolumeBounds, VolumeError> {
    if dp < 2 {
        return Err(VolumeError::DegeneratePantsDistance { dp });
    }
    let lower = (v3() * (dp as f64 - 3.0)).max(0.0);
    let upper = 10.0 * v3() * (2.0 * dp as f64 - 3.0);
    Ok(VolumeBounds::new(lower, upper, BoundSource::Pants))
}

/// Bounds for a hyperbolic 2-bridge knot, from either theorem.
///
/// ```
/// use bridgepants::twobridge::normalize;
/// use bridgepants::volume::{bounds_for_knot, v3, BoundSource};
/// let fig8 = normalize(2, 5).unwrap();
/// let b = bounds_for_knot(&fig8, BoundSource::Twist).unwrap();
/// // vol(4_1) = 2*v3 lies inside.
/// assert!(b.contains(2.0 * v3()));
/// ```
pub fn bounds_for_knot(
    k: &TwoBridgeKnot,
    via: BoundSource,
) -> Result<VolumeBounds, VolumeError> {
    if !k.is_hyperbolic() {
        return Err(VolumeError::NotHyperbolic { knot: *k });
    }
    match via {
        BoundSource::Twist => {
            let tw = k
                .twist_number()
                .expect("hyperbolic knots are not the unknot");
            bounds_from_twist(tw)
        }
        BoundSource::Pants => bounds_from_pants(pants_distance_02(k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twobridge::normalize;

    // Reference decimal expansions, for anchoring the series far beyond the
    // contract tolerances.
    const V3_REF: f64 = 1.014941606409654;
    const LAMBDA_PI_6_REF: f64 = 0.507470803204827;

    #[test]
    fn series_zeros() {
        assert_eq!(lobachevsky(0.0), 0.0);
        assert!(lobachevsky(FRAC_PI_2).abs() < 1e-10);
        assert!(lobachevsky(PI).abs() < 1e-10);
        assert!(lobachevsky(-PI).abs() < 1e-10);
        assert!(lobachevsky(7.0 * PI).abs() < 1e-9);
    }

    #[test]
    fn series_oddness_and_periodicity() {
        for i in 0..100 {
            let theta = -3.0 * PI + 6.0 * PI * (i as f64) / 99.0;
            let v = lobachevsky(theta);
            assert!(
                (lobachevsky(-theta) + v).abs() < 1e-10,
                "oddness at {theta}"
            );
            assert!(
                (lobachevsky(theta + PI) - v).abs() < 1e-10,
                "periodicity at {theta}"
            );
        }
    }

    #[test]
    fn maximum_at_pi_over_six() {
        let peak = lobachevsky(FRAC_PI_6);
        assert!((peak - LAMBDA_PI_6_REF).abs() < 1e-9);
        for i in 0..=200 {
            let theta = PI * (i as f64) / 200.0;
            assert!(lobachevsky(theta) <= peak + 1e-12);
        }
    }

    #[test]
    fn ladder_agrees_with_small_angles() {
        // Values below π/6 go through the duplication ladder; check the
        // defining identity against direct evaluations.
        for &theta in &[1e-3, 0.05, 0.2, 0.4, FRAC_PI_6 * 0.999] {
            let lhs = lobachevsky(theta);
            let rhs = 0.5 * lobachevsky(2.0 * theta) + lobachevsky(FRAC_PI_2 - theta);
            assert!((lhs - rhs).abs() < 1e-11, "duplication identity at {theta}");
        }
        // Tiny arguments stay finite and near θ·(1 - ln 2θ).
        let tiny = lobachevsky(1e-9);
        assert!(tiny > 0.0 && tiny < 1e-7);
    }

    #[test]
    fn nan_propagation() {
        assert!(lobachevsky(f64::NAN).is_nan());
        assert!(lobachevsky(f64::INFINITY).is_nan());
    }

    #[test]
    fn v3_value_and_identity() {
        assert!((v3() - V3_REF).abs() < 1e-9);
        let lhs = 3.0 * lobachevsky(FRAC_PI_3);
        let rhs = 2.0 * lobachevsky(FRAC_PI_6);
        assert!((lhs - rhs).abs() < 1e-9);
        assert!((v3() - rhs).abs() < 1e-9);
    }

    #[test]
    fn twist_bounds() {
        let b = bounds_from_twist(2).unwrap();
        assert_eq!(b.lower, 0.0);
        assert!((b.upper - 10.0 * v3()).abs() < 1e-9);
        assert_eq!(b.source, BoundSource::Twist);

        let b = bounds_from_twist(3).unwrap();
        assert!((b.lower - v3()).abs() < 1e-9);
        assert!((b.upper - 20.0 * v3()).abs() < 1e-9);

        assert_eq!(bounds_from_twist(1), Err(VolumeError::DegenerateTwist { tw: 1 }));
        assert_eq!(bounds_from_twist(0), Err(VolumeError::DegenerateTwist { tw: 0 }));
    }

    #[test]
    fn pants_bounds() {
        let b = bounds_from_pants(3).unwrap();
        assert_eq!(b.lower, 0.0);
        assert!((b.upper - 30.0 * v3()).abs() < 1e-9);
        assert_eq!(b.source, BoundSource::Pants);

        let b = bounds_from_pants(4).unwrap();
        assert!((b.lower - v3()).abs() < 1e-9);
        assert!((b.upper - 50.0 * v3()).abs() < 1e-9);

        let b = bounds_from_pants(2).unwrap();
        assert_eq!(b.lower, 0.0);

        assert_eq!(
            bounds_from_pants(1),
            Err(VolumeError::DegeneratePantsDistance { dp: 1 })
        );
    }

    #[test]
    fn figure_eight_fixture() {
        let fig8 = normalize(2, 5).unwrap();
        let vol = 2.0 * v3();
        let tw = bounds_for_knot(&fig8, BoundSource::Twist).unwrap();
        let pa = bounds_for_knot(&fig8, BoundSource::Pants).unwrap();
        assert_eq!(tw.lower, 0.0);
        assert!((tw.upper - 10.0 * v3()).abs() < 1e-9);
        assert_eq!(pa.lower, 0.0);
        assert!((pa.upper - 30.0 * v3()).abs() < 1e-9);
        assert!(tw.contains(vol) && vol > tw.lower);
        assert!(pa.contains(vol) && vol > pa.lower);
    }

    #[test]
    fn non_hyperbolic_rejected() {
        let trefoil = normalize(1, 3).unwrap();
        assert!(matches!(
            bounds_for_knot(&trefoil, BoundSource::Twist),
            Err(VolumeError::NotHyperbolic { .. })
        ));
        assert!(matches!(
            bounds_for_knot(&TwoBridgeKnot::UNKNOT, BoundSource::Pants),
            Err(VolumeError::NotHyperbolic { .. })
        ));
    }

    #[test]
    fn twist_interval_nested_in_pants_interval() {
        for q in (5i64..=41).step_by(2) {
            for p in 2..q / 2 {
                let Ok(k) = normalize(p, q) else { continue };
                if !k.is_hyperbolic() || k.p() != p {
                    continue;
                }
                let tw = bounds_for_knot(&k, BoundSource::Twist).unwrap();
                let pa = bounds_for_knot(&k, BoundSource::Pants).unwrap();
                assert!(pa.lower <= tw.lower, "lower containment for {p}/{q}");
                assert!(tw.upper <= pa.upper, "upper containment for {p}/{q}");
                assert!(tw.lower < tw.upper && pa.lower < pa.upper);
            }
        }
    }
}
