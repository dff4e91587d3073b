//! Distances and normalized complexities of bridge splittings.
//!
//! A (g, b) bridge splitting carries two distance-style invariants, the
//! dual-curve distance `D` and the pants distance `D_pants`, both bounded
//! below by `g + b - 1`. Subtracting that bound normalizes them to the
//! *bridge complexity* `B = D - g - b + 1` and *pants complexity*
//! `B_pants = D_pants - g - b + 1` of the splitting.
//!
//! For the standard (0,2)-splitting of a 2-bridge knot both distances are
//! computable: every dual curve meets every other in at most two points, so
//! `D = 1` identically, while `D_pants` is the Farey-graph distance from
//! `1/0` to the normal-form slope. Knot-level complexities (infima over all
//! splittings and stabilizations) are reported only where a closed form is
//! known; everything else is marked open, with the (0,2) value kept as an
//! explicit upper bound.

use std::fmt;

use thiserror::Error;

use crate::arith::gcd;
use crate::farey;
use crate::twobridge::{self, TwoBridgeKnot};

/// Errors from splitting arithmetic and knot classification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexityError {
    /// Pants decompositions of the splitting surface need at least one
    /// curve, i.e. `3g + 2b - 3 >= 1`.
    #[error("a ({genus}, {bridges}) splitting surface carries no pants decomposition (needs 3g + 2b - 3 >= 1)")]
    InvalidSignature { genus: u64, bridges: u64 },
    /// Distances below `g + b - 1` cannot come from a genuine splitting.
    #[error("distance {distance} is below the lower bound g + b - 1 = {lower} for a ({genus}, {bridges}) splitting")]
    DistanceBelowBound {
        distance: u64,
        lower: u64,
        genus: u64,
        bridges: u64,
    },
    /// Torus knot parameters must satisfy `2 <= p < q` and `gcd(p, q) = 1`.
    #[error("torus knot parameters need 2 <= p < q with gcd(p, q) = 1, got ({p}, {q})")]
    InvalidTorus { p: u64, q: u64 },
}

/// The type `(g, b)` of a bridge splitting: genus of the splitting surface
/// and number of bridges. Valid when a pants decomposition exists, i.e.
/// `3g + 2b - 3 >= 1` (and `b >= 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplittingSignature {
    genus: u64,
    bridges: u64,
}

impl SplittingSignature {
    /// The (0,2)-splitting signature carried by 2-bridge knots.
    pub const ZERO_TWO: SplittingSignature = SplittingSignature {
        genus: 0,
        bridges: 2,
    };

    pub fn new(genus: u64, bridges: u64) -> Result<Self, ComplexityError> {
        if bridges >= 1 && 3 * genus + 2 * bridges >= 4 {
            Ok(SplittingSignature { genus, bridges })
        } else {
            Err(ComplexityError::InvalidSignature { genus, bridges })
        }
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn bridges(&self) -> u64 {
        self.bridges
    }

    /// Number of curves in a pants decomposition of the punctured splitting
    /// surface: `3g + 2b - 3`.
    pub fn curve_count(&self) -> u64 {
        3 * self.genus + 2 * self.bridges - 3
    }
}

impl fmt::Display for SplittingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.genus, self.bridges)
    }
}

/// Universal lower bound for both splitting distances: `g + b - 1`.
pub fn distance_lower_bound(sig: SplittingSignature) -> u64 {
    sig.genus + sig.bridges - 1
}

/// Normalizes a splitting distance to a complexity: `B = D - g - b + 1`.
///
/// Distances below `g + b - 1` are rejected as inconsistent.
///
/// ```
/// use bridgepants::complexity::{complexity_from_distance, SplittingSignature};
/// let s03 = SplittingSignature::new(0, 3).unwrap();
/// let s11 = SplittingSignature::new(1, 1).unwrap();
/// assert_eq!(complexity_from_distance(5, s03), Ok(3));
/// assert_eq!(complexity_from_distance(3, s11), Ok(2));
/// ```
pub fn complexity_from_distance(
    distance: u64,
    sig: SplittingSignature,
) -> Result<u64, ComplexityError> {
    let lower = distance_lower_bound(sig);
    if distance < lower {
        return Err(ComplexityError::DistanceBelowBound {
            distance,
            lower,
            genus: sig.genus,
            bridges: sig.bridges,
        });
    }
    Ok(distance - lower)
}

/// Pants distance of the standard (0,2)-splitting: the Farey-graph distance
/// from `1/0` to the normal-form slope. The unknot's splitting has distance
/// 1 (its defining curves are one pants move apart), which coincides with
/// the Farey distance from `1/0` to `0/1`.
pub fn pants_distance_02(k: &TwoBridgeKnot) -> u64 {
    farey::farey_distance(k.slope()).expect("normal-form slopes lie in the distance domain")
}

/// Dual-curve distance of the standard (0,2)-splitting. Any two essential
/// simple closed curves on the 4-punctured bridge sphere meet in at most two
/// points, so every pair of dual curves is distance one apart: the value is
/// 1 for every 2-bridge knot (the unknot's splitting included).
pub fn dual_distance_02(_k: &TwoBridgeKnot) -> u64 {
    1
}

/// A value of the classification: either pinned down with a short reason, or
/// explicitly open.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Known {
    Value { value: u64, reason: &'static str },
    Open { reason: &'static str },
}

impl Known {
    fn value(v: u64, reason: &'static str) -> Known {
        Known::Value { value: v, reason }
    }

    fn open(reason: &'static str) -> Known {
        Known::Open { reason }
    }

    pub fn get(&self) -> Option<u64> {
        match self {
            Known::Value { value, .. } => Some(*value),
            Known::Open { .. } => None,
        }
    }

    pub fn reason(&self) -> &'static str {
        match self {
            Known::Value { reason, .. } | Known::Open { reason } => reason,
        }
    }
}

/// How a knot was described to [`known_complexity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnotDescription {
    Unknot,
    TwoBridge(TwoBridgeKnot),
    /// The (p, q) torus knot, `2 <= p < q`, `gcd(p, q) = 1`.
    Torus { p: u64, q: u64 },
}

/// Splitting-level and knot-level complexity data for a classified knot.
///
/// Splitting-level fields describe the standard (0,2)-splitting when the
/// knot has one (`signature` is then present); knot-level fields are the
/// invariants of the knot itself and are filled only from closed forms.
/// Whenever distance and complexity are both known they satisfy
/// `B = D - g - b + 1`, and `D <= D_pants`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityReport {
    /// Signature of the splitting described by the splitting-level fields.
    pub signature: Option<SplittingSignature>,
    /// Dual-curve distance `D` of that splitting.
    pub distance: Known,
    /// Pants distance `D_pants` of that splitting.
    pub pants_distance: Known,
    /// Bridge complexity `B` of the splitting.
    pub splitting_bridge_complexity: Known,
    /// Pants complexity `B_pants` of the splitting.
    pub splitting_pants_complexity: Known,
    /// Bridge complexity of the knot (infimum over stabilized splittings).
    pub knot_bridge_complexity: Known,
    /// Pants complexity of the knot.
    pub knot_pants_complexity: Known,
    /// When the knot-level pants complexity is open, the (0,2)-splitting
    /// still bounds it: `B_pants(K) <= D_pants - 1`.
    pub knot_pants_upper_bound: Option<u64>,
}

impl ComplexityReport {
    fn check(self) -> Self {
        if let Some(sig) = self.signature {
            let lower = distance_lower_bound(sig);
            for (d, b) in [
                (&self.distance, &self.splitting_bridge_complexity),
                (&self.pants_distance, &self.splitting_pants_complexity),
            ] {
                if let (Some(d), Some(b)) = (d.get(), b.get()) {
                    debug_assert_eq!(b, d - lower);
                }
            }
        }
        if let (Some(d), Some(dp)) = (self.distance.get(), self.pants_distance.get()) {
            debug_assert!(d <= dp);
        }
        self
    }
}

const R_DUAL_DISTANCE: &str =
    "dual curves on the 4-punctured bridge sphere are pairwise distance one";
const R_PANTS_DISTANCE: &str = "Farey-graph distance from 1/0 to the normal-form slope";
const R_UNKNOT_PANTS_DISTANCE: &str =
    "the defining curves of the unknot's (0,2)-splitting are one pants move apart";
const R_NORMALIZED: &str = "normalized distance: B = D - g - b + 1";
const R_TWO_BRIDGE_ZERO: &str = "a knot has bridge complexity 0 exactly when it is 2-bridge";
const R_UNKNOT_ZERO: &str = "a knot has pants complexity 0 exactly when it is the unknot";
const R_TWO_STRAND_TORUS: &str =
    "pants complexity 1 characterizes the 2-strand torus knots";
const R_PANTS_OPEN: &str =
    "open: no closed form; bounded above by the (0,2)-splitting value";
const R_TORUS_BRIDGE: &str =
    "torus knots on three or more strands have bridge complexity 2";
const R_TORUS_NO_02: &str = "no (0,2)-splitting: the knot is not 2-bridge";

/// Fills in every complexity value with a known closed form for the
/// described knot, marking the rest open.
///
/// ```
/// use bridgepants::complexity::{known_complexity, KnotDescription};
/// let report = known_complexity(KnotDescription::Torus { p: 3, q: 4 }).unwrap();
/// assert_eq!(report.knot_bridge_complexity.get(), Some(2));
/// ```
pub fn known_complexity(desc: KnotDescription) -> Result<ComplexityReport, ComplexityError> {
    match desc {
        KnotDescription::Unknot => Ok(two_bridge_report(&TwoBridgeKnot::UNKNOT)),
        KnotDescription::TwoBridge(k) => Ok(two_bridge_report(&k)),
        KnotDescription::Torus { p, q } => {
            if !(2 <= p && p < q && gcd(p, q) == 1) {
                return Err(ComplexityError::InvalidTorus { p, q });
            }
            if p == 2 {
                // The 2-strand torus knot is the 2-bridge knot of slope 1/q.
                let k = twobridge::normalize(1, q as i64)
                    .expect("1/q with q odd is a valid 2-bridge fraction");
                return Ok(two_bridge_report(&k));
            }
            Ok(ComplexityReport {
                signature: None,
                distance: Known::open(R_TORUS_NO_02),
                pants_distance: Known::open(R_TORUS_NO_02),
                splitting_bridge_complexity: Known::open(R_TORUS_NO_02),
                splitting_pants_complexity: Known::open(R_TORUS_NO_02),
                knot_bridge_complexity: Known::value(2, R_TORUS_BRIDGE),
                knot_pants_complexity: Known::open("open: no closed form"),
                knot_pants_upper_bound: None,
            }
            .check())
        }
    }
}

fn two_bridge_report(k: &TwoBridgeKnot) -> ComplexityReport {
    let sig = SplittingSignature::ZERO_TWO;
    let d = dual_distance_02(k);
    let dp = pants_distance_02(k);
    let b = complexity_from_distance(d, sig).expect("D = 1 meets the (0,2) lower bound");
    let bp = complexity_from_distance(dp, sig).expect("D_pants >= 1 for every slope");
    let dp_reason = if k.is_unknot() {
        R_UNKNOT_PANTS_DISTANCE
    } else {
        R_PANTS_DISTANCE
    };
    let (knot_pants, upper) = if k.is_unknot() {
        (Known::value(0, R_UNKNOT_ZERO), None)
    } else if k.is_torus_two_bridge() {
        (Known::value(1, R_TWO_STRAND_TORUS), None)
    } else {
        (Known::open(R_PANTS_OPEN), Some(bp))
    };
    ComplexityReport {
        signature: Some(sig),
        distance: Known::value(d, R_DUAL_DISTANCE),
        pants_distance: Known::value(dp, dp_reason),
        splitting_bridge_complexity: Known::value(b, R_NORMALIZED),
        splitting_pants_complexity: Known::value(bp, R_NORMALIZED),
        knot_bridge_complexity: Known::value(0, R_TWO_BRIDGE_ZERO),
        knot_pants_complexity: knot_pants,
        knot_pants_upper_bound: upper,
    }
    .check()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(p: i64, q: i64) -> TwoBridgeKnot {
        twobridge::normalize(p, q).unwrap()
    }

    #[test]
    fn signatures() {
        assert!(SplittingSignature::new(0, 2).is_ok());
        assert!(SplittingSignature::new(1, 1).is_ok());
        assert!(SplittingSignature::new(0, 3).is_ok());
        assert_eq!(
            SplittingSignature::new(0, 1),
            Err(ComplexityError::InvalidSignature {
                genus: 0,
                bridges: 1
            })
        );
        assert_eq!(
            SplittingSignature::new(5, 0),
            Err(ComplexityError::InvalidSignature {
                genus: 5,
                bridges: 0
            })
        );
        assert_eq!(SplittingSignature::ZERO_TWO.curve_count(), 1);
        assert_eq!(SplittingSignature::new(1, 1).unwrap().curve_count(), 2);
        assert_eq!(SplittingSignature::ZERO_TWO.to_string(), "(0, 2)");
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(distance_lower_bound(SplittingSignature::ZERO_TWO), 1);
        assert_eq!(
            distance_lower_bound(SplittingSignature::new(1, 1).unwrap()),
            1
        );
        assert_eq!(
            distance_lower_bound(SplittingSignature::new(2, 3).unwrap()),
            4
        );
    }

    #[test]
    fn complexity_arithmetic() {
        let s02 = SplittingSignature::ZERO_TWO;
        let s03 = SplittingSignature::new(0, 3).unwrap();
        let s11 = SplittingSignature::new(1, 1).unwrap();
        assert_eq!(complexity_from_distance(1, s02), Ok(0));
        assert_eq!(complexity_from_distance(5, s03), Ok(3));
        assert_eq!(complexity_from_distance(3, s11), Ok(2));
        assert_eq!(
            complexity_from_distance(1, s03),
            Err(ComplexityError::DistanceBelowBound {
                distance: 1,
                lower: 2,
                genus: 0,
                bridges: 3
            })
        );
    }

    #[test]
    fn pants_distances() {
        assert_eq!(pants_distance_02(&k(2, 5)), 3);
        assert_eq!(pants_distance_02(&k(3, 11)), 3);
        assert_eq!(pants_distance_02(&k(1, 3)), 2);
        assert_eq!(pants_distance_02(&TwoBridgeKnot::UNKNOT), 1);
    }

    #[test]
    fn dual_distances() {
        assert_eq!(dual_distance_02(&k(2, 5)), 1);
        assert_eq!(dual_distance_02(&k(1, 3)), 1);
        assert_eq!(dual_distance_02(&k(5, 17)), 1);
    }

    #[test]
    fn unknot_report() {
        let r = known_complexity(KnotDescription::Unknot).unwrap();
        assert_eq!(r.signature, Some(SplittingSignature::ZERO_TWO));
        assert_eq!(r.distance.get(), Some(1));
        assert_eq!(r.pants_distance.get(), Some(1));
        assert_eq!(r.splitting_bridge_complexity.get(), Some(0));
        assert_eq!(r.splitting_pants_complexity.get(), Some(0));
        assert_eq!(r.knot_bridge_complexity.get(), Some(0));
        assert_eq!(r.knot_pants_complexity.get(), Some(0));
        assert_eq!(r.knot_pants_upper_bound, None);
    }

    #[test]
    fn figure_eight_report() {
        let r = known_complexity(KnotDescription::TwoBridge(k(2, 5))).unwrap();
        assert_eq!(r.distance.get(), Some(1));
        assert_eq!(r.pants_distance.get(), Some(3));
        assert_eq!(r.splitting_bridge_complexity.get(), Some(0));
        assert_eq!(r.splitting_pants_complexity.get(), Some(2));
        assert_eq!(r.knot_bridge_complexity.get(), Some(0));
        assert_eq!(r.knot_pants_complexity.get(), None);
        assert_eq!(r.knot_pants_upper_bound, Some(2));
    }

    #[test]
    fn trefoil_report() {
        // The trefoil is the 2-strand torus knot K(1/3): pants complexity 1.
        let r = known_complexity(KnotDescription::TwoBridge(k(1, 3))).unwrap();
        assert_eq!(r.knot_pants_complexity.get(), Some(1));
        assert_eq!(r.pants_distance.get(), Some(2));
        let via_torus = known_complexity(KnotDescription::Torus { p: 2, q: 3 }).unwrap();
        assert_eq!(via_torus, r);
    }

    #[test]
    fn torus_report() {
        let r = known_complexity(KnotDescription::Torus { p: 3, q: 4 }).unwrap();
        assert_eq!(r.signature, None);
        assert_eq!(r.knot_bridge_complexity.get(), Some(2));
        assert_eq!(r.knot_pants_complexity.get(), None);
        assert_eq!(r.distance.get(), None);
        assert_eq!(
            known_complexity(KnotDescription::Torus { p: 1, q: 4 }),
            Err(ComplexityError::InvalidTorus { p: 1, q: 4 })
        );
        assert_eq!(
            known_complexity(KnotDescription::Torus { p: 4, q: 3 }),
            Err(ComplexityError::InvalidTorus { p: 4, q: 3 })
        );
        assert_eq!(
            known_complexity(KnotDescription::Torus { p: 2, q: 4 }),
            Err(ComplexityError::InvalidTorus { p: 2, q: 4 })
        );
    }

    #[test]
    fn schubert_equivalent_inputs_report_identically() {
        let a = known_complexity(KnotDescription::TwoBridge(k(3, 11))).unwrap();
        let b = known_complexity(KnotDescription::TwoBridge(k(4, 11))).unwrap();
        assert_eq!(a, b);
    }
}
