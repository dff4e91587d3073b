//! Report structures serialized by the CLI.
//!
//! Field layout is part of the tool's contract: reports are validated
//! against `schema/report.schema.json` and golden outputs are compared
//! byte-for-byte, so field names and order must stay stable.

use serde::Serialize;

use bridgepants::complexity::{known_complexity, KnotDescription};
use bridgepants::twobridge::TwoBridgeKnot;
use bridgepants::volume::{bounds_for_knot, BoundSource, VolumeBounds, VolumeError};

/// Schubert normal form of the queried slope.
#[derive(Serialize)]
pub struct NormalForm {
    p: i64,
    q: i64,
    mirrored: bool,
}

/// The double branched cover `L(q, p)`.
#[derive(Serialize)]
pub struct LensSpaceOut {
    q: i64,
    p: i64,
}

/// Volume bounds of a full report: both families, each as `[lower, upper)`.
#[derive(Serialize)]
pub struct VolumeBoundsOut {
    twist: [f64; 2],
    pants: [f64; 2],
}

/// The full invariant report. Inapplicable fields are serialized as `null`
/// next to a `<field>_reason` explaining why.
#[derive(Serialize)]
pub struct Report {
    input: String,
    normal_form: NormalForm,
    cf: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cf_reason: Option<String>,
    twist_number: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    twist_number_reason: Option<String>,
    pants_distance: u64,
    dual_distance: u64,
    #[serde(rename = "B_sigma")]
    b_sigma: u64,
    #[serde(rename = "BP_sigma_upper_bound")]
    bp_sigma_upper_bound: u64,
    #[serde(rename = "known_B")]
    known_b: u64,
    #[serde(rename = "known_BP")]
    known_bp: Option<u64>,
    #[serde(rename = "known_BP_reason", skip_serializing_if = "Option::is_none")]
    known_bp_reason: Option<String>,
    lens_space: LensSpaceOut,
    hyperbolic: bool,
    volume_bounds: Option<VolumeBoundsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    volume_bounds_reason: Option<String>,
}

/// A successful batch line: the report plus its 1-based line number.
#[derive(Serialize)]
pub struct BatchReport {
    pub line: usize,
    #[serde(flatten)]
    pub report: Report,
}

/// A failed batch line.
#[derive(Serialize)]
pub struct BatchError {
    pub line: usize,
    pub error: String,
}

/// Rounds to 12 significant digits, the serialization precision for floats.
fn round12(x: f64) -> f64 {
    format!("{x:.11e}").parse().expect("rounded floats reparse")
}

fn interval(bounds: VolumeBounds) -> [f64; 2] {
    [round12(bounds.lower), round12(bounds.upper)]
}

fn normal_form(knot: &TwoBridgeKnot) -> NormalForm {
    NormalForm {
        p: knot.p(),
        q: knot.q(),
        mirrored: knot.mirrored(),
    }
}

/// Assembles the full report for a normalized knot.
pub fn build_report(input: &str, knot: &TwoBridgeKnot) -> Report {
    let complexity = known_complexity(KnotDescription::TwoBridge(*knot))
        .expect("2-bridge descriptions always classify");
    let (cf, cf_reason) = match knot.tangle_diagram() {
        Ok(cf) => (Some(cf.coefficients().to_vec()), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let twist_number = cf.as_ref().map(|coeffs| coeffs.len() as u64);
    let (volume_bounds, volume_bounds_reason) = if knot.is_hyperbolic() {
        let twist = bounds_for_knot(knot, BoundSource::Twist)
            .expect("hyperbolic knots have twist bounds");
        let pants = bounds_for_knot(knot, BoundSource::Pants)
            .expect("hyperbolic knots have pants bounds");
        (
            Some(VolumeBoundsOut {
                twist: interval(twist),
                pants: interval(pants),
            }),
            None,
        )
    } else {
        (
            None,
            Some(VolumeError::NotHyperbolic { knot: *knot }.to_string()),
        )
    };
    let known_bp = complexity.knot_pants_complexity.get();
    let known_bp_reason =
        known_bp.is_none().then(|| complexity.knot_pants_complexity.reason().to_string());
    let cover = knot.double_branched_cover();
    Report {
        input: input.trim().to_string(),
        normal_form: normal_form(knot),
        twist_number_reason: cf_reason.clone(),
        cf_reason,
        cf,
        twist_number,
        pants_distance: complexity
            .pants_distance
            .get()
            .expect("the (0,2)-splitting has a pants distance"),
        dual_distance: complexity
            .distance
            .get()
            .expect("the (0,2)-splitting has a dual distance"),
        b_sigma: complexity
            .splitting_bridge_complexity
            .get()
            .expect("splitting bridge complexity is always known"),
        bp_sigma_upper_bound: complexity
            .splitting_pants_complexity
            .get()
            .expect("splitting pants complexity is always known"),
        known_b: complexity
            .knot_bridge_complexity
            .get()
            .expect("2-bridge knots have bridge complexity 0"),
        known_bp,
        known_bp_reason,
        lens_space: LensSpaceOut {
            q: cover.q,
            p: cover.p,
        },
        hyperbolic: knot.is_hyperbolic(),
        volume_bounds,
        volume_bounds_reason,
    }
}

/// Output of `bridgepants cf`.
#[derive(Serialize)]
pub struct CfOutput {
    input: String,
    normal_form: NormalForm,
    cf: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cf_reason: Option<String>,
}

pub fn cf_output(input: &str, knot: &TwoBridgeKnot) -> CfOutput {
    let (cf, cf_reason) = match knot.tangle_diagram() {
        Ok(cf) => (Some(cf.coefficients().to_vec()), None),
        Err(e) => (None, Some(e.to_string())),
    };
    CfOutput {
        input: input.trim().to_string(),
        normal_form: normal_form(knot),
        cf,
        cf_reason,
    }
}

/// Output of `bridgepants distance`.
#[derive(Serialize)]
pub struct DistanceOutput {
    input: String,
    normal_form: NormalForm,
    pants_distance: u64,
    dual_distance: u64,
}

pub fn distance_output(input: &str, knot: &TwoBridgeKnot) -> DistanceOutput {
    DistanceOutput {
        input: input.trim().to_string(),
        normal_form: normal_form(knot),
        pants_distance: bridgepants::complexity::pants_distance_02(knot),
        dual_distance: bridgepants::complexity::dual_distance_02(knot),
    }
}

/// Output of `bridgepants bounds`; only the requested families are present.
#[derive(Serialize)]
pub struct BoundsOutput {
    input: String,
    normal_form: NormalForm,
    hyperbolic: bool,
    volume_bounds: PartialVolumeBounds,
}

#[derive(Serialize)]
pub struct PartialVolumeBounds {
    #[serde(skip_serializing_if = "Option::is_none")]
    twist: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pants: Option<[f64; 2]>,
}

/// Builds the `bounds` report, failing for non-hyperbolic knots (the caller
/// maps that onto the dedicated exit code).
pub fn bounds_output(
    input: &str,
    knot: &TwoBridgeKnot,
    via: Option<BoundSource>,
) -> Result<BoundsOutput, VolumeError> {
    let wanted = |source: BoundSource| via.is_none() || via == Some(source);
    let family = |source: BoundSource| -> Result<Option<[f64; 2]>, VolumeError> {
        if wanted(source) {
            Ok(Some(interval(bounds_for_knot(knot, source)?)))
        } else {
            Ok(None)
        }
    };
    Ok(BoundsOutput {
        input: input.trim().to_string(),
        normal_form: normal_form(knot),
        hyperbolic: knot.is_hyperbolic(),
        volume_bounds: PartialVolumeBounds {
            twist: family(BoundSource::Twist)?,
            pants: family(BoundSource::Pants)?,
        },
    })
}

/// Output of `bridgepants cover`.
#[derive(Serialize)]
pub struct CoverOutput {
    input: String,
    normal_form: NormalForm,
    lens_space: LensSpaceOut,
}

pub fn cover_output(input: &str, knot: &TwoBridgeKnot) -> CoverOutput {
    let cover = knot.double_branched_cover();
    CoverOutput {
        input: input.trim().to_string(),
        normal_form: normal_form(knot),
        lens_space: LensSpaceOut {
            q: cover.q,
            p: cover.p,
        },
    }
}
