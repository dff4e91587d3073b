//! Parsing of slope queries and the configurable size cap.

use std::env;

use bridgepants::twobridge::{normalize, TwoBridgeError, TwoBridgeKnot};
use bridgepants::Slope;

use crate::CliError;

/// Environment variable raising (or lowering) the cap on graph bounds and
/// query denominators.
pub const MAX_BOUND_ENV: &str = "BRIDGEPANTS_MAX_BOUND";

/// Default cap. Farey windows grow quadratically in the bound, so demands
/// beyond this are refused rather than left to thrash.
pub const DEFAULT_MAX_BOUND: i64 = 500;

/// The active cap: `BRIDGEPANTS_MAX_BOUND` when set, the default otherwise.
pub fn max_bound() -> Result<i64, CliError> {
    match env::var(MAX_BOUND_ENV) {
        Err(env::VarError::NotPresent) => Ok(DEFAULT_MAX_BOUND),
        Err(e) => Err(CliError::Parse(format!("{MAX_BOUND_ENV}: {e}"))),
        Ok(text) => text
            .trim()
            .parse::<i64>()
            .ok()
            .filter(|&cap| cap >= 1)
            .ok_or_else(|| {
                CliError::Parse(format!(
                    "{MAX_BOUND_ENV} must be a positive integer, got {text:?}"
                ))
            }),
    }
}

/// Parses a slope query (`p/q` or the literal `unknot`) into a normal form.
///
/// The fraction is reduced before anything else, so `4/6` names the knot
/// `2/3`. After reduction: an even denominator is a two-component link (a
/// dedicated exit code, since the tool is knots-only), and a denominator
/// above [`max_bound`] is refused.
pub fn parse_query(text: &str) -> Result<TwoBridgeKnot, CliError> {
    let trimmed = text.trim();
    if trimmed == "unknot" {
        return Ok(TwoBridgeKnot::UNKNOT);
    }
    let Some((p_text, q_text)) = trimmed.split_once('/') else {
        return Err(CliError::Parse(format!(
            "cannot parse {trimmed:?}: expected \"p/q\" or \"unknot\""
        )));
    };
    let p: i64 = p_text.trim().parse().map_err(|_| {
        CliError::Parse(format!("invalid numerator {:?} in {trimmed:?}", p_text.trim()))
    })?;
    let q: i64 = q_text.trim().parse().map_err(|_| {
        CliError::Parse(format!("invalid denominator {:?} in {trimmed:?}", q_text.trim()))
    })?;
    if q == 0 {
        return Err(CliError::Parse(format!(
            "cannot parse {trimmed:?}: the denominator must be nonzero"
        )));
    }
    let slope = Slope::new(p, q).map_err(|e| CliError::Parse(e.to_string()))?;
    if slope.den() % 2 == 0 {
        return Err(CliError::Link(
            TwoBridgeError::EvenDenominator {
                p: slope.num(),
                q: slope.den(),
            }
            .to_string(),
        ));
    }
    let cap = max_bound()?;
    if slope.den() > cap {
        return Err(CliError::BoundExceeded(format!(
            "denominator {} exceeds the configured maximum {cap} (raise {MAX_BOUND_ENV} to allow it)",
            slope.den()
        )));
    }
    Ok(normalize(slope.num(), slope.den())
        .expect("reduced fractions with odd denominator always normalize"))
}
