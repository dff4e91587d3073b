//! Schubert normal forms of 2-bridge knots.
//!
//! A 2-bridge (rational) knot is encoded by a reduced fraction `p/q` with
//! `q` odd; even `q` gives a two-component link instead. Two fractions give
//! the same knot exactly when `q` agrees and `p' ≡ p` or `p*p' ≡ 1 (mod q)`;
//! replacing `p` by `-p` gives the mirror image. Every class therefore has a
//! representative with `0 < p/q <= 1/2` after mirroring if necessary, and
//! [`normalize`] picks one deterministically, recording in a flag whether a
//! mirror was needed.
//!
//! On normal forms the classification is a trichotomy: `p = 0` is the
//! unknot, `p = 1` is the torus knot with two strands and `q` crossings, and
//! `p >= 2` (forcing `q >= 5`) is hyperbolic.

use std::fmt;

use thiserror::Error;

use crate::arith::{gcd, mod_inv};
use crate::farey::{self, ContinuedFraction, Slope};

/// Errors from 2-bridge classification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoBridgeError {
    /// Denominators must be positive.
    #[error("denominator must be a positive integer, got {q}")]
    InvalidDenominator { q: i64 },
    /// Even denominators describe 2-bridge links, which are out of scope.
    #[error("{p}/{q} has even denominator: that is a 2-bridge link, not a knot")]
    EvenDenominator { p: i64, q: i64 },
    /// The classification needs a reduced fraction.
    #[error("{p}/{q} is not reduced; 2-bridge classification needs gcd(p, q) = 1")]
    NotReduced { p: i64, q: i64 },
    /// The unknot has no reduced alternating diagram, hence no twist data.
    #[error("the unknot admits no reduced alternating 2-bridge diagram")]
    Unknot,
}

/// A 2-bridge knot in Schubert normal form.
///
/// Invariants: either the unknot sentinel `(p, q) = (0, 1)` with the flag
/// clear, or `q >= 3` odd, `gcd(p, q) = 1`, and `0 < p/q <= 1/2`. The
/// `mirrored` flag records that the *input* fraction was only equivalent to
/// `p/q` after mirroring; amphichiral knots always carry a clear flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoBridgeKnot {
    p: i64,
    q: i64,
    mirrored: bool,
}

/// The double branched cover of a 2-bridge knot: the lens space `L(q, p)`.
/// `L(1, 0)` is the 3-sphere, covering the unknot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LensSpace {
    pub q: i64,
    pub p: i64,
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}, {})", self.q, self.p)
    }
}

/// Classifies the fraction `p/q` and returns its Schubert normal form.
///
/// `p` is first reduced modulo `q`. Among the equivalent numerators
/// `{p, p^-1 (mod q)}` the smallest one lying in `(0, q/2]` is chosen; when
/// neither lies there, the knot's own class has no such representative and
/// the smaller of the mirror numerators `{q - p, q - p^-1}` is used instead,
/// with the `mirrored` flag set. (Both chirality classes can have in-range
/// representatives, in which case they are distinct normal forms; taking the
/// minimum just fixes a deterministic representative within one class.)
///
/// The fraction must already be reduced: `gcd(p, q) = 1`. `q = 1` yields the
/// unknot.
///
/// ```
/// use bridgepants::twobridge::normalize;
/// let k = normalize(7, 5).unwrap(); // 7/5 ≡ 2/5: the figure-8 knot
/// assert_eq!((k.p(), k.q(), k.mirrored()), (2, 5, false));
/// ```
pub fn normalize(p: i64, q: i64) -> Result<TwoBridgeKnot, TwoBridgeError> {
    if q < 1 {
        return Err(TwoBridgeError::InvalidDenominator { q });
    }
    if q % 2 == 0 {
        return Err(TwoBridgeError::EvenDenominator { p, q });
    }
    let p0 = p.rem_euclid(q);
    if q > 1 && gcd(p0.unsigned_abs(), q.unsigned_abs()) != 1 {
        return Err(TwoBridgeError::NotReduced { p, q });
    }
    if q == 1 {
        return Ok(TwoBridgeKnot::UNKNOT);
    }
    let inv = mod_inv(p0, q).expect("p0 is coprime to q");
    // x in (0, q/2] for odd q means x < q - x.
    let in_range = |x: i64| x < q - x;
    let own = [p0, inv];
    if let Some(&m) = own.iter().filter(|&&x| in_range(x)).min() {
        Ok(TwoBridgeKnot {
            p: m,
            q,
            mirrored: false,
        })
    } else {
        let m = (q - p0).min(q - inv);
        debug_assert!(in_range(m));
        Ok(TwoBridgeKnot {
            p: m,
            q,
            mirrored: true,
        })
    }
}

impl TwoBridgeKnot {
    /// The unknot, encoded as `0/1`.
    pub const UNKNOT: TwoBridgeKnot = TwoBridgeKnot {
        p: 0,
        q: 1,
        mirrored: false,
    };

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Whether normalization had to pass to the mirror image.
    pub fn mirrored(&self) -> bool {
        self.mirrored
    }

    pub fn is_unknot(&self) -> bool {
        self.q == 1
    }

    /// The normal-form slope `p/q` as a Farey-graph vertex (the unknot maps
    /// to `0/1`).
    pub fn slope(&self) -> Slope {
        Slope {
            num: self.p,
            den: self.q,
        }
    }

    /// The numerator of the fraction class this value denotes (undoing the
    /// mirror flag), still reduced mod `q`.
    fn effective_numerator(&self) -> i64 {
        if self.mirrored {
            self.q - self.p
        } else {
            self.p
        }
    }

    /// The mirror image. An involution; amphichiral knots (and the unknot)
    /// are fixed points.
    pub fn mirror(&self) -> TwoBridgeKnot {
        if self.is_unknot() {
            return *self;
        }
        normalize(self.q - self.effective_numerator(), self.q)
            .expect("mirroring a valid normal form stays valid")
    }

    /// A knot equals its mirror image exactly when `p^2 ≡ -1 (mod q)`.
    /// The unknot counts as amphichiral.
    pub fn is_amphichiral(&self) -> bool {
        let pp = (self.p as i128 * self.p as i128).rem_euclid(self.q as i128);
        pp == (-1i128).rem_euclid(self.q as i128)
    }

    /// Chirality-sensitive equivalence. Normal forms classify 2-bridge knots
    /// up to isotopy, so this is equality of the triple `(p, q, mirrored)`.
    pub fn is_equivalent(&self, other: &TwoBridgeKnot) -> bool {
        self == other
    }

    /// Equivalence up to mirror image (the knots have homeomorphic
    /// complements even when chirality differs).
    pub fn is_equivalent_up_to_mirror(&self, other: &TwoBridgeKnot) -> bool {
        self == other || *self == other.mirror()
    }

    /// The canonical continued fraction of the normal-form slope, whose
    /// coefficients are the twist-region sizes of the reduced alternating
    /// diagram (of the unmirrored representative; the mirror has the same
    /// regions with reversed crossings). The unknot has none.
    pub fn tangle_diagram(&self) -> Result<ContinuedFraction, TwoBridgeError> {
        if self.is_unknot() {
            return Err(TwoBridgeError::Unknot);
        }
        Ok(farey::cf_expand(self.slope())
            .expect("normal-form slopes lie in (0, 1/2]"))
    }

    /// Number of twist regions in the reduced alternating diagram: the
    /// length of the canonical continued fraction.
    pub fn twist_number(&self) -> Result<u64, TwoBridgeError> {
        Ok(self.tangle_diagram()?.len() as u64)
    }

    /// The double branched cover `L(q, p)` of the normal form. Mirrored
    /// inputs have the orientation-reversed cover `L(q, q - p)`; only the
    /// normal form's `(q, p)` is reported.
    pub fn double_branched_cover(&self) -> LensSpace {
        LensSpace {
            q: self.q,
            p: self.p,
        }
    }

    /// Torus knots among 2-bridge knots are exactly the normal forms with
    /// `p = 1` (two strands, `q` crossings). The unknot is not counted.
    pub fn is_torus_two_bridge(&self) -> bool {
        self.p == 1
    }

    /// A 2-bridge knot is hyperbolic exactly when it is neither the unknot
    /// nor a torus knot, i.e. when the normal form has `p >= 2`.
    pub fn is_hyperbolic(&self) -> bool {
        self.p >= 2
    }
}

impl fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unknot() {
            write!(f, "unknot")
        } else if self.mirrored {
            write!(f, "K({}/{})*", self.p, self.q)
        } else {
            write!(f, "K({}/{})", self.p, self.q)
        }
    }
}
