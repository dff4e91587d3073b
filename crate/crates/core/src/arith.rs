//! Small integer helpers shared across modules.

/// Greatest common divisor; `gcd(0, n) = n`.
pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(|a|, |b|) >= 0`.
pub(crate) fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    let (mut y0, mut y1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Inverse of `p` modulo `q` (for `q >= 1`), in `[0, q)`; `None` if not coprime.
pub(crate) fn mod_inv(p: i64, q: i64) -> Option<i64> {
    debug_assert!(q >= 1);
    let (g, x, _) = ext_gcd(p, q);
    (g == 1).then(|| x.rem_euclid(q))
}

/// Floor of `a / b` for `b > 0`.
pub(crate) fn div_floor(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// Ceiling of `a / b` for `b > 0`.
pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -(-a).div_euclid(b)
}
