//! Perfect powers, multiplicative dependence and base-`p` digit splitting.

use serde::Serialize;

/// Canonical multiplicative (in)dependence witness for a pair `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MultDependence {
    Independent,
    /// `p = r^m`, `q = r^n`, `gcd(m, n) = 1`.
    Dependent { r: u64, m: u32, n: u32 },
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `base^exp` if it fits in 64 bits.
fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Largest `x` with `x^e <= n`, by binary search.
pub fn integer_root(n: u64, e: u32) -> u64 {
    assert!(e >= 1, "root exponent must be positive");
    if e == 1 || n < 2 {
        return n;
    }
    let bits = 64 - n.leading_zeros();
    let mut lo: u64 = 1;
    let mut hi: u64 = 1u64 << (bits / e + 1).min(63);
    // invariant: lo^e <= n < hi^e
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match checked_pow(mid, e) {
            Some(v) if v <= n => lo = mid,
            _ => hi = mid,
        }
    }
    lo
}

/// Writes `n = d^e` with `e` maximal, so `d` is not itself a perfect power.
pub fn primitive_root(n: u64) -> (u64, u32) {
    assert!(n >= 2, "primitive_root needs n >= 2");
    let max_e = 63 - n.leading_zeros();
    for e in (2..=max_e).rev() {
        let d = integer_root(n, e);
        if d >= 2 && checked_pow(d, e) == Some(n) {
            return (d, e);
        }
    }
    (n, 1)
}

pub fn mult_dependence(p: u64, q: u64) -> MultDependence {
    let (d1, e1) = primitive_root(p);
    let (d2, e2) = primitive_root(q);
    if d1 != d2 {
        return MultDependence::Independent;
    }
    let g = gcd(e1, e2);
    // d1^g divides p, so it cannot overflow
    let r = checked_pow(d1, g).expect("r^g <= p");
    MultDependence::Dependent {
        r,
        m: e1 / g,
        n: e2 / g,
    }
}

/// `(m, d)` with `p^m | i`, `p^(m+1) ∤ i` and `d = (i / p^m) mod p`, so
/// `d` is the lowest nonzero base-`p` digit of `i`.
pub fn val_and_digit(i: u64, p: u64) -> (u32, u64) {
    assert!(i >= 1 && p >= 2);
    let mut j = i;
    let mut m = 0;
    while j.is_multiple_of(p) {
        j /= p;
        m += 1;
    }
    (m, j % p)
}
