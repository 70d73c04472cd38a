use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. Always stored in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d`; panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"7"`, `"-3/4"` and friends.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let r: Rat = s.parse().ok()?;
    Some(r)
}

pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Exact square root of a rational, if it has one.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Writes a positive rational `x` as `k² · s` with `s` a positive integer free of
/// square factors below the trial-division limit. Returns `(k, s)`.
pub fn square_decompose(x: &Rat) -> (Rat, BigInt) {
    assert!(
        x.is_positive(),
        "square_decompose needs a positive rational"
    );
    // n/d = n·d / d²
    let mut m: BigInt = x.numer() * x.denom();
    let mut outside = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= m && p < limit {
        let p2 = &p * &p;
        while (&m % &p2).is_zero() {
            m /= &p2;
            outside *= &p;
        }
        p += 1u32;
    }
    let root = m.sqrt();
    if &root * &root == m {
        outside *= &root;
        m = BigInt::one();
    }
    (Rat::new(outside, x.denom().clone()), m)
}
