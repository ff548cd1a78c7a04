//! Generalized binomial coefficients and the handful of alternating-sum
//! identities the operator calculus leans on.
//!
//! `binom(n, k)` is defined for *any* integer `n` by the product formula
//! `n(n-1)...(n-k+1)/k!`, so it gives the coefficients of the (possibly
//! infinite) expansion of `(1+x)^n`. For negative `n` it is never zero when
//! `k >= 0`; for `k < 0` it is zero by convention.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `k!` as a big integer.
pub fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k as u64 {
        acc *= i;
    }
    acc
}

/// Binomial coefficient for an integer `n` of any sign.
///
/// `binom(n, k) = n(n-1)...(n-k+1) / k!` for `k > 0`, `1` for `k == 0`,
/// and `0` for `k < 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: binom(n, i+1) is an integer
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Memoized binomial coefficients keyed on `(n, k)`.
///
/// Entries satisfy the Pascal recurrence
/// `binom(n, k) = binom(n-1, k-1) + binom(n-1, k)`.
#[derive(Default)]
pub struct BinomialTable {
    memo: HashMap<(i64, i64), BigInt>,
}

impl BinomialTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: i64, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        self.memo
            .entry((n, k))
            .or_insert_with(|| binom(n, k))
            .clone()
    }
}

/// Convolution `sum_i binom(n, i) binom(m, k-i)` with a built-in self-check
/// against the closed form `binom(n+m, k)`.
///
/// Panics if the two routes disagree, which would mean the binomial
/// arithmetic itself is broken.
pub fn vandermonde_convolution(n: i64, m: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut sum = BigInt::zero();
    for i in 0..=k {
        sum += binom(n, i) * binom(m, k - i);
    }
    let closed = binom(n + m, k);
    assert_eq!(
        sum, closed,
        "binomial convolution mismatch for n={n} m={m} k={k}"
    );
    sum
}

/// The three alternating sums `sum_i (-1)^i i^p binom(m, l-i)` for
/// `p = 0, 1, 2` (the `p = 1` sum carries the sign `(-1)^(i-1)`), each
/// checked against its closed form:
///
/// * `s1 = binom(m-1, l)`
/// * `s2 = binom(m-2, l-1)`
/// * `s3 = binom(m-3, l-2) - binom(m-3, l-1)`
pub fn alt_binom_sums(m: i64, l: i64) -> (BigInt, BigInt, BigInt) {
    assert!(l >= 0, "alt_binom_sums requires l >= 0");
    let mut s1 = BigInt::zero();
    let mut s2 = BigInt::zero();
    let mut s3 = BigInt::zero();
    for i in 0..=l {
        let b = binom(m, l - i);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        s1 += sign * &b;
        s2 += -sign * i * &b;
        s3 += sign * i * i * &b;
    }
    assert_eq!(s1, binom(m - 1, l), "s1 closed form failed for m={m} l={l}");
    assert_eq!(
        s2,
        binom(m - 2, l - 1),
        "s2 closed form failed for m={m} l={l}"
    );
    assert_eq!(
        s3,
        binom(m - 3, l - 2) - binom(m - 3, l - 1),
        "s3 closed form failed for m={m} l={l}"
    );
    (s1, s2, s3)
}
