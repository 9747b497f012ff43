//! Fibonacci and Pell-type sequences, the closed-form path count, binomial
//! mountain counts, and square/domino tilings.

mod quadratic;
mod tiling;

pub use quadratic::{quad_pow, QuadraticNumber};
pub use tiling::{
    count_square_first, count_tilings, delete_leading_domino, enumerate_tilings, prepend_domino,
    Tile, Tiling, TilingError,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("expected an integer, got {0}")]
    NonIntegerResult(String),
}

/// Fibonacci numbers with `F(0) = 0`, `F(1) = F(2) = 1`, extended backward
/// by the same recurrence (so `F(-1) = 1`).
pub fn fibonacci(n: i64) -> BigInt {
    if n < 0 {
        let f = fibonacci(-n);
        return if n % 2 == 0 { -f } else { f };
    }
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `x(n) = 2 x(n-1) + x(n-2)` from the given start values.
fn pell_like(n: u32, x0: i64, x1: i64) -> BigInt {
    let (mut a, mut b) = (BigInt::from(x0), BigInt::from(x1));
    for _ in 0..n {
        let next = &b * 2 + &a;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Pell numbers 0, 1, 2, 5, 12, ... (OEIS A000129).
pub fn pell(n: u32) -> BigInt {
    pell_like(n, 0, 1)
}

/// Half-companion Pell numbers 1, 1, 3, 7, 17, ... (OEIS A001333).
pub fn half_companion_pell(n: u32) -> BigInt {
    pell_like(n, 1, 1)
}

fn expect_integer(x: QuadraticNumber) -> Result<BigInt, ClosedFormError> {
    x.to_integer()
        .ok_or_else(|| ClosedFormError::NonIntegerResult(x.to_string()))
}

/// `(a^n - b^n) / (2 sqrt 2)` with `a = 1 + sqrt 2`, `b = 1 - sqrt 2`.
pub fn binet_pell(n: u32) -> Result<BigInt, ClosedFormError> {
    let a = QuadraticNumber::silver().pow(n);
    let b = QuadraticNumber::silver_conjugate().pow(n);
    let two_sqrt2 = QuadraticNumber::from_ints(0, 2);
    expect_integer(&(&a - &b) / &two_sqrt2)
}

/// `(a^n + b^n) / 2`.
pub fn binet_half_companion(n: u32) -> Result<BigInt, ClosedFormError> {
    let a = QuadraticNumber::silver().pow(n);
    let b = QuadraticNumber::silver_conjugate().pow(n);
    let half = BigRational::new(1.into(), 2.into());
    expect_integer(&half * &(&a + &b))
}

/// Number of non-decreasing Deutsch paths of length `n`, as
/// `((1 + (-1)^n)/2 + Q(n) - P(n)) / 2` with `Q` half-companion Pell and
/// `P` Pell numbers. Every intermediate value is an integer.
pub fn count_nondecreasing_closed(n: u32) -> BigInt {
    let parity = if n.is_multiple_of(2) { 1 } else { 0 };
    (BigInt::from(parity) + half_companion_pell(n) - pell(n)) / 2
}

/// The same count evaluated in Q(sqrt 2):
/// `(1 + (-1)^n)/4 + (a^n + b^n)/4 - (a^n - b^n)/(4 sqrt 2)`.
pub fn count_nondecreasing_quadratic(n: u32) -> Result<BigInt, ClosedFormError> {
    let a = QuadraticNumber::silver().pow(n);
    let b = QuadraticNumber::silver_conjugate().pow(n);
    let quarter = BigRational::new(1.into(), 4.into());
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let parity = QuadraticNumber::rational(&quarter * BigRational::from_integer((1 + sign).into()));
    let sum = &quarter * &(&a + &b);
    let diff = &(&a - &b) / &QuadraticNumber::from_ints(0, 4);
    expect_integer(&(&parity + &sum) - &diff)
}

/// `n choose k`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Mountains of length `k` summed over the number of up-steps `j`:
/// `sum_{1 <= j < k} C(j - 1, 2j - k)`.
pub fn mountain_sum_by_ups(k: u32) -> BigInt {
    let k = i64::from(k);
    (1..k).map(|j| binomial(j - 1, 2 * j - k)).sum()
}

/// The reindexed form `sum_{0 <= j < k - 1} C(k - j - 2, j)`.
pub fn mountain_sum_reindexed(k: u32) -> BigInt {
    let k = i64::from(k);
    (0..k - 1).map(|j| binomial(k - j - 2, j)).sum()
}

/// Number of mountains (up-run then down-run) with `k` steps; zero for `k < 2`.
pub fn count_mountains(k: u32) -> BigInt {
    if k < 2 {
        return BigInt::zero();
    }
    mountain_sum_by_ups(k)
}
