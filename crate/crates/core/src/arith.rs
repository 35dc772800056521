//! Exact binomial coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)` as an arbitrary precision integer; zero outside `0 <= k <= n`.
pub fn binomial_big(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k)` in machine integers; zero outside `0 <= k <= n`.
/// Exact for every `n <= 64`, which covers all ambient sizes accepted here.
/// `(-1)^e`, defined for any integer exponent by parity.
pub(crate) fn neg_one_pow(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
