//! Exact factorials, binomials and multinomials.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// C(n, k); zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= (n - i) as u64;
        acc /= (i + 1) as u64;
    }
    acc
}

/// n! / (k_1! k_2! ...) where the parts sum to n; zero otherwise.
pub fn multinomial(n: usize, parts: &[usize]) -> BigUint {
    if parts.iter().sum::<usize>() != n {
        return BigUint::zero();
    }
    let mut rest = n;
    let mut acc = BigUint::one();
    for &k in parts {
        acc *= binomial(rest, k);
        rest -= k;
    }
    acc
}

pub fn pow(base: usize, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}
