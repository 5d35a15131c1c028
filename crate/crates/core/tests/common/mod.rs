//! Independent oracles: plain step-by-step iteration, no shortcuts.
#![allow(dead_code)]

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

/// `(D, O, E)` by applying 3n+1 and n/2 one step at a time.
pub fn naive_counts(n: &BigUint) -> (u64, u64, u64) {
    let mut x = n.clone();
    let (mut odd, mut even) = (0u64, 0u64);
    while !x.is_one() {
        if x.is_odd() {
            x = x * 3u32 + 1u32;
            odd += 1;
        } else {
            x >>= 1;
            even += 1;
        }
    }
    (odd + even, odd, even)
}

pub fn naive_counts_u64(n: u64) -> (u64, u64, u64) {
    let mut x = n as u128;
    let (mut odd, mut even) = (0u64, 0u64);
    while x != 1 {
        if x % 2 == 1 {
            x = 3 * x + 1;
            odd += 1;
        } else {
            x /= 2;
            even += 1;
        }
    }
    (odd + even, odd, even)
}

/// Every value visited, start and terminal 1 included.
pub fn naive_trajectory(n: u64) -> Vec<u64> {
    let mut out = vec![n];
    let mut x = n;
    while x != 1 {
        x = if x % 2 == 1 { 3 * x + 1 } else { x / 2 };
        out.push(x);
    }
    out
}

/// Residue `2^E / (3^O * N)` as an unreduced pair.
pub fn naive_residue(n: u64) -> (BigUint, BigUint) {
    let (_, o, e) = naive_counts_u64(n);
    (BigUint::one() << e, BigUint::from(3u32).pow(o as u32) * n)
}

pub fn big(n: u64) -> BigUint {
    BigUint::from(n)
}
