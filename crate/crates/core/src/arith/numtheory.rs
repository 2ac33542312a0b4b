//! Small-integer number theory on machine words.

use alloc::vec::Vec;

use num_integer::Integer;

/// All positive divisors of `n` in increasing order. Empty for `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i.saturating_mul(i) <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorization as `(prime, exponent)` pairs, primes increasing.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Product of the distinct primes dividing `n`; `radical(1) == 1`.
pub fn radical(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, _)| p).product()
}

/// Nonnegative gcd of a slice of integers; zero for an empty slice or all zeros.
pub fn gcd_all(values: &[i64]) -> u64 {
    values
        .iter()
        .fold(0u64, |acc, &v| acc.gcd(&v.unsigned_abs()))
}

/// Least nonnegative residue of `value` modulo `modulus`.
pub fn residue(value: i64, modulus: u64) -> u64 {
    debug_assert!(modulus > 0);
    (value as i128).rem_euclid(modulus as i128) as u64
}

/// Order of `e(r / modulus)` as a root of unity.
pub fn root_order(r: u64, modulus: u64) -> u64 {
    modulus / r.gcd(&modulus)
}
