//! Elementary number theory on machine integers.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation by trial division, as `(prime, exponent)` pairs in
/// increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// If `n = p^k` for a prime `p` and `k >= 1`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn divisor_count(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(_, e)| e as u64 + 1)
        .product()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Modular inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Multiplicative order of `q` modulo `n`: the least `t >= 1` with
/// `q^t = 1 (mod n)`.
pub fn order_mod(q: u64, n: u64) -> Result<u64> {
    if gcd(q, n) != 1 {
        return Err(Error::NotCoprime { a: q, b: n });
    }
    if n == 1 {
        return Ok(1);
    }
    let phi = euler_phi(n);
    let mut t = phi;
    for (r, _) in factorize(phi) {
        while t.is_multiple_of(r) && pow_mod(q, t / r, n) == 1 {
            t /= r;
        }
    }
    Ok(t)
}

/// `base^exp`, or `None` on overflow of `u128`.
pub fn checked_pow(base: u64, exp: u32) -> Option<u128> {
    (base as u128).checked_pow(exp)
}

/// Whether `q` generates the unit group of `Z_n`.
pub fn generates_units(q: u64, n: u64) -> bool {
    order_mod(q, n).map(|t| t == euler_phi(n)).unwrap_or(false)
}

/// Number of orbits of `x -> q*x` on `Z_n` (the `q`-cyclotomic cosets modulo `n`).
pub fn cyclotomic_coset_count(q: u64, n: u64) -> u64 {
    let mut seen = vec![false; n as usize];
    let mut count = 0;
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            x = x * q % n;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_functions() {
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(divisor_count(12), 6);
        assert_eq!(divisor_count(1), 1);
        assert_eq!(euler_phi(27), 27 - 9);
        assert_eq!(factorize(165), vec![(3, 1), (5, 1), (11, 1)]);
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(18), None);
    }

    #[test]
    fn orders() {
        assert_eq!(order_mod(2, 9).unwrap(), 6);
        assert_eq!(order_mod(2, 7).unwrap(), 3);
        assert_eq!(order_mod(3, 2).unwrap(), 1);
        assert_eq!(order_mod(7, 9).unwrap(), 3);
        assert!(order_mod(3, 9).is_err());
        assert_eq!(inv_mod(2, 9), Some(5));
        assert_eq!(inv_mod(3, 9), None);
    }

    #[test]
    fn coset_counts() {
        assert_eq!(cyclotomic_coset_count(2, 7), 3);
        assert_eq!(cyclotomic_coset_count(3, 16), 7);
        assert_eq!(cyclotomic_coset_count(2, 33), 5);
    }
}
