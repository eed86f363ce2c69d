//! Small number-theory helpers shared across modules.

use num_integer::Integer;

/// Euler totient.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1);
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as u32
}

/// Prime factorization by trial division, smallest prime first.
/// Callers keep inputs well under 10^9, where this is instant.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1);
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Some (q, s) with n = q^s for a prime q, if one exists.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let f = factorize(n);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// Divisors of n in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Prime-power divisors of n that are >= 2, ascending.
pub fn prime_power_divisors(n: u64) -> Vec<u64> {
    divisors(n)
        .into_iter()
        .filter(|&d| prime_power(d).is_some())
        .collect()
}

/// Units of Z/n, ascending, for n >= 1 (empty group convention: [1] for n = 1).
pub fn units_mod(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|&u| u.gcd(&n) == 1).collect()
}

/// gcd(|lambda|, d), with gcd(0, d) = d.
pub fn gcd_with(lambda: i64, d: u64) -> u64 {
    (lambda.unsigned_abs()).gcd(&d)
}
