//! Integer helpers: primality, factorization, divisors, and exact big-integer
//! division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    // Brent's variant with a deterministic sequence of increments.
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        let mut power = 1u64;
        let mut lam = 1u64;
        while d == 1 {
            if power == lam {
                x = y;
                power <<= 1;
                lam = 0;
            }
            y = f(y);
            lam += 1;
            d = (x.abs_diff(y)).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
///
/// Trial division up to 10^6, Pollard rho on whatever cofactor remains.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut d = 2u64;
    while d <= TRIAL_LIMIT && d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let mut stack = vec![n];
        let mut large = Vec::new();
        while let Some(x) = stack.pop() {
            if x == 1 {
                continue;
            }
            if is_prime(x) {
                large.push(x);
                continue;
            }
            let f = pollard_rho(x);
            stack.push(f);
            stack.push(x / f);
        }
        large.sort_unstable();
        for pr in large {
            match out.last_mut() {
                Some((last, e)) if *last == pr => *e += 1,
                _ => out.push((pr, 1)),
            }
        }
    }
    out
}

pub fn prime_factors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// `p^e` when it fits in a `u64`.
pub fn checked_pow(p: u64, e: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..e {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

pub fn big_pow(p: u64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), e as usize)
}

/// Multiplicative order of `a` modulo `m` (requires gcd(a, m) = 1).
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    debug_assert_eq!(a.gcd(&m), 1);
    if m == 1 {
        return 1;
    }
    let phi: u64 = factorize(m)
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product();
    let mut ord = phi;
    for r in prime_factors(phi) {
        while ord.is_multiple_of(r) && pow_mod(a, ord / r, m) == 1 {
            ord /= r;
        }
    }
    ord
}

/// `num / den`, failing unless the division is exact.
pub fn exact_div(num: &BigInt, den: &BigInt, what: &'static str) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::InexactDivision { what });
    }
    let (quot, rem) = num.div_rem(den);
    if !rem.is_zero() {
        return Err(Error::InexactDivision { what });
    }
    Ok(quot)
}

/// Exact integer square root, or `None` when `x` is not a perfect square.
pub fn exact_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.sign() == num_bigint::Sign::Minus {
        return None;
    }
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

pub fn big_one() -> BigInt {
    BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_range_matches_sieve() {
        let limit = 10_000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &expected) in sieve.iter().enumerate() {
            assert_eq!(is_prime(n as u64), expected, "n = {n}");
        }
    }

    #[test]
    fn factorization_reassembles() {
        for n in [1u64, 2, 12, 242, 16_777_215, 1_000_000_007 * 998_244_353, u64::MAX] {
            let prod: u64 = factorize(n).iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
            assert!(factorize(n).iter().all(|&(p, _)| is_prime(p)));
        }
    }

    #[test]
    fn divisors_of_242() {
        assert_eq!(divisors(242), vec![1, 2, 11, 22, 121, 242]);
    }

    #[test]
    fn order_of_three_mod_eleven() {
        assert_eq!(multiplicative_order(3, 11), 5);
        assert_eq!(multiplicative_order(2, 7), 3);
    }

    #[test]
    fn exact_division_checks_remainder() {
        let a = BigInt::from(264);
        assert_eq!(exact_div(&a, &BigInt::from(11), "t").unwrap(), BigInt::from(24));
        assert!(exact_div(&a, &BigInt::from(5), "t").is_err());
    }
}
