//! Integer primality and factorization at desk scale.
//!
//! Miller-Rabin is deterministic below 2^64 (fixed witness set) and runs 64
//! pseudorandom rounds above, drawn from a fixed-seed generator so results
//! are reproducible. Composite splitting is trial division followed by
//! Brent's variant of Pollard rho with an iteration cap; inputs that exhaust
//! the cap are reported as errors rather than guessed at.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

const SMALL_PRIME_BOUND: u64 = 10_000;
const RHO_ITERATION_CAP: u64 = 1 << 22;

fn miller_rabin_witness(n: &BigUint, a: &BigUint) -> bool {
    // true if `a` witnesses that `n` is composite
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n_minus_1 {
        return false;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return false;
        }
    }
    true
}

pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    if n.bits() <= 64 {
        // deterministic for this range with the first twelve primes
        for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            if miller_rabin_witness(n, &BigUint::from(a)) {
                return false;
            }
        }
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x4d52_5052_494d_4531);
    let low = BigUint::from(2u32);
    let high = n - &two;
    for _ in 0..64 {
        let a = rng.gen_biguint_range(&low, &high);
        if miller_rabin_witness(n, &a) {
            return false;
        }
    }
    true
}

fn pollard_brent(n: &BigUint, seed: u64) -> Option<BigUint> {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return Some(two);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_minus_2 = n - &two;
    let y0 = rng.gen_biguint_range(&one, &n_minus_2);
    let c = rng.gen_biguint_range(&one, &n_minus_2);
    let m = 128u64;
    let mut y = y0;
    let mut g = BigUint::one();
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut x = BigUint::zero();
    let mut ys = BigUint::zero();
    let mut spent = 0u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = (&y * &y + &c) % n;
        }
        let mut k = 0u64;
        while k < r && g.is_one() {
            ys = y.clone();
            let steps = m.min(r - k);
            for _ in 0..steps {
                y = (&y * &y + &c) % n;
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (&q * &diff) % n;
            }
            g = q.gcd(n);
            k += steps;
            spent += steps;
            if spent > RHO_ITERATION_CAP {
                return None;
            }
        }
        r *= 2;
    }
    if &g == n {
        // backtrack one multiplication at a time
        loop {
            ys = (&ys * &ys + &c) % n;
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if g.is_one() || &g == n {
        None
    } else {
        Some(g)
    }
}

/// Complete prime factorization of `n >= 1` as prime -> exponent.
pub fn factorize(n: &BigUint) -> Result<BTreeMap<BigUint, u32>> {
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return Err(Error::ZeroRational);
    }
    let mut n = n.clone();
    let mut p = 2u64;
    while p < SMALL_PRIME_BOUND {
        let bp = BigUint::from(p);
        while (&n % &bp).is_zero() {
            *out.entry(bp.clone()).or_insert(0) += 1;
            n /= &bp;
        }
        if n.is_one() {
            return Ok(out);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let mut split = None;
        for attempt in 0..8u64 {
            if let Some(d) = pollard_brent(&m, 0x726f_6873_6565_6400 + attempt) {
                split = Some(d);
                break;
            }
        }
        match split {
            Some(d) => {
                stack.push(&m / &d);
                stack.push(d);
            }
            None => return Err(Error::IntegerFactorization(m.to_string())),
        }
    }
    Ok(out)
}

/// All positive divisors of `n >= 1`, ascending.
pub fn divisors(n: &BigUint) -> Result<Vec<BigUint>> {
    let fac = factorize(n)?;
    let mut out = vec![BigUint::one()];
    for (p, e) in fac {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Writes the nonzero rational `r` as `m * s^2` with `m` a squarefree
/// integer, returning `m`. Fails only if factorization gives up.
pub fn squarefree_kernel(r: &crate::rat::Rat) -> Result<BigInt> {
    if r.is_zero() {
        return Err(Error::ZeroRational);
    }
    // num/den = num*den / den^2, so the kernel of num*den is the answer
    let prod = (r.numer() * r.denom()).abs().to_biguint().unwrap();
    let fac = factorize(&prod)?;
    let mut m = BigInt::one();
    for (p, e) in fac {
        if e % 2 == 1 {
            m *= BigInt::from(p);
        }
    }
    if r.is_negative() {
        m = -m;
    }
    Ok(m)
}

/// Jacobi symbol (a/n) for odd positive n; equals the Legendre symbol when
/// n is prime.
pub fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    debug_assert!(n.is_positive() && n.is_odd());
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut sign = 1i32;
    while !a.is_zero() {
        while a.is_even() {
            a /= 2;
            let r = (&n % 8u32).to_u32().unwrap();
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u32().unwrap() == 3 && (&n % 4u32).to_u32().unwrap() == 3 {
            sign = -sign;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        sign
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn primality_small() {
        let primes = [2u64, 3, 5, 7, 97, 7919, 2147483647];
        for p in primes {
            assert!(is_prime(&BigUint::from(p)), "{p}");
        }
        let composites = [0u64, 1, 4, 9, 91, 561, 2147483647 * 2];
        for c in composites {
            assert!(!is_prime(&BigUint::from(c)), "{c}");
        }
    }

    #[test]
    fn primality_carmichael_and_large() {
        // 3215031751 is the smallest strong pseudoprime to bases 2,3,5,7
        assert!(!is_prime(&BigUint::from(3215031751u64)));
        // 2^89 - 1 is a Mersenne prime (above the 64-bit window)
        let m89 = (BigUint::one() << 89) - BigUint::one();
        assert!(is_prime(&m89));
        assert!(!is_prime(&(m89 * BigUint::from(3u32))));
    }

    #[test]
    fn factorize_roundtrip() {
        for n in [1u64, 2, 12, 360, 1009 * 1013, 2u64.pow(20) * 3 * 49] {
            let n = BigUint::from(n);
            let fac = factorize(&n).unwrap();
            let mut prod = BigUint::one();
            for (p, e) in &fac {
                assert!(is_prime(p));
                prod *= p.pow(*e);
            }
            assert_eq!(prod, n);
        }
    }

    #[test]
    fn factorize_semiprime() {
        // two 41-bit primes, beyond trial division
        let p = BigUint::from(1099511627791u64);
        let q = BigUint::from(1099511627803u64);
        assert!(is_prime(&p) && is_prime(&q));
        let fac = factorize(&(&p * &q)).unwrap();
        assert_eq!(fac.len(), 2);
        assert_eq!(fac[&p], 1);
        assert_eq!(fac[&q], 1);
    }

    #[test]
    fn divisors_of_12() {
        let d = divisors(&BigUint::from(12u32)).unwrap();
        let expect: Vec<BigUint> = [1u32, 2, 3, 4, 6, 12]
            .iter()
            .map(|&x| BigUint::from(x))
            .collect();
        assert_eq!(d, expect);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(squarefree_kernel(&rat(12, 1)).unwrap(), BigInt::from(3));
        assert_eq!(squarefree_kernel(&rat(-4, 1)).unwrap(), BigInt::from(-1));
        assert_eq!(squarefree_kernel(&rat(1, 2)).unwrap(), BigInt::from(2));
        assert_eq!(squarefree_kernel(&rat(9, 25)).unwrap(), BigInt::from(1));
        assert_eq!(squarefree_kernel(&rat(-48, 1)).unwrap(), BigInt::from(-3));
    }

    #[test]
    fn jacobi_matches_legendre() {
        // Euler's criterion against jacobi for a small prime
        let p = 23i64;
        for a in 1..p {
            let euler = BigInt::from(a).modpow(
                &BigInt::from((p - 1) / 2),
                &BigInt::from(p),
            );
            let expect = if euler.is_one() { 1 } else { -1 };
            assert_eq!(jacobi(&BigInt::from(a), &BigInt::from(p)), expect);
        }
        assert_eq!(jacobi(&BigInt::from(46), &BigInt::from(23)), 0);
    }
}
