//! Exact rational scalars.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics if `d == 0`; use [`parse_rat`] for untrusted
/// input.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with optional sign, rejecting a zero denominator.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let err = |pos: usize, what: &str| Error::Parse {
        position: pos,
        expected: what.to_string(),
    };
    if s.is_empty() {
        return Err(err(0, "a rational number".into()));
    }
    let (num_str, den_str) = match s.find('/') {
        Some(i) => (&s[..i], Some(&s[i + 1..])),
        None => (s, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| err(0, "an integer numerator"))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| err(num_str.len() + 1, "an integer denominator"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err(num_str.len() + 1, "a nonzero denominator"));
    }
    Ok(Rat::new(num, den))
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Exact square root, if `r` is the square of a rational.
pub fn exact_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// v-adic valuation of a nonzero rational at the prime `p`.
pub fn valuation(r: &Rat, p: &BigInt) -> Result<i64> {
    if r.is_zero() {
        return Err(Error::ZeroRational);
    }
    Ok(int_valuation(r.numer(), p) - int_valuation(r.denom(), p))
}

/// p-adic valuation of a nonzero integer.
pub fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// The unit part `r / p^valuation(r)`.
pub fn unit_part(r: &Rat, p: &BigInt) -> Result<Rat> {
    let v = valuation(r, p)?;
    let scale = if v >= 0 {
        Rat::new(BigInt::one(), p.pow(v as u32))
    } else {
        Rat::from_integer(p.pow((-v) as u32))
    };
    Ok(r * scale)
}

/// Reduces a p-unit rational modulo `m` (requires `gcd(denom, m) = 1`).
pub fn reduce_mod(r: &Rat, m: &BigInt) -> BigInt {
    let n = r.numer().mod_floor(m);
    let d = r.denom().mod_floor(m);
    let d_inv = mod_inverse(&d, m).expect("denominator not invertible mod m");
    (n * d_inv).mod_floor(m)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

pub fn big_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["3", "-3", "1/2", "-7/3", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!(parse_rat(" 4/6 ").unwrap(), rat(2, 3));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("1/2/3").is_err());
    }

    #[test]
    fn sqrt_and_valuation() {
        assert_eq!(exact_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(exact_sqrt(&rat(2, 1)), None);
        assert_eq!(exact_sqrt(&rat(-4, 1)), None);
        let two = BigInt::from(2);
        assert_eq!(valuation(&rat(12, 1), &two).unwrap(), 2);
        assert_eq!(valuation(&rat(3, 8), &two).unwrap(), -3);
        assert_eq!(unit_part(&rat(3, 8), &two).unwrap(), rat(3, 1));
    }

    #[test]
    fn modular_inverse() {
        let m = BigInt::from(97);
        let a = BigInt::from(35);
        let inv = mod_inverse(&a, &m).unwrap();
        assert_eq!((a * inv).mod_floor(&m), BigInt::one());
        assert_eq!(mod_inverse(&BigInt::from(6), &BigInt::from(9)), None);
    }
}
