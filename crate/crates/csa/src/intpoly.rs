//! Thin helpers for polynomials with `BigInt` coefficients (ascending,
//! trimmed). Used by the factorization and local-splitting internals, where
//! staying in Z avoids rational bookkeeping.

use crate::poly::RatPoly;
use crate::rat::Rat;
use num_bigint::BigInt;
use num_traits::Zero;

pub type IntPoly = Vec<BigInt>;

pub fn trim(mut f: IntPoly) -> IntPoly {
    while f.last().map_or(false, |c| c.is_zero()) {
        f.pop();
    }
    f
}

pub fn deg(f: &IntPoly) -> usize {
    debug_assert!(!f.is_empty());
    f.len() - 1
}

pub fn is_monic(f: &IntPoly) -> bool {
    f.last().map_or(false, |c| c == &BigInt::from(1))
}

pub fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    let z = BigInt::zero();
    for i in 0..n {
        out.push(a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z));
    }
    trim(out)
}

/// Division by a monic divisor stays in Z: returns `(q, r)`.
pub fn divrem_monic(a: &IntPoly, d: &IntPoly) -> (IntPoly, IntPoly) {
    debug_assert!(is_monic(d));
    if a.len() < d.len() {
        return (Vec::new(), a.clone());
    }
    let dd = deg(d);
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - dd];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let q = rem[i].clone();
        for j in 0..dd {
            let sub = &d[j] * &q;
            rem[i - dd + j] -= sub;
        }
        rem[i] = BigInt::zero();
        quot[i - dd] = q;
    }
    (trim(quot), trim(rem))
}

/// True when the monic divisor divides exactly.
pub fn divides_monic(d: &IntPoly, a: &IntPoly) -> bool {
    divrem_monic(a, d).1.is_empty()
}

pub fn eval(f: &IntPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in f.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn to_rat_poly(f: &IntPoly) -> RatPoly {
    RatPoly::from_coeffs(f.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

pub fn from_rat_poly(f: &RatPoly) -> Option<IntPoly> {
    if !f.has_integer_coeffs() {
        return None;
    }
    Some(f.coeffs().iter().map(|c| c.numer().clone()).collect())
}
