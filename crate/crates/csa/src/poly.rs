//! Dense univariate polynomials over Q.
//!
//! Coefficients are stored in ascending degree order and the leading
//! coefficient is always nonzero. The variable is called `t` throughout.

use crate::error::{Error, Result};
use crate::rat::{rat_int, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly::from_coeffs(vec![c])
    }

    /// The polynomial `t`.
    pub fn variable() -> Self {
        RatPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// `c * t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        RatPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming leading
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// Convenience constructor from ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        RatPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a nonzero polynomial. Panics on zero.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    /// True if this is exactly the polynomial `t`.
    pub fn is_t(&self) -> bool {
        self.coeffs.len() == 2 && self.coeffs[0].is_zero() && self.coeffs[1].is_one()
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates at an integer point, staying in `BigInt` when the
    /// coefficients are integers.
    pub fn eval_int(&self, x: &BigInt) -> Rat {
        self.eval(&Rat::from_integer(x.clone()))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_int(i as i64))
            .collect();
        RatPoly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shifted_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RatPoly { coeffs }
    }

    /// Scales to leading coefficient 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => RatPoly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.mul_scalar(&lc.recip()),
        }
    }

    /// Scales by a positive constant so the leading coefficient is +-1.
    /// Used by the Sturm chain, where signs must survive normalization.
    fn unit_lead(&self) -> Self {
        match self.leading() {
            None => RatPoly::zero(),
            Some(lc) => self.mul_scalar(&lc.abs().recip()),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = RatPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomialDivision);
        }
        let dd = d.deg();
        let lc_inv = d.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lc_inv;
            for j in 0..dd {
                let sub = &d.coeffs[j] * &q;
                rem[i - dd + j] = &rem[i - dd + j] - &sub;
            }
            rem[i] = Rat::zero();
            quot[i - dd] = q;
        }
        Ok((RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem)))
    }

    /// Exact division; panics if the remainder is nonzero (internal
    /// invariant, not an input condition).
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic greatest common divisor. `gcd(0, 0)` is an error.
    pub fn gcd_monic(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    /// Squarefree decomposition of a monic polynomial by Yun's algorithm:
    /// returns pairwise coprime monic `(g, m)` with `self = prod g^m` and
    /// each `g` squarefree nonconstant.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_monic() {
            return Err(Error::NonMonic(self.leading().unwrap().to_string()));
        }
        if self.is_constant() {
            return Ok(Vec::new());
        }
        let deriv = self.derivative();
        let g = self.gcd_monic(&deriv)?;
        if g.is_constant() {
            return Ok(vec![(self.clone(), 1)]);
        }
        let mut out = Vec::new();
        let mut b = self.div_exact(&g);
        let mut d = &deriv.div_exact(&g) - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd_monic(&d)?;
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a);
            d = &d.div_exact(&a) - &b.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// Number of distinct real roots, by a Sturm chain. The chain elements
    /// are rescaled by positive constants at every step, which bounds
    /// coefficient growth without disturbing sign variations.
    pub fn distinct_real_roots(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(0);
        }
        let mut chain = vec![self.unit_lead(), self.derivative().unit_lead()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                break;
            }
            let (_, r) = chain[n - 2].divrem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().unit_lead());
        }
        let sign_at = |p: &RatPoly, plus_infinity: bool| -> i32 {
            let lc = p.leading().unwrap();
            let s = if lc.is_positive() { 1 } else { -1 };
            if plus_infinity || p.deg() % 2 == 0 {
                s
            } else {
                -s
            }
        };
        let variations = |plus_infinity: bool| -> usize {
            let mut count = 0;
            let mut last = 0i32;
            for p in &chain {
                if p.is_zero() {
                    continue;
                }
                let s = sign_at(p, plus_infinity);
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
            count
        };
        Ok(variations(false) - variations(true))
    }

    /// Substitutes `t -> c * t`.
    pub fn scale_variable(&self, c: &Rat) -> Self {
        let mut power = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &power;
                power = &power * c;
                out
            })
            .collect();
        RatPoly::from_coeffs(coeffs)
    }

    /// For monic `f`, returns `(P, D)` where `P(t) = D^deg * f(t/D)` is monic
    /// with integer coefficients. Roots scale by `D`, so `P` generates the
    /// same number field. `D` is the smallest scale that clears the
    /// denominators, falling back to their plain lcm when one of them
    /// resists factoring.
    pub fn integral_model(&self) -> Result<(Vec<BigInt>, BigInt)> {
        if !self.is_monic() {
            return Err(Error::NonMonic(
                self.leading().map(|c| c.to_string()).unwrap_or_default(),
            ));
        }
        let n = self.deg();
        let d = self
            .minimal_scale()
            .unwrap_or_else(|| {
                self.coeffs
                    .iter()
                    .fold(BigInt::one(), |d, c| crate::rat::big_lcm(&d, c.denom()))
            });
        let mut power = BigInt::one();
        let mut out = vec![BigInt::zero(); n + 1];
        for i in (0..=n).rev() {
            let scaled = &self.coeffs[i] * Rat::from_integer(power.clone());
            debug_assert!(scaled.denom().is_one());
            out[i] = scaled.numer().clone();
            power *= &d;
        }
        Ok((out, d))
    }

    /// Smallest positive D with den(a_i) dividing D^(deg - i) for every i:
    /// a prime q with q^e in den(a_i) contributes exponent ceil(e/(deg-i)).
    fn minimal_scale(&self) -> Option<BigInt> {
        let n = self.deg();
        let mut need: std::collections::BTreeMap<num_bigint::BigUint, u32> =
            std::collections::BTreeMap::new();
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            let den = a.denom().magnitude();
            if den.is_one() {
                continue;
            }
            let k = (n - i) as u32;
            for (q, e) in crate::intfactor::factorize(den).ok()? {
                let exp = e.div_ceil(k);
                let slot = need.entry(q).or_insert(0);
                *slot = (*slot).max(exp);
            }
        }
        let mut d = BigInt::one();
        for (q, e) in need {
            d *= BigInt::from(q).pow(e);
        }
        Some(d)
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", self)
    }
}

/// Orders by degree, then by ascending-coefficient lexicographic comparison.
/// This is the deterministic order used everywhere factors are listed.
impl Ord for RatPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for RatPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        (&self).neg()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "t")?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}
