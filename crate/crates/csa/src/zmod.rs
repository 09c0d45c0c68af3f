//! Polynomial arithmetic over Z/m, plus factorization over prime fields and
//! their finite extensions.
//!
//! Polynomials are `Vec<BigInt>` with coefficients reduced into `[0, m)`,
//! ascending order, trimmed. The same representation serves three roles:
//! arithmetic mod a prime (Cantor-Zassenhaus factorization), arithmetic mod
//! a prime power (Hensel lifting), and elements of `F_p[z]/(modulus)` when
//! the extension layer is in play.
//!
//! Equal-degree splitting is randomized; the generator is seeded from a
//! stable hash of the input so every run factors the same way.

use crate::intpoly::{self, IntPoly};
use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type MPoly = Vec<BigInt>;

#[derive(Clone, Debug)]
pub struct Zmod {
    pub m: BigInt,
}

fn fnv_mix(h: &mut u64, bytes: &[u8]) {
    for &b in bytes {
        *h ^= b as u64;
        *h = h.wrapping_mul(0x100000001b3);
    }
}

fn stable_seed(m: &BigInt, f: &[BigInt]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    fnv_mix(&mut h, &m.to_signed_bytes_le());
    for c in f {
        fnv_mix(&mut h, &c.to_signed_bytes_le());
        fnv_mix(&mut h, &[0xff]);
    }
    h
}

impl Zmod {
    pub fn new(m: BigInt) -> Self {
        assert!(m >= BigInt::from(2));
        Zmod { m }
    }

    pub fn reduce_int(&self, x: &BigInt) -> BigInt {
        x.mod_floor(&self.m)
    }

    pub fn reduce(&self, f: &IntPoly) -> MPoly {
        intpoly::trim(f.iter().map(|c| self.reduce_int(c)).collect())
    }

    pub fn t() -> MPoly {
        vec![BigInt::zero(), BigInt::one()]
    }

    pub fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        intpoly::trim(
            (0..n)
                .map(|i| self.reduce_int(&(a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))))
                .collect(),
        )
    }

    pub fn sub(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        intpoly::trim(
            (0..n)
                .map(|i| self.reduce_int(&(a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))))
                .collect(),
        )
    }

    pub fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
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
        intpoly::trim(out.iter().map(|c| self.reduce_int(c)).collect())
    }

    pub fn mul_scalar(&self, a: &MPoly, c: &BigInt) -> MPoly {
        intpoly::trim(a.iter().map(|x| self.reduce_int(&(x * c))).collect())
    }

    pub fn inv_scalar(&self, c: &BigInt) -> Option<BigInt> {
        crate::rat::mod_inverse(c, &self.m)
    }

    /// Division with remainder; the divisor's leading coefficient must be a
    /// unit mod m (always true for the monic divisors used internally).
    pub fn divrem(&self, a: &MPoly, d: &MPoly) -> (MPoly, MPoly) {
        assert!(!d.is_empty(), "division by zero polynomial mod m");
        let lc_inv = self
            .inv_scalar(d.last().unwrap())
            .expect("divisor leading coefficient is not a unit");
        if a.len() < d.len() {
            return (Vec::new(), a.clone());
        }
        let dd = intpoly::deg(d);
        let mut rem = a.clone();
        let mut quot = vec![BigInt::zero(); a.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = self.reduce_int(&(&rem[i] * &lc_inv));
            for j in 0..dd {
                let s = &d[j] * &q;
                rem[i - dd + j] = self.reduce_int(&(&rem[i - dd + j] - s));
            }
            rem[i] = BigInt::zero();
            quot[i - dd] = q;
        }
        (intpoly::trim(quot), intpoly::trim(rem))
    }

    pub fn rem(&self, a: &MPoly, d: &MPoly) -> MPoly {
        self.divrem(a, d).1
    }

    pub fn make_monic(&self, a: &MPoly) -> MPoly {
        match a.last() {
            None => Vec::new(),
            Some(lc) if lc.is_one() => a.clone(),
            Some(lc) => {
                let inv = self.inv_scalar(lc).expect("leading coefficient not a unit");
                self.mul_scalar(a, &inv)
            }
        }
    }

    pub fn derivative(&self, a: &MPoly) -> MPoly {
        if a.len() <= 1 {
            return Vec::new();
        }
        intpoly::trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.reduce_int(&(c * BigInt::from(i))))
                .collect(),
        )
    }

    /// Monic gcd over F_p (m must be prime).
    pub fn gcd(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let mut a = self.make_monic(a);
        let mut b = self.make_monic(b);
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = self.make_monic(&r);
        }
        a
    }

    /// Bezout pair for coprime `f, g` over F_p: `s*f + t*g = 1` with
    /// `deg s < deg g` and `deg t < deg f`.
    pub fn bezout(&self, f: &MPoly, g: &MPoly) -> (MPoly, MPoly) {
        let (mut r0, mut r1) = (f.clone(), g.clone());
        let (mut s0, mut s1) = (vec![BigInt::one()], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![BigInt::one()]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let ns = self.sub(&s0, &self.mul(&q, &s1));
            let nt = self.sub(&t0, &self.mul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = ns;
            t0 = t1;
            t1 = nt;
        }
        assert_eq!(r0.len(), 1, "bezout of non-coprime polynomials");
        let c_inv = self.inv_scalar(&r0[0]).unwrap();
        let mut s = self.mul_scalar(&s0, &c_inv);
        let mut t = self.mul_scalar(&t0, &c_inv);
        // normalize degrees: s mod g, fold the quotient into t
        if s.len() >= g.len() {
            let (q, r) = self.divrem(&s, g);
            s = r;
            t = self.add(&t, &self.mul(&q, f));
        }
        debug_assert!(t.len() < f.len().max(2));
        (s, t)
    }

    pub fn pow_mod(&self, base: &MPoly, exp: &BigUint, modulus: &MPoly) -> MPoly {
        let mut result = vec![BigInt::one()];
        let mut base = self.rem(base, modulus);
        let bits = exp.bits();
        for i in 0..bits {
            if exp.bit(i) {
                result = self.rem(&self.mul(&result, &base), modulus);
            }
            if i + 1 < bits {
                base = self.rem(&self.mul(&base, &base), modulus);
            }
        }
        result
    }

    fn char_p_root(&self, a: &MPoly) -> MPoly {
        // a has a' = 0 over F_p, so only exponents divisible by p appear;
        // coefficients are Frobenius-fixed in the prime field
        let p = self.m.to_usize().expect("characteristic fits usize");
        let mut out = Vec::new();
        for (i, c) in a.iter().enumerate() {
            if i % p == 0 {
                out.push(c.clone());
            } else {
                debug_assert!(c.is_zero());
            }
        }
        intpoly::trim(out)
    }

    /// Squarefree decomposition over F_p of a monic polynomial: pairwise
    /// coprime squarefree monic parts with multiplicities.
    pub fn squarefree_decomposition(&self, f: &MPoly) -> Vec<(MPoly, usize)> {
        assert!(intpoly::is_monic(f));
        if f.len() <= 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let deriv = self.derivative(f);
        let mut c = if deriv.is_empty() {
            f.clone()
        } else {
            self.gcd(f, &deriv)
        };
        let mut w = self.divrem(f, &c).0;
        let mut i = 1usize;
        while w.len() > 1 {
            let y = self.gcd(&w, &c);
            let fac = self.divrem(&w, &y).0;
            if fac.len() > 1 {
                out.push((fac, i));
            }
            w = y.clone();
            c = self.divrem(&c, &y).0;
            i += 1;
        }
        if c.len() > 1 {
            let root = self.char_p_root(&c);
            let p = self.m.to_usize().expect("characteristic fits usize");
            for (g, j) in self.squarefree_decomposition(&root) {
                out.push((g, j * p));
            }
        }
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// Distinct-degree decomposition of a squarefree monic polynomial:
    /// pairs `(k, product of all irreducible factors of degree k)`.
    pub fn distinct_degree(&self, f: &MPoly) -> Vec<(usize, MPoly)> {
        let mut out = Vec::new();
        let mut g = f.clone();
        let mut h = self.rem(&Self::t(), &g);
        let p = self.m.to_biguint().unwrap();
        let mut k = 1usize;
        while g.len() >= 2 * k + 1 {
            h = self.pow_mod(&h, &p, &g);
            let diff = self.sub(&h, &Self::t());
            let d = self.gcd(&diff, &g);
            if d.len() > 1 {
                out.push((k, d.clone()));
                g = self.divrem(&g, &d).0;
                h = self.rem(&h, &g);
            }
            k += 1;
        }
        if g.len() > 1 {
            out.push((intpoly::deg(&g), g));
        }
        out
    }

    /// Splits a squarefree monic product of degree-`d` irreducibles into its
    /// irreducible factors (Cantor-Zassenhaus).
    pub fn equal_degree(&self, f: &MPoly, d: usize) -> Vec<MPoly> {
        let deg_f = intpoly::deg(f);
        if deg_f == d {
            return vec![f.clone()];
        }
        let mut rng = ChaCha8Rng::seed_from_u64(stable_seed(&self.m, f));
        let two = BigInt::from(2);
        loop {
            let a: MPoly = intpoly::trim(
                (0..deg_f)
                    .map(|_| rng.gen_bigint_range(&BigInt::zero(), &self.m))
                    .collect(),
            );
            if a.len() <= 1 {
                continue;
            }
            let g1 = self.gcd(&a, f);
            let cand = if g1.len() > 1 && g1.len() < f.len() {
                g1
            } else if self.m == two {
                // trace map over F_2: a + a^2 + ... + a^(2^(d-1))
                let mut tr = a.clone();
                let mut sq = a.clone();
                for _ in 1..d {
                    sq = self.rem(&self.mul(&sq, &sq), f);
                    tr = self.add(&tr, &sq);
                }
                self.gcd(&tr, f)
            } else {
                let q = self.m.to_biguint().unwrap().pow(d as u32);
                let e = (&q - BigUint::one()) / BigUint::from(2u32);
                let b = self.pow_mod(&a, &e, f);
                let b1 = self.sub(&b, &[BigInt::one()][..].to_vec());
                self.gcd(&b1, f)
            };
            if cand.len() > 1 && cand.len() < f.len() {
                let rest = self.divrem(f, &cand).0;
                let mut out = self.equal_degree(&cand, d);
                out.extend(self.equal_degree(&rest, d));
                return out;
            }
        }
    }

    /// Full factorization over F_p of a monic nonconstant polynomial.
    /// Factors are monic irreducible, sorted, with multiplicities.
    pub fn factor(&self, f: &MPoly) -> Vec<(MPoly, usize)> {
        let mut out: Vec<(MPoly, usize)> = Vec::new();
        for (part, mult) in self.squarefree_decomposition(f) {
            for (d, prod) in self.distinct_degree(&part) {
                for irr in self.equal_degree(&prod, d) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    pub fn is_squarefree(&self, f: &MPoly) -> bool {
        let deriv = self.derivative(f);
        if deriv.is_empty() {
            return f.len() <= 2;
        }
        self.gcd(f, &deriv).len() == 1
    }
}

/// The field `F_p[z] / (modulus)`, used for residual polynomials in the
/// Newton-polygon splitting backend. Elements are reduced `MPoly`s.
#[derive(Clone, Debug)]
pub struct Fq {
    pub fp: Zmod,
    pub modulus: MPoly,
}

pub type FqElem = MPoly;
pub type FqPoly = Vec<FqElem>;

impl Fq {
    pub fn new(p: BigInt, modulus: MPoly) -> Self {
        assert!(modulus.len() >= 2);
        Fq {
            fp: Zmod::new(p),
            modulus,
        }
    }

    pub fn q(&self) -> BigUint {
        self.fp
            .m
            .to_biguint()
            .unwrap()
            .pow(intpoly::deg(&self.modulus) as u32)
    }

    pub fn reduce(&self, a: &IntPoly) -> FqElem {
        self.fp.rem(&self.fp.reduce(a), &self.modulus)
    }

    pub fn one(&self) -> FqElem {
        vec![BigInt::one()]
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.fp.add(a, b)
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.fp.sub(a, b)
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.fp.rem(&self.fp.mul(a, b), &self.modulus)
    }

    pub fn inv(&self, a: &FqElem) -> FqElem {
        assert!(!a.is_empty(), "inverse of zero in F_q");
        let (s, _) = self.fp.bezout(a, &self.modulus);
        s
    }

    fn elem_scale(&self, a: &FqElem, c: &FqElem) -> FqElem {
        self.mul(a, c)
    }

    pub fn poly_trim(f: &mut FqPoly) {
        while f.last().map_or(false, |c| c.is_empty()) {
            f.pop();
        }
    }

    pub fn poly_deg(f: &FqPoly) -> usize {
        debug_assert!(!f.is_empty());
        f.len() - 1
    }

    pub fn poly_is_monic(&self, f: &FqPoly) -> bool {
        f.last().map_or(false, |c| c == &self.one())
    }

    pub fn poly_sub(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let n = a.len().max(b.len());
        let empty: FqElem = Vec::new();
        let mut out: FqPoly = (0..n)
            .map(|i| self.sub(a.get(i).unwrap_or(&empty), b.get(i).unwrap_or(&empty)))
            .collect();
        Self::poly_trim(&mut out);
        out
    }

    pub fn poly_mul(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out: FqPoly = vec![Vec::new(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_empty() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_empty() {
                    continue;
                }
                let prod = self.mul(x, y);
                out[i + j] = self.add(&out[i + j], &prod);
            }
        }
        Self::poly_trim(&mut out);
        out
    }

    pub fn poly_divrem(&self, a: &FqPoly, d: &FqPoly) -> (FqPoly, FqPoly) {
        assert!(!d.is_empty());
        if a.len() < d.len() {
            return (Vec::new(), a.clone());
        }
        let lc_inv = self.inv(d.last().unwrap());
        let dd = d.len() - 1;
        let mut rem = a.clone();
        let mut quot: FqPoly = vec![Vec::new(); a.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_empty() {
                continue;
            }
            let q = self.elem_scale(&rem[i], &lc_inv);
            for j in 0..dd {
                let s = self.mul(&d[j], &q);
                rem[i - dd + j] = self.sub(&rem[i - dd + j], &s);
            }
            rem[i] = Vec::new();
            quot[i - dd] = q;
        }
        Self::poly_trim(&mut rem);
        Self::poly_trim(&mut quot);
        (quot, rem)
    }

    pub fn poly_make_monic(&self, a: &FqPoly) -> FqPoly {
        match a.last() {
            None => Vec::new(),
            Some(lc) if lc == &self.one() => a.clone(),
            Some(lc) => {
                let inv = self.inv(lc);
                let mut out: FqPoly = a.iter().map(|c| self.elem_scale(c, &inv)).collect();
                Self::poly_trim(&mut out);
                out
            }
        }
    }

    pub fn poly_gcd(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let mut a = self.poly_make_monic(a);
        let mut b = self.poly_make_monic(b);
        while !b.is_empty() {
            let (_, r) = self.poly_divrem(&a, &b);
            a = b;
            b = self.poly_make_monic(&r);
        }
        a
    }

    pub fn poly_derivative(&self, a: &FqPoly) -> FqPoly {
        if a.len() <= 1 {
            return Vec::new();
        }
        let mut out: FqPoly = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let k = self.fp.reduce_int(&BigInt::from(i));
                self.fp.mul_scalar(c, &k)
            })
            .collect();
        Self::poly_trim(&mut out);
        out
    }

    pub fn poly_is_squarefree(&self, f: &FqPoly) -> bool {
        if f.len() <= 2 {
            return true;
        }
        let deriv = self.poly_derivative(f);
        if deriv.is_empty() {
            return false;
        }
        self.poly_gcd(f, &deriv).len() == 1
    }

    pub fn poly_pow_mod(&self, base: &FqPoly, exp: &BigUint, modulus: &FqPoly) -> FqPoly {
        let mut result: FqPoly = vec![self.one()];
        let mut base = self.poly_divrem(base, modulus).1;
        let bits = exp.bits();
        for i in 0..bits {
            if exp.bit(i) {
                result = self.poly_divrem(&self.poly_mul(&result, &base), modulus).1;
            }
            if i + 1 < bits {
                base = self.poly_divrem(&self.poly_mul(&base, &base), modulus).1;
            }
        }
        result
    }

    /// Degrees (with counts) of the irreducible factors of a squarefree
    /// monic polynomial over F_q. Only the degrees are needed by the
    /// splitting backend, so equal-degree splitting is skipped.
    pub fn poly_factor_degrees(&self, f: &FqPoly) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut g = f.clone();
        let y: FqPoly = vec![Vec::new(), self.one()];
        let mut h = self.poly_divrem(&y, &g).1;
        let q = self.q();
        let mut k = 1usize;
        while g.len() >= 2 * k + 1 {
            h = self.poly_pow_mod(&h, &q, &g);
            let diff = self.poly_sub(&h, &y);
            let d = self.poly_gcd(&diff, &g);
            if d.len() > 1 {
                out.push((k, (d.len() - 1) / k));
                g = self.poly_divrem(&g, &d).0;
                h = self.poly_divrem(&h, &g).1;
            }
            k += 1;
        }
        if g.len() > 1 {
            out.push((g.len() - 1, 1));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(v: &[i64]) -> MPoly {
        intpoly::trim(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_and_bezout_mod_p() {
        let z = Zmod::new(BigInt::from(7));
        let f = z.reduce(&mp(&[1, 0, 1])); // t^2+1
        let g = z.reduce(&mp(&[3, 1])); // t+3
        let d = z.gcd(&f, &g);
        assert_eq!(d, mp(&[1]));
        let (s, t) = z.bezout(&f, &g);
        let lhs = z.add(&z.mul(&s, &f), &z.mul(&t, &g));
        assert_eq!(lhs, mp(&[1]));
        assert!(s.len() < g.len().max(2));
    }

    #[test]
    fn factor_mod_5() {
        let z = Zmod::new(BigInt::from(5));
        // t^2 + 1 = (t+2)(t+3) mod 5
        let f = mp(&[1, 0, 1]);
        let fac = z.factor(&f);
        assert_eq!(fac, vec![(mp(&[2, 1]), 1), (mp(&[3, 1]), 1)]);
    }

    #[test]
    fn factor_mod_2_with_multiplicity() {
        let z = Zmod::new(BigInt::from(2));
        // t^4 + t^2 = t^2 (t+1)^2 mod 2
        let f = mp(&[0, 0, 1, 0, 1]);
        let fac = z.factor(&f);
        assert_eq!(fac, vec![(mp(&[0, 1]), 2), (mp(&[1, 1]), 2)]);
        // t^2 + t + 1 is irreducible mod 2
        let g = mp(&[1, 1, 1]);
        assert_eq!(z.factor(&g), vec![(g.clone(), 1)]);
    }

    #[test]
    fn factor_equal_degree_split() {
        let z = Zmod::new(BigInt::from(3));
        // (t^2+1)(t^2+t+2) are both irreducible mod 3
        let a = mp(&[1, 0, 1]);
        let b = mp(&[2, 1, 1]);
        let f = z.mul(&a, &b);
        let fac = z.factor(&f);
        assert_eq!(fac, vec![(a, 1), (b, 1)]);
    }

    #[test]
    fn factor_high_power() {
        let z = Zmod::new(BigInt::from(3));
        // (t+1)^9 mod 3 exercises the p-th root path twice
        let mut f = mp(&[1, 1]);
        let base = f.clone();
        for _ in 1..9 {
            f = z.mul(&f, &base);
        }
        assert_eq!(z.factor(&f), vec![(mp(&[1, 1]), 9)]);
    }

    #[test]
    fn ddf_reports_degrees() {
        let z = Zmod::new(BigInt::from(2));
        // t^4+t+1 irreducible mod 2; (t^2+t+1) irreducible; product squarefree
        let f = z.mul(&mp(&[1, 1, 0, 0, 1]), &mp(&[1, 1, 1]));
        let dd = z.distinct_degree(&f);
        assert_eq!(dd.len(), 2);
        assert_eq!(dd[0].0, 2);
        assert_eq!(dd[1].0, 4);
    }

    #[test]
    fn fq_arithmetic_and_ddf() {
        // F_4 = F_2[z]/(z^2+z+1)
        let fq = Fq::new(BigInt::from(2), mp(&[1, 1, 1]));
        let z_elem: FqElem = mp(&[0, 1]);
        // z * (z+1) = z^2+z = 1 in F_4
        let prod = fq.mul(&z_elem, &mp(&[1, 1]));
        assert_eq!(prod, mp(&[1]));
        assert_eq!(fq.inv(&z_elem), mp(&[1, 1]));
        // y^2 + y + z splits into two linears or is irreducible over F_4;
        // check via degree bookkeeping that the total degree is conserved
        let f: FqPoly = vec![z_elem.clone(), fq.one(), fq.one()];
        let degs = fq.poly_factor_degrees(&f);
        let total: usize = degs.iter().map(|(d, c)| d * c).sum();
        assert_eq!(total, 2);
        // y^2 - z^2 = (y-z)(y+z) is not squarefree in char 2? (y+z)^2 = y^2+z^2
        let sq: FqPoly = vec![fq.mul(&z_elem, &z_elem), Vec::new(), fq.one()];
        assert!(!fq.poly_is_squarefree(&sq));
        let sf: FqPoly = vec![z_elem.clone(), fq.one()];
        assert!(fq.poly_is_squarefree(&sf));
    }

    #[test]
    fn pow_mod_fermat() {
        // t^3+t+1 = (t+6)(t^2+7t+11) mod 13, the quadratic irreducible
        let z = Zmod::new(BigInt::from(13));
        let f = mp(&[1, 1, 0, 1]);
        assert_eq!(z.mul(&mp(&[6, 1]), &mp(&[11, 7, 1])), f);
        let t = Zmod::t();
        // gcd with t^(13^k) - t picks out the factors of degree dividing k
        let q3 = BigUint::from(13u32).pow(3);
        let lhs3 = z.pow_mod(&t, &q3, &f);
        assert_eq!(z.gcd(&z.sub(&lhs3, &t), &f), mp(&[6, 1]));
        // degree dividing 2 catches both factors, so the gcd is f itself
        let q2 = BigUint::from(13u32).pow(2);
        let lhs2 = z.pow_mod(&t, &q2, &f);
        assert_eq!(z.gcd(&z.sub(&lhs2, &t), &f), f);
    }
}
