//! Factorization of monic polynomials over Q.
//!
//! The pipeline is: strip powers of `t`, squarefree decomposition, then for
//! each squarefree part rescale to a monic integer polynomial, pull out
//! integer roots, and run Zassenhaus: factor modulo a good prime, Hensel-lift
//! to a Mignotte-style coefficient bound, and recombine subsets of the lifted
//! factors by trial division. Lattice-based recombination is deliberately
//! absent; inputs are desk scale.

use crate::error::{Error, Result};
use crate::intfactor;
use crate::intpoly::{self, IntPoly};
use crate::poly::RatPoly;
use crate::rat::Rat;
use crate::zmod::Zmod;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Monic irreducible factors with multiplicities, in the canonical order
/// (degree, then ascending-coefficient lexicographic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(RatPoly, usize)>,
}

impl Factorization {
    pub fn product(&self) -> RatPoly {
        let mut out = RatPoly::one();
        for (g, m) in &self.factors {
            out = &out * &g.pow(*m);
        }
        out
    }

    /// The distinct irreducible factors, without multiplicities.
    pub fn support(&self) -> Vec<RatPoly> {
        self.factors.iter().map(|(g, _)| g.clone()).collect()
    }

    pub fn is_single_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factors a monic nonconstant polynomial into monic irreducibles.
pub fn factor_over_q(f: &RatPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NonMonic(f.leading().unwrap().to_string()));
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let mut factors: Vec<(RatPoly, usize)> = Vec::new();
    // powers of t first, so every later part has nonzero constant term
    let t_order = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    let rest = RatPoly::from_coeffs(f.coeffs()[t_order..].to_vec());
    if t_order > 0 {
        factors.push((RatPoly::variable(), t_order));
    }
    if !rest.is_one() {
        for (part, mult) in rest.squarefree_decomposition()? {
            for g in factor_squarefree(&part)? {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Factorization { factors })
}

/// True when a monic nonconstant polynomial is irreducible over Q.
pub fn is_irreducible(f: &RatPoly) -> Result<bool> {
    Ok(factor_over_q(f)?.is_single_irreducible())
}

fn factor_squarefree(g: &RatPoly) -> Result<Vec<RatPoly>> {
    debug_assert!(g.is_monic() && !g.is_constant());
    if g.deg() == 1 {
        return Ok(vec![g.clone()]);
    }
    let (p_int, d) = g.integral_model()?;
    let int_factors = factor_squarefree_monic_int(&p_int);
    if d.is_one() {
        return Ok(int_factors.iter().map(|h| intpoly::to_rat_poly(h)).collect());
    }
    // undo t -> t/D: H(t) becomes H(D t) / D^deg
    Ok(int_factors
        .iter()
        .map(|h| {
            let n = intpoly::deg(h);
            RatPoly::from_coeffs(
                h.iter()
                    .enumerate()
                    .map(|(i, c)| Rat::new(c.clone(), d.pow((n - i) as u32)))
                    .collect(),
            )
        })
        .collect())
}

/// Factors a monic squarefree integer polynomial with nonzero constant term.
fn factor_squarefree_monic_int(p: &IntPoly) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut current = p.clone();
    debug_assert!(!intpoly::eval(&current, &BigInt::zero()).is_zero());
    for r in integer_roots(&current) {
        let lin = vec![-r, BigInt::one()];
        current = intpoly::divrem_monic(&current, &lin).0;
        out.push(lin);
    }
    if intpoly::deg(&current) >= 2 {
        out.extend(zassenhaus(&current));
    } else if intpoly::deg(&current) == 1 {
        out.push(current);
    }
    out
}

/// Integer roots of a monic integer polynomial with nonzero constant term.
/// Candidates are divisors of the constant term within the Cauchy bound;
/// if the constant term resists factorization the step is skipped and the
/// modular machinery picks the linear factors up instead.
fn integer_roots(p: &IntPoly) -> Vec<BigInt> {
    let c0 = intpoly::eval(p, &BigInt::zero()).magnitude().clone();
    let cauchy = BigInt::one()
        + p.iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
    let mut roots = Vec::new();
    let divs = match intfactor::divisors(&c0) {
        Ok(d) => d,
        Err(_) => return roots,
    };
    for d in divs {
        let d = BigInt::from(d);
        if d > cauchy {
            break;
        }
        for cand in [d.clone(), -d] {
            if intpoly::eval(p, &cand).is_zero() {
                roots.push(cand);
            }
        }
    }
    roots.sort();
    roots
}

fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| intfactor::is_prime(&BigUint::from(n)))
}

fn modular_factor_count(z: &Zmod, f_bar: &[BigInt]) -> usize {
    z.distinct_degree(&f_bar.to_vec())
        .iter()
        .map(|(k, prod)| intpoly::deg(prod) / k)
        .sum()
}

fn symmetric_lift(z: &Zmod, f: &[BigInt]) -> IntPoly {
    let half = &z.m / 2;
    intpoly::trim(
        f.iter()
            .map(|c| if c > &half { c - &z.m } else { c.clone() })
            .collect(),
    )
}

/// Zassenhaus on a monic squarefree integer polynomial of degree >= 2 with
/// nonzero constant term.
fn zassenhaus(p: &IntPoly) -> Vec<IntPoly> {
    let n = intpoly::deg(p);
    // choose among the first few usable primes the one with the fewest
    // modular factors
    let mut best: Option<(u64, usize)> = None;
    let mut inspected = 0;
    for q in primes_from(2) {
        let z = Zmod::new(BigInt::from(q));
        let f_bar = z.reduce(p);
        if f_bar.len() != n + 1 || !z.is_squarefree(&f_bar) {
            continue;
        }
        let count = modular_factor_count(&z, &f_bar);
        if best.as_ref().map_or(true, |&(_, c)| count < c) {
            best = Some((q, count));
        }
        inspected += 1;
        if inspected >= 4 || count == 1 {
            break;
        }
    }
    let (q, count) = best.expect("squarefree integer polynomial has good primes");
    if count == 1 {
        return vec![p.clone()];
    }
    let zp = Zmod::new(BigInt::from(q));
    let modular: Vec<Vec<BigInt>> = zp
        .factor(&zp.reduce(p))
        .into_iter()
        .map(|(g, m)| {
            debug_assert_eq!(m, 1);
            g
        })
        .collect();
    // Mignotte-style bound: any monic divisor has coefficients bounded by
    // 2^n * ||p||_2 <= 2^n * sqrt(n+1) * max|coeff|
    let height = p.iter().map(|c| c.abs()).max().unwrap();
    let sqrt_part = BigInt::from(((n + 1) as f64).sqrt().ceil() as u64 + 1);
    let bound = (BigInt::one() << n) * sqrt_part * height;
    let mut k = 1usize;
    let big_q = BigInt::from(q);
    let mut qk = big_q.clone();
    let two_bound = &bound * 2;
    while qk <= two_bound {
        qk *= &big_q;
        k += 1;
    }
    let lifted = hensel_lift_list(&big_q, k, p, &modular);
    let zk = Zmod::new(big_q.pow(k as u32));
    recombine(&zk, p, lifted)
}

/// Lifts a factorization mod q of `target` (monic) to mod q^k, splitting the
/// factor list in halves and lifting each pair quadratically.
fn hensel_lift_list(q: &BigInt, k: usize, target: &IntPoly, factors: &[Vec<BigInt>]) -> Vec<IntPoly> {
    if factors.len() == 1 {
        let zk = Zmod::new(q.pow(k as u32));
        return vec![zk.reduce(target)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let zp = Zmod::new(q.clone());
    let mut f = left
        .iter()
        .fold(vec![BigInt::one()], |acc, g| zp.mul(&acc, g));
    let mut g = right
        .iter()
        .fold(vec![BigInt::one()], |acc, h| zp.mul(&acc, h));
    let (mut s, mut t) = zp.bezout(&f, &g);
    let mut j = 1usize;
    while j < k {
        let j2 = (2 * j).min(k);
        let z2 = Zmod::new(q.pow(j2 as u32));
        let h = z2.reduce(target);
        let e = z2.sub(&h, &z2.mul(&f, &g));
        let (quo, rem) = z2.divrem(&z2.mul(&s, &e), &g);
        let g_new = z2.add(&g, &rem);
        let f_new = z2.add(&f, &z2.add(&z2.mul(&t, &e), &z2.mul(&quo, &f)));
        let e2 = z2.sub(
            &z2.add(&z2.mul(&s, &f_new), &z2.mul(&t, &g_new)),
            &vec![BigInt::one()],
        );
        let (q2, r2) = z2.divrem(&z2.mul(&s, &e2), &g_new);
        let s_new = z2.sub(&s, &r2);
        let t_new = z2.sub(&t, &z2.add(&z2.mul(&t, &e2), &z2.mul(&q2, &f_new)));
        f = f_new;
        g = g_new;
        s = s_new;
        t = t_new;
        j = j2;
    }
    debug_assert_eq!(
        Zmod::new(q.pow(k as u32)).mul(&f, &g),
        Zmod::new(q.pow(k as u32)).reduce(target)
    );
    let mut out = hensel_lift_list(q, k, &f, left);
    out.extend(hensel_lift_list(q, k, &g, right));
    out
}

/// Subset recombination: smallest subsets first, trial division against the
/// remaining cofactor.
fn recombine(zk: &Zmod, p: &IntPoly, mut lifted: Vec<IntPoly>) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut current = p.clone();
    let mut size = 1usize;
    'outer: while 2 * size <= lifted.len() {
        let indices: Vec<usize> = (0..lifted.len()).collect();
        for combo in Combinations::new(indices.len(), size) {
            let prod = combo.iter().fold(vec![BigInt::one()], |acc, &i| {
                zk.mul(&acc, &lifted[i])
            });
            let candidate = symmetric_lift(zk, &prod);
            let c0 = intpoly::eval(&candidate, &BigInt::zero());
            let p0 = intpoly::eval(&current, &BigInt::zero());
            if c0.is_zero() || !(&p0 % &c0).is_zero() {
                continue;
            }
            if intpoly::divides_monic(&candidate, &current) {
                current = intpoly::divrem_monic(&current, &candidate).0;
                out.push(candidate);
                let keep: Vec<IntPoly> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, g)| g.clone())
                    .collect();
                lifted = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if intpoly::deg(&current) > 0 {
        out.push(current);
    }
    out
}

/// Lexicographic k-subsets of 0..n.
struct Combinations {
    n: usize,
    k: usize,
    state: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let state = if k <= n {
            Some((0..k).collect())
        } else {
            None
        };
        Combinations { n, k, state }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.state.clone()?;
        // advance
        let mut next = current.clone();
        let mut i = self.k;
        loop {
            if i == 0 {
                self.state = None;
                break;
            }
            i -= 1;
            if next[i] + 1 <= self.n - (self.k - i) {
                next[i] += 1;
                for j in i + 1..self.k {
                    next[j] = next[j - 1] + 1;
                }
                self.state = Some(next);
                break;
            }
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn p(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_ints(coeffs)
    }

    fn fac(f: &RatPoly) -> Vec<(RatPoly, usize)> {
        factor_over_q(f).unwrap().factors
    }

    #[test]
    fn rejects_bad_input() {
        assert!(factor_over_q(&RatPoly::zero()).is_err());
        assert!(factor_over_q(&p(&[2, 0, 2])).is_err());
        assert!(factor_over_q(&p(&[5])).is_err());
        assert!(factor_over_q(&RatPoly::one()).is_err());
    }

    #[test]
    fn quadratics() {
        assert_eq!(fac(&p(&[-2, 0, 1])), vec![(p(&[-2, 0, 1]), 1)]);
        assert_eq!(fac(&p(&[-1, 0, 1])), vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
        assert_eq!(fac(&p(&[1, 0, 1])), vec![(p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn quartic_t4_plus_1_is_irreducible() {
        // frozen against the brute-force pair search below
        let f = p(&[1, 0, 0, 0, 1]);
        assert!(brute_force_irreducible_deg4(&[1, 0, 0, 0, 1]));
        assert_eq!(fac(&f), vec![(f.clone(), 1)]);
        assert!(is_irreducible(&f).unwrap());
    }

    /// Test oracle: degree-4 monic integer polynomial is irreducible iff it
    /// has no rational root and no monic quadratic integer factor within the
    /// Mignotte-style coefficient window.
    fn brute_force_irreducible_deg4(coeffs: &[i64; 5]) -> bool {
        let f: IntPoly = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        let height = coeffs.iter().map(|c| c.abs()).max().unwrap();
        let window = 16 * 3 * height; // 2^4 * ceil(sqrt(5)) * height
        let c0 = coeffs[0];
        for r in -c0.abs()..=c0.abs() {
            if r != 0 && c0 % r == 0 {
                let rr = BigInt::from(r);
                if intpoly::eval(&f, &rr).is_zero() {
                    return false;
                }
            }
        }
        for a in -window..=window {
            for b in -window..=window {
                let g: IntPoly = vec![BigInt::from(b), BigInt::from(a), BigInt::one()];
                if intpoly::divides_monic(&g, &f) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn product_splits_back() {
        let f = &p(&[1, 0, 1]) * &p(&[-2, 0, 1]);
        assert_eq!(fac(&f), vec![(p(&[-2, 0, 1]), 1), (p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn multiplicities_and_ordering() {
        let f = &p(&[-1, 1]).pow(2) * &p(&[1, 0, 1]);
        assert_eq!(fac(&f), vec![(p(&[-1, 1]), 2), (p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn powers_of_t() {
        assert_eq!(fac(&p(&[0, 0, 0, 1])), vec![(p(&[0, 1]), 3)]);
        let f = &p(&[0, 1]) * &p(&[1, 0, 1]);
        assert_eq!(fac(&f), vec![(p(&[0, 1]), 1), (p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn rational_coefficients() {
        // t^2 - 1/4 = (t - 1/2)(t + 1/2)
        let f = RatPoly::from_coeffs(vec![rat(-1, 4), rat_int(0), rat_int(1)]);
        let halves = fac(&f);
        assert_eq!(halves.len(), 2);
        assert_eq!(
            halves[0].0,
            RatPoly::from_coeffs(vec![rat(-1, 2), rat_int(1)])
        );
        assert_eq!(
            halves[1].0,
            RatPoly::from_coeffs(vec![rat(1, 2), rat_int(1)])
        );
        // t^2 + t/2 + 1/16 = (t + 1/4)^2? (t+1/4)^2 = t^2 + t/2 + 1/16
        let g = RatPoly::from_coeffs(vec![rat(1, 16), rat(1, 2), rat_int(1)]);
        let sq = fac(&g);
        assert_eq!(sq, vec![(RatPoly::from_coeffs(vec![rat(1, 4), rat_int(1)]), 2)]);
    }

    #[test]
    fn quintic_cyclotomic_is_irreducible() {
        let f = p(&[1, 1, 1, 1, 1]);
        assert_eq!(fac(&f), vec![(f.clone(), 1)]);
        let g = &p(&[1, 1, 1]) * &p(&[2, 0, 1]);
        assert_eq!(fac(&g), vec![(p(&[1, 1, 1]), 1), (p(&[2, 0, 1]), 1)]);
    }

    #[test]
    fn recombination_must_group_modular_factors() {
        // t^4+1 and t^4-10t^2+1 each split modulo every prime, so no single
        // lifted factor is a true divisor and the subset search has to pair
        // them up
        let a = p(&[1, 0, 0, 0, 1]);
        let b = p(&[1, 0, -10, 0, 1]);
        let f = &a * &b;
        assert_eq!(fac(&f), vec![(b, 1), (a, 1)]);
    }

    #[test]
    fn degree_eight_product() {
        let parts = [p(&[1, 0, 1]), p(&[-2, 0, 1]), p(&[1, 1, 1]), p(&[3, 0, 1])];
        let mut f = RatPoly::one();
        for q in &parts {
            f = &f * q;
        }
        let got = fac(&f);
        assert_eq!(got.len(), 4);
        let mut expect: Vec<(RatPoly, usize)> =
            parts.iter().map(|q| (q.clone(), 1)).collect();
        expect.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(got, expect);
    }

    #[test]
    fn uneven_modular_split_recombines() {
        // modulo every usable small prime this splits as one big piece plus
        // several small ones, so the subset search must be willing to test a
        // factor covering more than half the degree
        let f = &p(&[-2, 0, 0, 1]) * &p(&[1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(
            fac(&f),
            vec![(p(&[-2, 0, 0, 1]), 1), (p(&[1, 0, 0, 1, 0, 0, 1]), 1)]
        );
    }

    #[test]
    fn combinations_enumerate() {
        let combos: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
        assert_eq!(
            combos,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(Combinations::new(2, 3).count(), 0);
        assert_eq!(Combinations::new(3, 3).count(), 1);
    }
}
