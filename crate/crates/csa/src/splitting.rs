//! Local splitting of number fields Q[t]/(g) at places of Q.
//!
//! For a finite place p the output is the list of (e, f) pairs of the primes
//! above p. When g stays squarefree mod p this is Dedekind's theorem and only
//! needs a distinct-degree factorization. Otherwise we build the phi-adic
//! Newton polygon of g over Z for each repeated modular factor phi and read
//! the pairs off the sides, provided every residual polynomial is squarefree
//! (Ore's regular case). Non-regular inputs are reported as unsupported
//! rather than guessed at.
//!
//! The splitting type is a property of the field, not of the generator, so
//! before giving up on a non-regular input the analysis is retried on the
//! minimal polynomials of other small generators of the same field. Only a
//! run that lands in the regular case is ever used; when every candidate is
//! non-regular too, the original error stands.
//!
//! Quadratic g is first rewritten as t^2 - m with m squarefree, which is the
//! same field and is regular at every place.

use crate::error::{Error, Result};
use crate::factor::is_irreducible;
use crate::intfactor::{self, is_prime};
use crate::intpoly::{self, IntPoly};
use crate::poly::RatPoly;
use crate::rat::{rat, rat_int, Rat};
use crate::zmod::{Fq, FqPoly, Zmod};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

/// A place of Q: a rational prime or the archimedean place.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(BigUint),
    Infinite,
}

impl Place {
    /// Wraps a known prime without checking; use `new_finite` for user input.
    pub fn finite(p: u64) -> Self {
        Place::Finite(BigUint::from(p))
    }

    pub fn new_finite(p: BigUint) -> Result<Self> {
        if is_prime(&p) {
            Ok(Place::Finite(p))
        } else {
            Err(Error::NonPrimePlace(p.to_string()))
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Place::Infinite)
    }

    pub fn prime(&self) -> Option<&BigUint> {
        match self {
            Place::Finite(p) => Some(p),
            Place::Infinite => None,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(out, "{}", p),
            Place::Infinite => write!(out, "inf"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" || s == "infinity" || s == "oo" {
            return Ok(Place::Infinite);
        }
        let p = BigUint::from_str(s)
            .map_err(|_| Error::NonPrimePlace(s.to_string()))?;
        Place::new_finite(p)
    }
}

/// One prime of Q[t]/(g) above a finite place, with ramification index `e`
/// and residue degree `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LocalFactor {
    pub e: usize,
    pub f: usize,
}

/// Splitting data of Q[t]/(g) at one place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplittingType {
    /// Primes above a finite place, sorted by (e, f).
    Finite { factors: Vec<LocalFactor> },
    /// Real and complex embeddings counted at the archimedean place.
    Archimedean { real: usize, complex: usize },
}

impl SplittingType {
    /// Degrees [F_w : Q_v] of the completions, with multiplicity.
    pub fn local_degrees(&self) -> Vec<usize> {
        match self {
            SplittingType::Finite { factors } => {
                factors.iter().map(|lf| lf.e * lf.f).collect()
            }
            SplittingType::Archimedean { real, complex } => {
                let mut out = vec![1; *real];
                out.extend(std::iter::repeat(2).take(*complex));
                out
            }
        }
    }

    pub fn total_degree(&self) -> usize {
        self.local_degrees().iter().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplittingBackend {
    /// Dedekind when the reduction is squarefree, Newton polygon otherwise.
    Auto,
    /// Dedekind only; errors when the reduction has repeated factors.
    KummerDedekind,
    /// Newton polygon machinery for every modular factor.
    NewtonPolygon,
}

pub fn local_splitting(g: &RatPoly, place: &Place) -> Result<SplittingType> {
    local_splitting_via(g, place, SplittingBackend::Auto)
}

pub fn local_splitting_via(
    g: &RatPoly,
    place: &Place,
    backend: SplittingBackend,
) -> Result<SplittingType> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !g.is_monic() {
        return Err(Error::NonMonic(g.leading().unwrap().to_string()));
    }
    if g.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if g.deg() <= 8 && !is_irreducible(g)? {
        return Err(Error::NotIrreducible(g.to_string()));
    }
    let g = normalize_quadratic(g);
    match place {
        Place::Infinite => {
            let real = g.distinct_real_roots()?;
            debug_assert_eq!((g.deg() - real) % 2, 0);
            Ok(SplittingType::Archimedean {
                real,
                complex: (g.deg() - real) / 2,
            })
        }
        Place::Finite(p) => {
            let (p_int, _) = g.integral_model()?;
            let factors = match finite_splitting(&p_int, p, backend, &g, place) {
                Ok(factors) => factors,
                Err(err @ Error::UnsupportedLocalComputation { .. })
                    if !matches!(backend, SplittingBackend::KummerDedekind) =>
                {
                    match sweep_generators(&p_int, p, backend, &g, place)? {
                        Some(factors) => factors,
                        None => return Err(err),
                    }
                }
                Err(err) => return Err(err),
            };
            debug_assert_eq!(
                factors.iter().map(|lf| lf.e * lf.f).sum::<usize>(),
                g.deg()
            );
            Ok(SplittingType::Finite { factors })
        }
    }
}

/// Replaces an irreducible quadratic by t^2 - m with m the squarefree kernel
/// of its discriminant. Falls back to the input when the discriminant
/// resists factoring.
fn normalize_quadratic(g: &RatPoly) -> RatPoly {
    if g.deg() != 2 {
        return g.clone();
    }
    let b = g.coeff(1);
    let c = g.coeff(0);
    let disc = &b * &b - Rat::from_integer(BigInt::from(4)) * c;
    match intfactor::squarefree_kernel(&disc) {
        Ok(m) => RatPoly::from_coeffs(vec![
            Rat::from_integer(-m),
            rat_int(0),
            rat_int(1),
        ]),
        Err(_) => g.clone(),
    }
}

fn finite_splitting(
    p_int: &IntPoly,
    p: &BigUint,
    backend: SplittingBackend,
    original: &RatPoly,
    place: &Place,
) -> Result<Vec<LocalFactor>> {
    let zp = Zmod::new(BigInt::from(p.clone()));
    let p_bar = zp.reduce(p_int);
    let squarefree = zp.is_squarefree(&p_bar);
    let use_dedekind = match backend {
        SplittingBackend::Auto => squarefree,
        SplittingBackend::KummerDedekind => {
            if !squarefree {
                return Err(Error::UnsupportedLocalComputation {
                    poly: original.to_string(),
                    place: place.to_string(),
                    detail: "reduction is not squarefree".into(),
                });
            }
            true
        }
        SplittingBackend::NewtonPolygon => false,
    };
    let mut factors = Vec::new();
    if use_dedekind {
        for (deg, prod) in zp.distinct_degree(&p_bar) {
            let count = intpoly::deg(&prod) / deg;
            for _ in 0..count {
                factors.push(LocalFactor { e: 1, f: deg });
            }
        }
    } else {
        for (phi_bar, mult) in zp.factor(&p_bar) {
            if mult == 1 {
                factors.push(LocalFactor {
                    e: 1,
                    f: intpoly::deg(&phi_bar),
                });
            } else {
                factors.extend(ramified_factors(
                    p_int, p, &phi_bar, mult, original, place,
                )?);
            }
        }
    }
    factors.sort();
    Ok(factors)
}

/// Retries the finite-place analysis on other generators of Q[t]/(g):
/// translations of the given root first, then seeded small polynomial
/// expressions in it. Returns the first run that avoids the non-regular
/// case, or None when every candidate hits it as well.
fn sweep_generators(
    p_int: &IntPoly,
    p: &BigUint,
    backend: SplittingBackend,
    original: &RatPoly,
    place: &Place,
) -> Result<Option<Vec<LocalFactor>>> {
    let h = RatPoly::from_coeffs(p_int.iter().cloned().map(Rat::from_integer).collect());
    let deg = h.deg();
    if deg < 2 {
        return Ok(None);
    }
    let digits = p.to_u64_digits();
    let p_small = if digits.len() == 1 { digits[0] } else { 0 };
    let mut candidates: Vec<RatPoly> = Vec::new();
    // translations: enough digits of p-adic root approximations to push a
    // repeated integer-slope side past its collision
    let translation_bound = match p_small {
        2 => 8,
        3 => 27,
        _ => 4,
    };
    for k in 1..=translation_bound {
        candidates.push(RatPoly::from_ints(&[k, 1]));
        candidates.push(RatPoly::from_ints(&[-k, 1]));
    }
    if p_small == 5 || p_small == 7 {
        let q = p_small as i64;
        for k in 1..q.min(5) {
            for c in [k * q, k * q * q] {
                candidates.push(RatPoly::from_ints(&[c, 1]));
                candidates.push(RatPoly::from_ints(&[-c, 1]));
            }
        }
    }
    // generators outside the equation order: (t^j + ... ) / p^s, numerator
    // coefficients running over residues mod p^s, which is the complete set
    // of p-adically distinct patterns at that denominator
    if p_small >= 2 && p_small <= 7 {
        let max_s = match p_small {
            2 => 3,
            3 => 2,
            _ => 1,
        };
        for s in 1u32..=max_s {
            let modulus = p_small.pow(s) as i64;
            for j in 1..deg {
                if (modulus as f64).powi(j as i32) > 4100.0 {
                    break;
                }
                let mut stamp = vec![0i64; j];
                loop {
                    let mut coeffs: Vec<Rat> =
                        stamp.iter().map(|a| rat(*a, modulus)).collect();
                    coeffs.push(rat(1, modulus));
                    candidates.push(RatPoly::from_coeffs(coeffs));
                    let mut pos = 0;
                    while pos < j {
                        stamp[pos] += 1;
                        if stamp[pos] < modulus {
                            break;
                        }
                        stamp[pos] = 0;
                        pos += 1;
                    }
                    if pos == j {
                        break;
                    }
                }
            }
        }
    }
    // random integer expressions catch separations the structured families
    // miss
    let mut rng = ChaCha8Rng::seed_from_u64(
        0xC5A0_5EED ^ p.iter_u64_digits().next().unwrap_or(0),
    );
    for _ in 0..128 {
        let q_deg = rng.gen_range(1..deg);
        let coeffs: Vec<Rat> = (0..=q_deg)
            .map(|i| {
                if i == q_deg {
                    rat_int([1, -1, 2, 3][rng.gen_range(0..4)])
                } else {
                    rat_int(rng.gen_range(-5..=5))
                }
            })
            .collect();
        candidates.push(RatPoly::from_coeffs(coeffs));
    }
    for q in candidates {
        let m = min_poly_in_quotient(&h, &q);
        if m.deg() != deg {
            continue;
        }
        let Ok((m_int, _)) = m.integral_model() else {
            continue;
        };
        if let Ok(factors) = finite_splitting(&m_int, p, backend, original, place) {
            return Ok(Some(factors));
        }
    }
    Ok(None)
}

/// Minimal polynomial of q(theta) in Q[theta]/(h), h monic: echelon
/// reduction of the powers of q mod h, tracking the combination that
/// produced each row.
fn min_poly_in_quotient(h: &RatPoly, q: &RatPoly) -> RatPoly {
    let dim = h.deg();
    let mut rows: Vec<(Vec<Rat>, Vec<Rat>, usize)> = Vec::new();
    let mut power = RatPoly::one();
    for k in 0..=dim {
        let mut vec: Vec<Rat> = (0..dim).map(|i| power.coeff(i)).collect();
        let mut combo = vec![Rat::zero(); k + 1];
        combo[k] = Rat::one();
        for (rv, rc, pivot) in &rows {
            let c = vec[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (t, r) in vec.iter_mut().zip(rv) {
                *t = &*t - &(&c * r);
            }
            for (idx, r) in rc.iter().enumerate() {
                combo[idx] = &combo[idx] - &(&c * r);
            }
        }
        match (0..dim).find(|&i| !vec[i].is_zero()) {
            None => return RatPoly::from_coeffs(combo),
            Some(pivot) => {
                let lead = vec[pivot].clone();
                for t in vec.iter_mut() {
                    *t = &*t / &lead;
                }
                let mut combo = combo;
                for t in combo.iter_mut() {
                    *t = &*t / &lead;
                }
                rows.push((vec, combo, pivot));
            }
        }
        power = (&power * q).divrem(h).expect("monic modulus").1;
    }
    unreachable!("a dependence appears within the dimension bound")
}

/// Newton polygon analysis at one repeated modular factor phi.
fn ramified_factors(
    p_int: &IntPoly,
    p: &BigUint,
    phi_bar: &Vec<BigInt>,
    mult: usize,
    original: &RatPoly,
    place: &Place,
) -> Result<Vec<LocalFactor>> {
    let unsupported = |detail: String| Error::UnsupportedLocalComputation {
        poly: original.to_string(),
        place: place.to_string(),
        detail,
    };
    let phi_deg = intpoly::deg(phi_bar);
    let big_p = BigInt::from(p.clone());
    // phi-adic expansion of p_int over Z, using the canonical lift of phi
    let mut expansion: Vec<IntPoly> = Vec::new();
    let mut rest = p_int.clone();
    while !rest.is_empty() {
        let (q, r) = intpoly::divrem_monic(&rest, phi_bar);
        expansion.push(r);
        rest = q;
    }
    // Gauss valuations; None marks a vanishing coefficient
    let vals: Vec<Option<i64>> = expansion
        .iter()
        .map(|a| {
            a.iter()
                .filter(|c| !c.is_zero())
                .map(|c| crate::rat::int_valuation(c, &big_p))
                .min()
        })
        .collect();
    debug_assert!(vals.len() > mult && vals[mult] == Some(0));
    for (i, v) in vals.iter().enumerate().take(mult) {
        debug_assert!(v.map_or(true, |u| u >= 1), "index {} below polygon", i);
    }
    // lower convex hull of (i, v_i) for i = 0..=mult
    let points: Vec<(i64, i64)> = vals
        .iter()
        .enumerate()
        .take(mult + 1)
        .filter_map(|(i, v)| v.map(|u| (i as i64, u)))
        .collect();
    let hull = lower_hull(&points);
    let fq = Fq::new(big_p.clone(), phi_bar.clone());
    let mut out = Vec::new();
    for window in hull.windows(2) {
        let (x0, y0) = window[0];
        let (x1, y1) = window[1];
        let dx = x1 - x0;
        let dy = y0 - y1;
        let gg = num_integer::gcd(dx, dy);
        let e = (dx / gg) as usize;
        let h = dy / gg;
        let segments = gg as usize;
        // residual polynomial along this side
        let mut residual: FqPoly = Vec::new();
        for k in 0..=segments {
            let idx = x0 as usize + k * e;
            let y_line = y0 - (k as i64) * h;
            let coeff = match vals[idx] {
                Some(v) if v == y_line => {
                    let scaled: IntPoly = expansion[idx]
                        .iter()
                        .map(|c| c / big_p.pow(y_line as u32))
                        .collect();
                    fq.reduce(&scaled)
                }
                _ => vec![],
            };
            residual.push(coeff);
        }
        Fq::poly_trim(&mut residual);
        debug_assert_eq!(Fq::poly_deg(&residual), segments);
        let residual = fq.poly_make_monic(&residual);
        if !fq.poly_is_squarefree(&residual) {
            return Err(unsupported(format!(
                "repeated residual roots on the slope -{}/{} side",
                h, e
            )));
        }
        for (deg_rho, count) in fq.poly_factor_degrees(&residual) {
            for _ in 0..count {
                out.push(LocalFactor {
                    e,
                    f: phi_deg * deg_rho,
                });
            }
        }
    }
    debug_assert_eq!(
        out.iter().map(|lf| lf.e * lf.f).sum::<usize>(),
        mult * phi_deg
    );
    Ok(out)
}

/// Lower convex hull of points sorted by x, as the vertex sequence.
fn lower_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &q in points {
        while hull.len() >= 2 {
            let o = hull[hull.len() - 2];
            let a = hull[hull.len() - 1];
            // pop while slope(o, a) >= slope(a, q)
            if (a.1 - o.1) * (q.0 - a.0) >= (q.1 - a.1) * (a.0 - o.0) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(q);
    }
    hull
}
