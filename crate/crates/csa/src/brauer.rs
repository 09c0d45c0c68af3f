//! Central simple algebras over Q presented by local invariants.
//!
//! An algebra is a matrix ring Mat_n(D) over a division algebra D, and D is
//! pinned down by its nonzero local invariants: rationals mod 1 attached to
//! places, summing to an integer, with the archimedean invariant restricted
//! to 0 or 1/2. The degree of D is the lcm of the denominators.
//!
//! Tensoring D with a number field F = Q[t]/(g) multiplies each invariant by
//! the local degrees of F above the place in question; the capacity of the
//! resulting algebra over F is what the characteristic polynomial tests
//! consume downstream.

use crate::error::{Error, Result};
use crate::intfactor::{self, is_prime};
use crate::poly::RatPoly;
use crate::rat::{self, Rat};
use crate::splitting::{local_splitting, Place};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Mat_n(D) for a division algebra D over Q, given by capacity n and the
/// nonzero local invariants of D.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Csa {
    capacity: usize,
    invariants: BTreeMap<Place, Rat>,
    division_degree: usize,
}

fn frac_mod_one(r: &Rat) -> Rat {
    let floor = r.floor();
    r - floor
}

impl Csa {
    /// Validates and normalizes: invariants are reduced mod 1, zero entries
    /// dropped, places checked for primality, the sum checked to vanish
    /// mod 1, and the archimedean invariant restricted to {0, 1/2}.
    pub fn new(capacity: usize, invariants: BTreeMap<Place, Rat>) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::BadCapacity);
        }
        let mut reduced: BTreeMap<Place, Rat> = BTreeMap::new();
        let mut sum = Rat::zero();
        for (place, value) in invariants {
            if let Place::Finite(p) = &place {
                if !is_prime(p) {
                    return Err(Error::NonPrimePlace(p.to_string()));
                }
            }
            let v = frac_mod_one(&value);
            sum += &v;
            if place.is_infinite() && !v.is_zero() && v != Rat::new(BigInt::one(), BigInt::from(2))
            {
                return Err(Error::BadArchimedeanInvariant(value.to_string()));
            }
            if !v.is_zero() {
                reduced.insert(place, v);
            }
        }
        if !rat::is_integer(&sum) {
            return Err(Error::InvariantSumNonzero(sum.to_string()));
        }
        let division_degree = lcm_of_denominators(reduced.values())?;
        Ok(Csa {
            capacity,
            invariants: reduced,
            division_degree,
        })
    }

    /// The split algebra Mat_n(Q).
    pub fn split(capacity: usize) -> Result<Self> {
        Csa::new(capacity, BTreeMap::new())
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Nonzero local invariants of the division part.
    pub fn invariants(&self) -> &BTreeMap<Place, Rat> {
        &self.invariants
    }

    pub fn local_invariant(&self, place: &Place) -> Rat {
        self.invariants.get(place).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree of the division part D.
    pub fn division_degree(&self) -> usize {
        self.division_degree
    }

    /// Degree of the whole algebra, capacity times division degree.
    pub fn degree(&self) -> usize {
        self.capacity * self.division_degree
    }

    pub fn is_split(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn is_division(&self) -> bool {
        self.capacity == 1 && !self.invariants.is_empty()
    }
}

impl fmt::Display for Csa {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "capacity {}, division degree {}, invariants {{",
            self.capacity, self.division_degree
        )?;
        for (i, (place, value)) in self.invariants.iter().enumerate() {
            if i > 0 {
                write!(out, ", ")?;
            }
            write!(out, "{}: {}", place, value)?;
        }
        write!(out, "}}")
    }
}

fn lcm_of_denominators<'a>(values: impl Iterator<Item = &'a Rat>) -> Result<usize> {
    let mut acc = BigInt::one();
    for v in values {
        acc = acc.lcm(v.denom());
    }
    acc.to_usize()
        .ok_or_else(|| Error::Overflow(format!("division degree {}", acc)))
}

/// Local invariants of D tensor F at the places of F = Q[t]/(g) lying over
/// each ramified place of D. Zero entries are kept so the per-place lists
/// mirror the splitting data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorInvariants {
    pub by_place: BTreeMap<Place, Vec<Rat>>,
}

impl TensorInvariants {
    /// Lcm of the denominators over every place of F, the degree of the
    /// division part of D tensor F.
    pub fn division_degree(&self) -> Result<usize> {
        lcm_of_denominators(self.by_place.values().flatten())
    }
}

/// Externally supplied splitting data, consulted before any local
/// computation. The value is the list of local degrees [F_w : Q_v]; this is
/// also the hook for base fields that are not presented as Q[t]/(g).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplittingOverride {
    entries: BTreeMap<(RatPoly, Place), Vec<usize>>,
}

impl SplittingOverride {
    pub fn empty() -> Self {
        SplittingOverride::default()
    }

    pub fn insert(&mut self, g: RatPoly, place: Place, degrees: Vec<usize>) -> Result<()> {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !g.is_monic() {
            return Err(Error::NonMonic(g.leading().unwrap().to_string()));
        }
        if g.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        if degrees.is_empty() || degrees.iter().any(|&m| m == 0) {
            return Err(Error::Document(format!(
                "override for {} at {} has invalid local degrees",
                g, place
            )));
        }
        if degrees.iter().sum::<usize>() != g.deg() {
            return Err(Error::DegreeMismatch {
                expected: g.deg(),
                got: degrees.iter().sum::<usize>(),
            });
        }
        let mut degrees = degrees;
        degrees.sort_unstable();
        self.entries.insert((g.clone(), place), degrees);
        Ok(())
    }

    pub fn get(&self, g: &RatPoly, place: &Place) -> Option<&Vec<usize>> {
        self.entries.get(&(g.clone(), place.clone()))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(
        &self,
    ) -> impl Iterator<Item = (&(RatPoly, Place), &Vec<usize>)> {
        self.entries.iter()
    }
}

fn local_degrees_of(
    g: &RatPoly,
    place: &Place,
    overrides: &SplittingOverride,
) -> Result<Vec<usize>> {
    if let Some(degrees) = overrides.get(g, place) {
        return Ok(degrees.clone());
    }
    Ok(local_splitting(g, place)?.local_degrees())
}

/// Invariants of D tensor Q[t]/(g) at every place of the field over a
/// ramified place of D.
pub fn tensor_invariants(
    algebra: &Csa,
    g: &RatPoly,
    overrides: &SplittingOverride,
) -> Result<TensorInvariants> {
    let mut by_place = BTreeMap::new();
    for (place, inv) in algebra.invariants() {
        let degrees = local_degrees_of(g, place, overrides)?;
        let locals = degrees
            .iter()
            .map(|&m| frac_mod_one(&(inv * Rat::from_integer(BigInt::from(m)))))
            .collect();
        by_place.insert(place.clone(), locals);
    }
    Ok(TensorInvariants { by_place })
}

/// Capacity and division degree of D tensor Q[t]/(g) as an algebra over the
/// field Q[t]/(g). The division degree divides deg D and the capacity is the
/// complementary factor.
pub fn capacity_and_division_degree_over(
    algebra: &Csa,
    g: &RatPoly,
    overrides: &SplittingOverride,
) -> Result<(usize, usize)> {
    let ti = tensor_invariants(algebra, g, overrides)?;
    let dp = ti.division_degree()?;
    let d = algebra.division_degree();
    debug_assert_eq!(d % dp, 0, "local denominators must divide deg D");
    Ok((d / dp, dp))
}

/// Hilbert symbol (a, b)_v over Q, valued in {1, -1}.
pub fn hilbert_symbol(a: &Rat, b: &Rat, place: &Place) -> Result<i32> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroRational);
    }
    match place {
        Place::Infinite => {
            Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 })
        }
        Place::Finite(p) => {
            if !is_prime(p) {
                return Err(Error::NonPrimePlace(p.to_string()));
            }
            let p_int = BigInt::from(p.clone());
            let alpha = rat::valuation(a, &p_int)?;
            let beta = rat::valuation(b, &p_int)?;
            let u = rat::unit_part(a, &p_int)?;
            let w = rat::unit_part(b, &p_int)?;
            if p_int == BigInt::from(2) {
                let u8 = rat::reduce_mod(&u, &BigInt::from(8))
                    .to_i64()
                    .expect("residue mod 8");
                let w8 = rat::reduce_mod(&w, &BigInt::from(8))
                    .to_i64()
                    .expect("residue mod 8");
                let eps = |x: i64| (x - 1) / 2 % 2;
                let omega = |x: i64| (x * x - 1) / 8 % 2;
                let expo = eps(u8) * eps(w8) + alpha * omega(w8) + beta * omega(u8);
                Ok(if expo % 2 == 0 { 1 } else { -1 })
            } else {
                let u_mod = rat::reduce_mod(&u, &p_int);
                let w_mod = rat::reduce_mod(&w, &p_int);
                // epsilon(p) is odd exactly when p = 3 mod 4
                let eps_p = (p_int.mod_floor(&BigInt::from(4)) == BigInt::from(3)) as i64;
                let mut sign = 1i32;
                if (alpha * beta * eps_p) % 2 != 0 {
                    sign = -sign;
                }
                if beta % 2 != 0 {
                    sign *= intfactor::jacobi(&u_mod, &p_int);
                }
                if alpha % 2 != 0 {
                    sign *= intfactor::jacobi(&w_mod, &p_int);
                }
                Ok(sign)
            }
        }
    }
}

/// Mat_n of the quaternion algebra (a, b) as a Csa: invariant 1/2 at each
/// ramified place, or, when no place ramifies, the split algebra folded into
/// capacity 2n with an empty table.
///
/// Candidate ramified places are 2, the archimedean place, and every prime
/// showing up in the numerator or denominator of a or of b. Primes of the
/// product a*b alone would miss cancellations like (3, 1/3).
pub fn quaternion_to_csa(a: &Rat, b: &Rat, n: usize) -> Result<Csa> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroRational);
    }
    if n == 0 {
        return Err(Error::BadCapacity);
    }
    let mut candidates: Vec<Place> = vec![Place::finite(2), Place::Infinite];
    for r in [a, b] {
        for part in [r.numer().magnitude(), r.denom().magnitude()] {
            for (p, _) in intfactor::factorize(part)? {
                let place = Place::Finite(p);
                if !candidates.contains(&place) {
                    candidates.push(place);
                }
            }
        }
    }
    let mut invariants = BTreeMap::new();
    for place in candidates {
        if hilbert_symbol(a, b, &place)? == -1 {
            invariants.insert(place, Rat::new(BigInt::one(), BigInt::from(2)));
        }
    }
    debug_assert_eq!(invariants.len() % 2, 0, "ramification count must be even");
    if invariants.is_empty() {
        Csa::split(2 * n)
    } else {
        Csa::new(n, invariants)
    }
}
