//! Which monic polynomials are reduced characteristic polynomials.
//!
//! Fix A = Mat_n(D) of degree N = n * deg D. A monic f of degree N with
//! factorization prod p_i^(a_i) is the characteristic polynomial of some
//! element of A exactly when, for every i,
//!
//!   (a) deg D divides a_i * deg p_i, giving the block size
//!       n_i = a_i * deg p_i / deg D, and
//!   (b) deg p_i divides n_i * c_i, where c_i is the capacity of
//!       D tensor Q[t]/(p_i).
//!
//! The verdict carries one certificate per factor so callers can see which
//! condition failed and with what numbers.

use crate::brauer::{
    capacity_and_division_degree_over, quaternion_to_csa, Csa, SplittingOverride,
};
use crate::error::{Error, Result};
use crate::factor::{factor_over_q, is_irreducible};
use crate::poly::RatPoly;
use crate::rat::Rat;
use crate::splitting::local_splitting;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCertificate {
    pub factor: RatPoly,
    pub multiplicity: usize,
    pub factor_degree: usize,
    /// n_i, present when condition (a) holds.
    pub component_dim: Option<usize>,
    /// c_i, computed only when condition (a) holds.
    pub tensor_capacity: Option<usize>,
    pub cond_a: bool,
    /// None when condition (a) already failed.
    pub cond_b: Option<bool>,
}

impl FactorCertificate {
    pub fn accepted(&self) -> bool {
        self.cond_a && self.cond_b == Some(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyVerdict {
    pub answer: bool,
    pub certificates: Vec<FactorCertificate>,
    pub algebra: Csa,
}

fn validate_candidate(algebra: &Csa, f: &RatPoly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NonMonic(f.leading().unwrap().to_string()));
    }
    let expected = algebra.degree();
    if f.deg() != expected {
        return Err(Error::DegreeMismatch {
            expected,
            got: f.deg(),
        });
    }
    Ok(())
}

pub fn is_characteristic_polynomial(
    algebra: &Csa,
    f: &RatPoly,
    overrides: &SplittingOverride,
) -> Result<CharPolyVerdict> {
    validate_candidate(algebra, f)?;
    let d = algebra.division_degree();
    let mut certificates = Vec::new();
    let mut answer = true;
    for (p_i, a_i) in factor_over_q(f)?.factors {
        let factor_degree = p_i.deg();
        let product = a_i * factor_degree;
        let cond_a = product % d == 0;
        let (component_dim, tensor_capacity, cond_b) = if cond_a {
            let n_i = product / d;
            let (c_i, _) = capacity_and_division_degree_over(algebra, &p_i, overrides)?;
            (Some(n_i), Some(c_i), Some((n_i * c_i) % factor_degree == 0))
        } else {
            (None, None, None)
        };
        let cert = FactorCertificate {
            factor: p_i,
            multiplicity: a_i,
            factor_degree,
            component_dim,
            tensor_capacity,
            cond_a,
            cond_b,
        };
        answer &= cert.accepted();
        certificates.push(cert);
    }
    Ok(CharPolyVerdict {
        answer,
        certificates,
        algebra: algebra.clone(),
    })
}

/// One primary block of a semisimple reduction: the factor p_i with its
/// multiplicity and the algebra Mat_{n_i}(D) its component lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub factor: RatPoly,
    pub multiplicity: usize,
    pub component: Csa,
}

/// Splits a candidate characteristic polynomial into primary components.
/// Fails with the obstructing factor when condition (a) is violated, since
/// no block size fits.
pub fn reduce_to_primary(algebra: &Csa, f: &RatPoly) -> Result<Vec<PrimaryComponent>> {
    validate_candidate(algebra, f)?;
    let d = algebra.division_degree();
    let mut out = Vec::new();
    for (p_i, a_i) in factor_over_q(f)?.factors {
        let product = a_i * p_i.deg();
        if product % d != 0 {
            return Err(Error::ReductionObstructed {
                factor: p_i.to_string(),
                multiplicity: a_i,
                product,
                division_degree: d,
            });
        }
        out.push(PrimaryComponent {
            factor: p_i,
            multiplicity: a_i,
            component: Csa::new(product / d, algebra.invariants().clone())?,
        });
    }
    debug_assert_eq!(
        out.iter()
            .map(|pc| pc.component.capacity())
            .sum::<usize>(),
        algebra.capacity()
    );
    Ok(out)
}

/// Whether the field Q[t]/(g) embeds into the algebra as a Q-subalgebra.
pub fn embeds(algebra: &Csa, g: &RatPoly, overrides: &SplittingOverride) -> Result<bool> {
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
    let (c, _) = capacity_and_division_degree_over(algebra, g, overrides)?;
    Ok((algebra.capacity() * c) % g.deg() == 0)
}

/// Embedding test for a linear or quadratic field into the quaternion
/// algebra (a, b), done with bare local conditions: a quadratic field sits
/// inside a division quaternion algebra exactly when it stays a field at
/// every ramified place. Independent of the capacity route, and must agree
/// with `embeds` on the corresponding Csa.
pub fn quaternion_local_global_embed(a: &Rat, b: &Rat, g: &RatPoly) -> Result<bool> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !g.is_monic() {
        return Err(Error::NonMonic(g.leading().unwrap().to_string()));
    }
    if g.deg() > 2 || g.is_constant() {
        return Err(Error::DegreeMismatch {
            expected: 2,
            got: g.deg(),
        });
    }
    if !is_irreducible(g)? {
        return Err(Error::NotIrreducible(g.to_string()));
    }
    let h = quaternion_to_csa(a, b, 1)?;
    if g.deg() == 1 || h.is_split() {
        return Ok(true);
    }
    for place in h.invariants().keys() {
        if local_splitting(g, place)?.local_degrees() != vec![2] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Necessary-condition filter on a (minimal, characteristic) polynomial
/// pair: m must divide f, the two must share their set of irreducible
/// factors, and an irreducible m forces f = m^(deg_a / deg m) on the nose.
/// Full realizability, which needs the algebra, lives in the class module.
pub fn minpoly_charpoly_compatible(m: &RatPoly, f: &RatPoly, deg_a: usize) -> Result<bool> {
    for g in [m, f] {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !g.is_monic() {
            return Err(Error::NonMonic(g.leading().unwrap().to_string()));
        }
    }
    if f.deg() != deg_a {
        return Err(Error::DegreeMismatch {
            expected: deg_a,
            got: f.deg(),
        });
    }
    let (_, rem) = f.divrem(m)?;
    if !rem.is_zero() {
        return Ok(false);
    }
    let m_fact = factor_over_q(m)?;
    let f_fact = factor_over_q(f)?;
    if m_fact.support() != f_fact.support() {
        return Ok(false);
    }
    if m_fact.is_single_irreducible() {
        if deg_a % m.deg() != 0 {
            return Ok(false);
        }
        return Ok(f == &m.pow(deg_a / m.deg()));
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use crate::splitting::Place;
    use std::collections::BTreeMap;

    fn p(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_ints(coeffs)
    }

    fn hamilton(capacity: usize) -> Csa {
        let inv: BTreeMap<Place, Rat> = [
            (Place::finite(2), rat(1, 2)),
            (Place::Infinite, rat(1, 2)),
        ]
        .into_iter()
        .collect();
        Csa::new(capacity, inv).unwrap()
    }

    fn check(algebra: &Csa, f: &RatPoly) -> bool {
        is_characteristic_polynomial(algebra, f, &SplittingOverride::empty())
            .unwrap()
            .answer
    }

    #[test]
    fn hamilton_degree_two_cases() {
        let h = hamilton(1);
        // complex quadratic fields embed
        assert!(check(&h, &p(&[1, 0, 1])));
        assert!(check(&h, &p(&[1, 1, 1])));
        assert!(check(&h, &p(&[2, -2, 1])));
        // real quadratic fields do not
        assert!(!check(&h, &p(&[-2, 0, 1])));
        assert!(!check(&h, &p(&[-1, -1, 1])));
        // rationals only occur doubled: t^2, (t-5)^2 yes, t(t+1) no
        assert!(check(&h, &p(&[0, 0, 1])));
        assert!(check(&h, &p(&[25, -10, 1])));
        assert!(!check(&h, &p(&[0, 1, 1])));
    }

    #[test]
    fn certificates_explain_failures() {
        let h = hamilton(1);
        let verdict =
            is_characteristic_polynomial(&h, &p(&[0, 1, 1]), &SplittingOverride::empty())
                .unwrap();
        assert!(!verdict.answer);
        assert_eq!(verdict.certificates.len(), 2);
        for cert in &verdict.certificates {
            assert!(!cert.cond_a);
            assert_eq!(cert.cond_b, None);
            assert_eq!(cert.component_dim, None);
        }
        let verdict =
            is_characteristic_polynomial(&h, &p(&[-2, 0, 1]), &SplittingOverride::empty())
                .unwrap();
        let cert = &verdict.certificates[0];
        assert!(cert.cond_a);
        assert_eq!(cert.component_dim, Some(1));
        assert_eq!(cert.tensor_capacity, Some(1));
        assert_eq!(cert.cond_b, Some(false));
    }

    #[test]
    fn matrix_quaternion_cases() {
        let m2h = hamilton(2);
        // (t^2-2)^2 works in Mat_2(H) even though t^2-2 fails in H
        assert!(check(&m2h, &p(&[-2, 0, 1]).pow(2)));
        assert!(!check(&m2h, &(&p(&[-2, 0, 1]) * &p(&[-3, 0, 1]))));
        // two complex quadratics can sit in different blocks
        assert!(check(&m2h, &(&p(&[1, 0, 1]) * &p(&[1, 1, 1]))));
        assert!(check(&m2h, &p(&[1, 0, 1]).pow(2)));
        // odd rational multiplicities stay impossible
        assert!(!check(&m2h, &(&p(&[0, 1]) * &p(&[1, 1]).pow(3))));
        assert!(check(&m2h, &(&p(&[0, 1]).pow(2) * &p(&[1, 1]).pow(2))));
        // a quartic complex field of the right degree
        assert!(check(&m2h, &p(&[1, 1, 1, 1, 1])));
    }

    #[test]
    fn split_algebras_accept_everything_of_right_degree() {
        let m2q = Csa::split(2).unwrap();
        for f in [p(&[0, 0, 1]), p(&[0, 1, 1]), p(&[-2, 0, 1]), p(&[1, 0, 1])] {
            assert!(check(&m2q, &f));
        }
        let q = Csa::split(1).unwrap();
        assert!(check(&q, &p(&[-5, 1])));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let h = hamilton(1);
        assert!(matches!(
            is_characteristic_polynomial(&h, &p(&[-5, 1]), &SplittingOverride::empty()),
            Err(Error::DegreeMismatch {
                expected: 2,
                got: 1
            })
        ));
        assert!(is_characteristic_polynomial(
            &h,
            &p(&[1, 0, 2]),
            &SplittingOverride::empty()
        )
        .is_err());
    }

    #[test]
    fn primary_reduction() {
        let m2h = hamilton(2);
        let f = &p(&[1, 0, 1]) * &p(&[1, 1, 1]);
        let parts = reduce_to_primary(&m2h, &f).unwrap();
        assert_eq!(parts.len(), 2);
        for part in &parts {
            assert_eq!(part.component.capacity(), 1);
            assert_eq!(part.component.invariants(), m2h.invariants());
            assert_eq!(part.multiplicity, 1);
        }
        let h = hamilton(1);
        assert!(matches!(
            reduce_to_primary(&h, &p(&[0, 1, 1])),
            Err(Error::ReductionObstructed {
                multiplicity: 1,
                product: 1,
                division_degree: 2,
                ..
            })
        ));
    }

    #[test]
    fn embedding_tests() {
        let h = hamilton(1);
        let ovr = SplittingOverride::empty();
        assert!(embeds(&h, &p(&[1, 0, 1]), &ovr).unwrap());
        assert!(!embeds(&h, &p(&[-2, 0, 1]), &ovr).unwrap());
        assert!(embeds(&h, &p(&[0, 1]), &ovr).unwrap());
        let m2h = hamilton(2);
        assert!(embeds(&m2h, &p(&[-2, 0, 1]), &ovr).unwrap());
        assert!(embeds(&m2h, &p(&[1, 1, 1, 1, 1]), &ovr).unwrap());
        // field degree must divide n * c: a cubic field cannot sit in H
        assert!(!embeds(&m2h, &p(&[-2, 0, 0, 1]), &ovr).unwrap());
        assert!(matches!(
            embeds(&h, &p(&[-1, 0, 1]), &ovr),
            Err(Error::NotIrreducible(_))
        ));
    }

    #[test]
    fn quaternion_embedding_agreement() {
        let ovr = SplittingOverride::empty();
        let quats = [
            (rat_int(-1), rat_int(-1)),
            (rat_int(2), rat_int(-5)),
            (rat_int(1), rat_int(3)),
            (rat_int(3), rat(1, 3)),
        ];
        let fields = [
            p(&[1, 0, 1]),
            p(&[-2, 0, 1]),
            p(&[1, 1, 1]),
            p(&[-5, 0, 1]),
            p(&[3, 1]),
        ];
        for (a, b) in &quats {
            let algebra = quaternion_to_csa(a, b, 1).unwrap();
            for g in &fields {
                let direct = quaternion_local_global_embed(a, b, g).unwrap();
                let via_capacity = embeds(&algebra, g, &ovr).unwrap();
                assert_eq!(
                    direct, via_capacity,
                    "disagreement for ({}, {}) and {}",
                    a, b, g
                );
            }
        }
    }

    #[test]
    fn minpoly_charpoly_filter() {
        let gauss = p(&[1, 0, 1]);
        assert!(minpoly_charpoly_compatible(&gauss, &gauss.pow(2), 4).unwrap());
        // missing factor in m
        assert!(
            !minpoly_charpoly_compatible(&p(&[-1, 1]), &(&p(&[-1, 1]) * &p(&[-2, 1])), 2)
                .unwrap()
        );
        // m irreducible forces a pure power
        assert!(
            !minpoly_charpoly_compatible(&gauss, &(&gauss * &p(&[-1, 1]).pow(2)), 4).unwrap()
        );
        // reducible m only needs divisibility plus matching support
        let mixed = &gauss * &p(&[-1, 1]);
        let f = &gauss.pow(2) * &p(&[-1, 1]);
        assert!(minpoly_charpoly_compatible(&mixed, &f, 5).unwrap());
        assert!(!minpoly_charpoly_compatible(&f, &mixed, 3).unwrap());
        assert!(matches!(
            minpoly_charpoly_compatible(&gauss, &gauss, 3),
            Err(Error::DegreeMismatch { .. })
        ));
    }
}
