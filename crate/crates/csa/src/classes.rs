//! Conjugacy classes of Mat_n(D) with a given characteristic polynomial.
//!
//! A class of an invertible element is pinned down by one partition per
//! irreducible factor p of its characteristic polynomial: the module over
//! D tensor Q[t]/(p) decomposes into indecomposables whose lengths are the
//! parts. Writing w_p for the total length, the factor p appears in the
//! characteristic polynomial with exponent |lambda(p)| * d_p, where d_p is
//! the division degree of D tensor Q[t]/(p), so the classes with a fixed
//! characteristic polynomial are exactly the choices of one partition of
//! w_p per factor.

use crate::brauer::{capacity_and_division_degree_over, Csa, SplittingOverride};
use crate::charpoly::{
    is_characteristic_polynomial, minpoly_charpoly_compatible, FactorCertificate,
};
use crate::error::{Error, Result};
use crate::factor::{factor_over_q, is_irreducible};
use crate::poly::RatPoly;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A partition: positive parts in non-increasing order. The empty partition
/// is allowed and has size 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Partition totals beyond this have no meaning here: they exceed any
/// module dimension the rest of the crate can work with, and letting them
/// in would make `size` and `conjugate` arbitrarily expensive.
const MAX_PARTITION_TOTAL: usize = 1 << 20;

impl Partition {
    /// Sorts the parts; rejects zero parts and absurd totals.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidClass("partition with a zero part".into()));
        }
        parts
            .iter()
            .try_fold(0usize, |acc, &p| {
                acc.checked_add(p).filter(|&t| t <= MAX_PARTITION_TOTAL)
            })
            .ok_or_else(|| {
                Error::Overflow(format!(
                    "partition total exceeds {MAX_PARTITION_TOTAL}"
                ))
            })?;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn max_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        let mut k = 1;
        loop {
            let count = self.parts.iter().filter(|&&m| m >= k).count();
            if count == 0 {
                break;
            }
            parts.push(count);
            k += 1;
        }
        Partition::from_sorted(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(out, "0");
        }
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(out, "+")?;
            }
            write!(out, "{}", part)?;
        }
        Ok(())
    }
}

/// All partitions of `w` in descending lexicographic order, from [w] down
/// to [1, ..., 1].
pub fn partitions_of(w: usize) -> Vec<Partition> {
    fn rec(remaining: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(cap)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w.max(1), &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `w`.
pub fn partition_count(w: usize) -> u128 {
    let mut dp = vec![0u128; w + 1];
    dp[0] = 1;
    for part in 1..=w {
        for m in part..=w {
            dp[m] += dp[m - part];
        }
    }
    dp[w]
}

/// A conjugacy class invariant: one non-empty partition per monic
/// irreducible factor of the characteristic polynomial. The factor t is
/// excluded; classes are of invertible elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassInvariant {
    assignments: BTreeMap<RatPoly, Partition>,
}

impl ClassInvariant {
    pub fn new(assignments: BTreeMap<RatPoly, Partition>) -> Result<Self> {
        if assignments.is_empty() {
            return Err(Error::InvalidClass("no factors".into()));
        }
        for (g, lambda) in &assignments {
            if g.is_t() {
                return Err(Error::KeyIsT);
            }
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
            if lambda.is_empty() {
                return Err(Error::InvalidClass(format!(
                    "empty partition assigned to {}",
                    g
                )));
            }
        }
        Ok(ClassInvariant { assignments })
    }

    pub(crate) fn new_unchecked(assignments: BTreeMap<RatPoly, Partition>) -> Self {
        ClassInvariant { assignments }
    }

    pub fn assignments(&self) -> &BTreeMap<RatPoly, Partition> {
        &self.assignments
    }

    pub fn partition_for(&self, g: &RatPoly) -> Option<&Partition> {
        self.assignments.get(g)
    }

    /// Product of p^(max part) over the factors.
    pub fn min_poly(&self) -> RatPoly {
        let mut out = RatPoly::one();
        for (g, lambda) in &self.assignments {
            out = &out * &g.pow(lambda.max_part());
        }
        out
    }

    /// The semisimple class with the same factors and multiplicities: every
    /// partition flattened to all ones.
    pub fn semisimplify(&self) -> ClassInvariant {
        let assignments = self
            .assignments
            .iter()
            .map(|(g, lambda)| (g.clone(), Partition::from_sorted(vec![1; lambda.size()])))
            .collect();
        ClassInvariant::new_unchecked(assignments)
    }

    pub fn is_semisimple(&self) -> bool {
        self.assignments
            .values()
            .all(|lambda| lambda.max_part() <= 1)
    }
}

impl fmt::Display for ClassInvariant {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{{")?;
        for (i, (g, lambda)) in self.assignments.iter().enumerate() {
            if i > 0 {
                write!(out, ", ")?;
            }
            write!(out, "{}: {}", g, lambda)?;
        }
        write!(out, "}}")
    }
}

/// Module length for the primary component p^a: the number of parts budget
/// a partition for p gets. Computed as a / d_p and cross-checked against
/// n_p * c_p / deg p; the two agree on every input passing the per-factor
/// characteristic-polynomial conditions.
pub fn dim_w(
    algebra: &Csa,
    p: &RatPoly,
    a: usize,
    overrides: &SplittingOverride,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NonMonic(p.leading().unwrap().to_string()));
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if p.deg() <= 8 && !is_irreducible(p)? {
        return Err(Error::NotIrreducible(p.to_string()));
    }
    let d = algebra.division_degree();
    let product = a * p.deg();
    if a == 0 || product % d != 0 {
        return Err(Error::NotACharPoly {
            poly: p.to_string(),
            multiplicity: a,
        });
    }
    let n_p = product / d;
    let (c_p, d_p) = capacity_and_division_degree_over(algebra, p, overrides)?;
    if (n_p * c_p) % p.deg() != 0 {
        return Err(Error::NotACharPoly {
            poly: p.to_string(),
            multiplicity: a,
        });
    }
    let via_capacity = n_p * c_p / p.deg();
    if a % d_p != 0 {
        return Err(Error::NonIntegral(format!(
            "{} not divisible by the division degree {}",
            a, d_p
        )));
    }
    let via_exponent = a / d_p;
    debug_assert_eq!(via_capacity, via_exponent, "length formulas must agree");
    Ok(via_capacity)
}

/// Module length read off an accepted certificate; same quantity as dim_w.
fn module_length(cert: &FactorCertificate, division_degree: usize) -> usize {
    let n_p = cert.component_dim.expect("certificate accepted");
    let c_p = cert.tensor_capacity.expect("certificate accepted");
    let via_capacity = n_p * c_p / cert.factor_degree;
    let d_p = division_degree / c_p;
    debug_assert_eq!(via_capacity * cert.factor_degree, n_p * c_p);
    debug_assert_eq!(via_capacity, cert.multiplicity / d_p, "length formulas must agree");
    via_capacity
}

/// One summand of the dimension count behind a class check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCheckTerm {
    pub factor: RatPoly,
    pub factor_degree: usize,
    pub partition_size: usize,
    pub division_degree: usize,
}

impl ClassCheckTerm {
    pub fn contribution(&self) -> usize {
        self.factor_degree * self.partition_size * self.division_degree
    }
}

/// Outcome of validating a class against an algebra: the total of
/// deg(p) * |lambda(p)| * d_p over the factors must equal deg A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCheck {
    pub ok: bool,
    pub terms: Vec<ClassCheckTerm>,
    pub total: usize,
    pub expected: usize,
}

impl fmt::Display for ClassCheck {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(out, " + ")?;
            }
            write!(
                out,
                "{}*{}*{}",
                term.factor_degree, term.partition_size, term.division_degree
            )?;
        }
        write!(
            out,
            " = {} (need {}): {}",
            self.total,
            self.expected,
            if self.ok { "valid" } else { "invalid" }
        )
    }
}

/// Checks the dimension count for a class invariant against the algebra.
pub fn validate_class(
    algebra: &Csa,
    class: &ClassInvariant,
    overrides: &SplittingOverride,
) -> Result<ClassCheck> {
    let d = algebra.division_degree();
    let mut terms = Vec::new();
    let mut total = 0usize;
    for (g, lambda) in class.assignments() {
        let (c_p, d_p) = capacity_and_division_degree_over(algebra, g, overrides)?;
        debug_assert_eq!(c_p * d_p, d);
        let term = ClassCheckTerm {
            factor: g.clone(),
            factor_degree: g.deg(),
            partition_size: lambda.size(),
            division_degree: d_p,
        };
        total += term.contribution();
        terms.push(term);
    }
    let expected = algebra.degree();
    Ok(ClassCheck {
        ok: total == expected,
        terms,
        total,
        expected,
    })
}

/// Characteristic polynomial of the class, prod p^(|lambda(p)| d_p).
pub fn char_poly_of_class(
    algebra: &Csa,
    class: &ClassInvariant,
    overrides: &SplittingOverride,
) -> Result<RatPoly> {
    let check = validate_class(algebra, class, overrides)?;
    if !check.ok {
        return Err(Error::InvalidClass(check.to_string()));
    }
    let d = algebra.division_degree();
    let mut out = RatPoly::one();
    for (g, lambda) in class.assignments() {
        let (c_p, _) = capacity_and_division_degree_over(algebra, g, overrides)?;
        out = &out * &g.pow(lambda.size() * (d / c_p));
    }
    debug_assert_eq!(out.deg(), algebra.degree());
    Ok(out)
}

/// Minimal polynomial of the class, prod p^(max lambda(p)).
pub fn min_poly_of_class(class: &ClassInvariant) -> RatPoly {
    class.min_poly()
}

/// Semisimplification: all partitions flattened to ones. Preserves the
/// characteristic polynomial, radicalizes the minimal polynomial.
pub fn semisimplify_class(class: &ClassInvariant) -> ClassInvariant {
    class.semisimplify()
}

/// All conjugacy classes of invertible elements with characteristic
/// polynomial f. Empty when f is not a characteristic polynomial of the
/// algebra; partitions are enumerated in descending lexicographic order,
/// with the last factor varying fastest.
pub fn classes_with_charpoly(
    algebra: &Csa,
    f: &RatPoly,
    overrides: &SplittingOverride,
) -> Result<Vec<ClassInvariant>> {
    let per_factor = match class_budgets(algebra, f, overrides)? {
        Some(budgets) => budgets,
        None => return Ok(Vec::new()),
    };
    let per_factor: Vec<(RatPoly, Vec<Partition>)> = per_factor
        .into_iter()
        .map(|(g, w)| (g, partitions_of(w)))
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; per_factor.len()];
    loop {
        let assignments: BTreeMap<RatPoly, Partition> = per_factor
            .iter()
            .zip(&choice)
            .map(|((g, parts), &i)| (g.clone(), parts[i].clone()))
            .collect();
        out.push(ClassInvariant::new_unchecked(assignments));
        // odometer, last factor fastest
        let mut pos = per_factor.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < per_factor[pos].1.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// How many classes share the characteristic polynomial f: the product of
/// the per-factor partition counts, or 0 when f is not a characteristic
/// polynomial.
pub fn class_count(
    algebra: &Csa,
    f: &RatPoly,
    overrides: &SplittingOverride,
) -> Result<u128> {
    let budgets = match class_budgets(algebra, f, overrides)? {
        Some(budgets) => budgets,
        None => return Ok(0),
    };
    let mut count: u128 = 1;
    for (_, w) in budgets {
        count = count
            .checked_mul(partition_count(w))
            .ok_or_else(|| Error::Overflow("class count".into()))?;
    }
    Ok(count)
}

/// The per-factor partition budgets w_p, or None when f fails the
/// characteristic-polynomial test. Errors NotInvertible when t divides f.
fn class_budgets(
    algebra: &Csa,
    f: &RatPoly,
    overrides: &SplittingOverride,
) -> Result<Option<Vec<(RatPoly, usize)>>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NonMonic(f.leading().unwrap().to_string()));
    }
    if f.deg() != algebra.degree() {
        return Err(Error::DegreeMismatch {
            expected: algebra.degree(),
            got: f.deg(),
        });
    }
    if f.coeff(0).is_zero() {
        return Err(Error::NotInvertible);
    }
    let verdict = is_characteristic_polynomial(algebra, f, overrides)?;
    if !verdict.answer {
        return Ok(None);
    }
    let d = algebra.division_degree();
    Ok(Some(
        verdict
            .certificates
            .iter()
            .map(|cert| (cert.factor.clone(), module_length(cert, d)))
            .collect(),
    ))
}

/// Rational-canonical data for one irreducible factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcfFactor {
    pub factor: RatPoly,
    pub partition: Partition,
    /// n_p: dimension of the p-primary component as a right module over the
    /// division part.
    pub component_dim: usize,
    /// c_p: the p-primary component is c_p copies of one module over the
    /// division part of D tensor Q[t]/(p).
    pub morita_multiplicity: usize,
    /// d_p: degree of that division part over Q[t]/(p).
    pub division_degree: usize,
    /// e_p: exponent of p in the minimal polynomial, the largest block.
    pub top_exponent: usize,
    /// Block exponents m_1 <= ... <= m_t, the partition read off smallest
    /// first.
    pub block_exponents: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcfStructure {
    pub factors: Vec<RcfFactor>,
}

/// Rational canonical shape of a class: per factor, the Morita multiplicity,
/// the block exponents in ascending order, and the component dimension.
pub fn rcf_structure(
    algebra: &Csa,
    class: &ClassInvariant,
    overrides: &SplittingOverride,
) -> Result<RcfStructure> {
    let check = validate_class(algebra, class, overrides)?;
    if !check.ok {
        return Err(Error::InvalidClass(check.to_string()));
    }
    let d = algebra.division_degree();
    let mut factors = Vec::new();
    let mut total = 0usize;
    for (g, lambda) in class.assignments() {
        let (c_p, d_p) = capacity_and_division_degree_over(algebra, g, overrides)?;
        debug_assert_eq!(c_p * d_p, d);
        debug_assert_eq!(g.deg() % c_p, 0, "capacity divides the field degree");
        let component_dim = lambda.size() * (g.deg() / c_p);
        total += component_dim;
        let mut block_exponents: Vec<usize> = lambda.parts().to_vec();
        block_exponents.reverse();
        factors.push(RcfFactor {
            factor: g.clone(),
            partition: lambda.clone(),
            component_dim,
            morita_multiplicity: c_p,
            division_degree: d_p,
            top_exponent: lambda.max_part(),
            block_exponents,
        });
    }
    debug_assert_eq!(total, algebra.capacity());
    Ok(RcfStructure { factors })
}

/// Whether some class has characteristic polynomial f and minimal
/// polynomial m simultaneously: f must pass the characteristic-polynomial
/// test, the pair must pass the divisibility filter, and each exponent e_p
/// of m must fit a partition of the budget w_p, which happens exactly when
/// e_p <= w_p.
pub fn realizable_pair(
    algebra: &Csa,
    f: &RatPoly,
    m: &RatPoly,
    overrides: &SplittingOverride,
) -> Result<bool> {
    if !minpoly_charpoly_compatible(m, f, algebra.degree())? {
        return Ok(false);
    }
    let verdict = is_characteristic_polynomial(algebra, f, overrides)?;
    if !verdict.answer {
        return Ok(false);
    }
    let m_factors = factor_over_q(m)?.factors;
    let d = algebra.division_degree();
    for cert in &verdict.certificates {
        let w = module_length(cert, d);
        let e = m_factors
            .iter()
            .find(|(q, _)| q == &cert.factor)
            .map(|(_, e)| *e)
            .unwrap_or(0);
        if e == 0 || e > w {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a division algebra D, the subsequence of candidate minimal
/// polynomials that occur for elements of D. A candidate p qualifies
/// exactly when deg p * d_p = deg D, and then it belongs to exactly one
/// conjugacy class, {p: (1)}. The polynomial t is skipped.
pub fn enumerate_division_classes(
    algebra: &Csa,
    candidates: &[RatPoly],
    overrides: &SplittingOverride,
) -> Result<Vec<RatPoly>> {
    if algebra.capacity() != 1 {
        return Err(Error::NotDivisionAlgebra);
    }
    let d = algebra.division_degree();
    let mut out = Vec::new();
    for g in candidates {
        if g.is_t() {
            continue;
        }
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
        let (c_p, d_p) = capacity_and_division_degree_over(algebra, g, overrides)?;
        debug_assert_eq!(c_p * d_p, d);
        if g.deg() * d_p == d {
            out.push(g.clone());
        }
    }
    Ok(out)
}
