//! Explicit quaternion algebras and matrices over them: the brute-force
//! ground truth the abstract machinery is checked against.
//!
//! The algebra (a, b) has basis 1, i, j, k with i^2 = a, j^2 = b and
//! ij = -ji = k. Characteristic polynomials are computed through the fixed
//! splitting representation
//!
//! ```text
//!   1 -> I,   i -> diag(s, -s),   j -> [[0, 1], [b, 0]],   k -> ij
//! ```
//!
//! with s^2 = a, using exact pairs (u, v) <-> u + v*s. The pair arithmetic
//! is valid whether or not a is a square: in the split case the two
//! evaluations s -> +sqrt(a) and s -> -sqrt(a) are similar representations,
//! so the s-components of the coefficients still cancel, and the assertion
//! that they vanish stays an internal consistency check rather than a code
//! path.

use crate::brauer::{capacity_and_division_degree_over, quaternion_to_csa, Csa, SplittingOverride};
use crate::classes::{ClassInvariant, Partition};
use crate::error::{Error, Result};
use crate::factor::factor_over_q;
use crate::poly::RatPoly;
use crate::rat::{rat, Rat};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatAlgebra {
    a: Rat,
    b: Rat,
}

impl QuatAlgebra {
    pub fn new(a: Rat, b: Rat) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroRational);
        }
        Ok(QuatAlgebra { a, b })
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    /// The invariant table of Mat_n of this algebra.
    pub fn to_csa(&self, n: usize) -> Result<Csa> {
        quaternion_to_csa(&self.a, &self.b, n)
    }

    pub fn is_division(&self) -> Result<bool> {
        Ok(!self.to_csa(1)?.is_split())
    }

    pub fn mul(&self, p: &QuatElt, q: &QuatElt) -> QuatElt {
        let a = &self.a;
        let b = &self.b;
        QuatElt {
            w: &p.w * &q.w + a * &(&p.x * &q.x) + b * &(&p.y * &q.y)
                - a * &(b * &(&p.z * &q.z)),
            x: &p.w * &q.x + &p.x * &q.w - b * &(&p.y * &q.z) + b * &(&p.z * &q.y),
            y: &p.w * &q.y + &p.y * &q.w + a * &(&p.x * &q.z) - a * &(&p.z * &q.x),
            z: &p.w * &q.z + &p.z * &q.w + &p.x * &q.y - &p.y * &q.x,
        }
    }

    /// Reduced norm w^2 - a x^2 - b y^2 + a b z^2.
    pub fn nrd(&self, p: &QuatElt) -> Rat {
        &p.w * &p.w - &self.a * &(&p.x * &p.x) - &self.b * &(&p.y * &p.y)
            + &self.a * &(&self.b * &(&p.z * &p.z))
    }

    /// Inverse conj(p)/nrd(p); fails when the norm vanishes, which for a
    /// nonzero p can only happen in a split algebra.
    pub fn inv(&self, p: &QuatElt) -> Result<QuatElt> {
        let n = self.nrd(p);
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(p.conj().scale(&n.recip()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatElt {
    pub w: Rat,
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl QuatElt {
    pub fn new(w: Rat, x: Rat, y: Rat, z: Rat) -> Self {
        QuatElt { w, x, y, z }
    }

    pub fn from_rational(w: Rat) -> Self {
        QuatElt {
            w,
            x: Rat::zero(),
            y: Rat::zero(),
            z: Rat::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn conj(&self) -> QuatElt {
        QuatElt {
            w: self.w.clone(),
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }

    /// Reduced trace 2w.
    pub fn trd(&self) -> Rat {
        &self.w + &self.w
    }

    pub fn add(&self, other: &QuatElt) -> QuatElt {
        QuatElt {
            w: &self.w + &other.w,
            x: &self.x + &other.x,
            y: &self.y + &other.y,
            z: &self.z + &other.z,
        }
    }

    pub fn sub(&self, other: &QuatElt) -> QuatElt {
        QuatElt {
            w: &self.w - &other.w,
            x: &self.x - &other.x,
            y: &self.y - &other.y,
            z: &self.z - &other.z,
        }
    }

    pub fn neg(&self) -> QuatElt {
        QuatElt {
            w: -&self.w,
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }

    pub fn scale(&self, c: &Rat) -> QuatElt {
        QuatElt {
            w: &self.w * c,
            x: &self.x * c,
            y: &self.y * c,
            z: &self.z * c,
        }
    }
}

impl fmt::Display for QuatElt {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (c, unit) in [
            (&self.w, ""),
            (&self.x, "i"),
            (&self.y, "j"),
            (&self.z, "k"),
        ] {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(out, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(out, "-")?;
            }
            let mag = c.abs();
            if unit.is_empty() {
                write!(out, "{}", mag)?;
            } else if mag.is_one() {
                write!(out, "{}", unit)?;
            } else {
                write!(out, "{}*{}", mag, unit)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(out, "0")?;
        }
        Ok(())
    }
}

/// A square matrix over a fixed quaternion algebra, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatMat {
    algebra: QuatAlgebra,
    n: usize,
    entries: Vec<QuatElt>,
}

impl QuatMat {
    pub fn new(algebra: QuatAlgebra, n: usize, entries: Vec<QuatElt>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {n} x {n} matrix",
                entries.len()
            )));
        }
        Ok(QuatMat {
            algebra,
            n,
            entries,
        })
    }

    pub fn from_rows(algebra: QuatAlgebra, rows: Vec<Vec<QuatElt>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(algebra, n, rows.into_iter().flatten().collect())
    }

    pub fn zero(algebra: QuatAlgebra, n: usize) -> Result<Self> {
        Self::new(algebra, n, vec![QuatElt::zero(); n * n])
    }

    pub fn identity(algebra: QuatAlgebra, n: usize) -> Result<Self> {
        Self::scalar(algebra, n, &Rat::one())
    }

    pub fn scalar(algebra: QuatAlgebra, n: usize, c: &Rat) -> Result<Self> {
        let mut m = Self::zero(algebra, n)?;
        for i in 0..n {
            m.entries[i * n + i] = QuatElt::from_rational(c.clone());
        }
        Ok(m)
    }

    /// The companion matrix of a monic h, as a rational quaternion matrix.
    /// Its characteristic polynomial here is h^2.
    pub fn companion(algebra: QuatAlgebra, h: &RatPoly) -> Result<Self> {
        if h.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !h.is_monic() {
            return Err(Error::NonMonic(h.leading().unwrap().to_string()));
        }
        if h.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        let n = h.deg();
        let mut m = Self::zero(algebra, n)?;
        for i in 1..n {
            m.entries[i * n + (i - 1)] = QuatElt::one();
        }
        for i in 0..n {
            m.entries[i * n + (n - 1)] = QuatElt::from_rational(-h.coeff(i));
        }
        Ok(m)
    }

    pub fn block_diag(&self, other: &QuatMat) -> Result<QuatMat> {
        if self.algebra != other.algebra {
            return Err(Error::ShapeMismatch("different algebras".into()));
        }
        let n = self.n + other.n;
        let mut m = Self::zero(self.algebra.clone(), n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                m.entries[i * n + j] = self.entry(i, j).clone();
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                m.entries[(self.n + i) * n + (self.n + j)] = other.entry(i, j).clone();
            }
        }
        Ok(m)
    }

    pub fn algebra(&self) -> &QuatAlgebra {
        &self.algebra
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &QuatElt {
        &self.entries[i * self.n + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, value: QuatElt) {
        self.entries[i * self.n + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(QuatElt::is_zero)
    }

    fn check_shape(&self, other: &QuatMat) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::ShapeMismatch("different algebras".into()));
        }
        if self.n != other.n {
            return Err(Error::ShapeMismatch(format!(
                "sizes {} and {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &QuatMat) -> Result<QuatMat> {
        self.check_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(p, q)| p.add(q))
            .collect();
        Ok(QuatMat {
            algebra: self.algebra.clone(),
            n: self.n,
            entries,
        })
    }

    pub fn sub(&self, other: &QuatMat) -> Result<QuatMat> {
        self.check_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(p, q)| p.sub(q))
            .collect();
        Ok(QuatMat {
            algebra: self.algebra.clone(),
            n: self.n,
            entries,
        })
    }

    pub fn mul(&self, other: &QuatMat) -> Result<QuatMat> {
        self.check_shape(other)?;
        let n = self.n;
        let mut entries = vec![QuatElt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let left = self.entry(i, k);
                if left.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let term = self.algebra.mul(left, other.entry(k, j));
                    entries[i * n + j] = entries[i * n + j].add(&term);
                }
            }
        }
        Ok(QuatMat {
            algebra: self.algebra.clone(),
            n,
            entries,
        })
    }

    pub fn scale(&self, c: &Rat) -> QuatMat {
        QuatMat {
            algebra: self.algebra.clone(),
            n: self.n,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// f(M) for a rational polynomial f, by Horner evaluation.
    pub fn eval_poly(&self, f: &RatPoly) -> QuatMat {
        let mut acc = Self::zero(self.algebra.clone(), self.n).expect("valid shape");
        for k in (0..=f.deg()).rev() {
            acc = acc.mul(self).expect("same shape");
            let c = f.coeff(k);
            if !c.is_zero() {
                for i in 0..self.n {
                    let cur = acc.entry(i, i).add(&QuatElt::from_rational(c.clone()));
                    acc.set_entry(i, i, cur);
                }
            }
        }
        acc
    }

    /// The reduced characteristic polynomial, of degree 2n, through the
    /// splitting representation.
    pub fn char_poly(&self) -> RatPoly {
        let a = self.algebra.a.clone();
        let m = 2 * self.n;
        let image = self.splitting_image();
        let mut coeffs = vec![Rat::zero(); m + 1];
        coeffs[m] = Rat::one();
        // Faddeev-LeVerrier: c_{m-k} = -tr(N_k)/k, N_{k+1} = A(N_k + c I)
        let mut work = image.clone();
        for k in 1..=m {
            let (tr_u, tr_v) = pair_trace(&work);
            let kk = rat(k as i64, 1);
            let c_u = -(tr_u / &kk);
            let c_v = -(tr_v / &kk);
            assert!(
                c_v.is_zero(),
                "characteristic coefficient acquired a sqrt component"
            );
            coeffs[m - k] = c_u.clone();
            if k < m {
                for (i, row) in work.iter_mut().enumerate() {
                    row[i].0 = &row[i].0 + &c_u;
                }
                work = pair_mat_mul(&a, &image, &work);
            }
        }
        RatPoly::from_coeffs(coeffs)
    }

    /// The 2n x 2n image under the splitting representation, with entries
    /// (u, v) standing for u + v*s, s^2 = a.
    fn splitting_image(&self) -> Vec<Vec<(Rat, Rat)>> {
        let b = &self.algebra.b;
        let m = 2 * self.n;
        let mut big = vec![vec![(Rat::zero(), Rat::zero()); m]; m];
        for i in 0..self.n {
            for j in 0..self.n {
                let q = self.entry(i, j);
                big[2 * i][2 * j] = (q.w.clone(), q.x.clone());
                big[2 * i][2 * j + 1] = (q.y.clone(), q.z.clone());
                big[2 * i + 1][2 * j] = (b * &q.y, -(b * &q.z));
                big[2 * i + 1][2 * j + 1] = (q.w.clone(), -&q.x);
            }
        }
        big
    }

    /// The minimal polynomial: the first linear dependence among the powers
    /// I, M, M^2, ... as vectors in the 4n^2-dimensional rational space.
    pub fn min_poly(&self) -> RatPoly {
        let dim = 4 * self.n * self.n;
        // reduced echelon rows with their expressions in powers of M
        let mut rows: Vec<(Vec<Rat>, Vec<Rat>, usize)> = Vec::new();
        let mut power = Self::identity(self.algebra.clone(), self.n).expect("valid shape");
        let mut k = 0usize;
        loop {
            let mut vec = flatten(&power);
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
                    let mut combo_scaled = combo;
                    for t in combo_scaled.iter_mut() {
                        *t = &*t / &lead;
                    }
                    rows.push((vec, combo_scaled, pivot));
                }
            }
            debug_assert!(k <= dim, "no dependence found within the dimension bound");
            power = power.mul(self).expect("same shape");
            k += 1;
        }
    }

    /// Rank as a right-module map, by row reduction. Requires the algebra
    /// to be division: Gaussian elimination inverts nonzero pivots.
    pub fn rank(&self) -> Result<usize> {
        if !self.algebra.is_division()? {
            return Err(Error::SplitAlgebra);
        }
        let n = self.n;
        let mut rows: Vec<Vec<QuatElt>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        let mut rank = 0usize;
        for col in 0..n {
            let Some(pivot) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = self.algebra.inv(&rows[rank][col])?;
            for j in col..n {
                rows[rank][j] = self.algebra.mul(&inv, &rows[rank][j]);
            }
            for r in 0..n {
                if r == rank || rows[r][col].is_zero() {
                    continue;
                }
                let factor = rows[r][col].clone();
                for j in col..n {
                    let delta = self.algebra.mul(&factor, &rows[rank][j]);
                    rows[r][j] = rows[r][j].sub(&delta);
                }
            }
            rank += 1;
        }
        Ok(rank)
    }

    /// Two-sided inverse over a division algebra.
    pub fn inverse(&self) -> Result<QuatMat> {
        if !self.algebra.is_division()? {
            return Err(Error::SplitAlgebra);
        }
        let n = self.n;
        let mut left: Vec<Vec<QuatElt>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        let mut right: Vec<Vec<QuatElt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            QuatElt::one()
                        } else {
                            QuatElt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !left[r][col].is_zero()) else {
                return Err(Error::NotInvertible);
            };
            left.swap(col, pivot);
            right.swap(col, pivot);
            let inv = self.algebra.inv(&left[col][col])?;
            for j in 0..n {
                left[col][j] = self.algebra.mul(&inv, &left[col][j]);
                right[col][j] = self.algebra.mul(&inv, &right[col][j]);
            }
            for r in 0..n {
                if r == col || left[r][col].is_zero() {
                    continue;
                }
                let factor = left[r][col].clone();
                for j in 0..n {
                    let dl = self.algebra.mul(&factor, &left[col][j]);
                    left[r][j] = left[r][j].sub(&dl);
                    let dr = self.algebra.mul(&factor, &right[col][j]);
                    right[r][j] = right[r][j].sub(&dr);
                }
            }
        }
        QuatMat::from_rows(self.algebra.clone(), right)
    }
}

fn flatten(m: &QuatMat) -> Vec<Rat> {
    let mut out = Vec::with_capacity(4 * m.n * m.n);
    for e in &m.entries {
        out.push(e.w.clone());
        out.push(e.x.clone());
        out.push(e.y.clone());
        out.push(e.z.clone());
    }
    out
}

fn pair_trace(m: &[Vec<(Rat, Rat)>]) -> (Rat, Rat) {
    let mut u = Rat::zero();
    let mut v = Rat::zero();
    for (i, row) in m.iter().enumerate() {
        u = u + &row[i].0;
        v = v + &row[i].1;
    }
    (u, v)
}

fn pair_mat_mul(a: &Rat, lhs: &[Vec<(Rat, Rat)>], rhs: &[Vec<(Rat, Rat)>]) -> Vec<Vec<(Rat, Rat)>> {
    let m = lhs.len();
    let mut out = vec![vec![(Rat::zero(), Rat::zero()); m]; m];
    for i in 0..m {
        for k in 0..m {
            let (lu, lv) = &lhs[i][k];
            if lu.is_zero() && lv.is_zero() {
                continue;
            }
            for j in 0..m {
                let (ru, rv) = &rhs[k][j];
                let t = &mut out[i][j];
                t.0 = &t.0 + &(lu * ru) + &(a * &(lv * rv));
                t.1 = &t.1 + &(lu * rv) + &(lv * ru);
            }
        }
    }
    out
}

/// Everything the theory predicts about one element, measured directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementInvariants {
    pub char_poly: RatPoly,
    pub min_poly: RatPoly,
    /// Partitions of the invertible part, one per factor other than t.
    pub class: Option<ClassInvariant>,
    /// Partition of the nilpotent part, when t divides the characteristic
    /// polynomial.
    pub t_part: Option<Partition>,
}

/// Reads the conjugacy invariant off a matrix by measuring kernel
/// staircases: dim ker p(M)^k grows by (deg p / c_p) times the number of
/// blocks of exponent >= k, so the increments give the conjugate partition.
///
/// Non-invertible elements are rejected unless `allow_noninvertible` is
/// set, in which case the t-primary partition is reported separately.
pub fn invariants_of_element(
    m: &QuatMat,
    allow_noninvertible: bool,
) -> Result<ElementInvariants> {
    let delta = m.algebra().to_csa(1)?;
    if delta.is_split() {
        return Err(Error::SplitAlgebra);
    }
    let char_poly = m.char_poly();
    if char_poly.coeff(0).is_zero() && !allow_noninvertible {
        return Err(Error::NotInvertible);
    }
    let overrides = SplittingOverride::empty();
    let factored = factor_over_q(&char_poly)?;
    let mut class_map = BTreeMap::new();
    let mut t_part = None;
    for (p, mult) in &factored.factors {
        let (c_p, d_p) = capacity_and_division_degree_over(&delta, p, &overrides)?;
        let lambda = primary_partition(m, p, c_p)?;
        debug_assert_eq!(lambda.size() * d_p, *mult, "partition against multiplicity");
        if p.is_t() {
            t_part = Some(lambda);
        } else {
            class_map.insert(p.clone(), lambda);
        }
    }
    let min_poly = m.min_poly();
    debug_assert_eq!(
        min_poly,
        factored
            .factors
            .iter()
            .map(|(p, _)| {
                let lambda = if p.is_t() {
                    t_part.as_ref().unwrap()
                } else {
                    &class_map[p]
                };
                p.pow(lambda.max_part())
            })
            .fold(RatPoly::one(), |acc, f| &acc * &f),
        "minimal polynomial against top exponents"
    );
    let class = if class_map.is_empty() {
        None
    } else {
        Some(ClassInvariant::new_unchecked(class_map))
    };
    Ok(ElementInvariants {
        char_poly,
        min_poly,
        class,
        t_part,
    })
}

fn primary_partition(m: &QuatMat, p: &RatPoly, c_p: usize) -> Result<Partition> {
    debug_assert_eq!(p.deg() % c_p, 0, "capacity divides the field degree");
    let step = p.deg() / c_p;
    let base = m.eval_poly(p);
    let mut power = base.clone();
    let mut prev_kernel = 0usize;
    let mut conjugate_parts = Vec::new();
    loop {
        let kernel = m.n() - power.rank()?;
        let jump = kernel - prev_kernel;
        if jump == 0 {
            break;
        }
        debug_assert_eq!(jump % step, 0, "kernel jump against the length scale");
        conjugate_parts.push(jump / step);
        prev_kernel = kernel;
        power = power.mul(&base)?;
    }
    debug_assert!(conjugate_parts.windows(2).all(|w| w[0] >= w[1]));
    Ok(Partition::new(conjugate_parts)?.conjugate())
}

/// Conjugacy in Mat_n of a division quaternion algebra: true exactly when
/// the measured invariants coincide.
pub fn conjugate_test(m1: &QuatMat, m2: &QuatMat) -> Result<bool> {
    if m1.algebra() != m2.algebra() {
        return Err(Error::ShapeMismatch("different algebras".into()));
    }
    if m1.n() != m2.n() {
        return Err(Error::ShapeMismatch(format!(
            "sizes {} and {}",
            m1.n(),
            m2.n()
        )));
    }
    let inv1 = invariants_of_element(m1, true)?;
    if inv1.char_poly != m2.char_poly() {
        return Ok(false);
    }
    let inv2 = invariants_of_element(m2, true)?;
    Ok(inv1 == inv2)
}

/// Searches for a matrix with the prescribed characteristic polynomial:
/// first structured candidates (companion matrices for perfect squares,
/// block-diagonal assemblies of low-height quaternions with prescribed
/// trace and norm), then seeded random sampling. Absence of a witness is
/// not a disproof.
pub fn search_realization(
    algebra: &QuatAlgebra,
    n: usize,
    f: &RatPoly,
    height: i64,
    trials: usize,
    seed: u64,
) -> Result<Option<QuatMat>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NonMonic(f.leading().unwrap().to_string()));
    }
    if n == 0 || f.deg() != 2 * n {
        return Err(Error::DegreeMismatch {
            expected: 2 * n,
            got: f.deg(),
        });
    }
    let height = height.max(1);
    // any rational matrix has the characteristic polynomial of its plain
    // rational version, squared
    if let Some(h) = poly_sqrt(f)? {
        let m = QuatMat::companion(algebra.clone(), &h)?;
        debug_assert_eq!(m.char_poly(), *f);
        return Ok(Some(m));
    }
    if let Some(blocks) = chunk_blocks(algebra, f, height)? {
        let mut m = block_to_mat(algebra, &blocks[0])?;
        for q in &blocks[1..] {
            m = m.block_diag(&block_to_mat(algebra, q)?)?;
        }
        debug_assert_eq!(m.n(), n);
        if m.char_poly() == *f {
            return Ok(Some(m));
        }
    }
    for trial in 0..trials {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed.wrapping_add((trial as u64).wrapping_mul(0x9E3779B97F4A7C15)));
        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n * n {
            entries.push(QuatElt::new(
                random_coord(&mut rng, height),
                random_coord(&mut rng, height),
                random_coord(&mut rng, height),
                random_coord(&mut rng, height),
            ));
        }
        let m = QuatMat::new(algebra.clone(), n, entries)?;
        if m.char_poly() == *f {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn random_coord(rng: &mut ChaCha8Rng, height: i64) -> Rat {
    rat(rng.gen_range(-height..=height), rng.gen_range(1..=2))
}

/// The monic square root of f, when f = h^2 for monic h.
fn poly_sqrt(f: &RatPoly) -> Result<Option<RatPoly>> {
    if f.deg() % 2 != 0 {
        return Ok(None);
    }
    let factored = factor_over_q(f)?;
    let mut h = RatPoly::one();
    for (p, e) in &factored.factors {
        if e % 2 != 0 {
            return Ok(None);
        }
        h = &h * &p.pow(e / 2);
    }
    Ok(Some(h))
}

/// Splits f into monic quadratic chunks, each realizable as the reduced
/// characteristic polynomial of a single quaternion found by grid search.
fn chunk_blocks(
    algebra: &QuatAlgebra,
    f: &RatPoly,
    height: i64,
) -> Result<Option<Vec<QuatElt>>> {
    if f.is_one() {
        return Ok(Some(Vec::new()));
    }
    if f.deg() % 2 != 0 {
        return Ok(None);
    }
    let factored = factor_over_q(f)?;
    let mut chunks: Vec<RatPoly> = Vec::new();
    let linears: Vec<&RatPoly> = factored
        .factors
        .iter()
        .filter(|(p, _)| p.deg() == 1)
        .map(|(p, _)| p)
        .collect();
    for (p, e) in &factored.factors {
        if p.deg() == 2 {
            chunks.push(p.clone());
        }
        if p.deg() == 1 && *e >= 2 {
            chunks.push(p.pow(2));
        }
    }
    for (i, p) in linears.iter().enumerate() {
        for q in &linears[i + 1..] {
            chunks.push(*p * *q);
        }
    }
    chunks.sort();
    chunks.dedup();
    for chunk in chunks {
        let tau = -chunk.coeff(1);
        let nu = chunk.coeff(0);
        let Some(alpha) = solve_trace_norm(algebra, &tau, &nu, height) else {
            continue;
        };
        let (rest, rem) = f.divrem(&chunk)?;
        debug_assert!(rem.is_zero());
        if let Some(mut blocks) = chunk_blocks(algebra, &rest, height)? {
            blocks.insert(0, alpha);
            return Ok(Some(blocks));
        }
    }
    Ok(None)
}

fn block_to_mat(algebra: &QuatAlgebra, q: &QuatElt) -> Result<QuatMat> {
    QuatMat::new(algebra.clone(), 1, vec![q.clone()])
}

/// A quaternion with reduced trace tau and reduced norm nu, if the grid of
/// half-integer coordinates up to the height bound contains one.
fn solve_trace_norm(
    algebra: &QuatAlgebra,
    tau: &Rat,
    nu: &Rat,
    height: i64,
) -> Option<QuatElt> {
    let w = tau / &rat(2, 1);
    // need a x^2 + b y^2 - a b z^2 = w^2 - nu
    let target = &(&w * &w) - nu;
    let a = algebra.a();
    let b = algebra.b();
    let ab = a * b;
    for xi in snake(2 * height) {
        let x = rat(xi, 2);
        let xterm = a * &(&x * &x);
        for yi in snake(2 * height) {
            let y = rat(yi, 2);
            let yterm = b * &(&y * &y);
            for zi in snake(2 * height) {
                let z = rat(zi, 2);
                if &(&xterm + &yterm) - &(&ab * &(&z * &z)) == target {
                    return Some(QuatElt::new(w, x, y, z));
                }
            }
        }
    }
    None
}

/// 0, 1, -1, 2, -2, ..., bound, -bound.
fn snake(bound: i64) -> impl Iterator<Item = i64> {
    (0..=bound).flat_map(|v| {
        if v == 0 {
            vec![0]
        } else {
            vec![v, -v]
        }
    })
}
