//! Randomized cross-module properties: arithmetic identities, conservation
//! laws, agreement between independent implementations, and the bridges
//! between the decision procedures and the quaternion measurements.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use csa::brauer::{
    capacity_and_division_degree_over, hilbert_symbol, quaternion_to_csa, SplittingOverride,
};
use csa::charpoly::{
    embeds, is_characteristic_polynomial, quaternion_local_global_embed, reduce_to_primary,
};
use csa::classes::{
    char_poly_of_class, class_count, classes_with_charpoly, min_poly_of_class, partition_count,
    partitions_of, realizable_pair, semisimplify_class, validate_class, ClassInvariant,
    Partition,
};
use csa::doc::{poly_from_doc, poly_to_doc, ClassDoc, MatrixDoc};
use csa::error::Error;
use csa::factor::{factor_over_q, is_irreducible};
use csa::parse::parse_poly;
use csa::poly::RatPoly;
use csa::quat::{conjugate_test, invariants_of_element, QuatAlgebra, QuatElt, QuatMat};
use csa::rat::{rat, rat_int, Rat};
use csa::splitting::{local_splitting, local_splitting_via, Place, SplittingBackend};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn rat_poly(max_len: usize) -> impl Strategy<Value = RatPoly> {
    proptest::collection::vec(small_rat(), 0..=max_len).prop_map(RatPoly::from_coeffs)
}

fn monic_poly(deg: usize) -> impl Strategy<Value = RatPoly> {
    proptest::collection::vec(small_rat(), deg).prop_map(|mut coeffs| {
        coeffs.push(rat_int(1));
        RatPoly::from_coeffs(coeffs)
    })
}

fn monic_int_poly(deg: usize) -> impl Strategy<Value = RatPoly> {
    proptest::collection::vec(-20i64..=20, deg).prop_map(|mut coeffs| {
        coeffs.push(1);
        RatPoly::from_ints(&coeffs)
    })
}

fn place() -> impl Strategy<Value = Place> {
    proptest::sample::select(vec![2u64, 3, 5, 7, 11, 13]).prop_map(Place::finite)
}

/// The three division algebras used throughout, ramified at {2, inf},
/// {3, inf}, and {2, 5} respectively.
fn division_pair() -> impl Strategy<Value = (i64, i64)> {
    proptest::sample::select(vec![(-1i64, -1i64), (-1, -3), (2, -5)])
}

fn quat_algebra() -> impl Strategy<Value = QuatAlgebra> {
    division_pair()
        .prop_map(|(a, b)| QuatAlgebra::new(rat_int(a), rat_int(b)).expect("nonzero pair"))
}

fn quat_elt() -> impl Strategy<Value = QuatElt> {
    let coord = || (-4i64..=4, 1i64..=2).prop_map(|(n, d)| rat(n, d));
    (coord(), coord(), coord(), coord()).prop_map(|(w, x, y, z)| QuatElt::new(w, x, y, z))
}

fn quat_matrix(n: usize) -> impl Strategy<Value = QuatMat> {
    (quat_algebra(), proptest::collection::vec(quat_elt(), n * n))
        .prop_map(move |(algebra, entries)| QuatMat::new(algebra, n, entries).expect("n*n entries"))
}

/// Characteristic-polynomial candidates assembled from a pool of small
/// irreducibles, so a useful share of them pass the decision.
fn pooled_charpoly() -> impl Strategy<Value = RatPoly> {
    let pool: Vec<RatPoly> = vec![
        RatPoly::from_ints(&[1, 0, 1]),
        RatPoly::from_ints(&[3, 0, 1]),
        RatPoly::from_ints(&[2, 0, 1]),
        RatPoly::from_ints(&[-1, 1]),
        RatPoly::from_ints(&[2, 1]),
    ];
    proptest::collection::vec(0usize..=2, pool.len()).prop_map(move |exponents| {
        exponents
            .iter()
            .zip(&pool)
            .fold(RatPoly::one(), |acc, (&e, p)| &acc * &p.pow(e))
    })
}

proptest! {
    #[test]
    fn divrem_reconstructs(f in rat_poly(7), g in rat_poly(5)) {
        prop_assume!(!g.is_zero());
        let (q, r) = f.divrem(&g).expect("nonzero divisor");
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.is_zero() || r.deg() < g.deg());
    }

    #[test]
    fn factorization_multiplies_back(f in monic_poly(6)) {
        let factorization = factor_over_q(&f).expect("monic input");
        let product = factorization.product();
        prop_assert_eq!(&product, &f);
        for (p, a) in &factorization.factors {
            prop_assert!(*a >= 1);
            prop_assert!(p.is_monic());
            prop_assert!(is_irreducible(p).expect("small degree"), "{} reducible", p);
        }
    }

    #[test]
    fn hilbert_symbols_multiply_to_one(a in nonzero_rat(), b in nonzero_rat()) {
        let mut places = vec![Place::Infinite, Place::finite(2)];
        for r in [&a, &b] {
            for part in [r.numer(), r.denom()] {
                for (p, _) in csa::intfactor::factorize(part.magnitude()).expect("small integer") {
                    places.push(Place::new_finite(p).expect("prime factor"));
                }
            }
        }
        places.sort();
        places.dedup();
        let mut product = 1;
        for v in &places {
            product *= hilbert_symbol(&a, &b, v).expect("nonzero arguments");
        }
        prop_assert_eq!(product, 1, "a = {}, b = {}", a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn local_degrees_conserve_and_backends_agree(
        coeffs in monic_int_poly(4),
        v in place(),
    ) {
        prop_assume!(coeffs.deg() >= 1);
        prop_assume!(is_irreducible(&coeffs).expect("small degree"));
        let auto = local_splitting(&coeffs, &v).expect("sweep covers desk inputs");
        let mut degrees = auto.local_degrees();
        prop_assert_eq!(degrees.iter().sum::<usize>(), coeffs.deg());
        if let Ok(strict) = local_splitting_via(&coeffs, &v, SplittingBackend::KummerDedekind) {
            let mut strict_degrees = strict.local_degrees();
            degrees.sort_unstable();
            strict_degrees.sort_unstable();
            prop_assert_eq!(degrees, strict_degrees);
        }
    }

    #[test]
    fn quaternion_embedding_agrees_with_invariant_computation(
        (a, b) in division_pair(),
        g in monic_int_poly(2),
    ) {
        prop_assume!(is_irreducible(&g).expect("small degree"));
        let a = rat_int(a);
        let b = rat_int(b);
        let algebra = quaternion_to_csa(&a, &b, 1).expect("nonzero pair");
        let direct = quaternion_local_global_embed(&a, &b, &g).expect("irreducible input");
        let via_invariants =
            embeds(&algebra, &g, &SplittingOverride::empty()).expect("irreducible input");
        prop_assert_eq!(direct, via_invariants, "g = {}", g);
    }

    #[test]
    fn cond_a_matches_primary_reduction(
        (a, b) in division_pair(),
        f in pooled_charpoly(),
    ) {
        prop_assume!(f.deg() >= 1);
        let f = if f.deg() % 2 == 0 {
            f
        } else {
            &f * &RatPoly::from_ints(&[-1, 1])
        };
        let algebra =
            quaternion_to_csa(&rat_int(a), &rat_int(b), f.deg() / 2).expect("nonzero pair");
        let verdict =
            is_characteristic_polynomial(&algebra, &f, &SplittingOverride::empty())
                .expect("pool factors are supported");
        let reduction = reduce_to_primary(&algebra, &f);
        let all_cond_a = verdict.certificates.iter().all(|c| c.cond_a);
        match reduction {
            Ok(components) => {
                prop_assert!(all_cond_a);
                prop_assert_eq!(components.len(), verdict.certificates.len());
            }
            Err(Error::ReductionObstructed { .. }) => prop_assert!(!all_cond_a),
            Err(other) => prop_assert!(false, "unexpected error {other}"),
        }
    }

    #[test]
    fn cayley_hamilton(n in 1usize..=2, m in quat_matrix(2)) {
        // quat_matrix(2) always builds 2x2; rebuild smaller when n = 1
        let m = if n == 1 {
            QuatMat::new(m.algebra().clone(), 1, vec![m.entry(0, 0).clone()]).expect("1x1")
        } else {
            m
        };
        prop_assert!(m.eval_poly(&m.char_poly()).is_zero());
    }

    #[test]
    fn minpoly_divides_charpoly_with_equal_support(m in quat_matrix(2)) {
        let f = m.char_poly();
        let g = m.min_poly();
        let (_, r) = f.divrem(&g).expect("nonzero minimal polynomial");
        prop_assert!(r.is_zero(), "{} does not divide {}", g, f);
        let support = |h: &RatPoly| -> BTreeSet<RatPoly> {
            factor_over_q(h)
                .expect("monic")
                .factors
                .into_iter()
                .map(|(p, _)| p)
                .collect()
        };
        prop_assert_eq!(support(&f), support(&g));
    }

    #[test]
    fn conjugation_preserves_invariants(m in quat_matrix(2), g in quat_matrix(2)) {
        prop_assume!(m.algebra() == g.algebra());
        let Ok(g_inv) = g.inverse() else {
            return Ok(());
        };
        let conjugated = g_inv.mul(&m).expect("shape").mul(&g).expect("shape");
        prop_assert_eq!(conjugated.char_poly(), m.char_poly());
        prop_assert!(conjugate_test(&m, &conjugated).expect("division algebra"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn measured_charpolys_are_accepted(m in quat_matrix(2)) {
        let f = m.char_poly();
        let algebra = m.algebra().to_csa(2).expect("division pair");
        let verdict = is_characteristic_polynomial(&algebra, &f, &SplittingOverride::empty())
            .expect("measured polynomial is supported");
        prop_assert!(verdict.answer, "rejected {}", f);
    }

    #[test]
    fn class_enumeration_counts_validates_and_round_trips(
        (a, b) in division_pair(),
        f in pooled_charpoly(),
    ) {
        prop_assume!(f.deg() >= 2 && f.deg() <= 6 && f.deg() % 2 == 0);
        let n = f.deg() / 2;
        let algebra = quaternion_to_csa(&rat_int(a), &rat_int(b), n).expect("nonzero pair");
        let overrides = SplittingOverride::empty();
        let classes = classes_with_charpoly(&algebra, &f, &overrides)
            .expect("pool charpolys avoid t");
        let count = class_count(&algebra, &f, &overrides).expect("pool charpolys avoid t");
        prop_assert_eq!(classes.len() as u128, count);

        let verdict = is_characteristic_polynomial(&algebra, &f, &overrides)
            .expect("pool factors are supported");
        if !verdict.answer {
            prop_assert_eq!(count, 0);
            return Ok(());
        }

        let mut expected = 1u128;
        for cert in &verdict.certificates {
            let (c_i, _) = capacity_and_division_degree_over(&algebra, &cert.factor, &overrides)
                .expect("pool factors are supported");
            let w = cert.component_dim.expect("accepted factor") * c_i / cert.factor_degree;
            expected *= partition_count(w);
        }
        prop_assert_eq!(count, expected);

        for class in &classes {
            let check = validate_class(&algebra, class, &overrides).expect("emitted class");
            prop_assert!(check.ok);
            prop_assert_eq!(char_poly_of_class(&algebra, class, &overrides).expect("valid"), f.clone());

            let semisimple = semisimplify_class(class);
            prop_assert_eq!(semisimplify_class(&semisimple), semisimple.clone());
            prop_assert_eq!(
                char_poly_of_class(&algebra, &semisimple, &overrides).expect("valid"),
                f.clone()
            );

            let m = min_poly_of_class(class);
            prop_assert!(
                realizable_pair(&algebra, &f, &m, &overrides).expect("valid pair"),
                "({}, {}) rejected",
                f,
                m
            );
        }

        // distinct classes, and the partition data separates them
        let mut seen = BTreeSet::new();
        for class in &classes {
            prop_assert!(seen.insert(class.to_string()));
        }
    }

    #[test]
    fn measured_invariants_match_enumerated_classes(m in quat_matrix(2)) {
        let f = m.char_poly();
        prop_assume!(!f.coeff(0).is_zero());
        let inv = invariants_of_element(&m, false).expect("invertible over division algebra");
        let class = inv.class.expect("invertible element has a class");
        let algebra = m.algebra().to_csa(2).expect("division pair");
        let overrides = SplittingOverride::empty();
        let enumerated = classes_with_charpoly(&algebra, &f, &overrides)
            .expect("measured polynomial is supported");
        prop_assert!(
            enumerated.contains(&class),
            "measured class {} not enumerated for {}",
            class,
            f
        );
    }
}

proptest! {
    #[test]
    fn partition_conjugation_is_an_involution(parts in proptest::collection::vec(1usize..=9, 1..=6)) {
        let lambda = Partition::new(parts).expect("positive parts");
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
    }

    #[test]
    fn infix_display_round_trips(f in rat_poly(7)) {
        prop_assert_eq!(parse_poly(&f.to_string()).expect("display output"), f);
    }

    #[test]
    fn poly_documents_round_trip(f in rat_poly(7)) {
        prop_assert_eq!(poly_from_doc(&poly_to_doc(&f)).expect("emitted document"), f);
    }

    #[test]
    fn matrix_documents_round_trip(m in quat_matrix(2)) {
        let doc = MatrixDoc::from_matrix(&m);
        prop_assert_eq!(doc.to_matrix().expect("emitted document"), m);
    }

    #[test]
    fn class_documents_round_trip(
        parts in proptest::collection::vec(1usize..=4, 1..=3),
        which in 0usize..=2,
    ) {
        let pool = [
            RatPoly::from_ints(&[1, 0, 1]),
            RatPoly::from_ints(&[3, 0, 1]),
            RatPoly::from_ints(&[-1, 1]),
        ];
        let lambda = Partition::new(parts).expect("positive parts");
        let class = ClassInvariant::new(BTreeMap::from([(pool[which].clone(), lambda)]))
            .expect("irreducible key");
        let doc = ClassDoc::from_class(&class);
        prop_assert_eq!(doc.to_class().expect("emitted document"), class);
    }
}

#[test]
fn partition_enumeration_matches_count() {
    for w in 0..=12 {
        let all = partitions_of(w);
        assert_eq!(all.len() as u128, partition_count(w), "w = {w}");
        let distinct: BTreeSet<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(distinct.len(), all.len());
        for lambda in &all {
            assert_eq!(lambda.size(), w);
        }
    }
}

#[test]
fn splitting_handles_known_wild_inputs() {
    // quartics whose first-generator analysis hits repeated residual roots
    let cases = [
        (
            RatPoly::from_ints(&[8, 0, -2, 0, 1]),
            2u64,
            vec![2usize, 2],
        ),
        (
            RatPoly::from_coeffs(vec![
                rat(437, 16),
                rat(15, 2),
                rat(-1, 2),
                rat_int(2),
                rat_int(1),
            ]),
            2,
            vec![4],
        ),
    ];
    for (g, p, expected) in cases {
        let st = local_splitting(&g, &Place::finite(p)).expect("sweep resolves");
        let mut degrees = st.local_degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, expected, "{g} at {p}");
    }
}

#[test]
fn big_integers_survive_the_pipeline() {
    // 2^64 + 13 is prime; the poly t^2 - (2^64+13) must factor, split, and
    // print without any small-integer assumptions breaking
    let big = BigInt::from(2u8).pow(64) + BigInt::from(13);
    let f = RatPoly::from_coeffs(vec![
        Rat::from_integer(-big.clone()),
        rat_int(0),
        rat_int(1),
    ]);
    let factored = factor_over_q(&f).expect("monic");
    assert_eq!(factored.factors.len(), 1);
    assert_eq!(factored.factors[0].1, 1);
    assert_eq!(parse_poly(&f.to_string()).expect("round trip"), f);
}
