mod common;

use common::{balanced_thetas, dv, indivisible_vectors, sweep_quivers};
use hnkac_core::hua::{enumerate_compositions, eval_integer, BucketKey};
use hnkac_core::phi::{b_exponent, phi_vec};
use hnkac_core::strata::codim_moment;
use hnkac_core::{
    kac_polynomial, kac_report, stratified_decomposition, verify_bucket_shift, HnType,
    LaurentPolynomial, Quiver, RootClass, Stability,
};

fn p(c: &[i64]) -> LaurentPolynomial {
    LaurentPolynomial::from_coeffs(c)
}

#[test]
fn known_kac_polynomials() {
    let cases: &[(Quiver, &[u32], &[i64])] = &[
        (Quiver::kronecker(2), &[1, 1], &[1, 1]),
        (Quiver::kronecker(2), &[2, 1], &[1]),
        (Quiver::kronecker(2), &[3, 2], &[1]),
        (Quiver::kronecker(3), &[2, 1], &[1, 1, 1]),
        (Quiver::kronecker(1), &[1, 1], &[1]),
        (Quiver::kronecker(1), &[2, 1], &[]),
        // affine type Ã₂ at the null root: q + |I| − 1
        (Quiver::triangle(), &[1, 1, 1], &[2, 1]),
        (Quiver::triangle(), &[1, 0, 1], &[1]),
    ];
    for (q, alpha, expected) in cases {
        assert_eq!(
            kac_polynomial(q, &dv(alpha)).unwrap(),
            p(expected),
            "{alpha:?}"
        );
    }
}

#[test]
fn kronecker_ten_three_two() {
    let a = kac_polynomial(&Quiver::kronecker(10), &dv(&[3, 2])).unwrap();
    assert_eq!(a.degree().unwrap(), 48);
    assert_eq!(eval_integer(&a, 0).unwrap(), 2);
    assert!(a.has_nonnegative_coeffs());
}

#[test]
fn kac_theorem_sweep() {
    for (name, q) in sweep_quivers() {
        for alpha in indivisible_vectors(q.vertex_count(), 6) {
            let r = kac_report(&q, &alpha).unwrap();
            assert!(
                r.consistent_with_root_class(),
                "{name} {alpha}: {} ({:?})",
                r.polynomial,
                r.root_class
            );
            assert_eq!(r.polynomial.is_zero(), r.root_class == RootClass::NotRoot);
        }
    }
}

#[test]
fn bucket_sweep_identities() {
    for (name, q) in sweep_quivers() {
        for alpha in indivisible_vectors(q.vertex_count(), 5) {
            for theta in balanced_thetas(&alpha) {
                let r = stratified_decomposition(&q, &alpha, &theta).unwrap();
                let trivial = r
                    .bucket(&BucketKey::Hn(HnType::new(vec![alpha.clone()]).unwrap()))
                    .unwrap();
                assert_eq!(
                    trivial.degree().unwrap(),
                    b_exponent(&alpha) - q.euler_form(&alpha, &alpha).unwrap(),
                    "{name} {alpha}"
                );
                let q_minus_one = p(&[-1, 1]);
                assert_eq!(&r.kac * &phi_vec(&alpha), &r.total * &q_minus_one);
                for c in &r.checks {
                    assert_eq!(
                        c.term_degree,
                        c.l_alpha - c.codim_moment,
                        "{name} {alpha} {}",
                        c.hn_type
                    );
                    assert!(c.l_type <= c.term_degree, "{name} {alpha} {}", c.hn_type);
                    if c.threshold_met {
                        assert!(
                            c.holds,
                            "{name} {alpha} θ={:?} {}: gap {} vs codim {}",
                            theta.coords(),
                            c.hn_type,
                            c.degree_gap(),
                            c.codim_moment
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn bucket_polynomials_are_deterministic() {
    let q = Quiver::kronecker(3);
    let alpha = dv(&[3, 2]);
    let theta = Stability::new(vec![2, -3]);
    let first = stratified_decomposition(&q, &alpha, &theta).unwrap();
    for _ in 0..3 {
        assert_eq!(stratified_decomposition(&q, &alpha, &theta).unwrap(), first);
    }
}

/// Bucket degrees for Kronecker(10), α = (3,2), θ = (2,−3), computed
/// independently with a symbolic-algebra prototype of the same expansion.
#[test]
fn kronecker_ten_bucket_degrees() {
    let q = Quiver::kronecker(10);
    let r = stratified_decomposition(&q, &dv(&[3, 2]), &Stability::new(vec![2, -3])).unwrap();
    let expected: &[(&[&[u32]], i64)] = &[
        (&[&[3, 2]], 56),
        (&[&[2, 1], &[1, 1]], 31),
        (&[&[1, 0], &[2, 1], &[0, 1]], 21),
        (&[&[1, 0], &[2, 2]], 38),
        (&[&[2, 0], &[1, 1], &[0, 1]], 12),
        (&[&[2, 0], &[1, 2]], 20),
        (&[&[3, 0], &[0, 2]], -4),
        (&[&[3, 1], &[0, 1]], 27),
    ];
    for (parts, degree) in expected {
        let b = r.hn_bucket(parts).unwrap_or_else(|| panic!("{parts:?}"));
        assert_eq!(b.degree(), Some(*degree), "{parts:?}");
    }
    let t = HnType::new(vec![dv(&[2, 1]), dv(&[1, 1])]).unwrap();
    let c = r.check_for(&t).unwrap();
    assert_eq!(
        (c.epsilon, c.threshold, c.threshold_met),
        (1, Some(10), true)
    );
    assert_eq!(c.codim_moment, codim_moment(&q, &t).unwrap());
    assert_eq!(c.codim_moment, 24);
    assert_eq!(c.term_degree, 56 - 24);
}

#[test]
fn shifted_buckets_independent_of_multiplicity() {
    let pairs = [(2, 3), (3, 10), (10, 11)];
    for (alpha, theta) in [
        (dv(&[1, 1]), vec![1, -1]),
        (dv(&[2, 1]), vec![1, -2]),
        (dv(&[3, 2]), vec![2, -3]),
    ] {
        for (n1, n2) in pairs {
            let r = verify_bucket_shift(
                &Quiver::kronecker(1),
                &alpha,
                &Stability::new(theta.clone()),
                n1,
                n2,
            )
            .unwrap();
            assert!(r.hn_buckets_agree(), "{alpha} {n1} {n2}: {:?}", r.rows);
        }
    }
}

#[test]
fn composition_count_matches_recursion() {
    // f(3,2) = 76 and f(1,1) = 3
    assert_eq!(enumerate_compositions(&dv(&[3, 2])).unwrap().len(), 76);
    assert_eq!(enumerate_compositions(&dv(&[1, 1])).unwrap().len(), 3);
}
