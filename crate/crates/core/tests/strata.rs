mod common;

use common::{balanced_thetas, dv, indivisible_vectors, sweep_quivers};
use hnkac_core::strata::{codim_moment_routes, dim_t_routes, s0_commutant_dim};
use hnkac_core::{enumerate_hn_types, strata_report, Guards, HnType, Quiver, Stability};

#[test]
fn both_routes_agree_on_sweep() {
    let mut checked = 0;
    for (name, q) in sweep_quivers() {
        for alpha in indivisible_vectors(q.vertex_count(), 6) {
            for theta in balanced_thetas(&alpha) {
                for t in enumerate_hn_types(&q, &alpha, &theta).unwrap() {
                    let (a, b) = dim_t_routes(&q, &t).unwrap();
                    assert_eq!(a, b, "{name} {t}");
                    let (a, b) = codim_moment_routes(&q, &t).unwrap();
                    assert_eq!(a, b, "{name} {t}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn kronecker_ten_strata_row() {
    let q = Quiver::kronecker(10);
    let r = strata_report(
        &q,
        &dv(&[3, 2]),
        &Stability::new(vec![2, -3]),
        &Guards::default(),
    )
    .unwrap();
    let t = HnType::new(vec![dv(&[2, 1]), dv(&[1, 1])]).unwrap();
    let row = r.rows.iter().find(|row| row.hn_type == t).unwrap();
    assert_eq!(
        (row.epsilon, row.threshold, row.codim_moment),
        (1, Some(10), 24)
    );
    assert_eq!(
        (row.codim_rep, row.constant_c, row.end_flag_dim),
        (17, 40, 10)
    );
    assert_eq!(row.dim_t, 84);
    assert_eq!(r.dim_mu_zero, 108);
}

#[test]
fn commutant_is_scalar_for_positive_epsilon() {
    let guards = Guards::default();
    let mut seen = 0;
    for alpha in indivisible_vectors(2, 5)
        .into_iter()
        .chain([dv(&[2, 2]), dv(&[2, 0])])
    {
        for theta in balanced_thetas(&alpha) {
            let types = enumerate_hn_types(&Quiver::kronecker(1), &alpha, &theta).unwrap();
            for t in types.iter().filter(|t| t.epsilon() >= 1) {
                let values: Vec<u64> = [1, 3]
                    .iter()
                    .map(|&n| s0_commutant_dim(&Quiver::kronecker(n), t, &guards).unwrap())
                    .collect();
                assert_eq!(values, vec![1, 1], "{t}");
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn example_flag_epsilon() {
    let t = HnType::new(vec![dv(&[3, 5]), dv(&[1, 6]), dv(&[6, 4])]).unwrap();
    assert_eq!(t.epsilon(), 3);
    assert_eq!(t.end_flag_dim(), 224);
    assert_eq!(t.edge_threshold(), Some(75));
}
