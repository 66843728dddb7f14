use codegree_core::dual_degrees::{
    codegree_grassmannian, codegree_lagrangian, codegree_product_with_pk, codegree_segre_quadrics,
    codegree_spinor, katz_kleiman, segre_product, GrassmannianMethod, Method,
};
use codegree_core::kac_gradings::{root_classes, scan_classification};
use codegree_core::ChowModel;

#[test]
fn grassmannian_routes_agree() {
    for n in 4..=10 {
        for k in 2..=n - 2 {
            let r = codegree_grassmannian(k, n, GrassmannianMethod::Both).unwrap();
            assert!(r.cross_checks.iter().any(|c| c.agrees == Some(true)), "G({k},{n})");
        }
    }
    assert_eq!(codegree_grassmannian(3, 9, GrassmannianMethod::Sum).unwrap().value, 120);
    assert_eq!(codegree_grassmannian(4, 8, GrassmannianMethod::KatzKleiman).unwrap().value, 126);
}

#[test]
fn grassmannian_duality_symmetry() {
    // G(k,n) and G(n-k,n) are the same variety.
    for n in 4..=9 {
        for k in 1..n {
            let a = codegree_grassmannian(k, n, GrassmannianMethod::Sum).unwrap().value;
            let b = codegree_grassmannian(n - k, n, GrassmannianMethod::Sum).unwrap().value;
            assert_eq!(a, b, "G({k},{n})");
        }
    }
}

#[test]
fn lagrangian_and_spinor() {
    assert_eq!(codegree_lagrangian(3).unwrap().value, 4);
    assert_eq!(codegree_lagrangian(4).unwrap().value, 72);
    let s8 = codegree_spinor(8).unwrap();
    assert_eq!(s8.value, 240);
    assert_eq!(s8.method, Method::ClosedForm);
    assert_eq!(codegree_spinor(5).unwrap().value, 0);
    assert_eq!(codegree_spinor(4).unwrap().value, 2);
    // LG(2,4) is a 3-dimensional quadric
    assert_eq!(codegree_lagrangian(2).unwrap().value, katz_kleiman(&ChowModel::quadric(3)).unwrap().value);
}

#[test]
fn segre_hypersurface_criterion() {
    let check = |dims: &[usize]| {
        let v = segre_product(dims).unwrap().value;
        let mut d = dims.to_vec();
        d.sort();
        let largest = *d.last().unwrap();
        let rest: usize = d[..d.len() - 1].iter().sum();
        assert_eq!(v > 0, largest <= rest, "{dims:?} gives {v}");
    };
    for a in 1..=4 {
        check(&[a]);
        for b in 1..=4 {
            check(&[a, b]);
            for c in 1..=4 {
                check(&[a, b, c]);
            }
        }
    }
    assert_eq!(segre_product(&[2, 2, 2]).unwrap().value, 36);
    assert_eq!(segre_product(&[1, 2]).unwrap().value, 0);
    assert_eq!(segre_product(&[2, 2]).unwrap().value, 3);
}

#[test]
fn quadrics_and_veronese() {
    for d in 1..=8 {
        assert_eq!(katz_kleiman(&ChowModel::quadric(d)).unwrap().value, 2);
    }
    let v = |n, d| ChowModel::Projective { n, veronese: d };
    for (n, d, want) in [(1, 2, 2), (1, 3, 4), (2, 2, 3), (2, 3, 12)] {
        assert_eq!(katz_kleiman(&v(n, d)).unwrap().value, want);
    }
    assert_eq!(codegree_product_with_pk(&v(1, 3), 1).unwrap().value, 6);
    let v2p2 = ChowModel::product(vec![v(2, 2), ChowModel::projective(2)]);
    assert_eq!(katz_kleiman(&v2p2).unwrap().value, 12);
}

#[test]
fn quadric_products_and_conjecture() {
    for (a, b, want) in [(4, 4, 24), (4, 5, 24), (5, 5, 40), (6, 7, 60)] {
        assert_eq!(codegree_segre_quadrics(a, b).unwrap().result.value, want, "({a},{b})");
    }
    for a in 3..=10 {
        for b in a..=10 {
            let r = codegree_segre_quadrics(a, b).unwrap();
            assert!(r.conjecture_holds, "({a},{b}): {} vs {}", r.result.value, r.conjectured);
        }
    }
}

#[test]
fn counterexamples() {
    assert_eq!(segre_product(&[1, 2, 5]).unwrap().value, 0);
    let r = codegree_product_with_pk(&ChowModel::Spinor { n: 5 }, 3).unwrap();
    assert_eq!(r.value, 0);
    assert!(!r.is_hypersurface);
    // S_10 has dual defect 4: X x P^k is degenerate exactly for k < 4
    for k in 0..=5 {
        let v = codegree_product_with_pk(&ChowModel::Spinor { n: 5 }, k).unwrap().value;
        assert_eq!(v > 0, k >= 4, "k = {k}");
    }
}

#[test]
fn codegree_times_m_minus_one_is_long_root_count() {
    for r in scan_classification(8).unwrap() {
        let Some(c) = r.codegree else { continue };
        let (long, _) = root_classes(r.g_type).unwrap();
        assert_eq!((r.m as u64 - 1) * c, long as u64, "{} node {}", r.diagram, r.chosen_node);
    }
}
