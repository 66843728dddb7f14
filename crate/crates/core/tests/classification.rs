use codegree_core::dual_degrees::orbit_crosscheck;
use codegree_core::kac_gradings::{
    degree_table, full_report, is_exceptional_row, normalize_types, parse_types,
    scan_classification, Corank,
};
use codegree_core::{GradingReport, KacDiagram};

fn scan() -> Vec<GradingReport> {
    scan_classification(13).unwrap()
}

fn same_types(a: &str, b: &str) -> bool {
    normalize_types(&parse_types(a).unwrap()) == normalize_types(&parse_types(b).unwrap())
}

#[test]
fn exceptional_rows_match_reference() {
    let rows = scan();
    let exc: Vec<&GradingReport> = rows.iter().filter(|r| is_exceptional_row(r)).collect();
    assert_eq!(exc.len(), 10);
    for r in exc {
        let p = r.reference.as_ref().unwrap();
        let refl_total: u64 = r.reflection_profile.as_ref().unwrap().iter().map(|c| c.reflections).sum();
        assert_eq!(r.m, p.m);
        assert_eq!(r.little_weyl_name.as_deref(), Some(p.little_weyl.as_str()));
        assert_eq!((r.m, refl_total), p.reflections);
        assert_eq!(r.codegree, Some(p.codegree));
        if r.diagram == "F4^1" && r.chosen_node == 1 {
            assert_eq!(r.g0_type, "A1xC3");
            assert_eq!(r.dims.as_ref().unwrap()[1], 28);
            assert_eq!(r.warnings.len(), 1, "{:?}", r.warnings);
        } else {
            assert!(same_types(&r.g0_type, &p.g0_type), "{} node {}", r.diagram, r.chosen_node);
            assert!(r.warnings.is_empty(), "{:?}", r.warnings);
        }
    }
}

#[test]
fn classical_rows_match_reference() {
    let rows = scan();
    for r in rows.iter().filter(|r| !is_exceptional_row(r)) {
        let p = r.reference.as_ref().unwrap_or_else(|| panic!("{} node {} has no reference", r.diagram, r.chosen_node));
        assert!(same_types(&r.g0_type, &p.g0_type), "{} node {}", r.diagram, r.chosen_node);
        assert_eq!(r.dims.as_ref().unwrap()[1], p.g1_dim);
        assert_eq!(r.little_weyl_name.as_deref(), Some(p.little_weyl.as_str()));
        assert_eq!(r.codegree, Some(p.codegree));
        assert!(r.warnings.is_empty());
    }
}

#[test]
fn degree_table_matches() {
    let t = degree_table(1..=6).unwrap();
    for e in &t {
        assert_eq!(e.reference, e.computed, "{e:?}");
    }
    assert!(t.iter().any(|e| e.group == "W(E8)" && e.class == "alpha" && e.computed == 240));
    let b4: Vec<_> = t.iter().filter(|e| e.group == "W(B_{2p})" && e.parameter == Some(2)).collect();
    assert_eq!(b4.iter().map(|e| e.computed).collect::<Vec<_>>(), vec![24, 8]);
}

#[test]
fn orbit_codegrees_agree() {
    let checks = orbit_crosscheck(&scan()).unwrap();
    assert!(checks.iter().all(|c| c.agrees));
    let by_orbit = |o: &str| checks.iter().find(|c| c.orbit == o).map(|c| c.katz_kleiman);
    assert_eq!(by_orbit("G(4,8)"), Some(126));
    assert_eq!(by_orbit("P^4 x G(2,5)"), Some(60));
    assert_eq!(by_orbit("v_3(P^2)"), Some(12));
}

#[test]
fn corank_and_dims() {
    let d: KacDiagram = "E8^1".parse().unwrap();
    let r = full_report(&d, 4).unwrap();
    assert_eq!(r.m, 6);
    assert_eq!(r.dims.as_ref().unwrap().iter().sum::<usize>(), 248);
    let r = full_report(&"E7^1".parse().unwrap(), 2).unwrap();
    assert_eq!(r.theta_corank, Corank::Known(0));
    for d in ["A2^2", "D4^3", "E6^2", "D5^2"] {
        let dg: KacDiagram = d.parse().unwrap();
        for node in 0..dg.node_count() {
            let r = full_report(&dg, node).unwrap();
            if let Some(dims) = &r.dims {
                assert_eq!(dims.iter().sum::<usize>(), r.g_type.dim(), "{d} node {node}");
            }
        }
    }
}
