use codegree_core::root_systems::{
    cartan_pairing, expected_root_count, root_counts_by_length, simple_root_coordinates,
    weyl_orbit, weyl_reflect,
};
use codegree_core::{build_root_system, Family, LengthClass};
use proptest::prelude::*;

fn types() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (1usize..=7).prop_map(|r| (Family::A, r)),
        (2usize..=7).prop_map(|r| (Family::B, r)),
        (3usize..=7).prop_map(|r| (Family::C, r)),
        (4usize..=7).prop_map(|r| (Family::D, r)),
        (6usize..=8).prop_map(|r| (Family::E, r)),
        Just((Family::F, 4)),
        Just((Family::G, 2)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_under_reflections((f, r) in types(), i in 0usize..64, j in 0usize..64) {
        let rs = build_root_system(f, r).unwrap();
        let n = rs.roots.len();
        prop_assert_eq!(n, expected_root_count(f, r));
        let a = &rs.roots[i % n].coordinates;
        let b = &rs.roots[j % n].coordinates;
        let img = weyl_reflect(a, b);
        prop_assert!(rs.index_of(&img).is_some());
        let p = cartan_pairing(b, a).unwrap();
        prop_assert!(p.is_integer() && p.to_integer().abs() <= 3);
    }

    #[test]
    fn simple_coordinates_have_one_sign((f, r) in types(), i in 0usize..240) {
        let rs = build_root_system(f, r).unwrap();
        let root = &rs.roots[i % rs.roots.len()];
        let c = simple_root_coordinates(&rs, &root.coordinates).unwrap();
        prop_assert!(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0));
        let hr = rs.highest_root_coordinates();
        prop_assert!(c.iter().zip(&hr).all(|(x, h)| x.abs() <= *h));
    }

    #[test]
    fn orbits_are_length_classes((f, r) in types()) {
        let rs = build_root_system(f, r).unwrap();
        let (long, short) = root_counts_by_length(&rs);
        prop_assert_eq!(long + short, rs.roots.len());
        let first_short = rs.length_class.iter().position(|c| *c == LengthClass::Short);
        let orbit = weyl_orbit(&rs, &rs.highest_root().coordinates);
        prop_assert_eq!(orbit.len(), long);
        if let Some(k) = first_short {
            prop_assert_eq!(weyl_orbit(&rs, &rs.roots[k].coordinates).len(), short);
        } else {
            prop_assert_eq!(short, 0);
        }
    }
}

#[test]
fn cartan_matrices_of_small_types() {
    let b2 = build_root_system(Family::B, 2).unwrap();
    assert_eq!(b2.cartan_matrix, vec![vec![2, -1], vec![-2, 2]]);
    let g2 = build_root_system(Family::G, 2).unwrap();
    assert_eq!(root_counts_by_length(&g2), (6, 6));
    let f4 = build_root_system(Family::F, 4).unwrap();
    assert_eq!(f4.highest_root_coordinates(), vec![2, 3, 4, 2]);
    let e8 = build_root_system(Family::E, 8).unwrap();
    assert_eq!(e8.highest_root_coordinates(), vec![2, 3, 4, 6, 5, 4, 3, 2]);
    assert!(build_root_system(Family::D, 3).is_err());
}
