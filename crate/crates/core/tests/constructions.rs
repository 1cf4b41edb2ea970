use oneplane::algorithms::{
    near_perfect_verdict, tutte_berge_in, vertex_connectivity, DeficiencyWitness, TutteBergeMode,
};
use oneplane::constructions::{
    build_cocktail8, build_figure1, build_g0, build_quad_diag, g0_black_set, quad_diag_instance,
    random_quadrangulation, QuadFaceSpec,
};

#[test]
fn constructions_validate() {
    for d in [build_figure1(), build_g0(), build_cocktail8()] {
        assert!(d.validate().valid);
    }
    for n in (8..=30).step_by(2) {
        for seed in 0..3 {
            for sparse in [false, true] {
                let d = quad_diag_instance(n, seed, sparse).unwrap();
                let r = d.validate();
                assert!(r.valid && r.is_type_2a_drawing, "n = {n} seed = {seed} sparse = {sparse}");
            }
        }
    }
}

#[test]
fn all_face_diagonals_double_the_degree() {
    for n in (8..=40).step_by(4) {
        let q = random_quadrangulation(n, n as u64).unwrap();
        let delta = q.graph.min_degree().unwrap();
        assert!(delta >= 3);
        let d = build_quad_diag(&QuadFaceSpec::all_faces(q)).unwrap();
        let g = d.graph();
        assert_eq!(g.min_degree().unwrap(), 2 * delta);
        assert_eq!(g.e(), 4 * n - 8);
        assert!(vertex_connectivity(g).unwrap() >= 4);
    }
}

#[test]
fn seeded_generation_is_reproducible() {
    for seed in 0..5 {
        let a = quad_diag_instance(24, seed, true).unwrap().to_json();
        assert_eq!(a, quad_diag_instance(24, seed, true).unwrap().to_json());
    }
    assert_ne!(quad_diag_instance(24, 0, false).unwrap(), quad_diag_instance(24, 1, false).unwrap());
}

#[test]
fn g0_deficiency_and_verdict() {
    let d = build_g0();
    let g = d.graph();
    assert!(DeficiencyWitness::for_set(g, &g0_black_set()).unwrap().deficiency >= 2);
    assert_eq!(tutte_berge_in(g, TutteBergeMode::GallaiEdmonds).unwrap().deficiency, 2);
    assert!(!near_perfect_verdict(g).0);
}

#[test]
fn type_2a_fixtures_have_local_adjacency() {
    for d in [build_g0(), build_cocktail8()] {
        let (classes, report) = d.classify().unwrap();
        assert!(report.is_type_2a_drawing);
        assert!(classes.iter().all(|c| c.local_adjacency));
    }
}

#[test]
fn odd_quadrangulations_are_rejected() {
    assert!(random_quadrangulation(9, 0).is_err());
    assert!(random_quadrangulation(6, 0).is_err());
}
