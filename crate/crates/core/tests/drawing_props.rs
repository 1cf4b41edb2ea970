mod common;

use std::collections::BTreeSet;

use oneplane::algorithms::vertex_connectivity;
use oneplane::constructions::{quad_diag_instance, random_geometric_drawing, GeometricOptions};
use oneplane::{Edge, OnePlaneDrawing};
use proptest::prelude::*;

fn drawing_strategy() -> impl Strategy<Value = OnePlaneDrawing> {
    prop_oneof![
        (5usize..=14, any::<u64>(), 0.3f64..0.9, any::<bool>()).prop_map(|(n, seed, density, type_2a)| {
            random_geometric_drawing(n, seed, GeometricOptions { density, type_2a })
        }),
        (4usize..=12, any::<u64>(), any::<bool>()).prop_map(|(half, seed, sparse)| quad_diag_instance(
            2 * half,
            seed,
            sparse
        )
        .unwrap()),
    ]
}

fn check_structure(d: &OnePlaneDrawing) -> Result<(), TestCaseError> {
    let r = d.validate();
    prop_assert!(r.valid, "{:?}", r.violations);
    let mut used = BTreeSet::new();
    for p in d.crossings() {
        prop_assert!(p.edges().iter().all(|e| used.insert((*e).clone())));
        prop_assert!(!p.first().shares_endpoint(p.second()));
    }
    let g = d.graph();
    if g.n() >= 3 {
        prop_assert!(g.e() + 8 <= 4 * g.n());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_drawings_are_valid(d in drawing_strategy()) {
        check_structure(&d)?;
    }

    #[test]
    fn json_round_trip_is_byte_identical(d in drawing_strategy()) {
        let text = d.to_json();
        let back = OnePlaneDrawing::from_json(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn classification_invariants(d in drawing_strategy()) {
        let (classes, report) = d.classify().unwrap();
        let g = d.graph();
        let crossed = d.crossed_edges();
        for c in &classes {
            let [a, b, x, y] = c.pair.endpoints();
            for e in &c.associated_edges {
                prop_assert!(g.has_edge(e) && !c.pair.contains(e));
                prop_assert!(e.ends().iter().all(|v| [a, b, x, y].contains(v)));
            }
            prop_assert_eq!(c.type_level as usize, c.associated_edges.len().min(4));
            let share = c.associated_edges.len() == 2 && c.associated_edges[0].shares_endpoint(&c.associated_edges[1]);
            prop_assert_eq!(c.is_2a_ok, !share);
            prop_assert_eq!(c.all_associated_uncrossed, c.associated_edges.iter().all(|e| !crossed.contains(e)));
            if report.is_type_2a_drawing {
                prop_assert!(c.local_adjacency, "crossing {} lacks local adjacency", c.index);
            }
        }
        prop_assert_eq!(report.is_nice, classes.iter().all(|c| c.all_associated_uncrossed));
    }

    #[test]
    fn niceness_passes_to_subdrawings(d in drawing_strategy(), seed in any::<u64>()) {
        prop_assume!(d.validate().is_nice);
        let keep = common::random_subset(d.graph(), 0.7, seed);
        let drop = common::random_edge_subset(&d.graph().edges().collect(), 0.2, seed ^ 1);
        let sub = d.subdrawing(Some(&keep), Some(&drop)).unwrap();
        prop_assert!(sub.validate().is_nice);
    }

    #[test]
    fn type_2a_passes_to_induced_subdrawings(d in drawing_strategy(), seed in any::<u64>()) {
        prop_assume!(d.validate().is_type_2a_drawing);
        let keep = common::random_subset(d.graph(), 0.7, seed);
        prop_assert!(d.subdrawing(Some(&keep), None).unwrap().validate().is_type_2a_drawing);
    }

    #[test]
    fn deleting_crossed_edges_of_nice_type_2a(d in drawing_strategy(), seed in any::<u64>()) {
        let r = d.validate();
        prop_assume!(r.is_type_2a_drawing && r.is_nice);
        let drop = common::random_edge_subset(&d.crossed_edges(), 0.5, seed);
        prop_assert!(d.is_nice_crossed_deletion(&drop));
        prop_assert!(d.subdrawing(None, Some(&drop)).unwrap().validate().is_type_2a_drawing);
        if d.graph().is_connected() {
            let planar = d.delete_one_per_crossing();
            prop_assert!(planar.crossings().is_empty());
            prop_assert!(planar.graph().is_connected());
        }
    }

    #[test]
    fn contracting_uncrossed_edges_stays_valid(d in drawing_strategy(), pick in any::<prop::sample::Index>()) {
        let crossed = d.crossed_edges();
        let free: Vec<Edge> = d.graph().edges().filter(|e| !crossed.contains(e)).collect();
        prop_assume!(!free.is_empty());
        let e = pick.get(&free);
        let c = d.contract_uncrossed(e).unwrap();
        check_structure(&c)?;
        prop_assert_eq!(c.graph().n(), d.graph().n() - 1);
        prop_assert!(c.crossings().len() <= d.crossings().len());
    }

    #[test]
    fn four_connected_drawings_are_nice(d in drawing_strategy()) {
        prop_assume!(d.graph().n() >= 2);
        if vertex_connectivity(d.graph()).unwrap() >= 4 {
            prop_assert!(d.validate().is_nice);
        }
    }

    #[test]
    fn planarization_counts(d in drawing_strategy()) {
        let p = d.planarization().unwrap();
        let c = d.crossings().len();
        prop_assert_eq!(p.n(), d.graph().n() + c);
        prop_assert_eq!(p.e(), d.graph().e() + 2 * c);
    }

    #[test]
    fn dot_lists_every_vertex(d in drawing_strategy()) {
        let dot = d.to_dot();
        prop_assert!(dot.starts_with("graph drawing {"), "unexpected DOT header");
        for v in d.graph().vertices() {
            let quoted = format!("\"{v}\"");
            prop_assert!(dot.contains(&quoted));
        }
        prop_assert_eq!(dot.matches("shape=point").count(), d.crossings().len());
    }
}

#[test]
fn rotation_free_drawings_validate_without_faces() {
    let d = quad_diag_instance(12, 5, false).unwrap().without_rotation();
    let r = d.validate();
    assert!(r.valid && r.is_type_2a_drawing);
}

#[test]
fn corrupted_rotation_is_rejected() {
    let d = quad_diag_instance(10, 1, false).unwrap();
    let (g, crossings, rot) = d.into_parts();
    let mut rot = rot.unwrap();
    let first = rot.keys().next().unwrap().clone();
    rot.get_mut(&first).unwrap().swap(0, 1);
    let bad = OnePlaneDrawing::new(g, crossings, Some(rot));
    assert!(!bad.validate().valid);
}
