#![allow(dead_code)]

use std::collections::BTreeSet;

use oneplane::constructions::{
    build_cocktail8, build_figure1, build_g0, quad_diag_instance, random_geometric_drawing, GeometricOptions,
};
use oneplane::{Edge, Graph, OnePlaneDrawing, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdos-Renyi graph with ids `r00`, `r01`, ...
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ids: Vec<String> = (0..n).map(|i| format!("r{i:02}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push(Edge::of(&ids[i], &ids[j]));
            }
        }
    }
    Graph::from_parts(ids, edges).unwrap()
}

/// A labelled drawing of the test corpus.
pub struct Sample {
    pub name: String,
    pub drawing: OnePlaneDrawing,
}

/// Fixtures, random straight-line drawings and quadrangulation diagonals; at least 150 drawings.
pub fn corpus() -> Vec<Sample> {
    let mut out = vec![
        Sample { name: "figure1".into(), drawing: build_figure1() },
        Sample { name: "g0".into(), drawing: build_g0() },
        Sample { name: "cocktail8".into(), drawing: build_cocktail8() },
    ];
    for seed in 0..40u64 {
        let n = 6 + (seed as usize % 9);
        out.push(Sample {
            name: format!("geometric n={n} seed={seed}"),
            drawing: random_geometric_drawing(n, seed, GeometricOptions::default()),
        });
        let opts = GeometricOptions { density: 0.8, type_2a: true };
        out.push(Sample {
            name: format!("geometric-2A n={n} seed={seed}"),
            drawing: random_geometric_drawing(n, seed, opts),
        });
    }
    for n in (8..=24).step_by(2) {
        for seed in 0..4u64 {
            for sparsify in [false, true] {
                out.push(Sample {
                    name: format!("quad-diag n={n} seed={seed} sparsify={sparsify}"),
                    drawing: quad_diag_instance(n, seed, sparsify).unwrap(),
                });
            }
        }
    }
    out
}

/// Seeded subset of the vertices, each kept with probability `p`.
pub fn random_subset(g: &Graph, p: f64, seed: u64) -> VertexSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    g.vertices().filter(|_| rng.random_bool(p)).map(str::to_string).collect()
}

/// Seeded subset of `edges`, each kept with probability `p`.
pub fn random_edge_subset(edges: &BTreeSet<Edge>, p: f64, seed: u64) -> BTreeSet<Edge> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    edges.iter().filter(|_| rng.random_bool(p)).cloned().collect()
}
