//! Fixtures and seeded instance generators.

mod geometry;
mod quad;

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use geometry::{segments_cross, straight_line_drawing, Point};
pub use quad::{build_quad_diag, cube, random_quadrangulation, QuadFace, QuadFaceSpec, Quadrangulation};

use crate::drawing::{CrossingPair, OnePlaneDrawing};
use crate::graph::{Edge, VertexSet};

const G0_JSON: &str = include_str!("../../fixtures/g0.json");

/// The crossing-type example: twelve vertices, six crossings of types 0 to 4.
pub fn build_figure1() -> OnePlaneDrawing {
    let points: BTreeMap<String, Point> = [
        ("0", (-7, 2)),
        ("1", (-3, 2)),
        ("2", (-7, -2)),
        ("8", (-3, -2)),
        ("9", (1, 2)),
        ("11", (1, -2)),
        ("12", (-7, -6)),
        ("13", (-3, -6)),
        ("14", (1, -6)),
        ("20", (5, 2)),
        ("23", (5, -2)),
        ("24", (5, -6)),
    ]
    .into_iter()
    .map(|(k, p)| (k.to_string(), p))
    .collect();
    let edges = [
        ("1", "2"),
        ("0", "8"),
        ("1", "11"),
        ("9", "8"),
        ("1", "9"),
        ("8", "12"),
        ("2", "13"),
        ("12", "13"),
        ("8", "14"),
        ("11", "13"),
        ("11", "14"),
        ("14", "13"),
        ("20", "11"),
        ("9", "23"),
        ("8", "11"),
        ("9", "20"),
        ("20", "23"),
        ("8", "13"),
        ("2", "12"),
        ("23", "14"),
        ("11", "24"),
    ]
    .map(|(u, v)| Edge::of(u, v));
    straight_line_drawing(&points, &edges).expect("figure coordinates are in general position")
}

/// The labelled crossings `alpha_1..alpha_6` of [`build_figure1`], in label order.
pub fn figure1_labels() -> [(&'static str, CrossingPair); 6] {
    let p = |a: &str, b: &str, c: &str, d: &str| CrossingPair::new(Edge::of(a, b), Edge::of(c, d));
    [
        ("alpha1", p("1", "2", "0", "8")),
        ("alpha2", p("1", "11", "8", "9")),
        ("alpha3", p("11", "20", "9", "23")),
        ("alpha4", p("8", "12", "2", "13")),
        ("alpha5", p("8", "14", "11", "13")),
        ("alpha6", p("11", "24", "14", "23")),
    ]
}

/// The 5-connected type-3 drawing on 20 black and 22 white vertices.
///
/// Loaded from the bundled fixture; the colour counts, the independence of the
/// white set and the validity of the drawing are checked on every load.
pub fn build_g0() -> OnePlaneDrawing {
    let d = OnePlaneDrawing::from_json(G0_JSON).expect("bundled fixture parses");
    let black = g0_black_set();
    let white: VertexSet = d.graph().vertices().filter(|v| !black.contains(*v)).map(str::to_string).collect();
    assert_eq!((black.len(), white.len()), (20, 22), "fixture colour classes");
    assert!(black.iter().all(|v| d.graph().has_vertex(v)));
    assert!(d.graph().edges().all(|e| !e.within(&white)), "white vertices must be independent");
    assert!(d.validate().valid, "fixture drawing is valid");
    d
}

/// The black vertices of [`build_g0`]: the even labels `2..=40`.
pub fn g0_black_set() -> VertexSet {
    (1..=20).map(|i| (2 * i).to_string()).collect()
}

/// The cube quadrangulation with both diagonals in all six faces: `K_{2,2,2,2}`.
pub fn build_cocktail8() -> OnePlaneDrawing {
    build_quad_diag(&QuadFaceSpec::all_faces(cube(2))).expect("cube faces are 4-cycles")
}

/// Diagonals in the faces of a seeded random quadrangulation on `n` vertices.
///
/// With `sparsify`, only an edge-disjoint set of faces is used and each loses
/// its opposite pair of sides, giving a type-2A drawing.
pub fn quad_diag_instance(n: usize, seed: u64, sparsify: bool) -> crate::Result<OnePlaneDrawing> {
    let quad = random_quadrangulation(n, seed)?;
    let spec = if sparsify { QuadFaceSpec::sparse(quad, seed) } else { QuadFaceSpec::all_faces(quad) };
    build_quad_diag(&spec)
}

impl QuadFaceSpec {
    /// A seeded random face selection in which some faces lose their opposite pair.
    pub fn random(quad: Quadrangulation, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut faces: Vec<[String; 4]> = quad.faces().into_iter().filter(|_| rng.random_bool(0.7)).collect();
        faces.shuffle(&mut rng);
        let mut side_count: BTreeMap<Edge, usize> = BTreeMap::new();
        for c in &faces {
            for i in 0..4 {
                *side_count.entry(Edge::of(&c[i], &c[(i + 1) % 4])).or_default() += 1;
            }
        }
        let mut chosen: Vec<QuadFace> = faces
            .into_iter()
            .map(|cycle| {
                let pair = [Edge::of(&cycle[0], &cycle[1]), Edge::of(&cycle[2], &cycle[3])];
                let delete_pair = pair.iter().all(|e| side_count[e] == 1) && rng.random_bool(0.5);
                QuadFace { cycle, delete_pair }
            })
            .collect();
        chosen.sort_by(|a, b| a.cycle.cmp(&b.cycle));
        QuadFaceSpec { quad, faces: chosen }
    }
}

/// Options for [`random_geometric_drawing`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricOptions {
    /// Probability of trying each vertex pair.
    pub density: f64,
    /// Repair the drawing until every crossing is type-2A or better.
    pub type_2a: bool,
}

impl Default for GeometricOptions {
    fn default() -> Self {
        GeometricOptions { density: 0.6, type_2a: false }
    }
}

/// A seeded straight-line 1-plane drawing on `n` random grid points.
///
/// Vertex pairs are tried in random order and kept when the segment is
/// crossing-free or crosses exactly one uncrossed segment.
pub fn random_geometric_drawing(n: usize, seed: u64, opts: GeometricOptions) -> OnePlaneDrawing {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = n.saturating_sub(1).to_string().len().max(2);
    let mut pos: BTreeMap<String, Point> = BTreeMap::new();
    let mut taken = BTreeSet::new();
    while pos.len() < n {
        let p = (rng.random_range(0..1000i64), rng.random_range(0..1000i64));
        if taken.insert(p) {
            pos.insert(format!("g{:0width$}", pos.len()), p);
        }
    }
    let ids: Vec<String> = pos.keys().cloned().collect();
    let mut candidates: Vec<Edge> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| Edge::of(&ids[i], &ids[j])).collect();
    candidates.shuffle(&mut rng);
    let mut edges: Vec<Edge> = Vec::new();
    let mut crossed: BTreeSet<usize> = BTreeSet::new();
    for e in candidates {
        if !rng.random_bool(opts.density) {
            continue;
        }
        try_add(&pos, &mut edges, &mut crossed, e, true);
    }
    let mut d = straight_line_drawing(&pos, &edges).expect("greedy insertion keeps the drawing 1-plane");
    if opts.type_2a {
        d = repair_type_2a(&pos, d);
    }
    d
}

/// Adds `e` when it is legal; `allow_cross` permits one crossing with an uncrossed edge.
fn try_add(
    pos: &BTreeMap<String, Point>,
    edges: &mut Vec<Edge>,
    crossed: &mut BTreeSet<usize>,
    e: Edge,
    allow_cross: bool,
) -> bool {
    let (a, b) = (pos[e.u()], pos[e.v()]);
    if edges.contains(&e) || pos.iter().any(|(v, &p)| !e.has(v) && on_line(a, b, p)) {
        return false;
    }
    let mut hits = Vec::new();
    for (i, f) in edges.iter().enumerate() {
        let (c, d) = (pos[f.u()], pos[f.v()]);
        if geometry::segments_touch(a, b, c, d) {
            return false;
        }
        if segments_cross(a, b, c, d) {
            hits.push(i);
        }
    }
    match hits[..] {
        [] => {
            edges.push(e);
            true
        }
        [i] if allow_cross && !crossed.contains(&i) => {
            crossed.insert(i);
            crossed.insert(edges.len());
            edges.push(e);
            true
        }
        _ => false,
    }
}

fn on_line(a: Point, b: Point, p: Point) -> bool {
    let cross = (b.0 - a.0) as i128 * (p.1 - a.1) as i128 - (b.1 - a.1) as i128 * (p.0 - a.0) as i128;
    cross == 0 && p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Adds missing associated edges where they fit uncrossed, then deletes the
/// larger edge of any crossing that is still below type-2A.
fn repair_type_2a(pos: &BTreeMap<String, Point>, mut d: OnePlaneDrawing) -> OnePlaneDrawing {
    loop {
        let classes = d.classify().expect("generated drawings are valid").0;
        let Some(bad) = classes.into_iter().find(|c| !(c.type_level >= 2 && c.is_2a_ok)) else {
            return d;
        };
        let mut edges: Vec<Edge> = d.graph().edges().collect();
        let mut crossed: BTreeSet<usize> =
            edges.iter().enumerate().filter(|(_, e)| d.is_crossed(e)).map(|(i, _)| i).collect();
        let [a, b, c, dd] = bad.pair.endpoints().map(str::to_string);
        let mut added = false;
        for (x, y) in [(&a, &c), (&a, &dd), (&b, &c), (&b, &dd)] {
            added |= try_add(pos, &mut edges, &mut crossed, Edge::of(x, y), false);
        }
        let rebuilt = straight_line_drawing(pos, &edges).expect("uncrossed additions keep the drawing 1-plane");
        let still_bad = rebuilt
            .classify()
            .expect("rebuilt drawing is valid")
            .0
            .iter()
            .any(|cl| cl.pair == bad.pair && !(cl.type_level >= 2 && cl.is_2a_ok));
        d = if still_bad || !added {
            let drop = BTreeSet::from([bad.pair.larger().clone()]);
            rebuilt.subdrawing(None, Some(&drop)).expect("dropped edge exists")
        } else {
            rebuilt
        };
    }
}
