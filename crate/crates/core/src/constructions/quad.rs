//! Planar quadrangulations and their diagonal-crossing 1-plane drawings.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::geometry::straight_line_drawing;
use crate::algorithms::vertex_connectivity;
use crate::drawing::{dummy_id, trace_faces, CrossingPair, OnePlaneDrawing, Rotation};
use crate::graph::{Edge, Graph};
use crate::{Error, Result};

/// A plane quadrangulation: every face of the rotation system is a 4-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadrangulation {
    pub graph: Graph,
    pub rotation: Rotation,
}

impl Quadrangulation {
    /// Faces as traced from the rotation, each rotated to start at its smallest id.
    pub fn faces(&self) -> Vec<[String; 4]> {
        let mut out: Vec<[String; 4]> = trace_faces(&self.rotation)
            .expect("quadrangulation rotation is symmetric")
            .into_iter()
            .map(|mut f| {
                let i = (0..f.len()).min_by_key(|&i| &f[i]).unwrap_or(0);
                f.rotate_left(i);
                f.try_into().expect("every face is a 4-cycle")
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_quadrangulation(&self) -> bool {
        let Some(faces) = trace_faces(&self.rotation) else { return false };
        let (n, e) = (self.graph.n() as i64, self.graph.e() as i64);
        faces.iter().all(|f| f.len() == 4 && f.iter().collect::<BTreeSet<_>>().len() == 4)
            && n - e + faces.len() as i64 == 2
            && self.graph.is_connected()
    }

    fn as_drawing(&self) -> OnePlaneDrawing {
        OnePlaneDrawing::new(self.graph.clone(), Vec::new(), Some(self.rotation.clone()))
    }
}

fn vertex_id(i: usize, width: usize) -> String {
    format!("v{i:0width$}")
}

fn id_width(n: usize) -> usize {
    n.saturating_sub(1).to_string().len().max(2)
}

/// The cube as a plane quadrangulation on ids `v00..v07` (wider ids when `width > 2`).
pub fn cube(width: usize) -> Quadrangulation {
    // Outer square 0,1,3,2 and inner square 4,5,7,6; i ~ j when they differ in one bit.
    let coords = [(0, 0), (3, 0), (0, 3), (3, 3), (1, 1), (2, 1), (1, 2), (2, 2)];
    let points = coords.iter().enumerate().map(|(i, &p)| (vertex_id(i, width), p)).collect();
    let edges: Vec<Edge> = (0..8usize)
        .flat_map(|i| [1, 2, 4].into_iter().map(move |b| (i, i ^ b)))
        .filter(|(i, j)| i < j)
        .map(|(i, j)| Edge::of(&vertex_id(i, width), &vertex_id(j, width)))
        .collect();
    let d = straight_line_drawing(&points, &edges).expect("cube coordinates are plane");
    let (graph, _, rotation) = d.into_parts();
    Quadrangulation { graph, rotation: rotation.expect("straight-line drawings carry rotations") }
}

struct Builder {
    graph: Graph,
    rot: Rotation,
}

impl Builder {
    fn replace(&mut self, at: &str, old: &str, new: &[String]) {
        let list = self.rot.get_mut(at).expect("vertex has a rotation");
        let i = list.iter().position(|x| x == old).expect("neighbour listed");
        list.splice(i..=i, new.iter().cloned());
    }

    /// Splits `v` so that `v` keeps `u_i..u_{i+t}` and `fresh` takes `u_{i+t}..u_i`.
    fn split(&mut self, v: &str, i: usize, t: usize, fresh: &str) {
        let list = self.rot[v].clone();
        let k = list.len();
        let j = (i + t) % k;
        let keep: Vec<String> = (0..=t).map(|s| list[(i + s) % k].clone()).collect();
        let give: Vec<String> = (0..=k - t).map(|s| list[(j + s) % k].clone()).collect();
        let (ui, uj) = (list[i].clone(), list[j].clone());
        self.graph.insert_vertex_unchecked(fresh.to_string());
        for w in &give[1..give.len() - 1] {
            self.graph.remove_edge(&Edge::of(v, w));
            self.graph.insert_edge(&Edge::of(fresh, w));
            self.replace(w, v, &[fresh.to_string()]);
        }
        self.graph.insert_edge(&Edge::of(fresh, &ui));
        self.graph.insert_edge(&Edge::of(fresh, &uj));
        self.replace(&ui, v, &[v.to_string(), fresh.to_string()]);
        self.replace(&uj, v, &[fresh.to_string(), v.to_string()]);
        self.rot.insert(v.to_string(), keep);
        self.rot.insert(fresh.to_string(), give);
    }

    /// Adds `z` inside face `(a, b, c, d)` joined to `b` and `d`.
    fn insert_in_face(&mut self, face: &[String], z: &str) {
        let (a, b, c, d) = (&face[0], &face[1], &face[2], &face[3]);
        self.graph.insert_vertex_unchecked(z.to_string());
        self.graph.insert_edge(&Edge::of(z, b));
        self.graph.insert_edge(&Edge::of(z, d));
        // The corner at b lies just after c; the corner at d just after a.
        self.replace(b, c, &[c.clone(), z.to_string()]);
        self.replace(d, a, &[a.clone(), z.to_string()]);
        self.rot.insert(z.to_string(), vec![b.clone(), d.clone()]);
    }
}

/// A seeded random quadrangulation on `n` vertices, grown from the cube by
/// face-respecting vertex splits; every intermediate graph is 3-connected.
pub fn random_quadrangulation(n: usize, seed: u64) -> Result<Quadrangulation> {
    if n < 8 || n % 2 == 1 {
        return Err(Error::Precondition(format!("quadrangulations need even n >= 8, got {n}")));
    }
    let width = id_width(n);
    let base = cube(width);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Builder { graph: base.graph, rot: base.rotation };
    let mut next = 8;
    let mut stalled = 0;
    while next < n {
        let snapshot = (b.graph.clone(), b.rot.clone());
        let splittable: Vec<String> =
            b.graph.vertices().filter(|v| b.graph.degree(v) >= 4).map(str::to_string).collect();
        let use_split = !splittable.is_empty() && (n - next == 1 || rng.random_bool(0.5));
        if use_split {
            let v = splittable[rng.random_range(0..splittable.len())].clone();
            let k = b.rot[&v].len();
            let (i, t) = (rng.random_range(0..k), rng.random_range(2..=k - 2));
            b.split(&v, i, t, &vertex_id(next, width));
            next += 1;
        } else {
            let faces = Quadrangulation { graph: b.graph.clone(), rotation: b.rot.clone() }.faces();
            let mut face = faces[rng.random_range(0..faces.len())].to_vec();
            face.rotate_left(rng.random_range(0..4));
            let z = vertex_id(next, width);
            b.insert_in_face(&face, &z);
            let k = b.rot[&face[1]].len();
            let i = b.rot[&face[1]].iter().position(|x| *x == z).expect("z listed at b");
            b.split(&face[1], i, rng.random_range(2..=k - 2), &vertex_id(next + 1, width));
            next += 2;
        }
        if vertex_connectivity(&b.graph)? < 3 {
            (b.graph, b.rot) = snapshot;
            next = b.graph.n();
            stalled += 1;
            if stalled > 10_000 {
                return Err(Error::Invariant("quadrangulation growth stalled".into()));
            }
        }
    }
    let q = Quadrangulation { graph: b.graph, rotation: b.rot };
    if !q.is_quadrangulation() || !q.as_drawing().validate().valid {
        return Err(Error::Invariant("generated embedding is not a quadrangulation".into()));
    }
    Ok(q)
}

/// Diagonals to add in one face; `delete_pair` removes the opposite sides `x0x1`, `x2x3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadFace {
    pub cycle: [String; 4],
    pub delete_pair: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadFaceSpec {
    pub quad: Quadrangulation,
    pub faces: Vec<QuadFace>,
}

impl QuadFaceSpec {
    /// Every face, keeping all sides: an optimal type-4 drawing.
    pub fn all_faces(quad: Quadrangulation) -> Self {
        let faces = quad.faces().into_iter().map(|cycle| QuadFace { cycle, delete_pair: false }).collect();
        QuadFaceSpec { quad, faces }
    }

    /// A maximal edge-disjoint set of faces, chosen in seeded order, each with
    /// its opposite pair deleted: every crossing is then type-2A with exactly
    /// two associated edges.
    pub fn sparse(quad: Quadrangulation, seed: u64) -> Self {
        let mut faces = quad.faces();
        faces.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let mut used: BTreeSet<Edge> = BTreeSet::new();
        let mut chosen = Vec::new();
        for cycle in faces {
            let sides = face_sides(&cycle);
            if sides.iter().all(|e| !used.contains(e)) {
                used.extend(sides);
                chosen.push(QuadFace { cycle, delete_pair: true });
            }
        }
        chosen.sort_by(|a, b| a.cycle.cmp(&b.cycle));
        QuadFaceSpec { quad, faces: chosen }
    }
}

fn face_sides(c: &[String; 4]) -> [Edge; 4] {
    [0, 1, 2, 3].map(|i| Edge::of(&c[i], &c[(i + 1) % 4]))
}

/// Adds both diagonals of every selected face as a crossing pair.
pub fn build_quad_diag(spec: &QuadFaceSpec) -> Result<OnePlaneDrawing> {
    let q = &spec.quad;
    let traced: BTreeSet<[String; 4]> = q.faces().into_iter().collect();
    let mut selected: Vec<[String; 4]> = Vec::new();
    let mut deletions: BTreeMap<Edge, usize> = BTreeMap::new();
    for (idx, f) in spec.faces.iter().enumerate() {
        let mut c = f.cycle.to_vec();
        let i = (0..4).min_by_key(|&i| &c[i]).expect("four corners");
        c.rotate_left(i);
        let c: [String; 4] = c.try_into().expect("four corners");
        if !traced.contains(&c) {
            return Err(Error::Precondition(format!("{:?} is not a face 4-cycle of the quadrangulation", f.cycle)));
        }
        if f.delete_pair {
            for e in [Edge::of(&c[0], &c[1]), Edge::of(&c[2], &c[3])] {
                deletions.insert(e, idx);
            }
        }
        selected.push(c);
    }
    for (idx, c) in selected.iter().enumerate() {
        for side in face_sides(c) {
            if let Some(&owner) = deletions.get(&side) {
                if owner != idx {
                    return Err(Error::Precondition(format!(
                        "deleting {side} for face {owner} would remove a side of selected face {idx}"
                    )));
                }
            }
        }
    }

    let mut graph = q.graph.clone();
    let mut pairs: Vec<(CrossingPair, usize)> = Vec::new();
    for (idx, c) in selected.iter().enumerate() {
        for (x, y) in [(&c[0], &c[2]), (&c[1], &c[3])] {
            graph.add_edge(Edge::of(x, y)).map_err(|e| Error::Precondition(e.to_string()))?;
        }
        pairs.push((CrossingPair::new(Edge::of(&c[0], &c[2]), Edge::of(&c[1], &c[3])), idx));
    }
    pairs.sort();
    let mut rot = q.rotation.clone();
    for (k, (_, idx)) in pairs.iter().enumerate() {
        let c = &selected[*idx];
        let dummy = dummy_id(k);
        for i in 0..4 {
            // The corner of this face at c[i] follows c[i + 1] in the rotation.
            let list = rot.get_mut(&c[i]).expect("face vertex has a rotation");
            let at = list.iter().position(|x| *x == c[(i + 1) % 4]).expect("face side listed");
            list.insert(at + 1, dummy.clone());
        }
        rot.insert(dummy, c.to_vec());
    }
    for e in deletions.keys() {
        graph.remove_edge(e);
        for (x, y) in [(e.u(), e.v()), (e.v(), e.u())] {
            rot.get_mut(x).expect("endpoint has a rotation").retain(|w| w != y);
        }
    }
    let d = OnePlaneDrawing::new(graph, pairs.into_iter().map(|(p, _)| p).collect(), Some(rot));
    let report = d.validate();
    if !report.valid {
        return Err(Error::Invariant(format!("diagonal drawing failed validation: {:?}", report.violations)));
    }
    Ok(d)
}
