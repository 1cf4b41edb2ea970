//! The component-contraction argument, run on a concrete drawing and cut.
//!
//! Given a drawing `D` of `G` and a vertex set `S` whose removal leaves
//! components `F^1..F^l`, the pipeline deletes crossed edges so that every
//! component is drawn uncrossed (operations one and two), contracts each
//! component to a single vertex `f^i`, and checks that the resulting
//! bipartite drawing `B` has between `6l` and `3(l + |S|) - 8` edges.

mod certificate;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::drawing::OnePlaneDrawing;
use crate::graph::{Edge, Graph, VertexSet};
use crate::{Error, Result};

pub use certificate::{
    certify_all_cuts, certify_cut, AllCutsReport, BChecks, BoundChecks, Conclusion, CutCertificate, Verdict,
    CUT_ENUMERATION_LIMIT,
};

/// Components of `G - S`, ordered by smallest member; fails unless `S` disconnects `G`.
pub fn cut_components(g: &Graph, s: &VertexSet) -> Result<Vec<VertexSet>> {
    if let Some(v) = s.iter().find(|v| !g.has_vertex(v)) {
        return Err(crate::GraphError::UnknownVertex(v.clone()).into());
    }
    let comps = g.without_vertices(s).components();
    if comps.len() < 2 {
        return Err(Error::Precondition(format!("S leaves {} component(s); it is not a vertex cut", comps.len())));
    }
    Ok(comps)
}

fn component_index(comps: &[VertexSet]) -> BTreeMap<&str, usize> {
    comps.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |v| (v.as_str(), i))).collect()
}

/// Edges `xy` crossing an edge of some `F^i` with `x, y` in `S`, or one end in that `F^i` and the other in `S`.
pub fn operation_one(d: &OnePlaneDrawing, s: &VertexSet) -> Result<Vec<Edge>> {
    let comps = cut_components(d.graph(), s)?;
    let comp = component_index(&comps);
    let mut out = BTreeSet::new();
    for p in d.crossings() {
        for (inner, other) in [(p.first(), p.second()), (p.second(), p.first())] {
            let Some(i) = inner_component(&comp, inner) else { continue };
            let side = |x: &str| {
                if s.contains(x) {
                    Some(None)
                } else if comp.get(x) == Some(&i) {
                    Some(Some(i))
                } else {
                    None
                }
            };
            match (side(other.u()), side(other.v())) {
                (Some(None), Some(None)) | (Some(None), Some(Some(_))) | (Some(Some(_)), Some(None)) => {
                    out.insert(other.clone());
                }
                _ => {}
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// One edge (the larger) of every crossing pair with both edges inside the same `F^i`.
pub fn operation_two(d: &OnePlaneDrawing, s: &VertexSet) -> Result<Vec<Edge>> {
    let comps = cut_components(d.graph(), s)?;
    let comp = component_index(&comps);
    let out: BTreeSet<Edge> = d
        .crossings()
        .iter()
        .filter(|p| {
            let (a, b) = (inner_component(&comp, p.first()), inner_component(&comp, p.second()));
            a.is_some() && a == b
        })
        .map(|p| p.larger().clone())
        .collect();
    Ok(out.into_iter().collect())
}

fn inner_component(comp: &BTreeMap<&str, usize>, e: &Edge) -> Option<usize> {
    match (comp.get(e.u()), comp.get(e.v())) {
        (Some(a), Some(b)) if a == b => Some(*a),
        _ => None,
    }
}

/// Crossings of `D` in which an edge inside a component meets an edge that
/// is neither inside `S`, inside that component, nor between the two.
pub fn crossing_case_violations(d: &OnePlaneDrawing, s: &VertexSet, comps: &[VertexSet]) -> Vec<String> {
    let comp = component_index(comps);
    let mut out = Vec::new();
    for (k, p) in d.crossings().iter().enumerate() {
        for (inner, other) in [(p.first(), p.second()), (p.second(), p.first())] {
            let Some(i) = inner_component(&comp, inner) else { continue };
            let ok = other.ends().iter().all(|x| s.contains(*x) || comp.get(x) == Some(&i));
            if !ok {
                out.push(format!("crossing {k}: {inner} inside component {i} crosses {other}"));
            }
        }
    }
    out
}

/// Per-component checks on `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentClaims {
    pub representative: String,
    pub size: usize,
    /// `V(F^i)` is the vertex set of a component of `H - S`.
    pub induces_component: bool,
    /// No crossing of `H` uses an edge inside `F^i`.
    pub edges_uncrossed: bool,
    /// `N_H(V(F^i)) ⊆ S`.
    pub boundary_in_s: bool,
    pub neighbors_in_s: usize,
    /// `|N_H(V(F^i), S)| >= 6`.
    pub at_least_six_neighbors: bool,
    /// `N_H(V(F^i), S) = N_G(V(F^i), S)`.
    pub neighbors_preserved: bool,
}

impl ComponentClaims {
    pub fn all_hold(&self) -> bool {
        self.induces_component
            && self.edges_uncrossed
            && self.boundary_in_s
            && self.at_least_six_neighbors
            && self.neighbors_preserved
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub components: Vec<ComponentClaims>,
    pub crossing_case_violations: Vec<String>,
    pub h_valid: bool,
    #[serde(rename = "h_type_2A")]
    pub h_type_2a: bool,
    pub h_nice: bool,
}

impl ClaimReport {
    /// First failing check, in pipeline order.
    pub fn first_failure(&self) -> Option<String> {
        if let Some(v) = self.crossing_case_violations.first() {
            return Some(format!("crossing case analysis: {v}"));
        }
        if !self.h_valid {
            return Some("H is not a valid drawing".into());
        }
        if !self.h_type_2a {
            return Some("H is not type-2A".into());
        }
        if !self.h_nice {
            return Some("H is not nice".into());
        }
        for c in &self.components {
            let f = &c.representative;
            let msg = if !c.induces_component {
                "does not induce a component of H - S".to_string()
            } else if !c.edges_uncrossed {
                "has a crossed inner edge in H".to_string()
            } else if !c.boundary_in_s {
                "has H-neighbours outside S".to_string()
            } else if !c.at_least_six_neighbors {
                format!("has {} < 6 neighbours in S", c.neighbors_in_s)
            } else if !c.neighbors_preserved {
                "lost neighbours in S".to_string()
            } else {
                continue;
            };
            return Some(format!("component {f} {msg}"));
        }
        None
    }
}

/// The drawing after deletions, and its contraction to `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionState {
    pub drawing: OnePlaneDrawing,
    pub s: VertexSet,
    pub components: Vec<VertexSet>,
    pub deleted_op1: Vec<Edge>,
    pub deleted_op2: Vec<Edge>,
    pub h: OnePlaneDrawing,
    /// `f^i` (the smallest id of `F^i`) to `V(F^i)`.
    pub contraction_map: BTreeMap<String, VertexSet>,
}

impl ReductionState {
    /// Runs both deletion operations and builds `H`.
    pub fn new(d: &OnePlaneDrawing, s: &VertexSet) -> Result<Self> {
        let components = cut_components(d.graph(), s)?;
        let deleted_op1 = operation_one(d, s)?;
        let deleted_op2 = operation_two(d, s)?;
        let drop: BTreeSet<Edge> = deleted_op1.iter().chain(&deleted_op2).cloned().collect();
        let h = d.subdrawing(None, Some(&drop))?;
        let contraction_map = components
            .iter()
            .map(|c| (c.iter().next().expect("components are non-empty").clone(), c.clone()))
            .collect();
        Ok(ReductionState {
            drawing: d.clone(),
            s: s.clone(),
            components,
            deleted_op1,
            deleted_op2,
            h,
            contraction_map,
        })
    }

    pub fn operations_disjoint(&self) -> bool {
        let one: BTreeSet<&Edge> = self.deleted_op1.iter().collect();
        self.deleted_op2.iter().all(|e| !one.contains(e))
    }

    pub fn ell(&self) -> usize {
        self.components.len()
    }
}

pub fn verify_claims(state: &ReductionState) -> ClaimReport {
    let g = state.drawing.graph();
    let h = state.h.graph();
    let s = &state.s;
    let h_comps: BTreeSet<VertexSet> = h.without_vertices(s).components().into_iter().collect();
    let crossed = state.h.crossed_edges();
    let components = state
        .components
        .iter()
        .map(|f| {
            let (n_h, _) = h.boundary(f, s).expect("F and S are disjoint vertex sets of H");
            let (n_g, _) = g.boundary(f, s).expect("F and S are disjoint vertex sets of G");
            let outside = f.iter().flat_map(|v| h.neighbors(v)).any(|w| !f.contains(w) && !s.contains(w));
            ComponentClaims {
                representative: f.iter().next().expect("components are non-empty").clone(),
                size: f.len(),
                induces_component: h_comps.contains(f),
                edges_uncrossed: crossed.iter().all(|e| !e.within(f)),
                boundary_in_s: !outside,
                neighbors_in_s: n_h.len(),
                at_least_six_neighbors: n_h.len() >= 6,
                neighbors_preserved: n_h == n_g,
            }
        })
        .collect();
    let report = state.h.validate();
    ClaimReport {
        components,
        crossing_case_violations: crossing_case_violations(&state.drawing, s, &state.components),
        h_valid: report.valid,
        h_type_2a: report.is_type_2a_drawing,
        h_nice: report.is_nice,
    }
}

/// Deletes the edges of `H[S]` and contracts every `F^i` along a breadth-first
/// spanning tree rooted at its smallest id.
pub fn contract_to_bipartite(state: &ReductionState) -> Result<OnePlaneDrawing> {
    let h = &state.h;
    let inside_s: BTreeSet<Edge> = h.graph().edges().filter(|e| e.within(&state.s)).collect();
    let mut b = h.subdrawing(None, Some(&inside_s))?;
    for (root, f) in &state.contraction_map {
        let tree = bfs_tree(h.graph(), f, root)?;
        for child in tree {
            let e = Edge::of(root, &child);
            b = b.contract_uncrossed(&e).map_err(|err| match err {
                Error::Precondition(m) => Error::Invariant(format!("tree edge {e} of component {root}: {m}")),
                other => other,
            })?;
        }
    }
    Ok(b)
}

/// Vertices of `f` other than `root` in breadth-first discovery order within `H[f]`.
fn bfs_tree(h: &Graph, f: &VertexSet, root: &str) -> Result<Vec<String>> {
    let mut seen: BTreeSet<&str> = BTreeSet::from([root]);
    let mut queue = VecDeque::from([root]);
    let mut order = Vec::new();
    while let Some(u) = queue.pop_front() {
        for w in h.neighbors(u) {
            if f.contains(w) && seen.insert(w) {
                order.push(w.to_string());
                queue.push_back(w);
            }
        }
    }
    if seen.len() != f.len() {
        return Err(Error::Invariant(format!("component {root} is disconnected in H")));
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_cocktail8, build_figure1};

    fn set(xs: &[&str]) -> VertexSet {
        xs.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn non_cut_is_rejected() {
        let d = build_cocktail8();
        assert!(matches!(operation_one(&d, &set(&["v00"])), Err(Error::Precondition(_))));
    }

    #[test]
    fn plane_drawing_needs_no_deletions() {
        let d = crate::constructions::cube(2);
        let d = OnePlaneDrawing::new(d.graph, vec![], Some(d.rotation));
        let s = set(&["v01", "v02", "v04"]);
        assert!(operation_one(&d, &s).unwrap().is_empty());
        assert!(operation_two(&d, &s).unwrap().is_empty());
    }

    #[test]
    fn cocktail_antipodal_cut() {
        let d = build_cocktail8();
        let s = set(&["v01", "v02", "v03", "v04", "v05", "v06"]);
        let state = ReductionState::new(&d, &s).unwrap();
        assert_eq!(state.ell(), 2);
        assert!(state.deleted_op1.is_empty() && state.deleted_op2.is_empty());
        let claims = verify_claims(&state);
        assert!(claims.components.iter().all(ComponentClaims::all_hold), "{claims:?}");
        let b = contract_to_bipartite(&state).unwrap();
        assert_eq!(b.graph().e(), 12);
        assert!(b.crossings().is_empty());
        assert!(b.validate().valid);
    }

    #[test]
    fn figure1_operations() {
        let d = build_figure1();
        // Removing 8 and 11 splits off {12, 13, 14, 2, ...}; exercise both operations.
        let s = set(&["1", "8", "9", "11"]);
        let state = ReductionState::new(&d, &s).unwrap();
        assert!(state.operations_disjoint());
        let b = contract_to_bipartite(&state);
        assert!(b.is_ok() || matches!(b, Err(Error::Invariant(_))));
    }

    #[test]
    fn bfs_tree_orders_by_discovery() {
        let g = Graph::from_parts(["a", "b", "c", "d"], [Edge::of("a", "b"), Edge::of("b", "c"), Edge::of("a", "d")])
            .unwrap();
        assert_eq!(bfs_tree(&g, &set(&["a", "b", "c", "d"]), "a").unwrap(), vec!["b", "d", "c"]);
        assert!(bfs_tree(&g, &set(&["a", "c"]), "a").is_err());
    }
}
