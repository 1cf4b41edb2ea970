use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::embed::{trace_faces, Embedded};
use super::{CrossingPair, OnePlaneDrawing};
use crate::graph::Edge;

/// A broken drawing rule, naming the offending object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    UnknownCrossingEdge { crossing: usize, edge: Edge },
    SelfCrossing { crossing: usize, edge: Edge },
    EdgeCrossedTwice { edge: Edge, crossings: Vec<usize> },
    AdjacentEdgesCross { crossing: usize, pair: CrossingPair, shared: String },
    DensityExceeded { vertices: usize, edges: usize, bound: usize },
    RotationMismatch { detail: String },
    EulerRelation { vertices: usize, edges: usize, faces: usize, components: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownCrossingEdge { crossing, edge } => {
                write!(f, "crossing {crossing} uses edge {edge}, which is not in the graph")
            }
            Violation::SelfCrossing { crossing, edge } => write!(f, "crossing {crossing}: edge {edge} crosses itself"),
            Violation::EdgeCrossedTwice { edge, crossings } => {
                write!(f, "edge crossed twice: {edge} appears in crossings {crossings:?}")
            }
            Violation::AdjacentEdgesCross { crossing, shared, .. } => {
                write!(f, "crossing {crossing}: adjacent edges cross (shared vertex '{shared}')")
            }
            Violation::DensityExceeded { vertices, edges, bound } => {
                write!(f, "{edges} edges on {vertices} vertices exceeds the 1-planar bound {bound}")
            }
            Violation::RotationMismatch { detail } => write!(f, "{detail}"),
            Violation::EulerRelation { vertices, edges, faces, components } => write!(
                f,
                "planarization is not plane: V - E + F = {vertices} - {edges} + {faces}, expected 1 + {components}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum EulerCheck {
    Skipped { reason: String },
    Satisfied { vertices: usize, edges: usize, faces: usize, components: usize },
    Violated { vertices: usize, edges: usize, faces: usize, components: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DrawingReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub vertices: usize,
    pub edges: usize,
    pub crossing_count: usize,
    pub euler: EulerCheck,
    /// Largest `k` such that every crossing is type-k (4 when there are none).
    pub overall_type: u8,
    #[serde(rename = "is_type_2A_drawing")]
    pub is_type_2a_drawing: bool,
    pub is_nice: bool,
}

impl OnePlaneDrawing {
    /// Checks every drawing rule; never fails, violations are reported.
    pub fn validate(&self) -> DrawingReport {
        let mut violations = self.crossing_violations();
        let g = self.graph();
        let structural_ok = violations.is_empty();
        let (n, e) = (g.n(), g.e());
        if n >= 3 && e > 4 * n - 8 {
            violations.push(Violation::DensityExceeded { vertices: n, edges: e, bound: 4 * n - 8 });
        }

        let euler = match (self.rotation(), structural_ok) {
            (None, _) => EulerCheck::Skipped { reason: "no rotation".into() },
            (Some(_), false) => EulerCheck::Skipped { reason: "crossing pairs invalid".into() },
            (Some(rot), true) => match Embedded::from_drawing(self) {
                Err(err) => {
                    violations.push(Violation::RotationMismatch { detail: err.to_string() });
                    EulerCheck::Skipped { reason: "rotation does not match the planarization".into() }
                }
                Ok(_) => {
                    let faces = trace_faces(rot).expect("matching rotation is symmetric");
                    let plan = self.planarization_unchecked();
                    let comps = plan.components();
                    let isolated = comps.iter().filter(|c| c.len() == 1).count();
                    let (pv, pe) = (plan.n(), plan.e());
                    // Tracing sees each component's outer face separately.
                    let traced = faces.len() + isolated;
                    let global = (traced + 1).saturating_sub(comps.len());
                    if pv + global == pe + 1 + comps.len() {
                        EulerCheck::Satisfied { vertices: pv, edges: pe, faces: global, components: comps.len() }
                    } else {
                        violations.push(Violation::EulerRelation {
                            vertices: pv,
                            edges: pe,
                            faces: global,
                            components: comps.len(),
                        });
                        EulerCheck::Violated { vertices: pv, edges: pe, faces: global, components: comps.len() }
                    }
                }
            },
        };

        let classes = self.classes_lenient();
        DrawingReport {
            valid: violations.is_empty(),
            violations,
            vertices: n,
            edges: e,
            crossing_count: self.crossings().len(),
            euler,
            overall_type: classes.iter().map(|c| c.type_level).min().unwrap_or(4),
            is_type_2a_drawing: classes.iter().all(|c| c.type_level >= 2 && c.is_2a_ok),
            is_nice: classes.iter().all(|c| c.all_associated_uncrossed),
        }
    }

    /// 1-planarity and goodness violations of the crossing list alone.
    pub(crate) fn crossing_violations(&self) -> Vec<Violation> {
        let g = self.graph();
        let mut out = Vec::new();
        let mut uses: BTreeMap<&Edge, Vec<usize>> = BTreeMap::new();
        for (k, p) in self.crossings().iter().enumerate() {
            for e in p.edges() {
                if !g.has_edge(e) {
                    out.push(Violation::UnknownCrossingEdge { crossing: k, edge: e.clone() });
                }
            }
            if p.first() == p.second() {
                out.push(Violation::SelfCrossing { crossing: k, edge: p.first().clone() });
                uses.entry(p.first()).or_default().push(k);
                continue;
            }
            if let Some(shared) = p.first().ends().into_iter().find(|x| p.second().has(x)) {
                out.push(Violation::AdjacentEdgesCross { crossing: k, pair: p.clone(), shared: shared.to_string() });
            }
            for e in p.edges() {
                uses.entry(e).or_default().push(k);
            }
        }
        for (e, ks) in uses {
            if ks.len() > 1 {
                out.push(Violation::EdgeCrossedTwice { edge: e.clone(), crossings: ks });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::Rotation;
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn plane_c4_is_valid() {
        let r = c4_plane().validate();
        assert!(r.valid, "{:?}", r.violations);
        assert!(r.violations.is_empty());
        assert!(matches!(r.euler, EulerCheck::Satisfied { faces: 2, components: 1, .. }));
        assert_eq!(r.overall_type, 4);
    }

    #[test]
    fn k4_with_crossing_diagonals_is_valid() {
        let r = k4_crossed().validate();
        assert!(r.valid, "{:?}", r.violations);
        assert!(matches!(r.euler, EulerCheck::Satisfied { vertices: 5, edges: 8, faces: 5, components: 1 }));
    }

    #[test]
    fn edge_in_two_crossings_is_reported() {
        let mut g = Graph::new();
        for v in ["a", "b", "c", "d", "x", "y"] {
            g.add_vertex(v).unwrap();
        }
        for (u, v) in [("a", "b"), ("c", "d"), ("x", "y")] {
            g.add_edge(Edge::of(u, v)).unwrap();
        }
        let d = OnePlaneDrawing::new(
            g,
            vec![
                CrossingPair::new(Edge::of("a", "b"), Edge::of("c", "d")),
                CrossingPair::new(Edge::of("a", "b"), Edge::of("x", "y")),
            ],
            None,
        );
        let r = d.validate();
        assert!(!r.valid);
        assert!(r.violations.iter().any(|v| v.to_string().starts_with("edge crossed twice")));
        assert!(matches!(r.euler, EulerCheck::Skipped { .. }));
    }

    #[test]
    fn adjacent_and_self_crossings_are_reported() {
        let g = Graph::from_parts(["a", "b", "c"], [Edge::of("a", "b"), Edge::of("b", "c")]).unwrap();
        let d = OnePlaneDrawing::new(g.clone(), vec![CrossingPair::new(Edge::of("a", "b"), Edge::of("b", "c"))], None);
        assert!(matches!(d.validate().violations[..], [Violation::AdjacentEdgesCross { .. }]));
        let d = OnePlaneDrawing::new(g, vec![CrossingPair::new(Edge::of("a", "b"), Edge::of("a", "b"))], None);
        assert!(matches!(d.validate().violations[..], [Violation::SelfCrossing { .. }]));
    }

    #[test]
    fn density_bound_is_checked() {
        // K7: 21 edges against a bound of 20.
        let ids: Vec<String> = (0..7).map(|i| i.to_string()).collect();
        let edges: Vec<Edge> =
            (0..7).flat_map(|i| (i + 1..7).map(move |j| Edge::of(&i.to_string(), &j.to_string()))).collect();
        let d = OnePlaneDrawing::plane(Graph::from_parts(ids, edges).unwrap());
        assert!(d.validate().violations.iter().any(|v| matches!(v, Violation::DensityExceeded { bound: 20, .. })));
    }

    #[test]
    fn reflected_dummy_breaks_euler() {
        let d = k4_crossed();
        let (g, c, rot) = d.into_parts();
        let mut rot: Rotation = rot.unwrap();
        rot.insert("#0".into(), ["a", "d", "c", "b"].map(String::from).to_vec());
        let r = OnePlaneDrawing::new(g, c, Some(rot)).validate();
        assert!(!r.valid);
        assert!(matches!(r.euler, EulerCheck::Violated { .. }));
    }

    #[test]
    fn dummy_with_adjacent_halves_is_rejected() {
        let (g, c, rot) = k4_crossed().into_parts();
        let mut rot = rot.unwrap();
        rot.insert("#0".into(), ["a", "c", "b", "d"].map(String::from).to_vec());
        let r = OnePlaneDrawing::new(g, c, Some(rot)).validate();
        assert!(r.violations.iter().any(|v| matches!(v, Violation::RotationMismatch { .. })));
    }
}
