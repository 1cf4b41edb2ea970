use std::collections::BTreeSet;

use super::embed::Embedded;
use super::{dummy_id, CrossingPair, OnePlaneDrawing};
use crate::graph::{Edge, Graph, GraphError, VertexSet};
use crate::{Error, Result};

impl OnePlaneDrawing {
    /// The plane graph with crossing `k` replaced by the degree-4 vertex `#k`.
    pub fn planarization(&self) -> Result<Graph> {
        let violations = self.crossing_violations();
        if !violations.is_empty() {
            let msgs: Vec<String> = violations.iter().map(ToString::to_string).collect();
            return Err(Error::InvalidDrawing(msgs.join("; ")));
        }
        Ok(self.planarization_unchecked())
    }

    /// Planarization of a drawing whose crossing list is structurally valid.
    pub(crate) fn planarization_unchecked(&self) -> Graph {
        let mut p = self.graph().clone();
        for (k, pair) in self.crossings().iter().enumerate() {
            let id = dummy_id(k);
            p.insert_vertex_unchecked(id.clone());
            for e in pair.edges() {
                p.remove_edge(e);
                for x in e.ends() {
                    p.insert_edge(&Edge::of(x, &id));
                }
            }
        }
        p
    }

    /// The restricted drawing on `keep` (default: all vertices) minus `drop`.
    ///
    /// A crossing survives when both of its edges survive. A rotation is
    /// carried along when the input rotation matches the planarization and
    /// dropped otherwise.
    pub fn subdrawing(&self, keep: Option<&VertexSet>, drop: Option<&BTreeSet<Edge>>) -> Result<OnePlaneDrawing> {
        let graph = self.graph().subgraph(keep, drop)?;
        if self.rotation().is_some() {
            if let Ok(mut emb) = Embedded::from_drawing(self) {
                if let Some(keep) = keep {
                    for v in self.graph().vertices().filter(|v| !keep.contains(*v)) {
                        emb.remove_vertex(v);
                    }
                }
                for e in drop.into_iter().flatten() {
                    emb.remove_edge(e);
                }
                let out = emb.to_drawing();
                debug_assert_eq!(out.graph(), &graph);
                return Ok(out);
            }
        }
        let crossings =
            self.crossings().iter().filter(|p| p.edges().iter().all(|e| graph.has_edge(e))).cloned().collect();
        Ok(OnePlaneDrawing::new(graph, crossings, None))
    }

    /// True when the drawing is nice and every edge in `drop` is crossed, the
    /// setting in which deleting `drop` keeps a type-2A drawing type-2A.
    pub fn is_nice_crossed_deletion(&self, drop: &BTreeSet<Edge>) -> bool {
        let crossed = self.crossed_edges();
        drop.iter().all(|e| crossed.contains(e)) && self.classes_lenient().iter().all(|c| c.all_associated_uncrossed)
    }

    /// Contracts the uncrossed edge `uv` into its smaller endpoint.
    pub fn contract_uncrossed(&self, uv: &Edge) -> Result<OnePlaneDrawing> {
        if !self.graph().has_edge(uv) {
            return Err(GraphError::UnknownEdge(uv.clone()).into());
        }
        if self.is_crossed(uv) {
            return Err(Error::Precondition(format!("edge {uv} is crossed; only uncrossed edges may be contracted")));
        }
        let mut emb = Embedded::from_drawing(self)?;
        emb.contract(uv)?;
        Ok(emb.to_drawing())
    }

    /// Deletes the larger edge of every crossing pair.
    pub fn delete_one_per_crossing(&self) -> OnePlaneDrawing {
        self.delete_one_per_crossing_with(|p| p.larger().clone())
    }

    /// Deletes `chooser(pair)` for every crossing pair; the chooser must return
    /// one of the pair's two edges.
    pub fn delete_one_per_crossing_with(&self, chooser: impl Fn(&CrossingPair) -> Edge) -> OnePlaneDrawing {
        let drop: BTreeSet<Edge> = self
            .crossings()
            .iter()
            .map(|p| {
                let e = chooser(p);
                assert!(p.contains(&e), "chooser returned an edge outside the pair");
                e
            })
            .collect();
        self.subdrawing(None, Some(&drop)).expect("dropped edges come from the crossing list")
    }
}
