//! Combinatorial 1-plane drawings.
//!
//! A drawing is a graph together with the list of crossing edge pairs and,
//! optionally, a rotation system of its planarization. No coordinates are
//! stored: every property checked here depends only on which edges cross
//! and on the cyclic order of edges around each vertex.
//!
//! The planarization replaces crossing `k` (in sorted crossing order) with a
//! dummy vertex named `#k` of degree four. A rotation maps every real and
//! dummy vertex of the planarization to the cyclic list of its neighbours.

mod classify;
pub mod dot;
pub(crate) mod embed;
mod ops;
mod validate;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::{Edge, Graph, GraphJson};
use crate::{Error, Result};

pub use classify::CrossingClass;
pub use embed::trace_faces;
pub use validate::{DrawingReport, EulerCheck, Violation};

/// Cyclic neighbour order for every planarization vertex.
pub type Rotation = BTreeMap<String, Vec<String>>;

/// Two edges that cross each other once. Stored with the smaller edge first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossingPair {
    first: Edge,
    second: Edge,
}

impl CrossingPair {
    pub fn new(e: Edge, f: Edge) -> Self {
        if e <= f {
            CrossingPair { first: e, second: f }
        } else {
            CrossingPair { first: f, second: e }
        }
    }

    pub fn first(&self) -> &Edge {
        &self.first
    }

    pub fn second(&self) -> &Edge {
        &self.second
    }

    pub fn edges(&self) -> [&Edge; 2] {
        [&self.first, &self.second]
    }

    pub fn contains(&self, e: &Edge) -> bool {
        &self.first == e || &self.second == e
    }

    /// The edge crossing `e` in this pair.
    pub fn partner(&self, e: &Edge) -> Option<&Edge> {
        if &self.first == e {
            Some(&self.second)
        } else if &self.second == e {
            Some(&self.first)
        } else {
            None
        }
    }

    /// The four endpoints `(a, b, c, d)` where the pair is `ab x cd`.
    pub fn endpoints(&self) -> [&str; 4] {
        [self.first.u(), self.first.v(), self.second.u(), self.second.v()]
    }

    /// The larger of the two edges; the default deletion choice.
    pub fn larger(&self) -> &Edge {
        &self.second
    }
}

impl Serialize for CrossingPair {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [&self.first, &self.second].serialize(s)
    }
}

impl<'de> Deserialize<'de> for CrossingPair {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [e, f] = <[Edge; 2]>::deserialize(d)?;
        Ok(CrossingPair::new(e, f))
    }
}

pub fn dummy_id(k: usize) -> String {
    format!("#{k}")
}

pub(crate) fn parse_dummy(id: &str) -> Option<usize> {
    id.strip_prefix('#')?.parse().ok()
}

/// A graph with a fixed (claimed) 1-plane drawing.
///
/// Construction does not enforce 1-planarity; [`OnePlaneDrawing::validate`]
/// reports every violated drawing rule instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePlaneDrawing {
    graph: Graph,
    crossings: Vec<CrossingPair>,
    rotation: Option<Rotation>,
}

impl OnePlaneDrawing {
    pub fn new(graph: Graph, mut crossings: Vec<CrossingPair>, rotation: Option<Rotation>) -> Self {
        crossings.sort();
        OnePlaneDrawing { graph, crossings, rotation }
    }

    /// A crossing-free drawing without a rotation.
    pub fn plane(graph: Graph) -> Self {
        Self::new(graph, Vec::new(), None)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn crossings(&self) -> &[CrossingPair] {
        &self.crossings
    }

    pub fn rotation(&self) -> Option<&Rotation> {
        self.rotation.as_ref()
    }

    pub fn without_rotation(mut self) -> Self {
        self.rotation = None;
        self
    }

    pub fn into_parts(self) -> (Graph, Vec<CrossingPair>, Option<Rotation>) {
        (self.graph, self.crossings, self.rotation)
    }

    /// Index of the crossing containing `e`, if any.
    pub fn crossing_of(&self, e: &Edge) -> Option<usize> {
        self.crossings.iter().position(|p| p.contains(e))
    }

    pub fn is_crossed(&self, e: &Edge) -> bool {
        self.crossing_of(e).is_some()
    }

    pub fn crossed_edges(&self) -> BTreeSet<Edge> {
        self.crossings.iter().flat_map(|p| p.edges()).cloned().collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("drawing serialization cannot fail")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("drawing serialization cannot fail")
    }

    /// Parses the drawing schema. A document without a `crossings` key is a
    /// plain graph and is rejected here.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: DrawingJson = serde_json::from_str(text)?;
        raw.into_drawing()
    }

    /// Parses either a drawing or a plain graph document.
    pub fn from_graph_or_drawing_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.get("crossings").is_some() {
            let raw: DrawingJson = serde_json::from_value(value)?;
            raw.into_drawing()
        } else {
            let raw: GraphJson = serde_json::from_value(value)?;
            Ok(Self::plane(raw.into_graph()?))
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DrawingJson {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
    crossings: Option<Vec<[[String; 2]; 2]>>,
    #[serde(default)]
    rotation: Option<Rotation>,
}

impl DrawingJson {
    fn into_drawing(self) -> Result<OnePlaneDrawing> {
        let crossings = self
            .crossings
            .ok_or_else(|| Error::schema("crossings", "missing field (plain graphs are not drawings)"))?;
        let graph = GraphJson { vertices: self.vertices, edges: self.edges }.into_graph()?;
        let mut pairs = Vec::with_capacity(crossings.len());
        for (i, [[a, b], [c, d]]) in crossings.into_iter().enumerate() {
            let e = Edge::new(a, b).map_err(|e| Error::schema(format!("crossings[{i}][0]"), e))?;
            let f = Edge::new(c, d).map_err(|e| Error::schema(format!("crossings[{i}][1]"), e))?;
            pairs.push(CrossingPair::new(e, f));
        }
        Ok(OnePlaneDrawing::new(graph, pairs, self.rotation))
    }
}

impl Serialize for OnePlaneDrawing {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let fields = if self.rotation.is_some() { 4 } else { 3 };
        let mut st = s.serialize_struct("OnePlaneDrawing", fields)?;
        st.serialize_field("vertices", &self.graph.vertices().collect::<Vec<_>>())?;
        st.serialize_field("edges", &self.graph.edges().collect::<Vec<_>>())?;
        st.serialize_field("crossings", &self.crossings)?;
        if let Some(rot) = &self.rotation {
            st.serialize_field("rotation", rot)?;
        }
        st.end()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// K4 on a,b,c,d drawn as the square a-b-c-d with crossing diagonals.
    pub fn k4_crossed() -> OnePlaneDrawing {
        let g = Graph::from_parts(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d"), ("a", "c"), ("b", "d")].map(|(u, v)| Edge::of(u, v)),
        )
        .unwrap();
        // square a(0,0) b(1,0) c(1,1) d(0,1), counterclockwise angle order
        let rot: Rotation = [
            ("#0", vec!["a", "b", "c", "d"]),
            ("a", vec!["b", "#0", "d"]),
            ("b", vec!["c", "#0", "a"]),
            ("c", vec!["d", "#0", "b"]),
            ("d", vec!["a", "#0", "c"]),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.into_iter().map(str::to_string).collect()))
        .collect();
        OnePlaneDrawing::new(g, vec![CrossingPair::new(Edge::of("a", "c"), Edge::of("b", "d"))], Some(rot))
    }

    pub fn c4_plane() -> OnePlaneDrawing {
        let g = Graph::from_parts(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")].map(|(u, v)| Edge::of(u, v)),
        )
        .unwrap();
        let rot: Rotation = [("a", ["b", "d"]), ("b", ["c", "a"]), ("c", ["d", "b"]), ("d", ["a", "c"])]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.into_iter().map(str::to_string).collect()))
            .collect();
        OnePlaneDrawing::new(g, vec![], Some(rot))
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let d = k4_crossed();
        let text = d.to_json();
        let back = OnePlaneDrawing::from_json(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_json(), text);
        assert!(text.starts_with(r#"{"vertices":["a","b","c","d"],"edges":[["a","b"],"#));
        assert!(text.contains(r#""crossings":[[["a","c"],["b","d"]]]"#));
    }

    #[test]
    fn graph_documents_are_not_drawings() {
        let text = r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#;
        assert!(matches!(OnePlaneDrawing::from_json(text), Err(Error::Schema { .. })));
        let d = OnePlaneDrawing::from_graph_or_drawing_json(text).unwrap();
        assert_eq!(d.graph().e(), 1);
        assert!(d.crossings().is_empty());
    }

    #[test]
    fn crossing_pairs_are_normalized() {
        let p = CrossingPair::new(Edge::of("d", "b"), Edge::of("c", "a"));
        assert_eq!(p.first(), &Edge::of("a", "c"));
        assert_eq!(p.endpoints(), ["a", "c", "b", "d"]);
        assert_eq!(p.partner(&Edge::of("a", "c")), Some(&Edge::of("b", "d")));
    }
}
