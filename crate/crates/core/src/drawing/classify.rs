use std::collections::BTreeSet;

use serde::Serialize;

use super::{CrossingPair, DrawingReport, OnePlaneDrawing};
use crate::graph::Edge;
use crate::{Error, Result};

/// Associated-edge data of one crossing `ab x cd`.
///
/// The associated edges are the edges of `G[{a, b, c, d}]` other than `ab`
/// and `cd`, so there are at most four of them: `ac`, `ad`, `bc`, `bd`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingClass {
    pub index: usize,
    pub pair: CrossingPair,
    pub endpoints: [String; 4],
    pub associated_edges: Vec<Edge>,
    /// Number of associated edges; the crossing is type-k for every `k <= type_level`.
    pub type_level: u8,
    /// False exactly when there are two associated edges and they share a vertex.
    #[serde(rename = "is_2A_ok")]
    pub is_2a_ok: bool,
    pub all_associated_uncrossed: bool,
    /// Every endpoint is adjacent to an endpoint of the other crossing edge.
    pub local_adjacency: bool,
}

impl CrossingClass {
    /// Type-2A in the strict sense: exactly two associated edges forming a matching.
    pub fn is_type_2a(&self) -> bool {
        self.type_level == 2 && self.is_2a_ok
    }

    pub fn label(&self) -> String {
        match (self.type_level, self.is_2a_ok) {
            (2, true) => "type-2A".into(),
            (2, false) => "type-2 (not 2A)".into(),
            (k, _) => format!("type-{k}"),
        }
    }
}

fn class_of(d: &OnePlaneDrawing, index: usize, pair: &CrossingPair, crossed: &BTreeSet<Edge>) -> CrossingClass {
    let g = d.graph();
    let [a, b, c, dd] = pair.endpoints();
    let associated: Vec<Edge> = [(a, c), (a, dd), (b, c), (b, dd)]
        .into_iter()
        .filter(|(x, y)| x != y && g.adjacent(x, y))
        .map(|(x, y)| Edge::of(x, y))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let is_2a_ok = !(associated.len() == 2 && associated[0].shares_endpoint(&associated[1]));
    let all_associated_uncrossed = associated.iter().all(|e| !crossed.contains(e));
    let local_adjacency = [a, b].iter().all(|x| g.adjacent(x, c) || g.adjacent(x, dd))
        && [c, dd].iter().all(|x| g.adjacent(x, a) || g.adjacent(x, b));
    CrossingClass {
        index,
        pair: pair.clone(),
        endpoints: [a, b, c, dd].map(str::to_string),
        type_level: associated.len().min(4) as u8,
        associated_edges: associated,
        is_2a_ok,
        all_associated_uncrossed,
        local_adjacency,
    }
}

impl OnePlaneDrawing {
    /// Classes of every crossing whose two edges exist and differ.
    pub(crate) fn classes_lenient(&self) -> Vec<CrossingClass> {
        let crossed = self.crossed_edges();
        self.crossings()
            .iter()
            .enumerate()
            .filter(|(_, p)| p.first() != p.second() && p.edges().iter().all(|e| self.graph().has_edge(e)))
            .map(|(k, p)| class_of(self, k, p, &crossed))
            .collect()
    }

    /// Classifies every crossing of a valid drawing.
    pub fn classify(&self) -> Result<(Vec<CrossingClass>, DrawingReport)> {
        let report = self.validate();
        if !report.valid {
            let msgs: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
            return Err(Error::InvalidDrawing(msgs.join("; ")));
        }
        Ok((self.classes_lenient(), report))
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;

    #[test]
    fn k4_crossing_is_type_4() {
        let (classes, report) = k4_crossed().classify().unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].type_level, 4);
        assert!(classes[0].local_adjacency);
        assert_eq!(report.overall_type, 4);
        assert!(report.is_type_2a_drawing);
        assert!(report.is_nice);
    }

    #[test]
    fn k4_minus_side_pair() {
        use crate::graph::Edge;
        let d = k4_crossed();
        let drop = [Edge::of("a", "b"), Edge::of("c", "d")].into_iter().collect();
        let sub = d.subdrawing(None, Some(&drop)).unwrap();
        let (classes, report) = sub.classify().unwrap();
        assert_eq!(classes[0].type_level, 2);
        assert!(classes[0].is_type_2a());
        assert!(report.is_type_2a_drawing);

        let drop = [Edge::of("a", "b"), Edge::of("b", "c")].into_iter().collect();
        let sub = d.subdrawing(None, Some(&drop)).unwrap();
        let (classes, report) = sub.classify().unwrap();
        assert_eq!(classes[0].label(), "type-2 (not 2A)");
        assert!(!report.is_type_2a_drawing);
        assert!(!classes[0].local_adjacency);
    }

    #[test]
    fn invalid_drawing_is_not_classified() {
        use super::super::{CrossingPair, OnePlaneDrawing};
        use crate::graph::{Edge, Graph};
        let g = Graph::from_parts(["a", "b", "c"], [Edge::of("a", "b"), Edge::of("b", "c")]).unwrap();
        let d = OnePlaneDrawing::new(g, vec![CrossingPair::new(Edge::of("a", "b"), Edge::of("b", "c"))], None);
        assert!(d.classify().is_err());
    }
}
