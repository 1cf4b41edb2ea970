use serde::Serialize;

use super::deficiency::{for_each_subset, lex_less};
use crate::graph::{mask_component_stats, Graph, IndexedGraph, VertexSet};
use crate::{Error, Result};

/// Default size guard of the exhaustive search.
pub const DEFAULT_MAX_N: usize = 16;

/// A disconnecting set `S` with `c(G - S) - |S|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScatterWitness {
    pub s: VertexSet,
    pub comp_count: usize,
    pub value: i64,
}

impl ScatterWitness {
    /// Evaluates `c(G - S) - |S|`; `S` must disconnect `G`.
    pub fn for_set(g: &Graph, s: &VertexSet) -> Result<Self> {
        if let Some(v) = s.iter().find(|v| !g.has_vertex(v)) {
            return Err(crate::GraphError::UnknownVertex(v.clone()).into());
        }
        let comp_count = g.without_vertices(s).components().len();
        if comp_count < 2 {
            return Err(Error::Precondition(format!("S leaves {comp_count} component(s); it must disconnect G")));
        }
        Ok(ScatterWitness { s: s.clone(), comp_count, value: comp_count as i64 - s.len() as i64 })
    }
}

/// `s(G)` by exhaustive search with the default guard `n <= 16`.
pub fn scattering_number(g: &Graph) -> Result<ScatterWitness> {
    scattering_number_with_limit(g, DEFAULT_MAX_N)
}

/// `s(G)` by exhaustive search over all `2^n` subsets; refuses `n > max_n` and `n > 64`.
pub fn scattering_number_with_limit(g: &Graph, max_n: usize) -> Result<ScatterWitness> {
    let n = g.n();
    if n > max_n.min(64) {
        return Err(Error::guard("scattering-size", format!("n = {n} exceeds the limit {}", max_n.min(64))));
    }
    if g.is_complete() {
        return Err(Error::Undefined("complete graph: no set S disconnects it".into()));
    }
    let ig = IndexedGraph::new(g);
    let adj = ig.masks();
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best: Option<(i64, u64)> = None;
    for k in 0..=n {
        // c(G - S) <= n - |S| bounds the value by n - 2|S|.
        if best.is_some_and(|(b, _)| (n as i64 - 2 * k as i64) < b) {
            break;
        }
        for_each_subset(n, k, |mask| {
            let (comps, _) = mask_component_stats(&adj, all & !mask);
            if comps < 2 {
                return;
            }
            let value = comps as i64 - k as i64;
            match best {
                Some((b, m)) if value < b || (value == b && !lex_less(mask, m)) => {}
                _ => best = Some((value, mask)),
            }
        });
    }
    let (_, mask) = best.ok_or_else(|| Error::Invariant("non-complete graph without a separating set".into()))?;
    ScatterWitness::for_set(g, &ig.set_of((0..n).filter(|&i| mask >> i & 1 == 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_parts(
            (0..n).map(|i| format!("{i:02}")),
            edges.iter().map(|&(u, v)| Edge::of(&format!("{u:02}"), &format!("{v:02}"))),
        )
        .unwrap()
    }

    #[test]
    fn p3_middle_vertex() {
        let w = scattering_number(&graph(3, &[(0, 1), (1, 2)])).unwrap();
        assert_eq!(w.s, VertexSet::from(["01".to_string()]));
        assert_eq!((w.comp_count, w.value), (2, 1));
    }

    #[test]
    fn complete_graph_is_undefined() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(scattering_number(&g), Err(Error::Undefined(_))));
    }

    #[test]
    fn disconnected_graph_counts_components() {
        let w = scattering_number(&graph(4, &[(0, 1)])).unwrap();
        assert_eq!(w.value, 3);
        assert!(w.s.is_empty());
    }

    #[test]
    fn c6_scatters_to_zero() {
        let w = scattering_number(&graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])).unwrap();
        assert_eq!(w.value, 0);
    }

    #[test]
    fn guard_is_enforced() {
        assert!(matches!(scattering_number(&graph(17, &[])), Err(Error::Guard { .. })));
        assert!(scattering_number_with_limit(&graph(17, &[]), 20).is_ok());
    }
}
