use std::collections::VecDeque;

use super::deficiency::for_each_subset;
use crate::graph::{mask_component_stats, Graph, IndexedGraph, VertexSet};
use crate::{Error, Result};

/// Subset budget of [`vertex_connectivity_oracle`].
pub const ORACLE_SUBSET_LIMIT: u64 = 50_000_000;

/// Unit-capacity flow network with every vertex `v` split into `2v -> 2v + 1`.
struct SplitNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
}

impl SplitNetwork {
    fn new(adj: &[Vec<usize>], s: usize, t: usize) -> Self {
        let n = adj.len();
        let mut net = SplitNetwork { head: vec![Vec::new(); 2 * n], to: Vec::new(), cap: Vec::new() };
        let big = n as i32 + 1;
        for (v, nbrs) in adj.iter().enumerate() {
            let c = if v == s || v == t { big } else { 1 };
            net.arc(2 * v, 2 * v + 1, c);
            for &w in nbrs {
                net.arc(2 * v + 1, 2 * w, big);
            }
        }
        net
    }

    fn arc(&mut self, a: usize, b: usize, c: i32) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// BFS augmentation; stops once the flow reaches `bound`.
    fn max_flow(&mut self, src: usize, sink: usize, bound: usize) -> usize {
        let mut flow = 0;
        while flow < bound {
            let mut via = vec![usize::MAX; self.head.len()];
            via[src] = usize::MAX - 1;
            let mut queue = VecDeque::from([src]);
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for &a in &self.head[x] {
                    let y = self.to[a];
                    if self.cap[a] > 0 && via[y] == usize::MAX {
                        via[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if via[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != src {
                let a = via[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }

    fn reachable(&self, src: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.head[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

/// Minimum `s`-`t` vertex separator of non-adjacent `s`, `t`, capped at `bound`.
fn local_cut(adj: &[Vec<usize>], s: usize, t: usize, bound: usize) -> (usize, Option<Vec<usize>>) {
    let mut net = SplitNetwork::new(adj, s, t);
    let flow = net.max_flow(2 * s + 1, 2 * t, bound);
    if flow >= bound {
        return (flow, None);
    }
    let seen = net.reachable(2 * s + 1);
    let cut = (0..adj.len()).filter(|&v| seen[2 * v] && !seen[2 * v + 1]).collect();
    (flow, Some(cut))
}

/// `kappa(G)` with a minimum separator; `None` for complete graphs.
pub fn minimum_vertex_cut(g: &Graph) -> Result<(usize, Option<VertexSet>)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Precondition(format!("connectivity needs at least 2 vertices, got {n}")));
    }
    if g.is_complete() {
        return Ok((n - 1, None));
    }
    let ig = IndexedGraph::new(g);
    let adj = &ig.adj;
    if !g.is_connected() {
        return Ok((0, Some(VertexSet::new())));
    }
    let v = (0..n).min_by_key(|&x| (adj[x].len(), x)).expect("n >= 2");
    let mut best = adj[v].len();
    let mut best_cut: Vec<usize> = adj[v].clone();
    let consider = |s: usize, t: usize, best: &mut usize, best_cut: &mut Vec<usize>| {
        let (k, cut) = local_cut(adj, s, t, *best);
        if k < *best {
            *best = k;
            *best_cut = cut.expect("flow below bound yields a cut");
        }
    };
    let is_nb = |a: usize, b: usize| adj[a].binary_search(&b).is_ok();
    for w in 0..n {
        if w != v && !is_nb(v, w) {
            consider(v, w, &mut best, &mut best_cut);
        }
    }
    for (i, &x) in adj[v].iter().enumerate() {
        for &y in &adj[v][i + 1..] {
            if !is_nb(x, y) {
                consider(x, y, &mut best, &mut best_cut);
            }
        }
    }
    Ok((best, Some(ig.set_of(best_cut))))
}

/// `kappa(G)`, with `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    minimum_vertex_cut(g).map(|(k, _)| k)
}

/// `kappa(G)` by enumerating vertex subsets in increasing size.
///
/// Refuses `n > 64` and inputs needing more than [`ORACLE_SUBSET_LIMIT`] subsets.
pub fn vertex_connectivity_oracle(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Precondition(format!("connectivity needs at least 2 vertices, got {n}")));
    }
    if n > 64 {
        return Err(Error::guard("connectivity-oracle-size", format!("n = {n} exceeds 64")));
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    let delta = g.min_degree().unwrap_or(0);
    let budget: u64 = (0..delta).map(|k| binomial(n as u64, k as u64)).sum();
    if budget > ORACLE_SUBSET_LIMIT {
        return Err(Error::guard(
            "connectivity-oracle-subsets",
            format!("{budget} subsets exceed the limit {ORACLE_SUBSET_LIMIT}"),
        ));
    }
    let adj = IndexedGraph::new(g).masks();
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in 0..delta {
        let mut found = false;
        for_each_subset(n, k, |mask| {
            if !found && mask_component_stats(&adj, all & !mask).0 >= 2 {
                found = true;
            }
        });
        if found {
            return Ok(k);
        }
    }
    // No smaller separator exists; the neighbourhood of a min-degree vertex separates.
    let v = (0..n).find(|&v| adj[v].count_ones() as usize == delta).expect("min degree is attained");
    if mask_component_stats(&adj, all & !adj[v]).0 < 2 {
        return Err(Error::Invariant("neighbourhood of a min-degree vertex does not separate".into()));
    }
    Ok(delta)
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let r = (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1));
    u64::try_from(r).unwrap_or(u64::MAX)
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

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        graph(n, &e)
    }

    #[test]
    fn complete_graph_rule() {
        assert_eq!(vertex_connectivity(&complete(6)).unwrap(), 5);
        assert_eq!(vertex_connectivity_oracle(&complete(6)).unwrap(), 5);
    }

    #[test]
    fn cycles_paths_and_disconnected_graphs() {
        let c6 = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
        assert_eq!(vertex_connectivity(&c6).unwrap(), 2);
        assert_eq!(vertex_connectivity_oracle(&c6).unwrap(), 2);
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let (k, cut) = minimum_vertex_cut(&p3).unwrap();
        assert_eq!((k, cut.unwrap()), (1, VertexSet::from(["01".to_string()])));
        let two = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(vertex_connectivity(&two).unwrap(), 0);
        assert_eq!(vertex_connectivity_oracle(&two).unwrap(), 0);
    }

    #[test]
    fn k222_octahedron_is_four_connected() {
        let mut e = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if j != i + 3 {
                    e.push((i, j));
                }
            }
        }
        let g = graph(6, &e);
        assert_eq!(vertex_connectivity(&g).unwrap(), 4);
        assert_eq!(vertex_connectivity_oracle(&g).unwrap(), 4);
    }

    #[test]
    fn returned_cut_separates() {
        let g = graph(7, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6), (1, 3)]);
        let (k, cut) = minimum_vertex_cut(&g).unwrap();
        let cut = cut.unwrap();
        assert_eq!(cut.len(), k);
        assert!(g.without_vertices(&cut).components().len() >= 2);
    }

    #[test]
    fn tiny_inputs_are_rejected() {
        assert!(vertex_connectivity(&graph(1, &[])).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(42, 5), 850_668);
        assert_eq!(binomial(5, 7), 0);
        assert_eq!(binomial(10, 0), 1);
    }
}
