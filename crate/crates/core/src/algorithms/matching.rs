use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{Edge, Graph, IndexedGraph};
use crate::{Error, Result};

/// Largest graph the backtracking oracle accepts.
pub const ORACLE_MAX_N: usize = 12;

/// A set of pairwise vertex-disjoint edges, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// True when every edge is in `g` and no two edges share an endpoint.
    pub fn is_matching_of(&self, g: &Graph) -> bool {
        let mut used = std::collections::BTreeSet::new();
        self.edges.iter().all(|e| g.has_edge(e) && used.insert(e.u()) && used.insert(e.v()))
    }

    fn from_mate(ig: &IndexedGraph, mate: &[Option<usize>]) -> Self {
        let mut edges: Vec<Edge> = mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| Edge::of(&ig.ids[v], &ig.ids[w])))
            .collect();
        edges.sort();
        Matching { edges }
    }
}

/// Maximum matching by Edmonds' blossom algorithm, `O(n^3)`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let ig = IndexedGraph::new(g);
    let mate = Blossom::new(&ig.adj).run();
    Matching::from_mate(&ig, &mate)
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![None; n],
            parent: vec![None; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn run(mut self) -> Vec<Option<usize>> {
        let n = self.adj.len();
        // Greedy start; augmentation fixes any suboptimal choice.
        for v in 0..n {
            if self.mate[v].is_none() {
                if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w].is_none()) {
                    self.mate[v] = Some(w);
                    self.mate[w] = Some(v);
                }
            }
        }
        for root in 0..n {
            if self.mate[root].is_some() {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                loop {
                    let pv = self.parent[v].expect("augmenting path is linked");
                    let next = self.mate[pv];
                    self.mate[v] = Some(pv);
                    self.mate[pv] = Some(v);
                    match next {
                        Some(x) => v = x,
                        None => break,
                    }
                }
            }
        }
        self.mate
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].expect("even vertex has a parent"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b].expect("odd walk stays matched")].expect("even vertex has a parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v].expect("blossom vertex is matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("blossom walk is linked");
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_is_even = to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if to_is_even {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = cur;
                            if !self.used[u] {
                                self.used[u] = true;
                                queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }
}

/// Maximum matching by exhaustive backtracking; refuses `n > 12`.
pub fn matching_oracle(g: &Graph) -> Result<Matching> {
    if g.n() > ORACLE_MAX_N {
        return Err(Error::guard(
            "matching-oracle-size",
            format!("n = {} exceeds the oracle limit {ORACLE_MAX_N}", g.n()),
        ));
    }
    let ig = IndexedGraph::new(g);
    let n = ig.n();
    let mut search = Backtrack { adj: &ig.adj, mate: vec![None; n], best: vec![None; n], best_size: 0 };
    search.go(0, 0, n);
    Ok(Matching::from_mate(&ig, &search.best))
}

struct Backtrack<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<Option<usize>>,
    best: Vec<Option<usize>>,
    best_size: usize,
}

impl Backtrack<'_> {
    /// Vertices below `v` are decided; `free` counts undecided unmatched vertices.
    fn go(&mut self, v: usize, size: usize, free: usize) {
        if size > self.best_size {
            self.best_size = size;
            self.best = self.mate.clone();
        }
        if size + free / 2 <= self.best_size {
            return;
        }
        let n = self.adj.len();
        let Some(v) = (v..n).find(|&u| self.mate[u].is_none()) else {
            return;
        };
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            if w > v && self.mate[w].is_none() {
                self.mate[v] = Some(w);
                self.mate[w] = Some(v);
                self.go(v + 1, size + 1, free - 2);
                self.mate[v] = None;
                self.mate[w] = None;
            }
        }
        // Leave `v` unmatched.
        self.go(v + 1, size, free - 1);
    }
}

/// Whether `g` has a matching of size `floor(n / 2)`, with a maximum matching as witness.
pub fn near_perfect_verdict(g: &Graph) -> (bool, Matching) {
    let m = maximum_matching(g);
    (m.size() == g.n() / 2, m)
}
