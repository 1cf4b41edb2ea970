//! Simple undirected graphs over opaque string vertex ids.
//!
//! Every iteration order in this module is sorted by id, so any output built
//! from a [`Graph`] is byte-stable across runs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A set of vertex ids, iterated in sorted order.
pub type VertexSet = BTreeSet<String>;

/// Prefix reserved for planarization dummy vertices.
pub const DUMMY_PREFIX: char = '#';

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
    #[error("unknown edge {0}")]
    UnknownEdge(Edge),
    #[error("loop at vertex '{0}'")]
    Loop(String),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("duplicate vertex '{0}'")]
    DuplicateVertex(String),
    #[error("vertex id '{0}' is reserved for planarization dummies")]
    ReservedId(String),
    #[error("vertex sets overlap at '{0}'")]
    OverlappingSets(String),
}

/// An unordered pair of distinct vertex ids, stored with the smaller id first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: String,
    hi: String,
}

impl Edge {
    pub fn new(u: impl Into<String>, v: impl Into<String>) -> Result<Self, GraphError> {
        let (u, v) = (u.into(), v.into());
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge { lo: u, hi: v }),
            std::cmp::Ordering::Greater => Ok(Edge { lo: v, hi: u }),
            std::cmp::Ordering::Equal => Err(GraphError::Loop(u)),
        }
    }

    /// Panicking constructor for literals in fixtures and tests.
    pub fn of(u: &str, v: &str) -> Self {
        Edge::new(u, v).expect("edge endpoints must differ")
    }

    pub fn u(&self) -> &str {
        &self.lo
    }

    pub fn v(&self) -> &str {
        &self.hi
    }

    pub fn ends(&self) -> [&str; 2] {
        [&self.lo, &self.hi]
    }

    pub fn has(&self, x: &str) -> bool {
        self.lo == x || self.hi == x
    }

    /// The endpoint opposite `x`, if `x` is an endpoint.
    pub fn other(&self, x: &str) -> Option<&str> {
        if self.lo == x {
            Some(&self.hi)
        } else if self.hi == x {
            Some(&self.lo)
        } else {
            None
        }
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        other.has(&self.lo) || other.has(&self.hi)
    }

    pub fn within(&self, set: &VertexSet) -> bool {
        set.contains(&self.lo) && set.contains(&self.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [&self.lo, &self.hi].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [u, v] = <[String; 2]>::deserialize(d)?;
        Edge::new(u, v).map_err(serde::de::Error::custom)
    }
}

/// A simple undirected graph.
///
/// Invariants: no loops, no parallel edges, every edge endpoint is a vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<String, BTreeSet<String>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_parts<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::new();
        for v in vertices {
            let v = v.into();
            if g.adj.contains_key(&v) {
                return Err(GraphError::DuplicateVertex(v));
            }
            g.add_vertex(v)?;
        }
        for e in edges {
            g.add_edge(e)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: impl Into<String>) -> Result<(), GraphError> {
        let v = v.into();
        if v.starts_with(DUMMY_PREFIX) {
            return Err(GraphError::ReservedId(v));
        }
        self.adj.entry(v).or_default();
        Ok(())
    }

    /// Adds an edge between existing vertices; duplicates are rejected.
    pub fn add_edge(&mut self, e: Edge) -> Result<(), GraphError> {
        for x in e.ends() {
            if !self.adj.contains_key(x) {
                return Err(GraphError::UnknownVertex(x.to_string()));
            }
        }
        if !self.adj.get_mut(e.u()).unwrap().insert(e.v().to_string()) {
            return Err(GraphError::DuplicateEdge(e));
        }
        self.adj.get_mut(e.v()).unwrap().insert(e.u().to_string());
        Ok(())
    }

    /// Adds an edge unless it is already present.
    pub(crate) fn insert_edge(&mut self, e: &Edge) {
        self.adj.entry(e.u().to_string()).or_default().insert(e.v().to_string());
        self.adj.entry(e.v().to_string()).or_default().insert(e.u().to_string());
    }

    pub(crate) fn insert_vertex_unchecked(&mut self, v: impl Into<String>) {
        self.adj.entry(v.into()).or_default();
    }

    pub fn remove_edge(&mut self, e: &Edge) -> bool {
        let hit = self.adj.get_mut(e.u()).is_some_and(|s| s.remove(e.v()));
        if hit {
            self.adj.get_mut(e.v()).unwrap().remove(e.u());
        }
        hit
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn e(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.adj.keys().map(String::as_str)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().cloned().collect()
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.adj.contains_key(v)
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().flat_map(|(u, ns)| {
            ns.range::<String, _>((std::ops::Bound::Excluded(u), std::ops::Bound::Unbounded))
                .map(move |v| Edge { lo: u.clone(), hi: v.clone() })
        })
    }

    pub fn has_edge(&self, e: &Edge) -> bool {
        self.adj.get(e.u()).is_some_and(|s| s.contains(e.v()))
    }

    pub fn adjacent(&self, u: &str, v: &str) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(v))
    }

    pub fn neighbors(&self, v: &str) -> impl Iterator<Item = &str> + '_ {
        self.adj.get(v).into_iter().flatten().map(String::as_str)
    }

    pub fn degree(&self, v: &str) -> usize {
        self.adj.get(v).map_or(0, BTreeSet::len)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.values().map(BTreeSet::len).min()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.values().all(|s| s.len() + 1 == n)
    }

    fn check_vertices<'a>(&self, set: impl IntoIterator<Item = &'a String>) -> Result<(), GraphError> {
        for v in set {
            if !self.has_vertex(v) {
                return Err(GraphError::UnknownVertex(v.clone()));
            }
        }
        Ok(())
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.adj.keys() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([start.clone()]);
            seen.insert(start.clone());
            while let Some(u) = queue.pop_front() {
                for w in &self.adj[&u] {
                    if seen.insert(w.clone()) {
                        queue.push_back(w.clone());
                    }
                }
                comp.insert(u);
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `keep` (when given), then with `drop` edges removed.
    pub fn subgraph(&self, keep: Option<&VertexSet>, drop: Option<&BTreeSet<Edge>>) -> Result<Graph, GraphError> {
        if let Some(keep) = keep {
            self.check_vertices(keep)?;
        }
        if let Some(drop) = drop {
            for e in drop {
                if !self.has_edge(e) {
                    return Err(GraphError::UnknownEdge(e.clone()));
                }
            }
        }
        let mut g = match keep {
            Some(keep) => self.induced_unchecked(keep),
            None => self.clone(),
        };
        for e in drop.into_iter().flatten() {
            g.remove_edge(e);
        }
        Ok(g)
    }

    fn induced_unchecked(&self, keep: &VertexSet) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(*v))
            .map(|(v, ns)| (v.clone(), ns.iter().filter(|w| keep.contains(*w)).cloned().collect()))
            .collect();
        Graph { adj }
    }

    pub fn induced(&self, keep: &VertexSet) -> Result<Graph, GraphError> {
        self.subgraph(Some(keep), None)
    }

    /// `G - S`: the subgraph induced on the complement of `s`.
    pub fn without_vertices(&self, s: &VertexSet) -> Graph {
        let keep = self.adj.keys().filter(|v| !s.contains(*v)).cloned().collect();
        self.induced_unchecked(&keep)
    }

    /// Contracts `uv`; the merged vertex keeps the lexicographically smaller id.
    pub fn contract_edge(&self, uv: &Edge) -> Result<Graph, GraphError> {
        if !self.has_edge(uv) {
            return Err(GraphError::UnknownEdge(uv.clone()));
        }
        let (keep, gone) = (uv.u(), uv.v());
        let mut g = self.clone();
        let moved = g.adj.remove(gone).unwrap();
        for w in &moved {
            g.adj.get_mut(w).unwrap().remove(gone);
            if w != keep {
                g.adj.get_mut(w).unwrap().insert(keep.to_string());
                g.adj.get_mut(keep).unwrap().insert(w.clone());
            }
        }
        Ok(g)
    }

    /// `(N_G(V1, V2), e_G(V1, V2))` for disjoint vertex sets.
    pub fn boundary(&self, v1: &VertexSet, v2: &VertexSet) -> Result<(VertexSet, usize), GraphError> {
        self.check_vertices(v1.iter().chain(v2))?;
        if let Some(x) = v1.intersection(v2).next() {
            return Err(GraphError::OverlappingSets(x.clone()));
        }
        let mut reached = VertexSet::new();
        let mut count = 0;
        for u in v1 {
            for w in &self.adj[u] {
                if v2.contains(w) {
                    count += 1;
                    reached.insert(w.clone());
                }
            }
        }
        Ok((reached, count))
    }

    /// Returns the two colour classes if the graph is bipartite.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side: BTreeMap<&str, bool> = BTreeMap::new();
        for start in self.adj.keys() {
            if side.contains_key(start.as_str()) {
                continue;
            }
            side.insert(start, false);
            let mut queue = VecDeque::from([start.as_str()]);
            while let Some(u) = queue.pop_front() {
                let su = side[u];
                for w in &self.adj[u] {
                    match side.get(w.as_str()) {
                        Some(&sw) if sw == su => return None,
                        Some(_) => {}
                        None => {
                            side.insert(w, !su);
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        let (a, b): (Vec<_>, Vec<_>) = side.into_iter().partition(|(_, s)| !*s);
        Some((a.into_iter().map(|(v, _)| v.to_string()).collect(), b.into_iter().map(|(v, _)| v.to_string()).collect()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, crate::Error> {
        let raw: GraphJson = serde_json::from_str(text)?;
        raw.into_graph()
    }
}

/// Wire form: `{"vertices": [...], "edges": [[u, v], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphJson {
    pub(crate) fn into_graph(self) -> Result<Graph, crate::Error> {
        let mut g = Graph::new();
        for (i, v) in self.vertices.into_iter().enumerate() {
            if g.has_vertex(&v) {
                return Err(crate::Error::schema(format!("vertices[{i}]"), GraphError::DuplicateVertex(v)));
            }
            g.add_vertex(v).map_err(|e| crate::Error::schema(format!("vertices[{i}]"), e))?;
        }
        for (i, [u, v]) in self.edges.into_iter().enumerate() {
            let at = format!("edges[{i}]");
            let e = Edge::new(u, v).map_err(|e| crate::Error::schema(&at, e))?;
            g.add_edge(e).map_err(|e| crate::Error::schema(&at, e))?;
        }
        Ok(g)
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("vertices", &self.adj.keys().collect::<Vec<_>>())?;
        st.serialize_field("edges", &self.edges().collect::<Vec<_>>())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        GraphJson::deserialize(d)?.into_graph().map_err(serde::de::Error::custom)
    }
}

/// Dense index view of a [`Graph`], with vertices numbered in sorted-id order.
#[derive(Debug, Clone)]
pub struct IndexedGraph {
    pub ids: Vec<String>,
    pub adj: Vec<Vec<usize>>,
    index: BTreeMap<String, usize>,
}

impl IndexedGraph {
    pub fn new(g: &Graph) -> Self {
        let ids: Vec<String> = g.vertices().map(str::to_string).collect();
        let index: BTreeMap<String, usize> = ids.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let adj = ids.iter().map(|v| g.neighbors(v).map(|w| index[w]).collect()).collect();
        IndexedGraph { ids, adj, index }
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn index_of(&self, v: &str) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn set_of(&self, idx: impl IntoIterator<Item = usize>) -> VertexSet {
        idx.into_iter().map(|i| self.ids[i].clone()).collect()
    }

    /// Adjacency bitmasks; only meaningful when `n <= 64`.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask view needs n <= 64");
        self.adj.iter().map(|ns| ns.iter().fold(0u64, |m, &w| m | (1u64 << w))).collect()
    }
}

/// Component counts of the subgraph induced on `alive` (bitmask form): `(components, odd components)`.
pub(crate) fn mask_component_stats(adj: &[u64], mut alive: u64) -> (usize, usize) {
    let (mut comps, mut odd) = (0, 0);
    while alive != 0 {
        let start = alive & alive.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & alive & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        alive &= !comp;
        comps += 1;
        if comp.count_ones() % 2 == 1 {
            odd += 1;
        }
    }
    (comps, odd)
}
