use serde::Serialize;

use super::matching::maximum_matching;
use crate::graph::{mask_component_stats, Graph, IndexedGraph, VertexSet};
use crate::{Error, Result};

/// Largest graph the exhaustive Tutte-Berge search accepts.
pub const EXHAUSTIVE_MAX_N: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TutteBergeMode {
    /// Every vertex subset, with bound pruning.
    Exhaustive,
    /// The Gallai-Edmonds set `A(G)`, from `n` matching computations.
    GallaiEdmonds,
}

/// A set `S` with `odd(G - S) - |S|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeficiencyWitness {
    pub s: VertexSet,
    pub odd_count: usize,
    pub deficiency: i64,
}

impl DeficiencyWitness {
    /// Evaluates `odd(G - S) - |S|` for a given `S`.
    pub fn for_set(g: &Graph, s: &VertexSet) -> Result<Self> {
        if let Some(v) = s.iter().find(|v| !g.has_vertex(v)) {
            return Err(crate::GraphError::UnknownVertex(v.clone()).into());
        }
        let odd_count = g.without_vertices(s).components().iter().filter(|c| c.len() % 2 == 1).count();
        Ok(DeficiencyWitness { s: s.clone(), odd_count, deficiency: odd_count as i64 - s.len() as i64 })
    }

    /// Matching number implied by the Tutte-Berge formula when this witness is optimal.
    pub fn implied_matching_number(&self, n: usize) -> i64 {
        (n as i64 - self.deficiency) / 2
    }
}

/// Exhaustive maximiser of `odd(G - S) - |S|`; refuses `n > 24`.
pub fn tutte_berge(g: &Graph) -> Result<DeficiencyWitness> {
    tutte_berge_in(g, TutteBergeMode::Exhaustive)
}

pub fn tutte_berge_in(g: &Graph, mode: TutteBergeMode) -> Result<DeficiencyWitness> {
    match mode {
        TutteBergeMode::Exhaustive => exhaustive(g),
        TutteBergeMode::GallaiEdmonds => gallai_edmonds(g),
    }
}

fn exhaustive(g: &Graph) -> Result<DeficiencyWitness> {
    let n = g.n();
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::guard(
            "tutte-berge-exhaustive-size",
            format!("n = {n} exceeds {EXHAUSTIVE_MAX_N}; use the Gallai-Edmonds mode"),
        ));
    }
    let ig = IndexedGraph::new(g);
    let adj = ig.masks();
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let (_, odd0) = mask_component_stats(&adj, all);
    let mut best = (odd0 as i64, 0u64);
    for k in 1..=n {
        // odd(G - S) <= n - |S| bounds the value by n - 2|S|.
        if (n as i64 - 2 * k as i64) < best.0 {
            break;
        }
        for_each_subset(n, k, |mask| {
            let (_, odd) = mask_component_stats(&adj, all & !mask);
            let value = odd as i64 - k as i64;
            if value > best.0 || (value == best.0 && lex_less(mask, best.1)) {
                best = (value, mask);
            }
        });
    }
    let s = ig.set_of((0..n).filter(|&i| best.1 >> i & 1 == 1));
    let w = DeficiencyWitness::for_set(g, &s)?;
    debug_assert_eq!(w.deficiency, best.0);
    Ok(w)
}

fn gallai_edmonds(g: &Graph) -> Result<DeficiencyWitness> {
    let nu = maximum_matching(g).size();
    let d: VertexSet = g
        .vertices()
        .filter(|&v| {
            let one: VertexSet = [v.to_string()].into();
            maximum_matching(&g.without_vertices(&one)).size() == nu
        })
        .map(str::to_string)
        .collect();
    let a: VertexSet = d.iter().flat_map(|v| g.neighbors(v)).filter(|w| !d.contains(*w)).map(str::to_string).collect();
    let w = DeficiencyWitness::for_set(g, &a)?;
    if w.implied_matching_number(g.n()) != nu as i64 {
        return Err(Error::Invariant(format!("Gallai-Edmonds set does not certify matching number {nu}")));
    }
    Ok(w)
}

/// Lexicographic order of the sorted index lists of two masks.
pub(crate) fn lex_less(a: u64, b: u64) -> bool {
    let (mut a, mut b) = (a, b);
    loop {
        match (a, b) {
            (0, 0) => return false,
            (0, _) => return true,
            (_, 0) => return false,
            _ => {
                let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
                if x != y {
                    return x < y;
                }
                a &= a - 1;
                b &= b - 1;
            }
        }
    }
}

/// Calls `f` on every `k`-subset of `0..n` (as a mask), in increasing mask order.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u64)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit: u128 = 1u128 << n;
    let mut m: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    loop {
        f(m);
        // Gosper's hack.
        let c = m & m.wrapping_neg();
        let r = m as u128 + c as u128;
        if r >= limit {
            return;
        }
        let r = r as u64;
        m = (((r ^ m) >> 2) / c) | r;
    }
}
