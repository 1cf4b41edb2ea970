//! Rotation-system plumbing: face tracing and an edge-slot view of a drawing
//! that survives edge deletion and contraction.

use std::collections::{BTreeMap, BTreeSet};

use super::{dummy_id, parse_dummy, CrossingPair, OnePlaneDrawing, Rotation};
use crate::graph::{Edge, Graph};
use crate::{Error, Result};

/// Traces the faces of an embedded graph.
///
/// The successor of dart `u -> v` is `v -> w`, where `w` precedes `u` in the
/// cyclic list of `v`. With counterclockwise rotations this walks every
/// bounded face counterclockwise. Returns `None` when the rotation is not
/// symmetric (some `v` listed at `u` without `u` listed at `v`).
pub fn trace_faces(rot: &Rotation) -> Option<Vec<Vec<String>>> {
    let mut pos: BTreeMap<(&str, &str), usize> = BTreeMap::new();
    for (u, ns) in rot {
        for (i, w) in ns.iter().enumerate() {
            pos.insert((u.as_str(), w.as_str()), i);
        }
    }
    let mut seen: BTreeSet<(&str, &str)> = BTreeSet::new();
    let mut faces = Vec::new();
    for (u, ns) in rot {
        for w in ns {
            let start = (u.as_str(), w.as_str());
            if seen.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut dart = start;
            while seen.insert(dart) {
                face.push(dart.0.to_string());
                let (a, b) = dart;
                let around_b = rot.get(b)?;
                let i = *pos.get(&(b, a))?;
                let next = &around_b[(i + around_b.len() - 1) % around_b.len()];
                dart = (b, next.as_str());
            }
            if dart != start {
                return None;
            }
            faces.push(face);
        }
    }
    Some(faces)
}

#[derive(Debug, Clone)]
struct Slot {
    ends: [String; 2],
    crossing: Option<usize>,
    alive: bool,
}

impl Slot {
    fn other(&self, x: &str) -> &str {
        if self.ends[0] == x {
            &self.ends[1]
        } else {
            &self.ends[0]
        }
    }

    fn edge(&self) -> Edge {
        Edge::of(&self.ends[0], &self.ends[1])
    }
}

#[derive(Debug, Clone)]
struct Cross {
    slots: [usize; 2],
    /// Cyclic order around the dummy: `(slot, end index)`.
    around: Option<[(usize, usize); 4]>,
    alive: bool,
}

/// Mutable slot-based view of a structurally valid drawing.
#[derive(Debug, Clone)]
pub(crate) struct Embedded {
    vertices: BTreeSet<String>,
    slots: Vec<Slot>,
    crosses: Vec<Cross>,
    around: Option<BTreeMap<String, Vec<usize>>>,
}

impl Embedded {
    /// Requires every crossing edge to exist, be crossed once, and not share an
    /// endpoint with its partner; a rotation, when present, must list exactly
    /// the planarization neighbours with dummy halves opposite.
    pub(crate) fn from_drawing(d: &OnePlaneDrawing) -> Result<Self> {
        let g = d.graph();
        let mut index = BTreeMap::new();
        let mut slots = Vec::new();
        for e in g.edges() {
            index.insert(e.clone(), slots.len());
            slots.push(Slot { ends: [e.u().to_string(), e.v().to_string()], crossing: None, alive: true });
        }
        let mut crosses = Vec::new();
        for (k, p) in d.crossings().iter().enumerate() {
            let mut pair = [0; 2];
            for (j, e) in p.edges().into_iter().enumerate() {
                let s = *index
                    .get(e)
                    .ok_or_else(|| Error::InvalidDrawing(format!("crossing {k} uses unknown edge {e}")))?;
                if slots[s].crossing.is_some() {
                    return Err(Error::InvalidDrawing(format!("edge {e} crossed twice")));
                }
                slots[s].crossing = Some(k);
                pair[j] = s;
            }
            if p.first().shares_endpoint(p.second()) {
                return Err(Error::InvalidDrawing(format!("crossing {k} joins adjacent edges")));
            }
            crosses.push(Cross { slots: pair, around: None, alive: true });
        }
        let mut emb = Embedded { vertices: g.vertex_set(), slots, crosses, around: None };
        if let Some(rot) = d.rotation() {
            emb.load_rotation(g, rot, &index)?;
        }
        Ok(emb)
    }

    fn load_rotation(&mut self, g: &Graph, rot: &Rotation, index: &BTreeMap<Edge, usize>) -> Result<()> {
        let bad = |what: String| Error::InvalidDrawing(format!("rotation: {what}"));
        let mut around = BTreeMap::new();
        for v in g.vertices() {
            let list = rot.get(v).ok_or_else(|| bad(format!("vertex '{v}' missing")))?;
            let mut out = Vec::with_capacity(list.len());
            for x in list {
                let slot = match parse_dummy(x) {
                    Some(k) => {
                        let c = self.crosses.get(k).ok_or_else(|| bad(format!("unknown dummy '{x}'")))?;
                        *c.slots
                            .iter()
                            .find(|&&s| self.slots[s].ends.iter().any(|e| e == v))
                            .ok_or_else(|| bad(format!("dummy '{x}' not incident to '{v}'")))?
                    }
                    None => {
                        let e = Edge::new(v, x.as_str()).map_err(|e| bad(e.to_string()))?;
                        let s = *index.get(&e).ok_or_else(|| bad(format!("'{v}' lists non-neighbour '{x}'")))?;
                        if self.slots[s].crossing.is_some() {
                            return Err(bad(format!("'{v}' lists crossed edge {e} without its dummy")));
                        }
                        s
                    }
                };
                out.push(slot);
            }
            let distinct: BTreeSet<_> = out.iter().collect();
            if distinct.len() != out.len() || out.len() != g.degree(v) {
                return Err(bad(format!("neighbour list of '{v}' does not match the planarization")));
            }
            around.insert(v.to_string(), out);
        }
        for k in 0..self.crosses.len() {
            let id = dummy_id(k);
            let list = rot.get(&id).ok_or_else(|| bad(format!("dummy '{id}' missing")))?;
            if list.len() != 4 {
                return Err(bad(format!("dummy '{id}' must have four neighbours")));
            }
            let mut cyc = [(0, 0); 4];
            for (i, x) in list.iter().enumerate() {
                cyc[i] = self.crosses[k]
                    .slots
                    .iter()
                    .find_map(|&s| self.slots[s].ends.iter().position(|e| e == x).map(|end| (s, end)))
                    .ok_or_else(|| bad(format!("dummy '{id}' lists non-endpoint '{x}'")))?;
            }
            for i in 0..2 {
                let (a, b) = (cyc[i], cyc[i + 2]);
                if a.0 != b.0 || a.1 == b.1 {
                    return Err(bad(format!("halves of an edge are not opposite at '{id}'")));
                }
            }
            self.crosses[k].around = Some(cyc);
        }
        let expected = g.n() + self.crosses.len();
        if rot.len() != expected {
            return Err(bad("unexpected extra vertices".to_string()));
        }
        self.around = Some(around);
        Ok(())
    }

    fn slot_of(&self, e: &Edge) -> Option<usize> {
        self.slots.iter().position(|s| s.alive && s.edge() == *e)
    }

    fn kill_cross(&mut self, k: usize) {
        if !self.crosses[k].alive {
            return;
        }
        self.crosses[k].alive = false;
        for s in self.crosses[k].slots {
            self.slots[s].crossing = None;
        }
    }

    fn remove_slot(&mut self, s: usize) {
        if !self.slots[s].alive {
            return;
        }
        self.slots[s].alive = false;
        if let Some(k) = self.slots[s].crossing {
            self.kill_cross(k);
        }
        if let Some(around) = &mut self.around {
            for end in &self.slots[s].ends {
                if let Some(list) = around.get_mut(end) {
                    list.retain(|&x| x != s);
                }
            }
        }
    }

    pub(crate) fn remove_edge(&mut self, e: &Edge) -> bool {
        match self.slot_of(e) {
            Some(s) => {
                self.remove_slot(s);
                true
            }
            None => false,
        }
    }

    pub(crate) fn remove_vertex(&mut self, v: &str) {
        let incident: Vec<usize> = (0..self.slots.len())
            .filter(|&s| self.slots[s].alive && self.slots[s].ends.iter().any(|e| e == v))
            .collect();
        for s in incident {
            self.remove_slot(s);
        }
        self.vertices.remove(v);
        if let Some(around) = &mut self.around {
            around.remove(v);
        }
    }

    /// Contracts the uncrossed edge `uv` into the smaller endpoint.
    ///
    /// Crossings whose two edges become adjacent are undone by exchanging the
    /// far halves of the two edges at the crossing point, which keeps both
    /// edges and the embedding planar. Parallel copies are then merged,
    /// keeping an uncrossed copy when one exists.
    pub(crate) fn contract(&mut self, uv: &Edge) -> Result<()> {
        let s_uv = self.slot_of(uv).ok_or_else(|| Error::Graph(crate::GraphError::UnknownEdge(uv.clone())))?;
        if self.slots[s_uv].crossing.is_some() {
            return Err(Error::Precondition(format!("edge {uv} is crossed; only uncrossed edges may be contracted")));
        }
        let (w, gone) = (uv.u().to_string(), uv.v().to_string());

        if let Some(around) = &mut self.around {
            let mut lu = around.remove(&w).unwrap_or_default();
            let mut lv = around.remove(&gone).unwrap_or_default();
            let iu = lu.iter().position(|&s| s == s_uv).expect("uv listed at u");
            let iv = lv.iter().position(|&s| s == s_uv).expect("uv listed at v");
            lu.rotate_left(iu);
            lv.rotate_left(iv);
            let merged: Vec<usize> = lu.into_iter().skip(1).chain(lv.into_iter().skip(1)).collect();
            around.insert(w.clone(), merged);
        }
        self.slots[s_uv].alive = false;
        self.vertices.remove(&gone);
        for slot in self.slots.iter_mut().filter(|s| s.alive) {
            for end in slot.ends.iter_mut() {
                if *end == gone {
                    *end = w.clone();
                }
            }
        }

        for k in 0..self.crosses.len() {
            if !self.crosses[k].alive {
                continue;
            }
            let [a, b] = self.crosses[k].slots;
            let shared = self.slots[a].ends.iter().find(|x| self.slots[b].ends.contains(x)).cloned();
            if let Some(shared) = shared {
                self.uncross(k, &shared);
            }
        }

        let mut groups: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (s, slot) in self.slots.iter().enumerate() {
            if slot.alive {
                groups.entry(slot.edge()).or_default().push(s);
            }
        }
        for copies in groups.into_values().filter(|c| c.len() > 1) {
            let keep = copies.iter().copied().find(|&s| self.slots[s].crossing.is_none()).unwrap_or(copies[0]);
            for s in copies {
                if s != keep {
                    self.remove_slot(s);
                }
            }
        }
        Ok(())
    }

    /// Removes crossing `k` between two edges sharing `hub`, swapping their far halves.
    fn uncross(&mut self, k: usize, hub: &str) {
        let [a, b] = self.crosses[k].slots;
        let x = self.slots[a].other(hub).to_string();
        let y = self.slots[b].other(hub).to_string();
        self.kill_cross(k);
        // The half of `a` at the hub now continues along the far half of `b`.
        self.slots[a].ends = [hub.to_string(), y.clone()];
        self.slots[b].ends = [hub.to_string(), x.clone()];
        if let Some(around) = &mut self.around {
            for s in around.get_mut(&x).into_iter().flatten() {
                if *s == a {
                    *s = b;
                }
            }
            for s in around.get_mut(&y).into_iter().flatten() {
                if *s == b {
                    *s = a;
                }
            }
        }
    }

    pub(crate) fn to_drawing(&self) -> OnePlaneDrawing {
        let mut g = Graph::new();
        for v in &self.vertices {
            g.insert_vertex_unchecked(v.clone());
        }
        for slot in self.slots.iter().filter(|s| s.alive) {
            g.insert_edge(&slot.edge());
        }
        let mut live: Vec<(CrossingPair, usize)> = self
            .crosses
            .iter()
            .enumerate()
            .filter(|(_, c)| c.alive)
            .map(|(k, c)| (CrossingPair::new(self.slots[c.slots[0]].edge(), self.slots[c.slots[1]].edge()), k))
            .collect();
        live.sort();
        let renumber: BTreeMap<usize, usize> = live.iter().enumerate().map(|(i, (_, k))| (*k, i)).collect();
        let rotation = self.around.as_ref().map(|around| {
            let mut rot = Rotation::new();
            for (v, list) in around {
                let names = list
                    .iter()
                    .map(|&s| match self.slots[s].crossing {
                        Some(k) => dummy_id(renumber[&k]),
                        None => self.slots[s].other(v).to_string(),
                    })
                    .collect();
                rot.insert(v.clone(), names);
            }
            for (k, c) in self.crosses.iter().enumerate().filter(|(_, c)| c.alive) {
                let cyc = c.around.expect("rotation present implies dummy order");
                rot.insert(
                    dummy_id(renumber[&k]),
                    cyc.iter().map(|&(s, end)| self.slots[s].ends[end].clone()).collect(),
                );
            }
            rot
        });
        OnePlaneDrawing::new(g, live.into_iter().map(|(p, _)| p).collect(), rotation)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn k4_planarization_has_five_faces() {
        let d = k4_crossed();
        let faces = trace_faces(d.rotation().unwrap()).unwrap();
        // V = 5, E = 8, so a connected plane embedding has 5 faces.
        assert_eq!(faces.len(), 5);
        assert!(faces.iter().all(|f| f.len() == 3 || f.len() == 4));
    }

    #[test]
    fn round_trip_through_slots_is_identity() {
        let d = k4_crossed();
        assert_eq!(Embedded::from_drawing(&d).unwrap().to_drawing(), d);
    }

    #[test]
    fn asymmetric_rotation_is_rejected_by_tracer() {
        let rot: Rotation = [("a".to_string(), vec!["b".to_string()]), ("b".to_string(), vec![])].into_iter().collect();
        assert!(trace_faces(&rot).is_none());
    }
}
