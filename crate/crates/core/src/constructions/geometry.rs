//! Straight-line drawings from integer coordinates.

use std::collections::BTreeMap;

use crate::drawing::{dummy_id, CrossingPair, OnePlaneDrawing, Rotation};
use crate::graph::{Edge, Graph};
use crate::{Error, Result};

pub type Point = (i64, i64);

fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (ax, ay) = (a.0 as i128, a.1 as i128);
    ((b.0 as i128 - ax) * (c.1 as i128 - ay)) - ((b.1 as i128 - ay) * (c.0 as i128 - ax))
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orient(a, b, p) == 0 && p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// True when the open segments `ab` and `cd` cross in a single interior point.
pub fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && (o1 > 0) != (o2 > 0) && (o3 > 0) != (o4 > 0)
}

/// True when segments `ab` and `cd` overlap or one passes through an endpoint of the other,
/// other than at a shared endpoint.
pub fn segments_touch(a: Point, b: Point, c: Point, d: Point) -> bool {
    let shared = |p: Point| p == a || p == b;
    (!shared(c) && on_segment(a, b, c))
        || (!shared(d) && on_segment(a, b, d))
        || (c != a && d != a && on_segment(c, d, a))
        || (c != b && d != b && on_segment(c, d, b))
        || (orient(a, b, c) == 0 && orient(a, b, d) == 0 && overlaps_collinear(a, b, c, d))
}

fn overlaps_collinear(a: Point, b: Point, c: Point, d: Point) -> bool {
    let key = |p: Point| if a.0 != b.0 { p.0 } else { p.1 };
    let (lo1, hi1) = (key(a).min(key(b)), key(a).max(key(b)));
    let (lo2, hi2) = (key(c).min(key(d)), key(c).max(key(d)));
    lo1.max(lo2) < hi1.min(hi2)
}

fn crossing_point(a: Point, b: Point, c: Point, d: Point) -> (f64, f64) {
    let (x1, y1, x2, y2) = (a.0 as f64, a.1 as f64, b.0 as f64, b.1 as f64);
    let (x3, y3, x4, y4) = (c.0 as f64, c.1 as f64, d.0 as f64, d.1 as f64);
    let den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4);
    let t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den;
    (x1 + t * (x2 - x1), y1 + t * (y2 - y1))
}

fn angle(from: (f64, f64), to: (f64, f64)) -> f64 {
    (to.1 - from.1).atan2(to.0 - from.0)
}

/// Builds the 1-plane drawing realised by straight segments between `points`.
///
/// Crossings are computed by segment intersection and the rotation by sorting
/// neighbours counterclockwise. Fails when a segment passes through a vertex,
/// two segments overlap, or a segment is crossed more than once.
pub fn straight_line_drawing(points: &BTreeMap<String, Point>, edges: &[Edge]) -> Result<OnePlaneDrawing> {
    let g = Graph::from_parts(points.keys().cloned(), edges.iter().cloned())?;
    let pos = |v: &str| points[v];
    let edges: Vec<Edge> = g.edges().collect();
    let mut partner: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..edges.len() {
        let (a, b) = (pos(edges[i].u()), pos(edges[i].v()));
        for v in g.vertices() {
            if !edges[i].has(v) && on_segment(a, b, pos(v)) {
                return Err(Error::InvalidDrawing(format!("edge {} passes through vertex '{v}'", edges[i])));
            }
        }
        for j in i + 1..edges.len() {
            let (c, d) = (pos(edges[j].u()), pos(edges[j].v()));
            if segments_touch(a, b, c, d) {
                return Err(Error::InvalidDrawing(format!("edges {} and {} overlap", edges[i], edges[j])));
            }
            if segments_cross(a, b, c, d) {
                for k in [i, j] {
                    if partner.contains_key(&k) {
                        return Err(Error::InvalidDrawing(format!("edge {} crossed twice", edges[k])));
                    }
                }
                partner.insert(i, j);
                partner.insert(j, i);
            }
        }
    }
    let mut pairs: Vec<CrossingPair> = partner
        .iter()
        .filter(|(i, j)| i < j)
        .map(|(&i, &j)| CrossingPair::new(edges[i].clone(), edges[j].clone()))
        .collect();
    pairs.sort();
    let dummy_of: BTreeMap<&Edge, usize> =
        pairs.iter().enumerate().flat_map(|(k, p)| p.edges().into_iter().map(move |e| (e, k))).collect();

    let fpos = |v: &str| (pos(v).0 as f64, pos(v).1 as f64);
    let mut rot = Rotation::new();
    for v in g.vertices() {
        let mut ns: Vec<(f64, String)> = g
            .neighbors(v)
            .map(|w| {
                let e = Edge::of(v, w);
                let name = dummy_of.get(&e).map_or_else(|| w.to_string(), |&k| dummy_id(k));
                (angle(fpos(v), fpos(w)), name)
            })
            .collect();
        ns.sort_by(|x, y| x.0.total_cmp(&y.0));
        rot.insert(v.to_string(), ns.into_iter().map(|(_, n)| n).collect());
    }
    for (k, p) in pairs.iter().enumerate() {
        let [a, b, c, d] = p.endpoints();
        let x = crossing_point(pos(a), pos(b), pos(c), pos(d));
        let mut ends: Vec<(f64, String)> = [a, b, c, d].iter().map(|&v| (angle(x, fpos(v)), v.to_string())).collect();
        ends.sort_by(|x, y| x.0.total_cmp(&y.0));
        rot.insert(dummy_id(k), ends.into_iter().map(|(_, n)| n).collect());
    }
    Ok(OnePlaneDrawing::new(g, pairs, Some(rot)))
}
