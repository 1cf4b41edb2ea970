//! Graphviz export of the planarization.

use std::fmt::Write;

use super::{dummy_id, OnePlaneDrawing};

fn quote(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

impl OnePlaneDrawing {
    /// DOT text: real vertices as circles, crossing points as `shape=point`
    /// nodes, and each crossed edge as two dashed halves meeting at its point.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph drawing {\n  node [shape=circle];\n");
        for v in self.graph().vertices() {
            let _ = writeln!(out, "  {};", quote(v));
        }
        for k in 0..self.crossings().len() {
            let _ = writeln!(out, "  {} [shape=point];", quote(&dummy_id(k)));
        }
        for e in self.graph().edges() {
            match self.crossing_of(&e) {
                None => {
                    let _ = writeln!(out, "  {} -- {};", quote(e.u()), quote(e.v()));
                }
                Some(k) => {
                    let mid = quote(&dummy_id(k));
                    for x in e.ends() {
                        let _ =
                            writeln!(out, "  {} -- {} [style=dashed, label={}];", quote(x), mid, quote(&e.to_string()));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::k4_crossed;

    #[test]
    fn crossed_halves_are_dashed() {
        let dot = k4_crossed().to_dot();
        assert!(dot.starts_with("graph drawing {"));
        assert!(dot.contains("\"#0\" [shape=point];"));
        assert_eq!(dot.matches("style=dashed").count(), 4);
        assert!(dot.contains("\"a\" -- \"b\";"));
    }
}
