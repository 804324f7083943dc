use std::fmt::Write;

use crate::field::Field;
use crate::homotopy::HomotopySystem;
use crate::matrix::BasisLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// `S → S ∖ {s}` from the Taylor differential.
    Taylor,
    /// `S → S ∪ {t}` from `σ_{e_j}`; `element` is 1-based.
    Homotopy { element: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub from: String,
    pub to: String,
    pub kind: EdgeKind,
    pub entry: String,
}

/// Subsets of `[r]` as vertices, one edge per nonzero entry of `τ` or `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyGraph {
    /// Vertex names with `|S|`, by size then lexicographically.
    pub vertices: Vec<(String, usize)>,
    pub edges: Vec<GraphEdge>,
}

impl HomotopyGraph {
    pub fn count(&self, taylor: bool) -> usize {
        self.edges
            .iter()
            .filter(|e| (e.kind == EdgeKind::Taylor) == taylor)
            .count()
    }
}

pub fn homotopy_graph<F: Field>(system: &HomotopySystem<F>) -> HomotopyGraph {
    let taylor = system.taylor();
    let ring = system.ci().ring();
    let r = taylor.len();
    let vertices = (0..=r)
        .flat_map(|k| taylor.basis(k).iter().map(move |s| (s.label(), k)))
        .collect();
    let mut edges = Vec::new();
    for k in 1..=r {
        let tau = taylor.differential(k);
        for (row, col, p) in tau.entries() {
            edges.push(GraphEdge {
                from: tau.cols()[col].label(),
                to: tau.rows()[row].label(),
                kind: EdgeKind::Taylor,
                entry: ring.format(p),
            });
        }
    }
    for j in 0..system.ci().codim() {
        for k in 0..r {
            let sigma = system.sigma_e(j, k);
            for (row, col, p) in sigma.entries() {
                edges.push(GraphEdge {
                    from: sigma.cols()[col].label(),
                    to: sigma.rows()[row].label(),
                    kind: EdgeKind::Homotopy { element: j + 1 },
                    entry: ring.format(p),
                });
            }
        }
    }
    HomotopyGraph { vertices, edges }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Blue Taylor edges, red homotopy edges, vertices clustered by parity of `|S|`.
pub fn dot_graph<F: Field>(system: &HomotopySystem<F>) -> String {
    let graph = homotopy_graph(system);
    let several = system.ci().codim() > 1;
    let mut out = String::from("digraph homotopies {\n    rankdir=LR;\n    node [shape=plaintext];\n");
    for (parity, name) in [(0, "even"), (1, "odd")] {
        writeln!(out, "    subgraph cluster_{name} {{").unwrap();
        writeln!(out, "        label={};", quote(&format!("|S| {name}"))).unwrap();
        for (v, _) in graph.vertices.iter().filter(|(_, k)| k % 2 == parity) {
            writeln!(out, "        {};", quote(v)).unwrap();
        }
        writeln!(out, "    }}").unwrap();
    }
    for e in &graph.edges {
        let (color, label) = match e.kind {
            EdgeKind::Taylor => ("blue", e.entry.clone()),
            EdgeKind::Homotopy { element } if several => ("red", format!("{element}: {}", e.entry)),
            EdgeKind::Homotopy { .. } => ("red", e.entry.clone()),
        };
        writeln!(
            out,
            "    {} -> {} [color={color}, label={}];",
            quote(&e.from),
            quote(&e.to),
            quote(&label)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
