//! Graph documents and their DOT rendering.

use std::fmt::Write;

use anyhow::{bail, ensure, Result};
use modinv_core::mtc::su2_fusion_closed_form;
use modinv_core::nimrep::{ade_graph_of, AdeKind};
use modinv_core::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: usize,
    pub label: String,
    pub even: bool,
    pub ambichiral: bool,
}

/// Undirected edge `a -- b` with `a <= b`, drawn `multiplicity` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub name: String,
    vertices: Vec<Vertex>,
    solid: Vec<Edge>,
    dotted: Vec<Edge>,
}

impl GraphDocument {
    /// Vertices are sorted by id and edges normalized and sorted.
    pub fn new(name: impl Into<String>, mut vertices: Vec<Vertex>, solid: Vec<Edge>, dotted: Vec<Edge>) -> Result<Self> {
        vertices.sort_by_key(|v| v.id);
        for w in vertices.windows(2) {
            ensure!(w[0].id != w[1].id, "duplicate vertex {}", w[0].id);
        }
        let known = |id: usize| vertices.binary_search_by_key(&id, |v| v.id).is_ok();
        let clean = |edges: Vec<Edge>| -> Result<Vec<Edge>> {
            let mut out = Vec::with_capacity(edges.len());
            for e in edges {
                ensure!(known(e.a) && known(e.b), "edge {}--{} has an undeclared endpoint", e.a, e.b);
                ensure!(e.multiplicity > 0, "edge {}--{} has multiplicity 0", e.a, e.b);
                out.push(Edge {
                    a: e.a.min(e.b),
                    b: e.a.max(e.b),
                    multiplicity: e.multiplicity,
                });
            }
            out.sort();
            Ok(out)
        };
        let solid = clean(solid)?;
        let dotted = clean(dotted)?;
        Ok(GraphDocument {
            name: name.into(),
            vertices,
            solid,
            dotted,
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn solid_edges(&self) -> &[Edge] {
        &self.solid
    }

    pub fn dotted_edges(&self) -> &[Edge] {
        &self.dotted
    }

    /// Adjacency matrix of one edge set, indexed by vertex position.
    pub fn adjacency(&self, dotted: bool) -> IntMatrix {
        let n = self.vertices.len();
        let pos = |id: usize| self.vertices.binary_search_by_key(&id, |v| v.id).expect("declared");
        let mut m = IntMatrix::zeros(n, n);
        for e in if dotted { &self.dotted } else { &self.solid } {
            let (a, b) = (pos(e.a), pos(e.b));
            m[(a, b)] += i64::from(e.multiplicity);
            if a != b {
                m[(b, a)] += i64::from(e.multiplicity);
            }
        }
        m
    }
}

/// Edges of a symmetric non-negative matrix over vertex ids `0..n`.
pub fn edges_of(m: &IntMatrix) -> Vec<Edge> {
    let mut out = Vec::new();
    for a in 0..m.nrows() {
        for b in a..m.ncols() {
            if m[(a, b)] > 0 {
                out.push(Edge {
                    a,
                    b,
                    multiplicity: m[(a, b)] as u32,
                });
            }
        }
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn emit_dot(doc: &GraphDocument) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(&doc.name)).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in &doc.vertices {
        let mut attrs = vec![format!("label={}", quote(&v.label))];
        if v.ambichiral {
            attrs.push("shape=doublecircle".into());
        }
        if v.even {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=lightgray".into());
        }
        writeln!(out, "  {} [{}];", v.id, attrs.join(", ")).unwrap();
    }
    for e in &doc.solid {
        for _ in 0..e.multiplicity {
            writeln!(out, "  {} -- {};", e.a, e.b).unwrap();
        }
    }
    for e in &doc.dotted {
        for _ in 0..e.multiplicity {
            writeln!(out, "  {} -- {} [style=dashed];", e.a, e.b).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Document for a named case. `D_odd` gives the full system on labels
/// `0..=k` with `N_1` solid and `N_{k-1}` dotted, every vertex ambichiral;
/// every other case gives the graph `G_1`.
pub fn case_document(name: &str) -> Result<GraphDocument> {
    let kind = AdeKind::parse(name)?;
    if let AdeKind::D(n) = kind {
        if n % 2 == 1 {
            let k = kind.level();
            let ring = su2_fusion_closed_form(k)?;
            let vertices = (0..=k)
                .map(|j| Vertex {
                    id: j,
                    label: format!("{j}"),
                    even: j % 2 == 0,
                    ambichiral: true,
                })
                .collect();
            return GraphDocument::new(
                format!("{kind} full system"),
                vertices,
                edges_of(&ring.fusion_matrix(1)),
                edges_of(&ring.fusion_matrix(k - 1)),
            );
        }
    }
    let graph = ade_graph_of(kind);
    if graph.vertices() == 0 {
        bail!("empty graph {name}");
    }
    let vertices = (0..graph.vertices())
        .map(|v| Vertex {
            id: v,
            label: format!("{v}"),
            even: graph.is_even(v),
            ambichiral: false,
        })
        .collect();
    GraphDocument::new(graph.name(), vertices, edges_of(&graph.adjacency), Vec::new())
}
