//! The Auslander-Reiten quiver and its text export.
//!
//! Vertices are the module indices 0, ..., n-1. The AR sequence ending in
//! M_t has middle term M_{t-1} (+) M_{t-a}, so every vertex t receives one
//! arrow from t-1 (multiplication by x) and one from t-a (multiplication by
//! y), indices mod n. The dual resolution graph from [`crate::hj`] is
//! exported alongside as an undirected chain.

use crate::classify::tau;
use crate::hj::{DualGraph, GroupParams};

/// Which multiplication a quiver arrow realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArrowLabel {
    X,
    Y,
}

impl ArrowLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            ArrowLabel::X => "x",
            ArrowLabel::Y => "y",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub source: i64,
    pub target: i64,
    pub label: ArrowLabel,
}

/// The AR quiver of 1/n(1,a): n vertices, 2n labelled arrows, every vertex
/// with in-degree and out-degree two. Parallel x- and y-arrows (a = 1 or
/// a = n-1) are kept as distinct arrows since they realize distinct
/// morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverGraph {
    order: i64,
    arrows: Vec<Arrow>,
}

impl QuiverGraph {
    pub fn vertex_count(&self) -> i64 {
        self.order
    }

    /// Arrows in construction order: for each target t ascending, the
    /// x-arrow, then the y-arrow.
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn in_degree(&self, t: i64) -> usize {
        self.arrows.iter().filter(|arc| arc.target == t).count()
    }

    pub fn out_degree(&self, t: i64) -> usize {
        self.arrows.iter().filter(|arc| arc.source == t).count()
    }
}

/// Build the AR quiver from the arrow rule t-1 -> t (x) and t-a -> t (y).
pub fn build_ar_quiver(g: &GroupParams) -> QuiverGraph {
    let n = g.n();
    let a = g.a();
    let mut arrows = Vec::with_capacity(2 * n as usize);
    for t in 0..n {
        arrows.push(Arrow {
            source: (t - 1).rem_euclid(n),
            target: t,
            label: ArrowLabel::X,
        });
        arrows.push(Arrow {
            source: (t - a).rem_euclid(n),
            target: t,
            label: ArrowLabel::Y,
        });
    }
    QuiverGraph { order: n, arrows }
}

/// The AR sequence ending in M_t: left term tau(M_t), middle term
/// M_{t-1} (+) M_{t-a}. For t = 0 this is the four-term fundamental
/// sequence; the extra residue-field term is recorded only through the
/// `fundamental` flag because the quiver's vertices are MCM modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArSequence {
    pub target: i64,
    pub left: i64,
    /// (x-side, y-side) = (t-1 mod n, t-a mod n).
    pub middle: (i64, i64),
    pub fundamental: bool,
}

pub fn ar_sequence(g: &GroupParams, t: i64) -> ArSequence {
    let n = g.n();
    assert!((0..n).contains(&t), "module index {t} outside [0, {n})");
    ArSequence {
        target: t,
        left: tau(g, t),
        middle: ((t - 1).rem_euclid(n), (t - g.a()).rem_euclid(n)),
        fundamental: t == 0,
    }
}

/// Render the AR quiver in DOT. Vertices are named M0..M{n-1}; each arrow
/// carries its label as an edge attribute. Output is byte-stable for a
/// given quiver.
pub fn quiver_to_dot(q: &QuiverGraph) -> String {
    let mut out = String::from("digraph ar_quiver {\n");
    for t in 0..q.vertex_count() {
        out.push_str(&format!("    M{t};\n"));
    }
    for arc in q.arrows() {
        out.push_str(&format!(
            "    M{} -> M{} [label=\"{}\"];\n",
            arc.source,
            arc.target,
            arc.label.as_str()
        ));
    }
    out.push_str("}\n");
    out
}

/// Render the dual resolution graph in DOT as an undirected chain. Vertices
/// are named E{i_u} and labelled with their self-intersection numbers.
pub fn dual_graph_to_dot(d: &DualGraph) -> String {
    let mut out = String::from("graph dual_graph {\n");
    for v in d.vertices() {
        out.push_str(&format!("    E{} [label=\"{}\"];\n", v.label, v.self_intersection));
    }
    for (u, w) in d.edges() {
        out.push_str(&format!(
            "    E{} -- E{};\n",
            d.vertices()[u - 1].label,
            d.vertices()[w - 1].label
        ));
    }
    out.push_str("}\n");
    out
}
