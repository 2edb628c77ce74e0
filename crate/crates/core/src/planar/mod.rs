//! Colored dominating-set reduction of the local complete graph, and the
//! hypergraph kernels read back from it.
//!
//! Vertex cover on a 3-uniform hypergraph `H` is dominating set on its local
//! complete graph `G^K_H`. The reduction colors vertices white (barred from
//! the dominating set but still to be dominated), deletes vertices whose
//! domination is taken over by a neighbour, and attaches white gadget
//! vertices that force their neighbours into the solution. The surviving
//! black V1 vertices, together with the edge and gadget vertices, describe a
//! smaller hypergraph.

mod kernel;
mod matching;
mod rules;
mod trace;

pub use kernel::{kernelize_planar_vc, kernelize_planar_vc_detailed, reconstruct_hypergraph, PlanarKernel, Reconstruction};
pub use matching::{is_to_induced_matching, MatchingError, MatchingTransform};
pub use rules::{
    apply_rule1, apply_rule2, apply_rule3, reduce_fixpoint, reduce_fixpoint_with, PairRule, ReductionRule,
    SingleRule, WhiteningRule, STANDARD_RULES,
};
pub use trace::{Gadget, ReplayError, ReductionTrace, RuleApplication, TraceParseError};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::{local_complete_graph, Side, SimpleGraph};
use crate::hypergraph::{Hypergraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: SimpleGraph,
    pub color: BTreeMap<Vertex, Color>,
    pub side: BTreeMap<Vertex, Side>,
    /// Gadget → position in the trace of the application that created it.
    pub origin: BTreeMap<Vertex, usize>,
    next_id: Vertex,
    applied: usize,
}

impl ColoredGraph {
    pub fn is_black(&self, v: Vertex) -> bool {
        self.color.get(&v) == Some(&Color::Black)
    }

    pub fn black(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.color.iter().filter(|(_, &c)| c == Color::Black).map(|(&v, _)| v)
    }

    pub fn with_side(&self, side: Side) -> impl Iterator<Item = Vertex> + '_ {
        self.side.iter().filter(move |(_, &s)| s == side).map(|(&v, _)| v)
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Identifier the next gadget will receive.
    pub fn next_id(&self) -> Vertex {
        self.next_id
    }

    /// Number of rule applications this graph has gone through.
    pub fn applied(&self) -> usize {
        self.applied
    }

    fn remove(&mut self, v: Vertex) {
        self.graph.remove_vertex(v);
        self.color.remove(&v);
        self.side.remove(&v);
        self.origin.remove(&v);
    }

    fn add_gadget(&mut self, id: Vertex, neighbors: &[Vertex]) {
        self.graph.add_vertex(id);
        for &u in neighbors {
            self.graph.add_edge(id, u);
        }
        self.color.insert(id, Color::White);
        self.side.insert(id, Side::Gadget);
        self.origin.insert(id, self.applied);
        self.next_id = self.next_id.max(id + 1);
    }
}

/// All-black local complete graph of `h`.
///
/// Expects a simple 3-uniform hypergraph without isolated vertices; other
/// inputs still produce a graph, but the reduction is not meaningful for them.
pub fn init_colored(h: &Hypergraph) -> ColoredGraph {
    let lc = local_complete_graph(h);
    let color = lc.graph.vertices().map(|v| (v, Color::Black)).collect();
    ColoredGraph {
        graph: lc.graph,
        color,
        side: lc.tags.side,
        origin: BTreeMap::new(),
        next_id: h.universe() + h.m(),
        applied: 0,
    }
}
