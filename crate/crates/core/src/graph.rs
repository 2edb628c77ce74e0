//! Simple graphs derived from hypergraphs, and the neighbourhood partitions
//! used by the dominating-set reduction rules.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::hypergraph::{Hypergraph, Vertex};

/// Undirected graph without loops or parallel edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl SimpleGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        SimpleGraph { adj: vertices.into_iter().map(|v| (v, BTreeSet::new())).collect() }
    }

    pub fn from_edges(edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut g = SimpleGraph::new();
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    /// Adds `{u, v}`, creating missing endpoints. Returns false if present.
    ///
    /// Panics on `u == v`.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        assert_ne!(u, v, "simple graphs have no self-loops");
        self.adj.entry(v).or_default().insert(u);
        self.adj.entry(u).or_default().insert(v)
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        let a = self.adj.get_mut(&u).is_some_and(|s| s.remove(&v));
        let b = self.adj.get_mut(&v).is_some_and(|s| s.remove(&u));
        a && b
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> bool {
        match self.adj.remove(&v) {
            Some(nbrs) => {
                for u in nbrs {
                    if let Some(s) = self.adj.get_mut(&u) {
                        s.remove(&v);
                    }
                }
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// Open neighbourhood. Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[&v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn closed_neighbors(&self, v: Vertex) -> BTreeSet<Vertex> {
        let mut s = self.neighbors(v).clone();
        s.insert(v);
        s
    }

    /// Number of connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for v in self.vertices() {
            if seen.insert(v) {
                count += 1;
                let mut stack = vec![v];
                while let Some(u) = stack.pop() {
                    for &w in self.neighbors(u) {
                        if seen.insert(w) {
                            stack.push(w);
                        }
                    }
                }
            }
        }
        count
    }
}

/// Which part of a derived graph a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    /// An original hypergraph vertex.
    V1,
    /// A vertex standing for a hyperedge.
    V2,
    /// A white vertex introduced by a reduction rule.
    Gadget,
}

/// Side bookkeeping shared by the two derived graphs.
///
/// Hyperedge `i` is represented by vertex `universe + i`, so V1 ids coincide
/// with hypergraph ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideTags {
    pub side: BTreeMap<Vertex, Side>,
    /// V2 vertex → index of the originating hyperedge.
    pub edge_of: BTreeMap<Vertex, usize>,
    /// Hyperedge index → V2 vertex.
    pub edge_node: Vec<Vertex>,
}

impl SideTags {
    fn for_hypergraph(h: &Hypergraph) -> Self {
        let mut side: BTreeMap<Vertex, Side> = h.vertices().iter().map(|&v| (v, Side::V1)).collect();
        let mut edge_of = BTreeMap::new();
        let mut edge_node = Vec::with_capacity(h.m());
        for i in 0..h.m() {
            let node = h.universe() + i;
            side.insert(node, Side::V2);
            edge_of.insert(node, i);
            edge_node.push(node);
        }
        SideTags { side, edge_of, edge_node }
    }

    pub fn side(&self, v: Vertex) -> Side {
        self.side[&v]
    }

    pub fn v1(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.side.iter().filter(|(_, &s)| s == Side::V1).map(|(&v, _)| v)
    }

    pub fn v2(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.edge_node.iter().copied()
    }
}

/// The bipartite incidence graph `G_H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteIncidenceGraph {
    pub graph: SimpleGraph,
    pub tags: SideTags,
}

/// The local complete graph `G^K_H`: `G_H` plus a clique on every hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCompleteGraph {
    pub graph: SimpleGraph,
    pub tags: SideTags,
}

pub fn incidence_graph(h: &Hypergraph) -> BipartiteIncidenceGraph {
    let tags = SideTags::for_hypergraph(h);
    let mut graph = SimpleGraph::with_vertices(tags.side.keys().copied());
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e.iter() {
            graph.add_edge(v, tags.edge_node[i]);
        }
    }
    BipartiteIncidenceGraph { graph, tags }
}

pub fn local_complete_graph(h: &Hypergraph) -> LocalCompleteGraph {
    let BipartiteIncidenceGraph { mut graph, tags } = incidence_graph(h);
    for e in h.edges() {
        for (a, &x) in e.iter().enumerate() {
            for &y in &e[a + 1..] {
                graph.add_edge(x, y);
            }
        }
    }
    LocalCompleteGraph { graph, tags }
}

/// Split of `N(centers)` into exit vertices, their guards, and the rest.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Partition3 {
    pub n1: BTreeSet<Vertex>,
    pub n2: BTreeSet<Vertex>,
    pub n3: BTreeSet<Vertex>,
}

impl Partition3 {
    pub fn neighborhood(&self) -> BTreeSet<Vertex> {
        self.n1.iter().chain(&self.n2).chain(&self.n3).copied().collect()
    }

    /// `N2 ∪ N3`.
    pub fn inner(&self) -> BTreeSet<Vertex> {
        self.n2.union(&self.n3).copied().collect()
    }
}

/// Partitions the open neighbourhood of one vertex or of a pair.
///
/// For a pair, `N(v,w) = (N(v) ∪ N(w)) \ {v,w}` and
/// `N[v,w] = N(v) ∪ N(w) ∪ {v,w}`.
///
/// Panics unless `centers` holds one or two distinct vertices of `g`.
pub fn neighborhood_partition(g: &SimpleGraph, centers: &[Vertex]) -> Partition3 {
    assert!(matches!(centers.len(), 1 | 2), "one or two centers");
    assert!(centers.len() == 1 || centers[0] != centers[1], "centers must be distinct");
    let mut open: BTreeSet<Vertex> = BTreeSet::new();
    for &c in centers {
        open.extend(g.neighbors(c).iter().copied());
    }
    for c in centers {
        open.remove(c);
    }
    let mut closed = open.clone();
    closed.extend(centers.iter().copied());

    let n1: BTreeSet<Vertex> = open
        .iter()
        .copied()
        .filter(|&u| g.neighbors(u).iter().any(|x| !closed.contains(x)))
        .collect();
    let n2: BTreeSet<Vertex> = open
        .iter()
        .copied()
        .filter(|u| !n1.contains(u))
        .filter(|&u| g.neighbors(u).iter().any(|x| n1.contains(x)))
        .collect();
    let n3 = open.iter().copied().filter(|u| !n1.contains(u) && !n2.contains(u)).collect();
    Partition3 { n1, n2, n3 }
}
