//! Hypergraphs with edges of cardinality one to three, parameterized
//! instances, and the elementary simplifications shared by every kernel.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex identifier. Freshly built hypergraphs use `0..n`; reductions may
/// leave a sparse subset of the original range.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("vertex {vertex} is outside 0..{universe}")]
    VertexOutOfRange { vertex: Vertex, universe: usize },
    #[error("edge {edge} has cardinality {size}; expected 1, 2 or 3")]
    BadCardinality { edge: usize, size: usize },
    #[error("edge {edge} lists a vertex more than once")]
    RepeatedVertex { edge: usize },
    #[error("edge {edge} uses vertex {vertex} which is not in the vertex set")]
    UnknownVertex { edge: usize, vertex: Vertex },
    #[error("edges {first} and {second} are identical")]
    DuplicateEdge { first: usize, second: usize },
    #[error("parameter k = {k} exceeds the number of vertices {n}")]
    ParameterTooLarge { k: usize, n: usize },
    #[error("{forced} vertices are forced by unit edges but k = {k}")]
    ParameterExhausted { forced: usize, k: usize },
    #[error("operation requires a {expected} instance")]
    WrongProblem { expected: Problem },
}

/// A hyperedge, stored with its vertices sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(Vec<Vertex>);

impl Edge {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        Edge(v)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.len() == 1
    }

    /// Strict subset test on sorted vertex lists.
    pub fn is_proper_subset_of(&self, other: &Edge) -> bool {
        self.0.len() < other.0.len() && self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }
}

impl Deref for Edge {
    type Target = [Vertex];

    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Hypergraph over a vertex set drawn from `0..universe`.
///
/// Values built through [`Hypergraph::new`] or [`Hypergraph::from_parts`] are
/// simple, have edges of cardinality 1..=3 over known vertices, and keep
/// edges in sorted order. [`Hypergraph::unvalidated`] skips those checks so
/// that [`Hypergraph::validate`] can diagnose malformed input.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    universe: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub uniform: bool,
    pub simple: bool,
    pub duplicate_edges: Vec<(usize, usize)>,
    pub bad_cardinality: Vec<usize>,
    pub repeated_vertex: Vec<usize>,
    pub unknown_vertices: Vec<Vertex>,
    pub isolated: Vec<Vertex>,
    pub max_degree: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.simple
            && self.bad_cardinality.is_empty()
            && self.repeated_vertex.is_empty()
            && self.unknown_vertices.is_empty()
    }
}

/// Domination relations between vertices and between edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Domination {
    /// Ordered pairs `(w, v)`, `w != v`, with `E(w) ⊆ E(v)`.
    pub vertices: Vec<(Vertex, Vertex)>,
    /// Ordered pairs `(i, j)` of edge indices with `edges[j] ⊂ edges[i]`.
    pub edges: Vec<(usize, usize)>,
}

impl Hypergraph {
    /// Hypergraph on vertices `0..n`.
    pub fn new<E, I>(n: usize, edges: E) -> Result<Self, HypergraphError>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        Self::from_parts(n, 0..n, edges)
    }

    pub fn from_parts<E, I>(
        universe: usize,
        vertices: impl IntoIterator<Item = Vertex>,
        edges: E,
    ) -> Result<Self, HypergraphError>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        if let Some(&v) = vertices.iter().find(|&&v| v >= universe) {
            return Err(HypergraphError::VertexOutOfRange { vertex: v, universe });
        }
        let raw: Vec<Edge> = edges.into_iter().map(Edge::new).collect();
        for (i, e) in raw.iter().enumerate() {
            if let Some(&v) = e.iter().find(|&&v| v >= universe) {
                return Err(HypergraphError::VertexOutOfRange { vertex: v, universe });
            }
            if e.is_empty() || e.len() > 3 {
                return Err(HypergraphError::BadCardinality { edge: i, size: e.len() });
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertex { edge: i });
            }
            if let Some(&v) = e.iter().find(|v| !vertices.contains(v)) {
                return Err(HypergraphError::UnknownVertex { edge: i, vertex: v });
            }
        }
        let mut seen: BTreeMap<&Edge, usize> = BTreeMap::new();
        for (i, e) in raw.iter().enumerate() {
            if let Some(&first) = seen.get(e) {
                return Err(HypergraphError::DuplicateEdge { first, second: i });
            }
            seen.insert(e, i);
        }
        let mut edges = raw;
        edges.sort();
        Ok(Hypergraph { universe, vertices: vertices.into_iter().collect(), edges })
    }

    /// Builds without checking any invariant. Edge order is preserved.
    pub fn unvalidated<E, I>(universe: usize, vertices: impl IntoIterator<Item = Vertex>, edges: E) -> Self
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        Hypergraph {
            universe,
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().map(Edge::new).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// True when every vertex id in `0..universe` is present.
    pub fn is_dense(&self) -> bool {
        self.vertices.len() == self.universe
    }

    pub fn is_uniform(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 3)
    }

    /// Indices of the edges containing `v`, i.e. the incidence set `E(v)`.
    pub fn incidence(&self, v: Vertex) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.contains(&v))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    fn degree_map(&self) -> BTreeMap<Vertex, usize> {
        let mut deg: BTreeMap<Vertex, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for e in &self.edges {
            for v in e.iter() {
                *deg.entry(*v).or_insert(0) += 1;
            }
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degree_map().into_values().max().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        self.degree_map()
            .into_iter()
            .filter(|&(v, d)| d == 0 && self.contains_vertex(v))
            .map(|(v, _)| v)
            .collect()
    }

    /// Diagnoses every violated invariant without failing.
    pub fn validate(&self) -> ValidationReport {
        let mut duplicate_edges = Vec::new();
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                if self.edges[i] == self.edges[j] {
                    duplicate_edges.push((i, j));
                }
            }
        }
        let bad_cardinality = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_empty() || e.len() > 3)
            .map(|(i, _)| i)
            .collect();
        let repeated_vertex = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.windows(2).any(|w| w[0] == w[1]))
            .map(|(i, _)| i)
            .collect();
        let unknown: BTreeSet<Vertex> = self
            .edges
            .iter()
            .flat_map(|e| e.iter().copied())
            .filter(|v| !self.contains_vertex(*v))
            .collect();
        ValidationReport {
            uniform: self.is_uniform(),
            simple: duplicate_edges.is_empty(),
            duplicate_edges,
            bad_cardinality,
            repeated_vertex,
            unknown_vertices: unknown.into_iter().collect(),
            isolated: self.isolated_vertices(),
            max_degree: self.max_degree(),
        }
    }

    /// Drops every vertex of degree zero. The edge set is unchanged.
    pub fn strip_isolated(&self) -> (Hypergraph, Vec<Vertex>) {
        let removed = self.isolated_vertices();
        let h = Hypergraph {
            universe: self.universe,
            vertices: self.vertices.iter().copied().filter(|v| removed.binary_search(v).is_err()).collect(),
            edges: self.edges.clone(),
        };
        (h, removed)
    }

    /// Removes the given vertices together with every edge touching them.
    pub fn delete_vertices(&self, gone: &BTreeSet<Vertex>) -> Hypergraph {
        Hypergraph {
            universe: self.universe,
            vertices: self.vertices.iter().copied().filter(|v| !gone.contains(v)).collect(),
            edges: self.edges.iter().filter(|e| !e.iter().any(|v| gone.contains(v))).cloned().collect(),
        }
    }

    /// Every vertex domination `E(w) ⊆ E(v)` and edge domination `B_j ⊂ B_i`.
    pub fn find_dominated(&self) -> Domination {
        let inc: Vec<(Vertex, BTreeSet<usize>)> =
            self.vertices.iter().map(|&v| (v, self.incidence(v).into_iter().collect())).collect();
        let mut vertices = Vec::new();
        for (w, ew) in &inc {
            for (v, ev) in &inc {
                if w != v && ew.is_subset(ev) {
                    vertices.push((*w, *v));
                }
            }
        }
        let mut edges = Vec::new();
        for (i, bi) in self.edges.iter().enumerate() {
            for (j, bj) in self.edges.iter().enumerate() {
                if bj.is_proper_subset_of(bi) {
                    edges.push((i, j));
                }
            }
        }
        Domination { vertices, edges }
    }

    /// Relabels vertices to `0..n` in order. Returns the map new → old.
    pub fn compact(&self) -> (Hypergraph, Vec<Vertex>) {
        let index: BTreeMap<Vertex, Vertex> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges: Vec<Edge> =
            self.edges.iter().map(|e| Edge::new(e.iter().map(|v| index[v]))).collect();
        edges.sort();
        let h = Hypergraph { universe: self.vertices.len(), vertices: (0..self.vertices.len()).collect(), edges };
        (h, self.vertices.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Problem {
    #[serde(rename = "vertex-cover")]
    VertexCover,
    #[serde(rename = "independent-set")]
    IndependentSet,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::VertexCover => "vertex-cover",
            Problem::IndependentSet => "independent-set",
        })
    }
}

/// A hypergraph with a parameter and the question being asked about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub hypergraph: Hypergraph,
    pub k: usize,
    pub problem: Problem,
}

impl Instance {
    pub fn new(hypergraph: Hypergraph, k: usize, problem: Problem) -> Result<Self, HypergraphError> {
        if k > hypergraph.n() {
            return Err(HypergraphError::ParameterTooLarge { k, n: hypergraph.n() });
        }
        Ok(Instance { hypergraph, k, problem })
    }

    /// Like [`Instance::new`] but lowers `k` to `n` instead of failing.
    ///
    /// A vertex cover never needs more than `n` vertices, so clamping keeps the
    /// answer of vertex cover instances whose edges are all nonempty.
    pub(crate) fn clamped(hypergraph: Hypergraph, k: usize, problem: Problem) -> Self {
        let k = k.min(hypergraph.n());
        Instance { hypergraph, k, problem }
    }

    pub fn vertex_cover(hypergraph: Hypergraph, k: usize) -> Result<Self, HypergraphError> {
        Self::new(hypergraph, k, Problem::VertexCover)
    }

    pub fn independent_set(hypergraph: Hypergraph, k: usize) -> Result<Self, HypergraphError> {
        Self::new(hypergraph, k, Problem::IndependentSet)
    }
}

/// Puts the vertex of every unit edge into the cover.
///
/// Each forced vertex is deleted together with its edges and `k` drops by one.
/// Deleting vertices never creates new unit edges, so one sweep reaches the
/// fixpoint.
pub fn resolve_unit_edges(inst: &Instance) -> Result<(Instance, Vec<Vertex>), HypergraphError> {
    if inst.problem != Problem::VertexCover {
        return Err(HypergraphError::WrongProblem { expected: Problem::VertexCover });
    }
    let forced: BTreeSet<Vertex> =
        inst.hypergraph.edges().iter().filter(|e| e.is_unit()).map(|e| e[0]).collect();
    if forced.len() > inst.k {
        return Err(HypergraphError::ParameterExhausted { forced: forced.len(), k: inst.k });
    }
    let h = inst.hypergraph.delete_vertices(&forced);
    let out = Instance { hypergraph: h, k: inst.k - forced.len(), problem: inst.problem };
    Ok((out, forced.into_iter().collect()))
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn fano() -> Hypergraph {
        let lines = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]];
        Hypergraph::new(7, lines.iter().map(|l| l.iter().map(|v| v - 1))).unwrap()
    }

    pub fn single() -> Hypergraph {
        Hypergraph::new(3, [[0, 1, 2]]).unwrap()
    }

    pub fn two_disjoint() -> Hypergraph {
        Hypergraph::new(6, [[0, 1, 2], [3, 4, 5]]).unwrap()
    }
}
