//! Seeded instance generators.
//!
//! Every generator draws from a `ChaCha8Rng` seeded with the given seed, so
//! the output depends only on the arguments.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::incidence_graph;
use crate::hypergraph::{Hypergraph, Vertex};
use crate::planarity::is_planar;

const ROUNDS: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("no instance found after {0} rejection rounds")]
    GenerationFailed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// Every vertex has degree exactly `r`.
    Regular { n: usize, r: usize },
    /// `m` edges, maximum degree at most `d`.
    BoundedDegree { n: usize, d: usize, m: usize },
    /// Faces of a random plane triangulation on `n` points.
    Planar { n: usize },
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Regular { .. } => "regular",
            Family::BoundedDegree { .. } => "bounded-degree",
            Family::Planar { .. } => "planar",
        }
    }
}

pub fn generate(family: Family, seed: u64) -> Result<Hypergraph, GenerateError> {
    match family {
        Family::Regular { n, r } => regular(n, r, seed),
        Family::BoundedDegree { n, d, m } => bounded_degree(n, d, m, seed),
        Family::Planar { n } => planar(n, seed),
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(n: usize, edges: &BTreeSet<[Vertex; 3]>) -> Hypergraph {
    Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).expect("generated edges are valid")
}

fn triple(a: Vertex, b: Vertex, c: Vertex) -> Option<[Vertex; 3]> {
    let mut t = [a, b, c];
    t.sort_unstable();
    (t[0] != t[1] && t[1] != t[2]).then_some(t)
}

/// `r`-regular 3-uniform hypergraph by the configuration model: `r` copies
/// of every vertex are shuffled and cut into triples, rejecting shuffles that
/// repeat a vertex inside a triple or repeat a triple.
pub fn regular(n: usize, r: usize, seed: u64) -> Result<Hypergraph, GenerateError> {
    if r == 0 || n < 3 || !(n * r).is_multiple_of(3) {
        return Err(GenerateError::BadParameters(format!("need r ≥ 1, n ≥ 3 and 3 | r·n (n = {n}, r = {r})")));
    }
    let mut rng = rng(seed);
    let mut points: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    'round: for _ in 0..ROUNDS {
        points.shuffle(&mut rng);
        let mut edges = BTreeSet::new();
        for c in points.chunks(3) {
            match triple(c[0], c[1], c[2]) {
                Some(t) if edges.insert(t) => {}
                _ => continue 'round,
            }
        }
        return Ok(build(n, &edges));
    }
    Err(GenerateError::GenerationFailed(ROUNDS))
}

/// `m` distinct random triples over `n` vertices with every degree at most
/// `d`. Vertices are drawn among those with spare degree; a round that gets
/// stuck starts over.
pub fn bounded_degree(n: usize, d: usize, m: usize, seed: u64) -> Result<Hypergraph, GenerateError> {
    if n < 3 && m > 0 || 3 * m > n * d {
        return Err(GenerateError::BadParameters(format!("{m} edges do not fit n = {n}, d = {d}")));
    }
    let mut rng = rng(seed);
    'round: for _ in 0..ROUNDS {
        let mut degree = vec![0usize; n];
        let mut edges = BTreeSet::new();
        let mut misses = 0;
        while edges.len() < m {
            let open: Vec<Vertex> = (0..n).filter(|&v| degree[v] < d).collect();
            if open.len() < 3 || misses > 50 {
                continue 'round;
            }
            let pick: Vec<Vertex> = open.choose_multiple(&mut rng, 3).copied().collect();
            let t = triple(pick[0], pick[1], pick[2]).expect("distinct picks");
            if edges.insert(t) {
                for v in t {
                    degree[v] += 1;
                }
            } else {
                misses += 1;
            }
        }
        return Ok(build(n, &edges));
    }
    Err(GenerateError::GenerationFailed(ROUNDS))
}

/// Random plane triangulation: start from a triangle, insert each further
/// point into a random face, then flip random edges. Each face is kept as a
/// hyperedge with probability 1/2 (at least one is kept), isolated vertices
/// are dropped and the rest relabelled densely. The result is returned only
/// after its incidence graph passes the planarity test.
pub fn planar(n: usize, seed: u64) -> Result<Hypergraph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::BadParameters(format!("planar instances need n ≥ 3, got {n}")));
    }
    let mut rng = rng(seed);
    for _ in 0..ROUNDS {
        let faces = triangulation(n, &mut rng);
        let mut kept: BTreeSet<[Vertex; 3]> = faces.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if kept.is_empty() {
            kept.insert(*faces.choose(&mut rng).unwrap());
        }
        let h = Hypergraph::new(n, kept.iter().map(|f| f.to_vec())).expect("faces are valid edges");
        let (h, _) = h.strip_isolated();
        let (h, _) = h.compact();
        if is_planar(&incidence_graph(&h).graph) {
            return Ok(h);
        }
    }
    Err(GenerateError::GenerationFailed(ROUNDS))
}

/// Faces (as sorted triples) of a random plane triangulation on `n ≥ 3` points.
fn triangulation(n: usize, rng: &mut ChaCha8Rng) -> Vec<[Vertex; 3]> {
    // both sides of the first triangle are faces
    let mut faces: Vec<[Vertex; 3]> = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        faces.extend([[a, b, v], [a, c, v], [b, c, v]].map(|mut f| {
            f.sort_unstable();
            f
        }));
    }
    if n >= 4 {
        for _ in 0..2 * n {
            flip_random_edge(&mut faces, rng);
        }
    }
    faces.sort_unstable();
    faces
}

/// Replaces the diagonal `ab` of the quadrilateral formed by faces `abc` and
/// `abd` with `cd`, unless `cd` is already an edge.
fn flip_random_edge(faces: &mut [[Vertex; 3]], rng: &mut ChaCha8Rng) {
    let mut sides: BTreeMap<(Vertex, Vertex), Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for (x, y) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
            sides.entry((x, y)).or_default().push(i);
        }
    }
    let candidates: Vec<(&(Vertex, Vertex), &Vec<usize>)> = sides.iter().filter(|(_, fs)| fs.len() == 2).collect();
    let Some(&(&(a, b), fs)) = candidates.choose(rng) else { return };
    let apex = |f: &[Vertex; 3]| *f.iter().find(|&&x| x != a && x != b).unwrap();
    let (c, d) = (apex(&faces[fs[0]]), apex(&faces[fs[1]]));
    if c == d || sides.contains_key(&(c.min(d), c.max(d))) {
        return;
    }
    let mut f1 = [a, c, d];
    let mut f2 = [b, c, d];
    f1.sort_unstable();
    f2.sort_unstable();
    faces[fs[0]] = f1;
    faces[fs[1]] = f2;
}

/// Random 3-uniform hypergraph: `m` distinct triples over `n` vertices, then
/// isolated vertices are dropped and the rest relabelled densely.
pub fn random_uniform(n: usize, m: usize, seed: u64) -> Result<Hypergraph, GenerateError> {
    let possible = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
    if m > possible {
        return Err(GenerateError::BadParameters(format!("only {possible} triples on {n} vertices")));
    }
    let mut rng = rng(seed);
    let mut edges = BTreeSet::new();
    while edges.len() < m {
        let pick: Vec<Vertex> = rand::seq::index::sample(&mut rng, n, 3).into_vec();
        edges.insert(triple(pick[0], pick[1], pick[2]).unwrap());
    }
    let (h, _) = build(n, &edges).strip_isolated();
    Ok(h.compact().0)
}
