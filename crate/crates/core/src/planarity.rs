//! Certifying planarity test.
//!
//! Planar graphs come back with a rotation system whose face count satisfies
//! Euler's formula; non-planar graphs come back with a subgraph that is a
//! subdivision of K5 or K3,3. Both certificates can be checked against the
//! input without trusting the search.
//!
//! Embedding uses the path-addition method of Demoucron, Malgrange and
//! Pertuiset on each biconnected block. The Kuratowski subgraph is obtained by
//! deleting every edge whose removal keeps the graph non-planar.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::hypergraph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn verify(&self, g: &SimpleGraph) -> Result<(), CertificateError> {
        match self {
            Planarity::Planar(e) => e.verify(g),
            Planarity::NonPlanar(w) => w.verify(g),
        }
    }
}

/// Combinatorial embedding: the cyclic order of neighbours around each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub rotation: BTreeMap<Vertex, Vec<Vertex>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// Vertices of degree at least three in the subdivision.
    pub branch: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("rotation system does not cover vertex {0}")]
    MissingVertex(Vertex),
    #[error("rotation at {0} is not a permutation of its neighbours")]
    BadRotation(Vertex),
    #[error("Euler check failed: V={vertices} E={edges} F={faces} components={components}")]
    Euler { vertices: usize, edges: usize, faces: usize, components: usize },
    #[error("witness edge {0:?} is not an edge of the graph")]
    ForeignEdge((Vertex, Vertex)),
    #[error("witness is not a subdivision of {0:?}")]
    NotSubdivision(KuratowskiKind),
}

pub fn planarity(g: &SimpleGraph) -> Planarity {
    match embed(g) {
        Some(rotation) => Planarity::Planar(Embedding { rotation }),
        None => Planarity::NonPlanar(kuratowski_subgraph(g)),
    }
}

pub fn is_planar(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    embed(g).is_some()
}

impl Embedding {
    /// Face boundary walks. A dart `u → v` is followed by `v → w` where `w`
    /// succeeds `u` in the rotation at `v`.
    pub fn faces(&self) -> Vec<Vec<Vertex>> {
        let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
        let mut faces = Vec::new();
        for (&u, rot) in &self.rotation {
            for &v in rot {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                while seen.insert((a, b)) {
                    face.push(a);
                    let rb = &self.rotation[&b];
                    let pos = rb.iter().position(|&x| x == a).expect("dart in rotation");
                    let next = rb[(pos + 1) % rb.len()];
                    a = b;
                    b = next;
                }
                faces.push(face);
            }
        }
        faces
    }

    pub fn verify(&self, g: &SimpleGraph) -> Result<(), CertificateError> {
        for v in g.vertices() {
            let rot = self.rotation.get(&v).ok_or(CertificateError::MissingVertex(v))?;
            let as_set: BTreeSet<Vertex> = rot.iter().copied().collect();
            if as_set.len() != rot.len() || &as_set != g.neighbors(v) {
                return Err(CertificateError::BadRotation(v));
            }
        }
        if let Some(&extra) = self.rotation.keys().find(|&&v| !g.contains(v)) {
            return Err(CertificateError::BadRotation(extra));
        }
        let vertices = g.vertices().filter(|&v| g.degree(v) > 0).count();
        let isolated = g.vertex_count() - vertices;
        let components = g.component_count() - isolated;
        let edges = g.edge_count();
        let faces = self.faces().len();
        if vertices + faces != edges + 2 * components {
            return Err(CertificateError::Euler { vertices, edges, faces, components });
        }
        Ok(())
    }
}

impl KuratowskiWitness {
    pub fn verify(&self, g: &SimpleGraph) -> Result<(), CertificateError> {
        let bad = || CertificateError::NotSubdivision(self.kind);
        let mut w = SimpleGraph::new();
        for &(u, v) in &self.edges {
            if u == v || !g.has_edge(u, v) {
                return Err(CertificateError::ForeignEdge((u, v)));
            }
            if !w.add_edge(u, v) {
                return Err(bad());
            }
        }
        let (count, deg) = match self.kind {
            KuratowskiKind::K5 => (5, 4),
            KuratowskiKind::K33 => (6, 3),
        };
        let branch: BTreeSet<Vertex> = self.branch.iter().copied().collect();
        if branch.len() != count || self.branch.len() != count {
            return Err(bad());
        }
        for v in w.vertices() {
            let expected = if branch.contains(&v) { deg } else { 2 };
            if w.degree(v) != expected {
                return Err(bad());
            }
        }
        if !branch.iter().all(|&b| w.contains(b)) {
            return Err(bad());
        }
        // Walk every subdivided path between branch vertices.
        let mut links: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
        let mut interior: BTreeSet<Vertex> = BTreeSet::new();
        for &b in &branch {
            for &first in w.neighbors(b) {
                let (mut prev, mut cur) = (b, first);
                while !branch.contains(&cur) {
                    interior.insert(cur);
                    let next = *w.neighbors(cur).iter().find(|&&x| x != prev).ok_or_else(bad)?;
                    prev = cur;
                    cur = next;
                }
                if cur == b {
                    return Err(bad());
                }
                *links.entry((b.min(cur), b.max(cur))).or_insert(0) += 1;
            }
        }
        // Degree-2 vertices outside these paths would form a stray cycle.
        if interior.len() + branch.len() != w.vertex_count() {
            return Err(bad());
        }
        // Each path is walked once from each end.
        if links.values().any(|&c| c != 2) {
            return Err(bad());
        }
        let pairs: BTreeSet<(Vertex, Vertex)> = links.into_keys().collect();
        let b: Vec<Vertex> = branch.iter().copied().collect();
        let ok = match self.kind {
            KuratowskiKind::K5 => pairs.len() == 10,
            KuratowskiKind::K33 => {
                let side_a: Vec<Vertex> = std::iter::once(b[0])
                    .chain(b[1..].iter().copied().filter(|&x| !pairs.contains(&(b[0].min(x), b[0].max(x)))))
                    .collect();
                let side_b: Vec<Vertex> = b.iter().copied().filter(|x| !side_a.contains(x)).collect();
                pairs.len() == 9
                    && side_a.len() == 3
                    && side_a.iter().all(|&x| side_b.iter().all(|&y| pairs.contains(&(x.min(y), x.max(y)))))
            }
        };
        if ok {
            Ok(())
        } else {
            Err(bad())
        }
    }
}

/// Rotation system of a planar graph, or `None` when the graph is non-planar.
fn embed(g: &SimpleGraph) -> Option<BTreeMap<Vertex, Vec<Vertex>>> {
    let ids: Vec<Vertex> = g.vertices().collect();
    let index: HashMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = ids.len();
    let adj: Vec<Vec<usize>> =
        ids.iter().map(|&v| g.neighbors(v).iter().map(|u| index[u]).collect()).collect();

    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(&adj) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let faces = embed_block(n, &block)?;
        let mut succ: HashMap<(usize, usize), usize> = HashMap::new();
        for face in &faces {
            let k = face.len();
            for t in 0..k {
                succ.insert((face[(t + 1) % k], face[t]), face[(t + 2) % k]);
            }
        }
        let mut block_adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for &(u, v) in &block {
            block_adj.entry(u).or_default().insert(v);
            block_adj.entry(v).or_default().insert(u);
        }
        for (&v, nbrs) in &block_adj {
            let start = *nbrs.iter().next().expect("block vertex has neighbours");
            let mut cur = start;
            let mut cyc = Vec::with_capacity(nbrs.len());
            loop {
                cyc.push(cur);
                cur = succ[&(v, cur)];
                if cur == start {
                    break;
                }
            }
            debug_assert_eq!(cyc.len(), nbrs.len(), "rotation must be a single cycle");
            rotation[v].extend(cyc);
        }
    }
    Some(
        rotation
            .into_iter()
            .enumerate()
            .map(|(i, rot)| (ids[i], rot.into_iter().map(|j| ids[j]).collect()))
            .collect(),
    )
}

/// Edge sets of the biconnected blocks.
fn biconnected_blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }

    fn dfs(s: &mut State<'_>, u: usize, parent: usize) {
        s.disc[u] = s.time;
        s.low[u] = s.time;
        s.time += 1;
        for idx in 0..s.adj[u].len() {
            let v = s.adj[u][idx];
            if s.disc[v] == usize::MAX {
                s.stack.push((u, v));
                dfs(s, v, u);
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if v != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }

    let n = adj.len();
    let mut s = State {
        adj,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == usize::MAX {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.blocks
}

enum Fragment {
    Chord(usize, usize),
    Component { vertices: Vec<usize> },
}

/// Path-addition embedding of one biconnected block with at least two edges.
/// Returns consistently oriented face cycles.
fn embed_block(n: usize, block: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in block {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    let norm = |u: usize, v: usize| (u.min(v), u.max(v));
    let block_vertices: Vec<usize> = (0..n).filter(|&v| !adj[v].is_empty()).collect();

    let cycle = find_cycle(&adj, block[0].0);
    let mut in_h = vec![false; n];
    let mut h_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        h_edges.insert(norm(v, cycle[(i + 1) % cycle.len()]));
    }
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect::<Vec<_>>()];

    while h_edges.len() < block.len() {
        let mut fragments: Vec<(Fragment, BTreeSet<usize>)> = Vec::new();
        for &(u, v) in block {
            if in_h[u] && in_h[v] && !h_edges.contains(&norm(u, v)) {
                fragments.push((Fragment::Chord(u, v), [u, v].into_iter().collect()));
            }
        }
        let mut seen = vec![false; n];
        for &s in &block_vertices {
            if in_h[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            let mut attach = BTreeSet::new();
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in &adj[x] {
                    if in_h[y] {
                        attach.insert(y);
                    } else if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            fragments.push((Fragment::Component { vertices: comp }, attach));
        }

        let mut choice: Option<(usize, usize)> = None;
        for (fi, (_, attach)) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| attach.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("a fragment remains while edges are unembedded");
        let path = match &fragments[fi] {
            (Fragment::Chord(u, v), _) => vec![*u, *v],
            (Fragment::Component { vertices }, attach) => component_path(&adj, &in_h, vertices, attach),
        };

        for w in path.windows(2) {
            h_edges.insert(norm(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    Some(faces)
}

fn find_cycle(adj: &[Vec<usize>], root: usize) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![root];
    depth[root] = 0;
    // iterative DFS, returning at the first back edge
    let mut next_idx = vec![0usize; n];
    while let Some(&u) = stack.last() {
        if next_idx[u] < adj[u].len() {
            let v = adj[u][next_idx[u]];
            next_idx[u] += 1;
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                stack.push(v);
            } else if v != parent[u] && depth[v] < depth[u] {
                let mut cyc = vec![u];
                let mut x = u;
                while x != v {
                    x = parent[x];
                    cyc.push(x);
                }
                return cyc;
            }
        } else {
            stack.pop();
        }
    }
    unreachable!("a biconnected block with two or more edges contains a cycle")
}

/// Path from one attachment through the component to a different attachment.
fn component_path(adj: &[Vec<usize>], in_h: &[bool], comp: &[usize], attach: &BTreeSet<usize>) -> Vec<usize> {
    let start = *attach.iter().next().expect("component has attachments");
    let in_comp: BTreeSet<usize> = comp.iter().copied().collect();
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &c in &adj[start] {
        if in_comp.contains(&c) && !prev.contains_key(&c) {
            prev.insert(c, start);
            queue.push_back(c);
        }
    }
    while let Some(x) = queue.pop_front() {
        if let Some(&end) = adj[x].iter().find(|&&y| in_h[y] && y != start) {
            let mut path = vec![end, x];
            let mut cur = x;
            while let Some(&p) = prev.get(&cur) {
                path.push(p);
                if p == start {
                    break;
                }
                cur = p;
            }
            path.reverse();
            return path;
        }
        for &y in &adj[x] {
            if in_comp.contains(&y) && !prev.contains_key(&y) {
                prev.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("components of a biconnected block have two attachments")
}

/// Splits an oriented face along a path joining two of its vertices.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];

    let mut f1 = Vec::new();
    let mut t = i;
    loop {
        f1.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % k;
    }
    f1.extend(inner.iter().rev());

    let mut f2 = Vec::new();
    let mut t = j;
    loop {
        f2.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % k;
    }
    f2.extend(inner.iter());
    (f1, f2)
}

fn kuratowski_subgraph(g: &SimpleGraph) -> KuratowskiWitness {
    let mut h = g.clone();
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    for (u, v) in edges {
        h.remove_edge(u, v);
        if is_planar(&h) {
            h.add_edge(u, v);
        }
    }
    let edges: Vec<(Vertex, Vertex)> = h.edges().collect();
    let branch: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch.len() == 5 { KuratowskiKind::K5 } else { KuratowskiKind::K33 };
    KuratowskiWitness { kind, branch, edges }
}
