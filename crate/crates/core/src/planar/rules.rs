use std::collections::BTreeSet;

use super::trace::{Gadget, ReductionTrace, RuleApplication};
use super::ColoredGraph;
use crate::graph::{neighborhood_partition, Side};
use crate::hypergraph::Vertex;
use crate::kernels::KernelError;

/// A reduction rule the fixpoint driver can run.
///
/// `step` performs one round of the rule on `cg`, logs every application in
/// `trace` and reports whether the graph changed.
pub trait ReductionRule {
    fn id(&self) -> u8;

    fn step(&self, cg: &mut ColoredGraph, trace: &mut ReductionTrace) -> bool;
}

/// Whitens black vertices whose closed neighbourhood lies inside that of a
/// black neighbour.
pub struct WhiteningRule;

/// Single-vertex removal with a pendant gadget.
pub struct SingleRule;

/// Vertex-pair removal with gadgets on one or both centers.
pub struct PairRule;

impl ReductionRule for WhiteningRule {
    fn id(&self) -> u8 {
        1
    }

    fn step(&self, cg: &mut ColoredGraph, trace: &mut ReductionTrace) -> bool {
        apply_rule1(cg, trace)
    }
}

impl ReductionRule for SingleRule {
    fn id(&self) -> u8 {
        2
    }

    fn step(&self, cg: &mut ColoredGraph, trace: &mut ReductionTrace) -> bool {
        apply_rule2(cg, trace)
    }
}

impl ReductionRule for PairRule {
    fn id(&self) -> u8 {
        3
    }

    fn step(&self, cg: &mut ColoredGraph, trace: &mut ReductionTrace) -> bool {
        apply_rule3(cg, trace)
    }
}

pub const STANDARD_RULES: [&dyn ReductionRule; 3] = [&WhiteningRule, &SingleRule, &PairRule];

fn record(cg: &mut ColoredGraph, trace: &mut ReductionTrace, app: RuleApplication) {
    cg.commit(&app);
    trace.steps.push(app);
}

fn gadgets(cg: &ColoredGraph, patterns: &[Vec<Vertex>]) -> Vec<Gadget> {
    patterns
        .iter()
        .enumerate()
        .map(|(i, p)| Gadget { id: cg.next_id() + i, neighbors: p.clone() })
        .collect()
}

/// True when the application would delete gadgets only to put back gadgets
/// with the same attachments. Such a step leaves the graph isomorphic to
/// itself and is skipped, otherwise a rule could fire forever on its own
/// output.
fn is_noop(cg: &ColoredGraph, removed: &BTreeSet<Vertex>, patterns: &[Vec<Vertex>]) -> bool {
    if removed.len() != patterns.len() || removed.iter().any(|v| cg.side.get(v) != Some(&Side::Gadget)) {
        return false;
    }
    let mut have: Vec<Vec<Vertex>> =
        removed.iter().map(|&g| cg.graph.neighbors(g).iter().copied().collect()).collect();
    let mut want: Vec<Vec<Vertex>> = patterns.to_vec();
    have.sort();
    want.sort();
    have == want
}

/// One pass in identifier order: for every vertex `v` that is black when its
/// turn comes, each black `x ∈ N2(v) ∪ N3(v)` turns white.
pub fn apply_rule1(cg: &mut ColoredGraph, trace: &mut ReductionTrace) -> bool {
    let order: Vec<Vertex> = cg.graph.vertices().collect();
    let mut changed = false;
    for v in order {
        if !cg.is_black(v) {
            continue;
        }
        let p = neighborhood_partition(&cg.graph, &[v]);
        let recolored: Vec<Vertex> = p.inner().into_iter().filter(|&x| cg.is_black(x)).collect();
        if recolored.is_empty() {
            continue;
        }
        record(cg, trace, RuleApplication { rule: 1, centers: vec![v], removed: vec![], recolored, added: vec![] });
        changed = true;
    }
    changed
}

/// First black `v` with `N3(v) ≠ ∅`: delete `N2(v) ∪ N3(v)` and attach a
/// white pendant to `v`.
pub fn apply_rule2(cg: &mut ColoredGraph, trace: &mut ReductionTrace) -> bool {
    let black: Vec<Vertex> = cg.black().collect();
    for v in black {
        let p = neighborhood_partition(&cg.graph, &[v]);
        if p.n3.is_empty() {
            continue;
        }
        let removed = p.inner();
        let patterns = [vec![v]];
        if is_noop(cg, &removed, &patterns) {
            continue;
        }
        let added = gadgets(cg, &patterns);
        let app = RuleApplication { rule: 2, centers: vec![v], removed: removed.into_iter().collect(), recolored: vec![], added };
        record(cg, trace, app);
        return true;
    }
    false
}

/// First black pair `v < w` whose `N3(v,w)` is nonempty and not dominated by
/// any single vertex of `N2(v,w) ∪ N3(v,w)`.
pub fn apply_rule3(cg: &mut ColoredGraph, trace: &mut ReductionTrace) -> bool {
    let black: Vec<Vertex> = cg.black().collect();
    for (i, &v) in black.iter().enumerate() {
        for &w in &black[i + 1..] {
            if let Some((removed, patterns)) = pair_plan(cg, v, w) {
                if is_noop(cg, &removed, &patterns) {
                    continue;
                }
                let added = gadgets(cg, &patterns);
                let app = RuleApplication {
                    rule: 3,
                    centers: vec![v, w],
                    removed: removed.into_iter().collect(),
                    recolored: vec![],
                    added,
                };
                record(cg, trace, app);
                return true;
            }
        }
    }
    false
}

fn pair_plan(cg: &ColoredGraph, v: Vertex, w: Vertex) -> Option<(BTreeSet<Vertex>, Vec<Vec<Vertex>>)> {
    let g = &cg.graph;
    let p = neighborhood_partition(g, &[v, w]);
    if p.n3.is_empty() {
        return None;
    }
    let inner = p.inner();
    let dominates = |u: Vertex| p.n3.iter().all(|&x| x == u || g.has_edge(u, x));
    if inner.iter().any(|&u| dominates(u)) {
        return None;
    }
    let in_v = p.n3.iter().all(|&x| g.has_edge(v, x));
    let in_w = p.n3.iter().all(|&x| g.has_edge(w, x));
    let mut removed = p.n3.clone();
    let patterns = match (in_v, in_w) {
        (true, true) => {
            removed.extend(p.n2.iter().filter(|&&x| g.has_edge(v, x) && g.has_edge(w, x)));
            vec![vec![v, w], vec![v, w]]
        }
        (true, false) => {
            removed.extend(p.n2.iter().filter(|&&x| g.has_edge(v, x)));
            vec![vec![v]]
        }
        (false, true) => {
            removed.extend(p.n2.iter().filter(|&&x| g.has_edge(w, x)));
            vec![vec![w]]
        }
        (false, false) => {
            removed.extend(p.n2.iter().copied());
            vec![vec![v], vec![w]]
        }
    };
    Some((removed, patterns))
}

/// Runs `rules` in order, round after round, until a full round changes
/// nothing. Fails once the trace grows past `10·|V|²` applications.
pub fn reduce_fixpoint_with(
    cg: ColoredGraph,
    rules: &[&dyn ReductionRule],
) -> Result<(ColoredGraph, ReductionTrace), KernelError> {
    let n = cg.vertex_count();
    let limit = 10 * n * n;
    let mut cg = cg;
    let mut trace = ReductionTrace::default();
    loop {
        let mut changed = false;
        for rule in rules {
            changed |= rule.step(&mut cg, &mut trace);
            if trace.len() > limit {
                return Err(KernelError::IterationCeiling { limit });
            }
        }
        if !changed {
            return Ok((cg, trace));
        }
    }
}

/// Rule 1 pass, then one Rule 2 step, then one Rule 3 step, repeated.
pub fn reduce_fixpoint(cg: ColoredGraph) -> Result<(ColoredGraph, ReductionTrace), KernelError> {
    reduce_fixpoint_with(cg, &STANDARD_RULES)
}

#[cfg(test)]
mod tests {
    use super::super::{init_colored, Color};
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::hypergraph::fixtures::*;
    use std::collections::BTreeMap;

    fn black_graph(g: SimpleGraph) -> ColoredGraph {
        let color = g.vertices().map(|v| (v, Color::Black)).collect();
        let side = g.vertices().map(|v| (v, Side::V1)).collect();
        let next = g.vertices().max().map_or(0, |v| v + 1);
        ColoredGraph { graph: g, color, side, origin: BTreeMap::new(), next_id: next, applied: 0 }
    }

    fn path(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges((1..n).map(|i| (i - 1, i)))
    }

    #[test]
    fn rule1_on_single_edge() {
        let mut cg = init_colored(&single());
        let mut trace = ReductionTrace::default();
        assert!(apply_rule1(&mut cg, &mut trace));
        // vertex 0 goes first and whitens the rest of the clique
        assert_eq!(cg.black().collect::<Vec<_>>(), vec![0]);
        assert!(!cg.is_black(3));
        assert_eq!(trace.steps[0].recolored, vec![1, 2, 3]);
    }

    #[test]
    fn rule1_whitens_every_edge_vertex() {
        for h in [single(), fano(), two_disjoint()] {
            let mut cg = init_colored(&h);
            apply_rule1(&mut cg, &mut ReductionTrace::default());
            assert!(cg.with_side(Side::V2).all(|v| !cg.is_black(v)));
        }
    }

    #[test]
    fn rule1_on_white_graph_is_idle() {
        let mut cg = black_graph(path(3));
        for c in cg.color.values_mut() {
            *c = Color::White;
        }
        let before = cg.clone();
        assert!(!apply_rule1(&mut cg, &mut ReductionTrace::default()));
        assert_eq!(cg, before);
    }

    #[test]
    fn rule2_on_path() {
        // a–b–c–d: b is the first vertex with a nonempty N3 (a is not, its
        // only neighbour b has the exit c)
        let mut cg = black_graph(path(4));
        let mut trace = ReductionTrace::default();
        assert!(apply_rule2(&mut cg, &mut trace));
        let app = &trace.steps[0];
        assert_eq!(app.centers, vec![1]);
        assert_eq!(app.removed, vec![0]);
        assert_eq!(app.added, vec![Gadget { id: 4, neighbors: vec![1] }]);
        assert!(!cg.graph.contains(0));
        assert_eq!(cg.graph.neighbors(4).iter().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(cg.side[&4], Side::Gadget);
        assert_eq!(cg.color[&4], Color::White);
    }

    #[test]
    fn rule2_on_star_and_idle_cases() {
        let mut cg = black_graph(SimpleGraph::from_edges([(0, 1), (0, 2), (0, 3)]));
        let mut trace = ReductionTrace::default();
        assert!(apply_rule2(&mut cg, &mut trace));
        assert_eq!(trace.steps[0].removed, vec![1, 2, 3]);
        assert_eq!(cg.graph.vertex_count(), 2);
        // the gadget it left behind does not make it fire again
        assert!(!apply_rule2(&mut cg, &mut trace));

        let mut cycle = black_graph(SimpleGraph::from_edges((0..6).map(|i| (i, (i + 1) % 6))));
        assert!(!apply_rule2(&mut cycle, &mut ReductionTrace::default()));
    }

    #[test]
    fn rule3_on_shared_leaves() {
        let mut cg = black_graph(SimpleGraph::from_edges([(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]));
        let mut trace = ReductionTrace::default();
        assert!(apply_rule3(&mut cg, &mut trace));
        let app = &trace.steps[0];
        assert_eq!(app.centers, vec![0, 1]);
        assert_eq!(app.removed, vec![2, 3, 4]);
        assert_eq!(app.added.len(), 2);
        assert!(app.added.iter().all(|g| g.neighbors == vec![0, 1]));
        assert_eq!(cg.graph.edge_count(), 4);
    }

    #[test]
    fn rule3_on_path_of_five() {
        // N3(1,3) = {0,2,4} and no single inner vertex sees all three, so the
        // guard holds; the lexicographically first such pair is (0,3)
        let g = path(5);
        let p = neighborhood_partition(&g, &[1, 3]);
        assert_eq!(p.n3.iter().copied().collect::<Vec<_>>(), vec![0, 2, 4]);
        let plan = pair_plan(&black_graph(g.clone()), 1, 3).unwrap();
        assert_eq!(plan.1, vec![vec![1], vec![3]]);

        let mut cg = black_graph(g);
        let mut trace = ReductionTrace::default();
        assert!(apply_rule3(&mut cg, &mut trace));
        assert_eq!(trace.steps[0].centers, vec![0, 3]);
    }

    #[test]
    fn rule3_idle_when_inner_vertex_dominates() {
        // triangle: every N3 is dominated by one of its own members
        let mut cg = black_graph(SimpleGraph::from_edges([(0, 1), (1, 2), (0, 2)]));
        assert!(!apply_rule3(&mut cg, &mut ReductionTrace::default()));
    }

    #[test]
    fn fixpoint_examples() {
        let (cg, trace) = reduce_fixpoint(init_colored(&single())).unwrap();
        assert!(cg.with_side(Side::V2).all(|v| !cg.is_black(v)));
        assert_eq!(trace.replay(&init_colored(&single())).unwrap(), cg);

        let empty = black_graph(SimpleGraph::new());
        let (cg, trace) = reduce_fixpoint(empty.clone()).unwrap();
        assert!(trace.is_empty());
        assert_eq!(cg, empty);
    }

    #[test]
    fn disjoint_components_reduce_alike() {
        let (cg, _) = reduce_fixpoint(init_colored(&two_disjoint())).unwrap();
        let (one, _) = reduce_fixpoint(init_colored(&single())).unwrap();
        assert_eq!(cg.graph.vertex_count(), 2 * one.graph.vertex_count());
        assert_eq!(cg.graph.edge_count(), 2 * one.graph.edge_count());
        assert_eq!(cg.black().count(), 2 * one.black().count());
    }

    #[test]
    fn ceiling_triggers_on_runaway_rule() {
        struct Grow;
        impl ReductionRule for Grow {
            fn id(&self) -> u8 {
                9
            }
            fn step(&self, cg: &mut ColoredGraph, trace: &mut ReductionTrace) -> bool {
                let v = cg.graph.vertices().next().unwrap();
                let added = gadgets(cg, &[vec![v]]);
                record(cg, trace, RuleApplication { rule: 9, centers: vec![v], removed: vec![], recolored: vec![], added });
                true
            }
        }
        let cg = black_graph(path(2));
        assert_eq!(reduce_fixpoint_with(cg, &[&Grow]), Err(KernelError::IterationCeiling { limit: 40 }));
    }
}
