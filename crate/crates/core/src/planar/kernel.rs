use std::collections::BTreeSet;

use super::rules::reduce_fixpoint;
use super::trace::ReductionTrace;
use super::{init_colored, ColoredGraph};
use crate::graph::{incidence_graph, Side};
use crate::hypergraph::{resolve_unit_edges, Edge, Hypergraph, HypergraphError, Instance, Problem, Vertex};
use crate::kernels::{Answer, BoundUnit, ClaimedBound, KernelError, KernelOutcome, KernelStats};
use crate::planarity::is_planar;

/// Hypergraph read back from a reduced colored graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction {
    pub hypergraph: Hypergraph,
    /// Edges contributed by gadgets: a unit edge for a pendant, a pair for a
    /// gadget shared by two centers.
    pub gadget_edges: Vec<Edge>,
    /// Edge or gadget vertices left without any black V1 neighbour. They are
    /// dropped; a nonzero count means the reduction lost information.
    pub dropped: usize,
}

/// Deletes white V1 vertices and V1–V1 edges, then turns each edge vertex
/// and each gadget into the hyperedge of its remaining V1 neighbours.
pub fn reconstruct_hypergraph(cg: &ColoredGraph, universe: usize) -> Reconstruction {
    let keep: BTreeSet<Vertex> = cg.with_side(Side::V1).filter(|&v| cg.is_black(v)).collect();
    let mut edges = BTreeSet::new();
    let mut gadget_edges = BTreeSet::new();
    let mut dropped = 0;
    for (&x, &side) in &cg.side {
        if side == Side::V1 {
            continue;
        }
        let members: Vec<Vertex> = cg.graph.neighbors(x).iter().copied().filter(|u| keep.contains(u)).collect();
        if members.is_empty() {
            dropped += 1;
            continue;
        }
        let e = Edge::new(members);
        if side == Side::Gadget {
            gadget_edges.insert(e.clone());
        }
        edges.insert(e);
    }
    let hypergraph = Hypergraph::from_parts(universe, keep, edges.into_iter().map(|e| e.vertices().to_vec()))
        .expect("reconstructed edges are distinct and use kept vertices");
    Reconstruction { hypergraph, gadget_edges: gadget_edges.into_iter().collect(), dropped }
}

/// Everything the planar pipeline produced, for inspection.
#[derive(Debug, Clone)]
pub struct PlanarKernel {
    pub outcome: KernelOutcome,
    pub initial: ColoredGraph,
    pub reduced: ColoredGraph,
    pub trace: ReductionTrace,
    pub reconstruction: Reconstruction,
    /// Isolated vertices removed before the reduction.
    pub isolated: Vec<Vertex>,
}

/// Vertex cover kernel for 3-uniform hypergraphs with planar incidence graph.
pub fn kernelize_planar_vc(inst: &Instance) -> Result<KernelOutcome, KernelError> {
    kernelize_planar_vc_detailed(inst).map(|k| k.outcome)
}

pub fn kernelize_planar_vc_detailed(inst: &Instance) -> Result<PlanarKernel, KernelError> {
    if inst.problem != Problem::VertexCover {
        return Err(KernelError::WrongProblem { expected: Problem::VertexCover });
    }
    if !inst.hypergraph.is_uniform() {
        return Err(KernelError::NotUniform);
    }
    let (h, isolated) = inst.hypergraph.strip_isolated();
    if !is_planar(&incidence_graph(&h).graph) {
        return Err(KernelError::NotPlanar);
    }
    let initial = init_colored(&h);
    let (reduced, trace) = reduce_fixpoint(initial.clone())?;
    let reconstruction = reconstruct_hypergraph(&reduced, h.universe());
    let reduced_instance = Instance::clamped(reconstruction.hypergraph.clone(), inst.k, Problem::VertexCover);
    let bound = ClaimedBound { value: 67 * inst.k, unit: BoundUnit::Vertices, empirical: true };
    let outcome = match resolve_unit_edges(&reduced_instance) {
        Ok((instance, forced)) => {
            let (hypergraph, _) = instance.hypergraph.strip_isolated();
            let instance = Instance::clamped(hypergraph, instance.k, Problem::VertexCover);
            let stats = KernelStats { n: instance.hypergraph.n(), m: instance.hypergraph.m(), bound };
            KernelOutcome::Kernel { instance, forced, stats }
        }
        Err(HypergraphError::ParameterExhausted { forced, k }) => KernelOutcome::Decided {
            answer: Answer::No,
            reason: format!("{forced} vertices are forced but k = {k}"),
        },
        Err(other) => unreachable!("vertex cover instance: {other}"),
    };
    Ok(PlanarKernel { outcome, initial, reduced, trace, reconstruction, isolated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;
    use crate::oracles::min_hitting_set;

    fn tau(h: &Hypergraph) -> usize {
        min_hitting_set(h).unwrap().size
    }

    fn decides(out: &KernelOutcome) -> bool {
        out.implied_answer(|i| tau(&i.hypergraph) <= i.k).is_yes()
    }

    #[test]
    fn single_edge() {
        let yes = kernelize_planar_vc(&Instance::vertex_cover(single(), 1).unwrap()).unwrap();
        assert!(decides(&yes));
        let no = kernelize_planar_vc(&Instance::vertex_cover(single(), 0).unwrap()).unwrap();
        assert!(!decides(&no));
    }

    #[test]
    fn reconstruction_keeps_the_cover_number() {
        let k = kernelize_planar_vc_detailed(&Instance::vertex_cover(single(), 1).unwrap()).unwrap();
        assert_eq!(k.reconstruction.dropped, 0);
        assert_eq!(tau(&k.reconstruction.hypergraph), 1);
    }

    #[test]
    fn untouched_graph_gives_back_the_input() {
        let h = two_disjoint();
        let mut cg = init_colored(&h);
        for v in h.edges().iter().enumerate().map(|(i, _)| h.universe() + i) {
            cg.color.insert(v, super::super::Color::White);
        }
        assert_eq!(reconstruct_hypergraph(&cg, h.universe()).hypergraph, h);
    }

    #[test]
    fn pendant_gadget_becomes_unit_edge() {
        let (cg, _) = reduce_fixpoint(init_colored(&two_disjoint())).unwrap();
        let r = reconstruct_hypergraph(&cg, 6);
        assert!(r.gadget_edges.iter().all(|e| r.hypergraph.edges().contains(e)));
        for (&g, _) in cg.side.iter().filter(|(_, &s)| s == Side::Gadget) {
            let nbrs: Vec<Vertex> = cg.graph.neighbors(g).iter().copied().collect();
            if nbrs.len() == 1 && cg.is_black(nbrs[0]) {
                assert!(r.hypergraph.edges().contains(&Edge::new(nbrs)));
            }
        }
    }

    #[test]
    fn rejects_non_planar_and_wrong_inputs() {
        assert_eq!(
            kernelize_planar_vc(&Instance::vertex_cover(fano(), 3).unwrap()).unwrap_err(),
            KernelError::NotPlanar
        );
        assert!(matches!(
            kernelize_planar_vc(&Instance::independent_set(single(), 1).unwrap()),
            Err(KernelError::WrongProblem { .. })
        ));
    }
}
