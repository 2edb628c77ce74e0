use std::collections::BTreeSet;

use proptest::prelude::*;

use hskernel::graph::{incidence_graph, local_complete_graph, neighborhood_partition, Side, SimpleGraph};
use hskernel::harness::generate::{planar, random_uniform};
use hskernel::harness::{emit, generate, parse, Family};
use hskernel::hypergraph::{resolve_unit_edges, Hypergraph, Instance};
use hskernel::kernels::{duality_lower_bound, kernelize_vc_bounded_degree, KernelOutcome};
use hskernel::oracles::{
    fractional_cover, fractional_cover_in, is_dominating_set, is_hitting_set, is_induced_matching,
    is_quasi_dominating_set, is_strong_independent_set, max_induced_matching, max_strong_independent_set,
    min_dominating_set, min_hitting_set, min_quasi_dominating_set, quasi_regular_multiplicities,
};
use hskernel::planar::{init_colored, kernelize_planar_vc_detailed, reduce_fixpoint};
use hskernel::planarity::is_planar;
use hskernel::Rational;

/// Hypergraphs with edges of size 1 to 3 over `0..n`.
fn mixed_hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::btree_set(prop::collection::btree_set(0..n, 1..=3), 0..=max_m)
            .prop_map(move |edges| Hypergraph::new(n, edges.into_iter().map(|e| e.into_iter().collect::<Vec<_>>())).unwrap())
    })
}

fn uniform_hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (4..=max_n, 1..=max_m, any::<u64>()).prop_map(|(n, m, seed)| random_uniform(n, m.min(n * (n - 1) * (n - 2) / 6), seed).unwrap())
}

fn small_graph() -> impl Strategy<Value = SimpleGraph> {
    (1..=12usize).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
            let mut g = SimpleGraph::with_vertices(0..n);
            for (u, v) in pairs {
                if u != v {
                    g.add_edge(u, v);
                }
            }
            g
        })
    })
}

fn two_colorable(g: &SimpleGraph, side: impl Fn(usize) -> Side) -> bool {
    g.edges().all(|(u, v)| side(u) != side(v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn simplifications_keep_the_cover_decision(h in mixed_hypergraph(8, 10), k in 0usize..8) {
        let k = k.min(h.n());
        let tau = min_hitting_set(&h).unwrap().size;
        let (stripped, _) = h.strip_isolated();
        prop_assert_eq!(min_hitting_set(&stripped).unwrap().size, tau);
        match resolve_unit_edges(&Instance::vertex_cover(h.clone(), k).unwrap()) {
            Ok((out, forced)) => {
                let rest = min_hitting_set(&out.hypergraph).unwrap().size;
                prop_assert_eq!(tau <= k, forced.len() + rest <= k);
                let (again, more) = resolve_unit_edges(&out).unwrap();
                prop_assert!(more.is_empty());
                prop_assert_eq!(again, out);
            }
            Err(_) => prop_assert!(tau > k),
        }
    }

    #[test]
    fn domination_pairs(h in mixed_hypergraph(7, 8)) {
        let dom = h.find_dominated();
        for &(w, v) in &dom.vertices {
            prop_assert_ne!(w, v);
            if h.incidence(w) == h.incidence(v) {
                prop_assert!(dom.vertices.contains(&(v, w)));
            }
        }
        for &(i, j) in &dom.edges {
            prop_assert!(h.edges()[j].is_proper_subset_of(&h.edges()[i]));
        }
    }

    #[test]
    fn derived_graph_shape(h in uniform_hypergraph(9, 12)) {
        let b = incidence_graph(&h);
        prop_assert_eq!(b.graph.edge_count(), 3 * h.m());
        prop_assert!(two_colorable(&b.graph, |v| b.tags.side(v)));
        let lc = local_complete_graph(&h);
        for (i, &node) in lc.tags.edge_node.iter().enumerate() {
            let nbrs: Vec<usize> = lc.graph.neighbors(node).iter().copied().collect();
            prop_assert_eq!(&nbrs[..], h.edges()[i].vertices());
            for &u in &nbrs {
                prop_assert!(nbrs.iter().all(|x| *x == u || lc.graph.has_edge(u, *x)));
            }
        }
    }

    #[test]
    fn partitions_split_the_neighbourhood(g in small_graph()) {
        let vs: Vec<usize> = g.vertices().collect();
        for &v in &vs {
            let mut centers = vec![vec![v]];
            centers.extend(vs.iter().filter(|&&w| w > v).map(|&w| vec![v, w]));
            for c in centers {
                let p = neighborhood_partition(&g, &c);
                let open: BTreeSet<usize> =
                    c.iter().flat_map(|&x| g.neighbors(x).iter().copied()).filter(|x| !c.contains(x)).collect();
                prop_assert_eq!(p.n1.len() + p.n2.len() + p.n3.len(), open.len());
                prop_assert_eq!(p.neighborhood(), open);
            }
        }
    }

    #[test]
    fn oracles_agree(h in uniform_hypergraph(9, 10)) {
        let tau = min_hitting_set(&h).unwrap();
        prop_assert!(is_hitting_set(&h, &tau.witness));
        prop_assert!(fractional_cover(&h) <= Rational::from_integer(tau.size.into()));
        prop_assert!(fractional_cover_in::<Rational>(&h).certify(&h));

        let b = incidence_graph(&h);
        let qd = min_quasi_dominating_set(&b).unwrap();
        prop_assert!(is_quasi_dominating_set(&b, &qd.witness));
        let lc = local_complete_graph(&h);
        let ds = min_dominating_set(&lc.graph, &[]).unwrap();
        prop_assert!(is_dominating_set(&lc.graph, &ds.witness));
        prop_assert_eq!(tau.size, qd.size);
        prop_assert_eq!(qd.size, ds.size);

        let is = max_strong_independent_set(&h).unwrap();
        prop_assert!(is_strong_independent_set(&h, &is.witness));
        let im = max_induced_matching(&lc.graph).unwrap();
        prop_assert!(is_induced_matching(&lc.graph, &im.witness));
        prop_assert_eq!(is.size, im.size);

        if quasi_regular_multiplicities(&h).is_some() {
            prop_assert_eq!(fractional_cover(&h), Rational::new(h.n().into(), 3.into()));
        }
    }

    #[test]
    fn bounded_degree_kernel_is_sound(h in uniform_hypergraph(10, 12), slack in 0usize..2) {
        let tau = min_hitting_set(&h).unwrap().size;
        let k = (tau + slack).saturating_sub(1).min(h.n());
        let d = h.max_degree();
        let out = kernelize_vc_bounded_degree(&Instance::vertex_cover(h.clone(), k).unwrap(), d).unwrap();
        if let KernelOutcome::Decided { .. } = out {
            prop_assert!(tau > k);
        }
        if tau <= k {
            prop_assert!(h.m() <= d * k);
        }
    }

    #[test]
    fn duality_is_an_involution(num in 2i64..500, den in 1i64..50) {
        let x = Rational::new(num.into(), den.into());
        prop_assume!(x > Rational::from_integer(1.into()));
        let once = duality_lower_bound(x.clone()).unwrap();
        prop_assert_eq!(once.product(), Rational::from_integer(1.into()));
        prop_assert_eq!(duality_lower_bound(once.lower_bound).unwrap().lower_bound, x);
    }

    #[test]
    fn planar_pipeline_invariants(n in 4usize..=12, seed in any::<u64>(), slack in 0usize..2) {
        let h = planar(n, seed).unwrap();
        prop_assert!(is_planar(&local_complete_graph(&h).graph));
        let tau = min_hitting_set(&h).unwrap().size;
        let k = (tau + slack).saturating_sub(1);
        let detail = kernelize_planar_vc_detailed(&Instance::vertex_cover(h.clone(), k).unwrap()).unwrap();

        let mut cg = detail.initial.clone();
        for app in &detail.trace.steps {
            let before = cg.vertex_count();
            cg.replay_step(app).unwrap();
            prop_assert!(cg.vertex_count() <= before + 2);
        }
        prop_assert_eq!(&cg, &detail.reduced);
        let (again, trace) = reduce_fixpoint(init_colored(&h)).unwrap();
        prop_assert_eq!(again, cg);
        prop_assert_eq!(trace.to_string(), detail.trace.to_string());

        let implied = detail.outcome.implied_answer(|i| min_hitting_set(&i.hypergraph).unwrap().size <= i.k);
        prop_assert_eq!(implied.is_yes(), tau <= k);
        if let KernelOutcome::Kernel { instance, .. } = &detail.outcome {
            prop_assert!(instance.k <= k);
        }
    }

    #[test]
    fn files_round_trip(h in mixed_hypergraph(9, 10)) {
        let text = emit(&h);
        prop_assert_eq!(parse(&text).unwrap(), h.clone());
        prop_assert_eq!(emit(&parse(&text).unwrap()), text);
    }

    #[test]
    fn generators_are_seeded(seed in any::<u64>()) {
        for family in [Family::Regular { n: 9, r: 2 }, Family::BoundedDegree { n: 9, d: 2, m: 5 }, Family::Planar { n: 8 }] {
            prop_assert_eq!(emit(&generate(family, seed).unwrap()), emit(&generate(family, seed).unwrap()));
        }
    }
}
