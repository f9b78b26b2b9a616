//! Randomized invariants tying the independent pieces of the crate to each
//! other: complex operations against their set-level definitions, the two
//! hypergraph complex constructions against each other, the ordering bound
//! against the set-pair bound, and the exact collapse search against its
//! own certificates.

use std::collections::BTreeSet;

use proptest::prelude::*;

use collapse_core::collapse::{
    self, Collapsibility, Decision, GreedyOutcome, SearchConfig,
};
use collapse_core::hypergraph::{self, Graph, Hypergraph};
use collapse_core::mes::{self, FacetOrdering};
use collapse_core::{Simplex, SimplicialComplex, Vertex};

fn arb_simplex(max_v: Vertex, max_size: usize) -> impl Strategy<Value = Simplex> {
    prop::collection::btree_set(1..=max_v, 1..=max_size).prop_map(Simplex::new)
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(arb_simplex(6, 4), 0..=6).prop_map(SimplicialComplex::from_facets)
}

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    prop::collection::btree_set(prop::collection::btree_set(1u32..=7, 1..=3), 1..=8).prop_map(
        |edges| {
            Hypergraph::new(edges.into_iter().map(Simplex::new).collect())
                .expect("distinct nonempty edges")
        },
    )
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    prop::collection::btree_set((1u32..=8, 1u32..=8), 0..=14).prop_map(|pairs| {
        let edges: BTreeSet<(Vertex, Vertex)> = pairs
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        Graph::new((1..=8).collect(), edges).expect("valid edges")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rebuilding_from_maximal_faces_is_identity(x in arb_complex()) {
        let rebuilt = SimplicialComplex::from_facets(x.maximal_faces());
        prop_assert_eq!(&rebuilt, &x);
    }

    #[test]
    fn deletion_and_link_faces_match_definitions(x in arb_complex()) {
        for &v in &x.vertices().to_vec() {
            let del = x.deletion(v);
            let del_faces: BTreeSet<Simplex> = del.faces().into_iter().collect();
            let expect_del: BTreeSet<Simplex> =
                x.faces().into_iter().filter(|s| !s.contains(v)).collect();
            prop_assert_eq!(&del_faces, &expect_del, "deletion of {}", v);

            let link = x.link(v).unwrap();
            let link_faces: BTreeSet<Simplex> = link.faces().into_iter().collect();
            let expect_link: BTreeSet<Simplex> = x
                .faces()
                .into_iter()
                .filter(|s| s.contains(v))
                .map(|s| s.without(v))
                .collect();
            prop_assert_eq!(&link_faces, &expect_link, "link of {}", v);
        }
    }

    #[test]
    fn deletion_and_link_commute_with_relabeling(x in arb_complex()) {
        let f = |v: Vertex| v * 3 + 1;
        let y = x.relabel(f);
        for &v in &x.vertices().to_vec() {
            prop_assert_eq!(x.deletion(v).relabel(f), y.deletion(f(v)));
            prop_assert_eq!(x.link(v).unwrap().relabel(f), y.link(f(v)).unwrap());
        }
    }

    #[test]
    fn euler_characteristic_matches_alternating_face_count(x in arb_complex()) {
        if x.is_void() {
            prop_assert!(x.euler_characteristic().is_err());
            return Ok(());
        }
        let mut sum = 0i64;
        for face in x.faces() {
            if !face.is_empty() {
                sum += if face.size() % 2 == 1 { 1 } else { -1 };
            }
        }
        prop_assert_eq!(x.euler_characteristic().unwrap(), sum);
    }

    #[test]
    fn cov_facets_grow_with_budget(h in arb_hypergraph(), p in 0u32..=2, t in 1u32..=3) {
        let small = hypergraph::cov_complex(&h, p, t).unwrap();
        let large = hypergraph::cov_complex(&h, p + 1, t).unwrap();
        for facet in small.maximal_faces() {
            prop_assert!(large.is_face(&facet), "{:?} lost at p+1", facet);
        }
    }

    #[test]
    fn cov_witnesses_select_their_facets(h in arb_hypergraph(), p in 0u32..=3, t in 1u32..=3) {
        let (x, witnesses) = hypergraph::cov_complex_with_witnesses(&h, p, t).unwrap();
        let facets = x.maximal_faces();
        prop_assert_eq!(facets.len(), witnesses.len());
        for (facet, w) in facets.iter().zip(&witnesses) {
            prop_assert_eq!(w.threshold, t);
            prop_assert!(w.cover.size() as u32 <= p);
            // The facet is exactly the set of edges this cover selects.
            let selected = Simplex::new(
                (0..h.edge_count() as u32)
                    .filter(|&i| h.edges()[i as usize].intersection_size(&w.cover) as u32 >= t),
            );
            prop_assert_eq!(facet, &selected);
        }
    }

    #[test]
    fn int_complex_is_independence_of_disjointness(h in arb_hypergraph(), t in 1u32..=3) {
        let direct = hypergraph::int_complex(&h, t).unwrap();
        let g = hypergraph::disjointness_graph(&h, t).unwrap();
        let via_graph = hypergraph::independence_complex(&g);
        prop_assert_eq!(direct, via_graph);
    }

    #[test]
    fn mes_entries_are_structurally_sound(x in arb_complex()) {
        if x.is_void() {
            return Ok(());
        }
        let ord = FacetOrdering::lex(&x);
        for face in x.faces() {
            let res = mes::mes(&x, &ord, &face).unwrap();
            prop_assert_eq!(res.entries.len(), res.first_index);
            prop_assert!(res.support.is_subset_of(&face));
            // Every entry is a vertex of the face, new entries never repeat,
            // and the support is exactly the distinct entries.
            let mut news = BTreeSet::new();
            let mut distinct = BTreeSet::new();
            for (j, e) in res.entries.iter().enumerate() {
                prop_assert!(face.contains(e.vertex));
                // Entries exist only before the first containing entry.
                prop_assert!(!face.is_subset_of(&ord.faces()[j]));
                distinct.insert(e.vertex);
                if e.tag == mes::MesTag::New {
                    prop_assert!(news.insert(e.vertex), "repeated new entry");
                }
            }
            prop_assert_eq!(Simplex::new(distinct), res.support);
        }
    }

    #[test]
    fn mes_is_stable_under_deleting_an_outside_vertex(x in arb_complex()) {
        if x.is_void() {
            return Ok(());
        }
        let ord = FacetOrdering::lex(&x);
        for &v in &x.vertices().to_vec() {
            let del = x.deletion(v);
            if del.is_void() {
                continue;
            }
            let stripped: Vec<Simplex> =
                ord.faces().iter().map(|s| s.without(v)).collect();
            let ord_del = FacetOrdering::new(&del, stripped).unwrap();
            for face in del.faces() {
                if face.is_empty() {
                    continue;
                }
                let before = mes::mes(&x, &ord, &face).unwrap();
                let after = mes::mes(&del, &ord_del, &face).unwrap();
                prop_assert_eq!(before.entries, after.entries, "face {:?}, v {}", face, v);
                prop_assert_eq!(before.support, after.support);
            }
        }
    }

    #[test]
    fn ordering_bounds_never_exceed_vertex_facet_bound(x in arb_complex()) {
        if x.is_void() {
            return Ok(());
        }
        let lex = mes::d_of_ordering(&x, &FacetOrdering::lex(&x)).unwrap();
        let mut rev = x.facets().to_vec();
        rev.reverse();
        let rev = mes::d_of_ordering(&x, &FacetOrdering::new(&x, rev).unwrap()).unwrap();
        let (dp, witness) = mes::d_prime(&x).unwrap();
        prop_assert!(witness.check(&x));
        prop_assert!(lex <= dp, "lex {} > d' {}", lex, dp);
        prop_assert!(rev <= dp, "rev {} > d' {}", rev, dp);
    }

    #[test]
    fn graph_invariant_matches_independence_complex(g in arb_graph()) {
        let (k, witness) = mes::k_graph(&g);
        prop_assert!(witness.check(&g));
        prop_assert!(2 * k as usize <= g.vertex_count());
        let (dp, _) = mes::d_prime(&hypergraph::independence_complex(&g)).unwrap();
        prop_assert_eq!(k, dp);
    }

    #[test]
    fn collapse_decisions_are_monotone_in_d(x in arb_complex()) {
        let cfg = SearchConfig::default();
        let mut seen_yes = false;
        for d in 0..=x.rank() as u32 {
            match collapse::is_d_collapsible(&x, d, &cfg) {
                Decision::Collapsible(cert) => {
                    prop_assert!(collapse::verify_certificate(&x, &cert));
                    prop_assert_eq!(cert.d, d);
                    seen_yes = true;
                }
                Decision::NotCollapsible => {
                    prop_assert!(!seen_yes, "collapsible at smaller d but not at {}", d);
                }
                Decision::Undecided => prop_assert!(false, "budget should suffice here"),
            }
        }
    }

    #[test]
    fn exact_collapsibility_is_certified_and_minimal(x in arb_complex()) {
        let cfg = SearchConfig::default();
        match collapse::collapsibility(&x, &cfg) {
            Collapsibility::Exact { d, certificate } => {
                prop_assert_eq!(certificate.d, d);
                prop_assert!(collapse::verify_certificate(&x, &certificate));
                if d > 0 {
                    prop_assert_eq!(
                        collapse::is_d_collapsible(&x, d - 1, &cfg),
                        Decision::NotCollapsible
                    );
                }
            }
            Collapsibility::Undecided { .. } => prop_assert!(false, "budget should suffice"),
        }
    }

    #[test]
    fn collapsibility_respects_deletion_link_recursion(x in arb_complex()) {
        let cfg = SearchConfig::default();
        let exact = |y: &SimplicialComplex| match collapse::collapsibility(y, &cfg) {
            Collapsibility::Exact { d, .. } => d,
            Collapsibility::Undecided { .. } => panic!("budget should suffice"),
        };
        let cx = exact(&x);
        for &v in &x.vertices().to_vec() {
            let bound = exact(&x.deletion(v)).max(exact(&x.link(v).unwrap()) + 1);
            prop_assert!(
                cx <= bound,
                "collapsibility {} exceeds deletion/link bound {} at vertex {}",
                cx, bound, v
            );
        }
    }

    #[test]
    fn greedy_outcomes_replay(x in arb_complex(), d in 0u32..=3) {
        match collapse::greedy_collapse(&x, d) {
            GreedyOutcome::Collapsed(cert) => {
                prop_assert_eq!(cert.d, d);
                prop_assert!(collapse::verify_certificate(&x, &cert));
            }
            GreedyOutcome::Stuck(residual) => {
                prop_assert!(!residual.is_void());
                prop_assert!(collapse::free_faces(&residual, d).is_empty());
            }
        }
    }

    #[test]
    fn free_faces_are_exactly_the_applicable_steps(x in arb_complex(), d in 0u32..=3) {
        let listed: BTreeSet<(Simplex, Simplex)> = collapse::free_faces(&x, d)
            .into_iter()
            .map(|s| (s.free_face, s.carrier))
            .collect();
        // Every listed step applies; a step on a non-listed (face, facet)
        // pair with small enough free face must be rejected.
        for (eta, tau) in &listed {
            let step = collapse::CollapseStep {
                free_face: eta.clone(),
                carrier: tau.clone(),
            };
            prop_assert!(collapse::apply_collapse(&x, &step).is_ok());
        }
        for tau in x.maximal_faces() {
            for eta in x.faces() {
                if eta.size() as u32 > d || !eta.is_subset_of(&tau) {
                    continue;
                }
                let step = collapse::CollapseStep {
                    free_face: eta.clone(),
                    carrier: tau.clone(),
                };
                let applies = collapse::apply_collapse(&x, &step).is_ok();
                prop_assert_eq!(applies, listed.contains(&(eta, tau.clone())));
            }
        }
    }
}
