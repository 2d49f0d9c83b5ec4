use proptest::prelude::*;

use romdom_core::closed_form::{self, Subcase};
use romdom_core::families::{self, FamilySpec};
use romdom_core::solve;
use romdom_core::{Graph, Labeling};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let edge = (0..n.max(1), 0..n.max(1));
        proptest::collection::vec(edge, 0..=2 * n).prop_map(move |edges| {
            let edges = edges
                .into_iter()
                .filter(|(u, v)| u != v && *u < n && *v < n);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_labeling(n: usize) -> impl Strategy<Value = Labeling> {
    proptest::collection::vec(0u8..=2, n).prop_map(|l| Labeling::new(l).unwrap())
}

proptest! {
    #[test]
    fn weight_agrees_with_partition(f in (0usize..40).prop_flat_map(arb_labeling)) {
        let p = f.partition();
        prop_assert_eq!(f.weight(), (p.v1.len() + 2 * p.v2.len()) as u64);
        prop_assert_eq!(p.v0.len() + p.v1.len() + p.v2.len(), f.len());
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted(g in arb_graph(20)) {
        for v in 0..g.n() {
            let nb = g.neighbors(v);
            prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(!nb.contains(&v));
            for &w in nb {
                prop_assert!(g.neighbors(w).contains(&v));
            }
        }
    }

    #[test]
    fn constant_labelings(g in arb_graph(20)) {
        prop_assert!(g.is_valid_rdf(&Labeling::constant(g.n(), 2).unwrap()).unwrap());
        prop_assert!(g.is_valid_rdf(&Labeling::constant(g.n(), 1).unwrap()).unwrap());
        prop_assert_eq!(g.is_valid_rdf(&Labeling::zeros(g.n())).unwrap(), g.n() == 0);
    }

    #[test]
    fn isolated_vertices_never_zero(
        (g, f) in arb_graph(10).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_labeling(n)) })
    ) {
        if g.is_valid_rdf(&f).unwrap() {
            for v in (0..g.n()).filter(|&v| g.degree(v) == 0) {
                prop_assert_ne!(f.get(v), 0);
            }
        }
    }

    #[test]
    fn comet_invariants(t in 2usize..30, r in 1usize..8) {
        let g = families::gen_comet(t, r).unwrap();
        prop_assert!(g.is_tree());
        prop_assert_eq!(g.pendants().count(), r + 1);
        if t >= 3 && r >= 2 {
            prop_assert_eq!((0..g.n()).filter(|&v| g.degree(v) == r + 1).count(), 1);
        }
        prop_assert_eq!(g.degree(0), r + 1);
        let base = closed_form::gamma_comet(t, 1).unwrap();
        prop_assert_eq!(closed_form::gamma_comet(t, r).unwrap(), base);
        prop_assert_eq!(closed_form::gamma_comet(t + 3, r).unwrap(), base + 2);
    }

    #[test]
    fn double_comet_invariants(p in 2usize..30, a in 1usize..6, b in 1usize..6) {
        let n = p + a + b;
        let g = families::gen_double_comet(n, a, b).unwrap();
        prop_assert!(g.is_tree());
        let pendants: Vec<usize> = g.pendants().collect();
        prop_assert_eq!(pendants.len(), a + b);
        // the rest is the path k_1..k_p
        for v in 0..p {
            let inner = g.neighbors(v).iter().filter(|w| !pendants.contains(w)).count();
            prop_assert_eq!(inner, if p == 1 { 0 } else if v == 0 || v == p - 1 { 1 } else { 2 });
        }
        if p != 2 {
            let base = closed_form::gamma_double_comet(p + 2, 1, 1).unwrap();
            prop_assert_eq!(closed_form::gamma_double_comet(n, a, b).unwrap(), base);
            prop_assert_eq!(closed_form::gamma_double_comet(n + 3, a, b).unwrap(), base + 2);
        }
    }

    #[test]
    fn comb_invariants(n in 1usize..40) {
        let g = families::gen_comb(n).unwrap();
        prop_assert!(g.is_tree());
        if n >= 2 {
            prop_assert_eq!(g.pendants().count(), n);
        }
        for i in 0..n {
            prop_assert_eq!(g.neighbors(n + i), &[i][..]);
        }
        prop_assert_eq!(
            closed_form::gamma_comb(n + 3).unwrap(),
            closed_form::gamma_comb(n).unwrap() + 4
        );
    }

    #[test]
    fn constructions_match_formula(spec in arb_spec()) {
        let g = families::generate(&spec).unwrap();
        let want = closed_form::gamma(&spec).unwrap();
        for sub in closed_form::subcases(&spec).unwrap() {
            let f = closed_form::construct(&spec, sub).unwrap();
            prop_assert!(g.is_valid_rdf(&f).unwrap());
            prop_assert_eq!(f.weight(), want);
        }
        prop_assert_eq!(solve::solve_tree_dp(&g).unwrap().gamma, want);
    }

    #[test]
    fn subcases_have_equal_weight(t in 2usize..60, n in 1usize..60) {
        for spec in [FamilySpec::Comet { t, r: 2 }, FamilySpec::Comb { n }] {
            let i = closed_form::construct(&spec, Some(Subcase::I));
            let ii = closed_form::construct(&spec, Some(Subcase::II));
            if let (Ok(i), Ok(ii)) = (i, ii) {
                prop_assert_eq!(i.weight(), ii.weight());
            }
        }
    }

    #[test]
    fn generation_is_deterministic(spec in arb_spec()) {
        prop_assert_eq!(families::generate(&spec).unwrap(), families::generate(&spec).unwrap());
        let text = spec.to_string();
        prop_assert_eq!(text.parse::<FamilySpec>().unwrap(), spec);
    }

    #[test]
    fn solver_labelings_are_valid(n in 1usize..40, seed: u64) {
        let g = solve::random_tree(n, seed).unwrap();
        prop_assert!(g.is_tree());
        let r = solve::solve_tree_dp(&g).unwrap();
        prop_assert!(g.is_valid_rdf(&r.labeling).unwrap());
        prop_assert_eq!(r.labeling.weight(), r.gamma);
    }
}

fn arb_spec() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (2usize..40, 1usize..6).prop_map(|(t, r)| FamilySpec::Comet { t, r }),
        (3usize..40, 1usize..5, 1usize..5).prop_map(|(p, a, b)| FamilySpec::DoubleComet {
            n: p + a + b,
            a,
            b
        }),
        (1usize..60).prop_map(|n| FamilySpec::Comb { n }),
    ]
}
