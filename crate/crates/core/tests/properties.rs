use proptest::prelude::*;

use qsum_core::enumerate::{canonical_form, classes_from_graph6, min_f_by_vertices, search_graph6_stream, Objective};
use qsum_core::exact::pow10_inv;
use qsum_core::graph::{family_g, graph6_decode, graph6_encode, star_plus};
use qsum_core::{certify_f, f_value, spectrum, CertifiedF, Graph, MatrixKind};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

#[test]
fn g_family_meets_star_plus() {
    for n in 5..=10 {
        let g = family_g(n - 3, 1).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&star_plus(n - 1).unwrap()).unwrap());
    }
}

#[test]
fn reported_minimizer_attains_reported_value() {
    let r = min_f_by_vertices(6).unwrap();
    for g6 in &r.argext {
        let g = graph6_decode(g6).unwrap();
        let f = certify_f(&g, &pow10_inv(12)).unwrap();
        assert!(f.overlaps(&r.ext_value));
    }
    let runner = r.runner_up.unwrap();
    let f = certify_f(&graph6_decode(&runner.graph6).unwrap(), &pow10_inv(12)).unwrap();
    assert!(f.overlaps(&runner.value));
}

#[test]
fn stream_search_agrees_with_builtin_enumeration() {
    let text: String = ["Bw", "CN", "C^", "D@{", "Ch"].iter().map(|s| format!("{s}\n")).collect();
    let r = search_graph6_stream(&text, Objective::MinF).unwrap();
    assert_eq!(r.argext, vec![canonical_form(&star_plus(4).unwrap()).unwrap()]);
    assert_eq!(classes_from_graph6(&text).unwrap().len(), 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn signless_spectrum_basics(g in graph_strategy(9)) {
        let q = spectrum(&g, MatrixKind::Signless).unwrap();
        let l = spectrum(&g, MatrixKind::Laplacian).unwrap();
        let trace: f64 = q.values.iter().sum();
        prop_assert!((trace - 2.0 * g.edge_count() as f64).abs() < 1e-9);
        prop_assert!(q.values.iter().all(|&x| x > -1e-9));
        prop_assert!(q.values.windows(2).all(|w| w[0] >= w[1]));
        let zeros = l.values.iter().filter(|x| x.abs() < 1e-8).count();
        prop_assert_eq!(zeros, g.components().omega());
        if g.is_bipartite() {
            for (a, b) in q.values.iter().zip(&l.values) {
                prop_assert!((a - b).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn f_is_positive_and_relabel_invariant(g in graph_strategy(8), seed in any::<u64>()) {
        prop_assume!(g.n() >= 2);
        let f = f_value(&g).unwrap();
        prop_assert!(f > 0.0);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert!((f_value(&h).unwrap() - f).abs() < 1e-9);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn certified_f_brackets_float_f(g in graph_strategy(7)) {
        prop_assume!(g.n() >= 2);
        let mut cf = CertifiedF::new(&g).unwrap();
        let iv = cf.refine(&pow10_inv(10)).clone();
        let (lo, hi) = iv.to_f64();
        let f = f_value(&g).unwrap();
        prop_assert!(lo - 1e-9 <= f && f <= hi + 1e-9);
    }

    #[test]
    fn graph6_round_trips(g in graph_strategy(12)) {
        let s = graph6_encode(&g).unwrap();
        prop_assert_eq!(graph6_decode(&s).unwrap(), g);
    }
}
