use proptest::prelude::*;
use spectough_core::graph::{parse_graph6, write_graph6, Family, Graph, VertexSet};

fn gnp() -> impl Strategy<Value = Graph> {
    (1usize..=62, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, p, seed)| Family::Gnp { n, p, seed }.build().unwrap())
}

proptest! {
    #[test]
    fn graph6_round_trip(g in gnp()) {
        let text = write_graph6(&g).unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn adjacency_is_symmetric_and_loop_free(g in gnp()) {
        for u in 0..g.n() {
            prop_assert!(!g.has_edge(u, u));
            for v in g.neighbors(u) {
                prop_assert!(g.has_edge(v, u));
            }
        }
        let half: usize = g.degrees().sum::<usize>() / 2;
        prop_assert_eq!(g.edge_count(), half);
    }

    #[test]
    fn complement_involution_and_edge_total(g in gnp()) {
        let c = g.complement();
        let n = g.n();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn components_partition_the_vertices(g in gnp(), mask in any::<u64>()) {
        let s = VertexSet::from_bits(mask).intersection(g.vertices());
        prop_assume!(s != g.vertices());
        let comps = g.components_after_removal(s).unwrap();
        let mut seen = s;
        for c in &comps {
            prop_assert!(seen.is_disjoint(*c));
            seen = seen.union(*c);
            // connected inside G - S
            let start = c.first().unwrap();
            prop_assert_eq!(g.reach_within(start, *c), *c);
            // no edges to other components
            for v in *c {
                prop_assert!(g.neighbors(v).difference(s).is_subset(*c));
            }
        }
        prop_assert_eq!(seen, g.vertices());
        for w in comps.windows(2) {
            prop_assert!((w[0].len(), w[0].first()) < (w[1].len(), w[1].first()));
        }
    }

    #[test]
    fn empty_cut_gives_connected_components(g in gnp()) {
        let comps = g.components_after_removal(VertexSet::EMPTY).unwrap();
        prop_assert_eq!(comps.iter().map(|c| c.len()).sum::<usize>(), g.n());
        prop_assert_eq!(comps.len() == 1, g.is_connected());
    }
}

#[test]
fn graph6_corpus_lines() {
    // known encodings from the nauty tools
    let cases = [
        ("A_", 2, 1),
        ("Bw", 3, 3),
        ("Bg", 3, 2),
        ("C~", 4, 6),
        ("Ch", 4, 3),
    ];
    for (text, n, m) in cases {
        let g = parse_graph6(text).unwrap();
        assert_eq!((g.n(), g.edge_count()), (n, m), "{text}");
        assert_eq!(write_graph6(&g).unwrap(), text);
    }
    // 'h' - 63 = 0b101001 over column order 01 02 12 03 13 23
    let path = parse_graph6("Ch").unwrap();
    assert_eq!(
        path.edges().collect::<Vec<_>>(),
        vec![(0, 1), (1, 2), (2, 3)]
    );
}
