use heawood_core::embedding::{validate_theorem_instance, RotationEmbedding};
use heawood_core::formats::{parse_embedding, parse_graph, parse_lists, write_embedding, write_graph, write_lists};
use heawood_core::coloring::ListAssignment;
use heawood_core::Graph;
use proptest::prelude::*;

/// A connected graph (spanning tree plus extra edges) with shuffled rotations
/// and random signs.
fn arb_embedding(max_n: usize) -> impl Strategy<Value = RotationEmbedding> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<u32>(), n),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                any::<u64>(),
            )
        })
        .prop_map(|(n, parents, extra, signs, shuffle)| {
            let mut g = Graph::empty(n).unwrap();
            for v in 1..n {
                g.add_edge(v, parents[v] as usize % v).unwrap();
            }
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] && !g.has_edge(u, v) {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            let rotations = (0..n)
                .map(|v| {
                    let mut r: Vec<usize> = g.neighbors(v).collect();
                    let len = r.len().max(1);
                    r.rotate_left((shuffle >> (v % 60)) as usize % len);
                    if shuffle >> v & 1 == 1 && r.len() > 2 {
                        r.swap(0, 1);
                    }
                    r
                })
                .collect();
            let negative: Vec<(usize, usize)> = g
                .edges()
                .into_iter()
                .enumerate()
                .filter(|&(i, _)| signs[i % signs.len().max(1)])
                .map(|(_, e)| e)
                .collect();
            RotationEmbedding::new(g, rotations, negative).unwrap()
        })
}

fn face_vertex_sets(emb: &RotationEmbedding) -> Vec<Vec<usize>> {
    let mut sets: Vec<Vec<usize>> = emb.faces().into_iter().map(|f| f.vertices).collect();
    sets.sort();
    sets
}

#[test]
fn projective_k6_from_faces() {
    let faces: Vec<Vec<usize>> = vec![
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 5, 1],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![3, 4, 1],
        vec![4, 5, 2],
        vec![5, 1, 3],
    ];
    let emb = RotationEmbedding::from_faces(6, &faces).unwrap();
    assert_eq!(emb.graph(), &Graph::complete(6).unwrap());
    assert_eq!(emb.euler_genus(), 1);
    assert!(!emb.is_orientable());
    assert!(emb.faces().iter().all(|f| f.len() == 3));
    // Lists of size 4 on a face and 6 elsewhere always colour K6.
    let lists = ListAssignment::new((0..6).map(|v| if v < 3 { vec![0, 1, 2, 3] } else { (0..6).collect() }).collect());
    let face = emb.faces().iter().position(|f| f.vertices == vec![0, 1, 2]).unwrap();
    let r = validate_theorem_instance(&emb, face, &lists).unwrap();
    assert!(r.coloring_guaranteed());
}

#[test]
fn torus_k7_has_genus_two() {
    // K7 on the torus: vertex i sees i+1, i+3, i+2, i+6, i+4, i+5 (mod 7).
    let g = Graph::complete(7).unwrap();
    let rotations = (0..7).map(|v| [1, 3, 2, 6, 4, 5].iter().map(|d| (v + d) % 7).collect()).collect();
    let emb = RotationEmbedding::orientable(g, rotations).unwrap();
    assert_eq!(emb.face_count(), 14);
    assert_eq!(emb.euler_genus(), 2);
}

proptest! {
    #[test]
    fn walks_cover_every_edge_twice(emb in arb_embedding(9)) {
        let total: usize = emb.faces().iter().map(|f| f.len()).sum();
        prop_assert_eq!(total, 2 * emb.graph().edge_count());
        prop_assert!(emb.euler_genus() >= 0);
        if emb.is_orientable() {
            prop_assert_eq!(emb.euler_genus() % 2, 0);
        }
    }

    #[test]
    fn switching_keeps_faces(emb in arb_embedding(8), v in 0usize..8) {
        let v = v % emb.graph().n();
        let s = emb.switch_vertex(v);
        prop_assert_eq!(s.euler_genus(), emb.euler_genus());
        prop_assert_eq!(face_vertex_sets(&s), face_vertex_sets(&emb));
        prop_assert_eq!(s.is_orientable(), emb.is_orientable());
    }

    #[test]
    fn normalizing_keeps_faces(emb in arb_embedding(8)) {
        if let Some(norm) = emb.normalized() {
            prop_assert!(norm.negative_edges().is_empty());
            prop_assert_eq!(face_vertex_sets(&norm), face_vertex_sets(&emb));
        } else {
            prop_assert!(!emb.is_orientable());
        }
    }

    #[test]
    fn faces_rebuild_the_surface(emb in arb_embedding(8)) {
        let walks: Vec<Vec<usize>> = emb.faces().iter().map(|f| f.vertex_sequence()).collect();
        prop_assume!(emb.graph().edge_count() > 0);
        // Walks that repeat an edge in the same face are outside what the
        // face-list builder accepts; skip them.
        if let Ok(back) = RotationEmbedding::from_faces(emb.graph().n(), &walks) {
            prop_assert_eq!(back.graph(), emb.graph());
            prop_assert_eq!(back.euler_genus(), emb.euler_genus());
            prop_assert_eq!(back.is_orientable(), emb.is_orientable());
        }
    }

    #[test]
    fn text_formats_round_trip(emb in arb_embedding(9), colours in proptest::collection::vec(proptest::collection::btree_set(0u32..20, 0..5), 9)) {
        let g = emb.graph();
        let gt = write_graph(g);
        prop_assert_eq!(&parse_graph(&gt).unwrap(), g);
        let et = write_embedding(&emb);
        let back = parse_embedding(&et).unwrap();
        prop_assert_eq!(write_embedding(&back), et);
        prop_assert_eq!(&back, &emb);
        let lists = ListAssignment::new(colours.into_iter().take(g.n()).map(|s| s.into_iter().collect()).collect());
        let lt = write_lists(&lists);
        prop_assert_eq!(write_lists(&parse_lists(&lt).unwrap()), lt);
    }
}
