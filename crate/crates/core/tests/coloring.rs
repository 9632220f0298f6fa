use heawood_core::coloring::*;
use heawood_core::graph::canon::graph_classes;
use heawood_core::Graph;
use proptest::prelude::*;

/// Tries every choice of one colour per list.
fn naive_colorable(g: &Graph, lists: &[Vec<Color>]) -> bool {
    fn go(g: &Graph, lists: &[Vec<Color>], chosen: &mut Vec<Color>) -> bool {
        let v = chosen.len();
        if v == lists.len() {
            return true;
        }
        for &c in &lists[v] {
            if (0..v).all(|u| !g.has_edge(u, v) || chosen[u] != c) {
                chosen.push(c);
                if go(g, lists, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(g, lists, &mut Vec::new())
}

fn subsets(palette: u32, size: usize) -> Vec<Vec<Color>> {
    (0u32..1 << palette)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (0..palette).filter(|c| m >> c & 1 == 1).collect())
        .collect()
}

/// Every assignment with sizes `f` over `sum f` colours, the first list
/// fixed to `0..f[0]` up to renaming.
fn naive_f_choosable(g: &Graph, f: &[usize]) -> bool {
    let palette: usize = f.iter().sum();
    let options: Vec<Vec<Vec<Color>>> = f
        .iter()
        .enumerate()
        .map(|(v, &k)| {
            if v == 0 {
                vec![(0..k as Color).collect()]
            } else {
                subsets(palette as u32, k)
            }
        })
        .collect();
    let mut idx = vec![0usize; f.len()];
    loop {
        let lists: Vec<Vec<Color>> = idx.iter().enumerate().map(|(v, &i)| options[v][i].clone()).collect();
        if !naive_colorable(g, &lists) {
            return false;
        }
        let mut v = 0;
        loop {
            if v == f.len() {
                return true;
            }
            idx[v] += 1;
            if idx[v] < options[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

fn arb_instance(max_n: usize, palette: u32, max_list: usize) -> impl Strategy<Value = (Graph, Vec<Vec<Color>>)> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            proptest::collection::vec(proptest::collection::btree_set(0..palette, 0..=max_list), n),
        )
            .prop_map(move |(bits, lists)| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                (g, lists.into_iter().map(|s| s.into_iter().collect()).collect())
            })
    })
}

#[test]
fn choosability_matches_naive_enumeration() {
    for n in 1..=4 {
        for g in graph_classes(n).unwrap() {
            let max_f = if n <= 3 { 3 } else { 2 };
            let mut f = vec![1; n];
            loop {
                let fast = is_f_choosable(&g, &f).unwrap();
                assert_eq!(fast.is_choosable(), naive_f_choosable(&g, &f), "{g:?} f={f:?}");
                if let Some(w) = fast.witness() {
                    assert_eq!(w.sizes(), f);
                    assert!(!naive_colorable(&g, w.lists()));
                }
                let Some(v) = (0..n).find(|&v| f[v] < max_f) else { break };
                f[v] += 1;
                for x in &mut f[..v] {
                    *x = 1;
                }
            }
        }
    }
}

#[test]
fn complete_bipartite_choice_numbers() {
    let limits = ChoosabilityLimits::default();
    let k22 = Graph::complete_bipartite(2, 2).unwrap();
    assert!(is_k_choosable(&k22, 2, &limits).unwrap().is_choosable());
    let k24 = Graph::complete_bipartite(2, 4).unwrap();
    assert!(!is_k_choosable(&k24, 2, &limits).unwrap().is_choosable());
    assert!(is_k_choosable(&k24, 3, &limits).unwrap().is_choosable());
}

proptest! {
    #[test]
    fn solver_matches_naive((g, lists) in arb_instance(6, 5, 4)) {
        let la = ListAssignment::new(lists.clone());
        let got = solve_list_coloring(&g, &la).unwrap();
        prop_assert_eq!(got.is_some(), naive_colorable(&g, la.lists()));
        if let Some(c) = got {
            prop_assert!(verify_coloring(&g, &la, &c, true).is_ok());
        }
    }

    #[test]
    fn renaming_colours_keeps_colourability((g, lists) in arb_instance(7, 6, 4), shift in 1u32..50, scale in 1u32..5) {
        let la = ListAssignment::new(lists);
        let renamed = la.map_colors(|c| c * (2 * scale + 1) + shift);
        prop_assert_eq!(
            solve_list_coloring(&g, &la).unwrap().is_some(),
            solve_list_coloring(&g, &renamed).unwrap().is_some()
        );
    }

    #[test]
    fn chromatic_number_is_exact((g, _) in arb_instance(7, 1, 0)) {
        let r = chromatic_number(&g);
        let k = r.chromatic_number;
        prop_assert!(verify_coloring(&g, &ListAssignment::uniform(g.n(), k.max(1)), &r.coloring, true).is_ok());
        if k > 0 {
            prop_assert!(!naive_colorable(&g, ListAssignment::uniform(g.n(), k - 1).lists()));
        }
    }

    #[test]
    fn greedy_colours_sparse_high_degree((g, _) in arb_instance(9, 1, 0), seed in any::<u64>()) {
        let k = g.n();
        prop_assume!(k >= 3);
        let high = (0..k).filter(|&v| g.degree(v) >= k - 2).count();
        prop_assume!(high <= k - 2);
        let lists = ListAssignment::new(
            (0..k).map(|v| (0..(k - 2) as Color).map(|c| c + ((seed >> v) & 3) as Color).collect()).collect(),
        );
        let c = greedy_degree_color(&g, &lists).unwrap();
        prop_assert!(verify_coloring(&g, &lists, &c, true).is_ok());
    }
}
