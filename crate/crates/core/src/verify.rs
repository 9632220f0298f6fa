//! Exhaustive and randomized checks of the colouring results on small
//! instances. Each check returns a [`CheckSummary`]; a check passes when it
//! found no violations.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{
    chromatic_number, degree_choosable, find_f_bad_clique, is_f_choosable_within, is_gallai_tree, is_k_choosable,
    greedy_degree_color, solve_list_coloring, verify_coloring, ChoosabilityLimits, ColoringError, ListAssignment,
};
use crate::constructions::{gallai_join, identify_edges, special_case_family, IdentificationSpec, TriangulatedPolygon};
use crate::criticality::{is_k_critical, ks_edge_bound, CriticalityError, DEFAULT_CRITICALITY_LIMIT};
use crate::embedding::RotationEmbedding;
use crate::genus::heawood_number;
use crate::graph::canon::{are_isomorphic, connected_graph_classes, CanonError};
use crate::graph::{clique_number, Graph};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{0}")]
    OutOfRange(String),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Criticality(#[from] CriticalityError),
    #[error(transparent)]
    Construction(#[from] crate::constructions::ConstructionError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub instances: usize,
    pub skipped: usize,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

impl CheckSummary {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            instances: 0,
            skipped: 0,
            violations: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn violation(&mut self, instance: impl Into<String>, detail: impl Into<String>) {
        self.violations.push(Violation {
            instance: instance.into(),
            detail: detail.into(),
        });
    }

    fn finish(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis();
        self
    }
}

/// Connected classes on `1..=max_n` vertices, each with its key.
fn keyed_classes(max_n: usize, max_classes: Option<usize>) -> Result<Vec<(String, Graph)>, CanonError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let classes = connected_graph_classes(n)?;
        let take = max_classes.unwrap_or(usize::MAX).min(classes.len());
        out.extend(
            classes
                .into_iter()
                .take(take)
                .enumerate()
                .map(|(i, g)| (format!("n={n} class={i}"), g)),
        );
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BaseCaseOptions {
    /// Largest order checked; defaults to `H(ε)`.
    pub max_n: Option<usize>,
    /// Classes taken per order, in canonical order.
    pub max_classes: Option<usize>,
    /// Cap on the colours used by the assignment search.
    pub palette_bound: Option<usize>,
}

/// Graphs with at most `H(ε)` vertices: for every connected class and every
/// vertex subset `F`, lists of size `H - 2` on `F` and `H` elsewhere always
/// admit a colouring unless `F` holds a `K_{H-1}`.
pub fn verify_small_order_base_case(epsilon: i64, opts: BaseCaseOptions) -> Result<CheckSummary, VerifyError> {
    let start = Instant::now();
    if !(1..=2).contains(&epsilon) {
        return Err(VerifyError::OutOfRange(format!(
            "small-order check runs for epsilon 1 or 2, got {epsilon}"
        )));
    }
    let h = heawood_number(&epsilon).expect("epsilon >= 1") as usize;
    let max_n = opts.max_n.unwrap_or(h).min(h);
    let palette = opts.palette_bound.unwrap_or(usize::MAX);
    let classes = keyed_classes(max_n, opts.max_classes)?;
    let results: Vec<(usize, usize, Vec<Violation>)> = classes
        .par_iter()
        .map(|(key, g)| {
            let (mut checked, mut skipped, mut bad) = (0, 0, Vec::new());
            for face in 0u64..1 << g.n() {
                if find_f_bad_clique(g, face, epsilon).expect("epsilon >= 1").is_some() {
                    skipped += 1;
                    continue;
                }
                let f: Vec<usize> = (0..g.n()).map(|v| if face >> v & 1 == 1 { h - 2 } else { h }).collect();
                checked += 1;
                match is_f_choosable_within(g, &f, palette) {
                    Ok(o) if o.is_choosable() => {}
                    Ok(o) => bad.push(Violation {
                        instance: format!("{key} F={face:#b}"),
                        detail: format!("uncolourable lists {:?}", o.witness().map(|w| w.lists().to_vec())),
                    }),
                    Err(e) => bad.push(Violation {
                        instance: format!("{key} F={face:#b}"),
                        detail: e.to_string(),
                    }),
                }
            }
            (checked, skipped, bad)
        })
        .collect();
    let mut s = CheckSummary::new("small-order base case");
    for (c, k, v) in results {
        s.instances += c;
        s.skipped += k;
        s.violations.extend(v);
    }
    s.notes.push(format!(
        "epsilon={epsilon} H={h} orders 1..={max_n}, {} classes, F-bad faces skipped",
        classes.len()
    ));
    if let Some(p) = opts.palette_bound {
        s.notes.push(format!("assignments limited to {p} colours"));
    }
    Ok(s.finish(start))
}

/// Random `k`-vertex instances with lists of size at least `k - 2` and at
/// most `k - 2` vertices of degree `k - 2` or more, coloured greedily in
/// degree order.
pub fn verify_greedy_suite(count: usize, seed: u64, max_k: usize) -> Result<CheckSummary, VerifyError> {
    let start = Instant::now();
    if max_k < 3 {
        return Err(VerifyError::OutOfRange(format!("need max_k >= 3, got {max_k}")));
    }
    let mut s = CheckSummary::new("greedy degree-order colouring");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for idx in 0..count {
        let k = rng.gen_range(3..=max_k);
        let p: f64 = rng.gen();
        let mut g = Graph::empty(k).expect("small");
        for u in 0..k {
            for v in u + 1..k {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).expect("fresh edge");
                }
            }
        }
        loop {
            let high: Vec<usize> = (0..k).filter(|&v| g.degree(v) >= k - 2).collect();
            if high.len() <= k - 2 {
                break;
            }
            let v = *high.choose(&mut rng).expect("nonempty");
            let nb: Vec<usize> = g.neighbors(v).collect();
            let w = *nb.choose(&mut rng).expect("high degree");
            g.remove_edge(v, w).expect("edge exists");
        }
        let palette = rng.gen_range(k - 2..=2 * k) as u32;
        let lists = ListAssignment::new(
            (0..k)
                .map(|_| {
                    let size = rng.gen_range(k - 2..=k);
                    let mut colors: Vec<u32> = (0..palette.max(size as u32)).collect();
                    colors.shuffle(&mut rng);
                    colors.truncate(size);
                    colors
                })
                .collect(),
        );
        s.instances += 1;
        let key = format!("#{idx} k={k}");
        match greedy_degree_color(&g, &lists) {
            Ok(c) => {
                if let Err(v) = verify_coloring(&g, &lists, &c, true) {
                    s.violation(key, format!("invalid colouring: {v:?}"));
                }
            }
            Err(e) => s.violation(key, e.to_string()),
        }
    }
    s.notes.push(format!("seed={seed} k in 3..={max_k}"));
    Ok(s.finish(start))
}

/// Exhaustive degree-choosability against the block characterization:
/// a connected graph is degree-choosable exactly when it is not a Gallai tree.
pub fn verify_degree_choosability(max_n: usize, max_classes: Option<usize>) -> Result<CheckSummary, VerifyError> {
    let start = Instant::now();
    let limits = ChoosabilityLimits {
        max_vertices: max_n,
        ..ChoosabilityLimits::default()
    };
    let classes = keyed_classes(max_n, max_classes)?;
    let results: Vec<Result<Option<Violation>, ColoringError>> = classes
        .par_iter()
        .map(|(key, g)| {
            let r = degree_choosable(g, &limits)?;
            Ok((!r.agrees_with_blocks()).then(|| Violation {
                instance: format!("{key} {g:?}"),
                detail: format!("search says choosable={}, gallai tree={}", r.choosable, r.gallai_tree),
            }))
        })
        .collect();
    let mut s = CheckSummary::new("degree-choosability vs Gallai trees");
    let mut gallai = 0;
    for ((_, g), r) in classes.iter().zip(results) {
        s.instances += 1;
        gallai += usize::from(is_gallai_tree(g));
        s.violations.extend(r?);
    }
    s.notes.push(format!("{gallai} Gallai trees among {} classes", classes.len()));
    Ok(s.finish(start))
}

/// Every `K_k`-free `k`-critical graph on at most `max_n` vertices, found by
/// exhaustive search, has `2e >= (k-1)n + k - 3`.
pub fn verify_critical_edge_bound(max_n: usize, ks: &[usize]) -> Result<CheckSummary, VerifyError> {
    let start = Instant::now();
    let mut s = CheckSummary::new("edge bound for critical graphs");
    for n in 1..=max_n {
        let classes = connected_graph_classes(n)?;
        for &k in ks {
            if k < 4 {
                return Err(VerifyError::OutOfRange(format!("edge bound needs k >= 4, got {k}")));
            }
            let found: Vec<Result<Option<Graph>, VerifyError>> = classes
                .par_iter()
                .filter(|g| g.degrees().into_iter().min().unwrap_or(0) + 1 >= k)
                .filter(|g| clique_number(g) < k)
                .filter(|g| chromatic_number(g).chromatic_number == k)
                .map(|g| Ok(is_k_critical(g, k, DEFAULT_CRITICALITY_LIMIT)?.is_critical.then(|| g.clone())))
                .collect();
            let mut count = 0;
            for g in found {
                let Some(g) = g? else { continue };
                count += 1;
                s.instances += 1;
                if !ks_edge_bound(g.n(), g.edge_count(), k)? {
                    s.violation(
                        format!("k={k} {g:?}"),
                        format!("2e = {} < {}", 2 * g.edge_count(), (k - 1) * g.n() + k - 3),
                    );
                }
            }
            s.notes.push(format!("k={k} n={n}: {count} critical graphs without K_{k}"));
        }
    }
    Ok(s.finish(start))
}

/// The `k`-critical graphs on `k + 2` vertices are exactly `K_{k-3} + C_5`.
pub fn verify_gallai_uniqueness(k: usize) -> Result<CheckSummary, VerifyError> {
    let start = Instant::now();
    let target = gallai_join(k)?;
    let mut s = CheckSummary::new("critical graphs on k + 2 vertices");
    let classes = connected_graph_classes(k + 2)?;
    let critical: Vec<Graph> = classes
        .par_iter()
        .filter(|g| chromatic_number(g).chromatic_number == k)
        .filter_map(|g| match is_k_critical(g, k, DEFAULT_CRITICALITY_LIMIT) {
            Ok(r) if r.is_critical => Some(g.clone()),
            _ => None,
        })
        .collect();
    s.instances = classes.len();
    let matches = critical
        .iter()
        .filter(|g| are_isomorphic(g, &target).unwrap_or(false))
        .count();
    if critical.len() != 1 || matches != 1 {
        s.violation(
            format!("k={k}"),
            format!("{} critical classes found: {critical:?}", critical.len()),
        );
    }
    s.notes.push(format!("k={k}: {} critical class(es)", critical.len()));
    Ok(s.finish(start))
}

/// The Special Case example: `K_{H-5} + C_5` has no `K_{H-2}`, is
/// `(H-2)`-critical and cannot be coloured from identical `(H-3)`-lists.
pub fn verify_special_family(i: i64) -> Result<CheckSummary, VerifyError> {
    let start = Instant::now();
    let p = special_case_family(i)?;
    let k = (p.heawood - 2) as usize;
    let mut s = CheckSummary::new("special case family");
    s.instances = 3;
    let omega = clique_number(&p.graph);
    if omega != k - 1 {
        s.violation("clique number", format!("{omega}, expected {}", k - 1));
    }
    let crit = is_k_critical(&p.graph, k, DEFAULT_CRITICALITY_LIMIT.max(p.graph.n()))?;
    if !crit.is_critical {
        s.violation("criticality", format!("{:?}", crit.witness));
    }
    if let Some(c) = solve_list_coloring(&p.graph, &p.lists)? {
        s.violation("identical lists", format!("coloured: {:?}", c.colors()));
    }
    s.notes.push(format!(
        "i={i} epsilon={} H={} n={} clique number {omega}",
        p.epsilon,
        p.heawood,
        p.graph.n()
    ));
    Ok(s.finish(start))
}

/// Every triangulated polygon on `4..=max_n` vertices, every simple gluing
/// of two boundary edges that meets the colour condition: the quotient needs
/// four colours, is not 3-choosable, and has a face through every vertex.
pub fn verify_glued_polygons(max_n: usize) -> Result<CheckSummary, VerifyError> {
    let start = Instant::now();
    let mut s = CheckSummary::new("glued triangulated polygons");
    let limits = ChoosabilityLimits {
        max_vertices: max_n,
        max_k: 3,
    };
    for n in 4..=max_n {
        let polygons = TriangulatedPolygon::all(n)?;
        let specs = IdentificationSpec::all(n);
        let results: Vec<(usize, usize, usize, Vec<Violation>)> = polygons
            .par_iter()
            .enumerate()
            .map(|(pi, tp)| {
                let (mut checked, mut rejected, mut off, mut bad) = (0, 0, 0, Vec::new());
                for &spec in &specs {
                    let Ok(id) = identify_edges(tp, spec) else {
                        rejected += 1;
                        continue;
                    };
                    if !id.report.color_condition {
                        off += 1;
                        continue;
                    }
                    checked += 1;
                    let key = format!("n={n} polygon={pi} {spec:?}");
                    let chi = chromatic_number(&id.graph).chromatic_number;
                    if chi < 4 {
                        bad.push(Violation {
                            instance: key.clone(),
                            detail: format!("chromatic number {chi}"),
                        });
                    }
                    match is_k_choosable(&id.graph, 3, &limits) {
                        Ok(o) if !o.is_choosable() => {}
                        other => bad.push(Violation {
                            instance: key.clone(),
                            detail: format!("3-choosability check gave {other:?}"),
                        }),
                    }
                    if id.report.all_vertices_face.is_none() {
                        bad.push(Violation {
                            instance: key,
                            detail: "no face through all vertices".into(),
                        });
                    }
                }
                (checked, rejected, off, bad)
            })
            .collect();
        let (mut checked, mut rejected, mut off) = (0, 0, 0);
        for (c, r, o, v) in results {
            checked += c;
            rejected += r;
            off += o;
            s.violations.extend(v);
        }
        s.instances += checked;
        s.skipped += rejected + off;
        s.notes.push(format!(
            "n={n}: {} polygons, {checked} gluings checked, {rejected} not simple, {off} without colour condition",
            polygons.len()
        ));
    }
    Ok(s.finish(start))
}

fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("small");
    for v in 1..n {
        g.add_edge(v, rng.gen_range(0..v)).expect("tree edge");
    }
    let p: f64 = rng.gen();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// Random signed rotation systems on connected graphs with at most `max_n`
/// vertices, plus known planar drawings.
pub fn verify_face_tracing(count: usize, seed: u64, max_n: usize) -> Result<CheckSummary, VerifyError> {
    let start = Instant::now();
    if max_n == 0 {
        return Err(VerifyError::OutOfRange("max_n must be positive".into()));
    }
    let mut s = CheckSummary::new("face tracing");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for idx in 0..count {
        let n = rng.gen_range(1..=max_n);
        let g = random_connected_graph(&mut rng, n);
        let rotations: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut r: Vec<usize> = g.neighbors(v).collect();
                r.shuffle(&mut rng);
                r
            })
            .collect();
        let signed = rng.gen_bool(0.5);
        let negative: Vec<(usize, usize)> = g.edges().into_iter().filter(|_| signed && rng.gen_bool(0.5)).collect();
        let emb = RotationEmbedding::new(g.clone(), rotations, negative).expect("valid rotation system");
        s.instances += 1;
        let key = format!("#{idx} {g:?}");
        let walk: usize = emb.faces().iter().map(|f| f.len()).sum();
        let e = g.edge_count();
        if walk != 2 * e {
            s.violation(key.clone(), format!("face walks total {walk}, 2e = {}", 2 * e));
        }
        let eps = emb.euler_genus();
        if eps < 0 || (emb.negative_edges().is_empty() && eps % 2 != 0) {
            s.violation(key, format!("Euler genus {eps}"));
        }
    }

    let mut planar: Vec<(String, RotationEmbedding)> = vec![(
        "K4".into(),
        RotationEmbedding::orientable(
            Graph::complete(4).expect("small"),
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        )
        .expect("planar K4"),
    )];
    for n in 3..=12 {
        planar.push((
            format!("C{n}"),
            RotationEmbedding::convex(Graph::cycle(n).expect("small")).expect("cycle"),
        ));
    }
    for n in 4..=max_n.max(4) {
        for (i, tp) in TriangulatedPolygon::all(n)?.iter().enumerate() {
            planar.push((format!("polygon n={n} #{i}"), tp.embedding()));
        }
    }
    for (key, emb) in planar {
        s.instances += 1;
        if emb.euler_genus() != 0 {
            s.violation(key, format!("Euler genus {}", emb.euler_genus()));
        }
    }
    s.notes.push(format!("seed={seed}, {count} random rotation systems on up to {max_n} vertices"));
    Ok(s.finish(start))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        let opts = BaseCaseOptions {
            max_n: Some(5),
            ..Default::default()
        };
        assert!(verify_small_order_base_case(1, opts).unwrap().passed());
        assert!(verify_small_order_base_case(3, opts).is_err());
        assert!(verify_greedy_suite(50, 1, 7).unwrap().passed());
        assert!(verify_degree_choosability(5, None).unwrap().passed());
        assert!(verify_gallai_uniqueness(4).unwrap().passed());
        assert!(verify_glued_polygons(7).unwrap().passed());
        assert!(verify_face_tracing(50, 3, 6).unwrap().passed());
    }

    #[test]
    fn wheel_is_the_only_small_critical_graph() {
        let s = verify_critical_edge_bound(6, &[4]).unwrap();
        assert!(s.passed());
        assert_eq!(s.instances, 1);
    }
}
