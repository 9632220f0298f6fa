//! Generators for the graph families the theory talks about: complete graphs
//! with edges removed, Gallai's critical joins, the Special Case family, and
//! triangulated polygons with two boundary edges glued together.

use std::collections::{BTreeMap, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::ListAssignment;
use crate::embedding::{EmbeddingError, RotationEmbedding};
use crate::genus::{edge_bound, genus_window, special_case_status, GenusError, SpecialCaseStatus};
use crate::graph::{contains_clique, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{0}")]
    Domain(String),
    #[error("diagonals do not triangulate the {n}-gon: {reason}")]
    BadTriangulation { n: usize, reason: String },
    #[error("boundary edges starting at {first} and {second} share a vertex")]
    EdgesNotDisjoint { first: usize, second: usize },
    #[error("identification would create a loop at polygon vertices {0} and {1}")]
    Loop(usize, usize),
    #[error("identification would create a parallel edge between merged vertices {0} and {1}")]
    ParallelEdge(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Genus(#[from] GenusError),
}

/// `K_n` with the given pairs removed. Every pair must be a distinct edge.
pub fn complete_minus(n: usize, missing: &[(usize, usize)]) -> Result<Graph, GraphError> {
    let mut g = Graph::complete(n)?;
    for &(u, v) in missing {
        g.remove_edge(u, v)?;
    }
    Ok(g)
}

/// `K_{k-3} + C_5`: the clique on `0..k-3`, the 5-cycle on the last five
/// vertices. It is `k`-critical and has clique number `k - 1`.
pub fn gallai_join(k: usize) -> Result<Graph, ConstructionError> {
    if k < 4 {
        return Err(ConstructionError::Domain(format!("gallai_join needs k >= 4, got {k}")));
    }
    Ok(Graph::complete(k - 3)?.join(&Graph::cycle(5)?)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialCaseInstance {
    pub i: i64,
    pub epsilon: i64,
    pub heawood: i64,
    /// `K_{H-5} + C_5`.
    pub graph: Graph,
    /// Identical lists of size `H - 3`, which cannot be used to colour `graph`.
    pub lists: ListAssignment,
}

/// The Special Case family: for `ε = (3i² + 3i)/2` and `H = 3i + 4`, the
/// graph `K_{H-5} + C_5` has no `K_{H-2}` yet is not `(H-3)`-colourable.
pub fn special_case_family(i: i64) -> Result<SpecialCaseInstance, ConstructionError> {
    if i < 2 {
        return Err(ConstructionError::Domain(format!("family starts at i = 2, got {i}")));
    }
    let heawood = 3 * i + 4;
    let epsilon = (3 * i * i + 3 * i) / 2;
    let k = usize::try_from(heawood - 2).map_err(|_| GenusError::Overflow(i.to_string()))?;
    let graph = gallai_join(k)?;
    let lists = ListAssignment::uniform(graph.n(), k - 1);
    Ok(SpecialCaseInstance {
        i,
        epsilon,
        heawood,
        graph,
        lists,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum PolygonShape {
    /// Diagonals `(0, j)`.
    Fan,
    /// Zig-zag strip `0, 1, n-1, 2, n-2, ...`.
    Snake,
    /// Random ear removal.
    Random { seed: u64 },
}

/// A polygon `0, 1, .., n-1` with non-crossing diagonals cutting it into
/// triangles, together with its 3-colouring (unique up to renaming colours).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangulatedPolygon {
    n: usize,
    diagonals: Vec<(usize, usize)>,
    colors: Vec<u8>,
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let inside = |x: usize| a < x && x < b;
    a != c && a != d && b != c && b != d && inside(c) != inside(d)
}

impl TriangulatedPolygon {
    pub fn new(n: usize, diagonals: &[(usize, usize)]) -> Result<Self, ConstructionError> {
        let bad = |reason: String| ConstructionError::BadTriangulation { n, reason };
        if n < 4 {
            return Err(ConstructionError::Domain(format!("polygon needs n >= 4, got {n}")));
        }
        if diagonals.len() != n - 3 {
            return Err(bad(format!("{} diagonals, expected {}", diagonals.len(), n - 3)));
        }
        let mut ds: Vec<(usize, usize)> = diagonals.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        ds.sort_unstable();
        for (idx, &(u, v)) in ds.iter().enumerate() {
            if v >= n {
                return Err(bad(format!("vertex {v} out of range")));
            }
            if v - u < 2 || (u == 0 && v == n - 1) {
                return Err(bad(format!("{u}-{v} is not a diagonal")));
            }
            if idx > 0 && ds[idx - 1] == (u, v) {
                return Err(bad(format!("{u}-{v} repeated")));
            }
            if let Some(&other) = ds[..idx].iter().find(|&&o| crosses(o, (u, v))) {
                return Err(bad(format!("{u}-{v} crosses {}-{}", other.0, other.1)));
            }
        }
        let mut tp = Self {
            n,
            diagonals: ds,
            colors: Vec::new(),
        };
        tp.colors = tp.propagate_coloring();
        Ok(tp)
    }

    pub fn generate(n: usize, shape: PolygonShape) -> Result<Self, ConstructionError> {
        if n < 4 {
            return Err(ConstructionError::Domain(format!("polygon needs n >= 4, got {n}")));
        }
        let diagonals: Vec<(usize, usize)> = match shape {
            PolygonShape::Fan => (2..n - 1).map(|j| (0, j)).collect(),
            PolygonShape::Snake => {
                let mut order = vec![0, 1];
                let (mut lo, mut hi) = (2, n - 1);
                while lo <= hi {
                    if order.len() % 2 == 0 {
                        order.push(hi);
                        hi -= 1;
                    } else {
                        order.push(lo);
                        lo += 1;
                    }
                }
                order.windows(2).skip(1).take(n - 3).map(|w| (w[0], w[1])).collect()
            }
            PolygonShape::Random { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut ring: Vec<usize> = (0..n).collect();
                let mut out = Vec::with_capacity(n - 3);
                while ring.len() > 3 {
                    let j = rng.gen_range(0..ring.len());
                    let len = ring.len();
                    out.push((ring[(j + len - 1) % len], ring[(j + 1) % len]));
                    ring.remove(j);
                }
                out
            }
        };
        Self::new(n, &diagonals)
    }

    /// Every triangulation of the labelled `n`-gon (a Catalan number of them).
    pub fn all(n: usize) -> Result<Vec<Self>, ConstructionError> {
        if n < 4 {
            return Err(ConstructionError::Domain(format!("polygon needs n >= 4, got {n}")));
        }
        // Triangulations of the sub-polygon i..=j, as diagonal lists.
        fn rec(i: usize, j: usize, n: usize, out: &mut Vec<Vec<(usize, usize)>>) {
            if j - i < 2 {
                out.push(Vec::new());
                return;
            }
            for k in i + 1..j {
                let mut left = Vec::new();
                rec(i, k, n, &mut left);
                let mut right = Vec::new();
                rec(k, j, n, &mut right);
                for l in &left {
                    for r in &right {
                        let mut d = l.clone();
                        d.extend_from_slice(r);
                        for (a, b) in [(i, k), (k, j)] {
                            if b - a >= 2 && !(a == 0 && b == n - 1) {
                                d.push((a, b));
                            }
                        }
                        out.push(d);
                    }
                }
            }
        }
        let mut all = Vec::new();
        rec(0, n - 1, n, &mut all);
        all.iter().map(|d| Self::new(n, d)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    /// Colour of each vertex, with vertex 0 coloured 0 and vertex 1 coloured 1.
    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color_classes(&self) -> [Vec<usize>; 3] {
        let mut classes: [Vec<usize>; 3] = Default::default();
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c as usize].push(v);
        }
        classes
    }

    pub fn graph(&self) -> Graph {
        let cycle = (0..self.n).map(|v| (v, (v + 1) % self.n));
        Graph::from_edges(self.n, cycle.chain(self.diagonals.iter().copied())).expect("valid polygon")
    }

    /// The inner faces, each as a sorted vertex triple.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let g = self.graph();
        let mut out = Vec::new();
        for (u, v) in g.edges() {
            for w in g.neighbors(v).filter(|&w| w > v && g.has_edge(u, w)) {
                out.push([u, v, w]);
            }
        }
        out
    }

    /// Planar embedding with the polygon drawn convex.
    pub fn embedding(&self) -> RotationEmbedding {
        RotationEmbedding::convex(self.graph()).expect("polygon is connected")
    }

    fn propagate_coloring(&self) -> Vec<u8> {
        let g = self.graph();
        let mut colors: Vec<Option<u8>> = vec![None; self.n];
        colors[0] = Some(0);
        colors[1] = Some(1);
        let triangles = self.triangles();
        let mut changed = true;
        while changed {
            changed = false;
            for t in &triangles {
                let known: Vec<u8> = t.iter().filter_map(|&v| colors[v]).collect();
                if known.len() == 2 {
                    let v = *t.iter().find(|&&v| colors[v].is_none()).expect("one missing");
                    colors[v] = Some(3 - known[0] - known[1]);
                    changed = true;
                }
            }
        }
        let colors: Vec<u8> = colors.into_iter().map(|c| c.expect("triangulated polygon is connected")).collect();
        debug_assert!(g.edges().iter().all(|&(u, v)| colors[u] != colors[v]));
        colors
    }
}

pub fn triangulated_polygon(n: usize, shape: PolygonShape) -> Result<TriangulatedPolygon, ConstructionError> {
    TriangulatedPolygon::generate(n, shape)
}

/// Glue boundary edge `(first, first+1)` to boundary edge `(second, second+1)`
/// (indices mod `n`). Without a twist `first` meets `second + 1` and
/// `first + 1` meets `second`, giving an orientable surface; with a twist
/// `first` meets `second` and `first + 1` meets `second + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentificationSpec {
    pub first: usize,
    pub second: usize,
    pub twist: bool,
}

impl IdentificationSpec {
    /// The two merged pairs of polygon vertices.
    pub fn pairs(&self, n: usize) -> [(usize, usize); 2] {
        let (p, q) = (self.first % n, self.second % n);
        let (p1, q1) = ((p + 1) % n, (q + 1) % n);
        if self.twist {
            [(p, q), (p1, q1)]
        } else {
            [(p, q1), (p1, q)]
        }
    }

    /// Every pair of disjoint boundary edges, in both gluing directions.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for first in 0..n {
            for second in first + 2..n {
                if (second + 1) % n == first {
                    continue;
                }
                for twist in [false, true] {
                    out.push(Self { first, second, twist });
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentificationReport {
    pub spec: IdentificationSpec,
    pub merged: [(usize, usize); 2],
    /// Some merged pair joins two colour classes of the polygon, so the
    /// quotient has no 3-colouring.
    pub color_condition: bool,
    pub euler_genus: i64,
    pub orientable: bool,
    /// A face of the quotient embedding through every vertex.
    pub all_vertices_face: Option<usize>,
    pub induced_k4: bool,
    /// Distance in the polygon between the two glued edges.
    pub edge_distance: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identified {
    pub graph: Graph,
    pub embedding: RotationEmbedding,
    /// Polygon vertices behind each quotient vertex.
    pub labels: Vec<Vec<usize>>,
    pub report: IdentificationReport,
}

fn bfs_distance(g: &Graph, from: &[usize], to: &[usize]) -> usize {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &v in from {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    to.iter().map(|&v| dist[v]).min().unwrap_or(usize::MAX)
}

/// Glue two boundary edges of a triangulated polygon and embed the quotient
/// so that one face passes through every vertex: the projective plane for a
/// twisted gluing, the torus otherwise.
///
/// Gluings whose quotient would have a loop or a parallel edge are rejected.
/// Gluings that violate the colour condition are built anyway and flagged in
/// the report.
pub fn identify_edges(tp: &TriangulatedPolygon, spec: IdentificationSpec) -> Result<Identified, ConstructionError> {
    let n = tp.n;
    let (p, q) = (spec.first % n, spec.second % n);
    let (p1, q1) = ((p + 1) % n, (q + 1) % n);
    if p == q || p1 == q || q1 == p {
        return Err(ConstructionError::EdgesNotDisjoint {
            first: spec.first,
            second: spec.second,
        });
    }
    let merged = spec.pairs(n);
    let mut rep: Vec<usize> = (0..n).collect();
    for &(a, b) in &merged {
        rep[a.max(b)] = a.min(b);
    }
    let reps: Vec<usize> = (0..n).filter(|&v| rep[v] == v).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in reps.iter().enumerate() {
        index[v] = i;
    }
    let q_of: Vec<usize> = (0..n).map(|v| index[rep[v]]).collect();
    let labels: Vec<Vec<usize>> = reps
        .iter()
        .map(|&r| (0..n).filter(|&v| rep[v] == r).collect())
        .collect();

    let poly = tp.graph();
    let glued = {
        let (a, b) = (q_of[p], q_of[p1]);
        (a.min(b), a.max(b))
    };
    let mut multiplicity: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, v) in poly.edges() {
        let (a, b) = (q_of[u], q_of[v]);
        if a == b {
            return Err(ConstructionError::Loop(u, v));
        }
        *multiplicity.entry((a.min(b), a.max(b))).or_default() += 1;
    }
    for (&e, &m) in &multiplicity {
        let allowed = if e == glued { 2 } else { 1 };
        if m > allowed {
            return Err(ConstructionError::ParallelEdge(e.0, e.1));
        }
    }
    let graph = Graph::from_edges(reps.len(), multiplicity.keys().copied())?;

    let third = |a: usize, b: usize| -> usize {
        tp.triangles()
            .iter()
            .find(|t| t.contains(&a) && t.contains(&b))
            .and_then(|t| t.iter().copied().find(|&w| w != a && w != b))
            .expect("boundary edge lies on one triangle")
    };
    let (wa, wb) = (third(p, p1), third(q, q1));
    let map = |walk: Vec<usize>| -> Vec<usize> { walk.into_iter().map(|v| q_of[v]).collect() };
    let mut faces: Vec<Vec<usize>> = Vec::new();
    if spec.twist {
        faces.extend(tp.triangles().into_iter().map(|t| map(t.to_vec())));
        // Boundary p+1 .. q, then back from p-1 down to q+2.
        let mut walk: Vec<usize> = (0..).map(|s| (p1 + s) % n).take_while(|&v| v != q1).collect();
        walk.extend((1..).map(|s| (p + n - s) % n).take_while(|&v| v != q1));
        faces.push(map(walk));
    } else {
        let (ta, tb) = (sorted3(p, p1, wa), sorted3(q, q1, wb));
        faces.extend(
            tp.triangles()
                .into_iter()
                .filter(|t| *t != ta && *t != tb)
                .map(|t| map(t.to_vec())),
        );
        faces.push(map(vec![p, wa, p1, wb]));
        faces.push(map((0..n).collect()));
    }
    let traced = RotationEmbedding::from_faces(reps.len(), &faces)?;
    let embedding = if spec.twist {
        traced
    } else {
        traced
            .normalized()
            .ok_or_else(|| EmbeddingError::BadFaces("glued surface is not orientable".into()))?
    };
    debug_assert_eq!(embedding.graph(), &graph);

    let full = graph.vertex_mask();
    let all_vertices_face = embedding.faces().iter().position(|f| f.vertex_mask() == full);
    let colors = tp.colors();
    let report = IdentificationReport {
        spec,
        merged,
        color_condition: merged.iter().any(|&(a, b)| colors[a] != colors[b]),
        euler_genus: embedding.euler_genus(),
        orientable: embedding.is_orientable(),
        all_vertices_face,
        induced_k4: contains_clique(&graph, 4).is_some(),
        edge_distance: bfs_distance(&poly, &[p, p1], &[q, q1]),
    };
    Ok(Identified {
        graph,
        embedding,
        labels,
        report,
    })
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport {
    pub epsilon: i64,
    pub heawood: i64,
    pub vertices: i64,
    /// Edges of `K_{H+1}` minus one edge.
    pub edges: i64,
    pub edge_bound: i64,
    /// Euler's formula does not rule out the embedding.
    pub feasible: bool,
    pub special: bool,
    pub status: Option<SpecialCaseStatus>,
}

/// Whether Euler's formula allows `K_{H+1} − E` on the surface of Euler
/// genus `epsilon`, and what is known about it in the Special Cases.
pub fn k_h_plus1_minus_e_feasibility(epsilon: i64) -> Result<FeasibilityReport, GenusError> {
    let w = genus_window(&epsilon)?;
    let vertices = w.heawood + 1;
    let edges = vertices * (vertices - 1) / 2 - 1;
    let bound = edge_bound(&vertices, &epsilon)?;
    Ok(FeasibilityReport {
        epsilon,
        heawood: w.heawood,
        vertices,
        edges,
        edge_bound: bound,
        feasible: edges <= bound,
        special: w.special,
        status: special_case_status(&w),
    })
}
