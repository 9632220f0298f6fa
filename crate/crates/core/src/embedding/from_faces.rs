//! Recovering a signed rotation system from a list of face boundaries.
//!
//! The rotation at `v` is read off the cycle formed by the corners at `v`.
//! Each corner either agrees or disagrees with that cyclic direction, and an
//! edge is negative exactly when the two corners at its ends disagree. When a
//! corner's direction is ambiguous (degree at most two) it becomes a free
//! unknown. The parity constraints form a linear system over GF(2), and the
//! solution is checked by tracing.

use std::collections::{BTreeMap, HashMap};

use super::{key, EmbeddingError, RotationEmbedding};
use crate::graph::Graph;

/// Linear system over GF(2) with rows stored as bit vectors; the last
/// column is the right-hand side.
struct Gf2 {
    vars: usize,
    rows: Vec<Vec<u64>>,
}

impl Gf2 {
    fn new(vars: usize) -> Self {
        Self {
            vars,
            rows: Vec::new(),
        }
    }

    fn equation(&mut self, vars: &[usize], rhs: bool) {
        let mut row = vec![0u64; (self.vars + 1).div_ceil(64)];
        for &x in vars {
            row[x / 64] ^= 1 << (x % 64);
        }
        if rhs {
            row[self.vars / 64] ^= 1 << (self.vars % 64);
        }
        self.rows.push(row);
    }

    /// Some solution with free variables set to zero, or `None` if inconsistent.
    fn solve(mut self) -> Option<Vec<bool>> {
        let bit = |row: &[u64], x: usize| row[x / 64] >> (x % 64) & 1 == 1;
        let mut pivots = Vec::new();
        let mut r = 0;
        for x in 0..self.vars {
            let Some(p) = (r..self.rows.len()).find(|&i| bit(&self.rows[i], x)) else {
                continue;
            };
            self.rows.swap(r, p);
            let pivot = self.rows[r].clone();
            for i in 0..self.rows.len() {
                if i != r && bit(&self.rows[i], x) {
                    for (a, b) in self.rows[i].iter_mut().zip(&pivot) {
                        *a ^= b;
                    }
                }
            }
            pivots.push(x);
            r += 1;
        }
        if self.rows[r..].iter().any(|row| bit(row, self.vars)) {
            return None;
        }
        let mut sol = vec![false; self.vars];
        for (i, &x) in pivots.iter().enumerate() {
            sol[x] = bit(&self.rows[i], self.vars);
        }
        Some(sol)
    }
}

fn bad(msg: impl Into<String>) -> EmbeddingError {
    EmbeddingError::BadFaces(msg.into())
}

/// Cyclic sequence normalised up to rotation and reversal.
fn normal_cycle(seq: &[usize]) -> Vec<usize> {
    let n = seq.len();
    let mut best: Option<Vec<usize>> = None;
    for dir in [false, true] {
        for s in 0..n {
            let c: Vec<usize> = (0..n)
                .map(|k| if dir { seq[(s + n - k) % n] } else { seq[(s + k) % n] })
                .collect();
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
    }
    best.unwrap_or_default()
}

pub(super) fn from_faces(n: usize, faces: &[Vec<usize>]) -> Result<RotationEmbedding, EmbeddingError> {
    let mut graph = Graph::empty(n)?;
    let mut sides: HashMap<(usize, usize), usize> = HashMap::new();
    for face in faces {
        if face.len() < 2 {
            return Err(bad("face with fewer than two corners"));
        }
        for k in 0..face.len() {
            let (u, v) = (face[k], face[(k + 1) % face.len()]);
            if u >= n || v >= n || u == v {
                return Err(bad(format!("invalid edge {u}-{v}")));
            }
            if !graph.has_edge(u, v) {
                graph.add_edge(u, v)?;
            }
            *sides.entry(key(u, v)).or_default() += 1;
        }
    }
    if let Some((&(u, v), &c)) = sides.iter().find(|(_, &c)| c != 2) {
        return Err(bad(format!("edge {u}-{v} lies on {c} face sides instead of 2")));
    }

    // Corners at each vertex: (face, position, previous, next).
    let mut corners: Vec<Vec<(usize, usize, usize, usize)>> = vec![Vec::new(); n];
    for (fi, face) in faces.iter().enumerate() {
        let len = face.len();
        for k in 0..len {
            let v = face[k];
            corners[v].push((fi, k, face[(k + len - 1) % len], face[(k + 1) % len]));
        }
    }

    let mut rotations = Vec::with_capacity(n);
    for v in 0..n {
        let deg = graph.degree(v);
        if corners[v].len() != deg {
            return Err(bad(format!("vertex {v} has {} corners but degree {deg}", corners[v].len())));
        }
        if deg <= 2 {
            rotations.push(graph.neighbors(v).collect::<Vec<_>>());
            continue;
        }
        let mut link: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(_, _, a, b) in &corners[v] {
            link.entry(a).or_default().push(b);
            link.entry(b).or_default().push(a);
        }
        if link.values().any(|l| l.len() != 2) {
            return Err(bad(format!("neighbourhood of vertex {v} is not a single cycle")));
        }
        let start = *link.keys().next().expect("degree > 0");
        let mut rot = vec![start];
        let mut prev = start;
        let mut cur = link[&start][0];
        while cur != start {
            rot.push(cur);
            let l = &link[&cur];
            let next = if l[0] == prev { l[1] } else { l[0] };
            prev = cur;
            cur = next;
        }
        if rot.len() != deg {
            return Err(bad(format!("neighbourhood of vertex {v} splits into several cycles")));
        }
        rotations.push(rot);
    }
    let position: Vec<HashMap<usize, usize>> = rotations
        .iter()
        .map(|r| r.iter().enumerate().map(|(i, &u)| (u, i)).collect())
        .collect();

    // Unknowns: one direction bit per corner (set when the corner runs
    // against the rotation), then one bit per edge (set when negative).
    let corner_var: HashMap<(usize, usize), usize> = faces
        .iter()
        .enumerate()
        .flat_map(|(fi, f)| (0..f.len()).map(move |k| (fi, k)))
        .enumerate()
        .map(|(i, fk)| (fk, i))
        .collect();
    let edges = graph.edges();
    let edge_var: HashMap<(usize, usize), usize> = edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, corner_var.len() + i))
        .collect();
    let mut system = Gf2::new(corner_var.len() + edges.len());

    for v in 0..n {
        let d = rotations[v].len();
        for &(fi, k, a, b) in &corners[v] {
            let (pa, pb) = (position[v][&a], position[v][&b]);
            let forward = (pa + 1) % d == pb;
            let backward = (pb + 1) % d == pa;
            let var = corner_var[&(fi, k)];
            match (forward, backward) {
                (true, false) => system.equation(&[var], false),
                (false, true) => system.equation(&[var], true),
                (true, true) => {}
                (false, false) => {
                    return Err(bad(format!("corner at vertex {v} is inconsistent with its rotation")))
                }
            }
        }
    }
    for (fi, face) in faces.iter().enumerate() {
        let len = face.len();
        for k in 0..len {
            let (u, w) = (face[k], face[(k + 1) % len]);
            let e = edge_var[&key(u, w)];
            let (cu, cw) = (corner_var[&(fi, k)], corner_var[&(fi, (k + 1) % len)]);
            system.equation(&[e, cu, cw], false);
        }
    }
    let solution = system
        .solve()
        .ok_or_else(|| bad("no consistent choice of edge signs"))?;
    let negative: Vec<(usize, usize)> = edges
        .iter()
        .filter(|e| solution[edge_var[e]])
        .copied()
        .collect();
    let emb = RotationEmbedding::new(graph, rotations, negative)?;

    let mut want: Vec<Vec<usize>> = faces.iter().map(|f| normal_cycle(f)).collect();
    let mut got: Vec<Vec<usize>> = emb.faces().iter().map(|f| normal_cycle(&f.vertex_sequence())).collect();
    want.sort();
    got.sort();
    if want != got {
        return Err(bad("traced faces differ from the given ones"));
    }
    Ok(emb)
}
