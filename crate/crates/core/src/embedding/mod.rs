//! Combinatorial embeddings: rotation systems with edge signs.
//!
//! Each vertex carries a cyclic order of its neighbours and each edge a sign;
//! a negative edge reverses the local orientation when crossed, which is how
//! nonorientable surfaces are described. Faces are recovered by walking the
//! rotation system, and the Euler genus follows from Euler's formula.

mod from_faces;
mod instance;

pub use instance::{validate_theorem_instance, ListSizeViolation, TheoremInstanceReport};

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{mask_of, Graph, GraphError, VertexMask};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("an embedding needs at least one vertex")]
    Empty,
    #[error("graph is not connected")]
    Disconnected,
    #[error("{rotations} rotations given for {n} vertices")]
    RotationCount { n: usize, rotations: usize },
    #[error("rotation at vertex {vertex} is not a cyclic order of its {degree} neighbours")]
    BadRotation { vertex: usize, degree: usize },
    #[error("{lists} lists given for {n} vertices")]
    ListCount { n: usize, lists: usize },
    #[error("sign given for {0}-{1}, which is not an edge")]
    SignOnNonEdge(usize, usize),
    #[error("face index {index} out of range, embedding has {faces} faces")]
    FaceIndex { index: usize, faces: usize },
    #[error("face list does not describe a surface: {0}")]
    BadFaces(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Canonical key for an undirected edge.
fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationEmbedding {
    graph: Graph,
    rotations: Vec<Vec<usize>>,
    negative: BTreeSet<(usize, usize)>,
    /// `position[v][u]` is the index of `u` in `rotations[v]`.
    position: Vec<Vec<usize>>,
}

/// One face: its boundary walk as directed edges and the set of vertices on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub walk: Vec<(usize, usize)>,
    pub vertices: Vec<usize>,
}

impl Face {
    /// Length of the boundary walk.
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    pub fn vertex_mask(&self) -> VertexMask {
        mask_of(self.vertices.iter().copied())
    }

    /// The walk as a cyclic vertex sequence.
    pub fn vertex_sequence(&self) -> Vec<usize> {
        self.walk.iter().map(|&(u, _)| u).collect()
    }
}

impl RotationEmbedding {
    /// `negative` lists the edges with sign -1, in either orientation.
    pub fn new(
        graph: Graph,
        rotations: Vec<Vec<usize>>,
        negative: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, EmbeddingError> {
        let n = graph.n();
        if n == 0 {
            return Err(EmbeddingError::Empty);
        }
        if rotations.len() != n {
            return Err(EmbeddingError::RotationCount {
                n,
                rotations: rotations.len(),
            });
        }
        if !graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let mut position = vec![vec![usize::MAX; n]; n];
        for (v, rot) in rotations.iter().enumerate() {
            let bad = EmbeddingError::BadRotation {
                vertex: v,
                degree: graph.degree(v),
            };
            if rot.len() != graph.degree(v) {
                return Err(bad);
            }
            for (i, &u) in rot.iter().enumerate() {
                if u >= n || !graph.has_edge(v, u) || position[v][u] != usize::MAX {
                    return Err(bad);
                }
                position[v][u] = i;
            }
        }
        let mut neg = BTreeSet::new();
        for (u, v) in negative {
            if !graph.has_edge(u, v) {
                return Err(EmbeddingError::SignOnNonEdge(u, v));
            }
            neg.insert(key(u, v));
        }
        Ok(Self {
            graph,
            rotations,
            negative: neg,
            position,
        })
    }

    /// All signs positive.
    pub fn orientable(graph: Graph, rotations: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        Self::new(graph, rotations, [])
    }

    pub fn from_faces(n: usize, faces: &[Vec<usize>]) -> Result<Self, EmbeddingError> {
        from_faces::from_faces(n, faces)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn sign(&self, u: usize, v: usize) -> i8 {
        if self.negative.contains(&key(u, v)) {
            -1
        } else {
            1
        }
    }

    /// Negative edges as `(u, v)` with `u < v`, sorted.
    pub fn negative_edges(&self) -> Vec<(usize, usize)> {
        self.negative.iter().copied().collect()
    }

    fn step(&self, v: usize, i: usize, o: i8) -> (usize, usize, i8) {
        let u = self.rotations[v][i];
        let o2 = o * self.sign(v, u);
        let d = self.rotations[u].len();
        let j = self.position[u][v];
        let next = if o2 > 0 { (j + 1) % d } else { (j + d - 1) % d };
        (u, next, o2)
    }

    /// The state walking the same edge side in the opposite direction.
    fn reverse(&self, v: usize, i: usize, o: i8) -> (usize, usize, i8) {
        let u = self.rotations[v][i];
        (u, self.position[u][v], -o * self.sign(v, u))
    }

    /// Faces in order of discovery, scanning vertices and rotation positions
    /// in increasing order.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.graph.n();
        if self.graph.edge_count() == 0 {
            return vec![Face {
                walk: Vec::new(),
                vertices: vec![0],
            }];
        }
        let offsets: Vec<usize> = std::iter::once(0)
            .chain(self.rotations.iter().scan(0, |acc, r| {
                *acc += r.len();
                Some(*acc)
            }))
            .collect();
        let index = |v: usize, i: usize, o: i8| 2 * (offsets[v] + i) + usize::from(o < 0);
        let total = 2 * offsets[n];
        let mut orbit = vec![usize::MAX; total];
        let mut walks: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut starts = Vec::new();
        for v in 0..n {
            for i in 0..self.rotations[v].len() {
                for o in [1i8, -1] {
                    if orbit[index(v, i, o)] != usize::MAX {
                        continue;
                    }
                    let id = walks.len();
                    let mut walk = Vec::new();
                    let mut state = (v, i, o);
                    loop {
                        orbit[index(state.0, state.1, state.2)] = id;
                        walk.push((state.0, self.rotations[state.0][state.1]));
                        state = self.step(state.0, state.1, state.2);
                        if state == (v, i, o) {
                            break;
                        }
                    }
                    walks.push(walk);
                    starts.push((v, i, o));
                }
            }
        }
        let mut faces = Vec::new();
        for (id, walk) in walks.into_iter().enumerate() {
            let (v, i, o) = starts[id];
            let (rv, ri, ro) = self.reverse(v, i, o);
            let twin = orbit[index(rv, ri, ro)];
            assert_ne!(twin, id, "face walk coincides with its own reverse");
            if id < twin {
                let mut vertices: Vec<usize> = walk.iter().map(|&(u, _)| u).collect();
                vertices.sort_unstable();
                vertices.dedup();
                faces.push(Face { walk, vertices });
            }
        }
        faces
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// `2 - n + e - f`.
    pub fn euler_genus(&self) -> i64 {
        2 - self.graph.n() as i64 + self.graph.edge_count() as i64 - self.face_count() as i64
    }

    pub fn distinguished_face(&self, index: usize) -> Result<Face, EmbeddingError> {
        let faces = self.faces();
        let count = faces.len();
        faces.into_iter().nth(index).ok_or(EmbeddingError::FaceIndex {
            index,
            faces: count,
        })
    }

    /// Reverses the rotation at `v` and flips the signs of its edges. The
    /// faces, and hence the surface, are unchanged.
    pub fn switch_vertex(&self, v: usize) -> Self {
        let mut rotations = self.rotations.clone();
        rotations[v].reverse();
        let mut negative = self.negative.clone();
        for u in self.graph.neighbors(v) {
            let k = key(u, v);
            if !negative.remove(&k) {
                negative.insert(k);
            }
        }
        Self::new(self.graph.clone(), rotations, negative).expect("switching keeps validity")
    }

    /// Vertex switches that make every sign positive, if any exist; `None`
    /// means the surface is nonorientable.
    fn orienting_switches(&self) -> Option<Vec<bool>> {
        let n = self.graph.n();
        let mut flip: Vec<Option<bool>> = vec![None; n];
        flip[0] = Some(false);
        let mut queue = vec![0];
        while let Some(v) = queue.pop() {
            let fv = flip[v].expect("visited");
            for u in self.graph.neighbors(v) {
                let want = fv ^ (self.sign(u, v) < 0);
                match flip[u] {
                    None => {
                        flip[u] = Some(want);
                        queue.push(u);
                    }
                    Some(x) if x != want => return None,
                    Some(_) => {}
                }
            }
        }
        Some(flip.into_iter().map(|x| x.expect("connected")).collect())
    }

    pub fn is_orientable(&self) -> bool {
        self.orienting_switches().is_some()
    }

    /// For an orientable embedding, the equivalent one with all signs positive.
    pub fn normalized(&self) -> Option<Self> {
        let flips = self.orienting_switches()?;
        let rotations = self
            .rotations
            .iter()
            .zip(&flips)
            .map(|(r, &f)| {
                let mut r = r.clone();
                if f {
                    r.reverse();
                }
                r
            })
            .collect();
        Some(Self::orientable(self.graph.clone(), rotations).expect("same graph"))
    }

    /// Rotation of a convex drawing with vertices `0..n` placed counterclockwise
    /// on a circle: neighbours sorted by `(w - v) mod n`. Planar for outerplanar
    /// graphs drawn in that order.
    pub fn convex(graph: Graph) -> Result<Self, EmbeddingError> {
        let n = graph.n();
        let rotations = (0..n)
            .map(|v| {
                let mut r: Vec<usize> = graph.neighbors(v).collect();
                r.sort_by_key(|&w| (w + n - v) % n);
                r
            })
            .collect();
        Self::orientable(graph, rotations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn planar_k4() -> RotationEmbedding {
        // Vertex 3 in the middle of triangle 0 1 2.
        let g = Graph::complete(4).unwrap();
        RotationEmbedding::orientable(g, vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn planar_k4_has_four_triangles() {
        let emb = planar_k4();
        let faces = emb.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3 && f.vertices.len() == 3));
        assert_eq!(emb.euler_genus(), 0);
        assert_eq!(emb.distinguished_face(2).unwrap().vertices.len(), 3);
        assert!(matches!(
            emb.distinguished_face(4),
            Err(EmbeddingError::FaceIndex { index: 4, faces: 4 })
        ));
    }

    #[test]
    fn cycle_is_planar_with_two_faces() {
        let emb = RotationEmbedding::convex(Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(emb.face_count(), 2);
        assert_eq!(emb.euler_genus(), 0);
    }

    #[test]
    fn one_negative_edge_on_a_cycle_gives_one_face() {
        // A cycle with an odd number of twisted edges is a Moebius band core:
        // one face of length 2n, Euler genus 1.
        let c5 = Graph::cycle(5).unwrap();
        let emb = RotationEmbedding::new(
            c5.clone(),
            RotationEmbedding::convex(c5).unwrap().rotations().to_vec(),
            [(0, 1)],
        )
        .unwrap();
        let faces = emb.faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 10);
        assert_eq!(emb.euler_genus(), 1);
        assert!(!emb.is_orientable());
    }

    #[test]
    fn switching_preserves_genus() {
        let emb = planar_k4();
        let s = emb.switch_vertex(1).switch_vertex(3);
        assert_eq!(s.euler_genus(), 0);
        assert_eq!(s.negative_edges().len(), 4);
        let back = s.normalized().unwrap();
        assert!(back.negative_edges().is_empty());
        assert_eq!(back.euler_genus(), 0);
    }

    #[test]
    fn rejects_malformed_input() {
        let g = Graph::complete(3).unwrap();
        assert!(matches!(
            RotationEmbedding::orientable(g.clone(), vec![vec![1, 2], vec![0, 2], vec![0]]),
            Err(EmbeddingError::BadRotation { vertex: 2, .. })
        ));
        assert!(matches!(
            RotationEmbedding::orientable(g.clone(), vec![vec![1, 1], vec![0, 2], vec![0, 1]]),
            Err(EmbeddingError::BadRotation { vertex: 0, .. })
        ));
        assert_eq!(
            RotationEmbedding::orientable(Graph::empty(0).unwrap(), vec![]),
            Err(EmbeddingError::Empty)
        );
        assert_eq!(
            RotationEmbedding::orientable(Graph::empty(2).unwrap(), vec![vec![], vec![]]),
            Err(EmbeddingError::Disconnected)
        );
    }

    #[test]
    fn single_vertex_is_a_sphere() {
        let emb = RotationEmbedding::orientable(Graph::empty(1).unwrap(), vec![vec![]]).unwrap();
        assert_eq!(emb.euler_genus(), 0);
    }
}
