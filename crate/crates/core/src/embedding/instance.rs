use serde::Serialize;

use super::{EmbeddingError, RotationEmbedding};
use crate::coloring::{find_f_bad_clique, ListAssignment};
use crate::genus::heawood_number;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListSizeViolation {
    pub vertex: usize,
    pub on_face: bool,
    pub size: usize,
    pub required: usize,
}

/// Whether an embedded graph with lists meets the hypotheses of the
/// face-restricted Heawood bound: vertices on the distinguished face need
/// `H - 2` colours, all others `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremInstanceReport {
    pub epsilon: i64,
    /// `None` for the sphere, where the bound is not stated.
    pub heawood: Option<i64>,
    /// Euler genus 3, which the bound leaves out.
    pub excluded_genus: bool,
    pub face_index: usize,
    pub face_vertices: Vec<usize>,
    pub list_violations: Vec<ListSizeViolation>,
    /// A clique on `H - 1` vertices of the face, which excuses a failure to colour.
    pub f_bad_clique: Option<Vec<usize>>,
}

impl TheoremInstanceReport {
    pub fn lists_meet_hypothesis(&self) -> bool {
        self.heawood.is_some() && self.list_violations.is_empty()
    }

    /// The bound promises a colouring for this instance.
    pub fn coloring_guaranteed(&self) -> bool {
        self.lists_meet_hypothesis() && !self.excluded_genus && self.f_bad_clique.is_none()
    }
}

pub fn validate_theorem_instance(
    emb: &RotationEmbedding,
    face_index: usize,
    lists: &ListAssignment,
) -> Result<TheoremInstanceReport, EmbeddingError> {
    let g = emb.graph();
    if lists.len() != g.n() {
        return Err(EmbeddingError::ListCount {
            n: g.n(),
            lists: lists.len(),
        });
    }
    let face = emb.distinguished_face(face_index)?;
    let epsilon = emb.euler_genus();
    let heawood = heawood_number(&epsilon).ok();
    let mask = face.vertex_mask();
    let mut list_violations = Vec::new();
    let mut f_bad_clique = None;
    if let Some(h) = heawood {
        for v in 0..g.n() {
            let on_face = mask >> v & 1 == 1;
            let required = if on_face { h - 2 } else { h } as usize;
            let size = lists.list(v).len();
            if size < required {
                list_violations.push(ListSizeViolation {
                    vertex: v,
                    on_face,
                    size,
                    required,
                });
            }
        }
        f_bad_clique = find_f_bad_clique(g, mask, epsilon).expect("epsilon >= 1 here");
    }
    Ok(TheoremInstanceReport {
        epsilon,
        heawood,
        excluded_genus: epsilon == 3,
        face_index,
        face_vertices: face.vertices,
        list_violations,
        f_bad_clique,
    })
}
