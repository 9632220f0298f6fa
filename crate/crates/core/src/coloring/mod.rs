//! List assignments, colourings and the exact searches over them.

mod choosability;
mod greedy;
mod solver;

pub use choosability::{
    degree_choosable, is_f_choosable, is_f_choosable_within, is_gallai_tree, is_k_choosable, ChoosabilityLimits,
    ChoosabilityOutcome, DegreeChoosability, DegreeMethod,
};
pub use greedy::{greedy_extend, greedy_degree_color, GreedyOutcome, GreedyDegreeError};
pub use solver::{chromatic_number, solve_list_coloring, ChromaticResult};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::genus::{heawood_number, GenusError};
use crate::graph::{bits, contains_clique, mask_of, Graph, VertexMask};

pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("{lists} lists given for a graph on {n} vertices")]
    LengthMismatch { n: usize, lists: usize },
    #[error("instance needs {0} distinct colours after reduction, at most 128 are supported")]
    TooManyColors(usize),
    #[error("instance exceeds the configured limit: {0}")]
    OverLimit(String),
    #[error("vertex {vertex} needs a list of size {size}, which is not supported")]
    BadListSize { vertex: usize, size: usize },
}

/// One colour list per vertex. Lists are kept sorted and free of repeats.
///
/// Empty lists are allowed so that unsatisfiable inputs can be represented;
/// every search reports them as uncolourable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<Color>>) -> Self {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        Self { lists }
    }

    /// Every vertex gets `{0, 1, ..., k-1}`.
    pub fn uniform(n: usize, k: usize) -> Self {
        Self {
            lists: vec![(0..k as Color).collect(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, v: usize, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    /// All colours that occur in some list, sorted.
    pub fn palette(&self) -> Vec<Color> {
        let mut p: Vec<Color> = self.lists.iter().flatten().copied().collect();
        p.sort_unstable();
        p.dedup();
        p
    }

    /// Applies `f` to every colour; the result is renormalised.
    pub fn map_colors(&self, f: impl Fn(Color) -> Color) -> Self {
        Self::new(
            self.lists
                .iter()
                .map(|l| l.iter().map(|&c| f(c)).collect())
                .collect(),
        )
    }

    /// Copy with `c` deleted from the lists of the vertices in `mask`.
    pub fn without_color(&self, c: Color, mask: VertexMask) -> Self {
        let lists = self
            .lists
            .iter()
            .enumerate()
            .map(|(v, l)| {
                if mask >> v & 1 == 1 {
                    l.iter().copied().filter(|&x| x != c).collect()
                } else {
                    l.clone()
                }
            })
            .collect();
        Self { lists }
    }

    /// Lists restricted to the given vertices, in the given order.
    pub fn restrict(&self, vs: &[usize]) -> Self {
        Self {
            lists: vs.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }

    pub(crate) fn check_len(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.lists.len() != g.n() {
            return Err(ColoringError::LengthMismatch {
                n: g.n(),
                lists: self.lists.len(),
            });
        }
        Ok(())
    }
}

/// A total or partial colouring; `None` marks an uncoloured vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Self {
            colors: vec![None; n],
        }
    }

    pub fn from_total(colors: Vec<Color>) -> Self {
        Self {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn from_partial(colors: Vec<Option<Color>>) -> Self {
        Self { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: Option<Color>) {
        self.colors[v] = c;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn colored_mask(&self) -> VertexMask {
        mask_of((0..self.colors.len()).filter(|&v| self.colors[v].is_some()))
    }

    /// Number of distinct colours used.
    pub fn color_count(&self) -> usize {
        let mut used: Vec<Color> = self.colors.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
pub enum ColoringViolation {
    #[error("colouring covers {got} vertices, graph has {n}")]
    LengthMismatch { n: usize, got: usize },
    #[error("vertex {0} is uncoloured")]
    Uncolored(usize),
    #[error("vertex {vertex} has colour {color}, which is not in its list")]
    NotInList { vertex: usize, color: Color },
    #[error("adjacent vertices {u} and {v} share colour {color}")]
    Conflict { u: usize, v: usize, color: Color },
}

/// Checks that `coloring` is proper on its coloured vertices and respects
/// the lists; with `require_total`, also that every vertex is coloured.
///
/// Written without reference to any search so that it can certify the
/// output of all of them.
pub fn verify_coloring(
    g: &Graph,
    lists: &ListAssignment,
    coloring: &Coloring,
    require_total: bool,
) -> Result<(), ColoringViolation> {
    if coloring.len() != g.n() || lists.len() != g.n() {
        return Err(ColoringViolation::LengthMismatch {
            n: g.n(),
            got: coloring.len().min(lists.len()),
        });
    }
    for v in 0..g.n() {
        match coloring.get(v) {
            None if require_total => return Err(ColoringViolation::Uncolored(v)),
            None => {}
            Some(c) if !lists.list(v).contains(&c) => {
                return Err(ColoringViolation::NotInList { vertex: v, color: c })
            }
            Some(_) => {}
        }
    }
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (coloring.get(u), coloring.get(v)) {
            if a == b {
                return Err(ColoringViolation::Conflict { u, v, color: a });
            }
        }
    }
    Ok(())
}

/// A clique on `H(epsilon) - 1` vertices lying inside `face_vertices`.
pub fn find_f_bad_clique(
    g: &Graph,
    face_vertices: VertexMask,
    epsilon: i64,
) -> Result<Option<Vec<usize>>, GenusError> {
    let h = heawood_number(&epsilon)? as usize;
    let on_face: Vec<usize> = bits(face_vertices & g.vertex_mask()).collect();
    let sub = g.induced_subgraph(&on_face).expect("face vertices are in range");
    Ok(contains_clique(&sub, h - 1).map(|c| c.into_iter().map(|i| on_face[i]).collect()))
}
