use serde::Serialize;
use thiserror::Error;

use super::{verify_coloring, Color, Coloring, ColoringViolation, ListAssignment};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GreedyOutcome {
    Colored(Coloring),
    /// `vertex` found every colour of its list on an already coloured neighbour.
    Stuck {
        vertex: usize,
        partial: Coloring,
        blocked: Vec<Color>,
    },
    /// The starting colouring was improper or left a vertex out of `order`.
    InvalidStart(ColoringViolation),
}

/// Colours the vertices of `order` one at a time, each with the smallest
/// colour of its list not already on a coloured neighbour.
pub fn greedy_extend(
    g: &Graph,
    lists: &ListAssignment,
    partial: &Coloring,
    order: &[usize],
) -> GreedyOutcome {
    if let Err(e) = verify_coloring(g, lists, partial, false) {
        return GreedyOutcome::InvalidStart(e);
    }
    let mut coloring = partial.clone();
    for &v in order {
        if coloring.get(v).is_some() {
            continue;
        }
        let taken: Vec<Color> = g.neighbors(v).filter_map(|w| coloring.get(w)).collect();
        match lists.list(v).iter().find(|c| !taken.contains(c)) {
            Some(&c) => coloring.set(v, Some(c)),
            None => {
                let mut blocked = taken;
                blocked.sort_unstable();
                blocked.dedup();
                return GreedyOutcome::Stuck {
                    vertex: v,
                    partial: coloring,
                    blocked,
                };
            }
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| coloring.get(v).is_none()) {
        return GreedyOutcome::InvalidStart(ColoringViolation::Uncolored(v));
    }
    verify_coloring(g, lists, &coloring, true).expect("greedy colouring is proper");
    GreedyOutcome::Colored(coloring)
}

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
pub enum GreedyDegreeError {
    #[error("need at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("{lists} lists for {n} vertices")]
    LengthMismatch { n: usize, lists: usize },
    #[error("vertex {vertex} has a list of size {size}, need at least {needed}")]
    ListTooSmall {
        vertex: usize,
        size: usize,
        needed: usize,
    },
    #[error("{count} vertices have degree at least {threshold}, at most {threshold} allowed")]
    TooManyHighDegree { count: usize, threshold: usize },
    #[error("greedy colouring got stuck at vertex {0} although the hypotheses hold")]
    GuaranteeBroken(usize),
}

/// The vertex order used by [`greedy_degree_color`]: nonincreasing degree, ties by index.
pub fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Colours a `k`-vertex graph whose lists all have size at least `k - 2` and
/// which has at most `k - 2` vertices of degree `k - 2` or more.
///
/// Greedy in nonincreasing degree order: the high-degree vertices come first
/// and each sees at most `k - 3` coloured neighbours, and every later vertex
/// has degree at most `k - 3`.
pub fn greedy_degree_color(g: &Graph, lists: &ListAssignment) -> Result<Coloring, GreedyDegreeError> {
    let k = g.n();
    if k < 3 {
        return Err(GreedyDegreeError::TooFewVertices(k));
    }
    if lists.len() != k {
        return Err(GreedyDegreeError::LengthMismatch {
            n: k,
            lists: lists.len(),
        });
    }
    if let Some(v) = (0..k).find(|&v| lists.list(v).len() < k - 2) {
        return Err(GreedyDegreeError::ListTooSmall {
            vertex: v,
            size: lists.list(v).len(),
            needed: k - 2,
        });
    }
    let high = (0..k).filter(|&v| g.degree(v) >= k - 2).count();
    if high > k - 2 {
        return Err(GreedyDegreeError::TooManyHighDegree {
            count: high,
            threshold: k - 2,
        });
    }
    match greedy_extend(g, lists, &Coloring::uncolored(k), &degree_order(g)) {
        GreedyOutcome::Colored(c) => Ok(c),
        GreedyOutcome::Stuck { vertex, .. } => Err(GreedyDegreeError::GuaranteeBroken(vertex)),
        GreedyOutcome::InvalidStart(e) => unreachable!("empty start is valid: {e}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_with_coloured_centre() {
        let g = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        let lists = ListAssignment::new(vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 1], vec![3, 0]]);
        let start = Coloring::from_partial(vec![Some(0), None, None, None, None]);
        match greedy_extend(&g, &lists, &start, &[1, 2, 3, 4]) {
            GreedyOutcome::Colored(c) => assert_eq!(c.get(4), Some(3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn stuck_reports_witness() {
        let g = Graph::path(2).unwrap();
        let lists = ListAssignment::new(vec![vec![4], vec![4]]);
        let start = Coloring::from_partial(vec![Some(4), None]);
        assert_eq!(
            greedy_extend(&g, &lists, &start, &[1]),
            GreedyOutcome::Stuck {
                vertex: 1,
                partial: start.clone(),
                blocked: vec![4]
            }
        );
    }

    #[test]
    fn greedy_degree_examples() {
        let c4_plus = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let lists = ListAssignment::uniform(5, 3);
        let c = greedy_degree_color(&c4_plus, &lists).unwrap();
        assert!(verify_coloring(&c4_plus, &lists, &c, true).is_ok());

        let k5 = Graph::complete(5).unwrap();
        assert_eq!(
            greedy_degree_color(&k5, &lists),
            Err(GreedyDegreeError::TooManyHighDegree {
                count: 5,
                threshold: 3
            })
        );
        assert!(matches!(
            greedy_degree_color(&c4_plus, &ListAssignment::uniform(5, 2)),
            Err(GreedyDegreeError::ListTooSmall { needed: 3, .. })
        ));
    }
}
