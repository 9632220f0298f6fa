//! Critical graphs: brute-force criticality tests and edge-count bounds for
//! critical graphs.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{solve_list_coloring, Coloring, ColoringError, ListAssignment};
use crate::genus::{genus_window, GenusError};
use crate::graph::Graph;

/// Default cap on vertices for [`is_l_critical`].
pub const DEFAULT_CRITICALITY_LIMIT: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalityError {
    #[error("criticality test limited to {limit} vertices, graph has {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("the edge bound needs k >= 4, got {0}")]
    KTooSmall(usize),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Deletion {
    Vertex { v: usize },
    Edge { u: usize, v: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionCertificate {
    pub deletion: Deletion,
    /// A colouring of the graph with the deletion applied. For a vertex
    /// deletion the removed vertex is left uncoloured; for an edge deletion
    /// the two ends may share a colour.
    pub coloring: Coloring,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "witness", rename_all = "snake_case")]
pub enum CriticalityWitness {
    /// The whole graph is colourable, so it is not critical.
    Colorable { coloring: Coloring },
    /// Deleting this still leaves an uncolourable graph.
    UncolorableDeletion { deletion: Deletion },
    /// Colourings after every single deletion.
    Certificates { certificates: Vec<DeletionCertificate> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub is_critical: bool,
    pub witness: CriticalityWitness,
}

/// Colouring of `g` minus vertex `v`, with `v` uncoloured.
fn color_without_vertex(
    g: &Graph,
    lists: &ListAssignment,
    v: usize,
) -> Result<Option<Coloring>, ColoringError> {
    let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    let sub = g.induced_subgraph(&keep).expect("in range");
    Ok(solve_list_coloring(&sub, &lists.restrict(&keep))?.map(|c| {
        let mut full = Coloring::uncolored(g.n());
        for (i, &u) in keep.iter().enumerate() {
            full.set(u, c.get(i));
        }
        full
    }))
}

/// Whether `g` is not `L`-colourable while every proper subgraph is.
///
/// Colourability is monotone under taking subgraphs, so it is enough to
/// check the graphs obtained by deleting a single edge or a single vertex.
pub fn is_l_critical(
    g: &Graph,
    lists: &ListAssignment,
    limit: usize,
) -> Result<CriticalityReport, CriticalityError> {
    if g.n() > limit {
        return Err(CriticalityError::TooLarge { n: g.n(), limit });
    }
    if let Some(coloring) = solve_list_coloring(g, lists)? {
        return Ok(CriticalityReport {
            is_critical: false,
            witness: CriticalityWitness::Colorable { coloring },
        });
    }
    let deletions: Vec<Deletion> = (0..g.n())
        .map(|v| Deletion::Vertex { v })
        .chain(g.edges().into_iter().map(|(u, v)| Deletion::Edge { u, v }))
        .collect();
    let results: Vec<Result<(Deletion, Option<Coloring>), ColoringError>> = deletions
        .par_iter()
        .map(|&d| {
            let c = match d {
                Deletion::Vertex { v } => color_without_vertex(g, lists, v)?,
                Deletion::Edge { u, v } => {
                    solve_list_coloring(&g.without_edge(u, v).expect("edge exists"), lists)?
                }
            };
            Ok((d, c))
        })
        .collect();
    let mut certificates = Vec::with_capacity(results.len());
    for r in results {
        let (deletion, coloring) = r?;
        match coloring {
            Some(coloring) => certificates.push(DeletionCertificate { deletion, coloring }),
            None => {
                return Ok(CriticalityReport {
                    is_critical: false,
                    witness: CriticalityWitness::UncolorableDeletion { deletion },
                })
            }
        }
    }
    Ok(CriticalityReport {
        is_critical: true,
        witness: CriticalityWitness::Certificates { certificates },
    })
}

/// `k`-critical: critical for identical lists `{0, .., k-2}`, i.e. chromatic
/// number `k` with every proper subgraph `(k-1)`-colourable.
pub fn is_k_critical(g: &Graph, k: usize, limit: usize) -> Result<CriticalityReport, CriticalityError> {
    is_l_critical(g, &ListAssignment::uniform(g.n(), k.saturating_sub(1)), limit)
}

/// `2e >= (k-1)n + k - 3`, which every `K_k`-free graph that is critical for
/// `(k-1)`-lists satisfies.
pub fn ks_edge_bound(n: usize, e: usize, k: usize) -> Result<bool, CriticalityError> {
    if k < 4 {
        return Err(CriticalityError::KTooSmall(k));
    }
    Ok(2 * e + 3 >= (k - 1) * n + k)
}

/// Both sides of the edge-count chain that rules out a list-critical
/// subgraph on `nprime` vertices inside a graph on `H + 1` vertices, all on
/// one face, in a Special Case genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialCaseBound {
    pub epsilon: i64,
    pub heawood: i64,
    pub i: i64,
    pub nprime: i64,
    /// Lower bound on `2e'` for the critical subgraph itself.
    pub critical_lower: i64,
    /// Lower bound on `2e*` after adding the extra vertex (if any) and the
    /// `H - 2` face diagonals.
    pub lower: i64,
    /// Euler bound `6(H + 1) + 6(epsilon - 2)` on `2e*`.
    pub upper: i64,
    /// `lower - upper`; positive means the case is impossible.
    pub margin: i64,
    pub contradiction: bool,
}

pub fn special_case_bound(epsilon: i64, nprime: i64) -> Result<SpecialCaseBound, GenusError> {
    let w = genus_window(&epsilon)?;
    if !w.special {
        return Err(GenusError::NotSpecialCase(epsilon.to_string()));
    }
    let h = w.heawood;
    if nprime != h && nprime != h + 1 {
        return Err(GenusError::CriticalOrderOutOfRange {
            heawood: h.to_string(),
            nprime: nprime.to_string(),
        });
    }
    // Critical for (H-2)-lists, so k = H - 1 in the edge bound.
    let k = h - 1;
    let critical_lower = (k - 1) * nprime + k - 3;
    let extra_vertex = if nprime == h { 2 * (h - 2) } else { 0 };
    let diagonals = 2 * (h - 2);
    let lower = critical_lower + extra_vertex + diagonals;
    let upper = 6 * (h + 1) + 6 * (epsilon - 2);
    Ok(SpecialCaseBound {
        epsilon,
        heawood: h,
        i: w.i,
        nprime,
        critical_lower,
        lower,
        upper,
        margin: lower - upper,
        contradiction: lower > upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_critical_with_three_lists() {
        let k4 = Graph::complete(4).unwrap();
        let r = is_l_critical(&k4, &ListAssignment::uniform(4, 3), 12).unwrap();
        assert!(r.is_critical);
        match r.witness {
            CriticalityWitness::Certificates { certificates } => assert_eq!(certificates.len(), 10),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pendant_vertex_breaks_criticality() {
        let mut g = Graph::complete(4).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        g.add_edge(0, 4).unwrap();
        let r = is_l_critical(&g, &ListAssignment::uniform(5, 3), 12).unwrap();
        assert!(!r.is_critical);
        assert_eq!(
            r.witness,
            CriticalityWitness::UncolorableDeletion {
                deletion: Deletion::Vertex { v: 4 }
            }
        );
    }

    #[test]
    fn wheel_and_even_cycle() {
        let w5 = Graph::complete(1).unwrap().join(&Graph::cycle(5).unwrap()).unwrap();
        assert!(is_k_critical(&w5, 4, 12).unwrap().is_critical);
        let c6 = is_k_critical(&Graph::cycle(6).unwrap(), 3, 12).unwrap();
        assert!(matches!(c6.witness, CriticalityWitness::Colorable { .. }));
        assert!(is_k_critical(&Graph::complete(13).unwrap(), 13, 12).is_err());
    }

    #[test]
    fn edge_bound_examples() {
        assert_eq!(ks_edge_bound(10, 43, 9), Ok(true));
        assert_eq!(ks_edge_bound(7, 10, 4), Ok(false));
        assert_eq!(ks_edge_bound(4, 6, 4), Ok(false));
        assert_eq!(ks_edge_bound(4, 6, 3), Err(CriticalityError::KTooSmall(3)));
    }

    #[test]
    fn special_case_bound_examples() {
        let r = special_case_bound(9, 10).unwrap();
        assert_eq!((r.lower, r.upper, r.margin), (118, 108, 10));
        let r = special_case_bound(9, 11).unwrap();
        assert_eq!((r.lower, r.upper), (110, 108));
        assert!(r.contradiction);
        let r = special_case_bound(3, 8).unwrap();
        assert_eq!((r.lower, r.upper, r.margin), (53, 54, -1));
        assert!(!r.contradiction);
        assert!(special_case_bound(4, 8).is_err());
        assert!(special_case_bound(9, 12).is_err());
    }
}
