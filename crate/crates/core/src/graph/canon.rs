//! Canonical labelling and isomorphism-class enumeration for small graphs.
//!
//! The canonical form is the minimum upper-triangle adjacency code over all
//! leaves of an individualisation-refinement tree. No automorphism pruning is
//! done, which is fine at the sizes used here.

use std::collections::HashSet;

use thiserror::Error;

use super::{bits, Graph};

/// Largest vertex count with a canonical code (the upper triangle must fit in a `u64`).
pub const CANON_MAX_VERTICES: usize = 11;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("canonical forms are limited to {CANON_MAX_VERTICES} vertices, got {0}")]
pub struct CanonError(pub usize);

type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s].iter().fold(0u64, |m, &v| m | 1 << v);
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.neighbor_mask(v) & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
            }
            cells = next;
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}

fn code_of(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(u64, Vec<usize>)>) {
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    for &v in &cells[t] {
        let mut split = cells.clone();
        let rest: Vec<usize> = cells[t].iter().copied().filter(|&u| u != v).collect();
        split.splice(t..=t, [vec![v], rest]);
        search(g, refine(g, split), best);
    }
}

/// Canonical ordering: `order[i]` is the original vertex placed at position `i`.
fn canonical_order(g: &Graph) -> (u64, Vec<usize>) {
    if g.n() == 0 {
        return (0, Vec::new());
    }
    let mut best = None;
    search(g, refine(g, vec![(0..g.n()).collect()]), &mut best);
    best.expect("search reaches a leaf")
}

/// Isomorphism-invariant code; two graphs on the same number of vertices are
/// isomorphic iff their codes agree.
pub fn canonical_code(g: &Graph) -> Result<u64, CanonError> {
    if g.n() > CANON_MAX_VERTICES {
        return Err(CanonError(g.n()));
    }
    Ok(canonical_order(g).0)
}

pub fn canonical_form(g: &Graph) -> Result<Graph, CanonError> {
    if g.n() > CANON_MAX_VERTICES {
        return Err(CanonError(g.n()));
    }
    let (_, order) = canonical_order(g);
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.relabel(&perm))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, CanonError> {
    Ok(a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a)? == canonical_code(b)?)
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, sorted by canonical code.
pub fn graph_classes(n: usize) -> Result<Vec<Graph>, CanonError> {
    if n > CANON_MAX_VERTICES {
        return Err(CanonError(n));
    }
    let mut level = vec![Graph::empty(0).expect("empty graph")];
    for m in 1..=n {
        level = extend_by_vertex(&level, m)?;
    }
    Ok(level)
}

/// Connected classes on `n` vertices.
pub fn connected_graph_classes(n: usize) -> Result<Vec<Graph>, CanonError> {
    Ok(graph_classes(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// Every class on `m` vertices arises by adding a vertex to a class on `m - 1`.
fn extend_by_vertex(prev: &[Graph], m: usize) -> Result<Vec<Graph>, CanonError> {
    use rayon::prelude::*;
    let found: Vec<(u64, Graph)> = prev
        .par_iter()
        .flat_map_iter(|g| {
            (0u64..1 << (m - 1)).map(move |nbrs| {
                let mut rows: Vec<u64> = (0..m - 1)
                    .map(|v| g.neighbor_mask(v) | (nbrs >> v & 1) << (m - 1))
                    .collect();
                rows.push(nbrs);
                let h = Graph::from_rows(rows);
                let (code, _) = canonical_order(&h);
                (code, h)
            })
        })
        .collect();
    let mut seen = HashSet::new();
    let mut out: Vec<(u64, Graph)> = Vec::new();
    for (code, h) in found {
        if seen.insert(code) {
            out.push((code, canonical_form(&h)?));
        }
    }
    out.sort_unstable_by_key(|(code, _)| *code);
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// Orbits of the automorphism group, as vertex masks, computed by brute
/// comparison of canonical codes after individualising each vertex.
pub fn vertex_orbits(g: &Graph) -> Result<Vec<u64>, CanonError> {
    if g.n() > CANON_MAX_VERTICES {
        return Err(CanonError(g.n()));
    }
    let n = g.n();
    let keys: Vec<u64> = (0..n)
        .map(|v| {
            let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            let mut best = None;
            search(g, refine(g, vec![vec![v], rest]), &mut best);
            best.expect("leaf").0
        })
        .collect();
    let mut orbits: Vec<u64> = Vec::new();
    let mut done = 0u64;
    for v in 0..n {
        if done >> v & 1 == 1 {
            continue;
        }
        let orbit = (v..n).filter(|&u| keys[u] == keys[v]).fold(0u64, |m, u| m | 1 << u);
        done |= orbit;
        orbits.push(orbit);
    }
    debug_assert_eq!(orbits.iter().map(|o| bits(*o).count()).sum::<usize>(), n);
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphic_relabellings_share_a_code() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let perm = [4, 2, 0, 5, 1, 3];
        let h = g.relabel(&perm);
        assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn distinguishes_non_isomorphic_regular_graphs() {
        // C6 versus two disjoint triangles.
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &tt).unwrap());
    }

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| graph_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
        let connected: Vec<usize> = (1..=5)
            .map(|n| connected_graph_classes(n).unwrap().len())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn orbits_of_a_path() {
        assert_eq!(vertex_orbits(&Graph::path(4).unwrap()).unwrap(), vec![0b1001, 0b0110]);
    }
}
