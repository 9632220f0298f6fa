//! Exact list-colouring by backtracking.
//!
//! Colours are remapped to dense indices so that every domain is a `u128`.
//! Branching picks the uncoloured vertex with the fewest remaining colours
//! (lowest index on ties) and tries its colours in increasing order.
//! Colours that nobody has used yet and that appear in exactly the same
//! uncoloured lists are interchangeable, so only the first of each such
//! group is tried.

use serde::Serialize;

use super::{verify_coloring, Color, Coloring, ColoringError, ListAssignment};
use crate::graph::{bits, Graph, VertexMask};

pub(crate) struct Dense {
    pub adj: Vec<VertexMask>,
    pub lists: Vec<u128>,
    pub palette: Vec<Color>,
}

fn bits128(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let c = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(c)
        }
    })
}

/// Dense form of an instance. A vertex whose list is longer than its degree
/// can always be coloured last, so its list is cut to `degree + 1` colours;
/// this never changes colourability and keeps palettes small.
pub(crate) fn densify(g: &Graph, lists: &ListAssignment) -> Result<Dense, ColoringError> {
    lists.check_len(g)?;
    let trimmed: Vec<&[Color]> = (0..g.n())
        .map(|v| {
            let l = lists.list(v);
            &l[..l.len().min(g.degree(v) + 1)]
        })
        .collect();
    let mut palette: Vec<Color> = trimmed.iter().flat_map(|l| l.iter().copied()).collect();
    palette.sort_unstable();
    palette.dedup();
    if palette.len() > 128 {
        return Err(ColoringError::TooManyColors(palette.len()));
    }
    let dense_lists = trimmed
        .iter()
        .map(|l| {
            l.iter().fold(0u128, |m, c| {
                m | 1u128 << palette.binary_search(c).expect("colour in palette")
            })
        })
        .collect();
    Ok(Dense {
        adj: (0..g.n()).map(|v| g.neighbor_mask(v)).collect(),
        lists: dense_lists,
        palette,
    })
}

struct Search<'a> {
    adj: &'a [VertexMask],
    holders: Vec<VertexMask>,
    domain: Vec<u128>,
    color: Vec<Option<u8>>,
    uncolored: VertexMask,
    used: u128,
    use_count: Vec<u32>,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        let mut pick = None;
        let mut best = u32::MAX;
        for v in bits(self.uncolored) {
            let d = self.domain[v].count_ones();
            if d < best {
                best = d;
                pick = Some(v);
                if d <= 1 {
                    break;
                }
            }
        }
        let Some(v) = pick else { return true };
        if best == 0 {
            return false;
        }
        let mut fresh_signatures: Vec<VertexMask> = Vec::new();
        for c in bits128(self.domain[v]) {
            if self.used >> c & 1 == 0 {
                let sig = self.holders[c] & self.uncolored;
                if fresh_signatures.contains(&sig) {
                    continue;
                }
                fresh_signatures.push(sig);
            }
            let bit = 1u128 << c;
            let touched = bits(self.adj[v] & self.uncolored)
                .filter(|&w| self.domain[w] & bit != 0)
                .fold(0u64, |m, w| m | 1 << w);
            let mut wiped = false;
            for w in bits(touched) {
                self.domain[w] &= !bit;
                wiped |= self.domain[w] == 0;
            }
            self.color[v] = Some(c as u8);
            self.uncolored &= !(1 << v);
            self.use_count[c] += 1;
            self.used |= bit;
            if !wiped && self.run() {
                return true;
            }
            self.use_count[c] -= 1;
            if self.use_count[c] == 0 {
                self.used &= !bit;
            }
            self.uncolored |= 1 << v;
            self.color[v] = None;
            for w in bits(touched) {
                self.domain[w] |= bit;
            }
        }
        false
    }
}

/// Colour indices into `dense.lists`, or `None` when no colouring exists.
pub(crate) fn solve_dense(adj: &[VertexMask], lists: &[u128]) -> Option<Vec<u8>> {
    let n = adj.len();
    let mut holders = vec![0u64; 128];
    for (v, &l) in lists.iter().enumerate() {
        for c in bits128(l) {
            holders[c] |= 1 << v;
        }
    }
    let mut s = Search {
        adj,
        holders,
        domain: lists.to_vec(),
        color: vec![None; n],
        uncolored: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        used: 0,
        use_count: vec![0; 128],
    };
    s.run()
        .then(|| s.color.into_iter().map(|c| c.expect("all coloured")).collect())
}

/// A proper colouring from the lists, or `None` when none exists.
///
/// Every returned colouring has passed [`verify_coloring`].
pub fn solve_list_coloring(
    g: &Graph,
    lists: &ListAssignment,
) -> Result<Option<Coloring>, ColoringError> {
    lists.check_len(g)?;
    if lists.lists().iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let dense = densify(g, lists)?;
    let Some(found) = solve_dense(&dense.adj, &dense.lists) else {
        return Ok(None);
    };
    let coloring = Coloring::from_total(found.iter().map(|&c| dense.palette[c as usize]).collect());
    verify_coloring(g, lists, &coloring, true).expect("solver produced an invalid colouring");
    Ok(Some(coloring))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub chromatic_number: usize,
    /// Colouring with exactly `chromatic_number` colours `0..chromatic_number`.
    pub coloring: Coloring,
}

/// Chromatic number by trying `k = clique lower bound, k + 1, ...` with
/// identical lists.
pub fn chromatic_number(g: &Graph) -> ChromaticResult {
    if g.n() == 0 {
        return ChromaticResult {
            chromatic_number: 0,
            coloring: Coloring::uncolored(0),
        };
    }
    let start = if g.edge_count() == 0 { 1 } else { 2 };
    for k in start..=g.n() {
        let lists = ListAssignment::uniform(g.n(), k);
        if let Some(coloring) = solve_list_coloring(g, &lists).expect("uniform lists are small") {
            return ChromaticResult {
                chromatic_number: k,
                coloring,
            };
        }
    }
    unreachable!("n colours always suffice")
}
