use serde::Serialize;

use super::{bits, clique_number, Graph, VertexMask};
use crate::genus::min_genus_complete;

/// Blocks and cutvertices of a graph.
///
/// Isolated vertices appear as one-vertex blocks and bridges as two-vertex
/// blocks, so every vertex lies in at least one block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    /// Vertex sets of the blocks, sorted by mask.
    pub blocks: Vec<VertexMask>,
    pub cutvertices: Vec<usize>,
    /// `(block index, cutvertex)` pairs, one per incidence.
    pub incidences: Vec<(usize, usize)>,
    /// Number of connected components of the input.
    pub components: usize,
}

impl BlockCutTree {
    pub fn is_connected_input(&self) -> bool {
        self.components == 1
    }

    pub fn block_vertices(&self, b: usize) -> Vec<usize> {
        bits(self.blocks[b]).collect()
    }

    /// Blocks containing vertex `v`.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b] >> v & 1 == 1)
            .collect()
    }

    /// Degree of a cutvertex node in the tree, i.e. the number of blocks it lies on.
    pub fn cutvertex_degree(&self, c: usize) -> usize {
        self.incidences.iter().filter(|&&(_, x)| x == c).count()
    }

    pub fn block_degree(&self, b: usize) -> usize {
        self.incidences.iter().filter(|&&(x, _)| x == b).count()
    }

    /// Blocks with at most one cutvertex.
    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.block_degree(b) <= 1)
            .collect()
    }

    /// Whether the block/cutvertex incidence graph is acyclic. Always true
    /// for a correct decomposition; exposed for testing.
    pub fn is_forest(&self) -> bool {
        let nodes = self.blocks.len() + self.cutvertices.len();
        nodes == 0 || self.incidences.len() + self.components == nodes
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexMask>,
}

impl Dfs<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        for w in self.g.neighbors(u) {
            if self.disc[w] == 0 {
                self.stack.push((u, w));
                self.visit(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut block = 0u64;
                    while let Some((a, b)) = self.stack.pop() {
                        block |= 1 << a | 1 << b;
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

pub fn block_cut_tree(g: &Graph) -> BlockCutTree {
    let n = g.n();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    let mut components = 0;
    for v in 0..n {
        if dfs.disc[v] == 0 {
            components += 1;
            if g.degree(v) == 0 {
                dfs.disc[v] = usize::MAX;
                dfs.blocks.push(1 << v);
            } else {
                dfs.visit(v, None);
            }
        }
    }
    let mut blocks = dfs.blocks;
    blocks.sort_unstable();

    let mut membership = vec![0usize; n];
    for &b in &blocks {
        for v in bits(b) {
            membership[v] += 1;
        }
    }
    let cutvertices: Vec<usize> = (0..n).filter(|&v| membership[v] > 1).collect();
    let incidences = blocks
        .iter()
        .enumerate()
        .flat_map(|(i, &b)| {
            cutvertices
                .iter()
                .filter(move |&&c| b >> c & 1 == 1)
                .map(move |&c| (i, c))
        })
        .collect();
    BlockCutTree {
        blocks,
        cutvertices,
        incidences,
        components,
    }
}

/// Lower bound on the Euler genus of `g` from its blocks.
///
/// Euler genus is additive over blocks, and a block containing `K_m` needs
/// at least the genus of `K_m`; blocks without a triangle contribute zero.
pub fn genus_lower_bound_blocks(g: &Graph) -> i64 {
    block_cut_tree(g)
        .blocks
        .iter()
        .map(|&b| {
            let omega = clique_number(&g.induced_by_mask(b)) as i64;
            if omega >= 3 {
                min_genus_complete(&omega).expect("omega >= 3").0
            } else {
                0
            }
        })
        .sum()
}
