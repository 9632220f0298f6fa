//! Exhaustive choosability testing.
//!
//! For a size function `f`, the question is whether every assignment with
//! `|L(v)| = f(v)` admits an `L`-colouring. The search rests on three
//! reductions, each of which keeps the answer exact:
//!
//! * a vertex with `f(v) > deg(v)` can be deleted (it is coloured last);
//! * components are independent;
//! * if some `G - v` already fails, so does `G` (give `v` fresh colours).
//!
//! Once every `G - v` is known to be `f`-choosable, assignments are
//! enumerated colour by colour. A colour is identified with the set of
//! vertices whose lists contain it, so an assignment up to renaming is a
//! multiset of vertex sets. Colours are grouped by their least vertex and
//! emitted in decreasing order inside each group, which visits each multiset
//! once.
//!
//! A prefix of colours is abandoned as soon as some nonempty set `X` can be
//! coloured from the colours chosen so far in a way that settles every
//! completion. Colours added later are new, so a vertex outside `X` loses
//! exactly those colours of its `X`-neighbours that are already in its list.
//! If peeling vertices whose remaining list beats their remaining degree
//! leaves only vertices that lost nothing, the rest is colourable because all
//! proper induced subgraphs are. At a complete assignment the same test with
//! `X = V` is an ordinary colouring, so an assignment that survives to the
//! end is a genuine counterexample.

use std::collections::HashMap;

use serde::Serialize;

use super::solver::solve_dense;
use super::{solve_list_coloring, Color, ColoringError, ListAssignment};
use crate::graph::{bits, block_cut_tree, Graph, VertexMask};

/// Size caps for the exhaustive searches. Exceeding them is refused rather
/// than attempted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChoosabilityLimits {
    pub max_vertices: usize,
    pub max_k: usize,
}

impl Default for ChoosabilityLimits {
    fn default() -> Self {
        Self {
            max_vertices: 8,
            max_k: 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ChoosabilityOutcome {
    Choosable,
    /// An assignment with the required list sizes that admits no colouring.
    NotChoosable { witness: ListAssignment },
}

impl ChoosabilityOutcome {
    pub fn is_choosable(&self) -> bool {
        matches!(self, Self::Choosable)
    }

    pub fn witness(&self) -> Option<&ListAssignment> {
        match self {
            Self::Choosable => None,
            Self::NotChoosable { witness } => Some(witness),
        }
    }
}

/// Lists on a subset of vertices that already admit no colouring there.
type Witness = Vec<(usize, Vec<Color>)>;

/// Hard cap for the enumeration: colour sets are `u64` masks over colour
/// indices, and every useful colour lies in at least two lists.
const MAX_LIST_TOTAL: usize = 128;

struct Engine<'a> {
    g: &'a Graph,
    f: &'a [usize],
    palette: usize,
    memo: HashMap<VertexMask, Option<Witness>>,
}

impl Engine<'_> {
    fn bad_within(&mut self, mask: VertexMask) -> Option<Witness> {
        let mut m = mask;
        loop {
            let mut changed = false;
            for v in bits(m) {
                if self.f[v] == 0 {
                    return Some(vec![(v, Vec::new())]);
                }
                if self.f[v] > (self.g.neighbor_mask(v) & m).count_ones() as usize {
                    m &= !(1 << v);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for comp in self.g.components_within(m) {
            if let Some(w) = self.bad_connected(comp) {
                return Some(w);
            }
        }
        None
    }

    fn bad_connected(&mut self, comp: VertexMask) -> Option<Witness> {
        if let Some(known) = self.memo.get(&comp) {
            return known.clone();
        }
        let found = self.search_connected(comp);
        self.memo.insert(comp, found.clone());
        found
    }

    fn search_connected(&mut self, comp: VertexMask) -> Option<Witness> {
        for v in bits(comp) {
            if let Some(w) = self.bad_within(comp & !(1 << v)) {
                return Some(w);
            }
        }
        let mut order: Vec<usize> = bits(comp).collect();
        order.sort_by_key(|&v| (self.f[v], std::cmp::Reverse(self.g.degree(v)), v));
        let adj: Vec<VertexMask> = order
            .iter()
            .map(|&v| {
                order
                    .iter()
                    .enumerate()
                    .filter(|(_, &w)| self.g.has_edge(v, w))
                    .fold(0, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let f: Vec<usize> = order.iter().map(|&v| self.f[v]).collect();

        // Nested lists {0, .., f(v)-1} are one cheap candidate.
        let nested: Vec<u128> = f.iter().map(|&k| (1u128 << k) - 1).collect();
        if solve_dense(&adj, &nested).is_none() {
            return Some(
                order
                    .iter()
                    .zip(&f)
                    .map(|(&v, &k)| (v, (0..k as Color).collect()))
                    .collect(),
            );
        }

        let mut search = ColorSearch::new(adj, f, self.palette);
        if search.start() {
            Some(
                order
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (v, search.list_of(i)))
                    .collect(),
            )
        } else {
            None
        }
    }
}

struct ColorSearch {
    adj: Vec<VertexMask>,
    f: Vec<usize>,
    rem: Vec<usize>,
    palette: usize,
    classes: Vec<VertexMask>,
    lists: Vec<u64>,
    /// Scratch for the settling test: vertices currently coloured with each colour.
    holders: Vec<VertexMask>,
    color_of: Vec<usize>,
}

impl ColorSearch {
    fn new(adj: Vec<VertexMask>, f: Vec<usize>, palette: usize) -> Self {
        let m = adj.len();
        Self {
            adj,
            rem: f.clone(),
            f,
            palette,
            classes: Vec::new(),
            lists: vec![0; m],
            holders: Vec::new(),
            color_of: vec![0; m],
        }
    }

    fn list_of(&self, v: usize) -> Vec<Color> {
        bits(self.lists[v]).map(|c| c as Color).collect()
    }

    fn remaining(&self) -> VertexMask {
        (0..self.rem.len())
            .filter(|&v| self.rem[v] > 0)
            .fold(0, |m, v| m | 1 << v)
    }

    fn start(&mut self) -> bool {
        match (0..self.rem.len()).find(|&v| self.rem[v] > 0) {
            Some(v) => self.grow(v, VertexMask::MAX),
            None => false,
        }
    }

    /// Adds colours whose least vertex is `v`, each no larger than `upper`.
    /// Returns true with the assignment left in place once a counterexample
    /// is complete.
    fn grow(&mut self, v: usize, upper: VertexMask) -> bool {
        if self.classes.len() >= self.palette {
            return false;
        }
        let avail = self.remaining() & !(1 << v);
        let mut sub = avail;
        loop {
            let s = sub | 1 << v;
            if s <= upper && !self.has_isolated(s) {
                self.push(s);
                if !self.dead() && !self.closed_coloring_exists() {
                    let found = if self.rem[v] > 0 {
                        self.grow(v, s)
                    } else {
                        match (v + 1..self.rem.len()).find(|&u| self.rem[u] > 0) {
                            Some(u) => self.grow(u, VertexMask::MAX),
                            None => true,
                        }
                    };
                    if found {
                        return true;
                    }
                }
                self.pop();
            }
            if sub == 0 {
                return false;
            }
            sub = (sub - 1) & avail;
        }
    }

    /// A vertex of `s` with no neighbour in `s` could always take this colour.
    fn has_isolated(&self, s: VertexMask) -> bool {
        bits(s).any(|w| self.adj[w] & s == 0)
    }

    fn push(&mut self, s: VertexMask) {
        let c = self.classes.len();
        self.classes.push(s);
        for w in bits(s) {
            self.rem[w] -= 1;
            self.lists[w] |= 1 << c;
        }
    }

    fn pop(&mut self) {
        let s = self.classes.pop().expect("pop after push");
        let c = self.classes.len();
        for w in bits(s) {
            self.rem[w] += 1;
            self.lists[w] &= !(1 << c);
        }
    }

    /// Some vertex still needs colours but no neighbour does, so any later
    /// colour on it would be isolated.
    fn dead(&self) -> bool {
        let r = self.remaining();
        bits(r).any(|w| self.adj[w] & r == 0)
    }

    fn closed_coloring_exists(&mut self) -> bool {
        self.holders.clear();
        self.holders.resize(self.classes.len(), 0);
        for x0 in 0..self.adj.len() {
            if self.lists[x0] == 0 {
                continue;
            }
            let forbidden = (1u64 << x0) - 1;
            if self.extend(0, 1 << x0, forbidden) {
                return true;
            }
        }
        false
    }

    /// Whether colouring `colored` as recorded already settles every
    /// completion. Uncoloured vertices lose the colours of coloured
    /// neighbours that are in their current lists; later colours are new and
    /// never lost. Vertices whose remaining list exceeds their remaining
    /// degree are peeled off (they can be coloured last). Whatever is left
    /// must have lost nothing, and is then colourable as a proper induced
    /// subgraph.
    fn settled(&self, colored: VertexMask) -> bool {
        let m = self.adj.len();
        let mut left = !colored & ((1u64 << m) - 1);
        let mut size = [0usize; 64];
        let mut lost = 0u64;
        for v in bits(left) {
            let seen = bits(self.adj[v] & colored).fold(0u64, |acc, w| acc | 1 << self.color_of[w]);
            let loss = (seen & self.lists[v]).count_ones() as usize;
            size[v] = self.f[v] - loss;
            if loss > 0 {
                lost |= 1 << v;
            }
        }
        loop {
            let peel = bits(left)
                .filter(|&v| size[v] > (self.adj[v] & left).count_ones() as usize)
                .fold(0u64, |acc, v| acc | 1 << v);
            if peel == 0 {
                break;
            }
            left &= !peel;
        }
        left & lost == 0
    }

    fn extend(&mut self, colored: VertexMask, must: VertexMask, forbidden: VertexMask) -> bool {
        if colored != 0 && self.settled(colored) {
            return true;
        }
        let pending = must & !colored;
        if pending == 0 {
            return false;
        }
        let v = pending.trailing_zeros() as usize;
        let mut options = self.lists[v];
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            if self.holders[c] & self.adj[v] != 0 {
                continue;
            }
            let forced = self.adj[v] & self.classes[c] & !colored;
            if forced & forbidden != 0 {
                continue;
            }
            self.holders[c] |= 1 << v;
            self.color_of[v] = c;
            let ok = self.extend(colored | 1 << v, must | forced, forbidden);
            self.holders[c] &= !(1 << v);
            if ok {
                return true;
            }
        }
        false
    }
}

/// Whether every assignment with `|L(v)| = f[v]` is colourable, with a
/// counterexample when not.
pub fn is_f_choosable(g: &Graph, f: &[usize]) -> Result<ChoosabilityOutcome, ColoringError> {
    is_f_choosable_within(g, f, usize::MAX)
}

/// As [`is_f_choosable`], but only assignments drawing on at most `palette`
/// colours in total are searched. A `Choosable` answer is then relative to
/// that palette; a witness is always genuine.
pub fn is_f_choosable_within(
    g: &Graph,
    f: &[usize],
    palette: usize,
) -> Result<ChoosabilityOutcome, ColoringError> {
    if f.len() != g.n() {
        return Err(ColoringError::LengthMismatch {
            n: g.n(),
            lists: f.len(),
        });
    }
    let total: usize = f.iter().sum();
    if total > MAX_LIST_TOTAL {
        return Err(ColoringError::OverLimit(format!(
            "list sizes sum to {total}, at most {MAX_LIST_TOTAL} supported"
        )));
    }
    let mut engine = Engine {
        g,
        f,
        palette,
        memo: HashMap::new(),
    };
    let Some(partial) = engine.bad_within(g.vertex_mask()) else {
        return Ok(ChoosabilityOutcome::Choosable);
    };
    let mut lists: Vec<Option<Vec<Color>>> = vec![None; g.n()];
    let mut next = partial
        .iter()
        .flat_map(|(_, l)| l.iter().copied())
        .max()
        .map_or(0, |c| c + 1);
    for (v, l) in partial {
        lists[v] = Some(l);
    }
    let lists = lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| {
            l.unwrap_or_else(|| {
                let fresh = (next..next + f[v] as Color).collect();
                next += f[v] as Color;
                fresh
            })
        })
        .collect();
    let witness = ListAssignment::new(lists);
    debug_assert_eq!(witness.sizes(), f);
    assert!(
        solve_list_coloring(g, &witness)?.is_none(),
        "choosability witness turned out colourable"
    );
    Ok(ChoosabilityOutcome::NotChoosable { witness })
}

/// Whether `g` is `k`-choosable, refusing instances beyond `limits`.
pub fn is_k_choosable(
    g: &Graph,
    k: usize,
    limits: &ChoosabilityLimits,
) -> Result<ChoosabilityOutcome, ColoringError> {
    if g.n() > limits.max_vertices {
        return Err(ColoringError::OverLimit(format!(
            "{} vertices, limit {}",
            g.n(),
            limits.max_vertices
        )));
    }
    if k > limits.max_k {
        return Err(ColoringError::OverLimit(format!("k = {k}, limit {}", limits.max_k)));
    }
    let uniform = ListAssignment::uniform(g.n(), k);
    if k > 0 && solve_list_coloring(g, &uniform)?.is_none() {
        return Ok(ChoosabilityOutcome::NotChoosable { witness: uniform });
    }
    is_f_choosable(g, &vec![k; g.n()])
}

/// Connected, and every block is a complete graph or an odd cycle.
pub fn is_gallai_tree(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    block_cut_tree(g).blocks.iter().all(|&b| {
        let size = b.count_ones() as usize;
        let edges = g.edges_within(b);
        edges == size * (size - 1) / 2 || (size % 2 == 1 && edges == size)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeMethod {
    /// Decided by exhaustive search over assignments.
    BruteForce,
    /// Too large for the search; answered from the block structure alone.
    CharacterizationOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeChoosability {
    pub choosable: bool,
    pub gallai_tree: bool,
    pub method: DegreeMethod,
    pub witness: Option<ListAssignment>,
}

impl DegreeChoosability {
    /// Whether the search result matches "not a Gallai tree".
    pub fn agrees_with_blocks(&self) -> bool {
        self.choosable != self.gallai_tree
    }
}

/// Whether `g` is colourable from every assignment with `|L(v)| = deg(v)`.
pub fn degree_choosable(
    g: &Graph,
    limits: &ChoosabilityLimits,
) -> Result<DegreeChoosability, ColoringError> {
    if !g.is_connected() {
        return Err(ColoringError::OverLimit("graph must be connected".into()));
    }
    let gallai_tree = is_gallai_tree(g);
    if g.n() > limits.max_vertices {
        return Ok(DegreeChoosability {
            choosable: !gallai_tree,
            gallai_tree,
            method: DegreeMethod::CharacterizationOnly,
            witness: None,
        });
    }
    let outcome = is_f_choosable(g, &g.degrees())?;
    Ok(DegreeChoosability {
        choosable: outcome.is_choosable(),
        gallai_tree,
        method: DegreeMethod::BruteForce,
        witness: outcome.witness().cloned(),
    })
}
