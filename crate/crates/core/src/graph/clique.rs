use super::{bits, Graph, VertexMask};

/// Greedy colouring bound: number of colour classes needed to cover `cand`
/// with independent sets. Upper-bounds the largest clique inside `cand`.
fn colour_bound(g: &Graph, mut cand: VertexMask) -> usize {
    let mut classes = 0;
    while cand != 0 {
        classes += 1;
        let mut avail = cand;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !g.neighbor_mask(v);
            cand &= !(1 << v);
        }
    }
    classes
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    best: VertexMask,
    target: usize,
}

impl Search<'_> {
    /// Clique size a branch must beat to be worth exploring.
    fn floor(&self) -> usize {
        let best = self.best.count_ones() as usize;
        if self.target == usize::MAX {
            best
        } else {
            best.max(self.target - 1)
        }
    }

    fn expand(&mut self, current: VertexMask, cand: VertexMask) {
        let size = current.count_ones() as usize;
        if size > self.best.count_ones() as usize {
            self.best = current;
        }
        if self.best.count_ones() as usize >= self.target {
            return;
        }
        if size + colour_bound(self.g, cand) <= self.floor() {
            return;
        }
        let mut cand = cand;
        for i in 0..self.order.len() {
            let v = self.order[i];
            if cand >> v & 1 == 0 {
                continue;
            }
            if size + cand.count_ones() as usize <= self.floor() {
                return;
            }
            self.expand(current | 1 << v, cand & self.g.neighbor_mask(v));
            if self.best.count_ones() as usize >= self.target {
                return;
            }
            cand &= !(1 << v);
        }
    }
}

fn search(g: &Graph, target: usize) -> VertexMask {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut s = Search {
        g,
        order,
        best: 0,
        target,
    };
    s.expand(0, g.vertex_mask());
    s.best
}

/// Some `m`-clique of `g`, if there is one. Exact.
pub fn contains_clique(g: &Graph, m: usize) -> Option<Vec<usize>> {
    if m == 0 {
        return Some(Vec::new());
    }
    let best = search(g, m);
    (best.count_ones() as usize >= m).then(|| bits(best).take(m).collect())
}

pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    bits(search(g, usize::MAX)).collect()
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let k6e = Graph::complete(6).unwrap().without_edge(0, 1).unwrap();
        let c = contains_clique(&k6e, 5).unwrap();
        assert_eq!(c.len(), 5);
        assert!(k6e.is_clique(super::super::mask_of(c)));

        let k5c5 = Graph::complete(5).unwrap().join(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(contains_clique(&k5c5, 8), None);
        assert_eq!(clique_number(&k5c5), 7);

        assert_eq!(contains_clique(&Graph::cycle(5).unwrap(), 3), None);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()), 1);
    }
}
