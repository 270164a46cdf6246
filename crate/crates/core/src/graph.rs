//! A small explicit undirected simple graph used by the oracles and exports.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Null graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph {
            adj: (0..n)
                .map(|v| (0..n).filter(|&u| u != v).collect())
                .collect(),
        }
    }

    /// Builds a graph from an edge list; loops and repeated edges are ignored.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range");
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { adj }
    }

    /// Builds the graph on `0..n` whose edges are the pairs accepted by `edge`.
    pub fn from_predicate(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if edge(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        SimpleGraph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn complement(&self) -> Self {
        let n = self.vertex_count();
        SimpleGraph::from_predicate(n, |u, v| !self.has_edge(u, v))
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by the vertices where `keep` is true, renumbered in order.
    pub fn induced(&self, keep: &[bool]) -> Self {
        let mut index = vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                index[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| keep[u] && keep[v])
            .map(|(u, v)| (index[u], index[v]));
        SimpleGraph::from_edges(next, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_complement() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.is_complete());
        assert_eq!(k4.complement().edge_count(), 0);
        assert!(SimpleGraph::empty(1).is_complete());
    }

    #[test]
    fn from_edges_dedups() {
        let g = SimpleGraph::from_edges(3, [(0, 1), (1, 0), (1, 1), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_renumbers() {
        let g = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]);
        let h = g.induced(&[false, true, true, true]);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
