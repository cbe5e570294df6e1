use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as unordered pairs `(u, v)` with `u < v`, sorted and
/// deduplicated, together with per-vertex sorted neighbor lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if normalized.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("duplicate edge"));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, []).expect("no edges")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("valid clique")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges = (0..n).map(|u| (u, (u + 1) % n));
        Graph::new(n, edges).expect("valid cycle")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree together with the least vertex attaining it.
    pub fn max_degree(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .map(|v| (v, self.degree(v)))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .map(|(v, d)| (d, v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, edges).expect("valid complement")
    }

    /// Induced subgraph on `vertices` (deduplicated, sorted); returns the
    /// subgraph together with the map from new indices to original ones.
    pub fn induced(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut map: Vec<usize> = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        if map.iter().any(|&v| v >= self.n) {
            return Err(Error::invalid("induced vertex out of range"));
        }
        let index_of = |v: usize| map.binary_search(&v).ok();
        let mut edges = Vec::new();
        for (new_u, &u) in map.iter().enumerate() {
            for &v in &self.adj[u] {
                if v > u {
                    if let Some(new_v) = index_of(v) {
                        edges.push((new_u, new_v));
                    }
                }
            }
        }
        let g = Graph::new(map.len(), edges)?;
        Ok((g, map))
    }

    /// Neighbor sets as 64-bit word bitsets, for the exact solvers.
    pub(crate) fn adjacency_bits(&self) -> Vec<Vec<u64>> {
        let words = self.n.div_ceil(64);
        let mut bits = vec![vec![0u64; words]; self.n];
        for &(u, v) in &self.edges {
            bits[u][v / 64] |= 1 << (v % 64);
            bits[v][u / 64] |= 1 << (u % 64);
        }
        bits
    }

    /// BFS 2-coloring; `None` when some component is not bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn adjacency_is_consistent() {
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 3)]).unwrap();
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.degree(0), 2);
        assert!(g.has_edge(3, 0));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let g = Graph::complete(5).complement();
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::cycle(5);
        let (sub, map) = g.induced(&[0, 1, 3]).unwrap();
        assert_eq!(map, vec![0, 1, 3]);
        assert_eq!(sub.edges(), &[(0, 1)]);
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert!(Graph::cycle(4).bipartition().is_some());
        assert!(Graph::cycle(5).bipartition().is_none());
    }
}
