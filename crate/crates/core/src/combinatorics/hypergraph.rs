use crate::error::{Error, Result};

use super::Graph;

/// A k-uniform hypergraph on vertices `0..n`. Hyperedges are sorted
/// k-subsets, stored sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformHypergraph {
    n: usize,
    k: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl UniformHypergraph {
    pub fn new(
        n: usize,
        k: usize,
        hyperedges: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<UniformHypergraph> {
        if k < 2 {
            return Err(Error::invalid("uniformity must be at least 2"));
        }
        let mut normalized = Vec::new();
        for mut e in hyperedges {
            e.sort_unstable();
            if e.len() != k {
                return Err(Error::invalid(format!(
                    "hyperedge of size {} in a {k}-uniform hypergraph",
                    e.len()
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid("hyperedge with a repeated vertex"));
            }
            if e.iter().any(|&v| v >= n) {
                return Err(Error::invalid("hyperedge vertex out of range"));
            }
            normalized.push(e);
        }
        normalized.sort();
        normalized.dedup();
        Ok(UniformHypergraph {
            n,
            k,
            hyperedges: normalized,
        })
    }

    pub fn edgeless(n: usize, k: usize) -> UniformHypergraph {
        UniformHypergraph::new(n, k, []).expect("no hyperedges")
    }

    /// A graph seen as a 2-uniform hypergraph.
    pub fn from_graph(g: &Graph) -> UniformHypergraph {
        UniformHypergraph::new(g.n(), 2, g.edges().iter().map(|&(u, v)| vec![u, v]))
            .expect("graph edges are valid hyperedges")
    }

    /// The Fano plane: 7 points, 7 triples.
    pub fn fano_plane() -> UniformHypergraph {
        UniformHypergraph::new(
            7,
            3,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .expect("valid Fano triples")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    /// Per-vertex list of incident hyperedge indices.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (idx, e) in self.hyperedges.iter().enumerate() {
            for &v in e {
                inc[v].push(idx);
            }
        }
        inc
    }

    /// Remove one hyperedge by index (used by monotonicity tests).
    pub fn without_hyperedge(&self, index: usize) -> UniformHypergraph {
        let edges = self
            .hyperedges
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != index)
            .map(|(_, e)| e.clone());
        UniformHypergraph::new(self.n, self.k, edges).expect("subset of valid hyperedges")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniformity_is_enforced() {
        assert!(UniformHypergraph::new(4, 3, [vec![0, 1]]).is_err());
        assert!(UniformHypergraph::new(4, 3, [vec![0, 1, 1]]).is_err());
        assert!(UniformHypergraph::new(4, 3, [vec![0, 1, 4]]).is_err());
        assert!(UniformHypergraph::new(4, 1, []).is_err());
    }

    #[test]
    fn duplicates_collapse() {
        let h = UniformHypergraph::new(4, 2, [vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(h.m(), 1);
        assert_eq!(h.hyperedges()[0], vec![0, 1]);
    }

    #[test]
    fn fano_has_seven_triples() {
        let h = UniformHypergraph::fano_plane();
        assert_eq!((h.n(), h.k(), h.m()), (7, 3, 7));
    }
}
