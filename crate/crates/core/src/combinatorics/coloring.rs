use crate::error::{Error, Result};

use super::{Graph, UniformHypergraph};

/// A vertex coloring with palette `0..palette`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    colors: Vec<usize>,
    palette: usize,
}

impl VertexColoring {
    pub fn new(colors: Vec<usize>, palette: usize) -> Result<VertexColoring> {
        if colors.iter().any(|&c| c >= palette) {
            return Err(Error::invalid("color outside the palette"));
        }
        Ok(VertexColoring { colors, palette })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.palette];
        for &c in &self.colors {
            seen[c] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    /// Proper for a graph: no monochromatic edge.
    pub fn is_proper_on_graph(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// Proper for a hypergraph: no monochromatic hyperedge.
    pub fn is_proper_on_hypergraph(&self, h: &UniformHypergraph) -> bool {
        self.colors.len() == h.n()
            && h.hyperedges().iter().all(|e| {
                let first = self.colors[e[0]];
                e.iter().any(|&v| self.colors[v] != first)
            })
    }

    /// First monochromatic hyperedge, if any.
    pub fn violating_hyperedge(&self, h: &UniformHypergraph) -> Option<usize> {
        h.hyperedges().iter().position(|e| {
            let first = self.colors[e[0]];
            e.iter().all(|&v| self.colors[v] == first)
        })
    }
}

/// A k-tuple coloring: every vertex gets a set of exactly `k` colors from
/// `0..palette`, stored as a bitmask (palettes are capped at 64 colors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleColoring {
    k: usize,
    palette: usize,
    sets: Vec<u64>,
}

impl TupleColoring {
    pub fn new(k: usize, palette: usize, sets: Vec<u64>) -> Result<TupleColoring> {
        if palette > 64 {
            return Err(Error::capacity("tuple colorings support at most 64 colors"));
        }
        let mask = if palette == 64 {
            u64::MAX
        } else {
            (1u64 << palette) - 1
        };
        for &s in &sets {
            if s & !mask != 0 {
                return Err(Error::invalid("tuple color outside the palette"));
            }
            if s.count_ones() as usize != k {
                return Err(Error::invalid("tuple of the wrong size"));
            }
        }
        Ok(TupleColoring { k, palette, sets })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn set(&self, v: usize) -> u64 {
        self.sets[v]
    }

    /// Proper: adjacent vertices receive disjoint tuples.
    pub fn is_proper_on_graph(&self, g: &Graph) -> bool {
        self.sets.len() == g.n()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.sets[u] & self.sets[v] == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn properness_checks() {
        let g = Graph::cycle(4);
        let proper = VertexColoring::new(vec![0, 1, 0, 1], 2).unwrap();
        let improper = VertexColoring::new(vec![0, 0, 1, 1], 2).unwrap();
        assert!(proper.is_proper_on_graph(&g));
        assert!(!improper.is_proper_on_graph(&g));

        let h = UniformHypergraph::new(3, 3, [vec![0, 1, 2]]).unwrap();
        let c = VertexColoring::new(vec![0, 0, 1], 2).unwrap();
        assert!(c.is_proper_on_hypergraph(&h));
        let mono = VertexColoring::new(vec![1, 1, 1], 2).unwrap();
        assert!(!mono.is_proper_on_hypergraph(&h));
        assert_eq!(mono.violating_hyperedge(&h), Some(0));
    }

    #[test]
    fn tuple_coloring_validation() {
        assert!(TupleColoring::new(2, 4, vec![0b0011, 0b1100]).is_ok());
        assert!(TupleColoring::new(2, 4, vec![0b0111]).is_err());
        assert!(TupleColoring::new(2, 4, vec![0b10011]).is_err());
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let t = TupleColoring::new(2, 4, vec![0b0011, 0b1100]).unwrap();
        assert!(t.is_proper_on_graph(&g));
    }
}
