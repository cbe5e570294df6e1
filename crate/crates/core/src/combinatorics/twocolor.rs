//! Hypergraph 2-colorability and neighborhood 2-coloring.

use crate::error::{Error, Result};
use crate::limits::SearchLimits;

use super::{Graph, UniformHypergraph, VertexColoring};

/// A proper 2-coloring of `h` if one exists. For 2-uniform hypergraphs this
/// is bipartiteness by breadth-first search; for k >= 3 it is backtracking
/// with unit propagation on almost-monochromatic hyperedges, under the
/// capacity limit.
pub fn is_two_colorable(
    h: &UniformHypergraph,
    limits: &SearchLimits,
) -> Result<Option<VertexColoring>> {
    if h.k() == 2 {
        let g = Graph::new(h.n(), h.hyperedges().iter().map(|e| (e[0], e[1])))
            .expect("2-uniform hyperedges are graph edges");
        return Ok(g
            .bipartition()
            .map(|c| VertexColoring::new(c.iter().map(|&b| b as usize).collect(), 2).unwrap()));
    }
    if h.n() > limits.two_color_vertices {
        return Err(Error::capacity(format!(
            "2-colorability backtracking limited to {} vertices, got {}",
            limits.two_color_vertices,
            h.n()
    )));
    }
    let mut solver = TwoColorSearch {
        h,
        incidence: h.incidence(),
        colors: vec![None; h.n()],
        counts: vec![[0usize; 2]; h.m()],
    };
    if solver.run() {
        let colors = solver
            .colors
            .iter()
            .map(|c| c.expect("complete assignment") as usize)
            .collect();
        let coloring = VertexColoring::new(colors, 2)?;
        debug_assert!(coloring.is_proper_on_hypergraph(h));
        Ok(Some(coloring))
    } else {
        Ok(None)
    }
}

struct TwoColorSearch<'a> {
    h: &'a UniformHypergraph,
    incidence: Vec<Vec<usize>>,
    colors: Vec<Option<u8>>,
    counts: Vec<[usize; 2]>,
}

impl TwoColorSearch<'_> {
    fn run(&mut self) -> bool {
        if self.h.n() == 0 {
            return true;
        }
        // Symmetry: the two colors are interchangeable.
        self.assign_and_recurse(0, 0)
    }

    fn assign_and_recurse(&mut self, v: usize, color: u8) -> bool {
        let mut trail = Vec::new();
        if self.propagate_assign(v, color, &mut trail) {
            let next = self.colors.iter().position(|c| c.is_none());
            match next {
                None => return true,
                Some(u) => {
                    if self.assign_and_recurse(u, 0) || self.assign_and_recurse(u, 1) {
                        return true;
                    }
                }
            }
        }
        for u in trail.into_iter().rev() {
            let c = self.colors[u].take().expect("was assigned");
            for &e in &self.incidence[u] {
                self.counts[e][c as usize] -= 1;
            }
        }
        false
    }

    /// Assigns `v = color`, then runs unit propagation: a hyperedge with all
    /// but one vertex assigned a single color forces the last vertex to the
    /// other color. Returns false on a monochromatic hyperedge; `trail`
    /// collects every assignment made.
    fn propagate_assign(&mut self, v: usize, color: u8, trail: &mut Vec<usize>) -> bool {
        let mut queue = vec![(v, color)];
        while let Some((u, c)) = queue.pop() {
            match self.colors[u] {
                Some(existing) => {
                    if existing != c {
                        return false;
                    }
                    continue;
                }
                None => {
                    self.colors[u] = Some(c);
                    trail.push(u);
                    for &e in &self.incidence[u] {
                        self.counts[e][c as usize] += 1;
                    }
                }
            }
            for &e in &self.incidence[u] {
                let k = self.h.k();
                let edge = &self.h.hyperedges()[e];
                let assigned = self.counts[e][0] + self.counts[e][1];
                if self.counts[e][0] == k || self.counts[e][1] == k {
                    return false;
                }
                if assigned == k - 1 && (self.counts[e][0] == 0 || self.counts[e][1] == 0) {
                    let mono: u8 = if self.counts[e][0] == 0 { 1 } else { 0 };
                    let free = edge
                        .iter()
                        .copied()
                        .find(|&w| self.colors[w].is_none())
                        .expect("one unassigned vertex");
                    queue.push((free, 1 - mono));
                }
            }
        }
        true
    }
}

/// A proper 2-coloring of the subgraph induced by the neighborhood of `v`,
/// if that subgraph is bipartite. Returns the neighborhood (sorted) and a
/// coloring indexed by position in it.
pub fn two_color_neighborhood(g: &Graph, v: usize) -> Result<Option<NeighborhoodColoring>> {
    if v >= g.n() {
        return Err(Error::invalid(format!("vertex {v} out of range")));
    }
    let neighborhood: Vec<usize> = g.neighbors(v).to_vec();
    let (induced, map) = g.induced(&neighborhood)?;
    Ok(induced.bipartition().map(|colors| NeighborhoodColoring {
        vertices: map,
        coloring: VertexColoring::new(colors.iter().map(|&b| b as usize).collect(), 2)
            .expect("two colors"),
    }))
}

/// A 2-coloring of an induced neighborhood, carrying the original vertex
/// ids.
#[derive(Clone, Debug)]
pub struct NeighborhoodColoring {
    /// Original ids, position-aligned with the coloring.
    pub vertices: Vec<usize>,
    pub coloring: VertexColoring,
}

impl NeighborhoodColoring {
    /// The larger color class as original vertex ids (ties to class 0).
    pub fn larger_class(&self) -> Vec<usize> {
        let zeros: Vec<usize> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| self.coloring.color(*i) == 0)
            .map(|(_, &v)| v)
            .collect();
        let ones: Vec<usize> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| self.coloring.color(*i) == 1)
            .map(|(_, &v)| v)
            .collect();
        if zeros.len() >= ones.len() {
            zeros
        } else {
            ones
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_cycle_is_two_colorable() {
        let h = UniformHypergraph::from_graph(&Graph::cycle(4));
        let c = is_two_colorable(&h, &SearchLimits::default()).unwrap();
        assert!(c.is_some());
        assert!(c.unwrap().is_proper_on_hypergraph(&h));
    }

    #[test]
    fn odd_cycle_is_not() {
        let h = UniformHypergraph::from_graph(&Graph::cycle(3));
        assert!(is_two_colorable(&h, &SearchLimits::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn fano_plane_is_not_two_colorable() {
        let h = UniformHypergraph::fano_plane();
        assert!(is_two_colorable(&h, &SearchLimits::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn three_uniform_triangle_cluster_is_two_colorable() {
        let h = UniformHypergraph::new(4, 3, [vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let c = is_two_colorable(&h, &SearchLimits::default())
            .unwrap()
            .unwrap();
        assert!(c.is_proper_on_hypergraph(&h));
    }

    #[test]
    fn capacity_guard_fires() {
        let h = UniformHypergraph::edgeless(10, 3);
        let limits = SearchLimits {
            two_color_vertices: 5,
            ..SearchLimits::default()
        };
        assert!(matches!(
            is_two_colorable(&h, &limits),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn star_center_neighborhood() {
        // Star K_{1,4}: center 0.
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let nc = two_color_neighborhood(&g, 0).unwrap().unwrap();
        assert_eq!(nc.vertices, vec![1, 2, 3, 4]);
        assert_eq!(nc.larger_class(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn wheel_center_neighborhood_is_odd() {
        // Wheel W5: hub 0 joined to C5 on 1..=5.
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)];
        edges.extend([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
        let g = Graph::new(6, edges).unwrap();
        assert!(two_color_neighborhood(&g, 0).unwrap().is_none());
    }

    #[test]
    fn petersen_neighborhoods_are_independent() {
        let g = crate::combinatorics::generators::kneser_graph(5, 2).unwrap();
        for v in 0..g.n() {
            let nc = two_color_neighborhood(&g, v).unwrap();
            assert!(nc.is_some(), "triangle-free neighborhoods are bipartite");
        }
    }
}
