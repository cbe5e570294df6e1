//! Exact solvers for clique number, independence number, chromatic number,
//! and multichromatic numbers. All of them are branch-and-bound searches
//! with deterministic tie-breaking (lowest index first) so returned
//! witnesses are reproducible.

use crate::error::{Error, Result};
use crate::limits::SearchLimits;

use super::{Graph, TupleColoring, VertexColoring};

fn bit_get(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

/// Greedy sequential coloring of `candidates` (in the given order) used as
/// the bound inside the clique search; returns (vertex, color) pairs sorted
/// by color ascending, colors 1-based.
fn color_sort(candidates: &[usize], adj: &[Vec<u64>]) -> Vec<(usize, usize)> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in candidates {
        let slot = classes
            .iter()
            .position(|class| class.iter().all(|&u| !bit_get(&adj[v], u)));
        match slot {
            Some(i) => classes[i].push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut out = Vec::with_capacity(candidates.len());
    for (ci, class) in classes.iter().enumerate() {
        for &v in class {
            out.push((v, ci + 1));
        }
    }
    out
}

fn clique_expand(
    adj: &[Vec<u64>],
    current: &mut Vec<usize>,
    candidates: &[usize],
    best: &mut (usize, Vec<usize>),
) {
    let colored = color_sort(candidates, adj);
    for i in (0..colored.len()).rev() {
        let (v, color) = colored[i];
        if current.len() + color <= best.0 {
            return;
        }
        current.push(v);
        let next: Vec<usize> = colored[..i]
            .iter()
            .map(|&(u, _)| u)
            .filter(|&u| bit_get(&adj[v], u))
            .collect();
        if next.is_empty() {
            if current.len() > best.0 {
                *best = (current.len(), current.clone());
            }
        } else {
            clique_expand(adj, current, &next, best);
        }
        current.pop();
    }
}

/// Exact maximum clique with witness.
pub fn max_clique(g: &Graph, limits: &SearchLimits) -> Result<(usize, Vec<usize>)> {
    if g.n() > limits.exact_vertices {
        return Err(Error::capacity(format!(
            "exact clique search limited to {} vertices, got {}",
            limits.exact_vertices,
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    let adj = g.adjacency_bits();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut best = (0usize, Vec::new());
    let mut current = Vec::new();
    clique_expand(&adj, &mut current, &order, &mut best);
    best.1.sort_unstable();
    Ok(best)
}

/// Exact independence number with witness set: a maximum clique of the
/// complement.
pub fn independence_number_exact(g: &Graph, limits: &SearchLimits) -> Result<(usize, Vec<usize>)> {
    let (alpha, witness) = max_clique(&g.complement(), limits)?;
    debug_assert!(witness
        .iter()
        .all(|&u| witness.iter().all(|&v| u == v || !g.has_edge(u, v))));
    Ok((alpha, witness))
}

/// Greedy DSATUR coloring; the upper bound seed for the exact search.
pub fn greedy_coloring(g: &Graph) -> VertexColoring {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut palette = 0usize;
    for _ in 0..n {
        // Max saturation, tie on lowest index.
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by(|&a, &b| {
                let sat = |v: usize| {
                    let mut seen = std::collections::BTreeSet::new();
                    for &u in g.neighbors(v) {
                        if colors[u] != usize::MAX {
                            seen.insert(colors[u]);
                        }
                    }
                    seen.len()
                };
                sat(a).cmp(&sat(b)).then(b.cmp(&a))
            })
            .expect("an uncolored vertex exists");
        let used: std::collections::BTreeSet<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| colors[u] != usize::MAX)
            .map(|&u| colors[u])
            .collect();
        let col = (0..).find(|c| !used.contains(c)).expect("free color");
        colors[v] = col;
        palette = palette.max(col + 1);
    }
    VertexColoring::new(colors, palette.max(1)).expect("greedy coloring is within palette")
}

struct ColoringSearch<'a> {
    g: &'a Graph,
    palette: usize,
    colors: Vec<usize>,
    neighbor_masks: Vec<u64>,
    assigned: usize,
}

impl ColoringSearch<'_> {
    fn solve(&mut self, used: usize) -> bool {
        if self.assigned == self.g.n() {
            return true;
        }
        // DSATUR vertex selection: max saturation, tie lowest index.
        let v = (0..self.g.n())
            .filter(|&v| self.colors[v] == usize::MAX)
            .max_by(|&a, &b| {
                let sa = self.neighbor_masks[a].count_ones();
                let sb = self.neighbor_masks[b].count_ones();
                sa.cmp(&sb).then(b.cmp(&a))
            })
            .expect("uncolored vertex");
        // Colors ascending; at most one fresh color keeps relabelings out of
        // the search tree.
        let try_up_to = self.palette.min(used + 1);
        for col in 0..try_up_to {
            if self.neighbor_masks[v] >> col & 1 == 1 {
                continue;
            }
            self.colors[v] = col;
            self.assigned += 1;
            let mut touched = Vec::new();
            for &u in self.g.neighbors(v) {
                if self.colors[u] == usize::MAX && self.neighbor_masks[u] >> col & 1 == 0 {
                    self.neighbor_masks[u] |= 1 << col;
                    touched.push(u);
                }
            }
            let dead = touched.iter().any(|&u| {
                self.neighbor_masks[u].count_ones() as usize >= self.palette
                    && self.colors[u] == usize::MAX
            });
            if !dead && self.solve(used.max(col + 1)) {
                return true;
            }
            for u in touched {
                self.neighbor_masks[u] &= !(1 << col);
            }
            self.colors[v] = usize::MAX;
            self.assigned -= 1;
        }
        false
    }
}

/// Whether `g` admits a proper coloring with `palette` colors; returns a
/// witness on success. Palette is capped at 64 colors.
pub fn try_coloring(g: &Graph, palette: usize) -> Result<Option<VertexColoring>> {
    if palette > 64 {
        return Err(Error::capacity("palettes are limited to 64 colors"));
    }
    if g.n() == 0 {
        return Ok(Some(VertexColoring::new(Vec::new(), palette.max(1))?));
    }
    if palette == 0 {
        return Ok(None);
    }
    let mut search = ColoringSearch {
        g,
        palette,
        colors: vec![usize::MAX; g.n()],
        neighbor_masks: vec![0; g.n()],
        assigned: 0,
    };
    if search.solve(0) {
        Ok(Some(VertexColoring::new(search.colors, palette)?))
    } else {
        Ok(None)
    }
}

/// Exact chromatic number with a witness coloring: branch-and-bound between
/// the exact clique lower bound and the greedy DSATUR upper bound.
pub fn chromatic_number_exact(g: &Graph, limits: &SearchLimits) -> Result<(usize, VertexColoring)> {
    if g.n() > limits.exact_vertices {
        return Err(Error::capacity(format!(
            "exact chromatic search limited to {} vertices, got {}",
            limits.exact_vertices,
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok((0, VertexColoring::new(Vec::new(), 1)?));
    }
    let greedy = greedy_coloring(g);
    let upper = greedy.used_colors();
    let (lower, _) = max_clique(g, limits)?;
    let lower = lower.max(1);
    for c in lower..upper {
        if let Some(witness) = try_coloring(g, c)? {
            debug_assert!(witness.is_proper_on_graph(g));
            return Ok((c, witness));
        }
    }
    Ok((upper, greedy))
}

/// Smallest c admitting a homomorphism `g -> K(c, k)`, i.e. the k-th
/// multichromatic number, with a witness tuple coloring. Backtracking over
/// k-subsets of the palette in ascending bitmask order.
pub fn multichromatic_number_exact(
    g: &Graph,
    k: usize,
    limits: &SearchLimits,
) -> Result<(usize, TupleColoring)> {
    if k == 0 {
        return Err(Error::invalid("tuple size k must be positive"));
    }
    if g.n() > limits.multichromatic_vertices {
        return Err(Error::capacity(format!(
            "multichromatic search limited to {} vertices, got {}",
            limits.multichromatic_vertices,
            g.n()
        )));
    }
    if k == 1 {
        let (chi, coloring) = chromatic_number_exact(g, limits)?;
        let sets = coloring.colors().iter().map(|&c| 1u64 << c).collect();
        return Ok((chi, TupleColoring::new(1, chi.max(1), sets)?));
    }
    if g.n() == 0 {
        return Ok((k, TupleColoring::new(k, k, Vec::new())?));
    }
    let (chi, _) = chromatic_number_exact(g, limits)?;
    let upper = k * chi.max(1);
    if upper > 64 {
        return Err(Error::capacity("tuple palettes are limited to 64 colors"));
    }
    for c in k..=upper {
        if let Some(sets) = try_tuple_coloring(g, k, c) {
            let witness = TupleColoring::new(k, c, sets)?;
            debug_assert!(witness.is_proper_on_graph(g));
            return Ok((c, witness));
        }
    }
    unreachable!("k * chi colors always suffice for a k-tuple coloring");
}

/// Exact chromatic number of a uniform hypergraph (no monochromatic
/// hyperedge) with witness, by backtracking with a first-fresh-color
/// symmetry break. Edgeless hypergraphs have chromatic number 1.
pub fn hypergraph_chromatic_number_exact(
    h: &super::UniformHypergraph,
    limits: &SearchLimits,
) -> Result<(usize, VertexColoring)> {
    if h.n() > limits.exact_vertices {
        return Err(Error::capacity(format!(
            "exact hypergraph chromatic search limited to {} vertices, got {}",
            limits.exact_vertices,
            h.n()
        )));
    }
    if h.n() == 0 {
        return Ok((0, VertexColoring::new(Vec::new(), 1)?));
    }
    if h.m() == 0 {
        return Ok((1, VertexColoring::new(vec![0; h.n()], 1)?));
    }
    // Any assignment of pairwise distinct colors is proper, so n colors
    // always suffice.
    for c in 2..=h.n().min(64) {
        if let Some(w) = try_hypergraph_coloring(h, c) {
            return Ok((c, w));
        }
    }
    let distinct = VertexColoring::new((0..h.n()).collect(), h.n())?;
    Ok((h.n(), distinct))
}

fn try_hypergraph_coloring(h: &super::UniformHypergraph, c: usize) -> Option<VertexColoring> {
    let incidence = h.incidence();
    let mut colors = vec![usize::MAX; h.n()];
    fn assign(
        h: &super::UniformHypergraph,
        incidence: &[Vec<usize>],
        colors: &mut Vec<usize>,
        v: usize,
        used: usize,
        c: usize,
    ) -> bool {
        if v == h.n() {
            return true;
        }
        for col in 0..c.min(used + 1) {
            colors[v] = col;
            // Reject as soon as a hyperedge is fully assigned and
            // monochromatic.
            let ok = incidence[v].iter().all(|&e| {
                let edge = &h.hyperedges()[e];
                if edge.iter().any(|&u| colors[u] == usize::MAX) {
                    return true;
                }
                let first = colors[edge[0]];
                edge.iter().any(|&u| colors[u] != first)
            });
            if ok && assign(h, incidence, colors, v + 1, used.max(col + 1), c) {
                return true;
            }
        }
        colors[v] = usize::MAX;
        false
    }
    if assign(h, &incidence, &mut colors, 0, 0, c) {
        let coloring = VertexColoring::new(colors, c).expect("colors within palette");
        debug_assert!(coloring.is_proper_on_hypergraph(h));
        Some(coloring)
    } else {
        None
    }
}

fn try_tuple_coloring(g: &Graph, k: usize, c: usize) -> Option<Vec<u64>> {
    let candidates = super::generators::subset_vertices(c as u32, k as u32);
    let mut sets = vec![0u64; g.n()];
    // Color permutations make the first vertex's tuple arbitrary; pin it.
    fn assign(
        g: &Graph,
        candidates: &[u64],
        sets: &mut Vec<u64>,
        v: usize,
        first_fixed: bool,
    ) -> bool {
        if v == g.n() {
            return true;
        }
        let forbidden: u64 = g
            .neighbors(v)
            .iter()
            .filter(|&&u| u < v)
            .fold(0, |acc, &u| acc | sets[u]);
        let options: &[u64] = if v == 0 && first_fixed {
            &candidates[..1]
        } else {
            candidates
        };
        for &mask in options {
            if mask & forbidden == 0 {
                sets[v] = mask;
                if assign(g, candidates, sets, v + 1, first_fixed) {
                    return true;
                }
            }
        }
        false
    }
    if assign(g, &candidates, &mut sets, 0, true) {
        Some(sets)
    } else {
        None
    }
}
