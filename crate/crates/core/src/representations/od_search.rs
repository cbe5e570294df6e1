//! Brute-force orthogonality dimension over prime fields.
//!
//! The search assigns to every vertex a candidate vector from GF(p)^t with
//! nonzero self-inner-product, deduplicated up to nonzero scalar multiples
//! (orthogonality is scale-invariant), and backtracks over vertices in index
//! order with hyperedge constraint propagation: a hyperedge about to become
//! fully assigned restricts its last vertex to vectors orthogonal to at
//! least one assigned member.
//!
//! Two further sound prunings:
//!
//! * candidates whose orthogonality set is strictly contained in another
//!   candidate's are dropped everywhere (replacing a vector by one that is
//!   orthogonal to a superset of candidates never invalidates a
//!   representation);
//! * over odd p, the first vertex ranges over at most two candidates, one
//!   per square class of the self-inner-product, justified by Witt's
//!   transitivity of the orthogonal group on vectors of a given norm
//!   combined with per-vertex scaling. Over GF(2) the orthogonal group is
//!   not transitive on nonisotropic vectors, so no such cut is applied.

use crate::combinatorics::{is_two_colorable, UniformHypergraph};
use crate::error::{Error, Result};
use crate::exactalg::{ExactVector, Field};
use crate::limits::SearchLimits;

use super::exact::ExactOrthogonalRepresentation;

/// `od(H) <= 2` holds exactly when H is 2-colorable.
pub fn od_at_most_two(h: &UniformHypergraph, limits: &SearchLimits) -> Result<bool> {
    Ok(is_two_colorable(h, limits)?.is_some())
}

/// Smallest `t <= t_max` admitting an orthogonal representation of `h` over
/// GF(p), with the witness representation; `None` when no dimension up to
/// `t_max` works.
pub fn od_exact_finite_field(
    h: &UniformHypergraph,
    p: u64,
    t_max: usize,
    limits: &SearchLimits,
) -> Result<Option<ExactOrthogonalRepresentation>> {
    let field = Field::prime(p)?;
    if t_max < 1 {
        return Err(Error::invalid("t_max must be at least 1"));
    }
    for t in 1..=t_max {
        let candidates = canonical_candidates(p, t, limits)?;
        let classes = candidates.len() as f64;
        if classes.powi(h.n() as i32) > limits.od_search_space {
            return Err(Error::capacity(format!(
                "od search space {}^{} exceeds the configured budget",
                candidates.len(),
                h.n()
            )));
        }
        if let Some(assignment) = search_dimension(h, p, &candidates, limits) {
            let vectors = assignment
                .iter()
                .map(|&c| ExactVector::Mod {
                    p,
                    coords: candidates[c].clone(),
                })
                .collect();
            let rep = ExactOrthogonalRepresentation::new(field, vectors)?;
            debug_assert!(super::exact::verify_exact(h, &rep).unwrap().is_valid());
            return Ok(Some(rep));
        }
    }
    Ok(None)
}

/// All nonisotropic vectors of GF(p)^t whose first nonzero coordinate is 1
/// (one representative per projective class), in lexicographic coordinate
/// order.
fn canonical_candidates(p: u64, t: usize, limits: &SearchLimits) -> Result<Vec<Vec<u64>>> {
    let total = (p as f64).powi(t as i32);
    if total > 20_000_000.0 || total > limits.od_search_space {
        return Err(Error::capacity(format!(
            "candidate enumeration p^t = {p}^{t} is too large"
        )));
    }
    let mut out = Vec::new();
    let mut coords = vec![0u64; t];
    loop {
        let first_nonzero = coords.iter().find(|&&c| c != 0);
        if first_nonzero == Some(&1) {
            let norm = coords
                .iter()
                .fold(0u64, |acc, &c| (acc + c * c) % p);
            if norm != 0 {
                out.push(coords.clone());
            }
        }
        // Odometer with coordinate 0 most significant.
        let mut i = t;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            coords[i] += 1;
            if coords[i] < p {
                break;
            }
            coords[i] = 0;
        }
    }
}

fn inner_mod(a: &[u64], b: &[u64], p: u64) -> u64 {
    a.iter()
        .zip(b)
        .fold(0u64, |acc, (&x, &y)| (acc + x * y) % p)
}

struct Tables {
    /// orth[c] = bitset of candidates orthogonal to candidate c.
    orth: Vec<Vec<u64>>,
    words: usize,
    /// Candidate indices usable at vertices other than the first.
    general_domain: Vec<usize>,
    /// Candidate indices usable at the first vertex.
    first_domain: Vec<usize>,
}

fn build_tables(p: u64, candidates: &[Vec<u64>]) -> Tables {
    let nc = candidates.len();
    let words = nc.div_ceil(64);
    let mut orth = vec![vec![0u64; words]; nc];
    for i in 0..nc {
        for j in i..nc {
            if inner_mod(&candidates[i], &candidates[j], p) == 0 {
                orth[i][j / 64] |= 1 << (j % 64);
                orth[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    let subset = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & !y == 0);
    let mut general_domain = Vec::new();
    'outer: for i in 0..nc {
        for j in 0..nc {
            if j == i {
                continue;
            }
            if subset(&orth[i], &orth[j]) && (!subset(&orth[j], &orth[i]) || j < i) {
                // i is dominated (strictly, or tied with a lower index).
                continue 'outer;
            }
        }
        general_domain.push(i);
    }
    let first_domain = if p == 2 {
        general_domain.clone()
    } else {
        // One representative per square class of the self-inner-product.
        let legendre = |q: u64| crate::exactalg::pow_mod(q, (p - 1) / 2, p);
        let mut reps = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for (i, cand) in candidates.iter().enumerate() {
            let class = legendre(inner_mod(cand, cand, p));
            if seen.insert(class) {
                reps.push(i);
            }
        }
        reps
    };
    Tables {
        orth,
        words,
        general_domain,
        first_domain,
    }
}

struct SearchState<'a> {
    h: &'a UniformHypergraph,
    incidence: &'a [Vec<usize>],
    tables: &'a Tables,
    assignment: Vec<usize>,
    assigned: Vec<bool>,
    edge_assigned: Vec<usize>,
    /// Vertex whose assignment satisfied the hyperedge, if any.
    edge_satisfied: Vec<Option<usize>>,
}

impl SearchState<'_> {
    fn assign(&mut self, v: usize, cand: usize) {
        self.assignment[v] = cand;
        self.assigned[v] = true;
        for &e in &self.incidence[v] {
            self.edge_assigned[e] += 1;
            if self.edge_satisfied[e].is_none() {
                let hit = self.h.hyperedges()[e].iter().any(|&u| {
                    u != v
                        && self.assigned[u]
                        && bit(&self.tables.orth[cand], self.assignment[u])
                });
                if hit {
                    self.edge_satisfied[e] = Some(v);
                }
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        for &e in &self.incidence[v] {
            self.edge_assigned[e] -= 1;
            if self.edge_satisfied[e] == Some(v) {
                self.edge_satisfied[e] = None;
            }
        }
        self.assigned[v] = false;
    }

    /// Bitmask of candidates allowed at `v` by hyperedges that `v` would
    /// complete; `None` when unconstrained.
    fn allowed_mask(&self, v: usize) -> Option<Vec<u64>> {
        let k = self.h.k();
        let mut mask: Option<Vec<u64>> = None;
        for &e in &self.incidence[v] {
            if self.edge_satisfied[e].is_some() || self.edge_assigned[e] != k - 1 {
                continue;
            }
            let mut union = vec![0u64; self.tables.words];
            for &u in &self.h.hyperedges()[e] {
                if u != v && self.assigned[u] {
                    for (w, o) in union.iter_mut().zip(&self.tables.orth[self.assignment[u]]) {
                        *w |= o;
                    }
                }
            }
            mask = Some(match mask {
                None => union,
                Some(prev) => prev.iter().zip(&union).map(|(a, b)| a & b).collect(),
            });
        }
        mask
    }

    fn search(&mut self, v: usize) -> bool {
        if v == self.h.n() {
            return true;
        }
        let allowed = self.allowed_mask(v);
        let domain: &[usize] = if v == 0 {
            &self.tables.first_domain
        } else {
            &self.tables.general_domain
        };
        for &cand in domain {
            if let Some(mask) = &allowed {
                if !bit(mask, cand) {
                    continue;
                }
            }
            self.assign(v, cand);
            if self.search(v + 1) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

fn bit(mask: &[u64], i: usize) -> bool {
    mask[i / 64] >> (i % 64) & 1 == 1
}

fn search_dimension(
    h: &UniformHypergraph,
    p: u64,
    candidates: &[Vec<u64>],
    limits: &SearchLimits,
) -> Option<Vec<usize>> {
    if candidates.is_empty() {
        return None;
    }
    let tables = build_tables(p, candidates);
    let incidence = h.incidence();
    let fresh = || SearchState {
        h,
        incidence: &incidence,
        tables: &tables,
        assignment: vec![0; h.n()],
        assigned: vec![false; h.n()],
        edge_assigned: vec![0; h.m()],
        edge_satisfied: vec![None; h.m()],
    };
    if h.n() == 0 {
        return Some(Vec::new());
    }
    let workers = limits.workers.max(1).min(tables.first_domain.len().max(1));
    if workers <= 1 {
        let mut state = fresh();
        if state.search(0) {
            return Some(state.assignment);
        }
        return None;
    }
    // Partition the first vertex's domain across workers; merge by the
    // least first-candidate position so the witness matches a sequential
    // run.
    let chunks: Vec<Vec<(usize, usize)>> = {
        let indexed: Vec<(usize, usize)> = tables
            .first_domain
            .iter()
            .copied()
            .enumerate()
            .collect();
        indexed
            .chunks(tables.first_domain.len().div_ceil(workers))
            .map(|c| c.to_vec())
            .collect()
    };
    let results: Vec<Option<(usize, Vec<usize>)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                scope.spawn(move || {
                    let mut state = fresh();
                    for &(pos, cand) in chunk {
                        if let Some(mask) = &state.allowed_mask(0) {
                            if !bit(mask, cand) {
                                continue;
                            }
                        }
                        state.assign(0, cand);
                        if state.search(1) {
                            return Some((pos, state.assignment.clone()));
                        }
                        state.unassign(0);
                    }
                    None
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    results
        .into_iter()
        .flatten()
        .min_by_key(|(pos, _)| *pos)
        .map(|(_, assignment)| assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Graph;
    use crate::representations::exact::verify_exact;

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn single_edge_over_gf2_needs_two_dimensions() {
        let h = UniformHypergraph::from_graph(&Graph::new(2, [(0, 1)]).unwrap());
        let rep = od_exact_finite_field(&h, 2, 3, &limits()).unwrap().unwrap();
        assert_eq!(rep.dim(), 2);
    }

    #[test]
    fn triangle_over_gf3_needs_three_dimensions() {
        let h = UniformHypergraph::from_graph(&Graph::complete(3));
        let rep = od_exact_finite_field(&h, 3, 3, &limits()).unwrap().unwrap();
        assert_eq!(rep.dim(), 3);
        assert!(verify_exact(&h, &rep).unwrap().is_valid());
        // And no 2-dimensional representation exists.
        assert!(od_exact_finite_field(&h, 3, 2, &limits()).unwrap().is_none());
    }

    #[test]
    fn edgeless_hypergraph_has_dimension_one() {
        let h = UniformHypergraph::edgeless(4, 2);
        let rep = od_exact_finite_field(&h, 5, 2, &limits()).unwrap().unwrap();
        assert_eq!(rep.dim(), 1);
    }

    #[test]
    fn k4_exceeds_three_dimensions_over_gf3() {
        // Four pairwise orthogonal nonisotropic vectors cannot fit in
        // dimension 3 (their Gram matrix would be diagonal of rank 4).
        let h = UniformHypergraph::from_graph(&Graph::complete(4));
        assert!(od_exact_finite_field(&h, 3, 3, &limits()).unwrap().is_none());
    }

    #[test]
    fn two_colorability_shortcut() {
        let c4 = UniformHypergraph::from_graph(&Graph::cycle(4));
        assert!(od_at_most_two(&c4, &limits()).unwrap());
        let c3 = UniformHypergraph::from_graph(&Graph::cycle(3));
        assert!(!od_at_most_two(&c3, &limits()).unwrap());
        assert!(!od_at_most_two(&UniformHypergraph::fano_plane(), &limits()).unwrap());
    }

    #[test]
    fn monotone_under_hyperedge_deletion() {
        // Removing a hyperedge can only keep or lower the dimension.
        let h = UniformHypergraph::new(
            5,
            3,
            vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4], vec![0, 3, 4]],
        )
        .unwrap();
        let full = od_exact_finite_field(&h, 2, 3, &limits())
            .unwrap()
            .map(|r| r.dim());
        for e in 0..h.m() {
            let smaller = od_exact_finite_field(&h.without_hyperedge(e), 2, 3, &limits())
                .unwrap()
                .map(|r| r.dim());
            if let (Some(f), Some(s)) = (full, smaller) {
                assert!(s <= f);
            }
        }
    }

    #[test]
    fn capacity_guard_fires() {
        // Dimension 1 fails cheaply on the 5-cycle; dimension 2 blows the
        // tiny budget.
        let h = UniformHypergraph::from_graph(&Graph::cycle(5));
        let tight = SearchLimits::default().with_od_search_space(10.0);
        assert!(matches!(
            od_exact_finite_field(&h, 3, 3, &tight),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn parallel_search_matches_sequential() {
        let h = UniformHypergraph::from_graph(&Graph::cycle(5));
        let seq = od_exact_finite_field(&h, 3, 3, &limits()).unwrap();
        let par = od_exact_finite_field(&h, 3, 3, &limits().with_workers(4)).unwrap();
        match (seq, par) {
            (Some(a), Some(b)) => assert_eq!(a, b),
            (a, b) => panic!("mismatch: {a:?} vs {b:?}"),
        }
    }
}
