//! Label Cover instances and the reduction to 4-uniform hypergraphs, with
//! the constructive completeness coloring and the randomized soundness
//! decoder.

use crate::combinatorics::{stable_subset_vertices, UniformHypergraph, VertexColoring};
use crate::error::{Error, Result};
use crate::limits::SearchLimits;
use crate::representations::{ExactOrthogonalRepresentation, RealOrthogonalRepresentation};
use crate::rng::Rng;

/// A bipartite projection-constraint instance: U-variables over [R],
/// V-variables over [L], and per-edge projection tables [R] -> [L].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelCoverInstance {
    nu: usize,
    nv: usize,
    r: usize,
    l: usize,
    edges: Vec<(usize, usize)>,
    projections: Vec<Vec<usize>>,
}

impl LabelCoverInstance {
    pub fn new(
        nu: usize,
        nv: usize,
        r: usize,
        l: usize,
        edges: Vec<(usize, usize)>,
        projections: Vec<Vec<usize>>,
    ) -> Result<LabelCoverInstance> {
        if r < l || l < 1 {
            return Err(Error::invalid("ranges must satisfy R >= L >= 1"));
        }
        if edges.len() != projections.len() {
            return Err(Error::mismatch("one projection table per edge required"));
        }
        let mut seen = std::collections::BTreeSet::new();
        for (idx, &(x, z)) in edges.iter().enumerate() {
            if x >= nu || z >= nv {
                return Err(Error::invalid(format!("edge ({x}, {z}) out of range")));
            }
            if !seen.insert((x, z)) {
                return Err(Error::invalid(format!("duplicate edge ({x}, {z})")));
            }
            if projections[idx].len() != r {
                return Err(Error::invalid(format!(
                    "projection table for edge {idx} has length {}, expected {r}",
                    projections[idx].len()
                )));
            }
            if projections[idx].iter().any(|&b| b >= l) {
                return Err(Error::invalid(format!(
                    "projection value out of range on edge {idx}"
                )));
            }
        }
        Ok(LabelCoverInstance {
            nu,
            nv,
            r,
            l,
            edges,
            projections,
        })
    }

    pub fn n_u(&self) -> usize {
        self.nu
    }

    pub fn n_v(&self) -> usize {
        self.nv
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn projection(&self, edge: usize) -> &[usize] {
        &self.projections[edge]
    }

    /// Edge indices grouped by the V-endpoint.
    pub fn edges_by_v(&self) -> Vec<Vec<usize>> {
        let mut by_v = vec![Vec::new(); self.nv];
        for (idx, &(_, z)) in self.edges.iter().enumerate() {
            by_v[z].push(idx);
        }
        by_v
    }
}

/// Values for every variable, 0-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub u_values: Vec<usize>,
    pub v_values: Vec<usize>,
}

impl Assignment {
    pub fn validate(&self, lc: &LabelCoverInstance) -> Result<()> {
        if self.u_values.len() != lc.nu || self.v_values.len() != lc.nv {
            return Err(Error::mismatch("assignment size does not match instance"));
        }
        if self.u_values.iter().any(|&v| v >= lc.r) || self.v_values.iter().any(|&v| v >= lc.l) {
            return Err(Error::invalid("assignment value out of range"));
        }
        Ok(())
    }
}

/// Satisfied-edge statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatisfactionStats {
    pub satisfied: usize,
    pub total: usize,
}

impl SatisfactionStats {
    pub fn fraction(&self) -> f64 {
        if self.total == 0 {
            1.0
        } else {
            self.satisfied as f64 / self.total as f64
        }
    }
}

/// Fraction of edges with `phi(rho(x)) = rho(z)`.
pub fn label_cover_value(lc: &LabelCoverInstance, a: &Assignment) -> Result<SatisfactionStats> {
    a.validate(lc)?;
    let satisfied = lc
        .edges
        .iter()
        .enumerate()
        .filter(|(idx, &(x, z))| lc.projections[*idx][a.u_values[x]] == a.v_values[z])
        .count();
    Ok(SatisfactionStats {
        satisfied,
        total: lc.edges.len(),
    })
}

/// Exact optimum by enumeration over U-assignments (the optimal V-assignment
/// decomposes per vertex given the U side); capacity-guarded by the naive
/// product bound R^(|U|) * L^(|V|).
pub fn label_cover_bruteforce_opt(
    lc: &LabelCoverInstance,
    limits: &SearchLimits,
) -> Result<(SatisfactionStats, Assignment)> {
    let space = (lc.r as f64).powi(lc.nu as i32) * (lc.l as f64).powi(lc.nv as i32);
    if space > limits.od_search_space {
        return Err(Error::capacity(format!(
            "label cover enumeration space {space:.3e} exceeds the budget"
        )));
    }
    let by_v = lc.edges_by_v();
    let mut u_values = vec![0usize; lc.nu];
    let mut best: Option<(usize, Assignment)> = None;
    loop {
        // Optimal V side for this U side, per vertex, ties to the least
        // value.
        let mut v_values = vec![0usize; lc.nv];
        let mut satisfied = 0usize;
        for (z, edge_ids) in by_v.iter().enumerate() {
            let mut counts = vec![0usize; lc.l];
            for &idx in edge_ids {
                let (x, _) = lc.edges[idx];
                counts[lc.projections[idx][u_values[x]]] += 1;
            }
            let (beta, count) = counts
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
                .unwrap_or((0, &0));
            v_values[z] = beta;
            satisfied += count;
        }
        if best.as_ref().map(|(s, _)| satisfied > *s).unwrap_or(true) {
            best = Some((
                satisfied,
                Assignment {
                    u_values: u_values.clone(),
                    v_values,
                },
            ));
        }
        // Next U-assignment in lexicographic order.
        let mut pos = lc.nu;
        loop {
            if pos == 0 {
                let (satisfied, assignment) = best.expect("at least one assignment");
                return Ok((
                    SatisfactionStats {
                        satisfied,
                        total: lc.edges.len(),
                    },
                    assignment,
                ));
            }
            pos -= 1;
            u_values[pos] += 1;
            if u_values[pos] < lc.r {
                break;
            }
            u_values[pos] = 0;
        }
    }
}

/// Toy instance kinds: `Satisfiable` plants an assignment and builds
/// consistent projections; `Random` draws uniform tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToyKind {
    Satisfiable,
    Random,
}

#[derive(Clone, Copy, Debug)]
pub struct ToyParams {
    pub nu: usize,
    pub nv: usize,
    pub r: usize,
    pub l: usize,
    /// Edges per U-vertex (distinct V-endpoints).
    pub degree: usize,
}

/// A generated instance together with the planted assignment when one
/// exists.
#[derive(Clone, Debug)]
pub struct ToyInstance {
    pub instance: LabelCoverInstance,
    pub planted: Option<Assignment>,
}

/// Deterministic toy Label Cover generator. V-endpoints are assigned
/// round-robin through a seeded permutation, so degrees on the V side are
/// balanced (exactly bi-regular when nv divides nu * degree).
pub fn toy_label_cover(kind: ToyKind, params: ToyParams, seed: u64) -> Result<ToyInstance> {
    let ToyParams { nu, nv, r, l, degree } = params;
    if nu == 0 || nv == 0 || degree == 0 {
        return Err(Error::invalid("toy instances need nu, nv, degree >= 1"));
    }
    if degree > nv {
        return Err(Error::invalid("degree exceeds the number of V-vertices"));
    }
    if r < l || l < 1 {
        return Err(Error::invalid("ranges must satisfy R >= L >= 1"));
    }
    let mut rng = Rng::seed_from(seed);
    let mut z_order: Vec<usize> = (0..nv).collect();
    rng.shuffle(&mut z_order);
    let planted = Assignment {
        u_values: (0..nu).map(|_| rng.next_usize_below(r)).collect(),
        v_values: (0..nv).map(|_| rng.next_usize_below(l)).collect(),
    };
    let mut edges = Vec::with_capacity(nu * degree);
    let mut projections = Vec::with_capacity(nu * degree);
    let mut cursor = 0usize;
    for x in 0..nu {
        for _ in 0..degree {
            let z = z_order[cursor % nv];
            cursor += 1;
            let mut table: Vec<usize> = (0..r).map(|_| rng.next_usize_below(l)).collect();
            if kind == ToyKind::Satisfiable {
                table[planted.u_values[x]] = planted.v_values[z];
            }
            edges.push((x, z));
            projections.push(table);
        }
    }
    let instance = LabelCoverInstance::new(nu, nv, r, l, edges, projections)?;
    Ok(ToyInstance {
        planted: match kind {
            ToyKind::Satisfiable => Some(planted),
            ToyKind::Random => None,
        },
        instance,
    })
}

/// Mapping between reduced-hypergraph vertices and (U-vertex, stable set)
/// pairs.
#[derive(Clone, Debug)]
pub struct BlockDirectory {
    pub r: usize,
    pub s: usize,
    /// Stable s-subsets of [R] as bitmasks, in canonical order.
    pub masks: Vec<u64>,
    pub n_u: usize,
}

impl BlockDirectory {
    pub fn block_size(&self) -> usize {
        self.masks.len()
    }

    pub fn global(&self, x: usize, a: usize) -> usize {
        x * self.block_size() + a
    }

    pub fn decompose(&self, vertex: usize) -> (usize, u64) {
        let b = self.block_size();
        (vertex / b, self.masks[vertex % b])
    }
}

/// The 4-uniform hypergraph of the Label Cover reduction with parameter t:
/// one Schrijver-vertex block C[x] = {x} x V(S(R, s)) per U-vertex with
/// s = ceil((R - t) / 2), and a hyperedge {(x,A),(x,B),(y,C),(y,D)} for
/// every pair x != y with a common neighbor z whenever every pair
/// (alpha, beta) with phi_x(alpha) = phi_y(beta) sees both bit values among
/// {A_alpha, B_alpha, C_beta, D_beta}.
pub fn label_cover_to_hypergraph(
    lc: &LabelCoverInstance,
    t: usize,
    limits: &SearchLimits,
) -> Result<(UniformHypergraph, BlockDirectory)> {
    if t < 1 {
        return Err(Error::invalid("dimension threshold t must be at least 1"));
    }
    if lc.r <= t {
        return Err(Error::invalid(format!(
            "need R > t for s >= 1, got R = {}, t = {t}",
            lc.r
        )));
    }
    if lc.r > 63 {
        return Err(Error::capacity("R is limited to 63"));
    }
    if lc.l > 64 {
        return Err(Error::capacity("L is limited to 64"));
    }
    let s = (lc.r - t).div_ceil(2);
    let masks = stable_subset_vertices(lc.r as u32, s as u32);
    if masks.is_empty() {
        return Err(Error::invalid(format!(
            "no stable {s}-subsets of [{}] exist",
            lc.r
        )));
    }
    let block = masks.len();
    let n = lc.nu * block;
    if n > limits.reduction_vertices {
        return Err(Error::capacity(format!(
            "reduction would produce {n} vertices, above the ceiling {}",
            limits.reduction_vertices
        )));
    }
    let directory = BlockDirectory {
        r: lc.r,
        s,
        masks,
        n_u: lc.nu,
    };

    // Per (edge, unordered block pair): bitmasks over [L] marking values l
    // with some alpha in phi^{-1}(l) where both sets agree on bit 0 (has00)
    // or bit 1 (has11).
    let pair_profiles = |edge_idx: usize| -> Vec<(u64, u64)> {
        let table = &lc.projections[edge_idx];
        let masks = &directory.masks;
        let mut out = Vec::with_capacity(block * block);
        for a in 0..block {
            for b in 0..block {
                if b <= a {
                    out.push((0, 0));
                    continue;
                }
                let mut has00 = 0u64;
                let mut has11 = 0u64;
                for (alpha, &l_val) in table.iter().enumerate() {
                    let bit_a = masks[a] >> alpha & 1;
                    let bit_b = masks[b] >> alpha & 1;
                    if bit_a == bit_b {
                        if bit_a == 0 {
                            has00 |= 1 << l_val;
                        } else {
                            has11 |= 1 << l_val;
                        }
                    }
                }
                out.push((has00, has11));
            }
        }
        out
    };

    let mut hyperedges = Vec::new();
    let by_v = lc.edges_by_v();
    for edge_ids in &by_v {
        for (i, &e1) in edge_ids.iter().enumerate() {
            let (x, _) = lc.edges[e1];
            let profile_x = pair_profiles(e1);
            for &e2 in &edge_ids[i + 1..] {
                let (y, _) = lc.edges[e2];
                if y == x {
                    continue;
                }
                let profile_y = pair_profiles(e2);
                for a in 0..block {
                    for b in a + 1..block {
                        let (x00, x11) = profile_x[a * block + b];
                        for c in 0..block {
                            for d in c + 1..block {
                                let (y00, y11) = profile_y[c * block + d];
                                if x00 & y00 == 0 && x11 & y11 == 0 {
                                    hyperedges.push(vec![
                                        directory.global(x, a),
                                        directory.global(x, b),
                                        directory.global(y, c),
                                        directory.global(y, d),
                                    ]);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let h = UniformHypergraph::new(n, 4, hyperedges)?;
    Ok((h, directory))
}

/// The completeness coloring: vertex (x, A) gets color `A_{rho(x)}`.
/// Requires a satisfying assignment; violating edges are reported.
pub fn completeness_coloring(
    lc: &LabelCoverInstance,
    rho: &Assignment,
    h: &UniformHypergraph,
    dir: &BlockDirectory,
) -> Result<VertexColoring> {
    rho.validate(lc)?;
    for (idx, &(x, z)) in lc.edges.iter().enumerate() {
        if lc.projections[idx][rho.u_values[x]] != rho.v_values[z] {
            return Err(Error::Verification(format!(
                "assignment violates the constraint on edge ({x}, {z})"
            )));
        }
    }
    let colors: Vec<usize> = (0..h.n())
        .map(|v| {
            let (x, mask) = dir.decompose(v);
            (mask >> rho.u_values[x] & 1) as usize
        })
        .collect();
    let coloring = VertexColoring::new(colors, 2)?;
    if let Some(edge) = coloring.violating_hyperedge(h) {
        return Err(Error::Verification(format!(
            "completeness coloring is monochromatic on hyperedge {edge}"
        )));
    }
    Ok(coloring)
}

/// A representation the decoder can read orthogonality from.
pub enum DecodableRep<'a> {
    Exact(&'a ExactOrthogonalRepresentation),
    Real(&'a RealOrthogonalRepresentation),
}

impl DecodableRep<'_> {
    fn n(&self) -> usize {
        match self {
            DecodableRep::Exact(r) => r.n(),
            DecodableRep::Real(r) => r.n(),
        }
    }

    fn dim(&self) -> usize {
        match self {
            DecodableRep::Exact(r) => r.dim(),
            DecodableRep::Real(r) => r.dim(),
        }
    }

    fn orthogonal(&self, u: usize, v: usize) -> bool {
        match self {
            DecodableRep::Exact(r) => r.orthogonal(u, v),
            DecodableRep::Real(r) => r.orthogonal(u, v),
        }
    }
}

/// Decoder output: the assignment, the per-x candidate sets E(x), and the
/// U-vertices that had no violating pair (assigned by least index).
#[derive(Clone, Debug)]
pub struct DecodedAssignment {
    pub assignment: Assignment,
    pub candidate_sets: Vec<Vec<usize>>,
    pub fallback_vertices: Vec<usize>,
}

/// The randomized soundness decoder. Per block C[x], the least disjoint
/// pair (A, B) with non-orthogonal vectors yields E(x) = [R] \ (A u B) of
/// size exactly R - 2s, and rho(x) is drawn uniformly from E(x) using the
/// seeded generator (advanced in ascending x order). Each rho(z) maximizes
/// the number of x in U_z with a compatible image, ties to the least value.
/// Blocks without a violating pair fall back to label 0 and are flagged.
pub fn soundness_decode(
    lc: &LabelCoverInstance,
    dir: &BlockDirectory,
    rep: &DecodableRep<'_>,
    t: usize,
    seed: u64,
) -> Result<DecodedAssignment> {
    if rep.n() != lc.nu * dir.block_size() {
        return Err(Error::mismatch(
            "representation does not match the reduced hypergraph",
        ));
    }
    if rep.dim() > t {
        return Err(Error::invalid(format!(
            "decoder requires representation dimension <= t = {t}, got {}",
            rep.dim()
        )));
    }
    let block = dir.block_size();
    let mut rng = Rng::seed_from(seed);
    let mut u_values = vec![0usize; lc.nu];
    let mut candidate_sets = vec![Vec::new(); lc.nu];
    let mut fallback_vertices = Vec::new();
    for x in 0..lc.nu {
        let mut found = None;
        'pairs: for a in 0..block {
            for b in a + 1..block {
                if dir.masks[a] & dir.masks[b] != 0 {
                    continue;
                }
                if !rep.orthogonal(dir.global(x, a), dir.global(x, b)) {
                    found = Some((a, b));
                    break 'pairs;
                }
            }
        }
        match found {
            Some((a, b)) => {
                let union = dir.masks[a] | dir.masks[b];
                let e_set: Vec<usize> =
                    (0..lc.r).filter(|&alpha| union >> alpha & 1 == 0).collect();
                debug_assert_eq!(e_set.len(), lc.r - 2 * dir.s);
                u_values[x] = e_set[rng.next_usize_below(e_set.len())];
                candidate_sets[x] = e_set;
            }
            None => {
                u_values[x] = 0;
                fallback_vertices.push(x);
            }
        }
    }
    let by_v = lc.edges_by_v();
    let mut v_values = vec![0usize; lc.nv];
    for (z, edge_ids) in by_v.iter().enumerate() {
        let mut counts = vec![0usize; lc.l];
        for &idx in edge_ids {
            let (x, _) = lc.edges[idx];
            let mut images = std::collections::BTreeSet::new();
            for &alpha in &candidate_sets[x] {
                images.insert(lc.projections[idx][alpha]);
            }
            for beta in images {
                counts[beta] += 1;
            }
        }
        v_values[z] = counts
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .map(|(beta, _)| beta)
            .unwrap_or(0);
    }
    Ok(DecodedAssignment {
        assignment: Assignment { u_values, v_values },
        candidate_sets,
        fallback_vertices,
    })
}

/// An element of `[R]` contained in at least a 1/l fraction of a family of
/// l-sized sets, given a witness set that intersects every member. Returns
/// the least qualifying element.
pub fn pigeonhole_element(family: &[Vec<usize>], witness: usize) -> Result<usize> {
    if family.is_empty() {
        return Err(Error::invalid("empty family"));
    }
    if witness >= family.len() {
        return Err(Error::invalid("witness index out of range"));
    }
    let set_size = family[witness].len();
    if set_size == 0 || family.iter().any(|s| s.len() != set_size) {
        return Err(Error::invalid("family members must share a positive size"));
    }
    let witness_set: std::collections::BTreeSet<usize> =
        family[witness].iter().copied().collect();
    for (idx, member) in family.iter().enumerate() {
        if !member.iter().any(|e| witness_set.contains(e)) {
            return Err(Error::invalid(format!(
                "witness does not intersect family member {idx}"
            )));
        }
    }
    let mut counts = std::collections::BTreeMap::new();
    for member in family {
        for &e in member {
            *counts.entry(e).or_insert(0usize) += 1;
        }
    }
    counts
        .into_iter()
        .find(|&(_, c)| c * set_size >= family.len())
        .map(|(e, _)| e)
        .ok_or_else(|| Error::Verification("pigeonhole element missing despite witness".into()))
}
