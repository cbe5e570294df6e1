//! Coloring algorithm for graphs promised to satisfy od_k <= 3k: repeatedly
//! extract an independent set and recolor the residual graph.
//!
//! Each extraction splits on the maximum degree. A vertex of degree at
//! least n^exponent has a 2-colorable neighborhood under the promise, so
//! the larger class of a neighborhood 2-coloring is an independent set of
//! at least half its degree. Otherwise the vector chromatic program is
//! solved at kappa = 3 (feasible under the promise) and rounded by random
//! hyperplanes. Promise violations are absorbed or aborted on, by policy.

mod planted;
mod report;

pub use planted::{planted_od3_instance, tripartite_parts, PlantedKind};
pub use report::{parse_report, write_report, Branch, ColoringReport, IterationLog};

use crate::combinatorics::{two_color_neighborhood, Graph, VertexColoring};
use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::sdp::{
    kms_independent_set, vector_chromatic, vector_chromatic_feasible_at, GramMatrix, SdpConfig,
};

/// What to do when the od promise is observably false.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PromisePolicy {
    /// Log the violation, fall back to a greedy independent set, continue.
    BestEffort,
    /// Abort with diagnostics.
    Strict,
}

/// Run configuration for the coloring pipeline.
#[derive(Clone, Debug)]
pub struct ColoringRunConfig {
    /// Degree threshold is n^exponent on the current residual graph.
    pub degree_exponent: f64,
    pub sdp: SdpConfig,
    pub seed: u64,
    pub policy: PromisePolicy,
}

impl Default for ColoringRunConfig {
    fn default() -> Self {
        ColoringRunConfig {
            degree_exponent: 0.75,
            // The rounding step tolerates approximate feasibility, so the
            // pipeline default trades constraint accuracy for solve speed.
            sdp: SdpConfig {
                eps_con: 1e-4,
                ..SdpConfig::default()
            },
            seed: 1,
            policy: PromisePolicy::BestEffort,
        }
    }
}

impl ColoringRunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.degree_exponent > 0.0 && self.degree_exponent < 1.0) {
            return Err(Error::invalid("degree exponent must lie in (0, 1)"));
        }
        self.sdp.validate()
    }
}

/// One extracted independent set with its provenance.
#[derive(Clone, Debug)]
pub struct ExtractedSet {
    pub vertices: Vec<usize>,
    pub branch: Branch,
    pub violations: Vec<String>,
}

/// Deterministic greedy independent set (repeatedly take the minimum-degree
/// vertex, lowest index on ties, and delete its neighborhood).
fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let mut alive: Vec<bool> = vec![true; g.n()];
    let mut out = Vec::new();
    loop {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..g.n() {
            if !alive[v] {
                continue;
            }
            let deg = g.neighbors(v).iter().filter(|&&u| alive[u]).count();
            if best.map(|(bd, bv)| (deg, v) < (bd, bv)).unwrap_or(true) {
                best = Some((deg, v));
            }
        }
        match best {
            None => return out,
            Some((_, v)) => {
                out.push(v);
                alive[v] = false;
                for &u in g.neighbors(v) {
                    alive[u] = false;
                }
            }
        }
    }
}

fn sdp_branch(
    g: &Graph,
    cfg: &ColoringRunConfig,
    warm: Option<&GramMatrix>,
    seed: u64,
    violations: &mut Vec<String>,
) -> Result<(Vec<usize>, Option<GramMatrix>)> {
    let target_kappa = 3.0;
    // Small residual cores can be tight 3-chromatic graphs where the
    // feasible set at kappa = 3 is thin; their per-iteration cost is tiny,
    // so scale the projection budget up as the graph shrinks.
    let scaled = SdpConfig {
        max_iters: cfg.sdp.max_iters.max(8_000_000 / g.n().max(8)),
        ..cfg.sdp
    };
    let feasible = vector_chromatic_feasible_at(g, target_kappa, &scaled, warm)?;
    let (outcome, kappa) = match feasible {
        Some(outcome) => (outcome, target_kappa),
        None => {
            if let Some(dir) = std::env::var_os("ORTHODIM_DUMP_INFEASIBLE") {
                let path = std::path::Path::new(&dir).join(format!("infeasible_{}.g", g.n()));
                let _ = std::fs::write(&path, crate::combinatorics::format::write_graph(g));
            }
            violations.push(format!(
                "vector chromatic infeasible at kappa 3 on a residual graph with {} vertices",
                g.n()
            ));
            if cfg.policy == PromisePolicy::Strict {
                return Err(Error::Verification(
                    "promise violated: vector chromatic number exceeds 3".into(),
                ));
            }
            // Best effort: solve for the actual kappa and round there.
            let solved = vector_chromatic(g, &cfg.sdp)?;
            let kappa = solved.kappa.max(2.0);
            (solved, kappa)
        }
    };
    let set = kms_independent_set(g, &outcome.coloring, kappa, seed, &cfg.sdp)?;
    Ok((set, Some(outcome.gram)))
}

/// Extracts one independent set from `g` along with the branch taken.
/// `warm` optionally carries a Gram matrix of a feasible vector coloring of
/// a supergraph restricted to `g` (exactly feasible, so re-certification is
/// immediate).
fn extract_independent_set(
    g: &Graph,
    cfg: &ColoringRunConfig,
    warm: Option<&GramMatrix>,
    seed: u64,
) -> Result<(ExtractedSet, Option<GramMatrix>)> {
    if g.n() == 0 {
        return Err(Error::invalid("empty graph"));
    }
    let mut violations = Vec::new();
    if g.m() == 0 {
        return Ok((
            ExtractedSet {
                vertices: (0..g.n()).collect(),
                branch: Branch::Edgeless,
                violations,
            },
            None,
        ));
    }
    let (max_deg, v) = g.max_degree().expect("nonempty graph");
    let threshold = (g.n() as f64).powf(cfg.degree_exponent);
    if (max_deg as f64) >= threshold {
        match two_color_neighborhood(g, v)? {
            Some(nc) => {
                let class = nc.larger_class();
                if class.len() < max_deg.div_ceil(2) {
                    return Err(Error::Verification(format!(
                        "high-degree class of size {} below half of degree {max_deg}",
                        class.len()
                    )));
                }
                ensure_independent(g, &class)?;
                return Ok((
                    ExtractedSet {
                        vertices: class,
                        branch: Branch::HighDegree,
                        violations,
                    },
                    None,
                ));
            }
            None => {
                violations.push(format!(
                    "neighborhood of vertex {v} (degree {max_deg}) is not 2-colorable"
                ));
                if cfg.policy == PromisePolicy::Strict {
                    return Err(Error::Verification(format!(
                        "promise violated: neighborhood of vertex {v} is not 2-colorable"
                    )));
                }
                return Ok((
                    ExtractedSet {
                        vertices: greedy_independent_set(g),
                        branch: Branch::GreedyFallback,
                        violations,
                    },
                    None,
                ));
            }
        }
    }
    let (mut set, gram) = sdp_branch(g, cfg, warm, seed, &mut violations)?;
    if set.is_empty() {
        // Rounding can come back empty on tiny graphs; a singleton keeps the
        // outer loop moving.
        set.push(0);
    }
    ensure_independent(g, &set)?;
    let branch = if violations.is_empty() {
        Branch::Sdp
    } else {
        Branch::GreedyFallback
    };
    Ok((
        ExtractedSet {
            vertices: set,
            branch,
            violations,
        },
        gram,
    ))
}

fn ensure_independent(g: &Graph, set: &[usize]) -> Result<()> {
    let mut selected = vec![false; g.n()];
    for &v in set {
        selected[v] = true;
    }
    if let Some(&(u, v)) = g
        .edges()
        .iter()
        .find(|&&(u, v)| selected[u] && selected[v])
    {
        return Err(Error::Verification(format!(
            "extracted set contains the edge ({u}, {v})"
        )));
    }
    Ok(())
}

/// Public single-shot form: one independent set from `g` plus the branch
/// tag and any promise-violation diagnostics.
pub fn find_independent_set_od3(g: &Graph, cfg: &ColoringRunConfig) -> Result<ExtractedSet> {
    cfg.validate()?;
    let seed = Rng::seed_from(cfg.seed).next_u64();
    extract_independent_set(g, cfg, None, seed).map(|(set, _)| set)
}

/// The full coloring loop: extract an independent set of the residual
/// graph, give it a fresh color, remove it, repeat. Every iteration removes
/// at least one vertex, so the loop terminates; the returned coloring is
/// verified proper regardless of promise validity.
pub fn color_od3_graph(g: &Graph, cfg: &ColoringRunConfig) -> Result<ColoringReport> {
    cfg.validate()?;
    if g.n() == 0 {
        return Err(Error::invalid("empty graph"));
    }
    let master = Rng::seed_from(cfg.seed);
    let mut colors = vec![usize::MAX; g.n()];
    let mut alive: Vec<usize> = (0..g.n()).collect();
    let mut log = Vec::new();
    let mut violations = Vec::new();
    // Gram matrix over the current residual graph, kept feasible by
    // restriction as vertices leave.
    let mut warm: Option<GramMatrix> = None;
    let mut iteration = 0usize;
    while !alive.is_empty() {
        let (residual, map) = g.induced(&alive)?;
        let seed = master.derive(iteration as u64).next_u64();
        let (extracted, gram) =
            extract_independent_set(&residual, cfg, warm.as_ref(), seed)?;
        debug_assert!(!extracted.vertices.is_empty());
        for &local in &extracted.vertices {
            colors[map[local]] = iteration;
        }
        log.push(IterationLog {
            iteration,
            branch: extracted.branch,
            set_size: extracted.vertices.len(),
            residual_n: residual.n(),
        });
        violations.extend(extracted.violations);
        // Surviving local indices, for both the alive list and the warm
        // Gram restriction.
        let removed: std::collections::BTreeSet<usize> =
            extracted.vertices.iter().copied().collect();
        let survivors: Vec<usize> =
            (0..residual.n()).filter(|i| !removed.contains(i)).collect();
        warm = gram
            .or(warm)
            .map(|m| m.restrict(&survivors))
            .filter(|m| m.n() == survivors.len());
        alive = survivors.iter().map(|&i| map[i]).collect();
        iteration += 1;
    }
    let palette = iteration.max(1);
    let coloring = VertexColoring::new(colors, palette)?;
    if !coloring.is_proper_on_graph(g) {
        return Err(Error::Verification(
            "pipeline produced an improper coloring".into(),
        ));
    }
    Ok(ColoringReport {
        colors: coloring.used_colors(),
        coloring,
        log,
        promise_violations: violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(seed: u64) -> ColoringRunConfig {
        ColoringRunConfig {
            seed,
            ..ColoringRunConfig::default()
        }
    }

    #[test]
    fn edgeless_graph_uses_one_color() {
        let g = Graph::empty(7);
        let report = color_od3_graph(&g, &cfg(1)).unwrap();
        assert_eq!(report.colors, 1);
        assert_eq!(report.log[0].branch, Branch::Edgeless);
    }

    #[test]
    fn star_takes_the_high_degree_branch() {
        // K_{1,8}: the center has degree 8 >= 9^{3/4} ~ 5.2.
        let edges: Vec<(usize, usize)> = (1..9).map(|v| (0, v)).collect();
        let g = Graph::new(9, edges).unwrap();
        let set = find_independent_set_od3(&g, &cfg(3)).unwrap();
        assert_eq!(set.branch, Branch::HighDegree);
        assert_eq!(set.vertices, (1..9).collect::<Vec<_>>());
    }

    #[test]
    fn k5_violates_and_falls_back() {
        // Degree 4 >= 5^{3/4} ~ 3.34 but neighborhoods are K4: promise
        // violated, greedy fallback engages.
        let g = Graph::complete(5);
        let set = find_independent_set_od3(&g, &cfg(3)).unwrap();
        assert_eq!(set.branch, Branch::GreedyFallback);
        assert!(!set.violations.is_empty());
        assert_eq!(set.vertices.len(), 1);

        let strict = ColoringRunConfig {
            policy: PromisePolicy::Strict,
            ..cfg(3)
        };
        assert!(find_independent_set_od3(&g, &strict).is_err());
    }

    #[test]
    fn petersen_coloring_is_proper_and_fixed_seed_deterministic() {
        let g = crate::combinatorics::kneser_graph(5, 2).unwrap();
        let a = color_od3_graph(&g, &cfg(77)).unwrap();
        let b = color_od3_graph(&g, &cfg(77)).unwrap();
        assert!(a.coloring.is_proper_on_graph(&g));
        assert!(a.promise_violations.is_empty());
        assert_eq!(write_report(&a), write_report(&b));
        assert_eq!(a.coloring, b.coloring);
    }

    #[test]
    fn small_tripartite_runs_the_sdp_branch() {
        let g = planted_od3_instance(
            24,
            PlantedKind::Tripartite {
                edge_probability: 0.2,
            },
            5,
        )
        .unwrap();
        let report = color_od3_graph(&g, &cfg(9)).unwrap();
        assert!(report.coloring.is_proper_on_graph(&g));
        assert!(report.promise_violations.is_empty(), "{:?}", report.promise_violations);
        assert!(report.log.iter().any(|e| e.branch == Branch::Sdp));
    }
}
