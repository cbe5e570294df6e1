//! Karger-Motwani-Sudan hyperplane rounding: project the vector coloring on
//! a random direction, keep the vertices above a degree-dependent threshold,
//! and prune surviving edges by dropping the lower-scoring endpoint. The
//! returned set is always verified independent.

use crate::combinatorics::Graph;
use crate::error::{Error, Result};
use crate::rng::Rng;

use super::solver::{EdgeConstraint, SdpConfig, VectorColoring};

/// One rounding trial; returns the surviving independent set.
fn round_once(g: &Graph, vc: &VectorColoring, threshold: f64, rng: &mut Rng) -> Vec<usize> {
    let rank = vc.rank();
    let direction: Vec<f64> = (0..rank).map(|_| rng.next_normal()).collect();
    let scores: Vec<f64> = (0..g.n())
        .map(|v| {
            vc.vectors[v]
                .iter()
                .zip(&direction)
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect();
    let mut selected: Vec<bool> = scores.iter().map(|&s| s >= threshold).collect();
    for &(u, v) in g.edges() {
        if selected[u] && selected[v] {
            // Drop the lower-scoring endpoint; ties drop the larger index.
            if scores[u] < scores[v] || (scores[u] == scores[v] && u > v) {
                selected[u] = false;
            } else {
                selected[v] = false;
            }
        }
    }
    (0..g.n()).filter(|&v| selected[v]).collect()
}

fn is_independent(g: &Graph, set: &[usize]) -> bool {
    let mut selected = vec![false; g.n()];
    for &v in set {
        selected[v] = true;
    }
    g.edges().iter().all(|&(u, v)| !(selected[u] && selected[v]))
}

/// Extracts an independent set from a feasible vector coloring at `kappa`.
///
/// The threshold is `sqrt(2 (1 - 2/kappa) ln(Delta + 1))` with Delta the
/// maximum degree; `cfg.rounding_trials` independent trials run with
/// per-trial derived seeds and the largest set wins (earliest trial on
/// ties). At kappa = 2 the threshold degenerates, so a bipartition's larger
/// class is used when one exists.
pub fn kms_independent_set(
    g: &Graph,
    vc: &VectorColoring,
    kappa: f64,
    seed: u64,
    cfg: &SdpConfig,
) -> Result<Vec<usize>> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    if kappa < 2.0 {
        return Err(Error::invalid("rounding requires kappa >= 2"));
    }
    if g.m() == 0 {
        return Ok((0..g.n()).collect());
    }
    if vc.vectors.len() != g.n() {
        return Err(Error::mismatch("vector coloring does not match the graph"));
    }
    let residual = vc.measure_residual(g, EdgeConstraint::AtMost, kappa);
    if residual > 10.0 * cfg.eps_con + cfg.eps_diag {
        return Err(Error::Verification(format!(
            "vector coloring infeasible at kappa {kappa}: residual {residual}"
        )));
    }
    if kappa <= 2.0 + 1e-12 {
        if let Some(colors) = g.bipartition() {
            let zeros: Vec<usize> = (0..g.n()).filter(|&v| colors[v] == 0).collect();
            let ones: Vec<usize> = (0..g.n()).filter(|&v| colors[v] == 1).collect();
            return Ok(if zeros.len() >= ones.len() { zeros } else { ones });
        }
    }
    let max_degree = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0) as f64;
    let threshold = (2.0 * (1.0 - 2.0 / kappa).max(0.0) * (max_degree + 1.0).ln()).sqrt();
    let trials = cfg.rounding_trials.max(1);
    let master = Rng::seed_from(seed);
    let run_trial = |trial: usize| -> Vec<usize> {
        let mut rng = master.derive(trial as u64);
        round_once(g, vc, threshold, &mut rng)
    };
    let workers = cfg.workers.max(1).min(trials);
    let results: Vec<Vec<usize>> = if workers <= 1 {
        (0..trials).map(run_trial).collect()
    } else {
        std::thread::scope(|scope| {
            let run_trial = &run_trial;
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        let mut out = Vec::new();
                        let mut trial = w;
                        while trial < trials {
                            out.push((trial, run_trial(trial)));
                            trial += workers;
                        }
                        out
                    })
                })
                .collect();
            let mut collected: Vec<(usize, Vec<usize>)> = handles
                .into_iter()
                .flat_map(|h| h.join().unwrap())
                .collect();
            collected.sort_by_key(|(trial, _)| *trial);
            collected.into_iter().map(|(_, set)| set).collect()
        })
    };
    let mut best: Vec<usize> = Vec::new();
    for set in results {
        if set.len() > best.len() {
            best = set;
        }
    }
    if !is_independent(g, &best) {
        return Err(Error::Verification(
            "rounding produced a dependent set; pruning is broken".into(),
        ));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sdp::solver::vector_chromatic;

    #[test]
    fn edgeless_returns_everything() {
        let g = Graph::empty(5);
        let vc = VectorColoring {
            kappa: 1.0,
            vectors: vec![vec![1.0]; 5],
            residual: 0.0,
        };
        let set = kms_independent_set(&g, &vc, 2.0, 7, &SdpConfig::default()).unwrap();
        assert_eq!(set, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn petersen_rounding_is_independent_and_deterministic() {
        let g = crate::combinatorics::kneser_graph(5, 2).unwrap();
        let cfg = SdpConfig::default();
        let out = vector_chromatic(&g, &cfg).unwrap();
        let kappa = out.kappa.max(2.0);
        let a = kms_independent_set(&g, &out.coloring, kappa, 99, &cfg).unwrap();
        let b = kms_independent_set(&g, &out.coloring, kappa, 99, &cfg).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
        for (i, &u) in a.iter().enumerate() {
            for &v in &a[i + 1..] {
                assert!(!g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn parallel_trials_match_sequential() {
        let g = crate::combinatorics::kneser_graph(5, 2).unwrap();
        let cfg = SdpConfig::default();
        let out = vector_chromatic(&g, &cfg).unwrap();
        let seq = kms_independent_set(&g, &out.coloring, out.kappa.max(2.0), 3, &cfg).unwrap();
        let par_cfg = SdpConfig {
            workers: 4,
            ..SdpConfig::default()
        };
        let par = kms_independent_set(&g, &out.coloring, out.kappa.max(2.0), 3, &par_cfg).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn infeasible_coloring_is_rejected() {
        let g = Graph::complete(3);
        // All-equal vectors are wildly infeasible at kappa 3.
        let vc = VectorColoring {
            kappa: 3.0,
            vectors: vec![vec![1.0, 0.0]; 3],
            residual: 0.0,
        };
        assert!(kms_independent_set(&g, &vc, 3.0, 1, &SdpConfig::default()).is_err());
    }

    #[test]
    fn bipartite_fallback_at_kappa_two() {
        let g = Graph::cycle(6);
        let cfg = SdpConfig::default();
        let out = vector_chromatic(&g, &cfg).unwrap();
        assert!((out.kappa - 2.0).abs() < 1e-6);
        let set = kms_independent_set(&g, &out.coloring, 2.0, 5, &cfg).unwrap();
        assert_eq!(set.len(), 3);
    }
}
