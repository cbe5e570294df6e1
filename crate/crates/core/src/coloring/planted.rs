use crate::combinatorics::{binomial, kneser_graph, Graph};
use crate::error::{Error, Result};
use crate::rng::Rng;

/// Families of test instances whose orthogonality dimension is at most 3 by
/// construction: random tripartite graphs (3-colorable) and random induced
/// subgraphs of Kneser graphs K(2s+1, s) (dimension exactly 3 for the full
/// graph).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PlantedKind {
    Tripartite { edge_probability: f64 },
    KneserSub,
}

/// Deterministic generator for promise instances. Tripartite instances use
/// three contiguous near-equal parts with independent cross-part coin flips;
/// Kneser subgraphs sample a random vertex subset of the smallest K(2s+1, s)
/// that fits.
pub fn planted_od3_instance(n: usize, kind: PlantedKind, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("instances need at least one vertex"));
    }
    let mut rng = Rng::seed_from(seed);
    match kind {
        PlantedKind::Tripartite { edge_probability } => {
            if !(0.0..=1.0).contains(&edge_probability) {
                return Err(Error::invalid("edge probability must lie in [0, 1]"));
            }
            let part = |v: usize| v * 3 / n;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if part(u) != part(v) && rng.next_bool(edge_probability) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges)
        }
        PlantedKind::KneserSub => {
            let mut s = 1u32;
            while binomial(2 * s as u64 + 1, s as u64).map(|b| (b as usize) < n).unwrap_or(false)
            {
                s += 1;
                if 2 * s + 1 > 63 {
                    return Err(Error::capacity("instance too large for a Kneser host"));
                }
            }
            let host = kneser_graph(2 * s + 1, s)?;
            let mut vertices: Vec<usize> = (0..host.n()).collect();
            rng.shuffle(&mut vertices);
            let chosen: Vec<usize> = vertices.into_iter().take(n).collect();
            let (induced, _) = host.induced(&chosen)?;
            Ok(induced)
        }
    }
}

/// The 3-coloring a tripartite instance was planted with.
pub fn tripartite_parts(n: usize) -> Vec<usize> {
    (0..n).map(|v| v * 3 / n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::VertexColoring;

    #[test]
    fn tripartite_is_three_colorable_by_construction() {
        let g = planted_od3_instance(
            30,
            PlantedKind::Tripartite {
                edge_probability: 0.5,
            },
            9,
        )
        .unwrap();
        let coloring = VertexColoring::new(tripartite_parts(30), 3).unwrap();
        assert!(coloring.is_proper_on_graph(&g));
    }

    #[test]
    fn fixed_seed_reproduces() {
        for kind in [
            PlantedKind::Tripartite {
                edge_probability: 0.3,
            },
            PlantedKind::KneserSub,
        ] {
            let a = planted_od3_instance(20, kind, 5).unwrap();
            let b = planted_od3_instance(20, kind, 5).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn edge_density_matches_probability() {
        // Cross-part pair count times p, within 3 sigma.
        let n = 120;
        let p = 0.4;
        let g = planted_od3_instance(
            n,
            PlantedKind::Tripartite {
                edge_probability: p,
            },
            31,
        )
        .unwrap();
        let parts = tripartite_parts(n);
        let cross_pairs = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| parts[u] != parts[v])
            .count() as f64;
        let expected = cross_pairs * p;
        let sigma = (cross_pairs * p * (1.0 - p)).sqrt();
        assert!(
            (g.m() as f64 - expected).abs() <= 3.0 * sigma,
            "observed {} expected {expected} sigma {sigma}",
            g.m()
        );
    }

    #[test]
    fn kneser_subgraphs_have_dimension_at_most_three() {
        // Induced subgraphs inherit representations, so a 3-dimensional
        // representation of the host restricts to the sample.
        let g = planted_od3_instance(8, PlantedKind::KneserSub, 2).unwrap();
        assert_eq!(g.n(), 8);
        // The host K(5,2) is 3-chromatic; the sample must be too.
        let limits = crate::limits::SearchLimits::default();
        let (chi, _) = crate::combinatorics::chromatic_number_exact(&g, &limits).unwrap();
        assert!(chi <= 3);
    }
}
