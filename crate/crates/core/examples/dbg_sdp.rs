use orthodim::combinatorics::{kneser_graph, Graph};
use orthodim::rng::Rng;
use orthodim::sdp::{vector_chromatic, vector_chromatic_feasible_at, SdpConfig};

fn planted_tripartite(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = Rng::seed_from(seed);
    let part = |v: usize| v * 3 / n;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part(u) != part(v) && rng.next_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

fn main() {
    let g = kneser_graph(5, 2).unwrap();
    let t0 = std::time::Instant::now();
    let out = vector_chromatic(&g, &SdpConfig::default()).unwrap();
    println!("petersen bisect: kappa={:.6} in {:?}", out.kappa, t0.elapsed());

    let loose = SdpConfig {
        eps_con: 1e-4,
        ..SdpConfig::default()
    };
    for (n, p) in [(64usize, 0.2f64), (128, 0.15), (256, 0.08)] {
        let g = planted_tripartite(n, p, 42);
        let t0 = std::time::Instant::now();
        let feas = vector_chromatic_feasible_at(&g, 3.0, &loose, None).unwrap();
        let time_feas = t0.elapsed();
        let residual = feas.as_ref().map(|o| o.coloring.residual);
        println!(
            "tripartite n={n} p={p}: feasible@3={} residual={residual:?} in {time_feas:?}",
            feas.is_some()
        );
    }
}
