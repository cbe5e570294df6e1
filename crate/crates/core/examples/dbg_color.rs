use orthodim::combinatorics::format::parse_graph;
use orthodim::sdp::{vector_chromatic_feasible_at, SdpConfig};
use std::time::Instant;

fn main() {
    let g = parse_graph(&std::fs::read_to_string("/tmp/dump/infeasible_26.g").unwrap()).unwrap();
    // Different init seeds.
    for seed in [1u64, 2, 3, 4, 5] {
        let cfg = SdpConfig { eps_con: 1e-4, seed, ..SdpConfig::default() };
        let t0 = Instant::now();
        let feas = vector_chromatic_feasible_at(&g, 3.0, &cfg, None).unwrap();
        println!("seed={seed}: feasible={} in {:?}", feas.is_some(), t0.elapsed());
    }
    // More patient iteration budget.
    let cfg = SdpConfig { eps_con: 1e-4, max_iters: 300_000, ..SdpConfig::default() };
    let t0 = Instant::now();
    let feas = vector_chromatic_feasible_at(&g, 3.0, &cfg, None).unwrap();
    println!("patient: feasible={} in {:?}", feas.is_some(), t0.elapsed());
}
