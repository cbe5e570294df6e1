use orthodim::combinatorics::Graph;
use orthodim::rng::Rng;

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

fn bm(g: &Graph, t: f64, rank: usize, lr_scale: f64, momentum: f64, sweeps: usize, seed: u64) -> (f64, usize) {
    let n = g.n();
    let edges = g.edges();
    let mut rng = Rng::seed_from(seed);
    let mut vectors: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            let mut v: Vec<f64> = (0..rank).map(|_| rng.next_normal()).collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-12);
            v.iter_mut().for_each(|x| *x /= norm);
            v
        })
        .collect();
    let maxdeg = (0..n).map(|v| g.degree(v)).max().unwrap_or(1).max(1);
    let lr = lr_scale / maxdeg as f64;
    let mut velocity = vec![vec![0.0; rank]; n];
    for sweep in 0..sweeps {
        let mut grad = vec![vec![0.0; rank]; n];
        let mut worst = 0.0f64;
        for &(u, v) in edges {
            let dot: f64 = vectors[u].iter().zip(&vectors[v]).map(|(a, b)| a * b).sum();
            let viol = (dot - t).max(0.0);
            worst = worst.max(viol);
            if viol > 0.0 {
                for k in 0..rank {
                    grad[u][k] += viol * vectors[v][k];
                    grad[v][k] += viol * vectors[u][k];
                }
            }
        }
        if worst < 1e-7 {
            return (worst, sweep);
        }
        for v in 0..n {
            for k in 0..rank {
                velocity[v][k] = momentum * velocity[v][k] - lr * grad[v][k];
                vectors[v][k] += velocity[v][k];
            }
            let norm = vectors[v].iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-12);
            vectors[v].iter_mut().for_each(|x| *x /= norm);
        }
    }
    // final worst
    let mut worst = 0.0f64;
    for &(u, v) in edges {
        let dot: f64 = vectors[u].iter().zip(&vectors[v]).map(|(a, b)| a * b).sum();
        worst = worst.max((dot - t).max(0.0));
    }
    (worst, sweeps)
}

fn main() {
    for (n, p) in [(64usize, 0.2f64), (128, 0.15), (256, 0.08)] {
        let g = planted_tripartite(n, p, 42);
        for rank in [8usize, ((2*n) as f64).sqrt() as usize + 2] {
            for lr_scale in [0.9f64, 2.0] {
                for momentum in [0.9f64, 0.95] {
                    let t0 = std::time::Instant::now();
                    let (worst, sweeps) = bm(&g, -0.5, rank, lr_scale, momentum, 30000, 7);
                    println!(
                        "n={n} rank={rank} lr={lr_scale} mom={momentum}: worst={worst:.2e} sweeps={sweeps} in {:?}",
                        t0.elapsed()
                    );
                }
            }
        }
    }
}
