use crate::error::{Error, Result};

use super::Graph;

/// All s-subsets of `[d]` as bitmasks in increasing value order. The mask
/// order is the canonical vertex order used by every generator here, so
/// vertex indices are stable across modules.
pub fn subset_vertices(d: u32, s: u32) -> Vec<u64> {
    assert!(d <= 63 && s <= d);
    if s == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let limit = 1u64 << d;
    // Gosper's hack walks the s-subsets in increasing mask order.
    let mut mask = (1u64 << s) - 1;
    while mask < limit {
        out.push(mask);
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        if c == 0 {
            break;
        }
    }
    out
}

/// Stable s-subsets of `[d]`: no two elements cyclically consecutive.
pub fn stable_subset_vertices(d: u32, s: u32) -> Vec<u64> {
    let full = (1u64 << d) - 1;
    subset_vertices(d, s)
        .into_iter()
        .filter(|&m| {
            let rotated = ((m << 1) | (m >> (d - 1))) & full;
            m & rotated == 0
        })
        .collect()
}

fn check_kneser_params(d: u32, s: u32) -> Result<()> {
    if s < 1 || d < 2 * s {
        return Err(Error::invalid(format!(
            "Kneser-type parameters require d >= 2s >= 2, got d={d}, s={s}"
        )));
    }
    if d > 63 {
        return Err(Error::capacity("ground sets are limited to 63 elements"));
    }
    Ok(())
}

fn disjointness_graph(masks: &[u64]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(masks.len(), edges).expect("valid disjointness graph")
}

/// The Kneser graph K(d,s): s-subsets of `[d]`, adjacent iff disjoint.
pub fn kneser_graph(d: u32, s: u32) -> Result<Graph> {
    check_kneser_params(d, s)?;
    Ok(disjointness_graph(&subset_vertices(d, s)))
}

/// The Schrijver graph S(d,s): the subgraph of K(d,s) induced by the stable
/// s-subsets.
pub fn schrijver_graph(d: u32, s: u32) -> Result<Graph> {
    check_kneser_params(d, s)?;
    Ok(disjointness_graph(&stable_subset_vertices(d, s)))
}

/// The Frankl-Rodl-type graph on t/2-subsets of `[t]`, adjacent when the
/// intersection has size exactly t/4. Carries a t-dimensional +-1
/// orthogonal representation while its chromatic number grows exponentially.
pub fn frankl_rodl_graph(t: u32) -> Result<Graph> {
    if t == 0 || t % 4 != 0 {
        return Err(Error::invalid(format!(
            "the construction needs t divisible by 4, got t={t}"
        )));
    }
    if t > 32 {
        return Err(Error::capacity("t is limited to 32"));
    }
    let masks = subset_vertices(t, t / 2);
    let quarter = t / 4;
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if (masks[i] & masks[j]).count_ones() == quarter {
                edges.push((i, j));
            }
        }
    }
    Graph::new(masks.len(), edges)
}

/// The lexicographic product `g1 . g2`: vertex set V1 x V2 in row-major
/// order; `(x1,y1) ~ (x2,y2)` iff `{x1,x2}` is an edge of g1, or `x1 = x2`
/// and `{y1,y2}` is an edge of g2.
pub fn lexicographic_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(Error::invalid("lexicographic product of an empty graph"));
    }
    let n2 = g2.n();
    let mut edges = Vec::new();
    for &(x1, x2) in g1.edges() {
        for y1 in 0..n2 {
            for y2 in 0..n2 {
                edges.push((x1 * n2 + y1, x2 * n2 + y2));
            }
        }
    }
    for x in 0..g1.n() {
        for &(y1, y2) in g2.edges() {
            edges.push((x * n2 + y1, x * n2 + y2));
        }
    }
    Graph::new(g1.n() * n2, edges)
}

/// Binomial coefficient with overflow checking.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_counts() {
        let g = kneser_graph(5, 2).unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!(g.neighbors(0).iter().all(|&v| v != 0));
    }

    #[test]
    fn kneser_4_2_is_a_perfect_matching() {
        let g = kneser_graph(4, 2).unwrap();
        assert_eq!((g.n(), g.m()), (6, 3));
        assert!((0..6).all(|v| g.degree(v) == 1));
    }

    #[test]
    fn kneser_2_1_is_an_edge() {
        let g = kneser_graph(2, 1).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn kneser_edge_count_formula() {
        for (d, s) in [(4u64, 2u64), (5, 2), (6, 2), (6, 3), (7, 2), (7, 3), (8, 3)] {
            let g = kneser_graph(d as u32, s as u32).unwrap();
            let expected = binomial(d, s).unwrap() * binomial(d - s, s).unwrap() / 2;
            assert_eq!(g.m() as u64, expected, "K({d},{s})");
        }
    }

    #[test]
    fn kneser_rejects_bad_params() {
        assert!(kneser_graph(3, 2).is_err());
        assert!(kneser_graph(4, 0).is_err());
    }

    #[test]
    fn schrijver_4_2() {
        let g = schrijver_graph(4, 2).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(stable_subset_vertices(4, 2), vec![0b0101, 0b1010]);
    }

    #[test]
    fn schrijver_5_2_is_a_5_cycle() {
        let g = schrijver_graph(5, 2).unwrap();
        assert_eq!((g.n(), g.m()), (5, 5));
        assert!((0..5).all(|v| g.degree(v) == 2));
        assert!(g.bipartition().is_none());
    }

    #[test]
    fn schrijver_6_2_vertex_count_and_bound() {
        let g = schrijver_graph(6, 2).unwrap();
        assert_eq!(g.n(), 9);
        assert!(g.n() as u64 <= binomial(6, 2).unwrap());
    }

    #[test]
    fn schrijver_vertex_bound_holds_generally() {
        for (d, s) in [(6u32, 2u32), (7, 2), (7, 3), (8, 2), (8, 3), (9, 4)] {
            let count = stable_subset_vertices(d, s).len() as u64;
            assert!(
                count <= binomial(d as u64, (d - 2 * s) as u64).unwrap(),
                "S({d},{s})"
            );
        }
    }

    #[test]
    fn schrijver_is_induced_in_kneser() {
        for (d, s) in [(5u32, 2u32), (6, 2), (7, 3)] {
            let kneser_masks = subset_vertices(d, s);
            let stable = stable_subset_vertices(d, s);
            let k = kneser_graph(d, s).unwrap();
            let s_graph = schrijver_graph(d, s).unwrap();
            let positions: Vec<usize> = stable
                .iter()
                .map(|m| kneser_masks.binary_search(m).unwrap())
                .collect();
            let (induced, _) = k.induced(&positions).unwrap();
            assert_eq!(induced, s_graph, "S({d},{s}) inside K({d},{s})");
        }
    }

    #[test]
    fn frankl_rodl_small_cases() {
        let g4 = frankl_rodl_graph(4).unwrap();
        assert_eq!((g4.n(), g4.m()), (6, 12));
        let g8 = frankl_rodl_graph(8).unwrap();
        assert_eq!(g8.n(), 70);
        assert!(frankl_rodl_graph(6).is_err());
    }

    #[test]
    fn lexicographic_products() {
        let k3 = Graph::complete(3);
        let k2 = Graph::complete(2);
        let prod = lexicographic_product(&k3, &k2).unwrap();
        assert_eq!(prod, Graph::complete(6));

        let single = Graph::empty(1);
        let c4 = Graph::cycle(4);
        assert_eq!(lexicographic_product(&c4, &single).unwrap(), c4);

        let c4k2 = lexicographic_product(&c4, &k2).unwrap();
        assert_eq!((c4k2.n(), c4k2.m()), (8, 20));
    }

    #[test]
    fn lexicographic_product_is_associative_up_to_relabeling() {
        use crate::rng::Rng;
        let mut rng = Rng::seed_from(17);
        for _ in 0..25 {
            let mut graphs = Vec::new();
            for _ in 0..3 {
                let n = 1 + rng.next_usize_below(4);
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.next_bool(0.5) {
                            edges.push((u, v));
                        }
                    }
                }
                graphs.push(Graph::new(n, edges).unwrap());
            }
            let left = lexicographic_product(
                &lexicographic_product(&graphs[0], &graphs[1]).unwrap(),
                &graphs[2],
            )
            .unwrap();
            let right = lexicographic_product(
                &graphs[0],
                &lexicographic_product(&graphs[1], &graphs[2]).unwrap(),
            )
            .unwrap();
            // Row-major indexing makes the associativity relabeling the
            // identity: ((x,y),z) and (x,(y,z)) both flatten to
            // x*n2*n3 + y*n3 + z.
            assert_eq!(left, right);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(8, 4), Some(70));
        assert_eq!(binomial(3, 5), Some(0));
        assert!(binomial(200, 100).is_none());
    }
}
