//! Near-regular graphs placed inside one side of a complete bipartite host.

use crate::graph::{circulant, complete, complete_bipartite, disjoint_union, Graph};

/// `K_{k,k}` minus a perfect matching: `(k-1)`-regular on `2k` vertices.
pub fn crown(k: usize) -> Graph {
    let mut g = complete_bipartite(k, k);
    for i in 0..k {
        g.remove_edge(i, k + i);
    }
    g
}

/// A connected graph on `m` vertices with every degree `d`, except that
/// vertex `m - 1` has degree `d - 1` when `m * d` is odd. Needs `d < m`.
///
/// Built as a circulant with offsets `1..=d/2`; an odd `d` adds the
/// antipodal offset `m/2` when `m` is even, and otherwise a matching
/// pairing `i` with `i + (m-1)/2` for every `i < (m-1)/2`.
pub fn near_regular_block(m: usize, d: usize) -> Graph {
    assert!(d < m, "degree {d} needs more than {m} vertices");
    let mut offsets: Vec<usize> = (1..=d / 2).collect();
    if d % 2 == 1 && m.is_multiple_of(2) {
        offsets.push(m / 2);
    }
    let mut g = circulant(m, &offsets);
    if d % 2 == 1 && m % 2 == 1 {
        let half = (m - 1) / 2;
        for i in 0..half {
            g.add_edge(i, i + half);
        }
    }
    g
}

/// Side-A gadget for trees with a matching saturating the small class:
/// blocks of `K_k`, with the `r = n0 mod k` leftover vertices merged into the
/// last block, which becomes a near-regular block on `k + r <= 2k - 1`
/// vertices. Every component has at most `2k - 1` vertices and degree
/// `k - 1`, apart from at most one vertex of degree `k - 2`.
///
/// Returns the gadget and its component sizes. Needs `n0 >= k` unless `n0`
/// is zero.
pub fn regular_blocks(n0: usize, k: usize) -> (Graph, Vec<usize>) {
    if n0 == 0 {
        return (Graph::empty(0), Vec::new());
    }
    assert!(k >= 1 && n0 >= k, "need n0 >= k >= 1");
    let q = n0 / k;
    let r = n0 % k;
    let mut sizes = vec![k; q];
    let mut parts = vec![complete(k); q];
    if r > 0 {
        sizes[q - 1] = k + r;
        parts[q - 1] = near_regular_block(k + r, k - 1);
    }
    let refs: Vec<&Graph> = parts.iter().collect();
    (disjoint_union(&refs), sizes)
}

/// A 2-regular graph on `m >= 3` vertices made of short cycles, with the
/// component sizes. Triangle-free: 4-cycles with one 5-, 6- or 7-cycle
/// taking the remainder (`m = 3` is impossible and panics). Otherwise:
/// triangles with up to two 4-cycles or one 5-cycle taking the remainder.
pub fn short_cycles(m: usize, triangle_free: bool) -> (Graph, Vec<usize>) {
    let sizes: Vec<usize> = if triangle_free {
        assert!(m >= 4, "no triangle-free 2-regular graph on {m} vertices");
        let last = match m % 4 {
            0 => 4,
            r => 4 + r,
        };
        let mut v = vec![4; (m - last) / 4];
        v.push(last);
        v
    } else {
        assert!(m >= 3, "no 2-regular graph on {m} vertices");
        match m % 3 {
            0 => vec![3; m / 3],
            1 => [vec![3; (m - 4) / 3], vec![4]].concat(),
            _ if m == 5 => vec![5],
            _ => [vec![3; (m - 8) / 3], vec![4, 4]].concat(),
        }
    };
    let parts: Vec<Graph> = sizes.iter().map(|&l| crate::graph::cycle(l)).collect();
    let refs: Vec<&Graph> = parts.iter().collect();
    (disjoint_union(&refs), sizes)
}

/// A maximal matching on `m` vertices: pairs `(0,1), (2,3), ...`.
pub fn matching_on(m: usize) -> Graph {
    crate::graph::matching_graph(m, m / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crown_is_regular() {
        let c = crown(3);
        assert_eq!(c.n(), 6);
        assert!(c.degrees().iter().all(|&d| d == 2));
        assert!(c.is_connected());
    }

    #[test]
    fn near_regular_degrees() {
        for m in 2..14 {
            for d in 0..m {
                let g = near_regular_block(m, d);
                let mut degs = g.degrees();
                if m * d % 2 == 1 {
                    assert_eq!(degs.pop(), Some(d - 1), "m={m} d={d}");
                }
                assert!(degs.iter().all(|&x| x == d), "m={m} d={d}: {:?}", g.degrees());
            }
        }
    }

    #[test]
    fn short_cycle_sizes() {
        for m in 3..40 {
            let (g, sizes) = short_cycles(m, false);
            assert_eq!(sizes.iter().sum::<usize>(), m);
            assert!(g.degrees().iter().all(|&d| d == 2));
            if m >= 4 {
                let (g, sizes) = short_cycles(m, true);
                assert_eq!(sizes.iter().sum::<usize>(), m);
                assert!(g.degrees().iter().all(|&d| d == 2) && !g.has_triangle());
            }
        }
        assert_eq!(short_cycles(11, true).1, vec![4, 7]);
        assert_eq!(short_cycles(11, false).1, vec![3, 4, 4]);
    }

    #[test]
    fn blocks_for_k4_n0_9() {
        let (g, sizes) = regular_blocks(9, 4);
        assert_eq!(sizes, vec![4, 5]);
        let mut degs = g.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 3, 3, 3, 3, 3, 3, 3, 3]);
        assert_eq!(g.edge_count(), 13);
    }
}
