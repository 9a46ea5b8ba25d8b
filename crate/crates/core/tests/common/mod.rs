#![allow(dead_code)]

use distbal::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed for every pseudo-random graph batch in the test suite.
pub const RANDOM_GRAPH_SEED: u64 = 0x00D1_57BA_1A4C_ED00;

/// Floyd–Warshall all-pairs distances; `None` for unreachable pairs.
/// Deliberately independent of the BFS engine.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.vertex_count();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for (a, b) in g.edges() {
        d[a][b] = Some(1);
        d[b][a] = Some(1);
    }
    for m in 0..n {
        for i in 0..n {
            let Some(im) = d[i][m] else { continue };
            for j in 0..n {
                if let Some(mj) = d[m][j] {
                    if d[i][j].is_none_or(|ij| im + mj < ij) {
                        d[i][j] = Some(im + mj);
                    }
                }
            }
        }
    }
    d
}

/// `|D^k_l(u,v)|` by direct enumeration over a distance table.
pub fn cell(d: &[Vec<Option<u32>>], u: usize, v: usize, k: u32, l: u32) -> usize {
    (0..d.len())
        .filter(|&x| d[u][x] == Some(k) && d[v][x] == Some(l))
        .count()
}

/// Strong balance by enumerating every cell of every edge.
pub fn brute_sdb(g: &Graph) -> bool {
    let d = floyd_warshall(g);
    let n = g.vertex_count() as u32;
    g.edges()
        .all(|(u, v)| (1..=n).all(|k| cell(&d, u, v, k, k - 1) == cell(&d, u, v, k - 1, k)))
}

/// Plain balance by counting closer vertices.
pub fn brute_db(g: &Graph) -> bool {
    let d = floyd_warshall(g);
    g.edges().all(|(u, v)| {
        let closer_u = (0..d.len()).filter(|&x| d[x][u] < d[x][v]).count();
        let closer_v = (0..d.len()).filter(|&x| d[x][v] < d[x][u]).count();
        closer_u == closer_v
    })
}

/// A connected graph on `n` vertices: random spanning tree plus extra edges
/// with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// The fixed batch of 200 connected graphs with at most 24 vertices.
pub fn random_batch() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_GRAPH_SEED);
    (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=24);
            let p = rng.gen_range(0.0..0.35);
            random_connected(&mut rng, n, p)
        })
        .collect()
}
