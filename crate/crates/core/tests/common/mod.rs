#![allow(dead_code)]

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spectral_energy::graphs::{complete, complete_bipartite, disjoint_union, empty, erdos_renyi};
use spectral_energy::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn dense(g: &Graph) -> DMatrix<f64> {
    let n = g.order();
    let mut m = DMatrix::zeros(n, n);
    for &(i, j) in g.edges() {
        m[(i, j)] = 1.0;
        m[(j, i)] = 1.0;
    }
    m
}

/// Eigenvalues from nalgebra, sorted nonincreasing.
pub fn eigenvalues(g: &Graph) -> Vec<f64> {
    if g.order() == 0 {
        return Vec::new();
    }
    let mut v: Vec<f64> = dense(g).symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

pub fn oracle_energy(g: &Graph) -> f64 {
    eigenvalues(g).iter().map(|v| v.abs()).sum()
}

pub fn oracle_zero_count(g: &Graph) -> usize {
    let scale = (2.0 * g.size() as f64).sqrt().max(1.0);
    eigenvalues(g).iter().filter(|v| v.abs() < 1e-8 * scale).count()
}

/// Elementary symmetric polynomials e_0..e_n of the eigenvalues, rounded.
/// For an integer matrix these are the (exact) principal minor sums.
pub fn oracle_minor_sums(g: &Graph) -> Vec<i128> {
    let vals = eigenvalues(g);
    let mut e = vec![0.0f64; vals.len() + 1];
    e[0] = 1.0;
    for (i, &l) in vals.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            e[k] += l * e[k - 1];
        }
    }
    e.iter().map(|x| x.round() as i128).collect()
}

/// Exact walk counts d_k = A^k·1.
pub fn walk_counts(g: &Graph, k: usize) -> Vec<u128> {
    let mut d = vec![1u128; g.order()];
    for _ in 0..k {
        d = (0..g.order())
            .map(|v| g.neighbors(v).iter().map(|&w| d[w]).sum())
            .collect();
    }
    d
}

pub fn random_graph(r: &mut ChaCha8Rng, n_min: usize, n_max: usize) -> Graph {
    let n = r.gen_range(n_min..=n_max);
    let p = r.gen_range(0.1..0.9);
    erdos_renyi(n, p, r)
}

pub fn random_connected(r: &mut ChaCha8Rng, n_min: usize, n_max: usize, p_min: f64) -> Graph {
    loop {
        let n = r.gen_range(n_min..=n_max);
        let p = r.gen_range(p_min..0.9);
        let g = erdos_renyi(n, p, r);
        if g.is_connected() {
            return g;
        }
    }
}

fn is_complete_bipartite(g: &Graph, vertices: &[usize]) -> Option<(usize, usize)> {
    // colour by BFS distance parity, then require every cross pair to be an edge
    let mut side = vec![None; g.order()];
    side[vertices[0]] = Some(false);
    let mut queue = vec![vertices[0]];
    while let Some(v) = queue.pop() {
        for &w in g.neighbors(v) {
            match side[w] {
                None => {
                    side[w] = Some(!side[v].unwrap());
                    queue.push(w);
                }
                Some(s) if s == side[v].unwrap() => return None,
                _ => {}
            }
        }
    }
    let a: Vec<_> = vertices.iter().filter(|&&v| side[v] == Some(false)).collect();
    let b: Vec<_> = vertices.iter().filter(|&&v| side[v] == Some(true)).collect();
    for &&x in &a {
        for &&y in &b {
            if !g.has_edge(x, y) {
                return None;
            }
        }
    }
    Some((a.len(), b.len()))
}

fn vertex_sets(g: &Graph) -> Vec<Vec<usize>> {
    spectral_energy::graphs::components(g)
        .into_iter()
        .map(|c| c.vertices)
        .collect()
}

/// Union of complete bipartite graphs with a common product a·b, plus isolated vertices.
pub fn in_bipartite_family(g: &Graph) -> bool {
    if g.size() == 0 {
        return false;
    }
    let mut product = None;
    for vs in vertex_sets(g) {
        if vs.len() == 1 {
            continue;
        }
        match is_complete_bipartite(g, &vs) {
            Some((a, b)) => {
                if *product.get_or_insert(a * b) != a * b {
                    return false;
                }
            }
            None => return false,
        }
    }
    true
}

/// At most one clique of order ≥ 3, any number of K₂ and K₁, at least one edge.
pub fn in_clique_matching_family(g: &Graph) -> bool {
    if g.size() == 0 {
        return false;
    }
    let mut cliques = 0;
    for vs in vertex_sets(g) {
        let k = vs.len();
        let edges = vs.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        if edges != k * (k - 1) / 2 {
            return false;
        }
        if k >= 3 {
            cliques += 1;
        }
    }
    cliques <= 1
}

pub fn has_induced_p3(g: &Graph) -> bool {
    (0..g.order()).any(|v| {
        let nb = g.neighbors(v);
        nb.iter()
            .enumerate()
            .any(|(i, &a)| nb[i + 1..].iter().any(|&b| !g.has_edge(a, b)))
    })
}

pub fn matching(edges: usize, isolated: usize) -> Graph {
    let mut parts = vec![complete(2).unwrap(); edges];
    parts.push(empty(isolated));
    disjoint_union(&parts)
}

pub fn clique_matching(n: usize, ell: usize, kappa: usize) -> Graph {
    let mut parts = vec![complete(n - ell).unwrap()];
    parts.extend(vec![complete(2).unwrap(); (ell - kappa) / 2]);
    parts.push(empty(kappa));
    disjoint_union(&parts)
}

pub fn bipartite_union(parts: &[(usize, usize)], isolated: usize) -> Graph {
    let mut gs: Vec<Graph> = parts.iter().map(|&(a, b)| complete_bipartite(a, b).unwrap()).collect();
    gs.push(empty(isolated));
    disjoint_union(&gs)
}

/// Graphs of order ≤ 12 on which one of the two equality theorems is tight.
pub struct Corpus {
    pub bipartite: Vec<Graph>,
    pub clique_matching: Vec<Graph>,
}

pub fn equality_corpus() -> Corpus {
    let mut bipartite = Vec::new();
    for a in 1..12 {
        for b in a..=12 - a {
            bipartite.push(complete_bipartite(a, b).unwrap());
        }
    }
    // unions with a common product, some with isolated vertices
    let products: &[(&[(usize, usize)], usize)] = &[
        (&[(1, 4), (2, 2)], 0),
        (&[(1, 4), (2, 2)], 2),
        (&[(1, 6), (2, 3)], 0),
        (&[(1, 6), (2, 3)], 1),
        (&[(1, 2), (1, 2), (1, 2)], 3),
        (&[(1, 1), (1, 1), (1, 1)], 0),
        (&[(2, 2), (2, 2)], 1),
        (&[(2, 2), (1, 4)], 3),
        (&[(1, 3), (1, 3), (1, 3)], 0),
        (&[(1, 1)], 5),
        (&[(2, 3)], 4),
    ];
    for (parts, iso) in products {
        bipartite.push(bipartite_union(parts, *iso));
    }

    let mut clique_matching = Vec::new();
    for n in 2..=12 {
        clique_matching.push(complete(n).unwrap());
    }
    for edges in 1..=6 {
        for kappa in 0..=12 - 2 * edges {
            clique_matching.push(matching(edges, kappa));
        }
    }
    for n in 3..=12 {
        for ell in 0..=n - 3 {
            for kappa in 0..=ell {
                if (ell - kappa) % 2 == 0 {
                    clique_matching.push(self::clique_matching(n, ell, kappa));
                }
            }
        }
    }
    Corpus {
        bipartite,
        clique_matching,
    }
}
