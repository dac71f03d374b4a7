//! Reference implementations used as oracles by the integration tests.
//! Nothing here calls into the library's graph algorithms: distances come
//! from Floyd–Warshall on an adjacency matrix and isomorphism classes from
//! minimising over every vertex permutation.

#![allow(dead_code)]

use ecix::Graph;

/// Upper-triangle edge list of a labeled graph on `n` vertices whose edges
/// are selected by the bits of `code` in (0,1), (0,2), (1,2), (0,3), ... order.
pub fn edges_from_code(n: usize, code: u64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if code >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    edges
}

pub fn matrix(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

pub fn matrix_of(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// All-pairs distances, `None` for unreachable pairs.
pub fn floyd_warshall(adj: &[Vec<bool>]) -> Vec<Vec<Option<u64>>> {
    let n = adj.len();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for v in 0..n {
            if adj[u][v] {
                d[u][v] = Some(1);
            }
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if let (Some(a), Some(b)) = (d[u][w], d[w][v]) {
                    if d[u][v].map_or(true, |c| a + b < c) {
                        d[u][v] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

pub fn naive_connected(adj: &[Vec<bool>]) -> bool {
    floyd_warshall(adj).iter().all(|row| row.iter().all(Option::is_some))
}

/// Degree times eccentricity summed over vertices; `None` if disconnected.
pub fn naive_eci(adj: &[Vec<bool>]) -> Option<u64> {
    let d = floyd_warshall(adj);
    let mut total = 0;
    for (u, row) in d.iter().enumerate() {
        let ecc = row.iter().map(|x| x.ok_or(())).collect::<Result<Vec<u64>, ()>>().ok()?.into_iter().max()?;
        let deg = adj[u].iter().filter(|&&b| b).count() as u64;
        total += deg * ecc;
    }
    Some(total)
}

pub fn naive_pending(adj: &[Vec<bool>]) -> usize {
    adj.iter().filter(|row| row.iter().filter(|&&b| b).count() == 1).count()
}

pub fn naive_dominating(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    adj.iter().filter(|row| row.iter().filter(|&&b| b).count() + 1 == n).count()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism-invariant code: the smallest upper-triangle bit string over
/// all relabelings. Practical up to seven vertices.
pub struct BruteCanon {
    n: usize,
    perms: Vec<Vec<usize>>,
}

impl BruteCanon {
    pub fn new(n: usize) -> Self {
        BruteCanon {
            n,
            perms: permutations(n),
        }
    }

    pub fn code(&self, adj: &[Vec<bool>]) -> u64 {
        assert_eq!(adj.len(), self.n);
        let mut best = u64::MAX;
        for p in &self.perms {
            let mut code = 0u64;
            let mut bit = 0;
            for v in 1..self.n {
                for u in 0..v {
                    if adj[p[u]][p[v]] {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            best = best.min(code);
        }
        best
    }
}

/// One line of the connected-graph atlas fixture.
pub struct AtlasEntry {
    pub order: usize,
    pub edges: usize,
    pub eci: u64,
    pub graph6: String,
}

/// Every connected graph on 1..=7 vertices with its index, exported from
/// networkx's graph atlas.
pub fn atlas() -> Vec<AtlasEntry> {
    include_str!("../fixtures/atlas_connected.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            AtlasEntry {
                order: f[0].parse().unwrap(),
                edges: f[1].parse().unwrap(),
                eci: f[2].parse().unwrap(),
                graph6: f[3].to_string(),
            }
        })
        .collect()
}

/// (family, order, graph6) triples written by networkx's graph6 encoder.
pub fn reference_graph6() -> Vec<(String, usize, String)> {
    include_str!("../fixtures/reference_graph6.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (f[0].to_string(), f[1].parse().unwrap(), f[2].to_string())
        })
        .collect()
}
