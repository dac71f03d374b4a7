//! Simple undirected graphs stored as dense adjacency bitrows, together with
//! the distance-based invariants built on top of them: BFS distances,
//! eccentricities, diameter and the eccentric connectivity index
//! `sum_v deg(v) * ecc(v)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest order accepted by [`Graph::from_edges`]. At this size every index
/// value stays below `n^3 < 2^64`.
pub const MAX_ORDER: usize = 1_000_000;

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// An immutable simple undirected graph on the vertices `0..order`.
///
/// Row `v` is a bitset of the neighbours of `v`, `words` 64-bit words wide.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from a list of unordered pairs. Repeated pairs collapse
    /// into one edge.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        let words = words_for(order);
        let mut rows = vec![0u64; order * words];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u * words + v / WORD] |= 1 << (v % WORD);
            rows[v * words + u / WORD] |= 1 << (u % WORD);
        }
        Ok(Self::from_rows_unchecked(order, rows))
    }

    /// The edgeless graph of the given order.
    pub fn empty(order: usize) -> Result<Self> {
        Self::from_edges(order, &[])
    }

    /// Wraps symmetric, loop-free bitrows. Callers inside the crate uphold the
    /// invariants; the edge count is recomputed here.
    pub(crate) fn from_rows_unchecked(order: usize, rows: Vec<u64>) -> Self {
        let words = words_for(order);
        debug_assert_eq!(rows.len(), order * words);
        let degree_sum: usize = rows.iter().map(|w| w.count_ones() as usize).sum();
        let g = Graph {
            order,
            words,
            rows,
            edge_count: degree_sum / 2,
        };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        (0..self.order).all(|u| {
            !self.has_edge(u, u) && self.neighbors(u).all(|v| v < self.order && self.has_edge(v, u))
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Raw adjacency bitrow of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Unordered edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    /// Shortest-path edge counts from `source`; `None` marks vertices in a
    /// different component.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<u32>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.order];
        self.bfs_levels(source, |v, d| dist[v] = Some(d));
        Ok(dist)
    }

    /// Level-synchronous BFS over bitsets; calls `visit(v, distance)` once per
    /// reachable vertex and returns the number of vertices reached.
    fn bfs_levels(&self, source: usize, mut visit: impl FnMut(usize, u32)) -> usize {
        let w = self.words;
        let mut seen = vec![0u64; w];
        let mut frontier = vec![0u64; w];
        let mut next = vec![0u64; w];
        seen[source / WORD] |= 1 << (source % WORD);
        frontier[source / WORD] |= 1 << (source % WORD);
        visit(source, 0);
        let mut reached = 1;
        let mut depth = 0;
        loop {
            next.iter_mut().for_each(|x| *x = 0);
            for u in iter_bits(&frontier) {
                for (acc, r) in next.iter_mut().zip(self.row(u)) {
                    *acc |= r;
                }
            }
            let mut any = false;
            for (acc, s) in next.iter_mut().zip(seen.iter_mut()) {
                *acc &= !*s;
                *s |= *acc;
                any |= *acc != 0;
            }
            if !any {
                return reached;
            }
            depth += 1;
            for v in iter_bits(&next) {
                visit(v, depth);
                reached += 1;
            }
            std::mem::swap(&mut frontier, &mut next);
        }
    }

    /// Eccentricity of a single vertex.
    pub fn eccentricity(&self, v: usize) -> Result<u32> {
        self.check_vertex(v)?;
        let mut ecc = 0;
        let reached = self.bfs_levels(v, |_, d| ecc = ecc.max(d));
        if reached == self.order {
            Ok(ecc)
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn eccentricities(&self) -> Result<Vec<u32>> {
        (0..self.order).map(|v| self.eccentricity(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_levels(0, |_, _| ()) == self.order
    }

    pub fn diameter(&self) -> Result<u32> {
        Ok(self.eccentricities()?.into_iter().max().unwrap_or(0))
    }

    /// Number of pending (degree one) vertices.
    pub fn pending_count(&self) -> usize {
        (0..self.order).filter(|&v| self.degree(v) == 1).count()
    }

    /// Number of dominating vertices, i.e. vertices of degree `n - 1`.
    ///
    /// For `n = 1` the lone vertex counts as dominating.
    pub fn dominating_count(&self) -> usize {
        (0..self.order).filter(|&v| self.degree(v) + 1 == self.order).count()
    }

    /// Eccentric connectivity index.
    pub fn eci(&self) -> Result<u64> {
        let mut total = 0u64;
        for v in 0..self.order {
            total += self.degree(v) as u64 * u64::from(self.eccentricity(v)?);
        }
        Ok(total)
    }

    pub fn eci_report(&self) -> Result<EciReport> {
        let ecc = self.eccentricities()?;
        let rows: Vec<EciRow> = ecc
            .iter()
            .enumerate()
            .map(|(vertex, &eccentricity)| {
                let degree = self.degree(vertex);
                EciRow {
                    vertex,
                    degree,
                    eccentricity,
                    product: degree as u64 * u64::from(eccentricity),
                }
            })
            .collect();
        let total = rows.iter().map(|r| r.product).sum();
        Ok(EciReport { rows, total })
    }

    /// Relabels vertices so that old vertex `labeling[i]` becomes vertex `i`.
    pub fn relabeled(&self, labeling: &[usize]) -> Graph {
        let n = self.order;
        debug_assert_eq!(labeling.len(), n);
        let mut position = vec![0; n];
        for (i, &v) in labeling.iter().enumerate() {
            position[v] = i;
        }
        let w = self.words;
        let mut rows = vec![0u64; n * w];
        for (i, &v) in labeling.iter().enumerate() {
            for u in self.neighbors(v) {
                let j = position[u];
                rows[i * w + j / WORD] |= 1 << (j % WORD);
            }
        }
        Graph {
            order: n,
            words: w,
            rows,
            edge_count: self.edge_count,
        }
    }

    /// The graph with one extra vertex `order` adjacent to the vertices whose
    /// bits are set in `neighborhood`. Only used for `order < 64`.
    pub(crate) fn with_vertex(&self, neighborhood: u64) -> Graph {
        let n = self.order;
        debug_assert!(n < WORD);
        let mut rows: Vec<u64> = Vec::with_capacity(n + 1);
        for v in 0..n {
            rows.push(self.rows[v] | (neighborhood >> v & 1) << n);
        }
        rows.push(neighborhood);
        Graph {
            order: n + 1,
            words: 1,
            rows,
            edge_count: self.edge_count + neighborhood.count_ones() as usize,
        }
    }

    /// The induced subgraph on all vertices except `removed`; remaining
    /// vertices keep their relative order.
    pub fn without_vertex(&self, removed: usize) -> Graph {
        let keep: Vec<usize> = (0..self.order).filter(|&v| v != removed).collect();
        self.induced(&keep)
    }

    /// Induced subgraph on `vertices`, relabeled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let n = vertices.len();
        let w = words_for(n);
        let mut rows = vec![0u64; n * w];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[i * w + j / WORD] |= 1 << (j % WORD);
                }
            }
        }
        Graph::from_rows_unchecked(n, rows)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order;
        let w = self.words;
        let mut rows = vec![0u64; n * w];
        for u in 0..n {
            for v in 0..n {
                if u != v && !self.has_edge(u, v) {
                    rows[u * w + v / WORD] |= 1 << (v % WORD);
                }
            }
        }
        Graph::from_rows_unchecked(n, rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + b)
            }
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EciRow {
    pub vertex: usize,
    pub degree: usize,
    pub eccentricity: u32,
    pub product: u64,
}

/// Per-vertex decomposition of the eccentric connectivity index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EciReport {
    pub rows: Vec<EciRow>,
    pub total: u64,
}
