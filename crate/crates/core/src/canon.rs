//! Canonical labeling by partition refinement and individualization.
//!
//! Vertices start in cells ordered by degree. Cells are split by neighbour
//! counts until the ordered partition is equitable, a vertex of the first
//! non-singleton cell is individualized, and the search recurses. Every
//! discrete partition (leaf) induces a relabeled adjacency matrix; the
//! canonical form is the smallest such matrix, comparing relabeled rows in
//! order as integers.
//!
//! Automorphisms discovered at leaves prune the search tree in two ways:
//! children lying in the same orbit as an already explored child (under the
//! automorphisms fixing the current path) are skipped, and a leaf equivalent
//! to the first leaf returns the search to the deepest common ancestor.
//!
//! Since cells keep their position when split or individualized, the last
//! vertex of any canonical labeling always has maximum degree.

use std::cmp::Ordering;

use serde::Serialize;

use crate::graph::{iter_bits, Graph};

/// A labeling-independent identity for a graph: the order together with the
/// rows of its canonical form. Equal keys mean isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalKey {
    order: usize,
    rows: Vec<u64>,
}

impl CanonicalKey {
    /// Key of a graph that is already in canonical form.
    pub(crate) fn of_canonical(g: &Graph) -> Self {
        CanonicalKey {
            order: g.order(),
            rows: g.rows().to_vec(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The canonical representative this key stands for.
    pub fn to_graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.order, self.rows.clone())
    }
}

/// Result of a canonical labeling search.
#[derive(Debug, Clone)]
pub struct Canonical {
    /// `labeling[i]` is the input vertex placed at position `i`.
    pub labeling: Vec<usize>,
    /// The input relabeled by `labeling`.
    pub form: Graph,
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    let mut search = Search::new(g);
    let root = Partition::by_degree(g);
    let mut root = root;
    refine(g, &mut root, &mut search.scratch);
    let mut path = Vec::new();
    search.visit(&root, &mut path);
    let best = search.best.expect("search reaches at least one leaf");
    Canonical {
        labeling: best.labeling,
        form: Graph::from_rows_unchecked(g.order(), best.rows),
    }
}

pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).form
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    CanonicalKey::of_canonical(&canonical_form(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b)
}

/// Ordered partition of the vertex set: `order` lists the vertices cell by
/// cell, `starts` holds the first position of each cell.
#[derive(Clone)]
struct Partition {
    order: Vec<usize>,
    starts: Vec<usize>,
}

impl Partition {
    fn by_degree(g: &Graph) -> Self {
        let n = g.order();
        let degrees = g.degrees();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| degrees[v]);
        let mut starts = vec![0];
        for i in 1..n {
            if degrees[order[i]] != degrees[order[i - 1]] {
                starts.push(i);
            }
        }
        Partition { order, starts }
    }

    fn cell(&self, index: usize) -> (usize, usize) {
        let start = self.starts[index];
        let end = self.starts.get(index + 1).copied().unwrap_or(self.order.len());
        (start, end)
    }

    fn is_discrete(&self) -> bool {
        self.starts.len() == self.order.len()
    }

    fn first_nontrivial(&self) -> usize {
        (0..self.starts.len())
            .find(|&i| {
                let (s, e) = self.cell(i);
                e - s > 1
            })
            .expect("partition is not discrete")
    }

    /// Splits `v` off the front of its cell.
    fn individualize(&mut self, cell: usize, v: usize) {
        let (s, e) = self.cell(cell);
        let at = self.order[s..e].iter().position(|&x| x == v).expect("vertex in cell") + s;
        self.order.swap(s, at);
        self.starts.insert(cell + 1, s + 1);
    }
}

struct Scratch {
    mask: Vec<u64>,
    counts: Vec<u32>,
}

fn neighbour_count(g: &Graph, v: usize, mask: &[u64]) -> u32 {
    g.row(v).iter().zip(mask).map(|(a, b)| (a & b).count_ones()).sum()
}

/// Refines `part` to the coarsest equitable partition finer than it.
fn refine(g: &Graph, part: &mut Partition, scratch: &mut Scratch) {
    let words = g.row_words();
    loop {
        let mut split_any = false;
        let mut w = 0;
        while w < part.starts.len() {
            let (ws, we) = part.cell(w);
            scratch.mask.clear();
            scratch.mask.resize(words, 0);
            for &v in &part.order[ws..we] {
                scratch.mask[v / 64] |= 1 << (v % 64);
            }
            let mut x = 0;
            while x < part.starts.len() {
                let (s, e) = part.cell(x);
                if e - s == 1 {
                    x += 1;
                    continue;
                }
                let cell = &mut part.order[s..e];
                scratch.counts.clear();
                scratch.counts.extend(cell.iter().map(|&v| neighbour_count(g, v, &scratch.mask)));
                let first = scratch.counts[0];
                if scratch.counts.iter().all(|&c| c == first) {
                    x += 1;
                    continue;
                }
                let mut paired: Vec<(u32, usize)> = scratch.counts.iter().copied().zip(cell.iter().copied()).collect();
                paired.sort_unstable();
                let mut new_starts = Vec::new();
                for (i, &(c, v)) in paired.iter().enumerate() {
                    cell[i] = v;
                    if i > 0 && c != paired[i - 1].0 {
                        new_starts.push(s + i);
                    }
                }
                let added = new_starts.len();
                part.starts.splice(x + 1..x + 1, new_starts);
                split_any = true;
                x += added + 1;
            }
            w += 1;
        }
        if !split_any {
            return;
        }
    }
}

struct Leaf {
    labeling: Vec<usize>,
    rows: Vec<u64>,
}

struct Search<'g> {
    g: &'g Graph,
    scratch: Scratch,
    first: Option<Leaf>,
    first_path: Vec<usize>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        Search {
            g,
            scratch: Scratch {
                mask: Vec::new(),
                counts: Vec::new(),
            },
            first: None,
            first_path: Vec::new(),
            best: None,
            automorphisms: Vec::new(),
        }
    }

    /// Explores the subtree below `part`. Returns `Some(depth)` when the
    /// search should unwind to the ancestor at that depth.
    fn visit(&mut self, part: &Partition, path: &mut Vec<usize>) -> Option<usize> {
        if part.is_discrete() {
            return self.leaf(part, path);
        }
        let cell = part.first_nontrivial();
        let (s, e) = part.cell(cell);
        let mut candidates = part.order[s..e].to_vec();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        let mut orbits: Option<(usize, Vec<usize>)> = None;
        for v in candidates {
            if !explored.is_empty() {
                let stale = orbits.as_ref().map_or(true, |(seen, _)| *seen != self.automorphisms.len());
                if stale {
                    orbits = Some((self.automorphisms.len(), self.orbits_fixing(path)));
                }
                let (_, root) = orbits.as_ref().unwrap();
                if explored.iter().any(|&u| root[u] == root[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = part.clone();
            child.individualize(cell, v);
            refine(self.g, &mut child, &mut self.scratch);
            path.push(v);
            let jump = self.visit(&child, path);
            path.pop();
            if let Some(depth) = jump {
                if depth < path.len() {
                    return Some(depth);
                }
            }
        }
        None
    }

    fn leaf(&mut self, part: &Partition, path: &[usize]) -> Option<usize> {
        let g = self.g;
        let n = g.order();
        let words = g.row_words();
        let labeling = part.order.clone();
        let mut position = vec![0; n];
        for (i, &v) in labeling.iter().enumerate() {
            position[v] = i;
        }
        let mut rows = vec![0u64; n * words];
        for (i, &v) in labeling.iter().enumerate() {
            for u in iter_bits(g.row(v)) {
                let j = position[u];
                rows[i * words + j / 64] |= 1 << (j % 64);
            }
        }
        let leaf = Leaf { labeling, rows };

        let Some(first) = &self.first else {
            self.first_path = path.to_vec();
            self.best = Some(Leaf {
                labeling: leaf.labeling.clone(),
                rows: leaf.rows.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if first.rows == leaf.rows {
            let auto = automorphism(&leaf, first);
            self.automorphisms.push(auto);
            let common = path.iter().zip(&self.first_path).take_while(|(a, b)| a == b).count();
            return Some(common);
        }
        let best = self.best.as_ref().unwrap();
        match leaf.rows.cmp(&best.rows) {
            Ordering::Less => self.best = Some(leaf),
            Ordering::Equal => {
                let auto = automorphism(&leaf, best);
                self.automorphisms.push(auto);
            }
            Ordering::Greater => {}
        }
        None
    }

    /// Orbit representatives (union-find roots) of the group generated by the
    /// known automorphisms that fix every vertex of `path`.
    fn orbits_fixing(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for auto in &self.automorphisms {
            if path.iter().any(|&p| auto[p] != p) {
                continue;
            }
            for (v, &image) in auto.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

/// The automorphism mapping each vertex to the vertex occupying the same
/// position in `other`, given that both leaves produce the same matrix.
fn automorphism(leaf: &Leaf, other: &Leaf) -> Vec<usize> {
    let n = leaf.labeling.len();
    let mut map = vec![0; n];
    for i in 0..n {
        map[leaf.labeling[i]] = other.labeling[i];
    }
    map
}
