//! Exhaustive generation of graphs up to isomorphism by canonical
//! augmentation.
//!
//! Graphs of order `n` are grown from canonical graphs of order `n - 1` by
//! adding a vertex with every possible neighbourhood. A child is kept only
//! when removing its canonically last vertex gives back a graph isomorphic
//! to the parent; isomorphic children of one parent are merged locally.
//! Every isomorphism class therefore has exactly one parent class and is
//! produced once. Intermediate levels contain disconnected graphs as well;
//! connectivity and class filters are applied when graphs are emitted.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_key, canonical_labeling, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order generated unless overridden.
pub const DEFAULT_BUDGET: usize = 9;

/// Environment variable overriding the enumeration order cap.
pub const BUDGET_ENV: &str = "ECIX_BUDGET";

/// Hard ceiling: neighbourhoods are enumerated as 64-bit masks.
pub const MAX_BUDGET: usize = 16;

/// Number of graphs (connected or not) on `n` vertices up to isomorphism,
/// used to estimate the cost of a refused request.
const ALL_GRAPH_COUNTS: [&str; 17] = [
    "1",
    "1",
    "2",
    "4",
    "11",
    "34",
    "156",
    "1044",
    "12346",
    "274668",
    "12005168",
    "1018997864",
    "165091172592",
    "50502031367952",
    "29054155657235488",
    "31426485969804308768",
    "64001015704527557894928",
];

/// Constraint on the number of dominating vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dominating {
    #[default]
    Any,
    None,
    ExactlyOne,
    AtLeastTwo,
}

impl Dominating {
    pub fn admits(self, count: usize) -> bool {
        match self {
            Dominating::Any => true,
            Dominating::None => count == 0,
            Dominating::ExactlyOne => count == 1,
            Dominating::AtLeastTwo => count >= 2,
        }
    }
}

impl fmt::Display for Dominating {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dominating::Any => "any",
            Dominating::None => "0",
            Dominating::ExactlyOne => "1",
            Dominating::AtLeastTwo => "2+",
        })
    }
}

impl std::str::FromStr for Dominating {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(Dominating::Any),
            "0" | "none" => Ok(Dominating::None),
            "1" | "one" => Ok(Dominating::ExactlyOne),
            "2+" | "many" => Ok(Dominating::AtLeastTwo),
            _ => Err(Error::InvalidFilter(format!("dominating constraint `{s}`; expected any, 0, 1 or 2+"))),
        }
    }
}

/// A class of connected graphs of fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ClassFilter {
    pub order: usize,
    pub pending: Option<usize>,
    pub edges: Option<usize>,
    pub dominating: Dominating,
}

impl ClassFilter {
    pub fn new(order: usize) -> Self {
        ClassFilter {
            order,
            pending: None,
            edges: None,
            dominating: Dominating::Any,
        }
    }

    pub fn pending(mut self, p: usize) -> Self {
        self.pending = Some(p);
        self
    }

    pub fn edges(mut self, m: usize) -> Self {
        self.edges = Some(m);
        self
    }

    pub fn dominating(mut self, d: Dominating) -> Self {
        self.dominating = d;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        if n == 0 {
            return Err(Error::InvalidFilter("order must be at least 1".into()));
        }
        if let Some(p) = self.pending {
            if p >= n {
                return Err(Error::InvalidFilter(format!("pending count {p} outside 0..={}", n - 1)));
            }
        }
        if let Some(m) = self.edges {
            let max = n * (n - 1) / 2;
            if m + 1 < n || m > max {
                return Err(Error::InvalidFilter(format!("edge count {m} outside {}..={max}", n - 1)));
            }
        }
        Ok(())
    }

    /// Whether a connected graph of the right order belongs to the class.
    pub fn matches(&self, g: &Graph) -> bool {
        g.order() == self.order
            && self.edges.map_or(true, |m| g.edge_count() == m)
            && self.pending.map_or(true, |p| g.pending_count() == p)
            && self.dominating.admits(g.dominating_count())
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.order)?;
        if let Some(p) = self.pending {
            write!(f, " p={p}")?;
        }
        if let Some(m) = self.edges {
            write!(f, " m={m}")?;
        }
        if self.dominating != Dominating::Any {
            write!(f, " dominating={}", self.dominating)?;
        }
        Ok(())
    }
}

/// Budgeted access to the graph generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    budget: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl Enumerator {
    pub fn with_budget(budget: usize) -> Result<Self> {
        if budget > MAX_BUDGET {
            return Err(Error::OutOfRange(format!("budget {budget} exceeds the generator limit {MAX_BUDGET}")));
        }
        Ok(Enumerator { budget })
    }

    /// Default budget, overridden by `ECIX_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) => {
                let budget = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::OutOfRange(format!("{BUDGET_ENV}={v} is not a non-negative integer")))?;
                Self::with_budget(budget)
            }
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    fn check(&self, order: usize) -> Result<()> {
        if order > self.budget {
            return Err(Error::BudgetExceeded {
                order,
                budget: self.budget,
                estimated: ALL_GRAPH_COUNTS.get(order).copied().unwrap_or("more than 10^22").to_string(),
            });
        }
        Ok(())
    }

    /// All connected graphs in the class, one per isomorphism class, each in
    /// canonical form, in a deterministic order.
    pub fn enumerate_connected(&self, filter: &ClassFilter) -> Result<GraphStream> {
        filter.validate()?;
        self.check(filter.order)?;
        let graphs = all_graphs(filter.order)
            .into_iter()
            .filter(|g| g.is_connected() && filter.matches(g))
            .collect::<Vec<_>>();
        Ok(GraphStream {
            inner: graphs.into_iter(),
        })
    }

    pub fn count_connected(&self, filter: &ClassFilter) -> Result<usize> {
        Ok(self.enumerate_connected(filter)?.len())
    }

    /// All graphs of the given order, connected or not.
    pub fn enumerate_all(&self, order: usize) -> Result<Vec<Graph>> {
        if order == 0 {
            return Err(Error::InvalidFilter("order must be at least 1".into()));
        }
        self.check(order)?;
        Ok(all_graphs(order))
    }
}

/// Stream of canonical graphs produced by [`Enumerator::enumerate_connected`].
#[derive(Debug)]
pub struct GraphStream {
    inner: std::vec::IntoIter<Graph>,
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.inner.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl ExactSizeIterator for GraphStream {}

/// Canonical forms of all graphs of order `n`, grown level by level.
fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).expect("order 1")];
    for _ in 1..n {
        level = level.par_iter().flat_map_iter(children).collect();
    }
    level
}

/// Accepted one-vertex extensions of a canonical `parent`, sorted by key.
fn children(parent: &Graph) -> Vec<Graph> {
    let n = parent.order();
    let parent_key = CanonicalKey::of_canonical(parent);
    let degrees = parent.degrees();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let added_degree = mask.count_ones() as usize;
        // The canonically last vertex has maximum degree, so the new vertex
        // must have it too.
        let max_other = degrees
            .iter()
            .enumerate()
            .map(|(v, &d)| d + (mask >> v & 1) as usize)
            .max()
            .unwrap_or(0);
        if added_degree < max_other {
            continue;
        }
        let child = parent.with_vertex(mask);
        let canon = canonical_labeling(&child);
        let last = *canon.labeling.last().expect("nonempty");
        let accepted = last == n || canonical_key(&child.without_vertex(last)) == parent_key;
        if accepted {
            let key = CanonicalKey::of_canonical(&canon.form);
            if seen.insert(key.clone()) {
                out.push((key, canon.form));
            }
        }
    }
    out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}
