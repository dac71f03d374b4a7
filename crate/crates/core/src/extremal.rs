//! Exhaustive extremal search over classes of connected graphs, the closed
//! bound calculators for fixed order and size, and one verifier per
//! extremal statement.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canon::{canonical_key, CanonicalKey};
use crate::enumeration::{ClassFilter, Dominating, Enumerator};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::graph6::encode_graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

impl Direction {
    /// Whether `a` is strictly better than `b` in this direction.
    fn beats(self, a: u64, b: u64) -> bool {
        match self {
            Direction::Min => a < b,
            Direction::Max => a > b,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Min => "min",
            Direction::Max => "max",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Direction::Min),
            "max" => Ok(Direction::Max),
            _ => Err(Error::OutOfRange(format!("direction `{s}`; expected min or max"))),
        }
    }
}

/// Optimum index value over a class and every graph attaining it.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalResult {
    pub filter: ClassFilter,
    pub direction: Direction,
    pub value: u64,
    /// Canonical forms, sorted by canonical key.
    #[serde(serialize_with = "as_graph6")]
    pub optima: Vec<Graph>,
    pub class_size: usize,
}

fn as_graph6<S: Serializer>(graphs: &[Graph], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(graphs.iter().map(encode_graph6))
}

/// A graph with the invariants the verifiers look at.
#[derive(Debug, Clone)]
pub(crate) struct Profiled {
    pub graph: Graph,
    pub eci: u64,
    pub pending: usize,
    pub dominating: usize,
    pub eccentricity_two: usize,
}

impl Profiled {
    fn new(graph: Graph) -> Self {
        let ecc = graph.eccentricities().expect("enumerated graphs are connected");
        let eci = (0..graph.order()).map(|v| graph.degree(v) as u64 * u64::from(ecc[v])).sum();
        Profiled {
            eci,
            pending: graph.pending_count(),
            dominating: graph.dominating_count(),
            eccentricity_two: ecc.iter().filter(|&&e| e == 2).count(),
            graph,
        }
    }

    fn key(&self) -> CanonicalKey {
        CanonicalKey::of_canonical(&self.graph)
    }

    fn in_class(&self, filter: &ClassFilter) -> bool {
        self.graph.order() == filter.order
            && filter.edges.map_or(true, |m| self.graph.edge_count() == m)
            && filter.pending.map_or(true, |p| self.pending == p)
            && filter.dominating.admits(self.dominating)
    }
}

fn profile_order(enumerator: &Enumerator, n: usize) -> Result<Vec<Profiled>> {
    let graphs: Vec<Graph> = enumerator.enumerate_connected(&ClassFilter::new(n))?.collect();
    Ok(graphs.into_par_iter().map(Profiled::new).collect())
}

pub fn search_extremal(enumerator: &Enumerator, filter: &ClassFilter, direction: Direction) -> Result<ExtremalResult> {
    let graphs: Vec<Graph> = enumerator.enumerate_connected(filter)?.collect();
    let scored: Vec<(u64, Graph)> = graphs
        .into_par_iter()
        .map(|g| (g.eci().expect("enumerated graphs are connected"), g))
        .collect();
    let class_size = scored.len();
    let value = match direction {
        Direction::Min => scored.iter().map(|s| s.0).min(),
        Direction::Max => scored.iter().map(|s| s.0).max(),
    }
    .ok_or_else(|| Error::EmptyClass(filter.to_string()))?;
    let mut optima: Vec<Graph> = scored.into_iter().filter(|s| s.0 == value).map(|s| s.1).collect();
    optima.sort_by_cached_key(CanonicalKey::of_canonical);
    Ok(ExtremalResult {
        filter: *filter,
        direction,
        value,
        optima,
        class_size,
    })
}

/// `floor((a - sqrt(b)) / 2)` in exact integer arithmetic, for
/// `0 <= sqrt(b) <= a`.
fn floor_half_gap(a: u64, b: u64) -> u64 {
    let s = b.isqrt();
    let inexact = u64::from(s * s != b);
    (a - s - inexact) / 2
}

/// Parameters of the lower bound for order `n` and size `m`:
/// `k = floor((2n - 1 - sqrt((2n - 1)^2 - 8m)) / 2)` and the bound
/// `4m - k(n - 1)`.
pub fn zd10_params(n: usize, m: usize) -> Result<(u64, u64)> {
    let max = n * n.saturating_sub(1) / 2;
    if n < 2 || m + 1 < n || m >= max {
        return Err(Error::OutOfRange(format!(
            "m = {m} outside [n-1, C(n,2)-1] for n = {n}"
        )));
    }
    let (n, m) = (n as u64, m as u64);
    let a = 2 * n - 1;
    let k = floor_half_gap(a, a * a - 8 * m);
    Ok((k, 4 * m - k * (n - 1)))
}

/// Parameters of the conjectured maximizer `g(n, D, k)` for order `n` and
/// size `m`: `D = floor((2n + 1 - sqrt(17 + 8(m - n))) / 2)` and
/// `k = m - C(n - D + 1, 2) - D + 1`.
pub fn conjecture_params(n: usize, m: usize) -> Result<(usize, usize)> {
    if n < 4 || m + 1 < n || m > (n - 1) * (n - 2) / 2 {
        return Err(Error::OutOfRange(format!(
            "m = {m} outside [n-1, C(n-1,2)] for n = {n}"
        )));
    }
    let d = floor_half_gap(2 * n as u64 + 1, 17 + 8 * m as u64 - 8 * n as u64) as usize;
    let k = m as i64 - ((n - d + 1) * (n - d) / 2) as i64 - d as i64 + 1;
    let inconsistent = |why: String| Error::OutOfRange(format!("conjecture parameters for n = {n}, m = {m}: {why}"));
    if k < 0 || k as usize + d + 1 > n {
        return Err(inconsistent(format!("D = {d}, k = {k} outside 0 <= k <= n-D-1")));
    }
    let k = k as usize;
    let spec = FamilySpec::CliquePathPartial { n, d, k };
    let g = spec.construct().map_err(|e| inconsistent(e.to_string()))?;
    if g.edge_count() != m {
        return Err(inconsistent(format!("g({n},{d},{k}) has {} edges", g.edge_count())));
    }
    Ok((d, k))
}

/// The optimal graphs listed for order `n` in the table of largest index
/// values for fixed order.
pub fn table1_optima(n: usize) -> Result<Vec<FamilySpec>> {
    use FamilySpec::*;
    Ok(match n {
        0 => return Err(Error::OutOfRange("order must be at least 1".into())),
        1 | 2 => vec![Complete { n }],
        3 => vec![Complete { n: 3 }, Path { n: 3 }],
        4 | 6 | 7 => vec![MatchingReduced { n }],
        5 => vec![MatchingReduced { n: 5 }, Wheel { n: 5 }],
        8 => vec![MatchingReduced { n: 8 }, CliquePath { n: 8, d: 4 }],
        _ => vec![CliquePath {
            n,
            d: (n + 1).div_ceil(3) + 1,
        }],
    })
}

/// Identifier of a verifiable extremal statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statement {
    MinOrder,
    PendantExtreme,
    DomOne,
    DomMany,
    DomNone,
    MinPending,
    Zd10Min,
    Table1Max,
    ConjectureMax,
}

impl Statement {
    pub const ALL: [Statement; 9] = [
        Statement::MinOrder,
        Statement::PendantExtreme,
        Statement::DomOne,
        Statement::DomMany,
        Statement::DomNone,
        Statement::MinPending,
        Statement::Zd10Min,
        Statement::Table1Max,
        Statement::ConjectureMax,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::MinOrder => "min-order",
            Statement::PendantExtreme => "pendant-extreme",
            Statement::DomOne => "dom-one",
            Statement::DomMany => "dom-many",
            Statement::DomNone => "dom-none",
            Statement::MinPending => "min-pending",
            Statement::Zd10Min => "zd10-min",
            Statement::Table1Max => "table1-max",
            Statement::ConjectureMax => "conjecture-max",
        }
    }

    /// Smallest order the statement speaks about.
    pub fn min_order(self) -> usize {
        match self {
            Statement::Table1Max => 1,
            Statement::Zd10Min => 3,
            _ => 4,
        }
    }

    pub fn is_conjecture(self) -> bool {
        self == Statement::ConjectureMax
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| Error::UnknownStatement(s.to_string()))
    }
}

impl Serialize for Statement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ConjectureHolds,
    ConjectureRefuted,
}

impl Verdict {
    pub fn is_success(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::ConjectureHolds)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ConjectureHolds => "conjecture-holds",
            Verdict::ConjectureRefuted => "conjecture-refuted",
        })
    }
}

/// A graph contradicting a statement, with the value the statement predicts
/// and the value actually observed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub cell: String,
    pub graph6: String,
    pub expected: u64,
    pub observed: u64,
    pub reason: String,
}

/// What one class (cell) of a verification run looked like.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellSummary {
    pub cell: String,
    pub class_size: usize,
    /// Optimum over the class, in the statement's direction.
    pub value: Option<u64>,
    pub optima: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationOutcome {
    pub statement: Statement,
    pub n_min: usize,
    pub n_max: usize,
    pub verdict: Verdict,
    pub cells: Vec<CellSummary>,
    pub counterexamples: Vec<Counterexample>,
    pub graphs_examined: usize,
    pub elapsed_ms: u128,
}

struct CellOutcome {
    summary: CellSummary,
    counterexamples: Vec<Counterexample>,
}

struct Cell<'a> {
    label: String,
    members: Vec<&'a Profiled>,
    direction: Direction,
}

impl<'a> Cell<'a> {
    fn new(label: String, profiles: &'a [Profiled], filter: ClassFilter, direction: Direction) -> Self {
        Cell {
            label,
            members: profiles.iter().filter(|p| p.in_class(&filter)).collect(),
            direction,
        }
    }

    fn summary(&self) -> CellSummary {
        let value = match self.direction {
            Direction::Min => self.members.iter().map(|p| p.eci).min(),
            Direction::Max => self.members.iter().map(|p| p.eci).max(),
        };
        let mut optima: Vec<&Profiled> = self.members.iter().copied().filter(|p| Some(p.eci) == value).collect();
        optima.sort_by_cached_key(|p| p.key());
        CellSummary {
            cell: self.label.clone(),
            class_size: self.members.len(),
            value,
            optima: optima.iter().map(|p| encode_graph6(&p.graph)).collect(),
        }
    }

    fn counterexample(&self, graph: &Graph, expected: u64, observed: u64, reason: impl Into<String>) -> Counterexample {
        Counterexample {
            cell: self.label.clone(),
            graph6: encode_graph6(graph),
            expected,
            observed,
            reason: reason.into(),
        }
    }

    /// Checks that `value` is the optimum of the class and that exactly the
    /// graphs in `optima` attain it.
    fn expect_optimum(self, value: u64, optima: &[FamilySpec]) -> CellOutcome {
        let expected: Vec<(Graph, CanonicalKey)> = optima
            .iter()
            .map(|spec| {
                let g = spec.construct().expect("verifier builds valid family members");
                let key = canonical_key(&g);
                (g, key)
            })
            .collect();
        let expected_keys: BTreeSet<&CanonicalKey> = expected.iter().map(|(_, k)| k).collect();
        let mut found = BTreeSet::new();
        let mut out = Vec::new();
        for p in &self.members {
            if self.direction.beats(p.eci, value) {
                out.push(self.counterexample(&p.graph, value, p.eci, format!("{} value beats the stated optimum", self.direction)));
            } else if p.eci == value {
                let key = p.key();
                if expected_keys.contains(&key) {
                    found.insert(key);
                } else {
                    out.push(self.counterexample(&p.graph, value, p.eci, "attains the optimum but is not a stated extremal graph"));
                }
            }
        }
        for (g, key) in &expected {
            if !found.contains(key) {
                let observed = g.eci().unwrap_or(0);
                out.push(self.counterexample(g, value, observed, "stated extremal graph missing from the class or not optimal"));
            }
        }
        CellOutcome {
            summary: self.summary(),
            counterexamples: out,
        }
    }
}

fn family(spec: FamilySpec) -> Graph {
    spec.construct().expect("verifier builds valid family members")
}

fn closed(spec: FamilySpec) -> u64 {
    spec.closed_eci()
        .expect("verifier builds valid family members")
        .expect("family has a closed form")
}

fn check_order(statement: Statement, n: usize, profiles: &[Profiled]) -> Vec<CellOutcome> {
    use FamilySpec::*;
    let all = ClassFilter::new(n);
    let n64 = n as u64;
    match statement {
        Statement::MinOrder => {
            vec![Cell::new(format!("n={n}"), profiles, all, Direction::Min).expect_optimum(3 * (n64 - 1), &[CompleteSplit { n, x: 1 }])]
        }
        Statement::PendantExtreme => {
            let star = Cell::new(format!("n={n} p={}", n - 1), profiles, all.pending(n - 1), Direction::Min);
            let star = star.expect_optimum(3 * (n64 - 1), &[CompleteSplit { n, x: 1 }]);
            let cell = Cell::new(format!("n={n} p={}", n - 2), profiles, all.pending(n - 2), Direction::Min);
            let mut counterexamples: Vec<Counterexample> = cell
                .members
                .iter()
                .filter(|p| p.eci != 5 * n64 - 6)
                .map(|p| cell.counterexample(&p.graph, 5 * n64 - 6, p.eci, "index differs from 5n-6"))
                .collect();
            if cell.members.is_empty() {
                let mut edges = vec![(0, 1), (1, n - 1)];
                edges.extend((2..n - 1).map(|v| (0, v)));
                let witness = Graph::from_edges(n, &edges).expect("valid double star");
                counterexamples.push(cell.counterexample(&witness, 5 * n64 - 6, witness.eci().unwrap_or(0), "class unexpectedly empty"));
            }
            let two = CellOutcome {
                summary: cell.summary(),
                counterexamples,
            };
            vec![star, two]
        }
        Statement::DomOne => (0..=n - 3)
            .into_par_iter()
            .filter(|&p| (n, p) != (4, 0))
            .map(|p| {
                let h = PendantStar { n, p };
                let filter = all.pending(p).dominating(Dominating::ExactlyOne);
                Cell::new(format!("n={n} p={p} dominating=1"), profiles, filter, Direction::Min).expect_optimum(closed(h), &[h])
            })
            .collect(),
        Statement::DomMany => {
            let (value, optima) = match n {
                4 => (12, vec![Complete { n: 4 }]),
                5 => (20, vec![CompleteSplit { n: 5, x: 2 }, Complete { n: 5 }]),
                _ => (6 * n64 - 10, vec![CompleteSplit { n, x: 2 }]),
            };
            let cell = Cell::new(format!("n={n} dominating=2+"), profiles, all.dominating(Dominating::AtLeastTwo), Direction::Min);
            let mut chain = Vec::new();
            for p in &cell.members {
                let x = p.dominating as i64;
                let bound = (x * (3 * n as i64 - 1) - 2 * x * x) as u64;
                if p.eci < bound {
                    chain.push(cell.counterexample(&p.graph, bound, p.eci, format!("below -2x^2 + x(3n-1) with x = {x}")));
                }
            }
            let mut outcome = cell.expect_optimum(value, &optima);
            outcome.counterexamples.extend(chain);
            vec![outcome]
        }
        Statement::DomNone => (0..=n - 3)
            .into_par_iter()
            .map(|p| {
                let bound = closed(PendantStar { n, p });
                let filter = all.pending(p).dominating(Dominating::None);
                let cell = Cell::new(format!("n={n} p={p} dominating=0"), profiles, filter, Direction::Min);
                let exceptions: Vec<Graph> = if (n, p) == (5, 0) { vec![family(Cycle { n: 5 })] } else { vec![] };
                let exception_keys: Vec<CanonicalKey> = exceptions.iter().map(canonical_key).collect();
                let mut out = Vec::new();
                let mut seen = vec![false; exceptions.len()];
                for m in &cell.members {
                    let key = m.key();
                    match exception_keys.iter().position(|k| *k == key) {
                        Some(i) => {
                            seen[i] = true;
                            if m.eci != bound {
                                out.push(cell.counterexample(&m.graph, bound, m.eci, "exceptional graph does not tie with H_{n,p}"));
                            }
                        }
                        None if m.eci <= bound => {
                            out.push(cell.counterexample(&m.graph, bound + 1, m.eci, "not strictly above the H_{n,p} value"));
                        }
                        None => {}
                    }
                }
                for (g, seen) in exceptions.iter().zip(seen) {
                    if !seen {
                        out.push(cell.counterexample(g, bound, g.eci().unwrap_or(0), "exceptional graph missing from the class"));
                    }
                }
                CellOutcome {
                    summary: cell.summary(),
                    counterexamples: out,
                }
            })
            .collect(),
        Statement::MinPending => (0..=n - 3)
            .into_par_iter()
            .map(|p| {
                let h = PendantStar { n, p };
                let (value, optima) = match (n, p) {
                    (4, 0) => (12, vec![Complete { n: 4 }]),
                    (5, 0) => (20, vec![h, CompleteSplit { n: 5, x: 2 }, Complete { n: 5 }, Cycle { n: 5 }]),
                    (6, 0) => (26, vec![CompleteSplit { n: 6, x: 2 }]),
                    _ => (closed(h), vec![h]),
                };
                Cell::new(format!("n={n} p={p}"), profiles, all.pending(p), Direction::Min).expect_optimum(value, &optima)
            })
            .collect(),
        Statement::Zd10Min => (n - 1..n * (n - 1) / 2)
            .into_par_iter()
            .map(|m| {
                let (k, bound) = zd10_params(n, m).expect("m within range");
                let cell = Cell::new(format!("n={n} m={m}"), profiles, all.edges(m), Direction::Min);
                let mut out = Vec::new();
                for p in &cell.members {
                    let shape = p.dominating as u64 == k && p.eccentricity_two as u64 == n64 - k;
                    if p.eci < bound {
                        out.push(cell.counterexample(&p.graph, bound, p.eci, "below 4m - k(n-1)"));
                    } else if (p.eci == bound) != shape {
                        let why = if shape {
                            "has k dominating vertices and n-k of eccentricity 2 but misses the bound"
                        } else {
                            "attains the bound without k dominating vertices and n-k of eccentricity 2"
                        };
                        out.push(cell.counterexample(&p.graph, bound, p.eci, why));
                    }
                }
                if let Some(best) = cell.members.iter().min_by_key(|p| p.eci) {
                    if best.eci > bound {
                        out.push(cell.counterexample(&best.graph, bound, best.eci, "bound not attained"));
                    }
                }
                CellOutcome {
                    summary: cell.summary(),
                    counterexamples: out,
                }
            })
            .collect(),
        Statement::Table1Max => {
            let optima = table1_optima(n).expect("n >= 1");
            let value = family(optima[0]).eci().expect("connected");
            vec![Cell::new(format!("n={n}"), profiles, all, Direction::Max).expect_optimum(value, &optima)]
        }
        Statement::ConjectureMax => (n - 1..=(n - 1) * (n - 2) / 2)
            .into_par_iter()
            .map(|m| {
                let label = format!("n={n} m={m}");
                let cell = Cell::new(label.clone(), profiles, all.edges(m), Direction::Max);
                let (d, k) = match conjecture_params(n, m) {
                    Ok(params) => params,
                    Err(e) => {
                        return CellOutcome {
                            summary: cell.summary(),
                            counterexamples: vec![Counterexample {
                                cell: label,
                                graph6: String::new(),
                                expected: 0,
                                observed: 0,
                                reason: e.to_string(),
                            }],
                        }
                    }
                };
                let g = CliquePathPartial { n, d, k };
                let mut optima = vec![g];
                if d == 3 && k + 4 == n {
                    optima.extend((1..=n - 4).map(|i| ConjectureException { n, i }));
                }
                let mut seen = BTreeSet::new();
                optima.retain(|s| seen.insert(canonical_key(&family(*s))));
                let value = family(g).eci().expect("connected");
                cell.expect_optimum(value, &optima)
            })
            .collect(),
    }
}

/// Exhaustively checks `statement` for every order in `n_min..=n_max`.
pub fn verify(enumerator: &Enumerator, statement: Statement, n_min: usize, n_max: usize) -> Result<VerificationOutcome> {
    if n_min < statement.min_order() || n_min > n_max {
        return Err(Error::OutOfRange(format!(
            "order range {n_min}..={n_max} invalid for {statement} (orders start at {})",
            statement.min_order()
        )));
    }
    let start = Instant::now();
    let mut cells = Vec::new();
    let mut counterexamples = Vec::new();
    let mut graphs_examined = 0;
    for n in n_min..=n_max {
        let profiles = profile_order(enumerator, n)?;
        graphs_examined += profiles.len();
        for outcome in check_order(statement, n, &profiles) {
            cells.push(outcome.summary);
            counterexamples.extend(outcome.counterexamples);
        }
    }
    let verdict = match (statement.is_conjecture(), counterexamples.is_empty()) {
        (false, true) => Verdict::Pass,
        (false, false) => Verdict::Fail,
        (true, true) => Verdict::ConjectureHolds,
        (true, false) => Verdict::ConjectureRefuted,
    };
    Ok(VerificationOutcome {
        statement,
        n_min,
        n_max,
        verdict,
        cells,
        counterexamples,
        graphs_examined,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
