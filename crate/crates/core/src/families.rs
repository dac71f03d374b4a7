//! Constructors for the named graph families, with deterministic labelings,
//! and the closed-form index values that are known for some of them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named family member together with its integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `K_n`.
    Complete { n: usize },
    /// `P_n`, labeled along the path.
    Path { n: usize },
    /// `C_n`, labeled around the cycle.
    Cycle { n: usize },
    /// `W_n`: hub 0 joined to the cycle `1..n`.
    Wheel { n: usize },
    /// `M_n`: `K_n` minus the matching `{0,1},{2,3},...`; for odd `n` the
    /// edge `{n-1, 0}` is removed as well.
    MatchingReduced { n: usize },
    /// `S_{n,x}`: clique `0..x` fully joined to the stable set `x..n`.
    CompleteSplit { n: usize, x: usize },
    /// `H_{n,p}`: vertex 0 dominates; `1..=p` are pendant; the rest carry a
    /// perfect matching, or a matching plus one 3-vertex path.
    PendantStar { n: usize, p: usize },
    /// `G(n,D)`: path `0..=D`, clique `D+1..n` joined to vertices 0, 1 and 2.
    CliquePath { n: usize, d: usize },
    /// `g(n,D,k)`: as `CliquePath`, but only the `k` lowest clique vertices
    /// are joined to vertex 2.
    CliquePathPartial { n: usize, d: usize, k: usize },
    /// Path `0-1-2-3` and clique `4..n`; the first `i` clique vertices are
    /// joined to 0, 1, 2 and the others to 1, 2, 3.
    ConjectureException { n: usize, i: usize },
}

/// Family names as accepted on the command line.
pub const FAMILY_NAMES: [&str; 10] = [
    "complete",
    "path",
    "cycle",
    "wheel",
    "matching-reduced",
    "complete-split",
    "pendant-star",
    "clique-path",
    "clique-path-partial",
    "conjecture-exception",
];

fn reject(family: &'static str, constraint: impl Into<String>) -> Error {
    Error::InvalidFamily {
        family,
        constraint: constraint.into(),
    }
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::MatchingReduced { .. } => "matching-reduced",
            FamilySpec::CompleteSplit { .. } => "complete-split",
            FamilySpec::PendantStar { .. } => "pendant-star",
            FamilySpec::CliquePath { .. } => "clique-path",
            FamilySpec::CliquePathPartial { .. } => "clique-path-partial",
            FamilySpec::ConjectureException { .. } => "conjecture-exception",
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Complete { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::MatchingReduced { n }
            | FamilySpec::CompleteSplit { n, .. }
            | FamilySpec::PendantStar { n, .. }
            | FamilySpec::CliquePath { n, .. }
            | FamilySpec::CliquePathPartial { n, .. }
            | FamilySpec::ConjectureException { n, .. } => n,
        }
    }

    /// Checks the parameter ranges, naming the violated constraint.
    pub fn validate(&self) -> Result<()> {
        let name = self.name();
        let at_least = |n: usize, min: usize| {
            if n >= min {
                Ok(())
            } else {
                Err(reject(name, format!("n >= {min} required, got n = {n}")))
            }
        };
        match *self {
            FamilySpec::Complete { n } | FamilySpec::Path { n } => at_least(n, 1),
            FamilySpec::Cycle { n } => at_least(n, 3),
            FamilySpec::Wheel { n } | FamilySpec::MatchingReduced { n } => at_least(n, 4),
            FamilySpec::CompleteSplit { n, x } => {
                at_least(n, 2)?;
                if !(1..n).contains(&x) {
                    return Err(reject(name, format!("1 <= x <= n-1 required, got x = {x}")));
                }
                Ok(())
            }
            FamilySpec::PendantStar { n, p } => {
                at_least(n, 4)?;
                if p + 3 > n {
                    return Err(reject(name, format!("p <= n-3 required, got p = {p}")));
                }
                Ok(())
            }
            FamilySpec::CliquePath { n, d } => {
                at_least(n, 4)?;
                if d < 2 || d + 2 > n {
                    return Err(reject(name, format!("2 <= D <= n-2 required, got D = {d}")));
                }
                Ok(())
            }
            FamilySpec::CliquePathPartial { n, d, k } => {
                at_least(n, 3)?;
                if d < 2 || d + 1 > n {
                    return Err(reject(name, format!("2 <= D <= n-1 required, got D = {d}")));
                }
                if k + d + 1 > n {
                    return Err(reject(name, format!("0 <= k <= n-D-1 required, got k = {k}")));
                }
                Ok(())
            }
            FamilySpec::ConjectureException { n, i } => {
                at_least(n, 5)?;
                if i == 0 || i + 4 > n {
                    return Err(reject(name, format!("1 <= i <= n-4 required, got i = {i}")));
                }
                Ok(())
            }
        }
    }

    pub fn construct(&self) -> Result<Graph> {
        self.validate()?;
        let mut edges = Vec::new();
        let clique = |edges: &mut Vec<(usize, usize)>, vertices: std::ops::Range<usize>| {
            for u in vertices.clone() {
                for v in u + 1..vertices.end {
                    edges.push((u, v));
                }
            }
        };
        let n = self.order();
        match *self {
            FamilySpec::Complete { n } => clique(&mut edges, 0..n),
            FamilySpec::Path { n } => edges.extend((1..n).map(|i| (i - 1, i))),
            FamilySpec::Cycle { n } => edges.extend((0..n).map(|i| (i, (i + 1) % n))),
            FamilySpec::Wheel { n } => {
                edges.extend((1..n).map(|i| (0, i)));
                edges.extend((1..n).map(|i| (i, if i + 1 == n { 1 } else { i + 1 })));
            }
            FamilySpec::MatchingReduced { n } => {
                for u in 0..n {
                    for v in u + 1..n {
                        let matched = u % 2 == 0 && v == u + 1;
                        let extra = n % 2 == 1 && u == 0 && v == n - 1;
                        if !matched && !extra {
                            edges.push((u, v));
                        }
                    }
                }
            }
            FamilySpec::CompleteSplit { n, x } => {
                clique(&mut edges, 0..x);
                for u in 0..x {
                    edges.extend((x..n).map(|v| (u, v)));
                }
            }
            FamilySpec::PendantStar { n, p } => {
                edges.extend((1..n).map(|v| (0, v)));
                let mut next = p + 1;
                if (n - p) % 2 == 0 {
                    edges.push((next, next + 1));
                    edges.push((next + 1, next + 2));
                    next += 3;
                }
                while next < n {
                    edges.push((next, next + 1));
                    next += 2;
                }
            }
            FamilySpec::CliquePath { n, d } => {
                edges.extend((1..=d).map(|i| (i - 1, i)));
                clique(&mut edges, d + 1..n);
                for c in d + 1..n {
                    edges.extend([(0, c), (1, c), (2, c)]);
                }
            }
            FamilySpec::CliquePathPartial { n, d, k } => {
                edges.extend((1..=d).map(|i| (i - 1, i)));
                clique(&mut edges, d + 1..n);
                for c in d + 1..n {
                    edges.extend([(0, c), (1, c)]);
                    if c < d + 1 + k {
                        edges.push((2, c));
                    }
                }
            }
            FamilySpec::ConjectureException { n, i } => {
                edges.extend([(0, 1), (1, 2), (2, 3)]);
                clique(&mut edges, 4..n);
                for c in 4..n {
                    if c < 4 + i {
                        edges.extend([(0, c), (1, c), (2, c)]);
                    } else {
                        edges.extend([(1, c), (2, c), (3, c)]);
                    }
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Closed-form index value, for the families where one is known.
    pub fn closed_eci(&self) -> Result<Option<u64>> {
        self.validate()?;
        let value = match *self {
            // H_{4,0} is S_{4,2}: it has two dominating vertices, which the
            // two-case formula does not account for.
            FamilySpec::PendantStar { n: 4, p: 0 } => FamilySpec::CompleteSplit { n: 4, x: 2 }.closed_eci()?,
            FamilySpec::PendantStar { n, p } => {
                let (n, p) = (n as u64, p as u64);
                if (n - p) % 2 == 1 {
                    Some(5 * n - 2 * p - 5)
                } else {
                    Some(5 * n - 2 * p - 3)
                }
            }
            FamilySpec::CompleteSplit { n, x } if x + 2 <= n => {
                let (n, x) = (n as u64, x as u64);
                Some(x * (3 * n - 1) - 2 * x * x)
            }
            FamilySpec::Complete { n } => Some(n as u64 * (n as u64 - 1)),
            FamilySpec::Cycle { n } => Some(2 * n as u64 * (n as u64 / 2)),
            _ => None,
        };
        Ok(value)
    }

    /// Builds a spec from a family name and the optional CLI parameters.
    pub fn from_parts(
        name: &str,
        n: usize,
        p: Option<usize>,
        x: Option<usize>,
        d: Option<usize>,
        k: Option<usize>,
        i: Option<usize>,
    ) -> Result<Self> {
        let family: FamilyName = name.parse()?;
        let need = |value: Option<usize>, flag: &str| {
            value.ok_or_else(|| reject(family.0, format!("parameter --{flag} is required")))
        };
        let spec = match family.0 {
            "complete" => FamilySpec::Complete { n },
            "path" => FamilySpec::Path { n },
            "cycle" => FamilySpec::Cycle { n },
            "wheel" => FamilySpec::Wheel { n },
            "matching-reduced" => FamilySpec::MatchingReduced { n },
            "complete-split" => FamilySpec::CompleteSplit { n, x: need(x, "x")? },
            "pendant-star" => FamilySpec::PendantStar { n, p: need(p, "p")? },
            "clique-path" => FamilySpec::CliquePath { n, d: need(d, "d")? },
            "clique-path-partial" => FamilySpec::CliquePathPartial {
                n,
                d: need(d, "d")?,
                k: need(k, "k")?,
            },
            "conjecture-exception" => FamilySpec::ConjectureException { n, i: need(i, "i")? },
            _ => unreachable!(),
        };
        spec.validate()?;
        Ok(spec)
    }
}

struct FamilyName(&'static str);

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FAMILY_NAMES
            .iter()
            .find(|&&name| name == s)
            .map(|&name| FamilyName(name))
            .ok_or_else(|| Error::OutOfRange(format!("unknown family `{s}`; expected one of {}", FAMILY_NAMES.join(", "))))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete { n } => write!(f, "K_{n}"),
            FamilySpec::Path { n } => write!(f, "P_{n}"),
            FamilySpec::Cycle { n } => write!(f, "C_{n}"),
            FamilySpec::Wheel { n } => write!(f, "W_{n}"),
            FamilySpec::MatchingReduced { n } => write!(f, "M_{n}"),
            FamilySpec::CompleteSplit { n, x } => write!(f, "S_{{{n},{x}}}"),
            FamilySpec::PendantStar { n, p } => write!(f, "H_{{{n},{p}}}"),
            FamilySpec::CliquePath { n, d } => write!(f, "G({n},{d})"),
            FamilySpec::CliquePathPartial { n, d, k } => write!(f, "g({n},{d},{k})"),
            FamilySpec::ConjectureException { n, i } => write!(f, "X({n},{i})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    fn build(spec: FamilySpec) -> Graph {
        spec.construct().unwrap()
    }

    #[test]
    fn pendant_star_examples() {
        let h83 = build(FamilySpec::PendantStar { n: 8, p: 3 });
        assert_eq!(h83.order(), 8);
        assert_eq!(h83.pending_count(), 3);
        assert_eq!(h83.eci().unwrap(), 29);
        assert_eq!(build(FamilySpec::PendantStar { n: 9, p: 3 }).eci().unwrap(), 36);
        assert_eq!(FamilySpec::PendantStar { n: 5, p: 2 }.closed_eci().unwrap(), Some(16));
        assert_eq!(FamilySpec::PendantStar { n: 4, p: 0 }.closed_eci().unwrap(), Some(14));
        assert_eq!(build(FamilySpec::PendantStar { n: 4, p: 0 }).eci().unwrap(), 14);
    }

    #[test]
    fn degenerate_isomorphisms() {
        assert!(is_isomorphic(
            &build(FamilySpec::PendantStar { n: 4, p: 0 }),
            &build(FamilySpec::CompleteSplit { n: 4, x: 2 })
        ));
        assert_eq!(build(FamilySpec::PendantStar { n: 4, p: 0 }).dominating_count(), 2);
        let m4 = build(FamilySpec::MatchingReduced { n: 4 });
        assert!(is_isomorphic(&m4, &build(FamilySpec::Cycle { n: 4 })));
        assert_eq!(m4.eci().unwrap(), 16);
        for n in 4..12 {
            for d in 2..=n - 2 {
                assert!(is_isomorphic(
                    &build(FamilySpec::CliquePathPartial { n, d, k: n - d - 1 }),
                    &build(FamilySpec::CliquePath { n, d })
                ));
            }
            assert!(is_isomorphic(
                &build(FamilySpec::CliquePathPartial { n, d: n - 1, k: 0 }),
                &build(FamilySpec::Path { n })
            ));
        }
        assert!(is_isomorphic(
            &build(FamilySpec::Wheel { n: 4 }),
            &build(FamilySpec::Complete { n: 4 })
        ));
    }

    #[test]
    fn exception_family_endpoints_match_partial() {
        for n in 5..11 {
            let g = build(FamilySpec::CliquePathPartial { n, d: 3, k: n - 4 });
            assert!(is_isomorphic(&build(FamilySpec::ConjectureException { n, i: n - 4 }), &g));
            assert_eq!(build(FamilySpec::ConjectureException { n, i: 1 }).edge_count(), g.edge_count());
        }
    }

    #[test]
    fn closed_form_examples() {
        let closed = |s: FamilySpec| s.closed_eci().unwrap();
        assert_eq!(closed(FamilySpec::CompleteSplit { n: 5, x: 2 }), Some(20));
        assert_eq!(closed(FamilySpec::CompleteSplit { n: 6, x: 2 }), Some(26));
        assert_eq!(closed(FamilySpec::CompleteSplit { n: 7, x: 2 }), Some(32));
        assert_eq!(closed(FamilySpec::Cycle { n: 5 }), Some(20));
        assert_eq!(closed(FamilySpec::Complete { n: 5 }), Some(20));
        for n in 2..30 {
            assert_eq!(closed(FamilySpec::CompleteSplit { n, x: 1 }), if n >= 3 { Some(3 * (n as u64 - 1)) } else { None });
        }
        assert_eq!(closed(FamilySpec::CompleteSplit { n: 6, x: 5 }), None);
        assert_eq!(closed(FamilySpec::Wheel { n: 6 }), None);
        assert_eq!(build(FamilySpec::CompleteSplit { n: 5, x: 2 }).eci().unwrap(), 20);
    }

    #[test]
    fn dominating_counts() {
        assert_eq!(build(FamilySpec::CompleteSplit { n: 5, x: 2 }).dominating_count(), 2);
        for n in 5..20 {
            for p in 0..=n - 3 {
                let h = build(FamilySpec::PendantStar { n, p });
                assert_eq!(h.pending_count(), p);
                assert_eq!(h.dominating_count(), 1);
            }
        }
        assert_eq!(build(FamilySpec::PendantStar { n: 4, p: 1 }).dominating_count(), 1);
    }

    #[test]
    fn wheel_and_matching_reduced_values() {
        for n in 5..30 {
            assert_eq!(build(FamilySpec::Wheel { n }).eci().unwrap(), 7 * (n as u64 - 1));
        }
        for n in (4..30).step_by(2) {
            let m = build(FamilySpec::MatchingReduced { n });
            assert!(m.degrees().iter().all(|&d| d == n - 2));
            assert!(m.eccentricities().unwrap().iter().all(|&e| e == 2));
            assert_eq!(m.eci().unwrap(), 2 * n as u64 * (n as u64 - 2));
        }
        assert_eq!(build(FamilySpec::MatchingReduced { n: 5 }).eci().unwrap(), 28);
    }

    #[test]
    fn rejects_out_of_range() {
        let bad = [
            FamilySpec::Cycle { n: 2 },
            FamilySpec::Wheel { n: 3 },
            FamilySpec::MatchingReduced { n: 3 },
            FamilySpec::CompleteSplit { n: 4, x: 0 },
            FamilySpec::CompleteSplit { n: 4, x: 4 },
            FamilySpec::PendantStar { n: 6, p: 4 },
            FamilySpec::PendantStar { n: 3, p: 0 },
            FamilySpec::CliquePath { n: 6, d: 5 },
            FamilySpec::CliquePath { n: 6, d: 1 },
            FamilySpec::CliquePathPartial { n: 6, d: 3, k: 3 },
            FamilySpec::ConjectureException { n: 6, i: 0 },
            FamilySpec::ConjectureException { n: 6, i: 3 },
            FamilySpec::ConjectureException { n: 4, i: 1 },
        ];
        for spec in bad {
            assert!(matches!(spec.construct(), Err(Error::InvalidFamily { .. })), "{spec:?}");
            assert!(spec.closed_eci().is_err());
        }
    }

    #[test]
    fn parse_from_cli_parts() {
        let spec = FamilySpec::from_parts("pendant-star", 8, Some(3), None, None, None, None).unwrap();
        assert_eq!(spec, FamilySpec::PendantStar { n: 8, p: 3 });
        assert!(FamilySpec::from_parts("pendant-star", 8, None, None, None, None, None).is_err());
        assert!(FamilySpec::from_parts("petersen", 10, None, None, None, None, None).is_err());
        assert_eq!(spec.to_string(), "H_{8,3}");
    }
}
