use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Generator families with fixed labelings.
///
/// `R(l, m)` lists the `l` independent vertices first and then the pairs
/// `(l + 2i, l + 2i + 1)`; `RStar(l, m)` drops the edge `{0, l}`.
/// `K1JoinMK2Bar(m)` puts the universal vertex at 0 and the complemented
/// matching `(1 + 2i, 2 + 2i)` after it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Complement of `s K2`.
    CocktailParty {
        s: usize,
    },
    R {
        l: usize,
        m: usize,
    },
    RStar {
        l: usize,
        m: usize,
    },
    K1JoinMK2Bar {
        m: usize,
    },
}

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::InvalidInput(format!(
            "{name} must be at least {min}, got {value}"
        )));
    }
    Ok(())
}

pub fn gen_named(family: Family) -> Result<Graph> {
    match family {
        Family::Path { n } => {
            at_least("path order", n, 1)?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle { n } => {
            at_least("cycle order", n, 3)?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Complete { n } => {
            at_least("complete order", n, 1)?;
            Graph::complete(n)
        }
        Family::CocktailParty { s } => {
            at_least("s", s, 1)?;
            let matching: Vec<_> = (0..s).map(|i| (2 * i, 2 * i + 1)).collect();
            Ok(Graph::from_edges(2 * s, &matching)?.complement())
        }
        Family::R { l, m } => r_graph(l, m, false),
        Family::RStar { l, m } => r_graph(l, m, true),
        Family::K1JoinMK2Bar { m } => {
            at_least("m", m, 1)?;
            Graph::empty(1)?.join(&gen_named(Family::CocktailParty { s: m })?)
        }
    }
}

fn r_graph(l: usize, m: usize, starred: bool) -> Result<Graph> {
    at_least("l", l, 1)?;
    at_least("m", m, 1)?;
    let n = l + 2 * m;
    let mut edges = Vec::new();
    for i in 0..m {
        edges.push((l + 2 * i, l + 2 * i + 1));
    }
    for a in 0..l {
        for b in l..n {
            if !(starred && a == 0 && b == l) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path { n } => write!(f, "path {n}"),
            Family::Cycle { n } => write!(f, "cycle {n}"),
            Family::Complete { n } => write!(f, "complete {n}"),
            Family::CocktailParty { s } => write!(f, "cocktail-party {s}"),
            Family::R { l, m } => write!(f, "r {l} {m}"),
            Family::RStar { l, m } => write!(f, "r-star {l} {m}"),
            Family::K1JoinMK2Bar { m } => write!(f, "k1-join-mk2bar {m}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses the `Display` form, e.g. `"r-star 2 1"`.
    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let (&head, rest) = words
            .split_first()
            .ok_or_else(|| Error::InvalidInput("empty family description".into()))?;
        let nums = rest
            .iter()
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|e| Error::InvalidInput(format!("bad parameter {w:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |k: usize| -> Result<()> {
            if nums.len() != k {
                return Err(Error::InvalidInput(format!(
                    "{head} expects {k} parameter(s)"
                )));
            }
            Ok(())
        };
        let family = match head {
            "path" => arity(1).map(|_| Family::Path { n: nums[0] }),
            "cycle" => arity(1).map(|_| Family::Cycle { n: nums[0] }),
            "complete" => arity(1).map(|_| Family::Complete { n: nums[0] }),
            "cocktail-party" => arity(1).map(|_| Family::CocktailParty { s: nums[0] }),
            "r" => arity(2).map(|_| Family::R {
                l: nums[0],
                m: nums[1],
            }),
            "r-star" => arity(2).map(|_| Family::RStar {
                l: nums[0],
                m: nums[1],
            }),
            "k1-join-mk2bar" => arity(1).map(|_| Family::K1JoinMK2Bar { m: nums[0] }),
            other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
        }?;
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn small_r_graphs() {
        let k3 = Graph::complete(3).unwrap();
        assert!(is_isomorphic(&gen_named(Family::R { l: 1, m: 1 }).unwrap(), &k3).unwrap());
        let p3 = gen_named(Family::Path { n: 3 }).unwrap();
        assert!(is_isomorphic(&gen_named(Family::RStar { l: 1, m: 1 }).unwrap(), &p3).unwrap());
        assert!(is_isomorphic(&gen_named(Family::K1JoinMK2Bar { m: 1 }).unwrap(), &p3).unwrap());
        let r = gen_named(Family::R { l: 2, m: 2 }).unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.edge_count(), 2 + 8);
        let rs = gen_named(Family::RStar { l: 2, m: 1 }).unwrap();
        assert!(!rs.has_edge(0, 2));
        assert!(rs.has_edge(0, 3) && rs.has_edge(1, 2));
    }

    #[test]
    fn universal_base_complement() {
        // The complement of K1 ⋈ (m K2)‾ is K1 ⊕ m K2.
        for m in 1..=4 {
            let g = gen_named(Family::K1JoinMK2Bar { m }).unwrap();
            let c = g.complement();
            assert_eq!(c.edge_count(), m);
            assert_eq!(c.degree(0), 0);
            assert_eq!(g.universal_vertices().to_vec(), vec![0]);
        }
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        for f in [
            Family::Path { n: 5 },
            Family::Cycle { n: 4 },
            Family::Complete { n: 3 },
            Family::CocktailParty { s: 2 },
            Family::R { l: 2, m: 3 },
            Family::RStar { l: 1, m: 1 },
            Family::K1JoinMK2Bar { m: 2 },
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("r 1".parse::<Family>().is_err());
        assert!("wheel 5".parse::<Family>().is_err());
        assert!(gen_named(Family::Cycle { n: 2 }).is_err());
        assert!(gen_named(Family::R { l: 0, m: 1 }).is_err());
    }
}
