use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::{Error, Result};

/// A named graph family with its parameters.
///
/// Text form is `tag:params`, e.g. `fan:3`, `book:2`, `wheel:6`,
/// `genbook:2,4,5`, `complete:4`, `cycle:5`, `path:3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `k` triangles sharing one vertex.
    Fan { k: usize },
    /// `t` triangles sharing one edge.
    Book { t: usize },
    /// `C_k` plus a hub adjacent to every cycle vertex.
    Wheel { k: usize },
    /// `m` copies of `K_q` sharing a fixed set of `p` vertices.
    GeneralizedBook { p: usize, q: usize, m: usize },
    Complete { n: usize },
    Cycle { k: usize },
    /// Path on `k` vertices.
    Path { k: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: String| Err(Error::Validation(what));
        match *self {
            FamilySpec::Fan { k } if k < 1 => bad(format!("fan needs k >= 1, got {k}")),
            FamilySpec::Book { t } if t < 1 => bad(format!("book needs t >= 1, got {t}")),
            FamilySpec::Wheel { k } if k < 3 => bad(format!("wheel needs k >= 3, got {k}")),
            FamilySpec::GeneralizedBook { p, q, m } if !(1 <= p && p < q && m >= 1) => bad(
                format!("generalized book needs 1 <= p < q and m >= 1, got p={p}, q={q}, m={m}"),
            ),
            FamilySpec::Complete { n } if n < 1 => bad("complete graph needs n >= 1".into()),
            FamilySpec::Cycle { k } if k < 3 => bad(format!("cycle needs k >= 3, got {k}")),
            FamilySpec::Path { k } if k < 1 => bad("path needs at least one vertex".into()),
            _ => {
                if self.vertex_count() > super::MAX_VERTICES {
                    return Err(Error::TooLarge(format!(
                        "{self} has {} vertices",
                        self.vertex_count()
                    )));
                }
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Fan { k } => 2 * k + 1,
            FamilySpec::Book { t } => t + 2,
            FamilySpec::Wheel { k } => k + 1,
            FamilySpec::GeneralizedBook { p, q, m } => p + m * (q - p),
            FamilySpec::Complete { n } => n,
            FamilySpec::Cycle { k } | FamilySpec::Path { k } => k,
        }
    }

    /// Builds the graph. Vertex 0 is the hub of fans and wheels and the first
    /// shared vertex of books and generalized books.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let g = match *self {
            FamilySpec::Fan { k } => {
                let mut g = Graph::new(2 * k + 1);
                for i in 0..k {
                    let (a, b) = (2 * i + 1, 2 * i + 2);
                    g.add_edge(0, a);
                    g.add_edge(0, b);
                    g.add_edge(a, b);
                }
                g
            }
            FamilySpec::Book { t } => {
                let mut g = Graph::new(t + 2);
                g.add_edge(0, 1);
                for page in 2..t + 2 {
                    g.add_edge(0, page);
                    g.add_edge(1, page);
                }
                g
            }
            FamilySpec::Wheel { k } => {
                let mut g = Graph::new(k + 1);
                for i in 1..=k {
                    g.add_edge(0, i);
                    g.add_edge(i, if i == k { 1 } else { i + 1 });
                }
                g
            }
            FamilySpec::GeneralizedBook { p, q, m } => {
                let mut g = Graph::new(p + m * (q - p));
                for copy in 0..m {
                    let mut verts: Vec<usize> = (0..p).collect();
                    let start = p + copy * (q - p);
                    verts.extend(start..start + q - p);
                    for (i, &u) in verts.iter().enumerate() {
                        for &v in &verts[i + 1..] {
                            g.add_edge(u, v);
                        }
                    }
                }
                g
            }
            FamilySpec::Complete { n } => Graph::complete(n),
            FamilySpec::Cycle { k } => Graph::cycle(k),
            FamilySpec::Path { k } => Graph::path(k),
        };
        Ok(g)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Fan { k } => write!(f, "fan:{k}"),
            FamilySpec::Book { t } => write!(f, "book:{t}"),
            FamilySpec::Wheel { k } => write!(f, "wheel:{k}"),
            FamilySpec::GeneralizedBook { p, q, m } => write!(f, "genbook:{p},{q},{m}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Cycle { k } => write!(f, "cycle:{k}"),
            FamilySpec::Path { k } => write!(f, "path:{k}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Validation(format!("family spec {s:?} lacks ':'")))?;
        let nums = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Validation(format!("bad parameter {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let one = || match nums.as_slice() {
            [x] => Ok(*x),
            _ => Err(Error::Validation(format!("{tag} takes one parameter"))),
        };
        let spec = match tag.trim().to_ascii_lowercase().as_str() {
            "fan" => FamilySpec::Fan { k: one()? },
            "book" => FamilySpec::Book { t: one()? },
            "wheel" => FamilySpec::Wheel { k: one()? },
            "genbook" | "generalized_book" => match nums.as_slice() {
                [p, q, m] => FamilySpec::GeneralizedBook {
                    p: *p,
                    q: *q,
                    m: *m,
                },
                _ => return Err(Error::Validation("genbook takes p,q,m".into())),
            },
            "complete" | "k" => FamilySpec::Complete { n: one()? },
            "cycle" | "c" => FamilySpec::Cycle { k: one()? },
            "path" | "p" => FamilySpec::Path { k: one()? },
            other => return Err(Error::Validation(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{chromatic_number, is_isomorphic};

    fn build(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn sizes_match_definitions() {
        for k in 1..=6 {
            let g = build(&format!("fan:{k}"));
            assert_eq!((g.n(), g.edge_count()), (2 * k + 1, 3 * k));
        }
        for t in 1..=6 {
            let g = build(&format!("book:{t}"));
            assert_eq!((g.n(), g.edge_count()), (t + 2, 2 * t + 1));
        }
        for k in 3..=9 {
            let g = build(&format!("wheel:{k}"));
            assert_eq!((g.n(), g.edge_count()), (k + 1, 2 * k));
        }
        let g = build("genbook:2,4,5");
        assert_eq!(g.n(), 2 + 5 * 2);
    }

    #[test]
    fn small_members() {
        assert_eq!(build("fan:1"), Graph::complete(3));
        let b2 = build("book:2");
        assert!(is_isomorphic(&b2, &Graph::complete(4).without_edge(2, 3)));
        for k in 1..=5 {
            assert!(is_isomorphic(
                &build(&format!("genbook:1,3,{k}")),
                &build(&format!("fan:{k}"))
            ));
        }
    }

    #[test]
    fn chromatic_numbers_of_families() {
        for k in 1..=5 {
            assert_eq!(chromatic_number(&build(&format!("fan:{k}"))), 3);
        }
        for t in 1..=10 {
            assert_eq!(chromatic_number(&build(&format!("book:{t}"))), 3);
        }
        for k in 3..=11 {
            let expected = if k % 2 == 0 { 3 } else { 4 };
            assert_eq!(chromatic_number(&build(&format!("wheel:{k}"))), expected, "W_{k}");
        }
        for q in 2..=6 {
            for p in 1..q {
                for m in 1..=6 {
                    let spec = FamilySpec::GeneralizedBook { p, q, m };
                    if spec.vertex_count() <= 12 {
                        assert_eq!(chromatic_number(&spec.build().unwrap()), q, "{spec}");
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_validate() {
        assert!("fan:0".parse::<FamilySpec>().is_err());
        assert!("wheel:2".parse::<FamilySpec>().is_err());
        assert!("genbook:3,3,1".parse::<FamilySpec>().is_err());
        assert!("genbook:1,3".parse::<FamilySpec>().is_err());
        assert!("star:3".parse::<FamilySpec>().is_err());
        assert!("fan".parse::<FamilySpec>().is_err());
        for s in ["fan:3", "book:2", "wheel:6", "genbook:2,4,5", "complete:4", "cycle:5", "path:3"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
    }
}
