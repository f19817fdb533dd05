use std::fmt;
use std::str::FromStr;

use crate::graph::{bit, bits, Graph, MAX_VERTICES};
use crate::{Error, Result};

/// A multi-hypergraph on vertices `0..n`. Hyperedges are kept in input order
/// and are distinguished by index, so repeated vertex sets stay separate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<u64>,
}

impl Hypergraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "{n} vertices (at most {MAX_VERTICES} supported)"
            )));
        }
        Ok(Hypergraph {
            n,
            edges: Vec::new(),
        })
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let mut h = Hypergraph::new(n)?;
        for e in edges {
            h.push(e.as_ref())?;
        }
        Ok(h)
    }

    /// Every graph is a 2-uniform hypergraph; hyperedges follow edge order.
    pub fn from_graph(g: &Graph) -> Self {
        Hypergraph {
            n: g.n(),
            edges: g.edges().map(|(u, v)| bit(u) | bit(v)).collect(),
        }
    }

    pub fn push(&mut self, vertices: &[usize]) -> Result<usize> {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(Error::Validation(format!(
                    "vertex {v} out of range for {} vertices",
                    self.n
                )));
            }
            if mask & bit(v) != 0 {
                return Err(Error::Validation(format!("vertex {v} repeated in hyperedge")));
            }
            mask |= bit(v);
        }
        self.push_mask(mask)
    }

    pub(crate) fn push_mask(&mut self, mask: u64) -> Result<usize> {
        if mask.count_ones() < 2 {
            return Err(Error::Validation(
                "hyperedge needs at least 2 distinct vertices".into(),
            ));
        }
        if mask >> self.n != 0 && self.n < 64 {
            return Err(Error::Validation("hyperedge vertex out of range".into()));
        }
        self.edges.push(mask);
        Ok(self.edges.len() - 1)
    }

    pub(crate) fn pop(&mut self) -> Option<u64> {
        self.edges.pop()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Hyperedge `i` as a vertex bitset.
    pub fn edge_mask(&self, i: usize) -> u64 {
        self.edges[i]
    }

    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    /// Hyperedge `i` as a sorted vertex list.
    pub fn edge(&self, i: usize) -> Vec<usize> {
        bits(self.edges[i]).collect()
    }

    /// Common hyperedge size, if every hyperedge has the same size.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.first()?.count_ones();
        self.edges
            .iter()
            .all(|e| e.count_ones() == first)
            .then_some(first as usize)
    }

    /// Indices of hyperedges containing every vertex of `mask`.
    pub fn containing(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, &e)| e & mask == mask)
            .map(|(i, _)| i)
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<Vec<usize>> = (0..self.len()).map(|i| self.edge(i)).collect();
        write!(f, "Hypergraph(n={}, {:?})", self.n, es)
    }
}

/// Text format: a header line `n m`, then `m` lines each listing the sorted
/// vertices of one hyperedge. Blank lines and `#` comments are ignored.
impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for i in 0..self.len() {
            let line: Vec<String> = self.edge(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (header_line, header) = lines
            .next()
            .ok_or_else(|| Error::line(1, "missing header line \"n m\""))?;
        let nums = |lineno: usize, s: &str| -> Result<Vec<usize>> {
            s.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::line(lineno, format!("not a vertex number: {tok:?}")))
                })
                .collect()
        };
        let (n, m) = match nums(header_line, header)?.as_slice() {
            [n, m] => (*n, *m),
            _ => return Err(Error::line(header_line, "header must be \"n m\"")),
        };
        let mut h = Hypergraph::new(n).map_err(|e| Error::line(header_line, e.to_string()))?;
        for (lineno, line) in lines {
            if h.len() == m {
                return Err(Error::line(lineno, format!("more than {m} hyperedges")));
            }
            let verts = nums(lineno, line)?;
            h.push(&verts)
                .map_err(|e| Error::line(lineno, e.to_string()))?;
        }
        if h.len() != m {
            return Err(Error::line(
                text.lines().count().max(1),
                format!("header promises {m} hyperedges, found {}", h.len()),
            ));
        }
        Ok(h)
    }
}
