/// Bipartite matching between core edges (left) and hyperedges (right),
/// grown one left vertex at a time with Kuhn augmenting paths.
#[derive(Debug, Clone)]
pub(crate) struct Matching {
    /// Candidate hyperedges per core edge; empty until the edge is forced.
    adj: Vec<Vec<usize>>,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl Matching {
    pub(crate) fn new(left: usize, right: usize) -> Self {
        Matching {
            adj: vec![Vec::new(); left],
            left: vec![None; left],
            right: vec![None; right],
        }
    }

    /// Adds core edge `e` with its candidate hyperedges and tries to match it.
    /// Returns `false` on a Hall violation (no saturating matching).
    pub(crate) fn add(&mut self, e: usize, candidates: Vec<usize>) -> bool {
        self.adj[e] = candidates;
        let mut seen = vec![false; self.right.len()];
        self.augment(e, &mut seen)
    }

    fn augment(&mut self, e: usize, seen: &mut [bool]) -> bool {
        for k in 0..self.adj[e].len() {
            let r = self.adj[e][k];
            if seen[r] {
                continue;
            }
            seen[r] = true;
            let free = match self.right[r] {
                None => true,
                Some(other) => self.augment(other, seen),
            };
            if free {
                self.left[e] = Some(r);
                self.right[r] = Some(e);
                return true;
            }
        }
        false
    }

    pub(crate) fn assignment(&self) -> Vec<usize> {
        self.left
            .iter()
            .map(|m| m.expect("every core edge matched"))
            .collect()
    }
}
