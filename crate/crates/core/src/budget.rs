use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Limits for the exhaustive searches.
///
/// The node cap is the deterministic limit: two runs with the same cap explore
/// the same nodes and report the same verdict. A wall-clock cap can be added
/// on top, but results that hit it are not reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: Option<f64>,
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Result<Self> {
        if max_nodes == 0 {
            return Err(Error::Validation("max_nodes must be at least 1".into()));
        }
        Ok(SearchBudget {
            max_nodes,
            max_seconds: None,
        })
    }

    pub fn with_seconds(mut self, seconds: f64) -> Result<Self> {
        if !(seconds > 0.0) || !seconds.is_finite() {
            return Err(Error::Validation(format!(
                "wall-clock budget must be positive, got {seconds}"
            )));
        }
        self.max_seconds = Some(seconds);
        Ok(self)
    }

    pub fn is_deterministic(&self) -> bool {
        self.max_seconds.is_none()
    }

    pub fn start(&self) -> Budget {
        Budget {
            limit: self.max_nodes,
            used: 0,
            deadline: self
                .max_seconds
                .map(|s| Instant::now() + Duration::from_secs_f64(s)),
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 100_000_000,
            max_seconds: None,
        }
    }
}

/// Running node counter for one search.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
    deadline: Option<Instant>,
}

impl Budget {
    /// Charges one node. Returns `false` once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.used >= self.limit {
            return false;
        }
        self.used += 1;
        if let Some(deadline) = self.deadline {
            if self.used % 4096 == 0 && Instant::now() >= deadline {
                self.limit = self.used;
                return false;
            }
        }
        true
    }

    /// Charges `k` nodes at once, or nothing if fewer than `k` remain.
    pub fn charge(&mut self, k: u64) -> bool {
        if k > self.remaining() {
            return false;
        }
        self.used += k;
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.limit = self.used;
            }
        }
        true
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn remaining(&self) -> u64 {
        self.limit - self.used
    }

    pub fn exhausted(&self) -> bool {
        self.used >= self.limit
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_nodes_rejected() {
        assert!(SearchBudget::nodes(0).is_err());
    }

    #[test]
    fn tick_stops_at_limit() {
        let mut b = SearchBudget::nodes(2).unwrap().start();
        assert!(b.tick());
        assert!(b.tick());
        assert!(!b.tick());
        assert!(b.exhausted());
        assert_eq!(b.used(), 2);
    }
}
