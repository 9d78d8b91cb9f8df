//! Stokes sector configurations.
//!
//! A configuration fixes the number of sectors `n` and which of them are
//! subdominant (asymptotic value zero). Everything else in the crate is
//! indexed by sectors mod `n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SectorConfig {
    n: usize,
    subdominant: BTreeSet<usize>,
}

impl SectorConfig {
    /// Builds a configuration, rejecting anything that violates the sector rules.
    pub fn new(n: usize, subdominant: impl IntoIterator<Item = usize>) -> Result<Self> {
        let cfg = Self::new_unchecked(n, subdominant);
        let problems = cfg.problems();
        if problems.is_empty() {
            Ok(cfg)
        } else {
            Err(Error::InvalidConfig(problems.join("; ")))
        }
    }

    /// Builds a configuration without checking it. Used by parsers so that
    /// rule violations surface in validation rather than at parse time.
    pub fn new_unchecked(n: usize, subdominant: impl IntoIterator<Item = usize>) -> Self {
        SectorConfig {
            n,
            subdominant: subdominant.into_iter().collect(),
        }
    }

    /// Every rule this configuration breaks, as human-readable messages.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.n < 5 {
            out.push(format!("sector count {} is below 5", self.n));
        }
        for &s in &self.subdominant {
            if s >= self.n {
                out.push(format!("subdominant index {s} out of range for n = {}", self.n));
            }
        }
        if self.n > 0 {
            for &s in &self.subdominant {
                if s < self.n && self.subdominant.contains(&((s + 1) % self.n)) && self.n > 1 {
                    out.push(format!(
                        "adjacent subdominant sectors {} and {}",
                        s,
                        (s + 1) % self.n
                    ));
                }
            }
        }
        if 2 * self.subdominant.len() > self.n {
            out.push("more than n/2 subdominant sectors".to_string());
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.problems().is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subdominant(&self) -> &BTreeSet<usize> {
        &self.subdominant
    }

    pub fn is_subdominant(&self, i: usize) -> bool {
        self.subdominant.contains(&(i % self.n))
    }

    pub fn is_dominant(&self, i: usize) -> bool {
        !self.is_subdominant(i)
    }

    /// Dominant indices in increasing order.
    pub fn dominant(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.is_dominant(i)).collect()
    }

    /// The next dominant index after `j` in cyclic order (`j₊`).
    pub fn next_dominant(&self, j: usize) -> usize {
        let mut k = (j + 1) % self.n;
        while self.is_subdominant(k) {
            k = (k + 1) % self.n;
        }
        k
    }

    /// The previous dominant index before `j` in cyclic order (`j₋`).
    pub fn prev_dominant(&self, j: usize) -> usize {
        let mut k = (j + self.n - 1) % self.n;
        while self.is_subdominant(k) {
            k = (k + self.n - 1) % self.n;
        }
        k
    }

    pub fn succ(&self, i: usize) -> usize {
        (i + 1) % self.n
    }

    pub fn pred(&self, i: usize) -> usize {
        (i + self.n - 1) % self.n
    }

    /// True when some two cyclically adjacent sectors are both dominant.
    pub fn has_adjacent_dominant(&self) -> bool {
        (0..self.n).any(|i| self.is_dominant(i) && self.is_dominant(i + 1))
    }

    /// True when every other sector is subdominant (`k = n/2`).
    pub fn is_alternating(&self) -> bool {
        self.n % 2 == 0 && 2 * self.subdominant.len() == self.n
    }

    pub(crate) fn require_dominant(&self, j: usize) -> Result<()> {
        if j < self.n && self.is_dominant(j) {
            Ok(())
        } else {
            Err(Error::NotDominant(j))
        }
    }
}

impl fmt::Display for SectorConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let subs: Vec<String> = self.subdominant.iter().map(|s| s.to_string()).collect();
        write!(f, "({}, {{{}}})", self.n, subs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_and_adjacent() {
        assert!(SectorConfig::new(4, [0, 2]).is_err());
        assert!(SectorConfig::new(6, [0, 1]).is_err());
        assert!(SectorConfig::new(6, [5, 0]).is_err());
        assert!(SectorConfig::new(6, [0, 3]).is_ok());
        assert!(SectorConfig::new(6, [7]).is_err());
    }

    #[test]
    fn successor_skips_one_subdominant() {
        let c = SectorConfig::new(6, [0, 3]).unwrap();
        assert_eq!(c.next_dominant(2), 4);
        assert_eq!(c.next_dominant(5), 1);
        assert_eq!(c.next_dominant(1), 2);
        assert_eq!(c.prev_dominant(4), 2);
        assert_eq!(c.prev_dominant(1), 5);
    }

    #[test]
    fn alternating_and_adjacency() {
        let alt = SectorConfig::new(6, [0, 2, 4]).unwrap();
        assert!(alt.is_alternating());
        assert!(!alt.has_adjacent_dominant());
        let c = SectorConfig::new(5, [0, 2]).unwrap();
        assert!(!c.is_alternating());
        assert!(c.has_adjacent_dominant());
        assert!(SectorConfig::new(5, []).unwrap().has_adjacent_dominant());
    }
}
