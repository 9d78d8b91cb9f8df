//! Loop systems: the words in the free group on `g_0 … g_{n-1}` that
//! describe the loops `γ_j`, and the braid actions on them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::action::{BraidWord, Sign};
use crate::config::SectorConfig;
use crate::error::{Error, Result};

/// One letter: generator index and whether it is inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    fn inv(self) -> Letter {
        Letter { inverse: !self.inverse, ..self }
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct LoopWord(Vec<Letter>);

impl LoopWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: usize) -> Self {
        LoopWord(vec![Letter { generator: g, inverse: false }])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        LoopWord(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &LoopWord) -> LoopWord {
        LoopWord::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn inverse(&self) -> LoopWord {
        LoopWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// `self · x · self⁻¹`
    pub fn conjugate(&self, x: &LoopWord) -> LoopWord {
        self.mul(x).mul(&self.inverse())
    }

    /// Replaces the listed generators by the identity.
    pub fn erase(&self, generators: &BTreeSet<usize>) -> LoopWord {
        LoopWord::from_letters(self.0.iter().copied().filter(|l| !generators.contains(&l.generator)))
    }

    /// Cyclic reduction, then the least rotation: equal results mean the
    /// words are conjugate.
    pub fn conjugacy_key(&self) -> LoopWord {
        let mut w = self.0.clone();
        while w.len() >= 2 && w[0] == w[w.len() - 1].inv() {
            w.pop();
            w.remove(0);
        }
        let best = (0..w.len().max(1))
            .map(|k| {
                let mut r = w.clone();
                r.rotate_left(k.min(w.len()));
                r
            })
            .min()
            .unwrap_or_default();
        LoopWord(best)
    }
}

impl fmt::Display for LoopWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            let c = (b'a' + l.generator as u8) as char;
            write!(f, "{}", if l.inverse { c.to_ascii_uppercase() } else { c })?;
        }
        Ok(())
    }
}

impl FromStr for LoopWord {
    type Err = Error;

    /// Letters `a..z` are generators, uppercase their inverses; `1` is the
    /// identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(LoopWord::identity());
        }
        let mut letters = Vec::new();
        for (i, c) in s.chars().enumerate() {
            if !c.is_ascii_alphabetic() {
                return Err(Error::parse(1, format!("column {}", i + 1), format!("unexpected {c:?}")));
            }
            letters.push(Letter {
                generator: (c.to_ascii_lowercase() as u8 - b'a') as usize,
                inverse: c.is_ascii_uppercase(),
            });
        }
        Ok(LoopWord::from_letters(letters))
    }
}

impl From<LoopWord> for String {
    fn from(w: LoopWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for LoopWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// The loops `γ_j` of the dominant sectors, as words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopSystem {
    pub config: SectorConfig,
    pub entries: BTreeMap<usize, LoopWord>,
}

impl LoopSystem {
    /// `γ_j = g_j` for every dominant `j`.
    pub fn initial(config: SectorConfig) -> Self {
        let entries = config.dominant().into_iter().map(|j| (j, LoopWord::generator(j))).collect();
        LoopSystem { config, entries }
    }

    pub fn entry(&self, j: usize) -> Option<&LoopWord> {
        self.entries.get(&j)
    }

    /// The action `B_j^{±1}` on the loops:
    /// `+1`: `γ_j ↦ γ_j γ_{j₊} γ_j⁻¹`, `γ_{j₊} ↦ γ_j`;
    /// `-1`: `γ_j ↦ γ_{j₊}`, `γ_{j₊} ↦ γ_{j₊}⁻¹ γ_j γ_{j₊}`.
    pub fn b_action(&self, j: usize, sign: Sign) -> Result<LoopSystem> {
        self.config.require_dominant(j)?;
        let p = self.config.next_dominant(j);
        let (gj, gp) = (&self.entries[&j], &self.entries[&p]);
        let (nj, np) = match sign {
            Sign::Plus => (gj.conjugate(gp), gj.clone()),
            Sign::Minus => (gp.clone(), gp.inverse().conjugate(gj)),
        };
        let mut out = self.clone();
        out.entries.insert(j, nj);
        out.entries.insert(p, np);
        Ok(out)
    }

    /// Applies a word left to right. Exponents of any size are allowed.
    pub fn word_action(&self, word: &BraidWord) -> Result<LoopSystem> {
        let mut sys = self.clone();
        for &(j, e) in word.letters() {
            let sign = if e > 0 { Sign::Plus } else { Sign::Minus };
            for _ in 0..e.unsigned_abs() {
                sys = sys.b_action(j, sign)?;
            }
        }
        Ok(sys)
    }

    /// Drops the loops labeled in `l` and erases their generators.
    pub fn project(&self, l: &BTreeSet<usize>) -> Result<LoopSystem> {
        let config = SectorConfig::new(self.config.n(), l.iter().copied())?;
        let entries = self
            .entries
            .iter()
            .filter(|(j, _)| !l.contains(j))
            .map(|(&j, w)| (j, w.erase(l)))
            .collect();
        Ok(LoopSystem { config, entries })
    }

    /// Product of the entries in label order.
    pub fn boundary_product(&self) -> LoopWord {
        self.entries.values().fold(LoopWord::identity(), |acc, w| acc.mul(w))
    }
}

impl fmt::Display for LoopSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.values().map(|w| w.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The all-dominant word that projects onto `A_j`: `B_j` itself, or the
/// conjugate `B_{j+1}⁻¹ B_j B_{j+1}` when `j+1` is in `l`.
pub fn lifted_generator(n: usize, l: &BTreeSet<usize>, j: usize) -> BraidWord {
    let next = (j + 1) % n;
    if l.contains(&next) {
        BraidWord(vec![(next, -1), (j, 1), (next, 1)])
    } else {
        BraidWord(vec![(j, 1)])
    }
}

/// Checks that projecting after the lifted generator equals acting with
/// `A_j` after projecting, starting from the initial system.
pub fn verify_commutation(n: usize, l: &BTreeSet<usize>, j: usize) -> Result<bool> {
    let full = LoopSystem::initial(SectorConfig::new(n, [])?);
    let lhs = full.word_action(&lifted_generator(n, l, j))?.project(l)?;
    let rhs = full.project(l)?.b_action(j, Sign::Plus)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn six() -> LoopSystem {
        LoopSystem::initial(SectorConfig::new(6, []).unwrap())
    }

    #[test]
    fn words_reduce_freely() {
        let w: LoopWord = "abBcCA".parse().unwrap();
        assert!(w.is_identity());
        assert_eq!("cEdeC".parse::<LoopWord>().unwrap().to_string(), "cEdeC");
    }

    #[test]
    fn basic_action_on_six_loops() {
        let s = six().b_action(1, Sign::Plus).unwrap();
        assert_eq!(s.to_string(), "(a,bcB,b,d,e,f)");
        assert_eq!(s.b_action(1, Sign::Minus).unwrap(), six());
    }

    #[test]
    fn conjugacy_key_ignores_rotation() {
        let a: LoopWord = "abc".parse().unwrap();
        let b: LoopWord = "Dbcad".parse().unwrap();
        assert_eq!(a.conjugacy_key(), b.conjugacy_key());
    }
}
