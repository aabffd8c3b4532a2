use std::collections::BTreeSet;

use super::alphabet::{SymbolId, Word};
use super::error::{LsysError, Result};

/// A named finite relation from symbols to replacement strings, applied in parallel.
///
/// A symbol without an explicit rule rewrites to itself, so a table with no rules at all is
/// the identity on every word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    name: String,
    explicit: Vec<Vec<Word>>,
    effective: Vec<Vec<Word>>,
}

impl Table {
    /// Builds a table over an alphabet of `alphabet_len` symbols. Repeated identical rules
    /// collapse into one alternative.
    pub fn new(
        name: impl Into<String>,
        alphabet_len: usize,
        rules: impl IntoIterator<Item = (SymbolId, Word)>,
    ) -> Result<Self> {
        let mut explicit: Vec<Vec<Word>> = vec![Vec::new(); alphabet_len];
        for (lhs, rhs) in rules {
            if lhs.index() >= alphabet_len {
                return Err(LsysError::SymbolOutOfRange(lhs.index()));
            }
            if let Some(s) = rhs.iter().find(|s| s.index() >= alphabet_len) {
                return Err(LsysError::SymbolOutOfRange(s.index()));
            }
            let alts = &mut explicit[lhs.index()];
            if !alts.contains(&rhs) {
                alts.push(rhs);
            }
        }
        let effective = explicit
            .iter()
            .enumerate()
            .map(|(i, alts)| {
                if alts.is_empty() {
                    vec![vec![SymbolId(i as u32)]]
                } else {
                    alts.clone()
                }
            })
            .collect();
        Ok(Table { name: name.into(), explicit, effective })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet_len(&self) -> usize {
        self.explicit.len()
    }

    /// Rules written for `symbol`; empty when the identity convention applies.
    pub fn explicit_rules(&self, symbol: SymbolId) -> &[Word] {
        &self.explicit[symbol.index()]
    }

    /// Every replacement available for `symbol`, including the implicit identity rule.
    pub fn choices(&self, symbol: SymbolId) -> &[Word] {
        &self.effective[symbol.index()]
    }

    pub fn rule_count(&self) -> usize {
        self.explicit.iter().map(Vec::len).sum()
    }

    pub fn is_deterministic(&self) -> bool {
        self.explicit.iter().all(|alts| alts.len() <= 1)
    }

    fn check_word(&self, word: &[SymbolId]) -> Result<()> {
        match word.iter().find(|s| s.index() >= self.explicit.len()) {
            Some(s) => Err(LsysError::SymbolOutOfRange(s.index())),
            None => Ok(()),
        }
    }

    /// All words obtainable from `word` by one parallel application of the table.
    pub fn step(&self, word: &[SymbolId]) -> Result<BTreeSet<Word>> {
        self.check_word(word)?;
        let mut out = BTreeSet::new();
        let mut buf = Vec::new();
        self.product(word, 0, &mut buf, &mut out);
        Ok(out)
    }

    fn product(&self, word: &[SymbolId], pos: usize, buf: &mut Word, out: &mut BTreeSet<Word>) {
        if pos == word.len() {
            out.insert(buf.clone());
            return;
        }
        for rhs in self.choices(word[pos]) {
            let mark = buf.len();
            buf.extend_from_slice(rhs);
            self.product(word, pos + 1, buf, out);
            buf.truncate(mark);
        }
    }

    /// Applies a deterministic table as a monoid homomorphism.
    pub fn apply_deterministic(&self, word: &[SymbolId]) -> Result<Word> {
        if !self.is_deterministic() {
            return Err(LsysError::Nondeterministic(self.name.clone()));
        }
        self.check_word(word)?;
        Ok(word.iter().flat_map(|&s| self.effective[s.index()][0].iter().copied()).collect())
    }

    /// Whether `to` is one of the words in `step(from)`, decided without enumerating them.
    pub fn derives(&self, from: &[SymbolId], to: &[SymbolId]) -> bool {
        if self.check_word(from).is_err() {
            return false;
        }
        // reach[j]: the first i symbols of `from` can produce to[..j]
        let mut reach = vec![false; to.len() + 1];
        reach[0] = true;
        for &sym in from {
            let mut next = vec![false; to.len() + 1];
            for (j, _) in reach.iter().enumerate().filter(|(_, r)| **r) {
                for rhs in self.choices(sym) {
                    let end = j + rhs.len();
                    if end <= to.len() && to[j..end] == rhs[..] {
                        next[end] = true;
                    }
                }
            }
            reach = next;
        }
        reach[to.len()]
    }
}
