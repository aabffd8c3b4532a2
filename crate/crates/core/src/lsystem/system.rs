use std::collections::BTreeSet;

use super::alphabet::{validate_token, Alphabet, SymbolId, Word};
use super::control::{ControlAutomaton, Regex};
use super::error::{LsysError, Result};
use super::table::Table;

/// An ET0L system under rational control.
///
/// A word is generated when some axiom rewrites to it through a table sequence accepted by
/// the control automaton and the word lies over the terminal alphabet. Values are immutable
/// once built.
#[derive(Debug, Clone)]
pub struct LSystem {
    alphabet: Alphabet,
    terminal: Vec<bool>,
    axioms: Vec<Word>,
    tables: Vec<Table>,
    control: Regex,
    automaton: ControlAutomaton,
    min_yield: Vec<Option<usize>>,
}

impl LSystem {
    pub fn builder() -> LSystemBuilder {
        LSystemBuilder::default()
    }

    pub fn new(
        alphabet: Alphabet,
        terminals: impl IntoIterator<Item = SymbolId>,
        axioms: Vec<Word>,
        tables: Vec<Table>,
        control: Regex,
    ) -> Result<Self> {
        let mut terminal = vec![false; alphabet.len()];
        for t in terminals {
            if !alphabet.contains_id(t) {
                return Err(LsysError::SymbolOutOfRange(t.index()));
            }
            terminal[t.index()] = true;
        }
        if axioms.is_empty() {
            return Err(LsysError::NoAxiom);
        }
        for w in &axioms {
            if let Some(s) = w.iter().find(|s| !alphabet.contains_id(**s)) {
                return Err(LsysError::SymbolOutOfRange(s.index()));
            }
        }
        let mut seen = BTreeSet::new();
        for t in &tables {
            validate_token(t.name()).map_err(|_| {
                LsysError::Invalid(format!("table name {:?} is not a valid identifier", t.name()))
            })?;
            if !seen.insert(t.name().to_string()) {
                return Err(LsysError::DuplicateTable(t.name().to_string()));
            }
            if t.alphabet_len() != alphabet.len() {
                return Err(LsysError::Invalid(format!(
                    "table {:?} is built over a different alphabet",
                    t.name()
                )));
            }
        }
        if let Some(&bad) = control.tables().iter().find(|&&i| i >= tables.len()) {
            return Err(LsysError::UnknownTable(format!("index {bad}")));
        }
        let automaton = ControlAutomaton::from_regex(&control);
        let min_yield = compute_min_yield(&terminal, &tables);
        Ok(LSystem { alphabet, terminal, axioms, tables, control, automaton, min_yield })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_terminal(&self, s: SymbolId) -> bool {
        self.terminal.get(s.index()).copied().unwrap_or(false)
    }

    pub fn is_terminal_word(&self, w: &[SymbolId]) -> bool {
        w.iter().all(|&s| self.is_terminal(s))
    }

    pub fn terminals(&self) -> impl Iterator<Item = SymbolId> + '_ {
        self.alphabet.ids().filter(|&s| self.is_terminal(s))
    }

    pub fn axioms(&self) -> &[Word] {
        &self.axioms
    }

    pub fn tables(&self) -> &[Table] {
        &self.tables
    }

    pub fn table_index(&self, name: &str) -> Option<usize> {
        self.tables.iter().position(|t| t.name() == name)
    }

    pub fn table(&self, name: &str) -> Result<&Table> {
        self.table_index(name)
            .map(|i| &self.tables[i])
            .ok_or_else(|| LsysError::UnknownTable(name.to_string()))
    }

    pub fn control(&self) -> &Regex {
        &self.control
    }

    pub fn control_source(&self) -> String {
        self.control.render(&|i| self.tables[i].name().to_string())
    }

    pub fn automaton(&self) -> &ControlAutomaton {
        &self.automaton
    }

    /// True when every table has at most one rule per symbol (an EDT0L system).
    pub fn is_deterministic(&self) -> bool {
        self.tables.iter().all(Table::is_deterministic)
    }

    pub fn step(&self, word: &[SymbolId], table: &str) -> Result<BTreeSet<Word>> {
        self.table(table)?.step(word)
    }

    pub fn apply_deterministic(&self, word: &[SymbolId], table: &str) -> Result<Word> {
        self.table(table)?.apply_deterministic(word)
    }

    /// Lower bound on the length of any terminal word derivable from `symbol` by any table
    /// sequence; `None` when no terminal word is derivable at all.
    pub fn min_yield_of(&self, symbol: SymbolId) -> Option<usize> {
        self.min_yield[symbol.index()]
    }

    pub fn min_yield(&self, word: &[SymbolId]) -> Option<usize> {
        word.iter().try_fold(0usize, |acc, &s| self.min_yield[s.index()].map(|m| acc + m))
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse_word(text)
    }

    /// Parses a word and requires every symbol to be terminal.
    pub fn parse_terminal_word(&self, text: &str) -> Result<Word> {
        let w = self.alphabet.parse_word(text)?;
        match w.iter().find(|&&s| !self.is_terminal(s)) {
            Some(&s) => Err(LsysError::NonTerminal(self.alphabet.token(s).to_string())),
            None => Ok(w),
        }
    }

    pub fn format_word(&self, word: &[SymbolId]) -> String {
        self.alphabet.format_word(word)
    }

    /// Whether two systems have the same symbols, tables, axioms and control, compared by
    /// token and name.
    pub fn structurally_eq(&self, other: &LSystem) -> bool {
        let tok = |s: &LSystem, w: &Word| s.alphabet.format_word_spaced(w);
        let terminals = |s: &LSystem| {
            s.terminals().map(|t| s.alphabet.token(t).to_string()).collect::<BTreeSet<_>>()
        };
        let rules = |s: &LSystem, t: &Table| {
            s.alphabet
                .ids()
                .flat_map(|x| {
                    t.explicit_rules(x)
                        .iter()
                        .map(move |r| (s.alphabet.token(x).to_string(), tok(s, r)))
                })
                .collect::<BTreeSet<_>>()
        };
        let alpha = |s: &LSystem| s.alphabet.tokens().iter().cloned().collect::<BTreeSet<_>>();
        alpha(self) == alpha(other)
            && terminals(self) == terminals(other)
            && self.axioms.iter().map(|w| tok(self, w)).collect::<BTreeSet<_>>()
                == other.axioms.iter().map(|w| tok(other, w)).collect::<BTreeSet<_>>()
            && self.tables.len() == other.tables.len()
            && self.tables.iter().all(|t| {
                other
                    .table(t.name())
                    .map(|u| rules(self, t) == rules(other, u))
                    .unwrap_or(false)
            })
            && self.control_source() == other.control_source()
    }
}

fn compute_min_yield(terminal: &[bool], tables: &[Table]) -> Vec<Option<usize>> {
    let mut best: Vec<Option<usize>> =
        terminal.iter().map(|&t| if t { Some(1) } else { None }).collect();
    loop {
        let mut changed = false;
        for table in tables {
            for i in 0..best.len() {
                for rhs in table.explicit_rules(SymbolId(i as u32)) {
                    let cost = rhs
                        .iter()
                        .try_fold(0usize, |acc, s| best[s.index()].map(|m| acc + m));
                    if let Some(c) = cost {
                        if best[i].map_or(true, |b| c < b) {
                            best[i] = Some(c);
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            return best;
        }
    }
}

/// Collects a system from token strings: rules are written as whitespace-separated
/// replacement tokens, `~` for the empty replacement.
#[derive(Debug, Clone, Default)]
pub struct LSystemBuilder {
    alphabet: Vec<String>,
    terminals: Vec<String>,
    axioms: Vec<String>,
    tables: Vec<(String, Vec<(String, String)>)>,
    control: Option<String>,
}

impl LSystemBuilder {
    pub fn alphabet<I: IntoIterator<Item = S>, S: Into<String>>(mut self, tokens: I) -> Self {
        self.alphabet.extend(tokens.into_iter().map(Into::into));
        self
    }

    pub fn terminals<I: IntoIterator<Item = S>, S: Into<String>>(mut self, tokens: I) -> Self {
        self.terminals.extend(tokens.into_iter().map(Into::into));
        self
    }

    pub fn axiom(mut self, word: impl Into<String>) -> Self {
        self.axioms.push(word.into());
        self
    }

    pub fn table(mut self, name: impl Into<String>, rules: &[(&str, &str)]) -> Self {
        self.tables.push((
            name.into(),
            rules.iter().map(|(l, r)| (l.to_string(), r.to_string())).collect(),
        ));
        self
    }

    pub(crate) fn table_owned(mut self, name: String, rules: Vec<(String, String)>) -> Self {
        self.tables.push((name, rules));
        self
    }

    pub fn control(mut self, regex: impl Into<String>) -> Self {
        self.control = Some(regex.into());
        self
    }

    pub fn build(self) -> Result<LSystem> {
        let alphabet = Alphabet::new(self.alphabet)?;
        let terminals = self
            .terminals
            .iter()
            .map(|t| alphabet.id(t))
            .collect::<Result<Vec<_>>>()?;
        let words = |text: &str| -> Result<Word> {
            text.split_whitespace()
                .filter(|t| *t != "~")
                .map(|t| alphabet.id(t))
                .collect()
        };
        let axioms = self.axioms.iter().map(|a| words(a)).collect::<Result<Vec<_>>>()?;
        let mut tables = Vec::with_capacity(self.tables.len());
        for (name, rules) in &self.tables {
            let parsed = rules
                .iter()
                .map(|(l, r)| Ok((alphabet.id(l.trim())?, words(r)?)))
                .collect::<Result<Vec<_>>>()?;
            tables.push(Table::new(name.clone(), alphabet.len(), parsed)?);
        }
        let names: Vec<String> = self.tables.iter().map(|(n, _)| n.clone()).collect();
        let control = match &self.control {
            Some(src) => Regex::parse(src, |n| names.iter().position(|m| m == n))?,
            None => return Err(LsysError::Invalid("system has no control expression".into())),
        };
        LSystem::new(alphabet, terminals, axioms, tables, control)
    }
}
