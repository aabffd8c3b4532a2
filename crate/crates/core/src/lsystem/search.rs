//! Breadth-first exploration of (control state, sentential form) pairs.
//!
//! Forms whose every terminal descendant would be longer than the length bound are pruned;
//! the bound comes from [`LSystem::min_yield`], which is valid for erasing systems too, so
//! pruning never costs exhaustiveness. Anything cut by a [`SearchCaps`] limit marks the
//! result as non-exhaustive.

use std::collections::HashMap;
use std::ops::ControlFlow;

use super::alphabet::{SymbolId, Word};
use super::error::{LsysError, Result};
use super::system::LSystem;
use super::table::Table;
use super::witness::DerivationWitness;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchCaps {
    pub max_sentential_length: usize,
    pub max_control_length: usize,
    pub max_visited: usize,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps { max_sentential_length: 64, max_control_length: 64, max_visited: 500_000 }
    }
}

impl SearchCaps {
    pub fn new(
        max_sentential_length: usize,
        max_control_length: usize,
        max_visited: usize,
    ) -> Result<Self> {
        if max_sentential_length == 0 || max_control_length == 0 || max_visited == 0 {
            return Err(LsysError::Invalid("search caps must be positive".into()));
        }
        Ok(SearchCaps { max_sentential_length, max_control_length, max_visited })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Terminal words in length-lexicographic order of their tokens.
    pub words: Vec<Word>,
    /// True iff no cap was hit; `words` is then the whole language up to the length bound.
    pub exhaustive: bool,
    pub visited: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Yes(DerivationWitness),
    No,
    Unknown,
}

impl Membership {
    pub fn is_yes(&self) -> bool {
        matches!(self, Membership::Yes(_))
    }
}

struct Node {
    state: usize,
    form: Word,
    depth: usize,
    parent: Option<(usize, usize)>,
}

struct Search<'a> {
    sys: &'a LSystem,
    caps: SearchCaps,
    bound: usize,
    nodes: Vec<Node>,
    seen: HashMap<(usize, Word), usize>,
    cap_hit: bool,
    work: usize,
    /// Per table, the cheapest yield among each symbol's replacements.
    choice_yield: Vec<Vec<Option<usize>>>,
}

impl<'a> Search<'a> {
    fn new(sys: &'a LSystem, caps: SearchCaps, bound: usize) -> Self {
        let choice_yield = sys
            .tables()
            .iter()
            .map(|t| {
                sys.alphabet()
                    .ids()
                    .map(|s| t.choices(s).iter().filter_map(|r| sys.min_yield(r)).min())
                    .collect()
            })
            .collect();
        Search {
            sys,
            caps,
            bound,
            nodes: Vec::new(),
            seen: HashMap::new(),
            cap_hit: false,
            work: 0,
            choice_yield,
        }
    }

    fn admit(&mut self, state: usize, form: Word, depth: usize, parent: Option<(usize, usize)>) {
        if self.sys.min_yield(&form).map_or(true, |y| y > self.bound) {
            return;
        }
        if form.len() > self.caps.max_sentential_length {
            self.cap_hit = true;
            return;
        }
        let key = (state, form);
        if self.seen.contains_key(&key) {
            return;
        }
        if self.seen.len() >= self.caps.max_visited {
            self.cap_hit = true;
            return;
        }
        self.seen.insert(key.clone(), self.nodes.len());
        self.nodes.push(Node { state, form: key.1, depth, parent });
    }

    /// Runs the search, calling `found` on each accepted terminal form within the bound.
    fn run(&mut self, mut found: impl FnMut(&LSystem, usize, &Word) -> ControlFlow<()>) {
        let automaton = self.sys.automaton();
        for axiom in self.sys.axioms() {
            self.admit(automaton.initial(), axiom.clone(), 0, None);
        }
        let mut i = 0;
        while i < self.nodes.len() {
            let (state, depth) = (self.nodes[i].state, self.nodes[i].depth);
            if automaton.is_accepting(state)
                && self.nodes[i].form.len() <= self.bound
                && self.sys.is_terminal_word(&self.nodes[i].form)
                && found(self.sys, i, &self.nodes[i].form).is_break()
            {
                return;
            }
            let transitions: Vec<(usize, usize)> = automaton.transitions(state).collect();
            if !transitions.is_empty() && depth >= self.caps.max_control_length {
                self.cap_hit = true;
                i += 1;
                continue;
            }
            let form = self.nodes[i].form.clone();
            for (t, next) in transitions {
                let mut succ = Vec::new();
                if !self.successors(t, &form, &mut succ) {
                    return;
                }
                for w in succ {
                    self.admit(next, w, depth + 1, Some((i, t)));
                    if self.seen.len() >= self.caps.max_visited && self.cap_hit {
                        return;
                    }
                }
            }
            i += 1;
        }
    }

    /// Generates the successors of `form` under table `t` that survive yield pruning.
    /// Returns false when the work cap stops generation.
    fn successors(&mut self, t: usize, form: &[SymbolId], out: &mut Vec<Word>) -> bool {
        let yields = &self.choice_yield[t];
        let mut suffix = vec![Some(0usize); form.len() + 1];
        for p in (0..form.len()).rev() {
            suffix[p] = match (yields[form[p].index()], suffix[p + 1]) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            };
        }
        let Some(total) = suffix[0] else { return true };
        if total > self.bound {
            return true;
        }
        let table = &self.sys.tables()[t];
        let mut ctx = Gen {
            sys: self.sys,
            table,
            form,
            suffix: &suffix,
            bound: self.bound,
            max_len: self.caps.max_sentential_length,
            work_cap: self.caps.max_visited.saturating_mul(4),
            work: &mut self.work,
            cap_hit: &mut self.cap_hit,
            out,
        };
        let mut buf = Vec::new();
        ctx.go(0, 0, &mut buf)
    }

    fn witness(&self, mut node: usize) -> DerivationWitness {
        let mut rev = Vec::new();
        while let Some((parent, t)) = self.nodes[node].parent {
            rev.push((t, self.nodes[node].form.clone()));
            node = parent;
        }
        let mut w = DerivationWitness::new(self.nodes[node].form.clone());
        for (t, form) in rev.into_iter().rev() {
            w.push(self.sys.tables()[t].name(), form);
        }
        w
    }
}

struct Gen<'s, 'w> {
    sys: &'s LSystem,
    table: &'s Table,
    form: &'w [SymbolId],
    suffix: &'w [Option<usize>],
    bound: usize,
    max_len: usize,
    work_cap: usize,
    work: &'w mut usize,
    cap_hit: &'w mut bool,
    out: &'w mut Vec<Word>,
}

impl Gen<'_, '_> {
    fn go(&mut self, pos: usize, prefix_yield: usize, buf: &mut Word) -> bool {
        if pos == self.form.len() {
            *self.work += 1;
            if *self.work > self.work_cap {
                *self.cap_hit = true;
                return false;
            }
            self.out.push(buf.clone());
            return true;
        }
        for rhs in self.table.choices(self.form[pos]) {
            let Some(y) = self.sys.min_yield(rhs) else { continue };
            let rest = self.suffix[pos + 1].unwrap_or(usize::MAX);
            if (prefix_yield + y).saturating_add(rest) > self.bound {
                continue;
            }
            let mark = buf.len();
            buf.extend_from_slice(rhs);
            if buf.len() > self.max_len {
                // a completion within the yield bound exists, so this is a genuine cut
                *self.cap_hit = true;
            } else if !self.go(pos + 1, prefix_yield + y, buf) {
                return false;
            }
            buf.truncate(mark);
        }
        true
    }
}

impl LSystem {
    /// Every terminal word of length at most `max_word_length` reachable within `caps`.
    pub fn enumerate(&self, max_word_length: usize, caps: SearchCaps) -> Enumeration {
        let mut search = Search::new(self, caps, max_word_length);
        let mut words = Vec::new();
        search.run(|_, _, w| {
            words.push(w.clone());
            ControlFlow::Continue(())
        });
        words.sort_by(|a, b| self.alphabet().cmp_words(a, b));
        words.dedup();
        Enumeration { words, exhaustive: !search.cap_hit, visited: search.seen.len() }
    }

    /// Three-valued membership: `No` only when the bounded search space was exhausted.
    pub fn member(&self, word: &[SymbolId], caps: SearchCaps) -> Result<Membership> {
        if let Some(&s) = word.iter().find(|&&s| !self.is_terminal(s)) {
            return Err(if self.alphabet().contains_id(s) {
                LsysError::NonTerminal(self.alphabet().token(s).to_string())
            } else {
                LsysError::SymbolOutOfRange(s.index())
            });
        }
        let mut search = Search::new(self, caps, word.len());
        let mut hit = None;
        search.run(|_, i, w| {
            if w == word {
                hit = Some(i);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        Ok(match hit {
            Some(i) => Membership::Yes(search.witness(i)),
            None if search.cap_hit => Membership::Unknown,
            None => Membership::No,
        })
    }
}
