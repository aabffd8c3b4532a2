//! Union and concatenation of systems.
//!
//! Each operand is renamed onto private copies of all of its symbols (terminals included),
//! so its tables cannot touch the other operand's part of a sentential form. A fresh start
//! symbol seeds the copies, and a final table maps copied terminals back to the shared
//! terminal tokens.

use std::collections::{BTreeMap, BTreeSet};

use super::alphabet::{Alphabet, SymbolId, Word};
use super::control::Regex;
use super::error::Result;
use super::system::LSystem;
use super::table::Table;

struct Fresh {
    taken: BTreeSet<String>,
}

impl Fresh {
    fn name(&mut self, base: &str) -> String {
        let mut candidate = base.to_string();
        while self.taken.contains(&candidate) {
            candidate.push('\'');
        }
        self.taken.insert(candidate.clone());
        candidate
    }
}

struct Copy {
    symbols: Vec<SymbolId>,
}

impl Copy {
    fn map(&self, w: &[SymbolId]) -> Word {
        w.iter().map(|s| self.symbols[s.index()]).collect()
    }
}

struct Combined<'a> {
    parts: [&'a LSystem; 2],
    alphabet: Alphabet,
    copies: Vec<Copy>,
    shared_terminals: BTreeMap<String, SymbolId>,
    start: SymbolId,
    table_names: Fresh,
}

impl<'a> Combined<'a> {
    fn new(left: &'a LSystem, right: &'a LSystem) -> Result<Self> {
        let parts = [left, right];
        let mut taken: BTreeSet<String> = BTreeSet::new();
        for sys in parts {
            taken.extend(sys.alphabet().tokens().iter().cloned());
        }
        let mut symbols = Fresh { taken };
        let mut alphabet = Alphabet::default();
        let mut shared_terminals = BTreeMap::new();
        for sys in parts {
            for t in sys.terminals() {
                let tok = sys.alphabet().token(t).to_string();
                if !shared_terminals.contains_key(&tok) {
                    let id = alphabet.insert(tok.clone())?;
                    shared_terminals.insert(tok, id);
                }
            }
        }
        let mut copies = Vec::new();
        for (i, sys) in parts.iter().enumerate() {
            let mut ids = Vec::with_capacity(sys.alphabet().len());
            for tok in sys.alphabet().tokens() {
                ids.push(alphabet.insert(symbols.name(&format!("{tok}.{}", i + 1)))?);
            }
            copies.push(Copy { symbols: ids });
        }
        let start = alphabet.insert(symbols.name("Z"))?;
        Ok(Combined {
            parts,
            alphabet,
            copies,
            shared_terminals,
            start,
            table_names: Fresh { taken: BTreeSet::new() },
        })
    }

    /// Copies operand `i`'s tables; returns them with its control mapped onto their indices.
    fn operand_tables(&mut self, i: usize, offset: usize) -> Result<(Vec<Table>, Regex)> {
        let sys = self.parts[i];
        let copy = &self.copies[i];
        let n = self.alphabet.len();
        let mut tables = Vec::new();
        for t in sys.tables() {
            let rules = sys.alphabet().ids().flat_map(|x| {
                t.explicit_rules(x).iter().map(move |r| (copy.symbols[x.index()], copy.map(r)))
            });
            let name = self.table_names.name(&format!("{}.{}", t.name(), i + 1));
            tables.push(Table::new(name, n, rules.collect::<Vec<_>>())?);
        }
        Ok((tables, sys.control().map_tables(&|t| t + offset)))
    }

    fn finish_table(&mut self) -> Result<Table> {
        let mut rules = Vec::new();
        for (i, sys) in self.parts.iter().enumerate() {
            for t in sys.terminals() {
                let tok = sys.alphabet().token(t);
                rules.push((self.copies[i].symbols[t.index()], vec![self.shared_terminals[tok]]));
            }
        }
        let name = self.table_names.name("fin");
        Table::new(name, self.alphabet.len(), rules)
    }

    fn terminals(&self) -> Vec<SymbolId> {
        self.shared_terminals.values().copied().collect()
    }
}

/// A system generating `L(left) ∪ L(right)`.
pub fn union(left: &LSystem, right: &LSystem) -> Result<LSystem> {
    let mut c = Combined::new(left, right)?;
    let n = c.alphabet.len();
    let mut tables = Vec::new();
    let mut branches = Vec::new();
    for i in 0..2 {
        let seeds: Vec<(SymbolId, Word)> =
            c.parts[i].axioms().iter().map(|a| (c.start, c.copies[i].map(a))).collect();
        let init_name = c.table_names.name(&format!("init.{}", i + 1));
        let init = tables.len();
        tables.push(Table::new(init_name, n, seeds)?);
        let (own, control) = c.operand_tables(i, tables.len())?;
        tables.extend(own);
        branches.push(Regex::concat(vec![Regex::Table(init), control]));
    }
    let fin = tables.len();
    tables.push(c.finish_table()?);
    let control = Regex::concat(vec![Regex::union(branches), Regex::Table(fin)]);
    let terminals = c.terminals();
    LSystem::new(c.alphabet, terminals, vec![vec![c.start]], tables, control)
}

/// A system generating `L(left) · L(right)`.
pub fn concat(left: &LSystem, right: &LSystem) -> Result<LSystem> {
    let mut c = Combined::new(left, right)?;
    let n = c.alphabet.len();
    let mut seeds = Vec::new();
    for a in left.axioms() {
        for b in right.axioms() {
            let mut w = c.copies[0].map(a);
            w.extend(c.copies[1].map(b));
            seeds.push((c.start, w));
        }
    }
    let init_name = c.table_names.name("init");
    let mut tables = vec![Table::new(init_name, n, seeds)?];
    let mut parts = vec![Regex::Table(0)];
    for i in 0..2 {
        let (own, control) = c.operand_tables(i, tables.len())?;
        tables.extend(own);
        parts.push(control);
    }
    let fin = tables.len();
    tables.push(c.finish_table()?);
    parts.push(Regex::Table(fin));
    let terminals = c.terminals();
    LSystem::new(c.alphabet, terminals, vec![vec![c.start]], tables, Regex::concat(parts))
}
