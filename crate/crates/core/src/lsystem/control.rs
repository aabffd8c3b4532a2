//! Rational control: regular expressions over table names and the automata that run them.
//!
//! Syntax: juxtaposition is concatenation, `|` is union, postfix `*` is Kleene star,
//! parentheses group, `~` is the empty table sequence. An expression with no atoms at all
//! denotes the empty set of control words.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::error::{LsysError, Result};

/// Regular expression over table indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    /// The empty language.
    Nothing,
    /// The language containing only the empty sequence.
    Epsilon,
    Table(usize),
    Concat(Vec<Regex>),
    Union(Vec<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn concat(parts: Vec<Regex>) -> Regex {
        if parts.contains(&Regex::Nothing) {
            return Regex::Nothing;
        }
        let parts: Vec<Regex> = parts.into_iter().filter(|p| *p != Regex::Epsilon).collect();
        match parts.len() {
            0 => Regex::Epsilon,
            1 => parts.into_iter().next().unwrap(),
            _ => Regex::Concat(parts),
        }
    }

    pub fn union(parts: Vec<Regex>) -> Regex {
        let parts: Vec<Regex> = parts.into_iter().filter(|p| *p != Regex::Nothing).collect();
        match parts.len() {
            0 => Regex::Nothing,
            1 => parts.into_iter().next().unwrap(),
            _ => Regex::Union(parts),
        }
    }

    pub fn star(inner: Regex) -> Regex {
        Regex::Star(Box::new(inner))
    }

    /// Parses `source`, resolving each table name with `resolve`.
    pub fn parse(source: &str, resolve: impl Fn(&str) -> Option<usize>) -> Result<Regex> {
        let tokens = lex(source);
        if tokens.is_empty() {
            return Ok(Regex::Nothing);
        }
        let mut parser = Parser { tokens, pos: 0, resolve: &resolve };
        let re = parser.union()?;
        if parser.pos != parser.tokens.len() {
            return Err(LsysError::Control(format!(
                "unexpected {:?} in {source:?}",
                parser.tokens[parser.pos]
            )));
        }
        Ok(re)
    }

    /// Renders the expression with table names supplied by `name`.
    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        match self {
            Regex::Nothing => String::new(),
            _ => self.render_prec(name, 0),
        }
    }

    fn render_prec(&self, name: &dyn Fn(usize) -> String, prec: u8) -> String {
        let (text, own) = match self {
            Regex::Nothing => ("()".to_string(), 3),
            Regex::Epsilon => ("~".to_string(), 3),
            Regex::Table(i) => (name(*i), 3),
            Regex::Star(inner) => (format!("{}*", inner.render_prec(name, 3)), 2),
            Regex::Concat(parts) => (
                parts.iter().map(|p| p.render_prec(name, 2)).collect::<Vec<_>>().join(" "),
                1,
            ),
            Regex::Union(parts) => (
                parts.iter().map(|p| p.render_prec(name, 1)).collect::<Vec<_>>().join(" | "),
                0,
            ),
        };
        if own < prec {
            format!("({text})")
        } else {
            text
        }
    }

    pub fn map_tables(&self, f: &dyn Fn(usize) -> usize) -> Regex {
        match self {
            Regex::Nothing => Regex::Nothing,
            Regex::Epsilon => Regex::Epsilon,
            Regex::Table(i) => Regex::Table(f(*i)),
            Regex::Concat(ps) => Regex::Concat(ps.iter().map(|p| p.map_tables(f)).collect()),
            Regex::Union(ps) => Regex::Union(ps.iter().map(|p| p.map_tables(f)).collect()),
            Regex::Star(inner) => Regex::Star(Box::new(inner.map_tables(f))),
        }
    }

    pub fn tables(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.collect_tables(&mut out);
        out
    }

    fn collect_tables(&self, out: &mut BTreeSet<usize>) {
        match self {
            Regex::Table(i) => {
                out.insert(*i);
            }
            Regex::Concat(ps) | Regex::Union(ps) => ps.iter().for_each(|p| p.collect_tables(out)),
            Regex::Star(inner) => inner.collect_tables(out),
            Regex::Nothing | Regex::Epsilon => {}
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Open,
    Close,
    Bar,
    Star,
    Eps,
}

fn lex(source: &str) -> Vec<Tok> {
    let mut out = Vec::new();
    let mut name = String::new();
    let flush = |name: &mut String, out: &mut Vec<Tok>| {
        if !name.is_empty() {
            out.push(Tok::Name(std::mem::take(name)));
        }
    };
    for ch in source.chars() {
        let tok = match ch {
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            '|' => Some(Tok::Bar),
            '*' => Some(Tok::Star),
            '~' => Some(Tok::Eps),
            c if c.is_whitespace() => None,
            c => {
                name.push(c);
                continue;
            }
        };
        flush(&mut name, &mut out);
        out.extend(tok);
    }
    flush(&mut name, &mut out);
    out
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    resolve: &'a dyn Fn(&str) -> Option<usize>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn union(&mut self) -> Result<Regex> {
        let mut parts = vec![self.concat()?];
        while self.peek() == Some(&Tok::Bar) {
            self.pos += 1;
            parts.push(self.concat()?);
        }
        Ok(Regex::union(parts))
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut parts = Vec::new();
        while let Some(tok) = self.peek() {
            if matches!(tok, Tok::Bar | Tok::Close) {
                break;
            }
            parts.push(self.starred()?);
        }
        Ok(Regex::concat(parts))
    }

    fn starred(&mut self) -> Result<Regex> {
        let mut atom = self.atom()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            atom = Regex::star(atom);
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Regex> {
        let tok = self.tokens[self.pos].clone();
        self.pos += 1;
        match tok {
            Tok::Name(n) => (self.resolve)(&n)
                .map(Regex::Table)
                .ok_or(LsysError::UnknownTable(n)),
            Tok::Eps => Ok(Regex::Epsilon),
            Tok::Open => {
                let inner = self.union()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(LsysError::Control("unbalanced parenthesis".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Star => Err(LsysError::Control("`*` without operand".into())),
            Tok::Close | Tok::Bar => unreachable!("handled by concat"),
        }
    }
}

/// Thompson automaton: one start, one accept, epsilon moves.
struct Nfa {
    eps: Vec<Vec<usize>>,
    moves: Vec<Vec<(usize, usize)>>,
}

impl Nfa {
    fn add_state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.moves.push(Vec::new());
        self.eps.len() - 1
    }

    /// Returns (start, accept) of the fragment for `re`.
    fn build(&mut self, re: &Regex) -> (usize, usize) {
        let s = self.add_state();
        let f = self.add_state();
        match re {
            Regex::Nothing => {}
            Regex::Epsilon => self.eps[s].push(f),
            Regex::Table(t) => self.moves[s].push((*t, f)),
            Regex::Concat(parts) => {
                let mut cur = s;
                for p in parts {
                    let (ps, pf) = self.build(p);
                    self.eps[cur].push(ps);
                    cur = pf;
                }
                self.eps[cur].push(f);
            }
            Regex::Union(parts) => {
                for p in parts {
                    let (ps, pf) = self.build(p);
                    self.eps[s].push(ps);
                    self.eps[pf].push(f);
                }
            }
            Regex::Star(inner) => {
                let (is, if_) = self.build(inner);
                self.eps[s].push(is);
                self.eps[s].push(f);
                self.eps[if_].push(is);
                self.eps[if_].push(f);
            }
        }
        (s, f)
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &r in &self.eps[q] {
                if set.insert(r) {
                    stack.push(r);
                }
            }
        }
    }
}

/// Deterministic control automaton with transitions labelled by table indices.
///
/// States from which no accepting state is reachable are removed, so every transition leads
/// somewhere an accepted control word can still be completed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControlAutomaton {
    transitions: Vec<BTreeMap<usize, usize>>,
    accepting: Vec<bool>,
    initial: usize,
}

impl ControlAutomaton {
    pub fn from_regex(re: &Regex) -> Self {
        let mut nfa = Nfa { eps: Vec::new(), moves: Vec::new() };
        let (start, accept) = nfa.build(re);

        let mut init = BTreeSet::from([start]);
        nfa.closure(&mut init);
        let mut ids: HashMap<BTreeSet<usize>, usize> = HashMap::from([(init.clone(), 0)]);
        let mut sets = vec![init];
        let mut transitions: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(d) = queue.pop_front() {
            let mut by_label: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
            for &q in &sets[d] {
                for &(label, r) in &nfa.moves[q] {
                    by_label.entry(label).or_default().insert(r);
                }
            }
            for (label, mut target) in by_label {
                nfa.closure(&mut target);
                let next = *ids.entry(target.clone()).or_insert_with(|| {
                    sets.push(target);
                    transitions.push(BTreeMap::new());
                    queue.push_back(sets.len() - 1);
                    sets.len() - 1
                });
                transitions[d].insert(label, next);
            }
        }
        let accepting: Vec<bool> = sets.iter().map(|s| s.contains(&accept)).collect();
        ControlAutomaton { transitions, accepting, initial: 0 }.trimmed()
    }

    /// Drops states that cannot reach acceptance and renumbers the rest.
    fn trimmed(self) -> Self {
        let n = self.transitions.len();
        let mut live = self.accepting.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for q in 0..n {
                if !live[q] && self.transitions[q].values().any(|&r| live[r]) {
                    live[q] = true;
                    changed = true;
                }
            }
        }
        let mut renumber = vec![usize::MAX; n];
        let mut next = 0;
        for q in 0..n {
            if live[q] || q == self.initial {
                renumber[q] = next;
                next += 1;
            }
        }
        let mut transitions = vec![BTreeMap::new(); next];
        let mut accepting = vec![false; next];
        for q in 0..n {
            if renumber[q] == usize::MAX {
                continue;
            }
            accepting[renumber[q]] = self.accepting[q];
            for (&label, &r) in &self.transitions[q] {
                if live[r] {
                    transitions[renumber[q]].insert(label, renumber[r]);
                }
            }
        }
        ControlAutomaton { transitions, accepting, initial: renumber[self.initial] }
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    /// Outgoing `(table, next state)` pairs in table order.
    pub fn transitions(&self, state: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.transitions[state].iter().map(|(&t, &q)| (t, q))
    }

    pub fn next(&self, state: usize, table: usize) -> Option<usize> {
        self.transitions[state].get(&table).copied()
    }

    pub fn run(&self, tables: &[usize]) -> Option<usize> {
        tables.iter().try_fold(self.initial, |q, &t| self.next(q, t))
    }

    pub fn accepts(&self, tables: &[usize]) -> bool {
        self.run(tables).is_some_and(|q| self.accepting[q])
    }

    pub fn is_empty_language(&self) -> bool {
        !self.accepting[self.initial] && self.transitions[self.initial].is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: &str) -> Option<usize> {
        ["s", "p", "h_L", "h_R", "u", "t"].iter().position(|x| *x == n)
    }

    fn auto(src: &str) -> ControlAutomaton {
        ControlAutomaton::from_regex(&Regex::parse(src, names).unwrap())
    }

    #[test]
    fn star_and_concat() {
        let a = auto("s* t");
        assert!(a.accepts(&[5]));
        assert!(a.accepts(&[0, 0, 0, 5]));
        assert!(!a.accepts(&[0]));
        assert!(!a.accepts(&[5, 0]));
        assert!(!a.accepts(&[]));
    }

    #[test]
    fn nested_control_of_coword_grammar() {
        let a = auto("s* (p* (h_L | h_R) u* t)*");
        assert!(a.accepts(&[]));
        assert!(a.accepts(&[0, 0]));
        assert!(a.accepts(&[0, 0, 2, 5]));
        assert!(a.accepts(&[0, 0, 2, 5, 1, 1, 3, 4, 4, 4, 5]));
        assert!(!a.accepts(&[0, 0, 2]));
        assert!(!a.accepts(&[0, 2, 0, 5]));
        assert!(!a.accepts(&[1, 5]));
    }

    #[test]
    fn empty_expression_is_nothing() {
        let re = Regex::parse("  ", names).unwrap();
        assert_eq!(re, Regex::Nothing);
        let a = ControlAutomaton::from_regex(&re);
        assert!(a.is_empty_language());
        assert!(!a.accepts(&[]));
    }

    #[test]
    fn epsilon_and_grouping() {
        let a = auto("~ | (s t)*");
        assert!(a.accepts(&[]));
        assert!(a.accepts(&[0, 5, 0, 5]));
        assert!(!a.accepts(&[0, 5, 0]));
    }

    #[test]
    fn unknown_table_and_syntax_errors() {
        assert_eq!(
            Regex::parse("s x", names).unwrap_err(),
            LsysError::UnknownTable("x".into())
        );
        assert!(Regex::parse("(s t", names).is_err());
        assert!(Regex::parse("* s", names).is_err());
        assert!(Regex::parse("s )", names).is_err());
    }

    #[test]
    fn dead_states_are_trimmed() {
        let re = Regex::concat(vec![Regex::Table(0), Regex::Nothing]);
        let a = ControlAutomaton::from_regex(&re);
        assert!(a.is_empty_language());
    }

    #[test]
    fn render_round_trips() {
        let name = |i: usize| ["s", "p", "h_L", "h_R", "u", "t"][i].to_string();
        for src in ["s* (p* (h_L | h_R) u* t)*", "~ | s t", "(s | t)* s", "s**"] {
            let re = Regex::parse(src, names).unwrap();
            let again = Regex::parse(&re.render(&name), names).unwrap();
            assert_eq!(re, again, "{src}");
        }
    }
}
