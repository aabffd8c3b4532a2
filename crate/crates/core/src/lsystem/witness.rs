use std::fmt;

use super::alphabet::Word;
use super::error::{LsysError, Result};
use super::system::LSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessStep {
    pub table: String,
    pub form: Word,
}

/// A checkable derivation: an axiom and the sentential form after each table application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationWitness {
    pub axiom: Word,
    pub steps: Vec<WitnessStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessRejection {
    NotAnAxiom,
    UnknownTable { step: usize, table: String },
    IllegalStep { step: usize, table: String },
    ControlRejected { tables: Vec<String> },
    NonTerminalResult,
}

impl fmt::Display for WitnessRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessRejection::NotAnAxiom => write!(f, "starting word is not an axiom"),
            WitnessRejection::UnknownTable { step, table } => {
                write!(f, "step {step}: table {table:?} does not exist")
            }
            WitnessRejection::IllegalStep { step, table } => {
                write!(f, "step {step}: form is not obtainable with table {table:?}")
            }
            WitnessRejection::ControlRejected { tables } => {
                write!(f, "control rejects table sequence [{}]", tables.join(" "))
            }
            WitnessRejection::NonTerminalResult => write!(f, "final word is not terminal"),
        }
    }
}

impl DerivationWitness {
    pub fn new(axiom: Word) -> Self {
        DerivationWitness { axiom, steps: Vec::new() }
    }

    pub fn push(&mut self, table: impl Into<String>, form: Word) {
        self.steps.push(WitnessStep { table: table.into(), form });
    }

    pub fn final_word(&self) -> &Word {
        self.steps.last().map_or(&self.axiom, |s| &s.form)
    }

    pub fn table_names(&self) -> Vec<&str> {
        self.steps.iter().map(|s| s.table.as_str()).collect()
    }

    /// Replays the derivation against `system`, reporting the first problem found.
    pub fn check(&self, system: &LSystem) -> std::result::Result<(), WitnessRejection> {
        if !system.axioms().contains(&self.axiom) {
            return Err(WitnessRejection::NotAnAxiom);
        }
        let mut indices = Vec::with_capacity(self.steps.len());
        let mut prev = &self.axiom;
        for (i, step) in self.steps.iter().enumerate() {
            let Some(t) = system.table_index(&step.table) else {
                return Err(WitnessRejection::UnknownTable { step: i, table: step.table.clone() });
            };
            if !system.tables()[t].derives(prev, &step.form) {
                return Err(WitnessRejection::IllegalStep { step: i, table: step.table.clone() });
            }
            indices.push(t);
            prev = &step.form;
        }
        if !system.automaton().accepts(&indices) {
            return Err(WitnessRejection::ControlRejected {
                tables: self.steps.iter().map(|s| s.table.clone()).collect(),
            });
        }
        if !system.is_terminal_word(self.final_word()) {
            return Err(WitnessRejection::NonTerminalResult);
        }
        Ok(())
    }

    pub fn verify(&self, system: &LSystem) -> bool {
        self.check(system).is_ok()
    }

    /// One line per form: `axiom: <form>` followed by `<table>: <form>` for each step.
    pub fn serialize(&self, system: &LSystem) -> String {
        let al = system.alphabet();
        let mut out = format!("axiom: {}\n", al.format_word_spaced(&self.axiom));
        for s in &self.steps {
            out.push_str(&format!("{}: {}\n", s.table, al.format_word_spaced(&s.form)));
        }
        out
    }

    pub fn deserialize(text: &str, system: &LSystem) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let parse_line = |(n, line): (usize, &str)| -> Result<(String, Word)> {
            let (head, body) = line.split_once(':').ok_or_else(|| LsysError::Parse {
                line: n + 1,
                column: 1,
                message: "expected `name: form`".into(),
            })?;
            Ok((head.trim().to_string(), system.parse_word(body)?))
        };
        let (head, axiom) = parse_line(lines.next().ok_or_else(|| LsysError::Parse {
            line: 1,
            column: 1,
            message: "empty witness".into(),
        })?)?;
        if head != "axiom" {
            return Err(LsysError::Parse { line: 1, column: 1, message: "expected `axiom:`".into() });
        }
        let mut w = DerivationWitness::new(axiom);
        for entry in lines {
            let (table, form) = parse_line(entry)?;
            w.push(table, form);
        }
        Ok(w)
    }
}
