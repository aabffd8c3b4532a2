//! Line-oriented grammar files.
//!
//! ```text
//! alphabet: a b q q'
//! terminals: a b
//! axiom: q
//! table h_a:
//!   q -> q a q'
//! table h_$:
//!   q -> ~
//!   q' -> ~
//! control: (h_a | h_b)* h_a h_$
//! ```
//!
//! Repeated rule lines under one table add nondeterministic alternatives; `|` on the right of
//! `->` does the same on one line. Lines starting with `//` are comments.

use super::error::{LsysError, Result};
use super::system::{LSystem, LSystemBuilder};

fn err(line: usize, column: usize, message: impl Into<String>) -> LsysError {
    LsysError::Parse { line, column, message: message.into() }
}

pub fn parse_grammar(text: &str) -> Result<LSystem> {
    let mut builder = LSystemBuilder::default();
    let mut tables: Vec<(String, Vec<(String, String)>)> = Vec::new();
    let mut in_table = false;
    let mut control = None;
    let mut saw_alphabet = false;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with("//") {
            continue;
        }
        let indent = raw.len() - raw.trim_start().len();
        let indented = indent > 0;
        if indented && in_table {
            let Some((lhs, rhs)) = trimmed.split_once("->") else {
                return Err(err(line_no, indent + 1, "expected `symbol -> replacement`"));
            };
            let lhs = lhs.trim();
            if lhs.is_empty() || lhs.split_whitespace().count() != 1 {
                return Err(err(line_no, indent + 1, "left side must be exactly one symbol"));
            }
            let table = tables.last_mut().expect("in_table implies a table");
            for alt in rhs.split('|') {
                let alt = alt.trim();
                if alt.is_empty() {
                    let col = raw.find("->").map_or(1, |c| c + 3);
                    return Err(err(line_no, col, "empty replacement (write `~`)"));
                }
                table.1.push((lhs.to_string(), alt.to_string()));
            }
            continue;
        }
        in_table = false;
        if let Some(rest) = trimmed.strip_prefix("table ") {
            let Some(name) = rest.trim().strip_suffix(':') else {
                return Err(err(line_no, raw.len(), "table header must end with `:`"));
            };
            let name = name.trim();
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(err(line_no, indent + 7, "invalid table name"));
            }
            tables.push((name.to_string(), Vec::new()));
            in_table = true;
            continue;
        }
        let Some((key, value)) = trimmed.split_once(':') else {
            return Err(err(line_no, indent + 1, format!("unrecognised line {trimmed:?}")));
        };
        match key.trim() {
            "alphabet" => {
                saw_alphabet = true;
                builder = builder.alphabet(value.split_whitespace());
            }
            "terminals" => builder = builder.terminals(value.split_whitespace()),
            "axiom" => builder = builder.axiom(value.trim()),
            "control" => {
                if control.is_some() {
                    return Err(err(line_no, indent + 1, "duplicate control line"));
                }
                control = Some(value.trim().to_string());
            }
            other => {
                return Err(err(line_no, indent + 1, format!("unknown directive {other:?}")));
            }
        }
    }
    if !saw_alphabet {
        return Err(err(1, 1, "missing `alphabet:` line"));
    }
    let Some(control) = control else {
        return Err(err(text.lines().count().max(1), 1, "missing `control:` line"));
    };
    for (name, rules) in tables {
        builder = builder.table_owned(name, rules);
    }
    builder.control(control).build()
}

pub fn print_grammar(sys: &LSystem) -> String {
    let al = sys.alphabet();
    let mut out = String::new();
    out.push_str(&format!("alphabet: {}\n", al.tokens().join(" ")));
    let terminals: Vec<&str> = sys.terminals().map(|t| al.token(t)).collect();
    out.push_str(&format!("terminals: {}\n", terminals.join(" ")));
    for a in sys.axioms() {
        out.push_str(&format!("axiom: {}\n", al.format_word_spaced(a)));
    }
    for t in sys.tables() {
        out.push_str(&format!("table {}:\n", t.name()));
        for x in al.ids() {
            for rhs in t.explicit_rules(x) {
                out.push_str(&format!("  {} -> {}\n", al.token(x), al.format_word_spaced(rhs)));
            }
        }
    }
    out.push_str(&format!("control: {}\n", sys.control_source()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const GROWTH: &str = "\
alphabet: a b q q'
terminals: a b
axiom: q
// comment
table h_a:
  q -> q a q'
table h_b:
  q -> q b
  q' -> q' b
table h_$:
  q -> ~ | ~
  q' -> ~
control: (h_a | h_b)* h_a h_$
";

    #[test]
    fn parses_and_round_trips() {
        let sys = parse_grammar(GROWTH).unwrap();
        assert_eq!(sys.tables().len(), 3);
        assert!(sys.is_deterministic());
        let again = parse_grammar(&print_grammar(&sys)).unwrap();
        assert!(sys.structurally_eq(&again));
    }

    #[test]
    fn duplicate_rule_lines_accumulate() {
        let text = "alphabet: a b\nterminals: a b\naxiom: a\ntable t:\n  a -> b\n  a -> ~\ncontrol: t\n";
        let sys = parse_grammar(text).unwrap();
        assert!(!sys.tables()[0].is_deterministic());
        assert_eq!(sys.tables()[0].rule_count(), 2);
    }

    #[test]
    fn empty_table_parses() {
        let text = "alphabet: a\nterminals: a\naxiom: a\ntable id:\ncontrol: id*\n";
        let sys = parse_grammar(text).unwrap();
        assert_eq!(sys.tables()[0].rule_count(), 0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad_rule = "alphabet: a\nterminals: a\naxiom: a\ntable t:\n  a b\ncontrol: t\n";
        assert!(matches!(parse_grammar(bad_rule), Err(LsysError::Parse { line: 5, .. })));
        let bad_key = "alphabet: a\nfoo: a\n";
        assert!(matches!(parse_grammar(bad_key), Err(LsysError::Parse { line: 2, .. })));
        let no_control = "alphabet: a\nterminals: a\naxiom: a\n";
        assert!(matches!(parse_grammar(no_control), Err(LsysError::Parse { .. })));
        let unknown = "alphabet: a\nterminals: a\naxiom: b\ncontrol: ~\n";
        assert_eq!(parse_grammar(unknown).unwrap_err(), LsysError::UnknownSymbol("b".into()));
    }
}
