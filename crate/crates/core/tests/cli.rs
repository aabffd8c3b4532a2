use std::process::Command;

use grouplang::catalog::BUILTINS;
use grouplang::cli::{run, CommandResult, EXIT_NO, EXIT_UNKNOWN, EXIT_USAGE, EXIT_YES};
use grouplang::growth::partition_counts;
use grouplang::lsystem::parse_grammar;

fn go(args: &[&str]) -> CommandResult {
    let mut v = vec!["grouplang"];
    v.extend_from_slice(args);
    run(v, &|_| None)
}

fn lines(r: &CommandResult) -> Vec<&str> {
    r.output.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn enumerate_builtins() {
    let r = go(&["enumerate", "--builtin", "intermediate-growth", "--max-len", "3"]);
    assert_eq!(r.code, EXIT_YES);
    assert_eq!(lines(&r), ["a", "aa", "ab", "aaa", "aab", "abb"]);
    let r = go(&["enumerate", "--builtin", "intermediate-growth", "--max-len", "0"]);
    assert_eq!((r.code, lines(&r).len()), (EXIT_YES, 0));
    let r = go(&["enumerate", "--builtin", "kappa", "--max-len", "5"]);
    assert!(lines(&r).contains(&"hvhhv"));
    let r = go(&["enumerate", "--builtin", "doubling", "--max-len", "48", "--max-control", "2"]);
    assert_eq!(r.code, EXIT_UNKNOWN);
    assert!(r.output.contains("NOT exhaustive"));
}

#[test]
fn member_verdicts() {
    let r = go(&["member", "--builtin", "grigorchuk-coword", "a"]);
    assert_eq!(r.code, EXIT_YES);
    assert!(r.output.contains("tables: s s\n"));
    let r = go(&["member", "--builtin", "grigorchuk-coword", "dadadada", "--grig-oracle"]);
    assert_eq!(r.code, EXIT_NO);
    let r = go(&["member", "--builtin", "grigorchuk-coword", "dadadada", "--max-visited", "2000"]);
    assert!(r.code == EXIT_NO || r.code == EXIT_UNKNOWN);
    let r = go(&["member", "--builtin", "grigorchuk-coword", "bcddacbabcaa", "--grig-oracle"]);
    assert_eq!(r.code, EXIT_YES);
    let r = go(&["member", "--builtin", "kappa", "vv"]);
    assert_eq!(r.code, EXIT_YES);
    let r = go(&["member", "--builtin", "kappa", "hh"]);
    assert_eq!(r.code, EXIT_NO);
    assert_eq!(go(&["member", "--builtin", "kappa", "x"]).code, EXIT_USAGE);
    assert_eq!(go(&["member", "--builtin", "kappa", "vv", "--grig-oracle"]).code, EXIT_USAGE);
}

#[test]
fn grig_commands() {
    assert_eq!(go(&["grig", "wp", "bcddacbabcaa"]), CommandResult { code: EXIT_NO, output: "NONTRIVIAL\n".into() });
    assert_eq!(go(&["grig", "wp", ""]).output, "TRIVIAL\n");
    assert_eq!(go(&["grig", "wp", "dadadada"]).code, EXIT_YES);
    let r = go(&["grig", "witness", "b"]);
    assert_eq!(r.code, EXIT_YES);
    assert!(r.output.contains("tables: s s h_L t\n"));
    assert_eq!(go(&["grig", "witness", "bcd"]).code, EXIT_NO);
    assert_eq!(go(&["grig", "wp", "abe"]).code, EXIT_USAGE);
}

#[test]
fn free_commands() {
    assert_eq!(go(&["free", "primitive", "-k", "2", "a"]).code, EXIT_YES);
    assert_eq!(go(&["free", "primitive", "-k", "2", "abAB"]).code, EXIT_NO);
    assert_eq!(go(&["free", "basis2", "a", "ba"]).code, EXIT_YES);
    assert_eq!(go(&["free", "basis2", "a", "A"]).code, EXIT_NO);
    let r = go(&["free", "primitive", "-k", "2", "a#b#ab"]);
    assert_eq!(r.code, EXIT_NO);
    assert!(r.output.contains("cannot extend"));
    let r = go(&["free", "primitive", "-k", "2", "abBab"]);
    assert!(r.output.starts_with("warning"));
    let r = go(&["free", "primitive", "-k", "3", "abc#b", "--trace"]);
    assert_eq!(r.code, EXIT_YES);
    assert!(r.output.contains("pinch"));
    assert_eq!(go(&["free", "primitive", "-k", "2", "abc"]).code, EXIT_USAGE);
    assert_eq!(go(&["free", "primitive", "-k", "2", "a#1"]).code, EXIT_USAGE);
}

#[test]
fn growth_csv() {
    let r = go(&["growth", "--builtin", "intermediate-growth", "--max-len", "10"]);
    let p = partition_counts(10);
    let mut expected = String::from("n,count\n0,0\n");
    for n in 1..=10 {
        expected.push_str(&format!("{n},{}\n", p[n]));
    }
    assert_eq!(r.output, expected);
    assert_eq!(go(&["growth", "--builtin", "intermediate-growth", "--max-len", "0"]).output, "n,count\n0,0\n");
    let r = go(&["growth", "--builtin", "kappa", "--max-len", "6"]);
    assert_eq!(r.output, "n,count\n0,0\n1,1\n2,2\n3,3\n4,4\n5,5\n6,6\n");
    let r = go(&["growth", "--builtin", "doubling", "--max-len", "48", "--max-control", "2"]);
    assert_eq!(r.code, EXIT_UNKNOWN);
    assert!(!r.output.contains("n,count"));
}

#[test]
fn dumped_grammars_round_trip() {
    for (name, make) in BUILTINS {
        let r = go(&["enumerate", "--builtin", name, "--max-len", "1", "--dump-grammar"]);
        assert_eq!(r.code, EXIT_YES);
        let back = parse_grammar(&r.output).unwrap();
        assert!(back.structurally_eq(&make()), "{name}");
    }
}

#[test]
fn grammar_files() {
    let dir = std::env::temp_dir().join(format!("grouplang-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.g");
    std::fs::write(&good, "alphabet: a\nterminals: a\naxiom: a\ntable t:\n  a -> a a\ncontrol: t*\n").unwrap();
    let r = go(&["enumerate", "--file", good.to_str().unwrap(), "--max-len", "8"]);
    assert_eq!(lines(&r), ["a", "aa", "aaaa", "aaaaaaaa"]);
    let bad = dir.join("bad.g");
    std::fs::write(&bad, "alphabet: a\nterminals: a\naxiom: a\ntable t:\n  a => a\n").unwrap();
    let r = go(&["enumerate", "--file", bad.to_str().unwrap(), "--max-len", "3"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.output.contains("line 5"), "{}", r.output);
    assert_eq!(go(&["enumerate", "--file", "/nonexistent/x.g", "--max-len", "3"]).code, EXIT_USAGE);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_grouplang");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code().unwrap();
    assert_eq!(code(&["kappa", "2", "3"]), 0);
    assert_eq!(code(&["grig", "wp", "bcddacbabcaa"]), 1);
    assert_eq!(code(&["kappa", "0", "0"]), 64);
    let out = Command::new(bin)
        .args(["enumerate", "--builtin", "doubling", "--max-len", "48"])
        .env("GROUPLANG_MAX_CONTROL", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).args(["kappa", "2", "3"]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "hvhhv\n");
}
