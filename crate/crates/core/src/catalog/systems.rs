use std::collections::BTreeSet;

use super::CatalogError;
use crate::lsystem::{self, validate_token, LSystem};

/// Builtin names and their constructors.
pub const BUILTINS: &[(&str, fn() -> LSystem)] = &[
    ("intermediate-growth", intermediate_growth_system),
    ("kappa", crossing_sequence_system),
    ("grigorchuk-coword", grigorchuk_coword_system),
    ("z2-semidirect", z2_default),
    ("doubling", doubling_system),
];

fn z2_default() -> LSystem {
    z2_semidirect_combing_system("t", "T").expect("default tokens are fresh")
}

/// `{a^(3·2^i) : i >= 0}`: one doubling table iterated from `aaa`.
pub fn doubling_system() -> LSystem {
    LSystem::builder()
        .alphabet(["a"])
        .terminals(["a"])
        .axiom("a a a")
        .table("t", &[("a", "a a")])
        .control("t*")
        .build()
        .expect("well-formed")
}

/// EDT0L system for `A = { a b^i₁ a b^i₂ … a b^i_k : 0 <= i₁ <= … <= i_k, k >= 1 }`.
pub fn intermediate_growth_system() -> LSystem {
    LSystem::builder()
        .alphabet(["a", "b", "q", "q'"])
        .terminals(["a", "b"])
        .axiom("q")
        .table("h_a", &[("q", "q a q'")])
        .table("h_b", &[("q", "q b"), ("q'", "q' b")])
        .table("h_$", &[("q", "~"), ("q'", "~")])
        .control("(h_a | h_b)* h_a h_$")
        .build()
        .expect("well-formed")
}

/// Direct membership test for the language of [`intermediate_growth_system`].
pub fn a_language_contains(word: &str) -> bool {
    if !word.starts_with('a') || !word.bytes().all(|b| b == b'a' || b == b'b') {
        return false;
    }
    let runs = word[1..].split('a').map(str::len);
    let mut prev = 0;
    for r in runs {
        if r < prev {
            return false;
        }
        prev = r;
    }
    true
}

/// Every word of `A` with length at most `max_len`, built from nondecreasing exponents.
pub fn a_language_words(max_len: usize) -> BTreeSet<String> {
    fn extend(prefix: &mut String, min_exp: usize, max_len: usize, out: &mut BTreeSet<String>) {
        for e in min_exp.. {
            if prefix.len() + 1 + e > max_len {
                break;
            }
            let mark = prefix.len();
            prefix.push('a');
            prefix.extend(std::iter::repeat('b').take(e));
            out.insert(prefix.clone());
            extend(prefix, e, max_len, out);
            prefix.truncate(mark);
        }
    }
    let mut out = BTreeSet::new();
    extend(&mut String::new(), 0, max_len, &mut out);
    out
}

/// EDT0L system for first-quadrant crossing sequences: `q` grows to `v^k`, then
/// `v ↦ hv` and `h ↦ vh` are applied in any order.
pub fn crossing_sequence_system() -> LSystem {
    LSystem::builder()
        .alphabet(["q", "v", "h"])
        .terminals(["v", "h"])
        .axiom("q")
        .table("phi_q", &[("q", "q v")])
        .table("phi_s", &[("q", "v")])
        .table("phi_v", &[("v", "h v")])
        .table("phi_h", &[("h", "v h")])
        .control("phi_q* phi_s (phi_v | phi_h)*")
        .build()
        .expect("well-formed")
}

/// `{token^j : j >= 0}`.
pub fn star_system(token: &str) -> Result<LSystem, CatalogError> {
    validate_token(token)?;
    let start = if token == "S" { "S0" } else { "S" };
    let body = format!("{token} {start}");
    Ok(LSystem::builder()
        .alphabet([start, token])
        .terminals([token])
        .axiom(start)
        .table("grow", &[(start, body.as_str())])
        .table("stop", &[(start, "~")])
        .control("grow* stop")
        .build()?)
}

/// A system whose language is exactly `words`, each written as space-separated tokens.
/// An empty list gives the empty language.
pub fn finite_language_system(words: &[&str]) -> Result<LSystem, CatalogError> {
    let mut tokens: Vec<String> = Vec::new();
    for w in words {
        for t in w.split_whitespace().filter(|t| *t != "~") {
            if !tokens.iter().any(|x| x == t) {
                tokens.push(t.to_string());
            }
        }
    }
    let mut b = LSystem::builder().alphabet(tokens.clone()).terminals(tokens);
    if words.is_empty() {
        b = b.axiom("~").control("");
    } else {
        for w in words {
            b = b.axiom(*w);
        }
        b = b.control("~");
    }
    Ok(b.build()?)
}

/// `{t^j} ∪ {t_inv^j}` followed by a crossing sequence.
pub fn z2_semidirect_combing_system(t: &str, t_inv: &str) -> Result<LSystem, CatalogError> {
    for tok in [t, t_inv] {
        if ["q", "v", "h"].contains(&tok) {
            return Err(CatalogError::TokenClash(tok.to_string()));
        }
    }
    if t == t_inv {
        return Err(CatalogError::TokenClash(t.to_string()));
    }
    let prefixes = lsystem::union(&star_system(t)?, &star_system(t_inv)?)?;
    Ok(lsystem::concat(&prefixes, &crossing_sequence_system())?)
}

/// ET0L system for the words over `{a,b,c,d}` that are nontrivial in the Grigorchuk group.
///
/// Seeds with an odd number of `a` come from `s`; `p` inserts the placeholder `δ`;
/// `h_L`/`h_R` undo one level of the wreath recursion; `u` undoes reductions, marking
/// cancelled material with `#`; `t` erases the marks.
pub fn grigorchuk_coword_system() -> LSystem {
    LSystem::builder()
        .alphabet(["S_0", "S_1", "a", "b", "c", "d", "δ", "#"])
        .terminals(["a", "b", "c", "d"])
        .axiom("S_0")
        .table(
            "s",
            &[
                ("S_0", "a S_1"),
                ("S_0", "b S_0"),
                ("S_0", "c S_0"),
                ("S_0", "d S_0"),
                ("S_1", "a S_0"),
                ("S_1", "b S_1"),
                ("S_1", "c S_1"),
                ("S_1", "d S_1"),
                ("S_1", "~"),
            ],
        )
        .table(
            "p",
            &[
                ("a", "a"),
                ("a", "δ a"),
                ("a", "a δ"),
                ("b", "b"),
                ("b", "δ b"),
                ("b", "b δ"),
                ("c", "c"),
                ("c", "δ c"),
                ("c", "c δ"),
                ("d", "d"),
                ("d", "δ d"),
                ("d", "d δ"),
            ],
        )
        .table(
            "h_L",
            &[
                ("a", "b"),
                ("a", "c"),
                ("b", "a d a"),
                ("c", "a b a"),
                ("d", "a c a"),
                ("δ", "d"),
            ],
        )
        .table(
            "h_R",
            &[
                ("a", "a b a"),
                ("a", "a c a"),
                ("b", "d"),
                ("c", "b"),
                ("d", "c"),
                ("δ", "a d a"),
            ],
        )
        .table(
            "u",
            &[
                ("a", "a"),
                ("a", "# a"),
                ("a", "a #"),
                ("b", "b"),
                ("b", "# b"),
                ("b", "b #"),
                ("b", "c # d"),
                ("b", "d # c"),
                ("c", "c"),
                ("c", "# c"),
                ("c", "c #"),
                ("c", "b # d"),
                ("c", "d # b"),
                ("d", "d"),
                ("d", "# d"),
                ("d", "d #"),
                ("d", "b # c"),
                ("d", "c # b"),
                ("#", "#"),
                ("#", "a # a"),
                ("#", "b # b"),
                ("#", "c # c"),
                ("#", "d # d"),
            ],
        )
        .table("t", &[("#", "~")])
        .control("s* (p* (h_L | h_R) u* t)*")
        .build()
        .expect("well-formed")
}

/// Words `(b a^φ(k))^k` for `k` in `1..=max_k` accepted by `in_u`.
pub fn k_phi_u_words(
    phi: impl Fn(u64) -> u64,
    in_u: impl Fn(u64) -> bool,
    max_k: u64,
) -> Vec<String> {
    (1..=max_k)
        .filter(|&k| in_u(k))
        .map(|k| {
            let block = format!("b{}", "a".repeat(phi(k) as usize));
            block.repeat(k as usize)
        })
        .collect()
}
