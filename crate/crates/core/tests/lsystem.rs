use std::collections::BTreeSet;

use grouplang::catalog::{
    crossing_sequence_system, doubling_system, finite_language_system,
    intermediate_growth_system, star_system,
};
use grouplang::lsystem::{
    concat, parse_grammar, print_grammar, random_derivation, union, LSystem, Membership,
    SearchCaps, WitnessRejection,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn language(sys: &LSystem, n: usize) -> BTreeSet<String> {
    let e = sys.enumerate(n, SearchCaps::default());
    assert!(e.exhaustive);
    e.words.iter().map(|w| sys.format_word(w)).collect()
}

fn set(words: &[&str]) -> BTreeSet<String> {
    words.iter().map(|s| s.to_string()).collect()
}

#[test]
fn doubling_language() {
    let sys = doubling_system();
    assert_eq!(language(&sys, 12), set(&["aaa", "aaaaaa", &"a".repeat(12)]));
    let e = sys.enumerate(48, SearchCaps::default());
    assert!(e.exhaustive);
    let lens: Vec<usize> = e.words.iter().map(Vec::len).collect();
    assert_eq!(lens, vec![3, 6, 12, 24, 48]);
}

#[test]
fn empty_control_gives_empty_exhaustive_language() {
    let sys = LSystem::builder()
        .alphabet(["a"])
        .terminals(["a"])
        .axiom("a")
        .table("t", &[("a", "a a")])
        .control("")
        .build()
        .unwrap();
    let e = sys.enumerate(10, SearchCaps::default());
    assert!(e.words.is_empty());
    assert!(e.exhaustive);
    let a = sys.parse_terminal_word("a").unwrap();
    assert_eq!(sys.member(&a, SearchCaps::default()).unwrap(), Membership::No);
}

#[test]
fn caps_make_search_non_exhaustive() {
    let sys = doubling_system();
    let tight = SearchCaps::new(10, 64, 1000).unwrap();
    let e = sys.enumerate(48, tight);
    assert!(!e.exhaustive);
    assert_eq!(e.words.len(), 2);
    let w = sys.parse_terminal_word(&"a".repeat(24)).unwrap();
    assert_eq!(sys.member(&w, tight).unwrap(), Membership::Unknown);
    let control = SearchCaps::new(64, 2, 1000).unwrap();
    assert!(!sys.enumerate(48, control).exhaustive);
    assert!(SearchCaps::new(0, 1, 1).is_err());
}

#[test]
fn erasing_system_is_exhausted_without_caps() {
    // S -> S # | a, # -> ~: the yield bound, not a cap, keeps this finite
    let sys = LSystem::builder()
        .alphabet(["S", "#", "a"])
        .terminals(["a"])
        .axiom("S")
        .table("grow", &[("S", "S #"), ("#", "# #")])
        .table("end", &[("S", "a"), ("#", "~")])
        .control("grow* end")
        .build()
        .unwrap();
    let caps = SearchCaps::new(8, 100, 10_000).unwrap();
    let e = sys.enumerate(3, caps);
    assert_eq!(e.words.len(), 1);
    assert!(!e.exhaustive, "the # run exceeds the sentential cap");
}

#[test]
fn member_rejects_nonterminal_words() {
    let sys = intermediate_growth_system();
    let q = sys.parse_word("q").unwrap();
    assert!(sys.member(&q, SearchCaps::default()).is_err());
}

#[test]
fn verify_detects_forgery_and_bad_control() {
    let sys = intermediate_growth_system();
    let word = sys.parse_terminal_word("aab").unwrap();
    let Membership::Yes(w) = sys.member(&word, SearchCaps::default()).unwrap() else {
        panic!()
    };
    assert!(w.verify(&sys));

    let mut forged = w.clone();
    forged.steps[0].form = sys.parse_word("q b b").unwrap();
    assert!(matches!(forged.check(&sys), Err(WitnessRejection::IllegalStep { step: 0, .. })));

    let mut truncated = w.clone();
    truncated.steps.pop();
    assert!(!truncated.verify(&sys));

    // h_a h_$ h_$ replays legally (h_$ is the identity on terminals) but control rejects it
    let a = sys.parse_terminal_word("a").unwrap();
    let Membership::Yes(mut short) = sys.member(&a, SearchCaps::default()).unwrap() else {
        panic!()
    };
    short.push("h_$", a.clone());
    assert!(matches!(short.check(&sys), Err(WitnessRejection::ControlRejected { .. })));

    let mut unknown = w.clone();
    unknown.steps[0].table = "nope".into();
    assert!(matches!(unknown.check(&sys), Err(WitnessRejection::UnknownTable { .. })));

    let text = w.serialize(&sys);
    let back = grouplang::lsystem::DerivationWitness::deserialize(&text, &sys).unwrap();
    assert_eq!(back, w);
}

#[test]
fn union_of_singletons() {
    let a = finite_language_system(&["a"]).unwrap();
    let b = finite_language_system(&["b"]).unwrap();
    assert_eq!(language(&union(&a, &b).unwrap(), 5), set(&["a", "b"]));
}

#[test]
fn concat_with_epsilon_is_identity() {
    let eps = finite_language_system(&["~"]).unwrap();
    let l = crossing_sequence_system();
    let c = concat(&eps, &l).unwrap();
    for n in 0..=6 {
        assert_eq!(language(&c, n), language(&l, n));
    }
    let empty = finite_language_system(&[]).unwrap();
    assert!(language(&concat(&empty, &l).unwrap(), 6).is_empty());
    assert_eq!(language(&union(&empty, &l).unwrap(), 6), language(&l, 6));
}

fn set_concat(a: &BTreeSet<String>, b: &BTreeSet<String>, n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for x in a {
        for y in b {
            if x.len() + y.len() <= n {
                out.insert(format!("{x}{y}"));
            }
        }
    }
    out
}

#[test]
fn combinators_match_set_operations() {
    let systems = [
        intermediate_growth_system(),
        crossing_sequence_system(),
        doubling_system(),
        star_system("t").unwrap(),
    ];
    for x in &systems {
        for y in &systems {
            let u = union(x, y).unwrap();
            let c = concat(x, y).unwrap();
            for n in [4, 8] {
                let (lx, ly) = (language(x, n), language(y, n));
                let expected_union: BTreeSet<String> = lx.union(&ly).cloned().collect();
                assert_eq!(language(&u, n), expected_union);
                assert_eq!(language(&c, n), set_concat(&lx, &ly, n));
            }
        }
    }
}

#[test]
fn combined_systems_round_trip_through_text() {
    let c = concat(&star_system("t").unwrap(), &crossing_sequence_system()).unwrap();
    let again = parse_grammar(&print_grammar(&c)).unwrap();
    assert!(c.structurally_eq(&again));
    assert_eq!(language(&again, 6), language(&c, 6));
}

#[test]
fn larger_caps_do_not_change_exhaustive_results() {
    let sys = intermediate_growth_system();
    let small = sys.enumerate(9, SearchCaps::new(40, 40, 100_000).unwrap());
    let big = sys.enumerate(9, SearchCaps::new(200, 200, 1_000_000).unwrap());
    assert!(small.exhaustive && big.exhaustive);
    assert_eq!(small.words, big.words);
}

#[test]
fn random_derivations_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sys = intermediate_growth_system();
    let mut produced = 0;
    for _ in 0..500 {
        if let Some(w) = random_derivation(&sys, &mut rng, 40, 30) {
            assert!(w.verify(&sys));
            let text = sys.format_word(w.final_word());
            assert!(grouplang::catalog::a_language_contains(&text), "{text}");
            produced += 1;
        }
    }
    assert!(produced > 50);
}

proptest! {
    #[test]
    fn deterministic_tables_are_homomorphisms(
        u in proptest::collection::vec(0usize..3, 0..10),
        v in proptest::collection::vec(0usize..3, 0..10),
        table in 0usize..4,
    ) {
        let sys = crossing_sequence_system();
        let to_word = |xs: &[usize]| xs.iter().map(|&i| sys.alphabet().ids().nth(i).unwrap()).collect::<Vec<_>>();
        let (u, v) = (to_word(&u), to_word(&v));
        let name = sys.tables()[table].name().to_string();
        let mut uv = u.clone();
        uv.extend(&v);
        let step = sys.step(&uv, &name).unwrap();
        prop_assert_eq!(step.len(), 1);
        let mut joined = sys.apply_deterministic(&u, &name).unwrap();
        joined.extend(sys.apply_deterministic(&v, &name).unwrap());
        prop_assert_eq!(sys.apply_deterministic(&uv, &name).unwrap(), joined);
    }
}
