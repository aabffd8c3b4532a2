use grouplang::catalog::grigorchuk_coword_system;
use grouplang::grigorchuk::*;
use proptest::prelude::*;

fn g(s: &str) -> GrigWord {
    s.parse().unwrap()
}

fn arb_word(max: usize) -> impl Strategy<Value = GrigWord> {
    proptest::collection::vec(0usize..4, 0..=max).prop_map(|v| GrigWord::new(v.into_iter().map(|i| Letter::ALL[i]).collect()))
}

#[test]
fn reduce_examples() {
    assert_eq!(reduce(&g("bc")).to_string(), "d");
    assert_eq!(reduce(&g("")).to_string(), "");
    assert_eq!(reduce(&g("abbab")).to_string(), "b");
}

#[test]
fn reduction_preserves_the_element() {
    for len in 0..=6 {
        for w in GrigWord::all_of_length(len) {
            let r = reduce(&w);
            for d in 1..=8 {
                assert_eq!(TreeAction::of_word(&w, d), TreeAction::of_word(r.as_word(), d), "{w} at depth {d}");
            }
        }
    }
}

#[test]
fn word_problem_matches_tree_action_up_to_length_7() {
    for len in 0..=7 {
        for w in GrigWord::all_of_length(len) {
            let depth = len as u32 + 2;
            assert_eq!(is_trivial(&w), TreeAction::of_word(&w, depth).is_identity(), "{w}");
        }
    }
}

#[test]
fn phi_matches_wreath_sections() {
    for len in 0..=8 {
        for w in GrigWord::all_of_length(len) {
            let r = reduce(&w);
            if !r.as_word().in_g1() {
                continue;
            }
            let (l, rt) = phi(&r).unwrap();
            let (gl, gr, swap) = TreeAction::of_word(&w, 9).wreath();
            assert!(!swap);
            assert_eq!(TreeAction::of_word(&l, 8), gl, "{w}");
            assert_eq!(TreeAction::of_word(&rt, 8), gr, "{w}");
        }
    }
}

#[test]
fn dadadada_at_depth_10() {
    assert!(TreeAction::of_word(&g("dadadada"), 10).is_identity());
}

#[test]
fn witnesses_for_all_nontrivial_words_up_to_5() {
    let sys = grigorchuk_coword_system();
    for len in 0..=5 {
        for w in GrigWord::all_of_length(len) {
            match derive_witness_in(&sys, &w) {
                Ok(wit) => {
                    assert_eq!(wit.check(&sys), Ok(()), "{w}");
                    assert_eq!(sys.format_word(wit.final_word()), w.to_string());
                }
                Err(GrigError::Trivial) => assert!(is_trivial(&w)),
                Err(e) => panic!("{w}: {e}"),
            }
        }
    }
}

#[test]
fn witness_serialization_round_trips() {
    let sys = grigorchuk_coword_system();
    let wit = derive_witness(&g("bcddacbabcaa")).unwrap();
    let text = wit.serialize(&sys);
    let back = grouplang::lsystem::DerivationWitness::deserialize(&text, &sys).unwrap();
    assert_eq!(back, wit);
    assert!(back.verify(&sys));
}

proptest! {
    #[test]
    fn reduce_is_idempotent_and_reduced(w in arb_word(30)) {
        let r = reduce(&w);
        prop_assert!(is_reduced(r.letters()));
        prop_assert_eq!(reduce(r.as_word()), r.clone());
        prop_assert_eq!(r.as_word().a_count() % 2, w.a_count() % 2);
    }

    #[test]
    fn phi_is_multiplicative(u in arb_word(12), v in arb_word(12)) {
        let (ru, rv) = (reduce(&u), reduce(&v));
        prop_assume!(ru.as_word().in_g1() && rv.as_word().in_g1());
        let uv = reduce(&u.concat(&v));
        for side in [Side::Left, Side::Right] {
            let whole = phi_side(&uv, side).unwrap();
            let parts = phi_side(&ru, side).unwrap().concat(&phi_side(&rv, side).unwrap());
            prop_assert_eq!(TreeAction::of_word(&whole, 10), TreeAction::of_word(&parts, 10));
        }
    }

    #[test]
    fn long_words_get_witnesses(w in arb_word(14)) {
        let sys = grigorchuk_coword_system();
        if !is_trivial(&w) {
            let wit = derive_witness_in(&sys, &w).unwrap();
            prop_assert!(wit.verify(&sys));
            prop_assert_eq!(sys.format_word(wit.final_word()), w.to_string());
        }
    }
}
