use grouplang::stallings::*;
use proptest::prelude::*;

fn w(s: &str) -> FreeWord {
    s.parse().unwrap()
}

fn single_word_agreement(k: u32, max_len: usize) -> (usize, Vec<String>, SearchStats) {
    let mut disagreements = Vec::new();
    let mut checked = 0;
    let mut search = PrimitiveSearch::new(PinchOptions::default(), true);
    for len in 1..=max_len {
        for word in FreeWord::all_reduced(k, len) {
            checked += 1;
            let ours = search.run(&[word.clone()], k).unwrap();
            if ours != whitehead_primitive(&word, k).unwrap() {
                disagreements.push(word.to_string());
            }
            if ours {
                assert_eq!(abelianization_minor_gcd(&[word.clone()], k as usize), 1, "{word}");
            }
        }
    }
    (checked, disagreements, search.stats)
}

#[test]
fn single_words_in_f2_agree_with_whitehead() {
    let (checked, bad, stats) = single_word_agreement(2, 6);
    assert_eq!(checked, (1..=6).map(|n| 4 * 3usize.pow(n - 1)).sum::<usize>());
    assert!(bad.is_empty(), "{bad:?}");
    assert!(stats.invariants_hold(), "{stats:?}");
}

#[test]
fn single_words_in_f3_agree_with_whitehead() {
    let (_, bad, stats) = single_word_agreement(3, 5);
    assert!(bad.is_empty(), "{bad:?}");
    assert!(stats.invariants_hold(), "{stats:?}");
}

#[test]
fn pairs_in_f2_agree_with_commutator_test() {
    let words: Vec<FreeWord> = (1..=4).flat_map(|n| FreeWord::all_reduced(2, n)).collect();
    let mut search = PrimitiveSearch::new(PinchOptions::default(), true);
    let mut bad = Vec::new();
    let mut yes = 0;
    for g in &words {
        for h in &words {
            let ours = search.run(&[g.clone(), h.clone()], 2).unwrap();
            if ours != is_basis_f2(g, h) {
                bad.push(format!("{g}#{h}"));
            }
            if ours {
                yes += 1;
                assert_eq!(abelianization_minor_gcd(&[g.clone(), h.clone()], 2), 1);
            }
        }
    }
    assert!(bad.is_empty(), "{bad:?}");
    assert!(yes > 0);
    assert!(search.stats.invariants_hold());
}

#[test]
fn conjugates_of_generators_are_primitive() {
    for s in ["abA", "baB", "abcBA", "AbCba"] {
        assert!(is_primitive_set(&[w(s)], 3).unwrap(), "{s}");
    }
}

#[test]
fn pairs_in_f3() {
    assert!(is_primitive_set(&parse_word_set("ab#c").unwrap(), 3).unwrap());
    assert!(is_primitive_set(&parse_word_set("abc#bc").unwrap(), 3).unwrap());
    assert!(!is_primitive_set(&parse_word_set("aa#b").unwrap(), 3).unwrap());
    assert!(!is_primitive_set(&parse_word_set("ab#aB").unwrap(), 3).unwrap());
}

fn arb_word(k: i32, max: usize) -> impl Strategy<Value = FreeWord> {
    proptest::collection::vec((1..=k, any::<bool>()), 1..=max)
        .prop_map(|v| FreeWord::new(v.into_iter().map(|(i, s)| if s { i } else { -i }).collect()).reduced())
        .prop_filter("nonempty", |w| !w.is_empty())
}

proptest! {
    #[test]
    fn normalize_gives_folded_topological_graphs(ws in proptest::collection::vec(arb_word(3, 8), 1..4)) {
        let mut g = SegmentGraph::bouquet(&ws).unwrap();
        let letters = g.letter_count();
        let rank = g.rank();
        g.normalize();
        prop_assert!(g.is_folded() && g.is_topological() && g.is_connected());
        prop_assert!(g.letter_count() <= letters);
        prop_assert!(g.rank() <= rank);
        let r = g.rank();
        if r > 1 {
            prop_assert!(g.edge_count() as i64 <= 3 * r - 3 && g.vertex_count() as i64 <= 2 * r - 2);
        }
    }

    #[test]
    fn primitivity_is_conjugation_invariant(word in arb_word(2, 6), c in arb_word(2, 3)) {
        let conj = c.concat(&word).concat(&c.inverse());
        prop_assume!(!conj.is_empty());
        prop_assert_eq!(is_primitive_set(&[word.clone()], 2).unwrap(), is_primitive_set(&[conj], 2).unwrap());
    }

    #[test]
    fn pinches_keep_letters_and_add_rank(ws in proptest::collection::vec(arb_word(2, 6), 1..3), pick in any::<prop::sample::Index>()) {
        let mut g = SegmentGraph::bouquet(&ws).unwrap();
        g.normalize();
        let moves = g.enumerate_pinches(PinchOptions::default());
        prop_assume!(!moves.is_empty());
        let mv = moves[pick.index(moves.len())];
        let mut h = g.clone();
        h.apply_pinch(mv).unwrap();
        prop_assert_eq!(h.letter_count(), g.letter_count());
        prop_assert_eq!(h.rank(), g.rank() + 1);
        let before = h.rank();
        h.normalize();
        prop_assert!(h.rank() <= before);
    }
}
