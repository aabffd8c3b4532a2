//! Recognizing primitive sets by folds and pinches, against classical oracles.

use grouplang::stallings::{
    abelianization_minor_gcd, is_basis_f2, parse_word_set, whitehead_primitive, PinchOptions, PrimitiveSearch,
    SegmentGraph,
};

fn main() {
    let mut g = SegmentGraph::bouquet(&parse_word_set("abA#bab").unwrap()).unwrap();
    println!("bouquet    {g}");
    let r = g.normalize();
    println!("normalized {g}  (folds I/II/III = {:?}, pruned {}, merged {})", r.folds, r.pruned, r.merged);

    let mut search = PrimitiveSearch::new(PinchOptions::default(), true);
    for (set, k) in [("aab", 2), ("abAB", 2), ("abc#bc", 3), ("aabb#ab", 2), ("abcbc", 3)] {
        let words = parse_word_set(set).unwrap();
        let yes = search.run(&words, k).unwrap();
        let gcd = abelianization_minor_gcd(&words, k as usize);
        print!("{set:>8} in F_{k}: {}  (minor gcd {gcd}", if yes { "primitive" } else { "not primitive" });
        if words.len() == 1 {
            print!(", Whitehead {}", whitehead_primitive(&words[0], k).unwrap());
        }
        if words.len() == 2 && k == 2 {
            print!(", commutator test {}", is_basis_f2(&words[0], &words[1]));
        }
        println!(")");
        if let Some(t) = search.last_trace() {
            for (mv, g) in &t.steps {
                println!("           {mv:?} -> {g}");
            }
        }
    }
    println!("search stats: {:?}", search.stats);
}
