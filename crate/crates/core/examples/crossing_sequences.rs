//! Crossing sequences of lattice segments and the combing {t* ∪ T*}L of Z²⋊Z.

use grouplang::catalog::{crossing_sequence_system, kappa, z2_semidirect_combing_system};
use grouplang::lsystem::{Membership, SearchCaps};

fn main() {
    for (m, n) in [(2, 3), (3, 1), (1, 0), (5, 3)] {
        println!("kappa({m},{n}) = {}", kappa(m, n).unwrap());
    }

    let sys = crossing_sequence_system();
    let found = sys.enumerate(4, SearchCaps::default());
    let words: Vec<String> = found.words.iter().map(|w| sys.format_word(w)).collect();
    println!("crossing sequences up to length 4: {}", words.join(" "));

    let l0 = z2_semidirect_combing_system("t", "T").unwrap();
    for w in ["t t v", "v", "t T v", "T T T hv"] {
        let word = l0.parse_terminal_word(w).unwrap();
        let verdict = match l0.member(&word, SearchCaps::default()).unwrap() {
            Membership::Yes(wit) => format!("yes via [{}]", wit.table_names().join(" ")),
            Membership::No => "no".into(),
            Membership::Unknown => "unknown".into(),
        };
        println!("{w:>10}: {verdict}");
    }
}
