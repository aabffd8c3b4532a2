//! Parallel rewriting under rational control: the doubling system {a³ᐧ²ⁱ}.

use grouplang::catalog::doubling_system;
use grouplang::lsystem::{Membership, SearchCaps};

fn main() {
    let sys = doubling_system();
    let found = sys.enumerate(100, SearchCaps::default());
    for w in &found.words {
        println!("{:>3}  {}", w.len(), sys.format_word(w));
    }
    println!("exhaustive: {}", found.exhaustive);

    let target = sys.parse_terminal_word(&"a".repeat(24)).unwrap();
    match sys.member(&target, SearchCaps::default()).unwrap() {
        Membership::Yes(witness) => {
            println!("a^24 is generated by [{}]", witness.table_names().join(" "));
            assert!(witness.verify(&sys));
        }
        other => println!("a^24: {other:?}"),
    }
    let miss = sys.parse_terminal_word(&"a".repeat(9)).unwrap();
    println!("a^9: {:?}", sys.member(&miss, SearchCaps::default()).unwrap());
}
