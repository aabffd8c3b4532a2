//! A derivation of a nontrivial word in the co-word grammar, checked by replay.

use grouplang::catalog::grigorchuk_coword_system;
use grouplang::grigorchuk::{derive_witness_in, GrigWord};
use grouplang::lsystem::DerivationWitness;

fn main() {
    let word = std::env::args().nth(1).unwrap_or_else(|| "bcddacbabcaa".into());
    let w: GrigWord = word.parse().expect("a word over a, b, c, d");
    let sys = grigorchuk_coword_system();
    let witness = match derive_witness_in(&sys, &w) {
        Ok(wit) => wit,
        Err(e) => {
            println!("{word}: {e}");
            return;
        }
    };
    let text = witness.serialize(&sys);
    print!("{text}");
    let back = DerivationWitness::deserialize(&text, &sys).unwrap();
    println!("{} steps, verified: {}", back.steps.len(), back.verify(&sys));
}
