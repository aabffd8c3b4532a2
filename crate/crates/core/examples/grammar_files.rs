//! Systems written in the grammar file format, combined and sampled.

use rand::SeedableRng;

use grouplang::lsystem::{concat, parse_grammar, print_grammar, random_derivation, union, SearchCaps};

const POWERS: &str = "\
// {a^(2^n) : n >= 0}
alphabet: a
terminals: a
axiom: a
table double:
  a -> a a
control: double*
";

const ANBN: &str = "\
alphabet: S a b
terminals: a b
axiom: S
table grow:
  S -> a S b
table stop:
  S -> ~
control: grow* stop
";

fn show(name: &str, sys: &grouplang::lsystem::LSystem) {
    let found = sys.enumerate(8, SearchCaps::default());
    let words: Vec<String> = found
        .words
        .iter()
        .map(|w| if w.is_empty() { "~".into() } else { sys.format_word(w) })
        .collect();
    println!("{name}: {}{}", words.join(" "), if found.exhaustive { "" } else { " …" });
}

fn main() {
    let anbn = parse_grammar(ANBN).unwrap();
    let powers = parse_grammar(POWERS).unwrap();
    show("a^n b^n", &anbn);
    show("a^(2^n)", &powers);
    let both = union(&anbn, &powers).unwrap();
    show("union", &both);
    let twice = concat(&anbn, &anbn).unwrap();
    show("concat", &twice);
    println!("\n{}", print_grammar(&twice));

    let mut rng = rand::rngs::StdRng::seed_from_u64(1);
    for _ in 0..3 {
        if let Some(w) = random_derivation(&twice, &mut rng, 40, 30) {
            println!("random: {} via [{}]", twice.format_word(w.final_word()), w.table_names().join(" "));
        }
    }
}
