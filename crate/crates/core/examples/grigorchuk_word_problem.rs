//! The word problem in Grigorchuk's group, checked against the action on the tree.

use grouplang::grigorchuk::{nontrivial_chain, phi, reduce, is_trivial, GrigWord, TreeAction};

fn main() {
    for s in ["bcddacbabcaa", "dadadada", "abab", "acacacacacacacac"] {
        let w: GrigWord = s.parse().unwrap();
        let r = reduce(&w);
        let tree = TreeAction::of_word(&w, w.len() as u32 + 2).is_identity();
        println!("{s}: reduced {r}, trivial {} (tree says {tree})", is_trivial(&w));
        if r.as_word().in_g1() && !r.is_empty() {
            let (l, rt) = phi(&r).unwrap();
            println!("  phi = ({l}, {rt})");
        }
        if let Some(chain) = nontrivial_chain(&w) {
            let steps: Vec<String> = chain
                .iter()
                .map(|c| format!("{}{}", c.reduced, c.side.map_or(String::new(), |s| format!(" -{s:?}->"))))
                .collect();
            println!("  chain: {}", steps.join(" "));
        }
    }
}
