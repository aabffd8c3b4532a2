//! The word problem by wreath recursion.
//!
//! An element of the first-level stabilizer `G₁` splits as a pair `(φ_L(g), φ_R(g))` of
//! shorter elements acting on the two subtrees. Words with an odd number of `a` swap the
//! subtrees and are never trivial.

use super::word::{reduce, GrigWord, Letter, ReducedGrigWord};
use super::GrigError;

/// A factor of a reduced `G₁` word: a single `b`, `c`, `d`, or a conjugate `axa`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Syllable {
    Plain(Letter),
    Conjugate(Letter),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Syllable {
    pub fn letters(self) -> Vec<Letter> {
        match self {
            Syllable::Plain(x) => vec![x],
            Syllable::Conjugate(x) => vec![Letter::A, x, Letter::A],
        }
    }

    /// Image under `φ_L` or `φ_R`; `None` is the identity.
    pub fn image(self, side: Side) -> Option<Letter> {
        use Letter::*;
        match (side, self) {
            (Side::Left, Syllable::Plain(B | C)) => Some(A),
            (Side::Left, Syllable::Plain(D)) => None,
            (Side::Left, Syllable::Conjugate(B)) => Some(C),
            (Side::Left, Syllable::Conjugate(C)) => Some(D),
            (Side::Left, Syllable::Conjugate(D)) => Some(B),
            (Side::Right, Syllable::Plain(B)) => Some(C),
            (Side::Right, Syllable::Plain(C)) => Some(D),
            (Side::Right, Syllable::Plain(D)) => Some(B),
            (Side::Right, Syllable::Conjugate(B | C)) => Some(A),
            (Side::Right, Syllable::Conjugate(D)) => None,
            (_, Syllable::Plain(A) | Syllable::Conjugate(A)) => unreachable!("not a syllable"),
        }
    }
}

/// Splits a reduced word with an even number of `a` into syllables, pairing `a`s left to
/// right.
pub fn syllables(w: &ReducedGrigWord) -> Result<Vec<Syllable>, GrigError> {
    if !w.as_word().in_g1() {
        return Err(GrigError::NotInG1(w.to_string()));
    }
    let letters = w.letters();
    let mut out = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        if letters[i].is_klein() {
            out.push(Syllable::Plain(letters[i]));
            i += 1;
        } else {
            // reduced with even a-count: a x a with x in {b, c, d}
            out.push(Syllable::Conjugate(letters[i + 1]));
            i += 3;
        }
    }
    Ok(out)
}

/// `φ_L` or `φ_R` applied syllable by syllable, without reducing the result.
pub fn phi_side(w: &ReducedGrigWord, side: Side) -> Result<GrigWord, GrigError> {
    Ok(GrigWord::new(syllables(w)?.into_iter().filter_map(|s| s.image(side)).collect()))
}

/// `(φ_L(w), φ_R(w))` for a reduced word in `G₁`.
pub fn phi(w: &ReducedGrigWord) -> Result<(GrigWord, GrigWord), GrigError> {
    Ok((phi_side(w, Side::Left)?, phi_side(w, Side::Right)?))
}

/// Whether both reduced images are shorter than `|w|/2 + 1`.
pub fn contraction_check(w: &ReducedGrigWord) -> Result<bool, GrigError> {
    if w.len() <= 1 {
        return Err(GrigError::TooShort(w.to_string()));
    }
    let (l, r) = phi(w)?;
    let ok = |x: &GrigWord| 2 * reduce(x).len() < w.len() + 2;
    Ok(ok(&l) && ok(&r))
}

/// Decides `w = 1` in the Grigorchuk group.
pub fn is_trivial(w: &GrigWord) -> bool {
    is_trivial_reduced(&reduce(w))
}

fn is_trivial_reduced(r: &ReducedGrigWord) -> bool {
    if r.is_empty() {
        return true;
    }
    if !r.as_word().in_g1() || r.len() == 1 {
        return false;
    }
    let (l, right) = phi(r).expect("reduced, even a-count");
    is_trivial(&l) && is_trivial(&right)
}

/// One level of a recursion that ends at a word with an odd number of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLevel {
    pub word: GrigWord,
    pub reduced: ReducedGrigWord,
    /// The map taken to reach the next level; `None` at the seed.
    pub side: Option<Side>,
}

/// Follows nontrivial `φ` images from `w` down to a word with an odd number of `a`.
/// `None` exactly when `w` is trivial. Levels run from `w` to the seed.
pub fn nontrivial_chain(w: &GrigWord) -> Option<Vec<ChainLevel>> {
    let mut levels = Vec::new();
    let mut word = w.clone();
    loop {
        let reduced = reduce(&word);
        if reduced.is_empty() {
            return None;
        }
        if !reduced.as_word().in_g1() {
            levels.push(ChainLevel { word, reduced, side: None });
            return Some(levels);
        }
        let (l, r) = phi(&reduced).expect("reduced, even a-count");
        let (side, next) = if !is_trivial(&l) {
            (Side::Left, l)
        } else if !is_trivial(&r) {
            (Side::Right, r)
        } else {
            return None;
        };
        levels.push(ChainLevel { word, reduced, side: Some(side) });
        word = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GrigWord {
        s.parse().unwrap()
    }

    fn r(s: &str) -> ReducedGrigWord {
        ReducedGrigWord::try_from_word(g(s)).unwrap()
    }

    #[test]
    fn phi_examples() {
        let (l, rt) = phi(&r("dadad")).unwrap();
        assert_eq!(l.to_string(), "b");
        assert_eq!(rt.to_string(), "bb");
        let (l, rt) = phi(&r("d")).unwrap();
        assert_eq!(l.to_string(), "");
        assert_eq!(rt.to_string(), "b");
        let (l, rt) = phi(&r("abab")).unwrap();
        assert_eq!(l.to_string(), "ca");
        assert_eq!(rt.to_string(), "ac");
    }

    #[test]
    fn phi_domain_errors() {
        assert!(matches!(phi(&r("a")), Err(GrigError::NotInG1(_))));
        assert!(matches!(phi(&r("bab")), Err(GrigError::NotInG1(_))));
    }

    #[test]
    fn word_problem_examples() {
        assert!(is_trivial(&g("dadadada")));
        assert!(is_trivial(&g("")));
        assert!(!is_trivial(&g("bcddacbabcaa")));
        assert!(!is_trivial(&g("a")));
        assert!(!is_trivial(&g("b")));
        assert!(is_trivial(&g("bcd")));
        assert!(is_trivial(&g(&"ac".repeat(8))));
        assert!(!is_trivial(&g(&"ac".repeat(4))));
        assert!(is_trivial(&g(&"ab".repeat(16))));
        assert!(!is_trivial(&g(&"ab".repeat(8))));
    }

    #[test]
    fn contraction_examples() {
        assert!(contraction_check(&r("dadad")).unwrap());
        assert!(matches!(contraction_check(&r("d")), Err(GrigError::TooShort(_))));
    }

    #[test]
    fn contraction_holds_for_short_words() {
        for len in 2..=10 {
            for w in GrigWord::all_of_length(len) {
                let red = reduce(&w);
                if red.len() > 1 && red.as_word().in_g1() {
                    assert!(contraction_check(&red).unwrap(), "{red}");
                }
            }
        }
    }

    #[test]
    fn chain_of_figure_example() {
        let chain = nontrivial_chain(&g("bcddacbabcaa")).unwrap();
        let words: Vec<String> = chain.iter().map(|l| l.reduced.to_string()).collect();
        assert_eq!(words, vec!["dadad", "b", "a"]);
        assert_eq!(chain[0].side, Some(Side::Left));
        assert_eq!(chain[1].side, Some(Side::Left));
        assert!(nontrivial_chain(&g("dadadada")).is_none());
    }
}
