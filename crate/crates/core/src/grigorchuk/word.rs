use std::fmt;
use std::str::FromStr;

use super::GrigError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::D];

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            'd' => Some(Letter::D),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }

    /// `{1, b, c, d}` is a Klein four-group; its non-identity elements as bit pairs.
    fn klein(self) -> u8 {
        match self {
            Letter::A => 0,
            Letter::B => 1,
            Letter::C => 2,
            Letter::D => 3,
        }
    }

    fn from_klein(k: u8) -> Option<Letter> {
        match k {
            1 => Some(Letter::B),
            2 => Some(Letter::C),
            3 => Some(Letter::D),
            _ => None,
        }
    }

    pub fn is_klein(self) -> bool {
        self != Letter::A
    }

    /// Product of two distinct letters from `{b, c, d}`.
    pub fn klein_product(self, other: Letter) -> Option<Letter> {
        if !self.is_klein() || !other.is_klein() {
            return None;
        }
        Letter::from_klein(self.klein() ^ other.klein())
    }
}

/// A word over `{a, b, c, d}`. Every generator is an involution, so the reversed word is
/// the inverse.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrigWord(Vec<Letter>);

impl GrigWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GrigWord(letters)
    }

    pub fn empty() -> Self {
        GrigWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn a_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::A).count()
    }

    /// Membership in the first-level stabilizer: an even number of `a`.
    pub fn in_g1(&self) -> bool {
        self.a_count() % 2 == 0
    }

    pub fn inverse(&self) -> GrigWord {
        GrigWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &GrigWord) -> GrigWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GrigWord(v)
    }

    /// Every word of length exactly `len`, in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = GrigWord> {
        (0..4usize.pow(len as u32)).map(move |mut code| {
            let mut v = vec![Letter::A; len];
            for slot in v.iter_mut().rev() {
                *slot = Letter::ALL[code % 4];
                code /= 4;
            }
            GrigWord(v)
        })
    }
}

impl FromStr for GrigWord {
    type Err = GrigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Letter::from_char(c).ok_or(GrigError::BadLetter(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(GrigWord)
    }
}

impl fmt::Display for GrigWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

/// A word avoiding `aa` and every two-letter factor over `{b, c, d}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedGrigWord(GrigWord);

impl ReducedGrigWord {
    /// Accepts `w` only if it is already reduced.
    pub fn try_from_word(w: GrigWord) -> Result<Self, GrigError> {
        if is_reduced(w.letters()) {
            Ok(ReducedGrigWord(w))
        } else {
            Err(GrigError::NotReduced(w.to_string()))
        }
    }

    pub fn as_word(&self) -> &GrigWord {
        &self.0
    }

    pub fn into_word(self) -> GrigWord {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }
}

impl fmt::Display for ReducedGrigWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|p| (p[0] == Letter::A) != (p[1] == Letter::A))
}

/// One application of a defining identity, at a position of the word current at that time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionStep {
    /// `xx → 1` removing positions `at` and `at + 1`.
    Cancel { at: usize, letter: Letter },
    /// `left·right → result` replacing positions `at` and `at + 1` by one letter.
    Merge { at: usize, left: Letter, right: Letter, result: Letter },
}

/// Reduces `w` by a left-to-right stack scan and records each rewrite applied.
pub fn reduce_with_trace(w: &GrigWord) -> (ReducedGrigWord, Vec<ReductionStep>) {
    let mut stack: Vec<Letter> = Vec::with_capacity(w.len());
    let mut trace = Vec::new();
    for &x in w.letters() {
        match stack.last().copied() {
            Some(y) if y == x => {
                stack.pop();
                trace.push(ReductionStep::Cancel { at: stack.len(), letter: x });
            }
            Some(y) if y.is_klein() && x.is_klein() => {
                let result = y.klein_product(x).expect("distinct Klein letters");
                let at = stack.len() - 1;
                stack[at] = result;
                trace.push(ReductionStep::Merge { at, left: y, right: x, result });
            }
            _ => stack.push(x),
        }
    }
    (ReducedGrigWord(GrigWord(stack)), trace)
}

/// The unique reduced word equal to `w` in the group.
pub fn reduce(w: &GrigWord) -> ReducedGrigWord {
    reduce_with_trace(w).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GrigWord {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(reduce(&g("bc")).to_string(), "d");
        assert_eq!(reduce(&g("")).to_string(), "");
        assert_eq!(reduce(&g("abbab")).to_string(), "b");
        assert_eq!(reduce(&g("bcddacbabcaa")).to_string(), "dadad");
        assert_eq!(reduce(&g("dadadada")).to_string(), "dadadada");
        assert_eq!(reduce(&g("cd")).to_string(), "b");
        assert_eq!(reduce(&g("db")).to_string(), "c");
    }

    #[test]
    fn bad_letters_are_rejected() {
        assert_eq!("abx".parse::<GrigWord>().unwrap_err(), GrigError::BadLetter('x'));
    }

    #[test]
    fn g1_membership_by_parity() {
        assert!(g("b").in_g1());
        assert!(!g("a").in_g1());
        assert!(g("abab").in_g1());
    }

    #[test]
    fn trace_replays_to_the_reduced_word() {
        for len in 0..=6 {
            for w in GrigWord::all_of_length(len) {
                let (r, trace) = reduce_with_trace(&w);
                let mut cur = w.letters().to_vec();
                for step in &trace {
                    match *step {
                        ReductionStep::Cancel { at, letter } => {
                            assert_eq!((cur[at], cur[at + 1]), (letter, letter));
                            cur.drain(at..at + 2);
                        }
                        ReductionStep::Merge { at, left, right, result } => {
                            assert_eq!((cur[at], cur[at + 1]), (left, right));
                            cur.splice(at..at + 2, [result]);
                        }
                    }
                }
                assert_eq!(cur, r.letters());
                assert!(trace.len() <= w.len());
            }
        }
    }

    #[test]
    fn try_from_word_checks_reducedness() {
        assert!(ReducedGrigWord::try_from_word(g("dadad")).is_ok());
        assert!(ReducedGrigWord::try_from_word(g("bb")).is_err());
        assert!(ReducedGrigWord::try_from_word(g("aa")).is_err());
    }
}
