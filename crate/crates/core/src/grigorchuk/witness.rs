//! Derivations of nontrivial words in the co-word grammar, built by running the word
//! problem backwards.

use crate::catalog::grigorchuk_coword_system;
use crate::lsystem::{DerivationWitness, LSystem, SymbolId, Word};

use super::word::{reduce_with_trace, GrigWord, Letter, ReductionStep};
use super::wp::{nontrivial_chain, syllables, ChainLevel, Side};
use super::GrigError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sym {
    Start(bool),
    L(Letter),
    Delta,
    Hash,
}

struct Symbols {
    start: [SymbolId; 2],
    letters: [SymbolId; 4],
    delta: SymbolId,
    hash: SymbolId,
}

impl Symbols {
    fn of(sys: &LSystem) -> Result<Self, GrigError> {
        let id = |t: &str| sys.alphabet().id(t);
        Ok(Symbols {
            start: [id("S_0")?, id("S_1")?],
            letters: [id("a")?, id("b")?, id("c")?, id("d")?],
            delta: id("δ")?,
            hash: id("#")?,
        })
    }

    fn word(&self, form: &[Sym]) -> Word {
        form.iter()
            .map(|s| match *s {
                Sym::Start(odd) => self.start[odd as usize],
                Sym::L(l) => self.letters[l as usize],
                Sym::Delta => self.delta,
                Sym::Hash => self.hash,
            })
            .collect()
    }
}

/// A derivation of `w` in the co-word grammar, or [`GrigError::Trivial`].
pub fn derive_witness(w: &GrigWord) -> Result<DerivationWitness, GrigError> {
    derive_witness_in(&grigorchuk_coword_system(), w)
}

/// As [`derive_witness`], against an already built copy of the co-word grammar.
pub fn derive_witness_in(sys: &LSystem, w: &GrigWord) -> Result<DerivationWitness, GrigError> {
    let chain = nontrivial_chain(w).ok_or(GrigError::Trivial)?;
    let syms = Symbols::of(sys)?;
    let mut out = DerivationWitness::new(syms.word(&[Sym::Start(false)]));
    let mut push = |table: &str, form: &[Sym]| out.push(table, syms.word(form));

    let seed = chain.last().expect("chain is never empty");
    let mut spelled: Vec<Sym> = Vec::new();
    let mut odd = false;
    for &x in seed.word.letters() {
        spelled.push(Sym::L(x));
        odd ^= x == Letter::A;
        let mut form = spelled.clone();
        form.push(Sym::Start(odd));
        push("s", &form);
    }
    push("s", &spelled);

    for (depth, level) in chain.iter().enumerate().rev().skip(1) {
        lift(level, depth, &mut push)?;
    }
    Ok(out)
}

/// Emits `p* h u* t` turning the image `φ(level.reduced)` into `level.word`.
fn lift(level: &ChainLevel, depth: usize, push: &mut impl FnMut(&str, &[Sym])) -> Result<(), GrigError> {
    let side = level.side.expect("only the seed has no side");
    let syls = syllables(&level.reduced)?;

    // δ placeholders for erased syllables hang off the following image letter, or the
    // last one at the end.
    let mut hang: Vec<(usize, Letter, usize)> = Vec::new();
    let mut pending = 0;
    for s in &syls {
        match s.image(side) {
            None => pending += 1,
            Some(x) => {
                hang.push((pending, x, 0));
                pending = 0;
            }
        }
    }
    hang.last_mut().expect("nontrivial image").2 += pending;

    let rounds = hang.iter().map(|&(l, _, r)| l + r).max().unwrap_or(0);
    for round in 1..=rounds {
        let mut form = Vec::new();
        for &(l, x, r) in &hang {
            let left = l.min(round);
            let right = r.min(round.saturating_sub(l));
            form.extend(std::iter::repeat(Sym::Delta).take(left));
            form.push(Sym::L(x));
            form.extend(std::iter::repeat(Sym::Delta).take(right));
        }
        push("p", &form);
    }

    let mut form: Vec<Sym> = level.reduced.letters().iter().map(|&l| Sym::L(l)).collect();
    push(if side == Side::Left { "h_L" } else { "h_R" }, &form);

    let (reduced, trace) = reduce_with_trace(&level.word);
    debug_assert_eq!(reduced, level.reduced);
    let cap = 4 * level.word.len();
    let mut used = 0;
    let mut step = |form: &Vec<Sym>, push: &mut dyn FnMut(&str, &[Sym])| -> Result<(), GrigError> {
        used += 1;
        if used > cap {
            return Err(GrigError::WitnessCap { level: depth, cap });
        }
        push("u", form);
        Ok(())
    };
    for rs in trace.iter().rev() {
        match *rs {
            ReductionStep::Merge { at, left, right, .. } => {
                let i = letter_index(&form, at);
                form.splice(i..=i, [Sym::L(left), Sym::Hash, Sym::L(right)]);
                step(&form, push)?;
            }
            ReductionStep::Cancel { at, letter } => {
                let lo = if at == 0 { 0 } else { letter_index(&form, at - 1) + 1 };
                let hi = (lo..form.len()).find(|&i| matches!(form[i], Sym::L(_))).unwrap_or(form.len());
                let h = match (lo..hi).find(|&i| form[i] == Sym::Hash) {
                    Some(h) => h,
                    None if hi < form.len() => {
                        form.insert(hi, Sym::Hash);
                        step(&form, push)?;
                        hi
                    }
                    None => {
                        // the gap is the end of the word and at least one letter precedes it
                        form.insert(lo, Sym::Hash);
                        step(&form, push)?;
                        lo
                    }
                };
                form.splice(h..=h, [Sym::L(letter), Sym::Hash, Sym::L(letter)]);
                step(&form, push)?;
            }
        }
    }
    form.retain(|s| *s != Sym::Hash);
    push("t", &form);
    debug_assert_eq!(form, level.word.letters().iter().map(|&l| Sym::L(l)).collect::<Vec<_>>());
    Ok(())
}

fn letter_index(form: &[Sym], n: usize) -> usize {
    form.iter()
        .enumerate()
        .filter(|(_, s)| matches!(s, Sym::L(_)))
        .nth(n)
        .map(|(i, _)| i)
        .expect("trace position within the word")
}
