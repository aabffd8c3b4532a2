//! Checks that the co-word grammar generates exactly the nontrivial words, at bounded size.

use rand::Rng;

use crate::catalog::grigorchuk_coword_system;
use crate::lsystem::{random_derivation, SearchCaps};

use super::witness::derive_witness_in;
use super::word::{GrigWord, Letter};
use super::wp::is_trivial;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub max_len: usize,
    pub words: usize,
    pub trivial: usize,
    pub nontrivial: usize,
    /// Nontrivial words whose derived witness verified.
    pub witnessed: usize,
    /// Nontrivial words without a verifying witness, with the reason.
    pub completeness_failures: Vec<(GrigWord, String)>,
    /// Words found by bounded enumeration of the grammar.
    pub enumerated: usize,
    pub enumeration_exhaustive: bool,
    /// Enumerated words that are trivial in the group.
    pub soundness_failures: Vec<GrigWord>,
}

impl EquivalenceReport {
    pub fn is_clean(&self) -> bool {
        self.completeness_failures.is_empty() && self.soundness_failures.is_empty()
    }
}

/// Classifies every word up to `max_len`, derives and verifies a witness for each
/// nontrivial one, and checks that a bounded enumeration of the grammar yields no
/// trivial word.
pub fn coword_language_equivalence(max_len: usize, caps: SearchCaps) -> EquivalenceReport {
    let sys = grigorchuk_coword_system();
    let mut report = EquivalenceReport { max_len, ..Default::default() };
    for len in 0..=max_len {
        for w in GrigWord::all_of_length(len) {
            report.words += 1;
            if is_trivial(&w) {
                report.trivial += 1;
                continue;
            }
            report.nontrivial += 1;
            match derive_witness_in(&sys, &w) {
                Ok(wit) => match wit.check(&sys) {
                    Ok(()) if sys.format_word(wit.final_word()) == w.to_string() => report.witnessed += 1,
                    Ok(()) => report.completeness_failures.push((w, "derives another word".into())),
                    Err(e) => report.completeness_failures.push((w, e.to_string())),
                },
                Err(e) => report.completeness_failures.push((w, e.to_string())),
            }
        }
    }
    let found = sys.enumerate(max_len, caps);
    report.enumerated = found.words.len();
    report.enumeration_exhaustive = found.exhaustive;
    for word in &found.words {
        let w = GrigWord::new(
            word.iter()
                .map(|&s| Letter::from_char(sys.alphabet().token(s).chars().next().unwrap()).unwrap())
                .collect(),
        );
        if is_trivial(&w) {
            report.soundness_failures.push(w);
        }
    }
    report
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SoundnessReport {
    pub attempts: usize,
    pub derivations: usize,
    pub violations: Vec<GrigWord>,
}

/// Draws random control-accepted derivations until `samples` have completed (or
/// `100 * samples` attempts), collecting any trivial word produced.
pub fn soundness_sample<R: Rng + ?Sized>(
    rng: &mut R,
    samples: usize,
    max_sentential: usize,
    max_control: usize,
) -> SoundnessReport {
    let sys = grigorchuk_coword_system();
    let mut report = SoundnessReport::default();
    while report.derivations < samples && report.attempts < samples.saturating_mul(100) {
        report.attempts += 1;
        let Some(wit) = random_derivation(&sys, rng, max_sentential, max_control) else {
            continue;
        };
        report.derivations += 1;
        let w: GrigWord = sys.format_word(wit.final_word()).parse().expect("terminal word over a-d");
        if is_trivial(&w) {
            report.violations.push(w);
        }
    }
    report
}
