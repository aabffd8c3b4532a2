use rand::seq::SliceRandom;
use rand::Rng;

use super::alphabet::SymbolId;
use super::system::LSystem;
use super::witness::DerivationWitness;

/// `finishable[q][x]`: some table sequence from control state `q` to acceptance rewrites
/// the single symbol `x` to a terminal word. Symbols are treated independently, so this
/// over-approximates what a whole form can do.
fn finishable(sys: &LSystem) -> Vec<Vec<bool>> {
    let automaton = sys.automaton();
    let n = sys.alphabet().len();
    let mut fin: Vec<Vec<bool>> = (0..automaton.state_count())
        .map(|q| {
            (0..n)
                .map(|x| automaton.is_accepting(q) && sys.is_terminal(SymbolId(x as u32)))
                .collect()
        })
        .collect();
    let mut changed = true;
    while changed {
        changed = false;
        for q in 0..fin.len() {
            for (t, next) in automaton.transitions(q).collect::<Vec<_>>() {
                for x in 0..n {
                    if fin[q][x] {
                        continue;
                    }
                    let table = &sys.tables()[t];
                    let ok = table
                        .choices(SymbolId(x as u32))
                        .iter()
                        .any(|rhs| rhs.iter().all(|s| fin[next][s.0 as usize]));
                    if ok {
                        fin[q][x] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    fin
}

/// Samples one derivation by walking the control automaton and picking rules uniformly
/// among those that can still lead to a terminal word.
///
/// At an accepting state holding a terminal form the walk stops with probability
/// `1 / (live moves + 1)`. Returns `None` when the walk leaves the length bounds or gets
/// stuck.
pub fn random_derivation<R: Rng + ?Sized>(
    sys: &LSystem,
    rng: &mut R,
    max_sentential_length: usize,
    max_control_length: usize,
) -> Option<DerivationWitness> {
    let fin = finishable(sys);
    let automaton = sys.automaton();
    let axiom = sys.axioms().choose(rng)?.clone();
    let mut witness = DerivationWitness::new(axiom.clone());
    let mut form = axiom;
    let mut state = automaton.initial();
    loop {
        let live: Vec<(usize, usize)> = automaton
            .transitions(state)
            .filter(|&(t, next)| {
                form.iter().all(|&s| {
                    sys.tables()[t].choices(s).iter().any(|rhs| rhs.iter().all(|y| fin[next][y.0 as usize]))
                })
            })
            .collect();
        let can_stop = automaton.is_accepting(state) && sys.is_terminal_word(&form);
        if can_stop && rng.gen_range(0..=live.len()) == 0 {
            return Some(witness);
        }
        if live.is_empty() || witness.steps.len() >= max_control_length {
            return None;
        }
        let (t, next) = *live.choose(rng)?;
        let table = &sys.tables()[t];
        let mut out = Vec::with_capacity(form.len());
        for &s in &form {
            let usable: Vec<&Vec<SymbolId>> = table
                .choices(s)
                .iter()
                .filter(|rhs| rhs.iter().all(|y| fin[next][y.0 as usize]))
                .collect();
            out.extend_from_slice(usable.choose(rng)?);
        }
        if out.len() > max_sentential_length {
            return None;
        }
        witness.push(table.name(), out.clone());
        form = out;
        state = next;
    }
}
