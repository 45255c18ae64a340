//! Prefix-automaton counter.
//!
//! States are the proper prefixes of the forbidden words (the empty word is
//! the start state). Reading a letter from state `u` moves to the longest
//! suffix of `u + letter` that is again a proper prefix, unless some suffix
//! of `u + letter` is itself forbidden, in which case the walk dies. Words of
//! length `s` that keep the walk alive are exactly the avoiding words, so a
//! vector-transfer pass with exact big integers counts them in `O(s * states
//! * n)` instead of `O(n^s)`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use super::{CountMethod, CountResult};
use crate::cluster::ForbiddenSet;

struct PrefixAutomaton {
    /// `transitions[state][letter - 1]`: `Some(next)` or `None` for death.
    transitions: Vec<Vec<Option<usize>>>,
}

impl PrefixAutomaton {
    fn build(forbidden: &ForbiddenSet) -> Self {
        let n = forbidden.alphabet_size() as usize;
        let words: Vec<&[u32]> = forbidden.words().iter().map(|w| w.letters()).collect();

        // Collect proper prefixes, shortest first so indices are stable.
        let mut states: Vec<Vec<u32>> = vec![Vec::new()];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        index.insert(Vec::new(), 0);
        for w in &words {
            for len in 1..w.len() {
                let p = w[..len].to_vec();
                if !index.contains_key(&p) {
                    index.insert(p.clone(), states.len());
                    states.push(p);
                }
            }
        }

        let is_forbidden = |suffix: &[u32]| words.iter().any(|w| *w == suffix);
        let mut transitions = vec![vec![None; n]; states.len()];
        for (si, state) in states.iter().enumerate() {
            for letter in 1..=n as u32 {
                let mut extended = state.clone();
                extended.push(letter);
                // Death if any suffix of the extension is a forbidden word.
                let dead = (0..extended.len()).any(|i| is_forbidden(&extended[i..]));
                if dead {
                    continue;
                }
                // Longest suffix that is a proper prefix again.
                let next = (0..=extended.len())
                    .map(|i| &extended[i..])
                    .find_map(|sfx| index.get(sfx))
                    .copied()
                    .expect("the empty suffix is always a state");
                transitions[si][letter as usize - 1] = Some(next);
            }
        }
        PrefixAutomaton { transitions }
    }

    fn count(&self, s: u32) -> BigUint {
        let mut counts = vec![BigUint::zero(); self.transitions.len()];
        counts[0] = BigUint::from(1u32);
        for _ in 0..s {
            let mut next = vec![BigUint::zero(); counts.len()];
            for (state, c) in counts.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for target in self.transitions[state].iter().flatten() {
                    next[*target] += c;
                }
            }
            counts = next;
        }
        counts.into_iter().sum()
    }
}

/// Count words of length `s` avoiding every forbidden word by transfer over
/// the prefix automaton. Exact, and fast enough for lengths far beyond what
/// enumeration can reach.
pub fn count_avoiding_automaton(forbidden: &ForbiddenSet, s: u32) -> CountResult {
    let count = PrefixAutomaton::build(forbidden).count(s);
    CountResult { s, count, method: CountMethod::Automaton }
}
