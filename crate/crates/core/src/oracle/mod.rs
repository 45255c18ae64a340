//! Independent ground truth for everything the generating functions claim:
//! brute-force and automaton-based counters for words avoiding a forbidden
//! set, a specialized streak-free counter, and a seeded Monte Carlo draw
//! simulator.
//!
//! The counters deliberately share no code with the `cluster`/`streaks`
//! closed forms they are used to check.

mod automaton;
mod sim;

pub use automaton::count_avoiding_automaton;
pub use sim::{simulate_draws, SimResult};

use num_bigint::BigUint;

use crate::cluster::ForbiddenSet;
use crate::error::Error;

/// Default cap on `n^s`, the number of words an exhaustive count may cover.
pub const DEFAULT_ENUM_BUDGET: u128 = 100_000_000;

/// How a [`CountResult`] was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CountMethod {
    Exhaustive,
    Automaton,
}

/// An exact count of avoiding words of one length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountResult {
    pub s: u32,
    pub count: BigUint,
    pub method: CountMethod,
}

fn check_budget(n: u32, s: u32, budget: u128) -> Result<(), Error> {
    let words = (n as u128).checked_pow(s).unwrap_or(u128::MAX);
    if words > budget {
        return Err(Error::BudgetExceeded { words, budget });
    }
    Ok(())
}

/// Count words of length `s` over `{1, ..., n}` avoiding every forbidden
/// word, by depth-first enumeration.
///
/// Branches whose prefix already contains a forbidden word are cut off (all
/// their extensions contain it too), so the walk touches exactly the avoiding
/// prefixes. The budget guard still applies to the nominal `n^s` space.
pub fn count_avoiding_exhaustive(
    forbidden: &ForbiddenSet,
    s: u32,
    budget: u128,
) -> Result<CountResult, Error> {
    check_budget(forbidden.alphabet_size(), s, budget)?;
    let words: Vec<&[u32]> = forbidden.words().iter().map(|w| w.letters()).collect();
    let mut prefix = Vec::with_capacity(s as usize);
    let count = count_rec(forbidden.alphabet_size(), s as usize, &words, &mut prefix);
    Ok(CountResult { s, count: BigUint::from(count), method: CountMethod::Exhaustive })
}

fn count_rec(n: u32, s: usize, forbidden: &[&[u32]], prefix: &mut Vec<u32>) -> u128 {
    if prefix.len() == s {
        return 1;
    }
    let mut total = 0u128;
    for letter in 1..=n {
        prefix.push(letter);
        // Only suffixes ending at the new letter can introduce a forbidden
        // word; everything earlier was checked on the way down.
        let clean = forbidden.iter().all(|w| {
            prefix.len() < w.len() || prefix[prefix.len() - w.len()..] != **w
        });
        if clean {
            total += count_rec(n, s, forbidden, prefix);
        }
        prefix.pop();
    }
    total
}

/// Count words of length `s` avoiding every (strict or soft) streak of
/// length `k`, by the same pruned enumeration with a run-length scan instead
/// of subword matching.
///
/// A window of length `k` is a strict streak when strictly increasing, a soft
/// streak when non-decreasing.
pub fn count_streak_free(
    n: u32,
    k: u32,
    s: u32,
    soft: bool,
    budget: u128,
) -> Result<CountResult, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    check_budget(n, s, budget)?;
    let count = streak_rec(n, k, s as usize, soft, 0, 0, 0);
    Ok(CountResult { s, count: BigUint::from(count), method: CountMethod::Exhaustive })
}

/// `run` is the length of the longest (soft) streak ending at the last
/// letter; extending with a suitable letter lengthens it, anything else
/// resets it to 1.
fn streak_rec(n: u32, k: u32, s: usize, soft: bool, depth: usize, last: u32, run: u32) -> u128 {
    if depth == s {
        return 1;
    }
    let mut total = 0u128;
    for letter in 1..=n {
        let extends = depth > 0 && if soft { letter >= last } else { letter > last };
        let new_run = if extends { run + 1 } else { 1 };
        if new_run < k {
            total += streak_rec(n, k, s, soft, depth + 1, letter, new_run);
        }
    }
    total
}
