//! Seeded Monte Carlo simulation of the draw-until-streak stopping time.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;

/// Summary of a simulation run.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct SimResult {
    pub trials: u64,
    pub mean: f64,
    pub std_error: f64,
    pub seed: u64,
}

/// Draw uniform letters from `{1, ..., n}` until a streak (strict) or soft
/// streak (non-decreasing run) of length `k` appears; repeat `trials` times
/// and report the sample mean of the number of draws with its standard error.
///
/// Work is split across `workers` logical substreams of a counter-based RNG,
/// one stream per worker, so the result depends only on `(seed, trials,
/// workers)` and not on scheduling. Trials split round-robin.
///
/// Returns [`Error::NonTerminating`] for `soft = false` with `k > n`: no
/// strict streak of length `k` exists over `n` letters, so the walk would
/// never stop.
pub fn simulate_draws(
    n: u32,
    k: u32,
    soft: bool,
    trials: u64,
    seed: u64,
    workers: u32,
) -> Result<SimResult, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    if !soft && k > n {
        return Err(Error::NonTerminating { n, k });
    }
    assert!(trials >= 1, "at least one trial is required");
    assert!(workers >= 1, "at least one worker is required");

    let workers = workers.min(trials.min(u64::from(u32::MAX)) as u32);
    let results: Vec<(u128, u128)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(u64::from(w) + 1);
                    // Round-robin split of the trial count.
                    let share = trials / u64::from(workers)
                        + u64::from(u64::from(w) < trials % u64::from(workers));
                    let mut sum = 0u128;
                    let mut sum_sq = 0u128;
                    for _ in 0..share {
                        let draws = run_one(n, k, soft, &mut rng);
                        sum += u128::from(draws);
                        sum_sq += u128::from(draws) * u128::from(draws);
                    }
                    (sum, sum_sq)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });

    let sum: u128 = results.iter().map(|r| r.0).sum();
    let sum_sq: u128 = results.iter().map(|r| r.1).sum();
    let t = trials as f64;
    let mean = sum as f64 / t;
    let variance = if trials > 1 {
        (sum_sq as f64 - (sum as f64) * mean) / (t - 1.0)
    } else {
        0.0
    };
    let std_error = (variance.max(0.0) / t).sqrt();
    Ok(SimResult { trials, mean, std_error, seed })
}

fn run_one(n: u32, k: u32, soft: bool, rng: &mut ChaCha8Rng) -> u64 {
    let mut draws = 0u64;
    let mut last = 0u32;
    let mut run = 0u32;
    loop {
        let letter = rng.gen_range(1..=n);
        draws += 1;
        let extends = run > 0 && if soft { letter >= last } else { letter > last };
        run = if extends { run + 1 } else { 1 };
        last = letter;
        if run == k {
            return draws;
        }
    }
}
