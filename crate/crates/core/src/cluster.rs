//! The Goulden-Jackson cluster method.
//!
//! Given an alphabet `{1, ..., n}` and a set `F` of forbidden words, the
//! generating function of the number of words avoiding every element of `F`
//! as a subword is `f(z) = 1 / (1 - nz - W(F))`, where `W(F)` is the sum of
//! per-word weights. Each weight satisfies
//!
//! ```text
//! W(x) = -z^|x| - sum over (y, j) of z^(|x| - j) W(y)
//! ```
//!
//! with `(y, j)` ranging over forbidden words `y` that front-run `x` with
//! overlap `j` (the last `j` letters of `y` equal the first `j` letters of
//! `x`). Solving this linear system over the rational-function field yields
//! the weights exactly.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{rat, solve_linear_system, Poly, RatFun};
use crate::error::Error;

/// Non-empty word over the alphabet `{1, ..., n}`.
///
/// Words order by length first, then lexicographically; this fixes the row
/// order of weight systems so solving is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self, Error> {
        if letters.is_empty() {
            return Err(Error::InvalidWord("words must be non-empty".into()));
        }
        if letters.contains(&0) {
            return Err(Error::InvalidWord("letters are positive integers".into()));
        }
        Ok(Word { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// True if `self` occurs in `other` as a contiguous subword.
    pub fn is_subword_of(&self, other: &Word) -> bool {
        other
            .letters
            .windows(self.len())
            .any(|w| w == self.letters.as_slice())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{self}")
    }
}

/// Severity of a [`Diagnostic`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Severity {
    /// The set cannot be used as given.
    Error,
    /// The set is usable but redundant; the method still works, with
    /// unnecessary complexity.
    Warning,
}

/// A finding from [`validate_forbidden_set`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{tag}: {}", self.message)
    }
}

/// Check a candidate forbidden set.
///
/// Length-1 words are errors (forbidding a single letter is alphabet
/// shrinking, not subword avoidance, and the weight equations assume length
/// at least 2). Out-of-range letters are errors. One forbidden word
/// containing another is only a warning: the cluster method still works on
/// such sets.
pub fn validate_forbidden_set(n: u32, words: &[Word]) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    for w in words {
        if let Some(&l) = w.letters().iter().find(|&&l| l < 1 || l > n) {
            diags.push(Diagnostic {
                severity: Severity::Error,
                message: format!("word {w} uses letter {l} outside the alphabet 1..={n}"),
            });
        }
        if w.len() < 2 {
            diags.push(Diagnostic {
                severity: Severity::Error,
                message: format!(
                    "word {w} has length 1; single-letter forbidden words are not supported \
                     (drop the letter from the alphabet instead)"
                ),
            });
        }
    }
    for (i, a) in words.iter().enumerate() {
        for (j, b) in words.iter().enumerate() {
            if i != j && a.len() < b.len() && a.is_subword_of(b) {
                diags.push(Diagnostic {
                    severity: Severity::Warning,
                    message: format!("{a} is a subword of {b}; {b} is redundant"),
                });
            }
        }
    }
    diags
}

/// A set of distinct forbidden words over `{1, ..., n}`, all of length >= 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ForbiddenSet {
    alphabet_size: u32,
    words: Vec<Word>,
}

impl ForbiddenSet {
    /// Build a forbidden set, rejecting words that draw error diagnostics.
    /// Duplicates are dropped; words are kept sorted by length then
    /// lexicographically.
    pub fn new(alphabet_size: u32, words: Vec<Word>) -> Result<Self, Error> {
        if alphabet_size == 0 {
            return Err(Error::InvalidWord("alphabet must have at least one letter".into()));
        }
        if let Some(d) = validate_forbidden_set(alphabet_size, &words)
            .into_iter()
            .find(|d| d.severity == Severity::Error)
        {
            return Err(Error::InvalidWord(d.message));
        }
        let mut words = words;
        words.sort();
        words.dedup();
        Ok(ForbiddenSet { alphabet_size, words })
    }

    pub fn empty(alphabet_size: u32) -> Self {
        ForbiddenSet { alphabet_size, words: Vec::new() }
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// All overlaps with which `y` front-runs `x`, in ascending order.
///
/// `j` is an overlap when the last `j` letters of `y` equal the first `j`
/// letters of `x`. Valid overlaps run from 1 through `min(|x| - 1, |y|)`:
/// a word never front-runs a word of the same length over that word's full
/// length (in particular a word does not trivially front-run itself).
pub fn overlaps(x: &Word, y: &Word) -> Vec<usize> {
    let xs = x.letters();
    let ys = y.letters();
    let max_j = (xs.len() - 1).min(ys.len());
    (1..=max_j)
        .filter(|&j| ys[ys.len() - j..] == xs[..j])
        .collect()
}

/// The linear system defining the weights of a forbidden set.
///
/// Row `i` encodes the equation for `W(index[i])`: moving every weight term
/// to the left side,
///
/// ```text
/// W(x_i) + sum z^(|x_i| - j) W(y) = -z^|x_i|
/// ```
#[derive(Clone, Debug)]
pub struct WeightSystem {
    index: Vec<Word>,
    matrix: Vec<Vec<RatFun>>,
    rhs: Vec<RatFun>,
}

impl WeightSystem {
    pub fn index(&self) -> &[Word] {
        &self.index
    }

    pub fn matrix(&self) -> &[Vec<RatFun>] {
        &self.matrix
    }

    pub fn rhs(&self) -> &[RatFun] {
        &self.rhs
    }

    pub fn solve(&self) -> Result<Vec<RatFun>, Error> {
        solve_linear_system(&self.matrix, &self.rhs)
    }
}

/// Build the weight system for a forbidden set. One row per word; a word
/// front-running another in several ways contributes one term per overlap.
pub fn build_weight_system(forbidden: &ForbiddenSet) -> WeightSystem {
    let words = forbidden.words();
    let m = words.len();
    let mut matrix = vec![vec![RatFun::zero(); m]; m];
    let mut rhs = Vec::with_capacity(m);
    for (i, x) in words.iter().enumerate() {
        matrix[i][i] = RatFun::one();
        for (l, y) in words.iter().enumerate() {
            for j in overlaps(x, y) {
                let term = RatFun::from_poly(Poly::monomial(rat(1), x.len() - j));
                matrix[i][l] = &matrix[i][l] + &term;
            }
        }
        rhs.push(RatFun::from_poly(Poly::monomial(rat(-1), x.len())));
    }
    WeightSystem { index: words.to_vec(), matrix, rhs }
}

/// Solve for every word's weight.
pub fn solve_weights(forbidden: &ForbiddenSet) -> Result<BTreeMap<Word, RatFun>, Error> {
    let system = build_weight_system(forbidden);
    let solution = system.solve()?;
    Ok(system.index.into_iter().zip(solution).collect())
}

/// Sum of all weights, `W(F)`.
pub fn weight_of_set(forbidden: &ForbiddenSet) -> Result<RatFun, Error> {
    let weights = solve_weights(forbidden)?;
    let mut total = RatFun::zero();
    for w in weights.values() {
        total = &total + w;
    }
    Ok(total)
}

/// The generating function `f(z) = 1 / (1 - nz - W(F))` counting words over
/// `{1, ..., n}` that avoid every forbidden word.
pub fn cluster_genfun(forbidden: &ForbiddenSet) -> Result<RatFun, Error> {
    let w = weight_of_set(forbidden)?;
    let linear = RatFun::from_poly(Poly::from_coeffs(vec![
        rat(1),
        rat(-i64::from(forbidden.alphabet_size())),
    ]));
    let denominator = &linear - &w;
    denominator.inv()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_frac;

    pub(crate) fn word(letters: &[u32]) -> Word {
        Word::new(letters.to_vec()).unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(Poly::from_int_coeffs(num), Poly::from_int_coeffs(den)).unwrap()
    }

    /// The first worked example: {(1,2,1), (4,1), (2,3,4)} over 4 letters.
    fn example_one() -> ForbiddenSet {
        ForbiddenSet::new(4, vec![word(&[1, 2, 1]), word(&[4, 1]), word(&[2, 3, 4])]).unwrap()
    }

    /// The second worked example: {(1,2,3), (1,1,1)} over 3 letters.
    fn example_two() -> ForbiddenSet {
        ForbiddenSet::new(3, vec![word(&[1, 2, 3]), word(&[1, 1, 1])]).unwrap()
    }

    #[test]
    fn overlaps_simple() {
        assert_eq!(overlaps(&word(&[3, 2, 1]), &word(&[1, 2, 3, 2])), vec![2]);
    }

    #[test]
    fn overlaps_multiple() {
        assert_eq!(
            overlaps(&word(&[3, 2, 3, 1, 2]), &word(&[1, 2, 3, 2, 3])),
            vec![1, 3]
        );
    }

    #[test]
    fn overlaps_self_excludes_full_length() {
        let w = word(&[1, 1, 1]);
        assert_eq!(overlaps(&w, &w), vec![1, 2]);
    }

    #[test]
    fn overlaps_are_genuine_matches() {
        let x = word(&[2, 3, 1, 2]);
        let y = word(&[1, 2, 2, 3]);
        for j in overlaps(&x, &y) {
            assert_eq!(y.letters()[y.len() - j..], x.letters()[..j]);
        }
    }

    #[test]
    fn weight_system_rows_of_example_one() {
        let system = build_weight_system(&example_one());
        // Sorted order: (4,1), (1,2,1), (2,3,4).
        assert_eq!(system.index(), &[word(&[4, 1]), word(&[1, 2, 1]), word(&[2, 3, 4])]);
        let z = |k: usize| RatFun::from_poly(Poly::monomial(rat(1), k));
        let one = RatFun::one();
        // W(4,1) + z W(2,3,4) = -z^2
        assert_eq!(system.matrix()[0], vec![one.clone(), RatFun::zero(), z(1)]);
        // (1 + z^2) W(1,2,1) + z^2 W(4,1) = -z^3
        assert_eq!(system.matrix()[1][0], z(2));
        assert_eq!(system.matrix()[1][1], &one + &z(2));
        assert_eq!(system.matrix()[1][2], RatFun::zero());
        // W(2,3,4) = -z^3
        assert_eq!(system.matrix()[2], vec![RatFun::zero(), RatFun::zero(), one]);
        assert_eq!(
            system.rhs(),
            &[
                RatFun::from_poly(Poly::from_int_coeffs(&[0, 0, -1])),
                RatFun::from_poly(Poly::from_int_coeffs(&[0, 0, 0, -1])),
                RatFun::from_poly(Poly::from_int_coeffs(&[0, 0, 0, -1])),
            ]
        );
    }

    #[test]
    fn weight_system_of_lone_word_without_self_overlap() {
        let f = ForbiddenSet::new(2, vec![word(&[1, 2])]).unwrap();
        let system = build_weight_system(&f);
        assert_eq!(system.matrix(), &[vec![RatFun::one()]]);
        assert_eq!(system.rhs(), &[RatFun::from_poly(Poly::from_int_coeffs(&[0, 0, -1]))]);
        let weights = solve_weights(&f).unwrap();
        assert_eq!(weights[&word(&[1, 2])], rf(&[0, 0, -1], &[1]));
    }

    #[test]
    fn weight_system_of_triple_repeat() {
        let f = ForbiddenSet::new(3, vec![word(&[1, 1, 1])]).unwrap();
        let system = build_weight_system(&f);
        // W = -z^3 - z^2 W - z W, i.e. (1 + z + z^2) W = -z^3.
        assert_eq!(
            system.matrix(),
            &[vec![RatFun::from_poly(Poly::from_int_coeffs(&[1, 1, 1]))]]
        );
    }

    #[test]
    fn weights_of_example_one() {
        let weights = solve_weights(&example_one()).unwrap();
        assert_eq!(weights[&word(&[4, 1])], rf(&[0, 0, -1, 0, 1], &[1]));
        assert_eq!(weights[&word(&[1, 2, 1])], rf(&[0, 0, 0, -1, 1, 0, -1], &[1, 0, 1]));
        assert_eq!(weights[&word(&[2, 3, 4])], rf(&[0, 0, 0, -1], &[1]));
    }

    #[test]
    fn weights_of_example_two() {
        let weights = solve_weights(&example_two()).unwrap();
        assert_eq!(weights[&word(&[1, 1, 1])], rf(&[0, 0, 0, -1], &[1, 1, 1]));
        assert_eq!(weights[&word(&[1, 2, 3])], rf(&[0, 0, 0, -1, -1], &[1, 1, 1]));
    }

    #[test]
    fn genfun_of_example_one() {
        let f = cluster_genfun(&example_one()).unwrap();
        assert_eq!(f, rf(&[1, 0, 1], &[1, -4, 2, -2, -1, 1]));
    }

    #[test]
    fn genfun_of_example_two() {
        let f = cluster_genfun(&example_two()).unwrap();
        assert_eq!(f, rf(&[1, 1, 1], &[1, -2, -2, -1, 1]));
    }

    #[test]
    fn genfun_of_empty_set_is_geometric() {
        let f = cluster_genfun(&ForbiddenSet::empty(7)).unwrap();
        assert_eq!(f, rf(&[1], &[1, -7]));
    }

    #[test]
    fn genfun_constant_term_and_linear_term() {
        let f = cluster_genfun(&example_one()).unwrap();
        let s = f.series(1).unwrap();
        assert_eq!(s.coeffs()[0], rat(1));
        assert_eq!(s.coeffs()[1], rat(4));
    }

    #[test]
    fn smirnov_words_match_closed_form() {
        // Forbidding every doubled letter (a,a) leaves the words with no two
        // equal adjacent letters: n(n-1)^(s-1) of length s >= 1, with
        // generating function (1+z)/(1-(n-1)z).
        for n in 2..=4u32 {
            let words = (1..=n).map(|a| word(&[a, a])).collect();
            let f = ForbiddenSet::new(n, words).unwrap();
            let gf = cluster_genfun(&f).unwrap();
            assert_eq!(gf, rf(&[1, 1], &[1, -(i64::from(n) - 1)]));
            let s = gf.series(6).unwrap();
            for len in 1..=6usize {
                let expect = i64::from(n) * i64::from(n - 1).pow(len as u32 - 1);
                assert_eq!(s.coeffs()[len], rat(expect), "n={n} len={len}");
            }
        }
    }

    #[test]
    fn weights_satisfy_their_defining_equations() {
        for forbidden in [example_one(), example_two()] {
            let weights = solve_weights(&forbidden).unwrap();
            for x in forbidden.words() {
                let mut expect = RatFun::from_poly(Poly::monomial(rat(-1), x.len()));
                for y in forbidden.words() {
                    for j in overlaps(x, y) {
                        let term = RatFun::from_poly(Poly::monomial(rat(-1), x.len() - j));
                        expect = &expect + &(&term * &weights[y]);
                    }
                }
                assert_eq!(weights[x], expect, "weight equation fails for {x}");
            }
        }
    }

    #[test]
    fn validate_flags_single_letter_words() {
        let diags = validate_forbidden_set(3, &[word(&[1]), word(&[1, 2])]);
        assert!(diags
            .iter()
            .any(|d| d.severity == Severity::Error && d.message.contains("length 1")));
        assert!(ForbiddenSet::new(3, vec![word(&[1]), word(&[1, 2])]).is_err());
    }

    #[test]
    fn validate_warns_on_subword_containment() {
        let diags = validate_forbidden_set(4, &[word(&[1, 2]), word(&[3, 1, 2, 4])]);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].severity, Severity::Warning);
        // Still constructible.
        assert!(ForbiddenSet::new(4, vec![word(&[1, 2]), word(&[3, 1, 2, 4])]).is_ok());
    }

    #[test]
    fn validate_accepts_clean_sets() {
        assert!(validate_forbidden_set(3, &[word(&[1, 2, 3])]).is_empty());
    }

    #[test]
    fn validate_rejects_out_of_range_letters() {
        let diags = validate_forbidden_set(2, &[word(&[1, 3])]);
        assert!(diags.iter().any(|d| d.severity == Severity::Error));
    }

    #[test]
    fn genfun_evaluates_exactly() {
        // f(1/4) for the first worked example: num(1/4) = 17/16,
        // den(1/4) = 93/1024, so f(1/4) = 1088/93.
        let f = cluster_genfun(&example_one()).unwrap();
        assert_eq!(f.eval(&rat_frac(1, 4)).unwrap(), rat_frac(1088, 93));
    }
}
