//! Exhaustive verification: every claim a `Code` makes is checked pair by
//! pair and reported, never silently trusted.

use crate::code::Code;
use crate::error::Error;
use crate::word::{hamming_distance, Codeword};

/// Everything wrong with a code, plus its measured minimum distance.
///
/// Index pairs are `(i, j)` with `i < j` into the code's word list, sorted
/// ascending. `min_distance` is `None` for codes with fewer than two words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictReport {
    /// Pairs at Hamming distance below the declared `d`, with that distance.
    pub conflicts: Vec<(usize, usize, u32)>,
    /// Words whose weight differs from the declared `w`, with their weight.
    /// Empty when the code declares mixed weight (`w == 0`).
    pub weight_violations: Vec<(usize, u32)>,
    /// Pairs of identical words.
    pub duplicate_pairs: Vec<(usize, usize)>,
    /// Smallest pairwise distance over the whole code.
    pub min_distance: Option<u32>,
}

impl ConflictReport {
    /// True when nothing was flagged: the code is what it claims to be.
    pub fn is_valid(&self) -> bool {
        self.conflicts.is_empty()
            && self.weight_violations.is_empty()
            && self.duplicate_pairs.is_empty()
    }
}

/// Checks every pair of words and every declared parameter of `code`.
///
/// Runs in `O(len^2)` word comparisons, each a few bit operations.
pub fn verify_code(code: &Code) -> ConflictReport {
    let words = code.words();
    let mut report = ConflictReport {
        conflicts: Vec::new(),
        weight_violations: Vec::new(),
        duplicate_pairs: Vec::new(),
        min_distance: None,
    };
    if code.w() > 0 {
        for (i, word) in words.iter().enumerate() {
            if word.weight() != code.w() {
                report.weight_violations.push((i, word.weight()));
            }
        }
    }
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            // Uniform length is a Code invariant, so distance cannot fail.
            let dist = hamming_distance(&words[i], &words[j]).unwrap();
            if dist == 0 {
                report.duplicate_pairs.push((i, j));
            }
            if dist < code.d() {
                report.conflicts.push((i, j, dist));
            }
            if report.min_distance.is_none_or(|m| dist < m) {
                report.min_distance = Some(dist);
            }
        }
    }
    report
}

/// Smallest pairwise Hamming distance of a code.
///
/// Fails with [`Error::TooFewWords`] when the code has fewer than two words,
/// since the minimum over no pairs is undefined.
pub fn min_distance(code: &Code) -> Result<u32, Error> {
    if code.len() < 2 {
        return Err(Error::TooFewWords {
            have: code.len(),
            need: 2,
        });
    }
    let words = code.words();
    let mut min = u32::MAX;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            min = min.min(hamming_distance(&words[i], &words[j]).unwrap());
        }
    }
    Ok(min)
}

/// The weight distribution of a word list: `coeffs[k]` counts words of
/// weight `k`, for `k` in `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub coeffs: Vec<u64>,
}

impl WeightEnumerator {
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

/// Tallies word weights. Fails if `n` is out of range or any word has a
/// different length.
pub fn weight_enumerator(words: &[Codeword], n: u32) -> Result<WeightEnumerator, Error> {
    if !(1..=64).contains(&n) {
        return Err(Error::UnsupportedLength { n: n as usize });
    }
    let mut coeffs = vec![0u64; n as usize + 1];
    for word in words {
        if word.len() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: word.len(),
            });
        }
        coeffs[word.weight() as usize] += 1;
    }
    Ok(WeightEnumerator { coeffs })
}

// ============================================================================
// tests
// ============================================================================
