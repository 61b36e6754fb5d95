//! Codes: declared parameters plus an ordered list of words.

use crate::error::Error;
use crate::word::Codeword;

/// A code of length `n` with declared minimum distance `d` and weight `w`.
///
/// The declaration is a claim, not an invariant: words of the wrong weight,
/// duplicates and close pairs are all representable, and
/// [`crate::verify::verify_code`] reports them. Construction only enforces
/// structure: `n` in `1..=64` and every word of length exactly `n`.
///
/// `w == 0` declares a mixed-weight code; the verifier skips the weight
/// check for it. Word order is preserved everywhere, so files and search
/// results round-trip without reordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    n: u32,
    d: u32,
    w: u32,
    words: Vec<Codeword>,
}

impl Code {
    /// Builds a code after checking `n` and the word lengths.
    pub fn new(n: u32, d: u32, w: u32, words: Vec<Codeword>) -> Result<Self, Error> {
        if !(1..=64).contains(&n) {
            return Err(Error::UnsupportedLength { n: n as usize });
        }
        for word in &words {
            if word.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: word.len(),
                });
            }
        }
        Ok(Code { n, d, w, words })
    }

    /// The code with no words, useful as a seed for greedy growth.
    pub fn empty(n: u32, d: u32, w: u32) -> Result<Self, Error> {
        Code::new(n, d, w, Vec::new())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn w(&self) -> u32 {
        self.w
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }
}

// ============================================================================
// tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_reads_back() {
        let words = vec![
            Codeword::from_support(&[0, 1, 2], 7).unwrap(),
            Codeword::from_support(&[0, 3, 4], 7).unwrap(),
        ];
        let c = Code::new(7, 4, 3, words.clone()).unwrap();
        assert_eq!((c.n(), c.d(), c.w()), (7, 4, 3));
        assert_eq!(c.len(), 2);
        assert_eq!(c.words(), &words[..]);
        assert!(!c.is_empty());
        assert!(Code::empty(7, 4, 3).unwrap().is_empty());
    }

    #[test]
    fn rejects_structural_mistakes() {
        assert_eq!(
            Code::new(0, 4, 3, vec![]),
            Err(Error::UnsupportedLength { n: 0 })
        );
        assert_eq!(
            Code::new(65, 4, 3, vec![]),
            Err(Error::UnsupportedLength { n: 65 })
        );
        let short = Codeword::from_support(&[0], 6).unwrap();
        assert_eq!(
            Code::new(7, 4, 3, vec![short]),
            Err(Error::LengthMismatch { left: 7, right: 6 })
        );
    }

    #[test]
    fn declared_parameters_are_not_checked() {
        let heavy = Codeword::from_support(&[0, 1, 2, 3], 7).unwrap();
        let c = Code::new(7, 4, 3, vec![heavy, heavy]).unwrap();
        assert_eq!(c.len(), 2);
    }
}
