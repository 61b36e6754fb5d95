//! Deterministic constructions: the Z4 octacode, its binary Gray image (the
//! Nordstrom-Robinson code), and the classical length/weight surgeries.

use crate::code::Code;
use crate::error::Error;
use crate::word::{low_mask, Codeword};

/// A word over Z4, one digit per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z4Word {
    digits: Vec<u8>,
}

impl Z4Word {
    /// Wraps a digit vector, rejecting anything not in `0..=3`.
    pub fn new(digits: Vec<u8>) -> Result<Self, Error> {
        if digits.iter().any(|&d| d > 3) {
            return Err(Error::InvalidParams("Z4 digits must be in 0..=3"));
        }
        Ok(Z4Word { digits })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit-wise sum mod 4. Lengths must already agree.
    pub fn add(&self, other: &Z4Word) -> Z4Word {
        debug_assert_eq!(self.len(), other.len());
        let digits = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(a, b)| (a + b) & 3)
            .collect();
        Z4Word { digits }
    }

    /// Lee weight: each digit contributes `min(d, 4 - d)`.
    pub fn lee_weight(&self) -> u32 {
        self.digits.iter().map(|&d| d.min(4 - d) as u32).sum()
    }
}

/// Generator rows for the octacode, the self-dual Z4 code of length 8.
///
/// The first seven coordinates carry cyclic shifts of `3 1 2 1`, the
/// coefficients of `x^3 + 2x^2 + x + 3` (the Hensel lift of `x^3 + x + 1`
/// to Z4); the last coordinate extends each row so its digits sum to 0
/// mod 4.
const OCTACODE_GENERATORS: [[u8; 8]; 4] = [
    [3, 1, 2, 1, 0, 0, 0, 1],
    [0, 3, 1, 2, 1, 0, 0, 1],
    [0, 0, 3, 1, 2, 1, 0, 1],
    [0, 0, 0, 3, 1, 2, 1, 1],
];

/// All 256 words of the octacode, ordered by their coefficient vector
/// `(c0, c1, c2, c3)` with `c3` fastest.
///
/// Checks internally that the span really is a group of 256 distinct words
/// closed under addition with minimum Lee weight 6, and panics otherwise;
/// the generator rows are data, and this is the guard against mistyping
/// them.
pub fn octacode_codewords() -> Vec<Z4Word> {
    let rows: Vec<Z4Word> = OCTACODE_GENERATORS
        .iter()
        .map(|r| Z4Word::new(r.to_vec()).unwrap())
        .collect();
    let zero = Z4Word::new(vec![0; 8]).unwrap();
    let mut words = Vec::with_capacity(256);
    for c0 in 0..4u8 {
        for c1 in 0..4u8 {
            for c2 in 0..4u8 {
                for c3 in 0..4u8 {
                    let mut word = zero.clone();
                    for (coeff, row) in [c0, c1, c2, c3].into_iter().zip(&rows) {
                        for _ in 0..coeff {
                            word = word.add(row);
                        }
                    }
                    words.push(word);
                }
            }
        }
    }

    // Packs a word into 16 bits, two per digit, for the closure check.
    let pack = |w: &Z4Word| -> u16 {
        w.digits()
            .iter()
            .enumerate()
            .fold(0u16, |acc, (i, &d)| acc | (d as u16) << (2 * i))
    };
    let mut packed: Vec<u16> = words.iter().map(pack).collect();
    packed.sort_unstable();
    assert!(
        packed.windows(2).all(|p| p[0] != p[1]),
        "octacode span collapsed: generators are not independent"
    );
    for x in &words {
        for y in &words {
            assert!(
                packed.binary_search(&pack(&x.add(y))).is_ok(),
                "octacode span is not closed under addition"
            );
        }
    }
    let min_lee = words
        .iter()
        .filter(|w| w.digits().iter().any(|&d| d != 0))
        .map(Z4Word::lee_weight)
        .min();
    assert_eq!(min_lee, Some(6), "octacode minimum Lee weight is off");
    words
}

/// Gray image of a Z4 word: digit `d` at coordinate `i` becomes two bits at
/// positions `2i` and `2i + 1`, with `0 -> 00`, `1 -> 01`, `2 -> 11`,
/// `3 -> 10` (bit `2i` listed first).
///
/// The map is an isometry from Lee distance to Hamming distance. Fails when
/// the doubled length leaves `1..=64`.
pub fn gray_map(word: &Z4Word) -> Result<Codeword, Error> {
    let n = 2 * word.len();
    if !(1..=64).contains(&n) {
        return Err(Error::UnsupportedLength { n });
    }
    let mut bits = 0u64;
    for (i, &d) in word.digits().iter().enumerate() {
        let pair = match d {
            0 => 0b00,
            1 => 0b01,
            2 => 0b11,
            _ => 0b10,
        };
        bits |= pair << (2 * i);
    }
    Codeword::from_bits(bits, n as u32)
}

/// Expected weight distribution of the Nordstrom-Robinson code.
const NR_ENUMERATOR: [(usize, u64); 5] = [(0, 1), (6, 112), (8, 30), (10, 112), (16, 1)];

/// The Nordstrom-Robinson code: the Gray image of the octacode, a binary
/// `(16, 256, 6)` code. Mixed weight, so the declared `w` is 0.
///
/// Panics if the image's weight enumerator is not
/// `1 + 112 x^6 + 30 x^8 + 112 x^10 + x^16`; as with the octacode itself,
/// the check guards the embedded generator data.
pub fn nordstrom_robinson() -> Code {
    let words: Vec<Codeword> = octacode_codewords()
        .iter()
        .map(|z| gray_map(z).unwrap())
        .collect();
    let enumerator = crate::verify::weight_enumerator(&words, 16).unwrap();
    for (k, count) in (0..).zip(enumerator.coeffs.iter().copied()) {
        let expected = NR_ENUMERATOR
            .iter()
            .find(|&&(w, _)| w == k)
            .map_or(0, |&(_, c)| c);
        assert_eq!(
            count, expected,
            "Nordstrom-Robinson weight enumerator is off at weight {k}"
        );
    }
    Code::new(16, 6, 0, words).unwrap()
}

/// The subcode of all words of weight exactly `w`, in original order.
///
/// The result declares the same `n` and `d` with the new `w`.
pub fn extract_weight(code: &Code, w: u32) -> Code {
    let words: Vec<Codeword> = code
        .words()
        .iter()
        .copied()
        .filter(|word| word.weight() == w)
        .collect();
    Code::new(code.n(), code.d(), w, words).unwrap()
}

/// Appends a zero coordinate to every word, taking `n` to `n + 1`.
///
/// Distances are unchanged, so the declared `d` and `w` carry over. Fails
/// when the code is already at length 64.
pub fn pad_extend(code: &Code) -> Result<Code, Error> {
    if code.n() == 64 {
        return Err(Error::UnsupportedLength { n: 65 });
    }
    let n = code.n() + 1;
    let words: Vec<Codeword> = code
        .words()
        .iter()
        .map(|word| Codeword::from_bits(word.bits(), n).unwrap())
        .collect();
    Code::new(n, code.d(), code.w(), words)
}

/// Shortens at `coord`: keeps the words whose bit there equals `bit`, then
/// deletes the coordinate.
///
/// Distances between surviving words are unchanged, so the declared `d`
/// carries over; the declared weight drops by one when `bit` is set, and a
/// mixed-weight declaration (`w == 0`) stays mixed. Fails when `coord` is
/// out of range or the code has length 1 (nothing would remain).
pub fn shorten(code: &Code, coord: u32, bit: bool) -> Result<Code, Error> {
    if coord >= code.n() {
        return Err(Error::IndexOutOfRange {
            index: coord,
            n: code.n(),
        });
    }
    if code.n() == 1 {
        return Err(Error::UnsupportedLength { n: 0 });
    }
    let n = code.n() - 1;
    let keep_low = if coord == 0 { 0 } else { low_mask(coord) };
    let words: Vec<Codeword> = code
        .words()
        .iter()
        .filter(|word| word.contains(coord) == bit)
        .map(|word| {
            let bits = (word.bits() & keep_low) | (word.bits() >> (coord + 1)) << coord;
            Codeword::from_bits(bits, n).unwrap()
        })
        .collect();
    let w = match (code.w(), bit) {
        (0, _) => 0,
        (w, true) => w - 1,
        (w, false) => w,
    };
    Code::new(n, code.d(), w, words)
}

// ============================================================================
// tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{min_distance, verify_code, weight_enumerator};
    use crate::word::hamming_distance;

    #[test]
    fn z4_words_behave() {
        let a = Z4Word::new(vec![3, 1, 2, 1, 0, 0, 0, 1]).unwrap();
        assert_eq!(a.lee_weight(), 6);
        let sum = a.add(&a);
        assert_eq!(sum.digits(), &[2, 2, 0, 2, 0, 0, 0, 2]);
        assert_eq!(sum.lee_weight(), 8);
        assert!(Z4Word::new(vec![0, 4]).is_err());
    }

    #[test]
    fn octacode_is_the_expected_group() {
        let words = octacode_codewords();
        assert_eq!(words.len(), 256);
        assert!(words[0].digits().iter().all(|&d| d == 0));
        // Coefficient order: word 1 is the last generator row.
        assert_eq!(words[1].digits(), &[0, 0, 0, 3, 1, 2, 1, 1]);
        let min_lee = words.iter().skip(1).map(Z4Word::lee_weight).min().unwrap();
        assert_eq!(min_lee, 6);
        // Every row sums to 0 mod 4, hence so does every word in the span.
        for w in &words {
            assert_eq!(w.digits().iter().map(|&d| d as u32).sum::<u32>() % 4, 0);
        }
    }

    #[test]
    fn gray_map_pairs_and_isometry() {
        let z = Z4Word::new(vec![0, 1, 2, 3]).unwrap();
        let g = gray_map(&z).unwrap();
        // Digit i lands at bits (2i, 2i+1): digit 1 sets bit 2, digit 2
        // sets bits 4 and 5, digit 3 sets bit 7.
        assert_eq!(g.bits(), 0b1011_0100);
        assert_eq!(g.support(), vec![2, 4, 5, 7]);
        assert_eq!(g.len(), 8);
        assert_eq!(g.weight(), z.lee_weight());

        let too_long = Z4Word::new(vec![0; 33]).unwrap();
        assert_eq!(gray_map(&too_long), Err(Error::UnsupportedLength { n: 66 }));
    }

    #[test]
    fn gray_weight_equals_lee_weight_on_octacode() {
        for z in octacode_codewords() {
            assert_eq!(gray_map(&z).unwrap().weight(), z.lee_weight());
        }
    }

    #[test]
    fn nordstrom_robinson_parameters() {
        let nr = nordstrom_robinson();
        assert_eq!((nr.n(), nr.d(), nr.w()), (16, 6, 0));
        assert_eq!(nr.len(), 256);
        assert_eq!(min_distance(&nr), Ok(6));
        assert!(verify_code(&nr).is_valid());
    }

    #[test]
    fn extract_weight_six_gives_the_constant_weight_code() {
        let sub = extract_weight(&nordstrom_robinson(), 6);
        assert_eq!(sub.len(), 112);
        assert_eq!((sub.n(), sub.d(), sub.w()), (16, 6, 6));
        let r = verify_code(&sub);
        assert!(r.is_valid());
        assert_eq!(r.min_distance, Some(6));
    }

    #[test]
    fn extract_weight_other_slices() {
        let nr = nordstrom_robinson();
        assert_eq!(extract_weight(&nr, 8).len(), 30);
        assert_eq!(extract_weight(&nr, 0).len(), 1);
        assert_eq!(extract_weight(&nr, 16).len(), 1);
        assert_eq!(extract_weight(&nr, 7).len(), 0);
    }

    #[test]
    fn pad_appends_a_zero_coordinate() {
        let sub = extract_weight(&nordstrom_robinson(), 6);
        let padded = pad_extend(&sub).unwrap();
        assert_eq!((padded.n(), padded.d(), padded.w()), (17, 6, 6));
        assert_eq!(padded.len(), 112);
        for (a, b) in sub.words().iter().zip(padded.words()) {
            assert_eq!(a.bits(), b.bits());
        }
        assert_eq!(min_distance(&padded), Ok(6));

        let wide = Code::new(64, 2, 1, vec![]).unwrap();
        assert_eq!(pad_extend(&wide), Err(Error::UnsupportedLength { n: 65 }));
    }

    #[test]
    fn shorten_keeps_matching_words_and_drops_the_coordinate() {
        let words = vec![
            Codeword::from_support(&[0, 2], 4).unwrap(),
            Codeword::from_support(&[1, 3], 4).unwrap(),
            Codeword::from_support(&[2, 3], 4).unwrap(),
        ];
        let c = Code::new(4, 2, 2, words).unwrap();

        let on = shorten(&c, 2, true).unwrap();
        assert_eq!((on.n(), on.d(), on.w()), (3, 2, 1));
        let sups: Vec<Vec<u32>> = on.words().iter().map(|w| w.support()).collect();
        assert_eq!(sups, vec![vec![0], vec![2]]);

        let off = shorten(&c, 2, false).unwrap();
        assert_eq!((off.n(), off.d(), off.w()), (3, 2, 2));
        let sups: Vec<Vec<u32>> = off.words().iter().map(|w| w.support()).collect();
        assert_eq!(sups, vec![vec![1, 2]]);

        assert_eq!(
            shorten(&c, 4, true),
            Err(Error::IndexOutOfRange { index: 4, n: 4 })
        );
    }

    #[test]
    fn shorten_at_coordinate_zero() {
        let words = vec![
            Codeword::from_support(&[0, 1], 3).unwrap(),
            Codeword::from_support(&[1, 2], 3).unwrap(),
        ];
        let c = Code::new(3, 2, 2, words).unwrap();
        let s = shorten(&c, 0, true).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.words()[0].support(), vec![0]);
    }

    #[test]
    fn shorten_preserves_pairwise_distances() {
        let nr = nordstrom_robinson();
        let s = shorten(&nr, 15, false).unwrap();
        assert_eq!(s.n(), 15);
        let survivors: Vec<_> = nr.words().iter().filter(|w| !w.contains(15)).collect();
        assert_eq!(s.len(), survivors.len());
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                assert_eq!(
                    hamming_distance(&s.words()[i], &s.words()[j]).unwrap(),
                    hamming_distance(survivors[i], survivors[j]).unwrap()
                );
            }
        }
    }

    #[test]
    fn padded_nr_subcode_still_verifies() {
        let padded = pad_extend(&extract_weight(&nordstrom_robinson(), 6)).unwrap();
        let e = weight_enumerator(padded.words(), 17).unwrap();
        assert_eq!(e.coeffs[6], 112);
        assert_eq!(e.total(), 112);
        assert!(verify_code(&padded).is_valid());
    }
}
