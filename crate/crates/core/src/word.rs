//! Bitmask codewords and the bit-level operations everything else builds on.

use crate::error::Error;

/// All-ones mask over the low `n` bits. `n` must be in `1..=64`.
pub(crate) fn low_mask(n: u32) -> u64 {
    debug_assert!((1..=64).contains(&n));
    u64::MAX >> (64 - n)
}

/// A binary word of length `n <= 64`, stored as a single `u64` bitmask.
///
/// Bit `i` of the mask holds coordinate `i`, for `i` in `0..n`. Bits at and
/// above `n` are always zero. Equality, ordering and hashing use the bitmask
/// alone; the length is carried for range checks and is expected to be
/// uniform inside any one collection of words.
#[derive(Clone, Copy, Debug)]
pub struct Codeword {
    bits: u64,
    n: u8,
}

impl PartialEq for Codeword {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Codeword {}

impl std::hash::Hash for Codeword {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Codeword {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl Codeword {
    /// Wraps a raw bitmask as a word of length `n`.
    ///
    /// Fails if `n` is outside `1..=64` or `bits` has a bit set at or above
    /// position `n`.
    pub fn from_bits(bits: u64, n: u32) -> Result<Self, Error> {
        if !(1..=64).contains(&n) {
            return Err(Error::UnsupportedLength { n: n as usize });
        }
        if bits & !low_mask(n) != 0 {
            return Err(Error::IndexOutOfRange {
                index: 63 - bits.leading_zeros(),
                n,
            });
        }
        Ok(Codeword { bits, n: n as u8 })
    }

    /// The all-zero word of length `n`.
    pub fn zero(n: u32) -> Result<Self, Error> {
        Self::from_bits(0, n)
    }

    /// Builds a word of length `n` from a strictly increasing support listing.
    pub fn from_support(support: &[u32], n: u32) -> Result<Self, Error> {
        if !(1..=64).contains(&n) {
            return Err(Error::UnsupportedLength { n: n as usize });
        }
        let mut bits = 0u64;
        let mut prev: Option<u32> = None;
        for &idx in support {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, n });
            }
            if prev.is_some_and(|p| idx <= p) {
                return Err(Error::IndicesNotIncreasing { index: idx });
            }
            prev = Some(idx);
            bits |= 1 << idx;
        }
        Ok(Codeword { bits, n: n as u8 })
    }

    /// The raw bitmask.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The word length `n`.
    pub fn len(&self) -> u32 {
        self.n as u32
    }

    /// True only for zero-length words, which cannot be constructed.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Whether coordinate `index` is set. Out-of-range indices read as zero.
    pub fn contains(&self, index: u32) -> bool {
        index < 64 && self.bits >> index & 1 == 1
    }

    /// The support as a strictly increasing index listing.
    pub fn support(&self) -> Vec<u32> {
        let mut rest = self.bits;
        let mut out = Vec::with_capacity(rest.count_ones() as usize);
        while rest != 0 {
            out.push(rest.trailing_zeros());
            rest &= rest - 1;
        }
        out
    }

    /// The word with coordinate `out_index` cleared and `in_index` set.
    ///
    /// This is the annealer's move: it preserves weight exactly. Fails if
    /// either index is out of range, `out_index` is not currently set, or
    /// `in_index` already is.
    pub fn swap_move(&self, out_index: u32, in_index: u32) -> Result<Self, Error> {
        let n = self.len();
        if out_index >= n {
            return Err(Error::IndexOutOfRange {
                index: out_index,
                n,
            });
        }
        if in_index >= n {
            return Err(Error::IndexOutOfRange { index: in_index, n });
        }
        if !self.contains(out_index) {
            return Err(Error::BitNotSet { index: out_index });
        }
        if self.contains(in_index) {
            return Err(Error::BitAlreadySet { index: in_index });
        }
        Ok(Codeword {
            bits: self.bits & !(1 << out_index) | 1 << in_index,
            n: self.n,
        })
    }
}

/// Checks that two words have the same length, then hands back that length.
fn common_len(x: &Codeword, y: &Codeword) -> Result<u32, Error> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.len())
}

/// Number of coordinates where the two words differ.
pub fn hamming_distance(x: &Codeword, y: &Codeword) -> Result<u32, Error> {
    common_len(x, y)?;
    Ok((x.bits ^ y.bits).count_ones())
}

/// Number of coordinates set in both words.
///
/// For words of equal weight `w` the Hamming distance is `2 * (w - i)` where
/// `i` is this intersection size, so a minimum-distance requirement turns
/// into a maximum-intersection requirement.
pub fn intersection_size(x: &Codeword, y: &Codeword) -> Result<u32, Error> {
    common_len(x, y)?;
    Ok((x.bits & y.bits).count_ones())
}

/// Iterator over all bitmasks of length `n` with exactly `w` bits set, in
/// increasing numeric order.
///
/// Yields nothing when `w > n`. For `w == 0` the single mask is zero.
pub fn weight_masks(n: u32, w: u32) -> WeightMasks {
    assert!((1..=64).contains(&n), "length {n} outside 1..=64");
    let current = if w > n {
        None
    } else if w == 0 {
        Some(0)
    } else {
        Some(low_mask(w))
    };
    WeightMasks {
        current,
        limit: low_mask(n),
    }
}

pub struct WeightMasks {
    current: Option<u64>,
    limit: u64,
}

impl Iterator for WeightMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.current?;
        // Gosper's hack: the next mask with the same popcount. The ripple add
        // overflows exactly when `cur` is the last mask of its weight in 64
        // bits, which also ends the walk.
        self.current = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur.wrapping_add(low);
            if ripple < cur {
                None
            } else {
                let next = (((ripple ^ cur) >> 2) / low) | ripple;
                (next <= self.limit).then_some(next)
            }
        };
        Some(cur)
    }
}

// ============================================================================
// tests
// ============================================================================
