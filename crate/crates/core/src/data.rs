//! The embedded record code: 113 words of length 17, weight 6, minimum
//! distance 6. A copy ships as `data/a17-6-6-113.txt` in the repository
//! root; the two must stay byte-for-byte in sync.

use crate::code::Code;
use crate::word::Codeword;

/// Supports of the 113 record words, each strictly increasing, listed in
/// the order they were found. Do not edit: [`record_code`] checksums this
/// table on every call.
const RECORD_SUPPORTS: [[u8; 6]; 113] = [
    [0, 1, 2, 3, 6, 15],
    [0, 1, 2, 4, 11, 16],
    [0, 1, 2, 7, 8, 9],
    [0, 1, 2, 10, 12, 13],
    [0, 1, 3, 4, 8, 10],
    [0, 1, 3, 5, 7, 12],
    [0, 1, 3, 9, 13, 16],
    [0, 1, 4, 6, 7, 13],
    [0, 1, 5, 6, 10, 16],
    [0, 1, 5, 8, 11, 13],
    [0, 1, 6, 9, 11, 12],
    [0, 1, 7, 10, 11, 15],
    [0, 1, 8, 12, 14, 15],
    [0, 2, 3, 4, 9, 12],
    [0, 2, 3, 5, 8, 16],
    [0, 2, 3, 7, 11, 13],
    [0, 2, 4, 5, 7, 10],
    [0, 2, 4, 8, 13, 15],
    [0, 2, 5, 6, 9, 13],
    [0, 2, 5, 11, 14, 15],
    [0, 2, 6, 7, 12, 16],
    [0, 2, 6, 8, 10, 11],
    [0, 3, 4, 5, 6, 11],
    [0, 3, 4, 7, 14, 16],
    [0, 3, 5, 10, 13, 15],
    [0, 3, 6, 7, 9, 10],
    [0, 3, 6, 8, 12, 13],
    [0, 3, 8, 9, 11, 15],
    [0, 3, 10, 11, 12, 14],
    [0, 4, 5, 12, 13, 14],
    [0, 4, 6, 8, 9, 16],
    [0, 4, 6, 10, 12, 15],
    [0, 4, 7, 8, 11, 12],
    [0, 4, 9, 10, 11, 13],
    [0, 5, 6, 7, 8, 15],
    [0, 5, 8, 9, 10, 14],
    [0, 5, 9, 12, 15, 16],
    [0, 6, 11, 13, 14, 16],
    [0, 7, 8, 10, 13, 16],
    [0, 7, 9, 13, 14, 15],
    [1, 2, 3, 4, 5, 13],
    [1, 2, 3, 7, 10, 14],
    [1, 2, 3, 8, 11, 12],
    [1, 2, 4, 6, 9, 10],
    [1, 2, 4, 7, 12, 15],
    [1, 2, 5, 6, 7, 11],
    [1, 2, 5, 8, 10, 15],
    [1, 2, 5, 12, 14, 16],
    [1, 2, 6, 8, 13, 16],
    [1, 2, 9, 11, 13, 15],
    [1, 3, 4, 6, 12, 16],
    [1, 3, 4, 7, 9, 11],
    [1, 3, 5, 6, 8, 14],
    [1, 3, 5, 11, 15, 16],
    [1, 3, 6, 10, 11, 13],
    [1, 3, 7, 8, 13, 15],
    [1, 3, 9, 10, 12, 15],
    [1, 4, 5, 7, 8, 16],
    [1, 4, 5, 9, 14, 15],
    [1, 4, 5, 10, 11, 12],
    [1, 4, 6, 8, 11, 15],
    [1, 4, 8, 9, 12, 13],
    [1, 4, 10, 13, 14, 16],
    [1, 5, 6, 12, 13, 15],
    [1, 5, 7, 9, 10, 13],
    [1, 6, 7, 8, 10, 12],
    [1, 6, 7, 9, 15, 16],
    [1, 7, 11, 12, 13, 16],
    [1, 8, 9, 10, 11, 16],
    [2, 3, 4, 6, 7, 8],
    [2, 3, 4, 10, 11, 15],
    [2, 3, 5, 6, 10, 12],
    [2, 3, 5, 7, 9, 15],
    [2, 3, 6, 9, 11, 16],
    [2, 3, 8, 9, 10, 13],
    [2, 3, 12, 13, 15, 16],
    [2, 4, 5, 6, 15, 16],
    [2, 4, 5, 8, 9, 11],
    [2, 4, 6, 11, 12, 13],
    [2, 4, 7, 9, 13, 16],
    [2, 4, 8, 10, 12, 14],
    [2, 5, 7, 8, 12, 13],
    [2, 5, 10, 11, 13, 16],
    [2, 6, 7, 10, 13, 15],
    [2, 6, 8, 9, 12, 15],
    [2, 7, 8, 11, 15, 16],
    [2, 7, 9, 10, 11, 12],
    [2, 9, 10, 14, 15, 16],
    [3, 4, 5, 8, 12, 15],
    [3, 4, 5, 9, 10, 16],
    [3, 4, 6, 13, 14, 15],
    [3, 4, 7, 10, 12, 13],
    [3, 4, 8, 11, 13, 16],
    [3, 5, 6, 7, 13, 16],
    [3, 5, 7, 8, 10, 11],
    [3, 5, 9, 11, 12, 13],
    [3, 6, 7, 11, 12, 15],
    [3, 6, 8, 10, 15, 16],
    [3, 7, 8, 9, 12, 16],
    [4, 5, 6, 7, 9, 12],
    [4, 5, 6, 8, 10, 13],
    [4, 5, 7, 11, 13, 15],
    [4, 6, 7, 10, 11, 14],
    [4, 7, 8, 9, 10, 15],
    [4, 11, 12, 14, 15, 16],
    [5, 6, 8, 11, 12, 16],
    [5, 6, 9, 10, 11, 15],
    [5, 7, 9, 11, 14, 16],
    [5, 7, 10, 12, 14, 15],
    [5, 8, 13, 14, 15, 16],
    [6, 7, 8, 9, 11, 13],
    [6, 9, 10, 12, 13, 16],
    [8, 10, 11, 12, 13, 15],
];

/// FNV-1a over the support bytes in table order.
const RECORD_CHECKSUM: u64 = 0xd504_38e7_8c8a_378c;

fn fnv1a64(bytes: impl IntoIterator<Item = u8>) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// The record `(17, 6, 6)` code with 113 words.
///
/// Rebuilt from [`RECORD_SUPPORTS`] on each call; panics if the table's
/// checksum has drifted, so a corrupted edit cannot pass silently.
pub fn record_code() -> Code {
    let actual = fnv1a64(RECORD_SUPPORTS.iter().flatten().copied());
    assert_eq!(
        actual, RECORD_CHECKSUM,
        "record table checksum mismatch: the embedded data was altered"
    );
    let words = RECORD_SUPPORTS
        .iter()
        .map(|sup| {
            let sup: Vec<u32> = sup.iter().map(|&i| i as u32).collect();
            Codeword::from_support(&sup, 17).unwrap()
        })
        .collect();
    Code::new(17, 6, 6, words).unwrap()
}

// ============================================================================
// tests
// ============================================================================
