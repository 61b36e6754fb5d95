//! Coordinate-permutation automorphisms: the permutations of `0..n` that
//! map a code's word set onto itself.

use crate::code::Code;
use crate::error::Error;
use crate::word::Codeword;

/// A permutation of the coordinates `0..n`, stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    /// The identity on `n` points.
    pub fn identity(n: u32) -> Perm {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    /// Wraps an image table after checking it is a permutation of `0..n`
    /// with `n` at most 64.
    pub fn from_images(images: Vec<u8>) -> Result<Perm, Error> {
        let n = images.len();
        if !(1..=64).contains(&n) {
            return Err(Error::UnsupportedLength { n });
        }
        let mut seen = [false; 64];
        for &img in &images {
            if img as usize >= n {
                return Err(Error::IndexOutOfRange {
                    index: img as u32,
                    n: n as u32,
                });
            }
            if seen[img as usize] {
                return Err(Error::InvalidParams("image table repeats a point"));
            }
            seen[img as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Where each point goes: `images()[i]` is the image of `i`.
    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Number of points.
    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| i == img as usize)
    }

    /// Moves every set coordinate of `word` to its image. The word length
    /// must equal the permutation degree.
    pub fn apply(&self, word: &Codeword) -> Result<Codeword, Error> {
        if word.len() != self.degree() {
            return Err(Error::LengthMismatch {
                left: self.degree(),
                right: word.len(),
            });
        }
        let mut bits = 0u64;
        for i in word.support() {
            bits |= 1 << self.images[i as usize];
        }
        Codeword::from_bits(bits, word.len())
    }

    /// Composition `self after other`: applying the result is applying
    /// `other` first, then `self`. Degrees must match.
    pub fn compose(&self, other: &Perm) -> Result<Perm, Error> {
        if self.degree() != other.degree() {
            return Err(Error::LengthMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let images = other
            .images
            .iter()
            .map(|&mid| self.images[mid as usize])
            .collect();
        Ok(Perm { images })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Perm { images }
    }

    /// Cycle notation with fixed points omitted: `"(0 3)(1 4 2)"`. Cycles
    /// start at their smallest point and are listed in order of that point.
    /// The identity prints as `"()"`.
    pub fn cycle_string(&self) -> String {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            loop {
                seen[p] = true;
                if p != start {
                    out.push(' ');
                }
                out.push_str(&p.to_string());
                p = self.images[p] as usize;
                if p == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// What a coordinate looks like to the incidence structure: how many words
/// contain it, and the sorted list of its co-occurrence counts with every
/// other coordinate. Automorphisms preserve both, so points may only map
/// to points with an equal signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSignature {
    pub degree: u32,
    pub pair_profile: Vec<u32>,
}

/// Co-occurrence counts over the distinct words of `code`:
/// `cooc[p][q]` is the number of words containing both `p` and `q`, with
/// the diagonal holding plain degrees.
fn cooccurrence(masks: &[u64], n: usize) -> Vec<Vec<u32>> {
    let mut cooc = vec![vec![0u32; n]; n];
    for &mask in masks {
        let mut rest = mask;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cooc[p][p] += 1;
            let mut rest2 = rest;
            while rest2 != 0 {
                let q = rest2.trailing_zeros() as usize;
                rest2 &= rest2 - 1;
                cooc[p][q] += 1;
                cooc[q][p] += 1;
            }
        }
    }
    cooc
}

/// The signature of every coordinate of `code`, indexed by coordinate.
/// Duplicate words are counted once.
pub fn point_signatures(code: &Code) -> Vec<PointSignature> {
    let masks = distinct_masks(code);
    let n = code.n() as usize;
    let cooc = cooccurrence(&masks, n);
    (0..n)
        .map(|p| {
            let mut pair_profile: Vec<u32> =
                (0..n).filter(|&q| q != p).map(|q| cooc[p][q]).collect();
            pair_profile.sort_unstable();
            PointSignature {
                degree: cooc[p][p],
                pair_profile,
            }
        })
        .collect()
}

fn distinct_masks(code: &Code) -> Vec<u64> {
    let mut masks: Vec<u64> = code.words().iter().map(Codeword::bits).collect();
    masks.sort_unstable();
    masks.dedup();
    masks
}

struct GroupSearch {
    n: usize,
    masks: Vec<u64>,
    cooc: Vec<Vec<u32>>,
    sigs: Vec<PointSignature>,
    /// Indices into `masks`, grouped by the word's highest set coordinate.
    by_top: Vec<Vec<usize>>,
    limit: u64,
    found: Vec<Perm>,
}

impl GroupSearch {
    /// Tries every image for point `depth`, in ascending order, so the
    /// group comes out sorted by image table.
    fn assign(
        &mut self,
        depth: usize,
        images: &mut Vec<u8>,
        used: &mut Vec<bool>,
    ) -> Result<(), Error> {
        if depth == self.n {
            self.found.push(Perm {
                images: images.clone(),
            });
            if self.found.len() as u64 > self.limit {
                return Err(Error::GroupTooLarge { limit: self.limit });
            }
            return Ok(());
        }
        'candidates: for q in 0..self.n {
            if used[q] || self.sigs[q] != self.sigs[depth] {
                continue;
            }
            for (j, &img) in images.iter().enumerate() {
                if self.cooc[j][depth] != self.cooc[img as usize][q] {
                    continue 'candidates;
                }
            }
            images.push(q as u8);
            used[q] = true;
            // Words whose support closes at `depth` now have fully mapped
            // images; each must land back inside the word set.
            let ok = self.by_top[depth].iter().all(|&wi| {
                let mut img = 0u64;
                let mut rest = self.masks[wi];
                while rest != 0 {
                    let p = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    img |= 1 << images[p];
                }
                self.masks.binary_search(&img).is_ok()
            });
            if ok {
                self.assign(depth + 1, images, used)?;
            }
            images.pop();
            used[q] = false;
        }
        Ok(())
    }
}

/// The full automorphism group of `code` under coordinate permutations,
/// every element included (identity first in image-table order), closed
/// under composition and inverses by construction.
///
/// Backtracks over image tables point by point, pruned by point
/// signatures, pairwise co-occurrence consistency and word-image
/// membership. Fails with [`Error::GroupTooLarge`] as soon as more than
/// `limit` elements exist, and needs at least one word so the structure is
/// nonempty. Duplicate words are counted once.
pub fn automorphism_group(code: &Code, limit: u64) -> Result<Vec<Perm>, Error> {
    if code.is_empty() {
        return Err(Error::TooFewWords { have: 0, need: 1 });
    }
    let n = code.n() as usize;
    let masks = distinct_masks(code);
    let cooc = cooccurrence(&masks, n);
    let sigs = point_signatures(code);
    let mut by_top = vec![Vec::new(); n];
    for (wi, &mask) in masks.iter().enumerate() {
        if mask != 0 {
            by_top[63 - mask.leading_zeros() as usize].push(wi);
        }
        // The zero word maps to itself under every permutation.
    }
    let mut search = GroupSearch {
        n,
        masks,
        cooc,
        sigs,
        by_top,
        limit,
        found: Vec::new(),
    };
    search.assign(0, &mut Vec::with_capacity(n), &mut vec![false; n])?;
    debug_assert!(search.found.iter().any(Perm::is_identity));
    Ok(search.found)
}

// ============================================================================
// tests
// ============================================================================
