//! Exact maximum code size for small parameters, by branch and bound over
//! the compatibility graph of all weight-`w` words.

use crate::code::Code;
use crate::error::Error;
use crate::word::{weight_masks, Codeword};

/// Hard cap on the candidate count `C(n, w)`.
const MAX_CANDIDATES: u64 = 1_000_000;

/// Result of an exhaustive run: the best code found, and whether the search
/// finished inside the node budget (`proven`) or was cut off, in which case
/// `size` is only a lower bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMax {
    pub size: usize,
    pub witness: Code,
    pub proven: bool,
    pub nodes_used: u64,
}

/// `C(n, k)` saturating at `u64::MAX`, enough to compare against the cap.
fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        match acc.checked_mul(n - i) {
            Some(v) => acc = v / (i + 1),
            None => return u64::MAX,
        }
    }
    acc
}

struct Searcher {
    verts: Vec<u64>,
    d: u32,
    best: Vec<u32>,
    nodes_used: u64,
    budget: u64,
    truncated: bool,
}

impl Searcher {
    fn compatible(&self, a: u32, b: u32) -> bool {
        (self.verts[a as usize] ^ self.verts[b as usize]).count_ones() >= self.d
    }

    /// Greedy sequential coloring of `cands` (in their current order).
    /// Returns the vertices regrouped color class by color class together
    /// with each vertex's color, counted from 1. Classes are pairwise
    /// incompatible sets, so any code inside `cands` takes at most one
    /// vertex per class and the colors bound the extension size.
    fn color_sort(&self, cands: &[u32]) -> (Vec<u32>, Vec<usize>) {
        let mut classes: Vec<Vec<u32>> = Vec::new();
        for &v in cands {
            let slot = classes
                .iter()
                .position(|class| class.iter().all(|&u| !self.compatible(u, v)));
            match slot {
                Some(i) => classes[i].push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(cands.len());
        let mut colors = Vec::with_capacity(cands.len());
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                order.push(v);
                colors.push(i + 1);
            }
        }
        (order, colors)
    }

    fn expand(&mut self, current: &mut Vec<u32>, cands: &[u32]) {
        if current.len() > self.best.len() {
            // Any `current` is a clique, so a truncated run still hands
            // back its deepest partial result as a lower bound.
            self.best.clone_from(current);
        }
        if cands.is_empty() {
            return;
        }
        let (order, colors) = self.color_sort(cands);
        for i in (0..order.len()).rev() {
            // Colors ascend along `order`, so once the bound fails here it
            // fails for every remaining branch too.
            if current.len() + colors[i] <= self.best.len() {
                return;
            }
            if self.nodes_used >= self.budget {
                self.truncated = true;
                return;
            }
            self.nodes_used += 1;
            let v = order[i];
            let narrowed: Vec<u32> = order[..i]
                .iter()
                .copied()
                .filter(|&u| self.compatible(u, v))
                .collect();
            current.push(v);
            self.expand(current, &narrowed);
            current.pop();
            if self.truncated {
                return;
            }
        }
    }
}

/// Exhaustive search for the largest `(n, d, w)` code, as a maximum clique
/// in the graph whose vertices are all `C(n, w)` weight-`w` words and whose
/// edges join pairs at distance at least `d`.
///
/// Branch and bound in the style of Tomita: candidates are greedily colored
/// and explored in descending color order, pruning branches whose color
/// bound cannot beat the incumbent. Wholly deterministic: vertices enter in
/// increasing bitmask order and ties never consult randomness.
///
/// `budget` caps the branch nodes explored. When it runs out the incumbent
/// is still returned, with `proven` cleared: the size is then only a lower
/// bound. Requires an even `d` and `C(n, w)` at most one million; the cap
/// bounds memory, while runtime is only practical for candidate counts in
/// the thousands.
pub fn exact_max(n: u32, d: u32, w: u32, budget: u64) -> Result<ExactMax, Error> {
    if !(1..=64).contains(&n) {
        return Err(Error::UnsupportedLength { n: n as usize });
    }
    if !d.is_multiple_of(2) {
        return Err(Error::OddDistance { d });
    }
    if w > n {
        return Err(Error::InvalidParams("weight must be at most n"));
    }
    let candidates = binomial(n as u64, w as u64);
    if candidates > MAX_CANDIDATES {
        return Err(Error::InstanceTooLarge {
            n,
            w,
            candidates,
            max: MAX_CANDIDATES,
        });
    }

    let verts: Vec<u64> = weight_masks(n, w).collect();

    // Distinct equal-weight words always differ in at least two places, so
    // for d <= 2 the whole candidate set is already a code.
    if d <= 2 {
        let words: Vec<Codeword> = verts
            .iter()
            .map(|&bits| Codeword::from_bits(bits, n).unwrap())
            .collect();
        return Ok(ExactMax {
            size: words.len(),
            witness: Code::new(n, d, w, words)?,
            proven: true,
            nodes_used: 0,
        });
    }

    let mut searcher = Searcher {
        verts,
        d,
        best: Vec::new(),
        nodes_used: 0,
        budget,
        truncated: false,
    };
    let all: Vec<u32> = (0..searcher.verts.len() as u32).collect();
    searcher.expand(&mut Vec::new(), &all);

    let words: Vec<Codeword> = searcher
        .best
        .iter()
        .map(|&i| Codeword::from_bits(searcher.verts[i as usize], n).unwrap())
        .collect();
    Ok(ExactMax {
        size: words.len(),
        witness: Code::new(n, d, w, words)?,
        proven: !searcher.truncated,
        nodes_used: searcher.nodes_used,
    })
}

// ============================================================================
// tests
// ============================================================================
