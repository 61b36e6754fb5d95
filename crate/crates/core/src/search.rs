//! Stochastic search for constant-weight codes: simulated annealing over
//! fixed-size multisets of weight-`w` words, plus greedy augmentation.
//!
//! Everything here is deterministic in the seed. The exact draw order from
//! the generator is part of the contract and is spelled out on [`anneal`];
//! changing it would silently break reproduction of published runs.

use crate::code::Code;
use crate::error::Error;
use crate::rng::XorShift64Star;
use crate::verify::verify_code;
use crate::word::{low_mask, weight_masks, Codeword};

pub const DEFAULT_T_INITIAL: f64 = 2.0;
pub const DEFAULT_COOLING: f64 = 0.99;
pub const DEFAULT_T_MIN: f64 = 0.01;
pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;

/// Full parameter set for one annealing run.
///
/// `steps_per_temp` defaults to `50 * target_size` so the move budget per
/// temperature scales with the neighborhood size.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnealParams {
    pub n: u32,
    pub d: u32,
    pub w: u32,
    pub target_size: usize,
    pub seed: u64,
    pub t_initial: f64,
    pub cooling: f64,
    pub steps_per_temp: u64,
    pub t_min: f64,
    pub max_steps: u64,
}

impl AnnealParams {
    /// Parameters with the default schedule.
    pub fn new(n: u32, d: u32, w: u32, target_size: usize, seed: u64) -> Self {
        AnnealParams {
            n,
            d,
            w,
            target_size,
            seed,
            t_initial: DEFAULT_T_INITIAL,
            cooling: DEFAULT_COOLING,
            steps_per_temp: 50 * target_size as u64,
            t_min: DEFAULT_T_MIN,
            max_steps: DEFAULT_MAX_STEPS,
        }
    }

    fn validate(&self) -> Result<(), Error> {
        if !(1..=64).contains(&self.n) {
            return Err(Error::UnsupportedLength { n: self.n as usize });
        }
        if !self.d.is_multiple_of(2) {
            return Err(Error::OddDistance { d: self.d });
        }
        if self.w == 0 || self.w > self.n {
            return Err(Error::InvalidParams("weight must be in 1..=n"));
        }
        if self.target_size == 0 {
            return Err(Error::InvalidParams("target size must be positive"));
        }
        let temps_ok = self.t_initial.is_finite()
            && self.t_initial > 0.0
            && self.t_min.is_finite()
            && self.t_min > 0.0;
        if !temps_ok {
            return Err(Error::InvalidParams("temperatures must be positive"));
        }
        let cooling_ok = self.cooling > 0.0 && self.cooling < 1.0;
        if !cooling_ok {
            return Err(Error::InvalidParams("cooling factor must be in (0, 1)"));
        }
        if self.steps_per_temp == 0 {
            return Err(Error::InvalidParams(
                "steps per temperature must be positive",
            ));
        }
        Ok(())
    }
}

/// Outcome of an annealing run: the best state seen, whether it was
/// conflict-free, and how much of the step budget was spent.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnealResult {
    pub found: bool,
    pub code: Code,
    pub final_cost: u64,
    pub steps_used: u64,
    pub seed: u64,
}

/// Intersection excess of one pair: how far it is over the largest overlap
/// compatible with distance `d` at weight `w`, namely `w - d/2`.
fn pair_excess(a: u64, b: u64, threshold: i64) -> u64 {
    ((a & b).count_ones() as i64 - threshold).max(0) as u64
}

/// Total conflict energy of a word multiset: the sum of intersection
/// excesses over unordered pairs. Zero exactly when the words form a code
/// of minimum distance `d` (with no duplicates).
///
/// Requires an even `d` and words of one common length and weight; the
/// distance/intersection correspondence needs both.
pub fn conflict_cost(words: &[Codeword], d: u32) -> Result<u64, Error> {
    if !d.is_multiple_of(2) {
        return Err(Error::OddDistance { d });
    }
    if let Some(first) = words.first() {
        for word in &words[1..] {
            if word.len() != first.len() {
                return Err(Error::LengthMismatch {
                    left: first.len(),
                    right: word.len(),
                });
            }
            if word.weight() != first.weight() {
                return Err(Error::InvalidParams(
                    "conflict cost is defined for words of one weight",
                ));
            }
        }
        let threshold = first.weight() as i64 - (d / 2) as i64;
        let masks: Vec<u64> = words.iter().map(Codeword::bits).collect();
        Ok(total_cost(&masks, threshold))
    } else {
        Ok(0)
    }
}

fn total_cost(masks: &[u64], threshold: i64) -> u64 {
    let mut cost = 0;
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            cost += pair_excess(masks[i], masks[j], threshold);
        }
    }
    cost
}

/// Energy of slot `idx` holding `mask` against every other slot.
fn slot_cost(masks: &[u64], idx: usize, mask: u64, threshold: i64) -> u64 {
    masks
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != idx)
        .map(|(_, &other)| pair_excess(mask, other, threshold))
        .sum()
}

/// Index of the `k`-th set bit of `mask` (k counted from zero, bits from
/// the low end). `mask` must have more than `k` bits set.
fn nth_set_bit(mask: u64, k: u32) -> u32 {
    let mut rest = mask;
    for _ in 0..k {
        rest &= rest - 1;
    }
    debug_assert_ne!(rest, 0);
    rest.trailing_zeros()
}

/// One uniform weight-`w` mask of length `n`: draws `next_below(n)` until
/// `w` distinct positions are set. Part of the documented stream layout.
fn random_weight_mask(rng: &mut XorShift64Star, n: u32, w: u32) -> u64 {
    let mut bits = 0u64;
    while bits.count_ones() < w {
        bits |= 1 << rng.next_below(n as u64);
    }
    bits
}

/// Metropolis annealing from a given starting state, continuing an existing
/// generator stream. `masks.len()` must equal `params.target_size` and every
/// mask must already have weight `params.w`.
fn anneal_from(
    mut masks: Vec<u64>,
    params: &AnnealParams,
    rng: &mut XorShift64Star,
) -> AnnealResult {
    debug_assert_eq!(masks.len(), params.target_size);
    debug_assert!(masks.iter().all(|m| m.count_ones() == params.w));
    let threshold = params.w as i64 - (params.d / 2) as i64;
    let m = masks.len() as u64;
    let clear_count = (params.n - params.w) as u64;

    let mut cost = total_cost(&masks, threshold);
    let mut best = masks.clone();
    let mut best_cost = cost;
    let mut steps = 0u64;
    let mut temp = params.t_initial;

    // With w == n there is no swap move; the initial state is the answer.
    while best_cost > 0 && clear_count > 0 && steps < params.max_steps {
        steps += 1;
        let slot = rng.next_below(m) as usize;
        let out_sel = rng.next_below(params.w as u64) as u32;
        let in_sel = rng.next_below(clear_count) as u32;
        let old = masks[slot];
        let out_idx = nth_set_bit(old, out_sel);
        let in_idx = nth_set_bit(!old & low_mask(params.n), in_sel);
        let new = old & !(1 << out_idx) | 1 << in_idx;

        let delta = slot_cost(&masks, slot, new, threshold) as i64
            - slot_cost(&masks, slot, old, threshold) as i64;
        let accept = delta <= 0 || rng.next_f64() < (-(delta as f64) / temp).exp();
        if accept {
            masks[slot] = new;
            cost = (cost as i64 + delta) as u64;
            if cost < best_cost {
                best_cost = cost;
                best.clone_from(&masks);
            }
            if cost == 0 {
                break;
            }
        }
        if steps.is_multiple_of(params.steps_per_temp) {
            temp *= params.cooling;
            if temp < params.t_min {
                break;
            }
        }
    }

    let words = best
        .into_iter()
        .map(|bits| Codeword::from_bits(bits, params.n).unwrap())
        .collect();
    AnnealResult {
        found: best_cost == 0,
        code: Code::new(params.n, params.d, params.w, words).unwrap(),
        final_cost: best_cost,
        steps_used: steps,
        seed: params.seed,
    }
}

/// Simulated annealing for a `(n, d, w)` code with `target_size` words.
///
/// The state is a vector of `target_size` weight-`w` masks; the energy is
/// [`conflict_cost`]. One step swaps a single bit inside one word and is
/// accepted by the Metropolis rule; temperature decays geometrically.
///
/// Draw order from the seeded generator, fixed forever:
///
/// 1. Each initial word takes repeated `next_below(n)` draws until `w`
///    distinct positions are set, words in slot order.
/// 2. Each step takes `next_below(target_size)` for the slot, then
///    `next_below(w)` selecting among its set bits (low to high), then
///    `next_below(n - w)` selecting among its clear bits (low to high).
/// 3. Only a strictly uphill move (`delta > 0`) takes one extra
///    `next_f64` for the Metropolis coin.
///
/// Cooling multiplies the temperature by `cooling` every `steps_per_temp`
/// steps, and the run stops when the energy reaches zero, the temperature
/// falls below `t_min`, or `max_steps` is spent. The result carries the
/// best state seen, which is conflict-free exactly when `found` is set.
pub fn anneal(params: &AnnealParams) -> Result<AnnealResult, Error> {
    params.validate()?;
    let mut rng = XorShift64Star::new(params.seed);
    let masks: Vec<u64> = (0..params.target_size)
        .map(|_| random_weight_mask(&mut rng, params.n, params.w))
        .collect();
    Ok(anneal_from(masks, params, &mut rng))
}

/// Ruin-and-recreate restart: removes `remove_k` uniformly chosen words
/// from a clean code, appends `add_target` fresh random words, and anneals
/// the result toward `code.len() - remove_k + add_target` words under the
/// default schedule with the given step budget.
///
/// Survivors keep their original relative order and occupy the leading
/// slots. The same generator seeds the removal choice, the fresh words and
/// the annealing, in that order; the removal uses `remove_k` draws of
/// `next_below(remaining)` (a partial Fisher-Yates pass).
///
/// The input must verify cleanly against its declared parameters, with
/// `w >= 1` and an even `d`.
pub fn perturb_and_regrow(
    code: &Code,
    remove_k: usize,
    add_target: usize,
    seed: u64,
    max_steps: u64,
) -> Result<AnnealResult, Error> {
    if remove_k > code.len() {
        return Err(Error::TooFewWords {
            have: code.len(),
            need: remove_k,
        });
    }
    let target_size = code.len() - remove_k + add_target;
    let mut params = AnnealParams::new(code.n(), code.d(), code.w(), target_size, seed);
    params.max_steps = max_steps;
    params.validate()?;
    if !verify_code(code).is_valid() {
        return Err(Error::InvalidCode);
    }

    let mut rng = XorShift64Star::new(seed);
    let mut order: Vec<usize> = (0..code.len()).collect();
    for i in 0..remove_k {
        let j = i + rng.next_below((code.len() - i) as u64) as usize;
        order.swap(i, j);
    }
    let mut kept = order.split_off(remove_k);
    kept.sort_unstable();
    let mut masks: Vec<u64> = kept.into_iter().map(|i| code.words()[i].bits()).collect();
    for _ in 0..add_target {
        masks.push(random_weight_mask(&mut rng, params.n, params.w));
    }
    Ok(anneal_from(masks, &params, &mut rng))
}

/// Extends a clean code with every compatible word, scanning all weight-`w`
/// masks in increasing numeric order and keeping each one that sits at
/// distance at least `d` from everything accepted so far.
///
/// The input words come first in the result, additions follow in scan
/// order. The outcome is maximal: no further weight-`w` word fits. Costs
/// `O(C(n, w))` candidate checks, each against the current word list.
pub fn augment_greedy(code: &Code) -> Result<Code, Error> {
    if !verify_code(code).is_valid() {
        return Err(Error::InvalidCode);
    }
    let mut masks: Vec<u64> = code.words().iter().map(Codeword::bits).collect();
    let mut words = code.words().to_vec();
    for candidate in weight_masks(code.n(), code.w()) {
        if masks
            .iter()
            .all(|&m| (m ^ candidate).count_ones() >= code.d())
        {
            masks.push(candidate);
            words.push(Codeword::from_bits(candidate, code.n()).unwrap());
        }
    }
    Code::new(code.n(), code.d(), code.w(), words)
}

// ============================================================================
// tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::record_code;
    use crate::verify::min_distance;

    fn word(support: &[u32], n: u32) -> Codeword {
        Codeword::from_support(support, n).unwrap()
    }

    fn fano() -> Code {
        let supports: [&[u32]; 7] = [
            &[0, 1, 2],
            &[0, 3, 4],
            &[1, 3, 5],
            &[2, 4, 5],
            &[2, 3, 6],
            &[1, 4, 6],
            &[0, 5, 6],
        ];
        let words = supports.iter().map(|s| word(s, 7)).collect();
        Code::new(7, 4, 3, words).unwrap()
    }

    #[test]
    fn cost_zero_on_clean_codes() {
        assert_eq!(conflict_cost(fano().words(), 4), Ok(0));
        assert_eq!(conflict_cost(record_code().words(), 6), Ok(0));
        assert_eq!(conflict_cost(&[], 4), Ok(0));
        assert_eq!(conflict_cost(&[word(&[0, 1, 2], 7)], 4), Ok(0));
    }

    #[test]
    fn cost_counts_intersection_excess() {
        // Threshold at w = 3, d = 4 is 1 shared coordinate.
        let a = word(&[0, 1, 2], 7);
        let b = word(&[0, 1, 3], 7);
        let c = word(&[0, 4, 5], 7);
        assert_eq!(conflict_cost(&[a, b], 4), Ok(1));
        assert_eq!(conflict_cost(&[a, a], 4), Ok(2));
        assert_eq!(conflict_cost(&[a, b, c], 4), Ok(1));
        assert_eq!(conflict_cost(&[a, b], 2), Ok(0));
        assert_eq!(conflict_cost(&[a, b], 6), Ok(2));
    }

    #[test]
    fn cost_rejects_bad_inputs() {
        let a = word(&[0, 1, 2], 7);
        assert_eq!(conflict_cost(&[a, a], 3), Err(Error::OddDistance { d: 3 }));
        assert_eq!(
            conflict_cost(&[a, word(&[0, 1], 6)], 4),
            Err(Error::LengthMismatch { left: 7, right: 6 })
        );
        assert_eq!(
            conflict_cost(&[a, word(&[0, 1], 7)], 4),
            Err(Error::InvalidParams(
                "conflict cost is defined for words of one weight"
            ))
        );
    }

    #[test]
    fn cost_matches_distance_deficit_semantics() {
        // Cost is zero exactly when the verifier finds no conflicts.
        let a = word(&[0, 1, 2], 7);
        let b = word(&[3, 4, 5], 7);
        assert_eq!(conflict_cost(&[a, b], 4), Ok(0));
        assert_eq!(
            min_distance(&Code::new(7, 4, 3, vec![a, b]).unwrap()),
            Ok(6)
        );
    }

    #[test]
    fn anneal_finds_a_fano_plane_sized_code() {
        let params = AnnealParams::new(7, 4, 3, 7, 1);
        let r = anneal(&params).unwrap();
        assert!(r.found);
        assert_eq!(r.final_cost, 0);
        assert_eq!(r.code.len(), 7);
        assert!(verify_code(&r.code).is_valid());
        assert!(min_distance(&r.code).unwrap() >= 4);
        assert!(r.steps_used <= params.max_steps);
        assert_eq!(r.seed, 1);
    }

    #[test]
    fn anneal_is_deterministic_in_the_seed() {
        let params = AnnealParams::new(7, 4, 3, 7, 42);
        let a = anneal(&params).unwrap();
        let b = anneal(&params).unwrap();
        assert_eq!(a, b);
        let other = anneal(&AnnealParams::new(7, 4, 3, 7, 43)).unwrap();
        assert_eq!(other.seed, 43);
    }

    #[test]
    fn anneal_reports_failure_beyond_the_bound() {
        // No (7, 4, 3) code has 8 words, so the run must exhaust and say so.
        let mut params = AnnealParams::new(7, 4, 3, 8, 5);
        params.max_steps = 30_000;
        let r = anneal(&params).unwrap();
        assert!(!r.found);
        assert!(r.final_cost > 0);
        assert_eq!(r.code.len(), 8);
    }

    #[test]
    fn anneal_trivial_targets_cost_nothing() {
        let r = anneal(&AnnealParams::new(7, 4, 3, 1, 9)).unwrap();
        assert!(r.found);
        assert_eq!(r.steps_used, 0);
        assert_eq!(r.code.len(), 1);
    }

    #[test]
    fn anneal_rejects_bad_parameters() {
        assert_eq!(
            anneal(&AnnealParams::new(7, 3, 3, 7, 1)),
            Err(Error::OddDistance { d: 3 })
        );
        assert_eq!(
            anneal(&AnnealParams::new(0, 4, 3, 7, 1)),
            Err(Error::UnsupportedLength { n: 0 })
        );
        assert!(anneal(&AnnealParams::new(7, 4, 0, 7, 1)).is_err());
        assert!(anneal(&AnnealParams::new(7, 4, 8, 7, 1)).is_err());
        assert!(anneal(&AnnealParams::new(7, 4, 3, 0, 1)).is_err());
        let mut bad = AnnealParams::new(7, 4, 3, 7, 1);
        bad.cooling = 1.5;
        assert!(anneal(&bad).is_err());
    }

    #[test]
    fn full_weight_words_leave_no_moves() {
        let mut params = AnnealParams::new(5, 2, 5, 2, 3);
        params.max_steps = 100;
        let r = anneal(&params).unwrap();
        assert!(!r.found);
        assert_eq!(r.steps_used, 0);
    }

    #[test]
    fn regrow_keeps_survivors_in_order() {
        let f = fano();
        let r = perturb_and_regrow(&f, 2, 0, 11, 1000).unwrap();
        assert!(r.found);
        assert_eq!(r.steps_used, 0);
        assert_eq!(r.code.len(), 5);
        // The five survivors appear as a subsequence of the original code.
        let mut it = f.words().iter();
        for kept in r.code.words() {
            assert!(it.any(|w| w == kept));
        }
    }

    #[test]
    fn regrow_whole_code_is_immediate() {
        let f = fano();
        let r = perturb_and_regrow(&f, 0, 0, 1, 1000).unwrap();
        assert!(r.found);
        assert_eq!(r.steps_used, 0);
        assert_eq!(r.code, f);
    }

    #[test]
    fn regrow_replaces_removed_words() {
        let f = fano();
        let r = perturb_and_regrow(&f, 3, 3, 7, 1_000_000).unwrap();
        assert_eq!(r.code.len(), 7);
        if r.found {
            assert!(verify_code(&r.code).is_valid());
        }
        let again = perturb_and_regrow(&f, 3, 3, 7, 1_000_000).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn regrow_rejects_bad_inputs() {
        let f = fano();
        assert_eq!(
            perturb_and_regrow(&f, 8, 0, 1, 100),
            Err(Error::TooFewWords { have: 7, need: 8 })
        );
        assert!(perturb_and_regrow(&f, 7, 0, 1, 100).is_err());
        let dirty = Code::new(7, 4, 3, vec![word(&[0, 1, 2], 7), word(&[0, 1, 3], 7)]).unwrap();
        assert_eq!(
            perturb_and_regrow(&dirty, 1, 1, 1, 100),
            Err(Error::InvalidCode)
        );
    }

    #[test]
    fn augment_from_empty_builds_a_fano_plane() {
        let grown = augment_greedy(&Code::empty(7, 4, 3).unwrap()).unwrap();
        assert_eq!(grown.len(), 7);
        let masks: Vec<u64> = grown.words().iter().map(Codeword::bits).collect();
        assert_eq!(masks, vec![7, 25, 42, 52, 76, 82, 97]);
        assert!(verify_code(&grown).is_valid());
    }

    #[test]
    fn augment_leaves_maximal_codes_alone() {
        let f = fano();
        assert_eq!(augment_greedy(&f).unwrap().len(), 7);
        let record = record_code();
        let grown = augment_greedy(&record).unwrap();
        assert_eq!(grown.len(), 113);
        assert_eq!(grown, record);
    }

    #[test]
    fn augment_fills_a_gap() {
        let f = fano();
        let words: Vec<Codeword> = f.words()[..5].to_vec();
        let partial = Code::new(7, 4, 3, words).unwrap();
        let grown = augment_greedy(&partial).unwrap();
        assert_eq!(grown.len(), 7);
        assert!(verify_code(&grown).is_valid());
        assert_eq!(&grown.words()[..5], partial.words());
    }

    #[test]
    fn augment_rejects_dirty_input() {
        let dirty = Code::new(7, 4, 3, vec![word(&[0, 1, 2], 7), word(&[0, 1, 3], 7)]).unwrap();
        assert_eq!(augment_greedy(&dirty), Err(Error::InvalidCode));
    }
}
