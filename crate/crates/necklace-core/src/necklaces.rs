//! Counting and ranking of plain (labelled) binary necklaces, plus the
//! divisor, totient, and Möbius utilities shared by the other modules.
//!
//! The rank of `w` among necklaces of length `m` is assembled by a Burnside
//! sum over divisors: for each `d | m`, count the length-`d` words whose
//! necklace falls below `w`, weight by the totient, and divide exactly. The
//! per-divisor count runs a stay-above DP over bounding subwords instead of
//! exponential enumeration; it accepts any threshold word, canonical or not.

use crate::bounds::{Bound, DpCtx};
use crate::word::{cmp_infinite, Word, WordError};
use alloc::vec::Vec;
use core::cmp::Ordering;
use hashbrown::HashMap;
use num_bigint::BigUint;

/// Exact nonnegative count. Ranks exceed 64 bits once lengths pass 62, so
/// the public surface is arbitrary precision throughout.
pub type Count = BigUint;

/// Errors from the ranking entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankError {
    /// `m` must satisfy `1 ≤ m ≤ |w|`.
    BadLength,
    /// The operation requires a canonical unlabelled representative.
    NotCanonical,
    /// A word-level error (empty, too long, bad symbol).
    Word(WordError),
}

impl core::fmt::Display for RankError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RankError::BadLength => write!(f, "length argument out of range"),
            RankError::NotCanonical => {
                write!(f, "word is not a canonical unlabelled representative")
            }
            RankError::Word(e) => write!(f, "{e}"),
        }
    }
}

impl From<WordError> for RankError {
    fn from(e: WordError) -> Self {
        RankError::Word(e)
    }
}

pub(crate) fn divisors(n: usize) -> Vec<usize> {
    let mut ds: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    ds.sort_unstable();
    ds
}

pub(crate) fn euler_phi(n: usize) -> u64 {
    let mut result = n as u64;
    let mut m = n as u64;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub(crate) fn mobius(n: usize) -> i64 {
    let mut m = n;
    let mut mu = 1i64;
    let mut p = 2usize;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if m > 1 {
        mu = -mu;
    }
    mu
}

/// Number of binary necklaces of length `m`: (1/m) Σ_{d|m} φ(m/d) 2^d.
pub fn count_necklaces(m: usize) -> Count {
    assert!(m >= 1);
    let sum: u128 = divisors(m)
        .iter()
        .map(|&d| euler_phi(m / d) as u128 * (1u128 << d))
        .sum();
    debug_assert_eq!(sum % m as u128, 0);
    Count::from(sum / m as u128)
}

/// Number of binary Lyndon words of length `m`: Σ_{d|m} µ(m/d) |N(d)|.
pub fn count_lyndon(m: usize) -> Count {
    assert!(m >= 1);
    let mut sum = 0i128;
    for &d in &divisors(m) {
        let necklaces: u128 = count_necklaces(d).try_into().unwrap();
        sum += mobius(m / d) as i128 * necklaces as i128;
    }
    debug_assert!(sum >= 0);
    Count::from(sum as u128)
}

/// Rank of `w` within the necklaces of length `m ≤ |w|` under the
/// cross-length order: the number of canonical representatives `u` of
/// length `m` with `u < w`. `w` need not be canonical.
pub fn rank_necklaces(w: &Word, m: usize) -> Result<Count, RankError> {
    if m == 0 || m > w.len() {
        return Err(RankError::BadLength);
    }
    let ctx = DpCtx::new(w);
    Ok(Count::from(rank_necklaces_raw(&ctx, m)))
}

pub(crate) fn rank_necklaces_raw(ctx: &DpCtx, m: usize) -> u128 {
    let n = ctx.n;
    // Blocks whose infinite extension ties w^∞ exist only when the cyclic
    // root of w is itself canonical; they sit below w exactly when m < n.
    let root_len = ctx.w.period();
    let root = Word::from_symbols(&ctx.w.slice_cyc(0, root_len)).unwrap();
    let tie_applies = m < n && root.is_necklace();

    let mut total = 0u128;
    for &d in &divisors(m) {
        let below = (1u128 << d) - stay_above_count(ctx, d);
        let ties = if tie_applies && d % root_len == 0 {
            root_len as u128
        } else {
            0
        };
        total += euler_phi(m / d) as u128 * (below + ties);
    }
    assert_eq!(total % m as u128, 0, "necklace Burnside sum not divisible");
    total / m as u128
}

/// Number of length-`d` words all of whose rotations, extended periodically,
/// stay at or above `w^∞`.
fn stay_above_count(ctx: &DpCtx, d: usize) -> u128 {
    let mut memo: HashMap<u64, u128> = HashMap::new();
    let mut total = 0u128;

    // words that are subwords of w at full length: decide by direct scan
    for idx in 0..ctx.wx.distinct_count(d) {
        let v = ctx.wx.value(ctx.wx.sub_ref(d, idx));
        let ok = (0..d).all(|t| {
            let rot = rotate_vec(&v, t);
            cmp_infinite(&rot, ctx.w.as_slice()) != Ordering::Less
        });
        if ok {
            total += 1;
        }
    }

    // seeds: prefixes that leave subword territory at length i
    for i in 1..=d {
        for base in 0..ctx.wx.distinct_count(i - 1) {
            let stem = ctx.wx.value(ctx.wx.sub_ref(i - 1, base));
            for x in 0..2u8 {
                let mut ext = stem.clone();
                ext.push(x);
                let Some(bound) = ctx.wx.classify_bound(&ext) else {
                    continue; // still a subword
                };
                // the word itself must already sit above the prefix of w
                if prefix_cmp(&ext, ctx.w.as_slice()) == Ordering::Less {
                    continue;
                }
                // no started rotation may have fallen below
                if (1..i).any(|t| prefix_cmp(&ext[t..], ctx.w.as_slice()) == Ordering::Less) {
                    continue;
                }
                let p = longest_proper_run(&ext, ctx.w.as_slice());
                total += stay_above_dp(ctx, d, &mut memo, i, p, bound);
            }
        }
    }
    total
}

fn stay_above_dp(
    ctx: &DpCtx,
    d: usize,
    memo: &mut HashMap<u64, u128>,
    i: usize,
    p: usize,
    b: Bound,
) -> u128 {
    if i == d {
        return if ctx.runs_wrap_ok(p, b, d) { 1 } else { 0 };
    }
    let key = (i as u64) << 32 | (p as u64) << 16 | b.code();
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut val = 0u128;
    for c in 0..2u8 {
        if let Some(p2) = ctx.auto.step(p, c) {
            val += stay_above_dp(ctx, d, memo, i + 1, p2, ctx.wx.extend(b, i, c));
        }
    }
    memo.insert(key, val);
    val
}

/// Compares a slice against the matching-length prefix of `base` (no wrap);
/// `Equal` means undecided so far.
pub(crate) fn prefix_cmp(v: &[u8], base: &[u8]) -> Ordering {
    for (t, &c) in v.iter().enumerate() {
        match c.cmp(&base[t]) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// Longest `ρ < |v|` with `v[|v|−ρ..] == base[..ρ]`.
pub(crate) fn longest_proper_run(v: &[u8], base: &[u8]) -> usize {
    let l = v.len();
    (1..l)
        .rev()
        .find(|&rho| v[l - rho..] == base[..rho])
        .unwrap_or(0)
}

pub(crate) fn rotate_vec(v: &[u8], t: usize) -> Vec<u8> {
    let l = v.len();
    (0..l).map(|k| v[(t + k) % l]).collect()
}
