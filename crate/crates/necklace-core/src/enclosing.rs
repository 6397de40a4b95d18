//! Counting unlabelled necklace classes that enclose a word.
//!
//! A class encloses `w` when its smaller necklace sits below `w` and its
//! complement necklace sits above. The words of the smaller necklace are
//! partitioned by the first rotation that resolves below `w` (identity
//! counted last); each bucket is counted by a DP that tracks, for the word
//! and its complement simultaneously, the prefix overlap with `w` and the
//! bounding subword. The complement side must stay above `w` at every
//! rotation, which the stay-above auxiliary finishes once the target
//! rotation has resolved.

use crate::bounds::{Bound, DpCtx, DpStats, SubwordRef};
use crate::necklaces::{divisors, longest_proper_run, mobius, prefix_cmp, Count, RankError};
use crate::symmetric::{joint_regime_values, require_canonical, to_bound, y_count, YMemo};
use crate::word::{cmp_rotation_at_level, Word};
use alloc::vec::Vec;
use core::cmp::Ordering;
use hashbrown::HashMap;

/// Key of the enclosing DP: consumed length `i`, target rotation `r`,
/// bounds and prefix overlaps for the word and its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EncDpKey {
    pub i: usize,
    pub r: usize,
    pub b_f: SubwordRef,
    pub b_b: SubwordRef,
    pub p_f: usize,
    pub p_b: usize,
}

pub(crate) struct EncEngine<'a> {
    ctx: &'a DpCtx,
    /// Effective word length for tie-breaking in direct membership checks.
    level: usize,
    /// Word length being built.
    m: usize,
    /// Target rotation (identity represented as `m`).
    r: usize,
}

impl<'a> EncEngine<'a> {
    pub fn new(ctx: &'a DpCtx, level: usize, m: usize, r: usize) -> Self {
        EncEngine { ctx, level, m, r }
    }

    /// Suffix count of the enclosing DP at state `(i, p_f, p_b, b_f, b_b)`.
    #[allow(clippy::too_many_arguments)]
    fn c_dp(
        &self,
        memo: &mut HashMap<u64, u128>,
        y: &mut YMemo,
        stats: &mut DpStats,
        i: usize,
        pf: usize,
        pb: usize,
        bf: Bound,
        bb: Bound,
    ) -> u128 {
        let (m, r) = (self.m, self.r);
        let ctx = self.ctx;
        debug_assert!(
            bb != Bound::Bottom,
            "complement below minimum violates the stay-above side"
        );
        if i == m {
            // complement-side rotations still matching wrap into the
            // complement itself
            if !ctx.runs_wrap_ok(pb, bb, m) {
                return 0;
            }
            if r == m {
                // the word itself must resolve below w, and no own-side
                // rotation may fall with it
                return if bf == Bound::Bottom && ctx.runs_wrap_ok(pf, bf, m) {
                    1
                } else {
                    0
                };
            }
            debug_assert_eq!(pf, m - r);
            return if ctx.wx.wrap_below(pf, bf, m) { 1 } else { 0 };
        }
        let key =
            (i as u64) << 40 | (pf as u64) << 33 | (pb as u64) << 26 | bf.code() << 13 | bb.code();
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let val = if i == r {
            if pf != 0 {
                0
            } else {
                let pb2 = ctx.auto.step(pb, 1).expect("symbol 1 never drops a run");
                match (ctx.wx.try_extend(bf, i, 0), ctx.wx.try_extend(bb, i, 1)) {
                    (Some(bf2), Some(bb2)) => self.c_dp(memo, y, stats, i + 1, 1, pb2, bf2, bb2),
                    _ => 0,
                }
            }
        } else if i < r {
            let mut acc = 0u128;
            for x in 0..2u8 {
                let Some(pf2) = ctx.auto.step(pf, x) else { continue };
                let Some(pb2) = ctx.auto.step(pb, 1 - x) else { continue };
                let Some(bf2) = ctx.wx.try_extend(bf, i, x) else { continue };
                let Some(bb2) = ctx.wx.try_extend(bb, i, 1 - x) else { continue };
                acc += self.c_dp(memo, y, stats, i + 1, pf2, pb2, bf2, bb2);
            }
            acc
        } else {
            debug_assert_eq!(pf, i - r);
            if ctx.w.sym(pf) == 1 {
                // 0 resolves the target rotation below w; the complement side
                // alone constrains the rest
                let pb2 = ctx.auto.step(pb, 1).expect("symbol 1 never drops a run");
                let mut acc =
                    y_count(ctx, y, m - i - 1, pb2, ctx.wx.extend(bb, i, 1), i + 1, false);
                if let Some(pb3) = ctx.auto.step(pb, 0) {
                    acc += self.c_dp(
                        memo,
                        y,
                        stats,
                        i + 1,
                        pf + 1,
                        pb3,
                        ctx.wx.extend(bf, i, 1),
                        ctx.wx.extend(bb, i, 0),
                    );
                }
                acc
            } else {
                let pb2 = ctx.auto.step(pb, 1).expect("symbol 1 never drops a run");
                self.c_dp(
                    memo,
                    y,
                    stats,
                    i + 1,
                    pf + 1,
                    pb2,
                    ctx.wx.extend(bf, i, 0),
                    ctx.wx.extend(bb, i, 1),
                )
            }
        };
        memo.insert(key, val);
        stats.c_states += 1;
        val
    }

    /// |γ(w, m, r)| at this engine's comparison level.
    pub fn gamma(&self, y: &mut YMemo, stats: &mut DpStats) -> u128 {
        let (m, r) = (self.m, self.r);
        let ctx = self.ctx;
        let mut memo: HashMap<u64, u128> = HashMap::new();
        let mut total = 0u128;

        // words whose value or complement stays a subword to full length
        for v in joint_regime_values(ctx, m) {
            if first_below(&v, &ctx.w, self.level) == Some(r)
                && complement_stays_above(&v, &ctx.w, self.level)
            {
                total += 1;
            }
        }

        // words leaving the joint subword regime at length i
        for i in 1..=m {
            for stem in joint_regime_values(ctx, i - 1) {
                for x in 0..2u8 {
                    let mut front = stem.clone();
                    front.push(x);
                    let back: Vec<u8> = front.iter().map(|&s| 1 - s).collect();
                    let Some(bf) = ctx.wx.classify_bound(&front) else { continue };
                    let Some(bb) = ctx.wx.classify_bound(&back) else { continue };
                    if bb == Bound::Bottom {
                        continue; // the complement itself would fall below w
                    }
                    total += self.gamma_seed(&mut memo, y, stats, i, &front, &back, bf, bb);
                }
            }
        }
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn gamma_seed(
        &self,
        memo: &mut HashMap<u64, u128>,
        y: &mut YMemo,
        stats: &mut DpStats,
        i: usize,
        front: &[u8],
        back: &[u8],
        bf: Bound,
        bb: Bound,
    ) -> u128 {
        let (m, r) = (self.m, self.r);
        let w = self.ctx.w.as_slice();
        // no complement-side rotation may have fallen below w
        for s in 1..i {
            if prefix_cmp(&back[s..], w) == Ordering::Less {
                return 0;
            }
        }
        let pb = longest_proper_run(back, w);
        let mut equal_before_r = false;
        for t in 1..i {
            let o = prefix_cmp(&front[t..], w);
            if t < r {
                match o {
                    Ordering::Less => return 0,
                    Ordering::Equal => equal_before_r = true,
                    Ordering::Greater => {}
                }
            } else if t == r {
                match o {
                    Ordering::Greater => return 0,
                    Ordering::Less => {
                        if equal_before_r {
                            return 0;
                        }
                        return y_count(self.ctx, y, m - i, pb, bb, i, false);
                    }
                    Ordering::Equal => {}
                }
            }
        }
        if r < i {
            if equal_before_r {
                return 0;
            }
            self.c_dp(memo, y, stats, i, i - r, pb, bf, bb)
        } else if r == i {
            if equal_before_r {
                return 0;
            }
            self.c_dp(memo, y, stats, i, 0, pb, bf, bb)
        } else {
            let pf = longest_proper_run(front, w);
            self.c_dp(memo, y, stats, i, pf, pb, bf, bb)
        }
    }
}

/// First rotation `t ∈ [1, m]` (identity as `m`) resolving below `w`.
fn first_below(v: &[u8], w: &Word, level: usize) -> Option<usize> {
    let m = v.len();
    (1..=m).find(|&t| cmp_rotation_at_level(v, t % m, w, level) == Ordering::Less)
}

/// True iff no rotation of the complement (identity included) resolves below.
fn complement_stays_above(v: &[u8], w: &Word, level: usize) -> bool {
    let comp: Vec<u8> = v.iter().map(|&s| 1 - s).collect();
    let m = v.len();
    (1..=m).all(|t| cmp_rotation_at_level(&comp, t % m, w, level) != Ordering::Less)
}

/// |Y(w, p_b, B_b, i)|: words of length `i` continuing the complement-side
/// run `p_b` without any tracked rotation dropping below `w`, final runs
/// wrapping through `B_b`, which accumulates the chosen symbols.
pub fn y_enc(w: &Word, p_b: usize, b_b: SubwordRef, i: usize) -> Result<Count, RankError> {
    require_canonical(w)?;
    let ctx = DpCtx::new(w);
    if b_b.len + i > ctx.n || p_b >= ctx.n {
        return Err(RankError::BadLength);
    }
    let bound = to_bound(&ctx, b_b)?;
    let mut y = YMemo::new();
    Ok(Count::from(y_count(
        &ctx, &mut y, i, p_b, bound, b_b.len, false,
    )))
}

/// Checked evaluation of the enclosing DP at an explicit key.
pub fn c_size(w: &Word, key: &EncDpKey, m: usize) -> Result<Count, RankError> {
    require_canonical(w)?;
    if m == 0
        || m > w.len()
        || key.r == 0
        || key.r > m
        || key.i > m
        || key.p_f > key.i
        || key.p_b > key.i
        || key.b_f.len != key.i
        || key.b_b.len != key.i
        || (key.i > key.r && key.p_f != key.i - key.r)
    {
        return Err(RankError::BadLength);
    }
    let ctx = DpCtx::new(w);
    let bf = to_bound(&ctx, key.b_f)?;
    let bb = to_bound(&ctx, key.b_b)?;
    if bb == Bound::Bottom {
        return Ok(Count::from(0u32));
    }
    let engine = EncEngine::new(&ctx, m, m, key.r);
    let mut memo = HashMap::new();
    let mut y = YMemo::new();
    let mut stats = DpStats::default();
    Ok(Count::from(engine.c_dp(
        &mut memo, &mut y, &mut stats, key.i, key.p_f, key.p_b, bf, bb,
    )))
}

/// |γ(w, m, r)|: length-`m` words of enclosing classes whose first rotation
/// below `w` (identity as `m`) is `r`.
pub fn gamma_size(w: &Word, m: usize, r: usize) -> Result<Count, RankError> {
    require_canonical(w)?;
    if m == 0 || m > w.len() || r == 0 || r > m {
        return Err(RankError::BadLength);
    }
    let ctx = DpCtx::new(w);
    let mut y = YMemo::new();
    let mut stats = DpStats::default();
    Ok(Count::from(
        EncEngine::new(&ctx, m, m, r).gamma(&mut y, &mut stats),
    ))
}

/// |EN(w, m)| = Σ_{r ∈ [m]} |γ(w, m, r)|.
pub fn en_size(w: &Word, m: usize) -> Result<Count, RankError> {
    require_canonical(w)?;
    if m == 0 || m > w.len() {
        return Err(RankError::BadLength);
    }
    let ctx = DpCtx::new(w);
    let mut y = YMemo::new();
    let mut stats = DpStats::default();
    Ok(Count::from(en_raw(&ctx, &mut y, &mut stats, m, m)))
}

pub(crate) fn en_raw(ctx: &DpCtx, y: &mut YMemo, stats: &mut DpStats, m: usize, level: usize) -> u128 {
    (1..=m)
        .map(|r| EncEngine::new(ctx, level, m, r).gamma(y, stats))
        .sum()
}

/// Rank of `w` within classes of length `m` enclosing `w`: assembled from
/// `EN` over divisors by Möbius inversion and exact division by the Lyndon
/// length.
pub fn rank_enclosing(w: &Word, m: usize) -> Result<Count, RankError> {
    let (count, _) = rank_enclosing_with_stats(w, m)?;
    Ok(count)
}

/// Same as [`rank_enclosing`], also reporting memo-table sizes.
pub fn rank_enclosing_with_stats(w: &Word, m: usize) -> Result<(Count, DpStats), RankError> {
    require_canonical(w)?;
    if m == 0 || m > w.len() {
        return Err(RankError::BadLength);
    }
    let ctx = DpCtx::new(w);
    let mut stats = DpStats::default();
    let raw = rank_enclosing_raw(&ctx, m, &mut stats);
    Ok((Count::from(raw), stats))
}

pub(crate) fn rank_enclosing_raw(ctx: &DpCtx, m: usize, stats: &mut DpStats) -> u128 {
    let mut y = YMemo::new();
    let ds = divisors(m);
    // EN at every divisor length, all compared at level m
    let en: Vec<u128> = ds.iter().map(|&e| en_raw(ctx, &mut y, stats, e, m)).collect();
    stats.y_states += y.states();
    let mut total = 0u128;
    for (di, &d) in ds.iter().enumerate() {
        let mut acc = 0i128;
        for (ei, &e) in ds.iter().enumerate() {
            if d % e == 0 {
                acc += mobius(d / e) as i128 * en[ei] as i128;
            }
        }
        assert!(acc >= 0, "enclosing Möbius chain went negative");
        assert_eq!(
            acc % d as i128,
            0,
            "enclosing Lyndon count not divisible by length"
        );
        total += (acc / d as i128) as u128;
        let _ = di;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{en_set, gamma_set, oracle_rank, RankKind};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn c(n: u32) -> Count {
        Count::from(n)
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_size(&w("0011"), 4, 1).unwrap(), c(3));
        assert_eq!(gamma_size(&w("0011"), 4, 2).unwrap(), c(1));
        assert_eq!(gamma_size(&w("0011"), 4, 3).unwrap(), c(1));
        assert_eq!(gamma_size(&w("0011"), 4, 4).unwrap(), c(0));
        for m in 1..=6usize {
            for r in 1..=m {
                assert_eq!(gamma_size(&w("000000"), m, r).unwrap(), c(0));
            }
        }
    }

    #[test]
    fn en_examples() {
        assert_eq!(en_size(&w("0011"), 4).unwrap(), c(5));
        assert_eq!(en_size(&w("0011"), 2).unwrap(), c(1));
        assert_eq!(en_size(&w("0011"), 1).unwrap(), c(1));
    }

    #[test]
    fn rank_enclosing_examples() {
        assert_eq!(rank_enclosing(&w("0011"), 4).unwrap(), c(2));
        assert_eq!(rank_enclosing(&w("0001"), 4).unwrap(), c(1));
        assert_eq!(rank_enclosing(&w("000000"), 6).unwrap(), c(0));
    }

    #[test]
    fn gamma_matches_oracle_small() {
        for n in 1..=9usize {
            for bits in 0..(1u64 << n) {
                let word = Word::from_int(bits, n).unwrap();
                if !word.is_canonical_unlabelled() {
                    continue;
                }
                for m in 1..=n {
                    for r in 1..=m {
                        let got = gamma_size(&word, m, r).unwrap();
                        let expect = gamma_set(&word, m, r, m).unwrap().len();
                        assert_eq!(got, c(expect as u32), "γ w={word} m={m} r={r}");
                    }
                    let got = en_size(&word, m).unwrap();
                    let expect = en_set(&word, m, m).unwrap().len();
                    assert_eq!(got, c(expect as u32), "EN w={word} m={m}");
                }
            }
        }
    }

    #[test]
    fn rank_enclosing_matches_oracle_exhaustive() {
        for n in 1..=10usize {
            for bits in 0..(1u64 << n) {
                let word = Word::from_int(bits, n).unwrap();
                if !word.is_canonical_unlabelled() {
                    continue;
                }
                for m in 1..=n {
                    let got = rank_enclosing(&word, m).unwrap();
                    let expect = oracle_rank(&word, m, RankKind::Enclosing).unwrap();
                    assert_eq!(got, Count::from(expect), "w={word} m={m}");
                }
            }
        }
    }
}
