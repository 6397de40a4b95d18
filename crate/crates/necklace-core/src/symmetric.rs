//! Ranking within symmetric unlabelled necklaces.
//!
//! A symmetric class of length `m` is generated by an antiperiodic block of
//! length `2r` (front half, complemented back half) for some `r | m/2`. For
//! each target rotation `j ∈ [1, r]` the blocks split into α (some rotation
//! in the front window falls below `w`, first at `j`) and β (additionally
//! every back-window rotation stays above `w`); blocks whose first
//! below-rotation is late biject onto β members by a half turn, so
//! `|RA| = Σ_j |α_j| + |β_j|`. Both families are counted by suffix DPs over
//! (prefix-overlap, bounding-subword) states, with prefixes that are still
//! subwords of `w` enumerated directly as seeds.
//!
//! Assembly: counts with exact antiperiod `d` are recovered from the
//! antiperiod-divisible counts by Möbius inversion over divisors with odd
//! quotient, divided exactly by the block length to reach Lyndon classes,
//! then summed over admissible block lengths.

use crate::bounds::{Bound, DpCtx, DpStats, SubwordRef};
use crate::necklaces::{divisors, longest_proper_run, mobius, prefix_cmp, Count, RankError};
use crate::word::{cmp_rotation_at_level, Word};
use alloc::vec::Vec;
use core::cmp::Ordering;
use hashbrown::HashMap;

/// Key of the single-bound suffix DP: `b` bounds the complemented half of
/// the first `i` symbols, `p` is the current overlap with the prefix of `w`,
/// and `(j, r)` fix the target rotation and the antiperiod.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymDpKeySA {
    pub p: usize,
    pub b: SubwordRef,
    pub i: usize,
    pub j: usize,
    pub r: usize,
}

/// Key of the double-bound suffix DP: bounds and overlaps for the front half
/// and its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymDpKeySB {
    pub p_f: usize,
    pub p_b: usize,
    pub b_f: SubwordRef,
    pub b_b: SubwordRef,
    pub i: usize,
    pub j: usize,
    pub r: usize,
}

/// Shared stay-above table: counts suffix completions whose tracked-side
/// rotations never fall below `w`, the final wrap decided by an accumulated
/// bound. Keyed by bound length too, so one table serves every `(j, r)`.
pub(crate) struct YMemo {
    map: HashMap<u64, u128>,
    states: u64,
}

impl YMemo {
    pub fn new() -> YMemo {
        YMemo {
            map: HashMap::new(),
            states: 0,
        }
    }

    pub fn states(&self) -> u64 {
        self.states
    }
}

/// Counts words of length `len` extending run `p` such that no tracked
/// rotation ever drops below `w`. The wrap bound grows by the chosen symbol
/// (complemented when `flip` is set) and final runs resolve through it.
pub(crate) fn y_count(
    ctx: &DpCtx,
    memo: &mut YMemo,
    len: usize,
    p: usize,
    b: Bound,
    blen: usize,
    flip: bool,
) -> u128 {
    if len == 0 {
        return if ctx.runs_wrap_ok(p, b, blen) { 1 } else { 0 };
    }
    let key = (flip as u64) << 44
        | (len as u64) << 36
        | (blen as u64) << 28
        | (p as u64) << 14
        | b.code();
    if let Some(&v) = memo.map.get(&key) {
        return v;
    }
    let mut val = 0u128;
    for c in 0..2u8 {
        let Some(p2) = ctx.auto.step(p, c) else { continue };
        let ext = if flip { 1 - c } else { c };
        let Some(b2) = ctx.wx.try_extend(b, blen, ext) else { continue };
        val += y_count(ctx, memo, len - 1, p2, b2, blen + 1, flip);
    }
    memo.map.insert(key, val);
    memo.states += 1;
    val
}

pub(crate) struct SymEngine<'a> {
    ctx: &'a DpCtx,
    /// Effective word length for tie-breaking in direct membership checks.
    level: usize,
    r: usize,
    j: usize,
}

impl<'a> SymEngine<'a> {
    pub fn new(ctx: &'a DpCtx, level: usize, r: usize, j: usize) -> Self {
        SymEngine { ctx, level, r, j }
    }

    /// Suffix count of the α DP at state `(i, p, b)`.
    fn sa(
        &self,
        memo: &mut HashMap<u64, u128>,
        stats: &mut DpStats,
        i: usize,
        p: usize,
        b: Bound,
    ) -> u128 {
        let (r, j) = (self.r, self.j);
        let ctx = self.ctx;
        if i == r {
            if j == r {
                // the target rotation reads the whole back half first
                if !ctx.wx.wrap_below(0, b, r) {
                    return 0;
                }
                // earlier rotations still matching a prefix must stay above
                return if ctx.runs_wrap_ok(p, b, r) { 1 } else { 0 };
            }
            debug_assert_eq!(p, r - j);
            return if ctx.wx.wrap_below(p, b, r) { 1 } else { 0 };
        }
        let key = (i as u64) << 26 | (p as u64) << 13 | b.code();
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let val = if i == j {
            if p != 0 {
                0
            } else {
                // the target rotation opens here and must start with 0
                match ctx.wx.try_extend(b, i, 1) {
                    Some(b2) => self.sa(memo, stats, i + 1, 1, b2),
                    None => 0,
                }
            }
        } else if i < j {
            let mut acc = 0u128;
            for x in 0..2u8 {
                let Some(p2) = ctx.auto.step(p, x) else { continue };
                let Some(b2) = ctx.wx.try_extend(b, i, 1 - x) else { continue };
                acc += self.sa(memo, stats, i + 1, p2, b2);
            }
            acc
        } else {
            debug_assert_eq!(p, i - j);
            if ctx.w.sym(p) == 1 {
                // 0 sends the target rotation strictly below: suffix is free
                (1u128 << (r - i - 1))
                    + self.sa(memo, stats, i + 1, p + 1, ctx.wx.extend(b, i, 0))
            } else {
                self.sa(memo, stats, i + 1, p + 1, ctx.wx.extend(b, i, 1))
            }
        };
        memo.insert(key, val);
        stats.sa_states += 1;
        val
    }

    /// Suffix count of the β DP at state `(i, p_f, p_b, b_f, b_b)`.
    #[allow(clippy::too_many_arguments)]
    fn sb(
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
        let (r, j) = (self.r, self.j);
        let ctx = self.ctx;
        debug_assert!(
            bf != Bound::Bottom,
            "front below minimum puts the word itself under w"
        );
        if i == r {
            if j == r {
                if !ctx.wx.wrap_below(0, bb, r) {
                    return 0;
                }
                if !ctx.runs_wrap_ok(pf, bb, r) {
                    return 0;
                }
            } else {
                debug_assert_eq!(pf, r - j);
                if !ctx.wx.wrap_below(pf, bb, r) {
                    return 0;
                }
            }
            // back-window rotations still matching wrap into the front half
            return if ctx.runs_wrap_ok(pb, bf, r) { 1 } else { 0 };
        }
        let key =
            (i as u64) << 40 | (pf as u64) << 33 | (pb as u64) << 26 | bf.code() << 13 | bb.code();
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let val = if i == j {
            if pf != 0 {
                0
            } else {
                let pb2 = ctx.auto.step(pb, 1).expect("symbol 1 never drops a run");
                match (ctx.wx.try_extend(bf, i, 0), ctx.wx.try_extend(bb, i, 1)) {
                    (Some(bf2), Some(bb2)) => self.sb(memo, y, stats, i + 1, 1, pb2, bf2, bb2),
                    _ => 0,
                }
            }
        } else if i < j {
            let mut acc = 0u128;
            for x in 0..2u8 {
                let Some(pf2) = ctx.auto.step(pf, x) else { continue };
                let Some(pb2) = ctx.auto.step(pb, 1 - x) else { continue };
                let Some(bf2) = ctx.wx.try_extend(bf, i, x) else { continue };
                let Some(bb2) = ctx.wx.try_extend(bb, i, 1 - x) else { continue };
                acc += self.sb(memo, y, stats, i + 1, pf2, pb2, bf2, bb2);
            }
            acc
        } else {
            debug_assert_eq!(pf, i - j);
            if ctx.w.sym(pf) == 1 {
                // 0 resolves the target rotation below w; only the back
                // window still constrains the remaining symbols
                let pb2 = ctx.auto.step(pb, 1).expect("symbol 1 never drops a run");
                let mut acc =
                    y_count(ctx, y, r - i - 1, pb2, ctx.wx.extend(bf, i, 0), i + 1, true);
                if let Some(pb3) = ctx.auto.step(pb, 0) {
                    acc += self.sb(
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
                self.sb(
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
        stats.sb_states += 1;
        val
    }

    /// |α(w, r, j)| at this engine's comparison level.
    pub fn alpha(&self, stats: &mut DpStats) -> u128 {
        let r = self.r;
        let ctx = self.ctx;
        let mut memo: HashMap<u64, u128> = HashMap::new();
        let mut total = 0u128;

        // back halves that are subwords of w at full length
        for idx in 0..ctx.wx.distinct_count(r) {
            let back = ctx.wx.value(ctx.wx.sub_ref(r, idx));
            let block = assemble_block_back(&back);
            if first_front_below(&block, &ctx.w, self.level, r) == Some(self.j) {
                total += 1;
            }
        }

        // back halves leaving subword territory at length i
        for i in 1..=r {
            for base in 0..ctx.wx.distinct_count(i - 1) {
                let stem = ctx.wx.value(ctx.wx.sub_ref(i - 1, base));
                for x in 0..2u8 {
                    let mut back = stem.clone();
                    back.push(x);
                    let Some(b) = ctx.wx.classify_bound(&back) else {
                        continue;
                    };
                    let front: Vec<u8> = back.iter().map(|&s| 1 - s).collect();
                    total += self.alpha_seed(&mut memo, stats, i, &front, b);
                }
            }
        }
        total
    }

    /// Contribution of one non-subword back prefix of length `i`.
    fn alpha_seed(
        &self,
        memo: &mut HashMap<u64, u128>,
        stats: &mut DpStats,
        i: usize,
        front: &[u8],
        b: Bound,
    ) -> u128 {
        let (r, j) = (self.r, self.j);
        let w = self.ctx.w.as_slice();
        let mut equal_before_j = false;
        for t in 1..i {
            let o = prefix_cmp(&front[t..], w);
            if t < j {
                match o {
                    Ordering::Less => return 0,
                    Ordering::Equal => equal_before_j = true,
                    Ordering::Greater => {}
                }
            } else if t == j {
                match o {
                    Ordering::Greater => return 0,
                    Ordering::Less => {
                        // target rotation already below; an earlier rotation
                        // still matching would follow it below w
                        if equal_before_j {
                            return 0;
                        }
                        return 1u128 << (r - i);
                    }
                    Ordering::Equal => {}
                }
            }
        }
        if j < i {
            if equal_before_j {
                return 0;
            }
            self.sa(memo, stats, i, i - j, b)
        } else if j == i {
            if equal_before_j {
                return 0;
            }
            self.sa(memo, stats, i, 0, b)
        } else {
            self.sa(memo, stats, i, longest_proper_run(front, w), b)
        }
    }

    /// |β(w, r, j)| at this engine's comparison level.
    pub fn beta(&self, y: &mut YMemo, stats: &mut DpStats) -> u128 {
        let r = self.r;
        let ctx = self.ctx;
        let mut memo: HashMap<u64, u128> = HashMap::new();
        let mut total = 0u128;

        // fronts whose value or complement stays a subword to full length
        for front in joint_regime_values(ctx, r) {
            let block = assemble_block_front(&front);
            if first_front_below(&block, &ctx.w, self.level, r) == Some(self.j)
                && late_window_ok(&block, &ctx.w, self.level, r)
            {
                total += 1;
            }
        }

        // fronts leaving the joint subword regime at length i
        for i in 1..=r {
            for stem in joint_regime_values(ctx, i - 1) {
                for x in 0..2u8 {
                    let mut front = stem.clone();
                    front.push(x);
                    let back: Vec<u8> = front.iter().map(|&s| 1 - s).collect();
                    let Some(bf) = ctx.wx.classify_bound(&front) else { continue };
                    let Some(bb) = ctx.wx.classify_bound(&back) else { continue };
                    if bf == Bound::Bottom {
                        continue; // the word itself would sit below w
                    }
                    total += self.beta_seed(&mut memo, y, stats, i, &front, &back, bf, bb);
                }
            }
        }
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn beta_seed(
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
        let (r, j) = (self.r, self.j);
        let w = self.ctx.w.as_slice();
        // no back-window rotation may have fallen below w
        for s in 1..i {
            if prefix_cmp(&back[s..], w) == Ordering::Less {
                return 0;
            }
        }
        let pb = longest_proper_run(back, w);
        let mut equal_before_j = false;
        for t in 1..i {
            let o = prefix_cmp(&front[t..], w);
            if t < j {
                match o {
                    Ordering::Less => return 0,
                    Ordering::Equal => equal_before_j = true,
                    Ordering::Greater => {}
                }
            } else if t == j {
                match o {
                    Ordering::Greater => return 0,
                    Ordering::Less => {
                        if equal_before_j {
                            return 0;
                        }
                        return y_count(self.ctx, y, r - i, pb, bf, i, true);
                    }
                    Ordering::Equal => {}
                }
            }
        }
        if j < i {
            if equal_before_j {
                return 0;
            }
            self.sb(memo, y, stats, i, i - j, pb, bf, bb)
        } else if j == i {
            if equal_before_j {
                return 0;
            }
            self.sb(memo, y, stats, i, 0, pb, bf, bb)
        } else {
            let pf = longest_proper_run(front, w);
            self.sb(memo, y, stats, i, pf, pb, bf, bb)
        }
    }
}

/// block := S(back) : back.
fn assemble_block_back(back: &[u8]) -> Vec<u8> {
    let mut block: Vec<u8> = back.iter().map(|&s| 1 - s).collect();
    block.extend_from_slice(back);
    block
}

/// block := front : S(front).
fn assemble_block_front(front: &[u8]) -> Vec<u8> {
    let mut block = front.to_vec();
    block.extend(front.iter().map(|&s| 1 - s));
    block
}

/// First rotation `t ∈ [1, r]` of the block resolving below `w`, if any.
fn first_front_below(block: &[u8], w: &Word, level: usize, r: usize) -> Option<usize> {
    (1..=r).find(|&t| cmp_rotation_at_level(block, t, w, level) == Ordering::Less)
}

/// True iff no rotation `t ∈ [r+1, 2r]` (identity included) resolves below.
fn late_window_ok(block: &[u8], w: &Word, level: usize, r: usize) -> bool {
    (r + 1..=2 * r).all(|t| cmp_rotation_at_level(block, t % (2 * r), w, level) != Ordering::Less)
}

/// Distinct length-`len` values that are subwords of `w` or complements of
/// subwords of `w`.
pub(crate) fn joint_regime_values(ctx: &DpCtx, len: usize) -> Vec<Vec<u8>> {
    let mut set: alloc::collections::BTreeSet<Vec<u8>> = alloc::collections::BTreeSet::new();
    for idx in 0..ctx.wx.distinct_count(len) {
        let v = ctx.wx.value(ctx.wx.sub_ref(len, idx));
        set.insert(v.iter().map(|&s| 1 - s).collect());
        set.insert(v);
    }
    set.into_iter().collect()
}

pub(crate) fn require_canonical(w: &Word) -> Result<(), RankError> {
    if w.is_canonical_unlabelled() {
        Ok(())
    } else {
        Err(RankError::NotCanonical)
    }
}

/// |α(w, r, j)|: antiperiodic blocks of length `2r` whose first front-window
/// rotation below `w` is `j`, the blocks compared as words of length `2r`.
pub fn alpha_size(w: &Word, r: usize, j: usize) -> Result<Count, RankError> {
    require_canonical(w)?;
    if r == 0 || j == 0 || j > r || 2 * r > w.len() {
        return Err(RankError::BadLength);
    }
    let ctx = DpCtx::new(w);
    let mut stats = DpStats::default();
    Ok(Count::from(
        SymEngine::new(&ctx, 2 * r, r, j).alpha(&mut stats),
    ))
}

/// |β(w, r, j)|: the subset of α whose back-window rotations all stay above
/// `w`, the blocks compared as words of length `2r`.
pub fn beta_size(w: &Word, r: usize, j: usize) -> Result<Count, RankError> {
    require_canonical(w)?;
    if r == 0 || j == 0 || j > r || 2 * r > w.len() {
        return Err(RankError::BadLength);
    }
    let ctx = DpCtx::new(w);
    let mut y = YMemo::new();
    let mut stats = DpStats::default();
    Ok(Count::from(
        SymEngine::new(&ctx, 2 * r, r, j).beta(&mut y, &mut stats),
    ))
}

/// |RA(w, m, S, r)|: length-`m` words `v` with `v_i = S(v_{i+r})` lying in a
/// symmetric class below `w`. Zero unless `2r` divides `m`.
pub fn ra_size(w: &Word, m: usize, r: usize) -> Result<Count, RankError> {
    require_canonical(w)?;
    if m == 0 || m > w.len() || r == 0 {
        return Err(RankError::BadLength);
    }
    if m % (2 * r) != 0 {
        return Ok(Count::from(0u32));
    }
    let ctx = DpCtx::new(w);
    let mut y = YMemo::new();
    let mut stats = DpStats::default();
    Ok(Count::from(ra_raw(&ctx, &mut y, &mut stats, m, r)))
}

pub(crate) fn ra_raw(ctx: &DpCtx, y: &mut YMemo, stats: &mut DpStats, m: usize, r: usize) -> u128 {
    debug_assert_eq!(m % (2 * r), 0);
    let mut total = 0u128;
    for j in 1..=r {
        let engine = SymEngine::new(ctx, m, r, j);
        total += engine.alpha(stats);
        total += engine.beta(y, stats);
    }
    total
}

/// Rank of `w` within symmetric Lyndon classes of length `l` (zero for odd
/// `l`): Möbius inversion of the antiperiod counts over odd quotients,
/// divided exactly by the block length.
pub fn rank_sym_lyndon(w: &Word, l: usize) -> Result<Count, RankError> {
    require_canonical(w)?;
    if l == 0 || l > w.len() {
        return Err(RankError::BadLength);
    }
    if l % 2 != 0 {
        return Ok(Count::from(0u32));
    }
    let ctx = DpCtx::new(w);
    let mut y = YMemo::new();
    let mut stats = DpStats::default();
    Ok(Count::from(sym_lyndon_raw(
        &ctx,
        &mut y,
        &mut stats,
        l,
        l / 2,
    )))
}

/// Symmetric Lyndon classes with block length `2r`, counted at level `m`.
pub(crate) fn sym_lyndon_raw(
    ctx: &DpCtx,
    y: &mut YMemo,
    stats: &mut DpStats,
    m: usize,
    r: usize,
) -> u128 {
    // A block with exact antiperiod d is antiperiodic at r only when r/d is
    // odd, so the inversion runs over the odd-quotient divisor lattice.
    let mut acc = 0i128;
    for &d in &divisors(r) {
        if (r / d) % 2 == 1 {
            acc += mobius(r / d) as i128 * ra_raw(ctx, y, stats, m, d) as i128;
        }
    }
    assert!(acc >= 0, "Möbius chain went negative");
    let block = 2 * r as i128;
    assert_eq!(
        acc % block,
        0,
        "symmetric Lyndon count not divisible by block length"
    );
    (acc / block) as u128
}

/// Rank of `w` within symmetric classes of length `m` (zero for odd `m`).
pub fn rank_sym_necklaces(w: &Word, m: usize) -> Result<Count, RankError> {
    let (count, _) = rank_sym_necklaces_with_stats(w, m)?;
    Ok(count)
}

/// Same as [`rank_sym_necklaces`], also reporting memo-table sizes.
pub fn rank_sym_necklaces_with_stats(w: &Word, m: usize) -> Result<(Count, DpStats), RankError> {
    require_canonical(w)?;
    if m == 0 || m > w.len() {
        return Err(RankError::BadLength);
    }
    let ctx = DpCtx::new(w);
    let mut stats = DpStats::default();
    let raw = rank_sym_raw(&ctx, m, &mut stats);
    Ok((Count::from(raw), stats))
}

pub(crate) fn rank_sym_raw(ctx: &DpCtx, m: usize, stats: &mut DpStats) -> u128 {
    if m % 2 != 0 {
        return 0;
    }
    let mut y = YMemo::new();
    let mut total = 0u128;
    for &r in &divisors(m / 2) {
        total += sym_lyndon_raw(ctx, &mut y, stats, m, r);
    }
    stats.y_states += y.states();
    total
}

/// |Y(w, i, p_b, B_f)|: words of length `i` continuing the back-side run
/// `p_b` without any tracked rotation dropping below `w`, final runs
/// wrapping through `B_f`, which accumulates the complemented symbols.
pub fn y_sym(w: &Word, i: usize, p_b: usize, b_f: SubwordRef) -> Result<Count, RankError> {
    require_canonical(w)?;
    let ctx = DpCtx::new(w);
    if b_f.len + i > ctx.n || p_b >= ctx.n {
        return Err(RankError::BadLength);
    }
    let bound = to_bound(&ctx, b_f)?;
    let mut y = YMemo::new();
    Ok(Count::from(y_count(
        &ctx, &mut y, i, p_b, bound, b_f.len, true,
    )))
}

/// Checked evaluation of the α suffix DP at an explicit key.
pub fn sa(w: &Word, key: &SymDpKeySA) -> Result<Count, RankError> {
    require_canonical(w)?;
    if key.r == 0
        || key.j == 0
        || key.j > key.r
        || key.i > key.r
        || key.p > key.i
        || key.b.len != key.i
        || 2 * key.r > w.len()
        || (key.i > key.j && key.p != key.i - key.j)
    {
        return Err(RankError::BadLength);
    }
    let ctx = DpCtx::new(w);
    let bound = to_bound(&ctx, key.b)?;
    let engine = SymEngine::new(&ctx, 2 * key.r, key.r, key.j);
    let mut memo = HashMap::new();
    let mut stats = DpStats::default();
    Ok(Count::from(engine.sa(
        &mut memo, &mut stats, key.i, key.p, bound,
    )))
}

/// Checked evaluation of the β suffix DP at an explicit key.
pub fn sb(w: &Word, key: &SymDpKeySB) -> Result<Count, RankError> {
    require_canonical(w)?;
    if key.r == 0
        || key.j == 0
        || key.j > key.r
        || key.i > key.r
        || key.p_f > key.i
        || key.p_b > key.i
        || key.b_f.len != key.i
        || key.b_b.len != key.i
        || 2 * key.r > w.len()
        || (key.i > key.j && key.p_f != key.i - key.j)
    {
        return Err(RankError::BadLength);
    }
    let ctx = DpCtx::new(w);
    let bf = to_bound(&ctx, key.b_f)?;
    let bb = to_bound(&ctx, key.b_b)?;
    if bf == Bound::Bottom {
        return Ok(Count::from(0u32));
    }
    let engine = SymEngine::new(&ctx, 2 * key.r, key.r, key.j);
    let mut memo = HashMap::new();
    let mut y = YMemo::new();
    let mut stats = DpStats::default();
    Ok(Count::from(engine.sb(
        &mut memo, &mut y, &mut stats, key.i, key.p_f, key.p_b, bf, bb,
    )))
}

/// Translates a public reference into an internal bound. The reference must
/// name an existing distinct value at its canonical start with a nonempty
/// strictly-bounded gap; anything else is a malformed key.
pub(crate) fn to_bound(ctx: &DpCtx, r: SubwordRef) -> Result<Bound, RankError> {
    if r.len == 0 {
        return Ok(Bound::Sub(0));
    }
    if r.len > ctx.n || r.start >= ctx.n {
        return Err(RankError::BadLength);
    }
    match ctx.wx.bound_index(r) {
        Some(idx) if ctx.wx.gap_nonempty(r) => Ok(Bound::Sub(idx)),
        _ => Err(RankError::BadLength),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{alpha_set, beta_set, oracle_rank, ra_set, RankKind};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn c(n: u32) -> Count {
        Count::from(n)
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_size(&w("0011"), 1, 1).unwrap(), c(0));
        assert_eq!(alpha_size(&w("0111"), 1, 1).unwrap(), c(1));
        for r in 1..=3usize {
            for j in 1..=r {
                assert_eq!(alpha_size(&w("00000000"), r, j).unwrap(), c(0));
            }
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_size(&w("0111"), 1, 1).unwrap(), c(1));
        assert_eq!(beta_size(&w("0011"), 1, 1).unwrap(), c(0));
    }

    #[test]
    fn alpha_beta_match_oracle_small() {
        for n in 2..=9usize {
            for bits in 0..(1u64 << n) {
                let word = Word::from_int(bits, n).unwrap();
                if !word.is_canonical_unlabelled() {
                    continue;
                }
                for r in 1..=n / 2 {
                    for j in 1..=r {
                        let a = alpha_size(&word, r, j).unwrap();
                        let b = beta_size(&word, r, j).unwrap();
                        let oa = alpha_set(&word, r, j, 2 * r).unwrap().len();
                        let ob = beta_set(&word, r, j, 2 * r).unwrap().len();
                        assert_eq!(a, c(oa as u32), "alpha w={word} r={r} j={j}");
                        assert_eq!(b, c(ob as u32), "beta w={word} r={r} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn ra_examples() {
        assert_eq!(ra_size(&w("0111"), 2, 1).unwrap(), c(2));
        assert_eq!(ra_size(&w("0011"), 2, 1).unwrap(), c(0));
        assert_eq!(ra_size(&w("010101"), 6, 2).unwrap(), c(0));
    }

    #[test]
    fn ra_matches_oracle_small() {
        for n in 2..=10usize {
            for bits in 0..(1u64 << n) {
                let word = Word::from_int(bits, n).unwrap();
                if !word.is_canonical_unlabelled() {
                    continue;
                }
                for m in 1..=n {
                    for r in 1..=m {
                        if m % (2 * r) != 0 {
                            continue;
                        }
                        let got = ra_size(&word, m, r).unwrap();
                        let expect = ra_set(&word, m, r).unwrap().len();
                        assert_eq!(got, c(expect as u32), "RA w={word} m={m} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn sym_lyndon_examples() {
        assert_eq!(rank_sym_lyndon(&w("0111"), 2).unwrap(), c(1));
        assert_eq!(rank_sym_lyndon(&w("0011"), 2).unwrap(), c(0));
        assert_eq!(rank_sym_lyndon(&w("01011011"), 3).unwrap(), c(0));
    }

    #[test]
    fn rank_sym_examples() {
        assert_eq!(rank_sym_necklaces(&w("010101"), 6).unwrap(), c(1));
        assert_eq!(rank_sym_necklaces(&w("000111"), 6).unwrap(), c(0));
        assert_eq!(rank_sym_necklaces(&w("0101"), 3).unwrap(), c(0));
        assert_eq!(rank_sym_necklaces(&w("0101"), 4).unwrap(), c(1));
    }

    #[test]
    fn rank_sym_matches_oracle_exhaustive() {
        for n in 1..=10usize {
            for bits in 0..(1u64 << n) {
                let word = Word::from_int(bits, n).unwrap();
                if !word.is_canonical_unlabelled() {
                    continue;
                }
                for m in 1..=n {
                    let got = rank_sym_necklaces(&word, m).unwrap();
                    let expect = oracle_rank(&word, m, RankKind::Symmetric).unwrap();
                    assert_eq!(got, Count::from(expect), "w={word} m={m}");
                }
            }
        }
    }

    #[test]
    fn rejects_non_canonical_words() {
        assert!(matches!(
            rank_sym_necklaces(&w("1100"), 4),
            Err(RankError::NotCanonical)
        ));
    }
}
