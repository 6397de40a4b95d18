//! Top-level assembly: the full unlabelled rank and its decomposition,
//! closed-form counting, and unranking.
//!
//! Every unlabelled class below `w` is symmetric, enclosing, or asymmetric
//! with both necklaces below `w`; asymmetric classes appear twice among the
//! necklaces below `w` and the other two kinds once, so the asymmetric part
//! is an exact halving of what plain necklace rank leaves over.

use crate::bounds::{DpCtx, DpStats};
use crate::enclosing::rank_enclosing_raw;
use crate::necklaces::{divisors, euler_phi, mobius, rank_necklaces_raw, Count, RankError};
use crate::symmetric::rank_sym_raw;
use crate::word::Word;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// The four components of one unlabelled rank query and their total.
///
/// Invariants, asserted at construction: the total is the sum of the
/// asymmetric, symmetric, and enclosing parts, and the plain necklace rank
/// equals twice the asymmetric part plus the other two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankBreakdown {
    pub rank_necklace: Count,
    pub rank_symmetric: Count,
    pub rank_enclosing: Count,
    pub rank_asymmetric: Count,
    pub rank_total: Count,
}

impl RankBreakdown {
    fn from_components(rn: u128, sn: u128, en: u128) -> RankBreakdown {
        let covered = sn
            .checked_add(en)
            .expect("component overflow");
        assert!(rn >= covered, "necklace rank below symmetric + enclosing");
        let rest = rn - covered;
        assert_eq!(rest % 2, 0, "asymmetric halving left a remainder");
        let an = rest / 2;
        let breakdown = RankBreakdown {
            rank_necklace: Count::from(rn),
            rank_symmetric: Count::from(sn),
            rank_enclosing: Count::from(en),
            rank_asymmetric: Count::from(an),
            rank_total: Count::from(an + sn + en),
        };
        assert_eq!(
            breakdown.rank_total,
            &breakdown.rank_asymmetric + &breakdown.rank_symmetric + &breakdown.rank_enclosing
        );
        assert_eq!(
            breakdown.rank_necklace,
            Count::from(2u32) * &breakdown.rank_asymmetric
                + &breakdown.rank_symmetric
                + &breakdown.rank_enclosing
        );
        breakdown
    }
}

/// Full rank of the canonical unlabelled representative `w` among unlabelled
/// classes of length `m ≤ |w|`, with all components.
pub fn rank_unlabelled(w: &Word, m: usize) -> Result<RankBreakdown, RankError> {
    let (b, _) = rank_unlabelled_with_stats(w, m)?;
    Ok(b)
}

/// Same as [`rank_unlabelled`], also reporting memo-table sizes.
pub fn rank_unlabelled_with_stats(
    w: &Word,
    m: usize,
) -> Result<(RankBreakdown, DpStats), RankError> {
    if !w.is_canonical_unlabelled() {
        return Err(RankError::NotCanonical);
    }
    if m == 0 || m > w.len() {
        return Err(RankError::BadLength);
    }
    let ctx = DpCtx::new(w);
    let mut stats = DpStats::default();
    let rn = rank_necklaces_raw(&ctx, m);
    let sn = rank_sym_raw(&ctx, m, &mut stats);
    let en = rank_enclosing_raw(&ctx, m, &mut stats);
    Ok((RankBreakdown::from_components(rn, sn, en), stats))
}

/// Number of binary unlabelled necklaces of length `n`:
/// (1/2n) Σ_{d|n} φ(2d) 2^{n/d}.
///
/// The transcription of this count that circulates without the leading
/// normalization does not match direct enumeration (it yields 16 instead of
/// 4 at n = 4); the form used here is checked against exhaustive class
/// tables in the tests.
pub fn count_unlabelled(n: usize) -> Count {
    assert!(n >= 1);
    let sum: u128 = divisors(n)
        .iter()
        .map(|&d| euler_phi(2 * d) as u128 * (1u128 << (n / d)))
        .sum();
    assert_eq!(sum % (2 * n) as u128, 0);
    Count::from(sum / (2 * n) as u128)
}

/// Number of aperiodic binary unlabelled necklaces of length `n`, by Möbius
/// inversion of [`count_unlabelled`] over divisors.
pub fn count_unlabelled_lyndon(n: usize) -> Count {
    assert!(n >= 1);
    let mut acc = 0i128;
    for &d in &divisors(n) {
        let c: u128 = count_unlabelled(d).try_into().unwrap();
        acc += mobius(n / d) as i128 * c as i128;
    }
    assert!(acc >= 0);
    Count::from(acc as u128)
}

/// Canonical representative of the class with rank `k` among unlabelled
/// classes of length `n`: binary search over word values, probing ranks only
/// at canonical ceilings.
pub fn unrank_unlabelled(k: &Count, n: usize) -> Result<Word, RankError> {
    if n == 0 || n > crate::word::MAX_LEN {
        return Err(RankError::BadLength);
    }
    let total = count_unlabelled(n);
    if k >= &total {
        return Err(RankError::RankOutOfRange);
    }
    let total_u: u128 = total.try_into().unwrap();
    let k_u: u128 = k.try_into().map_err(|_| RankError::RankOutOfRange)?;

    let mut cache: BTreeMap<Vec<u8>, u128> = BTreeMap::new();
    // reps at or below x, as a function of the integer value x
    let mut reps_through = |x: u128| -> u128 {
        let next = x + 1;
        if next >= (1u128 << n) {
            return total_u;
        }
        let next_word: Vec<u8> = (0..n)
            .map(|i| ((next >> (n - 1 - i)) & 1) as u8)
            .collect();
        match next_canonical_geq(&next_word) {
            None => total_u,
            Some(ceiling) => *cache.entry(ceiling.clone()).or_insert_with(|| {
                let word = Word::from_symbols(&ceiling).unwrap();
                let rank = rank_unlabelled(&word, n).expect("ceiling is canonical");
                rank.rank_total.try_into().unwrap()
            }),
        }
    };

    let mut lo = 0u128;
    let mut hi = (1u128 << n) - 1;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if reps_through(mid) >= k_u + 1 {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let found = Word::from_int(lo as u64, n).unwrap();
    debug_assert!(found.is_canonical_unlabelled());
    Ok(found)
}

/// Smallest canonical unlabelled representative that is `≥ x` as an
/// equal-length binary value, or `None` when none remains.
pub(crate) fn next_canonical_geq(x: &[u8]) -> Option<Vec<u8>> {
    let mut cur = x.to_vec();
    loop {
        let neck = next_necklace_geq(&cur)?;
        let word = Word::from_symbols(&neck).unwrap();
        if word.is_canonical_unlabelled() {
            return Some(neck);
        }
        cur = increment(&neck)?;
    }
}

/// Smallest canonical necklace word `≥ x` of the same length, found by a
/// prefix walk over prenecklaces (prefixes no suffix of which falls below
/// the matching prefix).
fn next_necklace_geq(x: &[u8]) -> Option<Vec<u8>> {
    let mut prefix = Vec::with_capacity(x.len());
    search_necklace(&mut prefix, x, true)
}

fn search_necklace(prefix: &mut Vec<u8>, x: &[u8], tight: bool) -> Option<Vec<u8>> {
    let n = x.len();
    if prefix.len() == n {
        let word = Word::from_symbols(prefix).unwrap();
        return if word.is_necklace() {
            Some(prefix.clone())
        } else {
            None
        };
    }
    let lo = if tight { x[prefix.len()] } else { 0 };
    for c in lo..=1u8 {
        prefix.push(c);
        if is_prenecklace(prefix) {
            if let Some(found) = search_necklace(prefix, x, tight && c == x[prefix.len() - 1]) {
                prefix.pop();
                return Some(found);
            }
        }
        prefix.pop();
    }
    None
}

/// True iff no suffix of `p` is strictly below the prefix of `p` of the same
/// length; exactly the prefixes extendable to canonical necklaces.
fn is_prenecklace(p: &[u8]) -> bool {
    let l = p.len();
    for s in 1..l {
        match crate::necklaces::prefix_cmp(&p[s..], p) {
            core::cmp::Ordering::Less => return false,
            _ => {}
        }
    }
    true
}

fn increment(v: &[u8]) -> Option<Vec<u8>> {
    let mut out = v.to_vec();
    for i in (0..out.len()).rev() {
        if out[i] == 0 {
            out[i] = 1;
            for s in &mut out[i + 1..] {
                *s = 0;
            }
            return Some(out);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_classes, oracle_rank, RankKind};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn c(n: u32) -> Count {
        Count::from(n)
    }

    #[test]
    fn breakdown_examples() {
        let b = rank_unlabelled(&w("0011"), 4).unwrap();
        assert_eq!(b.rank_necklace, c(2));
        assert_eq!(b.rank_symmetric, c(0));
        assert_eq!(b.rank_enclosing, c(2));
        assert_eq!(b.rank_asymmetric, c(0));
        assert_eq!(b.rank_total, c(2));

        let b = rank_unlabelled(&w("0101"), 4).unwrap();
        assert_eq!(b.rank_necklace, c(3));
        assert_eq!(b.rank_symmetric, c(1));
        assert_eq!(b.rank_enclosing, c(2));
        assert_eq!(b.rank_asymmetric, c(0));
        assert_eq!(b.rank_total, c(3));

        let b = rank_unlabelled(&w("0000"), 4).unwrap();
        assert_eq!(b.rank_total, c(0));
    }

    #[test]
    fn rejects_non_canonical() {
        assert!(matches!(
            rank_unlabelled(&w("0110"), 4),
            Err(RankError::NotCanonical)
        ));
    }

    #[test]
    fn counts_match_oracle() {
        let expected = [1u32, 2, 2, 4, 4, 8];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(count_unlabelled(i + 1), c(e));
        }
        for n in 1..=12usize {
            let table = enumerate_classes(n).unwrap();
            assert_eq!(count_unlabelled(n), Count::from(table.count()));
            let aperiodic = table.classes.iter().filter(|cl| cl.period == n).count();
            assert_eq!(count_unlabelled_lyndon(n), Count::from(aperiodic));
        }
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(unrank_unlabelled(&c(0), 4).unwrap(), w("0000"));
        assert_eq!(unrank_unlabelled(&c(2), 4).unwrap(), w("0011"));
        assert_eq!(unrank_unlabelled(&c(3), 4).unwrap(), w("0101"));
        assert!(matches!(
            unrank_unlabelled(&c(4), 4),
            Err(RankError::RankOutOfRange)
        ));
    }

    #[test]
    fn rank_matches_oracle_exhaustive_small() {
        for n in 1..=10usize {
            for bits in 0..(1u64 << n) {
                let word = Word::from_int(bits, n).unwrap();
                if !word.is_canonical_unlabelled() {
                    continue;
                }
                let b = rank_unlabelled(&word, n).unwrap();
                let expect = oracle_rank(&word, n, RankKind::Unlabelled).unwrap();
                assert_eq!(b.rank_total, Count::from(expect), "w={word}");
                let an = oracle_rank(&word, n, RankKind::Asymmetric).unwrap();
                assert_eq!(b.rank_asymmetric, Count::from(an), "AN w={word}");
            }
        }
    }

    #[test]
    fn roundtrip_small() {
        for n in 1..=10usize {
            let total: u128 = count_unlabelled(n).try_into().unwrap();
            for k in 0..total {
                let rep = unrank_unlabelled(&Count::from(k), n).unwrap();
                let rank = rank_unlabelled(&rep, n).unwrap();
                assert_eq!(rank.rank_total, Count::from(k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn next_canonical_matches_scan() {
        for n in 1..=10usize {
            let reps: Vec<u64> = (0..(1u64 << n))
                .filter(|&bits| Word::from_int(bits, n).unwrap().is_canonical_unlabelled())
                .collect();
            for start in 0..(1u64 << n) {
                let expect = reps.iter().find(|&&r| r >= start).copied();
                let x = Word::from_int(start, n).unwrap();
                let got = next_canonical_geq(x.as_slice())
                    .map(|v| Word::from_symbols(&v).unwrap().to_int());
                assert_eq!(got, expect, "n={n} start={start:0width$b}", width = n);
            }
        }
    }
}
