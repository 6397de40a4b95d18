//! Exhaustive ground truth at small lengths.
//!
//! Everything here is computed by scanning word space with the definitions
//! alone. It shares nothing with the counting DPs beyond the word
//! primitives, so it cannot inherit their mistakes; disagreement between a
//! DP and this module always indicts the DP.

use crate::word::{cmp_rotation_at_level, lex_less, Word};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Largest length the exhaustive scans accept.
pub const MAX_ORACLE_LEN: usize = 20;

/// Default enumeration bound for class tables.
pub const DEFAULT_CLASS_BOUND: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    /// The requested length exceeds the enumeration bound.
    BoundExceeded,
}

impl core::fmt::Display for OracleError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "oracle enumeration bound exceeded")
    }
}

/// One unlabelled class: its canonical representative, the canonical
/// representative of the complement necklace, symmetry, and period.
#[derive(Debug, Clone)]
pub struct ClassInfo {
    pub rep: Word,
    /// Canonical form of the complement necklace. Equals `rep` for
    /// symmetric classes.
    pub partner: Word,
    pub symmetric: bool,
    pub period: usize,
}

/// All unlabelled classes of one length, sorted by representative.
#[derive(Debug, Clone)]
pub struct ClassTable {
    pub n: usize,
    pub classes: Vec<ClassInfo>,
}

impl ClassTable {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn symmetric_count(&self) -> usize {
        self.classes.iter().filter(|c| c.symmetric).count()
    }
}

/// Scans all `2^n` words and groups them into unlabelled classes.
pub fn enumerate_classes(n: usize) -> Result<ClassTable, OracleError> {
    enumerate_classes_bounded(n, DEFAULT_CLASS_BOUND)
}

/// Same as [`enumerate_classes`] with an explicit bound (still capped at
/// [`MAX_ORACLE_LEN`]).
pub fn enumerate_classes_bounded(n: usize, bound: usize) -> Result<ClassTable, OracleError> {
    if n == 0 || n > bound || n > MAX_ORACLE_LEN {
        return Err(OracleError::BoundExceeded);
    }
    let mut seen: BTreeMap<Vec<u8>, ClassInfo> = BTreeMap::new();
    for v in 0..(1u64 << n) {
        let word = Word::from_int(v, n).unwrap();
        let rep = word.canonical_unlabelled();
        let key = rep.as_slice().to_vec();
        seen.entry(key).or_insert_with(|| {
            let partner = rep.complement().canonical();
            ClassInfo {
                symmetric: partner == rep,
                period: rep.period(),
                rep,
                partner,
            }
        });
    }
    Ok(ClassTable {
        n,
        classes: seen.into_values().collect(),
    })
}

/// Which rank a definitional recount should produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankKind {
    /// Plain necklaces below `w`.
    Necklace,
    /// Symmetric classes below `w`.
    Symmetric,
    /// Classes enclosing `w`.
    Enclosing,
    /// Non-symmetric, non-enclosing classes below `w`.
    Asymmetric,
    /// All unlabelled classes below `w`.
    Unlabelled,
}

/// Counts classes of length `m` against `w` by direct scan.
pub fn oracle_rank(w: &Word, m: usize, kind: RankKind) -> Result<u128, OracleError> {
    let table = enumerate_classes_bounded(m, MAX_ORACLE_LEN)?;
    let mut count = 0u128;
    for class in &table.classes {
        let rep_below = lex_less(&class.rep, w);
        let partner_below = lex_less(&class.partner, w);
        let hit = match kind {
            RankKind::Necklace => {
                // each class contributes one or two necklaces
                let mut c = 0u128;
                if rep_below {
                    c += 1;
                }
                if !class.symmetric && partner_below {
                    c += 1;
                }
                count += c;
                continue;
            }
            RankKind::Symmetric => class.symmetric && rep_below,
            RankKind::Enclosing => {
                !class.symmetric && rep_below && lex_less(w, &class.partner)
            }
            RankKind::Asymmetric => !class.symmetric && rep_below && partner_below,
            RankKind::Unlabelled => rep_below,
        };
        if hit {
            count += 1;
        }
    }
    Ok(count)
}

/// Rotation verdicts of a length-`len` block `x` standing for a word of
/// length `level`, compared against `w` at each rotation `t ∈ [1, len]`
/// (identity last).
fn rotation_orderings(x: &[u8], w: &Word, level: usize) -> Vec<Ordering> {
    (1..=x.len())
        .map(|t| cmp_rotation_at_level(x, t % x.len(), w, level))
        .collect()
}

/// Smallest `t ∈ [1, len]` whose rotation is strictly below `w` at the given
/// level, if any.
fn min_below_rotation(x: &[u8], w: &Word, level: usize) -> Option<usize> {
    rotation_orderings(x, w, level)
        .iter()
        .position(|&o| o == Ordering::Less)
        .map(|i| i + 1)
}

/// The literal set α(w, r, j) at comparison level `level`: antiperiodic
/// blocks `u ∈ Σ^{2r}` (u[i] = S(u[i+r])) whose least rotation `t ∈ [1, r]`
/// with `⟨u⟩_t < w` equals `j`.
pub fn alpha_set(w: &Word, r: usize, j: usize, level: usize) -> Result<BTreeSet<Vec<u8>>, OracleError> {
    if 2 * r > MAX_ORACLE_LEN {
        return Err(OracleError::BoundExceeded);
    }
    let mut out = BTreeSet::new();
    for bits in 0..(1u64 << r) {
        let u = antiperiodic_block(bits, r);
        let orders = rotation_orderings(&u, w, level);
        let first = orders[..r].iter().position(|&o| o == Ordering::Less);
        if first == Some(j - 1) {
            out.insert(u);
        }
    }
    Ok(out)
}

/// The literal set β(w, r, j) at level `level`: members of α(w, r, j) whose
/// rotations `t ∈ [r+1, 2r]` (identity included as `2r`) all stay not-below
/// `w`.
pub fn beta_set(w: &Word, r: usize, j: usize, level: usize) -> Result<BTreeSet<Vec<u8>>, OracleError> {
    if 2 * r > MAX_ORACLE_LEN {
        return Err(OracleError::BoundExceeded);
    }
    let mut out = BTreeSet::new();
    for bits in 0..(1u64 << r) {
        let u = antiperiodic_block(bits, r);
        let orders = rotation_orderings(&u, w, level);
        let first = orders[..r].iter().position(|&o| o == Ordering::Less);
        let late_ok = orders[r..].iter().all(|&o| o != Ordering::Less);
        if first == Some(j - 1) && late_ok {
            out.insert(u);
        }
    }
    Ok(out)
}

/// The literal set RA(w, m, S, r): length-`m` words `v` with
/// `v[i] = S(v[i+r mod m])` lying in a symmetric class below `w`.
pub fn ra_set(w: &Word, m: usize, r: usize) -> Result<BTreeSet<Vec<u8>>, OracleError> {
    if m > MAX_ORACLE_LEN {
        return Err(OracleError::BoundExceeded);
    }
    let mut out = BTreeSet::new();
    for bits in 0..(1u64 << m) {
        let v = Word::from_int(bits, m).unwrap();
        let anti = (0..m).all(|i| v.sym(i) == 1 - v.sym((i + r) % m));
        if !anti {
            continue;
        }
        let canon = v.canonical();
        if canon.is_symmetric_necklace() && lex_less(&canon, w) {
            out.insert(v.as_slice().to_vec());
        }
    }
    Ok(out)
}

/// The literal set γ(w, m, r) at comparison level `level`: length-`m` words
/// in a class enclosing `w` whose least below-`w` rotation `t ∈ [1, m]`
/// (identity as `m`) equals `r`.
pub fn gamma_set(
    w: &Word,
    m: usize,
    r: usize,
    level: usize,
) -> Result<BTreeSet<Vec<u8>>, OracleError> {
    if m > MAX_ORACLE_LEN {
        return Err(OracleError::BoundExceeded);
    }
    let mut out = BTreeSet::new();
    for bits in 0..(1u64 << m) {
        let v = Word::from_int(bits, m).unwrap();
        let comp = v.complement();
        let comp_ok = (1..=m).all(|t| {
            cmp_rotation_at_level(comp.as_slice(), t % m, w, level) != Ordering::Less
        });
        if !comp_ok {
            continue;
        }
        if min_below_rotation(v.as_slice(), w, level) == Some(r) {
            out.insert(v.as_slice().to_vec());
        }
    }
    Ok(out)
}

/// The literal set EN(w, m) at comparison level `level`: length-`m` words in
/// a class enclosing `w` (all complement rotations above, some own rotation
/// below).
pub fn en_set(w: &Word, m: usize, level: usize) -> Result<BTreeSet<Vec<u8>>, OracleError> {
    if m > MAX_ORACLE_LEN {
        return Err(OracleError::BoundExceeded);
    }
    let mut out = BTreeSet::new();
    for r in 1..=m {
        out.extend(gamma_set(w, m, r, level)?);
    }
    Ok(out)
}

fn antiperiodic_block(front_bits: u64, r: usize) -> Vec<u8> {
    let mut u = Vec::with_capacity(2 * r);
    for i in 0..r {
        u.push(((front_bits >> (r - 1 - i)) & 1) as u8);
    }
    for i in 0..r {
        u.push(1 - u[i]);
    }
    u
}
