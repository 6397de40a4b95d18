//! Binary word primitives: rotation, complement, canonical forms, periods,
//! cyclic subwords, and the cross-length order used by every ranking routine.
//!
//! Words compare through their infinite periodic extensions: `u` is smaller
//! than `v` when `u^∞ < v^∞`, with ties (equal extensions) broken by length,
//! shorter first. For equal lengths this is ordinary lexicographic order.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

/// Maximum supported word length.
///
/// Counts are exact big integers, but internal tables use fixed-width
/// arithmetic that is only guaranteed overflow-free up to this length.
pub const MAX_LEN: usize = 64;

/// A nonempty binary word over {0, 1}.
///
/// Symbols are stored most significant first: index 0 of the slice is the
/// paper-facing position 1. All rotation offsets are normalized mod n with
/// 0 as the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<u8>,
}

/// Errors from word construction and indexed access.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordError {
    /// Words must have at least one symbol.
    Empty,
    /// Length exceeds [`MAX_LEN`].
    TooLong(usize),
    /// A symbol other than '0'/'1' (or 0/1) was supplied.
    BadSymbol,
    /// An index or length argument was out of range.
    BadIndex,
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::Empty => write!(f, "word must be nonempty"),
            WordError::TooLong(n) => write!(f, "word length {n} exceeds maximum {MAX_LEN}"),
            WordError::BadSymbol => write!(f, "symbols must be '0' or '1'"),
            WordError::BadIndex => write!(f, "index out of range"),
        }
    }
}

impl Word {
    /// Builds a word from raw 0/1 symbols.
    pub fn from_symbols(symbols: &[u8]) -> Result<Self, WordError> {
        if symbols.is_empty() {
            return Err(WordError::Empty);
        }
        if symbols.len() > MAX_LEN {
            return Err(WordError::TooLong(symbols.len()));
        }
        if symbols.iter().any(|&s| s > 1) {
            return Err(WordError::BadSymbol);
        }
        Ok(Word {
            symbols: symbols.to_vec(),
        })
    }

    /// Builds the length-`n` word whose symbols are the low `n` bits of
    /// `value`, most significant bit first.
    pub fn from_int(value: u64, n: usize) -> Result<Self, WordError> {
        if n == 0 {
            return Err(WordError::Empty);
        }
        if n > MAX_LEN {
            return Err(WordError::TooLong(n));
        }
        let symbols = (0..n)
            .map(|i| ((value >> (n - 1 - i)) & 1) as u8)
            .collect();
        Ok(Word { symbols })
    }

    /// Integer value of the word, most significant symbol first.
    pub fn to_int(&self) -> u64 {
        self.symbols.iter().fold(0, |acc, &s| (acc << 1) | s as u64)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Symbol at 0-based index `i` (must be `< len`).
    #[inline]
    pub fn sym(&self, i: usize) -> u8 {
        self.symbols[i]
    }

    /// Symbol at 0-based index `i`, wrapping cyclically.
    #[inline]
    pub fn sym_cyc(&self, i: usize) -> u8 {
        self.symbols[i % self.symbols.len()]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.symbols
    }

    /// Cyclic left rotation by `r` (normalized mod n; 0 is the identity).
    pub fn rotate(&self, r: usize) -> Word {
        let n = self.len();
        let r = r % n;
        let mut symbols = Vec::with_capacity(n);
        symbols.extend_from_slice(&self.symbols[r..]);
        symbols.extend_from_slice(&self.symbols[..r]);
        Word { symbols }
    }

    /// Symbolwise 0↔1 swap.
    pub fn complement(&self) -> Word {
        Word {
            symbols: self.symbols.iter().map(|&s| 1 - s).collect(),
        }
    }

    /// Cyclic subword of length `len` starting at 0-based `start`, wrapping
    /// mod n. `len` may be 0 (empty slice) and at most n.
    pub(crate) fn slice_cyc(&self, start: usize, len: usize) -> Vec<u8> {
        let n = self.len();
        (0..len).map(|t| self.symbols[(start + t) % n]).collect()
    }

    /// Cyclic subword with 1-based start index `i` and length `l`, as the
    /// ranking literature writes them. Rejects `i ∉ [1, n]` and `l ∉ [1, n]`.
    pub fn subword(&self, i: usize, l: usize) -> Result<Word, WordError> {
        let n = self.len();
        if i == 0 || i > n || l == 0 || l > n {
            return Err(WordError::BadIndex);
        }
        Ok(Word {
            symbols: self.slice_cyc(i - 1, l),
        })
    }

    /// Start offset of the lexicographically least rotation (Booth/Duval
    /// style scan over the doubled word).
    fn least_rotation_start(&self) -> usize {
        let n = self.len();
        let doubled: Vec<u8> = self
            .symbols
            .iter()
            .chain(self.symbols.iter())
            .copied()
            .collect();
        let mut i = 0;
        let mut ans = 0;
        while i < n {
            ans = i;
            let mut j = i + 1;
            let mut k = i;
            while j < 2 * n && doubled[k] <= doubled[j] {
                if doubled[k] < doubled[j] {
                    k = i;
                } else {
                    k += 1;
                }
                j += 1;
            }
            while i <= k {
                i += j - k;
            }
        }
        ans
    }

    /// Lexicographically least rotation: the canonical representation of the
    /// necklace containing this word.
    pub fn canonical(&self) -> Word {
        self.rotate(self.least_rotation_start())
    }

    /// Least word in the unlabelled class: the smaller of the canonical
    /// rotation and the canonical rotation of the complement.
    pub fn canonical_unlabelled(&self) -> Word {
        let a = self.canonical();
        let b = self.complement().canonical();
        if a.symbols <= b.symbols {
            a
        } else {
            b
        }
    }

    /// Length of the shortest `u` with `u^t = w`; always divides n.
    pub fn period(&self) -> usize {
        let n = self.len();
        'outer: for p in 1..=n {
            if n % p != 0 {
                continue;
            }
            for i in 0..n - p {
                if self.symbols[i] != self.symbols[i + p] {
                    continue 'outer;
                }
            }
            return p;
        }
        n
    }

    /// True iff the word equals its canonical rotation.
    pub fn is_necklace(&self) -> bool {
        *self == self.canonical()
    }

    /// True iff the word is a canonical rotation and aperiodic.
    pub fn is_lyndon(&self) -> bool {
        self.is_necklace() && self.period() == self.len()
    }

    /// True iff the word is the canonical representative of its unlabelled
    /// class.
    pub fn is_canonical_unlabelled(&self) -> bool {
        *self == self.canonical_unlabelled()
    }

    /// Smallest `r ∈ [1, n]` with `rotate(w, r) = complement(w)`, if any.
    /// When present the period of `w` equals `2r`, which is asserted.
    pub fn min_antisymmetry_rotation(&self) -> Option<usize> {
        let n = self.len();
        for r in 1..=n {
            if self.rotate(r) == self.complement() {
                assert_eq!(self.period(), 2 * r, "antisymmetric period invariant");
                return Some(r);
            }
        }
        None
    }

    /// True iff the necklace of this word is symmetric (equal, as a class,
    /// to the class of its complement).
    pub fn is_symmetric_necklace(&self) -> bool {
        self.min_antisymmetry_rotation().is_some()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        if s.is_empty() {
            return Err(WordError::Empty);
        }
        if s.len() > MAX_LEN {
            return Err(WordError::TooLong(s.len()));
        }
        let mut symbols = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => symbols.push(0),
                '1' => symbols.push(1),
                _ => return Err(WordError::BadSymbol),
            }
        }
        Ok(Word { symbols })
    }
}

impl From<&Word> for String {
    fn from(w: &Word) -> String {
        let mut s = String::with_capacity(w.len());
        for &b in &w.symbols {
            s.push(if b == 0 { '0' } else { '1' });
        }
        s
    }
}

/// Compares `a^∞` against `b^∞`. `Equal` means the infinite extensions
/// coincide, which by Fine and Wilf is decided within `|a| + |b|` symbols.
pub fn cmp_infinite(a: &[u8], b: &[u8]) -> Ordering {
    let (la, lb) = (a.len(), b.len());
    for k in 0..la + lb {
        match a[k % la].cmp(&b[k % lb]) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// The cross-length word order: `u < v` iff `u^∞ < v^∞`, or the extensions
/// tie and `u` is shorter.
pub fn lex_less(u: &Word, v: &Word) -> bool {
    match cmp_infinite(u.as_slice(), v.as_slice()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => u.len() < v.len(),
    }
}

/// Three-way version of [`lex_less`].
pub fn cmp_words(u: &Word, v: &Word) -> Ordering {
    cmp_infinite(u.as_slice(), v.as_slice()).then(u.len().cmp(&v.len()))
}

/// Compares the rotation of `x` by `t`, taken as a word of effective length
/// `level`, against the reference `w`: the infinite extensions are compared
/// first and a tie falls back to `level` versus `|w|`.
///
/// This is the comparison every rotation condition in the ranking sets uses:
/// a length-`|x|` block standing for a length-`level` word.
pub fn cmp_rotation_at_level(x: &[u8], t: usize, w: &Word, level: usize) -> Ordering {
    let lx = x.len();
    let n = w.len();
    for k in 0..lx + n {
        match x[(t + k) % lx].cmp(&w.sym_cyc(k)) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    level.cmp(&n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let word = w("0011");
        assert_eq!(word.to_string(), "0011");
        assert_eq!(format!("{word:?}"), "Word(0011)");
        assert!(matches!("".parse::<Word>(), Err(WordError::Empty)));
        assert!(matches!("01x1".parse::<Word>(), Err(WordError::BadSymbol)));
    }

    #[test]
    fn rejects_overlong_words() {
        let s: String = core::iter::repeat('0').take(MAX_LEN + 1).collect();
        assert!(matches!(s.parse::<Word>(), Err(WordError::TooLong(_))));
    }

    #[test]
    fn lex_less_examples() {
        assert!(lex_less(&w("01"), &w("10")));
        assert!(lex_less(&w("0011"), &w("01")));
        assert!(!lex_less(&w("01"), &w("0011")));
        assert!(lex_less(&w("01"), &w("0101")));
        assert!(!lex_less(&w("0101"), &w("01")));
    }

    #[test]
    fn lex_less_total_order_small_lengths() {
        // Strict total order over all words of lengths up to 8.
        let mut all = alloc::vec::Vec::new();
        for n in 1..=8usize {
            for v in 0..(1u64 << n) {
                all.push(Word::from_int(v, n).unwrap());
            }
        }
        for a in &all {
            assert!(!lex_less(a, a));
        }
        // Spot-check antisymmetry and totality on a deterministic subsample;
        // the full quadratic loop over 510 words is cheap enough.
        for a in &all {
            for b in &all {
                if a == b {
                    continue;
                }
                assert_ne!(
                    lex_less(a, b),
                    lex_less(b, a),
                    "exactly one of {a} < {b} / {b} < {a} must hold"
                );
            }
        }
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(w("0011").rotate(1), w("0110"));
        assert_eq!(w("0011").rotate(0), w("0011"));
        assert_eq!(w("0011").rotate(4), w("0011"));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(w("0011").complement(), w("1100"));
        assert_eq!(w("0").complement(), w("1"));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(w("1010").canonical(), w("0101"));
        assert_eq!(w("1000").canonical(), w("0001"));
        assert_eq!(w("0000").canonical(), w("0000"));
    }

    #[test]
    fn canonical_unlabelled_examples() {
        assert_eq!(w("1110").canonical_unlabelled(), w("0001"));
        assert_eq!(w("0101").canonical_unlabelled(), w("0101"));
        assert_eq!(w("0011").canonical_unlabelled(), w("0011"));
    }

    #[test]
    fn period_examples() {
        assert_eq!(w("0101").period(), 2);
        assert_eq!(w("0011").period(), 4);
        assert_eq!(w("0000").period(), 1);
    }

    #[test]
    fn subword_examples() {
        assert_eq!(w("0011").subword(4, 2).unwrap(), w("10"));
        assert_eq!(w("0011").subword(1, 4).unwrap(), w("0011"));
        assert_eq!(w("0001").subword(3, 3).unwrap(), w("010"));
        assert!(w("0011").subword(5, 1).is_err());
        assert!(w("0011").subword(0, 2).is_err());
    }

    #[test]
    fn necklace_predicates() {
        assert!(w("0101").is_necklace());
        assert!(!w("0101").is_lyndon());
        assert!(w("0011").is_necklace());
        assert!(w("0011").is_lyndon());
        assert!(!w("0110").is_necklace());
    }

    #[test]
    fn min_antisymmetry_examples() {
        assert_eq!(w("0101").min_antisymmetry_rotation(), Some(1));
        assert_eq!(w("0011").min_antisymmetry_rotation(), Some(2));
        assert_eq!(w("0001").min_antisymmetry_rotation(), None);
    }

    #[test]
    fn canonical_below_all_rotations_exhaustive() {
        for n in 1..=12usize {
            for v in 0..(1u64 << n) {
                let word = Word::from_int(v, n).unwrap();
                let canon = word.canonical();
                for r in 0..n {
                    let rot = word.rotate(r);
                    assert!(canon.as_slice() <= rot.as_slice(), "canonical({word}) > {rot}");
                }
            }
        }
    }

    #[test]
    fn canonical_unlabelled_class_invariant_exhaustive() {
        for n in 1..=12usize {
            for v in 0..(1u64 << n) {
                let word = Word::from_int(v, n).unwrap();
                let rep = word.canonical_unlabelled();
                assert_eq!(rep, word.complement().canonical_unlabelled());
                for r in 0..n {
                    assert_eq!(rep, word.rotate(r).canonical_unlabelled());
                }
            }
        }
    }

    #[test]
    fn antisymmetry_forces_period_exhaustive() {
        // min_antisymmetry_rotation itself asserts period = 2r; just drive it.
        for n in 1..=14usize {
            for v in 0..(1u64 << n) {
                let word = Word::from_int(v, n).unwrap();
                let _ = word.min_antisymmetry_rotation();
            }
        }
    }

    proptest! {
        #[test]
        fn rotation_composes(bits in 0u64..(1 << 12), n in 1usize..=12, a in 0usize..24, b in 0usize..24) {
            let word = Word::from_int(bits & ((1 << n) - 1), n).unwrap();
            prop_assert_eq!(word.rotate(a).rotate(b), word.rotate((a + b) % n));
        }

        #[test]
        fn complement_involution(bits in 0u64..(1 << 14), n in 1usize..=14) {
            let word = Word::from_int(bits & ((1 << n) - 1), n).unwrap();
            prop_assert_eq!(word.complement().complement(), word);
        }

        #[test]
        fn cmp_infinite_matches_long_expansion(a_bits in 0u64..64, a_len in 1usize..=6, b_bits in 0u64..64, b_len in 1usize..=6) {
            let a = Word::from_int(a_bits & ((1 << a_len) - 1), a_len).unwrap();
            let b = Word::from_int(b_bits & ((1 << b_len) - 1), b_len).unwrap();
            let reps = 60;
            let ea: alloc::vec::Vec<u8> = (0..reps).map(|k| a.sym_cyc(k)).collect();
            let eb: alloc::vec::Vec<u8> = (0..reps).map(|k| b.sym_cyc(k)).collect();
            prop_assert_eq!(cmp_infinite(a.as_slice(), b.as_slice()), ea.cmp(&eb));
        }
    }
}
