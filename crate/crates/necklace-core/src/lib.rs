//! Exact ranking, unranking, counting, and enumeration of binary unlabelled
//! necklaces: cyclic binary words identified up to rotation and 0↔1
//! relabelling.
//!
//! The rank of a word decomposes over three class families: plain necklace
//! rank, symmetric-class rank, and enclosing-class rank; the asymmetric part
//! falls out by an exact halving. Each family is counted in polynomial time
//! by dynamic programs over bounding subwords, and every program is checked
//! against an exhaustive oracle at small lengths.
//!
//! All counts are exact big integers; there is no floating point anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod enclosing;
pub mod necklaces;
pub mod oracle;
pub mod symmetric;
pub mod unlabelled;
pub mod word;

pub use necklaces::Count;
pub use unlabelled::RankBreakdown;
pub use word::{lex_less, Word, WordError, MAX_LEN};
