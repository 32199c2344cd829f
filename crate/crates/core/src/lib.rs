//! Exact constructions around division through and through.
//!
//! The unit rod is halved generation by generation into a binary tree whose
//! two counts, division points and parts, grow as `n` against `2^n`
//! ([`divider`]). The limit rows live as eventually periodic binary sequences
//! under a decidable lexicographic order with exact valuation and
//! double-point bookkeeping ([`philebian`]). Nilpotent numbers `a + b·h`
//! with `h² = 0` supply forward derivatives and Galilean worldlines
//! ([`nilpotent`]), and the four classical motion paradoxes are replayed as
//! exact accounting ([`paradoxes`]). Everything is computed over
//! arbitrary-precision rationals; nothing is rounded.

pub mod bitword;
pub mod checks;
pub mod divider;
pub mod nilpotent;
pub mod paradoxes;
pub mod philebian;
pub mod rational;

pub use bitword::BitWord;
pub use divider::{Counts, DivisionTree, DyadicInterval};
pub use nilpotent::{Dual, GalileanBoost, Polynomial};
pub use paradoxes::{AchillesReport, ArrowReport, DichotomyReport, StadiumReport};
pub use philebian::{AbClass, DoublePair, PhilebianSeq, PoincareReport};
pub use rational::Rational;
