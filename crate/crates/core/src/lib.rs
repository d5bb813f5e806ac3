//! Exact normal ordering in the Heisenberg-Weyl algebra.
//!
//! The algebra is generated by an annihilator `a` and a creator `A` (a†)
//! subject to `aA = Aa + I`. Every element has a unique expansion in the
//! normally ordered monomials `A^r a^s`. This crate computes that expansion
//! combinatorially: a word is drawn as a staircase lattice path, the cells
//! under the path form a Ferrers board, and the coefficient of
//! `A^(R-k) a^(S-k)` is the number of ways to place `k` non-attacking rooks
//! on that board.
//!
//! ```
//! use ordo::{normal_order_word, Word};
//!
//! let w: Word = "aAaAAAaAa".parse().unwrap();
//! let nf = normal_order_word(&w);
//! assert_eq!(nf.to_string(), "A^5 a^4 + 10 A^4 a^3 + 23 A^3 a^2 + 9 A^2 a");
//! ```
//!
//! The [`oracle`] module holds two independent checks: a naive rewriter
//! applying `aA -> Aa + I` directly, and the representation of `a` as
//! `d/dx` and `A` as `x` on integer polynomials.

pub mod algebra;
pub mod bench;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod parser;
pub mod render;
pub mod rook;
pub mod selftest;
pub mod word_path;

pub use algebra::{
    multiply_basis, normal_order_word, structure_constants, MonomialIndex, NormalForm,
};
pub use error::{BoardParseError, RewriteError, RookError, WordParseError};
pub use oracle::{apply_to_monomial, equal_by_action, rewrite_normal, IntPolynomial, Rewriter};
pub use parser::{normalize, parse, Expr, ParseError};
pub use rook::{
    decompose_step, rook_brute_force, rook_numbers, rook_numbers_rect, BoardSplit, RookMemo,
    RookVector, StepRule,
};
pub use word_path::{FerrersBoard, LatticePath, Letter, Step, Word};
