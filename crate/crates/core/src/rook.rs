//! Rook numbers of Ferrers boards.
//!
//! `r_B(k)` counts the ways to put `k` mutually non-attacking rooks on the
//! board `B`. They are computed with the step-cell recursion
//!
//! ```text
//! R_B(x) = R_B'(x) + x R_B''(x),    R_empty(x) = 1
//! ```
//!
//! where `B'` drops a step-forming cell and `B''` drops that cell's row and
//! column. Intermediate boards are memoized by their canonical heights.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::RookError;
use crate::word_path::FerrersBoard;

pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 30;

/// Rook numbers `r_B(0), r_B(1), ...` with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RookVector(Vec<BigUint>);

impl RookVector {
    pub fn new(mut counts: Vec<BigUint>) -> Self {
        while counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        RookVector(counts)
    }

    pub fn from_u64s(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Rook vector of the empty board.
    pub fn one() -> Self {
        RookVector(vec![BigUint::one()])
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.0
    }

    /// `r_B(k)`, zero past the end.
    pub fn get(&self, k: usize) -> BigUint {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest number of rooks that fit.
    pub fn max_rooks(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// `R_B'(x) + x R_B''(x)`
    fn combine(reduced: &RookVector, collapsed: &RookVector) -> RookVector {
        let len = reduced.0.len().max(collapsed.0.len() + 1);
        let counts = (0..len)
            .map(|k| {
                let mut c = reduced.get(k);
                if k > 0 {
                    if let Some(x) = collapsed.0.get(k - 1) {
                        c += x;
                    }
                }
                c
            })
            .collect();
        RookVector::new(counts)
    }

    /// `"1, 10, 23, 9"`
    pub fn to_list_string(&self) -> String {
        self.0
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// `"1 + 10x + 23x^2 + 9x^3"`
    pub fn to_polynomial_string(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && k > 0 {
                String::new()
            } else {
                c.to_string()
            };
            parts.push(match k {
                0 => coeff,
                1 => format!("{coeff}x"),
                _ => format!("{coeff}x^{k}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// JSON array of decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.0
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }
}

impl fmt::Display for RookVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_list_string())
    }
}

/// One step of the recursion: a step-forming cell and the two boards it
/// leaves behind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoardSplit {
    /// Board with the cell removed.
    pub reduced: FerrersBoard,
    /// Board with the cell's row and column removed.
    pub collapsed: FerrersBoard,
    /// `(column, row)`, 0-based, row 0 at the bottom.
    pub cell: (usize, usize),
}

/// Which step-forming cell the recursion removes.
///
/// In a canonical board the step-forming cells are the top cells of the
/// leftmost column of each distinct height.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum StepRule {
    /// Top cell of the leftmost column of maximal height.
    #[default]
    Tallest,
    /// Top cell of the first (shortest) column.
    Shortest,
}

impl StepRule {
    fn column(self, board: &FerrersBoard) -> usize {
        let heights = board.heights();
        match self {
            StepRule::Tallest => {
                let max = board.max_height();
                heights.iter().position(|&h| h == max).unwrap_or(0)
            }
            StepRule::Shortest => 0,
        }
    }
}

/// Columns whose top cell is step-forming.
pub fn step_columns(board: &FerrersBoard) -> Vec<usize> {
    let h = board.heights();
    (0..h.len())
        .filter(|&c| c == 0 || h[c - 1] < h[c])
        .collect()
}

/// Splits at the top cell of `column`, which must be a step column.
pub fn split_at(board: &FerrersBoard, column: usize) -> BoardSplit {
    let heights = board.heights();
    let height = heights[column];
    debug_assert!(
        column == 0 || heights[column - 1] < height,
        "not a step-forming cell"
    );

    let mut reduced = heights.to_vec();
    reduced[column] -= 1;

    let collapsed = heights
        .iter()
        .enumerate()
        .filter(|&(c, _)| c != column)
        .map(|(_, &h)| if h >= height { h - 1 } else { h })
        .collect();

    BoardSplit {
        reduced: FerrersBoard::from_heights(reduced),
        collapsed: FerrersBoard::from_heights(collapsed),
        cell: (column, height - 1),
    }
}

pub fn decompose_step_with(board: &FerrersBoard, rule: StepRule) -> Result<BoardSplit, RookError> {
    if board.is_empty() {
        return Err(RookError::EmptyBoard);
    }
    Ok(split_at(board, rule.column(board)))
}

/// Splits at the top cell of the leftmost tallest column.
pub fn decompose_step(board: &FerrersBoard) -> Result<BoardSplit, RookError> {
    decompose_step_with(board, StepRule::Tallest)
}

type Memo = HashMap<FerrersBoard, RookVector>;

/// Evaluates the recursion with an explicit stack so board size is not
/// bounded by thread stack depth.
fn rook_numbers_memo(board: &FerrersBoard, rule: StepRule, memo: &mut Memo) -> RookVector {
    if let Some(rv) = memo.get(board) {
        return rv.clone();
    }
    let mut stack: Vec<(FerrersBoard, Option<BoardSplit>)> = vec![(board.clone(), None)];
    while let Some((top, split)) = stack.last_mut() {
        if memo.contains_key(top) {
            stack.pop();
            continue;
        }
        if top.is_empty() {
            memo.insert(top.clone(), RookVector::one());
            stack.pop();
            continue;
        }
        let split = split.get_or_insert_with(|| split_at(top, rule.column(top)));
        let reduced = memo.get(&split.reduced);
        let collapsed = memo.get(&split.collapsed);
        match (reduced, collapsed) {
            (Some(r), Some(c)) => {
                let rv = RookVector::combine(r, c);
                let key = top.clone();
                memo.insert(key, rv);
                stack.pop();
            }
            (r, c) => {
                let pending: Vec<FerrersBoard> = [
                    r.is_none().then(|| split.reduced.clone()),
                    c.is_none().then(|| split.collapsed.clone()),
                ]
                .into_iter()
                .flatten()
                .collect();
                stack.extend(pending.into_iter().map(|b| (b, None)));
            }
        }
    }
    memo[board].clone()
}

/// Rook numbers of `board` via the step-cell recursion.
pub fn rook_numbers(board: &FerrersBoard) -> RookVector {
    rook_numbers_with(board, StepRule::Tallest)
}

pub fn rook_numbers_with(board: &FerrersBoard, rule: StepRule) -> RookVector {
    rook_numbers_memo(board, rule, &mut Memo::new())
}

/// A memo table that can be shared between calls and threads.
#[derive(Debug, Default)]
pub struct RookMemo {
    table: Mutex<Memo>,
}

impl RookMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide table.
    pub fn global() -> &'static RookMemo {
        static GLOBAL: OnceLock<RookMemo> = OnceLock::new();
        GLOBAL.get_or_init(RookMemo::new)
    }

    pub fn rook_numbers(&self, board: &FerrersBoard) -> RookVector {
        let mut table = self.table.lock().unwrap_or_else(|e| e.into_inner());
        rook_numbers_memo(board, StepRule::Tallest, &mut table)
    }

    /// Number of boards cached so far.
    pub fn len(&self) -> usize {
        self.table.lock().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Number of distinct boards the recursion visits for `board`, counting
/// `board` itself and the empty board.
pub fn recursion_size(board: &FerrersBoard) -> usize {
    let mut memo = Memo::new();
    rook_numbers_memo(board, StepRule::Tallest, &mut memo);
    memo.len()
}

/// Closed form for the `k`-column, height-`s` rectangle:
/// `r(i) = i! C(s,i) C(k,i)` for `i <= min(s,k)`.
pub fn rook_numbers_rect(s: usize, k: usize) -> RookVector {
    let mut counts = Vec::with_capacity(s.min(k) + 1);
    let mut term = BigUint::one();
    counts.push(term.clone());
    for i in 0..s.min(k) {
        term = term * BigUint::from(s - i) * BigUint::from(k - i) / BigUint::from(i + 1);
        counts.push(term.clone());
    }
    RookVector::new(counts)
}

/// Counts placements by direct enumeration. Test oracle only.
pub fn rook_brute_force(board: &FerrersBoard) -> Result<RookVector, RookError> {
    rook_brute_force_limited(board, DEFAULT_BRUTE_FORCE_LIMIT)
}

pub fn rook_brute_force_limited(
    board: &FerrersBoard,
    limit: usize,
) -> Result<RookVector, RookError> {
    let cells: Vec<(usize, usize)> = board.cells().collect();
    rook_brute_force_cells(&cells, limit)
}

/// Enumerates non-attacking placements on an arbitrary set of cells, not
/// necessarily a Ferrers shape. Rows and columns must be below 64.
pub fn rook_brute_force_cells(
    cells: &[(usize, usize)],
    limit: usize,
) -> Result<RookVector, RookError> {
    if cells.len() > limit {
        return Err(RookError::TooLargeForBruteForce {
            cells: cells.len(),
            limit,
        });
    }
    fn place(
        cells: &[(usize, usize)],
        start: usize,
        cols: u64,
        rows: u64,
        rooks: usize,
        out: &mut Vec<u64>,
    ) {
        if out.len() <= rooks {
            out.resize(rooks + 1, 0);
        }
        out[rooks] += 1;
        for i in start..cells.len() {
            let (c, r) = cells[i];
            if cols >> c & 1 == 0 && rows >> r & 1 == 0 {
                place(cells, i + 1, cols | 1 << c, rows | 1 << r, rooks + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    place(cells, 0, 0, 0, 0, &mut out);
    Ok(RookVector::new(
        out.into_iter().map(BigUint::from).collect(),
    ))
}
