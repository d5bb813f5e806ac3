//! Exhaustive agreement check between the rook route and the oracles.

use std::fmt;

use crate::algebra::{normal_order_word, NormalForm};
use crate::oracle::{equal_by_action, Rewriter};
use crate::rook::{rook_numbers, RookVector};
use crate::word_path::Word;

pub const SWEEP_MAX_LEN: usize = 10;

/// The word drawn in the first figure and its known expansion.
pub const GOLDEN_WORD: &str = "aAaAAAaAa";
pub const GOLDEN_ROOK_NUMBERS: [u64; 4] = [1, 10, 23, 9];
pub const GOLDEN_NORMAL_FORM: [((usize, usize), i64); 4] =
    [((5, 4), 1), ((4, 3), 10), ((3, 2), 23), ((2, 1), 9)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    Golden {
        case: &'static str,
        expected: String,
        got: String,
    },
    Mismatch {
        word: Word,
        rook: NormalForm,
        oracle: String,
    },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Golden {
                case,
                expected,
                got,
            } => {
                write!(f, "golden case {case}: expected {expected}, got {got}")
            }
            Failure::Mismatch { word, rook, oracle } => {
                let shown = if word.is_empty() {
                    "(empty)".to_string()
                } else {
                    word.to_string()
                };
                write!(
                    f,
                    "word {shown}: rook route gives {rook}, oracle gives {oracle}"
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestReport {
    pub words: usize,
    pub golden_cases: usize,
    pub failure: Option<Failure>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(
                f,
                "PASS ({} words, {} golden cases)",
                self.words, self.golden_cases
            ),
            Some(failure) => write!(f, "FAIL: {failure}"),
        }
    }
}

pub fn selftest() -> SelftestReport {
    selftest_with(rook_numbers_of_word, normal_order_word)
}

fn rook_numbers_of_word(w: &Word) -> RookVector {
    rook_numbers(&w.board())
}

/// Runs the golden cases and the sweep over every word of length at most
/// [`SWEEP_MAX_LEN`], using the given rook and normal-ordering routes. Stops
/// at the first failure.
pub fn selftest_with<R, N>(rooks: R, normalize: N) -> SelftestReport
where
    R: Fn(&Word) -> RookVector,
    N: Fn(&Word) -> NormalForm,
{
    let golden: Word = GOLDEN_WORD.parse().expect("golden word parses");
    let mut report = SelftestReport {
        words: 0,
        golden_cases: 0,
        failure: None,
    };

    let expected = RookVector::from_u64s(&GOLDEN_ROOK_NUMBERS);
    let got = rooks(&golden);
    report.golden_cases += 1;
    if got != expected {
        report.failure = Some(Failure::Golden {
            case: "rook numbers",
            expected: expected.to_string(),
            got: got.to_string(),
        });
        return report;
    }

    let expected = NormalForm::from_terms(GOLDEN_NORMAL_FORM);
    let got = normalize(&golden);
    report.golden_cases += 1;
    if got != expected {
        report.failure = Some(Failure::Golden {
            case: "normal form",
            expected: expected.to_string(),
            got: got.to_string(),
        });
        return report;
    }

    let rewriter = Rewriter::with_limit(SWEEP_MAX_LEN);
    for len in 0..=SWEEP_MAX_LEN {
        for bits in 0..1u64 << len {
            let word = Word::from_bits(bits, len);
            let rook = normalize(&word);
            let oracle = rewriter
                .rewrite(&word)
                .expect("sweep stays within rewrite limit");
            report.words += 1;
            if rook != oracle || !equal_by_action(&rook, &oracle) {
                report.failure = Some(Failure::Mismatch {
                    word,
                    rook,
                    oracle: oracle.to_string(),
                });
                return report;
            }
        }
    }
    report
}
