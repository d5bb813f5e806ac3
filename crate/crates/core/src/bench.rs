//! Timing of the rook route against naive rewriting.
//!
//! Every sampled word is normalized both ways and the results compared, so a
//! bench run doubles as a randomized cross-check.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::normal_order_word;
use crate::error::RewriteError;
use crate::oracle::Rewriter;
use crate::rook::recursion_size;
use crate::word_path::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub max_len: usize,
    pub trials: usize,
    pub seed: u64,
    pub rewriter: Rewriter,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            max_len: 10,
            trials: 50,
            seed: 0x5eed,
            rewriter: Rewriter::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corpus {
    /// Uniformly random words of the given length.
    Random,
    /// `(aA)^n`, listed by its length `2n`.
    Alternating,
}

impl Corpus {
    fn label(self) -> &'static str {
        match self {
            Corpus::Random => "random",
            Corpus::Alternating => "alternating",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub corpus: Corpus,
    pub len: usize,
    pub trials: usize,
    pub rook_median: Duration,
    pub naive_median: Duration,
    /// Boards visited by the rook recursion.
    pub rook_boards_median: usize,
    /// Rewrite steps taken by the naive rewriter.
    pub naive_steps_median: usize,
    /// Peak number of distinct intermediate words.
    pub naive_peak_terms_median: usize,
    pub mismatches: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn mismatches(&self) -> usize {
        self.rows.iter().map(|r| r.mismatches).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub const CSV_HEADER: &'static str =
        "corpus,len,trials,rook_median_ns,naive_median_ns,rook_boards_median,naive_steps_median,naive_peak_terms_median,mismatches";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                r.corpus.label(),
                r.len,
                r.trials,
                r.rook_median.as_nanos(),
                r.naive_median.as_nanos(),
                r.rook_boards_median,
                r.naive_steps_median,
                r.naive_peak_terms_median,
                r.mismatches
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        if self.rows.is_empty() {
            return "no word lengths requested\n".to_string();
        }
        let mut out = format!(
            "{:<12} {:>4} {:>6} {:>12} {:>12} {:>8} {:>10} {:>10} {:>5}\n",
            "corpus", "len", "trials", "rook", "naive", "boards", "steps", "peak", "diff"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<12} {:>4} {:>6} {:>12} {:>12} {:>8} {:>10} {:>10} {:>5}",
                r.corpus.label(),
                r.len,
                r.trials,
                format!("{:.1?}", r.rook_median),
                format!("{:.1?}", r.naive_median),
                r.rook_boards_median,
                r.naive_steps_median,
                r.naive_peak_terms_median,
                r.mismatches
            );
        }
        let _ = writeln!(out, "cross-check: {} mismatches", self.mismatches());
        out
    }
}

fn median<T: Ord + Copy + Default>(mut xs: Vec<T>) -> T {
    if xs.is_empty() {
        return T::default();
    }
    xs.sort_unstable();
    xs[xs.len() / 2]
}

pub fn random_word<R: Rng>(rng: &mut R, len: usize) -> Word {
    (0..len)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Letter::Creator
            } else {
                Letter::Annihilator
            }
        })
        .collect()
}

/// `(aA)^n`
pub fn alternating_word(n: usize) -> Word {
    (0..n)
        .flat_map(|_| [Letter::Annihilator, Letter::Creator])
        .collect()
}

/// Normalizes each word by both routes.
pub fn measure(
    corpus: Corpus,
    len: usize,
    words: &[Word],
    rewriter: &Rewriter,
) -> Result<BenchRow, RewriteError> {
    let mut rook_times = Vec::with_capacity(words.len());
    let mut naive_times = Vec::with_capacity(words.len());
    let mut boards = Vec::with_capacity(words.len());
    let mut steps = Vec::with_capacity(words.len());
    let mut peaks = Vec::with_capacity(words.len());
    let mut mismatches = 0;
    for w in words {
        let start = Instant::now();
        let fast = normal_order_word(w);
        rook_times.push(start.elapsed());

        let start = Instant::now();
        let (slow, stats) = rewriter.rewrite_with_stats(w)?;
        naive_times.push(start.elapsed());

        boards.push(recursion_size(&w.board()));
        steps.push(stats.steps);
        peaks.push(stats.peak_terms);
        if fast != slow {
            mismatches += 1;
        }
    }
    Ok(BenchRow {
        corpus,
        len,
        trials: words.len(),
        rook_median: median(rook_times),
        naive_median: median(naive_times),
        rook_boards_median: median(boards),
        naive_steps_median: median(steps),
        naive_peak_terms_median: median(peaks),
        mismatches,
    })
}

/// Random words of every length `1..=max_len`, then `(aA)^n` for every
/// `2n <= max_len`.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport, RewriteError> {
    if config.max_len > config.rewriter.limit {
        return Err(RewriteError::LimitExceeded {
            len: config.max_len,
            limit: config.rewriter.limit,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = BenchReport::default();
    for len in 1..=config.max_len {
        let words: Vec<Word> = (0..config.trials)
            .map(|_| random_word(&mut rng, len))
            .collect();
        report
            .rows
            .push(measure(Corpus::Random, len, &words, &config.rewriter)?);
    }
    for n in 1..=config.max_len / 2 {
        report.rows.push(alternating_row(n, &config.rewriter)?);
    }
    Ok(report)
}

pub fn alternating_row(n: usize, rewriter: &Rewriter) -> Result<BenchRow, RewriteError> {
    measure(Corpus::Alternating, 2 * n, &[alternating_word(n)], rewriter)
}
