//! Rook route against naive rewriting; prints CSV.
//!
//!     cargo run --release --example bench -- 14 20

use ordo::bench::{run_bench, BenchConfig};
use ordo::oracle::Rewriter;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer"));
    let max_len = args.next().unwrap_or(12);
    let trials = args.next().unwrap_or(20);
    let config = BenchConfig {
        max_len,
        trials,
        rewriter: Rewriter::with_limit(max_len),
        ..Default::default()
    };
    let report = run_bench(&config).expect("max_len within limit");
    print!("{}", report.to_csv());
    assert_eq!(report.mismatches(), 0);
}
