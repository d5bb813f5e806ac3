//! Check the rook route against naive rewriting and the polynomial action.
//!
//!     cargo run --release --example oracles -- 12

use ordo::oracle::{apply_to_monomial, equal_by_action, Rewriter};
use ordo::{normal_order_word, Word};

fn main() {
    let max_len: usize = std::env::args()
        .nth(1)
        .map_or(8, |a| a.parse().expect("length"));
    let rewriter = Rewriter::with_limit(max_len);
    let mut checked = 0;
    for len in 0..=max_len {
        for bits in 0..1u64 << len {
            let word = Word::from_bits(bits, len);
            let fast = normal_order_word(&word);
            let slow = rewriter.rewrite(&word).expect("within limit");
            assert_eq!(fast, slow, "{word}");
            assert!(equal_by_action(&fast, &slow));
            checked += 1;
        }
    }
    println!("{checked} words of length <= {max_len}: rook route = rewriter = action");

    let word: Word = "aAaAAAaAa".parse().unwrap();
    let nf = normal_order_word(&word);
    println!("\n{word} = {nf}");
    println!("acting with a = d/dx, A = x:");
    for m in 0..=5 {
        println!("  x^{m} -> {}", apply_to_monomial(&nf, m));
    }
    let (_, stats) = Rewriter::default().rewrite_with_stats(&word).unwrap();
    println!("naive rewriting took {stats}");
}
