//! Normal-order a word through its staircase path and Ferrers board.
//!
//!     cargo run --example normal_order -- aAaAAAaAa

use ordo::{normal_order_word, rook_numbers, MonomialIndex, Word};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "aAaAAAaAa".to_string());
    let word: Word = match text.parse() {
        Ok(w) => w,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };

    let board = word.board();
    let rooks = rook_numbers(&board);
    let (r, s) = word.excess_counts();

    println!("word          {word}");
    println!("path          {}", word.encode_path());
    println!("board         {board} ({} cells)", board.cell_count());
    println!("rook numbers  {rooks}");
    for (k, count) in rooks.counts().iter().enumerate() {
        println!("  k={k}: {count} x {}", MonomialIndex::new(r - k, s - k));
    }
    println!("normal form   {}", normal_order_word(&word));
}
