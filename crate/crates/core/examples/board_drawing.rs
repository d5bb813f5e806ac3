//! ASCII staircase path and board for a word.
//!
//!     cargo run --example board_drawing -- aaAaAAaA

use ordo::render::render_board;
use ordo::Word;

fn main() {
    let words: Vec<String> = match std::env::args().nth(1) {
        Some(w) => vec![w],
        None => vec!["aA".into(), "aAaAAAaAa".into(), "aaaAAA".into()],
    };
    for text in words {
        let word: Word = text.parse().expect("a word over a, A");
        println!("{word}");
        print!("{}", render_board(&word));
        println!();
    }
}
