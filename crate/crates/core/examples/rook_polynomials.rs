//! Rook numbers of Ferrers boards: the step-cell recursion, brute force, and
//! the rectangle closed form.
//!
//!     cargo run --example rook_polynomials -- 1,2,2,2,3

use ordo::rook::{decompose_step, rook_brute_force, rook_numbers_rect, step_columns};
use ordo::{rook_numbers, FerrersBoard};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1,2,2,2,3".to_string());
    let board: FerrersBoard = text.parse().expect("comma-separated heights");

    let rooks = rook_numbers(&board);
    println!("board {board}: R(x) = {}", rooks.to_polynomial_string());
    match rook_brute_force(&board) {
        Ok(brute) => println!("  brute force agrees: {}", brute == rooks),
        Err(e) => println!("  brute force skipped: {e}"),
    }

    println!("  step-forming cells at columns {:?}", step_columns(&board));
    if let Ok(split) = decompose_step(&board) {
        println!(
            "  split at {:?}: R_B = R_[{}] + x R_[{}]",
            split.cell, split.reduced, split.collapsed
        );
        println!(
            "             = ({}) + x ({})",
            rook_numbers(&split.reduced).to_polynomial_string(),
            rook_numbers(&split.collapsed).to_polynomial_string()
        );
    }

    println!();
    println!("rectangles, r(i) = i! C(s,i) C(k,i):");
    for s in 1..=4 {
        let row: Vec<String> = (1..=4)
            .map(|k| format!("[{}]", rook_numbers_rect(s, k)))
            .collect();
        println!("  s={s}: {}", row.join(" "));
    }
}
