//! ASCII drawing of a word's staircase path and its board.
//!
//! The path starts at the bottom-left corner; `A` steps right, `a` steps up.
//! Each unit column is two characters wide with a one-character lattice line
//! between columns. Text rows are printed top-down; a horizontal step at
//! height `y` is drawn as `__` at the foot of text row `y`, a vertical step
//! as `|` on the lattice line, and board cells as `[]`.

use crate::word_path::{Letter, Word};

pub fn render_board(word: &Word) -> String {
    if word.is_empty() {
        return "empty word: empty board\n".to_string();
    }
    let (creators, annihilators) = word.excess_counts();
    let width = 3 * creators + 1;
    let mut rows = vec![vec![b' '; width]; annihilators + 1];

    let (mut x, mut y) = (0, 0);
    for letter in word.letters() {
        match letter {
            Letter::Creator => {
                rows[y][3 * x + 1] = b'_';
                rows[y][3 * x + 2] = b'_';
                for row in rows.iter_mut().take(y) {
                    row[3 * x + 1] = b'[';
                    row[3 * x + 2] = b']';
                }
                x += 1;
            }
            Letter::Annihilator => {
                rows[y][3 * x] = b'|';
                y += 1;
            }
        }
    }

    let mut out = String::new();
    let mut lines: Vec<String> = rows
        .into_iter()
        .rev()
        .map(|r| String::from_utf8(r).expect("ascii").trim_end().to_string())
        .collect();
    if lines.first().is_some_and(|l| l.is_empty()) {
        lines.remove(0);
    }
    for line in lines {
        out.push_str(&line);
        out.push('\n');
    }
    let board = word.board();
    out.push_str(&format!("path:  {}\n", word.encode_path()));
    if board.is_empty() {
        out.push_str("board: empty (0 cells)\n");
    } else {
        out.push_str(&format!(
            "board: {} ({} cells)\n",
            board,
            board.cell_count()
        ));
    }
    out
}
