//! Products of basis elements A^r a^s * A^k a^l.
//!
//!     cargo run --example structure_constants -- 2 3 2 1

use ordo::{multiply_basis, structure_constants, MonomialIndex};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("nonnegative integer"))
        .collect();
    let [r, s, k, l] = match args.as_slice() {
        [r, s, k, l] => [*r, *s, *k, *l],
        _ => [2, 3, 2, 1],
    };
    let x = MonomialIndex::new(r, s);
    let y = MonomialIndex::new(k, l);
    println!("({x}) * ({y}) = {}", multiply_basis(x, y));

    println!();
    println!("gamma_i for the inner pair a^s A^k (outer powers do not matter):");
    for s in 0..=4 {
        let row: Vec<String> = (0..=4)
            .map(|k| {
                let g: Vec<String> = structure_constants(s, k)
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                format!("{:<14}", g.join(","))
            })
            .collect();
        println!("  s={s}  {}", row.join(""));
    }
}
