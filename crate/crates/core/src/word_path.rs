//! Words over `{a, A}`, their staircase lattice paths, and the Ferrers board
//! lying under a path.
//!
//! A word is read left to right. Every creator `A` (a†) is a step to the
//! right, every annihilator `a` a step up. The board of a word keeps the
//! cells that sit below the resulting path: each creator contributes one
//! column whose height is the number of annihilators already read.

use std::fmt;
use std::str::FromStr;

use crate::error::{BoardParseError, WordParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// `a`
    Annihilator,
    /// `A`, also written `a†` or `ad`
    Creator,
}

impl Letter {
    pub fn symbol(self) -> char {
        match self {
            Letter::Annihilator => 'a',
            Letter::Creator => 'A',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A finite string of generators. The empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `A^r a^s`
    pub fn monomial(r: usize, s: usize) -> Self {
        let mut letters = vec![Letter::Creator; r];
        letters.extend(std::iter::repeat_n(Letter::Annihilator, s));
        Word(letters)
    }

    /// The `index`-th word of length `len` in binary enumeration order, bit
    /// `i` set meaning letter `i` is a creator.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        Word(
            (0..len)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Letter::Creator
                    } else {
                        Letter::Annihilator
                    }
                })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn creator_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Creator).count()
    }

    pub fn annihilator_count(&self) -> usize {
        self.0.len() - self.creator_count()
    }

    /// Concatenation, the product of the free algebra.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// True when every creator precedes every annihilator.
    pub fn is_normally_ordered(&self) -> bool {
        self.0
            .windows(2)
            .all(|pair| !(pair[0] == Letter::Annihilator && pair[1] == Letter::Creator))
    }

    /// `(R, S)`: creator and annihilator counts. `A^R a^S` is the leading
    /// monomial of the normal form, the one obtained with no pair crossed out.
    pub fn excess_counts(&self) -> (usize, usize) {
        let r = self.creator_count();
        (r, self.0.len() - r)
    }

    pub fn encode_path(&self) -> LatticePath {
        LatticePath(
            self.0
                .iter()
                .map(|l| match l {
                    Letter::Creator => Step::Right,
                    Letter::Annihilator => Step::Up,
                })
                .collect(),
        )
    }

    pub fn board(&self) -> FerrersBoard {
        let mut ups = 0;
        let mut heights = Vec::with_capacity(self.creator_count());
        for letter in &self.0 {
            match letter {
                Letter::Annihilator => ups += 1,
                Letter::Creator => heights.push(ups),
            }
        }
        FerrersBoard::from_heights(heights)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    /// Accepts `a`, `A`, `a†` and `ad`; whitespace between letters is skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        let mut chars = s.char_indices().peekable();
        while let Some((offset, c)) = chars.next() {
            match c {
                'A' => letters.push(Letter::Creator),
                'a' => match chars.peek() {
                    Some((_, '†')) | Some((_, 'd')) => {
                        chars.next();
                        letters.push(Letter::Creator);
                    }
                    _ => letters.push(Letter::Annihilator),
                },
                c if c.is_whitespace() => {}
                other => {
                    return Err(WordParseError {
                        offset,
                        found: other,
                    })
                }
            }
        }
        Ok(Word(letters))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Up,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LatticePath(Vec<Step>);

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn decode_word(&self) -> Word {
        self.0
            .iter()
            .map(|s| match s {
                Step::Right => Letter::Creator,
                Step::Up => Letter::Annihilator,
            })
            .collect()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            f.write_str(match s {
                Step::Right => "R",
                Step::Up => "U",
            })?;
        }
        Ok(())
    }
}

/// A Ferrers board as its column heights, nondecreasing left to right with
/// zero-height columns removed. Two boards with equal heights have the same
/// cells, so this is also the memo key for rook computations.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FerrersBoard(Vec<usize>);

impl FerrersBoard {
    /// Canonicalizes an arbitrary height list: sorts and drops zeros.
    ///
    /// Sorting keeps the cell multiset of rows and columns, so rook numbers
    /// are unchanged for any list that already describes a Ferrers shape.
    pub fn from_heights(mut heights: Vec<usize>) -> Self {
        heights.retain(|&h| h > 0);
        heights.sort_unstable();
        FerrersBoard(heights)
    }

    pub fn empty() -> Self {
        FerrersBoard(Vec::new())
    }

    /// `columns` columns of height `height`.
    pub fn rectangle(height: usize, columns: usize) -> Self {
        Self::from_heights(vec![height; columns])
    }

    pub fn heights(&self) -> &[usize] {
        &self.0
    }

    pub fn columns(&self) -> usize {
        self.0.len()
    }

    pub fn max_height(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn cell_count(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Cells as `(column, row)` pairs, both 0-based, row 0 at the bottom.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(col, &h)| (0..h).map(move |row| (col, row)))
    }
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for h in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{h}")?;
        }
        Ok(())
    }
}

impl FromStr for FerrersBoard {
    type Err = BoardParseError;

    /// `"1,2,2,2,3"`; the empty string is the empty board.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(FerrersBoard::empty());
        }
        let heights = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| BoardParseError(part.trim().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FerrersBoard::from_heights(heights))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn inversions(word: &Word) -> usize {
        let l = word.letters();
        let mut n = 0;
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                if l[i] == Letter::Annihilator && l[j] == Letter::Creator {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn encode_fig1_word() {
        assert_eq!(
            w("aAaAAAaAa").encode_path().to_string(),
            "U,R,U,R,R,R,U,R,U"
        );
        assert!(Word::empty().encode_path().steps().is_empty());
        assert_eq!(w("Aa").encode_path().steps(), &[Step::Right, Step::Up]);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(
            LatticePath::new(vec![Step::Up, Step::Right]).decode_word(),
            w("aA")
        );
        assert_eq!(LatticePath::default().decode_word(), Word::empty());
        let p = LatticePath::new(vec![Step::Right, Step::Up, Step::Right, Step::Up]);
        assert_eq!(p.decode_word(), w("AaAa"));
        assert_eq!(w("AaAa").encode_path(), p);
    }

    #[test]
    fn round_trip_exhaustive_to_length_12() {
        for len in 0..=12 {
            for bits in 0..1u64 << len {
                let word = Word::from_bits(bits, len);
                assert_eq!(word.encode_path().decode_word(), word);
            }
        }
    }

    #[test]
    fn board_examples() {
        let b = w("aAaAAAaAa").board();
        assert_eq!(b.heights(), &[1, 2, 2, 2, 3]);
        assert_eq!(b.cell_count(), 10);
        assert!(w("AAAA").board().is_empty());
        assert!(w("aaa").board().is_empty());
    }

    #[test]
    fn excess_counts_examples() {
        assert_eq!(w("aAaAAAaAa").excess_counts(), (5, 4));
        assert_eq!(Word::empty().excess_counts(), (0, 0));
        assert_eq!(w("aA").excess_counts(), (1, 1));
    }

    #[test]
    fn alternate_creator_spellings() {
        assert_eq!(w("a†a"), w("Aa"));
        assert_eq!(w("ada"), w("Aa"));
        assert_eq!(w("a a† ad"), w("aAA"));
        assert_eq!(w("aAaAAAaAa").to_string(), "aAaAAAaAa");
        let err = "aXa".parse::<Word>().unwrap_err();
        assert_eq!(err.offset, 1);
        assert!("†".parse::<Word>().is_err());
    }

    #[test]
    fn board_text_format() {
        let b: FerrersBoard = "1,2,2,2,3".parse().unwrap();
        assert_eq!(b.to_string(), "1,2,2,2,3");
        let b: FerrersBoard = "3, 0, 1".parse().unwrap();
        assert_eq!(b.heights(), &[1, 3]);
        assert!("".parse::<FerrersBoard>().unwrap().is_empty());
        assert!("1,x".parse::<FerrersBoard>().is_err());
    }

    #[test]
    fn cell_count_is_inversion_count_exhaustive() {
        for len in 0..=10 {
            for bits in 0..1u64 << len {
                let word = Word::from_bits(bits, len);
                assert_eq!(word.board().cell_count(), inversions(&word), "{word}");
            }
        }
    }

    fn word_strategy(max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::bool::ANY, 0..max).prop_map(|v| {
            v.into_iter()
                .map(|c| {
                    if c {
                        Letter::Creator
                    } else {
                        Letter::Annihilator
                    }
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn board_ignores_leading_creators_and_trailing_annihilators(word in word_strategy(24)) {
            let b = word.board();
            prop_assert_eq!(&w("A").concat(&word).board(), &b);
            prop_assert_eq!(&word.concat(&w("a")).board(), &b);
        }

        #[test]
        fn board_is_canonical(word in word_strategy(24)) {
            let b = word.board();
            prop_assert!(b.heights().windows(2).all(|p| p[0] <= p[1]));
            prop_assert!(b.heights().iter().all(|&h| h > 0));
            prop_assert_eq!(word.creator_count() + word.annihilator_count(), word.len());
        }
    }
}
