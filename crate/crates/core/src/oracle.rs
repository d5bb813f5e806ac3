//! Independent checks for the rook route.
//!
//! [`rewrite_normal`] applies `aA -> Aa + I` to words until none of them has
//! an `aA` factor left. [`apply_to_monomial`] realizes `a` as `d/dx` and `A`
//! as multiplication by `x` on integer polynomials, which is a faithful
//! representation and so decides equality of algebra elements.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{MonomialIndex, NormalForm};
use crate::error::RewriteError;
use crate::word_path::{Letter, Word};

pub const DEFAULT_REWRITE_LIMIT: usize = 20;

/// Formal sum of words with nonzero integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordSum {
    terms: HashMap<Word, BigInt>,
}

impl WordSum {
    pub fn word(w: Word) -> Self {
        let mut sum = WordSum::default();
        sum.add(w, BigInt::one());
        sum
    }

    pub fn add(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }
}

/// Which `aA` factor a rewrite step replaces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Redex {
    #[default]
    Leftmost,
    Rightmost,
}

impl Redex {
    fn find(self, letters: &[Letter]) -> Option<usize> {
        let is_redex =
            |i: &usize| letters[*i] == Letter::Annihilator && letters[*i + 1] == Letter::Creator;
        let mut positions = 0..letters.len().saturating_sub(1);
        match self {
            Redex::Leftmost => positions.find(is_redex),
            Redex::Rightmost => positions.rev().find(is_redex),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RewriteStats {
    /// Rewrite rounds until the fixpoint.
    pub rounds: usize,
    /// Single `aA -> Aa + I` applications, counted per distinct word.
    pub steps: usize,
    /// Largest number of distinct words held at once.
    pub peak_terms: usize,
}

impl fmt::Display for RewriteStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} rounds, {} steps, peak {} terms",
            self.rounds, self.steps, self.peak_terms
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rewriter {
    pub limit: usize,
    pub redex: Redex,
}

impl Default for Rewriter {
    fn default() -> Self {
        Rewriter {
            limit: DEFAULT_REWRITE_LIMIT,
            redex: Redex::Leftmost,
        }
    }
}

impl Rewriter {
    pub fn with_limit(limit: usize) -> Self {
        Rewriter {
            limit,
            ..Default::default()
        }
    }

    pub fn redex(mut self, redex: Redex) -> Self {
        self.redex = redex;
        self
    }

    pub fn rewrite(&self, word: &Word) -> Result<NormalForm, RewriteError> {
        self.rewrite_with_stats(word).map(|(nf, _)| nf)
    }

    /// Rewrites every word of the current sum once per round, merging equal
    /// words, until all words are normally ordered. Each step removes one
    /// inversion from the rewritten word, so this terminates.
    pub fn rewrite_with_stats(
        &self,
        word: &Word,
    ) -> Result<(NormalForm, RewriteStats), RewriteError> {
        if word.len() > self.limit {
            return Err(RewriteError::LimitExceeded {
                len: word.len(),
                limit: self.limit,
            });
        }
        let mut stats = RewriteStats::default();
        let mut done = NormalForm::zero();
        let mut pending = WordSum::word(word.clone());
        while !pending.is_empty() {
            stats.peak_terms = stats.peak_terms.max(pending.len());
            let mut next = WordSum::default();
            for (w, c) in pending.terms {
                match self.redex.find(w.letters()) {
                    None => {
                        let (r, s) = w.excess_counts();
                        done.add_term(MonomialIndex::new(r, s), c);
                    }
                    Some(i) => {
                        stats.steps += 1;
                        let mut letters = w.into_letters();
                        letters.swap(i, i + 1);
                        let swapped = Word::new(letters.clone());
                        letters.drain(i..i + 2);
                        next.add(swapped, c.clone());
                        next.add(Word::new(letters), c);
                    }
                }
            }
            pending = next;
            stats.rounds += 1;
        }
        Ok((done, stats))
    }
}

/// Normal form by leftmost-redex rewriting with the default length limit.
pub fn rewrite_normal(word: &Word) -> Result<NormalForm, RewriteError> {
    Rewriter::default().rewrite(word)
}

/// Integer polynomial in one variable, `degree -> coefficient`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPolynomial {
    coefficients: BTreeMap<usize, BigInt>,
}

impl IntPolynomial {
    pub fn monomial(degree: usize) -> Self {
        Self::from_coefficients([(degree, BigInt::one())])
    }

    pub fn from_coefficients<I: IntoIterator<Item = (usize, BigInt)>>(coefficients: I) -> Self {
        let mut p = IntPolynomial::default();
        for (d, c) in coefficients {
            p.add_term(d, c);
        }
        p
    }

    fn add_term(&mut self, degree: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coefficients.entry(degree).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coefficients.remove(&degree);
        }
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coefficients.get(&degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coefficients.iter().map(|(&d, c)| (d, c))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.coefficients.iter().rev().enumerate() {
            let mag = c.magnitude();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            match d {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}x")?,
                _ => write!(f, "{mag}x^{d}")?,
            }
        }
        Ok(())
    }
}

/// `m (m-1) ... (m-s+1)`, zero when `s > m`.
fn falling_factorial(m: usize, s: usize) -> BigInt {
    if s > m {
        return BigInt::zero();
    }
    (m - s + 1..=m).fold(BigInt::one(), |acc, f| acc * f)
}

/// `A^r a^s x^m = m!/(m-s)! x^(m-s+r)`, extended linearly.
pub fn apply_to_monomial(x: &NormalForm, m: usize) -> IntPolynomial {
    let mut out = IntPolynomial::default();
    for (idx, c) in x.terms() {
        if idx.s <= m {
            out.add_term(m - idx.s + idx.r, c * falling_factorial(m, idx.s));
        }
    }
    out
}

pub fn apply_to_polynomial(x: &NormalForm, p: &IntPolynomial) -> IntPolynomial {
    let mut out = IntPolynomial::default();
    for (m, c) in p.terms() {
        for (d, v) in apply_to_monomial(x, m).coefficients {
            out.add_term(d, v * c);
        }
    }
    out
}

/// Compares actions on `x^0 ..= x^S`, `S` the largest annihilator power in
/// either argument. On `x^m` only terms with `s <= m` act, and the `s = m`
/// terms contribute `m! beta_rm x^r`, so these actions determine every
/// coefficient.
pub fn equal_by_action(x: &NormalForm, y: &NormalForm) -> bool {
    let top = x.max_annihilator_power().max(y.max_annihilator_power());
    (0..=top).all(|m| apply_to_monomial(x, m) == apply_to_monomial(y, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn nf(terms: &[((usize, usize), i64)]) -> NormalForm {
        NormalForm::from_terms(terms.iter().copied())
    }

    fn poly(terms: &[(usize, i64)]) -> IntPolynomial {
        IntPolynomial::from_coefficients(terms.iter().map(|&(d, c)| (d, BigInt::from(c))))
    }

    #[test]
    fn rewrite_examples() {
        assert_eq!(
            rewrite_normal(&w("aA")).unwrap(),
            nf(&[((1, 1), 1), ((0, 0), 1)])
        );
        assert_eq!(
            rewrite_normal(&w("aAaAAAaAa")).unwrap(),
            nf(&[((5, 4), 1), ((4, 3), 10), ((3, 2), 23), ((2, 1), 9)])
        );
        assert_eq!(rewrite_normal(&w("AAaa")).unwrap(), nf(&[((2, 2), 1)]));
        assert_eq!(rewrite_normal(&Word::empty()).unwrap(), NormalForm::one());
    }

    #[test]
    fn rewrite_limit() {
        let long = Word::from_bits(0b1010, 21);
        assert_eq!(
            rewrite_normal(&long),
            Err(RewriteError::LimitExceeded { len: 21, limit: 20 })
        );
        assert!(Rewriter::with_limit(21).rewrite(&w("aA")).is_ok());
        let msg = rewrite_normal(&long).unwrap_err().to_string();
        assert!(msg.contains("limit 20"), "{msg}");
    }

    #[test]
    fn strategies_agree_exhaustively() {
        let right = Rewriter::default().redex(Redex::Rightmost);
        for len in 0..=9 {
            for bits in 0..1u64 << len {
                let word = Word::from_bits(bits, len);
                assert_eq!(
                    right.rewrite(&word).unwrap(),
                    rewrite_normal(&word).unwrap(),
                    "{word}"
                );
            }
        }
    }

    #[test]
    fn stats_track_work() {
        let (_, stats) = Rewriter::default().rewrite_with_stats(&w("AAaa")).unwrap();
        assert_eq!(
            stats,
            RewriteStats {
                rounds: 1,
                steps: 0,
                peak_terms: 1
            }
        );
        let (_, stats) = Rewriter::default().rewrite_with_stats(&w("aA")).unwrap();
        assert_eq!(stats.steps, 1);
        assert_eq!(stats.peak_terms, 2);
    }

    #[test]
    fn action_examples() {
        assert_eq!(
            apply_to_monomial(&NormalForm::monomial(0, 1), 3),
            poly(&[(2, 3)])
        );
        assert_eq!(
            apply_to_monomial(&NormalForm::monomial(1, 0), 3),
            poly(&[(4, 1)])
        );
        assert_eq!(
            apply_to_monomial(&nf(&[((1, 1), 1), ((0, 0), 1)]), 2),
            poly(&[(2, 3)])
        );
        assert!(apply_to_monomial(&NormalForm::monomial(0, 3), 2).is_zero());
        assert_eq!(
            apply_to_monomial(&NormalForm::monomial(2, 3), 5),
            poly(&[(4, 60)])
        );
    }

    #[test]
    fn equality_by_action() {
        let x = nf(&[((3, 2), 7), ((0, 1), -1)]);
        assert!(equal_by_action(&x, &x));
        assert!(equal_by_action(
            &crate::algebra::normal_order_word(&w("aA")),
            &nf(&[((1, 1), 1), ((0, 0), 1)])
        ));
        assert!(!equal_by_action(
            &nf(&[((1, 1), 1)]),
            &nf(&[((1, 1), 1), ((0, 0), 1)])
        ));
        // differ only in the s = 3 coefficient
        assert!(!equal_by_action(&nf(&[((0, 3), 1)]), &nf(&[((0, 3), 2)])));
        assert!(equal_by_action(&NormalForm::zero(), &NormalForm::zero()));
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(poly(&[(2, 3), (0, -1)]).to_string(), "3x^2 - 1");
        assert_eq!(IntPolynomial::default().to_string(), "0");
    }
}
