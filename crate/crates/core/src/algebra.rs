//! Elements of the Heisenberg-Weyl algebra in the normally ordered basis
//! `A^r a^s`, and their arithmetic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rook::{rook_numbers, rook_numbers_rect, RookMemo, RookVector};
use crate::word_path::Word;

/// Index of the basis element `A^r a^s`. `(0, 0)` is the identity.
///
/// Ordered by total degree `r + s`, then by `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIndex {
    pub r: usize,
    pub s: usize,
}

impl MonomialIndex {
    pub const IDENTITY: MonomialIndex = MonomialIndex { r: 0, s: 0 };

    pub fn new(r: usize, s: usize) -> Self {
        MonomialIndex { r, s }
    }

    pub fn degree(self) -> usize {
        self.r + self.s
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }
}

impl Ord for MonomialIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.r).cmp(&(other.degree(), other.r))
    }
}

impl PartialOrd for MonomialIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<(usize, usize)> for MonomialIndex {
    fn from((r, s): (usize, usize)) -> Self {
        MonomialIndex { r, s }
    }
}

impl fmt::Display for MonomialIndex {
    /// `A^2 a`, `A`, `a^3`, or `I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn power(f: &mut fmt::Formatter<'_>, sym: &str, n: usize) -> fmt::Result {
            match n {
                1 => write!(f, "{sym}"),
                _ => write!(f, "{sym}^{n}"),
            }
        }
        match (self.r, self.s) {
            (0, 0) => f.write_str("I"),
            (r, 0) => power(f, "A", r),
            (0, s) => power(f, "a", s),
            (r, s) => {
                power(f, "A", r)?;
                f.write_str(" ")?;
                power(f, "a", s)
            }
        }
    }
}

/// A finite combination `sum beta_rs A^r a^s` with nonzero integer
/// coefficients. Normally ordered expansions are unique, so map equality is
/// algebra equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalForm {
    terms: BTreeMap<MonomialIndex, BigInt>,
}

impl NormalForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    /// `A^r a^s`
    pub fn monomial(r: usize, s: usize) -> Self {
        Self::term(BigInt::one(), r, s)
    }

    pub fn term(coeff: impl Into<BigInt>, r: usize, s: usize) -> Self {
        let mut nf = Self::zero();
        nf.add_term(MonomialIndex::new(r, s), coeff.into());
        nf
    }

    /// Sums the given terms; repeated indices accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), C)>,
        C: Into<BigInt>,
    {
        let mut nf = Self::zero();
        for ((r, s), c) in terms {
            nf.add_term(MonomialIndex::new(r, s), c.into());
        }
        nf
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `A^r a^s`, zero if absent.
    pub fn coeff(&self, r: usize, s: usize) -> BigInt {
        self.terms
            .get(&MonomialIndex::new(r, s))
            .cloned()
            .unwrap_or_default()
    }

    /// Terms in ascending `(r + s, r)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (MonomialIndex, &BigInt)> + '_ {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    /// Largest annihilator power present, 0 for the zero element.
    pub fn max_annihilator_power(&self) -> usize {
        self.terms.keys().map(|m| m.s).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, index: MonomialIndex, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(index).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&index);
        }
    }

    fn add_scaled(&mut self, other: &NormalForm, scale: &BigInt) {
        for (&m, c) in &other.terms {
            self.add_term(m, c * scale);
        }
    }

    pub fn add(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one());
        out
    }

    pub fn sub(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        out.add_scaled(other, &-BigInt::one());
        out
    }

    pub fn scalar_mul(&self, c: &BigInt) -> NormalForm {
        if c.is_zero() {
            return NormalForm::zero();
        }
        NormalForm {
            terms: self.terms.iter().map(|(&m, x)| (m, x * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &NormalForm) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&x, cx) in &self.terms {
            for (&y, cy) in &other.terms {
                out.add_scaled(&multiply_basis(x, y), &(cx * cy));
            }
        }
        out
    }

    /// Square-and-multiply; `x^0` is the identity.
    pub fn power(&self, mut n: u64) -> NormalForm {
        let mut base = self.clone();
        let mut acc = NormalForm::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.multiply(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.multiply(&base);
            }
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(NormalFormJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<NormalForm, serde_json::Error> {
        let parsed: NormalFormJson = serde_json::from_value(value.clone())?;
        parsed.try_into().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for NormalForm {
    /// Highest degree first, e.g. `A^5 a^4 + 10 A^4 a^3 - 2 I`; the zero
    /// element is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.magnitude();
            if mag.is_one() && !m.is_identity() {
                write!(f, "{m}")?;
            } else if m.is_identity() && mag.is_one() {
                f.write_str("I")?;
            } else {
                write!(f, "{mag} {m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    r: usize,
    s: usize,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct NormalFormJson {
    terms: Vec<TermJson>,
}

impl From<&NormalForm> for NormalFormJson {
    fn from(nf: &NormalForm) -> Self {
        NormalFormJson {
            terms: nf
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    r: m.r,
                    s: m.s,
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<NormalFormJson> for NormalForm {
    type Error = String;

    fn try_from(json: NormalFormJson) -> Result<Self, Self::Error> {
        let mut nf = NormalForm::zero();
        for t in json.terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| format!("bad coefficient {:?}", t.coeff))?;
            nf.add_term(MonomialIndex::new(t.r, t.s), c);
        }
        Ok(nf)
    }
}

impl Add for &NormalForm {
    type Output = NormalForm;
    fn add(self, rhs: &NormalForm) -> NormalForm {
        NormalForm::add(self, rhs)
    }
}

impl Sub for &NormalForm {
    type Output = NormalForm;
    fn sub(self, rhs: &NormalForm) -> NormalForm {
        NormalForm::sub(self, rhs)
    }
}

impl Mul for &NormalForm {
    type Output = NormalForm;
    fn mul(self, rhs: &NormalForm) -> NormalForm {
        self.multiply(rhs)
    }
}

impl Neg for &NormalForm {
    type Output = NormalForm;
    fn neg(self) -> NormalForm {
        self.scalar_mul(&-BigInt::one())
    }
}

/// `w = sum_k r_B(k) A^(R-k) a^(S-k)` where `B` is the board of `w` and
/// `(R, S)` its creator and annihilator counts.
fn assemble(word: &Word, rooks: &RookVector) -> NormalForm {
    let (r, s) = word.excess_counts();
    let mut nf = NormalForm::zero();
    for (k, c) in rooks.counts().iter().enumerate() {
        nf.add_term(MonomialIndex::new(r - k, s - k), BigInt::from(c.clone()));
    }
    nf
}

/// Normal form of a word through the rook numbers of its board.
pub fn normal_order_word(word: &Word) -> NormalForm {
    assemble(word, &rook_numbers(&word.board()))
}

/// As [`normal_order_word`], reusing a shared memo table.
pub fn normal_order_word_memo(word: &Word, memo: &RookMemo) -> NormalForm {
    assemble(word, &memo.rook_numbers(&word.board()))
}

/// `A^r a^s * A^k a^l = sum_i i! C(s,i) C(k,i) A^(r+k-i) a^(s+l-i)`.
pub fn multiply_basis(x: MonomialIndex, y: MonomialIndex) -> NormalForm {
    let mut nf = NormalForm::zero();
    for (i, gamma) in structure_constants(x.s, y.r).into_iter().enumerate() {
        nf.add_term(
            MonomialIndex::new(x.r + y.r - i, x.s + y.s - i),
            BigInt::from(gamma),
        );
    }
    nf
}

/// `gamma_i = i! C(s,i) C(k,i)` for `i = 0..=min(s,k)`: rook numbers of the
/// `s x k` rectangle formed by the inner `a^s A^k`. The outer powers play no
/// part.
pub fn structure_constants(s: usize, k: usize) -> Vec<BigUint> {
    rook_numbers_rect(s, k).counts().to_vec()
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

    #[test]
    fn fig1_word() {
        assert_eq!(
            normal_order_word(&w("aAaAAAaAa")),
            nf(&[((5, 4), 1), ((4, 3), 10), ((3, 2), 23), ((2, 1), 9)])
        );
    }

    #[test]
    fn defining_relation() {
        assert_eq!(normal_order_word(&w("aA")), nf(&[((1, 1), 1), ((0, 0), 1)]));
        assert_eq!(normal_order_word(&w("Aa")), nf(&[((1, 1), 1)]));
        assert_eq!(normal_order_word(&Word::empty()), NormalForm::one());
    }

    #[test]
    fn multiply_basis_examples() {
        let m = |r, s| MonomialIndex::new(r, s);
        assert_eq!(
            multiply_basis(m(1, 1), m(1, 1)),
            nf(&[((2, 2), 1), ((1, 1), 1)])
        );
        assert_eq!(
            multiply_basis(m(0, 2), m(2, 0)),
            nf(&[((2, 2), 1), ((1, 1), 4), ((0, 0), 2)])
        );
        for r in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    assert_eq!(
                        multiply_basis(m(r, 0), m(k, l)),
                        NormalForm::monomial(r + k, l)
                    );
                }
            }
        }
    }

    #[test]
    fn add_and_scale() {
        assert!(nf(&[((1, 1), 1)]).add(&nf(&[((1, 1), -1)])).is_zero());
        assert_eq!(
            nf(&[((0, 0), 2)]).add(&nf(&[((1, 0), 3)])),
            nf(&[((0, 0), 2), ((1, 0), 3)])
        );
        assert_eq!(
            normal_order_word(&w("aA")).add(&nf(&[((1, 1), -1)])),
            NormalForm::one()
        );
        let x = nf(&[((1, 1), 2), ((0, 3), -4)]);
        assert!(x.scalar_mul(&BigInt::zero()).is_zero());
        assert_eq!(x.scalar_mul(&BigInt::one()), x);
        assert_eq!(
            nf(&[((1, 1), 2)]).scalar_mul(&BigInt::from(3)),
            nf(&[((1, 1), 6)])
        );
    }

    #[test]
    fn multiply_examples() {
        let x = nf(&[((2, 1), 3), ((0, 4), -1)]);
        assert_eq!(NormalForm::one().multiply(&x), x);
        assert_eq!(x.multiply(&NormalForm::one()), x);
        let a = NormalForm::monomial(0, 1);
        let ad = NormalForm::monomial(1, 0);
        assert_eq!(a.multiply(&ad), nf(&[((1, 1), 1), ((0, 0), 1)]));
        let sum = a.add(&ad);
        assert_eq!(
            sum.multiply(&sum),
            nf(&[((0, 2), 1), ((1, 1), 2), ((2, 0), 1), ((0, 0), 1)])
        );
    }

    #[test]
    fn power_examples() {
        let x = nf(&[((3, 1), 5), ((0, 0), -2)]);
        assert_eq!(x.power(0), NormalForm::one());
        assert_eq!(x.power(1), x);
        assert_eq!(x.power(3), x.multiply(&x).multiply(&x));
        assert_eq!(
            NormalForm::monomial(1, 1).power(2),
            nf(&[((2, 2), 1), ((1, 1), 1)])
        );
        assert_eq!(
            NormalForm::monomial(0, 1).power(3),
            NormalForm::monomial(0, 3)
        );
        assert!(NormalForm::zero().power(2).is_zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(
            normal_order_word(&w("aAaAAAaAa")).to_string(),
            "A^5 a^4 + 10 A^4 a^3 + 23 A^3 a^2 + 9 A^2 a"
        );
        assert_eq!(nf(&[((1, 1), 1)]).to_string(), "A a");
        assert_eq!(
            multiply_basis(MonomialIndex::new(0, 2), MonomialIndex::new(2, 0)).to_string(),
            "A^2 a^2 + 4 A a + 2 I"
        );
        assert_eq!(nf(&[((0, 0), 1), ((1, 0), -1)]).to_string(), "-A + I");
        assert_eq!(nf(&[((0, 0), -3), ((0, 2), 1)]).to_string(), "a^2 - 3 I");
        assert_eq!(NormalForm::zero().to_string(), "0");
    }

    #[test]
    fn json_schema() {
        let x = normal_order_word(&w("aA"));
        assert_eq!(
            x.to_json().to_string(),
            r#"{"terms":[{"r":0,"s":0,"coeff":"1"},{"r":1,"s":1,"coeff":"1"}]}"#
        );
        assert_eq!(NormalForm::from_json(&x.to_json()).unwrap(), x);
        let bad = serde_json::json!({"terms":[{"r":0,"s":0,"coeff":"x"}]});
        assert!(NormalForm::from_json(&bad).is_err());
    }

    #[test]
    fn ordering_is_degree_then_creators() {
        let mut v = [
            MonomialIndex::new(0, 2),
            MonomialIndex::new(1, 0),
            MonomialIndex::new(2, 0),
            MonomialIndex::new(0, 0),
            MonomialIndex::new(1, 1),
        ];
        v.sort();
        let pairs: Vec<_> = v.iter().map(|m| (m.r, m.s)).collect();
        assert_eq!(pairs, vec![(0, 0), (1, 0), (0, 2), (1, 1), (2, 0)]);
    }

    #[test]
    fn structure_constants_ignore_outer_powers() {
        for s in 0..5 {
            for k in 0..5 {
                let reference: Vec<BigInt> =
                    multiply_basis(MonomialIndex::new(0, s), MonomialIndex::new(k, 0))
                        .terms()
                        .rev()
                        .map(|(_, c)| c.clone())
                        .collect();
                for r in 0..4 {
                    for l in 0..4 {
                        let coeffs: Vec<BigInt> =
                            multiply_basis(MonomialIndex::new(r, s), MonomialIndex::new(k, l))
                                .terms()
                                .rev()
                                .map(|(_, c)| c.clone())
                                .collect();
                        assert_eq!(coeffs, reference);
                    }
                }
            }
        }
    }

    #[test]
    fn memo_route_agrees() {
        let memo = RookMemo::new();
        for len in 0..=8 {
            for bits in 0..1u64 << len {
                let word = Word::from_bits(bits, len);
                assert_eq!(
                    normal_order_word_memo(&word, &memo),
                    normal_order_word(&word)
                );
            }
        }
    }
}
