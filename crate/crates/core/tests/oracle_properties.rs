//! Cross-oracle agreement on random inputs.

use num_bigint::BigInt;
use ordo::oracle::{apply_to_monomial, apply_to_polynomial, equal_by_action, Redex, Rewriter};
use ordo::{normal_order_word, rewrite_normal, IntPolynomial, Letter, NormalForm, Word};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_bits(rng.gen(), len)
}

#[test]
fn random_words_up_to_16() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let rightmost = Rewriter::default().redex(Redex::Rightmost);
    for _ in 0..1000 {
        let w = random_word(&mut rng, 16);
        let rook = normal_order_word(&w);
        let oracle = rewrite_normal(&w).unwrap();
        assert_eq!(rook, oracle, "{w}");
        assert!(equal_by_action(&rook, &oracle));
        assert!(rook.terms().all(|(_, c)| c > &BigInt::from(0)), "{w}");
    }
    for _ in 0..100 {
        let w = random_word(&mut rng, 14);
        assert_eq!(
            rightmost.rewrite(&w).unwrap(),
            rewrite_normal(&w).unwrap(),
            "{w}"
        );
    }
}

#[test]
fn alternating_sixteen() {
    let w: Word = "aA".repeat(8).parse().unwrap();
    assert_eq!(normal_order_word(&w), rewrite_normal(&w).unwrap());
}

fn nf_strategy() -> impl Strategy<Value = NormalForm> {
    prop::collection::vec(((0usize..=6, 0usize..=6), -9i64..=9), 0..5)
        .prop_map(NormalForm::from_terms)
}

fn word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..10).prop_map(|v| {
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
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn product_acts_as_composition(x in nf_strategy(), y in nf_strategy(), m in 0usize..=8) {
        let composed = apply_to_polynomial(&x, &apply_to_monomial(&y, m));
        prop_assert_eq!(apply_to_monomial(&x.multiply(&y), m), composed);
    }

    #[test]
    fn action_equality_matches_map_equality(x in nf_strategy(), y in nf_strategy()) {
        prop_assert_eq!(equal_by_action(&x, &y), x == y);
        prop_assert!(equal_by_action(&x, &x.clone()));
    }

    #[test]
    fn word_acts_letter_by_letter(w in word_strategy(), m in 0usize..=6) {
        // a acts as d/dx and A as x, applied right to left
        let mut p = IntPolynomial::monomial(m);
        for letter in w.letters().iter().rev() {
            let gen = match letter {
                Letter::Creator => NormalForm::monomial(1, 0),
                Letter::Annihilator => NormalForm::monomial(0, 1),
            };
            p = apply_to_polynomial(&gen, &p);
        }
        prop_assert_eq!(apply_to_monomial(&normal_order_word(&w), m), p);
    }

    #[test]
    fn render_reparses(x in nf_strategy()) {
        prop_assert_eq!(ordo::normalize(&x.to_string()).unwrap(), x.clone());
        prop_assert_eq!(NormalForm::from_json(&x.to_json()).unwrap(), x);
    }
}
