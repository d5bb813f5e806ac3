//! Expressions over the generators, parsed by recursive descent.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' unary) | factor)*
//! unary  := '-' unary | factor
//! factor := atom ('^' nat)?
//! atom   := 'a' | 'A' | 'a†' | 'ad' | 'I' | integer | '(' expr ')'
//! ```
//!
//! Juxtaposition is the (noncommutative) product. A leading `-` after
//! juxtaposition is read as subtraction, so `A - a` is a difference.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::algebra::NormalForm;
use crate::word_path::{Letter, Word};

pub const DEFAULT_MAX_EXPONENT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(BigInt),
    Gen(Letter),
    Identity,
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u64),
    Negate(Box<Expr>),
}

impl Expr {
    pub fn scalar(n: impl Into<BigInt>) -> Expr {
        Expr::Scalar(n.into())
    }

    pub fn power(base: Expr, exponent: u64) -> Expr {
        Expr::Power(Box::new(base), exponent)
    }

    pub fn negate(inner: Expr) -> Expr {
        Expr::Negate(Box::new(inner))
    }

    /// Evaluates in the normally ordered basis.
    pub fn eval(&self) -> NormalForm {
        match self {
            Expr::Scalar(n) => NormalForm::one().scalar_mul(n),
            Expr::Gen(Letter::Creator) => NormalForm::monomial(1, 0),
            Expr::Gen(Letter::Annihilator) => NormalForm::monomial(0, 1),
            Expr::Identity => NormalForm::one(),
            Expr::Sum(items) => items
                .iter()
                .fold(NormalForm::zero(), |acc, e| acc.add(&e.eval())),
            Expr::Product(items) => items
                .iter()
                .fold(NormalForm::one(), |acc, e| acc.multiply(&e.eval())),
            Expr::Power(base, n) => base.eval().power(*n),
            Expr::Negate(inner) => inner.eval().scalar_mul(&-BigInt::one()),
        }
    }

    /// The generators in order, if this is a plain generator string.
    pub fn as_word(&self) -> Option<Word> {
        match self {
            Expr::Gen(l) => Some(Word::new(vec![*l])),
            Expr::Identity => Some(Word::empty()),
            Expr::Product(items) => {
                let mut letters = Vec::new();
                for item in items {
                    match item {
                        Expr::Gen(l) => letters.push(*l),
                        Expr::Identity => {}
                        _ => return None,
                    }
                }
                Some(Word::new(letters))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Expr {
    /// Fully bracketed form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, items: &[Expr], sep: &str| -> fmt::Result {
            f.write_str("(")?;
            for (i, e) in items.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{e}")?;
            }
            f.write_str(")")
        };
        match self {
            Expr::Scalar(n) => write!(f, "{n}"),
            Expr::Gen(l) => write!(f, "{l}"),
            Expr::Identity => f.write_str("I"),
            Expr::Sum(items) => join(f, items, " + "),
            Expr::Product(items) => join(f, items, " * "),
            Expr::Power(b, n) => write!(f, "{b}^{n}"),
            Expr::Negate(e) => write!(f, "(-{e})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("exponent {exponent} at byte {offset} exceeds limit {limit}")]
    ExponentTooLarge {
        offset: usize,
        exponent: String,
        limit: u64,
    },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::ExponentTooLarge { offset, .. } => {
                *offset
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Gen(Letter),
    Identity,
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Gen(l) => format!("generator '{l}'"),
            Tok::Identity => "'I'".into(),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self,
            Tok::Gen(_) | Tok::Identity | Tok::Int(_) | Tok::LParen
        )
    }
}

const FACTOR_START: [&str; 4] = ["generator", "'I'", "integer", "'('"];

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some((at, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            'a' => match chars.peek() {
                Some(&(_, '†')) | Some(&(_, 'd')) => {
                    chars.next();
                    Tok::Gen(Letter::Creator)
                }
                _ => Tok::Gen(Letter::Annihilator),
            },
            'A' => Tok::Gen(Letter::Creator),
            'I' => Tok::Identity,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let mut end = at + 1;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    chars.next();
                    end += 1;
                }
                Tok::Int(input[at..end].parse().expect("ascii digits"))
            }
            other => {
                return Err(ParseError::Syntax {
                    offset: at,
                    expected: vec!["generator", "'I'", "integer", "operator", "parenthesis"],
                    found: format!("{other:?}"),
                })
            }
        };
        toks.push((at, tok));
    }
    toks.push((input.len(), Tok::End));
    Ok(toks)
}

pub struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    max_exponent: u64,
}

impl Parser {
    pub fn new(input: &str) -> Result<Parser, ParseError> {
        Ok(Parser {
            toks: lex(input)?,
            pos: 0,
            max_exponent: DEFAULT_MAX_EXPONENT,
        })
    }

    pub fn max_exponent(mut self, limit: u64) -> Self {
        self.max_exponent = limit;
        self
    }

    pub fn parse(mut self) -> Result<Expr, ParseError> {
        let e = self.expr()?;
        match self.peek() {
            Tok::End => Ok(e),
            _ => Err(self.error(&[
                "'+'",
                "'-'",
                "'*'",
                "'^'",
                "generator",
                "'I'",
                "integer",
                "'('",
                "end of input",
            ])),
        }
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        let (offset, tok) = &self.toks[self.pos];
        ParseError::Syntax {
            offset: *offset,
            expected: expected.to_vec(),
            found: tok.describe(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut items = vec![self.term()?];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    items.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    items.push(Expr::negate(self.term()?));
                }
                _ => break,
            }
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Expr::Sum(items)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut items = vec![self.unary()?];
        loop {
            if *self.peek() == Tok::Star {
                self.bump();
                items.push(self.unary()?);
            } else if self.peek().starts_factor() {
                items.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Expr::Product(items)
        })
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::negate(self.unary()?));
        }
        if !self.peek().starts_factor() {
            let mut expected = FACTOR_START.to_vec();
            expected.push("'-'");
            return Err(self.error(&expected));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (offset, tok) = self.toks[self.pos].clone();
        let Tok::Int(n) = tok else {
            return Err(self.error(&["nonnegative integer exponent"]));
        };
        self.bump();
        match n.to_u64().filter(|&e| e <= self.max_exponent) {
            Some(e) => Ok(Expr::power(base, e)),
            None => Err(ParseError::ExponentTooLarge {
                offset,
                exponent: n.to_string(),
                limit: self.max_exponent,
            }),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Gen(l) => {
                self.bump();
                Ok(Expr::Gen(l))
            }
            Tok::Identity => {
                self.bump();
                Ok(Expr::Identity)
            }
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Scalar(n))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&[
                        "')'",
                        "'+'",
                        "'-'",
                        "'*'",
                        "'^'",
                        "generator",
                        "'I'",
                        "integer",
                        "'('",
                    ]));
                }
                self.bump();
                Ok(e)
            }
            _ => Err(self.error(&FACTOR_START)),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    Parser::new(input)?.parse()
}

/// Parses and evaluates.
pub fn normalize(input: &str) -> Result<NormalForm, ParseError> {
    Ok(parse(input)?.eval())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::normal_order_word;

    const LA: Expr = Expr::Gen(Letter::Annihilator);
    const LC: Expr = Expr::Gen(Letter::Creator);

    fn nf(terms: &[((usize, usize), i64)]) -> NormalForm {
        NormalForm::from_terms(terms.iter().copied())
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse("aA").unwrap(), Expr::Product(vec![LA, LC]));
        assert_eq!(
            parse("(a+A)^2").unwrap(),
            Expr::power(Expr::Sum(vec![LA, LC]), 2)
        );
        assert_eq!(
            parse("A^5 a^4 + 10 A^4 a^3").unwrap(),
            Expr::Sum(vec![
                Expr::Product(vec![Expr::power(LC, 5), Expr::power(LA, 4)]),
                Expr::Product(vec![
                    Expr::scalar(10),
                    Expr::power(LC, 4),
                    Expr::power(LA, 3)
                ]),
            ])
        );
    }

    #[test]
    fn creator_spellings() {
        for s in ["A", "a†", "ad"] {
            assert_eq!(parse(s).unwrap(), LC, "{s}");
        }
        assert_eq!(parse("a† a").unwrap(), Expr::Product(vec![LC, LA]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(normalize("aA - Aa").unwrap(), NormalForm::one());
        assert_eq!(
            normalize("(a+A)^2").unwrap(),
            nf(&[((0, 2), 1), ((1, 1), 2), ((2, 0), 1), ((0, 0), 1)])
        );
        assert_eq!(normalize("I").unwrap(), NormalForm::one());
        assert_eq!(normalize("aA").unwrap(), normalize("Aa + I").unwrap());
        assert_eq!(normalize("A^0").unwrap(), NormalForm::one());
        assert_eq!(normalize("3 * -2").unwrap(), NormalForm::term(-6, 0, 0));
        assert!(normalize("0 A").unwrap().is_zero());
    }

    #[test]
    fn unary_and_binary_minus() {
        assert_eq!(parse("-a").unwrap(), Expr::negate(LA));
        assert_eq!(
            parse("A - a").unwrap(),
            Expr::Sum(vec![LC, Expr::negate(LA)])
        );
        assert_eq!(parse("--a").unwrap(), Expr::negate(Expr::negate(LA)));
        assert_eq!(normalize("A - -a").unwrap(), normalize("A + a").unwrap());
        assert_eq!(parse("-A^2").unwrap(), Expr::negate(Expr::power(LC, 2)));
    }

    #[test]
    fn precedence() {
        let pairs = [
            ("a A^2", "a (A^2)"),
            ("a A + A a", "(a A) + (A a)"),
            ("2 a^3 - A", "(2 (a^3)) - A"),
            ("a * A a", "(a A) a"),
            ("A a^2 A", "A (a^2) A"),
        ];
        for (plain, bracketed) in pairs {
            assert_eq!(
                normalize(plain).unwrap(),
                normalize(bracketed).unwrap(),
                "{plain}"
            );
        }
        assert_ne!(normalize("(a A)^2").unwrap(), normalize("a A^2").unwrap());
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let err = parse("a + ").unwrap_err();
        assert_eq!(err.offset(), 4);
        let err = parse("a + †").unwrap_err();
        assert_eq!(err.offset(), 4);
        let err = parse("(a + A").unwrap_err();
        assert_eq!(err.offset(), 6);
        assert!(err.to_string().contains("')'"), "{err}");
        let err = parse("a ^ A").unwrap_err();
        assert_eq!(err.offset(), 4);
        let err = parse("a)").unwrap_err();
        assert_eq!(err.offset(), 1);
        assert!(parse("").is_err());
        assert!(parse("x").is_err());
        assert!(parse("a d").is_err());
    }

    #[test]
    fn exponent_limit() {
        let err = parse("a^1000001").unwrap_err();
        assert!(matches!(
            err,
            ParseError::ExponentTooLarge {
                offset: 2,
                limit: 1_000_000,
                ..
            }
        ));
        assert!(parse("a^1000000").is_ok());
        assert!(Parser::new("a^11")
            .unwrap()
            .max_exponent(10)
            .parse()
            .is_err());
        assert!(parse("a^99999999999999999999999").is_err());
    }

    #[test]
    fn words_match_rook_route() {
        for len in 1..=8 {
            for bits in 0..1u64 << len {
                let word = Word::from_bits(bits, len);
                let expr = parse(&word.to_string()).unwrap();
                assert_eq!(expr.as_word(), Some(word.clone()));
                assert_eq!(expr.eval(), normal_order_word(&word), "{word}");
            }
        }
    }

    #[test]
    fn rendered_forms_reparse() {
        let samples = [
            "aAaAAAaAa",
            "(a+A)^3",
            "-2 a A a + 7",
            "A - I",
            "(a - A)^4 - 3 A^2 a",
            "0",
        ];
        for s in samples {
            let x = normalize(s).unwrap();
            assert_eq!(normalize(&x.to_string()).unwrap(), x, "{s} -> {x}");
        }
    }

    #[test]
    fn display_is_bracketed() {
        assert_eq!(parse("a A + 2").unwrap().to_string(), "((a * A) + 2)");
        assert_eq!(parse("-(a)^3").unwrap().to_string(), "(-a^3)");
    }
}
