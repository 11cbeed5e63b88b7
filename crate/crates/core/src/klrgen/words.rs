//! Words in the KLR generators and their degrees.

use crate::combinat::{Quantum, ResidueSeq};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Token {
    Psi(usize),
    Y(usize),
    /// Residue idempotent `e(i)`.
    E(ResidueSeq),
    /// `ε_a(i)` with `a ∈ {0, 1}`.
    Eps(u8, ResidueSeq),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Psi(r) => write!(f, "psi{r}"),
            Token::Y(s) => write!(f, "y{s}"),
            Token::E(i) => write!(f, "e{i}"),
            Token::Eps(a, i) => write!(f, "eps{a}{i}"),
        }
    }
}

/// Product of tokens, read left to right.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Token>);

impl Word {
    pub fn new(tokens: Vec<Token>) -> Self {
        Word(tokens)
    }

    pub fn tokens(&self) -> &[Token] {
        &self.0
    }

    pub fn push(&mut self, t: Token) {
        self.0.push(t);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn parse_index(s: &str, tok: &str) -> Result<usize> {
    s.parse::<usize>().ok().filter(|&k| k > 0).ok_or_else(|| Error::InvalidToken(tok.to_string()))
}

fn parse_token(e: Quantum, tok: &str) -> Result<Token> {
    let bad = || Error::InvalidToken(tok.to_string());
    let (head, rest) = match tok.find(|c: char| c.is_ascii_digit() || c == '(') {
        Some(k) => tok.split_at(k),
        None => return Err(bad()),
    };
    match head {
        "psi" | "ψ" => Ok(Token::Psi(parse_index(rest, tok)?)),
        "y" => Ok(Token::Y(parse_index(rest, tok)?)),
        "e" => Ok(Token::E(ResidueSeq::parse(e, rest).map_err(|_| bad())?)),
        "eps" | "ε" => {
            let a = match rest.chars().next() {
                Some('0') => 0,
                Some('1') => 1,
                _ => return Err(bad()),
            };
            let seq = &rest[1..];
            if !seq.starts_with('(') {
                return Err(bad());
            }
            Ok(Token::Eps(a, ResidueSeq::parse(e, seq).map_err(|_| bad())?))
        }
        _ => Err(bad()),
    }
}

/// Parse a word such as `"psi2 y3 e(012)"`; tokens are separated by spaces or `*`.
pub fn parse_word(e: Quantum, s: &str) -> Result<Word> {
    let tokens = s
        .split(|c: char| c.is_whitespace() || c == '*' || c == '·')
        .filter(|t| !t.is_empty() && *t != "1")
        .map(|t| parse_token(e, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Word(tokens))
}

/// `(ℤ-degree, ℤ/2-degree)` of a word containing an idempotent. The residues
/// at the right end come from the last idempotent moved past the `ψ`s after
/// it (`e(i)ψ_r = ψ_r e(s_r·i)`); the word is then read from right to left.
/// `None` if there is no idempotent, an index is out of range, or two
/// idempotents are incompatible (the word is zero).
pub fn word_degree(word: &Word) -> Option<(i64, u8)> {
    let tokens = word.tokens();
    let last = tokens.iter().rposition(|t| matches!(t, Token::E(_) | Token::Eps(..)))?;
    let (Token::E(i) | Token::Eps(_, i)) = &tokens[last] else { unreachable!() };
    let mut right_end = i.clone();
    for tok in &tokens[last + 1..] {
        if let Token::Psi(r) = tok {
            if *r + 1 > right_end.len() {
                return None;
            }
            right_end = right_end.swap(*r);
        }
    }
    let mut current = right_end;
    let mut deg = 0i64;
    let mut parity = 0u8;
    for tok in tokens.iter().rev() {
        match tok {
            Token::E(i) => {
                if current != *i {
                    return None;
                }
            }
            Token::Eps(a, i) => {
                parity ^= a;
                if current != *i && current != i.neg() {
                    return None;
                }
            }
            Token::Y(_) => {
                deg += 2;
                parity ^= 1;
            }
            Token::Psi(r) => {
                if *r + 1 > current.len() {
                    return None;
                }
                deg -= current.cartan(current.at(*r), current.at(*r + 1));
                parity ^= 1;
                current = current.swap(*r);
            }
        }
    }
    Some((deg, parity))
}
