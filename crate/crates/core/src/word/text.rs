//! Text form of words: `1+2-1-2`. The empty word prints as `0`; both `0`
//! and the empty string parse back to it.

use core::fmt;
use core::str::FromStr;

use super::{Letter, Word, WordError};
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    ExpectedSign,
    ExpectedInteger,
    UnexpectedChar(char),
    Nail(WordError),
}

/// Malformed word text; `position` is a byte offset into the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ParseErrorKind::ExpectedSign => {
                write!(f, "expected '+' or '-' at position {}", self.position)
            }
            ParseErrorKind::ExpectedInteger => {
                write!(f, "expected a nail number at position {}", self.position)
            }
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected {c:?} at position {}", self.position)
            }
            ParseErrorKind::Nail(e) => write!(f, "{e} (position {})", self.position),
        }
    }
}

impl core::error::Error for ParseError {}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Word, ParseError> {
        let bytes = text.as_bytes();
        let mut pos = 0usize;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Ok(Word::empty());
        }
        if text.trim() == "0" {
            return Ok(Word::empty());
        }

        let mut letters = Vec::new();
        let mut first = true;
        while pos < bytes.len() {
            let sign_at = pos;
            let negative = match bytes[pos] {
                b'+' => {
                    pos += 1;
                    false
                }
                b'-' => {
                    pos += 1;
                    true
                }
                b'0'..=b'9' if first => false,
                b'0'..=b'9' => {
                    return Err(ParseError {
                        position: pos,
                        kind: ParseErrorKind::ExpectedSign,
                    })
                }
                _ => {
                    let c = text[pos..].chars().next().unwrap_or('?');
                    return Err(ParseError {
                        position: pos,
                        kind: ParseErrorKind::UnexpectedChar(c),
                    });
                }
            };
            skip_ws(&mut pos);
            let start = pos;
            let mut value: i64 = 0;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                value = value
                    .saturating_mul(10)
                    .saturating_add((bytes[pos] - b'0') as i64);
                pos += 1;
            }
            if pos == start {
                let kind = match text[pos..].chars().next() {
                    None => ParseErrorKind::ExpectedInteger,
                    Some(c) if c.is_ascii_whitespace() => ParseErrorKind::ExpectedInteger,
                    Some(c) => ParseErrorKind::UnexpectedChar(c),
                };
                return Err(ParseError {
                    position: pos.max(sign_at),
                    kind,
                });
            }
            let signed = if negative { -value } else { value };
            let letter = Letter::from_signed(signed).map_err(|e| ParseError {
                position: start,
                kind: ParseErrorKind::Nail(e),
            })?;
            letters.push(letter);
            first = false;
            skip_ws(&mut pos);
        }
        Ok(Word::reduce(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, l) in self.letters().iter().enumerate() {
            if i > 0 && l.is_positive() {
                f.write_str("+")?;
            }
            write!(f, "{}", l.signed())?;
        }
        Ok(())
    }
}
