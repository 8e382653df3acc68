use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Letter, Nail, Word};

/// An unreduced expression tree. Keeps the symbol count that a word had
/// before any free reduction, which is what the length recurrences count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Zero,
    Leaf(Letter),
    Sum(Vec<Expr>),
    Neg(Box<Expr>),
    Comm(Box<Expr>, Box<Expr>),
}

/// Result of expanding an [`Expr`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flattened {
    pub word: Word,
    pub symbol_count: u64,
}

impl Expr {
    pub fn nail(nail: Nail) -> Expr {
        Expr::Leaf(Letter::pos(nail))
    }

    /// Positive leaf for a nail label; panics outside `1..=64`.
    pub fn n(label: u8) -> Expr {
        Expr::nail(Nail::new(label).expect("nail label in 1..=64"))
    }

    pub fn sum<I: IntoIterator<Item = Expr>>(parts: I) -> Expr {
        Expr::Sum(parts.into_iter().collect())
    }

    pub fn comm(a: Expr, b: Expr) -> Expr {
        Expr::Comm(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(e: Expr) -> Expr {
        Expr::Neg(Box::new(e))
    }

    /// One leaf per letter, so the symbol count equals the word length.
    pub fn from_word(word: &Word) -> Expr {
        Expr::Sum(word.letters().iter().map(|&l| Expr::Leaf(l)).collect())
    }

    /// Letters after expanding every negation and commutator, before reduction.
    pub fn symbol_count(&self) -> u64 {
        match self {
            Expr::Zero => 0,
            Expr::Leaf(_) => 1,
            Expr::Sum(parts) => parts.iter().map(Expr::symbol_count).sum(),
            Expr::Neg(e) => e.symbol_count(),
            Expr::Comm(a, b) => 2 * (a.symbol_count() + b.symbol_count()),
        }
    }

    /// Writes the expanded, unreduced letter sequence.
    pub fn expand_into(&self, out: &mut Vec<Letter>) {
        self.expand(false, out);
    }

    fn expand(&self, negated: bool, out: &mut Vec<Letter>) {
        match self {
            Expr::Zero => {}
            Expr::Leaf(l) => out.push(if negated { l.inverse() } else { *l }),
            Expr::Sum(parts) => {
                if negated {
                    parts.iter().rev().for_each(|p| p.expand(true, out));
                } else {
                    parts.iter().for_each(|p| p.expand(false, out));
                }
            }
            Expr::Neg(e) => e.expand(!negated, out),
            // -[a,b] = [b,a]
            Expr::Comm(a, b) => {
                let (a, b) = if negated { (b, a) } else { (a, b) };
                a.expand(false, out);
                b.expand(false, out);
                a.expand(true, out);
                b.expand(true, out);
            }
        }
    }

    pub fn flatten(&self) -> Flattened {
        let mut letters = Vec::new();
        self.expand_into(&mut letters);
        let symbol_count = letters.len() as u64;
        debug_assert_eq!(symbol_count, self.symbol_count());
        Flattened {
            word: Word::reduce(letters),
            symbol_count,
        }
    }

    pub fn word(&self) -> Word {
        self.flatten().word
    }

    fn write_to(&self, out: &mut String) {
        use core::fmt::Write;
        match self {
            Expr::Zero => out.push('0'),
            Expr::Leaf(l) => {
                let _ = write!(out, "{}", l.signed());
            }
            Expr::Sum(parts) if parts.is_empty() => out.push('0'),
            Expr::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    let mut s = String::new();
                    p.write_to(&mut s);
                    if i > 0 && !s.starts_with('-') {
                        out.push('+');
                    }
                    out.push_str(&s);
                }
            }
            Expr::Neg(e) => match &**e {
                Expr::Leaf(l) => {
                    let _ = write!(out, "{}", l.inverse().signed());
                }
                inner => {
                    out.push_str("-(");
                    inner.write_to(out);
                    out.push(')');
                }
            },
            Expr::Comm(a, b) => {
                out.push('[');
                a.write_to(out);
                out.push(',');
                b.write_to(out);
                out.push(']');
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_to(&mut s);
        f.write_str(&s)
    }
}
