//! Text syntax for Lie algebra elements.
//!
//! ```text
//! expr := term (('+' | '-') term)*
//! term := [rational '*'] atom | '0'
//! atom := ('X' | 'Y') '[' idx (',' idx)* ']' | 'H' '[' idx ']'
//! ```
//!
//! A single index denotes the root vector at that index; two or more indices
//! denote the left-nested bracket of simple root vectors. Whitespace is
//! ignored.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chevalley::{LieElement, Rational, RootKind, Slot, StructureTable};
use crate::error::{LieError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Cartan(usize),
    Root(RootKind, usize),
    Nested(RootKind, Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketExpr {
    pub terms: Vec<(Rational, Atom)>,
}

impl BracketExpr {
    /// Evaluates the expression in `t`, checking every index.
    pub fn evaluate(&self, t: &StructureTable) -> Result<LieElement> {
        let ct = t.cartan_type();
        let mut acc = LieElement::zero(ct);
        for (c, atom) in &self.terms {
            let e = match atom {
                Atom::Cartan(i) => {
                    if *i == 0 || *i > t.rank() {
                        return Err(LieError::IndexOutOfRange {
                            index: *i,
                            max: t.rank(),
                        });
                    }
                    LieElement::h(ct, *i)
                }
                Atom::Root(kind, i) => {
                    t.root_system().check_index(*i)?;
                    LieElement::basis(
                        ct,
                        match kind {
                            RootKind::X => Slot::X(*i),
                            RootKind::Y => Slot::Y(*i),
                        },
                    )
                }
                Atom::Nested(kind, seq) => t.nested_bracket(*kind, seq)?,
            };
            acc = acc.try_add(&e.scale(c))?;
        }
        Ok(acc)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(LieError::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", b as char))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn index(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.integer()?;
        usize::try_from(n).map_err(|_| LieError::Parse {
            offset: start,
            message: "index too large".into(),
        })
    }

    fn rational(&mut self) -> Result<Rational> {
        let p = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let q = self.integer()?;
            if q.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(Rational::new(p, q));
        }
        Ok(Rational::from_integer(p))
    }

    fn atom(&mut self) -> Result<Atom> {
        let kind = match self.peek() {
            Some(b'H') => None,
            Some(b'X') => Some(RootKind::X),
            Some(b'Y') => Some(RootKind::Y),
            _ => return self.err("expected X[...], Y[...] or H[...]"),
        };
        self.pos += 1;
        self.expect(b'[')?;
        let mut idx = vec![self.index()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            idx.push(self.index()?);
        }
        self.expect(b']')?;
        Ok(match (kind, idx.as_slice()) {
            (None, [i]) => Atom::Cartan(*i),
            (None, _) => return self.err("H takes exactly one index"),
            (Some(k), [i]) => Atom::Root(k, *i),
            (Some(k), _) => Atom::Nested(k, idx),
        })
    }

    /// `None` for the literal zero term.
    fn term(&mut self) -> Result<Option<(Rational, Atom)>> {
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let c = self.rational()?;
            if self.peek() != Some(b'*') {
                if c.is_zero() {
                    return Ok(None);
                }
                return self.err("expected '*' after coefficient");
            }
            self.pos += 1;
            return Ok(Some((c, self.atom()?)));
        }
        Ok(Some((Rational::one(), self.atom()?)))
    }
}

pub fn parse_expr(text: &str) -> Result<BracketExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut sign = match p.peek() {
        Some(b'-') => {
            p.pos += 1;
            -Rational::one()
        }
        Some(b'+') => {
            p.pos += 1;
            Rational::one()
        }
        _ => Rational::one(),
    };
    loop {
        if let Some((c, atom)) = p.term()? {
            terms.push((c * &sign, atom));
        }
        sign = match p.peek() {
            None => break,
            Some(b'+') => Rational::one(),
            Some(b'-') => -Rational::one(),
            Some(_) => return p.err("expected '+', '-' or end of input"),
        };
        p.pos += 1;
    }
    Ok(BracketExpr { terms })
}

/// Parses and evaluates in one step.
pub fn parse_element(t: &StructureTable, text: &str) -> Result<LieElement> {
    parse_expr(text)?.evaluate(t)
}
