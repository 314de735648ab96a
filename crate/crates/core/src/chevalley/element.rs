use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{LieError, Result};
use crate::root_system::{CartanType, RootSystem};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// A Chevalley basis vector. Indices are 1-based; root indices follow the
/// canonical positive-root order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    H(usize),
    X(usize),
    Y(usize),
}

impl Slot {
    /// Dense position in `H_1..H_k, X_1..X_N, Y_1..Y_N`.
    pub fn position(self, rank: usize, num_positive: usize) -> usize {
        match self {
            Slot::H(i) => i - 1,
            Slot::X(i) => rank + i - 1,
            Slot::Y(i) => rank + num_positive + i - 1,
        }
    }

    pub fn from_position(pos: usize, rank: usize, num_positive: usize) -> Slot {
        if pos < rank {
            Slot::H(pos + 1)
        } else if pos < rank + num_positive {
            Slot::X(pos - rank + 1)
        } else {
            Slot::Y(pos - rank - num_positive + 1)
        }
    }

    pub fn index(self) -> usize {
        match self {
            Slot::H(i) | Slot::X(i) | Slot::Y(i) => i,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::H(i) => write!(f, "H[{i}]"),
            Slot::X(i) => write!(f, "X[{i}]"),
            Slot::Y(i) => write!(f, "Y[{i}]"),
        }
    }
}

/// Sparse element of a Lie algebra over the Chevalley basis. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement {
    cartan_type: CartanType,
    terms: BTreeMap<Slot, Rational>,
}

impl LieElement {
    pub fn zero(cartan_type: CartanType) -> Self {
        Self {
            cartan_type,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(cartan_type: CartanType, slot: Slot) -> Self {
        Self::term(cartan_type, slot, Rational::one())
    }

    pub fn term(cartan_type: CartanType, slot: Slot, coeff: Rational) -> Self {
        let mut e = Self::zero(cartan_type);
        e.add_term(slot, coeff);
        e
    }

    pub fn h(ct: CartanType, i: usize) -> Self {
        Self::basis(ct, Slot::H(i))
    }

    pub fn x(ct: CartanType, i: usize) -> Self {
        Self::basis(ct, Slot::X(i))
    }

    pub fn y(ct: CartanType, i: usize) -> Self {
        Self::basis(ct, Slot::Y(i))
    }

    /// Builds an element from `(slot, integer)` pairs, checking indices.
    pub fn from_terms<I>(rs: &RootSystem, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Slot, Rational)>,
    {
        let mut e = Self::zero(rs.cartan_type());
        for (slot, c) in terms {
            check_slot(rs, slot)?;
            e.add_term(slot, c);
        }
        Ok(e)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Slot, &Rational)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, slot: Slot) -> Rational {
        self.terms
            .get(&slot)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> Vec<Slot> {
        self.terms.keys().copied().collect()
    }

    pub fn h_part(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().filter_map(|(s, c)| match s {
            Slot::H(i) => Some((*i, c)),
            _ => None,
        })
    }

    pub fn x_part(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().filter_map(|(s, c)| match s {
            Slot::X(i) => Some((*i, c)),
            _ => None,
        })
    }

    pub fn y_part(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().filter_map(|(s, c)| match s {
            Slot::Y(i) => Some((*i, c)),
            _ => None,
        })
    }

    /// If the element is `c·b` for a single basis vector `b`, returns `(b, c)`.
    pub fn as_single_term(&self) -> Option<(Slot, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(s, c)| (*s, c))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, slot: Slot, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(slot) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_type(&self, other: &LieElement) -> Result<()> {
        if self.cartan_type != other.cartan_type {
            return Err(LieError::RootSystemMismatch {
                left: self.cartan_type.to_string(),
                right: other.cartan_type.to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &LieElement) -> Result<LieElement> {
        self.same_type(other)?;
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LieElement) -> Result<LieElement> {
        self.same_type(other)?;
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> LieElement {
        if k.is_zero() {
            return LieElement::zero(self.cartan_type);
        }
        LieElement {
            cartan_type: self.cartan_type,
            terms: self.terms.iter().map(|(s, c)| (*s, c * k)).collect(),
        }
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&rat(-1))
    }

    /// If `self = c·other` for some rational `c`, returns `c`. Zero is a
    /// multiple of anything with `c = 0`.
    pub fn multiple_of(&self, other: &LieElement) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (s0, c0) = self.terms.iter().next()?;
        let d0 = other.terms.get(s0)?;
        let c = c0 / d0;
        for (s, x) in &self.terms {
            let y = other.terms.get(s)?;
            if &(y * &c) != x {
                return None;
            }
        }
        Some(c)
    }
}

pub(crate) fn check_slot(rs: &RootSystem, slot: Slot) -> Result<()> {
    match slot {
        Slot::H(i) => {
            if i == 0 || i > rs.rank() {
                return Err(LieError::IndexOutOfRange {
                    index: i,
                    max: rs.rank(),
                });
            }
            Ok(())
        }
        Slot::X(i) | Slot::Y(i) => rs.check_index(i),
    }
}

/// Canonical printing: H terms, then X, then Y, each by ascending index;
/// coefficients as reduced fractions, always written explicitly.
impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (slot, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            write!(f, "{mag}*{slot}")?;
        }
        Ok(())
    }
}
