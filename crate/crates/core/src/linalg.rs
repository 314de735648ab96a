//! Exact sparse linear algebra over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::chevalley::{LieElement, Rational, Slot};

/// Sparse rational vector indexed by dense basis positions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoeffVector {
    entries: BTreeMap<usize, Rational>,
}

impl CoeffVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(pos: usize) -> Self {
        let mut v = Self::new();
        v.entries.insert(pos, Rational::one());
        v
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, Rational)>>(it: I) -> Self {
        let mut v = Self::new();
        for (p, c) in it {
            v.add_entry(p, &c);
        }
        v
    }

    /// Coordinates of a Lie algebra element in `H, X, Y` position order.
    pub fn from_element(e: &LieElement, rank: usize, num_positive: usize) -> Self {
        Self::from_entries(
            e.terms()
                .map(|(s, c)| (s.position(rank, num_positive), c.clone())),
        )
    }

    pub fn to_element(
        &self,
        e_type: crate::root_system::CartanType,
        num_positive: usize,
    ) -> LieElement {
        let rank = e_type.rank;
        let mut e = LieElement::zero(e_type);
        for (&p, c) in &self.entries {
            e.add_term(Slot::from_position(p, rank, num_positive), c.clone());
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, pos: usize) -> Option<&Rational> {
        self.entries.get(&pos)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(p, c)| (*p, c))
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.iter().next().map(|(p, c)| (*p, c))
    }

    fn add_entry(&mut self, pos: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(pos).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&pos);
        }
    }

    /// `self += k · other`.
    pub fn axpy(&mut self, k: &Rational, other: &CoeffVector) {
        if k.is_zero() {
            return;
        }
        for (p, c) in &other.entries {
            self.add_entry(*p, &(k * c));
        }
    }

    pub fn scale(&mut self, k: &Rational) {
        for c in self.entries.values_mut() {
            *c *= k;
        }
    }
}

/// Fully reduced row-echelon basis of a subspace: every vector has pivot
/// coefficient 1 at its lowest nonzero position and zeros at every other
/// vector's pivot.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpanBasis {
    rows: BTreeMap<usize, CoeffVector>,
}

impl SpanBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a CoeffVector>>(vs: I) -> Self {
        let mut b = Self::new();
        for v in vs {
            b.insert(v.clone());
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Basis vectors in pivot order.
    pub fn vectors(&self) -> impl Iterator<Item = &CoeffVector> {
        self.rows.values()
    }

    /// Residual of `v` after eliminating every pivot of the basis.
    pub fn reduce(&self, v: &CoeffVector) -> CoeffVector {
        let mut r = v.clone();
        let hits: Vec<(usize, Rational)> = v
            .iter()
            .filter(|(p, _)| self.rows.contains_key(p))
            .map(|(p, c)| (p, c.clone()))
            .collect();
        // Basis rows vanish on each other's pivots, so one pass suffices.
        for (p, c) in hits {
            r.axpy(&-c, &self.rows[&p]);
        }
        r
    }

    pub fn contains(&self, v: &CoeffVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: CoeffVector) -> bool {
        let mut r = self.reduce(&v);
        let Some((pivot, lead)) = r.leading().map(|(p, c)| (p, c.clone())) else {
            return false;
        };
        r.scale(&lead.recip());
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(pivot).cloned() {
                row.axpy(&-c, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn extend<I: IntoIterator<Item = CoeffVector>>(&mut self, vs: I) {
        for v in vs {
            self.insert(v);
        }
    }
}

/// Basis of `{c : Σ c_r rows[r] = 0}`.
pub fn kernel(rows: &[CoeffVector]) -> Vec<CoeffVector> {
    // Echelon rows paired with the combination of inputs producing them.
    let mut echelon: BTreeMap<usize, (CoeffVector, CoeffVector)> = BTreeMap::new();
    let mut out = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut v = row.clone();
        let mut combo = CoeffVector::unit(idx);
        while let Some((p, c)) = v.leading().map(|(p, c)| (p, c.clone())) {
            match echelon.get(&p) {
                Some((ev, ec)) => {
                    let k = -c;
                    v.axpy(&k, ev);
                    combo.axpy(&k, ec);
                }
                None => break,
            }
        }
        match v.leading().map(|(p, c)| (p, c.clone())) {
            None => out.push(combo),
            Some((p, c)) => {
                let inv = c.recip();
                v.scale(&inv);
                combo.scale(&inv);
                echelon.insert(p, (v, combo));
            }
        }
    }
    out
}
