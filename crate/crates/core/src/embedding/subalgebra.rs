use rayon::prelude::*;
use serde::Serialize;

use crate::chevalley::{LieElement, StructureTable};
use crate::error::{LieError, Result};
use crate::linalg::SpanBasis;

use super::{span_elements, to_vector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketWitness {
    pub left: LieElement,
    pub right: LieElement,
    pub bracket: LieElement,
}

impl std::fmt::Display for BracketWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}] = {}", self.left, self.right, self.bracket)
    }
}

/// First basis pair `(u, v)` of `from` (in basis order) whose bracket fails
/// `accept`.
fn find_pair<F>(t: &StructureTable, from: &SpanBasis, accept: F) -> Result<Option<BracketWitness>>
where
    F: Fn(&LieElement) -> bool + Sync,
{
    let elems = span_elements(t, from);
    let found = (0..elems.len())
        .into_par_iter()
        .map(|i| -> Result<Option<BracketWitness>> {
            for j in i..elems.len() {
                let b = t.bracket(&elems[i], &elems[j])?;
                if !accept(&b) {
                    return Ok(Some(BracketWitness {
                        left: elems[i].clone(),
                        right: elems[j].clone(),
                        bracket: b,
                    }));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(found.into_iter().flatten().next())
}

/// A basis pair of `from` whose bracket leaves `target`, if any.
pub fn escape_witness(
    t: &StructureTable,
    from: &SpanBasis,
    target: &SpanBasis,
) -> Result<Option<BracketWitness>> {
    find_pair(t, from, |b| target.contains(&to_vector(t, b)))
}

/// `None` when the span is closed under the bracket; otherwise a violating
/// basis pair.
pub fn check_closure(t: &StructureTable, s: &SpanBasis) -> Result<Option<BracketWitness>> {
    escape_witness(t, s, s)
}

/// `None` when all brackets within the span vanish; otherwise a pair with a
/// nonzero bracket.
pub fn check_abelian(t: &StructureTable, s: &SpanBasis) -> Result<Option<BracketWitness>> {
    find_pair(t, s, LieElement::is_zero)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Nilpotency {
    pub nilpotent: bool,
    /// Length of the lower central series before it reaches zero.
    pub class: Option<usize>,
    /// Dimensions of `C_1 = s, C_{k+1} = [s, C_k]`, down to zero or the
    /// stable term.
    pub series_dims: Vec<usize>,
}

/// Lower central series of a closed span.
pub fn check_nilpotent(t: &StructureTable, s: &SpanBasis) -> Result<Nilpotency> {
    if check_closure(t, s)?.is_some() {
        return Err(LieError::NotClosed);
    }
    let elems = span_elements(t, s);
    let mut current = s.clone();
    let mut dims = vec![current.dim()];
    loop {
        if current.dim() == 0 {
            return Ok(Nilpotency {
                nilpotent: true,
                class: Some(dims.len() - 1),
                series_dims: dims,
            });
        }
        let cur = span_elements(t, &current);
        let brackets = elems
            .par_iter()
            .map(|a| {
                cur.iter()
                    .map(|b| t.bracket(a, b))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut next = SpanBasis::new();
        for b in brackets.into_iter().flatten() {
            if !b.is_zero() {
                next.insert(to_vector(t, &b));
            }
        }
        dims.push(next.dim());
        if next.dim() == current.dim() {
            return Ok(Nilpotency {
                nilpotent: false,
                class: None,
                series_dims: dims,
            });
        }
        current = next;
    }
}
