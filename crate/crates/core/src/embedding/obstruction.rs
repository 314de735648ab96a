use num_traits::ToPrimitive;
use serde::Serialize;

use crate::chevalley::{LieElement, Slot, StructureTable};
use crate::error::Result;
use crate::rep_theory::{tensor_decompose, weyl_dim};
use crate::root_system::Weight;

use super::{
    check_abelian, escape_witness, generate_submodule, span_union, BracketWitness, Embedding,
};

#[derive(Debug, Clone, Serialize)]
pub struct SquareSummary {
    /// Highest weight of the 64-dimensional factor.
    pub factor: Vec<i64>,
    /// `(highest weight, multiplicity, dimension)` per summand.
    pub summands: Vec<(Vec<i64>, u64, u64)>,
    pub total_dim: u64,
    pub contains_factor: bool,
    pub contains_adjoint: bool,
    pub has_dim_64_or_91: bool,
}

#[derive(Debug, Clone)]
pub struct ObstructionReport {
    pub squares: Vec<SquareSummary>,
    /// Non-abelian witnesses for the two 64-dimensional submodules of E8,
    /// generated by `X_112` and `Y_1`.
    pub nonabelian: Vec<(String, Option<BracketWitness>)>,
    /// External input used, not recomputed here.
    pub cited_abelian_bound: u32,
}

impl ObstructionReport {
    pub fn passed(&self) -> bool {
        self.squares.iter().all(|s| {
            !s.contains_factor && !s.contains_adjoint && !s.has_dim_64_or_91 && s.total_dim == 4096
        }) && self.nonabelian.iter().all(|(_, w)| w.is_some())
    }
}

/// Recomputes `V(λ_6)^{⊗2}` and `V(λ_7)^{⊗2}` for D7, checks that neither
/// contains its own factor, the adjoint, or any summand of dimension 64 or 91,
/// and exhibits non-vanishing brackets inside both 64-dimensional submodules
/// of E8.
pub fn gravigut_obstruction_report(emb: &Embedding) -> Result<ObstructionReport> {
    let rs = emb.source();
    let rank = rs.rank();
    let adjoint = Weight::fundamental(rank, 2);
    let mut squares = Vec::new();
    for node in [rank - 1, rank] {
        let factor = Weight::fundamental(rank, node);
        let dec = tensor_decompose(rs, &factor, &factor)?;
        let summands = dec
            .sorted(rs)?
            .into_iter()
            .map(|(hw, m, d)| (hw.coords, m, d.to_u64().unwrap_or(u64::MAX)))
            .collect::<Vec<_>>();
        let total_dim = dec.total_dim(rs)?.to_u64().unwrap_or(u64::MAX);
        squares.push(SquareSummary {
            factor: factor.coords.clone(),
            contains_factor: dec.multiplicity(&factor) > 0,
            contains_adjoint: dec.multiplicity(&adjoint) > 0,
            has_dim_64_or_91: summands.iter().any(|(_, _, d)| *d == 64 || *d == 91),
            summands,
            total_dim,
        });
    }
    debug_assert_eq!(weyl_dim(rs, &adjoint)?.to_u64(), Some(91));

    let ct = emb.target().cartan_type();
    let mut nonabelian = Vec::new();
    for (name, g) in [
        ("X_112", LieElement::x(ct, 112)),
        ("Y_1", LieElement::y(ct, 1)),
    ] {
        let m = generate_submodule(emb, &g)?;
        nonabelian.push((name.to_string(), check_abelian(emb.target(), &m.basis)?));
    }
    Ok(ObstructionReport {
        squares,
        nonabelian,
        cited_abelian_bound: 36,
    })
}

#[derive(Debug, Clone)]
pub struct LisiReport {
    /// Pair inside the `[X_112]` module whose bracket leaves
    /// `φ(D7) + [X_112]`.
    pub witness: Option<BracketWitness>,
    /// First root coordinate of the bracket's support, when it is a root vector.
    pub witness_grade: Option<i64>,
    /// Escape witness for `[X_112] + [X_120]` against `φ(D7) + [X_112] + [X_120]`.
    pub extension_witness: Option<BracketWitness>,
    /// Escape witness for `[X_120]` against `φ(D7) + [X_120]`.
    pub vector_witness: Option<BracketWitness>,
}

impl LisiReport {
    pub fn passed(&self) -> bool {
        self.witness.is_some()
            && self.witness_grade == Some(2)
            && self.extension_witness.is_none()
            && self.vector_witness.is_none()
    }
}

/// The image of D7 plus the 64-dimensional module alone is not closed; adding
/// the 14-dimensional module `[X_120]` closes it.
pub fn lisi_span_not_closed(emb: &Embedding) -> Result<LisiReport> {
    let t: &StructureTable = emb.target();
    let ct = t.cartan_type();
    let image = generate_submodule(emb, &LieElement::x(ct, 74))?.basis;
    let spinor = generate_submodule(emb, &LieElement::x(ct, 112))?.basis;
    let vector = generate_submodule(emb, &LieElement::x(ct, 120))?.basis;

    let witness = escape_witness(t, &spinor, &span_union(&image, &spinor))?;
    let witness_grade = witness
        .as_ref()
        .and_then(|w| match w.bracket.as_single_term() {
            Some((Slot::X(k), _)) => Some(t.root_system().root(k).coeffs[0]),
            Some((Slot::Y(k), _)) => Some(-t.root_system().root(k).coeffs[0]),
            _ => None,
        });

    let extension = span_union(&spinor, &vector);
    let extension_witness = escape_witness(t, &extension, &span_union(&image, &extension))?;
    let vector_witness = escape_witness(t, &vector, &span_union(&image, &vector))?;
    Ok(LisiReport {
        witness,
        witness_grade,
        extension_witness,
        vector_witness,
    })
}
