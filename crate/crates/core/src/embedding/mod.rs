//! Embeddings of one Chevalley algebra into another, given by images of the
//! source generators, and the submodule structure of the target under the
//! adjoint action of the image.

mod lift;
mod obstruction;
mod subalgebra;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

pub use lift::{
    lifts_equivalent, long_bracket_identity, verify_lift_witness, GraviGutLift, LongBracket,
    TorusAutomorphism, LONG_BRACKET_SEQUENCE,
};
pub use obstruction::{
    gravigut_obstruction_report, lisi_span_not_closed, LisiReport, ObstructionReport, SquareSummary,
};
pub use subalgebra::{
    check_abelian, check_closure, check_nilpotent, escape_witness, BracketWitness, Nilpotency,
};

use crate::chevalley::{rat, verify_serre, LieElement, SerreReport, Slot, StructureTable};
use crate::error::{LieError, Result};
use crate::linalg::{kernel, CoeffVector, SpanBasis};
use crate::root_system::{CartanType, RootSystem, Weight};

pub type GeneratorImages = Vec<(LieElement, LieElement, LieElement)>;

#[derive(Debug, Clone)]
pub struct Embedding {
    source: RootSystem,
    target: Arc<StructureTable>,
    images: GeneratorImages,
}

impl Embedding {
    pub fn new(
        source: RootSystem,
        target: Arc<StructureTable>,
        images: GeneratorImages,
    ) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(LieError::Invalid(format!(
                "{} generator images for a rank-{} source",
                images.len(),
                source.rank()
            )));
        }
        let tt = target.cartan_type();
        for (h, x, y) in &images {
            for e in [h, x, y] {
                if e.cartan_type() != tt {
                    return Err(LieError::RootSystemMismatch {
                        left: tt.to_string(),
                        right: e.cartan_type().to_string(),
                    });
                }
            }
        }
        Ok(Self {
            source,
            target,
            images,
        })
    }

    /// The identity embedding of an algebra into itself.
    pub fn identity(table: Arc<StructureTable>) -> Self {
        let images = table.generators();
        Self {
            source: table.root_system().clone(),
            target: table,
            images,
        }
    }

    pub fn source(&self) -> &RootSystem {
        &self.source
    }

    pub fn target(&self) -> &StructureTable {
        &self.target
    }

    pub fn target_arc(&self) -> Arc<StructureTable> {
        Arc::clone(&self.target)
    }

    pub fn images(&self) -> &GeneratorImages {
        &self.images
    }

    pub fn with_images(&self, images: GeneratorImages) -> Result<Self> {
        Self::new(self.source.clone(), Arc::clone(&self.target), images)
    }

    fn ad_generators(&self) -> impl Iterator<Item = &LieElement> {
        self.images.iter().flat_map(|(h, x, y)| [x, y, h])
    }

    pub fn to_vector(&self, e: &LieElement) -> CoeffVector {
        to_vector(&self.target, e)
    }

    pub fn to_element(&self, v: &CoeffVector) -> LieElement {
        to_element(&self.target, v)
    }
}

pub(crate) fn to_vector(t: &StructureTable, e: &LieElement) -> CoeffVector {
    let rs = t.root_system();
    CoeffVector::from_element(e, rs.rank(), rs.num_positive())
}

pub(crate) fn to_element(t: &StructureTable, v: &CoeffVector) -> LieElement {
    v.to_element(t.cartan_type(), t.root_system().num_positive())
}

/// Basis vectors of a span as Lie algebra elements.
pub fn span_elements(t: &StructureTable, s: &SpanBasis) -> Vec<LieElement> {
    s.vectors().map(|v| to_element(t, v)).collect()
}

/// Span of root vectors (or other basis slots).
pub fn span_of_slots(t: &StructureTable, slots: &[Slot]) -> SpanBasis {
    let ct = t.cartan_type();
    let mut s = SpanBasis::new();
    for &slot in slots {
        s.insert(to_vector(t, &LieElement::basis(ct, slot)));
    }
    s
}

pub fn span_union(a: &SpanBasis, b: &SpanBasis) -> SpanBasis {
    let mut s = a.clone();
    s.extend(b.vectors().cloned());
    s
}

/// The embedding `D7 → E8` sending source generator `j` to target generator
/// `9 − j`, for `H`, `X` and `Y` alike.
pub fn phi_so14_e8(d7: &RootSystem, e8: Arc<StructureTable>) -> Result<Embedding> {
    if d7.cartan_type() != CartanType::d7() || e8.cartan_type() != CartanType::e8() {
        return Err(LieError::Invalid(format!(
            "expected D7 into E8, got {} into {}",
            d7.cartan_type(),
            e8.cartan_type()
        )));
    }
    let ct = e8.cartan_type();
    let images = (1..=7)
        .map(|j| {
            let k = 9 - j;
            (
                LieElement::h(ct, k),
                LieElement::x(ct, k),
                LieElement::y(ct, k),
            )
        })
        .collect();
    Embedding::new(d7.clone(), e8, images)
}

#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingReport {
    pub serre: SerreReport,
    /// The `3·rank` generator images are linearly independent.
    pub independent: bool,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.serre.passed() && self.independent
    }
}

/// Checks that the generator images satisfy the source's Chevalley–Serre
/// relations and are linearly independent.
pub fn verify_embedding(emb: &Embedding) -> Result<EmbeddingReport> {
    let serre = verify_serre(emb.target(), emb.source().cartan_matrix(), emb.images())?;
    let mut span = SpanBasis::new();
    let mut independent = true;
    for (h, x, y) in emb.images() {
        for e in [h, x, y] {
            independent &= span.insert(emb.to_vector(e));
        }
    }
    Ok(EmbeddingReport { serre, independent })
}

#[derive(Debug, Clone)]
pub struct HighestWeightVector {
    pub vector: LieElement,
    pub weight: Weight,
}

#[derive(Debug, Clone)]
pub struct Submodule {
    pub generator: LieElement,
    pub basis: SpanBasis,
    pub highest_weight_vectors: Vec<HighestWeightVector>,
}

impl Submodule {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// The highest weight, when the module has exactly one highest-weight line.
    pub fn highest_weight(&self) -> Option<&Weight> {
        match self.highest_weight_vectors.as_slice() {
            [only] => Some(&only.weight),
            _ => None,
        }
    }

    /// Basis slots (sorted) when the module is spanned by basis vectors.
    pub fn slots(&self, t: &StructureTable) -> Option<Vec<Slot>> {
        span_elements(t, &self.basis)
            .iter()
            .map(|e| e.as_single_term().map(|(s, _)| s))
            .collect()
    }
}

/// Smallest subspace containing `w` and closed under `ad` of every generator
/// image.
pub fn generate_submodule(emb: &Embedding, w: &LieElement) -> Result<Submodule> {
    if w.is_zero() {
        return Err(LieError::ZeroGenerator);
    }
    let t = emb.target();
    let mut basis = SpanBasis::new();
    basis.insert(emb.to_vector(w));
    let mut queue = vec![w.clone()];
    while let Some(e) = queue.pop() {
        for g in emb.ad_generators() {
            let b = t.bracket(g, &e)?;
            if !b.is_zero() && basis.insert(emb.to_vector(&b)) {
                queue.push(b);
            }
        }
    }
    let highest_weight_vectors = highest_weight_vectors(emb, &basis)?;
    Ok(Submodule {
        generator: w.clone(),
        basis,
        highest_weight_vectors,
    })
}

/// Weight of a basis slot under the embedded Cartan generators, if the slot
/// is a simultaneous eigenvector with integer eigenvalues.
pub fn slot_weight(emb: &Embedding, slot: Slot) -> Result<Option<Weight>> {
    let t = emb.target();
    let v = LieElement::basis(t.cartan_type(), slot);
    let mut coords = Vec::with_capacity(emb.images.len());
    for (h, _, _) in emb.images() {
        let b = t.bracket(h, &v)?;
        match b.multiple_of(&v) {
            Some(c) if c.is_integer() => coords.push(c.to_integer().to_i64().unwrap_or(i64::MAX)),
            _ => return Ok(None),
        }
    }
    Ok(Some(Weight::new(coords)))
}

/// Weight of an element that is a weight vector, by reading the eigenvalue of
/// each embedded `h_i`.
pub fn element_weight(emb: &Embedding, e: &LieElement) -> Result<Option<Weight>> {
    if e.is_zero() {
        return Ok(None);
    }
    let t = emb.target();
    let mut coords = Vec::new();
    for (h, _, _) in emb.images() {
        let b = t.bracket(h, e)?;
        match b.multiple_of(e) {
            Some(c) if c.is_integer() => coords.push(c.to_integer().to_i64().unwrap_or(i64::MAX)),
            _ => return Ok(None),
        }
    }
    Ok(Some(Weight::new(coords)))
}

/// Vectors of the span killed by every `ad x_i`, split into weight
/// components under the embedded Cartan.
fn highest_weight_vectors(emb: &Embedding, basis: &SpanBasis) -> Result<Vec<HighestWeightVector>> {
    let t = emb.target();
    let dim = t.dim();
    let elems = span_elements(t, basis);
    let rows = elems
        .par_iter()
        .map(|b| {
            let mut row = CoeffVector::new();
            for (i, (_, x, _)) in emb.images().iter().enumerate() {
                let img = emb.to_vector(&t.bracket(x, b)?);
                let shifted =
                    CoeffVector::from_entries(img.iter().map(|(p, c)| (p + i * dim, c.clone())));
                row.axpy(&rat(1), &shifted);
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut by_weight: BTreeMap<Weight, SpanBasis> = BTreeMap::new();
    let mut weight_cache: BTreeMap<Slot, Weight> = BTreeMap::new();
    for combo in kernel(&rows) {
        let mut v = CoeffVector::new();
        for (r, c) in combo.iter() {
            v.axpy(c, &emb.to_vector(&elems[r]));
        }
        let e = emb.to_element(&v);
        let mut parts: BTreeMap<Weight, LieElement> = BTreeMap::new();
        for (slot, c) in e.terms() {
            let w = match weight_cache.get(&slot) {
                Some(w) => w.clone(),
                None => {
                    let w = slot_weight(emb, slot)?.ok_or_else(|| {
                        LieError::Invalid(format!("{slot} is not a weight vector of the image"))
                    })?;
                    weight_cache.insert(slot, w.clone());
                    w
                }
            };
            parts
                .entry(w)
                .or_insert_with(|| LieElement::zero(t.cartan_type()))
                .add_term(slot, c.clone());
        }
        for (w, part) in parts {
            by_weight.entry(w).or_default().insert(emb.to_vector(&part));
        }
    }

    let mut out = Vec::new();
    for (weight, span) in by_weight {
        for v in span.vectors() {
            out.push(HighestWeightVector {
                vector: normalise(emb.to_element(v)),
                weight: weight.clone(),
            });
        }
    }
    Ok(out)
}

/// Scales so the first coefficient is 1.
fn normalise(e: LieElement) -> LieElement {
    let lead = e.terms().next().map(|(_, c)| c.clone());
    match lead {
        Some(c) if !c.is_zero() && !c.is_one() => e.scale(&c.recip()),
        _ => e,
    }
}

#[derive(Debug, Clone)]
pub struct AdjointSummand {
    pub name: String,
    pub module: Submodule,
}

impl AdjointSummand {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

#[derive(Debug, Clone)]
pub struct AdjointDecomposition {
    pub summands: Vec<AdjointSummand>,
    /// Dimension of the sum of all summand spans.
    pub total_dim: usize,
}

impl AdjointDecomposition {
    /// Spans are independent when their dimensions add up.
    pub fn independent(&self) -> bool {
        self.total_dim == self.summands.iter().map(AdjointSummand::dim).sum::<usize>()
    }
}

/// The Cartan element `4H_1 + 5H_2 + 7H_3 + 10H_4 + 8H_5 + 6H_6 + 4H_7 + 2H_8`
/// of E8, which commutes with the image of D7.
pub fn centraliser_element(e8: CartanType) -> LieElement {
    let coeffs = [4, 5, 7, 10, 8, 6, 4, 2];
    let mut h = LieElement::zero(e8);
    for (i, c) in coeffs.iter().enumerate() {
        h.add_term(Slot::H(i + 1), rat(*c));
    }
    h
}

/// Generators of the six summands of E8 under `φ(D7)`, in order.
pub fn adjoint_generators(e8: CartanType) -> Vec<(String, LieElement)> {
    vec![
        ("X_74".into(), LieElement::x(e8, 74)),
        ("X_120".into(), LieElement::x(e8, 120)),
        ("Y_1".into(), LieElement::y(e8, 1)),
        ("X_112".into(), LieElement::x(e8, 112)),
        ("Y_97".into(), LieElement::y(e8, 97)),
        ("H".into(), centraliser_element(e8)),
    ]
}

/// Generates each named submodule (concurrently) and measures the dimension
/// of their sum.
pub fn decompose(
    emb: &Embedding,
    generators: &[(String, LieElement)],
) -> Result<AdjointDecomposition> {
    let summands = generators
        .par_iter()
        .map(|(name, g)| {
            Ok(AdjointSummand {
                name: name.clone(),
                module: generate_submodule(emb, g)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut all = SpanBasis::new();
    for s in &summands {
        all.extend(s.module.basis.vectors().cloned());
    }
    Ok(AdjointDecomposition {
        summands,
        total_dim: all.dim(),
    })
}

pub fn decompose_adjoint(emb: &Embedding) -> Result<AdjointDecomposition> {
    decompose(emb, &adjoint_generators(emb.target().cartan_type()))
}
