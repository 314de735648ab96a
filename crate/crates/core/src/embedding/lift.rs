use num_traits::{One, Zero};
use serde::Serialize;

use crate::chevalley::{LieElement, Rational, Slot, StructureTable};
use crate::error::{LieError, Result};

/// Graded scaling of E8 by the first simple-root coordinate:
/// `X_γ ↦ s^{γ¹} X_γ`, `Y_γ ↦ s^{−γ¹} Y_γ`, Cartan fixed. On generators this
/// is `X_1 ↦ s X_1`, `Y_1 ↦ s⁻¹ Y_1`, all others fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusAutomorphism {
    scale: Rational,
}

impl TorusAutomorphism {
    pub fn new(scale: Rational) -> Result<Self> {
        if scale.is_zero() {
            return Err(LieError::Invalid("torus scale must be nonzero".into()));
        }
        Ok(Self { scale })
    }

    pub fn identity() -> Self {
        Self {
            scale: Rational::one(),
        }
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    fn power(&self, exp: i64) -> Rational {
        let base = if exp < 0 {
            self.scale.recip()
        } else {
            self.scale.clone()
        };
        (0..exp.unsigned_abs()).fold(Rational::one(), |acc, _| acc * &base)
    }

    pub fn apply(&self, t: &StructureTable, x: &LieElement) -> LieElement {
        let rs = t.root_system();
        let mut out = LieElement::zero(x.cartan_type());
        for (slot, c) in x.terms() {
            let factor = match slot {
                Slot::H(_) => Rational::one(),
                Slot::X(k) => self.power(rs.root(k).coeffs[0]),
                Slot::Y(k) => self.power(-rs.root(k).coeffs[0]),
            };
            out.add_term(slot, c * factor);
        }
        out
    }
}

/// Lift of the D7 embedding to the 78-dimensional extension: the highest
/// weight vectors of the spinor and vector summands map to `αX_112` and
/// `βX_120`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraviGutLift {
    pub alpha: Rational,
    pub beta: Rational,
}

impl GraviGutLift {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(LieError::Invalid("lift parameters must be nonzero".into()));
        }
        Ok(Self { alpha, beta })
    }

    /// Images `(αX_112, βX_120)` of the two highest weight vectors.
    pub fn images(&self, t: &StructureTable) -> (LieElement, LieElement) {
        let ct = t.cartan_type();
        (
            LieElement::x(ct, 112).scale(&self.alpha),
            LieElement::x(ct, 120).scale(&self.beta),
        )
    }
}

/// `(α, β) ~ (α', β')` iff `α'²β = α²β'`. When equivalent, the torus scaling
/// by `α'/α` carries one lift to the other.
pub fn lifts_equivalent(a: &GraviGutLift, b: &GraviGutLift) -> (bool, Option<TorusAutomorphism>) {
    let lhs = &b.alpha * &b.alpha * &a.beta;
    let rhs = &a.alpha * &a.alpha * &b.beta;
    if lhs == rhs {
        (
            true,
            Some(TorusAutomorphism {
                scale: &b.alpha / &a.alpha,
            }),
        )
    } else {
        (false, None)
    }
}

/// Checks that `auto` maps the images of lift `a` onto those of lift `b`
/// while fixing the generators `H_i, X_i, Y_i` for `i ≥ 2` (the image of D7).
pub fn verify_lift_witness(
    t: &StructureTable,
    a: &GraviGutLift,
    b: &GraviGutLift,
    auto: &TorusAutomorphism,
) -> bool {
    let (ua, va) = a.images(t);
    let (ub, vb) = b.images(t);
    if auto.apply(t, &ua) != ub || auto.apply(t, &va) != vb {
        return false;
    }
    let ct = t.cartan_type();
    (2..=t.rank()).all(|i| {
        [
            LieElement::h(ct, i),
            LieElement::x(ct, i),
            LieElement::y(ct, i),
        ]
        .iter()
        .all(|g| auto.apply(t, g) == *g)
    })
}

/// Simple indices `k` of the chain `[…[[X_112, Y_{k1}], Y_{k2}], …]` that
/// descends from root 112 to the first simple root.
pub const LONG_BRACKET_SEQUENCE: [usize; 21] = [
    2, 4, 3, 5, 6, 7, 8, 4, 5, 2, 6, 4, 5, 3, 4, 7, 6, 5, 2, 4, 3,
];

#[derive(Debug, Clone, Serialize)]
pub struct LongBracket {
    /// The final element, `c·X_1`.
    pub result: String,
    pub scalar: Option<String>,
    /// Root coefficients after each step (starting with root 112).
    pub path: Vec<Vec<i64>>,
}

/// Evaluates the 21-step chain from `X_112`; returns the result and `c` with
/// result `= c·X_1` when it has that shape.
pub fn long_bracket_identity(
    t: &StructureTable,
) -> Result<(LieElement, Option<Rational>, LongBracket)> {
    let ct = t.cartan_type();
    let rs = t.root_system();
    let mut cur = LieElement::x(ct, 112);
    let mut path = vec![rs.root(112).coeffs.clone()];
    for &k in &LONG_BRACKET_SEQUENCE {
        cur = t.bracket(&cur, &LieElement::y(ct, k))?;
        match cur.as_single_term() {
            Some((Slot::X(r), _)) => path.push(rs.root(r).coeffs.clone()),
            _ => path.push(Vec::new()),
        }
    }
    let scalar = cur
        .multiple_of(&LieElement::x(ct, 1))
        .filter(|c| !c.is_zero());
    let summary = LongBracket {
        result: cur.to_string(),
        scalar: scalar.as_ref().map(|c| c.to_string()),
        path,
    };
    Ok((cur, scalar, summary))
}
