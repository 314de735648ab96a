//! Finite-dimensional irreducible representations: Weyl dimension formula,
//! Freudenthal weight multiplicities and tensor product decomposition.
//!
//! Two independent routes decompose `V(λ) ⊗ V(μ)`:
//! [`tensor_decompose`] uses signed reflections of `λ + ν + ρ` (Klimyk's
//! rule), [`tensor_oracle`] convolves both characters and peels off irreducible
//! characters from the top.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{LieError, Result};
use crate::root_system::{RootSystem, Weight};

/// Weight multiplicities of an irreducible module.
pub type Character = BTreeMap<Weight, u64>;

/// Irreducible summands of a tensor product, keyed by highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    pub summands: BTreeMap<Weight, u64>,
}

impl Decomposition {
    pub fn multiplicity(&self, hw: &Weight) -> u64 {
        self.summands.get(hw).copied().unwrap_or(0)
    }

    pub fn total_dim(&self, rs: &RootSystem) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for (hw, m) in &self.summands {
            total += weyl_dim(rs, hw)? * BigUint::from(*m);
        }
        Ok(total)
    }

    /// `(highest weight, multiplicity, dimension)` sorted by dimension
    /// descending, then coordinates.
    pub fn sorted(&self, rs: &RootSystem) -> Result<Vec<(Weight, u64, BigUint)>> {
        let mut rows = self
            .summands
            .iter()
            .map(|(hw, m)| Ok((hw.clone(), *m, weyl_dim(rs, hw)?)))
            .collect::<Result<Vec<_>>>()?;
        rows.sort_by(|a, b| b.2.cmp(&a.2).then_with(|| a.0.cmp(&b.0)));
        Ok(rows)
    }

    /// One `SUMMAND <coords> mult=<m> dim=<d>` line per summand.
    pub fn render(&self, rs: &RootSystem) -> Result<String> {
        let mut out = String::new();
        for (hw, m, d) in self.sorted(rs)? {
            let coords: Vec<String> = hw.coords.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "SUMMAND {} mult={m} dim={d}", coords.join(","));
        }
        Ok(out)
    }
}

fn check_dominant(rs: &RootSystem, w: &Weight) -> Result<()> {
    if w.coords.len() != rs.rank() || !w.is_dominant() {
        return Err(LieError::NotDominant(w.coords.clone()));
    }
    Ok(())
}

/// Weyl dimension formula: `Π_{α>0} ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩`.
pub fn weyl_dim(rs: &RootSystem, hw: &Weight) -> Result<BigUint> {
    check_dominant(rs, hw)?;
    let shifted = hw.add(&rs.rho());
    let rho = rs.rho();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=rs.num_positive() {
        // both pairings are positive for dominant λ
        num *= BigUint::from(rs.coroot_pairing(&shifted, i) as u64);
        den *= BigUint::from(rs.coroot_pairing(&rho, i) as u64);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Integer-scaled invariant form: `form(a, b) / scale = (a, b)`.
struct ScaledForm {
    gram: Vec<Vec<i64>>,
}

impl ScaledForm {
    fn new(rs: &RootSystem) -> (Self, i64) {
        let inv = rs.inverse_cartan();
        let scale = inv.iter().flatten().fold(1i64, |acc, r| acc.lcm(r.denom()));
        let gram = inv
            .iter()
            .map(|row| row.iter().map(|r| (r * scale).to_integer()).collect())
            .collect();
        (Self { gram }, scale)
    }

    fn eval(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, ai) in a.iter().enumerate() {
            if *ai == 0 {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                s += ai * self.gram[i][j] * bj;
            }
        }
        s
    }
}

/// Weight multiplicities of `V(λ)` by Freudenthal's recursion, layer by layer
/// downward from `λ`:
///
/// `((λ+ρ,λ+ρ) − (μ+ρ,μ+ρ)) m(μ) = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα) (μ+kα, α)`.
pub fn freudenthal_character(rs: &RootSystem, hw: &Weight) -> Result<Character> {
    check_dominant(rs, hw)?;
    let (form, _) = ScaledForm::new(rs);
    let rho = rs.rho();
    let top = hw.add(&rho);
    let top_norm = form.eval(&top.coords, &top.coords);
    let roots: Vec<(Weight, i64)> = (1..=rs.num_positive())
        .map(|i| (rs.root_weight(i).clone(), rs.height(i)))
        .collect();
    let simple: Vec<Weight> = (1..=rs.rank()).map(|i| rs.simple_root_weight(i)).collect();

    let mut mult: HashMap<Weight, u64> = HashMap::new();
    mult.insert(hw.clone(), 1);
    let mut layer = vec![hw.clone()];
    let mut depth = 0i64;

    while !layer.is_empty() {
        depth += 1;
        let mut candidates: Vec<Weight> = layer
            .iter()
            .flat_map(|mu| simple.iter().map(move |a| mu.sub(a)))
            .collect();
        candidates.sort();
        candidates.dedup();

        let mut next = Vec::new();
        for nu in candidates {
            let shifted = nu.add(&rho);
            let denom = top_norm - form.eval(&shifted.coords, &shifted.coords);
            let mut numer = 0i64;
            for (alpha, ht) in &roots {
                let mut k = 1;
                let mut up = nu.add(alpha);
                while k * ht <= depth {
                    if let Some(&m) = mult.get(&up) {
                        numer += 2 * (m as i64) * form.eval(&up.coords, &alpha.coords);
                    }
                    k += 1;
                    up = up.add(alpha);
                }
            }
            if denom == 0 {
                if numer != 0 {
                    return Err(LieError::CharacterInconsistency(format!(
                        "zero denominator at weight {nu}"
                    )));
                }
                continue;
            }
            if numer % denom != 0 || numer / denom < 0 {
                return Err(LieError::CharacterInconsistency(format!(
                    "non-integral multiplicity {numer}/{denom} at weight {nu}"
                )));
            }
            let m = (numer / denom) as u64;
            if m > 0 {
                mult.insert(nu.clone(), m);
                next.push(nu);
            }
        }
        layer = next;
    }
    Ok(mult.into_iter().collect())
}

/// Klimyk's rule: for each weight `ν` of `V(μ)`, move `λ + ν + ρ` to the
/// dominant chamber, drop it if it lies on a wall, otherwise add
/// `det(w)·m(ν)` to the multiplicity of `w(λ+ν+ρ) − ρ`.
pub fn tensor_decompose(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<Decomposition> {
    check_dominant(rs, lambda)?;
    let ch = freudenthal_character(rs, mu)?;
    let base = lambda.add(&rs.rho());
    let rho = rs.rho();
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in &ch {
        let dc = rs.dominant_conjugate(&base.add(nu));
        if dc.on_wall {
            continue;
        }
        *acc.entry(dc.weight.sub(&rho)).or_insert(0) += dc.parity * (*m as i64);
    }
    let mut summands = BTreeMap::new();
    for (hw, m) in acc {
        match m.cmp(&0) {
            std::cmp::Ordering::Greater => {
                summands.insert(hw, m as u64);
            }
            std::cmp::Ordering::Less => {
                return Err(LieError::CharacterInconsistency(format!(
                    "negative multiplicity {m} for {hw}"
                )))
            }
            std::cmp::Ordering::Equal => {}
        }
    }
    Ok(Decomposition { summands })
}

/// Largest product of dimensions the convolution oracle accepts.
pub const ORACLE_LIMIT: u64 = 1_000_000;

/// Independent decomposition: convolve the characters of both factors, then
/// repeatedly remove the irreducible character of the highest remaining
/// weight.
pub fn tensor_oracle(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<Decomposition> {
    let dl = weyl_dim(rs, lambda)?;
    let dm = weyl_dim(rs, mu)?;
    if (dl * dm).to_u64().is_none_or(|p| p > ORACLE_LIMIT) {
        return Err(LieError::Invalid(
            "tensor product too large for the convolution oracle".into(),
        ));
    }
    let a = freudenthal_character(rs, lambda)?;
    let b = freudenthal_character(rs, mu)?;

    let mut remaining: BTreeMap<Weight, i64> = BTreeMap::new();
    for (wa, ma) in &a {
        for (wb, mb) in &b {
            *remaining.entry(wa.add(wb)).or_insert(0) += (ma * mb) as i64;
        }
    }

    let (form, _) = ScaledForm::new(rs);
    let rho = rs.rho();
    let mut summands = BTreeMap::new();
    loop {
        remaining.retain(|_, m| *m != 0);
        let Some((top, &count)) = remaining.iter().max_by(|x, y| {
            form.eval(&x.0.coords, &rho.coords)
                .cmp(&form.eval(&y.0.coords, &rho.coords))
                .then_with(|| x.0.cmp(y.0))
        }) else {
            break;
        };
        let top = top.clone();
        if count < 0 || !top.is_dominant() {
            return Err(LieError::CharacterInconsistency(format!(
                "highest remaining weight {top} has multiplicity {count}"
            )));
        }
        for (w, m) in freudenthal_character(rs, &top)? {
            let e = remaining.entry(w.clone()).or_insert(0);
            *e -= count * m as i64;
            if *e < 0 {
                return Err(LieError::CharacterInconsistency(format!(
                    "negative multiplicity at {w} after removing V({top})"
                )));
            }
        }
        summands.insert(top, count as u64);
    }
    Ok(Decomposition { summands })
}
