//! Chevalley bases: integer structure constants, brackets of arbitrary
//! rational elements, left-nested brackets of simple root vectors, and
//! audits of the Serre relations and the Jacobi identity.

mod element;
mod table;

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use element::{rat, ratio, LieElement, Rational, Slot};
pub use table::{extraspecial_pair, BasisBracket, StructureTable};

use crate::error::{LieError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootKind {
    X,
    Y,
}

impl StructureTable {
    fn check_element(&self, e: &LieElement) -> Result<()> {
        if e.cartan_type() != self.cartan_type() {
            return Err(LieError::RootSystemMismatch {
                left: self.cartan_type().to_string(),
                right: e.cartan_type().to_string(),
            });
        }
        Ok(())
    }

    /// Exact bracket `[x, y]`.
    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut acc: BTreeMap<Slot, Rational> = BTreeMap::new();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let prod = ca * cb;
                self.bracket_slots(a, b)
                    .for_each(self.root_system(), |s, k| {
                        let v = acc.entry(s).or_insert_with(|| rat(0));
                        *v += &prod * rat(k);
                    });
            }
        }
        LieElement::from_terms(self.root_system(), acc)
    }

    /// `(ad x)^power (y)`.
    pub fn ad_power(&self, x: &LieElement, y: &LieElement, power: usize) -> Result<LieElement> {
        let mut cur = y.clone();
        for _ in 0..power {
            if cur.is_zero() {
                break;
            }
            cur = self.bracket(x, &cur)?;
        }
        Ok(cur)
    }

    /// `[[…[[E_{a1}, E_{a2}], E_{a3}], …], E_{am}]` with `E = X` or `Y` and
    /// simple indices `a_k`.
    pub fn nested_bracket(&self, kind: RootKind, indices: &[usize]) -> Result<LieElement> {
        let rank = self.rank();
        let (&first, rest) = indices.split_first().ok_or(LieError::EmptySequence)?;
        let gen = |i: usize| -> Result<LieElement> {
            if i == 0 || i > rank {
                return Err(LieError::IndexOutOfRange {
                    index: i,
                    max: rank,
                });
            }
            Ok(match kind {
                RootKind::X => LieElement::x(self.cartan_type(), i),
                RootKind::Y => LieElement::y(self.cartan_type(), i),
            })
        };
        let mut acc = gen(first)?;
        for &i in rest {
            let g = gen(i)?;
            acc = self.bracket(&acc, &g)?;
        }
        Ok(acc)
    }

    /// The Chevalley generators `(H_i, X_i, Y_i)` of this algebra.
    pub fn generators(&self) -> Vec<(LieElement, LieElement, LieElement)> {
        let ct = self.cartan_type();
        (1..=self.rank())
            .map(|i| {
                (
                    LieElement::h(ct, i),
                    LieElement::x(ct, i),
                    LieElement::y(ct, i),
                )
            })
            .collect()
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SerreReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SerreReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the Chevalley–Serre relations for candidate generators
/// `gens[i] = (h_i, x_i, y_i)` against a Cartan matrix `M`:
///
/// `[h_i,h_j] = 0`, `[h_i,x_j] = M_ji x_j`, `[h_i,y_j] = −M_ji y_j`,
/// `[x_i,y_j] = δ_ij h_i`, and for `i ≠ j`
/// `(ad x_i)^{1−M_ji} x_j = 0 = (ad y_i)^{1−M_ji} y_j`.
pub fn verify_serre(
    t: &StructureTable,
    cartan: &[Vec<i64>],
    gens: &[(LieElement, LieElement, LieElement)],
) -> Result<SerreReport> {
    let k = cartan.len();
    if gens.len() != k {
        return Err(LieError::Invalid(format!(
            "{} generator triples for a rank-{k} Cartan matrix",
            gens.len()
        )));
    }
    let mut report = SerreReport::default();
    let mut expect = |ok: bool, what: String| {
        report.checked += 1;
        if !ok {
            report.failures.push(what);
        }
    };
    for i in 0..k {
        let (hi, xi, yi) = &gens[i];
        for j in 0..k {
            let (hj, xj, yj) = &gens[j];
            let m = rat(cartan[j][i]);
            let (a, b) = (i + 1, j + 1);

            expect(t.bracket(hi, hj)?.is_zero(), format!("[h{a},h{b}] != 0"));
            expect(
                t.bracket(hi, xj)? == xj.scale(&m),
                format!("[h{a},x{b}] != M{b}{a} x{b}"),
            );
            expect(
                t.bracket(hi, yj)? == yj.scale(&-m.clone()),
                format!("[h{a},y{b}] != -M{b}{a} y{b}"),
            );
            let xy = t.bracket(xi, yj)?;
            if i == j {
                expect(xy == *hi, format!("[x{a},y{a}] != h{a}"));
            } else {
                expect(xy.is_zero(), format!("[x{a},y{b}] != 0"));
                let power = usize::try_from(1 - cartan[j][i]).map_err(|_| {
                    LieError::Invalid(format!("Cartan entry M{b}{a} is positive off the diagonal"))
                })?;
                expect(
                    t.ad_power(xi, xj, power)?.is_zero(),
                    format!("(ad x{a})^{power} x{b} != 0"),
                );
                expect(
                    t.ad_power(yi, yj, power)?.is_zero(),
                    format!("(ad y{a})^{power} y{b} != 0"),
                );
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobiMode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct JacobiReport {
    pub checked: u64,
    pub failure_count: u64,
    /// First few failing triples, in dense basis positions order of discovery.
    pub failures: Vec<(String, String, String)>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

const MAX_REPORTED: usize = 8;

struct JacobiScratch {
    acc: Vec<i64>,
    touched: Vec<usize>,
}

impl JacobiScratch {
    fn new(dim: usize) -> Self {
        Self {
            acc: vec![0; dim],
            touched: Vec::new(),
        }
    }

    /// Adds `sign·[[a,b],c]`.
    fn add_double(&mut self, t: &StructureTable, a: Slot, b: Slot, c: Slot) {
        let rs = t.root_system();
        let (rank, np) = (rs.rank(), rs.num_positive());
        t.bracket_slots(a, b).for_each(rs, |s, k| {
            t.bracket_slots(s, c).for_each(rs, |u, m| {
                let p = u.position(rank, np);
                if self.acc[p] == 0 {
                    self.touched.push(p);
                }
                self.acc[p] += k * m;
            });
        });
    }

    fn jacobi_vanishes(&mut self, t: &StructureTable, a: Slot, b: Slot, c: Slot) -> bool {
        self.add_double(t, a, b, c);
        self.add_double(t, b, c, a);
        self.add_double(t, c, a, b);
        let mut ok = true;
        for p in self.touched.drain(..) {
            if self.acc[p] != 0 {
                ok = false;
            }
            self.acc[p] = 0;
        }
        ok
    }
}

/// Audits `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` on basis triples.
pub fn jacobi_check(t: &StructureTable, mode: JacobiMode) -> JacobiReport {
    let rs = t.root_system();
    let (rank, np, dim) = (rs.rank(), rs.num_positive(), rs.dim());
    let slot = |p: usize| Slot::from_position(p, rank, np);

    let partials: Vec<JacobiReport> = match mode {
        JacobiMode::Exhaustive => (0..dim)
            .into_par_iter()
            .map(|a| {
                let mut scratch = JacobiScratch::new(dim);
                let mut rep = JacobiReport::default();
                for b in 0..dim {
                    for c in 0..dim {
                        record(&mut rep, &mut scratch, t, slot(a), slot(b), slot(c));
                    }
                }
                rep
            })
            .collect(),
        JacobiMode::Sampled { count, seed } => {
            const CHUNK: usize = 1 << 14;
            let chunks = count.div_ceil(CHUNK);
            (0..chunks)
                .into_par_iter()
                .map(|ci| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(ci as u64);
                    let mut scratch = JacobiScratch::new(dim);
                    let mut rep = JacobiReport::default();
                    let n = CHUNK.min(count - ci * CHUNK);
                    for _ in 0..n {
                        let (a, b, c) = (
                            rng.gen_range(0..dim),
                            rng.gen_range(0..dim),
                            rng.gen_range(0..dim),
                        );
                        record(&mut rep, &mut scratch, t, slot(a), slot(b), slot(c));
                    }
                    rep
                })
                .collect()
        }
    };

    let mut out = JacobiReport::default();
    for p in partials {
        out.checked += p.checked;
        out.failure_count += p.failure_count;
        for f in p.failures {
            if out.failures.len() < MAX_REPORTED {
                out.failures.push(f);
            }
        }
    }
    out
}

fn record(
    rep: &mut JacobiReport,
    scratch: &mut JacobiScratch,
    t: &StructureTable,
    a: Slot,
    b: Slot,
    c: Slot,
) {
    rep.checked += 1;
    if !scratch.jacobi_vanishes(t, a, b, c) {
        rep.failure_count += 1;
        if rep.failures.len() < MAX_REPORTED {
            rep.failures
                .push((a.to_string(), b.to_string(), c.to_string()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::CartanType;

    fn e8() -> StructureTable {
        StructureTable::build(CartanType::e8()).unwrap()
    }

    #[test]
    fn x1_y1_is_h1() {
        let t = e8();
        let ct = t.cartan_type();
        let r = t
            .bracket(&LieElement::x(ct, 1), &LieElement::y(ct, 1))
            .unwrap();
        assert_eq!(r, LieElement::h(ct, 1));
    }

    #[test]
    fn non_root_sum_brackets_vanish() {
        let t = e8();
        let ct = t.cartan_type();
        let r = t
            .bracket(&LieElement::x(ct, 1), &LieElement::x(ct, 2))
            .unwrap();
        assert!(r.is_zero());
        let r = t
            .bracket(&LieElement::x(ct, 120), &LieElement::x(ct, 1))
            .unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn cartan_action() {
        let t = e8();
        let ct = t.cartan_type();
        for k in [1, 47, 120] {
            for i in 1..=8 {
                let r = t
                    .bracket(&LieElement::h(ct, i), &LieElement::x(ct, k))
                    .unwrap();
                let w = t.root_system().root_weight(k).coords[i - 1];
                assert_eq!(r, LieElement::x(ct, k).scale(&rat(w)));
            }
        }
    }

    #[test]
    fn nested_examples() {
        let t = e8();
        let ct = t.cartan_type();
        assert_eq!(
            t.nested_bracket(RootKind::X, &[1]).unwrap(),
            LieElement::x(ct, 1)
        );
        let x74 = t
            .nested_bracket(RootKind::X, &[4, 5, 6, 7, 8, 2, 3, 4, 5, 6, 7])
            .unwrap();
        let (slot, c) = x74.as_single_term().unwrap();
        assert_eq!(slot, Slot::X(74));
        assert!(c.is_integer() && *c != rat(0));
        let x12 = t.nested_bracket(RootKind::X, &[4, 5]).unwrap();
        let (slot, c) = x12.as_single_term().unwrap();
        assert_eq!(slot, Slot::X(12));
        assert_eq!(*c, rat(t.n_const(4, 5)));
    }

    #[test]
    fn nested_errors() {
        let t = e8();
        assert!(matches!(
            t.nested_bracket(RootKind::X, &[]),
            Err(LieError::EmptySequence)
        ));
        assert!(matches!(
            t.nested_bracket(RootKind::Y, &[1, 9]),
            Err(LieError::IndexOutOfRange { index: 9, max: 8 })
        ));
    }

    #[test]
    fn serre_holds_for_own_generators() {
        for ct in ["A3", "D7", "E8"] {
            let t = StructureTable::build(ct.parse().unwrap()).unwrap();
            let rep = verify_serre(&t, t.root_system().cartan_matrix(), &t.generators()).unwrap();
            assert!(rep.passed(), "{ct}: {:?}", rep.failures);
        }
    }

    #[test]
    fn serre_x1_x2() {
        let t = e8();
        let ct = t.cartan_type();
        // M_21 = 0, so (ad X_1)^1 X_2 must vanish
        assert_eq!(t.root_system().cartan_matrix()[1][0], 0);
        let r = t
            .ad_power(&LieElement::x(ct, 1), &LieElement::x(ct, 2), 1)
            .unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn jacobi_small_exhaustive() {
        for ct in ["A1", "A2", "A4", "D4", "D5"] {
            let t = StructureTable::build(ct.parse().unwrap()).unwrap();
            let rep = jacobi_check(&t, JacobiMode::Exhaustive);
            let d = t.dim() as u64;
            assert_eq!(rep.checked, d * d * d);
            assert!(rep.passed(), "{ct}: {:?}", rep.failures);
        }
    }

    #[test]
    fn jacobi_detects_corruption() {
        let mut t = StructureTable::build("A3".parse().unwrap()).unwrap();
        t.corrupt_constant(1, 2);
        let rep = jacobi_check(&t, JacobiMode::Exhaustive);
        assert!(!rep.passed());
        assert!(!rep.failures.is_empty());
    }

    #[test]
    fn sampled_is_deterministic() {
        let t = StructureTable::build("E6".parse().unwrap()).unwrap();
        let a = jacobi_check(
            &t,
            JacobiMode::Sampled {
                count: 40_000,
                seed: 9,
            },
        );
        assert_eq!(a.checked, 40_000);
        assert!(a.passed());
    }

    #[test]
    fn chevalley_property_abs_n() {
        let t = e8();
        let rs = t.root_system();
        for i in 1..=rs.num_positive() {
            for j in 1..=rs.num_positive() {
                let n = t.n_const(i, j);
                if rs.root_sum(i, j).is_some() {
                    assert_eq!(n.abs(), 1);
                    assert_eq!(n, -t.n_const(j, i));
                } else {
                    assert_eq!(n, 0);
                }
            }
        }
    }
}
