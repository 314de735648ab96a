//! Registry of checkable statements about E8, D7 and the embedding between
//! them, with a deterministic report.

mod reference;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use reference::{IMAGE_POSITIVE_ROOTS, REFERENCE_E8_ROOTS, SPINOR_ROOTS, VECTOR_ROOTS};

use crate::chevalley::{
    jacobi_check, ratio, verify_serre, JacobiMode, LieElement, Rational, RootKind, Slot,
    StructureTable,
};
use crate::embedding::{
    check_abelian, check_closure, check_nilpotent, decompose_adjoint, gravigut_obstruction_report,
    lifts_equivalent, lisi_span_not_closed, long_bracket_identity, phi_so14_e8, span_of_slots,
    span_union, verify_embedding, verify_lift_witness, AdjointDecomposition, Embedding,
    GraviGutLift, Submodule,
};
use crate::error::{LieError, Result};
use crate::rep_theory::{tensor_decompose, tensor_oracle, weyl_dim};
use crate::root_system::{CartanType, RootSystem, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    pub location: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Clone)]
pub struct Config {
    /// Run only these claim ids; all others are reported as skipped.
    pub only: Vec<String>,
    pub seed: u64,
    pub format: Format,
    /// Replacement E8 structure table, e.g. one loaded from a dump.
    pub table: Option<Arc<StructureTable>>,
    /// Flip the sign of `N(1,3)` and `N(3,1)` before running (fault injection).
    pub corrupt_table: bool,
    pub jacobi_samples: usize,
    pub antisymmetry_samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            only: Vec::new(),
            seed: 1,
            format: Format::Text,
            table: None,
            corrupt_table: false,
            jacobi_samples: 1_000_000,
            antisymmetry_samples: 100_000,
        }
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: String) -> Self {
        Self { passed, detail }
    }
}

struct ClaimSpec {
    id: &'static str,
    description: &'static str,
    location: &'static str,
    run: fn(&Context) -> Result<Outcome>,
}

const REGISTRY: &[ClaimSpec] = &[
    ClaimSpec {
        id: "roots",
        description: "E8 has 120 positive roots matching the reference table index for index",
        location: "root table",
        run: claim_roots,
    },
    ClaimSpec {
        id: "jacobi",
        description: "Jacobi identity on all D7 basis triples and sampled E8 triples; antisymmetry on random pairs",
        location: "Chevalley basis construction",
        run: claim_jacobi,
    },
    ClaimSpec {
        id: "chevalley",
        description: "|N(a,b)| = p+1 and N(a,b) = -N(b,a) for all E8 root pairs; Serre relations for E8",
        location: "Chevalley basis relations",
        run: claim_chevalley,
    },
    ClaimSpec {
        id: "embedding",
        description: "the generator assignment j -> 9-j defines an embedding of D7 into E8",
        location: "embedding of so(14) into E8",
        run: claim_embedding,
    },
    ClaimSpec {
        id: "adjoint",
        description: "E8 splits under D7 as 91+14+64+64+14+1 with highest weights l2,l1,l6,l7,l1,0",
        location: "adjoint decomposition",
        run: claim_adjoint,
    },
    ClaimSpec {
        id: "bases",
        description: "the first root coordinate partitions the positive roots as 42/64/14, matching the module bases",
        location: "module bases",
        run: claim_bases,
    },
    ClaimSpec {
        id: "nilpotent",
        description: "[X_112]+[X_120] and [Y_1]+[Y_97] are nilpotent subalgebras; [X_120], [Y_97] are abelian",
        location: "nilpotent extension lemma",
        run: claim_nilpotent,
    },
    ClaimSpec {
        id: "not-subalgebra",
        description: "[Y_112, X_120] is a nonzero multiple of X_47, outside [X_120]+[Y_1]",
        location: "non-subalgebra lemma",
        run: claim_not_subalgebra,
    },
    ClaimSpec {
        id: "tensor",
        description: "both spinor tensor squares of D7 avoid their factor, the adjoint and dimensions 64, 91",
        location: "GraviGUT obstruction theorem",
        run: claim_tensor,
    },
    ClaimSpec {
        id: "span",
        description: "D7 image plus [X_112] is not closed; adding [X_120] closes it",
        location: "remark on the 64-dimensional extension",
        run: claim_span,
    },
    ClaimSpec {
        id: "lift",
        description: "the long bracket from X_112 reaches a multiple of X_1; lift classes follow a'^2 b = a^2 b'",
        location: "lift classification theorem",
        run: claim_lift,
    },
    ClaimSpec {
        id: "oracle",
        description: "Klimyk decomposition agrees with character convolution on seeded A2 and D4 pairs",
        location: "tensor product decompositions",
        run: claim_oracle,
    },
    ClaimSpec {
        id: "generators",
        description: "nested-bracket expressions for X_74, X_112, X_120 and Y_97 are nonzero multiples of those vectors",
        location: "module generators",
        run: claim_generators,
    },
    ClaimSpec {
        id: "obstruction",
        description: "obstruction report: tensor squares, and both 64-dimensional modules of E8 are non-abelian",
        location: "GraviGUT obstruction theorem",
        run: claim_obstruction,
    },
];

/// Claim ids in registry order.
pub fn claim_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

struct Context<'a> {
    config: &'a Config,
    e8: Arc<StructureTable>,
    d7: RootSystem,
    phi: Embedding,
    adjoint: OnceLock<std::result::Result<AdjointDecomposition, LieError>>,
}

impl Context<'_> {
    fn adjoint(&self) -> Result<&AdjointDecomposition> {
        self.adjoint
            .get_or_init(|| decompose_adjoint(&self.phi))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn module(&self, name: &str) -> Result<&Submodule> {
        self.adjoint()?
            .summands
            .iter()
            .find(|s| s.name == name)
            .map(|s| &s.module)
            .ok_or_else(|| LieError::Invalid(format!("no summand generated by {name}")))
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        rng.set_stream(salt);
        rng
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub seed: u64,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn passed_count(&self) -> usize {
        self.claims
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count()
    }

    pub fn run_count(&self) -> usize {
        self.claims
            .iter()
            .filter(|c| c.status != Status::Skipped)
            .count()
    }

    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let _ = write!(out, "CLAIM {} {}", c.id, c.status);
            if !c.detail.is_empty() {
                let _ = write!(out, " {}", c.detail);
            }
            out.push('\n');
        }
        let _ = writeln!(out, "SUMMARY {}/{}", self.passed_count(), self.run_count());
        out
    }

    pub fn render_structured(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            seed: u64,
            passed: usize,
            total: usize,
            claims: &'a [Claim],
        }
        let doc = Doc {
            seed: self.seed,
            passed: self.passed_count(),
            total: self.run_count(),
            claims: &self.claims,
        };
        serde_json::to_string_pretty(&doc).expect("report serialises") + "\n"
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Structured => self.render_structured(),
        }
    }
}

/// Runs every selected claim (concurrently) and reports them in registry
/// order.
pub fn run_all_claims(config: &Config) -> Result<Report> {
    for id in &config.only {
        if !REGISTRY.iter().any(|c| c.id == id) {
            return Err(LieError::Invalid(format!("unknown claim id {id:?}")));
        }
    }
    let mut e8 = match &config.table {
        Some(t) if t.cartan_type() != CartanType::e8() => {
            return Err(LieError::RootSystemMismatch {
                left: CartanType::e8().to_string(),
                right: t.cartan_type().to_string(),
            })
        }
        Some(t) => Arc::clone(t),
        None => Arc::new(StructureTable::build(CartanType::e8())?),
    };
    if config.corrupt_table {
        Arc::make_mut(&mut e8).corrupt_constant(1, 3);
    }
    let d7 = RootSystem::new(CartanType::d7())?;
    let phi = phi_so14_e8(&d7, Arc::clone(&e8))?;
    let ctx = Context {
        config,
        e8,
        d7,
        phi,
        adjoint: OnceLock::new(),
    };

    let selected = |id: &str| config.only.is_empty() || config.only.iter().any(|o| o == id);
    let claims = REGISTRY
        .par_iter()
        .map(|spec| {
            let (status, detail) = if !selected(spec.id) {
                (Status::Skipped, String::new())
            } else {
                match (spec.run)(&ctx) {
                    Ok(o) if o.passed => (Status::Pass, o.detail),
                    Ok(o) => (Status::Fail, o.detail),
                    Err(e) => (Status::Fail, format!("error: {e}")),
                }
            };
            Claim {
                id: spec.id,
                description: spec.description,
                location: spec.location,
                status,
                detail,
            }
        })
        .collect();
    Ok(Report {
        seed: config.seed,
        claims,
    })
}

fn coords(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn claim_roots(ctx: &Context) -> Result<Outcome> {
    let rs = ctx.e8.root_system();
    let mismatches: Vec<usize> = (1..=rs.num_positive().min(REFERENCE_E8_ROOTS.len()))
        .filter(|&i| rs.root(i).coeffs != REFERENCE_E8_ROOTS[i - 1])
        .collect();
    let passed = rs.num_positive() == 120 && mismatches.is_empty();
    let detail = match mismatches.first() {
        None => format!(
            "roots={} mismatches=0 highest={}",
            rs.num_positive(),
            coords(&rs.root(120).coeffs)
        ),
        Some(&i) => format!(
            "roots={} mismatches={} first=alpha_{i}",
            rs.num_positive(),
            mismatches.len()
        ),
    };
    Ok(Outcome::new(passed, detail))
}

fn random_element(rng: &mut ChaCha8Rng, ct: CartanType, rs: &RootSystem) -> LieElement {
    let mut e = LieElement::zero(ct);
    for _ in 0..rng.gen_range(1..=3) {
        let slot = Slot::from_position(rng.gen_range(0..rs.dim()), rs.rank(), rs.num_positive());
        let mut p = rng.gen_range(-5..=5);
        if p == 0 {
            p = 1;
        }
        e.add_term(slot, ratio(p, rng.gen_range(1..=4)));
    }
    e
}

fn claim_jacobi(ctx: &Context) -> Result<Outcome> {
    let d7 = StructureTable::new(ctx.d7.clone());
    let exhaustive = jacobi_check(&d7, JacobiMode::Exhaustive);
    let sampled = jacobi_check(
        &ctx.e8,
        JacobiMode::Sampled {
            count: ctx.config.jacobi_samples,
            seed: ctx.config.seed,
        },
    );

    let t = &ctx.e8;
    let rs = t.root_system();
    let ct = t.cartan_type();
    const CHUNK: usize = 4096;
    let n = ctx.config.antisymmetry_samples;
    let failures = (0..n.div_ceil(CHUNK))
        .into_par_iter()
        .map(|chunk| -> Result<usize> {
            let mut rng = ctx.rng(1000 + chunk as u64);
            let mut bad = 0;
            for _ in (chunk * CHUNK)..((chunk + 1) * CHUNK).min(n) {
                let a = random_element(&mut rng, ct, rs);
                let b = random_element(&mut rng, ct, rs);
                if t.bracket(&a, &b)? != t.bracket(&b, &a)?.neg() {
                    bad += 1;
                }
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum::<usize>();

    let mut detail = format!(
        "d7_triples={} d7_failures={} e8_triples={} e8_failures={} antisymmetry_pairs={n} antisymmetry_failures={failures}",
        exhaustive.checked, exhaustive.failure_count, sampled.checked, sampled.failure_count
    );
    if let Some((a, b, c)) = exhaustive.failures.first().or(sampled.failures.first()) {
        let _ = write!(detail, " witness=({a},{b},{c})");
    }
    Ok(Outcome::new(
        exhaustive.passed() && sampled.passed() && failures == 0,
        detail,
    ))
}

/// Largest `p` with `beta - p*alpha` a root.
fn string_below(rs: &RootSystem, alpha: &[i64], beta: &[i64]) -> i64 {
    let mut p = 0;
    loop {
        let v: Vec<i64> = beta
            .iter()
            .zip(alpha)
            .map(|(b, a)| b - (p + 1) * a)
            .collect();
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        if rs.is_root(&v) || rs.is_root(&neg) {
            p += 1;
        } else {
            return p;
        }
    }
}

fn claim_chevalley(ctx: &Context) -> Result<Outcome> {
    let t = &ctx.e8;
    let rs = t.root_system();
    let np = rs.num_positive();
    let mut pairs = 0;
    let mut bad = Vec::new();
    for i in 1..=np {
        for j in 1..=np {
            if rs.root_sum(i, j).is_none() {
                continue;
            }
            pairs += 1;
            let p = string_below(rs, &rs.root(i).coeffs, &rs.root(j).coeffs);
            let n = t.n_const(i, j);
            if n.abs() != p + 1 || n != -t.n_const(j, i) {
                bad.push((i, j));
            }
        }
    }
    let serre = verify_serre(t, rs.cartan_matrix(), &t.generators())?;
    let mut detail = format!(
        "pairs={pairs} violations={} serre_relations={} serre_failures={}",
        bad.len(),
        serre.checked,
        serre.failures.len()
    );
    if let Some((i, j)) = bad.first() {
        let _ = write!(detail, " first=(alpha_{i},alpha_{j})");
    }
    Ok(Outcome::new(bad.is_empty() && serre.passed(), detail))
}

fn claim_embedding(ctx: &Context) -> Result<Outcome> {
    let rep = verify_embedding(&ctx.phi)?;
    let mut detail = format!(
        "relations={} failures={} independent={}",
        rep.serre.checked,
        rep.serre.failures.len(),
        rep.independent
    );
    if let Some(f) = rep.serre.failures.first() {
        let _ = write!(detail, " first={f}");
    }
    Ok(Outcome::new(rep.passed(), detail))
}

fn claim_adjoint(ctx: &Context) -> Result<Outcome> {
    let dec = ctx.adjoint()?;
    let expected: [(usize, Option<usize>); 6] = [
        (91, Some(2)),
        (14, Some(1)),
        (64, Some(6)),
        (64, Some(7)),
        (14, Some(1)),
        (1, None),
    ];
    let mut ok = dec.independent() && dec.total_dim == 248 && dec.summands.len() == expected.len();
    let mut parts = Vec::new();
    for (s, (dim, node)) in dec.summands.iter().zip(expected) {
        let want = node.map_or_else(|| Weight::zero(7), |k| Weight::fundamental(7, k));
        let hw = s.module.highest_weight();
        ok &= s.dim() == dim && hw == Some(&want);
        parts.push(format!(
            "{}:{}:{}",
            s.name,
            s.dim(),
            hw.map_or_else(|| "?".to_string(), |w| coords(&w.coords))
        ));
    }

    let t = &ctx.e8;
    let h = crate::embedding::centraliser_element(t.cartan_type());
    let image = ctx.module("X_74")?;
    let centralises = crate::embedding::span_elements(t, &image.basis)
        .par_iter()
        .map(|g| t.bracket(g, &h).map(|b| b.is_zero()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|z| z);
    let trivial = ctx.module("H")?;
    let spanned_by_h = trivial.dim() == 1 && trivial.basis.contains(&ctx.phi.to_vector(&h));
    ok &= centralises && spanned_by_h;
    Ok(Outcome::new(
        ok,
        format!(
            "summands={} total={} independent={} centraliser_commutes={centralises} trivial_spanned_by_H={spanned_by_h}",
            parts.join(","),
            dec.total_dim,
            dec.independent()
        ),
    ))
}

fn slot_list(kind: fn(usize) -> Slot, idx: &[usize]) -> Vec<Slot> {
    idx.iter().map(|&i| kind(i)).collect()
}

fn claim_bases(ctx: &Context) -> Result<Outcome> {
    let rs = ctx.e8.root_system();
    let mut classes: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for i in 1..=rs.num_positive() {
        classes.entry(rs.root(i).coeffs[0]).or_default().push(i);
    }
    let class = |g: i64| classes.get(&g).cloned().unwrap_or_default();
    let (c0, c1, c2) = (class(0), class(1), class(2));
    let mut ok = c0 == IMAGE_POSITIVE_ROOTS && c1 == SPINOR_ROOTS && c2 == VECTOR_ROOTS;

    let t = &ctx.e8;
    let checks: [(&str, Vec<Slot>); 4] = [
        ("X_120", slot_list(Slot::X, &VECTOR_ROOTS)),
        ("Y_97", slot_list(Slot::Y, &VECTOR_ROOTS)),
        ("X_112", slot_list(Slot::X, &SPINOR_ROOTS)),
        ("Y_1", slot_list(Slot::Y, &SPINOR_ROOTS)),
    ];
    let mut agree = Vec::new();
    for (name, want) in checks {
        let got = ctx.module(name)?.slots(t);
        let same = got.as_deref() == Some(want.as_slice());
        ok &= same;
        agree.push(format!("{name}={same}"));
    }
    let mut image = slot_list(Slot::X, &IMAGE_POSITIVE_ROOTS);
    image.extend(slot_list(Slot::Y, &IMAGE_POSITIVE_ROOTS));
    let image_span = ctx.module("X_74")?;
    let root_part = span_of_slots(t, &image);
    let image_ok = image_span.dim() == 91
        && root_part.vectors().all(|v| image_span.basis.contains(v))
        && (2..=8).all(|i| {
            image_span
                .basis
                .contains(&ctx.phi.to_vector(&LieElement::h(t.cartan_type(), i)))
        });
    ok &= image_ok;
    agree.push(format!("X_74={image_ok}"));
    Ok(Outcome::new(
        ok,
        format!(
            "class_sizes={}/{}/{} {}",
            c0.len(),
            c1.len(),
            c2.len(),
            agree.join(" ")
        ),
    ))
}

fn claim_nilpotent(ctx: &Context) -> Result<Outcome> {
    let t = &ctx.e8;
    let mut ok = true;
    let mut parts = Vec::new();
    for (a, b) in [("X_112", "X_120"), ("Y_1", "Y_97")] {
        let span = span_union(&ctx.module(a)?.basis, &ctx.module(b)?.basis);
        let closed = check_closure(t, &span)?.is_none();
        let class = if closed {
            check_nilpotent(t, &span)?.class
        } else {
            None
        };
        ok &= span.dim() == 78 && closed && class.is_some();
        parts.push(format!(
            "[{a}]+[{b}]:dim={}:closed={closed}:class={}",
            span.dim(),
            class.map_or_else(|| "none".to_string(), |c| c.to_string())
        ));
    }
    for name in ["X_120", "Y_97"] {
        let abelian = check_abelian(t, &ctx.module(name)?.basis)?.is_none();
        ok &= abelian;
        parts.push(format!("[{name}]:abelian={abelian}"));
    }
    Ok(Outcome::new(ok, parts.join(" ")))
}

fn claim_not_subalgebra(ctx: &Context) -> Result<Outcome> {
    let t = &ctx.e8;
    let ct = t.cartan_type();
    let b = t.bracket(&LieElement::y(ct, 112), &LieElement::x(ct, 120))?;
    let c = b
        .multiple_of(&LieElement::x(ct, 47))
        .filter(|c| !c.is_zero());
    let span = span_union(&ctx.module("X_120")?.basis, &ctx.module("Y_1")?.basis);
    let outside = !span.contains(&ctx.phi.to_vector(&LieElement::x(ct, 47)));
    let y112_inside = ctx
        .module("Y_1")?
        .basis
        .contains(&ctx.phi.to_vector(&LieElement::y(ct, 112)));
    Ok(Outcome::new(
        c.is_some() && outside && y112_inside,
        format!(
            "[Y_112,X_120]={b} c={} X_47_outside={outside}",
            c.map_or_else(|| "none".to_string(), |c| c.to_string())
        ),
    ))
}

fn claim_tensor(ctx: &Context) -> Result<Outcome> {
    let rs = &ctx.d7;
    let l = |k: usize| Weight::fundamental(7, k);
    let mut ok = true;
    let mut parts = Vec::new();
    for node in [6, 7] {
        let f = l(node);
        let dec = tensor_decompose(rs, &f, &f)?;
        let oracle = tensor_oracle(rs, &f, &f)?;
        let expected: BTreeMap<Weight, u64> = [(f.scale(2), 1), (l(5), 1), (l(3), 1), (l(1), 1)]
            .into_iter()
            .collect();
        let dims = dec
            .sorted(rs)?
            .into_iter()
            .map(|(_, m, d)| d.to_u64().unwrap_or(u64::MAX) * m)
            .collect::<Vec<_>>();
        let total: u64 = dims.iter().sum();
        let bad_dim = dims.iter().any(|&d| d == 64 || d == 91);
        let same = dec == oracle;
        ok &= dec.summands == expected && same && total == 4096 && !bad_dim;
        let list: Vec<String> = dims.iter().map(u64::to_string).collect();
        parts.push(format!(
            "l{node}^2:dims={} total={total} oracle_agrees={same}",
            list.join("+")
        ));
    }
    Ok(Outcome::new(ok, parts.join(" ")))
}

fn claim_span(ctx: &Context) -> Result<Outcome> {
    let rep = lisi_span_not_closed(&ctx.phi)?;
    let w = rep
        .witness
        .as_ref()
        .map_or_else(|| "none".to_string(), ToString::to_string);
    Ok(Outcome::new(
        rep.passed(),
        format!(
            "witness={w} grade={} extension_closed={} vector_closed={}",
            rep.witness_grade
                .map_or_else(|| "none".to_string(), |g| g.to_string()),
            rep.extension_witness.is_none(),
            rep.vector_witness.is_none()
        ),
    ))
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    let mut p = rng.gen_range(-6..=6);
    if p == 0 {
        p = 1;
    }
    ratio(p, rng.gen_range(1..=5))
}

fn claim_lift(ctx: &Context) -> Result<Outcome> {
    let t = &ctx.e8;
    let (_, c, summary) = long_bracket_identity(t)?;
    let mut rng = ctx.rng(7);
    const QUADRUPLES: usize = 24;
    let (mut agree, mut equivalent, mut witnessed) = (0, 0, 0);
    for k in 0..QUADRUPLES {
        let (a, b, a2) = (
            random_nonzero(&mut rng),
            random_nonzero(&mut rng),
            random_nonzero(&mut rng),
        );
        let b2 = if k % 2 == 0 {
            &a2 * &a2 * &b / (&a * &a)
        } else {
            random_nonzero(&mut rng)
        };
        let rule = &a2 * &a2 * &b == &a * &a * &b2;
        let l1 = GraviGutLift::new(a, b)?;
        let l2 = GraviGutLift::new(a2, b2)?;
        let (eq, witness) = lifts_equivalent(&l1, &l2);
        if eq == rule {
            agree += 1;
        }
        if eq {
            equivalent += 1;
            if witness.is_some_and(|w| verify_lift_witness(t, &l1, &l2, &w)) {
                witnessed += 1;
            }
        }
    }
    let ok = c.is_some() && agree == QUADRUPLES && witnessed == equivalent && equivalent > 0;
    Ok(Outcome::new(
        ok,
        format!(
            "long_bracket={} c={} quadruples={QUADRUPLES} agree={agree} equivalent={equivalent} witnessed={witnessed}",
            summary.result,
            summary.scalar.unwrap_or_else(|| "none".into())
        ),
    ))
}

fn claim_oracle(ctx: &Context) -> Result<Outcome> {
    let mut rng = ctx.rng(12);
    let mut ok = true;
    let mut parts = Vec::new();
    for (k, ct) in ["A2", "A2", "D4", "D4", "D4"].iter().enumerate() {
        let rs = RootSystem::new(ct.parse()?)?;
        let max = if k < 2 { 3 } else { 1 };
        let mut w = || Weight::new((0..rs.rank()).map(|_| rng.gen_range(0..=max)).collect());
        let (l, m) = (w(), w());
        let dec = tensor_decompose(&rs, &l, &m)?;
        let same = dec == tensor_oracle(&rs, &l, &m)?;
        let expected_dim = weyl_dim(&rs, &l)? * weyl_dim(&rs, &m)?;
        ok &= same && dec.total_dim(&rs)? == expected_dim;
        parts.push(format!(
            "{ct}:{}x{}:summands={}:agree={same}",
            coords(&l.coords),
            coords(&m.coords),
            dec.summands.len()
        ));
    }
    Ok(Outcome::new(ok, parts.join(" ")))
}

fn claim_generators(ctx: &Context) -> Result<Outcome> {
    let t = &ctx.e8;
    let ct = t.cartan_type();
    let cases: [(RootKind, &[usize], LieElement, &str); 4] = [
        (
            RootKind::X,
            &[4, 5, 6, 7, 8, 2, 3, 4, 5, 6, 7],
            LieElement::x(ct, 74),
            "X_74",
        ),
        (
            RootKind::X,
            &[
                3, 4, 2, 1, 5, 4, 3, 6, 5, 4, 7, 2, 6, 5, 8, 7, 6, 4, 5, 3, 4, 2,
            ],
            LieElement::x(ct, 112),
            "X_112",
        ),
        (
            RootKind::X,
            &[
                8, 7, 6, 5, 4, 3, 2, 1, 4, 5, 6, 7, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2, 1, 3, 4, 5, 6, 7,
                8,
            ],
            LieElement::x(ct, 120),
            "X_120",
        ),
        (
            RootKind::Y,
            &[5, 4, 2, 3, 6, 4, 1, 3, 5, 4, 7, 2, 6, 5, 4, 3, 1],
            LieElement::y(ct, 97),
            "Y_97",
        ),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (kind, seq, target, name) in cases {
        let e = t.nested_bracket(kind, seq)?;
        let c = e.multiple_of(&target).filter(|c| !c.is_zero());
        ok &= c.is_some();
        parts.push(format!(
            "{name}:c={}",
            c.map_or_else(|| "none".to_string(), |c| c.to_string())
        ));
    }
    Ok(Outcome::new(ok, parts.join(" ")))
}

fn claim_obstruction(ctx: &Context) -> Result<Outcome> {
    let rep = gravigut_obstruction_report(&ctx.phi)?;
    let mut parts = Vec::new();
    for s in &rep.squares {
        parts.push(format!(
            "{}^2:total={} contains_factor={} contains_adjoint={} dim64or91={}",
            coords(&s.factor),
            s.total_dim,
            s.contains_factor,
            s.contains_adjoint,
            s.has_dim_64_or_91
        ));
    }
    for (name, w) in &rep.nonabelian {
        parts.push(format!("[{name}]:nonabelian={}", w.is_some()));
    }
    parts.push(format!("cited_abelian_bound={}", rep.cited_abelian_bound));
    Ok(Outcome::new(rep.passed(), parts.join(" ")))
}
