//! Root systems of the simply-laced families A, D and E.
//!
//! Simple roots follow the Bourbaki numbering. Positive roots are generated
//! from the simple roots by root-string closure and stored in canonical order:
//! height ascending, ties broken by lexicographically descending coefficient
//! vectors. For E8 this reproduces the classical GAP table index-for-index.
//!
//! Root indices in the public API are 1-based.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{LieError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(LieError::UnsupportedType(format!("{family:?}{rank}")))
        }
    }

    pub fn e8() -> Self {
        Self {
            family: Family::E,
            rank: 8,
        }
    }

    pub fn d7() -> Self {
        Self {
            family: Family::D,
            rank: 7,
        }
    }

    /// Dimension of the simple Lie algebra of this type.
    pub fn algebra_dim(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 2),
            (Family::D, _) => n * (2 * n - 1),
            (Family::E, 6) => 78,
            (Family::E, 7) => 133,
            (Family::E, _) => 248,
        }
    }

    /// Bourbaki-numbered Cartan matrix.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match self.family {
            Family::A => edges.extend((1..n).map(|i| (i, i + 1))),
            Family::D => {
                edges.extend((1..n - 1).map(|i| (i, i + 1)));
                edges.push((n - 2, n));
            }
            Family::E => {
                edges.push((1, 3));
                edges.push((2, 4));
                edges.extend((3..n).map(|i| (i, i + 1)));
            }
        }
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in edges {
            m[a - 1][b - 1] = -1;
            m[b - 1][a - 1] = -1;
        }
        m
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unsupported = || LieError::UnsupportedType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(unsupported()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| unsupported())?;
        CartanType::new(family, rank)
    }
}

/// A positive root, as integer coordinates over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// An integral weight in fundamental-weight coordinates: coordinate `i` is
/// the value on `H_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coords: vec![0; rank],
        }
    }

    /// The fundamental weight `λ_i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        Self { coords }
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight::new(self.coords.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantConjugate {
    pub weight: Weight,
    /// Determinant of the Weyl group element used, ±1.
    pub parity: i64,
    /// True when the dominant representative has a zero coordinate, i.e. the
    /// input is fixed by some reflection.
    pub on_wall: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    index_of: HashMap<Vec<i64>, usize>,
    weights: Vec<Weight>,
    // sums[i * n + j] = 1-based index of root i + root j (0-based inputs)
    sums: Vec<Option<usize>>,
    inverse_cartan: Vec<Vec<Ratio<i64>>>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let ct = CartanType::new(cartan_type.family, cartan_type.rank)?;
        let cartan = ct.cartan_matrix();
        let roots = generate_positive_roots(&cartan);
        let rank = ct.rank;

        let index_of: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i + 1))
            .collect();

        let weights = roots
            .iter()
            .map(|r| {
                Weight::new(
                    (0..rank)
                        .map(|j| (0..rank).map(|m| r.coeffs[m] * cartan[j][m]).sum())
                        .collect(),
                )
            })
            .collect();

        let n = roots.len();
        let mut sums = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                let s: Vec<i64> = roots[i]
                    .coeffs
                    .iter()
                    .zip(&roots[j].coeffs)
                    .map(|(a, b)| a + b)
                    .collect();
                sums[i * n + j] = index_of.get(&s).copied();
            }
        }

        let inverse_cartan = invert(&cartan);

        Ok(Self {
            cartan_type: ct,
            cartan,
            roots,
            index_of,
            weights,
            sums,
            inverse_cartan,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    /// Dimension of the Lie algebra: rank plus twice the positive roots.
    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.roots.len()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    /// Root at a 1-based index.
    pub fn root(&self, index: usize) -> &Root {
        &self.roots[index - 1]
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.roots.len() {
            Err(LieError::IndexOutOfRange {
                index,
                max: self.roots.len(),
            })
        } else {
            Ok(())
        }
    }

    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.index_of.get(coeffs).copied()
    }

    pub fn height(&self, index: usize) -> i64 {
        self.root(index).height()
    }

    pub fn highest_root(&self) -> usize {
        self.roots.len()
    }

    /// Index of `α_i + α_j` if that is a positive root.
    pub fn root_sum(&self, i: usize, j: usize) -> Option<usize> {
        let n = self.roots.len();
        self.sums[(i - 1) * n + (j - 1)]
    }

    /// `α_i − α_j` as `(sign, index)` when it is a root (positive or negative).
    pub fn root_difference(&self, i: usize, j: usize) -> Option<(i64, usize)> {
        let a = &self.roots[i - 1].coeffs;
        let b = &self.roots[j - 1].coeffs;
        let d: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        if let Some(k) = self.index_of(&d) {
            return Some((1, k));
        }
        let neg: Vec<i64> = d.iter().map(|x| -x).collect();
        self.index_of(&neg).map(|k| (-1, k))
    }

    /// Whether an arbitrary coefficient vector is a root (of either sign).
    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        if self.index_of.contains_key(coeffs) {
            return true;
        }
        let neg: Vec<i64> = coeffs.iter().map(|x| -x).collect();
        self.index_of.contains_key(&neg)
    }

    /// The weight of a positive root: coordinate `j` is `α(H_j)`.
    pub fn root_weight(&self, index: usize) -> &Weight {
        &self.weights[index - 1]
    }

    /// Simple root `α_i` in fundamental-weight coordinates.
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight::new((0..self.rank()).map(|j| self.cartan[j][i - 1]).collect())
    }

    /// Weyl vector: all ones in fundamental coordinates.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank()])
    }

    /// Pairing `⟨w, α∨⟩` of a weight with the coroot of a positive root.
    /// Simply-laced, so the coroot has the root's coefficients.
    pub fn coroot_pairing(&self, w: &Weight, index: usize) -> i64 {
        self.root(index)
            .coeffs
            .iter()
            .zip(&w.coords)
            .map(|(c, x)| c * x)
            .sum()
    }

    /// Weight expressed over the simple roots.
    pub fn to_root_coords(&self, w: &Weight) -> Vec<Ratio<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n).fold(Ratio::zero(), |acc, j| {
                    acc + self.inverse_cartan[i][j] * w.coords[j]
                })
            })
            .collect()
    }

    /// Inverse of the Cartan matrix; for simply-laced types this is the Gram
    /// matrix of the fundamental weights.
    pub fn inverse_cartan(&self) -> &[Vec<Ratio<i64>>] {
        &self.inverse_cartan
    }

    /// Invariant form normalised so roots have squared length 2.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Ratio<i64> {
        let ra = self.to_root_coords(a);
        ra.iter()
            .zip(&b.coords)
            .fold(Ratio::zero(), |acc, (x, y)| acc + x * *y)
    }

    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let c = w.coords[i - 1];
        w.sub(&self.simple_root_weight(i).scale(c))
    }

    pub fn dominant_conjugate(&self, w: &Weight) -> DominantConjugate {
        let mut cur = w.clone();
        let mut parity = 1;
        while let Some(i) = cur.coords.iter().position(|&c| c < 0) {
            cur = self.reflect(&cur, i + 1);
            parity = -parity;
        }
        let on_wall = cur.coords.contains(&0);
        DominantConjugate {
            weight: cur,
            parity,
            on_wall,
        }
    }

    /// `ROOTS v1 <type>` header followed by one `ROOT <index> <c1> ... <ck>` line per root.
    pub fn dump(&self) -> String {
        let mut out = format!("ROOTS v1 {}\n", self.cartan_type);
        for (i, r) in self.roots.iter().enumerate() {
            out.push_str(&format!("ROOT {}", i + 1));
            for c in &r.coeffs {
                out.push_str(&format!(" {c}"));
            }
            out.push('\n');
        }
        out
    }
}

fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut known: std::collections::HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut all = simple.clone();
    let mut level = simple;

    while !level.is_empty() {
        let mut next = Vec::new();
        for alpha in &level {
            for i in 0..n {
                // p: how far the α_i-string extends downward from α
                let mut p = 0;
                let mut probe = alpha.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|m| alpha[m] * cartan[i][m]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = alpha.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up.clone());
                        all.push(up);
                    }
                }
            }
        }
        level = next;
    }

    let mut roots: Vec<Root> = all.into_iter().map(|coeffs| Root { coeffs }).collect();
    roots.sort_by(|a, b| {
        a.height()
            .cmp(&b.height())
            .then_with(|| b.coeffs.cmp(&a.coeffs))
    });
    roots
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| Ratio::from_integer(i64::from(i == j))));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot = a[col].clone();
                for (x, v) in a[r].iter_mut().zip(pivot) {
                    *x -= f * v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}
