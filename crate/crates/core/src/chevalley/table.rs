use std::fmt::Write as _;

use crate::error::{LieError, Result};
use crate::root_system::{CartanType, RootSystem};

use super::element::Slot;

/// Bracket of two basis vectors. Always an integer combination of at most
/// `rank` basis vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisBracket {
    Zero,
    Term(Slot, i64),
    /// `sign · H_α` where `H_α = Σ c_m H_m` for the root at this index.
    Coroot(i64, usize),
}

impl BasisBracket {
    fn negated(self) -> Self {
        match self {
            BasisBracket::Zero => BasisBracket::Zero,
            BasisBracket::Term(s, c) => BasisBracket::Term(s, -c),
            BasisBracket::Coroot(sign, k) => BasisBracket::Coroot(-sign, k),
        }
    }

    pub fn for_each(self, rs: &RootSystem, mut f: impl FnMut(Slot, i64)) {
        match self {
            BasisBracket::Zero => {}
            BasisBracket::Term(s, c) => f(s, c),
            BasisBracket::Coroot(sign, k) => {
                for (m, &c) in rs.root(k).coeffs.iter().enumerate() {
                    if c != 0 {
                        f(Slot::H(m + 1), sign * c);
                    }
                }
            }
        }
    }
}

/// Integer structure constants of a Chevalley basis `{H_i, X_α, Y_α}`.
///
/// Only `N_{α,β}` for positive pairs is stored; every other basis bracket is
/// derived from it with the simply-laced rules
///
/// * `[Y_α, Y_β] = −N_{α,β} Y_{α+β}`
/// * `[X_α, Y_β] = −N_{β,γ} X_γ` when `γ = α − β` is positive
/// * `[X_α, Y_β] = N_{δ,α} Y_δ` when `δ = β − α` is positive
/// * `[X_α, Y_α] = H_α`
///
/// Signs are normalised so that `N = +1` on every extraspecial pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    rs: RootSystem,
    n_const: Vec<i64>,
    diffs: Vec<Option<(i8, usize)>>,
}

impl StructureTable {
    pub fn new(rs: RootSystem) -> Self {
        let n = rs.num_positive();
        let rank = rs.rank();
        let cartan = rs.cartan_matrix().to_vec();

        // Bimultiplicative cocycle on the root lattice: ε(α_i, α_i) = −1,
        // ε(α_i, α_j) = −1 for i < j adjacent, +1 otherwise. It yields a
        // Jacobi-consistent table with [e_α, e_β] = ε(α, β) e_{α+β}.
        let eps = |a: &[i64], b: &[i64]| -> i64 {
            let mut exp = 0i64;
            for i in 0..rank {
                exp += a[i] * b[i];
                for j in i + 1..rank {
                    if cartan[i][j] != 0 {
                        exp += a[i] * b[j];
                    }
                }
            }
            if exp.rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        };

        // Flip root vectors (X_γ and Y_γ together) so every extraspecial pair
        // has N = +1. Pairs always involve strictly lower roots.
        let mut sign = vec![1i64; n];
        for g in rank..n {
            let gamma = g + 1;
            let (a, b) = extraspecial_pair(&rs, gamma).expect("non-simple root decomposes");
            let e = eps(&rs.root(a).coeffs, &rs.root(b).coeffs);
            sign[g] = sign[a - 1] * sign[b - 1] * e;
        }

        let mut n_const = vec![0i64; n * n];
        for i in 1..=n {
            for j in 1..=n {
                if let Some(k) = rs.root_sum(i, j) {
                    let e = eps(&rs.root(i).coeffs, &rs.root(j).coeffs);
                    n_const[(i - 1) * n + (j - 1)] = sign[i - 1] * sign[j - 1] * sign[k - 1] * e;
                }
            }
        }
        Self::from_parts(rs, n_const)
    }

    fn from_parts(rs: RootSystem, n_const: Vec<i64>) -> Self {
        let n = rs.num_positive();
        let mut diffs = vec![None; n * n];
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    diffs[(i - 1) * n + (j - 1)] =
                        rs.root_difference(i, j).map(|(s, k)| (s as i8, k));
                }
            }
        }
        Self { rs, n_const, diffs }
    }

    pub fn build(ct: CartanType) -> Result<Self> {
        Ok(Self::new(RootSystem::new(ct)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn cartan_type(&self) -> CartanType {
        self.rs.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn dim(&self) -> usize {
        self.rs.dim()
    }

    /// `N_{α_i, α_j}`; zero when `α_i + α_j` is not a root.
    pub fn n_const(&self, i: usize, j: usize) -> i64 {
        self.n_const[(i - 1) * self.rs.num_positive() + (j - 1)]
    }

    fn diff(&self, i: usize, j: usize) -> Option<(i8, usize)> {
        self.diffs[(i - 1) * self.rs.num_positive() + (j - 1)]
    }

    /// Flips the sign of `N_{α_i,α_j}` and `N_{α_j,α_i}`. Only useful for
    /// fault-injection testing: the result is no longer a Lie algebra.
    pub fn corrupt_constant(&mut self, i: usize, j: usize) {
        let n = self.rs.num_positive();
        self.n_const[(i - 1) * n + (j - 1)] *= -1;
        self.n_const[(j - 1) * n + (i - 1)] *= -1;
    }

    pub fn bracket_slots(&self, a: Slot, b: Slot) -> BasisBracket {
        use BasisBracket::{Coroot, Term, Zero};
        match (a, b) {
            (Slot::H(_), Slot::H(_)) => Zero,
            (Slot::H(i), Slot::X(k)) => {
                let c = self.rs.root_weight(k).coords[i - 1];
                if c == 0 {
                    Zero
                } else {
                    Term(Slot::X(k), c)
                }
            }
            (Slot::H(i), Slot::Y(k)) => {
                let c = self.rs.root_weight(k).coords[i - 1];
                if c == 0 {
                    Zero
                } else {
                    Term(Slot::Y(k), -c)
                }
            }
            (Slot::X(_) | Slot::Y(_), Slot::H(_)) => self.bracket_slots(b, a).negated(),
            (Slot::X(i), Slot::X(j)) => match self.rs.root_sum(i, j) {
                Some(k) => Term(Slot::X(k), self.n_const(i, j)),
                None => Zero,
            },
            (Slot::Y(i), Slot::Y(j)) => match self.rs.root_sum(i, j) {
                Some(k) => Term(Slot::Y(k), -self.n_const(i, j)),
                None => Zero,
            },
            (Slot::X(i), Slot::Y(j)) => {
                if i == j {
                    return Coroot(1, i);
                }
                match self.diff(i, j) {
                    Some((1, g)) => Term(Slot::X(g), -self.n_const(j, g)),
                    Some((_, d)) => Term(Slot::Y(d), self.n_const(d, i)),
                    None => Zero,
                }
            }
            (Slot::Y(_), Slot::X(_)) => self.bracket_slots(b, a).negated(),
        }
    }

    /// Text dump: `CHEVALLEY v1 <type>` then one `N i j k c` line per ordered
    /// positive pair with a root sum.
    pub fn dump(&self) -> String {
        let mut out = format!("CHEVALLEY v1 {}\n", self.cartan_type());
        let n = self.rs.num_positive();
        for i in 1..=n {
            for j in 1..=n {
                if let Some(k) = self.rs.root_sum(i, j) {
                    let _ = writeln!(out, "N {i} {j} {k} {}", self.n_const(i, j));
                }
            }
        }
        out
    }

    pub fn load(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(LieError::TableFormat {
            line: 1,
            message: "empty input".into(),
        })?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 || parts[0] != "CHEVALLEY" || parts[1] != "v1" {
            return Err(LieError::TableFormat {
                line: 1,
                message: format!("bad header {header:?}"),
            });
        }
        let ct: CartanType = parts[2].parse()?;
        let rs = RootSystem::new(ct)?;
        let n = rs.num_positive();
        let mut n_const = vec![0i64; n * n];
        let mut seen = vec![false; n * n];

        for (lineno, line) in lines {
            let bad = |message: String| LieError::TableFormat {
                line: lineno + 1,
                message,
            };
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 5 || f[0] != "N" {
                return Err(bad(format!("expected `N i j k c`, got {line:?}")));
            }
            let nums: Vec<i64> = f[1..]
                .iter()
                .map(|s| s.parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| bad(e.to_string()))?;
            let (i, j, k, c) = (nums[0], nums[1], nums[2], nums[3]);
            let in_range = |x: i64| x >= 1 && x as usize <= n;
            if !(in_range(i) && in_range(j) && in_range(k)) {
                return Err(bad("root index out of range".into()));
            }
            let (i, j, k) = (i as usize, j as usize, k as usize);
            if rs.root_sum(i, j) != Some(k) {
                return Err(bad(format!("root {i} + root {j} is not root {k}")));
            }
            if c == 0 {
                return Err(bad("zero structure constant".into()));
            }
            n_const[(i - 1) * n + (j - 1)] = c;
            seen[(i - 1) * n + (j - 1)] = true;
        }
        for i in 1..=n {
            for j in 1..=n {
                if rs.root_sum(i, j).is_some() && !seen[(i - 1) * n + (j - 1)] {
                    return Err(LieError::TableFormat {
                        line: 0,
                        message: format!("missing constant for pair ({i}, {j})"),
                    });
                }
            }
        }
        Ok(Self::from_parts(rs, n_const))
    }
}

/// The extraspecial pair `(α, β)` of a non-simple positive root `γ`: `α` is
/// the lowest-indexed positive root with `γ − α` a positive root.
pub fn extraspecial_pair(rs: &RootSystem, gamma: usize) -> Option<(usize, usize)> {
    let g = &rs.root(gamma).coeffs;
    (1..gamma).find_map(|a| {
        let d: Vec<i64> = g
            .iter()
            .zip(&rs.root(a).coeffs)
            .map(|(x, y)| x - y)
            .collect();
        rs.index_of(&d).map(|b| (a, b))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_pairs_are_unit() {
        let t = StructureTable::build(CartanType::e8()).unwrap();
        // [X_1, X_3] = ±X_9
        assert_eq!(t.n_const(1, 3).abs(), 1);
        assert_eq!(t.n_const(1, 3), -t.n_const(3, 1));
        assert_eq!(t.n_const(1, 2), 0);
    }

    #[test]
    fn extraspecial_signs_positive() {
        for ct in ["A4", "D5", "E6", "E8"] {
            let t = StructureTable::build(ct.parse().unwrap()).unwrap();
            let rs = t.root_system();
            for g in rs.rank() + 1..=rs.num_positive() {
                let (a, b) = extraspecial_pair(rs, g).unwrap();
                assert!(a < b);
                assert_eq!(t.n_const(a, b), 1, "{ct} root {g}");
            }
        }
    }

    #[test]
    fn dump_roundtrip() {
        let t = StructureTable::build(CartanType::d7()).unwrap();
        let text = t.dump();
        let back = StructureTable::load(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.dump(), text);
    }

    #[test]
    fn load_rejects_garbage() {
        assert!(StructureTable::load("").is_err());
        assert!(StructureTable::load("CHEVALLEY v2 A2\n").is_err());
        // A2 needs both (1,2) and (2,1)
        assert!(StructureTable::load("CHEVALLEY v1 A2\nN 1 2 3 1\n").is_err());
        assert!(StructureTable::load("CHEVALLEY v1 A2\nN 1 2 3 1\nN 2 1 2 -1\n").is_err());
        assert!(StructureTable::load("CHEVALLEY v1 A2\nN 1 2 3 1\nN 2 1 3 -1\n").is_ok());
    }
}
