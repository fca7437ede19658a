//! Symmetrizable generalized Cartan matrices: parsing, validation,
//! classification and the standard presets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{gcd, IntMatrix};

/// Finite, affine or indefinite, read off the symmetrized matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeClass {
    Finite,
    Affine,
    Indefinite,
}

/// Order m_ij of s_i s_j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoxeterExponent {
    Finite(u32),
    Infinite,
}

/// A validated irreducible symmetrizable generalized Cartan matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanMatrix {
    entries: IntMatrix,
    symmetrizer: Vec<i64>,
    labels: Option<Vec<String>>,
}

impl CartanMatrix {
    /// Validates `rows` and computes the minimal symmetrizer.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Parse("rank must be positive".into()));
        }
        let entries = IntMatrix::from_rows(&rows)?;
        let n = entries.dim();
        for i in 0..n {
            if entries.get(i, i) != 2 {
                return Err(Error::Diagonal { index: i + 1, value: entries.get(i, i) });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (entries.get(i, j), entries.get(j, i));
                if a > 0 || (a == 0) != (b == 0) {
                    return Err(Error::Sign { i: i + 1, j: j + 1 });
                }
            }
        }
        if !is_connected(&entries) {
            return Err(Error::Irreducibility);
        }
        let symmetrizer = minimal_symmetrizer(&entries).ok_or(Error::Symmetrizability)?;
        Ok(CartanMatrix { entries, symmetrizer, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
            return Err(Error::Precondition(format!(
                "{} labels for rank {}",
                labels.len(),
                self.rank()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.entries.dim()
    }

    /// Entry a_ij, 0-based.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries.get(i, j)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.rows()
    }

    /// Componentwise-minimal positive d with d_i a_ij = d_j a_ji.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// The symmetric matrix with entries d_i a_ij.
    pub fn symmetrized(&self) -> IntMatrix {
        let n = self.rank();
        let mut s = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                s.set(i, j, self.symmetrizer[i] * self.get(i, j));
            }
        }
        s
    }

    /// Symmetrized bilinear form B(u, v) = sum d_i a_ij u_i v_j.
    pub fn form(&self, u: &[i64], v: &[i64]) -> i64 {
        let n = self.rank();
        let mut total = 0;
        for i in 0..n {
            if u[i] == 0 {
                continue;
            }
            let mut row = 0;
            for j in 0..n {
                row += self.get(i, j) * v[j];
            }
            total += self.symmetrizer[i] * u[i] * row;
        }
        total
    }

    /// m_ij from the product a_ij a_ji; 0-based indices.
    pub fn coxeter_exponent(&self, i: usize, j: usize) -> Result<CoxeterExponent> {
        let n = self.rank();
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx + 1, rank: n });
            }
        }
        if i == j {
            return Err(Error::Precondition("coxeter exponent needs i != j".into()));
        }
        Ok(match self.get(i, j) * self.get(j, i) {
            0 => CoxeterExponent::Finite(2),
            1 => CoxeterExponent::Finite(3),
            2 => CoxeterExponent::Finite(4),
            3 => CoxeterExponent::Finite(6),
            _ => CoxeterExponent::Infinite,
        })
    }

    /// True when every pair of distinct generators has m_ij = infinity,
    /// i.e. the Weyl group is the universal Coxeter group.
    pub fn is_universal(&self) -> bool {
        let n = self.rank();
        n >= 2
            && (0..n).all(|i| {
                (0..n).all(|j| i == j || self.get(i, j) * self.get(j, i) >= 4)
            })
    }

    pub fn classify(&self) -> TypeClass {
        let s = self.symmetrized();
        let n = self.rank();
        let leading_positive = (1..=n).all(|k| {
            let idx: Vec<usize> = (0..k).collect();
            s.principal_minor(&idx) > 0
        });
        if leading_positive {
            return TypeClass::Finite;
        }
        let semidefinite = (1u32..(1 << n)).all(|mask| {
            let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            s.principal_minor(&idx) >= 0
        });
        if semidefinite && s.rank() == n - 1 {
            TypeClass::Affine
        } else {
            TypeClass::Indefinite
        }
    }

    /// Multiplicative order of the Coxeter element s_1 ... s_n.
    pub fn coxeter_number(&self) -> Result<u64> {
        if self.classify() != TypeClass::Finite {
            return Err(Error::WrongType { expected: "finite" });
        }
        let n = self.rank();
        let mut c = IntMatrix::identity(n);
        for i in 0..n {
            c = c.mul(&crate::weyl::simple_matrix(self, i));
        }
        let mut power = c.clone();
        let mut h = 1;
        while !power.is_identity() {
            power = power.mul(&c);
            h += 1;
        }
        Ok(h)
    }

    /// Principal submatrix on the given 0-based vertices, if it is itself a
    /// valid (connected) Cartan matrix.
    pub fn submatrix(&self, vertices: &[usize]) -> Result<CartanMatrix> {
        for &v in vertices {
            if v >= self.rank() {
                return Err(Error::IndexOutOfRange { index: v + 1, rank: self.rank() });
            }
        }
        CartanMatrix::new(
            vertices
                .iter()
                .map(|&i| vertices.iter().map(|&j| self.get(i, j)).collect())
                .collect(),
        )
    }
}

impl fmt::Debug for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CartanMatrix{:?}", self.rows())
    }
}

impl fmt::Display for CartanMatrix {
    /// Emits the documented text format, parseable by [`parse_cartan`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rank())?;
        for row in self.rows() {
            let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, " / {}", row.join(" "))?;
        }
        Ok(())
    }
}

fn is_connected(m: &IntMatrix) -> bool {
    let n = m.dim();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && m.get(i, j) != 0 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Propagates ratios d_j / d_i = a_ij / a_ji along a spanning tree, then
/// checks every pair. Requires a connected matrix.
fn minimal_symmetrizer(m: &IntMatrix) -> Option<Vec<i64>> {
    let n = m.dim();
    // d_i as num/den
    let mut d: Vec<Option<(i128, i128)>> = vec![None; n];
    d[0] = Some((1, 1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let (num, den) = d[i].unwrap();
        for j in 0..n {
            if j == i || m.get(i, j) == 0 || d[j].is_some() {
                continue;
            }
            let (a, b) = (i128::from(m.get(i, j)), i128::from(m.get(j, i)));
            let (mut nn, mut dd) = (num * a, den * b);
            if dd < 0 {
                nn = -nn;
                dd = -dd;
            }
            let g = gcd(nn, dd);
            d[j] = Some((nn / g, dd / g));
            stack.push(j);
        }
    }
    let fracs: Vec<(i128, i128)> = d.into_iter().collect::<Option<_>>()?;
    let lcm = fracs.iter().fold(1i128, |l, &(_, den)| l / gcd(l, den) * den);
    let ints: Vec<i128> = fracs.iter().map(|&(num, den)| num * (lcm / den)).collect();
    let g = ints.iter().fold(0, |g, &x| gcd(g, x));
    let ints: Vec<i64> = ints.iter().map(|&x| i64::try_from(x / g).ok()).collect::<Option<_>>()?;
    for i in 0..n {
        for j in 0..n {
            if ints[i] * m.get(i, j) != ints[j] * m.get(j, i) {
                return None;
            }
        }
    }
    Some(ints)
}

/// Parses the matrix text format: the rank n, then n rows of n integers.
/// Rows may be separated by newlines or '/'; text after '#' is ignored.
pub fn parse_cartan(text: &str) -> Result<CartanMatrix> {
    let mut tokens = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split(|c: char| c.is_whitespace() || c == '/' || c == ',') {
            if !tok.is_empty() {
                tokens.push(tok);
            }
        }
    }
    let mut it = tokens.into_iter();
    let n: usize = it
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?
        .parse()
        .map_err(|_| Error::Parse("rank must be a positive integer".into()))?;
    if n == 0 {
        return Err(Error::Parse("rank must be positive".into()));
    }
    let values: Vec<i64> = it
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("not an integer: '{t}'"))))
        .collect::<Result<_>>()?;
    if values.len() != n * n {
        return Err(Error::Parse(format!(
            "expected {} entries for rank {n}, found {}",
            n * n,
            values.len()
        )));
    }
    CartanMatrix::new(values.chunks(n).map(|r| r.to_vec()).collect())
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![0; n]; n];
    for i in 0..n {
        rows[i][i] = 2;
        if i + 1 < n {
            rows[i][i + 1] = -1;
            rows[i + 1][i] = -1;
        }
    }
    rows
}

fn rank_suffix(name: &str, prefix: &str, min: usize) -> Option<usize> {
    let n: usize = name.strip_prefix(prefix)?.parse().ok()?;
    (n >= min).then_some(n)
}

/// Standard matrices by Dynkin label (case-insensitive).
///
/// Supported: `A<n>`, `B<n>`, `C<n>` (n >= 2), `D<n>` (n >= 4), `E6`,
/// `E7`, `E8`, `F4`, `G2`, `affine-A<n>` (rank n + 1), and
/// `universal:<k>:<m>` (all off-diagonal entries -m, m >= 2).
///
/// B and C put the doubled bond on the last two vertices; in B_n the last
/// simple root is short, in C_n it is long. G2 has its short root second.
pub fn preset(name: &str) -> Result<CartanMatrix> {
    let key = name.trim().to_ascii_lowercase();
    let unknown = || Error::UnknownPreset(name.to_string());
    if let Some(rest) = key.strip_prefix("universal:") {
        let mut parts = rest.split(':');
        let k: usize = parts.next().and_then(|s| s.parse().ok()).ok_or_else(unknown)?;
        let m: i64 = parts.next().and_then(|s| s.parse().ok()).ok_or_else(unknown)?;
        if parts.next().is_some() || k < 2 {
            return Err(unknown());
        }
        if m < 2 {
            return Err(Error::UniversalWeight(m));
        }
        let rows = (0..k)
            .map(|i| (0..k).map(|j| if i == j { 2 } else { -m }).collect())
            .collect();
        return CartanMatrix::new(rows);
    }
    if key == "affine-a1" {
        return CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]);
    }
    if let Some(n) = rank_suffix(&key, "affine-a", 2) {
        let mut rows = chain(n + 1);
        rows[0][n] = -1;
        rows[n][0] = -1;
        return CartanMatrix::new(rows);
    }
    let rows = match key.as_str() {
        "e6" | "e7" | "e8" => {
            // Bourbaki labelling: 1-3-4-5-6-..., with 2 attached to 4.
            let n: usize = key[1..].parse().unwrap();
            let mut rows = vec![vec![0; n]; n];
            let mut edges = vec![(0, 2), (1, 3), (2, 3)];
            edges.extend((3..n - 1).map(|i| (i, i + 1)));
            for i in 0..n {
                rows[i][i] = 2;
            }
            for (i, j) in edges {
                rows[i][j] = -1;
                rows[j][i] = -1;
            }
            rows
        }
        "f4" => {
            let mut rows = chain(4);
            rows[2][1] = -2;
            rows
        }
        "g2" => vec![vec![2, -1], vec![-3, 2]],
        _ => {
            if let Some(n) = rank_suffix(&key, "a", 1) {
                chain(n)
            } else if let Some(n) = rank_suffix(&key, "b", 2) {
                let mut rows = chain(n);
                rows[n - 1][n - 2] = -2;
                rows
            } else if let Some(n) = rank_suffix(&key, "c", 2) {
                let mut rows = chain(n);
                rows[n - 2][n - 1] = -2;
                rows
            } else if let Some(n) = rank_suffix(&key, "d", 4) {
                let mut rows = chain(n);
                rows[n - 2][n - 1] = 0;
                rows[n - 1][n - 2] = 0;
                rows[n - 3][n - 1] = -1;
                rows[n - 1][n - 3] = -1;
                rows
            } else {
                return Err(unknown());
            }
        }
    };
    CartanMatrix::new(rows)
}
