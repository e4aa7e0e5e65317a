use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;
use crate::error::{Error, Result};

/// Exact rational matrix: `rows` is the target dimension, `cols` the source
/// dimension, entries are stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl LinMap {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::shape(
                "LinMap::new",
                format!("{rows}x{cols} shape"),
                format!("{} entries", entries.len()),
            ));
        }
        Ok(LinMap { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        LinMap {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        LinMap { rows, cols, entries }
    }

    /// Integer matrix from nested rows; panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| Scalar::from_int(rows[i][j]))
    }

    /// Single column `n × 1`.
    pub fn column_vector(v: Vec<Scalar>) -> Self {
        let n = v.len();
        LinMap { rows: n, cols: 1, entries: v }
    }

    /// Single row `1 × n`.
    pub fn row_vector(v: Vec<Scalar>) -> Self {
        let n = v.len();
        LinMap { rows: 1, cols: n, entries: v }
    }

    /// Column `e_i` of length `n`.
    pub fn basis_vector(n: usize, i: usize) -> Self {
        Self::from_fn(n, 1, |r, _| if r == i { Scalar::one() } else { Scalar::zero() })
    }

    /// Matrix unit `E_{ij}` of the given shape.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.set(i, j, Scalar::one());
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> LinMap {
        Self::from_fn(self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> LinMap {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// `self ∘ f`; requires `self.cols == f.rows`.
    pub fn compose(&self, f: &LinMap) -> Result<LinMap> {
        if self.cols != f.rows {
            return Err(Error::shape(
                "compose",
                format!("g: {}x{}", self.rows, self.cols),
                format!("f: {}x{}", f.rows, f.cols),
            ));
        }
        // nonzero pattern of f, row by row
        let nz: Vec<Vec<(usize, &Scalar)>> = (0..f.rows)
            .map(|k| f.row(k).iter().enumerate().filter(|(_, b)| !b.is_zero()).collect())
            .collect();
        let mut out = vec![Scalar::zero(); self.rows * f.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * f.cols..(i + 1) * f.cols];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &nz[k] {
                    orow[j] += &(a * b);
                }
            }
        }
        Ok(LinMap {
            rows: self.rows,
            cols: f.cols,
            entries: out,
        })
    }

    /// Kronecker product: `(f⊗g)[(a,b),(c,d)] = f[a,c]·g[b,d]` with flat index `a·dim + b`.
    pub fn kron(&self, g: &LinMap) -> LinMap {
        let (r, c) = (self.rows * g.rows, self.cols * g.cols);
        let mut out = vec![Scalar::zero(); r * c];
        for a in 0..self.rows {
            for cc in 0..self.cols {
                let x = self.get(a, cc);
                if x.is_zero() {
                    continue;
                }
                for b in 0..g.rows {
                    for d in 0..g.cols {
                        let y = g.get(b, d);
                        if !y.is_zero() {
                            out[(a * g.rows + b) * c + cc * g.cols + d] = x * y;
                        }
                    }
                }
            }
        }
        LinMap { rows: r, cols: c, entries: out }
    }

    /// Kronecker product of several factors, left to right.
    pub fn kron_all(factors: &[&LinMap]) -> LinMap {
        factors
            .iter()
            .fold(LinMap::identity(1), |acc, f| acc.kron(f))
    }

    /// Symmetry `V_m⊗V_n → V_n⊗V_m`, `e_i⊗e_j ↦ e_j⊗e_i`.
    pub fn symmetry(m: usize, n: usize) -> LinMap {
        let mut s = LinMap::zeros(m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                s.set(j * m + i, i * n + j, Scalar::one());
            }
        }
        s
    }

    pub fn try_add(&self, other: &LinMap) -> Result<LinMap> {
        self.same_shape("add", other)?;
        Ok(LinMap {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &LinMap) -> Result<LinMap> {
        self.same_shape("sub", other)?;
        Ok(LinMap {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    fn same_shape(&self, op: &'static str, other: &LinMap) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::shape(
                op,
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        Ok(())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &LinMap) -> Result<LinMap> {
        if self.rows != other.rows {
            return Err(Error::shape(
                "hstack",
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// `self` stacked above `other`.
    pub fn vstack(&self, other: &LinMap) -> Result<LinMap> {
        if self.cols != other.cols {
            return Err(Error::shape(
                "vstack",
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(LinMap {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[&LinMap]) -> LinMap {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = LinMap::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Row-major flattening into an `rows·cols × 1` column.
    pub fn vectorize(&self) -> LinMap {
        LinMap::column_vector(self.entries.clone())
    }

    /// Inverse of [`vectorize`](Self::vectorize).
    pub fn unvectorize(v: &LinMap, rows: usize, cols: usize) -> Result<LinMap> {
        if v.cols != 1 || v.rows != rows * cols {
            return Err(Error::shape(
                "unvectorize",
                format!("{}x{}", v.rows, v.cols),
                format!("{rows}x{cols}"),
            ));
        }
        LinMap::new(rows, cols, v.entries.clone())
    }

    /// Columns selected by index, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> LinMap {
        Self::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<Scalar>> {
        let cols = self.cols;
        if cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.entries.chunks(cols).map(|c| c.to_vec()).collect()
    }

    pub(crate) fn from_row_vecs(rows: Vec<Vec<Scalar>>, cols: usize) -> LinMap {
        let n = rows.len();
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        debug_assert_eq!(entries.len(), n * cols);
        LinMap { rows: n, cols, entries }
    }

    /// Largest absolute entry and number of nonzero entries.
    pub fn residual_summary(&self) -> (Scalar, usize) {
        let mut max = Scalar::zero();
        let mut nonzero = 0;
        for e in &self.entries {
            if !e.is_zero() {
                nonzero += 1;
                let a = e.abs();
                if a > max {
                    max = a;
                }
            }
        }
        (max, nonzero)
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Composition; panics on shape mismatch. Library code uses it only where
/// shapes hold by construction.
impl Mul<&LinMap> for &LinMap {
    type Output = LinMap;
    fn mul(self, rhs: &LinMap) -> LinMap {
        self.compose(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<LinMap> for LinMap {
    type Output = LinMap;
    fn mul(self, rhs: LinMap) -> LinMap {
        &self * &rhs
    }
}

impl Mul<&LinMap> for LinMap {
    type Output = LinMap;
    fn mul(self, rhs: &LinMap) -> LinMap {
        &self * rhs
    }
}

impl Mul<LinMap> for &LinMap {
    type Output = LinMap;
    fn mul(self, rhs: LinMap) -> LinMap {
        self * &rhs
    }
}

impl Add<&LinMap> for &LinMap {
    type Output = LinMap;
    fn add(self, rhs: &LinMap) -> LinMap {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add<LinMap> for LinMap {
    type Output = LinMap;
    fn add(self, rhs: LinMap) -> LinMap {
        &self + &rhs
    }
}

impl Sub<&LinMap> for &LinMap {
    type Output = LinMap;
    fn sub(self, rhs: &LinMap) -> LinMap {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<LinMap> for LinMap {
    type Output = LinMap;
    fn sub(self, rhs: LinMap) -> LinMap {
        &self - &rhs
    }
}

impl Neg for &LinMap {
    type Output = LinMap;
    fn neg(self) -> LinMap {
        self.scale(&Scalar::from_int(-1))
    }
}
