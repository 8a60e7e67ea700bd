//! Dense matrices over the Gaussian rationals with exact kernel computation.
//!
//! Rank and null spaces are computed by fraction-free (Bareiss) elimination
//! with full pivoting; intermediate entries stay Gaussian integers once the
//! rows are scaled integral, which bounds entry growth on the large stacked
//! systems built elsewhere in the crate. Kernel bases are normalized to the
//! reduced echelon form of the null space, so equal spaces compare equal.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = GaussianRational::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        ExactMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    /// Builds a matrix from canonical scalar strings; for tests and fixtures.
    pub fn from_str_rows(rows: &[&[&str]]) -> Self {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|s| s.parse().expect("bad scalar literal"))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn from_columns(cols: &[Vec<GaussianRational>]) -> Self {
        let ncols = cols.len();
        let nrows = cols.first().map_or(0, Vec::len);
        let mut m = ExactMatrix::zeros(nrows, ncols);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows, "ragged columns");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = ExactMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "dimension mismatch in add"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "dimension mismatch in sub"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Matrix product; inner dimensions must agree.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in mul");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out[(i, j)] += &prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        let mut out = vec![GaussianRational::zero(); self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() || v[k].is_zero() {
                    continue;
                }
                let prod = a * &v[k];
                out[i] += &prod;
            }
        }
        out
    }

    /// Rank via fraction-free elimination.
    pub fn rank(&self) -> usize {
        let w = Eliminated::run(self);
        w.rank
    }

    /// Basis of `{v : self * v = 0}` in reduced echelon normal form, ordered
    /// by pivot position. Empty when the matrix has full column rank.
    pub fn kernel_basis(&self) -> Vec<Vec<GaussianRational>> {
        if self.cols == 0 {
            return Vec::new();
        }
        let elim = Eliminated::run(self);
        let rank = elim.rank;
        let nullity = self.cols - rank;
        if nullity == 0 {
            return Vec::new();
        }
        let mut raw = Vec::with_capacity(nullity);
        for f in rank..self.cols {
            // One solution per free position, in the permuted coordinates.
            let mut y = vec![GaussianRational::zero(); self.cols];
            y[f] = GaussianRational::one();
            for i in (0..rank).rev() {
                let mut acc = GaussianRational::zero();
                for (j, yj) in y.iter().enumerate().skip(i + 1) {
                    if elim.mat[(i, j)].is_zero() || yj.is_zero() {
                        continue;
                    }
                    let prod = &elim.mat[(i, j)] * yj;
                    acc += &prod;
                }
                y[i] = -acc / elim.mat[(i, i)].clone();
            }
            let mut x = vec![GaussianRational::zero(); self.cols];
            for (pos, &orig) in elim.col_perm.iter().enumerate() {
                x[orig] = y[pos].clone();
            }
            raw.push(x);
        }
        let basis = canonical_row_span(&raw);
        assert_eq!(
            basis.len() + rank,
            self.cols,
            "rank plus nullity must equal columns"
        );
        basis
    }

    /// Reduced row echelon form together with its rank. Plain fractional
    /// elimination; independent of the Bareiss route.
    pub fn rref(&self) -> (ExactMatrix, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let found = (pivot_row..m.rows)
                .filter(|&r| !m[(r, col)].is_zero())
                .min_by_key(|&r| (m[(r, col)].bit_size(), r));
            let Some(r) = found else { continue };
            m.swap_rows(pivot_row, r);
            let inv = m[(pivot_row, col)].inv();
            for j in col..m.cols {
                let v = &m[(pivot_row, j)] * &inv;
                m[(pivot_row, j)] = v;
            }
            for i in 0..m.rows {
                if i == pivot_row || m[(i, col)].is_zero() {
                    continue;
                }
                let factor = m[(i, col)].clone();
                for j in col..m.cols {
                    let delta = &factor * &m[(pivot_row, j)];
                    m[(i, j)] -= &delta;
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Scales every row so all entries become Gaussian integers. Preserves
    /// rank and kernel.
    fn make_rows_integral(&mut self) {
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for j in 0..self.cols {
                let e = &self[(i, j)];
                lcm = lcm.lcm(e.re.denom());
                lcm = lcm.lcm(e.im.denom());
            }
            if lcm.is_one() {
                continue;
            }
            let s = GaussianRational::real(Rational::from_integer(lcm));
            for j in 0..self.cols {
                let v = &self[(i, j)] * &s;
                self[(i, j)] = v;
            }
        }
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of fraction-free elimination with full pivoting. The leading
/// `rank x rank` block is upper triangular with nonzero diagonal in the
/// permuted column order; all rows past `rank` are zero.
struct Eliminated {
    mat: ExactMatrix,
    col_perm: Vec<usize>,
    rank: usize,
}

impl Eliminated {
    fn run(input: &ExactMatrix) -> Eliminated {
        let mut m = input.clone();
        m.make_rows_integral();
        let mut col_perm: Vec<usize> = (0..m.cols).collect();
        let steps = m.rows.min(m.cols);
        let mut prev = GaussianRational::one();
        let mut rank = 0;
        for k in 0..steps {
            let mut pivot: Option<(u64, usize, usize)> = None;
            for i in k..m.rows {
                for j in k..m.cols {
                    let e = &m[(i, j)];
                    if e.is_zero() {
                        continue;
                    }
                    let key = (e.bit_size(), i, j);
                    if pivot.is_none_or(|p| key < p) {
                        pivot = Some(key);
                    }
                }
            }
            let Some((_, pi, pj)) = pivot else { break };
            m.swap_rows(k, pi);
            m.swap_cols(k, pj);
            col_perm.swap(k, pj);
            let p = m[(k, k)].clone();
            for i in k + 1..m.rows {
                let below = m[(i, k)].clone();
                for j in k + 1..m.cols {
                    let scaled = if m[(i, j)].is_zero() {
                        GaussianRational::zero()
                    } else {
                        &p * &m[(i, j)]
                    };
                    let correction = if below.is_zero() || m[(k, j)].is_zero() {
                        GaussianRational::zero()
                    } else {
                        &below * &m[(k, j)]
                    };
                    m[(i, j)] = (scaled - correction) / prev.clone();
                }
                m[(i, k)] = GaussianRational::zero();
            }
            prev = p;
            rank = k + 1;
        }
        Eliminated {
            mat: m,
            col_perm,
            rank,
        }
    }
}

/// The Kronecker product, with the left factor indexing the coarse blocks:
/// entry `((i1*b.rows + i2), (j1*b.cols + j2))` equals `a[i1,j1] * b[i2,j2]`.
pub fn kronecker(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for i1 in 0..a.rows {
        for j1 in 0..a.cols {
            let f = &a[(i1, j1)];
            if f.is_zero() {
                continue;
            }
            for i2 in 0..b.rows {
                for j2 in 0..b.cols {
                    if b[(i2, j2)].is_zero() {
                        continue;
                    }
                    out[(i1 * b.rows + i2, j1 * b.cols + j2)] = f * &b[(i2, j2)];
                }
            }
        }
    }
    out
}

/// Vertical concatenation. All matrices must share a column count.
pub fn stack_rows(mats: &[ExactMatrix]) -> Result<ExactMatrix> {
    let first = mats
        .first()
        .ok_or_else(|| Error::InvalidInput("stack_rows needs at least one matrix".into()))?;
    let cols = first.cols;
    let rows = mats.iter().map(|m| m.rows).sum();
    let mut data = Vec::with_capacity(rows * cols);
    for m in mats {
        if m.cols != cols {
            return Err(Error::DimensionMismatch(format!(
                "stack_rows: expected {cols} columns, found {}",
                m.cols
            )));
        }
        data.extend_from_slice(&m.data);
    }
    Ok(ExactMatrix { rows, cols, data })
}

pub fn commutator(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.mul(b).sub(&b.mul(a))
}

/// Canonical basis of the row span: nonzero rows of the reduced echelon
/// form. Two vector lists span the same space iff their canonical bases
/// are equal.
pub fn canonical_row_span(vectors: &[Vec<GaussianRational>]) -> Vec<Vec<GaussianRational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (r, rank) = ExactMatrix::from_rows(vectors.to_vec()).rref();
    (0..rank).map(|i| r.row(i).to_vec()).collect()
}
