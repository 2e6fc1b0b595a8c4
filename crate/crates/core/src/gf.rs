//! Dense linear algebra over a prime field and enumeration of subspaces.
//!
//! Matrices hold residues in `[0, p)` as `u32`. With `p <= 97` every product
//! of two entries fits comfortably, so reductions happen after each multiply.
//! Subspaces are kept in a canonical reduced echelon form, which makes
//! equality of subspaces a plain structural comparison.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// Largest modulus accepted anywhere in the crate.
pub const MAX_PRIME: u32 = 97;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Validates a field order.
pub fn check_prime(p: u64) -> Result<u32> {
    if p <= MAX_PRIME as u64 && is_prime(p) {
        Ok(p as u32)
    } else {
        Err(Error::BadPrime(p))
    }
}

/// All supported primes in increasing order.
pub fn supported_primes() -> Vec<u32> {
    (2..=MAX_PRIME).filter(|&p| is_prime(p as u64)).collect()
}

#[inline]
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    // Fermat: a^(p-2)
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u32;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[F_{}; {}x{}]", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = u32;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &u32 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u32 {
        &mut self.data[r * self.cols + c]
    }
}

/// Result of a row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        debug_assert!(is_prime(p as u64));
        Matrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing every entry mod `p`.
    ///
    /// `cols` is needed explicitly because a matrix with zero rows carries no
    /// column count of its own.
    pub fn from_rows(p: u64, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let p = check_prime(p)?;
        let mut m = Self::zeros(p, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                m[(r, c)] = v.rem_euclid(p as i64) as u32;
            }
        }
        Ok(m)
    }

    pub fn from_fn(p: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c) % p;
            }
        }
        m
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.p, self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        assert_eq!(self.p, other.p, "matrix product over different fields");
        let p = self.p;
        let mut out = Matrix::zeros(p, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = &mut out.data[r * other.cols + c];
                    *v = (*v + a * other[(k, c)]) % p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| (acc + a * b) % self.p)
            })
            .collect()
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)];
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out[(self.rows + r, self.cols + c)] = other[(r, c)];
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    fn row_sub_scaled(&mut self, target: usize, source: usize, factor: u32) {
        let p = self.p;
        let cols = self.cols;
        let neg = p - factor;
        for c in 0..cols {
            let s = self.data[source * cols + c];
            if s != 0 {
                let t = &mut self.data[target * cols + c];
                *t = (*t + neg * s) % p;
            }
        }
    }

    /// Gauss-Jordan elimination in place; returns the pivot columns.
    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..cols {
            if lead == self.rows {
                break;
            }
            let Some(found) = (lead..self.rows).find(|&r| self[(r, col)] != 0) else {
                continue;
            };
            if found != lead {
                for c in 0..cols {
                    self.data.swap(found * cols + c, lead * cols + c);
                }
            }
            let inv = inv_mod(self[(lead, col)], p);
            if inv != 1 {
                for c in col..cols {
                    let v = &mut self.data[lead * cols + c];
                    *v = *v * inv % p;
                }
            }
            for r in 0..self.rows {
                if r != lead {
                    let f = self[(r, col)];
                    if f != 0 {
                        self.row_sub_scaled(r, lead, f);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Rref {
        let mut reduced = self.clone();
        let pivot_columns = reduced.rref_in_place();
        Rref {
            rank: pivot_columns.len(),
            reduced,
            pivot_columns,
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right kernel `{ v : self * v = 0 }`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let Rref {
            reduced,
            pivot_columns,
            ..
        } = self.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_columns {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1;
                for (t, &pc) in pivot_columns.iter().enumerate() {
                    v[pc] = (p - reduced[(t, free)]) % p;
                }
                v
            })
            .collect()
    }

    /// True when the matrix is square and invertible.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// The inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(self.p, n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)]
            } else {
                u32::from(c - n == r)
            }
        });
        let Rref {
            reduced,
            pivot_columns,
            ..
        } = aug.rref();
        if pivot_columns.iter().take_while(|&&c| c < n).count() != n {
            return None;
        }
        Some(Matrix::from_fn(self.p, n, n, |r, c| reduced[(r, c + n)]))
    }
}

/// Dimension of the solution space of the homogeneous system `constraint * x = 0`.
pub fn solve_intertwiner_dim(constraint: &Matrix) -> usize {
    constraint.cols() - constraint.rank()
}

/// A subspace of `F_p^d` stored by its canonical basis.
///
/// The basis vectors are the rows of a matrix in reduced row-echelon form;
/// read column-wise (see [`SubspaceBasis::basis_columns`]) this is the
/// reduced column-echelon basis. Two values compare equal exactly when they
/// span the same subspace.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    rows: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for SubspaceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in F_{}^{}) {:?}",
            self.dim(),
            self.rows.p,
            self.ambient_dim(),
            self.rows.to_rows()
        )
    }
}

impl SubspaceBasis {
    pub fn zero(p: u32, ambient_dim: usize) -> Self {
        SubspaceBasis {
            rows: Matrix::zeros(p, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: u32, ambient_dim: usize) -> Self {
        SubspaceBasis {
            rows: Matrix::identity(p, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the rows of `vectors`.
    pub fn span_rows(vectors: &Matrix) -> Self {
        let mut m = vectors.clone();
        let pivots = m.rref_in_place();
        m.data.truncate(pivots.len() * m.cols);
        m.rows = pivots.len();
        SubspaceBasis { rows: m, pivots }
    }

    /// Span of the columns of `vectors`.
    pub fn span_columns(vectors: &Matrix) -> Self {
        Self::span_rows(&vectors.transpose())
    }

    pub fn p(&self) -> u32 {
        self.rows.p
    }

    pub fn dim(&self) -> usize {
        self.rows.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.rows.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as rows (reduced row-echelon form).
    pub fn basis_rows(&self) -> &Matrix {
        &self.rows
    }

    /// Basis vectors as columns (reduced column-echelon form).
    pub fn basis_columns(&self) -> Matrix {
        self.rows.transpose()
    }

    /// Coordinates not occupied by a pivot; they index a basis of the quotient.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduces `v` modulo the subspace; the result vanishes on every pivot.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p();
        let mut out = v.to_vec();
        for (t, &pc) in self.pivots.iter().enumerate() {
            let f = out[pc];
            if f != 0 {
                let neg = p - f;
                for (o, &b) in out.iter_mut().zip(self.rows.row(t)) {
                    if b != 0 {
                        *o = (*o + neg * b) % p;
                    }
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &SubspaceBasis) -> bool {
        (0..other.dim()).all(|r| self.contains_vector(other.rows.row(r)))
    }

    /// Coordinates of `v` in this basis, assuming `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    /// Image of the subspace under `map` (shape `target_dim x ambient_dim`).
    pub fn image(&self, map: &Matrix) -> SubspaceBasis {
        assert_eq!(map.cols(), self.ambient_dim());
        let imgs = self.rows.mul(&map.transpose());
        SubspaceBasis::span_rows(&imgs)
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn join(&self, other: &SubspaceBasis) -> SubspaceBasis {
        SubspaceBasis::span_rows(&self.rows.vstack(&other.rows))
    }
}

/// Lazily yields every subspace of `F_p^ambient_dim` containing `lower_bound`.
///
/// Subspaces of the quotient by `lower_bound` are produced as reduced
/// echelon matrices over the complement coordinates (pivot pattern, then
/// free entries counted in base `p`) and pulled back by adjoining the lower
/// bound. Each subspace appears exactly once.
pub fn enumerate_subspaces(
    ambient_dim: usize,
    p: u32,
    lower_bound: &SubspaceBasis,
) -> SubspaceIter {
    SubspaceIter::new(ambient_dim, p, lower_bound.clone(), None)
}

/// Same as [`enumerate_subspaces`] restricted to subspaces of dimension `dim`.
pub fn enumerate_subspaces_of_dim(
    ambient_dim: usize,
    p: u32,
    lower_bound: &SubspaceBasis,
    dim: usize,
) -> SubspaceIter {
    SubspaceIter::new(ambient_dim, p, lower_bound.clone(), Some(dim))
}

pub struct SubspaceIter {
    p: u32,
    lower: SubspaceBasis,
    coords: Vec<usize>,
    rank: usize,
    max_rank: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    counter: Vec<u32>,
    done: bool,
}

impl SubspaceIter {
    fn new(ambient_dim: usize, p: u32, lower: SubspaceBasis, dim: Option<usize>) -> Self {
        assert_eq!(lower.ambient_dim(), ambient_dim, "lower bound lives elsewhere");
        assert_eq!(lower.p(), p, "lower bound over a different field");
        let coords = lower.complement_coordinates();
        let m = coords.len();
        let (lo, hi, empty) = match dim {
            None => (0, m, false),
            Some(k) if k >= lower.dim() && k - lower.dim() <= m => {
                (k - lower.dim(), k - lower.dim(), false)
            }
            Some(_) => (0, 0, true),
        };
        let mut it = SubspaceIter {
            p,
            lower,
            coords,
            rank: lo,
            max_rank: hi,
            pivots: Vec::new(),
            free: Vec::new(),
            counter: Vec::new(),
            done: empty,
        };
        if !empty {
            it.start_rank();
        }
        it
    }

    fn start_rank(&mut self) {
        self.pivots = (0..self.rank).collect();
        self.refresh_free();
    }

    fn refresh_free(&mut self) {
        let m = self.coords.len();
        self.free.clear();
        for (t, &pc) in self.pivots.iter().enumerate() {
            for c in pc + 1..m {
                if !self.pivots.contains(&c) {
                    self.free.push((t, c));
                }
            }
        }
        self.counter = vec![0; self.free.len()];
    }

    fn next_pivots(&mut self) -> bool {
        let m = self.coords.len();
        let r = self.pivots.len();
        let mut i = r;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < m - r + i {
                self.pivots[i] += 1;
                for k in i + 1..r {
                    self.pivots[k] = self.pivots[k - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn advance(&mut self) {
        for digit in self.counter.iter_mut() {
            *digit += 1;
            if *digit < self.p {
                return;
            }
            *digit = 0;
        }
        if self.next_pivots() {
            self.refresh_free();
            return;
        }
        if self.rank < self.max_rank {
            self.rank += 1;
            self.start_rank();
        } else {
            self.done = true;
        }
    }

    fn current(&self) -> SubspaceBasis {
        let d = self.lower.ambient_dim();
        if self.rank == 0 {
            return self.lower.clone();
        }
        let mut extra = Matrix::zeros(self.p, self.rank, d);
        for (t, &pc) in self.pivots.iter().enumerate() {
            extra[(t, self.coords[pc])] = 1;
        }
        for (&(t, c), &v) in self.free.iter().zip(&self.counter) {
            extra[(t, self.coords[c])] = v;
        }
        SubspaceBasis::span_rows(&self.lower.rows.vstack(&extra))
    }
}

impl Iterator for SubspaceIter {
    type Item = SubspaceBasis;

    fn next(&mut self) -> Option<SubspaceBasis> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}

/// Number of `k`-dimensional subspaces of `F_p^d`.
pub fn gaussian_binomial(d: usize, k: usize, p: u32) -> Result<u128> {
    if k > d {
        return Err(Error::Domain(format!(
            "gaussian binomial needs k <= d, got k = {k}, d = {d}"
        )));
    }
    let q = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((d - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    Ok(num / den)
}
