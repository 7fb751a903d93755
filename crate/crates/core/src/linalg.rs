//! Dense matrices over the cyclotomic field and the lattice of subspaces.
//!
//! Everything downstream — validity checks, algebra computations, graded
//! prolongations — reduces to exact row reduction here: ranks, kernels,
//! solving inhomogeneous systems, and sums/intersections/memberships of
//! subspaces represented by canonical reduced-row-echelon bases.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exactnum::{NumError, Scalar};

/// Errors from shape-checked matrix and subspace operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left_rows}x{left_cols} against {right_rows}x{right_cols}")]
    DimMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("ragged rows: row {row} has length {found}, expected {expected}")]
    RaggedRows { row: usize, expected: usize, found: usize },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("vector length {found} does not match ambient dimension {expected}")]
    VectorLength { expected: usize, found: usize },
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Dense row-major matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Scalar>>", into = "Vec<Vec<Scalar>>")]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl TryFrom<Vec<Vec<Scalar>>> for Mat {
    type Error = LinalgError;
    fn try_from(rows: Vec<Vec<Scalar>>) -> Result<Self, Self::Error> {
        Mat::from_rows(rows)
    }
}

impl From<Mat> for Vec<Vec<Scalar>> {
    fn from(m: Mat) -> Self {
        (0..m.rows).map(|i| m.row(i).to_vec()).collect()
    }
}

impl Mat {
    /// Builds a matrix from row-major data; panics when the length is wrong
    /// (programming error, not input error).
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data length mismatch");
        Mat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::new(rows, cols, vec![Scalar::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat::new(rows, cols, data)
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(LinalgError::RaggedRows {
                    row: i,
                    expected: c,
                    found: row.len(),
                });
            }
        }
        Ok(Mat::new(r, c, rows.into_iter().flatten().collect()))
    }

    /// Builds a matrix from shorthand entry strings such as `"i/sqrt2"`.
    pub fn from_shorthand(rows: &[&[&str]]) -> Result<Self, LinalgError> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| Scalar::from_str(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Mat::from_rows(parsed)
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Mat::zeros(n, n);
        for (k, e) in entries.iter().enumerate() {
            m.set(k, k, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Row-major flattening of all entries.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        Mat::new(rows, cols, data)
    }

    fn shape_check(&self, rhs: &Mat, op: &'static str, need_mul: bool) -> Result<(), LinalgError> {
        let ok = if need_mul {
            self.cols == rhs.rows
        } else {
            self.rows == rhs.rows && self.cols == rhs.cols
        };
        if ok {
            Ok(())
        } else {
            Err(LinalgError::DimMismatch {
                op,
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            })
        }
    }

    pub fn add(&self, rhs: &Mat) -> Result<Mat, LinalgError> {
        self.shape_check(rhs, "add", false)?;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Mat::new(self.rows, self.cols, data))
    }

    pub fn sub(&self, rhs: &Mat) -> Result<Mat, LinalgError> {
        self.shape_check(rhs, "sub", false)?;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Mat::new(self.rows, self.cols, data))
    }

    pub fn neg(&self) -> Mat {
        Mat::new(self.rows, self.cols, self.data.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat::new(self.rows, self.cols, self.data.iter().map(|a| a * s).collect())
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat, LinalgError> {
        self.shape_check(rhs, "mul", true)?;
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::VectorLength {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj(&self) -> Mat {
        Mat::new(self.rows, self.cols, self.data.iter().map(Scalar::conj).collect())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat {
        self.transpose().conj()
    }

    pub fn commutator(&self, rhs: &Mat) -> Result<Mat, LinalgError> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    pub fn trace(&self) -> Result<Scalar, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).fold(Scalar::zero(), |acc, k| acc + self.get(k, k)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn hstack(&self, rhs: &Mat) -> Result<Mat, LinalgError> {
        if self.rows != rhs.rows {
            return Err(LinalgError::DimMismatch {
                op: "hstack",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        Ok(Mat::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, rhs: &Mat) -> Result<Mat, LinalgError> {
        if self.cols != rhs.cols {
            return Err(LinalgError::DimMismatch {
                op: "vstack",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Ok(Mat::new(self.rows + rhs.rows, self.cols, data))
    }

    /// Copy of the `h x w` block with top-left corner `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Mat {
        assert!(r0 + h <= self.rows && c0 + w <= self.cols, "block out of range");
        Mat::from_fn(h, w, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(p, lead);
            let inv = m
                .get(lead, col)
                .inv()
                .expect("pivot is nonzero by construction");
            for j in col..m.cols {
                let v = m.get(lead, j) * &inv;
                m.set(lead, j, v);
            }
            for r in 0..m.rows {
                if r == lead || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = m.get(r, j) - &(m.get(lead, j) * &factor);
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space, as a canonical subspace of the column coordinate space.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<usize> = pivots.clone();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &p) in pivot_set.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.cols, basis).expect("kernel vectors match ambient")
    }

    /// Inverse of a square matrix, or `Singular`/`NotSquare` errors.
    pub fn inverse(&self) -> Result<Mat, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
            return Err(LinalgError::Singular);
        }
        Ok(r.block(0, n, n, n))
    }

    pub fn entries(&self) -> impl Iterator<Item = &Scalar> {
        self.data.iter()
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(Scalar::to_string).collect())
            .collect();
        let mut widths = vec![0usize; self.cols];
        for row in &rendered {
            for (j, cell) in row.iter().enumerate() {
                widths[j] = widths[j].max(cell.len());
            }
        }
        for (i, row) in rendered.iter().enumerate() {
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{cell:>width$}", width = widths[j])?;
            }
            write!(f, "]")?;
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Particular solution plus the solution set's direction space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Vec<Scalar>,
    pub kernel: Subspace,
}

/// Solves `a * x = rhs`; `Ok(None)` means the system is inconsistent.
pub fn solve_linear(a: &Mat, rhs: &[Scalar]) -> Result<Option<LinearSolution>, LinalgError> {
    if rhs.len() != a.rows() {
        return Err(LinalgError::VectorLength {
            expected: a.rows(),
            found: rhs.len(),
        });
    }
    let rhs_col = Mat::new(rhs.len(), 1, rhs.to_vec());
    let aug = a.hstack(&rhs_col)?;
    let (r, pivots) = aug.rref();
    if pivots.contains(&a.cols()) {
        return Ok(None);
    }
    let mut particular = vec![Scalar::zero(); a.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = r.get(row, a.cols()).clone();
    }
    Ok(Some(LinearSolution {
        particular,
        kernel: a.kernel(),
    }))
}

/// Linear subspace of a coordinate space, stored as a canonical
/// reduced-row-echelon basis so that equality of values is equality of data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SubspaceRepr", into = "SubspaceRepr")]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl TryFrom<SubspaceRepr> for Subspace {
    type Error = LinalgError;
    fn try_from(r: SubspaceRepr) -> Result<Self, Self::Error> {
        Subspace::from_vectors(r.ambient, r.basis)
    }
}

impl From<Subspace> for SubspaceRepr {
    fn from(s: Subspace) -> Self {
        SubspaceRepr {
            ambient: s.ambient,
            basis: s.basis,
        }
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_vectors(
            ambient,
            (0..ambient)
                .map(|k| {
                    let mut v = vec![Scalar::zero(); ambient];
                    v[k] = Scalar::one();
                    v
                })
                .collect(),
        )
        .expect("standard basis is well-formed")
    }

    /// Canonicalizes spanning vectors into an RREF basis.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(LinalgError::VectorLength {
                    expected: ambient,
                    found: v.len(),
                });
            }
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let m = Mat::from_rows(vectors)?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace { ambient, basis })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    fn ambient_check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// Exact membership test by reduction against the echelon basis.
    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::VectorLength {
                expected: self.ambient,
                found: v.len(),
            });
        }
        let mut w = v.to_vec();
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            let coeff = w[pivot].clone();
            if coeff.is_zero() {
                continue;
            }
            for (wi, ri) in w.iter_mut().zip(row) {
                *wi = &*wi - &(&coeff * ri);
            }
        }
        Ok(w.iter().all(Scalar::is_zero))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.ambient_check(other)?;
        for row in &self.basis {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.ambient_check(other)?;
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.ambient, vecs)
    }

    /// Intersection via the kernel of `[U^T | -V^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.ambient_check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let u = Mat::from_rows(self.basis.clone())?.transpose();
        let v = Mat::from_rows(other.basis.clone())?.transpose().neg();
        let stacked = u.hstack(&v)?;
        let ker = stacked.kernel();
        let mut vecs = Vec::new();
        for k in ker.basis() {
            let coeffs = &k[..self.dim()];
            let mut w = vec![Scalar::zero(); self.ambient];
            for (c, row) in coeffs.iter().zip(&self.basis) {
                if c.is_zero() {
                    continue;
                }
                for (wi, ri) in w.iter_mut().zip(row) {
                    *wi = &*wi + &(c * ri);
                }
            }
            vecs.push(w);
        }
        Subspace::from_vectors(self.ambient, vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> Scalar {
        Scalar::from_str(s).unwrap()
    }

    #[test]
    fn rref_is_idempotent_and_normalizes_pivots() {
        let m = Mat::from_shorthand(&[
            &["2", "4", "1"],
            &["1", "2", "i"],
            &["0", "0", "1"],
        ])
        .unwrap();
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 2]);
        let (r2, pivots2) = r.rref();
        assert_eq!(r, r2);
        assert_eq!(pivots, pivots2);
        assert_eq!(*r.get(0, 0), Scalar::one());
        assert_eq!(*r.get(1, 2), Scalar::one());
    }

    #[test]
    fn rank_and_kernel_of_rank_one_row() {
        let m = Mat::from_shorthand(&[&["1", "2", "3"]]).unwrap();
        assert_eq!(m.rank(), 1);
        let ker = m.kernel();
        assert_eq!(ker.dim(), 2);
        assert!(ker.contains(&[sc("-2"), sc("1"), sc("0")]).unwrap());
        assert!(ker.contains(&[sc("-3"), sc("0"), sc("1")]).unwrap());
        assert!(!ker.contains(&[sc("1"), sc("0"), sc("0")]).unwrap());
    }

    #[test]
    fn inverse_of_swap_is_itself_and_singular_fails() {
        let swap = Mat::from_shorthand(&[&["0", "1"], &["1", "0"]]).unwrap();
        assert_eq!(swap.inverse().unwrap(), swap);
        let sing = Mat::from_shorthand(&[&["1", "2"], &["2", "4"]]).unwrap();
        assert_eq!(sing.inverse(), Err(LinalgError::Singular));
        let rect = Mat::zeros(2, 3);
        assert!(matches!(rect.inverse(), Err(LinalgError::NotSquare { .. })));
    }

    #[test]
    fn inverse_with_irrational_entries() {
        let m = Mat::from_shorthand(&[&["1/sqrt2", "i"], &["0", "2"]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Mat::identity(2));
        assert_eq!(*inv.get(0, 0), sc("sqrt2"));
    }

    #[test]
    fn solve_consistent_system_returns_particular_and_kernel() {
        // x + y = 3 with a free variable.
        let a = Mat::from_shorthand(&[&["1", "1"]]).unwrap();
        let sol = solve_linear(&a, &[sc("3")]).unwrap().unwrap();
        assert_eq!(a.apply(&sol.particular).unwrap(), vec![sc("3")]);
        assert_eq!(sol.kernel.dim(), 1);
        assert!(sol.kernel.contains(&[sc("-1"), sc("1")]).unwrap());
    }

    #[test]
    fn solve_inconsistent_diagonal_moment_system() {
        // One diagonal generator diag(1,2,3), flattened as a single column;
        // the target diag(1,1,2) is not a multiple of it.
        let gen = Mat::diagonal(&[sc("1"), sc("2"), sc("3")]);
        let a = Mat::new(9, 1, gen.flatten());
        let target = Mat::diagonal(&[sc("1"), sc("1"), sc("2")]);
        assert_eq!(solve_linear(&a, &target.flatten()).unwrap(), None);
    }

    #[test]
    fn solve_rejects_wrong_rhs_length() {
        let a = Mat::identity(2);
        assert!(matches!(
            solve_linear(&a, &[sc("1")]),
            Err(LinalgError::VectorLength { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn subspace_sum_intersection_dimension_formula() {
        let e = |k: usize| {
            let mut v = vec![Scalar::zero(); 4];
            v[k] = Scalar::one();
            v
        };
        let u = Subspace::from_vectors(4, vec![e(0), e(1)]).unwrap();
        let v = Subspace::from_vectors(4, vec![e(1), e(2)]).unwrap();
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&e(1)).unwrap());
        assert_eq!(u.dim() + v.dim(), s.dim() + i.dim());
    }

    #[test]
    fn membership_in_non_axis_span() {
        let u = Subspace::from_vectors(
            3,
            vec![
                vec![sc("1"), sc("1"), sc("0")],
                vec![sc("0"), sc("1"), sc("1")],
            ],
        )
        .unwrap();
        assert!(u.contains(&[sc("1"), sc("0"), sc("-1")]).unwrap());
        assert!(!u.contains(&[sc("1"), sc("0"), sc("0")]).unwrap());
    }

    #[test]
    fn canonical_bases_make_equality_structural() {
        let a = Subspace::from_vectors(2, vec![vec![sc("2"), sc("2")]]).unwrap();
        let b = Subspace::from_vectors(2, vec![vec![sc("i"), sc("i")]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_with_zero_subspace_is_zero() {
        let u = Subspace::full(3);
        let z = Subspace::zero(3);
        assert_eq!(u.intersect(&z).unwrap(), z);
        assert_eq!(u.sum(&z).unwrap(), u);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let u = Subspace::full(3);
        let v = Subspace::full(4);
        assert!(matches!(
            u.sum(&v),
            Err(LinalgError::AmbientMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn hermitian_and_symmetric_predicates() {
        let h = Mat::from_shorthand(&[&["1", "i"], &["-i", "2"]]).unwrap();
        assert!(h.is_hermitian());
        assert!(!h.is_symmetric());
        let s = Mat::from_shorthand(&[&["1", "i"], &["i", "0"]]).unwrap();
        assert!(s.is_symmetric());
        assert!(!s.is_hermitian());
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let rows = vec![vec![Scalar::one()], vec![Scalar::one(), Scalar::zero()]];
        assert!(matches!(
            Mat::from_rows(rows),
            Err(LinalgError::RaggedRows { row: 1, .. })
        ));
    }
}
