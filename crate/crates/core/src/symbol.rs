//! Symbol data and its pointwise algebraic invariants.
//!
//! A symbol is a Hermitian invertible `m x m` matrix `H` together with `r`
//! independent matrices `C_1..C_r` such that every `conj(H)*C_i` is symmetric.
//! This module decides validity, computes the signature of `H`, the two
//! regularity routes, recoverability (vanishing of the first Spencer
//! prolongation of `span{C_i}`), the distinguished matrix algebra `A`, and
//! the flat degree-zero piece spanned by block-diagonal extensions of `A`.
//!
//! Degree-zero matrices live in the conformal-symplectic model: a `2m x 2m`
//! block matrix `[[X11, X12], [X21, X22]]` plus a multiple `c*I`, subject to
//! `X22 = -H^-1 * X11^T * H`, `H*X21` symmetric, and `conj(H)*X12` symmetric.
//! [`CspElement`] stores the pure block part and the scale `c` separately, so
//! flattened coordinates have dimension `4m^2 + 1`.

use serde::{Deserialize, Serialize};

use crate::exactnum::{NumError, Scalar};
use crate::linalg::{LinalgError, Mat, Subspace};

/// Individual reasons a symbol fails validity.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolViolation {
    #[error("m must be at least 1")]
    MZero,
    #[error("r must be at least 1")]
    RZero,
    #[error("r = {r} exceeds the maximum m(m+1)/2 = {max}")]
    RTooLarge { r: usize, max: usize },
    #[error("H has shape {rows}x{cols}, expected {m}x{m}")]
    HShape { rows: usize, cols: usize, m: usize },
    #[error("C has {found} matrices, expected r = {r}")]
    CCount { found: usize, r: usize },
    #[error("C[{index}] has shape {rows}x{cols}, expected {m}x{m}")]
    CShape {
        index: usize,
        rows: usize,
        cols: usize,
        m: usize,
    },
    #[error("H is not Hermitian")]
    HNotHermitian,
    #[error("H is singular")]
    HSingular,
    #[error("conj(H)*C[{index}] is not symmetric")]
    CNotPaired { index: usize },
    #[error("the C matrices are linearly dependent")]
    CDependent,
}

fn join_violations(v: &[SymbolViolation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// Errors from symbol-level computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolError {
    #[error("invalid symbol: {}", join_violations(.0))]
    Invalid(Vec<SymbolViolation>),
    #[error("operation requires r = 1, symbol has r = {r}")]
    NotSingleGenerator { r: usize },
    #[error("basis-change matrix must be invertible and {m}x{m}")]
    BadTransform { m: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Matrix encoding of a symbol: `H` Hermitian invertible, `C_i` paired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CRSymbolData {
    pub m: usize,
    pub r: usize,
    #[serde(rename = "H")]
    pub h: Mat,
    #[serde(rename = "C")]
    pub c: Vec<Mat>,
}

impl CRSymbolData {
    pub fn new(h: Mat, c: Vec<Mat>) -> Self {
        CRSymbolData {
            m: h.rows(),
            r: c.len(),
            h,
            c,
        }
    }

    /// Collects every validity violation (empty means valid).
    pub fn validate(&self) -> Vec<SymbolViolation> {
        let mut out = Vec::new();
        let m = self.m;
        if m == 0 {
            out.push(SymbolViolation::MZero);
            return out;
        }
        if self.r == 0 {
            out.push(SymbolViolation::RZero);
        }
        let max = m * (m + 1) / 2;
        if self.r > max {
            out.push(SymbolViolation::RTooLarge { r: self.r, max });
        }
        if self.h.rows() != m || self.h.cols() != m {
            out.push(SymbolViolation::HShape {
                rows: self.h.rows(),
                cols: self.h.cols(),
                m,
            });
            return out;
        }
        if self.c.len() != self.r {
            out.push(SymbolViolation::CCount {
                found: self.c.len(),
                r: self.r,
            });
        }
        let mut shapes_ok = true;
        for (index, ci) in self.c.iter().enumerate() {
            if ci.rows() != m || ci.cols() != m {
                out.push(SymbolViolation::CShape {
                    index,
                    rows: ci.rows(),
                    cols: ci.cols(),
                    m,
                });
                shapes_ok = false;
            }
        }
        if !shapes_ok {
            return out;
        }
        if !self.h.is_hermitian() {
            out.push(SymbolViolation::HNotHermitian);
        }
        if self.h.inverse().is_err() {
            out.push(SymbolViolation::HSingular);
        }
        let hc = self.h.conj();
        for (index, ci) in self.c.iter().enumerate() {
            let paired = hc.mul(ci).expect("shapes checked above");
            if !paired.is_symmetric() {
                out.push(SymbolViolation::CNotPaired { index });
            }
        }
        if !self.c.is_empty() {
            let stacked: Vec<Vec<Scalar>> = self.c.iter().map(Mat::flatten).collect();
            let span = Subspace::from_vectors(m * m, stacked).expect("shapes checked above");
            if span.dim() < self.c.len() {
                out.push(SymbolViolation::CDependent);
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<(), SymbolError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(SymbolError::Invalid(v))
        }
    }

    /// Signature `(p, q)` of the Hermitian form `H`.
    pub fn signature(&self) -> Result<(usize, usize), SymbolError> {
        hermitian_signature(&self.h)
    }

    /// Span of the `C_i`, flattened row-major into `m^2` coordinates.
    pub fn c_span(&self) -> Result<Subspace, SymbolError> {
        Ok(Subspace::from_vectors(
            self.m * self.m,
            self.c.iter().map(Mat::flatten).collect(),
        )?)
    }

    /// Span of the `conj(C_i)`.
    pub fn c_conj_span(&self) -> Result<Subspace, SymbolError> {
        Ok(Subspace::from_vectors(
            self.m * self.m,
            self.c.iter().map(|ci| ci.conj().flatten()).collect(),
        )?)
    }

    /// Regularity: every `C_i*conj(C_j)*C_k + C_k*conj(C_j)*C_i` stays in
    /// `span{C_s}`.
    pub fn is_regular(&self) -> Result<bool, SymbolError> {
        let span = self.c_span()?;
        for i in 0..self.r {
            for k in i..self.r {
                for j in 0..self.r {
                    let cj_bar = self.c[j].conj();
                    let t = self.c[i]
                        .mul(&cj_bar)?
                        .mul(&self.c[k])?
                        .add(&self.c[k].mul(&cj_bar)?.mul(&self.c[i])?)?;
                    if !span.contains(&t.flatten())? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Second regularity route for a single generator: the cube of the
    /// antilinear map `v -> C*conj(v)` is `(C*conj(C)*C) o conj`, so
    /// regularity is proportionality of `C*conj(C)*C` to `C`.
    pub fn is_regular_r1_cube(&self) -> Result<bool, SymbolError> {
        if self.r != 1 {
            return Err(SymbolError::NotSingleGenerator { r: self.r });
        }
        let c = &self.c[0];
        let cube = c.mul(&c.conj())?.mul(c)?;
        let line = Subspace::from_vectors(self.m * self.m, vec![c.flatten()])?;
        Ok(line.contains(&cube.flatten())?)
    }

    /// Recoverability: the first Spencer prolongation of `span{C_i}` is zero.
    pub fn is_recoverable(&self) -> Result<bool, SymbolError> {
        Ok(first_prolongation(&self.c)?.is_zero())
    }

    /// The algebra `A` of `m x m` matrices `alpha` satisfying both symmetric
    /// compatibility systems
    /// `alpha*W_i + W_i*alpha^T in span{W_s}` (with `W_i = C_i*H^-1`) and
    /// `M_i*alpha + alpha^T*M_i in span{M_s}` (with `M_i = H*conj(C_i)`).
    pub fn compute_a(&self) -> Result<Subspace, SymbolError> {
        self.ensure_valid()?;
        let m = self.m;
        let r = self.r;
        let mm = m * m;
        let h_inv = self.h.inverse()?;
        let w: Vec<Mat> = self
            .c
            .iter()
            .map(|ci| ci.mul(&h_inv))
            .collect::<Result<_, _>>()?;
        let mk: Vec<Mat> = self
            .c
            .iter()
            .map(|ci| self.h.mul(&ci.conj()))
            .collect::<Result<_, _>>()?;
        let unknowns = mm + 2 * r * r;
        let rows = 2 * r * mm;
        let mut sys = Mat::zeros(rows, unknowns);
        // Columns for the alpha coordinates, evaluated on basis matrices.
        for p in 0..m {
            for q in 0..m {
                let mut basis = Mat::zeros(m, m);
                basis.set(p, q, Scalar::one());
                let col = p * m + q;
                for i in 0..r {
                    let lhs1 = basis.mul(&w[i])?.add(&w[i].mul(&basis.transpose())?)?;
                    let lhs2 = mk[i].mul(&basis)?.add(&basis.transpose().mul(&mk[i])?)?;
                    for (row_off, val) in lhs1.flatten().into_iter().enumerate() {
                        sys.set(i * mm + row_off, col, val);
                    }
                    for (row_off, val) in lhs2.flatten().into_iter().enumerate() {
                        sys.set((r + i) * mm + row_off, col, val);
                    }
                }
            }
        }
        // Columns for the eta and mu coefficients.
        for i in 0..r {
            for s in 0..r {
                let eta_col = mm + i * r + s;
                for (row_off, val) in w[s].flatten().into_iter().enumerate() {
                    sys.set(i * mm + row_off, eta_col, -val);
                }
                let mu_col = mm + r * r + i * r + s;
                for (row_off, val) in mk[s].flatten().into_iter().enumerate() {
                    sys.set((r + i) * mm + row_off, mu_col, -val);
                }
            }
        }
        let kernel = sys.kernel();
        let alphas: Vec<Vec<Scalar>> = kernel
            .basis()
            .iter()
            .map(|v| v[..mm].to_vec())
            .collect();
        Ok(Subspace::from_vectors(mm, alphas)?)
    }

    /// Basis of the flat degree-zero piece: block-diagonal extensions
    /// `diag(alpha, -H^-1*alpha^T*H)` of a basis of `A`, plus the scale
    /// element. Its dimension is `dim A + 1`.
    pub fn compute_g00(&self) -> Result<Vec<CspElement>, SymbolError> {
        let a = self.compute_a()?;
        let mut out = Vec::with_capacity(a.dim() + 1);
        for alpha_flat in a.basis() {
            let alpha = Mat::from_flat(self.m, self.m, alpha_flat.clone());
            out.push(self.zero_zero_extension(&alpha)?);
        }
        out.push(CspElement::scale_element(self.m));
        Ok(out)
    }

    /// Embeds an `m x m` matrix as `diag(alpha, -H^-1*alpha^T*H)` with no
    /// scale part.
    pub fn zero_zero_extension(&self, alpha: &Mat) -> Result<CspElement, SymbolError> {
        let h_inv = self.h.inverse()?;
        let lower = h_inv.mul(&alpha.transpose())?.mul(&self.h)?.neg();
        let mut block = Mat::zeros(2 * self.m, 2 * self.m);
        block.set_block(0, 0, alpha);
        block.set_block(self.m, self.m, &lower);
        Ok(CspElement {
            block,
            scale: Scalar::zero(),
        })
    }

    /// Degree-zero generator with upper-right part `C_i` and diagonal `omega`:
    /// `[[omega, C_i], [0, -H^-1*omega^T*H]]`.
    pub fn x_generator(&self, i: usize, omega: &Mat) -> Result<CspElement, SymbolError> {
        let h_inv = self.h.inverse()?;
        let lower = h_inv.mul(&omega.transpose())?.mul(&self.h)?.neg();
        let mut block = Mat::zeros(2 * self.m, 2 * self.m);
        block.set_block(0, 0, omega);
        block.set_block(0, self.m, &self.c[i]);
        block.set_block(self.m, self.m, &lower);
        Ok(CspElement {
            block,
            scale: Scalar::zero(),
        })
    }

    /// Mirror generator with lower-left part `conj(C_i)`; equals the
    /// involution image of [`CRSymbolData::x_generator`].
    pub fn y_generator(&self, i: usize, omega: &Mat) -> Result<CspElement, SymbolError> {
        Ok(self.x_generator(i, omega)?.involution())
    }

    /// Full degree-zero span: flat piece plus the `X`/`Y` generators with
    /// `omega = 0`. The list is a basis.
    pub fn full_degree_zero(&self) -> Result<Vec<CspElement>, SymbolError> {
        let mut out = self.compute_g00()?;
        let zero = Mat::zeros(self.m, self.m);
        for i in 0..self.r {
            out.push(self.x_generator(i, &zero)?);
        }
        for i in 0..self.r {
            out.push(self.y_generator(i, &zero)?);
        }
        Ok(out)
    }

    /// Aggregated invariant report.
    pub fn analyze(&self) -> Result<SymbolReport, SymbolError> {
        self.ensure_valid()?;
        let signature = self.signature()?;
        let regular = self.is_regular()?;
        let recoverable = self.is_recoverable()?;
        let a = self.compute_a()?;
        let g00 = self.compute_g00()?;
        let a_basis: Vec<Mat> = a
            .basis()
            .iter()
            .map(|v| Mat::from_flat(self.m, self.m, v.clone()))
            .collect();
        Ok(SymbolReport {
            m: self.m,
            r: self.r,
            signature,
            regular,
            recoverable,
            dim_a: a.dim(),
            dim_g00: g00.len(),
            a_basis,
            g00_basis: g00,
        })
    }
}

/// Invariants of a single symbol, in one serializable bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolReport {
    pub m: usize,
    pub r: usize,
    pub signature: (usize, usize),
    pub regular: bool,
    pub recoverable: bool,
    #[serde(rename = "dimA")]
    pub dim_a: usize,
    #[serde(rename = "dimG00")]
    pub dim_g00: usize,
    #[serde(rename = "A_basis")]
    pub a_basis: Vec<Mat>,
    #[serde(rename = "G00_basis")]
    pub g00_basis: Vec<CspElement>,
}

/// Signature `(p, q)` of a Hermitian matrix via exact congruence
/// diagonalization; errors when the form is not Hermitian or is singular.
pub fn hermitian_signature(h: &Mat) -> Result<(usize, usize), SymbolError> {
    if !h.is_hermitian() {
        return Err(SymbolError::Invalid(vec![SymbolViolation::HNotHermitian]));
    }
    let m = h.rows();
    let mut g = h.clone();
    let mut pos = 0usize;
    let mut neg = 0usize;
    for t in 0..m {
        if g.get(t, t).is_zero() {
            if let Some(k) = (t + 1..m).find(|&k| !g.get(k, k).is_zero()) {
                congruence_swap(&mut g, t, k);
            } else {
                let mut found = None;
                'search: for k in t..m {
                    for l in (k + 1)..m {
                        if !g.get(k, l).is_zero() {
                            found = Some((k, l));
                            break 'search;
                        }
                    }
                }
                let Some((k, l)) = found else {
                    // The remaining block is zero: the form is singular.
                    break;
                };
                // Make the (k,k) entry nonzero: the new diagonal value is
                // 2*Re(lambda * G[k][l]), nonzero for lambda = 1 or i.
                let lambda = if g.get(k, l).re_part().sign() != 0 {
                    Scalar::one()
                } else {
                    Scalar::i()
                };
                congruence_add(&mut g, k, l, &lambda);
                if k != t {
                    congruence_swap(&mut g, t, k);
                }
            }
        }
        let d = g.get(t, t).clone();
        let d_real = d.to_real().expect("hermitian diagonal entries are real");
        match d_real.sign() {
            1 => pos += 1,
            -1 => neg += 1,
            _ => unreachable!("pivot is nonzero"),
        }
        let d_inv = d.inv().expect("pivot is nonzero");
        for j in t + 1..m {
            let gtj = g.get(t, j).clone();
            if gtj.is_zero() {
                continue;
            }
            let factor = -(gtj * &d_inv);
            congruence_add(&mut g, j, t, &factor);
        }
    }
    if pos + neg < m {
        return Err(SymbolError::Invalid(vec![SymbolViolation::HSingular]));
    }
    Ok((pos, neg))
}

/// Basis change `e_k <- e_k + lambda*e_l` on a Gram matrix:
/// `col_k += lambda*col_l`, then `row_k += conj(lambda)*row_l`.
fn congruence_add(g: &mut Mat, k: usize, l: usize, lambda: &Scalar) {
    let n = g.rows();
    for a in 0..n {
        let v = g.get(a, k) + &(lambda * g.get(a, l));
        g.set(a, k, v);
    }
    let lbar = lambda.conj();
    for b in 0..n {
        let v = g.get(k, b) + &(&lbar * g.get(l, b));
        g.set(k, b, v);
    }
}

/// Basis swap `e_k <-> e_l` on a Gram matrix.
fn congruence_swap(g: &mut Mat, k: usize, l: usize) {
    let n = g.rows();
    for a in 0..n {
        let x = g.get(a, k).clone();
        let y = g.get(a, l).clone();
        g.set(a, k, y);
        g.set(a, l, x);
    }
    for b in 0..n {
        let x = g.get(k, b).clone();
        let y = g.get(l, b).clone();
        g.set(k, b, y);
        g.set(l, b, x);
    }
}

/// First Spencer prolongation of the span of the given maps `V -> W`
/// (all of the same shape, columns indexing `V`): the space of linear maps
/// `f: V -> span{maps}` with `f(v1)v2 = f(v2)v1`. Coordinates are the
/// coefficients `t[j][s]` of `f(e_j)` in the given generators, flattened
/// with `j` outermost.
pub fn first_prolongation(maps: &[Mat]) -> Result<Subspace, LinalgError> {
    let n = maps.len();
    if n == 0 {
        return Ok(Subspace::zero(0));
    }
    let w_dim = maps[0].rows();
    let v_dim = maps[0].cols();
    for z in maps {
        if z.rows() != w_dim || z.cols() != v_dim {
            return Err(LinalgError::DimMismatch {
                op: "first_prolongation",
                left_rows: w_dim,
                left_cols: v_dim,
                right_rows: z.rows(),
                right_cols: z.cols(),
            });
        }
    }
    let unknowns = v_dim * n;
    let pairs = v_dim * v_dim.saturating_sub(1) / 2;
    let mut sys = Mat::zeros(pairs * w_dim, unknowns);
    let mut row0 = 0;
    for j in 0..v_dim {
        for k in j + 1..v_dim {
            for (s, z) in maps.iter().enumerate() {
                for t in 0..w_dim {
                    // f(e_j)e_k - f(e_k)e_j = 0.
                    sys.set(row0 + t, j * n + s, z.get(t, k).clone());
                    sys.set(row0 + t, k * n + s, -z.get(t, j));
                }
            }
            row0 += w_dim;
        }
    }
    Ok(sys.kernel())
}

/// Degree-zero element: pure block part plus `scale` times the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CspElement {
    pub block: Mat,
    pub scale: Scalar,
}

impl CspElement {
    pub fn zero(m: usize) -> Self {
        CspElement {
            block: Mat::zeros(2 * m, 2 * m),
            scale: Scalar::zero(),
        }
    }

    /// The scale direction: zero block, `c = 1`.
    pub fn scale_element(m: usize) -> Self {
        CspElement {
            block: Mat::zeros(2 * m, 2 * m),
            scale: Scalar::one(),
        }
    }

    /// The grading element: acts as `-1` on degree `-1` and `-2` on degree
    /// `-2`, i.e. zero block with scale `-1`.
    pub fn grading_element(m: usize) -> Self {
        CspElement {
            block: Mat::zeros(2 * m, 2 * m),
            scale: -Scalar::one(),
        }
    }

    pub fn m(&self) -> usize {
        self.block.rows() / 2
    }

    /// The matrix `block + scale*I` that acts on degree `-1`.
    pub fn realize(&self) -> Mat {
        let n = self.block.rows();
        self.block
            .add(&Mat::identity(n).scale(&self.scale))
            .expect("shapes agree")
    }

    /// Upper-right `m x m` block (bigrade `(0, 2)` part).
    pub fn part_plus(&self) -> Mat {
        let m = self.m();
        self.block.block(0, m, m, m)
    }

    /// Lower-left `m x m` block (bigrade `(0, -2)` part).
    pub fn part_minus(&self) -> Mat {
        let m = self.m();
        self.block.block(m, 0, m, m)
    }

    /// Upper-left `m x m` block (the `alpha` coordinate of the `(0, 0)` part).
    pub fn alpha(&self) -> Mat {
        let m = self.m();
        self.block.block(0, 0, m, m)
    }

    /// Projection keeping only the off-diagonal upper-right block.
    pub fn project_plus(&self) -> CspElement {
        let m = self.m();
        let mut block = Mat::zeros(2 * m, 2 * m);
        block.set_block(0, m, &self.part_plus());
        CspElement {
            block,
            scale: Scalar::zero(),
        }
    }

    /// Projection keeping only the off-diagonal lower-left block.
    pub fn project_minus(&self) -> CspElement {
        let m = self.m();
        let mut block = Mat::zeros(2 * m, 2 * m);
        block.set_block(m, 0, &self.part_minus());
        CspElement {
            block,
            scale: Scalar::zero(),
        }
    }

    /// Projection keeping the block-diagonal part and the scale.
    pub fn project_diag(&self) -> CspElement {
        let m = self.m();
        let mut block = Mat::zeros(2 * m, 2 * m);
        block.set_block(0, 0, &self.block.block(0, 0, m, m));
        block.set_block(m, m, &self.block.block(m, m, m, m));
        CspElement {
            block,
            scale: self.scale.clone(),
        }
    }

    /// The antilinear involution: swap the two `m`-blocks and conjugate.
    pub fn involution(&self) -> CspElement {
        let m = self.m();
        let c = self.block.conj();
        let mut block = Mat::zeros(2 * m, 2 * m);
        block.set_block(0, 0, &c.block(m, m, m, m));
        block.set_block(0, m, &c.block(m, 0, m, m));
        block.set_block(m, 0, &c.block(0, m, m, m));
        block.set_block(m, m, &c.block(0, 0, m, m));
        CspElement {
            block,
            scale: self.scale.conj(),
        }
    }

    /// Commutator; scales commute away, so the result is a pure block.
    pub fn commutator(&self, rhs: &CspElement) -> Result<CspElement, LinalgError> {
        Ok(CspElement {
            block: self.block.commutator(&rhs.block)?,
            scale: Scalar::zero(),
        })
    }

    /// Flattened coordinates: row-major block entries, then the scale
    /// (`4m^2 + 1` coordinates).
    pub fn flatten_coords(&self) -> Vec<Scalar> {
        let mut v = self.block.flatten();
        v.push(self.scale.clone());
        v
    }

    pub fn from_flat(m: usize, coords: &[Scalar]) -> Self {
        assert_eq!(coords.len(), 4 * m * m + 1, "coordinate length mismatch");
        CspElement {
            block: Mat::from_flat(2 * m, 2 * m, coords[..4 * m * m].to_vec()),
            scale: coords[4 * m * m].clone(),
        }
    }
}

/// Checks that an element's pure block satisfies the three model relations
/// for the given `H`.
pub fn csp_element_valid(h: &Mat, e: &CspElement) -> Result<bool, SymbolError> {
    let m = h.rows();
    if e.block.rows() != 2 * m || e.block.cols() != 2 * m {
        return Ok(false);
    }
    let h_inv = h.inverse()?;
    let a = e.alpha();
    let d = e.block.block(m, m, m, m);
    let want_d = h_inv.mul(&a.transpose())?.mul(h)?.neg();
    if d != want_d {
        return Ok(false);
    }
    let lower = h.mul(&e.part_minus())?;
    let upper = h.conj().mul(&e.part_plus())?;
    Ok(lower.is_symmetric() && upper.is_symmetric())
}

/// Canonical span of elements in flattened coordinates.
pub fn span_of_elements(m: usize, elems: &[CspElement]) -> Result<Subspace, LinalgError> {
    Subspace::from_vectors(
        4 * m * m + 1,
        elems.iter().map(CspElement::flatten_coords).collect(),
    )
}

/// Basis of the whole conformal-symplectic model for the given `H`:
/// `m^2` block-diagonal extensions, `m(m+1)/2` upper-right and as many
/// lower-left symmetric-paired directions, and the scale element —
/// `m(2m+1) + 1` elements in total.
pub fn csp_basis_elements(h: &Mat) -> Result<Vec<CspElement>, SymbolError> {
    let m = h.rows();
    let h_inv = h.inverse()?;
    let h_conj_inv = h.conj().inverse()?;
    let mut out = Vec::with_capacity(m * (2 * m + 1) + 1);
    for p in 0..m {
        for q in 0..m {
            let mut alpha = Mat::zeros(m, m);
            alpha.set(p, q, Scalar::one());
            let lower = h_inv.mul(&alpha.transpose())?.mul(h)?.neg();
            let mut block = Mat::zeros(2 * m, 2 * m);
            block.set_block(0, 0, &alpha);
            block.set_block(m, m, &lower);
            out.push(CspElement {
                block,
                scale: Scalar::zero(),
            });
        }
    }
    for p in 0..m {
        for q in p..m {
            let mut sym = Mat::zeros(m, m);
            sym.set(p, q, Scalar::one());
            if p != q {
                sym.set(q, p, Scalar::one());
            }
            let mut block = Mat::zeros(2 * m, 2 * m);
            block.set_block(0, m, &h_conj_inv.mul(&sym)?);
            out.push(CspElement {
                block,
                scale: Scalar::zero(),
            });
            let mut block = Mat::zeros(2 * m, 2 * m);
            block.set_block(m, 0, &h_inv.mul(&sym)?);
            out.push(CspElement {
                block,
                scale: Scalar::zero(),
            });
        }
    }
    out.push(CspElement::scale_element(m));
    Ok(out)
}

/// The `(0,0)` bigrade subspace of the model: block-diagonal extensions of
/// all `m x m` matrices plus the scale direction (`m^2 + 1` dimensional).
pub fn csp_zero_zero_subspace(h: &Mat) -> Result<Subspace, SymbolError> {
    let m = h.rows();
    let h_inv = h.inverse()?;
    let mut elems = Vec::with_capacity(m * m + 1);
    for p in 0..m {
        for q in 0..m {
            let mut alpha = Mat::zeros(m, m);
            alpha.set(p, q, Scalar::one());
            let lower = h_inv.mul(&alpha.transpose())?.mul(h)?.neg();
            let mut block = Mat::zeros(2 * m, 2 * m);
            block.set_block(0, 0, &alpha);
            block.set_block(m, m, &lower);
            elems.push(CspElement {
                block,
                scale: Scalar::zero(),
            });
        }
    }
    elems.push(CspElement::scale_element(m));
    Ok(span_of_elements(m, &elems)?)
}

/// Change of frame with invertible `T`: `H -> T^* H T`,
/// `C_i -> conj(T)^-1 C_i T`. Preserves validity and every invariant this
/// module computes.
pub fn transform_symbol(s: &CRSymbolData, t: &Mat) -> Result<CRSymbolData, SymbolError> {
    if t.rows() != s.m || t.cols() != s.m {
        return Err(SymbolError::BadTransform { m: s.m });
    }
    let t_conj_inv = t
        .conj()
        .inverse()
        .map_err(|_| SymbolError::BadTransform { m: s.m })?;
    let h = t.adjoint().mul(&s.h)?.mul(t)?;
    let c = s
        .c
        .iter()
        .map(|ci| t_conj_inv.mul(ci)?.mul(t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CRSymbolData::new(h, c))
}
