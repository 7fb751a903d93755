//! Graded prolongation of a degree-zero span over the Heisenberg base.
//!
//! The base is the two-step nilpotent algebra `n = n_{-2} + n_{-1}` with
//! `n_{-2}` one-dimensional (generator `z`), `n_{-1} = C^{2m}` with the
//! standard basis, and `[x, y] = omega(x, y) z` for the symplectic form
//! `omega(x, y) = y^T J x`, `J = i*[[0, H], [-H^T, 0]]`. A degree-zero
//! element acts on `n_{-1}` through [`CspElement::realize`] and on `n_{-2}`
//! by twice its scale.
//!
//! Degree `k >= 1` consists of the pairs of maps
//! `f: n_{-1} -> g_{k-1}, n_{-2} -> g_{k-2}` satisfying the derivation
//! identity `f([v, w]) = [f(v), w] + [v, f(w)]` on the base. The engine keeps,
//! per level, the matrices of `x -> [x, e_i]` and `x -> [x, z]` in canonical
//! bases, so each next level is one exact kernel computation.

use serde::{Deserialize, Serialize};

use crate::exactnum::Scalar;
use crate::linalg::{LinalgError, Mat, Subspace};
use crate::symbol::{span_of_elements, CRSymbolData, CspElement, SymbolError};

/// Errors from prolongation computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProlongError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

/// The Heisenberg-type base determined by `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeisenbergBase {
    m: usize,
    j: Mat,
}

impl HeisenbergBase {
    pub fn new(h: &Mat) -> Result<Self, ProlongError> {
        let m = h.rows();
        let mut j = Mat::zeros(2 * m, 2 * m);
        j.set_block(0, m, h);
        j.set_block(m, 0, &h.transpose().neg());
        Ok(HeisenbergBase {
            m,
            j: j.scale(&Scalar::i()),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `omega(x, y) = y^T J x`; the bracket on the base is
    /// `[x, y] = omega(x, y) z`.
    pub fn omega(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar, LinalgError> {
        let jx = self.j.apply(x)?;
        if y.len() != jx.len() {
            return Err(LinalgError::VectorLength {
                expected: jx.len(),
                found: y.len(),
            });
        }
        Ok(y.iter()
            .zip(&jx)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b))
    }

    /// `omega(e_s, e_t)` on standard basis vectors.
    pub fn omega_basis(&self, s: usize, t: usize) -> Scalar {
        self.j.get(t, s).clone()
    }
}

/// Element of the semidirect sum `n + g0`: `z`-coordinate, `n_{-1}` vector,
/// and degree-zero part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiElement {
    pub z: Scalar,
    pub v: Vec<Scalar>,
    pub x: CspElement,
}

impl SemiElement {
    pub fn zero(m: usize) -> Self {
        SemiElement {
            z: Scalar::zero(),
            v: vec![Scalar::zero(); 2 * m],
            x: CspElement::zero(m),
        }
    }

    pub fn from_z(m: usize, z: Scalar) -> Self {
        let mut e = SemiElement::zero(m);
        e.z = z;
        e
    }

    pub fn from_v(m: usize, v: Vec<Scalar>) -> Self {
        assert_eq!(v.len(), 2 * m, "degree -1 vector length");
        let mut e = SemiElement::zero(m);
        e.v = v;
        e
    }

    pub fn from_x(x: CspElement) -> Self {
        let m = x.m();
        let mut e = SemiElement::zero(m);
        e.x = x;
        e
    }

    /// Semidirect bracket: the base brackets to `omega(v1, v2) z`, degree
    /// zero acts by `realize` on `n_{-1}` and by twice the scale on `z`.
    pub fn bracket(&self, rhs: &SemiElement, base: &HeisenbergBase) -> Result<SemiElement, LinalgError> {
        let two = Scalar::from_int(2);
        let z = base.omega(&self.v, &rhs.v)?
            + &two * &self.x.scale * &rhs.z
            - &two * &rhs.x.scale * &self.z;
        let av = self.x.realize().apply(&rhs.v)?;
        let bv = rhs.x.realize().apply(&self.v)?;
        let v = av.iter().zip(&bv).map(|(a, b)| a - b).collect();
        Ok(SemiElement {
            z,
            v,
            x: self.x.commutator(&rhs.x)?,
        })
    }

    /// Flattened coordinates: `z`, then `n_{-1}`, then the degree-zero
    /// coordinates (`2 + 2m + 4m^2` total).
    pub fn flatten_coords(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(2 + self.v.len() + self.x.block.rows().pow(2));
        out.push(self.z.clone());
        out.extend(self.v.iter().cloned());
        out.extend(self.x.flatten_coords());
        out
    }
}

/// A degree-zero span over its Heisenberg base, with a canonicalized basis.
#[derive(Debug, Clone)]
pub struct GradedSpan {
    base: HeisenbergBase,
    g0: Vec<CspElement>,
}

impl GradedSpan {
    /// Canonicalizes the spanning elements (dependent input is fine).
    pub fn new(h: &Mat, spanning: &[CspElement]) -> Result<Self, ProlongError> {
        let m = h.rows();
        let span = span_of_elements(m, spanning)?;
        let g0 = span
            .basis()
            .iter()
            .map(|row| CspElement::from_flat(m, row))
            .collect();
        Ok(GradedSpan {
            base: HeisenbergBase::new(h)?,
            g0,
        })
    }

    /// The full degree-zero algebra of a symbol.
    pub fn from_symbol_full(s: &CRSymbolData) -> Result<Self, ProlongError> {
        s.ensure_valid()?;
        GradedSpan::new(&s.h, &s.full_degree_zero()?)
    }

    pub fn base(&self) -> &HeisenbergBase {
        &self.base
    }

    pub fn g0_basis(&self) -> &[CspElement] {
        &self.g0
    }

    pub fn m(&self) -> usize {
        self.base.m
    }
}

/// Checks Lie-bracket closure of `n + span(g0)` inside the ambient model.
pub fn bracket_closed(h: &Mat, g0: &[CspElement]) -> Result<bool, ProlongError> {
    let m = h.rows();
    let base = HeisenbergBase::new(h)?;
    let mut basis: Vec<SemiElement> = vec![SemiElement::from_z(m, Scalar::one())];
    for t in 0..2 * m {
        let mut v = vec![Scalar::zero(); 2 * m];
        v[t] = Scalar::one();
        basis.push(SemiElement::from_v(m, v));
    }
    basis.extend(g0.iter().cloned().map(SemiElement::from_x));
    let ambient = 2 + 2 * m + 4 * m * m;
    let span = Subspace::from_vectors(
        ambient,
        basis.iter().map(SemiElement::flatten_coords).collect(),
    )?;
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            let br = a.bracket(b, &base)?;
            if !span.contains(&br.flatten_coords())? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True when the grading element lies in the span of the given elements.
pub fn grading_element_in(m: usize, g0: &[CspElement]) -> Result<bool, LinalgError> {
    let span = span_of_elements(m, g0)?;
    span.contains(&CspElement::grading_element(m).flatten_coords())
}

/// Options for the prolongation loop.
#[derive(Debug, Clone)]
pub struct ProlongOptions {
    /// Highest positive degree to compute before giving up.
    pub max_degree: usize,
    /// Keep computing after the first zero level (used to test that zero
    /// levels propagate); by default the loop stops there.
    pub continue_past_zero: bool,
}

impl Default for ProlongOptions {
    fn default() -> Self {
        ProlongOptions {
            max_degree: 10,
            continue_past_zero: false,
        }
    }
}

/// Dimensions of the graded prolongation, listed from degree `-2` upward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProlongReport {
    /// `(degree, dimension)` pairs for every computed level.
    pub dims: Vec<(i32, usize)>,
    /// Sum of all listed dimensions.
    pub total: usize,
    /// True when a zero level was reached, so all higher levels vanish and
    /// `total` is the dimension of the whole algebra.
    pub terminated: bool,
}

impl ProlongReport {
    /// Sum of the dimensions in strictly positive degrees.
    pub fn positive_total(&self) -> usize {
        self.dims
            .iter()
            .filter(|(k, _)| *k > 0)
            .map(|(_, d)| d)
            .sum()
    }

    pub fn dim_at(&self, degree: i32) -> Option<usize> {
        self.dims.iter().find(|(k, _)| *k == degree).map(|(_, d)| *d)
    }
}

/// Computes level dimensions of the prolongation of `span` until the first
/// zero level (vanishing propagates upward) or `max_degree`.
pub fn tanaka_prolongation(
    span: &GradedSpan,
    opts: &ProlongOptions,
) -> Result<ProlongReport, ProlongError> {
    let m = span.m();
    let n = 2 * m;
    // Indexing: level k is stored at k + 2.
    let lvl = |k: i32| -> usize { (k + 2) as usize };
    let mut dims: Vec<usize> = vec![1, n];
    // e1[l][i] is the matrix of x -> [x, e_i] from level l to level l-1;
    // e2[l] is the matrix of x -> [x, z] from level l to level l-2.
    let mut e1: Vec<Vec<Mat>> = Vec::new();
    let mut e2: Vec<Mat> = Vec::new();
    e1.push(vec![Mat::zeros(0, 1); n]);
    e2.push(Mat::zeros(0, 1));
    let mut lvl_m1 = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Mat::zeros(1, n);
        for t in 0..n {
            row.set(0, t, span.base.omega_basis(t, i));
        }
        lvl_m1.push(row);
    }
    e1.push(lvl_m1);
    e2.push(Mat::zeros(0, n));

    let d0 = span.g0.len();
    let realized: Vec<Mat> = span.g0.iter().map(CspElement::realize).collect();
    let mut lvl_0 = Vec::with_capacity(n);
    for i in 0..n {
        let mut mat = Mat::zeros(n, d0);
        for (t, r) in realized.iter().enumerate() {
            for u in 0..n {
                mat.set(u, t, r.get(u, i).clone());
            }
        }
        lvl_0.push(mat);
    }
    e1.push(lvl_0);
    let mut scale_row = Mat::zeros(1, d0);
    let two = Scalar::from_int(2);
    for (t, g) in span.g0.iter().enumerate() {
        scale_row.set(0, t, &two * &g.scale);
    }
    e2.push(scale_row);
    dims.push(d0);

    let mut reached_zero = d0 == 0;
    for k in 1..=(opts.max_degree as i32) {
        if reached_zero && !opts.continue_past_zero {
            break;
        }
        let d_km1 = dims[lvl(k - 1)];
        let d_km2 = dims[lvl(k - 2)];
        let d_km3 = dims[lvl(k - 3)];
        let unknowns = n * d_km1 + d_km2;
        let rows = n * (n - 1) / 2 * d_km2 + n * d_km3;
        let mut sys = Mat::zeros(rows, unknowns);
        let mut row0 = 0;
        // Derivation identity on pairs (e_i, e_j), i < j:
        // [f(e_i), e_j] - [f(e_j), e_i] - omega(e_i, e_j) f(z) = 0.
        for i in 0..n {
            for j in i + 1..n {
                if d_km2 > 0 {
                    if d_km1 > 0 {
                        sys.set_block(row0, i * d_km1, &e1[lvl(k - 1)][j]);
                        sys.set_block(row0, j * d_km1, &e1[lvl(k - 1)][i].neg());
                    }
                    let w = span.base.omega_basis(i, j);
                    if !w.is_zero() {
                        sys.set_block(row0, n * d_km1, &Mat::identity(d_km2).scale(&-w));
                    }
                }
                row0 += d_km2;
            }
        }
        // Derivation identity on pairs (e_i, z):
        // [f(e_i), z] - [f(z), e_i] = 0 (the base bracket [e_i, z] is zero).
        for i in 0..n {
            if d_km3 > 0 {
                if d_km1 > 0 {
                    sys.set_block(row0, i * d_km1, &e2[lvl(k - 1)]);
                }
                if d_km2 > 0 {
                    sys.set_block(row0, n * d_km1, &e1[lvl(k - 2)][i].neg());
                }
            }
            row0 += d_km3;
        }
        debug_assert_eq!(row0, rows);
        let kernel = sys.kernel();
        let d_k = kernel.dim();
        dims.push(d_k);
        let mut new_e1 = vec![Mat::zeros(d_km1, d_k); n];
        let mut new_e2 = Mat::zeros(d_km2, d_k);
        for (c, vec) in kernel.basis().iter().enumerate() {
            for i in 0..n {
                for u in 0..d_km1 {
                    new_e1[i].set(u, c, vec[i * d_km1 + u].clone());
                }
            }
            for u in 0..d_km2 {
                new_e2.set(u, c, vec[n * d_km1 + u].clone());
            }
        }
        e1.push(new_e1);
        e2.push(new_e2);
        if d_k == 0 {
            reached_zero = true;
        }
    }

    let report_dims: Vec<(i32, usize)> = dims
        .iter()
        .enumerate()
        .map(|(l, &d)| (l as i32 - 2, d))
        .collect();
    let total = dims.iter().sum();
    Ok(ProlongReport {
        dims: report_dims,
        total,
        terminated: reached_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::csp_basis_elements;
    use std::str::FromStr;

    fn sc(s: &str) -> Scalar {
        Scalar::from_str(s).unwrap()
    }

    fn swap_pair_symbol() -> CRSymbolData {
        let h = Mat::from_shorthand(&[&["0", "1"], &["1", "0"]]).unwrap();
        let c1 = Mat::from_shorthand(&[&["0", "i"], &["1", "0"]]).unwrap();
        CRSymbolData::new(h, vec![c1])
    }

    /// The three-generator reduced span for the swap-pair symbol: a mirror
    /// pair of mixed-grade matrices plus the identity direction.
    fn swap_pair_reduced_span() -> (CRSymbolData, Vec<CspElement>) {
        let s = swap_pair_symbol();
        let m1 = Mat::from_shorthand(&[
            &["0", "i/sqrt2", "0", "i"],
            &["1/sqrt2", "0", "1", "0"],
            &["0", "0", "0", "-i/sqrt2"],
            &["0", "0", "-1/sqrt2", "0"],
        ])
        .unwrap();
        let m2 = Mat::from_shorthand(&[
            &["0", "i/sqrt2", "0", "0"],
            &["-1/sqrt2", "0", "0", "0"],
            &["0", "-i", "0", "-i/sqrt2"],
            &["1", "0", "1/sqrt2", "0"],
        ])
        .unwrap();
        let g0 = vec![
            CspElement {
                block: m1,
                scale: Scalar::zero(),
            },
            CspElement {
                block: m2,
                scale: Scalar::zero(),
            },
            CspElement::scale_element(2),
        ];
        (s, g0)
    }

    #[test]
    fn omega_is_antisymmetric_and_nondegenerate() {
        let s = swap_pair_symbol();
        let base = HeisenbergBase::new(&s.h).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let a = base.omega_basis(i, j);
                let b = base.omega_basis(j, i);
                assert_eq!(a, -b);
            }
        }
        // J is invertible, so the form is nondegenerate.
        assert!(base.j.inverse().is_ok());
    }

    #[test]
    fn semidirect_bracket_satisfies_jacobi_on_a_sample() {
        let (s, g0) = swap_pair_reduced_span();
        let base = HeisenbergBase::new(&s.h).unwrap();
        let mut elems = vec![
            SemiElement::from_z(2, sc("1")),
            SemiElement::from_v(2, vec![sc("1"), sc("i"), sc("0"), sc("2")]),
            SemiElement::from_v(2, vec![sc("0"), sc("1/2"), sc("i"), sc("0")]),
        ];
        elems.push(SemiElement::from_x(g0[0].clone()));
        elems.push(SemiElement::from_x(g0[1].clone()));
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let ab_c = a.bracket(b, &base).unwrap().bracket(c, &base).unwrap();
                    let bc_a = b.bracket(c, &base).unwrap().bracket(a, &base).unwrap();
                    let ca_b = c.bracket(a, &base).unwrap().bracket(b, &base).unwrap();
                    let mut total = ab_c.flatten_coords();
                    for (t, (x, y)) in bc_a
                        .flatten_coords()
                        .into_iter()
                        .zip(ca_b.flatten_coords())
                        .enumerate()
                    {
                        total[t] = &total[t] + &x + y;
                    }
                    assert!(total.iter().all(Scalar::is_zero), "Jacobi fails");
                }
            }
        }
    }

    #[test]
    fn scale_element_acts_with_weights_one_and_two() {
        let base = HeisenbergBase::new(&Mat::identity(2)).unwrap();
        let c = SemiElement::from_x(CspElement::scale_element(2));
        let v = SemiElement::from_v(2, vec![sc("1"), sc("0"), sc("0"), sc("0")]);
        let z = SemiElement::from_z(2, sc("1"));
        assert_eq!(c.bracket(&v, &base).unwrap().v, v.v);
        assert_eq!(c.bracket(&z, &base).unwrap().z, sc("2"));
    }

    #[test]
    fn reduced_span_prolongs_to_an_eight_dimensional_algebra() {
        let (s, g0) = swap_pair_reduced_span();
        let span = GradedSpan::new(&s.h, &g0).unwrap();
        assert_eq!(span.g0_basis().len(), 3);
        let report = tanaka_prolongation(&span, &ProlongOptions::default()).unwrap();
        assert_eq!(report.dims, vec![(-2, 1), (-1, 4), (0, 3), (1, 0)]);
        assert_eq!(report.total, 8);
        assert!(report.terminated);
        assert_eq!(report.positive_total(), 0);
    }

    #[test]
    fn zero_levels_propagate_upward() {
        let (s, g0) = swap_pair_reduced_span();
        let span = GradedSpan::new(&s.h, &g0).unwrap();
        let opts = ProlongOptions {
            max_degree: 3,
            continue_past_zero: true,
        };
        let report = tanaka_prolongation(&span, &opts).unwrap();
        assert_eq!(
            report.dims,
            vec![(-2, 1), (-1, 4), (0, 3), (1, 0), (2, 0), (3, 0)]
        );
        assert_eq!(report.total, 8);
    }

    #[test]
    fn full_model_prolongs_to_the_contact_algebra() {
        // The prolongation of the whole conformal-symplectic model is the
        // (infinite-dimensional) contact algebra: level k has the dimension
        // of the space of homogeneous polynomials of weighted degree k + 2
        // in 2m weight-one variables and one weight-two variable. This is an
        // independent combinatorial oracle for the engine.
        let weighted_count = |m: usize, d: i64| -> usize {
            if d < 0 {
                return 0;
            }
            (0..=(d / 2))
                .map(|c| {
                    let rest = (d - 2 * c) as usize;
                    // Monomials of degree `rest` in 2m variables.
                    let mut n = 1usize;
                    let mut den = 1usize;
                    for t in 0..(2 * m - 1) {
                        n *= rest + t + 1;
                        den *= t + 1;
                    }
                    n / den
                })
                .sum()
        };
        let h = Mat::identity(1);
        let elems = csp_basis_elements(&h).unwrap();
        let span = GradedSpan::new(&h, &elems).unwrap();
        let opts = ProlongOptions {
            max_degree: 4,
            continue_past_zero: false,
        };
        let report = tanaka_prolongation(&span, &opts).unwrap();
        let want: Vec<(i32, usize)> = (-2..=4)
            .map(|k| (k, weighted_count(1, k as i64 + 2)))
            .collect();
        assert_eq!(report.dims, want);
        assert!(!report.terminated);
    }

    #[test]
    fn unterminated_run_is_flagged() {
        let (s, g0) = swap_pair_reduced_span();
        // The full model on this base never terminates; capped at degree 1
        // the report must say so, with the contact-algebra level dimension.
        let elems = csp_basis_elements(&s.h).unwrap();
        let span = GradedSpan::new(&s.h, &elems).unwrap();
        let opts = ProlongOptions {
            max_degree: 1,
            continue_past_zero: false,
        };
        let report = tanaka_prolongation(&span, &opts).unwrap();
        assert!(!report.terminated);
        // Weighted-degree-3 monomials in 4 weight-one and 1 weight-two
        // variables: C(6,3) + 4 = 24.
        assert_eq!(report.dim_at(1), Some(24));
        // The reduced span, by contrast, terminates already at degree 1.
        let span = GradedSpan::new(&s.h, &g0).unwrap();
        let report = tanaka_prolongation(&span, &opts).unwrap();
        assert!(report.terminated);
    }

    #[test]
    fn closure_and_grading_checks() {
        let (s, g0) = swap_pair_reduced_span();
        assert!(bracket_closed(&s.h, &g0).unwrap());
        assert!(grading_element_in(2, &g0).unwrap());
        // Dropping the identity direction keeps closure but loses grading.
        let dropped = &g0[..2];
        assert!(bracket_closed(&s.h, dropped).unwrap());
        assert!(!grading_element_in(2, dropped).unwrap());
        // The two mixed generators commute in this span.
        let comm = g0[0].commutator(&g0[1]).unwrap();
        assert!(comm.block.is_zero());
        // A non-closed span: the two bare generators bracket onto a
        // block-diagonal element outside their span.
        let x = s.x_generator(0, &Mat::zeros(2, 2)).unwrap();
        let y = s.y_generator(0, &Mat::zeros(2, 2)).unwrap();
        assert!(!bracket_closed(&s.h, &[x, y]).unwrap());
    }

    #[test]
    fn full_degree_zero_of_the_swap_pair_symbol() {
        // Full degree-zero span: flat piece (dim 2) plus both generators.
        let s = swap_pair_symbol();
        let span = GradedSpan::from_symbol_full(&s).unwrap();
        assert_eq!(span.g0_basis().len(), 4);
        let report = tanaka_prolongation(&span, &ProlongOptions::default()).unwrap();
        assert_eq!(report.dim_at(-1), Some(4));
        assert_eq!(report.dim_at(0), Some(4));
        assert!(report.terminated);
    }
}
