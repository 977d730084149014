//! Vector-space-level semilinear structures.
//!
//! A semilinear structure on `ℝ^{2r}` is an unordered pair `{J, −J}` of
//! conjugate complex structures. This module provides the general semilinear
//! group `Γ(r)` of complex matrices with a parity bit (odd elements act
//! antilinearly), determinants of realifications, classification of
//! endomorphisms as `𝔰`-linear / `𝔰`-antilinear, s-Hermitian metric axioms
//! and the orientation sign map with its parity law `f_h(−J) = (−1)^r f_h(J)`.
//!
//! Realification convention: `ℂ^r ≅ ℝ^{2r}` by `z = x + iy ↦ (x, y)`, so the
//! canonical complex structure is `𝐉_r(x,y) = (−y, x)`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// A complex structure representative (predicates must not depend on the
/// choice within `{J, −J}`).
#[derive(Debug, Clone)]
pub struct SemilinearStructure {
    pub j: DMatrix<f64>,
}

impl SemilinearStructure {
    pub fn new(j: DMatrix<f64>) -> Result<Self, String> {
        let n = j.nrows();
        if n != j.ncols() || n % 2 != 0 {
            return Err("complex structure needs an even-dimensional square matrix".into());
        }
        let id = DMatrix::<f64>::identity(n, n);
        let r = (&j * &j + id).abs().max();
        if r > 1e-9 {
            return Err(format!("J² = −I fails (residual {r:.3e})"));
        }
        Ok(SemilinearStructure { j })
    }

    /// The canonical structure `𝐉_r(x,y) = (−y,x)` on `ℝ^{2r}`.
    pub fn canonical(r: usize) -> Self {
        let mut j = DMatrix::<f64>::zeros(2 * r, 2 * r);
        for k in 0..r {
            j[(k, r + k)] = -1.0;
            j[(r + k, k)] = 1.0;
        }
        SemilinearStructure { j }
    }

    pub fn r(&self) -> usize {
        self.j.nrows() / 2
    }

    pub fn conjugate(&self) -> Self {
        SemilinearStructure { j: -&self.j }
    }
}

/// Element `(A, t)` of the general semilinear group `Γ(r)`: even elements act
/// as `A`, odd elements as `x ↦ A·x̄`.
#[derive(Debug, Clone)]
pub struct GammaRElement {
    pub a: DMatrix<Complex64>,
    pub t: bool,
}

impl GammaRElement {
    pub fn new(a: DMatrix<Complex64>, t: bool) -> Self {
        assert_eq!(a.nrows(), a.ncols());
        GammaRElement { a, t }
    }

    pub fn r(&self) -> usize {
        self.a.nrows()
    }

    /// Four-case composition law (conjugation passes through odd elements).
    pub fn mul(&self, other: &GammaRElement) -> GammaRElement {
        assert_eq!(self.r(), other.r(), "size mismatch");
        let rhs = if self.t { other.a.map(|v| v.conj()) } else { other.a.clone() };
        GammaRElement { a: &self.a * rhs, t: self.t != other.t }
    }

    /// Real `2r×2r` matrix of the action on `ℝ^{2r}` (stacked `(x,y)`).
    pub fn realify(&self) -> DMatrix<f64> {
        let r = self.r();
        let mut m = DMatrix::<f64>::zeros(2 * r, 2 * r);
        for i in 0..r {
            for k in 0..r {
                let v = self.a[(i, k)];
                if !self.t {
                    // x + iy ↦ A(x + iy)
                    m[(i, k)] = v.re;
                    m[(i, r + k)] = -v.im;
                    m[(r + i, k)] = v.im;
                    m[(r + i, r + k)] = v.re;
                } else {
                    // x + iy ↦ A(x − iy)
                    m[(i, k)] = v.re;
                    m[(i, r + k)] = v.im;
                    m[(r + i, k)] = v.im;
                    m[(r + i, r + k)] = -v.re;
                }
            }
        }
        m
    }

    /// Determinant of the realified action by the closed formula:
    /// `|det A|²` for even elements, `(−1)^r·|det A|²` for odd ones.
    pub fn det_formula(&self) -> f64 {
        let d = self.a.determinant().norm_sqr();
        if self.t && self.r() % 2 == 1 {
            -d
        } else {
            d
        }
    }
}

/// Classification of a real endomorphism against a semilinear structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndoKind {
    Linear,
    Antilinear,
    Neither,
}

/// `T` is `𝔰`-linear iff `TJ = JT`, `𝔰`-antilinear iff `TJ = −JT`.
/// (Both predicates are invariant under `J ↦ −J`.)
pub fn classify_endo(t: &DMatrix<f64>, s: &SemilinearStructure, tol: f64) -> EndoKind {
    let comm = (t * &s.j - &s.j * t).abs().max();
    let anti = (t * &s.j + &s.j * t).abs().max();
    if comm <= tol {
        EndoKind::Linear
    } else if anti <= tol {
        EndoKind::Antilinear
    } else {
        EndoKind::Neither
    }
}

/// An `𝕊`-valued metric as a coefficient pair relative to the stored `J`:
/// `h(x,y) = h_R(x,y) + h_I(x,y)·J`.
#[derive(Debug, Clone)]
pub struct SHermitianForm {
    pub h_r: DMatrix<f64>,
    pub h_i: DMatrix<f64>,
}

impl SHermitianForm {
    /// The standard positive form: `h_R = I`, `h_I(x,y) = ⟨Jx, y⟩`.
    pub fn standard(s: &SemilinearStructure) -> Self {
        let n = 2 * s.r();
        SHermitianForm { h_r: DMatrix::identity(n, n), h_i: s.j.transpose() }
    }
}

/// Itemized axiom check for an s-Hermitian metric.
#[derive(Debug, Clone)]
pub struct SHermitianReport {
    /// `h(x,y) = c(h(y,x))`: `h_R` symmetric, `h_I` antisymmetric.
    pub conjugate_symmetry: f64,
    /// `h(Jx, y) = c(J)·h(x,y)`: `Jᵀh_R = h_I` and `Jᵀh_I = −h_R`.
    pub sesquilinearity: f64,
    /// `h_R` positive definite.
    pub positive: bool,
    /// Residual of the derived identity `h_I(x,y) = h_R(Jx,y)`.
    pub h_i_from_h_r: f64,
}

impl SHermitianReport {
    pub fn ok(&self, tol: f64) -> bool {
        self.conjugate_symmetry <= tol
            && self.sesquilinearity <= tol
            && self.positive
            && self.h_i_from_h_r <= tol
    }
}

pub fn s_hermitian_check(h: &SHermitianForm, s: &SemilinearStructure) -> SHermitianReport {
    let sym = (&h.h_r - h.h_r.transpose()).abs().max();
    let asym = (&h.h_i + h.h_i.transpose()).abs().max();
    let s1 = (s.j.transpose() * &h.h_r - &h.h_i).abs().max();
    let s2 = (s.j.transpose() * &h.h_i + &h.h_r).abs().max();
    let positive = h.h_r.clone().cholesky().is_some();
    SHermitianReport {
        conjugate_symmetry: sym.max(asym),
        sesquilinearity: s1.max(s2),
        positive,
        h_i_from_h_r: (s.j.transpose() * &h.h_r - &h.h_i).abs().max(),
    }
}

/// Orientation sign of the basis `(e₁…e_r, Je₁…Je_r)` produced by complex
/// Gram–Schmidt for the Hermitian form `h₀(x,y) = h_R(x,y) + i·h_R(Jx,y)`,
/// relative to the standard orientation of `ℝ^{2r}`.
///
/// Satisfies `f_h(−J) = (−1)^r·f_h(J)` and is independent of the basis
/// choices made during orthonormalization.
pub fn f_h(j: &SemilinearStructure, h_r: &DMatrix<f64>) -> Result<i8, String> {
    let n = 2 * j.r();
    assert_eq!(h_r.nrows(), n);
    let compat = (j.j.transpose() * h_r * &j.j - h_r).abs().max();
    if compat > 1e-9 {
        return Err(format!("J incompatible with h_R (residual {compat:.3e})"));
    }
    if h_r.clone().cholesky().is_none() {
        return Err("h_R must be positive definite".into());
    }
    let herm = |x: &DVector<f64>, y: &DVector<f64>| -> Complex64 {
        let re = (x.transpose() * h_r * y)[(0, 0)];
        let im = ((&j.j * x).transpose() * h_r * y)[(0, 0)];
        Complex64::new(re, im)
    };
    let cmul = |c: Complex64, v: &DVector<f64>| -> DVector<f64> { c.re * v + c.im * (&j.j * v) };
    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(j.r());
    for cand in 0..n {
        if basis.len() == j.r() {
            break;
        }
        let mut v = DVector::<f64>::zeros(n);
        v[cand] = 1.0;
        for e in &basis {
            let c = herm(e, &v);
            v -= cmul(c, e);
        }
        let norm2 = (v.transpose() * h_r * &v)[(0, 0)];
        if norm2 < 1e-9 {
            continue; // candidate lies in the complex span found so far
        }
        basis.push(v / norm2.sqrt());
    }
    if basis.len() != j.r() {
        return Err("failed to complete a complex orthonormal basis".into());
    }
    let mut b = DMatrix::<f64>::zeros(n, n);
    for (k, e) in basis.iter().enumerate() {
        b.set_column(k, e);
        b.set_column(j.r() + k, &(&j.j * e));
    }
    let det = b.determinant();
    if det.abs() < 1e-9 {
        return Err("degenerate basis".into());
    }
    Ok(if det > 0.0 { 1 } else { -1 })
}
