//! The groups `O₂(α)` and their low-dimensional Clifford realizations.
//!
//! `O₂(α)` is the group with underlying set `U(1) × ℤ₂` and composition
//!
//! ```text
//! (z₁,0̂)(z₂,0̂) = (z₁z₂,0̂)     (z₁,0̂)(z₂,1̂) = (z₁z₂,1̂)
//! (z₁,1̂)(z₂,0̂) = (z₁z̄₂,1̂)    (z₁,1̂)(z₂,1̂) = (αz₁z̄₂,0̂)
//! ```
//!
//! It is realized as `Pin₂(α) ⊂ Cl₂(α)` via `φ_α`, and embedded into
//! `Spin₃(α) ⊂ Cl₃(α)` via the algebra monomorphism `v ↦ v·e₃`. This module
//! provides those maps, their matrix companions (`Φ_C^{(±)}`, `Σ_α`, `R(θ)`,
//! `C₀`), and sampled verification of the five compatibility diagrams.

use crate::clifford::{Algebra, Multivector};
use crate::sample;
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

/// Element of `O₂ᶜ(α)` (and of `O₂(α)` when `|z| = 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct O2Element {
    pub z: Complex64,
    /// Parity bit: `false = 0̂`, `true = 1̂`.
    pub t: bool,
    /// The deformation sign `α ∈ {+1,-1}`.
    pub alpha: i8,
}

impl O2Element {
    pub fn new(z: Complex64, t: bool, alpha: i8) -> Self {
        assert!(alpha == 1 || alpha == -1);
        O2Element { z, t, alpha }
    }

    pub fn unit(alpha: i8) -> Self {
        Self::new(Complex64::new(1.0, 0.0), false, alpha)
    }

    /// The distinguished odd element `c = (1,1̂)` with `c² = α`.
    pub fn c(alpha: i8) -> Self {
        Self::new(Complex64::new(1.0, 0.0), true, alpha)
    }

    pub fn i_elem(alpha: i8) -> Self {
        Self::new(Complex64::new(0.0, 1.0), false, alpha)
    }

    pub fn from_angle(theta: f64, t: bool, alpha: i8) -> Self {
        Self::new(Complex64::from_polar(1.0, theta), t, alpha)
    }

    pub fn is_unit(&self, tol: f64) -> bool {
        (self.z.norm() - 1.0).abs() <= tol
    }

    /// Four-case composition law.
    pub fn mul(&self, other: &O2Element) -> O2Element {
        assert_eq!(self.alpha, other.alpha, "alpha mismatch");
        let alpha = self.alpha as f64;
        let (z, t) = match (self.t, other.t) {
            (false, false) => (self.z * other.z, false),
            (false, true) => (self.z * other.z, true),
            (true, false) => (self.z * other.z.conj(), true),
            (true, true) => (alpha * self.z * other.z.conj(), false),
        };
        O2Element::new(z, t, self.alpha)
    }

    pub fn inverse(&self) -> O2Element {
        // (z,0̂)⁻¹ = (z⁻¹,0̂); (z,1̂)⁻¹ = (α z̄⁻¹... solved from the law:
        // (z,1̂)(w,1̂) = (α z w̄, 0̂) = 1 ⇔ w = α z̄⁻¹... over ℂ^×: w̄ = 1/(αz)
        // ⇒ w = conj(1/(αz)) = α / z̄ (α real).
        if !self.t {
            O2Element::new(1.0 / self.z, false, self.alpha)
        } else {
            O2Element::new(self.alpha as f64 / self.z.conj(), true, self.alpha)
        }
    }

    pub fn neg(&self) -> O2Element {
        O2Element::new(-self.z, self.t, self.alpha)
    }

    /// Generalized determinant `η_α(z,t) = (−1)^t`.
    pub fn eta(&self) -> i8 {
        if self.t {
            -1
        } else {
            1
        }
    }

    /// Squaring morphism `σ_α(z,t) = (z²,t)`, valued in `O₂(+)`.
    pub fn sigma(&self) -> O2Element {
        O2Element::new(self.z * self.z, self.t, 1)
    }

    /// The conjugation `K = Ad(c)`: `(z,t) ↦ (z̄,t)`.
    pub fn conj_k(&self) -> O2Element {
        O2Element::new(self.z.conj(), self.t, self.alpha)
    }

    pub fn dist(&self, other: &O2Element) -> f64 {
        if self.t != other.t || self.alpha != other.alpha {
            return f64::INFINITY;
        }
        (self.z - other.z).norm()
    }
}

/// The algebra `Cl₂(α)`: two generators squaring to `α`.
pub fn cl2(alpha: i8) -> Algebra {
    Algebra::new(vec![alpha, alpha])
}

/// The algebra `Cl₃(α)`: `e₁² = e₂² = α`, `e₃² = −1`.
pub fn cl3(alpha: i8) -> Algebra {
    Algebra::new(vec![alpha, alpha, -1])
}

/// Element of `Pin₂(α) = Spin₂(α) ⊔ Spin₂(α)·e₁` with `|Ñ| = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Pin2Element {
    pub mv: Multivector<f64>,
    pub alpha: i8,
}

impl Pin2Element {
    pub fn new(mv: Multivector<f64>, alpha: i8) -> Self {
        debug_assert_eq!(mv.algebra(), &cl2(alpha));
        Pin2Element { mv, alpha }
    }

    /// Parity: `true` when the element lies in the odd coset.
    pub fn odd(&self) -> bool {
        !self.mv.is_even()
    }

    pub fn mul(&self, other: &Pin2Element) -> Pin2Element {
        assert_eq!(self.alpha, other.alpha);
        Pin2Element { mv: self.mv.mul(&other.mv), alpha: self.alpha }
    }
}

/// `z(θ) = cos θ + sin θ·e₁e₂ ∈ Spin₂(α)`.
pub fn z_theta(alpha: i8, theta: f64) -> Multivector<f64> {
    let alg = cl2(alpha);
    let mut m = Multivector::scalar(&alg, theta.cos());
    m.set_blade(0b11, theta.sin());
    m
}

/// The realization `φ_α : O₂(α) → Pin₂(α)`:
/// `(e^{iθ},0̂) ↦ z(θ)` and `(e^{iθ},1̂) ↦ z(θ)·e₁`.
pub fn phi_alpha(u: &O2Element) -> Result<Pin2Element, String> {
    if !u.is_unit(1e-9) {
        return Err(format!("phi_alpha needs |z| = 1, got |z| = {}", u.z.norm()));
    }
    let alg = cl2(u.alpha);
    let mut mv = z_theta(u.alpha, u.z.arg());
    if u.t {
        mv = mv.mul(&Multivector::generator(&alg, 1));
    }
    Ok(Pin2Element::new(mv, u.alpha))
}

/// Rotation matrix `R(θ)`.
pub fn rot(theta: f64) -> DMatrix<f64> {
    DMatrix::from_row_slice(2, 2, &[theta.cos(), -theta.sin(), theta.sin(), theta.cos()])
}

/// The reflection `C₀ = diag(1,−1)`.
pub fn c0() -> DMatrix<f64> {
    DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0])
}

/// Matrix realizations `Φ_C^{(±)} : O₂(+) → O(2)`:
/// `(e^{iθ},0̂) ↦ R(±θ)`, `(e^{iθ},1̂) ↦ R(±θ)C`.
pub fn phi_c(u: &O2Element, c: &DMatrix<f64>, branch: i8) -> Result<DMatrix<f64>, String> {
    if u.alpha != 1 {
        return Err("phi_c is defined on O₂(+)".into());
    }
    if !u.is_unit(1e-9) {
        return Err("phi_c needs |z| = 1".into());
    }
    let id = DMatrix::<f64>::identity(2, 2);
    let refl_err = (c * c - &id).abs().max().max((c.determinant() + 1.0).abs());
    if refl_err > 1e-9 {
        return Err("C must be a reflection (C² = I, det C = −1)".into());
    }
    let r = rot(branch as f64 * u.z.arg());
    Ok(if u.t { r * c } else { r })
}

/// The embedding `s_α : Pin₂(α) → Spin₃(α) ⊂ Cl₃(α)` induced by the algebra
/// monomorphism `ŝ_α(v) = v·e₃` on vectors.
pub fn s_alpha(b: &Pin2Element) -> Multivector<f64> {
    let target = cl3(b.alpha);
    // Generator images: e₁ ↦ e₁e₃, e₂ ↦ e₂e₃.
    let images = [
        Multivector::basis_blade(&target, 0b101, 1.0),
        Multivector::basis_blade(&target, 0b110, 1.0),
    ];
    b.mv.apply_morphism(&target, &images)
}

/// Block embedding `Σ_α(R) = diag((det R)·R, det R)` of `O(2)` into `SO(3)`-like
/// matrices `S[O(2)×G₂]`.
pub fn sigma_embed(r: &DMatrix<f64>) -> Result<DMatrix<f64>, String> {
    assert_eq!((r.nrows(), r.ncols()), (2, 2));
    let id = DMatrix::<f64>::identity(2, 2);
    if (r.transpose() * r - id).abs().max() > 1e-9 {
        return Err("Σ needs R ∈ O(2)".into());
    }
    let det = r.determinant().round();
    let mut m = DMatrix::<f64>::zeros(3, 3);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = det * r[(i, j)];
        }
    }
    m[(2, 2)] = det;
    Ok(m)
}

/// Untwisted vector representation on `Cl₂(α)` or `Cl₃(α)` elements.
pub fn ad0(mv: &Multivector<f64>, tol: f64) -> Result<DMatrix<f64>, String> {
    mv.vector_rep(false, tol)
}

/// One sampled diagram check.
#[derive(Debug, Clone, Serialize)]
pub struct DiagramCheck {
    pub id: String,
    pub samples: usize,
    pub max_err: f64,
}

/// Verifies one of the five compatibility diagrams on random samples
/// (the distinguished elements `1, i, c` are always included).
///
/// * `diag1`: `Ad₀⁽²⁾ ∘ φ_α = Φ₀^{(−α)} ∘ σ_α`
/// * `diag2`: `η_α = det ∘ Ad₀⁽²⁾ ∘ φ_α`
/// * `diag3`: `Ad₀⁽³⁾ ∘ s_α = Σ_α ∘ Ad₀⁽²⁾` on `Pin₂(α)`
/// * `diag4`: `Ad₀⁽³⁾ ∘ (s_α∘φ_α) = (Σ_α∘Φ₀^{(−α)}) ∘ σ_α`
/// * `diag5`: the full pasted square — `diag1` and `diag3` jointly.
pub fn verify_diagram(
    id: &str,
    alpha: i8,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<DiagramCheck, String> {
    let mut rng = sample::rng(seed);
    let mut max_err: f64 = 0.0;
    let mut elems = vec![O2Element::unit(alpha), O2Element::i_elem(alpha), O2Element::c(alpha)];
    for k in 0..samples {
        elems.push(O2Element::from_angle(sample::angle(&mut rng), k % 2 == 1, alpha));
    }
    let n = elems.len();
    let branch = -alpha; // Φ₀^{(−α)}
    for u in elems {
        let b = phi_alpha(&u)?;
        let err = match id {
            "diag1" => {
                let lhs = ad0(&b.mv, tol)?;
                let rhs = phi_c(&u.sigma(), &c0(), branch)?;
                (lhs - rhs).abs().max()
            }
            "diag2" => {
                let det = ad0(&b.mv, tol)?.determinant();
                (det - u.eta() as f64).abs()
            }
            "diag3" => {
                let lhs = ad0(&s_alpha(&b), tol)?;
                let rhs = sigma_embed(&ad0(&b.mv, tol)?)?;
                (lhs - rhs).abs().max()
            }
            "diag4" => {
                let lhs = ad0(&s_alpha(&b), tol)?;
                let rhs = sigma_embed(&phi_c(&u.sigma(), &c0(), branch)?)?;
                (lhs - rhs).abs().max()
            }
            "diag5" => {
                let ad2 = ad0(&b.mv, tol)?;
                let e1 = (&ad2 - phi_c(&u.sigma(), &c0(), branch)?).abs().max();
                let e2 = (ad0(&s_alpha(&b), tol)? - sigma_embed(&ad2)?).abs().max();
                e1.max(e2)
            }
            _ => return Err(format!("unknown diagram `{id}`")),
        };
        max_err = max_err.max(err);
    }
    Ok(DiagramCheck { id: id.to_string(), samples: n, max_err })
}

/// All five diagrams in order.
pub const DIAGRAMS: [&str; 5] = ["diag1", "diag2", "diag3", "diag4", "diag5"];
