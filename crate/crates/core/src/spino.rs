//! The group `Spinᵒ_α(V,h) = [Spin(V,h) × Pin₂(α)]/{±1}`.
//!
//! Elements are stored as sign-normalized pairs `[a,b]` with `a ∈ Spin(V,h)`
//! and `b ∈ Pin₂(α)`; the pair `(−a,−b)` names the same element. The module
//! provides the product, the distinguished elements `1̃ = [1,−1]` and
//! `D̂ = [1,e₁]`, membership tests for the subgroup lattice, the six
//! elementary representations, and the Clifford embeddings `j` (into
//! `Pin(V̂)`, two extra generators squaring to `α`) and `j′` (into
//! `Spin(V′)`, a further generator squaring to `−1`).

use crate::clifford::{Algebra, Multivector, Signature};
use crate::lowdim::cl2;
use crate::sample;
use nalgebra::DMatrix;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Element `[a,b]` of `Spinᵒ_α(V,h)` in canonical sign form.
#[derive(Debug, Clone)]
pub struct SpinoElement {
    a: Multivector<f64>,
    b: Multivector<f64>,
    pub sig: Signature,
    pub alpha: i8,
}

impl SpinoElement {
    /// Wraps a pair, normalizing so the first nonzero blade coefficient of
    /// `a` (in blade order) is positive. `a` must be even and nonzero.
    pub fn new(a: Multivector<f64>, b: Multivector<f64>, sig: Signature, alpha: i8) -> Self {
        assert_eq!(a.algebra(), &sig.algebra(), "a lives in Cl_{{p,q}}");
        assert_eq!(b.algebra(), &cl2(alpha), "b lives in Cl₂(α)");
        assert!(a.is_even(), "a must be even");
        let mut g = SpinoElement { a, b, sig, alpha };
        g.normalize();
        g
    }

    fn normalize(&mut self) {
        let scale = self.a.max_abs();
        assert!(scale > 0.0, "a must be nonzero");
        let lead = self
            .a
            .terms()
            .find(|(_, c)| c.abs() > 1e-9 * scale)
            .map(|(_, c)| *c)
            .expect("a must be nonzero");
        if lead < 0.0 {
            self.a = self.a.neg();
            self.b = self.b.neg();
        }
    }

    pub fn identity(sig: Signature, alpha: i8) -> Self {
        Self::new(
            Multivector::one(&sig.algebra()),
            Multivector::one(&cl2(alpha)),
            sig,
            alpha,
        )
    }

    /// The twisted unit `1̃ = [1,−1]`.
    pub fn twisted_unit(sig: Signature, alpha: i8) -> Self {
        Self::new(
            Multivector::one(&sig.algebra()),
            Multivector::one(&cl2(alpha)).neg(),
            sig,
            alpha,
        )
    }

    /// `D̂ = [1,D]` with `D = e₁ ∈ Pin₂(α)`.
    pub fn d_hat(sig: Signature, alpha: i8) -> Self {
        Self::new(
            Multivector::one(&sig.algebra()),
            Multivector::generator(&cl2(alpha), 1),
            sig,
            alpha,
        )
    }

    /// The `Spin(V,h)` component (canonical representative).
    pub fn a(&self) -> &Multivector<f64> {
        &self.a
    }

    /// The `Pin₂(α)` component (canonical representative).
    pub fn b(&self) -> &Multivector<f64> {
        &self.b
    }

    pub fn mul(&self, other: &SpinoElement) -> SpinoElement {
        assert_eq!(self.sig, other.sig);
        assert_eq!(self.alpha, other.alpha);
        SpinoElement::new(
            self.a.mul(&other.a),
            self.b.mul(&other.b),
            self.sig,
            self.alpha,
        )
    }

    pub fn inverse(&self) -> SpinoElement {
        SpinoElement::new(
            self.a.group_inverse().expect("a invertible"),
            self.b.group_inverse().expect("b invertible"),
            self.sig,
            self.alpha,
        )
    }

    /// Distance between sign classes (zero iff equal in the quotient).
    pub fn dist(&self, other: &SpinoElement) -> f64 {
        let direct = component_dist(&self.a, &other.a).max(component_dist(&self.b, &other.b));
        let flipped = component_dist(&self.a, &other.a.neg())
            .max(component_dist(&self.b, &other.b.neg()));
        direct.min(flipped)
    }

    /// Parity morphism `η̃([a,b]) = η_α(b)`.
    pub fn eta_tilde(&self) -> i8 {
        if self.b.is_even() {
            1
        } else {
            -1
        }
    }

    /// `μ([a,b]) = Ad₀⁽²⁾(b)`.
    pub fn mu(&self, tol: f64) -> DMatrix<f64> {
        self.b.vector_rep(false, tol).expect("b acts on the plane")
    }

    /// `μ̃ = det(μ)·μ = Ãd₀⁽²⁾(b)`.
    pub fn mu_tilde(&self, tol: f64) -> DMatrix<f64> {
        let m = self.mu(tol);
        let det = m.determinant().round();
        det * m
    }

    /// `λ([a,b]) = Ad₀(a)`.
    pub fn lambda(&self, tol: f64) -> DMatrix<f64> {
        self.a.vector_rep(false, tol).expect("a acts on V")
    }

    /// `λ̃([a,b]) = det(Ad₀⁽²⁾(b))·Ad₀(a)`.
    pub fn lambda_tilde(&self, tol: f64) -> DMatrix<f64> {
        let det = self.mu(tol).determinant().round();
        det * self.lambda(tol)
    }

    /// `ρ = (λ, μ̃)`.
    pub fn rho(&self, tol: f64) -> (DMatrix<f64>, DMatrix<f64>) {
        (self.lambda(tol), self.mu_tilde(tol))
    }

    /// `ρ̃ = (λ̃, μ)`.
    pub fn rho_tilde(&self, tol: f64) -> (DMatrix<f64>, DMatrix<f64>) {
        (self.lambda_tilde(tol), self.mu(tol))
    }

    /// Conjugation by `D̂` (the involution `K` at the group level).
    pub fn conj_by_d_hat(&self) -> SpinoElement {
        let d = Multivector::generator(&cl2(self.alpha), 1);
        let d_inv = d.group_inverse().unwrap();
        SpinoElement::new(
            self.a.clone(),
            d.mul(&self.b).mul(&d_inv),
            self.sig,
            self.alpha,
        )
    }
}

fn component_dist(x: &Multivector<f64>, y: &Multivector<f64>) -> f64 {
    x.sub(y).max_abs()
}

/// Subgroups with explicit membership descriptions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subgroup {
    /// `{1, 1̃}`.
    Center,
    /// `U = {[1, z(θ)]}`.
    U,
    /// `Ŝpin = {[a, 1]}`.
    SpinHat,
    /// `Ŝpinᶜ = {[a, z]}` (`z` even).
    SpincHat,
    /// `P̂in_α = {[a,1]} ∪ {[a,D]}` — the fixed points of `K`.
    PinHat,
    /// `Γ_{o,α} = ⟨D̂⟩ = {1, D̂, D̂², D̂³}`.
    GammaO,
}

fn is_pm_scalar(m: &Multivector<f64>, tol: f64) -> bool {
    m.sub(&m.grade_part(0)).max_abs() <= tol && (m.scalar_part().abs() - 1.0).abs() <= tol
}

fn is_pm_d(m: &Multivector<f64>, tol: f64) -> bool {
    let d_part = m.grade_part(1);
    m.sub(&d_part).max_abs() <= tol
        && (d_part.blade(0b01).abs() - 1.0).abs() <= tol
        && d_part.blade(0b10).abs() <= tol
}

/// Membership test against the explicit subgroup descriptions.
pub fn subgroup_test(g: &SpinoElement, which: Subgroup, tol: f64) -> bool {
    let a_scalar = is_pm_scalar(g.a(), tol);
    match which {
        Subgroup::Center => a_scalar && is_pm_scalar(g.b(), tol),
        Subgroup::U => a_scalar && g.b().is_even(),
        Subgroup::SpinHat => is_pm_scalar(g.b(), tol),
        Subgroup::SpincHat => g.b().is_even(),
        Subgroup::PinHat => is_pm_scalar(g.b(), tol) || is_pm_d(g.b(), tol),
        Subgroup::GammaO => a_scalar && (is_pm_scalar(g.b(), tol) || is_pm_d(g.b(), tol)),
    }
}

/// Random element of `Spinᵒ_α(V,h)`.
pub fn random_element(sig: Signature, alpha: i8, rng: &mut ChaCha8Rng) -> SpinoElement {
    let a = sample::spin_element(&sig.algebra(), rng);
    let b = sample::pin_element(&cl2(alpha), rng);
    SpinoElement::new(a, b, sig, alpha)
}

/// The algebra of `Cl(V̂, ĥ_α)`: two extra generators squaring to `α`.
pub fn hat_algebra(sig: Signature, alpha: i8) -> Algebra {
    sig.algebra().extend(&[alpha, alpha])
}

/// The algebra of `Cl(V′, h′_α)`: a further generator squaring to `−1`.
pub fn prime_algebra(sig: Signature, alpha: i8) -> Algebra {
    sig.algebra().extend(&[alpha, alpha, -1])
}

/// The embedding `j([a,b]) = a·b ∈ Cl(V̂, ĥ_α)` (b's generators renumbered
/// to `e_{d+1}, e_{d+2}`).
pub fn embed_j(g: &SpinoElement) -> Multivector<f64> {
    let target = hat_algebra(g.sig, g.alpha);
    let a = g.a().lift(&target);
    let b = g.b().shift(&target, g.sig.dim());
    a.mul(&b)
}

/// The embedding `j′ = ŝ′ ∘ j ∈ Cl(V′, h′_α)`, where `ŝ′` fixes the first
/// `d` generators and sends `e_{d+1} ↦ e_{d+1}e_{d+3}`, `e_{d+2} ↦ e_{d+2}e_{d+3}`.
pub fn embed_jprime(g: &SpinoElement) -> Multivector<f64> {
    let d = g.sig.dim();
    let target = prime_algebra(g.sig, g.alpha);
    let mut images: Vec<Multivector<f64>> = (1..=d)
        .map(|i| Multivector::generator(&target, i))
        .collect();
    images.push(Multivector::basis_blade(&target, (1 << d) | (1 << (d + 2)), 1.0));
    images.push(Multivector::basis_blade(&target, (1 << (d + 1)) | (1 << (d + 2)), 1.0));
    embed_j(g).apply_morphism(&target, &images)
}

/// `G(A,B) = A ⊕ B` as a block-diagonal matrix.
pub fn block_diag2(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let (n, m) = (a.nrows(), b.nrows());
    let mut out = DMatrix::zeros(n + m, n + m);
    out.view_mut((0, 0), (n, n)).copy_from(a);
    out.view_mut((n, n), (m, m)).copy_from(b);
    out
}

/// `F(A,B) = (det B)A ⊕ (det B)B ⊕ (det B)` (a `(d+3)×(d+3)` matrix).
pub fn f_map(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let det = b.determinant().round();
    let mut out = block_diag2(&(det * a), &(det * b));
    let n = out.nrows();
    let mut big = DMatrix::zeros(n + 1, n + 1);
    big.view_mut((0, 0), (n, n)).copy_from(&out);
    big[(n, n)] = det;
    out = big;
    out
}

/// `F̃(A,B) = A ⊕ B ⊕ (det B)`.
pub fn f_tilde_map(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let det = b.determinant().round();
    let inner = block_diag2(a, b);
    let n = inner.nrows();
    let mut big = DMatrix::zeros(n + 1, n + 1);
    big.view_mut((0, 0), (n, n)).copy_from(&inner);
    big[(n, n)] = det;
    big
}

/// Relative residual: absolute error scaled by the magnitude of the
/// matrices compared (hyperbolic rotations can have large entries).
fn rel_residual(err: f64, scale: f64) -> f64 {
    err / scale.max(1.0)
}

/// Residual of the untwisted embedding identity
/// `Âd₀(j(g)) = λ̃(g) ⊕ μ(g)` on one element (relative to the matrix scale).
pub fn eq1_residual(g: &SpinoElement, tol: f64) -> f64 {
    let lhs = embed_j(g).vector_rep(false, tol).expect("j(g) invertible");
    let scale = lhs.abs().max();
    let (lt, mu) = (g.lambda_tilde(tol), g.mu(tol));
    rel_residual((lhs - block_diag2(&lt, &mu)).abs().max(), scale)
}

/// Residual of the twisted embedding identity
/// `Âd̃₀(j(g)) = λ(g) ⊕ μ̃(g)` on one element.
pub fn eq2_residual(g: &SpinoElement, tol: f64) -> f64 {
    let lhs = embed_j(g).vector_rep(true, tol).expect("j(g) invertible");
    let scale = lhs.abs().max();
    let (l, mt) = (g.lambda(tol), g.mu_tilde(tol));
    rel_residual((lhs - block_diag2(&l, &mt)).abs().max(), scale)
}

/// Residual of `Ad₀′(j′(g)) = F(ρ̃(g)) = F̃(ρ(g))` on one element
/// (both right-hand sides are checked; the residual is the max).
pub fn e1_residual(g: &SpinoElement, tol: f64) -> f64 {
    let lhs = embed_jprime(g).vector_rep(false, tol).expect("j'(g) invertible");
    let scale = lhs.abs().max();
    let (lt, mu) = g.rho_tilde(tol);
    let (l, mt) = g.rho(tol);
    let r1 = (&lhs - f_map(&lt, &mu)).abs().max();
    let r2 = (&lhs - f_tilde_map(&l, &mt)).abs().max();
    rel_residual(r1.max(r2), scale)
}

/// Outcome of one named structural check.
#[derive(Debug, Clone, Serialize)]
pub struct StructCheck {
    pub id: String,
    pub ok: bool,
    pub residual: f64,
}

/// Checks the splitting statements:
/// for `α = +1`, `R_ξ(1̂) = D̂` squares to the identity and `Ad(D̂)`
/// conjugates the circle factor; for `α = −1`, `D̂² = 1̃ ≠ 1` so the
/// candidate `ℤ₂`-lift fails; in both cases `Ad([a,1])` fixes `U`
/// pointwise (the `ζ_α` action).
pub fn splittings_check(
    sig: Signature,
    alpha: i8,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Vec<StructCheck> {
    let mut rng = sample::rng(seed);
    let mut out = Vec::new();
    let one = SpinoElement::identity(sig, alpha);
    let tu = SpinoElement::twisted_unit(sig, alpha);
    let dh = SpinoElement::d_hat(sig, alpha);
    let dh2 = dh.mul(&dh);

    if alpha == 1 {
        let r = dh2.dist(&one);
        out.push(StructCheck { id: "dhat_squares_to_identity".into(), ok: r <= tol, residual: r });
    } else {
        let r_tu = dh2.dist(&tu);
        let r_one = dh2.dist(&one);
        out.push(StructCheck {
            id: "dhat_squares_to_twisted_unit".into(),
            ok: r_tu <= tol && r_one > 0.5,
            residual: r_tu,
        });
    }

    // Ad(D̂) on Ŝpinᶜ conjugates z(θ) ↦ z(−θ); Ad([a,1]) fixes U pointwise.
    let mut max_conj: f64 = 0.0;
    let mut max_fix: f64 = 0.0;
    for _ in 0..samples {
        let theta = sample::angle(&mut rng);
        let a = sample::spin_element(&sig.algebra(), &mut rng);
        let u = SpinoElement::new(
            Multivector::one(&sig.algebra()),
            crate::lowdim::z_theta(alpha, theta),
            sig,
            alpha,
        );
        let u_conj = SpinoElement::new(
            Multivector::one(&sig.algebra()),
            crate::lowdim::z_theta(alpha, -theta),
            sig,
            alpha,
        );
        // Ad(D̂)([1,z(θ)]) = [1, z(−θ)].
        max_conj = max_conj.max(dh.mul(&u).mul(&dh.inverse()).dist(&u_conj));
        // ζ_α([a,1]) acts trivially on U.
        let x = SpinoElement::new(a, Multivector::one(&cl2(alpha)), sig, alpha);
        max_fix = max_fix.max(x.mul(&u).mul(&x.inverse()).dist(&u));
    }
    out.push(StructCheck {
        id: "ad_dhat_conjugates_circle".into(),
        ok: max_conj <= tol,
        residual: max_conj,
    });
    out.push(StructCheck {
        id: "zeta_even_fixes_circle".into(),
        ok: max_fix <= tol,
        residual: max_fix,
    });
    out
}
