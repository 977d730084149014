//! Elementary real pinor representations of `Cl_{p,q}` for
//! `p − q ≡ 3, 7 (mod 8)`.
//!
//! In these signatures the algebra is of complex type: the irreducible real
//! representation has dimension `N = 2^{(d+1)/2}`, Schur algebra
//! `𝕊 = span{I, J}` with `J = γ₀(ν)`, and a two-dimensional anticommutant
//! `𝔸 = span{D, JD}` generated by an `𝕊`-antilinear conjugation operator `D`
//! with `D² = α_{p,q}·I`, where `α_{p,q} = (−1)^{(p−q+1)/4}`.
//!
//! Construction: complex gamma matrices of dimension `2^{(d−1)/2}` are built
//! from tensor products of the Pauli generators, negative-square generators
//! pick up a factor `i`, and the last generator is taken proportional to the
//! product of the others; the result is realified by `a+bi ↦ [[a,−b],[b,a]]`.
//! Irreducibility over `ℝ` is then *certified* by computing the centralizer
//! dimension, not assumed.

use crate::clifford::{Multivector, Signature};
use crate::lowdim::cl2;
use crate::spino::SpinoElement;
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Maximum supported dimension (N = 64 real dimensions).
pub const MAX_REP_DIM: usize = 11;

/// The sign `α_{p,q} = (−1)^{(p−q+1)/4}` for `p − q ≡ 3, 7 (mod 8)`.
pub fn alpha_pq(p: usize, q: usize) -> Result<i8, String> {
    let sig = Signature::new(p, q);
    match sig.pq_mod8() {
        3 => Ok(-1),
        7 => Ok(1),
        m => Err(format!("p-q ≡ {m} (mod 8): no elementary real pinor representation here")),
    }
}

/// An elementary real pinor representation: `d` generator matrices and the
/// complex-structure matrix `J = γ₀(ν)`.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    pub sig: Signature,
    pub n: usize,
    pub gens: Vec<DMatrix<f64>>,
    pub j: DMatrix<f64>,
}

fn kron(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    a.kronecker(b)
}

fn pauli() -> [DMatrix<Complex64>; 3] {
    let z = Complex64::new(0.0, 0.0);
    let o = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    [
        DMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        DMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        DMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
    ]
}

/// Realification `a+bi ↦ [[a,−b],[b,a]]` blockwise.
fn realify(m: &DMatrix<Complex64>) -> DMatrix<f64> {
    let n = m.nrows();
    let mut out = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            let v = m[(r, c)];
            out[(2 * r, 2 * c)] = v.re;
            out[(2 * r, 2 * c + 1)] = -v.im;
            out[(2 * r + 1, 2 * c)] = v.im;
            out[(2 * r + 1, 2 * c + 1)] = v.re;
        }
    }
    out
}

/// Builds the representation. Fails outside the supported signatures.
pub fn build_gamma0(sig: Signature) -> Result<MatrixRep, String> {
    alpha_pq(sig.p, sig.q)?;
    let d = sig.dim();
    if d > MAX_REP_DIM {
        return Err(format!("dimension {d} exceeds the supported cap {MAX_REP_DIM}"));
    }
    let m = (d - 1) / 2;
    let cdim = 1usize << m;
    let [s1, s2, s3] = pauli();
    let id = |k: usize| DMatrix::<Complex64>::identity(1 << k, 1 << k);
    let i_unit = Complex64::new(0.0, 1.0);

    // Complex anticommuting generators squaring to +1.
    let mut base: Vec<DMatrix<Complex64>> = Vec::with_capacity(2 * m);
    for k in 0..m {
        let mut g_odd = id(0);
        let mut g_even = id(0);
        for _ in 0..k {
            g_odd = kron(&g_odd, &s3);
            g_even = kron(&g_even, &s3);
        }
        g_odd = kron(&g_odd, &s1);
        g_even = kron(&g_even, &s2);
        g_odd = kron(&g_odd, &id(m - k - 1));
        g_even = kron(&g_even, &id(m - k - 1));
        base.push(g_odd);
        base.push(g_even);
    }

    let squares = sig.algebra();
    let mut cgens: Vec<DMatrix<Complex64>> = Vec::with_capacity(d);
    for (i, g) in base.iter().enumerate() {
        cgens.push(if squares.square(i) == 1 { g.clone() } else { g.map(|v| i_unit * v) });
    }
    // Last generator: proportional to the product of the first 2m, with an
    // `i` factor when needed to hit the required square.
    let mut prod = DMatrix::<Complex64>::identity(cdim, cdim);
    for g in &cgens {
        prod = &prod * g;
    }
    let p2 = &prod * &prod;
    let s = p2[(0, 0)].re.round() as i8;
    debug_assert!((p2 - DMatrix::<Complex64>::identity(cdim, cdim).map(|v| v * Complex64::new(s as f64, 0.0))).map(|v| v.norm()).max() < 1e-9);
    let target = squares.square(d - 1);
    let last = if s == target { prod } else { prod.map(|v| i_unit * v) };
    cgens.push(last);

    // J is the image of the volume element; in these signatures the complex
    // volume element is `±i·I`.
    let mut vol = DMatrix::<Complex64>::identity(cdim, cdim);
    for g in &cgens {
        vol = &vol * g;
    }

    let rep = MatrixRep {
        sig,
        n: 2 * cdim,
        gens: cgens.iter().map(realify).collect(),
        j: realify(&vol),
    };
    verify_clifford_relations(&rep, 1e-12)?;
    let j2 = &rep.j * &rep.j + DMatrix::<f64>::identity(rep.n, rep.n);
    if j2.abs().max() > 1e-12 {
        return Err("volume element image fails J² = −I".into());
    }
    Ok(rep)
}

/// Exact check of `γ(e_i)γ(e_j) + γ(e_j)γ(e_i) = 2h_{ij}·I`.
pub fn verify_clifford_relations(rep: &MatrixRep, tol: f64) -> Result<(), String> {
    let alg = rep.sig.algebra();
    let id = DMatrix::<f64>::identity(rep.n, rep.n);
    for i in 0..rep.gens.len() {
        for j in i..rep.gens.len() {
            let anti = &rep.gens[i] * &rep.gens[j] + &rep.gens[j] * &rep.gens[i];
            let expect = if i == j { 2.0 * alg.square(i) as f64 } else { 0.0 };
            let resid = (anti - expect * &id).abs().max();
            if resid > tol {
                return Err(format!("Clifford relation ({i},{j}) residual {resid:.3e}"));
            }
        }
    }
    Ok(())
}

/// Evaluates a multivector under the representation (blades map to ordered
/// products of generator matrices).
///
/// The generators are signed permutation matrices, so each blade matrix is
/// composed in `O(N)` instead of by dense multiplication; a dense fallback
/// covers representations without that shape.
pub fn evaluate(rep: &MatrixRep, mv: &Multivector<f64>) -> DMatrix<f64> {
    assert_eq!(mv.algebra(), &rep.sig.algebra());
    let perms: Option<Vec<SignedPerm>> = rep.gens.iter().map(signed_perm).collect();
    let mut out = DMatrix::<f64>::zeros(rep.n, rep.n);
    match perms {
        Some(perms) => {
            for (blade, c) in mv.terms() {
                let mut sp = SignedPerm::identity(rep.n);
                for i in 0..rep.sig.dim() {
                    if blade >> i & 1 == 1 {
                        sp = sp.compose(&perms[i]);
                    }
                }
                for r in 0..rep.n {
                    out[(r, sp.perm[r])] += *c * sp.sign[r] as f64;
                }
            }
        }
        None => {
            for (blade, c) in mv.terms() {
                let mut prod = DMatrix::<f64>::identity(rep.n, rep.n);
                for i in 0..rep.sig.dim() {
                    if blade >> i & 1 == 1 {
                        prod = &prod * &rep.gens[i];
                    }
                }
                out += *c * prod;
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Centralizer / anticommutant solver.
// ---------------------------------------------------------------------------

/// Signed permutation view of a matrix: `row r` has its only nonzero entry
/// `sign[r]` in column `perm[r]`. All constructed generator matrices have
/// this shape, which turns the (anti)commutation equations into exact sign
/// constraints between pairs of matrix entries.
struct SignedPerm {
    perm: Vec<usize>,
    sign: Vec<i8>,
}

impl SignedPerm {
    fn identity(n: usize) -> Self {
        SignedPerm { perm: (0..n).collect(), sign: vec![1; n] }
    }

    /// Matrix product `self · other` of the two signed permutations.
    fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let n = self.perm.len();
        let mut perm = vec![0usize; n];
        let mut sign = vec![0i8; n];
        for r in 0..n {
            perm[r] = other.perm[self.perm[r]];
            sign[r] = self.sign[r] * other.sign[self.perm[r]];
        }
        SignedPerm { perm, sign }
    }
}

fn signed_perm(m: &DMatrix<f64>) -> Option<SignedPerm> {
    let n = m.nrows();
    let mut perm = vec![0usize; n];
    let mut sign = vec![0i8; n];
    for r in 0..n {
        let mut found = None;
        for c in 0..n {
            let v = m[(r, c)];
            if v.abs() > 0.5 {
                if found.is_some() || (v.abs() - 1.0).abs() > 1e-12 {
                    return None;
                }
                found = Some((c, if v > 0.0 { 1i8 } else { -1 }));
            } else if v.abs() > 1e-12 {
                return None;
            }
        }
        let (c, s) = found?;
        perm[r] = c;
        sign[r] = s;
    }
    Some(SignedPerm { perm, sign })
}

/// Union-find with parity: tracks `x_u = ±x_v` constraints.
struct ParityUf {
    parent: Vec<usize>,
    /// Sign of this node relative to its parent.
    parity: Vec<i8>,
    dead: Vec<bool>,
}

impl ParityUf {
    fn new(n: usize) -> Self {
        ParityUf { parent: (0..n).collect(), parity: vec![1; n], dead: vec![false; n] }
    }

    fn find(&mut self, u: usize) -> (usize, i8) {
        if self.parent[u] == u {
            return (u, 1);
        }
        let (root, par) = self.find(self.parent[u]);
        self.parent[u] = root;
        self.parity[u] *= par;
        (root, self.parity[u])
    }

    /// Imposes `x_u = rel · x_v`; marks the component dead on contradiction
    /// (which forces every entry in it to zero).
    fn union(&mut self, u: usize, v: usize, rel: i8) {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            if pu != rel * pv {
                self.dead[ru] = true;
            }
            return;
        }
        // x_ru = pu⁻¹ x_u = pu rel pv x_rv.
        self.parent[ru] = rv;
        self.parity[ru] = pu * rel * pv;
        if self.dead[ru] {
            self.dead[rv] = true;
        }
    }
}

/// Solves `T γᵢ = ε γᵢ T` for all generators; returns an exact basis of the
/// solution space. `eps = +1` gives the centralizer (Schur algebra), `−1`
/// the anticommutant.
pub fn commutation_solutions(rep: &MatrixRep, eps: i8) -> Vec<DMatrix<f64>> {
    let n = rep.n;
    let perms: Vec<SignedPerm> = rep
        .gens
        .iter()
        .map(|g| signed_perm(g).expect("generator matrices are signed permutations"))
        .collect();
    let mut uf = ParityUf::new(n * n);
    for sp in &perms {
        for i in 0..n {
            for j in 0..n {
                // T[i][j]·s_j = ε·s_i·T[π(i)][π(j)]
                let rel = eps * sp.sign[i] * sp.sign[j];
                uf.union(i * n + j, sp.perm[i] * n + sp.perm[j], rel);
            }
        }
    }
    // Collect live components.
    let mut members: std::collections::BTreeMap<usize, Vec<(usize, i8)>> = Default::default();
    for u in 0..n * n {
        let (root, par) = uf.find(u);
        if !uf.dead[root] {
            members.entry(root).or_default().push((u, par));
        }
    }
    members
        .into_values()
        .map(|nodes| {
            let mut m = DMatrix::<f64>::zeros(n, n);
            for (u, par) in nodes {
                m[(u / n, u % n)] = par as f64;
            }
            m
        })
        .collect()
}

/// The natural subspaces of the representation.
#[derive(Debug, Clone)]
pub struct NaturalSubspaces {
    /// Basis of the Schur algebra (centralizer); expected `{I, J}`-span.
    pub schur: Vec<DMatrix<f64>>,
    /// Basis of the anticommutant; expected `{D, JD}`-span.
    pub anti: Vec<DMatrix<f64>>,
}

impl NaturalSubspaces {
    /// Basis of the twist space `𝕋 = 𝕊 + 𝔸`.
    pub fn twist(&self) -> Vec<DMatrix<f64>> {
        self.schur.iter().chain(self.anti.iter()).cloned().collect()
    }
}

/// Least-squares residual of `m` against the span of `basis` (also returns
/// the coefficients).
pub fn span_residual(m: &DMatrix<f64>, basis: &[DMatrix<f64>]) -> (Vec<f64>, f64) {
    let n2 = m.nrows() * m.ncols();
    let a = DMatrix::<f64>::from_fn(n2, basis.len(), |r, c| basis[c][(r / m.ncols(), r % m.ncols())]);
    let b = DMatrix::<f64>::from_fn(n2, 1, |r, _| m[(r / m.ncols(), r % m.ncols())]);
    let svd = a.clone().svd(true, true);
    let x = svd.solve(&b, 1e-12).expect("least squares");
    let resid = (&a * &x - b).abs().max();
    (x.column(0).iter().cloned().collect(), resid)
}

/// Computes `𝕊` and `𝔸` by the exact commutation solver and asserts the
/// structural dimensions `dim 𝕊 = dim 𝔸 = 2`, `𝕊 ∩ 𝔸 = {0}`.
pub fn natural_subspaces(rep: &MatrixRep) -> Result<NaturalSubspaces, String> {
    let schur = commutation_solutions(rep, 1);
    let anti = commutation_solutions(rep, -1);
    if schur.len() != 2 || anti.len() != 2 {
        return Err(format!(
            "expected dim 𝕊 = dim 𝔸 = 2, got {} and {}",
            schur.len(),
            anti.len()
        ));
    }
    // 𝕊 ∩ 𝔸 = {0}: the four basis matrices are linearly independent.
    let all: Vec<_> = schur.iter().chain(anti.iter()).cloned().collect();
    let n2 = rep.n * rep.n;
    let m = DMatrix::<f64>::from_fn(n2, 4, |r, c| all[c][(r / rep.n, r % rep.n)]);
    if m.svd(false, false).rank(1e-9) != 4 {
        return Err("𝕊 + 𝔸 is not a direct sum".into());
    }
    Ok(NaturalSubspaces { schur, anti })
}

/// Finds a conjugation operator `D`: `𝕊`-antilinear, anticommuting with all
/// generators, `D² = α_{p,q}·I`. Any anticommutant element squares to a real
/// multiple of the identity with sign `α`, so scaling the first solver basis
/// vector suffices; the full solution set is the torsor `{e^{θJ}D}`.
pub fn find_d(rep: &MatrixRep, subspaces: &NaturalSubspaces) -> Result<DMatrix<f64>, String> {
    let alpha = alpha_pq(rep.sig.p, rep.sig.q)? as f64;
    let b = &subspaces.anti[0];
    let b2 = b * b;
    let c = b2.trace() / rep.n as f64;
    let id = DMatrix::<f64>::identity(rep.n, rep.n);
    if (&b2 - c * &id).abs().max() > 1e-9 {
        return Err("anticommutant element does not square to a scalar".into());
    }
    if c == 0.0 || (c > 0.0) != (alpha > 0.0) {
        return Err(format!("anticommutant square has wrong sign: {c}"));
    }
    let d = b / c.abs().sqrt();
    // D is 𝕊-antilinear: DJ = −JD (automatic: J is an odd product of
    // generators in odd dimension, but we check).
    let dj = (&d * &rep.j + &rep.j * &d).abs().max();
    if dj > 1e-9 {
        return Err("D is not 𝕊-antilinear".into());
    }
    let d2 = (&d * &d - alpha * &id).abs().max();
    if d2 > 1e-12 {
        return Err(format!("D² − αI residual {d2:.3e}"));
    }
    Ok(d)
}

/// Cross-check of the extension description of `D`: adjoining `D` to the
/// generators realizes `Cl(p+1,q)` (α = +1) or `Cl(p,q+1)` (α = −1), i.e.
/// `D` anticommutes with every generator and squares to `α`.
pub fn extension_crosscheck(rep: &MatrixRep, d: &DMatrix<f64>) -> Result<(), String> {
    let alpha = alpha_pq(rep.sig.p, rep.sig.q)?;
    let id = DMatrix::<f64>::identity(rep.n, rep.n);
    let r = (d * d - alpha as f64 * &id).abs().max();
    if r > 1e-12 {
        return Err(format!("extension generator square residual {r:.3e}"));
    }
    for (i, g) in rep.gens.iter().enumerate() {
        let r = (d * g + g * d).abs().max();
        if r > 1e-12 {
            return Err(format!("extension generator fails to anticommute with γ(e_{}) ({r:.3e})", i + 1));
        }
    }
    Ok(())
}

/// Rotates `D` along its torsor: `e^{θJ}D`.
pub fn rotate_d(rep: &MatrixRep, d: &DMatrix<f64>, theta: f64) -> DMatrix<f64> {
    let id = DMatrix::<f64>::identity(rep.n, rep.n);
    (theta.cos() * id + theta.sin() * &rep.j) * d
}

/// Recovers `θ` with `d2 = e^{θJ}·d1`, if the two lie on the same torsor.
pub fn torsor_angle(rep: &MatrixRep, d1: &DMatrix<f64>, d2: &DMatrix<f64>) -> Result<f64, String> {
    // e^{θJ} = d2·d1⁻¹ = α·d2·d1 (since d1² = α). Project onto {I, J}.
    let alpha = alpha_pq(rep.sig.p, rep.sig.q)? as f64;
    let e = alpha * d2 * d1;
    let c = e.trace() / rep.n as f64;
    let s = (rep.j.transpose() * &e).trace() / (rep.j.transpose() * &rep.j).trace();
    let id = DMatrix::<f64>::identity(rep.n, rep.n);
    let resid = (&e - c * id - s * &rep.j).abs().max();
    if resid > 1e-9 || (c * c + s * s - 1.0).abs() > 1e-9 {
        return Err(format!("not on the e^{{θJ}} torsor (residual {resid:.3e})"));
    }
    Ok(s.atan2(c))
}

// ---------------------------------------------------------------------------
// The induced Cl₂(α) representation and γ_o.
// ---------------------------------------------------------------------------

/// The representation `γ⁽²⁾_{ν,D}` of `Cl₂(α)`: `e₁ ↦ D`, `e₂ ↦ −α·J·D`.
#[derive(Debug, Clone)]
pub struct Gamma2 {
    pub alpha: i8,
    pub d: DMatrix<f64>,
    pub e2: DMatrix<f64>,
    /// `J` for the chosen orientation (`nu_sign · γ₀(ν)`).
    pub j: DMatrix<f64>,
}

/// Builds `γ⁽²⁾` for a chosen orientation sign of `ν` and conjugation `D`.
pub fn gamma2(rep: &MatrixRep, nu_sign: i8, d: &DMatrix<f64>) -> Result<Gamma2, String> {
    let alpha = alpha_pq(rep.sig.p, rep.sig.q)?;
    let j = nu_sign as f64 * &rep.j;
    let e2 = -(alpha as f64) * &j * d;
    let g2 = Gamma2 { alpha, d: d.clone(), e2, j };
    // Cl₂(α) relations and γ⁽²⁾(J₀) = J.
    let id = DMatrix::<f64>::identity(rep.n, rep.n);
    let checks = [
        (&g2.d * &g2.d - alpha as f64 * &id).abs().max(),
        (&g2.e2 * &g2.e2 - alpha as f64 * &id).abs().max(),
        (&g2.d * &g2.e2 + &g2.e2 * &g2.d).abs().max(),
        (&g2.d * &g2.e2 - &g2.j).abs().max(),
    ];
    let worst = checks.iter().cloned().fold(0.0, f64::max);
    if worst > 1e-9 {
        return Err(format!("γ⁽²⁾ relation residual {worst:.3e}"));
    }
    Ok(g2)
}

impl Gamma2 {
    /// Evaluates a `Cl₂(α)` multivector.
    pub fn apply(&self, b: &Multivector<f64>) -> DMatrix<f64> {
        assert_eq!(b.algebra(), &cl2(self.alpha));
        let n = self.d.nrows();
        let id = DMatrix::<f64>::identity(n, n);
        let mut out = DMatrix::<f64>::zeros(n, n);
        for (blade, c) in b.terms() {
            let m = match blade {
                0b00 => id.clone(),
                0b01 => self.d.clone(),
                0b10 => self.e2.clone(),
                0b11 => &self.d * &self.e2,
                _ => unreachable!(),
            };
            out += *c * m;
        }
        out
    }
}

/// `γ_o([a,b]) = γ₀(a)·γ⁽²⁾(b)` — well defined on sign classes because both
/// factors are linear in their argument.
pub fn gamma_o(g: &SpinoElement, rep: &MatrixRep, g2: &Gamma2) -> DMatrix<f64> {
    evaluate(rep, g.a()) * g2.apply(g.b())
}

// ---------------------------------------------------------------------------
// Majorana projectors (α = +1 signatures).
// ---------------------------------------------------------------------------

/// The pair `𝒫_± = ½(I ∓ D)`.
#[derive(Debug, Clone)]
pub struct MajoranaProjectors {
    pub plus: DMatrix<f64>,
    pub minus: DMatrix<f64>,
}

/// Builds and verifies the projectors; requires `D² = +I` (α = +1).
pub fn majorana(rep: &MatrixRep, d: &DMatrix<f64>) -> Result<MajoranaProjectors, String> {
    let alpha = alpha_pq(rep.sig.p, rep.sig.q)?;
    if alpha != 1 {
        return Err("Majorana projectors need α = +1 (D² = +I)".into());
    }
    let id = DMatrix::<f64>::identity(rep.n, rep.n);
    let plus = 0.5 * (&id - d);
    let minus = 0.5 * (&id + d);
    for (name, m) in [("plus", &plus), ("minus", &minus)] {
        let r = (m * m - m).abs().max();
        if r > 1e-12 {
            return Err(format!("𝒫_{name} is not idempotent ({r:.3e})"));
        }
    }
    let r = (&plus * &minus).abs().max().max((&plus + &minus - id).abs().max());
    if r > 1e-12 {
        return Err(format!("𝒫_± are not complementary ({r:.3e})"));
    }
    let half = rep.n as f64 / 2.0;
    if (plus.trace() - half).abs() > 1e-9 || (minus.trace() - half).abs() > 1e-9 {
        return Err("projector ranks differ from N/2".into());
    }
    Ok(MajoranaProjectors { plus, minus })
}

// ---------------------------------------------------------------------------
// Matrix JSON serialization.
// ---------------------------------------------------------------------------

/// Row-major JSON image of a representation.
#[derive(Debug, Serialize, Deserialize)]
pub struct RepJson {
    pub p: usize,
    pub q: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub alpha: i8,
    /// `gens[i]` is γ₀(e_{i+1}), row-major.
    pub gens: Vec<Vec<f64>>,
    /// γ₀(ν), row-major.
    pub j: Vec<f64>,
}

fn row_major(m: &DMatrix<f64>) -> Vec<f64> {
    let mut v = Vec::with_capacity(m.nrows() * m.ncols());
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            v.push(m[(r, c)]);
        }
    }
    v
}

impl RepJson {
    pub fn from_rep(rep: &MatrixRep) -> Result<Self, String> {
        Ok(RepJson {
            p: rep.sig.p,
            q: rep.sig.q,
            n: rep.n,
            alpha: alpha_pq(rep.sig.p, rep.sig.q)?,
            gens: rep.gens.iter().map(row_major).collect(),
            j: row_major(&rep.j),
        })
    }
}

// ---------------------------------------------------------------------------
// The supersymmetry-relevant signature table.
// ---------------------------------------------------------------------------

/// One row of the supported low-dimensional signature table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SugraRow {
    pub d: usize,
    pub p: usize,
    pub q: usize,
    pub convention: &'static str,
    pub pq_mod8: usize,
    pub alpha: i8,
}

/// Recomputes the eight catalogued `(p,q)` rows with `d ≤ 11`.
pub fn sugra_table() -> Vec<SugraRow> {
    let rows: [(usize, usize, &'static str); 8] = [
        (3, 0, "Riemannian"),
        (7, 0, "Riemannian"),
        (11, 0, "Riemannian"),
        (1, 2, "Lorentzian mostly minus"),
        (1, 6, "Lorentzian mostly minus"),
        (1, 10, "Lorentzian mostly minus"),
        (4, 1, "Lorentzian mostly plus"),
        (8, 1, "Lorentzian mostly plus"),
    ];
    rows.iter()
        .map(|&(p, q, convention)| {
            let sig = Signature::new(p, q);
            SugraRow {
                d: sig.dim(),
                p,
                q,
                convention,
                pq_mod8: sig.pq_mod8(),
                alpha: alpha_pq(p, q).expect("table rows are supported signatures"),
            }
        })
        .collect()
}
