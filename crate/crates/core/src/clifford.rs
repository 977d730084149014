//! Exact arithmetic in real Clifford algebras of diagonal quadratic forms.
//!
//! An algebra is described by the list of generator squares (`+1` or `-1`);
//! the standard signature `(p,q)` puts the `+1` generators first. Multivectors
//! store only nonzero blade coefficients, indexed by bitmask over generator
//! indices, and are generic over the coefficient scalar.

use crate::scalar::Coeff;
use nalgebra::DMatrix;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Maximum number of generators (blades are `u32` bitmasks; the largest case
/// exercised by the workbench is `d = 11 + 3 = 14`).
pub const MAX_DIM: usize = 16;

/// Orthogonal signature `(p,q)`: `p` generators squaring to `+1` followed by
/// `q` squaring to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Self {
        assert!(p + q <= MAX_DIM, "dimension {} exceeds cap {}", p + q, MAX_DIM);
        Signature { p, q }
    }

    /// Total dimension `d = p + q`.
    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    /// `p - q` reduced to `{0, …, 7}`.
    pub fn pq_mod8(&self) -> usize {
        (self.p as i64 - self.q as i64).rem_euclid(8) as usize
    }

    /// Generator squares in order: the underlying diagonal algebra data.
    pub fn algebra(&self) -> Algebra {
        Algebra::new((0..self.dim()).map(|i| if i < self.p { 1 } else { -1 }).collect())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.q)
    }
}

impl FromStr for Signature {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (p, q) = s.split_once(',').ok_or_else(|| format!("expected `p,q`, got `{s}`"))?;
        let p = p.trim().parse::<usize>().map_err(|e| e.to_string())?;
        let q = q.trim().parse::<usize>().map_err(|e| e.to_string())?;
        if p + q > MAX_DIM {
            return Err(format!("dimension {} exceeds cap {}", p + q, MAX_DIM));
        }
        Ok(Signature { p, q })
    }
}

/// A real Clifford algebra on anticommuting generators with the given squares.
///
/// Most of the workbench uses [`Signature::algebra`]; the embedding
/// constructions append extra generators whose squares depend on `α`, which is
/// why the square list is kept general rather than forced into `(p,q)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    squares: Arc<[i8]>,
}

impl Algebra {
    pub fn new(squares: Vec<i8>) -> Self {
        assert!(squares.len() <= MAX_DIM, "dimension exceeds cap {MAX_DIM}");
        assert!(squares.iter().all(|s| *s == 1 || *s == -1), "generator squares must be ±1");
        Algebra { squares: squares.into() }
    }

    pub fn dim(&self) -> usize {
        self.squares.len()
    }

    /// Square of generator `i` (zero-based).
    pub fn square(&self, i: usize) -> i8 {
        self.squares[i]
    }

    pub fn squares(&self) -> &[i8] {
        &self.squares
    }

    /// The algebra extended by extra generators with the given squares.
    pub fn extend(&self, extra: &[i8]) -> Algebra {
        let mut v = self.squares.to_vec();
        v.extend_from_slice(extra);
        Algebra::new(v)
    }

    /// Diagonal matrix of the underlying quadratic form.
    pub fn eta(&self) -> DMatrix<f64> {
        DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            self.dim(),
            self.squares.iter().map(|s| *s as f64),
        ))
    }

    /// Product of two basis blades: resulting blade and sign.
    ///
    /// The sign counts the transpositions needed to interleave the two sorted
    /// generator lists, then applies a generator square for every index
    /// appearing in both blades.
    pub fn blade_mul(&self, a: u32, b: u32) -> (u32, i8) {
        let mut sign = 1i32;
        // Transpositions: each generator of `b` moves past the generators of
        // `a` with strictly larger index.
        for j in 0..self.dim() {
            if b >> j & 1 == 1 {
                let above = a >> (j + 1);
                if (above.count_ones() & 1) == 1 {
                    sign = -sign;
                }
            }
        }
        // Repeated generators contract to their squares.
        let mut common = a & b;
        while common != 0 {
            let j = common.trailing_zeros() as usize;
            sign *= self.squares[j] as i32;
            common &= common - 1;
        }
        (a ^ b, sign as i8)
    }
}

/// Which involutive (anti)automorphism to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Involution {
    /// Grade involution `π`: `-1` on odd blades.
    Grade,
    /// Reversion `τ`: reverses the factor order of each blade.
    Reversion,
    /// Twisted reversion `τ̃ = π ∘ τ`.
    TwistedReversion,
}

/// A multivector: finitely many blade coefficients over a fixed algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<T: Coeff> {
    alg: Algebra,
    coeffs: BTreeMap<u32, T>,
}

impl<T: Coeff> Multivector<T> {
    pub fn zero(alg: &Algebra) -> Self {
        Multivector { alg: alg.clone(), coeffs: BTreeMap::new() }
    }

    pub fn scalar(alg: &Algebra, c: T) -> Self {
        let mut m = Self::zero(alg);
        m.set_blade(0, c);
        m
    }

    pub fn one(alg: &Algebra) -> Self {
        Self::scalar(alg, T::one())
    }

    /// Generator `e_i`, one-based as in the usual notation.
    pub fn generator(alg: &Algebra, i: usize) -> Self {
        assert!((1..=alg.dim()).contains(&i), "generator e{i} out of range");
        Self::basis_blade(alg, 1 << (i - 1), T::one())
    }

    /// A single blade with the given coefficient.
    pub fn basis_blade(alg: &Algebra, blade: u32, c: T) -> Self {
        assert!(blade < (1u32 << alg.dim()), "blade out of range");
        let mut m = Self::zero(alg);
        m.set_blade(blade, c);
        m
    }

    /// Grade-1 element with the given coordinates.
    pub fn vector(alg: &Algebra, coords: &[T]) -> Self {
        assert_eq!(coords.len(), alg.dim());
        let mut m = Self::zero(alg);
        for (i, c) in coords.iter().enumerate() {
            m.set_blade(1 << i, c.clone());
        }
        m
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    /// Blade coefficient (zero if absent).
    pub fn blade(&self, blade: u32) -> T {
        self.coeffs.get(&blade).cloned().unwrap_or_else(T::zero)
    }

    pub fn set_blade(&mut self, blade: u32, c: T) {
        if c.is_negligible() {
            self.coeffs.remove(&blade);
        } else {
            self.coeffs.insert(blade, c);
        }
    }

    fn add_to_blade(&mut self, blade: u32, c: T) {
        let v = self.blade(blade) + c;
        self.set_blade(blade, v);
    }

    /// Iterates over stored (blade, coefficient) pairs in blade order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &T)> {
        self.coeffs.iter().map(|(b, c)| (*b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The scalar (grade-0) coefficient.
    pub fn scalar_part(&self) -> T {
        self.blade(0)
    }

    /// Whether every non-scalar coefficient is negligible.
    pub fn is_scalar(&self) -> bool {
        self.coeffs.keys().all(|b| *b == 0)
    }

    pub fn grade_part(&self, k: usize) -> Self {
        let mut m = Self::zero(&self.alg);
        for (b, c) in self.terms() {
            if b.count_ones() as usize == k {
                m.set_blade(b, c.clone());
            }
        }
        m
    }

    /// Whether all blades have even grade.
    pub fn is_even(&self) -> bool {
        self.coeffs.keys().all(|b| b.count_ones() % 2 == 0)
    }

    pub fn neg(&self) -> Self {
        self.scale(&T::from_int(-1))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.alg, other.alg, "algebra mismatch");
        let mut m = self.clone();
        for (b, c) in other.terms() {
            m.add_to_blade(b, c.clone());
        }
        m
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut m = Self::zero(&self.alg);
        for (b, v) in self.terms() {
            m.set_blade(b, v.clone() * c.clone());
        }
        m
    }

    /// Geometric (Clifford) product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.alg, other.alg, "algebra mismatch");
        let mut m = Self::zero(&self.alg);
        for (ba, ca) in self.terms() {
            for (bb, cb) in other.terms() {
                let (blade, sign) = self.alg.blade_mul(ba, bb);
                m.add_to_blade(blade, ca.clone() * cb.clone() * T::from_int(sign as i64));
            }
        }
        m
    }

    pub fn involution(&self, kind: Involution) -> Self {
        let mut m = Self::zero(&self.alg);
        for (b, c) in self.terms() {
            let k = b.count_ones() as i64;
            let flip = match kind {
                Involution::Grade => k % 2 == 1,
                Involution::Reversion => (k * (k - 1) / 2) % 2 == 1,
                Involution::TwistedReversion => (k * (k + 1) / 2) % 2 == 1,
            };
            m.set_blade(b, if flip { -c.clone() } else { c.clone() });
        }
        m
    }

    /// Twisted norm `Ñ(a) = τ̃(a)·a`; a scalar on the Clifford group.
    pub fn twisted_norm(&self) -> Self {
        self.involution(Involution::TwistedReversion).mul(self)
    }

    /// Inverse of a Clifford-group element, via the twisted norm.
    ///
    /// Returns an error when `Ñ(a)` fails to be a nonzero scalar, in which
    /// case the element is outside the domain this workbench needs inverses
    /// on.
    pub fn group_inverse(&self) -> Result<Self, String> {
        let n = self.twisted_norm();
        // Scalar up to relative rounding error: long products of unit vectors
        // cancel their non-scalar parts only to machine precision.
        let resid = n.sub(&n.grade_part(0)).max_abs();
        if resid > 1e-9 * n.max_abs().max(1.0) {
            return Err(format!(
                "twisted norm is not a scalar (residual {resid:.3e}); not a Clifford-group element"
            ));
        }
        let n0 = n.scalar_part();
        if n0.is_negligible() {
            return Err("twisted norm vanishes; element not invertible".into());
        }
        let inv = self.involution(Involution::TwistedReversion).scale(&(T::one() / n0));
        Ok(inv)
    }

    /// Applies the algebra morphism determined by generator images.
    ///
    /// `images[i]` is the image of `e_{i+1}` in the target algebra; blades map
    /// to ordered products of generator images. Well-definedness (images
    /// anticommute and square correctly) is the caller's obligation and is
    /// exercised by tests.
    pub fn apply_morphism(&self, target: &Algebra, images: &[Multivector<T>]) -> Multivector<T> {
        assert_eq!(images.len(), self.alg.dim());
        let mut out = Multivector::zero(target);
        for (b, c) in self.terms() {
            let mut prod = Multivector::one(target);
            for i in 0..self.alg.dim() {
                if b >> i & 1 == 1 {
                    prod = prod.mul(&images[i]);
                }
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Re-interprets the element in an extended algebra that keeps the
    /// original generators first (coefficients carried over blade-wise).
    pub fn lift(&self, target: &Algebra) -> Multivector<T> {
        assert!(target.dim() >= self.alg.dim());
        assert_eq!(&target.squares()[..self.alg.dim()], self.alg.squares());
        let mut out = Multivector::zero(target);
        for (b, c) in self.terms() {
            out.set_blade(b, c.clone());
        }
        out
    }

    /// Same element with generator indices shifted up by `offset`.
    pub fn shift(&self, target: &Algebra, offset: usize) -> Multivector<T> {
        assert!(target.dim() >= self.alg.dim() + offset);
        assert_eq!(
            &target.squares()[offset..offset + self.alg.dim()],
            self.alg.squares()
        );
        let mut out = Multivector::zero(target);
        for (b, c) in self.terms() {
            out.set_blade(b << offset, c.clone());
        }
        out
    }

    /// Numeric coefficient view (used by matrix extraction).
    pub fn to_f64(&self) -> Multivector<f64> {
        let mut out = Multivector::zero(&self.alg);
        for (b, c) in self.terms() {
            out.set_blade(b, c.to_f64());
        }
        out
    }

    /// Largest absolute coefficient, numerically.
    pub fn max_abs(&self) -> f64 {
        self.terms().map(|(_, c)| c.to_f64().abs()).fold(0.0, f64::max)
    }

    /// Matrix of the (un)twisted vector representation in the generator
    /// basis: `v ↦ a v a⁻¹`, or `v ↦ π(a) v a⁻¹` when `twisted`.
    ///
    /// Fails when `a` is not invertible through its twisted norm or when the
    /// action does not preserve the span of the generators (residual above
    /// `tol` relative to the input scale).
    pub fn vector_rep(&self, twisted: bool, tol: f64) -> Result<DMatrix<f64>, String> {
        let inv = self.group_inverse()?;
        let left = if twisted { self.involution(Involution::Grade) } else { self.clone() };
        let d = self.alg.dim();
        let mut m = DMatrix::<f64>::zeros(d, d);
        for j in 0..d {
            let ej = Multivector::generator(&self.alg, j + 1);
            let w = left.mul(&ej).mul(&inv);
            let resid = w.sub(&w.grade_part(1)).max_abs();
            if resid > tol {
                return Err(format!(
                    "adjoint action of the element leaves the vector space (residual {resid:.3e})"
                ));
            }
            for i in 0..d {
                m[(i, j)] = w.blade(1 << i).to_f64();
            }
        }
        Ok(m)
    }
}

/// Volume element `ν = e₁e₂…e_d` (`orientation = -1` negates it).
pub fn volume_element<T: Coeff>(alg: &Algebra, orientation: i8) -> Multivector<T> {
    let d = alg.dim();
    assert!(d >= 1, "volume element needs at least one generator");
    let blade = if d == 32 { u32::MAX } else { (1u32 << d) - 1 };
    Multivector::basis_blade(alg, blade, T::from_int(orientation as i64))
}

/// `ν²` as a sign (always `±1` for diagonal forms).
pub fn volume_square(alg: &Algebra) -> i8 {
    let v: Multivector<f64> = volume_element(alg, 1);
    let s = v.mul(&v);
    let c = s.scalar_part();
    debug_assert!(s.is_scalar() && (c - c.round()).abs() < 1e-12 && c.abs() == 1.0);
    if c > 0.0 {
        1
    } else {
        -1
    }
}

/// Checks `MᵀηM = η` for the diagonal form of `alg`.
pub fn is_eta_orthogonal(m: &DMatrix<f64>, alg: &Algebra, tol: f64) -> bool {
    let eta = alg.eta();
    (m.transpose() * &eta * m - eta).abs().max() <= tol
}

// ---------------------------------------------------------------------------
// Text format: `c0 + c1*e1 + c12*e1e2 + ...`, rational coefficients `n/d`.
// ---------------------------------------------------------------------------

fn blade_name(blade: u32) -> String {
    if blade == 0 {
        return "1".to_string();
    }
    let mut s = String::new();
    for i in 0..32 {
        if blade >> i & 1 == 1 {
            s.push('e');
            s.push_str(&(i + 1).to_string());
        }
    }
    s
}

impl<T: Coeff> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if b == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{}*{}", c, blade_name(b))?;
            }
        }
        Ok(())
    }
}

/// Parses the text format over exact rationals relative to an algebra.
pub fn parse_multivector(
    alg: &Algebra,
    input: &str,
) -> Result<Multivector<num_rational::BigRational>, String> {
    use num_rational::BigRational;
    let mut out = Multivector::zero(alg);
    for term in input.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err("empty term".to_string());
        }
        let (coeff_str, blade_str) = match term.find('e') {
            Some(pos) => (&term[..pos], &term[pos..]),
            None => (term, ""),
        };
        let coeff_str = coeff_str.trim().trim_end_matches('*').trim();
        let coeff: BigRational = match coeff_str {
            "" => Coeff::from_int(1),
            "-" => Coeff::from_int(-1),
            s => s.parse().map_err(|e| format!("bad coefficient `{s}`: {e}"))?,
        };
        let mut blade = 0u32;
        if !blade_str.is_empty() {
            for idx in blade_str.split('e').skip(1) {
                let i: usize = idx
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad generator index `{idx}`: {e}"))?;
                if i == 0 || i > alg.dim() {
                    return Err(format!("generator e{i} out of range for dimension {}", alg.dim()));
                }
                let bit = 1u32 << (i - 1);
                if blade & bit != 0 {
                    return Err(format!("repeated generator e{i} in blade"));
                }
                blade |= bit;
            }
        }
        let v = out.blade(blade) + coeff;
        out.set_blade(blade, v);
    }
    Ok(out)
}
