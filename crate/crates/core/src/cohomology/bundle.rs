//! Bundle descriptors and Stiefel–Whitney arithmetic.
//!
//! A bundle is a rank plus a total SW class (degree-0 component 1), with
//! optional formal roots when it is an explicit sum of line bundles. Derived
//! bundles (duals, endomorphism bundles) are computed through the splitting
//! principle: the universal formula is expanded in formal root variables,
//! rewritten in elementary symmetric polynomials, and the elementary
//! symmetric polynomials are substituted by the SW components.

use super::{xor_into, CohomRing, Gf2Class, Mono, Poly};
use std::collections::BTreeSet;
use std::rc::Rc;

/// A real vector bundle at the characteristic-class level.
#[derive(Debug, Clone)]
pub struct BundleDescriptor {
    pub name: String,
    pub rank: usize,
    /// Total SW class `w = 1 + w₁ + w₂ + …`.
    pub total: Gf2Class,
    /// Degree-1 classes of line-bundle summands, when the bundle is an
    /// explicit sum of line bundles.
    pub roots: Option<Vec<Gf2Class>>,
}

impl BundleDescriptor {
    pub fn new(name: impl Into<String>, rank: usize, total: Gf2Class) -> Result<Self, String> {
        let one = Gf2Class::one(total.ring());
        if total.component(0) != one {
            return Err("total SW class must have constant term 1".into());
        }
        Ok(BundleDescriptor { name: name.into(), rank, total, roots: None })
    }

    /// The trivial bundle of a rank.
    pub fn trivial(ring: &Rc<CohomRing>, rank: usize) -> Self {
        let mut b = Self::new(format!("trivial{rank}"), rank, Gf2Class::one(ring)).unwrap();
        b.roots = Some(vec![Gf2Class::zero(ring); rank]);
        b
    }

    /// A line bundle from its first SW class.
    pub fn line(name: impl Into<String>, w1: Gf2Class) -> Self {
        let total = Gf2Class::one(w1.ring()).add(&w1.component(1));
        let mut b = Self::new(name, 1, total).unwrap();
        b.roots = Some(vec![w1.component(1)]);
        b
    }

    /// `w_k`, the degree-`k` component of the total class.
    pub fn w(&self, k: usize) -> Gf2Class {
        self.total.component(k)
    }
}

/// Whitney sum: ranks add, total classes multiply.
pub fn whitney(a: &BundleDescriptor, b: &BundleDescriptor) -> BundleDescriptor {
    assert!(Rc::ptr_eq(a.total.ring(), b.total.ring()), "ring mismatch");
    let roots = match (&a.roots, &b.roots) {
        (Some(x), Some(y)) => Some(x.iter().chain(y).cloned().collect()),
        _ => None,
    };
    BundleDescriptor {
        name: format!("{}⊕{}", a.name, b.name),
        rank: a.rank + b.rank,
        total: a.total.mul(&b.total),
        roots,
    }
}

/// Twist by a line bundle: `w(LP) = Σ_{k=0}^{r} (1 + w₁(L))^k · w_{r−k}(P)`.
pub fn line_twist(p: &BundleDescriptor, l: &BundleDescriptor) -> Result<BundleDescriptor, String> {
    if l.rank != 1 {
        return Err("twisting bundle must be a line bundle".into());
    }
    let ring = p.total.ring();
    assert!(Rc::ptr_eq(ring, l.total.ring()), "ring mismatch");
    let u = Gf2Class::one(ring).add(&l.w(1));
    let mut total = Gf2Class::zero(ring);
    for k in 0..=p.rank {
        total = total.add(&u.pow(k).mul(&p.w(p.rank - k)));
    }
    let roots = p
        .roots
        .as_ref()
        .map(|rs| rs.iter().map(|x| x.add(&l.w(1))).collect());
    Ok(BundleDescriptor {
        name: format!("{}·{}", l.name, p.name),
        rank: p.rank,
        total,
        roots,
    })
}

/// Determinant line bundle: `w₁(det P) = w₁(P)`.
pub fn det_line(p: &BundleDescriptor) -> BundleDescriptor {
    BundleDescriptor::line(format!("det({})", p.name), p.w(1))
}

/// Derived-bundle operations available through the splitting principle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorOp {
    /// `P ⊗ P*` (mod-2 roots `xᵢ + xⱼ` over all ordered pairs).
    HomSelf,
    /// `P ⊗ P` — coincides with `HomSelf` mod 2 since mod-2 roots of the
    /// dual are the roots themselves.
    TensorSelf,
    /// `P*` — SW classes unchanged mod 2.
    Dual,
}

/// Computes the derived bundle by mod-2 root arithmetic (rank ≤ 3).
pub fn split_tensor(a: &BundleDescriptor, op: TensorOp) -> Result<BundleDescriptor, String> {
    if a.rank > 3 {
        return Err("splitting-principle operations support rank ≤ 3".into());
    }
    let ring = a.total.ring();
    if op == TensorOp::Dual {
        let mut b = a.clone();
        b.name = format!("{}*", a.name);
        return Ok(b);
    }
    let r = a.rank;
    let name = format!("{}⊗{}*", a.name, a.name);
    // Universal computation in formal root variables x₁…x_r.
    let fr = CohomRing::free((1..=r).map(|i| (format!("x{i}"), 1)).collect(), ring.dim());
    let mut product = Gf2Class::one(&fr);
    for i in 0..r {
        for j in 0..r {
            // 1 + xᵢ + xⱼ (mod 2; i = j gives the zero root).
            let mut root = Poly::new();
            let mut mi = vec![0u8; r];
            mi[i] += 1;
            xor_into(&mut root, mi);
            let mut mj = vec![0u8; r];
            mj[j] += 1;
            xor_into(&mut root, mj);
            root.insert(vec![0u8; r]);
            product = product.mul(&Gf2Class::from_monos(&fr, root));
        }
    }
    // Rewrite in elementary symmetric polynomials and substitute w_k(a).
    let elem = symmetric_to_elementary(&fr, product.monos().clone(), r)?;
    let mut total = Gf2Class::zero(ring);
    for em in elem {
        // em[k] = exponent of e_{k+1}.
        let mut term = Gf2Class::one(ring);
        for (k, e) in em.iter().enumerate() {
            for _ in 0..*e {
                term = term.mul(&a.w(k + 1));
            }
        }
        total = total.add(&term);
    }
    BundleDescriptor::new(name, r * r, total)
}

/// Elementary symmetric polynomial `e_k(x₁…x_r)` in the free root ring.
fn elementary_sym(fr: &Rc<CohomRing>, r: usize, k: usize) -> Gf2Class {
    let mut monos = Poly::new();
    // All k-subsets of r variables.
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut m = vec![0u8; r];
        for &i in &idx {
            m[i] = 1;
        }
        monos.insert(m);
        // Next combination.
        let mut pos = k;
        loop {
            if pos == 0 {
                return Gf2Class::from_monos(fr, monos);
            }
            pos -= 1;
            if idx[pos] < r - (k - pos) {
                idx[pos] += 1;
                for t in pos + 1..k {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Gauss' algorithm: rewrites a symmetric GF(2) polynomial in the formal
/// roots as a polynomial in the elementary symmetric polynomials. Returns
/// exponent vectors over `e₁…e_r`.
fn symmetric_to_elementary(
    fr: &Rc<CohomRing>,
    mut poly: Poly,
    r: usize,
) -> Result<BTreeSet<Mono>, String> {
    let es: Vec<Gf2Class> = (1..=r).map(|k| elementary_sym(fr, r, k)).collect();
    let mut out: BTreeSet<Mono> = BTreeSet::new();
    let mut guard = 0usize;
    while let Some(lead) = leading_partition(&poly) {
        guard += 1;
        if guard > 100_000 {
            return Err("symmetric rewrite failed to terminate".into());
        }
        // Partition λ₁ ≥ λ₂ ≥ … from the sorted exponents of the leading
        // monomial; the matching e-monomial is ∏ e_i^{λᵢ−λᵢ₊₁}.
        let mut lam = lead.clone();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        let mut e_expo = vec![0u8; r];
        for i in 0..r {
            let next = if i + 1 < r { lam[i + 1] } else { 0 };
            if lam[i] < next {
                return Err("leading monomial is not a partition (input not symmetric?)".into());
            }
            e_expo[i] = lam[i] - next;
        }
        // Expand ∏ e_i^{e_expo[i]} and cancel.
        let mut expansion = Gf2Class::one(fr);
        for (i, e) in e_expo.iter().enumerate() {
            for _ in 0..*e {
                expansion = expansion.mul(&es[i]);
            }
        }
        for m in expansion.monos() {
            xor_into(&mut poly, m.clone());
        }
        if out.contains(&e_expo) {
            return Err("duplicate elementary term".into());
        }
        out.insert(e_expo);
    }
    Ok(out)
}

/// The lex-largest monomial of the highest degree still present.
fn leading_partition(poly: &Poly) -> Option<Mono> {
    poly.iter()
        .max_by_key(|m| {
            let deg: usize = m.iter().map(|e| *e as usize).sum();
            (deg, {
                let mut s = (*m).clone();
                s.sort_unstable_by(|a, b| b.cmp(a));
                s
            }, (*m).clone())
        })
        .cloned()
}

// ---------------------------------------------------------------------------
// Grassmannians Gr_{2,n}.
// ---------------------------------------------------------------------------

/// Builds `H*(Gr_{2,n}; ℤ₂) = ℤ₂[w₁,w₂]/(w̄_{n−1}, w̄_n)` where `w̄` is the
/// series inverse of `1 + w₁ + w₂`, truncated at `dim = 2(n−2) + thicken`
/// (thickening by a trivial factor leaves the ring unchanged but raises the
/// space dimension).
pub fn grassmannian_ring(n: usize, thicken: usize) -> Result<Rc<CohomRing>, String> {
    if n < 3 {
        return Err("need n ≥ 3".into());
    }
    // Compute w̄ in the free ring truncated at degree n.
    let free = CohomRing::free(vec![("w1".into(), 1), ("w2".into(), 2)], n);
    let total = super::parse_class(&free, "1 + w1 + w2")?;
    let wbar = total.inverse()?;
    let relations: Vec<Poly> = [n - 1, n]
        .iter()
        .map(|k| wbar.component(*k).monos().clone())
        .collect();
    let _ = thicken; // ring is insensitive to trivial thickening
    CohomRing::build(vec![("w1".into(), 1), ("w2".into(), 2)], relations, 2 * (n - 2))
}

/// The tautological rank-2 bundle `𝓛_{2,n}` with `w = 1 + w₁ + w₂`.
pub fn tautological(ring: &Rc<CohomRing>) -> Result<BundleDescriptor, String> {
    BundleDescriptor::new("taut", 2, super::parse_class(ring, "1 + w1 + w2")?)
}

/// Which identity the tangent class is derived from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrassMode {
    /// Solve `w(T)·w(𝓛⊗𝓛*) = w(𝓛)^{n+2}`.
    Paper,
    /// Solve the classical `T ⊕ Hom(𝓛,𝓛) = n𝓛*`, i.e.
    /// `w(T)·w(𝓛⊗𝓛*) = w(𝓛)^n`.
    Oracle,
}

/// Total SW class of the tangent bundle of `Gr_{2,n}` (optionally thickened
/// by a trivial rank), in the requested mode.
pub fn grassmannian_tangent(
    ring: &Rc<CohomRing>,
    n: usize,
    thicken: usize,
    mode: GrassMode,
) -> Result<BundleDescriptor, String> {
    let taut = tautological(ring)?;
    let hom = split_tensor(&taut, TensorOp::HomSelf)?;
    let power = match mode {
        GrassMode::Paper => n + 2,
        GrassMode::Oracle => n,
    };
    let total = taut.total.pow(power).mul(&hom.total.inverse()?);
    let name = match mode {
        GrassMode::Paper => "tangent_paper",
        GrassMode::Oracle => "tangent_oracle",
    };
    BundleDescriptor::new(name, 2 * (n - 2) + thicken, total)
}
