//! Checks for the GF(2) cohomology engine: ring presentations, class
//! arithmetic, Künneth products, and the bundle calculus.

use spino_lab::cohomology::bundle::{
    det_line, grassmannian_ring, grassmannian_tangent, line_twist, split_tensor, tautological,
    whitney, BundleDescriptor, GrassMode, TensorOp,
};
use spino_lab::cohomology::catalog::Catalog;
use spino_lab::cohomology::{parse_class, parse_poly, product_ring, CohomRing, Gf2Class, Poly};
use std::rc::Rc;

fn rp_ring(n: usize) -> Rc<CohomRing> {
    let gens = vec![("a".to_string(), 1usize)];
    let rel: Poly = parse_poly(&gens, &format!("a^{}", n + 1)).unwrap();
    CohomRing::build(gens, vec![rel], n).unwrap()
}

#[test]
fn projective_space_betti_numbers_are_all_one() {
    for n in 1..=7usize {
        let ring = rp_ring(n);
        for k in 0..=n {
            assert_eq!(ring.betti(k), 1, "ℝP{n}, degree {k}");
        }
        // Products follow a^i·a^j = a^{i+j}, truncated above n.
        let a = Gf2Class::generator(&ring, "a").unwrap();
        for i in 0..=n {
            for j in 0..=n {
                let p = a.pow(i).mul(&a.pow(j));
                if i + j <= n {
                    assert_eq!(p, a.pow(i + j));
                } else {
                    assert!(p.is_zero());
                }
            }
        }
    }
}

/// `H*(Gr_{2,3}) ≅ ℤ₂[w₁]/(w₁³)` with `w₂ = w₁²`, checked exhaustively:
/// the substitution `w₁ ↦ a, w₂ ↦ a²` intertwines addition and
/// multiplication over every pair of classes of the Grassmannian ring.
#[test]
fn gr23_matches_the_truncated_polynomial_oracle() {
    let gr = grassmannian_ring(3, 0).unwrap();
    let oracle = rp_ring(2);
    assert_eq!(gr.dim(), 2);
    for k in 0..=2usize {
        assert_eq!(gr.betti(k), 1, "degree {k}");
    }
    let a = Gf2Class::generator(&oracle, "a").unwrap();
    let phi = |c: &Gf2Class| -> Gf2Class {
        let mut out = Gf2Class::zero(&oracle);
        for m in c.monos() {
            // Monomial w1^i·w2^j ↦ a^{i+2j}.
            let (i, j) = (m[0] as usize, m[1] as usize);
            out = out.add(&a.pow(i + 2 * j));
        }
        out
    };
    // All classes = subsets of the three basis monomials.
    let basis: Vec<Gf2Class> = (0..=2usize)
        .flat_map(|d| gr.basis(d).to_vec())
        .map(|m| Gf2Class::from_monos(&gr, [m].into_iter().collect()))
        .collect();
    let mut classes = Vec::new();
    for mask in 0..1u32 << basis.len() {
        let mut c = Gf2Class::zero(&gr);
        for (i, b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                c = c.add(b);
            }
        }
        classes.push(c);
    }
    for x in &classes {
        for y in &classes {
            assert_eq!(phi(&x.add(y)), phi(x).add(&phi(y)));
            assert_eq!(phi(&x.mul(y)), phi(x).mul(&phi(y)));
        }
    }
    // In particular w₂ reduces to w₁².
    let w1 = Gf2Class::generator(&gr, "w1").unwrap();
    let w2 = Gf2Class::generator(&gr, "w2").unwrap();
    assert_eq!(w2, w1.mul(&w1));
    assert!(w1.pow(3).is_zero());
}

#[test]
fn kunneth_holds_on_catalog_pairs() {
    let catalog = Catalog::load_default().unwrap();
    let mut checked = 0usize;
    for s in &catalog.spaces {
        for t in &catalog.spaces {
            if s.dim + t.dim > 8 {
                continue;
            }
            let prod = match product_ring(&s.ring, &t.ring) {
                Ok(r) => r,
                Err(_) => continue, // generator name clash between factors
            };
            for k in 0..=s.dim + t.dim {
                let conv: usize = (0..=k)
                    .map(|i| {
                        if i <= s.dim && k - i <= t.dim {
                            s.ring.betti(i) * t.ring.betti(k - i)
                        } else {
                            0
                        }
                    })
                    .sum();
                assert_eq!(prod.betti(k), conv, "{} × {}, degree {k}", s.name, t.name);
            }
            checked += 1;
        }
    }
    assert!(checked > 10, "too few product pairs exercised ({checked})");
}

/// Crossing with a line leaves the cohomology unchanged: the catalog's
/// `× ℝ` spaces have the betti numbers of their base, with nothing above.
#[test]
fn crossing_with_a_line_is_betti_stable() {
    let catalog = Catalog::load_default().unwrap();
    for (base, thick) in [("rp2", "rp2xr"), ("klein", "kleinxr"), ("sigma2", "sigma2xr")] {
        let b = catalog.space(base).unwrap();
        let t = catalog.space(thick).unwrap();
        assert_eq!(t.dim, b.dim + 1);
        for k in 0..=b.dim {
            assert_eq!(t.ring.betti(k), b.ring.betti(k), "{thick}, degree {k}");
        }
        assert_eq!(t.ring.betti(t.dim), 0, "{thick} top degree");
    }
    // Likewise a product with a point changes nothing.
    let point = catalog.space("point").unwrap();
    let rp2 = catalog.space("rp2").unwrap();
    let prod = product_ring(&rp2.ring, &point.ring).unwrap();
    for k in 0..=2usize {
        assert_eq!(prod.betti(k), rp2.ring.betti(k));
    }
}

#[test]
fn class_arithmetic_identities() {
    let ring = rp_ring(3);
    let c = parse_class(&ring, "1 + a").unwrap();
    // Neumann-series inverse against direct multiplication.
    let inv = c.inverse().unwrap();
    assert_eq!(c.mul(&inv), Gf2Class::one(&ring));
    assert_eq!(inv.to_poly_string(), "1 + a + a^2 + a^3");
    // Nilpotents are not invertible.
    assert!(parse_class(&ring, "a").unwrap().inverse().is_err());
    // Components pick out homogeneous pieces; display round-trips.
    let c = parse_class(&ring, "1 + a + a^3").unwrap();
    assert_eq!(c.component(1).to_poly_string(), "a");
    assert_eq!(c.component(2).to_poly_string(), "0");
    let back = parse_class(&ring, &c.to_poly_string()).unwrap();
    assert_eq!(back, c);
    // Squaring is additive over GF(2) (Frobenius).
    let x = parse_class(&ring, "a + a^2").unwrap();
    let y = parse_class(&ring, "1 + a").unwrap();
    assert_eq!(
        x.add(&y).mul(&x.add(&y)),
        x.mul(&x).add(&y.mul(&y))
    );
}

#[test]
fn whitney_sum_and_determinant_line() {
    let gens = vec![("x".to_string(), 1usize), ("y".to_string(), 1)];
    let ring = CohomRing::build(gens, vec![], 4).unwrap();
    let x = Gf2Class::generator(&ring, "x").unwrap();
    let y = Gf2Class::generator(&ring, "y").unwrap();
    let l = BundleDescriptor::line("l", x.clone());
    let m = BundleDescriptor::line("m", y.clone());
    let s = whitney(&l, &BundleDescriptor::trivial(&ring, 1));
    assert_eq!(s.rank, 2);
    assert_eq!(s.total, l.total);
    let s2 = whitney(&l, &l);
    assert_eq!(s2.w(1).to_poly_string(), "0"); // x + x = 0
    assert_eq!(s2.w(2).to_poly_string(), "x^2");
    // w₁ adds under ⊕, and w₁(det E) = w₁(E).
    let e = whitney(&l, &m);
    assert_eq!(e.w(1), x.add(&y));
    assert_eq!(e.w(2), x.mul(&y));
    assert_eq!(det_line(&e).w(1), e.w(1));
}

/// `w(P ⊗ L)` for split `P = l₁ ⊕ l₂`: tensoring distributes over the sum.
#[test]
fn line_twist_agrees_with_the_split_computation() {
    let gens = vec![("x".to_string(), 1usize), ("y".to_string(), 1), ("z".to_string(), 1)];
    let ring = CohomRing::build(gens.clone(), vec![], 4).unwrap();
    let x = Gf2Class::generator(&ring, "x").unwrap();
    let y = Gf2Class::generator(&ring, "y").unwrap();
    let z = Gf2Class::generator(&ring, "z").unwrap();
    let p = whitney(
        &BundleDescriptor::line("lx", x.clone()),
        &BundleDescriptor::line("ly", y.clone()),
    );
    let l = BundleDescriptor::line("lz", z.clone());
    let twisted = line_twist(&p, &l).unwrap();
    let split = whitney(
        &BundleDescriptor::line("lxz", x.add(&z)),
        &BundleDescriptor::line("lyz", y.add(&z)),
    );
    assert_eq!(twisted.total, split.total);
}

#[test]
fn tensor_squares_of_a_split_rank2_bundle() {
    let gens = vec![("x".to_string(), 1usize), ("y".to_string(), 1)];
    let ring = CohomRing::build(gens.clone(), vec![], 4).unwrap();
    let x = Gf2Class::generator(&ring, "x").unwrap();
    let y = Gf2Class::generator(&ring, "y").unwrap();
    let e = whitney(
        &BundleDescriptor::line("lx", x.clone()),
        &BundleDescriptor::line("ly", y.clone()),
    );
    // Hom(E,E) has roots {0, x+y, y+x, 0} over GF(2): w = (1+x+y)².
    let hom = split_tensor(&e, TensorOp::HomSelf).unwrap();
    let xy = x.add(&y);
    let expect = Gf2Class::one(&ring).add(&xy).mul(&Gf2Class::one(&ring).add(&xy));
    assert_eq!(hom.rank, 4);
    assert_eq!(hom.total, expect);
    // Duals are invisible to Stiefel–Whitney classes.
    let dual = split_tensor(&e, TensorOp::Dual).unwrap();
    assert_eq!(dual.total, e.total);
}

#[test]
fn grassmannian_tangent_modes_disagree_on_gr23() {
    let ring = grassmannian_ring(3, 0).unwrap();
    let taut = tautological(&ring).unwrap();
    assert_eq!(taut.total.to_poly_string(), "1 + w1 + w2");
    let paper = grassmannian_tangent(&ring, 3, 0, GrassMode::Paper).unwrap();
    let oracle = grassmannian_tangent(&ring, 3, 0, GrassMode::Oracle).unwrap();
    assert_eq!(paper.total.to_poly_string(), "1 + w1");
    assert_eq!(oracle.total.to_poly_string(), "1 + w1 + w2");
    assert_ne!(paper.total, oracle.total);
}

#[test]
fn catalog_rings_validate_and_expose_bundles() {
    let catalog = Catalog::load_default().unwrap();
    assert!(catalog.names().len() >= 15);
    // Tangent data: rank = dim everywhere it is catalogued directly.
    for s in &catalog.spaces {
        if let Ok(t) = s.tangent(GrassMode::Paper) {
            assert_eq!(t.rank, s.dim, "{}", s.name);
        }
    }
    // Orientability: spheres and tori yes, projective planes no.
    assert!(catalog.space("s2").unwrap().orientable().unwrap());
    assert!(catalog.space("t2").unwrap().orientable().unwrap());
    assert!(catalog.space("rp3").unwrap().orientable().unwrap());
    assert!(!catalog.space("rp2").unwrap().orientable().unwrap());
    assert!(!catalog.space("klein").unwrap().orientable().unwrap());
}
