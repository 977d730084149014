//! Acceptance gate: one test per top-level acceptance criterion, each
//! emitting a single pass/fail line. The checks reuse the library API only;
//! tolerances match the CLI defaults (1e−9 unless stated otherwise).

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use spino_lab::clifford::{volume_element, Algebra, Multivector, Signature};
use spino_lab::cohomology::bundle::{grassmannian_ring, BundleDescriptor, GrassMode};
use spino_lab::cohomology::catalog::Catalog;
use spino_lab::cohomology::obstruction::{
    obstruct_spinc, obstruct_spino, riemannian_specializations, search_e,
};
use spino_lab::cohomology::{product_ring, CohomRing, Gf2Class, Poly};
use spino_lab::lowdim::{ad0, c0, phi_alpha, rot, verify_diagram, z_theta, O2Element, DIAGRAMS};
use spino_lab::pinor::{
    alpha_pq, build_gamma0, evaluate, extension_crosscheck, find_d, gamma2, gamma_o, majorana,
    natural_subspaces, rotate_d, sugra_table, torsor_angle,
};
use spino_lab::sample;
use spino_lab::spino::{
    e1_residual, eq1_residual, eq2_residual, random_element, splittings_check, SpinoElement,
};

const TOL: f64 = 1e-9;

fn rat(n: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(1))
}

fn pass(line: &str) {
    println!("[PASS] {line}");
}

/// Criterion 1 — Clifford engine: exact associativity and generator
/// relations for every signature with d ≤ 6 on 200 random rational
/// multivectors; ν² = −1 exactly whenever p − q ≡ 3, 7 (mod 8), d ≤ 11.
#[test]
fn criterion_1_clifford_engine() {
    let mut rng = sample::rng(0);
    for d in 0..=6usize {
        for p in 0..=d {
            let alg = Signature::new(p, d - p).algebra();
            let samples: Vec<Multivector<BigRational>> =
                (0..200).map(|_| sample::rational_multivector(&alg, 4, &mut rng)).collect();
            for w in samples.windows(3) {
                let (a, b, c) = (&w[0], &w[1], &w[2]);
                assert!(a.mul(b).mul(c).sub(&a.mul(&b.mul(c))).is_zero());
            }
            for i in 1..=d {
                for j in 1..=d {
                    let ei: Multivector<BigRational> = Multivector::generator(&alg, i);
                    let ej: Multivector<BigRational> = Multivector::generator(&alg, j);
                    let anti = ei.mul(&ej).add(&ej.mul(&ei));
                    let expect = if i == j {
                        Multivector::scalar(&alg, rat(2 * alg.square(i - 1) as i64))
                    } else {
                        Multivector::zero(&alg)
                    };
                    assert!(anti.sub(&expect).is_zero());
                }
            }
        }
    }
    let mut volume_cases = 0usize;
    for d in 1..=11usize {
        for p in 0..=d {
            let sig = Signature::new(p, d - p);
            let m8 = sig.pq_mod8();
            if m8 != 3 && m8 != 7 {
                continue;
            }
            let alg = sig.algebra();
            let nu: Multivector<BigRational> = volume_element(&alg, 1);
            let sq = nu.mul(&nu);
            assert!(sq.is_scalar() && sq.scalar_part() == rat(-1), "({p},{})", d - p);
            volume_cases += 1;
        }
    }
    assert!(volume_cases > 10);
    pass("criterion 1: exact Clifford arithmetic (d ≤ 6) and ν² = −1 (d ≤ 11)");
}

/// Criterion 2 — plane realizations: exact (split-)quaternion twisted-norm
/// formulas; Ad₀⁽²⁾(z(θ)) = R(−2αθ) and Ad₀⁽²⁾(D) = C₀ within 1e−9; the
/// five diagrams commute on 100 samples per α.
#[test]
fn criterion_2_plane_realizations() {
    let mut rng = sample::rng(1);
    for (s1, s2) in [(1i8, 1i8), (-1, -1)] {
        let alg = Algebra::new(vec![s1, s2]);
        for _ in 0..100 {
            let a = sample::rational_multivector(&alg, 4, &mut rng);
            let n = a.twisted_norm();
            assert!(n.is_scalar());
            let (c0v, c1, c2, c3) =
                (a.blade(0b00), a.blade(0b01), a.blade(0b10), a.blade(0b11));
            let expect = c0v.clone() * c0v - rat(s1 as i64) * c1.clone() * c1
                - rat(s2 as i64) * c2.clone() * c2
                + rat((s1 * s2) as i64) * c3.clone() * c3;
            assert_eq!(n.scalar_part(), expect);
        }
    }
    for alpha in [1i8, -1] {
        for _ in 0..50 {
            let theta = sample::angle(&mut rng);
            let m = ad0(&z_theta(alpha, theta), TOL).unwrap();
            assert!((m - rot(-2.0 * alpha as f64 * theta)).abs().max() < TOL);
        }
        let b = phi_alpha(&O2Element::c(alpha)).unwrap();
        assert!((ad0(&b.mv, TOL).unwrap() - c0()).abs().max() < TOL);
        for id in DIAGRAMS {
            let check = verify_diagram(id, alpha, 100, 0, TOL).unwrap();
            assert!(check.max_err < TOL, "{id} α={alpha}: {:.3e}", check.max_err);
        }
    }
    pass("criterion 2: norm formulas, double-angle action, and diagrams diag1–diag5");
}

/// Criterion 3 — non-splitness: 100 sampled odd units of O₂(−) all square
/// to (−1, 0̂); the odd component contains no order-two element.
#[test]
fn criterion_3_non_splitness() {
    let mut rng = sample::rng(2);
    let minus_one = O2Element::unit(-1).neg();
    for _ in 0..100 {
        let u = O2Element::from_angle(sample::angle(&mut rng), true, -1);
        assert!(u.mul(&u).dist(&minus_one) < TOL);
    }
    pass("criterion 3: O₂(−) odd units square to (−1, 0̂) — no right splitting");
}

/// Criterion 4 — Spinᵒ structure: for the five signatures, all six
/// representations are homomorphisms on 100 random pairs; the embeddings
/// satisfy the three compatibility equations on generators and 100 samples;
/// D̂² is 1 or 1̃ exactly per α, exhibiting the α = −1 splitting failure.
#[test]
fn criterion_4_spino_structure() {
    let mut rng = sample::rng(3);
    for (p, q) in [(3usize, 0usize), (1, 2), (2, 1), (7, 0), (1, 6)] {
        let sig = Signature::new(p, q);
        for alpha in [1i8, -1] {
            for _ in 0..100 {
                let g = random_element(sig, alpha, &mut rng);
                let h = random_element(sig, alpha, &mut rng);
                let gh = g.mul(&h);
                let rel = |l: &DMatrix<f64>, r: &DMatrix<f64>| {
                    (l - r).abs().max() / l.abs().max().max(1.0)
                };
                let single: [fn(&SpinoElement, f64) -> DMatrix<f64>; 4] = [
                    SpinoElement::mu,
                    SpinoElement::mu_tilde,
                    SpinoElement::lambda,
                    SpinoElement::lambda_tilde,
                ];
                for f in single {
                    assert!(rel(&f(&gh, TOL), &(f(&g, TOL) * f(&h, TOL))) < TOL);
                }
                for f in [SpinoElement::rho, SpinoElement::rho_tilde] {
                    let (a, b) = f(&gh, TOL);
                    let (ga, gb) = f(&g, TOL);
                    let (ha, hb) = f(&h, TOL);
                    assert!(rel(&a, &(ga * ha)) < TOL && rel(&b, &(gb * hb)) < TOL);
                }
                assert_eq!(gh.eta_tilde(), g.eta_tilde() * h.eta_tilde());
            }

            // Generators and samples through the Clifford embeddings.
            let alg = sig.algebra();
            let mut elems = vec![
                SpinoElement::identity(sig, alpha),
                SpinoElement::twisted_unit(sig, alpha),
                SpinoElement::d_hat(sig, alpha),
            ];
            if p + q >= 2 {
                let e1: Multivector<f64> = Multivector::generator(&alg, 1);
                let e2: Multivector<f64> = Multivector::generator(&alg, 2);
                elems.push(SpinoElement::new(
                    e1.mul(&e2),
                    Multivector::one(&spino_lab::lowdim::cl2(alpha)),
                    sig,
                    alpha,
                ));
            }
            for _ in 0..100 {
                elems.push(random_element(sig, alpha, &mut rng));
            }
            for g in &elems {
                assert!(eq1_residual(g, TOL) < TOL, "eq1 ({p},{q}) α={alpha}");
                assert!(eq2_residual(g, TOL) < TOL, "eq2 ({p},{q}) α={alpha}");
                assert!(e1_residual(g, TOL) < TOL, "e1 ({p},{q}) α={alpha}");
            }

            // D̂² and the splitting dichotomy.
            let dh = SpinoElement::d_hat(sig, alpha);
            let sq = dh.mul(&dh);
            if alpha == 1 {
                assert!(sq.dist(&SpinoElement::identity(sig, alpha)) < TOL);
            } else {
                assert!(sq.dist(&SpinoElement::twisted_unit(sig, alpha)) < TOL);
                assert!(sq.dist(&SpinoElement::identity(sig, alpha)) > 0.5);
            }
            for check in splittings_check(sig, alpha, 50, 0, TOL) {
                assert!(check.ok, "{} ({p},{q}) α={alpha}", check.id);
            }
        }
    }
    pass("criterion 4: six representations, embeddings, and the α = −1 splitting failure");
}

/// Criterion 5 — pinor representations: every table row with d ≤ 11 gives
/// N = 2^{(d+1)/2}, certified two-dimensional Schur/anticommutant spaces,
/// D² = αI within 1e−12, a torsor-consistent second solution, and the
/// equivariance equation on 100 random (g, v) within 1e−9.
#[test]
fn criterion_5_pinor_representations() {
    let mut rng = sample::rng(4);
    for row in sugra_table() {
        let sig = Signature::new(row.p, row.q);
        let rep = build_gamma0(sig).expect("table rows are supported");
        assert_eq!(rep.n, 1usize << ((row.d + 1) / 2), "({},{})", row.p, row.q);
        let sub = natural_subspaces(&rep).unwrap();
        assert_eq!((sub.schur.len(), sub.anti.len()), (2, 2));
        let d = find_d(&rep, &sub).unwrap();
        let id = DMatrix::<f64>::identity(rep.n, rep.n);
        assert!((&d * &d - row.alpha as f64 * &id).abs().max() < 1e-12);
        extension_crosscheck(&rep, &d).unwrap();
        let theta = sample::angle(&mut rng);
        let d2 = rotate_d(&rep, &d, theta);
        let rec = torsor_angle(&rep, &d, &d2).unwrap();
        let diff = (rec - theta).rem_euclid(std::f64::consts::TAU);
        assert!(diff.min(std::f64::consts::TAU - diff) < 1e-8);

        let g2 = gamma2(&rep, 1, &d).unwrap();
        let alg = sig.algebra();
        for _ in 0..100 {
            let g = random_element(sig, row.alpha, &mut rng);
            let coords: Vec<f64> = (0..row.d).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let v = Multivector::vector(&alg, &coords);
            let w = &g.lambda_tilde(TOL) * DMatrix::<f64>::from_column_slice(row.d, 1, &coords);
            let wv = Multivector::vector(&alg, w.column(0).as_slice());
            let go = gamma_o(&g, &rep, &g2);
            let lhs = evaluate(&rep, &wv) * &go;
            let rhs = &go * evaluate(&rep, &v);
            let scale = (go.abs().max() * lhs.abs().max().max(1.0)).max(1.0);
            assert!((lhs - rhs).abs().max() / scale < TOL, "({},{})", row.p, row.q);
        }
    }
    pass("criterion 5: all eight table rows build, certify dimensions, and are equivariant");
}

/// Criterion 6 — Majorana projectors: on the α = +1 rows the projectors
/// are complementary of rank N/2, generators exchange the eigenbundles,
/// and even products preserve them.
#[test]
fn criterion_6_majorana_projectors() {
    let mut rows = 0usize;
    for row in sugra_table() {
        if row.alpha != 1 {
            continue;
        }
        rows += 1;
        let rep = build_gamma0(Signature::new(row.p, row.q)).unwrap();
        let sub = natural_subspaces(&rep).unwrap();
        let d = find_d(&rep, &sub).unwrap();
        let proj = majorana(&rep, &d).unwrap();
        let id = DMatrix::<f64>::identity(rep.n, rep.n);
        assert!((&proj.plus + &proj.minus - &id).abs().max() < TOL);
        assert!((&proj.plus * &proj.plus - &proj.plus).abs().max() < TOL);
        assert!((&proj.plus * &proj.minus).abs().max() < TOL);
        assert!((proj.plus.trace() - rep.n as f64 / 2.0).abs() < TOL);
        for g in &rep.gens {
            assert!((g * &proj.plus - &proj.minus * g * &proj.plus).abs().max() < TOL);
            for h in &rep.gens {
                let gh = g * h;
                assert!((&gh * &proj.plus - &proj.plus * &gh * &proj.plus).abs().max() < TOL);
            }
        }
    }
    assert_eq!(rows, 4, "four α = +1 rows expected");
    pass("criterion 6: Majorana projectors split the α = +1 pinor spaces");
}

/// Criterion 7 — cohomology engine: ℝPⁿ betti numbers all one for n ≤ 7;
/// Gr_{2,3} matches ℤ₂[w₁]/(w₁³) by exhaustive normal-form comparison;
/// Künneth and ×ℝ-stability hold across the catalog.
#[test]
fn criterion_7_cohomology_engine() {
    for n in 1..=7usize {
        let gens = vec![("a".to_string(), 1usize)];
        let rel: Poly = spino_lab::cohomology::parse_poly(&gens, &format!("a^{}", n + 1)).unwrap();
        let ring = CohomRing::build(gens, vec![rel], n).unwrap();
        for k in 0..=n {
            assert_eq!(ring.betti(k), 1, "ℝP{n} degree {k}");
        }
    }

    // Gr_{2,3} against the truncated polynomial ring, exhaustively.
    let gr = grassmannian_ring(3, 0).unwrap();
    let gens = vec![("a".to_string(), 1usize)];
    let rel: Poly = spino_lab::cohomology::parse_poly(&gens, "a^3").unwrap();
    let oracle = CohomRing::build(gens, vec![rel], 2).unwrap();
    let a = Gf2Class::generator(&oracle, "a").unwrap();
    let phi = |c: &Gf2Class| {
        c.monos().iter().fold(Gf2Class::zero(&oracle), |acc, m| {
            acc.add(&a.pow(m[0] as usize + 2 * m[1] as usize))
        })
    };
    let basis: Vec<Gf2Class> = (0..=2usize)
        .flat_map(|deg| gr.basis(deg).to_vec())
        .map(|m| Gf2Class::from_monos(&gr, [m].into_iter().collect()))
        .collect();
    assert_eq!(basis.len(), 3);
    let classes: Vec<Gf2Class> = (0..8u32)
        .map(|mask| {
            basis.iter().enumerate().fold(Gf2Class::zero(&gr), |acc, (i, b)| {
                if mask >> i & 1 == 1 { acc.add(b) } else { acc }
            })
        })
        .collect();
    for x in &classes {
        for y in &classes {
            assert_eq!(phi(&x.add(y)), phi(x).add(&phi(y)));
            assert_eq!(phi(&x.mul(y)), phi(x).mul(&phi(y)));
        }
    }
    let w1 = Gf2Class::generator(&gr, "w1").unwrap();
    let w2 = Gf2Class::generator(&gr, "w2").unwrap();
    assert_eq!(w2, w1.mul(&w1));

    // Künneth over catalog pairs with disjoint generator names.
    let catalog = Catalog::load_default().unwrap();
    let mut pairs = 0usize;
    for s in &catalog.spaces {
        for t in &catalog.spaces {
            if s.dim + t.dim > 8 {
                continue;
            }
            let prod = match product_ring(&s.ring, &t.ring) {
                Ok(r) => r,
                Err(_) => continue,
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
                assert_eq!(prod.betti(k), conv, "{} × {} deg {k}", s.name, t.name);
            }
            pairs += 1;
        }
    }
    assert!(pairs > 10);
    for (base, thick) in [("rp2", "rp2xr"), ("klein", "kleinxr"), ("sigma2", "sigma2xr")] {
        let b = catalog.space(base).unwrap();
        let t = catalog.space(thick).unwrap();
        for k in 0..=b.dim {
            assert_eq!(t.ring.betti(k), b.ring.betti(k), "{thick} deg {k}");
        }
    }
    pass("criterion 7: projective/Grassmannian rings, Künneth, and ×ℝ stability");
}

/// Criterion 8 — obstruction theorems: the four definite reductions; the
/// thickened surfaces with the pulled-back frame; the thickened
/// Grassmannian in paper mode with E = taut, plus an oracle-mode search
/// witness with w = 1 + w₁; the Spinᶜ cases for S², T², ℝP³; and the
/// tangent-derivation discrepancy reported rather than suppressed.
#[test]
fn criterion_8_obstruction_theorems() {
    let specs = riemannian_specializations().unwrap();
    let expected = [
        (1i8, 3usize, "w2E + w2P = 0"),
        (1, 7, "w2E + w1E^2 + w2P = 0"),
        (-1, 3, "w2E + w1E^2 + w2P = 0"),
        (-1, 7, "w2E + w2P = 0"),
    ];
    for (sign, class, cond2) in expected {
        let s = specs
            .iter()
            .find(|s| s.metric_sign == sign && s.pq_mod8 == class)
            .expect("specialization present");
        assert_eq!(s.conditions[0], "w1E + w1P = 0");
        assert_eq!(s.conditions[1], cond2);
    }

    let catalog = Catalog::load_default().unwrap();
    let spino_holds = |name: &str, alpha: i8, e_name: &str, mode: GrassMode| -> bool {
        let space = catalog.space(name).unwrap();
        let tangent = space.tangent(mode).unwrap();
        let e = space.bundle(e_name).unwrap();
        let trivial0 = BundleDescriptor::trivial(&space.ring, 0);
        obstruct_spino(&tangent, &trivial0, e, alpha, space.dim, 0).unwrap().holds
    };
    for name in ["rp2xr", "kleinxr", "sigma2xr"] {
        assert!(spino_holds(name, -1, "frame", GrassMode::Paper), "{name}");
    }
    assert!(spino_holds("gr2n1", 1, "taut", GrassMode::Paper));

    let space = catalog.space("gr2n1").unwrap();
    let tangent = space.tangent(GrassMode::Oracle).unwrap();
    let trivial0 = BundleDescriptor::trivial(&space.ring, 0);
    let outcome = search_e(space, |e| {
        obstruct_spino(&tangent, &trivial0, e, 1, space.dim, 0)
    })
    .unwrap();
    assert_eq!(outcome.witness.expect("oracle-mode witness").1, "1 + w1");

    for name in ["s2", "t2", "rp3"] {
        let space = catalog.space(name).unwrap();
        let tangent = space.tangent(GrassMode::Paper).unwrap();
        let trivial0 = BundleDescriptor::trivial(&space.ring, 0);
        let e = BundleDescriptor::trivial(&space.ring, 2);
        for alpha in [1i8, -1] {
            assert!(obstruct_spinc(&tangent, &trivial0, &e, alpha).unwrap().holds, "{name}");
        }
    }

    // The two tangent derivations disagree on Gr_{2,3}; both are exposed.
    let gr23 = catalog.space("gr23").unwrap();
    let paper = gr23.tangent(GrassMode::Paper).unwrap();
    let oracle = gr23.tangent(GrassMode::Oracle).unwrap();
    assert_ne!(paper.total, oracle.total, "the discrepancy must be visible");
    pass("criterion 8: obstruction reductions, example spaces, search witness, and discrepancy");
}

/// Criterion 9 — the signature table regenerates exactly: eight rows with
/// their conventions, mod-8 classes, and deformation signs.
#[test]
fn criterion_9_signature_table() {
    let table = sugra_table();
    let expected: [(usize, usize, usize, &str, usize, i8); 8] = [
        (3, 3, 0, "Riemannian", 3, -1),
        (7, 7, 0, "Riemannian", 7, 1),
        (11, 11, 0, "Riemannian", 3, -1),
        (3, 1, 2, "Lorentzian mostly minus", 7, 1),
        (7, 1, 6, "Lorentzian mostly minus", 3, -1),
        (11, 1, 10, "Lorentzian mostly minus", 7, 1),
        (5, 4, 1, "Lorentzian mostly plus", 3, -1),
        (9, 8, 1, "Lorentzian mostly plus", 7, 1),
    ];
    assert_eq!(table.len(), 8);
    for (row, (d, p, q, conv, m8, alpha)) in table.iter().zip(expected) {
        assert_eq!((row.d, row.p, row.q), (d, p, q));
        assert_eq!(row.convention, conv);
        assert_eq!(row.pq_mod8, m8);
        assert_eq!(row.alpha, alpha);
        assert_eq!(alpha_pq(p, q), Ok(alpha));
    }
    pass("criterion 9: the eight-row signature table regenerates exactly");
}
