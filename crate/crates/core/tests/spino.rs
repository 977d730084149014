//! Structure checks for `Spinᵒ_α(V,h)`: the six representations, the two
//! Clifford embeddings, the subgroup lattice, and the splitting dichotomy.

use nalgebra::DMatrix;
use spino_lab::clifford::{Multivector, Signature};
use spino_lab::lowdim::{cl2, z_theta};
use spino_lab::sample;
use spino_lab::spino::{
    e1_residual, eq1_residual, eq2_residual, random_element, splittings_check, subgroup_test,
    SpinoElement, Subgroup,
};

const TOL: f64 = 1e-9;

fn rel(err: f64, scale: f64) -> f64 {
    err / scale.max(1.0)
}

fn mat_rel(lhs: &DMatrix<f64>, rhs: &DMatrix<f64>) -> f64 {
    rel((lhs - rhs).abs().max(), lhs.abs().max())
}

#[test]
fn eta_tilde_is_multiplicative() {
    let mut rng = sample::rng(1);
    for alpha in [1i8, -1] {
        let sig = Signature::new(3, 0);
        for _ in 0..50 {
            let g = random_element(sig, alpha, &mut rng);
            let h = random_element(sig, alpha, &mut rng);
            assert_eq!(g.mul(&h).eta_tilde(), g.eta_tilde() * h.eta_tilde());
        }
    }
}

#[test]
fn six_representations_are_homomorphisms() {
    let mut rng = sample::rng(2);
    for (p, q) in [(3usize, 0usize), (1, 2), (2, 1)] {
        let sig = Signature::new(p, q);
        for alpha in [1i8, -1] {
            for _ in 0..25 {
                let g = random_element(sig, alpha, &mut rng);
                let h = random_element(sig, alpha, &mut rng);
                let gh = g.mul(&h);
                let single: [fn(&SpinoElement, f64) -> DMatrix<f64>; 4] = [
                    SpinoElement::mu,
                    SpinoElement::mu_tilde,
                    SpinoElement::lambda,
                    SpinoElement::lambda_tilde,
                ];
                for f in single {
                    assert!(mat_rel(&f(&gh, TOL), &(f(&g, TOL) * f(&h, TOL))) < TOL);
                }
                for f in [SpinoElement::rho, SpinoElement::rho_tilde] {
                    let (a, b) = f(&gh, TOL);
                    let (ga, gb) = f(&g, TOL);
                    let (ha, hb) = f(&h, TOL);
                    assert!(mat_rel(&a, &(ga * ha)) < TOL);
                    assert!(mat_rel(&b, &(gb * hb)) < TOL);
                }
            }
        }
    }
}

#[test]
fn embeddings_satisfy_the_three_compatibility_equations() {
    let mut rng = sample::rng(3);
    for (p, q) in [(3usize, 0usize), (1, 2), (2, 1)] {
        let sig = Signature::new(p, q);
        for alpha in [1i8, -1] {
            let mut elems = vec![
                SpinoElement::identity(sig, alpha),
                SpinoElement::twisted_unit(sig, alpha),
                SpinoElement::d_hat(sig, alpha),
            ];
            for _ in 0..25 {
                elems.push(random_element(sig, alpha, &mut rng));
            }
            for g in &elems {
                assert!(eq1_residual(g, TOL) < TOL, "eq1 ({p},{q}) α={alpha}");
                assert!(eq2_residual(g, TOL) < TOL, "eq2 ({p},{q}) α={alpha}");
                assert!(e1_residual(g, TOL) < TOL, "e1 ({p},{q}) α={alpha}");
            }
        }
    }
}

#[test]
fn d_hat_square_depends_on_alpha() {
    for (p, q) in [(3usize, 0usize), (1, 2)] {
        let sig = Signature::new(p, q);
        for alpha in [1i8, -1] {
            let dh = SpinoElement::d_hat(sig, alpha);
            let sq = dh.mul(&dh);
            let one = SpinoElement::identity(sig, alpha);
            let tu = SpinoElement::twisted_unit(sig, alpha);
            if alpha == 1 {
                assert!(sq.dist(&one) < TOL);
            } else {
                assert!(sq.dist(&tu) < TOL);
                assert!(sq.dist(&one) > 0.5, "the ℤ₂ lift must fail for α = −1");
            }
        }
    }
}

#[test]
fn subgroup_membership_matches_explicit_descriptions() {
    let mut rng = sample::rng(4);
    let sig = Signature::new(3, 0);
    for alpha in [1i8, -1] {
        let alg = sig.algebra();
        let one = SpinoElement::identity(sig, alpha);
        let tu = SpinoElement::twisted_unit(sig, alpha);
        let dh = SpinoElement::d_hat(sig, alpha);
        for g in [&one, &tu] {
            for which in [
                Subgroup::Center,
                Subgroup::U,
                Subgroup::SpinHat,
                Subgroup::SpincHat,
                Subgroup::PinHat,
                Subgroup::GammaO,
            ] {
                assert!(subgroup_test(g, which, TOL));
            }
        }
        // D̂ sits in the ⟨D̂⟩ torsor pieces but not in the even circle part.
        assert!(subgroup_test(&dh, Subgroup::GammaO, TOL));
        assert!(subgroup_test(&dh, Subgroup::PinHat, TOL));
        assert!(!subgroup_test(&dh, Subgroup::U, TOL));
        assert!(!subgroup_test(&dh, Subgroup::SpincHat, TOL));
        assert!(!subgroup_test(&dh, Subgroup::Center, TOL));
        // [1, z(θ)] generates U ⊂ Ŝpinᶜ.
        let theta = sample::angle(&mut rng);
        let u = SpinoElement::new(Multivector::one(&alg), z_theta(alpha, theta), sig, alpha);
        assert!(subgroup_test(&u, Subgroup::U, TOL));
        assert!(subgroup_test(&u, Subgroup::SpincHat, TOL));
        assert!(!subgroup_test(&u, Subgroup::SpinHat, TOL));
        // [a, 1] generates Ŝpin.
        let a = sample::spin_element(&alg, &mut rng);
        let s = SpinoElement::new(a, Multivector::one(&cl2(alpha)), sig, alpha);
        assert!(subgroup_test(&s, Subgroup::SpinHat, TOL));
        assert!(subgroup_test(&s, Subgroup::PinHat, TOL));
    }
}

#[test]
fn splitting_checks_pass_for_both_alphas() {
    for (p, q) in [(3usize, 0usize), (1, 2)] {
        let sig = Signature::new(p, q);
        for alpha in [1i8, -1] {
            for check in splittings_check(sig, alpha, 50, 0, TOL) {
                assert!(check.ok, "{} (α = {alpha}): residual {:.3e}", check.id, check.residual);
            }
        }
    }
}

#[test]
fn conjugation_by_d_hat_inverts_the_circle_factor() {
    let mut rng = sample::rng(5);
    let sig = Signature::new(1, 2);
    for alpha in [1i8, -1] {
        let alg = sig.algebra();
        for _ in 0..30 {
            let theta = sample::angle(&mut rng);
            let u = SpinoElement::new(Multivector::one(&alg), z_theta(alpha, theta), sig, alpha);
            let expect =
                SpinoElement::new(Multivector::one(&alg), z_theta(alpha, -theta), sig, alpha);
            assert!(u.conj_by_d_hat().dist(&expect) < TOL);
        }
    }
}
