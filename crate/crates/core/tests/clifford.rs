//! Exact-arithmetic checks for the Clifford engine, including an
//! independent naive oracle for the blade product sign.

use num_bigint::BigInt;
use num_rational::BigRational;
use spino_lab::clifford::{
    is_eta_orthogonal, parse_multivector, volume_element, volume_square, Algebra, Involution,
    Multivector, Signature,
};
use spino_lab::sample;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Naive blade product: concatenate the generator lists and bubble-sort,
/// flipping the sign on each adjacent swap and contracting equal pairs
/// with the generator square.
fn naive_blade_mul(squares: &[i8], a: u32, b: u32) -> (u32, i8) {
    let mut seq: Vec<usize> = (0..squares.len())
        .filter(|i| a >> i & 1 == 1)
        .chain((0..squares.len()).filter(|i| b >> i & 1 == 1))
        .collect();
    let mut sign = 1i8;
    'outer: loop {
        for i in 0..seq.len().saturating_sub(1) {
            if seq[i] == seq[i + 1] {
                sign *= squares[seq[i]];
                seq.drain(i..=i + 1);
                continue 'outer;
            }
            if seq[i] > seq[i + 1] {
                seq.swap(i, i + 1);
                sign = -sign;
                continue 'outer;
            }
        }
        break;
    }
    let mask = seq.iter().fold(0u32, |m, &i| m | 1 << i);
    (mask, sign)
}

#[test]
fn blade_product_matches_naive_oracle() {
    for d in 0..=5usize {
        for p in 0..=d {
            let sig = Signature::new(p, d - p);
            let alg = sig.algebra();
            let blades = 1u32 << d;
            for a in 0..blades {
                for b in 0..blades {
                    assert_eq!(
                        alg.blade_mul(a, b),
                        naive_blade_mul(alg.squares(), a, b),
                        "({p},{}) blades {a:#b}·{b:#b}",
                        d - p
                    );
                }
            }
        }
    }
}

#[test]
fn generator_relations_hold_exactly() {
    for d in 0..=6usize {
        for p in 0..=d {
            let alg = Signature::new(p, d - p).algebra();
            for i in 1..=d {
                for j in 1..=d {
                    let ei: Multivector<BigRational> = Multivector::generator(&alg, i);
                    let ej: Multivector<BigRational> = Multivector::generator(&alg, j);
                    let anti = ei.mul(&ej).add(&ej.mul(&ei));
                    let expect = if i == j {
                        Multivector::scalar(&alg, rat(2 * alg.square(i - 1) as i64, 1))
                    } else {
                        Multivector::zero(&alg)
                    };
                    assert_eq!(anti.sub(&expect).is_zero(), true, "({p},{}) e{i},e{j}", d - p);
                }
            }
        }
    }
}

#[test]
fn product_is_associative_and_distributive() {
    let mut rng = sample::rng(7);
    for (p, q) in [(3usize, 0usize), (0, 3), (2, 2), (1, 2), (3, 3)] {
        let alg = Signature::new(p, q).algebra();
        for _ in 0..30 {
            let a = sample::rational_multivector(&alg, 4, &mut rng);
            let b = sample::rational_multivector(&alg, 4, &mut rng);
            let c = sample::rational_multivector(&alg, 4, &mut rng);
            assert!(a.mul(&b).mul(&c).sub(&a.mul(&b.mul(&c))).is_zero());
            assert!(a.mul(&b.add(&c)).sub(&a.mul(&b).add(&a.mul(&c))).is_zero());
        }
    }
}

#[test]
fn involutions_are_antiautomorphisms() {
    let mut rng = sample::rng(11);
    let alg = Signature::new(2, 2).algebra();
    for _ in 0..40 {
        let a = sample::rational_multivector(&alg, 4, &mut rng);
        let b = sample::rational_multivector(&alg, 4, &mut rng);
        // π is an automorphism; τ and τ̃ reverse products.
        let pi = |m: &Multivector<BigRational>| m.involution(Involution::Grade);
        let tau = |m: &Multivector<BigRational>| m.involution(Involution::Reversion);
        let tt = |m: &Multivector<BigRational>| m.involution(Involution::TwistedReversion);
        assert!(pi(&a.mul(&b)).sub(&pi(&a).mul(&pi(&b))).is_zero());
        assert!(tau(&a.mul(&b)).sub(&tau(&b).mul(&tau(&a))).is_zero());
        assert!(tt(&a.mul(&b)).sub(&tt(&b).mul(&tt(&a))).is_zero());
        // τ̃ = π ∘ τ, and all three are involutive.
        assert!(tt(&a).sub(&pi(&tau(&a))).is_zero());
        assert!(tau(&tau(&a)).sub(&a).is_zero());
        assert!(pi(&pi(&a)).sub(&a).is_zero());
        assert!(tt(&tt(&a)).sub(&a).is_zero());
    }
}

/// `Ñ(c₀ + c₁e₁ + c₂e₂ + c₃e₁e₂) = c₀² − s₁c₁² − s₂c₂² + s₁s₂c₃²`:
/// the quaternion norm for squares (−1,−1) and the split-quaternion
/// norm for (+1,+1).
#[test]
fn twisted_norm_matches_quaternion_formulas() {
    let mut rng = sample::rng(13);
    for (s1, s2) in [(-1i8, -1i8), (1, 1)] {
        let alg = Algebra::new(vec![s1, s2]);
        for _ in 0..50 {
            let a = sample::rational_multivector(&alg, 4, &mut rng);
            let n = a.twisted_norm();
            assert!(n.is_scalar());
            let (c0, c1, c2, c3) = (a.blade(0b00), a.blade(0b01), a.blade(0b10), a.blade(0b11));
            let s1r = rat(s1 as i64, 1);
            let s2r = rat(s2 as i64, 1);
            let expect = c0.clone() * c0 - s1r.clone() * c1.clone() * c1 - s2r.clone() * c2.clone() * c2
                + s1r * s2r * c3.clone() * c3;
            assert_eq!(n.scalar_part(), expect);
        }
    }
}

/// Rational points on the unit circle give even elements of `Cl₂(−)` with
/// `Ñ = 1` exactly, hence exact group inverses.
#[test]
fn rational_circle_points_have_unit_twisted_norm() {
    let mut rng = sample::rng(17);
    let alg = Algebra::new(vec![-1, -1]);
    for _ in 0..50 {
        let (c, s) = sample::rational_circle_point(&mut rng);
        let mut z = Multivector::scalar(&alg, c);
        z.set_blade(0b11, s);
        let n = z.twisted_norm();
        assert!(n.is_scalar());
        assert_eq!(n.scalar_part(), rat(1, 1));
    }
}

#[test]
fn volume_square_follows_signature_formula() {
    for d in 1..=11usize {
        for p in 0..=d {
            let q = d - p;
            let alg = Signature::new(p, q).algebra();
            let vol: Multivector<BigRational> = volume_element(&alg, 1);
            let sq = vol.mul(&vol);
            assert!(sq.is_scalar());
            let table = volume_square(&alg);
            assert_eq!(sq.scalar_part(), rat(table as i64, 1), "({p},{q})");
            // Closed form: (−1)^{d(d−1)/2} (−1)^q.
            let formula = if (d * (d - 1) / 2 + q) % 2 == 0 { 1 } else { -1 };
            assert_eq!(table, formula);
            // ν² = −1 whenever p − q ≡ 3, 7 (mod 8).
            let m8 = Signature::new(p, q).pq_mod8();
            if m8 == 3 || m8 == 7 {
                assert_eq!(table, -1, "({p},{q})");
            }
        }
    }
}

#[test]
fn group_inverse_inverts_pin_elements() {
    let mut rng = sample::rng(19);
    for (p, q) in [(3usize, 0usize), (1, 2), (2, 2)] {
        let alg = Signature::new(p, q).algebra();
        for _ in 0..20 {
            let a = sample::pin_element(&alg, &mut rng);
            let inv = a.group_inverse().expect("pin elements are invertible");
            let resid = a.mul(&inv).sub(&Multivector::one(&alg)).max_abs();
            assert!(resid < 1e-9, "residual {resid:.3e}");
        }
    }
}

#[test]
fn vector_rep_lands_in_the_orthogonal_group() {
    let mut rng = sample::rng(23);
    for (p, q) in [(3usize, 0usize), (1, 2)] {
        let alg = Signature::new(p, q).algebra();
        for _ in 0..15 {
            // A unit vector acts (twisted) as an η-orthogonal reflection.
            let v = sample::unit_vector(&alg, &mut rng);
            let m = v.vector_rep(true, 1e-9).expect("unit vector acts on V");
            assert!(is_eta_orthogonal(&m, &alg, 1e-8));
            assert!((m.determinant().abs() - 1.0).abs() < 1e-8);
            // A spin element acts as a special η-orthogonal map.
            let s = sample::spin_element(&alg, &mut rng);
            let m = s.vector_rep(true, 1e-9).expect("spin element acts on V");
            assert!(is_eta_orthogonal(&m, &alg, 1e-8));
            assert!((m.determinant() - 1.0).abs() < 1e-8);
        }
    }
}

#[test]
fn display_parse_round_trip() {
    let mut rng = sample::rng(29);
    let alg = Signature::new(2, 1).algebra();
    for _ in 0..40 {
        let a = sample::rational_multivector(&alg, 4, &mut rng);
        let s = format!("{a}");
        let back = parse_multivector(&alg, &s).expect("own display must parse");
        assert!(back.sub(&a).is_zero(), "{s}");
    }
}
