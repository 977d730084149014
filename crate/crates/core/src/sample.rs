//! Seeded random sampling of algebra and group elements.
//!
//! All property checks draw from a `ChaCha8` stream so reports are
//! reproducible byte-for-byte from a seed.

use crate::clifford::{Algebra, Multivector};
use crate::scalar::Coeff;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sparse random rational multivector: up to `terms` blades, small numerators
/// and denominators. Sparsity keeps exact product chains cheap while still
/// exercising every sign path.
pub fn rational_multivector(alg: &Algebra, terms: usize, rng: &mut ChaCha8Rng) -> Multivector<BigRational> {
    let mut m = Multivector::zero(alg);
    let blades = 1u32 << alg.dim();
    for _ in 0..terms {
        let blade = rng.gen_range(0..blades);
        let num = rng.gen_range(-6i64..=6);
        let den = rng.gen_range(1i64..=4);
        let c = BigRational::new(BigInt::from(num), BigInt::from(den));
        let v = m.blade(blade) + c;
        m.set_blade(blade, v);
    }
    m
}

/// Random vector with `h(v,v) = ±1`: normal coordinates rescaled by
/// `|h(v,v)|^{-1/2}`, rejecting near-null vectors.
pub fn unit_vector(alg: &Algebra, rng: &mut ChaCha8Rng) -> Multivector<f64> {
    loop {
        let coords: Vec<f64> = (0..alg.dim())
            .map(|_| {
                // Box–Muller normal deviate.
                let u1: f64 = rng.gen_range(1e-12..1.0);
                let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                (-2.0 * u1.ln()).sqrt() * u2.cos()
            })
            .collect();
        let hvv: f64 = coords
            .iter()
            .enumerate()
            .map(|(i, c)| alg.square(i) as f64 * c * c)
            .sum();
        if hvv.abs() < 0.5 {
            continue; // reject near-null vectors to keep products well-conditioned
        }
        let s = hvv.abs().sqrt();
        let coords: Vec<f64> = coords.into_iter().map(|c| c / s).collect();
        return Multivector::vector(alg, &coords);
    }
}

/// Random element of `Spin(V,h)`: a product of `2k` unit vectors
/// (`k ∈ {1,2,3}`), hence even with `|Ñ| = 1`.
pub fn spin_element(alg: &Algebra, rng: &mut ChaCha8Rng) -> Multivector<f64> {
    if alg.dim() == 0 {
        return Multivector::one(alg);
    }
    let k = rng.gen_range(1..=3usize);
    let mut a = Multivector::one(alg);
    for _ in 0..2 * k {
        a = a.mul(&unit_vector(alg, rng));
    }
    a
}

/// Random element of `Pin(V,h)`: product of `1..=6` unit vectors.
pub fn pin_element(alg: &Algebra, rng: &mut ChaCha8Rng) -> Multivector<f64> {
    if alg.dim() == 0 {
        return Multivector::one(alg);
    }
    let k = rng.gen_range(1..=6usize);
    let mut a = Multivector::one(alg);
    for _ in 0..k {
        a = a.mul(&unit_vector(alg, rng));
    }
    a
}

/// Random angle in `[0, 2π)`.
pub fn angle(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0.0..std::f64::consts::TAU)
}

/// Rational point on the unit circle: `((1-t²)/(1+t²), 2t/(1+t²))`.
pub fn rational_circle_point(rng: &mut ChaCha8Rng) -> (BigRational, BigRational) {
    let num = rng.gen_range(-12i64..=12);
    let den = rng.gen_range(1i64..=6);
    let t = BigRational::new(BigInt::from(num), BigInt::from(den));
    let one: BigRational = Coeff::from_int(1);
    let two: BigRational = Coeff::from_int(2);
    let d = one.clone() + t.clone() * t.clone();
    ((one - t.clone() * t.clone()) / d.clone(), two * t / d)
}
