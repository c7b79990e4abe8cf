//! Deterministic random generation of exact test data.
//!
//! Everything is driven by a seeded ChaCha stream so that probe results
//! and property suites are reproducible run to run. Coefficients draw
//! numerators in [-9, 9] and denominators in [1, 9].

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::{RingCtx, StarPoly};
use crate::quaternion::{Quaternion, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=9);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(rational(rng), rational(rng), rational(rng), rational(rng))
}

pub fn nonzero_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let q = quaternion(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn nonreal_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let q = quaternion(rng);
        if !q.is_real() {
            return q;
        }
    }
}

/// A conjugator: small nonzero integer components.
pub fn conjugator(rng: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let c = Quaternion::from_ints(
            rng.gen_range(-3..=3),
            rng.gen_range(-3..=3),
            rng.gen_range(-3..=3),
            rng.gen_range(-3..=3),
        );
        if !c.is_zero() {
            return c;
        }
    }
}

/// A deterministic batch of conjugators for sampling probes.
pub fn conjugators(count: usize, seed: u64) -> Vec<Quaternion> {
    let mut r = rng(seed);
    (0..count).map(|_| conjugator(&mut r)).collect()
}

/// An exact rational point of the unit imaginary sphere: c i c^-1.
pub fn unit_imaginary(rng: &mut ChaCha8Rng) -> Quaternion {
    let c = conjugator(rng);
    Quaternion::i()
        .conjugate_by(&c)
        .expect("nonzero conjugator")
}

/// A tuple with pairwise commuting components: x_l + t_l u for one
/// shared imaginary direction u.
pub fn commuting_tuple(rng: &mut ChaCha8Rng, n: usize) -> Vec<Quaternion> {
    let dir = loop {
        let d = Quaternion::from_ints(
            0,
            rng.gen_range(-3..=3),
            rng.gen_range(-3..=3),
            rng.gen_range(-3..=3),
        );
        if !d.is_zero() {
            break d;
        }
    };
    (0..n)
        .map(|_| {
            let x = Quaternion::from_rational(rational(rng));
            let t = Quaternion::from_rational(rational(rng));
            &x + &(&t * &dir)
        })
        .collect()
}

/// A pair (a, b) with ab != ba.
pub fn noncommuting_pair(rng: &mut ChaCha8Rng) -> (Quaternion, Quaternion) {
    loop {
        let a = quaternion(rng);
        let b = quaternion(rng);
        if !a.commutes(&b) {
            return (a, b);
        }
    }
}

/// A sparse polynomial with at most `max_terms` monomials of per-variable
/// degree at most `max_degree`.
pub fn poly(rng: &mut ChaCha8Rng, ctx: RingCtx, max_degree: u32, max_terms: usize) -> StarPoly {
    let count = rng.gen_range(0..=max_terms);
    let terms: Vec<_> = (0..count)
        .map(|_| {
            let exps: Vec<u32> = (0..ctx.nvars())
                .map(|_| rng.gen_range(0..=max_degree))
                .collect();
            (exps, quaternion(rng))
        })
        .collect();
    ctx.from_terms(terms).expect("arity correct")
}

pub fn nonzero_poly(
    rng: &mut ChaCha8Rng,
    ctx: RingCtx,
    max_degree: u32,
    max_terms: usize,
) -> StarPoly {
    loop {
        let p = poly(rng, ctx, max_degree, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}
