#![allow(dead_code)]

use cevian::{CevianTriple, Point, Scalar, Triangle};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut impl Rng, num: i64, den: i64) -> Scalar {
    Scalar::ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// A non-degenerate triangle with small rational coordinates.
pub fn triangle(rng: &mut impl Rng) -> Triangle {
    loop {
        let mut p = || Point::new(rational(rng, 40, 9), rational(rng, 40, 9));
        if let Ok(t) = Triangle::new(p(), p(), p()) {
            return t;
        }
    }
}

pub fn triangles(seed: u64, n: usize) -> Vec<Triangle> {
    let mut r = rng(seed);
    (0..n).map(|_| triangle(&mut r)).collect()
}

pub fn triple(rng: &mut impl Rng) -> CevianTriple {
    CevianTriple::new(rational(rng, 30, 7), rational(rng, 30, 7), rational(rng, 30, 7))
}
