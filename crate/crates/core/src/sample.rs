//! Deterministic pseudo-random data for sanity checks and tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{Ctx, Polynomial};

/// 64-bit linear congruential generator (Knuth's MMIX constants).
#[derive(Clone, Debug)]
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed ^ 0x9e37_79b9_7f4a_7c15)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        self.0
    }

    /// Uniform-ish integer in `lo..=hi`, taken from the high bits.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + ((self.next_u64() >> 33) % span) as i64
    }

    pub fn below(&mut self, n: usize) -> usize {
        ((self.next_u64() >> 33) % n as u64) as usize
    }
}

/// Up to `count` points with coordinates in `-9..=9` at which none of
/// `denominators` vanishes. Gives up after `50 * count` draws.
pub fn sample_points(
    ctx: &Ctx,
    seed: u64,
    count: usize,
    denominators: &[Polynomial],
) -> Vec<Vec<BigRational>> {
    let mut rng = Lcg::new(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count * 50 {
        if out.len() == count {
            break;
        }
        let point: Vec<BigRational> = (0..ctx.len())
            .map(|_| BigRational::from_integer(BigInt::from(rng.range(-9, 9))))
            .collect();
        if denominators.iter().all(|d| !d.eval(&point).is_zero()) {
            out.push(point);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VarContext;

    #[test]
    fn reproducible_and_pole_free() {
        let ctx = VarContext::with_variables(["x", "y"]).unwrap();
        let d = Polynomial::var(&ctx, 0) - Polynomial::var(&ctx, 1);
        let a = sample_points(&ctx, 7, 20, std::slice::from_ref(&d));
        let b = sample_points(&ctx, 7, 20, std::slice::from_ref(&d));
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        assert!(a.iter().all(|p| p[0] != p[1]));
    }
}
