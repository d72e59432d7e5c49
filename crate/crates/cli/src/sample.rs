//! Seeded sampling of Gaussian-rational points on the quadric.
//!
//! A raw sample has numerators and denominators of bounded height; it is
//! projected onto the quadric along a known isotropic direction, where the
//! quadratic condition becomes linear in the remaining coordinate. Identical
//! seeds give identical samples.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hodgetate_core::hodge::project_to_quadric;
use hodgetate_core::quad::QuadSpace;
use hodgetate_core::scalar::{CScalar, Scalar};

pub struct QuadricSampler {
    rng: ChaCha8Rng,
    space: QuadSpace,
    isotropic: Vec<Scalar>,
}

impl QuadricSampler {
    pub fn new(space: QuadSpace, isotropic: Vec<Scalar>, seed: u64) -> Self {
        debug_assert!(space.qv(&isotropic).is_zero());
        QuadricSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            space,
            isotropic,
        }
    }

    fn random_scalar(&mut self) -> Scalar {
        let num = self.rng.random_range(-9i64..=9);
        let den = self.rng.random_range(1i64..=4);
        hodgetate_core::scalar::rat(num, den)
    }

    /// Next quadric point; resamples (bounded) when the raw vector pairs
    /// trivially with the isotropic direction.
    pub fn next_point(&mut self) -> Vec<CScalar> {
        for _ in 0..1000 {
            let y: Vec<CScalar> = (0..self.space.dim())
                .map(|_| CScalar::new(self.random_scalar(), self.random_scalar()))
                .collect();
            if let Some(x) = project_to_quadric(&self.space, &y, &self.isotropic) {
                return x;
            }
        }
        unreachable!("quadric projection kept failing: degenerate setup");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hodgetate_core::degeneration::degeneration_data;

    #[test]
    fn samples_are_exactly_on_the_quadric_and_deterministic() {
        let q = QuadSpace::preset_k3_like(5).unwrap();
        let datum = degeneration_data(&q, 10).unwrap();
        let mut s1 = QuadricSampler::new(datum.vh.clone(), datum.v0_h.clone(), 7);
        let mut s2 = QuadricSampler::new(datum.vh.clone(), datum.v0_h.clone(), 7);
        for _ in 0..10 {
            let a = s1.next_point();
            let b = s2.next_point();
            assert_eq!(a, b);
            assert!(datum.vh.q_complex(&a, &a).is_zero());
        }
        // a different seed gives a different stream
        let mut s3 = QuadricSampler::new(datum.vh.clone(), datum.v0_h.clone(), 8);
        assert_ne!(s3.next_point(), s1.next_point());
    }
}
