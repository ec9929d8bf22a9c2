//! Reproducible random trials.
//!
//! Generator: ChaCha with 8 rounds (`rand_chacha::ChaCha8Rng`), keyed with
//! `seed_from_u64(seed)`; trial `i` runs on stream `i` from word 0. Every
//! draw consumes one `next_u64` word `u`:
//!
//! * unit float: `(u >> 11) * 2^-53`, in `[0, 1)`
//! * angle: `2π` times a unit float
//! * sign: `-1` if the top bit of `u` is set, else `+1`
//!
//! A sign vector draws its `2^n` entries in setup order. A geometry draws
//! `phi0` then `phi1` per particle. A product state draws, per particle,
//! `z = 2u - 1` and an azimuth `φ` and uses the qubit
//! `(sqrt((1+z)/2), e^{iφ} sqrt((1-z)/2))`, uniform on the Bloch sphere.

use std::f64::consts::TAU;

use ghzprobe_core::{Geometry, SignVector, SiteGeometry, StateVector};
use num_complex::Complex64;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct TrialRng {
    inner: ChaCha8Rng,
}

impl TrialRng {
    pub fn new(seed: u64, trial: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(trial);
        inner.set_word_pos(0);
        TrialRng { inner }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn angle(&mut self) -> f64 {
        self.unit() * TAU
    }

    pub fn sign(&mut self) -> i8 {
        if self.next_u64() >> 63 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn sign_vector(&mut self, n: usize) -> SignVector {
        SignVector::new((0..1usize << n).map(|_| self.sign()).collect())
            .expect("power of two length")
    }

    pub fn geometry(&mut self, n: usize) -> Geometry {
        let sites = (0..n)
            .map(|_| {
                let phi0 = self.angle();
                let phi1 = self.angle();
                SiteGeometry::new(phi0, phi1).expect("finite angles")
            })
            .collect();
        Geometry::new(sites).expect("valid particle count")
    }

    /// Random `n`-qubit product state.
    pub fn product_state(&mut self, n: usize) -> StateVector {
        let mut amps = vec![Complex64::new(1.0, 0.0)];
        for _ in 0..n {
            let z = 2.0 * self.unit() - 1.0;
            let phi = self.angle();
            let up = Complex64::new(((1.0 + z) / 2.0).sqrt(), 0.0);
            let down = Complex64::from_polar(((1.0 - z) / 2.0).sqrt(), phi);
            amps = amps.iter().flat_map(|&a| [a * up, a * down]).collect();
        }
        StateVector::new(amps).expect("power of two length")
    }
}
