//! Seeded substreams and standard-normal variates.
//!
//! Every random quantity in the crate is drawn from a ChaCha8 keystream
//! selected by a [`SeedSpec`]: the master seed fills the first eight key
//! bytes (little endian, remaining key bytes zero) and the stream index
//! selects the ChaCha stream. Distinct `(master, stream)` pairs therefore map
//! to distinct generator states.
//!
//! Normal variates use the inverse-CDF method with Wichura's AS241
//! (PPND16) rational approximation applied to a uniform on the open unit
//! interval built from the top 53 bits of one `u64`. Only basic arithmetic,
//! `ln` and `sqrt` are involved, and those come from `libm`, so the stream of
//! variates is identical on every platform.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::special::inverse_normal_cdf;

/// Identifier recorded next to every generated artifact.
pub const GENERATOR_ID: &str = "chacha8-stream/as241-inverse-cdf/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeedSpec {
    pub master_seed: u64,
    pub stream_index: u64,
}

impl SeedSpec {
    pub const fn new(master_seed: u64, stream_index: u64) -> Self {
        Self {
            master_seed,
            stream_index,
        }
    }

    /// The substream `offset` positions after this one, or `None` on overflow.
    pub fn offset(self, offset: u64) -> Option<Self> {
        self.stream_index
            .checked_add(offset)
            .map(|stream_index| Self { stream_index, ..self })
    }

    pub fn generator(self) -> StreamRng {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&self.master_seed.to_le_bytes());
        let mut inner = ChaCha8Rng::from_seed(key);
        inner.set_stream(self.stream_index);
        StreamRng { inner }
    }
}

impl From<u64> for SeedSpec {
    fn from(master_seed: u64) -> Self {
        Self::new(master_seed, 0)
    }
}

/// A generator bound to one substream.
#[derive(Debug, Clone)]
pub struct StreamRng {
    inner: ChaCha8Rng,
}

impl StreamRng {
    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform on the open interval (0, 1).
    #[inline]
    pub fn open_unit(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        ((self.next_u64() >> 11) as f64 + 0.5) * SCALE
    }

    #[inline]
    pub fn standard_normal(&mut self) -> f64 {
        inverse_normal_cdf(self.open_unit())
    }

    pub fn fill_standard_normal(&mut self, out: &mut [f64]) {
        for x in out {
            *x = self.standard_normal();
        }
    }
}
