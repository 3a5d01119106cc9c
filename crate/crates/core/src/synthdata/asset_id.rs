//! Abstract asset identifiers of the form `Asset X427`: one uppercase
//! letter plus three digits, 26,000 distinct ids. The generator rejects
//! collisions so every id within a run is unique.

use std::collections::HashSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::SynthError;
use crate::rng;

/// Total number of distinct identifiers.
pub const ID_SPACE: usize = 26 * 1000;

pub struct AssetIdGenerator {
    stream: ChaCha8Rng,
    used: HashSet<u32>,
}

impl AssetIdGenerator {
    pub fn new(seed: u64) -> Self {
        Self {
            stream: rng::from_seed(rng::derive_seed(seed, "asset-id", 0)),
            used: HashSet::new(),
        }
    }

    /// Draw the next unique identifier; errors once all 26,000 are used.
    pub fn next_id(&mut self) -> Result<String, SynthError> {
        if self.used.len() >= ID_SPACE {
            return Err(SynthError::IdSpaceExhausted(ID_SPACE));
        }
        loop {
            let code = self.stream.random_range(0..ID_SPACE as u32);
            if self.used.insert(code) {
                let letter = b'A' + (code / 1000) as u8;
                return Ok(format!("Asset {}{:03}", letter as char, code % 1000));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let mut a = AssetIdGenerator::new(5);
        let mut b = AssetIdGenerator::new(5);
        for _ in 0..100 {
            assert_eq!(a.next_id().unwrap(), b.next_id().unwrap());
        }
    }

    #[test]
    fn pattern_and_uniqueness_over_ten_thousand() {
        // 10,000 draws from a 26,000-id space would collide with near
        // certainty without the used-set (birthday bound); the generator
        // must dedupe.
        let mut generator = AssetIdGenerator::new(99);
        let mut seen = HashSet::new();
        for _ in 0..10_000 {
            let id = generator.next_id().unwrap();
            let bytes = id.as_bytes();
            assert_eq!(&id[..6], "Asset ");
            assert!(bytes[6].is_ascii_uppercase());
            assert!(bytes[7..10].iter().all(u8::is_ascii_digit));
            assert_eq!(id.len(), 10);
            assert!(seen.insert(id), "duplicate id");
        }
    }

    #[test]
    fn exhaustion_is_reported() {
        let mut generator = AssetIdGenerator::new(1);
        for _ in 0..ID_SPACE {
            generator.next_id().unwrap();
        }
        assert!(matches!(
            generator.next_id(),
            Err(SynthError::IdSpaceExhausted(_))
        ));
    }
}
