//! Session key hashing, the SplitMix64 stream, and keyed selection of
//! high-frequency coefficient positions.
//!
//! Everything here is specified down to the constants so that independent
//! implementations select identical positions for the same key.

use crate::error::{Error, Result};

const FNV_OFFSET_BASIS: u64 = 0xCBF2_9CE4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01B3;

const SPLITMIX_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const SPLITMIX_MUL1: u64 = 0xBF58_476D_1CE4_E5B9;
const SPLITMIX_MUL2: u64 = 0x94D0_49BB_1331_11EB;

/// Shared secret for one embedding session. Any byte string, including the
/// empty one.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SessionKey(Vec<u8>);

impl SessionKey {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Self {
        Self(bytes.into())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

// Keys are secrets; keep them out of logs.
impl std::fmt::Debug for SessionKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SessionKey({} bytes)", self.0.len())
    }
}

impl From<&str> for SessionKey {
    fn from(s: &str) -> Self {
        Self(s.as_bytes().to_vec())
    }
}

impl From<String> for SessionKey {
    fn from(s: String) -> Self {
        Self(s.into_bytes())
    }
}

impl From<&[u8]> for SessionKey {
    fn from(b: &[u8]) -> Self {
        Self(b.to_vec())
    }
}

impl From<Vec<u8>> for SessionKey {
    fn from(b: Vec<u8>) -> Self {
        Self(b)
    }
}

/// FNV-1a 64-bit hash of the key bytes.
pub fn derive_seed(key: &SessionKey) -> u64 {
    key.0.iter().fold(FNV_OFFSET_BASIS, |state, &b| {
        (state ^ u64::from(b)).wrapping_mul(FNV_PRIME)
    })
}

/// One SplitMix64 step: returns `(new_state, output)`.
pub fn splitmix64_next(state: u64) -> (u64, u64) {
    let next = state.wrapping_add(SPLITMIX_GAMMA);
    let mut z = next;
    z = (z ^ (z >> 30)).wrapping_mul(SPLITMIX_MUL1);
    z = (z ^ (z >> 27)).wrapping_mul(SPLITMIX_MUL2);
    (next, z ^ (z >> 31))
}

/// Caller-held SplitMix64 stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        let (state, out) = splitmix64_next(self.state);
        self.state = state;
        out
    }
}

impl Iterator for SplitMix64 {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        Some(self.next_u64())
    }
}

/// Per-plane seeds derived from one session key.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneSeeds {
    pub seed_r: u64,
    pub seed_g: u64,
    pub seed_b: u64,
}

impl PlaneSeeds {
    pub fn as_array(&self) -> [u64; 3] {
        [self.seed_r, self.seed_g, self.seed_b]
    }
}

/// Hash the key, then take three successive SplitMix64 outputs as the R, G
/// and B seeds.
pub fn derive_plane_seeds(key: &SessionKey) -> PlaneSeeds {
    let mut rng = SplitMix64::new(derive_seed(key));
    PlaneSeeds {
        seed_r: rng.next_u64(),
        seed_g: rng.next_u64(),
        seed_b: rng.next_u64(),
    }
}

/// Minimum `u + v` for a coefficient of an `mh x nh` matrix to be eligible.
pub fn eligibility_threshold(mh: usize, nh: usize) -> usize {
    (mh + nh) / 2
}

/// Number of eligible high-frequency positions in an `mh x nh` matrix.
pub fn eligible_count(mh: usize, nh: usize) -> usize {
    let t = eligibility_threshold(mh, nh);
    // For each row u, columns v in [max(t - u, 0), nh) qualify.
    (0..mh).map(|u| nh.saturating_sub(t.saturating_sub(u))).sum()
}

/// Eligible positions in row-major order.
fn eligible_positions(mh: usize, nh: usize) -> Vec<(usize, usize)> {
    let t = eligibility_threshold(mh, nh);
    let mut out = Vec::with_capacity(eligible_count(mh, nh));
    for u in 0..mh {
        for v in t.saturating_sub(u)..nh {
            out.push((u, v));
        }
    }
    out
}

/// Keyed pseudorandom ordering of the eligible positions, truncated to
/// `count`.
///
/// The full eligible list is Fisher-Yates shuffled from the last index down
/// to 1 with swap partner `next_u64() % (i + 1)`, so the output prefix depends
/// on the whole shuffle, not just on `count`.
pub fn select_positions(seed: u64, mh: usize, nh: usize, count: usize) -> Result<Vec<(usize, usize)>> {
    let available = eligible_count(mh, nh);
    if count > available {
        return Err(Error::CapacityExceeded {
            channel: None,
            requested: count,
            capacity: available,
        });
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let mut positions = eligible_positions(mh, nh);
    let mut rng = SplitMix64::new(seed);
    for i in (1..positions.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        positions.swap(i, j);
    }
    positions.truncate(count);
    Ok(positions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn fnv_vectors() {
        assert_eq!(derive_seed(&"".into()), 0xCBF2_9CE4_8422_2325);
        assert_eq!(derive_seed(&"abc".into()), 0xE71F_A219_0541_574B);
        let k1 = derive_seed(&"key1".into());
        let k2 = derive_seed(&"key2".into());
        assert_eq!(k1, 0x5819_C5D7_5CBD_A787);
        assert_eq!(k2, 0x5819_C6D7_5CBD_A93A);
        assert_ne!(k1, k2);
    }

    #[test]
    fn splitmix_vectors() {
        assert_eq!(splitmix64_next(0), (0x9E37_79B9_7F4A_7C15, 0xE220_A839_7B1D_CDAF));
        assert_eq!(splitmix64_next(1).1, 0x910A_2DEC_8902_5CC1);
        assert_eq!(splitmix64_next(2).1, 0x9758_35DE_1C97_56CE);
        assert_eq!(splitmix64_next(77), splitmix64_next(77));
        assert_eq!(splitmix64_next(u64::MAX).0, SPLITMIX_GAMMA.wrapping_sub(1));
    }

    #[test]
    fn plane_seed_vectors() {
        let s = derive_plane_seeds(&"session".into());
        assert_eq!(
            s.as_array(),
            [
                0x2FA1_5B15_B6F2_7F06,
                0x2005_98D6_4775_B276,
                0x4834_35F2_8D0C_1794
            ]
        );
        let e = derive_plane_seeds(&SessionKey::default());
        assert_eq!(
            e.as_array(),
            [
                0xC381_7C01_6BA4_FF30,
                0x100C_DAAC_C0BC_9316,
                0x54C3_A569_ECF6_1B1B
            ]
        );
        for seeds in [s, e] {
            let set: HashSet<u64> = seeds.as_array().into_iter().collect();
            assert_eq!(set.len(), 3);
        }
    }

    #[test]
    fn eligible_region_4x4() {
        let expected: HashSet<(usize, usize)> = [(1, 3), (2, 2), (3, 1), (2, 3), (3, 2), (3, 3)]
            .into_iter()
            .collect();
        assert_eq!(eligible_count(4, 4), 6);
        let all = select_positions(99, 4, 4, 6).unwrap();
        assert_eq!(all.iter().copied().collect::<HashSet<_>>(), expected);
    }

    #[test]
    fn selection_vectors() {
        assert_eq!(
            select_positions(42, 4, 4, 6).unwrap(),
            vec![(3, 2), (3, 1), (1, 3), (2, 3), (3, 3), (2, 2)]
        );
        assert_eq!(
            select_positions(7, 3, 5, 5).unwrap(),
            vec![(1, 3), (2, 4), (0, 4), (1, 4), (2, 3)]
        );
    }

    #[test]
    fn empty_and_overflow() {
        assert!(select_positions(1, 4, 4, 0).unwrap().is_empty());
        assert!(matches!(
            select_positions(1, 4, 4, 7),
            Err(Error::CapacityExceeded {
                requested: 7,
                capacity: 6,
                ..
            })
        ));
        assert!(matches!(
            select_positions(1, 1, 1, 1),
            Err(Error::CapacityExceeded { capacity: 0, .. })
        ));
    }

    #[test]
    fn debug_hides_key_bytes() {
        let k = SessionKey::from("hunter2");
        assert_eq!(format!("{k:?}"), "SessionKey(7 bytes)");
    }
}
