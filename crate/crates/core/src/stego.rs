//! Embedding and blind extraction of binary secrets in the DCT of each
//! plane's Haar HH subband.
//!
//! Per plane: Haar DWT, DCT of HH, keyed selection of high-frequency
//! positions, then each selected coefficient is overwritten with
//! `+alpha` (bit 1) or `-alpha` (bit 0). Extraction reads the sign back.

use std::thread;

use crate::error::{Channel, Error, Result};
use crate::keying::{self, derive_plane_seeds, SessionKey};
use crate::planes::{BitImage, PixelPlane, RgbImage};
use crate::transforms::{dct2, dwt2_haar, idct2, idwt2_haar, CoeffMatrix};

/// Default embedding strength in DCT-coefficient units.
pub const DEFAULT_ALPHA: f64 = 32.0;

/// Default gray level at or above which a secret pixel reads as 1.
pub const DEFAULT_THRESHOLD: u8 = 128;

/// Maximum number of bits one plane with an `mh x nh` HH subband can carry.
pub fn capacity(mh: usize, nh: usize) -> usize {
    keying::eligible_count(mh, nh)
}

/// Capacity of a plane of `rows x cols` pixels (HH is half size each way).
pub fn plane_capacity(rows: usize, cols: usize) -> usize {
    capacity(rows / 2, cols / 2)
}

/// Threshold a gray plane: 1 where `value >= threshold`.
pub fn binarize(gray: &PixelPlane, threshold: u8) -> BitImage {
    BitImage::from_fn(gray.rows(), gray.cols(), |r, c| gray.get(r, c) >= threshold)
}

#[derive(Debug, Clone)]
pub struct EmbedParams {
    alpha: f64,
    key: SessionKey,
}

impl EmbedParams {
    /// Parameters with the default strength.
    pub fn new(key: impl Into<SessionKey>) -> Self {
        Self {
            alpha: DEFAULT_ALPHA,
            key: key.into(),
        }
    }

    pub fn with_alpha(mut self, alpha: f64) -> Result<Self> {
        validate_alpha(alpha)?;
        self.alpha = alpha;
        Ok(self)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn key(&self) -> &SessionKey {
        &self.key
    }
}

fn validate_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "alpha must be a positive finite number, got {alpha}"
        )))
    }
}

/// Hide `secret` in one plane. Bits are consumed in row-major order.
pub fn embed_plane(plane: &PixelPlane, secret: &BitImage, seed: u64, alpha: f64) -> Result<PixelPlane> {
    validate_alpha(alpha)?;
    plane.ensure_even()?;
    let mut bands = dwt2_haar(&plane.to_coeffs()?)?;
    let (mh, nh) = bands.hh.shape();
    let positions = keying::select_positions(seed, mh, nh, secret.len())?;

    let mut spectrum = dct2(&bands.hh)?;
    for (&bit, &pos) in secret.bits().iter().zip(&positions) {
        spectrum[pos] = if bit { alpha } else { -alpha };
    }
    bands.hh = idct2(&spectrum)?;

    Ok(PixelPlane::from_coeffs_rounded(&idwt2_haar(&bands)?))
}

/// Recover a `secret_rows x secret_cols` secret from one plane. Does not
/// need the cover.
pub fn extract_plane(
    plane: &PixelPlane,
    seed: u64,
    secret_rows: usize,
    secret_cols: usize,
) -> Result<BitImage> {
    plane.ensure_even()?;
    let nbits = secret_rows
        .checked_mul(secret_cols)
        .ok_or_else(|| Error::InvalidParameter("secret size overflows".into()))?;
    let (mh, nh) = (plane.rows() / 2, plane.cols() / 2);
    let positions = keying::select_positions(seed, mh, nh, nbits)?;
    if positions.is_empty() {
        return BitImage::new(secret_rows, secret_cols, Vec::new());
    }
    let spectrum = hh_spectrum(plane)?;
    let bits = positions.iter().map(|&pos| spectrum[pos] > 0.0).collect();
    BitImage::new(secret_rows, secret_cols, bits)
}

/// DCT of the HH subband of a plane.
pub fn hh_spectrum(plane: &PixelPlane) -> Result<CoeffMatrix> {
    plane.ensure_even()?;
    let bands = dwt2_haar(&plane.to_coeffs()?)?;
    dct2(&bands.hh)
}

/// Hide three secrets in the R, G and B planes of `cover`. Pass
/// [`BitImage::empty`] for a plane that should carry nothing.
pub fn embed(cover: &RgbImage, secrets: [&BitImage; 3], params: &EmbedParams) -> Result<RgbImage> {
    validate_alpha(params.alpha)?;
    cover.r().ensure_even()?;
    let cap = plane_capacity(cover.rows(), cover.cols());
    for (channel, secret) in Channel::ALL.into_iter().zip(secrets) {
        if secret.len() > cap {
            return Err(Error::CapacityExceeded {
                channel: Some(channel),
                requested: secret.len(),
                capacity: cap,
            });
        }
    }

    let seeds = derive_plane_seeds(&params.key).as_array();
    let planes = cover.planes();
    let [r, g, b] = per_channel(|i| {
        embed_plane(planes[i], secrets[i], seeds[i], params.alpha).map_err(|e| e.on_channel(Channel::ALL[i]))
    });
    RgbImage::from_planes(r?, g?, b?)
}

/// Recover three secrets given the key and each secret's `(rows, cols)`.
/// A `(0, 0)` size yields an empty image for that plane.
pub fn extract(stego: &RgbImage, key: &SessionKey, sizes: [(usize, usize); 3]) -> Result<[BitImage; 3]> {
    stego.r().ensure_even()?;
    let seeds = derive_plane_seeds(key).as_array();
    let planes = stego.planes();
    let [r, g, b] = per_channel(|i| {
        extract_plane(planes[i], seeds[i], sizes[i].0, sizes[i].1).map_err(|e| e.on_channel(Channel::ALL[i]))
    });
    Ok([r?, g?, b?])
}

/// Run `f` for the three channels on scoped threads; results come back in
/// R, G, B order.
fn per_channel<T: Send>(f: impl Fn(usize) -> T + Sync) -> [T; 3] {
    thread::scope(|s| {
        let f = &f;
        let handles = [0, 1, 2].map(|i| s.spawn(move || f(i)));
        handles.map(|h| h.join().expect("channel worker panicked"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_plane(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> PixelPlane {
        PixelPlane::from_fn(rows, cols, |_, _| rng.gen())
    }

    fn random_bits(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> BitImage {
        BitImage::from_fn(rows, cols, |_, _| rng.gen())
    }

    fn brute_capacity(mh: usize, nh: usize) -> usize {
        let t = (mh + nh) / 2;
        (0..mh)
            .flat_map(|u| (0..nh).map(move |v| (u, v)))
            .filter(|&(u, v)| u + v >= t)
            .count()
    }

    #[test]
    fn capacity_examples() {
        assert_eq!(capacity(4, 4), 6);
        assert_eq!(capacity(1, 1), 0);
        assert_eq!(capacity(2, 2), 1);
        assert_eq!(capacity(256, 256), 32640);
        assert_eq!(plane_capacity(512, 512), 32640);
        for (mh, nh) in [(3, 7), (8, 1), (10, 13), (1, 9)] {
            assert_eq!(capacity(mh, nh), brute_capacity(mh, nh), "{mh}x{nh}");
        }
    }

    #[test]
    fn binarize_boundary() {
        assert_eq!(
            binarize(&PixelPlane::filled(3, 3, 0), 128),
            BitImage::filled(3, 3, false)
        );
        assert_eq!(
            binarize(&PixelPlane::filled(3, 3, 255), 128),
            BitImage::filled(3, 3, true)
        );
        let p = PixelPlane::new(1, 2, vec![127, 128]).unwrap();
        assert_eq!(binarize(&p, 128).bits(), &[false, true]);
    }

    #[test]
    fn empty_secret_leaves_plane_unchanged() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let plane = random_plane(&mut rng, 32, 48);
        let out = embed_plane(&plane, &BitImage::empty(), 5, DEFAULT_ALPHA).unwrap();
        assert_eq!(out, plane);
    }

    #[test]
    fn plane_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let plane = random_plane(&mut rng, 64, 64);
        let secret = random_bits(&mut rng, 8, 8);
        let seed = 0x2FA1_5B15_B6F2_7F06;
        let stego = embed_plane(&plane, &secret, seed, 32.0).unwrap();
        assert_eq!(extract_plane(&stego, seed, 8, 8).unwrap(), secret);
    }

    #[test]
    fn wrong_seed_gives_noise() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let plane = random_plane(&mut rng, 256, 256);
        let secret = random_bits(&mut rng, 64, 64);
        let stego = embed_plane(&plane, &secret, 11, DEFAULT_ALPHA).unwrap();
        let guess = extract_plane(&stego, 12, 64, 64).unwrap();
        let errors = guess
            .bits()
            .iter()
            .zip(secret.bits())
            .filter(|(a, b)| a != b)
            .count();
        let ber = errors as f64 / 4096.0;
        assert!((0.4..=0.6).contains(&ber), "ber {ber}");
    }

    #[test]
    fn capacity_enforced() {
        let plane = PixelPlane::filled(8, 8, 100);
        // HH is 4x4 -> 6 positions.
        let ok = BitImage::filled(2, 3, true);
        let stego = embed_plane(&plane, &ok, 9, DEFAULT_ALPHA).unwrap();
        assert_eq!(extract_plane(&stego, 9, 2, 3).unwrap(), ok);
        let too_big = BitImage::filled(1, 7, true);
        assert!(matches!(
            embed_plane(&plane, &too_big, 9, DEFAULT_ALPHA),
            Err(Error::CapacityExceeded {
                requested: 7,
                capacity: 6,
                ..
            })
        ));
        assert!(matches!(
            extract_plane(&plane, 9, 7, 1),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn odd_and_bad_params() {
        let odd = PixelPlane::filled(5, 4, 0);
        assert!(matches!(
            embed_plane(&odd, &BitImage::empty(), 0, 32.0),
            Err(Error::OddDimension { .. })
        ));
        assert!(matches!(
            extract_plane(&odd, 0, 0, 0),
            Err(Error::OddDimension { .. })
        ));
        let even = PixelPlane::filled(4, 4, 0);
        assert!(matches!(
            embed_plane(&even, &BitImage::empty(), 0, 0.0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(EmbedParams::new("k").with_alpha(-1.0).is_err());
        assert!(EmbedParams::new("k").with_alpha(f64::NAN).is_err());
    }

    #[test]
    fn zero_size_extracts_empty() {
        let plane = PixelPlane::filled(4, 4, 10);
        let bits = extract_plane(&plane, 1, 0, 0).unwrap();
        assert!(bits.is_empty());
        let img = RgbImage::from_planes(plane.clone(), plane.clone(), plane).unwrap();
        let out = extract(&img, &"k".into(), [(0, 0); 3]).unwrap();
        assert!(out.iter().all(BitImage::is_empty));
    }

    #[test]
    fn capacity_error_names_plane() {
        let p = PixelPlane::filled(8, 8, 50);
        let img = RgbImage::from_planes(p.clone(), p.clone(), p).unwrap();
        let fits = BitImage::filled(1, 6, false);
        let too_big = BitImage::filled(1, 7, false);
        let err = embed(&img, [&fits, &too_big, &fits], &EmbedParams::new("k")).unwrap_err();
        assert!(matches!(
            err,
            Error::CapacityExceeded {
                channel: Some(Channel::Green),
                ..
            }
        ));
        assert!(err.to_string().contains("green"));
        let err = extract(&img, &"k".into(), [(0, 0), (0, 0), (7, 1)]).unwrap_err();
        assert!(matches!(
            err,
            Error::CapacityExceeded {
                channel: Some(Channel::Blue),
                ..
            }
        ));
    }

    #[test]
    fn rgb_round_trip_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let planes = [0, 1, 2].map(|_| random_plane(&mut rng, 64, 96));
        let [r, g, b] = planes;
        let cover = RgbImage::from_planes(r, g, b).unwrap();
        let s = [
            random_bits(&mut rng, 10, 12),
            BitImage::empty(),
            random_bits(&mut rng, 3, 40),
        ];
        let params = EmbedParams::new("small");
        let stego = embed(&cover, [&s[0], &s[1], &s[2]], &params).unwrap();
        assert_eq!(stego.g(), cover.g());
        let out = extract(&stego, params.key(), [(10, 12), (0, 0), (3, 40)]).unwrap();
        assert_eq!(out, s);
    }
}
