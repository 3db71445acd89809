//! Hide three binary images in one RGB cover.
//!
//! Each color plane is split with a one-level Haar DWT, the HH subband is
//! taken to the DCT domain, and a session key picks which high-frequency
//! coefficients carry the secret bits. Extraction is blind: it needs the
//! stego image, the key and the secret sizes, never the cover.
//!
//! ```
//! use hhstego::{embed, extract, BitImage, EmbedParams, PixelPlane, RgbImage};
//!
//! let plane = PixelPlane::from_fn(64, 64, |r, c| (r * 3 + c * 2) as u8);
//! let cover = RgbImage::from_planes(plane.clone(), plane.clone(), plane).unwrap();
//! let secret = BitImage::from_fn(8, 8, |r, c| (r + c) % 2 == 0);
//! let none = BitImage::empty();
//!
//! let params = EmbedParams::new("session");
//! let stego = embed(&cover, [&secret, &none, &none], &params).unwrap();
//! let [r, _, _] = extract(&stego, params.key(), [(8, 8), (0, 0), (0, 0)]).unwrap();
//! assert_eq!(r, secret);
//! ```

pub mod error;
pub mod image_io;
pub mod keying;
pub mod metrics;
pub mod planes;
pub mod stego;
pub mod transforms;

pub use error::{Channel, Error, Result};
pub use keying::{
    derive_plane_seeds, derive_seed, select_positions, splitmix64_next, PlaneSeeds, SessionKey, SplitMix64,
};
pub use metrics::{ber, majority_filter_3x3, psnr, QualityReport};
pub use planes::{BitImage, PixelPlane, RgbImage};
pub use stego::{
    binarize, capacity, embed, embed_plane, extract, extract_plane, plane_capacity, EmbedParams,
    DEFAULT_ALPHA, DEFAULT_THRESHOLD,
};
pub use transforms::{dct2, dwt2_haar, idct2, idwt2_haar, CoeffMatrix, SubbandSet};
