//! PSNR between RGB images, bit error rate between binary images, and a 3x3
//! majority filter for cleaning up extracted secrets.

use crate::error::{Error, Result};
use crate::planes::{BitImage, RgbImage};

/// Peak value for 8-bit samples.
pub const MAX_PIXEL: u8 = 255;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QualityReport {
    /// `f64::INFINITY` when the images are identical.
    pub psnr_db: f64,
    pub mse: f64,
    pub max_pixel: u8,
}

/// PSNR in dB over all three planes, equally weighted, with a fixed 255 peak.
pub fn psnr(a: &RgbImage, b: &RgbImage) -> Result<QualityReport> {
    if a.shape() != b.shape() {
        return Err(Error::shape_mismatch(a.shape(), b.shape()));
    }
    let n = 3 * a.rows() * a.cols();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let sse: u64 = a
        .planes()
        .iter()
        .zip(b.planes())
        .flat_map(|(pa, pb)| pa.values().iter().zip(pb.values()))
        .map(|(&x, &y)| {
            let d = u64::from(x.abs_diff(y));
            d * d
        })
        .sum();
    let mse = sse as f64 / n as f64;
    let peak = f64::from(MAX_PIXEL);
    let psnr_db = if sse == 0 {
        f64::INFINITY
    } else {
        10.0 * (peak * peak / mse).log10()
    };
    Ok(QualityReport {
        psnr_db,
        mse,
        max_pixel: MAX_PIXEL,
    })
}

/// Fraction of differing bits.
pub fn ber(a: &BitImage, b: &BitImage) -> Result<f64> {
    if a.shape() != b.shape() {
        return Err(Error::shape_mismatch(a.shape(), b.shape()));
    }
    if a.is_empty() {
        return Err(Error::EmptyInput);
    }
    let errors = a.bits().iter().zip(b.bits()).filter(|(x, y)| x != y).count();
    Ok(errors as f64 / a.len() as f64)
}

/// Majority vote over each 3x3 neighborhood, borders replicated. Nine
/// samples per vote, so there are no ties.
pub fn majority_filter_3x3(img: &BitImage) -> BitImage {
    let (rows, cols) = img.shape();
    if img.is_empty() {
        return img.clone();
    }
    BitImage::from_fn(rows, cols, |r, c| {
        let mut ones = 0;
        for dr in [-1isize, 0, 1] {
            let rr = clamp_index(r, dr, rows);
            for dc in [-1isize, 0, 1] {
                if img.get(rr, clamp_index(c, dc, cols)) {
                    ones += 1;
                }
            }
        }
        ones >= 5
    })
}

fn clamp_index(i: usize, delta: isize, len: usize) -> usize {
    (i as isize + delta).clamp(0, len as isize - 1) as usize
}
