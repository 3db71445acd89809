#![allow(dead_code)]

use hhstego::{BitImage, PixelPlane, RgbImage};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_bits(rng: &mut impl Rng, rows: usize, cols: usize) -> BitImage {
    BitImage::from_fn(rows, cols, |_, _| rng.gen())
}

pub fn random_plane(rng: &mut impl Rng, rows: usize, cols: usize) -> PixelPlane {
    PixelPlane::from_fn(rows, cols, |_, _| rng.gen())
}

pub fn random_cover(rng: &mut impl Rng, rows: usize, cols: usize) -> RgbImage {
    let [r, g, b] = [0, 1, 2].map(|_| random_plane(rng, rows, cols));
    RgbImage::from_planes(r, g, b).unwrap()
}

/// Linear ramps in different directions per plane.
pub fn gradient_cover(rows: usize, cols: usize, phase: usize) -> RgbImage {
    let span = (rows + cols).max(1) as f64;
    let ramp = |r: usize, c: usize, k: usize| {
        let t = match (k + phase) % 3 {
            0 => (r + c) as f64 / span,
            1 => r as f64 / rows as f64,
            _ => 1.0 - c as f64 / cols as f64,
        };
        (t * 255.0).round().clamp(0.0, 255.0) as u8
    };
    RgbImage::from_planes(
        PixelPlane::from_fn(rows, cols, |r, c| ramp(r, c, 0)),
        PixelPlane::from_fn(rows, cols, |r, c| ramp(r, c, 1)),
        PixelPlane::from_fn(rows, cols, |r, c| ramp(r, c, 2)),
    )
    .unwrap()
}

/// Smooth shaded scene with soft blobs, edges and a little sensor noise.
pub fn natural_cover(rows: usize, cols: usize, seed: u64) -> RgbImage {
    let mut rng = rng(seed);
    let blobs: Vec<(f64, f64, f64, f64)> = (0..12)
        .map(|_| {
            (
                rng.gen_range(0.0..rows as f64),
                rng.gen_range(0.0..cols as f64),
                rng.gen_range(20.0..90.0),
                rng.gen_range(-70.0..70.0),
            )
        })
        .collect();
    let horizon = rows as f64 * rng.gen_range(0.35..0.65);
    let plane = |k: usize, rng: &mut ChaCha8Rng| {
        let tint = [1.0, 0.85, 0.7][k];
        PixelPlane::from_fn(rows, cols, |r, c| {
            let (y, x) = (r as f64, c as f64);
            let mut v = if y < horizon {
                170.0 - 0.1 * y
            } else {
                90.0 + 0.05 * x
            };
            v += 25.0 * (x / 37.0 + k as f64).sin() * (y / 53.0).cos();
            for &(by, bx, rad, amp) in &blobs {
                let d2 = ((y - by).powi(2) + (x - bx).powi(2)) / (rad * rad);
                v += amp * (-d2).exp();
            }
            v = 20.0 + tint * (v - 20.0) + rng.gen_range(-2.0..2.0);
            v.round().clamp(0.0, 255.0) as u8
        })
    };
    let r = plane(0, &mut rng);
    let g = plane(1, &mut rng);
    let b = plane(2, &mut rng);
    RgbImage::from_planes(r, g, b).unwrap()
}

/// Logo-like secret: 8x8 cells switched on or off at random.
pub fn blocky_logo(rng: &mut impl Rng, rows: usize, cols: usize) -> BitImage {
    let cells: Vec<bool> = (0..rows.div_ceil(8) * cols.div_ceil(8))
        .map(|_| rng.gen())
        .collect();
    let per_row = cols.div_ceil(8);
    BitImage::from_fn(rows, cols, |r, c| cells[(r / 8) * per_row + c / 8])
}

pub fn flip_random(rng: &mut impl Rng, img: &BitImage, fraction: f64) -> BitImage {
    let mut out = img.clone();
    for r in 0..img.rows() {
        for c in 0..img.cols() {
            if rng.gen::<f64>() < fraction {
                out.set(r, c, !img.get(r, c));
            }
        }
    }
    out
}

pub fn bit_errors(a: &BitImage, b: &BitImage) -> usize {
    assert_eq!(a.shape(), b.shape());
    a.bits().iter().zip(b.bits()).filter(|(x, y)| x != y).count()
}
