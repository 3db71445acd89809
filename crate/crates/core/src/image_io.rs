//! Lossless image file I/O (PNG and uncompressed 24-bit BMP).
//!
//! Input format is detected from magic bytes, output format from the file
//! extension. Lossy outputs are refused: they would destroy the embedded
//! coefficients.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use image::codecs::bmp::BmpEncoder;
use image::codecs::png::PngEncoder;
use image::{DynamicImage, ExtendedColorType, ImageEncoder, ImageFormat};
use tempfile::NamedTempFile;

use crate::error::{Error, Result};
use crate::planes::{BitImage, PixelPlane, RgbImage};
use crate::stego::binarize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LosslessFormat {
    Png,
    Bmp,
}

impl LosslessFormat {
    /// Output format for `path`: PNG when there is no extension, otherwise
    /// chosen by extension; anything but `.png` / `.bmp` is rejected.
    pub fn for_path(path: &Path) -> Result<Self> {
        let Some(ext) = path.extension() else {
            return Ok(Self::Png);
        };
        match ext.to_string_lossy().to_ascii_lowercase().as_str() {
            "png" => Ok(Self::Png),
            "bmp" => Ok(Self::Bmp),
            "jpg" | "jpeg" | "webp" | "gif" => Err(Error::UnsupportedFormat(format!(
                "refusing to write .{} output: lossy or palette formats destroy the hidden data; use .png or .bmp",
                ext.to_string_lossy()
            ))),
            other => Err(Error::UnsupportedFormat(format!(
                "unknown output extension .{other}; use .png or .bmp"
            ))),
        }
    }
}

fn decode(path: &Path) -> Result<DynamicImage> {
    let bytes = fs::read(path).map_err(|e| match e.kind() {
        io::ErrorKind::NotFound => Error::FileNotFound(path.to_path_buf()),
        _ => Error::Io(e),
    })?;
    let format = image::guess_format(&bytes)
        .map_err(|_| Error::UnsupportedFormat(format!("{}: not a PNG or BMP file", path.display())))?;
    if !matches!(format, ImageFormat::Png | ImageFormat::Bmp) {
        return Err(Error::UnsupportedFormat(format!(
            "{}: {format:?} input is not supported, only PNG and BMP",
            path.display()
        )));
    }
    image::load_from_memory_with_format(&bytes, format)
        .map_err(|e| Error::CorruptImage(format!("{}: {e}", path.display())))
}

/// Load an image as three 8-bit planes. Gray input is replicated to all
/// planes and alpha is dropped.
pub fn load_rgb(path: impl AsRef<Path>) -> Result<RgbImage> {
    let rgb = decode(path.as_ref())?.to_rgb8();
    let (w, h) = rgb.dimensions();
    RgbImage::from_interleaved(h as usize, w as usize, rgb.as_raw())
}

/// Integer BT.601 luma: `round((77R + 150G + 29B) / 256)`.
pub fn luma(r: u8, g: u8, b: u8) -> u8 {
    let sum = 77 * u32::from(r) + 150 * u32::from(g) + 29 * u32::from(b);
    ((sum + 128) >> 8) as u8
}

/// Load a gray level plane: gray images as-is, color images via [`luma`].
pub fn load_gray(path: impl AsRef<Path>) -> Result<PixelPlane> {
    let img = decode(path.as_ref())?;
    let (w, h) = (img.width() as usize, img.height() as usize);
    if img.color().has_color() {
        let rgb = img.to_rgb8();
        let values = rgb.pixels().map(|p| luma(p[0], p[1], p[2])).collect();
        PixelPlane::new(h, w, values)
    } else {
        PixelPlane::new(h, w, img.to_luma8().into_raw())
    }
}

/// Load and binarize a secret image.
pub fn load_secret(path: impl AsRef<Path>, threshold: u8) -> Result<BitImage> {
    Ok(binarize(&load_gray(path)?, threshold))
}

pub fn save_rgb(img: &RgbImage, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let format = LosslessFormat::for_path(path)?;
    write_atomic(
        path,
        format,
        &img.to_interleaved(),
        img.cols(),
        img.rows(),
        ExtendedColorType::Rgb8,
    )
}

/// Save a bit image as 8-bit gray, 0 -> black and 1 -> white.
pub fn save_secret(bits: &BitImage, path: impl AsRef<Path>) -> Result<()> {
    if bits.is_empty() {
        return Err(Error::EmptyInput);
    }
    let path = path.as_ref();
    let format = LosslessFormat::for_path(path)?;
    let gray: Vec<u8> = bits.bits().iter().map(|&b| if b { 255 } else { 0 }).collect();
    write_atomic(
        path,
        format,
        &gray,
        bits.cols(),
        bits.rows(),
        ExtendedColorType::L8,
    )
}

// Write to a temp file next to the target, then rename over it.
fn write_atomic(
    path: &Path,
    format: LosslessFormat,
    data: &[u8],
    width: usize,
    height: usize,
    color: ExtendedColorType,
) -> Result<()> {
    if width == 0 || height == 0 {
        return Err(Error::EmptyInput);
    }
    let (width, height) = (
        u32::try_from(width).map_err(|_| Error::InvalidParameter("image too wide".into()))?,
        u32::try_from(height).map_err(|_| Error::InvalidParameter("image too tall".into()))?,
    );
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir)?;
    {
        let mut out = BufWriter::new(tmp.as_file_mut());
        let encoded = match format {
            LosslessFormat::Png => PngEncoder::new(&mut out).write_image(data, width, height, color),
            LosslessFormat::Bmp => BmpEncoder::new(&mut out).write_image(data, width, height, color),
        };
        encoded.map_err(|e| match e {
            image::ImageError::IoError(io) => Error::Io(io),
            other => Error::UnsupportedFormat(other.to_string()),
        })?;
        out.flush()?;
    }
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}
