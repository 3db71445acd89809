//! Pixel and bit containers shared by the embedding engine, metrics and I/O.

use crate::error::{Error, Result};
use crate::transforms::CoeffMatrix;

/// One 8-bit channel, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PixelPlane {
    rows: usize,
    cols: usize,
    values: Vec<u8>,
}

impl PixelPlane {
    pub fn new(rows: usize, cols: usize, values: Vec<u8>) -> Result<Self> {
        if values.len() != rows * cols {
            return Err(Error::LengthMismatch {
                rows,
                cols,
                len: values.len(),
            });
        }
        Ok(Self { rows, cols, values })
    }

    pub fn filled(rows: usize, cols: usize, value: u8) -> Self {
        Self {
            rows,
            cols,
            values: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        let mut values = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                values.push(f(r, c));
            }
        }
        Self { rows, cols, values }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [u8] {
        &mut self.values
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.values[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u8) {
        self.values[row * self.cols + col] = value;
    }

    /// Pipeline entry check: both dimensions non-zero and even.
    pub fn ensure_even(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::EmptyInput);
        }
        if !self.rows.is_multiple_of(2) || !self.cols.is_multiple_of(2) {
            return Err(Error::OddDimension {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    pub fn to_coeffs(&self) -> Result<CoeffMatrix> {
        CoeffMatrix::new(
            self.rows,
            self.cols,
            self.values.iter().map(|&v| f64::from(v)).collect(),
        )
    }

    /// Round each value with `floor(x + 0.5)` and clamp to `[0, 255]`.
    pub fn from_coeffs_rounded(m: &CoeffMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            values: m.values().iter().map(|&x| round_to_pixel(x)).collect(),
        }
    }
}

pub(crate) fn round_to_pixel(x: f64) -> u8 {
    (x + 0.5).floor().clamp(0.0, 255.0) as u8
}

/// Three equally sized color planes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RgbImage {
    r: PixelPlane,
    g: PixelPlane,
    b: PixelPlane,
}

impl RgbImage {
    pub fn from_planes(r: PixelPlane, g: PixelPlane, b: PixelPlane) -> Result<Self> {
        for p in [&g, &b] {
            if p.shape() != r.shape() {
                return Err(Error::shape_mismatch(r.shape(), p.shape()));
            }
        }
        Ok(Self { r, g, b })
    }

    /// Split interleaved `RGBRGB...` bytes into planes.
    pub fn from_interleaved(rows: usize, cols: usize, rgb: &[u8]) -> Result<Self> {
        if rgb.len() != rows * cols * 3 {
            return Err(Error::LengthMismatch {
                rows,
                cols,
                len: rgb.len(),
            });
        }
        let plane = |offset: usize| PixelPlane {
            rows,
            cols,
            values: rgb.iter().skip(offset).step_by(3).copied().collect(),
        };
        Ok(Self {
            r: plane(0),
            g: plane(1),
            b: plane(2),
        })
    }

    pub fn to_interleaved(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.r.values.len() * 3);
        for ((&r, &g), &b) in self.r.values.iter().zip(&self.g.values).zip(&self.b.values) {
            out.extend_from_slice(&[r, g, b]);
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.r.rows
    }

    pub fn cols(&self) -> usize {
        self.r.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        self.r.shape()
    }

    pub fn r(&self) -> &PixelPlane {
        &self.r
    }

    pub fn g(&self) -> &PixelPlane {
        &self.g
    }

    pub fn b(&self) -> &PixelPlane {
        &self.b
    }

    pub fn planes(&self) -> [&PixelPlane; 3] {
        [&self.r, &self.g, &self.b]
    }

    pub fn into_planes(self) -> [PixelPlane; 3] {
        [self.r, self.g, self.b]
    }
}

/// Binary image, row-major. A 0x0 image stands for "no payload".
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BitImage {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BitImage {
    pub fn new(rows: usize, cols: usize, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != rows * cols {
            return Err(Error::LengthMismatch {
                rows,
                cols,
                len: bits.len(),
            });
        }
        Ok(Self { rows, cols, bits })
    }

    /// Build from `0`/`1` bytes; any other value is rejected.
    pub fn from_u8(rows: usize, cols: usize, values: &[u8]) -> Result<Self> {
        let bits = values
            .iter()
            .map(|&v| match v {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(Error::InvalidParameter(format!(
                    "bit value {other} is not 0 or 1"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows, cols, bits)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn filled(rows: usize, cols: usize, bit: bool) -> Self {
        Self {
            rows,
            cols,
            bits: vec![bit; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut bits = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                bits.push(f(r, c));
            }
        }
        Self { rows, cols, bits }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bits in row-major order.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, bit: bool) {
        self.bits[row * self.cols + col] = bit;
    }

    pub fn complement(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}
