use crate::error::{Error, Result};

use super::CoeffMatrix;

/// The four subbands of a single-level 2D Haar decomposition.
///
/// `lh` holds vertical detail (top row minus bottom row of each 2x2 block),
/// `hl` horizontal detail (left column minus right column), `hh` diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SubbandSet {
    pub ll: CoeffMatrix,
    pub lh: CoeffMatrix,
    pub hl: CoeffMatrix,
    pub hh: CoeffMatrix,
}

impl SubbandSet {
    pub fn shape(&self) -> (usize, usize) {
        self.ll.shape()
    }
}

/// Orthonormal single-level 2D Haar transform.
pub fn dwt2_haar(plane: &CoeffMatrix) -> Result<SubbandSet> {
    let (rows, cols) = plane.shape();
    if rows % 2 != 0 || cols % 2 != 0 {
        return Err(Error::OddDimension { rows, cols });
    }
    let (hr, hc) = (rows / 2, cols / 2);
    let n = hr * hc;
    let (mut ll, mut lh, mut hl, mut hh) = (
        Vec::with_capacity(n),
        Vec::with_capacity(n),
        Vec::with_capacity(n),
        Vec::with_capacity(n),
    );
    let src = plane.values();
    for i in 0..hr {
        let top = &src[2 * i * cols..(2 * i + 1) * cols];
        let bottom = &src[(2 * i + 1) * cols..(2 * i + 2) * cols];
        for j in 0..hc {
            let (p00, p01) = (top[2 * j], top[2 * j + 1]);
            let (p10, p11) = (bottom[2 * j], bottom[2 * j + 1]);
            ll.push((p00 + p01 + p10 + p11) / 2.0);
            lh.push((p00 + p01 - p10 - p11) / 2.0);
            hl.push((p00 - p01 + p10 - p11) / 2.0);
            hh.push((p00 - p01 - p10 + p11) / 2.0);
        }
    }
    Ok(SubbandSet {
        ll: CoeffMatrix::from_parts(hr, hc, ll),
        lh: CoeffMatrix::from_parts(hr, hc, lh),
        hl: CoeffMatrix::from_parts(hr, hc, hl),
        hh: CoeffMatrix::from_parts(hr, hc, hh),
    })
}

/// Inverse of [`dwt2_haar`].
pub fn idwt2_haar(bands: &SubbandSet) -> Result<CoeffMatrix> {
    let shape = bands.ll.shape();
    for band in [&bands.lh, &bands.hl, &bands.hh] {
        if band.shape() != shape {
            return Err(Error::shape_mismatch(shape, band.shape()));
        }
    }
    let (hr, hc) = shape;
    let (rows, cols) = (hr * 2, hc * 2);
    let mut out = vec![0.0; rows * cols];
    let (ll, lh, hl, hh) = (
        bands.ll.values(),
        bands.lh.values(),
        bands.hl.values(),
        bands.hh.values(),
    );
    for i in 0..hr {
        for j in 0..hc {
            let k = i * hc + j;
            let (a, v, h, d) = (ll[k], lh[k], hl[k], hh[k]);
            let top = 2 * i * cols + 2 * j;
            let bottom = top + cols;
            out[top] = (a + v + h + d) / 2.0;
            out[top + 1] = (a + v - h - d) / 2.0;
            out[bottom] = (a - v + h - d) / 2.0;
            out[bottom + 1] = (a - v - h + d) / 2.0;
        }
    }
    Ok(CoeffMatrix::from_parts(rows, cols, out))
}
