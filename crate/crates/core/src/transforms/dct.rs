use std::f64::consts::PI;

use super::CoeffMatrix;
use crate::error::Result;

/// Orthonormal DCT-II basis for length `n`:
/// `basis[k * n + x] = alpha(k) * cos(pi * (2x + 1) * k / 2n)`.
struct Basis {
    n: usize,
    table: Vec<f64>,
}

impl Basis {
    fn new(n: usize) -> Self {
        let nf = n as f64;
        let dc = (1.0 / nf).sqrt();
        let ac = (2.0 / nf).sqrt();
        let mut table = Vec::with_capacity(n * n);
        for k in 0..n {
            let alpha = if k == 0 { dc } else { ac };
            for x in 0..n {
                table.push(alpha * (PI * (2 * x + 1) as f64 * k as f64 / (2.0 * nf)).cos());
            }
        }
        Self { n, table }
    }

    fn row(&self, k: usize) -> &[f64] {
        &self.table[k * self.n..(k + 1) * self.n]
    }
}

/// Orthonormal type-II 2D DCT, applied separably (rows then columns).
pub fn dct2(m: &CoeffMatrix) -> Result<CoeffMatrix> {
    Ok(separable(m, Direction::Forward))
}

/// Orthonormal 2D inverse DCT (type-III).
pub fn idct2(c: &CoeffMatrix) -> Result<CoeffMatrix> {
    Ok(separable(c, Direction::Inverse))
}

#[derive(Clone, Copy)]
enum Direction {
    Forward,
    Inverse,
}

// CoeffMatrix is never empty, so there is no EmptyInput case to report here.
fn separable(m: &CoeffMatrix, dir: Direction) -> CoeffMatrix {
    let (rows, cols) = m.shape();
    let row_basis = Basis::new(cols);
    let col_basis = Basis::new(rows);
    let src = m.values();

    // Along each row (index v / y).
    let mut tmp = vec![0.0; rows * cols];
    for r in 0..rows {
        transform_1d(
            &row_basis,
            &src[r * cols..(r + 1) * cols],
            &mut tmp[r * cols..(r + 1) * cols],
            dir,
        );
    }

    // Along each column (index u / x).
    let mut out = vec![0.0; rows * cols];
    let mut column = vec![0.0; rows];
    let mut result = vec![0.0; rows];
    for c in 0..cols {
        for r in 0..rows {
            column[r] = tmp[r * cols + c];
        }
        transform_1d(&col_basis, &column, &mut result, dir);
        for r in 0..rows {
            out[r * cols + c] = result[r];
        }
    }
    CoeffMatrix::from_parts(rows, cols, out)
}

fn transform_1d(basis: &Basis, input: &[f64], output: &mut [f64], dir: Direction) {
    match dir {
        Direction::Forward => {
            for (k, out) in output.iter_mut().enumerate() {
                *out = basis.row(k).iter().zip(input).map(|(b, x)| b * x).sum();
            }
        }
        Direction::Inverse => {
            output.fill(0.0);
            for (k, &coeff) in input.iter().enumerate() {
                if coeff == 0.0 {
                    continue;
                }
                for (out, b) in output.iter_mut().zip(basis.row(k)) {
                    *out += coeff * b;
                }
            }
        }
    }
}
