//! Incidence matrices and exact linear algebra on them.
//!
//! The line/point incidence matrix `A` of a plane of order `n` satisfies
//! `A A^T = n I + J`: the Gram matrix has `n + 1` on the diagonal and `1`
//! elsewhere, because two lines share exactly one point.  Its determinant is
//! computed by fraction-free integer elimination and compared against the
//! closed form `(n + 1)^2 * n^(n^2 + n)`; only the elimination result is
//! treated as the computed value, the closed form is a cross-check.
//!
//! `solve_line_sums` solves `A f = c * 1` exactly over the rationals.  The
//! unique solution is the constant vector `c / (n + 1)`, which is why no
//! labeling of a plane by reals can have equal line sums without being
//! constant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::Plane;

/// 0/1 matrix with one row per line and one column per point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    order: usize,
    rows: Vec<Vec<u8>>,
}

impl IncidenceMatrix {
    pub fn from_plane(plane: &Plane) -> IncidenceMatrix {
        let cols = plane.num_points();
        let rows = (0..plane.num_lines())
            .map(|l| {
                let mut row = vec![0u8; cols];
                for &p in plane.line_points(l) {
                    row[p] = 1;
                }
                row
            })
            .collect();
        IncidenceMatrix { order: plane.order(), rows }
    }

    /// Incidence matrix under an explicit re-enumeration: output row `i`
    /// describes `line_order[i]`, output column `j` describes
    /// `point_order[j]`.
    pub fn from_plane_reordered(
        plane: &Plane,
        line_order: &[usize],
        point_order: &[usize],
    ) -> Result<IncidenceMatrix> {
        for &l in line_order {
            if l >= plane.num_lines() {
                return Err(Error::LineOutOfRange { index: l, count: plane.num_lines() });
            }
        }
        for &p in point_order {
            if p >= plane.num_points() {
                return Err(Error::PointOutOfRange { index: p, count: plane.num_points() });
            }
        }
        let rows = line_order
            .iter()
            .map(|&l| {
                let points = plane.line_points(l);
                point_order
                    .iter()
                    .map(|p| u8::from(points.binary_search(p).is_ok()))
                    .collect()
            })
            .collect();
        Ok(IncidenceMatrix { order: plane.order(), rows })
    }

    pub fn from_rows(order: usize, rows: Vec<Vec<u8>>) -> Result<IncidenceMatrix> {
        let width = rows.first().map_or(0, |r| r.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::PlaneFormat(format!(
                    "row {i} has {} entries, expected {width}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|&&e| e > 1) {
                return Err(Error::PlaneFormat(format!("entry {bad} is not 0 or 1")));
            }
        }
        Ok(IncidenceMatrix { order, rows })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.rows[row][col]
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Space-separated 0/1 rows, one line per matrix row.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// The Gram matrix `A A^T`; entry (i, j) counts the points shared by
    /// lines i and j.
    pub fn gram(&self) -> Vec<Vec<u64>> {
        let n = self.num_rows();
        let mut out = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in i..n {
                let dot = self.rows[i]
                    .iter()
                    .zip(&self.rows[j])
                    .filter(|(&a, &b)| a == 1 && b == 1)
                    .count() as u64;
                out[i][j] = dot;
                out[j][i] = dot;
            }
        }
        out
    }

    /// Exact determinant of the Gram matrix, with the closed-form value for
    /// comparison.
    pub fn gram_determinant(&self) -> GramDeterminant {
        let gram = self.gram();
        let m: Vec<Vec<BigInt>> = gram
            .iter()
            .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
            .collect();
        GramDeterminant {
            computed: bareiss_determinant(m),
            closed_form: gram_closed_form(self.order),
        }
    }

    /// Solves `A f = c * 1` exactly over the rationals.
    pub fn solve_line_sums(&self, c: &BigRational) -> Result<Vec<BigRational>> {
        let a: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&e| BigRational::from_integer(e.into())).collect())
            .collect();
        let b = vec![c.clone(); self.num_rows()];
        solve_square(a, b)
    }
}

/// Result of the Gram determinant computation.
#[derive(Clone, Debug)]
pub struct GramDeterminant {
    pub computed: BigInt,
    pub closed_form: BigInt,
}

impl GramDeterminant {
    pub fn matches(&self) -> bool {
        self.computed == self.closed_form
    }
}

/// `(n + 1)^2 * n^(n^2 + n)` as a big integer.
pub fn gram_closed_form(n: usize) -> BigInt {
    bigint_pow(n as u64 + 1, 2) * bigint_pow(n as u64, (n * n + n) as u64)
}

fn bigint_pow(base: u64, exp: u64) -> BigInt {
    let mut out = BigInt::one();
    let base = BigInt::from(base);
    for _ in 0..exp {
        out *= &base;
    }
    out
}

/// Fraction-free (Bareiss) elimination; every division is exact.
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = val;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Gaussian elimination over the rationals for a square system.
fn solve_square(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Result<Vec<BigRational>> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::Singular);
    }
    for k in 0..n {
        let pivot_row = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::Singular)?;
        a.swap(k, pivot_row);
        b.swap(k, pivot_row);
        let pivot = a[k][k].clone();
        for j in k..n {
            let v = &a[k][j] / &pivot;
            a[k][j] = v;
        }
        let bk = &b[k] / &pivot;
        b[k] = bk;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for j in k..n {
                let v = &a[i][j] - &factor * &a[k][j];
                a[i][j] = v;
            }
            let bi = &b[i] - &factor * &b[k];
            b[i] = bi;
        }
    }
    for k in (0..n).rev() {
        for i in 0..k {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            let bi = &b[i] - &factor * &b[k];
            b[i] = bi;
            a[i][k] = BigRational::zero();
        }
    }
    Ok(b)
}
