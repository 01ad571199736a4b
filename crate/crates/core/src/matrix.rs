//! Dense matrices over an exact field.
//!
//! Matrices act on column vectors, so the composite `g after f` is the
//! product `g.mul(&f)`. Row reduction over the rationals clears denominators
//! and eliminates fraction-free (with per-row content reduction) to bound
//! intermediate growth; the reduced row echelon form itself is canonical in
//! either field.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixError {
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    FieldMismatch,
    NotInvertible,
    Inconsistent,
    BasisNotIndependent,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::ShapeMismatch { expected, got } => write!(
                f,
                "shape mismatch: expected {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            MatrixError::FieldMismatch => write!(f, "matrices belong to different fields"),
            MatrixError::NotInvertible => write!(f, "matrix is not invertible"),
            MatrixError::Inconsistent => write!(f, "linear system has no solution"),
            MatrixError::BasisNotIndependent => write!(f, "given columns are not independent"),
        }
    }
}

/// A dense `rows x cols` matrix with row-major entry storage.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Matrix {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldSpec,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let e = f(r, c);
                assert_eq!(e.field(), field, "entry field mismatch");
                entries.push(e);
            }
        }
        Matrix {
            rows,
            cols,
            field,
            entries,
        }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Matrix {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
        }
        Matrix::from_fn(nrows, ncols, field, |i, j| rows[i][j].clone())
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Matrix {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        Matrix::from_fn(nrows, ncols, field, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert!(r < self.rows && c < self.cols);
        debug_assert_eq!(v.field(), self.field);
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows, self.field)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |r, c| {
            self.get(c, r).clone()
        })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| a.sub(b))
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, self.field, |r, c| {
            f(self.get(r, c), other.get(r, c))
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.field, |r, c| self.get(r, c).neg())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        assert_eq!(s.field(), self.field, "field mismatch");
        Matrix::from_fn(self.rows, self.cols, self.field, |r, c| {
            self.get(r, c).mul(s)
        })
    }

    /// Matrix product; `self.mul(&f)` is the morphism `self` applied after `f`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch in product: {}x{} . {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Tensor product of morphisms under the global basis convention: the
    /// pair index `(i, j)` sits at position `i * dim_other + j`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(rows, cols, self.field);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * other.rows + i2, j1 * other.cols + j2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.rows, other.rows, "row count mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, self.field, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.cols, "column count mismatch");
        Matrix::from_fn(self.rows + other.rows, self.cols, self.field, |r, c| {
            if r < self.rows {
                self.get(r, c).clone()
            } else {
                other.get(r - self.rows, c).clone()
            }
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), self.field, |r, c| {
            self.get(r, cols[c]).clone()
        })
    }

    pub fn column(&self, c: usize) -> Matrix {
        self.select_columns(&[c])
    }

    /// First nonzero entry position, if any. Used to report exact residual
    /// locations of failed identities.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.get(r, c).is_zero() {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Reduced row echelon form together with the pivot column list.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        match self.field {
            FieldSpec::Rational => self.rref_rational(),
            FieldSpec::Prime(p) => self.rref_prime(p),
        }
    }

    fn rref_rational(&self) -> (Matrix, Vec<usize>) {
        // Clear denominators per row, then eliminate over the integers with
        // content reduction; normalize pivot rows at the end.
        let mut rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let mut lcm = BigInt::one();
                for c in 0..self.cols {
                    if let Scalar::Rat(q) = self.get(r, c) {
                        lcm = lcm.lcm(q.denom());
                    }
                }
                (0..self.cols)
                    .map(|c| match self.get(r, c) {
                        Scalar::Rat(q) => q.numer() * (&lcm / q.denom()),
                        Scalar::Fp { .. } => unreachable!(),
                    })
                    .collect()
            })
            .collect();

        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, pr);
            for j in 0..self.rows {
                if j == r || rows[j][c].is_zero() {
                    continue;
                }
                let piv = rows[r][c].clone();
                let fac = rows[j][c].clone();
                let mut content = BigInt::zero();
                for k in 0..self.cols {
                    let v = &rows[j][k] * &piv - &rows[r][k] * &fac;
                    content = content.gcd(&v);
                    rows[j][k] = v;
                }
                if content > BigInt::one() {
                    for k in 0..self.cols {
                        rows[j][k] = &rows[j][k] / &content;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }

        let mut out = Matrix::zeros(self.rows, self.cols, FieldSpec::Rational);
        for (i, &p) in pivots.iter().enumerate() {
            let piv = rows[i][p].clone();
            for c in 0..self.cols {
                let q = BigRational::new(rows[i][c].clone(), piv.clone());
                out.set(i, c, Scalar::Rat(q));
            }
        }
        (out, pivots)
    }

    fn rref_prime(&self, p: u32) -> (Matrix, Vec<usize>) {
        let m = p as u64;
        let mut rows: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| match self.get(r, c) {
                        Scalar::Fp { val, .. } => *val as u64,
                        Scalar::Rat(_) => unreachable!(),
                    })
                    .collect()
            })
            .collect();

        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = prime_inverse(rows[r][c], m);
            for k in 0..self.cols {
                rows[r][k] = rows[r][k] * inv % m;
            }
            for j in 0..self.rows {
                if j == r || rows[j][c] == 0 {
                    continue;
                }
                let fac = rows[j][c];
                for k in 0..self.cols {
                    rows[j][k] = (rows[j][k] + m * m - fac * rows[r][k] % m) % m;
                }
            }
            pivots.push(c);
            r += 1;
        }

        let field = FieldSpec::Prime(p);
        let out = Matrix::from_fn(self.rows, self.cols, field, |i, j| Scalar::Fp {
            p,
            val: rows[i][j] as u32,
        });
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the null space, returned as the columns of an
    /// `cols x nullity` matrix. `self.mul(&basis)` is exactly zero.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len(), self.field);
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, self.field.one());
            for (i, &p) in pivots.iter().enumerate() {
                out.set(p, k, r.get(i, f).neg());
            }
        }
        out
    }

    /// A basis of the column space: the pivot columns of `self`, in the
    /// fixed global basis order.
    pub fn image_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// Solves `self . x = rhs` for `x`, one column of `rhs` at a time; free
    /// variables are set to zero. Fails if any column is outside the image.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        if self.field != rhs.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.rows != rhs.rows {
            return Err(MatrixError::ShapeMismatch {
                expected: (self.rows, rhs.cols),
                got: (rhs.rows, rhs.cols),
            });
        }
        let (r, pivots) = self.hstack(rhs).rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Err(MatrixError::Inconsistent);
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols, self.field);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotInvertible);
        }
        if self.rank() != self.rows {
            return Err(MatrixError::NotInvertible);
        }
        self.solve(&Matrix::identity(self.rows, self.field))
    }

    /// True when every column of `vecs` lies in the column span of `self`.
    pub fn span_contains(&self, vecs: &Matrix) -> bool {
        let r = self.rank();
        self.hstack(vecs).rank() == r
    }

    /// Exact equality of column spans.
    pub fn same_span(&self, other: &Matrix) -> bool {
        let ra = self.rank();
        let rb = other.rank();
        ra == rb && self.hstack(other).rank() == ra
    }

    /// Canonical basis of the sum of the two column spans.
    pub fn span_sum(&self, other: &Matrix) -> Matrix {
        self.hstack(other).image_basis()
    }

    /// Completes independent columns to a full basis using unit vectors,
    /// chosen deterministically (lowest coordinate first).
    pub fn complete_basis(&self) -> Result<Matrix, MatrixError> {
        let (_, pivots) = self.transpose().rref();
        if pivots.len() != self.cols {
            return Err(MatrixError::BasisNotIndependent);
        }
        let mut full = self.clone();
        for j in 0..self.rows {
            if !pivots.contains(&j) {
                let mut e = Matrix::zeros(self.rows, 1, self.field);
                e.set(j, 0, self.field.one());
                full = full.hstack(&e);
            }
        }
        debug_assert_eq!(full.cols, self.rows);
        Ok(full)
    }

    /// Projection onto the quotient by the column span of `self`: the matrix
    /// of "coordinates along the completing unit vectors". Its kernel is
    /// exactly the span of `self`.
    pub fn quotient_projection(&self) -> Result<Matrix, MatrixError> {
        Ok(self.quotient_with_section()?.0)
    }

    /// Quotient projection together with its canonical section (the chosen
    /// completing unit vectors); `proj . section` is the identity on the
    /// quotient.
    pub fn quotient_with_section(&self) -> Result<(Matrix, Matrix), MatrixError> {
        let full = self.complete_basis()?;
        let inv = full.inverse().expect("completed basis is invertible");
        let k = self.cols;
        let rows: Vec<usize> = (k..self.rows).collect();
        let proj = Matrix::from_fn(rows.len(), self.rows, self.field, |r, c| {
            inv.get(rows[r], c).clone()
        });
        let section = full.select_columns(&rows);
        Ok((proj, section))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// The flip `X ⊗ Y -> Y ⊗ X` on plain tensor factors of the given
/// dimensions, under the global basis convention.
pub fn flip_matrix(dim_x: usize, dim_y: usize, field: FieldSpec) -> Matrix {
    let mut m = Matrix::zeros(dim_x * dim_y, dim_x * dim_y, field);
    for i in 0..dim_x {
        for j in 0..dim_y {
            m.set(j * dim_x + i, i * dim_y + j, field.one());
        }
    }
    m
}

fn prime_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn rref_of_identity() {
        let id = Matrix::identity(3, Q);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64_rows(Q, &[&[1, 1], &[1, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_i64_rows(Q, &[&[1, 1], &[0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_zero_matrix() {
        let m = Matrix::zeros(2, 2, Q);
        let (r, pivots) = m.rref();
        assert!(r.is_zero());
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::from_i64_rows(Q, &[&[2, 4, 1], &[3, 6, 0], &[1, 2, 1]]);
        let (r1, _) = m.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
        let m7 = Matrix::from_i64_rows(gf(7), &[&[2, 4, 1], &[3, 6, 0], &[1, 2, 1]]);
        let (r1, _) = m7.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn rref_with_fractions() {
        let m = Matrix::from_rows(
            Q,
            vec![
                vec![Q.parse("1/2").unwrap(), Q.parse("1/3").unwrap()],
                vec![Q.parse("1/4").unwrap(), Q.parse("1/5").unwrap()],
            ],
        );
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::identity(2, Q));
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn kernel_visible_null_vector() {
        let m = Matrix::from_i64_rows(Q, &[&[1, 1], &[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
        // spanned by (1, -1)
        let expected = Matrix::from_i64_rows(Q, &[&[1], &[-1]]);
        assert!(k.same_span(&expected));
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let k = Matrix::identity(4, Q).kernel_basis();
        assert_eq!(k.cols(), 0);
    }

    #[test]
    fn kernel_over_gf7() {
        let m = Matrix::from_i64_rows(gf(7), &[&[1, 2, 3]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        assert_eq!(k.rank(), 2);
    }

    #[test]
    fn image_examples() {
        assert_eq!(Matrix::identity(3, Q).image_basis(), Matrix::identity(3, Q));
        assert_eq!(Matrix::zeros(2, 2, Q).image_basis().cols(), 0);
        let m = Matrix::from_i64_rows(Q, &[&[1, 1], &[1, 1]]);
        let im = m.image_basis();
        assert_eq!(im.cols(), 1);
        assert!(im.same_span(&Matrix::from_i64_rows(Q, &[&[1], &[1]])));
    }

    #[test]
    fn rank_nullity() {
        let cases = [
            Matrix::from_i64_rows(Q, &[&[1, 2, 3], &[4, 5, 6]]),
            Matrix::zeros(3, 4, Q),
            Matrix::identity(5, Q),
            Matrix::from_i64_rows(gf(5), &[&[1, 2], &[2, 4], &[0, 1]]),
        ];
        for m in cases {
            assert_eq!(m.rank() + m.kernel_basis().cols(), m.cols());
        }
    }

    #[test]
    fn kronecker_identities() {
        let id2 = Matrix::identity(2, Q);
        let id3 = Matrix::identity(3, Q);
        assert_eq!(id2.kronecker(&id3), Matrix::identity(6, Q));
        let a = Matrix::from_i64_rows(Q, &[&[2]]);
        let b = Matrix::from_i64_rows(Q, &[&[3]]);
        assert_eq!(a.kronecker(&b), Matrix::from_i64_rows(Q, &[&[6]]));
    }

    #[test]
    fn kronecker_functoriality() {
        let f = Matrix::from_i64_rows(gf(7), &[&[1, 2], &[3, 4]]);
        let g = Matrix::from_i64_rows(gf(7), &[&[5, 6], &[0, 2]]);
        let fp = Matrix::from_i64_rows(gf(7), &[&[2, 0], &[1, 5]]);
        let gp = Matrix::from_i64_rows(gf(7), &[&[3, 3], &[4, 1]]);
        let lhs = f.kronecker(&g).mul(&fp.kronecker(&gp));
        let rhs = f.mul(&fp).kronecker(&g.mul(&gp));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_and_inverse() {
        let a = Matrix::from_i64_rows(Q, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2, Q));
        let singular = Matrix::from_i64_rows(Q, &[&[1, 1], &[1, 1]]);
        assert_eq!(singular.inverse(), Err(MatrixError::NotInvertible));
        let rhs = Matrix::from_i64_rows(Q, &[&[1], &[2]]);
        assert!(singular.solve(&rhs).is_err());
        let ok = Matrix::from_i64_rows(Q, &[&[1], &[1]]);
        let x = singular.solve(&ok).unwrap();
        assert_eq!(singular.mul(&x), ok);
    }

    #[test]
    fn quotient_projection_kills_subspace() {
        let sub = Matrix::from_i64_rows(Q, &[&[1], &[1], &[0]]);
        let proj = sub.quotient_projection().unwrap();
        assert_eq!(proj.rows(), 2);
        assert!(proj.mul(&sub).is_zero());
        assert_eq!(proj.rank(), 2);
        let dependent = Matrix::from_i64_rows(Q, &[&[1, 2], &[1, 2], &[0, 0]]);
        assert_eq!(
            dependent.quotient_projection(),
            Err(MatrixError::BasisNotIndependent)
        );
    }

    #[test]
    fn empty_shapes_are_workable() {
        let m = Matrix::zeros(3, 0, Q);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().cols(), 0);
        let wide = Matrix::zeros(0, 3, Q);
        assert_eq!(wide.kernel_basis().cols(), 3);
        let prod = m.mul(&wide);
        assert_eq!((prod.rows(), prod.cols()), (3, 3));
        assert!(prod.is_zero());
    }
}
