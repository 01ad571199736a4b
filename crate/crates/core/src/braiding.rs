//! Braided vector spaces: Yang-Baxter operators, strand operators on tensor
//! powers, and braid-group lifts of permutations.
//!
//! Bases of tensor powers follow one global convention throughout the crate:
//! `e_{i1} ⊗ ... ⊗ e_{in}` sits at position `Σ i_k · dim^(n-k)` (0-based),
//! i.e. lexicographic with the first factor most significant, matching
//! [`Matrix::kronecker`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::Matrix;
use crate::perm;
use crate::scalar::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidingError {
    /// Diagonal braidings need every parameter nonzero.
    ZeroParameter { row: usize, col: usize },
    NotInvertible,
    /// The braid equation has a nonzero residual at this entry of the
    /// difference matrix on V^{⊗3}.
    BraidEquationFails { residual: (usize, usize) },
    WrongSize { expected: usize, got: (usize, usize) },
    IndexOutOfRange { index: usize, degree: usize },
    DuplicateLabel(String),
    LabelCount { dim: usize, labels: usize },
}

impl fmt::Display for BraidingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidingError::ZeroParameter { row, col } => {
                write!(f, "diagonal parameter q[{row}][{col}] is zero")
            }
            BraidingError::NotInvertible => write!(f, "braiding matrix is not invertible"),
            BraidingError::BraidEquationFails { residual } => write!(
                f,
                "braid equation fails: nonzero residual at entry ({}, {})",
                residual.0, residual.1
            ),
            BraidingError::WrongSize { expected, got } => write!(
                f,
                "braiding matrix must be {expected}x{expected}, got {}x{}",
                got.0, got.1
            ),
            BraidingError::IndexOutOfRange { index, degree } => {
                write!(f, "strand index {index} out of range 1..{}", degree)
            }
            BraidingError::DuplicateLabel(l) => write!(f, "duplicate basis label {l}"),
            BraidingError::LabelCount { dim, labels } => {
                write!(f, "space of dimension {dim} has {labels} labels")
            }
        }
    }
}

/// A finite-dimensional vector space with a named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedSpace {
    dim: usize,
    labels: Vec<String>,
    field: FieldSpec,
}

impl BasedSpace {
    pub fn new(labels: Vec<String>, field: FieldSpec) -> Result<BasedSpace, BraidingError> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(BraidingError::DuplicateLabel(l.clone()));
            }
        }
        Ok(BasedSpace {
            dim: labels.len(),
            labels,
            field,
        })
    }

    /// Space with basis labels `x1, ..., xdim`.
    pub fn with_default_labels(dim: usize, field: FieldSpec) -> BasedSpace {
        let labels = (1..=dim).map(|i| alloc::format!("x{i}")).collect();
        BasedSpace::new(labels, field).expect("default labels are distinct")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// The n-th tensor power with concatenated labels in the global basis
    /// order; degree 0 is the unit object with basis label "1".
    pub fn tensor_power(&self, n: usize) -> BasedSpace {
        if n == 0 {
            return BasedSpace::new(alloc::vec![String::from("1")], self.field)
                .expect("unit label");
        }
        let mut labels: Vec<String> = self.labels.clone();
        for _ in 1..n {
            let mut next = Vec::with_capacity(labels.len() * self.dim);
            for w in &labels {
                for l in &self.labels {
                    next.push(alloc::format!("{w}{l}"));
                }
            }
            labels = next;
        }
        BasedSpace::new(labels, self.field).expect("tensor word labels are distinct")
    }
}

/// A validated Yang-Baxter operator on V ⊗ V.
#[derive(Clone, Debug)]
pub struct Braiding {
    space: BasedSpace,
    c: Matrix,
    c_inv: Matrix,
}

/// Residual of `(c⊗id)(id⊗c)(c⊗id) - (id⊗c)(c⊗id)(id⊗c)` on V^{⊗3}.
fn braid_equation_residual(c: &Matrix, dim: usize) -> Option<(usize, usize)> {
    let field = c.field();
    let id = Matrix::identity(dim, field);
    let c1 = c.kronecker(&id);
    let c2 = id.kronecker(c);
    let lhs = c1.mul(&c2).mul(&c1);
    let rhs = c2.mul(&c1).mul(&c2);
    lhs.sub(&rhs).first_nonzero()
}

impl Braiding {
    /// Diagonal braiding `c(x_i ⊗ x_j) = q[i][j] · x_j ⊗ x_i`. Diagonal
    /// braidings always satisfy the braid equation; the validation is still
    /// run as a guard against construction bugs.
    pub fn from_diagonal(q: &Matrix, space: BasedSpace) -> Result<Braiding, BraidingError> {
        let d = space.dim();
        assert_eq!((q.rows(), q.cols()), (d, d), "q must be dim x dim");
        assert_eq!(q.field(), space.field(), "field mismatch");
        for i in 0..d {
            for j in 0..d {
                if q.get(i, j).is_zero() {
                    return Err(BraidingError::ZeroParameter { row: i, col: j });
                }
            }
        }
        let mut c = Matrix::zeros(d * d, d * d, space.field());
        for i in 0..d {
            for j in 0..d {
                c.set(j * d + i, i * d + j, q.get(i, j).clone());
            }
        }
        Braiding::from_matrix(c, space)
    }

    /// Validates an arbitrary candidate: right size, invertible, and the
    /// braid equation holds exactly on V^{⊗3}.
    pub fn from_matrix(c: Matrix, space: BasedSpace) -> Result<Braiding, BraidingError> {
        let d = space.dim();
        if (c.rows(), c.cols()) != (d * d, d * d) {
            return Err(BraidingError::WrongSize {
                expected: d * d,
                got: (c.rows(), c.cols()),
            });
        }
        assert_eq!(c.field(), space.field(), "field mismatch");
        let c_inv = c.inverse().map_err(|_| BraidingError::NotInvertible)?;
        if let Some(residual) = braid_equation_residual(&c, d) {
            return Err(BraidingError::BraidEquationFails { residual });
        }
        Ok(Braiding { space, c, c_inv })
    }

    /// The flip `x ⊗ y ↦ y ⊗ x` (the symmetric braiding).
    pub fn flip(space: BasedSpace) -> Braiding {
        let d = space.dim();
        let field = space.field();
        let mut c = Matrix::zeros(d * d, d * d, field);
        for i in 0..d {
            for j in 0..d {
                c.set(j * d + i, i * d + j, field.one());
            }
        }
        Braiding::from_matrix(c, space).expect("flip is a braiding")
    }

    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.space.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.c
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        &self.c_inv
    }

    /// `c_i = id^{⊗(i-1)} ⊗ c ⊗ id^{⊗(n-i-1)}` on V^{⊗n}, 1-based strand `i`.
    pub fn strand_operator(&self, n: usize, i: usize) -> Result<Matrix, BraidingError> {
        if i == 0 || i + 1 > n {
            return Err(BraidingError::IndexOutOfRange { index: i, degree: n });
        }
        let d = self.dim();
        let field = self.field();
        let left = Matrix::identity(d.pow((i - 1) as u32), field);
        let right = Matrix::identity(d.pow((n - i - 1) as u32), field);
        Ok(left.kronecker(&self.c).kronecker(&right))
    }

    /// Matsumoto lift of a permutation: the product of strand operators
    /// along the bubble-sort reduced word. Well-defined because the braid
    /// equation holds.
    pub fn permutation_lift(&self, n: usize, sigma: &[usize]) -> Matrix {
        assert_eq!(sigma.len(), n, "permutation size mismatch");
        assert!(perm::is_permutation(sigma), "not a permutation: {sigma:?}");
        let d = self.dim();
        let mut acc = Matrix::identity(d.pow(n as u32), self.field());
        // leftmost letter applied last: multiply on the left as we read
        for &i in perm::reduced_word(sigma).iter().rev() {
            let ci = self.strand_operator(n, i + 1).expect("letter in range");
            acc = ci.mul(&acc);
        }
        acc
    }

    /// Braiding between tensor-power blocks: the lift of the permutation
    /// moving the first `a` factors past the last `b` factors. This is the
    /// component `c_{V^{⊗a}, V^{⊗b}}` of the braided category.
    pub fn block_braid(&self, a: usize, b: usize) -> Matrix {
        self.permutation_lift(a + b, &perm::block_transposition(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    fn gf7() -> FieldSpec {
        FieldSpec::prime(7).unwrap()
    }

    fn diag1(field: FieldSpec, q: i64) -> Braiding {
        let space = BasedSpace::with_default_labels(1, field);
        let qm = Matrix::from_i64_rows(field, &[&[q]]);
        Braiding::from_diagonal(&qm, space).unwrap()
    }

    #[test]
    fn scalar_diagonal_braidings() {
        let b = diag1(Q, 1);
        assert_eq!(*b.matrix(), Matrix::identity(1, Q));
        let b = diag1(Q, -1);
        assert_eq!(*b.matrix(), Matrix::from_i64_rows(Q, &[&[-1]]));
    }

    #[test]
    fn zero_parameter_rejected() {
        let space = BasedSpace::with_default_labels(2, Q);
        let qm = Matrix::from_i64_rows(Q, &[&[1, 0], &[1, 1]]);
        assert_eq!(
            Braiding::from_diagonal(&qm, space).unwrap_err(),
            BraidingError::ZeroParameter { row: 0, col: 1 }
        );
    }

    #[test]
    fn gf7_diagonal_passes_braid_equation() {
        let space = BasedSpace::with_default_labels(2, gf7());
        let qm = Matrix::from_i64_rows(gf7(), &[&[2, 1], &[4, 2]]);
        let b = Braiding::from_diagonal(&qm, space).unwrap();
        // monomial: one nonzero entry per column
        for c in 0..4 {
            let nonzero = (0..4).filter(|&r| !b.matrix().get(r, c).is_zero()).count();
            assert_eq!(nonzero, 1);
        }
    }

    #[test]
    fn flip_and_identity_are_accepted() {
        let space = BasedSpace::with_default_labels(2, Q);
        Braiding::flip(space.clone());
        Braiding::from_matrix(Matrix::identity(4, Q), space).unwrap();
    }

    #[test]
    fn corrupted_flip_fails_braid_equation() {
        let space = BasedSpace::with_default_labels(2, Q);
        let mut c = Braiding::flip(space.clone()).matrix().clone();
        // an off-pattern entry; the matrix stays invertible
        c.set(0, 1, Q.one());
        let err = Braiding::from_matrix(c, space).unwrap_err();
        assert!(matches!(err, BraidingError::BraidEquationFails { .. }));
    }

    #[test]
    fn strand_operators() {
        let b = Braiding::flip(BasedSpace::with_default_labels(2, Q));
        let c1 = b.strand_operator(3, 1).unwrap();
        // adjacent transposition permutation matrix: c1(e_i⊗e_j⊗e_k) = e_j⊗e_i⊗e_k
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let src = i * 4 + j * 2 + k;
                    let dst = j * 4 + i * 2 + k;
                    assert!(c1.get(dst, src).is_one());
                }
            }
        }
        let m = diag1(Q, -1);
        for i in [1, 2] {
            let ci = m.strand_operator(3, i).unwrap();
            assert_eq!(ci, Matrix::from_i64_rows(Q, &[&[-1]]));
        }
        assert!(matches!(
            m.strand_operator(3, 3),
            Err(BraidingError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            m.strand_operator(3, 0),
            Err(BraidingError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn braid_relation_on_validated_braiding() {
        let space = BasedSpace::with_default_labels(2, gf7());
        let qm = Matrix::from_i64_rows(gf7(), &[&[3, 5], &[2, 6]]);
        let b = Braiding::from_diagonal(&qm, space).unwrap();
        let c1 = b.strand_operator(3, 1).unwrap();
        let c2 = b.strand_operator(3, 2).unwrap();
        assert_eq!(c1.mul(&c2).mul(&c1), c2.mul(&c1).mul(&c2));
    }

    #[test]
    fn lift_of_identity_and_plain_permutations() {
        let b = Braiding::flip(BasedSpace::with_default_labels(2, Q));
        assert!(b.permutation_lift(3, &perm::identity(3)).is_identity());
        // trivial braiding: lift is the plain permutation matrix
        let sigma = alloc::vec![2, 0, 1];
        let lift = b.permutation_lift(3, &sigma);
        let inv = perm::inverse(&sigma);
        for i in 0..2usize {
            for j in 0..2usize {
                for k in 0..2usize {
                    let x = [i, j, k];
                    let src = i * 4 + j * 2 + k;
                    let dst = x[inv[0]] * 4 + x[inv[1]] * 2 + x[inv[2]];
                    assert!(lift.get(dst, src).is_one());
                }
            }
        }
    }

    #[test]
    fn lift_counts_inversions() {
        let f = gf7();
        let b = diag1(f, 3);
        // (1 3) in S_3 has 3 inversions
        let sigma = alloc::vec![2, 1, 0];
        assert_eq!(perm::inversions(&sigma), 3);
        let lift = b.permutation_lift(3, &sigma);
        let q3 = f.from_i64(27 % 7);
        assert_eq!(*lift.get(0, 0), q3);
    }

    #[test]
    fn lift_is_word_independent() {
        let space = BasedSpace::with_default_labels(2, gf7());
        let qm = Matrix::from_i64_rows(gf7(), &[&[2, 1], &[4, 2]]);
        let b = Braiding::from_diagonal(&qm, space).unwrap();
        // longest element of S_4, two different reduced words (1-based strands)
        let w0 = alloc::vec![3, 2, 1, 0];
        let lift = b.permutation_lift(4, &w0);
        for word in [[1, 2, 1, 3, 2, 1], [3, 2, 3, 1, 2, 3]] {
            let mut acc = Matrix::identity(16, gf7());
            for &i in word.iter().rev() {
                acc = b.strand_operator(4, i).unwrap().mul(&acc);
            }
            assert_eq!(acc, lift);
        }
    }

    #[test]
    fn duplicate_labels_rejected() {
        let labels = alloc::vec![String::from("x"), String::from("x")];
        assert!(matches!(
            BasedSpace::new(labels, Q),
            Err(BraidingError::DuplicateLabel(_))
        ));
    }
}
