//! Property tests over randomized inputs: row-reduction invariants,
//! kronecker functoriality, scalar field laws, and expression round-trips.

use braided_forge_core::dsl::{
    builtin_signature, parse_expr, print_expr, sample_expr, BuiltinDims,
};
use braided_forge_core::matrix::Matrix;
use braided_forge_core::scalar::{ArithOp, FieldSpec, Scalar};
use proptest::prelude::*;

fn gf7() -> FieldSpec {
    FieldSpec::prime(7).unwrap()
}

fn small_matrix(field: FieldSpec) -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-6i64..7, r * c).prop_map(move |entries| {
            Matrix::from_fn(r, c, field, |i, j| field.from_i64(entries[i * c + j]))
        })
    })
}

fn square_matrix(field: FieldSpec, n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-6i64..7, n * n).prop_map(move |entries| {
        Matrix::from_fn(n, n, field, |i, j| field.from_i64(entries[i * n + j]))
    })
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_column_count(m in small_matrix(FieldSpec::Rational)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().cols(), m.cols());
        let k = m.kernel_basis();
        prop_assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn rank_plus_nullity_gf7(m in small_matrix(gf7())) {
        prop_assert_eq!(m.rank() + m.kernel_basis().cols(), m.cols());
        prop_assert!(m.mul(&m.kernel_basis()).is_zero());
    }

    #[test]
    fn rref_is_idempotent(m in small_matrix(FieldSpec::Rational)) {
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn image_plus_kernel_dimensions(m in small_matrix(gf7())) {
        let im = m.image_basis();
        prop_assert_eq!(im.cols(), m.rank());
        // every column of m is solvable in the image span
        for c in 0..m.cols() {
            prop_assert!(im.span_contains(&m.column(c)));
        }
    }

    #[test]
    fn kronecker_functoriality(
        f in square_matrix(gf7(), 2),
        g in square_matrix(gf7(), 3),
        fp in square_matrix(gf7(), 2),
        gp in square_matrix(gf7(), 3),
    ) {
        let lhs = f.kronecker(&g).mul(&fp.kronecker(&gp));
        let rhs = f.mul(&fp).kronecker(&g.mul(&gp));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_field_laws(a in -20i64..21, b in -20i64..21, c in 1i64..20, d in 1i64..20) {
        let f = FieldSpec::Rational;
        let x = f.from_i64(a).arith(&f.from_i64(c), ArithOp::Div).unwrap();
        let y = f.from_i64(b).arith(&f.from_i64(d), ArithOp::Div).unwrap();
        let sum = x.arith(&y, ArithOp::Add).unwrap();
        prop_assert_eq!(sum.sub(&y), x.clone());
        if !y.is_zero() {
            let quot = x.arith(&y, ArithOp::Div).unwrap();
            prop_assert_eq!(quot.mul(&y), x.clone());
        }
        // serialized form round-trips
        let parsed: Scalar = f.parse(&x.to_string()).unwrap();
        prop_assert_eq!(parsed, x);
    }

    #[test]
    fn expression_round_trip(seed in any::<u64>(), steps in 0usize..25) {
        let sig = builtin_signature(BuiltinDims::default());
        let e = sample_expr(&sig, seed, steps);
        let printed = print_expr(&e);
        let reparsed = parse_expr(&printed, &sig).unwrap();
        prop_assert_eq!(reparsed, e);
    }
}
