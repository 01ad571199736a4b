//! The braided cotensor (quantum shuffle) bialgebra T^c(V), truncated at
//! degree N: deconcatenation comultiplication, braided shuffle product.
//!
//! Shuffle enumeration order matches `tensor`, so the two modules' matrices
//! are comparable entrywise in duality tests.

use alloc::collections::BTreeMap;

use crate::braiding::Braiding;
use crate::graded::{GradedSpace, TruncatedGradedBialgebra};
use crate::matrix::Matrix;
use crate::perm::shuffles;

/// The (a,t)-component of the braided shuffle product on V^{⊗(a+t)}.
pub fn shuffle_component(b: &Braiding, a: usize, t: usize) -> Matrix {
    let n = a + t;
    let d = b.dim().pow(n as u32);
    let mut sum = Matrix::zeros(d, d, b.field());
    for sigma in shuffles(a, t) {
        sum = sum.add(&b.permutation_lift(n, &sigma));
    }
    sum
}

pub fn build_cotensor_bialgebra(b: &Braiding, n: usize) -> TruncatedGradedBialgebra {
    let components = (0..=n).map(|d| b.space().tensor_power(d)).collect();
    let space = GradedSpace::new(components);
    let field = b.field();
    let mut mult = BTreeMap::new();
    let mut comult = BTreeMap::new();
    let mut braid = BTreeMap::new();
    for p in 0..=n {
        for q in 0..=n - p {
            let dim = b.dim().pow((p + q) as u32);
            mult.insert((p, q), shuffle_component(b, p, q));
            comult.insert((p, q), Matrix::identity(dim, field));
            braid.insert((p, q), b.block_braid(p, q));
        }
    }
    let unit = Matrix::identity(1, field);
    let counit = Matrix::identity(1, field);
    TruncatedGradedBialgebra::new(space, mult, comult, unit, counit, braid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::BasedSpace;
    use crate::graded::{
        all_passed, check_bialgebra_compat, check_graded_algebra_axioms,
        check_graded_coalgebra_axioms, check_strongly_graded, GradedSide,
    };
    use crate::scalar::FieldSpec;
    use crate::tensor::unshuffle_component;
    use alloc::vec::Vec;

    const Q: FieldSpec = FieldSpec::Rational;

    fn gf7() -> FieldSpec {
        FieldSpec::prime(7).unwrap()
    }

    fn diag1(field: FieldSpec, q: i64) -> Braiding {
        let space = BasedSpace::with_default_labels(1, field);
        Braiding::from_diagonal(&Matrix::from_i64_rows(field, &[&[q]]), space).unwrap()
    }

    fn diag2(field: FieldSpec, q: &[[i64; 2]; 2]) -> Braiding {
        let space = BasedSpace::with_default_labels(2, field);
        let qm = Matrix::from_i64_rows(field, &[&q[0], &q[1]]);
        Braiding::from_diagonal(&qm, space).unwrap()
    }

    #[test]
    fn shuffle_scalars() {
        // m_{1,1} = 1 + q, zero at q = -1
        assert_eq!(
            shuffle_component(&diag1(Q, -1), 1, 1),
            Matrix::zeros(1, 1, Q)
        );
        // classical shuffle count C(3,1)
        assert_eq!(
            shuffle_component(&diag1(Q, 1), 2, 1),
            Matrix::from_i64_rows(Q, &[&[3]])
        );
        // 1 + q + q² = 0 over GF(7) at q = 2
        assert_eq!(
            shuffle_component(&diag1(gf7(), 2), 1, 2),
            Matrix::zeros(1, 1, gf7())
        );
        // a = 0 is the strict left unit
        assert!(shuffle_component(&diag1(Q, 1), 0, 3).is_identity());
    }

    #[test]
    fn degree_one_one_is_id_plus_c() {
        let b = diag2(gf7(), &[[3, 5], [2, 6]]);
        let expected = Matrix::identity(4, gf7()).add(b.matrix());
        assert_eq!(shuffle_component(&b, 1, 1), expected);
    }

    #[test]
    fn comultiplication_is_deconcatenation() {
        let tc = build_cotensor_bialgebra(&diag2(gf7(), &[[2, 1], [4, 2]]), 3);
        for a in 0..=3usize {
            for b in 0..=3 - a {
                assert!(tc.comult(a, b).is_identity());
            }
        }
    }

    #[test]
    fn axiom_suite() {
        for q in [1i64, -1] {
            let tc = build_cotensor_bialgebra(&diag1(Q, q), 5);
            assert!(all_passed(&check_graded_coalgebra_axioms(&tc)), "q={q}");
            assert!(all_passed(&check_graded_algebra_axioms(&tc)), "q={q}");
            assert!(all_passed(&check_bialgebra_compat(&tc)), "q={q}");
            assert!(check_strongly_graded(&tc, GradedSide::Coalgebra).passed());
        }
        let tc = build_cotensor_bialgebra(&diag2(gf7(), &[[2, 1], [4, 2]]), 4);
        assert!(all_passed(&check_graded_coalgebra_axioms(&tc)));
        assert!(all_passed(&check_graded_algebra_axioms(&tc)));
        assert!(all_passed(&check_bialgebra_compat(&tc)));
        assert!(check_strongly_graded(&tc, GradedSide::Coalgebra).passed());
    }

    #[test]
    fn axiom_suite_dim3_gf7() {
        let space = BasedSpace::with_default_labels(3, gf7());
        let qm = Matrix::from_i64_rows(gf7(), &[&[2, 1, 3], &[5, 4, 1], &[2, 6, 2]]);
        let b = Braiding::from_diagonal(&qm, space).unwrap();
        let tc = build_cotensor_bialgebra(&b, 3);
        assert!(all_passed(&check_graded_coalgebra_axioms(&tc)));
        assert!(all_passed(&check_graded_algebra_axioms(&tc)));
        assert!(all_passed(&check_bialgebra_compat(&tc)));
        assert!(check_strongly_graded(&tc, GradedSide::Coalgebra).passed());
        let t = crate::tensor::build_tensor_bialgebra(&b, 3);
        assert!(all_passed(&check_graded_coalgebra_axioms(&t)));
        assert!(all_passed(&check_graded_algebra_axioms(&t)));
        assert!(all_passed(&check_bialgebra_compat(&t)));
    }

    #[test]
    fn shuffle_unshuffle_transpose_duality_for_symmetric_q() {
        // for q_{ij} = q_{ji} every lift is transpose-dual to its inverse
        let braidings = [
            diag1(Q, 1),
            diag1(Q, -1),
            diag2(gf7(), &[[2, 3], [3, 4]]),
        ];
        for b in &braidings {
            for a in 0..=3usize {
                for t in 0..=3 - a {
                    assert_eq!(
                        unshuffle_component(b, a, t),
                        shuffle_component(b, a, t).transpose()
                    );
                }
            }
        }
    }

    #[test]
    fn perturbed_comult_fails_exactly_at_triples_touching_1_1() {
        let mut tc = build_cotensor_bialgebra(&diag2(gf7(), &[[2, 1], [4, 2]]), 4);
        let mut d11 = tc.comult(1, 1).clone();
        d11.set(0, 1, d11.get(0, 1).add(&gf7().one()));
        tc.set_comult(1, 1, d11);
        let reports = check_graded_coalgebra_axioms(&tc);
        let loc_delta = &reports[0];
        let failing: Vec<&[usize]> = loc_delta
            .failures
            .iter()
            .map(|f| f.indices.as_slice())
            .collect();
        assert_eq!(failing, alloc::vec![&[1, 1, 1][..], &[1, 1, 2], &[2, 1, 1]]);
        assert!(reports[1].passed()); // counit laws untouched
    }

    #[test]
    fn swapped_inverse_braiding_breaks_compatibility() {
        // q = 2 over GF(7) is not symmetric: c² ≠ id, so feeding the
        // inverse lifts into the compatibility checker must fail somewhere.
        let b = diag1(gf7(), 2);
        let inv =
            Braiding::from_matrix(b.inverse_matrix().clone(), b.space().clone()).unwrap();
        let mut tc = build_cotensor_bialgebra(&b, 3);
        for p in 0..=3usize {
            for q in 0..=3 - p {
                tc.set_braid(p, q, inv.block_braid(p, q));
            }
        }
        let reports = check_bialgebra_compat(&tc);
        assert!(!all_passed(&reports));
    }
}
