//! The braided tensor bialgebra T(V), truncated at degree N.
//!
//! Multiplication is free concatenation, so every `m_{a,b}` is the identity
//! under the global basis convention. The comultiplication component
//! `Δ_{a,b}` is the braided unshuffle: the sum of `lift(σ^{-1})` over all
//! (a,b)-shuffles σ. The recursive algebra-map extension of Δ is kept in the
//! test suite as an independent oracle for this closed form.

use alloc::collections::BTreeMap;
use crate::braiding::Braiding;
use crate::graded::{GradedSpace, TruncatedGradedBialgebra};
use crate::matrix::Matrix;
use crate::perm::{inverse, shuffles};

/// The (a,t)-component of the braided comultiplication on V^{⊗(a+t)}.
pub fn unshuffle_component(b: &Braiding, a: usize, t: usize) -> Matrix {
    let n = a + t;
    let d = b.dim().pow(n as u32);
    let mut sum = Matrix::zeros(d, d, b.field());
    for sigma in shuffles(a, t) {
        sum = sum.add(&b.permutation_lift(n, &inverse(&sigma)));
    }
    sum
}

pub fn build_tensor_bialgebra(b: &Braiding, n: usize) -> TruncatedGradedBialgebra {
    let components = (0..=n).map(|d| b.space().tensor_power(d)).collect();
    let space = GradedSpace::new(components);
    let field = b.field();
    let mut mult = BTreeMap::new();
    let mut comult = BTreeMap::new();
    let mut braid = BTreeMap::new();
    for p in 0..=n {
        for q in 0..=n - p {
            let dim = b.dim().pow((p + q) as u32);
            mult.insert((p, q), Matrix::identity(dim, field));
            comult.insert((p, q), unshuffle_component(b, p, q));
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
    use alloc::vec;
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

    /// Independent oracle: build Δ_{a,b} by the recursion coming from the
    /// algebra-map extension, splitting off the leftmost factor.
    fn unshuffle_recursive(b: &Braiding, a: usize, t: usize) -> Matrix {
        let d = b.dim();
        let field = b.field();
        if a == 0 || t == 0 {
            return Matrix::identity(d.pow((a + t) as u32), field);
        }
        let id_v = Matrix::identity(d, field);
        let term1 = id_v.kronecker(&unshuffle_recursive(b, a - 1, t));
        let block = b.block_braid(1, a);
        let id_rest = Matrix::identity(d.pow((t - 1) as u32), field);
        let term2 = block
            .kronecker(&id_rest)
            .mul(&id_v.kronecker(&unshuffle_recursive(b, a, t - 1)));
        term1.add(&term2)
    }

    #[test]
    fn unshuffle_agrees_with_recursion() {
        let braidings = [diag1(Q, -1), diag1(gf7(), 2), diag2(gf7(), &[[2, 1], [4, 2]])];
        for b in &braidings {
            for a in 0..=3usize {
                for t in 0..=3 - a {
                    assert_eq!(
                        unshuffle_component(b, a, t),
                        unshuffle_recursive(b, a, t),
                        "a={a} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn degree_one_one_component_is_id_plus_c() {
        let b = diag2(gf7(), &[[3, 5], [2, 6]]);
        let expected = Matrix::identity(4, gf7()).add(b.matrix());
        assert_eq!(unshuffle_component(&b, 1, 1), expected);
        // dim 1: scalar 1 + q, zero at q = -1
        assert_eq!(
            unshuffle_component(&diag1(Q, -1), 1, 1),
            Matrix::zeros(1, 1, Q)
        );
    }

    #[test]
    fn trivial_braiding_counts_shuffles() {
        let b = diag1(Q, 1);
        assert_eq!(
            unshuffle_component(&b, 1, 2),
            Matrix::from_i64_rows(Q, &[&[3]])
        );
        assert_eq!(
            unshuffle_component(&b, 0, 3),
            Matrix::identity(1, Q)
        );
    }

    #[test]
    fn multiplication_is_free_concatenation() {
        let t = build_tensor_bialgebra(&diag2(gf7(), &[[2, 1], [4, 2]]), 3);
        for a in 0..=3usize {
            for b in 0..=3 - a {
                assert!(t.mult(a, b).is_identity());
            }
        }
        assert!(t.counit().is_identity());
        assert!(t.unit().is_identity());
    }

    #[test]
    fn axiom_suite_dim1() {
        for q in [1i64, -1, 2] {
            let t = build_tensor_bialgebra(&diag1(Q, q), 5);
            assert!(all_passed(&check_graded_coalgebra_axioms(&t)), "q={q}");
            assert!(all_passed(&check_graded_algebra_axioms(&t)), "q={q}");
            assert!(all_passed(&check_bialgebra_compat(&t)), "q={q}");
            assert!(check_strongly_graded(&t, GradedSide::Algebra).passed());
        }
    }

    #[test]
    fn axiom_suite_dim2_gf7() {
        let t = build_tensor_bialgebra(&diag2(gf7(), &[[2, 1], [4, 2]]), 4);
        assert!(all_passed(&check_graded_coalgebra_axioms(&t)));
        assert!(all_passed(&check_graded_algebra_axioms(&t)));
        assert!(all_passed(&check_bialgebra_compat(&t)));
        assert!(check_strongly_graded(&t, GradedSide::Algebra).passed());
    }

    #[test]
    fn perturbed_mult_fails_locally() {
        let mut t = build_tensor_bialgebra(&diag2(gf7(), &[[2, 1], [4, 2]]), 4);
        let mut m11 = t.mult(1, 1).clone();
        m11.set(0, 1, m11.get(0, 1).add(&gf7().one()));
        t.set_mult(1, 1, m11);
        let reports = check_graded_algebra_axioms(&t);
        let loc_multi = &reports[0];
        let failing: Vec<&[usize]> = loc_multi
            .failures
            .iter()
            .map(|f| f.indices.as_slice())
            .collect();
        assert_eq!(failing, vec![&[1, 1, 1][..], &[1, 1, 2], &[2, 1, 1]]);
        assert!(reports[1].passed()); // unit laws untouched
    }
}
