//! The canonical graded map F: T(V) -> T^c(V), its degreewise image (the
//! type-one bialgebra, whose positive part is the Nichols algebra of V), and
//! the characterization checks.
//!
//! Three routes to `F_n` are provided. The normative definition is the
//! coalgebra one (`symmetrizer_via_psi`, built from iterated unshuffle
//! components); the permutation sum over S_n and the one-step recursion are
//! certified equal to it by the test suite and are interchangeable in
//! practice.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::braiding::Braiding;
use crate::cotensor::build_cotensor_bialgebra;
use crate::graded::{
    check_strongly_graded, ideal_power, image_bialgebra, wedge_power, GradedMap, GradedSide,
    ImageError, TruncatedGradedBialgebra,
};
use crate::matrix::Matrix;
use crate::perm::all_permutations;
use crate::tensor::build_tensor_bialgebra;

/// Oracle form of the quantum symmetrizer: `F_n = Σ_{σ ∈ S_n} lift(σ)`.
pub fn symmetrizer_perm_sum(b: &Braiding, n: usize) -> Matrix {
    let d = b.dim().pow(n as u32);
    let mut sum = Matrix::zeros(d, d, b.field());
    for sigma in all_permutations(n) {
        sum = sum.add(&b.permutation_lift(n, &sigma));
    }
    sum
}

/// `F_n = ψ_n = (p_1)^{⊗n} ∘ Δ^{n-1} ∘ i_n` computed from the tensor
/// bialgebra's unshuffle components.
pub fn symmetrizer_via_psi(b: &Braiding, n: usize) -> Matrix {
    let t = build_tensor_bialgebra(b, n);
    psi_component(&t, n)
}

/// The all-ones component of the iterated comultiplication of any truncated
/// graded bialgebra: `ψ_n : C_n -> C_1^{⊗n}`; `ψ_0` is the identity on C_0.
pub fn psi_component(bialg: &TruncatedGradedBialgebra, n: usize) -> Matrix {
    if n == 0 {
        return Matrix::identity(bialg.dim(0), bialg.field());
    }
    bialg.iterated_comult(&vec![1; n])
}

/// Dual: `φ_n : C_1^{⊗n} -> C_n` via iterated multiplication.
pub fn phi_component(bialg: &TruncatedGradedBialgebra, n: usize) -> Matrix {
    if n == 0 {
        return Matrix::identity(bialg.dim(0), bialg.field());
    }
    bialg.iterated_mult(&vec![1; n])
}

/// One-step recursion: `F_n = (id ⊗ F_{n-1}) · (id + c_1 + c_1c_2 + ...)`.
pub fn symmetrizer_recursive(b: &Braiding, n: usize) -> Matrix {
    let field = b.field();
    let d = b.dim();
    if n == 0 {
        return Matrix::identity(1, field);
    }
    if n == 1 {
        return Matrix::identity(d, field);
    }
    let dim = d.pow(n as u32);
    let mut stairs = Matrix::identity(dim, field);
    let mut word = Matrix::identity(dim, field);
    for i in 1..n {
        word = word.mul(&b.strand_operator(n, i).expect("strand in range"));
        stairs = stairs.add(&word);
    }
    let id_v = Matrix::identity(d, field);
    id_v.kronecker(&symmetrizer_recursive(b, n - 1)).mul(&stairs)
}

/// The degreewise image data of F, with the induced bialgebra structure.
#[derive(Clone, Debug)]
pub struct TypeOneResult {
    /// dim Im(F_n) per degree 0..=N.
    pub dims: Vec<usize>,
    /// Column-span basis of Im(F_n) inside V^{⊗n}, per degree.
    pub bases: Vec<Matrix>,
    /// Per degree n >= 2: dim of ker F_n modulo the subspace generated by
    /// lower-degree relations, i.e. modulo V⊗ker F_{n-1} + ker F_{n-1}⊗V.
    pub new_relations: BTreeMap<usize, usize>,
    /// The induced graded braided bialgebra structure on the image.
    pub bialgebra: TruncatedGradedBialgebra,
}

impl TypeOneResult {
    /// Plain-text Hilbert polynomial, e.g. "1 + 2*t + 4*t^2".
    pub fn hilbert_string(&self) -> String {
        hilbert_string(&self.dims)
    }
}

pub fn hilbert_string(dims: &[usize]) -> String {
    let mut terms = Vec::new();
    for (n, &c) in dims.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let term = match (n, c) {
            (0, c) => alloc::format!("{c}"),
            (1, 1) => String::from("t"),
            (1, c) => alloc::format!("{c}*t"),
            (n, 1) => alloc::format!("t^{n}"),
            (n, c) => alloc::format!("{c}*t^{n}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        String::from("0")
    } else {
        terms.join(" + ")
    }
}

/// Computes F degreewise up to N, its image bialgebra, ranks, and minimal
/// relation counts. Degrees past a vanishing F_n are still computed; ranks
/// over GF(p) are measured, never inferred.
pub fn typeone_truncation(b: &Braiding, n: usize) -> Result<TypeOneResult, ImageError> {
    let t = build_tensor_bialgebra(b, n);
    let tc = build_cotensor_bialgebra(b, n);
    let components: Vec<Matrix> = (0..=n).map(|d| psi_component(&t, d)).collect();
    let f = GradedMap::new(t.space().clone(), tc.space().clone(), components);
    let image = image_bialgebra(&f, &t, &tc)?;

    let dims: Vec<usize> = image.inclusions.iter().map(Matrix::cols).collect();
    let field = b.field();
    let d = b.dim();
    let id_v = Matrix::identity(d, field);
    let mut new_relations = BTreeMap::new();
    let mut prev_kernel = Matrix::zeros(d, 0, field);
    for degree in 2..=n {
        let kernel = f.component(degree).kernel_basis();
        let induced = id_v
            .kronecker(&prev_kernel)
            .hstack(&prev_kernel.kronecker(&id_v));
        let inherited = induced.rank();
        new_relations.insert(degree, kernel.cols() - inherited);
        prev_kernel = kernel;
    }

    Ok(TypeOneResult {
        dims,
        bases: image.inclusions,
        new_relations,
        bialgebra: image.bialgebra,
    })
}

/// The two subspace equalities characterizing type-one bialgebras:
/// the square of the positive-degree ideal fills every degree >= 2, and the
/// 2nd wedge power of the degree-0 part is exactly degrees 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MagnumVerdict {
    pub ideal_square_is_ceiling: bool,
    pub wedge_square_is_floor: bool,
}

impl MagnumVerdict {
    pub fn passed(&self) -> bool {
        self.ideal_square_is_ceiling && self.wedge_square_is_floor
    }
}

pub fn magnum_check(bialg: &TruncatedGradedBialgebra) -> MagnumVerdict {
    let ideal = ideal_power(bialg, 2);
    let wedge = wedge_power(bialg, 2);
    MagnumVerdict {
        ideal_square_is_ceiling: ideal.equals(&bialg.ceiling(2)),
        wedge_square_is_floor: wedge.equals(&bialg.floor(2)),
    }
}

/// Truncated verdicts for the monomorphism/epimorphism equivalences.
///
/// The coalgebra side tests: every Δ_{i,j} mono; every Δ_{a,1} mono; ψ_n
/// mono for n <= N; wedge_power(n) = floor(n) for n <= N. The algebra side
/// tests the four duals. Injectivity of the untruncated ψ itself is not
/// evaluable at finite truncation and is deliberately not reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceProbe {
    pub comult_all_mono: bool,
    pub comult_a1_mono: bool,
    pub psi_mono_upto_n: bool,
    pub wedge_powers_are_floors: bool,
    pub mult_all_epi: bool,
    pub mult_a1_epi: bool,
    pub phi_epi_upto_n: bool,
    pub ideal_powers_are_ceilings: bool,
}

impl EquivalenceProbe {
    /// All coalgebra-side verdicts agree and all algebra-side verdicts agree.
    pub fn consistent(&self) -> bool {
        let coalg = [
            self.comult_all_mono,
            self.comult_a1_mono,
            self.psi_mono_upto_n,
            self.wedge_powers_are_floors,
        ];
        let alg = [
            self.mult_all_epi,
            self.mult_a1_epi,
            self.phi_epi_upto_n,
            self.ideal_powers_are_ceilings,
        ];
        coalg.iter().all(|&v| v == coalg[0]) && alg.iter().all(|&v| v == alg[0])
    }

    pub fn coalgebra_side(&self) -> bool {
        self.comult_all_mono
    }

    pub fn algebra_side(&self) -> bool {
        self.mult_all_epi
    }
}

pub fn equivalence_probe(bialg: &TruncatedGradedBialgebra) -> EquivalenceProbe {
    let n = bialg.truncation();

    let comult_all_mono = check_strongly_graded(bialg, GradedSide::Coalgebra).passed();
    let comult_a1_mono = (0..n).all(|a| bialg.comult(a, 1).kernel_basis().cols() == 0);
    let psi_mono_upto_n =
        (0..=n).all(|d| psi_component(bialg, d).kernel_basis().cols() == 0);
    let wedge_powers_are_floors =
        (0..=n).all(|k| wedge_power(bialg, k).equals(&bialg.floor(k)));

    let mult_all_epi = check_strongly_graded(bialg, GradedSide::Algebra).passed();
    let mult_a1_epi = (0..n).all(|a| bialg.mult(a, 1).rank() == bialg.dim(a + 1));
    let phi_epi_upto_n = (0..=n).all(|d| phi_component(bialg, d).rank() == bialg.dim(d));
    let ideal_powers_are_ceilings =
        (1..=n.max(1)).all(|k| ideal_power(bialg, k).equals(&bialg.ceiling(k)));

    EquivalenceProbe {
        comult_all_mono,
        comult_a1_mono,
        psi_mono_upto_n,
        wedge_powers_are_floors,
        mult_all_epi,
        mult_a1_epi,
        phi_epi_upto_n,
        ideal_powers_are_ceilings,
    }
}
