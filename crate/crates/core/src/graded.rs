//! Degree-truncated graded objects and bigraded component families.
//!
//! Everything is stored componentwise: a truncated graded bialgebra holds the
//! families `m_{a,b}` and `Δ_{a,b}` for `a+b <= N` plus the degree-0 unit and
//! counit; block matrices over whole direct sums are never materialized. An
//! identity of the theory is checkable exactly when every composite in it
//! stays within total degree `<= N`, and the checkers enumerate exactly those
//! instances.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::braiding::BasedSpace;
use crate::matrix::{Matrix, MatrixError};
use crate::perm::compositions;
use crate::scalar::FieldSpec;

/// Degrees 0..=N, each with an explicit (possibly zero-dimensional) basis.
#[derive(Clone, Debug)]
pub struct GradedSpace {
    components: Vec<BasedSpace>,
}

impl GradedSpace {
    pub fn new(components: Vec<BasedSpace>) -> GradedSpace {
        assert!(!components.is_empty(), "degree 0 must be present");
        let field = components[0].field();
        assert!(components.iter().all(|c| c.field() == field));
        GradedSpace { components }
    }

    pub fn from_dims(dims: &[usize], field: FieldSpec) -> GradedSpace {
        GradedSpace::new(
            dims.iter()
                .map(|&d| BasedSpace::with_default_labels(d, field))
                .collect(),
        )
    }

    pub fn truncation(&self) -> usize {
        self.components.len() - 1
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.components[degree].dim()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dim()).collect()
    }

    pub fn component(&self, degree: usize) -> &BasedSpace {
        &self.components[degree]
    }

    pub fn field(&self) -> FieldSpec {
        self.components[0].field()
    }
}

/// A graded homomorphism: one matrix per degree.
#[derive(Clone, Debug)]
pub struct GradedMap {
    domain: GradedSpace,
    codomain: GradedSpace,
    components: Vec<Matrix>,
}

impl GradedMap {
    pub fn new(domain: GradedSpace, codomain: GradedSpace, components: Vec<Matrix>) -> GradedMap {
        let n = core::cmp::min(domain.truncation(), codomain.truncation());
        assert_eq!(components.len(), n + 1, "one component per degree 0..=N");
        for (d, f) in components.iter().enumerate() {
            assert_eq!(f.rows(), codomain.dim(d), "component {d} rows");
            assert_eq!(f.cols(), domain.dim(d), "component {d} cols");
        }
        GradedMap {
            domain,
            codomain,
            components,
        }
    }

    pub fn domain(&self) -> &GradedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &GradedSpace {
        &self.codomain
    }

    pub fn truncation(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, degree: usize) -> &Matrix {
        &self.components[degree]
    }
}

/// Component families of a graded braided bialgebra, truncated at degree N.
///
/// `braid[(a, b)]` is the categorical braiding `c_{X_a, X_b}` of the ambient
/// instantiation, used by the compatibility checker; for constructions in
/// plain vector spaces it is the flip, for tensor algebras over a braided
/// space it is the block lift of the braiding.
#[derive(Clone, Debug)]
pub struct TruncatedGradedBialgebra {
    space: GradedSpace,
    mult: BTreeMap<(usize, usize), Matrix>,
    comult: BTreeMap<(usize, usize), Matrix>,
    unit: Matrix,
    counit: Matrix,
    braid: BTreeMap<(usize, usize), Matrix>,
}

impl TruncatedGradedBialgebra {
    pub fn new(
        space: GradedSpace,
        mult: BTreeMap<(usize, usize), Matrix>,
        comult: BTreeMap<(usize, usize), Matrix>,
        unit: Matrix,
        counit: Matrix,
        braid: BTreeMap<(usize, usize), Matrix>,
    ) -> TruncatedGradedBialgebra {
        let n = space.truncation();
        for a in 0..=n {
            for b in 0..=n - a {
                let m = mult.get(&(a, b)).expect("missing mult component");
                assert_eq!((m.rows(), m.cols()), (space.dim(a + b), space.dim(a) * space.dim(b)), "m_{{{a},{b}}} shape");
                let d = comult.get(&(a, b)).expect("missing comult component");
                assert_eq!((d.rows(), d.cols()), (space.dim(a) * space.dim(b), space.dim(a + b)), "delta_{{{a},{b}}} shape");
                let c = braid.get(&(a, b)).expect("missing braid component");
                assert_eq!((c.rows(), c.cols()), (space.dim(b) * space.dim(a), space.dim(a) * space.dim(b)), "braid_{{{a},{b}}} shape");
            }
        }
        assert_eq!((unit.rows(), unit.cols()), (space.dim(0), 1));
        assert_eq!((counit.rows(), counit.cols()), (1, space.dim(0)));
        TruncatedGradedBialgebra {
            space,
            mult,
            comult,
            unit,
            counit,
            braid,
        }
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn truncation(&self) -> usize {
        self.space.truncation()
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.space.dim(degree)
    }

    pub fn field(&self) -> FieldSpec {
        self.space.field()
    }

    pub fn mult(&self, a: usize, b: usize) -> &Matrix {
        &self.mult[&(a, b)]
    }

    pub fn comult(&self, a: usize, b: usize) -> &Matrix {
        &self.comult[&(a, b)]
    }

    pub fn braid(&self, a: usize, b: usize) -> &Matrix {
        &self.braid[&(a, b)]
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn set_comult(&mut self, a: usize, b: usize, m: Matrix) {
        self.comult.insert((a, b), m);
    }

    pub fn set_mult(&mut self, a: usize, b: usize, m: Matrix) {
        self.mult.insert((a, b), m);
    }

    pub fn set_braid(&mut self, a: usize, b: usize, m: Matrix) {
        self.braid.insert((a, b), m);
    }

    fn identity_on(&self, degree: usize) -> Matrix {
        Matrix::identity(self.dim(degree), self.field())
    }

    /// Left-nested iterated comultiplication component
    /// `C_{a_1+..+a_k} -> C_{a_1} ⊗ ... ⊗ C_{a_k}` (k >= 1).
    pub fn iterated_comult(&self, parts: &[usize]) -> Matrix {
        assert!(!parts.is_empty());
        let total: usize = parts.iter().sum();
        if parts.len() == 1 {
            return self.identity_on(total);
        }
        let merged: Vec<usize> = core::iter::once(parts[0] + parts[1])
            .chain(parts[2..].iter().copied())
            .collect();
        let inner = self.iterated_comult(&merged);
        let mut head = self.comult(parts[0], parts[1]).clone();
        for &p in &parts[2..] {
            head = head.kronecker(&self.identity_on(p));
        }
        head.mul(&inner)
    }

    /// Left-nested iterated multiplication component
    /// `C_{a_1} ⊗ ... ⊗ C_{a_k} -> C_{a_1+..+a_k}` (k >= 1).
    pub fn iterated_mult(&self, parts: &[usize]) -> Matrix {
        assert!(!parts.is_empty());
        let total: usize = parts.iter().sum();
        if parts.len() == 1 {
            return self.identity_on(total);
        }
        let merged: Vec<usize> = parts[..parts.len() - 1].to_vec();
        let prefix: usize = merged.iter().sum();
        let last = parts[parts.len() - 1];
        let inner = self.iterated_mult(&merged).kronecker(&self.identity_on(last));
        self.mult(prefix, last).mul(&inner)
    }

    /// The subspace `⊕_{d < n} C_d` within truncation.
    pub fn floor(&self, n: usize) -> GradedSubspace {
        GradedSubspace::from_predicate(&self.space, |d| d < n)
    }

    /// The subspace `⊕_{d >= n} C_d` within truncation.
    pub fn ceiling(&self, n: usize) -> GradedSubspace {
        GradedSubspace::from_predicate(&self.space, |d| d >= n)
    }
}

/// A degree-filtered subobject: a column-span basis per degree.
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    bases: Vec<Matrix>,
}

impl GradedSubspace {
    pub fn new(bases: Vec<Matrix>) -> GradedSubspace {
        GradedSubspace { bases }
    }

    fn from_predicate(space: &GradedSpace, full: impl Fn(usize) -> bool) -> GradedSubspace {
        let field = space.field();
        let bases = (0..=space.truncation())
            .map(|d| {
                if full(d) {
                    Matrix::identity(space.dim(d), field)
                } else {
                    Matrix::zeros(space.dim(d), 0, field)
                }
            })
            .collect();
        GradedSubspace { bases }
    }

    pub fn basis(&self, degree: usize) -> &Matrix {
        &self.bases[degree]
    }

    pub fn truncation(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.cols()).collect()
    }

    /// Exact subspace equality, degree by degree.
    pub fn equals(&self, other: &GradedSubspace) -> bool {
        self.bases.len() == other.bases.len()
            && self
                .bases
                .iter()
                .zip(&other.bases)
                .all(|(a, b)| a.same_span(b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub indices: Vec<usize>,
    /// Entry of the residual matrix witnessing the failure. For rank-based
    /// checks this carries `(achieved, required)` instead.
    pub residual_entry: (usize, usize),
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    fn new(check: &str) -> CheckReport {
        CheckReport {
            check: String::from(check),
            instances: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, indices: &[usize], residual: Option<(usize, usize)>) {
        self.instances += 1;
        if let Some(residual_entry) = residual {
            self.failures.push(Failure {
                indices: indices.to_vec(),
                residual_entry,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradedSide {
    Coalgebra,
    Algebra,
}

/// Componentwise coassociativity and counit laws.
pub fn check_graded_coalgebra_axioms(b: &TruncatedGradedBialgebra) -> Vec<CheckReport> {
    let n = b.truncation();
    let mut loc_delta = CheckReport::new("locDelta");
    for a in 0..=n {
        for bb in 0..=n - a {
            for c in 0..=n - a - bb {
                let lhs = b
                    .comult(a, bb)
                    .kronecker(&b.identity_on(c))
                    .mul(b.comult(a + bb, c));
                let rhs = b
                    .identity_on(a)
                    .kronecker(b.comult(bb, c))
                    .mul(b.comult(a, bb + c));
                loc_delta.record(&[a, bb, c], lhs.sub(&rhs).first_nonzero());
            }
        }
    }
    let mut loc_eps = CheckReport::new("locEps");
    for d in 0..=n {
        let id = b.identity_on(d);
        let right = id.kronecker(b.counit()).mul(b.comult(d, 0));
        loc_eps.record(&[d, 0], right.sub(&id).first_nonzero());
        let left = b.counit().kronecker(&id).mul(b.comult(0, d));
        loc_eps.record(&[d, 1], left.sub(&id).first_nonzero());
    }
    alloc::vec![loc_delta, loc_eps]
}

/// Componentwise associativity and unit laws.
pub fn check_graded_algebra_axioms(b: &TruncatedGradedBialgebra) -> Vec<CheckReport> {
    let n = b.truncation();
    let mut loc_multi = CheckReport::new("locMulti");
    for a in 0..=n {
        for bb in 0..=n - a {
            for c in 0..=n - a - bb {
                let lhs = b
                    .mult(a + bb, c)
                    .mul(&b.mult(a, bb).kronecker(&b.identity_on(c)));
                let rhs = b
                    .mult(a, bb + c)
                    .mul(&b.identity_on(a).kronecker(b.mult(bb, c)));
                loc_multi.record(&[a, bb, c], lhs.sub(&rhs).first_nonzero());
            }
        }
    }
    let mut loc_unit = CheckReport::new("locUnit");
    for d in 0..=n {
        let id = b.identity_on(d);
        let right = b.mult(d, 0).mul(&id.kronecker(b.unit()));
        loc_unit.record(&[d, 0], right.sub(&id).first_nonzero());
        let left = b.mult(0, d).mul(&b.unit().kronecker(&id));
        loc_unit.record(&[d, 1], left.sub(&id).first_nonzero());
    }
    alloc::vec![loc_multi, loc_unit]
}

/// Componentwise braided-bialgebra compatibility: for every `a+b = s+t <= N`
/// the two composites `C_a ⊗ C_b -> C_s ⊗ C_t` agree, where the right-hand
/// side sums over internal splittings through the stored braidings. The
/// degree-0 unit/counit compatibilities are the two non-vacuous instances of
/// the remaining bialgebra laws.
pub fn check_bialgebra_compat(b: &TruncatedGradedBialgebra) -> Vec<CheckReport> {
    let n = b.truncation();
    let mut compat = CheckReport::new("braidedCompat");
    for total in 0..=n {
        for a in 0..=total {
            let bb = total - a;
            for s in 0..=total {
                let t = total - s;
                let lhs = b.comult(s, t).mul(b.mult(a, bb));
                let mut rhs =
                    Matrix::zeros(b.dim(s) * b.dim(t), b.dim(a) * b.dim(bb), b.field());
                for i in 0..=core::cmp::min(a, s) {
                    let j = a - i;
                    let u = s - i;
                    if u > bb {
                        continue;
                    }
                    let v = bb - u;
                    if j + v != t {
                        continue;
                    }
                    let term = b
                        .mult(i, u)
                        .kronecker(b.mult(j, v))
                        .mul(&b.identity_on(i).kronecker(b.braid(j, u)).kronecker(&b.identity_on(v)))
                        .mul(&b.comult(i, j).kronecker(b.comult(u, v)));
                    rhs = rhs.add(&term);
                }
                compat.record(&[a, bb, s, t], lhs.sub(&rhs).first_nonzero());
            }
        }
    }
    let mut counit_mult = CheckReport::new("counitMult");
    let lhs = b.counit().mul(b.mult(0, 0));
    let rhs = b.counit().kronecker(b.counit());
    counit_mult.record(&[0, 0], lhs.sub(&rhs).first_nonzero());
    let mut unit_comult = CheckReport::new("unitComult");
    let lhs = b.comult(0, 0).mul(b.unit());
    let rhs = b.unit().kronecker(b.unit());
    unit_comult.record(&[0, 0], lhs.sub(&rhs).first_nonzero());
    alloc::vec![compat, counit_mult, unit_comult]
}

/// Injectivity of every `Δ_{i,j}` (coalgebra side) or surjectivity of every
/// `m_{i,j}` (algebra side). Failures carry `(achieved, required)` ranks.
pub fn check_strongly_graded(b: &TruncatedGradedBialgebra, side: GradedSide) -> CheckReport {
    let n = b.truncation();
    let name = match side {
        GradedSide::Coalgebra => "stronglyGradedCoalgebra",
        GradedSide::Algebra => "stronglyGradedAlgebra",
    };
    let mut report = CheckReport::new(name);
    for i in 0..=n {
        for j in 0..=n - i {
            let residual = match side {
                GradedSide::Coalgebra => {
                    let rank = b.comult(i, j).rank();
                    let required = b.dim(i + j);
                    (rank != required).then_some((rank, required))
                }
                GradedSide::Algebra => {
                    let rank = b.mult(i, j).rank();
                    let required = b.dim(i + j);
                    (rank != required).then_some((rank, required))
                }
            };
            report.record(&[i, j], residual);
        }
    }
    report
}

/// Wedge product of two degree-filtered subobjects:
/// `X ∧ Y = Ker[(p_X ⊗ p_Y) ∘ Δ]`, computed degreewise. Quotients are
/// realized by completing each subspace basis (deterministic pivot order)
/// and projecting onto the complementary coordinates.
pub fn wedge(
    b: &TruncatedGradedBialgebra,
    x: &GradedSubspace,
    y: &GradedSubspace,
) -> Result<GradedSubspace, MatrixError> {
    let n = b.truncation();
    let proj_x: Vec<Matrix> = (0..=n)
        .map(|d| x.basis(d).quotient_projection())
        .collect::<Result<_, _>>()?;
    let proj_y: Vec<Matrix> = (0..=n)
        .map(|d| y.basis(d).quotient_projection())
        .collect::<Result<_, _>>()?;
    let mut bases = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let mut stacked: Option<Matrix> = None;
        for a in 0..=d {
            let bb = d - a;
            let block = proj_x[a].kronecker(&proj_y[bb]).mul(b.comult(a, bb));
            if block.rows() == 0 {
                continue;
            }
            stacked = Some(match stacked {
                None => block,
                Some(s) => s.vstack(&block),
            });
        }
        let basis = match stacked {
            None => Matrix::identity(b.dim(d), b.field()),
            Some(m) => m.kernel_basis(),
        };
        bases.push(basis);
    }
    Ok(GradedSubspace::new(bases))
}

/// Iterated wedge power of the degree-0 part:
/// `C_0^{∧n} = Ker(p^{⊗n} ∘ Δ^{n-1})` with `p` the projection killing
/// degree 0; `n = 0` gives the zero subobject, `n = 1` gives `C_0`.
pub fn wedge_power(b: &TruncatedGradedBialgebra, n: usize) -> GradedSubspace {
    let nn = b.truncation();
    if n == 0 {
        return GradedSubspace::from_predicate(b.space(), |_| false);
    }
    let mut bases = Vec::with_capacity(nn + 1);
    for d in 0..=nn {
        let mut stacked: Option<Matrix> = None;
        for parts in compositions(d, n, 1) {
            let block = b.iterated_comult(&parts);
            if block.rows() == 0 {
                continue;
            }
            stacked = Some(match stacked {
                None => block,
                Some(s) => s.vstack(&block),
            });
        }
        let basis = match stacked {
            None => Matrix::identity(b.dim(d), b.field()),
            Some(m) => m.kernel_basis(),
        };
        bases.push(basis);
    }
    GradedSubspace::new(bases)
}

/// n-th power of the positive-degree ideal: degreewise the span of all
/// m-composites with exactly n factors of positive degree.
pub fn ideal_power(b: &TruncatedGradedBialgebra, n: usize) -> GradedSubspace {
    assert!(n >= 1, "ideal powers start at n = 1");
    let nn = b.truncation();
    let mut bases = Vec::with_capacity(nn + 1);
    for d in 0..=nn {
        let mut columns: Option<Matrix> = None;
        for parts in compositions(d, n, 1) {
            let block = b.iterated_mult(&parts);
            columns = Some(match columns {
                None => block,
                Some(s) => s.hstack(&block),
            });
        }
        let basis = match columns {
            None => Matrix::zeros(b.dim(d), 0, b.field()),
            Some(m) => m.image_basis(),
        };
        bases.push(basis);
    }
    GradedSubspace::new(bases)
}

#[derive(Clone, Debug)]
pub enum ImageError {
    /// `f` fails one of the componentwise homomorphism laws; carries the law
    /// name, the component indices and the residual entry.
    NotGradedBialgebraMorphism {
        law: &'static str,
        indices: (usize, usize),
        residual: (usize, usize),
    },
    Matrix(MatrixError),
}

impl fmt::Display for ImageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImageError::NotGradedBialgebraMorphism {
                law,
                indices,
                residual,
            } => write!(
                f,
                "not a graded bialgebra morphism: {law} fails at ({}, {}) with residual entry ({}, {})",
                indices.0, indices.1, residual.0, residual.1
            ),
            ImageError::Matrix(e) => write!(f, "{e}"),
        }
    }
}

impl From<MatrixError> for ImageError {
    fn from(e: MatrixError) -> Self {
        ImageError::Matrix(e)
    }
}

/// The image of a graded bialgebra homomorphism, as a bialgebra.
#[derive(Clone, Debug)]
pub struct ImageBialgebra {
    pub bialgebra: TruncatedGradedBialgebra,
    /// Inclusion `Im(f_n) -> B_n` per degree (pivot columns of `f_n`).
    pub inclusions: Vec<Matrix>,
}

/// Endows `Im(f)` with its unique graded braided bialgebra structure. The
/// map must intertwine the component families of `domain` and `codomain`;
/// that is checked first and violated equations are reported.
pub fn image_bialgebra(
    f: &GradedMap,
    domain: &TruncatedGradedBialgebra,
    codomain: &TruncatedGradedBialgebra,
) -> Result<ImageBialgebra, ImageError> {
    let n = f.truncation();
    assert_eq!(n, domain.truncation());
    assert_eq!(n, codomain.truncation());
    for a in 0..=n {
        for b in 0..=n - a {
            let lhs = f.component(a + b).mul(domain.mult(a, b));
            let rhs = codomain
                .mult(a, b)
                .mul(&f.component(a).kronecker(f.component(b)));
            if let Some(residual) = lhs.sub(&rhs).first_nonzero() {
                return Err(ImageError::NotGradedBialgebraMorphism {
                    law: "mult",
                    indices: (a, b),
                    residual,
                });
            }
            let lhs = codomain.comult(a, b).mul(f.component(a + b));
            let rhs = f
                .component(a)
                .kronecker(f.component(b))
                .mul(domain.comult(a, b));
            if let Some(residual) = lhs.sub(&rhs).first_nonzero() {
                return Err(ImageError::NotGradedBialgebraMorphism {
                    law: "comult",
                    indices: (a, b),
                    residual,
                });
            }
        }
    }
    if let Some(residual) = f
        .component(0)
        .mul(domain.unit())
        .sub(codomain.unit())
        .first_nonzero()
    {
        return Err(ImageError::NotGradedBialgebraMorphism {
            law: "unit",
            indices: (0, 0),
            residual,
        });
    }
    if let Some(residual) = codomain
        .counit()
        .mul(f.component(0))
        .sub(domain.counit())
        .first_nonzero()
    {
        return Err(ImageError::NotGradedBialgebraMorphism {
            law: "counit",
            indices: (0, 0),
            residual,
        });
    }

    let field = f.codomain().field();
    let inclusions: Vec<Matrix> = (0..=n).map(|d| f.component(d).image_basis()).collect();
    let dims: Vec<usize> = inclusions.iter().map(|m| m.cols()).collect();
    let space = GradedSpace::from_dims(&dims, field);

    let mut mult = BTreeMap::new();
    let mut comult = BTreeMap::new();
    let mut braid = BTreeMap::new();
    for a in 0..=n {
        for b in 0..=n - a {
            let pair = inclusions[a].kronecker(&inclusions[b]);
            let m = inclusions[a + b].solve(&codomain.mult(a, b).mul(&pair))?;
            mult.insert((a, b), m);
            let d = pair.solve(&codomain.comult(a, b).mul(&inclusions[a + b]))?;
            comult.insert((a, b), d);
            let swapped = inclusions[b].kronecker(&inclusions[a]);
            let c = swapped.solve(&codomain.braid(a, b).mul(&pair))?;
            braid.insert((a, b), c);
        }
    }
    let unit = inclusions[0].solve(codomain.unit())?;
    let counit = codomain.counit().mul(&inclusions[0]);

    Ok(ImageBialgebra {
        bialgebra: TruncatedGradedBialgebra::new(space, mult, comult, unit, counit, braid),
        inclusions,
    })
}
