//! Input file schemas: braiding specs, Yetter-Drinfeld specs, bialgebra
//! fixtures, and evaluation environments. Scalars are decimal strings
//! ("a/b" or an integer; prime-field residues as integers) or plain JSON
//! integers.

use std::collections::BTreeMap;

use serde::Deserialize;

use braided_forge_core::braiding::{BasedSpace, Braiding};
use braided_forge_core::graded::{GradedSpace, TruncatedGradedBialgebra};
use braided_forge_core::hopf::{GroupTable, YDModule};
use braided_forge_core::matrix::{flip_matrix, Matrix};
use braided_forge_core::scalar::{FieldSpec, Scalar};

use crate::CliError;

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldJson {
    Rational,
    Prime { p: u32 },
}

impl FieldJson {
    pub fn to_field(&self) -> Result<FieldSpec, CliError> {
        match self {
            FieldJson::Rational => Ok(FieldSpec::Rational),
            FieldJson::Prime { p } => FieldSpec::prime(*p)
                .map_err(|e| CliError::Input(format!("field: {e}"))),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum EntryJson {
    Int(i64),
    Str(String),
}

impl EntryJson {
    fn to_scalar(&self, field: FieldSpec) -> Result<Scalar, CliError> {
        match self {
            EntryJson::Int(v) => Ok(field.from_i64(*v)),
            EntryJson::Str(s) => field
                .parse(s)
                .map_err(|e| CliError::Input(format!("scalar {s:?}: {e}"))),
        }
    }
}

pub fn matrix_from_rows(
    rows: &[Vec<EntryJson>],
    expected: (usize, usize),
    field: FieldSpec,
    what: &str,
) -> Result<Matrix, CliError> {
    if rows.len() != expected.0 || rows.iter().any(|r| r.len() != expected.1) {
        return Err(CliError::Input(format!(
            "{what}: expected a {}x{} matrix",
            expected.0, expected.1
        )));
    }
    let mut m = Matrix::zeros(expected.0, expected.1, field);
    for (i, row) in rows.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            m.set(i, j, e.to_scalar(field)?);
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub dim: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn to_table(&self) -> Result<GroupTable, CliError> {
        if self.table.len() != self.order
            || self
                .table
                .iter()
                .any(|row| row.len() != self.order || row.iter().any(|&v| v >= self.order))
        {
            return Err(CliError::Input(format!(
                "group table must be {0}x{0} over 0..{0}",
                self.order
            )));
        }
        GroupTable::new(self.table.clone()).map_err(|e| CliError::Math(format!("{e}")))
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum BraidingJson {
    Diagonal {
        q: Vec<Vec<EntryJson>>,
    },
    Matrix {
        entries: Vec<Vec<EntryJson>>,
    },
    Yd {
        group: GroupJson,
        degrees: Vec<usize>,
        action: Vec<Vec<Vec<EntryJson>>>,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraJson {
    pub dims: Vec<usize>,
    pub mult: BTreeMap<String, Vec<Vec<EntryJson>>>,
    pub comult: BTreeMap<String, Vec<Vec<EntryJson>>>,
    pub unit: Vec<Vec<EntryJson>>,
    pub counit: Vec<Vec<EntryJson>>,
    #[serde(default)]
    pub braid: Option<BTreeMap<String, Vec<Vec<EntryJson>>>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub field: FieldJson,
    #[serde(default)]
    pub space: Option<SpaceJson>,
    #[serde(default)]
    pub braiding: Option<BraidingJson>,
    #[serde(default)]
    pub bialgebra: Option<BialgebraJson>,
}

/// A fully validated input: either a braiding (possibly of Yetter-Drinfeld
/// origin) or an explicit truncated graded bialgebra.
pub enum LoadedSpec {
    Braided {
        braiding: Braiding,
        yd: Option<YDModule>,
    },
    Bialgebra(TruncatedGradedBialgebra),
}

pub fn load_spec(path: &str, field_override: Option<FieldSpec>) -> Result<LoadedSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
    let parsed: InputSpec = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("cannot parse {path}: {e}")))?;
    let field = match field_override {
        Some(f) => f,
        None => parsed.field.to_field()?,
    };
    match (&parsed.braiding, &parsed.bialgebra) {
        (Some(braiding), None) => load_braiding(&parsed, braiding, field),
        (None, Some(bialgebra)) => Ok(LoadedSpec::Bialgebra(load_bialgebra(bialgebra, field)?)),
        _ => Err(CliError::Input(String::from(
            "spec must contain exactly one of \"braiding\" or \"bialgebra\"",
        ))),
    }
}

fn based_space(
    space: &Option<SpaceJson>,
    dim: usize,
    field: FieldSpec,
) -> Result<BasedSpace, CliError> {
    match space {
        None => Ok(BasedSpace::with_default_labels(dim, field)),
        Some(s) => {
            if s.dim != dim {
                return Err(CliError::Input(format!(
                    "space.dim = {} does not match the braiding data (dim {dim})",
                    s.dim
                )));
            }
            match &s.labels {
                None => Ok(BasedSpace::with_default_labels(dim, field)),
                Some(labels) => BasedSpace::new(labels.clone(), field)
                    .map_err(|e| CliError::Input(format!("{e}"))),
            }
        }
    }
}

fn load_braiding(
    spec: &InputSpec,
    braiding: &BraidingJson,
    field: FieldSpec,
) -> Result<LoadedSpec, CliError> {
    match braiding {
        BraidingJson::Diagonal { q } => {
            let dim = q.len();
            let qm = matrix_from_rows(q, (dim, dim), field, "braiding.q")?;
            let space = based_space(&spec.space, dim, field)?;
            let b = Braiding::from_diagonal(&qm, space)
                .map_err(|e| CliError::Math(format!("{e}")))?;
            Ok(LoadedSpec::Braided { braiding: b, yd: None })
        }
        BraidingJson::Matrix { entries } => {
            let space_dim = match &spec.space {
                Some(s) => s.dim,
                None => {
                    let n = entries.len();
                    let dim = (1..).find(|d| d * d >= n).unwrap_or(1);
                    if dim * dim != n {
                        return Err(CliError::Input(String::from(
                            "matrix braiding needs a square dim² size (or an explicit space)",
                        )));
                    }
                    dim
                }
            };
            let d2 = space_dim * space_dim;
            let m = matrix_from_rows(entries, (d2, d2), field, "braiding.entries")?;
            let space = based_space(&spec.space, space_dim, field)?;
            let b = Braiding::from_matrix(m, space)
                .map_err(|e| CliError::Math(format!("{e}")))?;
            Ok(LoadedSpec::Braided { braiding: b, yd: None })
        }
        BraidingJson::Yd {
            group,
            degrees,
            action,
        } => {
            let table = group.to_table()?;
            let dim = degrees.len();
            if degrees.iter().any(|&d| d >= table.order()) {
                return Err(CliError::Input(String::from(
                    "yd degrees must index group elements",
                )));
            }
            if action.len() != table.order() {
                return Err(CliError::Input(String::from(
                    "yd action must give one matrix per group element",
                )));
            }
            let mats: Vec<Matrix> = action
                .iter()
                .enumerate()
                .map(|(g, rows)| matrix_from_rows(rows, (dim, dim), field, &format!("action[{g}]")))
                .collect::<Result<_, _>>()?;
            let module = YDModule::over_group(&table, field, degrees, &mats)
                .map_err(|e| CliError::Math(format!("{e}")))?;
            let reports = braided_forge_core::hopf::check_yd(&module);
            if let Some(bad) = reports.iter().find(|r| !r.passed()) {
                return Err(CliError::Math(format!(
                    "Yetter-Drinfeld validation fails: {} at residual {:?}",
                    bad.check, bad.failures[0].residual_entry
                )));
            }
            let b = module
                .braiding()
                .map_err(|e| CliError::Math(format!("{e}")))?;
            Ok(LoadedSpec::Braided {
                braiding: b,
                yd: Some(module),
            })
        }
    }
}


fn load_bialgebra(
    spec: &BialgebraJson,
    field: FieldSpec,
) -> Result<TruncatedGradedBialgebra, CliError> {
    if spec.dims.is_empty() {
        return Err(CliError::Input(String::from("bialgebra.dims is empty")));
    }
    let n = spec.dims.len() - 1;
    let dim = |d: usize| spec.dims[d];
    let mut mult = BTreeMap::new();
    let mut comult = BTreeMap::new();
    let mut braid = BTreeMap::new();
    for a in 0..=n {
        for b in 0..=n - a {
            let key = format!("{a},{b}");
            let rows = spec
                .mult
                .get(&key)
                .ok_or_else(|| CliError::Input(format!("missing mult[{key:?}]")))?;
            mult.insert(
                (a, b),
                matrix_from_rows(rows, (dim(a + b), dim(a) * dim(b)), field, &format!("mult[{key}]"))?,
            );
            let rows = spec
                .comult
                .get(&key)
                .ok_or_else(|| CliError::Input(format!("missing comult[{key:?}]")))?;
            comult.insert(
                (a, b),
                matrix_from_rows(rows, (dim(a) * dim(b), dim(a + b)), field, &format!("comult[{key}]"))?,
            );
            let braid_m = match spec.braid.as_ref().and_then(|m| m.get(&key)) {
                Some(rows) => matrix_from_rows(
                    rows,
                    (dim(b) * dim(a), dim(a) * dim(b)),
                    field,
                    &format!("braid[{key}]"),
                )?,
                None => flip_matrix(dim(a), dim(b), field),
            };
            braid.insert((a, b), braid_m);
        }
    }
    let unit = matrix_from_rows(&spec.unit, (dim(0), 1), field, "unit")?;
    let counit = matrix_from_rows(&spec.counit, (1, dim(0)), field, "counit")?;
    let space = GradedSpace::from_dims(&spec.dims, field);
    Ok(TruncatedGradedBialgebra::new(
        space, mult, comult, unit, counit, braid,
    ))
}

// ---------------------------------------------------------------------------
// evaluation environments for `eval`

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvJson {
    pub field: FieldJson,
    #[serde(default)]
    pub generators: BTreeMap<String, Vec<Vec<EntryJson>>>,
    /// Bind any unbound generator named `c[X,Y]`/`cinv[X,Y]` to the flip.
    #[serde(default)]
    pub auto_flips: bool,
}

pub fn load_env(
    path: &str,
    sig: &braided_forge_core::dsl::Signature,
) -> Result<braided_forge_core::dsl::Environment, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
    let parsed: EnvJson = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("cannot parse {path}: {e}")))?;
    let field = parsed.field.to_field()?;
    let mut env = braided_forge_core::dsl::Environment::new(field);
    for (name, rows) in &parsed.generators {
        let gs = sig.generators.get(name).ok_or_else(|| {
            CliError::Input(format!("env binds {name:?} which is not in the signature"))
        })?;
        let expected = (sig.word_dim(&gs.codomain), sig.word_dim(&gs.domain));
        env.bind(name, matrix_from_rows(rows, expected, field, name)?);
    }
    if parsed.auto_flips {
        env.bind_flips(sig);
    }
    Ok(env)
}
