//! Text and JSON interchange: algebra references, quiver files, module,
//! bimodule and witness documents.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::quiver::{algebra_from_quiver, QuiverPresentation};
use crate::algebra::{Algebra, Vector};
use crate::bimodule::Bimodule;
use crate::catalog::{self, CatalogRef, Entry};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::jorder::JWitnessPair;
use crate::matrix::Matrix;
use crate::module::{Module, Rep};

/// A row-major matrix with integer entries as JSON numbers and everything
/// else as strings.
pub type MatrixDoc = Vec<Vec<Value>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleActions {
    #[serde(default)]
    pub left: BTreeMap<String, MatrixDoc>,
    #[serde(default)]
    pub right: BTreeMap<String, MatrixDoc>,
}

/// An `A`-`B`-bimodule. `action.left[label]` is the matrix of `m -> a m`
/// and `action.right[label]` that of `m -> m b`, both acting on column
/// vectors. Either every basis label of an algebra is listed, or the
/// listed labels must generate it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDoc {
    pub left_algebra_ref: String,
    pub right_algebra_ref: String,
    pub dim: usize,
    pub action: BimoduleActions,
}

/// A left module with the same conventions as [`BimoduleDoc`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub algebra_ref: String,
    pub dim: usize,
    pub action: BTreeMap<String, MatrixDoc>,
}

/// A proposed witness `(M, N)` for `A >= B`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub m: BimoduleDoc,
    pub n: BimoduleDoc,
    #[serde(default)]
    pub seed: u64,
}

/// Any module-like document.
#[derive(Clone, Debug, PartialEq)]
pub enum Document {
    Module(ModuleDoc),
    Bimodule(BimoduleDoc),
    Witness(WitnessDoc),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(json_err)?;
        let has = |k: &str| v.get(k).is_some();
        let doc = if has("left_algebra_ref") {
            Document::Bimodule(serde_json::from_value(v).map_err(json_err)?)
        } else if has("algebra_ref") {
            Document::Module(serde_json::from_value(v).map_err(json_err)?)
        } else if has("m") && has("n") {
            Document::Witness(serde_json::from_value(v).map_err(json_err)?)
        } else {
            return Err(Error::Parse { line: 1, msg: "unrecognised document: expected a module, bimodule or witness".into() });
        };
        Ok(doc)
    }

    /// Algebra references mentioned by the document.
    pub fn algebra_refs(&self) -> Vec<&str> {
        match self {
            Document::Module(m) => vec![m.algebra_ref.as_str()],
            Document::Bimodule(b) => vec![b.left_algebra_ref.as_str(), b.right_algebra_ref.as_str()],
            Document::Witness(w) => vec![
                w.m.left_algebra_ref.as_str(),
                w.m.right_algebra_ref.as_str(),
                w.n.left_algebra_ref.as_str(),
                w.n.right_algebra_ref.as_str(),
            ],
        }
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), msg: e.to_string() }
}

/// Pretty JSON with sorted keys.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable value");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable value");
    s.push('\n');
    s
}

pub fn matrix_doc<F: Field>(m: &Matrix<F>) -> MatrixDoc {
    m.to_strings()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|s| match s.parse::<i64>() {
                    Ok(i) => Value::from(i),
                    Err(_) => Value::from(s),
                })
                .collect()
        })
        .collect()
}

pub fn parse_matrix_doc<F: Field>(f: &F, doc: &MatrixDoc, dim: usize) -> Result<Matrix<F>> {
    if doc.len() != dim {
        return Err(Error::DimensionMismatch(format!("matrix with {} rows (expected {dim})", doc.len())));
    }
    let rows = doc
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| match v {
                    Value::Number(n) => Ok(n.to_string()),
                    Value::String(s) => Ok(s.clone()),
                    other => Err(Error::InvalidInput(format!("matrix entry `{other}` is neither a number nor a string"))),
                })
                .collect::<Result<Vec<String>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_strings(f, &rows, dim)
}

/// The field recorded by a reference: the `field` line of a quiver file,
/// or the default characteristic of a catalog entry.
pub fn field_of_ref(r: &str, base: &Path) -> Result<FieldSpec> {
    if is_catalog_ref(r) {
        return Ok(FieldSpec::Prime(catalog::default_prime(&CatalogRef::parse(r)?)));
    }
    let text = read(&base.join(r))?;
    Ok(QuiverPresentation::parse(&text)?.field.unwrap_or(FieldSpec::Prime(catalog::DEFAULT_PRIME)))
}

/// The common field of several references. An explicit choice wins;
/// otherwise quiver files must agree and fix the field, and catalog
/// entries alone must agree on their default.
pub fn common_field(refs: &[&str], base: &Path, explicit: Option<FieldSpec>) -> Result<FieldSpec> {
    if let Some(f) = explicit {
        return Ok(f);
    }
    let pick = |catalog: bool| -> Result<Option<FieldSpec>> {
        let mut out: Option<FieldSpec> = None;
        for r in refs.iter().filter(|r| is_catalog_ref(r) == catalog) {
            let f = field_of_ref(r, base)?;
            match out {
                Some(g) if g != f => return Err(Error::FieldMismatch(g.to_string(), f.to_string())),
                _ => out = Some(f),
            }
        }
        Ok(out)
    };
    let files = pick(false)?;
    match files {
        Some(f) => Ok(f),
        None => Ok(pick(true)?.unwrap_or(FieldSpec::Prime(catalog::DEFAULT_PRIME))),
    }
}

pub fn is_catalog_ref(r: &str) -> bool {
    r.starts_with("catalog:")
}

pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

/// Resolves algebra references over a fixed field; file references are
/// relative to `base`. Each reference resolves to a single shared algebra.
pub struct Resolver<F: Field> {
    field: F,
    base: PathBuf,
    cache: HashMap<String, Arc<Algebra<F>>>,
}

impl<F: Field> Resolver<F> {
    pub fn new(field: F, base: impl Into<PathBuf>) -> Self {
        Resolver { field, base: base.into(), cache: HashMap::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn algebra(&mut self, r: &str) -> Result<Arc<Algebra<F>>> {
        if let Some(a) = self.cache.get(r) {
            return Ok(a.clone());
        }
        let a = if is_catalog_ref(r) {
            catalog::build(&self.field, &CatalogRef::parse(r)?)?.algebra().clone()
        } else {
            let q = QuiverPresentation::parse(&read(&self.base.join(r))?)?;
            Arc::new(algebra_from_quiver(&self.field, &q)?.with_provenance(r))
        };
        self.cache.insert(r.to_string(), a.clone());
        Ok(a)
    }

    /// A catalog entry, reusing cached algebras for its references.
    pub fn entry(&mut self, r: &str) -> Result<Entry<F>> {
        let e = catalog::build(&self.field, &CatalogRef::parse(r)?)?;
        if let Entry::Algebra(a) = &e {
            self.cache.insert(r.to_string(), a.clone());
        }
        Ok(e)
    }

    pub fn module(&mut self, doc: &ModuleDoc) -> Result<Module<F>> {
        let a = self.algebra(&doc.algebra_ref)?;
        let acts = actions(&a, &doc.action, doc.dim)?;
        match acts {
            Actions::Full(ms) => Module::new(a, ms),
            Actions::Generators(gens) => Module::from_generator_actions(a, doc.dim, &gens),
        }
    }

    pub fn bimodule(&mut self, doc: &BimoduleDoc) -> Result<Bimodule<F>> {
        let a = self.algebra(&doc.left_algebra_ref)?;
        let b = self.algebra(&doc.right_algebra_ref)?;
        let left = actions(&a, &doc.action.left, doc.dim)?;
        let right = actions(&b, &doc.action.right, doc.dim)?;
        match (left, right) {
            (Actions::Full(l), Actions::Full(r)) => Bimodule::new(a, b, l, r),
            (l, r) => Bimodule::from_generator_actions(a.clone(), b.clone(), doc.dim, &l.into_gens(&a), &r.into_gens(&b)),
        }
    }

    pub fn witness(&mut self, doc: &WitnessDoc) -> Result<JWitnessPair<F>> {
        let m = self.bimodule(&doc.m)?;
        let n = self.bimodule(&doc.n)?;
        JWitnessPair::new(m, n, doc.seed)
    }
}

enum Actions<F: Field> {
    Full(Vec<Matrix<F>>),
    Generators(Vec<(Vector<F>, Matrix<F>)>),
}

impl<F: Field> Actions<F> {
    fn into_gens(self, a: &Algebra<F>) -> Vec<(Vector<F>, Matrix<F>)> {
        match self {
            Actions::Full(ms) => ms.into_iter().enumerate().map(|(i, m)| (a.basis(i), m)).collect(),
            Actions::Generators(g) => g,
        }
    }
}

fn actions<F: Field>(a: &Algebra<F>, map: &BTreeMap<String, MatrixDoc>, dim: usize) -> Result<Actions<F>> {
    let mut slots: Vec<Option<Matrix<F>>> = vec![None; a.dim()];
    for (label, m) in map {
        let i = a
            .label_index(label)
            .ok_or_else(|| Error::InvalidInput(format!("unknown basis label `{label}`")))?;
        slots[i] = Some(parse_matrix_doc(a.field(), m, dim)?);
    }
    if slots.iter().all(Option::is_some) {
        return Ok(Actions::Full(slots.into_iter().flatten().collect()));
    }
    Ok(Actions::Generators(
        slots.into_iter().enumerate().filter_map(|(i, m)| m.map(|m| (a.basis(i), m))).collect(),
    ))
}

pub fn module_doc<F: Field>(m: &Module<F>, algebra_ref: &str) -> ModuleDoc {
    let labels = m.algebra().labels();
    ModuleDoc {
        algebra_ref: algebra_ref.to_string(),
        dim: m.dim(),
        action: labels.iter().cloned().zip(m.actions().iter().map(matrix_doc)).collect(),
    }
}

pub fn bimodule_doc<F: Field>(m: &Bimodule<F>, left_ref: &str, right_ref: &str) -> BimoduleDoc {
    let side = |a: &Algebra<F>, ms: &[Matrix<F>]| a.labels().iter().cloned().zip(ms.iter().map(matrix_doc)).collect();
    BimoduleDoc {
        left_algebra_ref: left_ref.to_string(),
        right_algebra_ref: right_ref.to_string(),
        dim: m.dim(),
        action: BimoduleActions {
            left: side(m.left_algebra(), m.left_actions()),
            right: side(m.right_algebra(), m.right_actions()),
        },
    }
}

/// The witness document of a pair, with algebra references taken from the
/// algebras' provenance.
pub fn witness_doc<F: Field>(w: &JWitnessPair<F>) -> WitnessDoc {
    let (a, b) = (w.a.provenance(), w.b.provenance());
    WitnessDoc { m: bimodule_doc(&w.m, a, b), n: bimodule_doc(&w.n, b, a), seed: w.seed }
}
