//! Finite-dimensional associative unital algebras given by structure
//! constants in a fixed basis.

mod hom;
pub mod quiver;
pub mod radical;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

pub use hom::AlgebraHom;
pub use quiver::{QuiverInfo, QuiverPresentation};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, is_zero_vec, nullspace, unit_vec, Subspace};
use crate::matrix::Matrix;

/// Coordinate vector of an algebra element (or any vector over `F`).
pub type Vector<F> = Vec<<F as Field>::Elem>;

/// Sparse structure constants: entry `i * dim + j` lists the nonzero
/// coordinates of `b_i * b_j`.
pub type Table<F> = Vec<Vec<(usize, <F as Field>::Elem)>>;

/// Summary invariants used to compare algebras without deciding
/// isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    /// Dimensions of `rad^0 = A, rad^1, rad^2, ...` down to 0.
    pub radical_layers: Vec<usize>,
    pub simples: usize,
    pub loewy_length: usize,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {:?}, {}, {})",
            self.dim, self.radical_layers, self.simples, self.loewy_length
        )
    }
}

/// How the radical of an algebra was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum RadicalMethod {
    Structural,
    TraceForm,
    GeneralizedTrace,
}

#[derive(Clone)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    labels: Vec<String>,
    unit: Vector<F>,
    table: Table<F>,
    key: u64,
    provenance: String,
    quiver: Option<QuiverInfo>,
    radical: OnceLock<(Subspace<F>, RadicalMethod)>,
    idempotents: OnceLock<std::result::Result<Vec<Vector<F>>, Error>>,
    structural_idempotents: bool,
    generators: OnceLock<Vec<Vector<F>>>,
    left_mats: OnceLock<Vec<Matrix<F>>>,
    right_mats: OnceLock<Vec<Matrix<F>>>,
}

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}, {}, {})", self.dim, self.field.spec(), self.provenance)
    }
}

impl<F: Field> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
            && self.dim == other.dim
            && self.field == other.field
            && self.labels == other.labels
            && self.unit == other.unit
            && self.table == other.table
    }
}

impl<F: Field> Eq for Algebra<F> {}

fn table_key<F: Field>(labels: &[String], table: &Table<F>) -> u64 {
    let mut h = DefaultHasher::new();
    labels.hash(&mut h);
    table.hash(&mut h);
    h.finish()
}

/// Pointer equality, falling back to structural equality.
pub fn same_algebra<F: Field>(a: &Arc<Algebra<F>>, b: &Arc<Algebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<F: Field> Algebra<F> {
    /// Build from a sparse table, checking associativity and the unit.
    pub fn new(
        field: F,
        labels: Vec<String>,
        table: Table<F>,
        unit: Vector<F>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let a = Self::new_trusted(field, labels, table, unit, provenance)?;
        a.check_associative()?;
        Ok(a)
    }

    /// Build from a table known to be associative (e.g. from composition of
    /// matrices); only the unit is checked.
    pub(crate) fn new_trusted(
        field: F,
        labels: Vec<String>,
        table: Table<F>,
        unit: Vector<F>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidInput("algebra of dimension 0".into()));
        }
        if table.len() != dim * dim || unit.len() != dim {
            return Err(Error::DimensionMismatch("structure constant table".into()));
        }
        let table: Table<F> = table
            .into_iter()
            .map(|mut entries| {
                entries.retain(|(_, c)| !field.is_zero(c));
                entries.sort_by_key(|(k, _)| *k);
                entries
            })
            .collect();
        let key = table_key::<F>(&labels, &table);
        let a = Algebra {
            field,
            dim,
            labels,
            unit,
            table,
            key,
            provenance: provenance.into(),
            quiver: None,
            radical: OnceLock::new(),
            idempotents: OnceLock::new(),
            structural_idempotents: false,
            generators: OnceLock::new(),
            left_mats: OnceLock::new(),
            right_mats: OnceLock::new(),
        };
        a.check_unit()?;
        Ok(a)
    }

    /// Build from dense products: `products[i][j]` is the coordinate vector
    /// of `b_i * b_j`.
    pub fn from_dense(
        field: F,
        labels: Vec<String>,
        products: impl Fn(usize, usize) -> Vector<F>,
        unit: Vector<F>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = products(i, j);
                table.push(
                    v.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !field.is_zero(c))
                        .collect(),
                );
            }
        }
        Self::new(field, labels, table, unit, provenance)
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim {
            let b = self.basis(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::InvalidInput(format!(
                    "unit is not a two-sided identity on {}",
                    self.labels[i]
                )));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let f = &self.field;
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = &self.table[i * n + j];
                for k in 0..n {
                    let mut left = vec![f.zero(); n];
                    for (m, c) in ij {
                        for (t, d) in &self.table[m * n + k] {
                            f.add_mul_assign(&mut left[*t], c, d);
                        }
                    }
                    let mut right = vec![f.zero(); n];
                    for (m, c) in &self.table[j * n + k] {
                        for (t, d) in &self.table[i * n + m] {
                            f.add_mul_assign(&mut right[*t], c, d);
                        }
                    }
                    if left != right {
                        return Err(Error::NotAssociative(format!(
                            "({} {}) {}",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn set_quiver(&mut self, q: QuiverInfo) {
        self.quiver = Some(q);
    }

    /// Attach a radical known from the construction. It is checked to be a
    /// nilpotent two-sided ideal.
    pub fn with_radical(self, rad: Subspace<F>) -> Result<Self> {
        if rad.ambient() != self.dim {
            return Err(Error::DimensionMismatch("radical ambient dimension".into()));
        }
        if !self.is_two_sided_ideal(&rad) || self.nilpotency_index(&rad).is_none() {
            return Err(Error::InvalidInput(format!(
                "structural radical of {} is not a nilpotent ideal",
                self.provenance
            )));
        }
        let _ = self.radical.set((rad, RadicalMethod::Structural));
        Ok(self)
    }

    /// Attach primitive orthogonal idempotents known from the construction.
    pub fn with_idempotents(mut self, idem: Vec<Vector<F>>) -> Result<Self> {
        let f = &self.field;
        let mut sum = vec![f.zero(); self.dim];
        for (a, e) in idem.iter().enumerate() {
            for (b, e2) in idem.iter().enumerate() {
                let p = self.mul(e, e2);
                let expect = if a == b { e.clone() } else { vec![f.zero(); self.dim] };
                if p != expect {
                    return Err(Error::InvalidInput("idempotents are not orthogonal".into()));
                }
            }
            axpy(f, &mut sum, &f.one(), e);
        }
        if sum != self.unit {
            return Err(Error::InvalidInput("idempotents do not sum to the unit".into()));
        }
        let _ = self.idempotents.set(Ok(idem));
        self.structural_idempotents = true;
        Ok(self)
    }

    pub(crate) fn with_computed_radical(self, rad: Subspace<F>, method: RadicalMethod) -> Self {
        let _ = self.radical.set((rad, method));
        self
    }

    pub fn with_generators(self, gens: Vec<Vector<F>>) -> Self {
        let _ = self.generators.set(gens);
        self
    }

    pub fn with_provenance(mut self, p: impl Into<String>) -> Self {
        self.provenance = p.into();
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &Vector<F> {
        &self.unit
    }

    pub fn table(&self) -> &Table<F> {
        &self.table
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn quiver(&self) -> Option<&QuiverInfo> {
        self.quiver.as_ref()
    }

    pub fn basis(&self, i: usize) -> Vector<F> {
        unit_vec(&self.field, self.dim, i)
    }

    pub fn zero_vec(&self) -> Vector<F> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec![f.zero(); n];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in &self.table[i * n + j] {
                    f.add_mul_assign(&mut out[*k], &xy, c);
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[F::Elem], e: usize) -> Vector<F> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrices of left multiplication by each basis element.
    pub fn left_matrices(&self) -> &[Matrix<F>] {
        self.left_mats.get_or_init(|| {
            (0..self.dim)
                .map(|i| {
                    let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
                    for j in 0..self.dim {
                        for (k, c) in &self.table[i * self.dim + j] {
                            m.set(*k, j, c.clone());
                        }
                    }
                    m
                })
                .collect()
        })
    }

    /// Matrices of right multiplication `x -> x b_i`.
    pub fn right_matrices(&self) -> &[Matrix<F>] {
        self.right_mats.get_or_init(|| {
            (0..self.dim)
                .map(|i| {
                    let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
                    for j in 0..self.dim {
                        for (k, c) in &self.table[j * self.dim + i] {
                            m.set(*k, j, c.clone());
                        }
                    }
                    m
                })
                .collect()
        })
    }

    pub fn left_matrix(&self, a: &[F::Elem]) -> Matrix<F> {
        combine_matrices(&self.field, self.left_matrices(), a, self.dim)
    }

    pub fn right_matrix(&self, a: &[F::Elem]) -> Matrix<F> {
        combine_matrices(&self.field, self.right_matrices(), a, self.dim)
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace<F>) -> bool {
        s.basis().iter().all(|v| {
            (0..self.dim).all(|i| {
                let b = self.basis(i);
                s.contains(&self.mul(&b, v)) && s.contains(&self.mul(v, &b))
            })
        })
    }

    /// Span of all products `x y` with `x` in `s`, `y` in `t`.
    pub fn product_space(&self, s: &Subspace<F>, t: &Subspace<F>) -> Subspace<F> {
        let mut vs = Vec::new();
        for x in s.basis() {
            for y in t.basis() {
                let p = self.mul(x, y);
                if !is_zero_vec(&self.field, &p) {
                    vs.push(p);
                }
            }
        }
        Subspace::span(&self.field, self.dim, &vs)
    }

    /// Least `m` with `s^m = 0`, if `s` is nilpotent.
    pub fn nilpotency_index(&self, s: &Subspace<F>) -> Option<usize> {
        if s.dim() == 0 {
            return Some(1);
        }
        let mut power = s.clone();
        for m in 1..=self.dim + 1 {
            if power.dim() == 0 {
                return Some(m);
            }
            let next = self.product_space(&power, s);
            if next.dim() == power.dim() {
                return None;
            }
            power = next;
        }
        None
    }

    /// Jacobson radical. Structural when known from the construction,
    /// otherwise computed from the left regular representation.
    pub fn radical(&self) -> &Subspace<F> {
        &self.radical_with_method().0
    }

    pub fn radical_method(&self) -> RadicalMethod {
        self.radical_with_method().1
    }

    fn radical_with_method(&self) -> &(Subspace<F>, RadicalMethod) {
        self.radical.get_or_init(|| {
            let (rad, method) = radical::radical_of_algebra(self);
            debug_assert!(self.nilpotency_index(&rad).is_some());
            (rad, method)
        })
    }

    /// Radical computed from the regular representation, ignoring any
    /// structural radical. Used to cross-check constructions.
    pub fn computed_radical(&self) -> Subspace<F> {
        radical::radical_of_algebra(self).0
    }

    /// Dimensions of `rad^0, rad^1, ...` ending with 0.
    pub fn radical_layers(&self) -> Vec<usize> {
        let rad = self.radical();
        let mut dims = vec![self.dim];
        let mut power = rad.clone();
        loop {
            dims.push(power.dim());
            if power.dim() == 0 {
                break;
            }
            power = self.product_space(&power, rad);
            assert!(dims.len() <= self.dim + 2, "radical is not nilpotent");
        }
        dims
    }

    pub fn loewy_length(&self) -> usize {
        self.radical_layers().len() - 1
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().dim() == 0
    }

    /// A set of elements that, together with the unit, generates the
    /// algebra.
    pub fn generators(&self) -> &[Vector<F>] {
        self.generators.get_or_init(|| self.greedy_generators())
    }

    fn greedy_generators(&self) -> Vec<Vector<F>> {
        let f = &self.field;
        let mut gens: Vec<Vector<F>> = Vec::new();
        let mut span = Subspace::span(f, self.dim, &[self.unit.clone()]);
        for i in 0..self.dim {
            if span.dim() == self.dim {
                break;
            }
            let b = self.basis(i);
            if span.contains(&b) {
                continue;
            }
            gens.push(b);
            span = self.generated_subalgebra(&gens);
        }
        gens
    }

    /// Span of all words in `gens` (including the empty word).
    pub fn generated_subalgebra(&self, gens: &[Vector<F>]) -> Subspace<F> {
        let f = &self.field;
        let mut span = Subspace::span(f, self.dim, &[self.unit.clone()]);
        let mut frontier = vec![self.unit.clone()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.mul(g, &x);
                if !span.contains(&y) {
                    span = span.sum(&Subspace::span(f, self.dim, &[y.clone()]));
                    frontier.push(y);
                }
            }
        }
        span
    }

    /// Whether the primitive idempotents came from the construction.
    pub fn has_structural_idempotents(&self) -> bool {
        self.structural_idempotents
    }

    /// A complete set of primitive orthogonal idempotents. Structural when
    /// known, otherwise computed by decomposing the regular module.
    pub fn primitive_idempotents(&self) -> Result<&[Vector<F>]> {
        self.idempotents
            .get_or_init(|| crate::krull_schmidt::primitive_idempotents_of(self, 0))
            .as_deref()
            .map_err(Clone::clone)
    }

    /// Primitive idempotents known without any search: the structural ones,
    /// or only the unit.
    pub fn idempotent_frame(&self) -> Vec<Vector<F>> {
        if self.structural_idempotents {
            self.primitive_idempotents().unwrap().to_vec()
        } else {
            vec![self.unit.clone()]
        }
    }

    /// Subspace `x A y`.
    pub fn corner(&self, x: &[F::Elem], y: &[F::Elem]) -> Subspace<F> {
        let vs: Vec<Vector<F>> = (0..self.dim)
            .map(|i| self.mul(&self.mul(x, &self.basis(i)), y))
            .collect();
        Subspace::span(&self.field, self.dim, &vs)
    }

    /// Groups the primitive idempotents by isomorphism of the projectives
    /// `A e`. Returns, for each idempotent, the index of its class, and one
    /// representative idempotent index per class.
    pub fn projective_classes(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        let idem = self.primitive_idempotents()?;
        let rad = self.radical();
        let mut class = vec![usize::MAX; idem.len()];
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..idem.len() {
            let found = reps.iter().position(|&r| {
                let u = self.corner(&idem[r], &idem[i]);
                let v = self.corner(&idem[i], &idem[r]);
                u.basis().iter().any(|x| {
                    v.basis().iter().any(|y| !rad.contains(&self.mul(x, y)))
                })
            });
            match found {
                Some(c) => class[i] = c,
                None => {
                    class[i] = reps.len();
                    reps.push(i);
                }
            }
        }
        Ok((class, reps))
    }

    /// Number of isomorphism classes of simple modules.
    pub fn simple_count(&self) -> Result<usize> {
        Ok(self.projective_classes()?.1.len())
    }

    /// Matrix of `dim e_i A e_j` over the primitive idempotents.
    pub fn cartan_dims(&self) -> Result<Vec<Vec<usize>>> {
        let idem = self.primitive_idempotents()?;
        Ok(idem
            .iter()
            .map(|x| idem.iter().map(|y| self.corner(x, y).dim()).collect())
            .collect())
    }

    pub fn fingerprint(&self) -> Result<Fingerprint> {
        let radical_layers = self.radical_layers();
        Ok(Fingerprint {
            dim: self.dim,
            loewy_length: radical_layers.len() - 1,
            radical_layers,
            simples: self.simple_count()?,
        })
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Subspace<F> {
        let f = &self.field;
        let n = self.dim;
        let gens = self.generators();
        // Unknown z; equations g z - z g = 0 for each generator.
        let mut rows: Vec<Vector<F>> = Vec::new();
        for g in gens {
            let m = self.left_matrix(g).sub(&self.right_matrix(g));
            rows.extend(m.row_vecs());
        }
        if rows.is_empty() {
            return Subspace::full(f, n);
        }
        let m = Matrix::from_rows(f, n, &rows);
        Subspace::span(f, n, &nullspace(&m))
    }

    /// Subalgebra spanned by `s` as an algebra in its own right, with the
    /// inclusion. `s` must contain the unit and be closed under products.
    pub fn subalgebra(self: &Arc<Self>, s: &Subspace<F>, provenance: &str) -> Result<(Algebra<F>, Matrix<F>)> {
        let f = &self.field;
        let basis = s.basis().to_vec();
        let k = basis.len();
        let unit = s
            .coords(&self.unit)
            .ok_or_else(|| Error::InvalidInput("subspace does not contain the unit".into()))?;
        let mut table = Vec::with_capacity(k * k);
        for x in &basis {
            for y in &basis {
                let c = s
                    .coords(&self.mul(x, y))
                    .ok_or_else(|| Error::InvalidInput("subspace is not closed under products".into()))?;
                table.push(c.into_iter().enumerate().filter(|(_, v)| !f.is_zero(v)).collect());
            }
        }
        let labels = basis.iter().map(|v| self.format_element(v)).collect();
        let sub = Algebra::new(f.clone(), labels, table, unit, provenance)?;
        let inclusion = Matrix::from_cols(f, self.dim, &basis);
        Ok((sub, inclusion))
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, v: &[F::Elem]) -> String {
        let f = &self.field;
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let l = &self.labels[i];
            if f.is_one(c) {
                parts.push(l.clone());
            } else {
                parts.push(format!("{}*{}", f.format(c), l));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Parse a linear combination like `2*a + b - 1/2*c` of basis labels.
    pub fn parse_element(&self, s: &str) -> Result<Vector<F>> {
        parse_combination(&self.field, s, |l| self.label_index(l))
            .map(|terms| {
                let mut v = self.zero_vec();
                for (i, c) in terms {
                    v[i] = self.field.add(&v[i], &c);
                }
                v
            })
    }
}

pub(crate) fn combine_matrices<F: Field>(f: &F, mats: &[Matrix<F>], coeffs: &[F::Elem], n: usize) -> Matrix<F> {
    let mut out = Matrix::zeros(f, n, n);
    for (c, m) in coeffs.iter().zip(mats) {
        out.add_scaled(c, m);
    }
    out
}

/// Parse `c1*l1 + c2*l2 - l3` where labels are resolved by `lookup`.
/// A term without an explicit coefficient has coefficient 1. Labels may
/// themselves contain `*` (path labels), so the coefficient is only split
/// off when the text before the first `*` parses as a number.
pub(crate) fn parse_combination<F: Field>(
    f: &F,
    s: &str,
    lookup: impl Fn(&str) -> Option<usize>,
) -> Result<Vec<(usize, F::Elem)>> {
    let mut terms = Vec::new();
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::InvalidInput("empty linear combination".into()));
    }
    if t == "0" {
        return Ok(terms);
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for ch in t.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() {
            pieces.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && cur.is_empty() {
            if ch == '-' {
                neg = !neg;
            }
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(Error::InvalidInput(format!("dangling sign in `{s}`")));
    }
    pieces.push((neg, cur));
    for (neg, piece) in pieces {
        let (coef, label) = match piece.split_once('*') {
            Some((c, rest)) if f.parse_elem(c).is_ok() && lookup(&piece).is_none() => {
                (f.parse_elem(c)?, rest.to_string())
            }
            _ => (f.one(), piece.clone()),
        };
        let idx = lookup(&label)
            .ok_or_else(|| Error::InvalidInput(format!("unknown basis label `{label}`")))?;
        let coef = if neg { f.neg(&coef) } else { coef };
        terms.push((idx, coef));
    }
    Ok(terms)
}

/// Opposite algebra: same basis, `b_i * b_j := b_j b_i`.
pub fn opposite<F: Field>(a: &Algebra<F>) -> Algebra<F> {
    let n = a.dim;
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(a.table[j * n + i].clone());
        }
    }
    let mut op = Algebra::new(
        a.field.clone(),
        a.labels.clone(),
        table,
        a.unit.clone(),
        format!("op({})", a.provenance),
    )
    .expect("opposite of an algebra is an algebra");
    if let Some((rad, method)) = a.radical.get() {
        if *method == RadicalMethod::Structural {
            op = op.with_radical(rad.clone()).expect("radical of the opposite");
        }
    }
    if a.structural_idempotents {
        op = op
            .with_idempotents(a.primitive_idempotents().unwrap().to_vec())
            .expect("idempotents of the opposite");
    }
    if let Some(g) = a.generators.get() {
        op = op.with_generators(g.clone());
    }
    if let Some(q) = &a.quiver {
        op.quiver = Some(q.opposite());
    }
    op
}

/// Tensor product over the ground field, basis index `i * dim B + j`.
pub fn tensor_product<F: Field>(a: &Algebra<F>, b: &Algebra<F>) -> Result<Algebra<F>> {
    let f = &a.field;
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field.spec().to_string(), b.field.spec().to_string()));
    }
    let (na, nb) = (a.dim, b.dim);
    let n = na * nb;
    let mut table = Vec::with_capacity(n * n);
    for i in 0..na {
        for j in 0..nb {
            for k in 0..na {
                for l in 0..nb {
                    let mut entries = Vec::new();
                    for (x, c) in &a.table[i * na + k] {
                        for (y, d) in &b.table[j * nb + l] {
                            entries.push((x * nb + y, f.mul(c, d)));
                        }
                    }
                    table.push(entries);
                }
            }
        }
    }
    let labels = a
        .labels
        .iter()
        .flat_map(|x| b.labels.iter().map(move |y| format!("{x}|{y}")))
        .collect();
    let kron = |u: &[F::Elem], v: &[F::Elem]| -> Vector<F> {
        u.iter().flat_map(|x| v.iter().map(move |y| f.mul(x, y))).collect()
    };
    let unit = kron(&a.unit, &b.unit);
    let mut t = Algebra::new(
        f.clone(),
        labels,
        table,
        unit,
        format!("({})x({})", a.provenance, b.provenance),
    )?;
    // rad(A) (x) B + A (x) rad(B)
    let mut rad_vecs = Vec::new();
    for r in a.radical().basis() {
        for j in 0..nb {
            rad_vecs.push(kron(r, &b.basis(j)));
        }
    }
    for i in 0..na {
        for r in b.radical().basis() {
            rad_vecs.push(kron(&a.basis(i), r));
        }
    }
    t = t.with_radical(Subspace::span(f, n, &rad_vecs))?;
    let ia = a.primitive_idempotents()?;
    let ib = b.primitive_idempotents()?;
    let idem = ia.iter().flat_map(|x| ib.iter().map(|y| kron(x, y))).collect();
    t = t.with_idempotents(idem)?;
    let mut gens: Vec<Vector<F>> = a.generators().iter().map(|g| kron(g, &b.unit)).collect();
    gens.extend(b.generators().iter().map(|g| kron(&a.unit, g)));
    Ok(t.with_generators(gens))
}

/// Enveloping algebra `A (x) B^op`, acting on A-B-bimodules.
pub fn enveloping<F: Field>(a: &Algebra<F>, b: &Algebra<F>) -> Result<Algebra<F>> {
    tensor_product(a, &opposite(b))
}

/// Two-sided ideal generated by the given elements.
pub fn ideal_closure<F: Field>(a: &Algebra<F>, gens: &[Vector<F>]) -> Subspace<F> {
    let f = &a.field;
    let mut ideal = Subspace::span(f, a.dim, gens);
    let mut frontier: Vec<Vector<F>> = ideal.basis().to_vec();
    let mult: Vec<Vector<F>> = a.generators().to_vec();
    while let Some(x) = frontier.pop() {
        for g in &mult {
            for y in [a.mul(g, &x), a.mul(&x, g)] {
                if !ideal.contains(&y) {
                    ideal = ideal.sum(&Subspace::span(f, a.dim, &[y.clone()]));
                    frontier.push(y);
                }
            }
        }
    }
    ideal
}

/// Quotient by the two-sided ideal generated by `gens`, with the canonical
/// surjection.
pub fn quotient<F: Field>(a: &Arc<Algebra<F>>, gens: &[Vector<F>]) -> Result<(Arc<Algebra<F>>, AlgebraHom<F>)> {
    let f = &a.field;
    let ideal = ideal_closure(a, gens);
    if ideal.contains(&a.unit) {
        return Err(Error::IdealIsWholeAlgebra);
    }
    let free = ideal.free_columns();
    let k = free.len();
    let mut table = Vec::with_capacity(k * k);
    for &i in &free {
        for &j in &free {
            let p = a.mul(&a.basis(i), &a.basis(j));
            let c = ideal.quotient_coords(&p);
            table.push(c.into_iter().enumerate().filter(|(_, v)| !f.is_zero(v)).collect());
        }
    }
    let labels = free.iter().map(|&i| a.labels[i].clone()).collect();
    let unit = ideal.quotient_coords(&a.unit);
    let mut q = Algebra::new(f.clone(), labels, table, unit, format!("{}/I", a.provenance))?;
    let proj = Matrix::from_cols(f, k, &(0..a.dim).map(|i| ideal.quotient_coords(&a.basis(i))).collect::<Vec<_>>());
    let rad_img: Vec<Vector<F>> = a.radical().basis().iter().map(|r| proj.mul_vec(r)).collect();
    q = q.with_radical(Subspace::span(f, k, &rad_img))?;
    if a.structural_idempotents {
        let idem: Vec<Vector<F>> = a
            .primitive_idempotents()?
            .iter()
            .map(|e| proj.mul_vec(e))
            .filter(|e| !is_zero_vec(f, e))
            .collect();
        q = q.with_idempotents(idem)?;
    }
    let gens_img: Vec<Vector<F>> = a
        .generators()
        .iter()
        .map(|g| proj.mul_vec(g))
        .filter(|g| !is_zero_vec(f, g))
        .collect();
    q = q.with_generators(gens_img);
    let q = Arc::new(q);
    let hom = AlgebraHom::new(a.clone(), q.clone(), proj)?;
    Ok((q, hom))
}

/// Upper triangular `n x n` matrices over `A`, realized as `A (x) kA_n`.
pub fn triangular_matrix_algebra<F: Field>(a: &Algebra<F>, n: usize) -> Result<Algebra<F>> {
    if n == 0 {
        return Err(Error::BadParams("triangular matrix size must be positive".into()));
    }
    let path = quiver::linear_path_algebra(a.field(), n)?;
    tensor_product(a, &path)
}

/// Whether the algebra has no central idempotents besides 0 and 1.
pub fn is_connected<F: Field>(a: &Arc<Algebra<F>>) -> Result<bool> {
    let z = a.center();
    if z.dim() == 1 {
        return Ok(true);
    }
    let (center, _) = a.subalgebra(&z, "center")?;
    let center = Arc::new(center);
    let found = crate::krull_schmidt::find_nontrivial_idempotent(&center, 0, crate::krull_schmidt::DEFAULT_BUDGET)?;
    Ok(found.is_none())
}

#[cfg(test)]
mod tests;
