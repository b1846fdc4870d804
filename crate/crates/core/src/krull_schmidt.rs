//! Decomposition into indecomposables by lifting idempotents of
//! endomorphism algebras, and the isomorphism and direct-summand tests
//! built on it.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::radical::radical_of_matrix_algebra;
use crate::algebra::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, Gfp, Rationals};
use crate::linalg::{inverse, rank, solve, Subspace};
use crate::matrix::Matrix;
use crate::module::{hom_space, HomSpace, Rep};
use crate::poly;

/// Samples per idempotent search.
pub const DEFAULT_BUDGET: usize = 64;

/// Child seed for the `index`-th subcomputation of a seeded computation.
pub fn derive_seed(parent: u64, index: u64) -> u64 {
    let mut z = parent ^ index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KsOptions {
    pub seed: u64,
    pub budget: usize,
}

impl Default for KsOptions {
    fn default() -> Self {
        KsOptions { seed: 0, budget: DEFAULT_BUDGET }
    }
}

impl KsOptions {
    pub fn with_seed(seed: u64) -> Self {
        KsOptions { seed, budget: DEFAULT_BUDGET }
    }
}

/// Why an endomorphism algebra was accepted as local.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IndecomposabilityCertificate {
    /// The semisimple quotient is one-dimensional.
    DimOne,
    /// The quotient is commutative and generated by an element whose
    /// minimal polynomial (coefficients from the constant term up) is
    /// irreducible of degree equal to its dimension.
    FieldQuotient { min_poly: Vec<String> },
    /// No certificate: noncommutative quotient over the rationals.
    Uncertified,
}

/// Outcome of an idempotent search.
#[derive(Clone, Debug)]
pub enum IdempotentSearch<F: Field> {
    Found(Vector<F>),
    Local(IndecomposabilityCertificate),
}

/// `End(M)` as an abstract algebra whose product is composition, together
/// with the basis of matrices.
#[derive(Clone, Debug)]
pub struct EndomorphismAlgebra<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub hom: HomSpace<F>,
}

impl<F: Field> EndomorphismAlgebra<F> {
    pub fn matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        self.hom.combine(x)
    }

    pub fn element(&self, m: &Matrix<F>) -> Option<Vector<F>> {
        self.hom.coords(m)
    }
}

/// Structure constants of `End(M)` from compositions of the Hom basis,
/// with the radical computed from the action on `M`.
pub fn endomorphism_algebra<F: Field, R: Rep<F>>(m: &R) -> Result<EndomorphismAlgebra<F>> {
    if m.dim() == 0 {
        return Err(Error::InvalidInput("endomorphism algebra of the zero module".into()));
    }
    let f = m.field().clone();
    let hom = hom_space(m, m)?;
    let k = hom.dim();
    let mut table = Vec::with_capacity(k * k);
    for x in &hom.basis {
        for y in &hom.basis {
            let c = hom.coords(&x.mul(y)).expect("endomorphisms compose");
            table.push(c.into_iter().enumerate().filter(|(_, v)| !f.is_zero(v)).collect());
        }
    }
    let unit = hom.coords(&Matrix::identity(&f, m.dim())).expect("identity is an endomorphism");
    let labels = (0..k).map(|i| format!("f{i}")).collect();
    let (rad, method) = radical_of_matrix_algebra(&f, &hom.basis);
    let algebra = Algebra::new_trusted(f, labels, table, unit, "endomorphisms")?.with_computed_radical(rad, method);
    Ok(EndomorphismAlgebra { algebra: Arc::new(algebra), hom })
}

fn eval_in<F: Field>(a: &Algebra<F>, p: &[F::Elem], x: &Vector<F>) -> Vector<F> {
    let f = a.field();
    let mut r = a.zero_vec();
    for c in p.iter().rev() {
        r = a.mul(x, &r);
        crate::linalg::axpy(f, &mut r, c, a.unit());
    }
    r
}

/// Iterates `y -> 3y^2 - 2y^3` until `y` is idempotent.
fn lift_idempotent<F: Field>(a: &Algebra<F>, mut y: Vector<F>) -> Result<Vector<F>> {
    let f = a.field();
    let (three, two) = (f.from_i64(3), f.from_i64(2));
    for _ in 0..64 {
        let y2 = a.mul(&y, &y);
        if y2 == y {
            return Ok(y);
        }
        let y3 = a.mul(&y2, &y);
        y = y2.iter().zip(&y3).map(|(s, t)| f.sub(&f.mul(&three, s), &f.mul(&two, t))).collect();
    }
    Err(Error::Inconclusive("idempotent lifting did not converge".into()))
}

/// Minimal polynomial of `x` modulo the radical, monic, low degree first.
fn min_poly_mod_radical<F: Field>(a: &Algebra<F>, rad: &Subspace<F>, x: &Vector<F>) -> Vec<F::Elem> {
    let f = a.field();
    let s = a.dim() - rad.dim();
    let mut powers = vec![rad.quotient_coords(a.unit())];
    let mut span = Subspace::span(f, s, &powers);
    let mut cur = a.unit().clone();
    loop {
        cur = a.mul(x, &cur);
        let q = rad.quotient_coords(&cur);
        if span.contains(&q) {
            let m = Matrix::from_cols(f, s, &powers);
            let rhs = Matrix::from_cols(f, s, &[q]);
            let c = solve(&m, &rhs).expect("shapes agree").expect("in span");
            let mut p: Vec<F::Elem> = c.col(0).iter().map(|v| f.neg(v)).collect();
            p.push(f.one());
            return p;
        }
        span = span.sum(&Subspace::span(f, s, &[q.clone()]));
        powers.push(q);
    }
}

fn quotient_is_commutative<F: Field>(a: &Algebra<F>, rad: &Subspace<F>) -> bool {
    let free = rad.free_columns();
    for (i, &x) in free.iter().enumerate() {
        for &y in &free[i + 1..] {
            let (bx, by) = (a.basis(x), a.basis(y));
            let c = crate::linalg::vec_sub(a.field(), &a.mul(&bx, &by), &a.mul(&by, &bx));
            if !rad.contains(&c) {
                return false;
            }
        }
    }
    true
}

/// Searches for an idempotent other than 0 and 1, or certifies that the
/// algebra is local.
pub fn search_idempotent<F: Field>(a: &Algebra<F>, seed: u64, budget: usize) -> Result<IdempotentSearch<F>> {
    let f = a.field();
    let rad = a.radical();
    let free = rad.free_columns();
    let s = free.len();
    if s == 1 {
        return Ok(IdempotentSearch::Local(IndecomposabilityCertificate::DimOne));
    }
    let commutative = quotient_is_commutative(a, rad);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Basis elements first: matrix units split at once.
    let candidates = free.iter().map(|&i| a.basis(i)).collect::<Vec<_>>();
    for attempt in 0..budget.max(1) + candidates.len() {
        let x: Vector<F> = if attempt < candidates.len() {
            candidates[attempt].clone()
        } else {
            (0..a.dim()).map(|_| f.random(&mut rng)).collect()
        };
        let mp = min_poly_mod_radical(a, rad, &x);
        let fac = poly::factor(f, &mp);
        if fac.factors.len() >= 2 {
            let (g, m) = &fac.factors[0];
            let mut q1 = vec![f.one()];
            for _ in 0..*m {
                q1 = poly::mul(f, &q1, g);
            }
            let (q2, r) = poly::divrem(f, &mp, &q1);
            debug_assert!(r.is_empty());
            let (_, _, t) = poly::ext_gcd(f, &q1, &q2);
            let proj = poly::rem(f, &poly::mul(f, &t, &q2), &mp);
            let y = lift_idempotent(a, eval_in(a, &proj, &x))?;
            return Ok(IdempotentSearch::Found(y));
        }
        if commutative && fac.complete && fac.factors.len() == 1 && fac.factors[0].1 == 1 && mp.len() == s + 1 {
            return Ok(IdempotentSearch::Local(IndecomposabilityCertificate::FieldQuotient {
                min_poly: mp.iter().map(|c| f.format(c)).collect(),
            }));
        }
    }
    if f.characteristic() == 0 && !commutative {
        return Ok(IdempotentSearch::Local(IndecomposabilityCertificate::Uncertified));
    }
    Err(Error::Inconclusive(format!(
        "no idempotent and no certificate after {budget} samples (semisimple quotient of dim {s})"
    )))
}

/// A nontrivial idempotent, or `None` if the algebra is certified local.
pub fn find_nontrivial_idempotent<F: Field>(a: &Algebra<F>, seed: u64, budget: usize) -> Result<Option<Vector<F>>> {
    Ok(match search_idempotent(a, seed, budget)? {
        IdempotentSearch::Found(y) => Some(y),
        IdempotentSearch::Local(_) => None,
    })
}

/// `e A e` as an algebra with unit `e`, with the subspace it spans in `A`.
fn corner_algebra<F: Field>(a: &Algebra<F>, e: &Vector<F>) -> Result<(Algebra<F>, Subspace<F>)> {
    let f = a.field();
    let w = a.corner(e, e);
    let k = w.dim();
    let basis = w.basis();
    let mut table = Vec::with_capacity(k * k);
    for x in basis {
        for y in basis {
            let c = w.coords(&a.mul(x, y)).expect("corner is closed");
            table.push(c.into_iter().enumerate().filter(|(_, v)| !f.is_zero(v)).collect());
        }
    }
    let unit = w.coords(e).expect("idempotent lies in its corner");
    let rad_vecs: Vec<Vector<F>> = a
        .radical()
        .basis()
        .iter()
        .map(|r| w.coords(&a.mul(&a.mul(e, r), e)).expect("corner"))
        .collect();
    let rad = Subspace::span(f, k, &rad_vecs);
    let labels = (0..k).map(|i| format!("c{i}")).collect();
    let c = Algebra::new_trusted(f.clone(), labels, table, unit, "corner")?
        .with_computed_radical(rad, a.radical_method());
    Ok((c, w))
}

/// A complete set of primitive orthogonal idempotents, split off one at a
/// time inside corner algebras.
pub fn primitive_idempotents_of<F: Field>(a: &Algebra<F>, seed: u64) -> Result<Vec<Vector<F>>> {
    let f = a.field();
    let mut out = Vec::new();
    let mut stack: Vec<(Vector<F>, u64)> = vec![(a.unit().clone(), seed)];
    while let Some((e, s)) = stack.pop() {
        let found = if e == *a.unit() {
            find_nontrivial_idempotent(a, s, DEFAULT_BUDGET)?
        } else {
            let (c, w) = corner_algebra(a, &e)?;
            find_nontrivial_idempotent(&c, s, DEFAULT_BUDGET)?.map(|y| w.combine(&y))
        };
        match found {
            Some(y) => {
                let rest = crate::linalg::vec_sub(f, &e, &y);
                stack.push((rest, derive_seed(s, 1)));
                stack.push((y, derive_seed(s, 0)));
            }
            None => out.push(e),
        }
    }
    Ok(out)
}

/// An indecomposable summand with its embedding `section` and projection
/// `retraction` (`retraction * section = 1`).
#[derive(Clone, Debug)]
pub struct Summand<F: Field, R: Rep<F>> {
    pub module: R,
    pub section: Matrix<F>,
    pub retraction: Matrix<F>,
    pub certificate: IndecomposabilityCertificate,
    /// Index of the isomorphism class among the summands.
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct Decomposition<F: Field, R: Rep<F>> {
    pub module: R,
    pub summands: Vec<Summand<F, R>>,
    /// Per class: index of a representative summand and multiplicity.
    pub classes: Vec<(usize, usize)>,
    pub seed: u64,
}

impl<F: Field, R: Rep<F>> Decomposition<F, R> {
    /// Primitive orthogonal idempotents of `End(M)` splitting off the
    /// summands.
    pub fn idempotents(&self) -> Vec<Matrix<F>> {
        self.summands.iter().map(|s| s.section.mul(&s.retraction)).collect()
    }

    /// Representative summands with multiplicities.
    pub fn grouped(&self) -> Vec<(&R, usize)> {
        self.classes.iter().map(|&(r, m)| (&self.summands[r].module, m)).collect()
    }

    pub fn summand_dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.module.dim()).collect()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1
    }

    pub fn to_record(&self) -> DecompositionRecord {
        let strs = |ms: Vec<Matrix<F>>| ms.iter().map(|m| m.to_strings()).collect();
        let mut actions = self.module.frame_actions();
        actions.extend(self.module.generator_actions());
        DecompositionRecord {
            kind: "decomposition".into(),
            field: self.module.field().spec().to_string(),
            dim: self.module.dim(),
            actions: strs(actions),
            idempotents: strs(self.idempotents()),
            summands: self
                .summands
                .iter()
                .map(|s| SummandRecord { dim: s.module.dim(), class: s.class, certificate: s.certificate.clone() })
                .collect(),
            seed: self.seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandRecord {
    pub dim: usize,
    pub class: usize,
    pub certificate: IndecomposabilityCertificate,
}

/// Serialized decomposition: the action matrices of the module and a
/// complete family of orthogonal idempotents commuting with them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionRecord {
    pub kind: String,
    pub field: String,
    pub dim: usize,
    pub actions: Vec<Vec<Vec<String>>>,
    pub idempotents: Vec<Vec<Vec<String>>>,
    pub summands: Vec<SummandRecord>,
    pub seed: u64,
}

impl DecompositionRecord {
    /// Replays the idempotent conditions by matrix multiplication.
    pub fn replay(&self) -> Result<()> {
        if self.kind != "decomposition" {
            return Err(Error::CertificateRejected(format!("unknown kind `{}`", self.kind)));
        }
        match self.field.parse::<FieldSpec>()? {
            FieldSpec::Prime(p) => self.replay_in(&Gfp::new(p)?),
            FieldSpec::Rationals => self.replay_in(&Rationals),
        }
    }

    fn replay_in<F: Field>(&self, f: &F) -> Result<()> {
        let n = self.dim;
        let reject = |msg: &str| Err(Error::CertificateRejected(msg.into()));
        let parse = |rows: &[Vec<String>]| -> Result<Matrix<F>> {
            if rows.len() != n {
                return Err(Error::CertificateRejected("matrix row count".into()));
            }
            Matrix::from_strings(f, rows, n)
        };
        let actions = self.actions.iter().map(|m| parse(m)).collect::<Result<Vec<_>>>()?;
        let es = self.idempotents.iter().map(|m| parse(m)).collect::<Result<Vec<_>>>()?;
        if es.len() != self.summands.len() {
            return reject("one idempotent per summand");
        }
        let mut total = Matrix::zeros(f, n, n);
        for (i, e) in es.iter().enumerate() {
            if rank(e) != self.summands[i].dim {
                return reject("summand dimension");
            }
            for (j, g) in es.iter().enumerate() {
                let p = e.mul(g);
                if (i == j && &p != e) || (i != j && !p.is_zero()) {
                    return reject("idempotents are not orthogonal");
                }
            }
            if actions.iter().any(|a| a.mul(e) != e.mul(a)) {
                return reject("idempotent does not commute with the action");
            }
            total = total.add(e);
        }
        if !total.is_identity() {
            return reject("idempotents do not sum to the identity");
        }
        Ok(())
    }

    pub fn to_canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&v).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
    }
}

fn complementary_split<F: Field>(e: &Matrix<F>) -> (Matrix<F>, Matrix<F>, Matrix<F>, Matrix<F>) {
    let f = e.field();
    let n = e.rows();
    let one_minus = Matrix::identity(f, n).sub(e);
    let s1 = Subspace::column_space(e).basis_matrix();
    let s2 = Subspace::column_space(&one_minus).basis_matrix();
    let k = s1.cols();
    let q = inverse(&s1.hstack(&s2)).expect("image and kernel of an idempotent are complementary");
    let r1 = q.select_rows(&(0..k).collect::<Vec<_>>());
    let r2 = q.select_rows(&(k..n).collect::<Vec<_>>());
    (s1, r1, s2, r2)
}

fn split_recursive<F: Field, R: Rep<F>>(
    m: &R,
    section: Matrix<F>,
    retraction: Matrix<F>,
    seed: u64,
    budget: usize,
    out: &mut Vec<Summand<F, R>>,
) -> Result<()> {
    if m.dim() == 0 {
        return Ok(());
    }
    let end = endomorphism_algebra(m)?;
    match search_idempotent(&end.algebra, seed, budget)? {
        IdempotentSearch::Local(certificate) => {
            out.push(Summand { module: m.clone(), section, retraction, certificate, class: 0 });
        }
        IdempotentSearch::Found(y) => {
            let e = end.matrix(&y);
            let (s1, r1, s2, r2) = complementary_split(&e);
            let m1 = m.transport(&s1, &r1);
            let m2 = m.transport(&s2, &r2);
            split_recursive(&m1, section.mul(&s1), r1.mul(&retraction), derive_seed(seed, 0), budget, out)?;
            split_recursive(&m2, section.mul(&s2), r2.mul(&retraction), derive_seed(seed, 1), budget, out)?;
        }
    }
    Ok(())
}

/// Splits `m` into indecomposables and groups them by isomorphism class.
pub fn decompose<F: Field, R: Rep<F>>(m: &R, opts: &KsOptions) -> Result<Decomposition<F, R>> {
    let f = m.field().clone();
    let n = m.dim();
    let mut summands = Vec::new();
    split_recursive(m, Matrix::identity(&f, n), Matrix::identity(&f, n), opts.seed, opts.budget, &mut summands)?;
    let mut classes: Vec<(usize, usize)> = Vec::new();
    for i in 0..summands.len() {
        let mut found = None;
        for (c, &(r, _)) in classes.iter().enumerate() {
            if iso_indecomposable(&summands[r].module, &summands[i].module)?.is_some() {
                found = Some(c);
                break;
            }
        }
        match found {
            Some(c) => {
                classes[c].1 += 1;
                summands[i].class = c;
            }
            None => {
                summands[i].class = classes.len();
                classes.push((i, 1));
            }
        }
    }
    Ok(Decomposition { module: m.clone(), summands, classes, seed: opts.seed })
}

/// Isomorphism between indecomposables: some basis element of `Hom(x, y)`
/// is invertible iff one exists.
pub fn iso_indecomposable<F: Field, R: Rep<F>>(x: &R, y: &R) -> Result<Option<Matrix<F>>> {
    if x.dim() != y.dim() {
        return Ok(None);
    }
    let h = hom_space(x, y)?;
    Ok(h.basis.iter().find(|b| rank(b) == x.dim()).cloned())
}

/// Split pair `(f, g)` with `g f = 1` exhibiting an indecomposable `x` as a
/// summand of `y`.
pub fn summand_indecomposable<F: Field, R: Rep<F>>(x: &R, y: &R) -> Result<Option<(Matrix<F>, Matrix<F>)>> {
    if x.dim() > y.dim() {
        return Ok(None);
    }
    if x.dim() == 0 {
        let f = x.field();
        return Ok(Some((Matrix::zeros(f, y.dim(), 0), Matrix::zeros(f, 0, y.dim()))));
    }
    let to = hom_space(x, y)?;
    let back = hom_space(y, x)?;
    for fm in &to.basis {
        for gm in &back.basis {
            let gf = gm.mul(fm);
            if let Some(inv) = inverse(&gf) {
                let g = inv.mul(gm);
                debug_assert!(g.mul(fm).is_identity());
                return Ok(Some((fm.clone(), g)));
            }
        }
    }
    Ok(None)
}

/// Matches the summands of `x` injectively into those of `y` by class,
/// returning for each summand of `x` a summand of `y` and an isomorphism.
fn match_summands<F: Field, R: Rep<F>>(
    dx: &Decomposition<F, R>,
    dy: &Decomposition<F, R>,
) -> Result<Option<Vec<(usize, Matrix<F>)>>> {
    let mut used = vec![false; dy.summands.len()];
    let mut out = Vec::new();
    for sx in &dx.summands {
        let mut hit = None;
        for (j, sy) in dy.summands.iter().enumerate() {
            if used[j] || sy.module.dim() != sx.module.dim() {
                continue;
            }
            if let Some(phi) = iso_indecomposable(&sx.module, &sy.module)? {
                hit = Some((j, phi));
                break;
            }
        }
        match hit {
            Some((j, phi)) => {
                used[j] = true;
                out.push((j, phi));
            }
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// An isomorphism `x -> y`, if one exists.
pub fn are_isomorphic<F: Field, R: Rep<F>>(x: &R, y: &R, opts: &KsOptions) -> Result<Option<Matrix<F>>> {
    if !x.same_acting_algebra(y) {
        return Err(Error::AlgebraMismatch("isomorphism test between different algebras".into()));
    }
    if x.dim() != y.dim() {
        return Ok(None);
    }
    if x.dim() == 0 {
        return Ok(Some(Matrix::zeros(x.field(), 0, 0)));
    }
    let h = hom_space(x, y)?;
    if let Some(b) = h.basis.iter().find(|b| rank(b) == x.dim()) {
        return Ok(Some(b.clone()));
    }
    let dx = decompose(x, opts)?;
    let dy = decompose(y, &KsOptions { seed: derive_seed(opts.seed, 1), ..*opts })?;
    if dx.summands.len() != dy.summands.len() {
        return Ok(None);
    }
    let Some(matching) = match_summands(&dx, &dy)? else {
        return Ok(None);
    };
    let f = x.field();
    let mut iso = Matrix::zeros(f, y.dim(), x.dim());
    for (sx, (j, phi)) in dx.summands.iter().zip(&matching) {
        let sy = &dy.summands[*j];
        iso = iso.add(&sy.section.mul(&phi.mul(&sx.retraction)));
    }
    debug_assert_eq!(rank(&iso), x.dim());
    Ok(Some(iso))
}

/// A split pair `(f: x -> y, g: y -> x)` with `g f = 1`, if `x` is
/// isomorphic to a direct summand of `y`.
pub fn is_direct_summand<F: Field, R: Rep<F>>(
    x: &R,
    y: &R,
    opts: &KsOptions,
) -> Result<Option<(Matrix<F>, Matrix<F>)>> {
    if !x.same_acting_algebra(y) {
        return Err(Error::AlgebraMismatch("summand test between different algebras".into()));
    }
    if x.dim() > y.dim() {
        return Ok(None);
    }
    let dx = decompose(x, opts)?;
    if dx.summands.len() == 1 {
        return summand_indecomposable(x, y);
    }
    let dy = decompose(y, &KsOptions { seed: derive_seed(opts.seed, 1), ..*opts })?;
    let Some(matching) = match_summands(&dx, &dy)? else {
        return Ok(None);
    };
    let f = x.field();
    let mut fm = Matrix::zeros(f, y.dim(), x.dim());
    let mut gm = Matrix::zeros(f, x.dim(), y.dim());
    for (sx, (j, phi)) in dx.summands.iter().zip(&matching) {
        let sy = &dy.summands[*j];
        let phi_inv = inverse(phi).expect("isomorphism");
        fm = fm.add(&sy.section.mul(&phi.mul(&sx.retraction)));
        gm = gm.add(&sx.section.mul(&phi_inv.mul(&sy.retraction)));
    }
    debug_assert!(gm.mul(&fm).is_identity());
    Ok(Some((fm, gm)))
}

#[cfg(test)]
mod tests;
