//! Two-sided order witnesses: verification with replayable certificates,
//! structural checks on verified witnesses, transports and experiments.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{is_connected, opposite, same_algebra, tensor_product, Algebra, AlgebraHom, Vector};
use crate::bimodule::{is_adjoint_pair_witness, tensor_over, Bimodule, TensorProduct};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, Gfp, Rationals};
use crate::group::{invariant_subalgebra, skew_group_algebra, AlgebraAction};
use crate::krull_schmidt::{are_isomorphic, decompose, derive_seed, is_direct_summand, KsOptions};
use crate::linalg::{inverse, Subspace};
use crate::matrix::Matrix;
use crate::module::{indecomposable_projectives, is_projective, is_self_injective, projective_cover, simple_modules, top, Module, Rep};

/// Bimodules `M` (`A`-`B`) and `N` (`B`-`A`) proposed to show `A >= B`.
#[derive(Clone, Debug)]
pub struct JWitnessPair<F: Field> {
    pub a: Arc<Algebra<F>>,
    pub b: Arc<Algebra<F>>,
    pub m: Bimodule<F>,
    pub n: Bimodule<F>,
    pub seed: u64,
}

impl<F: Field> JWitnessPair<F> {
    pub fn new(m: Bimodule<F>, n: Bimodule<F>, seed: u64) -> Result<Self> {
        if !same_algebra(m.left_algebra(), n.right_algebra()) || !same_algebra(m.right_algebra(), n.left_algebra()) {
            return Err(Error::AlgebraMismatch("witness bimodules must be A-B and B-A".into()));
        }
        Ok(JWitnessPair { a: m.left_algebra().clone(), b: m.right_algebra().clone(), m, n, seed })
    }

    /// `(A, A)` with both bimodules regular.
    pub fn identity(a: &Arc<Algebra<F>>) -> Self {
        let r = Bimodule::regular(a);
        JWitnessPair { a: a.clone(), b: a.clone(), m: r.clone(), n: r, seed: 0 }
    }

    /// The same witness read in the other direction, `(N, M)` for `B >= A`.
    pub fn reversed(&self) -> Self {
        JWitnessPair { a: self.b.clone(), b: self.a.clone(), m: self.n.clone(), n: self.m.clone(), seed: self.seed }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Geq,
    Equiv,
}

/// The regular `A`-bimodule split off `M (x)_B N`: `retraction * section
/// = 1` and both maps are bimodule maps.
#[derive(Clone, Debug)]
pub struct JCertificate<F: Field> {
    pub direction: Direction,
    pub a_ref: String,
    pub b_ref: String,
    pub regular: Bimodule<F>,
    pub tensor: Bimodule<F>,
    pub section: Matrix<F>,
    pub retraction: Matrix<F>,
    pub seed: u64,
    pub flags: BTreeMap<String, bool>,
}

impl<F: Field> JCertificate<F> {
    pub fn tensor_dim(&self) -> usize {
        self.tensor.dim()
    }

    /// Dimension of the complement `X` in `M (x)_B N = A + X`.
    pub fn complement_dim(&self) -> usize {
        self.tensor.dim() - self.regular.dim()
    }

    /// Re-checks the split pair by matrix multiplication only.
    pub fn replay(&self) -> Result<()> {
        check_split(
            self.regular.left_actions(),
            self.regular.right_actions(),
            self.tensor.left_actions(),
            self.tensor.right_actions(),
            &self.section,
            &self.retraction,
        )
    }

    pub fn to_record(&self) -> CertificateRecord {
        let strs = |ms: &[Matrix<F>]| ms.iter().map(|m| m.to_strings()).collect();
        CertificateRecord {
            kind: match self.direction {
                Direction::Geq => "j_geq".into(),
                Direction::Equiv => "j_equiv".into(),
            },
            a_ref: self.a_ref.clone(),
            b_ref: self.b_ref.clone(),
            field: self.regular.field().spec().to_string(),
            a_dim: self.regular.dim(),
            tensor_dim: self.tensor.dim(),
            complement_dim: self.complement_dim(),
            section: self.section.to_strings(),
            retraction: self.retraction.to_strings(),
            regular_left: strs(self.regular.left_actions()),
            regular_right: strs(self.regular.right_actions()),
            tensor_left: strs(self.tensor.left_actions()),
            tensor_right: strs(self.tensor.right_actions()),
            seed: self.seed,
            flags: self.flags.clone(),
        }
    }
}

fn check_split<F: Field>(
    reg_left: &[Matrix<F>],
    reg_right: &[Matrix<F>],
    t_left: &[Matrix<F>],
    t_right: &[Matrix<F>],
    section: &Matrix<F>,
    retraction: &Matrix<F>,
) -> Result<()> {
    let reject = |m: &str| Err(Error::CertificateRejected(m.into()));
    if reg_left.len() != t_left.len() || reg_right.len() != t_right.len() {
        return reject("action counts differ");
    }
    let (a, t) = (section.cols(), section.rows());
    if retraction.rows() != a || retraction.cols() != t {
        return reject("section and retraction shapes differ");
    }
    let shape_ok = |ms: &[Matrix<F>], d: usize| ms.iter().all(|m| m.rows() == d && m.cols() == d);
    if !shape_ok(reg_left, a) || !shape_ok(reg_right, a) || !shape_ok(t_left, t) || !shape_ok(t_right, t) {
        return reject("action matrix shapes");
    }
    if !retraction.mul(section).is_identity() {
        return reject("retraction after section is not the identity");
    }
    for (r, x) in reg_left.iter().zip(t_left).chain(reg_right.iter().zip(t_right)) {
        if section.mul(r) != x.mul(section) {
            return reject("section is not a bimodule map");
        }
        if retraction.mul(x) != r.mul(retraction) {
            return reject("retraction is not a bimodule map");
        }
    }
    Ok(())
}

/// Serialized certificate; every matrix entry is a canonical field element
/// string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub kind: String,
    pub a_ref: String,
    pub b_ref: String,
    pub field: String,
    pub a_dim: usize,
    pub tensor_dim: usize,
    pub complement_dim: usize,
    pub section: Vec<Vec<String>>,
    pub retraction: Vec<Vec<String>>,
    pub regular_left: Vec<Vec<Vec<String>>>,
    pub regular_right: Vec<Vec<Vec<String>>>,
    pub tensor_left: Vec<Vec<Vec<String>>>,
    pub tensor_right: Vec<Vec<Vec<String>>>,
    pub seed: u64,
    pub flags: BTreeMap<String, bool>,
}

impl CertificateRecord {
    /// JSON with sorted keys.
    pub fn to_canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&v).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
    }

    /// Replays the split pair from the stored matrices alone.
    pub fn replay(&self) -> Result<()> {
        if self.kind != "j_geq" && self.kind != "j_equiv" {
            return Err(Error::CertificateRejected(format!("unknown kind `{}`", self.kind)));
        }
        match self.field.parse::<FieldSpec>()? {
            FieldSpec::Prime(p) => self.replay_in(&Gfp::new(p)?),
            FieldSpec::Rationals => self.replay_in(&Rationals),
        }
    }

    fn replay_in<F: Field>(&self, f: &F) -> Result<()> {
        let (a, t) = (self.a_dim, self.tensor_dim);
        if t != a + self.complement_dim {
            return Err(Error::CertificateRejected("complement dimension".into()));
        }
        let parse = |rows: &[Vec<String>], r: usize, c: usize| -> Result<Matrix<F>> {
            if rows.len() != r {
                return Err(Error::CertificateRejected("matrix row count".into()));
            }
            Matrix::from_strings(f, rows, c)
        };
        let list = |ms: &[Vec<Vec<String>>], d: usize| ms.iter().map(|m| parse(m, d, d)).collect::<Result<Vec<_>>>();
        check_split(
            &list(&self.regular_left, a)?,
            &list(&self.regular_right, a)?,
            &list(&self.tensor_left, t)?,
            &list(&self.tensor_right, t)?,
            &parse(&self.section, t, a)?,
            &parse(&self.retraction, a, t)?,
        )
    }
}

fn base_flags<F: Field>(w: &JWitnessPair<F>) -> Result<BTreeMap<String, bool>> {
    let mut flags = BTreeMap::new();
    flags.insert("a_connected".to_string(), is_connected(&w.a)?);
    Ok(flags)
}

/// Checks `A >= B`: the regular `A`-bimodule is a direct summand of
/// `M (x)_B N`.
pub fn verify_j_geq<F: Field>(w: &JWitnessPair<F>, opts: &KsOptions) -> Result<JCertificate<F>> {
    let t = tensor_over(&w.m, &w.n)?;
    let reg = Bimodule::regular(&w.a);
    let opts = KsOptions { seed: w.seed ^ opts.seed, ..*opts };
    match is_direct_summand(&reg, &t.bimodule, &opts)? {
        Some((section, retraction)) => {
            let cert = JCertificate {
                direction: Direction::Geq,
                a_ref: w.a.provenance().to_string(),
                b_ref: w.b.provenance().to_string(),
                regular: reg,
                tensor: t.bimodule,
                section,
                retraction,
                seed: opts.seed,
                flags: base_flags(w)?,
            };
            cert.replay()?;
            Ok(cert)
        }
        None => Err(Error::NotASummand(decompose(&t.bimodule, &opts)?.summand_dims())),
    }
}

/// Both directions of `A ~ B`: `w1` shows `A >= B` and `w2` shows `B >= A`.
pub fn verify_j_equiv<F: Field>(
    w1: &JWitnessPair<F>,
    w2: &JWitnessPair<F>,
    opts: &KsOptions,
) -> Result<(JCertificate<F>, JCertificate<F>)> {
    if !same_algebra(&w1.a, &w2.b) || !same_algebra(&w1.b, &w2.a) {
        return Err(Error::AlgebraMismatch("equivalence witnesses must run in opposite directions".into()));
    }
    let mut c1 = verify_j_geq(w1, &KsOptions { seed: derive_seed(opts.seed, 0), ..*opts })?;
    let mut c2 = verify_j_geq(w2, &KsOptions { seed: derive_seed(opts.seed, 1), ..*opts })?;
    c1.direction = Direction::Equiv;
    c2.direction = Direction::Equiv;
    Ok((c1, c2))
}

/// A single pair inducing the equivalence: `M = M1 + M2`, `N = N1 + N2`.
pub fn package_equivalence<F: Field>(w1: &JWitnessPair<F>, w2: &JWitnessPair<F>) -> Result<JWitnessPair<F>> {
    if !same_algebra(&w1.a, &w2.b) || !same_algebra(&w1.b, &w2.a) {
        return Err(Error::AlgebraMismatch("equivalence witnesses must run in opposite directions".into()));
    }
    let m2 = w2.n.with_algebras(&w1.a, &w1.b);
    let n2 = w2.m.with_algebras(&w1.b, &w1.a);
    JWitnessPair::new(w1.m.direct_sum(&m2), w1.n.direct_sum(&n2), w1.seed)
}

/// Witness `(A_B, _B A)` for `A >= B` from a surjection `phi: B -> A`.
pub fn quotient_witness<F: Field>(phi: &AlgebraHom<F>) -> Result<JWitnessPair<F>> {
    if !phi.is_surjective() {
        return Err(Error::NotSurjective);
    }
    JWitnessPair::new(Bimodule::regular_restricted_right(phi), Bimodule::regular_restricted_left(phi), 0)
}

/// The canonical split pair for a quotient witness: `a -> a (x) 1` and the
/// multiplication map.
pub fn quotient_split_pair<F: Field>(w: &JWitnessPair<F>, t: &TensorProduct<F>) -> (Matrix<F>, Matrix<F>) {
    let a = &w.a;
    let f = a.field();
    let n = a.dim();
    let eta_cols: Vec<Vector<F>> = (0..n)
        .map(|i| {
            let mut v = vec![f.zero(); t.bimodule.dim()];
            for (j, c) in a.unit().iter().enumerate() {
                if !f.is_zero(c) {
                    crate::linalg::axpy(f, &mut v, c, &t.pure(i, j, n));
                }
            }
            v
        })
        .collect();
    let eta = Matrix::from_cols(f, t.bimodule.dim(), &eta_cols);
    let mult_cols: Vec<Vector<F>> = (0..n * n).map(|k| a.mul(&a.basis(k / n), &a.basis(k % n))).collect();
    let mult = Matrix::from_cols(f, n, &mult_cols);
    (eta, mult.mul(&t.section))
}

/// Certificate for a quotient witness built from the canonical split pair.
pub fn quotient_certificate<F: Field>(phi: &AlgebraHom<F>) -> Result<JCertificate<F>> {
    let w = quotient_witness(phi)?;
    let t = tensor_over(&w.m, &w.n)?;
    let (section, retraction) = quotient_split_pair(&w, &t);
    let cert = JCertificate {
        direction: Direction::Geq,
        a_ref: w.a.provenance().to_string(),
        b_ref: w.b.provenance().to_string(),
        regular: Bimodule::regular(&w.a),
        tensor: t.bimodule,
        section,
        retraction,
        seed: 0,
        flags: base_flags(&w)?,
    };
    cert.replay()?;
    Ok(cert)
}

/// Witness for `A^G >= A` through the isotypic splitting: `(_{A^G} A_A,
/// _A A_{A^G})`.
pub fn invariants_geq_witness<F: Field>(act: &AlgebraAction<F>) -> Result<JWitnessPair<F>> {
    let (_, emb) = invariant_subalgebra(act)?;
    JWitnessPair::new(Bimodule::regular_restricted_left(&emb), Bimodule::regular_restricted_right(&emb), 0)
}

/// Witness for `A >= A^G` under a free quiver action: `(_A A_{A^G},
/// _{A^G} A_A)`.
pub fn free_action_witness<F: Field>(act: &AlgebraAction<F>) -> Result<JWitnessPair<F>> {
    let (_, emb) = invariant_subalgebra(act)?;
    JWitnessPair::new(Bimodule::regular_restricted_right(&emb), Bimodule::regular_restricted_left(&emb), 0)
}

/// Witnesses between `A` and a subalgebra `B` embedded by `phi: B -> A`:
/// `(A_B, _B A)` for `A >= B` and `(_B A, A_B)` for `B >= A`.
pub fn subalgebra_witnesses<F: Field>(phi: &AlgebraHom<F>) -> Result<(JWitnessPair<F>, JWitnessPair<F>)> {
    let up = JWitnessPair::new(Bimodule::regular_restricted_right(phi), Bimodule::regular_restricted_left(phi), 0)?;
    let down = up.reversed();
    Ok((up, down))
}

/// Split data for the skew group algebra `A*G`: `A` as a summand of
/// `A*G` over `A`, and `A*G` as a summand of `A*G (x)_A A*G`.
#[derive(Clone, Debug)]
pub struct SkewSplits<F: Field> {
    pub skew: Arc<Algebra<F>>,
    pub embedding: AlgebraHom<F>,
    /// `(f, g)` with `f: A -> A*G`, `g f = 1`, as `A`-`A`-bimodule maps.
    pub restriction_split: (Matrix<F>, Matrix<F>),
    /// Certificate that the multiplication `A*G (x)_A A*G -> A*G` splits.
    pub multiplication_split: JCertificate<F>,
    /// Certificate for `A >= A*G` via `(_A A*G, A*G_A)`.
    pub restriction_certificate: JCertificate<F>,
}

pub fn skew_splits<F: Field>(act: &AlgebraAction<F>, opts: &KsOptions) -> Result<SkewSplits<F>> {
    let a = act.algebra().clone();
    let (skew, iota) = skew_group_algebra(act)?;
    let restricted = Bimodule::regular(&skew).restrict_both(&iota);
    let restriction_split = is_direct_summand(&Bimodule::regular(&a), &restricted, opts)?
        .ok_or_else(|| Error::NotASummand(vec![restricted.dim()]))?;
    let (up, down) = subalgebra_witnesses(&iota)?;
    let multiplication_split = verify_j_geq(&up, &KsOptions { seed: derive_seed(opts.seed, 0), ..*opts })?;
    let restriction_certificate = verify_j_geq(&down, &KsOptions { seed: derive_seed(opts.seed, 1), ..*opts })?;
    Ok(SkewSplits { skew, embedding: iota, restriction_split, multiplication_split, restriction_certificate })
}

impl<F: Field> Bimodule<F> {
    /// The same actions viewed over structurally equal algebras.
    pub fn with_algebras(&self, left: &Arc<Algebra<F>>, right: &Arc<Algebra<F>>) -> Self {
        debug_assert!(same_algebra(left, self.left_algebra()) && same_algebra(right, self.right_algebra()));
        Bimodule::new_trusted(left.clone(), right.clone(), self.dim(), self.left_actions().to_vec(), self.right_actions().to_vec())
    }

    /// A `B`-`B`-bimodule restricted along `phi: A -> B` on both sides.
    pub fn restrict_both(&self, phi: &AlgebraHom<F>) -> Self {
        let a = phi.source();
        let left = (0..a.dim()).map(|i| self.act_left(&phi.apply(&a.basis(i)))).collect();
        let right = (0..a.dim()).map(|i| self.act_right(&phi.apply(&a.basis(i)))).collect();
        Bimodule::new_trusted(a.clone(), a.clone(), self.dim(), left, right)
    }

    /// External tensor product `X (x)_k Y` of an `A`-`B`- and a
    /// `C`-`D`-bimodule, over `A (x) C` and `B (x) D` (basis index
    /// `i * dim + j`).
    pub fn external_tensor(&self, y: &Bimodule<F>, left: &Arc<Algebra<F>>, right: &Arc<Algebra<F>>) -> Self {
        let l = self.left_actions().iter().flat_map(|x| y.left_actions().iter().map(move |z| x.kron(z))).collect();
        let r = self.right_actions().iter().flat_map(|x| y.right_actions().iter().map(move |z| x.kron(z))).collect();
        Bimodule::new_trusted(left.clone(), right.clone(), self.dim() * y.dim(), l, r)
    }

    /// A module over the enveloping algebra read back as a bimodule.
    pub fn from_envelope_module(left: &Arc<Algebra<F>>, right: &Arc<Algebra<F>>, m: &Module<F>) -> Self {
        let f = left.field();
        let (dl, dr) = (left.dim(), right.dim());
        let l = (0..dl)
            .map(|i| {
                let mut v = vec![f.zero(); dl * dr];
                for (j, c) in right.unit().iter().enumerate() {
                    v[i * dr + j] = c.clone();
                }
                m.act(&v)
            })
            .collect();
        let r = (0..dr)
            .map(|j| {
                let mut v = vec![f.zero(); dl * dr];
                for (i, c) in left.unit().iter().enumerate() {
                    v[i * dr + j] = c.clone();
                }
                m.act(&v)
            })
            .collect();
        Bimodule::new_trusted(left.clone(), right.clone(), m.dim(), l, r)
    }

    /// Projective cover in the category of bimodules.
    pub fn projective_cover(&self) -> Result<Bimodule<F>> {
        let pc = projective_cover(&self.to_module())?;
        Ok(Bimodule::from_envelope_module(self.left_algebra(), self.right_algebra(), &pc.projective))
    }
}

fn divides_all<F: Field>(parts: &[Module<F>], whole: &Module<F>, opts: &KsOptions) -> Result<bool> {
    for (i, p) in parts.iter().enumerate() {
        let o = KsOptions { seed: derive_seed(opts.seed, i as u64), ..*opts };
        if is_direct_summand(p, whole, &o)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the projective covers `P(M)` and `P(N)` are projective generators
/// as a left and a right `A`-module respectively.
pub fn generators_check<F: Field>(w: &JWitnessPair<F>, cert: &JCertificate<F>, opts: &KsOptions) -> Result<bool> {
    cert.replay()?;
    let left = w.m.projective_cover()?.restrict_left();
    if !divides_all(&indecomposable_projectives(&w.a)?, &left, opts)? {
        return Ok(false);
    }
    let right = w.n.projective_cover()?.restrict_right();
    divides_all(&indecomposable_projectives(right.algebra())?, &right, opts)
}

/// Whether a module is injective: its dual over the opposite algebra is
/// projective.
pub fn is_injective<F: Field>(m: &Module<F>) -> Result<bool> {
    let op = Arc::new(opposite(m.algebra()));
    let acts = m.actions().iter().map(|a| a.transpose()).collect();
    is_projective(&Module::new_trusted(op, m.dim(), acts))
}

/// Indecomposable projective modules that are also injective.
pub fn projective_injectives<F: Field>(a: &Arc<Algebra<F>>) -> Result<Vec<Module<F>>> {
    let mut out = Vec::new();
    for p in indecomposable_projectives(a)? {
        if is_injective(&p)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Whether `_A M` and `N_A` are faithful and contain every indecomposable
/// projective-injective module as a summand.
pub fn faithful_projinj_check<F: Field>(w: &JWitnessPair<F>, cert: &JCertificate<F>, opts: &KsOptions) -> Result<bool> {
    cert.replay()?;
    let left = w.m.restrict_left();
    if !left.is_faithful() || !divides_all(&projective_injectives(&w.a)?, &left, opts)? {
        return Ok(false);
    }
    let right = w.n.restrict_right();
    Ok(right.is_faithful() && divides_all(&projective_injectives(right.algebra())?, &right, opts)?)
}

/// Left-right projectivity and adjunction flags for a verified witness.
pub fn separable_quality<F: Field>(
    w: &JWitnessPair<F>,
    cert: &JCertificate<F>,
    opts: &KsOptions,
) -> Result<BTreeMap<String, bool>> {
    cert.replay()?;
    let mut flags = BTreeMap::new();
    flags.insert("m_left_right_projective".to_string(), w.m.is_left_right_projective()?);
    flags.insert("n_left_right_projective".to_string(), w.n.is_left_right_projective()?);
    flags.insert("m_left_adjoint_to_n".to_string(), is_adjoint_pair_witness(&w.m, &w.n, opts)?.holds);
    flags.insert("n_left_adjoint_to_m".to_string(), is_adjoint_pair_witness(&w.n, &w.m, opts)?.holds);
    Ok(flags)
}

/// Whether every indecomposable summand is an outer product `X (x)_k Y`
/// of one-sided indecomposables.
pub fn is_k_split<F: Field>(m: &Bimodule<F>, opts: &KsOptions) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(true);
    }
    let d = decompose(m, opts)?;
    for (zi, (z, _)) in d.grouped().into_iter().enumerate() {
        let o = KsOptions { seed: derive_seed(opts.seed, zi as u64 + 1), ..*opts };
        let xs = decompose(&z.restrict_left(), &o)?;
        let ys = decompose(&z.restrict_right(), &o)?;
        let mut found = false;
        'search: for (x, _) in xs.grouped() {
            for (y, _) in ys.grouped() {
                if x.dim() * y.dim() != z.dim() {
                    continue;
                }
                let candidate = Bimodule::outer_tensor(x, y, m.right_algebra());
                if are_isomorphic(&candidate, z, &o)?.is_some() {
                    found = true;
                    break 'search;
                }
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of testing "left-right projective implies projective".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LrprojOutcome {
    pub left_right_projective: bool,
    /// Whether every indecomposable summand is a projective bimodule;
    /// vacuously true when the bimodule is not left-right projective.
    pub conclusion_holds: bool,
}

/// For `A` with acyclic quiver and `B` self-injective, checks that a
/// left-right projective `A`-`B`-bimodule decomposes into projective
/// bimodules.
pub fn lrproj_projectivity_check<F: Field>(m: &Bimodule<F>, opts: &KsOptions) -> Result<LrprojOutcome> {
    let a = m.left_algebra();
    match a.quiver() {
        Some(q) if q.is_acyclic() => {}
        _ => return Err(Error::HypothesisViolated("left algebra must come from an acyclic quiver".into())),
    }
    if !is_self_injective(m.right_algebra())? {
        return Err(Error::HypothesisViolated("right algebra must be self-injective".into()));
    }
    if !m.is_left_right_projective()? {
        return Ok(LrprojOutcome { left_right_projective: false, conclusion_holds: true });
    }
    let d = decompose(m, opts)?;
    for s in &d.summands {
        if !s.module.is_projective()? {
            return Ok(LrprojOutcome { left_right_projective: true, conclusion_holds: false });
        }
    }
    Ok(LrprojOutcome { left_right_projective: true, conclusion_holds: true })
}

/// `(M (x)_B M', N' (x)_B N)` from witnesses for `A >= B` and `B >= C`.
pub fn compose_witnesses<F: Field>(w1: &JWitnessPair<F>, w2: &JWitnessPair<F>) -> Result<JWitnessPair<F>> {
    if !same_algebra(&w1.b, &w2.a) {
        return Err(Error::AlgebraMismatch("middle algebras differ".into()));
    }
    let m2 = w2.m.with_algebras(&w1.b, &w2.b);
    let n2 = w2.n.with_algebras(&w2.b, &w1.b);
    let m = tensor_over(&w1.m, &m2)?.bimodule;
    let n = tensor_over(&n2, &w1.n)?.bimodule;
    JWitnessPair::new(m, n, derive_seed(w1.seed, w2.seed))
}

/// The witness for `A^op >= B^op`: `N` and `M` with their sides exchanged.
pub fn opposite_witness<F: Field>(w: &JWitnessPair<F>) -> Result<JWitnessPair<F>> {
    let a_op = Arc::new(opposite(&w.a));
    let b_op = Arc::new(opposite(&w.b));
    let swap = |x: &Bimodule<F>, l: &Arc<Algebra<F>>, r: &Arc<Algebra<F>>| {
        Bimodule::new_trusted(l.clone(), r.clone(), x.dim(), x.right_actions().to_vec(), x.left_actions().to_vec())
    };
    JWitnessPair::new(swap(&w.n, &a_op, &b_op), swap(&w.m, &b_op, &a_op), w.seed)
}

/// The witness for `A (x) C >= B (x) C`: `M (x)_k C` and `N (x)_k C`.
pub fn tensor_witness<F: Field>(w: &JWitnessPair<F>, c: &Arc<Algebra<F>>) -> Result<JWitnessPair<F>> {
    let ac = Arc::new(tensor_product(&w.a, c)?);
    let bc = Arc::new(tensor_product(&w.b, c)?);
    let rc = Bimodule::regular(c);
    JWitnessPair::new(w.m.external_tensor(&rc, &ac, &bc), w.n.external_tensor(&rc, &bc, &ac), w.seed)
}

/// Loewy lengths of algebras related by verified equivalences; reported,
/// never asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoewyRow {
    pub label: String,
    pub left: usize,
    pub right: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoewyReport {
    pub rows: Vec<LoewyRow>,
    /// True when every tabulated pair has equal Loewy lengths: consistent
    /// with the conjecture, not a proof of it.
    pub conjecture_consistent: bool,
}

pub fn loewy_experiment<F: Field>(pairs: &[(String, Arc<Algebra<F>>, Arc<Algebra<F>>)]) -> LoewyReport {
    let rows: Vec<LoewyRow> = pairs
        .iter()
        .map(|(label, a, b)| {
            let (l, r) = (a.loewy_length(), b.loewy_length());
            LoewyRow { label: label.clone(), left: l, right: r, equal: l == r }
        })
        .collect();
    let conjecture_consistent = rows.iter().all(|r| r.equal);
    LoewyReport { rows, conjecture_consistent }
}

fn random_invertible<F: Field>(f: &F, n: usize, rng: &mut ChaCha8Rng) -> Matrix<F> {
    loop {
        let m = Matrix::from_fn(f, n, n, |_, _| f.random(rng));
        if inverse(&m).is_some() {
            return m;
        }
    }
}

/// A direct sum of one to three indecomposable projective bimodules
/// `A e (x) f B` in a random basis.
pub fn sample_projective_bimodule<F: Field>(a: &Arc<Algebra<F>>, b: &Arc<Algebra<F>>, seed: u64) -> Result<Bimodule<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ea = a.primitive_idempotents()?.to_vec();
    let eb = b.primitive_idempotents()?.to_vec();
    let count = rng.gen_range(1..=3);
    let mut out: Option<Bimodule<F>> = None;
    for _ in 0..count {
        let e = &ea[rng.gen_range(0..ea.len())];
        let g = &eb[rng.gen_range(0..eb.len())];
        let p = Bimodule::projective(a, e, b, g);
        out = Some(match out {
            None => p,
            Some(o) => o.direct_sum(&p),
        });
    }
    let m = out.expect("at least one summand");
    m.conjugate(&random_invertible(a.field(), m.dim(), &mut rng))
}

fn random_vec<F: Field>(f: &F, n: usize, rng: &mut ChaCha8Rng) -> Vector<F> {
    (0..n).map(|_| f.random(rng)).collect()
}

/// Indecomposable `A`-`B`-bimodules drawn from sub- and quotient bimodules
/// of `A (x)_k B` generated by random elements.
pub fn sample_indecomposable_bimodules<F: Field>(
    a: &Arc<Algebra<F>>,
    b: &Arc<Algebra<F>>,
    count: usize,
    seed: u64,
    opts: &KsOptions,
) -> Result<Vec<Bimodule<F>>> {
    let f = a.field();
    let free = Bimodule::projective(a, a.unit(), b, b.unit());
    let env = free.to_module();
    let rad = crate::module::radical_submodule(&free);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut round = 0u64;
    while out.len() < count {
        round += 1;
        if round > 64 * count as u64 + 64 {
            return Err(Error::Inconclusive("sampling produced too few indecomposables".into()));
        }
        let gens = rng.gen_range(1..=3);
        let in_radical = rng.gen_bool(0.5);
        let vs: Vec<Vector<F>> = (0..gens)
            .map(|_| if in_radical { rad.combine(&random_vec(f, rad.dim(), &mut rng)) } else { random_vec(f, free.dim(), &mut rng) })
            .collect();
        let sub = generated_subspace(&env, &vs);
        if sub.dim() == 0 || sub.dim() == free.dim() {
            continue;
        }
        let piece = if rng.gen_bool(0.5) { sub_bimodule(&free, &sub) } else { quotient_bimodule(&free, &sub) };
        let d = decompose(&piece, &KsOptions { seed: derive_seed(opts.seed, round), ..*opts })?;
        for s in d.summands {
            if out.len() < count {
                out.push(s.module);
            }
        }
    }
    Ok(out)
}

/// The sub-bimodule spanned by the envelope orbits of `vs`.
fn generated_subspace<F: Field>(env: &Module<F>, vs: &[Vector<F>]) -> Subspace<F> {
    let span: Vec<Vector<F>> = env.actions().iter().flat_map(|act| vs.iter().map(|v| act.mul_vec(v))).collect();
    Subspace::span(env.field(), env.dim(), &span)
}

/// The sub-bimodule on an invariant subspace, in the subspace basis.
fn sub_bimodule<F: Field>(m: &Bimodule<F>, sub: &Subspace<F>) -> Bimodule<F> {
    let f = m.field();
    let section = sub.basis_matrix();
    let retraction = Matrix::from_fn(f, sub.dim(), m.dim(), |r, c| if sub.pivots()[r] == c { f.one() } else { f.zero() });
    m.transport(&section, &retraction)
}

/// The quotient by an invariant subspace, on the free coordinates.
fn quotient_bimodule<F: Field>(m: &Bimodule<F>, sub: &Subspace<F>) -> Bimodule<F> {
    let f = m.field();
    let freecols = sub.free_columns();
    let k = freecols.len();
    let section = Matrix::from_fn(f, m.dim(), k, |r, c| if freecols[c] == r { f.one() } else { f.zero() });
    let cols: Vec<Vector<F>> = (0..m.dim()).map(|c| sub.quotient_coords(&crate::linalg::unit_vec(f, m.dim(), c))).collect();
    m.transport(&section, &Matrix::from_cols(f, k, &cols))
}

/// A left-right projective `A`-`B`-bimodule in a random basis: a proper
/// sub-bimodule of a projective bimodule generated by random elements when
/// one of the first 16 tries is left-right projective (flag `true`),
/// otherwise a sum of projectives (flag `false`).
pub fn sample_lrproj_bimodule<F: Field>(a: &Arc<Algebra<F>>, b: &Arc<Algebra<F>>, seed: u64) -> Result<(Bimodule<F>, bool)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = a.field();
    for _ in 0..16 {
        let p = sample_projective_bimodule(a, b, rng.gen())?;
        let env = p.to_module();
        let vs: Vec<Vector<F>> = (0..rng.gen_range(1..=2)).map(|_| random_vec(f, p.dim(), &mut rng)).collect();
        let sub = generated_subspace(&env, &vs);
        if sub.dim() == 0 || sub.dim() == p.dim() {
            continue;
        }
        let piece = sub_bimodule(&p, &sub);
        if piece.is_left_right_projective()? {
            let q = random_invertible(f, piece.dim(), &mut rng);
            return Ok((piece.conjugate(&q)?, true));
        }
    }
    Ok((sample_projective_bimodule(a, b, rng.gen())?, false))
}

/// Dimension of the top of a bimodule.
pub fn top_dim<F: Field>(m: &Bimodule<F>) -> usize {
    top(m).0.dim()
}

/// Outcome of the bounded witness search between two algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub a_ref: String,
    pub b_ref: String,
    pub max_dim: usize,
    pub pairs_tried: usize,
    pub a_geq_b_found: bool,
    pub b_geq_a_found: bool,
}

fn candidate_pool<F: Field>(
    a: &Arc<Algebra<F>>,
    b: &Arc<Algebra<F>>,
    max_dim: usize,
    seed: u64,
    opts: &KsOptions,
) -> Result<Vec<Bimodule<F>>> {
    let bop = Arc::new(opposite(b));
    let mut left = indecomposable_projectives(a)?;
    left.extend(simple_modules(a)?);
    let mut right = indecomposable_projectives(&bop)?;
    right.extend(simple_modules(&bop)?);
    let mut pool = Vec::new();
    for x in &left {
        for y in &right {
            if x.dim() * y.dim() <= max_dim {
                pool.push(Bimodule::outer_tensor(x, y, b));
            }
        }
    }
    for m in sample_indecomposable_bimodules(a, b, 8, seed, opts)? {
        if m.dim() <= max_dim {
            pool.push(m);
        }
    }
    Ok(pool)
}

/// Exhaustive search over small candidate witnesses in both directions:
/// outer products of indecomposable projectives and simples, and sampled
/// indecomposable bimodules, each of dimension at most `max_dim`.
pub fn comparability_search<F: Field>(
    a: &Arc<Algebra<F>>,
    b: &Arc<Algebra<F>>,
    max_dim: usize,
    opts: &KsOptions,
) -> Result<SearchReport> {
    let ms = candidate_pool(a, b, max_dim, derive_seed(opts.seed, 1), opts)?;
    let ns = candidate_pool(b, a, max_dim, derive_seed(opts.seed, 2), opts)?;
    let mut tried = 0;
    let mut found = [false, false];
    for m in &ms {
        for n in &ns {
            let w = JWitnessPair::new(m.clone(), n.with_algebras(b, a), 0)?;
            for (k, cand) in [w.clone(), w.reversed()].iter().enumerate() {
                if found[k] {
                    continue;
                }
                tried += 1;
                match verify_j_geq(cand, opts) {
                    Ok(_) => found[k] = true,
                    Err(Error::NotASummand(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(SearchReport {
        a_ref: a.provenance().to_string(),
        b_ref: b.provenance().to_string(),
        max_dim,
        pairs_tried: tried,
        a_geq_b_found: found[0],
        b_geq_a_found: found[1],
    })
}

#[cfg(test)]
mod tests;
