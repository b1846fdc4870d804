//! Bimodules, stored by their left and right action matrices, and the
//! functorial constructions on them.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{combine_matrices, enveloping, opposite, same_algebra, Algebra, AlgebraHom, Vector};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::krull_schmidt::{are_isomorphic, KsOptions};
use crate::linalg::{unit_vec, Subspace};
use crate::matrix::Matrix;
use crate::module::{hom_space, is_projective, projective_module, spin, Module, Rep};

/// An `A`-`B`-bimodule. Right actions are stored as the matrices of
/// `m -> m b`, so `right(b b') = right(b') right(b)`.
#[derive(Clone)]
pub struct Bimodule<F: Field> {
    left: Arc<Algebra<F>>,
    right: Arc<Algebra<F>>,
    dim: usize,
    left_actions: Vec<Matrix<F>>,
    right_actions: Vec<Matrix<F>>,
    envelope: OnceLock<Arc<Algebra<F>>>,
}

impl<F: Field> fmt::Debug for Bimodule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bimodule(dim {}, {:?} - {:?})", self.dim, self.left, self.right)
    }
}

impl<F: Field> Bimodule<F> {
    /// Checked constructor from one matrix per basis element on each side.
    pub fn new(
        left: Arc<Algebra<F>>,
        right: Arc<Algebra<F>>,
        left_actions: Vec<Matrix<F>>,
        right_actions: Vec<Matrix<F>>,
    ) -> Result<Self> {
        if left.field() != right.field() {
            return Err(Error::FieldMismatch(left.field().spec().to_string(), right.field().spec().to_string()));
        }
        if left_actions.len() != left.dim() || right_actions.len() != right.dim() {
            return Err(Error::DimensionMismatch("one action matrix per basis element expected".into()));
        }
        let dim = left_actions[0].rows();
        if left_actions.iter().chain(&right_actions).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("action matrices must be square of equal size".into()));
        }
        let m = Self::new_trusted(left, right, dim, left_actions, right_actions);
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_trusted(
        left: Arc<Algebra<F>>,
        right: Arc<Algebra<F>>,
        dim: usize,
        left_actions: Vec<Matrix<F>>,
        right_actions: Vec<Matrix<F>>,
    ) -> Self {
        Bimodule { left, right, dim, left_actions, right_actions, envelope: OnceLock::new() }
    }

    fn check(&self) -> Result<()> {
        let (a, b) = (&self.left, &self.right);
        if !self.act_left(a.unit()).is_identity() || !self.act_right(b.unit()).is_identity() {
            return Err(Error::NotAModule("unit does not act as the identity".into()));
        }
        for g in a.generators() {
            let lg = self.act_left(g);
            for j in 0..a.dim() {
                if lg.mul(&self.left_actions[j]) != self.act_left(&a.mul(g, &a.basis(j))) {
                    return Err(Error::NotAModule(format!("left action not multiplicative at {}", a.labels()[j])));
                }
            }
        }
        for g in b.generators() {
            let rg = self.act_right(g);
            for j in 0..b.dim() {
                if rg.mul(&self.right_actions[j]) != self.act_right(&b.mul(&b.basis(j), g)) {
                    return Err(Error::NotAModule(format!("right action not multiplicative at {}", b.labels()[j])));
                }
            }
        }
        for g in a.generators() {
            let lg = self.act_left(g);
            for h in b.generators() {
                let rh = self.act_right(h);
                if lg.mul(&rh) != rh.mul(&lg) {
                    return Err(Error::NotAModule("left and right actions do not commute".into()));
                }
            }
        }
        Ok(())
    }

    /// Build from actions of generating sets on each side.
    pub fn from_generator_actions(
        left: Arc<Algebra<F>>,
        right: Arc<Algebra<F>>,
        dim: usize,
        left_gens: &[(Vector<F>, Matrix<F>)],
        right_gens: &[(Vector<F>, Matrix<F>)],
    ) -> Result<Self> {
        let la = spin(&left, dim, left_gens, |g, x| left.mul(g, x), |rg, rx| rg.mul(rx))?;
        let ra = spin(&right, dim, right_gens, |g, x| right.mul(x, g), |rg, rx| rg.mul(rx))?;
        let m = Self::new_trusted(left, right, dim, la, ra);
        m.check()?;
        for (g, r) in left_gens {
            if m.act_left(g) != *r {
                return Err(Error::NotAModule("left generator actions are inconsistent".into()));
            }
        }
        for (g, r) in right_gens {
            if m.act_right(g) != *r {
                return Err(Error::NotAModule("right generator actions are inconsistent".into()));
            }
        }
        Ok(m)
    }

    pub fn left_algebra(&self) -> &Arc<Algebra<F>> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<Algebra<F>> {
        &self.right
    }

    pub fn left_actions(&self) -> &[Matrix<F>] {
        &self.left_actions
    }

    pub fn right_actions(&self) -> &[Matrix<F>] {
        &self.right_actions
    }

    pub fn act_left(&self, a: &[F::Elem]) -> Matrix<F> {
        combine_matrices(self.left.field(), &self.left_actions, a, self.dim)
    }

    pub fn act_right(&self, b: &[F::Elem]) -> Matrix<F> {
        combine_matrices(self.left.field(), &self.right_actions, b, self.dim)
    }

    /// The regular bimodule `A` with left and right multiplication.
    pub fn regular(a: &Arc<Algebra<F>>) -> Self {
        Self::new_trusted(a.clone(), a.clone(), a.dim(), a.left_matrices().to_vec(), a.right_matrices().to_vec())
    }

    /// `A` as an `A`-`B`-bimodule through an algebra map `phi: B -> A`
    /// acting on the right.
    pub fn regular_restricted_right(phi: &AlgebraHom<F>) -> Self {
        let a = phi.target().clone();
        let b = phi.source().clone();
        let right = (0..b.dim()).map(|i| a.right_matrix(&phi.apply(&b.basis(i)))).collect();
        Self::new_trusted(a.clone(), b, a.dim(), a.left_matrices().to_vec(), right)
    }

    /// `A` as a `B`-`A`-bimodule through `phi: B -> A` acting on the left.
    pub fn regular_restricted_left(phi: &AlgebraHom<F>) -> Self {
        let a = phi.target().clone();
        let b = phi.source().clone();
        let left = (0..b.dim()).map(|i| a.left_matrix(&phi.apply(&b.basis(i)))).collect();
        Self::new_trusted(b, a.clone(), a.dim(), left, a.right_matrices().to_vec())
    }

    pub fn zero(a: &Arc<Algebra<F>>, b: &Arc<Algebra<F>>) -> Self {
        let f = a.field();
        Self::new_trusted(
            a.clone(),
            b.clone(),
            0,
            vec![Matrix::zeros(f, 0, 0); a.dim()],
            vec![Matrix::zeros(f, 0, 0); b.dim()],
        )
    }

    /// The underlying left module.
    pub fn restrict_left(&self) -> Module<F> {
        Module::new_trusted(self.left.clone(), self.dim, self.left_actions.clone())
    }

    /// The underlying right module, as a left module over the opposite of
    /// the right algebra.
    pub fn restrict_right(&self) -> Module<F> {
        let op = Arc::new(opposite(&self.right));
        Module::new_trusted(op, self.dim, self.right_actions.clone())
    }

    /// The enveloping algebra `A (x) B^op`.
    pub fn envelope(&self) -> Arc<Algebra<F>> {
        self.envelope
            .get_or_init(|| Arc::new(enveloping(&self.left, &self.right).expect("enveloping algebra")))
            .clone()
    }

    /// The same bimodule as a left module over the enveloping algebra.
    pub fn to_module(&self) -> Module<F> {
        let env = self.envelope();
        let mut acts = Vec::with_capacity(env.dim());
        for l in &self.left_actions {
            for r in &self.right_actions {
                acts.push(l.mul(r));
            }
        }
        Module::new_trusted(env, self.dim, acts)
    }

    /// Change of basis `v -> p v`.
    pub fn conjugate(&self, p: &Matrix<F>) -> Result<Self> {
        let pinv = crate::linalg::inverse(p).ok_or_else(|| Error::InvalidInput("basis change is not invertible".into()))?;
        Ok(self.transport(&pinv, p))
    }

    /// `D(M) = Hom_k(M, k)` as a `B`-`A`-bimodule, `(b f a)(x) = f(a x b)`,
    /// in the dual basis.
    pub fn dual(&self) -> Self {
        let left = self.right_actions.iter().map(|m| m.transpose()).collect();
        let right = self.left_actions.iter().map(|m| m.transpose()).collect();
        Self::new_trusted(self.right.clone(), self.left.clone(), self.dim, left, right)
    }

    fn check_automorphism(a: &Arc<Algebra<F>>, g: &AlgebraHom<F>) -> Result<()> {
        if !same_algebra(g.source(), a) || !same_algebra(g.target(), a) {
            return Err(Error::NotAutomorphism("map is not an endomorphism of the acting algebra".into()));
        }
        if g.inverse().is_none() {
            return Err(Error::NotAutomorphism("map is not invertible".into()));
        }
        Ok(())
    }

    /// Left action twisted by an automorphism: `a . m = g(a) m`.
    pub fn twist_left(&self, g: &AlgebraHom<F>) -> Result<Self> {
        Self::check_automorphism(&self.left, g)?;
        let f = self.left.field();
        let left = (0..self.left.dim())
            .map(|i| combine_matrices(f, &self.left_actions, &g.matrix().col(i), self.dim))
            .collect();
        Ok(Self::new_trusted(self.left.clone(), self.right.clone(), self.dim, left, self.right_actions.clone()))
    }

    /// Right action twisted by an automorphism: `m . b = m g(b)`.
    pub fn twist_right(&self, g: &AlgebraHom<F>) -> Result<Self> {
        Self::check_automorphism(&self.right, g)?;
        let f = self.left.field();
        let right = (0..self.right.dim())
            .map(|i| combine_matrices(f, &self.right_actions, &g.matrix().col(i), self.dim))
            .collect();
        Ok(Self::new_trusted(self.left.clone(), self.right.clone(), self.dim, self.left_actions.clone(), right))
    }

    /// Outer tensor product `X (x)_k Y` of a left `A`-module and a right
    /// `B`-module (given as a left module over `B^op` with the same basis
    /// labels as `B`).
    pub fn outer_tensor(x: &Module<F>, y: &Module<F>, right: &Arc<Algebra<F>>) -> Self {
        let f = x.algebra().field();
        let iy = Matrix::identity(f, y.dim());
        let ix = Matrix::identity(f, x.dim());
        let left = x.actions().iter().map(|m| m.kron(&iy)).collect();
        let r = y.actions().iter().map(|m| ix.kron(m)).collect();
        Self::new_trusted(x.algebra().clone(), right.clone(), x.dim() * y.dim(), left, r)
    }

    /// The projective bimodule `A e (x)_k f B`.
    pub fn projective(a: &Arc<Algebra<F>>, e: &[F::Elem], b: &Arc<Algebra<F>>, fb: &[F::Elem]) -> Self {
        let (p, _) = projective_module(a, e);
        let bop = Arc::new(opposite(b));
        let (q, _) = projective_module(&bop, fb);
        Self::outer_tensor(&p, &q, b)
    }

    /// Whether the bimodule is projective over the enveloping algebra.
    pub fn is_projective(&self) -> Result<bool> {
        is_projective(&self.to_module())
    }

    pub fn is_left_projective(&self) -> Result<bool> {
        is_projective(&self.restrict_left())
    }

    pub fn is_right_projective(&self) -> Result<bool> {
        is_projective(&self.restrict_right())
    }

    pub fn is_left_right_projective(&self) -> Result<bool> {
        Ok(self.is_left_projective()? && self.is_right_projective()?)
    }
}

impl<F: Field> Rep<F> for Bimodule<F> {
    fn field(&self) -> &F {
        self.left.field()
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn frame_actions(&self) -> Vec<Matrix<F>> {
        let l: Vec<Matrix<F>> = self.left.idempotent_frame().iter().map(|e| self.act_left(e)).collect();
        let r: Vec<Matrix<F>> = self.right.idempotent_frame().iter().map(|e| self.act_right(e)).collect();
        l.iter().flat_map(|x| r.iter().map(move |y| x.mul(y))).collect()
    }

    fn generator_actions(&self) -> Vec<Matrix<F>> {
        let mut v: Vec<Matrix<F>> = self.left.generators().iter().map(|g| self.act_left(g)).collect();
        v.extend(self.right.generators().iter().map(|g| self.act_right(g)));
        v
    }

    fn radical_actions(&self) -> Vec<Matrix<F>> {
        let mut v: Vec<Matrix<F>> = self.left.radical().basis().iter().map(|r| self.act_left(r)).collect();
        v.extend(self.right.radical().basis().iter().map(|r| self.act_right(r)));
        v
    }

    fn transport(&self, section: &Matrix<F>, retraction: &Matrix<F>) -> Self {
        let k = section.cols();
        let t = |m: &Matrix<F>| retraction.mul(&m.mul(section));
        let out = Self::new_trusted(
            self.left.clone(),
            self.right.clone(),
            k,
            self.left_actions.iter().map(t).collect(),
            self.right_actions.iter().map(t).collect(),
        );
        if let Some(env) = self.envelope.get() {
            let _ = out.envelope.set(env.clone());
        }
        out
    }

    fn direct_sum(&self, other: &Self) -> Self {
        let f = self.field();
        let ds = |a: &Matrix<F>, b: &Matrix<F>| Matrix::block_diag(f, &[a.clone(), b.clone()]);
        let out = Self::new_trusted(
            self.left.clone(),
            self.right.clone(),
            self.dim + other.dim,
            self.left_actions.iter().zip(&other.left_actions).map(|(a, b)| ds(a, b)).collect(),
            self.right_actions.iter().zip(&other.right_actions).map(|(a, b)| ds(a, b)).collect(),
        );
        if let Some(env) = self.envelope.get() {
            let _ = out.envelope.set(env.clone());
        }
        out
    }

    fn same_acting_algebra(&self, other: &Self) -> bool {
        same_algebra(&self.left, &other.left) && same_algebra(&self.right, &other.right)
    }
}

/// `M (x)_B N` with the data needed to name its elements.
#[derive(Clone, Debug)]
pub struct TensorProduct<F: Field> {
    pub bimodule: Bimodule<F>,
    /// Quotient map `M (x)_k N -> M (x)_B N` (`k x dim M dim N`); the pure
    /// tensor `m_i (x) n_j` has index `i * dim N + j`.
    pub projection: Matrix<F>,
    /// Section picking, for each basis vector of the quotient, a pure
    /// tensor `m_i (x) n_j` mapping to it.
    pub section: Matrix<F>,
    /// Rank of the balancing map.
    pub balancing_rank: usize,
}

impl<F: Field> TensorProduct<F> {
    /// Class of the pure tensor `m_i (x) n_j`.
    pub fn pure(&self, i: usize, j: usize, dim_n: usize) -> Vector<F> {
        self.projection.col(i * dim_n + j)
    }
}

/// Tensor product over the middle algebra, computed as the cokernel of the
/// balancing map `m b (x) n - m (x) b n`.
pub fn tensor_over<F: Field>(m: &Bimodule<F>, n: &Bimodule<F>) -> Result<TensorProduct<F>> {
    if !same_algebra(m.right_algebra(), n.left_algebra()) {
        return Err(Error::AlgebraMismatch("right algebra of M differs from left algebra of N".into()));
    }
    let f = m.field().clone();
    let b = m.right_algebra();
    let (dm, dn) = (m.dim, n.dim);
    let total = dm * dn;
    let im = Matrix::identity(&f, dm);
    let in_ = Matrix::identity(&f, dn);
    let mut rels: Vec<Vector<F>> = Vec::new();
    let mut middle: Vec<Vector<F>> = b.generators().to_vec();
    middle.extend(b.idempotent_frame());
    for g in &middle {
        let bal = m.act_right(g).kron(&in_).sub(&im.kron(&n.act_left(g)));
        rels.extend(bal.col_vecs());
    }
    let w = Subspace::span(&f, total, &rels);
    let free = w.free_columns();
    let k = free.len();
    let proj_cols: Vec<Vector<F>> = (0..total).map(|c| w.quotient_coords(&unit_vec(&f, total, c))).collect();
    let projection = Matrix::from_cols(&f, k, &proj_cols);
    let section = Matrix::from_fn(&f, total, k, |i, j| if i == free[j] { f.one() } else { f.zero() });
    let induced = |big: &Matrix<F>| -> Matrix<F> {
        let cols: Vec<Vector<F>> = free.iter().map(|&c| w.quotient_coords(&big.col(c))).collect();
        Matrix::from_cols(&f, k, &cols)
    };
    let left = m.left_actions.iter().map(|a| induced(&a.kron(&in_))).collect();
    let right = n.right_actions.iter().map(|c| induced(&im.kron(c))).collect();
    let bimodule = Bimodule::new_trusted(m.left.clone(), n.right.clone(), k, left, right);
    Ok(TensorProduct { bimodule, projection, section, balancing_rank: w.dim() })
}

/// `Hom_A(M, A)` for an `A`-`B`-bimodule `M`, as a `B`-`A`-bimodule with
/// `(b f a)(x) = f(x b) a`, in the echelon basis of the Hom space.
pub fn hom_to_regular<F: Field>(m: &Bimodule<F>) -> Result<Bimodule<F>> {
    let a = m.left_algebra().clone();
    let f = a.field().clone();
    let h = hom_space(&m.restrict_left(), &Module::regular(&a))?;
    let k = h.dim();
    let coords = |x: &Matrix<F>| h.coords(x).expect("closed under the actions");
    let left = m
        .right_actions
        .iter()
        .map(|r| Matrix::from_cols(&f, k, &h.basis.iter().map(|fb| coords(&fb.mul(r))).collect::<Vec<_>>()))
        .collect();
    let right = a
        .right_matrices()
        .iter()
        .map(|r| Matrix::from_cols(&f, k, &h.basis.iter().map(|fb| coords(&r.mul(fb))).collect::<Vec<_>>()))
        .collect();
    Ok(Bimodule::new_trusted(m.right_algebra().clone(), a, k, left, right))
}

/// Result of the adjoint-pair test for `(M (x)_B -, N (x)_A -)`.
#[derive(Clone, Debug)]
pub struct AdjointPairWitness<F: Field> {
    pub holds: bool,
    pub left_projective: bool,
    /// Isomorphism `Hom_A(M, A) -> N` when one exists.
    pub isomorphism: Option<Matrix<F>>,
}

/// `M (x)_B -` is left adjoint to `N (x)_A -` iff `M` is left projective and
/// `Hom_A(M, A) = N` as bimodules.
pub fn is_adjoint_pair_witness<F: Field>(
    m: &Bimodule<F>,
    n: &Bimodule<F>,
    opts: &KsOptions,
) -> Result<AdjointPairWitness<F>> {
    if !same_algebra(m.left_algebra(), n.right_algebra()) || !same_algebra(m.right_algebra(), n.left_algebra()) {
        return Err(Error::AlgebraMismatch("adjoint pair sides".into()));
    }
    let left_projective = m.is_left_projective()?;
    if !left_projective {
        return Ok(AdjointPairWitness { holds: false, left_projective, isomorphism: None });
    }
    let h = hom_to_regular(m)?;
    let iso = are_isomorphic(&h, n, opts)?;
    Ok(AdjointPairWitness { holds: iso.is_some(), left_projective, isomorphism: iso })
}

/// Whether the regular bimodule is isomorphic to its dual.
pub fn is_symmetric<F: Field>(a: &Arc<Algebra<F>>, opts: &KsOptions) -> Result<bool> {
    let r = Bimodule::regular(a);
    Ok(are_isomorphic(&r, &r.dual(), opts)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::quiver::{algebra_from_quiver, linear_path_algebra, QuiverPresentation};
    use crate::field::Gfp;
    use crate::module::projective_cover;

    fn gf(p: u64) -> Gfp {
        Gfp::new(p).unwrap()
    }

    fn truncated(f: &Gfp, k: usize) -> Arc<Algebra<Gfp>> {
        let rel = vec!["x"; k].join("*");
        let q = QuiverPresentation::new().vertex("1").arrow("x", "1", "1").unwrap().relation(&rel).unwrap();
        Arc::new(algebra_from_quiver(f, &q).unwrap())
    }

    fn cyclic2(f: &Gfp) -> Arc<Algebra<Gfp>> {
        let q = QuiverPresentation::new()
            .vertices(["1", "2"])
            .arrow("a", "1", "2")
            .unwrap()
            .arrow("b", "2", "1")
            .unwrap()
            .relation("a*b")
            .unwrap()
            .relation("b*a")
            .unwrap();
        Arc::new(algebra_from_quiver(f, &q).unwrap())
    }

    #[test]
    fn regular_tensor_regular() {
        let f = gf(7);
        let a = cyclic2(&f);
        let r = Bimodule::regular(&a);
        let t = tensor_over(&r, &r).unwrap();
        assert_eq!(t.bimodule.dim(), a.dim());
        assert_eq!(t.balancing_rank, a.dim() * a.dim() - a.dim());
        // Multiplication a (x) b -> ab is the canonical isomorphism.
        let mult = Matrix::from_fn(&f, a.dim(), t.bimodule.dim(), |i, j| {
            let col = t.section.col(j);
            let k = col.iter().position(|c| *c == 1).unwrap();
            a.basis_product(k / a.dim(), k % a.dim()).iter().find(|(m, _)| *m == i).map(|(_, c)| *c).unwrap_or(0)
        });
        assert!(crate::module::intertwines(&t.bimodule, &r, &mult));
        assert_eq!(crate::linalg::rank(&mult), a.dim());
    }

    #[test]
    fn truncated_polynomials_over_a_longer_truncation() {
        // k[x]/x^2 (x) over k[x]/x^3 of k[x]/x^2, both sides through the
        // surjection.
        let f = gf(5);
        let b = truncated(&f, 3);
        let x2 = b.parse_element("x*x").unwrap();
        let (d, phi) = crate::algebra::quotient(&b, &[x2]).unwrap();
        let m = Bimodule::regular_restricted_right(&phi);
        let n = Bimodule::regular_restricted_left(&phi);
        let t = tensor_over(&m, &n).unwrap();
        assert_eq!(t.bimodule.dim(), 2);
        let opts = KsOptions::default();
        assert!(are_isomorphic(&t.bimodule, &Bimodule::regular(&d), &opts).unwrap().is_some());
    }

    #[test]
    fn tensor_dimension_formula_and_units() {
        let f = gf(7);
        let a = linear_path_algebra(&f, 2).map(Arc::new).unwrap();
        let p = Bimodule::projective(&a, &a.primitive_idempotents().unwrap()[0], &a, &a.primitive_idempotents().unwrap()[1]);
        let r = Bimodule::regular(&a);
        let opts = KsOptions::default();
        for (x, y) in [(&r, &p), (&p, &r), (&p, &p)] {
            let t = tensor_over(x, y).unwrap();
            assert_eq!(t.bimodule.dim(), x.dim() * y.dim() - t.balancing_rank);
        }
        let left_unit = tensor_over(&r, &p).unwrap().bimodule;
        let right_unit = tensor_over(&p, &r).unwrap().bimodule;
        assert!(are_isomorphic(&left_unit, &p, &opts).unwrap().is_some());
        assert!(are_isomorphic(&right_unit, &p, &opts).unwrap().is_some());
    }

    #[test]
    fn duality() {
        let f = gf(7);
        let a = cyclic2(&f);
        let r = Bimodule::regular(&a);
        let dd = r.dual().dual();
        assert_eq!(dd.left_actions(), r.left_actions());
        assert_eq!(dd.right_actions(), r.right_actions());
        let id = AlgebraHom::identity(a.clone());
        let t = r.twist_left(&id).unwrap();
        assert_eq!(t.left_actions(), r.left_actions());
    }

    #[test]
    fn symmetric_and_self_injective() {
        let f = gf(7);
        let opts = KsOptions::default();
        for k in 2..=4 {
            let a = truncated(&f, k);
            assert!(is_symmetric(&a, &opts).unwrap());
            assert!(crate::module::is_self_injective(&a).unwrap());
        }
        let l = cyclic2(&f);
        assert!(crate::module::is_self_injective(&l).unwrap());
        assert!(!is_symmetric(&l, &opts).unwrap());
        let a2 = linear_path_algebra(&f, 2).map(Arc::new).unwrap();
        assert!(!crate::module::is_self_injective(&a2).unwrap());
        assert!(!is_symmetric(&a2, &opts).unwrap());
    }

    #[test]
    fn projective_cover_of_regular_bimodule() {
        let f = gf(7);
        for a in [linear_path_algebra(&f, 2).map(Arc::new).unwrap(), truncated(&f, 2)] {
            let r = Bimodule::regular(&a);
            let cover = projective_cover(&r.to_module()).unwrap();
            let idem = a.primitive_idempotents().unwrap();
            let expected: usize = idem.iter().map(|e| Bimodule::projective(&a, e, &a, e).dim()).sum();
            assert_eq!(cover.projective.dim(), expected);
            assert_eq!(cover.summands.len(), idem.len());
            assert!(r.is_left_right_projective().unwrap());
        }
    }

    #[test]
    fn projective_bimodules() {
        let f = gf(7);
        let a = linear_path_algebra(&f, 2).map(Arc::new).unwrap();
        let b = cyclic2(&f);
        for e in a.primitive_idempotents().unwrap() {
            for g in b.primitive_idempotents().unwrap() {
                let p = Bimodule::projective(&a, e, &b, g);
                p.check().unwrap();
                assert!(p.is_projective().unwrap());
                assert!(p.is_left_right_projective().unwrap());
            }
        }
        assert!(!Bimodule::regular(&a).is_projective().unwrap());
    }

    #[test]
    fn regular_pair_is_adjoint() {
        let f = gf(7);
        let a = cyclic2(&f);
        let r = Bimodule::regular(&a);
        let opts = KsOptions::default();
        let h = hom_to_regular(&r).unwrap();
        assert!(are_isomorphic(&h, &r, &opts).unwrap().is_some());
        let w = is_adjoint_pair_witness(&r, &r, &opts).unwrap();
        assert!(w.holds && w.isomorphism.is_some());
        let d = r.dual();
        assert!(!is_adjoint_pair_witness(&r, &d, &opts).unwrap().holds);
    }

    #[test]
    fn tensor_is_associative_on_small_bimodules() {
        let f = gf(5);
        let a = linear_path_algebra(&f, 2).map(Arc::new).unwrap();
        let idem = a.primitive_idempotents().unwrap().to_vec();
        let opts = KsOptions::default();
        let mut pool = vec![Bimodule::regular(&a), Bimodule::regular(&a).dual()];
        for e in &idem {
            for g in &idem {
                pool.push(Bimodule::projective(&a, e, &a, g));
            }
        }
        for x in &pool[..3] {
            for y in &pool[1..4] {
                for z in &pool[2..] {
                    let l = tensor_over(&tensor_over(x, y).unwrap().bimodule, z).unwrap().bimodule;
                    let r = tensor_over(x, &tensor_over(y, z).unwrap().bimodule).unwrap().bimodule;
                    assert_eq!(l.dim(), r.dim());
                    assert!(are_isomorphic(&l, &r, &opts).unwrap().is_some());
                }
            }
        }
    }
}
