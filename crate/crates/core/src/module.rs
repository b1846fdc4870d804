//! Left modules over an algebra, given by one action matrix per basis
//! element, and the operations shared by modules and bimodules through the
//! [`Rep`] trait.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{combine_matrices, same_algebra, Algebra, Vector};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{inverse, is_zero_vec, nullspace, rank, Subspace};
use crate::matrix::Matrix;

/// Common interface of modules and bimodules: a vector space with a family
/// of commuting-structure actions, enough to compute Hom spaces, tops and
/// decompositions.
pub trait Rep<F: Field>: Clone + Send + Sync + Sized {
    fn field(&self) -> &F;
    fn dim(&self) -> usize;
    /// Actions of a complete set of orthogonal idempotents of the acting
    /// algebra (possibly just the identity).
    fn frame_actions(&self) -> Vec<Matrix<F>>;
    /// Actions of elements which, with the frame, generate the acting
    /// algebra. Intertwiners are exactly the maps commuting with these.
    fn generator_actions(&self) -> Vec<Matrix<F>>;
    /// Actions whose images span `rad * M`.
    fn radical_actions(&self) -> Vec<Matrix<F>>;
    /// Restrict to the summand or quotient described by a section
    /// `S: dim x k` and retraction `R: k x dim`: actions become `R a S`.
    /// The caller guarantees the result is a module (image of `S`
    /// invariant, or kernel of `R` invariant).
    fn transport(&self, section: &Matrix<F>, retraction: &Matrix<F>) -> Self;
    fn direct_sum(&self, other: &Self) -> Self;
    fn same_acting_algebra(&self, other: &Self) -> bool;

    fn zero_like(&self) -> Self {
        let f = self.field();
        self.transport(&Matrix::zeros(f, self.dim(), 0), &Matrix::zeros(f, 0, self.dim()))
    }
}

/// A left module over an algebra.
#[derive(Clone)]
pub struct Module<F: Field> {
    algebra: Arc<Algebra<F>>,
    dim: usize,
    actions: Vec<Matrix<F>>,
    gens: OnceLock<Vec<Matrix<F>>>,
}

impl<F: Field> fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {} over {:?})", self.dim, self.algebra)
    }
}

impl<F: Field> PartialEq for Module<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && same_algebra(&self.algebra, &other.algebra) && self.actions == other.actions
    }
}

/// Computes the images of all basis elements from images of generators by
/// closing under multiplication. `mul(g, x)` multiplies algebra elements
/// and `act(rho_g, rho_x)` combines their actions in the matching order.
pub(crate) fn spin<F: Field>(
    algebra: &Algebra<F>,
    dim: usize,
    gens: &[(Vector<F>, Matrix<F>)],
    mul: impl Fn(&Vector<F>, &Vector<F>) -> Vector<F>,
    act: impl Fn(&Matrix<F>, &Matrix<F>) -> Matrix<F>,
) -> Result<Vec<Matrix<F>>> {
    let f = algebra.field();
    let n = algebra.dim();
    let mut xs = vec![algebra.unit().clone()];
    let mut rs = vec![Matrix::identity(f, dim)];
    let mut span = Subspace::span(f, n, &xs);
    let mut frontier = vec![0usize];
    while let Some(k) = frontier.pop() {
        for (g, rg) in gens {
            if rg.rows() != dim || rg.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix is {}x{}, module has dimension {dim}",
                    rg.rows(),
                    rg.cols()
                )));
            }
            let x = mul(g, &xs[k]);
            if !span.contains(&x) {
                span = span.sum(&Subspace::span(f, n, &[x.clone()]));
                rs.push(act(rg, &rs[k]));
                xs.push(x);
                frontier.push(xs.len() - 1);
            }
        }
    }
    if span.dim() != n {
        return Err(Error::NotAModule("given elements do not generate the algebra".into()));
    }
    let xinv = inverse(&Matrix::from_cols(f, n, &xs)).expect("independent spanning set");
    Ok((0..n)
        .map(|i| {
            let mut m = Matrix::zeros(f, dim, dim);
            for (k, r) in rs.iter().enumerate() {
                m.add_scaled(xinv.get(k, i), r);
            }
            m
        })
        .collect())
}

impl<F: Field> Module<F> {
    /// Checked constructor from one matrix per basis element.
    pub fn new(algebra: Arc<Algebra<F>>, actions: Vec<Matrix<F>>) -> Result<Self> {
        if actions.len() != algebra.dim() {
            return Err(Error::DimensionMismatch("one action matrix per basis element expected".into()));
        }
        let dim = actions.first().map(|m| m.rows()).unwrap_or(0);
        if actions.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("action matrices must be square of equal size".into()));
        }
        let m = Module { algebra, dim, actions, gens: OnceLock::new() };
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_trusted(algebra: Arc<Algebra<F>>, dim: usize, actions: Vec<Matrix<F>>) -> Self {
        Module { algebra, dim, actions, gens: OnceLock::new() }
    }

    fn check(&self) -> Result<()> {
        let a = &self.algebra;
        let f = a.field();
        if !self.act(a.unit()).is_identity() {
            return Err(Error::NotAModule("unit does not act as the identity".into()));
        }
        for g in a.generators() {
            let rg = self.act(g);
            for j in 0..a.dim() {
                let lhs = rg.mul(&self.actions[j]);
                let rhs = self.act(&a.mul(g, &a.basis(j)));
                if lhs != rhs {
                    return Err(Error::NotAModule(format!(
                        "action not multiplicative at ({}) * {}",
                        a.format_element(g),
                        a.labels()[j]
                    )));
                }
            }
        }
        let _ = f;
        Ok(())
    }

    /// Build from the actions of a generating set of elements.
    pub fn from_generator_actions(algebra: Arc<Algebra<F>>, dim: usize, gens: &[(Vector<F>, Matrix<F>)]) -> Result<Self> {
        let actions = spin(&algebra, dim, gens, |g, x| algebra.mul(g, x), |rg, rx| rg.mul(rx))?;
        let m = Module { algebra, dim, actions, gens: OnceLock::new() };
        m.check()?;
        for (g, rg) in gens {
            if m.act(g) != *rg {
                return Err(Error::NotAModule("generator actions are inconsistent".into()));
            }
        }
        Ok(m)
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.actions
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, a: &[F::Elem]) -> Matrix<F> {
        combine_matrices(self.algebra.field(), &self.actions, a, self.dim)
    }

    /// The left regular module.
    pub fn regular(a: &Arc<Algebra<F>>) -> Self {
        Module::new_trusted(a.clone(), a.dim(), a.left_matrices().to_vec())
    }

    /// The dual `D(A_A)` of the right regular module, a left module via
    /// `(a f)(x) = f(x a)`.
    pub fn dual_right_regular(a: &Arc<Algebra<F>>) -> Self {
        let acts = a.right_matrices().iter().map(|m| m.transpose()).collect();
        Module::new_trusted(a.clone(), a.dim(), acts)
    }

    pub fn zero(a: &Arc<Algebra<F>>) -> Self {
        let f = a.field();
        Module::new_trusted(a.clone(), 0, vec![Matrix::zeros(f, 0, 0); a.dim()])
    }

    /// Change of basis `v -> p v`.
    pub fn conjugate(&self, p: &Matrix<F>) -> Result<Self> {
        let pinv = inverse(p).ok_or_else(|| Error::InvalidInput("basis change is not invertible".into()))?;
        Ok(self.transport(&pinv, p))
    }

    /// Annihilator `{a : a M = 0}` as a subspace of the algebra.
    pub fn annihilator(&self) -> Subspace<F> {
        let f = self.algebra.field();
        let n = self.algebra.dim();
        if self.dim == 0 {
            return Subspace::full(f, n);
        }
        let cols: Vec<Vector<F>> = self.actions.iter().map(|m| m.data().to_vec()).collect();
        let m = Matrix::from_cols(f, self.dim * self.dim, &cols);
        Subspace::span(f, n, &nullspace(&m))
    }

    pub fn is_faithful(&self) -> bool {
        self.annihilator().dim() == 0
    }
}

impl<F: Field> Rep<F> for Module<F> {
    fn field(&self) -> &F {
        self.algebra.field()
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn frame_actions(&self) -> Vec<Matrix<F>> {
        self.algebra.idempotent_frame().iter().map(|e| self.act(e)).collect()
    }

    fn generator_actions(&self) -> Vec<Matrix<F>> {
        self.gens
            .get_or_init(|| self.algebra.generators().iter().map(|g| self.act(g)).collect())
            .clone()
    }

    fn radical_actions(&self) -> Vec<Matrix<F>> {
        self.algebra.radical().basis().iter().map(|r| self.act(r)).collect()
    }

    fn transport(&self, section: &Matrix<F>, retraction: &Matrix<F>) -> Self {
        let k = section.cols();
        let actions = self.actions.iter().map(|m| retraction.mul(&m.mul(section))).collect();
        Module::new_trusted(self.algebra.clone(), k, actions)
    }

    fn direct_sum(&self, other: &Self) -> Self {
        let f = self.field();
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| Matrix::block_diag(f, &[a.clone(), b.clone()]))
            .collect();
        Module::new_trusted(self.algebra.clone(), self.dim + other.dim, actions)
    }

    fn same_acting_algebra(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra)
    }
}

/// A linear map between modules; the constructor checks that it
/// intertwines the actions.
#[derive(Clone, Debug)]
pub struct ModuleMap<F: Field, R: Rep<F>> {
    pub source: R,
    pub target: R,
    pub matrix: Matrix<F>,
}

pub fn intertwines<F: Field, R: Rep<F>>(x: &R, y: &R, m: &Matrix<F>) -> bool {
    let gx = x.generator_actions();
    let gy = y.generator_actions();
    let fx = x.frame_actions();
    let fy = y.frame_actions();
    gx.iter().zip(&gy).chain(fx.iter().zip(&fy)).all(|(a, b)| b.mul(m) == m.mul(a))
}

impl<F: Field, R: Rep<F>> ModuleMap<F, R> {
    pub fn new(source: R, target: R, matrix: Matrix<F>) -> Result<Self> {
        if !source.same_acting_algebra(&target) {
            return Err(Error::AlgebraMismatch("module map between different algebras".into()));
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch("module map shape".into()));
        }
        if !intertwines(&source, &target, &matrix) {
            return Err(Error::InvalidInput("matrix does not intertwine the actions".into()));
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub fn is_surjective(&self) -> bool {
        rank(&self.matrix) == self.target.dim()
    }

    pub fn kernel(&self) -> Subspace<F> {
        Subspace::kernel(&self.matrix)
    }
}

/// Basis of the space of intertwiners `x -> y`, in reduced echelon form
/// of the row-major flattened matrices.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Matrix<F>>,
    space: Subspace<F>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an intertwiner in the basis.
    pub fn coords(&self, m: &Matrix<F>) -> Option<Vector<F>> {
        self.space.coords(m.data())
    }

    pub fn combine(&self, c: &[F::Elem]) -> Matrix<F> {
        Matrix::new(self.space.field().clone(), self.target_dim, self.source_dim, self.space.combine(c))
    }
}

fn frame_blocks<F: Field>(f: &F, frame: &[Matrix<F>], dim: usize) -> (Vec<Matrix<F>>, Vec<Matrix<F>>) {
    // Bases of e_k M and the matching coordinate projections.
    let sections: Vec<Matrix<F>> = frame
        .iter()
        .map(|e| Subspace::column_space(e).basis_matrix())
        .collect();
    let mut all = Matrix::zeros(f, dim, 0);
    for s in &sections {
        all = all.hstack(s);
    }
    let inv = inverse(&all).expect("frame idempotents decompose the space");
    let mut retractions = Vec::new();
    let mut r0 = 0;
    for s in &sections {
        let idx: Vec<usize> = (r0..r0 + s.cols()).collect();
        retractions.push(inv.select_rows(&idx));
        r0 += s.cols();
    }
    (sections, retractions)
}

/// Space of intertwiners `x -> y`.
pub fn hom_space<F: Field, R: Rep<F>>(x: &R, y: &R) -> Result<HomSpace<F>> {
    if !x.same_acting_algebra(y) {
        return Err(Error::AlgebraMismatch("hom space between modules over different algebras".into()));
    }
    let f = x.field().clone();
    let (dx, dy) = (x.dim(), y.dim());
    let total = dx * dy;
    let mk = |basis: Vec<Matrix<F>>| {
        let flat: Vec<Vector<F>> = basis.iter().map(|m| m.data().to_vec()).collect();
        let space = Subspace::span(&f, total, &flat);
        let basis = space
            .basis()
            .iter()
            .map(|v| Matrix::new(f.clone(), dy, dx, v.clone()))
            .collect();
        HomSpace { source_dim: dx, target_dim: dy, basis, space }
    };
    if dx == 0 || dy == 0 {
        return Ok(mk(Vec::new()));
    }
    // Start from maps respecting the idempotent frame: blockwise
    // e_k x -> e_k y.
    let (sx, rx) = frame_blocks(&f, &x.frame_actions(), dx);
    let (sy, _) = frame_blocks(&f, &y.frame_actions(), dy);
    let mut basis: Vec<Matrix<F>> = Vec::new();
    for k in 0..sx.len() {
        for a in 0..sy[k].cols() {
            let col = Matrix::from_cols(&f, dy, &[sy[k].col(a)]);
            for b in 0..rx[k].rows() {
                let row = rx[k].select_rows(&[b]);
                basis.push(col.mul(&row));
            }
        }
    }
    for (gx, gy) in x.generator_actions().iter().zip(y.generator_actions().iter()) {
        if basis.is_empty() {
            break;
        }
        let cols: Vec<Vector<F>> = basis
            .iter()
            .map(|m| gy.mul(m).sub(&m.mul(gx)).into_data())
            .collect();
        if cols.iter().all(|c| is_zero_vec(&f, c)) {
            continue;
        }
        let eqs = Matrix::from_cols(&f, total, &cols);
        let combos = nullspace(&eqs);
        basis = combos
            .iter()
            .map(|c| {
                let mut m = Matrix::zeros(&f, dy, dx);
                for (ci, b) in c.iter().zip(&basis) {
                    m.add_scaled(ci, b);
                }
                m
            })
            .collect();
    }
    Ok(mk(basis))
}

/// `rad * M` as a subspace.
pub fn radical_submodule<F: Field, R: Rep<F>>(m: &R) -> Subspace<F> {
    let f = m.field();
    let mut vs = Vec::new();
    for a in m.radical_actions() {
        vs.extend(a.col_vecs());
    }
    Subspace::span(f, m.dim(), &vs)
}

/// Image of a subspace under all radical actions.
fn radical_times<F: Field, R: Rep<F>>(m: &R, acts: &[Matrix<F>], s: &Subspace<F>) -> Subspace<F> {
    let mut vs = Vec::new();
    for a in acts {
        for v in s.basis() {
            vs.push(a.mul_vec(v));
        }
    }
    Subspace::span(m.field(), m.dim(), &vs)
}

/// The top `M / rad M`, with the quotient map (`k x dim M`) and the
/// section picking standard basis vectors of a complement.
pub fn top<F: Field, R: Rep<F>>(m: &R) -> (R, Matrix<F>, Matrix<F>) {
    let f = m.field();
    let rad = radical_submodule(m);
    let free = rad.free_columns();
    let k = free.len();
    let proj_cols: Vec<Vector<F>> = (0..m.dim())
        .map(|i| rad.quotient_coords(&crate::linalg::unit_vec(f, m.dim(), i)))
        .collect();
    let proj = Matrix::from_cols(f, k, &proj_cols);
    let section = Matrix::from_fn(f, m.dim(), k, |i, j| if i == free[j] { f.one() } else { f.zero() });
    (m.transport(&section, &proj), proj, section)
}

/// Dimensions of `M, rad M, rad^2 M, ...` ending with 0.
pub fn radical_series<F: Field, R: Rep<F>>(m: &R) -> Vec<usize> {
    let acts = m.radical_actions();
    let mut cur = Subspace::full(m.field(), m.dim());
    let mut dims = vec![cur.dim()];
    while cur.dim() > 0 {
        let next = radical_times(m, &acts, &cur);
        assert!(next.dim() < cur.dim(), "radical acts non-nilpotently");
        cur = next;
        dims.push(cur.dim());
    }
    if dims.len() == 1 {
        dims.push(0);
    }
    dims
}

/// The indecomposable projective `A e` for a primitive idempotent `e`,
/// with basis the reduced echelon basis of the left ideal.
pub fn projective_module<F: Field>(a: &Arc<Algebra<F>>, e: &[F::Elem]) -> (Module<F>, Subspace<F>) {
    let f = a.field();
    let n = a.dim();
    let ideal = a.corner(a.unit(), e);
    let basis = ideal.basis().to_vec();
    let acts = (0..n)
        .map(|i| {
            let cols: Vec<Vector<F>> = basis
                .iter()
                .map(|v| ideal.coords(&a.mul(&a.basis(i), v)).expect("left ideal"))
                .collect();
            Matrix::from_cols(f, basis.len(), &cols)
        })
        .collect();
    (Module::new_trusted(a.clone(), basis.len(), acts), ideal)
}

/// The indecomposable projectives, one per isomorphism class.
pub fn indecomposable_projectives<F: Field>(a: &Arc<Algebra<F>>) -> Result<Vec<Module<F>>> {
    let idem = a.primitive_idempotents()?;
    let (_, reps) = a.projective_classes()?;
    Ok(reps.iter().map(|&r| projective_module(a, &idem[r]).0).collect())
}

/// The simple modules `top(A e)`, one per isomorphism class.
pub fn simple_modules<F: Field>(a: &Arc<Algebra<F>>) -> Result<Vec<Module<F>>> {
    Ok(indecomposable_projectives(a)?.iter().map(|p| top(p).0).collect())
}

/// A projective cover `P -> M` with `P` a direct sum of indecomposable
/// projectives `A e` and kernel inside `rad P`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F: Field> {
    pub projective: Module<F>,
    pub cover: Matrix<F>,
    /// For each summand of `P`: the idempotent index and its dimension.
    pub summands: Vec<(usize, usize)>,
}

pub fn projective_cover<F: Field>(m: &Module<F>) -> Result<ProjectiveCover<F>> {
    let a = m.algebra().clone();
    let f = a.field().clone();
    let idem = a.primitive_idempotents()?.to_vec();
    let (_, reps) = a.projective_classes()?;
    let (top_m, proj, _) = top(m);
    let mut generated = Subspace::zero(&f, top_m.dim());
    let mut summands = Vec::new();
    let mut blocks: Vec<Module<F>> = Vec::new();
    let mut cover_cols: Vec<Vector<F>> = Vec::new();
    for &r in &reps {
        let e = &idem[r];
        let em = m.act(e);
        for v in Subspace::column_space(&em).basis() {
            if generated.dim() == top_m.dim() {
                break;
            }
            let images: Vec<Vector<F>> = m.actions().iter().map(|act| proj.mul_vec(&act.mul_vec(v))).collect();
            let gen_v = Subspace::span(&f, top_m.dim(), &images);
            if gen_v.is_subspace_of(&generated) {
                continue;
            }
            generated = generated.sum(&gen_v);
            let (p, ideal) = projective_module(&a, e);
            for w in ideal.basis() {
                cover_cols.push(m.act(w).mul_vec(v));
            }
            summands.push((r, p.dim));
            blocks.push(p);
        }
    }
    let projective = blocks
        .iter()
        .skip(1)
        .fold(blocks.first().cloned().unwrap_or_else(|| Module::zero(&a)), |acc, b| acc.direct_sum(b));
    let cover = Matrix::from_cols(&f, m.dim(), &cover_cols);
    let cover = if cover_cols.is_empty() { Matrix::zeros(&f, m.dim(), 0) } else { cover };
    if rank(&cover) != m.dim() {
        return Err(Error::NonSplitResidueField("projective cover failed to be surjective".into()));
    }
    let ker = Subspace::kernel(&cover);
    assert!(
        ker.is_subspace_of(&radical_submodule(&projective)),
        "projective cover is not minimal"
    );
    debug_assert!(intertwines(&projective, m, &cover));
    Ok(ProjectiveCover { projective, cover, summands })
}

pub fn is_projective<F: Field>(m: &Module<F>) -> Result<bool> {
    Ok(projective_cover(m)?.projective.dim() == m.dim())
}

/// Whether `D(A_A)` is projective as a left module.
pub fn is_self_injective<F: Field>(a: &Arc<Algebra<F>>) -> Result<bool> {
    is_projective(&Module::dual_right_regular(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::quiver::{algebra_from_quiver, QuiverPresentation};
    use crate::field::Gfp;

    fn a2(f: &Gfp) -> Arc<Algebra<Gfp>> {
        let q = QuiverPresentation::new().vertices(["1", "2"]).arrow("a", "1", "2").unwrap();
        Arc::new(algebra_from_quiver(f, &q).unwrap())
    }

    #[test]
    fn hom_between_projectives_matches_corners() {
        let f = Gfp::new(7).unwrap();
        let a = a2(&f);
        let idem = a.primitive_idempotents().unwrap().to_vec();
        for i in 0..2 {
            for j in 0..2 {
                let (pi, _) = projective_module(&a, &idem[i]);
                let (pj, _) = projective_module(&a, &idem[j]);
                let h = hom_space(&pi, &pj).unwrap();
                assert_eq!(h.dim(), a.corner(&idem[i], &idem[j]).dim());
            }
        }
    }

    #[test]
    fn identity_is_an_endomorphism() {
        let f = Gfp::new(7).unwrap();
        let a = a2(&f);
        let m = Module::regular(&a);
        let h = hom_space(&m, &m).unwrap();
        assert!(h.coords(&Matrix::identity(&f, 3)).is_some());
    }

    #[test]
    fn simple_source_is_not_projective() {
        let f = Gfp::new(7).unwrap();
        let a = a2(&f);
        let simples = simple_modules(&a).unwrap();
        assert_eq!(simples.len(), 2);
        // Vertex 1 is the source of the arrow: P1 = A e1 has dimension 2.
        assert!(!is_projective(&simples[0]).unwrap());
        assert!(is_projective(&simples[1]).unwrap());
        assert!(is_projective(&Module::regular(&a)).unwrap());
        assert!(!is_self_injective(&a).unwrap());
    }

    #[test]
    fn radical_series_of_truncated_polynomials() {
        let f = Gfp::new(7).unwrap();
        let q = QuiverPresentation::new().vertex("1").arrow("x", "1", "1").unwrap().relation("x*x*x").unwrap();
        let a = Arc::new(algebra_from_quiver(&f, &q).unwrap());
        assert_eq!(radical_series(&Module::regular(&a)), vec![3, 2, 1, 0]);
        assert_eq!(top(&Module::regular(&a)).0.dim(), 1);
        assert!(is_self_injective(&a).unwrap());
    }
}
