//! Gaussian elimination and the derived kernels: rank, nullspace, solving,
//! inversion and subspaces in reduced echelon form.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Reduce `data` (row-major, `rows` x `cols`) to reduced row echelon form
/// in place using first-nonzero pivoting. Only the first `pivot_cols`
/// columns are eligible as pivot columns. Returns the pivot columns.
pub(crate) fn rref_in_place<F: Field>(
    f: &F,
    data: &mut [F::Elem],
    rows: usize,
    cols: usize,
    pivot_cols: usize,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&data[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(&data[r * cols + c]).unwrap();
        if !f.is_one(&inv) {
            for j in c..cols {
                let v = f.mul(&data[r * cols + j], &inv);
                data[r * cols + j] = v;
            }
        }
        let (before, rest) = data.split_at_mut(r * cols);
        let (prow, after) = rest.split_at_mut(cols);
        let eliminate = |row: &mut [F::Elem]| {
            let factor = row[c].clone();
            if f.is_zero(&factor) {
                return;
            }
            for j in c..cols {
                if !f.is_zero(&prow[j]) {
                    f.sub_mul_assign(&mut row[j], &factor, &prow[j]);
                }
            }
        };
        for row in before.chunks_mut(cols) {
            eliminate(row);
        }
        for row in after.chunks_mut(cols) {
            eliminate(row);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row echelon form and pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut data = m.data().to_vec();
    let piv = rref_in_place(m.field(), &mut data, rows, cols, cols);
    (Matrix::new(m.field().clone(), rows, cols, data), piv)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rref(m).1.len()
}

/// Nullspace basis read off the reduced echelon form: one vector per free
/// column, with a 1 in that column and zeros in the other free columns.
fn nullspace_from_rref<F: Field>(r: &Matrix<F>, pivots: &[usize]) -> Vec<Vec<F::Elem>> {
    let f = r.field();
    let cols = r.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(r.get(i, free));
        }
        out.push(v);
    }
    out
}

pub fn rank_nullspace<F: Field>(m: &Matrix<F>) -> (usize, Vec<Vec<F::Elem>>) {
    let (r, piv) = rref(m);
    let ns = nullspace_from_rref(&r, &piv);
    (piv.len(), ns)
}

pub fn nullspace<F: Field>(m: &Matrix<F>) -> Vec<Vec<F::Elem>> {
    rank_nullspace(m).1
}

/// Solve `a x = b`. Returns the solution with all free variables zero, or
/// `None` if the system is inconsistent.
pub fn solve<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<Option<Matrix<F>>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "solve: {} rows vs {} rows",
            a.rows(),
            b.rows()
        )));
    }
    let f = a.field();
    let (n, k) = (a.cols(), b.cols());
    let aug = a.hstack(b);
    let rows = aug.rows();
    let cols = n + k;
    let mut data = aug.into_data();
    let piv = rref_in_place(f, &mut data, rows, cols, n);
    // Inconsistent iff a zero row of the left block has a nonzero right part.
    for i in piv.len()..rows {
        if data[i * cols + n..(i + 1) * cols].iter().any(|x| !f.is_zero(x)) {
            return Ok(None);
        }
    }
    let mut x = Matrix::zeros(f, n, k);
    for (i, &p) in piv.iter().enumerate() {
        for j in 0..k {
            x.set(p, j, data[i * cols + n + j].clone());
        }
    }
    Ok(Some(x))
}

pub fn inverse<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let id = Matrix::identity(m.field(), n);
    let x = solve(m, &id).ok()??;
    if rank(m) == n {
        Some(x)
    } else {
        None
    }
}

pub fn is_zero_vec<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

pub fn vec_add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vec_sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vec_scale<F: Field>(f: &F, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|x| f.mul(c, x)).collect()
}

/// `acc += c * v`.
pub fn axpy<F: Field>(f: &F, acc: &mut [F::Elem], c: &F::Elem, v: &[F::Elem]) {
    if f.is_zero(c) {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !f.is_zero(x) {
            f.add_mul_assign(a, c, x);
        }
    }
}

pub fn unit_vec<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// A subspace of `F^n` stored by its reduced echelon basis.
///
/// The coordinates of a member `v` in the stored basis are simply the
/// entries of `v` at the pivot columns; the residue of any vector modulo the
/// subspace has zeros in the pivot columns, so its non-pivot entries give
/// coordinates in the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace { field: field.clone(), ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit_vec(field, ambient, i)).collect();
        Subspace { field: field.clone(), ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn span(field: &F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Self {
        let mut data = Vec::with_capacity(vectors.len() * ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "span: vector length");
            data.extend(v.iter().cloned());
        }
        let pivots = rref_in_place(field, &mut data, vectors.len(), ambient, ambient);
        let basis = data
            .chunks(ambient.max(1))
            .take(pivots.len())
            .map(|c| c.to_vec())
            .collect();
        Subspace { field: field.clone(), ambient, basis, pivots }
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Matrix<F>) -> Self {
        Self::span(m.field(), m.rows(), &m.col_vecs())
    }

    /// Kernel of a matrix acting on column vectors.
    pub fn kernel(m: &Matrix<F>) -> Self {
        let ns = nullspace(m);
        Self::span(m.field(), m.cols(), &ns)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns not used as pivots; the standard vectors there span a
    /// complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_p = vec![false; self.ambient];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_p[c]).collect()
    }

    /// `v` minus its component along the stored basis.
    pub fn residue(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if !f.is_zero(&c) {
                let neg = f.neg(&c);
                axpy(f, &mut w, &neg, b);
            }
        }
        w
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        is_zero_vec(&self.field, &self.residue(v))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
        } else {
            None
        }
    }

    /// Coordinates of the class of `v` in the quotient, relative to the
    /// standard complement on the free columns.
    pub fn quotient_coords(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let w = self.residue(v);
        self.free_columns().into_iter().map(|c| w[c].clone()).collect()
    }

    pub fn combine(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![self.field.zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&self.field, &mut out, c, b);
        }
        out
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span(&self.field, self.ambient, &vs)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(f, self.ambient);
        }
        // Solve sum a_i u_i = sum b_j w_j.
        let mut cols = self.basis.clone();
        for w in &other.basis {
            cols.push(w.iter().map(|x| f.neg(x)).collect());
        }
        let m = Matrix::from_cols(f, self.ambient, &cols);
        let vs: Vec<Vec<F::Elem>> = nullspace(&m)
            .into_iter()
            .map(|c| self.combine(&c[..self.dim()]))
            .collect();
        Self::span(f, self.ambient, &vs)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Image of the subspace under a linear map given by a matrix.
    pub fn image_under(&self, m: &Matrix<F>) -> Self {
        let vs: Vec<Vec<F::Elem>> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Self::span(&self.field, m.rows(), &vs)
    }

    /// Matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_cols(&self.field, self.ambient, &self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gfp, Rationals};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn det_brute(f: &Gfp, m: &[Vec<u64>]) -> u64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        let mut acc = 0;
        for j in 0..n {
            let minor: Vec<Vec<u64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let term = f.mul(&m[0][j], &det_brute(f, &minor));
            acc = if j % 2 == 0 { f.add(&acc, &term) } else { f.sub(&acc, &term) };
        }
        acc
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    fn rank_by_minors(f: &Gfp, m: &Matrix<Gfp>) -> usize {
        let n = m.rows().min(m.cols());
        (1..=n)
            .rev()
            .find(|&k| {
                subsets(m.rows(), k).iter().any(|rs| {
                    subsets(m.cols(), k).iter().any(|cs| {
                        let sub: Vec<Vec<u64>> =
                            rs.iter().map(|&i| cs.iter().map(|&j| *m.get(i, j)).collect()).collect();
                        det_brute(f, &sub) != 0
                    })
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn identity_rank() {
        let f = Gfp::new(7).unwrap();
        let (r, ns) = rank_nullspace(&Matrix::identity(&f, 3));
        assert_eq!(r, 3);
        assert!(ns.is_empty());
    }

    #[test]
    fn proportional_rows() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, 2, 2, &[1, 2, 2, 4]);
        let (r, ns) = rank_nullspace(&m);
        assert_eq!(r, 1);
        assert_eq!(ns, vec![vec![q.from_i64(-2), q.from_i64(1)]]);
    }

    #[test]
    fn rank_matches_minor_oracle() {
        let f = Gfp::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..40 {
            let mut m = Matrix::from_fn(&f, 5, 5, |_, _| f.random(&mut rng));
            // Force some low-rank cases.
            if trial % 3 == 0 {
                let r0 = m.row(0).to_vec();
                for j in 0..5 {
                    let v = f.mul(&r0[j], &3);
                    m.set(4, j, v);
                    m.set(3, j, r0[j]);
                }
            }
            assert_eq!(rank(&m), rank_by_minors(&f, &m));
            assert_eq!(rank(&m), rank(&m.transpose()));
        }
    }

    #[test]
    fn solve_examples() {
        let q = Rationals;
        let b = Matrix::from_i64(&q, 2, 1, &[3, 4]);
        assert_eq!(solve(&Matrix::identity(&q, 2), &b).unwrap().unwrap(), b);
        let a = Matrix::from_i64(&q, 2, 2, &[1, 1, 2, 2]);
        let b = Matrix::from_i64(&q, 2, 1, &[1, 3]);
        assert!(solve(&a, &b).unwrap().is_none());
        assert!(solve(&a, &Matrix::identity(&q, 3)).is_err());
    }

    #[test]
    fn solve_random_consistent() {
        let f = Gfp::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let a = Matrix::from_fn(&f, 4, 6, |_, _| f.random(&mut rng));
            let x0 = Matrix::from_fn(&f, 6, 2, |_, _| f.random(&mut rng));
            let b = a.mul(&x0);
            let x = solve(&a, &b).unwrap().expect("consistent");
            assert_eq!(a.mul(&x), b);
        }
    }

    #[test]
    fn kronecker_rank_multiplies() {
        let f = Gfp::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let a = Matrix::from_fn(&f, 3, 2, |_, _| f.random::<_>(&mut rng) % 2);
            let b = Matrix::from_fn(&f, 2, 3, |_, _| f.random::<_>(&mut rng) % 2);
            assert_eq!(rank(&a.kronecker(&b).unwrap()), rank(&a) * rank(&b));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, 2, 2, &[2, 1, 1, 1]);
        let inv = inverse(&m).unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inverse(&Matrix::from_i64(&q, 2, 2, &[1, 2, 2, 4])).is_none());
    }

    #[test]
    fn subspace_ops() {
        let f = Gfp::new(7).unwrap();
        let u = Subspace::span(&f, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let w = Subspace::span(&f, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(u.intersection(&w).dim(), 1);
        assert_eq!(u.sum(&w).dim(), 3);
        assert!(u.contains(&[3, 4, 0]));
        assert_eq!(u.coords(&[3, 4, 0]), Some(vec![3, 4]));
        assert_eq!(u.quotient_coords(&[3, 4, 5]), vec![5]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn gf7_matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix<Gfp>> {
            proptest::collection::vec(0u64..7, r * c)
                .prop_map(move |d| Matrix::new(Gfp::new(7).unwrap(), r, c, d))
        }

        proptest! {
            #[test]
            fn rank_of_transpose(m in gf7_matrix(4, 6)) {
                prop_assert_eq!(rank(&m), rank(&m.transpose()));
            }

            #[test]
            fn nullspace_is_killed(m in gf7_matrix(4, 6)) {
                let (r, ns) = rank_nullspace(&m);
                prop_assert_eq!(r + ns.len(), 6);
                for v in ns {
                    prop_assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
                }
            }

            #[test]
            fn solve_roundtrip(a in gf7_matrix(5, 4), x in gf7_matrix(4, 1)) {
                let b = a.mul(&x);
                let y = solve(&a, &b).unwrap().unwrap();
                prop_assert_eq!(a.mul(&y), b);
            }
        }
    }
}
