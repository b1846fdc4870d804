use std::sync::Arc;

use super::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{inverse, rank, Subspace};
use crate::matrix::Matrix;

/// A unital algebra homomorphism, stored as a `dim target x dim source`
/// matrix acting on coordinate vectors.
#[derive(Clone, Debug)]
pub struct AlgebraHom<F: Field> {
    source: Arc<Algebra<F>>,
    target: Arc<Algebra<F>>,
    matrix: Matrix<F>,
}

impl<F: Field> AlgebraHom<F> {
    /// Checked constructor: the map must send the unit to the unit and be
    /// multiplicative on all pairs of basis elements.
    pub fn new(source: Arc<Algebra<F>>, target: Arc<Algebra<F>>, matrix: Matrix<F>) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch("algebra homomorphism matrix".into()));
        }
        let h = AlgebraHom { source, target, matrix };
        if h.apply(h.source.unit()) != *h.target.unit() {
            return Err(Error::NotHomomorphism("unit is not preserved".into()));
        }
        let n = h.source.dim();
        let images: Vec<Vector<F>> = (0..n).map(|i| h.matrix.col(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let prod = h.source.mul(&h.source.basis(i), &h.source.basis(j));
                if h.apply(&prod) != h.target.mul(&images[i], &images[j]) {
                    return Err(Error::NotHomomorphism(format!(
                        "not multiplicative on ({}, {})",
                        h.source.labels()[i],
                        h.source.labels()[j]
                    )));
                }
            }
        }
        Ok(h)
    }

    pub fn identity(a: Arc<Algebra<F>>) -> Self {
        let m = Matrix::identity(a.field(), a.dim());
        AlgebraHom { source: a.clone(), target: a, matrix: m }
    }

    /// Extend a map given on elements that generate the source, by closing
    /// under products. Fails if the assignment is inconsistent.
    pub fn extend_from_generators(
        source: Arc<Algebra<F>>,
        target: Arc<Algebra<F>>,
        pairs: &[(Vector<F>, Vector<F>)],
    ) -> Result<Self> {
        let f = source.field().clone();
        let n = source.dim();
        // Known (x, phi(x)) pairs, with x kept in echelon form jointly.
        let mut xs: Vec<Vector<F>> = vec![source.unit().clone()];
        let mut ys: Vec<Vector<F>> = vec![target.unit().clone()];
        let mut span = Subspace::span(&f, n, &xs);
        let mut frontier = vec![0usize];
        while let Some(k) = frontier.pop() {
            for (g, gy) in pairs {
                let x = source.mul(g, &xs[k]);
                let y = target.mul(gy, &ys[k]);
                if !span.contains(&x) {
                    span = span.sum(&Subspace::span(&f, n, &[x.clone()]));
                    xs.push(x);
                    ys.push(y);
                    frontier.push(xs.len() - 1);
                }
            }
        }
        if span.dim() != n {
            return Err(Error::NotHomomorphism("given elements do not generate the source".into()));
        }
        let xm = Matrix::from_cols(&f, n, &xs);
        let ym = Matrix::from_cols(&f, target.dim(), &ys);
        let xinv = inverse(&xm).ok_or_else(|| Error::NotHomomorphism("degenerate generating set".into()))?;
        Self::new(source, target, ym.mul(&xinv))
    }

    pub fn source(&self) -> &Arc<Algebra<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra<F>> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn apply(&self, x: &[F::Elem]) -> Vector<F> {
        self.matrix.mul_vec(x)
    }

    pub fn compose(&self, first: &AlgebraHom<F>) -> Result<AlgebraHom<F>> {
        if !super::same_algebra(first.target(), &self.source) {
            return Err(Error::AlgebraMismatch("composition of algebra maps".into()));
        }
        Ok(AlgebraHom {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
        })
    }

    pub fn is_surjective(&self) -> bool {
        rank(&self.matrix) == self.target.dim()
    }

    pub fn is_injective(&self) -> bool {
        rank(&self.matrix) == self.source.dim()
    }

    pub fn inverse(&self) -> Option<AlgebraHom<F>> {
        let m = inverse(&self.matrix)?;
        Some(AlgebraHom { source: self.target.clone(), target: self.source.clone(), matrix: m })
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }
}
