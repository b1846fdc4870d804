//! Jacobson radical of an algebra given by a faithful matrix
//! representation.
//!
//! In characteristic 0, or characteristic `p` larger than the degree `n`
//! of the representation, the radical is the kernel of the trace form
//! `(x, y) -> tr(xy)`. For small `p` the trace form is too coarse; there we
//! use the generalized trace functionals of Cohen, Ivanyos and Wales: with
//! `I_{-1} = A` and `l = floor(log_p n)`,
//!
//! `I_i = { x in I_{i-1} : g_i(xy) = 0 for all y }`,
//! `g_i(a) = (tr(lift(a)^(p^i)) mod p^(i+1)) / p^i`,
//!
//! where `lift` takes residues to integers in `[0, p)`. Then `rad = I_l`.

use super::{Algebra, RadicalMethod, Vector};
use crate::field::Field;
use crate::linalg::{nullspace, Subspace};
use crate::matrix::Matrix;

/// Radical of an abstract algebra via its left regular representation.
pub fn radical_of_algebra<F: Field>(a: &Algebra<F>) -> (Subspace<F>, RadicalMethod) {
    let f = a.field();
    let n = a.dim();
    let p = f.characteristic();
    if p == 0 || p as usize > n {
        // tr(L_x L_y) = tr(L_{xy}) = sum_k (xy)_k tr(L_{b_k}).
        let mut tr = vec![f.zero(); n];
        for (k, t) in tr.iter_mut().enumerate() {
            for j in 0..n {
                for (m, c) in a.basis_product(k, j) {
                    if *m == j {
                        *t = f.add(t, c);
                    }
                }
            }
        }
        let gram = Matrix::from_fn(f, n, n, |i, j| {
            let mut s = f.zero();
            for (k, c) in a.basis_product(i, j) {
                f.add_mul_assign(&mut s, c, &tr[*k]);
            }
            s
        });
        return (Subspace::span(f, n, &nullspace(&gram)), RadicalMethod::TraceForm);
    }
    let mats = a.left_matrices().to_vec();
    let rad = generalized_trace_radical(f, &mats, |u: &Vector<F>| a.left_matrix(u));
    (rad, RadicalMethod::GeneralizedTrace)
}

/// Radical of the algebra spanned by the linearly independent matrices
/// `mats` (closed under products). The result is a subspace of coefficient
/// vectors relative to `mats`.
pub fn radical_of_matrix_algebra<F: Field>(f: &F, mats: &[Matrix<F>]) -> (Subspace<F>, RadicalMethod) {
    let d = mats.len();
    if d == 0 {
        return (Subspace::zero(f, 0), RadicalMethod::TraceForm);
    }
    let n = mats[0].rows();
    let p = f.characteristic();
    let combine = |u: &Vector<F>| {
        let mut m = Matrix::zeros(f, n, n);
        for (c, b) in u.iter().zip(mats) {
            m.add_scaled(c, b);
        }
        m
    };
    if p == 0 || p as usize > n {
        // tr(XY) without forming the product.
        let gram = Matrix::from_fn(f, d, d, |i, j| {
            let (x, y) = (&mats[i], &mats[j]);
            let mut s = f.zero();
            for r in 0..n {
                for c in 0..n {
                    let a = x.get(r, c);
                    if !f.is_zero(a) {
                        f.add_mul_assign(&mut s, a, y.get(c, r));
                    }
                }
            }
            s
        });
        return (Subspace::span(f, d, &nullspace(&gram)), RadicalMethod::TraceForm);
    }
    (generalized_trace_radical(f, mats, combine), RadicalMethod::GeneralizedTrace)
}

fn generalized_trace_radical<F: Field>(
    f: &F,
    mats: &[Matrix<F>],
    combine: impl Fn(&Vector<F>) -> Matrix<F>,
) -> Subspace<F> {
    let d = mats.len();
    let n = mats[0].rows() as u64;
    let p = f.characteristic();
    let mut l = 0u32;
    while p.pow(l + 1) <= n {
        l += 1;
    }
    let mut ideal = Subspace::full(f, d);
    for i in 0..=l {
        if ideal.dim() == 0 {
            break;
        }
        let pi = p.pow(i);
        let modulus = pi * p;
        let us: Vec<Matrix<F>> = ideal.basis().iter().map(&combine).collect();
        // h[j][k] = g_i(u_k b_j); solve sum_k c_k h[j][k] = 0.
        let h = Matrix::from_fn(f, d, us.len(), |j, k| {
            let prod = us[k].mul(&mats[j]);
            let t = lifted_power_trace(f, &prod, pi, modulus);
            assert_eq!(t % pi, 0, "generalized trace not divisible by p^i");
            f.from_i64(((t / pi) % p) as i64)
        });
        let combos = nullspace(&h);
        let vecs: Vec<Vector<F>> = combos.iter().map(|c| ideal.combine(c)).collect();
        ideal = Subspace::span(f, d, &vecs);
    }
    ideal
}

/// `tr(lift(m)^e) mod modulus`, with entries lifted to `[0, p)`.
fn lifted_power_trace<F: Field>(f: &F, m: &Matrix<F>, e: u64, modulus: u64) -> u64 {
    let n = m.rows();
    let md = modulus as u128;
    let lift: Vec<u128> = m.data().iter().map(|x| f.residue(x).expect("prime field") as u128).collect();
    let mul = |a: &[u128], b: &[u128]| -> Vec<u128> {
        let mut out = vec![0u128; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + x * b[k * n + j]) % md;
                }
            }
        }
        out
    };
    let mut result: Vec<u128> = (0..n * n).map(|k| if k % (n + 1) == 0 { 1 } else { 0 }).collect();
    let mut base = lift;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    ((0..n).map(|i| result[i * n + i]).sum::<u128>() % md) as u64
}
