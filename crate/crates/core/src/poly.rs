//! Univariate polynomials over a [`Field`], coefficients low degree first,
//! and factorization into coprime parts.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::linalg::nullspace;
use crate::matrix::Matrix;

pub type Poly<F> = Vec<<F as Field>::Elem>;

pub fn trim<F: Field>(f: &F, mut p: Poly<F>) -> Poly<F> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

/// Degree, with the zero polynomial reported as `None`.
pub fn degree<F: Field>(p: &[F::Elem]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn constant<F: Field>(f: &F, c: F::Elem) -> Poly<F> {
    trim(f, vec![c])
}

pub fn x_minus<F: Field>(f: &F, r: &F::Elem) -> Poly<F> {
    vec![f.neg(r), f.one()]
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n)
        .map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(f, out)
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n)
        .map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(f, out)
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            f.add_mul_assign(&mut out[i + j], x, y);
        }
    }
    trim(f, out)
}

pub fn scale<F: Field>(f: &F, c: &F::Elem, a: &[F::Elem]) -> Poly<F> {
    trim(f, a.iter().map(|x| f.mul(c, x)).collect())
}

pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F>, Poly<F>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(f, a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = f.inv(b.last().unwrap()).unwrap();
    let mut q = vec![f.zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = f.mul(r.last().unwrap(), &lead_inv);
        for (j, y) in b.iter().enumerate() {
            f.sub_mul_assign(&mut r[shift + j], &c, y);
        }
        q[shift] = c;
        r = trim(f, r);
    }
    (trim(f, q), r)
}

pub fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    divrem(f, a, b).1
}

pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> Poly<F> {
    match a.last() {
        None => Vec::new(),
        Some(l) => {
            let inv = f.inv(l).unwrap();
            scale(f, &inv, a)
        }
    }
}

pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let mut x = trim(f, a.to_vec());
    let mut y = trim(f, b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Returns `(g, s, t)` with `s a + t b = g = gcd(a, b)` monic.
pub fn ext_gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F>, Poly<F>, Poly<F>) {
    let (mut r0, mut r1) = (trim(f, a.to_vec()), trim(f, b.to_vec()));
    let (mut s0, mut s1) = (vec![f.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if let Some(l) = r0.last() {
        let inv = f.inv(l).unwrap();
        (scale(f, &inv, &r0), scale(f, &inv, &s0), scale(f, &inv, &t0))
    } else {
        (r0, s0, t0)
    }
}

pub fn derivative<F: Field>(f: &F, a: &[F::Elem]) -> Poly<F> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(&f.from_i64(i as i64), c))
        .collect();
    trim(f, out)
}

pub fn eval<F: Field>(f: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in a.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

fn mulmod<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> Poly<F> {
    rem(f, &mul(f, a, b), m)
}

fn powmod<F: Field>(f: &F, base: &[F::Elem], mut e: u64, m: &[F::Elem]) -> Poly<F> {
    let mut acc = rem(f, &[f.one()], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        b = mulmod(f, &b, &b, m);
        e >>= 1;
    }
    acc
}

/// Squarefree decomposition of a nonzero polynomial: pairs `(g, m)` with
/// `g` monic squarefree, pairwise coprime, and `a = c * prod g^m`.
pub fn squarefree<F: Field>(f: &F, a: &[F::Elem]) -> Vec<(Poly<F>, usize)> {
    let a = monic(f, a);
    let mut out = Vec::new();
    if a.len() <= 1 {
        return out;
    }
    let mut c = gcd(f, &a, &derivative(f, &a));
    let mut w = divrem(f, &a, &c).0;
    let mut i = 1;
    while w.len() > 1 {
        let y = gcd(f, &w, &c);
        let z = divrem(f, &w, &y).0;
        if z.len() > 1 {
            out.push((monic(f, &z), i));
        }
        i += 1;
        w = y;
        c = divrem(f, &c, &w).0;
    }
    if c.len() > 1 {
        // Only in characteristic p: c is a polynomial in x^p.
        let p = f.characteristic() as usize;
        assert!(p > 0, "leftover in squarefree decomposition over characteristic 0");
        let root: Poly<F> = c.iter().step_by(p).cloned().collect();
        for (g, m) in squarefree(f, &root) {
            out.push((g, m * p));
        }
    }
    out
}

/// Factorization into pairwise coprime monic factors with multiplicities.
pub struct Factorization<F: Field> {
    pub factors: Vec<(Poly<F>, usize)>,
    /// Whether every factor is known to be irreducible.
    pub complete: bool,
}

/// Berlekamp factorization of a monic squarefree polynomial over GF(p).
fn berlekamp<F: Field>(f: &F, g: &[F::Elem]) -> Vec<Poly<F>> {
    let n = g.len() - 1;
    if n <= 1 {
        return vec![g.to_vec()];
    }
    let p = f.characteristic();
    let x = vec![f.zero(), f.one()];
    let xp = powmod(f, &x, p, g);
    // Row i of q holds x^{ip} mod g; fixed vectors of q^T are the
    // Berlekamp subalgebra.
    let mut rows = Vec::with_capacity(n);
    let mut cur = vec![f.one()];
    for _ in 0..n {
        let mut r = cur.clone();
        r.resize(n, f.zero());
        rows.push(r);
        cur = mulmod(f, &cur, &xp, g);
    }
    let q = Matrix::from_rows(f, n, &rows);
    let qt_minus_i = q.transpose().sub(&Matrix::identity(f, n));
    let basis: Vec<Poly<F>> = nullspace(&qt_minus_i).into_iter().map(|v| trim(f, v)).collect();
    let k = basis.len();
    let mut factors = vec![g.to_vec()];
    if k == 1 {
        return factors;
    }
    let nontrivial: Vec<&Poly<F>> = basis.iter().filter(|v| v.len() > 1).collect();
    if p <= 64 {
        'outer: for v in &nontrivial {
            let mut next = Vec::new();
            for h in &factors {
                if h.len() <= 2 {
                    next.push(h.clone());
                    continue;
                }
                let mut rest = h.clone();
                for s in 0..p {
                    if rest.len() <= 1 {
                        break;
                    }
                    let shifted = sub(f, v, &[f.from_i64(s as i64)]);
                    let d = gcd(f, &rest, &shifted);
                    if d.len() > 1 && d.len() < rest.len() {
                        rest = divrem(f, &rest, &d).0;
                        next.push(d);
                    }
                }
                if rest.len() > 1 {
                    next.push(monic(f, &rest));
                }
            }
            factors = next;
            if factors.len() == k {
                break 'outer;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        while factors.len() < k {
            let mut v: Poly<F> = Vec::new();
            for b in &basis {
                v = add(f, &v, &scale(f, &f.random(&mut rng), b));
            }
            let mut next = Vec::new();
            for h in &factors {
                if h.len() <= 2 {
                    next.push(h.clone());
                    continue;
                }
                let w = powmod(f, &v, (p - 1) / 2, h);
                let d = gcd(f, h, &sub(f, &w, &[f.one()]));
                if d.len() > 1 && d.len() < h.len() {
                    next.push(monic(f, &divrem(f, h, &d).0));
                    next.push(d);
                } else {
                    next.push(h.clone());
                }
            }
            factors = next;
        }
    }
    factors
}

pub fn factor<F: Field>(f: &F, a: &[F::Elem]) -> Factorization<F> {
    let sqf = squarefree(f, a);
    let mut factors = Vec::new();
    let mut complete = true;
    for (g, m) in sqf {
        if f.characteristic() > 0 {
            for h in berlekamp(f, &g) {
                factors.push((h, m));
            }
            continue;
        }
        let mut rest = g;
        for r in f.root_candidates(&rest) {
            if rest.len() <= 1 {
                break;
            }
            if f.is_zero(&eval(f, &rest, &r)) {
                let lin = x_minus(f, &r);
                rest = divrem(f, &rest, &lin).0;
                factors.push((lin, m));
            }
        }
        if rest.len() > 1 {
            // Without rational roots, degree <= 3 means irreducible.
            if rest.len() > 4 {
                complete = false;
            }
            factors.push((monic(f, &rest), m));
        }
    }
    Factorization { factors, complete }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gfp, Rationals};

    fn expand<F: Field>(f: &F, fs: &Factorization<F>) -> Poly<F> {
        let mut acc = vec![f.one()];
        for (g, m) in &fs.factors {
            for _ in 0..*m {
                acc = mul(f, &acc, g);
            }
        }
        acc
    }

    #[test]
    fn gcd_and_ext_gcd() {
        let f = Gfp::new(7).unwrap();
        // (x-1)(x-2) and (x-1)(x-3)
        let a = mul(&f, &x_minus(&f, &1), &x_minus(&f, &2));
        let b = mul(&f, &x_minus(&f, &1), &x_minus(&f, &3));
        let (g, s, t) = ext_gcd(&f, &a, &b);
        assert_eq!(g, x_minus(&f, &1));
        assert_eq!(add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b)), g);
    }

    #[test]
    fn factor_over_gf2() {
        let f = Gfp::new(2).unwrap();
        // x^4 + x = x (x+1) (x^2+x+1)
        let a = vec![0, 1, 0, 0, 1];
        let fs = factor(&f, &a);
        assert!(fs.complete);
        assert_eq!(fs.factors.len(), 3);
        assert_eq!(expand(&f, &fs), a);
        // (x+1)^2 = x^2 + 1
        let fs = factor(&f, &[1, 0, 1]);
        assert_eq!(fs.factors, vec![(vec![1, 1], 2)]);
    }

    #[test]
    fn factor_large_prime_random_split() {
        let f = Gfp::new(101).unwrap();
        let mut a = vec![1];
        for r in [3u64, 7, 50, 99] {
            a = mul(&f, &a, &x_minus(&f, &r));
        }
        let fs = factor(&f, &a);
        assert_eq!(fs.factors.len(), 4);
        assert_eq!(expand(&f, &fs), a);
    }

    #[test]
    fn factor_over_rationals() {
        let q = Rationals;
        // (x - 1/2)^2 (x^2 + 1)
        let lin = x_minus(&q, &q.parse_elem("1/2").unwrap());
        let quad = vec![q.one(), q.zero(), q.one()];
        let a = mul(&q, &mul(&q, &lin, &lin), &quad);
        let fs = factor(&q, &a);
        assert!(fs.complete);
        assert_eq!(fs.factors.len(), 2);
        assert_eq!(expand(&q, &fs), a);
    }

    #[test]
    fn squarefree_char_p_power() {
        let f = Gfp::new(3).unwrap();
        // (x+1)^3 = x^3 + 1 over GF(3)
        let sq = squarefree(&f, &[1, 0, 0, 1]);
        assert_eq!(sq, vec![(vec![1, 1], 3)]);
    }
}
