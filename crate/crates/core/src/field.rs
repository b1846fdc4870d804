//! Exact ground fields: prime fields GF(p) and the rationals.
//!
//! Everything above this module is generic over [`Field`]. A field value
//! carries whatever runtime data its arithmetic needs (the modulus for
//! GF(p)); elements are plain values with canonical representatives, so
//! structural equality of elements is equality in the field.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Runtime description of a ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "Q" || t == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidInput(format!("unknown field `{s}` (expected GF(p) or Q)")))?;
        let p: u64 = inner
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad characteristic in `{s}`")))?;
        Gfp::new(p)?;
        Ok(FieldSpec::Prime(p))
    }
}

/// Arithmetic of an exact field.
///
/// Elements must be kept in canonical form by every operation so that
/// `==` on elements is field equality.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;

    fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc -= a * b`, the inner step of elimination.
    fn sub_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.sub(acc, &self.mul(a, b));
    }

    /// `acc += a * b`.
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b).expect("division by zero"))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// A random element. Over GF(p) this is uniform; over Q it is a small
    /// integer, which keeps coefficient growth under control in sampling
    /// routines.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn format(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    /// Least non-negative residue, for prime fields only.
    fn residue(&self, _a: &Self::Elem) -> Option<u64> {
        None
    }

    /// Candidate roots of a polynomial (coefficients low degree first)
    /// that the generic factoring code cannot find by itself. Only the
    /// rationals need this (rational root theorem).
    fn root_candidates(&self, _poly: &[Self::Elem]) -> Vec<Self::Elem> {
        Vec::new()
    }

    /// A primitive `n`-th root of unity, if the field contains one.
    fn primitive_root_of_unity(&self, n: u64) -> Option<Self::Elem>;
}

/// The prime field GF(p), `p < 2^32` so products fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gfp {
    p: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Gfp {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if p >= 1 << 32 {
            return Err(Error::InvalidInput(format!("prime {p} too large (limit 2^32)")));
        }
        Ok(Gfp { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_element(&self) -> u64 {
        if self.p == 2 {
            return 1;
        }
        let n = self.p - 1;
        let mut factors = Vec::new();
        let mut m = n;
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                factors.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(&g, n / q) != 1))
            .expect("multiplicative group of a prime field is cyclic")
    }
}

impl Field for Gfp {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(a, self.p - 2))
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn sub_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        let prod = (a * b) % self.p;
        *acc = if *acc >= prod { *acc - prod } else { *acc + self.p - prod };
    }

    #[inline]
    fn add_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + (a * b) % self.p) % self.p;
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<u64> {
        let q = parse_rational(s)?;
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        if den == 0 {
            return Err(Error::InvalidInput(format!("`{s}` has a denominator divisible by {}", self.p)));
        }
        Ok(self.div(&num, &den))
    }

    fn residue(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }

    fn primitive_root_of_unity(&self, n: u64) -> Option<u64> {
        if n == 0 || (self.p - 1) % n != 0 {
            return None;
        }
        let g = self.primitive_element();
        Some(self.pow(&g, (self.p - 1) / n))
    }
}

impl Gfp {
    fn from_bigint(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        v.mod_floor(&m).to_u64().expect("residue fits")
    }
}

/// The field of rational numbers, elements in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("cannot parse `{s}` as a field element"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    // Trial division is fine at the sizes produced by desk-scale
    // minimal polynomials; bail out on anything large.
    let limit = BigInt::from(1_000_000u64);
    if n > limit {
        return vec![BigInt::one(), n];
    }
    let n = n.to_u64().unwrap();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out
}

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-3..=3))
    }

    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        parse_rational(s)
    }

    fn root_candidates(&self, poly: &[BigRational]) -> Vec<BigRational> {
        // Clear denominators, then apply the rational root theorem.
        let Some(last) = poly.iter().rposition(|c| !c.is_zero()) else {
            return Vec::new();
        };
        let poly = &poly[..=last];
        let lcm = poly
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = poly
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut out = Vec::new();
        if ints[0].is_zero() {
            out.push(BigRational::zero());
        }
        let Some(low) = ints.iter().find(|c| !c.is_zero()) else {
            return out;
        };
        let ps = divisors(low);
        let qs = divisors(&ints[ints.len() - 1]);
        for p in &ps {
            for q in &qs {
                for sign in [1, -1] {
                    let r = BigRational::new(p * BigInt::from(sign), q.clone());
                    if !out.contains(&r) {
                        out.push(r);
                    }
                }
            }
        }
        out
    }

    fn primitive_root_of_unity(&self, n: u64) -> Option<BigRational> {
        match n {
            1 => Some(self.one()),
            2 => Some(self.from_i64(-1)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gfp_arithmetic() {
        let f = Gfp::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.parse_elem("1/2").unwrap(), 4);
        assert!(Gfp::new(9).is_err());
    }

    #[test]
    fn roots_of_unity() {
        let f = Gfp::new(7).unwrap();
        let z = f.primitive_root_of_unity(3).unwrap();
        assert_eq!(f.pow(&z, 3), 1);
        assert_ne!(z, 1);
        assert!(f.primitive_root_of_unity(4).is_none());
        assert_eq!(Rationals.primitive_root_of_unity(2), Some(Rationals.from_i64(-1)));
        assert!(Rationals.primitive_root_of_unity(3).is_none());
    }

    #[test]
    fn rationals_canonical() {
        let q = Rationals;
        let a = q.parse_elem("2/4").unwrap();
        assert_eq!(q.format(&a), "1/2");
        assert_eq!(q.format(&q.parse_elem("-6/3").unwrap()), "-2");
    }

    #[test]
    fn field_spec_parse() {
        assert_eq!("GF(101)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(101));
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert!("GF(4)".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(7).to_string(), "GF(7)");
    }

    #[test]
    fn rational_root_candidates_cover_roots() {
        let q = Rationals;
        // 2t^2 - 3t + 1 = (2t - 1)(t - 1)
        let poly = vec![q.from_i64(1), q.from_i64(-3), q.from_i64(2)];
        let cands = q.root_candidates(&poly);
        assert!(cands.contains(&q.parse_elem("1/2").unwrap()));
        assert!(cands.contains(&q.one()));
    }
}
