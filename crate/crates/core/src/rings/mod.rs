//! Exact coefficient rings: rationals, prime fields, simple algebraic
//! extensions, dense univariate polynomials and small dense matrices.

mod extension;
mod linalg;
mod poly;
mod prime;
mod rational;
pub mod text;

use std::fmt::Debug;

use rand::RngCore;

pub use extension::{galois_field, GaloisField, SimpleExtension};
pub use linalg::Matrix;
pub use poly::{ext_gcd, find_irreducible, is_irreducible, ExtGcd, UniPoly};
pub use prime::{is_prime, PrimeField};
pub use rational::{Rational, Rationals};

use crate::error::{AlgebraError, Result};

/// A field together with its element representation.
///
/// The field value is the context: elements are plain data and every
/// operation goes through the field. Field values are cheap to clone.
pub trait Field: Clone + Debug + PartialEq {
    type Elem: Clone + Debug + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` exactly when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// 0 for fields of characteristic zero.
    fn characteristic(&self) -> u64;

    /// Number of elements, `None` for infinite fields or when it does not fit.
    fn order(&self) -> Option<u128>;

    /// The canonical primitive `n`-th root of unity of this field.
    fn primitive_root(&self, n: u64) -> Result<Self::Elem>;

    /// A sample element, used by randomized identity checks.
    fn random_elem(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    /// Short descriptor such as `Q`, `F7` or `Q(zeta_3)`.
    fn name(&self) -> String;

    /// Rank of a matrix given as rows. The default is plain Gaussian elimination.
    fn rank(&self, rows: &[Vec<Self::Elem>]) -> usize {
        linalg::rank_by_elimination(self, rows)
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let b_inv = self.inv(b).ok_or(AlgebraError::DivisionByZero)?;
        Ok(self.mul(a, &b_inv))
    }

    fn pow(&self, a: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Integer power allowing negative exponents.
    fn zpow(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem> {
        if e >= 0 {
            Ok(self.pow(a, e as u128))
        } else {
            let inv = self.inv(a).ok_or(AlgebraError::DivisionByZero)?;
            Ok(self.pow(&inv, e.unsigned_abs() as u128))
        }
    }

    /// Inverse of the integer `n` in the field, failing when the characteristic divides it.
    fn inv_int(&self, n: u64) -> Result<Self::Elem> {
        let c = self.characteristic();
        if c != 0 && n % c == 0 {
            return Err(AlgebraError::CharacteristicDivides { n, characteristic: c });
        }
        let e = self.from_i64(n as i64);
        self.inv(&e).ok_or(AlgebraError::DivisionByZero)
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// A finite field with a fixed total order on its elements.
///
/// The order is the one induced by [`FiniteField::index_of`]: prime field
/// residues in integer order, extension elements by their coefficient
/// vectors read as base-`q` digits with the constant term least significant.
pub trait FiniteField: Field {
    fn size(&self) -> u128;
    fn index_of(&self, a: &Self::Elem) -> u128;
    fn element_at(&self, index: u128) -> Self::Elem;

    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.size()).map(move |i| self.element_at(i)))
    }
}

/// Verifies that `zeta` has multiplicative order exactly `n`.
pub fn has_exact_order<F: Field>(field: &F, zeta: &F::Elem, n: u64) -> bool {
    if n == 0 || !field.is_one(&field.pow(zeta, n as u128)) {
        return false;
    }
    prime_factors(n)
        .into_iter()
        .all(|l| !field.is_one(&field.pow(zeta, (n / l) as u128)))
}

/// Smallest element of exact order `n` in a finite field.
///
/// Any generator `y` of the order-`n` subgroup is found through the power
/// map `x -> x^((q-1)/n)`; the result is then the minimum of `y^k` over
/// `gcd(k, n) = 1` under the field's canonical order.
pub fn finite_primitive_root<F: FiniteField>(field: &F, n: u64) -> Result<F::Elem> {
    if n == 0 {
        return Err(AlgebraError::NoRootOfUnity { n, field: field.name() });
    }
    let p = field.characteristic();
    if n % p == 0 {
        return Err(AlgebraError::CharacteristicDivides { n, characteristic: p });
    }
    let q = field.size();
    if (q - 1) % n as u128 != 0 {
        return Err(AlgebraError::NoRootOfUnity { n, field: field.name() });
    }
    if n == 1 {
        return Ok(field.one());
    }
    let cofactor = (q - 1) / n as u128;
    let generator = (1..q)
        .map(|i| field.pow(&field.element_at(i), cofactor))
        .find(|y| has_exact_order(field, y, n))
        .ok_or_else(|| AlgebraError::NoRootOfUnity { n, field: field.name() })?;
    let best = (1..n)
        .filter(|&k| num_integer::gcd(k, n) == 1)
        .map(|k| field.pow(&generator, k as u128))
        .min_by_key(|y| field.index_of(y))
        .expect("phi(n) >= 1");
    Ok(best)
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// Positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Multiplicative order of `q` modulo `d`; `d` must be coprime to `q`.
pub fn multiplicative_order(q: u64, d: u64) -> Result<u64> {
    if d == 0 || num_integer::gcd(q, d) != 1 {
        return Err(AlgebraError::NotCoprime { a: q, b: d });
    }
    if d == 1 {
        return Ok(1);
    }
    let q = q % d;
    let mut acc = q;
    let mut k = 1;
    while acc != 1 {
        acc = ((acc as u128 * q as u128) % d as u128) as u64;
        k += 1;
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_theory_helpers() {
        assert_eq!(prime_factors(12), vec![2, 3]);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
        assert_eq!(multiplicative_order(7, 5).unwrap(), 4);
        assert_eq!(multiplicative_order(2, 3).unwrap(), 2);
        assert!(multiplicative_order(2, 4).is_err());
    }
}
