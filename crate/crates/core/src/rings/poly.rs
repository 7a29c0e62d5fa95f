use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::text;
use super::{Field, FiniteField};
use crate::error::{AlgebraError, Result};

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `X^k`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial has
/// no coefficients at all.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn from_ints(field: F, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&n| field.from_i64(n)).collect();
        Self::new(field, c)
    }

    pub fn zero(field: F) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::new(field, vec![one])
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(field: F, c: F::Elem, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::new(field, coeffs)
    }

    pub fn x(field: F) -> Self {
        let one = field.one();
        Self::monomial(field, one, 1)
    }

    /// `X^n - 1`.
    pub fn x_pow_minus_one(field: F, n: usize) -> Self {
        let mut p = Self::monomial(field.clone(), field.one(), n);
        p.coeffs[0] = field.sub(&p.coeffs[0], &field.one());
        Self::new(field, p.coeffs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F::Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.field.is_one(c))
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(AlgebraError::RingMismatch {
                left: self.field.name(),
                right: other.field.name(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|k| f.add(&self.coeff(k), &other.coeff(k))).collect();
        Ok(Self::new(f.clone(), c))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_poly())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f.clone()));
        }
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(a, b));
            }
        }
        Ok(Self::new(f.clone(), c))
    }

    fn neg_poly(&self) -> Self {
        let c = self.coeffs.iter().map(|a| self.field.neg(a)).collect();
        Self::new(self.field.clone(), c)
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let c = self.coeffs.iter().map(|a| self.field.mul(a, s)).collect();
        Self::new(self.field.clone(), c)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_same_ring(divisor)?;
        let f = &self.field;
        let d = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lead_inv = f.inv(&divisor.coeffs[d]).ok_or(AlgebraError::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + d], &lead_inv);
            if !f.is_zero(&c) {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = f.sub(&rem[k + i], &f.mul(&c, b));
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((Self::new(f.clone(), quot), Self::new(f.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(AlgebraError::VerificationFailed(format!(
                "{divisor} does not divide {self}"
            )));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Horner evaluation in the coefficient field.
    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `p(X^m)`.
    pub fn compose_power(&self, m: usize) -> Self {
        let f = &self.field;
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![f.zero(); (self.coeffs.len() - 1) * m + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            c[k * m] = f.add(&c[k * m], a);
        }
        Self::new(f.clone(), c)
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| f.mul(a, &f.from_i64(k as i64)))
            .collect();
        Self::new(f.clone(), c)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.field.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self^e mod modulus` by square and multiply.
    pub fn pow_mod(&self, mut e: u128, modulus: &Self) -> Result<Self> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(self.field.clone()).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?.rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?.rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        Ok(ext_gcd(self, other)?.g)
    }

    /// Text form in the given variable, descending degree.
    pub fn format_with(&self, var: &str) -> String {
        let terms: Vec<(String, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(k, c)| (self.field.format_elem(c), text::var_power(var, k as u32)))
            .collect();
        text::join_terms(&terms)
    }

    /// Parses the text form produced by [`UniPoly::format_with`].
    pub fn parse_with(field: F, s: &str, var: &str) -> Result<Self> {
        let vars = [var.to_string()];
        let mut coeffs: Vec<F::Elem> = Vec::new();
        for term in text::parse_terms(s, &vars)? {
            let mut c = field.one();
            for factor in &term.coeff_factors {
                c = field.mul(&c, &field.parse_elem(factor)?);
            }
            if term.negated {
                c = field.neg(&c);
            }
            let k = term.exponents[0] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, field.zero());
            }
            coeffs[k] = field.add(&coeffs[k], &c);
        }
        Ok(Self::new(field, coeffs))
    }

    pub fn parse(field: F, s: &str) -> Result<Self> {
        Self::parse_with(field, s, "X")
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("X"))
    }
}

impl<F: Field> Add for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: Self) -> UniPoly<F> {
        self.try_add(rhs).expect("polynomials over different rings")
    }
}

impl<F: Field> Sub for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: Self) -> UniPoly<F> {
        self.try_sub(rhs).expect("polynomials over different rings")
    }
}

impl<F: Field> Mul for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: Self) -> UniPoly<F> {
        self.try_mul(rhs).expect("polynomials over different rings")
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        self.neg_poly()
    }
}

/// Result of the extended Euclidean algorithm: `u*a + v*b = g`, `g` monic.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtGcd<F: Field> {
    pub g: UniPoly<F>,
    pub u: UniPoly<F>,
    pub v: UniPoly<F>,
}

/// Extended Euclid over a field.
///
/// When both inputs are nonzero the cofactors are the minimal ones:
/// `deg u < deg b - deg g` and `deg v < deg a - deg g`.
pub fn ext_gcd<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> Result<ExtGcd<F>> {
    a.check_same_ring(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(AlgebraError::BothZero);
    }
    let field = a.field.clone();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (UniPoly::one(field.clone()), UniPoly::zero(field.clone()));
    let (mut t0, mut t1) = (UniPoly::zero(field.clone()), UniPoly::one(field.clone()));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let lc_inv = field
        .inv(r0.leading().expect("gcd is nonzero"))
        .expect("nonzero leading coefficient");
    let out = ExtGcd {
        g: r0.scale(&lc_inv),
        u: s0.scale(&lc_inv),
        v: t0.scale(&lc_inv),
    };
    debug_assert_eq!(
        &(&out.u * a) + &(&out.v * b),
        out.g,
        "Bezout identity must hold"
    );
    Ok(out)
}

/// Irreducibility over a finite field: `f` of degree `n` is irreducible iff
/// `gcd(f, X^(q^i) - X) = 1` for every `1 <= i <= n/2`.
pub fn is_irreducible<F: FiniteField>(f: &UniPoly<F>) -> Result<bool> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(AlgebraError::DegreeTooSmall(1)),
    };
    let field = f.field().clone();
    let q = field.size();
    let x = UniPoly::x(field.clone());
    let mut frob = x.rem(f)?;
    for _ in 1..=n / 2 {
        frob = frob.pow_mod(q, f)?;
        if !f.gcd(&(&frob - &x))?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First monic irreducible polynomial of degree `r` in the enumeration
/// order where the lower coefficients form base-`q` digits, constant term
/// least significant.
pub fn find_irreducible<F: FiniteField>(field: &F, r: usize) -> Result<UniPoly<F>> {
    if r == 0 {
        return Err(AlgebraError::DegreeTooSmall(1));
    }
    let q = field.size();
    let count = q
        .checked_pow(r as u32)
        .ok_or_else(|| AlgebraError::Unsupported(format!("degree {r} extension is too large")))?;
    for index in 0..count {
        let mut digits = index;
        let mut coeffs = Vec::with_capacity(r + 1);
        for _ in 0..r {
            coeffs.push(field.element_at(digits % q));
            digits /= q;
        }
        coeffs.push(field.one());
        let candidate = UniPoly::new(field.clone(), coeffs);
        if is_irreducible(&candidate)? {
            return Ok(candidate);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::rings::PrimeField;
    use proptest::prelude::*;

    fn poly13() -> impl Strategy<Value = UniPoly<PrimeField>> {
        prop::collection::vec(0u64..13, 0..8)
            .prop_map(|c| UniPoly::new(PrimeField::new(13).unwrap(), c))
    }

    proptest! {
        #[test]
        fn divrem_reconstructs(a in poly13(), b in poly13()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }

        #[test]
        fn bezout_and_degree_bounds(a in poly13(), b in poly13()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let r = ext_gcd(&a, &b).unwrap();
            prop_assert_eq!(&(&r.u * &a) + &(&r.v * &b), r.g.clone());
            prop_assert!(r.g.is_monic());
            prop_assert!(a.rem(&r.g).unwrap().is_zero());
            prop_assert!(b.rem(&r.g).unwrap().is_zero());
            let dg = r.g.degree().unwrap();
            if let Some(du) = r.u.degree() {
                prop_assert!(du + dg < b.degree().unwrap().max(1) || b.degree() == Some(dg));
            }
            if let Some(dv) = r.v.degree() {
                prop_assert!(dv + dg < a.degree().unwrap().max(1) || a.degree() == Some(dg));
            }
        }
    }
}
