use std::sync::Arc;

use rand::RngCore;

use super::poly::{ext_gcd, find_irreducible, is_irreducible, UniPoly};
use super::{finite_primitive_root, Field, FiniteField, PrimeField};
use crate::error::{AlgebraError, Result};

#[derive(Debug, PartialEq)]
struct ExtInner<F: Field> {
    base: F,
    modulus: UniPoly<F>,
    generator: String,
    label: Option<String>,
}

/// `base[Y]/(m(Y))` for a monic irreducible `m` of degree `r`.
///
/// Elements are residue polynomials stored as exactly `r` coefficients,
/// constant term first.
#[derive(Debug)]
pub struct SimpleExtension<F: Field> {
    inner: Arc<ExtInner<F>>,
}

/// F_{p^r} as a simple extension of its prime field.
pub type GaloisField = SimpleExtension<PrimeField>;

impl<F: Field> Clone for SimpleExtension<F> {
    fn clone(&self) -> Self {
        SimpleExtension { inner: Arc::clone(&self.inner) }
    }
}

impl<F: Field> PartialEq for SimpleExtension<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

/// Builds F_{p^r} from the first irreducible of degree `r` in enumeration order.
pub fn galois_field(p: u64, r: usize) -> Result<GaloisField> {
    let fp = PrimeField::new(p)?;
    let modulus = find_irreducible(&fp, r)?;
    let field = SimpleExtension::new(modulus, "Y")?;
    let q = (p as u128)
        .checked_pow(r as u32)
        .ok_or_else(|| AlgebraError::Unsupported(format!("F_{p}^{r} is too large")))?;
    Ok(field.with_label(format!("F{q}")))
}

impl<F: FiniteField> SimpleExtension<F> {
    /// Checks irreducibility of the modulus over the finite base field.
    pub fn new(modulus: UniPoly<F>, generator: &str) -> Result<Self> {
        if !is_irreducible(&modulus)? {
            return Err(AlgebraError::ReducibleModulus);
        }
        let r = modulus.degree().expect("irreducible has a degree") as u32;
        if modulus.field().size().checked_pow(r).is_none() {
            return Err(AlgebraError::Unsupported("extension too large".into()));
        }
        Self::new_unchecked(modulus, generator)
    }

    /// Extension of degree `r` built from the first irreducible in enumeration order.
    pub fn of_degree(base: &F, r: usize, generator: &str) -> Result<Self> {
        Self::new(find_irreducible(base, r)?, generator)
    }
}

impl<F: Field> SimpleExtension<F> {
    /// The caller guarantees irreducibility of `modulus`.
    pub fn new_unchecked(modulus: UniPoly<F>, generator: &str) -> Result<Self> {
        match modulus.degree() {
            Some(d) if d >= 1 => {}
            _ => return Err(AlgebraError::DegreeTooSmall(1)),
        }
        let base = modulus.field().clone();
        Ok(SimpleExtension {
            inner: Arc::new(ExtInner {
                base,
                modulus: modulus.monic(),
                generator: generator.to_string(),
                label: None,
            }),
        })
    }

    pub fn with_label(self, label: impl Into<String>) -> Self {
        let inner = &self.inner;
        SimpleExtension {
            inner: Arc::new(ExtInner {
                base: inner.base.clone(),
                modulus: inner.modulus.clone(),
                generator: inner.generator.clone(),
                label: Some(label.into()),
            }),
        }
    }

    pub fn base(&self) -> &F {
        &self.inner.base
    }

    pub fn modulus(&self) -> &UniPoly<F> {
        &self.inner.modulus
    }

    pub fn degree(&self) -> usize {
        self.inner.modulus.degree().expect("modulus has positive degree")
    }

    pub fn generator_name(&self) -> &str {
        &self.inner.generator
    }

    /// The class of `Y`.
    pub fn generator(&self) -> Vec<F::Elem> {
        let poly = UniPoly::x(self.base().clone());
        self.reduce(&poly)
    }

    /// Image of a base field element.
    pub fn embed(&self, a: &F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.base().zero(); self.degree()];
        v[0] = a.clone();
        v
    }

    /// The base field element `a` equals, if it lies in the base field.
    pub fn as_base(&self, a: &[F::Elem]) -> Option<F::Elem> {
        a[1..]
            .iter()
            .all(|c| self.base().is_zero(c))
            .then(|| a[0].clone())
    }

    pub fn to_poly(&self, a: &[F::Elem]) -> UniPoly<F> {
        UniPoly::new(self.base().clone(), a.to_vec())
    }

    /// Reduces a polynomial modulo the defining polynomial.
    pub fn reduce(&self, p: &UniPoly<F>) -> Vec<F::Elem> {
        let r = p.rem(self.modulus()).expect("same base field");
        let mut v = r.into_coeffs();
        v.resize(self.degree(), self.base().zero());
        v
    }

    pub(crate) fn e_zero(&self) -> Vec<F::Elem> {
        vec![self.base().zero(); self.degree()]
    }

    pub(crate) fn e_one(&self) -> Vec<F::Elem> {
        self.embed(&self.base().one())
    }

    pub(crate) fn e_add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.base().add(x, y)).collect()
    }

    pub(crate) fn e_sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.base().sub(x, y)).collect()
    }

    pub(crate) fn e_neg(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().map(|x| self.base().neg(x)).collect()
    }

    pub(crate) fn e_mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        self.reduce(&(&self.to_poly(a) * &self.to_poly(b)))
    }

    pub(crate) fn e_inv(&self, a: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let pa = self.to_poly(a);
        if pa.is_zero() {
            return None;
        }
        let r = ext_gcd(&pa, self.modulus()).ok()?;
        r.g.is_one().then(|| self.reduce(&r.u))
    }

    pub(crate) fn e_is_zero(&self, a: &[F::Elem]) -> bool {
        a.iter().all(|c| self.base().is_zero(c))
    }

    pub(crate) fn e_random(&self, rng: &mut dyn RngCore) -> Vec<F::Elem> {
        (0..self.degree()).map(|_| self.base().random_elem(rng)).collect()
    }

    pub(crate) fn e_format(&self, a: &[F::Elem]) -> String {
        self.to_poly(a).format_with(self.generator_name())
    }

    pub(crate) fn e_parse(&self, s: &str) -> Result<Vec<F::Elem>> {
        let p = UniPoly::parse_with(self.base().clone(), s, self.generator_name())?;
        Ok(self.reduce(&p))
    }

    pub(crate) fn e_name(&self) -> String {
        match &self.inner.label {
            Some(l) => l.clone(),
            None => format!(
                "{}[{}]/({})",
                self.base().name(),
                self.generator_name(),
                self.modulus().format_with(self.generator_name())
            ),
        }
    }
}

impl<F: FiniteField> Field for SimpleExtension<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        self.e_zero()
    }

    fn one(&self) -> Self::Elem {
        self.e_one()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.embed(&self.base().from_i64(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.e_add(a, b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.e_sub(a, b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.e_mul(a, b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.e_neg(a)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.e_inv(a)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.e_is_zero(a)
    }

    fn characteristic(&self) -> u64 {
        self.base().characteristic()
    }

    fn order(&self) -> Option<u128> {
        Some(self.size())
    }

    fn primitive_root(&self, n: u64) -> Result<Self::Elem> {
        finite_primitive_root(self, n)
    }

    fn random_elem(&self, rng: &mut dyn RngCore) -> Self::Elem {
        self.e_random(rng)
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        self.e_format(a)
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        self.e_parse(s)
    }

    fn name(&self) -> String {
        self.e_name()
    }
}

impl<F: FiniteField> FiniteField for SimpleExtension<F> {
    fn size(&self) -> u128 {
        self.base()
            .size()
            .checked_pow(self.degree() as u32)
            .expect("size checked at construction")
    }

    fn index_of(&self, a: &Self::Elem) -> u128 {
        let q = self.base().size();
        a.iter()
            .rev()
            .fold(0u128, |acc, c| acc * q + self.base().index_of(c))
    }

    fn element_at(&self, mut index: u128) -> Self::Elem {
        let q = self.base().size();
        (0..self.degree())
            .map(|_| {
                let c = self.base().element_at(index % q);
                index /= q;
                c
            })
            .collect()
    }
}
