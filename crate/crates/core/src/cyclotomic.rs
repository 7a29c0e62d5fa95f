//! Cyclotomic polynomials, the fields Q(zeta_d), and the rational
//! idempotent basis of Q[C_n] and Q[G].

use rand::RngCore;

use crate::abelian::AbelianGroup;
use crate::error::{AlgebraError, Result};
use crate::rings::{divisors, euler_phi, ext_gcd, Field, Rational, Rationals, SimpleExtension, UniPoly};

/// The `d`-th cyclotomic polynomial, computed by dividing `X^d - 1` by
/// every `Phi_e` with `e | d`, `e < d`.
pub fn cyclotomic_poly(d: u64) -> UniPoly<Rationals> {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut acc = UniPoly::x_pow_minus_one(Rationals, d as usize);
    for e in divisors(d).into_iter().filter(|&e| e < d) {
        acc = acc
            .exact_div(&cyclotomic_poly(e))
            .expect("Phi_e divides X^d - 1 for e | d");
    }
    acc
}

/// `Phi_d` with its integer coefficients mapped into `field`.
pub fn cyclotomic_poly_over<F: Field>(field: &F, d: u64) -> UniPoly<F> {
    let phi = cyclotomic_poly(d);
    let coeffs = phi
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            let n: i64 = c.to_integer().try_into().expect("cyclotomic coefficients are small");
            field.from_i64(n)
        })
        .collect();
    UniPoly::new(field.clone(), coeffs)
}

/// Q(zeta_d) = Q[z]/(Phi_d(z)); the class of `z` is the canonical primitive `d`-th root.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclotomicField {
    conductor: u64,
    ext: SimpleExtension<Rationals>,
}

impl CyclotomicField {
    pub fn new(d: u64) -> Result<Self> {
        if d == 0 {
            return Err(AlgebraError::InvalidGroup("conductor must be positive".into()));
        }
        let ext = SimpleExtension::new_unchecked(cyclotomic_poly(d), "z")?;
        Ok(CyclotomicField { conductor: d, ext })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.ext.degree()
    }

    /// The class of `z`.
    pub fn zeta(&self) -> Vec<Rational> {
        self.ext.generator()
    }

    pub fn embed(&self, a: &Rational) -> Vec<Rational> {
        self.ext.embed(a)
    }

    /// The rational value of `a`, if it lies in Q.
    pub fn as_rational(&self, a: &[Rational]) -> Option<Rational> {
        self.ext.as_base(a)
    }

    pub fn from_poly(&self, p: &UniPoly<Rationals>) -> Vec<Rational> {
        self.ext.reduce(p)
    }

    pub fn to_poly(&self, a: &[Rational]) -> UniPoly<Rationals> {
        self.ext.to_poly(a)
    }

    /// Images of `a` under `z -> z^m` for `gcd(m, d) = 1`, `m` ascending.
    pub fn galois_conjugates(&self, a: &[Rational]) -> Vec<Vec<Rational>> {
        let d = self.conductor;
        let poly = self.to_poly(a);
        (1..=d.max(1))
            .filter(|&m| num_integer::gcd(m, d) == 1)
            .map(|m| self.from_poly(&poly.compose_power(m as usize)))
            .collect()
    }

    /// Norm to Q: the product of all Galois conjugates.
    pub fn norm(&self, a: &[Rational]) -> Rational {
        let prod = self
            .galois_conjugates(a)
            .iter()
            .fold(self.one(), |acc, c| self.mul(&acc, c));
        self.as_rational(&prod).expect("norm lies in Q")
    }
}

impl Field for CyclotomicField {
    type Elem = Vec<Rational>;

    fn zero(&self) -> Self::Elem {
        self.ext.e_zero()
    }

    fn one(&self) -> Self::Elem {
        self.ext.e_one()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.ext.embed(&Rationals.int(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ext.e_add(a, b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ext.e_sub(a, b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ext.e_mul(a, b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.ext.e_neg(a)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.ext.e_inv(a)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.ext.e_is_zero(a)
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn order(&self) -> Option<u128> {
        None
    }

    /// `z^(d/n)` for `n | d`; for odd `d` also `-z^(2d/n)` when `n | 2d`.
    fn primitive_root(&self, n: u64) -> Result<Self::Elem> {
        let d = self.conductor;
        if n == 0 {
            return Err(AlgebraError::NoRootOfUnity { n, field: self.name() });
        }
        if d % n == 0 {
            return Ok(self.pow(&self.zeta(), (d / n) as u128));
        }
        if d % 2 == 1 && (2 * d) % n == 0 {
            return Ok(self.neg(&self.pow(&self.zeta(), (2 * d / n) as u128)));
        }
        Err(AlgebraError::NoRootOfUnity { n, field: self.name() })
    }

    fn random_elem(&self, rng: &mut dyn RngCore) -> Self::Elem {
        self.ext.e_random(rng)
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        self.ext.e_format(a)
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        self.ext.e_parse(s)
    }

    fn name(&self) -> String {
        format!("Q(zeta_{})", self.conductor)
    }
}

/// `Psi_{n,d} = (X^n - 1) / Phi_d`.
pub fn psi_nd(n: u64, d: u64) -> Result<UniPoly<Rationals>> {
    if d == 0 || n % d != 0 {
        return Err(AlgebraError::NotDivisor { d, n });
    }
    UniPoly::x_pow_minus_one(Rationals, n as usize).exact_div(&cyclotomic_poly(d))
}

/// Inverse of `Psi_{n,d}` modulo `Phi_d`, of degree below `phi(d)`.
pub fn psi_tilde_nd(n: u64, d: u64) -> Result<UniPoly<Rationals>> {
    let psi = psi_nd(n, d)?;
    let phi = cyclotomic_poly(d);
    let r = ext_gcd(&psi.rem(&phi)?, &phi)?;
    if !r.g.is_one() {
        return Err(AlgebraError::VerificationFailed(format!(
            "Psi_{{{n},{d}}} is not coprime to Phi_{d}"
        )));
    }
    r.u.rem(&phi)
}

/// Closed form of `psi_tilde_nd(p, p)` for a prime `p`, from differentiating
/// `X^p - 1 = (X - 1) Phi_p`: `(1/p) Phi_p' - (X^(p-1) - 1)/(X - 1)`.
pub fn psi_tilde_prime_closed_form(p: u64) -> Result<UniPoly<Rationals>> {
    if !crate::rings::is_prime(p) {
        return Err(AlgebraError::NotPrime(p));
    }
    let q = Rationals;
    let phi = cyclotomic_poly(p);
    let geometric = UniPoly::x_pow_minus_one(q, (p - 1) as usize)
        .exact_div(&UniPoly::from_ints(q, &[-1, 1]))?;
    Ok(&phi.derivative().scale(&q.frac(1, p as i64)) - &geometric)
}

/// `E_{d,j}`, the element of Q[C_n] mapping to `(0, .., zeta_d^j, .., 0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalBasisElement {
    pub d: u64,
    pub j: u64,
    /// Representative of degree below `n`.
    pub poly: UniPoly<Rationals>,
}

/// `{E_{d,j} : d | n, 0 <= j < phi(d)}` with `E_{d,j} = X^j Psi~_{n,d} Psi_{n,d} mod X^n - 1`,
/// ordered by `d` then `j`.
pub fn rational_basis_cyclic(n: u64) -> Result<Vec<RationalBasisElement>> {
    if n == 0 {
        return Err(AlgebraError::InvalidGroup("n must be positive".into()));
    }
    let modulus = UniPoly::x_pow_minus_one(Rationals, n as usize);
    let mut out = Vec::with_capacity(n as usize);
    for d in divisors(n) {
        let base = (&psi_tilde_nd(n, d)? * &psi_nd(n, d)?).rem(&modulus)?;
        for j in 0..euler_phi(d) {
            let shifted = UniPoly::monomial(Rationals, Rationals.int(1), j as usize);
            let poly = (&shifted * &base).rem(&modulus)?;
            out.push(RationalBasisElement { d, j, poly });
        }
    }
    Ok(out)
}

/// Tensor product of the cyclic bases of the invariant factors of `G`,
/// expressed as coefficient vectors over the canonical element order.
#[derive(Clone, Debug, PartialEq)]
pub struct AbelianBasisElement {
    /// One `(d, j)` label per cyclic factor.
    pub components: Vec<(u64, u64)>,
    pub coeffs: Vec<Rational>,
}

pub fn rational_basis_abelian(group: &AbelianGroup) -> Result<Vec<AbelianBasisElement>> {
    let factor_bases = group
        .divisors()
        .iter()
        .map(|&d| rational_basis_cyclic(d))
        .collect::<Result<Vec<_>>>()?;
    let elements = group.elements();
    let mut out = Vec::new();
    let mut choice = vec![0usize; factor_bases.len()];
    loop {
        let picked: Vec<&RationalBasisElement> = choice
            .iter()
            .zip(&factor_bases)
            .map(|(&i, basis)| &basis[i])
            .collect();
        let coeffs = elements
            .iter()
            .map(|sigma| {
                picked
                    .iter()
                    .zip(sigma.residues())
                    .fold(Rationals.int(1), |acc, (b, &r)| acc * b.poly.coeff(r as usize))
            })
            .collect();
        out.push(AbelianBasisElement {
            components: picked.iter().map(|b| (b.d, b.j)).collect(),
            coeffs,
        });
        // odometer over the factor bases, last factor fastest
        let mut k = choice.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < factor_bases[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}
