//! Factorizations of `X^n - 1` and of the group determinant over a split
//! field, over `Q` and over finite fields, and the Vandermonde determinant
//! of the cyclic character matrix.

use num_integer::gcd;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::abelian::{AbelianGroup, Character};
use crate::cyclotomic::CyclotomicField;
use crate::error::{AlgebraError, Result};
use crate::multipoly::{symbolic_det, MultiPoly};
use crate::rings::{
    divisors, euler_phi, is_irreducible, multiplicative_order, Field, FiniteField, Matrix, PrimeField, Rational,
    Rationals, SimpleExtension, UniPoly,
};
use crate::transform::{group_matrix_layout, symbolic_group_matrix};

/// Largest group order verified by a full symbolic determinant.
pub const SYMBOLIC_VERIFY_MAX: u64 = 6;
/// Random points used beyond [`SYMBOLIC_VERIFY_MAX`].
pub const RANDOM_VERIFY_POINTS: usize = 20;

/// How a factor's irreducibility is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// Degree one.
    Linear,
    /// A univariate specialization of full degree passed `is_irreducible`,
    /// which certifies a homogeneous polynomial.
    VerifiedBySpecialization,
    /// Irreducible by theory; not independently certified.
    ClaimedByTheory,
}

impl Irreducibility {
    pub fn as_str(&self) -> &'static str {
        match self {
            Irreducibility::Linear => "linear",
            Irreducibility::VerifiedBySpecialization => "verified",
            Irreducibility::ClaimedByTheory => "claimed",
        }
    }
}

/// `Y_chi = sum_sigma chi(sigma) X_sigma`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearForm<F: Field> {
    pub character: Character,
    pub coeffs: Vec<F::Elem>,
}

impl<F: Field> LinearForm<F> {
    pub fn to_poly(&self, field: &F, vars: &[String]) -> Result<MultiPoly<F>> {
        MultiPoly::linear_form(field.clone(), vars.to_vec(), &self.coeffs)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DetFactor<F: Field> {
    pub poly: MultiPoly<F>,
    pub multiplicity: u32,
    pub irreducible: Irreducibility,
    /// `chi=(1)`, `d=3`, `L={1,2}` and so on.
    pub label: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactoredDeterminant<F: Field> {
    pub field: F,
    pub vars: Vec<String>,
    pub factors: Vec<DetFactor<F>>,
}

impl<F: Field> FactoredDeterminant<F> {
    pub fn product(&self) -> Result<MultiPoly<F>> {
        let mut acc = MultiPoly::one(self.field.clone(), self.vars.clone());
        for f in &self.factors {
            acc = acc.try_mul(&f.poly.pow(f.multiplicity))?;
        }
        Ok(acc)
    }

    /// `(f_1)(f_2)^2...` in factor order.
    pub fn format(&self) -> String {
        self.factors
            .iter()
            .map(|f| match f.multiplicity {
                1 => format!("({})", f.poly),
                m => format!("({})^{m}", f.poly),
            })
            .collect()
    }
}

/// Checks the factored product against `det A_G`: symbolically up to
/// [`SYMBOLIC_VERIFY_MAX`], at random points of the field beyond.
pub fn verify_group_determinant<F: Field>(group: &AbelianGroup, fd: &FactoredDeterminant<F>) -> Result<()> {
    let prod = fd.product()?;
    if group.order() <= SYMBOLIC_VERIFY_MAX {
        let det = symbolic_det(&symbolic_group_matrix(group, &fd.field))?;
        if det != prod {
            return Err(AlgebraError::VerificationFailed(format!("factors do not multiply to det A_{}", group.name())));
        }
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(group.order());
    let f = &fd.field;
    let prod = prod.align_to(&group.variable_names())?;
    for _ in 0..RANDOM_VERIFY_POINTS {
        let pt: Vec<F::Elem> = (0..group.order()).map(|_| f.random_elem(&mut rng)).collect();
        let m = Matrix::from_rows(f.clone(), group_matrix_layout(group, &pt))?;
        if m.det()? != prod.eval_slice(&pt)? {
            return Err(AlgebraError::VerificationFailed(format!(
                "factors disagree with det A_{} at a random point",
                group.name()
            )));
        }
    }
    Ok(())
}

/// `prod_{l=1}^{n-1} prod_{i<l} zeta^i (zeta^{l-i} - 1)`.
pub fn vandermonde_product<F: Field>(n: u64, field: &F) -> Result<F::Elem> {
    let zeta = field.primitive_root(n)?;
    let one = field.one();
    let mut acc = field.one();
    for l in 1..n {
        for i in 0..l {
            let t = field.mul(&field.pow(&zeta, i as u128), &field.sub(&field.pow(&zeta, (l - i) as u128), &one));
            acc = field.mul(&acc, &t);
        }
    }
    Ok(acc)
}

/// `det P` for the cyclic group of order `n`.
pub fn vandermonde_direct<F: Field>(n: u64, field: &F) -> Result<F::Elem> {
    AbelianGroup::cyclic(n).character_matrix(field)?.det()
}

/// `Delta_n`, computed both ways and checked equal.
pub fn vandermonde_det<F: Field>(n: u64, field: &F) -> Result<F::Elem> {
    let a = vandermonde_product(n, field)?;
    let b = vandermonde_direct(n, field)?;
    if a != b {
        return Err(AlgebraError::VerificationFailed(format!(
            "Delta_{n}: product formula {} but determinant {}",
            field.format_elem(&a),
            field.format_elem(&b)
        )));
    }
    Ok(a)
}

/// The linear forms `Y_chi`, one per character in canonical order.
pub fn linear_forms<F: Field>(group: &AbelianGroup, field: &F) -> Result<Vec<LinearForm<F>>> {
    let p = group.character_matrix(field)?;
    let cols = p.transpose().row_vecs();
    Ok(group.characters().into_iter().zip(cols).map(|(character, coeffs)| LinearForm { character, coeffs }).collect())
}

/// `det A_G = prod_chi Y_chi` over a field containing the `e`-th roots of unity.
pub fn det_split_field<F: Field>(group: &AbelianGroup, field: &F) -> Result<FactoredDeterminant<F>> {
    let vars = group.variable_names();
    let factors = linear_forms(group, field)?
        .into_iter()
        .map(|lf| {
            Ok(DetFactor {
                poly: lf.to_poly(field, &vars)?,
                multiplicity: 1,
                irreducible: Irreducibility::Linear,
                label: format!("chi={}", lf.character),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let fd = FactoredDeterminant { field: field.clone(), vars, factors };
    verify_group_determinant(group, &fd)?;
    Ok(fd)
}

/// `psi_d = prod_{gcd(m,d)=1} sum_i zeta_d^{mi} X_i`, computed in `Q(zeta_d)`
/// and brought down to `Q`.
pub fn psi_d(n: u64, d: u64) -> Result<MultiPoly<Rationals>> {
    if d == 0 || n % d != 0 {
        return Err(AlgebraError::NotDivisor { d, n });
    }
    let k = CyclotomicField::new(d)?;
    let vars = AbelianGroup::cyclic(n).variable_names();
    let zeta = k.zeta();
    let mut acc = MultiPoly::one(k.clone(), vars.clone());
    for m in (0..d).filter(|&m| gcd(m, d) == 1) {
        let coeffs: Vec<_> = (0..n).map(|i| k.pow(&zeta, ((m * i) % d) as u128)).collect();
        acc = acc.try_mul(&MultiPoly::linear_form(k.clone(), vars.clone(), &coeffs)?)?;
    }
    acc.map_coeffs(Rationals, |c| {
        k.as_rational(c)
            .ok_or_else(|| AlgebraError::VerificationFailed(format!("psi_{d} has an irrational coefficient")))
    })
}

/// `det A_{C_n} = prod_{d | n} psi_d` over `Q`.
pub fn det_over_q(n: u64) -> Result<FactoredDeterminant<Rationals>> {
    if n == 0 {
        return Err(AlgebraError::InvalidGroup("order 0".into()));
    }
    let group = AbelianGroup::cyclic(n);
    let factors = divisors(n)
        .into_iter()
        .map(|d| {
            let poly = psi_d(n, d)?;
            if poly.total_degree() != Some(euler_phi(d) as u32) {
                return Err(AlgebraError::VerificationFailed(format!("psi_{d} has the wrong degree")));
            }
            let irreducible =
                if euler_phi(d) == 1 { Irreducibility::Linear } else { Irreducibility::ClaimedByTheory };
            Ok(DetFactor { poly, multiplicity: 1, irreducible, label: format!("d={d}") })
        })
        .collect::<Result<Vec<_>>>()?;
    let fd = FactoredDeterminant { field: Rationals, vars: group.variable_names(), factors };
    verify_group_determinant(&group, &fd)?;
    Ok(fd)
}

/// Minimal subsets of `Z/nZ` stable under multiplication by `q`, ordered by
/// smallest element.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<Vec<Vec<u64>>> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(AlgebraError::NotCoprime { a: n, b: q });
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            coset.push(x);
            x = ((x as u128 * q as u128) % n as u128) as u64;
        }
        coset.sort_unstable();
        out.push(coset);
    }
    Ok(out)
}

/// An irreducible factor over `F_q` labelled by its exponent set.
#[derive(Clone, Debug, PartialEq)]
pub struct CosetFactor<F: Field> {
    pub labels: Vec<u64>,
    pub poly: UniPoly<F>,
}

impl<F: Field> CosetFactor<F> {
    pub fn label(&self) -> String {
        format!("{{{}}}", self.labels.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
    }
}

fn field_size<F: FiniteField>(field: &F) -> Result<u64> {
    u64::try_from(field.size()).map_err(|_| AlgebraError::Unsupported("field too large".into()))
}

/// Splitting extension of degree `ord_n(q)` with a primitive `n`-th root.
fn splitting_data<F: FiniteField>(field: &F, n: u64) -> Result<(SimpleExtension<F>, Vec<F::Elem>)> {
    let q = field_size(field)?;
    let r = multiplicative_order(q, n)?;
    let ext = SimpleExtension::of_degree(field, r as usize, "W")?;
    let zeta = ext.primitive_root(n)?;
    Ok((ext, zeta))
}

fn descend<F: FiniteField>(ext: &SimpleExtension<F>, p: &UniPoly<SimpleExtension<F>>) -> Result<UniPoly<F>> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| {
            ext.as_base(c)
                .ok_or_else(|| AlgebraError::VerificationFailed("coefficient outside the base field".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(ext.base().clone(), coeffs))
}

/// `Q_L(X)^q = Q_L(X^q)`, the criterion for coefficients in `F_q`.
pub fn descends_to_base<F: FiniteField>(p: &UniPoly<F>) -> Result<bool> {
    let q = field_size(p.field())?;
    Ok(p.pow(q) == p.compose_power(q as usize))
}

fn coset_factors<F: FiniteField>(field: &F, n: u64, cosets: Vec<Vec<u64>>) -> Result<Vec<CosetFactor<F>>> {
    let (ext, zeta) = splitting_data(field, n)?;
    cosets
        .into_iter()
        .map(|labels| {
            let mut acc = UniPoly::one(ext.clone());
            for &l in &labels {
                let root = ext.pow(&zeta, l as u128);
                acc = acc.try_mul(&UniPoly::new(ext.clone(), vec![ext.neg(&root), ext.one()]))?;
            }
            let poly = descend(&ext, &acc)?;
            if !descends_to_base(&poly)? {
                return Err(AlgebraError::VerificationFailed(format!("Q_L(X)^q != Q_L(X^q) for L = {labels:?}")));
            }
            Ok(CosetFactor { labels, poly })
        })
        .collect()
}

/// Irreducible factors of `X^n - 1` over `F_q`, one per cyclotomic coset.
pub fn factor_xn1_fq<F: FiniteField>(n: u64, field: &F) -> Result<Vec<CosetFactor<F>>> {
    let q = field_size(field)?;
    let cosets = cyclotomic_cosets(n, q)?;
    let factors = coset_factors(field, n, cosets)?;
    let prod = factors.iter().try_fold(UniPoly::one(field.clone()), |acc, f| acc.try_mul(&f.poly))?;
    if prod != UniPoly::x_pow_minus_one(field.clone(), n as usize) {
        return Err(AlgebraError::VerificationFailed(format!("coset factors do not multiply to X^{n} - 1")));
    }
    Ok(factors)
}

/// Factors `P_{mH}` of `Phi_d` over `F_q`, `H = <q>` in `(Z/dZ)^x`.
pub fn factor_phi_d_fq<F: FiniteField>(d: u64, field: &F) -> Result<Vec<CosetFactor<F>>> {
    let q = field_size(field)?;
    let cosets: Vec<Vec<u64>> =
        cyclotomic_cosets(d, q)?.into_iter().filter(|c| gcd(c[0], d) == 1).collect();
    let r = multiplicative_order(q, d)?;
    if cosets.iter().any(|c| c.len() as u64 != r) || cosets.len() as u64 * r != euler_phi(d) {
        return Err(AlgebraError::VerificationFailed(format!("coset sizes of Phi_{d} differ from ord_d(q)")));
    }
    let factors = coset_factors(field, d, cosets)?;
    let prod = factors.iter().try_fold(UniPoly::one(field.clone()), |acc, f| acc.try_mul(&f.poly))?;
    if prod != crate::cyclotomic::cyclotomic_poly_over(field, d) {
        return Err(AlgebraError::VerificationFailed(format!("coset factors do not multiply to Phi_{d}")));
    }
    Ok(factors)
}

/// `det A_{C_n}` over `F_q`: one norm-like product
/// `prod_{l in L} sum_i zeta^{li} X_i` per cyclotomic coset `L`.
pub fn det_over_fq<F: FiniteField>(n: u64, field: &F) -> Result<FactoredDeterminant<F>> {
    let q = field_size(field)?;
    let cosets = cyclotomic_cosets(n, q)?;
    let (ext, zeta) = splitting_data(field, n)?;
    let group = AbelianGroup::cyclic(n);
    let vars = group.variable_names();
    let mut factors = Vec::with_capacity(cosets.len());
    for labels in cosets {
        let mut acc = MultiPoly::one(ext.clone(), vars.clone());
        for &l in &labels {
            let coeffs: Vec<_> = (0..n).map(|i| ext.pow(&zeta, ((l * i) % n) as u128)).collect();
            acc = acc.try_mul(&MultiPoly::linear_form(ext.clone(), vars.clone(), &coeffs)?)?;
        }
        let poly = acc.map_coeffs(field.clone(), |c| {
            ext.as_base(c).ok_or_else(|| AlgebraError::VerificationFailed("coefficient outside F_q".into()))
        })?;
        let irreducible = if labels.len() == 1 {
            Irreducibility::Linear
        } else if specialization_is_irreducible(&poly, labels.len())? {
            Irreducibility::VerifiedBySpecialization
        } else {
            return Err(AlgebraError::VerificationFailed(format!("factor for L = {labels:?} is reducible")));
        };
        let label = format!("L={{{}}}", labels.iter().map(u64::to_string).collect::<Vec<_>>().join(","));
        factors.push(DetFactor { poly, multiplicity: 1, irreducible, label });
    }
    let fd = FactoredDeterminant { field: field.clone(), vars, factors };
    verify_group_determinant(&group, &fd)?;
    Ok(fd)
}

/// Sets `X_0 = -T`, `X_1 = 1` and the rest to 0; a full-degree irreducible
/// image certifies the homogeneous polynomial.
fn specialization_is_irreducible<F: FiniteField>(poly: &MultiPoly<F>, degree: usize) -> Result<bool> {
    let field = poly.field();
    if poly.vars().len() < 2 {
        return Ok(degree == 1);
    }
    let mut coeffs = vec![field.zero(); degree + 1];
    for (e, c) in poly.terms() {
        if e.iter().skip(2).any(|&k| k != 0) {
            continue;
        }
        let k = e[0] as usize;
        let sign = if k % 2 == 1 { field.neg(c) } else { c.clone() };
        coeffs[k] = field.add(&coeffs[k], &sign);
    }
    let t = UniPoly::new(field.clone(), coeffs);
    if t.degree() != Some(degree) {
        return Ok(false);
    }
    is_irreducible(&t)
}

fn rational_mod_p(field: &PrimeField, r: &Rational) -> Result<u64> {
    let num = field.reduce(r.numer());
    let den = field.reduce(r.denom());
    field.div(&num, &den)
}

/// Reduces each `psi_d` modulo `p` and matches it with the product of the
/// `F_p` factors whose labels have `gcd(l, n) = n/d`. Returns, per divisor,
/// the indices of the matching `F_p` factors; the groups partition all factors.
pub fn refactor_mod_p(n: u64, p: u64) -> Result<Vec<(u64, Vec<usize>)>> {
    let fp = PrimeField::new(p)?;
    let over_q = det_over_q(n)?;
    let over_p = det_over_fq(n, &fp)?;
    let cosets = cyclotomic_cosets(n, p)?;
    let mut used = vec![false; cosets.len()];
    let mut out = Vec::new();
    for (d, factor) in divisors(n).into_iter().zip(&over_q.factors) {
        let reduced = factor.poly.map_coeffs(fp, |c| rational_mod_p(&fp, c))?;
        let idx: Vec<usize> = (0..cosets.len()).filter(|&i| gcd(cosets[i][0], n) == n / d).collect();
        let mut prod = MultiPoly::one(fp, over_q.vars.clone());
        for &i in &idx {
            if used[i] {
                return Err(AlgebraError::VerificationFailed(format!("factor {i} matched twice")));
            }
            used[i] = true;
            prod = prod.try_mul(&over_p.factors[i].poly)?;
        }
        if prod != reduced {
            return Err(AlgebraError::VerificationFailed(format!("psi_{d} mod {p} != product of its F_{p} factors")));
        }
        out.push((d, idx));
    }
    if used.iter().any(|u| !u) {
        return Err(AlgebraError::VerificationFailed("some F_p factor matched no psi_d".into()));
    }
    Ok(out)
}

/// `(f_1)(f_2)...` for univariate factors in `X`.
pub fn format_factor_product<F: Field>(factors: &[UniPoly<F>]) -> String {
    factors.iter().map(|f| format!("({f})")).collect()
}
