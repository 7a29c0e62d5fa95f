//! Sparse multivariate polynomials over any [`Field`] and symbolic
//! determinants of small polynomial matrices.
//!
//! Variables are named. Arithmetic between polynomials with different
//! variable lists first aligns them by name: the left operand's order is
//! kept and unseen names are appended.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rand::RngCore;

use crate::error::{AlgebraError, Result};
use crate::rings::{text, Field};

/// Largest dimension accepted by [`symbolic_det`].
pub const DET_CAP: usize = 8;

#[derive(Clone, Debug)]
pub struct MultiPoly<F: Field> {
    field: F,
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, F::Elem>,
}

/// Graded lexicographic order, largest first.
fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(field: F, vars: Vec<String>) -> Self {
        MultiPoly { field, vars, terms: BTreeMap::new() }
    }

    pub fn constant(field: F, vars: Vec<String>, c: F::Elem) -> Self {
        let mut p = Self::zero(field, vars);
        let k = p.vars.len();
        p.add_term(vec![0; k], c);
        p
    }

    pub fn one(field: F, vars: Vec<String>) -> Self {
        let one = field.one();
        Self::constant(field, vars, one)
    }

    /// The `i`-th variable.
    pub fn var(field: F, vars: Vec<String>, i: usize) -> Result<Self> {
        if i >= vars.len() {
            return Err(AlgebraError::DimensionMismatch { expected: vars.len(), actual: i + 1 });
        }
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let one = field.one();
        let mut p = Self::zero(field, vars);
        p.add_term(e, one);
        Ok(p)
    }

    /// All variables `X_v` of the list, in order.
    pub fn variables(field: &F, vars: &[String]) -> Vec<Self> {
        (0..vars.len()).map(|i| Self::var(field.clone(), vars.to_vec(), i).expect("index in range")).collect()
    }

    /// `sum_i c_i X_i`.
    pub fn linear_form(field: F, vars: Vec<String>, coeffs: &[F::Elem]) -> Result<Self> {
        if coeffs.len() != vars.len() {
            return Err(AlgebraError::DimensionMismatch { expected: vars.len(), actual: coeffs.len() });
        }
        let mut p = Self::zero(field, vars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; coeffs.len()];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        Ok(p)
    }

    pub fn from_terms(field: F, vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<u32>, F::Elem)>) -> Result<Self> {
        let mut p = Self::zero(field, vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(AlgebraError::DimensionMismatch { expected: p.vars.len(), actual: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = self.field.add(v, &c);
                if self.field.is_zero(&s) {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn coeff(&self, exponents: &[u32]) -> F::Elem {
        self.terms.get(exponents).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Terms in graded lexicographic order, largest first.
    pub fn terms(&self) -> Vec<(&[u32], &F::Elem)> {
        let mut out: Vec<_> = self.terms.iter().map(|(e, c)| (e.as_slice(), c)).collect();
        out.sort_by(|a, b| grlex(a.0, b.0));
        out
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable that occurs with a nonzero exponent.
    pub fn align_to(&self, vars: &[String]) -> Result<Self> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|e| e[i] != 0) {
                        return Err(AlgebraError::MissingAssignment(v.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = Self::zero(self.field.clone(), vars.to_vec());
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    ne[j] = k;
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self)> {
        if self.field != other.field {
            return Err(AlgebraError::RingMismatch { left: self.field.name(), right: other.field.name() });
        }
        if self.vars == other.vars {
            return Ok((self.clone(), other.clone()));
        }
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        Ok((self.align_to(&vars)?, other.align_to(&vars)?))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (mut a, b) = self.aligned(other)?;
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        Ok(a)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.aligned(other)?;
        let f = &a.field;
        let mut out = Self::zero(f.clone(), a.vars.clone());
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, f.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let mut out = Self::zero(self.field.clone(), self.vars.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), self.field.mul(c, s));
        }
        out
    }

    pub fn neg(&self) -> Self {
        let minus = self.field.neg(&self.field.one());
        self.scale(&minus)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.field.clone(), self.vars.clone());
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// Product of all items, `1` over `vars` when empty.
    pub fn product<'a>(field: &F, vars: &[String], items: impl IntoIterator<Item = &'a Self>) -> Result<Self>
    where
        F: 'a,
    {
        items.into_iter().try_fold(Self::one(field.clone(), vars.to_vec()), |acc, p| acc.try_mul(p))
    }

    /// Applies `f` to every coefficient, landing in another field.
    pub fn map_coeffs<G: Field>(&self, field: G, mut f: impl FnMut(&F::Elem) -> Result<G::Elem>) -> Result<MultiPoly<G>> {
        let mut out = MultiPoly::zero(field, self.vars.clone());
        for (e, c) in &self.terms {
            let v = f(c)?;
            out.add_term(e.clone(), v);
        }
        Ok(out)
    }

    /// Evaluates at values given in variable order.
    pub fn eval_slice(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.vars.len() {
            return Err(AlgebraError::DimensionMismatch { expected: self.vars.len(), actual: point.len() });
        }
        let f = &self.field;
        Ok(self.terms.iter().fold(f.zero(), |acc, (e, c)| {
            let m = e.iter().zip(point).fold(c.clone(), |m, (&k, x)| f.mul(&m, &f.pow(x, k as u128)));
            f.add(&acc, &m)
        }))
    }

    /// Evaluates at a named assignment; extra names are ignored.
    pub fn eval(&self, point: &BTreeMap<String, F::Elem>) -> Result<F::Elem> {
        let values = self
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| match point.get(v) {
                Some(x) => Ok(x.clone()),
                None if self.terms.keys().all(|e| e[i] == 0) => Ok(self.field.zero()),
                None => Err(AlgebraError::MissingAssignment(v.clone())),
            })
            .collect::<Result<Vec<_>>>()?;
        self.eval_slice(&values)
    }

    /// Text form, graded lexicographic order.
    pub fn format(&self) -> String {
        let terms: Vec<(String, String)> = self
            .terms()
            .into_iter()
            .map(|(e, c)| {
                let mono = e
                    .iter()
                    .zip(&self.vars)
                    .filter(|(&k, _)| k > 0)
                    .map(|(&k, v)| text::var_power(v, k))
                    .collect::<Vec<_>>()
                    .join("*");
                (self.field.format_elem(c), mono)
            })
            .collect();
        text::join_terms(&terms)
    }

    /// Parses the text form over the given variables.
    pub fn parse(field: F, vars: Vec<String>, s: &str) -> Result<Self> {
        let mut out = Self::zero(field.clone(), vars.clone());
        for term in text::parse_terms(s, &vars)? {
            let mut c = field.one();
            for factor in &term.coeff_factors {
                c = field.mul(&c, &field.parse_elem(factor)?);
            }
            if term.negated {
                c = field.neg(&c);
            }
            out.add_term(term.exponents, c);
        }
        Ok(out)
    }

    /// `(exponent vector, coefficient text)` pairs in graded lexicographic order.
    pub fn json_terms(&self) -> Vec<(Vec<u32>, String)> {
        self.terms().into_iter().map(|(e, c)| (e.to_vec(), self.field.format_elem(c))).collect()
    }
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        match self.aligned(other) {
            Ok((a, b)) => a.terms == b.terms,
            Err(_) => false,
        }
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl<F: Field> std::ops::Add for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: Self) -> MultiPoly<F> {
        self.try_add(rhs).expect("polynomials over the same field")
    }
}

impl<F: Field> std::ops::Sub for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: Self) -> MultiPoly<F> {
        self.try_sub(rhs).expect("polynomials over the same field")
    }
}

impl<F: Field> std::ops::Mul for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: Self) -> MultiPoly<F> {
        self.try_mul(rhs).expect("polynomials over the same field")
    }
}

impl<F: Field> std::ops::Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        MultiPoly::neg(self)
    }
}

/// Determinant by cofactor expansion along rows, memoized on column subsets.
pub fn symbolic_det<F: Field>(m: &[Vec<MultiPoly<F>>]) -> Result<MultiPoly<F>> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(AlgebraError::NonSquare { rows: n, cols: row.len() });
    }
    if n > DET_CAP {
        return Err(AlgebraError::CapExceeded { size: n, cap: DET_CAP });
    }
    let Some(first) = m.first().and_then(|r| r.first()) else {
        return Err(AlgebraError::Unsupported("determinant of an empty matrix needs a field".into()));
    };
    let field = first.field.clone();
    let mut vars: Vec<String> = Vec::new();
    for p in m.iter().flatten() {
        if p.field != field {
            return Err(AlgebraError::RingMismatch { left: field.name(), right: p.field.name() });
        }
        for v in &p.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
    }
    let a: Vec<Vec<MultiPoly<F>>> =
        m.iter().map(|r| r.iter().map(|p| p.align_to(&vars)).collect::<Result<_>>()).collect::<Result<_>>()?;

    // memo[mask] = det of rows n-|mask|.. against the columns in mask
    let mut memo: Vec<Option<MultiPoly<F>>> = vec![None; 1 << n];
    memo[0] = Some(MultiPoly::one(field.clone(), vars.clone()));
    for mask in 1usize..(1 << n) {
        let row = n - mask.count_ones() as usize;
        let mut acc = MultiPoly::zero(field.clone(), vars.clone());
        for (idx, j) in (0..n).filter(|j| mask >> j & 1 == 1).enumerate() {
            if a[row][j].is_zero() {
                continue;
            }
            let minor = memo[mask ^ (1 << j)].as_ref().expect("smaller mask computed first");
            if minor.is_zero() {
                continue;
            }
            let t = a[row][j].try_mul(minor)?;
            acc = if idx % 2 == 0 { acc.try_add(&t)? } else { acc.try_sub(&t)? };
        }
        memo[mask] = Some(acc);
    }
    Ok(memo.pop().flatten().expect("full mask"))
}

/// Checks `a == b` at `count` random points drawn from the field.
pub fn agree_at_random_points<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>, rng: &mut dyn RngCore, count: usize) -> Result<bool> {
    let (a, b) = a.aligned(b)?;
    for _ in 0..count {
        let point: Vec<F::Elem> = a.vars.iter().map(|_| a.field.random_elem(rng)).collect();
        if a.eval_slice(&point)? != b.eval_slice(&point)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Variable names `X_<label>` for the given labels.
pub fn var_names<S: AsRef<str>>(labels: &[S]) -> Vec<String> {
    labels.iter().map(|l| format!("X_{}", l.as_ref())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CyclotomicField;
    use crate::rings::{PrimeField, Rationals};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn xs(n: usize) -> Vec<String> {
        var_names(&(0..n).map(|i| i.to_string()).collect::<Vec<_>>())
    }

    fn circulant<F: Field>(field: &F, n: usize) -> Vec<Vec<MultiPoly<F>>> {
        let x = MultiPoly::variables(field, &xs(n));
        (0..n).map(|r| (0..n).map(|c| x[(c + n - r) % n].clone()).collect()).collect()
    }

    #[test]
    fn arithmetic_examples() {
        let q = Rationals;
        let x = MultiPoly::variables(&q, &xs(2));
        let p = &(&x[0] + &x[1]) * &(&x[0] - &x[1]);
        assert_eq!(p.format(), "X_0^2 - X_1^2");
        assert!(p.scale(&q.int(0)).is_zero());
        assert_eq!(MultiPoly::zero(q, xs(2)).format(), "0");

        let k = CyclotomicField::new(3).unwrap();
        let j = k.zeta();
        let j2 = k.mul(&j, &j);
        let vars = xs(3);
        let a = MultiPoly::linear_form(k.clone(), vars.clone(), &[k.one(), j.clone(), j2.clone()]).unwrap();
        let b = MultiPoly::linear_form(k.clone(), vars.clone(), &[k.one(), j2, j]).unwrap();
        let expected =
            MultiPoly::parse(k.clone(), vars, "X_0^2 + X_1^2 + X_2^2 - X_0*X_1 - X_1*X_2 - X_2*X_0").unwrap();
        assert_eq!(&a * &b, expected);
        assert_eq!((&a * &b).format(), "X_0^2 - X_0*X_1 - X_0*X_2 + X_1^2 - X_1*X_2 + X_2^2");
    }

    #[test]
    fn aligns_variables_by_name() {
        let q = Rationals;
        let a = MultiPoly::var(q, vec!["X_a".into()], 0).unwrap();
        let b = MultiPoly::var(q, vec!["X_b".into()], 0).unwrap();
        let s = &a + &b;
        assert_eq!(s.vars(), &["X_a".to_string(), "X_b".to_string()]);
        let s2 = &b + &a;
        assert_eq!(s, s2);
        assert_eq!(s2.format(), "X_b + X_a");
        let f7 = PrimeField::new(7).unwrap();
        let c = MultiPoly::one(f7, vec![]);
        let d = MultiPoly::one(PrimeField::new(5).unwrap(), vec![]);
        assert!(matches!(c.try_add(&d), Err(AlgebraError::RingMismatch { .. })));
    }

    #[test]
    fn symbolic_det_examples() {
        let q = Rationals;
        let d = symbolic_det(&circulant(&q, 3)).unwrap();
        assert_eq!(d, MultiPoly::parse(q, xs(3), "X_0^3 + X_1^3 + X_2^3 - 3*X_0*X_1*X_2").unwrap());
        let one = symbolic_det(&circulant(&q, 1)).unwrap();
        assert_eq!(one.format(), "X_0");

        let mut pt = BTreeMap::new();
        for (i, v) in [2, 1, 0].iter().enumerate() {
            pt.insert(format!("X_{i}"), q.int(*v));
        }
        assert_eq!(d.eval(&pt).unwrap(), q.int(9));
        let ones: BTreeMap<_, _> = (0..3).map(|i| (format!("X_{i}"), q.int(1))).collect();
        assert_eq!(d.eval(&ones).unwrap(), q.int(0));

        let x = MultiPoly::variables(&q, &xs(2));
        let p = &(&x[0] * &x[0]) - &(&x[1] * &x[1]);
        assert_eq!(p.eval_slice(&[q.int(3), q.int(2)]).unwrap(), q.int(5));
        assert!(matches!(p.eval(&BTreeMap::new()), Err(AlgebraError::MissingAssignment(_))));

        let ns = vec![vec![x[0].clone(), x[1].clone()]];
        assert!(matches!(symbolic_det(&ns), Err(AlgebraError::NonSquare { .. })));
        assert!(matches!(symbolic_det(&circulant(&q, 9)), Err(AlgebraError::CapExceeded { .. })));
    }

    /// Leibniz expansion at random numeric points against the symbolic determinant.
    #[test]
    fn det_agrees_with_numeric_determinant() {
        let f = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=5 {
            let m = circulant(&f, n);
            let d = symbolic_det(&m).unwrap();
            for _ in 0..20 {
                let pt: Vec<u64> = (0..n).map(|_| f.random_elem(&mut rng)).collect();
                let numeric = crate::rings::Matrix::from_fn(f, n, n, |i, j| m[i][j].eval_slice(&pt).unwrap());
                assert_eq!(d.eval_slice(&pt).unwrap(), numeric.det().unwrap());
            }
        }
    }

    #[test]
    fn cyclic_det_is_product_of_linear_forms() {
        for n in 1..=6u64 {
            let k = CyclotomicField::new(n).unwrap();
            let zeta = k.zeta();
            let vars = xs(n as usize);
            let d = symbolic_det(&circulant(&k, n as usize)).unwrap();
            let forms: Vec<_> = (0..n)
                .map(|l| {
                    let c: Vec<_> = (0..n).map(|i| k.pow(&zeta, (i * l % n) as u128)).collect();
                    MultiPoly::linear_form(k.clone(), vars.clone(), &c).unwrap()
                })
                .collect();
            let prod = MultiPoly::product(&k, &vars, &forms).unwrap();
            assert_eq!(d, prod, "n = {n}");
            let mut rng = ChaCha8Rng::seed_from_u64(n);
            assert!(agree_at_random_points(&d, &prod, &mut rng, 20).unwrap());
        }
    }

    #[test]
    fn text_round_trip() {
        let k = CyclotomicField::new(3).unwrap();
        let vars = xs(3);
        let src = "(z + 1)*X_0^2*X_1 - 3*X_1*X_2 + (-z) + X_2";
        let p = MultiPoly::parse(k.clone(), vars.clone(), src).unwrap();
        let back = MultiPoly::parse(k, vars, &p.format()).unwrap();
        assert_eq!(p, back);
        assert_eq!(p.json_terms()[0].0, vec![2, 1, 0]);
    }

    #[test]
    fn eval_is_a_ring_homomorphism() {
        let f = PrimeField::new(13).unwrap();
        let vars = xs(3);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let random_poly = |rng: &mut ChaCha8Rng| {
            let terms: Vec<_> = (0..4)
                .map(|_| ((0..3).map(|_| rng.next_u32() % 3).collect::<Vec<u32>>(), f.random_elem(rng)))
                .collect();
            MultiPoly::from_terms(f, vars.clone(), terms).unwrap()
        };
        for _ in 0..500 {
            let a = random_poly(&mut rng);
            let b = random_poly(&mut rng);
            let pt: Vec<u64> = (0..3).map(|_| f.random_elem(&mut rng)).collect();
            let (ea, eb) = (a.eval_slice(&pt).unwrap(), b.eval_slice(&pt).unwrap());
            assert_eq!((&a * &b).eval_slice(&pt).unwrap(), f.mul(&ea, &eb));
            assert_eq!((&a + &b).eval_slice(&pt).unwrap(), f.add(&ea, &eb));
        }
    }
}
