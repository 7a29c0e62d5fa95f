//! Finite abelian groups in invariant-factor form, their duals and the
//! character pairing.
//!
//! Elements and characters are residue tuples listed in lexicographic
//! order. That order is the layout of every vector and matrix in the crate.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::rings::{Field, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<u64>);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character(Vec<u64>);

impl GroupElement {
    pub fn new(residues: Vec<u64>) -> Self {
        GroupElement(residues)
    }

    pub fn residues(&self) -> &[u64] {
        &self.0
    }
}

impl Character {
    pub fn new(residues: Vec<u64>) -> Self {
        Character(residues)
    }

    pub fn residues(&self) -> &[u64] {
        &self.0
    }
}

fn label(residues: &[u64]) -> String {
    residues.iter().map(u64::to_string).collect::<Vec<_>>().join("_")
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
    }
}

/// `C_{d_1} x ... x C_{d_k}` with `d_1 | d_2 | ... | d_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    divisors: Vec<u64>,
    /// Cyclic orders as the user wrote them, before normalization.
    shape: Vec<u64>,
}

impl AbelianGroup {
    pub fn cyclic(n: u64) -> Self {
        Self::from_orders(&[n]).expect("positive order")
    }

    /// Normalizes any product of cyclic groups to invariant-factor form.
    pub fn from_orders(orders: &[u64]) -> Result<Self> {
        if orders.is_empty() {
            return Err(AlgebraError::InvalidGroup("no cyclic factors".into()));
        }
        if orders.contains(&0) {
            return Err(AlgebraError::InvalidGroup("cyclic factor of order 0".into()));
        }
        // prime -> exponents of that prime across the factors
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &d in orders {
            for p in crate::rings::prime_factors(d) {
                let mut e = 0;
                let mut m = d;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                primary.entry(p).or_default().push(e);
            }
        }
        let k = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut divisors = vec![1u64; k];
        for (p, mut exps) in primary {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (i, e) in exps.into_iter().enumerate() {
                divisors[k - 1 - i] *= p.pow(e);
            }
        }
        if divisors.is_empty() {
            divisors.push(1);
        }
        Ok(AbelianGroup { divisors, shape: orders.to_vec() })
    }

    /// Parses descriptors such as `C4`, `C2xC3`, `C2xC2xC5`.
    pub fn parse(descriptor: &str) -> Result<Self> {
        let bad = || AlgebraError::parse(format!("invalid group descriptor `{descriptor}`"));
        let orders = descriptor
            .trim()
            .split(['x', 'X', '×'])
            .map(|part| {
                let part = part.trim();
                let digits = part.strip_prefix('C').or_else(|| part.strip_prefix('c')).ok_or_else(bad)?;
                digits.parse::<u64>().map_err(|_| bad())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_orders(&orders).map_err(|e| match e {
            AlgebraError::InvalidGroup(m) => AlgebraError::parse(m),
            other => other,
        })
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn shape(&self) -> &[u64] {
        &self.shape
    }

    pub fn order(&self) -> u64 {
        self.divisors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        *self.divisors.last().expect("at least one factor")
    }

    pub fn is_cyclic(&self) -> bool {
        self.divisors.len() == 1
    }

    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// `C6`, or `C2xC6`; a different user shape is appended as `(from C2xC3)`.
    pub fn name(&self) -> String {
        let fmt = |v: &[u64]| v.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join("x");
        if self.shape == self.divisors {
            fmt(&self.divisors)
        } else {
            format!("{} (from {})", fmt(&self.divisors), fmt(&self.shape))
        }
    }

    /// The dual group; same invariant factors.
    pub fn dual_group(&self) -> AbelianGroup {
        AbelianGroup { divisors: self.divisors.clone(), shape: self.divisors.clone() }
    }

    fn residues_at(&self, mut index: usize) -> Vec<u64> {
        let mut out = vec![0; self.divisors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.divisors).rev() {
            *slot = (index as u64) % d;
            index /= d as usize;
        }
        out
    }

    fn index_of_residues(&self, r: &[u64]) -> usize {
        r.iter().zip(&self.divisors).fold(0usize, |acc, (&x, &d)| acc * d as usize + x as usize)
    }

    fn check_residues(&self, r: &[u64]) -> Result<()> {
        if r.len() != self.divisors.len() {
            return Err(AlgebraError::DimensionMismatch { expected: self.divisors.len(), actual: r.len() });
        }
        if let Some((x, d)) = r.iter().zip(&self.divisors).find(|(x, d)| x >= d) {
            return Err(AlgebraError::UnknownElement(format!("residue {x} out of range for C{d}")));
        }
        Ok(())
    }

    /// All elements in lexicographic order of residue tuples.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order() as usize).map(|i| GroupElement(self.residues_at(i))).collect()
    }

    /// All characters in lexicographic order of dual residue tuples.
    pub fn characters(&self) -> Vec<Character> {
        (0..self.order() as usize).map(|i| Character(self.residues_at(i))).collect()
    }

    pub fn element_at(&self, index: usize) -> GroupElement {
        GroupElement(self.residues_at(index))
    }

    pub fn character_at(&self, index: usize) -> Character {
        Character(self.residues_at(index))
    }

    pub fn index_of(&self, sigma: &GroupElement) -> Result<usize> {
        self.check_residues(&sigma.0)?;
        Ok(self.index_of_residues(&sigma.0))
    }

    pub fn character_index(&self, chi: &Character) -> Result<usize> {
        self.check_residues(&chi.0)?;
        Ok(self.index_of_residues(&chi.0))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.divisors.len()])
    }

    pub fn op(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter().zip(&b.0).zip(&self.divisors).map(|((x, y), d)| (x + y) % d).collect(),
        )
    }

    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&self.divisors).map(|(x, d)| (d - x) % d).collect())
    }

    /// Index arithmetic: `index(a * b)`.
    pub fn op_index(&self, a: usize, b: usize) -> usize {
        let r = self.op(&self.element_at(a), &self.element_at(b));
        self.index_of_residues(&r.0)
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        let r = self.inverse(&self.element_at(a));
        self.index_of_residues(&r.0)
    }

    /// `X_0`, `X_1_2`, ... following the element labels.
    pub fn element_label(&self, sigma: &GroupElement) -> String {
        label(&sigma.0)
    }

    pub fn variable_names(&self) -> Vec<String> {
        self.elements().iter().map(|s| format!("X_{}", self.element_label(s))).collect()
    }

    /// `t` with `chi(sigma) = zeta_e^t`, namely `sum_i a_i s_i (e / d_i) mod e`.
    pub fn pairing_exponent(&self, sigma: &GroupElement, chi: &Character) -> Result<u64> {
        self.check_residues(&sigma.0)?;
        self.check_residues(&chi.0)?;
        Ok(self.pairing_unchecked(&sigma.0, &chi.0))
    }

    fn pairing_unchecked(&self, s: &[u64], a: &[u64]) -> u64 {
        let e = self.exponent();
        s.iter()
            .zip(a)
            .zip(&self.divisors)
            .fold(0u64, |acc, ((&si, &ai), &d)| (acc + ai * si % d * (e / d)) % e)
    }

    /// Pairing exponents indexed `[element][character]`.
    pub fn pairing_table(&self) -> Vec<Vec<u64>> {
        let n = self.order() as usize;
        (0..n)
            .map(|i| {
                let s = self.residues_at(i);
                (0..n).map(|j| self.pairing_unchecked(&s, &self.residues_at(j))).collect()
            })
            .collect()
    }

    /// Maps each `sigma` to the character of the dual group `chi -> chi(sigma)`,
    /// verifying the map is an isomorphism onto the bidual.
    pub fn bidual_identification(&self) -> Result<Vec<(GroupElement, Character)>> {
        let dual = self.dual_group();
        let n = self.order() as usize;
        let mut out = Vec::with_capacity(n);
        let mut seen = std::collections::HashSet::new();
        for sigma in self.elements() {
            // the evaluation character of Ĝ, read off through the dual pairing
            let ev = Character(sigma.0.clone());
            for chi in self.characters() {
                let on_dual = dual.pairing_unchecked(&chi.0, &ev.0);
                if on_dual != self.pairing_unchecked(&sigma.0, &chi.0) {
                    return Err(AlgebraError::VerificationFailed(format!(
                        "evaluation at {sigma} disagrees with the pairing at {chi}"
                    )));
                }
            }
            if !seen.insert(ev.clone()) {
                return Err(AlgebraError::VerificationFailed("bidual map is not injective".into()));
            }
            out.push((sigma, ev));
        }
        for (a, ea) in &out {
            for (b, eb) in &out {
                let ab = self.op(a, b);
                let prod = Character(self.op(&GroupElement(ea.0.clone()), &GroupElement(eb.0.clone())).0);
                if out[self.index_of_residues(&ab.0)].1 != prod {
                    return Err(AlgebraError::VerificationFailed("bidual map is not a homomorphism".into()));
                }
            }
        }
        Ok(out)
    }

    /// Powers `zeta_e^t` for `0 <= t < e` in the given field.
    pub fn root_powers<F: Field>(&self, field: &F) -> Result<Vec<F::Elem>> {
        let e = self.exponent();
        let c = field.characteristic();
        if c != 0 && self.order() % c == 0 {
            return Err(AlgebraError::CharacteristicDivides { n: self.order(), characteristic: c });
        }
        let zeta = field.primitive_root(e)?;
        let mut powers = Vec::with_capacity(e as usize);
        let mut acc = field.one();
        for _ in 0..e {
            powers.push(acc.clone());
            acc = field.mul(&acc, &zeta);
        }
        Ok(powers)
    }

    /// `P = (chi(sigma))`, rows indexed by elements, columns by characters.
    pub fn character_matrix<F: Field>(&self, field: &F) -> Result<Matrix<F>> {
        let powers = self.root_powers(field)?;
        let table = self.pairing_table();
        let n = self.order() as usize;
        Ok(Matrix::from_fn(field.clone(), n, n, |i, j| powers[table[i][j] as usize].clone()))
    }

    /// `(1/n) (chi^{-1}(sigma))^T`, the inverse of [`AbelianGroup::character_matrix`].
    pub fn character_matrix_inverse<F: Field>(&self, field: &F) -> Result<Matrix<F>> {
        let powers = self.root_powers(field)?;
        let e = self.exponent();
        let table = self.pairing_table();
        let n = self.order() as usize;
        let n_inv = field.inv_int(self.order())?;
        Ok(Matrix::from_fn(field.clone(), n, n, |chi, sigma| {
            let t = (e - table[sigma][chi]) % e;
            field.mul(&powers[t as usize], &n_inv)
        }))
    }
}

/// Pairing exponent on an arbitrary product `C_{d_1} x ... x C_{d_k}` without
/// normalizing it; `e = lcm(d_i)` and `t = sum_i a_i s_i (e / d_i) mod e`.
pub fn product_pairing_exponent(shape: &[u64], sigma: &[u64], chi: &[u64]) -> Result<u64> {
    if sigma.len() != shape.len() || chi.len() != shape.len() {
        return Err(AlgebraError::DimensionMismatch { expected: shape.len(), actual: sigma.len().max(chi.len()) });
    }
    if shape.contains(&0) {
        return Err(AlgebraError::InvalidGroup("cyclic factor of order 0".into()));
    }
    let e = shape.iter().fold(1u64, |acc, &d| num_integer::lcm(acc, d));
    let mut t = 0u64;
    for ((&d, &s), &a) in shape.iter().zip(sigma).zip(chi) {
        if s >= d || a >= d {
            return Err(AlgebraError::UnknownElement(format!("residue out of range for C{d}")));
        }
        t = (t + a * s % d * (e / d)) % e;
    }
    Ok(t)
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
