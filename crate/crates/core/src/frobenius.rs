//! Finite groups given by Cayley tables, matrix representations, the block
//! decomposition of the group matrix and Frobenius's factorization of the
//! group determinant.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::abelian::AbelianGroup;
use crate::cyclotomic::CyclotomicField;
use crate::error::{AlgebraError, Result};
use crate::factorize::{DetFactor, FactoredDeterminant, Irreducibility};
use crate::multipoly::{symbolic_det, MultiPoly};
use crate::rings::{Field, Matrix};
use crate::transform::conjugate_symbolic;

/// Largest representation degree accepted by [`frobenius_psi`].
pub const PSI_DEGREE_CAP: usize = 3;
/// Largest order whose Cayley table is checked for associativity.
pub const ASSOCIATIVITY_CHECK_MAX: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table: Latin square, associativity, identity, inverses.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        let bad = |m: String| Err(AlgebraError::InvalidGroup(m));
        if n == 0 {
            return bad("empty group".into());
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return bad(format!("table must be {n}x{n}"));
        }
        let mut seen = std::collections::HashSet::new();
        if !labels.iter().all(|l| seen.insert(l.clone())) {
            return bad("duplicate labels".into());
        }
        for i in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                let (a, b) = (table[i][j], table[j][i]);
                if a >= n || b >= n || row[a] || col[b] {
                    return bad(format!("table is not a Latin square at row/column {i}"));
                }
                row[a] = true;
                col[b] = true;
            }
        }
        if n <= ASSOCIATIVITY_CHECK_MAX {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if table[table[a][b]][c] != table[a][table[b][c]] {
                            return bad(format!(
                                "not associative: ({} {}) {}",
                                labels[a], labels[b], labels[c]
                            ));
                        }
                    }
                }
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x)) else {
            return bad("no identity element".into());
        };
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity))
            .collect::<Option<Vec<_>>>();
        let Some(inverses) = inverses else {
            return bad("some element has no inverse".into());
        };
        Ok(FiniteGroup { labels, table, identity, inverses })
    }

    /// `S_3 = <s, t | s^3 = t^2 = e, tst = s^2>` with elements
    /// `e, s, s2, t, ts, ts2`; `t^a s^b` sits at index `3a + b`.
    pub fn s3() -> Self {
        let labels = ["e", "s", "s2", "t", "ts", "ts2"].map(String::from).to_vec();
        let table = (0..6)
            .map(|x| {
                (0..6)
                    .map(|y| {
                        let (a, b, c, d) = (x / 3, x % 3, y / 3, y % 3);
                        let b = if c == 1 { (3 - b) % 3 } else { b };
                        3 * ((a + c) % 2) + (b + d) % 3
                    })
                    .collect()
            })
            .collect();
        Self::from_table(labels, table).expect("S_3 table is valid")
    }

    /// The same group with labels from the canonical element order.
    pub fn from_abelian(group: &AbelianGroup) -> Self {
        let elems = group.elements();
        let labels = elems.iter().map(|s| group.element_label(s)).collect();
        let n = elems.len();
        let table = (0..n).map(|a| (0..n).map(|b| group.op_index(a, b)).collect()).collect();
        Self::from_table(labels, table).expect("abelian tables are valid")
    }

    /// `{"labels": [...], "table": [[...], ...]}` with entries given as labels or indices.
    pub fn from_json(value: &Value) -> Result<Self> {
        let err = |m: &str| AlgebraError::parse(format!("group JSON: {m}"));
        let labels: Vec<String> = value
            .get("labels")
            .and_then(Value::as_array)
            .ok_or_else(|| err("missing `labels` array"))?
            .iter()
            .map(|v| match v {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                _ => Err(err("labels must be strings")),
            })
            .collect::<Result<_>>()?;
        let rows = value.get("table").and_then(Value::as_array).ok_or_else(|| err("missing `table` array"))?;
        let lookup = |v: &Value| -> Result<usize> {
            match v {
                Value::String(s) => labels.iter().position(|l| l == s).ok_or_else(|| err(&format!("unknown label `{s}`"))),
                Value::Number(n) => n.as_u64().map(|x| x as usize).ok_or_else(|| err("bad index")),
                _ => Err(err("table entries must be labels or indices")),
            }
        };
        let table = rows
            .iter()
            .map(|r| r.as_array().ok_or_else(|| err("table rows must be arrays"))?.iter().map(lookup).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Self::from_table(labels, table)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| AlgebraError::UnknownElement(label.to_string()))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn variable_names(&self) -> Vec<String> {
        self.labels.iter().map(|l| format!("X_{l}")).collect()
    }

    /// Lays out `values` as `(v_{tau^{-1} sigma})_{tau, sigma}`.
    pub fn group_matrix_layout<T: Clone>(&self, values: &[T]) -> Vec<Vec<T>> {
        let n = self.order();
        (0..n).map(|t| (0..n).map(|s| values[self.mul(self.inverse(t), s)].clone()).collect()).collect()
    }

    pub fn symbolic_group_matrix<F: Field>(&self, field: &F) -> Vec<Vec<MultiPoly<F>>> {
        self.group_matrix_layout(&MultiPoly::variables(field, &self.variable_names()))
    }
}

/// A matrix representation `g -> rho(g)`, images listed in element order.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F: Field> {
    name: String,
    field: F,
    degree: usize,
    images: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    /// Checks `rho(e) = I` and `rho(ab) = rho(a) rho(b)` for every pair.
    pub fn new(group: &FiniteGroup, name: impl Into<String>, field: F, images: Vec<Matrix<F>>) -> Result<Self> {
        let name = name.into();
        if images.len() != group.order() {
            return Err(AlgebraError::DimensionMismatch { expected: group.order(), actual: images.len() });
        }
        let degree = images[0].rows();
        if images.iter().any(|m| m.rows() != degree || m.cols() != degree) {
            return Err(AlgebraError::InvalidGroup(format!("{name}: images must be {degree}x{degree}")));
        }
        if images[group.identity()] != Matrix::identity(field.clone(), degree) {
            return Err(AlgebraError::VerificationFailed(format!("{name}: identity does not map to I")));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if images[a].mul(&images[b])? != images[group.mul(a, b)] {
                    return Err(AlgebraError::VerificationFailed(format!(
                        "{name}: not a homomorphism at ({}, {})",
                        group.labels()[a],
                        group.labels()[b]
                    )));
                }
            }
        }
        Ok(Representation { name, field, degree, images })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image(&self, g: usize) -> &Matrix<F> {
        &self.images[g]
    }

    /// Traces `chi(g)` in element order.
    pub fn character(&self) -> Vec<F::Elem> {
        let f = &self.field;
        self.images.iter().map(|m| f.sum(m.diag().iter())).collect()
    }

    /// `sum_g X_g rho(g)`.
    pub fn symbolic_block(&self, vars: &[String]) -> Vec<Vec<MultiPoly<F>>> {
        let f = &self.field;
        (0..self.degree)
            .map(|i| {
                (0..self.degree)
                    .map(|j| {
                        let coeffs: Vec<_> = self.images.iter().map(|m| m.get(i, j).clone()).collect();
                        MultiPoly::linear_form(f.clone(), vars.to_vec(), &coeffs).expect("one image per variable")
                    })
                    .collect()
            })
            .collect()
    }
}

/// `S_3` with its trivial, sign and two-dimensional representations over `Q(zeta_3)`.
pub fn s3_with_representations() -> (FiniteGroup, Vec<Representation<CyclotomicField>>) {
    let g = FiniteGroup::s3();
    let k = CyclotomicField::new(3).expect("Q(zeta_3)");
    let j = k.zeta();
    let (zero, one) = (k.zero(), k.one());
    let scalar = |v: i64| Matrix::from_rows(k.clone(), vec![vec![k.from_i64(v)]]).expect("1x1");
    let trivial = (0..6).map(|_| scalar(1)).collect();
    let sign = (0..6).map(|x| scalar(if x < 3 { 1 } else { -1 })).collect();
    let rho_s = Matrix::diagonal(k.clone(), &[j.clone(), k.mul(&j, &j)]);
    let rho_t = Matrix::from_rows(k.clone(), vec![vec![zero.clone(), one.clone()], vec![one, zero]]).expect("2x2");
    let two = (0..6)
        .map(|x| {
            let (a, b) = (x / 3, x % 3);
            rho_t.pow(a as u64).and_then(|t| t.mul(&rho_s.pow(b as u64)?)).expect("2x2 products")
        })
        .collect();
    let reps = vec![
        Representation::new(&g, "trivial", k.clone(), trivial).expect("trivial rep"),
        Representation::new(&g, "sign", k.clone(), sign).expect("sign rep"),
        Representation::new(&g, "standard", k, two).expect("degree-2 rep"),
    ];
    (g, reps)
}

/// The degree-one representations of an abelian group, one per character.
pub fn abelian_representations<F: Field>(group: &AbelianGroup, field: &F) -> Result<(FiniteGroup, Vec<Representation<F>>)> {
    let fg = FiniteGroup::from_abelian(group);
    let p = group.character_matrix(field)?;
    let reps = group
        .characters()
        .iter()
        .enumerate()
        .map(|(c, chi)| {
            let images = (0..fg.order())
                .map(|s| Matrix::from_rows(field.clone(), vec![vec![p.get(s, c).clone()]]))
                .collect::<Result<Vec<_>>>()?;
            Representation::new(&fg, format!("chi{chi}"), field.clone(), images)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((fg, reps))
}

fn check_complete<F: Field>(group: &FiniteGroup, reps: &[Representation<F>]) -> Result<()> {
    let sum: usize = reps.iter().map(|r| r.degree * r.degree).sum();
    if sum != group.order() {
        return Err(AlgebraError::IncompleteRepresentations { sum, order: group.order() });
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct BlockDiagonalization<F: Field> {
    /// Columns are the coefficient functions `g -> rho(g)_{ab}`, grouped by `(rho, a)`.
    pub p: Matrix<F>,
    /// One block `sum_g X_g rho(g)` per representation.
    pub blocks: Vec<Vec<Vec<MultiPoly<F>>>>,
    /// `P^{-1} A_G P`.
    pub conjugated: Vec<Vec<MultiPoly<F>>>,
}

/// Builds `P` from matrix coefficients and verifies that `P^{-1} A_G P` is
/// block diagonal with each `sum_g X_g rho(g)` repeated `deg rho` times.
pub fn block_diagonalize<F: Field>(group: &FiniteGroup, reps: &[Representation<F>]) -> Result<BlockDiagonalization<F>> {
    check_complete(group, reps)?;
    let field = reps[0].field.clone();
    let n = group.order();
    let mut cols: Vec<Vec<F::Elem>> = Vec::with_capacity(n);
    for r in reps {
        for a in 0..r.degree {
            for b in 0..r.degree {
                cols.push((0..n).map(|g| r.images[g].get(a, b).clone()).collect());
            }
        }
    }
    let p = Matrix::from_rows(field.clone(), cols)?.transpose();
    let pinv = p
        .inverse()?
        .ok_or_else(|| AlgebraError::VerificationFailed("matrix-coefficient basis is singular".into()))?;
    let vars = group.variable_names();
    let conjugated = conjugate_symbolic(&pinv, &group.symbolic_group_matrix(&field), &p)?;
    let blocks: Vec<_> = reps.iter().map(|r| r.symbolic_block(&vars)).collect();

    let zero = MultiPoly::zero(field, vars);
    let mut expected = vec![vec![zero; n]; n];
    let mut offset = 0;
    for (r, block) in reps.iter().zip(&blocks) {
        for _ in 0..r.degree {
            for i in 0..r.degree {
                for j in 0..r.degree {
                    expected[offset + i][offset + j] = block[i][j].clone();
                }
            }
            offset += r.degree;
        }
    }
    if expected != conjugated {
        return Err(AlgebraError::VerificationFailed("P^-1 A_G P is not the expected block matrix".into()));
    }
    Ok(BlockDiagonalization { p, blocks, conjugated })
}

/// Character values extended to tuples by
/// `chi(s, s_1..s_k) = chi(s) chi(s_1..s_k) - sum_i chi(s_1, .., s s_i, .., s_k)`.
pub struct TupleCharacter<'g, F: Field> {
    group: &'g FiniteGroup,
    field: F,
    base: Vec<F::Elem>,
    memo: HashMap<Vec<usize>, F::Elem>,
}

impl<'g, F: Field> TupleCharacter<'g, F> {
    pub fn new(group: &'g FiniteGroup, field: F, base: Vec<F::Elem>) -> Result<Self> {
        if base.len() != group.order() {
            return Err(AlgebraError::DimensionMismatch { expected: group.order(), actual: base.len() });
        }
        Ok(TupleCharacter { group, field, base, memo: HashMap::new() })
    }

    pub fn of_representation(group: &'g FiniteGroup, rep: &Representation<F>) -> Result<Self> {
        Self::new(group, rep.field.clone(), rep.character())
    }

    pub fn value(&mut self, tuple: &[usize]) -> Result<F::Elem> {
        if tuple.is_empty() {
            return Err(AlgebraError::DimensionMismatch { expected: 1, actual: 0 });
        }
        if let Some(&bad) = tuple.iter().find(|&&s| s >= self.group.order()) {
            return Err(AlgebraError::UnknownElement(format!("element index {bad}")));
        }
        Ok(self.eval(tuple))
    }

    pub fn value_by_labels(&mut self, labels: &[&str]) -> Result<F::Elem> {
        let idx = labels.iter().map(|l| self.group.index_of(l)).collect::<Result<Vec<_>>>()?;
        self.value(&idx)
    }

    fn eval(&mut self, tuple: &[usize]) -> F::Elem {
        if tuple.len() == 1 {
            return self.base[tuple[0]].clone();
        }
        if let Some(v) = self.memo.get(tuple) {
            return v.clone();
        }
        let s = tuple[0];
        let rest = &tuple[1..];
        let tail = self.eval(rest);
        let mut acc = self.field.mul(&self.base[s], &tail);
        for i in 0..rest.len() {
            let mut t = rest.to_vec();
            t[i] = self.group.mul(s, t[i]);
            let v = self.eval(&t);
            acc = self.field.sub(&acc, &v);
        }
        self.memo.insert(tuple.to_vec(), acc.clone());
        acc
    }
}

/// `S_k = sum_{(s_1..s_k)} chi(s_1 ... s_k) X_{s_1} ... X_{s_k}` for `k = 1..=f`.
fn power_sums<F: Field>(group: &FiniteGroup, field: &F, chi: &[F::Elem], f: usize) -> Result<Vec<MultiPoly<F>>> {
    let vars = group.variable_names();
    let xs = MultiPoly::variables(field, &vars);
    let n = group.order();
    // cur[g] = sum of X_{s_1}..X_{s_k} over tuples with product g
    let mut cur = xs.clone();
    let mut out = Vec::with_capacity(f);
    for k in 1..=f {
        if k > 1 {
            let mut next = vec![MultiPoly::zero(field.clone(), vars.clone()); n];
            for g in 0..n {
                if cur[g].is_zero() {
                    continue;
                }
                for h in 0..n {
                    let gh = group.mul(g, h);
                    next[gh] = next[gh].try_add(&cur[g].try_mul(&xs[h])?)?;
                }
            }
            cur = next;
        }
        let mut s = MultiPoly::zero(field.clone(), vars.clone());
        for g in 0..n {
            s = s.try_add(&cur[g].scale(&chi[g]))?;
        }
        out.push(s);
    }
    Ok(out)
}

/// All `(a_1..a_f)` with `a_i >= 0` and `sum i a_i = f`.
fn partitions_by_multiplicity(f: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, remaining: usize, f: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k > f {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=remaining / k {
            cur.push(a);
            go(k + 1, remaining - a * k, f, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, f, f, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug)]
pub struct FrobeniusPsi<F: Field> {
    /// `(-1)^f sum_A prod_k S_k^{a_k} / ((-k)^{a_k} a_k!)`.
    pub psi: MultiPoly<F>,
    /// `(-1)^f sum_{G^f} chi(s_1..s_f) X_{s_1}..X_{s_f}`.
    pub tuple_sum: MultiPoly<F>,
    /// `tuple_sum = ratio * psi`.
    pub ratio: F::Elem,
}

/// Both constructions of `Psi_rho`; the power-sum form is the factor of the
/// group determinant, the tuple sum is a constant multiple of it.
pub fn frobenius_psi<F: Field>(group: &FiniteGroup, rep: &Representation<F>) -> Result<FrobeniusPsi<F>> {
    let f = rep.degree;
    if f > PSI_DEGREE_CAP {
        return Err(AlgebraError::CapExceeded { size: f, cap: PSI_DEGREE_CAP });
    }
    let field = rep.field.clone();
    let vars = group.variable_names();
    let chi = rep.character();
    let sign = if f % 2 == 0 { field.one() } else { field.neg(&field.one()) };

    let s = power_sums(group, &field, &chi, f)?;
    let mut psi = MultiPoly::zero(field.clone(), vars.clone());
    for a in partitions_by_multiplicity(f) {
        let mut term = MultiPoly::one(field.clone(), vars.clone());
        let mut denom = field.one();
        for (i, &ak) in a.iter().enumerate() {
            let k = (i + 1) as i64;
            term = term.try_mul(&s[i].pow(ak as u32))?;
            let fact: i64 = (1..=ak as i64).product();
            denom = field.mul(&denom, &field.mul(&field.pow(&field.from_i64(-k), ak as u128), &field.from_i64(fact)));
        }
        psi = psi.try_add(&term.scale(&field.div(&field.one(), &denom)?))?;
    }
    psi = psi.scale(&sign);

    let mut tc = TupleCharacter::of_representation(group, rep)?;
    let xs = MultiPoly::variables(&field, &vars);
    let n = group.order();
    let mut tuple_sum = MultiPoly::zero(field.clone(), vars.clone());
    let mut idx = vec![0usize; f];
    loop {
        let c = tc.eval(&idx);
        if !field.is_zero(&c) {
            let mono = idx.iter().try_fold(MultiPoly::one(field.clone(), vars.clone()), |m, &i| m.try_mul(&xs[i]))?;
            tuple_sum = tuple_sum.try_add(&mono.scale(&c))?;
        }
        // odometer over G^f
        let mut pos = f;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
        }
        if idx.iter().all(|&i| i == 0) {
            break;
        }
    }
    tuple_sum = tuple_sum.scale(&sign);

    let (lead_exp, lead) = psi
        .terms()
        .first()
        .map(|(e, c)| (e.to_vec(), (*c).clone()))
        .ok_or_else(|| AlgebraError::VerificationFailed("Psi is zero".into()))?;
    let ratio = field.div(&tuple_sum.coeff(&lead_exp), &lead)?;
    if tuple_sum != psi.scale(&ratio) {
        return Err(AlgebraError::VerificationFailed("tuple sum is not a constant multiple of Psi".into()));
    }
    if psi.terms().iter().any(|(e, _)| e.iter().sum::<u32>() as usize != f) {
        return Err(AlgebraError::VerificationFailed("Psi is not homogeneous of degree f".into()));
    }
    Ok(FrobeniusPsi { psi, tuple_sum, ratio })
}

/// `det A_G = prod_rho Psi_rho^{deg rho}`, verified symbolically for
/// `|G| <= 6` and at 20 random points otherwise.
pub fn frobenius_factorization<F: Field>(
    group: &FiniteGroup,
    reps: &[Representation<F>],
) -> Result<FactoredDeterminant<F>> {
    check_complete(group, reps)?;
    let field = reps[0].field.clone();
    let vars = group.variable_names();
    let factors = reps
        .iter()
        .map(|r| {
            let irreducible = if r.degree == 1 { Irreducibility::Linear } else { Irreducibility::ClaimedByTheory };
            Ok(DetFactor {
                poly: frobenius_psi(group, r)?.psi,
                multiplicity: r.degree as u32,
                irreducible,
                label: r.name.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let fd = FactoredDeterminant { field: field.clone(), vars, factors };
    let prod = fd.product()?;
    if group.order() <= 6 {
        if symbolic_det(&group.symbolic_group_matrix(&field))? != prod {
            return Err(AlgebraError::VerificationFailed("Frobenius product differs from det A_G".into()));
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(group.order() as u64);
        let prod = prod.align_to(&group.variable_names())?;
        for _ in 0..20 {
            let pt: Vec<F::Elem> = (0..group.order()).map(|_| field.random_elem(&mut rng)).collect();
            let m = Matrix::from_rows(field.clone(), group.group_matrix_layout(&pt))?;
            if m.det()? != prod.eval_slice(&pt)? {
                return Err(AlgebraError::VerificationFailed("Frobenius product differs at a random point".into()));
            }
        }
    }
    Ok(fd)
}

/// `N(a, b, c) = a^2 + b^2 + c^2 - ab - bc - ca = (a + jb + j^2c)(a + j^2b + jc)`.
pub fn norm_form<F: Field>(field: &F, vars: &[String], a: &str, b: &str, c: &str) -> Result<MultiPoly<F>> {
    let v = |name: &str| {
        let i = vars.iter().position(|x| x == name).ok_or_else(|| AlgebraError::UnknownElement(name.into()))?;
        MultiPoly::var(field.clone(), vars.to_vec(), i)
    };
    let (x, y, z) = (v(a)?, v(b)?, v(c)?);
    let squares = x.pow(2).try_add(&y.pow(2))?.try_add(&z.pow(2))?;
    let mixed = x.try_mul(&y)?.try_add(&y.try_mul(&z)?)?.try_add(&z.try_mul(&x)?)?;
    squares.try_sub(&mixed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorize::det_split_field;
    use crate::rings::{PrimeField, Rationals};
    use rand::RngCore;

    #[test]
    fn s3_relations() {
        let g = FiniteGroup::s3();
        let (s, s2, t, ts, ts2) = (1, 2, 3, 4, 5);
        assert_eq!(g.mul(g.mul(t, s), t), s2);
        assert_eq!(g.mul(s, g.mul(s, s)), g.identity());
        assert_eq!(g.mul(t, t), g.identity());
        assert_eq!(g.mul(t, s), ts);
        assert_eq!(g.mul(t, s2), ts2);
        assert!(!g.is_abelian());
        assert_eq!(g.variable_names(), vec!["X_e", "X_s", "X_s2", "X_t", "X_ts", "X_ts2"]);
    }

    #[test]
    fn rejects_bad_tables() {
        let l = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert!(FiniteGroup::from_table(l(&["a", "b"]), vec![vec![0, 1], vec![0, 1]]).is_err());
        // Latin square without associativity
        let t = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
        assert!(FiniteGroup::from_table(l(&["a", "b", "c"]), t).is_err());
        let t = vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
        assert!(FiniteGroup::from_table(l(&["a", "b", "c"]), t).is_err());
        let json: Value = serde_json::from_str(r#"{"labels":["e","a"],"table":[["e","a"],["a","e"]]}"#).unwrap();
        let g = FiniteGroup::from_json(&json).unwrap();
        assert_eq!(g.order(), 2);
        let json: Value = serde_json::from_str(r#"{"labels":["e","a"],"table":[["e","b"],["a","e"]]}"#).unwrap();
        assert!(FiniteGroup::from_json(&json).is_err());
    }

    #[test]
    fn s3_representations_are_homomorphisms() {
        let (_, reps) = s3_with_representations();
        let k = reps[2].field().clone();
        let j = k.zeta();
        let j2 = k.mul(&j, &j);
        let ts = reps[2].image(4);
        assert_eq!(ts.row_vecs(), vec![vec![k.zero(), j2.clone()], vec![j.clone(), k.zero()]]);
        assert_eq!(reps[2].image(5).row_vecs(), vec![vec![k.zero(), j], vec![j2, k.zero()]]);
        assert_eq!(reps.iter().map(|r| r.degree()).collect::<Vec<_>>(), vec![1, 1, 2]);
        let g = FiniteGroup::s3();
        let bad: Vec<_> = (0..6).map(|x| Matrix::from_rows(k.clone(), vec![vec![k.from_i64(if x == 1 { -1 } else { 1 })]]).unwrap()).collect();
        assert!(Representation::new(&g, "bad", k, bad).is_err());
    }

    #[test]
    fn s3_block_diagonalization() {
        let (g, reps) = s3_with_representations();
        let bd = block_diagonalize(&g, &reps).unwrap();
        let k = reps[0].field().clone();
        let vars = g.variable_names();
        let l0 = MultiPoly::parse(k.clone(), vars.clone(), "X_e + X_s + X_s2 + X_t + X_ts + X_ts2").unwrap();
        let l1 = MultiPoly::parse(k.clone(), vars.clone(), "X_e + X_s + X_s2 - X_t - X_ts - X_ts2").unwrap();
        assert_eq!(bd.blocks[0][0][0], l0);
        assert_eq!(bd.blocks[1][0][0], l1);
        let m = &bd.blocks[2];
        let p = |s: &str| MultiPoly::parse(k.clone(), vars.clone(), s).unwrap();
        assert_eq!(m[0][0], p("X_e + z*X_s + (-z - 1)*X_s2"));
        assert_eq!(m[0][1], p("X_t + (-z - 1)*X_ts + z*X_ts2"));
        assert_eq!(m[1][0], p("X_t + z*X_ts + (-z - 1)*X_ts2"));
        assert_eq!(m[1][1], p("X_e + (-z - 1)*X_s + z*X_s2"));

        let det_m = symbolic_det(m).unwrap();
        let n1 = norm_form(&k, &vars, "X_e", "X_s", "X_s2").unwrap();
        let n2 = norm_form(&k, &vars, "X_t", "X_ts", "X_ts2").unwrap();
        assert_eq!(det_m, n1.try_sub(&n2).unwrap());
        let full = symbolic_det(&g.symbolic_group_matrix(&k)).unwrap();
        let prod = l0.try_mul(&l1).unwrap().try_mul(&det_m.pow(2)).unwrap();
        assert_eq!(full, prod);
    }

    #[test]
    fn extended_character_identities() {
        let (g, reps) = s3_with_representations();
        let k = reps[2].field().clone();
        let mut chi = TupleCharacter::of_representation(&g, &reps[2]).unwrap();
        assert_eq!(chi.value_by_labels(&["e", "e"]).unwrap(), k.from_i64(2));
        assert_eq!(chi.value_by_labels(&["s", "s"]).unwrap(), k.from_i64(2));
        assert!(chi.value(&[]).is_err());
        assert!(chi.value(&[6]).is_err());
        let base = reps[2].character();
        for a in 0..6 {
            for b in 0..6 {
                let v = chi.value(&[a, b]).unwrap();
                let expected = k.sub(&k.mul(&base[a], &base[b]), &base[g.mul(a, b)]);
                assert_eq!(v, expected);
                assert_eq!(v, chi.value(&[b, a]).unwrap());
                // (f - k) rule with k = 1
                assert_eq!(chi.value(&[g.identity(), a]).unwrap(), base[a]);
                for c in 0..6 {
                    assert!(k.is_zero(&chi.value(&[a, b, c]).unwrap()));
                    assert!(k.is_zero(&chi.value(&[g.identity(), a, b]).unwrap()));
                }
            }
        }
        for r in &reps[..2] {
            let mut chi = TupleCharacter::of_representation(&g, r).unwrap();
            for a in 0..6 {
                for b in 0..6 {
                    assert!(k.is_zero(&chi.value(&[a, b]).unwrap()));
                }
            }
        }
    }

    #[test]
    fn psi_for_s3() {
        let (g, reps) = s3_with_representations();
        let k = reps[0].field().clone();
        let vars = g.variable_names();
        for r in &reps[..2] {
            let psi = frobenius_psi(&g, r).unwrap();
            let lf = MultiPoly::linear_form(k.clone(), vars.clone(), &r.character()).unwrap();
            assert_eq!(psi.psi, lf);
            assert_eq!(psi.ratio, k.from_i64(-1));
        }
        let psi = frobenius_psi(&g, &reps[2]).unwrap();
        let bd = block_diagonalize(&g, &reps).unwrap();
        assert_eq!(psi.psi, symbolic_det(&bd.blocks[2]).unwrap());
        assert_eq!(psi.ratio, k.from_i64(2));
        let mut pt = vec![k.zero(); 6];
        pt[0] = k.one();
        assert_eq!(psi.psi.eval_slice(&pt).unwrap(), k.one());

        let fd = frobenius_factorization(&g, &reps).unwrap();
        assert_eq!(fd.factors.iter().map(|f| f.multiplicity).collect::<Vec<_>>(), vec![1, 1, 2]);
        assert!(frobenius_factorization(&g, &reps[..2]).is_err());
    }

    #[test]
    fn abelian_groups_via_frobenius() {
        let k = CyclotomicField::new(3).unwrap();
        let c3 = AbelianGroup::cyclic(3);
        let (fg, reps) = abelian_representations(&c3, &k).unwrap();
        let fd = frobenius_factorization(&fg, &reps).unwrap();
        let split = det_split_field(&c3, &k).unwrap();
        for (a, b) in fd.factors.iter().zip(&split.factors) {
            assert_eq!(a.poly, b.poly);
        }
        let q = Rationals;
        let (fg, reps) = abelian_representations(&AbelianGroup::cyclic(2), &q).unwrap();
        let fd = frobenius_factorization(&fg, &reps).unwrap();
        assert_eq!(fd.format(), "(X_0 + X_1)(X_0 - X_1)");

        // order 8 goes through random-point verification
        let f = PrimeField::new(17).unwrap();
        let (fg, reps) = abelian_representations(&AbelianGroup::parse("C2xC4").unwrap(), &f).unwrap();
        frobenius_factorization(&fg, &reps).unwrap();
    }

    #[test]
    fn vanishing_beyond_degree_sampled() {
        let (g, reps) = s3_with_representations();
        let k = reps[2].field().clone();
        let mut chi = TupleCharacter::of_representation(&g, &reps[2]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let len = 3 + (rng.next_u32() % 2) as usize;
            let t: Vec<usize> = (0..len).map(|_| (rng.next_u32() % 6) as usize).collect();
            assert!(k.is_zero(&chi.value(&t).unwrap()));
        }
    }
}
