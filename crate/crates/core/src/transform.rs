//! Fourier transform over a finite abelian group, group matrices on both
//! sides, idempotents of the group ring and the circulant algebra, and the
//! weight-rank theorem.
//!
//! Forward transform: `B_chi = sum_sigma chi(sigma) b_sigma`.
//! Inverse: `b_sigma = (1/n) sum_chi chi(sigma^{-1}) B_chi`.
//! Group matrix: `M(b)[tau][sigma] = b_{tau^{-1} sigma}`.

use crate::abelian::AbelianGroup;
use crate::error::{AlgebraError, Result};
use crate::multipoly::MultiPoly;
use crate::rings::{Field, Matrix, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Indexed by group elements.
    Group,
    /// Indexed by characters.
    Dual,
}

/// One field value per element (or per character) in canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupVector<F: Field> {
    group: AbelianGroup,
    field: F,
    side: Side,
    values: Vec<F::Elem>,
}

impl<F: Field> GroupVector<F> {
    pub fn new(group: AbelianGroup, field: F, side: Side, values: Vec<F::Elem>) -> Result<Self> {
        let n = group.order() as usize;
        if values.len() != n {
            return Err(AlgebraError::DimensionMismatch { expected: n, actual: values.len() });
        }
        Ok(GroupVector { group, field, side, values })
    }

    pub fn zero(group: AbelianGroup, field: F, side: Side) -> Self {
        let values = vec![field.zero(); group.order() as usize];
        GroupVector { group, field, side, values }
    }

    /// Indicator of the element (or character) at `index`.
    pub fn delta(group: AbelianGroup, field: F, side: Side, index: usize) -> Self {
        let mut v = Self::zero(group, field, side);
        v.values[index] = v.field.one();
        v
    }

    pub fn random(group: AbelianGroup, field: F, side: Side, rng: &mut dyn rand::RngCore) -> Self {
        let values = (0..group.order()).map(|_| field.random_elem(rng)).collect();
        GroupVector { group, field, side, values }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn values(&self) -> &[F::Elem] {
        &self.values
    }

    pub fn into_values(self) -> Vec<F::Elem> {
        self.values
    }

    /// Number of nonzero entries.
    pub fn hamming_weight(&self) -> usize {
        self.values.iter().filter(|v| !self.field.is_zero(v)).count()
    }

    /// Comma-separated values in canonical order.
    pub fn format(&self) -> String {
        self.values.iter().map(|v| self.field.format_elem(v)).collect::<Vec<_>>().join(",")
    }

    pub fn parse(group: AbelianGroup, field: F, side: Side, s: &str) -> Result<Self> {
        let values =
            split_top_level_commas(s).iter().map(|t| field.parse_elem(t.trim())).collect::<Result<Vec<_>>>()?;
        Self::new(group, field, side, values)
    }

    fn require_side(&self, side: Side) -> Result<()> {
        if self.side != side {
            return Err(AlgebraError::Unsupported(format!("expected a {side:?}-side vector, got {:?}", self.side)));
        }
        Ok(())
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(AlgebraError::RingMismatch { left: self.field.name(), right: other.field.name() });
        }
        if self.group.divisors() != other.group.divisors() || self.side != other.side {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.values.len(),
                actual: other.values.len(),
            });
        }
        Ok(())
    }
}

fn split_top_level_commas(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out
}

/// `B_chi = sum_sigma chi(sigma) b_sigma`.
pub fn fft<F: Field>(b: &GroupVector<F>) -> Result<GroupVector<F>> {
    b.require_side(Side::Group)?;
    let g = &b.group;
    let f = &b.field;
    let powers = g.root_powers(f)?;
    let table = g.pairing_table();
    let n = b.values.len();
    let values = (0..n)
        .map(|chi| {
            (0..n).fold(f.zero(), |acc, s| f.add(&acc, &f.mul(&powers[table[s][chi] as usize], &b.values[s])))
        })
        .collect();
    GroupVector::new(g.clone(), f.clone(), Side::Dual, values)
}

/// `b_sigma = (1/n) sum_chi chi(sigma^{-1}) B_chi`.
pub fn inverse_fft<F: Field>(big_b: &GroupVector<F>) -> Result<GroupVector<F>> {
    big_b.require_side(Side::Dual)?;
    let g = &big_b.group;
    let f = &big_b.field;
    let n_inv = f.inv_int(g.order())?;
    let powers = g.root_powers(f)?;
    let table = g.pairing_table();
    let e = g.exponent();
    let n = big_b.values.len();
    let values = (0..n)
        .map(|s| {
            let sum = (0..n).fold(f.zero(), |acc, chi| {
                let t = (e - table[s][chi]) % e;
                f.add(&acc, &f.mul(&powers[t as usize], &big_b.values[chi]))
            });
            f.mul(&sum, &n_inv)
        })
        .collect();
    GroupVector::new(g.clone(), f.clone(), Side::Group, values)
}

/// Lays out `values` as `(v_{tau^{-1} sigma})_{tau, sigma}`; works for any entry type.
pub fn group_matrix_layout<T: Clone>(group: &AbelianGroup, values: &[T]) -> Vec<Vec<T>> {
    let n = group.order() as usize;
    (0..n)
        .map(|tau| {
            let ti = group.inverse_index(tau);
            (0..n).map(|sigma| values[group.op_index(ti, sigma)].clone()).collect()
        })
        .collect()
}

/// `M(b)` for a group-side vector, `M^(B)` for a dual-side one.
pub fn group_matrix<F: Field>(v: &GroupVector<F>) -> Matrix<F> {
    let rows = group_matrix_layout(&v.group, &v.values);
    Matrix::from_rows(v.field.clone(), rows).expect("square layout")
}

pub fn dual_matrix<F: Field>(big_b: &GroupVector<F>) -> Result<Matrix<F>> {
    big_b.require_side(Side::Dual)?;
    Ok(group_matrix(big_b))
}

/// The generic group matrix `A_G = (X_{tau^{-1} sigma})`.
pub fn symbolic_group_matrix<F: Field>(group: &AbelianGroup, field: &F) -> Vec<Vec<MultiPoly<F>>> {
    let xs = MultiPoly::variables(field, &group.variable_names());
    group_matrix_layout(group, &xs)
}

/// Verifies `P^{-1} M(b) P = Diag(B_chi)` and the dual identity
/// `tP^{-1} M^(B) tP = n Diag(b_{sigma^{-1}})`; returns the eigenvalues `B_chi`.
pub fn diagonalize<F: Field>(b: &GroupVector<F>) -> Result<Vec<F::Elem>> {
    b.require_side(Side::Group)?;
    let g = &b.group;
    let f = &b.field;
    let p = g.character_matrix(f)?;
    let pinv = g.character_matrix_inverse(f)?;
    let d = pinv.mul(&group_matrix(b))?.mul(&p)?;
    if !d.is_diagonal() {
        return Err(AlgebraError::VerificationFailed("P^-1 M(b) P is not diagonal".into()));
    }
    let eigen = d.diag();
    let big_b = fft(b)?;
    if eigen != big_b.values {
        return Err(AlgebraError::VerificationFailed("diagonal of P^-1 M(b) P differs from fft(b)".into()));
    }
    let dual = pinv.transpose().mul(&dual_matrix(&big_b)?)?.mul(&p.transpose())?;
    let n = f.from_i64(g.order() as i64);
    let expected: Vec<F::Elem> =
        (0..b.values.len()).map(|s| f.mul(&n, &b.values[g.inverse_index(s)])).collect();
    if dual != Matrix::diagonal(f.clone(), &expected) {
        return Err(AlgebraError::VerificationFailed("dual-side identity fails".into()));
    }
    Ok(eigen)
}

/// Diagonalizes the generic group matrix: returns the diagonal of `P^{-1} A_G P`
/// after checking that every off-diagonal entry vanishes.
pub fn symbolic_diagonalize<F: Field>(group: &AbelianGroup, field: &F) -> Result<Vec<MultiPoly<F>>> {
    let p = group.character_matrix(field)?;
    let pinv = group.character_matrix_inverse(field)?;
    let a = symbolic_group_matrix(group, field);
    let d = conjugate_symbolic(&pinv, &a, &p)?;
    let n = d.len();
    for (i, row) in d.iter().enumerate() {
        if (0..n).any(|j| j != i && !row[j].is_zero()) {
            return Err(AlgebraError::VerificationFailed("P^-1 A_G P has off-diagonal terms".into()));
        }
    }
    Ok(d.into_iter().enumerate().map(|(i, mut row)| row.swap_remove(i)).collect())
}

/// `L A R` for numeric `L`, `R` and a polynomial matrix `A`.
pub fn conjugate_symbolic<F: Field>(
    left: &Matrix<F>,
    a: &[Vec<MultiPoly<F>>],
    right: &Matrix<F>,
) -> Result<Vec<Vec<MultiPoly<F>>>> {
    let n = a.len();
    if left.cols() != n || right.rows() != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, actual: left.cols() });
    }
    let field = left.field().clone();
    let vars = a.first().and_then(|r| r.first()).map(|p| p.vars().to_vec()).unwrap_or_default();
    let zero = MultiPoly::zero(field.clone(), vars);
    let mut ar = vec![vec![zero.clone(); right.cols()]; n];
    for (i, row) in ar.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            for k in 0..n {
                if !field.is_zero(right.get(k, j)) {
                    *slot = slot.try_add(&a[i][k].scale(right.get(k, j)))?;
                }
            }
        }
    }
    let mut out = vec![vec![zero; right.cols()]; left.rows()];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            for (k, ar_row) in ar.iter().enumerate() {
                if !field.is_zero(left.get(i, k)) {
                    *slot = slot.try_add(&ar_row[j].scale(left.get(i, k)))?;
                }
            }
        }
    }
    Ok(out)
}

/// `rank(M^(fft b))`, equal to the Hamming weight of `b`.
pub fn blahut_weight<F: Field>(b: &GroupVector<F>) -> Result<usize> {
    let big_b = fft(b)?;
    Ok(dual_matrix(&big_b)?.rank())
}

/// `(a * b)_rho = sum_{sigma tau = rho} a_sigma b_tau`.
pub fn convolve<F: Field>(a: &GroupVector<F>, b: &GroupVector<F>) -> Result<GroupVector<F>> {
    a.same_space(b)?;
    let g = &a.group;
    let f = &a.field;
    let n = a.values.len();
    let mut out = vec![f.zero(); n];
    for s in 0..n {
        if f.is_zero(&a.values[s]) {
            continue;
        }
        for t in 0..n {
            let r = g.op_index(s, t);
            out[r] = f.add(&out[r], &f.mul(&a.values[s], &b.values[t]));
        }
    }
    GroupVector::new(g.clone(), f.clone(), a.side, out)
}

/// `e_chi = (1/n) sum_sigma chi^{-1}(sigma) sigma`, one per character in canonical order.
pub fn group_idempotents<F: Field>(group: &AbelianGroup, field: &F) -> Result<Vec<GroupVector<F>>> {
    let n_inv = field.inv_int(group.order())?;
    let powers = group.root_powers(field)?;
    let e = group.exponent();
    let table = group.pairing_table();
    let n = group.order() as usize;
    (0..n)
        .map(|chi| {
            let values = (0..n).map(|s| field.mul(&powers[((e - table[s][chi]) % e) as usize], &n_inv)).collect();
            GroupVector::new(group.clone(), field.clone(), Side::Group, values)
        })
        .collect()
}

/// Checks `e_chi * e_psi = delta e_chi` and `sum e_chi = delta_identity`.
pub fn verify_group_idempotents<F: Field>(idems: &[GroupVector<F>]) -> Result<()> {
    let Some(first) = idems.first() else {
        return Err(AlgebraError::VerificationFailed("no idempotents".into()));
    };
    let (g, f) = (&first.group, &first.field);
    let zero = GroupVector::zero(g.clone(), f.clone(), Side::Group);
    let mut total = zero.clone();
    for (i, a) in idems.iter().enumerate() {
        for (j, b) in idems.iter().enumerate() {
            let prod = convolve(a, b)?;
            let expected = if i == j { a } else { &zero };
            if &prod != expected {
                return Err(AlgebraError::VerificationFailed(format!("e_{i} * e_{j} is wrong")));
            }
        }
        total.values = total.values.iter().zip(&a.values).map(|(x, y)| f.add(x, y)).collect();
    }
    let identity = g.index_of(&g.identity())?;
    if total != GroupVector::delta(g.clone(), f.clone(), Side::Group, identity) {
        return Err(AlgebraError::VerificationFailed("idempotents do not sum to 1".into()));
    }
    Ok(())
}

/// The shift-forward matrix `K`: circulant with first row `(0, 1, 0, ..., 0)`.
pub fn shift_matrix<F: Field>(n: usize, field: &F) -> Matrix<F> {
    let group = AbelianGroup::cyclic(n as u64);
    let idx = if n > 1 { 1 } else { 0 };
    group_matrix(&GroupVector::delta(group, field.clone(), Side::Group, idx))
}

/// `E_h = (1/n) sum_l zeta^{-hl} K^l` for `h = 0..n`.
pub fn circulant_idempotents<F: Field>(n: usize, field: &F) -> Result<Vec<Matrix<F>>> {
    let n_inv = field.inv_int(n as u64)?;
    let zeta = field.primitive_root(n as u64)?;
    let k = shift_matrix(n, field);
    let mut kp = Vec::with_capacity(n);
    let mut acc = Matrix::identity(field.clone(), n);
    for _ in 0..n {
        kp.push(acc.clone());
        acc = acc.mul(&k)?;
    }
    (0..n)
        .map(|h| {
            let mut e = Matrix::zeros(field.clone(), n, n);
            for (l, m) in kp.iter().enumerate() {
                let c = field.zpow(&zeta, -((h * l) as i64))?;
                e = e.add(&m.scale(&c))?;
            }
            Ok(e.scale(&n_inv))
        })
        .collect()
}

/// Verifies the circulant algebra identities: `K^n = I`, orthogonal
/// idempotents summing to `I`, `K^h = sum_l zeta^{hl} E_l` and that the
/// minimal polynomial of `K` is `T^n - 1`.
pub fn verify_circulant_reconstruction<F: Field>(n: usize, field: &F) -> Result<()> {
    let fail = |m: &str| Err(AlgebraError::VerificationFailed(format!("n = {n}: {m}")));
    let k = shift_matrix(n, field);
    let id = Matrix::identity(field.clone(), n);
    if k.pow(n as u64)? != id {
        return fail("K^n != I");
    }
    let es = circulant_idempotents(n, field)?;
    let zero = Matrix::zeros(field.clone(), n, n);
    let mut sum = zero.clone();
    for (i, a) in es.iter().enumerate() {
        for (j, b) in es.iter().enumerate() {
            let p = a.mul(b)?;
            if (i == j && &p != a) || (i != j && p != zero) {
                return fail(&format!("E_{i} E_{j} wrong"));
            }
        }
        sum = sum.add(a)?;
    }
    if sum != id {
        return fail("sum of E_h != I");
    }
    let zeta = field.primitive_root(n as u64)?;
    let mut kh = id.clone();
    let mut flat = Vec::with_capacity(n);
    for h in 0..n {
        let mut rebuilt = zero.clone();
        for (l, e) in es.iter().enumerate() {
            rebuilt = rebuilt.add(&e.scale(&field.pow(&zeta, (h * l) as u128)))?;
        }
        if rebuilt != kh {
            return fail(&format!("K^{h} != sum zeta^(hl) E_l"));
        }
        flat.push(kh.row_vecs().concat());
        kh = kh.mul(&k)?;
    }
    // I, K, ..., K^{n-1} independent: no polynomial of degree < n kills K
    if field.rank(&flat) != n {
        return fail("minimal polynomial of K has degree < n");
    }
    Ok(())
}

/// `P_h(X) = (1/n) sum_l zeta^{-hl} X^l`, so `P_h(zeta^k) = delta_{hk}`.
pub fn interpolation_basis<F: Field>(n: usize, field: &F) -> Result<Vec<UniPoly<F>>> {
    let n_inv = field.inv_int(n as u64)?;
    let zeta = field.primitive_root(n as u64)?;
    (0..n)
        .map(|h| {
            let coeffs = (0..n)
                .map(|l| Ok(field.mul(&field.zpow(&zeta, -((h * l) as i64))?, &n_inv)))
                .collect::<Result<Vec<_>>>()?;
            Ok(UniPoly::new(field.clone(), coeffs))
        })
        .collect()
}

/// The polynomial of degree `< n` taking `targets[h]` at `zeta^h`.
pub fn interpolate<F: Field>(field: &F, targets: &[F::Elem]) -> Result<UniPoly<F>> {
    let n = targets.len();
    if n == 0 {
        return Err(AlgebraError::DimensionMismatch { expected: 1, actual: 0 });
    }
    let basis = interpolation_basis(n, field)?;
    let mut acc = UniPoly::zero(field.clone());
    for (b, p) in targets.iter().zip(&basis) {
        acc = acc.try_add(&p.scale(b))?;
    }
    Ok(acc)
}
