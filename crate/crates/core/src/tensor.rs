//! Tensors in `A ⊗ A` and `A ⊗ A ⊗ A` and the contraction used by the
//! Yang-Baxter type equations.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{add, sub, Field};

/// `r[(i, j)]` is the coefficient of `e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor2<F> {
    dim: usize,
    data: Vec<F>,
}

/// `t[(a, b, c)]` is the coefficient of `e_a ⊗ e_b ⊗ e_c`.
///
/// The same layout stores structure constants (`c[(i, j, k)]` is the
/// coefficient of `e_k` in `e_i ∘ e_j`) and comultiplications
/// (`d[(i, j, k)]` is the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`).
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3<F> {
    dim: usize,
    data: Vec<F>,
}

impl<F: Field> Tensor2<F> {
    pub fn zeros(dim: usize) -> Self {
        Tensor2 { dim, data: vec![F::zero(); dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Tensor2 { dim, data }
    }

    pub fn from_matrix(m: &Matrix<F>) -> Self {
        assert!(m.is_square(), "tensor from non-square matrix");
        Self::from_fn(m.rows(), |i, j| m[(i, j)].clone())
    }

    pub fn outer(x: &[F], y: &[F]) -> Self {
        assert_eq!(x.len(), y.len());
        Self::from_fn(x.len(), |i, j| x[i].clone() * y[j].clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.dim + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: F) {
        let idx = i * self.dim + j;
        self.data[idx] = add(&self.data[idx], &v);
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / self.dim, idx % self.dim, v))
    }

    pub fn as_matrix(&self) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j).clone())
    }

    /// The flip `τ(x ⊗ y) = y ⊗ x`.
    pub fn flip(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.flip()
    }

    pub fn is_skew(&self) -> bool {
        (self + &self.flip()).is_zero()
    }

    pub fn scale(&self, c: &F) -> Self {
        Tensor2 { dim: self.dim, data: self.data.iter().map(|v| c.clone() * v.clone()).collect() }
    }

    /// `(M ⊗ N) r`.
    pub fn apply(&self, m: &Matrix<F>, n: &Matrix<F>) -> Self {
        let t = self.as_matrix();
        Self::from_matrix(&(&(m * &t) * &n.transpose()))
    }

    /// `(M ⊗ I) r`.
    pub fn apply_left(&self, m: &Matrix<F>) -> Self {
        Self::from_matrix(&(m * &self.as_matrix()))
    }

    /// `(I ⊗ N) r`.
    pub fn apply_right(&self, n: &Matrix<F>) -> Self {
        Self::from_matrix(&(&self.as_matrix() * &n.transpose()))
    }

    /// Embed into a bigger space, placing index `i` at `offset_a + i` in the
    /// first leg and `j` at `offset_b + j` in the second.
    pub fn embed(&self, dim: usize, offset_a: usize, offset_b: usize) -> Self {
        let mut out = Self::zeros(dim);
        for (i, j, v) in self.nonzeros() {
            out.set(offset_a + i, offset_b + j, v.clone());
        }
        out
    }
}

impl<F: Field> Add for &Tensor2<F> {
    type Output = Tensor2<F>;
    fn add(self, o: &Tensor2<F>) -> Tensor2<F> {
        assert_eq!(self.dim, o.dim, "tensor dimension mismatch");
        Tensor2 { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| add(a, b)).collect() }
    }
}

impl<F: Field> Sub for &Tensor2<F> {
    type Output = Tensor2<F>;
    fn sub(self, o: &Tensor2<F>) -> Tensor2<F> {
        assert_eq!(self.dim, o.dim, "tensor dimension mismatch");
        Tensor2 { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| sub(a, b)).collect() }
    }
}

impl<F: Field> Neg for &Tensor2<F> {
    type Output = Tensor2<F>;
    fn neg(self) -> Tensor2<F> {
        Tensor2 { dim: self.dim, data: self.data.iter().map(|a| -a.clone()).collect() }
    }
}

impl<F: Field> Tensor3<F> {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 { dim, data: vec![F::zero(); dim * dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    data.push(f(a, b, c));
                }
            }
        }
        Tensor3 { dim, data }
    }

    pub fn outer(x: &[F], y: &[F], z: &[F]) -> Self {
        Self::from_fn(x.len(), |a, b, c| x[a].clone() * y[b].clone() * z[c].clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.dim + b) * self.dim + c
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &F {
        &self.data[self.idx(a, b, c)]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, v: F) {
        let i = self.idx(a, b, c);
        self.data[i] = v;
    }

    pub fn add_at(&mut self, a: usize, b: usize, c: usize, v: F) {
        let i = self.idx(a, b, c);
        self.data[i] = add(&self.data[i], &v);
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, usize, &F)> + '_ {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn scale(&self, c: &F) -> Self {
        Tensor3 { dim: self.dim, data: self.data.iter().map(|v| c.clone() * v.clone()).collect() }
    }

    /// Reorder the tensor factors: slot `k` of the result holds the factor
    /// that sat in slot `from[k]` (0-based). For example `[2, 0, 1]` sends
    /// `x ⊗ y ⊗ z` to `z ⊗ x ⊗ y`.
    pub fn permute(&self, from: [usize; 3]) -> Self {
        let mut out = Self::zeros(self.dim);
        for (a, b, c, v) in self.nonzeros() {
            let old = [a, b, c];
            out.set(old[from[0]], old[from[1]], old[from[2]], v.clone());
        }
        out
    }

    /// Apply a linear map to one tensor factor (slot 0, 1 or 2).
    pub fn apply_slot(&self, slot: usize, m: &Matrix<F>) -> Self {
        assert!(slot < 3);
        let mut out = Self::zeros(self.dim);
        for (a, b, c, v) in self.nonzeros() {
            let old = [a, b, c];
            for k in 0..self.dim {
                let coeff = &m[(k, old[slot])];
                if coeff.is_zero() {
                    continue;
                }
                let mut new = old;
                new[slot] = k;
                out.add_at(new[0], new[1], new[2], coeff.clone() * v.clone());
            }
        }
        out
    }

    /// For a structure-constant cube: the nonzero products grouped by the pair
    /// of factors, `table[i * dim + j]` lists `(k, c)` with `e_i ∘ e_j = Σ c e_k`.
    pub fn product_lists(&self) -> Vec<Vec<(usize, F)>> {
        let mut out = vec![Vec::new(); self.dim * self.dim];
        for (i, j, k, v) in self.nonzeros() {
            out[i * self.dim + j].push((k, v.clone()));
        }
        out
    }
}

impl<F: Field> Add for &Tensor3<F> {
    type Output = Tensor3<F>;
    fn add(self, o: &Tensor3<F>) -> Tensor3<F> {
        assert_eq!(self.dim, o.dim, "tensor dimension mismatch");
        Tensor3 { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| add(a, b)).collect() }
    }
}

impl<F: Field> Sub for &Tensor3<F> {
    type Output = Tensor3<F>;
    fn sub(self, o: &Tensor3<F>) -> Tensor3<F> {
        assert_eq!(self.dim, o.dim, "tensor dimension mismatch");
        Tensor3 { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| sub(a, b)).collect() }
    }
}

impl<F: Field> Neg for &Tensor3<F> {
    type Output = Tensor3<F>;
    fn neg(self) -> Tensor3<F> {
        Tensor3 { dim: self.dim, data: self.data.iter().map(|a| -a.clone()).collect() }
    }
}

/// Placement of a tensor `r = Σ a ⊗ b` inside `A ⊗ A ⊗ A`: `a` goes to slot
/// `.0` and `b` to slot `.1` (1-based, as in `r_13`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Legs(pub usize, pub usize);

impl Legs {
    pub const R12: Legs = Legs(1, 2);
    pub const R21: Legs = Legs(2, 1);
    pub const R13: Legs = Legs(1, 3);
    pub const R31: Legs = Legs(3, 1);
    pub const R23: Legs = Legs(2, 3);
    pub const R32: Legs = Legs(3, 2);
}

impl fmt::Display for Legs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}{}", self.0, self.1)
    }
}

/// `r_X ∘ s_Y` for placements `X`, `Y` sharing exactly one slot.
///
/// The slot shared by both placements receives the product of the two legs
/// landing there, with the leg of the first factor on the left. The other two
/// slots receive the remaining legs unchanged.
pub fn contract<F: Field>(
    table: &Tensor3<F>,
    r: &Tensor2<F>,
    x: Legs,
    s: &Tensor2<F>,
    y: Legs,
) -> Result<Tensor3<F>> {
    let bad = || Error::Pattern(x.0, x.1, y.0, y.1);
    let valid = |l: Legs| (1..=3).contains(&l.0) && (1..=3).contains(&l.1) && l.0 != l.1;
    if !valid(x) || !valid(y) {
        return Err(bad());
    }
    let shared: Vec<usize> = [x.0, x.1].into_iter().filter(|p| *p == y.0 || *p == y.1).collect();
    if shared.len() != 1 {
        return Err(bad());
    }
    let n = table.dim();
    if r.dim() != n || s.dim() != n {
        return Err(Error::Dimension(format!("contraction of dim {} and {} tensors over a dim {n} product", r.dim(), s.dim())));
    }
    let sh = shared[0];
    let products = table.product_lists();
    let mut out = Tensor3::zeros(n);
    for (ri, rj, rv) in r.nonzeros() {
        let (r_shared, r_other, r_other_slot) = if x.0 == sh { (ri, rj, x.1) } else { (rj, ri, x.0) };
        for (si, sj, sv) in s.nonzeros() {
            let (s_shared, s_other, s_other_slot) = if y.0 == sh { (si, sj, y.1) } else { (sj, si, y.0) };
            let coeff = rv.clone() * sv.clone();
            for (k, c) in &products[r_shared * n + s_shared] {
                let mut slots = [0usize; 3];
                slots[sh - 1] = *k;
                slots[r_other_slot - 1] = r_other;
                slots[s_other_slot - 1] = s_other;
                out.add_at(slots[0], slots[1], slots[2], coeff.clone() * c.clone());
            }
        }
    }
    Ok(out)
}

/// Render a tensor as a sum of basis terms, e.g. `e1⊗e2 - 2*e2⊗e1`.
pub fn format_terms<F: Field>(coeffs: &[F], dim: usize, order: usize, names: &dyn Fn(usize) -> String) -> String {
    let mut terms = Vec::new();
    for (idx, v) in coeffs.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let mut rest = idx;
        let mut legs = vec![0; order];
        for slot in (0..order).rev() {
            legs[slot] = rest % dim;
            rest /= dim;
        }
        let body = legs.iter().map(|&l| names(l)).collect::<Vec<_>>().join("⊗");
        terms.push((v.clone(), body));
    }
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (v, body)) in terms.into_iter().enumerate() {
        let neg = v.to_string().starts_with('-');
        let abs = if neg { -v } else { v };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if abs != F::one() {
            out.push_str(&format!("{abs}*"));
        }
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use num_rational::BigRational as Q;

    fn unit(n: usize, i: usize, j: usize) -> Tensor2<Q> {
        let mut t = Tensor2::zeros(n);
        t.set(i, j, int(1));
        t
    }

    #[test]
    fn contraction_by_hand() {
        // e1∘e1 = e1 is the only product.
        let mut table = Tensor3::<Q>::zeros(2);
        table.set(0, 0, 0, int(1));
        let r = unit(2, 0, 1);
        let out = contract(&table, &r, Legs::R12, &r, Legs::R13).unwrap();
        let mut want = Tensor3::zeros(2);
        want.set(0, 1, 1, int(1));
        assert_eq!(out, want);
        // r23∘r12 puts b∘a in slot 2, which vanishes for r = e1⊗e2.
        assert!(contract(&table, &r, Legs::R23, &r, Legs::R12).unwrap().is_zero());
    }

    #[test]
    fn patterns_must_share_one_slot() {
        let t = Tensor3::<Q>::zeros(2);
        let r = Tensor2::zeros(2);
        assert_eq!(contract(&t, &r, Legs::R12, &r, Legs::R21), Err(Error::Pattern(1, 2, 2, 1)));
        assert_eq!(contract(&t, &r, Legs(1, 1), &r, Legs::R13), Err(Error::Pattern(1, 1, 1, 3)));
        assert!(matches!(contract(&t, &Tensor2::zeros(3), Legs::R12, &r, Legs::R13), Err(Error::Dimension(_))));
    }

    #[test]
    fn flips_and_permutations() {
        assert_eq!(unit(2, 0, 1).flip(), unit(2, 1, 0));
        assert!(unit(2, 1, 1).is_symmetric());
        assert!((&unit(2, 0, 1) - &unit(2, 1, 0)).is_skew());
        let mut t = Tensor3::<Q>::zeros(3);
        t.set(0, 1, 2, int(5));
        let p = t.permute([2, 0, 1]);
        assert_eq!(p.get(2, 0, 1), &int(5));
        assert_eq!(t.apply_slot(1, &Matrix::identity(3)), t);
    }

    #[test]
    fn terms_render_in_index_order() {
        let mut t = Tensor2::<Q>::zeros(2);
        t.set(0, 1, int(1));
        t.set(1, 0, int(-2));
        let names = |i: usize| format!("e{}", i + 1);
        assert_eq!(format_terms(t.entries(), 2, 2, &names), "e1⊗e2 - 2*e2⊗e1");
        assert_eq!(format_terms(Tensor2::<Q>::zeros(2).entries(), 2, 2, &names), "0");
    }
}
