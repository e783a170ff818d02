//! Algebras given by structure constants.

use std::borrow::Cow;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{vadd, vsub, Field};
use crate::tensor::Tensor3;

/// Binary operations of a noncommutative pre-Poisson algebra and the two
/// derived ones: `x · y = x ≻ y + x ≺ y` and `[x, y] = x ∗ y - y ∗ x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    Succ,
    Prec,
    Ast,
    Dot,
    Bracket,
}

impl Op {
    pub const BASIC: [Op; 3] = [Op::Succ, Op::Prec, Op::Ast];

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Succ => "succ",
            Op::Prec => "prec",
            Op::Ast => "ast",
            Op::Dot => "dot",
            Op::Bracket => "bracket",
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A vector space with three bilinear products `≻`, `≺`, `∗`.
#[derive(Clone, Debug, PartialEq)]
pub struct TriAlgebra<F> {
    pub succ: Tensor3<F>,
    pub prec: Tensor3<F>,
    pub ast: Tensor3<F>,
    pub basis: Option<Vec<String>>,
}

impl<F: Field> TriAlgebra<F> {
    pub fn zero(dim: usize) -> Self {
        TriAlgebra { succ: Tensor3::zeros(dim), prec: Tensor3::zeros(dim), ast: Tensor3::zeros(dim), basis: None }
    }

    pub fn new(succ: Tensor3<F>, prec: Tensor3<F>, ast: Tensor3<F>) -> Result<Self> {
        if succ.dim() != prec.dim() || succ.dim() != ast.dim() {
            return Err(Error::Dimension("products of different dimensions".into()));
        }
        Ok(TriAlgebra { succ, prec, ast, basis: None })
    }

    /// Build from a list of `(op, i, j, k, value)` with 0-based indices.
    pub fn from_entries(dim: usize, entries: &[(Op, usize, usize, usize, F)]) -> Self {
        let mut a = Self::zero(dim);
        for (op, i, j, k, v) in entries {
            a.table_mut(*op).add_at(*i, *j, *k, v.clone());
        }
        a
    }

    pub fn dim(&self) -> usize {
        self.succ.dim()
    }

    pub fn basis_name(&self, i: usize) -> String {
        match &self.basis {
            Some(names) => names[i].clone(),
            None => format!("e{}", i + 1),
        }
    }

    pub fn table_mut(&mut self, op: Op) -> &mut Tensor3<F> {
        match op {
            Op::Succ => &mut self.succ,
            Op::Prec => &mut self.prec,
            Op::Ast => &mut self.ast,
            _ => panic!("derived product {op} has no table of its own"),
        }
    }

    pub fn table(&self, op: Op) -> Cow<'_, Tensor3<F>> {
        match op {
            Op::Succ => Cow::Borrowed(&self.succ),
            Op::Prec => Cow::Borrowed(&self.prec),
            Op::Ast => Cow::Borrowed(&self.ast),
            Op::Dot => Cow::Owned(&self.succ + &self.prec),
            Op::Bracket => {
                let flipped = self.ast.permute([1, 0, 2]);
                Cow::Owned(&self.ast - &flipped)
            }
        }
    }

    pub fn mul(&self, op: Op, x: &[F], y: &[F]) -> Vec<F> {
        match op {
            Op::Dot => vadd(&mul_table(&self.succ, x, y), &mul_table(&self.prec, x, y)),
            Op::Bracket => vsub(&mul_table(&self.ast, x, y), &mul_table(&self.ast, y, x)),
            _ => mul_table(&self.table(op), x, y),
        }
    }

    /// Matrix of `L_op(x)`, i.e. `y ↦ x op y`.
    pub fn left(&self, op: Op, x: &[F]) -> Matrix<F> {
        match op {
            Op::Dot => &left_of(&self.succ, x) + &left_of(&self.prec, x),
            Op::Bracket => &left_of(&self.ast, x) - &right_of(&self.ast, x),
            _ => left_of(&self.table(op), x),
        }
    }

    /// Matrix of `R_op(x)`, i.e. `y ↦ y op x`.
    pub fn right(&self, op: Op, x: &[F]) -> Matrix<F> {
        match op {
            Op::Dot => &right_of(&self.succ, x) + &right_of(&self.prec, x),
            Op::Bracket => &right_of(&self.ast, x) - &left_of(&self.ast, x),
            _ => right_of(&self.table(op), x),
        }
    }

    /// `ad(x) = L_∗(x) - R_∗(x)`.
    pub fn ad(&self, x: &[F]) -> Matrix<F> {
        self.left(Op::Bracket, x)
    }

    pub fn subadjacent(&self) -> PoissonPair<F> {
        PoissonPair { dot: self.table(Op::Dot).into_owned(), bracket: self.table(Op::Bracket).into_owned(), basis: self.basis.clone() }
    }

    /// Restriction to a coordinate subspace, if it is closed under all three products.
    pub fn restrict(&self, idx: &[usize]) -> Option<Self> {
        let mut out = Self::zero(idx.len());
        for op in Op::BASIC {
            let t = self.table(op);
            for (a, &i) in idx.iter().enumerate() {
                for (b, &j) in idx.iter().enumerate() {
                    for k in 0..self.dim() {
                        let v = t.get(i, j, k);
                        if v.is_zero() {
                            continue;
                        }
                        let c = idx.iter().position(|&m| m == k)?;
                        out.table_mut(op).set(a, b, c, v.clone());
                    }
                }
            }
        }
        if let Some(names) = &self.basis {
            out.basis = Some(idx.iter().map(|&i| names[i].clone()).collect());
        }
        Some(out)
    }
}

/// A vector space with an associative-type product `·` and a bracket.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonPair<F> {
    pub dot: Tensor3<F>,
    pub bracket: Tensor3<F>,
    pub basis: Option<Vec<String>>,
}

impl<F: Field> PoissonPair<F> {
    pub fn zero(dim: usize) -> Self {
        PoissonPair { dot: Tensor3::zeros(dim), bracket: Tensor3::zeros(dim), basis: None }
    }

    pub fn dim(&self) -> usize {
        self.dot.dim()
    }

    pub fn dot(&self, x: &[F], y: &[F]) -> Vec<F> {
        mul_table(&self.dot, x, y)
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        mul_table(&self.bracket, x, y)
    }

    pub fn left_dot(&self, x: &[F]) -> Matrix<F> {
        left_of(&self.dot, x)
    }

    pub fn right_dot(&self, x: &[F]) -> Matrix<F> {
        right_of(&self.dot, x)
    }

    pub fn ad(&self, x: &[F]) -> Matrix<F> {
        left_of(&self.bracket, x)
    }
}

pub(crate) fn mul_table<F: Field>(t: &Tensor3<F>, x: &[F], y: &[F]) -> Vec<F> {
    let n = t.dim();
    assert!(x.len() == n && y.len() == n, "vector length does not match algebra dimension");
    let mut out = vec![F::zero(); n];
    for (i, j, k, c) in t.nonzeros() {
        if x[i].is_zero() || y[j].is_zero() {
            continue;
        }
        out[k] = out[k].clone() + x[i].clone() * y[j].clone() * c.clone();
    }
    out
}

pub(crate) fn left_of<F: Field>(t: &Tensor3<F>, x: &[F]) -> Matrix<F> {
    let n = t.dim();
    let mut m = Matrix::<F>::zeros(n, n);
    for (i, j, k, c) in t.nonzeros() {
        if !x[i].is_zero() {
            m[(k, j)] = m[(k, j)].clone() + x[i].clone() * c.clone();
        }
    }
    m
}

pub(crate) fn right_of<F: Field>(t: &Tensor3<F>, x: &[F]) -> Matrix<F> {
    let n = t.dim();
    let mut m = Matrix::<F>::zeros(n, n);
    for (i, j, k, c) in t.nonzeros() {
        if !x[j].is_zero() {
            m[(k, i)] = m[(k, i)].clone() + x[j].clone() * c.clone();
        }
    }
    m
}
