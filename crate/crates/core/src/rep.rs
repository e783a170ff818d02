//! Representations, matched pairs and A-structures.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Op, PoissonPair, TriAlgebra};
use crate::check::{check_algebra_on, check_poisson_on, AlgebraLevel, CheckReport};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{basis, vadd, vsub, Field};
use crate::tensor::Tensor3;

/// The six action maps `l≻, r≻, l≺, r≺, l∗, r∗`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Action {
    LSucc,
    RSucc,
    LPrec,
    RPrec,
    LAst,
    RAst,
}

impl Action {
    pub const ALL: [Action; 6] = [Action::LSucc, Action::RSucc, Action::LPrec, Action::RPrec, Action::LAst, Action::RAst];

    pub fn keyword(self) -> &'static str {
        match self {
            Action::LSucc => "lsucc",
            Action::RSucc => "rsucc",
            Action::LPrec => "lprec",
            Action::RPrec => "rprec",
            Action::LAst => "last",
            Action::RAst => "rast",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Action> {
        Action::ALL.into_iter().find(|a| a.keyword() == s)
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// `(V, l≻, r≻, l≺, r≺, l∗, r∗)`: each map is stored by its values on the
/// basis of `A`, as `dim × dim` matrices acting on `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct SixRep<F> {
    alg_dim: usize,
    dim: usize,
    maps: Vec<Vec<Matrix<F>>>,
}

impl<F: Field> SixRep<F> {
    pub fn zero(alg_dim: usize, dim: usize) -> Self {
        SixRep { alg_dim, dim, maps: vec![vec![Matrix::zeros(dim, dim); alg_dim]; 6] }
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: Action, i: usize) -> &Matrix<F> {
        &self.maps[a.index()][i]
    }

    pub fn get_mut(&mut self, a: Action, i: usize) -> &mut Matrix<F> {
        &mut self.maps[a.index()][i]
    }

    /// The action of a general element `x` of `A`.
    pub fn at(&self, a: Action, x: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = &m + &self.get(a, i).scale(xi);
            }
        }
        m
    }

    /// `(A, L≻, R≻, L≺, R≺, L∗, R∗)`.
    pub fn regular(alg: &TriAlgebra<F>) -> Self {
        let n = alg.dim();
        let mut rep = Self::zero(n, n);
        for i in 0..n {
            let e = basis::<F>(n, i);
            *rep.get_mut(Action::LSucc, i) = alg.left(Op::Succ, &e);
            *rep.get_mut(Action::RSucc, i) = alg.right(Op::Succ, &e);
            *rep.get_mut(Action::LPrec, i) = alg.left(Op::Prec, &e);
            *rep.get_mut(Action::RPrec, i) = alg.right(Op::Prec, &e);
            *rep.get_mut(Action::LAst, i) = alg.left(Op::Ast, &e);
            *rep.get_mut(Action::RAst, i) = alg.right(Op::Ast, &e);
        }
        rep
    }

    /// `(V*, r·*, -l≺*, -r≻*, l·*, r∗* - l∗*, r∗*)`, where `f*(x)` is the transpose of `f(x)`.
    pub fn dual(&self) -> Self {
        let mut out = Self::zero(self.alg_dim, self.dim);
        for i in 0..self.alg_dim {
            let t = |a: Action| self.get(a, i).transpose();
            let (ls, rs, lp, rp, la, ra) =
                (t(Action::LSucc), t(Action::RSucc), t(Action::LPrec), t(Action::RPrec), t(Action::LAst), t(Action::RAst));
            *out.get_mut(Action::LSucc, i) = &rs + &rp;
            *out.get_mut(Action::RSucc, i) = -&lp;
            *out.get_mut(Action::LPrec, i) = -&rs;
            *out.get_mut(Action::RPrec, i) = &ls + &lp;
            *out.get_mut(Action::LAst, i) = &ra - &la;
            *out.get_mut(Action::RAst, i) = ra;
        }
        out
    }

    /// Representation of the sub-adjacent pair: `(V, l≻ + l≺, r≻ + r≺, l∗ - r∗)`.
    pub fn subadjacent(&self) -> ThreeRep<F> {
        let mut out = ThreeRep::zero(self.alg_dim, self.dim);
        for i in 0..self.alg_dim {
            out.l[i] = self.get(Action::LSucc, i) + self.get(Action::LPrec, i);
            out.r[i] = self.get(Action::RSucc, i) + self.get(Action::RPrec, i);
            out.rho[i] = self.get(Action::LAst, i) - self.get(Action::RAst, i);
        }
        out
    }
}

/// `(V, l, r, ρ)` for a pair `(A, ·, [ , ])`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeRep<F> {
    pub l: Vec<Matrix<F>>,
    pub r: Vec<Matrix<F>>,
    pub rho: Vec<Matrix<F>>,
    dim: usize,
}

impl<F: Field> ThreeRep<F> {
    pub fn zero(alg_dim: usize, dim: usize) -> Self {
        let z = vec![Matrix::zeros(dim, dim); alg_dim];
        ThreeRep { l: z.clone(), r: z.clone(), rho: z, dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alg_dim(&self) -> usize {
        self.l.len()
    }

    fn combine(family: &[Matrix<F>], x: &[F], dim: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(dim, dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = &m + &family[i].scale(xi);
            }
        }
        m
    }

    pub fn l_at(&self, x: &[F]) -> Matrix<F> {
        Self::combine(&self.l, x, self.dim)
    }

    pub fn r_at(&self, x: &[F]) -> Matrix<F> {
        Self::combine(&self.r, x, self.dim)
    }

    pub fn rho_at(&self, x: &[F]) -> Matrix<F> {
        Self::combine(&self.rho, x, self.dim)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RepLevel {
    Quasi,
    Full,
    Strong,
}

impl RepLevel {
    pub fn name(self) -> &'static str {
        match self {
            RepLevel::Quasi => "quasi",
            RepLevel::Full => "full",
            RepLevel::Strong => "strong",
        }
    }
}

impl fmt::Display for RepLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RepLevel {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "quasi" => Ok(RepLevel::Quasi),
            "full" => Ok(RepLevel::Full),
            "strong" => Ok(RepLevel::Strong),
            _ => Err(format!("unknown representation level `{s}`")),
        }
    }
}

fn mat_cmp<F: Field>(rep: &mut CheckReport<F>, name: &str, w: &[usize], lhs: Matrix<F>, rhs: Matrix<F>) {
    rep.compare(name, w, lhs.entries().to_vec(), rhs.entries().to_vec());
}

/// Check the representation conditions up to `level`.
///
/// `quasi` covers the dendriform and pre-Lie module axioms plus the six mixed
/// conditions; `full` adds the three conditions making `A ⋉ V` a
/// noncommutative pre-Poisson algebra; `strong` adds the three conditions
/// making `A ⋉ V` coherent (and implies `full`).
pub fn check_six_rep<F: Field>(alg: &TriAlgebra<F>, rep: &SixRep<F>, level: RepLevel) -> Result<CheckReport<F>> {
    let n = alg.dim();
    if rep.alg_dim() != n {
        return Err(Error::Dimension(format!("representation of a dim {} algebra used with a dim {n} algebra", rep.alg_dim())));
    }
    let mut out = CheckReport::new("representation", level.name());
    let e = |i: usize| basis::<F>(n, i);
    let f = |a: Action, x: &[F]| rep.at(a, x);
    let g = |a: Action, i: usize| rep.get(a, i).clone();
    let mm = |p: &Matrix<F>, q: &Matrix<F>| p * q;
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(i), e(j));
            let w = [i, j];
            let ldot = |k: usize| &g(Action::LSucc, k) + &g(Action::LPrec, k);
            let rdot = |k: usize| &g(Action::RSucc, k) + &g(Action::RPrec, k);
            let (ls, rs, lp, rp, la, ra) =
                (Action::LSucc, Action::RSucc, Action::LPrec, Action::RPrec, Action::LAst, Action::RAst);

            // dendriform module, x = e_i, y = e_j
            mat_cmp(&mut out, "dendrep.lprec-prec", &w, f(lp, &alg.mul(Op::Prec, &x, &y)), mm(&g(lp, i), &ldot(j)));
            mat_cmp(&mut out, "dendrep.rprec-lprec", &w, mm(&g(rp, j), &g(lp, i)), mm(&g(lp, i), &rdot(j)));
            mat_cmp(&mut out, "dendrep.rprec-rprec", &w, mm(&g(rp, j), &g(rp, i)), f(rp, &alg.mul(Op::Dot, &x, &y)));
            mat_cmp(&mut out, "dendrep.lprec-succ", &w, f(lp, &alg.mul(Op::Succ, &x, &y)), mm(&g(ls, i), &g(lp, j)));
            mat_cmp(&mut out, "dendrep.rprec-lsucc", &w, mm(&g(rp, j), &g(ls, i)), mm(&g(ls, i), &g(rp, j)));
            mat_cmp(&mut out, "dendrep.rprec-rsucc", &w, mm(&g(rp, j), &g(rs, i)), f(rs, &alg.mul(Op::Prec, &x, &y)));
            mat_cmp(&mut out, "dendrep.lsucc-lsucc", &w, mm(&g(ls, i), &g(ls, j)), f(ls, &alg.mul(Op::Dot, &x, &y)));
            mat_cmp(&mut out, "dendrep.lsucc-rsucc", &w, mm(&g(ls, i), &g(rs, j)), mm(&g(rs, j), &ldot(i)));
            mat_cmp(&mut out, "dendrep.rsucc-succ", &w, f(rs, &alg.mul(Op::Succ, &x, &y)), mm(&g(rs, j), &rdot(i)));

            // pre-Lie module
            mat_cmp(
                &mut out,
                "prelierep.left",
                &w,
                &f(la, &alg.mul(Op::Ast, &x, &y)) - &mm(&g(la, i), &g(la, j)),
                &f(la, &alg.mul(Op::Ast, &y, &x)) - &mm(&g(la, j), &g(la, i)),
            );
            mat_cmp(
                &mut out,
                "prelierep.right",
                &w,
                &mm(&g(ra, j), &g(la, i)) - &mm(&g(la, i), &g(ra, j)),
                &mm(&g(ra, j), &g(ra, i)) - &f(ra, &alg.mul(Op::Ast, &x, &y)),
            );

            // mixed conditions
            let lmr = |k: usize| &g(la, k) - &g(ra, k);
            mat_cmp(
                &mut out,
                "quasi.lsucc-bracket",
                &w,
                f(ls, &alg.mul(Op::Bracket, &x, &y)),
                &mm(&g(la, i), &g(ls, j)) - &mm(&g(ls, j), &g(la, i)),
            );
            mat_cmp(
                &mut out,
                "quasi.rsucc-ast",
                &w,
                mm(&g(rs, j), &lmr(i)),
                &mm(&g(la, i), &g(rs, j)) - &f(rs, &alg.mul(Op::Ast, &x, &y)),
            );
            mat_cmp(
                &mut out,
                "quasi.lprec-ast",
                &w,
                mm(&g(lp, i), &lmr(j)),
                &mm(&g(la, j), &g(lp, i)) - &f(lp, &alg.mul(Op::Ast, &y, &x)),
            );
            mat_cmp(
                &mut out,
                "quasi.rprec-bracket",
                &w,
                f(rp, &alg.mul(Op::Bracket, &y, &x)),
                &mm(&g(la, j), &g(rp, i)) - &mm(&g(rp, i), &g(la, j)),
            );
            mat_cmp(
                &mut out,
                "quasi.rast-ldot",
                &w,
                mm(&g(ra, j), &ldot(i)),
                &f(lp, &alg.mul(Op::Ast, &x, &y)) + &mm(&g(ls, i), &g(ra, j)),
            );
            mat_cmp(
                &mut out,
                "quasi.rast-rdot",
                &w,
                mm(&g(ra, i), &rdot(j)),
                &mm(&g(rp, j), &g(ra, i)) + &f(rs, &alg.mul(Op::Ast, &y, &x)),
            );

            if level >= RepLevel::Full {
                mat_cmp(
                    &mut out,
                    "full.rsucc-ast",
                    &w,
                    mm(&g(rs, i), &lmr(j)),
                    &mm(&g(ls, j), &g(ra, i)) - &f(ra, &alg.mul(Op::Succ, &y, &x)),
                );
                mat_cmp(
                    &mut out,
                    "full.lprec-ast",
                    &w,
                    mm(&g(lp, i), &lmr(j)),
                    &mm(&g(rp, j), &g(ra, i)) - &f(ra, &alg.mul(Op::Prec, &x, &y)),
                );
                mat_cmp(
                    &mut out,
                    "full.last-dot",
                    &w,
                    f(la, &alg.mul(Op::Dot, &x, &y)),
                    &mm(&g(rp, j), &g(la, i)) + &mm(&g(ls, i), &g(la, j)),
                );
            }
            if level >= RepLevel::Strong {
                mat_cmp(
                    &mut out,
                    "strong.last-dot",
                    &w,
                    f(la, &alg.mul(Op::Dot, &x, &y)),
                    &mm(&g(la, i), &g(ls, j)) + &mm(&g(la, j), &g(rp, i)),
                );
                mat_cmp(
                    &mut out,
                    "strong.rast-ldot",
                    &w,
                    mm(&g(ra, j), &ldot(i)),
                    &mm(&g(la, i), &g(rs, j)) + &f(ra, &alg.mul(Op::Prec, &y, &x)),
                );
                mat_cmp(
                    &mut out,
                    "strong.rast-rdot",
                    &w,
                    mm(&g(ra, i), &rdot(j)),
                    &f(ra, &alg.mul(Op::Succ, &y, &x)) + &mm(&g(la, j), &g(lp, i)),
                );
            }
        }
    }
    Ok(out)
}

/// Two identities that follow from the `full` conditions; used as a
/// diagnostic cross-check.
pub fn check_derived_full<F: Field>(alg: &TriAlgebra<F>, rep: &SixRep<F>) -> CheckReport<F> {
    let n = alg.dim();
    let mut out = CheckReport::new("representation", "derived-full");
    let g = |a: Action, i: usize| rep.get(a, i).clone();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis::<F>(n, i), basis::<F>(n, j));
            let rdot = |k: usize| &g(Action::RSucc, k) + &g(Action::RPrec, k);
            let ldot = |k: usize| &g(Action::LSucc, k) + &g(Action::LPrec, k);
            let lmr = |k: usize| &g(Action::LAst, k) - &g(Action::RAst, k);
            let yx = alg.mul(Op::Dot, &y, &x);
            mat_cmp(
                &mut out,
                "derived.rdot-ldot",
                &[i, j],
                &(&rdot(i) * &lmr(j)) + &(&ldot(j) * &lmr(i)),
                &rep.at(Action::LAst, &yx) - &rep.at(Action::RAst, &yx),
            );
            let br = alg.mul(Op::Bracket, &x, &y);
            mat_cmp(
                &mut out,
                "derived.rdot-bracket",
                &[i, j],
                &(&rdot(i) * &lmr(j)) - &(&lmr(j) * &rdot(i)),
                &rep.at(Action::RSucc, &br) + &rep.at(Action::RPrec, &br),
            );
        }
    }
    out
}

/// Matched pair product on `A1 ⊕ A2`:
/// `(x + a) ∘ (y + b) = x ∘ y + l₂(a) y + r₂(b) x + a ∘ b + l₁(x) b + r₁(y) a`,
/// where `rho1` is an action of `A1` on `A2` and `rho2` of `A2` on `A1`.
pub fn matched_pair<F: Field>(a1: &TriAlgebra<F>, a2: &TriAlgebra<F>, rho1: &SixRep<F>, rho2: &SixRep<F>) -> Result<TriAlgebra<F>> {
    let (n, m) = (a1.dim(), a2.dim());
    if rho1.alg_dim() != n || rho1.dim() != m || rho2.alg_dim() != m || rho2.dim() != n {
        return Err(Error::Dimension("matched pair actions do not fit the algebras".into()));
    }
    let d = n + m;
    let mut out = TriAlgebra::zero(d);
    let actions = [(Op::Succ, Action::LSucc, Action::RSucc), (Op::Prec, Action::LPrec, Action::RPrec), (Op::Ast, Action::LAst, Action::RAst)];
    for (op, la, ra) in actions {
        let t: &mut Tensor3<F> = out.table_mut(op);
        for (i, j, k, v) in a1.table(op).nonzeros() {
            t.set(i, j, k, v.clone());
        }
        for (i, j, k, v) in a2.table(op).nonzeros() {
            t.set(n + i, n + j, n + k, v.clone());
        }
        for x in 0..n {
            for b in 0..m {
                // x ∘ b = r₂(b) x + l₁(x) b
                for k in 0..n {
                    let v = &rho2.get(ra, b)[(k, x)];
                    if !v.is_zero() {
                        t.add_at(x, n + b, k, v.clone());
                    }
                }
                for k in 0..m {
                    let v = &rho1.get(la, x)[(k, b)];
                    if !v.is_zero() {
                        t.add_at(x, n + b, n + k, v.clone());
                    }
                }
                // b ∘ x = l₂(b) x + r₁(x) b
                for k in 0..n {
                    let v = &rho2.get(la, b)[(k, x)];
                    if !v.is_zero() {
                        t.add_at(n + b, x, k, v.clone());
                    }
                }
                for k in 0..m {
                    let v = &rho1.get(ra, x)[(k, b)];
                    if !v.is_zero() {
                        t.add_at(n + b, x, n + k, v.clone());
                    }
                }
            }
        }
    }
    if let (Some(b1), Some(b2)) = (&a1.basis, &a2.basis) {
        out.basis = Some(b1.iter().chain(b2).cloned().collect());
    }
    Ok(out)
}

/// `A ⋉ V`, optionally with products on `V`.
pub fn semidirect<F: Field>(alg: &TriAlgebra<F>, rep: &SixRep<F>, v_products: Option<&TriAlgebra<F>>) -> Result<TriAlgebra<F>> {
    let zero = TriAlgebra::zero(rep.dim());
    let v = v_products.unwrap_or(&zero);
    if v.dim() != rep.dim() {
        return Err(Error::Dimension("products on the module have the wrong dimension".into()));
    }
    matched_pair(alg, v, rep, &SixRep::zero(rep.dim(), alg.dim()))
}

/// `A ⋉ V` for a pair and a three-map representation.
pub fn poisson_semidirect<F: Field>(p: &PoissonPair<F>, rep: &ThreeRep<F>, v_products: Option<&PoissonPair<F>>) -> Result<PoissonPair<F>> {
    let (n, m) = (p.dim(), rep.dim());
    if rep.alg_dim() != n {
        return Err(Error::Dimension("representation does not fit the pair".into()));
    }
    let mut out = PoissonPair::zero(n + m);
    for (i, j, k, v) in p.dot.nonzeros() {
        out.dot.set(i, j, k, v.clone());
    }
    for (i, j, k, v) in p.bracket.nonzeros() {
        out.bracket.set(i, j, k, v.clone());
    }
    if let Some(vp) = v_products {
        for (i, j, k, v) in vp.dot.nonzeros() {
            out.dot.set(n + i, n + j, n + k, v.clone());
        }
        for (i, j, k, v) in vp.bracket.nonzeros() {
            out.bracket.set(n + i, n + j, n + k, v.clone());
        }
    }
    for x in 0..n {
        for b in 0..m {
            for k in 0..m {
                let l = &rep.l[x][(k, b)];
                let r = &rep.r[x][(k, b)];
                let rho = &rep.rho[x][(k, b)];
                out.dot.add_at(x, n + b, n + k, l.clone());
                out.dot.add_at(n + b, x, n + k, r.clone());
                out.bracket.add_at(x, n + b, n + k, rho.clone());
                out.bracket.add_at(n + b, x, n + k, -rho.clone());
            }
        }
    }
    Ok(out)
}

/// Check that `(a2, rep)` is an A-structure over `a1`: the identities that
/// make `a1 ⋉ a2` (with the products of `a2`) satisfy the noncommutative
/// pre-Poisson axioms at triples with two entries from `a2`, and likewise
/// for the sub-adjacent Poisson data. The direct identities are cross-checked
/// against the semidirect construction; disagreement is a consistency fault.
pub fn check_a_structure<F: Field>(a1: &TriAlgebra<F>, a2: &TriAlgebra<F>, rep: &SixRep<F>) -> Result<CheckReport<F>> {
    let (n, m) = (a1.dim(), a2.dim());
    if rep.alg_dim() != n || rep.dim() != m {
        return Err(Error::Dimension("representation does not fit the A-structure".into()));
    }
    let npp = a_npp_identities(a2, rep);
    let poisson = a_poisson_identities(&a2.subadjacent(), &rep.subadjacent());

    let d = semidirect(a1, rep, Some(a2))?;
    let two_from_v = |i: usize, j: usize, k: usize| [i, j, k].iter().filter(|&&t| t >= n).count() == 2;
    let cross_npp = check_algebra_on(&d, AlgebraLevel::Npp, &two_from_v);
    let cross_poisson = check_poisson_on(&d.subadjacent(), false, &two_from_v);
    if cross_npp.passed() != npp.passed() {
        return Err(Error::Consistency(format!(
            "A-structure identities {} but the semidirect algebra {} at mixed triples",
            verdict(npp.passed()),
            verdict(cross_npp.passed())
        )));
    }
    if cross_poisson.passed() != poisson.passed() {
        return Err(Error::Consistency(format!(
            "A-structure Poisson identities {} but the semidirect pair {} at mixed triples",
            verdict(poisson.passed()),
            verdict(cross_poisson.passed())
        )));
    }

    let mut out = CheckReport::new("a-structure", "npp");
    out.absorb(npp);
    out.absorb(poisson);
    let pre_alg = crate::check::check_algebra(a2, AlgebraLevel::Npp);
    if !pre_alg.passed() {
        out.notes.push("products on the module do not form a noncommutative pre-Poisson algebra".into());
        out.absorb(prefix(pre_alg, "module-algebra"));
    }
    let pre_rep = check_six_rep(a1, rep, RepLevel::Quasi)?;
    if !pre_rep.passed() {
        out.notes.push("the action is not a quasi-representation".into());
        out.absorb(prefix(pre_rep, "module-rep"));
    }
    Ok(out)
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "hold"
    } else {
        "fail"
    }
}

fn prefix<F: Field>(mut r: CheckReport<F>, p: &str) -> CheckReport<F> {
    for f in &mut r.failures {
        f.identity = format!("{p}.{}", f.identity);
    }
    r
}

/// Identities at `(x, a, b)`, `(a, x, b)`, `(a, b, x)` with `x` in `A` and
/// `a, b` in the module; witnesses list `[x, a, b]`.
fn a_npp_identities<F: Field>(v: &TriAlgebra<F>, rep: &SixRep<F>) -> CheckReport<F> {
    let (n, m) = (rep.alg_dim(), rep.dim());
    let mut out = CheckReport::new("a-structure", "npp");
    for x in 0..n {
        let g = |act: Action| rep.get(act, x).clone();
        let (ls, rs, lp, rp, la, ra) =
            (g(Action::LSucc), g(Action::RSucc), g(Action::LPrec), g(Action::RPrec), g(Action::LAst), g(Action::RAst));
        let ldot = &ls + &lp;
        let rdot = &rs + &rp;
        let lmr = &la - &ra;
        let rml = &ra - &la;
        for a in 0..m {
            for b in 0..m {
                let (va, vb) = (basis::<F>(m, a), basis::<F>(m, b));
                let p = |op: Op, s: &[F], t: &[F]| v.mul(op, s, t);
                let w = [x, a, b];
                use Op::*;
                let mut c = |name: &str, l: Vec<F>, r: Vec<F>| {
                    out.compare(name, &w, l, r);
                };
                c("a.dend.prec-prec.xab", p(Prec, &lp.apply(&va), &vb), lp.apply(&p(Dot, &va, &vb)));
                c("a.dend.prec-prec.axb", p(Prec, &rp.apply(&va), &vb), p(Prec, &va, &ldot.apply(&vb)));
                c("a.dend.prec-prec.abx", rp.apply(&p(Prec, &va, &vb)), p(Prec, &va, &rdot.apply(&vb)));
                c("a.dend.succ-prec.xab", p(Prec, &ls.apply(&va), &vb), ls.apply(&p(Prec, &va, &vb)));
                c("a.dend.succ-prec.axb", p(Prec, &rs.apply(&va), &vb), p(Succ, &va, &lp.apply(&vb)));
                c("a.dend.succ-prec.abx", rp.apply(&p(Succ, &va, &vb)), p(Succ, &va, &rp.apply(&vb)));
                c("a.dend.succ-succ.xab", ls.apply(&p(Succ, &va, &vb)), p(Succ, &ldot.apply(&va), &vb));
                c("a.dend.succ-succ.axb", p(Succ, &va, &ls.apply(&vb)), p(Succ, &rdot.apply(&va), &vb));
                c("a.dend.succ-succ.abx", p(Succ, &va, &rs.apply(&vb)), rs.apply(&p(Dot, &va, &vb)));
                c(
                    "a.prelie.abx",
                    ra.apply(&p(Bracket, &va, &vb)),
                    vsub(&p(Ast, &va, &ra.apply(&vb)), &p(Ast, &vb, &ra.apply(&va))),
                );
                c(
                    "a.prelie.xab",
                    la.apply(&p(Ast, &va, &vb)),
                    vadd(&p(Ast, &lmr.apply(&va), &vb), &p(Ast, &va, &la.apply(&vb))),
                );
                c(
                    "a.npp.bracket-succ.xab",
                    p(Succ, &lmr.apply(&va), &vb),
                    vsub(&la.apply(&p(Succ, &va, &vb)), &p(Succ, &va, &la.apply(&vb))),
                );
                c(
                    "a.npp.bracket-succ.axb",
                    p(Succ, &rml.apply(&va), &vb),
                    vsub(&p(Ast, &va, &ls.apply(&vb)), &ls.apply(&p(Ast, &va, &vb))),
                );
                c(
                    "a.npp.bracket-succ.abx",
                    rs.apply(&p(Bracket, &va, &vb)),
                    vsub(&p(Ast, &va, &rs.apply(&vb)), &p(Succ, &vb, &ra.apply(&va))),
                );
                c(
                    "a.npp.prec-bracket.xab",
                    lp.apply(&p(Bracket, &va, &vb)),
                    vsub(&p(Ast, &va, &lp.apply(&vb)), &p(Prec, &ra.apply(&va), &vb)),
                );
                c(
                    "a.npp.prec-bracket.axb",
                    p(Prec, &va, &lmr.apply(&vb)),
                    vsub(&la.apply(&p(Prec, &va, &vb)), &p(Prec, &la.apply(&va), &vb)),
                );
                c(
                    "a.npp.prec-bracket.abx",
                    p(Prec, &va, &rml.apply(&vb)),
                    vsub(&p(Ast, &vb, &rp.apply(&va)), &rp.apply(&p(Ast, &vb, &va))),
                );
                c(
                    "a.npp.dot-ast.xab",
                    p(Ast, &ldot.apply(&va), &vb),
                    vadd(&p(Prec, &la.apply(&vb), &va), &ls.apply(&p(Ast, &va, &vb))),
                );
                c(
                    "a.npp.dot-ast.axb",
                    p(Ast, &rdot.apply(&va), &vb),
                    vadd(&rp.apply(&p(Ast, &va, &vb)), &p(Succ, &va, &la.apply(&vb))),
                );
                c(
                    "a.npp.dot-ast.abx",
                    ra.apply(&p(Dot, &va, &vb)),
                    vadd(&p(Prec, &ra.apply(&va), &vb), &p(Succ, &va, &ra.apply(&vb))),
                );
            }
        }
    }
    out
}

fn a_poisson_identities<F: Field>(v: &PoissonPair<F>, rep: &ThreeRep<F>) -> CheckReport<F> {
    let (n, m) = (rep.alg_dim(), rep.dim());
    let mut out = CheckReport::new("a-structure", "poisson");
    for x in 0..n {
        let (l, r, rho) = (&rep.l[x], &rep.r[x], &rep.rho[x]);
        for a in 0..m {
            for b in 0..m {
                let (va, vb) = (basis::<F>(m, a), basis::<F>(m, b));
                let d = |s: &[F], t: &[F]| v.dot(s, t);
                let br = |s: &[F], t: &[F]| v.bracket(s, t);
                let w = [x, a, b];
                out.compare("a.poisson.assoc.xab", &w, l.apply(&d(&va, &vb)), d(&l.apply(&va), &vb));
                out.compare("a.poisson.assoc.axb", &w, d(&r.apply(&va), &vb), d(&va, &l.apply(&vb)));
                out.compare("a.poisson.assoc.abx", &w, r.apply(&d(&va, &vb)), d(&va, &r.apply(&vb)));
                out.compare("a.poisson.jacobi", &w, rho.apply(&br(&va, &vb)), vadd(&br(&rho.apply(&va), &vb), &br(&va, &rho.apply(&vb))));
                out.compare("a.poisson.leibniz.xab", &w, rho.apply(&d(&va, &vb)), vadd(&d(&rho.apply(&va), &vb), &d(&va, &rho.apply(&vb))));
                out.compare("a.poisson.leibniz.axb", &w, l.apply(&br(&va, &vb)), vadd(&br(&va, &l.apply(&vb)), &d(&rho.apply(&va), &vb)));
                out.compare("a.poisson.leibniz.abx", &w, r.apply(&br(&va, &vb)), vadd(&br(&va, &r.apply(&vb)), &d(&vb, &rho.apply(&va))));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::two_dim;
    use num_rational::BigRational as Q;

    #[test]
    fn regular_rep_is_multiplication() {
        let a: TriAlgebra<Q> = two_dim();
        let rep = SixRep::regular(&a);
        let (e1, e2) = (basis::<Q>(2, 0), basis::<Q>(2, 1));
        assert_eq!(rep.get(Action::LSucc, 0).apply(&e2), e2);
        assert_eq!(rep.get(Action::RPrec, 0).apply(&e2), e2);
        assert_eq!(rep.at(Action::LAst, &e1).apply(&e1), e1);
    }

    #[test]
    fn zero_rep_stays_zero() {
        let z = SixRep::<Q>::zero(2, 3);
        assert_eq!(z.dual(), z);
        let a: TriAlgebra<Q> = two_dim();
        let s = semidirect(&a, &z, None).unwrap();
        assert_eq!(s.dim(), 5);
        assert_eq!(s.restrict(&[0, 1]).unwrap(), a);
    }

    #[test]
    fn keywords_round_trip() {
        for a in Action::ALL {
            assert_eq!(Action::from_keyword(a.keyword()), Some(a));
        }
        assert_eq!(Action::from_keyword("lfoo"), None);
    }
}
