//! Yang-Baxter type equations, invariance and operator forms.

use rayon::prelude::*;

use crate::algebra::{Op, PoissonPair, TriAlgebra};
use crate::bialgebra::cobound;
use crate::check::{check_algebra, AlgebraLevel, CheckReport};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rep::{semidirect, Action, SixRep, ThreeRep};
use crate::scalar::{basis, vadd, vneg, vsub, Field};
use crate::tensor::{contract, Legs, Tensor2, Tensor3};

/// `T_r: A* → A`, `T_r(e_i*) = Σ_j r_ij e_j`; as a matrix this is `rᵀ`.
pub fn t_map<F: Field>(r: &Tensor2<F>) -> Matrix<F> {
    r.as_matrix().transpose()
}

/// Inverse of [`t_map`].
pub fn from_t_map<F: Field>(t: &Matrix<F>) -> Tensor2<F> {
    Tensor2::from_matrix(&t.transpose())
}

/// The six tensors attached to `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct YbeTensors<F> {
    pub d: Tensor3<F>,
    pub s: Tensor3<F>,
    pub d1: Tensor3<F>,
    pub d2: Tensor3<F>,
    pub d3: Tensor3<F>,
    pub s1: Tensor3<F>,
}

impl<F: Field> YbeTensors<F> {
    /// `r` solves the NPP-YBE when `D(r) = S(r) = 0`.
    pub fn is_solution(&self) -> bool {
        self.d.is_zero() && self.s.is_zero()
    }

    pub fn named(&self) -> [(&'static str, &Tensor3<F>); 6] {
        [("D", &self.d), ("S", &self.s), ("D1", &self.d1), ("D2", &self.d2), ("D3", &self.d3), ("S1", &self.s1)]
    }
}

/// Evaluate
/// `D = r12·r13 - r23≻r12 - r13≺r23`,
/// `S = r12∗r23 - r12∗r13 + [r13, r23]`,
/// `D1 = r23≻r13 - r13·r12 + r12≺r23`,
/// `D2 = r13·r23 - r12≻r13 - r23≺r12`,
/// `D3 = r23·r12 - r13≻r23 - r12≺r13`,
/// `S1 = r23∗r12 + [r13, r12] - r23∗r13`.
pub fn eval_ybe<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>) -> Result<YbeTensors<F>> {
    let n = alg.dim();
    if r.dim() != n {
        return Err(Error::Dimension(format!("tensor of dim {} on an algebra of dim {n}", r.dim())));
    }
    let (succ, prec, ast) = (alg.table(Op::Succ), alg.table(Op::Prec), alg.table(Op::Ast));
    let dot = alg.table(Op::Dot);
    let c = |t: &Tensor3<F>, x: Legs, y: Legs| contract(t, r, x, r, y);
    use Legs as L;
    let d = &(&c(&dot, L::R12, L::R13)? - &c(&succ, L::R23, L::R12)?) - &c(&prec, L::R13, L::R23)?;
    let br = |x: Legs, y: Legs| -> Result<Tensor3<F>> { Ok(&c(&ast, x, y)? - &c(&ast, y, x)?) };
    let s = &(&c(&ast, L::R12, L::R23)? - &c(&ast, L::R12, L::R13)?) + &br(L::R13, L::R23)?;
    let d1 = &(&c(&succ, L::R23, L::R13)? - &c(&dot, L::R13, L::R12)?) + &c(&prec, L::R12, L::R23)?;
    let d2 = &(&c(&dot, L::R13, L::R23)? - &c(&succ, L::R12, L::R13)?) - &c(&prec, L::R23, L::R12)?;
    let d3 = &(&c(&dot, L::R23, L::R12)? - &c(&succ, L::R13, L::R23)?) - &c(&prec, L::R12, L::R13)?;
    let s1 = &(&c(&ast, L::R23, L::R12)? + &br(L::R13, L::R12)?) - &c(&ast, L::R23, L::R13)?;
    Ok(YbeTensors { d, s, d1, d2, d3, s1 })
}

/// `D(r) = S(r) = 0`, without computing the other four tensors.
pub fn is_solution<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>) -> Result<bool> {
    let (succ, prec, ast) = (alg.table(Op::Succ), alg.table(Op::Prec), alg.table(Op::Ast));
    let dot = alg.table(Op::Dot);
    let c = |t: &Tensor3<F>, x: Legs, y: Legs| contract(t, r, x, r, y);
    use Legs as L;
    let d = &(&c(&dot, L::R12, L::R13)? - &c(&succ, L::R23, L::R12)?) - &c(&prec, L::R13, L::R23)?;
    if !d.is_zero() {
        return Ok(false);
    }
    let s = &(&(&c(&ast, L::R12, L::R23)? - &c(&ast, L::R12, L::R13)?) + &c(&ast, L::R13, L::R23)?) - &c(&ast, L::R23, L::R13)?;
    Ok(s.is_zero())
}

/// Transposed action `f*(x)` of a left/right multiplication on `A*`.
fn dual_left<F: Field>(alg: &TriAlgebra<F>, op: Op, x: &[F]) -> Matrix<F> {
    alg.left(op, x).transpose()
}

fn dual_right<F: Field>(alg: &TriAlgebra<F>, op: Op, x: &[F]) -> Matrix<F> {
    alg.right(op, x).transpose()
}

/// `r` is invariant when `Δ≻,r`, `Δ≺,r` and `δ_r` all vanish. The operator
/// forms `R≺(x)T_r = T_r L·*(x)`, `L≻(x)T_r = T_r R·*(x)`,
/// `ad(x)T_r = -T_r L∗*(x)` and the paired forms on `A* ⊗ A*` are evaluated
/// as well; any disagreement between the three is a consistency fault.
pub fn check_invariance<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>) -> Result<CheckReport<F>> {
    let n = alg.dim();
    let ct = cobound(alg, r)?;
    let mut out = CheckReport::new("tensor", "invariance");
    let names = ["invariance.succ", "invariance.prec", "invariance.ast"];
    let tables = [&ct.dsucc, &ct.dprec, &ct.dast];
    let mut direct = [true; 3];
    for (c, (name, t)) in names.iter().zip(tables).enumerate() {
        for i in 0..n {
            let slice: Vec<F> = (0..n * n).map(|jk| t.get(i, jk / n, jk % n).clone()).collect();
            direct[c] &= out.zero(name, &[i], slice);
        }
    }

    let tr = t_map(r);
    let tt = t_map(&r.flip());
    let mut op_form = [true; 3];
    let mut pair_form = [true; 3];
    for i in 0..n {
        let x = basis::<F>(n, i);
        op_form[0] &= &alg.right(Op::Prec, &x) * &tr == &tr * &dual_left(alg, Op::Dot, &x);
        op_form[1] &= &alg.left(Op::Succ, &x) * &tr == &tr * &dual_right(alg, Op::Dot, &x);
        op_form[2] &= &alg.ad(&x) * &tr == -&(&tr * &dual_left(alg, Op::Ast, &x));
    }
    for i in 0..n {
        for j in 0..n {
            let (z, h) = (basis::<F>(n, i), basis::<F>(n, j));
            let (tz, th, tth) = (tr.apply(&z), tr.apply(&h), tt.apply(&h));
            let ttz = tt.apply(&z);
            pair_form[0] &= dual_right(alg, Op::Dot, &ttz).apply(&h) == dual_left(alg, Op::Prec, &th).apply(&z);
            pair_form[1] &= dual_left(alg, Op::Dot, &tth).apply(&z) == dual_right(alg, Op::Succ, &tz).apply(&h);
            pair_form[2] &= alg.ad(&tz).transpose().apply(&h) == dual_right(alg, Op::Ast, &tth).apply(&z);
        }
    }
    for c in 0..3 {
        if direct[c] != op_form[c] || direct[c] != pair_form[c] {
            return Err(Error::Consistency(format!(
                "{}: comultiplication {}, operator form {}, paired form {}",
                names[c], direct[c], op_form[c], pair_form[c]
            )));
        }
    }
    Ok(out)
}

/// Invariance of the skew part `s = r - τ(r)`, decided directly and through
/// three operator characterizations in terms of `T_s`; all four verdicts must
/// agree. On a pass the consequences
/// `T_s R≻*(x) = -L≺(x)T_s`, `T_s L≺*(x) = -R≻(x)T_s`, `T_s R∗*(x) = R∗(x)T_s`,
/// `L∗*(T_s ζ)η = -L∗*(T_s η)ζ` and `R≺*(T_s ζ)η = L≻*(T_s η)ζ` are checked too.
pub fn check_skew_invariance<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>) -> Result<CheckReport<F>> {
    let n = alg.dim();
    let s = r - &r.flip();
    let mut out = check_invariance(alg, &s)?;
    out.level = "skew-part-invariance".into();
    let direct = out.passed();
    let ts = t_map(&s);
    let mut paired = true;
    let mut on_a = true;
    let mut on_dual = true;
    for i in 0..n {
        let x = basis::<F>(n, i);
        on_a &= &alg.right(Op::Prec, &x) * &ts == &ts * &dual_left(alg, Op::Dot, &x)
            && &alg.left(Op::Succ, &x) * &ts == &ts * &dual_right(alg, Op::Dot, &x)
            && &alg.ad(&x) * &ts == -&(&ts * &dual_left(alg, Op::Ast, &x));
        on_dual &= &ts * &dual_right(alg, Op::Prec, &x) == &alg.left(Op::Dot, &x) * &ts
            && &ts * &dual_left(alg, Op::Succ, &x) == &alg.right(Op::Dot, &x) * &ts
            && &ts * &alg.ad(&x).transpose() == -&(&alg.left(Op::Ast, &x) * &ts);
    }
    for i in 0..n {
        for j in 0..n {
            let (z, h) = (basis::<F>(n, i), basis::<F>(n, j));
            let (sz, sh) = (ts.apply(&z), ts.apply(&h));
            paired &= dual_right(alg, Op::Dot, &sz).apply(&h) == vneg(&dual_left(alg, Op::Prec, &sh).apply(&z))
                && dual_left(alg, Op::Dot, &sh).apply(&z) == vneg(&dual_right(alg, Op::Succ, &sz).apply(&h))
                && alg.ad(&sz).transpose().apply(&h) == vneg(&dual_right(alg, Op::Ast, &sh).apply(&z));
        }
    }
    if direct != paired || direct != on_a || direct != on_dual {
        return Err(Error::Consistency(format!(
            "skew part invariance: direct {direct}, paired {paired}, on A {on_a}, on A* {on_dual}"
        )));
    }
    if direct {
        for i in 0..n {
            let x = basis::<F>(n, i);
            out.compare("skew.rsucc-dual", &[i], (&ts * &dual_right(alg, Op::Succ, &x)).entries().to_vec(), (-&(&alg.left(Op::Prec, &x) * &ts)).entries().to_vec());
            out.compare("skew.lprec-dual", &[i], (&ts * &dual_left(alg, Op::Prec, &x)).entries().to_vec(), (-&(&alg.right(Op::Succ, &x) * &ts)).entries().to_vec());
            out.compare("skew.rast-dual", &[i], (&ts * &dual_right(alg, Op::Ast, &x)).entries().to_vec(), (&alg.right(Op::Ast, &x) * &ts).entries().to_vec());
        }
        for i in 0..n {
            for j in 0..n {
                let (z, h) = (basis::<F>(n, i), basis::<F>(n, j));
                let (sz, sh) = (ts.apply(&z), ts.apply(&h));
                out.compare("skew.last-pair", &[i, j], dual_left(alg, Op::Ast, &sz).apply(&h), vneg(&dual_left(alg, Op::Ast, &sh).apply(&z)));
                out.compare("skew.rprec-pair", &[i, j], dual_right(alg, Op::Prec, &sz).apply(&h), dual_left(alg, Op::Succ, &sh).apply(&z));
            }
        }
        if !out.passed() {
            return Err(Error::Consistency(format!(
                "skew part invariant but consequences fail: {:?}",
                out.failed_identities()
            )));
        }
    }
    Ok(out)
}

/// Which formula to use for products on `A*` induced by `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualMode {
    /// `ζ≻η = R·*(T_τ ζ)η - L≺*(T_r η)ζ`, `ζ≺η = -R≻*(T_r ζ)η + L·*(T_τ η)ζ`,
    /// `ζ∗η = R∗*(T_τ η)ζ - ad*(T_r ζ)η`. These are the products dual to the
    /// coboundary comultiplications.
    General,
    /// For skew-symmetric invariant `r`: `ζ≻η = R·*(T_r ζ)η`,
    /// `ζ≺η = -R≻*(T_r ζ)η`, `ζ∗η = -ad*(T_r ζ)η`.
    SkewInvariant,
}

pub fn dual_products<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>, mode: DualMode) -> Result<TriAlgebra<F>> {
    let n = alg.dim();
    if r.dim() != n {
        return Err(Error::Dimension("tensor and algebra dimensions differ".into()));
    }
    if mode == DualMode::SkewInvariant {
        if !r.is_skew() {
            return Err(Error::Precondition("tensor is not skew-symmetric".into()));
        }
        if !check_invariance(alg, r)?.passed() {
            return Err(Error::Precondition("tensor is not invariant".into()));
        }
    }
    let tr = t_map(r);
    let tt = t_map(&r.flip());
    let mut out = TriAlgebra::zero(n);
    for i in 0..n {
        for j in 0..n {
            let (z, h) = (basis::<F>(n, i), basis::<F>(n, j));
            let (tz, th) = (tr.apply(&z), tr.apply(&h));
            let (ttz, tth) = (tt.apply(&z), tt.apply(&h));
            let (s, p, a) = match mode {
                DualMode::General => (
                    vsub(&dual_right(alg, Op::Dot, &ttz).apply(&h), &dual_left(alg, Op::Prec, &th).apply(&z)),
                    vsub(&dual_left(alg, Op::Dot, &tth).apply(&z), &dual_right(alg, Op::Succ, &tz).apply(&h)),
                    vsub(&dual_right(alg, Op::Ast, &tth).apply(&z), &alg.ad(&tz).transpose().apply(&h)),
                ),
                DualMode::SkewInvariant => {
                    let first = (
                        dual_right(alg, Op::Dot, &tz).apply(&h),
                        vneg(&dual_right(alg, Op::Succ, &tz).apply(&h)),
                        vneg(&alg.ad(&tz).transpose().apply(&h)),
                    );
                    let second = (
                        vneg(&dual_left(alg, Op::Prec, &th).apply(&z)),
                        dual_left(alg, Op::Dot, &th).apply(&z),
                        dual_right(alg, Op::Ast, &th).apply(&z),
                    );
                    if first != second {
                        return Err(Error::Consistency(format!(
                            "the two expressions for the dual products differ at ({}, {})",
                            i + 1,
                            j + 1
                        )));
                    }
                    first
                }
            };
            for k in 0..n {
                out.succ.set(i, j, k, s[k].clone());
                out.prec.set(i, j, k, p[k].clone());
                out.ast.set(i, j, k, a[k].clone());
            }
        }
    }
    if let Some(b) = &alg.basis {
        out.basis = Some(b.iter().map(|s| format!("{s}*")).collect());
    }
    Ok(out)
}

/// Relative Rota-Baxter data: `T: V → A` with a representation of `A` on `V`
/// and optional products on `V`, checked as
/// `T(u) ∘ T(v) = T(l∘(Tu) v + r∘(Tv) u + λ u ∘_V v)`.
#[derive(Clone, Debug)]
pub struct RelativeRb<'a, F> {
    pub alg: &'a TriAlgebra<F>,
    pub rep: &'a SixRep<F>,
    pub map: &'a Matrix<F>,
    pub weight: F,
    pub v_products: Option<&'a TriAlgebra<F>>,
}

pub fn check_relative_rb<F: Field>(spec: &RelativeRb<'_, F>) -> Result<CheckReport<F>> {
    let (n, m) = (spec.alg.dim(), spec.rep.dim());
    if spec.map.rows() != n || spec.map.cols() != m || spec.rep.alg_dim() != n {
        return Err(Error::Dimension("operator does not fit the algebra and representation".into()));
    }
    if let Some(v) = spec.v_products {
        if v.dim() != m {
            return Err(Error::Dimension("products on the module have the wrong dimension".into()));
        }
    } else if !spec.weight.is_zero() {
        return Err(Error::Precondition("a nonzero weight needs products on the module".into()));
    }
    let mut out = CheckReport::new("operator", "relative-rota-baxter");
    let t = spec.map;
    let ops = [(Op::Succ, Action::LSucc, Action::RSucc, "rb.succ"), (Op::Prec, Action::LPrec, Action::RPrec, "rb.prec"), (Op::Ast, Action::LAst, Action::RAst, "rb.ast")];
    for i in 0..m {
        for j in 0..m {
            let (u, v) = (basis::<F>(m, i), basis::<F>(m, j));
            let (tu, tv) = (t.apply(&u), t.apply(&v));
            for (op, la, ra, name) in ops {
                let lhs = spec.alg.mul(op, &tu, &tv);
                let mut inner = vadd(&spec.rep.at(la, &tu).apply(&v), &spec.rep.at(ra, &tv).apply(&u));
                if let Some(vp) = spec.v_products {
                    if !spec.weight.is_zero() {
                        inner = vadd(&inner, &crate::scalar::vscale(&spec.weight, &vp.mul(op, &u, &v)));
                    }
                }
                out.compare(name, &[i, j], lhs, t.apply(&inner));
            }
        }
    }
    Ok(out)
}

/// Poisson version: `T(u)·T(v) = T(l(Tu)v + r(Tv)u + λ u·v)` and
/// `[Tu, Tv] = T(ρ(Tu)v - ρ(Tv)u + λ[u, v])`.
pub fn check_relative_rb_poisson<F: Field>(
    pair: &PoissonPair<F>,
    rep: &ThreeRep<F>,
    map: &Matrix<F>,
    weight: &F,
    v_products: Option<&PoissonPair<F>>,
) -> Result<CheckReport<F>> {
    let (n, m) = (pair.dim(), rep.dim());
    if map.rows() != n || map.cols() != m {
        return Err(Error::Dimension("operator does not fit the pair and representation".into()));
    }
    if v_products.is_none() && !weight.is_zero() {
        return Err(Error::Precondition("a nonzero weight needs products on the module".into()));
    }
    let mut out = CheckReport::new("operator", "relative-rota-baxter-poisson");
    for i in 0..m {
        for j in 0..m {
            let (u, v) = (basis::<F>(m, i), basis::<F>(m, j));
            let (tu, tv) = (map.apply(&u), map.apply(&v));
            let mut dot_in = vadd(&rep.l_at(&tu).apply(&v), &rep.r_at(&tv).apply(&u));
            let mut br_in = vsub(&rep.rho_at(&tu).apply(&v), &rep.rho_at(&tv).apply(&u));
            if let Some(vp) = v_products {
                dot_in = vadd(&dot_in, &crate::scalar::vscale(weight, &vp.dot(&u, &v)));
                br_in = vadd(&br_in, &crate::scalar::vscale(weight, &vp.bracket(&u, &v)));
            }
            out.compare("rb.dot", &[i, j], pair.dot(&tu, &tv), map.apply(&dot_in));
            out.compare("rb.bracket", &[i, j], pair.bracket(&tu, &tv), map.apply(&br_in));
        }
    }
    Ok(out)
}

/// Operator verdicts for `r`.
#[derive(Clone, Debug)]
pub struct OperatorVerdict<F> {
    pub solution: bool,
    /// `T_r` against `(A*, R≺*, L≻*, -L∗*)` on the sub-adjacent pair.
    pub poisson: CheckReport<F>,
    /// `T_r` against the dual of the regular representation.
    pub npp: CheckReport<F>,
    /// Weight `-1` forms with the products induced by `r - τ(r)`, present
    /// only when that skew part is invariant.
    pub weight_minus_one: Option<WeightMinusOne<F>>,
}

#[derive(Clone, Debug)]
pub struct WeightMinusOne<F> {
    pub npp: CheckReport<F>,
    pub poisson: CheckReport<F>,
}

/// Evaluate the O-operator forms of `T_r`. For symmetric `r` both must agree
/// with the solution verdict; when `r - τ(r)` is invariant both weight `-1`
/// forms must as well. Any disagreement is a consistency fault.
pub fn operator_characterization<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>) -> Result<OperatorVerdict<F>> {
    let solution = is_solution(alg, r)?;
    let tr = t_map(r);
    let dual = SixRep::regular(alg).dual();
    let sub = alg.subadjacent();
    let dual3 = dual.subadjacent();
    let npp = check_relative_rb(&RelativeRb { alg, rep: &dual, map: &tr, weight: F::zero(), v_products: None })?;
    let poisson = check_relative_rb_poisson(&sub, &dual3, &tr, &F::zero(), None)?;
    if r.is_symmetric() && (solution != npp.passed() || solution != poisson.passed()) {
        return Err(Error::Consistency(format!(
            "symmetric tensor: solution {solution}, npp O-operator {}, Poisson O-operator {}",
            npp.passed(),
            poisson.passed()
        )));
    }
    let s = r - &r.flip();
    let weight_minus_one = if check_invariance(alg, &s)?.passed() {
        let prod = dual_products(alg, &s, DualMode::SkewInvariant)?;
        let minus = -F::one();
        let w_npp = check_relative_rb(&RelativeRb { alg, rep: &dual, map: &tr, weight: minus.clone(), v_products: Some(&prod) })?;
        let w_poisson = check_relative_rb_poisson(&sub, &dual3, &tr, &minus, Some(&prod.subadjacent()))?;
        if solution != w_npp.passed() || solution != w_poisson.passed() {
            return Err(Error::Consistency(format!(
                "invariant skew part: solution {solution}, weight -1 npp {}, weight -1 Poisson {}",
                w_npp.passed(),
                w_poisson.passed()
            )));
        }
        Some(WeightMinusOne { npp: w_npp, poisson: w_poisson })
    } else {
        None
    };
    Ok(OperatorVerdict { solution, poisson, npp, weight_minus_one })
}

/// One of the five tensor/operator equivalences that hold for any `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItemVerdict {
    pub tensor: &'static str,
    pub tensor_zero: bool,
    pub operator_identity: bool,
}

/// `D2 = 0 ⇔ Tζ·Tη = T(R≺*(Tζ)η + L≻*(T_τ η)ζ)`,
/// `D = 0 ⇔ Tζ≺Tη = T(L·*(T_τ η)ζ - R≻*(Tζ)η)`,
/// `D3 = 0 ⇔ Tζ≻Tη = T(R·*(Tζ)η - L≺*(T_τ η)ζ)`,
/// `S = 0 ⇔ [Tζ, Tη] = T(L∗*(T_τ η)ζ - L∗*(Tζ)η)`,
/// `S1 = 0 ⇔ Tζ∗Tη = T(R∗*(Tη)ζ - ad*(T_τ ζ)η)`.
/// Returns both sides of each; a mismatch is a consistency fault.
pub fn operator_items<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>) -> Result<Vec<ItemVerdict>> {
    let n = alg.dim();
    let y = eval_ybe(alg, r)?;
    let tr = t_map(r);
    let tt = t_map(&r.flip());
    let mut ok = [true; 5];
    for i in 0..n {
        for j in 0..n {
            let (z, h) = (basis::<F>(n, i), basis::<F>(n, j));
            let (tz, th, ttz, tth) = (tr.apply(&z), tr.apply(&h), tt.apply(&z), tt.apply(&h));
            let t = |v: Vec<F>| tr.apply(&v);
            ok[0] &= alg.mul(Op::Dot, &tz, &th)
                == t(vadd(&dual_right(alg, Op::Prec, &tz).apply(&h), &dual_left(alg, Op::Succ, &tth).apply(&z)));
            ok[1] &= alg.mul(Op::Prec, &tz, &th)
                == t(vsub(&dual_left(alg, Op::Dot, &tth).apply(&z), &dual_right(alg, Op::Succ, &tz).apply(&h)));
            ok[2] &= alg.mul(Op::Succ, &tz, &th)
                == t(vsub(&dual_right(alg, Op::Dot, &tz).apply(&h), &dual_left(alg, Op::Prec, &tth).apply(&z)));
            ok[3] &= alg.mul(Op::Bracket, &tz, &th)
                == t(vsub(&dual_left(alg, Op::Ast, &tth).apply(&z), &dual_left(alg, Op::Ast, &tz).apply(&h)));
            ok[4] &= alg.mul(Op::Ast, &tz, &th)
                == t(vsub(&dual_right(alg, Op::Ast, &th).apply(&z), &alg.ad(&ttz).transpose().apply(&h)));
        }
    }
    let tensors = [("D2", &y.d2), ("D", &y.d), ("D3", &y.d3), ("S", &y.s), ("S1", &y.s1)];
    let mut out = Vec::new();
    for (k, (name, t)) in tensors.iter().enumerate() {
        let v = ItemVerdict { tensor: name, tensor_zero: t.is_zero(), operator_identity: ok[k] };
        if v.tensor_zero != v.operator_identity {
            return Err(Error::Consistency(format!(
                "{name} vanishing is {} but its operator identity is {}",
                v.tensor_zero, v.operator_identity
            )));
        }
        out.push(v);
    }
    Ok(out)
}

/// Lift of an operator `T: V → A` to a symmetric tensor on `A ⋉ V*`.
#[derive(Clone, Debug)]
pub struct Lift<F> {
    pub algebra: TriAlgebra<F>,
    pub r: Tensor2<F>,
    pub solution: bool,
    pub o_operator: CheckReport<F>,
    /// Failures of the hypotheses (coherent algebra, strong representation).
    pub preconditions: CheckReport<F>,
}

/// `r = Σ T(f_i) ⊗ f_i* + f_i* ⊗ T(f_i)` in `A ⋉ V*`. The lifted tensor is a
/// solution exactly when `T` is an O-operator; the two verdicts are compared
/// when the hypotheses hold.
pub fn lift_operator<F: Field>(alg: &TriAlgebra<F>, rep: &SixRep<F>, map: &Matrix<F>) -> Result<Lift<F>> {
    let (n, m) = (alg.dim(), rep.dim());
    if map.rows() != n || map.cols() != m {
        return Err(Error::Dimension("operator does not fit the algebra and representation".into()));
    }
    let mut pre = check_algebra(alg, AlgebraLevel::Coherent);
    pre.subject = "lift-preconditions".into();
    pre.absorb(crate::rep::check_six_rep(alg, rep, crate::rep::RepLevel::Strong)?);
    let mut hat = semidirect(alg, &rep.dual(), None)?;
    hat.basis = Some(
        (0..n)
            .map(|i| alg.basis_name(i))
            .chain((0..m).map(|i| format!("f{}*", i + 1)))
            .collect(),
    );
    let mut r = Tensor2::zeros(n + m);
    for i in 0..m {
        for k in 0..n {
            let v = &map[(k, i)];
            if !v.is_zero() {
                r.add_at(k, n + i, v.clone());
                r.add_at(n + i, k, v.clone());
            }
        }
    }
    let solution = is_solution(&hat, &r)?;
    let o = check_relative_rb(&RelativeRb { alg, rep, map, weight: F::zero(), v_products: None })?;
    if pre.passed() && solution != o.passed() {
        return Err(Error::Consistency(format!("lifted tensor solution {solution} but O-operator {}", o.passed())));
    }
    Ok(Lift { algebra: hat, r, solution, o_operator: o, preconditions: pre })
}

/// The candidate grid of a search: `total` codes, each decoded by `build`.
fn grid<F: Field>(n: usize, coeffs: &[F], symmetric: bool, budget: u128) -> Result<(u128, impl Fn(u128) -> Tensor2<F> + Sync + '_)> {
    if coeffs.is_empty() {
        return Err(Error::Precondition("empty coefficient set".into()));
    }
    let cells: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| !symmetric || i <= j).collect();
    let base = coeffs.len() as u128;
    let total = base.checked_pow(cells.len() as u32).unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::Budget { candidates: total, budget });
    }
    let build = move |code: u128| {
        let mut r = Tensor2::zeros(n);
        let mut c = code;
        for &(i, j) in cells.iter().rev() {
            let v = coeffs[(c % base) as usize].clone();
            c /= base;
            r.set(i, j, v.clone());
            if symmetric {
                r.set(j, i, v);
            }
        }
        r
    };
    Ok((total, build))
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))
}

/// Enumerate tensors with entries from `coeffs` (optionally symmetric only)
/// and return the solutions in lexicographic order of their entries, where
/// entries are compared by their position in `coeffs`.
pub fn search_ybe<F: Field>(alg: &TriAlgebra<F>, coeffs: &[F], symmetric: bool, budget: u128, jobs: usize) -> Result<Vec<Tensor2<F>>> {
    let (total, build) = grid(alg.dim(), coeffs, symmetric, budget)?;
    let codes: Vec<u128> = (0..total).collect();
    let found: Result<Vec<Option<Tensor2<F>>>> = pool(jobs)?.install(|| {
        codes
            .par_iter()
            .map(|&code| {
                let r = build(code);
                Ok(if is_solution(alg, &r)? { Some(r) } else { None })
            })
            .collect()
    });
    Ok(found?.into_iter().flatten().collect())
}

/// Tallies of the equivalent characterizations over a search grid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub candidates: usize,
    pub solutions: usize,
    pub symmetric: usize,
    pub symmetric_solutions: usize,
    /// Candidates on which [`operator_characterization`] found no disagreement.
    pub operator_agreement: usize,
    /// Candidates on which all five [`operator_items`] equivalences hold.
    pub item_agreement: usize,
    /// Symmetric candidates with `σ13 S = S1`, `σ23 D = -D1`, `σ132 D = D2`.
    pub permutation_agreement: usize,
    /// Candidates whose skew part is invariant.
    pub invariant_skew: usize,
    /// Among those, candidates where `S = 0 ⇔ S1 = 0` and
    /// `D = 0 ⇔ (D2 = 0 ∧ D3 = 0)`.
    pub linked_agreement: usize,
    /// Diagnostics of the first few disagreements.
    pub faults: Vec<String>,
}

impl SweepSummary {
    /// Every characterization agreed on every candidate it applies to.
    pub fn consistent(&self) -> bool {
        self.operator_agreement == self.candidates
            && self.item_agreement == self.candidates
            && self.permutation_agreement == self.symmetric
            && self.linked_agreement == self.invariant_skew
    }

    fn merge(mut self, o: SweepSummary) -> SweepSummary {
        self.candidates += o.candidates;
        self.solutions += o.solutions;
        self.symmetric += o.symmetric;
        self.symmetric_solutions += o.symmetric_solutions;
        self.operator_agreement += o.operator_agreement;
        self.item_agreement += o.item_agreement;
        self.permutation_agreement += o.permutation_agreement;
        self.invariant_skew += o.invariant_skew;
        self.linked_agreement += o.linked_agreement;
        self.faults.extend(o.faults);
        self.faults.truncate(SWEEP_FAULTS);
        self
    }
}

const SWEEP_FAULTS: usize = 10;

fn sweep_one<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>) -> Result<SweepSummary> {
    let mut out = SweepSummary { candidates: 1, ..Default::default() };
    let y = eval_ybe(alg, r)?;
    let solution = y.is_solution();
    let symmetric = r.is_symmetric();
    out.solutions += solution as usize;
    out.symmetric += symmetric as usize;
    out.symmetric_solutions += (symmetric && solution) as usize;
    match operator_characterization(alg, r) {
        Ok(_) => out.operator_agreement += 1,
        Err(Error::Consistency(m)) => out.faults.push(m),
        Err(e) => return Err(e),
    }
    match operator_items(alg, r) {
        Ok(_) => out.item_agreement += 1,
        Err(Error::Consistency(m)) => out.faults.push(m),
        Err(e) => return Err(e),
    }
    if symmetric {
        let ok = y.s.permute([2, 1, 0]) == y.s1 && y.d.permute([0, 2, 1]) == -&y.d1 && y.d.permute([1, 2, 0]) == y.d2;
        out.permutation_agreement += ok as usize;
        if !ok {
            out.faults.push("permutation identities fail on a symmetric tensor".into());
        }
    }
    if check_invariance(alg, &(r - &r.flip()))?.passed() {
        out.invariant_skew += 1;
        let ok = y.s.is_zero() == y.s1.is_zero() && y.d.is_zero() == (y.d2.is_zero() && y.d3.is_zero());
        out.linked_agreement += ok as usize;
        if !ok {
            out.faults.push("invariant skew part but the equations are not linked".into());
        }
    }
    Ok(out)
}

/// Evaluate every characterization on every candidate of the grid searched by
/// [`search_ybe`]; also returns the solutions in the same order.
pub fn sweep_ybe<F: Field>(
    alg: &TriAlgebra<F>,
    coeffs: &[F],
    symmetric: bool,
    budget: u128,
    jobs: usize,
) -> Result<(SweepSummary, Vec<Tensor2<F>>)> {
    let (total, build) = grid(alg.dim(), coeffs, symmetric, budget)?;
    let codes: Vec<u128> = (0..total).collect();
    let found: Result<Vec<(SweepSummary, Option<Tensor2<F>>)>> = pool(jobs)?.install(|| {
        codes
            .par_iter()
            .map(|&code| {
                let r = build(code);
                let s = sweep_one(alg, &r)?;
                let keep = s.solutions == 1;
                Ok((s, if keep { Some(r) } else { None }))
            })
            .collect()
    });
    let mut summary = SweepSummary::default();
    let mut solutions = Vec::new();
    for (s, r) in found? {
        summary = summary.merge(s);
        solutions.extend(r);
    }
    Ok((summary, solutions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::two_dim;
    use crate::scalar::int;
    use num_rational::BigRational as Q;

    #[test]
    fn t_map_sends_dual_basis_to_second_leg() {
        let mut r = Tensor2::<Q>::zeros(2);
        r.set(0, 1, int(3));
        let t = t_map(&r);
        assert_eq!(t.apply(&basis(2, 0)), vec![int(0), int(3)]);
        assert_eq!(from_t_map(&t), r);
    }

    #[test]
    fn every_tensor_solves_over_the_zero_algebra() {
        let r = Tensor2::from_fn(2, |i, j| int::<Q>((i * 2 + j) as i64 - 1));
        assert!(eval_ybe(&TriAlgebra::zero(2), &r).unwrap().named().iter().all(|(_, t)| t.is_zero()));
    }

    #[test]
    fn search_respects_the_budget() {
        let coeffs = [int::<Q>(-1), int(0), int(1)];
        assert_eq!(search_ybe(&two_dim(), &coeffs, false, 80, 1), Err(Error::Budget { candidates: 81, budget: 80 }));
        assert_eq!(search_ybe(&two_dim(), &coeffs, true, 27, 1).unwrap().len(), 9);
    }
}
