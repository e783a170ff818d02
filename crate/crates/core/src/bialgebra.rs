//! Comultiplications, coboundary bialgebras, the double and classification
//! of solutions.

use crate::algebra::{Op, TriAlgebra};
use crate::check::{check_algebra, check_algebra_on, AlgebraLevel, CheckReport};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rep::{matched_pair, SixRep};
use crate::scalar::{basis, Field};
use crate::tensor::{Tensor2, Tensor3};
use crate::ybe::{check_skew_invariance, dual_products, eval_ybe, t_map, DualMode, YbeTensors};

/// `(Δ≻, Δ≺, δ)`; `d[(i, j, k)]` is the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoTriple<F> {
    pub dsucc: Tensor3<F>,
    pub dprec: Tensor3<F>,
    pub dast: Tensor3<F>,
}

/// Which comultiplication; `Dot` is `Δ = Δ≻ + Δ≺`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoOp {
    Succ,
    Prec,
    Ast,
    Dot,
}

impl<F: Field> CoTriple<F> {
    pub fn zero(dim: usize) -> Self {
        CoTriple { dsucc: Tensor3::zeros(dim), dprec: Tensor3::zeros(dim), dast: Tensor3::zeros(dim) }
    }

    pub fn dim(&self) -> usize {
        self.dsucc.dim()
    }

    pub fn table(&self, op: CoOp) -> Tensor3<F> {
        match op {
            CoOp::Succ => self.dsucc.clone(),
            CoOp::Prec => self.dprec.clone(),
            CoOp::Ast => self.dast.clone(),
            CoOp::Dot => &self.dsucc + &self.dprec,
        }
    }

    pub fn table_mut(&mut self, op: CoOp) -> &mut Tensor3<F> {
        match op {
            CoOp::Succ => &mut self.dsucc,
            CoOp::Prec => &mut self.dprec,
            CoOp::Ast => &mut self.dast,
            CoOp::Dot => panic!("Δ = Δ≻ + Δ≺ is derived"),
        }
    }

    /// `Δ(x)` as an element of `A ⊗ A`.
    pub fn apply(&self, op: CoOp, x: &[F]) -> Tensor2<F> {
        apply_comult(&self.table(op), x)
    }

    /// Products on `A*` dual to the comultiplications:
    /// `e_j* ∘ e_k* = Σ_i Δ[(i, j, k)] e_i*`.
    pub fn dual_algebra(&self) -> TriAlgebra<F> {
        let tr = |d: &Tensor3<F>| d.permute([1, 2, 0]);
        TriAlgebra { succ: tr(&self.dsucc), prec: tr(&self.dprec), ast: tr(&self.dast), basis: None }
    }

    /// Inverse of [`CoTriple::dual_algebra`].
    pub fn from_dual_algebra(alg: &TriAlgebra<F>) -> Self {
        let tr = |c: &Tensor3<F>| c.permute([2, 0, 1]);
        CoTriple { dsucc: tr(&alg.succ), dprec: tr(&alg.prec), dast: tr(&alg.ast) }
    }
}

fn apply_comult<F: Field>(d: &Tensor3<F>, x: &[F]) -> Tensor2<F> {
    let n = d.dim();
    let mut out = Tensor2::zeros(n);
    for (i, j, k, v) in d.nonzeros() {
        if !x[i].is_zero() {
            out.add_at(j, k, x[i].clone() * v.clone());
        }
    }
    out
}

/// `(Δ ⊗ I) t`.
fn co_left<F: Field>(d: &Tensor3<F>, t: &Tensor2<F>) -> Tensor3<F> {
    let mut out = Tensor3::zeros(t.dim());
    for (i, k, tv) in t.nonzeros() {
        for j in 0..t.dim() {
            for l in 0..t.dim() {
                let v = d.get(i, j, l);
                if !v.is_zero() {
                    out.add_at(j, l, k, tv.clone() * v.clone());
                }
            }
        }
    }
    out
}

/// `(I ⊗ Δ) t`.
fn co_right<F: Field>(d: &Tensor3<F>, t: &Tensor2<F>) -> Tensor3<F> {
    let mut out = Tensor3::zeros(t.dim());
    for (a, i, tv) in t.nonzeros() {
        for j in 0..t.dim() {
            for l in 0..t.dim() {
                let v = d.get(i, j, l);
                if !v.is_zero() {
                    out.add_at(a, j, l, tv.clone() * v.clone());
                }
            }
        }
    }
    out
}

const TAU12: [usize; 3] = [1, 0, 2];
const TAU23: [usize; 3] = [0, 2, 1];

/// Coboundary comultiplications of `r`:
/// `Δ≻(x) = (I ⊗ L·(x) - R≺(x) ⊗ I) τ(r)`,
/// `Δ≺(x) = (R·(x) ⊗ I - I ⊗ L≻(x)) r`,
/// `δ(x) = (L∗(x) ⊗ I + I ⊗ ad(x)) r`.
pub fn cobound<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>) -> Result<CoTriple<F>> {
    let n = alg.dim();
    if r.dim() != n {
        return Err(Error::Dimension(format!("tensor of dim {} on an algebra of dim {n}", r.dim())));
    }
    let mut ct = CoTriple::zero(n);
    let tr = r.flip();
    let id = Matrix::identity(n);
    for i in 0..n {
        let x = basis::<F>(n, i);
        let ds = &tr.apply(&id, &alg.left(Op::Dot, &x)) - &tr.apply(&alg.right(Op::Prec, &x), &id);
        let dp = &r.apply(&alg.right(Op::Dot, &x), &id) - &r.apply(&id, &alg.left(Op::Succ, &x));
        let da = &r.apply(&alg.left(Op::Ast, &x), &id) + &r.apply(&id, &alg.ad(&x));
        for (j, k, v) in ds.nonzeros() {
            ct.dsucc.set(i, j, k, v.clone());
        }
        for (j, k, v) in dp.nonzeros() {
            ct.dprec.set(i, j, k, v.clone());
        }
        for (j, k, v) in da.nonzeros() {
            ct.dast.set(i, j, k, v.clone());
        }
    }
    Ok(ct)
}

/// Check the coalgebra identities up to `level` (the same level names as for
/// algebras). The verdict is cross-checked against the dual algebra.
pub fn check_coalgebra<F: Field>(ct: &CoTriple<F>, level: AlgebraLevel) -> Result<CheckReport<F>> {
    let n = ct.dim();
    let mut out = CheckReport::new("coalgebra", level.name());
    if level == AlgebraLevel::Poisson {
        let mut r = check_algebra(&ct.dual_algebra(), level);
        r.subject = "coalgebra".into();
        return Ok(r);
    }
    let (ds, dp, da, dd) = (ct.table(CoOp::Succ), ct.table(CoOp::Prec), ct.table(CoOp::Ast), ct.table(CoOp::Dot));
    let dend = matches!(level, AlgebraLevel::Dendriform | AlgebraLevel::Npp | AlgebraLevel::Coherent);
    let prelie = matches!(level, AlgebraLevel::PreLie | AlgebraLevel::Npp | AlgebraLevel::Coherent);
    let npp = matches!(level, AlgebraLevel::Npp | AlgebraLevel::Coherent);
    let coherent = level == AlgebraLevel::Coherent;
    let cmp = |out: &mut CheckReport<F>, name: &str, i: usize, l: Tensor3<F>, r: Tensor3<F>| {
        out.compare(name, &[i], l.entries().to_vec(), r.entries().to_vec());
    };
    for i in 0..n {
        let x = basis::<F>(n, i);
        let (s, p, a) = (apply_comult(&ds, &x), apply_comult(&dp, &x), apply_comult(&da, &x));
        if dend {
            cmp(&mut out, "codend.succ-prec", i, co_left(&ds, &p), co_right(&dp, &s));
            cmp(&mut out, "codend.succ-succ", i, co_right(&ds, &s), co_left(&dd, &s));
            cmp(&mut out, "codend.prec-prec", i, co_left(&dp, &p), co_right(&dd, &p));
        }
        if prelie {
            let ra = co_right(&da, &a);
            let la = co_left(&da, &a);
            cmp(&mut out, "coprelie", i, &ra - &ra.permute(TAU12), &la - &la.permute(TAU12));
        }
        if npp {
            let ls = co_left(&da, &s);
            cmp(
                &mut out,
                "conpp.bracket-succ",
                i,
                &ls - &ls.permute(TAU12),
                &co_right(&ds, &a) - &co_right(&da, &s).permute(TAU12),
            );
            let rp = co_right(&da, &p);
            cmp(
                &mut out,
                "conpp.prec-bracket",
                i,
                &rp - &rp.permute(TAU23),
                &co_right(&dp, &a).permute(TAU12) - &co_left(&da, &p).permute(TAU12),
            );
            cmp(
                &mut out,
                "conpp.dot-ast",
                i,
                co_left(&dd, &a),
                &co_left(&da, &p).permute(TAU23) + &co_right(&da, &s),
            );
        }
        if coherent {
            cmp(
                &mut out,
                "conpp.coherence",
                i,
                co_left(&dd, &a),
                &co_right(&ds, &a) + &co_right(&dp, &a).permute(TAU23).permute(TAU12),
            );
        }
    }
    let dual = check_algebra(&ct.dual_algebra(), level);
    if dual.passed() != out.passed() {
        return Err(Error::Consistency(format!(
            "coalgebra identities {} but the dual algebra {} the {} level",
            if out.passed() { "hold" } else { "fail" },
            if dual.passed() { "passes" } else { "fails" },
            level
        )));
    }
    Ok(out)
}

/// Dual-regular matched pair on `A ⊕ A*`, where `A*` carries the products
/// dual to `ct`.
pub fn double<F: Field>(alg: &TriAlgebra<F>, ct: &CoTriple<F>) -> Result<TriAlgebra<F>> {
    if ct.dim() != alg.dim() {
        return Err(Error::Dimension("comultiplication and algebra dimensions differ".into()));
    }
    let dual = ct.dual_algebra();
    let rho1 = SixRep::regular(alg).dual();
    let rho2 = SixRep::regular(&dual).dual();
    let mut d = matched_pair(alg, &dual, &rho1, &rho2)?;
    let n = alg.dim();
    d.basis = Some(
        (0..n)
            .map(|i| alg.basis_name(i))
            .chain((0..n).map(|i| format!("{}*", alg.basis_name(i))))
            .collect(),
    );
    Ok(d)
}

/// Compatibility identities between products and comultiplications, at all
/// pairs of basis elements. Each identity group is cross-checked against the
/// double at triples with one entry from `A*`, and the overall verdict against
/// the whole double when both sides are coherent. Disagreement is a
/// consistency fault.
pub fn check_bialgebra<F: Field>(alg: &TriAlgebra<F>, ct: &CoTriple<F>) -> Result<CheckReport<F>> {
    let n = alg.dim();
    if ct.dim() != n {
        return Err(Error::Dimension("comultiplication and algebra dimensions differ".into()));
    }
    let mut out = CheckReport::new("bialgebra", "npp");
    let alg_ok = check_algebra(alg, AlgebraLevel::Coherent);
    let co_ok = check_coalgebra(ct, AlgebraLevel::Coherent)?;
    if !alg_ok.passed() {
        out.notes.push("algebra is not coherent".into());
    }
    if !co_ok.passed() {
        out.notes.push("coalgebra is not coherent".into());
    }
    compat_identities(alg, ct, &mut out);
    let d = if alg_ok.passed() { Some(double(alg, ct)?) } else { None };
    if let Some(d) = &d {
        let one_dual = |i: usize, j: usize, k: usize| [i, j, k].iter().filter(|&&t| t >= n).count() == 1;
        let mixed = check_algebra_on(d, AlgebraLevel::Npp, &one_dual).failed_identities();
        let ours = out.failed_identities();
        for (axioms, identities) in [("dend.", "dendbi."), ("prelie.", "prebi."), ("npp.", "npb.")] {
            let a = mixed.iter().any(|s| s.starts_with(axioms));
            let b = ours.iter().any(|s| s.starts_with(identities));
            if a != b {
                return Err(Error::Consistency(format!(
                    "{identities}* identities {} but the double's {axioms}* axioms {} at mixed triples",
                    if b { "fail" } else { "hold" },
                    if a { "fail" } else { "hold" }
                )));
            }
        }
    }
    if let (Some(d), true) = (&d, co_ok.passed()) {
        let dv = check_algebra(d, AlgebraLevel::Npp);
        if dv.passed() != out.passed() {
            return Err(Error::Consistency(format!(
                "compatibility identities {} but the double {} the npp level",
                if out.passed() { "hold" } else { "fail" },
                if dv.passed() { "passes" } else { "fails" }
            )));
        }
        out.notes.push(format!("double cross-check: {}", if dv.passed() { "pass" } else { "fail" }));
    }
    for f in alg_ok.failures {
        out.failures.push(crate::check::Failure { identity: format!("algebra.{}", f.identity), ..f });
    }
    for f in co_ok.failures {
        out.failures.push(crate::check::Failure { identity: format!("coalgebra.{}", f.identity), ..f });
    }
    Ok(out)
}

fn compat_identities<F: Field>(alg: &TriAlgebra<F>, ct: &CoTriple<F>, out: &mut CheckReport<F>) {
    let n = alg.dim();
    let id = Matrix::<F>::identity(n);
    let e = |i: usize| basis::<F>(n, i);
    let l = |op: Op, i: usize| alg.left(op, &e(i));
    let r = |op: Op, i: usize| alg.right(op, &e(i));
    // (M ⊗ I) t and (I ⊗ M) t
    let ml = |m: &Matrix<F>, t: &Tensor2<F>| t.apply(m, &id);
    let mr = |m: &Matrix<F>, t: &Tensor2<F>| t.apply(&id, m);
    let co = |op: CoOp, v: &[F]| ct.apply(op, v);
    let cmp = |out: &mut CheckReport<F>, name: &str, w: [usize; 2], lhs: Tensor2<F>, rhs: Tensor2<F>| {
        out.compare(name, &w, lhs.entries().to_vec(), rhs.entries().to_vec());
    };
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(i), e(j));
            let w = [i, j];
            let (ds_x, dp_x, dd_x, da_x) = (co(CoOp::Succ, &x), co(CoOp::Prec, &x), co(CoOp::Dot, &x), co(CoOp::Ast, &x));
            let (ds_y, dp_y, dd_y, da_y) = (co(CoOp::Succ, &y), co(CoOp::Prec, &y), co(CoOp::Dot, &y), co(CoOp::Ast, &y));

            // dendriform bialgebra
            cmp(
                out,
                "dendbi.prec-dot",
                w,
                co(CoOp::Prec, &alg.mul(Op::Dot, &x, &y)),
                &mr(&l(Op::Succ, i), &dp_y) + &ml(&r(Op::Dot, j), &dp_x),
            );
            cmp(
                out,
                "dendbi.succ-dot",
                w,
                co(CoOp::Succ, &alg.mul(Op::Dot, &x, &y)),
                &mr(&l(Op::Dot, i), &ds_y) + &ml(&r(Op::Prec, j), &ds_x),
            );
            cmp(
                out,
                "dendbi.dot-prec",
                w,
                co(CoOp::Dot, &alg.mul(Op::Prec, &x, &y)),
                &ml(&r(Op::Prec, j), &dd_x) + &mr(&l(Op::Prec, i), &ds_y),
            );
            cmp(
                out,
                "dendbi.dot-succ",
                w,
                co(CoOp::Dot, &alg.mul(Op::Succ, &x, &y)),
                &mr(&l(Op::Succ, i), &dd_y) + &ml(&r(Op::Succ, j), &dp_x),
            );
            let t1 = &ml(&l(Op::Dot, i), &dp_y) - &mr(&r(Op::Prec, i), &dp_y);
            let t2 = (&ml(&l(Op::Succ, j), &ds_x) - &mr(&r(Op::Dot, j), &ds_x)).flip();
            out.zero("dendbi.mixed-1", &w, (&t1 + &t2).entries().to_vec());
            let s = &(&ml(&l(Op::Succ, i), &dd_y) - &ml(&r(Op::Succ, j), &ds_x.flip()))
                + &(&mr(&l(Op::Prec, j), &dp_x.flip()) - &mr(&r(Op::Prec, i), &dd_y));
            out.zero("dendbi.mixed-2", &w, s.entries().to_vec());

            // pre-Lie bialgebra
            cmp(
                out,
                "prebi.bracket",
                w,
                co(CoOp::Ast, &alg.mul(Op::Bracket, &x, &y)),
                &(&mr(&alg.ad(&x), &da_y) + &ml(&l(Op::Ast, i), &da_y)) - &(&mr(&alg.ad(&y), &da_x) + &ml(&l(Op::Ast, j), &da_x)),
            );
            let xy = co(CoOp::Ast, &alg.mul(Op::Ast, &x, &y));
            let skew_y = &da_y - &da_y.flip();
            cmp(
                out,
                "prebi.ast",
                w,
                &xy - &xy.flip(),
                &(&(&ml(&l(Op::Ast, i), &skew_y) + &mr(&l(Op::Ast, i), &skew_y)) + &mr(&r(Op::Ast, j), &da_x))
                    - &ml(&r(Op::Ast, j), &da_x.flip()),
            );

            // mixed compatibilities
            cmp(
                out,
                "npb.dot-ast",
                w,
                co(CoOp::Dot, &alg.mul(Op::Ast, &x, &y)),
                &(&ml(&l(Op::Ast, i), &dd_y) + &mr(&l(Op::Ast, i), &dd_y))
                    - &(&mr(&l(Op::Prec, j), &da_x) + &ml(&r(Op::Succ, j), &da_x.flip())),
            );
            let yx = co(CoOp::Ast, &alg.mul(Op::Prec, &y, &x));
            let skew_y = &da_y - &da_y.flip();
            cmp(
                out,
                "npb.ast-prec",
                w,
                &yx - &yx.flip(),
                &(&(&mr(&r(Op::Prec, i), &skew_y) + &ml(&r(Op::Ast, j), &ds_x.flip())) + &mr(&l(Op::Prec, j), &da_x))
                    - &ml(&l(Op::Ast, i), &dd_y),
            );
            cmp(
                out,
                "npb.ast-dot",
                w,
                co(CoOp::Ast, &alg.mul(Op::Dot, &x, &y)),
                &(&mr(&r(Op::Dot, j), &da_x) + &mr(&l(Op::Dot, i), &da_y))
                    - &(&ml(&l(Op::Ast, i), &dp_y.flip()) + &ml(&l(Op::Ast, j), &ds_x)),
            );
            cmp(
                out,
                "npb.prec-bracket",
                w,
                co(CoOp::Prec, &alg.mul(Op::Bracket, &x, &y)),
                &(&(&ml(&alg.ad(&x), &dp_y) + &mr(&l(Op::Succ, j), &da_x.flip())) + &mr(&l(Op::Ast, i), &dp_y))
                    - &ml(&r(Op::Dot, j), &da_x.flip()),
            );
        }
    }
}

/// Where a tensor sits in the chain factorizable ⇒ quasi-triangular ⇒
/// solution with invariant skew part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    NotCoboundarySolution,
    Triangular,
    QuasiTriangular,
    Factorizable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::NotCoboundarySolution => "not-coboundary-solution",
            Verdict::Triangular => "triangular",
            Verdict::QuasiTriangular => "quasi-triangular",
            Verdict::Factorizable => "quasi-triangular-factorizable",
        }
    }

    pub fn is_quasi_triangular(self) -> bool {
        self != Verdict::NotCoboundarySolution
    }
}

#[derive(Clone, Debug)]
pub struct Classification<F> {
    pub verdict: Verdict,
    pub ybe: YbeTensors<F>,
    pub skew_invariance: CheckReport<F>,
    /// `T_{r - τ(r)}`.
    pub skew_map: Matrix<F>,
    pub skew_inverse: Option<Matrix<F>>,
    /// `T_r` and `T_τ(r)` as homomorphisms from the induced products on `A*`;
    /// present for quasi-triangular verdicts.
    pub homomorphisms: Option<CheckReport<F>>,
}

pub fn classify_r<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>) -> Result<Classification<F>> {
    let coherent = check_algebra(alg, AlgebraLevel::Coherent);
    if !coherent.passed() {
        return Err(Error::Precondition(format!(
            "classification needs a coherent algebra; failing: {:?}",
            coherent.failed_identities()
        )));
    }
    let ybe = eval_ybe(alg, r)?;
    let skew_invariance = check_skew_invariance(alg, r)?;
    let skew_map = t_map(&(r - &r.flip()));
    let skew_inverse = skew_map.inverse();
    let verdict = if !ybe.is_solution() || !skew_invariance.passed() {
        Verdict::NotCoboundarySolution
    } else if skew_inverse.is_some() {
        Verdict::Factorizable
    } else if r.is_symmetric() {
        Verdict::Triangular
    } else {
        Verdict::QuasiTriangular
    };
    let homomorphisms = if verdict.is_quasi_triangular() {
        let h = check_homomorphisms(alg, r)?;
        if !h.passed() {
            return Err(Error::Consistency(format!(
                "quasi-triangular tensor whose operators are not homomorphisms: {:?}",
                h.failed_identities()
            )));
        }
        Some(h)
    } else {
        None
    };
    Ok(Classification { verdict, ybe, skew_invariance, skew_map, skew_inverse, homomorphisms })
}

/// `T_r` and `T_τ(r)` as homomorphisms from the induced products on `A*`.
fn check_homomorphisms<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>) -> Result<CheckReport<F>> {
    let n = alg.dim();
    let dual = dual_products(alg, r, DualMode::General)?;
    let mut out = CheckReport::new("tensor", "homomorphism");
    for (name, t) in [("hom.t_r", t_map(r)), ("hom.t_tau", t_map(&r.flip()))] {
        for i in 0..n {
            for j in 0..n {
                let (z, h) = (basis::<F>(n, i), basis::<F>(n, j));
                let (tz, th) = (t.apply(&z), t.apply(&h));
                for op in [Op::Succ, Op::Prec, Op::Ast] {
                    out.compare(&format!("{name}.{}", op.symbol()), &[i, j], t.apply(&dual.mul(op, &z, &h)), alg.mul(op, &tz, &th));
                }
            }
        }
    }
    Ok(out)
}

/// `x = x1 - x2` with `x1 = T_r T_s⁻¹ x` and `x2 = T_τ(r) T_s⁻¹ x`, where
/// `s = r - τ(r)`.
pub fn factorize<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>, x: &[F]) -> Result<(Vec<F>, Vec<F>)> {
    if x.len() != alg.dim() {
        return Err(Error::Dimension(format!("vector of length {} in an algebra of dim {}", x.len(), alg.dim())));
    }
    let c = classify_r(alg, r)?;
    let inv = match (c.verdict, c.skew_inverse) {
        (Verdict::Factorizable, Some(inv)) => inv,
        _ => return Err(Error::Precondition(format!("tensor is {}, not factorizable", c.verdict.name()))),
    };
    let y = inv.apply(x);
    Ok((t_map(r).apply(&y), t_map(&r.flip()).apply(&y)))
}

/// `Σ e_i ⊗ e_i*` in the double.
pub fn canonical_r<F: Field>(n: usize) -> Tensor2<F> {
    let mut r = Tensor2::zeros(2 * n);
    for i in 0..n {
        r.set(i, n + i, F::one());
    }
    r
}

/// `T_{r - τ(r)}` for the canonical tensor of the double: `e_i* ↦ e_i*` and
/// `(e_i*)* ↦ -e_i`, the block map `(ζ, x) ↦ (ζ, -x)` on `A* ⊕ A`.
pub fn canonical_skew_map<F: Field>(n: usize) -> Matrix<F> {
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(n + i, i)] = F::one();
        m[(i, n + i)] = -F::one();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::two_dim;
    use crate::scalar::int;
    use num_rational::BigRational as Q;

    #[test]
    fn canonical_tensor_and_skew_map_in_dim_two() {
        let r = canonical_r::<Q>(1);
        assert_eq!(r.get(0, 1), &int(1));
        assert_eq!(r.nonzeros().count(), 1);
        let m = canonical_skew_map::<Q>(1);
        assert_eq!(m, Matrix::from_rows(vec![vec![int(0), int(-1)], vec![int(1), int(0)]]));
        assert_eq!(t_map(&(&r - &r.flip())), m);
    }

    #[test]
    fn coboundary_by_hand() {
        // r = e2⊗e2 on the 2-dim example: δ(e1) = e1∗e2 ⊗ e2 + e2 ⊗ [e1, e2] = -e2⊗e2.
        let a: TriAlgebra<Q> = two_dim();
        let mut r = Tensor2::zeros(2);
        r.set(1, 1, int(1));
        let ct = cobound(&a, &r).unwrap();
        assert_eq!(ct.dast.get(0, 1, 1), &int(-1));
        assert_eq!(ct.dast.nonzeros().count(), 1);
        assert!(cobound(&a, &Tensor2::zeros(2)).unwrap() == CoTriple::zero(2));
        assert!(matches!(cobound(&a, &Tensor2::zeros(3)), Err(Error::Dimension(_))));
    }
}
