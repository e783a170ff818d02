//! Skew-symmetric forms: symplectic and quadratic structures, phase spaces,
//! Manin triples and quadratic Rota-Baxter operators.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Op, PoissonPair, TriAlgebra};
use crate::bialgebra::{classify_r, Classification, Verdict};
use crate::check::{check_algebra, AlgebraLevel, CheckReport};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rep::{poisson_semidirect, SixRep, ThreeRep};
use crate::scalar::{basis, dot, vadd, Field};
use crate::tensor::Tensor2;
use crate::ybe::{check_invariance, check_relative_rb, check_relative_rb_poisson, from_t_map, t_map, RelativeRb};

/// A nondegenerate skew-symmetric bilinear form, stored as `Ω[i][j] = ω(eᵢ, eⱼ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewForm<F> {
    omega: Matrix<F>,
    sharp_inv: Matrix<F>,
}

impl<F: Field> SkewForm<F> {
    pub fn new(omega: Matrix<F>) -> Result<Self> {
        if !omega.is_square() {
            return Err(Error::Form("form matrix is not square".into()));
        }
        if omega.transpose() != -&omega {
            return Err(Error::Form("form is not skew-symmetric".into()));
        }
        let sharp_inv = omega.transpose().inverse().ok_or_else(|| Error::Form("form is degenerate".into()))?;
        Ok(SkewForm { omega, sharp_inv })
    }

    /// `ω(x + a, y + b) = ⟨a, y⟩ - ⟨x, b⟩` on `A ⊕ A*`, `dim A = n`.
    pub fn canonical(n: usize) -> Self {
        let omega = Matrix::from_fn(2 * n, 2 * n, |i, j| {
            if j == i + n {
                -F::one()
            } else if i == j + n {
                F::one()
            } else {
                F::zero()
            }
        });
        Self::new(omega).expect("canonical pairing is symplectic")
    }

    pub fn dim(&self) -> usize {
        self.omega.rows()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.omega
    }

    pub fn eval(&self, x: &[F], y: &[F]) -> F {
        dot(&self.omega.transpose().apply(x), y)
    }

    /// `ω♯ : x ↦ ω(x, ·)` in the dual basis.
    pub fn sharp(&self) -> Matrix<F> {
        self.omega.transpose()
    }

    pub fn sharp_inverse(&self) -> &Matrix<F> {
        &self.sharp_inv
    }

    /// The tensor with `T_{r_ω} = (ω♯)⁻¹`.
    pub fn r_omega(&self) -> Tensor2<F> {
        from_t_map(&self.sharp_inv)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormLevel {
    SymplecticPoisson,
    QuadraticNpp,
}

impl FormLevel {
    pub fn name(self) -> &'static str {
        match self {
            FormLevel::SymplecticPoisson => "symplectic-poisson",
            FormLevel::QuadraticNpp => "quadratic-npp",
        }
    }
}

impl fmt::Display for FormLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormLevel {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "symplectic-poisson" => Ok(FormLevel::SymplecticPoisson),
            "quadratic-npp" => Ok(FormLevel::QuadraticNpp),
            _ => Err(format!("unknown form level `{s}`")),
        }
    }
}

fn fit<F: Field>(n: usize, form: &SkewForm<F>) -> Result<()> {
    if form.dim() != n {
        return Err(Error::Dimension(format!("form of dim {} on a space of dim {n}", form.dim())));
    }
    Ok(())
}

/// At `symplectic-poisson` the sub-adjacent pair is checked.
pub fn check_form<F: Field>(alg: &TriAlgebra<F>, form: &SkewForm<F>, level: FormLevel) -> Result<CheckReport<F>> {
    fit(alg.dim(), form)?;
    if level == FormLevel::SymplecticPoisson {
        return check_form_poisson(&alg.subadjacent(), form);
    }
    let n = alg.dim();
    let e = |i: usize| basis::<F>(n, i);
    let w = |x: &[F], y: &[F]| form.eval(x, y);
    let mut out = CheckReport::new("form", level.name());
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(i), e(j), e(k));
                let t = [i, j, k];
                out.compare("form.ast", &t, vec![w(&alg.mul(Op::Ast, &x, &y), &z)], vec![-w(&y, &alg.mul(Op::Bracket, &x, &z))]);
                out.compare("form.succ", &t, vec![w(&alg.mul(Op::Succ, &x, &y), &z)], vec![w(&y, &alg.mul(Op::Dot, &z, &x))]);
                out.compare("form.prec", &t, vec![w(&alg.mul(Op::Prec, &x, &y), &z)], vec![w(&x, &alg.mul(Op::Dot, &y, &z))]);
            }
        }
    }
    Ok(out)
}

/// Cyclic conditions for `[ , ]` and `·`.
pub fn check_form_poisson<F: Field>(pair: &PoissonPair<F>, form: &SkewForm<F>) -> Result<CheckReport<F>> {
    fit(pair.dim(), form)?;
    let n = pair.dim();
    let e = |i: usize| basis::<F>(n, i);
    let w = |x: &[F], y: &[F]| form.eval(x, y);
    let mut out = CheckReport::new("form", FormLevel::SymplecticPoisson.name());
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(i), e(j), e(k));
                let t = [i, j, k];
                let b = w(&pair.bracket(&x, &y), &z) + w(&pair.bracket(&y, &z), &x) + w(&pair.bracket(&z, &x), &y);
                out.zero("form.bracket-cyclic", &t, vec![b]);
                let d = w(&pair.dot(&x, &y), &z) + w(&pair.dot(&y, &z), &x) + w(&pair.dot(&z, &x), &y);
                out.zero("form.dot-cyclic", &t, vec![d]);
            }
        }
    }
    Ok(out)
}

/// The products determined by `ω(x∗y, z) = -ω(y, [x, z])`,
/// `ω(x≻y, z) = ω(y, z·x)` and `ω(x≺y, z) = ω(x, y·z)`.
pub fn npp_from_symplectic<F: Field>(pair: &PoissonPair<F>, form: &SkewForm<F>) -> Result<TriAlgebra<F>> {
    let report = check_form_poisson(pair, form)?;
    if !report.passed() {
        return Err(Error::Precondition(format!("form is not symplectic: {:?}", report.failed_identities())));
    }
    let n = pair.dim();
    let e = |i: usize| basis::<F>(n, i);
    let w = |x: &[F], y: &[F]| form.eval(x, y);
    // ω(u, e_k) = (ω♯ u)_k, so u = (ω♯)⁻¹ b
    let solve = |b: Vec<F>| form.sharp_inverse().apply(&b);
    let mut out = TriAlgebra::zero(n);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(i), e(j));
            let ast = solve((0..n).map(|k| -w(&y, &pair.bracket(&x, &e(k)))).collect());
            let succ = solve((0..n).map(|k| w(&y, &pair.dot(&e(k), &x))).collect());
            let prec = solve((0..n).map(|k| w(&x, &pair.dot(&y, &e(k)))).collect());
            for k in 0..n {
                out.ast.set(i, j, k, ast[k].clone());
                out.succ.set(i, j, k, succ[k].clone());
                out.prec.set(i, j, k, prec[k].clone());
            }
        }
    }
    out.basis = pair.basis.clone();
    if out.subadjacent() != *pair {
        return Err(Error::Consistency("solved products do not recover the input pair".into()));
    }
    Ok(out)
}

/// `A ⋉ A*` with the representation `(A*, R≺*, L≻*, -L∗*)` and the pairing form.
pub fn phase_space<F: Field>(alg: &TriAlgebra<F>) -> Result<(PoissonPair<F>, SkewForm<F>)> {
    let coherent = check_algebra(alg, AlgebraLevel::Coherent);
    if !coherent.passed() {
        return Err(Error::Precondition(format!("algebra is not coherent: {:?}", coherent.failed_identities())));
    }
    let n = alg.dim();
    let mut rep = ThreeRep::zero(n, n);
    for i in 0..n {
        let x = basis::<F>(n, i);
        rep.l[i] = alg.right(Op::Prec, &x).transpose();
        rep.r[i] = alg.left(Op::Succ, &x).transpose();
        rep.rho[i] = -&alg.left(Op::Ast, &x).transpose();
    }
    let mut pair = poisson_semidirect(&alg.subadjacent(), &rep, None)?;
    pair.basis = Some((0..n).map(|i| alg.basis_name(i)).chain((0..n).map(|i| format!("{}*", alg.basis_name(i)))).collect());
    Ok((pair, SkewForm::canonical(n)))
}

/// `split` lists the basis indices of the first part; the rest form the second.
pub fn check_manin<F: Field>(alg: &TriAlgebra<F>, form: &SkewForm<F>, split: &[usize]) -> Result<CheckReport<F>> {
    let n = alg.dim();
    fit(n, form)?;
    let mut first = split.to_vec();
    first.sort_unstable();
    first.dedup();
    if first.len() != split.len() || first.iter().any(|&i| i >= n) {
        return Err(Error::Precondition("split is not a set of basis indices".into()));
    }
    let second: Vec<usize> = (0..n).filter(|i| !first.contains(i)).collect();
    let mut out = check_form(alg, form, FormLevel::QuadraticNpp)?;
    out.subject = "manin".into();
    out.level = "manin-triple".into();
    let mut parts = Vec::new();
    for (name, idx) in [("first", &first), ("second", &second)] {
        out.evaluated += 1;
        match alg.restrict(idx) {
            Some(sub) => parts.push(sub),
            None => out.failures.push(crate::check::Failure {
                identity: format!("manin.{name}-subalgebra"),
                witness: idx.iter().map(|i| i + 1).collect(),
                lhs: vec![],
                rhs: vec![],
            }),
        }
        for &i in idx.iter() {
            for &j in idx.iter() {
                out.zero(&format!("manin.{name}-isotropic"), &[i, j], vec![form.matrix()[(i, j)].clone()]);
            }
        }
    }
    if out.passed() {
        let whole = check_algebra(alg, AlgebraLevel::Coherent).passed();
        if !whole || !parts.iter().all(|p| check_algebra(p, AlgebraLevel::Coherent).passed()) {
            return Err(Error::Consistency("a Manin triple with a non-coherent member".into()));
        }
        out.notes.push("algebra and both parts are coherent".into());
    }
    Ok(out)
}

/// A Rota-Baxter operator of some weight, optionally with a form.
#[derive(Clone, Debug, PartialEq)]
pub struct RbSpec<F> {
    pub alg: TriAlgebra<F>,
    pub p: Matrix<F>,
    pub weight: F,
    pub form: Option<SkewForm<F>>,
}

/// `ω(Px, y) + ω(x, Py) + λω(x, y) = 0`.
pub fn check_form_compat<F: Field>(p: &Matrix<F>, weight: &F, form: &SkewForm<F>) -> Result<CheckReport<F>> {
    let n = form.dim();
    if p.rows() != n || p.cols() != n {
        return Err(Error::Dimension("operator and form dimensions differ".into()));
    }
    let mut out = CheckReport::new("operator", "form-compatible");
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis::<F>(n, i), basis::<F>(n, j));
            let v = form.eval(&p.apply(&x), &y) + form.eval(&x, &p.apply(&y)) + weight.clone() * form.eval(&x, &y);
            out.zero("rb.form", &[i, j], vec![v]);
        }
    }
    Ok(out)
}

pub fn check_quadratic_rb<F: Field>(spec: &RbSpec<F>) -> Result<CheckReport<F>> {
    let form = spec.form.as_ref().ok_or_else(|| Error::Precondition("quadratic Rota-Baxter check needs a form".into()))?;
    let n = spec.alg.dim();
    fit(n, form)?;
    let rep = SixRep::regular(&spec.alg);
    let rb = RelativeRb { alg: &spec.alg, rep: &rep, map: &spec.p, weight: spec.weight.clone(), v_products: Some(&spec.alg) };
    let mut out = CheckReport::new("operator", "quadratic-rota-baxter");
    out.absorb(check_relative_rb(&rb)?);
    out.absorb(check_form(&spec.alg, form, FormLevel::QuadraticNpp)?);
    out.absorb(check_form_compat(&spec.p, &spec.weight, form)?);
    Ok(out)
}

/// Poisson counterpart of [`check_quadratic_rb`].
pub fn check_symplectic_rb<F: Field>(pair: &PoissonPair<F>, p: &Matrix<F>, weight: &F, form: &SkewForm<F>) -> Result<CheckReport<F>> {
    let n = pair.dim();
    fit(n, form)?;
    let mut rep = ThreeRep::zero(n, n);
    for i in 0..n {
        let x = basis::<F>(n, i);
        rep.l[i] = pair.left_dot(&x);
        rep.r[i] = pair.right_dot(&x);
        rep.rho[i] = pair.ad(&x);
    }
    let mut out = CheckReport::new("operator", "symplectic-rota-baxter");
    out.absorb(check_relative_rb_poisson(pair, &rep, p, weight, Some(pair))?);
    out.absorb(check_form_poisson(pair, form)?);
    out.absorb(check_form_compat(p, weight, form)?);
    Ok(out)
}

/// `ω♯ = λ T_{r-τ(r)}⁻¹` and `P = -T_r ω♯`.
pub fn fact_to_rb<F: Field>(alg: &TriAlgebra<F>, r: &Tensor2<F>, lambda: &F) -> Result<RbSpec<F>> {
    if lambda.is_zero() {
        return Err(Error::Precondition("weight must be nonzero".into()));
    }
    let c = classify_r(alg, r)?;
    if c.verdict != Verdict::Factorizable {
        return Err(Error::Precondition(format!("tensor is {}, not factorizable", c.verdict.name())));
    }
    let inv = c.skew_inverse.expect("factorizable tensors have an invertible skew part");
    let sharp = inv.scale(lambda);
    let form = SkewForm::new(sharp.transpose())?;
    let p = -&(&t_map(r) * &sharp);
    Ok(RbSpec { alg: alg.clone(), p, weight: lambda.clone(), form: Some(form) })
}

#[derive(Clone, Debug)]
pub struct Conversion<F> {
    pub r: Tensor2<F>,
    pub classification: Classification<F>,
    pub notes: Vec<String>,
}

/// Back from a quadratic Rota-Baxter operator to a tensor: `T_r = -P(ω♯)⁻¹`,
/// or `T_r = P(ω♯)⁻¹` at weight zero.
pub fn rb_to_fact<F: Field>(spec: &RbSpec<F>) -> Result<Conversion<F>> {
    let report = check_quadratic_rb(spec)?;
    if !report.passed() {
        return Err(Error::Precondition(format!("not a quadratic Rota-Baxter operator: {:?}", report.failed_identities())));
    }
    let form = spec.form.as_ref().expect("checked above");
    let t = &spec.p * form.sharp_inverse();
    let mut notes = Vec::new();
    let t = if spec.weight.is_zero() {
        notes.push("weight zero: T_r = P(ω♯)⁻¹, opposite sign to the nonzero-weight formula".into());
        t
    } else {
        -&t
    };
    let r = from_t_map(&t);
    let classification = classify_r(&spec.alg, &r)?;
    let expected = if spec.weight.is_zero() { Verdict::Triangular } else { Verdict::Factorizable };
    if classification.verdict != expected {
        return Err(Error::Consistency(format!("converted tensor is {}, expected {}", classification.verdict.name(), expected.name())));
    }
    Ok(Conversion { r, classification, notes })
}

/// `r_ω` together with the comparison of the quadratic form check against
/// skew-symmetry and invariance of `r_ω`.
pub fn r_omega<F: Field>(form: &SkewForm<F>, alg: &TriAlgebra<F>) -> Result<(Tensor2<F>, CheckReport<F>)> {
    let r = form.r_omega();
    let quad = check_form(alg, form, FormLevel::QuadraticNpp)?;
    let inv = check_invariance(alg, &r)?;
    let (a, b) = (quad.passed(), r.is_skew() && inv.passed());
    if a != b {
        return Err(Error::Consistency(format!(
            "form check {} but r_omega {} skew-symmetric and invariant",
            if a { "passes" } else { "fails" },
            if b { "is" } else { "is not" }
        )));
    }
    let mut out = CheckReport::new("form", "r-omega");
    out.absorb(quad);
    out.absorb(inv);
    Ok((r, out))
}

/// `P(x)∘P(y) = P(P(x)∘y + x∘P(y) + x∘S(y))` for `P = -T_r ω♯` and
/// `S = T_{r-τ(r)} ω♯`. When `r - τ(r)` is invariant these hold exactly when
/// `r` solves the Yang-Baxter system.
pub fn operator_identities<F: Field>(alg: &TriAlgebra<F>, form: &SkewForm<F>, r: &Tensor2<F>) -> Result<CheckReport<F>> {
    let n = alg.dim();
    fit(n, form)?;
    let p = -&(&t_map(r) * &form.sharp());
    let s = &t_map(&(r - &r.flip())) * &form.sharp();
    let mut out = CheckReport::new("operator", "form-operator");
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (basis::<F>(n, i), basis::<F>(n, j));
            let (px, py, sy) = (p.apply(&x), p.apply(&y), s.apply(&y));
            for op in Op::BASIC {
                let inner = vadd(&vadd(&alg.mul(op, &px, &y), &alg.mul(op, &x, &py)), &alg.mul(op, &x, &sy));
                out.compare(&format!("op.{}", op.symbol()), &[i, j], alg.mul(op, &px, &py), p.apply(&inner));
            }
        }
    }
    Ok(out)
}
