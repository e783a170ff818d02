//! Identity evaluation with witnesses.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{Op, PoissonPair, TriAlgebra};
use crate::scalar::{basis, is_zero_vec, vadd, vsub, Field};

/// One failed instance of an identity.
#[derive(Clone, Debug, PartialEq)]
pub struct Failure<F> {
    pub identity: String,
    /// Basis indices (1-based) the identity was evaluated at.
    pub witness: Vec<usize>,
    pub lhs: Vec<F>,
    pub rhs: Vec<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport<F> {
    pub subject: String,
    pub level: String,
    /// Number of identity instances evaluated.
    pub evaluated: usize,
    pub failures: Vec<Failure<F>>,
    pub notes: Vec<String>,
}

impl<F: Field> CheckReport<F> {
    pub fn new(subject: impl Into<String>, level: impl Into<String>) -> Self {
        CheckReport { subject: subject.into(), level: level.into(), evaluated: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record `lhs == rhs` at a 0-based witness.
    pub fn compare(&mut self, identity: &str, witness: &[usize], lhs: Vec<F>, rhs: Vec<F>) -> bool {
        self.evaluated += 1;
        if lhs == rhs {
            return true;
        }
        self.failures.push(Failure {
            identity: identity.to_string(),
            witness: witness.iter().map(|i| i + 1).collect(),
            lhs,
            rhs,
        });
        false
    }

    /// Record `value == 0`.
    pub fn zero(&mut self, identity: &str, witness: &[usize], value: Vec<F>) -> bool {
        if is_zero_vec(&value) {
            self.evaluated += 1;
            return true;
        }
        let n = value.len();
        self.compare(identity, witness, value, vec![F::zero(); n])
    }

    pub fn absorb(&mut self, other: CheckReport<F>) {
        self.evaluated += other.evaluated;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    pub fn failed_identities(&self) -> BTreeSet<String> {
        self.failures.iter().map(|f| f.identity.clone()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AlgebraLevel {
    Dendriform,
    PreLie,
    Npp,
    Coherent,
    /// The sub-adjacent pair is a noncommutative Poisson algebra.
    Poisson,
}

impl AlgebraLevel {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraLevel::Dendriform => "dendriform",
            AlgebraLevel::PreLie => "pre-lie",
            AlgebraLevel::Npp => "npp",
            AlgebraLevel::Coherent => "coherent",
            AlgebraLevel::Poisson => "poisson",
        }
    }
}

impl fmt::Display for AlgebraLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraLevel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "dendriform" => AlgebraLevel::Dendriform,
            "pre-lie" | "prelie" => AlgebraLevel::PreLie,
            "npp" => AlgebraLevel::Npp,
            "coherent" => AlgebraLevel::Coherent,
            "poisson" => AlgebraLevel::Poisson,
            _ => return Err(format!("unknown algebra level `{s}`")),
        })
    }
}

pub(crate) type TripleFilter<'a> = &'a dyn Fn(usize, usize, usize) -> bool;

pub fn check_algebra<F: Field>(alg: &TriAlgebra<F>, level: AlgebraLevel) -> CheckReport<F> {
    check_algebra_on(alg, level, &|_, _, _| true)
}

/// Like [`check_algebra`] but only at basis triples accepted by `keep`.
pub(crate) fn check_algebra_on<F: Field>(alg: &TriAlgebra<F>, level: AlgebraLevel, keep: TripleFilter) -> CheckReport<F> {
    let mut rep = CheckReport::new("algebra", level.name());
    if level == AlgebraLevel::Poisson {
        rep.absorb(check_poisson_on(&alg.subadjacent(), false, keep));
        rep.level = level.name().into();
        return rep;
    }
    let n = alg.dim();
    let e = |i: usize| basis::<F>(n, i);
    let m = |op: Op, x: &[F], y: &[F]| alg.mul(op, x, y);
    let dend = matches!(level, AlgebraLevel::Dendriform | AlgebraLevel::Npp | AlgebraLevel::Coherent);
    let prelie = matches!(level, AlgebraLevel::PreLie | AlgebraLevel::Npp | AlgebraLevel::Coherent);
    let npp = matches!(level, AlgebraLevel::Npp | AlgebraLevel::Coherent);
    let coherent = level == AlgebraLevel::Coherent;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !keep(i, j, k) {
                    continue;
                }
                let (x, y, z) = (e(i), e(j), e(k));
                let w = [i, j, k];
                if dend {
                    rep.compare("dend.prec-prec", &w, m(Op::Prec, &m(Op::Prec, &x, &y), &z), m(Op::Prec, &x, &m(Op::Dot, &y, &z)));
                    rep.compare("dend.succ-prec", &w, m(Op::Prec, &m(Op::Succ, &x, &y), &z), m(Op::Succ, &x, &m(Op::Prec, &y, &z)));
                    rep.compare("dend.succ-succ", &w, m(Op::Succ, &x, &m(Op::Succ, &y, &z)), m(Op::Succ, &m(Op::Dot, &x, &y), &z));
                }
                if prelie {
                    let a = |p: &[F], q: &[F], s: &[F]| vsub(&m(Op::Ast, &m(Op::Ast, p, q), s), &m(Op::Ast, p, &m(Op::Ast, q, s)));
                    rep.compare("prelie.left-symmetric", &w, a(&x, &y, &z), a(&y, &x, &z));
                }
                if npp {
                    rep.compare(
                        "npp.bracket-succ",
                        &w,
                        m(Op::Succ, &m(Op::Bracket, &x, &y), &z),
                        vsub(&m(Op::Ast, &x, &m(Op::Succ, &y, &z)), &m(Op::Succ, &y, &m(Op::Ast, &x, &z))),
                    );
                    rep.compare(
                        "npp.prec-bracket",
                        &w,
                        m(Op::Prec, &x, &m(Op::Bracket, &y, &z)),
                        vsub(&m(Op::Ast, &y, &m(Op::Prec, &x, &z)), &m(Op::Prec, &m(Op::Ast, &y, &x), &z)),
                    );
                    rep.compare(
                        "npp.dot-ast",
                        &w,
                        m(Op::Ast, &m(Op::Dot, &x, &y), &z),
                        vadd(&m(Op::Prec, &m(Op::Ast, &x, &z), &y), &m(Op::Succ, &x, &m(Op::Ast, &y, &z))),
                    );
                }
                if coherent {
                    rep.compare(
                        "npp.coherence",
                        &w,
                        m(Op::Ast, &m(Op::Dot, &x, &y), &z),
                        vadd(&m(Op::Ast, &x, &m(Op::Succ, &y, &z)), &m(Op::Ast, &y, &m(Op::Prec, &z, &x))),
                    );
                }
            }
        }
    }
    rep
}

/// Noncommutative Poisson axioms; with `coherent` also the cyclic Leibniz sum.
pub fn check_poisson<F: Field>(p: &PoissonPair<F>, coherent: bool) -> CheckReport<F> {
    check_poisson_on(p, coherent, &|_, _, _| true)
}

pub(crate) fn check_poisson_on<F: Field>(p: &PoissonPair<F>, coherent: bool, keep: TripleFilter) -> CheckReport<F> {
    let mut rep = CheckReport::new("poisson", if coherent { "coherent-poisson" } else { "poisson" });
    let n = p.dim();
    let e = |i: usize| basis::<F>(n, i);
    let d = |x: &[F], y: &[F]| p.dot(x, y);
    let b = |x: &[F], y: &[F]| p.bracket(x, y);
    for i in 0..n {
        for j in 0..n {
            if keep(i, j, usize::MAX) {
                let (x, y) = (e(i), e(j));
                rep.zero("poisson.antisymmetry", &[i, j], vadd(&b(&x, &y), &b(&y, &x)));
            }
            for k in 0..n {
                if !keep(i, j, k) {
                    continue;
                }
                let (x, y, z) = (e(i), e(j), e(k));
                let w = [i, j, k];
                rep.compare("poisson.associativity", &w, d(&d(&x, &y), &z), d(&x, &d(&y, &z)));
                let jac = vadd(&vadd(&b(&x, &b(&y, &z)), &b(&y, &b(&z, &x))), &b(&z, &b(&x, &y)));
                rep.zero("poisson.jacobi", &w, jac);
                rep.compare("poisson.leibniz", &w, b(&x, &d(&y, &z)), vadd(&d(&b(&x, &y), &z), &d(&y, &b(&x, &z))));
                if coherent {
                    let cyc = vadd(&vadd(&b(&x, &d(&y, &z)), &b(&y, &d(&z, &x))), &b(&z, &d(&x, &y)));
                    rep.zero("poisson.coherence", &w, cyc);
                }
            }
        }
    }
    rep
}
