//! Small named algebras used by the tests, the CLI and the documentation.

use itertools::Itertools;

use crate::algebra::{Op, TriAlgebra};
use crate::check::{check_algebra, AlgebraLevel};
use crate::scalar::{int, Field};

/// Two-dimensional coherent example:
/// `e1≻e1 = e1, e1≻e2 = e2, e1≺e2 = -e2, e2≺e1 = e2, e1∗e1 = e1, e2∗e1 = e2`.
pub fn two_dim<F: Field>() -> TriAlgebra<F> {
    TriAlgebra::from_entries(
        2,
        &[
            (Op::Succ, 0, 0, 0, int(1)),
            (Op::Succ, 0, 1, 1, int(1)),
            (Op::Prec, 0, 1, 1, int(-1)),
            (Op::Prec, 1, 0, 1, int(1)),
            (Op::Ast, 0, 0, 0, int(1)),
            (Op::Ast, 1, 0, 1, int(1)),
        ],
    )
}

/// Three-dimensional coherent example:
/// `e2≻e2 = e3, e2≺e2 = -e3, e1∗e2 = e3, e2∗e2 = e1`.
pub fn three_dim<F: Field>() -> TriAlgebra<F> {
    TriAlgebra::from_entries(
        3,
        &[
            (Op::Succ, 1, 1, 2, int(1)),
            (Op::Prec, 1, 1, 2, int(-1)),
            (Op::Ast, 0, 1, 2, int(1)),
            (Op::Ast, 1, 1, 0, int(1)),
        ],
    )
}

/// Search structure constants with entries in `coeffs` for an algebra that
/// passes the npp level but fails coherence. Candidates are visited by
/// increasing number of nonzero constants, so the first hit is a sparsest one.
/// Gives up after `max_support` nonzero constants.
pub fn find_non_coherent<F: Field>(dim: usize, coeffs: &[F], max_support: usize) -> Option<TriAlgebra<F>> {
    let nonzero: Vec<F> = coeffs.iter().filter(|c| !c.is_zero()).cloned().collect();
    let slots = 3 * dim * dim * dim;
    for support in 1..=max_support.min(slots) {
        for positions in (0..slots).combinations(support) {
            let mut choice = vec![0usize; support];
            loop {
                let mut alg = TriAlgebra::zero(dim);
                for (p, &c) in positions.iter().zip(&choice) {
                    let op = Op::BASIC[p / (dim * dim * dim)];
                    let rest = p % (dim * dim * dim);
                    alg.table_mut(op).set(rest / (dim * dim), (rest / dim) % dim, rest % dim, nonzero[c].clone());
                }
                if check_algebra(&alg, AlgebraLevel::Npp).passed() && !check_algebra(&alg, AlgebraLevel::Coherent).passed() {
                    return Some(alg);
                }
                if !advance(&mut choice, nonzero.len()) {
                    break;
                }
            }
        }
    }
    None
}

/// Odometer step over `0..base` digits; false once it wraps around.
pub(crate) fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational as Q;

    #[test]
    fn examples_are_coherent() {
        assert!(check_algebra(&two_dim::<Q>(), AlgebraLevel::Coherent).passed());
        assert!(check_algebra(&three_dim::<Q>(), AlgebraLevel::Coherent).passed());
    }
}
