use npp_core::algebra::Op;
use npp_core::bialgebra::cobound;
use npp_core::catalog::{three_dim, two_dim};
use npp_core::linalg::Matrix;
use npp_core::rep::SixRep;
use npp_core::scalar::int;
use npp_core::tensor::{contract, Legs};
use npp_core::ybe::*;
use npp_core::{Error, QAlgebra, QTensor2, QTensor3, Scalar, TriAlgebra};
use proptest::prelude::*;

fn q(v: i64) -> Scalar {
    int(v)
}

fn tensor(n: usize, entries: &[(usize, usize, i64)]) -> QTensor2 {
    let mut t = QTensor2::zeros(n);
    for &(i, j, v) in entries {
        t.set(i, j, q(v));
    }
    t
}

fn algebras() -> Vec<QAlgebra> {
    vec![two_dim(), three_dim()]
}

fn random_table(n: usize, seed: &[i64]) -> QTensor3 {
    QTensor3::from_fn(n, |a, b, c| q(seed[(a * n * n + b * n + c) % seed.len()]))
}

/// Literal index expansion of each pattern, with the first factor's leg on
/// the left at the shared slot.
fn oracle(t: &QTensor3, r: &QTensor2, x: Legs, s: &QTensor2, y: Legs) -> QTensor3 {
    let n = r.dim();
    let mut out = QTensor3::zeros(n);
    for (ai, bi, ri) in r.nonzeros() {
        for (aj, bj, sj) in s.nonzeros() {
            let coeff = ri * sj;
            let mut slot: [Vec<(usize, Scalar)>; 3] = Default::default();
            let mut first = [None; 3];
            first[x.0 - 1] = Some(ai);
            first[x.1 - 1] = Some(bi);
            let mut second = [None; 3];
            second[y.0 - 1] = Some(aj);
            second[y.1 - 1] = Some(bj);
            for k in 0..3 {
                slot[k] = match (first[k], second[k]) {
                    (Some(u), Some(v)) => (0..n).map(|w| (w, t.get(u, v, w).clone())).collect(),
                    (Some(u), None) | (None, Some(u)) => vec![(u, q(1))],
                    (None, None) => unreachable!(),
                };
            }
            for (p, cp) in &slot[0] {
                for (m, cm) in &slot[1] {
                    for (l, cl) in &slot[2] {
                        out.add_at(*p, *m, *l, &coeff * cp * cm * cl);
                    }
                }
            }
        }
    }
    out
}

const PATTERNS: [(Legs, Legs); 11] = [
    (Legs::R12, Legs::R13),
    (Legs::R23, Legs::R12),
    (Legs::R31, Legs::R23),
    (Legs::R21, Legs::R13),
    (Legs::R32, Legs::R21),
    (Legs::R31, Legs::R32),
    (Legs::R13, Legs::R32),
    (Legs::R23, Legs::R21),
    (Legs::R21, Legs::R31),
    (Legs::R23, Legs::R13),
    (Legs::R12, Legs::R31),
];

/// The printed Σ-formulas, slot by slot; `ai` is a leg of the first factor's
/// term and `aj` of the second's.
const PRINTED: [(Legs, Legs, [&str; 3]); 11] = [
    (Legs::R12, Legs::R13, ["ai*aj", "bi", "bj"]),
    (Legs::R23, Legs::R12, ["aj", "ai*bj", "bi"]),
    (Legs::R31, Legs::R23, ["bi", "aj", "ai*bj"]),
    (Legs::R21, Legs::R13, ["bi*aj", "ai", "bj"]),
    (Legs::R32, Legs::R21, ["bj", "bi*aj", "ai"]),
    (Legs::R31, Legs::R32, ["bi", "bj", "ai*aj"]),
    (Legs::R13, Legs::R32, ["ai", "bj", "bi*aj"]),
    (Legs::R23, Legs::R21, ["bj", "ai*aj", "bi"]),
    (Legs::R21, Legs::R31, ["bi*bj", "ai", "aj"]),
    (Legs::R23, Legs::R13, ["ai", "aj", "bi*bj"]),
    (Legs::R12, Legs::R31, ["ai*bj", "bi", "aj"]),
];

fn printed(t: &QTensor3, r: &QTensor2, s: &QTensor2, slots: [&str; 3]) -> QTensor3 {
    let n = r.dim();
    let mut out = QTensor3::zeros(n);
    for (ai, bi, ri) in r.nonzeros() {
        for (aj, bj, sj) in s.nonzeros() {
            let leg = |name: &str| match name {
                "ai" => ai,
                "bi" => bi,
                "aj" => aj,
                "bj" => bj,
                _ => unreachable!(),
            };
            let expand = |slot: &str| -> Vec<(usize, Scalar)> {
                match slot.split_once('*') {
                    Some((u, v)) => (0..n).map(|w| (w, t.get(leg(u), leg(v), w).clone())).collect(),
                    None => vec![(leg(slot), q(1))],
                }
            };
            let (x, y, z) = (expand(slots[0]), expand(slots[1]), expand(slots[2]));
            for (p, cp) in &x {
                for (m, cm) in &y {
                    for (l, cl) in &z {
                        out.add_at(*p, *m, *l, ri * sj * cp * cm * cl);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn printed_formulas_agree_except_the_swapped_one() {
    // ∗ of the two-dimensional example is not commutative.
    let a: QAlgebra = two_dim();
    let t = a.table(Op::Ast);
    let r = tensor(2, &[(0, 0, 1), (0, 1, 2), (1, 0, -1), (1, 1, 3)]);
    let s = tensor(2, &[(0, 0, -2), (0, 1, 1), (1, 1, 1)]);
    for (x, y, slots) in PRINTED {
        let engine = contract(&t, &r, x, &s, y).unwrap();
        if (x, y) == (Legs::R23, Legs::R13) {
            assert_ne!(engine, printed(&t, &r, &s, slots));
            assert_eq!(engine, printed(&t, &r, &s, ["aj", "ai", "bi*bj"]));
            assert_eq!(contract(&t, &r, Legs::R13, &s, Legs::R23).unwrap(), printed(&t, &r, &s, slots));
        } else {
            assert_eq!(engine, printed(&t, &r, &s, slots), "{x}{y}");
        }
    }
}

#[test]
fn contraction_on_a_known_value() {
    let a: QAlgebra = three_dim();
    let r = tensor(3, &[(1, 1, 1)]);
    let t = contract(&a.table(Op::Ast), &r, Legs::R12, &r, Legs::R13).unwrap();
    let mut want = QTensor3::zeros(3);
    want.set(0, 1, 1, q(1));
    assert_eq!(t, want);
}

#[test]
fn contraction_rejects_bad_patterns() {
    let a: QAlgebra = two_dim();
    let r = QTensor2::zeros(2);
    assert!(matches!(contract(&a.succ, &r, Legs::R12, &r, Legs::R12), Err(Error::Pattern(..))));
    assert!(matches!(contract(&a.succ, &r, Legs::R12, &r, Legs::R21), Err(Error::Pattern(..))));
    assert!(matches!(contract(&a.succ, &QTensor2::zeros(3), Legs::R12, &r, Legs::R13), Err(Error::Dimension(_))));
}

#[test]
fn zero_tensor_solves_everything() {
    for a in algebras() {
        let y = eval_ybe(&a, &QTensor2::zeros(a.dim())).unwrap();
        assert!(y.named().iter().all(|(_, t)| t.is_zero()));
        assert!(y.is_solution());
    }
}

#[test]
fn three_dim_examples() {
    let a: QAlgebra = three_dim();
    let r = tensor(3, &[(2, 2, 1)]);
    assert!(eval_ybe(&a, &r).unwrap().is_solution());
    let v = operator_characterization(&a, &r).unwrap();
    assert!(v.npp.passed() && v.poisson.passed());

    // e2⊗e2 lands outside an O-operator image: e2∗e2 = e1.
    let r = tensor(3, &[(1, 1, 1)]);
    let y = eval_ybe(&a, &r).unwrap();
    assert!(!y.is_solution());
    let v = operator_characterization(&a, &r).unwrap();
    assert!(!v.npp.passed() && !v.poisson.passed());
}

#[test]
fn two_dim_skew_part_is_invariant() {
    let a: QAlgebra = two_dim();
    let r = tensor(2, &[(0, 1, 1)]);
    let s = tensor(2, &[(0, 1, 1), (1, 0, -1)]);
    assert!(check_invariance(&a, &s).unwrap().passed());
    assert!(check_skew_invariance(&a, &r).unwrap().passed());
    let v = operator_characterization(&a, &r).unwrap();
    assert!(v.weight_minus_one.is_some());
}

#[test]
fn rota_baxter_examples() {
    let a: QAlgebra = two_dim();
    let reg = SixRep::regular(&a);
    let t = Matrix::from_fn(2, 2, |i, j| if i == 1 && j == 0 { q(1) } else { q(0) });
    let spec = RelativeRb { alg: &a, rep: &reg, map: &t, weight: q(0), v_products: None };
    assert!(check_relative_rb(&spec).unwrap().passed());

    let zero = Matrix::zeros(2, 2);
    let spec = RelativeRb { alg: &a, rep: &reg, map: &zero, weight: q(5), v_products: Some(&a) };
    assert!(check_relative_rb(&spec).unwrap().passed());

    let id = Matrix::identity(2);
    let spec = RelativeRb { alg: &a, rep: &reg, map: &id, weight: q(-1), v_products: Some(&a) };
    assert!(check_relative_rb(&spec).unwrap().passed());
    let spec = RelativeRb { alg: &a, rep: &reg, map: &id, weight: q(0), v_products: None };
    assert!(!check_relative_rb(&spec).unwrap().passed());
}

#[test]
fn lifted_operator_on_two_dim() {
    let a: QAlgebra = two_dim();
    let reg = SixRep::regular(&a);
    let t = Matrix::from_fn(2, 2, |i, j| if i == 1 && j == 0 { q(1) } else { q(0) });
    let lift = lift_operator(&a, &reg, &t).unwrap();
    assert_eq!(lift.algebra.dim(), 4);
    assert!(lift.r.is_symmetric());
    assert!(lift.preconditions.passed());
    assert!(lift.o_operator.passed());
    assert!(lift.solution);
    assert_eq!(lift.r, tensor(4, &[(1, 2, 1), (2, 1, 1)]));

    let zero = lift_operator(&a, &reg, &Matrix::zeros(2, 2)).unwrap();
    assert!(zero.r.is_zero() && zero.solution);
}

#[test]
fn search_finds_expected_solutions() {
    let a: QAlgebra = three_dim();
    let coeffs = [q(-1), q(0), q(1)];
    let found = search_ybe(&a, &coeffs, true, 1 << 20, 2).unwrap();
    assert!(found.contains(&QTensor2::zeros(3)));
    assert!(found.contains(&tensor(3, &[(2, 2, 1)])));
    for r in &found {
        assert!(operator_characterization(&a, r).unwrap().solution);
    }
    let again = search_ybe(&a, &coeffs, true, 1 << 20, 1).unwrap();
    assert_eq!(found, again);

    let zero: QAlgebra = TriAlgebra::zero(2);
    assert_eq!(search_ybe(&zero, &[q(0), q(1)], false, 1 << 20, 1).unwrap().len(), 16);
    assert!(matches!(search_ybe(&a, &coeffs, false, 100, 1), Err(Error::Budget { candidates: 19683, budget: 100 })));
}

#[test]
fn search_on_two_dim_matches_direct_evaluation() {
    let a: QAlgebra = two_dim();
    let found = search_ybe(&a, &[q(0), q(1)], false, 1 << 20, 1).unwrap();
    let r = tensor(2, &[(0, 1, 1)]);
    assert_eq!(found.contains(&r), eval_ybe(&a, &r).unwrap().is_solution());
}

#[test]
fn skew_invariant_products_need_their_hypotheses() {
    let a: QAlgebra = two_dim();
    let r = tensor(2, &[(0, 1, 1)]);
    assert!(matches!(dual_products(&a, &r, DualMode::SkewInvariant), Err(Error::Precondition(_))));
    assert!(dual_products(&a, &QTensor2::zeros(2), DualMode::General).unwrap().succ.is_zero());
}

fn small_tensor(n: usize) -> impl Strategy<Value = QTensor2> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| QTensor2::from_fn(n, |i, j| q(v[i * n + j])))
}

fn small_symmetric(n: usize) -> impl Strategy<Value = QTensor2> {
    small_tensor(n).prop_map(|t| &t + &t.flip())
}

fn either_algebra() -> impl Strategy<Value = (QAlgebra, QTensor2)> {
    prop_oneof![small_tensor(2).prop_map(|r| (two_dim(), r)), small_tensor(3).prop_map(|r| (three_dim(), r))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn contraction_matches_oracle(n in 2usize..=4, seed in prop::collection::vec(-3i64..=3, 11), a in prop::collection::vec(-2i64..=2, 16), b in prop::collection::vec(-2i64..=2, 16)) {
        let t = random_table(n, &seed);
        let r = QTensor2::from_fn(n, |i, j| q(a[i * 4 + j]));
        let s = QTensor2::from_fn(n, |i, j| q(b[i * 4 + j]));
        for (x, y) in PATTERNS {
            prop_assert_eq!(contract(&t, &r, x, &s, y).unwrap(), oracle(&t, &r, x, &s, y));
        }
    }

    #[test]
    fn permutation_identities_for_symmetric_r(r in small_symmetric(3)) {
        let a: QAlgebra = three_dim();
        let y = eval_ybe(&a, &r).unwrap();
        prop_assert_eq!(y.s.permute([2, 1, 0]), y.s1.clone());
        prop_assert_eq!(y.d.permute([0, 2, 1]), -&y.d1);
        prop_assert_eq!(y.d.permute([1, 2, 0]), y.d2.clone());
    }

    #[test]
    fn d2_plus_d3_is_minus_d((a, r) in either_algebra()) {
        let y = eval_ybe(&a, &r).unwrap();
        prop_assert_eq!(&y.d2 + &y.d3, -&y.d);
    }

    #[test]
    fn operator_items_agree_with_tensors((a, r) in either_algebra()) {
        prop_assert!(operator_items(&a, &r).is_ok());
    }

    #[test]
    fn operator_verdicts_agree((a, r) in either_algebra()) {
        let v = operator_characterization(&a, &r);
        prop_assert!(v.is_ok(), "{:?}", v.err());
    }

    #[test]
    fn invariant_skew_part_links_the_equations((a, r) in either_algebra()) {
        let inv = check_skew_invariance(&a, &r).unwrap();
        if inv.passed() {
            let y = eval_ybe(&a, &r).unwrap();
            prop_assert_eq!(y.s.is_zero(), y.s1.is_zero());
            prop_assert_eq!(y.d.is_zero(), y.d2.is_zero() && y.d3.is_zero());
        }
    }

    #[test]
    fn invariance_forms_agree((a, r) in either_algebra()) {
        prop_assert!(check_invariance(&a, &r).is_ok());
    }

    #[test]
    fn general_dual_products_are_the_dual_of_the_coboundary((a, r) in either_algebra()) {
        let lhs = dual_products(&a, &r, DualMode::General).unwrap();
        let rhs = cobound(&a, &r).unwrap().dual_algebra();
        prop_assert_eq!(lhs.succ, rhs.succ);
        prop_assert_eq!(lhs.prec, rhs.prec);
        prop_assert_eq!(lhs.ast, rhs.ast);
    }

    #[test]
    fn failing_operators_lift_to_non_solutions(v in prop::collection::vec(-1i64..=1, 4)) {
        let a: QAlgebra = two_dim();
        let t = Matrix::from_fn(2, 2, |i, j| q(v[i * 2 + j]));
        let lift = lift_operator(&a, &SixRep::regular(&a), &t).unwrap();
        prop_assert_eq!(lift.solution, lift.o_operator.passed());
    }
}

#[test]
fn sweep_agrees_with_search_on_two_dim() {
    let a: QAlgebra = two_dim();
    let coeffs = [q(-1), q(0), q(1)];
    let (summary, sols) = sweep_ybe(&a, &coeffs, false, 1 << 20, 2).unwrap();
    assert_eq!(summary.candidates, 81);
    assert!(summary.consistent(), "{:?}", summary.faults);
    assert_eq!(sols, search_ybe(&a, &coeffs, false, 1 << 20, 2).unwrap());
    assert_eq!(summary.solutions, sols.len());
}
