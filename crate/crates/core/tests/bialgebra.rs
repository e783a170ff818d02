use npp_core::bialgebra::*;
use npp_core::catalog::{three_dim, two_dim};
use npp_core::check::{check_algebra, AlgebraLevel};
use npp_core::linalg::Matrix;
use npp_core::rep::{semidirect, SixRep};
use npp_core::scalar::{int, vadd, vsub};
use npp_core::ybe::{check_skew_invariance, eval_ybe, search_ybe};
use npp_core::{QAlgebra, QTensor2, Scalar};
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

fn all_tensors(n: usize) -> impl Iterator<Item = QTensor2> {
    let cells = n * n;
    (0..3usize.pow(cells as u32)).map(move |mut code| {
        let mut t = QTensor2::zeros(n);
        for c in (0..cells).rev() {
            t.set(c / n, c % n, q((code % 3) as i64 - 1));
            code /= 3;
        }
        t
    })
}

#[test]
fn zero_comultiplication_is_a_bialgebra() {
    for a in [two_dim::<Scalar>(), three_dim()] {
        let ct = cobound(&a, &QTensor2::zeros(a.dim())).unwrap();
        assert_eq!(ct, CoTriple::zero(a.dim()));
        for level in [AlgebraLevel::Dendriform, AlgebraLevel::PreLie, AlgebraLevel::Npp, AlgebraLevel::Coherent] {
            assert!(check_coalgebra(&ct, level).unwrap().passed());
        }
        assert!(check_bialgebra(&a, &ct).unwrap().passed());
    }
}

#[test]
fn dual_coalgebra_levels_follow_the_algebra() {
    let a: QAlgebra = two_dim();
    let ct = CoTriple::from_dual_algebra(&a);
    let back = ct.dual_algebra();
    assert_eq!((back.succ.clone(), back.prec.clone(), back.ast.clone()), (a.succ.clone(), a.prec.clone(), a.ast.clone()));
    for level in [AlgebraLevel::Dendriform, AlgebraLevel::PreLie, AlgebraLevel::Npp, AlgebraLevel::Coherent] {
        assert_eq!(check_coalgebra(&ct, level).unwrap().passed(), check_algebra(&a, level).passed());
    }
}

#[test]
fn symmetric_solutions_give_bialgebras() {
    let a: QAlgebra = three_dim();
    let found = search_ybe(&a, &[q(-1), q(0), q(1)], true, 1 << 20, 4).unwrap();
    assert!(found.len() > 1);
    for r in &found {
        let ct = cobound(&a, r).unwrap();
        assert!(check_coalgebra(&ct, AlgebraLevel::Coherent).unwrap().passed());
        assert!(check_algebra(&ct.dual_algebra(), AlgebraLevel::Coherent).passed());
        let rep = check_bialgebra(&a, &ct).unwrap();
        assert!(rep.passed(), "{:?}", rep.failed_identities());
        assert!(rep.notes.iter().any(|n| n == "double cross-check: pass"));
    }
}

#[test]
fn quasi_triangular_tensors_give_bialgebras() {
    let a: QAlgebra = two_dim();
    let mut seen = 0;
    for r in all_tensors(2) {
        if eval_ybe(&a, &r).unwrap().is_solution() && check_skew_invariance(&a, &r).unwrap().passed() {
            seen += 1;
            assert!(check_bialgebra(&a, &cobound(&a, &r).unwrap()).unwrap().passed());
            assert!(classify_r(&a, &r).unwrap().verdict.is_quasi_triangular());
        }
    }
    assert!(seen > 0);
}

#[test]
fn every_tensor_on_the_two_dim_example_gives_a_bialgebra() {
    let a: QAlgebra = two_dim();
    for r in all_tensors(2) {
        let rep = check_bialgebra(&a, &cobound(&a, &r).unwrap()).unwrap();
        assert!(rep.passed(), "{:?}", rep.failed_identities());
    }
}

#[test]
fn failing_coboundaries_are_detected() {
    let a: QAlgebra = three_dim();
    let mut bad = 0;
    for r in all_tensors(3).step_by(97) {
        let rep = check_bialgebra(&a, &cobound(&a, &r).unwrap()).unwrap();
        if !rep.passed() {
            bad += 1;
            assert!(!eval_ybe(&a, &r).unwrap().is_solution());
        }
    }
    assert!(bad > 0);
}

#[test]
fn the_opposite_sign_of_delta_breaks_a_coboundary() {
    let a: QAlgebra = two_dim();
    let r = tensor(2, &[(1, 1, 1)]);
    let mut ct = cobound(&a, &r).unwrap();
    ct.dast = -&ct.dast;
    let rep = check_bialgebra(&a, &ct).unwrap();
    assert!(rep.failed_identities().contains("npb.dot-ast"));
    assert!(rep.notes.iter().any(|n| n == "double cross-check: fail"));
}

#[test]
fn double_of_the_zero_comultiplication_is_the_semidirect_product() {
    let a: QAlgebra = two_dim();
    let d = double(&a, &CoTriple::zero(2)).unwrap();
    let s = semidirect(&a, &SixRep::regular(&a).dual(), None).unwrap();
    assert_eq!((d.succ.clone(), d.prec.clone(), d.ast.clone()), (s.succ, s.prec, s.ast));
    let r = canonical_r(2);
    assert_eq!(classify_r(&d, &r).unwrap().verdict, Verdict::Factorizable);
}

#[test]
fn doubles_of_coboundary_bialgebras() {
    let a: QAlgebra = three_dim();
    let found = search_ybe(&a, &[q(-1), q(0), q(1)], true, 1 << 20, 4).unwrap();
    let block = Matrix::from_fn(6, 6, |i, j| {
        if i >= 3 && j == i - 3 {
            q(1)
        } else if i < 3 && j == i + 3 {
            q(-1)
        } else {
            q(0)
        }
    });
    assert_eq!(block, canonical_skew_map(3));
    for r in found.iter().take(12) {
        let d = double(&a, &cobound(&a, r).unwrap()).unwrap();
        assert!(check_algebra(&d, AlgebraLevel::Coherent).passed());
        let c = classify_r(&d, &canonical_r(3)).unwrap();
        assert_eq!(c.verdict, Verdict::Factorizable);
        assert_eq!(c.skew_map, block);
    }
}

#[test]
fn classification_examples() {
    let a: QAlgebra = two_dim();
    let c = classify_r(&a, &QTensor2::zeros(2)).unwrap();
    assert_eq!(c.verdict, Verdict::Triangular);
    assert!(c.skew_inverse.is_none());

    let r = tensor(2, &[(0, 1, 1)]);
    let c = classify_r(&a, &r).unwrap();
    assert!(c.skew_invariance.passed());
    assert_eq!(c.verdict.is_quasi_triangular(), c.ybe.is_solution());
}

#[test]
fn factorization_of_the_canonical_double_tensor() {
    let a: QAlgebra = two_dim();
    let d = double(&a, &CoTriple::zero(2)).unwrap();
    let r = canonical_r(2);
    assert_eq!(factorize(&d, &r, &vec![q(0); 4]).unwrap(), (vec![q(0); 4], vec![q(0); 4]));
    let x = vec![q(0), q(0), q(3), q(-2)];
    let (x1, x2) = factorize(&d, &r, &x).unwrap();
    assert_eq!(vsub(&x1, &x2), x);
    assert!(factorize(&a, &QTensor2::zeros(2), &[q(1), q(0)]).is_err());
}

fn small_tensor(n: usize) -> impl Strategy<Value = QTensor2> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| QTensor2::from_fn(n, |i, j| q(v[i * n + j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coboundary_is_linear(r in small_tensor(3), s in small_tensor(3)) {
        let a: QAlgebra = three_dim();
        let sum = cobound(&a, &(&r + &s)).unwrap();
        let (x, y) = (cobound(&a, &r).unwrap(), cobound(&a, &s).unwrap());
        prop_assert_eq!(sum.dsucc, &x.dsucc + &y.dsucc);
        prop_assert_eq!(sum.dprec, &x.dprec + &y.dprec);
        prop_assert_eq!(sum.dast, &x.dast + &y.dast);
    }

    #[test]
    fn flipping_keeps_the_verdict(r in small_tensor(2)) {
        let a: QAlgebra = two_dim();
        let c = classify_r(&a, &r).unwrap().verdict;
        if c.is_quasi_triangular() {
            let f = classify_r(&a, &r.flip()).unwrap().verdict;
            prop_assert!(f.is_quasi_triangular());
            prop_assert_eq!(f == Verdict::Factorizable, c == Verdict::Factorizable);
        }
    }

    #[test]
    fn factorization_is_linear(x in prop::collection::vec(-3i64..=3, 4), y in prop::collection::vec(-3i64..=3, 4)) {
        let a: QAlgebra = two_dim();
        let d = double(&a, &CoTriple::zero(2)).unwrap();
        let r = canonical_r(2);
        let (x, y): (Vec<Scalar>, Vec<Scalar>) = (x.into_iter().map(q).collect(), y.into_iter().map(q).collect());
        let (a1, a2) = factorize(&d, &r, &x).unwrap();
        let (b1, b2) = factorize(&d, &r, &y).unwrap();
        let (c1, c2) = factorize(&d, &r, &vadd(&x, &y)).unwrap();
        prop_assert_eq!(c1, vadd(&a1, &b1));
        prop_assert_eq!(c2, vadd(&a2, &b2));
        prop_assert_eq!(vsub(&a1, &a2), x);
    }
}
