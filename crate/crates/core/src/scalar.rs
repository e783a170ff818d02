//! Scalar field abstraction.
//!
//! Every check in this crate compares values with `==` and `is_zero`, so the
//! verdicts are only meaningful for exact fields such as [`num_rational::BigRational`].

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Field operations needed by the structure code.
pub trait Field:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
}

impl<T> Field for T where
    T: Clone + PartialEq + Debug + Display + Num + Neg<Output = T> + FromPrimitive + Send + Sync
{
}

pub fn int<F: Field>(v: i64) -> F {
    F::from_i64(v).expect("integer fits the scalar type")
}

pub fn dot<F: Field>(x: &[F], y: &[F]) -> F {
    let mut acc = F::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc + a.clone() * b.clone();
        }
    }
    acc
}

pub fn basis<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// `a + b`, skipping the arithmetic when either side is zero.
pub fn add<F: Field>(a: &F, b: &F) -> F {
    if b.is_zero() {
        a.clone()
    } else if a.is_zero() {
        b.clone()
    } else {
        a.clone() + b.clone()
    }
}

pub fn sub<F: Field>(a: &F, b: &F) -> F {
    if b.is_zero() {
        a.clone()
    } else if a.is_zero() {
        -b.clone()
    } else {
        a.clone() - b.clone()
    }
}

pub fn vadd<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    x.iter().zip(y).map(|(a, b)| add(a, b)).collect()
}

pub fn vsub<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    x.iter().zip(y).map(|(a, b)| sub(a, b)).collect()
}

pub fn vneg<F: Field>(x: &[F]) -> Vec<F> {
    x.iter().map(|a| -a.clone()).collect()
}

pub fn vscale<F: Field>(c: &F, x: &[F]) -> Vec<F> {
    x.iter().map(|a| c.clone() * a.clone()).collect()
}

pub fn is_zero_vec<F: Field>(x: &[F]) -> bool {
    x.iter().all(|a| a.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn small_ints() {
        let a: BigRational = int(-3);
        assert_eq!(a.to_string(), "-3");
        assert_eq!(int::<BigRational>(0), BigRational::from_integer(0.into()));
    }

    #[test]
    fn vector_helpers() {
        let x: Vec<BigRational> = vec![int(1), int(2)];
        let y: Vec<BigRational> = vec![int(3), int(-2)];
        assert_eq!(vadd(&x, &y), vec![int(4), int(0)]);
        assert_eq!(dot(&x, &y), int(-1));
        assert!(is_zero_vec(&vsub(&x, &x)));
    }
}
