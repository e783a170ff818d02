//! Exact linear algebra for noncommutative pre-Poisson algebras: structure
//! checks, representations, Yang-Baxter type equations, bialgebras and
//! quadratic Rota-Baxter structures.
//!
//! Everything is generic over a [`scalar::Field`]; the aliases below fix the
//! scalar to arbitrary precision rationals, which is what the checks assume.

pub mod algebra;
pub mod bialgebra;
pub mod catalog;
pub mod check;
pub mod error;
pub mod rep;
pub mod linalg;
pub mod quadratic;
pub mod scalar;
pub mod tensor;
pub mod ybe;

pub use algebra::{Op, PoissonPair, TriAlgebra};
pub use check::{AlgebraLevel, CheckReport, Failure};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use scalar::Field;
pub use tensor::{Legs, Tensor2, Tensor3};

pub type Scalar = num_rational::BigRational;
pub type QMatrix = Matrix<Scalar>;
pub type QTensor2 = Tensor2<Scalar>;
pub type QTensor3 = Tensor3<Scalar>;
pub type QAlgebra = TriAlgebra<Scalar>;
pub type QPoisson = PoissonPair<Scalar>;
pub type QReport = CheckReport<Scalar>;
