//! Exact computation in combinatorial Hopf algebras.
//!
//! The crate provides the Hopf algebras of quasi-symmetric functions
//! ([`QSym`]), noncommutative symmetric functions ([`NSym`]) and symmetric
//! functions ([`Sym`]); the convolution group of characters on any graded
//! connected Hopf algebra described by a [`HopfAlgebra`]; the universal
//! morphism to QSym; combinatorial instances (graded posets, finite posets,
//! graphs); and the even/odd subalgebra machinery including
//! Dehn–Sommerville checks and Hilbert series.
//!
//! Kernels are generic over the coefficient type. [`Rational`] is the exact
//! choice used throughout the tests and the CLI.

pub mod characters;
pub mod compositions;
pub mod element;
pub mod error;
pub mod evenodd;
pub mod hopf;
pub mod instances;
pub mod linalg;
pub mod nsym;
pub mod parse;
pub mod poly;
pub mod qsym;
pub mod scalar;
pub mod series;
pub mod sym;
pub mod universal;

pub use characters::{Character, Functional};
pub use compositions::{Composition, Partition};
pub use element::{linear_combine, Basis, Element, Tensor};
pub use error::{Error, Result};
pub use hopf::HopfAlgebra;
pub use nsym::NSym;
pub use qsym::{QSym, QSymBasis};
pub use scalar::{Field, Scalar};
pub use series::TruncatedSeries;
pub use sym::{Sym, SymBasis};

/// Exact rational scalars.
pub type Rational = num_rational::BigRational;
/// QSym with exact coefficients.
pub type QSymElement = QSym<Rational>;
/// NSym with exact coefficients.
pub type NSymElement = NSym<Rational>;
/// Sym with exact coefficients.
pub type SymElement = Sym<Rational>;
/// Truncated series with exact coefficients.
pub type Series = TruncatedSeries<Rational>;
/// QSym with double-precision coefficients.
pub type QSymF64 = QSym<f64>;
