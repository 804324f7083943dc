//! Free resolutions of `R/I` over a complete intersection `R = Q/𝔞`, where
//! `I` is a monomial ideal containing `𝔞`.
//!
//! The pipeline is:
//!
//! 1. [`taylor`]: the Taylor resolution `T` of `Q/I`.
//! 2. [`homotopy`]: write each `a_j` in terms of the generators of `I` and
//!    turn the coefficients into homotopies `σ_{e_j}` on `T`.
//! 3. [`shamash`]: combine `T` with a divided-power algebra to get the
//!    Eisenbud–Shamash resolution `F` over `R`.
//!
//! [`quotient`] spot-checks exactness of `F` in bounded degree and
//! [`export`] renders everything as text, JSON, LaTeX or DOT.
//!
//! All algorithms are generic over the coefficient [`Field`]. The aliases
//! below fix the two common choices.

pub mod error;
pub mod export;
pub mod field;
pub mod homotopy;
pub mod matrix;
pub mod poly;
pub mod quotient;
pub mod random;
pub mod report;
pub mod shamash;
pub mod taylor;

pub use error::{Error, Result};
pub use field::{Field, Fp, Gf32003, Rational};
pub use homotopy::{
    verify_homotopy_system, CompleteIntersectionData, FixedAssignments, HomotopySystem,
    LiftMatrix, LiftStrategy,
};
pub use matrix::{BasisLabel, LabeledGradedMatrix};
pub use poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
pub use report::{CheckFailure, Report};
pub use shamash::{betti_bound, rank_formula, Parity, ShamashBasisElement, ShamashResolution};
pub use taylor::{MonomialIdeal, SubsetLabel, TaylorComplex};

pub type QPolynomial = Polynomial<Rational>;
pub type QPolyRing = PolyRing<Rational>;
pub type QTaylorComplex = TaylorComplex<Rational>;
pub type QCompleteIntersection = CompleteIntersectionData<Rational>;
pub type QHomotopySystem = HomotopySystem<Rational>;
pub type QShamashResolution = ShamashResolution<Rational>;

pub type GfPolynomial = Polynomial<Gf32003>;
pub type GfPolyRing = PolyRing<Gf32003>;
pub type GfHomotopySystem = HomotopySystem<Gf32003>;
pub type GfShamashResolution = ShamashResolution<Gf32003>;
