//! Exact arithmetic for the quantum divided power algebra and its operator calculus.
//!
//! Everything here is computed over exact scalars: rational functions in `q`
//! with rational coefficients when `q` is generic, or elements of the
//! cyclotomic quotient `Q[q]/Phi_m(q)` when `q` is a primitive `m`-th root of
//! unity. No floating point anywhere.
//!
//! Module map:
//! - [`qarith`] — Laurent polynomials, rational functions, cyclotomic
//!   arithmetic, q-integers/factorials/binomials, `char(q)`, and the
//!   root-of-unity digit factorization of q-binomials.
//! - [`lattice`] — multi-indices in `Z^n`, the `*` pairing, the bicharacter
//!   `theta`, and the weight inner product.
//! - [`galg`] — elements and multiplication of the divided power algebra
//!   `A_q(n)`, its restricted truncation `A_q(n,1)`, and the exterior
//!   algebra `Lambda_q(n)`.
//! - [`ops`] — the primitive operators `sigma_i`, `del_i`, `Theta(alpha)`,
//!   multiplication operators, operator expressions, and twisted-derivation
//!   checking.
//! - [`weyl`] — the quantum Weyl algebra `W_q(2n)`: normal ordering of
//!   operator words and multiplication of normal forms.
//! - [`hopf`] — the braided Hopf structure on `A_q` and Hopf-axiom
//!   verification for the operator quantum groups.
//! - [`uq`] — the operator realization of `U_q(sl_n)` / `U_q(gl_n)`, root
//!   vectors, q-brackets, and the braid-recursion identification.
//! - [`repn`] — exact linear algebra over scalars, graded components,
//!   highest weight vectors, and module decompositions.
//! - [`suites`] — the law-by-law verification suites behind `verify`.

pub mod error;
pub mod galg;
pub mod hopf;
pub mod ops;
pub mod weyl;
pub mod lattice;
pub mod qarith;
pub mod repn;
pub mod suites;
pub mod uq;

pub use error::Error;
pub use galg::{AlgebraKind, Element};
pub use ops::{OpExpr, PrimOp};
pub use weyl::{WeylElement, WeylVariant};
pub use lattice::MultiIndex;
pub use qarith::{LaurentPoly, Scalar, ScalarField};
