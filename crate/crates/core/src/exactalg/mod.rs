//! Exact arithmetic substrate: rationals, bivariate polynomials in the chart coordinates
//! `(z1, z2)`, rational functions, 2×2 matrices over them, and small linear-algebra helpers.

pub mod linalg;
pub mod mat;
pub mod poly;
pub mod rat;
pub mod ratfn;
pub mod ring;
pub mod univariate;

pub use mat::{commutator2, conjugate2, det2, ConstMat2, Mat2, PolyMat2, RatMat2};
pub use poly::{chart_involution, BiPoly};
pub use rat::{parse_rat, rat, ratio, Rat};
pub use ratfn::{Laurent, RatFn};
pub use ring::Ring;
pub use univariate::UniPoly;
