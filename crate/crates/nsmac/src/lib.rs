//! Exact computation of nonsymmetric Macdonald polynomials by walking the
//! Yang-Baxter graph, with factored denominator tracking along paths, jump
//! operators with divisor bounds, and specialization at roots of unity
//! `q^a t^b = 1`.
//!
//! The crate is organized around a few layers:
//!
//! - [`qtpoly`], [`fraction`], [`factored`]: exact sparse arithmetic for
//!   bivariate polynomials in (q, t), their reduced fractions, and the
//!   `c q^e t^f prod (1 - q^a t^b)^m` factored forms.
//! - [`macpoly`], [`hecke`], [`spectral`]: polynomials in `x_1..x_N`, the
//!   right-acting Demazure-Lusztig / Cherednik-Dunkl operator kernels, and
//!   spectral vectors.
//! - [`graph`], [`denom`], [`jumps`]: the Yang-Baxter graph walker with its
//!   memo, denominator certificates along paths, and closed-form jump
//!   operators.
//! - [`staircase`], [`specialize`], [`cyclo`]: staircase climbs with the
//!   pole-absence verifier, and exact specialization at `q^a t^b = 1` over
//!   cyclotomic extensions.

pub mod cyclo;
pub mod denom;
pub mod error;
pub mod factored;
pub mod fraction;
pub mod graph;
pub mod hecke;
pub mod jumps;
pub mod macpoly;
pub mod numer;
pub mod qtpoly;
pub mod specialize;
pub mod spectral;
pub mod staircase;

pub use error::{Error, Result};
pub use factored::{divides_spec, factor_qt, FactoredQt};
pub use fraction::QtFraction;
pub use graph::{canonical_path, cmp_dominance, cmp_triangle, Composition, MacEngine, Path, PathStep};
pub use macpoly::MacPoly;
pub use qtpoly::QtPoly;
