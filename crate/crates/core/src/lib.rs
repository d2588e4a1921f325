//! Combinatorics of socles of Verma-module quotients in type A.
//!
//! The crate works entirely with the combinatorial shadows of the
//! representation theory: permutations of `S_n`, Kazhdan-Lusztig
//! polynomials, the penultimate two-sided cell `J` (the cell of
//! Robinson-Schensted shape `(2,1^{n-2})`), bigrassmannian permutations and
//! Fulton essential sets.
//!
//! Module map:
//!
//! * [`perm`] - permutations, descents, reduced words, Bruhat order, RS shape
//! * [`laurent`] - exact integer Laurent polynomials in `v`
//! * [`hecke`] - the Hecke algebra in the standard basis and a brute-force
//!   Kazhdan-Lusztig basis used as an oracle
//! * [`cells`] - the penultimate cell, its `(i, j)` indexing and closed-form
//!   KL polynomials `p_{e, w_{i,j}}`
//! * [`bigrass`] - bigrassmannian permutations, the `b(i, j, k)`
//!   parameterization, fibers and Bruhat-maximal elements
//! * [`fulton`] - rank and co-rank tables, diagrams, essential sets
//! * [`homology`] - graded socles, `J`-subquotients and `Ext^1` dimensions
//! * [`tetrahedron`] - the tetrahedral point/edge arrangement and its
//!   JSON, TikZ and SVG renderings
//! * [`verify`] - self-check suites run by the `socle verify` command

pub mod bigrass;
pub mod cells;
pub mod error;
pub mod fulton;
pub mod hecke;
pub mod homology;
pub mod laurent;
pub mod perm;
pub mod tetrahedron;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use perm::{Permutation, Side, YoungShape};
