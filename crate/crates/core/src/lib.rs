//! Exact enumeration of maps (graphs embedded in orientable surfaces) via the
//! permutation-pair encoding, together with the planar-limit generating
//! functions of the Hermitian one-matrix model.
//!
//! The crate is organised around two independent routes to the same numbers:
//!
//! * [`oracle`] — ground truth by brute force: exhaustive enumeration of
//!   labelled combinatorial maps and of Wick pairings, with exact rational
//!   bookkeeping of the `N`-exponent (Euler characteristic) of every diagram.
//! * [`solver`] — the planar closed forms: the `R`/`S` fixed-point system,
//!   the rooted-map generating function, the Tutte resolvent recursion with
//!   its master-equation residual check, the tetravalent/trivalent/Eulerian
//!   families, and the distance-refined two-point recursion.
//!
//! [`combmap`] holds the permutation-pair encoding itself, [`series`] the
//! exact formal-power-series arithmetic both routes run on, and
//! [`bijections`] the blossom-tree and well-labeled-tree constructions that
//! explain the solver's equations combinatorially. [`verify`] cross-checks
//! every closed form against the oracle.
//!
//! All arithmetic is exact (arbitrary-precision rationals); there is no
//! floating point anywhere in the crate.

pub mod bijections;
pub mod combmap;
pub mod oracle;
pub mod series;
pub mod solver;
pub mod verify;

pub use combmap::{CombMap, DegreeProfile, MapError, MapInvariants, Permutation};
pub use series::{GenusSeries, Monomial, Rat, SeriesError, TSeries, WPolynomial};
