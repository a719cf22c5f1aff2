//! Ground truth by brute force.
//!
//! Everything here is an exhaustive sum: over labelled combinatorial maps
//! (pairs of permutations), or over Wick pairings (fixed-point-free
//! involutions). The results — free energies by genus, rooted counts,
//! partition-function coefficients, symmetry censuses — are the oracle every
//! closed form in [`crate::solver`] and [`crate::bijections`] is tested
//! against.
//!
//! Enumeration fixes the edge involution to `alpha_0 = (1 2)(3 4)...` and
//! sweeps `sigma` over all of `S_2m`; every statistic summed here is
//! invariant under simultaneous conjugation, so the missing `alpha` choices
//! contribute a plain multiplicity of `(2m-1)!!`. The shortcut itself is
//! validated against the explicit sweep over all `(sigma, alpha)` pairs at
//! small sizes.

mod census;
mod enumerate;
mod free_energy;
mod wick;
mod xi;

pub use census::{symmetry_census, CensusClass};
pub use enumerate::{
    enumerate_all_pairs, enumerate_maps, fixed_alpha_multiplicity, next_permutation,
    reference_involution, MapFilter, MapStream, Survey,
};
pub use free_energy::{
    labelled_free_energy, marked_leg_pair_series, marked_leg_face_series, rooted_counts,
};
pub use wick::{partition_coefficient, wick_cycle_expectation, NGradedValue, WICK_MAX_HALF_EDGES};
pub use xi::{xi_from_free_energy, xi_profile_coefficient, NSeries};

use thiserror::Error;

use crate::combmap::{DegreeProfile, Permutation};
use crate::series::Monomial;

/// Absolute ceiling on the number of edges any exhaustive sweep accepts.
/// `2m = 12` half-edges means `12! ~ 4.8e8` permutations, minutes of work
/// with parallel partitioning; beyond that exhaustion is hopeless.
pub const HARD_MAX_EDGES: usize = 6;

/// Errors from oracle operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    /// Request beyond the configured enumeration cap.
    #[error("{what} with {requested} edges exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
}

/// Enumeration budget. The default soft cap of 5 edges keeps every sweep
/// under a second; callers may raise it up to [`HARD_MAX_EDGES`].
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    max_edges: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_edges: 5 }
    }
}

impl OracleConfig {
    pub fn new(max_edges: usize) -> Result<Self, OracleError> {
        if max_edges > HARD_MAX_EDGES {
            return Err(OracleError::TooLarge {
                what: "configuring enumeration",
                requested: max_edges,
                cap: HARD_MAX_EDGES,
            });
        }
        Ok(OracleConfig { max_edges })
    }

    pub fn max_edges(&self) -> usize {
        self.max_edges
    }

    fn check(&self, what: &'static str, m: usize) -> Result<(), OracleError> {
        if m > self.max_edges {
            Err(OracleError::TooLarge {
                what,
                requested: m,
                cap: self.max_edges,
            })
        } else {
            Ok(())
        }
    }
}

/// Multiset of cycle lengths of a permutation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Build from a list of parts (sorted internally).
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&l| l > 0), "cycle lengths are positive");
        parts.sort_unstable();
        CycleType { parts }
    }

    pub fn of(perm: &Permutation) -> Self {
        CycleType::new(perm.cycles().into_iter().map(|c| c.len()).collect())
    }

    pub fn from_profile(profile: &DegreeProfile) -> Self {
        let mut parts = Vec::new();
        for (n, k) in profile.iter() {
            parts.extend(std::iter::repeat(n).take(k));
        }
        CycleType::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts: the size of the ground set.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts equal to `n` (`c_n` of the permutation).
    pub fn multiplicity(&self, n: usize) -> usize {
        self.parts.iter().filter(|&&l| l == n).count()
    }

    pub fn to_profile(&self) -> DegreeProfile {
        let mut p = DegreeProfile::new();
        for &l in &self.parts {
            p.add(l, 1);
        }
        p
    }

    /// The weight monomial `prod v_(cycle length)`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_exponents(self.parts.iter().map(|&l| (l, 1)).collect::<Vec<_>>())
    }

    /// A concrete permutation of this type: consecutive blocks
    /// `(1 .. l_1)(l_1+1 .. l_1+l_2)...`.
    pub fn representative(&self) -> Permutation {
        let p = self.total();
        let mut images: Vec<usize> = (1..=p).collect();
        let mut base = 0;
        for &l in &self.parts {
            for k in 0..l {
                images[base + k] = base + 1 + (k + 1) % l;
            }
            base += l;
        }
        Permutation::from_images(images).expect("block permutation is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_type_round_trip() {
        let ct = CycleType::new(vec![3, 1, 2]);
        assert_eq!(ct.parts(), &[1, 2, 3]);
        assert_eq!(ct.total(), 6);
        let rep = ct.representative();
        assert_eq!(CycleType::of(&rep), ct);
        assert_eq!(rep.to_string(), "(1)(2 3)(4 5 6)");
        assert_eq!(ct.multiplicity(2), 1);
        assert_eq!(ct.multiplicity(5), 0);
    }

    #[test]
    fn config_caps() {
        assert!(OracleConfig::new(7).is_err());
        let cfg = OracleConfig::new(6).unwrap();
        assert!(cfg.check("test", 6).is_ok());
        assert_eq!(
            OracleConfig::default().check("test", 6),
            Err(OracleError::TooLarge {
                what: "test",
                requested: 6,
                cap: 5
            })
        );
    }
}
