//! Canonical relabelling of maps.

use std::fmt;

use super::{CombMap, Permutation};

/// A canonical representative of a relabelling class.
///
/// Maps are isomorphic iff their codes compare equal, so the code doubles as
/// a hashable key for grouping. The representative is itself a valid
/// `(sigma, alpha)` pair and can be turned back into a map.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    sigma: Vec<usize>,
    alpha: Vec<usize>,
}

impl CanonicalCode {
    pub fn sigma_images(&self) -> &[usize] {
        &self.sigma
    }

    pub fn alpha_images(&self) -> &[usize] {
        &self.alpha
    }

    /// The canonical representative as a map.
    pub fn to_map(&self) -> CombMap {
        let sigma = Permutation::from_images(self.sigma.clone()).expect("canonical sigma");
        let alpha = Permutation::from_images(self.alpha.clone()).expect("canonical alpha");
        CombMap::new(sigma, alpha).expect("canonical representative is a valid map")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let map = self.to_map();
        write!(f, "sigma={} alpha={}", map.sigma(), map.alpha())
    }
}

/// Minimal relabelling over all starting half-edges.
///
/// For each start label `s`, relabel the map by the order in which a
/// breadth-first traversal alternating `sigma` and `alpha` steps discovers
/// half-edges (the start gets label 1, and from each dequeued label we visit
/// its `sigma`-image then its `alpha`-image). Transitivity guarantees the
/// traversal reaches everything. Relabelling a map permutes the start
/// choices but yields the same set of candidate codes, so the
/// lexicographically least `(sigma, alpha)` image pair is a class invariant.
pub(super) fn canonical_code(map: &CombMap) -> CanonicalCode {
    let p = map.half_edges();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut relabel = vec![0usize; p + 1];
    let mut queue = std::collections::VecDeque::with_capacity(p);
    for start in 1..=p {
        relabel.iter_mut().for_each(|x| *x = 0);
        relabel[start] = 1;
        let mut next_label = 2;
        queue.clear();
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for gen in [map.sigma(), map.alpha()] {
                let y = gen.apply(x);
                if relabel[y] == 0 {
                    relabel[y] = next_label;
                    next_label += 1;
                    queue.push_back(y);
                }
            }
        }
        debug_assert_eq!(next_label, p + 1);
        // conjugated images: new_sigma(relabel[i]) = relabel[sigma(i)]
        let mut sigma = vec![0usize; p];
        let mut alpha = vec![0usize; p];
        for i in 1..=p {
            sigma[relabel[i] - 1] = relabel[map.sigma().apply(i)];
            alpha[relabel[i] - 1] = relabel[map.alpha().apply(i)];
        }
        let cand = (sigma, alpha);
        if best.as_ref().map_or(true, |b| cand < *b) {
            best = Some(cand);
        }
    }
    let (sigma, alpha) = best.expect("maps are nonempty");
    CanonicalCode { sigma, alpha }
}
