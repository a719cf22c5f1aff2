//! The permutation-pair encoding of maps.
//!
//! A map (graph cellularly embedded in a compact orientable surface) with
//! labelled half-edges is the same thing as a pair of permutations
//! `(sigma, alpha)` of the labels `{1, ..., 2m}` such that `alpha` is an
//! involution without fixed point (property A) and the group generated by
//! the pair acts transitively (property B, connectedness). Cycles of `sigma`
//! are vertices, cycles of `alpha` edges, cycles of `sigma . alpha` faces,
//! and the Euler characteristic is
//!
//! ```text
//! chi = c(sigma) - c(alpha) + c(sigma . alpha) = 2 - 2 genus.
//! ```
//!
//! All types here are immutable values after construction and all operations
//! are pure functions.

mod canonical;
mod perm;

pub use canonical::CanonicalCode;
pub use perm::Permutation;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Errors from map construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    /// An image sequence that is not a bijection of `{1, ..., p}`.
    #[error("image {image} is not valid exactly once in a permutation of {{1..{size}}}")]
    NotABijection { image: usize, size: usize },
    /// Two permutations on different ground sets.
    #[error("permutations act on different ground sets ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    /// The ground set of a map must have even size.
    #[error("half-edge count {0} is odd")]
    InvalidSize(usize),
    /// Property A: `alpha` must be an involution without fixed point.
    #[error("alpha is not a fixed-point-free involution")]
    ViolatesA,
    /// Property B: `sigma` and `alpha` must generate a transitive group.
    #[error("(sigma, alpha) does not act transitively: the map is disconnected")]
    ViolatesB,
    /// A vertex id out of range for this map.
    #[error("unknown vertex id {id}: map has {vertices} vertices")]
    UnknownVertex { id: usize, vertices: usize },
}

/// A labelled combinatorial map: a validated pair `(sigma, alpha)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CombMap {
    sigma: Permutation,
    alpha: Permutation,
}

/// Vertex/edge/face counts and the derived topology of a map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapInvariants {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub chi: i64,
    pub genus: usize,
}

/// Multiset of degrees: `counts[n]` vertices (or faces) of degree `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeProfile {
    counts: BTreeMap<usize, usize>,
}

/// Which cycle family a degree profile is read from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileKind {
    Vertex,
    Face,
}

impl DegreeProfile {
    pub fn new() -> Self {
        DegreeProfile::default()
    }

    pub fn from_counts<I: IntoIterator<Item = (usize, usize)>>(counts: I) -> Self {
        let mut p = DegreeProfile::new();
        for (degree, count) in counts {
            p.add(degree, count);
        }
        p
    }

    /// Profile of the cycle lengths of a permutation.
    pub fn from_cycle_lengths(perm: &Permutation) -> Self {
        let mut p = DegreeProfile::new();
        for cycle in perm.cycles() {
            p.add(cycle.len(), 1);
        }
        p
    }

    pub fn add(&mut self, degree: usize, count: usize) {
        if count > 0 {
            *self.counts.entry(degree).or_insert(0) += count;
        }
    }

    pub fn count(&self, degree: usize) -> usize {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&n, &k)| (n, k))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `sum_n n * k_n`, the number of half-edges of a map with this vertex
    /// profile.
    pub fn half_edges(&self) -> usize {
        self.iter().map(|(n, k)| n * k).sum()
    }

    /// Total number of vertices, `sum_n k_n`.
    pub fn total_count(&self) -> usize {
        self.iter().map(|(_, k)| k).sum()
    }
}

impl fmt::Display for DegreeProfile {
    /// `degree:count` pairs, e.g. `{1:2, 3:1}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (n, k)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}:{k}")?;
        }
        write!(f, "}}")
    }
}

impl CombMap {
    /// Validate `(sigma, alpha)` as a labelled combinatorial map.
    ///
    /// Property A is checked directly on `alpha`; property B by closing the
    /// orbit of label 1 under both generators.
    pub fn new(sigma: Permutation, alpha: Permutation) -> Result<Self, MapError> {
        if sigma.size() != alpha.size() {
            return Err(MapError::SizeMismatch {
                left: sigma.size(),
                right: alpha.size(),
            });
        }
        let p = sigma.size();
        if p % 2 != 0 || p == 0 {
            return Err(MapError::InvalidSize(p));
        }
        if !alpha.is_fixed_point_free_involution() {
            return Err(MapError::ViolatesA);
        }
        if !is_transitive(&sigma, &alpha) {
            return Err(MapError::ViolatesB);
        }
        Ok(CombMap { sigma, alpha })
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    /// Number of half-edges, `2m`.
    pub fn half_edges(&self) -> usize {
        self.sigma.size()
    }

    /// Number of edges, `m`.
    pub fn edge_count(&self) -> usize {
        self.sigma.size() / 2
    }

    /// The face permutation `sigma . alpha`.
    pub fn phi(&self) -> Permutation {
        self.sigma
            .compose(&self.alpha)
            .expect("sigma and alpha share a ground set")
    }

    /// Cycle counts, Euler characteristic and genus.
    ///
    /// For a valid map `chi` is always even and the genus nonnegative; an odd
    /// `chi` can only come from corrupted state and panics.
    pub fn invariants(&self) -> MapInvariants {
        let vertices = self.sigma.cycle_count();
        let edges = self.edge_count();
        let faces = self.phi().cycle_count();
        let chi = vertices as i64 - edges as i64 + faces as i64;
        assert!(
            chi % 2 == 0 && chi <= 2,
            "Euler characteristic {chi} is impossible for a connected map"
        );
        MapInvariants {
            vertices,
            edges,
            faces,
            chi,
            genus: ((2 - chi) / 2) as usize,
        }
    }

    pub fn genus(&self) -> usize {
        self.invariants().genus
    }

    /// The dual map `(sigma . alpha, alpha)`: vertices and faces exchange
    /// roles, the genus is preserved.
    pub fn dual(&self) -> CombMap {
        CombMap::new(self.phi(), self.alpha.clone())
            .expect("dual of a valid map is valid")
    }

    /// Multiset of vertex (cycles of `sigma`) or face (cycles of
    /// `sigma . alpha`) degrees.
    pub fn degree_profile(&self, kind: ProfileKind) -> DegreeProfile {
        match kind {
            ProfileKind::Vertex => DegreeProfile::from_cycle_lengths(&self.sigma),
            ProfileKind::Face => DegreeProfile::from_cycle_lengths(&self.phi()),
        }
    }

    /// Relabel by `rho`: `(rho sigma rho^{-1}, rho alpha rho^{-1})`.
    pub fn relabel(&self, rho: &Permutation) -> Result<CombMap, MapError> {
        let sigma = self.sigma.conjugate(rho)?;
        let alpha = self.alpha.conjugate(rho)?;
        CombMap::new(sigma, alpha)
    }

    /// Order of the automorphism group: the number of permutations `rho`
    /// commuting with both `sigma` and `alpha`.
    ///
    /// An automorphism of a connected pair is determined by the image of one
    /// half-edge, so instead of sweeping all `(2m)!` candidates we try each
    /// of the `2m` images of label 1 and propagate along words in `sigma`
    /// and `alpha`, at total cost `O((2m)^2)`.
    pub fn automorphism_count(&self) -> usize {
        let p = self.half_edges();
        let mut count = 0;
        let mut rho = vec![0usize; p + 1];
        let mut stack = Vec::with_capacity(p);
        'candidates: for target in 1..=p {
            rho.iter_mut().for_each(|x| *x = 0);
            rho[1] = target;
            stack.clear();
            stack.push(1);
            let mut assigned = 1;
            while let Some(x) = stack.pop() {
                for gen in [&self.sigma, &self.alpha] {
                    let y = gen.apply(x);
                    let want = gen.apply(rho[x]);
                    if rho[y] == 0 {
                        rho[y] = want;
                        assigned += 1;
                        stack.push(y);
                    } else if rho[y] != want {
                        continue 'candidates;
                    }
                }
            }
            debug_assert_eq!(assigned, p, "transitive action reaches every label");
            // propagation closed consistently; check rho is a bijection
            let mut seen = vec![false; p + 1];
            if rho[1..].iter().all(|&v| {
                let fresh = !seen[v];
                seen[v] = true;
                fresh
            }) {
                count += 1;
            }
        }
        count
    }

    /// Canonical representative of the relabelling class.
    ///
    /// Two maps are isomorphic (equal up to relabelling) iff their canonical
    /// codes are equal.
    pub fn canonical_code(&self) -> CanonicalCode {
        canonical::canonical_code(self)
    }

    /// Vertices as sorted cycles of `sigma`; the vertex id of a cycle is its
    /// rank when cycles are ordered by minimal half-edge label (the order
    /// `Permutation::cycles` already produces).
    pub fn vertex_cycles(&self) -> Vec<Vec<usize>> {
        self.sigma.cycles()
    }

    /// BFS distance between two vertices in the underlying graph (vertices
    /// are `sigma`-cycles, edges are `alpha`-pairs). Ids index
    /// `vertex_cycles()`.
    pub fn graph_distance(&self, v_a: usize, v_b: usize) -> Result<usize, MapError> {
        let cycles = self.vertex_cycles();
        let n = cycles.len();
        let check = |id: usize| {
            if id >= n {
                Err(MapError::UnknownVertex { id, vertices: n })
            } else {
                Ok(())
            }
        };
        check(v_a)?;
        check(v_b)?;
        if v_a == v_b {
            return Ok(0);
        }
        // vertex id of each half-edge
        let p = self.half_edges();
        let mut vertex_of = vec![0usize; p + 1];
        for (id, cycle) in cycles.iter().enumerate() {
            for &h in cycle {
                vertex_of[h] = id;
            }
        }
        let mut dist = vec![usize::MAX; n];
        dist[v_a] = 0;
        let mut queue = std::collections::VecDeque::from([v_a]);
        while let Some(u) = queue.pop_front() {
            for &h in &cycles[u] {
                let w = vertex_of[self.alpha.apply(h)];
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    if w == v_b {
                        return Ok(dist[w]);
                    }
                    queue.push_back(w);
                }
            }
        }
        unreachable!("maps are connected, every vertex is reachable")
    }
}

impl fmt::Display for CombMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma={} alpha={}", self.sigma, self.alpha)
    }
}

/// Orbit closure of label 1 under `sigma` and `alpha` covers everything?
fn is_transitive(sigma: &Permutation, alpha: &Permutation) -> bool {
    let p = sigma.size();
    if p == 0 {
        return false;
    }
    let mut seen = vec![false; p + 1];
    let mut stack = vec![1usize];
    seen[1] = true;
    let mut visited = 1;
    while let Some(x) = stack.pop() {
        for y in [sigma.apply(x), alpha.apply(x)] {
            if !seen[y] {
                seen[y] = true;
                visited += 1;
                stack.push(y);
            }
        }
    }
    visited == p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(p: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(p, cycles).unwrap()
    }

    /// The planar example map on 10 half-edges:
    /// sigma = (1 2)(3 4 5)(6 7 8 9)(10), alpha = (1 3)(2 7)(4 6)(5 9)(8 10).
    pub(crate) fn example_map() -> CombMap {
        let sigma = perm(10, &[&[1, 2], &[3, 4, 5], &[6, 7, 8, 9]]);
        let alpha = perm(10, &[&[1, 3], &[2, 7], &[4, 6], &[5, 9], &[8, 10]]);
        CombMap::new(sigma, alpha).unwrap()
    }

    /// One vertex, one loop: sigma = (1 2), alpha = (1 2).
    pub(crate) fn loop_map() -> CombMap {
        CombMap::new(perm(2, &[&[1, 2]]), perm(2, &[&[1, 2]])).unwrap()
    }

    /// Two degree-1 vertices joined by an edge: sigma = id, alpha = (1 2).
    pub(crate) fn path_map() -> CombMap {
        CombMap::new(Permutation::identity(2), perm(2, &[&[1, 2]])).unwrap()
    }

    /// sigma = (1 2 3 4), alpha = (1 3)(2 4): one vertex, one face, genus 1.
    pub(crate) fn torus_map() -> CombMap {
        CombMap::new(perm(4, &[&[1, 2, 3, 4]]), perm(4, &[&[1, 3], &[2, 4]])).unwrap()
    }

    #[test]
    fn validation_catches_broken_pairs() {
        // alpha with a fixed point
        let err = CombMap::new(perm(2, &[&[1, 2]]), Permutation::identity(2));
        assert_eq!(err.unwrap_err(), MapError::ViolatesA);
        // alpha not an involution is impossible for p=2; use a 4-cycle on 4
        let err = CombMap::new(Permutation::identity(4), perm(4, &[&[1, 2, 3, 4]]));
        assert_eq!(err.unwrap_err(), MapError::ViolatesA);
        // two components
        let err = CombMap::new(
            Permutation::identity(4),
            perm(4, &[&[1, 2], &[3, 4]]),
        );
        assert_eq!(err.unwrap_err(), MapError::ViolatesB);
        // odd ground set
        let err = CombMap::new(Permutation::identity(3), perm(3, &[&[1, 2, 3]]));
        assert_eq!(err.unwrap_err(), MapError::InvalidSize(3));
        // mismatched ground sets
        let err = CombMap::new(Permutation::identity(2), perm(4, &[&[1, 2], &[3, 4]]));
        assert_eq!(err.unwrap_err(), MapError::SizeMismatch { left: 2, right: 4 });
    }

    #[test]
    fn example_map_topology() {
        let map = example_map();
        let inv = map.invariants();
        assert_eq!(inv.vertices, 4);
        assert_eq!(inv.edges, 5);
        assert_eq!(inv.faces, 3);
        assert_eq!(inv.chi, 2);
        assert_eq!(inv.genus, 0);
        assert_eq!(
            map.degree_profile(ProfileKind::Vertex),
            DegreeProfile::from_counts([(1, 1), (2, 1), (3, 1), (4, 1)])
        );
    }

    #[test]
    fn small_map_topology() {
        let inv = loop_map().invariants();
        assert_eq!((inv.vertices, inv.faces, inv.chi, inv.genus), (1, 2, 2, 0));
        assert_eq!(
            loop_map().degree_profile(ProfileKind::Vertex),
            DegreeProfile::from_counts([(2, 1)])
        );
        assert_eq!(
            loop_map().degree_profile(ProfileKind::Face),
            DegreeProfile::from_counts([(1, 2)])
        );
        assert_eq!(
            path_map().degree_profile(ProfileKind::Vertex),
            DegreeProfile::from_counts([(1, 2)])
        );

        let inv = torus_map().invariants();
        assert_eq!((inv.vertices, inv.faces, inv.chi, inv.genus), (1, 1, 0, 1));
    }

    #[test]
    fn dual_swaps_profiles() {
        let map = example_map();
        let dual = map.dual();
        assert_eq!(
            dual.degree_profile(ProfileKind::Vertex),
            map.degree_profile(ProfileKind::Face)
        );
        assert_eq!(dual.genus(), map.genus());
        // dual of the loop map is the path map (up to nothing: exactly)
        let d = loop_map().dual();
        assert!(d.sigma().is_identity());
        assert_eq!(d, path_map());
    }

    #[test]
    fn automorphism_counts_match_brute_force() {
        // brute force over all rho in S_p
        fn brute(map: &CombMap) -> usize {
            let p = map.half_edges();
            let mut count = 0;
            let mut images: Vec<usize> = (1..=p).collect();
            loop {
                let rho = Permutation::from_images(images.clone()).unwrap();
                let fixes = map.sigma().conjugate(&rho).unwrap() == *map.sigma()
                    && map.alpha().conjugate(&rho).unwrap() == *map.alpha();
                if fixes {
                    count += 1;
                }
                if !crate::oracle::next_permutation(&mut images) {
                    break;
                }
            }
            count
        }

        for (map, expect) in [(loop_map(), 2), (path_map(), 2), (torus_map(), 4)] {
            assert_eq!(map.automorphism_count(), expect);
            assert_eq!(brute(&map), expect);
        }
        assert_eq!(brute(&example_map()), example_map().automorphism_count());
    }

    #[test]
    fn graph_distances() {
        assert_eq!(loop_map().graph_distance(0, 0).unwrap(), 0);
        assert_eq!(path_map().graph_distance(0, 1).unwrap(), 1);
        assert_eq!(
            path_map().graph_distance(0, 2),
            Err(MapError::UnknownVertex { id: 2, vertices: 2 })
        );
        // the loop map's two faces share an edge, so as vertices of the dual
        // they sit at distance 1
        let d = loop_map().dual();
        assert_eq!(d.graph_distance(0, 1).unwrap(), 1);
        // the torus map has a single face: its dual has one vertex
        let d = torus_map().dual();
        assert_eq!(d.vertex_cycles().len(), 1);
        assert_eq!(d.graph_distance(0, 0).unwrap(), 0);

        let map = example_map();
        // vertex 0 = {1,2}, vertex 3 = {10}: 1-3 links v0-v1, path via 8-10
        assert_eq!(map.graph_distance(0, 3).unwrap(), 2);
        assert_eq!(map.graph_distance(3, 0).unwrap(), 2);
    }
}
