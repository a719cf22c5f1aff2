//! Exhaustive sweeps over labelled combinatorial maps.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{CycleType, OracleConfig, OracleError};
use crate::combmap::{CombMap, DegreeProfile, Permutation};

/// Lexicographic successor of a permutation of distinct values, in place.
/// Returns `false` once the sequence is the last (descending) one.
pub fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// The fixed edge involution `alpha_0 = (1 2)(3 4)...(2m-1 2m)`.
pub fn reference_involution(m: usize) -> Permutation {
    let images = (0..2 * m).map(|i| (i ^ 1) + 1).collect();
    Permutation::from_images(images).expect("alpha_0 is a bijection")
}

/// `(2m-1)!!`, the number of edge involutions a fixed-`alpha` sweep stands
/// in for.
pub fn fixed_alpha_multiplicity(m: usize) -> u64 {
    let mut acc: u64 = 1;
    let mut k = 2 * m as u64;
    while k > 1 {
        acc *= k - 1;
        k -= 2;
    }
    acc
}

/// Restriction of an enumeration to maps of a given genus and/or vertex
/// degree profile.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MapFilter {
    pub genus: Option<usize>,
    pub vertex_profile: Option<DegreeProfile>,
}

impl MapFilter {
    pub fn genus(g: usize) -> Self {
        MapFilter {
            genus: Some(g),
            ..MapFilter::default()
        }
    }

    pub fn admits(&self, genus: usize, vertex_type: &CycleType) -> bool {
        if let Some(g) = self.genus {
            if g != genus {
                return false;
            }
        }
        if let Some(profile) = &self.vertex_profile {
            if CycleType::from_profile(profile) != *vertex_type {
                return false;
            }
        }
        true
    }
}

/// Labelled counts from one sweep with `alpha` fixed to `alpha_0`, keyed by
/// `(genus, vertex cycle type)`. Multiply by [`fixed_alpha_multiplicity`] to
/// get counts over all `(sigma, alpha)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Survey {
    pub edges: usize,
    pub counts: BTreeMap<(usize, CycleType), u64>,
}

impl Survey {
    fn merge(mut self, other: Survey) -> Survey {
        for (key, count) in other.counts {
            *self.counts.entry(key).or_insert(0) += count;
        }
        self
    }

    /// Total number of maps recorded (fixed-`alpha` count).
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Scratch space and the classification kernel shared by all sweeps.
///
/// Everything works on 0-based image arrays (`sigma[i]` is the image of
/// point `i`), with `alpha_0(i) = i ^ 1`.
struct Classifier {
    p: usize,
    seen: Vec<bool>,
    stack: Vec<usize>,
    lengths: Vec<usize>,
}

impl Classifier {
    fn new(p: usize) -> Self {
        Classifier {
            p,
            seen: vec![false; p],
            stack: Vec::with_capacity(p),
            lengths: Vec::with_capacity(p),
        }
    }

    /// Transitivity of `(sigma, alpha_0)` via orbit closure of point 0.
    fn is_transitive(&mut self, sigma: &[usize]) -> bool {
        self.seen.iter_mut().for_each(|s| *s = false);
        self.stack.clear();
        self.seen[0] = true;
        self.stack.push(0);
        let mut visited = 1;
        while let Some(x) = self.stack.pop() {
            for y in [sigma[x], x ^ 1] {
                if !self.seen[y] {
                    self.seen[y] = true;
                    visited += 1;
                    self.stack.push(y);
                }
            }
        }
        visited == self.p
    }

    /// Cycle lengths of `f` given as an image array, into `self.lengths`.
    fn cycle_lengths(&mut self, f: impl Fn(usize) -> usize) {
        self.seen.iter_mut().for_each(|s| *s = false);
        self.lengths.clear();
        for start in 0..self.p {
            if self.seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !self.seen[x] {
                self.seen[x] = true;
                len += 1;
                x = f(x);
            }
            self.lengths.push(len);
        }
    }

    /// Genus and vertex cycle type of a transitive `sigma`, or `None` when
    /// the pair is disconnected.
    fn classify(&mut self, sigma: &[usize]) -> Option<(usize, CycleType)> {
        if !self.is_transitive(sigma) {
            return None;
        }
        self.cycle_lengths(|x| sigma[x]);
        let vertex_type = CycleType::new(self.lengths.clone());
        let c_sigma = vertex_type.parts().len();
        // faces: cycles of sigma . alpha_0
        self.cycle_lengths(|x| sigma[x ^ 1]);
        let c_phi = self.lengths.len();
        let m = self.p / 2;
        let chi = c_sigma as i64 - m as i64 + c_phi as i64;
        debug_assert!(chi % 2 == 0 && chi <= 2);
        Some((((2 - chi) / 2) as usize, vertex_type))
    }
}

/// Run `visit` on every transitive 0-based `sigma` image array of `S_p` that
/// has the prescribed cycle type, where cycles are built starting from the
/// smallest free point so each permutation is produced exactly once.
fn for_each_of_cycle_type(
    parts: &CycleType,
    mut visit: impl FnMut(&[usize]),
) {
    let p = parts.total();
    let mut remaining: BTreeMap<usize, usize> = BTreeMap::new();
    for &l in parts.parts() {
        *remaining.entry(l).or_insert(0) += 1;
    }
    let mut sigma = vec![usize::MAX; p];
    let mut free: Vec<bool> = vec![true; p];

    fn rec(
        sigma: &mut Vec<usize>,
        free: &mut Vec<bool>,
        remaining: &mut BTreeMap<usize, usize>,
        assigned: usize,
        visit: &mut impl FnMut(&[usize]),
    ) {
        let p = sigma.len();
        if assigned == p {
            visit(sigma);
            return;
        }
        let start = free.iter().position(|&f| f).expect("free point exists");
        let lengths: Vec<usize> = remaining
            .iter()
            .filter(|&(_, &k)| k > 0)
            .map(|(&l, _)| l)
            .collect();
        for l in lengths {
            *remaining.get_mut(&l).unwrap() -= 1;
            free[start] = false;
            // choose the ordered remainder of the cycle
            fn extend(
                sigma: &mut Vec<usize>,
                free: &mut Vec<bool>,
                remaining: &mut BTreeMap<usize, usize>,
                assigned: usize,
                start: usize,
                prev: usize,
                left: usize,
                visit: &mut impl FnMut(&[usize]),
            ) {
                if left == 0 {
                    sigma[prev] = start;
                    rec(sigma, free, remaining, assigned, visit);
                    sigma[prev] = usize::MAX;
                    return;
                }
                for q in (start + 1)..sigma.len() {
                    if !free[q] {
                        continue;
                    }
                    free[q] = false;
                    sigma[prev] = q;
                    extend(sigma, free, remaining, assigned + 1, start, q, left - 1, visit);
                    sigma[prev] = usize::MAX;
                    free[q] = true;
                }
            }
            extend(sigma, free, remaining, assigned + 1, start, start, l - 1, visit);
            free[start] = true;
            *remaining.get_mut(&l).unwrap() += 1;
        }
    }

    rec(&mut sigma, &mut free, &mut remaining, 0, &mut visit);
}

/// One survey task: all permutations with the given first images, remaining
/// values swept in lexicographic order.
fn survey_prefix(p: usize, prefix: &[usize], filter: &MapFilter) -> Survey {
    let mut survey = Survey {
        edges: p / 2,
        counts: BTreeMap::new(),
    };
    let mut suffix: Vec<usize> = (0..p).filter(|v| !prefix.contains(v)).collect();
    let mut sigma = Vec::with_capacity(p);
    let mut classifier = Classifier::new(p);
    loop {
        sigma.clear();
        sigma.extend_from_slice(prefix);
        sigma.extend_from_slice(&suffix);
        if let Some((genus, vertex_type)) = classifier.classify(&sigma) {
            if filter.admits(genus, &vertex_type) {
                *survey.counts.entry((genus, vertex_type)).or_insert(0) += 1;
            }
        }
        if !next_permutation(&mut suffix) {
            return survey;
        }
    }
}

/// Exhaustive fixed-`alpha` survey of all labelled maps with `m` edges.
///
/// With a vertex-profile filter the sweep runs over permutations of that
/// cycle type only; otherwise it partitions `S_2m` by two-value prefixes and
/// fans the partitions out to worker threads. Sums of exact counts are
/// associative-commutative, so the result is deterministic regardless of
/// scheduling.
pub fn survey(m: usize, filter: &MapFilter, config: &OracleConfig) -> Result<Survey, OracleError> {
    config.check("enumerating maps", m)?;
    assert!(m >= 1, "maps need at least one edge");
    let p = 2 * m;

    if let Some(profile) = &filter.vertex_profile {
        let mut survey = Survey {
            edges: m,
            counts: BTreeMap::new(),
        };
        if profile.half_edges() != p {
            return Ok(survey);
        }
        let parts = CycleType::from_profile(profile);
        let mut classifier = Classifier::new(p);
        for_each_of_cycle_type(&parts, |sigma| {
            if let Some((genus, vertex_type)) = classifier.classify(sigma) {
                if filter.admits(genus, &vertex_type) {
                    *survey.counts.entry((genus, vertex_type)).or_insert(0) += 1;
                }
            }
        });
        return Ok(survey);
    }

    if p <= 6 {
        return Ok(survey_prefix(p, &[], filter));
    }
    let prefixes: Vec<Vec<usize>> = (0..p)
        .flat_map(|a| (0..p).filter(move |&b| b != a).map(move |b| vec![a, b]))
        .collect();
    Ok(prefixes
        .into_par_iter()
        .map(|prefix| survey_prefix(p, &prefix, filter))
        .reduce(
            || Survey {
                edges: m,
                counts: BTreeMap::new(),
            },
            Survey::merge,
        ))
}

/// Lazy stream over every labelled map with `m` edges and `alpha = alpha_0`,
/// each carrying the multiplicity `(2m-1)!!` of `alpha` choices it stands
/// for.
pub struct MapStream {
    m: usize,
    alpha: Permutation,
    filter: MapFilter,
    sigma: Vec<usize>,
    classifier: Classifier,
    done: bool,
}

impl Iterator for MapStream {
    type Item = (CombMap, u64);

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            let found = self
                .classifier
                .classify(&self.sigma)
                .filter(|(genus, vt)| self.filter.admits(*genus, vt))
                .is_some();
            let item = if found {
                let images = self.sigma.iter().map(|&v| v + 1).collect();
                let sigma = Permutation::from_images(images).expect("valid images");
                let map = CombMap::new(sigma, self.alpha.clone()).expect("classified map");
                Some((map, fixed_alpha_multiplicity(self.m)))
            } else {
                None
            };
            self.done = !next_permutation(&mut self.sigma);
            if item.is_some() {
                return item;
            }
        }
        None
    }
}

/// Stream every labelled map with `m` edges exactly once (fixed `alpha_0`,
/// multiplicity `(2m-1)!!` attached).
pub fn enumerate_maps(
    m: usize,
    filter: MapFilter,
    config: &OracleConfig,
) -> Result<MapStream, OracleError> {
    config.check("enumerating maps", m)?;
    assert!(m >= 1, "maps need at least one edge");
    Ok(MapStream {
        m,
        alpha: reference_involution(m),
        filter,
        sigma: (0..2 * m).collect(),
        classifier: Classifier::new(2 * m),
        done: false,
    })
}

/// Every labelled map as a literal `(sigma, alpha)` pair, with `alpha`
/// ranging over all fixed-point-free involutions. Validation mode for the
/// multiplicity shortcut; capped at 3 edges.
pub fn enumerate_all_pairs(m: usize) -> Result<Vec<CombMap>, OracleError> {
    const ALL_PAIRS_CAP: usize = 3;
    if m > ALL_PAIRS_CAP {
        return Err(OracleError::TooLarge {
            what: "enumerating explicit (sigma, alpha) pairs",
            requested: m,
            cap: ALL_PAIRS_CAP,
        });
    }
    assert!(m >= 1, "maps need at least one edge");
    let p = 2 * m;
    let mut involutions = Vec::new();
    all_matchings(p, &mut |pairs| {
        let mut images = vec![0usize; p];
        for &(a, b) in pairs {
            images[a] = b + 1;
            images[b] = a + 1;
        }
        involutions.push(Permutation::from_images(images).expect("matching"));
    });
    let mut maps = Vec::new();
    let mut sigma_images: Vec<usize> = (1..=p).collect();
    loop {
        let sigma = Permutation::from_images(sigma_images.clone()).expect("valid");
        for alpha in &involutions {
            match CombMap::new(sigma.clone(), alpha.clone()) {
                Ok(map) => maps.push(map),
                Err(crate::combmap::MapError::ViolatesB) => {}
                Err(e) => panic!("unexpected error: {e}"),
            }
        }
        if !next_permutation(&mut sigma_images) {
            break;
        }
    }
    Ok(maps)
}

/// Visit every perfect matching of `{0, ..., p-1}` as a list of pairs.
pub(super) fn all_matchings(p: usize, visit: &mut impl FnMut(&[(usize, usize)])) {
    assert!(p % 2 == 0);
    let mut used = vec![false; p];
    let mut pairs = Vec::with_capacity(p / 2);
    fn rec(
        used: &mut Vec<bool>,
        pairs: &mut Vec<(usize, usize)>,
        visit: &mut impl FnMut(&[(usize, usize)]),
    ) {
        let a = match used.iter().position(|&u| !u) {
            None => {
                visit(pairs);
                return;
            }
            Some(a) => a,
        };
        used[a] = true;
        for b in (a + 1)..used.len() {
            if used[b] {
                continue;
            }
            used[b] = true;
            pairs.push((a, b));
            rec(used, pairs, visit);
            pairs.pop();
            used[b] = false;
        }
        used[a] = false;
    }
    rec(&mut used, &mut pairs, visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combmap::ProfileKind;

    #[test]
    fn permutation_successor_is_exhaustive() {
        let mut xs = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut xs) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(xs, vec![3, 2, 1, 0]);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(fixed_alpha_multiplicity(1), 1);
        assert_eq!(fixed_alpha_multiplicity(2), 3);
        assert_eq!(fixed_alpha_multiplicity(3), 15);
        assert_eq!(fixed_alpha_multiplicity(6), 10395);
    }

    #[test]
    fn m1_maps() {
        let cfg = OracleConfig::default();
        let maps: Vec<_> = enumerate_maps(1, MapFilter::default(), &cfg)
            .unwrap()
            .collect();
        assert_eq!(maps.len(), 2);
        assert!(maps.iter().all(|(map, mult)| map.genus() == 0 && *mult == 1));
    }

    /// 60 labelled maps with two edges: 54 planar, 6 toroidal.
    #[test]
    fn m2_census_by_genus() {
        let cfg = OracleConfig::default();
        let s = survey(2, &MapFilter::default(), &cfg).unwrap();
        let mult = fixed_alpha_multiplicity(2);
        let by_genus = |g: usize| -> u64 {
            s.counts
                .iter()
                .filter(|((genus, _), _)| *genus == g)
                .map(|(_, c)| c * mult)
                .sum()
        };
        assert_eq!(by_genus(0), 54);
        assert_eq!(by_genus(1), 6);
        assert_eq!(s.total() * mult, 60);
        // all six toroidal maps have a single degree-4 vertex
        let key = (1usize, CycleType::new(vec![4]));
        assert_eq!(s.counts.get(&key), Some(&2));
    }

    /// Twelve labelled planar maps with one degree-4 vertex and two edges.
    #[test]
    fn m2_profile_filter() {
        let cfg = OracleConfig::default();
        let filter = MapFilter {
            genus: Some(0),
            vertex_profile: Some(DegreeProfile::from_counts([(4, 1)])),
        };
        let s = survey(2, &filter, &cfg).unwrap();
        assert_eq!(s.total() * fixed_alpha_multiplicity(2), 12);
        // the stream agrees with the survey
        let streamed: u64 = enumerate_maps(2, filter, &cfg)
            .unwrap()
            .map(|(_, mult)| mult)
            .sum();
        assert_eq!(streamed, 12);
    }

    /// The fixed-alpha shortcut times (2m-1)!! equals the explicit sweep
    /// over all (sigma, alpha) pairs.
    #[test]
    fn multiplicity_shortcut_matches_all_pairs() {
        let cfg = OracleConfig::default();
        for m in 1..=3 {
            let mut by_key: BTreeMap<(usize, CycleType), u64> = BTreeMap::new();
            for map in enumerate_all_pairs(m).unwrap() {
                let key = (
                    map.genus(),
                    CycleType::from_profile(&map.degree_profile(ProfileKind::Vertex)),
                );
                *by_key.entry(key).or_insert(0) += 1;
            }
            let s = survey(m, &MapFilter::default(), &cfg).unwrap();
            let mult = fixed_alpha_multiplicity(m);
            let scaled: BTreeMap<_, _> = s
                .counts
                .into_iter()
                .map(|(k, c)| (k, c * mult))
                .collect();
            assert_eq!(scaled, by_key, "m = {m}");
        }
        assert!(enumerate_all_pairs(4).is_err());
    }

    #[test]
    fn cycle_type_enumeration_counts() {
        // permutations of cycle type {3, 3} on 6 points: 6!/(3^2*2!) = 40
        let mut count = 0;
        for_each_of_cycle_type(&CycleType::new(vec![3, 3]), |_| count += 1);
        assert_eq!(count, 40);
        // type {1, 1, 2} on 4 points: 4!/(2*2!) = 6
        let mut count = 0;
        for_each_of_cycle_type(&CycleType::new(vec![1, 1, 2]), |_| count += 1);
        assert_eq!(count, 6);
    }

    #[test]
    fn matchings_count() {
        let mut count = 0;
        all_matchings(6, &mut |_| count += 1);
        assert_eq!(count, 15);
        let mut count = 0;
        all_matchings(0, &mut |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = OracleConfig::default();
        assert!(survey(6, &MapFilter::default(), &cfg).is_err());
        assert!(enumerate_maps(6, MapFilter::default(), &cfg).is_err());
        let cfg = OracleConfig::new(6).unwrap();
        assert!(enumerate_maps(6, MapFilter::default(), &cfg).is_ok());
    }
}
