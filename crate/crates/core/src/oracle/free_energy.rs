//! Generating functions assembled from exhaustive map surveys.
//!
//! Every series here is a sum over labelled maps of `t^m / (2m)!` times a
//! product of vertex weights, graded by genus; the variants differ only in
//! which marking is summed over and which vertices keep their weight. All
//! of them are functions of the `(genus, vertex cycle type)` census alone,
//! so a single [`survey`] per edge count feeds them all.

use num_bigint::BigInt;

use super::enumerate::{fixed_alpha_multiplicity, survey, MapFilter};
use super::{CycleType, OracleConfig, OracleError};
use crate::series::{factorial, GenusSeries, Rat, WPolynomial};

/// Per-class weight extractor: maps `(cycle type, labelled count)` to the
/// polynomial this class contributes before the `t^m/(2m)!` normalisation.
fn assemble(
    m_max: usize,
    config: &OracleConfig,
    class_weight: impl Fn(&CycleType) -> WPolynomial,
) -> Result<GenusSeries, OracleError> {
    let mut gs = GenusSeries::new(m_max);
    for m in 1..=m_max {
        let s = survey(m, &MapFilter::default(), config)?;
        let mult = BigInt::from(fixed_alpha_multiplicity(m));
        let denom = factorial(2 * m);
        for ((genus, vertex_type), count) in &s.counts {
            let weight = class_weight(vertex_type);
            if weight.is_zero() {
                continue;
            }
            let scale = Rat::new(BigInt::from(*count) * &mult, denom.clone());
            gs.add_term(*genus, m, weight.scale(&scale));
        }
    }
    Ok(gs)
}

/// The exponential generating function for labelled maps by genus:
/// coefficient of `t^m` in the genus-`g` layer is `1/(2m)!` times the sum
/// over labelled genus-`g` maps with `m` edges of `prod v_(vertex degree)`.
pub fn labelled_free_energy(
    m_max: usize,
    config: &OracleConfig,
) -> Result<GenusSeries, OracleError> {
    assemble(m_max, config, |vt| {
        let mut p = WPolynomial::zero();
        p.add_term(vt.monomial(), Rat::from_integer(1.into()));
        p
    })
}

/// Rooted-map counts by genus.
///
/// With `root_degree = None` every map is counted once per half-edge and
/// every vertex keeps its weight (the `2t dF/dt` convention). With
/// `root_degree = Some(n)` only roots at degree-`n` vertices are counted and
/// the root vertex carries no weight (the resolvent `W_n` convention).
pub fn rooted_counts(
    m_max: usize,
    root_degree: Option<usize>,
    config: &OracleConfig,
) -> Result<GenusSeries, OracleError> {
    match root_degree {
        None => assemble(m_max, config, |vt| {
            let roots = vt.total() as i64;
            WPolynomial::from(vt.monomial()).scale(&Rat::from_integer(roots.into()))
        }),
        Some(n) => assemble(m_max, config, move |vt| {
            let k_n = vt.multiplicity(n);
            if k_n == 0 {
                return WPolynomial::zero();
            }
            let mono = vt
                .monomial()
                .div_var(n, 1)
                .expect("cycle type contains an n-cycle");
            let mut poly = WPolynomial::zero();
            poly.add_term(mono, Rat::from_integer(BigInt::from(n * k_n)));
            poly
        }),
    }
}

/// Maps with an ordered pair of distinct marked degree-1 vertices, both
/// unweighted: each map of vertex type `k` contributes
/// `k_1 (k_1 - 1) v^k / (v_1)^2`.
pub fn marked_leg_pair_series(
    m_max: usize,
    config: &OracleConfig,
) -> Result<GenusSeries, OracleError> {
    assemble(m_max, config, |vt| {
        let k1 = vt.multiplicity(1);
        if k1 < 2 {
            return WPolynomial::zero();
        }
        let mono = vt
            .monomial()
            .div_var(1, 2)
            .expect("two degree-1 vertices present");
        let mut poly = WPolynomial::zero();
        poly.add_term(mono, Rat::from_integer(BigInt::from(k1 * (k1 - 1))));
        poly
    })
}

/// Maps with one marked unweighted degree-1 vertex and one marked face:
/// each map of vertex type `k` with `F` faces contributes
/// `k_1 F v^k / v_1`.
pub fn marked_leg_face_series(
    m_max: usize,
    config: &OracleConfig,
) -> Result<GenusSeries, OracleError> {
    let mut gs = GenusSeries::new(m_max);
    for m in 1..=m_max {
        let s = survey(m, &MapFilter::default(), config)?;
        let mult = BigInt::from(fixed_alpha_multiplicity(m));
        let denom = factorial(2 * m);
        for ((genus, vertex_type), count) in &s.counts {
            let k1 = vertex_type.multiplicity(1);
            if k1 == 0 {
                continue;
            }
            // faces from Euler: F = 2 - 2g - V + m
            let faces = 2i64 - 2 * *genus as i64 - vertex_type.parts().len() as i64 + m as i64;
            assert!(faces >= 1, "every map has a face");
            let mono = vertex_type.monomial().div_var(1, 1).expect("k1 >= 1");
            let scale = Rat::new(
                BigInt::from(*count) * &mult * BigInt::from(k1 as i64 * faces),
                denom.clone(),
            );
            let mut poly = WPolynomial::zero();
            poly.add_term(mono, scale);
            gs.add_term(*genus, m, poly);
        }
    }
    Ok(gs)
}
