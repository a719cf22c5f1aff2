//! Gaussian expectation values of products of traces, by explicit Wick
//! pairing.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::enumerate::all_matchings;
use super::{CycleType, OracleError};
use crate::combmap::DegreeProfile;
use crate::series::{factorial, rat_to_string, Rat};

/// Ceiling on the ground-set size of a Wick sweep: `(11)!! = 10395`
/// matchings at `p = 12`.
pub const WICK_MAX_HALF_EDGES: usize = 12;

/// An exact Laurent polynomial in the matrix size `N`, times a power of `t`:
/// `t^k * sum_e c_e N^e`.
///
/// Connected maps contribute `N` to the exponent `chi = 2 - 2g` only, but
/// expectation values of products of traces also pick up disconnected
/// diagrams whose exponents add over components, so the exponent here is a
/// free integer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NGradedValue {
    t_power: usize,
    terms: BTreeMap<i64, Rat>,
}

impl NGradedValue {
    pub fn zero() -> Self {
        NGradedValue::default()
    }

    pub fn new(t_power: usize, terms: BTreeMap<i64, Rat>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        NGradedValue { t_power, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn t_power(&self) -> usize {
        self.t_power
    }

    /// Coefficient of `N^e`.
    pub fn term(&self, exponent: i64) -> Rat {
        self.terms.get(&exponent).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Sum of all coefficients (the value at `N = 1`).
    pub fn coefficient_sum(&self) -> Rat {
        self.terms.values().cloned().sum()
    }
}

impl fmt::Display for NGradedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "(")?;
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{}", rat_to_string(c))?,
                1 => write!(f, "{}*N", rat_to_string(c))?,
                _ => write!(f, "{}*N^{}", rat_to_string(c), e)?,
            }
        }
        write!(f, ")*t^{}", self.t_power)
    }
}

/// The Gaussian expectation `< prod_n (Tr M^n)^{c_n} >` for a product of
/// traces with the given multiset of trace orders.
///
/// Fixes one permutation `sigma` of the given cycle type and sums
/// `N^{c(sigma . alpha)}` over all `(p-1)!!` fixed-point-free involutions
/// `alpha` of `{1, ..., p}`, then multiplies by the covariance factor
/// `(t/N)^{p/2}`. For odd `p` the expectation vanishes by parity and the
/// zero value is returned.
pub fn wick_cycle_expectation(ct: &CycleType) -> Result<NGradedValue, OracleError> {
    let p = ct.total();
    if p > WICK_MAX_HALF_EDGES {
        return Err(OracleError::TooLarge {
            what: "Wick pairing sweep (half-edges)",
            requested: p,
            cap: WICK_MAX_HALF_EDGES,
        });
    }
    if p % 2 != 0 {
        return Ok(NGradedValue::zero());
    }

    // sigma as a 0-based image array of the block representative
    let sigma: Vec<usize> = if p == 0 {
        Vec::new()
    } else {
        ct.representative()
            .images()
            .iter()
            .map(|&v| v - 1)
            .collect()
    };

    // histogram of c(sigma . alpha) over all matchings
    let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
    let mut seen = vec![false; p];
    all_matchings(p, &mut |pairs| {
        let mut alpha = vec![0usize; p];
        for &(a, b) in pairs {
            alpha[a] = b;
            alpha[b] = a;
        }
        seen.iter_mut().for_each(|s| *s = false);
        let mut cycles = 0;
        for start in 0..p {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = sigma[alpha[x]];
            }
        }
        *histogram.entry(cycles).or_insert(0) += 1;
    });

    let terms = histogram
        .into_iter()
        .map(|(cycles, count)| {
            (
                cycles as i64 - (p / 2) as i64,
                Rat::from_integer(BigInt::from(count)),
            )
        })
        .collect();
    Ok(NGradedValue::new(p / 2, terms))
}

/// The coefficient of the weight monomial `prod v_n^{k_n}` in the
/// partition function: `< prod_n (N Tr M^n)^{k_n} / (n^{k_n} k_n!) >`.
///
/// Assembled from [`wick_cycle_expectation`] with the prefactor
/// `N^{sum k_n} / prod n^{k_n} k_n!`; disconnected diagrams are included,
/// which is why the result is graded by a free `N`-exponent rather than by
/// genus.
pub fn partition_coefficient(profile: &DegreeProfile) -> Result<NGradedValue, OracleError> {
    let ct = CycleType::from_profile(profile);
    let wick = wick_cycle_expectation(&ct)?;
    if wick.is_zero() && ct.total() % 2 != 0 {
        return Ok(NGradedValue::zero());
    }

    let vertex_count = profile.total_count() as i64;
    let mut denom = BigInt::one();
    for (n, k) in profile.iter() {
        denom *= BigInt::from(n).pow(k as u32) * factorial(k);
    }
    let scale = Rat::new(BigInt::one(), denom);

    let terms = wick
        .terms()
        .map(|(e, c)| (e + vertex_count, c * &scale))
        .collect();
    Ok(NGradedValue::new(wick.t_power(), terms))
}
