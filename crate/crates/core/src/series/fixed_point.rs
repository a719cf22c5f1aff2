//! Fixed points of t-adically contractive systems.

use super::tseries::TSeries;
use super::SeriesError;

/// Solve `X = system(X)` for a vector of series truncated at order `trunc`.
///
/// The system must be a t-adic contraction: applied to two inputs agreeing to
/// `t`-order `k`, the outputs agree to order at least `k + 1`. Iterating from
/// the zero vector then converges in at most `trunc + 1` steps, and the
/// result is the unique solution vanishing wherever the system forces it.
///
/// The contraction property is checked dynamically rather than trusted: the
/// first order at which successive iterates differ must strictly increase,
/// and one extra application of the system must leave the result unchanged.
/// A violation is reported as [`SeriesError::NotContractive`].
pub fn fixed_point<F>(dim: usize, trunc: usize, system: F) -> Result<Vec<TSeries>, SeriesError>
where
    F: Fn(&[TSeries]) -> Vec<TSeries>,
{
    let apply = |x: &[TSeries]| -> Result<Vec<TSeries>, SeriesError> {
        let y = system(x);
        if y.len() != dim {
            return Err(SeriesError::DimensionMismatch {
                expected: dim,
                got: y.len(),
            });
        }
        for s in &y {
            if s.truncation_order() != trunc {
                return Err(SeriesError::TruncationMismatch {
                    left: trunc,
                    right: s.truncation_order(),
                });
            }
        }
        Ok(y)
    };

    let mut x = vec![TSeries::zero(trunc); dim];
    let mut last_diff: Option<usize> = None;
    for _ in 0..=trunc {
        let y = apply(&x)?;
        match first_difference(&x, &y) {
            None => {
                // already a fixed point to the working order
                return Ok(x);
            }
            Some(d) => {
                if let Some(prev) = last_diff {
                    if d <= prev {
                        return Err(SeriesError::NotContractive { order: d });
                    }
                }
                last_diff = Some(d);
            }
        }
        x = y;
    }
    // idempotence to the truncation order
    let y = apply(&x)?;
    if let Some(d) = first_difference(&x, &y) {
        return Err(SeriesError::NotContractive { order: d });
    }
    Ok(x)
}

/// Smallest t-order at which the two vectors differ.
fn first_difference(a: &[TSeries], b: &[TSeries]) -> Option<usize> {
    let trunc = a
        .iter()
        .map(TSeries::truncation_order)
        .min()
        .unwrap_or(0);
    (0..=trunc).find(|&m| {
        a.iter()
            .zip(b)
            .any(|(s, t)| s.coefficient(m).unwrap() != t.coefficient(m).unwrap())
    })
}
