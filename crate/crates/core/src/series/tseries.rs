//! Truncated power series in the edge weight `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::WPolynomial;
use super::rat::{rat_int, Rat};
use super::SeriesError;

/// A series `sum_{m=0}^{T} c_m t^m + O(t^{T+1})` with polynomial coefficients.
///
/// The truncation order `T` is part of the value: `coeffs.len() == T + 1`
/// always holds, and binary operations require both operands to carry the
/// same order. The checked `try_*` methods report a mismatch as
/// [`SeriesError::TruncationMismatch`]; the operator impls panic on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSeries {
    trunc: usize,
    coeffs: Vec<WPolynomial>,
}

impl TSeries {
    pub fn zero(trunc: usize) -> Self {
        TSeries {
            trunc,
            coeffs: vec![WPolynomial::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        TSeries::constant(WPolynomial::one(), trunc)
    }

    pub fn constant(c: WPolynomial, trunc: usize) -> Self {
        let mut s = TSeries::zero(trunc);
        s.coeffs[0] = c;
        s
    }

    /// The monomial `c * t^k` (zero if `k` exceeds the truncation order).
    pub fn monomial(c: WPolynomial, k: usize, trunc: usize) -> Self {
        let mut s = TSeries::zero(trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `t`.
    pub fn t(trunc: usize) -> Self {
        TSeries::monomial(WPolynomial::one(), 1, trunc)
    }

    pub fn truncation_order(&self) -> usize {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(WPolynomial::is_zero)
    }

    /// Exact coefficient of `t^m`; an error past the truncation order.
    pub fn coefficient(&self, m: usize) -> Result<&WPolynomial, SeriesError> {
        self.coeffs.get(m).ok_or(SeriesError::OutOfRange {
            order: m,
            trunc: self.trunc,
        })
    }

    /// Coefficient of `t^m` as a rational, for series whose coefficients are
    /// constants (panics if the coefficient mentions a weight variable).
    pub fn rat_coefficient(&self, m: usize) -> Result<Rat, SeriesError> {
        let c = self.coefficient(m)?;
        assert!(
            c.max_variable().is_none(),
            "coefficient of t^{m} is not constant: {c}"
        );
        Ok(c.constant_term())
    }

    pub fn set_coefficient(&mut self, m: usize, c: WPolynomial) {
        assert!(m <= self.trunc, "t^{m} beyond truncation {}", self.trunc);
        self.coeffs[m] = c;
    }

    /// Lowest `t`-order with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_same_trunc(&self, rhs: &TSeries) -> Result<(), SeriesError> {
        if self.trunc != rhs.trunc {
            Err(SeriesError::TruncationMismatch {
                left: self.trunc,
                right: rhs.trunc,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, rhs: &TSeries) -> Result<TSeries, SeriesError> {
        self.check_same_trunc(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TSeries {
            trunc: self.trunc,
            coeffs,
        })
    }

    pub fn try_sub(&self, rhs: &TSeries) -> Result<TSeries, SeriesError> {
        self.check_same_trunc(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TSeries {
            trunc: self.trunc,
            coeffs,
        })
    }

    pub fn try_mul(&self, rhs: &TSeries) -> Result<TSeries, SeriesError> {
        self.check_same_trunc(rhs)?;
        let mut out = TSeries::zero(self.trunc);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > self.trunc {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                let slot = &mut out.coeffs[i + j];
                *slot = &*slot + &prod;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> TSeries {
        let coeffs = self.coeffs.iter().map(|p| p.scale(c)).collect();
        TSeries {
            trunc: self.trunc,
            coeffs,
        }
    }

    pub fn scale_poly(&self, p: &WPolynomial) -> TSeries {
        let coeffs = self.coeffs.iter().map(|c| c * p).collect();
        TSeries {
            trunc: self.trunc,
            coeffs,
        }
    }

    /// Multiply by `t^k`, keeping the truncation order (top coefficients fall
    /// off the end).
    pub fn mul_t_power(&self, k: usize) -> TSeries {
        let mut out = TSeries::zero(self.trunc);
        for m in 0..=self.trunc {
            if m + k > self.trunc {
                break;
            }
            out.coeffs[m + k] = self.coeffs[m].clone();
        }
        out
    }

    /// Exact division by `t^k`. The truncation order drops by `k`; the `k`
    /// lowest coefficients must vanish.
    pub fn div_t_exact(&self, k: usize) -> TSeries {
        assert!(k <= self.trunc, "cannot divide O(t^{}) by t^{k}", self.trunc);
        for m in 0..k {
            assert!(
                self.coeffs[m].is_zero(),
                "division by t^{k} is not exact: t^{m} coefficient is {}",
                self.coeffs[m]
            );
        }
        TSeries {
            trunc: self.trunc - k,
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Restrict to a lower truncation order.
    pub fn truncated(&self, trunc: usize) -> TSeries {
        assert!(trunc <= self.trunc, "cannot extend O(t^{}) to O(t^{trunc})", self.trunc);
        TSeries {
            trunc,
            coeffs: self.coeffs[..=trunc].to_vec(),
        }
    }

    /// Termwise `d/dt`; the truncation order drops by one (saturating so the
    /// derivative of an order-0 series is the zero series of order 0).
    pub fn derivative_t(&self) -> TSeries {
        let trunc = self.trunc.saturating_sub(1);
        let mut out = TSeries::zero(trunc);
        for m in 1..=self.trunc {
            out.coeffs[m - 1] = self.coeffs[m].scale(&rat_int(m as i64));
        }
        out
    }

    /// `t * d/dt`: coefficient of `t^m` becomes `m * c_m`. Keeps the
    /// truncation order, which `derivative_t` cannot.
    pub fn t_dt(&self) -> TSeries {
        let mut out = TSeries::zero(self.trunc);
        for m in 1..=self.trunc {
            out.coeffs[m] = self.coeffs[m].scale(&rat_int(m as i64));
        }
        out
    }

    /// `exp` of a series with zero constant term, via the recurrence
    /// `m e_m = sum_{j=1}^{m} j s_j e_{m-j}` (from `e' = s' e`).
    pub fn exp(&self) -> Result<TSeries, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::WrongConstantTerm {
                op: "exp",
                expected: "0",
            });
        }
        let mut out = TSeries::zero(self.trunc);
        out.coeffs[0] = WPolynomial::one();
        for m in 1..=self.trunc {
            let mut acc = WPolynomial::zero();
            for j in 1..=m {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                let term = &self.coeffs[j].scale(&rat_int(j as i64)) * &out.coeffs[m - j];
                acc = &acc + &term;
            }
            out.coeffs[m] = acc.scale(&(rat_int(1) / rat_int(m as i64)));
        }
        Ok(out)
    }

    /// `log` of a series with constant term one, via the recurrence
    /// `m l_m = m u_m - sum_{j=1}^{m-1} j l_j u_{m-j}` (from `u l' = u'`).
    pub fn log(&self) -> Result<TSeries, SeriesError> {
        if self.coeffs[0] != WPolynomial::one() {
            return Err(SeriesError::WrongConstantTerm {
                op: "log",
                expected: "1",
            });
        }
        let mut out = TSeries::zero(self.trunc);
        for m in 1..=self.trunc {
            let mut acc = self.coeffs[m].scale(&rat_int(m as i64));
            for j in 1..m {
                if out.coeffs[j].is_zero() || self.coeffs[m - j].is_zero() {
                    continue;
                }
                let term = &out.coeffs[j].scale(&rat_int(j as i64)) * &self.coeffs[m - j];
                acc = &acc - &term;
            }
            out.coeffs[m] = acc.scale(&(rat_int(1) / rat_int(m as i64)));
        }
        Ok(out)
    }

    /// Substitute exact values for the weight variables in every coefficient.
    pub fn substitute(&self, values: &BTreeMap<usize, Rat>) -> Result<TSeries, SeriesError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval(values).map(WPolynomial::constant))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TSeries {
            trunc: self.trunc,
            coeffs,
        })
    }
}

impl Add for &TSeries {
    type Output = TSeries;
    fn add(self, rhs: &TSeries) -> TSeries {
        self.try_add(rhs).expect("series truncation mismatch")
    }
}

impl Sub for &TSeries {
    type Output = TSeries;
    fn sub(self, rhs: &TSeries) -> TSeries {
        self.try_sub(rhs).expect("series truncation mismatch")
    }
}

impl Mul for &TSeries {
    type Output = TSeries;
    fn mul(self, rhs: &TSeries) -> TSeries {
        self.try_mul(rhs).expect("series truncation mismatch")
    }
}

impl Neg for &TSeries {
    type Output = TSeries;
    fn neg(self) -> TSeries {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        TSeries {
            trunc: self.trunc,
            coeffs,
        }
    }
}

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            if m == 0 {
                write!(f, "{c}")?;
            } else if c.num_terms() == 1 && *c == WPolynomial::one() {
                write!(f, "t^{m}")?;
            } else {
                write!(f, "({c})*t^{m}")?;
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.trunc + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::poly::Monomial;
    use crate::series::rat::{rat, rat_int};
    use proptest::prelude::*;

    fn num(s: &TSeries, m: usize) -> Rat {
        s.rat_coefficient(m).unwrap()
    }

    #[test]
    fn truncated_product() {
        // (t + 3t^3)^2 = t^2 + 6t^4 + 9t^6 at order 6
        let mut s = TSeries::zero(6);
        s.set_coefficient(1, WPolynomial::one());
        s.set_coefficient(3, WPolynomial::constant(rat_int(3)));
        let sq = &s * &s;
        let expect = [0, 0, 1, 0, 6, 0, 9];
        for (m, e) in expect.iter().enumerate() {
            assert_eq!(num(&sq, m), rat_int(*e));
        }

        // truncation drops cross terms: t*t at order 1 is zero
        let t = TSeries::t(1);
        assert!((&t * &t).is_zero());
    }

    #[test]
    fn truncation_mismatch_is_an_error() {
        let a = TSeries::t(3);
        let b = TSeries::t(4);
        assert_eq!(
            a.try_mul(&b),
            Err(SeriesError::TruncationMismatch { left: 3, right: 4 })
        );
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn coefficient_out_of_range() {
        let s = TSeries::t(2);
        assert_eq!(num(&s, 1), rat_int(1));
        assert!(matches!(
            s.coefficient(3),
            Err(SeriesError::OutOfRange { order: 3, trunc: 2 })
        ));
    }

    #[test]
    fn exp_of_zero_is_one() {
        let z = TSeries::zero(5);
        assert_eq!(z.exp().unwrap(), TSeries::one(5));
    }

    #[test]
    fn exp_wrong_constant_term() {
        assert!(TSeries::one(3).exp().is_err());
        assert!(TSeries::zero(3).log().is_err());
    }

    #[test]
    fn exp_matches_hand_expansion() {
        // exp(t) = sum t^m / m!
        let e = TSeries::t(5).exp().unwrap();
        for m in 0..=5 {
            assert_eq!(num(&e, m), rat_int(1) / Rat::from_integer(crate::series::factorial(m)));
        }
    }

    #[test]
    fn derivative_and_t_dt() {
        let mut s = TSeries::zero(3);
        s.set_coefficient(2, WPolynomial::one());
        let d = s.derivative_t();
        assert_eq!(d.truncation_order(), 2);
        assert_eq!(num(&d, 1), rat_int(2));
        let td = s.t_dt();
        assert_eq!(td.truncation_order(), 3);
        assert_eq!(num(&td, 2), rat_int(2));
        assert!(TSeries::one(0).derivative_t().is_zero());
    }

    #[test]
    fn substitution() {
        // (v4 * t)^2 at v4 = 2/3
        let s = TSeries::monomial(WPolynomial::var(4), 1, 4);
        let sq = &s * &s;
        let mut vals = BTreeMap::new();
        vals.insert(4, rat(2, 3));
        let n = sq.substitute(&vals).unwrap();
        assert_eq!(num(&n, 2), rat(4, 9));
        assert_eq!(
            sq.substitute(&BTreeMap::new()),
            Err(SeriesError::MissingWeight(4))
        );
    }

    /// Random series at truncation 4 with small coefficients over v1, v2.
    fn arb_series() -> impl Strategy<Value = TSeries> {
        prop::collection::vec((-4i64..5, -4i64..5, 0usize..3), 0..6).prop_map(|terms| {
            let mut s = TSeries::zero(4);
            for (m, (c, e, var)) in terms.into_iter().enumerate() {
                let mut p = WPolynomial::constant(rat_int(c));
                if var > 0 {
                    p.add_term(Monomial::var(var), rat_int(e));
                }
                let slot = m % 5;
                let prev = s.coefficient(slot).unwrap().clone();
                s.set_coefficient(slot, &prev + &p);
            }
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(x in arb_series(), y in arb_series(), z in arb_series()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
        }

        #[test]
        fn exp_log_round_trip(c1 in -5i64..6, c2 in -5i64..6, c3 in -5i64..6) {
            let mut s = TSeries::zero(6);
            s.set_coefficient(1, WPolynomial::constant(rat_int(c1)));
            let mut p = WPolynomial::constant(rat_int(c2));
            p.add_term(Monomial::var(3), rat_int(c3));
            s.set_coefficient(2, p);
            let round = s.exp().unwrap().log().unwrap();
            prop_assert_eq!(round, s);
        }
    }
}
