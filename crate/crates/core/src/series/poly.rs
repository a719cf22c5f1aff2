//! Sparse multivariate polynomials in the vertex weights `v_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::rat::{rat_to_string, Rat};
use super::SeriesError;

/// A product of weight variables, `prod_n v_n^{e_n}`.
///
/// Keys are the degree labels `n`, values the (positive) exponents; zero
/// exponents are never stored, so the unit monomial has an empty map.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: BTreeMap<usize, usize>,
}

impl Monomial {
    /// The empty product.
    pub fn unit() -> Self {
        Monomial::default()
    }

    /// The single variable `v_n`.
    pub fn var(n: usize) -> Self {
        Monomial::from_exponents([(n, 1)])
    }

    /// Build from `(degree, exponent)` pairs, dropping zero exponents.
    pub fn from_exponents<I: IntoIterator<Item = (usize, usize)>>(exps: I) -> Self {
        let mut map = BTreeMap::new();
        for (n, e) in exps {
            if e > 0 {
                *map.entry(n).or_insert(0) += e;
            }
        }
        Monomial { exps: map }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    /// Exponent of `v_n` (zero when absent).
    pub fn exponent(&self, n: usize) -> usize {
        self.exps.get(&n).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.exps.iter().map(|(&n, &e)| (n, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&n, &e) in &other.exps {
            *exps.entry(n).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Divide by `v_n^e`; `None` if the exponent would go negative.
    pub fn div_var(&self, n: usize, e: usize) -> Option<Monomial> {
        let have = self.exponent(n);
        if have < e {
            return None;
        }
        let mut exps = self.exps.clone();
        if have == e {
            exps.remove(&n);
        } else {
            exps.insert(n, have - e);
        }
        Some(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&n, &e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "v{n}")?;
            } else {
                write!(f, "v{n}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in the weights `v_n` with exact rational coefficients.
///
/// Zero coefficients are never stored; the zero polynomial has an empty term
/// map, so structural equality is semantic equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WPolynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl WPolynomial {
    pub fn zero() -> Self {
        WPolynomial::default()
    }

    pub fn one() -> Self {
        WPolynomial::constant(Rat::from_integer(1.into()))
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = WPolynomial::zero();
        p.add_term(Monomial::unit(), c);
        p
    }

    /// The variable `v_n`.
    pub fn var(n: usize) -> Self {
        let mut p = WPolynomial::zero();
        p.add_term(Monomial::var(n), Rat::from_integer(1.into()));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant term (coefficient of the unit monomial).
    pub fn constant_term(&self) -> Rat {
        self.coefficient(&Monomial::unit())
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Add `c * m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> WPolynomial {
        if c.is_zero() {
            return WPolynomial::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, r)| (m.clone(), r * c))
            .collect();
        WPolynomial { terms }
    }

    /// Exact evaluation at `v_n = values[n]`. Every variable that occurs must
    /// be covered.
    pub fn eval(&self, values: &BTreeMap<usize, Rat>) -> Result<Rat, SeriesError> {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (n, e) in m.iter() {
                let v = values.get(&n).ok_or(SeriesError::MissingWeight(n))?;
                for _ in 0..e {
                    term *= v;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Largest degree label occurring in any term, if the polynomial mentions
    /// a variable at all.
    pub fn max_variable(&self) -> Option<usize> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(n, _)| n))
            .max()
    }
}

impl Add for &WPolynomial {
    type Output = WPolynomial;
    fn add(self, rhs: &WPolynomial) -> WPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &WPolynomial {
    type Output = WPolynomial;
    fn sub(self, rhs: &WPolynomial) -> WPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &WPolynomial {
    type Output = WPolynomial;
    fn mul(self, rhs: &WPolynomial) -> WPolynomial {
        let mut out = WPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &WPolynomial {
    type Output = WPolynomial;
    fn neg(self) -> WPolynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        WPolynomial { terms }
    }
}

impl fmt::Display for WPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_unit() {
                write!(f, "{}", rat_to_string(c))?;
            } else if c == &Rat::from_integer(1.into()) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{}", rat_to_string(c), m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat::{rat, rat_int};

    #[test]
    fn monomial_algebra() {
        let m = Monomial::var(3).mul(&Monomial::var(3)).mul(&Monomial::var(4));
        assert_eq!(m.exponent(3), 2);
        assert_eq!(m.exponent(4), 1);
        assert_eq!(m.div_var(3, 2).unwrap(), Monomial::var(4));
        assert_eq!(m.div_var(4, 2), None);
        assert_eq!(m.to_string(), "v3^2*v4");
    }

    #[test]
    fn cancellation_keeps_terms_sparse() {
        let p = WPolynomial::var(2);
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.num_terms(), 0);
    }

    #[test]
    fn product_and_eval() {
        // (v1 + 2)(v1 - 2) = v1^2 - 4
        let a = &WPolynomial::var(1) + &WPolynomial::constant(rat_int(2));
        let b = &WPolynomial::var(1) - &WPolynomial::constant(rat_int(2));
        let p = &a * &b;
        let mut vals = BTreeMap::new();
        vals.insert(1, rat(1, 2));
        assert_eq!(p.eval(&vals).unwrap(), rat(-15, 4));
        assert_eq!(
            p.eval(&BTreeMap::new()),
            Err(SeriesError::MissingWeight(1))
        );
    }
}
