//! Genus-graded families of series.

use std::collections::BTreeMap;

use super::poly::WPolynomial;
use super::tseries::TSeries;

/// A finite family `g -> F^(g)(t, v)` of series sharing one truncation order.
///
/// This is the shape of the topological expansion: the genus-`g` layer
/// contributes with `N`-exponent `2 - 2g`. Only finitely many genera are
/// nonzero at any truncation order (a map with `m` edges has genus at most
/// `m/2`), so a `BTreeMap` with zero layers omitted is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusSeries {
    trunc: usize,
    by_genus: BTreeMap<usize, TSeries>,
}

impl GenusSeries {
    pub fn new(trunc: usize) -> Self {
        GenusSeries {
            trunc,
            by_genus: BTreeMap::new(),
        }
    }

    pub fn truncation_order(&self) -> usize {
        self.trunc
    }

    /// Add `c * t^m` to the genus-`g` layer.
    pub fn add_term(&mut self, genus: usize, m: usize, c: WPolynomial) {
        if c.is_zero() || m > self.trunc {
            return;
        }
        let layer = self
            .by_genus
            .entry(genus)
            .or_insert_with(|| TSeries::zero(self.trunc));
        let cur = layer.coefficient(m).unwrap().clone();
        layer.set_coefficient(m, &cur + &c);
    }

    /// The genus-`g` layer (zero series if absent).
    pub fn genus(&self, g: usize) -> TSeries {
        self.by_genus
            .get(&g)
            .cloned()
            .unwrap_or_else(|| TSeries::zero(self.trunc))
    }

    /// Genera with a stored (possibly zero) layer.
    pub fn genera(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_genus.keys().copied()
    }

    pub fn layers(&self) -> impl Iterator<Item = (usize, &TSeries)> {
        self.by_genus.iter().map(|(&g, s)| (g, s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat::rat_int;

    #[test]
    fn layers_accumulate() {
        let mut gs = GenusSeries::new(3);
        gs.add_term(0, 1, WPolynomial::one());
        gs.add_term(0, 1, WPolynomial::one());
        gs.add_term(1, 2, WPolynomial::var(4));
        gs.add_term(2, 9, WPolynomial::one()); // beyond truncation: dropped
        assert_eq!(gs.genus(0).rat_coefficient(1).unwrap(), rat_int(2));
        assert_eq!(gs.genus(1).coefficient(2).unwrap(), &WPolynomial::var(4));
        assert!(gs.genus(2).is_zero());
        assert_eq!(gs.genera().collect::<Vec<_>>(), vec![0, 1]);
    }
}
