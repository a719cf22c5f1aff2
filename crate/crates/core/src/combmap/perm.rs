//! Permutations of the half-edge labels `{1, ..., p}`.

use std::fmt;

use super::MapError;

/// A permutation of `{1, ..., p}`, stored as its image sequence: entry at
/// (1-based) position `i` is the image of `i`.
///
/// The ground set is 1-based to match the usual half-edge labelling of maps;
/// `apply` and all cycle utilities speak 1-based labels throughout.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Identity on `{1, ..., p}`.
    pub fn identity(p: usize) -> Self {
        Permutation {
            images: (1..=p).collect(),
        }
    }

    /// Build from the image sequence `images[i-1] = image of i`, checking
    /// that it is a bijection of `{1, ..., p}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, MapError> {
        let p = images.len();
        let mut seen = vec![false; p];
        for &v in &images {
            if v == 0 || v > p || seen[v - 1] {
                return Err(MapError::NotABijection { image: v, size: p });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint cycles over `{1, ..., p}`; labels not mentioned
    /// are fixed points. `from_cycles(5, &[&[1, 2], &[3, 4, 5]])` is
    /// `(1 2)(3 4 5)`.
    pub fn from_cycles(p: usize, cycles: &[&[usize]]) -> Result<Self, MapError> {
        let mut images: Vec<usize> = (1..=p).collect();
        let mut moved = vec![false; p];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > p || moved[a - 1] {
                    return Err(MapError::NotABijection { image: a, size: p });
                }
                moved[a - 1] = true;
                images[a - 1] = b;
            }
        }
        Permutation::from_images(images)
    }

    /// Size of the ground set.
    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the (1-based) label `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Composition `self . other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, MapError> {
        if self.size() != other.size() {
            return Err(MapError::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let images = other.images.iter().map(|&v| self.apply(v)).collect();
        Ok(Permutation { images })
    }

    /// Conjugate `rho . self . rho^{-1}` (the relabelling of `self` by `rho`).
    pub fn conjugate(&self, rho: &Permutation) -> Result<Permutation, MapError> {
        if self.size() != rho.size() {
            return Err(MapError::SizeMismatch {
                left: self.size(),
                right: rho.size(),
            });
        }
        let mut images = vec![0; self.size()];
        for i in 1..=self.size() {
            images[rho.apply(i) - 1] = rho.apply(self.apply(i));
        }
        Ok(Permutation { images })
    }

    /// Cycle decomposition; each cycle starts at its minimal label, and
    /// cycles are sorted by that label.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let p = self.size();
        let mut seen = vec![false; p];
        let mut cycles = Vec::new();
        for start in 1..=p {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Number of cycles, `c(.)` in the Euler characteristic formula.
    pub fn cycle_count(&self) -> usize {
        let p = self.size();
        let mut seen = vec![false; p];
        let mut count = 0;
        for start in 1..=p {
            if seen[start - 1] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                x = self.apply(x);
            }
        }
        count
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// True when the permutation is an involution without fixed points.
    pub fn is_fixed_point_free_involution(&self) -> bool {
        (1..=self.size()).all(|i| {
            let j = self.apply(i);
            j != i && self.apply(j) == i
        })
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, fixed points included: `(1 2)(3)(4 5 6)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() == 0 {
            return write!(f, "()");
        }
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (k, v) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(p: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(p, cycles).unwrap()
    }

    #[test]
    fn compose_identity_and_inverse() {
        let q = perm(4, &[&[1, 3], &[2, 4]]);
        let id = Permutation::identity(4);
        assert_eq!(id.compose(&q).unwrap(), q);
        assert_eq!(q.compose(&id).unwrap(), q);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_pointwise() {
        // (1 2 3 4) after (1 3)(2 4) is (1 4 3 2)
        let p = perm(4, &[&[1, 2, 3, 4]]);
        let q = perm(4, &[&[1, 3], &[2, 4]]);
        let r = p.compose(&q).unwrap();
        assert_eq!(r, perm(4, &[&[1, 4, 3, 2]]));
    }

    #[test]
    fn compose_size_mismatch() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert_eq!(
            p.compose(&q),
            Err(MapError::SizeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn image_sequence_validation() {
        assert!(Permutation::from_images(vec![2, 1, 3]).is_ok());
        assert!(Permutation::from_images(vec![2, 2, 3]).is_err());
        assert!(Permutation::from_images(vec![0, 1, 2]).is_err());
        assert!(Permutation::from_images(vec![1, 2, 4]).is_err());
    }

    #[test]
    fn cycles_and_display() {
        let s = perm(10, &[&[1, 2], &[3, 4, 5], &[6, 7, 8, 9]]);
        assert_eq!(s.cycle_count(), 4);
        assert_eq!(s.to_string(), "(1 2)(3 4 5)(6 7 8 9)(10)");
        assert_eq!(s.cycles()[3], vec![10]);
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let s = perm(4, &[&[1, 2, 3]]);
        let rho = perm(4, &[&[1, 4]]);
        let c = s.conjugate(&rho).unwrap();
        assert_eq!(c, perm(4, &[&[4, 2, 3]]));
    }

    #[test]
    fn involution_test() {
        assert!(perm(4, &[&[1, 3], &[2, 4]]).is_fixed_point_free_involution());
        assert!(!perm(4, &[&[1, 3]]).is_fixed_point_free_involution());
        assert!(!perm(3, &[&[1, 2, 3]]).is_fixed_point_free_involution());
    }
}
