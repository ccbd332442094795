//! Permutations on `{0, …, degree−1}`, the concrete realization of group
//! elements during construction.

use crate::error::{Error, Result};

/// A permutation stored as its image list: `images[i]` is where point `i` goes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Validates that `images` is a bijection on `0..images.len()`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let img = img as usize;
            if img >= n {
                return Err(Error::InvalidPermutation {
                    index: 0,
                    reason: format!("image {img} out of range 0..{n}"),
                });
            }
            if seen[img] {
                return Err(Error::InvalidPermutation {
                    index: 0,
                    reason: format!("image {img} repeated"),
                });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// Composition acting left-to-first: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u32 == img)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
        assert!(Permutation::new(vec![1, 0]).is_ok());
    }

    #[test]
    fn compose_then_inverse_is_identity() {
        let p = Permutation::new(vec![1, 2, 0, 4, 3]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn composition_order() {
        // p = (0 1), q = (1 2); (p∘q)(1) = p(q(1)) = p(2) = 2.
        let p = Permutation::new(vec![1, 0, 2]).unwrap();
        let q = Permutation::new(vec![0, 2, 1]).unwrap();
        assert_eq!(p.compose(&q).apply(1), 2);
        assert_eq!(q.compose(&p).apply(1), 0);
    }
}
