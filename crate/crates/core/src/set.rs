//! Subsets of group elements with bitset semantics.

use crate::group::GroupTable;
use crate::rng::SplitMix64;

/// A subset of the elements of one group, with cached cardinality and
/// normality flag. Normal means invariant under conjugation, i.e. a union
/// of conjugacy classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    universe: usize,
    bits: Vec<u64>,
    size: usize,
    is_normal: bool,
}

impl ElementSet {
    pub fn empty(group: &GroupTable) -> ElementSet {
        let universe = group.order();
        ElementSet {
            universe,
            bits: vec![0; universe.div_ceil(64)],
            size: 0,
            is_normal: true,
        }
    }

    pub fn full(group: &GroupTable) -> ElementSet {
        let mut set = ElementSet::empty(group);
        for e in 0..set.universe {
            set.bits[e / 64] |= 1 << (e % 64);
        }
        set.size = set.universe;
        set
    }

    pub fn from_indices(indices: impl Iterator<Item = usize>, group: &GroupTable) -> ElementSet {
        let mut set = ElementSet::empty(group);
        for e in indices {
            assert!(e < set.universe, "element index {e} out of range");
            set.bits[e / 64] |= 1 << (e % 64);
        }
        set.recount(group);
        set
    }

    /// Seeded density sample: element `i` is included when the `i`-th draw
    /// of a SplitMix64 stream falls below `density`.
    pub fn sample(density: f64, seed: u64, group: &GroupTable) -> ElementSet {
        let mut rng = SplitMix64::new(seed);
        let mut set = ElementSet::empty(group);
        for e in 0..set.universe {
            if rng.next_f64() < density {
                set.bits[e / 64] |= 1 << (e % 64);
            }
        }
        set.recount(group);
        set
    }

    fn recount(&mut self, group: &GroupTable) {
        self.size = self.bits.iter().map(|w| w.count_ones() as usize).sum();
        // Normal iff each class is fully in or fully out.
        self.is_normal = group.classes().iter().all(|class| {
            let inside = class.members.iter().filter(|&&m| self.contains(m)).count();
            inside == 0 || inside == class.size
        });
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        self.bits[e / 64] & (1 << (e % 64)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Member indices, ascending.
    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size);
        for (w, &word) in self.bits.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(w * 64 + b);
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn union(&self, other: &ElementSet, group: &GroupTable) -> ElementSet {
        assert_eq!(self.universe, other.universe);
        let mut set = self.clone();
        for (a, b) in set.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
        set.recount(group);
        set
    }

    pub fn difference(&self, other: &ElementSet, group: &GroupTable) -> ElementSet {
        assert_eq!(self.universe, other.universe);
        let mut set = self.clone();
        for (a, b) in set.bits.iter_mut().zip(&other.bits) {
            *a &= !b;
        }
        set.recount(group);
        set
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

/// `{x⁻¹ : x ∈ X}`. Preserves size and normality.
pub fn inverse_set(x: &ElementSet, group: &GroupTable) -> ElementSet {
    ElementSet::from_indices(x.indices().into_iter().map(|e| group.inv(e)), group)
}

/// Smallest conjugation-invariant superset of `X`: the union of all
/// classes that meet `X`.
pub fn normal_closure(x: &ElementSet, group: &GroupTable) -> ElementSet {
    let mut touched = vec![false; group.num_classes()];
    for e in x.indices() {
        touched[group.class_of(e)] = true;
    }
    let members = group
        .classes()
        .iter()
        .filter(|class| touched[class.index])
        .flat_map(|class| class.members.iter().copied());
    ElementSet::from_indices(members, group)
}

/// `{g·x : x ∈ X}`.
pub fn left_translate(g: usize, x: &ElementSet, group: &GroupTable) -> ElementSet {
    let row = group.mul_row(g);
    ElementSet::from_indices(x.indices().into_iter().map(|e| row[e] as usize), group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use proptest::prelude::*;

    fn group(images: &[&[u32]]) -> GroupTable {
        let gens: Vec<Permutation> =
            images.iter().map(|im| Permutation::new(im.to_vec()).unwrap()).collect();
        GroupTable::build(&gens, 200).unwrap()
    }

    fn s3() -> GroupTable {
        group(&[&[1, 0, 2], &[1, 2, 0]])
    }

    fn a5() -> GroupTable {
        group(&[&[1, 2, 3, 4, 0], &[1, 2, 0, 3, 4]])
    }

    #[test]
    fn identity_is_self_inverse() {
        let g = s3();
        let e = ElementSet::from_indices([0].into_iter(), &g);
        assert_eq!(inverse_set(&e, &g), e);
    }

    #[test]
    fn a5_is_ambivalent() {
        let g = a5();
        for k in 0..g.num_classes() {
            let class = g.class_set(k);
            assert_eq!(inverse_set(&class, &g), class);
        }
    }

    #[test]
    fn s3_three_cycles_inverse_closed() {
        let g = s3();
        let k = g.class_set(1);
        assert_eq!(k.len(), 2);
        assert_eq!(inverse_set(&k, &g), k);
    }

    #[test]
    fn closure_of_one_transposition_is_the_class() {
        let g = s3();
        let transpositions = g.class_set(2);
        assert_eq!(transpositions.len(), 3);
        let one = ElementSet::from_indices([transpositions.indices()[0]].into_iter(), &g);
        let closed = normal_closure(&one, &g);
        assert_eq!(closed, transpositions);
        assert!(closed.is_normal());
    }

    #[test]
    fn closure_of_empty_is_empty() {
        let g = s3();
        let e = ElementSet::empty(&g);
        assert_eq!(normal_closure(&e, &g), e);
    }

    #[test]
    fn translate_by_identity_and_group() {
        let g = s3();
        let x = ElementSet::sample(0.5, 11, &g);
        assert_eq!(left_translate(0, &x, &g), x);
        let full = g.full_set();
        assert_eq!(left_translate(3, &full, &g), full);
    }

    #[test]
    fn translate_e_t_by_t_is_fixed() {
        let g = s3();
        let t = g.class_set(2).indices()[0];
        let x = ElementSet::from_indices([0, t].into_iter(), &g);
        assert_eq!(left_translate(t, &x, &g), x);
    }

    proptest! {
        #[test]
        fn closure_is_idempotent_and_monotone(seed in 0u64..500, seed2 in 500u64..1000) {
            let g = a5();
            let x = ElementSet::sample(0.2, seed, &g);
            let y = x.union(&ElementSet::sample(0.2, seed2, &g), &g);
            let cx = normal_closure(&x, &g);
            prop_assert_eq!(normal_closure(&cx, &g), cx.clone());
            prop_assert!(cx.is_subset_of(&normal_closure(&y, &g)));
        }

        #[test]
        fn translate_preserves_size(seed in 0u64..500, gidx in 0usize..60) {
            let g = a5();
            let x = ElementSet::sample(0.4, seed, &g);
            prop_assert_eq!(left_translate(gidx, &x, &g).len(), x.len());
        }

        #[test]
        fn inverse_set_preserves_size_and_normality(seed in 0u64..500) {
            let g = a5();
            let x = normal_closure(&ElementSet::sample(0.1, seed, &g), &g);
            let inv = inverse_set(&x, &g);
            prop_assert_eq!(inv.len(), x.len());
            prop_assert!(inv.is_normal());
        }
    }
}
