//! Finite groups materialized as element-indexed multiplication tables.
//!
//! Elements are indexed by breadth-first enumeration from the identity,
//! applying the generators in input order, which makes every downstream
//! output bit-reproducible. Conjugacy classes are sorted by
//! (size ascending, minimal member index) and the identity class is
//! always class 0.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::set::ElementSet;

/// One conjugacy class of a built group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub index: usize,
    pub size: usize,
    /// Minimal element index in the class.
    pub representative: usize,
    /// Member element indices, ascending.
    pub members: Vec<usize>,
}

/// A finite group as a full Cayley table with inverse map and class data.
///
/// Immutable after construction; all operations on it are pure.
#[derive(Debug, Clone)]
pub struct GroupTable {
    order: usize,
    /// Row-major `order × order` table, `mul[a*order + b] = a·b`.
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    class_of: Vec<u32>,
    classes: Vec<ConjClass>,
}

impl GroupTable {
    /// Enumerates the group generated by `generators` and builds its
    /// Cayley table, inverses and conjugacy classes.
    ///
    /// Element 0 is the identity; the remaining elements are numbered in
    /// BFS order from the identity, right-multiplying by the generators
    /// in input order.
    pub fn build(generators: &[Permutation], max_order: usize) -> Result<GroupTable> {
        if generators.is_empty() {
            return Err(Error::InvalidInput("generator list is empty".into()));
        }
        let degree = generators[0].degree();
        for (i, g) in generators.iter().enumerate() {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation {
                    index: i,
                    reason: format!("degree {} differs from {}", g.degree(), degree),
                });
            }
        }

        let identity = Permutation::identity(degree);
        let mut elements: Vec<Permutation> = vec![identity.clone()];
        let mut index: HashMap<Permutation, u32> = HashMap::new();
        index.insert(identity, 0);

        let mut head = 0usize;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in generators {
                let next = current.compose(g);
                if !index.contains_key(&next) {
                    if elements.len() >= max_order {
                        return Err(Error::OrderExceeded {
                            max_order,
                            reached: elements.len() + 1,
                        });
                    }
                    index.insert(next.clone(), elements.len() as u32);
                    elements.push(next);
                }
            }
        }

        let order = elements.len();
        let mut mul = vec![0u32; order * order];
        for a in 0..order {
            let row = &elements[a];
            for b in 0..order {
                let prod = row.compose(&elements[b]);
                mul[a * order + b] = index[&prod];
            }
        }
        let inv: Vec<u32> = elements.iter().map(|p| index[&p.inverse()]).collect();

        let (classes, class_of) = conjugacy_partition(order, &mul, &inv);
        Ok(GroupTable { order, mul, inv, identity: 0, class_of, classes })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    /// Row of the multiplication table for fixed left factor `a`.
    #[inline]
    pub fn mul_row(&self, a: usize) -> &[u32] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Conjugate `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, x: usize) -> usize {
        let mut n = 1;
        let mut acc = x;
        while acc != self.identity {
            acc = self.mul(acc, x);
            n += 1;
        }
        n
    }

    /// Exponent of the group: lcm of the element orders (one per class
    /// suffices, conjugates share their order).
    pub fn exponent(&self) -> usize {
        self.classes
            .iter()
            .map(|k| self.element_order(k.representative))
            .fold(1usize, num_integer::lcm)
    }

    /// Index of the class holding the inverses of class `k`'s members.
    pub fn inverse_class(&self, k: usize) -> usize {
        self.class_of(self.inv(self.classes[k].representative))
    }

    /// Size of the centralizer of any member of class `k`, via
    /// `|K| · |C_G(g)| = |G|`.
    pub fn centralizer_order(&self, k: usize) -> usize {
        self.order / self.classes[k].size
    }

    /// Advisory simplicity check: the group is simple iff every nontrivial
    /// class generates the whole group as a normal subgroup.
    pub fn is_simple(&self) -> bool {
        if self.order == 1 {
            return false;
        }
        for class in &self.classes[1..] {
            if self.normal_subgroup_generated(class.representative) != self.order {
                return false;
            }
        }
        true
    }

    /// Order of the smallest normal subgroup containing `x`.
    fn normal_subgroup_generated(&self, x: usize) -> usize {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let class = &self.classes[self.class_of(x)];
        let mut frontier: Vec<usize> = Vec::new();
        for &m in &class.members {
            if !member[m] {
                member[m] = true;
                frontier.push(m);
            }
        }
        // Close under multiplication; conjugation-closure is automatic
        // because the seed is a full class and conjugation distributes
        // over products.
        let mut count = 1 + frontier.len();
        while let Some(a) = frontier.pop() {
            for b in 0..self.order {
                if member[b] {
                    let p = self.mul(a, b);
                    if !member[p] {
                        member[p] = true;
                        count += 1;
                        frontier.push(p);
                    }
                    let q = self.mul(b, a);
                    if !member[q] {
                        member[q] = true;
                        count += 1;
                        frontier.push(q);
                    }
                }
            }
        }
        count
    }

    /// The full group as an element set.
    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self)
    }

    /// The class with index `k` as an element set.
    pub fn class_set(&self, k: usize) -> ElementSet {
        ElementSet::from_indices(self.classes[k].members.iter().copied(), self)
    }

    /// Union of the classes selected by `mask` (bit k = class k).
    pub fn class_union(&self, mask: u64) -> ElementSet {
        let mut members = Vec::new();
        for (k, class) in self.classes.iter().enumerate() {
            if mask & (1 << k) != 0 {
                members.extend_from_slice(&class.members);
            }
        }
        ElementSet::from_indices(members.into_iter(), self)
    }
}

fn conjugacy_partition(order: usize, mul: &[u32], inv: &[u32]) -> (Vec<ConjClass>, Vec<u32>) {
    let m = |a: usize, b: usize| mul[a * order + b] as usize;
    let mut assigned = vec![false; order];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for x in 0..order {
        if assigned[x] {
            continue;
        }
        let mut members = Vec::new();
        for g in 0..order {
            let y = m(m(g, x), inv[g] as usize);
            if !assigned[y] {
                assigned[y] = true;
                members.push(y);
            }
        }
        members.sort_unstable();
        raw.push(members);
    }
    raw.sort_by_key(|members| (members.len(), members[0]));
    let mut class_of = vec![0u32; order];
    let classes = raw
        .into_iter()
        .enumerate()
        .map(|(index, members)| {
            for &e in &members {
                class_of[e] = index as u32;
            }
            ConjClass { index, size: members.len(), representative: members[0], members }
        })
        .collect();
    (classes, class_of)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn perms(images: &[&[u32]]) -> Vec<Permutation> {
        images.iter().map(|im| Permutation::new(im.to_vec()).unwrap()).collect()
    }

    pub(crate) fn s3() -> GroupTable {
        GroupTable::build(&perms(&[&[1, 0, 2], &[1, 2, 0]]), 100).unwrap()
    }

    #[test]
    fn c2_has_two_singleton_classes() {
        let g = GroupTable::build(&perms(&[&[1, 0]]), 10).unwrap();
        assert_eq!(g.order(), 2);
        let sizes: Vec<usize> = g.classes().iter().map(|k| k.size).collect();
        assert_eq!(sizes, vec![1, 1]);
    }

    #[test]
    fn s3_class_sizes() {
        let g = s3();
        assert_eq!(g.order(), 6);
        let sizes: Vec<usize> = g.classes().iter().map(|k| k.size).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(g.classes()[0].representative, 0);
    }

    #[test]
    fn a5_class_sizes() {
        let g = GroupTable::build(&perms(&[&[1, 2, 3, 4, 0], &[1, 2, 0, 3, 4]]), 100).unwrap();
        assert_eq!(g.order(), 60);
        let sizes: Vec<usize> = g.classes().iter().map(|k| k.size).collect();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        assert!(g.is_simple());
    }

    #[test]
    fn trivial_group() {
        let g = GroupTable::build(&perms(&[&[0]]), 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.num_classes(), 1);
        assert!(!g.is_simple());
    }

    #[test]
    fn order_exceeded() {
        let gens = perms(&[&[1, 2, 3, 4, 0], &[1, 2, 0, 3, 4]]);
        match GroupTable::build(&gens, 30) {
            Err(Error::OrderExceeded { max_order: 30, .. }) => {}
            other => panic!("expected OrderExceeded, got {other:?}"),
        }
    }

    #[test]
    fn class_equation_and_centralizers() {
        let g = s3();
        let total: usize = g.classes().iter().map(|k| k.size).sum();
        assert_eq!(total, g.order());
        for k in 0..g.num_classes() {
            assert_eq!(g.order() % g.classes()[k].size, 0);
            assert_eq!(g.classes()[k].size * g.centralizer_order(k), g.order());
        }
    }

    #[test]
    fn associativity_exhaustive_small_and_sampled() {
        let g = GroupTable::build(&perms(&[&[1, 2, 3, 4, 0], &[1, 2, 0, 3, 4]]), 100).unwrap();
        let n = g.order();
        if n <= 200 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
        }
        let mut rng = SplitMix64::new(99);
        for _ in 0..10_000 {
            let a = rng.next_below(n as u64) as usize;
            let b = rng.next_below(n as u64) as usize;
            let c = rng.next_below(n as u64) as usize;
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
    }

    #[test]
    fn identity_and_inverses() {
        let g = s3();
        for a in 0..g.order() {
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, 0), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.mul(g.inv(a), a), 0);
        }
    }

    #[test]
    fn classes_closed_under_conjugation() {
        let g = s3();
        for x in 0..g.order() {
            for h in 0..g.order() {
                assert_eq!(g.class_of(g.conj(h, x)), g.class_of(x));
            }
        }
    }

    #[test]
    fn exponent_of_s3_is_6() {
        assert_eq!(s3().exponent(), 6);
    }

    #[test]
    fn s4_not_simple() {
        let g = GroupTable::build(&perms(&[&[1, 0, 2, 3], &[1, 2, 3, 0]]), 100).unwrap();
        assert_eq!(g.order(), 24);
        assert!(!g.is_simple());
    }

    #[test]
    fn bfs_order_is_deterministic() {
        let a = s3();
        let b = s3();
        assert_eq!(a.mul, b.mul);
        assert_eq!(a.inv, b.inv);
    }
}
