//! Finite permutation groups backed by a full multiplication table.
//!
//! Elements are indices into the sorted element list; index 0 is always the
//! identity (the identity image list is lexicographically least).

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Result, WordlabError};
use crate::perm::Permutation;

pub const DEFAULT_ORDER_CAP: usize = 1000;

/// Element index into [`FiniteGroup::elements`].
pub type Elem = usize;

pub const IDENTITY: Elem = 0;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    elements: Vec<Permutation>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<Elem>,
}

impl FiniteGroup {
    /// Closure of `gens` under multiplication, with the default order cap.
    pub fn build(gens: &[Permutation], name: &str) -> Result<Self> {
        Self::build_with_cap(gens, name, DEFAULT_ORDER_CAP)
    }

    pub fn build_with_cap(gens: &[Permutation], name: &str, cap: usize) -> Result<Self> {
        let degree = match gens.first() {
            Some(g) => g.degree(),
            None => {
                return Err(WordlabError::Validation(
                    "at least one generator is required".into(),
                ))
            }
        };
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(WordlabError::Validation(format!(
                "generator {g} has degree {} but expected {degree}",
                g.degree()
            )));
        }
        for g in gens {
            Permutation::from_images(g.images().to_vec())?;
        }

        let id = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        let mut found = vec![id.clone()];
        seen.insert(id, ());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let next = found[i].then(g);
                if seen.contains_key(&next) {
                    continue;
                }
                if found.len() >= cap {
                    return Err(WordlabError::SizeLimit { cap });
                }
                seen.insert(next.clone(), ());
                found.push(next);
                queue.push_back(found.len() - 1);
            }
        }

        found.sort();
        let index: HashMap<&Permutation, usize> =
            found.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = found.len();
        let mut mul = vec![0u32; n * n];
        for (a, pa) in found.iter().enumerate() {
            for (b, pb) in found.iter().enumerate() {
                mul[a * n + b] = index[&pa.then(pb)] as u32;
            }
        }
        let inv: Vec<u32> = found.iter().map(|p| index[&p.inverse()] as u32).collect();
        let generators = gens.iter().map(|g| index[g]).collect();

        let mut group = FiniteGroup {
            name: name.to_string(),
            elements: found,
            mul,
            inv,
            orders: Vec::new(),
            generators,
        };
        group.orders = (0..n).map(|g| group.compute_order(g)).collect();
        Ok(group)
    }

    fn compute_order(&self, g: Elem) -> u32 {
        let mut x = g;
        let mut k = 1;
        while x != IDENTITY {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, g: Elem) -> &Permutation {
        &self.elements[g]
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        let p = if p.degree() < self.degree() {
            p.extended(self.degree())
        } else {
            p.clone()
        };
        self.elements.binary_search(&p).ok()
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.elements.len() + b] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a] as Elem
    }

    /// `x⁻¹ g x`
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), g), x)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn pow(&self, g: Elem, e: i64) -> Elem {
        let n = self.orders[g] as i64;
        let mut k = e.rem_euclid(n);
        let mut base = g;
        let mut acc = IDENTITY;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: Elem) -> usize {
        self.orders[g] as usize
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1usize, |acc, &o| lcm(acc, o as usize))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup {
            parent: self,
            members: (0..self.order()).collect(),
        }
    }

    /// All `x` commuting with every element of `set`.
    pub fn centralizer(&self, set: &[Elem]) -> Subgroup<'_> {
        let members = (0..self.order())
            .filter(|&x| set.iter().all(|&s| self.mul(x, s) == self.mul(s, x)))
            .collect();
        Subgroup { parent: self, members }
    }

    /// Smallest subgroup containing `set`.
    pub fn subgroup_generated(&self, set: &[Elem]) -> Subgroup<'_> {
        let mut gens: Vec<Elem> = set.iter().copied().filter(|&g| g != IDENTITY).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut inside = vec![false; self.order()];
        inside[IDENTITY] = true;
        let mut members = vec![IDENTITY];
        let mut queue = VecDeque::from([IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = self.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup { parent: self, members }
    }

    /// Subgroup generated by all commutators of pairs from `h`.
    pub fn derived_of(&self, h: &Subgroup<'_>) -> Subgroup<'_> {
        let mut comms = BTreeSet::new();
        for &a in &h.members {
            for &b in &h.members {
                comms.insert(self.commutator(a, b));
            }
        }
        let comms: Vec<Elem> = comms.into_iter().collect();
        self.subgroup_generated(&comms)
    }

    /// True when `set` is stable under conjugation. Checking the generators
    /// is enough since the group is finite.
    pub fn is_conjugation_closed(&self, set: &[Elem]) -> bool {
        let mut inside = vec![false; self.order()];
        for &s in set {
            inside[s] = true;
        }
        set.iter()
            .all(|&s| self.generators.iter().all(|&g| inside[self.conj(s, g)]))
    }

    pub fn describe(&self, g: Elem) -> String {
        self.elements[g].to_string()
    }
}

/// A subgroup stored as a sorted list of element indices of its parent.
#[derive(Clone, Debug)]
pub struct Subgroup<'g> {
    parent: &'g FiniteGroup,
    members: Vec<Elem>,
}

impl<'g> Subgroup<'g> {
    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.parent;
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn is_normal(&self) -> bool {
        self.parent.is_conjugation_closed(&self.members)
    }

    pub fn is_closed(&self) -> bool {
        let g = self.parent;
        self.contains(IDENTITY)
            && self.members.iter().all(|&a| {
                self.contains(g.inv(a)) && self.members.iter().all(|&b| self.contains(g.mul(a, b)))
            })
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a as u64, b as u64) as usize * b
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi is defined for n >= 1");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(list: &[&[u32]]) -> Vec<Permutation> {
        list.iter()
            .map(|imgs| Permutation::from_images(imgs.to_vec()).unwrap())
            .collect()
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::build(&perms(&[&[1, 2, 0], &[1, 0, 2]]), "S3").unwrap()
    }

    #[test]
    fn small_closures() {
        let c2 = FiniteGroup::build(&perms(&[&[1, 0]]), "C2").unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(s3().order(), 6);

        // [2, 3, 1, 0] is the 4-cycle (0 2 1 3) whose square is (0 1)(2 3),
        // so this pair generates a cyclic group of order 4.
        let gens = perms(&[&[1, 0, 3, 2], &[2, 3, 1, 0]]);
        let c4 = FiniteGroup::build(&gens, "C4").unwrap();
        assert_eq!(c4.order(), brute_closure(&gens));
        assert_eq!(c4.order(), 4);
        assert!((0..4).any(|g| c4.element_order(g) == 4));

        let klein = FiniteGroup::build(&perms(&[&[1, 0, 3, 2], &[2, 3, 0, 1]]), "V4").unwrap();
        assert_eq!(klein.order(), 4);
        assert!((0..4).all(|g| klein.inv(g) == g));
    }

    fn brute_closure(gens: &[Permutation]) -> usize {
        let mut set: BTreeSet<Permutation> = BTreeSet::new();
        set.insert(Permutation::identity(gens[0].degree()));
        loop {
            let before = set.len();
            let current: Vec<_> = set.iter().cloned().collect();
            for a in &current {
                for g in gens {
                    set.insert(a.then(g));
                }
            }
            if set.len() == before {
                return set.len();
            }
        }
    }

    #[test]
    fn identity_is_index_zero() {
        let g = s3();
        assert!(g.element(IDENTITY).is_identity());
        for x in 0..g.order() {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, 0), x);
            assert_eq!(g.mul(x, g.inv(x)), 0);
        }
    }

    #[test]
    fn cap_and_validation() {
        let big = perms(&[&[1, 2, 3, 4, 5, 6, 0], &[1, 0, 2, 3, 4, 5, 6]]);
        assert_eq!(
            FiniteGroup::build(&big, "S7").unwrap_err(),
            WordlabError::SizeLimit { cap: 1000 }
        );
        assert!(FiniteGroup::build_with_cap(&big, "S7", 5040).is_ok());
        let mixed = perms(&[&[1, 0], &[1, 2, 0]]);
        assert!(FiniteGroup::build(&mixed, "bad").is_err());
        assert!(FiniteGroup::build(&[], "none").is_err());
    }

    #[test]
    fn orders_and_subgroups() {
        let g = s3();
        assert_eq!(g.element_order(IDENTITY), 1);
        let three = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        assert_eq!(g.subgroup_generated(&[three]).order(), 3);
        assert_eq!(g.subgroup_generated(&[]).members(), &[IDENTITY]);

        let a3: Vec<Elem> = (0..6).filter(|&x| g.element_order(x) != 2).collect();
        let c = g.centralizer(&a3);
        assert_eq!(c.members(), a3.as_slice());
        assert_eq!(c.index(), 2);
        assert_eq!(g.centralizer(&[IDENTITY]).order(), 6);

        let d = g.derived_of(&g.whole());
        assert_eq!(d.members(), a3.as_slice());
        assert!(d.is_normal());
        assert!(g.derived_of(&c).is_trivial());
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let g = s3();
        for x in 0..g.order() {
            let mut acc = IDENTITY;
            for e in 0..8i64 {
                assert_eq!(g.pow(x, e), acc);
                assert_eq!(g.pow(x, -e), g.inv(acc));
                acc = g.mul(acc, x);
            }
        }
    }

    #[test]
    fn totient() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(3), 2);
        assert_eq!(euler_phi(12), 4);
        for n in 1..200u64 {
            let direct = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), direct, "n = {n}");
        }
    }
}
