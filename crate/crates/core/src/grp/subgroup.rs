use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

use super::bitset::BitSet;
use super::group::{Elem, Group};

/// A subgroup of a realized group with its element set materialized.
#[derive(Clone)]
pub struct Subgroup {
    group: Arc<Group>,
    generators: Vec<Elem>,
    members: BitSet,
    elements: Vec<Elem>,
    normal: OnceLock<bool>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} in {})", self.order(), self.group.name())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn trivial(group: &Arc<Group>) -> Subgroup {
        Self::closure(group, &[])
    }

    pub fn whole(group: &Arc<Group>) -> Subgroup {
        let mut s = Self::closure(group, group.generators());
        let _ = s.normal.set(true);
        s.generators = group.generators().to_vec();
        s
    }

    /// Smallest subgroup containing `seeds`, grown coset by coset.
    pub fn closure(group: &Arc<Group>, seeds: &[Elem]) -> Subgroup {
        let mut members = BitSet::new(group.order());
        let mut elements = vec![group.identity()];
        members.insert(group.identity());
        let mut gens: Vec<Elem> = Vec::new();
        for &s in seeds {
            if members.contains(s) {
                continue;
            }
            gens.push(s);
            let old: Vec<Elem> = elements.clone();
            let mut reps = vec![group.identity()];
            let mut i = 0;
            while i < reps.len() {
                let r = reps[i];
                i += 1;
                for &g in &gens {
                    let y = group.mul(r, g);
                    if !members.contains(y) {
                        reps.push(y);
                        for &h in &old {
                            let z = group.mul(h, y);
                            members.insert(z);
                            elements.push(z);
                        }
                    }
                }
            }
        }
        elements.sort_unstable();
        Subgroup { group: group.clone(), generators: gens, members, elements, normal: OnceLock::new() }
    }

    /// Subgroup from a set already known to be closed.
    pub(crate) fn from_closed_set(group: &Arc<Group>, members: BitSet) -> Subgroup {
        let elements: Vec<Elem> = members.iter().collect();
        let gens = Self::pick_generators(group, &elements);
        Subgroup { group: group.clone(), generators: gens, members, elements, normal: OnceLock::new() }
    }

    /// Greedy generating set drawn from a closed element list.
    fn pick_generators(group: &Arc<Group>, elements: &[Elem]) -> Vec<Elem> {
        let orders = group.element_orders();
        let mut sorted: Vec<Elem> = elements.to_vec();
        // high-order elements first keeps generating sets short
        sorted.sort_by_key(|&x| (std::cmp::Reverse(orders[x as usize]), x));
        let mut current = Subgroup::trivial(group);
        let mut gens = Vec::new();
        for x in sorted {
            if current.order() == elements.len() {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = Subgroup::closure(group, &gens);
            }
        }
        gens
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Normal in the whole group.
    pub fn is_normal(&self) -> bool {
        *self.normal.get_or_init(|| self.is_normalized_by(self.group.generators()))
    }

    pub fn is_normalized_by(&self, elems: &[Elem]) -> bool {
        elems.iter().all(|&g| self.generators.iter().all(|&h| self.contains(self.group.conj(h, g))))
    }

    /// Normal in `other` (which must contain `self`).
    pub fn is_normal_in(&self, other: &Subgroup) -> bool {
        self.is_subgroup_of(other) && self.is_normalized_by(other.generators())
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_closed_set(&self.group, self.members.intersect(&other.members))
    }

    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut seeds = self.generators.clone();
        seeds.extend_from_slice(&other.generators);
        Subgroup::closure(&self.group, &seeds)
    }

    /// `g^-1 H g`.
    pub fn conjugate(&self, g: Elem) -> Subgroup {
        let seeds: Vec<Elem> = self.generators.iter().map(|&h| self.group.conj(h, g)).collect();
        Subgroup::closure(&self.group, &seeds)
    }

    /// Smallest subgroup containing `seeds` and normalized by `by`.
    pub fn normal_closure(group: &Arc<Group>, seeds: &[Elem], by: &[Elem]) -> Subgroup {
        let mut current = Subgroup::closure(group, seeds);
        loop {
            let mut extra = Vec::new();
            for &g in by {
                for &h in &current.generators {
                    let c = group.conj(h, g);
                    if !current.contains(c) && !extra.contains(&c) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return current;
            }
            let mut seeds = current.generators.clone();
            seeds.extend(extra);
            current = Subgroup::closure(group, &seeds);
        }
    }

    /// The quotient `G/N` and the projection `G -> G/N` as an element map.
    pub fn quotient(&self) -> Result<(Arc<Group>, Vec<Elem>)> {
        if !self.is_normal() {
            return Err(Error::NotNormal);
        }
        let g = &self.group;
        let mut coset_of = vec![Elem::MAX; g.order()];
        let mut reps = Vec::new();
        for x in g.elements() {
            if coset_of[x as usize] != Elem::MAX {
                continue;
            }
            let id = reps.len() as Elem;
            reps.push(x);
            for &n in &self.elements {
                coset_of[g.mul(x, n) as usize] = id;
            }
        }
        let name = format!("{} / N{}", g.name(), self.order());
        let q = Group::quotient_from_cosets(name, g, coset_of.clone(), reps);
        Ok((q, coset_of))
    }

    /// A standalone group on the subgroup's elements, plus the map back into the parent.
    pub fn as_group(&self) -> (Arc<Group>, Vec<Elem>) {
        let name = format!("sub({}, {})", self.group.name(), self.order());
        let g = Group::from_members(name, &self.group, self.elements.clone(), &self.generators);
        (g, self.elements.clone())
    }

    /// Image of the subgroup under an element map into `target`.
    pub fn image(&self, target: &Arc<Group>, map: &[Elem]) -> Subgroup {
        let seeds: Vec<Elem> = self.generators.iter().map(|&x| map[x as usize]).collect();
        Subgroup::closure(target, &seeds)
    }

    /// Full preimage of `sub` under `map: self.group -> sub.group`.
    pub fn preimage(group: &Arc<Group>, map: &[Elem], sub: &Subgroup) -> Subgroup {
        let mut members = BitSet::new(group.order());
        for x in group.elements() {
            if sub.contains(map[x as usize]) {
                members.insert(x);
            }
        }
        Subgroup::from_closed_set(group, members)
    }

    /// Right coset representatives, least element of each coset.
    pub fn right_transversal(&self) -> Vec<Elem> {
        let g = &self.group;
        let mut seen = BitSet::new(g.order());
        let mut reps = Vec::new();
        for x in g.elements() {
            if seen.contains(x) {
                continue;
            }
            reps.push(x);
            for &h in &self.elements {
                seen.insert(g.mul(h, x));
            }
        }
        reps
    }

    /// Left coset representatives `xH`, least element of each coset.
    pub fn left_transversal(&self) -> Vec<Elem> {
        let g = &self.group;
        let mut seen = BitSet::new(g.order());
        let mut reps = Vec::new();
        for x in g.elements() {
            if seen.contains(x) {
                continue;
            }
            reps.push(x);
            for &h in &self.elements {
                seen.insert(g.mul(x, h));
            }
        }
        reps
    }
}
