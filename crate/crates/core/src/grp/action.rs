use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::group::{Elem, Group};

/// A homomorphism `H -> Aut(K)`, stored as the full table `h -> (k -> a_h(k))`.
///
/// Composition is a left action: `a_{gh} = a_g . a_h`.
pub struct AutomorphismAction {
    acting: Arc<Group>,
    target: Arc<Group>,
    table: Vec<Elem>,
}

impl std::fmt::Debug for AutomorphismAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AutomorphismAction({} on {})", self.acting.name(), self.target.name())
    }
}

impl AutomorphismAction {
    /// `images[i]` is the full element map of the i-th generator of `acting`.
    pub fn new(acting: Arc<Group>, target: Arc<Group>, images: Vec<Vec<Elem>>) -> Result<Arc<Self>> {
        let nk = target.order();
        let gens = acting.generators().to_vec();
        if images.len() != gens.len() {
            return Err(Error::ActionNotAutomorphism(format!(
                "{} generator images for {} generators",
                images.len(),
                gens.len()
            )));
        }
        for (i, map) in images.iter().enumerate() {
            check_automorphism(&target, map).map_err(|e| match e {
                Error::ActionNotAutomorphism(m) => Error::ActionNotAutomorphism(format!("generator {i}: {m}")),
                other => other,
            })?;
        }
        let nh = acting.order();
        let mut table = vec![Elem::MAX; nh * nk];
        let id = acting.identity() as usize;
        for k in 0..nk {
            table[id * nk + k] = k as Elem;
        }
        let mut queue = VecDeque::from([acting.identity()]);
        while let Some(h) = queue.pop_front() {
            for (gi, &s) in gens.iter().enumerate() {
                let y = acting.mul(h, s) as usize;
                let base = h as usize * nk;
                if table[y * nk] == Elem::MAX {
                    for k in 0..nk {
                        table[y * nk + k] = table[base + images[gi][k] as usize];
                    }
                    queue.push_back(y as Elem);
                } else {
                    for k in 0..nk {
                        if table[y * nk + k] != table[base + images[gi][k] as usize] {
                            return Err(Error::ActionNotAutomorphism(
                                "generator images do not define a homomorphism into Aut(K)".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(Arc::new(AutomorphismAction { acting, target, table }))
    }

    /// Builds generator maps from a function `(generator index, k) -> image`.
    pub fn from_fn(
        acting: Arc<Group>,
        target: Arc<Group>,
        f: impl Fn(usize, Elem) -> Elem,
    ) -> Result<Arc<Self>> {
        let images = (0..acting.generators().len())
            .map(|i| target.elements().map(|k| f(i, k)).collect())
            .collect();
        Self::new(acting, target, images)
    }

    /// Each acting generator given by the images of the target's generators.
    pub fn from_generator_images(
        acting: Arc<Group>,
        target: Arc<Group>,
        images: &[Vec<Elem>],
    ) -> Result<Arc<Self>> {
        let maps = images
            .iter()
            .map(|im| extend_homomorphism(&target, &target, im))
            .collect::<Result<Vec<_>>>()?;
        Self::new(acting, target, maps)
    }

    pub fn trivial(acting: Arc<Group>, target: Arc<Group>) -> Result<Arc<Self>> {
        Self::from_fn(acting, target, |_, k| k)
    }

    pub fn acting(&self) -> &Arc<Group> {
        &self.acting
    }

    pub fn target(&self) -> &Arc<Group> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, h: Elem, k: Elem) -> Elem {
        self.table[h as usize * self.target.order() + k as usize]
    }

    /// Points of the target fixed by `h`.
    pub fn fixed_points(&self, h: Elem) -> Vec<Elem> {
        self.target.elements().filter(|&k| self.apply(h, k) == k).collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.acting
            .elements()
            .filter(|&h| h != self.acting.identity())
            .all(|h| self.target.elements().any(|k| self.apply(h, k) != k))
    }
}

/// Checks that `map` is a bijective homomorphism of `g` onto itself.
pub fn check_automorphism(g: &Group, map: &[Elem]) -> Result<()> {
    let n = g.order();
    if map.len() != n {
        return Err(Error::ActionNotAutomorphism(format!("map has {} entries, group has {n}", map.len())));
    }
    let mut seen = vec![false; n];
    for &x in map {
        if x as usize >= n || seen[x as usize] {
            return Err(Error::ActionNotAutomorphism("map is not a bijection".into()));
        }
        seen[x as usize] = true;
    }
    // a(xs) = a(x)a(s) for every x and generator s extends to all products
    for x in g.elements() {
        for &s in g.generators() {
            if map[g.mul(x, s) as usize] != g.mul(map[x as usize], map[s as usize]) {
                return Err(Error::ActionNotAutomorphism(format!(
                    "product not preserved at ({}, {})",
                    g.format_element(x),
                    g.format_element(s)
                )));
            }
        }
    }
    if map[g.identity() as usize] != g.identity() {
        return Err(Error::ActionNotAutomorphism("identity not fixed".into()));
    }
    Ok(())
}

/// Extends `images` of the generators of `src` to a homomorphism `src -> dst`.
///
/// Fails with `ActionNotAutomorphism` if the assignment is inconsistent.
pub fn extend_homomorphism(src: &Group, dst: &Group, images: &[Elem]) -> Result<Vec<Elem>> {
    try_extend_homomorphism(src, dst, images)
        .ok_or_else(|| Error::ActionNotAutomorphism("generator images do not extend to a homomorphism".into()))
}

pub fn try_extend_homomorphism(src: &Group, dst: &Group, images: &[Elem]) -> Option<Vec<Elem>> {
    let gens = src.generators();
    if images.len() != gens.len() {
        return None;
    }
    let mut map = vec![Elem::MAX; src.order()];
    map[src.identity() as usize] = dst.identity();
    let mut queue = VecDeque::from([src.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x as usize];
        for (i, &s) in gens.iter().enumerate() {
            let y = src.mul(x, s) as usize;
            let fy = dst.mul(fx, images[i]);
            if map[y] == Elem::MAX {
                map[y] = fy;
                queue.push_back(y as Elem);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}
