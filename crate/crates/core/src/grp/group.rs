use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::ff::FiniteField;

use super::action::AutomorphismAction;
use super::perm::Perm;

/// Index of an element in its group's canonical element table.
pub type Elem = u32;

pub const DEFAULT_ELEMENT_CAP: usize = 300_000;

/// Groups up to this order get a full multiplication table.
pub const CAYLEY_MAX: usize = 2600;

static ELEMENT_CAP: AtomicUsize = AtomicUsize::new(0);

/// Current element cap: `EQORDER_ELEMENT_CAP` if set, else the default.
pub fn element_cap() -> usize {
    let cap = ELEMENT_CAP.load(Ordering::Relaxed);
    if cap != 0 {
        return cap;
    }
    let cap = std::env::var("EQORDER_ELEMENT_CAP")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_ELEMENT_CAP);
    ELEMENT_CAP.store(cap, Ordering::Relaxed);
    cap
}

pub fn set_element_cap(cap: usize) {
    ELEMENT_CAP.store(cap.max(1), Ordering::Relaxed);
}

fn check_cap(size: usize) -> Result<()> {
    let cap = element_cap();
    if size > cap {
        Err(Error::ElementCapExceeded { cap })
    } else {
        Ok(())
    }
}

pub(crate) enum Realization {
    Perm {
        degree: usize,
        perms: Vec<Perm>,
        index: HashMap<Perm, Elem>,
    },
    Matrix {
        field: Arc<FiniteField>,
        mats: Vec<[u32; 4]>,
        index: HashMap<[u32; 4], Elem>,
    },
    /// Additive group of `GF(q)^dim`, first coordinate most significant.
    Vector { field: Arc<FiniteField>, dim: usize },
    Direct { left: Arc<Group>, right: Arc<Group> },
    /// Pairs `(k, h)` with `(k1,h1)(k2,h2) = (k1 * a_{h1}(k2), h1 h2)`.
    Semidirect { action: Arc<AutomorphismAction> },
    /// Cosets of a normal subgroup, numbered by their least element.
    Quotient {
        parent: Arc<Group>,
        coset_of: Vec<Elem>,
        reps: Vec<Elem>,
    },
    Sub {
        parent: Arc<Group>,
        members: Vec<Elem>,
        position: Vec<Elem>,
    },
}

#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    pub class_of: Vec<u32>,
    /// Each class sorted; classes ordered by their least element.
    pub classes: Vec<Vec<Elem>>,
}

/// A finite group with a fully materialized, canonically ordered element table.
pub struct Group {
    name: String,
    realization: Realization,
    order: usize,
    identity: Elem,
    generators: Vec<Elem>,
    inverses: Vec<Elem>,
    cayley: Option<Vec<Elem>>,
    element_orders: OnceLock<Vec<u32>>,
    classes: OnceLock<ConjugacyClasses>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.name, self.order)
    }
}

impl Group {
    fn assemble(
        name: String,
        realization: Realization,
        order: usize,
        identity: Elem,
        generators: Vec<Elem>,
    ) -> Arc<Group> {
        let mut g = Group {
            name,
            realization,
            order,
            identity,
            generators: Vec::new(),
            inverses: Vec::new(),
            cayley: None,
            element_orders: OnceLock::new(),
            classes: OnceLock::new(),
        };
        let mut gens = Vec::new();
        for x in generators {
            if x != identity && !gens.contains(&x) {
                gens.push(x);
            }
        }
        g.generators = gens;
        let wants_table = matches!(
            g.realization,
            Realization::Perm { .. }
                | Realization::Matrix { .. }
                | Realization::Vector { .. }
                | Realization::Quotient { .. }
        );
        if wants_table && order <= CAYLEY_MAX {
            let mut table = vec![0; order * order];
            for a in 0..order {
                for b in 0..order {
                    table[a * order + b] = g.mul_raw(a as Elem, b as Elem);
                }
            }
            g.cayley = Some(table);
        }
        g.inverses = (0..order as Elem).map(|x| g.inv_raw(x)).collect();
        Arc::new(g)
    }

    // ---------------------------------------------------------------
    // constructors
    // ---------------------------------------------------------------

    /// Closure of permutation generators on `{1..degree}`.
    pub fn from_permutations(name: &str, degree: usize, gens: &[Perm]) -> Result<Arc<Group>> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::NotABijection(format!("{g} has degree {} not {degree}", g.degree())));
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.then(g);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    check_cap(seen.len())?;
                    queue.push_back(y);
                }
            }
        }
        let mut perms: Vec<Perm> = seen.into_iter().collect();
        perms.sort();
        let index: HashMap<Perm, Elem> =
            perms.iter().enumerate().map(|(i, p)| (p.clone(), i as Elem)).collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        let order = perms.len();
        let identity = index[&Perm::identity(degree)];
        Ok(Group::assemble(
            name.to_string(),
            Realization::Perm { degree, perms, index },
            order,
            identity,
            generators,
        ))
    }

    /// Closure of 2x2 matrices (row-major field codes).
    pub fn from_matrices(name: &str, field: Arc<FiniteField>, gens: &[[u32; 4]]) -> Result<Arc<Group>> {
        let one = [1, 0, 0, 1];
        for g in gens {
            if mat_det(&field, g) == 0 {
                return Err(Error::NotABijection(format!("singular matrix {g:?}")));
            }
        }
        let mut seen: HashSet<[u32; 4]> = HashSet::from([one]);
        let mut queue = VecDeque::from([one]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = mat_mul(&field, &x, g);
                if seen.insert(y) {
                    check_cap(seen.len())?;
                    queue.push_back(y);
                }
            }
        }
        Ok(Self::matrix_group(name, field, seen.into_iter().collect(), gens))
    }

    fn matrix_group(name: &str, field: Arc<FiniteField>, mut mats: Vec<[u32; 4]>, gens: &[[u32; 4]]) -> Arc<Group> {
        mats.sort();
        let index: HashMap<[u32; 4], Elem> = mats.iter().enumerate().map(|(i, m)| (*m, i as Elem)).collect();
        let identity = index[&[1, 0, 0, 1]];
        let generators = gens.iter().map(|g| index[g]).collect();
        let order = mats.len();
        Group::assemble(name.to_string(), Realization::Matrix { field, mats, index }, order, identity, generators)
    }

    /// SL_2 over the given field, generated by the elementary transvections
    /// with entries `t^i`.
    pub fn sl2(field: Arc<FiniteField>) -> Result<Arc<Group>> {
        let q = field.order() as usize;
        check_cap(q * (q * q - 1))?;
        let mut mats = Vec::with_capacity(q * (q * q - 1));
        for a in 0..q as u32 {
            for b in 0..q as u32 {
                for c in 0..q as u32 {
                    if a != 0 {
                        // d = (1 + bc) / a
                        let num = field.add_code(1, field.mul_code(b, c));
                        let d = field.mul_code(num, field.inv_code(a).unwrap());
                        mats.push([a, b, c, d]);
                    } else if b != 0 {
                        // -bc = 1 forces c = -1/b; d is free
                        let needed = field.neg_code(field.inv_code(b).unwrap());
                        if c == needed {
                            for d in 0..q as u32 {
                                mats.push([a, b, c, d]);
                            }
                        }
                    }
                }
            }
        }
        let mut gens = Vec::new();
        let mut basis = 1u32;
        for _ in 0..field.degree() {
            gens.push([1, basis, 0, 1]);
            gens.push([1, 0, basis, 1]);
            basis = field.mul_code(basis, field.generator_code());
        }
        let name = format!("sl2({})", field.order());
        Ok(Self::matrix_group(&name, field, mats, &gens))
    }

    /// Additive group of row vectors `GF(q)^dim`.
    pub fn vector_space(field: Arc<FiniteField>, dim: usize) -> Result<Arc<Group>> {
        let q = field.order() as usize;
        let order = q.checked_pow(dim as u32).ok_or(Error::ElementCapExceeded { cap: element_cap() })?;
        check_cap(order)?;
        let mut gens = Vec::new();
        for i in 0..dim {
            let mut basis = 1u32;
            for _ in 0..field.degree() {
                let mut coords = vec![0; dim];
                coords[i] = basis;
                gens.push(encode_vector(q as u32, &coords));
                basis = field.mul_code(basis, field.generator_code());
            }
        }
        let name = format!("gf({})^{}", q, dim);
        Ok(Group::assemble(name, Realization::Vector { field, dim }, order, 0, gens))
    }

    pub fn direct_product(left: &Arc<Group>, right: &Arc<Group>) -> Result<Arc<Group>> {
        let order = left.order.saturating_mul(right.order);
        check_cap(order)?;
        let nb = right.order as Elem;
        let identity = left.identity * nb + right.identity;
        let mut gens: Vec<Elem> = left.generators.iter().map(|&a| a * nb + right.identity).collect();
        gens.extend(right.generators.iter().map(|&b| left.identity * nb + b));
        let name = format!("{} x {}", left.name, right.name);
        Ok(Group::assemble(
            name,
            Realization::Direct { left: left.clone(), right: right.clone() },
            order,
            identity,
            gens,
        ))
    }

    pub fn semidirect_product(action: Arc<AutomorphismAction>) -> Result<Arc<Group>> {
        let k = action.target().clone();
        let h = action.acting().clone();
        let order = k.order.saturating_mul(h.order);
        check_cap(order)?;
        let nh = h.order as Elem;
        let identity = k.identity * nh + h.identity;
        let mut gens: Vec<Elem> = k.generators.iter().map(|&a| a * nh + h.identity).collect();
        gens.extend(h.generators.iter().map(|&b| k.identity * nh + b));
        let name = format!("semidirect({}, {})", k.name, h.name);
        Ok(Group::assemble(name, Realization::Semidirect { action }, order, identity, gens))
    }

    /// Realizes `parent / N` given the coset partition (normality is the
    /// caller's responsibility; see [`super::Subgroup::quotient`]).
    pub(crate) fn quotient_from_cosets(
        name: String,
        parent: &Arc<Group>,
        coset_of: Vec<Elem>,
        reps: Vec<Elem>,
    ) -> Arc<Group> {
        let order = reps.len();
        let identity = coset_of[parent.identity as usize];
        let gens = parent.generators.iter().map(|&g| coset_of[g as usize]).collect();
        Group::assemble(name, Realization::Quotient { parent: parent.clone(), coset_of, reps }, order, identity, gens)
    }

    /// Standalone group on a sorted member list closed under multiplication.
    pub(crate) fn from_members(name: String, parent: &Arc<Group>, members: Vec<Elem>, gens: &[Elem]) -> Arc<Group> {
        let mut position = vec![Elem::MAX; parent.order];
        for (i, &m) in members.iter().enumerate() {
            position[m as usize] = i as Elem;
        }
        let order = members.len();
        let identity = position[parent.identity as usize];
        let generators = gens.iter().map(|&g| position[g as usize]).collect();
        Group::assemble(name, Realization::Sub { parent: parent.clone(), members, position }, order, identity, generators)
    }

    // ---------------------------------------------------------------
    // arithmetic
    // ---------------------------------------------------------------

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(self: &Arc<Self>, name: &str) -> Arc<Group> {
        // cheap rename: rebuild the thin wrapper around the same data
        Arc::new(Group {
            name: name.to_string(),
            realization: self.realization.clone_shallow(),
            order: self.order,
            identity: self.identity,
            generators: self.generators.clone(),
            inverses: self.inverses.clone(),
            cayley: self.cayley.clone(),
            element_orders: self.element_orders.clone(),
            classes: self.classes.clone(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.cayley {
            Some(t) => t[a as usize * self.order + b as usize],
            None => self.mul_raw(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a as usize]
    }

    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        let mut base = if e < 0 { self.inv(a) } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    fn mul_raw(&self, a: Elem, b: Elem) -> Elem {
        match &self.realization {
            Realization::Perm { perms, index, .. } => index[&perms[a as usize].then(&perms[b as usize])],
            Realization::Matrix { field, mats, index } => index[&mat_mul(field, &mats[a as usize], &mats[b as usize])],
            Realization::Vector { field, dim } => {
                let q = field.order();
                let (mut x, mut y) = (a, b);
                let mut out = 0;
                let mut scale = 1;
                for _ in 0..*dim {
                    out += field.add_code(x % q, y % q) * scale;
                    x /= q;
                    y /= q;
                    scale *= q;
                }
                out
            }
            Realization::Direct { left, right } => {
                let nb = right.order as Elem;
                left.mul(a / nb, b / nb) * nb + right.mul(a % nb, b % nb)
            }
            Realization::Semidirect { action } => {
                let k = action.target();
                let h = action.acting();
                let nh = h.order as Elem;
                let (k1, h1, k2, h2) = (a / nh, a % nh, b / nh, b % nh);
                k.mul(k1, action.apply(h1, k2)) * nh + h.mul(h1, h2)
            }
            Realization::Quotient { parent, coset_of, reps } => {
                coset_of[parent.mul(reps[a as usize], reps[b as usize]) as usize]
            }
            Realization::Sub { parent, members, position } => {
                position[parent.mul(members[a as usize], members[b as usize]) as usize]
            }
        }
    }

    fn inv_raw(&self, a: Elem) -> Elem {
        match &self.realization {
            Realization::Perm { perms, index, .. } => index[&perms[a as usize].inverse()],
            Realization::Matrix { field, mats, index } => {
                let [p, q, r, s] = mats[a as usize];
                let det_inv = field.inv_code(mat_det(field, &mats[a as usize])).unwrap();
                let m = [
                    field.mul_code(s, det_inv),
                    field.mul_code(field.neg_code(q), det_inv),
                    field.mul_code(field.neg_code(r), det_inv),
                    field.mul_code(p, det_inv),
                ];
                index[&m]
            }
            Realization::Vector { field, dim } => {
                let q = field.order();
                let mut x = a;
                let mut out = 0;
                let mut scale = 1;
                for _ in 0..*dim {
                    out += field.neg_code(x % q) * scale;
                    x /= q;
                    scale *= q;
                }
                out
            }
            Realization::Direct { left, right } => {
                let nb = right.order as Elem;
                left.inv(a / nb) * nb + right.inv(a % nb)
            }
            Realization::Semidirect { action } => {
                let k = action.target();
                let h = action.acting();
                let nh = h.order as Elem;
                let (k1, h1) = (a / nh, a % nh);
                let hi = h.inv(h1);
                k.mul(k.identity, action.apply(hi, k.inv(k1))) * nh + hi
            }
            Realization::Quotient { parent, coset_of, reps } => coset_of[parent.inv(reps[a as usize]) as usize],
            Realization::Sub { parent, members, position } => position[parent.inv(members[a as usize]) as usize],
        }
    }

    // ---------------------------------------------------------------
    // cached invariants
    // ---------------------------------------------------------------

    /// Orders of all elements, indexed by element.
    pub fn element_orders(&self) -> &[u32] {
        self.element_orders.get_or_init(|| {
            let n = self.order;
            let mut ord = vec![0u32; n];
            ord[self.identity as usize] = 1;
            let mut powers = Vec::new();
            for x in 0..n as Elem {
                if ord[x as usize] != 0 {
                    continue;
                }
                powers.clear();
                let mut y = x;
                while y != self.identity {
                    powers.push(y);
                    y = self.mul(y, x);
                }
                let o = powers.len() as u64 + 1;
                for (i, &z) in powers.iter().enumerate() {
                    let k = i as u64 + 1;
                    ord[z as usize] = (o / gcd(o, k)) as u32;
                }
            }
            ord
        })
    }

    pub fn element_order(&self, x: Elem) -> u32 {
        self.element_orders()[x as usize]
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let n = self.order;
            let mut class_of = vec![u32::MAX; n];
            let mut classes = Vec::new();
            for x in 0..n as Elem {
                if class_of[x as usize] != u32::MAX {
                    continue;
                }
                let id = classes.len() as u32;
                let mut members = vec![x];
                class_of[x as usize] = id;
                let mut i = 0;
                while i < members.len() {
                    let y = members[i];
                    i += 1;
                    for &g in &self.generators {
                        let z = self.conj(y, g);
                        if class_of[z as usize] == u32::MAX {
                            class_of[z as usize] = id;
                            members.push(z);
                        }
                    }
                }
                members.sort_unstable();
                classes.push(members);
            }
            ConjugacyClasses { class_of, classes }
        })
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Element order histogram as sorted `(order, count)` pairs.
    pub fn order_histogram(&self) -> std::collections::BTreeMap<u32, usize> {
        let mut h = std::collections::BTreeMap::new();
        for &o in self.element_orders() {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }

    pub fn exponent(&self) -> u64 {
        self.element_orders().iter().fold(1u64, |acc, &o| crate::arith::lcm(acc, o as u64))
    }

    // ---------------------------------------------------------------
    // realization-specific access
    // ---------------------------------------------------------------

    pub fn as_permutation(&self, x: Elem) -> Option<&Perm> {
        match &self.realization {
            Realization::Perm { perms, .. } => Some(&perms[x as usize]),
            _ => None,
        }
    }

    pub fn permutation_degree(&self) -> Option<usize> {
        match &self.realization {
            Realization::Perm { degree, .. } => Some(*degree),
            _ => None,
        }
    }

    pub fn find_permutation(&self, p: &Perm) -> Option<Elem> {
        match &self.realization {
            Realization::Perm { index, .. } => index.get(p).copied(),
            _ => None,
        }
    }

    pub fn as_matrix(&self, x: Elem) -> Option<[u32; 4]> {
        match &self.realization {
            Realization::Matrix { mats, .. } => Some(mats[x as usize]),
            _ => None,
        }
    }

    pub fn find_matrix(&self, m: &[u32; 4]) -> Option<Elem> {
        match &self.realization {
            Realization::Matrix { index, .. } => index.get(m).copied(),
            _ => None,
        }
    }

    pub fn field(&self) -> Option<&Arc<FiniteField>> {
        match &self.realization {
            Realization::Matrix { field, .. } | Realization::Vector { field, .. } => Some(field),
            _ => None,
        }
    }

    pub fn vector_coords(&self, x: Elem) -> Option<Vec<u32>> {
        match &self.realization {
            Realization::Vector { field, dim } => Some(decode_vector(field.order(), *dim, x)),
            _ => None,
        }
    }

    pub fn vector_from_coords(&self, coords: &[u32]) -> Option<Elem> {
        match &self.realization {
            Realization::Vector { field, dim } if coords.len() == *dim => Some(encode_vector(field.order(), coords)),
            _ => None,
        }
    }

    /// Factors of a direct product.
    pub fn direct_factors(&self) -> Option<(&Arc<Group>, &Arc<Group>)> {
        match &self.realization {
            Realization::Direct { left, right } => Some((left, right)),
            _ => None,
        }
    }

    pub fn direct_pair(&self, a: Elem, b: Elem) -> Option<Elem> {
        let (_, right) = self.direct_factors()?;
        Some(a * right.order as Elem + b)
    }

    pub fn direct_split(&self, x: Elem) -> Option<(Elem, Elem)> {
        let (_, right) = self.direct_factors()?;
        let nb = right.order as Elem;
        Some((x / nb, x % nb))
    }

    pub fn semidirect_action(&self) -> Option<&Arc<AutomorphismAction>> {
        match &self.realization {
            Realization::Semidirect { action } => Some(action),
            _ => None,
        }
    }

    pub fn semidirect_pair(&self, k: Elem, h: Elem) -> Option<Elem> {
        let action = self.semidirect_action()?;
        Some(k * action.acting().order as Elem + h)
    }

    pub fn semidirect_split(&self, x: Elem) -> Option<(Elem, Elem)> {
        let action = self.semidirect_action()?;
        let nh = action.acting().order as Elem;
        Some((x / nh, x % nh))
    }

    /// Parent element of a subgroup realization.
    pub fn sub_parent(&self) -> Option<(&Arc<Group>, &[Elem])> {
        match &self.realization {
            Realization::Sub { parent, members, .. } => Some((parent, members)),
            _ => None,
        }
    }

    /// Coset representative of a quotient element.
    pub fn quotient_parent(&self) -> Option<(&Arc<Group>, &[Elem], &[Elem])> {
        match &self.realization {
            Realization::Quotient { parent, coset_of, reps } => Some((parent, coset_of, reps)),
            _ => None,
        }
    }

    /// Human-readable payload of an element.
    pub fn format_element(&self, x: Elem) -> String {
        match &self.realization {
            Realization::Perm { perms, .. } => perms[x as usize].to_string(),
            Realization::Matrix { field, mats, .. } => {
                let m = mats[x as usize];
                let f = |c: u32| field.format_code(c);
                format!("[[{},{}],[{},{}]]", f(m[0]), f(m[1]), f(m[2]), f(m[3]))
            }
            Realization::Vector { field, dim } => {
                let c: Vec<String> =
                    decode_vector(field.order(), *dim, x).into_iter().map(|c| field.format_code(c)).collect();
                format!("({})", c.join(","))
            }
            Realization::Direct { left, right } => {
                let nb = right.order as Elem;
                format!("<{}; {}>", left.format_element(x / nb), right.format_element(x % nb))
            }
            Realization::Semidirect { action } => {
                let nh = action.acting().order as Elem;
                format!(
                    "<{} | {}>",
                    action.target().format_element(x / nh),
                    action.acting().format_element(x % nh)
                )
            }
            Realization::Quotient { parent, reps, .. } => format!("{}N", parent.format_element(reps[x as usize])),
            Realization::Sub { parent, members, .. } => parent.format_element(members[x as usize]),
        }
    }
}

impl Realization {
    fn clone_shallow(&self) -> Realization {
        match self {
            Realization::Perm { degree, perms, index } => {
                Realization::Perm { degree: *degree, perms: perms.clone(), index: index.clone() }
            }
            Realization::Matrix { field, mats, index } => {
                Realization::Matrix { field: field.clone(), mats: mats.clone(), index: index.clone() }
            }
            Realization::Vector { field, dim } => Realization::Vector { field: field.clone(), dim: *dim },
            Realization::Direct { left, right } => Realization::Direct { left: left.clone(), right: right.clone() },
            Realization::Semidirect { action } => Realization::Semidirect { action: action.clone() },
            Realization::Quotient { parent, coset_of, reps } => {
                Realization::Quotient { parent: parent.clone(), coset_of: coset_of.clone(), reps: reps.clone() }
            }
            Realization::Sub { parent, members, position } => {
                Realization::Sub { parent: parent.clone(), members: members.clone(), position: position.clone() }
            }
        }
    }
}

impl FiniteField {
    /// Code of the polynomial `t` (or `1` in a prime field).
    pub fn generator_code(&self) -> u32 {
        if self.degree() == 1 {
            1
        } else {
            self.characteristic()
        }
    }
}

pub fn mat_mul(f: &FiniteField, x: &[u32; 4], y: &[u32; 4]) -> [u32; 4] {
    let m = |a, b| f.mul_code(a, b);
    let s = |a, b| f.add_code(a, b);
    [
        s(m(x[0], y[0]), m(x[1], y[2])),
        s(m(x[0], y[1]), m(x[1], y[3])),
        s(m(x[2], y[0]), m(x[3], y[2])),
        s(m(x[2], y[1]), m(x[3], y[3])),
    ]
}

pub fn mat_det(f: &FiniteField, x: &[u32; 4]) -> u32 {
    f.sub_code(f.mul_code(x[0], x[3]), f.mul_code(x[1], x[2]))
}

pub fn mat_inv(f: &FiniteField, x: &[u32; 4]) -> Option<[u32; 4]> {
    let d = f.inv_code(mat_det(f, x)).ok()?;
    Some([
        f.mul_code(x[3], d),
        f.mul_code(f.neg_code(x[1]), d),
        f.mul_code(f.neg_code(x[2]), d),
        f.mul_code(x[0], d),
    ])
}

/// Row vector times matrix.
pub fn vec_mat(f: &FiniteField, v: &[u32; 2], m: &[u32; 4]) -> [u32; 2] {
    [
        f.add_code(f.mul_code(v[0], m[0]), f.mul_code(v[1], m[2])),
        f.add_code(f.mul_code(v[0], m[1]), f.mul_code(v[1], m[3])),
    ]
}

pub(crate) fn encode_vector(q: u32, coords: &[u32]) -> Elem {
    coords.iter().fold(0, |acc, &c| acc * q + c)
}

pub(crate) fn decode_vector(q: u32, dim: usize, mut x: Elem) -> Vec<u32> {
    let mut c = vec![0; dim];
    for i in (0..dim).rev() {
        c[i] = x % q;
        x /= q;
    }
    c
}
