//! Finitely generated permutation groups with brute-force materialization.
//!
//! Every subgroup operation that needs the element list is gated on a
//! configurable order cap (default 10^5, enough for everything up to M12).
//! Orbit and block computations work on generators alone and carry no cap.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{Permutation, PermutationJson};
use crate::error::{Error, Result};

/// Default materialization cap: covers every named group up to M12 (95040).
pub const DEFAULT_ORDER_CAP: usize = 100_000;

/// A permutation group given by generators on a fixed point set.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    cap: usize,
    elements: OnceLock<Result<Vec<Permutation>>>,
    element_index: OnceLock<HashMap<Permutation, usize>>,
}

impl PermGroup {
    /// Group generated by `generators` (the trivial group if empty needs an
    /// explicit degree, see [`PermGroup::trivial`]).
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => {
                return Err(Error::InvalidArgument(
                    "generator list empty; use PermGroup::trivial(degree)".into(),
                ))
            }
        };
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            cap: DEFAULT_ORDER_CAP,
            elements: OnceLock::new(),
            element_index: OnceLock::new(),
        })
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: vec![Permutation::identity(degree)],
            cap: DEFAULT_ORDER_CAP,
            elements: OnceLock::new(),
            element_index: OnceLock::new(),
        }
    }

    /// Same group with a different materialization cap.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self.elements = OnceLock::new();
        self.element_index = OnceLock::new();
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Full element list via breadth-first closure, in a deterministic
    /// discovery order starting from the identity. Errors once the cap is hit.
    pub fn elements(&self) -> Result<&[Permutation]> {
        let res = self.elements.get_or_init(|| {
            let mut order_list = vec![Permutation::identity(self.degree)];
            let mut seen: HashSet<Permutation> = order_list.iter().cloned().collect();
            let mut frontier = 0;
            while frontier < order_list.len() {
                let current = order_list[frontier].clone();
                frontier += 1;
                for g in &self.generators {
                    let next = current.compose(g).expect("equal degrees");
                    if seen.insert(next.clone()) {
                        if order_list.len() >= self.cap {
                            return Err(Error::CapExceeded { cap: self.cap });
                        }
                        order_list.push(next);
                    }
                }
            }
            Ok(order_list)
        });
        match res {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    /// Group order (materializes).
    pub fn order(&self) -> Result<usize> {
        Ok(self.elements()?.len())
    }

    fn index_map(&self) -> Result<&HashMap<Permutation, usize>> {
        let elements = self.elements()?;
        Ok(self.element_index.get_or_init(|| {
            elements
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i))
                .collect()
        }))
    }

    /// Membership test (materializes).
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Ok(false);
        }
        Ok(self.index_map()?.contains_key(p))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Orbit partition, each orbit sorted, orbits ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(&self.generators, self.degree)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Orbit of one point.
    pub fn orbit_of(&self, x: usize) -> Vec<usize> {
        let mut orbit = vec![x];
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut frontier = 0;
        while frontier < orbit.len() {
            let p = orbit[frontier];
            frontier += 1;
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// All minimal nontrivial block systems of a transitive group, via the
    /// classical union-find algorithm seeded by the point pairs (0, x).
    ///
    /// Every nontrivial system coarsens some minimal one, so "no minimal
    /// system" is equivalent to primitivity.
    pub fn minimal_block_systems(&self) -> Result<Vec<Vec<Vec<usize>>>> {
        if !self.is_transitive() {
            return Err(Error::Intransitive);
        }
        let n = self.degree;
        let mut seeded = Vec::new();
        let mut seen_systems: HashSet<Vec<Vec<usize>>> = HashSet::new();
        for other in 1..n {
            if let Some(blocks) = self.block_system_from_seed(0, other) {
                if seen_systems.insert(blocks.clone()) {
                    seeded.push(blocks);
                }
            }
        }
        // A seeded system is the finest one joining its pair; keep only the
        // inclusion-minimal ones.
        let refines = |fine: &Vec<Vec<usize>>, coarse: &Vec<Vec<usize>>| -> bool {
            fine.iter().all(|fb| {
                coarse
                    .iter()
                    .any(|cb| fb.iter().all(|p| cb.binary_search(p).is_ok()))
            })
        };
        let minimal: Vec<Vec<Vec<usize>>> = seeded
            .iter()
            .filter(|sys| {
                !seeded
                    .iter()
                    .any(|other| other != *sys && refines(other, sys))
            })
            .cloned()
            .collect();
        Ok(minimal)
    }

    /// Finest block system whose block containing `a` also contains `b`;
    /// `None` when that system is the trivial one-block system.
    fn block_system_from_seed(&self, a: usize, b: usize) -> Option<Vec<Vec<usize>>> {
        let n = self.degree;
        let mut dsu = DisjointSets::new(n);
        let mut queue = vec![(a, b)];
        dsu.union(a, b);
        while let Some((x, y)) = queue.pop() {
            for g in &self.generators {
                let (gx, gy) = (g.apply(x), g.apply(y));
                if dsu.union(gx, gy) {
                    queue.push((gx, gy));
                }
            }
        }
        let mut buckets: HashMap<usize, Vec<usize>> = HashMap::new();
        for x in 0..n {
            buckets.entry(dsu.find(x)).or_default().push(x);
        }
        if buckets.len() == 1 {
            return None;
        }
        let mut blocks: Vec<Vec<usize>> = buckets.into_values().collect();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        Some(blocks)
    }

    /// Primitivity: transitive with no nontrivial block system.
    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.minimal_block_systems()?.is_empty())
    }

    /// Double transitivity: the stabilizer of a point is transitive on the
    /// remaining points.
    pub fn is_2transitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::Intransitive);
        }
        if self.degree == 1 {
            return Ok(true);
        }
        let stab = self.stabilizer(0)?;
        let orbits = stab.orbits();
        // Orbits other than {0} must merge into one.
        Ok(orbits.len() == 2)
    }

    /// Point stabilizer, with the full element list as generating set.
    pub fn stabilizer(&self, x: usize) -> Result<PermGroup> {
        let elems: Vec<Permutation> = self
            .elements()?
            .iter()
            .filter(|p| p.apply(x) == x)
            .cloned()
            .collect();
        Self::from_element_list(self.degree, elems, self.cap)
    }

    /// Setwise stabilizer of a point set.
    pub fn setwise_stabilizer(&self, set: &[usize]) -> Result<PermGroup> {
        let member: HashSet<usize> = set.iter().copied().collect();
        let elems: Vec<Permutation> = self
            .elements()?
            .iter()
            .filter(|p| set.iter().all(|&s| member.contains(&p.apply(s))))
            .cloned()
            .collect();
        Self::from_element_list(self.degree, elems, self.cap)
    }

    fn from_element_list(degree: usize, elems: Vec<Permutation>, cap: usize) -> Result<PermGroup> {
        if elems.is_empty() {
            return Err(Error::Internal("element list without identity".into()));
        }
        Ok(PermGroup {
            degree,
            generators: elems,
            cap,
            elements: OnceLock::new(),
            element_index: OnceLock::new(),
        })
    }

    /// Subgroup generated by the given elements, inheriting the cap.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        let gens = if gens.is_empty() {
            vec![Permutation::identity(self.degree)]
        } else {
            gens
        };
        Ok(PermGroup::new(gens)?.with_cap(self.cap))
    }

    /// Normalizer `N_self(h)` by brute force over the elements of `self`.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        let h_set: HashSet<&Permutation> = h.elements()?.iter().collect();
        let elems: Vec<Permutation> = self
            .elements()?
            .iter()
            .filter(|a| {
                h.generators()
                    .iter()
                    .all(|g| match g.conjugate_by(a) {
                        Ok(c) => h_set.contains(&c),
                        Err(_) => false,
                    })
            })
            .cloned()
            .collect();
        Self::from_element_list(self.degree, elems, self.cap)
    }

    /// Whether `n` is a normal subgroup of `self`.
    pub fn is_normal(&self, n: &PermGroup) -> Result<bool> {
        if !self.contains_group(n)? {
            return Err(Error::NotASubgroup("candidate normal subgroup".into()));
        }
        let n_set: HashSet<&Permutation> = n.elements()?.iter().collect();
        for a in self.generators() {
            for g in n.generators() {
                if !n_set.contains(&g.conjugate_by(a)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// |N·H| = |N|·|H| / |N ∩ H| for subgroups `n`, `h` of `self`.
    pub fn product_size(&self, n: &PermGroup, h: &PermGroup) -> Result<usize> {
        if !self.contains_group(n)? || !self.contains_group(h)? {
            return Err(Error::NotASubgroup("product factor".into()));
        }
        let h_set: HashSet<&Permutation> = h.elements()?.iter().collect();
        let common = n
            .elements()?
            .iter()
            .filter(|p| h_set.contains(*p))
            .count();
        Ok(n.order()? * h.order()? / common)
    }

    /// Commutator subgroup: normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a
                    .inverse()
                    .compose(&b.inverse())?
                    .compose(a)?
                    .compose(b)?;
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Smallest normal subgroup of `self` containing `seeds`.
    ///
    /// Grows a generating set: close the seeds into a subgroup, then add any
    /// generator conjugate that escapes, until conjugation-stable.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        let mut gens: Vec<Permutation> = seeds
            .iter()
            .filter(|s| !s.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return Ok(PermGroup::trivial(self.degree).with_cap(self.cap));
        }
        loop {
            let h = PermGroup::new(gens.clone())?.with_cap(self.cap);
            h.elements()?;
            let mut escaped: Option<Permutation> = None;
            'search: for g in &gens {
                for a in &self.generators {
                    let c = g.conjugate_by(a)?;
                    if !h.contains(&c)? {
                        escaped = Some(c);
                        break 'search;
                    }
                }
            }
            match escaped {
                Some(c) => gens.push(c),
                None => return Ok(h),
            }
        }
    }

    /// Whether the group has a subgroup of index 2 (iff |G/G'| is even).
    pub fn has_index2_subgroup(&self) -> Result<bool> {
        let derived = self.derived_subgroup()?;
        Ok((self.order()? / derived.order()?) % 2 == 0)
    }

    /// Whether `self` is simple (every nontrivial conjugacy class generates).
    pub fn is_simple(&self) -> Result<bool> {
        let order = self.order()?;
        if order == 1 {
            return Ok(false);
        }
        for rep in self.class_representatives()? {
            if rep.is_identity() {
                continue;
            }
            if self.normal_closure(std::slice::from_ref(&rep))?.order()? != order {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// One representative per conjugacy class, in element-discovery order
    /// (identity first).
    pub fn class_representatives(&self) -> Result<Vec<Permutation>> {
        Ok(self.conjugacy_class_partition()?.0)
    }

    /// Conjugacy classes: representatives plus the class index per element
    /// (aligned with `elements()`).
    pub fn conjugacy_class_partition(&self) -> Result<(Vec<Permutation>, Vec<usize>)> {
        let elements = self.elements()?;
        let index = self.index_map()?;
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut reps = Vec::new();
        for start in 0..elements.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let class_id = reps.len();
            reps.push(elements[start].clone());
            let mut queue = vec![start];
            class_of[start] = class_id;
            while let Some(i) = queue.pop() {
                for g in &self.generators {
                    let conj = elements[i].conjugate_by(g).expect("equal degrees");
                    let j = index[&conj];
                    if class_of[j] == usize::MAX {
                        class_of[j] = class_id;
                        queue.push(j);
                    }
                }
            }
        }
        Ok((reps, class_of))
    }

    /// All normal subgroups, computed as joins of conjugacy-class closures.
    pub fn normal_subgroups(&self) -> Result<Vec<PermGroup>> {
        let order = self.order()?;
        let mut closures: Vec<PermGroup> = vec![PermGroup::trivial(self.degree).with_cap(self.cap)];
        for rep in self.class_representatives()? {
            if rep.is_identity() {
                continue;
            }
            closures.push(self.normal_closure(std::slice::from_ref(&rep))?);
        }
        // Join pairs to a fixed point; every normal subgroup is a join of the
        // class closures it contains.
        let mut all: Vec<PermGroup> = Vec::new();
        let mut seen_orders: HashSet<Vec<usize>> = HashSet::new();
        let signature = |g: &PermGroup| -> Result<Vec<usize>> {
            let mut sig: Vec<usize> = g
                .elements()?
                .iter()
                .map(|p| self.index_map().map(|m| m[p]))
                .collect::<Result<Vec<_>>>()?;
            sig.sort_unstable();
            Ok(sig)
        };
        for c in closures {
            if seen_orders.insert(signature(&c)?) {
                all.push(c);
            }
        }
        loop {
            let mut added = false;
            let snapshot = all.clone();
            for a in &snapshot {
                for b in &snapshot {
                    if a.order()? == order || b.order()? == order {
                        continue;
                    }
                    let mut gens = a.generators().to_vec();
                    gens.extend_from_slice(b.generators());
                    let join = self.normal_closure(&gens)?;
                    if seen_orders.insert(signature(&join)?) {
                        all.push(join);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        all.sort_by_key(|g| g.order().unwrap_or(usize::MAX));
        Ok(all)
    }

    /// A maximal proper normal subgroup (largest proper entry of the normal
    /// subgroup lattice); `None` for the trivial group.
    pub fn maximal_normal_subgroup(&self) -> Result<Option<PermGroup>> {
        let order = self.order()?;
        if order == 1 {
            return Ok(None);
        }
        let mut best: Option<PermGroup> = None;
        for n in self.normal_subgroups()? {
            let n_order = n.order()?;
            if n_order < order && best.as_ref().map_or(true, |b| b.order().unwrap() < n_order) {
                best = Some(n);
            }
        }
        Ok(best)
    }

    /// Element orders of the quotient `self / n` (n normal), as a sorted
    /// multiset-free list of distinct orders.
    pub fn quotient_order_spectrum(&self, n: &PermGroup) -> Result<Vec<usize>> {
        let n_set: HashSet<&Permutation> = n.elements()?.iter().collect();
        let mut spectrum: HashSet<usize> = HashSet::new();
        for g in self.elements()? {
            let full_order = g.order();
            let mut quotient_order = full_order;
            // Order of gN divides order of g: minimal divisor d with g^d ∈ N.
            for d in divisors(full_order) {
                if n_set.contains(&g.pow(d as i64)) {
                    quotient_order = d;
                    break;
                }
            }
            spectrum.insert(quotient_order);
        }
        let mut out: Vec<usize> = spectrum.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Composition factors as (order, spectrum) pairs, by repeatedly
    /// extracting a maximal proper normal subgroup.
    pub fn composition_factor_data(&self) -> Result<Vec<(usize, Vec<usize>)>> {
        let mut factors = Vec::new();
        let mut current = self.clone();
        while current.order()? > 1 {
            let max_normal = current
                .maximal_normal_subgroup()?
                .expect("nontrivial group has a maximal normal subgroup");
            let quotient_order = current.order()? / max_normal.order()?;
            let spectrum = current.quotient_order_spectrum(&max_normal)?;
            factors.push((quotient_order, spectrum));
            current = max_normal;
        }
        Ok(factors)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, {} generators)",
            self.degree,
            self.generators.len()
        )
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx.max(ry)] = rx.min(ry);
        true
    }
}

/// Orbit partition of a generator list on `0..degree`.
pub fn orbits_of(generators: &[Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut orbits = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut frontier = 0;
        while frontier < orbit.len() {
            let p = orbit[frontier];
            frontier += 1;
            for g in generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

fn divisors(n: usize) -> Vec<usize> {
    let mut divs = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            divs.push(d);
        }
    }
    divs
}

/// JSON form of a group: degree plus generator list.
#[derive(Serialize, Deserialize)]
pub struct PermGroupJson {
    pub degree: usize,
    pub generators: Vec<PermutationJson>,
}

impl PermGroupJson {
    pub fn into_group(self) -> Result<PermGroup> {
        if self.generators.is_empty() {
            return Ok(PermGroup::trivial(self.degree));
        }
        let gens = self
            .generators
            .into_iter()
            .map(|g| g.into_permutation(self.degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(gens)
    }

    pub fn from_group(g: &PermGroup) -> Self {
        PermGroupJson {
            degree: g.degree(),
            generators: g
                .generators()
                .iter()
                .map(|p| PermutationJson::Cycles(p.to_cycle_string()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(
            gens.iter()
                .map(|s| Permutation::parse_cycles(degree, s).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(group(3, &["(0 1)", "(0 1 2)"]).order().unwrap(), 6);
        assert_eq!(group(4, &["(0 1 2 3)"]).order().unwrap(), 4);
        // A_5 by brute-force closure.
        assert_eq!(group(5, &["(0 1 2 3 4)", "(0 1 2)"]).order().unwrap(), 60);
    }

    #[test]
    fn cap_is_enforced() {
        let g = group(5, &["(0 1)", "(0 1 2 3 4)"]).with_cap(50);
        assert!(matches!(g.order(), Err(Error::CapExceeded { cap: 50 })));
    }

    #[test]
    fn orbit_partition() {
        let g = group(4, &["(0 1)"]);
        assert_eq!(g.orbits(), vec![vec![0, 1], vec![2], vec![3]]);
        assert!(group(4, &["(0 1 2 3)"]).is_transitive());
    }

    #[test]
    fn blocks_of_c4() {
        let g = group(4, &["(0 1 2 3)"]);
        let systems = g.minimal_block_systems().unwrap();
        assert_eq!(systems, vec![vec![vec![0, 2], vec![1, 3]]]);
        assert!(!g.is_primitive().unwrap());
    }

    #[test]
    fn s4_is_primitive_and_2transitive() {
        let g = group(4, &["(0 1)", "(0 1 2 3)"]);
        assert!(g.is_primitive().unwrap());
        assert!(g.is_2transitive().unwrap());
        assert!(!group(4, &["(0 1 2 3)"]).is_2transitive().unwrap());
    }

    #[test]
    fn grid_group_has_row_and_column_systems() {
        // S_3 × S_3 acting on the 3×3 grid (point 3i+j).
        let g = group(
            9,
            &[
                "(3 6)(4 7)(5 8)",
                "(0 3 6)(1 4 7)(2 5 8)",
                "(1 2)(4 5)(7 8)",
                "(0 1 2)(3 4 5)(6 7 8)",
            ],
        );
        assert_eq!(g.order().unwrap(), 36);
        let systems = g.minimal_block_systems().unwrap();
        assert_eq!(systems.len(), 2);
        assert!(systems.contains(&vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]));
        assert!(systems.contains(&vec![vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]));
    }

    #[test]
    fn stabilizers() {
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        let stab = s3.stabilizer(0).unwrap();
        assert_eq!(stab.order().unwrap(), 2);
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        assert_eq!(s4.setwise_stabilizer(&[0, 1]).unwrap().order().unwrap(), 4);
        let c5 = group(5, &["(0 1 2 3 4)"]);
        assert_eq!(c5.stabilizer(2).unwrap().order().unwrap(), 1);
    }

    #[test]
    fn normalizers_and_products() {
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        let a3 = group(3, &["(0 1 2)"]);
        assert_eq!(s3.normalizer(&a3).unwrap().order().unwrap(), 6);
        assert!(s3.is_normal(&a3).unwrap());

        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let h = group(4, &["(0 1)"]);
        assert_eq!(s4.normalizer(&h).unwrap().order().unwrap(), 4);
        assert_eq!(s4.product_size(&h, &h).unwrap(), 2);
        let v4 = group(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        assert_eq!(s4.product_size(&v4, &h).unwrap(), 8);
    }

    #[test]
    fn derived_subgroups_and_index2() {
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        assert_eq!(s3.derived_subgroup().unwrap().order().unwrap(), 3);
        assert!(s3.has_index2_subgroup().unwrap());

        let a5 = group(5, &["(0 1 2 3 4)", "(0 1 2)"]);
        assert_eq!(a5.derived_subgroup().unwrap().order().unwrap(), 60);
        assert!(!a5.has_index2_subgroup().unwrap());
        assert!(a5.is_simple().unwrap());

        let c6 = group(6, &["(0 1 2 3 4 5)"]);
        assert!(c6.has_index2_subgroup().unwrap());
    }

    #[test]
    fn conjugacy_classes_of_s3() {
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        let (reps, class_of) = s3.conjugacy_class_partition().unwrap();
        assert_eq!(reps.len(), 3);
        let mut sizes = vec![0usize; reps.len()];
        for c in class_of {
            sizes[c] += 1;
        }
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn normal_subgroups_of_s4() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let normals = s4.normal_subgroups().unwrap();
        let mut orders: Vec<usize> = normals.iter().map(|n| n.order().unwrap()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }

    #[test]
    fn composition_factors_of_s4() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let factors = s4.composition_factor_data().unwrap();
        let orders: Vec<usize> = factors.iter().map(|f| f.0).collect();
        assert_eq!(orders, vec![2, 3, 2, 2]);
    }

    #[test]
    fn lagrange_on_s4_subgroups() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let order = s4.order().unwrap();
        for x in 0..4 {
            assert_eq!(order % s4.stabilizer(x).unwrap().order().unwrap(), 0);
        }
        for n in s4.normal_subgroups().unwrap() {
            assert_eq!(order % n.order().unwrap(), 0);
        }
    }
}
