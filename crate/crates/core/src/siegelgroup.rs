//! Group-level structure of Siegel-function monodromy: the primitivity
//! transfer theorem for normal subgroups with an almost-transitive cyclic
//! subgroup, its counterexample family, the wreath-product maximal
//! intransitive subgroup, and functional decompositions read off block
//! systems.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{
    wreath_product, Action, ActionTarget, GroupId, PermGroup, Permutation, WreathMode,
};

/// Instance data for the primitivity-transfer theorem: a primitive ambient
/// group A, a nontrivial normal subgroup G, and a cyclic I ≤ G.
#[derive(Clone)]
pub struct AgdiInstance {
    pub ambient: PermGroup,
    pub normal: PermGroup,
    pub cyclic_generator: Permutation,
}

/// Evaluation of the two hypotheses.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct AgdiHypotheses {
    /// (a) I has at most two orbits.
    pub a_holds: bool,
    /// (b) A = G·N_A(I).
    pub b_holds: bool,
}

impl AgdiInstance {
    /// Validates degrees, normality and containment of the generator.
    pub fn new(
        ambient: PermGroup,
        normal: PermGroup,
        cyclic_generator: Permutation,
    ) -> Result<AgdiInstance> {
        if !ambient.is_normal(&normal)? {
            return Err(Error::InvalidArgument("G is not normal in A".into()));
        }
        if normal.order()? <= 1 {
            return Err(Error::InvalidArgument("G must be nontrivial".into()));
        }
        if !normal.contains(&cyclic_generator)? {
            return Err(Error::NotASubgroup("I outside G".into()));
        }
        Ok(AgdiInstance {
            ambient,
            normal,
            cyclic_generator,
        })
    }

    fn inertia(&self) -> Result<PermGroup> {
        self.ambient.subgroup(vec![self.cyclic_generator.clone()])
    }
}

/// Evaluates hypotheses (a) and (b): orbit count of I, and |G·N_A(I)| = |A|.
pub fn agdi_hypotheses(instance: &AgdiInstance) -> Result<AgdiHypotheses> {
    let inertia = instance.inertia()?;
    let a_holds = inertia.orbits().len() <= 2;
    let normalizer = instance.ambient.normalizer(&inertia)?;
    let product = instance
        .ambient
        .product_size(&instance.normal, &normalizer)?;
    let b_holds = product == instance.ambient.order()?;
    Ok(AgdiHypotheses { a_holds, b_holds })
}

/// Checks the conclusion: with A primitive and both hypotheses, G must act
/// primitively as well. A `false` return on validated hypotheses would be
/// an implementation bug, not a mathematical discovery.
pub fn agdi_conclusion(instance: &AgdiInstance) -> Result<bool> {
    if !instance.ambient.is_primitive()? {
        return Err(Error::InvalidArgument("A is not primitive".into()));
    }
    let hypotheses = agdi_hypotheses(instance)?;
    if !hypotheses.a_holds || !hypotheses.b_holds {
        return Err(Error::InvalidArgument(
            "hypotheses (a)/(b) are not satisfied".into(),
        ));
    }
    instance.normal.is_primitive()
}

/// Certificate that indecomposability transfers to the algebraic closure:
/// monodromy-level primitivity of the geometric group.
#[derive(Clone, Debug, Serialize)]
pub struct AbsoluteIndecomposability {
    pub geometric_primitive: bool,
    pub note: String,
}

/// Wraps the conclusion as the functional-indecomposability transfer: if
/// the arithmetic monodromy is primitive and the inertia subgroup at
/// infinity has at most two orbits with A = G·N_A(I), the geometric
/// monodromy is primitive, i.e. indecomposable over the base field implies
/// indecomposable over its algebraic closure.
pub fn absind_transfer(instance: &AgdiInstance) -> Result<AbsoluteIndecomposability> {
    let single_orbit = instance.inertia()?.orbits().len() == 1;
    let primitive = agdi_conclusion(instance)?;
    Ok(AbsoluteIndecomposability {
        geometric_primitive: primitive,
        note: if single_orbit {
            "single-orbit inertia: hypothesis (b) was not needed".into()
        } else {
            "two-orbit inertia with A = G·N_A(I)".into()
        },
    })
}

/// The counterexample family for dropping hypothesis (b): on the m×m grid,
/// A = (S_m × S_m) ⋊ C₂ in the product action, G = S_m × S_m, and
/// I generated by (m-cycle, (m−1)-cycle).
///
/// A is primitive, I has two orbits (sizes m(m−1) and m), (b) fails, and G
/// keeps the row/column block systems.
pub fn build_agdi_counterexample(m: usize) -> Result<AgdiInstance> {
    if m < 3 {
        return Err(Error::InvalidArgument(
            "the counterexample family needs m ≥ 3".into(),
        ));
    }
    let degree = m * m;
    let point = |row: usize, col: usize| row * m + col;
    // S_m acting on rows, S_m acting on columns.
    let mut generators = Vec::new();
    let row_images = |p: &Permutation| -> Permutation {
        let mut images = vec![0; degree];
        for r in 0..m {
            for c in 0..m {
                images[point(r, c)] = point(p.apply(r), c);
            }
        }
        Permutation::from_images(images).expect("bijection")
    };
    let col_images = |p: &Permutation| -> Permutation {
        let mut images = vec![0; degree];
        for r in 0..m {
            for c in 0..m {
                images[point(r, c)] = point(r, p.apply(c));
            }
        }
        Permutation::from_images(images).expect("bijection")
    };
    let s_m = GroupId::Symmetric(m).build()?;
    for g in s_m.generators() {
        generators.push(row_images(g));
        generators.push(col_images(g));
    }
    let normal = PermGroup::new(generators.clone())?;
    let mut flip_images = vec![0; degree];
    for r in 0..m {
        for c in 0..m {
            flip_images[point(r, c)] = point(c, r);
        }
    }
    generators.push(Permutation::from_images(flip_images)?);
    let ambient = PermGroup::new(generators)?;

    let long_row = Permutation::from_cycles(m, &[(0..m).collect()])?;
    let short_col = Permutation::from_cycles(m, &[(0..m - 1).collect()])?;
    let generator = row_images(&long_row)
        .compose(&col_images(&short_col))
        .expect("equal degrees");
    AgdiInstance::new(ambient, normal, generator)
}

/// Product-action analysis of a wreath group: degrees, primitivity, and the
/// maximal intransitive-on-roots subgroup with its length-p orbit.
#[derive(Clone, Debug)]
pub struct WreathMaximalReport {
    /// The wreath product on the disjoint union (degree n·p).
    pub imprimitive: PermGroup,
    /// The same abstract group on tuples (degree n^p).
    pub product: PermGroup,
    pub product_primitive: bool,
    /// The maximal subgroup V: stabilizer of the all-zero tuple, viewed
    /// inside the imprimitive action.
    pub maximal_intransitive: PermGroup,
    /// Orbit lengths of V on the n·p roots.
    pub orbit_lengths: Vec<usize>,
}

/// Builds W = G wr H (G primitive and non-regular, C_p ≤ H ≤ AGL₁(p)) and
/// returns the stabilizer V ≤ W of a product-action point: V is maximal
/// (the product action is primitive), intransitive on the n·p roots, and
/// has one orbit of length exactly p.
pub fn wreath_maximal_intransitive(
    base: &PermGroup,
    top: &PermGroup,
) -> Result<WreathMaximalReport> {
    if !base.is_primitive()? {
        return Err(Error::InvalidArgument("base group must be primitive".into()));
    }
    if base.order()? == base.degree() {
        return Err(Error::InvalidArgument(
            "base group must be non-regular".into(),
        ));
    }
    let p = top.degree();
    let n = base.degree();
    let imprimitive = wreath_product(base, top, WreathMode::Imprimitive)?;
    let product = wreath_product(base, top, WreathMode::Product)?;
    let product_primitive = product.is_primitive()?;

    // The product-action point (0,…,0) corresponds, inside the imprimitive
    // action, to the transversal {(copy b, point 0) : b} of the blocks. Its
    // stabilizer is computed by mapping each element across.
    let imp_elements = imprimitive.elements()?;
    let mut stabilizer_elems = Vec::new();
    for w in imp_elements {
        // Image of the tuple (0,…,0): coordinate b′ = image copy of copy b.
        let mut fixes = true;
        for b in 0..p {
            let image = w.apply(b * n);
            if image % n != 0 {
                fixes = false;
                break;
            }
        }
        if fixes {
            stabilizer_elems.push(w.clone());
        }
    }
    let maximal_intransitive = PermGroup::new(stabilizer_elems)?.with_cap(imprimitive.cap());
    let mut orbit_lengths: Vec<usize> = maximal_intransitive
        .orbits()
        .iter()
        .map(|o| o.len())
        .collect();
    orbit_lengths.sort_unstable();
    Ok(WreathMaximalReport {
        imprimitive,
        product,
        product_primitive,
        maximal_intransitive,
        orbit_lengths,
    })
}

/// Brute-force maximality check: H < G is maximal iff every element outside
/// H generates G together with H.
pub fn is_maximal_subgroup(group: &PermGroup, subgroup: &PermGroup) -> Result<bool> {
    if !group.contains_group(subgroup)? {
        return Err(Error::NotASubgroup("maximality candidate".into()));
    }
    let order = group.order()?;
    if subgroup.order()? == order {
        return Ok(false);
    }
    for w in group.elements()? {
        if subgroup.contains(w)? {
            continue;
        }
        let mut gens = subgroup.generators().to_vec();
        gens.push(w.clone());
        if PermGroup::new(gens)?.with_cap(group.cap()).order()? != order {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A monodromy-level functional decomposition: a block system of the root
/// action, read as g = outer ∘ inner with the given degrees.
#[derive(Clone, Debug, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub outer_degree: usize,
    pub inner_degree: usize,
    /// Whether the block stabilizer restricted to its block is cyclic or
    /// cyclic-by-2 (the solvable shape of a power composition factor).
    pub inner_cyclic_by_2: bool,
}

/// Lists the monodromy-level decompositions of a transitive root action:
/// one per minimal nontrivial block system, empty iff the monodromy is
/// primitive (functionally indecomposable).
pub fn decompositions_via_blocks(monodromy: &PermGroup) -> Result<Vec<BlockDecomposition>> {
    let systems = monodromy.minimal_block_systems()?;
    let mut out = Vec::new();
    for blocks in systems {
        let inner_degree = blocks[0].len();
        let outer_degree = blocks.len();
        let inner_cyclic_by_2 = block_restriction_cyclic_by_2(monodromy, &blocks[0])?;
        out.push(BlockDecomposition {
            blocks,
            outer_degree,
            inner_degree,
            inner_cyclic_by_2,
        });
    }
    Ok(out)
}

/// Whether the setwise stabilizer of `block`, restricted to it, has a
/// cyclic subgroup of index ≤ 2.
fn block_restriction_cyclic_by_2(group: &PermGroup, block: &[usize]) -> Result<bool> {
    let stabilizer = group.setwise_stabilizer(block)?;
    // Restrict to the block.
    let position: std::collections::HashMap<usize, usize> = block
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    let mut restricted_elems = std::collections::HashSet::new();
    for g in stabilizer.elements()? {
        let images: Vec<usize> = block.iter().map(|&p| position[&g.apply(p)]).collect();
        restricted_elems.insert(Permutation::from_images(images)?);
    }
    let order = restricted_elems.len();
    if order <= 2 {
        return Ok(true);
    }
    // Cyclic-by-2: some element generates a subgroup of index ≤ 2.
    Ok(restricted_elems
        .iter()
        .any(|g| 2 * g.order() >= order))
}

/// One row of the exhaustive transfer sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub ambient: String,
    pub normal_order: usize,
    pub generator: String,
    pub conclusion_holds: bool,
}

/// Exhaustive sweep over the catalog: every primitive group A with degree
/// and order below the caps, every nontrivial normal G ⊴ A, every cyclic
/// I ≤ G generated by a class representative satisfying both hypotheses.
/// Returns the rows where the conclusion was actually tested.
///
/// Restricting I to class representatives loses nothing: both hypotheses
/// and the conclusion are invariant under conjugation in A.
pub fn agdi_sweep(max_degree: usize, max_order: usize) -> Result<Vec<SweepRow>> {
    let ids: Vec<GroupId> = GroupId::sweep_universe()
        .into_iter()
        .filter(|id| id.degree() <= max_degree && id.known_order() <= max_order)
        .collect();
    let rows: Vec<Result<Vec<SweepRow>>> = ids
        .par_iter()
        .map(|id| sweep_one(id, max_order))
        .collect();
    let mut out = Vec::new();
    for r in rows {
        out.extend(r?);
    }
    Ok(out)
}

fn sweep_one(id: &GroupId, max_order: usize) -> Result<Vec<SweepRow>> {
    let ambient = id.build()?.with_cap(max_order.max(1));
    let mut rows = Vec::new();
    if ambient.degree() < 2 || !ambient.is_transitive() || !ambient.is_primitive()? {
        return Ok(rows);
    }
    let (class_reps, _) = ambient.conjugacy_class_partition()?;
    for normal in ambient.normal_subgroups()? {
        let normal_order = normal.order()?;
        if normal_order <= 1 {
            continue;
        }
        for rep in &class_reps {
            if rep.is_identity() || !normal.contains(rep)? {
                continue;
            }
            let instance =
                AgdiInstance::new(ambient.clone(), normal.clone(), rep.clone())?;
            let hypotheses = agdi_hypotheses(&instance)?;
            if !hypotheses.a_holds || !hypotheses.b_holds {
                continue;
            }
            let holds = agdi_conclusion(&instance)?;
            rows.push(SweepRow {
                ambient: id.to_string(),
                normal_order,
                generator: rep.to_cycle_string(),
                conclusion_holds: holds,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s5_a5_five_cycle_instance() {
        let s5 = GroupId::Symmetric(5).build().unwrap();
        let a5 = GroupId::Alternating(5).build().unwrap();
        let five_cycle = Permutation::parse_cycles(5, "(0 1 2 3 4)").unwrap();
        let instance = AgdiInstance::new(s5, a5, five_cycle).unwrap();
        let hypotheses = agdi_hypotheses(&instance).unwrap();
        assert!(hypotheses.a_holds);
        assert!(hypotheses.b_holds);
        assert!(agdi_conclusion(&instance).unwrap());
        let transfer = absind_transfer(&instance).unwrap();
        assert!(transfer.geometric_primitive);
    }

    #[test]
    fn counterexample_m3() {
        let instance = build_agdi_counterexample(3).unwrap();
        assert_eq!(instance.ambient.degree(), 9);
        assert_eq!(instance.ambient.order().unwrap(), 72);
        assert!(instance.ambient.is_primitive().unwrap());
        let hypotheses = agdi_hypotheses(&instance).unwrap();
        assert!(hypotheses.a_holds);
        assert!(!hypotheses.b_holds);
        // I-orbits of sizes 6 and 3.
        let inertia = instance
            .ambient
            .subgroup(vec![instance.cyclic_generator.clone()])
            .unwrap();
        let mut sizes: Vec<usize> = inertia.orbits().iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 6]);
        // G keeps the coordinate block systems.
        assert!(!instance.normal.is_primitive().unwrap());
        assert_eq!(instance.normal.minimal_block_systems().unwrap().len(), 2);
    }

    #[test]
    fn counterexample_m4_orbits() {
        let instance = build_agdi_counterexample(4).unwrap();
        assert_eq!(instance.ambient.degree(), 16);
        let inertia = instance
            .ambient
            .subgroup(vec![instance.cyclic_generator.clone()])
            .unwrap();
        let mut sizes: Vec<usize> = inertia.orbits().iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 12]);
        assert!(!agdi_hypotheses(&instance).unwrap().b_holds);
    }

    #[test]
    fn counterexample_rejects_m2() {
        assert!(build_agdi_counterexample(2).is_err());
    }

    #[test]
    fn wreath_maximal_subgroup_s3_p2() {
        let s3 = GroupId::Symmetric(3).build().unwrap();
        let c2 = GroupId::Cyclic(2).build().unwrap();
        let report = wreath_maximal_intransitive(&s3, &c2).unwrap();
        assert_eq!(report.product.degree(), 9);
        assert!(report.product_primitive);
        assert_eq!(report.imprimitive.order().unwrap(), 72);
        // V has an orbit of length p = 2 and is intransitive on the roots.
        assert!(report.orbit_lengths.contains(&2));
        assert!(report.orbit_lengths.len() > 1);
        assert_eq!(
            report.maximal_intransitive.order().unwrap() * report.product.degree(),
            report.imprimitive.order().unwrap()
        );
        assert!(
            is_maximal_subgroup(&report.imprimitive, &report.maximal_intransitive).unwrap()
        );
    }

    #[test]
    fn wreath_rejects_regular_base() {
        let c3 = GroupId::Cyclic(3).build().unwrap();
        let c2 = GroupId::Cyclic(2).build().unwrap();
        assert!(wreath_maximal_intransitive(&c3, &c2).is_err());
    }

    #[test]
    fn block_decompositions() {
        let c4 = GroupId::Cyclic(4).build().unwrap();
        let decs = decompositions_via_blocks(&c4).unwrap();
        assert_eq!(decs.len(), 1);
        assert_eq!(decs[0].outer_degree, 2);
        assert_eq!(decs[0].inner_degree, 2);
        assert!(decs[0].inner_cyclic_by_2);

        let s5 = GroupId::Symmetric(5).build().unwrap();
        assert!(decompositions_via_blocks(&s5).unwrap().is_empty());

        let s3 = GroupId::Symmetric(3).build().unwrap();
        let c2 = GroupId::Cyclic(2).build().unwrap();
        let w = wreath_product(&s3, &c2, WreathMode::Imprimitive).unwrap();
        let decs = decompositions_via_blocks(&w).unwrap();
        assert_eq!(decs.len(), 1);
        assert_eq!(decs[0].inner_degree, 3);
    }

    #[test]
    fn small_sweep_has_no_violations() {
        let rows = agdi_sweep(6, 1000).unwrap();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r.conclusion_holds));
    }
}
