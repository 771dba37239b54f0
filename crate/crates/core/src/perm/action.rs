//! Induced actions: cosets of a subgroup, k-subsets, block systems, and
//! cartesian powers. Each action maps base-group elements to permutations of
//! the target set, carrying human-readable point labels.

use std::collections::HashMap;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

/// Target of an induced action.
#[derive(Clone, Debug)]
pub enum ActionTarget {
    /// The points the group already acts on.
    Natural,
    /// Unordered k-element subsets of the points.
    KSubsets(usize),
    /// The blocks of an invariant partition.
    Blocks(Vec<Vec<usize>>),
    /// Right cosets of a subgroup.
    Cosets(PermGroup),
    /// Tuples in the p-fold cartesian power of the point set.
    CartesianPower(usize),
}

/// A concrete induced action: a map from degree-n permutations to
/// permutations of a labelled target set.
pub struct Action {
    base_degree: usize,
    degree: usize,
    labels: Vec<String>,
    kind: ActionKind,
}

enum ActionKind {
    Natural,
    KSubsets {
        subsets: Vec<Vec<usize>>,
        index: HashMap<Vec<usize>, usize>,
    },
    Blocks {
        blocks: Vec<Vec<usize>>,
        block_of: Vec<usize>,
    },
    Cosets {
        // Transversal of right cosets Hg; coset of p found via p·rep⁻¹ ∈ H.
        transversal: Vec<Permutation>,
        subgroup: PermGroup,
    },
    CartesianPower {
        arity: usize,
    },
}

impl Action {
    /// Builds the action of a base group on the given target.
    ///
    /// `Cosets` requires the subgroup to be materializable and contained in
    /// the base group; `Blocks` requires a genuine partition of the points.
    pub fn build(base: &PermGroup, target: &ActionTarget) -> Result<Action> {
        let n = base.degree();
        match target {
            ActionTarget::Natural => Ok(Action {
                base_degree: n,
                degree: n,
                labels: (0..n).map(|i| i.to_string()).collect(),
                kind: ActionKind::Natural,
            }),
            ActionTarget::KSubsets(k) => {
                let k = *k;
                if k == 0 || k > n {
                    return Err(Error::InvalidArgument(format!(
                        "k-subset size {k} out of range for degree {n}"
                    )));
                }
                let subsets = k_subsets(n, k);
                let index: HashMap<Vec<usize>, usize> = subsets
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (s.clone(), i))
                    .collect();
                let labels = subsets
                    .iter()
                    .map(|s| {
                        let pts: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                        format!("{{{}}}", pts.join(","))
                    })
                    .collect();
                Ok(Action {
                    base_degree: n,
                    degree: subsets.len(),
                    labels,
                    kind: ActionKind::KSubsets { subsets, index },
                })
            }
            ActionTarget::Blocks(blocks) => {
                let mut block_of = vec![usize::MAX; n];
                for (i, b) in blocks.iter().enumerate() {
                    for &p in b {
                        if p >= n || block_of[p] != usize::MAX {
                            return Err(Error::InvalidArgument(
                                "blocks do not partition the points".into(),
                            ));
                        }
                        block_of[p] = i;
                    }
                }
                if block_of.iter().any(|&b| b == usize::MAX) {
                    return Err(Error::InvalidArgument(
                        "blocks do not cover the points".into(),
                    ));
                }
                let labels = blocks
                    .iter()
                    .map(|b| {
                        let pts: Vec<String> = b.iter().map(|p| p.to_string()).collect();
                        format!("[{}]", pts.join(","))
                    })
                    .collect();
                Ok(Action {
                    base_degree: n,
                    degree: blocks.len(),
                    labels,
                    kind: ActionKind::Blocks {
                        blocks: blocks.clone(),
                        block_of,
                    },
                })
            }
            ActionTarget::Cosets(h) => {
                if !base.contains_group(h)? {
                    return Err(Error::NotASubgroup("coset action subgroup".into()));
                }
                let transversal = coset_transversal(base, h)?;
                let labels = transversal
                    .iter()
                    .map(|rep| format!("H{}", rep.to_cycle_string()))
                    .collect();
                Ok(Action {
                    base_degree: n,
                    degree: transversal.len(),
                    labels,
                    kind: ActionKind::Cosets {
                        transversal,
                        subgroup: h.clone(),
                    },
                })
            }
            ActionTarget::CartesianPower(p) => {
                let p = *p;
                if p == 0 {
                    return Err(Error::InvalidArgument("cartesian power 0".into()));
                }
                let degree = n
                    .checked_pow(p as u32)
                    .filter(|&d| d <= 1 << 24)
                    .ok_or_else(|| Error::InvalidArgument("cartesian power too large".into()))?;
                let labels = (0..degree)
                    .map(|i| {
                        let t = unrank_tuple(i, n, p);
                        let pts: Vec<String> = t.iter().map(|p| p.to_string()).collect();
                        format!("({})", pts.join(","))
                    })
                    .collect();
                Ok(Action {
                    base_degree: n,
                    degree,
                    labels,
                    kind: ActionKind::CartesianPower { arity: p },
                })
            }
        }
    }

    /// Number of target points.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Image of a base permutation on the target set.
    pub fn image(&self, p: &Permutation) -> Result<Permutation> {
        if p.degree() != self.base_degree {
            return Err(Error::DegreeMismatch(p.degree(), self.base_degree));
        }
        let images: Vec<usize> = match &self.kind {
            ActionKind::Natural => return Ok(p.clone()),
            ActionKind::KSubsets { subsets, index } => subsets
                .iter()
                .map(|s| {
                    let mut img: Vec<usize> = s.iter().map(|&x| p.apply(x)).collect();
                    img.sort_unstable();
                    index[&img]
                })
                .collect(),
            ActionKind::Blocks { blocks, block_of } => blocks
                .iter()
                .map(|b| block_of[p.apply(b[0])])
                .collect(),
            ActionKind::Cosets {
                transversal,
                subgroup,
            } => {
                let mut out = Vec::with_capacity(transversal.len());
                for rep in transversal {
                    let moved = rep.compose(p)?;
                    out.push(coset_index(transversal, subgroup, &moved)?);
                }
                out
            }
            ActionKind::CartesianPower { arity } => (0..self.degree)
                .map(|i| {
                    let tuple = unrank_tuple(i, self.base_degree, *arity);
                    let image: Vec<usize> = tuple.iter().map(|&x| p.apply(x)).collect();
                    rank_tuple(&image, self.base_degree)
                })
                .collect(),
        };
        Permutation::from_images(images)
    }

    /// The induced permutation group of a base group.
    pub fn induced_group(&self, base: &PermGroup) -> Result<PermGroup> {
        let gens = base
            .generators()
            .iter()
            .map(|g| self.image(g))
            .collect::<Result<Vec<_>>>()?;
        if self.degree == 1 {
            return Ok(PermGroup::trivial(1).with_cap(base.cap()));
        }
        Ok(PermGroup::new(gens)?.with_cap(base.cap()))
    }
}

/// All k-subsets of 0..n in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let remaining = k - current.len();
        for x in start..=(n - remaining) {
            current.push(x);
            rec(x + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

fn rank_tuple(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * n + x)
}

fn unrank_tuple(mut rank: usize, n: usize, arity: usize) -> Vec<usize> {
    let mut tuple = vec![0; arity];
    for slot in (0..arity).rev() {
        tuple[slot] = rank % n;
        rank /= n;
    }
    tuple
}

/// Right-coset transversal of `h` in `g`, starting at the identity coset.
fn coset_transversal(g: &PermGroup, h: &PermGroup) -> Result<Vec<Permutation>> {
    h.elements()?;
    let mut transversal = vec![Permutation::identity(g.degree())];
    let mut frontier = 0;
    while frontier < transversal.len() {
        let rep = transversal[frontier].clone();
        frontier += 1;
        for gen in g.generators() {
            let moved = rep.compose(gen)?;
            let mut known = false;
            for existing in &transversal {
                if same_right_coset(h, existing, &moved)? {
                    known = true;
                    break;
                }
            }
            if !known {
                transversal.push(moved);
            }
        }
    }
    Ok(transversal)
}

/// Whether Ha = Hb, i.e. a·b⁻¹ ∈ H.
fn same_right_coset(h: &PermGroup, a: &Permutation, b: &Permutation) -> Result<bool> {
    h.contains(&a.compose(&b.inverse())?)
}

fn coset_index(
    transversal: &[Permutation],
    h: &PermGroup,
    p: &Permutation,
) -> Result<usize> {
    for (i, rep) in transversal.iter().enumerate() {
        if same_right_coset(h, rep, p)? {
            return Ok(i);
        }
    }
    Err(Error::Internal("element escapes coset transversal".into()))
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
    fn five_cycle_on_pairs() {
        let c5 = group(5, &["(0 1 2 3 4)"]);
        let action = Action::build(&c5, &ActionTarget::KSubsets(2)).unwrap();
        assert_eq!(action.degree(), 10);
        let img = action.image(&c5.generators()[0]).unwrap();
        // Two 5-cycles: the orbit of {0,1} and the orbit of {0,2}.
        assert_eq!(img.cycle_type(), vec![5, 5]);
    }

    #[test]
    fn s5_on_pairs_is_transitive() {
        let s5 = group(5, &["(0 1)", "(0 1 2 3 4)"]);
        let action = Action::build(&s5, &ActionTarget::KSubsets(2)).unwrap();
        let induced = action.induced_group(&s5).unwrap();
        assert_eq!(induced.degree(), 10);
        assert!(induced.is_transitive());
    }

    #[test]
    fn coset_action_degree_and_transitivity() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let stab = s4.stabilizer(0).unwrap();
        let action = Action::build(&s4, &ActionTarget::Cosets(stab)).unwrap();
        assert_eq!(action.degree(), 4);
        let induced = action.induced_group(&s4).unwrap();
        assert!(induced.is_transitive());
        assert_eq!(induced.order().unwrap(), 24);

        // G on cosets of G collapses to a single point.
        let whole = Action::build(&s4, &ActionTarget::Cosets(s4.clone())).unwrap();
        assert_eq!(whole.degree(), 1);
    }

    #[test]
    fn block_action() {
        let c4 = group(4, &["(0 1 2 3)"]);
        let blocks = vec![vec![0, 2], vec![1, 3]];
        let action = Action::build(&c4, &ActionTarget::Blocks(blocks)).unwrap();
        let img = action.image(&c4.generators()[0]).unwrap();
        assert_eq!(img.cycle_type(), vec![2]);
    }

    #[test]
    fn transposition_on_pairs_index() {
        // A transposition on 2-subsets of 5 points fixes 4 subsets and
        // transposes 3 pairs, so the induced index is 3.
        let s5 = group(5, &["(0 1)", "(0 1 2 3 4)"]);
        let t = Permutation::parse_cycles(5, "(0 1)").unwrap();
        let action = Action::build(&s5, &ActionTarget::KSubsets(2)).unwrap();
        let img = action.image(&t).unwrap();
        assert_eq!(img.degree() - img.cycle_count(), 3);
    }
}
