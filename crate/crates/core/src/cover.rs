//! Branch cycle descriptions and the genus machinery: the index function,
//! Riemann–Hurwitz genus of the field cut out by an induced action, Scott's
//! inequality, places above infinity, the genus-comparison test through
//! permutation characters, and the wreath-cover genus formula.

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::chartab::{character_table, inner_product, permutation_character, CharacterTable};
use crate::chartab::ClassData;
use crate::error::{Error, Result};
use crate::perm::{orbits_of, Action, ActionTarget, PermGroup, Permutation, PermutationJson};
use crate::verdict;

/// ind(σ) = degree − number of cycles (fixed points count as cycles); the
/// local term of the Riemann–Hurwitz formula.
pub fn ind(p: &Permutation) -> usize {
    p.degree() - p.cycle_count()
}

/// A branch cycle description: permutations σ₁,…,σᵣ with product 1 that
/// generate a transitive group, one per branch point, optionally with the
/// branch point over t ↦ ∞ marked.
#[derive(Clone, Debug)]
pub struct BranchCycles {
    group: PermGroup,
    cycles: Vec<Permutation>,
    infinity_index: Option<usize>,
}

impl BranchCycles {
    /// Validates the three invariants: product one, generation of a
    /// transitive group, and a well-formed infinity marker.
    pub fn new(cycles: Vec<Permutation>, infinity_index: Option<usize>) -> Result<BranchCycles> {
        if cycles.is_empty() {
            return Err(Error::InconsistentBranchData(
                "at least one branch cycle required".into(),
            ));
        }
        let degree = cycles[0].degree();
        let mut product = Permutation::identity(degree);
        for c in &cycles {
            product = product.compose(c).map_err(|_| {
                Error::InconsistentBranchData("branch cycles of unequal degree".into())
            })?;
        }
        if !product.is_identity() {
            return Err(Error::InconsistentBranchData(
                "branch cycles do not multiply to identity".into(),
            ));
        }
        if let Some(idx) = infinity_index {
            if idx >= cycles.len() {
                return Err(Error::InconsistentBranchData(format!(
                    "infinity index {idx} out of range"
                )));
            }
        }
        let group = PermGroup::new(cycles.clone())?;
        if !group.is_transitive() {
            return Err(Error::InconsistentBranchData(
                "branch cycles generate an intransitive group".into(),
            ));
        }
        Ok(BranchCycles {
            group,
            cycles,
            infinity_index,
        })
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn cycles(&self) -> &[Permutation] {
        &self.cycles
    }

    pub fn infinity_index(&self) -> Option<usize> {
        self.infinity_index
    }

    /// The inertia generator at infinity, when marked.
    pub fn sigma_infinity(&self) -> Option<&Permutation> {
        self.infinity_index.map(|i| &self.cycles[i])
    }
}

/// Riemann–Hurwitz genus of the intermediate field cut out by an induced
/// action E: 2(n − 1 + g) = Σ ind(π_E(σᵢ)).
///
/// The action must be transitive (the constant-field condition); the result
/// must come out a non-negative integer or the branch data is inconsistent.
pub fn rh_genus(branch: &BranchCycles, action: &Action) -> Result<i64> {
    let images = branch
        .cycles
        .iter()
        .map(|c| action.image(c))
        .collect::<Result<Vec<_>>>()?;
    let n = action.degree() as i64;
    let induced_gens: Vec<Permutation> = images.clone();
    if orbits_of(&induced_gens, action.degree()).len() != 1 {
        return Err(Error::InconsistentBranchData(
            "induced action is intransitive; the constant-field hypothesis fails".into(),
        ));
    }
    let total: i64 = images.iter().map(|p| ind(p) as i64).sum();
    if total % 2 != 0 {
        return Err(Error::InconsistentBranchData(format!(
            "total ramification index {total} is odd"
        )));
    }
    let genus = total / 2 - n + 1;
    if genus < 0 {
        return Err(Error::InconsistentBranchData(format!(
            "negative genus {genus}; the tuple is not a branch cycle description"
        )));
    }
    Ok(genus)
}

/// Scott's inequality report for a product-one tuple under an action:
/// 2(n − orbits(G)) ≤ Σ (n − cycles(σᵢ)).
#[derive(Clone, Debug, Serialize)]
pub struct ScottReport {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

pub fn scott_check(cycles: &[Permutation], action: &Action) -> Result<ScottReport> {
    if cycles.is_empty() {
        return Ok(ScottReport {
            lhs: 0,
            rhs: 0,
            holds: true,
        });
    }
    let degree = cycles[0].degree();
    let mut product = Permutation::identity(degree);
    for c in cycles {
        product = product.compose(c)?;
    }
    if !product.is_identity() {
        return Err(Error::InconsistentBranchData(
            "tuple does not multiply to identity".into(),
        ));
    }
    let images = cycles
        .iter()
        .map(|c| action.image(c))
        .collect::<Result<Vec<_>>>()?;
    let n = action.degree() as i64;
    // d(M) = fixed-space dimension = orbit count of ⟨M⟩ on the points.
    let d_group = orbits_of(&images, action.degree()).len() as i64;
    let lhs = 2 * (n - d_group);
    let rhs = images.iter().map(|p| n - p.cycle_count() as i64).sum();
    Ok(ScottReport {
        lhs,
        rhs,
        holds: lhs <= rhs,
    })
}

/// Whether π_F − π_E was certified a character, and how.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CharacterTest {
    /// Decomposed against the exact character table.
    Table { is_character: bool },
    /// Certified by the doubly-transitive sufficient condition: E-action
    /// 2-transitive and ⟨π_E, π_F⟩ ≥ 2.
    DoublyTransitiveShortcut,
    /// Neither route applied.
    UndecidedGeneral,
}

/// Outcome of the genus comparison between two induced actions.
#[derive(Clone, Debug, Serialize)]
pub struct GenusComparison {
    pub genus_e: i64,
    pub genus_f: i64,
    pub difference_is_character: CharacterTest,
    /// Per branch cycle: orbit counts of ⟨σᵢ⟩ on the E-points and F-points.
    pub orbit_comparisons: Vec<(usize, usize)>,
    /// Set when the character test certified: g_E ≤ g_F and every orbit
    /// comparison is ≤.
    pub inequalities_hold: Option<bool>,
}

/// Computes both genera and tests whether π_F − π_E is a character (by
/// table, or by the 2-transitive shortcut); when certified, checks the
/// genus and orbit-count inequalities.
pub fn genus_compare(
    branch: &BranchCycles,
    action_e: &Action,
    action_f: &Action,
    table: Option<&CharacterTable>,
) -> Result<GenusComparison> {
    let genus_e = rh_genus(branch, action_e)?;
    let genus_f = rh_genus(branch, action_f)?;

    let owned_classes;
    let classes: &ClassData = match table {
        Some(t) => t.classes(),
        None => {
            owned_classes = ClassData::new(&branch.group)?;
            &owned_classes
        }
    };
    let pi_e = permutation_character(classes, action_e)?;
    let pi_f = permutation_character(classes, action_f)?;

    let test = if let Some(t) = table {
        let decomposition = t.decompose(&pi_f.sub(&pi_e))?;
        CharacterTest::Table {
            is_character: decomposition.is_character,
        }
    } else {
        // Shortcut: E 2-transitive and π_E, π_F sharing more than the
        // principal constituent.
        let induced_e = action_e.induced_group(&branch.group)?;
        let pairing = inner_product(classes, &pi_e, &pi_f)?;
        let two = BigRational::from_integer(BigInt::from(2));
        if induced_e.is_2transitive().unwrap_or(false) && pairing >= two {
            CharacterTest::DoublyTransitiveShortcut
        } else {
            CharacterTest::UndecidedGeneral
        }
    };

    let orbit_comparisons: Vec<(usize, usize)> = branch
        .cycles
        .iter()
        .map(|c| {
            let img_e = action_e.image(c)?;
            let img_f = action_f.image(c)?;
            Ok((img_e.cycle_count(), img_f.cycle_count()))
        })
        .collect::<Result<Vec<_>>>()?;

    let certified = matches!(
        test,
        CharacterTest::Table { is_character: true } | CharacterTest::DoublyTransitiveShortcut
    );
    let inequalities_hold = certified.then(|| {
        genus_e <= genus_f && orbit_comparisons.iter().all(|&(e, f)| e <= f)
    });

    Ok(GenusComparison {
        genus_e,
        genus_f,
        difference_is_character: test,
        orbit_comparisons,
        inequalities_hold,
    })
}

/// Ramification data of the places above t ↦ ∞ under an action.
#[derive(Clone, Debug, Serialize)]
pub struct InfinityPlaces {
    pub count: usize,
    pub cycle_lengths: Vec<usize>,
}

/// Cycle count and lengths of π(σ_∞): the places of the E-field above
/// infinity with their ramification indices.
pub fn places_above_infinity(branch: &BranchCycles, action: &Action) -> Result<InfinityPlaces> {
    let sigma = branch.sigma_infinity().ok_or_else(|| {
        Error::InvalidArgument("no branch point is marked as t ↦ ∞".into())
    })?;
    let image = action.image(sigma)?;
    let lengths = image.cycle_type();
    Ok(InfinityPlaces {
        count: lengths.len(),
        cycle_lengths: lengths,
    })
}

/// Intermediate quantities and result of the wreath-cover genus formula.
#[derive(Clone, Debug, Serialize)]
pub struct WreathGenus {
    pub genus: BigInt,
    /// ind of each of the two fully ramified inertia generators:
    /// (nᵖ − n)(1 − 1/p).
    pub ind_sigma: BigInt,
    /// Total index of the remaining branch points: 2·n^(p−1)·(n − 1).
    pub sum_ind_tau: BigInt,
}

/// Genus gₓ = (n^(p−1) − 1)(np − n − p)/p of the degree-nᵖ cover built from
/// a degree-n cover by composing with a p-th power, together with the two
/// Riemann–Hurwitz ingredients. The division by p is exact.
pub fn wreath_genus_formula(n: u64, p: u64) -> Result<WreathGenus> {
    if n < 2 {
        return Err(Error::InvalidArgument("base degree must be ≥ 2".into()));
    }
    if p < 2 || !is_prime_u64(p) {
        return Err(Error::InvalidArgument(format!("{p} is not a prime ≥ 2")));
    }
    let big_n = BigInt::from(n);
    let big_p = BigInt::from(p);
    let n_pow_p = big_n.pow(p as u32);
    let n_pow_p1 = big_n.pow(p as u32 - 1);

    // (nᵖ − n)(p − 1)/p, exact by Fermat.
    let ind_sigma_num = (&n_pow_p - &big_n) * (&big_p - BigInt::one());
    if !(&ind_sigma_num % &big_p).is_zero() {
        return Err(Error::Internal("p must divide nᵖ − n".into()));
    }
    let ind_sigma = ind_sigma_num / &big_p;
    let sum_ind_tau = BigInt::from(2) * &n_pow_p1 * (&big_n - BigInt::one());

    // 2(nᵖ − 1 + g) = 2·ind_sigma + sum_ind_tau.
    let rhs = BigInt::from(2) * &ind_sigma + &sum_ind_tau;
    let genus_via_rh = (rhs / BigInt::from(2)) - &n_pow_p + BigInt::one();

    // Closed form (n^(p−1) − 1)(np − n − p)/p.
    let numerator = (&n_pow_p1 - BigInt::one())
        * (&big_n * &big_p - &big_n - &big_p);
    if !(&numerator % &big_p).is_zero() {
        return Err(Error::Internal(
            "closed-form numerator must be divisible by p".into(),
        ));
    }
    let genus = numerator / &big_p;
    if genus != genus_via_rh {
        return Err(Error::Internal(format!(
            "closed form {genus} disagrees with the Riemann–Hurwitz route {genus_via_rh}"
        )));
    }
    Ok(WreathGenus {
        genus,
        ind_sigma,
        sum_ind_tau,
    })
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// JSON form of branch data.
#[derive(Serialize, Deserialize)]
pub struct BranchCyclesJson {
    pub degree: usize,
    pub cycles: Vec<PermutationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infinity_index: Option<usize>,
}

impl BranchCyclesJson {
    pub fn into_branch_cycles(self) -> Result<BranchCycles> {
        let cycles = self
            .cycles
            .into_iter()
            .map(|c| c.into_permutation(self.degree))
            .collect::<Result<Vec<_>>>()?;
        BranchCycles::new(cycles, self.infinity_index)
    }
}

/// Branch data of the generic degree-m cover with monodromy S_m: the m − 1
/// adjacent transpositions closed by the inverse long cycle at infinity
/// (the combinatorial shape of Zᵐ − Z).
pub fn adjacent_transposition_tuple(m: usize) -> Result<BranchCycles> {
    if m < 2 {
        return Err(Error::InvalidArgument("degree must be ≥ 2".into()));
    }
    let mut cycles = Vec::with_capacity(m);
    let mut product = Permutation::identity(m);
    for i in 0..m - 1 {
        let t = Permutation::from_cycles(m, &[vec![i, i + 1]])?;
        product = product.compose(&t)?;
        cycles.push(t);
    }
    cycles.push(product.inverse());
    BranchCycles::new(cycles, Some(m - 1))
}

/// The k-set genus 1 + C(m,k)·(mk − k² − m − 1)/(2m) for prime m (exact).
pub fn k_set_genus_closed_form(m: u64, k: u64) -> BigRational {
    let binom = binomial(m, k);
    let numerator = BigInt::from((m * k) as i64)
        - BigInt::from((k * k) as i64)
        - BigInt::from(m as i64)
        - BigInt::one();
    BigRational::one()
        + BigRational::new(binom * numerator, BigInt::from(2 * m))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    let mut result = BigInt::one();
    for i in 0..k.min(n - k) {
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

/// Scott-inequality random sweep used by the acceptance suite: checks
/// `samples` random product-one tuples over the given group.
pub fn scott_random_sweep(
    group: &PermGroup,
    samples: usize,
    tuple_len: usize,
    seed: u64,
) -> Result<usize> {
    use rand::{Rng, SeedableRng};
    let elements = group.elements()?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let action = Action::build(group, &ActionTarget::Natural)?;
    let mut violations = 0;
    for _ in 0..samples {
        let mut tuple: Vec<Permutation> = (0..tuple_len.saturating_sub(1))
            .map(|_| elements[rng.gen_range(0..elements.len())].clone())
            .collect();
        let mut product = Permutation::identity(group.degree());
        for t in &tuple {
            product = product.compose(t)?;
        }
        tuple.push(product.inverse());
        let report = scott_check(&tuple, &action)?;
        if !report.holds {
            violations += 1;
        }
    }
    Ok(violations)
}

pub use verdict::Verdict as _VerdictReexportGuard;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::GroupId;

    #[test]
    fn ind_basics() {
        assert_eq!(ind(&Permutation::identity(4)), 0);
        let five = Permutation::parse_cycles(5, "(0 1 2 3 4)").unwrap();
        assert_eq!(ind(&five), 4);
    }

    #[test]
    fn rejects_bad_product() {
        let t = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let u = Permutation::parse_cycles(3, "(1 2)").unwrap();
        assert!(matches!(
            BranchCycles::new(vec![t, u], None),
            Err(Error::InconsistentBranchData(_))
        ));
    }

    #[test]
    fn z5_minus_z_natural_genus_zero() {
        let branch = adjacent_transposition_tuple(5).unwrap();
        let action = Action::build(branch.group(), &ActionTarget::Natural).unwrap();
        assert_eq!(rh_genus(&branch, &action).unwrap(), 0);
    }

    #[test]
    fn z5_minus_z_pairs_genus_one() {
        let branch = adjacent_transposition_tuple(5).unwrap();
        let action = Action::build(branch.group(), &ActionTarget::KSubsets(2)).unwrap();
        // Σ ind = 4 transpositions × 3 + (5,5)-cycle index 8 = 20 = 2(10−1+1).
        assert_eq!(rh_genus(&branch, &action).unwrap(), 1);
    }

    #[test]
    fn single_cycle_pair_genus_zero() {
        // (σ, σ⁻¹) for an n-cycle: the Zⁿ cover.
        let sigma = Permutation::parse_cycles(6, "(0 1 2 3 4 5)").unwrap();
        let branch = BranchCycles::new(vec![sigma.clone(), sigma.inverse()], Some(1)).unwrap();
        let action = Action::build(branch.group(), &ActionTarget::Natural).unwrap();
        assert_eq!(rh_genus(&branch, &action).unwrap(), 0);
        let places = places_above_infinity(&branch, &action).unwrap();
        assert_eq!(places.count, 1);
        assert_eq!(places.cycle_lengths, vec![6]);
    }

    #[test]
    fn scott_equality_case() {
        // (0 1), (1 2), then the closing (0 2 1): lhs 2(3−1) = 4 = rhs.
        let a = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let c = a.compose(&b).unwrap().inverse();
        let g = PermGroup::new(vec![a.clone(), b.clone(), c.clone()]).unwrap();
        let action = Action::build(&g, &ActionTarget::Natural).unwrap();
        let report = scott_check(&[a, b, c], &action).unwrap();
        assert_eq!((report.lhs, report.rhs), (4, 4));
        assert!(report.holds);
    }

    #[test]
    fn scott_random_sweep_has_no_violations() {
        let g = GroupId::Symmetric(5).build().unwrap();
        assert_eq!(scott_random_sweep(&g, 200, 4, 7).unwrap(), 0);
    }

    #[test]
    fn genus_comparison_on_pairs() {
        let branch = adjacent_transposition_tuple(5).unwrap();
        let natural = Action::build(branch.group(), &ActionTarget::Natural).unwrap();
        let pairs = Action::build(branch.group(), &ActionTarget::KSubsets(2)).unwrap();
        let table = character_table(branch.group()).unwrap();
        let cmp = genus_compare(&branch, &natural, &pairs, Some(&table)).unwrap();
        assert_eq!((cmp.genus_e, cmp.genus_f), (0, 1));
        assert_eq!(
            cmp.difference_is_character,
            CharacterTest::Table { is_character: true }
        );
        assert_eq!(cmp.inequalities_hold, Some(true));
        // Shortcut route agrees.
        let cmp2 = genus_compare(&branch, &natural, &pairs, None).unwrap();
        assert_eq!(
            cmp2.difference_is_character,
            CharacterTest::DoublyTransitiveShortcut
        );
        assert_eq!(cmp2.inequalities_hold, Some(true));
    }

    #[test]
    fn same_action_compares_equal() {
        let branch = adjacent_transposition_tuple(4).unwrap();
        let natural = Action::build(branch.group(), &ActionTarget::Natural).unwrap();
        let table = character_table(branch.group()).unwrap();
        let cmp = genus_compare(&branch, &natural, &natural, Some(&table)).unwrap();
        assert_eq!(cmp.genus_e, cmp.genus_f);
        assert_eq!(cmp.inequalities_hold, Some(true));
    }

    #[test]
    fn infinity_places_of_two_m_cycles() {
        // σ_∞ a product of two 3-cycles on 6 points.
        let sigma = Permutation::parse_cycles(6, "(0 1 2)(3 4 5)").unwrap();
        let other = sigma.inverse();
        let branch = BranchCycles::new(
            vec![
                sigma,
                Permutation::parse_cycles(6, "(0 3)").unwrap(),
                {
                    // Close the product.
                    let partial = Permutation::parse_cycles(6, "(0 1 2)(3 4 5)")
                        .unwrap()
                        .compose(&Permutation::parse_cycles(6, "(0 3)").unwrap())
                        .unwrap();
                    partial.inverse()
                },
            ],
            Some(0),
        )
        .unwrap();
        let _ = other;
        let action = Action::build(branch.group(), &ActionTarget::Natural).unwrap();
        let places = places_above_infinity(&branch, &action).unwrap();
        assert_eq!(places.count, 2);
        assert_eq!(places.cycle_lengths, vec![3, 3]);
    }

    #[test]
    fn wreath_genus_values() {
        // n = 3, p = 3: 2(27 − 1 + g) = 16 + 16 + 36 gives g = 8.
        let w = wreath_genus_formula(3, 3).unwrap();
        assert_eq!(w.genus, BigInt::from(8));
        assert_eq!(w.ind_sigma, BigInt::from(16));
        assert_eq!(w.sum_ind_tau, BigInt::from(36));
        // n = 2, p = 3: (4−1)(6−2−3)/3 = 1.
        assert_eq!(wreath_genus_formula(2, 3).unwrap().genus, BigInt::from(1));
        // n = 3, p = 2: (3−1)(6−3−2)/2 = 1 > 0.
        assert_eq!(wreath_genus_formula(3, 2).unwrap().genus, BigInt::from(1));
        assert!(wreath_genus_formula(1, 3).is_err());
        assert!(wreath_genus_formula(3, 4).is_err());
    }

    #[test]
    fn rotation_index_matches_formula() {
        // The coordinate rotation on tuples has n fixed points and moves the
        // rest in p-cycles, so ind = (nᵖ − n)(1 − 1/p).
        for (n, p) in [(2usize, 3usize), (3, 3), (2, 5), (4, 3), (5, 3), (3, 5)] {
            let cyclic = GroupId::Cyclic(p).build().unwrap();
            let base = GroupId::Symmetric(n).build().unwrap();
            let w = crate::perm::wreath_product(&base, &cyclic, crate::perm::WreathMode::Product)
                .unwrap();
            // The coordinate rotation is the image of the top n-cycle: the
            // last generator of the product construction.
            let rotation = w.generators().last().unwrap();
            let expected = wreath_genus_formula(n as u64, p as u64)
                .unwrap()
                .ind_sigma;
            assert_eq!(BigInt::from(ind(rotation)), expected, "n={n}, p={p}");
        }
    }

    #[test]
    fn k_set_genus_closed_form_matches_rh() {
        for m in [5u64, 7] {
            let branch = adjacent_transposition_tuple(m as usize).unwrap();
            for k in 2..=(m - 2) {
                if 2 * k == m {
                    continue;
                }
                let action =
                    Action::build(branch.group(), &ActionTarget::KSubsets(k as usize)).unwrap();
                let genus = rh_genus(&branch, &action).unwrap();
                let closed = k_set_genus_closed_form(m, k);
                assert_eq!(
                    BigRational::from_integer(BigInt::from(genus)),
                    closed,
                    "m={m}, k={k}"
                );
            }
        }
    }
}
