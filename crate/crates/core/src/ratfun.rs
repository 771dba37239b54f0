//! Exact rational functions over ℚ: fibers with multiplicities, the
//! Siegel-function admissibility conditions at infinity, inertia cycle
//! types, the quadratic-in-cyclotomic test, and the checklist of
//! decomposition-group constraints at the infinite place.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::polyform::{factor_q, parse_ratfun_parts, UniPoly};

/// A nonzero rational function num/den in lowest terms, denominator monic.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    numerator: UniPoly,
    denominator: UniPoly,
}

/// A point of the fiber: an irreducible factor of the fiber polynomial with
/// its field degree, multiplicity and total-reality flag — plus possibly the
/// synthetic point at infinity.
#[derive(Clone, Debug, Serialize)]
pub struct FiberPoint {
    /// Degree of the defining irreducible polynomial (0 marks ∞ itself).
    pub field_degree: usize,
    pub multiplicity: usize,
    /// Whether every root of the defining polynomial is real (∞ counts as
    /// real).
    pub all_real: bool,
    /// Displayable defining polynomial ("infinity" for the infinite point).
    pub defined_by: String,
}

/// Fiber of a value with multiplicities; degrees × multiplicities sum to
/// deg g.
#[derive(Clone, Debug, Serialize)]
pub struct FiberProfile {
    pub points: Vec<FiberPoint>,
}

impl FiberProfile {
    /// Number of distinct points over the algebraic closure (∞ counts 1).
    pub fn point_count(&self) -> usize {
        self.points
            .iter()
            .map(|p| if p.field_degree == 0 { 1 } else { p.field_degree })
            .sum()
    }

    pub fn degree_sum(&self) -> usize {
        self.points
            .iter()
            .map(|p| p.field_degree.max(1) * p.multiplicity)
            .sum()
    }
}

/// Value whose fiber is requested.
#[derive(Clone, Debug, PartialEq)]
pub enum FiberValue {
    Finite(BigRational),
    Infinity,
}

impl RationalFunction {
    /// Normalizes: cancels the gcd and makes the denominator monic.
    pub fn new(numerator: UniPoly, denominator: UniPoly) -> Result<RationalFunction> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(RationalFunction {
                numerator: UniPoly::zero(),
                denominator: UniPoly::one(),
            });
        }
        let g = numerator.gcd(&denominator);
        let mut num = numerator.exact_div(&g)?;
        let mut den = denominator.exact_div(&g)?;
        let lc = den.leading_coeff();
        den = den.scale(&lc.recip());
        num = num.scale(&lc.recip());
        Ok(RationalFunction {
            numerator: num,
            denominator: den,
        })
    }

    pub fn parse(text: &str) -> Result<RationalFunction> {
        let (num, den) = parse_ratfun_parts(text)?;
        RationalFunction::new(num, den)
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.denominator
    }

    /// max(deg num, deg den); the degree of the induced cover of ℙ¹.
    pub fn degree(&self) -> usize {
        self.numerator
            .degree()
            .unwrap_or(0)
            .max(self.denominator.degree().unwrap_or(0))
    }

    pub fn is_constant(&self) -> bool {
        self.numerator.degree().unwrap_or(0) == 0 && self.denominator.degree().unwrap_or(0) == 0
    }

    /// Fiber g⁻¹(value) in ℙ¹(ℚ̄) with multiplicities.
    ///
    /// For ∞ the fiber polynomial is the denominator, with an extra point at
    /// ∞ of multiplicity deg num − deg den when positive; for finite α it is
    /// num − α·den, with ∞ appearing when the degree drops.
    pub fn fiber_profile(&self, value: &FiberValue) -> Result<FiberProfile> {
        if self.is_constant() {
            return Err(Error::InvalidArgument(
                "fiber of a constant function".into(),
            ));
        }
        let total = self.degree();
        let (fiber_poly, infinity_mult) = match value {
            FiberValue::Infinity => {
                let den_deg = self.denominator.degree().unwrap_or(0);
                (self.denominator.clone(), total - den_deg)
            }
            FiberValue::Finite(alpha) => {
                let poly = self
                    .numerator
                    .sub(&self.denominator.scale(alpha));
                let deg = poly.degree().unwrap_or(0);
                (poly, total - deg)
            }
        };
        let mut points = Vec::new();
        if fiber_poly.degree().unwrap_or(0) >= 1 {
            let factorization = factor_q(&fiber_poly)?;
            for (factor, multiplicity) in &factorization.factors {
                let deg = factor.degree().unwrap_or(0);
                let all_real = factor.real_root_count()? == deg;
                points.push(FiberPoint {
                    field_degree: deg,
                    multiplicity: *multiplicity as usize,
                    all_real,
                    defined_by: factor.to_string_with("Z"),
                });
            }
        }
        if infinity_mult > 0 {
            points.push(FiberPoint {
                field_degree: 0,
                multiplicity: infinity_mult,
                all_real: true,
                defined_by: "infinity".into(),
            });
        }
        let profile = FiberProfile { points };
        debug_assert_eq!(profile.degree_sum(), total);
        Ok(profile)
    }

    /// Cycle type of an inertia generator over the given value: a degree-e
    /// irreducible factor of multiplicity m contributes e cycles of length m.
    pub fn inertia_cycle_type_at(&self, value: &FiberValue) -> Result<Vec<usize>> {
        let profile = self.fiber_profile(value)?;
        let mut lengths = Vec::new();
        for p in &profile.points {
            let copies = p.field_degree.max(1);
            for _ in 0..copies {
                lengths.push(p.multiplicity);
            }
        }
        lengths.sort_unstable();
        Ok(lengths)
    }
}

/// Siegel admissibility of the pole configuration.
#[derive(Clone, Debug, Serialize)]
pub struct SiegelAdmissibility {
    pub admissible: bool,
    pub reason: String,
    pub pole_count: usize,
}

/// Necessary conditions for g to take infinitely many values of a finitely
/// generated ring: at most two poles over ℚ̄; over ℚ with two poles they
/// must form a single real quadratic Galois orbit.
///
/// A pole pair {∞, rational} or {rational, rational} fails over ℚ, and a
/// conjugate pair with negative discriminant (non-real) fails as well.
pub fn siegel_admissible(
    g: &RationalFunction,
    field: crate::verdict::FieldFlag,
) -> Result<SiegelAdmissibility> {
    let profile = g.fiber_profile(&FiberValue::Infinity)?;
    let count = profile.point_count();
    if count > 2 {
        return Ok(SiegelAdmissibility {
            admissible: false,
            reason: format!("{count} poles over the algebraic closure exceed the bound of 2"),
            pole_count: count,
        });
    }
    if field == crate::verdict::FieldFlag::General || count <= 1 {
        return Ok(SiegelAdmissibility {
            admissible: true,
            reason: match count {
                0 => "no poles (constant direction)".into(),
                1 => "single pole".into(),
                _ => "two poles allowed over a general field".into(),
            },
            pole_count: count,
        });
    }
    // Exactly two poles over ℚ: one irreducible quadratic factor, all real.
    let quadratic = profile
        .points
        .iter()
        .find(|p| p.field_degree == 2);
    match quadratic {
        Some(point) if point.all_real => Ok(SiegelAdmissibility {
            admissible: true,
            reason: format!(
                "two real algebraically conjugate poles defined by {}",
                point.defined_by
            ),
            pole_count: 2,
        }),
        Some(point) => Ok(SiegelAdmissibility {
            admissible: false,
            reason: format!(
                "conjugate pole pair of {} is not real (negative discriminant)",
                point.defined_by
            ),
            pole_count: 2,
        }),
        None => Ok(SiegelAdmissibility {
            admissible: false,
            reason: "two poles that do not form a single Galois orbit over ℚ \
                     (rational + rational, or ∞ + rational)"
                .into(),
            pole_count: 2,
        }),
    }
}

/// Whether ℚ(√d) ⊆ ℚ(ζ_m): the field discriminant (d for d ≡ 1 mod 4,
/// else 4d) must divide m.
pub fn sqrt_in_cyclotomic(d: i64, m: u64) -> Result<bool> {
    if d == 0 || d == 1 {
        return Err(Error::InvalidArgument(
            "d must be a squarefree integer other than 0 and 1".into(),
        ));
    }
    if !is_squarefree(d) {
        return Err(Error::InvalidArgument(format!("{d} is not squarefree")));
    }
    let disc: i64 = if d.rem_euclid(4) == 1 { d } else { 4 * d };
    Ok((m as i64).rem_euclid(disc.abs()) == 0)
}

fn is_squarefree(d: i64) -> bool {
    let mut n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// One item of the infinity-constraints checklist.
#[derive(Clone, Debug, Serialize)]
pub struct ConstraintItem {
    pub id: String,
    pub description: String,
    pub outcome: ConstraintOutcome,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConstraintOutcome {
    Pass,
    Fail,
    Skipped,
}

/// Checklist mode: the general two-cycle constraints, or the refined list
/// for ℚ with two real conjugate poles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintMode {
    General,
    QTwoRealConjugatePoles,
}

/// Evaluates the decomposition/inertia constraints at the infinite place
/// for I = ⟨sigma⟩ ≤ D ≤ A, with the geometric group G optional.
///
/// General mode: σ has at most two cycles, and (when G is given) A = G·D
/// with I ≤ G ∩ D. ℚ-mode adds: σ a product of two equal cycles, σʳ ~_D σ
/// for r coprime to the cycle length, an orbit swap in D, and an inverting
/// element of order ≤ 2 fixing both orbits; when the poles are ±√d with
/// √d ∉ ℚ(ζ_m), a centralizing swap must exist as well.
pub fn infinity_constraints(
    ambient: &PermGroup,
    geometric: Option<&PermGroup>,
    decomposition: &PermGroup,
    sigma: &Permutation,
    mode: ConstraintMode,
    pole_field_d: Option<i64>,
) -> Result<Vec<ConstraintItem>> {
    if !decomposition.contains(sigma)? {
        return Err(Error::NotASubgroup("σ outside D".into()));
    }
    if !ambient.contains_group(decomposition)? {
        return Err(Error::NotASubgroup("D outside A".into()));
    }
    let inertia = ambient.subgroup(vec![sigma.clone()])?;
    let mut items = Vec::new();
    let cycle_type = sigma.cycle_type();

    // (1) σ has at most two cycles.
    let nontrivial_cycles = cycle_type.len();
    items.push(ConstraintItem {
        id: "cycles<=2".into(),
        description: format!("σ has at most two cycles (found {nontrivial_cycles})"),
        outcome: if nontrivial_cycles <= 2 {
            ConstraintOutcome::Pass
        } else {
            ConstraintOutcome::Fail
        },
    });

    // (2) A = G·D and I ≤ G ∩ D.
    match geometric {
        Some(g) => {
            let product_ok = ambient.product_size(g, decomposition)? == ambient.order()?;
            let inertia_ok = g.contains(sigma)? && decomposition.contains(sigma)?;
            items.push(ConstraintItem {
                id: "A=GD".into(),
                description: "A = G·D".into(),
                outcome: if product_ok {
                    ConstraintOutcome::Pass
                } else {
                    ConstraintOutcome::Fail
                },
            });
            items.push(ConstraintItem {
                id: "I<=G∩D".into(),
                description: "I ≤ G ∩ D".into(),
                outcome: if inertia_ok {
                    ConstraintOutcome::Pass
                } else {
                    ConstraintOutcome::Fail
                },
            });
        }
        None => {
            items.push(ConstraintItem {
                id: "A=GD".into(),
                description: "A = G·D (geometric group not supplied)".into(),
                outcome: ConstraintOutcome::Skipped,
            });
        }
    }

    if mode == ConstraintMode::General {
        return Ok(items);
    }

    // (a) Two cycles of equal length.
    let equal_pair = cycle_type.len() == 2 && cycle_type[0] == cycle_type[1];
    items.push(ConstraintItem {
        id: "two-equal-cycles".into(),
        description: format!("σ is a product of two equal cycles (type {cycle_type:?})"),
        outcome: if equal_pair {
            ConstraintOutcome::Pass
        } else {
            ConstraintOutcome::Fail
        },
    });
    if !equal_pair {
        return Ok(items);
    }
    let m = cycle_type[0];
    let d_elements = decomposition.elements()?;

    // (b) σʳ is conjugate to σ in D for every r coprime to m.
    let mut power_conjugacy = true;
    for r in 1..m {
        if crate::perm::gcd(r, m) != 1 {
            continue;
        }
        let power = sigma.pow(r as i64);
        let conjugate_exists = d_elements
            .iter()
            .any(|a| sigma.conjugate_by(a).map_or(false, |c| c == power));
        if !conjugate_exists {
            power_conjugacy = false;
            break;
        }
    }
    items.push(ConstraintItem {
        id: "power-conjugacy".into(),
        description: format!("σʳ ~_D σ for all r coprime to {m}"),
        outcome: if power_conjugacy {
            ConstraintOutcome::Pass
        } else {
            ConstraintOutcome::Fail
        },
    });

    // With cycle type {m, m} the I-orbits are exactly the two cycles.
    let orbit_sets = inertia.orbits();
    let swap_exists = |centralize: bool| -> bool {
        if orbit_sets.len() != 2 {
            return false;
        }
        d_elements.iter().any(|a| {
            let swaps = orbit_sets[0]
                .iter()
                .all(|&x| orbit_sets[1].binary_search(&a.apply(x)).is_ok());
            swaps
                && (!centralize
                    || sigma.conjugate_by(a).map_or(false, |c| c == *sigma))
        })
    };

    // (c) Some element of D switches the two orbits of I.
    let has_swap = swap_exists(false);
    items.push(ConstraintItem {
        id: "orbit-swap".into(),
        description: "some element of D switches the two I-orbits".into(),
        outcome: if has_swap {
            ConstraintOutcome::Pass
        } else {
            ConstraintOutcome::Fail
        },
    });

    // (d) Some τ ∈ D of order ≤ 2 with σ^τ = σ⁻¹, fixing both orbits setwise.
    let sigma_inv = sigma.inverse();
    let has_inverter = d_elements.iter().any(|a| {
        if a.order() > 2 {
            return false;
        }
        let inverts = sigma.conjugate_by(a).map_or(false, |c| c == sigma_inv);
        if !inverts {
            return false;
        }
        orbit_sets.iter().all(|orbit| {
            orbit
                .iter()
                .all(|&x| orbit.binary_search(&a.apply(x)).is_ok())
        })
    });
    items.push(ConstraintItem {
        id: "inverting-involution".into(),
        description: "some τ ∈ D of order ≤ 2 inverts σ and fixes both orbits setwise".into(),
        outcome: if has_inverter {
            ConstraintOutcome::Pass
        } else {
            ConstraintOutcome::Fail
        },
    });

    // (e) If √d ∉ ℚ(ζ_m): a centralizing orbit swap.
    match pole_field_d {
        Some(d) => {
            let in_cyclotomic = sqrt_in_cyclotomic(d, m as u64)?;
            if in_cyclotomic {
                items.push(ConstraintItem {
                    id: "centralizing-swap".into(),
                    description: format!("√{d} ∈ ℚ(ζ_{m}); centralizing swap not required"),
                    outcome: ConstraintOutcome::Skipped,
                });
            } else {
                let has_central_swap = swap_exists(true);
                items.push(ConstraintItem {
                    id: "centralizing-swap".into(),
                    description: format!(
                        "√{d} ∉ ℚ(ζ_{m}): some element of D swaps the orbits and centralizes I"
                    ),
                    outcome: if has_central_swap {
                        ConstraintOutcome::Pass
                    } else {
                        ConstraintOutcome::Fail
                    },
                });
            }
        }
        None => items.push(ConstraintItem {
            id: "centralizing-swap".into(),
            description: "pole field not supplied".into(),
            outcome: ConstraintOutcome::Skipped,
        }),
    }

    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::FieldFlag;

    #[test]
    fn polynomial_has_single_pole_at_infinity() {
        let g = RationalFunction::parse("Z^3").unwrap();
        let profile = g.fiber_profile(&FiberValue::Infinity).unwrap();
        assert_eq!(profile.point_count(), 1);
        assert_eq!(profile.points[0].multiplicity, 3);
        assert!(siegel_admissible(&g, FieldFlag::Q).unwrap().admissible);
        assert_eq!(
            g.inertia_cycle_type_at(&FiberValue::Infinity).unwrap(),
            vec![3]
        );
    }

    #[test]
    fn conjugate_pole_pair() {
        // h(Z)/(Z²−2)³ with h coprime: two conjugate poles of multiplicity 3.
        let g = RationalFunction::parse("(Z+1)/(Z^2-2)^3").unwrap();
        let profile = g.fiber_profile(&FiberValue::Infinity).unwrap();
        assert_eq!(profile.point_count(), 2);
        assert_eq!(
            g.inertia_cycle_type_at(&FiberValue::Infinity).unwrap(),
            vec![3, 3]
        );
        let verdict = siegel_admissible(&g, FieldFlag::Q).unwrap();
        assert!(verdict.admissible, "{}", verdict.reason);
    }

    #[test]
    fn imaginary_poles_rejected_over_q() {
        let g = RationalFunction::parse("1/(Z^2+1)").unwrap();
        let verdict = siegel_admissible(&g, FieldFlag::Q).unwrap();
        assert!(!verdict.admissible);
        // But fine over a general field.
        assert!(siegel_admissible(&g, FieldFlag::General).unwrap().admissible);
    }

    #[test]
    fn split_rational_poles_rejected_over_q() {
        let g = RationalFunction::parse("(Z^2+1)/Z").unwrap();
        let profile = g.fiber_profile(&FiberValue::Infinity).unwrap();
        assert_eq!(profile.point_count(), 2);
        let verdict = siegel_admissible(&g, FieldFlag::Q).unwrap();
        assert!(!verdict.admissible);
    }

    #[test]
    fn three_poles_never_admissible() {
        let g = RationalFunction::parse("1/(Z(Z-1)(Z-2))").unwrap();
        let verdict = siegel_admissible(&g, FieldFlag::General).unwrap();
        assert!(!verdict.admissible);
        assert_eq!(verdict.pole_count, 3);
    }

    #[test]
    fn finite_fiber_multiplicities() {
        // Z³ − 3Z at 2: Z³−3Z−2 = (Z−2)(Z+1)².
        let g = RationalFunction::parse("Z^3 - 3Z").unwrap();
        let t = g
            .inertia_cycle_type_at(&FiberValue::Finite(BigRational::from_integer(
                BigInt::from(2),
            )))
            .unwrap();
        assert_eq!(t, vec![1, 2]);
    }

    #[test]
    fn sqrt_cyclotomic_memberships() {
        assert!(sqrt_in_cyclotomic(5, 5).unwrap());
        assert!(sqrt_in_cyclotomic(2, 8).unwrap());
        assert!(!sqrt_in_cyclotomic(2, 5).unwrap());
        assert!(sqrt_in_cyclotomic(-3, 3).unwrap());
        assert!(!sqrt_in_cyclotomic(-1, 2).unwrap());
        assert!(sqrt_in_cyclotomic(-1, 4).unwrap());
        assert!(sqrt_in_cyclotomic(1, 5).is_err());
        assert!(sqrt_in_cyclotomic(12, 24).is_err());
    }

    #[test]
    fn dihedral_configuration_passes_q_mode() {
        // σ = two 3-cycles on 6 points; D = ⟨σ, swap, inverter⟩.
        let sigma = Permutation::parse_cycles(6, "(0 1 2)(3 4 5)").unwrap();
        let swap = Permutation::parse_cycles(6, "(0 3)(1 4)(2 5)").unwrap();
        let invert = Permutation::parse_cycles(6, "(1 2)(4 5)").unwrap();
        let d = PermGroup::new(vec![sigma.clone(), swap, invert]).unwrap();
        let ambient = crate::perm::GroupId::Symmetric(6).build().unwrap();
        let items = infinity_constraints(
            &ambient,
            None,
            &d,
            &sigma,
            ConstraintMode::QTwoRealConjugatePoles,
            Some(2),
        )
        .unwrap();
        for item in &items {
            assert_ne!(
                item.outcome,
                ConstraintOutcome::Fail,
                "{}: {}",
                item.id,
                item.description
            );
        }
    }

    #[test]
    fn unequal_cycles_fail_q_mode() {
        let sigma = Permutation::parse_cycles(5, "(0 1 2)(3 4)").unwrap();
        let d = PermGroup::new(vec![sigma.clone()]).unwrap();
        let ambient = crate::perm::GroupId::Symmetric(5).build().unwrap();
        let items = infinity_constraints(
            &ambient,
            None,
            &d,
            &sigma,
            ConstraintMode::QTwoRealConjugatePoles,
            None,
        )
        .unwrap();
        let equal = items.iter().find(|i| i.id == "two-equal-cycles").unwrap();
        assert_eq!(equal.outcome, ConstraintOutcome::Fail);
    }

    #[test]
    fn n_cycle_passes_general_mode() {
        let sigma = Permutation::parse_cycles(5, "(0 1 2 3 4)").unwrap();
        let d = PermGroup::new(vec![sigma.clone()]).unwrap();
        let ambient = crate::perm::GroupId::Symmetric(5).build().unwrap();
        let items =
            infinity_constraints(&ambient, None, &d, &sigma, ConstraintMode::General, None)
                .unwrap();
        assert!(items
            .iter()
            .all(|i| i.outcome != ConstraintOutcome::Fail));
    }
}
