//! Conjugacy classes, integer class functions, permutation characters and
//! exact character tables.

pub mod cyclotomic;
mod dixon;

pub use cyclotomic::Cyc;
pub use dixon::character_table;

use std::collections::HashMap;

use num::{BigInt, BigRational, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{Action, PermGroup, Permutation};

/// Conjugacy-class data of a materialized group.
#[derive(Clone)]
pub struct ClassData {
    group: PermGroup,
    reps: Vec<Permutation>,
    sizes: Vec<usize>,
    class_of: HashMap<Permutation, usize>,
    inverse_class: Vec<usize>,
    orders: Vec<usize>,
}

impl ClassData {
    /// Classes by conjugation orbits (identity class first).
    pub fn new(group: &PermGroup) -> Result<ClassData> {
        let (reps, partition) = group.conjugacy_class_partition()?;
        let elements = group.elements()?;
        let mut sizes = vec![0usize; reps.len()];
        let mut class_of = HashMap::with_capacity(elements.len());
        for (idx, class) in partition.iter().enumerate() {
            sizes[*class] += 1;
            class_of.insert(elements[idx].clone(), *class);
        }
        let inverse_class = reps
            .iter()
            .map(|r| class_of[&r.inverse()])
            .collect();
        let orders = reps.iter().map(|r| r.order()).collect();
        Ok(ClassData {
            group: group.clone(),
            reps,
            sizes,
            class_of,
            inverse_class,
            orders,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn inverse_class(&self, l: usize) -> usize {
        self.inverse_class[l]
    }

    pub fn class_of(&self, p: &Permutation) -> Result<usize> {
        self.class_of
            .get(p)
            .copied()
            .ok_or_else(|| Error::NotASubgroup("element outside the group".into()))
    }

    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Index of the class of rep(l)^s.
    pub fn power_class(&self, l: usize, s: usize) -> usize {
        let powered = self.reps[l].pow(s as i64);
        self.class_of[&powered]
    }
}

/// Integer-valued class function, aligned with a [`ClassData`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFunction {
    pub values: Vec<i64>,
}

impl ClassFunction {
    pub fn sub(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().map(|v| v * k).collect(),
        }
    }
}

/// Fixed-point counts of an induced action on each conjugacy class.
pub fn permutation_character(classes: &ClassData, action: &Action) -> Result<ClassFunction> {
    let values = classes
        .representatives()
        .iter()
        .map(|rep| Ok(action.image(rep)?.fixed_points() as i64))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassFunction { values })
}

/// The all-ones (principal) class function.
pub fn principal_character(classes: &ClassData) -> ClassFunction {
    ClassFunction {
        values: vec![1; classes.count()],
    }
}

/// ⟨a, b⟩ = (1/|G|)·Σ_C |C|·a(C)·b(C⁻¹), exact.
///
/// For permutation characters this is the number of orbits on the product
/// set (Burnside).
pub fn inner_product(
    classes: &ClassData,
    a: &ClassFunction,
    b: &ClassFunction,
) -> Result<BigRational> {
    if a.values.len() != classes.count() || b.values.len() != classes.count() {
        return Err(Error::InvalidArgument(
            "class function length does not match the class data".into(),
        ));
    }
    let mut total = BigInt::zero();
    for l in 0..classes.count() {
        let b_at_inverse = b.values[classes.inverse_class(l)];
        total += BigInt::from(classes.sizes()[l] as i64)
            * BigInt::from(a.values[l])
            * BigInt::from(b_at_inverse);
    }
    Ok(BigRational::new(
        total,
        BigInt::from(classes.order() as i64),
    ))
}

/// Exact character table: rows of cyclotomic values, one per irreducible.
pub struct CharacterTable {
    classes: ClassData,
    exponent: u64,
    rows: Vec<Vec<Cyc>>,
    degrees: Vec<usize>,
}

/// Decomposition of an integer class function against a table.
#[derive(Clone, Debug)]
pub struct CharacterDecomposition {
    /// Whether every multiplicity is a non-negative rational integer.
    pub is_character: bool,
    /// Multiplicity per irreducible when rational; `None` marks an
    /// irrational inner product.
    pub multiplicities: Vec<Option<BigInt>>,
}

impl CharacterTable {
    pub(crate) fn from_parts(
        classes: ClassData,
        exponent: u64,
        rows: Vec<Vec<Cyc>>,
        degrees: Vec<usize>,
    ) -> Self {
        CharacterTable {
            classes,
            exponent,
            rows,
            degrees,
        }
    }

    pub fn classes(&self) -> &ClassData {
        &self.classes
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn rows(&self) -> &[Vec<Cyc>] {
        &self.rows
    }

    /// Verifies row orthogonality, column orthogonality and Σ deg² = |G|.
    pub fn verify(&self) -> Result<()> {
        let order = BigInt::from(self.classes.order() as i64);
        let k = self.classes.count();
        let sizes = self.classes.sizes();
        // Σ deg² = |G|.
        let degree_sum: usize = self.degrees.iter().map(|d| d * d).sum();
        if BigInt::from(degree_sum as i64) != order {
            return Err(Error::Internal(format!(
                "degree check failed: Σ deg² = {degree_sum}, |G| = {}",
                self.classes.order()
            )));
        }
        // Rows: Σ_C |C|·χᵢ(C)·conj(χⱼ(C)) = δᵢⱼ·|G|.
        for i in 0..k {
            for j in i..k {
                let mut acc = Cyc::zero(1);
                for l in 0..k {
                    let term = self.rows[i][l]
                        .mul(&self.rows[j][l].conj())
                        .scale(&BigInt::from(sizes[l] as i64));
                    acc = acc.add(&term);
                }
                let expected = if i == j { order.clone() } else { BigInt::zero() };
                match acc.as_integer() {
                    Some(v) if v == expected => {}
                    other => {
                        return Err(Error::Internal(format!(
                            "row orthogonality failed at ({i},{j}): {other:?}"
                        )))
                    }
                }
            }
        }
        // Columns: Σ_i χᵢ(C)·conj(χᵢ(C′)) = δ_{CC′}·|G|/|C|.
        for l in 0..k {
            for l2 in l..k {
                let mut acc = Cyc::zero(1);
                for row in &self.rows {
                    acc = acc.add(&row[l].mul(&row[l2].conj()));
                }
                let expected = if l == l2 {
                    &order / BigInt::from(sizes[l] as i64)
                } else {
                    BigInt::zero()
                };
                match acc.as_integer() {
                    Some(v) if v == expected => {}
                    other => {
                        return Err(Error::Internal(format!(
                            "column orthogonality failed at ({l},{l2}): {other:?}"
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    /// Decomposes an integer class function against the irreducibles:
    /// a character iff every multiplicity is a non-negative integer.
    pub fn decompose(&self, f: &ClassFunction) -> Result<CharacterDecomposition> {
        if f.values.len() != self.classes.count() {
            return Err(Error::InvalidArgument(
                "class function length does not match the table".into(),
            ));
        }
        let order = BigInt::from(self.classes.order() as i64);
        let sizes = self.classes.sizes();
        let mut multiplicities = Vec::with_capacity(self.rows.len());
        let mut ok = true;
        for row in &self.rows {
            // ⟨f, χ⟩ = (1/|G|)·Σ_C |C|·f(C)·conj(χ(C)).
            let mut acc = Cyc::zero(1);
            for l in 0..self.classes.count() {
                let scalar = BigInt::from(sizes[l] as i64) * BigInt::from(f.values[l]);
                acc = acc.add(&row[l].conj().scale(&scalar));
            }
            match acc.as_integer() {
                Some(total) => {
                    let (q, r) = num::Integer::div_rem(&total, &order);
                    if r.is_zero() && !q.is_negative() {
                        multiplicities.push(Some(q));
                    } else {
                        ok = false;
                        multiplicities.push(Some(q));
                    }
                }
                None => {
                    ok = false;
                    multiplicities.push(None);
                }
            }
        }
        Ok(CharacterDecomposition {
            is_character: ok,
            multiplicities,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{ActionTarget, GroupId};
    use num::One;

    fn s5() -> PermGroup {
        GroupId::Symmetric(5).build().unwrap()
    }

    #[test]
    fn class_counts() {
        let s3 = GroupId::Symmetric(3).build().unwrap();
        let classes = ClassData::new(&s3).unwrap();
        assert_eq!(classes.count(), 3);
        let mut sizes = classes.sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        let a5 = GroupId::Alternating(5).build().unwrap();
        assert_eq!(ClassData::new(&a5).unwrap().count(), 5);

        let c4 = GroupId::Cyclic(4).build().unwrap();
        assert_eq!(ClassData::new(&c4).unwrap().count(), 4);
    }

    #[test]
    fn natural_character_of_s5_by_cycle_type() {
        let g = s5();
        let classes = ClassData::new(&g).unwrap();
        let action = Action::build(&g, &ActionTarget::Natural).unwrap();
        let chi = permutation_character(&classes, &action).unwrap();
        // Value per class, keyed by cycle type.
        let mut by_type: Vec<(Vec<usize>, i64)> = classes
            .representatives()
            .iter()
            .zip(&chi.values)
            .map(|(rep, &v)| (rep.cycle_type(), v))
            .collect();
        by_type.sort();
        let expected: Vec<(Vec<usize>, i64)> = vec![
            (vec![1, 1, 1, 1, 1], 5),
            (vec![1, 1, 1, 2], 3),
            (vec![1, 1, 3], 2),
            (vec![1, 2, 2], 1),
            (vec![1, 4], 1),
            (vec![2, 3], 0),
            (vec![5], 0),
        ];
        assert_eq!(by_type, expected);
    }

    #[test]
    fn burnside_inner_products_on_s5() {
        let g = s5();
        let classes = ClassData::new(&g).unwrap();
        let natural = permutation_character(
            &classes,
            &Action::build(&g, &ActionTarget::Natural).unwrap(),
        )
        .unwrap();
        let pairs = permutation_character(
            &classes,
            &Action::build(&g, &ActionTarget::KSubsets(2)).unwrap(),
        )
        .unwrap();
        let two = BigRational::from_integer(BigInt::from(2));
        // 2-transitivity and the two point-stabilizer orbits on pairs.
        assert_eq!(inner_product(&classes, &natural, &natural).unwrap(), two);
        assert_eq!(inner_product(&classes, &pairs, &natural).unwrap(), two);
        let one = principal_character(&classes);
        assert_eq!(
            inner_product(&classes, &one, &one).unwrap(),
            BigRational::one()
        );
    }

    #[test]
    fn regular_character_values() {
        let c4 = GroupId::Cyclic(4).build().unwrap();
        let classes = ClassData::new(&c4).unwrap();
        let action = Action::build(&c4, &ActionTarget::Natural).unwrap();
        let chi = permutation_character(&classes, &action).unwrap();
        // Regular action: |G| on the identity class, 0 elsewhere.
        for (rep, &v) in classes.representatives().iter().zip(&chi.values) {
            assert_eq!(v, if rep.is_identity() { 4 } else { 0 });
        }
    }
}
