//! Identification of composition factors by order with an element-order
//! spectrum tie-break, and the tables of non-abelian simple groups that can
//! occur inside Siegel-function monodromy.

use serde::Serialize;

use crate::error::Result;
use crate::perm::PermGroup;
use crate::verdict::FieldFlag;

/// A composition factor, identified as far as order and spectrum allow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SimpleFactor {
    Cyclic(u64),
    Alternating(u32),
    Psl2(u32),
    Psl3(u32),
    Mathieu(u32),
    /// Identified classical groups outside the tables above.
    Other(&'static str),
    /// Simple order without a table entry; reported by order, never guessed.
    UnidentifiedOrder(u64),
}

impl std::fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SimpleFactor::Cyclic(p) => write!(f, "C{p}"),
            SimpleFactor::Alternating(j) => write!(f, "A{j}"),
            SimpleFactor::Psl2(q) => write!(f, "PSL2({q})"),
            SimpleFactor::Psl3(q) => write!(f, "PSL3({q})"),
            SimpleFactor::Mathieu(n) => write!(f, "M{n}"),
            SimpleFactor::Other(name) => write!(f, "{name}"),
            SimpleFactor::UnidentifiedOrder(o) => write!(f, "simple-of-order-{o}"),
        }
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn is_prime(n: u64) -> bool {
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

/// Identifies a simple group from its order and element-order spectrum.
///
/// Within desk scale only the classical order-20160 pair is ambiguous by
/// order alone: A₈ has elements of order 15, PSL₃(4) does not.
pub fn identify_simple(order: u64, spectrum: &[usize]) -> SimpleFactor {
    if is_prime(order) {
        return SimpleFactor::Cyclic(order);
    }
    // Alternating orders j!/2.
    for j in 5..=16u64 {
        if factorial(j) / 2 == order {
            if order == 20160 {
                // A₈ vs PSL₃(4).
                return if spectrum.contains(&15) {
                    SimpleFactor::Alternating(8)
                } else {
                    SimpleFactor::Psl3(4)
                };
            }
            return SimpleFactor::Alternating(j as u32);
        }
    }
    match order {
        168 => SimpleFactor::Psl2(7),
        504 => SimpleFactor::Psl2(8),
        660 => SimpleFactor::Psl2(11),
        1092 => SimpleFactor::Psl2(13),
        2448 => SimpleFactor::Psl2(17),
        3420 => SimpleFactor::Psl2(19),
        4080 => SimpleFactor::Psl2(16),
        5616 => SimpleFactor::Psl3(3),
        6048 => SimpleFactor::Other("U3(3)"),
        6072 => SimpleFactor::Psl2(23),
        7800 => SimpleFactor::Psl2(25),
        7920 => SimpleFactor::Mathieu(11),
        9828 => SimpleFactor::Psl2(27),
        12180 => SimpleFactor::Psl2(29),
        14880 => SimpleFactor::Psl2(31),
        25308 => SimpleFactor::Psl2(37),
        25920 => SimpleFactor::Other("PSp4(3)"),
        29120 => SimpleFactor::Other("Sz(8)"),
        32736 => SimpleFactor::Psl2(32),
        34440 => SimpleFactor::Psl2(41),
        39732 => SimpleFactor::Psl2(43),
        51888 => SimpleFactor::Psl2(47),
        58800 => SimpleFactor::Psl2(49),
        62400 => SimpleFactor::Other("U3(4)"),
        74412 => SimpleFactor::Psl2(53),
        95040 => SimpleFactor::Mathieu(12),
        other => SimpleFactor::UnidentifiedOrder(other),
    }
}

/// Identified composition factors of a materializable group.
pub fn composition_factors(group: &PermGroup) -> Result<Vec<SimpleFactor>> {
    Ok(group
        .composition_factor_data()?
        .into_iter()
        .map(|(order, spectrum)| identify_simple(order as u64, &spectrum))
        .collect())
}

/// Membership of a non-abelian factor in CF(k), the table of simple groups
/// realizable as composition factors of Siegel-function monodromy.
///
/// Over ℚ: alternating groups, PSL₂(7) and PSL₂(8) only. Over a general
/// finitely generated field the table extends to fifteen entries.
pub fn in_cf_table(factor: &SimpleFactor, field: FieldFlag) -> bool {
    match field {
        FieldFlag::Q => matches!(
            factor,
            SimpleFactor::Alternating(j) if *j >= 5
        ) || matches!(factor, SimpleFactor::Psl2(7) | SimpleFactor::Psl2(8)),
        FieldFlag::General => match factor {
            SimpleFactor::Alternating(j) => *j >= 5,
            SimpleFactor::Psl2(7 | 8 | 11 | 13) => true,
            SimpleFactor::Psl3(3 | 4) => true,
            SimpleFactor::Mathieu(11 | 12 | 22 | 23 | 24) => true,
            SimpleFactor::Other(name) => {
                matches!(*name, "PSL4(3)" | "PSL5(2)" | "PSL6(2)")
            }
            _ => false,
        },
    }
}

/// Orders of every CF(k) member, to let an unidentified factor be excluded
/// rigorously: if its order matches no table entry it cannot lie in CF(k).
pub fn order_matches_cf_member(order: u64, field: FieldFlag) -> bool {
    for j in 5..=20u64 {
        if factorial(j) / 2 == order {
            return true;
        }
    }
    let q_orders = [168u64, 504];
    let general_orders = [
        168u64,
        504,
        660,
        1092,
        5616,
        20160,      // PSL3(4)
        6_065_280,  // PSL4(3)
        9_999_360,  // PSL5(2)
        20_158_709_760, // PSL6(2)
        7920,
        95040,
        443_520,     // M22
        10_200_960,  // M23
        244_823_040, // M24
    ];
    match field {
        FieldFlag::Q => q_orders.contains(&order),
        FieldFlag::General => general_orders.contains(&order),
    }
}

/// Whether a factor is non-abelian (identified cyclic factors are abelian).
pub fn is_nonabelian(factor: &SimpleFactor) -> bool {
    !matches!(factor, SimpleFactor::Cyclic(_))
}

/// Whether the group is isomorphic to an alternating group (A₃ included:
/// a simple group of order 3 is A₃).
pub fn is_alternating(order: u64, spectrum: &[usize]) -> bool {
    if order == 3 {
        return true;
    }
    matches!(
        identify_simple(order, spectrum),
        SimpleFactor::Alternating(_)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::GroupId;

    #[test]
    fn identify_small_groups() {
        assert_eq!(identify_simple(5, &[1, 5]), SimpleFactor::Cyclic(5));
        assert_eq!(identify_simple(60, &[1, 2, 3, 5]), SimpleFactor::Alternating(5));
        assert_eq!(identify_simple(168, &[1, 2, 3, 4, 7]), SimpleFactor::Psl2(7));
        assert_eq!(identify_simple(7920, &[]), SimpleFactor::Mathieu(11));
    }

    #[test]
    fn ambiguous_order_20160() {
        assert_eq!(
            identify_simple(20160, &[1, 2, 3, 4, 5, 6, 7, 15]),
            SimpleFactor::Alternating(8)
        );
        assert_eq!(
            identify_simple(20160, &[1, 2, 3, 4, 5, 7]),
            SimpleFactor::Psl3(4)
        );
    }

    #[test]
    fn s4_factors() {
        let s4 = GroupId::Symmetric(4).build().unwrap();
        let factors = composition_factors(&s4).unwrap();
        assert_eq!(
            factors,
            vec![
                SimpleFactor::Cyclic(2),
                SimpleFactor::Cyclic(3),
                SimpleFactor::Cyclic(2),
                SimpleFactor::Cyclic(2),
            ]
        );
    }

    #[test]
    fn a5_is_its_own_factor() {
        let a5 = GroupId::Alternating(5).build().unwrap();
        assert_eq!(
            composition_factors(&a5).unwrap(),
            vec![SimpleFactor::Alternating(5)]
        );
    }

    #[test]
    fn wreath_factors() {
        // S₃ wr C₃ of order 648 = 2³·3⁴: three C2 and four C3.
        let s3 = GroupId::Symmetric(3).build().unwrap();
        let c3 = GroupId::Cyclic(3).build().unwrap();
        let w = crate::perm::wreath_product(&s3, &c3, crate::perm::WreathMode::Imprimitive)
            .unwrap();
        let mut factors = composition_factors(&w).unwrap();
        factors.sort_by_key(|f| format!("{f}"));
        let twos = factors
            .iter()
            .filter(|f| **f == SimpleFactor::Cyclic(2))
            .count();
        let threes = factors
            .iter()
            .filter(|f| **f == SimpleFactor::Cyclic(3))
            .count();
        assert_eq!((twos, threes, factors.len()), (3, 4, 7));
    }

    #[test]
    fn cf_membership() {
        assert!(in_cf_table(&SimpleFactor::Alternating(7), FieldFlag::Q));
        assert!(in_cf_table(&SimpleFactor::Psl2(8), FieldFlag::Q));
        assert!(!in_cf_table(&SimpleFactor::Psl2(11), FieldFlag::Q));
        assert!(in_cf_table(&SimpleFactor::Psl2(11), FieldFlag::General));
        assert!(!in_cf_table(&SimpleFactor::Mathieu(11), FieldFlag::Q));
        assert!(in_cf_table(&SimpleFactor::Mathieu(11), FieldFlag::General));
        assert!(!in_cf_table(&SimpleFactor::Other("PSp4(3)"), FieldFlag::General));
    }

    #[test]
    fn m11_factors_not_in_cf_q() {
        let m11 = GroupId::M11.build().unwrap();
        let factors = composition_factors(&m11).unwrap();
        assert_eq!(factors, vec![SimpleFactor::Mathieu(11)]);
        assert!(!in_cf_table(&factors[0], FieldFlag::Q));
    }
}
