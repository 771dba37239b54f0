//! Catalog of named permutation groups.
//!
//! Symmetric, alternating, cyclic, dihedral and AGL₁(p) groups are built
//! from their canonical generators. The projective and Mathieu groups load
//! from a versioned generator data file; the loader refuses any entry whose
//! closure order disagrees with the catalog order.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Deserialize;

use super::{group::DEFAULT_ORDER_CAP, PermGroup, Permutation};
use crate::error::{Error, Result};

/// Identifier of a catalog group, together with its permutation degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupId {
    /// S_n in the natural action, n ≤ 12.
    Symmetric(usize),
    /// A_n in the natural action, 3 ≤ n ≤ 12.
    Alternating(usize),
    /// Cyclic group generated by an n-cycle.
    Cyclic(usize),
    /// Dihedral group of order 2n on n points, n ≥ 3.
    Dihedral(usize),
    /// Affine group x ↦ ax+b on F_p, p prime ≤ 23.
    Agl1(usize),
    /// PSL₂(7) of degree 7 (Fano plane) or 8 (projective line).
    Psl2_7 { degree: usize },
    /// PSL₂(8) of degree 9.
    Psl2_8,
    /// PSL₂(11) of degree 11 (exceptional action) or 12 (projective line).
    Psl2_11 { degree: usize },
    /// Mathieu group of degree 11.
    M11,
    /// Mathieu group of degree 12.
    M12,
}

const AGL_PRIMES: [usize; 9] = [2, 3, 5, 7, 11, 13, 17, 19, 23];

impl GroupId {
    /// Permutation degree of the catalog action.
    pub fn degree(&self) -> usize {
        match self {
            GroupId::Symmetric(n) | GroupId::Alternating(n) => *n,
            GroupId::Cyclic(n) | GroupId::Dihedral(n) => *n,
            GroupId::Agl1(p) => *p,
            GroupId::Psl2_7 { degree } => *degree,
            GroupId::Psl2_8 => 9,
            GroupId::Psl2_11 { degree } => *degree,
            GroupId::M11 => 11,
            GroupId::M12 => 12,
        }
    }

    /// Known group order.
    pub fn known_order(&self) -> usize {
        match self {
            GroupId::Symmetric(n) => factorial(*n),
            GroupId::Alternating(n) => factorial(*n) / 2,
            GroupId::Cyclic(n) => *n,
            GroupId::Dihedral(n) => 2 * n,
            GroupId::Agl1(p) => p * (p - 1),
            GroupId::Psl2_7 { .. } => 168,
            GroupId::Psl2_8 => 504,
            GroupId::Psl2_11 { .. } => 660,
            GroupId::M11 => 7920,
            GroupId::M12 => 95040,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match self {
            GroupId::Symmetric(n) => (1..=12).contains(n),
            GroupId::Alternating(n) => (3..=12).contains(n),
            GroupId::Cyclic(n) => *n >= 1,
            GroupId::Dihedral(n) => *n >= 3,
            GroupId::Agl1(p) => AGL_PRIMES.contains(p),
            GroupId::Psl2_7 { degree } => *degree == 7 || *degree == 8,
            GroupId::Psl2_8 => true,
            GroupId::Psl2_11 { degree } => *degree == 11 || *degree == 12,
            GroupId::M11 | GroupId::M12 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownCatalogId(self.to_string()))
        }
    }

    /// Builds the group. Closure order is re-verified against the catalog
    /// order whenever it fits under the default cap.
    pub fn build(&self) -> Result<PermGroup> {
        self.validate()?;
        let group = match self {
            GroupId::Symmetric(n) => symmetric(*n)?,
            GroupId::Alternating(n) => alternating(*n)?,
            GroupId::Cyclic(n) => cyclic(*n)?,
            GroupId::Dihedral(n) => dihedral(*n)?,
            GroupId::Agl1(p) => agl1(*p)?,
            _ => stored_group(&self.to_string())?,
        };
        let expected = self.known_order();
        if expected <= DEFAULT_ORDER_CAP {
            let got = group.order()?;
            if got != expected {
                return Err(Error::CatalogOrderMismatch {
                    id: self.to_string(),
                    got,
                    expected,
                });
            }
        }
        Ok(group)
    }

    /// Every catalog id with degree ≤ 12 (the desk-scale sweep universe).
    pub fn sweep_universe() -> Vec<GroupId> {
        let mut ids = Vec::new();
        for n in 2..=12 {
            ids.push(GroupId::Symmetric(n));
        }
        for n in 3..=12 {
            ids.push(GroupId::Alternating(n));
        }
        for n in 2..=12 {
            ids.push(GroupId::Cyclic(n));
        }
        for n in 3..=12 {
            ids.push(GroupId::Dihedral(n));
        }
        for p in [2, 3, 5, 7, 11] {
            ids.push(GroupId::Agl1(p));
        }
        ids.push(GroupId::Psl2_7 { degree: 7 });
        ids.push(GroupId::Psl2_7 { degree: 8 });
        ids.push(GroupId::Psl2_8);
        ids.push(GroupId::Psl2_11 { degree: 11 });
        ids.push(GroupId::Psl2_11 { degree: 12 });
        ids.push(GroupId::M11);
        ids.push(GroupId::M12);
        ids
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Symmetric(n) => write!(f, "S{n}"),
            GroupId::Alternating(n) => write!(f, "A{n}"),
            GroupId::Cyclic(n) => write!(f, "C{n}"),
            GroupId::Dihedral(n) => write!(f, "D{n}"),
            GroupId::Agl1(p) => write!(f, "AGL1({p})"),
            GroupId::Psl2_7 { degree } => write!(f, "PSL2(7)@{degree}"),
            GroupId::Psl2_8 => write!(f, "PSL2(8)"),
            GroupId::Psl2_11 { degree } => write!(f, "PSL2(11)@{degree}"),
            GroupId::M11 => write!(f, "M11"),
            GroupId::M12 => write!(f, "M12"),
        }
    }
}

impl FromStr for GroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownCatalogId(s.to_string());
        let id = if let Some(rest) = s.strip_prefix("AGL1(") {
            let p: usize = rest
                .strip_suffix(')')
                .ok_or_else(unknown)?
                .parse()
                .map_err(|_| unknown())?;
            GroupId::Agl1(p)
        } else if s == "PSL2(8)" || s == "PSL2(8)@9" {
            GroupId::Psl2_8
        } else if let Some(rest) = s.strip_prefix("PSL2(7)@") {
            GroupId::Psl2_7 {
                degree: rest.parse().map_err(|_| unknown())?,
            }
        } else if let Some(rest) = s.strip_prefix("PSL2(11)@") {
            GroupId::Psl2_11 {
                degree: rest.parse().map_err(|_| unknown())?,
            }
        } else if s == "M11" {
            GroupId::M11
        } else if s == "M12" {
            GroupId::M12
        } else {
            let (head, tail) = s.split_at(1);
            let n: usize = tail.parse().map_err(|_| unknown())?;
            match head {
                "S" => GroupId::Symmetric(n),
                "A" => GroupId::Alternating(n),
                "C" => GroupId::Cyclic(n),
                "D" => GroupId::Dihedral(n),
                _ => return Err(unknown()),
            }
        };
        id.validate()?;
        Ok(id)
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn symmetric(n: usize) -> Result<PermGroup> {
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let mut gens = vec![Permutation::from_cycles(n, &[vec![0, 1]])?];
    if n > 2 {
        gens.push(Permutation::from_cycles(n, &[(0..n).collect()])?);
    }
    PermGroup::new(gens)
}

fn alternating(n: usize) -> Result<PermGroup> {
    let three = Permutation::from_cycles(n, &[vec![0, 1, 2]])?;
    if n == 3 {
        return PermGroup::new(vec![three]);
    }
    let long = if n % 2 == 1 {
        Permutation::from_cycles(n, &[(0..n).collect()])?
    } else {
        Permutation::from_cycles(n, &[(1..n).collect()])?
    };
    PermGroup::new(vec![three, long])
}

fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    PermGroup::new(vec![Permutation::from_cycles(n, &[(0..n).collect()])?])
}

fn dihedral(n: usize) -> Result<PermGroup> {
    let rotation = Permutation::from_cycles(n, &[(0..n).collect()])?;
    let reflection = Permutation::from_images((0..n).map(|x| (n - x) % n).collect())?;
    PermGroup::new(vec![rotation, reflection])
}

fn agl1(p: usize) -> Result<PermGroup> {
    let translation = Permutation::from_images((0..p).map(|x| (x + 1) % p).collect())?;
    if p == 2 {
        return PermGroup::new(vec![translation]);
    }
    let g = primitive_root(p);
    let scaling = Permutation::from_images((0..p).map(|x| (x * g) % p).collect())?;
    PermGroup::new(vec![translation, scaling])
}

fn primitive_root(p: usize) -> usize {
    'candidate: for g in 2..p {
        let mut value = 1;
        for _ in 0..p - 2 {
            value = value * g % p;
            if value == 1 {
                continue 'candidate;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

#[derive(Deserialize)]
struct StoredCatalog {
    version: u32,
    groups: Vec<StoredGroup>,
}

#[derive(Deserialize)]
struct StoredGroup {
    id: String,
    degree: usize,
    order: usize,
    generators: Vec<Vec<usize>>,
}

static STORED: OnceLock<StoredCatalog> = OnceLock::new();

fn stored_catalog() -> &'static StoredCatalog {
    STORED.get_or_init(|| {
        let raw = include_str!("../catalog_data/groups.json");
        let catalog: StoredCatalog =
            serde_json::from_str(raw).expect("embedded catalog data is well-formed");
        assert_eq!(catalog.version, 1, "unsupported catalog data version");
        catalog
    })
}

fn stored_group(id: &str) -> Result<PermGroup> {
    let entry = stored_catalog()
        .groups
        .iter()
        .find(|g| g.id == id)
        .ok_or_else(|| Error::UnknownCatalogId(id.to_string()))?;
    let gens = entry
        .generators
        .iter()
        .map(|images| {
            if images.len() != entry.degree {
                return Err(Error::DegreeMismatch(images.len(), entry.degree));
            }
            Permutation::from_images(images.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    let group = PermGroup::new(gens)?;
    let got = group.order()?;
    if got != entry.order {
        return Err(Error::CatalogOrderMismatch {
            id: id.to_string(),
            got,
            expected: entry.order,
        });
    }
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulaic_orders() {
        assert_eq!(GroupId::Symmetric(5).build().unwrap().order().unwrap(), 120);
        assert_eq!(GroupId::Alternating(6).build().unwrap().order().unwrap(), 360);
        assert_eq!(GroupId::Cyclic(12).build().unwrap().order().unwrap(), 12);
        assert_eq!(GroupId::Dihedral(7).build().unwrap().order().unwrap(), 14);
        // AGL1(5) has order 20 in the x ↦ ax+b count.
        assert_eq!(GroupId::Agl1(5).build().unwrap().order().unwrap(), 20);
    }

    #[test]
    fn stored_groups_verify() {
        assert_eq!(
            GroupId::Psl2_7 { degree: 7 }.build().unwrap().order().unwrap(),
            168
        );
        assert_eq!(
            GroupId::Psl2_7 { degree: 8 }.build().unwrap().order().unwrap(),
            168
        );
        assert_eq!(GroupId::Psl2_8.build().unwrap().order().unwrap(), 504);
        assert_eq!(
            GroupId::Psl2_11 { degree: 11 }.build().unwrap().order().unwrap(),
            660
        );
        assert_eq!(
            GroupId::Psl2_11 { degree: 12 }.build().unwrap().order().unwrap(),
            660
        );
        assert_eq!(GroupId::M11.build().unwrap().order().unwrap(), 7920);
    }

    #[test]
    fn m12_verifies() {
        assert_eq!(GroupId::M12.build().unwrap().order().unwrap(), 95040);
    }

    #[test]
    fn id_round_trip() {
        for id in GroupId::sweep_universe() {
            let text = id.to_string();
            assert_eq!(GroupId::from_str(&text).unwrap(), id, "{text}");
        }
        assert!(GroupId::from_str("S13").is_err());
        assert!(GroupId::from_str("Q8").is_err());
        assert!(GroupId::from_str("PSL2(7)@9").is_err());
    }

    #[test]
    fn two_transitive_examples() {
        let m11 = GroupId::M11.build().unwrap();
        assert!(m11.is_2transitive().unwrap());
        let psl27 = GroupId::Psl2_7 { degree: 7 }.build().unwrap();
        assert!(psl27.is_2transitive().unwrap());
        let a5 = GroupId::Alternating(5).build().unwrap();
        assert!(a5.is_2transitive().unwrap());
    }
}
