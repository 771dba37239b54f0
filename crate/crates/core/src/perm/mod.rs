//! Exact permutations of `{0, …, n−1}` and finitely generated permutation
//! groups, with the brute-force subgroup machinery the desk-scale theorems
//! need (orbits, blocks, normalizers, composition factors, induced actions,
//! wreath products, and a catalog of named groups).

mod action;
mod catalog;
mod group;
mod wreath;

pub use action::{k_subsets, Action, ActionTarget};
pub use catalog::GroupId;
pub use group::{orbits_of, PermGroup, PermGroupJson, DEFAULT_ORDER_CAP};
pub use wreath::{wreath_product, WreathMode};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of the points `0..degree`, stored by its image table.
///
/// Composition is applied left to right throughout the crate:
/// `(p * q)(x) = q(p(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Identity permutation on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image table, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::NotAPermutation {
                degree: 0,
                reason: "degree must be at least 1".into(),
            });
        }
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::NotAPermutation {
                    degree: n,
                    reason: format!("image {img} out of range"),
                });
            }
            if seen[img] {
                return Err(Error::NotAPermutation {
                    degree: n,
                    reason: format!("image {img} repeated"),
                });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `degree` points from disjoint cycles.
    ///
    /// Points absent from every cycle are fixed. Cycles must be disjoint.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let a = cycle[window];
                let b = cycle[(window + 1) % cycle.len()];
                if a >= degree || b >= degree {
                    return Err(Error::NotAPermutation {
                        degree,
                        reason: format!("cycle point {} out of range", a.max(b)),
                    });
                }
                if moved[a] {
                    return Err(Error::NotAPermutation {
                        degree,
                        reason: format!("point {a} appears in two cycles"),
                    });
                }
                moved[a] = true;
                images[a] = b;
            }
        }
        Self::from_images(images)
    }

    /// Parses cycle notation like `"(0 1 2)(3 4)"`; `"()"` is the identity.
    ///
    /// Points may be separated by spaces or commas.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut number = String::new();
        let flush_number = |current: &mut Option<Vec<usize>>, number: &mut String| -> Result<()> {
            if !number.is_empty() {
                let pt: usize = number
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point `{number}`")))?;
                match current {
                    Some(c) => c.push(pt),
                    None => return Err(Error::Parse("point outside parentheses".into())),
                }
                number.clear();
            }
            Ok(())
        };
        for ch in text.chars() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(Error::Parse("nested parenthesis".into()));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush_number(&mut current, &mut number)?;
                    let cycle = current
                        .take()
                        .ok_or_else(|| Error::Parse("unmatched `)`".into()))?;
                    if !cycle.is_empty() {
                        cycles.push(cycle);
                    }
                }
                c if c.is_ascii_digit() => number.push(c),
                ' ' | ',' | '\t' => flush_number(&mut current, &mut number)?,
                other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
            }
        }
        if current.is_some() {
            return Err(Error::Parse("unmatched `(`".into()));
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Left-to-right composition: `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// `self` raised to the power `k` (negative exponents use the inverse).
    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut result = Permutation::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            result = result.compose(&base).expect("equal degrees");
        }
        result
    }

    /// Conjugate `self^other = other⁻¹ · self · other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Result<Permutation> {
        other.inverse().compose(self)?.compose(other)
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// Cycle decomposition including fixed points, each cycle starting at its
    /// smallest point, cycles sorted by starting point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    /// Multiset of cycle lengths, sorted ascending. Lengths sum to the degree.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lengths.sort_unstable();
        lengths
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &img)| *i == img)
            .count()
    }

    /// Cycle-notation string, `"()"` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let nontrivial: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect();
        if nontrivial.is_empty() {
            "()".to_string()
        } else {
            nontrivial.concat()
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

/// JSON form: either an image array `[1,0,2]` or a cycle string `"(0 1)"`.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum PermutationJson {
    Images(Vec<usize>),
    Cycles(String),
}

impl PermutationJson {
    pub fn into_permutation(self, degree: usize) -> Result<Permutation> {
        match self {
            PermutationJson::Images(images) => {
                if images.len() != degree {
                    return Err(Error::DegreeMismatch(images.len(), degree));
                }
                Permutation::from_images(images)
            }
            PermutationJson::Cycles(text) => Permutation::parse_cycles(degree, &text),
        }
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(ser)
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_left_to_right() {
        // (0 1) then (1 2): 0→1→2, 1→0→0, 2→2→1, i.e. (0 2 1).
        let p = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let q = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let pq = p.compose(&q).unwrap();
        assert_eq!(pq, Permutation::parse_cycles(3, "(0 2 1)").unwrap());

        let id = Permutation::identity(2);
        let swap = Permutation::parse_cycles(2, "(0 1)").unwrap();
        assert_eq!(id.compose(&swap).unwrap(), swap);
        assert_eq!(swap.compose(&swap.inverse()).unwrap(), Permutation::identity(2));
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert!(matches!(p.compose(&q), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn cycle_type_counts_fixed_points() {
        assert_eq!(Permutation::identity(4).cycle_type(), vec![1, 1, 1, 1]);
        let p = Permutation::parse_cycles(4, "(0 1)(2 3)").unwrap();
        assert_eq!(p.cycle_type(), vec![2, 2]);
        assert_eq!(p.order(), 2);
    }

    #[test]
    fn cycle_string_round_trip() {
        let p = Permutation::parse_cycles(6, "(0 3 5)(1 2)").unwrap();
        let s = p.to_cycle_string();
        assert_eq!(Permutation::parse_cycles(6, &s).unwrap(), p);
        assert_eq!(Permutation::identity(5).to_cycle_string(), "()");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
        assert!(Permutation::from_cycles(4, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn five_cycle_on_pairs_has_type_5_5() {
        // A 5-cycle acting on the ten 2-subsets of 5 points splits them into
        // two 5-cycles; checked through the induced action in action.rs tests.
        let p = Permutation::parse_cycles(5, "(0 1 2 3 4)").unwrap();
        assert_eq!(p.cycle_type(), vec![5]);
        assert_eq!(p.pow(5), Permutation::identity(5));
        assert_eq!(p.pow(-1), p.inverse());
    }
}
