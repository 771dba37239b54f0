//! Wreath products G wr H in the imprimitive and product actions.

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

/// Which of the two standard wreath actions to construct.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WreathMode {
    /// On the disjoint union of p copies of the G-points (degree n·p).
    Imprimitive,
    /// On the cartesian power of the G-points (degree n^p).
    Product,
}

/// Wreath product of `g` (degree n) by `h` (transitive of degree p).
///
/// Generators: the generators of `g` acting in the first copy/coordinate,
/// plus the generators of `h` permuting the copies/coordinates. With `h`
/// transitive this generates the full G^p ⋊ H.
pub fn wreath_product(g: &PermGroup, h: &PermGroup, mode: WreathMode) -> Result<PermGroup> {
    if !h.is_transitive() {
        return Err(Error::Intransitive);
    }
    let n = g.degree();
    let p = h.degree();
    let mut gens: Vec<Permutation> = Vec::new();
    match mode {
        WreathMode::Imprimitive => {
            // Point (copy b, point x) is b·n + x.
            let degree = n
                .checked_mul(p)
                .ok_or_else(|| Error::InvalidArgument("wreath degree overflow".into()))?;
            for gen in g.generators() {
                let mut images: Vec<usize> = (0..degree).collect();
                for x in 0..n {
                    images[x] = gen.apply(x);
                }
                gens.push(Permutation::from_images(images)?);
            }
            for top in h.generators() {
                let mut images = vec![0; degree];
                for b in 0..p {
                    for x in 0..n {
                        images[b * n + x] = top.apply(b) * n + x;
                    }
                }
                gens.push(Permutation::from_images(images)?);
            }
            PermGroup::new(gens).map(|w| w.with_cap(g.cap()))
        }
        WreathMode::Product => {
            // Point is a tuple (x_0, …, x_{p−1}) ranked in base n.
            let degree = n
                .checked_pow(p as u32)
                .filter(|&d| d <= 1 << 24)
                .ok_or_else(|| Error::InvalidArgument("product action degree too large".into()))?;
            for gen in g.generators() {
                // Act on coordinate 0 only.
                let stride = degree / n;
                let mut images = vec![0; degree];
                for t in 0..degree {
                    let x0 = t / stride;
                    images[t] = gen.apply(x0) * stride + t % stride;
                }
                gens.push(Permutation::from_images(images)?);
            }
            for top in h.generators() {
                // (f^σ)(i) = f(σ⁻¹(i)): permute coordinates.
                let inv = top.inverse();
                let mut images = vec![0; degree];
                for t in 0..degree {
                    let tuple = unrank(t, n, p);
                    let mut moved = vec![0; p];
                    for (i, slot) in moved.iter_mut().enumerate() {
                        *slot = tuple[inv.apply(i)];
                    }
                    images[t] = rank(&moved, n);
                }
                gens.push(Permutation::from_images(images)?);
            }
            PermGroup::new(gens).map(|w| w.with_cap(g.cap()))
        }
    }
}

fn rank(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * n + x)
}

fn unrank(mut r: usize, n: usize, arity: usize) -> Vec<usize> {
    let mut tuple = vec![0; arity];
    for slot in (0..arity).rev() {
        tuple[slot] = r % n;
        r /= n;
    }
    tuple
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
    fn s2_wr_c2_is_dihedral_of_order_8() {
        let s2 = group(2, &["(0 1)"]);
        let c2 = group(2, &["(0 1)"]);
        let w = wreath_product(&s2, &c2, WreathMode::Imprimitive).unwrap();
        assert_eq!(w.degree(), 4);
        assert_eq!(w.order().unwrap(), 8);
    }

    #[test]
    fn s3_wr_c3_imprimitive() {
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        let c3 = group(3, &["(0 1 2)"]);
        let w = wreath_product(&s3, &c3, WreathMode::Imprimitive).unwrap();
        assert_eq!(w.degree(), 9);
        assert_eq!(w.order().unwrap(), 6usize.pow(3) * 3);
        assert!(!w.is_primitive().unwrap());
    }

    #[test]
    fn trivial_base_leaves_top_on_blocks() {
        let trivial = PermGroup::trivial(1);
        let c3 = group(3, &["(0 1 2)"]);
        let w = wreath_product(&trivial, &c3, WreathMode::Imprimitive).unwrap();
        assert_eq!(w.degree(), 3);
        assert_eq!(w.order().unwrap(), 3);
    }

    #[test]
    fn product_action_order() {
        let s2 = group(2, &["(0 1)"]);
        let c2 = group(2, &["(0 1)"]);
        let w = wreath_product(&s2, &c2, WreathMode::Product).unwrap();
        assert_eq!(w.degree(), 4);
        assert_eq!(w.order().unwrap(), 8);
    }

    #[test]
    fn intransitive_top_rejected() {
        let s2 = group(2, &["(0 1)"]);
        let top = group(3, &["(0 1)"]);
        assert!(wreath_product(&s2, &top, WreathMode::Imprimitive).is_err());
    }
}
