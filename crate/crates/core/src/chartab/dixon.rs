//! Dixon–Burnside character table computation.
//!
//! Class-sum structure constants are diagonalized simultaneously over a
//! finite field GF(p) with p ≡ 1 (mod exp G) and p > 2√|G|, and the
//! character values are lifted to exact cyclotomic integers through the
//! eigenvalue-multiplicity discrete Fourier inversion. Every produced table
//! is verified by orthogonality before it is returned.

use num::BigInt;

use super::cyclotomic::Cyc;
use super::{CharacterTable, ClassData};
use crate::error::{Error, Result};
use crate::perm::PermGroup;

/// Hard cap on the number of conjugacy classes a table may have.
pub const CLASS_CAP: usize = 60;

/// Computes the exact character table of a materializable group.
pub fn character_table(group: &PermGroup) -> Result<CharacterTable> {
    let classes = ClassData::new(group)?;
    let k = classes.count();
    if k > CLASS_CAP {
        return Err(Error::TableUnavailable(format!(
            "{k} conjugacy classes exceed the cap of {CLASS_CAP}"
        )));
    }
    let order = classes.order() as u64;
    let exponent = classes
        .element_orders()
        .iter()
        .fold(1u64, |acc, &o| crate::perm::lcm(acc as usize, o) as u64);
    let p = dixon_prime(exponent, order);
    let field = Fp { p };

    let matrices = class_matrices(&classes, &field);
    let eigenvectors = simultaneous_eigenvectors(&matrices, &field, k);
    if eigenvectors.len() != k {
        return Err(Error::Internal(format!(
            "expected {k} one-dimensional common eigenspaces, found {}",
            eigenvectors.len()
        )));
    }

    // Primitive e-th root of unity in GF(p).
    let generator = field.primitive_root();
    let zeta = field.pow(generator, (p - 1) / exponent);

    let sizes = classes.sizes().to_vec();
    let size_inv: Vec<u64> = sizes.iter().map(|&h| field.inv(h as u64 % p)).collect();

    let mut rows: Vec<(usize, Vec<Cyc>)> = Vec::with_capacity(k);
    for v in &eigenvectors {
        let omegas = eigenvalues_of_vector(&matrices, v, &field)?;
        // 1/d² = (1/|G|)·Σ_l ω_l·ω_{l*}/h_l.
        let mut s = 0u64;
        for l in 0..k {
            let term = field.mul(
                field.mul(omegas[l], omegas[classes.inverse_class(l)]),
                size_inv[l],
            );
            s = field.add(s, term);
        }
        let d_squared = field.mul(order % p, field.inv(s));
        let d = sqrt_mod(d_squared, p).ok_or_else(|| {
            Error::Internal("character degree is not a square mod p".into())
        })?;
        let degree = d.min(p - d);
        // χ(C_l) ≡ d·ω_l/h_l (mod p).
        let chi_mod: Vec<u64> = (0..k)
            .map(|l| field.mul(field.mul(degree, omegas[l]), size_inv[l]))
            .collect();
        let row = lift_row(&classes, &chi_mod, &field, zeta, exponent)?;
        rows.push((degree as usize, row));
    }

    rows.sort_by(|a, b| {
        (a.0, format!("{:?}", a.1)).cmp(&(b.0, format!("{:?}", b.1)))
    });
    let degrees: Vec<usize> = rows.iter().map(|(d, _)| *d).collect();
    let rows: Vec<Vec<Cyc>> = rows.into_iter().map(|(_, r)| r).collect();

    let table = CharacterTable::from_parts(classes, exponent, rows, degrees);
    table.verify()?;
    Ok(table)
}

/// Smallest prime p ≡ 1 (mod e) with p > 2√|G|.
fn dixon_prime(exponent: u64, order: u64) -> u64 {
    let bound = 2.0 * (order as f64).sqrt();
    let mut p = exponent + 1;
    loop {
        if (p as f64) > bound && is_prime(p) {
            return p;
        }
        p += exponent;
    }
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

/// GF(p) arithmetic on u64 values.
#[derive(Clone, Copy)]
struct Fp {
    p: u64,
}

impl Fp {
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    fn primitive_root(&self) -> u64 {
        let factors = prime_factors(self.p - 1);
        'candidate: for g in 2..self.p {
            for &q in &factors {
                if self.pow(g, (self.p - 1) / q) == 1 {
                    continue 'candidate;
                }
            }
            return g;
        }
        unreachable!("prime fields have primitive roots")
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Tonelli–Shanks square root mod an odd prime.
fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let f = Fp { p };
    if a == 0 {
        return Some(0);
    }
    if f.pow(a, (p - 1) / 2) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(f.pow(a, (p + 1) / 4));
    }
    // Write p−1 = q·2^s with q odd.
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    // A quadratic non-residue.
    let mut z = 2;
    while f.pow(z, (p - 1) / 2) == 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = f.pow(z, q);
    let mut t = f.pow(a, q);
    let mut r = f.pow(a, (q + 1) / 2);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = f.mul(t2, t2);
            i += 1;
        }
        let b = f.pow(c, 1 << (m - i - 1));
        m = i;
        c = f.mul(b, b);
        t = f.mul(t, c);
        r = f.mul(r, b);
    }
    Some(r)
}

/// Class-sum multiplication matrices: M_i[l][j] = #{x ∈ C_i : x⁻¹·z_l ∈ C_j}.
fn class_matrices(classes: &ClassData, field: &Fp) -> Vec<Vec<Vec<u64>>> {
    let k = classes.count();
    let elements = classes
        .group()
        .elements()
        .expect("class data implies materialized");
    let mut matrices = vec![vec![vec![0u64; k]; k]; k];
    for (l, z) in classes.representatives().iter().enumerate() {
        for x in elements {
            let i = classes.class_of(x).expect("element of the group");
            let y = x.inverse().compose(z).expect("equal degrees");
            let j = classes.class_of(&y).expect("element of the group");
            matrices[i][l][j] = field.add(matrices[i][l][j], 1);
        }
    }
    matrices
}

/// Splits GF(p)^k into the common one-dimensional eigenspaces of the class
/// matrices. Subspaces are invariant because the class algebra is
/// commutative and semisimple (p ∤ |G|).
fn simultaneous_eigenvectors(matrices: &[Vec<Vec<u64>>], field: &Fp, k: usize) -> Vec<Vec<u64>> {
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![identity_basis(k)];
    for m in matrices.iter().skip(1) {
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in subspaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let restricted = restrict(m, &basis, field);
            let lambdas = eigenvalues(&restricted, field);
            for lambda in lambdas {
                let local = eigenspace(&restricted, lambda, field);
                // Map local coordinate vectors back to the ambient space.
                let lifted: Vec<Vec<u64>> = local
                    .iter()
                    .map(|coords| {
                        let mut v = vec![0u64; k];
                        for (c, b) in coords.iter().zip(&basis) {
                            for (slot, &bv) in v.iter_mut().zip(b) {
                                *slot = field.add(*slot, field.mul(*c, bv));
                            }
                        }
                        v
                    })
                    .collect();
                next.push(row_reduce(lifted, field));
            }
        }
        subspaces = next;
    }
    subspaces.into_iter().map(|mut s| s.pop().unwrap()).collect()
}

fn identity_basis(k: usize) -> Vec<Vec<u64>> {
    (0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()
}

/// Matrix of the action of `m` on the span of `basis`, in basis coordinates.
fn restrict(m: &[Vec<u64>], basis: &[Vec<u64>], field: &Fp) -> Vec<Vec<u64>> {
    let d = basis.len();
    let reduced = row_reduce(basis.to_vec(), field);
    let pivots: Vec<usize> = reduced
        .iter()
        .map(|row| row.iter().position(|&c| c != 0).unwrap())
        .collect();
    let mut out = vec![vec![0u64; d]; d];
    for (s, b) in reduced.iter().enumerate() {
        let image = mat_vec(m, b, field);
        // Express image in the reduced basis via pivot elimination.
        let mut w = image;
        for (t, row) in reduced.iter().enumerate() {
            let c = w[pivots[t]];
            if c != 0 {
                let inv = field.inv(row[pivots[t]]);
                let coeff = field.mul(c, inv);
                out[t][s] = coeff;
                for (slot, &rv) in w.iter_mut().zip(row) {
                    *slot = field.sub(*slot, field.mul(coeff, rv));
                }
            }
        }
        debug_assert!(w.iter().all(|&c| c == 0), "subspace not invariant");
    }
    // Note: `out` was built against the reduced basis; callers lift through
    // the same reduced basis, so return it along that convention.
    out
}

fn mat_vec(m: &[Vec<u64>], v: &[u64], field: &Fp) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
        })
        .collect()
}

/// Row echelon form (pivots normalized to 1, zero rows dropped).
fn row_reduce(mut rows: Vec<Vec<u64>>, field: &Fp) -> Vec<Vec<u64>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = field.inv(rows[rank][col]);
        for c in col..cols {
            rows[rank][c] = field.mul(rows[rank][c], inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in col..cols {
                    let sub = field.mul(factor, rows[rank][c]);
                    rows[r][c] = field.sub(rows[r][c], sub);
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows.retain(|r| r.iter().any(|&c| c != 0));
    rows
}

/// Eigenvalues of a small matrix over GF(p), by scanning the roots of its
/// characteristic polynomial (computed through Hessenberg reduction, which
/// needs no divisions beyond pivot inverses).
fn eigenvalues(m: &[Vec<u64>], field: &Fp) -> Vec<u64> {
    let charpoly = characteristic_polynomial(m, field);
    let mut out = Vec::new();
    for lambda in 0..field.p {
        // Evaluate by Horner.
        let mut acc = 0u64;
        for &c in charpoly.iter().rev() {
            acc = field.add(field.mul(acc, lambda), c);
        }
        if acc == 0 {
            out.push(lambda);
        }
    }
    out
}

/// Characteristic polynomial det(xI − M), ascending coefficients.
fn characteristic_polynomial(m: &[Vec<u64>], field: &Fp) -> Vec<u64> {
    let n = m.len();
    let mut h: Vec<Vec<u64>> = m.to_vec();
    // Reduce to upper Hessenberg form by similarity transformations.
    for col in 0..n.saturating_sub(2) {
        let Some(pivot) = (col + 1..n).find(|&r| h[r][col] != 0) else {
            continue;
        };
        if pivot != col + 1 {
            h.swap(pivot, col + 1);
            for row in h.iter_mut() {
                row.swap(pivot, col + 1);
            }
        }
        let inv = field.inv(h[col + 1][col]);
        for r in col + 2..n {
            let factor = field.mul(h[r][col], inv);
            if factor == 0 {
                continue;
            }
            for c in 0..n {
                let sub = field.mul(factor, h[col + 1][c]);
                h[r][c] = field.sub(h[r][c], sub);
            }
            for row in h.iter_mut() {
                let add = field.mul(factor, row[r]);
                row[col + 1] = field.add(row[col + 1], add);
            }
        }
    }
    // Recurrence over leading principal minors of (xI − H).
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for i in 0..n {
        // p_{i+1}(x) = (x − h_ii)·p_i(x) − Σ_{j<i} h_{ji}·(Π β)·p_j(x)
        let mut next = poly_mul_linear(&polys[i], h[i][i], field);
        let mut beta = 1u64;
        for j in (0..i).rev() {
            beta = field.mul(beta, h[j + 1][j]);
            let coeff = field.mul(h[j][i], beta);
            if coeff != 0 {
                let scaled: Vec<u64> = polys[j].iter().map(|&c| field.mul(c, coeff)).collect();
                next = poly_sub(&next, &scaled, field);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// p(x)·(x − a).
fn poly_mul_linear(p: &[u64], a: u64, field: &Fp) -> Vec<u64> {
    let mut out = vec![0u64; p.len() + 1];
    for (i, &c) in p.iter().enumerate() {
        out[i + 1] = field.add(out[i + 1], c);
        out[i] = field.sub(out[i], field.mul(a, c));
    }
    out
}

fn poly_sub(a: &[u64], b: &[u64], field: &Fp) -> Vec<u64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            field.sub(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
            )
        })
        .collect()
}

/// Nullspace basis of (M − λI).
fn eigenspace(m: &[Vec<u64>], lambda: u64, field: &Fp) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m.to_vec();
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = field.sub(row[i], lambda);
    }
    let reduced = row_reduce(a, field);
    let mut pivot_cols = Vec::new();
    for row in &reduced {
        pivot_cols.push(row.iter().position(|&c| c != 0).unwrap());
    }
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![0u64; n];
        v[fc] = 1;
        for (row, &pc) in reduced.iter().zip(&pivot_cols) {
            // pivot normalized to 1: v[pc] = −row[fc].
            v[pc] = field.sub(0, row[fc]);
        }
        basis.push(v);
    }
    basis
}

fn eigenvalues_of_vector(
    matrices: &[Vec<Vec<u64>>],
    v: &[u64],
    field: &Fp,
) -> Result<Vec<u64>> {
    let pivot = v
        .iter()
        .position(|&c| c != 0)
        .ok_or_else(|| Error::Internal("zero eigenvector".into()))?;
    let inv = field.inv(v[pivot]);
    matrices
        .iter()
        .map(|m| {
            let image = mat_vec(m, v, field);
            let omega = field.mul(image[pivot], inv);
            // Confirm v is a genuine eigenvector of every matrix.
            for (iv, &vv) in image.iter().zip(v) {
                if *iv != field.mul(omega, vv) {
                    return Err(Error::Internal(
                        "vector fails the common-eigenvector check".into(),
                    ));
                }
            }
            Ok(omega)
        })
        .collect()
}

/// Lifts a mod-p character row to exact cyclotomic values via eigenvalue
/// multiplicities: m_u = (1/e_l)·Σ_s χ(g^s)·ζ^(−su), each m_u a
/// non-negative integer < p.
fn lift_row(
    classes: &ClassData,
    chi_mod: &[u64],
    field: &Fp,
    zeta: u64,
    exponent: u64,
) -> Result<Vec<Cyc>> {
    let k = classes.count();
    let mut row = Vec::with_capacity(k);
    for l in 0..k {
        let e_l = classes.element_orders()[l] as u64;
        let zeta_l = field.pow(zeta, exponent / e_l);
        let zeta_l_inv = field.inv(zeta_l);
        let e_inv = field.inv(e_l % field.p);
        let mut coeffs = Vec::with_capacity(e_l as usize);
        for u in 0..e_l {
            let mut total = 0u64;
            for s in 0..e_l {
                let class_of_power = classes.power_class(l, s as usize);
                let phase = field.pow(zeta_l_inv, (s * u) % e_l);
                total = field.add(total, field.mul(chi_mod[class_of_power], phase));
            }
            let m_u = field.mul(total, e_inv);
            coeffs.push(BigInt::from(m_u));
        }
        let mut value = Cyc::zero(e_l);
        for (u, c) in coeffs.into_iter().enumerate() {
            value = value.add(&Cyc::root_multiple(e_l, u as u64, c));
        }
        row.push(value);
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{permutation_character, ClassFunction};
    use crate::perm::{Action, ActionTarget, GroupId};

    fn degrees_of(id: GroupId) -> Vec<usize> {
        let g = id.build().unwrap();
        let table = character_table(&g).unwrap();
        table.degrees().to_vec()
    }

    #[test]
    fn s3_table() {
        assert_eq!(degrees_of(GroupId::Symmetric(3)), vec![1, 1, 2]);
    }

    #[test]
    fn c2_table() {
        assert_eq!(degrees_of(GroupId::Cyclic(2)), vec![1, 1]);
    }

    #[test]
    fn a5_table() {
        assert_eq!(degrees_of(GroupId::Alternating(5)), vec![1, 3, 3, 4, 5]);
    }

    #[test]
    fn s4_table() {
        assert_eq!(degrees_of(GroupId::Symmetric(4)), vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn psl27_table() {
        assert_eq!(
            degrees_of(GroupId::Psl2_7 { degree: 7 }),
            vec![1, 3, 3, 6, 7, 8]
        );
    }

    #[test]
    fn s5_pair_character_difference_is_irreducible() {
        let g = GroupId::Symmetric(5).build().unwrap();
        let table = character_table(&g).unwrap();
        let natural = permutation_character(
            table.classes(),
            &Action::build(&g, &ActionTarget::Natural).unwrap(),
        )
        .unwrap();
        let pairs = permutation_character(
            table.classes(),
            &Action::build(&g, &ActionTarget::KSubsets(2)).unwrap(),
        )
        .unwrap();
        let difference = pairs.sub(&natural);
        let decomposition = table.decompose(&difference).unwrap();
        assert!(decomposition.is_character);
        // Exactly one irreducible of degree 5.
        let mults: Vec<(usize, BigInt)> = table
            .degrees()
            .iter()
            .copied()
            .zip(decomposition.multiplicities.iter().map(|m| m.clone().unwrap()))
            .filter(|(_, m)| !num::Zero::is_zero(m))
            .collect();
        assert_eq!(mults, vec![(5, BigInt::from(1))]);
    }

    #[test]
    fn non_characters_are_rejected() {
        let g = GroupId::Symmetric(3).build().unwrap();
        let table = character_table(&g).unwrap();
        let natural = permutation_character(
            table.classes(),
            &Action::build(&g, &ActionTarget::Natural).unwrap(),
        )
        .unwrap();
        // π − 2·1 has ⟨·, 1⟩ = −1.
        let ones = ClassFunction {
            values: vec![1; table.classes().count()],
        };
        let f = natural.sub(&ones.scale(2));
        assert!(!table.decompose(&f).unwrap().is_character);
        // The zero class function is the empty character.
        let zero = ClassFunction {
            values: vec![0; table.classes().count()],
        };
        assert!(table.decompose(&zero).unwrap().is_character);
    }
}
