//! Exact cyclotomic integers Σ cᵤ·ζₙᵘ, stored as integer coefficient vectors
//! in the power basis of a fixed root of unity, with reduction modulo the
//! cyclotomic polynomial only where a canonical answer is needed.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num::{BigInt, One, Zero};

use crate::perm::{self};

/// Element of ℤ[ζₙ] as a length-n coefficient vector over the powers of ζₙ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyc {
    order: u64,
    coeffs: Vec<BigInt>,
}

impl Cyc {
    pub fn zero(order: u64) -> Self {
        Cyc {
            order,
            coeffs: vec![BigInt::zero(); order as usize],
        }
    }

    pub fn from_integer(order: u64, value: BigInt) -> Self {
        let mut c = Cyc::zero(order);
        c.coeffs[0] = value;
        c
    }

    /// c·ζᵘ.
    pub fn root_multiple(order: u64, exponent: u64, c: BigInt) -> Self {
        let mut out = Cyc::zero(order);
        out.coeffs[(exponent % order) as usize] += c;
        out
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Reinterprets in ℤ[ζₘ] for a multiple m of the current order.
    pub fn embed(&self, m: u64) -> Cyc {
        assert_eq!(m % self.order, 0, "target order must be a multiple");
        let stride = m / self.order;
        let mut out = Cyc::zero(m);
        for (u, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.coeffs[u * stride as usize] = c.clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Cyc) -> Cyc {
        let m = perm::lcm(self.order as usize, other.order as usize) as u64;
        let mut a = self.embed(m);
        let b = other.embed(m);
        for (slot, c) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *slot += c;
        }
        a
    }

    pub fn sub(&self, other: &Cyc) -> Cyc {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> Cyc {
        Cyc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &Cyc) -> Cyc {
        let m = perm::lcm(self.order as usize, other.order as usize) as u64;
        let a = self.embed(m);
        let b = other.embed(m);
        let mut out = Cyc::zero(m);
        for (u, cu) in a.coeffs.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            for (v, cv) in b.coeffs.iter().enumerate() {
                if cv.is_zero() {
                    continue;
                }
                let slot = (u + v) % m as usize;
                out.coeffs[slot] += cu * cv;
            }
        }
        out
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Cyc {
        let n = self.order as usize;
        let mut out = Cyc::zero(self.order);
        for (u, c) in self.coeffs.iter().enumerate() {
            out.coeffs[(n - u) % n] += c;
        }
        out
    }

    /// Canonical rational-integer value, if the element lies in ℤ.
    ///
    /// Reduces the coefficient polynomial modulo the cyclotomic polynomial
    /// Φₙ; the element is an integer iff the remainder is constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        let phi = cyclotomic_polynomial(self.order);
        let rem = rem_by_monic(&self.coeffs, &phi);
        if rem.iter().skip(1).all(|c| c.is_zero()) {
            Some(rem.first().cloned().unwrap_or_else(BigInt::zero))
        } else {
            None
        }
    }

    pub fn is_zero_value(&self) -> bool {
        self.as_integer().map_or(false, |v| v.is_zero())
    }
}

/// Remainder of an integer polynomial by a monic integer polynomial.
fn rem_by_monic(f: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    let ddeg = d.len() - 1;
    let mut rem: Vec<BigInt> = f.to_vec();
    while rem.last().map_or(false, |c| c.is_zero()) {
        rem.pop();
    }
    while rem.len() > ddeg {
        let k = rem.len() - 1 - ddeg;
        let top = rem.last().unwrap().clone();
        for (i, dc) in d.iter().enumerate() {
            rem[k + i] -= &top * dc;
        }
        while rem.last().map_or(false, |c| c.is_zero()) {
            rem.pop();
        }
    }
    if rem.is_empty() {
        rem.push(BigInt::zero());
    }
    rem
}

/// Φₙ as an integer coefficient vector, ascending, memoized.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    // Φₙ = (xⁿ − 1) / Π_{d | n, d < n} Φ_d
    let mut numerator = vec![BigInt::zero(); n as usize + 1];
    numerator[0] = BigInt::from(-1);
    numerator[n as usize] = BigInt::one();
    let mut result = numerator;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            result = div_exact_monic(&result, &phi_d);
        }
    }
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// Exact quotient by a monic divisor (the remainder is known to vanish).
fn div_exact_monic(f: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    let ddeg = d.len() - 1;
    let mut rem: Vec<BigInt> = f.to_vec();
    let mut quo = vec![BigInt::zero(); f.len() - ddeg];
    for k in (0..quo.len()).rev() {
        let top = rem[k + ddeg].clone();
        quo[k] = top.clone();
        if top.is_zero() {
            continue;
        }
        for (i, dc) in d.iter().enumerate() {
            rem[k + i] -= &top * dc;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    while quo.last().map_or(false, |c| c.is_zero()) {
        quo.pop();
    }
    quo
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn sums_of_all_roots_vanish() {
        // 1 + ζ + ζ² + … + ζ^(n−1) = 0 for n > 1.
        for n in [2u64, 3, 5, 6, 12] {
            let mut total = Cyc::zero(n);
            for u in 0..n {
                total = total.add(&Cyc::root_multiple(n, u, BigInt::one()));
            }
            assert_eq!(total.as_integer(), Some(BigInt::zero()), "n = {n}");
        }
    }

    #[test]
    fn golden_ratio_relation() {
        // (ζ₅ + ζ₅⁴)·(ζ₅² + ζ₅³) = ζ³+ζ⁴+ζ⁶+ζ⁷ = ζ³+ζ⁴+ζ+ζ² = −1.
        let a = Cyc::root_multiple(5, 1, BigInt::one()).add(&Cyc::root_multiple(
            5,
            4,
            BigInt::one(),
        ));
        let b = Cyc::root_multiple(5, 2, BigInt::one()).add(&Cyc::root_multiple(
            5,
            3,
            BigInt::one(),
        ));
        assert_eq!(a.mul(&b).as_integer(), Some(BigInt::from(-1)));
        // a itself is irrational.
        assert_eq!(a.as_integer(), None);
    }

    #[test]
    fn conjugation_and_embedding() {
        let z = Cyc::root_multiple(3, 1, BigInt::one());
        // ζ₃ · conj(ζ₃) = 1.
        assert_eq!(z.mul(&z.conj()).as_integer(), Some(BigInt::one()));
        let embedded = z.embed(12);
        assert_eq!(embedded.order(), 12);
        assert_eq!(
            embedded.mul(&embedded.conj()).as_integer(),
            Some(BigInt::one())
        );
    }
}
