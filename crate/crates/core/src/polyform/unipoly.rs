//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending degree order; the vector is empty for
//! the zero polynomial and otherwise ends in a nonzero coefficient.

use std::fmt;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial over ℚ in canonical dense form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn from_int(c: i64) -> Self {
        UniPoly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// The monomial c·xᵏ.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// The variable x.
    pub fn x() -> Self {
        UniPoly::monomial(BigRational::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    /// Coefficients as machine integers, constant term first.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ddeg = divisor.degree().unwrap();
        let dlc = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quo = UniPoly::zero();
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading_coeff() / dlc.clone();
            let shift = rdeg - ddeg;
            let term = UniPoly::monomial(factor, shift);
            quo = quo.add(&term);
            rem = rem.sub(&term.mul(divisor));
        }
        Ok((quo, rem))
    }

    /// Division that must be exact.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!(
                "remainder of degree {:?}",
                r.degree()
            )))
        }
    }

    /// Monic gcd (1 for coprime inputs, 0 only if both inputs are 0).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scaled to leading coefficient 1 (zero polynomial unchanged).
    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&lc.recip())
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitution of another polynomial for the variable.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    /// Clears denominators and integer content: returns `(c, g)` with
    /// `self = c·g`, `g` a primitive integer polynomial with positive leading
    /// coefficient (zero polynomial: `(0, 0)`).
    pub fn primitive_integer_parts(&self) -> (BigRational, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRational::zero(), Vec::new());
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = num::integer::gcd(content, c.clone());
        }
        if ints.last().unwrap().sign() == Sign::Minus {
            content = -content;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        (
            BigRational::new(content, denom_lcm),
            prim,
        )
    }

    /// Builds from integer coefficients, constant term first.
    pub fn from_bigint_coeffs(coeffs: &[BigInt]) -> UniPoly {
        UniPoly::from_coeffs(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Squarefree part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> Result<UniPoly> {
        if self.degree().unwrap_or(0) == 0 {
            return Ok(self.clone());
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g)
    }

    /// Yun's algorithm: returns `(aᵢ, i)` with `self = lc · Π aᵢ^i`, each aᵢ
    /// squarefree, monic, pairwise coprime (constant aᵢ omitted).
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UniPoly, u32)>> {
        let f = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return Ok(Vec::new());
        }
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.exact_div(&a)?;
        let mut c = df.exact_div(&a)?.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1u32;
        while b.degree().unwrap_or(0) > 0 {
            let d = b.gcd(&c);
            if d.degree().unwrap_or(0) > 0 {
                out.push((d.clone(), i));
            }
            b = b.exact_div(&d)?;
            c = c.exact_div(&d)?.sub(&b.derivative());
            i += 1;
        }
        Ok(out)
    }

    /// Number of distinct real roots, by Sturm's theorem (exact).
    pub fn real_root_count(&self) -> Result<usize> {
        let f = self.squarefree_part()?;
        let deg = match f.degree() {
            None | Some(0) => return Ok(0),
            Some(d) => d,
        };
        let mut chain = vec![f.clone(), f.derivative()];
        while chain.last().unwrap().degree().unwrap_or(0) > 0 {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        let sign_at_infinity = |p: &UniPoly, positive: bool| -> i32 {
            if p.is_zero() {
                return 0;
            }
            let lc = p.leading_coeff();
            let base = if lc.is_positive() { 1 } else { -1 };
            if positive || p.degree().unwrap() % 2 == 0 {
                base
            } else {
                -base
            }
        };
        let variations = |positive: bool| -> usize {
            let signs: Vec<i32> = chain
                .iter()
                .map(|p| sign_at_infinity(p, positive))
                .filter(|&s| s != 0)
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let _ = deg;
        Ok(variations(false) - variations(true))
    }

    /// Rational roots, via the rational-root theorem on the primitive form.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let (_, prim) = self.primitive_integer_parts();
        // Trailing zero coefficients give the root 0.
        let mut roots = Vec::new();
        let mut shifted = prim.clone();
        if shifted.first().map_or(false, |c| c.is_zero()) {
            roots.push(BigRational::zero());
            while shifted.first().map_or(false, |c| c.is_zero()) {
                shifted.remove(0);
            }
        }
        if shifted.len() <= 1 {
            return roots;
        }
        let a0 = shifted.first().unwrap().abs();
        let an = shifted.last().unwrap().abs();
        for p in divisors_of(&a0) {
            for q in divisors_of(&an) {
                for sign in [1i64, -1] {
                    let candidate =
                        BigRational::new(p.clone() * BigInt::from(sign), q.clone());
                    if self.eval(&candidate).is_zero() && !roots.contains(&candidate) {
                        roots.push(candidate);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Rendering with a chosen variable name.
    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff_part = if c.is_one() && k > 0 {
                String::new()
            } else if (-c.clone()).is_one() && k > 0 {
                "-".to_string()
            } else {
                format!("{c}")
            };
            let var_part = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let sep = if !coeff_part.is_empty() && !var_part.is_empty() && coeff_part != "-" {
                "*"
            } else {
                ""
            };
            terms.push(format!("{coeff_part}{sep}{var_part}"));
        }
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            if i == 0 {
                out.push_str(t);
            } else if let Some(stripped) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        out
    }
}

fn divisors_of(n: &BigInt) -> Vec<BigInt> {
    // Trial division; fine for the desk-scale constant terms we meet.
    let mut divs = Vec::new();
    if n.is_zero() {
        return divs;
    }
    let mut d = BigInt::one();
    let limit: BigInt = n.abs();
    while &d * &d <= limit {
        if (&limit % &d).is_zero() {
            divs.push(d.clone());
            let other = &limit / &d;
            if other != d {
                divs.push(other);
            }
        }
        d += 1;
    }
    divs.sort();
    divs
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("x"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_int_coeffs(coeffs)
    }

    #[test]
    fn gcd_of_shared_root() {
        // gcd(x²−1, x²−2x+1) = x−1.
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[1, -2, 1]);
        assert_eq!(a.gcd(&b), poly(&[-1, 1]));
    }

    #[test]
    fn derivative_and_eval() {
        let f = poly(&[1, 0, 0, 1]); // x³ + 1
        assert_eq!(f.derivative(), poly(&[0, 0, 3]));
        assert_eq!(
            f.eval(&BigRational::from_integer(BigInt::from(2))),
            BigRational::from_integer(BigInt::from(9))
        );
    }

    #[test]
    fn division_round_trip() {
        let f = poly(&[2, 3, 0, 5, 1]);
        let g = poly(&[1, 2, 1]);
        let (q, r) = f.div_rem(&g).unwrap();
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(f.exact_div(&g).is_err());
        assert!(f.div_rem(&UniPoly::zero()).is_err());
    }

    #[test]
    fn squarefree_decomposition_of_cube() {
        // (x−1)²·(x+2)
        let f = poly(&[-1, 1]).pow(2).mul(&poly(&[2, 1]));
        let parts = f.squarefree_decomposition().unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (poly(&[2, 1]), 1));
        assert_eq!(parts[1], (poly(&[-1, 1]), 2));
    }

    #[test]
    fn sturm_counts_real_roots() {
        assert_eq!(poly(&[-2, 0, 1]).real_root_count().unwrap(), 2); // x²−2
        assert_eq!(poly(&[1, 0, 1]).real_root_count().unwrap(), 0); // x²+1
        assert_eq!(poly(&[0, -3, 0, 1]).real_root_count().unwrap(), 3); // x³−3x
        assert_eq!(poly(&[-1, 1]).real_root_count().unwrap(), 1);
    }

    #[test]
    fn rational_roots_found() {
        // (x−2)(x+1)² = x³ − 3x − 2
        let f = poly(&[-2, -3, 0, 1]);
        let roots = f.rational_roots();
        assert_eq!(
            roots,
            vec![
                BigRational::from_integer(BigInt::from(-1)),
                BigRational::from_integer(BigInt::from(2)),
            ]
        );
        // 2x − 1 has root 1/2.
        let g = poly(&[-1, 2]);
        assert_eq!(g.rational_roots(), vec![BigRational::new(BigInt::one(), BigInt::from(2))]);
    }

    #[test]
    fn primitive_parts() {
        let f = UniPoly::from_coeffs(vec![
            BigRational::new(BigInt::from(-4), BigInt::from(6)),
            BigRational::new(BigInt::from(2), BigInt::from(3)),
        ]);
        let (content, prim) = f.primitive_integer_parts();
        assert_eq!(prim, vec![BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(content, BigRational::new(BigInt::from(2), BigInt::from(3)));
    }
}
