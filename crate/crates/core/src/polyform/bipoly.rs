//! Bivariate polynomials over ℚ with exact rational coefficients.
//!
//! Monomials are kept in a sorted map keyed by (first-variable exponent,
//! second-variable exponent); zero coefficients are never stored. The first
//! variable is the specialization parameter (t), the second the main
//! variable (X), but nothing below depends on those names.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Canonical sparse bivariate polynomial over ℚ.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        BiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BiPoly { terms }
    }

    pub fn from_int(c: i64) -> Self {
        BiPoly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// Monomial c·t^i·X^j.
    pub fn term(c: BigRational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    /// The first variable (t).
    pub fn var_first() -> Self {
        BiPoly::term(BigRational::one(), 1, 0)
    }

    /// The second variable (X).
    pub fn var_second() -> Self {
        BiPoly::term(BigRational::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn insert(&mut self, key: (u32, u32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&key, c) in &other.terms {
            out.insert(key, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&key, c) in &other.terms {
            out.insert(key, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.insert((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, a)| (k, a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Degree in the first variable (t); `None` for zero.
    pub fn degree_first(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// Degree in the second variable (X); `None` for zero.
    pub fn degree_second(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Whether every monomial has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|&(i, j)| i + j);
        match degrees.next() {
            None => true,
            Some(first) => degrees.all(|d| d == first),
        }
    }

    /// Whether the first variable divides every monomial.
    pub fn divisible_by_first(&self) -> bool {
        !self.is_zero() && self.terms.keys().all(|&(i, _)| i > 0)
    }

    /// Specializes the first variable, returning a univariate polynomial in
    /// the second.
    pub fn eval_first(&self, value: &BigRational) -> UniPoly {
        let jmax = match self.degree_second() {
            None => return UniPoly::zero(),
            Some(j) => j as usize,
        };
        let mut coeffs = vec![BigRational::zero(); jmax + 1];
        for (&(i, j), c) in &self.terms {
            let mut power = BigRational::one();
            for _ in 0..i {
                power *= value;
            }
            coeffs[j as usize] += c * power;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Specializes the second variable, returning a polynomial in the first.
    pub fn eval_second(&self, value: &BigRational) -> UniPoly {
        let imax = match self.degree_first() {
            None => return UniPoly::zero(),
            Some(i) => i as usize,
        };
        let mut coeffs = vec![BigRational::zero(); imax + 1];
        for (&(i, j), c) in &self.terms {
            let mut power = BigRational::one();
            for _ in 0..j {
                power *= value;
            }
            coeffs[i as usize] += c * power;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Coefficient of (first variable)^i as a univariate polynomial in the
    /// second variable.
    pub fn coeff_of_first_power(&self, i: u32) -> UniPoly {
        let jmax = match self.degree_second() {
            None => return UniPoly::zero(),
            Some(j) => j as usize,
        };
        let mut coeffs = vec![BigRational::zero(); jmax + 1];
        for (&(ti, j), c) in &self.terms {
            if ti == i {
                coeffs[j as usize] = c.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Univariate view `p(X)` of a polynomial not involving the first
    /// variable.
    pub fn as_univariate_in_second(&self) -> Result<UniPoly> {
        if self.degree_first().unwrap_or(0) > 0 {
            return Err(Error::InvalidArgument(
                "polynomial involves the parameter variable".into(),
            ));
        }
        Ok(self.coeff_of_first_power(0))
    }

    /// Embeds a univariate polynomial as a polynomial in the second variable.
    pub fn from_unipoly_second(p: &UniPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            out.insert((0, j as u32), c.clone());
        }
        out
    }

    /// Embeds a univariate polynomial as a polynomial in the first variable.
    pub fn from_unipoly_first(p: &UniPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.insert((i as u32, 0), c.clone());
        }
        out
    }

    /// Substitutes the rational function `num/den` (polynomials in a fresh
    /// variable Z) for the first variable and clears denominators:
    /// returns `(P, e)` with `self(num/den, X) · den^e = P(Z, X)` and
    /// `e = degree_first(self)`.
    pub fn substitute_first_ratfun(&self, num: &UniPoly, den: &UniPoly) -> Result<(BiPoly, u32)> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let e = self.degree_first().unwrap_or(0);
        let num_b = BiPoly::from_unipoly_first(num);
        let den_b = BiPoly::from_unipoly_first(den);
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            // c · num^i · den^(e−i) · X^j
            let part = num_b
                .pow(i)
                .mul(&den_b.pow(e - i))
                .scale(c)
                .mul(&BiPoly::term(BigRational::one(), 0, j));
            out = out.add(&part);
        }
        Ok((out, e))
    }

    pub fn to_string_with(&self, var1: &str, var2: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(u32, u32, &BigRational)> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| (i, j, c))
            .collect();
        // Highest total degree first, then by main-variable degree.
        terms.sort_by(|a, b| (b.0 + b.1, b.1).cmp(&(a.0 + a.1, a.1)));
        let mut out = String::new();
        for (idx, (i, j, c)) in terms.iter().enumerate() {
            let mut piece = String::new();
            let abs = if c.is_negative() { -(*c).clone() } else { (*c).clone() };
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (*i == 0 && *j == 0) {
                parts.push(format!("{abs}"));
            }
            for (var, e) in [(var1, *i), (var2, *j)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            piece.push_str(&parts.join("*"));
            if idx == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&piece);
        }
        out
    }
}

use num::Signed;

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("t", "X"))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("t", "X"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn arithmetic_and_degrees() {
        // f = X² − t
        let f = BiPoly::term(rat(1), 0, 2).sub(&BiPoly::var_first());
        assert_eq!(f.total_degree(), Some(2));
        assert_eq!(f.degree_first(), Some(1));
        assert_eq!(f.degree_second(), Some(2));
        assert!(!f.is_homogeneous());
        let sq = f.mul(&f);
        assert_eq!(sq.coeff(0, 4), rat(1));
        assert_eq!(sq.coeff(1, 2), rat(-2));
        assert_eq!(sq.coeff(2, 0), rat(1));
    }

    #[test]
    fn homogeneity() {
        // X² − 3t² homogeneous; tX divisible by t.
        let h = BiPoly::term(rat(1), 0, 2).sub(&BiPoly::term(rat(3), 2, 0));
        assert!(h.is_homogeneous());
        assert!(!h.divisible_by_first());
        let tx = BiPoly::term(rat(1), 1, 1);
        assert!(tx.divisible_by_first());
    }

    #[test]
    fn specialization() {
        // f = X⁴ + 2(1−t)X² + (1+t)², at t = 4: X⁴ − 6X² + 25.
        let f = BiPoly::term(rat(1), 0, 4)
            .add(
                &BiPoly::from_int(1)
                    .sub(&BiPoly::var_first())
                    .scale(&rat(2))
                    .mul(&BiPoly::term(rat(1), 0, 2)),
            )
            .add(&BiPoly::from_int(1).add(&BiPoly::var_first()).pow(2));
        let at4 = f.eval_first(&rat(4));
        assert_eq!(at4, UniPoly::from_int_coeffs(&[25, 0, -6, 0, 1]));
    }

    #[test]
    fn ratfun_substitution_clears_denominator() {
        // f = tX; substitute t = (1−Z³)/Z: f·Z = (1−Z³)X.
        let f = BiPoly::term(rat(1), 1, 1);
        let num = UniPoly::from_int_coeffs(&[1, 0, 0, -1]);
        let den = UniPoly::x();
        let (p, e) = f.substitute_first_ratfun(&num, &den).unwrap();
        assert_eq!(e, 1);
        let expected = BiPoly::from_unipoly_first(&num).mul(&BiPoly::var_second());
        assert_eq!(p, expected);
    }
}
