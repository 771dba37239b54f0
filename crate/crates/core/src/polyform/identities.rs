//! Exact verification of the displayed factorization identities, by
//! expanding both sides in bivariate polynomial rings over ℚ and comparing
//! monomial by monomial. Denominators are cleared symmetrically first, and
//! the free parameter d is specialized to several concrete squarefree values.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One};

use super::bipoly::BiPoly;
use super::parse::parse_bipoly;
use super::shapes::pell_fundamental;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// The verifiable identity tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityTag {
    /// f(t,X) = X⁴+2(1−t)X²+(1+t)² factors over ℚ at every square t = u².
    AbsIrrQuartic,
    /// X²(X−t) − 1 factors after the unit substitution t = (1−Z³)/Z.
    UnitExample,
    /// f(t,X) = −4dX²(dX²−t²)−1 factors at t = (Z²+d)/(Z²−d), d ∈ {2,3,5}.
    DegreeFourConjecture,
    /// t̄ = (z̄²+d)/(z̄²−d) is the integer u²+dv² at Pell points z̄ = u/v.
    PellSubstitution,
}

impl IdentityTag {
    pub const ALL: [IdentityTag; 4] = [
        IdentityTag::AbsIrrQuartic,
        IdentityTag::UnitExample,
        IdentityTag::DegreeFourConjecture,
        IdentityTag::PellSubstitution,
    ];
}

impl fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            IdentityTag::AbsIrrQuartic => "absirr-quartic",
            IdentityTag::UnitExample => "unit-example",
            IdentityTag::DegreeFourConjecture => "degree4-conjecture",
            IdentityTag::PellSubstitution => "pell-substitution",
        };
        write!(f, "{name}")
    }
}

impl FromStr for IdentityTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "absirr-quartic" => Ok(IdentityTag::AbsIrrQuartic),
            "unit-example" => Ok(IdentityTag::UnitExample),
            "degree4-conjecture" => Ok(IdentityTag::DegreeFourConjecture),
            "pell-substitution" => Ok(IdentityTag::PellSubstitution),
            other => Err(Error::InvalidArgument(format!("unknown identity `{other}`"))),
        }
    }
}

/// Checks the identity; on mismatch the error lists the differing monomials.
pub fn verify_identity(tag: IdentityTag) -> Result<()> {
    match tag {
        IdentityTag::AbsIrrQuartic => absirr_quartic(),
        IdentityTag::UnitExample => unit_example(),
        IdentityTag::DegreeFourConjecture => {
            for d in [2i64, 3, 5] {
                degree_four_conjecture(d)?;
            }
            Ok(())
        }
        IdentityTag::PellSubstitution => {
            for d in [2i64, 3, 5] {
                pell_substitution(d)?;
            }
            Ok(())
        }
    }
}

/// Equality check with a monomial diff on failure. Variable names are only
/// used for the message.
pub fn assert_bipoly_equal(lhs: &BiPoly, rhs: &BiPoly, vars: (&str, &str)) -> Result<()> {
    if lhs == rhs {
        return Ok(());
    }
    let diff = lhs.sub(rhs);
    let mut monomials = Vec::new();
    for (&(i, j), c) in diff.terms() {
        monomials.push(format!("{c}·{}^{i}·{}^{j}", vars.0, vars.1));
    }
    Err(Error::Internal(format!(
        "identity mismatch; lhs − rhs = {}",
        monomials.join(" + ")
    )))
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// f(u²,X) = (X²+2uX+u²+1)(X²−2uX+u²+1) for f = X⁴+2(1−t)X²+(1+t)².
fn absirr_quartic() -> Result<()> {
    let f = parse_bipoly("X^4 + 2(1-t)X^2 + (1+t)^2")?;
    // Substitute t = u² (denominator 1); the result lives in (u, X).
    let (lhs, _) = f.substitute_first_ratfun(
        &UniPoly::monomial(BigRational::one(), 2),
        &UniPoly::one(),
    )?;
    let rhs = {
        // (X² + 2uX + u² + 1)(X² − 2uX + u² + 1), u the first variable.
        let x2 = BiPoly::term(rat(1), 0, 2);
        let u2_plus_1 = BiPoly::term(rat(1), 2, 0).add(&BiPoly::one());
        let cross = BiPoly::term(rat(2), 1, 1);
        let a = x2.add(&cross).add(&u2_plus_1);
        let b = x2.sub(&cross).add(&u2_plus_1);
        a.mul(&b)
    };
    assert_bipoly_equal(&lhs, &rhs, ("u", "X"))
}

/// H((1−Z³)/Z, X) − 1 = (X − 1/Z)(X² + Z²X + Z) for H = X²(X−t),
/// both sides cleared by Z.
fn unit_example() -> Result<()> {
    let h = parse_bipoly("X^2(X - t)")?;
    let num = UniPoly::from_int_coeffs(&[1, 0, 0, -1]); // 1 − Z³
    let den = UniPoly::x();
    let (substituted, power) = h.substitute_first_ratfun(&num, &den)?;
    if power != 1 {
        return Err(Error::Internal("unexpected clearing power".into()));
    }
    // LHS·Z = H(...)·Z − Z.
    let z = BiPoly::term(rat(1), 1, 0);
    let lhs = substituted.sub(&z);
    // RHS·Z = (ZX − 1)(X² + Z²X + Z).
    let zx_minus_1 = BiPoly::term(rat(1), 1, 1).sub(&BiPoly::one());
    let second = BiPoly::term(rat(1), 0, 2)
        .add(&BiPoly::term(rat(1), 2, 1))
        .add(&z);
    let rhs = zx_minus_1.mul(&second);
    assert_bipoly_equal(&lhs, &rhs, ("Z", "X"))
}

/// f((Z²+d)/(Z²−d), X)·(Z²−d)² = −(2dX²(Z²−d) − 4dZX − (Z²−d))
///                               ·(2dX²(Z²−d) + 4dZX − (Z²−d))
/// for f = −4dX²(dX²−t²)−1, at a concrete d.
fn degree_four_conjecture(d: i64) -> Result<()> {
    // f = −4d²X⁴ + 4dX²t² − 1 (expanded).
    let f = BiPoly::term(rat(-4 * d * d), 0, 4)
        .add(&BiPoly::term(rat(4 * d), 2, 2))
        .sub(&BiPoly::one());
    let num = UniPoly::from_int_coeffs(&[d, 0, 1]); // Z² + d
    let den = UniPoly::from_int_coeffs(&[-d, 0, 1]); // Z² − d
    let (lhs, power) = f.substitute_first_ratfun(&num, &den)?;
    if power != 2 {
        return Err(Error::Internal("unexpected clearing power".into()));
    }
    let den_b = BiPoly::from_unipoly_first(&den);
    let base = BiPoly::term(rat(2 * d), 0, 2).mul(&den_b).sub(&den_b);
    let cross = BiPoly::term(rat(4 * d), 1, 1);
    let rhs = base.sub(&cross).mul(&base.add(&cross)).neg();
    assert_bipoly_equal(&lhs, &rhs, ("Z", "X"))
}

/// (z̄²+d)/(z̄²−d) at z̄ = u/v equals (u²+dv²)/(u²−dv²) symbolically, and at
/// Pell solutions u²−dv²=1 the specialization t̄ = u²+dv² is an integer.
fn pell_substitution(d: i64) -> Result<()> {
    // Symbolic part, in the variables (u, v): clearing v² in numerator and
    // denominator of (z²±d) must give u²+dv² and u²−dv².
    let z2 = BiPoly::term(rat(1), 2, 0); // u²
    let v2 = BiPoly::term(rat(1), 0, 2); // v²
    let num_expected = z2.add(&v2.scale(&rat(d)));
    let den_expected = z2.sub(&v2.scale(&rat(d)));
    // (u/v)² + d cleared by v²  =  u² + d·v².
    let num_built = z2.add(&BiPoly::constant(rat(d)).mul(&v2));
    let den_built = z2.sub(&BiPoly::constant(rat(d)).mul(&v2));
    assert_bipoly_equal(&num_built, &num_expected, ("u", "v"))?;
    assert_bipoly_equal(&den_built, &den_expected, ("u", "v"))?;

    // Numeric part at the fundamental Pell solution and two iterates.
    let big_d = BigInt::from(d);
    let (mut u, mut v) = pell_fundamental(&big_d);
    for _ in 0..3 {
        let unit_check = &u * &u - &big_d * &v * &v;
        if !unit_check.is_one() {
            return Err(Error::Internal(format!(
                "pell iterate fails the unit equation for d = {d}"
            )));
        }
        let z = BigRational::new(u.clone(), v.clone());
        let t_value = (z.clone() * z.clone() + rat(d)) / (z.clone() * z - rat(d));
        let expected = BigRational::from_integer(&u * &u + &big_d * &v * &v);
        if t_value != expected || !t_value.denom().is_one() {
            return Err(Error::Internal(format!(
                "specialized t is not the expected integer for d = {d}"
            )));
        }
        let (u_next, v_next) = {
            let (u1, v1) = pell_fundamental(&big_d);
            (&u * &u1 + &big_d * &v * &v1, &u * &v1 + &v * &u1)
        };
        u = u_next;
        v = v_next;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        for tag in IdentityTag::ALL {
            verify_identity(tag).unwrap_or_else(|e| panic!("{tag}: {e}"));
        }
    }

    #[test]
    fn injected_fault_reports_monomial_diff() {
        // Mutate the quartic identity: compare f(u²,X) against a wrong
        // product and check the diff message names monomials.
        let f = parse_bipoly("X^4 + 2(1-t)X^2 + (1+t)^2").unwrap();
        let (lhs, _) = f
            .substitute_first_ratfun(
                &UniPoly::monomial(BigRational::one(), 2),
                &UniPoly::one(),
            )
            .unwrap();
        let wrong = lhs.add(&BiPoly::term(rat(7), 1, 1));
        let err = assert_bipoly_equal(&lhs, &wrong, ("u", "X")).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("identity mismatch"), "{msg}");
        assert!(msg.contains("u^1·X^1"), "{msg}");
    }

    #[test]
    fn tag_round_trip() {
        for tag in IdentityTag::ALL {
            assert_eq!(IdentityTag::from_str(&tag.to_string()).unwrap(), tag);
        }
    }
}
