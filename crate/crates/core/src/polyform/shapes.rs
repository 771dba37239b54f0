//! Shape detection and the finiteness theorems for polynomials of special
//! form: Thue forms H(t,X)−1, powers t^m·h(X)−1, pencils P(X)−t·Q(X), the
//! pure family h(X)−t, and the Pellian degree-2 exception.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::bipoly::BiPoly;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};
use crate::verdict::{FieldFlag, FiredCriterion, RingFlag, Verdict, VerdictStatus, Witness};

/// Whether every monomial of `h` has the same total degree.
pub fn is_homogeneous(h: &BiPoly) -> bool {
    h.is_homogeneous()
}

/// Total degree (zero polynomial: none).
pub fn total_degree(h: &BiPoly) -> Option<u32> {
    h.total_degree()
}

/// Whether `t` divides every monomial.
pub fn divisible_by_t(h: &BiPoly) -> bool {
    h.divisible_by_first()
}

/// Separability in X of a homogeneous form, tested on h(X) = H(1,X):
/// gcd(h, h′) = 1 captures exactly the repeated linear factors involving X.
pub fn separable_in_x(h: &BiPoly) -> Result<bool> {
    if !h.is_homogeneous() {
        return Err(Error::InvalidArgument(
            "separability test expects a homogeneous form".into(),
        ));
    }
    if h.degree_second().unwrap_or(0) == 0 {
        // No X at all: an X-constant, vacuously separable.
        return Ok(true);
    }
    let dehom = h.eval_first(&BigRational::one());
    Ok(dehom.gcd(&dehom.derivative()).degree() == Some(0))
}

/// Proper-power test for a homogeneous form not divisible by t.
///
/// Factors h(X) = H(1,X) over ℚ; H is an e-th power in ℚ[t,X] for
/// e = gcd of multiplicities iff e > 1 and the leading unit is an e-th power
/// in ℚ.
pub fn proper_power_test(h: &BiPoly) -> Result<(bool, u32)> {
    if !h.is_homogeneous() || h.is_zero() {
        return Err(Error::InvalidArgument(
            "proper-power test expects a nonzero homogeneous form".into(),
        ));
    }
    if h.divisible_by_first() {
        return Err(Error::InvalidArgument(
            "proper-power test expects t ∤ H".into(),
        ));
    }
    let dehom = h.eval_first(&BigRational::one());
    if dehom.degree().unwrap_or(0) == 0 {
        // Constant in X and t ∤ H means H is a constant.
        return Ok((false, 1));
    }
    let factorization = super::factor::factor_q(&dehom)?;
    let e = factorization
        .factors
        .iter()
        .fold(0u32, |acc, (_, m)| num::integer::gcd(acc, *m));
    if e <= 1 {
        return Ok((false, 1));
    }
    // The scalar in front must itself be an e-th power in ℚ.
    if rational_root_exact(&factorization.content, e).is_some() {
        Ok((true, e))
    } else {
        Ok((false, 1))
    }
}

/// Exact e-th root of a rational, if it exists in ℚ.
fn rational_root_exact(c: &BigRational, e: u32) -> Option<BigRational> {
    if c.is_zero() {
        return Some(BigRational::zero());
    }
    if c.is_negative() && e % 2 == 0 {
        return None;
    }
    let num = integer_root_exact(&c.numer().abs(), e)?;
    let den = integer_root_exact(&c.denom().abs(), e)?;
    let sign = if c.is_negative() { -1 } else { 1 };
    Some(BigRational::new(num * BigInt::from(sign), den))
}

fn integer_root_exact(n: &BigInt, e: u32) -> Option<BigInt> {
    let root = n.nth_root(e);
    if root.pow(e) == *n {
        Some(root)
    } else {
        None
    }
}

/// What the shape detectors recognized (all detectors run; several can match).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DetectedShape {
    /// f = u·(H(t,X) − 1) with H homogeneous of the given total degree.
    Thue { degree: u32 },
    /// f = u·(t^m·h(X) − 1).
    PowerTimesPoly { m: u32, h_degree: u32 },
    /// f = P(X) − t·Q(X).
    Pencil { p_degree: u32, q_degree: u32 },
    /// f = u·(h(X) − c·t) with constant c.
    PolynomialImage { h_degree: u32 },
    /// f = u·(X² − d·t² − 1).
    Pell { d: BigInt },
}

/// Shape analysis result: recognized shapes plus the verdict they support.
#[derive(Clone, Debug)]
pub struct ShapeReport {
    pub detected: Vec<DetectedShape>,
    pub verdict: Verdict,
}

/// Runs every shape detector against `f` and applies the matching theorems.
///
/// The caller asserts that `f` is irreducible over ℚ(t); degree gates are
/// still checked. Units (nonzero rational multiples) do not change the
/// reducible-specialization set, so `f` is matched up to a unit.
pub fn shape_verdict(f: &BiPoly, field: FieldFlag, ring: RingFlag) -> Result<ShapeReport> {
    if f.degree_first().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument(
            "polynomial does not involve the parameter t".into(),
        ));
    }
    if f.degree_second().unwrap_or(0) < 2 {
        return Err(Error::InvalidArgument(
            "degree in X must be at least 2".into(),
        ));
    }
    let mut detected = Vec::new();
    let mut verdict = Verdict::inconclusive();

    // --- Thue normalization: f = u·(H − 1). -------------------------------
    if let Some(h) = thue_form(f) {
        let n = h.total_degree().unwrap_or(0);
        detected.push(DetectedShape::Thue { degree: n });

        if let Some(d) = pell_d(&h) {
            if d > BigInt::one() && integer_root_exact(&d, 2).is_none() {
                detected.push(DetectedShape::Pell { d: d.clone() });
                let witness = pell_witness(&d);
                verdict = verdict.merge(Verdict {
                    status: VerdictStatus::InfiniteWitness,
                    fired: Vec::new(),
                    witness: Some(witness),
                    notes: vec![format!(
                        "Pellian exception: X^2 - {d}t^2 = 1 has infinitely many integer solutions"
                    )],
                });
            }
        }

        if n > 2 && separable_in_x(&h)? {
            verdict.fired.push(FiredCriterion::new(
                "shape.thue_separable",
                "T:Langmannsep",
                format!(
                    "homogeneous separable Thue form of total degree {n} > 2 specializes \
                     irreducibly almost everywhere"
                ),
            ));
            verdict.status = VerdictStatus::Finite;
        } else if n > 2
            && field == FieldFlag::Q
            && ring == RingFlag::Z
            && n % 2 == 1
            && !h.divisible_by_first()
        {
            let (is_power, _) = proper_power_test(&h)?;
            if !is_power {
                verdict.fired.push(FiredCriterion::new(
                    "shape.thue_odd_nonpower",
                    "T:Langmannirr",
                    format!(
                        "odd-degree ({n}) Thue form over ℚ, t ∤ H, not a proper power; \
                         integral specializations stay irreducible almost always"
                    ),
                ));
                verdict.status = VerdictStatus::Finite;
            }
        }
    }

    // --- t^m·h(X) − 1. ------------------------------------------------------
    if let Some((m, h)) = power_times_poly_form(f) {
        let h_degree = h.degree().unwrap_or(0) as u32;
        if h_degree >= 1 && h.gcd(&h.derivative()).degree() == Some(0) {
            detected.push(DetectedShape::PowerTimesPoly { m, h_degree });
            if m >= 3 || h_degree % 2 == 1 {
                verdict.fired.push(FiredCriterion::new(
                    "shape.power_times_poly",
                    "P:t^mh",
                    format!(
                        "t^{m}·h(X) − 1 with separable h: infinitely many reducible \
                         specializations would force m ≤ 2 and deg(h) even, but m = {m}, \
                         deg(h) = {h_degree}"
                    ),
                ));
                verdict.status = VerdictStatus::Finite;
            }
        }
    }

    // --- P(X) − t·Q(X). -----------------------------------------------------
    if f.degree_first() == Some(1) {
        let p = f.coeff_of_first_power(0);
        let q = f.coeff_of_first_power(1).neg();
        if !q.is_zero() {
            let p_degree = p.degree().unwrap_or(0) as u32;
            let q_degree = q.degree().unwrap_or(0) as u32;
            detected.push(DetectedShape::Pencil { p_degree, q_degree });

            if q.degree() == Some(0) {
                detected.push(DetectedShape::PolynomialImage { h_degree: p_degree });
                if let Some(witness) = polynomial_image_witness(&p, &q.coeff(0)) {
                    verdict = verdict.merge(Verdict {
                        status: VerdictStatus::InfiniteWitness,
                        fired: Vec::new(),
                        witness: Some(witness),
                        notes: vec![
                            "shape h(X) − t: every integer point of h gives a root, hence a \
                             reducible specialization"
                                .into(),
                        ],
                    });
                }
            } else {
                let coprime = p.gcd(&q).degree() == Some(0);
                let q_separable = q.gcd(&q.derivative()).degree() == Some(0);
                if coprime && field == FieldFlag::Q && ring == RingFlag::Z {
                    if let Some(root) = simple_rational_root(&q) {
                        verdict.fired.push(FiredCriterion::new(
                            "shape.pencil_simple_root",
                            "T:PQ",
                            format!(
                                "Q has the simple rational root {root}; P(X) − t̄·Q(X) is \
                                 irreducible for almost all integers t̄"
                            ),
                        ));
                        verdict.status = VerdictStatus::Finite;
                    }
                }
                if coprime
                    && q_separable
                    && q_degree + 1 >= p_degree
                    && p_degree.max(q_degree) % 2 == 1
                {
                    verdict.fired.push(FiredCriterion::new(
                        "shape.pencil_odd",
                        "T:LangmGen",
                        format!(
                            "P − tQ with separable Q, deg Q ≥ deg P − 1 and odd \
                             max(deg P, deg Q) = {}; the even-degree alternative cannot occur",
                            p_degree.max(q_degree)
                        ),
                    ));
                    verdict.status = VerdictStatus::Finite;
                }
            }
        }
    }

    if verdict.status == VerdictStatus::Inconclusive && detected.is_empty() {
        verdict
            .notes
            .push("no recognized shape; defer to ramification criteria".into());
    }
    Ok(ShapeReport { detected, verdict })
}

/// Matches f = u·(H − 1) with H homogeneous nonconstant, returning H.
fn thue_form(f: &BiPoly) -> Option<BiPoly> {
    let c0 = f.coeff(0, 0);
    if c0.is_zero() {
        return None;
    }
    let unit = -c0;
    let h = f
        .sub(&BiPoly::constant(-unit.clone()))
        .scale(&unit.recip());
    if h.is_homogeneous() && h.total_degree().unwrap_or(0) >= 1 {
        Some(h)
    } else {
        None
    }
}

/// For H = X² − d·t², returns d.
fn pell_d(h: &BiPoly) -> Option<BigInt> {
    if h.total_degree() != Some(2) || !h.coeff(1, 1).is_zero() {
        return None;
    }
    if !h.coeff(0, 2).is_one() {
        return None;
    }
    let d = -h.coeff(2, 0);
    if d.denom().is_one() {
        Some(d.numer().clone())
    } else {
        None
    }
}

/// Matches f = u·(t^m·h(X) − 1) with m ≥ 1, returning (m, h).
fn power_times_poly_form(f: &BiPoly) -> Option<(u32, UniPoly)> {
    let c0 = f.coeff(0, 0);
    if c0.is_zero() {
        return None;
    }
    let unit = -c0;
    let rest = f
        .sub(&BiPoly::constant(-unit.clone()))
        .scale(&unit.recip());
    // Every monomial of `rest` must carry the same t-power m ≥ 1.
    let mut m = None;
    for (&(i, _), _) in rest.terms() {
        match m {
            None => m = Some(i),
            Some(existing) if existing != i => return None,
            _ => {}
        }
    }
    let m = m?;
    if m == 0 {
        return None;
    }
    let mut h = UniPoly::zero();
    for (&(_, j), c) in rest.terms() {
        h = h.add(&UniPoly::monomial(c.clone(), j as usize));
    }
    Some((m, h))
}

/// A rational root of q with q′(root) ≠ 0.
fn simple_rational_root(q: &UniPoly) -> Option<BigRational> {
    let dq = q.derivative();
    q.rational_roots()
        .into_iter()
        .find(|r| !dq.eval(r).is_zero())
}

/// Fundamental solution of x² − d·y² = 1 by running the convergents of the
/// continued fraction of √d (d > 1, not a square).
pub fn pell_fundamental(d: &BigInt) -> (BigInt, BigInt) {
    let a0 = d.sqrt();
    let mut p_prev = BigInt::one();
    let mut p_cur = a0.clone();
    let mut q_prev = BigInt::zero();
    let mut q_cur = BigInt::one();
    // Continued fraction state for √d.
    let mut m = BigInt::zero();
    let mut den = BigInt::one();
    let mut a = a0.clone();
    loop {
        if &p_cur * &p_cur - d * &q_cur * &q_cur == BigInt::one() {
            return (p_cur, q_cur);
        }
        m = &den * &a - &m;
        den = (d - &m * &m) / &den;
        a = (&a0 + &m).div_floor(&den);
        let p_next = &a * &p_cur + &p_prev;
        let q_next = &a * &q_cur + &q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
    }
}

fn pell_witness(d: &BigInt) -> Witness {
    let (x1, y1) = pell_fundamental(d);
    // Iterate (x + y√d) ↦ (x·x1 + d·y·y1, x·y1 + y·x1).
    let mut samples: Vec<BigInt> = vec![BigInt::zero()];
    let (mut x, mut y) = (x1.clone(), y1.clone());
    for _ in 0..3 {
        samples.push(y.clone());
        let x_next = &x * &x1 + d * &y * &y1;
        let y_next = &x * &y1 + &y * &x1;
        x = x_next;
        y = y_next;
    }
    let mut points: Vec<String> = Vec::new();
    for s in &samples {
        if s.is_zero() {
            points.push("0".into());
        } else {
            points.push(format!("±{s}"));
        }
    }
    Witness {
        family: "pell".into(),
        description: format!(
            "t̄ from solutions of the Pell equation X² − {d}·t̄² = 1 (fundamental solution \
             x = {x1}, t = {y1})"
        ),
        sample_points: points,
    }
}

/// Witness for f = u·(P(X) − c·t): t̄ = P(m)/c over the residue classes of m
/// where that value is integral (periodic, hence infinite when nonempty).
fn polynomial_image_witness(p: &UniPoly, c: &BigRational) -> Option<Witness> {
    if p.degree().unwrap_or(0) < 2 || c.is_zero() {
        return None;
    }
    // t̄ = P(m)/c integral is a condition on m modulo period = |numer(c)|·D,
    // with D the common denominator of P.
    let (_, prim) = p.primitive_integer_parts();
    let _ = prim;
    let mut denom_lcm = BigInt::one();
    for coeff in p.coeffs() {
        denom_lcm = denom_lcm.lcm(coeff.denom());
    }
    let period: BigInt = (c.numer() * &denom_lcm).abs().max(BigInt::one());
    let period_u: u64 = period.clone().try_into().ok().filter(|&p| p <= 1 << 20)?;
    let integral_at = |m: u64| -> Option<BigInt> {
        let value = p.eval(&BigRational::from_integer(BigInt::from(m))) / c;
        value.denom().is_one().then(|| value.numer().clone())
    };
    let works = (0..period_u.max(1)).any(|m| integral_at(m).is_some());
    if !works {
        return None;
    }
    let mut samples: Vec<BigInt> = Vec::new();
    for m in 0..4 * period_u.max(1) {
        if let Some(v) = integral_at(m) {
            samples.push(v);
            if samples.len() == 4 {
                break;
            }
        }
    }
    Some(Witness {
        family: "polynomial-image".into(),
        description: format!(
            "t̄ = P(m)/c for integers m in the residue classes mod {period} that make the \
             value integral; X = m is then a root"
        ),
        sample_points: samples.iter().map(|s| s.to_string()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyform::parse::parse_bipoly;

    fn verdict_of(text: &str) -> ShapeReport {
        let f = parse_bipoly(text).unwrap();
        shape_verdict(&f, FieldFlag::Q, RingFlag::Z).unwrap()
    }

    #[test]
    fn homogeneous_flags() {
        let h = parse_bipoly("X^2 - 3t^2").unwrap();
        assert!(is_homogeneous(&h));
        assert!(separable_in_x(&h).unwrap());
        let bad = parse_bipoly("X^2(X - t)").unwrap();
        assert!(is_homogeneous(&bad));
        assert!(!separable_in_x(&bad).unwrap());
        assert!(divisible_by_t(&parse_bipoly("tX").unwrap()));
    }

    #[test]
    fn power_detection() {
        let sq = parse_bipoly("(X-t)^2(X+t)^2").unwrap();
        assert_eq!(proper_power_test(&sq).unwrap(), (true, 2));
        let not = parse_bipoly("X^2(X-t)").unwrap();
        assert_eq!(proper_power_test(&not).unwrap(), (false, 1));
        let content_power = parse_bipoly("4(X-t)^2").unwrap();
        assert_eq!(proper_power_test(&content_power).unwrap(), (true, 2));
        let content_not = parse_bipoly("3(X-t)^2").unwrap();
        assert_eq!(proper_power_test(&content_not).unwrap(), (false, 1));
    }

    #[test]
    fn thue_cubic_is_finite() {
        let report = verdict_of("X^3 + t^3 - 1");
        assert_eq!(report.verdict.status, VerdictStatus::Finite);
        assert!(report
            .verdict
            .fired
            .iter()
            .any(|f| f.theorem == "T:Langmannsep"));
    }

    #[test]
    fn pell_gives_witness() {
        let report = verdict_of("X^2 - 2t^2 - 1");
        assert_eq!(report.verdict.status, VerdictStatus::InfiniteWitness);
        let w = report.verdict.witness.unwrap();
        assert_eq!(w.family, "pell");
        assert!(w.sample_points.contains(&"±2".to_string()));
        assert!(w.sample_points.contains(&"±12".to_string()));
    }

    #[test]
    fn pell_fundamental_solutions() {
        assert_eq!(
            pell_fundamental(&BigInt::from(2)),
            (BigInt::from(3), BigInt::from(2))
        );
        assert_eq!(
            pell_fundamental(&BigInt::from(3)),
            (BigInt::from(2), BigInt::from(1))
        );
        assert_eq!(
            pell_fundamental(&BigInt::from(61)),
            (BigInt::from(1766319049u64), BigInt::from(226153980u64))
        );
    }

    #[test]
    fn non_separable_odd_thue_uses_power_route() {
        // X²(X−t) − 1: odd degree 3, not separable, not a power.
        let report = verdict_of("X^2(X - t) - 1");
        assert_eq!(report.verdict.status, VerdictStatus::Finite);
        assert!(report
            .verdict
            .fired
            .iter()
            .any(|f| f.theorem == "T:Langmannirr"));
        // Over a general ring the ℤ-only theorem must not fire.
        let f = parse_bipoly("X^2(X - t) - 1").unwrap();
        let general = shape_verdict(&f, FieldFlag::General, RingFlag::General).unwrap();
        assert!(!general
            .verdict
            .fired
            .iter()
            .any(|f| f.theorem == "T:Langmannirr"));
        assert_eq!(general.verdict.status, VerdictStatus::Inconclusive);
    }

    #[test]
    fn polynomial_image_witness_fires() {
        let report = verdict_of("X^3 + X - t");
        assert_eq!(report.verdict.status, VerdictStatus::InfiniteWitness);
        let w = report.verdict.witness.unwrap();
        assert_eq!(w.family, "polynomial-image");
    }

    #[test]
    fn pencil_with_simple_root() {
        // P = X⁴+2, Q = X(X²+3): simple rational root 0.
        let report = verdict_of("X^4 + 2 - t(X^3 + 3X)");
        assert_eq!(report.verdict.status, VerdictStatus::Finite);
        assert!(report.verdict.fired.iter().any(|f| f.theorem == "T:PQ"));
    }

    #[test]
    fn power_times_poly() {
        // t³(X²+X+1) − 1: m = 3 ≥ 3 forces finiteness.
        let report = verdict_of("t^3 (X^2+X+1) - 1");
        assert_eq!(report.verdict.status, VerdictStatus::Finite);
        assert!(report.verdict.fired.iter().any(|f| f.theorem == "P:t^mh"));
    }

    #[test]
    fn unrecognized_shape_defers() {
        let report = verdict_of("X^4 + 2(1-t)X^2 + (1+t)^2");
        assert_eq!(report.verdict.status, VerdictStatus::Inconclusive);
        assert!(report.detected.is_empty());
    }
}
