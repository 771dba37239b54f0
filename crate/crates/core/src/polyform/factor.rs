//! Exact factorization over ℚ by the Zassenhaus method: Yun squarefree
//! decomposition, Cantor–Zassenhaus factorization modulo a good small prime,
//! quadratic Hensel lifting past the Mignotte bound, and subset
//! recombination. Desk-scale degrees keep the exponential recombination
//! irrelevant.

use num::{BigInt, BigRational, BigUint, Integer, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// `input = content · Π factorᵢ^multᵢ` with primitive integer factors
/// carrying positive leading coefficients.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub content: BigRational,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    /// Number of irreducible factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    /// Rebuilds the product (for round-trip checks).
    pub fn expand(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.content.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }
}

/// Factors a nonzero rational polynomial into irreducibles over ℚ.
pub fn factor_q(input: &UniPoly) -> Result<Factorization> {
    if input.is_zero() {
        return Err(Error::InvalidArgument("cannot factor zero".into()));
    }
    if input.degree() == Some(0) {
        return Ok(Factorization {
            content: input.coeff(0),
            factors: Vec::new(),
        });
    }
    let mut content = input.leading_coeff();
    let monic = input.monic();
    let mut factors: Vec<(UniPoly, u32)> = Vec::new();
    for (part, multiplicity) in monic.squarefree_decomposition()? {
        let (part_content, prim) = part.primitive_integer_parts();
        let mut c = BigRational::one();
        for _ in 0..multiplicity {
            c *= &part_content;
        }
        content *= c;
        for irreducible in factor_squarefree_z(&prim)? {
            factors.push((UniPoly::from_bigint_coeffs(&irreducible), multiplicity));
        }
    }
    factors.sort_by(|a, b| {
        (a.0.degree(), format!("{:?}", a.0)).cmp(&(b.0.degree(), format!("{:?}", b.0)))
    });
    Ok(Factorization { content, factors })
}

/// Whether the polynomial (degree ≥ 1) is reducible over ℚ.
pub fn is_reducible_q(f: &UniPoly) -> Result<bool> {
    if f.degree().unwrap_or(0) < 1 {
        return Err(Error::InvalidArgument(
            "reducibility needs degree ≥ 1".into(),
        ));
    }
    Ok(factor_q(f)?.factor_count() >= 2)
}

// ---------------------------------------------------------------------------
// Squarefree primitive integer polynomials
// ---------------------------------------------------------------------------

/// Factors a squarefree primitive integer polynomial (positive leading
/// coefficient) into primitive irreducible integer polynomials.
fn factor_squarefree_z(g: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let n = g.len() - 1;
    if n <= 1 {
        return Ok(vec![g.to_vec()]);
    }
    // Monicize: ĝ(x) = b^(n−1)·g(x/b) with b = lc(g).
    let b = g[n].clone();
    let monic = monicize(g);
    let (p, modular) = choose_prime_and_factor(&monic)?;
    if modular.len() == 1 {
        return Ok(vec![g.to_vec()]);
    }
    let bound = factor_coeff_bound(&monic);
    let (modulus, lifted) = hensel_to_bound(&monic, p, &modular, &bound)?;
    let hat_factors = recombine(&monic, &lifted, &modulus);
    // Pull each factor of ĝ back through x ↦ b·x and take primitive parts.
    let mut out = Vec::new();
    for hf in hat_factors {
        out.push(primitive_part(&substitute_scaled(&hf, &b)));
    }
    out.sort();
    Ok(out)
}

fn monicize(g: &[BigInt]) -> Vec<BigInt> {
    let n = g.len() - 1;
    let b = &g[n];
    (0..=n)
        .map(|i| {
            if i == n {
                BigInt::one()
            } else {
                &g[i] * b.pow((n - 1 - i) as u32)
            }
        })
        .collect()
}

/// h(b·x) for h monic; used to undo monicization.
fn substitute_scaled(h: &[BigInt], b: &BigInt) -> Vec<BigInt> {
    (0..h.len()).map(|i| &h[i] * b.pow(i as u32)).collect()
}

fn primitive_part(f: &[BigInt]) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in f {
        content = content.gcd(c);
    }
    if f.last().unwrap().is_negative() {
        content = -content;
    }
    f.iter().map(|c| c / &content).collect()
}

/// Mignotte-style bound on factor coefficients of a monic integer
/// polynomial: 2^n · √(n+1) · max|coeff|.
fn factor_coeff_bound(f: &[BigInt]) -> BigInt {
    let n = (f.len() - 1) as u32;
    let height = f.iter().map(|c| c.abs()).max().unwrap();
    let sqrt_n1 = BigInt::from(((f.len() as f64).sqrt().ceil()) as u64 + 1);
    (BigInt::one() << n) * sqrt_n1 * height
}

// ---------------------------------------------------------------------------
// Arithmetic modulo a small prime
// ---------------------------------------------------------------------------

/// Dense polynomial over F_p, ascending coefficients, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
struct PolyP {
    p: u64,
    c: Vec<u64>,
}

impl PolyP {
    fn new(p: u64, mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyP { p, c }
    }

    fn zero(p: u64) -> Self {
        PolyP { p, c: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg(&self) -> usize {
        // Degree of a nonzero polynomial; callers must check is_zero.
        self.c.len() - 1
    }

    fn x(p: u64) -> Self {
        PolyP::new(p, vec![0, 1])
    }

    fn from_bigints(p: u64, coeffs: &[BigInt]) -> Self {
        let pr = BigInt::from(p);
        PolyP::new(
            p,
            coeffs
                .iter()
                .map(|c| {
                    let m = c.mod_floor(&pr);
                    u64::try_from(m).expect("reduced coefficient fits")
                })
                .collect(),
        )
    }

    fn mul(&self, o: &PolyP) -> PolyP {
        if self.is_zero() || o.is_zero() {
            return PolyP::zero(self.p);
        }
        let p = self.p as u128;
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                let v = (out[i + j] as u128 + (a as u128) * (b as u128)) % p;
                out[i + j] = v as u64;
            }
        }
        PolyP::new(self.p, out)
    }

    fn sub(&self, o: &PolyP) -> PolyP {
        let n = self.c.len().max(o.c.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = o.c.get(i).copied().unwrap_or(0);
            *slot = (a + self.p - b) % self.p;
        }
        PolyP::new(self.p, out)
    }

    fn scale(&self, k: u64) -> PolyP {
        let p = self.p as u128;
        PolyP::new(
            self.p,
            self.c
                .iter()
                .map(|&a| ((a as u128 * k as u128) % p) as u64)
                .collect(),
        )
    }

    fn monic(&self) -> PolyP {
        if self.is_zero() {
            return self.clone();
        }
        let inv = mod_inverse(*self.c.last().unwrap(), self.p);
        self.scale(inv)
    }

    fn div_rem(&self, d: &PolyP) -> (PolyP, PolyP) {
        assert!(!d.is_zero());
        if self.is_zero() || self.deg() < d.deg() {
            return (PolyP::zero(self.p), self.clone());
        }
        let p = self.p;
        let dlc_inv = mod_inverse(*d.c.last().unwrap(), p);
        let mut rem = self.c.clone();
        let mut quo = vec![0u64; self.deg() - d.deg() + 1];
        for k in (0..quo.len()).rev() {
            let top = rem[k + d.deg()];
            if top == 0 {
                continue;
            }
            let q = ((top as u128 * dlc_inv as u128) % p as u128) as u64;
            quo[k] = q;
            for (i, &dc) in d.c.iter().enumerate() {
                let sub = (q as u128 * dc as u128) % p as u128;
                rem[k + i] = ((rem[k + i] as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
        (PolyP::new(p, quo), PolyP::new(p, rem))
    }

    fn rem(&self, d: &PolyP) -> PolyP {
        self.div_rem(d).1
    }

    fn gcd(&self, o: &PolyP) -> PolyP {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> PolyP {
        if self.c.len() <= 1 {
            return PolyP::zero(self.p);
        }
        let p = self.p as u128;
        PolyP::new(
            self.p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| ((i as u128 % p) * (a as u128) % p) as u64)
                .collect(),
        )
    }

    /// self^e mod m, with a big-integer exponent.
    fn pow_mod(&self, e: &BigUint, m: &PolyP) -> PolyP {
        let mut base = self.rem(m);
        let mut acc = PolyP::new(self.p, vec![1]);
        for bit in 0..e.bits() {
            if e.bit(bit) {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
        }
        acc
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p−2) mod p.
    let mut result = 1u128;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    result as u64
}

const CANDIDATE_PRIMES: [u64; 20] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
];

/// Picks, among the first few odd primes where the monic input stays
/// squarefree, the one with the fewest modular factors; returns that prime
/// with its monic irreducible factors mod p.
fn choose_prime_and_factor(monic: &[BigInt]) -> Result<(u64, Vec<PolyP>)> {
    let mut best: Option<(u64, Vec<PolyP>)> = None;
    let mut tried = 0;
    for &p in &CANDIDATE_PRIMES {
        let fp = PolyP::from_bigints(p, monic);
        if fp.is_zero() || fp.deg() != monic.len() - 1 {
            continue; // lc vanished (cannot happen for monic, kept for safety)
        }
        let sqfree = fp.gcd(&fp.derivative());
        if !(sqfree.deg() == 0) {
            continue;
        }
        let factors = factor_mod_p(&fp.monic());
        let count = factors.len();
        if best.as_ref().map_or(true, |(_, b)| count < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= 5 || count == 1 {
            break;
        }
    }
    best.ok_or_else(|| {
        Error::Internal("no usable factorization prime among the candidates".into())
    })
}

/// Cantor–Zassenhaus factorization of a squarefree monic polynomial mod p.
fn factor_mod_p(f: &PolyP) -> Vec<PolyP> {
    let p = f.p;
    let mut irreducibles = Vec::new();
    let mut remaining = f.clone();
    // Deterministic splitting randomness seeded from the input.
    let mut seed = [0u8; 32];
    for (i, &c) in f.c.iter().enumerate() {
        seed[i % 32] ^= (c as u8).wrapping_add(i as u8);
    }
    let mut rng = ChaCha8Rng::from_seed(seed);
    let mut d = 1;
    let mut power_of_x = PolyP::x(p);
    while !remaining.is_zero() && remaining.deg() >= 1 {
        if remaining.deg() < 2 * d {
            irreducibles.push(remaining.monic());
            break;
        }
        // x^(p^d) mod remaining, maintained incrementally.
        power_of_x = power_of_x.pow_mod(&BigUint::from(p), &remaining);
        let splitter = power_of_x.sub(&PolyP::x(p)).gcd(&remaining);
        if !splitter.is_zero() && splitter.deg() > 0 {
            equal_degree_split(&splitter, d, &mut rng, &mut irreducibles);
            remaining = remaining.div_rem(&splitter).0.monic();
            power_of_x = power_of_x.rem(&remaining);
        }
        d += 1;
    }
    irreducibles.sort_by(|a, b| a.c.len().cmp(&b.c.len()).then(a.c.cmp(&b.c)));
    irreducibles
}

/// Splits a product of distinct monic irreducibles, all of degree `d`.
fn equal_degree_split(f: &PolyP, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<PolyP>) {
    if f.deg() == d {
        out.push(f.monic());
        return;
    }
    let p = f.p;
    let exponent = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a = PolyP::new(
            p,
            (0..f.deg()).map(|_| rng.gen_range(0..p)).collect::<Vec<_>>(),
        );
        if a.is_zero() || a.deg() == 0 {
            continue;
        }
        let b = a.pow_mod(&exponent, f);
        let candidate = b.sub(&PolyP::new(p, vec![1])).gcd(f);
        if !candidate.is_zero() && candidate.deg() > 0 && candidate.deg() < f.deg() {
            equal_degree_split(&candidate, d, rng, out);
            equal_degree_split(&f.div_rem(&candidate).0.monic(), d, rng, out);
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

/// Polynomials with coefficients reduced into [0, m).
fn reduce_mod(f: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = f.iter().map(|c| c.mod_floor(m)).collect();
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    reduce_mod(&out, m)
}

fn sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let out: Vec<BigInt> = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    reduce_mod(&out, m)
}

fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let out: Vec<BigInt> = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
        .collect();
    reduce_mod(&out, m)
}

/// Division by a monic divisor, coefficients mod m.
fn div_rem_monic_mod(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(d.last().map_or(false, |c| c.is_one()), "divisor must be monic");
    let ddeg = d.len() - 1;
    if a.len() <= ddeg {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quo = vec![BigInt::zero(); a.len() - ddeg];
    for k in (0..quo.len()).rev() {
        let top = rem[k + ddeg].mod_floor(m);
        if top.is_zero() {
            continue;
        }
        quo[k] = top.clone();
        for (i, dc) in d.iter().enumerate() {
            let t = &top * dc;
            rem[k + i] = (&rem[k + i] - t).mod_floor(m);
        }
    }
    (reduce_mod(&quo, m), reduce_mod(&rem, m))
}

/// Extended Euclid over F_p via PolyP, returning Bezout coefficients as
/// BigInt polynomials: s·a + t·b ≡ 1 (mod p).
fn bezout_mod_p(a: &PolyP, b: &PolyP) -> (Vec<BigInt>, Vec<BigInt>) {
    let p = a.p;
    let zero = PolyP::zero(p);
    let one = PolyP::new(p, vec![1]);
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (one.clone(), zero.clone());
    let (mut t0, mut t1) = (zero, one);
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let new_s = s0.sub(&q.mul(&s1));
        let new_t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = new_s;
        t0 = t1;
        t1 = new_t;
    }
    // r0 is a unit; normalize to exactly 1.
    let inv = mod_inverse(*r0.c.last().unwrap(), p);
    let to_big = |f: &PolyP| -> Vec<BigInt> { f.scale(inv).c.iter().map(|&c| BigInt::from(c)).collect() };
    (to_big(&s0), to_big(&t0))
}

/// One quadratic Hensel step: from f ≡ g·h (mod m), s·g + t·h ≡ 1 (mod m),
/// g, h monic, to the same data mod m².
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = sub_mod(f, &mul_mod(g, h, &m2), &m2);
    let se = mul_mod(s, &e, &m2);
    let (q, r) = div_rem_monic_mod(&se, h, &m2);
    let g_new = {
        let te = mul_mod(t, &e, &m2);
        let qg = mul_mod(&q, g, &m2);
        add_mod(&add_mod(g, &te, &m2), &qg, &m2)
    };
    let h_new = add_mod(h, &r, &m2);
    // Lift the Bezout pair.
    let b = sub_mod(
        &add_mod(
            &mul_mod(s, &g_new, &m2),
            &mul_mod(t, &h_new, &m2),
            &m2,
        ),
        &[BigInt::one()],
        &m2,
    );
    let sb = mul_mod(s, &b, &m2);
    let (c, d) = div_rem_monic_mod(&sb, &h_new, &m2);
    let s_new = sub_mod(s, &d, &m2);
    let t_new = {
        let tb = mul_mod(t, &b, &m2);
        let cg = mul_mod(&c, &g_new, &m2);
        sub_mod(&sub_mod(t, &tb, &m2), &cg, &m2)
    };
    (g_new, h_new, s_new, t_new)
}

/// Lifts the factorization of a monic squarefree integer polynomial from
/// mod p to mod p^(2^j) ≥ `target`, recursively over a balanced factor tree.
fn hensel_to_bound(
    monic: &[BigInt],
    p: u64,
    modular: &[PolyP],
    bound: &BigInt,
) -> Result<(BigInt, Vec<Vec<BigInt>>)> {
    let target: BigInt = BigInt::from(2) * bound + 1;
    let mut modulus = BigInt::from(p);
    let mut steps = 0u32;
    while modulus < target {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let final_modulus = modulus;
    let mut lifted = Vec::new();
    lift_tree(monic, p, modular, steps, &final_modulus, &mut lifted)?;
    Ok((final_modulus, lifted))
}

fn lift_tree(
    f: &[BigInt],
    p: u64,
    modular: &[PolyP],
    steps: u32,
    final_modulus: &BigInt,
    out: &mut Vec<Vec<BigInt>>,
) -> Result<()> {
    if modular.len() == 1 {
        out.push(reduce_mod(f, final_modulus));
        return Ok(());
    }
    let mid = modular.len() / 2;
    let (left, right) = modular.split_at(mid);
    let g_p = left
        .iter()
        .fold(PolyP::new(p, vec![1]), |acc, f| acc.mul(f));
    let h_p = right
        .iter()
        .fold(PolyP::new(p, vec![1]), |acc, f| acc.mul(f));
    let (s, t) = bezout_mod_p(&g_p, &h_p);
    let big = |f: &PolyP| -> Vec<BigInt> { f.c.iter().map(|&c| BigInt::from(c)).collect() };
    let mut g = big(&g_p);
    let mut h = big(&h_p);
    let (mut s, mut t) = (s, t);
    let mut m = BigInt::from(p);
    for _ in 0..steps {
        let (g2, h2, s2, t2) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = &m * &m;
    }
    lift_tree(&g, p, left, steps, final_modulus, out)?;
    lift_tree(&h, p, right, steps, final_modulus, out)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Recombination
// ---------------------------------------------------------------------------

/// Symmetric representative in (−m/2, m/2].
fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn symmetric_poly(f: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    f.iter().map(|c| symmetric(c, m)).collect()
}

/// Exact division test over ℤ for a monic divisor; returns the quotient.
fn divide_exact_z(f: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    if d.len() > f.len() {
        return None;
    }
    let ddeg = d.len() - 1;
    let mut rem = f.to_vec();
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
    if rem.iter().all(|c| c.is_zero()) {
        Some(quo)
    } else {
        None
    }
}

/// Finds the true integer factors of a monic squarefree polynomial among
/// subset products of its lifted modular factors.
fn recombine(monic: &[BigInt], lifted: &[Vec<BigInt>], modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut remaining_indices: Vec<usize> = (0..lifted.len()).collect();
    let mut current = monic.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining_indices.len() {
        for combo in combinations(remaining_indices.len(), size) {
            let subset: Vec<usize> = combo.iter().map(|&i| remaining_indices[i]).collect();
            let mut product = vec![BigInt::one()];
            for &i in &subset {
                product = mul_mod(&product, &lifted[i], modulus);
            }
            let candidate = symmetric_poly(&product, modulus);
            if let Some(quotient) = divide_exact_z(&current, &candidate) {
                found.push(candidate);
                current = quotient;
                remaining_indices.retain(|i| !subset.contains(i));
                continue 'outer;
            }
        }
        size += 1;
    }
    if current.len() > 1 {
        found.push(current);
    }
    found
}

/// All size-k index subsets of 0..n in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // Advance.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        if idx[i] == i + n - k {
            return out;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyform::parse::parse_unipoly;

    fn factor_strings(text: &str) -> Vec<(String, u32)> {
        let f = parse_unipoly(text).unwrap();
        factor_q(&f)
            .unwrap()
            .factors
            .iter()
            .map(|(p, m)| (p.to_string_with("X"), *m))
            .collect()
    }

    #[test]
    fn quartic_from_square_specialization() {
        // X⁴ − 6X² + 25 = (X² + 4X + 5)(X² − 4X + 5)
        let factors = factor_strings("X^4 - 6X^2 + 25");
        assert_eq!(
            factors,
            vec![
                ("X^2 + 4*X + 5".to_string(), 1),
                ("X^2 - 4*X + 5".to_string(), 1),
            ]
        );
    }

    #[test]
    fn cube_minus_one() {
        let factors = factor_strings("X^3 - 1");
        assert_eq!(
            factors,
            vec![("X - 1".to_string(), 1), ("X^2 + X + 1".to_string(), 1)]
        );
    }

    #[test]
    fn pell_failure_is_irreducible() {
        // X² − 33 (33 is not a square).
        let factors = factor_strings("X^2 - 33");
        assert_eq!(factors, vec![("X^2 - 33".to_string(), 1)]);
    }

    #[test]
    fn multiplicities_and_content() {
        let f = parse_unipoly("4X^2 - 8X + 4").unwrap(); // 4(X−1)²
        let fact = factor_q(&f).unwrap();
        assert_eq!(fact.factors.len(), 1);
        assert_eq!(fact.factors[0].1, 2);
        assert_eq!(fact.expand(), f);
    }

    #[test]
    fn non_monic_with_rational_content() {
        let f = parse_unipoly("(2X - 1)(3X + 5)(X^2+X+1)/7").unwrap();
        let fact = factor_q(&f).unwrap();
        assert_eq!(fact.factor_count(), 3);
        assert_eq!(fact.expand(), f);
    }

    #[test]
    fn cyclotomic_like_product() {
        let f = parse_unipoly("(X^2+1)(X^2+X+1)(X-2)(X+2)").unwrap();
        let fact = factor_q(&f).unwrap();
        assert_eq!(fact.factor_count(), 4);
        assert_eq!(fact.expand(), f);
        assert!(is_reducible_q(&f).unwrap());
        assert!(!is_reducible_q(&parse_unipoly("X^2+1").unwrap()).unwrap());
    }

    #[test]
    fn larger_irreducible() {
        // Eisenstein at 2: X^10 + 2X^3 + 2.
        let f = parse_unipoly("X^10 + 2X^3 + 2").unwrap();
        let fact = factor_q(&f).unwrap();
        assert_eq!(fact.factor_count(), 1);
    }

    #[test]
    fn swinnerton_dyer_style_recombination() {
        // (X²−2)(X²−3)(X²−6): every prime sees spurious splittings, so
        // recombination must reject wrong subsets.
        let f = parse_unipoly("(X^2-2)(X^2-3)(X^2-6)").unwrap();
        let fact = factor_q(&f).unwrap();
        assert_eq!(fact.factor_count(), 3);
        assert_eq!(fact.expand(), f);
    }
}
