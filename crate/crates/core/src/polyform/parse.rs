//! Text syntax for polynomials and rational functions.
//!
//! Accepted syntax: integer or rational coefficients, variables `t` (the
//! parameter) and `X` or `Z` (the main variable), `+ - * / ^`, parentheses,
//! and implicit multiplication by juxtaposition, e.g.
//! `X^4 + 2*(1-t)*X^2 + (1+t)^2` or `(Z^2+1)/Z`.

use num::{BigInt, BigRational, Zero};

use super::bipoly::BiPoly;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
enum Expr {
    Num(BigInt),
    Var(char),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Neg(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let value: BigInt = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad number `{digits}`")))?;
                tokens.push(Token::Num(value));
            }
            't' | 'X' | 'Z' | 'x' | 'z' | 'u' | 'v' => {
                tokens.push(Token::Var(c));
                chars.next();
            }
            '+' => {
                tokens.push(Token::Plus);
                chars.next();
            }
            '-' | '−' => {
                tokens.push(Token::Minus);
                chars.next();
            }
            '*' => {
                tokens.push(Token::Star);
                chars.next();
            }
            '/' => {
                tokens.push(Token::Slash);
                chars.next();
            }
            '^' => {
                tokens.push(Token::Caret);
                chars.next();
            }
            '(' => {
                tokens.push(Token::Open);
                chars.next();
            }
            ')' => {
                tokens.push(Token::Close);
                chars.next();
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut left = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.next();
                    let right = self.term()?;
                    left = Expr::Add(Box::new(left), Box::new(right));
                }
                Token::Minus => {
                    self.next();
                    let right = self.term()?;
                    left = Expr::Sub(Box::new(left), Box::new(right));
                }
                _ => break,
            }
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut left = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    let right = self.factor()?;
                    left = Expr::Mul(Box::new(left), Box::new(right));
                }
                Some(Token::Slash) => {
                    self.next();
                    let right = self.factor()?;
                    left = Expr::Div(Box::new(left), Box::new(right));
                }
                // Juxtaposition: `2X`, `2(1-t)`, `t(X+1)`.
                Some(Token::Num(_)) | Some(Token::Var(_)) | Some(Token::Open) => {
                    let right = self.factor()?;
                    left = Expr::Mul(Box::new(left), Box::new(right));
                }
                _ => break,
            }
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<Expr> {
        if let Some(Token::Minus) = self.peek() {
            self.next();
            let inner = self.factor()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        let base = match self.next() {
            Some(Token::Num(n)) => Expr::Num(n),
            Some(Token::Var(c)) => Expr::Var(c),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::Close) => inner,
                    _ => return Err(Error::Parse("unmatched `(`".into())),
                }
            }
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        if let Some(Token::Caret) = self.peek() {
            self.next();
            let negative = if let Some(Token::Minus) = self.peek() {
                self.next();
                true
            } else {
                false
            };
            match self.next() {
                Some(Token::Num(e)) => {
                    if negative {
                        return Err(Error::Parse("negative exponents not supported".into()));
                    }
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return Err(Error::Parse("exponent must be an integer".into())),
            }
        }
        Ok(base)
    }
}

fn parse_expr(text: &str) -> Result<Expr> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut parser = Parser { tokens, pos: 0 };
    let e = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse("trailing input".into()));
    }
    Ok(e)
}

/// Fraction of bivariate polynomials, the evaluation domain of the parser.
#[derive(Clone)]
struct BiFrac {
    num: BiPoly,
    den: BiPoly,
}

impl BiFrac {
    fn from_poly(p: BiPoly) -> Self {
        BiFrac {
            num: p,
            den: BiPoly::one(),
        }
    }

    fn add(&self, o: &BiFrac) -> BiFrac {
        BiFrac {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    fn sub(&self, o: &BiFrac) -> BiFrac {
        BiFrac {
            num: self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    fn mul(&self, o: &BiFrac) -> BiFrac {
        BiFrac {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
    }

    fn div(&self, o: &BiFrac) -> Result<BiFrac> {
        if o.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BiFrac {
            num: self.num.mul(&o.den),
            den: self.den.mul(&o.num),
        })
    }

    fn neg(&self) -> BiFrac {
        BiFrac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn pow(&self, e: u32) -> BiFrac {
        BiFrac {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

/// Which bivariate slot each accepted letter denotes.
fn bivar_slot(c: char) -> Result<bool> {
    // true: main variable (second slot); false: parameter t (first slot).
    match c {
        't' => Ok(false),
        'X' | 'x' | 'Z' | 'z' => Ok(true),
        other => Err(Error::Parse(format!(
            "variable `{other}` not allowed here (use t and X)"
        ))),
    }
}

fn eval_bifrac(e: &Expr) -> Result<BiFrac> {
    Ok(match e {
        Expr::Num(n) => BiFrac::from_poly(BiPoly::constant(BigRational::from_integer(n.clone()))),
        Expr::Var(c) => BiFrac::from_poly(if bivar_slot(*c)? {
            BiPoly::var_second()
        } else {
            BiPoly::var_first()
        }),
        Expr::Add(a, b) => eval_bifrac(a)?.add(&eval_bifrac(b)?),
        Expr::Sub(a, b) => eval_bifrac(a)?.sub(&eval_bifrac(b)?),
        Expr::Mul(a, b) => eval_bifrac(a)?.mul(&eval_bifrac(b)?),
        Expr::Div(a, b) => eval_bifrac(a)?.div(&eval_bifrac(b)?)?,
        Expr::Pow(a, e) => eval_bifrac(a)?.pow(*e),
        Expr::Neg(a) => eval_bifrac(a)?.neg(),
    })
}

/// Parses a bivariate polynomial in `t` and `X` (or `Z`). Division is only
/// allowed by nonzero constants.
pub fn parse_bipoly(text: &str) -> Result<BiPoly> {
    let frac = eval_bifrac(&parse_expr(text)?)?;
    let den = &frac.den;
    if den.total_degree().unwrap_or(0) > 0 {
        return Err(Error::Parse(
            "polynomial input must not divide by a variable".into(),
        ));
    }
    let c = den.coeff(0, 0);
    if c.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(frac.num.scale(&c.recip()))
}

/// Fraction of univariate polynomials.
#[derive(Clone)]
struct UniFrac {
    num: UniPoly,
    den: UniPoly,
}

fn eval_unifrac(e: &Expr, var: &mut Option<char>) -> Result<UniFrac> {
    let poly = |p: UniPoly| UniFrac {
        num: p,
        den: UniPoly::one(),
    };
    Ok(match e {
        Expr::Num(n) => poly(UniPoly::constant(BigRational::from_integer(n.clone()))),
        Expr::Var(c) => {
            let canonical = c.to_ascii_uppercase();
            match var {
                Some(existing) if *existing != canonical => {
                    return Err(Error::Parse(format!(
                        "two different variables `{existing}` and `{c}` in univariate input"
                    )))
                }
                _ => *var = Some(canonical),
            }
            poly(UniPoly::x())
        }
        Expr::Add(a, b) => {
            let (a, b) = (eval_unifrac(a, var)?, eval_unifrac(b, var)?);
            UniFrac {
                num: a.num.mul(&b.den).add(&b.num.mul(&a.den)),
                den: a.den.mul(&b.den),
            }
        }
        Expr::Sub(a, b) => {
            let (a, b) = (eval_unifrac(a, var)?, eval_unifrac(b, var)?);
            UniFrac {
                num: a.num.mul(&b.den).sub(&b.num.mul(&a.den)),
                den: a.den.mul(&b.den),
            }
        }
        Expr::Mul(a, b) => {
            let (a, b) = (eval_unifrac(a, var)?, eval_unifrac(b, var)?);
            UniFrac {
                num: a.num.mul(&b.num),
                den: a.den.mul(&b.den),
            }
        }
        Expr::Div(a, b) => {
            let (a, b) = (eval_unifrac(a, var)?, eval_unifrac(b, var)?);
            if b.num.is_zero() {
                return Err(Error::DivisionByZero);
            }
            UniFrac {
                num: a.num.mul(&b.den),
                den: a.den.mul(&b.num),
            }
        }
        Expr::Pow(a, e) => {
            let a = eval_unifrac(a, var)?;
            UniFrac {
                num: a.num.pow(*e),
                den: a.den.pow(*e),
            }
        }
        Expr::Neg(a) => {
            let a = eval_unifrac(a, var)?;
            UniFrac {
                num: a.num.neg(),
                den: a.den,
            }
        }
    })
}

/// Parses a univariate rational function (single variable, usually `Z`),
/// returning numerator and denominator in lowest terms before normalization
/// by [`crate::ratfun::RationalFunction::new`].
pub fn parse_ratfun_parts(text: &str) -> Result<(UniPoly, UniPoly)> {
    let mut var = None;
    let frac = eval_unifrac(&parse_expr(text)?, &mut var)?;
    if frac.den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok((frac.num, frac.den))
}

/// Parses a univariate polynomial (single variable).
pub fn parse_unipoly(text: &str) -> Result<UniPoly> {
    let (num, den) = parse_ratfun_parts(text)?;
    if den.degree().unwrap_or(0) > 0 {
        return Err(Error::Parse(
            "polynomial input must not divide by a variable".into(),
        ));
    }
    Ok(num.scale(&den.leading_coeff().recip()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn parses_the_quartic() {
        let f = parse_bipoly("X^4 + 2*(1-t)*X^2 + (1+t)^2").unwrap();
        assert_eq!(f.coeff(0, 4), rat(1));
        assert_eq!(f.coeff(0, 2), rat(2));
        assert_eq!(f.coeff(1, 2), rat(-2));
        assert_eq!(f.coeff(0, 0), rat(1));
        assert_eq!(f.coeff(1, 0), rat(2));
        assert_eq!(f.coeff(2, 0), rat(1));
    }

    #[test]
    fn implicit_multiplication() {
        let f = parse_bipoly("X^2-2t^2-1").unwrap();
        assert_eq!(f.coeff(0, 2), rat(1));
        assert_eq!(f.coeff(2, 0), rat(-2));
        assert_eq!(f.coeff(0, 0), rat(-1));
    }

    #[test]
    fn rational_function_parts() {
        let (num, den) = parse_ratfun_parts("(Z^2+1)/Z").unwrap();
        assert_eq!(num, UniPoly::from_int_coeffs(&[1, 0, 1]));
        assert_eq!(den, UniPoly::from_int_coeffs(&[0, 1]));
        assert!(parse_ratfun_parts("(Z+t)/Z").is_err());
        assert!(parse_ratfun_parts("1/0").is_err());
    }

    #[test]
    fn rejects_junk() {
        assert!(parse_bipoly("X +").is_err());
        assert!(parse_bipoly("Q^2").is_err());
        assert!(parse_bipoly("(X").is_err());
        assert!(parse_bipoly("X^2/(t-1)").is_err());
        assert!(parse_bipoly("").is_err());
    }

    #[test]
    fn rational_coefficients() {
        let f = parse_bipoly("1/2 X^2 - 3/4").unwrap();
        assert_eq!(f.coeff(0, 2), BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(f.coeff(0, 0), BigRational::new(BigInt::from(-3), BigInt::from(4)));
    }
}
