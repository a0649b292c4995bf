//! Dense univariate polynomials over a coefficient ring.
//!
//! Coefficients are stored in ascending degree order: index `i` holds the
//! coefficient of `X^i`. The zero polynomial is the empty coefficient
//! sequence, and every polynomial is kept normalized (nonzero leading
//! coefficient), so equality is structural.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{parse_value_at, skip_ws, Ring, Value};

/// Exponents above this bound are rejected by the parser; they would only
/// exhaust memory on dense storage.
const MAX_PARSED_EXPONENT: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    coeffs: Vec<Value>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, dropping trailing
    /// zeros.
    pub fn new(ring: Ring, coeffs: Vec<Value>) -> Poly {
        let mut p = Poly { ring, coeffs };
        p.normalize();
        p
    }

    pub fn zero(ring: Ring) -> Poly {
        Poly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(ring: Ring, value: Value) -> Poly {
        Poly::new(ring, vec![value])
    }

    /// `coeff · X^degree`.
    pub fn monomial(ring: Ring, coeff: Value, degree: usize) -> Poly {
        let mut coeffs = vec![ring.zero(); degree];
        coeffs.push(coeff);
        Poly::new(ring, coeffs)
    }

    /// Convenience constructor from small integers, embedded per ring.
    pub fn from_i64_coeffs(ring: &Ring, coeffs: &[i64]) -> Poly {
        Poly::new(
            ring.clone(),
            coeffs.iter().map(|&c| ring.from_i64(c)).collect(),
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Ascending coefficients with nonzero leading entry; empty means zero.
    pub fn coeffs(&self) -> &[Value] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `X^i`, zero-padded past the stored length.
    pub fn coeff(&self, i: usize) -> Value {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    fn normalize(&mut self) {
        while self
            .coeffs
            .last()
            .is_some_and(|c| self.ring.is_zero(c))
        {
            self.coeffs.pop();
        }
    }

    fn assert_same_ring(&self, other: &Poly) {
        assert_eq!(
            self.ring, other.ring,
            "polynomial ring mismatch: {} vs {}",
            self.ring, other.ring
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_ring(other);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.ring.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Poly::new(self.ring.clone(), coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    /// Schoolbook convolution, self-coefficients multiplied on the left. The
    /// degree can drop below `deg p + deg q` over rings with zero divisors.
    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ring.clone());
        }
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.ring.add(&coeffs[i + j], &self.ring.mul(a, b));
            }
        }
        Poly::new(self.ring.clone(), coeffs)
    }

    /// Division with remainder by a monic modulus: `self = q·f + r` with
    /// `deg r < deg f`. Works over any ring with identity because `f` is
    /// monic; for noncommutative rings the result is the unique one when the
    /// coefficients of `f` are central.
    pub fn divmod_monic(&self, f: &MonicModulus) -> (Poly, Poly) {
        self.assert_same_ring(f.poly());
        let n = f.degree();
        let d = match self.degree() {
            Some(d) if d >= n => d,
            _ => return (Poly::zero(self.ring.clone()), self.clone()),
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.ring.zero(); d - n + 1];
        for k in (n..=d).rev() {
            let lead = rem[k].clone();
            if self.ring.is_zero(&lead) {
                continue;
            }
            for i in 0..n {
                let t = self.ring.mul(&lead, f.coefficient(i));
                rem[k - n + i] = self.ring.sub(&rem[k - n + i], &t);
            }
            quot[k - n] = lead;
        }
        rem.truncate(n);
        (
            Poly::new(self.ring.clone(), quot),
            Poly::new(self.ring.clone(), rem),
        )
    }

    /// Horner evaluation at `point ∈ point_ring`. Either `point_ring` equals
    /// the coefficient ring, or the coefficient ring is scalar and embeds into
    /// `point_ring = mat:k:<coefficient ring>` as scalar matrices.
    pub fn eval(&self, point: &Value, point_ring: &Ring) -> Result<Value> {
        let inject: Box<dyn Fn(&Value) -> Value> = if *point_ring == self.ring {
            Box::new(|c: &Value| c.clone())
        } else {
            match point_ring {
                Ring::Matrix { base, .. } if **base == self.ring && self.ring.is_scalar() => {
                    Box::new(|c: &Value| point_ring.embed_scalar(c))
                }
                _ => {
                    return Err(Error::NoEmbedding {
                        from: self.ring.to_string(),
                        to: point_ring.to_string(),
                    })
                }
            }
        };
        let mut acc = match self.coeffs.last() {
            None => return Ok(point_ring.zero()),
            Some(c) => inject(c),
        };
        for c in self.coeffs.iter().rev().skip(1) {
            acc = point_ring.add(&point_ring.mul(&acc, point), &inject(c));
        }
        Ok(acc)
    }

    /// Parses polynomial text over `ring`.
    ///
    /// Grammar: a signed sum of terms, where a term is `coefficient`,
    /// `x^k`, `x`, or `coefficient*x^k`; whitespace is insignificant and
    /// same-degree terms are summed. A coefficient-list form `[c0,c1,...]`
    /// (ascending) is accepted wherever polynomial text is.
    pub fn parse(text: &str, ring: &Ring) -> Result<Poly> {
        let bytes = text.as_bytes();
        let start = skip_ws(bytes, 0);
        if start < bytes.len() && bytes[start] == b'[' && !starts_matrix_coefficient(ring, bytes, start) {
            return parse_coeff_list(text, ring, start);
        }
        parse_term_sum(text, ring, start)
    }
}

/// Distinguishes a leading matrix literal (a coefficient, e.g.
/// `[[1,0];[0,1]]*x`) from the coefficient-list form. Exactly two consecutive
/// opening brackets begin a matrix literal; one means a list of embedded base
/// scalars, three or more a list of matrix literals.
fn starts_matrix_coefficient(ring: &Ring, bytes: &[u8], start: usize) -> bool {
    if !matches!(ring, Ring::Matrix { .. }) {
        return false;
    }
    let mut opens = 0;
    let mut pos = start;
    while opens < 3 {
        pos = skip_ws(bytes, pos);
        if pos < bytes.len() && bytes[pos] == b'[' {
            opens += 1;
            pos += 1;
        } else {
            break;
        }
    }
    opens == 2
}

fn parse_coeff_list(text: &str, ring: &Ring, start: usize) -> Result<Poly> {
    let bytes = text.as_bytes();
    let mut pos = start + 1; // past '['
    let mut coeffs = Vec::new();
    pos = skip_ws(bytes, pos);
    if pos < bytes.len() && bytes[pos] == b']' {
        pos += 1;
    } else {
        loop {
            let (value, next) = parse_value_at(ring, text, pos)?;
            coeffs.push(value);
            pos = skip_ws(bytes, next);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b']') => {
                    pos += 1;
                    break;
                }
                _ => return Err(Error::parse(pos, "expected ',' or ']'")),
            }
        }
    }
    pos = skip_ws(bytes, pos);
    if pos != bytes.len() {
        return Err(Error::parse(pos, "unexpected trailing input"));
    }
    Ok(Poly::new(ring.clone(), coeffs))
}

fn parse_term_sum(text: &str, ring: &Ring, start: usize) -> Result<Poly> {
    let bytes = text.as_bytes();
    let mut pos = start;
    let mut coeffs: Vec<Value> = Vec::new();
    let mut first = true;
    loop {
        pos = skip_ws(bytes, pos);
        let negative = match bytes.get(pos) {
            Some(b'+') => {
                pos += 1;
                false
            }
            Some(b'-') => {
                pos += 1;
                true
            }
            None if first => return Err(Error::parse(pos, "empty polynomial")),
            None => unreachable!("loop exits at end of input"),
            _ if first => false,
            _ => return Err(Error::parse(pos, "expected '+' or '-'")),
        };
        let (coeff, exponent, next) = parse_term(text, ring, pos)?;
        if exponent >= coeffs.len() {
            coeffs.resize(exponent + 1, ring.zero());
        }
        let signed = if negative { ring.neg(&coeff) } else { coeff };
        coeffs[exponent] = ring.add(&coeffs[exponent], &signed);
        pos = skip_ws(bytes, next);
        first = false;
        if pos == bytes.len() {
            return Ok(Poly::new(ring.clone(), coeffs));
        }
    }
}

/// One term: returns (coefficient, exponent, offset past the term).
fn parse_term(text: &str, ring: &Ring, pos: usize) -> Result<(Value, usize, usize)> {
    let bytes = text.as_bytes();
    let pos = skip_ws(bytes, pos);
    if bytes.get(pos) == Some(&b'x') {
        let (exp, next) = parse_exponent(bytes, pos + 1)?;
        return Ok((ring.one(), exp, next));
    }
    let (coeff, next) = parse_value_at(ring, text, pos)?;
    let after = skip_ws(bytes, next);
    if bytes.get(after) == Some(&b'*') {
        let at_x = skip_ws(bytes, after + 1);
        if bytes.get(at_x) != Some(&b'x') {
            return Err(Error::parse(at_x, "expected 'x'"));
        }
        let (exp, next) = parse_exponent(bytes, at_x + 1)?;
        Ok((coeff, exp, next))
    } else {
        Ok((coeff, 0, next))
    }
}

/// Exponent tail after `x`: `^k` or nothing (meaning 1).
fn parse_exponent(bytes: &[u8], pos: usize) -> Result<(usize, usize)> {
    if bytes.get(pos) != Some(&b'^') {
        return Ok((1, pos));
    }
    let digits_start = pos + 1;
    let mut end = digits_start;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == digits_start {
        return Err(Error::parse(digits_start, "expected a digit"));
    }
    let exp: usize = std::str::from_utf8(&bytes[digits_start..end])
        .expect("digits are ascii")
        .parse()
        .map_err(|_| Error::parse(digits_start, "exponent too large"))?;
    if exp > MAX_PARSED_EXPONENT {
        return Err(Error::parse(digits_start, "exponent too large"));
    }
    Ok((exp, end))
}

impl fmt::Display for Poly {
    /// Ascending-term rendering that round-trips through [`Poly::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut wrote_any = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            // Pull the sign out of negative rationals so "3 - x" renders
            // instead of "3 + -1*x".
            let (negative, magnitude) = match c {
                Value::Rational(r) if r.numer().sign() == num::bigint::Sign::Minus => {
                    (true, self.ring.neg(c))
                }
                _ => (false, c.clone()),
            };
            if wrote_any {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            } else if negative {
                write!(f, "-")?;
            }
            let coeff_is_one = magnitude == self.ring.one();
            match (i, coeff_is_one) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{magnitude}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{magnitude}*x^{i}")?,
            }
            wrote_any = true;
        }
        Ok(())
    }
}

/// A monic polynomial of degree `n >= 1`, the modulus of a quotient ring.
///
/// Over noncommutative coefficient rings the coefficients are required to be
/// central in the ring; this is a documented precondition of every operation
/// that consumes a modulus and is not machine-verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicModulus {
    poly: Poly,
}

impl MonicModulus {
    pub fn new(poly: Poly) -> Result<MonicModulus> {
        match poly.degree() {
            None | Some(0) => return Err(Error::DegreeZero),
            Some(_) => {}
        }
        let leading = poly.coeffs().last().expect("degree >= 1");
        if *leading != poly.ring().one() {
            return Err(Error::NotMonic);
        }
        Ok(MonicModulus { poly })
    }

    /// Parses and validates modulus text in one step.
    pub fn parse(text: &str, ring: &Ring) -> Result<MonicModulus> {
        MonicModulus::new(Poly::parse(text, ring)?)
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("modulus has degree >= 1")
    }

    pub fn ring(&self) -> &Ring {
        self.poly.ring()
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// `a_i`, defined for `0 <= i <= n` (with `a_n = 1`).
    pub fn coefficient(&self, i: usize) -> &Value {
        &self.poly.coeffs()[i]
    }
}

impl fmt::Display for MonicModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}
