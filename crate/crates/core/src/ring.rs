//! Coefficient rings: exact arbitrary-precision rationals, integers modulo m,
//! and k×k matrices over a commutative scalar ring.
//!
//! A [`Ring`] owns the arithmetic; a [`Value`] is plain immutable data that
//! only makes sense relative to the ring it was built for. All operations are
//! exact — there is no floating point and no tolerance anywhere.

use std::fmt;
use std::str::FromStr;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Descriptor of a coefficient ring with identity.
///
/// Build instances through [`Ring::modular`], [`Ring::matrix`] or [`FromStr`]
/// (`"rational"`, `"mod:7"`, `"mat:2:mod:5"`); direct construction must uphold
/// the documented invariants (`modulus >= 2`, `dim >= 1`, scalar commutative
/// base).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    /// Arbitrary-precision rationals in canonical form.
    Rational,
    /// Integers modulo `modulus`, with `modulus >= 2` (primality not required).
    Modular { modulus: u64 },
    /// `dim × dim` matrices over a commutative scalar ring. Noncommutative for
    /// `dim >= 2`; nesting stops at one level.
    Matrix { dim: usize, base: Box<Ring> },
}

/// An element of some [`Ring`]. Values are canonical by construction:
/// rationals are reduced with positive denominator, modular residues lie in
/// `[0, m)`, matrix payloads hold exactly `dim²` base entries row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rational(Box<BigRational>),
    Modular(u64),
    Matrix(Box<[Value]>),
}

impl Ring {
    /// The ring of integers modulo `m`. Requires `m >= 2`.
    pub fn modular(m: u64) -> Result<Ring> {
        if m < 2 {
            return Err(Error::InvalidRing(format!(
                "modulus must be at least 2, got {m}"
            )));
        }
        Ok(Ring::Modular { modulus: m })
    }

    /// The ring of `dim × dim` matrices over `base`. Requires `dim >= 1` and a
    /// commutative scalar base (matrices over matrices are not supported).
    pub fn matrix(dim: usize, base: Ring) -> Result<Ring> {
        if dim < 1 {
            return Err(Error::InvalidRing(
                "matrix dimension must be at least 1".into(),
            ));
        }
        if !base.is_scalar() {
            return Err(Error::InvalidRing(
                "matrix base must be a commutative scalar ring".into(),
            ));
        }
        Ok(Ring::Matrix {
            dim,
            base: Box::new(base),
        })
    }

    /// True for rings whose multiplication commutes: rationals, modular rings,
    /// and 1×1 matrix rings.
    pub fn is_commutative(&self) -> bool {
        match self {
            Ring::Rational | Ring::Modular { .. } => true,
            Ring::Matrix { dim, base } => *dim == 1 && base.is_commutative(),
        }
    }

    /// True unless this is a matrix ring.
    pub fn is_scalar(&self) -> bool {
        !matches!(self, Ring::Matrix { .. })
    }

    pub fn zero(&self) -> Value {
        match self {
            Ring::Rational => Value::Rational(Box::new(BigRational::zero())),
            Ring::Modular { .. } => Value::Modular(0),
            Ring::Matrix { dim, base } => {
                Value::Matrix(vec![base.zero(); dim * dim].into_boxed_slice())
            }
        }
    }

    pub fn one(&self) -> Value {
        match self {
            Ring::Rational => Value::Rational(Box::new(BigRational::one())),
            Ring::Modular { .. } => Value::Modular(1),
            Ring::Matrix { dim, base } => {
                let mut entries = vec![base.zero(); dim * dim];
                for i in 0..*dim {
                    entries[i * dim + i] = base.one();
                }
                Value::Matrix(entries.into_boxed_slice())
            }
        }
    }

    pub fn is_zero(&self, v: &Value) -> bool {
        match (self, v) {
            (Ring::Rational, Value::Rational(r)) => r.is_zero(),
            (Ring::Modular { .. }, Value::Modular(r)) => *r == 0,
            (Ring::Matrix { base, .. }, Value::Matrix(entries)) => {
                entries.iter().all(|e| base.is_zero(e))
            }
            _ => self.type_mismatch(v),
        }
    }

    /// Embeds an integer as a ring element (scalar matrix for matrix rings).
    pub fn from_i64(&self, n: i64) -> Value {
        match self {
            Ring::Rational => Value::Rational(Box::new(BigRational::from_integer(n.into()))),
            Ring::Modular { modulus } => {
                Value::Modular((n.rem_euclid(*modulus as i64)) as u64)
            }
            Ring::Matrix { base, .. } => self.embed_scalar(&base.from_i64(n)),
        }
    }

    /// Exact sum in canonical form. Panics if either value does not belong to
    /// this ring.
    pub fn add(&self, x: &Value, y: &Value) -> Value {
        match (self, x, y) {
            (Ring::Rational, Value::Rational(a), Value::Rational(b)) => {
                Value::Rational(Box::new(&**a + &**b))
            }
            (Ring::Modular { modulus }, Value::Modular(a), Value::Modular(b)) => {
                debug_assert!(a < modulus && b < modulus);
                Value::Modular(((*a as u128 + *b as u128) % *modulus as u128) as u64)
            }
            (Ring::Matrix { base, .. }, Value::Matrix(a), Value::Matrix(b)) => {
                assert_eq!(a.len(), b.len(), "matrix payload size mismatch");
                Value::Matrix(
                    a.iter()
                        .zip(b.iter())
                        .map(|(ai, bi)| base.add(ai, bi))
                        .collect(),
                )
            }
            _ => self.type_mismatch(x),
        }
    }

    pub fn neg(&self, x: &Value) -> Value {
        match (self, x) {
            (Ring::Rational, Value::Rational(a)) => Value::Rational(Box::new(-&**a)),
            (Ring::Modular { modulus }, Value::Modular(a)) => {
                debug_assert!(a < modulus);
                Value::Modular(if *a == 0 { 0 } else { modulus - a })
            }
            (Ring::Matrix { base, .. }, Value::Matrix(a)) => {
                Value::Matrix(a.iter().map(|ai| base.neg(ai)).collect())
            }
            _ => self.type_mismatch(x),
        }
    }

    pub fn sub(&self, x: &Value, y: &Value) -> Value {
        self.add(x, &self.neg(y))
    }

    /// Exact product `x·y` with `x` on the left; order is significant for
    /// matrix rings. Panics if either value does not belong to this ring.
    pub fn mul(&self, x: &Value, y: &Value) -> Value {
        match (self, x, y) {
            (Ring::Rational, Value::Rational(a), Value::Rational(b)) => {
                Value::Rational(Box::new(&**a * &**b))
            }
            (Ring::Modular { modulus }, Value::Modular(a), Value::Modular(b)) => {
                debug_assert!(a < modulus && b < modulus);
                Value::Modular(((*a as u128 * *b as u128) % *modulus as u128) as u64)
            }
            (Ring::Matrix { dim, base }, Value::Matrix(a), Value::Matrix(b)) => {
                let k = *dim;
                assert_eq!(a.len(), k * k, "matrix payload size mismatch");
                assert_eq!(b.len(), k * k, "matrix payload size mismatch");
                let mut entries = Vec::with_capacity(k * k);
                for i in 0..k {
                    for j in 0..k {
                        let mut acc = base.zero();
                        for l in 0..k {
                            acc = base.add(&acc, &base.mul(&a[i * k + l], &b[l * k + j]));
                        }
                        entries.push(acc);
                    }
                }
                Value::Matrix(entries.into_boxed_slice())
            }
            _ => self.type_mismatch(x),
        }
    }

    /// Structural equality of canonical forms.
    pub fn eq(&self, x: &Value, y: &Value) -> bool {
        debug_assert!(self.contains(x) && self.contains(y));
        x == y
    }

    /// Structural membership check: variant, bounds and payload shape.
    pub fn contains(&self, v: &Value) -> bool {
        match (self, v) {
            (Ring::Rational, Value::Rational(_)) => true,
            (Ring::Modular { modulus }, Value::Modular(r)) => r < modulus,
            (Ring::Matrix { dim, base }, Value::Matrix(entries)) => {
                entries.len() == dim * dim && entries.iter().all(|e| base.contains(e))
            }
            _ => false,
        }
    }

    /// Rebuilds the canonical form of a structurally well-shaped value. Every
    /// operation already returns canonical output, so this is the identity on
    /// anything this ring produced.
    pub fn canonicalize(&self, v: &Value) -> Value {
        match (self, v) {
            (Ring::Rational, Value::Rational(r)) => Value::Rational(Box::new(BigRational::new(
                r.numer().clone(),
                r.denom().clone(),
            ))),
            (Ring::Modular { modulus }, Value::Modular(r)) => Value::Modular(r % modulus),
            (Ring::Matrix { base, .. }, Value::Matrix(entries)) => {
                Value::Matrix(entries.iter().map(|e| base.canonicalize(e)).collect())
            }
            _ => self.type_mismatch(v),
        }
    }

    /// Places a scalar of the base ring on the diagonal. Only meaningful for
    /// matrix rings; panics otherwise.
    pub fn embed_scalar(&self, v: &Value) -> Value {
        match self {
            Ring::Matrix { dim, base } => {
                let mut entries = vec![base.zero(); dim * dim];
                for i in 0..*dim {
                    entries[i * dim + i] = v.clone();
                }
                Value::Matrix(entries.into_boxed_slice())
            }
            _ => panic!("embed_scalar called on non-matrix ring {self}"),
        }
    }

    /// Deterministic draw given the generator state. Rationals take a
    /// numerator in [-9, 9] and a denominator in [1, 9], then canonicalize;
    /// modular rings draw a uniform residue; matrix rings recurse entrywise.
    pub fn random(&self, rng: &mut (impl Rng + ?Sized)) -> Value {
        match self {
            Ring::Rational => {
                let numer = BigInt::from(rng.gen_range(-9i64..=9));
                let denom = BigInt::from(rng.gen_range(1i64..=9));
                Value::Rational(Box::new(BigRational::new(numer, denom)))
            }
            Ring::Modular { modulus } => Value::Modular(rng.gen_range(0..*modulus)),
            Ring::Matrix { dim, base } => {
                Value::Matrix((0..dim * dim).map(|_| base.random(rng)).collect())
            }
        }
    }

    /// Parses a single value literal: `p/q` or `p` for rationals, a decimal
    /// residue for modular rings (reduced mod m), `[[a,b];[c,d]]` for matrix
    /// rings. Matrix rings also accept a base literal, embedded as a scalar
    /// matrix.
    pub fn parse_value(&self, text: &str) -> Result<Value> {
        let (value, pos) = parse_value_at(self, text, 0)?;
        let pos = skip_ws(text.as_bytes(), pos);
        if pos != text.len() {
            return Err(Error::parse(pos, "unexpected trailing input"));
        }
        Ok(value)
    }

    fn type_mismatch(&self, v: &Value) -> ! {
        panic!("value {v} does not belong to ring {self}")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rational => write!(f, "rational"),
            Ring::Modular { modulus } => write!(f, "mod:{modulus}"),
            Ring::Matrix { dim, base } => write!(f, "mat:{dim}:{base}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    /// Parses a ring selector: `rational`, `mod:<m>`, or `mat:<k>:<base>`.
    fn from_str(s: &str) -> Result<Ring> {
        if s == "rational" {
            return Ok(Ring::Rational);
        }
        if let Some(m) = s.strip_prefix("mod:") {
            let m: u64 = m
                .parse()
                .map_err(|_| Error::InvalidRing(format!("bad modulus in '{s}'")))?;
            return Ring::modular(m);
        }
        if let Some(rest) = s.strip_prefix("mat:") {
            let (dim, base) = rest
                .split_once(':')
                .ok_or_else(|| Error::InvalidRing(format!("missing base ring in '{s}'")))?;
            let dim: usize = dim
                .parse()
                .map_err(|_| Error::InvalidRing(format!("bad dimension in '{s}'")))?;
            return Ring::matrix(dim, base.parse()?);
        }
        Err(Error::InvalidRing(s.to_string()))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Value::Modular(r) => write!(f, "{r}"),
            Value::Matrix(entries) => {
                // Payload length is always a perfect square.
                let dim = entries.len().isqrt();
                write!(f, "[")?;
                for i in 0..dim {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "[")?;
                    for j in 0..dim {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{}", entries[i * dim + j])?;
                    }
                    write!(f, "]")?;
                }
                write!(f, "]")
            }
        }
    }
}

pub(crate) fn skip_ws(bytes: &[u8], mut pos: usize) -> usize {
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    pos
}

fn scan_digits(bytes: &[u8], pos: usize) -> Result<usize> {
    let mut end = pos;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == pos {
        return Err(Error::parse(pos, "expected a digit"));
    }
    Ok(end)
}

fn expect(bytes: &[u8], pos: usize, ch: u8) -> Result<usize> {
    if pos < bytes.len() && bytes[pos] == ch {
        Ok(pos + 1)
    } else {
        Err(Error::parse(pos, format!("expected '{}'", ch as char)))
    }
}

/// Parses one value literal of `ring` starting at byte offset `pos` of
/// `text`; returns the value and the offset just past it. Error offsets are
/// absolute in `text`, which lets the polynomial parser report positions in
/// the caller's input.
pub(crate) fn parse_value_at(ring: &Ring, text: &str, pos: usize) -> Result<(Value, usize)> {
    let bytes = text.as_bytes();
    let pos = skip_ws(bytes, pos);
    match ring {
        Ring::Rational => {
            let mut cur = pos;
            if cur < bytes.len() && bytes[cur] == b'-' {
                cur += 1;
            }
            let numer_end = scan_digits(bytes, cur)?;
            let numer = BigInt::parse_bytes(&bytes[pos..numer_end], 10)
                .ok_or_else(|| Error::parse(pos, "bad integer literal"))?;
            if numer_end < bytes.len() && bytes[numer_end] == b'/' {
                let denom_start = numer_end + 1;
                let denom_end = scan_digits(bytes, denom_start)?;
                let denom = BigInt::parse_bytes(&bytes[denom_start..denom_end], 10)
                    .ok_or_else(|| Error::parse(denom_start, "bad integer literal"))?;
                if denom.is_zero() {
                    return Err(Error::parse(denom_start, "denominator must be nonzero"));
                }
                Ok((
                    Value::Rational(Box::new(BigRational::new(numer, denom))),
                    denom_end,
                ))
            } else {
                Ok((
                    Value::Rational(Box::new(BigRational::from_integer(numer))),
                    numer_end,
                ))
            }
        }
        Ring::Modular { modulus } => {
            let end = scan_digits(bytes, pos)?;
            let parsed = BigUint::parse_bytes(&bytes[pos..end], 10)
                .ok_or_else(|| Error::parse(pos, "bad residue literal"))?;
            let residue = (parsed % BigUint::from(*modulus))
                .to_u64()
                .expect("residue below a u64 modulus fits in u64");
            Ok((Value::Modular(residue), end))
        }
        Ring::Matrix { dim, base } => {
            if pos < bytes.len() && bytes[pos] == b'[' {
                parse_matrix_literal(bytes, text, pos, *dim, base)
            } else {
                // Base literal as a scalar matrix: lets `x^2+1` style inputs
                // work over matrix rings.
                let (scalar, end) = parse_value_at(base, text, pos)?;
                Ok((ring.embed_scalar(&scalar), end))
            }
        }
    }
}

fn parse_matrix_literal(
    bytes: &[u8],
    text: &str,
    pos: usize,
    dim: usize,
    base: &Ring,
) -> Result<(Value, usize)> {
    let mut cur = expect(bytes, pos, b'[')?;
    let mut entries = Vec::with_capacity(dim * dim);
    for row in 0..dim {
        if row > 0 {
            cur = skip_ws(bytes, cur);
            cur = expect(bytes, cur, b';')?;
        }
        cur = skip_ws(bytes, cur);
        cur = expect(bytes, cur, b'[')?;
        for col in 0..dim {
            if col > 0 {
                cur = skip_ws(bytes, cur);
                cur = expect(bytes, cur, b',')?;
            }
            let (entry, next) = parse_value_at(base, text, cur)?;
            entries.push(entry);
            cur = next;
        }
        cur = skip_ws(bytes, cur);
        cur = expect(bytes, cur, b']')?;
    }
    cur = skip_ws(bytes, cur);
    cur = expect(bytes, cur, b']')?;
    Ok((Value::Matrix(entries.into_boxed_slice()), cur))
}
