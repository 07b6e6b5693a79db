//! Exact number types for index values.
//!
//! Every index produced by this crate is an integer, a reduced rational, or a
//! finite sum `Σ cᵢ·√dᵢ` with rational `cᵢ` and distinct squarefree `dᵢ`.
//! Square roots of distinct squarefree integers are linearly independent over
//! the rationals, so the canonical term list of a [`RadicalSum`] is a complete
//! invariant: two sums are equal exactly when their term lists are.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Digits used for the `approx` field of serialized radical values.
pub const JSON_APPROX_DIGITS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("squarefree decomposition of zero is undefined")]
    ZeroDecomposition,
    #[error("square root requires a positive argument, got {0}")]
    NonPositive(String),
    #[error("radicand {0} does not fit in 64 bits")]
    RadicandOverflow(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by an irrational value")]
    IrrationalDivisor,
    #[error("malformed value: {0}")]
    Malformed(String),
}

/// Splits `m` into `(c, d)` with `m = c²·d` and `d` squarefree.
pub fn sqf_decompose(m: u64) -> Result<(u64, u64), ArithError> {
    if m == 0 {
        return Err(ArithError::ZeroDecomposition);
    }
    let mut rest = m;
    let mut square_root = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while (p as u128) * (p as u128) <= rest as u128 {
        if rest.is_multiple_of(p) {
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            square_root *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // whatever survives trial division is a single prime
    free *= rest;
    Ok((square_root, free))
}

fn big_to_u64(n: &BigInt) -> Result<u64, ArithError> {
    n.to_u64()
        .ok_or_else(|| ArithError::RadicandOverflow(n.to_string()))
}

/// Canonical `Σ cᵢ·√dᵢ`. Radicand 1 carries the rational part.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    terms: BTreeMap<u64, BigRational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut out = Self::zero();
        out.push_canonical(1, q);
        out
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// `coeff · √radicand` for any positive radicand; square factors are
    /// pulled into the coefficient.
    pub fn term(coeff: BigRational, radicand: u64) -> Result<Self, ArithError> {
        Self::canonicalize([(radicand, coeff)])
    }

    /// Builds the canonical sum from arbitrary `(radicand, coefficient)` pairs.
    /// Radicands need not be squarefree or distinct; zero coefficients vanish.
    pub fn canonicalize<I>(pairs: I) -> Result<Self, ArithError>
    where
        I: IntoIterator<Item = (u64, BigRational)>,
    {
        let mut out = Self::zero();
        for (radicand, coeff) in pairs {
            if coeff.is_zero() {
                continue;
            }
            let (c, d) = sqf_decompose(radicand)?;
            out.push_canonical(d, coeff * BigRational::from_integer(BigInt::from(c)));
        }
        Ok(out)
    }

    fn push_canonical(&mut self, radicand: u64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(radicand).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    /// Terms in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> + '_ {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&d| d == 1)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.rational_part())
        } else {
            None
        }
    }

    pub fn rational_part(&self) -> BigRational {
        self.terms
            .get(&1)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(d, c)| (*d, c * r)).collect(),
        }
    }

    /// Exact product. `√a·√b = g·√(a/g · b/g)` with `g = gcd(a, b)`, which
    /// stays squarefree without refactoring.
    pub fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        let mut out = Self::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                let g = a.gcd(&b);
                let radicand = (a / g)
                    .checked_mul(b / g)
                    .ok_or_else(|| ArithError::RadicandOverflow(format!("{a}*{b}")))?;
                let coeff = ca * cb * BigRational::from_integer(BigInt::from(g));
                out.push_canonical(radicand, coeff);
            }
        }
        Ok(out)
    }

    /// Division, only by a nonzero rational.
    pub fn div(&self, other: &Self) -> Result<Self, ArithError> {
        let q = other.as_rational().ok_or(ArithError::IrrationalDivisor)?;
        if q.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.scale(&q.recip()))
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(d, c)| rational_to_f64(c) * (*d as f64).sqrt())
            .sum()
    }

    /// Least common denominator of all coefficients.
    fn common_denominator(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl Add for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;
    fn add(mut self, rhs: RadicalSum) -> RadicalSum {
        self += &rhs;
        self
    }
}

impl AddAssign<&RadicalSum> for RadicalSum {
    fn add_assign(&mut self, rhs: &RadicalSum) {
        for (d, c) in &rhs.terms {
            self.push_canonical(*d, c.clone());
        }
    }
}

impl Neg for RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        Self {
            terms: self.terms.into_iter().map(|(d, c)| (d, -c)).collect(),
        }
    }
}

impl Sub for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        self + &(-rhs.clone())
    }
}

impl fmt::Display for RadicalSum {
    /// Renders over a common denominator, e.g. `(23 + 12√7)/14`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let den = self.common_denominator();
        let mut body = String::new();
        for (i, (d, c)) in self.terms.iter().enumerate() {
            let scaled = (c * BigRational::from_integer(den.clone())).to_integer();
            let neg = scaled.is_negative();
            let mag = scaled.abs();
            if i == 0 {
                if neg {
                    body.push('-');
                }
            } else {
                body.push_str(if neg { " - " } else { " + " });
            }
            if *d == 1 {
                body.push_str(&mag.to_string());
            } else if mag.is_one() {
                body.push_str(&format!("√{d}"));
            } else {
                body.push_str(&format!("{mag}√{d}"));
            }
        }
        if den.is_one() {
            write!(f, "{body}")
        } else if self.terms.len() == 1 {
            write!(f, "{body}/{den}")
        } else {
            write!(f, "({body})/{den}")
        }
    }
}

/// `1/√q` as a canonical radical sum. For `q = a/b` this is `√(ab)/a`.
pub fn inv_sqrt(q: &BigRational) -> Result<RadicalSum, ArithError> {
    if !q.is_positive() {
        return Err(ArithError::NonPositive(q.to_string()));
    }
    let a = q.numer();
    let b = q.denom();
    let radicand = big_to_u64(&(a * b))?;
    RadicalSum::term(BigRational::new(BigInt::one(), a.clone()), radicand)
}

/// `√q` for `q ≥ 0`. For `q = a/b` this is `√(ab)/b`.
pub fn sqrt(q: &BigRational) -> Result<RadicalSum, ArithError> {
    if q.is_negative() {
        return Err(ArithError::NonPositive(q.to_string()));
    }
    if q.is_zero() {
        return Ok(RadicalSum::zero());
    }
    let a = q.numer();
    let b = q.denom();
    let radicand = big_to_u64(&(a * b))?;
    RadicalSum::term(BigRational::new(BigInt::one(), b.clone()), radicand)
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    // ratio of two f64s loses everything once both overflow; scale first
    let n = q.numer();
    let d = q.denom();
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// An exact index value, always in its most constrained form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ValueRepr", into = "ValueRepr")]
pub enum IndexValue {
    Integer(BigInt),
    Rational(BigRational),
    Radical(RadicalSum),
}

impl IndexValue {
    pub fn zero() -> Self {
        IndexValue::Integer(BigInt::zero())
    }

    pub fn from_rational(q: BigRational) -> Self {
        if q.is_integer() {
            IndexValue::Integer(q.to_integer())
        } else {
            IndexValue::Rational(q)
        }
    }

    pub fn from_radical(r: RadicalSum) -> Self {
        match r.as_rational() {
            Some(q) => Self::from_rational(q),
            None => IndexValue::Radical(r),
        }
    }

    pub fn to_radical(&self) -> RadicalSum {
        match self {
            IndexValue::Integer(n) => RadicalSum::from_integer(n.clone()),
            IndexValue::Rational(q) => RadicalSum::from_rational(q.clone()),
            IndexValue::Radical(r) => r.clone(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            IndexValue::Integer(_) => "integer",
            IndexValue::Rational(_) => "rational",
            IndexValue::Radical(_) => "radical",
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            IndexValue::Integer(n) => Some(n),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            IndexValue::Integer(n) => n.to_f64().unwrap_or(f64::NAN),
            IndexValue::Rational(q) => rational_to_f64(q),
            IndexValue::Radical(r) => r.to_f64(),
        }
    }

    /// Decimal rendering. Integers print as-is; everything else is rounded
    /// half-to-even to exactly `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        match self {
            IndexValue::Integer(n) => n.to_string(),
            IndexValue::Rational(q) => rational_decimal(q, digits),
            IndexValue::Radical(r) => radical_decimal(r, digits),
        }
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Integer(n) => write!(f, "{n}"),
            IndexValue::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            IndexValue::Radical(r) => write!(f, "{r}"),
        }
    }
}

impl From<BigInt> for IndexValue {
    fn from(n: BigInt) -> Self {
        IndexValue::Integer(n)
    }
}

impl From<u64> for IndexValue {
    fn from(n: u64) -> Self {
        IndexValue::Integer(BigInt::from(n))
    }
}

impl From<i64> for IndexValue {
    fn from(n: i64) -> Self {
        IndexValue::Integer(BigInt::from(n))
    }
}

impl From<BigRational> for IndexValue {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl From<RadicalSum> for IndexValue {
    fn from(r: RadicalSum) -> Self {
        Self::from_radical(r)
    }
}

fn pow10(n: usize) -> BigInt {
    num_traits::pow(BigInt::from(10u32), n)
}

fn round_half_even(q: &BigRational) -> BigInt {
    let floor = q.floor();
    let frac = q - &floor;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let base = floor.to_integer();
    match frac.cmp(&half) {
        std::cmp::Ordering::Less => base,
        std::cmp::Ordering::Greater => base + 1,
        std::cmp::Ordering::Equal => {
            if base.is_even() {
                base
            } else {
                base + 1
            }
        }
    }
}

fn format_fixed(n: &BigInt, digits: usize) -> String {
    let mut s = n.abs().to_string();
    if s.len() <= digits {
        s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
    }
    if digits > 0 {
        s.insert(s.len() - digits, '.');
    }
    if n.is_negative() {
        s.insert(0, '-');
    }
    s
}

fn rational_decimal(q: &BigRational, digits: usize) -> String {
    let scaled = q * BigRational::from_integer(pow10(digits));
    format_fixed(&round_half_even(&scaled), digits)
}

fn radical_decimal(r: &RadicalSum, digits: usize) -> String {
    if let Some(q) = r.as_rational() {
        return rational_decimal(&q, digits);
    }
    // Bracket the value between exact rational bounds built from integer
    // square roots, tightening until both bounds round to the same digits.
    // An irrational value is never a rounding tie, so this terminates.
    let mut guard = 8usize;
    loop {
        let precision = digits + guard;
        let scale = pow10(precision);
        let scale_sq = (&scale * &scale).to_biguint().expect("positive");
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for (d, c) in r.terms() {
            if d == 1 {
                let v = c * BigRational::from_integer(scale.clone());
                lo += &v;
                hi += v;
                continue;
            }
            let root = (BigUint::from(d) * &scale_sq).sqrt();
            let below = BigRational::from_integer(BigInt::from_biguint(Sign::Plus, root));
            let above = &below + BigRational::one();
            if c.is_positive() {
                lo += c * below;
                hi += c * above;
            } else {
                lo += c * above;
                hi += c * below;
            }
        }
        let shrink = BigRational::from_integer(pow10(guard));
        let a = round_half_even(&(lo / &shrink));
        let b = round_half_even(&(hi / shrink));
        if a == b {
            return format_fixed(&a, digits);
        }
        guard += 8;
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum ValueRepr {
    Integer {
        value: String,
    },
    Rational {
        num: String,
        den: String,
    },
    Radical {
        terms: Vec<TermRepr>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        approx: Option<String>,
    },
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    num: String,
    den: String,
    radicand: u64,
}

fn parse_big(s: &str) -> Result<BigInt, ArithError> {
    s.parse::<BigInt>()
        .map_err(|_| ArithError::Malformed(format!("not an integer: {s:?}")))
}

fn parse_ratio(num: &str, den: &str) -> Result<BigRational, ArithError> {
    let n = parse_big(num)?;
    let d = parse_big(den)?;
    if d.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

impl From<IndexValue> for ValueRepr {
    fn from(v: IndexValue) -> Self {
        match v {
            IndexValue::Integer(n) => ValueRepr::Integer {
                value: n.to_string(),
            },
            IndexValue::Rational(q) => ValueRepr::Rational {
                num: q.numer().to_string(),
                den: q.denom().to_string(),
            },
            IndexValue::Radical(r) => ValueRepr::Radical {
                approx: Some(radical_decimal(&r, JSON_APPROX_DIGITS)),
                terms: r
                    .terms()
                    .map(|(d, c)| TermRepr {
                        num: c.numer().to_string(),
                        den: c.denom().to_string(),
                        radicand: d,
                    })
                    .collect(),
            },
        }
    }
}

impl TryFrom<ValueRepr> for IndexValue {
    type Error = ArithError;

    fn try_from(repr: ValueRepr) -> Result<Self, ArithError> {
        Ok(match repr {
            ValueRepr::Integer { value } => IndexValue::Integer(parse_big(&value)?),
            ValueRepr::Rational { num, den } => IndexValue::from_rational(parse_ratio(&num, &den)?),
            ValueRepr::Radical { terms, .. } => {
                let pairs = terms
                    .iter()
                    .map(|t| Ok((t.radicand, parse_ratio(&t.num, &t.den)?)))
                    .collect::<Result<Vec<_>, ArithError>>()?;
                IndexValue::from_radical(RadicalSum::canonicalize(pairs)?)
            }
        })
    }
}
