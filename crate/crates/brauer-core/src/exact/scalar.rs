use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient ring tag. `PrimeField(p)` requires p prime and p < 2^31 so
/// that products of reduced representatives fit in a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integer,
    Rational,
    PrimeField(u64),
    IntPolynomial,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integer => write!(f, "Z"),
            Ring::Rational => write!(f, "Q"),
            Ring::PrimeField(p) => write!(f, "GF({p})"),
            Ring::IntPolynomial => write!(f, "Z[x]"),
        }
    }
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring> {
        if p >= 1 << 31 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Ring::PrimeField(p))
    }

    pub fn is_field(self) -> bool {
        matches!(self, Ring::Rational | Ring::PrimeField(_))
    }

    /// Field characteristic: 0 for Q, p for GF(p). Integer and Z[x] report 0.
    pub fn characteristic(self) -> u64 {
        match self {
            Ring::PrimeField(p) => p,
            _ => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    /// Canonical image of a small integer in this ring.
    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Ring::Integer => Scalar::Integer(BigInt::from(v)),
            Ring::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Ring::PrimeField(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                Scalar::PrimeField { value: r, modulus: p }
            }
            Ring::IntPolynomial => {
                if v == 0 {
                    Scalar::IntPolynomial(vec![])
                } else {
                    Scalar::IntPolynomial(vec![BigInt::from(v)])
                }
            }
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Ring::Integer => Scalar::Integer(v.clone()),
            Ring::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Ring::PrimeField(p) => {
                let m = BigInt::from(p);
                let r = ((v % &m) + &m) % &m;
                let (_, digits) = r.to_u64_digits();
                let value = digits.first().copied().unwrap_or(0);
                Scalar::PrimeField { value, modulus: p }
            }
            Ring::IntPolynomial => {
                if v.is_zero() {
                    Scalar::IntPolynomial(vec![])
                } else {
                    Scalar::IntPolynomial(vec![v.clone()])
                }
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Exact scalar. Polynomial coefficients are stored ascending by degree with
/// no trailing zeros; prime-field values are reduced representatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Integer(BigInt),
    Rational(BigRational),
    PrimeField { value: u64, modulus: u64 },
    IntPolynomial(Vec<BigInt>),
}

impl Scalar {
    pub fn integer(v: i64) -> Scalar {
        Ring::Integer.from_i64(v)
    }

    pub fn rational(num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn prime_field(v: i64, p: u64) -> Result<Scalar> {
        Ok(Ring::prime_field(p)?.from_i64(v))
    }

    /// The polynomial with the given ascending coefficient list.
    pub fn polynomial(coeffs: Vec<BigInt>) -> Scalar {
        let mut c = coeffs;
        while c.last().is_some_and(|t| t.is_zero()) {
            c.pop();
        }
        Scalar::IntPolynomial(c)
    }

    /// The indeterminate x of Z[x].
    pub fn poly_x() -> Scalar {
        Scalar::IntPolynomial(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar::Rational(r)
    }

    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Integer(_) => Ring::Integer,
            Scalar::Rational(_) => Ring::Rational,
            Scalar::PrimeField { modulus, .. } => Ring::PrimeField(*modulus),
            Scalar::IntPolynomial(_) => Ring::IntPolynomial,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Integer(v) => v.is_zero(),
            Scalar::Rational(v) => v.is_zero(),
            Scalar::PrimeField { value, .. } => *value == 0,
            Scalar::IntPolynomial(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Integer(v) => v.is_one(),
            Scalar::Rational(v) => v.is_one(),
            Scalar::PrimeField { value, .. } => *value == 1,
            Scalar::IntPolynomial(c) => c.len() == 1 && c[0].is_one(),
        }
    }

    fn check_same_ring(&self, other: &Scalar) -> Result<()> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch {
                left: self.ring(),
                right: other.ring(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::PrimeField { value: a, modulus: p },
                Scalar::PrimeField { value: b, .. },
            ) => Scalar::PrimeField {
                value: (a + b) % p,
                modulus: *p,
            },
            (Scalar::IntPolynomial(a), Scalar::IntPolynomial(b)) => {
                let n = a.len().max(b.len());
                let mut c = Vec::with_capacity(n);
                for i in 0..n {
                    let x = a.get(i).cloned().unwrap_or_else(BigInt::zero)
                        + b.get(i).cloned().unwrap_or_else(BigInt::zero);
                    c.push(x);
                }
                return Ok(Scalar::polynomial(c));
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Integer(v) => Scalar::Integer(-v),
            Scalar::Rational(v) => Scalar::Rational(-v),
            Scalar::PrimeField { value, modulus } => Scalar::PrimeField {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            Scalar::IntPolynomial(c) => Scalar::IntPolynomial(c.iter().map(|x| -x).collect()),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::PrimeField { value: a, modulus: p },
                Scalar::PrimeField { value: b, .. },
            ) => Scalar::PrimeField {
                value: (a * b) % p,
                modulus: *p,
            },
            (Scalar::IntPolynomial(a), Scalar::IntPolynomial(b)) => {
                if a.is_empty() || b.is_empty() {
                    return Ok(Scalar::IntPolynomial(vec![]));
                }
                let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        c[i + j] += x * y;
                    }
                }
                Scalar::IntPolynomial(c)
            }
            _ => unreachable!(),
        })
    }

    /// Multiplicative inverse; defined only over fields.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Rational(v) => Ok(Scalar::Rational(v.recip())),
            Scalar::PrimeField { value, modulus } => Ok(Scalar::PrimeField {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            }),
            _ => Err(Error::UnsupportedRing {
                ring: self.ring(),
                op: "inverse",
            }),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.mul(&other.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Result<Scalar> {
        let mut acc = self.ring().one();
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact-integer view of the scalar, when it has one.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Integer(v) => Some(v.clone()),
            Scalar::Rational(v) if v.is_integer() => Some(v.to_integer()),
            Scalar::PrimeField { value, .. } => Some(BigInt::from(*value)),
            _ => None,
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p is prime and a != 0 mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Integer(v) => write!(f, "{v}"),
            Scalar::Rational(v) => {
                if v.is_integer() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            Scalar::PrimeField { value, .. } => write!(f, "{value}"),
            Scalar::IntPolynomial(c) => {
                if c.is_empty() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (d, coeff) in c.iter().enumerate().rev() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let abs = coeff.abs();
                    if first {
                        if coeff.is_negative() {
                            write!(f, "-")?;
                        }
                        first = false;
                    } else if coeff.is_negative() {
                        write!(f, "-")?;
                    } else {
                        write!(f, "+")?;
                    }
                    match d {
                        0 => write!(f, "{abs}")?,
                        _ => {
                            if !abs.is_one() {
                                write!(f, "{abs}*")?;
                            }
                            if d == 1 {
                                write!(f, "x")?;
                            } else {
                                write!(f, "x^{d}")?;
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

/// Parse a scalar in the textual form produced by `Display`, in the given ring.
pub(crate) fn parse_scalar(s: &str, ring: Ring) -> Result<Scalar> {
    let s = s.trim();
    let bad = |m: &str| Error::Parse(format!("bad scalar `{s}`: {m}"));
    match ring {
        Ring::Integer => {
            let v: BigInt = s.parse().map_err(|_| bad("expected an integer"))?;
            Ok(Scalar::Integer(v))
        }
        Ring::Rational => {
            if let Some((n, d)) = s.split_once('/') {
                let n: BigInt = n.trim().parse().map_err(|_| bad("bad numerator"))?;
                let d: BigInt = d.trim().parse().map_err(|_| bad("bad denominator"))?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            } else {
                let v: BigInt = s.parse().map_err(|_| bad("expected an integer"))?;
                Ok(Scalar::Rational(BigRational::from_integer(v)))
            }
        }
        Ring::PrimeField(p) => {
            let v: i64 = s.parse().map_err(|_| bad("expected a residue"))?;
            Scalar::prime_field(v, p)
        }
        Ring::IntPolynomial => parse_polynomial(s).ok_or_else(|| bad("expected a Z[x] polynomial")),
    }
}

fn parse_polynomial(s: &str) -> Option<Scalar> {
    // Grammar: term (('+'|'-') term)*, term := int | [int'*']'x'['^'deg].
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return None;
    }
    let mut coeffs: Vec<BigInt> = vec![];
    let mut rest = compact.as_str();
    let mut sign = BigInt::one();
    if let Some(r) = rest.strip_prefix('-') {
        sign = -sign;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    loop {
        let split = rest
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i);
        let (term, tail) = match split {
            Some(i) => rest.split_at(i),
            None => (rest, ""),
        };
        let (coeff_str, degree) = match term.split_once('x') {
            None => (term, 0usize),
            Some((c, pow)) => {
                let c = c.strip_suffix('*').unwrap_or(c);
                let d = match pow.strip_prefix('^') {
                    Some(d) => d.parse().ok()?,
                    None if pow.is_empty() => 1,
                    None => return None,
                };
                (c, d)
            }
        };
        let coeff: BigInt = if coeff_str.is_empty() {
            BigInt::one()
        } else {
            coeff_str.parse().ok()?
        };
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, BigInt::zero());
        }
        coeffs[degree] += sign * coeff;
        if tail.is_empty() {
            break;
        }
        sign = if tail.starts_with('-') {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        rest = &tail[1..];
    }
    Some(Scalar::polynomial(coeffs))
}
