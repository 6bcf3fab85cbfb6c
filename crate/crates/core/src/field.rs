//! Coefficient fields: exact rationals and a prime field.
//!
//! Rationals keep an `i64` fast path and fall back to big integers when a
//! result no longer fits. Prime-field elements share one process-wide
//! modulus, fixed on first use (default 31991).

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact field arithmetic used by every polynomial routine.
pub trait Field:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    /// Parses an integer or a fraction `a/b`.
    fn parse(s: &str) -> Result<Self>;
    /// True when the printed form starts with a minus sign.
    fn is_negative(&self) -> bool;
    fn characteristic() -> u64;
    fn descriptor() -> String;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

// ---------------------------------------------------------------------------
// Rationals

/// An exact rational number. `Small` is used whenever the reduced fraction
/// fits in `i64` (with a positive denominator), so structural equality is
/// value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(i64, i64),
    Big(BigRational),
}

impl Rational {
    fn from_i128(num: i128, den: i128) -> Rational {
        debug_assert!(den != 0);
        let (mut n, mut d) = (num, den);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) if a != i64::MIN => Rational::Small(a, b),
            _ => Rational::Big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Rational {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(a), Some(b)) if a != i64::MIN => Rational::Small(a, b),
            _ => Rational::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(a, b) => BigRational::new_raw(BigInt::from(*a), BigInt::from(*b)),
            Rational::Big(r) => r.clone(),
        }
    }

    pub fn numer_i64(&self) -> Option<i64> {
        match self {
            Rational::Small(a, _) => Some(*a),
            Rational::Big(_) => None,
        }
    }

    /// Reduction modulo a prime, `None` when the denominator vanishes.
    pub fn reduce_mod(&self, p: u64) -> Option<u64> {
        let big_p = BigInt::from(p);
        let (n, d) = match self {
            Rational::Small(a, b) => (BigInt::from(*a), BigInt::from(*b)),
            Rational::Big(r) => (r.numer().clone(), r.denom().clone()),
        };
        let n = n.mod_floor(&big_p).to_u64()?;
        let d = d.mod_floor(&big_p).to_u64()?;
        if d == 0 {
            return None;
        }
        Some(n * mod_inverse(d, p) % p)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::Small(0, 1)
    }
    fn one() -> Self {
        Rational::Small(1, 1)
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_i128(n as i128, 1)
    }
    fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }
    fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }
    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                if b == d {
                    Rational::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    Rational::from_i128(
                        *a as i128 * *d as i128 + *c as i128 * *b as i128,
                        *b as i128 * *d as i128,
                    )
                }
            }
            _ => Rational::from_big(self.to_big() + other.to_big()),
        }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * other.to_big()),
        }
    }
    fn neg(&self) -> Self {
        match self {
            Rational::Small(a, b) => Rational::Small(-a, *b),
            Rational::Big(r) => Rational::from_big(-r.clone()),
        }
    }
    fn inv(&self) -> Self {
        match self {
            Rational::Small(0, _) => panic!("inverse of zero"),
            Rational::Small(a, b) => Rational::from_i128(*b as i128, *a as i128),
            Rational::Big(r) => Rational::from_big(r.recip()),
        }
    }
    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n = BigInt::from_str(n).map_err(|_| bad())?;
        let d = BigInt::from_str(d).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
    fn is_negative(&self) -> bool {
        match self {
            Rational::Small(a, _) => *a < 0,
            Rational::Big(r) => r.is_negative(),
        }
    }
    fn characteristic() -> u64 {
        0
    }
    fn descriptor() -> String {
        "q".to_string()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(a, 1) => write!(f, "{a}"),
            Rational::Small(a, b) => write!(f, "{a}/{b}"),
            Rational::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Rational::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Prime field

pub const DEFAULT_PRIME: u32 = 31991;

static MODULUS: OnceLock<u32> = OnceLock::new();

fn modulus() -> u32 {
    *MODULUS.get_or_init(|| DEFAULT_PRIME)
}

/// Fixes the prime used by [`Fp`]. Must be called before any prime-field
/// arithmetic; afterwards only the already configured value is accepted.
pub fn configure_prime(p: u32) -> Result<()> {
    if !is_prime(p as u64) || p < 3 || p >= 1 << 31 {
        return Err(Error::InvalidField(format!(
            "{p} is not an odd prime below 2^31"
        )));
    }
    let current = *MODULUS.get_or_init(|| p);
    if current != p {
        return Err(Error::InvalidField(format!(
            "prime field already fixed to {current} in this process"
        )));
    }
    Ok(())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "{a} is not invertible modulo {p}");
    t.rem_euclid(p as i64) as u64
}

/// Element of the prime field with the process-wide modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp(u32);

impl Fp {
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn modulus() -> u32 {
        modulus()
    }

    /// Image of a rational number; `None` if `p` divides the denominator.
    pub fn from_rational(r: &Rational) -> Option<Fp> {
        r.reduce_mod(modulus() as u64).map(|v| Fp(v as u32))
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(modulus() as i64) as u32)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_one(&self) -> bool {
        self.0 == 1
    }
    fn add(&self, other: &Self) -> Self {
        let p = modulus();
        let s = self.0 + other.0;
        Fp(if s >= p { s - p } else { s })
    }
    fn sub(&self, other: &Self) -> Self {
        let p = modulus();
        Fp(if self.0 >= other.0 {
            self.0 - other.0
        } else {
            self.0 + p - other.0
        })
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(((self.0 as u64 * other.0 as u64) % modulus() as u64) as u32)
    }
    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(modulus() - self.0)
        }
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        Fp(mod_inverse(self.0 as u64, modulus() as u64) as u32)
    }
    fn parse(s: &str) -> Result<Self> {
        let r = Rational::parse(s)?;
        Fp::from_rational(&r)
            .ok_or_else(|| Error::Parse(format!("`{s}` has a denominator divisible by p")))
    }
    fn is_negative(&self) -> bool {
        false
    }
    fn characteristic() -> u64 {
        modulus() as u64
    }
    fn descriptor() -> String {
        format!("fp:{}", modulus())
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Coefficient field selector used by configuration and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum FieldKind {
    Rational,
    Prime(u32),
}

impl FieldKind {
    pub fn descriptor(&self) -> String {
        match self {
            FieldKind::Rational => "q".into(),
            FieldKind::Prime(p) => format!("fp:{p}"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(FieldKind::Rational),
            "fp" => Ok(FieldKind::Prime(DEFAULT_PRIME)),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::InvalidField(format!("unknown field `{s}`")))?;
                if !is_prime(p as u64) {
                    return Err(Error::InvalidField(format!("{p} is not prime")));
                }
                Ok(FieldKind::Prime(p))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_overflow_promotes_and_demotes() {
        let big = Rational::from_i64(i64::MAX);
        let sq = big.mul(&big);
        assert!(matches!(sq, Rational::Big(_)));
        let back = sq.div(&big);
        assert_eq!(back, big);
        assert!(matches!(back, Rational::Small(..)));
    }

    #[test]
    fn rational_parse_and_print() {
        let r = Rational::parse("-6/4").unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert!(r.is_negative());
        assert!(Rational::parse("1/0").is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let a = Fp::from_i64(12345);
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(Fp::from_i64(-1).add(&Fp::one()), Fp::zero());
    }

    #[test]
    fn rational_reduction_mod_p() {
        let r = Rational::parse("1/2").unwrap();
        let v = Fp::from_rational(&r).unwrap();
        assert_eq!(v.mul(&Fp::from_i64(2)), Fp::one());
    }

    #[test]
    fn field_kind_parsing() {
        assert_eq!("q".parse::<FieldKind>().unwrap(), FieldKind::Rational);
        assert_eq!("fp:101".parse::<FieldKind>().unwrap(), FieldKind::Prime(101));
        assert!("fp:100".parse::<FieldKind>().is_err());
    }
}
