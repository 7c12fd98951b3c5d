//! Exact scalars: arbitrary-precision rationals and prime-field residues.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Default modulus for the prime-field backend.
pub const DEFAULT_PRIME: u64 = 1_000_003;

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Validated prime field. Moduli must be prime and below 2^62.
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if p >= 1 << 62 || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> FieldScalar {
        match self {
            Field::Rational => FieldScalar::Rational(BigRational::zero()),
            Field::Prime(p) => FieldScalar::Prime { residue: 0, modulus: p },
        }
    }

    pub fn one(self) -> FieldScalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> FieldScalar {
        match self {
            Field::Rational => FieldScalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => FieldScalar::Prime {
                residue: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Maps a rational into this field; fails when the denominator vanishes mod p.
    pub fn from_rational(self, q: &BigRational) -> Result<FieldScalar, LinalgError> {
        match self {
            Field::Rational => Ok(FieldScalar::Rational(q.clone())),
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &pm) + &pm) % &pm;
                    r.to_u64().expect("residue fits in u64")
                };
                let num = reduce(q.numer());
                let den = reduce(q.denom());
                if den == 0 {
                    return Err(LinalgError::DenominatorVanishes { value: q.to_string(), modulus: p });
                }
                Ok(FieldScalar::Prime { residue: mul_mod(num, inv_mod(den, p), p), modulus: p })
            }
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rat"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = LinalgError;

    /// Accepts `rat` or `fp:<p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "rat" || s == "q" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest.parse().map_err(|_| LinalgError::BadField(s.to_string()))?;
            return Field::prime(p);
        }
        Err(LinalgError::BadField(s.to_string()))
    }
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); residues lie in `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    Prime { residue: u64, modulus: u64 },
}

impl FieldScalar {
    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Rational(_) => Field::Rational,
            FieldScalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(q) => q.is_zero(),
            FieldScalar::Prime { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(q) => q.is_one(),
            FieldScalar::Prime { residue, .. } => *residue == 1,
        }
    }

    pub fn checked_add(&self, other: &FieldScalar) -> Result<FieldScalar, LinalgError> {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => Ok(FieldScalar::Rational(a + b)),
            (FieldScalar::Prime { residue: a, modulus: p }, FieldScalar::Prime { residue: b, modulus: q })
                if p == q =>
            {
                Ok(FieldScalar::Prime { residue: add_mod(*a, *b, *p), modulus: *p })
            }
            _ => Err(LinalgError::FieldMismatch(self.field(), other.field())),
        }
    }

    pub fn checked_mul(&self, other: &FieldScalar) -> Result<FieldScalar, LinalgError> {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => Ok(FieldScalar::Rational(a * b)),
            (FieldScalar::Prime { residue: a, modulus: p }, FieldScalar::Prime { residue: b, modulus: q })
                if p == q =>
            {
                Ok(FieldScalar::Prime { residue: mul_mod(*a, *b, *p), modulus: *p })
            }
            _ => Err(LinalgError::FieldMismatch(self.field(), other.field())),
        }
    }

    /// Panics on field mismatch; matrix constructors validate fields up front.
    pub fn add(&self, other: &FieldScalar) -> FieldScalar {
        self.checked_add(other).expect("field mismatch")
    }

    pub fn mul(&self, other: &FieldScalar) -> FieldScalar {
        self.checked_mul(other).expect("field mismatch")
    }

    pub fn sub(&self, other: &FieldScalar) -> FieldScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldScalar {
        match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(-a),
            FieldScalar::Prime { residue, modulus } => FieldScalar::Prime {
                residue: if *residue == 0 { 0 } else { modulus - residue },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<FieldScalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(a.recip()),
            FieldScalar::Prime { residue, modulus } => FieldScalar::Prime {
                residue: inv_mod(*residue, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> FieldScalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `self + a * b`, the elimination kernel.
    pub fn add_product(&self, a: &FieldScalar, b: &FieldScalar) -> FieldScalar {
        match (self, a, b) {
            (
                FieldScalar::Prime { residue: s, modulus: p },
                FieldScalar::Prime { residue: x, .. },
                FieldScalar::Prime { residue: y, .. },
            ) => FieldScalar::Prime { residue: add_mod(*s, mul_mod(*x, *y, *p), *p), modulus: *p },
            _ => self.add(&a.mul(b)),
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldScalar::Prime { residue, .. } => write!(f, "{residue}"),
        }
    }
}

/// Parses `a` or `a/b` (optionally signed) into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p { s - p } else { s }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `p >= from` with `p ≡ 1 (mod r)`.
pub fn smallest_prime_congruent_one(from: u64, r: u64) -> u64 {
    let r = r.max(1);
    let mut p = from.max(2);
    // first candidate congruent to 1 mod r
    let rem = (p + r - 1) % r;
    if rem != 0 {
        p += r - rem;
    }
    loop {
        if is_prime(p) {
            return p;
        }
        p += r;
    }
}

/// An element of exact multiplicative order `r` in F_p. Requires `r | p - 1`.
pub fn primitive_root_of_unity(r: u64, p: u64) -> Option<u64> {
    if r == 0 || (p - 1) % r != 0 {
        return None;
    }
    if r == 1 {
        return Some(1);
    }
    let mut factors = Vec::new();
    let mut m = r;
    let mut f = 2;
    while f * f <= m {
        if m % f == 0 {
            factors.push(f);
            while m % f == 0 {
                m /= f;
            }
        }
        f += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find_map(|g| {
        let z = pow_mod(g, (p - 1) / r, p);
        factors.iter().all(|q| pow_mod(z, r / q, p) != 1).then_some(z)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Signed;

    #[test]
    fn rationals_stay_reduced() {
        let q = parse_rational("6/-4").unwrap();
        let s = FieldScalar::Rational(q);
        assert_eq!(s.to_string(), "-3/2");
        if let FieldScalar::Rational(q) = &s {
            assert!(q.denom().is_positive());
        }
    }

    #[test]
    fn mixing_moduli_is_an_error() {
        let a = Field::Prime(5).one();
        let b = Field::Prime(7).one();
        assert!(matches!(a.checked_add(&b), Err(LinalgError::FieldMismatch(..))));
        assert!(a.checked_mul(&Field::Rational.one()).is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(1_000_003).unwrap();
        let x = f.from_i64(-12345);
        assert!(x.mul(&x.inv().unwrap()).is_one());
        assert_eq!(f.from_rational(&parse_rational("1/2").unwrap()).unwrap().mul(&f.from_i64(2)), f.one());
    }

    #[test]
    fn primality_and_congruences() {
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1_000_001));
        assert_eq!(smallest_prime_congruent_one(2, 4), 5);
        assert_eq!(smallest_prime_congruent_one(5, 3), 7);
        let p = smallest_prime_congruent_one(DEFAULT_PRIME, 3);
        assert!(p >= DEFAULT_PRIME && is_prime(p) && p % 3 == 1);
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn roots_of_unity_have_exact_order() {
        let z = primitive_root_of_unity(4, 13).unwrap();
        assert_eq!(pow_mod(z, 4, 13), 1);
        assert_ne!(pow_mod(z, 2, 13), 1);
        assert_eq!(primitive_root_of_unity(2, 5), Some(4));
        assert!(primitive_root_of_unity(3, 5).is_none());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("rat".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("fp:7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("fp:8".parse::<Field>().is_err());
        assert!("real".parse::<Field>().is_err());
    }
}
