//! Exact scalars over the rationals and over odd prime fields.
//!
//! A [`Field`] is a small copyable handle; a [`Scalar`] carries enough of its
//! field to do arithmetic on its own, so the usual operator traits work on
//! `&Scalar`. Mixing scalars from two different fields is an invariant
//! violation and panics; every public constructor that accepts user data
//! checks field membership first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Largest modulus accepted for a prime field.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Unvalidated description of a field, as written on the command line: `q` or `fp:<p>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        match s.strip_prefix("fp:") {
            Some(p) => p
                .parse::<u64>()
                .map(FieldSpec::PrimeField)
                .map_err(|_| Error::InvalidValue(format!("field spec {s:?}"))),
            None => Err(Error::InvalidValue(format!(
                "field spec {s:?} (expected \"q\" or \"fp:<p>\")"
            ))),
        }
    }
}

/// A validated field: the rationals, or `F_p` with `p` an odd prime below 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field(FieldSpec);

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Field {
    pub fn create(spec: FieldSpec) -> Result<Field> {
        match spec {
            FieldSpec::Rationals => Ok(Field(spec)),
            FieldSpec::PrimeField(2) => Err(Error::CharacteristicTwo),
            FieldSpec::PrimeField(p) if p > MAX_MODULUS => Err(Error::ModulusTooLarge(p)),
            FieldSpec::PrimeField(p) if !is_prime(p) => Err(Error::CompositeModulus(p)),
            FieldSpec::PrimeField(_) => Ok(Field(spec)),
        }
    }

    pub fn rationals() -> Field {
        Field(FieldSpec::Rationals)
    }

    /// `F_p`; panics if `p` is not an odd prime. Use [`Field::create`] for untrusted input.
    pub fn prime(p: u64) -> Field {
        Field::create(FieldSpec::PrimeField(p)).expect("odd prime modulus")
    }

    pub fn spec(&self) -> FieldSpec {
        self.0
    }

    /// The modulus of a prime field, `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(p),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.0 {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den` in this field.
    pub fn fraction(&self, num: i64, den: i64) -> Result<Scalar> {
        self.inv(&self.from_i64(den))
            .map(|d| &self.from_i64(num) * &d)
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        s.field() == *self
    }

    pub fn inv(&self, s: &Scalar) -> Result<Scalar> {
        if !self.contains(s) {
            return Err(Error::FieldMismatch);
        }
        s.inv()
    }

    /// Parses a scalar in the serialized form: `a/b` or `a` for rationals,
    /// a decimal integer (reduced mod p, negatives allowed) for prime fields.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::InvalidValue(format!("scalar {text:?} for field {}", self.0));
        match self.0 {
            FieldSpec::Rationals => {
                let (num, den) = match text.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (text, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            FieldSpec::PrimeField(p) => {
                let n: BigInt = text.parse().map_err(|_| bad())?;
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                let value: u64 = r.try_into().map_err(|_| bad())?;
                Ok(Scalar::Residue { value, modulus: p })
            }
        }
    }

    /// Uniform residue for prime fields; for the rationals a small fraction
    /// with numerator in -6..=6 and denominator in 1..=5.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self.0 {
            FieldSpec::Rationals => {
                let num = rng.gen_range(-6i64..=6);
                let den = rng.gen_range(1i64..=5);
                Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            FieldSpec::PrimeField(p) => Scalar::Residue {
                value: rng.gen_range(0..p),
                modulus: p,
            },
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of a [`Field`].
///
/// Rationals are kept in lowest terms with a positive denominator; residues
/// always lie in `0..modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field(FieldSpec::Rationals),
            Scalar::Residue { modulus, .. } => Field(FieldSpec::PrimeField(*modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// The residue of a prime-field scalar.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    fn zip_with(
        &self,
        rhs: &Scalar,
        q: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        fp: impl FnOnce(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(q(a, b)),
            (
                Scalar::Residue {
                    value: a,
                    modulus: p,
                },
                Scalar::Residue {
                    value: b,
                    modulus: p2,
                },
            ) if p == p2 => Scalar::Residue {
                value: fp(*a, *b, *p),
                modulus: *p,
            },
            _ => panic!(
                "arithmetic between scalars of {} and {}",
                self.field(),
                rhs.field()
            ),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.zip_with(rhs, |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.zip_with(rhs, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.zip_with(rhs, |a, b| a * b, |a, b, p| a * b % p)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Scalar {
    /// Sign of a rational scalar; prime-field scalars have no order and report `None`.
    pub fn signum(&self) -> Option<i32> {
        match self {
            Scalar::Rational(q) if q.is_zero() => Some(0),
            Scalar::Rational(q) => Some(if q.is_positive() { 1 } else { -1 }),
            Scalar::Residue { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn inverse_of_two_mod_three_is_two() {
        let f = Field::create(FieldSpec::PrimeField(3)).unwrap();
        assert_eq!(f.inv(&f.from_i64(2)).unwrap(), f.from_i64(2));
    }

    #[test]
    fn rejects_characteristic_two_and_composites() {
        let err = Field::create(FieldSpec::PrimeField(2)).unwrap_err();
        assert_eq!(err.to_string(), "characteristic two not allowed");
        assert_eq!(
            Field::create(FieldSpec::PrimeField(9)),
            Err(Error::CompositeModulus(9))
        );
        assert!(Field::create(FieldSpec::PrimeField(1)).is_err());
        assert!(Field::create(FieldSpec::PrimeField(0)).is_err());
        assert_eq!(
            Field::create(FieldSpec::PrimeField((1 << 31) + 11)),
            Err(Error::ModulusTooLarge((1 << 31) + 11))
        );
        // 2^31 - 1 is a Mersenne prime
        assert!(Field::create(FieldSpec::PrimeField((1 << 31) - 1)).is_ok());
    }

    #[test]
    fn halves_add_to_one() {
        let q = Field::rationals();
        let half = q.fraction(1, 2).unwrap();
        assert_eq!(&half + &half, q.one());
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(q.from_i64(-3).to_string(), "-3");
    }

    #[test]
    fn spec_and_scalar_strings() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!(
            "fp:5".parse::<FieldSpec>().unwrap(),
            FieldSpec::PrimeField(5)
        );
        assert!("fp:x".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::PrimeField(7).to_string(), "fp:7");

        let q = Field::rationals();
        assert_eq!(q.parse("6/-4").unwrap().to_string(), "-3/2");
        assert_eq!(q.parse("1/0"), Err(Error::DivisionByZero));
        let f5 = Field::prime(5);
        assert_eq!(f5.parse("-1").unwrap(), f5.from_i64(4));
        assert_eq!(f5.parse("12").unwrap().to_string(), "2");
    }

    #[test]
    #[should_panic]
    fn mixing_fields_panics() {
        let _ = &Field::prime(3).one() + &Field::prime(5).one();
    }

    #[test]
    fn rational_arithmetic_grows_without_overflow() {
        let q = Field::rationals();
        let mut x = q.fraction(1, 3).unwrap();
        for _ in 0..200 {
            x = &x * &q.from_i64(1 << 40);
        }
        assert!(!x.is_zero());
        let mut y = x.clone();
        for _ in 0..200 {
            y = &y * &q.fraction(1, 1 << 40).unwrap();
        }
        assert_eq!(y, q.fraction(1, 3).unwrap());
    }

    fn fields() -> Vec<Field> {
        vec![
            Field::rationals(),
            Field::prime(3),
            Field::prime(5),
            Field::prime(2147483647),
        ]
    }

    proptest! {
        #[test]
        fn field_axioms(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for f in fields() {
                let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a - &a, f.zero());
                prop_assert_eq!(&a + &(-&a), f.zero());
                if !a.is_zero() {
                    prop_assert_eq!(&a * &a.inv().unwrap(), f.one());
                } else {
                    prop_assert_eq!(a.inv(), Err(Error::DivisionByZero));
                }
                prop_assert_eq!(f.parse(&a.to_string()).unwrap(), a);
            }
        }
    }
}
