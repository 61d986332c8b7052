//! Exact scalars: arbitrary-precision rationals, Gaussian rationals and a
//! word-sized prime field used as a fast cross-check.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Minimal field interface used by the sparse elimination routines.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.sub(&a.mul(b));
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        // integer fast path keeps denominators out of the common case
        if a.is_integer() && b.is_integer() && self.is_integer() {
            let v = self.numer() - a.numer() * b.numer();
            *self = BigRational::from_integer(v);
        } else {
            *self -= a * b;
        }
    }
}

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `n / d`. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Zero::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(rat(n))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Zero::zero(),
            im: One::one(),
        }
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    /// `self · i^k`
    pub fn mul_i_pow(&self, k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => self.clone(),
            1 => GaussianRational {
                re: -&self.im,
                im: self.re.clone(),
            },
            2 => GaussianRational {
                re: -&self.re,
                im: -&self.im,
            },
            _ => GaussianRational {
                re: self.im.clone(),
                im: -&self.re,
            },
        }
    }

    /// Integer power (negative exponents invert).
    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 {
            Field::inv(self)
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = <Self as Field>::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = Field::mul(&acc, &base);
            }
            base = Field::mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl Field for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default()
    }
    fn one() -> Self {
        GaussianRational::from_int(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn neg(&self) -> Self {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
    fn add(&self, o: &Self) -> Self {
        GaussianRational {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussianRational {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_real() && o.is_real() {
            return GaussianRational::real(&self.re * &o.re);
        }
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!Zero::is_zero(&n), "inverse of zero");
        GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: &GaussianRational) -> GaussianRational {
                $f(self, o)
            }
        }
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                $f(&self, &o)
            }
        }
    };
}

forward_binop!(Add, add, <GaussianRational as Field>::add);
forward_binop!(Sub, sub, <GaussianRational as Field>::sub);
forward_binop!(Mul, mul, <GaussianRational as Field>::mul);

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, o: &GaussianRational) -> GaussianRational {
        Field::mul(self, &Field::inv(o))
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        Field::neg(&self)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        Field::neg(self)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}

impl fmt::Display for GaussianRational {
    /// `p/q` for real values, `p/q+r/s i` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(f, "{}", self.re)
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{} i", self.re, sign, self.im.abs())
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse exact scalar from {0:?}")]
pub struct ParseScalarError(pub String);

impl FromStr for GaussianRational {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let t = s.trim();
        let parse_rat = |x: &str| x.trim().parse::<Rational>().map_err(|_| err());
        match t.strip_suffix('i') {
            None => Ok(GaussianRational::real(parse_rat(t)?)),
            Some(body) => {
                let body = body.trim_end();
                // split at the last sign that is not a leading sign
                let split = body
                    .char_indices()
                    .skip(1)
                    .filter(|&(_, c)| c == '+' || c == '-')
                    .map(|(i, _)| i)
                    .last()
                    .ok_or_else(err)?;
                let re = parse_rat(&body[..split])?;
                let im = parse_rat(&body[split..].replacen('+', "", 1))?;
                Ok(GaussianRational { re, im })
            }
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Residues modulo the Mersenne prime 2⁶¹ − 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Fp(pub u64);

impl Fp {
    pub const MODULUS: u64 = (1 << 61) - 1;

    pub fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(Self::MODULUS as i64) as u64)
    }

    /// Reduction of a rational; `None` if the denominator vanishes mod p.
    pub fn from_rational(r: &Rational) -> Option<Self> {
        let m = BigInt::from(Self::MODULUS);
        let reduce = |x: &BigInt| -> u64 {
            let v = ((x % &m) + &m) % &m;
            v.try_into().expect("residue fits in u64")
        };
        let d = Fp(reduce(r.denom()));
        if d.0 == 0 {
            return None;
        }
        Some(Fp(reduce(r.numer())).mul(&d.inv()))
    }

    fn reduce128(x: u128) -> u64 {
        let p = Self::MODULUS as u128;
        let v = (x & p) + (x >> 61);
        let v = (v & p) + (v >> 61);
        let v = v as u64;
        if v >= Self::MODULUS {
            v - Self::MODULUS
        } else {
            v
        }
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(Self::MODULUS - self.0)
        }
    }
    fn add(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= Self::MODULUS {
            s - Self::MODULUS
        } else {
            s
        })
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(Self::reduce128(self.0 as u128 * o.0 as u128))
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(Self::MODULUS - 2)
    }
}
