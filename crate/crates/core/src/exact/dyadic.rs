//! Exact scalars in Z[1/2].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A dyadic rational `numerator / 2^exponent`.
///
/// Always stored canonically: the numerator is odd, or the value is zero
/// and the exponent is zero. Derived equality and hashing are therefore
/// value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

/// Number of trailing zero bits of a nonzero integer.
pub(crate) fn two_adic_valuation(n: &BigInt) -> u32 {
    n.trailing_zeros().map(|z| z as u32).unwrap_or(0)
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, exp: u32) -> Self {
        let mut num = num.into();
        if num.is_zero() {
            return Self::zero();
        }
        let shift = two_adic_valuation(&num).min(exp);
        num >>= shift as usize;
        Dyadic {
            num,
            exp: exp - shift,
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            num: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic::from(1)
    }

    /// One half.
    pub fn half() -> Self {
        Dyadic::new(1, 1)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    /// Numerator rescaled to denominator `2^exp`; `None` if `exp` is too small.
    pub fn scaled_to(&self, exp: u32) -> Option<BigInt> {
        if exp < self.exp {
            None
        } else {
            Some(&self.num << (exp - self.exp) as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        // exact for the small values this crate handles
        self.num.to_f64().unwrap_or(f64::NAN) / 2f64.powi(self.exp as i32)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone(), BigInt::one() << self.exp as usize)
    }

    /// Exact conversion from a rational; fails unless the reduced denominator
    /// is a power of two.
    pub fn from_rational(r: &BigRational) -> Result<Self> {
        let d = r.denom();
        if d.is_positive() && (d & (d - BigInt::one())).is_zero() {
            let exp = two_adic_valuation(d);
            Ok(Dyadic::new(r.numer().clone(), exp))
        } else {
            Err(Error::Parse(format!("denominator {d} is not a power of two")))
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            num: self.num.abs(),
            exp: self.exp,
        }
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::new(n, 0)
    }
}

impl From<i32> for Dyadic {
    fn from(n: i32) -> Self {
        Dyadic::new(n, 0)
    }
}

impl From<BigInt> for Dyadic {
    fn from(n: BigInt) -> Self {
        Dyadic::new(n, 0)
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        let a = &self.num << (exp - self.exp) as usize;
        let b = &rhs.num << (exp - rhs.exp) as usize;
        Dyadic::new(a + b, exp)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl AddAssign<&Dyadic> for Dyadic {
    fn add_assign(&mut self, rhs: &Dyadic) {
        *self = &*self + rhs;
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -&self.num,
            exp: self.exp,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        &self - &rhs
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &rhs.num, self.exp + rhs.exp)
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        &self * &rhs
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp) as usize;
        let b = &other.num << (exp - other.exp) as usize;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, BigInt::one() << self.exp as usize)
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `n` or `n/d` where `d` is a positive power of two.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
        };
        match s.split_once('/') {
            None => Ok(Dyadic::from(parse_int(s)?)),
            Some((n, d)) => {
                let n = parse_int(n)?;
                let d = parse_int(d)?;
                if !d.is_positive() {
                    return Err(Error::Parse(format!("denominator must be positive in `{s}`")));
                }
                let (q, r) = d.div_rem(&(BigInt::one() << two_adic_valuation(&d) as usize));
                if !r.is_zero() || !q.is_one() {
                    return Err(Error::Parse(format!("denominator in `{s}` is not a power of two")));
                }
                Ok(Dyadic::new(n, two_adic_valuation(&d)))
            }
        }
    }
}
