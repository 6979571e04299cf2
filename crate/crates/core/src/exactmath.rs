//! Exact integer and rational arithmetic.
//!
//! Values are stored as `i64`. Intermediate products are formed in `i128`
//! and narrowed back with a checked conversion, so every overflow surfaces as
//! [`Error::Overflow`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

pub(crate) fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Greatest common divisor of `|a|` and `|b|`; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    // gcd(i64::MIN, 0) = 2^63 is the only value that does not fit.
    narrow(gcd_i128(a as i128, b as i128)).unwrap_or(i64::MIN)
}

/// Least common multiple of `|a|` and `|b|`; zero if either is zero.
pub fn lcm(a: i64, b: i64) -> Result<i64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    let (a, b) = (a as i128, b as i128);
    narrow((a / gcd_i128(a, b) * b).abs())
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(|a|, |b|)`.
///
/// Among all Bezout pairs the one with the smallest `|x|` is returned, ties
/// going to the non-negative `x`. When `b = 0` the coefficient `y` is free and
/// is set to zero.
pub fn ext_gcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    let (a, b) = (a as i128, b as i128);
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    // r0 is now ±gcd with a*s0 ≡ r0 (mod b).
    let (g, x0) = if r0 < 0 { (-r0, -s0) } else { (r0, s0) };
    if g == 0 {
        return Ok((0, 0, 0));
    }
    if b == 0 {
        return Ok((narrow(g)?, a.signum() as i64, 0));
    }
    let step = b.abs() / g;
    let r = x0.rem_euclid(step);
    let x = if 2 * r > step { r - step } else { r };
    let y = (g - a * x) / b;
    debug_assert_eq!(a * x + b * y, g);
    Ok((narrow(g)?, narrow(x)?, narrow(y)?))
}

/// The inverse of `a` modulo `m`, in `[0, m)`. For `m = 1` this is `0`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    if m < 1 {
        return Err(Error::InvalidModulus(m));
    }
    if m == 1 {
        return Ok(0);
    }
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m)?;
    if g != 1 {
        return Err(Error::NotInvertible { a, m });
    }
    Ok(x.rem_euclid(m))
}

/// The residue class `{ d : d ≡ residue (mod modulus) }`.
///
/// The residue is kept in `[0, modulus)`; modulus 1 is the class of all
/// integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    residue: i64,
    modulus: i64,
}

impl Congruence {
    pub const ALL: Congruence = Congruence {
        residue: 0,
        modulus: 1,
    };

    pub fn new(residue: i64, modulus: i64) -> Result<Self> {
        if modulus < 1 {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(Congruence {
            residue: residue.rem_euclid(modulus),
            modulus,
        })
    }

    pub fn residue(&self) -> i64 {
        self.residue
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn contains(&self, d: i64) -> bool {
        d.rem_euclid(self.modulus) == self.residue
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

/// Intersects two residue classes whose moduli need not be coprime.
///
/// `Ok(None)` means the intersection is empty. The result, when present, has
/// modulus `lcm(m1, m2)`.
pub fn crt_merge(c1: Congruence, c2: Congruence) -> Result<Option<Congruence>> {
    let (r1, m1) = (c1.residue as i128, c1.modulus as i128);
    let (r2, m2) = (c2.residue as i128, c2.modulus as i128);
    let g = gcd_i128(m1, m2);
    if (r2 - r1).rem_euclid(g) != 0 {
        return Ok(None);
    }
    let m2g = m2 / g;
    let modulus = m1 * m2g;
    if m2g == 1 {
        return Ok(Some(Congruence::new(narrow(r1)?, narrow(modulus)?)?));
    }
    // m1 * k ≡ r2 - r1 (mod m2), divided through by g.
    let inv = mod_inverse(narrow((m1 / g).rem_euclid(m2g))?, narrow(m2g)?)? as i128;
    let k = ((r2 - r1) / g).rem_euclid(m2g) * inv % m2g;
    let residue = (r1 + m1 * k).rem_euclid(modulus);
    Ok(Some(Congruence::new(narrow(residue)?, narrow(modulus)?)?))
}

/// An exact rational number in lowest terms with a positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    fn from_i128(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = gcd_i128(num, den);
        let (mut num, mut den) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Rational {
            num: narrow(num)?,
            den: narrow(den)?,
        })
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.num)
    }

    pub fn signum(&self) -> i64 {
        self.num.signum()
    }

    pub fn checked_add(self, rhs: Rational) -> Result<Rational> {
        let (a, b) = (self.num as i128, self.den as i128);
        let (c, d) = (rhs.num as i128, rhs.den as i128);
        let g = gcd_i128(b, d);
        let l = b / g * d;
        let n = a
            .checked_mul(l / b)
            .and_then(|x| c.checked_mul(l / d).and_then(|y| x.checked_add(y)))
            .ok_or(Error::Overflow)?;
        Self::from_i128(n, l)
    }

    pub fn checked_sub(self, rhs: Rational) -> Result<Rational> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_mul(self, rhs: Rational) -> Result<Rational> {
        Self::from_i128(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }

    pub fn checked_div(self, rhs: Rational) -> Result<Rational> {
        Self::from_i128(
            self.num as i128 * rhs.den as i128,
            self.den as i128 * rhs.num as i128,
        )
    }

    pub fn checked_neg(self) -> Result<Rational> {
        Ok(Rational {
            num: self.num.checked_neg().ok_or(Error::Overflow)?,
            den: self.den,
        })
    }

    pub fn checked_mul_int(self, k: i64) -> Result<Rational> {
        self.checked_mul(Rational::from_integer(k))
    }

    /// `num/den`, also for integers. This is the wire format.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.num, self.den)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
