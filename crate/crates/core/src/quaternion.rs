//! Exact quaternions over arbitrary-precision rationals.
//!
//! A value `w + x i + y j + z k` is stored as four `BigRational`
//! components. `BigRational` keeps itself in lowest terms with a positive
//! denominator, so structural equality is arithmetic equality and every
//! predicate built on top (vanishing, commuting, sphere membership) is
//! decided exactly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Parse `p` or `p/q` (optionally signed) into a rational in lowest terms.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num = BigInt::from_str(num_str).map_err(|_| format!("invalid integer `{num_str}`"))?;
    let den = match den_str {
        Some(d) => BigInt::from_str(d).map_err(|_| format!("invalid integer `{d}`"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(num, den))
}

/// A quaternion with exact rational components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Builds `w + x i + y j + z k` from integer components.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        let r = |n: i64| Rational::from_integer(BigInt::from(n));
        Quaternion::new(r(w), r(x), r(y), r(z))
    }

    pub fn from_rational(r: Rational) -> Self {
        Quaternion::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Quaternion::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.w.is_one() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// Re(q), the coefficient of 1.
    pub fn re(&self) -> Rational {
        self.w.clone()
    }

    /// The imaginary part as a quaternion: q - Re(q).
    pub fn im(&self) -> Quaternion {
        Quaternion::new(
            Rational::zero(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
        )
    }

    /// |q|^2 = w^2 + x^2 + y^2 + z^2.
    pub fn norm_sq(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    /// |Im(q)|^2 = x^2 + y^2 + z^2.
    pub fn im_norm_sq(&self) -> Rational {
        &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    /// The conjugate Re(q) - Im(q).
    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// Multiplicative inverse conj(q)/|q|^2.
    pub fn inv(&self) -> Result<Quaternion> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq();
        let c = self.conj();
        Ok(Quaternion::new(c.w / &n, c.x / &n, c.y / &n, c.z / &n))
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, e: u32) -> Quaternion {
        let mut acc = Quaternion::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// ab = ba, equivalently Im(a) x Im(b) = 0 (parallel imaginary parts).
    pub fn commutes(&self, other: &Quaternion) -> bool {
        let cx = &self.y * &other.z - &self.z * &other.y;
        let cy = &self.z * &other.x - &self.x * &other.z;
        let cz = &self.x * &other.y - &self.y * &other.x;
        cx.is_zero() && cy.is_zero() && cz.is_zero()
    }

    /// Conjugation c q c^-1 by a nonzero c; preserves Re and |.|^2.
    pub fn conjugate_by(&self, c: &Quaternion) -> Result<Quaternion> {
        let ci = c.inv()?;
        Ok(&(c * self) * &ci)
    }
}

/// Membership in the commutant C_a = { q : aq = qa }.
///
/// For real `a` this is all of H; otherwise it is the slice through a.
pub fn in_commutant(q: &Quaternion, a: &Quaternion) -> bool {
    q.commutes(a)
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &rhs.w,
            &self.x + &rhs.x,
            &self.y + &rhs.y,
            &self.z + &rhs.z,
        )
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &rhs.w,
            &self.x - &rhs.x,
            &self.y - &rhs.y,
            &self.z - &rhs.z,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    /// Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a, b, c, d) = (&self.w, &self.x, &self.y, &self.z);
        let (e, f, g, h) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        Quaternion::new(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

fn fmt_component(f: &mut fmt::Formatter<'_>, r: &Rational, unit: &str, first: bool) -> fmt::Result {
    let neg = r.is_negative();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let a = r.abs();
    if unit.is_empty() {
        write!(f, "{a}")
    } else if a.is_one() {
        write!(f, "{unit}")
    } else {
        write!(f, "{a}{unit}")
    }
}

impl fmt::Display for Quaternion {
    /// Canonical literal form: components in 1, i, j, k order, zero
    /// components omitted, `0` for zero. Example: `3/2 + 1/3i - 2j + k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (r, unit) in [
            (&self.w, ""),
            (&self.x, "i"),
            (&self.y, "j"),
            (&self.z, "k"),
        ] {
            if r.is_zero() {
                continue;
            }
            fmt_component(f, r, unit, first)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quaternion({self})")
    }
}

/// Error from parsing a quaternion literal; `offset` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseQuaternionError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseQuaternionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseQuaternionError {}

impl FromStr for Quaternion {
    type Err = ParseQuaternionError;

    /// Parses the literal syntax `[±]r [± r i] [± r j] [± r k]` where `r`
    /// is an integer or `p/q` rational and a bare unit means coefficient 1,
    /// e.g. `3/2 + 1/3i - 2j + k`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let err = |offset: usize, message: &str| ParseQuaternionError {
            offset: offset + 1,
            message: message.to_string(),
        };
        let mut pos = 0usize;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let mut acc = Quaternion::zero();
        let mut any = false;
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                break;
            }
            // sign (required between terms, optional before the first)
            let mut sign = 1i32;
            match bytes[pos] {
                b'+' => pos += 1,
                b'-' => {
                    sign = -1;
                    pos += 1;
                }
                _ if any => return Err(err(pos, "expected `+` or `-`")),
                _ => {}
            }
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                return Err(err(pos, "expected a term after sign"));
            }
            // coefficient (defaults to 1 for a bare unit)
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mut coef = if pos > start {
                let num_end = pos;
                if pos < bytes.len() && bytes[pos] == b'/' {
                    pos += 1;
                    let den_start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if pos == den_start {
                        return Err(err(pos, "expected denominator digits"));
                    }
                    parse_rational(&s[start..pos]).map_err(|m| err(start, &m))?
                } else {
                    parse_rational(&s[start..num_end]).map_err(|m| err(start, &m))?
                }
            } else {
                Rational::one()
            };
            let had_digits = pos > start;
            // optional unit
            let unit = if pos < bytes.len() && matches!(bytes[pos], b'i' | b'j' | b'k') {
                let u = bytes[pos];
                pos += 1;
                if pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                    return Err(err(pos, "unexpected character after unit"));
                }
                Some(u)
            } else {
                None
            };
            if !had_digits && unit.is_none() {
                return Err(err(pos, "expected a number or unit"));
            }
            if sign < 0 {
                coef = -coef;
            }
            match unit {
                None => acc.w += coef,
                Some(b'i') => acc.x += coef,
                Some(b'j') => acc.y += coef,
                Some(b'k') => acc.z += coef,
                _ => unreachable!(),
            }
            any = true;
        }
        if !any {
            return Err(err(0, "empty quaternion literal"));
        }
        Ok(acc)
    }
}
