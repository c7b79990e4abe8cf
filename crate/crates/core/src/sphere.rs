//! Conjugation orbits of quaternions, encoded exactly.
//!
//! The orbit { c a c^-1 : c != 0 } of a non-real `a` is a 2-sphere with
//! fixed real part and imaginary norm. Its imaginary unit direction is
//! generally irrational, so the sphere is stored by the two rationals
//! `trace = 2 Re(a)` and `normsq = |a|^2`; every membership predicate is
//! restated polynomially in those. A point q lies on the sphere iff
//! q^2 - trace q + normsq = 0.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sphere {
    trace: Rational,
    normsq: Rational,
}

/// Exact square root of a non-negative rational, if it has one.
fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sqrt_exact = |n: &BigInt| -> Option<BigInt> {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    let num = sqrt_exact(r.numer())?;
    let den = sqrt_exact(r.denom())?;
    Some(Rational::new(num, den))
}

impl Sphere {
    /// Requires trace^2 <= 4 normsq; equality is the degenerate sphere
    /// consisting of the single real point trace/2.
    pub fn new(trace: Rational, normsq: Rational) -> Result<Self> {
        if &trace * &trace > Rational::from_integer(4.into()) * &normsq {
            return Err(Error::InvalidSphere);
        }
        Ok(Sphere { trace, normsq })
    }

    /// The sphere through `a`: all conjugates c a c^-1.
    pub fn of(a: &Quaternion) -> Self {
        Sphere {
            trace: a.re() * Rational::from_integer(2.into()),
            normsq: a.norm_sq(),
        }
    }

    pub fn trace(&self) -> &Rational {
        &self.trace
    }

    pub fn normsq(&self) -> &Rational {
        &self.normsq
    }

    /// |Im|^2 of every point on the sphere: normsq - trace^2/4.
    pub fn im_norm_sq(&self) -> Rational {
        &self.normsq - &self.trace * &self.trace / Rational::from_integer(4.into())
    }

    pub fn is_degenerate(&self) -> bool {
        self.im_norm_sq().is_zero()
    }

    /// q is on the sphere iff 2 Re(q) = trace and |Im(q)|^2 = normsq - trace^2/4.
    pub fn contains(&self, q: &Quaternion) -> bool {
        q.re() * Rational::from_integer(2.into()) == self.trace
            && q.im_norm_sq() == self.im_norm_sq()
    }

    /// The canonical representative trace/2 + r i when r = sqrt(|Im|^2)
    /// is rational; `None` when the sphere has no rational point.
    pub fn rational_representative(&self) -> Option<Quaternion> {
        let half_trace = &self.trace / Rational::from_integer(2.into());
        let r = rational_sqrt(&self.im_norm_sq())?;
        Some(Quaternion::new(
            half_trace,
            r,
            Rational::zero(),
            Rational::zero(),
        ))
    }

    /// Samples the sphere by conjugating the canonical representative:
    /// returns c a0 c^-1, an exact rational point of the sphere.
    pub fn sample(&self, c: &Quaternion) -> Result<Quaternion> {
        let rep = self
            .rational_representative()
            .ok_or(Error::NoRationalRepresentative)?;
        self.sample_with(&rep, c)
    }

    /// Samples by conjugating a caller-supplied representative, for
    /// spheres with no canonical rational point.
    pub fn sample_with(&self, rep: &Quaternion, c: &Quaternion) -> Result<Quaternion> {
        if !self.contains(rep) {
            return Err(Error::PreconditionViolated(
                "supplied representative is not on the sphere",
            ));
        }
        rep.conjugate_by(c)
    }
}
