//! The ring H[x1,...,xn] of polynomials in central variables with left
//! coefficients, and the coefficient-conjugating map between the two
//! polynomial rings.
//!
//! The map sends q^E a to conj(a) x^E and reverses products:
//! phi(P * Q) = phi(Q) . phi(P). On tuples with commuting components the
//! values correspond as conj(P(a)) = phi(P)(conj a); a central-variable
//! polynomial has no evaluation at all elsewhere.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::{classify_point, PointKind};
use crate::poly::{fmt_terms, grlex_desc, terms_to_json, RingCtx, StarPoly, TermJson};
use crate::quaternion::Quaternion;

/// A polynomial in central variables with left coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct CentralPoly {
    ctx: RingCtx,
    terms: BTreeMap<Vec<u32>, Quaternion>,
}

impl CentralPoly {
    pub fn zero(ctx: RingCtx) -> Self {
        CentralPoly {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: RingCtx, c: Quaternion) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0u32; ctx.nvars()], c);
        }
        CentralPoly { ctx, terms }
    }

    /// The monomial x_{var+1}.
    pub fn var(ctx: RingCtx, var: usize) -> Result<Self> {
        if var >= ctx.nvars() {
            return Err(Error::VarOutOfRange {
                var,
                nvars: ctx.nvars(),
            });
        }
        let mut exps = vec![0u32; ctx.nvars()];
        exps[var] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Quaternion::one());
        Ok(CentralPoly { ctx, terms })
    }

    pub fn from_terms(
        ctx: RingCtx,
        terms: impl IntoIterator<Item = (Vec<u32>, Quaternion)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Vec<u32>, Quaternion> = BTreeMap::new();
        for (exps, coef) in terms {
            if exps.len() != ctx.nvars() {
                return Err(Error::ArityMismatch {
                    expected: ctx.nvars(),
                    got: exps.len(),
                });
            }
            let entry = map.entry(exps).or_insert_with(Quaternion::zero);
            *entry = &*entry + &coef;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(CentralPoly { ctx, terms: map })
    }

    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Quaternion)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &CentralPoly) -> Result<CentralPoly> {
        if self.ctx != other.ctx {
            return Err(Error::RingMismatch {
                left: self.ctx.nvars(),
                right: other.ctx.nvars(),
            });
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Quaternion::zero);
            *entry = &*entry + c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(CentralPoly {
            ctx: self.ctx,
            terms,
        })
    }

    /// Pointwise product: (a x^E)(b x^F) = (ab) x^{E+F}, extended
    /// bilinearly. Associative; noncommutative only through the
    /// coefficients.
    pub fn mul(&self, other: &CentralPoly) -> Result<CentralPoly> {
        if self.ctx != other.ctx {
            return Err(Error::RingMismatch {
                left: self.ctx.nvars(),
                right: other.ctx.nvars(),
            });
        }
        let mut terms: BTreeMap<Vec<u32>, Quaternion> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea
                    .iter()
                    .zip(eb)
                    .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
                    .collect();
                let c = ca * cb;
                let entry = terms.entry(exps).or_insert_with(Quaternion::zero);
                *entry = &*entry + &c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(CentralPoly {
            ctx: self.ctx,
            terms,
        })
    }

    /// Evaluation, defined only on tuples with commuting components:
    /// sum of a p1^l1 ... pn^ln with the coefficient on the left (the
    /// order among the powers is immaterial there).
    pub fn eval(&self, point: &[Quaternion]) -> Result<Quaternion> {
        if point.len() != self.ctx.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.ctx.nvars(),
                got: point.len(),
            });
        }
        if classify_point(point) != PointKind::Commuting {
            return Err(Error::CommutingRequired);
        }
        let mut acc = Quaternion::zero();
        for (exps, coef) in &self.terms {
            let mut v = coef.clone();
            for (p, &e) in point.iter().zip(exps) {
                if e > 0 {
                    v = &v * &p.pow(e);
                }
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Quaternion)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| grlex_desc(a, b));
        v
    }
}

/// The coefficient-conjugating anti-isomorphism: q^E a -> conj(a) x^E.
pub fn phi(p: &StarPoly) -> CentralPoly {
    let terms = p.terms().map(|(e, c)| (e.clone(), c.conj())).collect();
    CentralPoly {
        ctx: p.ctx(),
        terms,
    }
}

/// Inverse of [`phi`]: conj(a) x^E -> q^E a.
pub fn phi_inv(c: &CentralPoly) -> StarPoly {
    c.ctx
        .from_terms(c.terms.iter().map(|(e, coef)| (e.clone(), coef.conj())))
        .expect("arity preserved")
}

/// Value correspondence at a commuting tuple:
/// conj(P(a_1,...,a_n)) = phi(P)(conj a_1, ..., conj a_n).
/// Returns whether the identity holds (it always must).
pub fn valori_check(p: &StarPoly, point: &[Quaternion]) -> Result<bool> {
    let lhs = p.eval(point)?.conj();
    let conj_point: Vec<Quaternion> = point.iter().map(Quaternion::conj).collect();
    let rhs = phi(p).eval(&conj_point)?;
    Ok(lhs == rhs)
}

impl fmt::Display for CentralPoly {
    /// Left-coefficient normal form, e.g. `x1*x2 + i*x1 + j*x2 - k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.sorted_terms(), 'x', true)
    }
}

impl fmt::Debug for CentralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CentralPoly[{}]({self})", self.ctx.nvars())
    }
}

// --- JSON form: StarPoly's with an extra "side": "left" marker ---------

#[derive(Serialize, Deserialize)]
struct CentralPolyJson {
    nvars: usize,
    side: String,
    terms: Vec<TermJson>,
}

impl Serialize for CentralPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CentralPolyJson {
            nvars: self.ctx.nvars(),
            side: "left".to_string(),
            terms: terms_to_json(&self.sorted_terms()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CentralPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = CentralPolyJson::deserialize(d)?;
        if dto.side != "left" {
            return Err(D::Error::custom("expected \"side\": \"left\""));
        }
        let ctx = RingCtx::new(dto.nvars);
        let mut terms = Vec::with_capacity(dto.terms.len());
        for t in dto.terms {
            let coef = t.coef.to_quaternion().map_err(D::Error::custom)?;
            terms.push((t.exp, coef));
        }
        CentralPoly::from_terms(ctx, terms).map_err(D::Error::custom)
    }
}
