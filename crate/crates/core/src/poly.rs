//! The ring (H[q1,...,qn], +, *) of slice regular polynomials.
//!
//! A polynomial is a sum of monomials q1^l1 ... qn^ln a with the
//! coefficient on the right. Variables commute with each other but not
//! with the coefficients; the *-product adds exponent vectors and
//! multiplies coefficients in factor order:
//!
//!   (q^E a) * (q^F b) = q^{E+F} ab
//!
//! extended bilinearly. The representation is sparse: a map from exponent
//! vectors to nonzero coefficients, so structural equality is semantic
//! equality.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quaternion::{parse_rational, Quaternion};

/// Ring context: the number of variables.
///
/// `nvars = 0` is the ring of constants; it arises as the coefficient
/// ring when the only variable of a one-variable polynomial is collected
/// out, and is not accepted by the text grammar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingCtx {
    nvars: usize,
}

impl RingCtx {
    pub fn new(nvars: usize) -> Self {
        RingCtx { nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn zero(&self) -> StarPoly {
        StarPoly {
            ctx: *self,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> StarPoly {
        self.constant(Quaternion::one())
    }

    pub fn constant(&self, c: Quaternion) -> StarPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0u32; self.nvars], c);
        }
        StarPoly { ctx: *self, terms }
    }

    /// The monomial q_{var+1} (0-based index).
    pub fn var(&self, var: usize) -> Result<StarPoly> {
        if var >= self.nvars {
            return Err(Error::VarOutOfRange {
                var,
                nvars: self.nvars,
            });
        }
        let mut exps = vec![0u32; self.nvars];
        exps[var] = 1;
        self.monomial(exps, Quaternion::one())
    }

    pub fn monomial(&self, exps: Vec<u32>, coef: Quaternion) -> Result<StarPoly> {
        self.from_terms([(exps, coef)])
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, summing
    /// duplicates and dropping zero coefficients.
    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (Vec<u32>, Quaternion)>,
    ) -> Result<StarPoly> {
        let mut map: BTreeMap<Vec<u32>, Quaternion> = BTreeMap::new();
        for (exps, coef) in terms {
            if exps.len() != self.nvars {
                return Err(Error::ArityMismatch {
                    expected: self.nvars,
                    got: exps.len(),
                });
            }
            let entry = map.entry(exps).or_insert_with(Quaternion::zero);
            *entry = &*entry + &coef;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(StarPoly {
            ctx: *self,
            terms: map,
        })
    }
}

/// A slice regular polynomial with right coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct StarPoly {
    ctx: RingCtx,
    terms: BTreeMap<Vec<u32>, Quaternion>,
}

/// Graded lexicographic order, highest first; used for printing and the
/// canonical JSON term order.
pub(crate) fn grlex_desc(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let ta: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let tb: u64 = b.iter().map(|&e| u64::from(e)).sum();
    tb.cmp(&ta).then_with(|| b.cmp(a))
}

impl StarPoly {
    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&vec![0u32; self.ctx.nvars])
                .is_some_and(Quaternion::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates (exponent vector, coefficient) pairs in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Quaternion)> {
        self.terms.iter()
    }

    /// Terms sorted graded-lexicographically, highest first.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Quaternion)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| grlex_desc(a, b));
        v
    }

    pub fn coefficient(&self, exps: &[u32]) -> Quaternion {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(Quaternion::zero)
    }

    /// The constant coefficient of a zero-variable polynomial.
    pub fn constant_value(&self) -> Quaternion {
        debug_assert_eq!(self.nvars(), 0);
        self.coefficient(&[])
    }

    /// Max exponent of `var` over the terms; `None` for the zero
    /// polynomial, whose degree is undefined.
    pub fn degree_in_var(&self, var: usize) -> Option<u32> {
        assert!(var < self.ctx.nvars, "variable index out of range");
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn require_same_ctx(&self, other: &StarPoly) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::RingMismatch {
                left: self.ctx.nvars,
                right: other.ctx.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &StarPoly) -> Result<StarPoly> {
        self.require_same_ctx(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Quaternion::zero);
            *entry = &*entry + c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(StarPoly {
            ctx: self.ctx,
            terms,
        })
    }

    pub fn neg(&self) -> StarPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        StarPoly {
            ctx: self.ctx,
            terms,
        }
    }

    pub fn sub(&self, other: &StarPoly) -> Result<StarPoly> {
        self.add(&other.neg())
    }

    /// The *-product: exponent vectors add, coefficients multiply with the
    /// left factor's coefficient on the left.
    pub fn star_mul(&self, other: &StarPoly) -> Result<StarPoly> {
        self.require_same_ctx(other)?;
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
        Ok(StarPoly {
            ctx: self.ctx,
            terms,
        })
    }

    /// P^e by repeated *-multiplication; P^0 = 1.
    pub fn star_pow(&self, e: u32) -> StarPoly {
        let mut acc = self.ctx.one();
        for _ in 0..e {
            acc = acc.star_mul(self).expect("same ring");
        }
        acc
    }

    /// Multiplies every coefficient on the right by `c`; equals
    /// `self * constant(c)`.
    pub fn scalar_right_mul(&self, c: &Quaternion) -> StarPoly {
        if c.is_zero() {
            return self.ctx.zero();
        }
        let terms = self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect();
        StarPoly {
            ctx: self.ctx,
            terms,
        }
    }

    /// Multiplies by the central monomial q^E (shifts every exponent
    /// vector by E).
    pub fn mul_monomial(&self, shift: &[u32]) -> Result<StarPoly> {
        if shift.len() != self.ctx.nvars {
            return Err(Error::ArityMismatch {
                expected: self.ctx.nvars,
                got: shift.len(),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let exps: Vec<u32> = e
                    .iter()
                    .zip(shift)
                    .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
                    .collect();
                (exps, c.clone())
            })
            .collect();
        Ok(StarPoly {
            ctx: self.ctx,
            terms,
        })
    }

    /// The regular conjugate: every coefficient replaced by its quaternion
    /// conjugate. An involution with (P*Q)^c = Q^c * P^c.
    pub fn regular_conjugate(&self) -> StarPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.conj()))
            .collect();
        StarPoly {
            ctx: self.ctx,
            terms,
        }
    }

    /// The symmetrization P * P^c = P^c * P, a polynomial with real
    /// coefficients.
    pub fn symmetrization(&self) -> StarPoly {
        let conj = self.regular_conjugate();
        let left = self.star_mul(&conj).expect("same ring");
        let right = conj.star_mul(self).expect("same ring");
        assert!(
            left == right && left.is_slice_preserving(),
            "symmetrization invariant violated"
        );
        left
    }

    /// True iff every coefficient is real (the polynomial is slice
    /// preserving, hence central for the *-product).
    pub fn is_slice_preserving(&self) -> bool {
        self.terms.values().all(Quaternion::is_real)
    }

    /// Evaluation at a point: sum of p1^l1 ... pn^ln a over the terms,
    /// products taken in exactly that order with the coefficient last.
    ///
    /// Evaluation is additive and right-scalar-linear but NOT
    /// multiplicative for the *-product.
    pub fn eval(&self, point: &[Quaternion]) -> Result<Quaternion> {
        if point.len() != self.ctx.nvars {
            return Err(Error::ArityMismatch {
                expected: self.ctx.nvars,
                got: point.len(),
            });
        }
        let mut acc = Quaternion::zero();
        for (exps, coef) in &self.terms {
            let mut v = Quaternion::one();
            for (p, &e) in point.iter().zip(exps) {
                if e > 0 {
                    v = &v * &p.pow(e);
                }
            }
            acc = &acc + &(&v * coef);
        }
        Ok(acc)
    }

    /// Collects by the powers of one variable: P = sum_k q_var^k * P_k
    /// with each P_k in the ring with `var` removed. Pairs are returned
    /// in ascending k with zero P_k omitted.
    pub fn collect_by_var(&self, var: usize) -> Result<Vec<(u32, StarPoly)>> {
        if var >= self.ctx.nvars {
            return Err(Error::VarOutOfRange {
                var,
                nvars: self.ctx.nvars,
            });
        }
        let small = RingCtx::new(self.ctx.nvars - 1);
        let mut groups: BTreeMap<u32, BTreeMap<Vec<u32>, Quaternion>> = BTreeMap::new();
        for (exps, coef) in &self.terms {
            let k = exps[var];
            let mut rest = exps.clone();
            rest.remove(var);
            groups.entry(k).or_default().insert(rest, coef.clone());
        }
        Ok(groups
            .into_iter()
            .map(|(k, terms)| (k, StarPoly { ctx: small, terms }))
            .collect())
    }

    /// Embeds into the ring with one more variable inserted at `position`
    /// (exponent 0 everywhere); inverse of the removal in
    /// [`collect_by_var`].
    pub fn insert_var(&self, position: usize) -> StarPoly {
        assert!(position <= self.ctx.nvars, "insert position out of range");
        let big = RingCtx::new(self.ctx.nvars + 1);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut exps = e.clone();
                exps.insert(position, 0);
                (exps, c.clone())
            })
            .collect();
        StarPoly { ctx: big, terms }
    }

    /// Embeds into a ring with trailing variables appended.
    pub fn extend_vars(&self, nvars: usize) -> StarPoly {
        assert!(nvars >= self.ctx.nvars, "cannot shrink the ring");
        let big = RingCtx::new(nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut exps = e.clone();
                exps.resize(nvars, 0);
                (exps, c.clone())
            })
            .collect();
        StarPoly { ctx: big, terms }
    }
}

fn mono_string(exps: &[u32], var_name: char) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        if e == 1 {
            parts.push(format!("{var_name}{}", i + 1));
        } else if e > 1 {
            parts.push(format!("{var_name}{}^{e}", i + 1));
        }
    }
    parts.join("*")
}

enum CoefAtom {
    One,
    MinusOne,
    /// A single nonzero component: sign split out, `text` like `2j`, `1/3`, `k`.
    Single {
        neg: bool,
        text: String,
    },
    Multi(String),
}

fn coef_atom(c: &Quaternion) -> CoefAtom {
    use num_traits::{One, Signed};
    let comps: Vec<(&crate::quaternion::Rational, &str)> =
        [(&c.w, ""), (&c.x, "i"), (&c.y, "j"), (&c.z, "k")]
            .into_iter()
            .filter(|(r, _)| !r.is_zero())
            .collect();
    if comps.len() != 1 {
        return CoefAtom::Multi(c.to_string());
    }
    let (r, unit) = comps[0];
    if unit.is_empty() && r.is_one() {
        return CoefAtom::One;
    }
    if unit.is_empty() && (-r).is_one() {
        return CoefAtom::MinusOne;
    }
    let a = r.abs();
    let text = if !unit.is_empty() && a.is_one() {
        unit.to_string()
    } else {
        format!("{a}{unit}")
    };
    CoefAtom::Single {
        neg: r.is_negative(),
        text,
    }
}

use num_traits::Zero as _;

pub(crate) fn fmt_terms(
    f: &mut fmt::Formatter<'_>,
    sorted: &[(&Vec<u32>, &Quaternion)],
    var_name: char,
    coef_left: bool,
) -> fmt::Result {
    if sorted.is_empty() {
        return write!(f, "0");
    }
    let only_term = sorted.len() == 1;
    for (idx, (exps, coef)) in sorted.iter().enumerate() {
        let mono = mono_string(exps, var_name);
        let (neg, body) = match (mono.is_empty(), coef_atom(coef)) {
            (true, CoefAtom::One) => (false, "1".to_string()),
            (true, CoefAtom::MinusOne) => (true, "1".to_string()),
            (true, CoefAtom::Single { neg, text }) => (neg, text),
            (true, CoefAtom::Multi(s)) => {
                if only_term {
                    (false, s)
                } else {
                    (false, format!("({s})"))
                }
            }
            (false, CoefAtom::One) => (false, mono),
            (false, CoefAtom::MinusOne) => (true, mono),
            (false, CoefAtom::Single { neg, text }) => {
                if coef_left {
                    (neg, format!("{text}*{mono}"))
                } else {
                    (neg, format!("{mono}*{text}"))
                }
            }
            (false, CoefAtom::Multi(s)) => {
                if coef_left {
                    (false, format!("({s})*{mono}"))
                } else {
                    (false, format!("{mono}*({s})"))
                }
            }
        };
        if idx == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        write!(f, "{body}")?;
    }
    Ok(())
}

impl fmt::Display for StarPoly {
    /// Canonical text form, e.g. `q1^2*q2*(1/2 + i) + q2*k - 1`: terms in
    /// graded lexicographic order (highest first), right coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.sorted_terms(), 'q', false)
    }
}

impl fmt::Debug for StarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StarPoly[{}]({self})", self.ctx.nvars)
    }
}

// --- JSON form ---------------------------------------------------------
//
// {"nvars": n, "terms": [{"exp": [l1,...,ln], "coef": {"w": "p/q", ...}}]}
// with rationals as strings and terms in the canonical printing order.

#[derive(Serialize, Deserialize)]
pub(crate) struct QuatJson {
    pub w: String,
    pub x: String,
    pub y: String,
    pub z: String,
}

impl From<&Quaternion> for QuatJson {
    fn from(q: &Quaternion) -> Self {
        QuatJson {
            w: q.w.to_string(),
            x: q.x.to_string(),
            y: q.y.to_string(),
            z: q.z.to_string(),
        }
    }
}

impl QuatJson {
    pub fn to_quaternion(&self) -> std::result::Result<Quaternion, String> {
        Ok(Quaternion::new(
            parse_rational(&self.w)?,
            parse_rational(&self.x)?,
            parse_rational(&self.y)?,
            parse_rational(&self.z)?,
        ))
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermJson {
    pub exp: Vec<u32>,
    pub coef: QuatJson,
}

#[derive(Serialize, Deserialize)]
struct StarPolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

pub(crate) fn terms_to_json(sorted: &[(&Vec<u32>, &Quaternion)]) -> Vec<TermJson> {
    sorted
        .iter()
        .map(|(exps, coef)| TermJson {
            exp: (*exps).clone(),
            coef: QuatJson::from(*coef),
        })
        .collect()
}

impl Serialize for Quaternion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuatJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quaternion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = QuatJson::deserialize(d)?;
        dto.to_quaternion().map_err(D::Error::custom)
    }
}

impl Serialize for StarPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        StarPolyJson {
            nvars: self.ctx.nvars,
            terms: terms_to_json(&self.sorted_terms()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StarPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = StarPolyJson::deserialize(d)?;
        let ctx = RingCtx::new(dto.nvars);
        let mut terms = Vec::with_capacity(dto.terms.len());
        for t in dto.terms {
            let coef = t.coef.to_quaternion().map_err(D::Error::custom)?;
            terms.push((t.exp, coef));
        }
        ctx.from_terms(terms).map_err(D::Error::custom)
    }
}

impl StarPoly {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> std::result::Result<StarPoly, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::Quaternion;

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    fn ctx2() -> RingCtx {
        RingCtx::new(2)
    }

    /// q1 - a in two variables.
    fn lin(ctx: RingCtx, var: usize, a: &Quaternion) -> StarPoly {
        ctx.var(var).unwrap().sub(&ctx.constant(a.clone())).unwrap()
    }

    #[test]
    fn add_and_cancel() {
        let ctx = ctx2();
        let q1 = ctx.var(0).unwrap();
        assert!(q1.add(&q1.neg()).unwrap().is_zero());
        let m = |c: &str| ctx.monomial(vec![1, 1], q(c)).unwrap();
        assert_eq!(m("i").add(&m("j")).unwrap(), m("i + j"));
        let p = ctx
            .from_terms([
                (vec![2, 0], Quaternion::one()),
                (vec![0, 0], Quaternion::one()),
            ])
            .unwrap();
        let s = p.add(&ctx.var(1).unwrap()).unwrap();
        assert_eq!(s.to_string(), "q1^2 + q2 + 1");
    }

    #[test]
    fn ring_mismatch_reported() {
        let a = RingCtx::new(1).one();
        let b = RingCtx::new(2).one();
        assert_eq!(a.add(&b), Err(Error::RingMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn star_product_examples() {
        let ctx = ctx2();
        // (q1 - i) * (q2 - j) = q1q2 - q1 j - q2 i + k
        let p = lin(ctx, 0, &Quaternion::i())
            .star_mul(&lin(ctx, 1, &Quaternion::j()))
            .unwrap();
        let expected = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![1, 0], -Quaternion::j()),
                (vec![0, 1], -Quaternion::i()),
                (vec![0, 0], Quaternion::k()),
            ])
            .unwrap();
        assert_eq!(p, expected);
        // (q2 - i) * (q1 - j) = q1q2 - q1 i - q2 j + k
        let r = lin(ctx, 1, &Quaternion::i())
            .star_mul(&lin(ctx, 0, &Quaternion::j()))
            .unwrap();
        let expected_r = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![1, 0], -Quaternion::i()),
                (vec![0, 1], -Quaternion::j()),
                (vec![0, 0], Quaternion::k()),
            ])
            .unwrap();
        assert_eq!(r, expected_r);
        // identity
        assert_eq!(p.star_mul(&ctx.one()).unwrap(), p);
    }

    #[test]
    fn scalar_right_mul_examples() {
        let ctx = ctx2();
        let q1i = ctx.monomial(vec![1, 0], Quaternion::i()).unwrap();
        assert_eq!(
            q1i.scalar_right_mul(&Quaternion::j()),
            ctx.monomial(vec![1, 0], Quaternion::k()).unwrap()
        );
        let p = ctx.var(0).unwrap().add(&ctx.var(1).unwrap()).unwrap();
        assert!(p.scalar_right_mul(&Quaternion::zero()).is_zero());
        assert_eq!(
            p.scalar_right_mul(&Quaternion::i()),
            ctx.from_terms([(vec![1, 0], Quaternion::i()), (vec![0, 1], Quaternion::i())])
                .unwrap()
        );
        assert_eq!(
            p.scalar_right_mul(&Quaternion::i()),
            p.star_mul(&ctx.constant(Quaternion::i())).unwrap()
        );
    }

    #[test]
    fn conjugate_and_symmetrization() {
        let ctx = ctx2();
        // P = q1 q2 - k
        let p = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![0, 0], -Quaternion::k()),
            ])
            .unwrap();
        let pc = p.regular_conjugate();
        assert_eq!(
            pc,
            ctx.from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![0, 0], Quaternion::k())
            ])
            .unwrap()
        );
        assert_eq!(pc.regular_conjugate(), p);
        // P^s = q1^2 q2^2 + 1
        let ps = p.symmetrization();
        assert_eq!(ps.to_string(), "q1^2*q2^2 + 1");
        assert!(ps.is_slice_preserving());
        // constant c -> |c|^2
        let c = q("1 - 2i + k");
        assert_eq!(
            ctx.constant(c.clone()).symmetrization(),
            ctx.constant(Quaternion::from_rational(c.norm_sq()))
        );
        // (q1 - i)^s = q1^2 + 1
        let ctx1 = RingCtx::new(1);
        let s = lin(ctx1, 0, &Quaternion::i()).symmetrization();
        assert_eq!(s.to_string(), "q1^2 + 1");
    }

    #[test]
    fn eval_examples() {
        let ctx = ctx2();
        let ij = [Quaternion::i(), Quaternion::j()];
        // P = q1 q2 - k vanishes at (i, j) but P^s does not
        let p = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![0, 0], -Quaternion::k()),
            ])
            .unwrap();
        assert!(p.eval(&ij).unwrap().is_zero());
        assert_eq!(p.symmetrization().eval(&ij).unwrap(), q("2"));
        // (q1 - i)*(q2 - j) vanishes at (i, 1+i) and equals 2k at (i, j)
        let prod = lin(ctx, 0, &Quaternion::i())
            .star_mul(&lin(ctx, 1, &Quaternion::j()))
            .unwrap();
        assert!(prod.eval(&[Quaternion::i(), q("1 + i")]).unwrap().is_zero());
        assert_eq!(prod.eval(&ij).unwrap(), q("2k"));
        // q1^2 + q2^2 + 2 vanishes at (i, j)
        let sum = ctx
            .from_terms([
                (vec![2, 0], Quaternion::one()),
                (vec![0, 2], Quaternion::one()),
                (vec![0, 0], q("2")),
            ])
            .unwrap();
        assert!(sum.eval(&ij).unwrap().is_zero());
        assert!(sum.is_slice_preserving());
        assert_eq!(
            sum.eval(&[Quaternion::i()]),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn eval_right_scalar_linear() {
        let ctx = ctx2();
        let p = lin(ctx, 0, &Quaternion::i())
            .star_mul(&lin(ctx, 1, &q("1 + j - k")))
            .unwrap();
        let c = q("2 - i + 3k");
        let pt = [q("1 + i - j"), q("-2 + k")];
        assert_eq!(
            p.scalar_right_mul(&c).eval(&pt).unwrap(),
            &p.eval(&pt).unwrap() * &c
        );
    }

    #[test]
    fn slice_preserving_detection() {
        let ctx = ctx2();
        assert!(ctx.zero().is_slice_preserving());
        let p = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![0, 0], -Quaternion::k()),
            ])
            .unwrap();
        assert!(!p.is_slice_preserving());
    }

    #[test]
    fn collect_and_reinsert() {
        let ctx = ctx2();
        // q1^2 q2 + q1 i + k collected by q1 -> [(0, k), (1, i), (2, q2)]
        let p = ctx
            .from_terms([
                (vec![2, 1], Quaternion::one()),
                (vec![1, 0], Quaternion::i()),
                (vec![0, 0], Quaternion::k()),
            ])
            .unwrap();
        let parts = p.collect_by_var(0).unwrap();
        let ctx1 = RingCtx::new(1);
        assert_eq!(
            parts,
            vec![
                (0, ctx1.constant(Quaternion::k())),
                (1, ctx1.constant(Quaternion::i())),
                (2, ctx1.var(0).unwrap()),
            ]
        );
        // reconstruction: P = sum q1^k * insert(P_k)
        let mut rebuilt = ctx.zero();
        for (k, part) in &parts {
            let mut shift = vec![0u32; 2];
            shift[0] = *k;
            let term = part.insert_var(0).mul_monomial(&shift).unwrap();
            rebuilt = rebuilt.add(&term).unwrap();
        }
        assert_eq!(rebuilt, p);
        // q2^3 collected by q1 -> single group at exponent 0
        let p2 = ctx.var(1).unwrap().star_pow(3);
        let parts2 = p2.collect_by_var(0).unwrap();
        assert_eq!(parts2.len(), 1);
        assert_eq!(parts2[0].0, 0);
        assert_eq!(parts2[0].1, ctx1.var(0).unwrap().star_pow(3));
        // zero polynomial -> empty
        assert!(ctx.zero().collect_by_var(1).unwrap().is_empty());
        assert_eq!(
            p.collect_by_var(5),
            Err(Error::VarOutOfRange { var: 5, nvars: 2 })
        );
    }

    #[test]
    fn display_canonical_form() {
        let ctx = ctx2();
        let p = ctx
            .from_terms([
                (vec![2, 1], q("1/2 + i")),
                (vec![0, 1], Quaternion::k()),
                (vec![0, 0], q("-1")),
            ])
            .unwrap();
        assert_eq!(p.to_string(), "q1^2*q2*(1/2 + i) + q2*k - 1");
        assert_eq!(ctx.zero().to_string(), "0");
        assert_eq!(ctx.constant(q("1 + i")).to_string(), "1 + i");
        let neg_lead = ctx.var(0).unwrap().neg().add(&ctx.one()).unwrap();
        assert_eq!(neg_lead.to_string(), "-q1 + 1");
        let const_tail = ctx.var(0).unwrap().add(&ctx.constant(q("1 + i"))).unwrap();
        assert_eq!(const_tail.to_string(), "q1 + (1 + i)");
        assert_eq!(
            ctx.monomial(vec![1, 0], q("-2j")).unwrap().to_string(),
            "-q1*2j"
        );
    }

    #[test]
    fn json_round_trip() {
        let ctx = ctx2();
        let p = ctx
            .from_terms([
                (vec![2, 1], q("1/2 + i")),
                (vec![0, 1], Quaternion::k()),
                (vec![0, 0], q("-3/7")),
            ])
            .unwrap();
        let s = p.to_json_string();
        let back = StarPoly::from_json_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_json_string(), s);
        assert!(s.starts_with("{\"nvars\":2,\"terms\":["));
    }
}
