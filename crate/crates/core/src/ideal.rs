//! Right ideals, point ideals, and bounded variety membership.
//!
//! Membership of a point in the common zero set V(I) is decidable only
//! at points with commuting components, where evaluation of G*Q factors
//! through the evaluation of G. At a general point the kernel checks the
//! family of shifted generators q^E * G (every ideal element is a sum of
//! right-scalar multiples of these), but only up to a total-degree bound
//! on E, and reports an explicitly bounded verdict rather than a
//! boolean.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::division::vanishes_on_sphere_times_point;
use crate::error::{Error, Result};
use crate::poly::{RingCtx, StarPoly};
use crate::quaternion::Quaternion;
use crate::sphere::Sphere;

/// Whether all pairs of point components commute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    Commuting,
    NonCommuting,
}

pub fn classify_point(point: &[Quaternion]) -> PointKind {
    for (i, a) in point.iter().enumerate() {
        for b in &point[i + 1..] {
            if !a.commutes(b) {
                return PointKind::NonCommuting;
            }
        }
    }
    PointKind::Commuting
}

/// The point ideal generated by q_1 - a_1, ..., q_n - a_n is maximal at
/// a commuting point and the whole ring otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealClass {
    Maximal,
    WholeRing,
}

pub fn classify_point_ideal(point: &[Quaternion]) -> IdealClass {
    match classify_point(point) {
        PointKind::Commuting => IdealClass::Maximal,
        PointKind::NonCommuting => IdealClass::WholeRing,
    }
}

/// A finitely generated right ideal: all sums of G_i * Q_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightIdeal {
    ctx: RingCtx,
    generators: Vec<StarPoly>,
}

/// Certificate that a point is outside the bounded variety check: the
/// shifted generator q^shift * G_{generator} has the stated nonzero
/// value at the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub generator: usize,
    pub shift: Vec<u32>,
    pub value: Quaternion,
}

/// Outcome of bounded variety membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Certified inside (complete at commuting points).
    In,
    /// Certified outside, with the witness.
    NotIn(Box<Witness>),
    /// All shifted generators up to the bound vanish at a non-commuting
    /// point; no finite certificate either way.
    UnknownUpToBound(u32),
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::In => write!(f, "in"),
            Verdict::NotIn(w) => {
                let shift: Vec<String> = w.shift.iter().map(u32::to_string).collect();
                write!(
                    f,
                    "not-in (generator {} shifted by ({}) evaluates to {})",
                    w.generator + 1,
                    shift.join(","),
                    w.value
                )
            }
            Verdict::UnknownUpToBound(d) => write!(f, "unknown-up-to-bound {d}"),
        }
    }
}

/// All exponent vectors of length `n` with component sum `total`, in
/// lexicographic order.
fn compositions(total: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl RightIdeal {
    /// Generators must be nonzero and share a ring.
    pub fn new(generators: Vec<StarPoly>) -> Result<Self> {
        let first = generators.first().ok_or(Error::PreconditionViolated(
            "ideal needs at least one generator",
        ))?;
        let ctx = first.ctx();
        for g in &generators {
            if g.ctx() != ctx {
                return Err(Error::RingMismatch {
                    left: ctx.nvars(),
                    right: g.nvars(),
                });
            }
            if g.is_zero() {
                return Err(Error::PreconditionViolated("zero generator"));
            }
        }
        Ok(RightIdeal { ctx, generators })
    }

    pub fn principal(g: StarPoly) -> Result<Self> {
        RightIdeal::new(vec![g])
    }

    /// The ideal of the point: generators q_k - a_k.
    pub fn point_ideal(point: &[Quaternion]) -> Self {
        assert!(!point.is_empty(), "point must have at least one component");
        let ctx = RingCtx::new(point.len());
        let generators = point
            .iter()
            .enumerate()
            .map(|(k, a)| {
                ctx.var(k)
                    .expect("in range")
                    .sub(&ctx.constant(a.clone()))
                    .expect("same ring")
            })
            .collect();
        RightIdeal { ctx, generators }
    }

    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars()
    }

    pub fn generators(&self) -> &[StarPoly] {
        &self.generators
    }

    fn check_arity(&self, point: &[Quaternion]) -> Result<()> {
        if point.len() != self.ctx.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.ctx.nvars(),
                got: point.len(),
            });
        }
        Ok(())
    }

    /// Membership of a commuting point in V(I): every generator must
    /// vanish there (necessary and sufficient, since evaluation of G*Q at
    /// a commuting point factors through the value of G).
    pub fn contains_in_vc(&self, point: &[Quaternion]) -> Result<bool> {
        self.check_arity(point)?;
        if classify_point(point) != PointKind::Commuting {
            return Err(Error::CommutingRequired);
        }
        for g in &self.generators {
            if !g.eval(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Bounded membership in V(I).
    ///
    /// An ideal element is a sum of G_i * q^E c: since q^E is central and
    /// evaluation is additive and right-scalar-linear, the point is in
    /// V(I) iff eval(q^E * G_i, point) = 0 for every generator and every
    /// shift E >= 0. Shifts are searched by total degree up to `bound`;
    /// the first nonzero value is returned as a `NotIn` witness. At a
    /// commuting point the E = 0 check is already complete.
    pub fn in_variety_bounded(&self, point: &[Quaternion], bound: u32) -> Result<Verdict> {
        self.check_arity(point)?;
        let commuting = classify_point(point) == PointKind::Commuting;
        let max_degree = if commuting { 0 } else { bound };
        for t in 0..=max_degree {
            for shift in compositions(t, self.ctx.nvars()) {
                for (gi, g) in self.generators.iter().enumerate() {
                    let value = g.mul_monomial(&shift)?.eval(point)?;
                    if !value.is_zero() {
                        return Ok(Verdict::NotIn(Box::new(Witness {
                            generator: gi,
                            shift,
                            value,
                        })));
                    }
                }
            }
        }
        if commuting {
            Ok(Verdict::In)
        } else {
            Ok(Verdict::UnknownUpToBound(bound))
        }
    }

    /// Constructive probe of the variety dichotomy at a non-commuting
    /// candidate zero (a, b): checks that every generator lies in the
    /// ideal of S_a x {b}, certifying that the whole sphere slice is
    /// contained in every generator's zero set. Each supplied conjugator
    /// additionally cross-checks the certificate at the exact sphere
    /// point c a c^-1.
    pub fn q1_symmetry_probe(
        &self,
        point: &[Quaternion],
        bound: u32,
        conjugators: &[Quaternion],
    ) -> Result<bool> {
        if self.ctx.nvars() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                got: self.ctx.nvars(),
            });
        }
        self.check_arity(point)?;
        let (a, b) = (&point[0], &point[1]);
        if a.commutes(b) {
            return Err(Error::PreconditionViolated(
                "probe point must have non-commuting components",
            ));
        }
        if let Verdict::NotIn(_) = self.in_variety_bounded(point, bound)? {
            return Err(Error::PreconditionViolated(
                "point is certified outside the variety",
            ));
        }
        let sphere = Sphere::of(a);
        for g in &self.generators {
            if !member_of_sphere_ideal(g, &sphere, b)? {
                return Ok(false);
            }
        }
        for c in conjugators {
            let sample = a.conjugate_by(c)?;
            for g in &self.generators {
                assert!(
                    g.eval(&[sample.clone(), b.clone()])?.is_zero(),
                    "sphere ideal certificate contradicted by a sampled sphere point"
                );
            }
        }
        Ok(true)
    }
}

/// Membership in the point ideal at a commuting point: P belongs iff
/// P vanishes there. A non-commuting point is rejected (membership would
/// be trivially true since the ideal is the whole ring).
pub fn member_of_point_ideal(p: &StarPoly, point: &[Quaternion]) -> Result<bool> {
    if point.len() != p.nvars() {
        return Err(Error::ArityMismatch {
            expected: p.nvars(),
            got: point.len(),
        });
    }
    if classify_point(point) != PointKind::Commuting {
        return Err(Error::NonCommutingPoint);
    }
    Ok(p.eval(point)?.is_zero())
}

/// Membership in the ideal of polynomials vanishing on S x {b}, decided
/// by the sphere-times-point normal form.
pub fn member_of_sphere_ideal(p: &StarPoly, s: &Sphere, b: &Quaternion) -> Result<bool> {
    Ok(vanishes_on_sphere_times_point(p, s, b)?.is_some())
}

/// Membership in the intersection of the point ideals of a finite set of
/// commuting points: P belongs iff it vanishes at every point.
pub fn member_of_ideal_of_finite_set(p: &StarPoly, points: &[Vec<Quaternion>]) -> Result<bool> {
    for point in points {
        if point.len() != p.nvars() {
            return Err(Error::ArityMismatch {
                expected: p.nvars(),
                got: point.len(),
            });
        }
        if classify_point(point) != PointKind::Commuting {
            return Err(Error::CommutingRequired);
        }
    }
    for point in points {
        if !p.eval(point)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

// --- JSON form: {"nvars": n, "generators": [<poly>, ...]} --------------

#[derive(Serialize, Deserialize)]
struct IdealJson {
    nvars: usize,
    generators: Vec<StarPoly>,
}

impl Serialize for RightIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson {
            nvars: self.ctx.nvars(),
            generators: self.generators.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RightIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = IdealJson::deserialize(d)?;
        for g in &dto.generators {
            if g.nvars() != dto.nvars {
                return Err(D::Error::custom("generator arity differs from nvars"));
            }
        }
        RightIdeal::new(dto.generators).map_err(D::Error::custom)
    }
}
