//! Division and zero-point factorization.
//!
//! Division is by a polynomial monic in one chosen variable, by plain
//! degree reduction: repeatedly subtract M * q_j^{s-d} * P_s where P_s
//! is the leading q_j-coefficient of the current dividend. Quotient and
//! remainders are unique, which turns the divisibility predicates below
//! into exact decision procedures for vanishing on structured sets
//! ({a} strips, spheres crossed with a point, and the one-variable
//! spherical zeros).

use crate::error::{Error, Result};
use crate::poly::{RingCtx, StarPoly};
use crate::quaternion::Quaternion;
use crate::sphere::Sphere;

/// Result of dividing P by a polynomial monic of degree d in variable
/// `var`: P = M * quotient + sum_k q_var^k * remainders[k].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    /// Quotient, in the dividend's ring.
    pub quotient: StarPoly,
    /// d remainder coefficients, indexed 0..d-1, in the ring with `var`
    /// removed.
    pub remainders: Vec<StarPoly>,
    /// The division variable (0-based).
    pub var: usize,
}

impl DivisionResult {
    /// Re-expands M * quotient + sum_k q_var^k * remainders[k].
    pub fn reconstruct(&self, m: &StarPoly) -> StarPoly {
        let ctx = self.quotient.ctx();
        let mut acc = m.star_mul(&self.quotient).expect("same ring");
        for (k, r) in self.remainders.iter().enumerate() {
            let mut shift = vec![0u32; ctx.nvars()];
            shift[self.var] = k as u32;
            let term = r.insert_var(self.var).mul_monomial(&shift).expect("arity");
            acc = acc.add(&term).expect("same ring");
        }
        acc
    }
}

/// The leading coefficient of `p` in `var`, embedded in the same ring
/// with the `var` exponent zeroed. `None` for the zero polynomial.
fn leading_embedded(p: &StarPoly, var: usize) -> Option<(u32, StarPoly)> {
    let d = p.degree_in_var(var)?;
    let terms: Vec<_> = p
        .terms()
        .filter(|(e, _)| e[var] == d)
        .map(|(e, c)| {
            let mut exps = e.clone();
            exps[var] = 0;
            (exps, c.clone())
        })
        .collect();
    Some((d, p.ctx().from_terms(terms).expect("arity preserved")))
}

/// Divides P by M, monic of degree d >= 1 in variable `var`:
/// returns the unique quotient Q and remainders R_0..R_{d-1} free of the
/// division variable with P = M*Q + sum q_var^k * R_k.
pub fn divide_monic(p: &StarPoly, m: &StarPoly, var: usize) -> Result<DivisionResult> {
    if p.ctx() != m.ctx() {
        return Err(Error::RingMismatch {
            left: p.nvars(),
            right: m.nvars(),
        });
    }
    let nvars = p.nvars();
    if var >= nvars {
        return Err(Error::VarOutOfRange { var, nvars });
    }
    let ctx = p.ctx();
    let (d, lead) = leading_embedded(m, var).ok_or(Error::NotMonic)?;
    if d == 0 || lead != ctx.one() {
        return Err(Error::NotMonic);
    }

    let mut quotient = ctx.zero();
    let mut rem = p.clone();
    while let Some((s, lead_rem)) = leading_embedded(&rem, var) {
        if s < d {
            break;
        }
        // t = q_var^{s-d} * P_s; subtract M * t and push t onto the quotient
        let mut shift = vec![0u32; nvars];
        shift[var] = s - d;
        let t = lead_rem.mul_monomial(&shift)?;
        quotient = quotient.add(&t)?;
        rem = rem.sub(&m.star_mul(&t)?)?;
        debug_assert!(rem.degree_in_var(var).is_none_or(|s2| s2 < s));
    }

    let small = RingCtx::new(nvars - 1);
    let mut remainders = vec![small.zero(); d as usize];
    for (k, part) in rem.collect_by_var(var)? {
        remainders[k as usize] = part;
    }
    Ok(DivisionResult {
        quotient,
        remainders,
        var,
    })
}

/// One-variable division by q - a: returns (Q, c) with P = (q-a)*Q + c
/// and c = P(a), via the backward recurrence b_{k-1} = a_k + a*b_k.
pub fn divide_linear_1var(p: &StarPoly, a: &Quaternion) -> Result<(StarPoly, Quaternion)> {
    if p.nvars() != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            got: p.nvars(),
        });
    }
    let ctx = p.ctx();
    let n = match p.degree_in_var(0) {
        None => return Ok((ctx.zero(), Quaternion::zero())),
        Some(n) => n,
    };
    let coef = |k: u32| p.coefficient(&[k]);
    if n == 0 {
        return Ok((ctx.zero(), coef(0)));
    }
    let mut b = vec![Quaternion::zero(); n as usize];
    b[(n - 1) as usize] = coef(n);
    for k in (1..n).rev() {
        b[(k - 1) as usize] = &coef(k) + &(a * &b[k as usize]);
    }
    let c = &coef(0) + &(a * &b[0]);
    let q = ctx.from_terms(
        b.into_iter()
            .enumerate()
            .map(|(k, ck)| (vec![k as u32], ck)),
    )?;
    Ok((q, c))
}

/// The characteristic polynomial of a sphere in variable `var`:
/// q^2 - trace*q + normsq, a slice preserving (hence central) polynomial
/// vanishing exactly on the sphere.
pub fn characteristic_poly(s: &Sphere, ctx: RingCtx, var: usize) -> Result<StarPoly> {
    if var >= ctx.nvars() {
        return Err(Error::VarOutOfRange {
            var,
            nvars: ctx.nvars(),
        });
    }
    let mut sq = vec![0u32; ctx.nvars()];
    sq[var] = 2;
    let mut lin = vec![0u32; ctx.nvars()];
    lin[var] = 1;
    ctx.from_terms([
        (sq, Quaternion::one()),
        (lin, Quaternion::from_rational(-s.trace().clone())),
        (
            vec![0; ctx.nvars()],
            Quaternion::from_rational(s.normsq().clone()),
        ),
    ])
}

/// The factorization of P at a zero (a_1,...,a_n):
/// P = sum_k (q_k - a_k) * factors[k] with factors[k] in H[q_1..q_{k+1}].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroFactorization {
    pub point: Vec<Quaternion>,
    /// factors[k] uses only the first k+1 variables (it lives in the
    /// (k+1)-variable ring).
    pub factors: Vec<StarPoly>,
}

impl ZeroFactorization {
    /// Re-expands sum_k (q_k - a_k) * factors[k] in the n-variable ring.
    pub fn reconstruct(&self) -> StarPoly {
        let n = self.point.len();
        let ctx = RingCtx::new(n);
        let mut acc = ctx.zero();
        for (k, factor) in self.factors.iter().enumerate() {
            let lin = ctx
                .var(k)
                .expect("in range")
                .sub(&ctx.constant(self.point[k].clone()))
                .expect("same ring");
            let term = lin.star_mul(&factor.extend_vars(n)).expect("same ring");
            acc = acc.add(&term).expect("same ring");
        }
        acc
    }
}

/// Factors P at a zero by dividing by (q_n - a_n), ..., (q_2 - a_2) in
/// that order and splitting the final one-variable remainder by
/// (q_1 - a_1). The final remainder constant equals P at the point, so a
/// nonzero value reports `NotAZero` exactly when the point is not a zero.
pub fn factor_at_zero(p: &StarPoly, point: &[Quaternion]) -> Result<ZeroFactorization> {
    let n = p.nvars();
    if point.len() != n || n == 0 {
        return Err(Error::ArityMismatch {
            expected: n,
            got: point.len(),
        });
    }
    let mut factors = vec![RingCtx::new(0).zero(); n];
    let mut rem = p.clone();
    for k in (1..n).rev() {
        // rem lives in the (k+1)-variable ring; divide by q_{k+1} - a_{k+1}
        let ctx_k = rem.ctx();
        let m = ctx_k.var(k)?.sub(&ctx_k.constant(point[k].clone()))?;
        let div = divide_monic(&rem, &m, k)?;
        factors[k] = div.quotient;
        rem = div.remainders.into_iter().next().expect("degree 1");
    }
    let (q1, c) = divide_linear_1var(&rem, &point[0])?;
    if !c.is_zero() {
        return Err(Error::NotAZero { value: Box::new(c) });
    }
    factors[0] = q1;
    Ok(ZeroFactorization {
        point: point.to_vec(),
        factors,
    })
}

/// Does P vanish on H^{m-1} x {a} x (C_a)^{n-m}? True iff q_var - a
/// divides P on the left; the witness is the quotient P_var with
/// P = (q_var - a) * P_var.
///
/// For real `a` the commutant is all of H and the set is H^n with the
/// var-th coordinate pinned; the divisibility criterion is unchanged.
pub fn vanishes_on_strip(p: &StarPoly, var: usize, a: &Quaternion) -> Result<Option<StarPoly>> {
    let ctx = p.ctx();
    if var >= ctx.nvars() {
        return Err(Error::VarOutOfRange {
            var,
            nvars: ctx.nvars(),
        });
    }
    let m = ctx.var(var)?.sub(&ctx.constant(a.clone()))?;
    let div = divide_monic(p, &m, var)?;
    if div.remainders[0].is_zero() {
        Ok(Some(div.quotient))
    } else {
        Ok(None)
    }
}

/// Does a two-variable P vanish on {a} x H for non-real a? True iff
/// P = (q_1 - a) * Q with Q free of q_2; the witness is Q in H[q_1].
pub fn vanishes_on_point_times_h(p: &StarPoly, a: &Quaternion) -> Result<Option<StarPoly>> {
    if p.nvars() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: p.nvars(),
        });
    }
    if a.is_real() {
        return Err(Error::RealPointNotSupported);
    }
    let witness = match vanishes_on_strip(p, 0, a)? {
        None => return Ok(None),
        Some(w) => w,
    };
    if witness.degree_in_var(1).unwrap_or(0) != 0 {
        return Ok(None);
    }
    // drop the unused q_2 slot
    let parts = witness.collect_by_var(1)?;
    let one_var = parts
        .into_iter()
        .next()
        .map(|(_, q)| q)
        .unwrap_or_else(|| RingCtx::new(1).zero());
    Ok(Some(one_var))
}

/// Does a two-variable P vanish on S x {b}? True iff
/// P = (q_1^2 - trace q_1 + normsq) * P_1 + (q_2 - b) * P_2; the
/// witnesses (P_1 in H[q_1], P_2 in H[q_1,q_2]) are returned.
///
/// The criterion is divisibility by the characteristic polynomial. For a
/// degenerate sphere {a}, a in R, that polynomial is (q_1 - a)^2, which
/// is stricter than vanishing at the single point; use the strip
/// predicate there.
pub fn vanishes_on_sphere_times_point(
    p: &StarPoly,
    s: &Sphere,
    b: &Quaternion,
) -> Result<Option<(StarPoly, StarPoly)>> {
    if p.nvars() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: p.nvars(),
        });
    }
    let ctx = p.ctx();
    let m2 = ctx.var(1)?.sub(&ctx.constant(b.clone()))?;
    let div2 = divide_monic(p, &m2, 1)?;
    let r = div2.remainders.into_iter().next().expect("degree 1");
    let ctx1 = r.ctx();
    let delta = characteristic_poly(s, ctx1, 0)?;
    let div1 = divide_monic(&r, &delta, 0)?;
    if div1.remainders.iter().all(StarPoly::is_zero) {
        Ok(Some((div1.quotient, div2.quotient)))
    } else {
        Ok(None)
    }
}

/// Does a one-variable P vanish on the whole sphere S? True iff the
/// sphere's characteristic polynomial divides P; equivalently, iff P has
/// two distinct roots on S. On a degenerate sphere the divisor is
/// (q - a)^2, stricter than vanishing at the point a.
pub fn one_var_sphere_vanishing(p: &StarPoly, s: &Sphere) -> Result<bool> {
    if p.nvars() != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            got: p.nvars(),
        });
    }
    let delta = characteristic_poly(s, p.ctx(), 0)?;
    let div = divide_monic(p, &delta, 0)?;
    Ok(div.remainders.iter().all(StarPoly::is_zero))
}

/// Verification probe for spherical propagation: if P vanishes on
/// {a} x C_a and at (a, b) with b outside C_a, it must vanish on all of
/// {a} x S_b. Evaluates P at (a, c b c^-1) for each conjugator and
/// reports whether every sample vanished (the expected answer is always
/// true; this is a probe, not a decision procedure).
pub fn spherical_propagation_check(
    p: &StarPoly,
    a: &Quaternion,
    b: &Quaternion,
    conjugators: &[Quaternion],
) -> Result<bool> {
    if p.nvars() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: p.nvars(),
        });
    }
    if a.is_real() {
        return Err(Error::PreconditionViolated(
            "first component must be non-real",
        ));
    }
    if b.commutes(a) {
        return Err(Error::PreconditionViolated(
            "second component must lie outside the commutant of the first",
        ));
    }
    if vanishes_on_strip(p, 0, a)?.is_none() {
        return Err(Error::PreconditionViolated(
            "polynomial must vanish on {a} x C_a",
        ));
    }
    if !p.eval(&[a.clone(), b.clone()])?.is_zero() {
        return Err(Error::PreconditionViolated(
            "polynomial must vanish at (a, b)",
        ));
    }
    for c in conjugators {
        if c.is_zero() {
            return Err(Error::PreconditionViolated("zero conjugator"));
        }
        let sample = b.conjugate_by(c)?;
        if !p.eval(&[a.clone(), sample])?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`spherical_propagation_check`] with the default sampling: 16
/// conjugators from a fixed seed.
pub fn spherical_propagation_check_default(
    p: &StarPoly,
    a: &Quaternion,
    b: &Quaternion,
) -> Result<bool> {
    spherical_propagation_check(p, a, b, &crate::sample::conjugators(16, 0))
}

/// Identity-principle check with the second variable pinned: if P
/// vanishes at (u, b) for more distinct one-slice points u than its
/// q_1-degree, it vanishes on all of H x {b}. Returns whether all grid
/// evaluations vanished; on true, the divisibility conclusion is
/// asserted.
pub fn strong_identity_grid_check(
    p: &StarPoly,
    b: &Quaternion,
    grid: &[Quaternion],
) -> Result<bool> {
    if p.nvars() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: p.nvars(),
        });
    }
    if grid.is_empty() {
        return Err(Error::PreconditionViolated("empty grid"));
    }
    for (i, u) in grid.iter().enumerate() {
        for v in &grid[i + 1..] {
            if !u.commutes(v) {
                return Err(Error::PointsNotInOneSlice);
            }
            if u == v {
                return Err(Error::PreconditionViolated("grid points must be distinct"));
            }
        }
    }
    if let Some(d) = p.degree_in_var(0) {
        if grid.len() as u32 <= d {
            return Err(Error::PreconditionViolated(
                "need more grid points than the q1-degree",
            ));
        }
    }
    for u in grid {
        if !p.eval(&[u.clone(), b.clone()])?.is_zero() {
            return Ok(false);
        }
    }
    assert!(
        vanishes_on_strip(p, 1, b)?.is_some(),
        "grid vanishing must imply divisibility by q2 - b"
    );
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    fn lin(ctx: RingCtx, var: usize, a: &Quaternion) -> StarPoly {
        ctx.var(var).unwrap().sub(&ctx.constant(a.clone())).unwrap()
    }

    #[test]
    fn divide_by_square() {
        let ctx = RingCtx::new(2);
        // P = q1^2 q2 + q1, M = q1^2: quotient q2, remainders [0, 1]
        let p = ctx
            .from_terms([
                (vec![2, 1], Quaternion::one()),
                (vec![1, 0], Quaternion::one()),
            ])
            .unwrap();
        let m = ctx.monomial(vec![2, 0], Quaternion::one()).unwrap();
        let div = divide_monic(&p, &m, 0).unwrap();
        assert_eq!(div.quotient, ctx.var(1).unwrap());
        let ctx1 = RingCtx::new(1);
        assert_eq!(div.remainders, vec![ctx1.zero(), ctx1.one()]);
        assert_eq!(div.reconstruct(&m), p);
    }

    #[test]
    fn divide_linear_two_vars() {
        let ctx = RingCtx::new(2);
        // P = q1 q2 - k, M = q2 - j: quotient q1, remainder q1 j - k
        let p = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![0, 0], -Quaternion::k()),
            ])
            .unwrap();
        let m = lin(ctx, 1, &Quaternion::j());
        let div = divide_monic(&p, &m, 1).unwrap();
        assert_eq!(div.quotient, ctx.var(0).unwrap());
        let ctx1 = RingCtx::new(1);
        let expected_r = ctx1
            .from_terms([(vec![1], Quaternion::j()), (vec![0], -Quaternion::k())])
            .unwrap();
        assert_eq!(div.remainders, vec![expected_r]);
        assert_eq!(div.reconstruct(&m), p);
    }

    #[test]
    fn not_monic_rejected() {
        let ctx = RingCtx::new(2);
        let p = ctx.one();
        // leading coefficient i != 1
        let m = ctx
            .from_terms([
                (vec![1, 0], Quaternion::i()),
                (vec![0, 0], Quaternion::one()),
            ])
            .unwrap();
        assert_eq!(divide_monic(&p, &m, 0), Err(Error::NotMonic));
        // degree 0 in the division variable
        let c = ctx.constant(q("2"));
        assert_eq!(divide_monic(&p, &c, 0), Err(Error::NotMonic));
        assert_eq!(divide_monic(&p, &ctx.zero(), 0), Err(Error::NotMonic));
        // leading coefficient must be the constant 1, not a polynomial
        let m2 = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![1, 0], Quaternion::one()),
            ])
            .unwrap();
        assert_eq!(divide_monic(&p, &m2, 0), Err(Error::NotMonic));
        assert_eq!(
            divide_monic(&p, &m, 7),
            Err(Error::VarOutOfRange { var: 7, nvars: 2 })
        );
    }

    #[test]
    fn linear_1var_division() {
        let ctx = RingCtx::new(1);
        // q^2 + 1 = (q - i)*(q + i)
        let p = ctx
            .from_terms([(vec![2], Quaternion::one()), (vec![0], Quaternion::one())])
            .unwrap();
        let (quot, c) = divide_linear_1var(&p, &Quaternion::i()).unwrap();
        assert_eq!(
            quot,
            ctx.from_terms([(vec![1], Quaternion::one()), (vec![0], Quaternion::i())])
                .unwrap()
        );
        assert!(c.is_zero());
        // q - a by a
        let a = q("1 + 2i - k");
        let (quot, c) = divide_linear_1var(&lin(ctx, 0, &a), &a).unwrap();
        assert_eq!(quot, ctx.one());
        assert!(c.is_zero());
        // constants divide with zero quotient
        let (quot, c) = divide_linear_1var(&ctx.one(), &a).unwrap();
        assert!(quot.is_zero());
        assert!(c.is_one());
        let (quot, c) = divide_linear_1var(&ctx.zero(), &a).unwrap();
        assert!(quot.is_zero() && c.is_zero());
    }

    #[test]
    fn remainder_equals_evaluation() {
        let ctx = RingCtx::new(1);
        let p = ctx
            .from_terms([
                (vec![3], q("1 - j")),
                (vec![2], q("1/2")),
                (vec![1], q("i + k")),
                (vec![0], q("-2 + 3i")),
            ])
            .unwrap();
        for a in ["0", "1 + i", "2j - k", "-3/2 + i - j"] {
            let a = q(a);
            let (quot, c) = divide_linear_1var(&p, &a).unwrap();
            assert_eq!(c, p.eval(std::slice::from_ref(&a)).unwrap());
            // re-expand
            let rebuilt = lin(ctx, 0, &a)
                .star_mul(&quot)
                .unwrap()
                .add(&ctx.constant(c))
                .unwrap();
            assert_eq!(rebuilt, p);
        }
    }

    #[test]
    fn factorization_at_zero() {
        let ctx = RingCtx::new(2);
        // P = q1 q2 - k at (i, j): P = (q1 - i)*j + (q2 - j)*q1
        let p = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![0, 0], -Quaternion::k()),
            ])
            .unwrap();
        let point = [Quaternion::i(), Quaternion::j()];
        let f = factor_at_zero(&p, &point).unwrap();
        let ctx1 = RingCtx::new(1);
        assert_eq!(f.factors[0], ctx1.constant(Quaternion::j()));
        assert_eq!(f.factors[1], ctx.var(0).unwrap());
        assert_eq!(f.reconstruct(), p);
    }

    #[test]
    fn factorization_of_linear() {
        let ctx = RingCtx::new(3);
        let a = q("1 + i");
        let p = lin(ctx, 0, &a);
        let f = factor_at_zero(&p, &[a, q("j"), q("1 - k")]).unwrap();
        assert_eq!(f.factors[0], RingCtx::new(1).one());
        assert!(f.factors[1].is_zero());
        assert!(f.factors[2].is_zero());
        assert_eq!(f.reconstruct(), p);
    }

    #[test]
    fn not_a_zero_reports_value() {
        let ctx = RingCtx::new(2);
        let p = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![0, 0], -Quaternion::k()),
            ])
            .unwrap();
        // P(i, i) = i*i - k = -1 - k
        let err = factor_at_zero(&p, &[Quaternion::i(), Quaternion::i()]).unwrap_err();
        assert_eq!(
            err,
            Error::NotAZero {
                value: Box::new(q("-1 - k"))
            }
        );
    }

    #[test]
    fn strip_vanishing() {
        let ctx = RingCtx::new(2);
        let a = Quaternion::i();
        let b = Quaternion::j();
        // P = (q1 - i)*(q2 - j) vanishes on {i} x C_i
        let p = lin(ctx, 0, &a).star_mul(&lin(ctx, 1, &b)).unwrap();
        let w = vanishes_on_strip(&p, 0, &a).unwrap().unwrap();
        assert_eq!(w, lin(ctx, 1, &b));
        // Q = (q2 - i)*(q1 - j) vanishes on H x {i}
        let qq = lin(ctx, 1, &a).star_mul(&lin(ctx, 0, &b)).unwrap();
        let w2 = vanishes_on_strip(&qq, 1, &a).unwrap().unwrap();
        assert_eq!(w2, lin(ctx, 0, &b));
        assert!(vanishes_on_strip(&qq, 0, &a).unwrap().is_none());
        // q1 q2 - 1 does not vanish on {i} x C_i
        let r = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![0, 0], -Quaternion::one()),
            ])
            .unwrap();
        assert!(vanishes_on_strip(&r, 0, &a).unwrap().is_none());
        // sampled forward direction: witness vanishing means eval zero on samples
        for t in ["0", "1 - 2i", "7/2 + i"] {
            assert!(p.eval(&[a.clone(), q(t)]).unwrap().is_zero());
        }
    }

    #[test]
    fn point_times_h() {
        let ctx = RingCtx::new(2);
        let a = Quaternion::i();
        // q1^2 + 1 = (q1 - i)*(q1 + i) vanishes on {i} x H
        let p = lin(ctx, 0, &a).star_mul(&lin(ctx, 0, &q("-i"))).unwrap();
        let w = vanishes_on_point_times_h(&p, &a).unwrap().unwrap();
        let ctx1 = RingCtx::new(1);
        assert_eq!(
            w,
            ctx1.from_terms([(vec![1], Quaternion::one()), (vec![0], Quaternion::i())])
                .unwrap()
        );
        // (q1 - i)*(q2 - j) vanishes only on {i} x C_i, not {i} x H
        let narrow = lin(ctx, 0, &a)
            .star_mul(&lin(ctx, 1, &Quaternion::j()))
            .unwrap();
        assert!(vanishes_on_point_times_h(&narrow, &a).unwrap().is_none());
        assert!(vanishes_on_point_times_h(&ctx.zero(), &a)
            .unwrap()
            .is_some());
        assert_eq!(
            vanishes_on_point_times_h(&p, &q("3")),
            Err(Error::RealPointNotSupported)
        );
    }

    #[test]
    fn sphere_times_point() {
        let ctx = RingCtx::new(2);
        let s = Sphere::of(&Quaternion::i());
        let b = Quaternion::j();
        // P = (q1^2 + 1)*i + (q2 - j)*(q1 q2)
        let delta2 = characteristic_poly(&s, ctx, 0).unwrap();
        let p = delta2
            .scalar_right_mul(&Quaternion::i())
            .add(
                &lin(ctx, 1, &b)
                    .star_mul(&ctx.monomial(vec![1, 1], Quaternion::one()).unwrap())
                    .unwrap(),
            )
            .unwrap();
        let (p1, p2) = vanishes_on_sphere_times_point(&p, &s, &b).unwrap().unwrap();
        assert_eq!(p1, RingCtx::new(1).constant(Quaternion::i()));
        assert_eq!(p2, ctx.monomial(vec![1, 1], Quaternion::one()).unwrap());
        // re-expand the normal form
        let rebuilt = delta2
            .star_mul(&p1.extend_vars(2))
            .unwrap()
            .add(&lin(ctx, 1, &b).star_mul(&p2).unwrap())
            .unwrap();
        assert_eq!(rebuilt, p);
        // too low a degree
        assert!(
            vanishes_on_sphere_times_point(&lin(ctx, 0, &Quaternion::i()), &s, &b)
                .unwrap()
                .is_none()
        );
        assert!(vanishes_on_sphere_times_point(&ctx.zero(), &s, &b)
            .unwrap()
            .is_some());
    }

    #[test]
    fn one_var_sphere() {
        let ctx = RingCtx::new(1);
        let s = Sphere::of(&Quaternion::i());
        // q^2 + 1 vanishes on the unit imaginary sphere
        let delta = characteristic_poly(&s, ctx, 0).unwrap();
        assert!(one_var_sphere_vanishing(&delta, &s).unwrap());
        assert!(!one_var_sphere_vanishing(&lin(ctx, 0, &Quaternion::i()), &s).unwrap());
        let prod = delta.star_mul(&lin(ctx, 0, &Quaternion::j())).unwrap();
        assert!(one_var_sphere_vanishing(&prod, &s).unwrap());
    }

    #[test]
    fn degenerate_sphere_needs_a_double_root() {
        let ctx = RingCtx::new(1);
        let two = q("2");
        let deg = Sphere::of(&two);
        let lin2 = lin(ctx, 0, &two);
        // a simple root at 2 is not enough
        assert!(!one_var_sphere_vanishing(&lin2, &deg).unwrap());
        let square = lin2.star_mul(&lin2).unwrap();
        assert!(one_var_sphere_vanishing(&square, &deg).unwrap());
    }

    #[test]
    fn spherical_propagation() {
        let ctx = RingCtx::new(2);
        let a = Quaternion::i();
        let b = Quaternion::j();
        // P = (q1 - i)*(q2^2 + 1)
        let q2sq = ctx
            .from_terms([
                (vec![0, 2], Quaternion::one()),
                (vec![0, 0], Quaternion::one()),
            ])
            .unwrap();
        let p = lin(ctx, 0, &a).star_mul(&q2sq).unwrap();
        let cs: Vec<Quaternion> = ["1 + i", "2 - j", "1 + i + j + k", "3 - k"]
            .iter()
            .map(|s| q(s))
            .collect();
        assert!(spherical_propagation_check(&p, &a, &b, &cs).unwrap());
        assert!(spherical_propagation_check_default(&p, &a, &b).unwrap());
        // precondition: b inside C_a
        assert_eq!(
            spherical_propagation_check(&p, &a, &q("1 + i"), &cs),
            Err(Error::PreconditionViolated(
                "second component must lie outside the commutant of the first"
            ))
        );
        // precondition: no strip vanishing
        let bad = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![0, 0], -Quaternion::one()),
            ])
            .unwrap();
        assert!(matches!(
            spherical_propagation_check(&bad, &a, &b, &cs),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn identity_grid() {
        let ctx = RingCtx::new(2);
        let b = Quaternion::j();
        // P = (q2 - j)*(q1^2 + 1), grid {0, 1, 2} in R
        let q1sq = ctx
            .from_terms([
                (vec![2, 0], Quaternion::one()),
                (vec![0, 0], Quaternion::one()),
            ])
            .unwrap();
        let p = lin(ctx, 1, &b).star_mul(&q1sq).unwrap();
        let grid: Vec<Quaternion> = ["0", "1", "2"].iter().map(|s| q(s)).collect();
        assert!(strong_identity_grid_check(&p, &b, &grid).unwrap());
        // a nonvanishing polynomial
        let p2 = ctx.var(0).unwrap();
        let grid2: Vec<Quaternion> = ["1", "2"].iter().map(|s| q(s)).collect();
        assert!(!strong_identity_grid_check(&p2, &b, &grid2).unwrap());
        assert!(strong_identity_grid_check(&ctx.zero(), &b, &grid).unwrap());
        // mixed slices rejected
        let mixed: Vec<Quaternion> = ["i", "j", "1"].iter().map(|s| q(s)).collect();
        assert_eq!(
            strong_identity_grid_check(&p, &b, &mixed),
            Err(Error::PointsNotInOneSlice)
        );
        // too few points for the degree
        let short: Vec<Quaternion> = ["0", "1"].iter().map(|s| q(s)).collect();
        assert!(matches!(
            strong_identity_grid_check(&p, &b, &short),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
