//! Exact computer algebra for slice regular quaternionic polynomials.
//!
//! The kernel works in the noncommutative ring (H[q1,...,qn], +, *) of
//! polynomials with right quaternion coefficients under the *-product,
//! over exact arbitrary-precision rationals. It provides:
//!
//! - quaternion arithmetic and the sphere/commutant geometry
//!   ([`quaternion`], [`sphere`]);
//! - the sparse polynomial ring with *-product, regular conjugate,
//!   symmetrization and slice-regular evaluation ([`poly`]);
//! - division by monic polynomials, factorization at zeros, and exact
//!   vanishing predicates for strips, spheres and grids ([`division`]);
//! - right ideals, point ideals, and bounded variety membership
//!   ([`ideal`]);
//! - the coefficient-conjugating anti-isomorphism onto the ring of
//!   central-variable polynomials with left coefficients ([`central`]);
//! - a text grammar for expressions ([`expr`]) and seeded sampling
//!   helpers ([`sample`]).
//!
//! All values are immutable and every operation is pure, so everything
//! here is safe to share and send between threads.

pub mod central;
pub mod division;
pub mod error;
pub mod expr;
pub mod ideal;
pub mod poly;
pub mod quaternion;
pub mod sample;
pub mod sphere;

pub use central::{phi, phi_inv, valori_check, CentralPoly};
pub use division::{
    characteristic_poly, divide_linear_1var, divide_monic, factor_at_zero,
    one_var_sphere_vanishing, spherical_propagation_check, spherical_propagation_check_default,
    strong_identity_grid_check, vanishes_on_point_times_h, vanishes_on_sphere_times_point,
    vanishes_on_strip, DivisionResult, ZeroFactorization,
};
pub use error::{Error, Result};
pub use ideal::{
    classify_point, classify_point_ideal, member_of_ideal_of_finite_set, member_of_point_ideal,
    member_of_sphere_ideal, IdealClass, PointKind, RightIdeal, Verdict, Witness,
};
pub use poly::{RingCtx, StarPoly};
pub use quaternion::{in_commutant, Quaternion, Rational};
pub use sphere::Sphere;
